//! The modified rook problem: put residues into distinct rows and columns
//! of the circulant `(b − a) mod n`.

use skewcode::construct::rook::{rook_solve, sweep, RookInstance, RookStrategy};

fn main() -> skewcode::Result<()> {
    for (n, values) in [(4, vec![3, 3, 0]), (5, vec![1, 2, 3, 4]), (6, vec![2, 2, 2, 5, 5]), (7, vec![0, 1, 3])] {
        let inst = RookInstance::new(n, values.clone())?;
        let sol = rook_solve(&inst, RookStrategy::Auto)?;
        println!("n={n} r={values:?}: {:?}", sol.pairs);
    }
    match rook_solve(&RookInstance::new(6, vec![0, 0, 1, 2, 2])?, RookStrategy::Constructive) {
        Ok(sol) => println!("constructive: {:?}", sol.pairs),
        Err(e) => println!("constructive: {e}"),
    }
    for n in 2..=8 {
        let report = sweep(n)?;
        println!("n={n}: {} instances, {} unsolvable", report.instances, report.unsolvable.len());
    }
    Ok(())
}
