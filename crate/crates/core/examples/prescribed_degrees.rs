//! Basic `(n−1) × n` matrices with prescribed row degrees and pivot columns.

use skewcode::construct::{prescribed_degree_matrix, DegreeSpec};
use skewcode::field::GaloisField;

fn main() -> skewcode::Result<()> {
    let f = GaloisField::with_order(5)?;
    for (n, js, ds) in [(4, vec![4, 1, 3], vec![0, 1, 1]), (5, vec![3, 1, 5, 2], vec![2, 1, 0, 3]), (3, vec![1, 2], vec![2, 2])] {
        let spec = DegreeSpec::new(n, js, ds)?;
        let m = prescribed_degree_matrix(&f, &spec)?;
        println!("{spec:?}\n{}", m.to_text('t'));
        println!("violations {:?}, row degrees {:?}\n", spec.violations(&m), m.row_degrees());
    }
    if let Err(e) = DegreeSpec::new(3, vec![2, 1], vec![0, 0]) {
        println!("{e}");
    }
    Ok(())
}
