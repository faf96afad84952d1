//! Skew-cyclic codes with any requested Forney indices.

use skewcode::construct::construct_code_with;
use skewcode::construct::rook::RookStrategy;
use skewcode::field::GaloisField;
use skewcode::skew::RingContext;

fn main() -> skewcode::Result<()> {
    let ctx = RingContext::new(&GaloisField::with_order(5)?, 4)?;
    let c = construct_code_with(&ctx, &[4, 3, 3], RookStrategy::Auto)?;
    println!("rook placement {:?}", c.placement.pairs);
    println!("degree spec {:?}", c.spec);
    println!("generator matrix\n{}", c.generator_matrix.to_text());
    println!("encoder\n{}", c.code.encoder().to_text('z'));
    println!("forney {:?}", c.code.forney_indices());

    let ctx = RingContext::new(&GaloisField::with_order(8)?, 7)?;
    for nus in [vec![0, 7, 14], vec![1, 1, 2, 5], vec![3; 6]] {
        let c = construct_code_with(&ctx, &nus, RookStrategy::Auto)?;
        println!("F_8, n = 7, asked {nus:?}: got {:?}", c.code.forney_indices());
    }
    Ok(())
}
