//! Left row reduction to semi-reduced form with elementary units of `M`.

use skewcode::field::GaloisField;
use skewcode::matring::{semi_reduce, xi_inv, MMatrix};
use skewcode::skew::RingContext;

fn main() -> skewcode::Result<()> {
    let ctx = RingContext::new(&GaloisField::with_order(5)?, 4)?;
    let m = MMatrix::parse_text(&ctx, "2+t, 1, 4, 4\n0, 1, 3, 0\n4t, 2t, 1+t, 1\n0, 0, 0, 0")?;
    println!("M =\n{}D(M) =\n{}", m.to_text(), m.degree_matrix().to_text());
    println!("g = ξ^-1(M) = {}", xi_inv(&m)?);

    let r = semi_reduce(&m);
    for u in &r.factors {
        println!("apply {u:?}");
    }
    println!("U =\n{}", r.unit.to_text());
    println!("U·M =\n{}D(U·M) =\n{}", r.reduced.to_text(), r.reduced.degree_matrix().to_text());
    println!("semi-reduced generator {}", xi_inv(&r.reduced)?);
    Ok(())
}
