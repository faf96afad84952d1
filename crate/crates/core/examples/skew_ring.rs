//! The skew polynomial ring `A[z; σ]` with `A = F^n`: twisted products,
//! components `e_a·g`, and the identification with `F[x]/(x^n − 1)`.

use skewcode::field::GaloisField;
use skewcode::skew::{idempotent_poly, RingContext, SkewPoly};

fn main() -> skewcode::Result<()> {
    let f = GaloisField::with_order(5)?;
    let ctx = RingContext::new(&f, 4)?;
    let z = SkewPoly::z_power(&ctx, 1);
    let a = SkewPoly::constant(&ctx, vec![1, 2, 3, 4])?;
    println!("a·z = {}", &a * &z);
    println!("z·a = {}", &z * &a);

    let g = SkewPoly::parse(&ctx, "[2,1,1,0] + z*[0,1,3,1] + z^2*[4,0,0,1] + z^3*[0,2,0,4]")?;
    println!("g = {g}");
    for (a, c) in g.components().iter().enumerate() {
        println!("  e_{}·g = {c}", a + 1);
    }
    println!("delay-free {}, semi-reduced {}", g.is_delay_free(), g.is_semi_reduced());

    for a in 1..=4 {
        println!("e_{a} in F[x]/(x^4 - 1): {}", idempotent_poly(&ctx, a)?.display('x'));
    }
    let rows = g.component(1)?.p_inverse()?;
    println!("p^-1(e_1·g) = [{}]", rows.iter().map(|p| p.display('z')).collect::<Vec<_>>().join(", "));
    Ok(())
}
