//! The isomorphism `ξ` from `A[z; σ]` onto the ring `M` of polynomial
//! matrices whose entries below the diagonal vanish at `t = 0`.

use skewcode::field::GaloisField;
use skewcode::matring::{xi, xi_inv};
use skewcode::skew::{RingContext, SkewPoly};

fn main() -> skewcode::Result<()> {
    let ctx = RingContext::new(&GaloisField::with_order(5)?, 4)?;
    for k in [1, 4, 6] {
        println!("ξ(z^{k}) =\n{}", xi(&SkewPoly::z_power(&ctx, k))?.to_text());
    }

    let f = SkewPoly::parse(&ctx, "[1,0,2,0] + z*[0,3,0,1]")?;
    let g = SkewPoly::parse(&ctx, "[4,4,0,1] + z^3*[1,1,1,1]")?;
    let (xf, xg) = (xi(&f)?, xi(&g)?);
    println!("ξ(f·g) = ξ(f)·ξ(g): {}", xi(&(&f * &g))? == &xf * &xg);
    let m = xi(&g)?;
    println!("ξ(g) =\n{}degree matrix\n{}", m.to_text(), m.degree_matrix().to_text());
    println!("ξ^-1(ξ(g)) = {}", xi_inv(&m)?);
    Ok(())
}
