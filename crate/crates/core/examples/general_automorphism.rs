//! A code for the automorphism (1 2 3)(4 5 6 7) over F_8, assembled from one
//! generator per cycle.

use skewcode::codes::{encoder_from_generator, free_distance, DistanceOptions};
use skewcode::construct::construct_general;
use skewcode::field::GaloisField;
use skewcode::matring::MMatrix;
use skewcode::skew::RingContext;

fn main() -> skewcode::Result<()> {
    let f = GaloisField::with_order(8)?;
    let a = |k: i64| f.alpha_pow(k);
    let ctx = RingContext::with_sigma(&f, &[2, 3, 1, 5, 6, 7, 4])?;
    println!("cycles: {:?}", ctx.cycles());

    let m1 = MMatrix::parse_text(&RingContext::new(&f, 3)?, &format!("0, 0, 0\n0, 1, {}\n0, 0, 0", a(4)))?;
    let m2 =
        MMatrix::parse_text(&RingContext::new(&f, 4)?, &format!("{}, 1, {}, 0\n0, 0, 0, 0\n0, 0, {}, 1\n0, 0, 0, 0", a(6), a(1), a(3)))?;
    println!("M1 basic member: {}, M2 basic member: {}", m1.is_basic_member(), m2.is_basic_member());

    let g = construct_general(&ctx, &[m1, m2])?;
    println!("g = {g}");
    println!("support {:?}, semi-reduced {}", g.support(), g.is_semi_reduced());

    let code = encoder_from_generator(&g)?;
    println!("encoder:\n{}", code.encoder().to_text('z'));
    println!("forney indices (sorted): {:?}", code.forney_indices());
    let start = std::time::Instant::now();
    let d = free_distance(&code, DistanceOptions::default())?;
    println!("free distance {d} ({:.2?})", start.elapsed());
    Ok(())
}
