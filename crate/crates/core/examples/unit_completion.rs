//! Completing the nonzero rows of a delay-free matrix to a unit of `M`,
//! which succeeds exactly for basic row sets.

use skewcode::field::GaloisField;
use skewcode::matring::{complete_to_unit, MMatrix};
use skewcode::skew::RingContext;

fn main() -> skewcode::Result<()> {
    let ctx = RingContext::new(&GaloisField::with_order(5)?, 4)?;
    let m = MMatrix::parse_text(&ctx, "2, 1, 0, 0\n0, 1, 3, 0\n4t, 0, 1, 1\n0, 0, 0, 0")?;
    println!("basic member: {}", m.is_basic_member());
    let u = complete_to_unit(&m)?;
    println!("completion =\n{}det = {}", u.to_text(), u.matrix().det()?.display('t'));

    let cases = [
        "t, t^2, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0",
        "1+t, 1+t, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0",
        "t, 1, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0",
    ];
    for text in cases {
        let m = MMatrix::parse_text(&ctx, text)?;
        match complete_to_unit(&m) {
            Ok(u) => println!("completed:\n{}", u.to_text()),
            Err(e) => println!("{}: {e}", text.lines().next().unwrap_or_default()),
        }
    }
    Ok(())
}
