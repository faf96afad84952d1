//! Arithmetic in small extension fields and the roots of unity used to
//! split `F[x]/(x^n − 1)`.

use skewcode::field::GaloisField;

fn main() -> skewcode::Result<()> {
    for q in [4u64, 8, 9, 25] {
        let f = GaloisField::with_order(q)?;
        let a = f.primitive();
        println!(
            "F_{q}: p = {}, m = {}, modulus {:?}, primitive {a} of order {}",
            f.characteristic(),
            f.degree(),
            f.modulus(),
            f.multiplicative_order(a)?
        );
    }

    let f = GaloisField::with_order(8)?;
    let (x, y) = (f.alpha_pow(3), f.alpha_pow(5));
    println!("α^3 = {x}, α^5 = {y}, sum {}, product {} = α", f.add(x, y), f.mul(x, y));
    println!("inverse of α^3 is {} = α^4", f.inv(x)?);

    let f = GaloisField::with_order(5)?;
    for n in [2u64, 4] {
        println!("F_5 has ω = {} of order {n}", f.root_of_unity(n)?);
    }
    if let Err(e) = f.root_of_unity(3) {
        println!("n = 3: {e}");
    }
    Ok(())
}
