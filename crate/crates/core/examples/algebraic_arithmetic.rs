//! Exact arithmetic on real algebraic numbers, each stored as a minimal
//! polynomial plus an isolating interval.

use origami::algebraic::{AlgebraicNumber, Limits};
use origami::numeric::{parse_decimal, rat, to_decimal_string};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limits = Limits::default();
    let two = AlgebraicNumber::from_int(2);
    let r2 = two.sqrt(&limits)?;
    let r3 = AlgebraicNumber::from_int(3).sqrt(&limits)?;
    let sum = r2.add(&r3)?;
    println!("sqrt2          = {r2}");
    println!("sqrt2 + sqrt3  = {sum}");
    println!("(sqrt2+sqrt3)^2 = {}", sum.mul(&sum)?);
    println!("sqrt2 * sqrt2  = {}", r2.mul(&r2)?);
    println!("hyp(sqrt2)     = {}", r2.hyp(&limits)?);
    println!("1/(1+sqrt2)    = {}", AlgebraicNumber::one().add(&r2)?.inv()?);
    println!("sqrt2 < 3/2: {}", r2 < AlgebraicNumber::from_rational(rat(3, 2)));

    let cube = AlgebraicNumber::real_roots(&"x^3-2".parse()?, &limits)?.remove(0);
    let profile = cube.conjugate_profile();
    println!("cbrt2 = {cube}: {} real conjugates, {} complex pairs", profile.real_count, profile.complex_pair_count);
    let width = parse_decimal("1e-30")?;
    let w = cube.to_decimal(&width);
    println!("cbrt2 in [{}, {}]", to_decimal_string(w.lo(), 30, false), to_decimal_string(w.hi(), 30, true));
    Ok(())
}
