//! Annihilating polynomials from companion matrices.
//!
//! If `p(a) = 0` and `q(b) = 0`, the characteristic polynomial of
//! `C_p (x) I + I (x) C_q` vanishes at `a+b`, and that of `C_p (x) C_q` at
//! `a*b`. Negation, inversion and `hyp` are substitutions.

use origami::annihilator::{annihilator_hyp, annihilator_inv, annihilator_neg, annihilator_product, annihilator_sum, char_poly, companion};
use origami::poly::Polynomial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: Polynomial = "x^2-2".parse()?;
    let q: Polynomial = "x^2-3".parse()?;
    let c = companion(&p)?;
    println!("companion of {p}: {c:?}");
    println!("char poly back: {}", char_poly(&c));
    println!("-a       : {}", annihilator_neg(&"x^3-2".parse()?)?);
    println!("1/a      : {}", annihilator_inv(&"x^2-x-1".parse()?)?);
    println!("hyp(a)   : {}", annihilator_hyp(&p)?);
    println!("a+b      : {}", annihilator_sum(&p, &q)?);
    println!("a*b      : {}", annihilator_product(&p, &q)?);
    // not necessarily irreducible: sqrt(2)+sqrt(2) is a root of x^4-8x^2
    println!("a+a      : {}", annihilator_sum(&p, &p)?);
    Ok(())
}
