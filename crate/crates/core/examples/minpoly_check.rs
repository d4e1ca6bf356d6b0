//! Which polynomials have an origami root at all?
//!
//! A root can only be an origami number if every conjugate is real, so it is
//! enough to factor the polynomial and count real roots of each factor.
//! `x^3-2` (doubling the cube) fails: one real root and a complex pair.

use origami::algebraic::{AlgebraicNumber, Limits};
use origami::numeric::{rat, to_f64};
use origami::poly::{factor_rational, Polynomial, DEFAULT_MAX_DEGREE};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limits = Limits::default();
    let width = rat(1, 10_000_000);
    for text in ["x^3-2", "x^4-8x^2+8", "x^4-2x^2-1", "x^3-3x+1", "x^4-x^2-2"] {
        let p: Polynomial = text.parse()?;
        println!("{text}");
        for (f, mult) in factor_rational(&p, DEFAULT_MAX_DEGREE)?.factors {
            let roots = AlgebraicNumber::real_roots(&f, &limits)?;
            let pairs = (f.deg() - roots.len()) / 2;
            let shown: Vec<String> = roots.iter().map(|r| format!("{:.6}", to_f64(r.to_decimal(&width).lo()))).collect();
            println!(
                "  {f} (x{mult}): {} real [{}], {pairs} complex pairs, totally real {}",
                roots.len(),
                shown.join(", "),
                pairs == 0
            );
        }
    }
    Ok(())
}
