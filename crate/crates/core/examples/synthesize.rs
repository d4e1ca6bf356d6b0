//! Rewrite square-root expressions using only field operations and
//! `hyp(a) = sqrt(1+a^2)`, the one new operation origami folds supply.
//!
//! Each radicand is written as a sum of squares in its tower field, and the
//! square root of `r1^2 + r2^2 + ...` becomes `r1*hyp(r2/r1*hyp(...))`.
//! Results are checked against the input by exact comparison.
//!
//! ```text
//! cargo run --example synthesize -- "sqrt(4+2*sqrt(2))"
//! ```

use origami::expression::{parse, sos_decompose, sos_decompose_rational, synthesize, SynthesisOptions};
use origami::numeric::int;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SynthesisOptions::default();
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["sqrt(2)", "sqrt(3)", "sqrt(4+2*sqrt(2))", "sqrt(5)", "sqrt(7)", "sqrt(2+sqrt(2))", "sqrt(1+sqrt(2))"]
            .map(String::from)
            .to_vec();
    }
    for text in &inputs {
        let e = parse(text)?;
        match synthesize(&e, &opts) {
            Ok(out) => {
                let same = out.evaluate()? == e.evaluate()?;
                println!("{text:<20} = {out:<28} exact: {same}");
            }
            Err(err) => println!("{text:<20}   {err}"),
        }
    }

    println!();
    let sos = sos_decompose(&parse("4+2*sqrt(2)")?, &opts)?;
    let parts: Vec<String> = sos.parts.iter().map(|p| format!("({p})^2")).collect();
    println!("{} = {}", sos.target, parts.join(" + "));
    println!("7 = sum of squares of {:?}", sos_decompose_rational(&int(7))?.iter().map(|r| r.to_string()).collect::<Vec<_>>());
    Ok(())
}
