//! Decide origami constructibility of radical expressions.
//!
//! ```text
//! cargo run --example decide
//! cargo run --example decide -- "sqrt(3+sqrt(5))" "2^(1/3)"
//! ```
//!
//! An expression is origami exactly when its value is totally real and it
//! lives in a square-root tower; the verdict carries the minimal polynomial
//! and the conjugate profile that witnesses it.

use origami::algebraic::Limits;
use origami::expression::{decide_origami, parse};

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = [
            "sqrt(2+sqrt(2))",
            "sqrt(4+2*sqrt(2))",
            "sqrt(1+sqrt(2))",
            "sqrt((sqrt(2+sqrt(2)))^2 - 1)",
            "hyp(1+hyp(1/2))",
            "(1+sqrt(5))/2",
        ]
        .map(String::from)
        .to_vec();
    }
    let limits = Limits::default();
    for text in &inputs {
        let verdict = match parse(text).map_err(|e| e.to_string()).and_then(|e| decide_origami(&e, &limits).map_err(|e| e.to_string())) {
            Ok(v) => v,
            Err(e) => {
                println!("{text:<32} error: {e}");
                continue;
            }
        };
        let profile = verdict
            .witness
            .as_ref()
            .map(|w| format!("{} real, {} complex pairs", w.real_count, w.complex_pair_count))
            .unwrap_or_default();
        let minpoly = verdict.value.as_ref().map(|v| v.minpoly().to_string()).unwrap_or_default();
        println!("{text:<32} {:<5} {:<22} {minpoly}  ({profile})", verdict.is_origami, verdict.reason.to_string());
    }
}
