//! Draw the 1/5 construction as an SVG picture.
//!
//! ```text
//! cargo run --example render_svg -- one-fifth.svg
//! ```

use origami::plane::{render_svg, Trace, Viewport};

const TRACE: &str = include_str!("../fixtures/one-fifth.trace");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = Trace::parse(TRACE)?.replay()?;
    let svg = render_svg(&cfg, &Viewport::fit(&cfg), 600);
    let path = std::env::args().nth(1).unwrap_or_else(|| "one-fifth.svg".into());
    std::fs::write(&path, &svg)?;
    println!("wrote {path}: {} lines, {} points", cfg.lines().count(), cfg.points().count());
    Ok(())
}
