//! Folds the point (1/5, 0) from the two seed points and prints the trace.
//!
//! The construction halves the unit segment twice to reach 1/4 and 1/8 on
//! the y axis, builds the corner (1, 0), and then draws a parallel to the
//! line from (0, 5/8) to (1, 0) through (0, 1/8). That parallel meets the
//! x axis at 1/5.
//!
//! ```text
//! cargo run --example one_fifth                  # print the trace
//! cargo run --example one_fifth -- out.trace     # also write it to a file
//! ```

use origami::numeric::{int, rat};
use origami::plane::{Construction, Point, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut c = Construction::seeded();
    let y_axis = c.line_through(0, 1)?;
    let half = c.perp_bisector(0, 1)?;
    let p_half = c.intersect(y_axis, half)?;
    let quarter = c.perp_bisector(0, p_half)?;
    let p_quarter = c.intersect(y_axis, quarter)?;
    let x_axis = c.mirror(half, quarter)?;
    let top = c.mirror(x_axis, half)?;
    // the bisector y = x, not y = -x
    let diagonal = c.equidistant_where(y_axis, x_axis, |l| l.b == Scalar::int(-1))?;
    let corner = c.intersect(diagonal, top)?;
    let anti = c.perp_bisector(0, corner)?;
    let p_one = c.intersect(anti, x_axis)?;
    let five_eighths = c.perp_bisector(p_quarter, 1)?;
    let p_five = c.intersect(y_axis, five_eighths)?;
    let eighth = c.perp_bisector(0, p_quarter)?;
    let p_eighth = c.intersect(y_axis, eighth)?;
    let slant = c.line_through(p_five, p_one)?;
    let parallel = c.parallel(slant, p_eighth, p_five, p_one)?;
    let fifth = c.intersect(parallel, x_axis)?;

    let target = Point::rational(rat(1, 5), int(0));
    assert_eq!(c.point(fifth), Some(&target));

    let trace = c.into_trace();
    let text = format!("# (1/5, 0) from the seeds (0, 0) and (0, 1)\n{trace}");
    print!("{text}");

    // replay from text: every step is recomputed and compared exactly
    let cfg = origami::plane::Trace::parse(&text)?.replay()?;
    assert!(cfg.contains_point(&target));
    eprintln!("{} steps, replay verified", trace.steps.len());

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, &text)?;
        eprintln!("wrote {path}");
    }
    Ok(())
}
