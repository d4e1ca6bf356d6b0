//! Everything one or two folding generations reach from (0,0) and (0,1),
//! and a breadth-first search for a target point.
//!
//! ```text
//! cargo run --release --example closure -- 1/8 0
//! ```

use origami::expression::parse;
use origami::plane::{bfs_closure, Object, Point, Scalar, DEFAULT_BUDGET};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for depth in 1..=2 {
        let c = bfs_closure(depth, None, DEFAULT_BUDGET)?;
        let cfg = c.configuration();
        println!("depth {depth}: {} points, {} lines", cfg.points().count(), cfg.lines().count());
        if depth == 1 {
            for (id, o) in c.objects().iter().enumerate() {
                let kind = if matches!(o, Object::Point(_)) { "point" } else { "line" };
                println!("  {id} {kind} {o}");
            }
        }
    }

    let args: Vec<String> = std::env::args().skip(1).collect();
    let (x, y) = match args.as_slice() {
        [x, y] => (x.as_str(), y.as_str()),
        _ => ("0", "3/4"),
    };
    let target = Point::new(Scalar::from_expression(parse(x)?)?, Scalar::from_expression(parse(y)?)?);
    let c = bfs_closure(3, Some(&target), DEFAULT_BUDGET)?;
    match c.found_trace() {
        Some(trace) => print!("found {target}:\n{trace}"),
        None => println!("{target} not reached in 3 generations"),
    }
    Ok(())
}
