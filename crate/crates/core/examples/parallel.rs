//! Folding a parallel: through a point off a line, using two anchor points
//! on the line, in nine axiom steps.

use origami::numeric::{int, rat};
use origami::plane::{construct_parallel, Line, Point};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = Line::rational(int(1), rat(8, 5), int(-1))?;
    let p = Point::rational(int(0), rat(1, 8));
    let (p1, p2) = (Point::rational(int(0), rat(5, 8)), Point::ints(1, 0));
    let (parallel, steps) = construct_parallel(&l, &p, &p1, &p2)?;
    println!("# objects 0..3 are L = {l}, p = {p}, p1 = {p1}, p2 = {p2}");
    for s in &steps {
        println!("{s}");
    }
    println!("parallel: {parallel}  (same direction: {}, through p: {})", parallel.is_parallel(&l), parallel.contains(&p));

    // irrational coordinates work the same way
    let l = Line::new("1".parse()?, "hyp(1)".parse()?, "-1".parse()?)?;
    let p = Point::ints(1, 1);
    let anchors = (Point::ints(1, 0), Point::new("0".parse()?, "1/hyp(1)".parse()?));
    let (parallel, _) = construct_parallel(&l, &p, &anchors.0, &anchors.1)?;
    println!("parallel to {l} through {p}: {parallel}");
    Ok(())
}
