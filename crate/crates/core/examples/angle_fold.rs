//! Folding the bisector of angle `bac` onto the opposite side.
//!
//! The fold point on `bc` involves `hyp(cot A)`, so rational triangles
//! usually give irrational points. The same point is reached with the
//! equidistant-line axiom followed by an intersection.

use origami::plane::{angle_fold_point, equidistant_lines, intersect, line_through, Point};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (a, b, c) = (Point::ints(0, 0), Point::ints(4, 0), Point::ints(1, 2));
    let d = angle_fold_point(&a, &b, &c)?;
    println!("fold point on bc: {d}");
    println!("  ~ ({:.9}, {:.9})", d.x.approx(), d.y.approx());

    let bc = line_through(&b, &c)?;
    for bisector in equidistant_lines(&line_through(&a, &b)?, &line_through(&a, &c)?)? {
        // the internal bisector is the one meeting bc between b and c
        if let Some(q) = intersect(&bisector, &bc) {
            let inside = (q.x.sub(&b.x)).mul(&q.x.sub(&c.x)).sign() <= 0 && (q.y.sub(&b.y)).mul(&q.y.sub(&c.y)).sign() <= 0;
            println!("bisector through a, internal {inside}: meets bc at the fold point {}", q == d);
        }
    }
    Ok(())
}
