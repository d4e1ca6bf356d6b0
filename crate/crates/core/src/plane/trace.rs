// Construction traces. Objects are numbered in creation order; the seeds
// (0,0) and (0,1) are objects 0 and 1. One step per line:
//
//   <id> <axiom> <operand ids> -> <literal>
//
// with point literals "(x, y)" and line literals "[a, b, c]" whose entries
// use the expression grammar. Blank lines and '#' comments are ignored.

use std::fmt;
use std::str::FromStr;

use super::{equidistant_lines, intersect, line_through, perp_bisector, reflect_line, Line, PlaneError, Point, Scalar};
use crate::expression::parse;

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)] // both variants are big; boxing buys nothing
pub enum Object {
    Point(Point),
    Line(Line),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Point(p) => write!(f, "{p}"),
            Object::Line(l) => write!(f, "{l}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    LineThrough,
    PerpBisector,
    Equidistant,
    /// Operands: the line to reflect, then the mirror.
    Mirror,
    Intersect,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::LineThrough, Axiom::PerpBisector, Axiom::Equidistant, Axiom::Mirror, Axiom::Intersect];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::LineThrough => "line-through",
            Axiom::PerpBisector => "perp-bisector",
            Axiom::Equidistant => "equidistant",
            Axiom::Mirror => "mirror",
            Axiom::Intersect => "intersect",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Axiom::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| format!("unknown axiom '{s}'"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub id: usize,
    pub axiom: Axiom,
    pub operands: Vec<usize>,
    pub object: Object,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.id, self.axiom)?;
        for o in &self.operands {
            write!(f, " {o}")?;
        }
        write!(f, " -> {}", self.object)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<Step>,
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl Trace {
    pub fn parse(text: &str) -> Result<Trace, PlaneError> {
        let mut steps = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            steps.push(parse_step(line).map_err(|message| PlaneError::MalformedTrace { line: n + 1, message })?);
        }
        Ok(Trace { steps })
    }

    /// Recomputes every step from the seeds and checks it against the
    /// recorded object exactly.
    pub fn replay(&self) -> Result<Configuration, PlaneError> {
        let mut c = Construction::seeded();
        for (n, step) in self.steps.iter().enumerate() {
            if step.id != c.objects.len() {
                return Err(PlaneError::MalformedTrace {
                    line: n + 1,
                    message: format!("expected id {}, found {}", c.objects.len(), step.id),
                });
            }
            if let Some(&bad) = step.operands.iter().find(|&&o| o >= step.id) {
                return Err(PlaneError::MalformedTrace { line: n + 1, message: format!("operand {bad} is not yet defined") });
            }
            let fail = |message: String| PlaneError::StepVerificationFailed { id: step.id, message };
            let candidates = c.apply(step.axiom, &step.operands).map_err(|e| fail(e.to_string()))?;
            if !candidates.contains(&step.object) {
                let got: Vec<String> = candidates.iter().map(|o| o.to_string()).collect();
                return Err(fail(format!("recorded {} but the axiom gives {}", step.object, got.join(" or "))));
            }
            c.push(step.axiom, step.operands.clone(), step.object.clone());
        }
        Ok(c.configuration())
    }
}

impl FromStr for Trace {
    type Err = PlaneError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Trace::parse(s)
    }
}

fn parse_step(line: &str) -> Result<Step, String> {
    let (lhs, rhs) = line.split_once("->").ok_or("missing '->'")?;
    let mut words = lhs.split_whitespace();
    let id = words.next().ok_or("missing id")?.parse::<usize>().map_err(|e| format!("bad id: {e}"))?;
    let axiom: Axiom = words.next().ok_or("missing axiom")?.parse()?;
    let operands = words
        .map(|w| w.parse::<usize>().map_err(|e| format!("bad operand '{w}': {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if operands.len() != 2 {
        return Err(format!("{axiom} takes 2 operands"));
    }
    let object = parse_object(rhs.trim())?;
    Ok(Step { id, axiom, operands, object })
}

fn parse_object(text: &str) -> Result<Object, String> {
    let (open, close) = match text.chars().next() {
        Some('(') => ('(', ')'),
        Some('[') => ('[', ']'),
        _ => return Err(format!("expected a point or line literal, found '{text}'")),
    };
    let inner = text.strip_prefix(open).and_then(|t| t.strip_suffix(close)).ok_or("unbalanced literal")?;
    let parts = inner
        .split(',')
        .map(|p| parse(p.trim()).map_err(|e| e.to_string()).and_then(|e| Scalar::from_expression(e).map_err(|e| e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    match (open, parts.as_slice()) {
        ('(', [x, y]) => Ok(Object::Point(Point::new(x.clone(), y.clone()))),
        ('[', [a, b, c]) => Line::new(a.clone(), b.clone(), c.clone()).map(Object::Line).map_err(|e| e.to_string()),
        _ => Err(format!("wrong number of coordinates in '{text}'")),
    }
}

/// The objects produced so far.
#[derive(Clone, Debug, Default)]
pub struct Configuration {
    pub objects: Vec<Object>,
}

impl Configuration {
    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.objects.iter().filter_map(|o| match o {
            Object::Point(p) => Some(p),
            _ => None,
        })
    }

    pub fn lines(&self) -> impl Iterator<Item = &Line> {
        self.objects.iter().filter_map(|o| match o {
            Object::Line(l) => Some(l),
            _ => None,
        })
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.points().any(|q| q == p)
    }

    pub fn contains_line(&self, l: &Line) -> bool {
        self.lines().any(|m| m == l)
    }
}

/// An append-only construction that records how each object was made.
#[derive(Clone, Debug)]
pub struct Construction {
    objects: Vec<Object>,
    base: usize,
    steps: Vec<Step>,
}

impl Default for Construction {
    fn default() -> Self {
        Construction::seeded()
    }
}

impl Construction {
    /// Starts from the seed points (0,0) and (0,1).
    pub fn seeded() -> Construction {
        Construction::from_objects(vec![Object::Point(Point::ints(0, 0)), Object::Point(Point::ints(0, 1))])
    }

    /// Starts from arbitrary given objects, numbered from 0.
    pub fn from_objects(objects: Vec<Object>) -> Construction {
        Construction { base: objects.len(), objects, steps: Vec::new() }
    }

    pub fn objects(&self) -> &[Object] {
        &self.objects
    }

    pub fn point(&self, id: usize) -> Option<&Point> {
        match self.objects.get(id) {
            Some(Object::Point(p)) => Some(p),
            _ => None,
        }
    }

    pub fn line(&self, id: usize) -> Option<&Line> {
        match self.objects.get(id) {
            Some(Object::Line(l)) => Some(l),
            _ => None,
        }
    }

    fn need_point(&self, id: usize) -> Result<&Point, PlaneError> {
        self.point(id).ok_or_else(|| PlaneError::StepVerificationFailed { id, message: "expected a point".into() })
    }

    fn need_line(&self, id: usize) -> Result<&Line, PlaneError> {
        self.line(id).ok_or_else(|| PlaneError::StepVerificationFailed { id, message: "expected a line".into() })
    }

    /// All objects the axiom can produce from the operands.
    pub fn apply(&self, axiom: Axiom, ops: &[usize]) -> Result<Vec<Object>, PlaneError> {
        let (i, j) = (ops[0], ops[1]);
        Ok(match axiom {
            Axiom::LineThrough => vec![Object::Line(line_through(self.need_point(i)?, self.need_point(j)?)?)],
            Axiom::PerpBisector => vec![Object::Line(perp_bisector(self.need_point(i)?, self.need_point(j)?)?)],
            Axiom::Equidistant => {
                equidistant_lines(self.need_line(i)?, self.need_line(j)?)?.into_iter().map(Object::Line).collect()
            }
            Axiom::Mirror => vec![Object::Line(reflect_line(self.need_line(i)?, self.need_line(j)?)?)],
            Axiom::Intersect => {
                let p = intersect(self.need_line(i)?, self.need_line(j)?).ok_or(PlaneError::DegenerateConfiguration)?;
                vec![Object::Point(p)]
            }
        })
    }

    pub(crate) fn push(&mut self, axiom: Axiom, operands: Vec<usize>, object: Object) -> usize {
        let id = self.objects.len();
        self.steps.push(Step { id, axiom, operands, object: object.clone() });
        self.objects.push(object);
        id
    }

    fn single(&mut self, axiom: Axiom, i: usize, j: usize) -> Result<usize, PlaneError> {
        let mut out = self.apply(axiom, &[i, j])?;
        Ok(self.push(axiom, vec![i, j], out.remove(0)))
    }

    pub fn line_through(&mut self, p: usize, q: usize) -> Result<usize, PlaneError> {
        self.single(Axiom::LineThrough, p, q)
    }

    pub fn perp_bisector(&mut self, p: usize, q: usize) -> Result<usize, PlaneError> {
        self.single(Axiom::PerpBisector, p, q)
    }

    /// Every line equidistant from the two lines.
    pub fn equidistant(&mut self, l1: usize, l2: usize) -> Result<Vec<usize>, PlaneError> {
        let out = self.apply(Axiom::Equidistant, &[l1, l2])?;
        Ok(out.into_iter().map(|o| self.push(Axiom::Equidistant, vec![l1, l2], o)).collect())
    }

    /// Only the equidistant line satisfying `keep`, e.g. one bisector of two
    /// crossing lines.
    pub fn equidistant_where(&mut self, l1: usize, l2: usize, keep: impl Fn(&Line) -> bool) -> Result<usize, PlaneError> {
        let found = self.apply(Axiom::Equidistant, &[l1, l2])?.into_iter().find(|o| matches!(o, Object::Line(l) if keep(l)));
        let o = found.ok_or(PlaneError::DegenerateConfiguration)?;
        Ok(self.push(Axiom::Equidistant, vec![l1, l2], o))
    }

    /// Reflects `line` about `axis`.
    pub fn mirror(&mut self, line: usize, axis: usize) -> Result<usize, PlaneError> {
        self.single(Axiom::Mirror, line, axis)
    }

    pub fn intersect(&mut self, l1: usize, l2: usize) -> Result<usize, PlaneError> {
        self.single(Axiom::Intersect, l1, l2)
    }

    /// Parallel to line `l` through point `p`, using anchor points `p1` and
    /// `p2` on `l`: reflect the lines from the anchors to `p` about `l`,
    /// join their crossing to `p` (a perpendicular to `l`), bisect `p` and
    /// its foot, and mirror `l` about that bisector.
    pub fn parallel(&mut self, l: usize, p: usize, p1: usize, p2: usize) -> Result<usize, PlaneError> {
        let line = self.need_line(l)?.clone();
        let (pp, a1, a2) = (self.need_point(p)?.clone(), self.need_point(p1)?.clone(), self.need_point(p2)?.clone());
        if line.contains(&pp) {
            return Err(PlaneError::PointOnLine);
        }
        if a1 == a2 || !line.contains(&a1) || !line.contains(&a2) {
            return Err(PlaneError::BadAnchors);
        }
        let l1 = self.line_through(p1, p)?;
        let l2 = self.line_through(p2, p)?;
        let l3 = self.mirror(l1, l)?;
        let l4 = self.mirror(l2, l)?;
        let q = self.intersect(l3, l4)?;
        let l5 = self.line_through(q, p)?;
        let p3 = self.intersect(l5, l)?;
        let bisector = self.perp_bisector(p, p3)?;
        self.mirror(l, bisector)
    }

    pub fn configuration(&self) -> Configuration {
        Configuration { objects: self.objects.clone() }
    }

    /// Steps taken after the starting objects.
    pub fn trace(&self) -> Trace {
        Trace { steps: self.steps.clone() }
    }

    pub fn into_trace(self) -> Trace {
        Trace { steps: self.steps }
    }

    pub fn base(&self) -> usize {
        self.base
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};

    #[test]
    fn empty_trace_is_the_seed() {
        let cfg = Trace::parse("# nothing\n\n").unwrap().replay().unwrap();
        assert_eq!(cfg.objects.len(), 2);
        assert!(cfg.contains_point(&Point::ints(0, 1)));
    }

    #[test]
    fn round_trip_and_replay() {
        let mut c = Construction::seeded();
        let y = c.line_through(0, 1).unwrap();
        let h = c.perp_bisector(0, 1).unwrap();
        let p = c.intersect(y, h).unwrap();
        let text = c.trace().to_string();
        assert_eq!(text.lines().nth(2).unwrap(), "4 intersect 2 3 -> (0, 1/2)");
        let cfg = Trace::parse(&text).unwrap().replay().unwrap();
        assert_eq!(cfg.objects[p], Object::Point(Point::rational(int(0), rat(1, 2))));
    }

    #[test]
    fn malformed_traces() {
        let fwd = "2 line-through 0 3 -> [1, 0, 0]";
        assert!(matches!(Trace::parse(fwd).unwrap().replay(), Err(PlaneError::MalformedTrace { .. })));
        assert!(matches!(Trace::parse("2 fold 0 1 -> [1, 0, 0]"), Err(PlaneError::MalformedTrace { line: 1, .. })));
        assert!(matches!(Trace::parse("2 line-through 0 1 [1, 0, 0]"), Err(PlaneError::MalformedTrace { .. })));
        let wrong = "2 line-through 0 1 -> [0, 1, 0]";
        assert!(matches!(Trace::parse(wrong).unwrap().replay(), Err(PlaneError::StepVerificationFailed { id: 2, .. })));
        let types = "2 intersect 0 1 -> (0, 0)";
        assert!(matches!(Trace::parse(types).unwrap().replay(), Err(PlaneError::StepVerificationFailed { .. })));
    }

    #[test]
    fn irrational_literals_replay() {
        let mut c = Construction::seeded();
        let y = c.line_through(0, 1).unwrap();
        let h = c.perp_bisector(0, 1).unwrap();
        let both = c.equidistant(y, h).unwrap();
        assert_eq!(both.len(), 2);
        let cfg = Trace::parse(&c.trace().to_string()).unwrap().replay().unwrap();
        assert_eq!(cfg.objects.len(), 6);
    }
}
