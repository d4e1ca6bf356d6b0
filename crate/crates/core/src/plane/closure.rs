// Breadth-first closure from the seed points. Each generation applies the
// line-producing axioms to every operand pair involving something new, then
// adds all intersections involving a new line. Objects are deduplicated
// exactly, bucketed by the minimal polynomials of their coordinates.

use std::collections::{BTreeSet, HashMap};

use super::trace::{Axiom, Configuration, Construction, Object, Step, Trace};
use super::{PlaneError, Point};
use crate::poly::Polynomial;

pub const DEFAULT_DEPTH: usize = 3;
pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Clone, Debug)]
pub struct Closure {
    construction: Construction,
    /// Object count after each generation.
    pub generation_sizes: Vec<usize>,
    /// Id of the target point, if it was reached.
    pub target: Option<usize>,
}

impl Closure {
    pub fn configuration(&self) -> Configuration {
        self.construction.configuration()
    }

    pub fn objects(&self) -> &[Object] {
        self.construction.objects()
    }

    /// Generation in which object `id` first appeared (seeds are generation 0).
    pub fn generation_of(&self, id: usize) -> usize {
        if id < self.construction.base() {
            return 0;
        }
        1 + self.generation_sizes.iter().position(|&n| id < n).unwrap_or(self.generation_sizes.len())
    }

    /// Shortest sub-trace producing object `id`, renumbered from 2.
    pub fn trace_to(&self, id: usize) -> Trace {
        let base = self.construction.base();
        let steps = self.construction.trace().steps;
        let mut needed = BTreeSet::new();
        let mut stack = vec![id];
        while let Some(k) = stack.pop() {
            if k >= base && needed.insert(k) {
                stack.extend(steps[k - base].operands.iter().copied());
            }
        }
        let mut renumber: HashMap<usize, usize> = (0..base).map(|k| (k, k)).collect();
        let mut out = Vec::with_capacity(needed.len());
        for k in needed {
            let s = &steps[k - base];
            let new_id = base + out.len();
            renumber.insert(k, new_id);
            out.push(Step {
                id: new_id,
                axiom: s.axiom,
                operands: s.operands.iter().map(|o| renumber[o]).collect(),
                object: s.object.clone(),
            });
        }
        Trace { steps: out }
    }

    pub fn found_trace(&self) -> Option<Trace> {
        self.target.map(|id| self.trace_to(id))
    }
}

fn key(o: &Object) -> Vec<Polynomial> {
    match o {
        Object::Point(p) => vec![p.x.value().minpoly().clone(), p.y.value().minpoly().clone()],
        Object::Line(l) => vec![l.a.value().minpoly().clone(), l.b.value().minpoly().clone(), l.c.value().minpoly().clone()],
    }
}

struct Search<'a> {
    c: Construction,
    index: HashMap<Vec<Polynomial>, Vec<usize>>,
    budget: usize,
    target: Option<&'a Point>,
    hit: Option<usize>,
}

impl Search<'_> {
    /// Adds `o` unless an equal object exists.
    fn insert(&mut self, axiom: Axiom, ops: [usize; 2], o: Object) -> Result<(), PlaneError> {
        let k = key(&o);
        let objects = self.c.objects();
        if let Some(ids) = self.index.get(&k) {
            if ids.iter().any(|&i| objects[i] == o) {
                return Ok(());
            }
        }
        if objects.len() >= self.budget {
            return Err(PlaneError::BudgetExhausted { budget: self.budget });
        }
        let is_target = matches!((&o, self.target), (Object::Point(p), Some(t)) if p == t);
        let id = self.c.push(axiom, ops.to_vec(), o);
        self.index.entry(k).or_default().push(id);
        if is_target {
            self.hit = Some(id);
        }
        Ok(())
    }

    fn try_apply(&mut self, axiom: Axiom, i: usize, j: usize) -> Result<(), PlaneError> {
        // degenerate applications are skipped
        if let Ok(objs) = self.c.apply(axiom, &[i, j]) {
            for o in objs {
                self.insert(axiom, [i, j], o)?;
                if self.hit.is_some() {
                    break;
                }
            }
        }
        Ok(())
    }
}

/// Breadth-first closure for up to `depth` generations, stopping early when
/// `target` appears. Fails with `BudgetExhausted` once more than `budget`
/// objects would exist.
pub fn bfs_closure(depth: usize, target: Option<&Point>, budget: usize) -> Result<Closure, PlaneError> {
    let mut s = Search { c: Construction::seeded(), index: HashMap::new(), budget, target, hit: None };
    for (id, o) in s.c.objects().to_vec().into_iter().enumerate() {
        s.index.entry(key(&o)).or_default().push(id);
        if matches!((&o, target), (Object::Point(p), Some(t)) if p == t) {
            s.hit = Some(id);
        }
    }
    let mut sizes = Vec::new();
    let mut fresh = 0;
    for _ in 0..depth {
        if s.hit.is_some() {
            break;
        }
        let n = s.c.objects().len();
        'pairs: for j in fresh..n {
            for i in 0..j {
                let kinds = (&s.c.objects()[i], &s.c.objects()[j]);
                match kinds {
                    (Object::Point(_), Object::Point(_)) => {
                        s.try_apply(Axiom::LineThrough, i, j)?;
                        s.try_apply(Axiom::PerpBisector, i, j)?;
                    }
                    (Object::Line(_), Object::Line(_)) => {
                        s.try_apply(Axiom::Equidistant, i, j)?;
                        s.try_apply(Axiom::Mirror, i, j)?;
                        s.try_apply(Axiom::Mirror, j, i)?;
                    }
                    _ => {}
                }
                if s.hit.is_some() {
                    break 'pairs;
                }
            }
        }
        let m = s.c.objects().len();
        'cross: for j in n..m {
            for i in 0..j {
                if matches!((&s.c.objects()[i], &s.c.objects()[j]), (Object::Line(_), Object::Line(_))) {
                    s.try_apply(Axiom::Intersect, i, j)?;
                    if s.hit.is_some() {
                        break 'cross;
                    }
                }
            }
        }
        fresh = n;
        sizes.push(s.c.objects().len());
    }
    Ok(Closure { construction: s.c, generation_sizes: sizes, target: s.hit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat};
    use crate::plane::Line;

    #[test]
    fn first_generation() {
        let c = bfs_closure(1, None, DEFAULT_BUDGET).unwrap();
        let cfg = c.configuration();
        assert!(cfg.contains_line(&Line::ints(1, 0, 0).unwrap()));
        assert!(cfg.contains_line(&Line::rational(int(0), int(1), rat(-1, 2)).unwrap()));
        assert!(cfg.contains_point(&Point::rational(int(0), rat(1, 2))));
        assert_eq!(cfg.objects.len(), 5);
    }

    #[test]
    fn finds_a_quarter() {
        let target = Point::rational(int(0), rat(1, 4));
        let c = bfs_closure(3, Some(&target), DEFAULT_BUDGET).unwrap();
        let id = c.target.expect("reachable");
        assert_eq!(c.generation_of(id), 2);
        let cfg = c.found_trace().unwrap().replay().unwrap();
        assert!(cfg.contains_point(&target));
    }

    #[test]
    fn tiny_budget_runs_out() {
        let target = Point::rational(rat(1, 5), int(0));
        assert_eq!(bfs_closure(5, Some(&target), 12).unwrap_err(), PlaneError::BudgetExhausted { budget: 12 });
    }

    #[test]
    fn generations_grow() {
        let c = bfs_closure(2, None, DEFAULT_BUDGET).unwrap();
        assert!(c.generation_sizes.windows(2).all(|w| w[0] <= w[1]));
        let one = bfs_closure(1, None, DEFAULT_BUDGET).unwrap().configuration();
        let two = c.configuration();
        assert!(one.objects.iter().all(|o| two.objects.contains(o)));
    }
}
