//! HOMFLY polynomial by skein recursion on descending diagrams.
//!
//! Conventions: `v⁻¹ P(D₊) - v P(D₋) = z P(D₀)` and `P(unknot) = 1`.
//!
//! Each component gets a basepoint (its smallest arc) and components are
//! ordered by basepoint. Walking the components in order, a diagram is
//! descending when every crossing is first met on its over-strand; it then
//! presents the `k`-component unlink, with `P = ((v⁻¹ - v) / z)^(k - 1)`.
//! Otherwise the first crossing met from below is switched, which keeps the
//! arcs and so the basepoints, and the smoothing has one crossing fewer.

use std::collections::{HashMap, HashSet};

use super::diagram::{Arc, Crossing, LinkDiagram};
use super::seifert::circle_count;
use crate::error::{Error, Result};
use crate::graph::Sign;
use crate::poly::LaurentPoly2;

pub const DEFAULT_CROSSING_BUDGET: usize = 16;

/// `(v⁻¹ - v) z⁻¹`, the value of the 2-component unlink.
pub fn unlink_factor() -> LaurentPoly2 {
    LaurentPoly2::from_terms([(-1, -1, 1), (1, -1, -1)])
}

pub fn homfly(d: &LinkDiagram) -> Result<LaurentPoly2> {
    homfly_with_budget(d, DEFAULT_CROSSING_BUDGET)
}

pub fn homfly_with_budget(d: &LinkDiagram, max_crossings: usize) -> Result<LaurentPoly2> {
    if d.crossing_count() > max_crossings {
        return Err(Error::CrossingBudget(d.crossing_count(), max_crossings));
    }
    Ok(Evaluator::default().eval(d))
}

/// Morton's bound `c(D) - s(D) + 1` on the `z`-degree.
pub fn morton_bound(d: &LinkDiagram) -> i64 {
    d.crossing_count() as i64 - circle_count(d) as i64 + 1
}

/// The coefficient of `z^morton_bound` (possibly zero), as a polynomial in `v`.
pub fn homfly_top(d: &LinkDiagram) -> Result<LaurentPoly2> {
    homfly_top_of(d, &homfly(d)?)
}

pub fn homfly_top_of(d: &LinkDiagram, p: &LaurentPoly2) -> Result<LaurentPoly2> {
    Ok(p.coeff_of_z(morton_bound(d)))
}

/// `(D₊, D₋, D₀)` at crossing `idx`.
pub fn skein_triple(d: &LinkDiagram, idx: usize) -> (LinkDiagram, LinkDiagram, LinkDiagram) {
    (d.with_crossing_sign(idx, Sign::Positive), d.with_crossing_sign(idx, Sign::Negative), d.smoothed(idx))
}

#[derive(Default)]
struct Evaluator {
    memo: HashMap<Vec<u32>, LaurentPoly2>,
}

impl Evaluator {
    fn eval(&mut self, d: &LinkDiagram) -> LaurentPoly2 {
        let pieces = d.pieces();
        if pieces.len() > 1 {
            let mut acc = unlink_factor().pow(pieces.len() - 1);
            for p in &pieces {
                acc = &acc * &self.eval_connected(p);
            }
            return acc;
        }
        self.eval_connected(d)
    }

    fn eval_connected(&mut self, d: &LinkDiagram) -> LaurentPoly2 {
        if d.crossing_count() == 0 {
            return unlink_factor().pow(d.free_loops().len() - 1);
        }
        let (d, code) = canonical(d);
        if let Some(hit) = self.memo.get(&code) {
            return hit.clone();
        }
        let value = match first_bad_crossing(&d) {
            None => unlink_factor().pow(d.component_count() - 1),
            Some(idx) => {
                let switched = self.eval(&d.switched(idx));
                let smoothed = self.eval(&d.smoothed(idx));
                match d.crossings()[idx].sign {
                    // P₊ = v² P₋ + v z P₀
                    Sign::Positive => &switched.shift(2, 0) + &smoothed.shift(1, 1),
                    // P₋ = v⁻² P₊ - v⁻¹ z P₀
                    Sign::Negative => &switched.shift(-2, 0) - &smoothed.shift(-1, 1),
                }
            }
        };
        self.memo.insert(code, value.clone());
        value
    }
}

/// Relabels arcs `1, 2, ...` in traversal order and returns the relabeled
/// diagram with a code that identifies it up to crossing ids.
fn canonical(d: &LinkDiagram) -> (LinkDiagram, Vec<u32>) {
    let mut label: HashMap<Arc, Arc> = HashMap::new();
    for comp in d.components() {
        for a in comp {
            let next = label.len() as Arc + 1;
            label.insert(a, next);
        }
    }
    let crossings: Vec<Crossing> =
        d.crossings().iter().map(|c| Crossing { slots: c.slots.map(|a| label[&a]), ..*c }).collect();
    let loops: Vec<Arc> = d.free_loops().iter().map(|a| label[a]).collect();
    let mut code: Vec<[u32; 5]> =
        crossings.iter().map(|c| [c.slots[0], c.slots[1], c.slots[2], c.slots[3], (c.sign == Sign::Negative) as u32]).collect();
    code.sort_unstable();
    let mut flat: Vec<u32> = code.concat();
    flat.push(loops.len() as u32);
    let d = LinkDiagram::new(crossings, loops).expect("relabeling keeps a valid diagram");
    (d, flat)
}

/// Index of the first crossing reached along its under-strand.
fn first_bad_crossing(d: &LinkDiagram) -> Option<usize> {
    // For each arc: the crossing it runs into, and whether it goes under.
    let mut head: HashMap<Arc, (usize, bool)> = HashMap::new();
    for (k, c) in d.crossings().iter().enumerate() {
        head.insert(c.under().0, (k, true));
        head.insert(c.over().0, (k, false));
    }
    let mut seen = HashSet::new();
    for comp in d.components() {
        for a in comp {
            if let Some(&(k, under)) = head.get(&a) {
                if seen.insert(k) && under {
                    return Some(k);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::braid::braid_closure;
    use crate::knot::diagram::parse_pd;

    fn lp(terms: &[(i64, i64, i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms.iter().copied())
    }

    #[test]
    fn unknots_and_unlinks() {
        assert_eq!(homfly(&parse_pd("O 1").unwrap()).unwrap(), LaurentPoly2::one());
        assert_eq!(homfly(&parse_pd("O 1\nO 2").unwrap()).unwrap(), unlink_factor());
        // A one-crossing kink is still the unknot.
        assert_eq!(homfly(&parse_pd("X 1 1 2 2 +").unwrap()).unwrap(), LaurentPoly2::one());
        assert_eq!(homfly(&parse_pd("X 1 2 2 1 -").unwrap()).unwrap(), LaurentPoly2::one());
    }

    #[test]
    fn hopf_and_trefoil() {
        let hopf = braid_closure(2, &[1, 1]).unwrap();
        assert_eq!(homfly(&hopf).unwrap(), lp(&[(1, 1, 1), (1, -1, 1), (3, -1, -1)]));
        let trefoil = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(homfly(&trefoil).unwrap(), lp(&[(2, 0, 2), (4, 0, -1), (2, 2, 1)]));
        let pd = parse_pd("X 1 5 2 4 +\nX 3 1 4 6 +\nX 5 3 6 2 +").unwrap();
        assert_eq!(homfly(&pd).unwrap(), homfly(&trefoil).unwrap());
    }

    #[test]
    fn figure_eight() {
        let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        assert_eq!(homfly(&d).unwrap(), lp(&[(-2, 0, 1), (0, 0, -1), (2, 0, 1), (0, 2, -1)]));
        let pd = parse_pd("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]").unwrap();
        assert_eq!(homfly(&pd).unwrap(), homfly(&d).unwrap());
    }

    #[test]
    fn mirror_substitutes_v() {
        // P(mirror)(v, z) = P(-v⁻¹, z) in this normalization.
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        let p = homfly(&d).unwrap();
        let m = homfly(&d.mirror()).unwrap();
        let sub = LaurentPoly2::from_terms(p.iter().map(|(v, z, c)| {
            let c: i64 = c.try_into().unwrap();
            (-v, z, if v % 2 == 0 { c } else { -c })
        }));
        assert_eq!(m, sub);
    }

    #[test]
    fn budget() {
        let d = braid_closure(2, &[1; 5]).unwrap();
        assert_eq!(homfly_with_budget(&d, 4), Err(Error::CrossingBudget(5, 4)));
    }

    #[test]
    fn morton_on_torus_knots() {
        for n in 1..6 {
            let d = braid_closure(2, &vec![1; n]).unwrap();
            let p = homfly(&d).unwrap();
            assert_eq!(p.max_z_degree(), Some(morton_bound(&d)));
            assert!(!homfly_top(&d).unwrap().is_zero());
        }
    }
}
