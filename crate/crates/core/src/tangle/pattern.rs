//! The caterpillar family realizing `1 + sum_{i=0}^{n} (-1)^(n+i) a_i z^(2(n-i+1))`.
//!
//! Built from plumbing weights `b` (full twists, with the sign flipping at
//! every level of the tree; the vertex weight is `2b(-1)^depth` half twists):
//! the spine starts `a_0, 1` and each further `a_i` appends
//! `0 [-1], a_i, 0, 1, 1`, where `[-1]` is a leaf. With `A = C(T)` and
//! `B = C(T - end)`, each block maps `(A, B)` to
//! `((1 + a z^2) A - (z + (a+1) z^3) B, a z A - (a+1) z^2 B)`, which keeps
//! `B = (A - 1)/z` and gives `A' = 1 + (a+1) z^2 - z^2 A`.

use num_bigint::BigInt;

use super::{tree_to_diagram, TangleError, WeightedTree};
use crate::conway::conway_via_alexander;
use crate::diagram::{DiagramCode, PdCode};
use crate::IntPoly;

const BLOCK: [i64; 5] = [0, 0, 0, 1, 1];

/// Spine of plumbing weights with the position of each parameter.
fn plumbing_spine(a: &[i64]) -> Vec<(i64, Vec<i64>)> {
    let mut spine = vec![(a[0], vec![]), (1, vec![])];
    for &ai in &a[1..] {
        spine.push((0, vec![-1]));
        spine.push((ai, vec![]));
        spine.extend([(0, vec![]), (1, vec![]), (1, vec![])]);
    }
    spine
}

fn signed(b: i64, depth: usize) -> i64 {
    if depth % 2 == 0 {
        2 * b
    } else {
        -2 * b
    }
}

/// The pattern tree for parameters `a_0..a_n` (`n = a.len() - 1`); the
/// empty parameter list gives the empty tree.
pub fn pattern_tree(a: &[i64]) -> WeightedTree {
    if a.is_empty() {
        return WeightedTree::empty();
    }
    let spine: Vec<(i64, Vec<i64>)> = plumbing_spine(a)
        .into_iter()
        .enumerate()
        .map(|(d, (b, leaves))| (signed(b, d), leaves.into_iter().map(|l| signed(l, d + 1)).collect()))
        .collect();
    WeightedTree::caterpillar(&spine)
}

/// Reads `a_0..a_n` back from a pattern tree.
pub fn pattern_parameters(t: &WeightedTree) -> Result<Vec<i64>, TangleError> {
    let mismatch = |why: &str| Err(TangleError::PatternMismatch(format!("{t}: {why}")));
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let Some(spine) = t.spine() else {
        return mismatch("not a caterpillar");
    };
    if spine.len() < 2 || (spine.len() - 2) % 5 != 0 {
        return mismatch("spine length is not 2 + 5n");
    }
    let plain: Vec<(i64, Vec<i64>)> = spine
        .iter()
        .enumerate()
        .map(|(d, (w, leaves))| {
            let s = if d % 2 == 0 { 1 } else { -1 };
            (w * s, leaves.iter().map(|l| -l * s).collect())
        })
        .collect();
    if plain.iter().any(|(w, l)| w % 2 != 0 || l.iter().any(|x| x % 2 != 0)) {
        return mismatch("weights must be even");
    }
    let halves: Vec<(i64, Vec<i64>)> = plain
        .into_iter()
        .map(|(w, l)| (w / 2, l.into_iter().map(|x| x / 2).collect()))
        .collect();
    let a0 = halves[0].0;
    if halves[0].1.len() + halves[1].1.len() > 0 || halves[1].0 != 1 {
        return mismatch("the spine must start a_0, 1");
    }
    let mut a = vec![a0];
    for block in halves[2..].chunks(5) {
        let ok = block[0].1 == [-1]
            && block[1].1.is_empty()
            && block.iter().enumerate().all(|(k, (b, _))| k == 1 || *b == BLOCK[k])
            && block[2..].iter().all(|(_, l)| l.is_empty());
        if !ok {
            return mismatch("block is not 0 [-1], a, 0, 1, 1");
        }
        a.push(block[1].0);
    }
    Ok(a)
}

/// `1 + sum_{i=0}^{n} (-1)^(n+i) a_i z^(2(n-i+1))`, taken literally.
pub fn closed_formula(a: &[i64], n: usize) -> Result<IntPoly, TangleError> {
    if a.len() != n + 1 {
        return Err(TangleError::PatternMismatch(format!(
            "{} weights given for n = {n}, expected {}",
            a.len(),
            n + 1
        )));
    }
    let mut coeffs = vec![BigInt::from(0); 2 * (n + 1) + 1];
    coeffs[0] = BigInt::from(1);
    for (i, &ai) in a.iter().enumerate() {
        let sign = if (n + i) % 2 == 0 { 1 } else { -1 };
        coeffs[2 * (n - i + 1)] += BigInt::from(sign * ai);
    }
    Ok(IntPoly::new(coeffs))
}

/// Inverse of the closed formula: parameters for `1 + c_1 z^2 + ... + c_m z^(2m)`.
pub fn parameters_for(target: &IntPoly) -> Result<Vec<i64>, TangleError> {
    check_target(target)?;
    let m = target.degree().unwrap_or(0) / 2;
    if m == 0 {
        return Ok(Vec::new());
    }
    let n = m - 1;
    (0..=n)
        .map(|i| {
            let k = n + 1 - i;
            let c = i64::try_from(&target.coeff(2 * k))
                .map_err(|_| TangleError::PatternMismatch("coefficient exceeds 64 bits".into()))?;
            Ok(if k % 2 == 1 { c } else { -c })
        })
        .collect()
}

pub(crate) fn check_target(target: &IntPoly) -> Result<(), TangleError> {
    if !target.is_even() {
        return Err(TangleError::NotEven);
    }
    if target.constant_term() != BigInt::from(1) {
        return Err(TangleError::BadConstantTerm(target.constant_term().to_string()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub tree: WeightedTree,
    pub diagram: PdCode,
    /// True when the tree came from the bounded search instead of the pattern.
    pub from_search: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_abs_weight: i64,
    pub max_vertices: usize,
    /// Cap on engine evaluations during the fallback search.
    pub max_candidates: usize,
}

impl SearchBounds {
    /// `|w| <= 6` and at most `2n + 2` vertices for a target of degree `2n`.
    pub fn for_target(target: &IntPoly) -> Self {
        let n = target.degree().unwrap_or(0) / 2;
        Self {
            max_abs_weight: 6,
            max_vertices: 2 * n + 2,
            max_candidates: 200_000,
        }
    }
}

fn certify(tree: &WeightedTree, target: &IntPoly) -> Option<PdCode> {
    let pd = tree_to_diagram(tree).ok()?;
    let c = conway_via_alexander(&DiagramCode::Pd(pd.clone())).ok()?;
    (c == *target).then_some(pd)
}

/// A tree and diagram whose engine-computed Conway polynomial is `target`.
pub fn realize(target: &IntPoly) -> Result<Realization, TangleError> {
    realize_within(target, SearchBounds::for_target(target))
}

pub fn realize_within(target: &IntPoly, bounds: SearchBounds) -> Result<Realization, TangleError> {
    check_target(target)?;
    if let Ok(a) = parameters_for(target) {
        let tree = pattern_tree(&a);
        if let Some(diagram) = certify(&tree, target) {
            return Ok(Realization {
                tree,
                diagram,
                from_search: false,
            });
        }
    }
    search(target, bounds)
}

/// Caterpillars with even weights, smallest first, lexicographic within a size.
fn search(target: &IntPoly, bounds: SearchBounds) -> Result<Realization, TangleError> {
    let exhausted = || {
        TangleError::SearchExhausted(format!(
            "|w| <= {}, at most {} vertices, {} candidates",
            bounds.max_abs_weight, bounds.max_vertices, bounds.max_candidates
        ))
    };
    let values: Vec<i64> = (-bounds.max_abs_weight..=bounds.max_abs_weight)
        .filter(|w| w % 2 == 0 && *w != 0)
        .collect();
    let mut tried = 0usize;
    for size in (2..=bounds.max_vertices).step_by(2) {
        for shape in caterpillar_shapes(size) {
            let mut idx = vec![0usize; size];
            loop {
                let mut k = 0;
                let spine: Vec<(i64, Vec<i64>)> = shape
                    .iter()
                    .map(|&leaves| {
                        let w = values[idx[k]];
                        k += 1;
                        let l = (0..leaves)
                            .map(|_| {
                                k += 1;
                                values[idx[k - 1]]
                            })
                            .collect();
                        (w, l)
                    })
                    .collect();
                let tree = WeightedTree::caterpillar(&spine);
                tried += 1;
                if tried > bounds.max_candidates {
                    return Err(exhausted());
                }
                if let Some(diagram) = certify(&tree, target) {
                    return Ok(Realization {
                        tree,
                        diagram,
                        from_search: true,
                    });
                }
                // odometer over weight choices
                let mut pos = size;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < values.len() {
                        break;
                    }
                    idx[pos] = 0;
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos == usize::MAX {
                    break;
                }
            }
        }
    }
    Err(exhausted())
}

/// Leaf counts per spine vertex for caterpillars with `size` vertices.
fn caterpillar_shapes(size: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for leaves in 0..rest {
            cur.push(leaves);
            go(rest - 1 - leaves, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn formula_literal_values() {
        assert_eq!(closed_formula(&[0, 0, 0], 2).unwrap(), IntPoly::one());
        assert_eq!(closed_formula(&[-1], 0).unwrap(), p("1-z^2"));
        assert_eq!(closed_formula(&[1], 0).unwrap(), p("1+z^2"));
        // n = 1: a_1 z^2 - a_0 z^4
        assert_eq!(closed_formula(&[2, 3], 1).unwrap(), p("1+3z^2-2z^4"));
        assert!(matches!(closed_formula(&[1, 2], 0), Err(TangleError::PatternMismatch(_))));
    }

    #[test]
    fn parameters_invert_formula() {
        for a in [vec![1], vec![-2, 3], vec![1, 0, -1], vec![2, -1, 1, 2]] {
            let n = a.len() - 1;
            let c = closed_formula(&a, n).unwrap();
            if a[0] != 0 {
                assert_eq!(parameters_for(&c).unwrap(), a);
            }
        }
        assert_eq!(parameters_for(&IntPoly::one()).unwrap(), Vec::<i64>::new());
        assert_eq!(parameters_for(&p("z")), Err(TangleError::NotEven));
        assert!(matches!(parameters_for(&p("2+z^2")), Err(TangleError::BadConstantTerm(_))));
    }

    #[test]
    fn pattern_round_trip() {
        for a in [vec![3], vec![1, -2], vec![0, 1, 2]] {
            let t = pattern_tree(&a);
            assert_eq!(t.len(), 2 + 6 * (a.len() - 1));
            assert_eq!(pattern_parameters(&t).unwrap(), a);
        }
        assert!(pattern_parameters(&"(3 1)".parse().unwrap()).is_err());
    }

    #[test]
    fn pattern_matches_engine_small() {
        for a in [vec![1], vec![-1], vec![2], vec![1, 1], vec![-2, 1], vec![1, 0, -1]] {
            let n = a.len() - 1;
            let pd = tree_to_diagram(&pattern_tree(&a)).unwrap();
            let c = conway_via_alexander(&DiagramCode::Pd(pd)).unwrap();
            assert_eq!(c, closed_formula(&a, n).unwrap(), "{a:?}");
        }
    }

    #[test]
    fn realize_small_targets() {
        let r = realize(&IntPoly::one()).unwrap();
        assert_eq!(r.diagram, PdCode::unknot());
        for t in ["1+z^2", "1-2z^2", "1+z^2-z^4"] {
            let r = realize(&p(t)).unwrap();
            let c = conway_via_alexander(&DiagramCode::Pd(r.diagram.clone())).unwrap();
            assert_eq!(c, p(t));
            assert!(!r.from_search);
        }
        assert_eq!(realize(&p("1+z")), Err(TangleError::NotEven));
    }

    #[test]
    fn fallback_search_finds_small_knots() {
        let bounds = SearchBounds {
            max_abs_weight: 2,
            max_vertices: 2,
            max_candidates: 100,
        };
        let r = search(&p("1-z^2"), bounds).unwrap();
        assert!(r.from_search);
        assert_eq!(conway_via_alexander(&DiagramCode::Pd(r.diagram)).unwrap(), p("1-z^2"));
        assert!(matches!(search(&p("1+5z^2+7z^4"), bounds), Err(TangleError::SearchExhausted(_))));
        assert_eq!(caterpillar_shapes(3), vec![vec![0, 0, 0], vec![0, 1], vec![1, 0], vec![2]]);
    }
}
