//! Skein-relation evaluation on signed Gauss codes.
//!
//! Walking the components in order from their basepoints, the first crossing
//! met first as an under visit is switched and smoothed:
//! `C(L+) - C(L-) = z C(L0)`. A diagram where every crossing is met first as
//! an over visit is a stacked unlink.

use std::collections::{HashMap, HashSet};

use super::ConwayError;
use crate::diagram::{LinkCode, Visit};
use crate::IntPoly;

pub struct SkeinEvaluator {
    budget: usize,
    nodes: usize,
    memo: HashMap<Vec<u32>, IntPoly>,
}

impl SkeinEvaluator {
    /// `budget` bounds the number of diagrams expanded (memo hits are free).
    pub fn new(budget: usize) -> Self {
        Self {
            budget,
            nodes: 0,
            memo: HashMap::new(),
        }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn evaluate(&mut self, link: &LinkCode) -> Result<IntPoly, ConwayError> {
        let link = link.simplify();
        if link.crossing_count() == 0 {
            return Ok(unlink_value(link.components.len()));
        }
        if link.is_split_union() {
            return Ok(IntPoly::zero());
        }
        let key = canonical_key(&link.components);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(ConwayError::BudgetExceeded(self.budget));
        }
        let value = match first_bad_crossing(&link.components) {
            None => unlink_value(link.components.len()),
            Some((id, sign)) => {
                let switched = self.evaluate(&switch(&link, id))?;
                let smoothed = self.evaluate(&smooth(&link, id))?;
                let z_term = smoothed.shift(1);
                if sign > 0 {
                    &switched + &z_term
                } else {
                    &switched - &z_term
                }
            }
        };
        self.memo.insert(key, value.clone());
        Ok(value)
    }
}

fn unlink_value(components: usize) -> IntPoly {
    if components == 1 {
        IntPoly::one()
    } else {
        IntPoly::zero()
    }
}

fn first_bad_crossing(comps: &[Vec<Visit>]) -> Option<(u32, i8)> {
    let mut seen = HashSet::new();
    for v in comps.iter().flatten() {
        if seen.insert(v.id) && !v.over {
            return Some((v.id, v.sign));
        }
    }
    None
}

fn switch(link: &LinkCode, id: u32) -> LinkCode {
    LinkCode {
        components: link
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&v| if v.id == id { Visit::new(id, !v.over, -v.sign) } else { v })
                    .collect()
            })
            .collect(),
    }
}

/// Oriented smoothing of crossing `id`.
fn smooth(link: &LinkCode, id: u32) -> LinkCode {
    let places: Vec<(usize, usize)> = link
        .components
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| {
            c.iter()
                .enumerate()
                .filter(move |(_, v)| v.id == id)
                .map(move |(pi, _)| (ci, pi))
        })
        .collect();
    let (a, b) = (places[0], places[1]);
    let mut comps = link.components.clone();
    if a.0 == b.0 {
        // one component splits in two
        let w = &link.components[a.0];
        let (p, q) = (a.1.min(b.1), a.1.max(b.1));
        let inner = w[p + 1..q].to_vec();
        let outer: Vec<Visit> = w[..p].iter().chain(&w[q + 1..]).copied().collect();
        comps[a.0] = outer;
        comps.push(inner);
    } else {
        // two components merge
        let (wa, wb) = (&link.components[a.0], &link.components[b.0]);
        let merged: Vec<Visit> = wa[..a.1]
            .iter()
            .chain(&wb[b.1 + 1..])
            .chain(&wb[..b.1])
            .chain(&wa[a.1 + 1..])
            .copied()
            .collect();
        comps[a.0] = merged;
        comps.remove(b.0);
    }
    LinkCode { components: comps }
}

/// A relabeling- and basepoint-independent encoding for single components;
/// for links, component orders are tried (up to four components) and later
/// components start at their earliest already-labelled crossing. Equal keys
/// always mean equal diagrams up to relabeling and basepoints.
fn canonical_key(comps: &[Vec<Visit>]) -> Vec<u32> {
    let k = comps.len();
    let orders: Vec<Vec<usize>> = if k <= 4 {
        permutations(k)
    } else {
        vec![(0..k).collect()]
    };
    let mut best: Option<Vec<u32>> = None;
    for order in orders {
        let first = &comps[order[0]];
        for r in 0..first.len().max(1) {
            let key = encode(comps, &order, r);
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        }
    }
    best.unwrap_or_default()
}

fn encode(comps: &[Vec<Visit>], order: &[usize], first_rotation: usize) -> Vec<u32> {
    let mut labels: HashMap<u32, u32> = HashMap::new();
    let mut out = Vec::with_capacity(comps.iter().map(Vec::len).sum::<usize>() + comps.len());
    for (slot, &ci) in order.iter().enumerate() {
        let w = &comps[ci];
        let start = if slot == 0 {
            first_rotation
        } else {
            w.iter()
                .enumerate()
                .filter_map(|(i, v)| labels.get(&v.id).map(|&l| (l, i)))
                .min()
                .map_or(0, |(_, i)| i)
        };
        out.push(0);
        for j in 0..w.len() {
            let v = w[(start + j) % w.len()];
            let next = labels.len() as u32 + 1;
            let label = *labels.entry(v.id).or_insert(next);
            out.push(label * 4 + u32::from(v.over) * 2 + u32::from(v.sign > 0));
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Conway polynomial of a (possibly multi-component) link code.
pub fn conway_of_link(link: &LinkCode, budget: usize) -> Result<IntPoly, ConwayError> {
    SkeinEvaluator::new(budget).evaluate(link)
}
