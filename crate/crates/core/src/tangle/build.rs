//! Unoriented planar tangles and their closures.
//!
//! A crossing lists four edge ids counterclockwise with the under strand in
//! slots 0 and 2. Tangle ends are NW, NE, SW, SE, each naming an edge; a
//! crossing-free arc is one edge reaching two ends.

use std::collections::HashMap;

use crate::diagram::PdCode;

#[derive(Clone, Debug)]
pub(crate) struct Tangle {
    crossings: Vec<[u32; 4]>,
    /// NW, NE, SW, SE.
    ends: [u32; 4],
    /// Union-find over edge ids; joined ends belong to one edge.
    parent: Vec<u32>,
    /// Closed crossing-free loops created while joining.
    free_loops: usize,
}

const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

impl Tangle {
    /// `w` horizontal half twists. For `w > 0` the strand from NW to SE
    /// passes over. `[0]` is two horizontal arcs.
    pub fn twist(w: i64) -> Self {
        let mut crossings = Vec::new();
        let (top, bottom) = (0u32, 1u32);
        let (mut nw, mut sw) = (top, bottom);
        let mut next = 2;
        for _ in 0..w.unsigned_abs() {
            let (ne, se) = (next, next + 1);
            next += 2;
            if w > 0 {
                crossings.push([sw, se, ne, nw]);
            } else {
                crossings.push([se, ne, nw, sw]);
            }
            (nw, sw) = (ne, se);
        }
        Self {
            crossings,
            ends: [top, nw, bottom, sw],
            parent: (0..next).collect(),
            free_loops: 0,
        }
    }

    /// Reflection in the NW-SE diagonal: cyclic orders reverse, NE and SW trade.
    pub fn reflect(mut self) -> Self {
        for x in &mut self.crossings {
            *x = [x[0], x[3], x[2], x[1]];
        }
        self.ends.swap(NE, SW);
        self
    }

    fn find(&mut self, mut e: u32) -> u32 {
        while self.parent[e as usize] != e {
            let up = self.parent[self.parent[e as usize] as usize];
            self.parent[e as usize] = up;
            e = up;
        }
        e
    }

    /// Joins two ends; joining the two ends of one crossing-free arc closes a loop.
    fn join(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.free_loops += 1;
        } else {
            self.parent[rb as usize] = ra;
        }
    }

    /// Side-by-side sum: `self`'s east ends meet `other`'s west ends.
    pub fn add(self, other: Tangle) -> Self {
        let by = self.parent.len() as u32;
        let shift = |e: u32| e + by;
        let mut t = Tangle {
            crossings: self
                .crossings
                .iter()
                .copied()
                .chain(other.crossings.iter().map(|x| x.map(shift)))
                .collect(),
            ends: [self.ends[NW], shift(other.ends[NE]), self.ends[SW], shift(other.ends[SE])],
            parent: self
                .parent
                .iter()
                .copied()
                .chain(other.parent.iter().map(|&p| shift(p)))
                .collect(),
            free_loops: self.free_loops + other.free_loops,
        };
        t.join(self.ends[NE], shift(other.ends[NW]));
        t.join(self.ends[SE], shift(other.ends[SW]));
        t
    }

    #[cfg(test)]
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Numerator closure (NW to NE, SW to SE) as an oriented PD code, or
    /// `None` if the closure has more than one component.
    pub fn numerator(mut self) -> Option<PdCode> {
        let [nw, ne, sw, se] = self.ends;
        self.join(nw, ne);
        self.join(sw, se);
        self.into_pd()
    }

    fn into_pd(mut self) -> Option<PdCode> {
        let n = self.crossings.len();
        if n == 0 {
            return (self.free_loops == 1).then(PdCode::unknot);
        }
        if self.free_loops > 0 {
            return None;
        }
        for ci in 0..n {
            for slot in 0..4 {
                let e = self.crossings[ci][slot];
                self.crossings[ci][slot] = self.find(e) + 1;
            }
        }
        let mut at: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (ci, x) in self.crossings.iter().enumerate() {
            for (slot, &e) in x.iter().enumerate() {
                at.entry(e).or_default().push((ci, slot));
            }
        }
        if at.values().any(|v| v.len() != 2) {
            return None;
        }
        // walk the strand, recording which under slot each crossing is entered by
        let mut entered_under: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![[false; 2]; n];
        let (mut ci, mut slot) = (0usize, 0usize);
        let mut steps = 0;
        loop {
            let over = slot % 2 == 1;
            if seen[ci][usize::from(over)] {
                break;
            }
            seen[ci][usize::from(over)] = true;
            if !over {
                entered_under[ci] = Some(slot);
            }
            steps += 1;
            let out = (slot + 2) % 4;
            let e = self.crossings[ci][out];
            let p = &at[&e];
            (ci, slot) = if p[0] == (ci, out) { p[1] } else { p[0] };
        }
        if steps != 2 * n {
            return None;
        }
        let crossings = self
            .crossings
            .iter()
            .zip(&entered_under)
            .map(|(x, &s)| if s == Some(0) { *x } else { [x[2], x[3], x[0], x[1]] })
            .collect();
        Some(PdCode::new(crossings).ok()?.relabeled())
    }
}
