use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use super::{invalid, DiagramError};

/// One passage of the strand through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Visit {
    pub id: u32,
    pub over: bool,
    /// Crossing sign, `+1` or `-1`; both visits of a crossing carry it.
    pub sign: i8,
}

impl Visit {
    pub fn new(id: u32, over: bool, sign: i8) -> Self {
        Self { id, over, sign }
    }
}

impl fmt::Display for Visit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ou = if self.over { 'O' } else { 'U' };
        let s = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{ou}{}{s}", self.id)
    }
}

/// Signed Gauss code of a knot: the crossings met along the oriented strand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    visits: Vec<Visit>,
}

impl GaussCode {
    pub fn new(visits: Vec<Visit>) -> Result<Self, DiagramError> {
        check_visits(std::slice::from_ref(&visits))?;
        Ok(Self { visits })
    }

    pub fn unknot() -> Self {
        Self { visits: Vec::new() }
    }

    pub fn visits(&self) -> &[Visit] {
        &self.visits
    }

    pub fn crossing_count(&self) -> usize {
        self.visits.len() / 2
    }

    pub fn writhe(&self) -> i64 {
        self.visits.iter().filter(|v| v.over).map(|v| i64::from(v.sign)).sum()
    }

    /// Reflection: every crossing changes over/under and sign.
    pub fn mirror(&self) -> Self {
        Self {
            visits: self
                .visits
                .iter()
                .map(|v| Visit::new(v.id, !v.over, -v.sign))
                .collect(),
        }
    }

    /// Applies Reidemeister I and II reductions until none is available.
    pub fn simplify(&self) -> Self {
        let link = LinkCode::from(self.clone()).simplify();
        Self {
            visits: link.components.into_iter().next().unwrap_or_default(),
        }
    }

    pub fn to_link(&self) -> LinkCode {
        LinkCode::from(self.clone())
    }
}

impl From<GaussCode> for LinkCode {
    fn from(g: GaussCode) -> Self {
        LinkCode {
            components: vec![g.visits],
        }
    }
}

fn check_visits(components: &[Vec<Visit>]) -> Result<(), DiagramError> {
    let mut seen: HashMap<u32, Vec<Visit>> = HashMap::new();
    for v in components.iter().flatten() {
        if v.sign != 1 && v.sign != -1 {
            return invalid(format!("crossing {} has sign {}", v.id, v.sign));
        }
        seen.entry(v.id).or_default().push(*v);
    }
    for (id, vs) in seen {
        if vs.len() != 2 {
            return invalid(format!("crossing {id} is visited {} times", vs.len()));
        }
        if vs[0].over == vs[1].over {
            return invalid(format!("crossing {id} needs one over and one under visit"));
        }
        if vs[0].sign != vs[1].sign {
            return invalid(format!("crossing {id} carries two different signs"));
        }
    }
    Ok(())
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.visits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            v.fmt(f)?;
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = DiagramError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = text.chars().collect();
        let err = |position: usize, message: &str| DiagramError::Parse {
            position,
            message: message.into(),
        };
        let mut visits = Vec::new();
        let mut i = 0;
        let skip_ws = |i: &mut usize| {
            while *i < chars.len() && chars[*i].is_whitespace() {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        if i == chars.len() {
            return Ok(Self::unknot());
        }
        loop {
            skip_ws(&mut i);
            let over = match chars.get(i) {
                Some('O' | 'o') => true,
                Some('U' | 'u') => false,
                _ => return Err(err(i, "expected 'O' or 'U'")),
            };
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(i, "expected a crossing number"));
            }
            let id: u32 = chars[start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| err(start, "crossing number out of range"))?;
            let sign = match chars.get(i) {
                Some('+') => 1,
                Some('-' | '\u{2212}') => -1,
                _ => return Err(err(i, "expected '+' or '-'")),
            };
            i += 1;
            visits.push(Visit::new(id, over, sign));
            skip_ws(&mut i);
            match chars.get(i) {
                None => break,
                Some(',') => i += 1,
                Some(_) => return Err(err(i, "expected ','")),
            }
        }
        Self::new(visits)
    }
}

/// Possibly multi-component signed Gauss code, as produced by smoothing.
/// A component without visits is a crossingless circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkCode {
    pub components: Vec<Vec<Visit>>,
}

impl LinkCode {
    pub fn new(components: Vec<Vec<Visit>>) -> Result<Self, DiagramError> {
        check_visits(&components)?;
        Ok(Self { components })
    }

    pub fn crossing_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn writhe(&self) -> i64 {
        self.components
            .iter()
            .flatten()
            .filter(|v| v.over)
            .map(|v| i64::from(v.sign))
            .sum()
    }

    pub fn mirror(&self) -> Self {
        Self {
            components: self
                .components
                .iter()
                .map(|c| c.iter().map(|v| Visit::new(v.id, !v.over, -v.sign)).collect())
                .collect(),
        }
    }

    /// True when the components fall into two groups sharing no crossing.
    pub fn is_split_union(&self) -> bool {
        let n = self.components.len();
        if n < 2 {
            return false;
        }
        let mut owner: HashMap<u32, usize> = HashMap::new();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for (ci, comp) in self.components.iter().enumerate() {
            for v in comp {
                if let Some(&other) = owner.get(&v.id) {
                    let (a, b) = (find(&mut parent, ci), find(&mut parent, other));
                    parent[a] = b;
                } else {
                    owner.insert(v.id, ci);
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..n).any(|i| find(&mut parent, i) != root)
    }

    /// Reidemeister I (a crossing whose two visits are consecutive) and II
    /// (two crossings of opposite sign whose over visits are consecutive and
    /// whose under visits are consecutive), repeated to a fixed point.
    pub fn simplify(&self) -> Self {
        let mut comps = self.components.clone();
        while let Some(ids) = find_reduction(&comps) {
            for c in comps.iter_mut() {
                c.retain(|v| !ids.contains(&v.id));
            }
        }
        Self { components: comps }
    }
}

type Place = (usize, usize);

fn cyclic_neighbours(comps: &[Vec<Visit>], a: Place, b: Place) -> bool {
    if a.0 != b.0 {
        return false;
    }
    let len = comps[a.0].len();
    len >= 2 && ((a.1 + 1) % len == b.1 || (b.1 + 1) % len == a.1)
}

fn find_reduction(comps: &[Vec<Visit>]) -> Option<Vec<u32>> {
    // id -> (over place, under place), ordered for determinism
    let mut places: BTreeMap<u32, (Place, Place, i8)> = BTreeMap::new();
    for (ci, comp) in comps.iter().enumerate() {
        for (pi, v) in comp.iter().enumerate() {
            let entry = places.entry(v.id).or_insert(((0, 0), (0, 0), v.sign));
            if v.over {
                entry.0 = (ci, pi);
            } else {
                entry.1 = (ci, pi);
            }
        }
    }
    for (&id, &(o, u, _)) in &places {
        if cyclic_neighbours(comps, o, u) {
            return Some(vec![id]);
        }
    }
    for (&i, &(oi, ui, si)) in &places {
        for (&j, &(oj, uj, sj)) in places.range(i + 1..) {
            if si != sj && cyclic_neighbours(comps, oi, oj) && cyclic_neighbours(comps, ui, uj) {
                return Some(vec![i, j]);
            }
        }
    }
    None
}
