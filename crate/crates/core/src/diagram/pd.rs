use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::gauss::{GaussCode, Visit};
use super::{invalid, DiagramError};

/// Planar diagram code. Each crossing lists its four arc labels
/// counterclockwise, starting from the incoming under-strand. The over strand
/// runs from slot 3 to slot 1 at a positive crossing and from slot 1 to slot 3
/// at a negative one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
    /// The strand walk, computed once at validation: for each crossing its
    /// sign, plus the Gauss word.
    signs: Vec<i8>,
    walk: Vec<Visit>,
}

impl PdCode {
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self, DiagramError> {
        let (signs, walk) = trace(&crossings)?;
        Ok(Self { crossings, signs, walk })
    }

    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            signs: Vec::new(),
            walk: Vec::new(),
        }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Sign of each crossing, in input order.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| i64::from(s)).sum()
    }

    /// Gauss code with crossing `k` (0-based in the PD list) named `k + 1`.
    pub fn to_gauss(&self) -> GaussCode {
        GaussCode::new(self.walk.clone()).expect("walk of a validated PD code")
    }

    /// Mirror image: the old over strand becomes the under strand, so each
    /// tuple is rotated to start at the old over strand's incoming arc.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], &s)| if s > 0 { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        Self::new(crossings).expect("mirror of a valid code")
    }

    /// Relabels arcs `1..=2n` in the order the strand traverses them, the arc
    /// entering the first crossing from below being `1`.
    pub fn relabeled(&self) -> Self {
        let n = self.crossings.len();
        if n == 0 {
            return self.clone();
        }
        let occ = occurrences(&self.crossings);
        let mut rename: HashMap<u32, u32> = HashMap::new();
        let (mut ci, mut slot) = (0usize, 0usize);
        for k in 1..=2 * n as u32 {
            let label = self.crossings[ci][slot];
            rename.insert(label, k);
            let out = (slot + 2) % 4;
            let out_label = self.crossings[ci][out];
            let p = &occ[&out_label];
            (ci, slot) = if p[0] == (ci, out) { p[1] } else { p[0] };
        }
        let crossings = self
            .crossings
            .iter()
            .map(|x| x.map(|l| rename[&l]))
            .collect();
        Self::new(crossings).expect("relabeling preserves validity")
    }
}

fn occurrences(crossings: &[[u32; 4]]) -> HashMap<u32, Vec<(usize, usize)>> {
    let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (ci, x) in crossings.iter().enumerate() {
        for (slot, &label) in x.iter().enumerate() {
            occ.entry(label).or_default().push((ci, slot));
        }
    }
    occ
}

/// Walks the strand from the incoming under-arc of the first crossing.
fn trace(crossings: &[[u32; 4]]) -> Result<(Vec<i8>, Vec<Visit>), DiagramError> {
    if crossings.is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    let occ = occurrences(crossings);
    let mut labels: Vec<_> = occ.iter().collect();
    labels.sort();
    for (label, places) in labels {
        if *label == 0 {
            return invalid("arc labels must be positive");
        }
        if places.len() != 2 {
            return invalid(format!("arc {label} occurs {} times", places.len()));
        }
    }
    let other_end = |label: u32, here: (usize, usize)| -> (usize, usize) {
        let p = &occ[&label];
        if p[0] == here {
            p[1]
        } else {
            p[0]
        }
    };
    let n = crossings.len();
    let mut signs = vec![0i8; n];
    let mut visited = vec![[false; 2]; n];
    let mut walk = Vec::with_capacity(2 * n);
    let (mut ci, mut slot) = (0usize, 0usize);
    loop {
        let over = slot % 2 == 1;
        if visited[ci][usize::from(over)] {
            break;
        }
        visited[ci][usize::from(over)] = true;
        if over {
            signs[ci] = if slot == 3 { 1 } else { -1 };
        }
        walk.push((ci, over));
        let out = (slot + 2) % 4;
        let next = other_end(crossings[ci][out], (ci, out));
        if next.1 == 2 {
            return invalid(format!("arc {} leaves two crossings", crossings[ci][out]));
        }
        (ci, slot) = next;
    }
    if (ci, slot) != (0, 0) || walk.len() != 2 * n {
        return invalid("code has more than one component");
    }
    let visits = walk
        .into_iter()
        .map(|(c, over)| Visit::new(c as u32 + 1, over, signs[c]))
        .collect();
    Ok((signs, visits))
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "[{},{},{},{}]", x[0], x[1], x[2], x[3])?;
        }
        f.write_str("]")
    }
}

impl FromStr for PdCode {
    type Err = DiagramError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0usize;
        let err = |position: usize, message: &str| DiagramError::Parse {
            position,
            message: message.into(),
        };
        let ws = |i: &mut usize| {
            while *i < chars.len() && chars[*i].is_whitespace() {
                *i += 1;
            }
        };
        let expect = |i: &mut usize, c: char| -> Result<(), DiagramError> {
            ws(i);
            if chars.get(*i) == Some(&c) {
                *i += 1;
                Ok(())
            } else {
                Err(err(*i, &format!("expected '{c}'")))
            }
        };
        expect(&mut i, '[')?;
        let mut crossings = Vec::new();
        ws(&mut i);
        if chars.get(i) == Some(&']') {
            i += 1;
        } else {
            loop {
                expect(&mut i, '[')?;
                let mut x = [0u32; 4];
                for (k, slot) in x.iter_mut().enumerate() {
                    if k > 0 {
                        expect(&mut i, ',')?;
                    }
                    ws(&mut i);
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(err(i, "expected an arc label"));
                    }
                    *slot = chars[start..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| err(start, "arc label out of range"))?;
                }
                expect(&mut i, ']')?;
                crossings.push(x);
                ws(&mut i);
                match chars.get(i) {
                    Some(',') => i += 1,
                    Some(']') => {
                        i += 1;
                        break;
                    }
                    _ => return Err(err(i, "expected ',' or ']'")),
                }
            }
        }
        ws(&mut i);
        if i != chars.len() {
            return Err(err(i, "trailing characters"));
        }
        Self::new(crossings)
    }
}
