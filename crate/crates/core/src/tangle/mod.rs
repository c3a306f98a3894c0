//! Arborescent knots from weighted caterpillar trees.

mod build;
mod pattern;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagram::PdCode;

use build::Tangle;

pub use pattern::{
    closed_formula, parameters_for, pattern_parameters, pattern_tree, realize, realize_within, Realization,
    SearchBounds,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("weights do not follow the pattern: {0}")]
    PatternMismatch(String),
    #[error("no realization found within {0}")]
    SearchExhausted(String),
    #[error("target is not an even polynomial")]
    NotEven,
    #[error("target has constant term {0}, expected 1")]
    BadConstantTerm(String),
    #[error("tree text error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

/// A planar tree with an integer weight (signed half twists) per vertex.
/// Vertex 0 is the root; `parent[v] < v` for every other vertex, and the
/// children of a vertex are ordered by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedTree {
    weights: Vec<i64>,
    parent: Vec<Option<usize>>,
}

impl WeightedTree {
    pub fn new(weights: Vec<i64>, parent: Vec<Option<usize>>) -> Result<Self, TangleError> {
        if weights.len() != parent.len() {
            return Err(TangleError::InvalidTree("one parent entry per vertex".into()));
        }
        for (v, p) in parent.iter().enumerate() {
            match (v, p) {
                (0, None) => {}
                (0, Some(_)) => return Err(TangleError::InvalidTree("vertex 0 is the root".into())),
                (_, None) => return Err(TangleError::InvalidTree(format!("vertex {v} has no parent"))),
                (_, Some(p)) if *p >= v => {
                    return Err(TangleError::InvalidTree(format!("parent of {v} must precede it")))
                }
                _ => {}
            }
        }
        Ok(Self { weights, parent })
    }

    pub fn empty() -> Self {
        Self {
            weights: Vec::new(),
            parent: Vec::new(),
        }
    }

    /// A caterpillar: spine vertices in order, each with its leaf weights.
    /// Spine vertex `k + 1` hangs off spine vertex `k`; its leaves come first
    /// among the children of the vertex, then the next spine vertex.
    pub fn caterpillar(spine: &[(i64, Vec<i64>)]) -> Self {
        let mut weights = Vec::new();
        let mut parent = Vec::new();
        let mut prev_spine = None;
        for (w, leaves) in spine {
            let v = weights.len();
            weights.push(*w);
            parent.push(prev_spine);
            for &l in leaves {
                weights.push(l);
                parent.push(Some(v));
            }
            prev_spine = Some(v);
        }
        // children must follow their parent; leaves were pushed right after it
        Self { weights, parent }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (v + 1..self.len()).filter(move |&c| self.parent[c] == Some(v))
    }

    /// Spine and leaves, if the tree is a caterpillar. The spine continues
    /// through the last child of each spine vertex, so a trailing leaf group
    /// of one is read as a spine vertex: `(1 [2])` prints as `(1 2)`.
    pub fn spine(&self) -> Option<Vec<(i64, Vec<i64>)>> {
        if self.is_empty() {
            return Some(Vec::new());
        }
        let mut out = Vec::new();
        let mut v = 0;
        loop {
            let kids: Vec<usize> = self.children(v).collect();
            let (next, leaves) = match kids.split_last() {
                Some((&last, rest)) => (Some(last), rest),
                None => (None, &[][..]),
            };
            if leaves.iter().any(|&c| self.children(c).next().is_some()) {
                return None;
            }
            out.push((self.weights[v], leaves.iter().map(|&c| self.weights[c]).collect()));
            match next {
                Some(n) => v = n,
                None => return Some(out),
            }
        }
    }

    fn tangle(&self, v: usize) -> Tangle {
        self.children(v)
            .map(|c| self.tangle(c).reflect())
            .fold(None, |acc: Option<Tangle>, t| Some(match acc {
                None => t,
                Some(a) => a.add(t),
            }))
            .map_or_else(|| Tangle::twist(self.weights[v]), |kids| kids.add(Tangle::twist(self.weights[v])))
    }
}

/// Assembles the arborescent diagram: a vertex of weight `w` is a band with
/// `w` half twists, and every child tangle is reflected and added in front
/// of it. The knot is the numerator closure of the root's tangle.
pub fn tree_to_diagram(t: &WeightedTree) -> Result<PdCode, TangleError> {
    if t.is_empty() {
        return Ok(PdCode::unknot());
    }
    t.tangle(0)
        .numerator()
        .ok_or_else(|| TangleError::InvalidTree(format!("{t} closes to a link, not a knot")))
}

impl fmt::Display for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(spine) = self.spine() else {
            return write!(f, "{:?}/{:?}", self.weights, self.parent);
        };
        f.write_str("(")?;
        for (i, (w, leaves)) in spine.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{w}")?;
            if !leaves.is_empty() {
                let l: Vec<String> = leaves.iter().map(i64::to_string).collect();
                write!(f, " [{}]", l.join(" "))?;
            }
        }
        f.write_str(")")
    }
}

impl FromStr for WeightedTree {
    type Err = TangleError;

    /// `(w1 [l l] w2 w3 [l])`: spine weights in order, each optionally
    /// followed by its bracketed leaf weights. `()` is the empty tree.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |position: usize, message: &str| TangleError::Parse {
            position,
            message: message.into(),
        };
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        let ws = |i: &mut usize| {
            while *i < chars.len() && chars[*i].is_whitespace() {
                *i += 1;
            }
        };
        let int = |i: &mut usize| -> Result<i64, TangleError> {
            let start = *i;
            if matches!(chars.get(*i), Some('-' | '+')) {
                *i += 1;
            }
            while *i < chars.len() && chars[*i].is_ascii_digit() {
                *i += 1;
            }
            chars[start..*i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| err(start, "expected an integer weight"))
        };
        ws(&mut i);
        if chars.get(i) != Some(&'(') {
            return Err(err(i, "expected '('"));
        }
        i += 1;
        let mut spine: Vec<(i64, Vec<i64>)> = Vec::new();
        loop {
            ws(&mut i);
            match chars.get(i) {
                Some(')') => {
                    i += 1;
                    break;
                }
                Some('[') => {
                    let Some(last) = spine.last_mut() else {
                        return Err(err(i, "leaves must follow a spine weight"));
                    };
                    if !last.1.is_empty() {
                        return Err(err(i, "one leaf group per spine vertex"));
                    }
                    i += 1;
                    loop {
                        ws(&mut i);
                        if chars.get(i) == Some(&']') {
                            i += 1;
                            break;
                        }
                        let w = int(&mut i)?;
                        last.1.push(w);
                    }
                    if last.1.is_empty() {
                        return Err(err(i - 1, "empty leaf group"));
                    }
                }
                None => return Err(err(i, "unclosed '('")),
                _ => {
                    let w = int(&mut i)?;
                    spine.push((w, Vec::new()));
                }
            }
        }
        ws(&mut i);
        if i != chars.len() {
            return Err(err(i, "trailing characters"));
        }
        Ok(Self::caterpillar(&spine))
    }
}
