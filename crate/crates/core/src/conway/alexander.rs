//! Alexander polynomial from the Wirtinger presentation, and the change of
//! variables to the Conway polynomial.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::ConwayError;
use crate::diagram::GaussCode;
use crate::{IntPoly, LaurentPoly};

/// Fox-calculus matrix of the Wirtinger relations: one row per crossing, one
/// column per over-arc (arc `m` starts after the `m`-th under visit). Entries
/// are polynomials in `t`.
pub fn alexander_matrix(g: &GaussCode) -> Vec<Vec<IntPoly>> {
    let visits = g.visits();
    let n = g.crossing_count();
    if n == 0 {
        return Vec::new();
    }
    let unders: Vec<usize> = visits
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.over)
        .map(|(i, _)| i)
        .collect();
    // arc containing position p: the last under visit strictly before p, cyclically
    let arc_at = |p: usize| -> usize {
        match unders.iter().rposition(|&u| u < p) {
            Some(m) => m,
            None => n - 1,
        }
    };
    let ids: Vec<u32> = {
        let mut v: Vec<u32> = visits.iter().map(|v| v.id).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let row_of = |id: u32| ids.binary_search(&id).expect("known crossing");
    let one = IntPoly::one();
    let t = IntPoly::var();
    let mut m = vec![vec![IntPoly::zero(); n]; n];
    for (p, v) in visits.iter().enumerate() {
        if v.over {
            continue;
        }
        let row = row_of(v.id);
        let over_pos = visits
            .iter()
            .position(|w| w.id == v.id && w.over)
            .expect("validated code");
        let k = arc_at(over_pos);
        let m_in = arc_at(p);
        let m_out = unders.iter().position(|&u| u == p).unwrap();
        let (ck, ci, cj) = if v.sign > 0 {
            (&one - &t, t.clone(), -one.clone())
        } else {
            (&t - &one, one.clone(), -t.clone())
        };
        m[row][k] = &m[row][k] + &ck;
        m[row][m_in] = &m[row][m_in] + &ci;
        m[row][m_out] = &m[row][m_out] + &cj;
    }
    m
}

/// Fraction-free (Bareiss) determinant over `Z[t]`.
pub fn bareiss_determinant(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let size = m.len();
    if size == 0 {
        return IntPoly::one();
    }
    let mut negate = false;
    let mut prev = IntPoly::one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss quotients are exact");
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[size - 1][size - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Normalized Alexander polynomial: symmetric under `t -> 1/t`, `Delta(1) = 1`.
pub fn alexander_polynomial(g: &GaussCode) -> Result<LaurentPoly<BigInt>, ConwayError> {
    let mut m = alexander_matrix(g);
    if m.len() > 1 {
        m.pop();
        for row in &mut m {
            row.pop();
        }
    } else {
        m.clear();
    }
    normalize(&bareiss_determinant(m))
}

/// Picks the representative of `+-t^k * delta` that is symmetric with value 1 at `t = 1`.
pub fn normalize(delta: &IntPoly) -> Result<LaurentPoly<BigInt>, ConwayError> {
    let l = LaurentPoly::from_poly(delta);
    let (_, p) = l.split_monomial();
    let deg = p.degree().ok_or_else(|| ConwayError::NormalizationFailure("determinant is zero".into()))?;
    if deg % 2 == 1 {
        return Err(ConwayError::NormalizationFailure(format!("{delta} has odd span")));
    }
    let mut sym = LaurentPoly::new(-(deg as i64 / 2), p.into_coeffs());
    if !sym.is_symmetric() {
        return Err(ConwayError::NormalizationFailure(format!("{delta} is not symmetric")));
    }
    let at_one = sym.eval_one();
    if !at_one.abs().is_one() {
        return Err(ConwayError::NormalizationFailure(format!("Delta(1) = {at_one}")));
    }
    if at_one.is_negative() {
        sym = sym.neg();
    }
    Ok(sym)
}

/// Rewrites a symmetric Laurent polynomial in `z` using `t + 1/t = z^2 + 2`.
pub fn alexander_to_conway(delta: &LaurentPoly<BigInt>) -> Result<IntPoly, ConwayError> {
    if !delta.is_symmetric() {
        return Err(ConwayError::NormalizationFailure(format!("{delta} is not symmetric")));
    }
    let top = delta.highest_exponent().unwrap_or(0).max(0);
    // T_k(s) = t^k + t^-k as a polynomial in x = z^2, with s = x + 2
    let s = IntPoly::from_i64s(&[2, 1]);
    let mut prev = IntPoly::constant(BigInt::from(2));
    let mut cur = s.clone();
    let mut in_x = IntPoly::constant(delta.coeff(0));
    for k in 1..=top {
        in_x = &in_x + &cur.scale(&delta.coeff(k));
        let next = &(&s * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(in_x.inflate(2))
}
