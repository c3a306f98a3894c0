//! Independent brute-force checks used by the integration and acceptance
//! tests. Everything here works on plain `i128` coefficient vectors (lowest
//! degree first) and shares no code with the library.

#![allow(dead_code)]

/// `a * b`
pub fn mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn trim(mut a: Vec<i128>) -> Vec<i128> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn eval(a: &[i128], x: i128) -> i128 {
    a.iter().rev().fold(0, |acc, c| acc * x + c)
}

/// `a(-z)`
pub fn negate_var(a: &[i128]) -> Vec<i128> {
    a.iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
        .collect()
}

/// Exact quotient in `Z[z]`, or `None`.
pub fn exact_div(a: &[i128], d: &[i128]) -> Option<Vec<i128>> {
    let dd = d.len().checked_sub(1)?;
    let lc = *d.last()?;
    let mut rem = a.to_vec();
    if rem.len() <= dd {
        return rem.iter().all(|&c| c == 0).then(Vec::new);
    }
    let mut q = vec![0i128; rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        if rem[i] % lc != 0 {
            return None;
        }
        let c = rem[i] / lc;
        for (j, dc) in d.iter().enumerate() {
            rem[i - dd + j] -= c * dc;
        }
        q[i - dd] = c;
    }
    rem.iter().all(|&c| c == 0).then(|| trim(q))
}

/// Positive divisors of `n != 0` by trial division.
pub fn positive_divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1i128;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Kronecker's method: search for a divisor of degree `1..=deg/2` by trying
/// every assignment of divisors of `f(x_i)` at `d + 1` sample points and
/// interpolating. Returns a proper divisor if one exists.
pub fn kronecker_divisor(f: &[i128]) -> Option<Vec<i128>> {
    let n = f.len().checked_sub(1)?;
    for d in 1..=n / 2 {
        // sample points with small nonzero values, fewest divisors first
        let mut pts: Vec<(usize, i128, i128)> = (-12i128..=12)
            .filter_map(|x| {
                let v = eval(f, x);
                (v != 0).then(|| (positive_divisors(v).len(), x, v))
            })
            .collect();
        pts.sort();
        if pts.len() < d + 1 {
            // f has more than 12 integer roots only if it is zero
            continue;
        }
        let pts: Vec<(i128, Vec<i128>)> = pts[..=d]
            .iter()
            .map(|&(_, x, v)| {
                let pos = positive_divisors(v);
                let all = pos.iter().flat_map(|&q| [q, -q]).collect();
                (x, all)
            })
            .collect();
        let mut table: Vec<Vec<i128>> = Vec::new();
        if let Some(g) = search(f, d, &pts, &mut table) {
            return Some(g);
        }
    }
    None
}

// Depth-first over value choices, maintaining the Newton divided-difference
// table; divided differences of an integer polynomial at integer points are
// integers, which prunes most branches early.
fn search(f: &[i128], d: usize, pts: &[(i128, Vec<i128>)], table: &mut Vec<Vec<i128>>) -> Option<Vec<i128>> {
    let k = table.len();
    if k == d + 1 {
        let newton: Vec<i128> = table.iter().map(|row| *row.last().unwrap()).collect();
        let g = newton_to_coeffs(&newton, &pts.iter().map(|p| p.0).collect::<Vec<_>>());
        if g.len() != d + 1 {
            return None;
        }
        return exact_div(f, &g).map(|_| g);
    }
    for (idx, &v) in pts[k].1.iter().enumerate() {
        // g and -g are equivalent: fix the sign of g(x_0)
        if k == 0 && idx % 2 == 1 {
            continue;
        }
        let mut row = vec![v];
        let mut ok = true;
        for j in 0..k {
            let num = row[j] - table[k - 1][j];
            let den = pts[k].0 - pts[k - 1 - j].0;
            if num % den != 0 {
                ok = false;
                break;
            }
            row.push(num / den);
        }
        if !ok {
            continue;
        }
        table.push(row);
        if let Some(g) = search(f, d, pts, table) {
            return Some(g);
        }
        table.pop();
    }
    None
}

fn newton_to_coeffs(newton: &[i128], xs: &[i128]) -> Vec<i128> {
    let mut coeffs = vec![0i128];
    let mut basis = vec![1i128];
    for (i, &c) in newton.iter().enumerate() {
        if coeffs.len() < basis.len() {
            coeffs.resize(basis.len(), 0);
        }
        for (j, b) in basis.iter().enumerate() {
            coeffs[j] += c * b;
        }
        basis = mul(&basis, &[-xs[i], 1]);
    }
    trim(coeffs)
}

pub fn content(a: &[i128]) -> i128 {
    a.iter().fold(0i128, |g, &c| gcd(g, c))
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Irreducibility over `Z` for degree <= 7, by Kronecker search.
pub fn is_irreducible(f: &[i128]) -> bool {
    f.len() >= 2 && content(f) == 1 && kronecker_divisor(f).is_none()
}
