//! Independent reference implementations used by the integration tests.
//! Everything here is written from the definitions, not from the library's
//! algorithms.

#![allow(dead_code)]

use skewcode::field::GaloisField;
use skewcode::poly::Poly;
use skewcode::polymat::PolyMatrix;
use skewcode::skew::{RingContext, SkewPoly};

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<Poly>], f: &GaloisField) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one(f);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero(f);
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, p)| p.clone()).collect()).collect();
        let term = &m[0][c] * &cofactor_det(&minor, f);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == k).map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect()).collect()
}

/// Full-size minors by cofactor expansion.
pub fn maximal_minors(m: &PolyMatrix) -> Vec<Poly> {
    let f = m.field();
    subsets(m.cols(), m.rows())
        .into_iter()
        .map(|cols| {
            let sub: Vec<Vec<Poly>> = (0..m.rows()).map(|i| cols.iter().map(|&j| m[(i, j)].clone()).collect()).collect();
            cofactor_det(&sub, f)
        })
        .collect()
}

/// Coprime maximal minors, by the Euclidean algorithm.
pub fn is_basic(m: &PolyMatrix) -> bool {
    let mut g: Option<Poly> = None;
    for p in maximal_minors(m).into_iter().filter(|p| !p.is_zero()) {
        g = Some(match g {
            None => p,
            Some(h) => euclid(&h, &p),
        });
    }
    g.is_some_and(|g| g.degree() == Some(0))
}

fn euclid(a: &Poly, b: &Poly) -> Poly {
    if b.is_zero() {
        return a.clone();
    }
    let (_, r) = a.div_rem(b).unwrap();
    euclid(b, &r)
}

/// Row degrees add up to the largest minor degree.
pub fn is_minimal(m: &PolyMatrix) -> bool {
    let ext = maximal_minors(m).iter().filter_map(Poly::degree).max().unwrap();
    let sum: usize = (0..m.rows()).map(|i| m.row(i).iter().filter_map(Poly::degree).max().unwrap()).sum();
    ext == sum
}

/// `σ(a)` for the default cycle: the value at idempotent `i` moves to `i+1`.
pub fn rotate(a: &[u32], times: usize) -> Vec<u32> {
    let n = a.len();
    (0..n).map(|i| a[(i + n - times % n) % n]).collect()
}

/// Term-by-term skew product for the default cycle.
pub fn skew_mul(f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
    let ctx = f.ctx();
    let fld = ctx.field();
    let mut acc = SkewPoly::zero(ctx);
    for (i, a) in f.coeffs().iter().enumerate() {
        for (j, b) in g.coeffs().iter().enumerate() {
            let c: Vec<u32> = rotate(a, j).iter().zip(b).map(|(&x, &y)| fld.mul(x, y)).collect();
            let mut coeffs = vec![vec![0; ctx.n()]; i + j + 1];
            coeffs[i + j] = c;
            acc = &acc + &SkewPoly::new(ctx, coeffs).unwrap();
        }
    }
    acc
}

/// `ξ(g) = Σ_ν ξ(z^ν)·diag(a_ν)` with
/// `ξ(z^{nl+i}) = t^l [[0, I_{n−i}], [t I_i, 0]]`.
pub fn xi_by_blocks(g: &SkewPoly) -> PolyMatrix {
    let ctx = g.ctx();
    let f = ctx.field();
    let n = ctx.n();
    let mut acc = PolyMatrix::zeros(f, n, n);
    for (nu, a) in g.coeffs().iter().enumerate() {
        let (l, i) = (nu / n, nu % n);
        let mut zpow = PolyMatrix::zeros(f, n, n);
        for r in 0..n - i {
            zpow[(r, r + i)] = Poly::monomial(f, 1, l);
        }
        for r in 0..i {
            zpow[(n - i + r, r)] = Poly::monomial(f, 1, l + 1);
        }
        let mut diag = PolyMatrix::zeros(f, n, n);
        for b in 0..n {
            diag[(b, b)] = Poly::constant(f, a[b]);
        }
        acc = &acc + &(&zpow * &diag);
    }
    acc
}

/// Lagrange basis polynomial at `ω^{a−1}` among the `n`-th roots of unity.
pub fn lagrange_idempotent(ctx: &RingContext, a: usize) -> Poly {
    let f = ctx.field();
    let w = ctx.omega().unwrap();
    let pts: Vec<u32> = (0..ctx.n()).map(|b| f.pow(w, b as u64)).collect();
    let x0 = pts[a - 1];
    let mut num = Poly::one(f);
    let mut den = 1;
    for (b, &p) in pts.iter().enumerate() {
        if b != a - 1 {
            num = &num * &Poly::new(f, vec![f.neg(p), 1]);
            den = f.mul(den, f.sub(x0, p));
        }
    }
    num.scale(f.inv(den).unwrap())
}

/// Minimum of `wt(uG)` over all nonzero messages of degree `≤ max_deg`.
pub fn brute_force_distance(g: &PolyMatrix, max_deg: usize) -> usize {
    let f = g.field();
    let (k, n) = (g.rows(), g.cols());
    let q = f.order() as usize;
    let digits = k * (max_deg + 1);
    let total = q.pow(digits as u32);
    let mut best = usize::MAX;
    for code in 1..total {
        let mut x = code;
        let u: Vec<Poly> = (0..k)
            .map(|_| {
                let cs: Vec<u32> = (0..=max_deg)
                    .map(|_| {
                        let d = (x % q) as u32;
                        x /= q;
                        d
                    })
                    .collect();
                Poly::new(f, cs)
            })
            .collect();
        let w: usize = (0..n)
            .map(|j| (0..k).fold(Poly::zero(f), |acc, i| &acc + &(&u[i] * &g[(i, j)])).coeffs().iter().filter(|&&c| c != 0).count())
            .sum();
        best = best.min(w);
    }
    best
}

/// Properties (i)–(vii) of a prescribed-degree matrix, from their statement.
pub fn degree_properties_hold(m: &PolyMatrix, n: usize, js: &[usize], ds: &[usize]) -> bool {
    if m.rows() != n - 1 || m.cols() != n {
        return false;
    }
    for i in 1..n {
        let (ji, di) = (js[i - 1], ds[i - 1]);
        for j in 1..=n {
            let e = &m[(i - 1, j - 1)];
            let deg = e.degree().map(|d| d as i64).unwrap_or(-1);
            let degree_ok = if j < ji {
                deg <= di as i64
            } else if j == ji {
                deg == di as i64
            } else {
                deg < di as i64
            };
            let below_ok = j >= i || e.is_zero() || (j == ji && *e == Poly::monomial(m.field(), 1, di));
            let vanish_ok = j >= i || e.coeff(0) == 0;
            let const_ok = ji >= i || j == ji || deg <= 0;
            if !(degree_ok && below_ok && vanish_ok && const_ok) {
                return false;
            }
        }
        if m[(i - 1, i - 1)].coeff(0) != 1 {
            return false;
        }
    }
    true
}

/// Distinct rows, distinct columns, `(j − i) mod n = r`.
pub fn rook_valid(n: usize, values: &[usize], pairs: &[(usize, usize)]) -> bool {
    let rows: std::collections::BTreeSet<_> = pairs.iter().map(|p| p.0).collect();
    let cols: std::collections::BTreeSet<_> = pairs.iter().map(|p| p.1).collect();
    pairs.len() == values.len()
        && rows.len() == pairs.len()
        && cols.len() == pairs.len()
        && pairs.iter().zip(values).all(|(&(i, j), &r)| (1..=n).contains(&i) && (1..=n).contains(&j) && (j + n - i) % n == r)
}

/// Rightmost argmax columns of `n·deg(m_ab) − a + b` are distinct over the
/// nonzero rows.
pub fn semi_reduced_by_degrees(m: &PolyMatrix) -> bool {
    let n = m.rows() as i64;
    let mut seen = std::collections::BTreeSet::new();
    for a in 0..m.rows() {
        let best = (0..m.cols()).filter_map(|b| m[(a, b)].degree().map(|d| (n * d as i64 - a as i64 + b as i64, b))).max();
        if let Some((_, b)) = best {
            if !seen.insert(b) {
                return false;
            }
        }
    }
    true
}

/// Number of multisets of size `k` drawn from `n` symbols.
pub fn multiset_count(n: usize, k: usize) -> usize {
    (1..=k).fold(1u128, |acc, i| acc * (n + i - 1) as u128 / i as u128) as usize
}
