//! The matrix ring `M ⊂ F[t]^{n×n}` of matrices whose strictly lower
//! triangle vanishes at `t = 0`, and the isomorphism `ξ: A[z;σ] → M`
//! (default cyclic `σ`, `t = z^n`).
//!
//! Row `a` of `ξ(g)` encodes the component `e_a g`, so left ideals of the
//! skew ring correspond to row spaces here.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::GaloisField;
use crate::poly::Poly;
use crate::polymat::PolyMatrix;
use crate::skew::{RingContext, SkewPoly};

/// An element of `M`.
#[derive(Clone, PartialEq, Eq)]
pub struct MMatrix {
    ctx: RingContext,
    m: PolyMatrix,
}

impl fmt::Debug for MMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for MMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl MMatrix {
    /// Wraps an `n × n` matrix, checking `m_ab(0) = 0` for `b < a`.
    pub fn new(ctx: &RingContext, m: PolyMatrix) -> Result<Self> {
        let n = ctx.n();
        if m.rows() != n || m.cols() != n {
            return Err(Error::SizeError(format!("expected {n}x{n}, got {}x{}", m.rows(), m.cols())));
        }
        if m.field() != ctx.field() {
            return Err(Error::FieldMismatch);
        }
        for a in 0..n {
            for b in 0..a {
                if m[(a, b)].coeff(0) != 0 {
                    return Err(Error::NotInRing(format!("entry ({}, {}) does not vanish at t = 0", a + 1, b + 1)));
                }
            }
        }
        Ok(MMatrix { ctx: ctx.clone(), m })
    }

    pub fn identity(ctx: &RingContext) -> Self {
        MMatrix { ctx: ctx.clone(), m: PolyMatrix::identity(ctx.field(), ctx.n()) }
    }

    pub fn zero(ctx: &RingContext) -> Self {
        MMatrix { ctx: ctx.clone(), m: PolyMatrix::zeros(ctx.field(), ctx.n(), ctx.n()) }
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn field(&self) -> &GaloisField {
        self.ctx.field()
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> PolyMatrix {
        self.m
    }

    /// Entry `m_ab`, 1-based.
    pub fn entry(&self, a: usize, b: usize) -> &Poly {
        &self.m[(a - 1, b - 1)]
    }

    pub fn checked_mul(&self, rhs: &MMatrix) -> Result<MMatrix> {
        if self.ctx != rhs.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(MMatrix { ctx: self.ctx.clone(), m: self.m.checked_mul(&rhs.m)? })
    }

    pub fn checked_add(&self, rhs: &MMatrix) -> Result<MMatrix> {
        if self.ctx != rhs.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(MMatrix { ctx: self.ctx.clone(), m: &self.m + &rhs.m })
    }

    /// 1-based indices of the nonzero rows.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&a| !self.m.is_zero_row(a)).map(|a| a + 1).collect()
    }

    /// Every nonzero row `a` has `m_aa(0) ≠ 0`.
    pub fn is_delay_free(&self) -> bool {
        self.support().into_iter().all(|a| self.entry(a, a).coeff(0) != 0)
    }

    pub fn degree_matrix(&self) -> DegreeMatrix {
        degree_matrix(self)
    }

    pub fn is_semi_reduced(&self) -> bool {
        self.degree_matrix().is_semi_reduced()
    }

    /// `det` is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.m.det().expect("square").degree() == Some(0)
    }

    /// Delay-free with basic nonzero rows.
    pub fn is_basic_member(&self) -> bool {
        if !self.is_delay_free() {
            return false;
        }
        let rows: Vec<usize> = self.support().iter().map(|a| a - 1).collect();
        rows.is_empty() || self.m.select_rows(&rows).is_basic().unwrap_or(false)
    }

    /// The stacked nonzero rows as a `k × n` matrix over `F[t]`.
    pub fn support_rows(&self) -> PolyMatrix {
        let rows: Vec<usize> = self.support().iter().map(|a| a - 1).collect();
        self.m.select_rows(&rows)
    }

    pub fn to_text(&self) -> String {
        self.m.to_text('t')
    }

    pub fn parse_text(ctx: &RingContext, s: &str) -> Result<MMatrix> {
        Self::new(ctx, PolyMatrix::parse_text(ctx.field(), s, 't')?)
    }

    /// Nested coefficient lists, row-major.
    pub fn to_coeff_lists(&self) -> Vec<Vec<Vec<u32>>> {
        self.m.to_coeff_lists()
    }

    pub fn from_coeff_lists(ctx: &RingContext, rows: &[Vec<Vec<u64>>]) -> Result<MMatrix> {
        Self::new(ctx, PolyMatrix::from_coeff_lists(ctx.field(), rows)?)
    }
}

/// Panics when the operands live in different rings.
impl std::ops::Mul for &MMatrix {
    type Output = MMatrix;
    fn mul(self, rhs: &MMatrix) -> MMatrix {
        self.checked_mul(rhs).expect("operands share a ring")
    }
}

fn require_cycle(ctx: &RingContext) -> Result<()> {
    if ctx.is_default_cycle() {
        Ok(())
    } else {
        Err(Error::NotCyclicSigma)
    }
}

/// `ξ(g)`: the coefficient of `z^{nl+i}` at idempotent `b` lands in entry
/// `(b−i, b)` with factor `t^l`, or in `(b−i+n, b)` with `t^{l+1}` when
/// `b − i < 1`.
pub fn xi(g: &SkewPoly) -> Result<MMatrix> {
    let ctx = g.ctx();
    require_cycle(ctx)?;
    let n = ctx.n();
    let f = ctx.field();
    let mut coeffs: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); n]; n];
    for (nu, c) in g.coeffs().iter().enumerate() {
        let (l, i) = (nu / n, nu % n);
        for b in 0..n {
            if c[b] == 0 {
                continue;
            }
            let (a, e) = if b >= i { (b - i, l) } else { (b + n - i, l + 1) };
            let slot = &mut coeffs[a][b];
            if slot.len() <= e {
                slot.resize(e + 1, 0);
            }
            slot[e] = f.add(slot[e], c[b]);
        }
    }
    let rows = coeffs.into_iter().map(|r| r.into_iter().map(|cs| Poly::new(f, cs)).collect()).collect();
    MMatrix::new(ctx, PolyMatrix::from_rows(f, rows)?)
}

/// `ξ^{-1}(M)`: inverse of [`xi`].
pub fn xi_inv(m: &MMatrix) -> Result<SkewPoly> {
    let ctx = m.ctx();
    require_cycle(ctx)?;
    let n = ctx.n();
    let mut coeffs: Vec<Vec<u32>> = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for (e, &c) in m.m[(a, b)].coeffs().iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let nu = if a <= b { n * e + (b - a) } else { n * (e - 1) + (b + n - a) };
                if coeffs.len() <= nu {
                    coeffs.resize(nu + 1, vec![0; n]);
                }
                coeffs[nu][b] = c;
            }
        }
    }
    SkewPoly::new(ctx, coeffs)
}

/// `D(M)_ab = n·deg m_ab − a + b`, or `None` (−∞) for a zero entry.
/// Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMatrix {
    n: usize,
    entries: Vec<Vec<Option<i64>>>,
}

impl DegreeMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> Option<i64> {
        self.entries[a - 1][b - 1]
    }

    pub fn rows(&self) -> &[Vec<Option<i64>>] {
        &self.entries
    }

    /// `(δ_a, b_a)`: the row maximum and its rightmost column.
    pub fn row_max(&self, a: usize) -> Option<(i64, usize)> {
        let mut best: Option<(i64, usize)> = None;
        for (b, &d) in self.entries[a - 1].iter().enumerate() {
            if let Some(d) = d {
                if best.is_none_or(|(v, _)| d >= v) {
                    best = Some((d, b + 1));
                }
            }
        }
        best
    }

    pub fn is_semi_reduced(&self) -> bool {
        let mut seen = vec![false; self.n];
        for a in 1..=self.n {
            if let Some((_, b)) = self.row_max(a) {
                if std::mem::replace(&mut seen[b - 1], true) {
                    return false;
                }
            }
        }
        true
    }

    /// Text form with `-inf` for −∞.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|d| d.map_or("-inf".to_string(), |v| v.to_string())).collect();
            out.push_str(&line.join(", "));
            out.push('\n');
        }
        out
    }
}

pub fn degree_matrix(m: &MMatrix) -> DegreeMatrix {
    let n = m.n();
    let entries = (0..n).map(|a| (0..n).map(|b| m.m[(a, b)].degree().map(|d| (n * d) as i64 - a as i64 + b as i64)).collect()).collect();
    DegreeMatrix { n, entries }
}

/// The three kinds of elementary units of `M`; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementaryUnit {
    /// `Σ_{i≠a} E_ii + α E_aa`, `α ≠ 0`.
    Scale { a: usize, alpha: u32 },
    /// `I + t^N α E_ab`, `a < b`, `N ≥ 0`.
    Upper { a: usize, b: usize, exp: usize, alpha: u32 },
    /// `I + t^N α E_ab`, `b < a`, `N > 0`.
    Lower { a: usize, b: usize, exp: usize, alpha: u32 },
}

impl ElementaryUnit {
    fn validate(&self, ctx: &RingContext) -> Result<()> {
        let n = ctx.n();
        let f = ctx.field();
        let bad = |msg: &str| Err(Error::InvalidParameters(format!("{self:?}: {msg}")));
        let in_range = |i: usize| (1..=n).contains(&i);
        match *self {
            ElementaryUnit::Scale { a, alpha } => {
                if !in_range(a) || alpha == 0 || !f.contains(alpha) {
                    return bad("needs 1 <= a <= n and a nonzero field element");
                }
            }
            ElementaryUnit::Upper { a, b, alpha, .. } => {
                if !in_range(a) || !in_range(b) || a >= b || !f.contains(alpha) {
                    return bad("needs a < b");
                }
            }
            ElementaryUnit::Lower { a, b, exp, alpha } => {
                if !in_range(a) || !in_range(b) || b >= a || exp == 0 || !f.contains(alpha) {
                    return bad("needs b < a and N > 0");
                }
            }
        }
        Ok(())
    }

    pub fn matrix(&self, ctx: &RingContext) -> Result<MMatrix> {
        self.validate(ctx)?;
        let f = ctx.field();
        let mut m = PolyMatrix::identity(f, ctx.n());
        match *self {
            ElementaryUnit::Scale { a, alpha } => m[(a - 1, a - 1)] = Poly::constant(f, alpha),
            ElementaryUnit::Upper { a, b, exp, alpha } | ElementaryUnit::Lower { a, b, exp, alpha } => {
                m[(a - 1, b - 1)] = Poly::monomial(f, alpha, exp)
            }
        }
        MMatrix::new(ctx, m)
    }

    /// The inverse, again an elementary unit of the same type.
    pub fn inverse(&self, field: &GaloisField) -> ElementaryUnit {
        match *self {
            ElementaryUnit::Scale { a, alpha } => ElementaryUnit::Scale { a, alpha: field.inv(alpha).expect("nonzero scale") },
            ElementaryUnit::Upper { a, b, exp, alpha } => ElementaryUnit::Upper { a, b, exp, alpha: field.neg(alpha) },
            ElementaryUnit::Lower { a, b, exp, alpha } => ElementaryUnit::Lower { a, b, exp, alpha: field.neg(alpha) },
        }
    }

    /// Left multiplication, i.e. the row operation.
    pub fn apply(&self, m: &MMatrix) -> Result<MMatrix> {
        self.validate(m.ctx())?;
        let mut out = m.m.clone();
        match *self {
            ElementaryUnit::Scale { a, alpha } => {
                for p in out.row_mut(a - 1) {
                    *p = p.scale(alpha);
                }
            }
            ElementaryUnit::Upper { a, b, exp, alpha } | ElementaryUnit::Lower { a, b, exp, alpha } => {
                let src: Vec<Poly> = m.m.row(b - 1).to_vec();
                for (p, s) in out.row_mut(a - 1).iter_mut().zip(&src) {
                    *p = &*p + &s.scale(alpha).shift(exp);
                }
            }
        }
        MMatrix::new(m.ctx(), out)
    }
}

/// Output of [`semi_reduce`]: `reduced = unit · input` where
/// `unit = factors[last] ⋯ factors[0]`.
#[derive(Debug, Clone)]
pub struct SemiReduction {
    pub unit: MMatrix,
    pub reduced: MMatrix,
    pub factors: Vec<ElementaryUnit>,
}

/// Brings `m` into semi-reduced form by elementary units.
///
/// Each step takes the first pair of rows `a < b` (lexicographically) whose
/// row maxima sit in the same column `c`, and cancels the leading term of
/// whichever of `m_ac`, `m_bc` has the larger degree-matrix entry.
pub fn semi_reduce(m: &MMatrix) -> SemiReduction {
    let ctx = m.ctx().clone();
    let f = ctx.field().clone();
    let n = ctx.n();
    let mut cur = m.clone();
    let mut unit = MMatrix::identity(&ctx);
    let mut factors = Vec::new();
    loop {
        let d = cur.degree_matrix();
        let maxima: Vec<Option<(i64, usize)>> = (1..=n).map(|a| d.row_max(a)).collect();
        let conflict = (1..=n).find_map(|a| {
            let (_, c) = maxima[a - 1]?;
            (a + 1..=n).find(|&b| maxima[b - 1].is_some_and(|(_, cb)| cb == c)).map(|b| (a, b, c))
        });
        let Some((a, b, c)) = conflict else {
            return SemiReduction { unit, reduced: cur, factors };
        };
        let (mac, mbc) = (cur.entry(a, c).clone(), cur.entry(b, c).clone());
        let (da, db) = (mac.degree().expect("row max"), mbc.degree().expect("row max"));
        let step = if d.get(b, c) < d.get(a, c) {
            let alpha = f.neg(f.div(mac.lead(), mbc.lead()).expect("nonzero lead"));
            ElementaryUnit::Upper { a, b, exp: da - db, alpha }
        } else {
            let alpha = f.neg(f.div(mbc.lead(), mac.lead()).expect("nonzero lead"));
            ElementaryUnit::Lower { a: b, b: a, exp: db - da, alpha }
        };
        cur = step.apply(&cur).expect("valid elementary unit");
        unit = step.apply(&unit).expect("valid elementary unit");
        factors.push(step);
    }
}

/// Replaces the zero rows of a delay-free `m` with basic nonzero rows so that
/// the result is a unit of `M`; the nonzero rows of `m` are kept verbatim.
pub fn complete_to_unit(m: &MMatrix) -> Result<MMatrix> {
    let ctx = m.ctx();
    let f = ctx.field().clone();
    let n = ctx.n();
    let support = m.support();
    let k = support.len();
    if k == 0 {
        return Ok(MMatrix::identity(ctx));
    }
    let g = m.support_rows();
    if !g.is_basic()? {
        return Err(Error::NotBasic);
    }
    if !m.is_delay_free() {
        return Err(Error::NotDelayFree);
    }

    // Column operations bring G to [L | 0]; W tracks G_orig = G · W.
    let mut gc = g.clone();
    let mut w = PolyMatrix::identity(&f, n);
    for r in 0..k {
        loop {
            let nonzero: Vec<usize> = (r..n).filter(|&j| !gc[(r, j)].is_zero()).collect();
            let Some(&piv) = nonzero.iter().min_by_key(|&&j| gc[(r, j)].degree()) else {
                return Err(Error::NotBasic);
            };
            if piv != r {
                swap_cols(&mut gc, r, piv);
                swap_rows(&mut w, r, piv);
            }
            if nonzero.len() == 1 {
                break;
            }
            for j in r + 1..n {
                if gc[(r, j)].is_zero() {
                    continue;
                }
                let (q, _) = gc[(r, j)].div_rem(&gc[(r, r)])?;
                // col j -= q col r ; W row r += q W row j
                for i in 0..k {
                    let v = &gc[(i, j)] - &(&q * &gc[(i, r)]);
                    gc[(i, j)] = v;
                }
                for c in 0..n {
                    let v = &w[(r, c)] + &(&q * &w[(j, c)]);
                    w[(r, c)] = v;
                }
            }
        }
        if gc[(r, r)].degree() != Some(0) {
            return Err(Error::NotBasic);
        }
    }
    let mut hat: Vec<Vec<Poly>> = (k..n).map(|i| w.row(i).to_vec()).collect();

    // Constant elimination makes the completed matrix upper triangular at 0.
    let mut placed: Vec<Option<usize>> = vec![None; n];
    let mut unassigned: Vec<usize> = (0..hat.len()).collect();
    for p in 0..n {
        if support.contains(&(p + 1)) {
            let srow = m.m.row(p).to_vec();
            let pivot = srow[p].coeff(0);
            for &h in &unassigned {
                let c = hat[h][p].coeff(0);
                if c != 0 {
                    let s = f.neg(f.div(c, pivot)?);
                    add_row_multiple(&mut hat[h], &srow, &Poly::constant(&f, s));
                }
            }
        } else {
            let pos = unassigned.iter().position(|&h| hat[h][p].coeff(0) != 0).ok_or(Error::NotBasic)?;
            let h0 = unassigned.remove(pos);
            let pivot_row = hat[h0].clone();
            let pivot = pivot_row[p].coeff(0);
            for &h in &unassigned {
                let c = hat[h][p].coeff(0);
                if c != 0 {
                    let s = f.neg(f.div(c, pivot)?);
                    add_row_multiple(&mut hat[h], &pivot_row, &Poly::constant(&f, s));
                }
            }
            placed[p] = Some(h0);
        }
    }
    let rows: Vec<Vec<Poly>> = (0..n).map(|p| placed[p].map_or_else(|| m.m.row(p).to_vec(), |h| hat[h].clone())).collect();
    let out = MMatrix::new(ctx, PolyMatrix::from_rows(&f, rows)?)?;
    debug_assert!(out.is_unit());
    Ok(out)
}

fn swap_cols(m: &mut PolyMatrix, i: usize, j: usize) {
    for r in 0..m.rows() {
        let tmp = m[(r, i)].clone();
        m[(r, i)] = m[(r, j)].clone();
        m[(r, j)] = tmp;
    }
}

fn swap_rows(m: &mut PolyMatrix, i: usize, j: usize) {
    for c in 0..m.cols() {
        let tmp = m[(i, c)].clone();
        m[(i, c)] = m[(j, c)].clone();
        m[(j, c)] = tmp;
    }
}

fn add_row_multiple(dst: &mut [Poly], src: &[Poly], s: &Poly) {
    for (d, x) in dst.iter_mut().zip(src) {
        *d = &*d + &(s * x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx54() -> RingContext {
        RingContext::new(&GaloisField::with_order(5).unwrap(), 4).unwrap()
    }

    fn reduction_m(c: &RingContext) -> MMatrix {
        MMatrix::parse_text(c, "2+t, 1, 4, 4\n0, 1, 3, 0\n4t, 2t, 1+t, 1\n0, 0, 0, 0").unwrap()
    }

    fn reduction_mbar(c: &RingContext) -> MMatrix {
        MMatrix::parse_text(c, "2, 1, 0, 0\n0, 1, 3, 0\n4t, 0, 1, 1\n0, 0, 0, 0").unwrap()
    }

    #[test]
    fn xi_of_reduction_example() {
        let c = ctx54();
        let g = SkewPoly::parse(&c, "[2,1,1,0] + z*[0,1,3,1] + z^2*[4,0,4,0] + z^3*[0,2,0,4] + z^4*[1,0,1,0]").unwrap();
        assert_eq!(xi(&g).unwrap(), reduction_m(&c));
        assert_eq!(xi_inv(&reduction_m(&c)).unwrap(), g);
        let gbar = SkewPoly::parse(&c, "[2,1,1,0] + z*[0,1,3,1] + z^2*[4,0,0,0]").unwrap();
        assert_eq!(xi(&gbar).unwrap(), reduction_mbar(&c));
    }

    #[test]
    fn xi_of_z_and_idempotents() {
        let c = ctx54();
        let z = xi(&SkewPoly::z_power(&c, 1)).unwrap();
        assert_eq!(z.to_text(), "0, 1, 0, 0\n0, 0, 1, 0\n0, 0, 0, 1\nt, 0, 0, 0\n");
        assert_eq!(xi(&SkewPoly::one(&c)).unwrap(), MMatrix::identity(&c));
        let e2 = xi(&SkewPoly::idempotent(&c, 2).unwrap()).unwrap();
        assert_eq!(e2.support(), vec![2]);
        assert!(e2.entry(2, 2).is_constant());
        // z^{nl+i} = t^l [[0, I_{n-i}], [t I_i, 0]]
        let z6 = xi(&SkewPoly::z_power(&c, 6)).unwrap();
        assert_eq!(z6.to_text(), "0, 0, t, 0\n0, 0, 0, t\nt^2, 0, 0, 0\n0, t^2, 0, 0\n");
    }

    #[test]
    fn xi_of_mds_generator() {
        let f = GaloisField::with_order(7).unwrap();
        let c = RingContext::new(&f, 6).unwrap();
        let delta = 3;
        let e1 = SkewPoly::idempotent(&c, 1).unwrap();
        let g = (0..=delta).fold(SkewPoly::zero(&c), |acc, i| &acc + &(&e1 * &SkewPoly::z_power(&c, i)));
        let m = xi(&g).unwrap();
        assert_eq!(m.to_text().lines().next().unwrap(), "1, 1, 1, 1, 0, 0");
        assert_eq!(m.support(), vec![1]);
        assert_eq!(&m * &m, m);
    }

    #[test]
    fn degree_matrix_of_reduction_example() {
        let c = ctx54();
        let d = reduction_m(&c).degree_matrix();
        assert_eq!(d.to_text(), "4, 1, 2, 3\n-inf, 0, 1, -inf\n2, 3, 4, 1\n-inf, -inf, -inf, -inf\n");
        assert!(!d.is_semi_reduced());
        let dbar = reduction_mbar(&c).degree_matrix();
        let maxima: Vec<i64> = (1..=3).map(|a| dbar.row_max(a).unwrap().0).collect();
        assert_eq!(maxima, vec![1, 1, 2]);
        assert!(dbar.is_semi_reduced());
        assert!(MMatrix::zero(&c).degree_matrix().rows().iter().flatten().all(Option::is_none));
    }

    #[test]
    fn units() {
        let f = GaloisField::with_order(5).unwrap();
        let c2 = RingContext::new(&f, 2).unwrap();
        assert!(MMatrix::identity(&c2).is_unit());
        assert!(MMatrix::parse_text(&c2, "1, 0\nt, 1").unwrap().is_unit());
        assert!(!MMatrix::parse_text(&c2, "t, 0\n0, 1").unwrap().is_unit());
        assert!(matches!(MMatrix::parse_text(&c2, "1, 0\n1, 1"), Err(Error::NotInRing(_))));
    }

    #[test]
    fn elementary_units() {
        let c = ctx54();
        let low = ElementaryUnit::Lower { a: 3, b: 2, exp: 1, alpha: 3 }.matrix(&c).unwrap();
        assert_eq!(low.to_text(), "1, 0, 0, 0\n0, 1, 0, 0\n0, 3t, 1, 0\n0, 0, 0, 1\n");
        let up = ElementaryUnit::Upper { a: 1, b: 3, exp: 0, alpha: 1 }.matrix(&c).unwrap();
        assert_eq!(up.to_text(), "1, 0, 1, 0\n0, 1, 0, 0\n0, 0, 1, 0\n0, 0, 0, 1\n");
        assert_eq!(ElementaryUnit::Scale { a: 1, alpha: 1 }.matrix(&c).unwrap(), MMatrix::identity(&c));
        for e in [
            ElementaryUnit::Scale { a: 1, alpha: 0 },
            ElementaryUnit::Upper { a: 3, b: 1, exp: 0, alpha: 1 },
            ElementaryUnit::Lower { a: 3, b: 1, exp: 0, alpha: 1 },
            ElementaryUnit::Scale { a: 5, alpha: 1 },
        ] {
            assert!(matches!(e.matrix(&c), Err(Error::InvalidParameters(_))), "{e:?}");
        }
        let f = c.field();
        for e in [
            ElementaryUnit::Scale { a: 2, alpha: 3 },
            ElementaryUnit::Upper { a: 1, b: 4, exp: 2, alpha: 2 },
            ElementaryUnit::Lower { a: 4, b: 2, exp: 1, alpha: 4 },
        ] {
            let m = e.matrix(&c).unwrap();
            assert!(m.is_unit());
            assert_eq!(&m * &e.inverse(f).matrix(&c).unwrap(), MMatrix::identity(&c));
        }
    }

    #[test]
    fn semi_reduce_reproduces_factorization() {
        let c = ctx54();
        let m = reduction_m(&c);
        let r = semi_reduce(&m);
        assert_eq!(r.reduced, reduction_mbar(&c));
        assert_eq!(
            r.factors,
            vec![ElementaryUnit::Lower { a: 3, b: 2, exp: 1, alpha: 3 }, ElementaryUnit::Upper { a: 1, b: 3, exp: 0, alpha: 1 },]
        );
        assert_eq!(&r.unit * &m, r.reduced);
        let again = semi_reduce(&r.reduced);
        assert!(again.factors.is_empty());
        assert_eq!(again.unit, MMatrix::identity(&c));
    }

    #[test]
    fn completion_of_mbar() {
        let c = ctx54();
        let mbar = reduction_mbar(&c);
        assert!(mbar.is_basic_member());
        let naive = MMatrix::parse_text(&c, "2, 1, 0, 0\n0, 1, 3, 0\n4t, 0, 1, 1\n0, 0, 0, 1").unwrap();
        assert!(!naive.is_unit());
        let n = complete_to_unit(&mbar).unwrap();
        assert!(n.is_unit());
        for a in 1..=3 {
            assert_eq!(n.matrix().row(a - 1), mbar.matrix().row(a - 1));
        }
    }

    #[test]
    fn completion_trivial_and_errors() {
        let c = ctx54();
        let partial = MMatrix::parse_text(&c, "1, 0, 0, 0\n0, 1, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0").unwrap();
        assert_eq!(complete_to_unit(&partial).unwrap(), MMatrix::identity(&c));
        assert_eq!(complete_to_unit(&MMatrix::zero(&c)).unwrap(), MMatrix::identity(&c));
        let t_row = MMatrix::parse_text(&c, "t, t^2, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0").unwrap();
        assert_eq!(complete_to_unit(&t_row), Err(Error::NotBasic));
        let delayed = MMatrix::parse_text(&c, "t, 1, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0").unwrap();
        assert_eq!(complete_to_unit(&delayed), Err(Error::NotDelayFree));
        let not_basic = MMatrix::parse_text(&c, "1+t, 0, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0\n0, 0, 0, 0").unwrap();
        assert_eq!(complete_to_unit(&not_basic), Err(Error::NotBasic));
        assert!(!not_basic.is_basic_member());
    }
}
