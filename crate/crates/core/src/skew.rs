//! The skew polynomial ring `A[z;σ]` with `A = F × … × F` (`n` copies).
//!
//! Coefficients are right-hand coefficients: `Σ z^ν a_ν` with `a_ν ∈ A`,
//! and multiplication follows `a z = z σ(a)`. The automorphism `σ` is a
//! permutation of the primitive idempotents, `σ(e_i) = e_{π(i)}`; the
//! default is the full cycle `π(i) = i + 1 (mod n)`.
//!
//! The module identification between `F[z]^n` and `A[z;σ]` goes through
//! `F[x]/(x^n − 1) ≅ A`, `f ↦ [f(1), f(ω), …, f(ω^{n−1})]` for the canonical
//! root of unity `ω`. With this ordering `σ(x) = ω^{-1} x` acts as the
//! default cycle on the idempotents.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::GaloisField;
use crate::poly::Poly;

struct ContextInner {
    field: GaloisField,
    n: usize,
    omega: Option<u32>,
    /// 0-based images: `sigma[i] = π(i)`.
    sigma: Vec<usize>,
}

/// Field, length and automorphism shared by all elements of one ring.
#[derive(Clone)]
pub struct RingContext(Arc<ContextInner>);

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.field == other.0.field && self.0.n == other.0.n && self.0.sigma == other.0.sigma)
    }
}

impl Eq for RingContext {}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[z;σ] over {:?}, n = {}", self.0.field, self.0.n)?;
        if !self.is_default_cycle() {
            write!(f, ", σ = {:?}", self.sigma_one_based())?;
        }
        Ok(())
    }
}

impl RingContext {
    /// Ring with the default cyclic automorphism.
    pub fn new(field: &GaloisField, n: usize) -> Result<Self> {
        let sigma: Vec<usize> = (0..n).map(|i| (i + 1) % n.max(1)).collect();
        Self::build(field, n, sigma)
    }

    /// Ring with an arbitrary permutation, given 1-based: `sigma[i-1] = π(i)`.
    pub fn with_sigma(field: &GaloisField, sigma: &[usize]) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in sigma {
            if s == 0 || s > n || seen[s - 1] {
                return Err(Error::InvalidParameters(format!("{sigma:?} is not a permutation")));
            }
            seen[s - 1] = true;
        }
        Self::build(field, n, sigma.iter().map(|s| s - 1).collect())
    }

    fn build(field: &GaloisField, n: usize, sigma: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters("ring length must be positive".into()));
        }
        let omega = field.root_of_unity(n as u64).ok();
        Ok(RingContext(Arc::new(ContextInner { field: field.clone(), n, omega, sigma })))
    }

    pub fn field(&self) -> &GaloisField {
        &self.0.field
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    /// The canonical `n`-th root of unity, when `n | q − 1`.
    pub fn omega(&self) -> Result<u32> {
        self.0.omega.ok_or(Error::NoRootOfUnity { n: self.0.n, q: self.0.field.order() as u64 })
    }

    pub fn is_default_cycle(&self) -> bool {
        let n = self.0.n;
        self.0.sigma.iter().enumerate().all(|(i, &s)| s == (i + 1) % n)
    }

    pub fn sigma_one_based(&self) -> Vec<usize> {
        self.0.sigma.iter().map(|s| s + 1).collect()
    }

    /// `π^j(i)` on 0-based indices.
    pub fn sigma_pow_index(&self, i: usize, j: usize) -> usize {
        if self.is_default_cycle() {
            return (i + j) % self.0.n;
        }
        (0..j).fold(i, |acc, _| self.0.sigma[acc])
    }

    /// `σ^j(a)`: the value at idempotent `i` moves to `π^j(i)`.
    pub fn sigma_pow(&self, a: &[u32], j: usize) -> Vec<u32> {
        let mut out = vec![0; self.0.n];
        for (i, &c) in a.iter().enumerate() {
            out[self.sigma_pow_index(i, j)] = c;
        }
        out
    }

    /// Disjoint cycles of `π`, each starting at its smallest element and
    /// following `π`; 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.n;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0.sigma[i];
            }
            out.push(cycle);
        }
        out
    }
}

/// An element `Σ z^ν a_ν` of `A[z;σ]`, stored densely.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    ctx: RingContext,
    coeffs: Vec<Vec<u32>>,
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl SkewPoly {
    pub fn zero(ctx: &RingContext) -> Self {
        SkewPoly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &RingContext) -> Self {
        SkewPoly::constant(ctx, vec![1; ctx.n()]).expect("valid constant")
    }

    /// Builds from coefficient vectors (index ν holds the coefficient of z^ν).
    pub fn new(ctx: &RingContext, mut coeffs: Vec<Vec<u32>>) -> Result<Self> {
        let f = ctx.field();
        for c in &coeffs {
            if c.len() != ctx.n() {
                return Err(Error::SizeError(format!("coefficient of length {} in a ring of length {}", c.len(), ctx.n())));
            }
            if let Some(&bad) = c.iter().find(|&&x| !f.contains(x)) {
                return Err(Error::NotAnElement { value: bad as u64, q: f.order() as u64 });
            }
        }
        while coeffs.last().is_some_and(|c| c.iter().all(|&x| x == 0)) {
            coeffs.pop();
        }
        Ok(SkewPoly { ctx: ctx.clone(), coeffs })
    }

    pub fn constant(ctx: &RingContext, a: Vec<u32>) -> Result<Self> {
        Self::new(ctx, vec![a])
    }

    /// The primitive idempotent `e_a` (1-based).
    pub fn idempotent(ctx: &RingContext, a: usize) -> Result<Self> {
        check_index(a, ctx.n())?;
        let mut v = vec![0; ctx.n()];
        v[a - 1] = 1;
        Self::constant(ctx, v)
    }

    /// `z^k`.
    pub fn z_power(ctx: &RingContext, k: usize) -> Self {
        let mut coeffs = vec![vec![0; ctx.n()]; k + 1];
        coeffs[k] = vec![1; ctx.n()];
        SkewPoly { ctx: ctx.clone(), coeffs }
    }

    /// `z^k · c · e_a`.
    pub fn term(ctx: &RingContext, k: usize, c: u32, a: usize) -> Result<Self> {
        check_index(a, ctx.n())?;
        let mut coeffs = vec![vec![0; ctx.n()]; k + 1];
        coeffs[k][a - 1] = c;
        Self::new(ctx, coeffs)
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Vec<u32>] {
        &self.coeffs
    }

    /// Coefficient of `z^ν` (zero past the degree).
    pub fn coeff(&self, nu: usize) -> Vec<u32> {
        self.coeffs.get(nu).cloned().unwrap_or_else(|| vec![0; self.ctx.n()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn same_ctx(&self, rhs: &Self) -> Result<()> {
        if self.ctx == rhs.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_ctx(rhs)?;
        let f = self.ctx.field();
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|nu| {
                let (a, b) = (self.coeff(nu), rhs.coeff(nu));
                a.iter().zip(&b).map(|(&x, &y)| f.add(x, y)).collect()
            })
            .collect();
        Self::new(&self.ctx, coeffs)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let f = self.ctx.field();
        let coeffs = self.coeffs.iter().map(|c| c.iter().map(|&x| f.neg(x)).collect()).collect();
        SkewPoly { ctx: self.ctx.clone(), coeffs }
    }

    /// Skew product: `(z^i a)(z^j b) = z^{i+j} σ^j(a) b`.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_ctx(rhs)?;
        let f = self.ctx.field();
        let n = self.ctx.n();
        if self.is_zero() || rhs.is_zero() {
            return Ok(SkewPoly::zero(&self.ctx));
        }
        let mut out = vec![vec![0u32; n]; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, b) in rhs.coeffs.iter().enumerate() {
            if b.iter().all(|&x| x == 0) {
                continue;
            }
            for (i, a) in self.coeffs.iter().enumerate() {
                let twisted = self.ctx.sigma_pow(a, j);
                for l in 0..n {
                    out[i + j][l] = f.add(out[i + j][l], f.mul(twisted[l], b[l]));
                }
            }
        }
        Self::new(&self.ctx, out)
    }

    /// Scalar multiple by a field element (central in the ring).
    pub fn scale(&self, c: u32) -> Self {
        let f = self.ctx.field();
        let coeffs = self.coeffs.iter().map(|v| v.iter().map(|&x| f.mul(x, c)).collect()).collect();
        Self::new(&self.ctx, coeffs).expect("scaling keeps shape")
    }

    /// The `a`-th component `e_a · g` (1-based).
    pub fn component(&self, a: usize) -> Result<Self> {
        check_index(a, self.ctx.n())?;
        let n = self.ctx.n();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(nu, c)| {
                let idx = self.ctx.sigma_pow_index(a - 1, nu);
                let mut v = vec![0; n];
                v[idx] = c[idx];
                v
            })
            .collect();
        Self::new(&self.ctx, coeffs)
    }

    /// All components `g^{(1)}, …, g^{(n)}`.
    pub fn components(&self) -> Vec<SkewPoly> {
        (1..=self.ctx.n()).map(|a| self.component(a).expect("index in range")).collect()
    }

    /// `T_g = {a : g^{(a)} ≠ 0}`, 1-based and sorted.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.ctx.n()).filter(|&a| !self.component(a).expect("index in range").is_zero()).collect()
    }

    /// The support of the constant term equals the support of `g`.
    pub fn is_delay_free(&self) -> bool {
        let constant: Vec<usize> = match self.coeffs.first() {
            Some(c) => (1..=self.ctx.n()).filter(|&a| c[a - 1] != 0).collect(),
            None => Vec::new(),
        };
        constant == self.support()
    }

    /// Index of the idempotent carrying the leading coefficient of
    /// `g^{(a)}`, i.e. `π^{deg g^{(a)}}(a)`; `None` for a zero component.
    pub fn leading_idempotent(&self, a: usize) -> Result<Option<usize>> {
        let deg = self.component(a)?.degree();
        Ok(deg.map(|d| self.ctx.sigma_pow_index(a - 1, d) + 1))
    }

    /// Leading coefficients of the nonzero components lie in pairwise
    /// different ideals `(e_i)`.
    pub fn is_semi_reduced(&self) -> bool {
        let mut seen = vec![false; self.ctx.n()];
        for a in 1..=self.ctx.n() {
            if let Some(i) = self.leading_idempotent(a).expect("index in range") {
                if std::mem::replace(&mut seen[i - 1], true) {
                    return false;
                }
            }
        }
        true
    }

    /// Identifies the component row with a vector in `F[z]^n`: each
    /// coefficient `a_ν ∈ A` is interpolated back to `F[x]/(x^n − 1)`.
    pub fn p_inverse(&self) -> Result<Vec<Poly>> {
        let ctx = &self.ctx;
        let f = ctx.field();
        let n = ctx.n();
        let omega = ctx.omega()?;
        let n_inv = f.inv(f.from_int(n as u64))?;
        let mut cols: Vec<Vec<u32>> = vec![vec![0; self.coeffs.len()]; n];
        for (nu, a) in self.coeffs.iter().enumerate() {
            for (i, col) in cols.iter_mut().enumerate() {
                // f_i = n^{-1} Σ_b a_b ω^{-b i}
                let mut acc = 0;
                for (b, &ab) in a.iter().enumerate() {
                    if ab != 0 {
                        let w = f.pow(omega, ((n - (b * i) % n) % n) as u64);
                        acc = f.add(acc, f.mul(ab, w));
                    }
                }
                col[nu] = f.mul(acc, n_inv);
            }
        }
        Ok(cols.into_iter().map(|c| Poly::new(f, c)).collect())
    }

    /// Inverse of [`SkewPoly::p_inverse`]: `Σ z^ν v_ν ↦ Σ z^ν [f_ν(1), f_ν(ω), …]`.
    pub fn p_map(ctx: &RingContext, v: &[Poly]) -> Result<SkewPoly> {
        let n = ctx.n();
        if v.len() != n {
            return Err(Error::SizeError(format!("vector of length {} for n = {n}", v.len())));
        }
        let f = ctx.field();
        if v.iter().any(|p| p.field() != f) {
            return Err(Error::FieldMismatch);
        }
        let omega = ctx.omega()?;
        let len = v.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        let points: Vec<u32> = (0..n).map(|b| f.pow(omega, b as u64)).collect();
        let coeffs = (0..len)
            .map(|nu| {
                let fx = Poly::new(f, v.iter().map(|p| p.coeff(nu)).collect());
                points.iter().map(|&w| fx.eval(w)).collect()
            })
            .collect();
        SkewPoly::new(ctx, coeffs)
    }

    /// Text form `[c1,…,cn] + z*[…] + z^2*[…]`; zero coefficients are
    /// omitted and the zero polynomial prints as `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (nu, c) in self.coeffs.iter().enumerate() {
            if c.iter().all(|&x| x == 0) {
                continue;
            }
            let vec = format!("[{}]", c.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
            terms.push(match nu {
                0 => vec,
                1 => format!("z*{vec}"),
                _ => format!("z^{nu}*{vec}"),
            });
        }
        terms.join(" + ")
    }

    pub fn parse(ctx: &RingContext, s: &str) -> Result<SkewPoly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(SkewPoly::zero(ctx));
        }
        let f = ctx.field();
        let mut coeffs: Vec<Vec<u32>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let here = rest;
            let bad = || Error::Parse(format!("bad skew polynomial near `{here}`"));
            let open = rest.find('[').ok_or_else(bad)?;
            let close = rest.find(']').ok_or_else(bad)?;
            let head = &rest[..open];
            let nu = match head {
                "" => 0,
                "z*" => 1,
                h => h.strip_prefix("z^").and_then(|h| h.strip_suffix('*')).and_then(|e| e.parse::<usize>().ok()).ok_or_else(bad)?,
            };
            let body = &rest[open + 1..close];
            let vals =
                body.split(',').map(|x| x.parse::<u64>().map_err(|_| bad()).and_then(|v| f.element(v))).collect::<Result<Vec<u32>>>()?;
            if vals.len() != ctx.n() {
                return Err(Error::Parse(format!("coefficient `[{body}]` has length {} but n = {}", vals.len(), ctx.n())));
            }
            if coeffs.len() <= nu {
                coeffs.resize(nu + 1, vec![0; ctx.n()]);
            }
            for (slot, v) in coeffs[nu].iter_mut().zip(vals) {
                *slot = f.add(*slot, v);
            }
            rest = &rest[close + 1..];
            if !rest.is_empty() {
                rest = rest.strip_prefix('+').ok_or_else(bad)?;
            }
        }
        SkewPoly::new(ctx, coeffs)
    }
}

/// The polynomial in `F[x]/(x^n − 1)` of degree `< n` taking the value 1 at
/// `ω^{a−1}` and 0 at every other `n`-th root of unity.
pub fn idempotent_poly(ctx: &RingContext, a: usize) -> Result<Poly> {
    let e = SkewPoly::idempotent(ctx, a)?;
    Ok(e.p_inverse()?.into_iter().map(|p| p.coeff(0)).collect::<Vec<u32>>()).map(|cs| Poly::new(ctx.field(), cs))
}

fn check_index(a: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&a) {
        Ok(())
    } else {
        Err(Error::InvalidIndex { index: a, n })
    }
}

macro_rules! forward_ring_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        /// Panics when the operands live in different rings.
        impl std::ops::$tr for &SkewPoly {
            type Output = SkewPoly;
            fn $m(self, rhs: &SkewPoly) -> SkewPoly {
                self.$checked(rhs).expect("operands share a ring")
            }
        }
    };
}
forward_ring_op!(Add, add, checked_add);
forward_ring_op!(Sub, sub, checked_sub);
forward_ring_op!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(q: u64, n: usize) -> RingContext {
        RingContext::new(&GaloisField::with_order(q).unwrap(), n).unwrap()
    }

    /// g of the non-semi-reduced reduction example, q = 5, n = 4.
    fn reduction_g(c: &RingContext) -> SkewPoly {
        SkewPoly::parse(c, "[2,1,1,0] + z*[0,1,3,1] + z^2*[4,0,4,0] + z^3*[0,2,0,4] + z^4*[1,0,1,0]").unwrap()
    }

    #[test]
    fn a_times_z_twists() {
        let c = ctx(4, 3);
        let a = SkewPoly::constant(&c, vec![1, 2, 3]).unwrap();
        let z = SkewPoly::z_power(&c, 1);
        let az = &a * &z;
        assert_eq!(az.to_text(), "z*[3,1,2]");
    }

    #[test]
    fn components_of_reduction_example() {
        let c = ctx(5, 4);
        let g = reduction_g(&c);
        let e1 = SkewPoly::idempotent(&c, 1).unwrap();
        let g1 = &e1 * &g;
        assert_eq!(g1, g.component(1).unwrap());
        // 2e1 + z e2 + 4z^2 e3 + 4z^3 e4 + z^4 e1
        assert_eq!(g1.to_text(), "[2,0,0,0] + z*[0,1,0,0] + z^2*[0,0,4,0] + z^3*[0,0,0,4] + z^4*[1,0,0,0]");
        assert_eq!(g.component(2).unwrap().to_text(), "[0,1,0,0] + z*[0,0,3,0]");
        assert_eq!(g.support(), vec![1, 2, 3]);
        assert!(g.is_delay_free());
        assert!(!g.is_semi_reduced());
        let sum = g.components().iter().fold(SkewPoly::zero(&c), |acc, x| &acc + x);
        assert_eq!(sum, g);

        let gbar = SkewPoly::parse(&c, "[2,1,1,0] + z*[0,1,3,1] + z^2*[4,0,0,0]").unwrap();
        assert!(gbar.is_semi_reduced());
    }

    #[test]
    fn z_e1_is_not_delay_free() {
        let c = ctx(5, 4);
        let g = SkewPoly::term(&c, 1, 1, 1).unwrap();
        assert_eq!(g.support(), vec![4]);
        assert!(!g.is_delay_free());
        assert!(SkewPoly::one(&c).is_delay_free());
        assert_eq!(SkewPoly::one(&c).support(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn idempotent_polys_f5() {
        let c = ctx(5, 4);
        let f = c.field().clone();
        assert_eq!(idempotent_poly(&c, 1).unwrap(), Poly::new(&f, vec![4, 4, 4, 4]));
        assert_eq!(idempotent_poly(&c, 2).unwrap(), Poly::new(&f, vec![4, 2, 1, 3]));
        let w = c.omega().unwrap();
        for a in 1..=4 {
            let e = idempotent_poly(&c, a).unwrap();
            for b in 0..4u64 {
                let expect = u32::from(b as usize == a - 1);
                assert_eq!(e.eval(f.pow(w, b)), expect);
            }
        }
        assert!(matches!(idempotent_poly(&ctx(5, 3), 1), Err(Error::NoRootOfUnity { .. })));
    }

    #[test]
    fn p_inverse_rows_of_reduction2() {
        let c = ctx(5, 4);
        let f = c.field().clone();
        let gbar = SkewPoly::parse(&c, "[2,1,1,0] + z*[0,1,3,1] + z^2*[4,0,0,0]").unwrap();
        let row1 = gbar.component(1).unwrap().p_inverse().unwrap();
        let expect1: Vec<Poly> = [[3, 4], [3, 2], [3, 1], [3, 3]].iter().map(|c| Poly::new(&f, c.to_vec())).collect();
        assert_eq!(row1, expect1);
        let row3 = gbar.component(3).unwrap().p_inverse().unwrap();
        let expect3: Vec<Poly> = [[4, 4, 1], [1, 3, 1], [4, 1, 1], [1, 2, 1]].iter().map(|c| Poly::new(&f, c.to_vec())).collect();
        assert_eq!(row3, expect3);
        assert_eq!(SkewPoly::p_map(&c, &row3).unwrap(), gbar.component(3).unwrap());
    }

    #[test]
    fn text_roundtrip_and_errors() {
        let c = ctx(5, 4);
        let g = reduction_g(&c);
        assert_eq!(SkewPoly::parse(&c, &g.to_text()).unwrap(), g);
        assert_eq!(SkewPoly::parse(&c, "0").unwrap(), SkewPoly::zero(&c));
        assert!(SkewPoly::parse(&c, "[1,2,3]").is_err());
        assert!(SkewPoly::parse(&c, "[1,2,3,9]").is_err());
        assert!(SkewPoly::parse(&c, "y*[1,2,3,4]").is_err());
    }

    #[test]
    fn context_mismatch() {
        let a = SkewPoly::one(&ctx(5, 4));
        let b = SkewPoly::one(&ctx(5, 2));
        assert_eq!(a.checked_mul(&b), Err(Error::ContextMismatch));
    }

    #[test]
    fn general_sigma_cycles() {
        let f = GaloisField::with_order(8).unwrap();
        let c = RingContext::with_sigma(&f, &[2, 3, 1, 5, 6, 7, 4]).unwrap();
        assert_eq!(c.cycles(), vec![vec![1, 2, 3], vec![4, 5, 6, 7]]);
        assert!(!c.is_default_cycle());
        // e3 z = z σ(e3) = z e1
        let e3 = SkewPoly::idempotent(&c, 3).unwrap();
        let z = SkewPoly::z_power(&c, 1);
        assert_eq!(&e3 * &z, SkewPoly::term(&c, 1, 1, 1).unwrap());
        assert!(RingContext::with_sigma(&f, &[1, 1]).is_err());
    }
}
