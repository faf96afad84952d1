//! Basic `(n−1) × n` matrices over `F[t]` with prescribed row degrees and
//! prescribed rightmost maximal-degree columns.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::GaloisField;
use crate::poly::Poly;
use crate::polymat::PolyMatrix;

/// Pivot columns `j_i` and row degrees `d_i` for rows `i = 1..n−1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSpec {
    pub n: usize,
    pub js: Vec<usize>,
    pub ds: Vec<usize>,
}

impl DegreeSpec {
    pub fn new(n: usize, js: Vec<usize>, ds: Vec<usize>) -> Result<Self> {
        let spec = DegreeSpec { n, js, ds };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n < 2 {
            return Err(Error::InvalidSpec("n must be at least 2".into()));
        }
        if self.js.len() != n - 1 || self.ds.len() != n - 1 {
            return Err(Error::InvalidSpec(format!("expected {} pivots and degrees", n - 1)));
        }
        let mut seen = vec![false; n + 1];
        for (i, (&j, &d)) in self.js.iter().zip(&self.ds).enumerate() {
            if !(1..=n).contains(&j) || std::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidSpec(format!("pivot columns {:?} are not distinct in 1..={n}", self.js)));
            }
            if j < i + 1 && d == 0 {
                return Err(Error::InvalidSpec(format!("row {} has pivot column {j} < {} but degree 0", i + 1, i + 1)));
            }
        }
        Ok(())
    }

    /// Violated properties of `m`, as human-readable messages; empty when
    /// `m` satisfies the degree pattern, the normalization at `t = 0`, the
    /// sparsity below the diagonal, and is basic.
    pub fn violations(&self, m: &PolyMatrix) -> Vec<String> {
        let n = self.n;
        let mut out = Vec::new();
        if m.rows() != n - 1 || m.cols() != n {
            out.push(format!("shape {}x{}", m.rows(), m.cols()));
            return out;
        }
        for i in 1..n {
            let (ji, di) = (self.js[i - 1], self.ds[i - 1]);
            let row = m.row(i - 1);
            for j in 1..=n {
                let e = &row[j - 1];
                let deg = e.degree();
                let ok = match j.cmp(&ji) {
                    std::cmp::Ordering::Less => deg.is_none_or(|d| d <= di),
                    std::cmp::Ordering::Equal => deg == Some(di),
                    std::cmp::Ordering::Greater => deg.is_none_or(|d| d < di),
                };
                if !ok {
                    out.push(format!("degree of ({i},{j}) is {deg:?} against d = {di}, pivot {ji}"));
                }
                if j < i && e.coeff(0) != 0 {
                    out.push(format!("({i},{j}) does not vanish at 0"));
                }
                if j < i && !e.is_zero() && (j != ji || *e != Poly::monomial(m.field(), 1, di)) {
                    out.push(format!("({i},{j}) is a stray entry below the diagonal"));
                }
                if ji < i && j != ji && !e.is_constant() && !e.is_zero() {
                    out.push(format!("({i},{j}) is not constant although pivot {ji} < {i}"));
                }
            }
            if row[i - 1].coeff(0) != 1 {
                out.push(format!("({i},{i}) is not 1 at t = 0"));
            }
        }
        if !m.is_basic().unwrap_or(false) {
            out.push("matrix is not basic".into());
        }
        out
    }
}

/// A basic matrix realizing `spec`, built by induction on the number of rows.
pub fn prescribed_degree_matrix(field: &GaloisField, spec: &DegreeSpec) -> Result<PolyMatrix> {
    spec.validate()?;
    PolyMatrix::from_rows(field, build(field, &spec.js, &spec.ds))
}

/// Rows `1..=N` with `N + 1` columns, all indices 1-based.
fn build(f: &GaloisField, js: &[usize], ds: &[usize]) -> Vec<Vec<Poly>> {
    let zero = || Poly::zero(f);
    let one = || Poly::one(f);
    let mono = |d: usize| Poly::monomial(f, 1, d);
    let big = js.len();
    let (jn, dn) = (js[big - 1], ds[big - 1]);
    if big == 1 {
        return vec![match (jn, dn) {
            (1, 0) => vec![one(), zero()],
            (1, d) => vec![&one() + &mono(d), one()],
            (_, d) => vec![one(), mono(d)],
        }];
    }
    let head_j = &js[..big - 1];
    let head_d = &ds[..big - 1];
    let col = |m: &[Vec<Poly>], c: usize| -> Vec<Poly> { m.iter().map(|r| r[c - 1].clone()).collect() };

    if jn == big + 1 {
        let hat = build(f, head_j, head_d);
        let mut m: Vec<Vec<Poly>> = hat
            .into_iter()
            .map(|mut r| {
                r.push(zero());
                r
            })
            .collect();
        let mut last = vec![zero(); big + 1];
        last[big - 1] = one();
        last[big] = mono(dn);
        m.push(last);
        return m;
    }

    if jn == big {
        let hj: Vec<usize> = head_j.iter().map(|&j| if j == big + 1 { big } else { j }).collect();
        let hat = build(f, &hj, head_d);
        let hat_n = col(&hat, big);
        let mut m: Vec<Vec<Poly>> = hat
            .into_iter()
            .zip(hat_n)
            .map(|(mut r, c)| {
                if dn == 0 {
                    r[big - 1] = zero();
                }
                r.push(c);
                r
            })
            .collect();
        let mut last = vec![zero(); big + 1];
        if dn == 0 {
            last[big - 1] = one();
        } else {
            last[big - 1] = &one() + &mono(dn);
            last[big] = one();
        }
        m.push(last);
        return m;
    }

    let alpha = jn;
    let mut last = vec![zero(); big + 1];
    last[alpha - 1] = mono(dn);
    last[big - 1] = one();
    match head_j.iter().position(|&j| j == big + 1).map(|b| b + 1) {
        None => {
            last[big] = one();
            let mut m: Vec<Vec<Poly>> = build(f, head_j, head_d)
                .into_iter()
                .map(|mut r| {
                    r.push(zero());
                    r
                })
                .collect();
            m.push(last);
            m
        }
        Some(beta) if beta <= alpha => {
            let mut hj = head_j.to_vec();
            hj[beta - 1] = alpha;
            let hat = build(f, &hj, head_d);
            let hat_alpha = col(&hat, alpha);
            let mut m: Vec<Vec<Poly>> = hat
                .into_iter()
                .zip(hat_alpha)
                .map(|(mut r, c)| {
                    r.push(c);
                    r
                })
                .collect();
            m.push(last);
            // Column repair: push the last column below the pivot degrees.
            for l in alpha + 1..=big {
                let Some(i0) = head_j.iter().position(|&j| j == l) else {
                    continue;
                };
                let d0 = head_d[i0];
                let top = m[i0][big].coeff(d0);
                if m[i0][big].degree() != Some(d0) || top == 0 {
                    continue;
                }
                let c = f.neg(f.div(top, m[i0][l - 1].coeff(d0)).expect("pivot has degree d"));
                for row in m.iter_mut() {
                    let v = &row[big] + &row[l - 1].scale(c);
                    row[big] = v;
                }
            }
            m
        }
        Some(beta) => {
            last[big] = one();
            let mut hj = head_j.to_vec();
            let mut hd = head_d.to_vec();
            hj[beta - 1] = alpha;
            hd[beta - 1] = dn + head_d[beta - 1];
            let mut m: Vec<Vec<Poly>> = build(f, &hj, &hd)
                .into_iter()
                .map(|mut r| {
                    r.push(zero());
                    r
                })
                .collect();
            let shift = mono(head_d[beta - 1]);
            let fixed: Vec<Poly> = m[beta - 1].iter().zip(&last).map(|(a, b)| a - &(&shift * b)).collect();
            m[beta - 1] = fixed;
            m.push(last);
            m
        }
    }
}
