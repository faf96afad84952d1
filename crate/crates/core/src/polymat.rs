//! Polynomial matrices: minors, basicness, external degree, minimality.
//!
//! Determinants use fraction-free (Bareiss) elimination, so everything stays
//! inside `F[x]` and every division is exact.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::GaloisField;
use crate::poly::Poly;

/// A dense `rows × cols` matrix over `F[x]`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: GaloisField,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        write!(f, "{}", self.to_text('t'))
    }
}

impl PolyMatrix {
    pub fn zeros(field: &GaloisField, rows: usize, cols: usize) -> Self {
        PolyMatrix { field: field.clone(), rows, cols, entries: vec![Poly::zero(field); rows * cols] }
    }

    pub fn identity(field: &GaloisField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Poly::one(field);
        }
        m
    }

    /// Builds from rows; every row must have the same length.
    pub fn from_rows(field: &GaloisField, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeError("ragged matrix rows".into()));
        }
        if rows.iter().flatten().any(|p| p.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let n = rows.len();
        Ok(PolyMatrix { field: field.clone(), rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    /// Builds from nested coefficient lists, e.g. `[[[2,1],[1]],...]`.
    pub fn from_coeff_lists(field: &GaloisField, rows: &[Vec<Vec<u64>>]) -> Result<Self> {
        let rows =
            rows.iter().map(|r| r.iter().map(|cs| Poly::from_ints(field, cs)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, rows)
    }

    pub fn to_coeff_lists(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.coeffs().to_vec()).collect()).collect()
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Poly] {
        &mut self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Poly::is_zero)
    }

    /// Submatrix on the given (0-based) row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = Self::zeros(&self.field, rows.len(), cols.len());
        for (a, &r) in rows.iter().enumerate() {
            for (b, &c) in cols.iter().enumerate() {
                out[(a, b)] = self[(r, c)].clone();
            }
        }
        out
    }

    /// Matrix of the given rows.
    pub fn select_rows(&self, rows: &[usize]) -> PolyMatrix {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(rows, &cols)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Constant-coefficient matrix, i.e. evaluation at `x = 0`.
    pub fn at_zero(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.coeff(0)).collect()).collect()
    }

    pub fn checked_mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::SizeError(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        let mut out = Self::zeros(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn elementwise(&self, rhs: &PolyMatrix, op: impl Fn(&Poly, &Poly) -> Poly) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::SizeError("shape mismatch".into()));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| op(a, b)).collect();
        Ok(PolyMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, entries })
    }

    /// Determinant by fraction-free elimination with row pivoting.
    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::SizeError("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let f = &self.field;
        if n == 0 {
            return Ok(Poly::one(f));
        }
        let mut a: Vec<Vec<Poly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = Poly::one(f);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        negate = !negate;
                    }
                    None => return Ok(Poly::zero(f)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev)?.expect("Bareiss division is exact");
                }
                a[i][k] = Poly::zero(f);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -&d } else { d })
    }

    /// All `k`-minors, row subsets outer and column subsets inner, both in
    /// lexicographic order.
    pub fn minors(&self, k: usize) -> Result<Vec<Poly>> {
        if k > self.rows.min(self.cols) {
            return Err(Error::SizeError(format!("{k}-minors of a {}x{} matrix", self.rows, self.cols)));
        }
        let mut out = Vec::new();
        for rs in combinations(self.rows, k) {
            for cs in combinations(self.cols, k) {
                out.push(self.submatrix(&rs, &cs).det()?);
            }
        }
        Ok(out)
    }

    fn maximal_minors(&self) -> Result<Vec<Poly>> {
        if self.rows > self.cols {
            return Err(Error::SizeError("more rows than columns".into()));
        }
        let minors = self.minors(self.rows)?;
        if minors.iter().all(Poly::is_zero) {
            return Err(Error::RankDeficient);
        }
        Ok(minors)
    }

    /// Monic gcd of all maximal minors.
    pub fn minor_gcd(&self) -> Result<Poly> {
        let minors = self.maximal_minors()?;
        let mut g = Poly::zero(&self.field);
        for m in &minors {
            if !m.is_zero() {
                g = g.gcd(m)?;
            }
        }
        Ok(g)
    }

    /// Full rank at every point of the algebraic closure: the maximal minors
    /// are coprime.
    pub fn is_basic(&self) -> Result<bool> {
        Ok(self.minor_gcd()?.degree() == Some(0))
    }

    /// Largest degree among the maximal minors.
    pub fn external_degree(&self) -> Result<usize> {
        let minors = self.maximal_minors()?;
        Ok(minors.iter().filter_map(Poly::degree).max().expect("some minor is nonzero"))
    }

    /// Row degrees; a zero row has degree `None`.
    pub fn row_degrees(&self) -> Vec<Option<usize>> {
        (0..self.rows).map(|i| self.row(i).iter().filter_map(Poly::degree).max()).collect()
    }

    /// Row degrees sum to the external degree.
    pub fn is_minimal(&self) -> Result<bool> {
        let ext = self.external_degree()?;
        let degs = self.row_degrees();
        // full row rank implies no zero rows
        let sum: usize = degs.iter().map(|d| d.expect("full rank has no zero rows")).sum();
        Ok(sum == ext)
    }

    /// One row per line, entries separated by `, `.
    pub fn to_text(&self, var: char) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|p| p.display(var)).collect();
            out.push_str(&line.join(", "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(field: &GaloisField, s: &str, var: char) -> Result<PolyMatrix> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(|e| Poly::parse(field, e, var)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, rows)
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

/// Panics on shape mismatch; use [`PolyMatrix::checked_mul`] otherwise.
impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.checked_mul(rhs).expect("matrix shapes agree")
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.elementwise(rhs, |a, b| a + b).expect("matrix shapes agree")
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.elementwise(rhs, |a, b| a - b).expect("matrix shapes agree")
    }
}

/// `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// JSON mirror: row-major nested coefficient lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatrixJson(pub Vec<Vec<Vec<u64>>>);

impl From<&PolyMatrix> for MatrixJson {
    fn from(m: &PolyMatrix) -> Self {
        MatrixJson(
            m.to_coeff_lists().into_iter().map(|r| r.into_iter().map(|c| c.into_iter().map(u64::from).collect()).collect()).collect(),
        )
    }
}
