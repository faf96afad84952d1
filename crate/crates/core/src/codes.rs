//! Convolutional codes `im G ⊆ F[z]^n`: encoders from skew generators,
//! Forney indices, and the free distance by a shortest-path search on the
//! controller-form trellis.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::GaloisField;
use crate::poly::Poly;
use crate::polymat::PolyMatrix;
use crate::skew::SkewPoly;

/// A code given by a basic minimal encoder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvCode {
    field: GaloisField,
    encoder: PolyMatrix,
    forney: Vec<usize>,
    generator: Option<SkewPoly>,
}

impl ConvCode {
    /// Wraps an encoder, checking that it is basic and minimal.
    pub fn from_encoder(encoder: PolyMatrix) -> Result<Self> {
        if encoder.rows() == 0 || encoder.rows() > encoder.cols() {
            return Err(Error::SizeError(format!("encoder of shape {}x{}", encoder.rows(), encoder.cols())));
        }
        if !encoder.is_basic()? {
            return Err(Error::NotBasic);
        }
        if !encoder.is_minimal()? {
            return Err(Error::NotMinimal);
        }
        let mut forney: Vec<usize> = encoder.row_degrees().into_iter().map(|d| d.expect("basic rows are nonzero")).collect();
        forney.sort_unstable();
        Ok(ConvCode { field: encoder.field().clone(), encoder, forney, generator: None })
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn encoder(&self) -> &PolyMatrix {
        &self.encoder
    }

    pub fn n(&self) -> usize {
        self.encoder.cols()
    }

    pub fn k(&self) -> usize {
        self.encoder.rows()
    }

    /// Sorted Forney indices.
    pub fn forney_indices(&self) -> &[usize] {
        &self.forney
    }

    pub fn degree(&self) -> usize {
        self.forney.iter().sum()
    }

    /// The skew polynomial the code was extracted from, if any.
    pub fn generator(&self) -> Option<&SkewPoly> {
        self.generator.as_ref()
    }

    /// `u G` for a message `u ∈ F[z]^k`.
    pub fn encode(&self, u: &[Poly]) -> Result<Vec<Poly>> {
        if u.len() != self.k() {
            return Err(Error::SizeError(format!("message of length {} for k = {}", u.len(), self.k())));
        }
        let row = PolyMatrix::from_rows(&self.field, vec![u.to_vec()])?;
        Ok(row.checked_mul(&self.encoder)?.row(0).to_vec())
    }

    pub fn to_json(&self) -> CodeJson {
        CodeJson {
            q: self.field.order() as u64,
            n: self.n(),
            k: self.k(),
            forney: self.forney.clone(),
            encoder: self.encoder.to_coeff_lists(),
        }
    }

    pub fn from_json(json: &CodeJson) -> Result<Self> {
        let field = GaloisField::with_order(json.q)?;
        let rows: Vec<Vec<Vec<u64>>> =
            json.encoder.iter().map(|r| r.iter().map(|p| p.iter().map(|&c| c as u64).collect()).collect()).collect();
        let encoder = PolyMatrix::from_coeff_lists(&field, &rows)?;
        if encoder.rows() != json.k || encoder.cols() != json.n {
            return Err(Error::SizeError(format!("declared {}x{} but encoder is {}x{}", json.k, json.n, encoder.rows(), encoder.cols())));
        }
        let code = Self::from_encoder(encoder)?;
        if code.forney != json.forney {
            return Err(Error::Parse(format!("declared forney {:?} but encoder has {:?}", json.forney, code.forney)));
        }
        Ok(code)
    }
}

/// JSON mirror: `{q, n, k, forney, G}` with coefficient lists in `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub forney: Vec<usize>,
    #[serde(rename = "G")]
    pub encoder: Vec<Vec<Vec<u32>>>,
}

/// The encoder whose rows are `𝔭^{-1}(g^{(a)})` over the support of `g`.
///
/// `g` must be semi-reduced and delay-free, and the resulting rows basic.
pub fn encoder_from_generator(g: &SkewPoly) -> Result<ConvCode> {
    if !g.is_semi_reduced() {
        return Err(Error::NotSemiReduced);
    }
    if !g.is_delay_free() {
        return Err(Error::NotDelayFree);
    }
    let support = g.support();
    if support.is_empty() {
        return Err(Error::NotBasic);
    }
    let field = g.ctx().field().clone();
    let rows = support.iter().map(|&a| g.component(a)?.p_inverse()).collect::<Result<Vec<_>>>()?;
    let mut code = ConvCode::from_encoder(PolyMatrix::from_rows(&field, rows)?)?;
    code.generator = Some(g.clone());
    Ok(code)
}

/// Hamming weight summed over all coefficient vectors.
pub fn codeword_weight(v: &[Poly]) -> usize {
    v.iter().map(Poly::weight).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceOptions {
    pub max_states: u64,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions { max_states: 1_000_000 }
    }
}

/// Minimum weight of a nonzero codeword: the cheapest trellis path that
/// leaves the zero state and returns to it.
pub fn free_distance(code: &ConvCode, options: DistanceOptions) -> Result<usize> {
    let f = &code.field;
    let q = f.order() as u64;
    let (n, k) = (code.n(), code.k());
    let nus: Vec<usize> = code.encoder.row_degrees().into_iter().map(|d| d.expect("nonzero rows")).collect();
    let delta: usize = nus.iter().sum();
    let states = (q as u128).checked_pow(delta as u32).unwrap_or(u128::MAX);
    if states > options.max_states as u128 {
        return Err(Error::StateSpaceTooLarge { states, limit: options.max_states });
    }
    let states = states as usize;
    let inputs = (q as usize).pow(k as u32);

    // Row i owns digits [offset_i, offset_i + ν_i); digit 0 of a row is its
    // most recent input.
    let mut offsets = Vec::with_capacity(k);
    let mut acc = 0;
    for &nu in &nus {
        offsets.push(acc);
        acc += nu;
    }
    let coeff = |i: usize, s: usize| -> Vec<u32> { (0..n).map(|c| code.encoder[(i, c)].coeff(s)).collect() };
    let powers: Vec<usize> = (0..=delta).map(|e| (q as usize).pow(e as u32)).collect();
    let digit = |x: usize, pos: usize| (x / powers[pos]) % q as usize;

    let add_into = |acc: &mut [u32], v: &[u32], c: u32| {
        if c != 0 {
            for (a, &x) in acc.iter_mut().zip(v) {
                *a = f.add(*a, f.mul(c, x));
            }
        }
    };
    let mut state_out = vec![0u32; states * n];
    for s in 0..states {
        let out = &mut state_out[s * n..(s + 1) * n];
        for i in 0..k {
            for p in 0..nus[i] {
                add_into(out, &coeff(i, p + 1), digit(s, offsets[i] + p) as u32);
            }
        }
    }
    let mut input_out = vec![0u32; inputs * n];
    for u in 0..inputs {
        let out = &mut input_out[u * n..(u + 1) * n];
        for i in 0..k {
            add_into(out, &coeff(i, 0), ((u / (q as usize).pow(i as u32)) % q as usize) as u32);
        }
    }
    let next_state = |s: usize, u: usize| -> usize {
        let mut t = 0;
        for i in 0..k {
            let nu = nus[i];
            if nu == 0 {
                continue;
            }
            let seg = (s / powers[offsets[i]]) % powers[nu];
            let ui = (u / (q as usize).pow(i as u32)) % q as usize;
            t += (ui + q as usize * (seg % powers[nu - 1])) * powers[offsets[i]];
        }
        t
    };
    let weight = |s: usize, u: usize| -> usize {
        let so = &state_out[s * n..(s + 1) * n];
        let io = &input_out[u * n..(u + 1) * n];
        so.iter().zip(io).filter(|(&a, &b)| f.add(a, b) != 0).count()
    };

    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; states];
    let mut heap = BinaryHeap::new();
    for u in 1..inputs {
        let (t, w) = (next_state(0, u), weight(0, u));
        if t == 0 {
            best = best.min(w);
        } else if w < dist[t] {
            dist[t] = w;
            heap.push(Reverse((w, t)));
        }
    }
    while let Some(Reverse((d, s))) = heap.pop() {
        if d >= best {
            break;
        }
        if d > dist[s] {
            continue;
        }
        for u in 0..inputs {
            let (t, w) = (next_state(s, u), d + weight(s, u));
            if t == 0 {
                best = best.min(w);
            } else if w < dist[t] {
                dist[t] = w;
                heap.push(Reverse((w, t)));
            }
        }
    }
    Ok(best)
}
