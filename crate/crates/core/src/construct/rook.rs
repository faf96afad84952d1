//! The modified rook problem: place residues `r_1, …, r_k` into the circulant
//! `D̂_ab = (b − a) mod n` in pairwise different rows and columns.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RookInstance {
    pub n: usize,
    pub values: Vec<usize>,
}

/// Placements `(i_l, j_l)`, 1-based, in the order of the instance values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RookSolution {
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RookStrategy {
    /// Backtracking over rows in ascending order.
    Exhaustive,
    /// Only the proved constructions.
    Constructive,
    /// Constructions first, then backtracking.
    #[default]
    Auto,
}

impl std::str::FromStr for RookStrategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(RookStrategy::Exhaustive),
            "constructive" => Ok(RookStrategy::Constructive),
            "auto" => Ok(RookStrategy::Auto),
            other => Err(Error::Parse(format!("unknown rook strategy `{other}`"))),
        }
    }
}

impl RookInstance {
    pub fn new(n: usize, values: Vec<usize>) -> Result<Self> {
        let inst = RookInstance { n, values };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let (n, k) = (self.n, self.values.len());
        if n < 2 || k == 0 || k > n - 1 {
            return Err(Error::InvalidParameters(format!("need n >= 2 and 1 <= k <= n - 1, got n = {n}, k = {k}")));
        }
        if let Some(&r) = self.values.iter().find(|&&r| r >= n) {
            return Err(Error::InvalidParameters(format!("residue {r} is not in Z_{n}")));
        }
        Ok(())
    }

    /// Distinct rows, distinct columns, and `j_l − i_l ≡ r_l (mod n)`.
    pub fn is_solution(&self, sol: &RookSolution) -> bool {
        let n = self.n;
        if sol.pairs.len() != self.values.len() {
            return false;
        }
        let (mut rows, mut cols) = (vec![false; n + 1], vec![false; n + 1]);
        for (&(i, j), &r) in sol.pairs.iter().zip(&self.values) {
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return false;
            }
            if std::mem::replace(&mut rows[i], true) || std::mem::replace(&mut cols[j], true) {
                return false;
            }
            if (j + n - i) % n != r {
                return false;
            }
        }
        true
    }
}

/// Column holding residue `r` in row `i`.
fn column(n: usize, i: usize, r: usize) -> usize {
    (i + r - 1) % n + 1
}

pub fn rook_solve(inst: &RookInstance, strategy: RookStrategy) -> Result<RookSolution> {
    inst.validate()?;
    let found = match strategy {
        RookStrategy::Exhaustive => exhaustive(inst),
        RookStrategy::Constructive => Some(constructive(inst).ok_or(Error::ConstructiveCaseUnavailable)?),
        RookStrategy::Auto => constructive(inst).or_else(|| exhaustive(inst)),
    };
    let sol = found.ok_or(Error::RookInfeasible)?;
    assert!(inst.is_solution(&sol), "rook strategy produced an invalid placement {sol:?} for {inst:?}");
    Ok(sol)
}

fn constructive(inst: &RookInstance) -> Option<RookSolution> {
    constant(inst).or_else(|| two_valued(inst)).or_else(|| permutation_type(inst)).or_else(|| greedy(inst))
}

pub fn exhaustive(inst: &RookInstance) -> Option<RookSolution> {
    fn go(n: usize, values: &[usize], rows: &mut [bool], cols: &mut [bool], acc: &mut Vec<(usize, usize)>) -> bool {
        let Some(&r) = values.get(acc.len()) else {
            return true;
        };
        for i in 1..=n {
            let j = column(n, i, r);
            if rows[i] || cols[j] {
                continue;
            }
            rows[i] = true;
            cols[j] = true;
            acc.push((i, j));
            if go(n, values, rows, cols, acc) {
                return true;
            }
            acc.pop();
            rows[i] = false;
            cols[j] = false;
        }
        false
    }
    let n = inst.n;
    let mut acc = Vec::with_capacity(inst.values.len());
    go(n, &inst.values, &mut vec![false; n + 1], &mut vec![false; n + 1], &mut acc).then_some(RookSolution { pairs: acc })
}

/// All residues equal: the shifted diagonal `i_l = l`.
pub fn constant(inst: &RookInstance) -> Option<RookSolution> {
    let r = inst.values[0];
    if inst.values.iter().any(|&v| v != r) {
        return None;
    }
    Some(RookSolution { pairs: (1..=inst.values.len()).map(|i| (i, column(inst.n, i, r))).collect() })
}

/// For `k ≤ (n+1)/2` a free row whose column is also free always exists.
pub fn greedy(inst: &RookInstance) -> Option<RookSolution> {
    let n = inst.n;
    if 2 * inst.values.len() > n + 1 {
        return None;
    }
    let (mut rows, mut cols) = (vec![false; n + 1], vec![false; n + 1]);
    let mut pairs = Vec::new();
    for &r in &inst.values {
        let i = (1..=n).find(|&i| !rows[i] && !cols[column(n, i, r)])?;
        let j = column(n, i, r);
        rows[i] = true;
        cols[j] = true;
        pairs.push((i, j));
    }
    Some(RookSolution { pairs })
}

/// Placement from `r = x + y` with distinct `x` and distinct `y`:
/// row `−x + 1`, column `y + 1`.
fn place(n: usize, x: i64, y: i64) -> (usize, usize) {
    let m = n as i64;
    (((-x).rem_euclid(m) + 1) as usize, (y.rem_euclid(m) + 1) as usize)
}

/// Pairwise different residues.
pub fn permutation_type(inst: &RookInstance) -> Option<RookSolution> {
    let n = inst.n;
    let mut seen = vec![false; n];
    for &v in &inst.values {
        if std::mem::replace(&mut seen[v], true) {
            return None;
        }
    }
    let m = n as i64;
    // Complete to n − 1 distinct values; α is the residue left out.
    let alpha = (0..n).rev().find(|&v| !seen[v]).expect("k <= n - 1") as i64;
    // s = (1, …, n−1), s + x = y
    let x: Vec<i64> = if n % 2 == 1 { (1..m).map(|i| (i + 1) % m).collect() } else { (m / 2..m).chain(1..m / 2).collect() };
    let y: Vec<i64> = x.iter().zip(1..m).map(|(&xi, si)| (xi + si) % m).collect();
    // r' = s + α·1 = (−x) + (y + α·1); entry l of r' is the value l + α.
    let pairs = inst
        .values
        .iter()
        .map(|&v| {
            let l = ((v as i64 - alpha).rem_euclid(m) - 1) as usize;
            place(n, -x[l], y[l] + alpha)
        })
        .collect();
    Some(RookSolution { pairs })
}

/// At most two different residues: coset construction over `⟨β⟩`.
pub fn two_valued(inst: &RookInstance) -> Option<RookSolution> {
    let n = inst.n;
    let a = inst.values[0];
    let b = match inst.values.iter().find(|&&v| v != a) {
        Some(&b) => b,
        None => return constant(inst),
    };
    if inst.values.iter().any(|&v| v != a && v != b) {
        return None;
    }
    let m = n as i64;
    let beta = (b as i64 - a as i64).rem_euclid(m);
    let f = inst.values.iter().filter(|&&v| v == b).count();
    let g = gcd(beta, m);
    let l = m / g;
    let t: Vec<i64> = (0..g).flat_map(|c| (0..l).map(move |j| (c + j * beta) % m)).collect();
    let split = n - f - 1;
    // x skips t_{n−f}; the first n−f−1 pairs sum to 0, the last f to β.
    let mut slots_a = (0..split).map(|i| (t[i], -t[i]));
    let mut slots_b = (split + 1..n).map(|i| (t[i], beta - t[i]));
    let pairs = inst
        .values
        .iter()
        .map(|&v| {
            let (x, y) = if v == a { slots_a.next() } else { slots_b.next() }.expect("enough slots");
            place(n, x, y + a as i64)
        })
        .collect();
    Some(RookSolution { pairs })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Moves a solution into the first `n − 1` rows by the cyclic relabeling
/// `i ↦ i − α`, where `α` is a row not used by the solution (preferring `n`).
pub fn shift_to_first_rows(n: usize, sol: &RookSolution) -> RookSolution {
    let used = |r: usize| sol.pairs.iter().any(|&(i, _)| i == r);
    let alpha = if !used(n) { n } else { (1..=n).find(|&r| !used(r)).expect("k <= n - 1") };
    let relabel = |i: usize| (i + 2 * n - alpha - 1) % n + 1;
    RookSolution { pairs: sol.pairs.iter().map(|&(i, j)| (relabel(i), relabel(j))).collect() }
}

/// Multisets of size `k` over `0..n`, as non-decreasing vectors in
/// lexicographic order.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for v in start..n {
            acc.push(v);
            go(n, k, v, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Result of checking every multiset `r ∈ Z_n^{n−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub instances: usize,
    pub unsolvable: Vec<Vec<usize>>,
}

impl SweepReport {
    pub fn all_solvable(&self) -> bool {
        self.unsolvable.is_empty()
    }
}

/// Exhaustive search on every multiset of `n − 1` residues, spread over
/// the available cores; the report is sorted by instance.
pub fn sweep(n: usize) -> Result<SweepReport> {
    if n < 2 {
        return Err(Error::InvalidParameters("sweep needs n >= 2".into()));
    }
    let all = multisets(n, n - 1);
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get()).min(all.len().max(1));
    let chunk = all.len().div_ceil(workers);
    let mut unsolvable: Vec<Vec<usize>> = std::thread::scope(|s| {
        let handles: Vec<_> = all
            .chunks(chunk.max(1))
            .map(|part| {
                s.spawn(move || {
                    part.iter().filter(|r| exhaustive(&RookInstance { n, values: r.to_vec() }).is_none()).cloned().collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    unsolvable.sort();
    Ok(SweepReport { n, instances: all.len(), unsolvable })
}
