//! Regression checks against the worked examples and the stated
//! properties, runnable from the command line.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codes::{encoder_from_generator, free_distance, ConvCode, DistanceOptions};
use crate::construct::rook::sweep;
use crate::construct::{construct_code, construct_general, prescribed_degree_matrix, DegreeSpec};
use crate::error::Result;
use crate::field::GaloisField;
use crate::matring::{complete_to_unit, semi_reduce, xi, xi_inv, ElementaryUnit, MMatrix};
use crate::poly::Poly;
use crate::polymat::PolyMatrix;
use crate::skew::{RingContext, SkewPoly};

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

// ---- worked examples -----------------------------------------------------

pub fn reduction_example() -> MMatrix {
    let ctx = RingContext::new(&GaloisField::with_order(5).expect("prime"), 4).expect("n | q - 1");
    MMatrix::parse_text(&ctx, "2+t, 1, 4, 4\n0, 1, 3, 0\n4t, 2t, 1+t, 1\n0, 0, 0, 0").expect("member of M")
}

pub fn reduced_example() -> MMatrix {
    let ctx = reduction_example().ctx().clone();
    MMatrix::parse_text(&ctx, "2, 1, 0, 0\n0, 1, 3, 0\n4t, 0, 1, 1\n0, 0, 0, 0").expect("member of M")
}

/// The encoder of the semi-reduced example generator, as printed.
pub fn reduction2_encoder() -> PolyMatrix {
    let f = GaloisField::with_order(5).expect("prime");
    PolyMatrix::parse_text(&f, "4z+3, 2z+3, z+3, 3z+3\n2z+4, 3z+2, 2z+1, 3z+3\nz^2+4z+4, z^2+3z+1, z^2+z+4, z^2+2z+1", 'z')
        .expect("valid encoder text")
}

/// The 3-dimensional code over F_8 for the automorphism (1 2 3)(4 5 6 7).
pub fn general_example() -> Result<ConvCode> {
    let f = GaloisField::with_order(8)?;
    let a = |k: i64| f.alpha_pow(k);
    let ctx = RingContext::with_sigma(&f, &[2, 3, 1, 5, 6, 7, 4])?;
    let m1 = MMatrix::parse_text(&RingContext::new(&f, 3)?, &format!("0, 0, 0\n0, 1, {}\n0, 0, 0", a(4)))?;
    let m2 =
        MMatrix::parse_text(&RingContext::new(&f, 4)?, &format!("{}, 1, {}, 0\n0, 0, 0, 0\n0, 0, {}, 1\n0, 0, 0, 0", a(6), a(1), a(3)))?;
    encoder_from_generator(&construct_general(&ctx, &[m1, m2])?)
}

/// `e_1 (1 + z + … + z^δ)` with `n = q − 1`.
pub fn mds_generator(q: u64, delta: usize) -> Result<SkewPoly> {
    let f = GaloisField::with_order(q)?;
    let ctx = RingContext::new(&f, (q - 1) as usize)?;
    let e1 = SkewPoly::idempotent(&ctx, 1)?;
    let sum = (0..=delta).fold(SkewPoly::zero(&ctx), |acc, i| &acc + &SkewPoly::z_power(&ctx, i));
    Ok(&e1 * &sum)
}

/// `(e_1 + … + e_k)(1 + z)` with `n = q − 1`.
pub fn unit_memory_generator(q: u64, k: usize) -> Result<SkewPoly> {
    let f = GaloisField::with_order(q)?;
    let ctx = RingContext::new(&f, (q - 1) as usize)?;
    let mut e = vec![0; ctx.n()];
    e[..k].iter_mut().for_each(|x| *x = 1);
    let lead = SkewPoly::constant(&ctx, e)?;
    Ok(&lead * &(&SkewPoly::one(&ctx) + &SkewPoly::z_power(&ctx, 1)))
}

// ---- random inputs -------------------------------------------------------

pub fn random_poly<R: Rng>(f: &GaloisField, max_deg: usize, rng: &mut R) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::new(f, (0..=deg).map(|_| rng.gen_range(0..f.order())).collect())
}

pub fn random_skew<R: Rng>(ctx: &RingContext, max_deg: usize, rng: &mut R) -> SkewPoly {
    let q = ctx.field().order();
    let deg = rng.gen_range(0..=max_deg);
    let coeffs = (0..=deg).map(|_| (0..ctx.n()).map(|_| rng.gen_range(0..q)).collect()).collect();
    SkewPoly::new(ctx, coeffs).expect("valid coefficients")
}

/// Distinct pivots `j_i` and degrees `d_i ≤ max_d` obeying `j_i < i ⇒ d_i > 0`.
pub fn random_degree_spec<R: Rng>(n: usize, max_d: usize, rng: &mut R) -> DegreeSpec {
    let mut cols: Vec<usize> = (1..=n).collect();
    cols.shuffle(rng);
    let js: Vec<usize> = cols[..n - 1].to_vec();
    let ds =
        js.iter().enumerate().map(|(i, &j)| if j < i + 1 { rng.gen_range(1..=max_d.max(1)) } else { rng.gen_range(0..=max_d) }).collect();
    DegreeSpec::new(n, js, ds).expect("constraints hold by construction")
}

/// A delay-free element of `M` with some zero rows, semi-reduced; about
/// one row in four is multiplied by `1 + t` to produce non-basic cases.
pub fn random_semi_reduced_member<R: Rng>(ctx: &RingContext, rng: &mut R) -> MMatrix {
    let f = ctx.field();
    let n = ctx.n();
    let q = f.order();
    let zero_rows = rng.gen_range(1..n);
    let mut rows: Vec<usize> = (0..n).collect();
    rows.shuffle(rng);
    let zeroed = &rows[..zero_rows];
    let mut m = PolyMatrix::zeros(f, n, n);
    for a in 0..n {
        if zeroed.contains(&a) {
            continue;
        }
        for b in 0..n {
            let mut p = random_poly(f, 2, rng);
            if b < a {
                p = p.shift(1);
            }
            if b == a {
                let c = rng.gen_range(1..q);
                let mut cs = p.coeffs().to_vec();
                if cs.is_empty() {
                    cs.push(c);
                } else {
                    cs[0] = c;
                }
                p = Poly::new(f, cs);
            }
            m[(a, b)] = p;
        }
        if rng.gen_ratio(1, 4) {
            let factor = Poly::new(f, vec![1, 1]);
            for b in 0..n {
                let v = &m[(a, b)] * &factor;
                m[(a, b)] = v;
            }
        }
    }
    semi_reduce(&MMatrix::new(ctx, m).expect("member by construction")).reduced
}

/// Index multisets with `k ≤ (n+1)/2` or at most two distinct residues.
pub fn random_forney<R: Rng>(n: usize, max_index: usize, rng: &mut R) -> Vec<usize> {
    if rng.gen_bool(0.5) {
        let k = rng.gen_range(1..=n.div_ceil(2));
        (0..k).map(|_| rng.gen_range(0..=max_index)).collect()
    } else {
        let k = rng.gen_range(1..n);
        let (r1, r2) = (rng.gen_range(0..n), rng.gen_range(0..n));
        (0..k)
            .map(|_| {
                let r = if rng.gen_bool(0.5) { r1 } else { r2 };
                r + n * rng.gen_range(0..=max_index / n)
            })
            .collect()
    }
}

// ---- checks --------------------------------------------------------------

fn timed(id: usize, name: &'static str, body: impl FnOnce() -> Result<(bool, String)>) -> Check {
    let start = Instant::now();
    let (passed, detail) = body().unwrap_or_else(|e| (false, format!("error: {e}")));
    Check { id, name, passed, detail, seconds: start.elapsed().as_secs_f64() }
}

fn within(d: Duration, secs: u64) -> bool {
    d < Duration::from_secs(secs)
}

pub fn check_reduction() -> Check {
    timed(1, "semi-reduction regression", || {
        let start = Instant::now();
        let r = semi_reduce(&reduction_example());
        let expect = vec![ElementaryUnit::Lower { a: 3, b: 2, exp: 1, alpha: 3 }, ElementaryUnit::Upper { a: 1, b: 3, exp: 0, alpha: 1 }];
        let ok = r.reduced == reduced_example() && r.factors == expect && within(start.elapsed(), 1);
        Ok((ok, format!("factors {:?}", r.factors)))
    })
}

pub fn check_encoder() -> Check {
    timed(2, "encoder regression", || {
        let code = encoder_from_generator(&xi_inv(&reduced_example())?)?;
        Ok((code.encoder() == &reduction2_encoder(), format!("forney {:?}", code.forney_indices())))
    })
}

pub fn check_distances() -> Check {
    timed(3, "distance regressions", || {
        let start = Instant::now();
        let code = encoder_from_generator(&xi_inv(&reduced_example())?)?;
        let d1 = free_distance(&code, DistanceOptions::default())?;
        let t1 = start.elapsed();
        let start = Instant::now();
        let d2 = free_distance(&general_example()?, DistanceOptions::default())?;
        let t2 = start.elapsed();
        let ok = d1 == 6 && d2 == 12 && within(t1, 10) && within(t2, 60);
        Ok((ok, format!("{d1} and {d2}")))
    })
}

pub fn check_mds() -> Check {
    timed(4, "MDS family", || {
        let mut out = Vec::new();
        let mut ok = true;
        for q in [4u64, 5, 7, 8] {
            let n = (q - 1) as usize;
            for delta in (1..=3).filter(|&d| d < n) {
                let start = Instant::now();
                let d = free_distance(&encoder_from_generator(&mds_generator(q, delta)?)?, DistanceOptions::default())?;
                ok &= d == n * (delta + 1) && within(start.elapsed(), 30);
                out.push(format!("q={q} δ={delta}: {d}"));
            }
        }
        Ok((ok, out.join(", ")))
    })
}

pub fn check_unit_memory() -> Check {
    timed(5, "unit-memory family", || {
        let mut out = Vec::new();
        let mut ok = true;
        for (q, k, expect) in [(5u64, 2usize, 6usize), (7, 3, 8), (8, 3, 10)] {
            let d = free_distance(&encoder_from_generator(&unit_memory_generator(q, k)?)?, DistanceOptions::default())?;
            ok &= d == expect;
            out.push(format!("q={q} k={k}: {d}"));
        }
        Ok((ok, out.join(", ")))
    })
}

pub fn check_rook_sweep(max_n: usize) -> Check {
    timed(6, "rook sweep", || {
        let mut total = 0;
        let mut bad = Vec::new();
        for n in 2..=max_n {
            let report = sweep(n)?;
            total += report.instances;
            bad.extend(report.unsolvable.into_iter().map(|r| (n, r)));
        }
        Ok((bad.is_empty(), format!("{total} instances for n <= {max_n}, unsolvable {bad:?}")))
    })
}

pub fn check_xi(seed: u64) -> Check {
    timed(7, "isomorphism properties", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = 0;
        for (q, n) in [(4u64, 3usize), (5, 4), (8, 7)] {
            let ctx = RingContext::new(&GaloisField::with_order(q)?, n)?;
            for _ in 0..200 {
                let (f, g) = (random_skew(&ctx, 8, &mut rng), random_skew(&ctx, 8, &mut rng));
                let (xf, xg) = (xi(&f)?, xi(&g)?);
                let ok = xi(&(&f * &g))? == &xf * &xg && xi(&(&f + &g))? == xf.checked_add(&xg)? && xi_inv(&xf)? == f;
                failures += usize::from(!ok);
            }
        }
        Ok((failures == 0, format!("{failures} failures in 600 pairs")))
    })
}

pub fn check_degree_specs(seed: u64) -> Check {
    timed(8, "prescribed-degree matrices", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = 0;
        let f = GaloisField::with_order(5)?;
        for n in 3..=6 {
            let ctx = RingContext::new(&f, n)?;
            for _ in 0..100 {
                let spec = random_degree_spec(n, 3, &mut rng);
                let m = prescribed_degree_matrix(&f, &spec)?;
                let mut rows: Vec<Vec<Poly>> = (0..n - 1).map(|i| m.row(i).to_vec()).collect();
                rows.push(vec![Poly::zero(&f); n]);
                let full = MMatrix::new(&ctx, PolyMatrix::from_rows(&f, rows)?)?;
                let ok = spec.violations(&m).is_empty() && full.is_semi_reduced() && full.is_basic_member();
                failures += usize::from(!ok);
            }
        }
        Ok((failures == 0, format!("{failures} failures in 400 specs")))
    })
}

pub fn check_forney(seed: u64) -> Check {
    timed(9, "Forney-index construction", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = Vec::new();
        for (q, n) in [(5u64, 4usize), (8, 7)] {
            let ctx = RingContext::new(&GaloisField::with_order(q)?, n)?;
            for _ in 0..50 {
                let mut nus = random_forney(n, 2 * n, &mut rng);
                match construct_code(&ctx, &nus) {
                    Ok(code) => {
                        nus.sort_unstable();
                        if code.forney_indices() != nus.as_slice() || code.k() != nus.len() {
                            failures.push(format!("{nus:?} gave {:?}", code.forney_indices()));
                        }
                    }
                    Err(e) => failures.push(format!("{nus:?}: {e}")),
                }
            }
        }
        Ok((failures.is_empty(), format!("{} failures in 100 multisets {failures:?}", failures.len())))
    })
}

pub fn check_completion(seed: u64) -> Check {
    timed(10, "completion equivalence", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = GaloisField::with_order(5)?;
        let (mut failures, mut basic) = (0, 0);
        for n in 3..=5 {
            let ctx = RingContext::new(&f, n)?;
            for _ in 0..100 {
                let m = random_semi_reduced_member(&ctx, &mut rng);
                let member = m.is_basic_member();
                basic += usize::from(member);
                let ok = match complete_to_unit(&m) {
                    Ok(u) => member && u.is_unit() && m.support().iter().all(|&a| u.matrix().row(a - 1) == m.matrix().row(a - 1)),
                    Err(_) => !member,
                };
                failures += usize::from(!ok);
            }
        }
        Ok((failures == 0, format!("{failures} failures in 300 matrices ({basic} basic)")))
    })
}

/// Runs every check in order; `sweep_n` bounds the rook sweep.
pub fn run_all(seed: u64, sweep_n: usize) -> Vec<Check> {
    vec![
        check_reduction(),
        check_encoder(),
        check_distances(),
        check_mds(),
        check_unit_memory(),
        check_rook_sweep(sweep_n),
        check_xi(seed),
        check_degree_specs(seed),
        check_forney(seed),
        check_completion(seed),
    ]
}
