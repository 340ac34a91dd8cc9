//! Independent verification of engine output by brute force.
//!
//! Points are placed at concrete coordinates `([1 : r_i], [1 : q_j])` over
//! a large prime field, with the parameters drawn deterministically from a
//! seed.  For each bidegree the conditions imposed by the scheme become a
//! matrix on the monomial basis, and exact rank computations yield the
//! bigraded Hilbert function and minimal-generator counts, which are then
//! compared against the values the resolution predicts.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use bigres_core::engine::resolve;
use bigres_core::scheme::double_points_of;
use bigres_core::{FatPointScheme, FreeResolution, Partition};

use crate::field::{Matrix, PrimeField};

pub const DEFAULT_PRIME: u64 = 1_000_003;
/// A second prime for cross-checking characteristic independence.
pub const ALTERNATE_PRIME: u64 = 1_000_033;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} out of supported range (10^6 < p < 2^31)")]
    PrimeOutOfRange(u64),
    #[error("could not draw distinct point parameters; change the seed")]
    ParameterCollision,
    #[error("box ({0}, {1}) too small: it must cover every shift of the resolution plus margin 1")]
    BoxTooSmall(usize, usize),
}

/// Reproducibility knobs for the oracle.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub prime: u64,
    pub seed: u64,
    /// Verification rectangle `[0, xmax] x [0, ymax]`.
    pub bbox: (usize, usize),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl OracleConfig {
    pub fn new(prime: u64, seed: u64, bbox: (usize, usize)) -> Result<Self, OracleError> {
        if prime <= 1_000_000 || prime >= (1 << 31) {
            return Err(OracleError::PrimeOutOfRange(prime));
        }
        if !is_prime(prime) {
            return Err(OracleError::NotPrime(prime));
        }
        Ok(OracleConfig { prime, seed, bbox })
    }

    /// Default box `[0, 2r+1] x [0, 2*lambda_1+1]`, covering every shift
    /// the sweep can produce plus a stabilization margin.
    pub fn default_box(lambda: &Partition) -> (usize, usize) {
        (2 * lambda.num_parts() + 1, 2 * lambda.width() + 1)
    }

    pub fn for_lambda(lambda: &Partition, prime: u64, seed: u64) -> Result<Self, OracleError> {
        Self::new(prime, seed, Self::default_box(lambda))
    }
}

/// Nonnegative integers indexed by a bidegree box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidegreeTable {
    pub xmax: usize,
    pub ymax: usize,
    values: Vec<i64>,
}

impl BidegreeTable {
    fn new(xmax: usize, ymax: usize) -> Self {
        BidegreeTable { xmax, ymax, values: vec![0; (xmax + 1) * (ymax + 1)] }
    }

    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.values[a * (self.ymax + 1) + b]
    }

    fn set(&mut self, a: usize, b: usize, v: i64) {
        self.values[a * (self.ymax + 1) + b] = v;
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..=self.xmax).flat_map(move |a| (0..=self.ymax).map(move |b| (a, b, self.get(a, b))))
    }
}

/// Distinct parameters for the two rulings, drawn from the seed.
struct Parameters {
    r: Vec<u64>,
    q: Vec<u64>,
}

fn draw_parameters(cfg: &OracleConfig, rows: usize, cols: usize) -> Result<Parameters, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut draw = |n: usize| -> Result<Vec<u64>, OracleError> {
        let mut out: Vec<u64> = Vec::with_capacity(n);
        let mut attempts = 0;
        while out.len() < n {
            let v = rng.random_range(1..cfg.prime);
            if out.contains(&v) {
                attempts += 1;
                if attempts > 64 {
                    return Err(OracleError::ParameterCollision);
                }
                continue;
            }
            out.push(v);
        }
        Ok(out)
    };
    Ok(Parameters { r: draw(rows)?, q: draw(cols)? })
}

/// Rows of the conditions matrix for one bidegree `(a, b)`.
///
/// The monomial basis of `S_(a,b)` is `x0^(a-c) x1^c y0^(b-d) y1^d`,
/// column index `c * (b+1) + d`.  Every point contributes its evaluation
/// row; a double point additionally contributes the four first-partial
/// rows.  (The evaluation row is kept even for double points: the Euler
/// relations make it redundant except at bidegree (0,0), where the degree
/// coefficients vanish.)
fn conditions_matrix(
    z: &FatPointScheme,
    params: &Parameters,
    f: &PrimeField,
    a: usize,
    b: usize,
) -> Matrix {
    let cols = (a + 1) * (b + 1);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for i in 1..=z.rows() {
        for j in 1..=z.cols() {
            let m = z.multiplicity(i, j);
            if m == 0 {
                continue;
            }
            let r = params.r[i - 1];
            let q = params.q[j - 1];
            // powers r^c, q^d at x0 = y0 = 1
            let mut rp = vec![1u64; a + 1];
            for c in 1..=a {
                rp[c] = f.mul(rp[c - 1], r);
            }
            let mut qp = vec![1u64; b + 1];
            for d in 1..=b {
                qp[d] = f.mul(qp[d - 1], q);
            }
            let mut value = vec![0u64; cols];
            for c in 0..=a {
                for d in 0..=b {
                    value[c * (b + 1) + d] = f.mul(rp[c], qp[d]);
                }
            }
            rows.push(value);
            if m == 2 {
                let mut dx0 = vec![0u64; cols];
                let mut dx1 = vec![0u64; cols];
                let mut dy0 = vec![0u64; cols];
                let mut dy1 = vec![0u64; cols];
                for c in 0..=a {
                    for d in 0..=b {
                        let k = c * (b + 1) + d;
                        dx0[k] = f.mul(f.reduce((a - c) as u64), f.mul(rp[c], qp[d]));
                        if c > 0 {
                            dx1[k] = f.mul(f.reduce(c as u64), f.mul(rp[c - 1], qp[d]));
                        }
                        dy0[k] = f.mul(f.reduce((b - d) as u64), f.mul(rp[c], qp[d]));
                        if d > 0 {
                            dy1[k] = f.mul(f.reduce(d as u64), f.mul(rp[c], qp[d - 1]));
                        }
                    }
                }
                rows.extend([dx0, dx1, dy0, dy1]);
            }
        }
    }
    Matrix::from_rows(rows, cols)
}

/// The bigraded Hilbert function of `S/I_Z` on the box, by exact rank.
pub fn hilbert_function(z: &FatPointScheme, cfg: &OracleConfig) -> Result<BidegreeTable, OracleError> {
    let f = PrimeField::new(cfg.prime);
    let params = draw_parameters(cfg, z.rows(), z.cols())?;
    let (xmax, ymax) = cfg.bbox;
    let mut table = BidegreeTable::new(xmax, ymax);
    let ranks: Vec<i64> = (0..=xmax)
        .flat_map(|a| (0..=ymax).map(move |b| (a, b)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(a, b)| conditions_matrix(z, &params, &f, a, b).rank(&f) as i64)
        .collect();
    for (k, (a, b)) in (0..=xmax).flat_map(|a| (0..=ymax).map(move |b| (a, b))).enumerate() {
        table.set(a, b, ranks[k]);
    }
    Ok(table)
}

/// The Hilbert function the resolution predicts:
/// `N(a,b) = T(a,b) - sum_{s0} T(a-i, b-j) + sum_{s1} T - sum_{s2} T`
/// with `T(p,q) = (p+1)(q+1)` for `p, q >= 0` and 0 otherwise.
pub fn hilbert_from_resolution(res: &FreeResolution, bbox: (usize, usize)) -> BidegreeTable {
    let (xmax, ymax) = bbox;
    let t = |a: i64, b: i64| if a >= 0 && b >= 0 { (a + 1) * (b + 1) } else { 0 };
    let mut table = BidegreeTable::new(xmax, ymax);
    for a in 0..=xmax as i64 {
        for b in 0..=ymax as i64 {
            let mut n = t(a, b);
            for s in res.s0.iter() {
                n -= t(a - s.x as i64, b - s.y as i64);
            }
            for s in res.s1.iter() {
                n += t(a - s.x as i64, b - s.y as i64);
            }
            for s in res.s2.iter() {
                n -= t(a - s.x as i64, b - s.y as i64);
            }
            table.set(a as usize, b as usize, n);
        }
    }
    table
}

/// Counts of minimal generators of `I_Z` per bidegree:
/// `dim I_(a,b) - dim(x-span of I_(a-1,b) + y-span of I_(a,b-1))`.
pub fn minimal_generator_counts(
    z: &FatPointScheme,
    cfg: &OracleConfig,
) -> Result<BidegreeTable, OracleError> {
    let f = PrimeField::new(cfg.prime);
    let params = draw_parameters(cfg, z.rows(), z.cols())?;
    let (xmax, ymax) = cfg.bbox;
    let mut table = BidegreeTable::new(xmax, ymax);
    // bases of I_(a,b) for the previous and current row of the box
    let mut prev_row: Vec<Vec<Vec<u64>>> = Vec::new();
    for a in 0..=xmax {
        let row: Vec<Vec<Vec<u64>>> = (0..=ymax)
            .into_par_iter()
            .map(|b| conditions_matrix(z, &params, &f, a, b).nullspace(&f))
            .collect();
        let counts: Vec<i64> = (0..=ymax)
            .into_par_iter()
            .map(|b| {
                let dim = row[b].len();
                let cols = (a + 1) * (b + 1);
                let mut span: Vec<Vec<u64>> = Vec::new();
                if a > 0 {
                    for v in &prev_row[b] {
                        // times x0: the x1-exponent c is unchanged
                        let mut x0 = vec![0u64; cols];
                        let mut x1 = vec![0u64; cols];
                        for c in 0..a {
                            for d in 0..=b {
                                let src = v[c * (b + 1) + d];
                                x0[c * (b + 1) + d] = src;
                                x1[(c + 1) * (b + 1) + d] = src;
                            }
                        }
                        span.push(x0);
                        span.push(x1);
                    }
                }
                if b > 0 {
                    for v in &row[b - 1] {
                        let mut y0 = vec![0u64; cols];
                        let mut y1 = vec![0u64; cols];
                        for c in 0..=a {
                            for d in 0..b {
                                let src = v[c * b + d];
                                y0[c * (b + 1) + d] = src;
                                y1[c * (b + 1) + d + 1] = src;
                            }
                        }
                        span.push(y0);
                        span.push(y1);
                    }
                }
                let span_dim = Matrix::from_rows(span, cols).rank(&f);
                dim as i64 - span_dim as i64
            })
            .collect();
        for (b, &cnt) in counts.iter().enumerate() {
            table.set(a, b, cnt);
        }
        prev_row = row;
    }
    Ok(table)
}

/// One disagreement between oracle and resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub kind: MismatchKind,
    pub bidegree: (usize, usize),
    pub oracle: i64,
    pub resolution: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MismatchKind {
    Hilbert,
    Generators,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub lambda: Vec<usize>,
    pub prime: u64,
    pub seed: u64,
    pub bbox: (usize, usize),
    pub deep: bool,
    pub pass: bool,
    pub mismatches: Vec<Mismatch>,
}

/// Compares the engine's resolution for `lambda` against the oracle.
///
/// Shallow mode checks the Hilbert identity on the whole box; deep mode
/// additionally checks the minimal-generator counts against the `s0`
/// multiset.  Disagreements land in the report, not in an error.
pub fn verify(
    lambda: &Partition,
    cfg: &OracleConfig,
    deep: bool,
) -> Result<VerificationReport, OracleError> {
    let res = resolve(lambda);
    let (xmax, ymax) = cfg.bbox;
    let covered = res
        .s0
        .iter()
        .chain(res.s1.iter())
        .chain(res.s2.iter())
        .all(|s| s.x + 1 <= xmax && s.y + 1 <= ymax);
    if !covered {
        return Err(OracleError::BoxTooSmall(xmax, ymax));
    }

    let z = double_points_of(lambda);
    let actual = hilbert_function(&z, cfg)?;
    let predicted = hilbert_from_resolution(&res, cfg.bbox);
    let mut mismatches = Vec::new();
    for (a, b, v) in actual.cells() {
        let p = predicted.get(a, b);
        if v != p {
            mismatches.push(Mismatch {
                kind: MismatchKind::Hilbert,
                bidegree: (a, b),
                oracle: v,
                resolution: p,
            });
        }
    }
    if deep {
        let counts = minimal_generator_counts(&z, cfg)?;
        for (a, b, v) in counts.cells() {
            let expected = res.s0.multiplicity(bigres_core::Bidegree::new(a, b)) as i64;
            if v != expected {
                mismatches.push(Mismatch {
                    kind: MismatchKind::Generators,
                    bidegree: (a, b),
                    oracle: v,
                    resolution: expected,
                });
            }
        }
    }
    Ok(VerificationReport {
        lambda: lambda.parts().to_vec(),
        prime: cfg.prime,
        seed: cfg.seed,
        bbox: cfg.bbox,
        deep,
        pass: mismatches.is_empty(),
        mismatches,
    })
}
