//! Fat point schemes on a grid, the alpha/beta statistics, and the two
//! closed-form resolutions: ACM fat points and complete intersections.

use alloc::vec::Vec;

use crate::resolution::{Bidegree, FreeResolution, ShiftMultiset};
use crate::{Error, Partition, Result};

/// A grid-supported fat point scheme with multiplicities in `{0, 1, 2}`.
///
/// Row `i` corresponds to the ruling line `R_i`, column `j` to `Q_j`;
/// entry 0 means the point `R_i x Q_j` is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPointScheme {
    rows: usize,
    cols: usize,
    mult: Vec<Vec<u8>>,
}

impl FatPointScheme {
    pub fn new(mult: Vec<Vec<u8>>) -> Result<Self> {
        if mult.is_empty() || mult[0].is_empty() {
            return Err(Error::EmptyScheme);
        }
        let rows = mult.len();
        let cols = mult[0].len();
        for (i, row) in mult.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRows { row: i + 1 });
            }
            for (j, &m) in row.iter().enumerate() {
                if m > 2 {
                    return Err(Error::UnsupportedMultiplicity { row: i + 1, col: j + 1, value: m });
                }
            }
        }
        for i in 0..rows {
            if mult[i].iter().all(|&m| m == 0) {
                return Err(Error::EmptyRow { row: i + 1 });
            }
        }
        for j in 0..cols {
            if (0..rows).all(|i| mult[i][j] == 0) {
                return Err(Error::EmptyColumn { col: j + 1 });
            }
        }
        Ok(FatPointScheme { rows, cols, mult })
    }

    /// The number of distinct `R_i`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// The number of distinct `Q_j`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Multiplicity of the point `R_i x Q_j`, 1-based.
    pub fn multiplicity(&self, i: usize, j: usize) -> u8 {
        self.mult[i - 1][j - 1]
    }

    pub fn grid(&self) -> &[Vec<u8>] {
        &self.mult
    }

    /// `deg Z`: a double point contributes 3, a simple point 1.
    pub fn degree(&self) -> usize {
        self.mult
            .iter()
            .flatten()
            .map(|&m| (m as usize) * (m as usize + 1) / 2)
            .sum()
    }
}

/// Double points in Ferrers shape: `mult[i][j] = 2` iff `j <= lambda_i`.
pub fn double_points_of(lambda: &Partition) -> FatPointScheme {
    let cols = lambda.width();
    let mult = lambda
        .parts()
        .iter()
        .map(|&p| (1..=cols).map(|j| if j <= p { 2 } else { 0 }).collect())
        .collect();
    FatPointScheme::new(mult).expect("a partition yields a valid scheme")
}

/// The partitions `alpha_Z` and `beta_Z` attached to a fat point scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alpha: Partition,
    pub beta: Partition,
}

/// Row and column truncation statistics, sorted non-increasing.
///
/// Row `i` with maximal multiplicity `l_i` contributes the values
/// `a_{i,k} = sum_j (m_{i,j} - k)_+` for `k = 0, ..., l_i - 1`; columns
/// contribute analogously to `beta`.
pub fn alpha_beta_of(z: &FatPointScheme) -> AlphaBeta {
    let mut alpha = Vec::new();
    for i in 1..=z.rows() {
        let l = (1..=z.cols()).map(|j| z.multiplicity(i, j)).max().unwrap();
        for k in 0..l {
            let a: usize = (1..=z.cols())
                .map(|j| z.multiplicity(i, j).saturating_sub(k) as usize)
                .sum();
            alpha.push(a);
        }
    }
    let mut beta = Vec::new();
    for j in 1..=z.cols() {
        let l = (1..=z.rows()).map(|i| z.multiplicity(i, j)).max().unwrap();
        for k in 0..l {
            let b: usize = (1..=z.rows())
                .map(|i| z.multiplicity(i, j).saturating_sub(k) as usize)
                .sum();
            beta.push(b);
        }
    }
    AlphaBeta {
        alpha: Partition::from_sorted(alpha),
        beta: Partition::from_sorted(beta),
    }
}

/// A fat point scheme is ACM iff `alpha_Z* = beta_Z`.
pub fn is_acm(z: &FatPointScheme) -> bool {
    let ab = alpha_beta_of(z);
    ab.alpha.conjugate() == ab.beta
}

/// Resolution of an ACM fat point scheme with statistics `alpha`.
///
/// With `m` the length of `alpha`:
/// `s0 = {(m,0), (0,alpha_1)} u {(i-1, alpha_i) | alpha_i < alpha_{i-1}}` and
/// `s1 = {(m, alpha_m)} u {(i-1, alpha_{i-1}) | alpha_i < alpha_{i-1}}`,
/// descents taken over `i >= 2` only.
pub fn acm_resolution(alpha: &Partition) -> FreeResolution {
    let m = alpha.num_parts();
    let mut s0 = ShiftMultiset::new();
    let mut s1 = ShiftMultiset::new();
    s0.push(Bidegree::new(m, 0));
    s0.push(Bidegree::new(0, alpha.part(1)));
    s1.push(Bidegree::new(m, alpha.part(m)));
    for i in alpha.descents() {
        s0.push(Bidegree::new(i - 1, alpha.part(i)));
        s1.push(Bidegree::new(i - 1, alpha.part(i - 1)));
    }
    FreeResolution { s0, s1, s2: ShiftMultiset::new() }
}

/// Koszul resolution of a complete intersection of type `(r, t)`.
pub fn ci_resolution(r: usize, t: usize) -> FreeResolution {
    assert!(r >= 1 && t >= 1, "CI type must be positive");
    FreeResolution {
        s0: [(r, 0), (0, t)].into_iter().collect(),
        s1: [(r, t)].into_iter().collect(),
        s2: ShiftMultiset::new(),
    }
}
