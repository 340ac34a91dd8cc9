//! Degree matrices and their corners.
//!
//! The degree matrix of `Z` has a 2 on the Ferrers region of `lambda` and a
//! 1 elsewhere; the degree matrix of `Y` borders it with an extra row and
//! column of 1s.  Base corners sit where a 1 has a 2 directly above and
//! directly to its left; together with their row/column combinations they
//! drive the mapping cone sweep.
//!
//! Coordinates are `(row, column)`, 1-based, and the lex order compares the
//! row index first.  (Printed corner sets elsewhere use the same order, so
//! `(4,2) < (3,4)` never arises: sorting is always descending.)

use alloc::vec::Vec;

use crate::resolution::Bidegree;
use crate::Partition;

/// A small matrix of multiplicities, 1-based accessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMatrix {
    rows: usize,
    cols: usize,
    m: Vec<Vec<u8>>,
}

impl DegreeMatrix {
    fn new(m: Vec<Vec<u8>>) -> Self {
        let rows = m.len();
        let cols = m[0].len();
        DegreeMatrix { rows, cols, m }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.m[i - 1][j - 1]
    }

    fn set(&mut self, i: usize, j: usize, v: u8) {
        self.m[i - 1][j - 1] = v;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Vec<u8>] {
        &self.m
    }

    fn col_sum(&self, j: usize, rows: impl Iterator<Item = usize>) -> usize {
        rows.map(|i| self.get(i, j) as usize).sum()
    }

    fn row_sum(&self, i: usize, cols: impl Iterator<Item = usize>) -> usize {
        cols.map(|j| self.get(i, j) as usize).sum()
    }
}

/// The `r x lambda_1` degree matrix of `Z`.
pub fn degree_matrix_z(lambda: &Partition) -> DegreeMatrix {
    let cols = lambda.width();
    DegreeMatrix::new(
        lambda
            .parts()
            .iter()
            .map(|&p| (1..=cols).map(|j| if j <= p { 2 } else { 1 }).collect())
            .collect(),
    )
}

/// The `(r+1) x (lambda_1+1)` degree matrix of `Y`: `M_lambda` bordered by 1s.
pub fn degree_matrix_y(lambda: &Partition) -> DegreeMatrix {
    let cols = lambda.width() + 1;
    let mut m: Vec<Vec<u8>> = lambda
        .parts()
        .iter()
        .map(|&p| (1..=cols).map(|j| if j <= p { 2 } else { 1 }).collect())
        .collect();
    m.push(alloc::vec![1; cols]);
    DegreeMatrix::new(m)
}

/// A 1-based position in a degree matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub i: usize,
    pub j: usize,
}

impl Corner {
    pub const fn new(i: usize, j: usize) -> Self {
        Corner { i, j }
    }
}

/// Base corners `{(i, lambda_i + 1) | lambda_i < lambda_{i-1}}`, lex descending.
pub fn base_corners(lambda: &Partition) -> Vec<Corner> {
    let mut out: Vec<Corner> = lambda
        .descents()
        .map(|i| Corner::new(i, lambda.part(i) + 1))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// All corners: base corners plus `{(i, l) | (i, j), (k, l) base, i > k}`,
/// lex descending.
pub fn corners(lambda: &Partition) -> Vec<Corner> {
    let base = base_corners(lambda);
    let mut out = base.clone();
    for a in &base {
        for b in &base {
            if a.i > b.i {
                out.push(Corner::new(a.i, b.j));
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Outside corners of the bordered matrix `M_Y`.
///
/// The bottom border contributes `(r+1, 1)`, `(r+1, j)` for each base
/// corner `(i, j)`, and `(r+1, lambda_1+1)`; the right border contributes
/// `(1, lambda_1+1)` and `(i, lambda_1+1)` for each base corner.
pub fn outside_corners(lambda: &Partition) -> Vec<Corner> {
    let r = lambda.num_parts();
    let w = lambda.width();
    let base = base_corners(lambda);
    let mut out = Vec::with_capacity(2 * base.len() + 3);
    out.push(Corner::new(r + 1, 1));
    for c in base.iter() {
        out.push(Corner::new(r + 1, c.j));
    }
    out.push(Corner::new(r + 1, w + 1));
    out.push(Corner::new(1, w + 1));
    for c in base.iter().rev() {
        out.push(Corner::new(c.i, w + 1));
    }
    out
}

/// Exponent data of a generator form: the form is
/// `prod_a L_{R_a}^{rexp[a]} * prod_b L_{Q_b}^{qexp[b]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormExponents {
    pub rexp: Vec<usize>,
    pub qexp: Vec<usize>,
    pub bidegree: Bidegree,
}

/// The minimal generators of the completion ideal, one per outside corner.
///
/// For `(i, j)` the exponents are read from the degree matrix of `Y`:
/// column `j` strictly above the corner and row `i` strictly to its left.
pub fn generator_exponents_y(lambda: &Partition) -> Vec<FormExponents> {
    let my = degree_matrix_y(lambda);
    outside_corners(lambda)
        .into_iter()
        .map(|c| {
            let rexp: Vec<usize> = (1..c.i).map(|a| my.get(a, c.j) as usize).collect();
            let qexp: Vec<usize> = (1..c.j).map(|b| my.get(c.i, b) as usize).collect();
            let bidegree = Bidegree::new(rexp.iter().sum(), qexp.iter().sum());
            FormExponents { rexp, qexp, bidegree }
        })
        .collect()
}

/// One mapping cone step: the corner, the four matrix sums read from the
/// working matrix before the step, and the matrix after zeroing the region
/// dominating the corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub corner: Corner,
    /// Column sum strictly above the corner; the x-degree of the form.
    pub u: usize,
    /// Row sum strictly left of the corner; the y-degree of the form.
    pub v: usize,
    /// Column sum from the corner down; first coordinate of the colon CI type.
    pub a: usize,
    /// Row sum from the corner right; second coordinate of the colon CI type.
    pub b: usize,
    pub matrix_after: DegreeMatrix,
}

/// The full sweep over the corners, largest to smallest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerLedger {
    entries: Vec<LedgerEntry>,
}

impl CornerLedger {
    pub fn entries(&self) -> &[LedgerEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Processes the corners lex-descending against a working copy of
/// `M_lambda`, reading `u, v, a, b` from the current matrix and then
/// zeroing every entry that dominates the corner componentwise.
///
/// The zeroed region never reaches the strictly-above / strictly-left
/// rectangles, so `u` and `v` also match the pristine matrix; this is
/// asserted on every step.
pub fn corner_ledger(lambda: &Partition) -> CornerLedger {
    let pristine = degree_matrix_z(lambda);
    let mut work = pristine.clone();
    let r = lambda.num_parts();
    let w = lambda.width();
    let entries = corners(lambda)
        .into_iter()
        .map(|c| {
            let u = work.col_sum(c.j, 1..c.i);
            let v = work.row_sum(c.i, 1..c.j);
            let a = work.col_sum(c.j, c.i..=r);
            let b = work.row_sum(c.i, c.j..=w);
            assert_eq!(u, pristine.col_sum(c.j, 1..c.i), "u drifted from the pristine matrix");
            assert_eq!(v, pristine.row_sum(c.i, 1..c.j), "v drifted from the pristine matrix");
            for i in c.i..=r {
                for j in c.j..=w {
                    work.set(i, j, 0);
                }
            }
            LedgerEntry { corner: c, u, v, a, b, matrix_after: work.clone() }
        })
        .collect();
    CornerLedger { entries }
}
