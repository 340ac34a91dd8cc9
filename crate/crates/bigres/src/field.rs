//! Dense exact linear algebra over a prime field F_p.
//!
//! Matrices are flat row-major `u64` buffers with entries reduced mod `p`.
//! Reduction uses a precomputed Barrett constant so the elimination inner
//! loop avoids hardware division.

/// A prime modulus with a Barrett reduction constant.
///
/// Valid for `p < 2^31`, which keeps every product below `2^62`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
    // floor(2^64 / p); the quotient estimate it yields is off by at most 2
    barrett: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p > 1 && p < (1 << 31), "modulus out of supported range");
        PrimeField { p, barrett: ((1u128 << 64) / p as u128) as u64 }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces any `x` modulo `p` without a hardware division.
    #[inline]
    pub fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }
}

/// A dense row-major matrix over F_p.
#[derive(Clone, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<u64>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            debug_assert_eq!(r.len(), cols);
            data.extend_from_slice(&r);
        }
        Matrix { rows: n, cols, data }
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (top, bottom) = self.data.split_at_mut(b * self.cols);
        top[a * self.cols..(a + 1) * self.cols].swap_with_slice(&mut bottom[..self.cols]);
    }

    /// Reduces in place to row echelon form; returns the pivot columns.
    pub fn echelonize(&mut self, f: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.data[r * self.cols + col] != 0) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = f.inv(self.data[row * self.cols + col]);
            for k in col..self.cols {
                let idx = row * self.cols + k;
                self.data[idx] = f.mul(self.data[idx], inv);
            }
            for r in row + 1..self.rows {
                let factor = self.data[r * self.cols + col];
                if factor == 0 {
                    continue;
                }
                let neg = f.sub(0, factor);
                let (before, after) = self.data.split_at_mut(r * self.cols);
                let pivot_row = &before[row * self.cols + col..(row + 1) * self.cols];
                let target = &mut after[col..self.cols];
                for (t, &pv) in target.iter_mut().zip(pivot_row) {
                    *t = f.reduce(*t + neg * pv);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Rank over F_p; consumes the matrix contents.
    pub fn rank(mut self, f: &PrimeField) -> usize {
        self.echelonize(f).len()
    }

    /// A basis of the right nullspace, one vector per non-pivot column.
    pub fn nullspace(mut self, f: &PrimeField) -> Vec<Vec<u64>> {
        let pivots = self.echelonize(f);
        // back-substitute to reduced row echelon form
        for pi in (0..pivots.len()).rev() {
            let col = pivots[pi];
            for r in 0..pi {
                let factor = self.data[r * self.cols + col];
                if factor == 0 {
                    continue;
                }
                let neg = f.sub(0, factor);
                let (before, after) = self.data.split_at_mut(pi * self.cols);
                let pivot_row = &after[col..self.cols];
                let target = &mut before[r * self.cols + col..(r + 1) * self.cols];
                for (t, &pv) in target.iter_mut().zip(pivot_row) {
                    *t = f.reduce(*t + neg * pv);
                }
            }
        }
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (pi, &col) in pivots.iter().enumerate() {
                v[col] = f.sub(0, self.row(pi)[free]);
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn barrett_reduction_agrees_with_div() {
        let f = PrimeField::new(1_000_003);
        for &x in &[0u64, 1, 999_999, 1_000_003, 1_000_004, u32::MAX as u64, (1u64 << 62) - 1] {
            assert_eq!(f.reduce(x), x % 1_000_003);
        }
    }

    #[test]
    fn inverse() {
        let f = PrimeField::new(1_000_003);
        for a in [1u64, 2, 17, 999_999] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rank_and_nullspace() {
        let f = PrimeField::new(1_000_003);
        let p = f.modulus();
        // rows: (1,2,3), (2,4,6), (0,1,1) -> rank 2
        let m = Matrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]], 3);
        assert_eq!(m.clone().rank(&f), 2);
        let ns = m.nullspace(&f);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        // check both original rows annihilate the kernel vector
        for row in [[1u64, 2, 3], [0, 1, 1]] {
            let dot = row.iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + a * b) % p);
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn full_rank_identity() {
        let f = PrimeField::new(1_000_033);
        let mut m = Matrix::zero(4, 4);
        for i in 0..4 {
            m.data[i * 4 + i] = 7 + i as u64;
        }
        assert_eq!(m.clone().rank(&f), 4);
        assert!(m.nullspace(&f).is_empty());
    }
}
