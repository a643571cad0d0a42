//! Banded LU with partial pivoting for the Newton systems.
//!
//! Grid Jacobians are banded with bandwidth 1 (1D) or `n` (2D); a direct
//! banded factorization is cheap at desk scale and avoids iterative-solver
//! tuning entirely.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// The factorization hit an exactly zero pivot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularMatrix {
    pub column: usize,
}

impl fmt::Display for SingularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "banded LU: zero pivot in column {}", self.column)
    }
}

impl core::error::Error for SingularMatrix {}

/// General band matrix with `kl` sub- and `ku` super-diagonals.
///
/// Storage is column-major LAPACK `gb` layout with `kl` extra fill rows
/// for pivoting: entry `(i, j)` lives at `data[j * ldab + (kl + ku + i - j)]`
/// for `j - ku - kl ≤ i ≤ j + kl`.
#[derive(Debug, Clone)]
pub struct BandMatrix {
    n: usize,
    kl: usize,
    ku: usize,
    ldab: usize,
    data: Vec<f64>,
    ipiv: Vec<usize>,
    factored: bool,
}

impl BandMatrix {
    pub fn new(n: usize, kl: usize, ku: usize) -> Self {
        let ldab = 2 * kl + ku + 1;
        Self {
            n,
            kl,
            ku,
            ldab,
            data: vec![0.0; ldab * n],
            ipiv: vec![0; n],
            factored: false,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Resets all entries to zero for re-assembly.
    pub fn clear(&mut self) {
        self.data.fill(0.0);
        self.factored = false;
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i + self.ku + self.kl >= j && i <= j + self.kl);
        j * self.ldab + (self.kl + self.ku + i - j)
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(
            i + self.ku >= j && i <= j + self.kl,
            "assembly outside logical band"
        );
        let at = self.idx(i, j);
        self.data[at] += v;
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> f64 {
        self.data[self.idx(i, j)]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: f64) {
        let at = self.idx(i, j);
        self.data[at] = v;
    }

    /// In-place LU with partial pivoting (unblocked `gbtrf`).
    pub fn factor(&mut self) -> Result<(), SingularMatrix> {
        let n = self.n;
        let kl = self.kl;
        let span = self.kl + self.ku; // widest fill-extended super band
        for j in 0..n {
            let last = (j + kl).min(n - 1);
            let mut piv = j;
            let mut piv_abs = self.get(j, j).abs();
            for i in (j + 1)..=last {
                let a = self.get(i, j).abs();
                if a > piv_abs {
                    piv_abs = a;
                    piv = i;
                }
            }
            self.ipiv[j] = piv;
            if piv_abs == 0.0 {
                return Err(SingularMatrix { column: j });
            }
            if piv != j {
                let row_end = (j + span).min(n - 1);
                for c in j..=row_end {
                    let a = self.get(j, c);
                    let b = self.get(piv, c);
                    self.set(j, c, b);
                    self.set(piv, c, a);
                }
            }
            let diag = self.get(j, j);
            for i in (j + 1)..=last {
                let m = self.get(i, j) / diag;
                self.set(i, j, m);
            }
            let col_end = (j + span).min(n - 1);
            for c in (j + 1)..=col_end {
                let ajc = self.get(j, c);
                if ajc == 0.0 {
                    continue;
                }
                for i in (j + 1)..=last {
                    let m = self.get(i, j);
                    if m != 0.0 {
                        let v = self.get(i, c) - m * ajc;
                        self.set(i, c, v);
                    }
                }
            }
        }
        self.factored = true;
        Ok(())
    }

    /// Solves `A x = b` in place; requires a prior [`Self::factor`].
    pub fn solve_in_place(&self, b: &mut [f64]) {
        assert!(self.factored, "solve before factor");
        assert_eq!(b.len(), self.n);
        let n = self.n;
        let kl = self.kl;
        let span = self.kl + self.ku;
        for j in 0..n {
            let p = self.ipiv[j];
            if p != j {
                b.swap(j, p);
            }
            let bj = b[j];
            if bj != 0.0 {
                let last = (j + kl).min(n - 1);
                for i in (j + 1)..=last {
                    b[i] -= self.get(i, j) * bj;
                }
            }
        }
        for j in (0..n).rev() {
            let x = b[j] / self.get(j, j);
            b[j] = x;
            if x != 0.0 {
                let first = j.saturating_sub(span);
                for i in first..j {
                    b[i] -= self.get(i, j) * x;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_small_dense_band() {
        // 4x4 tridiagonal with a known solution.
        let mut m = BandMatrix::new(4, 1, 1);
        for i in 0..4 {
            m.add(i, i, 2.0 + i as f64);
            if i > 0 {
                m.add(i, i - 1, -1.0);
                m.add(i - 1, i, -0.5);
            }
        }
        // x = [1, 2, 3, 4]
        let x = [1.0, 2.0, 3.0, 4.0];
        let mut b = [0.0; 4];
        for i in 0..4 {
            for j in 0..4 {
                if i.abs_diff(j) <= 1 {
                    let v = if i == j {
                        2.0 + i as f64
                    } else if j + 1 == i {
                        -1.0
                    } else {
                        -0.5
                    };
                    b[i] += v * x[j];
                }
            }
        }
        m.factor().unwrap();
        m.solve_in_place(&mut b);
        for i in 0..4 {
            assert!((b[i] - x[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn pivoting_handles_small_diagonal() {
        let mut m = BandMatrix::new(3, 1, 1);
        m.add(0, 0, 1e-30);
        m.add(0, 1, 1.0);
        m.add(1, 0, 1.0);
        m.add(1, 1, 1.0);
        m.add(1, 2, 1.0);
        m.add(2, 1, 1.0);
        m.add(2, 2, 3.0);
        let x = [1.0, -2.0, 0.5];
        let b0 = 1e-30 * x[0] + x[1];
        let b1 = x[0] + x[1] + x[2];
        let b2 = x[1] + 3.0 * x[2];
        let mut b = [b0, b1, b2];
        m.factor().unwrap();
        m.solve_in_place(&mut b);
        for i in 0..3 {
            assert!((b[i] - x[i]).abs() < 1e-10, "{:?}", b);
        }
    }
}
