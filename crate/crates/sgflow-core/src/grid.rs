//! Rectangular grids on the unit domain `Λ = (0,1)^dim`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Boundary condition of the discrete Laplacian that realizes the triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCondition {
    /// Zero ghost values outside the grid.
    Dirichlet,
    /// Reflecting ghost values; the constant mode is removed, so the
    /// space is the zero-average subspace.
    NeumannMeanZero,
}

/// Uniform grid with `n` interior nodes per axis and spacing `h = 1/(n+1)`.
///
/// Grid vectors are flat `Vec<f64>` of length `n^dim`, row-major in 2D
/// (`idx = (iy - 1) * n + (ix - 1)` for node `(ix, iy)`, `1 ≤ ix, iy ≤ n`).
/// The discrete inner product is `(u,v)_h = h^dim Σ_j u_j v_j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridDomain {
    dim: usize,
    n: usize,
    h: f64,
    bc: BoundaryCondition,
}

/// A caller handed a vector whose length does not match the grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionMismatch {
    pub expected: usize,
    pub got: usize,
}

impl fmt::Display for DimensionMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "grid vector has length {}, expected {}",
            self.got, self.expected
        )
    }
}

impl core::error::Error for DimensionMismatch {}

impl GridDomain {
    /// 1 or 2 space dimensions, `n ≥ 2` interior nodes per axis.
    pub fn new(dim: usize, n: usize, bc: BoundaryCondition) -> Result<Self, String> {
        if dim != 1 && dim != 2 {
            return Err(alloc::format!("dim must be 1 or 2, got {dim}"));
        }
        if n < 2 {
            return Err(alloc::format!("n must be >= 2, got {n}"));
        }
        Ok(Self {
            dim,
            n,
            h: 1.0 / (n + 1) as f64,
            bc,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Interior nodes per axis.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Spacing, `h (n+1) = 1` exactly.
    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn bc(&self) -> BoundaryCondition {
        self.bc
    }

    /// Total number of grid nodes, `n^dim`.
    pub fn len(&self) -> usize {
        match self.dim {
            1 => self.n,
            _ => self.n * self.n,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Cell volume `h^dim` weighting the discrete inner product.
    pub fn cell_volume(&self) -> f64 {
        match self.dim {
            1 => self.h,
            _ => self.h * self.h,
        }
    }

    pub fn check_len(&self, v: &[f64]) -> Result<(), DimensionMismatch> {
        if v.len() == self.len() {
            Ok(())
        } else {
            Err(DimensionMismatch {
                expected: self.len(),
                got: v.len(),
            })
        }
    }

    /// `(u,v)_h = h^dim Σ_j u_j v_j`.
    pub fn inner(&self, u: &[f64], v: &[f64]) -> f64 {
        debug_assert_eq!(u.len(), v.len());
        let s: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
        self.cell_volume() * s
    }

    /// Norm induced by [`Self::inner`].
    pub fn norm(&self, v: &[f64]) -> f64 {
        crate::fp::sqrt(self.inner(v, v))
    }

    pub fn zeros(&self) -> Vec<f64> {
        alloc::vec![0.0; self.len()]
    }

    /// Coordinates of node `idx` in `(0,1)^dim`.
    pub fn coords(&self, idx: usize) -> (f64, f64) {
        match self.dim {
            1 => ((idx + 1) as f64 * self.h, 0.0),
            _ => {
                let ix = idx % self.n;
                let iy = idx / self.n;
                ((ix + 1) as f64 * self.h, (iy + 1) as f64 * self.h)
            }
        }
    }

    /// Subtract the grid mean; the identity map for Dirichlet grids.
    ///
    /// Neumann mean-zero spaces only contain zero-average vectors, so
    /// constructors of initial data pass through this.
    pub fn project_mean_zero(&self, v: &mut [f64]) {
        if self.bc == BoundaryCondition::NeumannMeanZero {
            let mean = v.iter().sum::<f64>() / v.len() as f64;
            for x in v.iter_mut() {
                *x -= mean;
            }
        }
    }
}
