//! Spectral realization of the Gelfand triple `S ⊂ H ⊂ S*` on a grid.
//!
//! The Riesz-type operator is the (negative) discrete Laplacian `T = -Δ_h`
//! with the grid's boundary condition. Its eigenpairs are known in closed
//! form on tensor grids, so resolvents `J_n = (I + T/n)^{-1}`, Yosida
//! approximations `T_n = n(I - J_n)`, the approximating norms
//! `‖v‖_n = (v, T_n v)_H^{1/2}` and mode projections are all exact
//! diagonal operations on spectral coefficients.
//!
//! Two triple conventions are supported:
//!
//! * [`TripleMode::H1OverL2`]: `H` carries the plain grid product
//!   `(·,·)_h`, `‖v‖_S² = (Tv, v)_h`, `‖v‖_{S*}² = (T⁻¹v, v)_h`
//!   (divergence-form drifts, `S = H¹₀`-like).
//! * [`TripleMode::L2OverHm1`]: `S` carries `(·,·)_h`,
//!   `‖v‖_H² = (T⁻¹v, v)_h`, `‖v‖_{S*}² = (T⁻²v, v)_h`
//!   (diffusion-form drifts, `H = H⁻¹`-like).
//!
//! Dual elements (selections of the drift) are stored as plain grid
//! vectors; the duality pairing against `S` is the explicit operation
//! [`SpectralSpace::pairing`], which coincides with the `H`-inner product
//! of the active mode.

use alloc::vec;
use alloc::vec::Vec;

use crate::fp;
use crate::grid::{BoundaryCondition, GridDomain};

/// Which of the two Hilbert spaces carries the plain grid product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleMode {
    /// `S`-norm is the Dirichlet form, `H` is the grid `L²`.
    H1OverL2,
    /// `S` is the grid `L²`, `H` is the discrete `H⁻¹`.
    L2OverHm1,
}

/// The three norms of a grid vector in the triple, strongest first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GelfandNorms {
    pub s: f64,
    pub h: f64,
    pub dual: f64,
}

#[derive(Debug, Clone, Copy)]
struct Mode {
    lambda: f64,
    /// Axis indices into the 1D basis; `a2 == 0` in 1D.
    a1: u32,
    a2: u32,
}

/// Eigendecomposition of `T = -Δ_h` with all derived operations.
///
/// Immutable after construction; concurrent reads are safe.
#[derive(Debug, Clone)]
pub struct SpectralSpace {
    grid: GridDomain,
    mode: TripleMode,
    /// Per-axis eigenvalues, indexed by axis mode `a`.
    axis_lambda: Vec<f64>,
    /// Per-axis eigenvectors, `axis_basis[a * n + j] = e_a(node j)`,
    /// orthonormal in the 1D `h`-weighted product.
    axis_basis: Vec<f64>,
    /// Retained modes sorted by ascending eigenvalue.
    modes: Vec<Mode>,
    /// Tensor position `a1 * n + a2` (or `a1` in 1D) → sorted index.
    tensor_to_sorted: Vec<usize>,
}

const EXCLUDED: usize = usize::MAX;

impl SpectralSpace {
    /// Builds the closed-form sine (Dirichlet) or cosine (Neumann,
    /// constant mode removed) eigenbasis of the grid Laplacian.
    pub fn new(grid: GridDomain, mode: TripleMode) -> Self {
        let n = grid.n();
        let h = grid.h();
        let mut axis_lambda = Vec::with_capacity(n);
        let mut axis_basis = vec![0.0; n * n];
        match grid.bc() {
            BoundaryCondition::Dirichlet => {
                // lambda_k = (2/h^2)(1 - cos(k pi h)), e_k(j) = sqrt(2) sin(k pi j h)
                for a in 0..n {
                    let k = (a + 1) as f64;
                    let freq = k * core::f64::consts::PI * h;
                    axis_lambda.push(2.0 / (h * h) * (1.0 - fp::cos(freq)));
                    for j in 0..n {
                        axis_basis[a * n + j] =
                            core::f64::consts::SQRT_2 * fp::sin(freq * (j + 1) as f64);
                    }
                }
            }
            BoundaryCondition::NeumannMeanZero => {
                // lambda_k = (2/h^2)(1 - cos(k pi / n)), e_k(j) ∝ cos((j+1/2) k pi / n)
                let norm0 = 1.0 / fp::sqrt(h * n as f64);
                for a in 0..n {
                    let k = a as f64;
                    let freq = k * core::f64::consts::PI / n as f64;
                    axis_lambda.push(2.0 / (h * h) * (1.0 - fp::cos(freq)));
                    let scale = if a == 0 {
                        norm0
                    } else {
                        core::f64::consts::SQRT_2 * norm0
                    };
                    for j in 0..n {
                        axis_basis[a * n + j] = scale * fp::cos(freq * (j as f64 + 0.5));
                    }
                }
            }
        }

        let drop_constant = grid.bc() == BoundaryCondition::NeumannMeanZero;
        let mut modes = Vec::new();
        match grid.dim() {
            1 => {
                for a in 0..n {
                    if drop_constant && a == 0 {
                        continue;
                    }
                    modes.push(Mode {
                        lambda: axis_lambda[a],
                        a1: a as u32,
                        a2: 0,
                    });
                }
            }
            _ => {
                for a1 in 0..n {
                    for a2 in 0..n {
                        if drop_constant && a1 == 0 && a2 == 0 {
                            continue;
                        }
                        modes.push(Mode {
                            lambda: axis_lambda[a1] + axis_lambda[a2],
                            a1: a1 as u32,
                            a2: a2 as u32,
                        });
                    }
                }
            }
        }
        modes.sort_by(|p, q| {
            p.lambda
                .total_cmp(&q.lambda)
                .then(p.a1.cmp(&q.a1))
                .then(p.a2.cmp(&q.a2))
        });

        let tensor_len = if grid.dim() == 1 { n } else { n * n };
        let mut tensor_to_sorted = vec![EXCLUDED; tensor_len];
        for (s, m) in modes.iter().enumerate() {
            let pos = if grid.dim() == 1 {
                m.a1 as usize
            } else {
                m.a1 as usize * n + m.a2 as usize
            };
            tensor_to_sorted[pos] = s;
        }

        Self {
            grid,
            mode,
            axis_lambda,
            axis_basis,
            modes,
            tensor_to_sorted,
        }
    }

    pub fn grid(&self) -> &GridDomain {
        &self.grid
    }

    pub fn triple_mode(&self) -> TripleMode {
        self.mode
    }

    /// Number of retained modes `K` (grid dimension, minus one for
    /// Neumann mean-zero grids).
    pub fn num_modes(&self) -> usize {
        self.modes.len()
    }

    /// `k`-th eigenvalue of `T`, ascending, `0 ≤ k < K`.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        self.modes[k].lambda
    }

    pub fn lambda_min(&self) -> f64 {
        self.modes[0].lambda
    }

    pub fn lambda_max(&self) -> f64 {
        self.modes[self.modes.len() - 1].lambda
    }

    /// Materializes the `k`-th eigenvector as a grid vector.
    pub fn eigenvector(&self, k: usize) -> Vec<f64> {
        let n = self.grid.n();
        let m = &self.modes[k];
        let mut v = self.grid.zeros();
        match self.grid.dim() {
            1 => {
                let row = &self.axis_basis[m.a1 as usize * n..(m.a1 as usize + 1) * n];
                v.copy_from_slice(row);
            }
            _ => {
                let r1 = &self.axis_basis[m.a1 as usize * n..(m.a1 as usize + 1) * n];
                let r2 = &self.axis_basis[m.a2 as usize * n..(m.a2 as usize + 1) * n];
                for j2 in 0..n {
                    for j1 in 0..n {
                        v[j2 * n + j1] = r1[j1] * r2[j2];
                    }
                }
            }
        }
        v
    }

    /// Spectral coefficients `c_k = (v, e_k)_h` in sorted-mode order.
    pub fn to_coeffs(&self, v: &[f64]) -> Vec<f64> {
        self.grid.check_len(v).expect("to_coeffs");
        let n = self.grid.n();
        let mut c = vec![0.0; self.modes.len()];
        match self.grid.dim() {
            1 => {
                let h = self.grid.h();
                for (s, m) in self.modes.iter().enumerate() {
                    let row = &self.axis_basis[m.a1 as usize * n..(m.a1 as usize + 1) * n];
                    let dot: f64 = row.iter().zip(v).map(|(a, b)| a * b).sum();
                    c[s] = h * dot;
                }
            }
            _ => {
                // Separable contraction: O(n^3) instead of O(n^4).
                let mut t1 = vec![0.0; n * n]; // t1[a1 * n + j2]
                for a1 in 0..n {
                    let row = &self.axis_basis[a1 * n..(a1 + 1) * n];
                    for j2 in 0..n {
                        let vrow = &v[j2 * n..(j2 + 1) * n];
                        let dot: f64 = row.iter().zip(vrow).map(|(a, b)| a * b).sum();
                        t1[a1 * n + j2] = dot;
                    }
                }
                let h2 = self.grid.cell_volume();
                for a1 in 0..n {
                    for a2 in 0..n {
                        let s = self.tensor_to_sorted[a1 * n + a2];
                        if s == EXCLUDED {
                            continue;
                        }
                        let row = &self.axis_basis[a2 * n..(a2 + 1) * n];
                        let t1row = &t1[a1 * n..(a1 + 1) * n];
                        let dot: f64 = row.iter().zip(t1row).map(|(a, b)| a * b).sum();
                        c[s] = h2 * dot;
                    }
                }
            }
        }
        c
    }

    /// Reassembles `Σ_k c_k e_k` from sorted-order coefficients.
    pub fn from_coeffs(&self, c: &[f64]) -> Vec<f64> {
        assert_eq!(c.len(), self.modes.len(), "from_coeffs: wrong mode count");
        let n = self.grid.n();
        let mut v = self.grid.zeros();
        match self.grid.dim() {
            1 => {
                for (s, m) in self.modes.iter().enumerate() {
                    if c[s] == 0.0 {
                        continue;
                    }
                    let row = &self.axis_basis[m.a1 as usize * n..(m.a1 as usize + 1) * n];
                    for j in 0..n {
                        v[j] += c[s] * row[j];
                    }
                }
            }
            _ => {
                let mut t1 = vec![0.0; n * n]; // t1[a1 * n + j2]
                for (s, m) in self.modes.iter().enumerate() {
                    if c[s] == 0.0 {
                        continue;
                    }
                    let row2 = &self.axis_basis[m.a2 as usize * n..(m.a2 as usize + 1) * n];
                    let dst = &mut t1[m.a1 as usize * n..(m.a1 as usize + 1) * n];
                    for j2 in 0..n {
                        dst[j2] += c[s] * row2[j2];
                    }
                }
                for a1 in 0..n {
                    let row1 = &self.axis_basis[a1 * n..(a1 + 1) * n];
                    for j2 in 0..n {
                        let w = t1[a1 * n + j2];
                        if w == 0.0 {
                            continue;
                        }
                        let vrow = &mut v[j2 * n..(j2 + 1) * n];
                        for j1 in 0..n {
                            vrow[j1] += w * row1[j1];
                        }
                    }
                }
            }
        }
        v
    }

    fn weights(&self, lambda: f64) -> (f64, f64, f64) {
        // (w_s, w_h, w_dual): ‖v‖² = Σ w c_k².
        match self.mode {
            TripleMode::H1OverL2 => (lambda, 1.0, 1.0 / lambda),
            TripleMode::L2OverHm1 => (1.0, 1.0 / lambda, 1.0 / (lambda * lambda)),
        }
    }

    /// `(‖v‖_S, ‖v‖_H, ‖v‖_{S*})` via spectral coefficients.
    pub fn norms(&self, v: &[f64]) -> GelfandNorms {
        let c = self.to_coeffs(v);
        let mut s = 0.0;
        let mut h = 0.0;
        let mut d = 0.0;
        for (k, m) in self.modes.iter().enumerate() {
            let (ws, wh, wd) = self.weights(m.lambda);
            let c2 = c[k] * c[k];
            s += ws * c2;
            h += wh * c2;
            d += wd * c2;
        }
        GelfandNorms {
            s: fp::sqrt(s),
            h: fp::sqrt(h),
            dual: fp::sqrt(d),
        }
    }

    /// `H`-inner product of the active triple mode.
    pub fn inner_h(&self, u: &[f64], v: &[f64]) -> f64 {
        match self.mode {
            TripleMode::H1OverL2 => self.grid.inner(u, v),
            TripleMode::L2OverHm1 => {
                let cu = self.to_coeffs(u);
                let cv = self.to_coeffs(v);
                self.modes
                    .iter()
                    .enumerate()
                    .map(|(k, m)| cu[k] * cv[k] / m.lambda)
                    .sum()
            }
        }
    }

    pub fn norm_h(&self, v: &[f64]) -> f64 {
        match self.mode {
            TripleMode::H1OverL2 => self.grid.norm(v),
            TripleMode::L2OverHm1 => fp::sqrt(self.inner_h(v, v)),
        }
    }

    /// `S`-inner product of the active triple mode.
    pub fn inner_s(&self, u: &[f64], v: &[f64]) -> f64 {
        match self.mode {
            TripleMode::L2OverHm1 => self.grid.inner(u, v),
            TripleMode::H1OverL2 => {
                // (u, v)_S = (Tu, v)_h: cheap via edge differences.
                self.dirichlet_form(u, v)
            }
        }
    }

    pub fn norm_s(&self, v: &[f64]) -> f64 {
        fp::sqrt(self.inner_s(v, v).max(0.0))
    }

    pub fn norm_dual(&self, v: &[f64]) -> f64 {
        self.norms(v).dual
    }

    /// Duality pairing `⟨η, w⟩` of a dual representative against `S`;
    /// realized as the `H`-inner product (`H` is the pivot space).
    pub fn pairing(&self, eta: &[f64], w: &[f64]) -> f64 {
        self.inner_h(eta, w)
    }

    /// Riesz map of `S`: applies the Laplacian stencil `T = -Δ_h`.
    ///
    /// The result satisfies `pairing(riesz(v), w) = (v, w)_S` exactly.
    pub fn riesz(&self, v: &[f64]) -> Vec<f64> {
        self.apply_laplacian(v)
    }

    /// Stencil application of `T = -Δ_h` with the grid's ghost rule.
    pub fn apply_laplacian(&self, v: &[f64]) -> Vec<f64> {
        self.grid.check_len(v).expect("apply_laplacian");
        let n = self.grid.n();
        let h2 = self.grid.h() * self.grid.h();
        let dirichlet = self.grid.bc() == BoundaryCondition::Dirichlet;
        let mut out = self.grid.zeros();
        match self.grid.dim() {
            1 => {
                for j in 0..n {
                    let left = if j > 0 {
                        v[j - 1]
                    } else if dirichlet {
                        0.0
                    } else {
                        v[j]
                    };
                    let right = if j + 1 < n {
                        v[j + 1]
                    } else if dirichlet {
                        0.0
                    } else {
                        v[j]
                    };
                    out[j] = (2.0 * v[j] - left - right) / h2;
                }
            }
            _ => {
                for j2 in 0..n {
                    for j1 in 0..n {
                        let idx = j2 * n + j1;
                        let c = v[idx];
                        let xm = if j1 > 0 {
                            v[idx - 1]
                        } else if dirichlet {
                            0.0
                        } else {
                            c
                        };
                        let xp = if j1 + 1 < n {
                            v[idx + 1]
                        } else if dirichlet {
                            0.0
                        } else {
                            c
                        };
                        let ym = if j2 > 0 {
                            v[idx - n]
                        } else if dirichlet {
                            0.0
                        } else {
                            c
                        };
                        let yp = if j2 + 1 < n {
                            v[idx + n]
                        } else if dirichlet {
                            0.0
                        } else {
                            c
                        };
                        out[idx] = (4.0 * c - xm - xp - ym - yp) / h2;
                    }
                }
            }
        }
        out
    }

    /// Dirichlet form `(Tu, v)_h` via edge differences (no transform).
    fn dirichlet_form(&self, u: &[f64], v: &[f64]) -> f64 {
        let n = self.grid.n();
        let h = self.grid.h();
        let vol = self.grid.cell_volume();
        let dirichlet = self.grid.bc() == BoundaryCondition::Dirichlet;
        let mut acc = 0.0;
        match self.grid.dim() {
            1 => {
                for e in 0..=n {
                    let du = edge_diff(u, e, n, dirichlet);
                    let dv = edge_diff(v, e, n, dirichlet);
                    acc += du * dv;
                }
            }
            _ => {
                for j2 in 0..n {
                    for e in 0..=n {
                        let du = edge_diff(&u[j2 * n..(j2 + 1) * n], e, n, dirichlet);
                        let dv = edge_diff(&v[j2 * n..(j2 + 1) * n], e, n, dirichlet);
                        acc += du * dv;
                    }
                }
                for j1 in 0..n {
                    for e in 0..=n {
                        let du = edge_diff_strided(u, j1, e, n, dirichlet);
                        let dv = edge_diff_strided(v, j1, e, n, dirichlet);
                        acc += du * dv;
                    }
                }
            }
        }
        acc * vol / (h * h)
    }

    /// Resolvent `J_n v = (I + T/n)^{-1} v`; accepts any real `n ≥ 1`.
    pub fn resolvent(&self, n: f64, v: &[f64]) -> Vec<f64> {
        assert!(n >= 1.0 && n.is_finite(), "resolvent index must be >= 1");
        let mut c = self.to_coeffs(v);
        for (k, m) in self.modes.iter().enumerate() {
            c[k] *= n / (n + m.lambda);
        }
        self.from_coeffs(&c)
    }

    /// Yosida approximation `T_n v = n(v - J_n v) = T J_n v`.
    pub fn yosida(&self, n: f64, v: &[f64]) -> Vec<f64> {
        assert!(n >= 1.0 && n.is_finite(), "yosida index must be >= 1");
        let mut c = self.to_coeffs(v);
        for (k, m) in self.modes.iter().enumerate() {
            c[k] *= n * m.lambda / (n + m.lambda);
        }
        self.from_coeffs(&c)
    }

    /// Approximating norm `‖v‖_n = (v, T_n v)_H^{1/2}`, nondecreasing in
    /// `n` with limit `‖v‖_S`.
    pub fn approx_norm(&self, n: f64, v: &[f64]) -> f64 {
        assert!(n >= 1.0 && n.is_finite(), "approx_norm index must be >= 1");
        let c = self.to_coeffs(v);
        let mut acc = 0.0;
        for (k, m) in self.modes.iter().enumerate() {
            // (v, T_n v)_H weight: n λ/(n+λ) in the S-weight slot.
            let (ws, _, _) = self.weights(m.lambda);
            let yosida_over_lambda = n / (n + m.lambda);
            acc += ws * yosida_over_lambda * c[k] * c[k];
        }
        fp::sqrt(acc)
    }

    /// Orthogonal projection onto the span of the `m` lowest modes.
    ///
    /// Idempotent, an `H`- and `S`-contraction. Panics unless
    /// `1 ≤ m ≤ K`.
    pub fn project(&self, m: usize, v: &[f64]) -> Vec<f64> {
        assert!(
            m >= 1 && m <= self.modes.len(),
            "projection rank {m} out of range 1..={}",
            self.modes.len()
        );
        let mut c = self.to_coeffs(v);
        for ck in c.iter_mut().skip(m) {
            *ck = 0.0;
        }
        self.from_coeffs(&c)
    }

    /// Graph norm of `T^{3/2}`: `(Σ (1 + λ_k³) c_k²)^{1/2}`; certifies
    /// per-path noise regularity.
    pub fn fractional_norm(&self, v: &[f64]) -> f64 {
        let c = self.to_coeffs(v);
        let mut acc = 0.0;
        for (k, m) in self.modes.iter().enumerate() {
            acc += (1.0 + fp::powi(m.lambda, 3)) * c[k] * c[k];
        }
        fp::sqrt(acc)
    }

    /// Embedding constant: `‖v‖_{S*} ≤ C ‖v‖_H ≤ C² ‖v‖_S` with
    /// `C = λ_1^{-1/2}`.
    pub fn embedding_constant(&self) -> f64 {
        1.0 / fp::sqrt(self.lambda_min())
    }
}

#[inline]
fn edge_diff(row: &[f64], e: usize, n: usize, dirichlet: bool) -> f64 {
    // Forward difference on edge e (between nodes e-1 and e in 1-based terms).
    let lo = if e == 0 {
        if dirichlet {
            0.0
        } else {
            row[0]
        }
    } else {
        row[e - 1]
    };
    let hi = if e == n {
        if dirichlet {
            0.0
        } else {
            row[n - 1]
        }
    } else {
        row[e]
    };
    hi - lo
}

#[inline]
fn edge_diff_strided(v: &[f64], j1: usize, e: usize, n: usize, dirichlet: bool) -> f64 {
    let at = |j2: usize| v[j2 * n + j1];
    let lo = if e == 0 {
        if dirichlet {
            0.0
        } else {
            at(0)
        }
    } else {
        at(e - 1)
    };
    let hi = if e == n {
        if dirichlet {
            0.0
        } else {
            at(n - 1)
        }
    } else {
        at(e)
    };
    hi - lo
}
