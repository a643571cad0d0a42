//! Monotone scalar graphs `Φ = ∂Ψ` and their radial vector extensions.
//!
//! Every graph is the subdifferential of an even, convex, continuous
//! potential `Ψ` with `Ψ(0) = 0` and at most quadratic growth. Evaluation
//! of a possibly multi-valued branch returns the *minimal section* (the
//! value of least magnitude); set-valuedness otherwise only enters through
//! the pointwise resolvent `r ↦ (I + λΦ)^{-1} f`, which is single-valued
//! and non-expansive by maximal monotonicity.
//!
//! The smoothing parameter `δ` regularizes the power graphs `|r|^{p-1}
//! sgn(r)` (Huber-style, `Φ_δ(r) = (r² + δ²)^{(p-2)/2} r`, Lipschitz
//! constant `max(1, δ^{p-2})`); the remaining kinds are globally
//! 1-Lipschitz already and ignore `δ`.

use crate::fp;

/// The nonlinearity catalogue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    /// `Ψ(r) = |r|^p / p`, `p ∈ [1,2]`; multi-valued sign graph at `p = 1`.
    Power { p: f64 },
    /// `Ψ(r) = (|r|+1) log(|r|+1) - |r|`, branch `log(|r|+1) sgn(r)`.
    LogPlasma,
    /// `Ψ(r) = r arctan(r) - log(r²+1)/2`, branch `arctan(r)`.
    Arctan,
    /// `Ψ(r) = sqrt(1+r²) - 1`, branch `r / sqrt(1+r²)`.
    MinimalSurface,
    /// `Ψ(r) = r²/2` capped linearly outside `|r| ≤ 1`; branch clamps.
    PlasticShear,
}

/// A scalar monotone graph together with its operating smoothing `δ ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarGraph {
    kind: GraphKind,
    delta: f64,
}

impl ScalarGraph {
    pub fn new(kind: GraphKind, delta: f64) -> Self {
        if let GraphKind::Power { p } = kind {
            assert!((1.0..=2.0).contains(&p), "power exponent must be in [1,2]");
        }
        assert!(delta >= 0.0 && delta.is_finite(), "delta must be >= 0");
        Self { kind, delta }
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Same graph with a different smoothing (used by continuation ladders).
    pub fn with_delta(&self, delta: f64) -> Self {
        Self::new(self.kind, delta)
    }

    /// Potential `Ψ_δ(r)`, even, convex, `Ψ_δ(0) = 0`, matched to
    /// [`Self::branch`] so the subgradient inequality is exact.
    pub fn potential(&self, r: f64) -> f64 {
        let a = r.abs();
        match self.kind {
            GraphKind::Power { p } => {
                if self.delta > 0.0 {
                    let d = self.delta;
                    (fp::powf(r * r + d * d, 0.5 * p) - fp::powf(d, p)) / p
                } else {
                    fp::powf(a, p) / p
                }
            }
            GraphKind::LogPlasma => (a + 1.0) * fp::ln_1p(a) - a,
            GraphKind::Arctan => a * fp::atan(a) - 0.5 * fp::ln_1p(a * a),
            GraphKind::MinimalSurface => fp::sqrt(1.0 + r * r) - 1.0,
            GraphKind::PlasticShear => {
                if a <= 1.0 {
                    0.5 * r * r
                } else {
                    a - 0.5
                }
            }
        }
    }

    /// Single-valued branch `Φ_δ(r)`; the minimal section when `δ = 0`
    /// and the graph jumps (so `Φ(0) = 0` for the sign graph).
    pub fn branch(&self, r: f64) -> f64 {
        match self.kind {
            GraphKind::Power { p } => {
                if self.delta > 0.0 {
                    let d = self.delta;
                    fp::powf(r * r + d * d, 0.5 * (p - 2.0)) * r
                } else if r == 0.0 {
                    0.0
                } else {
                    fp::powf(r.abs(), p - 1.0) * r.signum()
                }
            }
            GraphKind::LogPlasma => fp::ln_1p(r.abs()) * r.signum(),
            GraphKind::Arctan => fp::atan(r),
            GraphKind::MinimalSurface => r / fp::sqrt(1.0 + r * r),
            GraphKind::PlasticShear => r.clamp(-1.0, 1.0),
        }
    }

    /// Pointwise derivative of the branch (a.e.); used by Newton.
    ///
    /// Unbounded at `r = 0` for `Power { p < 2 }` with `δ = 0`; the global
    /// resolvent never assembles a Jacobian there (it substitutes a
    /// positive `δ` first).
    pub fn branch_deriv(&self, r: f64) -> f64 {
        match self.kind {
            GraphKind::Power { p } => {
                let d = self.delta;
                if d > 0.0 {
                    fp::powf(r * r + d * d, 0.5 * (p - 4.0)) * ((p - 1.0) * r * r + d * d)
                } else {
                    (p - 1.0) * fp::powf(r.abs(), p - 2.0)
                }
            }
            GraphKind::LogPlasma => 1.0 / (r.abs() + 1.0),
            GraphKind::Arctan => 1.0 / (1.0 + r * r),
            GraphKind::MinimalSurface => fp::powf(1.0 + r * r, -1.5),
            GraphKind::PlasticShear => {
                if r.abs() < 1.0 {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Upper edge of the branch at `0+`; nonzero only for the sign graph.
    pub fn jump_at_zero(&self) -> f64 {
        match self.kind {
            GraphKind::Power { p } if p == 1.0 && self.delta == 0.0 => 1.0,
            _ => 0.0,
        }
    }

    /// Lipschitz constant of the smoothed branch.
    pub fn lipschitz_bound(&self) -> f64 {
        match self.kind {
            GraphKind::Power { p } => {
                if self.delta > 0.0 {
                    fp::powf(self.delta, p - 2.0).max(1.0)
                } else if p == 2.0 {
                    1.0
                } else {
                    f64::INFINITY
                }
            }
            _ => 1.0,
        }
    }

    /// Pointwise resolvent: the unique `r` with `r + λ Φ_δ(r) ∋ f`.
    ///
    /// Non-expansive in `f`. Closed forms for the linear (`p = 2`) and
    /// soft-threshold (`p = 1`, `δ = 0`) cases; monotone bisection with
    /// bracket expansion otherwise.
    pub fn resolvent(&self, lambda: f64, f: f64) -> f64 {
        assert!(lambda >= 0.0, "resolvent needs lambda >= 0");
        if lambda == 0.0 {
            return f;
        }
        if let GraphKind::Power { p } = self.kind {
            if p == 2.0 {
                return f / (1.0 + lambda);
            }
            if p == 1.0 && self.delta == 0.0 {
                // Soft threshold: |f| <= lambda lands on the vertical branch at 0.
                return f.signum() * (f.abs() - lambda).max(0.0);
            }
        }
        if f == 0.0 {
            return 0.0;
        }
        let g = |r: f64| r + lambda * self.branch(r);
        let mut lo = f.min(0.0);
        let mut hi = f.max(0.0);
        // g(0) = 0 and g is nondecreasing, so [min(0,f), max(0,f)] brackets
        // the root; expand defensively in case of rounding at the edges.
        let mut guard = 0;
        while g(hi) < f && guard < 64 {
            hi = 2.0 * hi + 1.0;
            guard += 1;
        }
        while g(lo) > f && guard < 128 {
            lo = 2.0 * lo - 1.0;
            guard += 1;
        }
        let tol = 1e-15 * (1.0 + f.abs());
        for _ in 0..200 {
            if hi - lo <= tol {
                break;
            }
            let mid = 0.5 * (lo + hi);
            if g(mid) < f {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

/// Lyapunov integrand of the plasma graph, `θ(r) = |r| log(|r|+1)`.
pub fn plasma_theta(r: f64) -> f64 {
    r.abs() * fp::ln_1p(r.abs())
}

/// Doubling inequality `θ(2r) ≤ 4 θ(r)` on a sample; returns the first
/// violating `r`, if any.
pub fn delta2_check<I: IntoIterator<Item = f64>>(samples: I) -> Result<(), f64> {
    for r in samples {
        if plasma_theta(2.0 * r) > 4.0 * plasma_theta(r) + 1e-12 {
            return Err(r);
        }
    }
    Ok(())
}

/// Radial extension of a scalar graph to `ℝ^dim`:
/// `Φ(x) = Φ̃(|x|) x/|x|`, with the minimal section `0` at `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorGraph {
    base: ScalarGraph,
}

impl VectorGraph {
    pub fn new(base: ScalarGraph) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &ScalarGraph {
        &self.base
    }

    pub fn with_delta(&self, delta: f64) -> Self {
        Self::new(self.base.with_delta(delta))
    }

    /// `Ψ_δ(|x|)` for a 2-vector argument.
    pub fn potential2(&self, x: [f64; 2]) -> f64 {
        self.base.potential(fp::hypot(x[0], x[1]))
    }

    /// Radial branch value for a 2-vector argument.
    pub fn eval2(&self, x: [f64; 2]) -> [f64; 2] {
        let rho = fp::hypot(x[0], x[1]);
        if rho == 0.0 {
            return [0.0, 0.0];
        }
        let scale = self.base.branch(rho);
        [scale * (x[0] / rho), scale * (x[1] / rho)]
    }

    /// Symmetric 2×2 Jacobian of [`Self::eval2`]:
    /// `Φ̃'(ρ) x̂⊗x̂ + (Φ̃(ρ)/ρ)(I - x̂⊗x̂)`.
    pub fn jac2(&self, x: [f64; 2]) -> [[f64; 2]; 2] {
        let rho = fp::hypot(x[0], x[1]);
        if rho == 0.0 {
            let d = self.deriv_at_zero();
            return [[d, 0.0], [0.0, d]];
        }
        let u = [x[0] / rho, x[1] / rho];
        let dr = self.base.branch_deriv(rho);
        let dt = self.base.branch(rho) / rho;
        let mut j = [[0.0; 2]; 2];
        for (a, ja) in j.iter_mut().enumerate() {
            for (b, jab) in ja.iter_mut().enumerate() {
                let p = u[a] * u[b];
                let i = if a == b { 1.0 } else { 0.0 };
                *jab = dr * p + dt * (i - p);
            }
        }
        j
    }

    fn deriv_at_zero(&self) -> f64 {
        self.base.branch_deriv(0.0)
    }
}
