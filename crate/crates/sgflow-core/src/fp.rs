//! Float math that works on both `std` and `no_std` builds.
//!
//! `core` ships `abs`, `min`/`max`, `signum`, `copysign` and `clamp` for
//! `f64`, but not the transcendental functions. These wrappers dispatch to
//! the inherent std methods when available and to [`libm`] otherwise.

#[cfg(feature = "std")]
macro_rules! dispatch {
    ($name:ident, $libm:path $(, $arg:ident)*) => {
        #[inline(always)]
        pub fn $name(x: f64 $(, $arg: f64)*) -> f64 {
            f64::$name(x $(, $arg)*)
        }
    };
}

#[cfg(not(feature = "std"))]
macro_rules! dispatch {
    ($name:ident, $libm:path $(, $arg:ident)*) => {
        #[inline(always)]
        pub fn $name(x: f64 $(, $arg: f64)*) -> f64 {
            $libm(x $(, $arg)*)
        }
    };
}

dispatch!(sqrt, libm::sqrt);
dispatch!(sin, libm::sin);
dispatch!(cos, libm::cos);
dispatch!(exp, libm::exp);
dispatch!(ln, libm::log);
dispatch!(ln_1p, libm::log1p);
dispatch!(atan, libm::atan);
dispatch!(tanh, libm::tanh);
dispatch!(floor, libm::floor);
dispatch!(hypot, libm::hypot, y);
dispatch!(powf, libm::pow, y);

/// Integer power by repeated squaring; exact enough for spectral weights.
#[inline]
pub fn powi(x: f64, n: i32) -> f64 {
    #[cfg(feature = "std")]
    {
        x.powi(n)
    }
    #[cfg(not(feature = "std"))]
    {
        let mut base = if n < 0 { 1.0 / x } else { x };
        let mut k = n.unsigned_abs();
        let mut acc = 1.0;
        while k > 0 {
            if k & 1 == 1 {
                acc *= base;
            }
            base *= base;
            k >>= 1;
        }
        acc
    }
}
