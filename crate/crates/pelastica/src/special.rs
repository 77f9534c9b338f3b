//! p-hyperbolic special functions for exponents p > 2.
//!
//! Provides the incomplete p-elliptic integral of the first kind at modulus 1,
//!
//! ```text
//! F(x) = ∫_0^x (cos φ)^(-2/p) dφ,           |x| ≤ π/2,
//! ```
//!
//! its complete value `K = F(π/2)`, the inverse amplitude `am(x)` on `[-K, K]`,
//! and the p-hyperbolic secant/tangent
//!
//! ```text
//! sech_p x = (cos am(x))^(2/p)   on (-K, K), 0 outside,
//! tanh_p x = ∫_0^x (sech_p t)^p dt.
//! ```
//!
//! The integrand of `F` has an integrable algebraic singularity at `π/2`
//! (exponent 2/p < 1), handled by tanh-sinh quadrature with stable
//! endpoint-distance evaluation. The inverse amplitude uses a bracketed
//! bisection/secant hybrid on the monotone branch.

use crate::error::{Error, Result};

/// Evaluation context for a fixed exponent `p > 2`.
///
/// Caches the complete integral `K = K_p(1)`; everything else is computed on
/// demand. Immutable after construction, so it can be shared across threads.
#[derive(Debug, Clone)]
pub struct PContext {
    p: f64,
    k: f64,
    quad_tol: f64,
    inv_tol: f64,
}

pub const DEFAULT_QUAD_TOL: f64 = 1e-12;
pub const DEFAULT_INV_TOL: f64 = 1e-10;

impl PContext {
    /// Builds a context with default tolerances (`quad_tol = 1e-12`, `inv_tol = 1e-10`).
    pub fn new(p: f64) -> Result<Self> {
        Self::with_tolerances(p, DEFAULT_QUAD_TOL, DEFAULT_INV_TOL)
    }

    pub fn with_tolerances(p: f64, quad_tol: f64, inv_tol: f64) -> Result<Self> {
        if !p.is_finite() {
            return Err(Error::Input(format!("exponent p must be finite, got {p}")));
        }
        if p <= 2.0 {
            return Err(Error::Domain(format!(
                "p-hyperbolic functions require p > 2 (K_p(1) diverges as p -> 2+), got p = {p}"
            )));
        }
        if !(quad_tol > 0.0 && inv_tol > 0.0) {
            return Err(Error::Input("tolerances must be positive".into()));
        }
        let k = complete_k_with_tol(p, quad_tol)?;
        Ok(Self { p, k, quad_tol, inv_tol })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Cached complete integral `K_p(1)`.
    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn quad_tol(&self) -> f64 {
        self.quad_tol
    }

    pub fn inv_tol(&self) -> f64 {
        self.inv_tol
    }

    /// `tanh_p` at the edge of the core interval, `tanh_p(K)`.
    ///
    /// Evaluated as `∫_0^{π/2} (cos φ)^{2-2/p} dφ` (substituting φ = am(t)),
    /// which is smooth on the closed interval.
    pub fn tanh_at_k(&self) -> f64 {
        let a = 2.0 - 2.0 / self.p;
        // Integrand vanishes at π/2; sin(dist) form keeps the endpoint exact.
        tanh_sinh(|_, _, db| sin_clamped(db).powf(a), 0.0, std::f64::consts::FRAC_PI_2, self.quad_tol)
            .expect("smooth integrand")
    }
}

fn sin_clamped(u: f64) -> f64 {
    u.sin().max(0.0)
}

/// Complete p-elliptic integral of the first kind at modulus 1,
/// `K_p(1) = ∫_0^{π/2} (cos φ)^(-2/p) dφ`.
///
/// Finite for every p > 2 and strictly greater than π/2; diverges as p → 2+.
pub fn complete_k(p: f64) -> Result<f64> {
    complete_k_with_tol(p, DEFAULT_QUAD_TOL)
}

fn complete_k_with_tol(p: f64, tol: f64) -> Result<f64> {
    if !p.is_finite() {
        return Err(Error::Input(format!("p must be finite, got {p}")));
    }
    if p <= 2.0 {
        return Err(Error::Domain(format!(
            "complete integral diverges for p <= 2, got p = {p}"
        )));
    }
    let a = -2.0 / p;
    // cos φ = sin(π/2 - φ) exactly; the distance form stays accurate where the
    // integrand is singular.
    tanh_sinh(|_, _, db| sin_clamped(db).powf(a), 0.0, std::f64::consts::FRAC_PI_2, tol)
}

/// Incomplete p-elliptic integral `F(x) = ∫_0^x (cos φ)^(-2/p) dφ` on the
/// principal branch `|x| ≤ π/2`. Odd and strictly increasing.
pub fn p_elliptic_f(ctx: &PContext, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Input(format!("argument must be finite, got {x}")));
    }
    let half_pi = std::f64::consts::FRAC_PI_2;
    if x.abs() > half_pi + 1e-12 {
        return Err(Error::Domain(format!(
            "p_elliptic_f requires |x| <= pi/2, got {x}"
        )));
    }
    let ax = x.abs().min(half_pi);
    let val = if ax == 0.0 {
        0.0
    } else if ax == half_pi {
        ctx.k
    } else {
        let e = -2.0 / ctx.p;
        tanh_sinh(|phi, _, _| phi.cos().max(0.0).powf(e), 0.0, ax, ctx.quad_tol)?
    };
    Ok(val.copysign(x))
}

/// Inverse amplitude `am(x)`: the unique angle with `F(am(x)) = x`.
///
/// Defined for `|x| ≤ K`; inputs overshooting `K` by at most `inv_tol` clamp
/// to ±π/2, anything beyond is a domain error. Odd and strictly increasing.
pub fn amplitude(ctx: &PContext, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Input(format!("argument must be finite, got {x}")));
    }
    let ax = x.abs();
    if ax > ctx.k + ctx.inv_tol {
        return Err(Error::Domain(format!(
            "amplitude requires |x| <= K + inv_tol = {}, got {x}",
            ctx.k + ctx.inv_tol
        )));
    }
    let half_pi = std::f64::consts::FRAC_PI_2;
    if ax >= ctx.k {
        return Ok(half_pi.copysign(x));
    }
    if ax == 0.0 {
        return Ok(0.0);
    }
    let phi = invert_f(ctx, ax)?;
    Ok(phi.copysign(x))
}

/// Bracketed bisection/secant hybrid solving `F(φ) = target` on `[0, π/2]`.
fn invert_f(ctx: &PContext, target: f64) -> Result<f64> {
    let half_pi = std::f64::consts::FRAC_PI_2;
    let mut lo = 0.0_f64;
    let mut hi = half_pi;
    let mut f_lo = -target;
    let mut f_hi = ctx.k - target;
    // First guess: the integrand is >= 1, so phi <= target.
    let mut phi = target.min(half_pi * 0.999);
    for _ in 0..80 {
        let f_mid = p_elliptic_f(ctx, phi)? - target;
        if f_mid.abs() <= 0.5 * ctx.inv_tol {
            return Ok(phi);
        }
        if f_mid > 0.0 {
            hi = phi;
            f_hi = f_mid;
        } else {
            lo = phi;
            f_lo = f_mid;
        }
        if hi - lo < 1e-15 {
            return Ok(0.5 * (lo + hi));
        }
        // Secant proposal from the bracket endpoints, bisection fallback.
        let secant = lo - f_lo * (hi - lo) / (f_hi - f_lo);
        let width = hi - lo;
        phi = if secant.is_finite() && secant > lo + 1e-3 * width && secant < hi - 1e-3 * width {
            secant
        } else {
            0.5 * (lo + hi)
        };
    }
    Err(Error::Numerical(format!(
        "amplitude inversion did not converge for target {target}"
    )))
}

/// p-hyperbolic secant: `(cos am(x))^(2/p)` on `(-K, K)`, `0` outside.
///
/// Even, continuous, strictly decreasing from 1 to 0 on `[0, K)`.
pub fn sech_p(ctx: &PContext, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Input(format!("argument must be finite, got {x}")));
    }
    if x.abs() >= ctx.k {
        return Ok(0.0);
    }
    let am = amplitude(ctx, x)?;
    // Round-off can push cos(am) slightly negative near |x| = K; clamp before
    // the fractional power.
    Ok(am.cos().max(0.0).powf(2.0 / ctx.p))
}

/// p-hyperbolic tangent: `∫_0^x (sech_p t)^p dt`.
///
/// Odd, non-decreasing, constant (`= tanh_p(K)`) for `|x| ≥ K`; its derivative
/// is `sech_p^p`.
pub fn tanh_p(ctx: &PContext, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Input(format!("argument must be finite, got {x}")));
    }
    let ax = x.abs();
    let val = if ax >= ctx.k {
        ctx.tanh_at_k()
    } else if ax == 0.0 {
        0.0
    } else {
        // Substituting t = F(φ) turns the integral into
        // ∫_0^{am(x)} (cos φ)^(2 - 2/p) dφ, a smooth integrand.
        let am = amplitude(ctx, ax)?;
        let a = 2.0 - 2.0 / ctx.p;
        tanh_sinh(|phi, _, _| phi.cos().max(0.0).powf(a), 0.0, am, ctx.quad_tol)?
    };
    Ok(val.copysign(x))
}

/// Closed-form derivative values on the open core interval `(-K, K)`,
/// for cross-checking against finite differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeIdentities {
    /// `d²/dx² (sech_p x)^(p-1) = -2 (p-1)/p · sech_p x · (2 sech_p^p x - 1)`
    pub d2_sech_pow: f64,
    /// `d²/dx² tanh_p x = -2 sin(am) cos^(1+2/p)(am)`
    pub d2_tanh: f64,
    /// `d/dx am(x) = cos^(2/p)(am) = sech_p x`
    pub d_am: f64,
}

/// Evaluates the second-derivative identities at `x`, `|x| < K`.
pub fn derivative_identities(ctx: &PContext, x: f64) -> Result<DerivativeIdentities> {
    if !x.is_finite() {
        return Err(Error::Input(format!("argument must be finite, got {x}")));
    }
    if x.abs() >= ctx.k {
        return Err(Error::Domain(format!(
            "derivative identities hold on the open interval |x| < K = {}, got {x}",
            ctx.k
        )));
    }
    let p = ctx.p;
    let am = amplitude(ctx, x)?;
    let cos_am = am.cos().max(0.0);
    let sech = cos_am.powf(2.0 / p);
    Ok(DerivativeIdentities {
        d2_sech_pow: -2.0 * (p - 1.0) / p * sech * (2.0 * sech.powf(p) - 1.0),
        d2_tanh: -2.0 * am.sin() * cos_am.powf(1.0 + 2.0 / p),
        d_am: sech,
    })
}

// ---------------------------------------------------------------------------
// Tanh-sinh (double exponential) quadrature
// ---------------------------------------------------------------------------

const TS_MAX_LEVEL: usize = 12;
const TS_T_MAX: f64 = 6.56;

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
///
/// The integrand receives `(x, x - a, b - x)`; the endpoint distances are
/// computed in the transformed variable and stay accurate down to f64
/// underflow, so integrable endpoint singularities can be evaluated without
/// catastrophic rounding of `x` into the endpoint.
pub(crate) fn tanh_sinh<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64, f64, f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) || b <= a {
        return Err(Error::Input(format!("bad integration interval [{a}, {b}]")));
    }
    let r = 0.5 * (b - a);
    let half_pi = std::f64::consts::FRAC_PI_2;

    // One transformed node: x(t) = c + r tanh(y), y = (π/2) sinh t.
    // Endpoint distances via 1 ∓ tanh(y) = 2 e^{∓2y} / (1 + e^{∓2y}).
    let eval = |t: f64| -> Result<f64> {
        let y = half_pi * t.sinh();
        let e2y = (-2.0 * y.abs()).exp();
        let near = r * 2.0 * e2y / (1.0 + e2y); // distance to the nearer endpoint
        let far = 2.0 * r - near;
        let (da, db, x) = if t >= 0.0 {
            (far, near, b - near)
        } else {
            (near, far, a + near)
        };
        let cosh_y = y.cosh();
        let w = r * half_pi * t.cosh() / (cosh_y * cosh_y);
        if w == 0.0 || !w.is_finite() {
            return Ok(0.0);
        }
        let v = f(x, da, db);
        let contrib = w * v;
        if !contrib.is_finite() {
            if w < 1e-280 {
                return Ok(0.0); // negligible weight against a singular value
            }
            return Err(Error::Numerical(format!(
                "non-finite integrand at x = {x} (weight {w})"
            )));
        }
        Ok(contrib)
    };

    let mut h = 1.0_f64;
    let mut sum = eval(0.0)?;
    {
        let mut j = 1;
        while (j as f64) * h <= TS_T_MAX {
            let t = (j as f64) * h;
            sum += eval(t)? + eval(-t)?;
            j += 1;
        }
    }
    let mut integral = h * sum;

    for _level in 1..=TS_MAX_LEVEL {
        h *= 0.5;
        let mut new_sum = 0.0;
        let mut j = 1;
        while (j as f64) * h <= TS_T_MAX {
            let t = (j as f64) * h;
            new_sum += eval(t)? + eval(-t)?;
            j += 2; // odd multiples only: the new nodes at this level
        }
        sum += new_sum;
        let next = h * sum;
        let err = (next - integral).abs();
        integral = next;
        if _level >= 3 && err <= tol.max(integral.abs() * 1e-15) {
            return Ok(integral);
        }
    }
    // Converged as far as f64 allows; the final refinement is the best estimate.
    Ok(integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    /// Independent brute-force oracle: composite Simpson with `n` panels,
    /// stopping short of the singular endpoint.
    fn simpson_oracle<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
        let h = (b - a) / n as f64;
        let mut acc = f(a) + f(b);
        for i in 1..n {
            let x = a + i as f64 * h;
            acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(x);
        }
        acc * h / 3.0
    }

    /// Gamma-function closed form for `∫_0^{π/2} cos^a φ dφ`, a > -1.
    fn cos_power_integral_gamma(a: f64) -> f64 {
        use statrs::function::gamma::ln_gamma;
        let ln = 0.5 * PI.ln() - (2f64).ln() + ln_gamma((a + 1.0) / 2.0) - ln_gamma(a / 2.0 + 1.0);
        ln.exp()
    }

    #[test]
    fn complete_k_matches_gamma_closed_form() {
        for p in [2.5, 3.0, 4.0, 10.0] {
            let k = complete_k(p).unwrap();
            let oracle = cos_power_integral_gamma(-2.0 / p);
            assert_abs_diff_eq!(k, oracle, epsilon = 1e-10);
        }
    }

    #[test]
    fn complete_k_p4_matches_explicit_gamma_ratio() {
        use statrs::function::gamma::gamma;
        let k = complete_k(4.0).unwrap();
        let explicit = 0.5 * PI.sqrt() * gamma(0.25) / gamma(0.75);
        assert_abs_diff_eq!(k, explicit, epsilon = 1e-10);
        // brute-force quadrature, stopping short of the singularity and adding
        // the analytic tail: sin(u)^(-1/2) = u^(-1/2)(1 + u²/12 + O(u⁴))
        let delta = 1e-3;
        let bulk = simpson_oracle(|x| x.cos().powf(-0.5), 0.0, FRAC_PI_2 - delta, 1_000_000);
        let tail = 2.0 * delta.sqrt() + delta.powf(2.5) / 30.0;
        assert_abs_diff_eq!(k, bulk + tail, epsilon = 1e-8);
    }

    #[test]
    fn complete_k_limits() {
        // integrand -> 1 as p -> infinity
        let k = complete_k(1e6).unwrap();
        assert_abs_diff_eq!(k, FRAC_PI_2, epsilon = 1e-5);
        // monotone divergence toward p = 2
        assert!(complete_k(2.05).unwrap() > complete_k(2.5).unwrap());
        assert!(complete_k(2.0).is_err());
        assert!(complete_k(1.5).is_err());
    }

    #[test]
    fn incomplete_f_examples() {
        let ctx3 = PContext::new(3.0).unwrap();
        assert_eq!(p_elliptic_f(&ctx3, 0.0).unwrap(), 0.0);

        let ctx4 = PContext::new(4.0).unwrap();
        assert_abs_diff_eq!(
            p_elliptic_f(&ctx4, FRAC_PI_2).unwrap(),
            ctx4.k(),
            epsilon = 1e-14
        );

        // nonsingular at π/4: brute-force Simpson oracle
        let oracle = simpson_oracle(|x| x.cos().powf(-2.0 / 3.0), 0.0, FRAC_PI_4, 1_000_000);
        assert_abs_diff_eq!(p_elliptic_f(&ctx3, FRAC_PI_4).unwrap(), oracle, epsilon = 1e-10);

        assert!(p_elliptic_f(&ctx3, 2.0).is_err());
        assert!(p_elliptic_f(&ctx3, f64::NAN).is_err());
    }

    #[test]
    fn amplitude_examples() {
        let ctx = PContext::new(3.0).unwrap();
        assert_eq!(amplitude(&ctx, 0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(amplitude(&ctx, ctx.k()).unwrap(), FRAC_PI_2, epsilon = 1e-14);
        let y = amplitude(&ctx, 0.5).unwrap();
        assert_abs_diff_eq!(p_elliptic_f(&ctx, y).unwrap(), 0.5, epsilon = 1e-10);
        // clamp window, then domain error
        assert_abs_diff_eq!(
            amplitude(&ctx, ctx.k() + 0.5 * ctx.inv_tol()).unwrap(),
            FRAC_PI_2,
            epsilon = 0.0
        );
        assert!(amplitude(&ctx, ctx.k() + 1.0).is_err());
    }

    #[test]
    fn sech_shape() {
        let ctx = PContext::new(3.0).unwrap();
        assert_eq!(sech_p(&ctx, 0.0).unwrap(), 1.0);
        assert_eq!(sech_p(&ctx, ctx.k()).unwrap(), 0.0);
        assert_eq!(sech_p(&ctx, -ctx.k()).unwrap(), 0.0);
        assert_eq!(sech_p(&ctx, 10.0 * ctx.k()).unwrap(), 0.0);
        assert_eq!(sech_p(&ctx, 0.7).unwrap(), sech_p(&ctx, -0.7).unwrap());
        // strictly decreasing on [0, K - 1e-6]
        let n = 60;
        let hi = ctx.k() - 1e-6;
        let mut prev = f64::INFINITY;
        for i in 0..=n {
            let x = hi * i as f64 / n as f64;
            let v = sech_p(&ctx, x).unwrap();
            assert!(v < prev, "sech_p not strictly decreasing at x = {x}");
            prev = v;
        }
    }

    #[test]
    fn tanh_values_and_identity() {
        let ctx = PContext::new(3.0).unwrap();
        assert_eq!(tanh_p(&ctx, 0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(
            tanh_p(&ctx, -1.0).unwrap(),
            -tanh_p(&ctx, 1.0).unwrap(),
            epsilon = 1e-14
        );
        // forced by the per-loop displacement identity: tanh_p(K) = K (p-2)/(2(p-1))
        for p in [2.5, 3.0, 4.0, 10.0] {
            let ctx = PContext::new(p).unwrap();
            let expect = ctx.k() * (p - 2.0) / (2.0 * (p - 1.0));
            assert_abs_diff_eq!(tanh_p(&ctx, ctx.k()).unwrap(), expect, epsilon = 1e-8);
            // constant beyond the core interval
            assert_abs_diff_eq!(
                tanh_p(&ctx, ctx.k() + 3.0).unwrap(),
                tanh_p(&ctx, ctx.k()).unwrap(),
                epsilon = 0.0
            );
        }
    }

    #[test]
    fn tanh_derivative_is_sech_pow_p() {
        let ctx = PContext::new(3.0).unwrap();
        let h = 1e-5;
        for i in 1..20 {
            let x = ctx.k() * (i as f64 / 21.0);
            let fd = (tanh_p(&ctx, x + h).unwrap() - tanh_p(&ctx, x - h).unwrap()) / (2.0 * h);
            let exact = sech_p(&ctx, x).unwrap().powf(3.0);
            assert_abs_diff_eq!(fd, exact, epsilon = 1e-6);
        }
    }

    #[test]
    fn derivative_identities_at_zero() {
        let ctx = PContext::new(3.0).unwrap();
        let ids = derivative_identities(&ctx, 0.0).unwrap();
        assert_abs_diff_eq!(ids.d2_sech_pow, -4.0 / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ids.d2_tanh, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ids.d_am, 1.0, epsilon = 1e-14);
        assert!(derivative_identities(&ctx, ctx.k()).is_err());
    }

    #[test]
    fn derivative_identities_match_finite_differences() {
        let ctx = PContext::new(4.0).unwrap();
        let x = 0.5;
        let h = 1e-4;
        let ids = derivative_identities(&ctx, x).unwrap();

        let sp = |x: f64| sech_p(&ctx, x).unwrap().powf(ctx.p() - 1.0);
        let fd_sech = (sp(x + h) - 2.0 * sp(x) + sp(x - h)) / (h * h);
        assert_abs_diff_eq!(ids.d2_sech_pow, fd_sech, epsilon = 1e-5);

        let tp = |x: f64| tanh_p(&ctx, x).unwrap();
        let fd_tanh = (tp(x + h) - 2.0 * tp(x) + tp(x - h)) / (h * h);
        assert_abs_diff_eq!(ids.d2_tanh, fd_tanh, epsilon = 1e-5);

        let am = |x: f64| amplitude(&ctx, x).unwrap();
        let fd_am = (am(x + h) - am(x - h)) / (2.0 * h);
        assert_abs_diff_eq!(ids.d_am, fd_am, epsilon = 1e-5);
    }

    // The inversion grid stays at |x| <= 0.95 K: the amplitude approaches
    // ±π/2 doubly exponentially, so beyond that F is quantized by the f64
    // spacing of the angle itself and no inverter can do better.
    #[test]
    fn round_trip_grid() {
        for p in [2.5, 3.0, 4.0, 10.0] {
            let ctx = PContext::new(p).unwrap();
            let n = 41;
            for i in 0..n {
                let x = ctx.k() * (2.0 * i as f64 / (n - 1) as f64 - 1.0) * 0.95;
                let rt = p_elliptic_f(&ctx, amplitude(&ctx, x).unwrap()).unwrap();
                assert_abs_diff_eq!(rt, x, epsilon = ctx.inv_tol() + ctx.quad_tol());
            }
        }
    }

    proptest! {
        #[test]
        fn prop_symmetries(p in 2.2f64..10.0, frac in -0.999f64..0.999) {
            let ctx = PContext::new(p).unwrap();
            let x = frac * ctx.k();
            let am_pos = amplitude(&ctx, x).unwrap();
            let am_neg = amplitude(&ctx, -x).unwrap();
            prop_assert!((am_pos + am_neg).abs() < 1e-12);
            let s_pos = sech_p(&ctx, x).unwrap();
            let s_neg = sech_p(&ctx, -x).unwrap();
            prop_assert!((s_pos - s_neg).abs() < 1e-12);
            let t_pos = tanh_p(&ctx, x).unwrap();
            let t_neg = tanh_p(&ctx, -x).unwrap();
            prop_assert!((t_pos + t_neg).abs() < 1e-12);
        }

        #[test]
        fn prop_round_trip(p in 2.2f64..10.0, frac in -0.95f64..0.95) {
            let ctx = PContext::new(p).unwrap();
            let x = frac * ctx.k();
            let rt = p_elliptic_f(&ctx, amplitude(&ctx, x).unwrap()).unwrap();
            prop_assert!((rt - x).abs() <= ctx.inv_tol() + ctx.quad_tol());
        }
    }
}
