//! Arclength-parametrized sampled curves in R^d and the constructors and
//! composition operators for flat-core building blocks.
//!
//! A [`SampledCurve`] stores a non-decreasing arclength grid with position,
//! unit-tangent, and curvature-vector samples. Piece junctions are kept as
//! duplicated arclength nodes carrying the left and right one-sided samples,
//! so C^1/C^2 defects at junctions are directly measurable instead of being
//! smeared by differencing.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::special::PContext;

/// Provenance of a sample: which closed-form piece produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceTag {
    Segment,
    Loop,
    Inserted,
}

/// Sampling density controls. `None` selects the defaults
/// (`K/512` per loop, `min(0.01, L/16)` per segment).
#[derive(Debug, Clone, Copy, Default)]
pub struct GridOptions {
    pub loop_step: Option<f64>,
    pub seg_step: Option<f64>,
}

pub const DEFAULT_LOOP_HALF_SAMPLES: usize = 512;
pub const DEFAULT_SEG_STEP: f64 = 0.01;

/// Pinned boundary data: endpoints, total length, ambient dimension.
#[derive(Debug, Clone)]
pub struct PinnedBoundary {
    pub p0: DVector<f64>,
    pub p1: DVector<f64>,
    pub length: f64,
}

impl PinnedBoundary {
    pub fn new(p0: DVector<f64>, p1: DVector<f64>, length: f64) -> Result<Self> {
        if p0.len() != p1.len() {
            return Err(Error::Input("endpoint dimension mismatch".into()));
        }
        if p0.len() < 2 {
            return Err(Error::Input("ambient dimension must be >= 2".into()));
        }
        let gap = (&p1 - &p0).norm();
        if !(length > 0.0 && length.is_finite()) {
            return Err(Error::Input(format!("length must be positive, got {length}")));
        }
        if gap >= length {
            return Err(Error::Input(format!(
                "admissibility requires |P0 - P1| < L, got gap {gap} vs L {length}"
            )));
        }
        Ok(Self { p0, p1, length })
    }

    pub fn dim(&self) -> usize {
        self.p0.len()
    }

    pub fn endpoint_distance(&self) -> f64 {
        (&self.p1 - &self.p0).norm()
    }
}

/// One interpolated or stored curve sample.
#[derive(Debug, Clone)]
pub struct CurveSample {
    pub s: f64,
    pub pos: DVector<f64>,
    pub tan: DVector<f64>,
    pub curv: DVector<f64>,
}

/// Which one-sided limit to take at a duplicated junction node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A junction: a duplicated arclength node with one-sided data on each side.
#[derive(Debug, Clone)]
pub struct Junction {
    pub s: f64,
    pub left: usize,
    pub right: usize,
    pub tangent_jump: f64,
    pub curvature_jump: f64,
}

/// Arclength-parametrized curve given by samples of position, unit tangent,
/// and curvature vector.
#[derive(Debug, Clone)]
pub struct SampledCurve {
    d: usize,
    s: Vec<f64>,
    pos: Vec<DVector<f64>>,
    tan: Vec<DVector<f64>>,
    curv: Vec<DVector<f64>>,
    tag: Vec<PieceTag>,
}

impl SampledCurve {
    pub(crate) fn from_parts(
        d: usize,
        s: Vec<f64>,
        pos: Vec<DVector<f64>>,
        tan: Vec<DVector<f64>>,
        curv: Vec<DVector<f64>>,
        tag: Vec<PieceTag>,
    ) -> Self {
        debug_assert!(s.len() == pos.len() && s.len() == tan.len() && s.len() == curv.len());
        debug_assert!(s.len() == tag.len());
        Self { d, s, pos, tan, curv, tag }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn num_samples(&self) -> usize {
        self.s.len()
    }

    pub fn grid(&self) -> &[f64] {
        &self.s
    }

    pub fn positions(&self) -> &[DVector<f64>] {
        &self.pos
    }

    pub fn tangents(&self) -> &[DVector<f64>] {
        &self.tan
    }

    pub fn curvatures(&self) -> &[DVector<f64>] {
        &self.curv
    }

    pub fn tags(&self) -> &[PieceTag] {
        &self.tag
    }

    pub fn total_length(&self) -> f64 {
        *self.s.last().unwrap_or(&0.0)
    }

    pub fn start_pos(&self) -> &DVector<f64> {
        &self.pos[0]
    }

    pub fn end_pos(&self) -> &DVector<f64> {
        self.pos.last().unwrap()
    }

    /// Start-to-end displacement vector.
    pub fn displacement(&self) -> DVector<f64> {
        self.end_pos() - self.start_pos()
    }

    /// All duplicated-node junctions with their tangent and curvature jumps.
    pub fn junctions(&self) -> Vec<Junction> {
        let mut out = Vec::new();
        for i in 0..self.s.len().saturating_sub(1) {
            if self.s[i + 1] == self.s[i] {
                out.push(Junction {
                    s: self.s[i],
                    left: i,
                    right: i + 1,
                    tangent_jump: (&self.tan[i + 1] - &self.tan[i]).norm(),
                    curvature_jump: (&self.curv[i + 1] - &self.curv[i]).norm(),
                });
            }
        }
        out
    }

    /// Sample at arclength `s` by linear interpolation (tangents renormalized).
    /// At a duplicated junction node the requested one-sided limit is used.
    pub fn sample_at(&self, s: f64, side: Side) -> Result<CurveSample> {
        let n = self.s.len();
        if n == 0 {
            return Err(Error::Input("empty curve".into()));
        }
        let total = self.total_length();
        if !(s >= -1e-12 && s <= total + 1e-12) {
            return Err(Error::Input(format!(
                "arclength {s} outside [0, {total}]"
            )));
        }
        let s = s.clamp(0.0, total);
        // Find the bracketing interval; prefer the requested side at exact hits.
        let mut idx = match self.s.binary_search_by(|v| v.partial_cmp(&s).unwrap()) {
            Ok(i) => i,
            Err(i) => i.saturating_sub(1),
        };
        // binary_search lands on an arbitrary equal element; resolve duplicates.
        match side {
            Side::Right => {
                while idx + 1 < n && self.s[idx + 1] == s {
                    idx += 1;
                }
            }
            Side::Left => {
                while idx > 0 && self.s[idx - 1] == s {
                    idx -= 1;
                }
                // an exact hit from the left wants the node itself, not the interval start
            }
        }
        if self.s[idx] == s {
            return Ok(CurveSample {
                s,
                pos: self.pos[idx].clone(),
                tan: self.tan[idx].clone(),
                curv: self.curv[idx].clone(),
            });
        }
        // interior of interval [idx, idx+1]
        let i0 = idx.min(n - 2);
        let (s0, s1) = (self.s[i0], self.s[i0 + 1]);
        debug_assert!(s0 < s1);
        let w = (s - s0) / (s1 - s0);
        let pos = &self.pos[i0] * (1.0 - w) + &self.pos[i0 + 1] * w;
        let mut tan = &self.tan[i0] * (1.0 - w) + &self.tan[i0 + 1] * w;
        let norm = tan.norm();
        if norm < 1e-9 {
            return Err(Error::Numerical(format!(
                "degenerate tangent interpolation at s = {s}"
            )));
        }
        tan /= norm;
        let curv = &self.curv[i0] * (1.0 - w) + &self.curv[i0 + 1] * w;
        Ok(CurveSample { s, pos, tan, curv })
    }

    /// Extracts the sub-curve on `[lo, hi]`, re-based to start at arclength 0.
    /// Interior junction duplicates are preserved; boundary samples take the
    /// interval-interior one-sided limits.
    pub fn subcurve(&self, lo: f64, hi: f64) -> Result<SampledCurve> {
        let total = self.total_length();
        if !(lo >= -1e-12 && hi <= total + 1e-12 && lo < hi) {
            return Err(Error::Input(format!(
                "bad subcurve range [{lo}, {hi}] for curve of length {total}"
            )));
        }
        let lo = lo.clamp(0.0, total);
        let hi = hi.clamp(0.0, total);
        let first = self.sample_at(lo, Side::Right)?;
        let last = self.sample_at(hi, Side::Left)?;

        let mut s = vec![0.0];
        let mut pos = vec![first.pos];
        let mut tan = vec![first.tan];
        let mut curv = vec![first.curv];
        let mut tag = vec![PieceTag::Segment];

        for i in 0..self.s.len() {
            if self.s[i] > lo && self.s[i] < hi {
                s.push(self.s[i] - lo);
                pos.push(self.pos[i].clone());
                tan.push(self.tan[i].clone());
                curv.push(self.curv[i].clone());
                tag.push(self.tag[i]);
            }
        }
        // first sample tag: inherit from the interval it sits in
        if let Some(i) = self.s.iter().position(|&v| v > lo) {
            tag[0] = self.tag[i.saturating_sub(1).max(0)];
        }

        s.push(hi - lo);
        pos.push(last.pos);
        tan.push(last.tan);
        curv.push(last.curv);
        tag.push(*self.tag.last().unwrap());

        Ok(SampledCurve::from_parts(self.d, s, pos, tan, curv, tag))
    }

    /// Rigid transform: positions mapped by `x -> rot x + shift`, tangents and
    /// curvature vectors by `rot`.
    pub fn transformed_rigid(&self, rot: &nalgebra::DMatrix<f64>, shift: &DVector<f64>) -> SampledCurve {
        let pos = self.pos.iter().map(|x| rot * x + shift).collect();
        let tan = self.tan.iter().map(|v| rot * v).collect();
        let curv = self.curv.iter().map(|v| rot * v).collect();
        SampledCurve::from_parts(self.d, self.s.clone(), pos, tan, curv, self.tag.clone())
    }

    /// Similarity scaling by `lambda > 0`: arclengths and positions scale by
    /// `lambda`, tangents are unchanged, curvature vectors scale by `1/lambda`.
    pub fn scaled(&self, lambda: f64) -> Result<SampledCurve> {
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::Input(format!("scale must be positive, got {lambda}")));
        }
        Ok(SampledCurve::from_parts(
            self.d,
            self.s.iter().map(|v| v * lambda).collect(),
            self.pos.iter().map(|x| x * lambda).collect(),
            self.tan.clone(),
            self.curv.iter().map(|v| v / lambda).collect(),
            self.tag.clone(),
        ))
    }

    /// Checks the sampled-curve invariants: grid monotone (duplicates only at
    /// junctions), unit tangents, curvature orthogonal to tangent, and
    /// position increments consistent with the tangent field.
    pub fn validate(&self) -> Result<()> {
        if self.s.is_empty() {
            return Err(Error::Input("empty curve".into()));
        }
        if self.s[0].abs() > 1e-12 {
            return Err(Error::Input("grid must start at 0".into()));
        }
        for i in 0..self.s.len() {
            if (self.tan[i].norm() - 1.0).abs() > 1e-9 {
                return Err(Error::Numerical(format!(
                    "non-unit tangent at sample {i}: |t| = {}",
                    self.tan[i].norm()
                )));
            }
            let dot = self.curv[i].dot(&self.tan[i]).abs();
            if dot > 1e-7 * self.curv[i].norm().max(1.0) {
                return Err(Error::Numerical(format!(
                    "curvature not orthogonal to tangent at sample {i}: |k.t| = {dot}"
                )));
            }
            if i > 0 {
                let h = self.s[i] - self.s[i - 1];
                if h < 0.0 {
                    return Err(Error::Input(format!("grid not monotone at sample {i}")));
                }
                if h > 0.0 {
                    let pred = &self.pos[i - 1] + (&self.tan[i - 1] + &self.tan[i]) * (0.5 * h);
                    let miss = (&self.pos[i] - pred).norm();
                    if miss > 0.5 * h * h + 1e-12 {
                        return Err(Error::Numerical(format!(
                            "position/tangent inconsistency at sample {i}: |miss| = {miss} over step {h}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

pub(crate) fn unit_axis(d: usize, axis: usize) -> DVector<f64> {
    let mut v = DVector::zeros(d);
    v[axis] = 1.0;
    v
}

/// Straight segment of the given length along `dir`, starting at the origin.
pub(crate) fn segment_along(
    dir: &DVector<f64>,
    length: f64,
    opts: &GridOptions,
) -> Result<SampledCurve> {
    let d = dir.len();
    if d < 2 {
        return Err(Error::Input("ambient dimension must be >= 2".into()));
    }
    if !(length.is_finite() && length >= 0.0) {
        return Err(Error::Input(format!("segment length must be >= 0, got {length}")));
    }
    if (dir.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::Input("segment direction must be a unit vector".into()));
    }
    let zero_curv = DVector::zeros(d);
    if length == 0.0 {
        return Ok(SampledCurve::from_parts(
            d,
            vec![0.0],
            vec![DVector::zeros(d)],
            vec![dir.clone()],
            vec![zero_curv],
            vec![PieceTag::Segment],
        ));
    }
    let step = opts.seg_step.unwrap_or(DEFAULT_SEG_STEP).min(length / 16.0);
    let n = ((length / step).ceil() as usize).max(1);
    let h = length / n as f64;
    let mut s = Vec::with_capacity(n + 1);
    let mut pos = Vec::with_capacity(n + 1);
    let mut tan = Vec::with_capacity(n + 1);
    let mut curv = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let sk = if k == n { length } else { k as f64 * h };
        s.push(sk);
        pos.push(dir * sk);
        tan.push(dir.clone());
        curv.push(zero_curv.clone());
    }
    let tag = vec![PieceTag::Segment; n + 1];
    Ok(SampledCurve::from_parts(d, s, pos, tan, curv, tag))
}

/// Straight segment along `-e_1` of the given length (a degenerate one-sample
/// curve when `length = 0`).
pub fn segment(length: f64, d: usize) -> Result<SampledCurve> {
    segment_with(length, d, &GridOptions::default())
}

pub fn segment_with(length: f64, d: usize, opts: &GridOptions) -> Result<SampledCurve> {
    let dir = -unit_axis(d, 0);
    segment_along(&dir, length, opts)
}

/// Borderline loop in direction `sigma`: the curve
/// `s ↦ (2 tanh_p s - s) e_1 + p/(p-1) (sech_p s)^(p-1) σ` on `[-K, K]`,
/// re-based to arclength `[0, 2K]`.
///
/// Tangent and curvature samples come from the closed-form derivative
/// identities, so the endpoint values (tangent `-e_1`, curvature `0`) and the
/// vertex values (tangent `e_1`, curvature `-2σ`) are exact.
pub fn loop_curve(ctx: &PContext, sigma: &DVector<f64>, d: usize) -> Result<SampledCurve> {
    loop_curve_with(ctx, sigma, d, &GridOptions::default())
}

pub fn loop_curve_with(
    ctx: &PContext,
    sigma: &DVector<f64>,
    d: usize,
    opts: &GridOptions,
) -> Result<SampledCurve> {
    if d < 2 {
        return Err(Error::Input("ambient dimension must be >= 2".into()));
    }
    if sigma.len() != d {
        return Err(Error::Input(format!(
            "sigma has dimension {}, expected {d}",
            sigma.len()
        )));
    }
    if (sigma.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::Input("sigma must be a unit vector".into()));
    }
    if sigma[0].abs() > 1e-12 {
        return Err(Error::Input("sigma must be orthogonal to e_1".into()));
    }

    let p = ctx.p();
    let k = ctx.k();
    let n_half = match opts.loop_step {
        Some(step) if step > 0.0 => ((k / step).ceil() as usize).max(8),
        _ => DEFAULT_LOOP_HALF_SAMPLES,
    };
    let h = k / n_half as f64;

    // March the amplitude phi(s) on the uniform arclength grid of the
    // half-loop [0, K], accumulating tanh_p along the way. Each step solves
    //   ∫_{phi_{k-1}}^{phi_k} (cos ψ)^(-2/p) dψ = h
    // by safeguarded Newton with local Gauss-Legendre quadrature.
    let e_f = -2.0 / p; // exponent in F's integrand
    let e_t = 2.0 - 2.0 / p; // exponent in tanh_p's integrand
    let w_f = |phi: f64| phi.cos().max(0.0).powf(e_f);
    let w_t = |phi: f64| phi.cos().max(0.0).powf(e_t);

    let mut phis: Vec<f64> = Vec::with_capacity(n_half + 1);
    let mut tanhs: Vec<f64> = Vec::with_capacity(n_half + 1);
    phis.push(0.0);
    tanhs.push(0.0);
    let half_pi = std::f64::consts::FRAC_PI_2;
    for step_idx in 1..n_half {
        let phi_prev = phis[step_idx - 1];
        let mut lo = phi_prev;
        let mut hi = half_pi;
        // Euler predictor: d phi / ds = cos^(2/p)
        let mut phi = (phi_prev + h * phi_prev.cos().powf(2.0 / p)).min(half_pi * (1.0 - 1e-15));
        let mut best_phi = phi;
        let mut best_gap = f64::INFINITY;
        for _ in 0..60 {
            let g = gauss8(&w_f, phi_prev, phi) - h;
            if g.abs() < best_gap {
                best_gap = g.abs();
                best_phi = phi;
            }
            // F quantizes in steps of w(phi)·ulp(phi); stop once the residual
            // or the bracket is at that resolution.
            if g.abs() <= 1e-14 || hi - lo <= f64::EPSILON * hi {
                break;
            }
            if g > 0.0 {
                hi = phi;
            } else {
                lo = phi;
            }
            let newton = phi - g / w_f(phi);
            phi = if newton > lo && newton < hi {
                newton
            } else {
                0.5 * (lo + hi)
            };
        }
        if best_gap > 1e-9 {
            return Err(Error::Numerical(format!(
                "loop sampler failed to advance amplitude at step {step_idx} (residual {best_gap})"
            )));
        }
        let phi = best_phi;
        tanhs.push(tanhs[step_idx - 1] + gauss8(&w_t, phi_prev, phi));
        phis.push(phi);
    }
    phis.push(half_pi);
    tanhs.push(ctx.tanh_at_k());

    let apex = p / (p - 1.0);
    let e1 = unit_axis(d, 0);

    let n_total = 2 * n_half + 1;
    let mut s = Vec::with_capacity(n_total);
    let mut pos = Vec::with_capacity(n_total);
    let mut tan = Vec::with_capacity(n_total);
    let mut curv = Vec::with_capacity(n_total);

    // index j = 0..=2*n_half corresponds to loop-local u = (j - n_half) * h
    for j in 0..n_total {
        let m = j as i64 - n_half as i64;
        let idx = m.unsigned_abs() as usize;
        let mirror = m < 0;
        let (u, phi, th) = if idx == n_half {
            (k.copysign(m as f64), half_pi, ctx.tanh_at_k())
        } else {
            (idx as f64 * h * if mirror { -1.0 } else { 1.0 }, phis[idx], tanhs[idx])
        };
        s.push(u + k);
        if idx == n_half {
            // endpoint values are exact: sech_p(±K) = 0
            let x = (2.0 * th - k) * if mirror { -1.0 } else { 1.0 };
            pos.push(&e1 * x);
            tan.push(-&e1);
            curv.push(DVector::zeros(d));
            continue;
        }
        let sign = if mirror { -1.0 } else { 1.0 };
        let cos_phi = phi.cos().max(0.0);
        let x = sign * (2.0 * th - u.abs());
        let y = apex * cos_phi.powf(e_t); // cos^(2 - 2/p) = (sech_p)^(p-1) · ... exponents match: 2(p-1)/p = 2 - 2/p
        pos.push(&e1 * x + sigma * y);
        let (s2, c2) = (2.0 * phi).sin_cos();
        tan.push(&e1 * c2 - sigma * (sign * s2));
        let sech = cos_phi.powf(2.0 / p);
        curv.push((&e1 * (sign * s2) + sigma * c2) * (-2.0 * sech));
    }

    let tag = vec![PieceTag::Loop; n_total];
    Ok(SampledCurve::from_parts(d, s, pos, tan, curv, tag))
}

/// 8-point Gauss-Legendre quadrature on `[a, b]`.
fn gauss8<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    const X: [f64; 4] = [
        0.183_434_642_495_649_8,
        0.525_532_409_916_329_0,
        0.796_666_477_413_626_7,
        0.960_289_856_497_536_3,
    ];
    const W: [f64; 4] = [
        0.362_683_783_378_362_0,
        0.313_706_645_877_887_3,
        0.222_381_034_453_374_5,
        0.101_228_536_290_376_3,
    ];
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for i in 0..4 {
        acc += W[i] * (f(mid + half * X[i]) + f(mid - half * X[i]));
    }
    acc * half
}

// ---------------------------------------------------------------------------
// Composition operators
// ---------------------------------------------------------------------------

/// Concatenation: `b` is translated so its start point coincides with `a`'s
/// end point; arclength grids are shifted and merged. No smoothing: the
/// junction keeps both one-sided samples as a duplicated node.
pub fn concat(a: &SampledCurve, b: &SampledCurve) -> Result<SampledCurve> {
    if a.d != b.d {
        return Err(Error::Input(format!(
            "dimension mismatch in concat: {} vs {}",
            a.d, b.d
        )));
    }
    let la = a.total_length();
    let shift = a.end_pos() - b.start_pos();
    let n = a.s.len() + b.s.len();
    let mut s = Vec::with_capacity(n);
    let mut pos = Vec::with_capacity(n);
    let mut tan = Vec::with_capacity(n);
    let mut curv = Vec::with_capacity(n);
    let mut tag = Vec::with_capacity(n);
    s.extend_from_slice(&a.s);
    pos.extend(a.pos.iter().cloned());
    tan.extend(a.tan.iter().cloned());
    curv.extend(a.curv.iter().cloned());
    tag.extend_from_slice(&a.tag);
    for i in 0..b.s.len() {
        s.push(la + b.s[i]);
        pos.push(&b.pos[i] + &shift);
        tan.push(b.tan[i].clone());
        curv.push(b.curv[i].clone());
        tag.push(b.tag[i]);
    }
    Ok(SampledCurve::from_parts(a.d, s, pos, tan, curv, tag))
}

/// Rigid translation so the curve starts at `p`; tangents and curvatures
/// unchanged.
pub fn prepend_point(p: &DVector<f64>, c: &SampledCurve) -> Result<SampledCurve> {
    if p.len() != c.d {
        return Err(Error::Input(format!(
            "dimension mismatch in prepend_point: {} vs {}",
            p.len(),
            c.d
        )));
    }
    let shift = p - c.start_pos();
    let pos = c.pos.iter().map(|x| x + &shift).collect();
    Ok(SampledCurve::from_parts(
        c.d,
        c.s.clone(),
        pos,
        c.tan.clone(),
        c.curv.clone(),
        c.tag.clone(),
    ))
}

/// Applies the rotation through `phi` in the (e_2, e_3) plane to `v`.
pub(crate) fn rotate23(v: &DVector<f64>, phi: f64) -> DVector<f64> {
    let (sin, cos) = phi.sin_cos();
    let mut out = v.clone();
    out[1] = cos * v[1] - sin * v[2];
    out[2] = sin * v[1] + cos * v[2];
    out
}

/// Rotates the tail `s >= s0` about the line through `c(s0)` parallel to
/// `e_1`, by angle `phi` in the (e_2, e_3) plane. `s0` is snapped to the
/// nearest grid node; if that node is not already a junction it becomes one,
/// carrying the unrotated left and rotated right samples.
pub fn rotate_tail_about_axis(c: &SampledCurve, s0: f64, phi: f64) -> Result<SampledCurve> {
    if c.d < 3 {
        return Err(Error::Unsupported(
            "rotate_tail_about_axis requires ambient dimension >= 3".into(),
        ));
    }
    let total = c.total_length();
    if !(s0 > 0.0 && s0 < total) {
        return Err(Error::Input(format!(
            "rotation arclength {s0} outside (0, {total})"
        )));
    }
    // snap to the nearest node; at a duplicated node pick the right element
    let mut best = 0usize;
    let mut best_gap = f64::INFINITY;
    for (i, &si) in c.s.iter().enumerate() {
        let gap = (si - s0).abs();
        if gap <= best_gap {
            best_gap = gap;
            best = i;
        }
    }
    let node_s = c.s[best];
    let already_junction = best > 0 && c.s[best - 1] == node_s;
    let center = c.pos[best].clone();

    let n = c.s.len() + usize::from(!already_junction);
    let mut s = Vec::with_capacity(n);
    let mut pos = Vec::with_capacity(n);
    let mut tan = Vec::with_capacity(n);
    let mut curv = Vec::with_capacity(n);
    let mut tag = Vec::with_capacity(n);

    for i in 0..c.s.len() {
        if i < best {
            s.push(c.s[i]);
            pos.push(c.pos[i].clone());
            tan.push(c.tan[i].clone());
            curv.push(c.curv[i].clone());
            tag.push(c.tag[i]);
            continue;
        }
        if i == best && !already_junction {
            // left copy of the new junction stays unrotated
            s.push(c.s[i]);
            pos.push(c.pos[i].clone());
            tan.push(c.tan[i].clone());
            curv.push(c.curv[i].clone());
            tag.push(c.tag[i]);
        }
        s.push(c.s[i]);
        pos.push(&center + rotate23(&(&c.pos[i] - &center), phi));
        tan.push(rotate23(&c.tan[i], phi));
        curv.push(rotate23(&c.curv[i], phi));
        tag.push(c.tag[i]);
    }
    Ok(SampledCurve::from_parts(c.d, s, pos, tan, curv, tag))
}

/// Planar rotation by π about the start point: positions relative to the
/// start, tangents, and curvature vectors are all negated.
pub fn reflect_planar(c: &SampledCurve) -> Result<SampledCurve> {
    if c.d != 2 {
        return Err(Error::Unsupported(
            "reflect_planar requires ambient dimension 2".into(),
        ));
    }
    let start = c.start_pos().clone();
    let pos = c.pos.iter().map(|x| &start - (x - &start)).collect();
    let tan = c.tan.iter().map(|v| -v).collect();
    let curv = c.curv.iter().map(|v| -v).collect();
    Ok(SampledCurve::from_parts(
        c.d,
        c.s.clone(),
        pos,
        tan,
        curv,
        c.tag.clone(),
    ))
}

/// Rotation matrix mapping unit vector `u` to unit vector `v`, acting in
/// their common plane and fixing the orthogonal complement.
pub(crate) fn rotation_taking(u: &DVector<f64>, v: &DVector<f64>) -> nalgebra::DMatrix<f64> {
    let d = u.len();
    let cos = u.dot(v).clamp(-1.0, 1.0);
    let mut w = v - u * cos;
    let wn = w.norm();
    let eye = nalgebra::DMatrix::<f64>::identity(d, d);
    if wn < 1e-14 {
        if cos > 0.0 {
            return eye;
        }
        // antipodal: rotate by π in a plane containing u
        let mut aux = DVector::zeros(d);
        let k = (0..d).min_by(|&i, &j| u[i].abs().partial_cmp(&u[j].abs()).unwrap()).unwrap();
        aux[k] = 1.0;
        let mut q = aux - u * u[k];
        q /= q.norm();
        return &eye - (u * u.transpose() + &q * q.transpose()) * 2.0;
    }
    w /= wn;
    let sin = wn;
    &eye + (u * u.transpose() + &w * w.transpose()) * (cos - 1.0)
        + (&w * u.transpose() - u * w.transpose()) * sin
}
