//! Hodge-number profiles and the Lawrence–Venkatesh-style pipeline from a
//! profile to group-theoretic dimension-bound data.
//!
//! A *profile* records the Hodge numbers `h_0, …, h_d` of a weight-`d`
//! structure of total dimension `e = Σ h_p`, optionally *symmetric*
//! (polarized: `h_p = h_{d−p}`). Profiles usually arrive as the signed Euler
//! characteristics `χ_p` with `h_p = (−1)^{d−p}·χ_p`
//! ([`profile_from_chis`]).
//!
//! Two purely numerical gates are computed here:
//!
//! * [`skull_check`] — the quadratic form `q = 2·Σ h_p² − e²`; the profile
//!   passes when `q ≤ 0`. For odd `d` the form is `−8·Σ_{i<j} h_i h_j ≤ 0`
//!   over the lower half, so the check always passes.
//! * [`numerical_condition`] — the exceptional-case screen on
//!   `(d, g, χ_top, χ_O)`; it reports which exceptional case, if any, a
//!   symmetric input hits.
//!
//! [`lv_group_and_point`] converts a profile into the pair `(H, y)` whose
//! combinatorics drive the dimension bounds: `GL(e)` for non-symmetric
//! profiles, `GSp(e)` (odd `d`) or `GO(e)` (even `d`) for symmetric ones,
//! with `y` the apartment point whose slopes are the profile's (centered)
//! Hodge slopes. [`lv_pipeline`] chains everything into one report.

use num::ToPrimitive;

use crate::bounds::{n0_search, ss_inequality, N0Result, UniformProblem};
use crate::building::{parabolic_stats, ApartmentPoint, ParabolicStats};
use crate::error::Error;
use crate::polygon::adjoint_polygon;
use crate::rat::{rat, ratio, Rational};
use crate::root_data::{build_root_datum, GroupFamily, RootDatum};

/// Hodge numbers `h_0..h_d` of a weight-`d` structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeProfile {
    d: u32,
    h: Vec<u64>,
    e: u64,
    symmetric: bool,
}

impl HodgeProfile {
    /// # Errors
    ///
    /// Needs `h` of length `d+1` with positive total, palindromic
    /// (`h_p = h_{d−p}`, which Serre duality forces on every geometric
    /// profile regardless of the `symmetric` flag).
    pub fn new(d: u32, h: Vec<u64>, symmetric: bool) -> Result<Self, Error> {
        if h.len() != d as usize + 1 {
            return Err(Error::invalid(format!(
                "weight {d} needs {} Hodge numbers, got {}",
                d + 1,
                h.len()
            )));
        }
        let e: u64 = h.iter().sum();
        if e == 0 {
            return Err(Error::invalid("total dimension e must be positive"));
        }
        let k = h.len();
        for p in 0..k / 2 {
            if h[p] != h[k - 1 - p] {
                return Err(Error::invalid(format!(
                    "Serre duality needs h_{p} = h_{}, got {} ≠ {}",
                    k - 1 - p,
                    h[p],
                    h[k - 1 - p]
                )));
            }
        }
        Ok(HodgeProfile { d, h, e, symmetric })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn h(&self) -> &[u64] {
        &self.h
    }

    /// Total dimension `Σ h_p`.
    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn symmetric(&self) -> bool {
        self.symmetric
    }
}

/// Builds a profile from signed Euler characteristics:
/// `h_p = (−1)^{d−p}·χ_p`.
///
/// # Errors
///
/// Every `(−1)^{d−p}·χ_p` must be nonnegative, and the profile must be valid
/// as in [`HodgeProfile::new`].
pub fn profile_from_chis(d: u32, chis: &[i64], symmetric: bool) -> Result<HodgeProfile, Error> {
    if chis.len() != d as usize + 1 {
        return Err(Error::invalid(format!(
            "weight {d} needs {} characteristics, got {}",
            d + 1,
            chis.len()
        )));
    }
    let mut h = Vec::with_capacity(chis.len());
    for (p, &chi) in chis.iter().enumerate() {
        let signed = if (d as usize - p) % 2 == 0 { chi } else { -chi };
        if signed < 0 {
            return Err(Error::invalid(format!(
                "χ_{p} = {chi} has the wrong sign for weight {d}"
            )));
        }
        h.push(signed as u64);
    }
    HodgeProfile::new(d, h, symmetric)
}

/// Result of the quadratic gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkullCheck {
    /// `q_value ≤ 0`.
    pub verdict: bool,
    /// `2·Σ h_p² − e²`.
    pub q_value: i128,
}

/// Evaluates `q = 2·Σ h_p² − e²` and its sign gate.
pub fn skull_check(profile: &HodgeProfile) -> SkullCheck {
    let sum_sq: i128 = profile.h.iter().map(|&v| (v as i128) * (v as i128)).sum();
    let e = profile.e as i128;
    let q_value = 2 * sum_sq - e * e;
    SkullCheck {
        verdict: q_value <= 0,
        q_value,
    }
}

/// Input of the exceptional-case screen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionInput {
    pub d: u32,
    pub g: u64,
    pub chi_top_bar: i64,
    pub chi_o_bar: i64,
    pub symmetric: bool,
}

/// Outcome of the exceptional-case screen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionVerdict {
    /// True unless an exceptional case is hit.
    pub verdict: bool,
    /// The descriptor of the case that was hit, if any.
    pub violated_case: Option<String>,
}

/// Screens `(d, g, χ_top, χ_O)` against the exceptional numerical cases.
/// Non-symmetric inputs pass vacuously. A symmetric input fails exactly when
///
/// * `|χ_top| = 56`, `d = 3`, `g ∈ {8, 9}`, `χ_O = −7` (case `"56"`), or
/// * some `m` with `3 ≤ m ≤ d` and `m ≡ d (mod 2)` has `|χ_top| = 2^{2m−1}`
///   and `4d ≥ g − 1` (case `"2^{2m-1}, m=<m>"`).
pub fn numerical_condition(input: &ConditionInput) -> ConditionVerdict {
    let pass = ConditionVerdict {
        verdict: true,
        violated_case: None,
    };
    if !input.symmetric {
        return pass;
    }
    let abs_top = input.chi_top_bar.unsigned_abs();
    if abs_top == 56 && input.d == 3 && (input.g == 8 || input.g == 9) && input.chi_o_bar == -7 {
        return ConditionVerdict {
            verdict: false,
            violated_case: Some("56".to_string()),
        };
    }
    // |χ_top| = 2^{2m−1} only fits u64 for m ≤ 32.
    let m_top = input.d.min(32);
    let mut m = if input.d % 2 == 1 { 3 } else { 4 };
    while m <= m_top {
        if abs_top == 1u64 << (2 * m - 1)
            && 4 * i128::from(input.d) >= i128::from(input.g) - 1
        {
            return ConditionVerdict {
                verdict: false,
                violated_case: Some(format!("2^{{2m-1}}, m={m}")),
            };
        }
        m += 2;
    }
    pass
}

/// The group-and-point pair `(H, y)` of a profile: `GL(e)` for non-symmetric
/// profiles with `y` the slope multiset itself; `GSp(e)` (odd `d`) or
/// `GO(e)` (even `d`) for symmetric ones, with `y` the centered upper-half
/// slopes `α − d/2` (each repeated `h_α` times) padded by zeros from the
/// middle block.
///
/// # Errors
///
/// `e` must fit the group parameter, and for even-dimensional `GO` the
/// middle Hodge number must be even (the dimension parity of the middle
/// quadratic space) — arithmetically forced for honest profiles, checked
/// anyway.
pub fn lv_group_and_point(profile: &HodgeProfile) -> Result<(RootDatum, ApartmentPoint), Error> {
    let e: u32 = profile
        .e
        .try_into()
        .map_err(|_| Error::TooLarge(format!("e = {} exceeds the group size limit", profile.e)))?;
    let d = profile.d;
    if !profile.symmetric {
        let datum = build_root_datum(GroupFamily::Gl(e))?;
        let mut entries = Vec::with_capacity(e as usize);
        for alpha in (0..=d).rev() {
            for _ in 0..profile.h[alpha as usize] {
                entries.push(rat(i64::from(alpha)));
            }
        }
        let y = ApartmentPoint::new(&datum, entries)?;
        return Ok((datum, y));
    }

    let family = if d % 2 == 1 {
        // Σ h_p is even for symmetric odd weight: the halves pair up.
        assert!(e % 2 == 0, "symmetric odd-weight profile must have even e");
        GroupFamily::Gsp(e)
    } else {
        let mid = profile.h[(d / 2) as usize];
        if e % 2 == 0 && mid % 2 == 1 {
            return Err(Error::invalid(format!(
                "even-dimensional GO needs an even middle Hodge number, got h_{} = {mid}",
                d / 2
            )));
        }
        GroupFamily::Go(e)
    };
    let datum = build_root_datum(family)?;
    let n = datum.coords();
    let mut entries = Vec::with_capacity(n);
    // Upper-half slopes α − d/2 for α > d/2, descending.
    let mut alpha = d;
    while 2 * alpha > d {
        let slope = ratio(2 * i64::from(alpha) - i64::from(d), 2);
        for _ in 0..profile.h[alpha as usize] {
            entries.push(slope.clone());
        }
        alpha -= 1;
    }
    assert!(
        entries.len() <= n,
        "upper-half slope count exceeds the torus coordinates"
    );
    entries.resize(n, rat(0));
    let y = ApartmentPoint::new(&datum, entries)?;
    Ok((datum, y))
}

/// The combined report of [`lv_pipeline`].
#[derive(Debug, Clone)]
pub struct LvReport {
    pub family: GroupFamily,
    pub y: ApartmentPoint,
    pub stats: ParabolicStats,
    /// `dim H`.
    pub dim_h: usize,
    pub skull: SkullCheck,
    /// The semisimplicity inequality for `(H, y)`.
    pub ss: bool,
    /// `skull passes ⟹ ss holds` for this instance. True for every profile
    /// except the degenerate boundary family — even weight, symmetric,
    /// `h_{d/2} = 0`, with exactly two (equal) nonzero blocks — where the
    /// quadratic gate sits at `q = 0` and the inequality misses by exactly
    /// one margin unit. Such profiles do not occur for actual fibers (for
    /// surfaces they would force `c₁² = 5·c₂`, beyond the
    /// Bogomolov–Miyaoka–Yau bound `c₁² ≤ 3·c₂`).
    pub implication_ok: bool,
    /// The bound target `n = dim_base + dim H`.
    pub n: u64,
    /// The uniform threshold, computed when both gates pass.
    pub n0: Option<N0Result>,
}

/// Runs the full pipeline on a profile: build `(H, y)`, take its parabolic
/// statistics, evaluate the quadratic gate and the semisimplicity
/// inequality, and — when both pass — search the uniform threshold for the
/// target `n = dim_base + dim H` with admissible slopes `{0, …, d}`.
///
/// # Errors
///
/// Propagates profile/group construction errors.
pub fn lv_pipeline(profile: &HodgeProfile, dim_base: u64) -> Result<LvReport, Error> {
    let (datum, y) = lv_group_and_point(profile)?;
    let stats = parabolic_stats(&datum, &y)?;
    let dim_h = datum.dim_group();
    let skull = skull_check(profile);
    let ss = ss_inequality(dim_h, stats.rank, stats.dim_p_ss);
    let implication_ok = !skull.verdict || ss;
    let n = dim_base + dim_h as u64;
    let n0 = if skull.verdict && ss {
        let up = UniformProblem {
            slopes_allowed: (0..=profile.d).map(|a| rat(i64::from(a))).collect(),
            n,
            dim_h,
            h_polygon: adjoint_polygon(&datum, &y)?,
            h_flag_dim: stats.dim_flag,
            h_p_ss: stats.dim_p_ss,
            h_rank: stats.rank,
        };
        Some(n0_search(&up)?)
    } else {
        None
    };
    Ok(LvReport {
        family: datum.family(),
        y,
        stats,
        dim_h,
        skull,
        ss,
        implication_ok,
        n,
        n0,
    })
}

/// The Hodge filtration dimensions `(dim F^0, dim F^1, …, dim F^{d+1})
/// = (e, e−h_0, e−h_0−h_1, …, h_d, 0)`.
///
/// For symmetric profiles these satisfy `F^i + F^{d+1−i} = e`.
pub fn hodge_filtration_dims(profile: &HodgeProfile) -> Vec<u64> {
    let mut dims = Vec::with_capacity(profile.h.len() + 1);
    let mut remaining = profile.e;
    dims.push(remaining);
    for &hp in &profile.h {
        remaining -= hp;
        dims.push(remaining);
    }
    dims
}

/// Divides both characteristics by the order of a finite stabilizer.
///
/// # Errors
///
/// The order must be positive and divide both characteristics exactly.
pub fn quotient_characteristics(
    chi_top: i64,
    chi_o: i64,
    stab_order: u64,
) -> Result<(i64, i64), Error> {
    if stab_order == 0 {
        return Err(Error::invalid("stabilizer order must be positive"));
    }
    let s: i64 = stab_order
        .try_into()
        .map_err(|_| Error::TooLarge("stabilizer order overflows i64".into()))?;
    if chi_top % s != 0 {
        return Err(Error::invalid(format!(
            "stabilizer order {s} does not divide χ_top = {chi_top}"
        )));
    }
    if chi_o % s != 0 {
        return Err(Error::invalid(format!(
            "stabilizer order {s} does not divide χ_O = {chi_o}"
        )));
    }
    Ok((chi_top / s, chi_o / s))
}

/// One admissible surface class for a given `c₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceEntry {
    /// `c₁²`, between 1 and `3c₂`, with `12 | c₁² + c₂`.
    pub c1sq: u64,
    /// `χ_O = (c₁² + c₂)/12`.
    pub chi_o: u64,
    /// Hilbert-polynomial coefficients `(c₁²/2, −c₁²/2, χ_O)`:
    /// `χ(nD) = (c₁²/2)n² − (c₁²/2)n + χ_O`.
    pub hilbert: [Rational; 3],
}

/// Enumerates the surface classes admissible for `c₂`: all `c₁²` in
/// `1..=3c₂` with `12 | c₁² + c₂`, each with its `χ_O` and Hilbert
/// polynomial. Every emitted polynomial has positive leading coefficient and
/// takes integer values at integers.
///
/// # Errors
///
/// `c₂` must be at least 1.
pub fn surface_hilbert(c2: u64) -> Result<Vec<SurfaceEntry>, Error> {
    if c2 == 0 {
        return Err(Error::invalid("c₂ must be at least 1"));
    }
    let mut out = Vec::new();
    for c1sq in 1..=3 * c2 {
        if (c1sq + c2) % 12 != 0 {
            continue;
        }
        let chi_o = (c1sq + c2) / 12;
        let half = ratio(c1sq.to_i64().ok_or_else(|| {
            Error::TooLarge("c₁² overflows the coefficient range".into())
        })?, 2);
        out.push(SurfaceEntry {
            c1sq,
            chi_o,
            hilbert: [half.clone(), -half, rat(chi_o as i64)],
        });
    }
    Ok(out)
}
