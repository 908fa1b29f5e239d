//! Dimension-bound inequalities and the uniform exponent threshold `N₀`.
//!
//! The basic bound takes the statistics of a pair `(Ḡ, x̄)` — its adjoint
//! polygon `Υ`, flag dimension, Levi dimension, rank — plus a target `n` and
//! an externally supplied centralizer bound, and checks the two
//! inequalities
//!
//! ```text
//! (a)  n ≤ dim_flag,
//! (b)  Υ(n−1) + Υ(n−1 + (dim_p_ss − rank)/2) < max Υ      (strict),
//! ```
//!
//! concluding `codim ≥ n − dim_centralizer` when both hold.
//!
//! The *uniform* variant asks instead: given one factor `(H, y)` and a
//! target `n`, from which exponent `N₀` on do the inequalities hold for the
//! `N`-fold product `H^N` at the diagonal point, for **all** `N ≥ N₀`? By the
//! scaling `Υ_{H^N}(N·t) = N·Υ_H(t)`, the two conditions at exponent `N`
//! read, with `ε = (n−1)/N`:
//!
//! ```text
//! (a)  n ≤ N·dim_flag(y),
//! (b)  Υ(ε) + Υ(ε + c) < max Υ,      c = (dim_p_ss − rank)/2,
//! ```
//!
//! on the single-factor polygon. [`n0_search`] computes the exact minimal
//! such `N₀` with a termination certificate instead of testing exponents one
//! by one; see its documentation for the argument.

use num::ToPrimitive;

use crate::error::Error;
use crate::polygon::AdjointPolygon;
use crate::rat::{floor_int, rat, Rational};

/// Inputs of the basic dimension bound, describing a pair `(Ḡ, x̄)`.
///
/// The polygon and the dimension statistics must come from the same pair;
/// the struct itself does not (and cannot) re-derive one from the other.
#[derive(Debug, Clone)]
pub struct BoundProblem {
    /// Adjoint polygon of `(Ḡ, x̄)`.
    pub polygon: AdjointPolygon,
    /// `dim Ḡ/P_x̄`.
    pub dim_flag_bar: usize,
    /// Levi dimension of `P_x̄`.
    pub dim_p_ss_bar: usize,
    /// Rank of `Ḡ`.
    pub rank_bar: usize,
    /// The target dimension.
    pub n: u64,
    /// External upper bound for the centralizer dimension.
    pub dim_centralizer: u64,
}

/// Checks the two dimension-bound inequalities.
///
/// # Errors
///
/// `n` must be at least 1, `rank_bar ≤ dim_p_ss_bar`, and both evaluation
/// points must lie in the polygon's domain.
pub fn theorem_inequalities(problem: &BoundProblem) -> Result<bool, Error> {
    if problem.n == 0 {
        return Err(Error::invalid("the target n must be at least 1"));
    }
    if problem.rank_bar > problem.dim_p_ss_bar {
        return Err(Error::invalid(format!(
            "rank {} exceeds the Levi dimension {}",
            problem.rank_bar, problem.dim_p_ss_bar
        )));
    }
    let easy = problem.n <= problem.dim_flag_bar as u64;
    let t1 = rat(problem.n as i64 - 1);
    let c = rat((problem.dim_p_ss_bar - problem.rank_bar) as i64) / rat(2);
    let t2 = &t1 + &c;
    let lhs = problem.polygon.evaluate(&t1)? + problem.polygon.evaluate(&t2)?;
    let hard = lhs < problem.polygon.max_value();
    Ok(easy && hard)
}

/// The codimension conclusion `n − dim_centralizer` (may be nonpositive).
///
/// # Errors
///
/// The inequalities of [`theorem_inequalities`] must hold.
pub fn codim_conclusion(problem: &BoundProblem) -> Result<i64, Error> {
    if !theorem_inequalities(problem)? {
        return Err(Error::invalid(
            "the dimension-bound inequalities do not hold for this problem",
        ));
    }
    Ok(problem.n as i64 - problem.dim_centralizer as i64)
}

/// The semisimplicity inequality `2·dim_p_ss < dim_h + rank_h`.
pub fn ss_inequality(dim_h: usize, rank_h: usize, dim_p_ss: usize) -> bool {
    2 * dim_p_ss < dim_h + rank_h
}

/// The default centralizer bound: the full group dimension.
pub fn default_centralizer_bound(dim_h: usize) -> u64 {
    dim_h as u64
}

/// Inputs of the uniform threshold problem, describing one factor `(H, y)`.
#[derive(Debug, Clone)]
pub struct UniformProblem {
    /// The admissible slope set `I`: every polygon slope must be a
    /// difference of two elements of `I` (or zero).
    pub slopes_allowed: Vec<Rational>,
    /// The target dimension.
    pub n: u64,
    /// `dim H`.
    pub dim_h: usize,
    /// Adjoint polygon of `(H, y)`.
    pub h_polygon: AdjointPolygon,
    /// `dim H/P_y`.
    pub h_flag_dim: usize,
    /// Levi dimension of `P_y`.
    pub h_p_ss: usize,
    /// Rank of `H`.
    pub h_rank: usize,
}

/// Why no finite threshold exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum N0Failure {
    /// `2·dim_p_ss < dim_h + rank_h` fails, so condition (b) fails for every
    /// exponent.
    SsInequalityFails,
    /// The point is central (`dim_flag = 0`), so condition (a) fails for
    /// every exponent.
    FlagDimensionZero,
}

impl std::fmt::Display for N0Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            N0Failure::SsInequalityFails => write!(f, "semisimplicity inequality fails"),
            N0Failure::FlagDimensionZero => write!(f, "flag dimension is zero"),
        }
    }
}

/// Result of the uniform threshold search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum N0Result {
    /// Minimal `N₀ ≥ 1` such that both conditions hold for every `N ≥ N₀`.
    Finite(u64),
    NoFiniteN(N0Failure),
}

fn validate_uniform(up: &UniformProblem) -> Result<(), Error> {
    if up.n == 0 {
        return Err(Error::invalid("the target n must be at least 1"));
    }
    if up.dim_h == 0 || up.h_rank == 0 {
        return Err(Error::invalid("dim_h and h_rank must be at least 1"));
    }
    if up.h_polygon.dim() != up.dim_h {
        return Err(Error::invalid(format!(
            "polygon has {} slopes but dim_h = {}",
            up.h_polygon.dim(),
            up.dim_h
        )));
    }
    let zero = rat(0);
    let n_pos = up.h_polygon.n_positive_slopes();
    let n_neg = up
        .h_polygon
        .slopes()
        .iter()
        .filter(|s| **s < zero)
        .count();
    if n_pos != up.h_flag_dim || n_neg != up.h_flag_dim {
        return Err(Error::invalid(format!(
            "h_flag_dim = {} does not match the polygon ({n_pos} positive, {n_neg} negative slopes)",
            up.h_flag_dim
        )));
    }
    if up.h_p_ss + 2 * up.h_flag_dim != up.dim_h {
        return Err(Error::invalid(format!(
            "h_p_ss = {} inconsistent with dim_h = {} and h_flag_dim = {}",
            up.h_p_ss, up.dim_h, up.h_flag_dim
        )));
    }
    if up.h_rank > up.h_p_ss {
        return Err(Error::invalid(format!(
            "h_rank = {} exceeds the Levi dimension {}",
            up.h_rank, up.h_p_ss
        )));
    }
    for s in up.h_polygon.slopes() {
        let ok = *s == zero
            || up
                .slopes_allowed
                .iter()
                .any(|a| up.slopes_allowed.iter().any(|b| *s == a - b));
        if !ok {
            return Err(Error::invalid(format!(
                "polygon slope {s} is not a difference of admissible slopes"
            )));
        }
    }
    Ok(())
}

/// Evaluates the two uniform conditions at a single exponent `N`:
/// `(n ≤ N·dim_flag, Υ(ε) + Υ(ε+c) < max Υ)` with `ε = (n−1)/N`.
///
/// An evaluation point beyond the polygon's domain means the corresponding
/// condition fails (the product polygon at that exponent is too short for
/// the target), not that the problem is malformed.
///
/// # Errors
///
/// The problem must be internally consistent and `n_exp ≥ 1`.
pub fn uniform_conditions_at(up: &UniformProblem, n_exp: u64) -> Result<(bool, bool), Error> {
    validate_uniform(up)?;
    if n_exp == 0 {
        return Err(Error::invalid("the exponent N must be at least 1"));
    }
    let cond_a = up.n <= n_exp.saturating_mul(up.h_flag_dim as u64);
    let eps = rat(up.n as i64 - 1) / rat(n_exp as i64);
    let c = rat((up.h_p_ss - up.h_rank) as i64) / rat(2);
    let dim = rat(up.dim_h as i64);
    let hi = &eps + &c;
    let cond_b = if eps > dim || hi > dim {
        false
    } else {
        up.h_polygon.evaluate(&eps)? + up.h_polygon.evaluate(&hi)? < up.h_polygon.max_value()
    };
    Ok((cond_a, cond_b))
}

/// Computes the minimal `N₀ ≥ 1` such that **both** uniform conditions hold
/// for every exponent `N ≥ N₀`, or reports that none exists.
///
/// The search is exact, with a termination certificate rather than trial
/// evaluation:
///
/// * Condition (a) holds exactly for `N ≥ N_a = ⌈n / dim_flag⌉` (and for no
///   smaller `N`), provided `dim_flag > 0`.
/// * For `N ≥ N_a` the argument `ε = (n−1)/N` stays below
///   `ε_max = (n−1)/N_a < dim_flag`, and the semisimplicity inequality
///   forces `c = (dim_p_ss − rank)/2 < dim_flag` as well (the two are
///   equivalent, since `dim − dim_p_ss = 2·dim_flag`). The polygon is
///   nondecreasing up to `dim_flag` and constant on
///   `[dim_flag, dim_flag + dim_p_ss]`, and `ε + c < dim_flag + dim_p_ss`,
///   so `g(ε) = Υ(ε) + Υ(ε+c)` is **nondecreasing** in `ε` on the whole
///   search range. Condition (b) is therefore monotone in `N`, and the
///   pointwise-minimal exponent is the uniform one.
/// * `g(0) = Υ(c) < max Υ` strictly (the polygon increases strictly up to
///   `dim_flag` and `c < dim_flag`), so the threshold
///   `u = min{ε : g(ε) ≥ max Υ}` is positive when it exists. It is found
///   exactly by scanning the finitely many affine segments of `g` (cut at
///   integers and at integers minus `c`) and solving one linear equation.
///   Exponents `N` with `(n−1)/N ≥ u` fail (b); all others in range pass.
///   Hence `N₀ = max(N_a, ⌊(n−1)/u⌋ + 1)`, or `N_a` if `u` exceeds `ε_max`.
///
/// Returns [`N0Result::NoFiniteN`] when `dim_flag = 0` (condition (a) can
/// never hold) or when the semisimplicity inequality fails (then
/// `Υ(c) = max Υ`, so (b) fails at every exponent).
///
/// # Errors
///
/// The problem must be internally consistent: the polygon must match
/// `dim_h` and `h_flag_dim`, `h_p_ss` must equal `dim_h − 2·h_flag_dim`,
/// `h_rank ≤ h_p_ss`, and every slope must be a difference of admissible
/// slopes.
pub fn n0_search(up: &UniformProblem) -> Result<N0Result, Error> {
    validate_uniform(up)?;
    if up.h_flag_dim == 0 {
        return Ok(N0Result::NoFiniteN(N0Failure::FlagDimensionZero));
    }
    if !ss_inequality(up.dim_h, up.h_rank, up.h_p_ss) {
        return Ok(N0Result::NoFiniteN(N0Failure::SsInequalityFails));
    }
    let flag = up.h_flag_dim as u64;
    let n_a = up.n.div_ceil(flag);
    let eps_max = rat(up.n as i64 - 1) / rat(n_a as i64);
    let c = rat((up.h_p_ss - up.h_rank) as i64) / rat(2);
    let max = up.h_polygon.max_value();
    let g = |eps: &Rational| -> Result<Rational, Error> {
        Ok(up.h_polygon.evaluate(eps)? + up.h_polygon.evaluate(&(eps + &c))?)
    };

    // Cut points of g on [0, eps_max]: integer arguments of the first
    // evaluation, plus integers shifted by −c, where the second argument
    // ε + c crosses an integer. Between consecutive cuts g is affine.
    let mut cuts: Vec<Rational> = vec![rat(0), eps_max.clone()];
    let mut k = rat(1);
    while k < eps_max {
        cuts.push(k.clone());
        k += rat(1);
    }
    let mut m = Rational::from_integer(floor_int(&c));
    loop {
        let shifted = &m - &c;
        if shifted >= eps_max {
            break;
        }
        if shifted > rat(0) {
            cuts.push(shifted);
        }
        m += rat(1);
    }
    cuts.sort();
    cuts.dedup();

    debug_assert!(g(&rat(0))? < max, "Υ(c) < max Υ is forced by semisimplicity");

    // First ε where g reaches the maximum, if any in range.
    let mut threshold: Option<Rational> = None;
    let mut prev = cuts[0].clone();
    let mut g_prev = g(&prev)?;
    for cur in cuts.iter().skip(1) {
        let g_cur = g(cur)?;
        if g_cur >= max {
            // g is affine on [prev, cur] with positive slope here.
            let slope = (&g_cur - &g_prev) / (cur - &prev);
            debug_assert!(slope > rat(0));
            threshold = Some(&prev + (&max - &g_prev) / slope);
            break;
        }
        prev = cur.clone();
        g_prev = g_cur;
    }

    let n0 = match threshold {
        None => n_a,
        Some(u) => {
            debug_assert!(u > rat(0));
            let ratio = rat(up.n as i64 - 1) / &u;
            let hi = floor_int(&ratio)
                .to_u64()
                .ok_or_else(|| Error::TooLarge("threshold exponent overflows u64".into()))?;
            n_a.max(hi + 1)
        }
    };
    Ok(N0Result::Finite(n0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::{parabolic_stats, ApartmentPoint};
    use crate::polygon::adjoint_polygon;
    use crate::root_data::{build_root_datum, GroupFamily, RootDatum};

    fn datum(s: &str) -> RootDatum {
        build_root_datum(GroupFamily::parse(s).unwrap()).unwrap()
    }

    fn point(d: &RootDatum, entries: &[i64]) -> ApartmentPoint {
        ApartmentPoint::new(d, entries.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    /// The uniform problem of (H, y) with admissible slopes taken from the
    /// point's entries (closed under negation, with zero).
    fn uniform(d: &RootDatum, x: &ApartmentPoint, n: u64) -> UniformProblem {
        let stats = parabolic_stats(d, x).unwrap();
        let mut allowed: Vec<Rational> = vec![rat(0)];
        for v in x.entries() {
            allowed.push(v.clone());
            allowed.push(-v.clone());
        }
        UniformProblem {
            slopes_allowed: allowed,
            n,
            dim_h: d.dim_group(),
            h_polygon: adjoint_polygon(d, x).unwrap(),
            h_flag_dim: stats.dim_flag,
            h_p_ss: stats.dim_p_ss,
            h_rank: stats.rank,
        }
    }

    #[test]
    fn gl2_thresholds() {
        let d = datum("gl:2");
        let y = point(&d, &[1, 0]);
        // Frozen values: N₀ = 1, 3, 5, 7 for n = 1..4.
        for (n, expected) in [(1u64, 1u64), (2, 3), (3, 5), (4, 7)] {
            let up = uniform(&d, &y, n);
            assert_eq!(
                n0_search(&up).unwrap(),
                N0Result::Finite(expected),
                "n = {n}"
            );
        }
    }

    #[test]
    fn thresholds_verify_and_fail_below() {
        let d = datum("gsp:4");
        let y = point(&d, &[2, 1]);
        for n in 1..=12u64 {
            let up = uniform(&d, &y, n);
            match n0_search(&up).unwrap() {
                N0Result::Finite(n0) => {
                    let (a, b) = uniform_conditions_at(&up, n0).unwrap();
                    assert!(a && b, "conditions must hold at N₀ = {n0} (n = {n})");
                    if n0 > 1 {
                        let (a, b) = uniform_conditions_at(&up, n0 - 1).unwrap();
                        assert!(!(a && b), "N₀ − 1 must fail (n = {n})");
                    }
                }
                N0Result::NoFiniteN(reason) => panic!("expected finite N₀, got {reason}"),
            }
        }
    }

    #[test]
    fn central_point_has_no_threshold() {
        let d = datum("gl:3");
        let y = point(&d, &[2, 2, 2]);
        let up = uniform(&d, &y, 1);
        assert_eq!(
            n0_search(&up).unwrap(),
            N0Result::NoFiniteN(N0Failure::FlagDimensionZero)
        );
    }

    #[test]
    fn ss_failure_has_no_threshold() {
        // GL(4) at (1,1,0,0): dim_p_ss = 4 + 4 = 8, dim = 16, rank = 4:
        // 2·8 = 16 < 16 + 4 holds — pick a flatter point instead.
        // GL(5) at (1,0,0,0,0): p_ss = 5 + 12 = 17, 2·17 = 34 > 25 + 5.
        let d = datum("gl:5");
        let y = point(&d, &[1, 0, 0, 0, 0]);
        let stats = parabolic_stats(&d, &y).unwrap();
        assert!(!ss_inequality(d.dim_group(), stats.rank, stats.dim_p_ss));
        let up = uniform(&d, &y, 3);
        assert_eq!(
            n0_search(&up).unwrap(),
            N0Result::NoFiniteN(N0Failure::SsInequalityFails)
        );
    }

    #[test]
    fn theorem_inequalities_gl2_power() {
        // H = GL(2) at (1,0), target n = 3: the 5-fold power satisfies the
        // inequalities, the 4-fold power does not.
        let d = datum("gl:2");
        let y = point(&d, &[1, 0]);
        let stats = parabolic_stats(&d, &y).unwrap();
        let poly = adjoint_polygon(&d, &y).unwrap();
        let make = |n_exp: usize| BoundProblem {
            polygon: poly.power(n_exp as u64),
            dim_flag_bar: n_exp * stats.dim_flag,
            dim_p_ss_bar: n_exp * stats.dim_p_ss,
            rank_bar: n_exp * stats.rank,
            n: 3,
            dim_centralizer: 0,
        };
        assert!(theorem_inequalities(&make(5)).unwrap());
        assert!(!theorem_inequalities(&make(4)).unwrap());
        assert_eq!(codim_conclusion(&make(5)).unwrap(), 3);
        assert!(codim_conclusion(&make(4)).is_err());
    }

    #[test]
    fn codim_conclusion_can_be_nonpositive() {
        let d = datum("gl:2");
        let y = point(&d, &[1, 0]);
        let stats = parabolic_stats(&d, &y).unwrap();
        let problem = BoundProblem {
            polygon: adjoint_polygon(&d, &y).unwrap().power(5),
            dim_flag_bar: 5 * stats.dim_flag,
            dim_p_ss_bar: 5 * stats.dim_p_ss,
            rank_bar: 5 * stats.rank,
            n: 3,
            dim_centralizer: 7,
        };
        assert_eq!(codim_conclusion(&problem).unwrap(), -4);
    }

    #[test]
    fn validation_rejects_inconsistent_problems() {
        let d = datum("gl:2");
        let y = point(&d, &[1, 0]);
        let mut up = uniform(&d, &y, 2);
        up.h_flag_dim = 2; // polygon has exactly 1 positive slope
        assert!(n0_search(&up).is_err());

        let mut up2 = uniform(&d, &y, 2);
        up2.slopes_allowed = vec![rat(0)]; // slope 1 is not a difference
        assert!(n0_search(&up2).is_err());

        let mut up3 = uniform(&d, &y, 2);
        up3.n = 0;
        assert!(n0_search(&up3).is_err());

        let mut up4 = uniform(&d, &y, 2);
        up4.h_p_ss = 1;
        assert!(n0_search(&up4).is_err());
    }

    #[test]
    fn default_bound_and_ss() {
        assert_eq!(default_centralizer_bound(11), 11);
        assert!(ss_inequality(4, 2, 2));
        assert!(!ss_inequality(4, 2, 3));
    }
}
