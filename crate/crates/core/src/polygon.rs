//! Concave slope polygons, in particular the adjoint polygon of a point.
//!
//! A nonincreasing multiset of rational slopes `s_1 ≥ … ≥ s_d` defines the
//! concave piecewise-linear function on `[0, d]` with `Υ(0) = 0` and slope
//! `s_k` on `[k−1, k]`. The *adjoint polygon* `Υ_{G,x}` of an apartment
//! point `x` is the instance whose slopes are the pairings `⟨x, χ⟩` over all
//! roots `χ` together with `dim_torus` zeros — the slopes of `ad x` acting
//! on `Lie G`.
//!
//! Standing facts (all tested): `Υ` is concave; `Υ(d) = 0` and
//! `Υ(t) = Υ(d − t)` for the adjoint polygon (roots come in opposite
//! pairs); `Υ_{c·x} = c·Υ_x` for `c ≥ 0`; `Υ` is invariant under the Weyl
//! action on `x`; and `Υ` is nondecreasing on `[0, dim_rad_p]`, constant on
//! `[dim_rad_p, dim_p]`, and nonincreasing after, where the breakpoints are
//! the statistics of the parabolic `P_x`. The maximum equals the sum of the
//! positive slopes, attained at `t = dim_rad_p`.

use num::ToPrimitive;

use crate::building::{ApartmentPoint, Filtration};
use crate::error::Error;
use crate::rat::{floor_int, rat, Rational};
use crate::root_data::{pairing, RootDatum};

/// A concave piecewise-linear function on `[0, d]` recorded by its
/// nonincreasing slope multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointPolygon {
    /// Nonincreasing.
    slopes: Vec<Rational>,
    /// `prefix[k] = s_1 + … + s_k`; the polygon's values at integers.
    prefix: Vec<Rational>,
}

impl AdjointPolygon {
    /// Builds the polygon of a slope multiset (sorted internally).
    pub fn from_slopes(mut slopes: Vec<Rational>) -> Self {
        slopes.sort_by(|a, b| b.cmp(a));
        let mut prefix = Vec::with_capacity(slopes.len() + 1);
        let mut acc = rat(0);
        prefix.push(acc.clone());
        for s in &slopes {
            acc += s;
            prefix.push(acc.clone());
        }
        AdjointPolygon { slopes, prefix }
    }

    /// The slopes, nonincreasing.
    pub fn slopes(&self) -> &[Rational] {
        &self.slopes
    }

    /// The length of the domain `[0, dim]`.
    pub fn dim(&self) -> usize {
        self.slopes.len()
    }

    /// Number of strictly positive slopes (where the maximum is attained).
    pub fn n_positive_slopes(&self) -> usize {
        let zero = rat(0);
        self.slopes.iter().filter(|s| **s > zero).count()
    }

    /// The values `Υ(0), Υ(1), …, Υ(dim)`.
    pub fn integer_values(&self) -> &[Rational] {
        &self.prefix
    }

    /// `Υ(t)` for rational `t`.
    ///
    /// # Errors
    ///
    /// `t` must lie in `[0, dim]`.
    pub fn evaluate(&self, t: &Rational) -> Result<Rational, Error> {
        let dim = rat(self.dim() as i64);
        if *t < rat(0) || *t > dim {
            return Err(Error::OutOfDomain(format!(
                "polygon argument {t} outside [0, {}]",
                self.dim()
            )));
        }
        let k = floor_int(t)
            .to_usize()
            .expect("floor of an in-domain argument fits usize");
        if k == self.dim() {
            return Ok(self.prefix[k].clone());
        }
        let frac = t - rat(k as i64);
        Ok(&self.prefix[k] + &self.slopes[k] * frac)
    }

    /// The maximum value, `Σ_{s > 0} s = Υ(n_positive_slopes)`.
    pub fn max_value(&self) -> Rational {
        self.prefix[self.n_positive_slopes()].clone()
    }

    /// The polygon of the `n`-fold product at the diagonal point: every slope
    /// repeated `n` times. Satisfies `Υ_n(n·t) = n·Υ(t)`.
    pub fn power(&self, n: u64) -> AdjointPolygon {
        let mut slopes = Vec::with_capacity(self.slopes.len() * n as usize);
        for s in &self.slopes {
            for _ in 0..n {
                slopes.push(s.clone());
            }
        }
        AdjointPolygon::from_slopes(slopes)
    }
}

/// The adjoint polygon `Υ_{G,x}`: slopes are the pairings of `x` against all
/// roots, plus `dim_torus` zeros.
///
/// # Errors
///
/// The point must have the right length.
pub fn adjoint_polygon(datum: &RootDatum, x: &ApartmentPoint) -> Result<AdjointPolygon, Error> {
    if x.len() != datum.coords() {
        return Err(Error::DimensionMismatch {
            expected: datum.coords(),
            got: x.len(),
        });
    }
    let mut slopes = Vec::with_capacity(datum.dim_group());
    for chi in datum.roots() {
        slopes.push(pairing(x.entries(), chi)?);
    }
    slopes.extend(std::iter::repeat_n(rat(0), datum.dim_torus()));
    Ok(AdjointPolygon::from_slopes(slopes))
}

/// The polygon of a filtration: slopes are the filtration slopes with their
/// multiplicities. Its value at `dim` is `dim · weight`.
pub fn filtration_polygon(f: &Filtration) -> AdjointPolygon {
    AdjointPolygon::from_slopes(f.expanded_slopes())
}
