//! Rational points of the standard apartment and their parabolic statistics.
//!
//! A point of the standard apartment is a rational vector on the semisimple
//! torus coordinates. Every point defines a filtration of the standard
//! representation (for `GL`) and a parabolic subgroup `P_x`, whose dimension
//! statistics are computed here by counting the signs of the pairings
//! `⟨x, χ⟩` over all roots `χ`:
//!
//! * `dim_rad_p` — roots with `⟨x, χ⟩ > 0` (the unipotent radical of `P_x`);
//! * `dim_p_ss` — torus plus roots with `⟨x, χ⟩ = 0` (the Levi of `P_x`);
//! * `dim_flag` — roots with `⟨x, χ⟩ < 0` (the codimension of `P_x`, i.e.
//!   the dimension of the flag variety `G/P_x`).
//!
//! Because roots come in opposite pairs, `dim_flag = dim_rad_p` always.
//!
//! [`dominant_representative`] moves any point into the closed dominant
//! chamber by a deterministic signed permutation: entries are stable-sorted,
//! sign flips are applied before the permutation, and ties are broken so the
//! witness is canonical.

use num::{Signed, Zero};

use crate::error::Error;
use crate::rat::{rat, Rational};
use crate::root_data::{pairing, GroupFamily, RootDatum, WeylElement};

/// A rational point of the standard apartment, written on the semisimple
/// torus coordinates of a fixed datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApartmentPoint {
    entries: Vec<Rational>,
}

impl ApartmentPoint {
    /// # Errors
    ///
    /// The vector must have exactly `datum.coords()` entries.
    pub fn new(datum: &RootDatum, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != datum.coords() {
            return Err(Error::DimensionMismatch {
                expected: datum.coords(),
                got: entries.len(),
            });
        }
        Ok(ApartmentPoint { entries })
    }

    pub fn zero(datum: &RootDatum) -> Self {
        ApartmentPoint {
            entries: vec![rat(0); datum.coords()],
        }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ApartmentPoint {
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }
}

/// Applies a validated Weyl element to a point.
///
/// # Errors
///
/// The element must be legal for the datum and the point the right length.
pub fn apply_weyl_point(
    datum: &RootDatum,
    w: &WeylElement,
    x: &ApartmentPoint,
) -> Result<ApartmentPoint, Error> {
    datum.validate_weyl(w)?;
    if x.len() != datum.coords() {
        return Err(Error::DimensionMismatch {
            expected: datum.coords(),
            got: x.len(),
        });
    }
    Ok(ApartmentPoint {
        entries: w.apply(x.entries()),
    })
}

/// True if `⟨x, α⟩ ≥ 0` for every simple root `α` (the closed dominant
/// chamber).
///
/// # Errors
///
/// The point must have the right length.
pub fn is_dominant(datum: &RootDatum, x: &ApartmentPoint) -> Result<bool, Error> {
    if x.len() != datum.coords() {
        return Err(Error::DimensionMismatch {
            expected: datum.coords(),
            got: x.len(),
        });
    }
    for alpha in datum.simple_roots() {
        if pairing(x.entries(), alpha)? < rat(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Indices `0..n` stable-sorted so the keyed values are nonincreasing.
fn argsort_desc(keys: &[Rational]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    // Vec::sort_by is stable, so ties keep their original (ascending) order.
    idx.sort_by(|&a, &b| keys[b].cmp(&keys[a]));
    idx
}

/// Moves a point into the closed dominant chamber, returning the dominant
/// point and a Weyl element `w` with `w · x` dominant.
///
/// The witness is deterministic: entries are stable-sorted by (absolute)
/// value, and sign flips are applied at source coordinates before the
/// permutation. For even `GO`, where only an even number of flips is legal,
/// a leftover flip is parked on the last zero coordinate when one exists and
/// otherwise on the coordinate of smallest absolute value that sorts last —
/// leaving the final chamber coordinate negative, as the `D`-chamber
/// `λ_1 ≥ … ≥ λ_{n−1} ≥ |λ_n|` requires.
///
/// # Errors
///
/// The point must have the right length.
pub fn dominant_representative(
    datum: &RootDatum,
    x: &ApartmentPoint,
) -> Result<(ApartmentPoint, WeylElement), Error> {
    if x.len() != datum.coords() {
        return Err(Error::DimensionMismatch {
            expected: datum.coords(),
            got: x.len(),
        });
    }
    let n = datum.coords();
    let entries = x.entries();
    let (perm, signs) = match datum.family() {
        GroupFamily::Gl(_) => (argsort_desc(entries), vec![1i8; n]),
        GroupFamily::Gsp(_) | GroupFamily::Go(_) => {
            let mut signs: Vec<i8> = entries
                .iter()
                .map(|v| if v.is_negative() { -1 } else { 1 })
                .collect();
            let abs: Vec<Rational> = entries.iter().map(|v| v.abs()).collect();
            let perm = argsort_desc(&abs);
            let even_go = matches!(datum.family(), GroupFamily::Go(e) if e % 2 == 0);
            if even_go && signs.iter().filter(|&&s| s == -1).count() % 2 == 1 {
                if let Some(z) = entries.iter().rposition(|v| v.is_zero()) {
                    signs[z] = -1;
                } else {
                    let s = perm[n - 1];
                    signs[s] = if entries[s].is_positive() { -1 } else { 1 };
                }
            }
            (perm, signs)
        }
    };
    let w = WeylElement::new(perm, signs).expect("constructed permutation is valid");
    datum
        .validate_weyl(&w)
        .expect("constructed witness is legal for the family");
    let moved = apply_weyl_point(datum, &w, x)?;
    debug_assert!(is_dominant(datum, &moved)?);
    Ok((moved, w))
}

/// A decreasing filtration recorded by its jumps: strictly decreasing slopes
/// with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    steps: Vec<(Rational, u64)>,
}

impl Filtration {
    /// # Errors
    ///
    /// Steps must be nonempty, slopes strictly decreasing, multiplicities
    /// at least 1.
    pub fn new(steps: Vec<(Rational, u64)>) -> Result<Self, Error> {
        if steps.is_empty() {
            return Err(Error::invalid("a filtration needs at least one step"));
        }
        for pair in steps.windows(2) {
            if pair[0].0 <= pair[1].0 {
                return Err(Error::invalid(
                    "filtration slopes must be strictly decreasing",
                ));
            }
        }
        if steps.iter().any(|&(_, m)| m == 0) {
            return Err(Error::invalid("filtration multiplicities must be positive"));
        }
        Ok(Filtration { steps })
    }

    /// `(slope, multiplicity)` pairs, slopes strictly decreasing.
    pub fn steps(&self) -> &[(Rational, u64)] {
        &self.steps
    }

    /// Total dimension `Σ multiplicities`.
    pub fn dim(&self) -> u64 {
        self.steps.iter().map(|&(_, m)| m).sum()
    }

    /// All slopes expanded with multiplicity, nonincreasing.
    pub fn expanded_slopes(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for (slope, mult) in &self.steps {
            for _ in 0..*mult {
                out.push(slope.clone());
            }
        }
        out
    }
}

/// The filtration of the standard representation defined by a point: for
/// `GL(e)`, slope `α` appears with multiplicity `#{i : x_i = α}`.
///
/// # Errors
///
/// Only the `GL` family has a slope filtration on the standard
/// representation in these coordinates; other families are rejected.
pub fn filtration_of_point(datum: &RootDatum, x: &ApartmentPoint) -> Result<Filtration, Error> {
    if !matches!(datum.family(), GroupFamily::Gl(_)) {
        return Err(Error::invalid(format!(
            "filtration_of_point requires the GL family, got {}",
            datum.family()
        )));
    }
    if x.len() != datum.coords() {
        return Err(Error::DimensionMismatch {
            expected: datum.coords(),
            got: x.len(),
        });
    }
    let mut sorted = x.entries().to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let mut steps: Vec<(Rational, u64)> = Vec::new();
    for v in sorted {
        match steps.last_mut() {
            Some((slope, mult)) if *slope == v => *mult += 1,
            _ => steps.push((v, 1)),
        }
    }
    Filtration::new(steps)
}

/// Average slope `Σ α·mult / Σ mult`.
pub fn weight(f: &Filtration) -> Rational {
    let mut total = rat(0);
    for (slope, mult) in f.steps() {
        total += slope * rat(*mult as i64);
    }
    total / rat(f.dim() as i64)
}

/// True if the filtration equals its dual with respect to twist `c`: slopes
/// `c − α` in reverse order, with matching multiplicities.
pub fn is_self_dual(f: &Filtration, c: &Rational) -> bool {
    let steps = f.steps();
    let k = steps.len();
    (0..k).all(|i| {
        let (ref slope, mult) = steps[i];
        let (ref dual_slope, dual_mult) = steps[k - 1 - i];
        *slope == c - dual_slope && mult == dual_mult
    })
}

/// Dimension statistics of the parabolic `P_x` attached to a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParabolicStats {
    /// `dim P_x = dim_p_ss + dim_rad_p`.
    pub dim_p: usize,
    /// Levi dimension: torus plus roots pairing to zero.
    pub dim_p_ss: usize,
    /// Unipotent radical: roots pairing strictly positively.
    pub dim_rad_p: usize,
    /// Flag-variety dimension `dim G/P_x`: roots pairing strictly negatively.
    pub dim_flag: usize,
    /// Rank of the ambient group.
    pub rank: usize,
}

/// Counts the sign of `⟨x, χ⟩` over all roots.
///
/// The statistics satisfy `dim_flag = dim G − dim P_x`,
/// `2·dim_rad_p = dim G − dim_p_ss`, and (roots coming in `±` pairs)
/// `dim_flag = dim_rad_p`. They are invariant under the Weyl action on `x`
/// and under scaling `x` by a positive rational.
///
/// # Errors
///
/// The point must have the right length.
pub fn parabolic_stats(datum: &RootDatum, x: &ApartmentPoint) -> Result<ParabolicStats, Error> {
    if x.len() != datum.coords() {
        return Err(Error::DimensionMismatch {
            expected: datum.coords(),
            got: x.len(),
        });
    }
    let zero = rat(0);
    let mut positive = 0usize;
    let mut negative = 0usize;
    let mut null = 0usize;
    for chi in datum.roots() {
        let v = pairing(x.entries(), chi)?;
        if v > zero {
            positive += 1;
        } else if v < zero {
            negative += 1;
        } else {
            null += 1;
        }
    }
    let dim_p_ss = datum.dim_torus() + null;
    let stats = ParabolicStats {
        dim_p: dim_p_ss + positive,
        dim_p_ss,
        dim_rad_p: positive,
        dim_flag: negative,
        rank: datum.rank(),
    };
    debug_assert_eq!(stats.dim_flag, datum.dim_group() - stats.dim_p);
    debug_assert_eq!(2 * stats.dim_rad_p, datum.dim_group() - stats.dim_p_ss);
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;
    use crate::root_data::build_root_datum;

    fn datum(s: &str) -> RootDatum {
        build_root_datum(GroupFamily::parse(s).unwrap()).unwrap()
    }

    fn point(d: &RootDatum, entries: &[i64]) -> ApartmentPoint {
        ApartmentPoint::new(d, entries.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    #[test]
    fn gl3_stats_example() {
        let d = datum("gl:3");
        let x = point(&d, &[1, 0, 0]);
        let s = parabolic_stats(&d, &x).unwrap();
        assert_eq!(s.dim_rad_p, 2);
        assert_eq!(s.dim_p_ss, 5);
        assert_eq!(s.dim_p, 7);
        assert_eq!(s.dim_flag, 2);
        assert_eq!(s.rank, 3);
    }

    #[test]
    fn gsp4_stats_example() {
        let d = datum("gsp:4");
        let x = point(&d, &[1, 1]);
        let s = parabolic_stats(&d, &x).unwrap();
        assert_eq!(s.dim_rad_p, 3);
        assert_eq!(s.dim_p_ss, 5);
        assert_eq!(s.dim_flag, 3);
        assert_eq!(s.dim_p, 8);
    }

    #[test]
    fn zero_point_gives_the_whole_group() {
        for name in ["gl:4", "gsp:6", "go:5", "go:6"] {
            let d = datum(name);
            let s = parabolic_stats(&d, &ApartmentPoint::zero(&d)).unwrap();
            assert_eq!(s.dim_p, d.dim_group(), "{name}");
            assert_eq!(s.dim_flag, 0);
            assert_eq!(s.dim_rad_p, 0);
        }
    }

    #[test]
    fn dominance_checks() {
        let d = datum("gl:3");
        assert!(is_dominant(&d, &point(&d, &[2, 1, 1])).unwrap());
        assert!(!is_dominant(&d, &point(&d, &[0, 1, 0])).unwrap());

        let go4 = datum("go:4");
        // D-chamber allows a negative last coordinate up to absolute value.
        assert!(is_dominant(&go4, &point(&go4, &[2, -1])).unwrap());
        assert!(!is_dominant(&go4, &point(&go4, &[1, -2])).unwrap());

        let gsp4 = datum("gsp:4");
        assert!(!is_dominant(&gsp4, &point(&gsp4, &[2, -1])).unwrap());
    }

    #[test]
    fn dominant_representative_gl() {
        let d = datum("gl:3");
        let x = point(&d, &[0, 1, 0]);
        let (xd, w) = dominant_representative(&d, &x).unwrap();
        assert_eq!(xd, point(&d, &[1, 0, 0]));
        // Stable sort: the transposition (0 1), fixing the trailing zero.
        assert_eq!(w.perm(), &[1, 0, 2]);
        assert_eq!(w.signs(), &[1, 1, 1]);
    }

    #[test]
    fn dominant_representative_gsp() {
        let d = datum("gsp:4");
        let x = point(&d, &[-1, 2]);
        let (xd, w) = dominant_representative(&d, &x).unwrap();
        assert_eq!(xd, point(&d, &[2, 1]));
        assert_eq!(w.perm(), &[1, 0]);
        assert_eq!(w.signs(), &[-1, 1]);
    }

    #[test]
    fn dominant_representative_go_even_parity() {
        let d = datum("go:4");

        // Even number of negatives: plain flip-and-sort.
        let (xd, _) = dominant_representative(&d, &point(&d, &[-1, -2])).unwrap();
        assert_eq!(xd, point(&d, &[2, 1]));

        // Odd negatives, no zeros: the smallest entry stays negative.
        let (xd, w) = dominant_representative(&d, &point(&d, &[1, -2])).unwrap();
        assert_eq!(xd, point(&d, &[2, -1]));
        assert!(d.validate_weyl(&w).is_ok());

        // Odd negatives with a zero: the flip is parked on the zero.
        let (xd, w) = dominant_representative(&d, &point(&d, &[0, -3])).unwrap();
        assert_eq!(xd, point(&d, &[3, 0]));
        assert!(d.validate_weyl(&w).is_ok());
    }

    #[test]
    fn filtration_and_weight() {
        let d = datum("gl:3");
        let x = point(&d, &[1, 1, 0]);
        let f = filtration_of_point(&d, &x).unwrap();
        assert_eq!(f.steps(), &[(rat(1), 2), (rat(0), 1)]);
        assert_eq!(f.dim(), 3);
        assert_eq!(weight(&f), ratio(2, 3));

        let gsp = datum("gsp:4");
        assert!(filtration_of_point(&gsp, &point(&gsp, &[1, 0])).is_err());
    }

    #[test]
    fn self_duality() {
        let f = Filtration::new(vec![(rat(1), 2), (rat(0), 2)]).unwrap();
        assert!(is_self_dual(&f, &rat(1)));
        assert!(!is_self_dual(&f, &rat(2)));

        let g = Filtration::new(vec![(rat(2), 1), (rat(1), 3), (rat(0), 1)]).unwrap();
        assert!(is_self_dual(&g, &rat(2)));

        let h = Filtration::new(vec![(rat(2), 1), (rat(0), 2)]).unwrap();
        assert!(!is_self_dual(&h, &rat(2)));
    }

    #[test]
    fn filtration_validation() {
        assert!(Filtration::new(vec![]).is_err());
        assert!(Filtration::new(vec![(rat(1), 1), (rat(1), 1)]).is_err());
        assert!(Filtration::new(vec![(rat(0), 1), (rat(1), 1)]).is_err());
        assert!(Filtration::new(vec![(rat(1), 0)]).is_err());
    }

    #[test]
    fn length_checks() {
        let d = datum("gl:3");
        assert!(ApartmentPoint::new(&d, vec![rat(1)]).is_err());
        let short = ApartmentPoint::new(&datum("gl:2"), vec![rat(1), rat(0)]).unwrap();
        assert!(parabolic_stats(&d, &short).is_err());
        assert!(is_dominant(&d, &short).is_err());
        assert!(dominant_representative(&d, &short).is_err());
    }
}
