//! Standard parabolic subgroups and positivity of points.
//!
//! A subset `S` of the simple roots determines the standard parabolic `Q`
//! whose root set is `Φ_Q = Φ⁺ ∪ {−χ : χ ∈ Φ⁺, supp(χ) ⊆ S}`, where
//! `supp(χ)` is the set of simple roots appearing in `χ`. The character by
//! which `Q` acts on the top exterior power of its unipotent radical
//! restricts to the torus as
//!
//! ```text
//! δ_Q = −Σ_{χ ∈ Φ∖Φ_Q} χ = Σ_{χ ∈ Φ⁺, supp(χ) ⊄ S} χ,
//! ```
//!
//! an integer character. A point `x` is *positive with respect to `Q`* when
//! `⟨x, δ_Q⟩ ≥ 0`. For `GL` with diagonal blocks the pairing has the closed
//! block form `Σ_{i<j} d_i d_j (w_i − w_j)` over block dimensions `d` and
//! block weights `w`, which [`gl_block_positivity`] computes directly.

use std::collections::{BTreeMap, BTreeSet};

use crate::building::{is_dominant, ApartmentPoint};
use crate::error::Error;
use crate::rat::{rat, Rational};
use crate::root_data::{pairing, simple_supports, GroupFamily, RootDatum, RootVector};

/// A standard parabolic subgroup, recorded by its simple-root subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardParabolic {
    family: GroupFamily,
    coords: usize,
    n_simple: usize,
    subset: BTreeSet<usize>,
    phi_q: BTreeSet<RootVector>,
    delta: Vec<i64>,
    dim_q: usize,
    dim_rad_q: usize,
}

impl StandardParabolic {
    /// The defining subset of simple-root indices.
    pub fn simple_subset(&self) -> &BTreeSet<usize> {
        &self.subset
    }

    /// Membership in `Φ_Q`.
    pub fn contains_root(&self, chi: &RootVector) -> bool {
        self.phi_q.contains(chi)
    }

    /// `δ_Q` restricted to the torus, as an integer character.
    pub fn delta(&self) -> &[i64] {
        &self.delta
    }

    pub fn dim_q(&self) -> usize {
        self.dim_q
    }

    /// Dimension of the unipotent radical of `Q`.
    pub fn dim_rad_q(&self) -> usize {
        self.dim_rad_q
    }

    /// True for the Borel (empty subset).
    pub fn is_borel(&self) -> bool {
        self.subset.is_empty()
    }

    /// True for the full group (all simple roots).
    pub fn is_full(&self) -> bool {
        self.subset.len() == self.n_simple
    }

    /// Checks that this parabolic was built for `datum`.
    pub fn check_datum(&self, datum: &RootDatum) -> Result<(), Error> {
        if self.family != datum.family() || self.coords != datum.coords() {
            return Err(Error::invalid(format!(
                "parabolic was built for {}, not {}",
                self.family,
                datum.family()
            )));
        }
        Ok(())
    }
}

/// Builds the standard parabolic for a subset of simple-root indices
/// (0-based).
///
/// # Errors
///
/// Every index must name a simple root of the datum.
pub fn standard_parabolic(
    datum: &RootDatum,
    subset: &BTreeSet<usize>,
) -> Result<StandardParabolic, Error> {
    let n_simple = datum.simple_roots().len();
    if let Some(&bad) = subset.iter().find(|&&i| i >= n_simple) {
        return Err(Error::invalid(format!(
            "simple-root index {bad} out of range: {} has {n_simple} simple roots",
            datum.family()
        )));
    }
    let supports: BTreeMap<RootVector, BTreeSet<usize>> = simple_supports(datum);
    let mut phi_q: BTreeSet<RootVector> = datum.positive_roots().iter().cloned().collect();
    let mut delta = vec![0i64; datum.coords()];
    let mut dim_rad_q = 0usize;
    for chi in datum.positive_roots() {
        if supports[chi].is_subset(subset) {
            phi_q.insert(chi.negate());
        } else {
            dim_rad_q += 1;
            for (d, c) in delta.iter_mut().zip(chi.entries()) {
                *d += c;
            }
        }
    }
    let dim_q = datum.dim_torus() + phi_q.len();
    debug_assert_eq!(dim_q + dim_rad_q, datum.dim_group());
    Ok(StandardParabolic {
        family: datum.family(),
        coords: datum.coords(),
        n_simple,
        subset: subset.clone(),
        phi_q,
        delta,
        dim_q,
        dim_rad_q,
    })
}

/// The standard parabolic `P_x` attached to a dominant point: its subset is
/// the set of simple roots pairing to zero with `x`.
///
/// # Errors
///
/// The point must be dominant (and the right length).
pub fn standard_parabolic_of_point(
    datum: &RootDatum,
    x: &ApartmentPoint,
) -> Result<StandardParabolic, Error> {
    if !is_dominant(datum, x)? {
        return Err(Error::NotDominant(format!(
            "standard_parabolic_of_point needs a dominant point, got {:?}",
            x.entries()
        )));
    }
    let zero = rat(0);
    let mut subset = BTreeSet::new();
    for (i, alpha) in datum.simple_roots().iter().enumerate() {
        if pairing(x.entries(), alpha)? == zero {
            subset.insert(i);
        }
    }
    standard_parabolic(datum, &subset)
}

/// `⟨x, δ_Q⟩`, the positivity number of `x` with respect to `Q`.
///
/// # Errors
///
/// The parabolic must belong to the datum and the point have the right
/// length.
pub fn positivity_pairing(
    datum: &RootDatum,
    q: &StandardParabolic,
    x: &ApartmentPoint,
) -> Result<Rational, Error> {
    q.check_datum(datum)?;
    if x.len() != datum.coords() {
        return Err(Error::DimensionMismatch {
            expected: datum.coords(),
            got: x.len(),
        });
    }
    let mut acc = rat(0);
    for (xi, &di) in x.entries().iter().zip(q.delta()) {
        if di != 0 {
            acc += xi * rat(di);
        }
    }
    Ok(acc)
}

/// True when `⟨x, δ_Q⟩ ≥ 0`.
///
/// # Errors
///
/// Same conditions as [`positivity_pairing`].
pub fn is_positive(
    datum: &RootDatum,
    q: &StandardParabolic,
    x: &ApartmentPoint,
) -> Result<bool, Error> {
    Ok(positivity_pairing(datum, q, x)? >= rat(0))
}

/// The `GL` block form of the positivity pairing: for consecutive diagonal
/// blocks of dimensions `d_i` with weights `w_i`,
/// `Σ_{i<j} d_i d_j (w_i − w_j)`.
///
/// When the block weights are the averages of `x` over the blocks of the
/// standard parabolic `Q`, this equals `⟨x, δ_Q⟩` (the identity is linear in
/// `x`, so it holds for arbitrary points, not just block-constant ones).
///
/// # Errors
///
/// The two slices must have equal nonzero length and positive dimensions.
pub fn gl_block_positivity(
    block_dims: &[u64],
    block_weights: &[Rational],
) -> Result<Rational, Error> {
    if block_dims.len() != block_weights.len() || block_dims.is_empty() {
        return Err(Error::invalid(
            "block dimensions and weights must be matching nonempty lists",
        ));
    }
    if block_dims.contains(&0) {
        return Err(Error::invalid("block dimensions must be positive"));
    }
    let mut acc = rat(0);
    for i in 0..block_dims.len() {
        for j in (i + 1)..block_dims.len() {
            let dd = rat((block_dims[i] * block_dims[j]) as i64);
            acc += dd * (&block_weights[i] - &block_weights[j]);
        }
    }
    Ok(acc)
}

/// Positivity number of a product: the sum over the factors.
pub fn product_positivity(values: &[Rational]) -> Rational {
    let mut acc = rat(0);
    for v in values {
        acc += v;
    }
    acc
}

/// Positivity number after restriction along a degree-`d` cover: the pairing
/// scales by the degree.
///
/// # Errors
///
/// The degree must be at least 1.
pub fn restriction_positivity(value: &Rational, degree: u64) -> Result<Rational, Error> {
    if degree == 0 {
        return Err(Error::invalid("restriction degree must be at least 1"));
    }
    Ok(value * rat(degree as i64))
}

/// Converts a `GL` block composition (block sizes summing to `e`) into the
/// simple-root subset of the corresponding standard parabolic: all simple
/// roots except those at the block boundaries.
///
/// # Errors
///
/// Requires the `GL` family, positive block sizes summing to `e`.
pub fn gl_blocks_subset(datum: &RootDatum, blocks: &[u64]) -> Result<BTreeSet<usize>, Error> {
    let e = match datum.family() {
        GroupFamily::Gl(e) => e as u64,
        other => {
            return Err(Error::invalid(format!(
                "block compositions describe GL parabolics, got {other}"
            )))
        }
    };
    if blocks.is_empty() || blocks.contains(&0) {
        return Err(Error::invalid("block sizes must be positive"));
    }
    let total: u64 = blocks.iter().sum();
    if total != e {
        return Err(Error::invalid(format!(
            "block sizes sum to {total}, expected {e}"
        )));
    }
    let mut subset: BTreeSet<usize> = (0..(e as usize).saturating_sub(1)).collect();
    let mut boundary = 0u64;
    for &b in &blocks[..blocks.len() - 1] {
        boundary += b;
        subset.remove(&(boundary as usize - 1));
    }
    Ok(subset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::parabolic_stats;
    use crate::root_data::build_root_datum;

    fn datum(s: &str) -> RootDatum {
        build_root_datum(GroupFamily::parse(s).unwrap()).unwrap()
    }

    fn point(d: &RootDatum, entries: &[i64]) -> ApartmentPoint {
        ApartmentPoint::new(d, entries.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    fn parabolic(d: &RootDatum, subset: &[usize]) -> StandardParabolic {
        standard_parabolic(d, &subset.iter().copied().collect()).unwrap()
    }

    #[test]
    fn gl3_delta_examples() {
        let d = datum("gl:3");
        assert_eq!(parabolic(&d, &[]).delta(), &[2, 0, -2]);
        assert_eq!(parabolic(&d, &[0]).delta(), &[1, 1, -2]);
        assert_eq!(parabolic(&d, &[1]).delta(), &[2, -1, -1]);
        let full = parabolic(&d, &[0, 1]);
        assert_eq!(full.delta(), &[0, 0, 0]);
        assert_eq!(full.dim_q(), d.dim_group());
        assert_eq!(full.dim_rad_q(), 0);
        assert!(full.is_full());
        assert!(parabolic(&d, &[]).is_borel());
    }

    #[test]
    fn gl3_block_parabolic_pairing() {
        let d = datum("gl:3");
        // Subset {1} is the (1,2) block parabolic.
        let q = parabolic(&d, &[1]);
        assert_eq!(q.dim_rad_q(), 2);
        let x = point(&d, &[1, 0, 0]);
        let value = positivity_pairing(&d, &q, &x).unwrap();
        assert_eq!(value, rat(2));
        // Block form with the same data: dims (1,2), weights (1, 0).
        let block = gl_block_positivity(&[1, 2], &[rat(1), rat(0)]).unwrap();
        assert_eq!(block, rat(2));
        assert!(is_positive(&d, &q, &x).unwrap());
    }

    #[test]
    fn gl2_borel_negative_case() {
        let d = datum("gl:2");
        let q = parabolic(&d, &[]);
        assert_eq!(q.delta(), &[1, -1]);
        let x = point(&d, &[0, 1]);
        assert_eq!(positivity_pairing(&d, &q, &x).unwrap(), rat(-1));
        assert!(!is_positive(&d, &q, &x).unwrap());
    }

    #[test]
    fn gsp4_borel_delta() {
        let d = datum("gsp:4");
        let q = parabolic(&d, &[]);
        // (1,−1) + (1,1) + (2,0) + (0,2) = (4,2).
        assert_eq!(q.delta(), &[4, 2]);
        assert_eq!(
            positivity_pairing(&d, &q, &point(&d, &[1, 1])).unwrap(),
            rat(6)
        );
    }

    #[test]
    fn parabolic_of_dominant_point_matches_stats() {
        let d = datum("gl:3");
        let x = point(&d, &[1, 0, 0]);
        let p = standard_parabolic_of_point(&d, &x).unwrap();
        assert_eq!(p.simple_subset(), &BTreeSet::from([1]));
        let stats = parabolic_stats(&d, &x).unwrap();
        assert_eq!(p.dim_q(), stats.dim_p);
        assert_eq!(p.dim_rad_q(), stats.dim_rad_p);

        assert!(standard_parabolic_of_point(&d, &point(&d, &[0, 1, 0])).is_err());
    }

    #[test]
    fn blocks_to_subsets() {
        let d = datum("gl:3");
        assert_eq!(
            gl_blocks_subset(&d, &[1, 2]).unwrap(),
            BTreeSet::from([1])
        );
        assert_eq!(gl_blocks_subset(&d, &[3]).unwrap(), BTreeSet::from([0, 1]));
        assert_eq!(gl_blocks_subset(&d, &[1, 1, 1]).unwrap(), BTreeSet::new());
        assert!(gl_blocks_subset(&d, &[1, 1]).is_err());
        assert!(gl_blocks_subset(&d, &[0, 3]).is_err());
        assert!(gl_blocks_subset(&datum("gsp:4"), &[2]).is_err());
    }

    #[test]
    fn product_and_restriction() {
        assert_eq!(
            product_positivity(&[rat(1), rat(-2), rat(3)]),
            rat(2)
        );
        assert_eq!(restriction_positivity(&rat(3), 2).unwrap(), rat(6));
        assert!(restriction_positivity(&rat(3), 0).is_err());
    }

    #[test]
    fn rejects_cross_datum_use() {
        let d3 = datum("gl:3");
        let d2 = datum("gl:2");
        let q2 = parabolic(&d2, &[]);
        assert!(positivity_pairing(&d3, &q2, &point(&d3, &[1, 0, 0])).is_err());
        assert!(standard_parabolic(&d2, &BTreeSet::from([5])).is_err());
    }
}
