//! Root data of the classical similitude families `GL(e)`, `GSp(e)`, `GO(e)`.
//!
//! Each family is described concretely in coordinates. Roots live on the `n`
//! "semisimple" coordinates of the split maximal torus (`n = e`, `e/2`,
//! `⌊e/2⌋` respectively); the remaining central/similitude directions pair to
//! zero with every root and are tracked only through `dim_torus`. In these
//! coordinates the root systems are the classical ones:
//!
//! * `GL(e)` — type `A_{e−1}`: roots `e_i − e_j` for `i ≠ j`;
//! * `GSp(2n)` — type `C_n`: roots `±e_i ± e_j` (`i < j`) and `±2e_i`;
//! * `GO(2n)` — type `D_n`: roots `±e_i ± e_j` (`i < j`);
//! * `GO(2n+1)` — type `B_n`: roots `±e_i ± e_j` (`i < j`) and `±e_i`.
//!
//! Positive roots are those whose leading nonzero coordinate is positive, and
//! the simple roots follow the standard (Bourbaki) numbering. Weyl groups act
//! by signed permutations of the `n` coordinates: all signs positive for
//! `GL`, arbitrary signs for `GSp` and odd `GO`, and an even number of sign
//! flips for even `GO`.
//!
//! Indices are 0-based throughout.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::error::Error;
use crate::rat::Rational;

/// Soft limit on the number of Weyl elements [`weyl_elements`] will agree to
/// enumerate. The exact algorithms in this crate are meant for desk-scale
/// groups; this keeps an accidental `gl:30` from running forever.
pub const WEYL_ENUMERATION_LIMIT: u128 = 10_000_000;

/// One of the three classical similitude families, with its size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupFamily {
    /// `GL(e)`, `e ≥ 1`.
    Gl(u32),
    /// `GSp(e)`, `e ≥ 2` even.
    Gsp(u32),
    /// `GO(e)`, `e ≥ 1`.
    Go(u32),
}

impl GroupFamily {
    /// The size parameter `e` (the dimension of the standard representation).
    pub fn e(&self) -> u32 {
        match *self {
            GroupFamily::Gl(e) | GroupFamily::Gsp(e) | GroupFamily::Go(e) => e,
        }
    }

    /// Number of semisimple torus coordinates the roots live on.
    pub fn coords(&self) -> usize {
        match *self {
            GroupFamily::Gl(e) => e as usize,
            GroupFamily::Gsp(e) => (e / 2) as usize,
            GroupFamily::Go(e) => (e / 2) as usize,
        }
    }

    /// Checks the family's size constraint (`e ≥ 1`; even for `GSp`).
    pub fn validate(&self) -> Result<(), Error> {
        match *self {
            GroupFamily::Gl(e) | GroupFamily::Go(e) if e >= 1 => Ok(()),
            GroupFamily::Gsp(e) if e >= 2 && e % 2 == 0 => Ok(()),
            GroupFamily::Gsp(e) => Err(Error::invalid(format!(
                "gsp:{e} is not a group: e must be even and at least 2"
            ))),
            other => Err(Error::invalid(format!(
                "{other} is not a group: e must be at least 1"
            ))),
        }
    }

    /// Parses the `family:e` form, e.g. `gl:3`, `gsp:4`, `go:7`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let (name, size) = s
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("malformed group `{s}`, expected family:e")))?;
        let e: u32 = size
            .parse()
            .map_err(|_| Error::invalid(format!("malformed group size in `{s}`")))?;
        let family = match name {
            "gl" => GroupFamily::Gl(e),
            "gsp" => GroupFamily::Gsp(e),
            "go" => GroupFamily::Go(e),
            _ => {
                return Err(Error::invalid(format!(
                    "unknown family `{name}`, expected gl, gsp, or go"
                )))
            }
        };
        family.validate()?;
        Ok(family)
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupFamily::Gl(e) => write!(f, "gl:{e}"),
            GroupFamily::Gsp(e) => write!(f, "gsp:{e}"),
            GroupFamily::Go(e) => write!(f, "go:{e}"),
        }
    }
}

/// An integer character of the torus, written on the semisimple coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    entries: Vec<i64>,
}

impl RootVector {
    pub fn new(entries: Vec<i64>) -> Self {
        RootVector { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn negate(&self) -> Self {
        RootVector {
            entries: self.entries.iter().map(|c| -c).collect(),
        }
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.entries.len(), other.entries.len());
        RootVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

/// A signed permutation of the semisimple coordinates.
///
/// The element stores a slot-to-source map `perm` and per-source signs: the
/// action on a coordinate vector `v` is
///
/// ```text
/// (w · v)[j] = signs[perm[j]] · v[perm[j]]
/// ```
///
/// i.e. signs are attached to source coordinates and applied before the
/// entries are moved into their destination slots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    /// Builds an element, checking that `perm` is a permutation of `0..n` and
    /// every sign is `±1`. Family-specific sign rules are checked separately
    /// by [`RootDatum::validate_weyl`].
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self, Error> {
        if perm.len() != signs.len() {
            return Err(Error::invalid(format!(
                "permutation has {} slots but {} signs",
                perm.len(),
                signs.len()
            )));
        }
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::invalid(format!(
                    "`{perm:?}` is not a permutation of 0..{n}"
                )));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::invalid(format!("signs must be ±1, got {signs:?}")));
        }
        Ok(WeylElement { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Applies the signed permutation to a coordinate vector.
    ///
    /// Panics if the length differs; use the datum-level operations for
    /// validated application.
    pub fn apply<T>(&self, v: &[T]) -> Vec<T>
    where
        T: Clone + std::ops::Neg<Output = T>,
    {
        assert_eq!(v.len(), self.perm.len(), "vector length mismatch");
        self.perm
            .iter()
            .map(|&src| {
                if self.signs[src] == 1 {
                    v[src].clone()
                } else {
                    -v[src].clone()
                }
            })
            .collect()
    }

    /// Group law: `(a.compose(b)) · v = a · (b · v)`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing elements of different ranks");
        let n = self.n();
        let mut perm = vec![0usize; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            let mid = self.perm[j];
            let src = other.perm[mid];
            perm[j] = src;
            signs[src] = self.signs[mid] * other.signs[src];
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0usize; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            let src = self.perm[j];
            perm[src] = j;
            signs[j] = self.signs[src];
        }
        WeylElement { perm, signs }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &p)| j == p) && self.signs.iter().all(|&s| s == 1)
    }
}

/// The full combinatorial skeleton of one similitude group.
#[derive(Debug, Clone)]
pub struct RootDatum {
    family: GroupFamily,
    coords: usize,
    dim_torus: usize,
    rank: usize,
    dim_group: usize,
    /// All roots: the canonical positives first, then their negatives in the
    /// same relative order.
    roots: Vec<RootVector>,
    n_positive: usize,
    simple_roots: Vec<RootVector>,
    positive_set: BTreeSet<RootVector>,
    root_set: BTreeSet<RootVector>,
}

impl RootDatum {
    pub fn family(&self) -> GroupFamily {
        self.family
    }

    /// Number of semisimple torus coordinates (the length of every root and
    /// apartment-point vector).
    pub fn coords(&self) -> usize {
        self.coords
    }

    /// Dimension of the full maximal torus, central directions included.
    pub fn dim_torus(&self) -> usize {
        self.dim_torus
    }

    /// Rank of the group (equals `dim_torus` for these split families).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `dim G = #roots + dim_torus`.
    pub fn dim_group(&self) -> usize {
        self.dim_group
    }

    /// All roots, positives first.
    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn n_positive(&self) -> usize {
        self.n_positive
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.roots[..self.n_positive]
    }

    /// Simple roots in the standard (Bourbaki) order.
    pub fn simple_roots(&self) -> &[RootVector] {
        &self.simple_roots
    }

    pub fn is_root(&self, chi: &RootVector) -> bool {
        self.root_set.contains(chi)
    }

    pub fn is_positive_root(&self, chi: &RootVector) -> bool {
        self.positive_set.contains(chi)
    }

    /// Checks that `w` is a legal Weyl element for this datum: right length,
    /// bijective, signs `±1`, and the family's sign rule (no flips for `GL`,
    /// an even number of flips for even `GO`).
    pub fn validate_weyl(&self, w: &WeylElement) -> Result<(), Error> {
        if w.n() != self.coords {
            return Err(Error::DimensionMismatch {
                expected: self.coords,
                got: w.n(),
            });
        }
        // Re-check structure so hand-built elements can't smuggle bad data.
        WeylElement::new(w.perm.clone(), w.signs.clone())?;
        let flips = w.signs.iter().filter(|&&s| s == -1).count();
        match self.family {
            GroupFamily::Gl(_) if flips > 0 => Err(Error::invalid(
                "sign flips are illegal in the GL Weyl group".to_string(),
            )),
            GroupFamily::Go(e) if e % 2 == 0 && flips % 2 != 0 => Err(Error::invalid(format!(
                "even GO requires an even number of sign flips, got {flips}"
            ))),
            _ => Ok(()),
        }
    }
}

/// Builds the root datum of a family.
///
/// # Errors
///
/// Rejects illegal size parameters (`e = 0`, or odd `e` for `GSp`).
pub fn build_root_datum(family: GroupFamily) -> Result<RootDatum, Error> {
    family.validate()?;
    let n = family.coords();
    let e = family.e();

    let unit = |i: usize, c: i64| -> Vec<i64> {
        let mut v = vec![0i64; n];
        v[i] = c;
        v
    };
    let pair = |i: usize, ci: i64, j: usize, cj: i64| -> Vec<i64> {
        let mut v = vec![0i64; n];
        v[i] = ci;
        v[j] = cj;
        v
    };

    // Canonical positive roots: differences e_i − e_j (i < j) in
    // lexicographic (i, j) order, then sums e_i + e_j, then the rank-one
    // roots e_i or 2e_i in ascending i.
    let mut positives: Vec<RootVector> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            positives.push(RootVector::new(pair(i, 1, j, -1)));
        }
    }
    match family {
        GroupFamily::Gl(_) => {}
        GroupFamily::Gsp(_) => {
            for i in 0..n {
                for j in (i + 1)..n {
                    positives.push(RootVector::new(pair(i, 1, j, 1)));
                }
            }
            for i in 0..n {
                positives.push(RootVector::new(unit(i, 2)));
            }
        }
        GroupFamily::Go(e) => {
            for i in 0..n {
                for j in (i + 1)..n {
                    positives.push(RootVector::new(pair(i, 1, j, 1)));
                }
            }
            if e % 2 == 1 {
                for i in 0..n {
                    positives.push(RootVector::new(unit(i, 1)));
                }
            }
        }
    }

    // Simple roots, Bourbaki order: the A-chain e_i − e_{i+1}, then the
    // family-specific last root.
    let mut simple_roots: Vec<RootVector> = Vec::new();
    for i in 0..n.saturating_sub(1) {
        simple_roots.push(RootVector::new(pair(i, 1, i + 1, -1)));
    }
    match family {
        GroupFamily::Gl(_) => {}
        GroupFamily::Gsp(_) => {
            if n >= 1 {
                simple_roots.push(RootVector::new(unit(n - 1, 2)));
            }
        }
        GroupFamily::Go(e) if e % 2 == 1 => {
            if n >= 1 {
                simple_roots.push(RootVector::new(unit(n - 1, 1)));
            }
        }
        GroupFamily::Go(_) => {
            if n >= 2 {
                simple_roots.push(RootVector::new(pair(n - 2, 1, n - 1, 1)));
            }
        }
    }

    let dim_torus = match family {
        GroupFamily::Gl(_) => e as usize,
        GroupFamily::Gsp(_) | GroupFamily::Go(_) => n + 1,
    };
    let n_positive = positives.len();
    let mut roots = positives.clone();
    roots.extend(positives.iter().map(RootVector::negate));
    let dim_group = roots.len() + dim_torus;

    // Closed-form cross-checks of the construction.
    debug_assert_eq!(
        roots.len(),
        match family {
            GroupFamily::Gl(_) => n * n.saturating_sub(1),
            GroupFamily::Gsp(_) => 2 * n * n,
            GroupFamily::Go(e) if e % 2 == 0 => 2 * n * n.saturating_sub(1),
            GroupFamily::Go(_) => 2 * n * n,
        }
    );

    let positive_set: BTreeSet<RootVector> = positives.iter().cloned().collect();
    let root_set: BTreeSet<RootVector> = roots.iter().cloned().collect();
    debug_assert_eq!(root_set.len(), roots.len(), "duplicate roots");

    Ok(RootDatum {
        family,
        coords: n,
        dim_torus,
        rank: dim_torus,
        dim_group,
        roots,
        n_positive,
        simple_roots,
        positive_set,
        root_set,
    })
}

/// The pairing `⟨x, χ⟩ = Σ x_i χ_i` between a rational cocharacter vector
/// and an integer character.
///
/// # Errors
///
/// The two vectors must have the same length.
pub fn pairing(x: &[Rational], chi: &RootVector) -> Result<Rational, Error> {
    if x.len() != chi.len() {
        return Err(Error::DimensionMismatch {
            expected: chi.len(),
            got: x.len(),
        });
    }
    let mut acc = Rational::from_integer(0.into());
    for (xi, &ci) in x.iter().zip(chi.entries()) {
        if ci != 0 {
            acc += xi * Rational::from_integer(ci.into());
        }
    }
    Ok(acc)
}

/// The order of the Weyl group: `e!` for `GL(e)`, `2^n·n!` for `GSp(2n)` and
/// `GO(2n+1)`, `2^{n−1}·n!` for `GO(2n)`.
///
/// # Errors
///
/// Returns [`Error::TooLarge`] if the order overflows `u128`.
pub fn weyl_order(datum: &RootDatum) -> Result<u128, Error> {
    let n = datum.coords as u128;
    let mut order: u128 = 1;
    let overflow = || Error::TooLarge(format!("Weyl order of {} overflows u128", datum.family));
    for k in 1..=n {
        order = order.checked_mul(k).ok_or_else(overflow)?;
    }
    let sign_factor: u128 = match datum.family {
        GroupFamily::Gl(_) => 1,
        GroupFamily::Gsp(_) => 1u128.checked_shl(datum.coords as u32).ok_or_else(overflow)?,
        GroupFamily::Go(e) => {
            let shift = if e % 2 == 0 {
                (datum.coords as u32).saturating_sub(1)
            } else {
                datum.coords as u32
            };
            1u128.checked_shl(shift).ok_or_else(overflow)?
        }
    };
    order.checked_mul(sign_factor).ok_or_else(overflow)
}

fn sign_masks(family: GroupFamily, n: usize) -> Vec<Vec<i8>> {
    let from_mask = |mask: u64| -> Vec<i8> {
        (0..n)
            .map(|i| if (mask >> i) & 1 == 1 { -1 } else { 1 })
            .collect()
    };
    match family {
        GroupFamily::Gl(_) => vec![vec![1; n]],
        GroupFamily::Go(e) if e % 2 == 0 => (0u64..1 << n)
            .filter(|m| m.count_ones() % 2 == 0)
            .map(from_mask)
            .collect(),
        GroupFamily::Gsp(_) | GroupFamily::Go(_) => (0u64..1 << n).map(from_mask).collect(),
    }
}

/// Enumerates the Weyl group in a deterministic order: permutations in
/// lexicographic order, and for each permutation the legal sign patterns as
/// an ascending binary counter (bit `i` set ⇔ sign flip at source
/// coordinate `i`). The identity comes first.
///
/// # Errors
///
/// Refuses groups larger than [`WEYL_ENUMERATION_LIMIT`].
pub fn weyl_elements(datum: &RootDatum) -> Result<impl Iterator<Item = WeylElement>, Error> {
    let order = weyl_order(datum)?;
    if order > WEYL_ENUMERATION_LIMIT {
        return Err(Error::TooLarge(format!(
            "Weyl group of {} has {order} elements, above the enumeration limit of {WEYL_ENUMERATION_LIMIT}",
            datum.family
        )));
    }
    let n = datum.coords;
    let masks = sign_masks(datum.family, n);
    Ok((0..n).permutations(n).flat_map(move |perm| {
        masks
            .clone()
            .into_iter()
            .map(move |signs| WeylElement {
                perm: perm.clone(),
                signs,
            })
            .collect::<Vec<_>>()
    }))
}

/// Applies a validated Weyl element to a root.
///
/// # Errors
///
/// The element must be legal for the datum and the root the right length.
pub fn apply_weyl_root(
    datum: &RootDatum,
    w: &WeylElement,
    chi: &RootVector,
) -> Result<RootVector, Error> {
    datum.validate_weyl(w)?;
    if chi.len() != datum.coords {
        return Err(Error::DimensionMismatch {
            expected: datum.coords,
            got: chi.len(),
        });
    }
    Ok(RootVector::new(w.apply(chi.entries())))
}

/// For every positive root, the set of simple-root indices appearing in its
/// expansion into simple roots (its support).
///
/// Computed by saturation: every positive non-simple root is a positive root
/// plus a simple root, so starting from the simples and repeatedly adding
/// simple roots reaches every positive root, and the support grows by the
/// index added at each step.
pub fn simple_supports(datum: &RootDatum) -> BTreeMap<RootVector, BTreeSet<usize>> {
    let mut supports: BTreeMap<RootVector, BTreeSet<usize>> = BTreeMap::new();
    let mut queue: Vec<RootVector> = Vec::new();
    for (idx, alpha) in datum.simple_roots().iter().enumerate() {
        supports.insert(alpha.clone(), BTreeSet::from([idx]));
        queue.push(alpha.clone());
    }
    while let Some(chi) = queue.pop() {
        let base = supports[&chi].clone();
        for (idx, alpha) in datum.simple_roots().iter().enumerate() {
            let next = chi.add(alpha);
            if datum.is_positive_root(&next) && !supports.contains_key(&next) {
                let mut sup = base.clone();
                sup.insert(idx);
                supports.insert(next.clone(), sup);
                queue.push(next);
            }
        }
    }
    assert_eq!(
        supports.len(),
        datum.n_positive(),
        "support saturation must reach every positive root"
    );
    supports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn datum(s: &str) -> RootDatum {
        build_root_datum(GroupFamily::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn gl2_skeleton() {
        let d = datum("gl:2");
        assert_eq!(d.coords(), 2);
        assert_eq!(d.dim_torus(), 2);
        assert_eq!(d.rank(), 2);
        assert_eq!(d.dim_group(), 4);
        assert_eq!(
            d.roots(),
            &[
                RootVector::new(vec![1, -1]),
                RootVector::new(vec![-1, 1])
            ]
        );
        assert_eq!(d.simple_roots(), &[RootVector::new(vec![1, -1])]);
        assert_eq!(d.n_positive(), 1);
    }

    #[test]
    fn gsp4_skeleton() {
        let d = datum("gsp:4");
        assert_eq!(d.coords(), 2);
        assert_eq!(d.dim_torus(), 3);
        assert_eq!(d.roots().len(), 8);
        assert_eq!(d.dim_group(), 11);
        // Canonical positive order: difference, sum, then long roots.
        assert_eq!(
            d.positive_roots(),
            &[
                RootVector::new(vec![1, -1]),
                RootVector::new(vec![1, 1]),
                RootVector::new(vec![2, 0]),
                RootVector::new(vec![0, 2]),
            ]
        );
        assert_eq!(
            d.simple_roots(),
            &[RootVector::new(vec![1, -1]), RootVector::new(vec![0, 2])]
        );
    }

    #[test]
    fn go_skeletons() {
        let d4 = datum("go:4");
        assert_eq!(d4.roots().len(), 4);
        assert_eq!(d4.dim_group(), 7);
        assert_eq!(
            d4.simple_roots(),
            &[RootVector::new(vec![1, -1]), RootVector::new(vec![1, 1])]
        );

        let d5 = datum("go:5");
        assert_eq!(d5.roots().len(), 8);
        assert_eq!(d5.dim_group(), 11);
        assert_eq!(
            d5.simple_roots(),
            &[RootVector::new(vec![1, -1]), RootVector::new(vec![0, 1])]
        );
    }

    #[test]
    fn degenerate_sizes() {
        // (family, #roots, dim_torus, dim_group)
        let cases = [
            ("gl:1", 0, 1, 1),
            ("gsp:2", 2, 2, 4),
            ("go:1", 0, 1, 1),
            ("go:2", 0, 2, 2),
            ("go:3", 2, 2, 4),
        ];
        for (name, n_roots, torus, dim) in cases {
            let d = datum(name);
            assert_eq!(d.roots().len(), n_roots, "{name}");
            assert_eq!(d.dim_torus(), torus, "{name}");
            assert_eq!(d.dim_group(), dim, "{name}");
        }
        // go:1 has zero coordinates but a one-dimensional torus.
        assert_eq!(datum("go:1").coords(), 0);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(GroupFamily::parse("gsp:3").is_err());
        assert!(GroupFamily::parse("gsp:0").is_err());
        assert!(GroupFamily::parse("gl:0").is_err());
        assert!(GroupFamily::parse("go:0").is_err());
        assert!(GroupFamily::parse("sp:4").is_err());
        assert!(GroupFamily::parse("gl:x").is_err());
        assert!(GroupFamily::parse("gl3").is_err());
    }

    #[test]
    fn pairing_examples() {
        let d = datum("gl:3");
        let x = [rat(1), rat(0), rat(0)];
        let chi = RootVector::new(vec![1, 0, -1]);
        assert!(d.is_positive_root(&chi));
        assert_eq!(pairing(&x, &chi).unwrap(), rat(1));
        let d2 = datum("gsp:4");
        assert_eq!(d2.coords(), 2);
        assert_eq!(
            pairing(&[rat(1), rat(1)], &RootVector::new(vec![1, 1])).unwrap(),
            rat(2)
        );
        assert!(pairing(&x, &RootVector::new(vec![1, -1])).is_err());
    }

    #[test]
    fn weyl_orders() {
        let cases = [
            ("gl:2", 2u128),
            ("gl:3", 6),
            ("gsp:2", 2),
            ("gsp:4", 8),
            ("gsp:6", 48),
            ("go:4", 4),
            ("go:7", 48),
            ("go:8", 192),
            ("go:1", 1),
            ("go:2", 1),
        ];
        for (name, expected) in cases {
            let d = datum(name);
            assert_eq!(weyl_order(&d).unwrap(), expected, "{name}");
            assert_eq!(
                weyl_elements(&d).unwrap().count() as u128,
                expected,
                "{name} enumeration"
            );
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_starts_at_identity() {
        let d = datum("gsp:4");
        let elems: Vec<WeylElement> = weyl_elements(&d).unwrap().collect();
        assert!(elems[0].is_identity());
        // Second element: same permutation, first sign flipped.
        assert_eq!(elems[1].perm(), &[0, 1]);
        assert_eq!(elems[1].signs(), &[-1, 1]);
        let again: Vec<WeylElement> = weyl_elements(&d).unwrap().collect();
        assert_eq!(elems, again);
    }

    #[test]
    fn signed_action_examples() {
        // Swap-with-flip on GSp(4): signs act on source coordinates first.
        let w = WeylElement::new(vec![1, 0], vec![1, -1]).unwrap();
        assert_eq!(w.apply(&[rat(2), rat(1)]), vec![rat(-1), rat(2)]);

        // Plain swap on GL(2).
        let s = WeylElement::new(vec![1, 0], vec![1, 1]).unwrap();
        assert_eq!(s.apply(&[rat(1), rat(0)]), vec![rat(0), rat(1)]);
    }

    #[test]
    fn compose_and_inverse_agree_with_action() {
        let d = datum("gsp:4");
        let elems: Vec<WeylElement> = weyl_elements(&d).unwrap().collect();
        let v = [rat(3), rat(-5)];
        for a in &elems {
            let inv = a.inverse();
            assert!(a.compose(&inv).is_identity());
            assert!(inv.compose(a).is_identity());
            for b in &elems {
                let lhs = a.compose(b).apply(&v);
                let rhs = a.apply(&b.apply(&v));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn weyl_validation_rules() {
        let gl = datum("gl:2");
        let flip = WeylElement::new(vec![0, 1], vec![-1, 1]).unwrap();
        assert!(gl.validate_weyl(&flip).is_err());

        let go4 = datum("go:4");
        assert!(go4.validate_weyl(&flip).is_err());
        let double_flip = WeylElement::new(vec![0, 1], vec![-1, -1]).unwrap();
        assert!(go4.validate_weyl(&double_flip).is_ok());

        let gsp = datum("gsp:4");
        assert!(gsp.validate_weyl(&flip).is_ok());
        assert!(gsp
            .validate_weyl(&WeylElement::identity(3))
            .is_err_and(|e| matches!(e, Error::DimensionMismatch { .. })));

        assert!(WeylElement::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(WeylElement::new(vec![0, 1], vec![2, 1]).is_err());
    }

    #[test]
    fn weyl_elements_permute_roots() {
        for name in ["gl:3", "gsp:4", "go:4", "go:5"] {
            let d = datum(name);
            for w in weyl_elements(&d).unwrap() {
                let image: BTreeSet<RootVector> = d
                    .roots()
                    .iter()
                    .map(|chi| apply_weyl_root(&d, &w, chi).unwrap())
                    .collect();
                let original: BTreeSet<RootVector> = d.roots().iter().cloned().collect();
                assert_eq!(image, original, "{name}");
            }
        }
    }

    #[test]
    fn supports_reach_every_positive_root() {
        let d = datum("gsp:4");
        let sup = simple_supports(&d);
        assert_eq!(
            sup[&RootVector::new(vec![1, 1])],
            BTreeSet::from([0, 1]),
            "e1+e2 = α0 + α1"
        );
        assert_eq!(sup[&RootVector::new(vec![2, 0])], BTreeSet::from([0, 1]));
        assert_eq!(sup[&RootVector::new(vec![0, 2])], BTreeSet::from([1]));

        let gl3 = datum("gl:3");
        let sup3 = simple_supports(&gl3);
        assert_eq!(sup3[&RootVector::new(vec![1, 0, -1])], BTreeSet::from([0, 1]));
        assert_eq!(sup3.len(), 3);
    }

    #[test]
    fn enumeration_limit_is_enforced() {
        let d = datum("gl:12");
        assert!(matches!(weyl_elements(&d), Err(Error::TooLarge(_))));
        // gl:10 has 3,628,800 elements — under the limit, so it enumerates.
        let d10 = datum("gl:10");
        assert!(weyl_elements(&d10).is_ok());
    }
}
