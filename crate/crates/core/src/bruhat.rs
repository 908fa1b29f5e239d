//! Bruhat sets of double-coset representatives and fiber-dimension bounds.
//!
//! For standard parabolics `Q`, `P` of the same datum, write `Δ_P` for the
//! simple roots of the Levi of `P` (so `Δ_Borel = ∅`). The *Bruhat set*
//!
//! ```text
//! W_{Q,P} = { w ∈ W : w·Δ_P ⊆ Φ⁺ and w⁻¹·Δ_Q ⊆ Φ⁺ }
//! ```
//!
//! hits every `(W_Q, W_P)` double coset exactly once — these are the minimal
//! length representatives. For a Borel both membership conditions are
//! vacuous on that side.
//!
//! For a dominant point `x` with attached parabolic `P = P_x`, each `w` in
//! the Bruhat set carries a cell of the flag variety, whose *fiber roots*
//!
//! ```text
//! Φ^w_{Q,P} = { χ ∈ Φ∖Φ_Q : −w⁻¹·χ ∉ Φ_P }
//! ```
//!
//! bound the fiber dimension of the cell over its image. A cell is
//! *positive* when `⟨w·x, δ_Q⟩ ≥ 0`; minimizing the codimension
//! `dim_flag(x) − #Φ^w` over positive cells bounds from below the
//! codimension of the positive locus. Since a dominant `x` pairs
//! nonnegatively with `δ_Q`, the identity cell is always positive, so the
//! bound is finite on legal inputs; the [`CodimBound::Infinite`] sentinel is
//! kept for the vacuous case anyway.

use crate::building::{parabolic_stats, ApartmentPoint};
use crate::error::Error;
use crate::polygon::AdjointPolygon;
use crate::positivity::{
    positivity_pairing, standard_parabolic_of_point, StandardParabolic,
};
use crate::rat::{rat, Rational};
use crate::root_data::{pairing, weyl_elements, RootDatum, RootVector, WeylElement};

/// One Bruhat cell attached to a representative `w ∈ W_{Q,P_x}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatCell {
    pub w: WeylElement,
    /// The roots `Φ^w_{Q,P}` controlling the fiber dimension of the cell.
    pub fiber_roots: Vec<RootVector>,
    /// Whether `⟨w·x, δ_Q⟩ ≥ 0`.
    pub is_positive: bool,
    /// `#Φ^w_{Q,P}`, an upper bound for the cell's fiber dimension.
    pub cell_fiber_dim: usize,
}

/// A lower bound for a codimension; `Infinite` when no cell qualifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodimBound {
    Finite(usize),
    Infinite,
}

fn levi_simples<'a>(datum: &'a RootDatum, q: &StandardParabolic) -> Vec<&'a RootVector> {
    q.simple_subset()
        .iter()
        .map(|&i| &datum.simple_roots()[i])
        .collect()
}

/// Membership test for the Bruhat set `W_{Q,P}`.
///
/// # Errors
///
/// The parabolics must belong to the datum and `w` must be a legal Weyl
/// element for it.
pub fn is_bruhat_rep(
    datum: &RootDatum,
    q: &StandardParabolic,
    p: &StandardParabolic,
    w: &WeylElement,
) -> Result<bool, Error> {
    q.check_datum(datum)?;
    p.check_datum(datum)?;
    datum.validate_weyl(w)?;
    let w_inv = w.inverse();
    for alpha in levi_simples(datum, p) {
        if !datum.is_positive_root(&RootVector::new(w.apply(alpha.entries()))) {
            return Ok(false);
        }
    }
    for alpha in levi_simples(datum, q) {
        if !datum.is_positive_root(&RootVector::new(w_inv.apply(alpha.entries()))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enumerates the Bruhat set `W_{Q,P}` in the deterministic Weyl order.
///
/// # Errors
///
/// The parabolics must belong to the datum; the Weyl group must be under the
/// enumeration limit.
pub fn bruhat_reps(
    datum: &RootDatum,
    q: &StandardParabolic,
    p: &StandardParabolic,
) -> Result<Vec<WeylElement>, Error> {
    q.check_datum(datum)?;
    p.check_datum(datum)?;
    let mut reps = Vec::new();
    for w in weyl_elements(datum)? {
        if is_bruhat_rep(datum, q, p, &w)? {
            reps.push(w);
        }
    }
    Ok(reps)
}

/// The fiber roots `Φ^w_{Q,P} = {χ ∈ Φ∖Φ_Q : −w⁻¹χ ∉ Φ_P}`.
fn fiber_roots_for(
    datum: &RootDatum,
    q: &StandardParabolic,
    p: &StandardParabolic,
    w: &WeylElement,
) -> Vec<RootVector> {
    let w_inv = w.inverse();
    datum
        .roots()
        .iter()
        .filter(|chi| !q.contains_root(chi))
        .filter(|chi| {
            let back = RootVector::new(w_inv.apply(chi.entries()));
            !p.contains_root(&back.negate())
        })
        .cloned()
        .collect()
}

/// Builds the Bruhat cells of `(Q, P_x)` for a dominant point `x`, with
/// their fiber roots and positivity.
///
/// # Errors
///
/// `x` must be dominant and `p` must be exactly the parabolic `P_x` attached
/// to it; `q` must belong to the same datum.
pub fn positive_reps(
    datum: &RootDatum,
    q: &StandardParabolic,
    p: &StandardParabolic,
    x: &ApartmentPoint,
) -> Result<Vec<BruhatCell>, Error> {
    q.check_datum(datum)?;
    p.check_datum(datum)?;
    let p_x = standard_parabolic_of_point(datum, x)?;
    if p_x.simple_subset() != p.simple_subset() {
        return Err(Error::invalid(format!(
            "P must be the parabolic attached to the point: expected subset {:?}, got {:?}",
            p_x.simple_subset(),
            p.simple_subset()
        )));
    }
    let mut cells = Vec::new();
    for w in bruhat_reps(datum, q, p)? {
        let moved = ApartmentPoint::new(datum, w.apply(x.entries()))?;
        let is_positive = positivity_pairing(datum, q, &moved)? >= rat(0);
        let fiber_roots = fiber_roots_for(datum, q, p, &w);
        let cell_fiber_dim = fiber_roots.len();
        cells.push(BruhatCell {
            w,
            fiber_roots,
            is_positive,
            cell_fiber_dim,
        });
    }
    Ok(cells)
}

/// The codimension bound for the positive locus: the minimum of
/// `dim_flag(x) − #Φ^w` over positive cells of `(Q, P_x)`.
///
/// # Errors
///
/// `x` must be dominant; `q` must belong to the datum.
pub fn fiber_codimension(
    datum: &RootDatum,
    x: &ApartmentPoint,
    q: &StandardParabolic,
) -> Result<CodimBound, Error> {
    let p = standard_parabolic_of_point(datum, x)?;
    let stats = parabolic_stats(datum, x)?;
    let cells = positive_reps(datum, q, &p, x)?;
    let mut best: Option<usize> = None;
    for cell in &cells {
        if !cell.is_positive {
            continue;
        }
        // #Φ^w never exceeds dim_flag (the map χ ↦ −w⁻¹χ injects Φ^w into
        // the roots outside Φ_P), so this subtraction is safe.
        debug_assert!(cell.cell_fiber_dim <= stats.dim_flag);
        let codim = stats.dim_flag - cell.cell_fiber_dim;
        best = Some(best.map_or(codim, |b| b.min(codim)));
    }
    Ok(best.map_or(CodimBound::Infinite, CodimBound::Finite))
}

/// The two sides of the modular inequality attached to `w ∈ W_{Q,P}`:
///
/// ```text
/// lhs = Σ_{χ ∈ (Φ∖Φ_Q) ∖ Φ^w} ⟨x, −w⁻¹χ⟩,   rhs = Σ_{χ ∈ Φ^w} ⟨x, w⁻¹χ⟩.
/// ```
///
/// Their difference telescopes: `lhs − rhs = ⟨w·x, δ_Q⟩`.
///
/// # Errors
///
/// All inputs must belong to the datum and `w` must lie in `W_{Q,P}`.
pub fn modular_inequality_sides(
    datum: &RootDatum,
    q: &StandardParabolic,
    p: &StandardParabolic,
    w: &WeylElement,
    x: &ApartmentPoint,
) -> Result<(Rational, Rational), Error> {
    if !is_bruhat_rep(datum, q, p, w)? {
        return Err(Error::invalid(
            "w is not a minimal double-coset representative for (Q, P)",
        ));
    }
    if x.len() != datum.coords() {
        return Err(Error::DimensionMismatch {
            expected: datum.coords(),
            got: x.len(),
        });
    }
    let w_inv = w.inverse();
    let mut lhs = rat(0);
    let mut rhs = rat(0);
    for chi in datum.roots().iter().filter(|chi| !q.contains_root(chi)) {
        let back = RootVector::new(w_inv.apply(chi.entries()));
        if p.contains_root(&back.negate()) {
            lhs += pairing(x.entries(), &back.negate())?;
        } else {
            rhs += pairing(x.entries(), &back)?;
        }
    }
    Ok((lhs, rhs))
}

/// Convenience: the adjoint polygon of the moved point `w·x`, for cell-level
/// inspection. Equal to the polygon of `x` itself by Weyl invariance.
pub fn cell_polygon(
    datum: &RootDatum,
    w: &WeylElement,
    x: &ApartmentPoint,
) -> Result<AdjointPolygon, Error> {
    datum.validate_weyl(w)?;
    let moved = ApartmentPoint::new(datum, w.apply(x.entries()))?;
    crate::polygon::adjoint_polygon(datum, &moved)
}
