//! Exact combinatorics of classical similitude groups.
//!
//! This crate computes, in exact rational arithmetic, the combinatorial data
//! attached to the split similitude groups `GL(e)`, `GSp(e)` and `GO(e)`:
//!
//! * [`root_data`] — roots, simple roots, Weyl groups as signed permutations,
//!   and the pairing between torus characters and cocharacters;
//! * [`building`] — rational points of the standard apartment, dominant
//!   representatives, filtrations, and the dimension statistics of the
//!   parabolic attached to a point;
//! * [`positivity`] — standard parabolic subgroups, the character `δ_Q` by
//!   which a parabolic acts on its unipotent radical, and positivity of a
//!   point with respect to a parabolic;
//! * [`polygon`] — the adjoint polygon `Υ_{G,x}` of a point (the concave hull
//!   of the slopes of `ad x` on `Lie G`);
//! * [`bruhat`] — the Bruhat sets `W_{Q,P}` of minimal double-coset
//!   representatives and the fiber-dimension bounds they control;
//! * [`bounds`] — the dimension-bound inequalities, and the uniform threshold
//!   `N₀` beyond which they hold for all larger exponents;
//! * [`hodge`] — Hodge-number profiles, the quadratic form controlling the
//!   numerical step of the Lawrence–Venkatesh method, and the pipeline from a
//!   profile to the group-theoretic bound data.
//!
//! All scalars are arbitrary-precision rationals ([`rat::Rational`]); the
//! crate uses no floating point anywhere, so every comparison is exact.
//!
//! # Example
//!
//! ```
//! use redcomb::root_data::{build_root_datum, GroupFamily};
//! use redcomb::building::{parabolic_stats, ApartmentPoint};
//! use redcomb::polygon::adjoint_polygon;
//! use redcomb::rat::rat;
//!
//! let datum = build_root_datum(GroupFamily::Gl(3)).unwrap();
//! let x = ApartmentPoint::new(&datum, vec![rat(1), rat(0), rat(0)]).unwrap();
//! let stats = parabolic_stats(&datum, &x).unwrap();
//! assert_eq!(stats.dim_rad_p, 2);
//!
//! let poly = adjoint_polygon(&datum, &x).unwrap();
//! assert_eq!(poly.evaluate(&rat(2)).unwrap(), rat(2));
//! ```

pub mod bounds;
pub mod bruhat;
pub mod building;
pub mod error;
pub mod hodge;
pub mod polygon;
pub mod positivity;
pub mod rat;
pub mod root_data;

pub use error::Error;
