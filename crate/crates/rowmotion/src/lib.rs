//! Toggle-group dynamics on ranked posets.
//!
//! This crate implements the combinatorial dynamical systems that arise from
//! toggling order ideals of a finite ranked poset:
//!
//! - **Rowmotion and promotion.** Rowmotion sends an ideal to the ideal
//!   generated by the minimal elements of its complement; equivalently it
//!   toggles every element once along a linear extension, top to bottom. With
//!   a lattice projection `pi : P -> Z^n` and a sign vector
//!   `v in {+1,-1}^n`, promotion `Pro_v` toggles the affine hyperplane
//!   slices `<pi(x), v> = i` as `i` descends; `v = (1,...,1)` recovers
//!   rowmotion. See [`dynamics`].
//! - **Layered promotion and conjugation.** `Pro_v` factors into reduced
//!   `(n-1)`-dimensional promotions on the layers along any axis, and an
//!   explicit toggle word conjugates `Pro_v` into the promotion with one
//!   axis sign flipped. See [`dynamics::layered_promotion_word`] and
//!   [`dynamics::conjugator`].
//! - **Recombination.** Reassembling one layer from each successive
//!   promotion image yields a new order ideal; this intertwines promotions
//!   whose direction vectors differ in a single sign, and transports orbits
//!   (and orbit statistics) between them. See [`recombination`].
//! - **Increasing tableaux.** The ideals of `[a] x [b] x [c]` biject with
//!   increasing tableaux of shape `a x b` and entries at most `a+b+c-1`,
//!   equivariantly: promotion in the direction `(1,1,-1)` corresponds to
//!   K-promotion, implemented as a ladder of K-Bender-Knuth involutions.
//!   See [`tableaux`].
//! - **Homomesy.** Exact-rational orbit censuses decide whether a statistic
//!   has the same average on every orbit, with no floating point anywhere.
//!   See [`homomesy`].
//!
//! Everything is exhaustive and exact: state spaces are enumerated fully
//! (with a configurable cap) and averages are arbitrary-precision rationals.
//!
//! The `examples/` directory of this crate demonstrates each capability as a
//! runnable program, and [`verify`] packages the library's own battery of
//! cross-checks against known orbit censuses and homomesy constants (also
//! exposed as the `verify-paper` CLI subcommand).

pub mod cli;
pub mod document;
pub mod dynamics;
pub mod error;
pub mod homomesy;
pub mod poset;
pub mod recombination;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use poset::{CoordVector, OrderIdeal, RankedPoset, MAX_ELEMENTS};
pub use dynamics::{DirectionVector, ToggleWord};
