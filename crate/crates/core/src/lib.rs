//! Exact Seshadri constants on the projective plane.
//!
//! The crate works over ℚ and its finite extensions. A closed point of
//! `ℙ²_ℚ` is given by homogeneous coordinates in a number field; its residue
//! degree `α` enters every intersection count. The main entry point is
//! [`seshadri::seshadri_p2`], which decides whether `ε(ℙ², O(d₀), x)` lies
//! below a chosen threshold and returns either the exact value with a
//! witness curve or a certified bracket.
//!
//! ```
//! use seshadri::exactalg::rat;
//! use seshadri::numfield::NumberField;
//! use seshadri::p2geom::{ClosedPoint, LineBundleDeg};
//! use seshadri::seshadri::{seshadri_p2, BracketParams};
//!
//! let k = NumberField::new(vec![rat(-2, 1), rat(0, 1), rat(1, 1)]).unwrap();
//! let x = ClosedPoint::new(&k, [k.theta(), k.from_ints(&[1]), k.from_ints(&[0])]).unwrap();
//! let r = seshadri_p2(&x, &BracketParams::new(rat(3, 5), LineBundleDeg(1))).unwrap();
//! assert_eq!(r.exact(), Some(&rat(1, 2)));
//! ```
//!
//! Modules, bottom up:
//!
//! * [`exactalg`]: fields, fraction-free elimination, modular rank and kernels.
//! * [`numfield`]: `ℚ[t]/(f)` with an irreducibility certificate.
//! * [`p2geom`]: forms, closed points, multiplicities, intersection numbers.
//! * [`linsys`]: fat-point conditions and the table `m_max(e)`.
//! * [`seshadri`]: the bracket algorithm, bounds and base change.
//! * [`nslattice`]: abstract surfaces through their intersection lattice.

pub mod exactalg;
pub mod linsys;
pub mod nslattice;
pub mod numfield;
pub mod p2geom;
pub mod parse;
pub mod seshadri;

pub use exactalg::Rational;

/// The guide's chapters, compiled so their snippets stay in sync.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/points.md")]
    pub mod points {}
    #[doc = include_str!("../../../book/src/linear-systems.md")]
    pub mod linear_systems {}
    #[doc = include_str!("../../../book/src/bracket.md")]
    pub mod bracket {}
    #[doc = include_str!("../../../book/src/base-change.md")]
    pub mod base_change {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    pub mod lattices {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
