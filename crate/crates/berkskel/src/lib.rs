//! Exact combinatorial models of finite morphisms between skeletons of
//! non-archimedean curves.
//!
//! The crate works entirely in logarithmic coordinates with exact rational
//! arithmetic: no floats anywhere. The main pieces:
//!
//! - [`pm`]: the algebra of piecewise-monomial functions of radii —
//!   piecewise-affine functions in log coordinates — including the
//!   composition group of pm bijections and the character recovering
//!   log-differents from profiles.
//! - [`skeleton`]: metric genus graphs with genus computation and point
//!   addressing along edges.
//! - [`morphism`]: skeletal morphisms (graph maps with multiplicities) and
//!   the tame-side validators: fiber degrees, vertex/edge balancing, metric
//!   compatibility and the tame local Riemann-Hurwitz identity.
//! - [`different`]: the different function on a skeleton — stored values,
//!   branch germs and their slopes, the wild balancing identity, and the
//!   skeleton criterion.
//! - [`profile`]: profile (Herbrand) functions, tower composition,
//!   construction from ramification filtrations, profile fields over a
//!   skeleton, and radial multiplicity loci.
//! - [`doc`]: a plain-text document format tying everything together, used
//!   by the `berkskel` CLI.

pub mod logval;
pub mod pm;
pub mod report;
pub mod skeleton;

pub use logval::{LogValue, LogValueError, Rational};
pub use pm::{PMFunction, PmError, ProfileFunction, Side};
pub use report::{BalanceReport, Check, Finding, Report, Severity, ValidationReport};
pub use skeleton::{
    Edge, EdgeId, EndpointSlot, PointType, SkeletonError, SkeletonGraph, SkeletonPoint, Vertex,
    VertexId,
};
