//! Exact arithmetic for two-dimensional evolution algebras.
//!
//! An evolution algebra here is a free rank-2 module over an integral
//! domain with a distinguished natural basis e1, e2 satisfying
//! e1*e2 = 0; the structure matrix collects the coordinates of e1^2 and
//! e2^2 row by row. The crate decides perfection and quasiperfection,
//! computes basis-independent invariants and the associated two-vertex
//! colored digraph, reduces perfect algebras to canonical family forms,
//! decides isomorphism with replayable witnesses, and manipulates the
//! parameter spaces those families live in.
//!
//! All arithmetic is exact: integers and rationals are arbitrary
//! precision, prime fields reduce modulo p, and the polynomial domains
//! keep coefficients exactly. Nothing is floating point.

pub mod classify;
pub mod cli;
pub mod evalg;
pub mod graph;
pub mod moduli;
pub mod ring;

pub use classify::{CanonicalClass, Dim1Class, Dim1Iso, Family, IsoAnswer, ModuliTag, Verdict};
pub use evalg::{AlgebraError, BasisChange, EvolutionAlgebra, InvariantCounts, Perm};
pub use graph::{ColoredDigraph, EdgeColor};
pub use moduli::{Curve, ModuliError, ParamSpace};
pub use ring::{Capability, DomainHandle, DomainKind, PolyBase, RingElem, RingError};
