//! Homology of finite ternary quasigroups ("terns") and the knot invariants
//! built from it.
//!
//! The library is organised around the pipeline
//!
//! ```text
//! ternary operation table  ->  chain complex  ->  integer homology
//!          |                                           ^
//!          v                                           |
//!   region colorings of a diagram  ->  cycles  --------+--> cocycle state sums
//! ```
//!
//! * [`algebra`] — finite ternary operation tables, the axiom checker, the
//!   hat involution, standard constructors and exhaustive enumeration of
//!   small terns.
//! * [`chain`] — tuple generators, the left/right face maps, the combined
//!   differential and the degenerate tuples.
//! * [`homology`] — boundary matrices for the full, degenerate and
//!   normalized complexes, Smith normal form homology and class-order
//!   queries (with [`snf`] supplying the integer normal form).
//! * [`diagram`] — combinatorial codes for classical knot diagrams and
//!   knotted-surface diagrams, coloring enumeration and cycle extraction.
//! * [`invariants`] — cochains with cyclic-group values, cocycle checks and
//!   group-ring state sums.

pub mod algebra;
pub mod chain;
pub mod diagram;
pub mod homology;
pub mod invariants;
pub mod snf;

mod parallel;

pub use algebra::{Axiom, AxiomReport, AxiomStatus, GroupTable, GroupTernVariant, TernTable};
pub use chain::{ChainVector, DiffVariant, TupleGen};
pub use diagram::{Coloring, Diagram};
pub use homology::{ComplexSelector, CycleClass, HomologyEngine, HomologyGroup, Subcomplex};
pub use invariants::{Cochain, GroupRingElement};

/// Element of a finite carrier `{0, .., q-1}`.
pub type Elem = u16;
