//! Combinatorial toolkit for Legendrian fronts and decomposable Lagrangian
//! cobordisms.
//!
//! Fronts are encoded as Morse-event words (`L<i>`, `R<i>`, `X<i>` on
//! numbered strand rows). On top of that encoding the crate provides:
//!
//! - classical invariants (`tb`, `rot`) and resolution to planar diagrams ([`front`], [`pd`]);
//! - the elementary cobordism moves, script verification and a bounded
//!   breadth-first search over them ([`moves`]);
//! - quasi-positive braid factorizations and their branched-cover surfaces ([`braid`]);
//! - Kauffman bracket, Jones and two-variable Kauffman polynomials, and the
//!   resulting upper bound on the Thurston–Bennequin number ([`polys`]);
//! - filling and non-collarability certificates ([`obstruct`]);
//! - the capping generating family and a symplectisation coordinate check ([`genfam`]);
//! - SVG/ASCII rendering of fronts ([`render`]) and the `legcob` command line ([`cli`]).

pub mod braid;
pub mod cli;
pub mod front;
pub mod genfam;
pub mod knot_table;
pub mod laurent;
mod morse;
pub mod moves;
pub mod obstruct;
pub mod pd;
pub mod polys;
pub mod random;
pub mod render;

pub use braid::{BraidWord, QPFactorization, SurfaceData};
pub use front::{
    classical_invariants, components, parse_front, serialize_front, to_planar_diagram,
    ClassicalInvariants, EventKind, FrontDiagram, FrontEvent, Orientation,
};
pub use laurent::{LaurentPoly1, LaurentPoly2};
pub use moves::{
    apply_move, enumerate_moves, euler_characteristic, search_cobordism, verify_script,
    CobordismReport, CobordismScript, MoveKind, MoveSite,
};
pub use obstruct::{certify_disk_slice, check_filling, collar_obstruction, Verdict, VerdictStatus};
pub use pd::{mirror, PlanarDiagram};
pub use polys::{jones, kauffman_bracket, kauffman_poly, tb_upper_bound};
