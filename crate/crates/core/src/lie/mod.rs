//! Lie conformal algebras and their universal enveloping associative
//! conformal algebras.

pub mod builtins;
pub mod envelope;
pub mod schema;
pub mod table;
pub mod verify;

pub use builtins::{by_name, heisenberg_virasoro, virasoro, Example};
pub use envelope::{commutator_relation, conjugate, enveloping_presentation};
pub use schema::{instantiate_schemas, Constraint, IndexWindow, RelationSchema};
pub use table::{KdElement, LieTable};
pub use verify::{embedding_check, run_example, EmbeddingReport, EmbeddingVerdict, ExampleOptions, ExampleReport};
