//! Normal S-words, reduction, compositions, completion and `Irr(S)`.

pub mod basis;
pub mod check;
pub mod complete;
pub mod composition;
pub mod irr;
pub mod par;
pub mod reduce;
pub mod relations;

pub use basis::{interreduce, minimalize, reduce_basis};
pub use check::{check_gsb, compositions, is_trivial, CheckOptions, CheckedComposition, GsbReport, KindCount, Overall, Verdict, Window};
pub use complete::{complete, CompleteOptions, Completion, LimitHit, Limits};
pub use composition::{Ambiguity, Composition, CompositionKind, MultBounds};
pub use irr::{irr_enumerate, kd_basis, normal_words, IrrBounds};
pub use reduce::{reduce, reduce_with, remainder, ReductionTrace, Step, Strategy};
pub use relations::{Pattern, PatternKind, RelationSet};
