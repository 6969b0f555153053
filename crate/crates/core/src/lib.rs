//! Clique-width classification of graph classes defined by forbidden
//! patterns, with the supporting graph machinery: canonical forms,
//! induced-subgraph search, planarity, k-expressions, an exact clique-width
//! solver for small graphs, lower-bound certificates and witness families.

pub mod canon;
pub mod certificate;
pub mod classifier;
pub mod colouring;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod expr;
pub mod graph;
pub mod io;
pub mod names;
pub mod pattern;
pub mod planarity;
pub mod scan;
pub mod witnesses;

pub use certificate::{check_certificate, lower_bound, CertificateReport, LayeredPartition};
pub use classifier::{classify_pair, classify_relation, classify_single, equivalence_class, Relation, Status, Verdict};
pub use colouring::classify_colouring;
pub use error::{Error, Result};
pub use exact::{cliquewidth, cliquewidth_at_most};
pub use expr::{parse_cwexpr, CwExpr, LabelledGraph};
pub use graph::{Edit, Graph};
pub use names::{parse_name, recognize, GraphNameExpr};
pub use pattern::{contains_induced, in_class_s, is_free};
pub use planarity::is_planar;
