//! Prime ideal sum graphs of finite products of chain rings, and their
//! strong metric dimension computed by three independent exact methods.
//!
//! A ring spec such as `Z(4) x Z(9)` names a product of chain rings.
//! [`pis::build_pis`] constructs the graph on its nonzero proper ideals
//! (adjacent when the ideal sum is prime), [`sdim`] computes the strong
//! metric dimension by brute force, by minimum vertex cover of the strong
//! resolving graph, and by the diameter-two reduction `|V| - omega(R_G)`,
//! and [`formulas`] checks the closed-form predictions for the covered
//! ring classes.

pub mod bitset;
pub mod formulas;
pub mod graph;
pub mod pis;
pub mod report;
pub mod ring;
pub mod sdim;

pub use pis::{build_pis, PisGraph};
pub use report::{analyze_spec, analyze_text, Analysis, AnalysisReport, AnalyzeOptions};
pub use ring::{IdealVector, RingClass, RingSpec};
