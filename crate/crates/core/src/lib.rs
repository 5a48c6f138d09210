//! Critical numbers of Rankin–Selberg L-functions for pairs of cohomological
//! archimedean parameters, computed three independent ways.
//!
//! * [`weil::crit_gamma`] scans the poles of the archimedean Gamma factors.
//! * [`inequality::crit_inequality`] evaluates a closed-form window with a
//!   parity condition.
//! * [`embedding::crit_embedding`] runs the highest-weight pipeline and reads
//!   critical numbers off two branching intervals.
//!
//! ```
//! use critnum::{crit_gamma, crit_embedding, LanglandsParam};
//!
//! let pi = LanglandsParam::new(4, vec![3, -3], 0).unwrap();
//! let sigma = LanglandsParam::new(0, vec![0], 0).unwrap();
//! let crit = crit_gamma(&pi, &sigma).unwrap();
//! assert_eq!(crit.iter().map(|t| t.to_string()).collect::<Vec<_>>(), ["3/2", "5/2", "7/2"]);
//! assert_eq!(crit_embedding(&pi, &sigma).unwrap().0, crit);
//! ```

pub mod branching;
pub mod crit;
pub mod crosscheck;
pub mod embedding;
pub mod error;
pub mod halfint;
pub mod inequality;
pub mod param;
pub mod weight;
pub mod weil;

pub use crit::CritSet;
pub use embedding::{crit_embedding, PipelineTrace};
pub use error::{Error, Result, Violation};
pub use halfint::HalfInt;
pub use inequality::crit_inequality;
pub use param::{langlands_to_weight, validate_langlands, weight_to_langlands, LanglandsParam};
pub use weight::{DominantWeight, PureWeight};
pub use weil::crit_gamma;
