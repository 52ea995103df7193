//! Self-referential sentence systems ("F-systems"): three-valued labellings,
//! conglomerates and kernels, groundedness, structural paradox tests, and the
//! bridge to abstract argumentation.

pub mod argumentation;
pub mod conglomerate;
pub mod error;
pub mod examples;
pub mod format;
pub mod generate;
pub mod grounded;
pub mod labelling;
pub mod limits;
pub mod report;
pub mod set;
pub mod structure;
pub mod system;

pub use error::{Error, Result};
pub use limits::Limits;
pub use set::SentenceSet;
pub use system::{FSystem, FSystemBuilder, SentenceId};
