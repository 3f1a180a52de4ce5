pub mod condensed;
pub mod dplusxl;
pub mod error;
pub mod exec;
pub mod exactnum;
pub mod ideals;
pub mod parse;
pub mod rings;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::{SearchBound, Verdict};
