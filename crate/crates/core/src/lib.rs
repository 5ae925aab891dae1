pub mod alternating;
pub mod cli;
pub mod enumerate;
pub mod equations;
pub mod error;
pub mod generate;
pub mod procedure;
pub mod semantics;
pub mod syntax;

pub use enumerate::Limits;
pub use error::{Error, Result};
