pub mod construct;
pub mod error;
pub mod fpgroup;
pub mod swengine;
pub mod topmodel;
pub mod verdict;

pub use error::{Error, Result};
