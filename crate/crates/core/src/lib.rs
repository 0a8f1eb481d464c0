pub mod category;
pub mod cli;
pub mod complexes;
pub mod error;
pub mod fixtures;
pub mod hochschild;
pub mod linalg;
pub mod motives;
pub mod quiver;
pub mod verify;

pub use error::{Error, Result};
