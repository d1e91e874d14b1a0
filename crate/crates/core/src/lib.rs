pub mod algebra;
pub mod effect;
pub mod error;
pub mod linalg;
pub mod tolerance;
pub use algebra::Algebra;
pub use effect::Effect;
pub use error::{CoseaError, Result};
pub use tolerance::ToleranceConfig;
