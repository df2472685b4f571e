pub mod analysis;
pub mod buildup;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod equiv;
pub mod error;
pub mod format;
pub mod gf;
pub mod packed;
pub mod qc;
pub mod rcode;
pub mod ring;

pub use error::{Error, Result};
pub use gf::{FieldElem, FieldSpec};
pub use qc::FieldCode;
pub use rcode::RingCode;
pub use ring::{RingElem, RingSpec};
