//! The first-order abstract machines.

pub mod callersave;
pub mod disentangled;
pub mod felleisen;
pub mod marked;
pub mod modern;
mod value;


pub use callersave::CallerSave;
pub use disentangled::Disentangled;
pub use felleisen::Secd;
pub use marked::{CekJ, Marked};
pub use modern::Modern;
pub use value::{initial_env, Value};
