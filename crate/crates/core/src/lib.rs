//! Finite locales: frames, sublocales, nowhere density, maximal nowhere
//! dense sublocales, remoteness, localic maps and finite spaces.

pub mod classify;
pub mod elements;
pub mod error;
pub mod formats;
pub mod frame;
pub mod generate;
pub mod maps;
pub mod spatial;
pub mod sublocale;
pub mod theorems;

pub use classify::{classify, Classification};
pub use elements::ElementSet;
pub use error::{Error, Result};
pub use frame::FiniteFrame;
pub use generate::{all_frames_up_to, boolean_frame, chain_frame, FrameGenerator, PosetSeed};
pub use maps::LocalicMap;
pub use spatial::{FiniteSpace, SpaceLocale};
pub use sublocale::Sublocale;
