pub mod abelian;
pub mod biext;
pub mod cochain;
pub mod cohomology;
pub mod commutator;
pub mod error;
pub mod linsys;
pub mod multiext;
pub mod report;
pub mod zlin;

pub use abelian::{FinAbGroup, GroupElem};
pub use cochain::Cochain;
pub use error::{Error, Result};
pub use report::Report;
pub use cohomology::{cohomology, random_cochain, CocycleClass, CohomologyMethod};
pub use linsys::{ForcedEquation, Limits, SolutionSet, SolveOutcome};
pub use biext::{AltQuadruple, BiextPair};
pub use commutator::{BraidingClass, BraidingData, Braidings, GrCategoryData, PicardOutcome};
pub use multiext::{AltTriextData, Families, FourCocycleData, TriextData};
