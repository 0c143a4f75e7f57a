//! Reconstruction of YD algebras from centrally pointed bimodule categories and back.

pub mod functors;
pub mod iso;
pub mod presentation;
pub mod psi;
pub mod regular;

pub use presentation::{hat_hom, CentrallyPointedPresentation, FiberFunctor, FromYDAlgebra};
pub use regular::{og_to_blocks, LemmaReport, RegularPart, UniversalElement};
pub use psi::{lambda_matrix, psi, verify_hom, verify_lambda, HomReport};
pub use functors::{induce_hom, natural_iso_check, verify_induced, FunctorData, FunctorReport, NaturalIsoReport, SigmaAdReport};
pub use iso::{character_iso, CharacterIso};
