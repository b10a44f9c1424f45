//! Parameter calculus for relative trisections of compact oriented 4-manifolds.
//!
//! The crate models trisections by their numerical data and the open books
//! they induce on the boundary, with monodromy recorded through its action on
//! first homology. All arithmetic is exact.
//!
//! - [`surface`]: surfaces, canonical homology bases, intersection forms
//! - [`linalg`]: integer matrices, Smith normal form, cokernels
//! - [`openbook`]: open books, Dehn twist actions, Hopf stabilization
//! - [`trisection`]: relative and closed trisections and their moves
//! - [`gluing`]: gluing along boundary open books, the cobordism category
//! - [`lefschetz`]: Lefschetz fibrations and their trisections

pub mod error;
pub mod gluing;
pub mod lefschetz;
pub mod linalg;
pub mod openbook;
pub mod surface;
pub mod trisection;

pub use error::{Error, Result, Violation};
pub use gluing::{
    compose, glue, glue_forced, glued_surface, identity_trisection, morphisms_stably_equivalent, GluePairing,
    TriMorphism,
};
pub use lefschetz::{
    fourmanifold_h1, induced_open_book, lf_to_trisection, lf_to_trisection_with_crossings, stabilize_lefschetz,
    trisection_from_open_book_handles, wrinkle, LefschetzFibration, VanishingCycle, WrinkledRecord,
};
pub use linalg::{cokernel, smith_normal_form, AbelianGroup, IntMatrix, SmithDecomposition};
pub use openbook::{
    compatible, hopf_stabilize, monodromy_action, transvection_matrix, OpenBook, Sign, TwistLetter, Variant,
};
pub use surface::{intersection_form, surface_euler, HomologyClass, Surface};
pub use trisection::{
    connected_sum, stably_equivalent, ClosedTrisection, DerivedReport, RelativeTrisection, Trisection,
};
