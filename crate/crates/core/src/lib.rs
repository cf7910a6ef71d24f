//! Exact computations in the centers of the group algebras of wreath
//! products `G ≀ Sₙ` and in the algebra of invariant `G`-partial
//! permutations that governs their `n`-dependence.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod center;
pub mod characters;
pub mod combinat;
pub mod error;
pub mod family;
pub mod group;
pub mod partial;
pub mod partition;
pub mod symfunc;
pub mod universal;
pub mod wreath;

pub use center::{AlgebraVector, CenterAlgebra};
pub use characters::CharacterTable;
pub use error::{Error, Result};
pub use family::{FamilyKind, PartitionFamily};
pub use partial::{GPartialPermutation, PartialCombination};
pub use group::{BuiltinGroup, ClassId, Elem, FiniteGroup};
pub use partition::Partition;
pub use symfunc::{MultiAlphabetPowerSum, WreathCharacters};
pub use universal::PolynomialInN;
pub use wreath::WreathElement;
