//! Modules over the 0-Hecke algebra `H_n(0)`: ribbon and immaculate tableaux,
//! projective and dual immaculate modules, their minimal presentations, and
//! Hom/Ext¹ dimension formulas checked against exact linear algebra.

pub mod composition;
pub mod ext;
pub mod linalg;
pub mod module;
pub mod permutation;
pub mod presentation;
pub mod tableau;
pub mod verify;
