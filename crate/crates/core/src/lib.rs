//! Graded matrix factorizations of the ADE singularities, their homotopy
//! categories, and the stability condition on them.

pub mod catalog;
pub mod gring;
pub mod homcat;
pub mod linalg;
pub mod mf;
pub mod quiver;
pub mod rat;
pub mod report;
pub mod stability;
