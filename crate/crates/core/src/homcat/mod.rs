//! The homotopy category: Hom spaces, composition, idempotent splitting and
//! the structural checks built on them.

mod checks;
pub mod golden;
mod hom;
mod split;
mod table;

pub use checks::{
    ar_triangle_check, identify_indecomposable, irreducible_check, jacobi_annihilates,
    neighbour_recursion_check, serre_duality_check, serre_multiset_check, serre_vertex,
    shift_vertex, ArError, ArReport,
};
pub use hom::{compose, hom_dim, hom_space, jacobi_homotopy, HomError, HomSpace};
pub use split::{
    decompose, end_algebra, is_indecomposable, is_indecomposable_local, split_idempotent,
    DecomposeError, EndAlgebra, Split, SplitError,
};
pub use table::{hom_multiset, HomTable, Multiset, MultisetParseError, TableError};
