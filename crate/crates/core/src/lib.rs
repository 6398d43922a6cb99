//! Finite BCK, MV and Wajsberg algebras and the binary block codes they
//! generate.
//!
//! Algebras are Cayley tables over `0..k` and are verified on construction.
//! From an algebra you can get its code, its order skeleton and its
//! conversions. For a given order you can enumerate one algebra per order
//! type. Going the other way, a square code can be attached to an algebra
//! (or rejected with a witness), and a code that cannot be attached can be
//! embedded into a larger algebra's code.

pub mod algebra;
pub mod attach;
pub mod axioms;
pub mod code;
pub mod convert;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod iso;
pub mod poset;
pub mod table;

pub use algebra::{Algebra, BckAlgebra, FiniteAlgebra, Kind, MvAlgebra, WajsbergAlgebra};
pub use attach::{
    attach_bck, attach_mv, attach_wajsberg, attach_wajsberg_all, embed_code, embed_code_all,
    validate_code_matrix, AttachmentResult, CodeMatrix, EmbeddingResult, RejectionKind,
    RejectionReason,
};
pub use axioms::{verify_bck, verify_mv, verify_wajsberg, AxiomId, AxiomReport, Violation};
pub use code::{
    code_equivalent, code_from_algebra, code_poset, codeword_leq, cut_function, cut_subset,
    distance, min_hamming_distance, mv_sum_indicator, skeleton, BlockCode, Codeword, Skeleton,
};
pub use convert::{
    bck_to_mv, bck_to_wajsberg, convert, mv_to_bck, mv_to_wajsberg, wajsberg_to_bck,
    wajsberg_to_mv,
};
pub use enumerate::{
    chain_wajsberg, enumerate_wajsberg, enumerate_wajsberg_with_limit, factorizations, pi,
    product_wajsberg, FactorMultiset, ProductAlgebra,
};
pub use error::{Error, Result};
pub use iso::{
    all_poset_isomorphisms, poset_isomorphism, relabel_wajsberg, transport_structure,
    wajsberg_isomorphic, OrderIsomorphism,
};
pub use poset::{Poset, PosetViolation};
pub use table::{CayleyTable, Element};
