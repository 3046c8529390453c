//! Standard tableaux and the expansions of `s_A` in the Schur, fundamental
//! and monomial bases.

mod expansion;
mod extreme;
mod fexp;
mod schur;
mod syt;

pub use expansion::{Basis, Expansion, QsymExpansion, SymExpansion};
pub use extreme::{extreme_filling_antidominant, extreme_filling_dominant};
pub use fexp::{descent_counts, f_expansion, f_support, f_to_m, is_f_multiplicity_free, m_expansion, FSupport};
pub use schur::{schur_expansion, schur_expansion_kostka, schur_expansion_lr, schur_support};
pub use syt::{enumerate_syt, StandardTableau, SytIter};
