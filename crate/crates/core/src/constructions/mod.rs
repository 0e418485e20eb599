//! The constructive equivalences: EW ↔ tournament conversions, switching
//! normal forms of `S²`-type matrices, and the conference completion chain.

mod blocks;
mod completion;
mod conversions;
mod square_form;

pub use blocks::{enumerate_33psd, psd_33_patterns, psd_block_normalize};
pub use completion::{complete_step, complete_to_conference, delete_principal};
pub use conversions::{ew_to_tournament, hadamard_from_conference, switching_form, tournament_to_ew};
pub use square_form::{
    normalize_four_block, sm_form_check, square_form, square_matrix, stage_of, BlockRows, SquareFormClass, Stage,
};
