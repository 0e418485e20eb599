//! Design-matrix types, switching, verification predicates and spectral
//! invariants.

mod angles;
mod certificate;
mod score;
mod spectrum;
mod switching;
mod targets;
mod types;
mod verify;

pub use angles::{
    border_charpoly, charpoly_shift_j, main_angles, main_angles_of, main_polynomial, power_sums, to_int_poly,
    to_rat_poly, tournament_charpoly_via_conv, tournament_charpoly_via_walks, walk_sums, MainAngle, MainAngles,
};
pub use certificate::{Certificate, Verdict};
pub use score::{score_profile, ScoreMode};
pub use spectrum::{interlacing_check, Eigenvalue, Spectrum};
pub use switching::{apply_switching, normalize, seidel_from_tournament, tournament_from_seidel};
pub use targets::{identify, spectrum_check, target_charpoly, Family};
pub use types::{Kind, SeidelMatrix, SignedPermutation, Tournament};
pub use verify::{ew_bound, ew_gram, two_squares, two_squares_necessary, verify, Property};
