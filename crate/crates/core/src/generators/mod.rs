//! Instance factories and brute-force oracles.

mod oracle;
mod paley;
mod random;
mod search;

pub use oracle::{enumerate_tournaments, oracle_charpoly};
pub use paley::{is_prime, legendre, paley};
pub use random::{random_seidel, random_signed_permutation, random_switch, random_tournament};
pub use search::{search, search_ew, SearchConfig, SearchMode, SearchReport};
