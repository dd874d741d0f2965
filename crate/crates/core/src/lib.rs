//! Superpermutations: strings over the alphabet `{1, …, n}` that contain every
//! permutation of that alphabet as a contiguous substring.
//!
//! The crate is split by concern:
//!
//! * [`perm`]: permutations, the circular-shift representation and the two
//!   rankings (circular-shift counting order and lexicographic order).
//! * [`builder`]: the canonical recursive superpermutation `M_n` and the
//!   ordered list of permutations it contains.
//! * [`segments`]: the nested segments of `M_n` whose symbol relabelings keep
//!   a string a superpermutation.
//! * [`family`]: counting, indexing, enumerating and sampling the family of
//!   distinct superpermutations of length `1! + 2! + … + n!` obtained from
//!   those relabelings.
//! * [`verifier`]: linear-time superpermutation check and statistics.
//! * [`search`]: exact minimal-superpermutation search for `n ≤ 4`.
//! * [`text`]: the line-oriented text encoding used by the CLI and fixtures.

pub mod builder;
mod error;
pub mod family;
pub mod math;
pub mod perm;
pub mod search;
pub mod segments;
pub mod text;
pub mod verifier;

pub use builder::{build_m, build_m_with_cap, check_prop1, expand_q, overlap_concat, perm_sequence};
pub use builder::{PermOccurrence, SymbolString, DEFAULT_BUILD_CAP};
pub use error::{Error, Result};
pub use family::{count_family, eligible_slots, EligibleSlot, Family, FamilyCoordinate};
pub use perm::{CircShiftRep, Perm, PermRank, MAX_N};
pub use search::{search_minimal, OverlapGraph, SearchResult};
pub use segments::{apply_relabel, segment_table, SegmentTable, SymbolRelabel};
pub use text::TextEncoding;
pub use verifier::{multiplicity_profile, symbol_stats, verify, SymbolStats, VerifyReport};
