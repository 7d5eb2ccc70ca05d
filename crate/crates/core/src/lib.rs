//! Antipodal faces and ridge covers of the d-cube.
//!
//! The crate is organised bottom-up:
//!
//! - [`face`]: faces in `{0,1,X}` coordinate form, antipodes, containment,
//!   intersection, antipodality degree, enumeration and counting.
//! - [`cover`]: cover sets and covers, self-antipodality with witnesses,
//!   verification reports, asterisk sets and the cover text format.
//! - [`constructions`]: explicit low-antipodality covers.
//! - [`search`]: budgeted exhaustive search for covers that avoid antipodal
//!   pairs, plus the small exhaustive scans used to certify impossibility.
//! - [`oracle`]: brute-force reference implementations used to cross-check
//!   the fast paths.
//! - [`acceptance`]: the end-to-end criteria run by `antipode-lab selftest`
//!   and the `acceptance` test target.
//! - [`cli`]: the command-line front end.

pub mod acceptance;
pub mod cli;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod face;
pub mod oracle;
pub mod search;

pub use constructions::{
    asterisk_ridge_cover, asterisk_vertices, block_lengths, doubly_covered_count,
    pair_split_ridge_cover, sharp_facet_cover, BlockLengths, ConstructionReport,
};
pub use cover::{
    asterisk_set, classify_six_ridge_set, cover_report, k_of_d, set_self_antipodality,
    AntipodalPair, AntipodalWitness, Cover, CoverSet, SixRidgeShape, VerificationReport,
};
pub use error::{Error, Result};
pub use face::{count_faces, enumerate_faces, format_face, parse_face, Face, FacePair};
pub use search::{
    enumerate_antipode_free_sets, exists_cover, probe_d5, verify_c3_edge_lemma,
    verify_no_four_disjoint_special_sets, Outcome, SearchOptions, SearchProblem, SearchResult,
};

/// Version tag carried by every JSON document the crate emits.
pub const SCHEMA: &str = "antipode-lab/1";
