//! Closed-form counts over IS_n, exhaustive enumeration, and the identities
//! tying the two together.

pub mod enumerate;
pub mod identities;
pub mod sequences;
pub mod table;
pub mod tally;

pub use enumerate::{
    budget_from_env, check_budget, enumerate, enumerate_within, scan_size, Elements, Filter,
    RankClass, Unranker, BUDGET_ENV, DEFAULT_BUDGET,
};
pub use identities::{
    domain_probabilities, verify_identities, verify_identities_with, IdentityCheck, IdentityReport,
    Method, VerifyOptions, IDENTITY_NAMES,
};
pub use sequences::{defect_count, lah, lah_row, partial_injection_count, rank_count, Sequences};
pub use table::{count_table, count_table_with, CountTable, FIELD_NAMES};
pub use tally::{enumerated_table, tally, Tally};
