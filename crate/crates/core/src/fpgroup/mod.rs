//! Finitely presented groups: words, presentations, abelianization, coset
//! enumeration, Tietze moves and bounded relation derivation.

pub mod coset;
pub mod derive;
pub mod intmat;
pub mod nilpotent;
pub mod parse;
pub mod presentation;
pub mod tietze;
pub mod word;

pub use coset::{coset_enumerate, enumerate_table, CosetOutcome, CosetTable, Limits};
pub use derive::{derive_relation, prove_trivial, Effort, ProofStatus, ProofVerdict};
pub use parse::{parse_relation, parse_word};
pub use presentation::{parse_presentation_json, AbelianInvariants, Presentation};
pub use tietze::{eliminate_generators, simplify};
pub use word::{free_reduce, Letter, Word};
