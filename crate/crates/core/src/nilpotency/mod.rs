//! Invertible Leibniz-derivations and the nilpotency decision built on them.

mod certificate;
mod construct;
mod grading;
mod search;

pub use certificate::{certificate_from_json, certificate_to_json, verify_certificate, VerificationReport};
pub use construct::{construct_semisimple_lder, construct_strict_witness, SemisimpleLder, StrictWitness};
pub use grading::{grading_check, GradingDecomposition, GradingReport, GradingTuple};
pub use search::{
    class_via_lder, find_invertible_element, minimal_invertible_order, nilpotency_by_lcs,
    nilpotency_by_main_theorem, Evidence, InvertibleLder, InvertibleSearch, NilpotencyCertificate,
    SearchParams, Source, Verdict, COEFFICIENT_BOUND, DEFAULT_TRIALS,
};
