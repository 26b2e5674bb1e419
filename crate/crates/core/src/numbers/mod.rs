//! Numbers and their relatives on literal forms.
//!
//! A form is a number when it equals some dyadic, which happens exactly when
//! its fitting set is nonempty; the value is then the simplest member.
//! Around that sit the structural classes (C-numbers, S-numbers, zugzwangs,
//! weak zugzwangs, dicotic forms), stops and infinitesimals, and the small
//! exhaustive universes used to probe the open questions.

mod classes;
mod explore;
mod fitting;
mod stops;

use serde::Serialize;

pub use classes::{is_c_number, is_dicotic, is_s_number, is_weak_zugzwang, is_zugzwang};
pub use explore::{
    distinct_values, enumerate_forms, enumerate_forms_with_budget, is_positive_infinitesimal,
    right_gap_pairs, right_gap_pairs_any_shape, scan_infinitesimal_right_gap, scan_weak_zugzwangs,
    weak_zugzwang_counterexamples, EnumerationError, DEFAULT_FORM_BUDGET,
};
pub use fitting::{fitting_contains, is_number, simplest_fitting, value_of, FittingQuery, Probe};
pub use stops::{
    archimedean_bound, archimedean_brackets, avoidance_witness, is_infinitesimal, left_stop,
    right_stop, stops, AvoidanceError,
};

use crate::dyadic::Dyadic;
use crate::forms::Game;
use crate::order::{outcome, Outcome};

/// Everything the classifiers say about one literal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub outcome: Outcome,
    pub birthday: u32,
    pub is_number: bool,
    pub value: Option<Dyadic>,
    pub is_c_number: bool,
    pub is_s_number: bool,
    pub is_zugzwang: bool,
    pub is_weak_zugzwang: bool,
    pub is_dicotic: bool,
    pub is_infinitesimal: bool,
}

pub fn classify(g: Game) -> Classification {
    let value = value_of(g);
    Classification {
        outcome: outcome(g),
        birthday: g.birthday(),
        is_number: value.is_some(),
        value,
        is_c_number: is_c_number(g),
        is_s_number: is_s_number(g),
        is_zugzwang: is_zugzwang(g),
        is_weak_zugzwang: is_weak_zugzwang(g),
        is_dicotic: is_dicotic(g),
        is_infinitesimal: is_infinitesimal(g),
    }
}
