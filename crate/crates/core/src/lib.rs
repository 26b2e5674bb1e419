//! Short partizan games as literal forms.
//!
//! [`forms`] interns game trees, [`order`] decides outcomes and the game
//! order, [`reduction`] computes canonical forms, [`dyadic`] holds exact
//! dyadic values and the forms built from them, and [`numbers`] decides
//! which literal forms are numbers and which structural classes they fall
//! in. [`rulesets`] encodes Hackenbush strings and Toppling Dominoes rows,
//! and [`notation`] reads and writes the brace notation used by the `cgt`
//! command-line tool ([`cli`]).

pub mod cli;
pub mod dyadic;
pub mod forms;
pub mod notation;
pub mod numbers;
pub mod order;
pub mod reduction;
pub mod rulesets;

pub use dyadic::Dyadic;
pub use forms::Game;
pub use order::{Outcome, Relation};
