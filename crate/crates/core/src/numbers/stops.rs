//! Stops, infinitesimals, the Archimedean bound and number avoidance.

use std::sync::LazyLock;

use dashmap::DashMap;
use thiserror::Error;

use super::fitting::{is_number, value_of};
use crate::dyadic::{literal_integer_form, Dyadic};
use crate::forms::Game;
use crate::order::{geq, left_wins_first};

static LEFT_STOPS: LazyLock<DashMap<u32, Dyadic>> = LazyLock::new(DashMap::new);
static RIGHT_STOPS: LazyLock<DashMap<u32, Dyadic>> = LazyLock::new(DashMap::new);

/// The value reached when Left moves first and both players keep playing
/// until a number appears.
pub fn left_stop(g: Game) -> Dyadic {
    if let Some(v) = value_of(g) {
        return v;
    }
    if let Some(v) = LEFT_STOPS.get(&g.id()) {
        return *v;
    }
    // A form with no Left option is a number, so this side is nonempty.
    let v = g
        .left()
        .iter()
        .map(|&gl| right_stop(gl))
        .max()
        .expect("non-number with no Left option");
    LEFT_STOPS.insert(g.id(), v);
    v
}

pub fn right_stop(g: Game) -> Dyadic {
    if let Some(v) = value_of(g) {
        return v;
    }
    if let Some(v) = RIGHT_STOPS.get(&g.id()) {
        return *v;
    }
    let v = g
        .right()
        .iter()
        .map(|&gr| left_stop(gr))
        .min()
        .expect("non-number with no Right option");
    RIGHT_STOPS.insert(g.id(), v);
    v
}

pub fn stops(g: Game) -> (Dyadic, Dyadic) {
    (left_stop(g), right_stop(g))
}

/// Both stops are zero.
pub fn is_infinitesimal(g: Game) -> bool {
    left_stop(g) == Dyadic::ZERO && right_stop(g) == Dyadic::ZERO
}

/// `n = b(G) + 1`, for which `-n < G < n`.
pub fn archimedean_bound(g: Game) -> i64 {
    g.birthday() as i64 + 1
}

/// Literal integer forms `(-n, n)` for [`archimedean_bound`].
pub fn archimedean_brackets(g: Game) -> (Game, Game) {
    let n = archimedean_bound(g);
    (literal_integer_form(-n), literal_integer_form(n))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AvoidanceError {
    #[error("the second component is not a number")]
    NotANumber,
    #[error("the first component is a number")]
    GameIsNumber,
    #[error("Left has no winning first move in the sum")]
    LeftCannotWin,
    #[error("no Left option of the first component wins: number avoidance fails")]
    NoWitness,
}

/// For a non-number `g` and a number `x` such that Left, moving first, wins
/// `g + x`, a Left option `g^L` with `g^L + x ≥ 0`.
pub fn avoidance_witness(g: Game, x: Game) -> Result<Game, AvoidanceError> {
    if !is_number(x) {
        return Err(AvoidanceError::NotANumber);
    }
    if is_number(g) {
        return Err(AvoidanceError::GameIsNumber);
    }
    if !left_wins_first(g + x) {
        return Err(AvoidanceError::LeftCannotWin);
    }
    g.left()
        .iter()
        .copied()
        .find(|&gl| geq(gl + x, Game::zero()))
        .ok_or(AvoidanceError::NoWitness)
}
