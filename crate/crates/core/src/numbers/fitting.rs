//! Fitting sets and the simplicity search.
//!
//! The fitting set of `G` is `{x dyadic : G^L ◁ x ◁ G^R for every option}`.
//! A Left option `L` rules out `x` exactly when `L ≥ x`, which then also
//! rules out everything below `x`; dually an upper witness `R` with `x ≥ R`
//! rules out everything above. So membership is a convex condition and the
//! simplest member can be found by walking the dyadic tree from 0.

use std::sync::LazyLock;

use dashmap::DashMap;

use crate::dyadic::{canonical_dyadic_form, Dyadic};
use crate::forms::Game;
use crate::order::geq;

static VALUES: LazyLock<DashMap<u32, Option<Dyadic>>> = LazyLock::new(DashMap::new);

/// The constraint system of a fitting set: the subject's Left options
/// bound candidates from below, its Right options from above.
#[derive(Clone, Copy, Debug)]
pub struct FittingQuery {
    subject: Game,
}

/// Where a candidate dyadic sits relative to a fitting set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Probe {
    /// The candidate belongs to the set.
    Inside,
    /// Some Left option is `≥` the candidate; every member lies above it.
    TooLow,
    /// The candidate is `≥` some Right option; every member lies below it.
    TooHigh,
    /// Both at once: the set is empty.
    Empty,
}

impl FittingQuery {
    pub fn new(subject: Game) -> FittingQuery {
        FittingQuery { subject }
    }

    pub fn subject(&self) -> Game {
        self.subject
    }

    pub fn lower_witnesses(&self) -> &'static [Game] {
        self.subject.left()
    }

    pub fn upper_witnesses(&self) -> &'static [Game] {
        self.subject.right()
    }

    pub fn probe(&self, x: Dyadic) -> Probe {
        let form = canonical_dyadic_form(x);
        let low = self.lower_witnesses().iter().any(|&l| geq(l, form));
        let high = self.upper_witnesses().iter().any(|&r| geq(form, r));
        match (low, high) {
            (false, false) => Probe::Inside,
            (true, false) => Probe::TooLow,
            (false, true) => Probe::TooHigh,
            (true, true) => Probe::Empty,
        }
    }

    pub fn contains(&self, x: Dyadic) -> bool {
        self.probe(x) == Probe::Inside
    }

    /// The member of least canonical birthday, or `None` for an empty set.
    ///
    /// Integers are tried outward from 0, then the bracketing interval is
    /// halved. The search stops as empty when a candidate fails on both
    /// sides, or when candidates become older than the subject: a nonempty
    /// fitting set's simplest member equals the subject, and no canonical
    /// form is older than a form equal to it.
    pub fn simplest(&self) -> Option<Dyadic> {
        let cap = self.subject.birthday();
        let step = match self.probe(Dyadic::ZERO) {
            Probe::Inside => return Some(Dyadic::ZERO),
            Probe::Empty => return None,
            Probe::TooLow => 1,
            Probe::TooHigh => -1,
        };
        let (mut lo, mut hi) = match self.walk_integers(step, cap) {
            Walk::Found(x) => return Some(x),
            Walk::Empty => return None,
            Walk::Bracket(lo, hi) => (lo, hi),
        };
        loop {
            let mid = lo.between(hi).expect("bracket is ordered");
            if mid.canonical_birthday() > cap {
                return None;
            }
            match self.probe(mid) {
                Probe::Inside => return Some(mid),
                Probe::Empty => return None,
                Probe::TooLow => lo = mid,
                Probe::TooHigh => hi = mid,
            }
        }
    }

    /// Steps through integers away from 0 in direction `step` until one
    /// fits, the set is shown empty, or the opposite constraint starts
    /// failing, which brackets the simplest member between two integers.
    fn walk_integers(&self, step: i64, cap: u32) -> Walk {
        let mut n = 0i64;
        loop {
            n += step;
            if n.unsigned_abs() > cap as u64 {
                return Walk::Empty;
            }
            let x = Dyadic::integer(n);
            match (self.probe(x), step > 0) {
                (Probe::Inside, _) => return Walk::Found(x),
                (Probe::Empty, _) => return Walk::Empty,
                (Probe::TooLow, true) | (Probe::TooHigh, false) => continue,
                (Probe::TooHigh, true) => return Walk::Bracket(Dyadic::integer(n - 1), x),
                (Probe::TooLow, false) => return Walk::Bracket(x, Dyadic::integer(n + 1)),
            }
        }
    }
}

enum Walk {
    Found(Dyadic),
    Empty,
    Bracket(Dyadic, Dyadic),
}

pub fn fitting_contains(g: Game, x: Dyadic) -> bool {
    FittingQuery::new(g).contains(x)
}

pub fn simplest_fitting(g: Game) -> Option<Dyadic> {
    FittingQuery::new(g).simplest()
}

/// The dyadic value of `g` when it is a number. Memoised.
pub fn value_of(g: Game) -> Option<Dyadic> {
    if let Some(v) = VALUES.get(&g.id()) {
        return *v;
    }
    let v = simplest_fitting(g);
    VALUES.insert(g.id(), v);
    v
}

/// Whether `g` equals some dyadic, decided by its fitting set.
pub fn is_number(g: Game) -> bool {
    value_of(g).is_some()
}
