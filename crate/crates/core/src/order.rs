//! Outcomes and the game order.
//!
//! `G ≥ H` is decided by the usual pairwise recursion: Right, moving first
//! in `G − H`, has no winning move. His moves there are `G^R − H` and
//! `G − H^L`, so
//!
//! ```text
//! G ≥ H  ⟺  no G^R ≤ H  and  no H^L ≥ G
//! ```
//!
//! which is the same recursion as evaluating `¬W_R(G + conj(H))` but never
//! materialises the sum. Results are memoised per pair of handles.

use std::cmp::Ordering;
use std::fmt;
use std::sync::LazyLock;

use dashmap::DashMap;
use serde::{Serialize, Serializer};

use crate::forms::Game;

/// Outcome class under optimal play.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Left wins whoever starts.
    L,
    /// Right wins whoever starts.
    R,
    /// The first player wins.
    N,
    /// The second player wins.
    P,
}

impl Outcome {
    /// From "Left wins moving first" and "Right wins moving first".
    pub fn from_wins(left_first: bool, right_first: bool) -> Outcome {
        match (left_first, right_first) {
            (true, true) => Outcome::N,
            (true, false) => Outcome::L,
            (false, true) => Outcome::R,
            (false, false) => Outcome::P,
        }
    }

    fn rank(self) -> (u8, u8) {
        // (Left wins moving first, Left wins moving second)
        match self {
            Outcome::L => (1, 1),
            Outcome::N => (1, 0),
            Outcome::P => (0, 1),
            Outcome::R => (0, 0),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Outcome::L => "L",
            Outcome::R => "R",
            Outcome::N => "N",
            Outcome::P => "P",
        }
    }
}

/// The outcome diamond: `L > N > R`, `L > P > R`, `N ‖ P`.
impl PartialOrd for Outcome {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b) = (self.rank(), other.rank());
        match (a.0.cmp(&b.0), a.1.cmp(&b.1)) {
            (x, y) if x == y => Some(x),
            (Ordering::Equal, y) => Some(y),
            (x, Ordering::Equal) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for Outcome {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

/// Exactly one of these holds between any two games.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Greater,
    Less,
    Equal,
    Fuzzy,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Greater => ">",
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Fuzzy => "||",
        }
    }

    pub fn reverse(self) -> Relation {
        match self {
            Relation::Greater => Relation::Less,
            Relation::Less => Relation::Greater,
            r => r,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

static LEFT_WINS_FIRST: LazyLock<DashMap<u32, bool>> = LazyLock::new(DashMap::new);
static RIGHT_WINS_FIRST: LazyLock<DashMap<u32, bool>> = LazyLock::new(DashMap::new);
static GEQ: LazyLock<DashMap<(u32, u32), bool>> = LazyLock::new(DashMap::new);

/// `W_L`: Left, moving first, has a move to a position Right cannot win moving first.
pub fn left_wins_first(g: Game) -> bool {
    if let Some(v) = LEFT_WINS_FIRST.get(&g.id()) {
        return *v;
    }
    let v = g.left().iter().any(|&gl| !right_wins_first(gl));
    LEFT_WINS_FIRST.insert(g.id(), v);
    v
}

/// `W_R`: dual of [`left_wins_first`].
pub fn right_wins_first(g: Game) -> bool {
    if let Some(v) = RIGHT_WINS_FIRST.get(&g.id()) {
        return *v;
    }
    let v = g.right().iter().any(|&gr| !left_wins_first(gr));
    RIGHT_WINS_FIRST.insert(g.id(), v);
    v
}

pub fn outcome(g: Game) -> Outcome {
    Outcome::from_wins(left_wins_first(g), right_wins_first(g))
}

/// `G ≥ H`.
pub fn geq(g: Game, h: Game) -> bool {
    if g == h {
        return true;
    }
    let key = (g.id(), h.id());
    if let Some(v) = GEQ.get(&key) {
        return *v;
    }
    let v = !g.right().iter().any(|&gr| geq(h, gr)) && !h.left().iter().any(|&hl| geq(hl, g));
    GEQ.insert(key, v);
    v
}

pub fn leq(g: Game, h: Game) -> bool {
    geq(h, g)
}

pub fn equal(g: Game, h: Game) -> bool {
    geq(g, h) && geq(h, g)
}

pub fn relation(g: Game, h: Game) -> Relation {
    match (geq(g, h), geq(h, g)) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::Greater,
        (false, true) => Relation::Less,
        (false, false) => Relation::Fuzzy,
    }
}

/// `G ◁ H`: less than or confused with, i.e. `¬(G ≥ H)`.
pub fn confused_or_less(g: Game, h: Game) -> bool {
    !geq(g, h)
}

/// `G ▷ H`: greater than or confused with, i.e. `¬(G ≤ H)`.
pub fn confused_or_greater(g: Game, h: Game) -> bool {
    !geq(h, g)
}

/// Number of memoised comparison entries; exposed for diagnostics.
pub fn comparison_cache_len() -> usize {
    GEQ.len()
}
