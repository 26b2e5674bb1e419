//! The structural predicates on literal forms: C-numbers, S-numbers,
//! zugzwangs, weak zugzwangs and dicotic forms.

use std::sync::LazyLock;

use dashmap::DashMap;

use crate::forms::Game;
use crate::order::{confused_or_less, relation, Relation};

type Table = LazyLock<DashMap<u32, bool>>;

static C_NUMBERS: Table = LazyLock::new(DashMap::new);
static S_NUMBERS: Table = LazyLock::new(DashMap::new);
static ZUGZWANGS: Table = LazyLock::new(DashMap::new);
static DICOTIC: Table = LazyLock::new(DashMap::new);

fn memo(table: &Table, g: Game, f: impl FnOnce(Game) -> bool) -> bool {
    if let Some(v) = table.get(&g.id()) {
        return *v;
    }
    let v = f(g);
    table.insert(g.id(), v);
    v
}

fn all_pairs(g: Game, test: impl Fn(Game, Game) -> bool) -> bool {
    g.left()
        .iter()
        .all(|&l| g.right().iter().all(|&r| test(l, r)))
}

/// Every `G^L ◁ G^R`, hereditarily.
pub fn is_c_number(g: Game) -> bool {
    memo(&C_NUMBERS, g, |g| {
        all_pairs(g, confused_or_less) && g.options().all(is_c_number)
    })
}

/// Every `G^L < G^R`, hereditarily.
pub fn is_s_number(g: Game) -> bool {
    memo(&S_NUMBERS, g, |g| {
        all_pairs(g, |l, r| relation(l, r) == Relation::Less) && g.options().all(is_s_number)
    })
}

/// `G^L < G < G^R` for every option, without looking further down.
pub fn is_weak_zugzwang(g: Game) -> bool {
    g.left().iter().all(|&l| relation(l, g) == Relation::Less)
        && g.right().iter().all(|&r| relation(g, r) == Relation::Less)
}

/// A weak zugzwang whose options are all zugzwangs.
pub fn is_zugzwang(g: Game) -> bool {
    memo(&ZUGZWANGS, g, |g| {
        is_weak_zugzwang(g) && g.options().all(is_zugzwang)
    })
}

/// Both players can move from every nonempty subposition.
pub fn is_dicotic(g: Game) -> bool {
    memo(&DICOTIC, g, |g| {
        g.is_zero()
            || (!g.left().is_empty() && !g.right().is_empty() && g.options().all(is_dicotic))
    })
}
