//! Literal game forms.
//!
//! Every form is hash-consed into a process-wide table, so two forms are
//! identical (`≅`) exactly when they share a handle. Nodes are never freed;
//! a [`Game`] is a `Copy` reference into the table and reading its options
//! takes no lock.
//!
//! Option sets are kept sorted by a deterministic structural order (see
//! [`structural_cmp`]), which makes iteration and printing independent of the
//! order in which forms happened to be interned.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};
use std::sync::{LazyLock, Mutex};

use dashmap::DashMap;

/// Interned node. Children are stored in structural order.
pub struct Node {
    id: u32,
    left: Box<[Game]>,
    right: Box<[Game]>,
    birthday: u32,
}

/// Handle to an interned literal game form.
#[derive(Clone, Copy)]
pub struct Game(&'static Node);

type InternKey = (Box<[u32]>, Box<[u32]>);

struct Interner {
    table: Mutex<HashMap<InternKey, Game>>,
    next_id: AtomicU32,
}

static INTERNER: LazyLock<Interner> = LazyLock::new(|| Interner {
    table: Mutex::new(HashMap::new()),
    next_id: AtomicU32::new(0),
});

static CONJUGATES: LazyLock<DashMap<u32, Game>> = LazyLock::new(DashMap::new);
static SUMS: LazyLock<DashMap<(u32, u32), Game>> = LazyLock::new(DashMap::new);

fn sorted_unique(options: impl IntoIterator<Item = Game>) -> Vec<Game> {
    let mut v: Vec<Game> = options.into_iter().collect();
    v.sort_by(structural_cmp);
    v.dedup();
    v
}

impl Game {
    /// Interns `{ left | right }`. Duplicate options collapse.
    pub fn new(
        left: impl IntoIterator<Item = Game>,
        right: impl IntoIterator<Item = Game>,
    ) -> Game {
        let left = sorted_unique(left);
        let right = sorted_unique(right);
        let key: InternKey = (
            left.iter().map(|g| g.id()).collect(),
            right.iter().map(|g| g.id()).collect(),
        );
        let mut table = INTERNER.table.lock().expect("intern table poisoned");
        if let Some(&g) = table.get(&key) {
            return g;
        }
        let birthday = left
            .iter()
            .chain(right.iter())
            .map(|g| g.birthday() + 1)
            .max()
            .unwrap_or(0);
        let id = INTERNER.next_id.fetch_add(1, AtomicOrdering::Relaxed);
        let node: &'static Node = Box::leak(Box::new(Node {
            id,
            left: left.into_boxed_slice(),
            right: right.into_boxed_slice(),
            birthday,
        }));
        let g = Game(node);
        table.insert(key, g);
        g
    }

    pub fn zero() -> Game {
        Game::new([], [])
    }

    /// `* = {0|0}`
    pub fn star() -> Game {
        let z = Game::zero();
        Game::new([z], [z])
    }

    /// `↑ = {0|*}`
    pub fn up() -> Game {
        Game::new([Game::zero()], [Game::star()])
    }

    /// `↓ = {*|0}`
    pub fn down() -> Game {
        Game::up().conjugate()
    }

    /// Interning handle; unique per structurally distinct form within a process.
    pub fn id(self) -> u32 {
        self.0.id
    }

    pub fn left(self) -> &'static [Game] {
        &self.0.left
    }

    pub fn right(self) -> &'static [Game] {
        &self.0.right
    }

    pub fn options(self) -> impl Iterator<Item = Game> {
        self.left().iter().chain(self.right().iter()).copied()
    }

    /// Height of the literal game tree; 0 for the zero game.
    pub fn birthday(self) -> u32 {
        self.0.birthday
    }

    pub fn is_zero(self) -> bool {
        self.left().is_empty() && self.right().is_empty()
    }

    /// Recursively swaps the roles of Left and Right.
    pub fn conjugate(self) -> Game {
        if let Some(g) = CONJUGATES.get(&self.id()) {
            return *g;
        }
        let g = Game::new(
            self.right().iter().map(|g| g.conjugate()),
            self.left().iter().map(|g| g.conjugate()),
        );
        CONJUGATES.insert(self.id(), g);
        CONJUGATES.insert(g.id(), self);
        g
    }

    /// Fully unfolded disjunctive sum `{G+H^L, G^L+H | G+H^R, G^R+H}`.
    pub fn sum(self, other: Game) -> Game {
        if self.is_zero() {
            return other;
        }
        if other.is_zero() {
            return self;
        }
        let key = if self.id() <= other.id() {
            (self.id(), other.id())
        } else {
            (other.id(), self.id())
        };
        if let Some(g) = SUMS.get(&key) {
            return *g;
        }
        let left = other
            .left()
            .iter()
            .map(|&hl| self.sum(hl))
            .chain(self.left().iter().map(|&gl| gl.sum(other)))
            .collect::<Vec<_>>();
        let right = other
            .right()
            .iter()
            .map(|&hr| self.sum(hr))
            .chain(self.right().iter().map(|&gr| gr.sum(other)))
            .collect::<Vec<_>>();
        let g = Game::new(left, right);
        SUMS.insert(key, g);
        g
    }

    /// Every position reachable by a finite move sequence, including `self`.
    pub fn followers(self) -> BTreeSet<Game> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(g) = stack.pop() {
            if seen.insert(g) {
                stack.extend(g.options());
            }
        }
        seen
    }
}

/// Deterministic total order on literal forms: birthday first, then the
/// left option lists lexicographically, then the right option lists.
/// Returns `Equal` only for identical forms.
pub fn structural_cmp(a: &Game, b: &Game) -> Ordering {
    if a.id() == b.id() {
        return Ordering::Equal;
    }
    a.birthday()
        .cmp(&b.birthday())
        .then_with(|| lex_cmp(a.left(), b.left()))
        .then_with(|| lex_cmp(a.right(), b.right()))
}

fn lex_cmp(xs: &[Game], ys: &[Game]) -> Ordering {
    for (x, y) in xs.iter().zip(ys) {
        match structural_cmp(x, y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    xs.len().cmp(&ys.len())
}

impl PartialEq for Game {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Game {}

impl Hash for Game {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state);
    }
}

impl PartialOrd for Game {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural order, not the game order; see [`crate::order`] for `≥`.
impl Ord for Game {
    fn cmp(&self, other: &Self) -> Ordering {
        structural_cmp(self, other)
    }
}

impl Add for Game {
    type Output = Game;
    fn add(self, rhs: Game) -> Game {
        self.sum(rhs)
    }
}

impl Sub for Game {
    type Output = Game;
    fn sub(self, rhs: Game) -> Game {
        self.sum(rhs.conjugate())
    }
}

impl Neg for Game {
    type Output = Game;
    fn neg(self) -> Game {
        self.conjugate()
    }
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::print_form(*self, false))
    }
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::print_form(*self, true))
    }
}
