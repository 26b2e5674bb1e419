//! Domination, reversibility and canonical forms.

use std::sync::LazyLock;

use dashmap::DashMap;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::forms::Game;
use crate::order::{geq, leq};

static CANONICAL: LazyLock<DashMap<u32, Game>> = LazyLock::new(DashMap::new);

/// Drops, one at a time, every option dominated by another remaining option
/// on the same side. Of two equal options exactly one survives.
pub fn remove_dominated(g: Game) -> Game {
    let left = prune(g.left(), geq);
    let right = prune(g.right(), leq);
    if left.len() == g.left().len() && right.len() == g.right().len() {
        return g;
    }
    Game::new(left, right)
}

/// `better(a, b)` is true when `a` dominates `b`.
fn prune(options: &[Game], better: impl Fn(Game, Game) -> bool) -> Vec<Game> {
    let mut keep = options.to_vec();
    let mut i = 0;
    while i < keep.len() {
        let x = keep[i];
        let dominated = keep
            .iter()
            .enumerate()
            .any(|(j, &y)| j != i && better(y, x));
        if dominated {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    keep
}

/// A single reversal available at the root of `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reversal {
    /// Left option `option` reverses through its Right option `through` (`through ≤ G`).
    Left { option: Game, through: Game },
    /// Right option `option` reverses through its Left option `through` (`through ≥ G`).
    Right { option: Game, through: Game },
}

impl Reversal {
    /// Replaces the reversed option by the reversing position's options on the same side.
    pub fn apply(self, g: Game) -> Game {
        match self {
            Reversal::Left { option, through } => Game::new(
                g.left()
                    .iter()
                    .copied()
                    .filter(|&x| x != option)
                    .chain(through.left().iter().copied()),
                g.right().iter().copied(),
            ),
            Reversal::Right { option, through } => Game::new(
                g.left().iter().copied(),
                g.right()
                    .iter()
                    .copied()
                    .filter(|&x| x != option)
                    .chain(through.right().iter().copied()),
            ),
        }
    }
}

/// All reversals available at the root of `g`.
pub fn reversals(g: Game) -> Vec<Reversal> {
    let mut out = Vec::new();
    for &gl in g.left() {
        for &glr in gl.right() {
            if leq(glr, g) {
                out.push(Reversal::Left {
                    option: gl,
                    through: glr,
                });
            }
        }
    }
    for &gr in g.right() {
        for &grl in gr.left() {
            if geq(grl, g) {
                out.push(Reversal::Right {
                    option: gr,
                    through: grl,
                });
            }
        }
    }
    out
}

/// Performs the first available reversal, if any; otherwise returns `g`.
pub fn bypass_reversible(g: Game) -> Game {
    let first_left = g.left().iter().find_map(|&gl| {
        gl.right()
            .iter()
            .find(|&&glr| leq(glr, g))
            .map(|&glr| Reversal::Left {
                option: gl,
                through: glr,
            })
    });
    let step = first_left.or_else(|| {
        g.right().iter().find_map(|&gr| {
            gr.left()
                .iter()
                .find(|&&grl| geq(grl, g))
                .map(|&grl| Reversal::Right {
                    option: gr,
                    through: grl,
                })
        })
    });
    match step {
        Some(r) => r.apply(g),
        None => g,
    }
}

/// Canonical form: options canonicalised first, then domination and
/// reversal alternate until nothing changes. Memoised.
pub fn canonicalize(g: Game) -> Game {
    if let Some(c) = CANONICAL.get(&g.id()) {
        return *c;
    }
    let mut cur = Game::new(
        g.left().iter().map(|&x| canonicalize(x)),
        g.right().iter().map(|&x| canonicalize(x)),
    );
    loop {
        let next = bypass_reversible(remove_dominated(cur));
        if next == cur {
            break;
        }
        cur = next;
    }
    CANONICAL.insert(g.id(), cur);
    CANONICAL.insert(cur.id(), cur);
    cur
}

pub fn is_canonical(g: Game) -> bool {
    canonicalize(g) == g
}

#[derive(Clone, Copy)]
enum Step {
    LeftChild(usize),
    RightChild(usize),
    DropLeft(usize),
    DropRight(usize),
    Reverse(Reversal),
}

/// Reduces `g` to canonical form applying reductions in a random order:
/// at each node any pending step (reducing a child, dropping a dominated
/// option, or bypassing a reversible one) may be chosen next, including
/// root steps taken before the children are canonical. The result must
/// coincide with [`canonicalize`]; this is the uniqueness check.
pub fn reduce_in_random_order<R: Rng + ?Sized>(g: Game, rng: &mut R) -> Game {
    let mut cur = g;
    loop {
        let mut steps = Vec::new();
        for (i, &x) in cur.left().iter().enumerate() {
            if !is_canonical(x) {
                steps.push(Step::LeftChild(i));
            }
            if cur
                .left()
                .iter()
                .enumerate()
                .any(|(j, &y)| j != i && geq(y, x))
            {
                steps.push(Step::DropLeft(i));
            }
        }
        for (i, &x) in cur.right().iter().enumerate() {
            if !is_canonical(x) {
                steps.push(Step::RightChild(i));
            }
            if cur
                .right()
                .iter()
                .enumerate()
                .any(|(j, &y)| j != i && leq(y, x))
            {
                steps.push(Step::DropRight(i));
            }
        }
        steps.extend(reversals(cur).into_iter().map(Step::Reverse));
        let Some(&step) = steps.choose(rng) else {
            return cur;
        };
        let (mut left, mut right) = (cur.left().to_vec(), cur.right().to_vec());
        cur = match step {
            Step::LeftChild(i) => {
                left[i] = reduce_in_random_order(left[i], rng);
                Game::new(left, right)
            }
            Step::RightChild(i) => {
                right[i] = reduce_in_random_order(right[i], rng);
                Game::new(left, right)
            }
            Step::DropLeft(i) => {
                left.remove(i);
                Game::new(left, right)
            }
            Step::DropRight(i) => {
                right.remove(i);
                Game::new(left, right)
            }
            Step::Reverse(r) => r.apply(cur),
        };
    }
}
