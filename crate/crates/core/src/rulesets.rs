//! Concrete positions encoded as literal forms: Blue–Red Hackenbush strings
//! and Toppling Dominoes rows.
//!
//! Text syntax is case-insensitive on input and uppercase on output.
//! Hackenbush positions are stalks separated by single spaces, each read
//! bottom to top over `B`/`R` (`"BR BB"`). Toppling rows read left to right
//! over `L`/`R` (`"LRL"`).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::forms::Game;

/// Owner of an edge or domino. Blue edges and `L` dominoes belong to Left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RulesetParseError {
    #[error("unexpected character `{ch}` at position {pos}")]
    BadChar { ch: char, pos: usize },
    #[error("empty stalk at position {pos}")]
    EmptyStalk { pos: usize },
}

/// A sum of Hackenbush stalks, each listed from the ground up.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HackenbushString {
    stalks: Vec<Vec<Player>>,
}

impl HackenbushString {
    /// Empty stalks are dropped.
    pub fn new(stalks: Vec<Vec<Player>>) -> HackenbushString {
        HackenbushString {
            stalks: stalks.into_iter().filter(|s| !s.is_empty()).collect(),
        }
    }

    pub fn stalks(&self) -> &[Vec<Player>] {
        &self.stalks
    }

    /// Every edge recoloured.
    pub fn swapped(&self) -> HackenbushString {
        HackenbushString {
            stalks: self
                .stalks
                .iter()
                .map(|s| s.iter().map(|p| p.other()).collect())
                .collect(),
        }
    }

    /// The unfolded sum of the stalk forms.
    pub fn to_form(&self) -> Game {
        self.stalks
            .iter()
            .map(|s| stalk_form(s))
            .fold(Game::zero(), |acc, g| acc + g)
    }
}

/// Cutting edge `i` removes it and everything above, leaving the first `i`.
fn stalk_form(stalk: &[Player]) -> Game {
    let mut prefixes = Vec::with_capacity(stalk.len() + 1);
    prefixes.push(Game::zero());
    for len in 1..=stalk.len() {
        let options = |who: Player| {
            (0..len)
                .filter(move |&i| stalk[i] == who)
                .map(|i| prefixes[i])
                .collect::<Vec<_>>()
        };
        let g = Game::new(options(Player::Left), options(Player::Right));
        prefixes.push(g);
    }
    prefixes[stalk.len()]
}

impl FromStr for HackenbushString {
    type Err = RulesetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Ok(HackenbushString { stalks: Vec::new() });
        }
        let mut stalks = Vec::new();
        let mut pos = 0;
        for part in s.split(' ') {
            if part.is_empty() {
                return Err(RulesetParseError::EmptyStalk { pos });
            }
            let stalk = part
                .chars()
                .enumerate()
                .map(|(i, ch)| match ch.to_ascii_uppercase() {
                    'B' => Ok(Player::Left),
                    'R' => Ok(Player::Right),
                    _ => Err(RulesetParseError::BadChar { ch, pos: pos + i }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            stalks.push(stalk);
            pos += part.len() + 1;
        }
        Ok(HackenbushString { stalks })
    }
}

impl fmt::Display for HackenbushString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self
            .stalks
            .iter()
            .map(|s| {
                s.iter()
                    .map(|p| if *p == Player::Left { 'B' } else { 'R' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join(" ");
        f.write_str(&text)
    }
}

/// A row of dominoes, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TopplingRow {
    pieces: Vec<Player>,
}

impl TopplingRow {
    pub fn new(pieces: Vec<Player>) -> TopplingRow {
        TopplingRow { pieces }
    }

    pub fn pieces(&self) -> &[Player] {
        &self.pieces
    }

    pub fn swapped(&self) -> TopplingRow {
        TopplingRow {
            pieces: self.pieces.iter().map(|p| p.other()).collect(),
        }
    }

    /// Toppling domino `i` to the left removes it and everything on its
    /// left; to the right, everything from it rightwards. What remains is a
    /// single shorter row.
    pub fn to_form(&self) -> Game {
        let mut memo = HashMap::new();
        row_form(&self.pieces, 0, self.pieces.len(), &mut memo)
    }
}

fn row_form(
    pieces: &[Player],
    start: usize,
    end: usize,
    memo: &mut HashMap<(usize, usize), Game>,
) -> Game {
    if let Some(&g) = memo.get(&(start, end)) {
        return g;
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, &piece) in pieces.iter().enumerate().take(end).skip(start) {
        let side = if piece == Player::Left {
            &mut left
        } else {
            &mut right
        };
        side.push((i + 1, end));
        side.push((start, i));
    }
    let mut build = |ranges: Vec<(usize, usize)>| {
        ranges
            .into_iter()
            .map(|(a, b)| row_form(pieces, a, b, memo))
            .collect::<Vec<_>>()
    };
    let (l, r) = (build(left), build(right));
    let g = Game::new(l, r);
    memo.insert((start, end), g);
    g
}

impl FromStr for TopplingRow {
    type Err = RulesetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let pieces = s
            .chars()
            .enumerate()
            .map(|(pos, ch)| match ch.to_ascii_uppercase() {
                'L' => Ok(Player::Left),
                'R' => Ok(Player::Right),
                _ => Err(RulesetParseError::BadChar { ch, pos }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TopplingRow { pieces })
    }
}

impl fmt::Display for TopplingRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self
            .pieces
            .iter()
            .map(|p| if *p == Player::Left { 'L' } else { 'R' })
            .collect();
        f.write_str(&text)
    }
}
