//! Exact dyadic rationals and the game forms built from them.
//!
//! Three families of forms are distinguished here:
//!
//! * literal integers `(n) = {(n-1)|}` and their conjugates;
//! * literal dyadics `m/2^k`, the unfolded sum of `|m|` copies of
//!   `±1/2^k = {0 | 1/2^(k-1)}` (unnormalised `m` allowed, so `2/2` and `1`
//!   are different forms);
//! * canonical dyadic forms, `{[(m-1)/2^k] | [(m+1)/2^k]}` for odd `m`
//!   with both neighbours renormalised.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::forms::Game;
use crate::reduction::canonicalize;

/// Largest exponent accepted; keeps every scaled numerator inside `i64`.
pub const MAX_EXPONENT: u32 = 62;

/// `num / 2^exp`, normalised so that `exp == 0` or `num` is odd.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: i64,
    exp: u32,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseDyadicError {
    #[error("empty dyadic literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("denominator {0} is not a positive power of two")]
    NotPowerOfTwo(String),
    #[error("exponent {0} exceeds {max}", max = MAX_EXPONENT)]
    ExponentTooLarge(u32),
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, exp: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, exp: 0 };

    /// `num / 2^exp`, normalised.
    ///
    /// # Panics
    /// If `exp > MAX_EXPONENT`.
    pub fn new(mut num: i64, mut exp: u32) -> Dyadic {
        assert!(exp <= MAX_EXPONENT, "dyadic exponent {exp} out of range");
        if num == 0 {
            return Dyadic::ZERO;
        }
        let shift = num.trailing_zeros().min(exp);
        num >>= shift;
        exp -= shift;
        Dyadic { num, exp }
    }

    pub fn integer(n: i64) -> Dyadic {
        Dyadic { num: n, exp: 0 }
    }

    /// `1 / 2^k`
    pub fn unit(k: u32) -> Dyadic {
        Dyadic::new(1, k)
    }

    pub fn numerator(self) -> i64 {
        self.num
    }

    pub fn exponent(self) -> u32 {
        self.exp
    }

    pub fn is_integer(self) -> bool {
        self.exp == 0
    }

    pub fn is_positive(self) -> bool {
        self.num > 0
    }

    /// Numerator over `2^exp` for `exp >= self.exponent()`.
    fn scaled(self, exp: u32) -> i64 {
        let factor = 1i64
            .checked_shl(exp - self.exp)
            .expect("dyadic exponent out of range");
        self.num.checked_mul(factor).expect("dyadic overflow")
    }

    /// Birthday of the canonical form of this value.
    pub fn canonical_birthday(self) -> u32 {
        let a = self.num.unsigned_abs();
        if self.exp == 0 {
            a as u32
        } else {
            (a >> self.exp) as u32 + self.exp + 1
        }
    }

    /// A dyadic strictly between `self` and `other`, or `None` unless
    /// `self < other`.
    ///
    /// Both values are written over the larger exponent `k`, as `n/2^k` and
    /// `2^j·m/2^k`; the result is `(n + 2^j·m) / 2^(k+1)`.
    pub fn between(self, other: Dyadic) -> Option<Dyadic> {
        if self >= other {
            return None;
        }
        let k = self.exp.max(other.exp);
        let n = self.scaled(k);
        let m = other.scaled(k);
        let sum = n.checked_add(m).expect("dyadic overflow");
        Some(Dyadic::new(sum, k + 1))
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let k = self.exp.max(rhs.exp);
        let sum = self
            .scaled(k)
            .checked_add(rhs.scaled(k))
            .expect("dyadic overflow");
        Dyadic::new(sum, k)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let k = self.exp.max(other.exp);
        let a = (self.num as i128) << (k - self.exp);
        let b = (other.num as i128) << (k - other.exp);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u64 << self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Exponent of a denominator written either as `q` (a power of two) or `2^k`.
pub(crate) fn parse_denominator(text: &str) -> Result<u32, ParseDyadicError> {
    let exp = if let Some(k) = text.strip_prefix("2^") {
        k.parse::<u32>()
            .map_err(|_| ParseDyadicError::BadInteger(k.to_string()))?
    } else {
        let q = text
            .parse::<u64>()
            .map_err(|_| ParseDyadicError::BadInteger(text.to_string()))?;
        if q == 0 || !q.is_power_of_two() {
            return Err(ParseDyadicError::NotPowerOfTwo(text.to_string()));
        }
        q.trailing_zeros()
    };
    if exp > MAX_EXPONENT {
        return Err(ParseDyadicError::ExponentTooLarge(exp));
    }
    Ok(exp)
}

/// Accepts `m`, `m/2^k` and `p/q` with `q` a positive power of two.
impl FromStr for Dyadic {
    type Err = ParseDyadicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseDyadicError::Empty);
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num = num
            .parse::<i64>()
            .map_err(|_| ParseDyadicError::BadInteger(num.to_string()))?;
        let exp = match den {
            Some(d) => parse_denominator(d)?,
            None => 0,
        };
        Ok(Dyadic::new(num, exp))
    }
}

/// `(n) = {(n-1)|}` for `n > 0`; conjugates for negative `n`.
pub fn literal_integer_form(n: i64) -> Game {
    let mut g = Game::zero();
    for _ in 0..n.unsigned_abs() {
        g = Game::new([g], []);
    }
    if n < 0 {
        g.conjugate()
    } else {
        g
    }
}

/// `1/2^k = {0 | 1/2^(k-1)}`, `1/2^0 = 1`.
fn unit_form(k: u32) -> Game {
    let mut g = literal_integer_form(1);
    for _ in 0..k {
        g = Game::new([Game::zero()], [g]);
    }
    g
}

/// The unfolded sum of `|m|` copies of `±1/2^k`. `m` need not be odd, and
/// `m = 0` gives the empty sum `0`.
pub fn literal_dyadic_form(m: i64, k: u32) -> Game {
    if k == 0 {
        return literal_integer_form(m);
    }
    let unit = if m < 0 {
        unit_form(k).conjugate()
    } else {
        unit_form(k)
    };
    (0..m.unsigned_abs()).fold(Game::zero(), |acc, _| acc + unit)
}

/// Birthday of [`literal_dyadic_form`] without building it.
pub fn literal_dyadic_birthday(m: i64, k: u32) -> u64 {
    m.unsigned_abs() * (k as u64 + 1)
}

/// The canonical form of `x`.
pub fn canonical_dyadic_form(x: Dyadic) -> Game {
    if x.is_integer() {
        return literal_integer_form(x.num);
    }
    if x.num < 0 {
        return canonical_dyadic_form(-x).conjugate();
    }
    let lower = Dyadic::new(x.num - 1, x.exp);
    let upper = Dyadic::new(x.num + 1, x.exp);
    Game::new(
        [canonical_dyadic_form(lower)],
        [canonical_dyadic_form(upper)],
    )
}

/// If `g` is itself a canonical dyadic form, its value.
///
/// Decided structurally: the shape of the option sets proposes a single
/// candidate value, and the candidate's canonical form must be `g` itself.
pub fn is_canonical_dyadic_member(g: Game) -> Option<Dyadic> {
    let candidate = match (g.left(), g.right()) {
        ([], []) => Dyadic::ZERO,
        ([l], []) => {
            let v = is_canonical_dyadic_member(*l)?;
            if !v.is_integer() || v.num < 0 {
                return None;
            }
            v + Dyadic::ONE
        }
        ([], [r]) => {
            let v = is_canonical_dyadic_member(*r)?;
            if !v.is_integer() || v.num > 0 {
                return None;
            }
            v - Dyadic::ONE
        }
        ([l], [r]) => {
            let (a, b) = (
                is_canonical_dyadic_member(*l)?,
                is_canonical_dyadic_member(*r)?,
            );
            let mid = a.between(b)?;
            if mid.is_integer() {
                return None;
            }
            mid
        }
        _ => return None,
    };
    (canonical_dyadic_form(candidate) == g).then_some(candidate)
}

/// If `g` is a literal dyadic form `m/2^k`, some such `(m, k)`.
///
/// The value `p/2^q` of `g` is found through its canonical form; the
/// candidates are then `(p·2^j, q+j)`, and only those whose literal
/// birthday matches `g`'s are built and compared.
pub fn is_literal_dyadic_member(g: Game) -> Option<(i64, u32)> {
    let value = is_canonical_dyadic_member(canonicalize(g))?;
    if value == Dyadic::ZERO {
        return g.is_zero().then_some((0, 0));
    }
    let b = g.birthday() as u64;
    for j in 0..=g.birthday() {
        let k = value.exp + j;
        if k > MAX_EXPONENT {
            break;
        }
        let Some(m) = value.num.checked_mul(1i64 << j) else {
            break;
        };
        let lb = literal_dyadic_birthday(m, k);
        if lb > b {
            break;
        }
        if lb == b && literal_dyadic_form(m, k) == g {
            return Some((m, k));
        }
    }
    None
}
