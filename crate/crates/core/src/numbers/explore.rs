//! Exhaustive small universes of forms and the open-problem scans.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use rayon::prelude::*;
use thiserror::Error;

use super::classes::is_weak_zugzwang;
use super::fitting::is_number;
use super::stops::is_infinitesimal;
use crate::forms::Game;
use crate::order::{relation, Relation};
use crate::reduction::canonicalize;

/// Largest universe [`enumerate_forms`] will build.
pub const DEFAULT_FORM_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("enumeration of day {day} with at most {max_options} options needs {needed} forms, budget is {budget}")]
    BudgetExceeded {
        day: u32,
        max_options: usize,
        needed: u64,
        budget: u64,
    },
}

type UniverseCache = Mutex<HashMap<(u32, usize), Arc<Vec<Game>>>>;

static UNIVERSES: LazyLock<UniverseCache> = LazyLock::new(|| Mutex::new(HashMap::new()));

fn subsets_up_to(items: &[Game], max: usize) -> Vec<Vec<Game>> {
    fn go(
        items: &[Game],
        start: usize,
        size: usize,
        cur: &mut Vec<Game>,
        out: &mut Vec<Vec<Game>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i + 1, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 0..=max.min(items.len()) {
        go(items, 0, size, &mut Vec::new(), &mut out);
    }
    out
}

fn subset_count(n: u64, max: usize) -> u64 {
    let mut total = 0u64;
    let mut c = 1u64;
    for i in 0..=(max as u64).min(n) {
        total = total.saturating_add(c);
        c = c.saturating_mul(n - i) / (i + 1);
    }
    total
}

/// Distinct canonical values of a universe, in structural order.
pub fn distinct_values(forms: &[Game]) -> Vec<Game> {
    forms
        .par_iter()
        .map(|&g| canonicalize(g))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Day 0 is `{0}`. Day `d` is every `{A | B}` where `A` and `B` are sets of
/// at most `max_options` representatives, one canonical form per distinct
/// value found on day `d - 1`. Earlier days are included automatically.
pub fn enumerate_forms(day: u32, max_options: usize) -> Result<Vec<Game>, EnumerationError> {
    enumerate_forms_with_budget(day, max_options, DEFAULT_FORM_BUDGET)
}

pub fn enumerate_forms_with_budget(
    day: u32,
    max_options: usize,
    budget: u64,
) -> Result<Vec<Game>, EnumerationError> {
    universe(day, max_options, budget).map(|u| u.as_ref().clone())
}

fn universe(day: u32, max_options: usize, budget: u64) -> Result<Arc<Vec<Game>>, EnumerationError> {
    let cached = UNIVERSES
        .lock()
        .expect("universe cache poisoned")
        .get(&(day, max_options))
        .cloned();
    if let Some(u) = cached {
        let needed = u.len() as u64;
        if needed > budget {
            return Err(EnumerationError::BudgetExceeded {
                day,
                max_options,
                needed,
                budget,
            });
        }
        return Ok(u);
    }
    let forms = if day == 0 {
        vec![Game::zero()]
    } else {
        let previous = universe(day - 1, max_options, budget)?;
        let reps = distinct_values(&previous);
        let per_side = subset_count(reps.len() as u64, max_options);
        let needed = per_side.saturating_mul(per_side);
        if needed > budget {
            return Err(EnumerationError::BudgetExceeded {
                day,
                max_options,
                needed,
                budget,
            });
        }
        let sides = subsets_up_to(&reps, max_options);
        let mut forms = Vec::with_capacity(needed as usize);
        for l in &sides {
            for r in &sides {
                forms.push(Game::new(l.iter().copied(), r.iter().copied()));
            }
        }
        forms
    };
    let forms = Arc::new(forms);
    UNIVERSES
        .lock()
        .expect("universe cache poisoned")
        .insert((day, max_options), forms.clone());
    Ok(forms)
}

/// Weak zugzwangs that are not numbers. Results of every scan are sorted
/// structurally.
pub fn scan_weak_zugzwangs(day: u32, max_options: usize) -> Result<Vec<Game>, EnumerationError> {
    Ok(weak_zugzwang_counterexamples(&universe(
        day,
        max_options,
        DEFAULT_FORM_BUDGET,
    )?))
}

pub fn weak_zugzwang_counterexamples(forms: &[Game]) -> Vec<Game> {
    let mut found: Vec<_> = forms
        .par_iter()
        .copied()
        .filter(|&g| is_weak_zugzwang(g) && !is_number(g))
        .collect();
    found.sort();
    found
}

pub fn is_positive_infinitesimal(g: Game) -> bool {
    is_infinitesimal(g) && relation(g, Game::zero()) == Relation::Greater
}

/// Pairs `(G, G^R)` with `G = {G^L | G^R}` a positive infinitesimal having
/// exactly one option on each side and `G < G^R`.
///
/// With several Right options the question degenerates: adding a dominated
/// option such as `1` to `↑ = {0|*}` gives `{0|*,1} = ↑ < 1`. Those forms are
/// reported by [`right_gap_pairs_any_shape`].
pub fn scan_infinitesimal_right_gap(
    day: u32,
    max_options: usize,
) -> Result<Vec<(Game, Game)>, EnumerationError> {
    Ok(right_gap_pairs(&universe(
        day,
        max_options,
        DEFAULT_FORM_BUDGET,
    )?))
}

pub fn right_gap_pairs(forms: &[Game]) -> Vec<(Game, Game)> {
    let mut found: Vec<_> = forms
        .par_iter()
        .copied()
        .filter(|g| g.left().len() == 1 && g.right().len() == 1)
        .filter_map(|g| {
            let r = g.right()[0];
            (is_positive_infinitesimal(g) && relation(g, r) == Relation::Less).then_some((g, r))
        })
        .collect();
    found.sort();
    found
}

/// Like [`right_gap_pairs`] but over forms with any number of options.
pub fn right_gap_pairs_any_shape(forms: &[Game]) -> Vec<(Game, Game)> {
    let mut found: Vec<_> = forms
        .par_iter()
        .copied()
        .filter(|&g| is_positive_infinitesimal(g))
        .flat_map_iter(|g| {
            g.right()
                .iter()
                .filter(move |&&r| relation(g, r) == Relation::Less)
                .map(move |&r| (g, r))
        })
        .collect();
    found.sort();
    found
}
