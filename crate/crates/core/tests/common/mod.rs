#![allow(dead_code)]

use cgt_numbers::notation::{parse_game, print_form};
use cgt_numbers::Game;
use rand::Rng;

/// Named games used by the comparison tables, as notation.
pub const NAMED: &[(&str, &str)] = &[
    ("0", "0"),
    ("*", "*"),
    ("^", "^"),
    ("^*", "{0,*|0}"),
    ("^^", "{0|{0,*|0}}"),
    ("^^*", "{0|^}"),
    ("tiny1", "{0|{0|-1}}"),
    ("G1", "{^|1/2}"),
    ("G2", "{{0|{0,*|0}}|1/4}"),
    ("G3", "{{0|^}|1/8}"),
    ("G4", "{{0|{0|-1}}|1/16}"),
];

pub const INFINITESIMAL_ROWS: &[&str] = &["*", "^", "^*", "^^", "^^*", "tiny1"];
pub const WEAK_ZUGZWANG_ROWS: &[&str] = &["G1", "G2", "G3", "G4"];

pub fn named(name: &str) -> Game {
    let (_, text) = NAMED.iter().find(|(n, _)| *n == name).expect("known name");
    parse_game(text).unwrap()
}

fn label(g: Game) -> String {
    NAMED
        .iter()
        .find(|(_, text)| parse_game(text).unwrap() == g)
        .map(|(n, _)| n.to_string())
        .unwrap_or_else(|| print_form(g, true))
}

/// One line per option: `<row> <L|R> <option> <relation> <row>`, where the
/// relation is computed by `cmp` on notation strings. Extra lines come from
/// `extra` (row name, game).
pub fn render_table(
    rows: &[&str],
    cmp: &dyn Fn(&str, &str) -> String,
    extra: &dyn Fn(&str, Game) -> Vec<String>,
) -> String {
    let mut out = String::new();
    for name in rows {
        let g = named(name);
        out.push_str(&format!("{name} = {}\n", print_form(g, true)));
    }
    for name in rows {
        let g = named(name);
        let text = print_form(g, true);
        for (side, opts) in [("L", g.left()), ("R", g.right())] {
            for &o in opts {
                let rel = cmp(&print_form(o, true), &text);
                out.push_str(&format!("{name} {side} {} {rel} {name}\n", label(o)));
            }
        }
        for line in extra(name, g) {
            out.push_str(&format!("{name} {line}\n"));
        }
    }
    out
}

pub fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("golden file")
}

/// A random literal form of birthday at most `depth`, with up to three
/// options per side.
pub fn random_form<R: Rng>(rng: &mut R, depth: u32) -> Game {
    if depth == 0 {
        return Game::zero();
    }
    let side = |rng: &mut R| {
        let n = rng.gen_range(0..=3);
        (0..n)
            .map(|_| {
                let d = rng.gen_range(0..depth);
                random_form(rng, d)
            })
            .collect::<Vec<_>>()
    };
    let left = side(rng);
    let right = side(rng);
    Game::new(left, right)
}
