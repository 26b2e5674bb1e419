//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any failed.

mod common;

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cgt_numbers::cli::eval;
use cgt_numbers::dyadic::{
    canonical_dyadic_form, is_canonical_dyadic_member, is_literal_dyadic_member,
    literal_dyadic_form, literal_integer_form,
};
use cgt_numbers::notation::parse_game;
use cgt_numbers::numbers::{
    archimedean_bound, avoidance_witness, enumerate_forms, fitting_contains, is_c_number,
    is_dicotic, is_infinitesimal, is_number, is_s_number, is_weak_zugzwang, is_zugzwang,
    right_gap_pairs_any_shape, scan_infinitesimal_right_gap, scan_weak_zugzwangs, simplest_fitting,
    value_of, FittingQuery, Probe,
};
use cgt_numbers::order::{geq, left_wins_first, relation, right_wins_first};
use cgt_numbers::reduction::{canonicalize, is_canonical, reduce_in_random_order};
use cgt_numbers::rulesets::{HackenbushString, Player, TopplingRow};
use cgt_numbers::{Dyadic, Game, Relation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{golden, named, random_form, render_table, INFINITESIMAL_ROWS, WEAK_ZUGZWANG_ROWS};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

const SUITE_LIMIT: Duration = Duration::from_secs(300);
const MATRIX_LIMIT: Duration = Duration::from_secs(30);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lit(n: i64) -> Game {
    literal_integer_form(n)
}

fn dy(text: &str) -> Dyadic {
    text.parse().unwrap()
}

fn universe() -> Vec<Game> {
    enumerate_forms(3, 2).expect("day three fits the default budget")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn worked_values() -> Outcome {
    for (text, want) in [
        ("{1|2}", "3/2"),
        ("{*|*}", "0"),
        ("1/2+1/2+1/2", "3/2"),
        ("{0|5}", "1"),
    ] {
        let got = eval(parse_game(text).unwrap());
        ensure!(got == want, "eval({text}) = {got}, expected {want}");
    }
    // 3/2 ≅ {{h|1+h}, h+h | 1+{h|1+h}, 1+h+h} with h = {0|1}
    let h = Game::new([Game::zero()], [lit(1)]);
    let a = Game::new([h], [lit(1) + h]);
    let expected = Game::new([a, h + h], [lit(1) + a, lit(1) + h + h]);
    let got = parse_game("1/2+1/2+1/2").unwrap();
    ensure!(got == expected, "literal form of 1/2+1/2+1/2 is {got}");
    Ok(())
}

fn infinitesimal_table() -> Outcome {
    let text = render_table(
        INFINITESIMAL_ROWS,
        &|a, b| {
            relation(parse_game(a).unwrap(), parse_game(b).unwrap())
                .symbol()
                .into()
        },
        &|_, _| Vec::new(),
    );
    ensure!(
        text == golden("infinitesimals.txt"),
        "table differs:\n{text}"
    );
    Ok(())
}

fn weak_zugzwang_table() -> Outcome {
    let text = render_table(
        WEAK_ZUGZWANG_ROWS,
        &|a, b| {
            relation(parse_game(a).unwrap(), parse_game(b).unwrap())
                .symbol()
                .into()
        },
        &|_, g| {
            let value = value_of(g).map_or("none".to_string(), |v| v.to_string());
            vec![
                format!("weak-zugzwang {}", is_weak_zugzwang(g)),
                format!("value {value}"),
            ]
        },
    );
    ensure!(
        text == golden("weak_zugzwangs.txt"),
        "table differs:\n{text}"
    );
    Ok(())
}

fn integer_algebra() -> Outcome {
    for n in -5..=5 {
        for m in -5..=5 {
            let rel = relation(lit(n) + lit(m), lit(n + m));
            ensure!(
                rel == Relation::Equal,
                "({n}) + ({m}) vs ({}): {rel}",
                n + m
            );
        }
    }
    ensure!(
        lit(1) + lit(-1) == Game::new([lit(-1)], [lit(1)]),
        "(1) + (-1) is not {{-1|1}}"
    );
    for n in 1..=5 {
        for k in 1..=5 {
            let g = Game::new([lit(n - 1)], [lit(n + k)]);
            ensure!(
                relation(g, lit(n)) == Relation::Equal,
                "{{{}|{}}} != {n}",
                n - 1,
                n + k
            );
        }
    }
    Ok(())
}

/// `a < b` on dyadics by cross-multiplication.
fn dyadic_less(a: Dyadic, b: Dyadic) -> bool {
    (a.numerator() as i128) << b.exponent() < (b.numerator() as i128) << a.exponent()
}

fn dyadic_algebra() -> Outcome {
    let unit = |k: u32| canonical_dyadic_form(Dyadic::unit(k));
    for k in 1..=6 {
        ensure!(
            relation(unit(k) + unit(k), unit(k - 1)) == Relation::Equal,
            "1/2^{k} + 1/2^{k} != 1/2^{}",
            k - 1
        );
        ensure!(
            relation(
                literal_dyadic_form(1, k) + literal_dyadic_form(1, k),
                literal_dyadic_form(1, k - 1)
            ) == Relation::Equal,
            "literal 1/2^{k} doubled"
        );
    }
    for k in 0..=6 {
        for m in k + 1..=6 {
            ensure!(
                relation(unit(m), unit(k)) == Relation::Less,
                "1/2^{m} not below 1/2^{k}"
            );
        }
    }
    for m in -9..=9i64 {
        for k in 0..=4u32 {
            let c = canonicalize(literal_dyadic_form(m, k));
            ensure!(
                c == canonical_dyadic_form(Dyadic::new(m, k)),
                "[{m}/2^{k}] = {c}"
            );
        }
    }
    let mut r = rng(5);
    for _ in 0..1000 {
        let x = Dyadic::new(r.gen_range(-1000..=1000), r.gen_range(0..=10));
        let y = Dyadic::new(r.gen_range(-1000..=1000), r.gen_range(0..=10));
        let (lo, hi) = if dyadic_less(x, y) { (x, y) } else { (y, x) };
        match lo.between(hi) {
            None => ensure!(lo == hi, "no dyadic between {lo} and {hi}"),
            Some(mid) => {
                ensure!(
                    dyadic_less(lo, mid) && dyadic_less(mid, hi),
                    "{mid} not in ({lo}, {hi})"
                );
                let (a, b, c) = (
                    canonical_dyadic_form(lo),
                    canonical_dyadic_form(mid),
                    canonical_dyadic_form(hi),
                );
                ensure!(
                    relation(a, b) == Relation::Less && relation(b, c) == Relation::Less,
                    "game order disagrees around {mid}"
                );
            }
        }
    }
    Ok(())
}

fn canonical_uniqueness() -> Outcome {
    let mut r = rng(6);
    for _ in 0..500 {
        let g = random_form(&mut r, 3);
        let c = canonicalize(g);
        ensure!(
            relation(c, g) == Relation::Equal,
            "[{g}] = {c} is not equal to it"
        );
        ensure!(c.birthday() <= g.birthday(), "[{g}] = {c} is older");
        for _ in 0..10 {
            let other = reduce_in_random_order(g, &mut r);
            ensure!(
                other == c,
                "{g}: random order gave {other}, canonical is {c}"
            );
        }
    }
    Ok(())
}

fn simplicity_oracle() -> Outcome {
    for g in universe() {
        let fitted = simplest_fitting(g);
        let structural = is_canonical_dyadic_member(canonicalize(g));
        ensure!(
            fitted == structural,
            "{g}: fitting {fitted:?}, canonical {structural:?}"
        );
    }
    Ok(())
}

fn class_identities() -> Outcome {
    let forms = universe();
    let mut zugzwangs = Vec::new();
    for &g in &forms {
        let (c, s, z) = (is_c_number(g), is_s_number(g), is_zugzwang(g));
        ensure!(c == s && s == z, "{g}: C {c}, S {s}, zugzwang {z}");
        if z {
            ensure!(is_number(g), "zugzwang {g} is not a number");
            zugzwangs.push(g);
        }
    }
    let mut r = rng(8);
    for _ in 0..200 {
        let (a, b) = (
            *zugzwangs.choose(&mut r).unwrap(),
            *zugzwangs.choose(&mut r).unwrap(),
        );
        ensure!(is_zugzwang(a + b), "{a} + {b} is not a zugzwang");
        ensure!(is_zugzwang(a.conjugate()), "-{a} is not a zugzwang");
    }
    let star_star = parse_game("{*|*}").unwrap();
    ensure!(
        is_number(star_star) && !is_zugzwang(star_star),
        "{{*|*}} misclassified"
    );

    let half = Game::new([Game::zero()], [lit(1)]);
    ensure!(
        is_literal_dyadic_member(half).is_some() && is_canonical_dyadic_member(half).is_some(),
        "{{0|1}} should be both literal and canonical"
    );
    let one_two = Game::new([lit(1)], [lit(2)]);
    ensure!(
        is_literal_dyadic_member(one_two).is_none()
            && is_canonical_dyadic_member(one_two).is_some(),
        "{{1|2}} should be canonical only"
    );
    let three_halves = parse_game("1/2+1/2+1/2").unwrap();
    ensure!(
        is_literal_dyadic_member(three_halves) == Some((3, 1))
            && is_canonical_dyadic_member(three_halves).is_none(),
        "1/2+1/2+1/2 should be literal only"
    );
    Ok(())
}

fn fitting_examples() -> Outcome {
    let probes = ["0", "1", "-1", "1/2", "-3/4", "3/2", "2", "7/4", "5/8"].map(dy);
    let star = Game::star();
    ensure!(
        probes.iter().all(|&x| !fitting_contains(star, x)),
        "F(*) not empty"
    );
    ensure!(
        simplest_fitting(star).is_none(),
        "F(*) has a simplest element"
    );

    let star_star = parse_game("{*|*}").unwrap();
    ensure!(
        fitting_contains(star_star, Dyadic::ZERO),
        "0 not in F({{*|*}})"
    );
    ensure!(
        simplest_fitting(star_star) == Some(Dyadic::ZERO),
        "simplest of F({{*|*}})"
    );

    let one_two = parse_game("{1|2}").unwrap();
    ensure!(
        fitting_contains(one_two, dy("3/2")),
        "3/2 not in F({{1|2}})"
    );
    ensure!(
        !fitting_contains(one_two, dy("1")) && !fitting_contains(one_two, dy("2")),
        "F({{1|2}}) too wide"
    );

    ensure!(
        probes.iter().all(|&x| fitting_contains(Game::zero(), x)),
        "F(0) misses a probe"
    );

    // Every candidate up to the birthday cap fails on one side only, so the
    // search can only end through the cap.
    let g = parse_game("{0|^}").unwrap();
    let q = FittingQuery::new(g);
    for n in -3..=3 {
        for k in 0..=3 {
            let x = Dyadic::new(n, k);
            if x.canonical_birthday() <= g.birthday() {
                ensure!(
                    q.probe(x) != Probe::Empty && q.probe(x) != Probe::Inside,
                    "probe {x} on {{0|^}}"
                );
            }
        }
    }
    ensure!(q.simplest().is_none(), "F({{0|^}}) not empty");
    Ok(())
}

fn archimedean_sweep() -> Outcome {
    for g in universe() {
        let n = archimedean_bound(g);
        ensure!(
            relation(lit(-n), g) == Relation::Less && relation(g, lit(n)) == Relation::Less,
            "{g} not within ±{n}"
        );
        for &l in g.left() {
            ensure!(!geq(l, g), "{l} ≥ {g}");
        }
        for &r in g.right() {
            ensure!(!geq(g, r), "{g} ≥ {r}");
        }
    }
    Ok(())
}

fn number_avoidance() -> Outcome {
    let non_numbers: Vec<Game> = universe().into_iter().filter(|&g| !is_number(g)).collect();
    let mut r = rng(11);
    let mut checked = 0;
    while checked < 200 {
        let g = *non_numbers.choose(&mut r).unwrap();
        let x = canonical_dyadic_form(Dyadic::new(r.gen_range(-8..=8), r.gen_range(0..=2)));
        if !left_wins_first(g + x) {
            continue;
        }
        let w = avoidance_witness(g, x).map_err(|e| format!("{g} + {x}: {e}"))?;
        ensure!(g.left().contains(&w), "{w} is not a Left option of {g}");
        ensure!(!right_wins_first(w + x), "{w} + {x} is not a Left win");
        checked += 1;
    }
    Ok(())
}

fn scans() -> Outcome {
    let zugzwangs = scan_weak_zugzwangs(3, 2).map_err(|e| e.to_string())?;
    let gaps = scan_infinitesimal_right_gap(3, 2).map_err(|e| e.to_string())?;
    let any_shape = right_gap_pairs_any_shape(&universe());
    let canonical = any_shape.iter().filter(|(g, _)| is_canonical(*g)).count();
    println!(
        "    note: with several options per side {} pairs qualify, {canonical} with canonical G",
        any_shape.len()
    );
    ensure!(
        zugzwangs.is_empty(),
        "non-number weak zugzwangs: {zugzwangs:?}"
    );
    ensure!(
        gaps.is_empty(),
        "positive infinitesimals below their Right option: {gaps:?}"
    );
    Ok(())
}

fn random_players<R: Rng>(r: &mut R, len: usize) -> Vec<Player> {
    (0..len)
        .map(|_| if r.gen() { Player::Left } else { Player::Right })
        .collect()
}

fn rulesets() -> Outcome {
    let lrl: TopplingRow = "LRL".parse().unwrap();
    ensure!(value_of(lrl.to_form()) == Some(dy("1/2")), "LRL is not 1/2");
    let expected = parse_game("{0,{{|0},0|0,{0|}}|{0|}}").unwrap();
    ensure!(
        lrl.to_form() == expected,
        "LRL literal form is {}",
        lrl.to_form()
    );
    let hb = |s: &str| s.parse::<HackenbushString>().unwrap().to_form();
    ensure!(value_of(hb("B")) == Some(Dyadic::ONE), "B is not 1");
    ensure!(value_of(hb("BR")) == Some(dy("1/2")), "BR is not 1/2");

    let mut r = rng(13);
    for _ in 0..200 {
        let stalks = (0..r.gen_range(0..=3))
            .map(|_| {
                let len = r.gen_range(1..=4);
                random_players(&mut r, len)
            })
            .collect();
        let pos = HackenbushString::new(stalks);
        ensure!(
            pos.swapped().to_form() == pos.to_form().conjugate(),
            "swap of {pos}"
        );
        let len = r.gen_range(0..=7);
        let row = TopplingRow::new(random_players(&mut r, len));
        ensure!(
            row.swapped().to_form() == row.to_form().conjugate(),
            "swap of {row}"
        );
    }
    Ok(())
}

fn infinitesimals() -> Outcome {
    let bounds: Vec<(Game, Game)> = (0..=6)
        .map(|k| {
            let u = canonical_dyadic_form(Dyadic::unit(k));
            (u.conjugate(), u)
        })
        .collect();
    for g in universe() {
        let inf = is_infinitesimal(g);
        if is_dicotic(g) {
            ensure!(inf, "dicotic {g} not infinitesimal");
        }
        let sampled = bounds.iter().all(|&(lo, hi)| {
            relation(lo, g) == Relation::Less && relation(g, hi) == Relation::Less
        });
        ensure!(
            inf == sampled,
            "{g}: stops say {inf}, sampled bounds say {sampled}"
        );
    }
    let tiny = named("tiny1");
    ensure!(
        is_infinitesimal(tiny) && !is_dicotic(tiny),
        "tiny1 misclassified"
    );
    Ok(())
}

fn day_two_matrix() -> (Duration, Result<usize, String>) {
    let forms = match enumerate_forms(2, 2) {
        Ok(f) => f,
        Err(e) => return (Duration::ZERO, Err(e.to_string())),
    };
    let start = Instant::now();
    let mut count = 0;
    for &a in &forms {
        for &b in &forms {
            let _ = relation(a, b);
            count += 1;
        }
    }
    (start.elapsed(), Ok(count))
}

fn run(check: fn() -> Outcome) -> Outcome {
    panic::catch_unwind(check).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    })
}

fn main() -> ExitCode {
    let suite_start = Instant::now();
    // Timed first, while the comparison memo is cold.
    let (matrix_time, matrix) = day_two_matrix();

    let criteria: [Criterion; 14] = [
        ("worked values", worked_values),
        ("infinitesimal option comparisons", infinitesimal_table),
        ("weak zugzwang examples", weak_zugzwang_table),
        ("integer algebra", integer_algebra),
        ("dyadic algebra", dyadic_algebra),
        ("canonical form uniqueness", canonical_uniqueness),
        ("simplicity oracle on day 3", simplicity_oracle),
        ("class identities", class_identities),
        ("fitting set examples", fitting_examples),
        ("archimedean and option sweeps", archimedean_sweep),
        ("number avoidance", number_avoidance),
        ("open-problem scans", scans),
        ("rulesets", rulesets),
        ("infinitesimals", infinitesimals),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run(check);
        let status = if result.is_ok() { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {name} ({:.2?})",
            i + 1,
            start.elapsed()
        );
        if let Err(msg) = result {
            failures += 1;
            println!("    {msg}");
        }
    }

    let total = suite_start.elapsed();
    let perf = match matrix {
        Ok(n) if matrix_time <= MATRIX_LIMIT && total <= SUITE_LIMIT => Ok(n),
        Ok(n) => Err(format!(
            "{n} comparisons in {matrix_time:.2?}, suite {total:.2?}"
        )),
        Err(e) => Err(e),
    };
    let status = if perf.is_ok() { "PASS" } else { "FAIL" };
    println!(
        "criterion 15 {status} performance (day-2 matrix {matrix_time:.2?}, suite {total:.2?})"
    );
    if let Err(msg) = perf {
        failures += 1;
        println!("    {msg}");
    }

    println!("{} of 15 criteria passed", 15 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
