//! The acceptance suite: one check per shipped criterion, shared by
//! the `verify` subcommand and the integration test target. Every
//! tolerance is exact; every expected value is pinned here.

use crate::args::Args;
use crate::run::execute;
use clap::Parser;
use equipart_core::bounds::bounds_report;
use equipart_core::dickson::{
    admissible_fh, index_formula_bound, lower_bound, minimal_d_star, DEFAULT_MONOMIAL_BUDGET,
};
use equipart_core::dihedral::{DihedralElement, HomologyClass, TwistedClass};
use equipart_core::dynamics::{Sign, SolutionState};
use equipart_core::jacobian::{
    block_diagonal_sign, build_configuration, det_sign, sign_matrix, RowOrder,
};
use equipart_core::orbits::{
    generating_classes, obstruction_delta0, obstruction_delta1, Conventions, EpsilonConvention,
};
use equipart_core::words::{
    binomial, brute, count_primitive_balanced, count_primitive_circular, count_star_primitive,
    primitive_parity_law,
};
use std::time::{Duration, Instant};

pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

pub struct Criterion {
    pub id: u32,
    pub name: &'static str,
    pub run: fn() -> Result<(), String>,
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "(8,5,2) pipeline: classes, signs, omega, verdict, exact Delta",
            run: criterion_852,
        },
        Criterion {
            id: 2,
            name: "(5,3) pipeline: classes, stabilizer, compressed cycle, verdict",
            run: criterion_53,
        },
        Criterion {
            id: 3,
            name: "state machine reproduces the sixteen-type cycle verbatim",
            run: criterion_16_cycle,
        },
        Criterion {
            id: 4,
            name: "counting suite: formulas vs enumeration, identities, parity laws",
            run: criterion_counting,
        },
        Criterion {
            id: 5,
            name: "2d = 3j parity: orbit counts, closed form, admissible cases",
            run: criterion_delta0,
        },
        Criterion {
            id: 6,
            name: "closed-form cross-check and the 3*2^q - 1 equalities",
            run: criterion_closed_form,
        },
        Criterion {
            id: 7,
            name: "ideal-membership suite and the closing bounds table",
            run: criterion_dickson,
        },
        Criterion {
            id: 8,
            name: "convention-flip invariance and determinant cross-routes",
            run: criterion_invariance,
        },
        Criterion {
            id: 9,
            name: "novel (14,9,2) output: counters present, deterministic bytes",
            run: criterion_novel,
        },
    ]
}

pub fn run_all() -> Vec<CriterionResult> {
    criteria()
        .into_iter()
        .map(|c| CriterionResult {
            id: c.id,
            name: c.name,
            outcome: (c.run)(),
        })
        .collect()
}

fn check(cond: bool, detail: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(String::from(detail))
    }
}

fn within(budget: Duration, start: Instant, what: &str) -> Result<(), String> {
    let spent = start.elapsed();
    check(
        spent <= budget,
        &format!("{what} took {spent:?}, budget {budget:?}"),
    )
}

fn cli(args: &[&str]) -> Result<String, String> {
    let mut argv = vec!["equipart"];
    argv.extend_from_slice(args);
    let parsed = Args::try_parse_from(argv).map_err(|e| e.to_string())?;
    execute(&parsed).map_err(|e| e.to_string())
}

// --- criterion 1 -----------------------------------------------------

fn criterion_852() -> Result<(), String> {
    let start = Instant::now();
    let outcome =
        obstruction_delta1(5, Conventions::default()).map_err(|e| e.to_string())?;

    check(outcome.classes.len() == 3, "expected exactly 3 classes")?;
    let canonicals: Vec<String> = outcome
        .classes
        .iter()
        .map(|c| c.canonical.word.to_string())
        .collect();
    check(
        canonicals == ["AAABBB", "AABABB", "ABABAB"],
        &format!("canonical words were {canonicals:?}"),
    )?;
    let components: Vec<usize> = outcome
        .classes
        .iter()
        .map(|c| c.component_count())
        .collect();
    check(components == [2, 4, 2], &format!("components were {components:?}"))?;

    // Signed-permutation anchors: (-1)^(7+19) = +1 and (-1)^(7+30) = -1.
    check(
        outcome.classes[0].eta == Some(Sign::Plus)
            && outcome.classes[2].eta == Some(Sign::Minus),
        "determinant signs must be +1 for AAABBB and -1 for ABABAB",
    )?;

    let counters = outcome.counters.ok_or("twisted case must carry counters")?;
    check(
        counters.omega_mod4() == 2,
        &format!("omega(1) = {} must be 2 mod 4", counters.omega()),
    )?;
    check(
        outcome.total == HomologyClass::Twisted(TwistedClass::XAB),
        "total must be the order-2 element Xab = 2 Xca",
    )?;
    check(outcome.admissible, "(8,5,2) must be admissible")?;
    check(lower_bound(5, 2) == 8, "lower bound must be 8")?;

    let text = cli(&["obstruction", "--d", "8", "--j", "5"])?;
    check(
        text.contains("Delta(5,2) = 8"),
        "report must print the exact value Delta(5,2) = 8",
    )?;

    // The same facts straight off the machine-readable output.
    let json = cli(&["obstruction", "--d", "8", "--j", "5", "--format", "json"])?;
    let value: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    let classes = value["classes"].as_array().ok_or("classes missing")?;
    check(classes.len() == 3, "JSON must carry 3 classes")?;
    let summary: Vec<(Option<&str>, Option<u64>, Option<i64>)> = classes
        .iter()
        .map(|c| {
            (
                c["canonical"].as_str(),
                c["components"].as_u64(),
                c["eta"].as_i64(),
            )
        })
        .collect();
    check(
        summary
            == [
                (Some("AAABBB"), Some(2), Some(1)),
                (Some("AABABB"), Some(4), None),
                (Some("ABABAB"), Some(2), Some(-1)),
            ],
        &format!("JSON class summary was {summary:?}"),
    )?;
    check(
        value["counters"]["omega_mod4"].as_u64() == Some(2)
            && value["total"].as_str() == Some("Xab")
            && value["admissible"].as_bool() == Some(true)
            && value["delta_exact"].as_u64() == Some(8),
        "JSON verdict fields must pin the exact result",
    )?;
    within(Duration::from_secs(5), start, "criterion 1")
}

// --- criterion 2 -----------------------------------------------------

fn criterion_53() -> Result<(), String> {
    let outcome =
        obstruction_delta1(3, Conventions::default()).map_err(|e| e.to_string())?;
    check(outcome.classes.len() == 2, "expected exactly 2 classes")?;

    let four = &outcome.classes[0];
    check(
        four.canonical.to_string() == "AABB++" && four.component_count() == 4,
        "first class must be AABB++ with 4 components",
    )?;
    check(
        four.stabilizer.elements()
            == [DihedralElement::IDENTITY, DihedralElement::SWAP],
        "stabilizer of the four-component class must be {e, g}",
    )?;
    check(
        four.contribution.token() == "Y",
        "the four-component class must contribute Y",
    )?;
    check(!outcome.total.is_zero(), "total obstruction must be nonzero")?;
    check(outcome.admissible, "(5,3,2) must be admissible")?;

    // Compressed cycle of the chosen component, up to rotation.
    let cycle: Vec<String> = four.circles[0]
        .compressed_cycle()
        .iter()
        .map(|w| w.to_string())
        .collect();
    let expected = ["BAAB+-", "BBAA++", "ABBA-+", "AABB++"];
    check(cycle.len() == 4, "compressed cycle must have 4 entries")?;
    let matches_rotation = (0..4).any(|r| (0..4).all(|i| cycle[(i + r) % 4] == expected[i]));
    check(
        matches_rotation,
        &format!("cycle {cycle:?} must be a rotation of {expected:?}"),
    )
}

// --- criterion 3 -----------------------------------------------------

fn criterion_16_cycle() -> Result<(), String> {
    let expected = [
        "B(++)aab", "(+-)bAab", "(+-)baAb", "(+-)baaB", "B(+-)baa", "(++)bBaa", "(++)bbAa",
        "(++)bbaA", "A(++)bba", "(-+)aBba", "(-+)abBa", "(-+)abbA", "A(-+)abb", "(++)aAbb",
        "(++)aaBb", "(++)aabB",
    ];
    let mut state: SolutionState = expected[0].parse().map_err(|e| format!("{e}"))?;
    for (i, want) in expected.iter().enumerate().skip(1) {
        state = state.step();
        let got = state.to_string();
        check(got == *want, &format!("step {i}: got {got}, want {want}"))?;
    }
    state = state.step();
    check(
        state.to_string() == expected[0],
        "sixteen steps must close the cycle",
    )
}

// --- criterion 4 -----------------------------------------------------

fn criterion_counting() -> Result<(), String> {
    let start = Instant::now();
    use equipart_core::words::{count_balanced_circular, count_primitive_circular as p};
    for n in 1..=8u64 {
        check(
            count_balanced_circular(n) == brute::balanced_circular(n) as u128,
            &format!("R({n}) disagrees with enumeration"),
        )?;
        check(
            p(n) == brute::primitive_circular(n) as u128,
            &format!("P({n}) disagrees with enumeration"),
        )?;
        check(
            count_primitive_balanced(n) == brute::primitive_balanced(n) as u128,
            &format!("Q({n}) disagrees with enumeration"),
        )?;
    }
    for m in 1..=12u64 {
        let p_sum: u128 = (1..=m)
            .filter(|k| m % k == 0)
            .map(|k| k as u128 * count_primitive_circular(k))
            .sum();
        check(p_sum == 1u128 << m, &format!("divisor identity for P at {m}"))?;
        let q_sum: u128 = (1..=m)
            .filter(|k| m % k == 0)
            .map(|k| 2 * k as u128 * count_primitive_balanced(k))
            .sum();
        check(
            q_sum == binomial(2 * m, m),
            &format!("divisor identity for Q at {m}"),
        )?;
    }
    for m in 1..=8u64 {
        check(
            count_star_primitive(m) as u128 % 2 == count_primitive_circular(2 * m) % 2,
            &format!("A({m}) parity law"),
        )?;
    }
    for k in 1..=12u64 {
        check(
            (count_primitive_circular(2 * k) % 2 == 1) == primitive_parity_law(k),
            &format!("square-free parity pattern at {k}"),
        )?;
    }
    within(Duration::from_secs(10), start, "criterion 4")
}

// --- criterion 5 -----------------------------------------------------

fn criterion_delta0() -> Result<(), String> {
    for m in 1..=6u32 {
        let outcome = obstruction_delta0(m).map_err(|e| e.to_string())?;
        check(
            outcome.orbit_count as u128 == binomial(2 * m as u64 - 1, m as u64 - 1),
            &format!("orbit count at m = {m}"),
        )?;
        check(
            outcome.admissible == [1, 2, 4].contains(&m),
            &format!("parity verdict at m = {m}"),
        )?;
        check(
            !outcome.notes.is_empty(),
            "the alternative-reading note must be reported",
        )?;
    }
    // Consistency with the known exact values at m = 1 and m = 2.
    let one = obstruction_delta0(1).map_err(|e| e.to_string())?;
    check(
        one.d == 3 && lower_bound(2, 2) == 3,
        "m = 1 must meet Delta(2,2) = 3",
    )?;
    let two = obstruction_delta0(2).map_err(|e| e.to_string())?;
    check(
        two.d == 6 && lower_bound(4, 2) == 6,
        "m = 2 must meet the tight 3j/2 value",
    )?;
    let text = cli(&["obstruction", "--d", "3", "--j", "2"])?;
    check(
        text.contains("admissible") && text.contains("Delta(2,2) = 3"),
        "the (3,2) report must state the exact value",
    )
}

// --- criterion 6 -----------------------------------------------------

fn criterion_closed_form() -> Result<(), String> {
    use equipart_core::orbits::closed_form_z2z2;
    // Direct enumeration against the divisor sums, unordered.
    for (j, m) in [(3u32, 1u64), (7, 2), (11, 3)] {
        let outcome =
            obstruction_delta1(j, Conventions::default()).map_err(|e| e.to_string())?;
        let (o1, o2) = closed_form_z2z2(m);
        let HomologyClass::Trivial(total) = outcome.total else {
            return Err(format!("j = {j} must be a trivial-coefficient case"));
        };
        let z_coefficient = total.x as u64;
        let y_coefficient = (total.y ^ total.x) as u64;
        let mut direct = [y_coefficient, z_coefficient];
        let mut closed = [o1 % 2, o2 % 2];
        direct.sort_unstable();
        closed.sort_unstable();
        check(
            direct == closed,
            &format!("coordinate pair mismatch at j = {j}: {direct:?} vs {closed:?}"),
        )?;
    }
    // Equalities Delta(2^{q+1} - 1, 2) = 3 * 2^q - 1, q <= 3 (q = 3
    // through the closed form alone).
    for q in 1..=3u32 {
        let j = (1u64 << (q + 1)) - 1;
        let report = bounds_report(j, 2, DEFAULT_MONOMIAL_BUDGET);
        let target = 3 * (1u64 << q) - 1;
        check(
            report.exact() == Some(target),
            &format!("Delta({j},2) must close at {target}"),
        )?;
    }
    Ok(())
}

// --- criterion 7 -----------------------------------------------------

fn criterion_dickson() -> Result<(), String> {
    let start = Instant::now();
    let budget = DEFAULT_MONOMIAL_BUDGET;
    check(
        minimal_d_star(5, 2, budget) == Ok(9),
        "minimal certified d for (5,2) must be 9",
    )?;
    check(
        minimal_d_star(2, 2, budget) == Ok(4),
        "minimal certified d for (2,2) must be 4",
    )?;
    // Monotone in d on every tested triple.
    for k in 1..=3u32 {
        for j in 1..=6u32 {
            let mut seen = false;
            for d in 1..=40u32 {
                let ok = admissible_fh(d, j, k, budget).map_err(|e| e.to_string())?;
                check(!seen || ok, &format!("monotonicity broken at ({d},{j},{k})"))?;
                seen |= ok;
            }
        }
    }
    // Computed minimal degree never beats the closed formula the wrong
    // way.
    for k in 1..=4u32 {
        for j in 1..=15u32 {
            let computed = minimal_d_star(j, k, budget).map_err(|e| e.to_string())?;
            check(
                u64::from(computed) <= index_formula_bound(u64::from(j), k),
                &format!("minimal d exceeds the formula at ({j},{k})"),
            )?;
            check(
                lower_bound(u64::from(j), k) <= u64::from(computed),
                &format!("lower bound exceeds minimal d at ({j},{k})"),
            )?;
        }
    }
    // The closing bounds table, eight cells.
    let closing: [(u64, u32, u64, u64); 8] = [
        (7, 3, 17, 19),
        (6, 3, 14, 18),
        (15, 3, 35, 39),
        (14, 3, 33, 38),
        (7, 4, 27, 35),
        (6, 4, 23, 34),
        (15, 4, 57, 71),
        (14, 4, 53, 70),
    ];
    for (j, k, lower, upper) in closing {
        check(
            lower_bound(j, k) == lower,
            &format!("closing-table lower bound at ({j},{k})"),
        )?;
        check(
            index_formula_bound(j, k) == upper,
            &format!("closing-table upper bound at ({j},{k})"),
        )?;
    }
    for k in [3u32, 4] {
        let json = cli(&["table", "--k", &k.to_string(), "--format", "json"])?;
        let value: serde_json::Value =
            serde_json::from_str(&json).map_err(|e| e.to_string())?;
        let rows = value["rows"].as_array().ok_or("table JSON must have rows")?;
        for (j, kk, lower, upper) in closing.iter().filter(|c| c.1 == k) {
            let row = rows
                .iter()
                .find(|r| r["j"].as_u64() == Some(*j))
                .ok_or(format!("table row for j = {j} missing"))?;
            check(
                row["lower"].as_u64() == Some(*lower)
                    && row["index_formula"].as_u64() == Some(*upper),
                &format!("table cell mismatch at ({j},{kk})"),
            )?;
        }
    }
    within(Duration::from_secs(30), start, "criterion 7")
}

// --- criterion 8 -----------------------------------------------------

fn criterion_invariance() -> Result<(), String> {
    let flips = [
        (
            1,
            Conventions {
                epsilon: EpsilonConvention::ThreeQuarterTurn,
                row_order: RowOrder::Standard,
            },
        ),
        (
            1,
            Conventions {
                epsilon: EpsilonConvention::QuarterTurn,
                row_order: RowOrder::Reversed,
            },
        ),
        (
            2,
            Conventions {
                epsilon: EpsilonConvention::ThreeQuarterTurn,
                row_order: RowOrder::Reversed,
            },
        ),
    ];
    for j in [3u32, 5, 7, 9] {
        let reference =
            obstruction_delta1(j, Conventions::default()).map_err(|e| e.to_string())?;
        for (flip_count, conv) in flips {
            let flipped = obstruction_delta1(j, conv).map_err(|e| e.to_string())?;
            check(
                reference.admissible == flipped.admissible,
                &format!("verdict changed under a convention flip at j = {j}"),
            )?;
            if let (Some(a), Some(b)) = (reference.counters, flipped.counters) {
                let expected = if flip_count % 2 == 1 {
                    (4 - a.omega_mod4()) % 4
                } else {
                    a.omega_mod4()
                };
                check(
                    b.omega_mod4() == expected,
                    &format!("omega sign map violated at j = {j}"),
                )?;
                // The magnitude class {0}, {1,3}, {2} never moves.
                let magnitude = |x: u8| x.min(4 - x) % 4;
                check(
                    magnitude(a.omega_mod4()) == magnitude(b.omega_mod4()),
                    &format!("|omega mod 4| class changed at j = {j}"),
                )?;
            }
        }
    }
    for m in 1..=6u32 {
        let a = obstruction_delta0(m).map_err(|e| e.to_string())?;
        let b = obstruction_delta0(m).map_err(|e| e.to_string())?;
        check(
            a.admissible == b.admissible,
            "type-parity verdicts must be stable",
        )?;
    }
    // Determinant via elimination equals the block-diagonal route on
    // every two-component class.
    for j in [5u32, 7, 9] {
        for class in generating_classes(j, Conventions::default()).map_err(|e| e.to_string())? {
            if class.component_count() != 2 {
                continue;
            }
            let config = build_configuration(&class.canonical).map_err(|e| e.to_string())?;
            for order in [RowOrder::Standard, RowOrder::Reversed] {
                let direct = det_sign(&sign_matrix(&config, order).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let blocks = block_diagonal_sign(&config, order).map_err(|e| e.to_string())?;
                check(
                    direct == blocks,
                    &format!("determinant routes disagree at j = {j}"),
                )?;
            }
        }
    }
    Ok(())
}

// --- criterion 9 -----------------------------------------------------

fn criterion_novel() -> Result<(), String> {
    let start = Instant::now();
    let base = ["obstruction", "--d", "14", "--j", "9"];
    let text_a = cli(&base)?;
    let text_b = cli(&base)?;
    check(text_a == text_b, "identical invocations must be byte-identical")?;
    for needle in ["alpha(5)", "beta(5)", "gamma(5)", "omega(2)"] {
        check(
            text_a.contains(needle),
            &format!("report must state {needle}"),
        )?;
    }

    let parse = |extra: &[&str]| -> Result<serde_json::Value, String> {
        let mut argv = base.to_vec();
        argv.extend_from_slice(extra);
        argv.extend_from_slice(&["--format", "json"]);
        serde_json::from_str(&cli(&argv)?).map_err(|e| e.to_string())
    };
    let standard = parse(&[])?;
    let eps_flip = parse(&["--epsilon-convention", "three-quarter"])?;
    let row_flip = parse(&["--row-order", "reversed"])?;

    let omega = |v: &serde_json::Value| v["counters"]["omega_mod4"].as_u64().unwrap_or(99);
    check(
        standard["admissible"] == eps_flip["admissible"]
            && standard["admissible"] == row_flip["admissible"],
        "verdicts must survive convention flips",
    )?;
    check(
        omega(&eps_flip) == (4 - omega(&standard)) % 4
            && omega(&row_flip) == (4 - omega(&standard)) % 4,
        "flips must negate omega mod 4",
    )?;
    // Per-class sign maps: the orientation flips under the epsilon
    // convention, the determinant under the row order.
    let classes = standard["classes"].as_array().ok_or("classes missing")?;
    let eps_classes = eps_flip["classes"].as_array().ok_or("classes missing")?;
    let row_classes = row_flip["classes"].as_array().ok_or("classes missing")?;
    for ((a, b), c) in classes.iter().zip(eps_classes).zip(row_classes) {
        if a["epsilon"].is_null() {
            continue;
        }
        let (ae, be) = (a["epsilon"].as_i64(), b["epsilon"].as_i64());
        check(
            ae.zip(be).is_some_and(|(x, y)| x == -y),
            "epsilon must negate under the convention flip",
        )?;
        let (ah, ch) = (a["eta"].as_i64(), c["eta"].as_i64());
        check(
            ah.zip(ch).is_some_and(|(x, y)| x == -y),
            "eta must negate under the row-order flip",
        )?;
    }
    within(Duration::from_secs(120), start, "criterion 9")
}
