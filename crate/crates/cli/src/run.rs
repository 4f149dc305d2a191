//! Subcommand execution and rendering. Everything here is a pure
//! function of the parsed arguments: no timestamps, no environment
//! reads, byte-identical output for identical invocations.

use crate::args::{conventions, Args, Command, Format};
use equipart_core::bounds::{bounds_report, BoundsReport};
use equipart_core::dickson::{self, dickson as dickson_poly};
use equipart_core::dihedral::HomologyClass;
use equipart_core::dynamics::{enumerate_circles, Sign, SignPair, SignedWord};
use equipart_core::jacobian::{block_diagonal_sign, build_configuration, det_sign, sign_matrix};
use equipart_core::orbits::{
    obstruction_delta0, obstruction_delta1, Delta0Outcome, Delta1Outcome, GeneratingClass,
};
use equipart_core::words::{count_table, CountRow, Word};
use equipart_core::Error as CoreError;
use serde_json::{json, Value};
use std::fmt::Write as _;

pub const SCHEMA: &str = "equipart/1";

#[derive(Debug)]
pub enum RunError {
    Core(CoreError),
    Usage(String),
    /// The acceptance ledger, carried so the caller can still print it.
    Acceptance(String),
}

impl From<CoreError> for RunError {
    fn from(e: CoreError) -> Self {
        RunError::Core(e)
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Core(e) => write!(f, "{e}"),
            RunError::Usage(msg) => write!(f, "{msg}"),
            RunError::Acceptance(_) => write!(f, "acceptance criteria failed"),
        }
    }
}

impl RunError {
    /// Exit status: 2 for bad arguments, 3 for internal
    /// inconsistencies (including acceptance failures), 4 for tripped
    /// resource guards.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Usage(_) => 2,
            RunError::Acceptance(_) => 3,
            RunError::Core(e) => {
                if e.is_invalid_input() {
                    2
                } else if e.is_resource_limit() {
                    4
                } else {
                    3
                }
            }
        }
    }
}

/// Runs one invocation and renders its output.
pub fn execute(args: &Args) -> Result<String, RunError> {
    let mut text = String::new();
    if args.format == Format::Text && !args.no_header {
        let _ = writeln!(text, "# equipart {}", env!("CARGO_PKG_VERSION"));
    }
    let body = match &args.command {
        Command::Words { nmax, engine } => run_words(*nmax, (*engine).into(), args.format)?,
        Command::Circles { j } => run_circles(*j, args.format)?,
        Command::Obstruction {
            d,
            j,
            epsilon_convention,
            row_order,
        } => run_obstruction(*d, *j, conventions(*epsilon_convention, *row_order), args.format)?,
        Command::Jacobian { word, row_order } => {
            run_jacobian(word, (*row_order).into(), args.format)?
        }
        Command::Dickson { j, k, d, budget } => run_dickson(*j, *k, *d, *budget, args.format)?,
        Command::Bounds { j, k, budget } => run_bounds(*j, *k, *budget, args.format)?,
        Command::Table { k, jmax, budget } => run_table(*k, *jmax, *budget, args.format)?,
        Command::Verify => match run_verify(args.format) {
            Ok(body) => body,
            Err(RunError::Acceptance(ledger)) => {
                return Err(RunError::Acceptance(format!("{text}{ledger}")))
            }
            Err(other) => return Err(other),
        },
    };
    text.push_str(&body);
    Ok(text)
}

fn render_json(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("JSON rendering cannot fail");
    out.push('\n');
    out
}

fn sign_to_json(sign: Option<Sign>) -> Value {
    match sign {
        Some(s) => json!(s.as_i8()),
        None => Value::Null,
    }
}

// --- words -----------------------------------------------------------

fn run_words(
    nmax: u64,
    engine: equipart_core::words::CountEngine,
    format: Format,
) -> Result<String, RunError> {
    if !(1..=16).contains(&nmax) {
        return Err(RunError::Usage(String::from(
            "--nmax must be between 1 and 16 (the self-conjugate count enumerates 2^n half-words)",
        )));
    }
    if engine == equipart_core::words::CountEngine::BruteForce && nmax > 12 {
        return Err(RunError::Usage(String::from(
            "--engine brute scans all 2^(2n) words; use --nmax at most 12",
        )));
    }
    let rows = count_table(nmax, engine);
    Ok(match format {
        Format::Json => render_json(&json!({
            "schema": SCHEMA,
            "command": "words",
            "engine": match engine {
                equipart_core::words::CountEngine::Formula => "formula",
                equipart_core::words::CountEngine::BruteForce => "brute",
            },
            "rows": rows.iter().map(words_row_json).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{:>4} {:>12} {:>12} {:>12} {:>10} {:>12}  A=P(2n) mod 2",
                "n", "R(n)", "P(n)", "Q(n)", "A(n)", "P(2n)"
            );
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{:>4} {:>12} {:>12} {:>12} {:>10} {:>12}  {}",
                    row.n,
                    row.balanced,
                    row.primitive,
                    row.primitive_balanced,
                    row.star_primitive,
                    row.primitive_doubled,
                    if row.parity_law_holds() { "ok" } else { "VIOLATED" },
                );
            }
            out
        }
    })
}

fn words_row_json(row: &CountRow) -> Value {
    json!({
        "n": row.n,
        "R": u64::try_from(row.balanced).expect("table bound keeps counts in u64"),
        "P": u64::try_from(row.primitive).expect("table bound keeps counts in u64"),
        "Q": u64::try_from(row.primitive_balanced).expect("table bound keeps counts in u64"),
        "A": row.star_primitive,
        "P2n": u64::try_from(row.primitive_doubled).expect("table bound keeps counts in u64"),
        "parity_ok": row.parity_law_holds(),
    })
}

// --- circles ---------------------------------------------------------

fn run_circles(j: u32, format: Format) -> Result<String, RunError> {
    let circles = enumerate_circles(j)?;
    let states: usize = circles.iter().map(|c| c.len()).sum();
    let mut cycles: Vec<(usize, Vec<String>)> = circles
        .iter()
        .map(|c| {
            (
                c.len(),
                c.compressed_cycle().iter().map(|w| w.to_string()).collect(),
            )
        })
        .collect();
    cycles.sort_by(|a, b| a.1.cmp(&b.1));

    Ok(match format {
        Format::Json => render_json(&json!({
            "schema": SCHEMA,
            "command": "circles",
            "j": j,
            "states": states,
            "circles": cycles
                .iter()
                .map(|(len, words)| json!({"length": len, "compressed": words}))
                .collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "j = {j}: {states} states, {} circles", cycles.len());
            for (i, (len, words)) in cycles.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{:>4}  length {:>4}  {}",
                    i + 1,
                    len,
                    words.join(" ")
                );
            }
            out
        }
    })
}

// --- obstruction -----------------------------------------------------

fn run_obstruction(
    d: u32,
    j: u32,
    conventions: equipart_core::orbits::Conventions,
    format: Format,
) -> Result<String, RunError> {
    if d < 1 || j < 1 {
        return Err(RunError::Usage(String::from("--d and --j must be positive")));
    }
    let delta = 2 * i64::from(d) - 3 * i64::from(j);
    match delta {
        1 => Ok(render_delta1(
            &obstruction_delta1(j, conventions)?,
            format,
        )),
        0 => Ok(render_delta0(&obstruction_delta0(j / 2)?, format)),
        _ => Err(CoreError::CaseMismatch { d, j }.into()),
    }
}

fn class_json(class: &GeneratingClass) -> Value {
    json!({
        "canonical": class.canonical.word.to_string(),
        "signs": class.canonical.signs.to_string(),
        "components": class.component_count(),
        "length": class.circle_length(),
        "stabilizer": class
            .stabilizer
            .elements()
            .iter()
            .map(|e| e.token())
            .collect::<Vec<_>>(),
        "monodromy": class.monodromy.token(),
        "epsilon": sign_to_json(class.epsilon),
        "eta": sign_to_json(class.eta),
        "contribution": class.contribution.token(),
    })
}

fn exact_delta_note(d: u32, j: u32, admissible: bool) -> Option<String> {
    (admissible && dickson::lower_bound(u64::from(j), 2) == u64::from(d))
        .then(|| format!("Delta({j},2) = {d}"))
}

fn render_delta1(outcome: &Delta1Outcome, format: Format) -> String {
    let exact = exact_delta_note(outcome.d, outcome.j, outcome.admissible);
    match format {
        Format::Json => render_json(&json!({
            "schema": SCHEMA,
            "command": "obstruction",
            "case": "delta1",
            "d": outcome.d,
            "j": outcome.j,
            "n": outcome.n,
            "coefficients": outcome.module.to_string(),
            "classes": outcome.classes.iter().map(class_json).collect::<Vec<_>>(),
            "counters": outcome.counters.map_or(Value::Null, |c| json!({
                "alpha": c.alpha,
                "beta": c.beta,
                "gamma": c.gamma,
                "omega": c.omega(),
                "omega_mod4": c.omega_mod4(),
            })),
            "closed_form": outcome.closed_form.map_or(Value::Null, |(o1, o2)| json!({
                "odd_divisor_sum": o1,
                "even_divisor_sum": o2,
            })),
            "total": outcome.total.token(),
            "admissible": outcome.admissible,
            "delta_exact": exact.as_ref().map_or(Value::Null, |_| json!(outcome.d)),
            "notes": outcome.notes,
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "case 2d - 3j = 1: (d, j) = ({}, {}), n = {}, coefficients {}",
                outcome.d, outcome.j, outcome.n, outcome.module
            );
            let _ = writeln!(
                out,
                "{:>10}  {:>10} {:>8}  {:<22} {:>9} {:>8} {:>4}  contribution",
                "canonical", "components", "length", "stabilizer", "monodromy", "epsilon", "eta"
            );
            for class in &outcome.classes {
                let _ = writeln!(
                    out,
                    "{:>10}  {:>10} {:>8}  {:<22} {:>9} {:>8} {:>4}  {}",
                    class.canonical.to_string(),
                    class.component_count(),
                    class.circle_length(),
                    class.stabilizer.to_string(),
                    class.monodromy.token(),
                    class.epsilon.map_or(String::from("-"), |s| s.as_i8().to_string()),
                    class.eta.map_or(String::from("-"), |s| s.as_i8().to_string()),
                    class.contribution.token(),
                );
            }
            if let Some(c) = outcome.counters {
                let m = (outcome.n - 1) / 2;
                let _ = writeln!(
                    out,
                    "alpha({n}) = {}, beta({n}) = {}, gamma({n}) = {}",
                    c.alpha,
                    c.beta,
                    c.gamma,
                    n = outcome.n
                );
                let _ = writeln!(
                    out,
                    "omega({m}) = alpha + 2*beta - gamma = {} (mod 4: {})",
                    c.omega(),
                    c.omega_mod4()
                );
            }
            if let Some((o1, o2)) = outcome.closed_form {
                let _ = writeln!(
                    out,
                    "closed-form pair (O1, O2) = ({o1}, {o2}), parities ({}, {})",
                    o1 % 2,
                    o2 % 2
                );
            }
            let total_detail = match outcome.total {
                HomologyClass::Twisted(t) if t == equipart_core::dihedral::TwistedClass::XAB => {
                    " (= 2 Xca)"
                }
                _ => "",
            };
            let _ = writeln!(out, "total = {}{}", outcome.total.token(), total_detail);
            let _ = writeln!(
                out,
                "verdict: {}",
                if outcome.admissible {
                    "admissible"
                } else {
                    "no conclusion (zero obstruction)"
                }
            );
            if let Some(line) = exact {
                let _ = writeln!(out, "{line}");
            }
            for note in &outcome.notes {
                let _ = writeln!(out, "{note}");
            }
            out
        }
    }
}

fn render_delta0(outcome: &Delta0Outcome, format: Format) -> String {
    let exact = exact_delta_note(outcome.d, outcome.j, outcome.admissible);
    match format {
        Format::Json => render_json(&json!({
            "schema": SCHEMA,
            "command": "obstruction",
            "case": "delta0",
            "d": outcome.d,
            "j": outcome.j,
            "m": outcome.m,
            "types": outcome.type_count,
            "orbits": outcome.orbit_count,
            "closed_form": u64::try_from(outcome.closed_form).expect("enumeration bound"),
            "admissible": outcome.admissible,
            "delta_exact": exact.as_ref().map_or(Value::Null, |_| json!(outcome.d)),
            "notes": outcome.notes,
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "case 2d = 3j: (d, j) = ({}, {}), m = {}",
                outcome.d, outcome.j, outcome.m
            );
            let _ = writeln!(
                out,
                "{} types fall into {} orbits (closed form C(2m-1, m-1) = {})",
                outcome.type_count, outcome.orbit_count, outcome.closed_form
            );
            let _ = writeln!(
                out,
                "verdict: {}",
                if outcome.admissible {
                    "admissible (odd orbit count)"
                } else {
                    "no conclusion (even orbit count)"
                }
            );
            if let Some(line) = exact {
                let _ = writeln!(out, "{line}");
            }
            for note in &outcome.notes {
                let _ = writeln!(out, "{note}");
            }
            out
        }
    }
}

// --- jacobian --------------------------------------------------------

fn run_jacobian(
    word: &str,
    order: equipart_core::jacobian::RowOrder,
    format: Format,
) -> Result<String, RunError> {
    let word: Word = word.parse()?;
    let signed = SignedWord::new(word, SignPair::PLUS_PLUS);
    let config = build_configuration(&signed)?;
    let matrix = sign_matrix(&config, order)?;
    let sign = det_sign(&matrix)?;
    let block_sign = block_diagonal_sign(&config, order)?;
    if sign != block_sign {
        return Err(CoreError::Inconsistency("determinant routes disagree").into());
    }

    Ok(match format {
        Format::Json => render_json(&json!({
            "schema": SCHEMA,
            "command": "jacobian",
            "word": word.to_string(),
            "signs": "++",
            "j": config.j(),
            "d": config.space_dimension(),
            "rows": (0..matrix.size()).map(|r| matrix.row_label(r)).collect::<Vec<_>>(),
            "columns": (0..matrix.size()).map(|c| matrix.column_label(c)).collect::<Vec<_>>(),
            "matrix": (0..matrix.size())
                .map(|r| (0..matrix.size()).map(|c| matrix.entry(r, c)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "det_sign": sign.as_i8(),
            "block_diagonal_sign": block_sign.as_i8(),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "word {}(++): j = {}, d = {}, matrix {}x{}",
                word,
                config.j(),
                config.space_dimension(),
                matrix.size(),
                matrix.size()
            );
            let _ = write!(out, "{matrix}");
            let _ = writeln!(out, "determinant sign: {}", sign.as_i8());
            let _ = writeln!(out, "block-diagonal cross-check: {}", block_sign.as_i8());
            out
        }
    })
}

// --- dickson ---------------------------------------------------------

/// Exponents are stored in 16 bits, so the largest exponent of the
/// power, `j * 2^{k-1}`, must fit.
fn check_exponent_range(j: u64, k: u32) -> Result<(), RunError> {
    if j << (k - 1) > u64::from(u16::MAX) {
        return Err(RunError::Usage(format!(
            "j * 2^(k-1) = {} exceeds the supported exponent range {}",
            j << (k - 1),
            u16::MAX
        )));
    }
    Ok(())
}

fn run_dickson(
    j: u32,
    k: u32,
    d: Option<u32>,
    budget: u64,
    format: Format,
) -> Result<String, RunError> {
    if k as usize > dickson::MAX_VARS {
        return Err(RunError::Usage(format!(
            "--k must be at most {}",
            dickson::MAX_VARS
        )));
    }
    if j < 1 || k < 1 {
        return Err(RunError::Usage(String::from("--j and --k must be positive")));
    }
    check_exponent_range(u64::from(j), k)?;
    let power = dickson_poly(k as usize).pow(j, budget).map_err(RunError::Core)?;
    let minimal = u32::from(power.min_max_exponent().expect("nonzero power"));
    match d {
        Some(d) => {
            // Exponents top out below u16::MAX, so clamping keeps the
            // "everything survives" semantics for huge d.
            let cutoff = u16::try_from(d).unwrap_or(u16::MAX);
            let survivors = power.reduced_mod_power_ideal(cutoff).term_count();
            let admissible = survivors > 0;
            Ok(match format {
                Format::Json => render_json(&json!({
                    "schema": SCHEMA,
                    "command": "dickson",
                    "mode": "membership",
                    "j": j,
                    "k": k,
                    "d": d,
                    "terms": power.term_count(),
                    "survivors": survivors,
                    "admissible": admissible,
                    "minimal_d": minimal,
                })),
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(
                        out,
                        "power has {} terms; {} survive reduction mod (x_i^{})",
                        power.term_count(),
                        survivors,
                        d + 1
                    );
                    let _ = writeln!(
                        out,
                        "({d}, {j}, {k}) {}",
                        if admissible {
                            "is admissible (membership fails)"
                        } else {
                            "is not certified by this test"
                        }
                    );
                    out
                }
            })
        }
        None => Ok(match format {
            Format::Json => render_json(&json!({
                "schema": SCHEMA,
                "command": "dickson",
                "mode": "minimal-d",
                "j": j,
                "k": k,
                "terms": power.term_count(),
                "minimal_d": minimal,
            })),
            Format::Text => {
                format!(
                    "minimal certified dimension d* = {minimal}; Delta({j},{k}) <= {minimal}\n"
                )
            }
        }),
    }
}

// --- bounds ----------------------------------------------------------

fn bounds_json(report: &BoundsReport) -> Value {
    json!({
        "j": report.j,
        "k": report.k,
        "lower": report.lower,
        "candidates": report
            .candidates
            .iter()
            .map(|c| json!({"value": c.value, "provenance": c.provenance.token()}))
            .collect::<Vec<_>>(),
        "best": report.best(),
        "exact": report.exact(),
    })
}

fn bounds_summary(report: &BoundsReport) -> String {
    match (report.exact(), report.best()) {
        (Some(value), _) => format!("Delta({},{}) = {value}", report.j, report.k),
        (None, Some(best)) => format!(
            "{} <= Delta({},{}) <= {best}",
            report.lower, report.j, report.k
        ),
        (None, None) => format!("{} <= Delta({},{})", report.lower, report.j, report.k),
    }
}

fn run_bounds(j: u64, k: u32, budget: u64, format: Format) -> Result<String, RunError> {
    if j < 1 || k < 1 || k as usize > dickson::MAX_VARS || j > u64::from(u32::MAX) {
        return Err(RunError::Usage(format!(
            "--j and --k must be positive, --k at most {}",
            dickson::MAX_VARS
        )));
    }
    check_exponent_range(j, k)?;
    let report = bounds_report(j, k, budget);
    Ok(match format {
        Format::Json => {
            let mut value = bounds_json(&report);
            let obj = value.as_object_mut().expect("bounds JSON is an object");
            obj.insert(String::from("schema"), json!(SCHEMA));
            obj.insert(String::from("command"), json!("bounds"));
            render_json(&value)
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "bounds for Delta({j}, {k})");
            let _ = writeln!(out, "  lower {:>6}  moment-curve", report.lower);
            for c in &report.candidates {
                let _ = writeln!(out, "  upper {:>6}  {}", c.value, c.provenance);
            }
            let _ = writeln!(out, "{}", bounds_summary(&report));
            out
        }
    })
}

// --- table -----------------------------------------------------------

fn run_table(k: u32, jmax: u64, budget: u64, format: Format) -> Result<String, RunError> {
    if k < 1 || k as usize > dickson::MAX_VARS {
        return Err(RunError::Usage(format!(
            "--k must be between 1 and {}",
            dickson::MAX_VARS
        )));
    }
    if jmax < 1 {
        return Err(RunError::Usage(String::from("--jmax must be positive")));
    }
    check_exponent_range(jmax, k)?;
    let reports: Vec<BoundsReport> = (1..=jmax).map(|j| bounds_report(j, k, budget)).collect();
    Ok(match format {
        Format::Json => render_json(&json!({
            "schema": SCHEMA,
            "command": "table",
            "k": k,
            "rows": reports.iter().map(|r| {
                let dickson_d = r
                    .candidates
                    .iter()
                    .find(|c| c.provenance == equipart_core::bounds::Provenance::DicksonMinimalD)
                    .map(|c| c.value);
                json!({
                    "j": r.j,
                    "lower": r.lower,
                    "dickson_d": dickson_d,
                    "index_formula": dickson::index_formula_bound(r.j, k),
                    "best": r.best(),
                    "exact": r.exact(),
                })
            }).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "bounds table, k = {k}");
            let _ = writeln!(
                out,
                "{:>4} {:>7} {:>11} {:>14} {:>6}",
                "j", "lower", "dickson-d*", "index-formula", "best"
            );
            for r in &reports {
                let dickson_d = r
                    .candidates
                    .iter()
                    .find(|c| c.provenance == equipart_core::bounds::Provenance::DicksonMinimalD)
                    .map_or(String::from("-"), |c| c.value.to_string());
                let _ = writeln!(
                    out,
                    "{:>4} {:>7} {:>11} {:>14} {:>6}",
                    r.j,
                    r.lower,
                    dickson_d,
                    dickson::index_formula_bound(r.j, k),
                    r.best().map_or(String::from("-"), |b| b.to_string()),
                );
            }
            out
        }
    })
}

// --- verify ----------------------------------------------------------

fn run_verify(format: Format) -> Result<String, RunError> {
    let results = crate::acceptance::run_all();
    let all_pass = results.iter().all(|r| r.outcome.is_ok());
    let rendered = match format {
        Format::Json => render_json(&json!({
            "schema": SCHEMA,
            "command": "verify",
            "criteria": results.iter().map(|r| json!({
                "id": r.id,
                "name": r.name,
                "pass": r.outcome.is_ok(),
                "detail": r.outcome.as_ref().err(),
            })).collect::<Vec<_>>(),
            "all_pass": all_pass,
        })),
        Format::Text => {
            let mut out = String::new();
            for r in &results {
                match &r.outcome {
                    Ok(()) => {
                        let _ = writeln!(out, "PASS  criterion {}: {}", r.id, r.name);
                    }
                    Err(detail) => {
                        let _ = writeln!(out, "FAIL  criterion {}: {}: {}", r.id, r.name, detail);
                    }
                }
            }
            let _ = writeln!(
                out,
                "{}",
                if all_pass {
                    "all criteria passed"
                } else {
                    "ACCEPTANCE FAILED"
                }
            );
            out
        }
    };
    if all_pass {
        Ok(rendered)
    } else {
        Err(RunError::Acceptance(rendered))
    }
}
