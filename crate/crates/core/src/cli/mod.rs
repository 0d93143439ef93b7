//! The `freemod` command line: argument parsing, the `freemod/1` file
//! format and deterministic reports.
//!
//! Exit statuses: 0 success, 2 the checked property fails, 3 unreadable or
//! malformed input, 4 budget exhausted.

mod parse;
mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::freeness::{
    coordinatize, find_basis, Basis, Certificate, FreenessStatus, DEFAULT_BUDGET,
};
use crate::linmap::{
    check_invertible, check_linear, InvertibilityFailure, LinearMapTable, LinearityReport,
};
use crate::semiring::{
    check_field, check_ring, check_semiring_axioms, FieldObstruction, Semiring, TableSemiring,
};
use crate::structures::{
    check_axioms, enumerate_structures, lemma_8_iff_1_and_9, lemma_a_zero,
    lemma_commutativity_derivable, AxiomReport, Condition, FiniteStructure, LemmaOutcome, Witness,
};
use crate::{Error, Integers, Naturals, NonNegRationals, Rationals, Tropical};

pub use parse::{
    parse_map, parse_semiring, parse_structure, Builtin, Codomain, MapFile, ParseError,
    SemiringFile, HEADER,
};
pub use report::{Exit, Format, InputDigest, Line, Report, Section};

#[derive(Debug, Parser)]
#[command(
    name = "freemod",
    version,
    about = "Check semimodule axioms, find bases, verify isomorphisms"
)]
pub struct Cli {
    /// Cap on candidate evaluations (or enumerated structures).
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Semiring conditions (1)-(8) plus ring and field classification.
    CheckSemiring { file: PathBuf },
    /// Module conditions (1)-(9) with witnesses.
    CheckAxioms { file: PathBuf },
    /// Least basis, or why there is none.
    FindBasis { file: PathBuf },
    /// Coordinate map onto R^k for the given basis labels.
    Coordinatize {
        file: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        basis: Vec<String>,
    },
    /// Checks that a map file describes a linear bijection.
    VerifyIsomorphism {
        file: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// The implications between (1), (3), (8) and (9).
    Lemmas { file: PathBuf },
    /// Every structure on an n-element carrier over a finite builtin.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        semiring: String,
    },
}

/// Early exit carrying the finished report.
struct Stop(Report);

type Step<T> = std::result::Result<T, Stop>;

fn display_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn stop(mut report: Report, exit: Exit, result: String) -> Stop {
    report.exit = exit;
    report.result = result;
    Stop(report)
}

fn read(report: &mut Report, path: &Path) -> Step<String> {
    let name = display_name(path);
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) => {
            let kind = e.kind().to_string();
            return Err(stop(
                report.clone(),
                Exit::Input,
                format!("INPUT ERROR {name}: {kind}"),
            ));
        }
    };
    report.inputs.push(InputDigest::new(&name, &bytes));
    String::from_utf8(bytes).map_err(|_| {
        stop(
            report.clone(),
            Exit::Input,
            format!("INPUT ERROR {name}: not UTF-8"),
        )
    })
}

fn parse_error(report: &Report, path: &Path, e: ParseError) -> Stop {
    stop(
        report.clone(),
        Exit::Input,
        format!("INPUT ERROR {}:{e}", display_name(path)),
    )
}

fn load_structure(report: &mut Report, path: &Path) -> Step<FiniteStructure> {
    let text = read(report, path)?;
    parse_structure(&text).map_err(|e| parse_error(report, path, e))
}

/// Splits `a,b` and `[0,1],[1,0]` at commas outside brackets.
fn split_labels(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for arg in args {
        let mut depth = 0i32;
        let mut current = String::new();
        for ch in arg.chars() {
            match ch {
                '[' | '{' => depth += 1,
                ']' | '}' => depth -= 1,
                _ => {}
            }
            if ch == ',' && depth == 0 {
                out.push(std::mem::take(&mut current));
            } else {
                current.push(ch);
            }
        }
        out.push(current);
    }
    out.into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn echo(cli: &Cli) -> String {
    let mut words = vec!["freemod".to_string()];
    match &cli.command {
        Command::CheckSemiring { file } => {
            words.extend(["check-semiring".into(), display_name(file)])
        }
        Command::CheckAxioms { file } => words.extend(["check-axioms".into(), display_name(file)]),
        Command::FindBasis { file } => words.extend(["find-basis".into(), display_name(file)]),
        Command::Coordinatize { file, basis } => {
            words.extend(["coordinatize".into(), display_name(file), "--basis".into()]);
            words.extend(split_labels(basis));
        }
        Command::VerifyIsomorphism { file, map } => words.extend([
            "verify-isomorphism".into(),
            display_name(file),
            "--map".into(),
            display_name(map),
        ]),
        Command::Lemmas { file } => words.extend(["lemmas".into(), display_name(file)]),
        Command::Enumerate { size, semiring } => words.extend([
            "enumerate".into(),
            "--size".into(),
            size.to_string(),
            "--semiring".into(),
            semiring.clone(),
        ]),
    }
    if cli.budget != DEFAULT_BUDGET {
        words.extend(["--budget".into(), cli.budget.to_string()]);
    }
    words.join(" ")
}

/// Runs one command. Never panics on bad input; every outcome is a report.
pub fn run(cli: &Cli) -> Report {
    let mut report = Report::new(echo(cli));
    let outcome = match &cli.command {
        Command::CheckSemiring { file } => cmd_check_semiring(&mut report, file),
        Command::CheckAxioms { file } => cmd_check_axioms(&mut report, file),
        Command::FindBasis { file } => cmd_find_basis(&mut report, file, cli.budget),
        Command::Coordinatize { file, basis } => {
            cmd_coordinatize(&mut report, file, &split_labels(basis))
        }
        Command::VerifyIsomorphism { file, map } => cmd_verify_isomorphism(&mut report, file, map),
        Command::Lemmas { file } => cmd_lemmas(&mut report, file),
        Command::Enumerate { size, semiring } => {
            cmd_enumerate(&mut report, *size, semiring, cli.budget)
        }
    };
    match outcome {
        Ok(()) => report,
        Err(Stop(r)) => r,
    }
}

const SCALAR_NAMES: [&str; 3] = ["a", "b", "c"];
const ELEMENT_NAMES: [&str; 3] = ["x", "y", "z"];

fn assignment<V: AsRef<str>>(names: impl IntoIterator<Item = (&'static str, V)>) -> String {
    names
        .into_iter()
        .map(|(n, v)| format!("{n}={}", v.as_ref()))
        .collect::<Vec<_>>()
        .join(", ")
}

// ---------------------------------------------------------------- semirings

fn semiring_sections<S: Semiring>(report: &mut Report, ring: &S) -> Step<()> {
    let internal = |e: Error| stop(report.clone(), Exit::Input, format!("INPUT ERROR {e}"));
    let axioms = check_semiring_axioms(ring, None).map_err(internal)?;
    let ring_report = check_ring(ring).map_err(internal)?;
    let field = check_field(ring).map_err(internal)?;

    let mut conditions = Section::new("semiring conditions");
    conditions.line("method", axioms.method.to_string());
    for o in &axioms.conditions {
        let value = match &o.witness {
            None => "pass".to_string(),
            Some(w) => format!(
                "FAIL at {}",
                assignment(
                    SCALAR_NAMES
                        .into_iter()
                        .zip(w.iter().map(|e| ring.format(e)))
                )
            ),
        };
        conditions.line(
            format!("({}) {}", o.condition.0, o.condition.statement()),
            value,
        );
    }

    let ring_text = match &ring_report.witness {
        None => "yes".to_string(),
        Some(a) => format!("no (witness a={})", ring.format(a)),
    };
    let field_text = match &field.obstruction {
        None => "yes".to_string(),
        Some(FieldObstruction::NotRing) => "no (not a ring)".to_string(),
        Some(FieldObstruction::ZeroIsOne) => "no (0 = 1)".to_string(),
        Some(FieldObstruction::NonCommutative { a, b }) => format!(
            "no (ab != ba at a={}, b={})",
            ring.format(a),
            ring.format(b)
        ),
        Some(FieldObstruction::NoInverse { a }) => {
            format!("no (no inverse for a={})", ring.format(a))
        }
    };
    let mut class = Section::new("classification");
    class
        .line("ring", format!("{ring_text} [{}]", ring_report.method))
        .line("field", format!("{field_text} [{}]", field.method));

    let mut about = Section::new("semiring");
    about.line("name", ring.name());
    match ring.elements() {
        Some(all) => about.line(
            "carrier",
            all.iter()
                .map(|e| ring.format(e))
                .collect::<Vec<_>>()
                .join(" "),
        ),
        None => about.line("carrier", "infinite"),
    };
    about
        .line("zero", ring.format(&ring.zero()))
        .line("one", ring.format(&ring.one()));

    let passed = axioms.passed();
    let verdict = if axioms.all_pass() { "PASS" } else { "FAIL" };
    let sampled = if axioms.method == crate::semiring::Method::Sampled {
        " sampled"
    } else {
        ""
    };
    report.result = format!(
        "semiring: {verdict} ({passed}/8{sampled}), ring: {ring_text}, field: {field_text}"
    );
    report.exit = if axioms.all_pass() {
        Exit::Ok
    } else {
        Exit::Failure
    };
    report.sections.extend([about, conditions, class]);
    Ok(())
}

fn cmd_check_semiring(report: &mut Report, path: &Path) -> Step<()> {
    let text = read(report, path)?;
    let file = parse_semiring(&text).map_err(|e| parse_error(report, path, e))?;
    match file {
        SemiringFile::Table(t) => semiring_sections(report, &t),
        SemiringFile::Builtin(b) => match b {
            Builtin::Gf(g) => semiring_sections(report, &g),
            Builtin::Boolean => semiring_sections(report, &crate::Boolean),
            Builtin::Integers => semiring_sections(report, &Integers::default()),
            Builtin::Naturals => semiring_sections(report, &Naturals::default()),
            Builtin::Rationals => semiring_sections(report, &Rationals::default()),
            Builtin::NonNegRationals => semiring_sections(report, &NonNegRationals::default()),
            Builtin::Tropical => semiring_sections(report, &Tropical::default()),
            Builtin::Truncated(t) => semiring_sections(report, &t),
        },
    }
}

// --------------------------------------------------------------- structures

fn structure_section(s: &FiniteStructure) -> Section {
    let mut sec = Section::new("structure");
    sec.line("semiring", s.semiring().name())
        .line("scalars", s.semiring().labels().join(" "))
        .line("carrier", s.labels().join(" "))
        .line("size", s.size().to_string());
    sec
}

fn render_witness(s: &FiniteStructure, w: &Witness) -> String {
    match w {
        Witness::Tuple { scalars, elements } => {
            let named = SCALAR_NAMES
                .iter()
                .zip(scalars)
                .map(|(&n, &a)| (n, s.semiring().label(a)))
                .chain(
                    ELEMENT_NAMES
                        .iter()
                        .zip(elements)
                        .map(|(&n, &x)| (n, s.label(x))),
                );
            assignment(named)
        }
        Witness::NoIdentity { .. } => w.render(s),
    }
}

/// Pass count over (1)–(9), with (8) passing when both halves do.
fn nine_count(r: &AxiomReport) -> (usize, Vec<&'static str>) {
    let groups: [&[Condition]; 9] = [
        &[Condition::Identity],
        &[Condition::Associative],
        &[Condition::Commutative],
        &[Condition::Unital],
        &[Condition::Compatible],
        &[Condition::DistributesOverVectors],
        &[Condition::DistributesOverScalars],
        &[Condition::ZeroScalar, Condition::ScaledZero],
        &[Condition::Inverses],
    ];
    let labels = [
        "(1)", "(2)", "(3)", "(4)", "(5)", "(6)", "(7)", "(8)", "(9)",
    ];
    let mut failing = Vec::new();
    for (g, l) in groups.iter().zip(labels) {
        if !r.passes_all(g) {
            failing.push(l);
        }
    }
    (9 - failing.len(), failing)
}

fn axiom_sections(s: &FiniteStructure, r: &AxiomReport) -> Vec<Section> {
    let mut zero = Section::new("zero");
    let candidates: Vec<&str> = r.zero_candidates.iter().map(|&z| s.label(z)).collect();
    zero.line(
        "candidates",
        if candidates.is_empty() {
            "none".to_string()
        } else {
            candidates.join(" ")
        },
    );
    zero.line("chosen", r.zero.map_or("none", |z| s.label(z)));

    let mut conditions = Section::new("conditions");
    for o in &r.outcomes {
        let value = match &o.witness {
            None => "pass".to_string(),
            Some(w) => format!("FAIL at {}", render_witness(s, w)),
        };
        conditions.line(o.condition.to_string(), value);
    }
    vec![zero, conditions]
}

/// (1)–(8) are what a semimodule needs; (9) is reported but only fails the
/// command together with one of those.
fn axiom_summary(r: &AxiomReport) -> (String, Exit) {
    let (passed, failing) = nine_count(r);
    match failing.as_slice() {
        [] => (format!("axioms: PASS ({passed}/9)"), Exit::Ok),
        ["(9)"] => (
            format!("axioms: (1)-(8) PASS, (9) FAIL ({passed}/9)"),
            Exit::Ok,
        ),
        _ => (
            format!("axioms: FAIL ({passed}/9), failing {}", failing.join(" ")),
            Exit::Failure,
        ),
    }
}

fn cmd_check_axioms(report: &mut Report, path: &Path) -> Step<()> {
    let s = load_structure(report, path)?;
    let r = check_axioms(&s);
    (report.result, report.exit) = axiom_summary(&r);
    report.sections.push(structure_section(&s));
    report.sections.extend(axiom_sections(&s, &r));
    Ok(())
}

fn vector_label(s: &FiniteStructure, coords: &[usize]) -> String {
    let parts: Vec<&str> = coords.iter().map(|&c| s.semiring().label(c)).collect();
    format!("[{}]", parts.join(","))
}

fn basis_labels(s: &FiniteStructure, b: &Basis) -> String {
    let names: Vec<&str> = b.elements().iter().map(|&y| s.label(y)).collect();
    format!("[{}]", names.join(", "))
}

fn coordinate_section(s: &FiniteStructure, b: &Basis) -> Section {
    let mut sec = Section::new("coordinates");
    for x in 0..s.size() {
        sec.line(s.label(x), vector_label(s, b.coordinates(x)));
    }
    sec
}

fn cmd_find_basis(report: &mut Report, path: &Path, budget: u64) -> Step<()> {
    let s = load_structure(report, path)?;
    let v = find_basis(&s, budget);
    report.sections.push(structure_section(&s));
    let mut axioms = Section::new("axioms");
    axioms.line("summary", axiom_summary(&v.axioms).0);
    report.sections.push(axioms);
    match (v.status, &v.basis, &v.certificate) {
        (FreenessStatus::Free, Some(b), _) => {
            report.result = format!("FREE, rank {}, basis {}", b.rank(), basis_labels(&s, b));
            report.sections.push(coordinate_section(&s, b));
        }
        (_, _, Some(c)) => {
            let why = match c {
                Certificate::Axioms => {
                    let failing: Vec<&str> = Condition::STANDARD
                        .iter()
                        .filter(|&&c| !v.axioms.passes(c))
                        .map(|c| c.label())
                        .collect();
                    format!("conditions {} fail", failing.join(" "))
                }
                Certificate::Cardinality { size, scalars } => {
                    format!("{size} elements is not a power of {scalars}")
                }
                Certificate::Exhausted { rank, subsets } => {
                    format!("none of the {subsets} subsets of size {rank} is a basis")
                }
                Certificate::Budget { evaluations } => {
                    format!("budget of {budget} exhausted after {evaluations} evaluations")
                }
            };
            let (word, exit) = match v.status {
                FreenessStatus::Undecided => ("UNDECIDED", Exit::Budget),
                _ => ("NOT FREE", Exit::Failure),
            };
            report.result = format!("{word} ({why})");
            report.exit = exit;
        }
        _ => unreachable!("verdicts without a basis carry a certificate"),
    }
    Ok(())
}

fn linearity_lines(sec: &mut Section, prefix: &str, f: &LinearMapTable, lin: &LinearityReport) {
    let (d, c) = (f.domain(), f.codomain());
    sec.line(
        format!("{prefix}f(x + y) = f(x) + f(y)"),
        match lin.addition {
            None => "pass".to_string(),
            Some((x, y)) => format!("FAIL at x={}, y={}", d.label(x), d.label(y)),
        },
    );
    sec.line(
        format!("{prefix}f(ax) = a f(x)"),
        match lin.scaling {
            None => "pass".to_string(),
            Some((a, x)) => format!("FAIL at a={}, x={}", c.semiring().label(a), d.label(x)),
        },
    );
}

fn map_sections(f: &LinearMapTable) -> (bool, bool, Vec<Section>) {
    let mut table = Section::new("map");
    for (x, y) in f.pairs() {
        table.line(x, format!("-> {y}"));
    }
    let lin = check_linear(f).expect("domain and codomain share scalars");
    let inv = check_invertible(f);
    let mut checks = Section::new("verification");
    linearity_lines(&mut checks, "", f, &lin);
    let (d, c) = (f.domain(), f.codomain());
    checks.line(
        "bijective",
        match &inv.failure {
            None => "yes".to_string(),
            Some(InvertibilityFailure::NotInjective { x, y }) => format!(
                "no ({} and {} both map to {})",
                d.label(*x),
                d.label(*y),
                c.label(f.apply(*x))
            ),
            Some(InvertibilityFailure::NotSurjective { y }) => {
                format!("no ({} has no preimage)", c.label(*y))
            }
        },
    );
    if let (Some(il), Some(t)) = (&inv.inverse_linearity, &inv.inverse) {
        let back = LinearMapTable::new(c.clone(), d.clone(), t.clone()).expect("inverse is total");
        linearity_lines(&mut checks, "inverse: ", &back, il);
    }
    (lin.is_linear(), inv.is_invertible(), vec![table, checks])
}

fn cmd_coordinatize(report: &mut Report, path: &Path, labels: &[String]) -> Step<()> {
    let s = load_structure(report, path)?;
    if let Some(bad) = labels.iter().find(|l| s.index_of(l).is_none()) {
        return Err(stop(
            report.clone(),
            Exit::Input,
            format!("INPUT ERROR basis label `{bad}` is not in the carrier"),
        ));
    }
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    report.sections.push(structure_section(&s));
    let basis = match Basis::from_labels(&s, &refs) {
        Ok(b) => b,
        Err(Error::InvalidBasis {
            element,
            representations,
        }) => {
            return Err(stop(
                report.clone(),
                Exit::Failure,
                format!("NOT A BASIS ({element} has {representations} representations)"),
            ))
        }
        Err(e) => {
            return Err(stop(
                report.clone(),
                Exit::Failure,
                format!("NOT A BASIS ({e})"),
            ))
        }
    };
    let psi = coordinatize(&s, &basis)
        .map_err(|e| stop(report.clone(), Exit::Input, format!("INPUT ERROR {e}")))?;
    let (linear, invertible, sections) = map_sections(&psi);
    report.sections.extend(sections);
    let mut result = format!(
        "COORDINATIZED, rank {}, basis {}",
        basis.rank(),
        basis_labels(&s, &basis)
    );
    if linear && invertible {
        result.push_str(", psi linear and invertible");
    } else {
        result.push_str(", psi FAILS verification");
        report.exit = Exit::Failure;
    }
    report.result = result;
    Ok(())
}

fn cmd_verify_isomorphism(report: &mut Report, path: &Path, map_path: &Path) -> Step<()> {
    let s = load_structure(report, path)?;
    let text = read(report, map_path)?;
    let m = parse_map(&text).map_err(|e| parse_error(report, map_path, e))?;
    let codomain = match m.codomain {
        Codomain::Same => s.clone(),
        Codomain::Power(k) => FiniteStructure::power(s.semiring(), k)
            .map_err(|e| stop(report.clone(), Exit::Input, format!("INPUT ERROR {e}")))?,
    };
    let map_name = display_name(map_path);
    let bad = |line: usize, msg: String| {
        stop(
            report.clone(),
            Exit::Input,
            format!("INPUT ERROR {map_name}:{line}:1: {msg}"),
        )
    };
    let mut seen = vec![false; s.size()];
    for (from, to, line) in &m.pairs {
        let x = s
            .index_of(from)
            .ok_or_else(|| bad(*line, format!("`{from}` is not in the domain")))?;
        if codomain.index_of(to).is_none() {
            return Err(bad(*line, format!("`{to}` is not in the codomain")));
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(bad(*line, format!("`{from}` is mapped twice")));
        }
    }
    if let Some(x) = seen.iter().position(|b| !b) {
        return Err(stop(
            report.clone(),
            Exit::Input,
            format!("INPUT ERROR {map_name}: `{}` has no image", s.label(x)),
        ));
    }
    let f = LinearMapTable::from_labels(
        s.clone(),
        codomain,
        m.pairs.iter().map(|(a, b, _)| (a.as_str(), b.as_str())),
    )
    .expect("map validated above");
    report.sections.push(structure_section(&s));
    let (linear, invertible, sections) = map_sections(&f);
    report.sections.extend(sections);
    let mut failures = Vec::new();
    if !linear {
        failures.push("NOT LINEAR");
    }
    if !invertible {
        failures.push("NOT INVERTIBLE");
    }
    if failures.is_empty() {
        report.result = "ISOMORPHISM".into();
    } else {
        report.result = failures.join(", ");
        report.exit = Exit::Failure;
    }
    Ok(())
}

fn cmd_lemmas(report: &mut Report, path: &Path) -> Step<()> {
    let s = load_structure(report, path)?;
    report.sections.push(structure_section(&s));
    let reports = [
        lemma_8_iff_1_and_9(&s),
        lemma_a_zero(&s),
        lemma_commutativity_derivable(&s),
    ];
    let (mut holds, mut unmet, mut inapplicable, mut counter) = (0, 0, 0, 0);
    for r in &reports {
        let mut sec = Section::new(format!("lemma {}", r.lemma));
        for p in &r.parts {
            sec.line(p.claim, p.outcome.to_string());
            match &p.outcome {
                LemmaOutcome::Holds => holds += 1,
                LemmaOutcome::PremiseNotMet(_) => unmet += 1,
                LemmaOutcome::NotApplicable(_) => inapplicable += 1,
                LemmaOutcome::Counterexample(dump) => {
                    counter += 1;
                    for l in dump.lines() {
                        sec.line(format!("| {l}"), "");
                    }
                }
            }
        }
        report.sections.push(sec);
    }
    report.result = format!(
        "lemmas: {counter} counterexamples ({holds} hold, {unmet} premise not met, {inapplicable} not applicable)"
    );
    if counter > 0 {
        report.exit = Exit::Failure;
    }
    Ok(())
}

fn cmd_enumerate(report: &mut Report, size: usize, name: &str, budget: u64) -> Step<()> {
    let semiring: TableSemiring =
        Builtin::parse(name)
            .and_then(|b| b.table())
            .ok_or_else(|| {
                stop(
                    report.clone(),
                    Exit::Input,
                    format!("INPUT ERROR `{name}` is not a finite builtin semiring"),
                )
            })?;
    let all = match enumerate_structures(size, &semiring, budget) {
        Ok(it) => it,
        Err(Error::BudgetExceeded { needed, .. }) => {
            return Err(stop(
                report.clone(),
                Exit::Budget,
                format!("REFUSED ({needed} structures exceed the budget of {budget})"),
            ))
        }
        Err(e) => {
            return Err(stop(
                report.clone(),
                Exit::Input,
                format!("INPUT ERROR {e}"),
            ))
        }
    };
    let mut listing = Section::new("structures");
    let (mut total, mut standard, mut free, mut undecided, mut counter) = (0u64, 0, 0, 0, 0);
    let mut keys = Vec::new();
    for s in all {
        let v = find_basis(&s, budget);
        let lemmas = [
            lemma_8_iff_1_and_9(&s),
            lemma_a_zero(&s),
            lemma_commutativity_derivable(&s),
        ];
        counter += lemmas.iter().map(|l| l.counterexamples()).sum::<usize>();
        if v.axioms.is_standard() {
            standard += 1;
        }
        let verdict = match v.status {
            FreenessStatus::Free => {
                free += 1;
                format!("free rank {}", v.rank().unwrap())
            }
            FreenessStatus::NotFree => "not free".into(),
            FreenessStatus::Undecided => {
                undecided += 1;
                "undecided".into()
            }
        };
        let names = |t: &[usize]| t.iter().map(|&x| s.label(x)).collect::<Vec<_>>().join(" ");
        keys.push(format!("#{total}"));
        listing.line(
            "",
            format!(
                "add {} | action {} | axioms {}/9 | {verdict}",
                names(s.add_table()),
                names(s.action_table()),
                nine_count(&v.axioms).0
            ),
        );
        total += 1;
    }
    let width = keys.last().map_or(1, |k| k.len());
    for (line, key) in listing.lines.iter_mut().zip(keys) {
        line.key = format!("{key:>width$}");
    }
    let mut summary = Section::new("summary");
    summary
        .line("structures", total.to_string())
        .line("satisfying (1)-(8)", standard.to_string())
        .line("free", free.to_string())
        .line("undecided", undecided.to_string())
        .line("lemma counterexamples", counter.to_string());
    report.result = format!(
        "{total} structures of size {size} over {}, {standard} satisfy (1)-(8), {free} free",
        semiring.name()
    );
    report.exit = if undecided > 0 {
        Exit::Budget
    } else if counter > 0 {
        Exit::Failure
    } else {
        Exit::Ok
    };
    report.sections.extend([summary, listing]);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_label_splitting() {
        let args = vec![
            "a,b".to_string(),
            "[0,1],[1,0]".to_string(),
            "c".to_string(),
        ];
        assert_eq!(split_labels(&args), ["a", "b", "[0,1]", "[1,0]", "c"]);
    }

    #[test]
    fn enumerate_singletons() {
        let cli = Cli::parse_from(["freemod", "enumerate", "--size", "1", "--semiring", "gf(3)"]);
        let r = run(&cli);
        assert_eq!(r.exit, Exit::Ok);
        assert_eq!(
            r.result,
            "1 structures of size 1 over gf(3), 1 satisfy (1)-(8), 1 free"
        );
        let cli = Cli::parse_from([
            "freemod",
            "enumerate",
            "--size",
            "2",
            "--semiring",
            "gf(2)",
            "--budget",
            "10",
        ]);
        assert_eq!(run(&cli).exit, Exit::Budget);
        let cli = Cli::parse_from([
            "freemod",
            "enumerate",
            "--size",
            "1",
            "--semiring",
            "integers",
        ]);
        assert_eq!(run(&cli).exit, Exit::Input);
    }
}
