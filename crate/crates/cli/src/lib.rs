//! Command-line front end: parses arguments, runs one computation or
//! verification suite, and renders a report as text or JSON.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or a
//! computation errors, 2 for usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use uturn::demazure::{atom_polynomial, character, demazure_polynomial, CartanData};
use uturn::model::{times_rho, verify_functional_equation, Relation};
use uturn::patterns::{
    compute_key_pattern, compute_key_tableau, enumerate_patterns, enumerate_tableaux, pattern_to_tableau,
    tableau_to_pattern, ProctorPattern, Tableau,
};
use uturn::ybe::{
    kernel_matches_table, refute_gamma_delta_trials, rq_limit_check, solve_rll_kernel_generic,
    verify_reflection_equation, verify_unitarity, verify_ybe, RKind, RMatrix,
};
use uturn::{CartanType, Error, Family, LaurentPolynomial, Model, Partition, SignedPermutation, Variables, WeylGroup};

/// Fixed default seed for every randomized check.
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Parser, Debug)]
#[command(name = "uturn", version, about = "Colored U-turn lattice models for Sp(2n) and SO(2n+1)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Seed for randomized verifications.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    /// Cartan type, B or C.
    #[arg(long = "type", value_parser = parse_type)]
    pub cartan_type: CartanType,
    #[arg(long)]
    pub rank: usize,
    /// Partition as a comma list, e.g. 2,1.
    #[arg(long, value_parser = parse_partition)]
    pub shape: Partition,
}

#[derive(Args, Debug, Clone)]
pub struct WeylArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Weyl element as a word ("s2 s1", "w0", "1") or a window ("[2,-1]").
    #[arg(long, default_value = "1")]
    pub weyl: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partition function of the atom model.
    Atom(WeylArgs),
    /// Partition function of the character model.
    Character(WeylArgs),
    /// List the admissible states of a model with their weights.
    States {
        #[command(flatten)]
        args: WeylArgs,
        #[arg(long, value_parser = parse_family, default_value = "atom")]
        family: Family,
        /// Expand type-B states over their U-turn markings.
        #[arg(long)]
        marked: bool,
    },
    /// Partition function and state count of either family.
    Partition {
        #[command(flatten)]
        args: WeylArgs,
        #[arg(long, value_parser = parse_family, default_value = "atom")]
        family: Family,
    },
    /// Proctor patterns with a given top row.
    Patterns(ModelArgs),
    /// King (type C) or Sundaram (type B) tableaux of a shape, with keys.
    Tableaux(ModelArgs),
    /// Right key of a tableau or pattern, as a Weyl group element.
    Key {
        #[arg(long = "type", value_parser = parse_type)]
        cartan_type: CartanType,
        #[arg(long)]
        rank: usize,
        /// Tableau such as [[2b,1],[1]].
        #[arg(long, conflicts_with = "pattern", required_unless_present = "pattern")]
        tableau: Option<String>,
        /// Pattern such as [(2,1),(1,0),(1),(1)].
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Run an identity suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: Target,
    /// R-matrix kind; all applicable kinds when omitted.
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<RKind>,
    /// Model family; both when omitted.
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
    /// Cartan type; both when omitted.
    #[arg(long = "type", value_parser = parse_type)]
    pub cartan_type: Option<CartanType>,
    /// Random free-entry draws for the nonexistence check.
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    /// Number of colors for the kernel solver.
    #[arg(long, default_value_t = 4)]
    pub colors: usize,
    /// Rank for the theorem and functional-equation suites.
    #[arg(long, default_value_t = 2)]
    pub rank: usize,
    /// Largest partition size for the theorem suite.
    #[arg(long, default_value_t = 3)]
    pub max_size: i32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Ybe,
    Reflection,
    Unitarity,
    Nonexistence,
    Kernel,
    RqLimit,
    Functional,
    Theorem,
}

fn parse_type(s: &str) -> Result<CartanType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<RKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

/// One named check in a report.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }
}

/// The structured outcome of one command.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    /// Human-readable body for text output.
    pub text: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> =
            self.checks.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect();
        json!({"command": self.command, "inputs": self.inputs, "result": self.result, "checks": checks})
    }

    pub fn to_text(&self) -> String {
        let mut out = self.text.clone();
        if !out.is_empty() && !out.ends_with('\n') {
            out.push('\n');
        }
        for c in &self.checks {
            let _ = writeln!(out, "check {}: {} ({})", c.name, if c.pass { "pass" } else { "FAIL" }, c.detail);
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable report");
                s.push('\n');
                s
            }
        }
    }
}

/// Result of [`run_command`].
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    /// Report, usage or error text meant for standard output.
    pub stdout: String,
    /// Diagnostics meant for standard error.
    pub stderr: String,
}

/// Parse `argv` (including the program name) and run the command. The
/// report goes to `--output` when given.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            let code = if e.is_usage() { 2 } else { 1 };
            return Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") };
        }
    };
    let body = report.render(cli.format);
    let code = if report.pass() { 0 } else { 1 };
    match &cli.output {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) },
        },
        None => Outcome { code, stdout: body, stderr: String::new() },
    }
}

/// Reduced word such as `s2 s1`, or `1` for the identity.
pub fn word_string(w: &SignedPermutation) -> String {
    let word = WeylGroup::new(w.rank()).reduced_word(w).to_vec();
    if word.is_empty() {
        "1".to_string()
    } else {
        word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }
}

fn weyl_json(w: &SignedPermutation) -> Value {
    json!({"word": word_string(w), "window": w.to_string()})
}

fn model_inputs(args: &ModelArgs) -> Value {
    json!({"type": args.cartan_type.to_string(), "rank": args.rank, "shape": args.shape.padded(args.rank).ok()})
}

fn weyl_of(args: &WeylArgs) -> uturn::Result<SignedPermutation> {
    SignedPermutation::parse(&args.weyl, args.model.rank)
}

fn rho_text(cd: &CartanData) -> String {
    let rho: Vec<String> = cd.rho().iter().map(|x| x.to_string()).collect();
    format!("({})", rho.join(","))
}

fn execute(cli: &Cli) -> uturn::Result<Report> {
    match &cli.command {
        Command::Atom(args) => family_command("atom", Family::Atom, args),
        Command::Character(args) => family_command("character", Family::Character, args),
        Command::Partition { args, family } => partition_command(*family, args),
        Command::States { args, family, marked } => states_command(*family, args, *marked),
        Command::Patterns(args) => patterns_command(args),
        Command::Tableaux(args) => tableaux_command(args),
        Command::Key { cartan_type, rank, tableau, pattern } => {
            key_command(*cartan_type, *rank, tableau.as_deref(), pattern.as_deref())
        }
        Command::Verify(v) => verify_command(v, cli.seed),
    }
}

fn family_command(name: &str, family: Family, args: &WeylArgs) -> uturn::Result<Report> {
    let m = &args.model;
    let w = weyl_of(args)?;
    let model = Model::new(&m.shape, &w, family, m.cartan_type)?;
    let z = model.partition_function();
    let cd = CartanData::new(m.cartan_type, m.rank);
    let (operator, reference) = match family {
        Family::Atom => ("A_w", atom_polynomial(&w, &m.shape, &cd)?),
        Family::Character => ("D_w", demazure_polynomial(&w, &m.shape, &cd)?),
    };
    let agrees = times_rho(&reference, &cd) == z;
    let note = format!(
        "# Z = z^rho * {operator}(z; lambda) with rho = {}; {operator}(z; lambda) = {reference}",
        rho_text(&cd)
    );
    let mut inputs = model_inputs(m);
    inputs["weyl"] = weyl_json(&w);
    Ok(Report {
        command: name.into(),
        inputs,
        result: json!({
            "partition_function": z.to_json(),
            "text": z.to_string(),
            "operator_polynomial": reference.to_json(),
            "states": model.count_states(),
        }),
        text: format!("{note}\n{z}\n"),
        checks: vec![Check::new(
            "operator-agreement",
            agrees,
            format!("Z equals z^rho * {operator} computed by Demazure operators"),
        )],
    })
}

fn partition_command(family: Family, args: &WeylArgs) -> uturn::Result<Report> {
    let m = &args.model;
    let w = weyl_of(args)?;
    let model = Model::new(&m.shape, &w, family, m.cartan_type)?;
    let z = model.partition_function();
    let count = model.count_states();
    let mut inputs = model_inputs(m);
    inputs["weyl"] = weyl_json(&w);
    inputs["family"] = json!(family.to_string());
    Ok(Report {
        command: "partition".into(),
        inputs,
        result: json!({"partition_function": z.to_json(), "text": z.to_string(), "states": count}),
        text: format!("{z}\n# {count} states\n"),
        checks: Vec::new(),
    })
}

fn states_command(family: Family, args: &WeylArgs, marked: bool) -> uturn::Result<Report> {
    let m = &args.model;
    let w = weyl_of(args)?;
    let model = Model::new(&m.shape, &w, family, m.cartan_type)?;
    let states = model.enumerate_states();
    let mut text = String::new();
    let mut items = Vec::new();
    let mut total = LaurentPolynomial::zero(model.vars());
    if marked {
        let all = model.enumerate_marked_states()?;
        for (k, ms) in all.iter().enumerate() {
            let wt = model.marked_weight(ms)?;
            let marks: Vec<String> = ms
                .marks
                .iter()
                .map(|x| match x {
                    Some(true) => "marked".into(),
                    Some(false) => "unmarked".into(),
                    None => "-".into(),
                })
                .collect();
            let _ = write!(text, "state {}: {wt}  [{}]\n{}", k + 1, marks.join(" "), model.render(&ms.state));
            let mut j = model.state_json(&ms.state)?;
            j["marks"] = json!(ms.marks);
            j["marked_weight"] = json!(wt.to_string());
            items.push(j);
            total += wt;
        }
    } else {
        for (k, s) in states.iter().enumerate() {
            let wt = model.state_weight(s)?;
            let _ = write!(text, "state {}: {wt}\n{}", k + 1, model.render(s));
            items.push(model.state_json(s)?);
            total += wt;
        }
    }
    let z = model.partition_function();
    let mut inputs = model_inputs(m);
    inputs["weyl"] = weyl_json(&w);
    inputs["family"] = json!(family.to_string());
    inputs["marked"] = json!(marked);
    Ok(Report {
        command: "states".into(),
        inputs,
        result: json!({"model": model.to_json(), "states": items, "count": items.len()}),
        text,
        checks: vec![Check::new("weights-sum", total == z, format!("state weights sum to {z}"))],
    })
}

fn patterns_command(args: &ModelArgs) -> uturn::Result<Report> {
    let pats = enumerate_patterns(&args.shape, args.rank, args.cartan_type)?;
    let cd = CartanData::new(args.cartan_type, args.rank);
    let mut text = String::new();
    let mut items = Vec::new();
    let mut sum = LaurentPolynomial::zero(cd.vars());
    for p in &pats {
        let wt = p.weight();
        let _ = writeln!(text, "{p}  {wt}");
        items.push(json!({"pattern": p, "weight": wt.to_string()}));
        sum += wt;
    }
    let chi = character(&args.shape, &cd)?;
    Ok(Report {
        command: "patterns".into(),
        inputs: model_inputs(args),
        result: json!({"patterns": items, "count": pats.len()}),
        text,
        checks: vec![Check::new(
            "character",
            sum == chi,
            format!("{} pattern weights sum to the irreducible character", pats.len()),
        )],
    })
}

fn tableaux_command(args: &ModelArgs) -> uturn::Result<Report> {
    let tabs = enumerate_tableaux(&args.shape, args.rank, args.cartan_type)?;
    let pats = enumerate_patterns(&args.shape, args.rank, args.cartan_type)?;
    let mut text = String::new();
    let mut items = Vec::new();
    let mut theta_ok = true;
    for t in &tabs {
        let key = compute_key_tableau(t)?;
        let p = tableau_to_pattern(t)?;
        theta_ok &= pattern_to_tableau(&p, args.cartan_type)? == *t;
        let _ = writeln!(text, "{t}  key {}", word_string(&key.w));
        items.push(json!({"tableau": t.to_string(), "pattern": p, "key": weyl_json(&key.w)}));
    }
    Ok(Report {
        command: "tableaux".into(),
        inputs: model_inputs(args),
        result: json!({"tableaux": items, "count": tabs.len()}),
        text,
        checks: vec![
            Check::new("count", tabs.len() == pats.len(), format!("{} tableaux, {} patterns", tabs.len(), pats.len())),
            Check::new("theta-round-trip", theta_ok, "pattern to tableau inverts tableau to pattern"),
        ],
    })
}

fn key_command(
    cartan_type: CartanType,
    rank: usize,
    tableau: Option<&str>,
    pattern: Option<&str>,
) -> uturn::Result<Report> {
    let (key, input) = match (tableau, pattern) {
        (Some(t), _) => {
            let t = Tableau::parse(t, rank, cartan_type)?;
            (compute_key_tableau(&t)?, json!({"tableau": t.to_string()}))
        }
        (None, Some(p)) => {
            let p = ProctorPattern::parse(p)?;
            if p.rank() != rank {
                return Err(Error::RankMismatch { left: p.rank(), right: rank });
            }
            (compute_key_pattern(&p, cartan_type)?, json!({"pattern": p}))
        }
        (None, None) => return Err(Error::Invalid("give --tableau or --pattern".into())),
    };
    let mut inputs = input;
    inputs["type"] = json!(cartan_type.to_string());
    inputs["rank"] = json!(rank);
    Ok(Report {
        command: "key".into(),
        inputs,
        result: weyl_json(&key.w),
        text: format!("{}\n", word_string(&key.w)),
        checks: Vec::new(),
    })
}

fn families(f: Option<Family>) -> Vec<Family> {
    f.map_or(vec![Family::Atom, Family::Character], |x| vec![x])
}

fn types(t: Option<CartanType>) -> Vec<CartanType> {
    t.map_or(vec![CartanType::B, CartanType::C], |x| vec![x])
}

fn verify_command(v: &VerifyArgs, seed: u64) -> uturn::Result<Report> {
    let mut checks = Vec::new();
    let mut results = Vec::new();
    match v.target {
        Target::Ybe => {
            let kinds = v.kind.map_or(vec![RKind::GammaGamma, RKind::DeltaDelta, RKind::DeltaGamma], |k| vec![k]);
            for family in families(v.family) {
                for &kind in &kinds {
                    let r = verify_ybe(kind, family)?;
                    let detail = match r.mismatches.first() {
                        None => format!("{} nonzero boundaries of {}", r.nonzero_boundaries, r.boundaries),
                        Some(m) => format!(
                            "{} mismatches, first at {:?}: {} vs {}",
                            r.mismatches.len(),
                            m.boundary,
                            m.lhs,
                            m.rhs
                        ),
                    };
                    checks.push(Check::new(format!("ybe {kind} {family}"), r.pass(), detail));
                    results.push(json!({"kind": kind.to_string(), "family": family.to_string(), "pass": r.pass(),
                        "nonzero_boundaries": r.nonzero_boundaries, "mismatches": r.mismatches.len()}));
                }
            }
        }
        Target::Reflection => {
            for family in families(v.family) {
                for t in types(v.cartan_type) {
                    let r = verify_reflection_equation(family, t)?;
                    let ok = r.pass() && !r.nonzero.is_empty();
                    checks.push(Check::new(
                        format!("reflection {family} {t}"),
                        ok,
                        format!(
                            "alpha = z1^-2 on {} nonzero boundaries, {} mismatches",
                            r.nonzero.len(),
                            r.mismatches.len()
                        ),
                    ));
                    results.push(json!({"family": family.to_string(), "type": t.to_string(), "pass": ok}));
                }
            }
        }
        Target::Unitarity => {
            let kinds = v.kind.map_or(vec![RKind::GammaGamma, RKind::DeltaDelta], |k| vec![k]);
            let beta = LaurentPolynomial::monomial(Variables::z(2), vec![1, 1], 1);
            for family in families(v.family) {
                for &kind in &kinds {
                    let (ok, detail) = match verify_unitarity(kind, family) {
                        Ok(b) => (b == beta, format!("beta = {b}")),
                        Err(e) if e.is_usage() => return Err(e),
                        Err(e) => (false, e.to_string()),
                    };
                    checks.push(Check::new(format!("unitarity {kind} {family}"), ok, detail));
                    results.push(json!({"kind": kind.to_string(), "family": family.to_string(), "pass": ok}));
                }
            }
        }
        Target::Nonexistence => {
            for family in families(v.family) {
                let r = refute_gamma_delta_trials(family, seed, v.trials)?;
                for (k, a) in r.attempts.iter().enumerate() {
                    let label = if k == 0 { "default".to_string() } else { format!("random {k}") };
                    let detail = match &a.counterexample {
                        Some(m) => format!(
                            "free ({}, {}) fails at {:?}: {} vs {}",
                            a.free[0], a.free[1], m.boundary, m.lhs, m.rhs
                        ),
                        None => format!("free ({}, {}) satisfies the relation", a.free[0], a.free[1]),
                    };
                    checks.push(Check::new(
                        format!("gamma-delta {family} {label}"),
                        a.counterexample.is_some(),
                        detail,
                    ));
                }
                results.push(json!({"family": family.to_string(), "attempts": r.attempts.len(), "pass": r.pass()}));
            }
        }
        Target::Kernel => {
            let kinds = v.kind.map_or(RKind::ALL.to_vec(), |k| vec![k]);
            for family in families(v.family) {
                for &kind in &kinds {
                    let k = solve_rll_kernel_generic(kind, family, v.colors, seed)?;
                    let expected = if kind == RKind::GammaDelta { 0 } else { 1 };
                    let dims = (k.first.dimension, k.second.dimension);
                    checks.push(Check::new(
                        format!("kernel {kind} {family}"),
                        dims == (expected, expected),
                        format!(
                            "dimension {} and {} at {:?} and {:?}, expected {expected}; nonzero on the empty slot: {}",
                            dims.0, dims.1, k.first.point, k.second.point, k.first.nondegenerate
                        ),
                    ));
                    if kind == RKind::GammaGamma {
                        let table = RMatrix::new(kind, family);
                        let m = kernel_matches_table(&k.first, &table)? && kernel_matches_table(&k.second, &table)?;
                        checks.push(Check::new(
                            format!("kernel table {family}"),
                            m,
                            "kernel vector equals the table up to scale",
                        ));
                    }
                    results.push(json!({"kind": kind.to_string(), "family": family.to_string(),
                        "first": k.first, "second": k.second}));
                }
            }
        }
        Target::RqLimit => {
            let r = rq_limit_check()?;
            checks.push(Check::new(
                "q-limit",
                r.limit_pass(),
                format!("{} slots differ from the gamma-gamma table", r.limit_mismatches.len()),
            ));
            checks.push(Check::new(
                "transpose",
                r.transpose_pass(),
                format!("{} slots differ between reindexed gamma-gamma and delta-delta", r.transpose_mismatches.len()),
            ));
            let slots = |v: &[[uturn::Spin; 4]]| -> Vec<String> { v.iter().map(|t| format!("{t:?}")).collect() };
            results.push(json!({"limit_mismatches": slots(&r.limit_mismatches),
                "transpose_mismatches": slots(&r.transpose_mismatches)}));
        }
        Target::Functional => {
            let n = v.rank;
            let group = WeylGroup::new(n);
            let mut count = 0;
            let mut bad = Vec::new();
            for t in types(v.cartan_type) {
                for family in families(v.family) {
                    for l in Partition::all_up_to(n, v.max_size) {
                        for w in group.elements() {
                            for i in 1..=n {
                                let relation = if i < n { Relation::AStep } else { Relation::BcStep };
                                let s = SignedPermutation::generator(n, i)?;
                                if group.length(&s.compose(w)?) != group.length(w) + 1 {
                                    continue;
                                }
                                count += 1;
                                if !verify_functional_equation(relation, family, &l, w, i, t)? {
                                    bad.push(format!("{t} {family} {l} {} i={i}", word_string(w)));
                                }
                            }
                        }
                    }
                }
            }
            checks.push(Check::new(
                "functional-equations",
                bad.is_empty(),
                format!("{count} equations, failures {bad:?}"),
            ));
            results.push(json!({"equations": count, "failures": bad}));
        }
        Target::Theorem => {
            let n = v.rank;
            let mut count = 0;
            let mut bad = Vec::new();
            for t in types(v.cartan_type) {
                let cd = CartanData::new(t, n);
                for family in families(v.family) {
                    for l in Partition::all_up_to(n, v.max_size) {
                        for w in SignedPermutation::all(n) {
                            let z = Model::new(&l, &w, family, t)?.partition_function();
                            let reference = match family {
                                Family::Atom => atom_polynomial(&w, &l, &cd)?,
                                Family::Character => demazure_polynomial(&w, &l, &cd)?,
                            };
                            count += 1;
                            if times_rho(&reference, &cd) != z {
                                bad.push(format!("{t} {family} {l} {}", word_string(&w)));
                            }
                        }
                    }
                }
            }
            checks.push(Check::new("partition-functions", bad.is_empty(), format!("{count} models, failures {bad:?}")));
            results.push(json!({"models": count, "failures": bad}));
        }
    }
    let target = format!("{:?}", v.target).to_lowercase();
    Ok(Report {
        command: "verify".into(),
        inputs: json!({"target": target, "kind": v.kind.map(|k| k.to_string()), "family": v.family.map(|f| f.to_string()),
            "type": v.cartan_type.map(|t| t.to_string()), "seed": seed, "trials": v.trials, "colors": v.colors}),
        result: json!(results),
        text: String::new(),
        checks,
    })
}
