//! Command-line front end.
//!
//! Module commands always print one JSON document (with `"schema": 1` and a
//! run manifest) on stdout and a short human summary on stderr unless
//! `--quiet`. `reproduce-paper` prints per-check lines, or JSON with
//! `--json`. Exit codes: 0 pass/decided, 1 verified failure, 2 input error.
//!
//! Algebra arguments are JSON files, `-` for stdin, or `catalog:NAME`.

use std::ffi::OsString;
use std::io::Read;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::boothby_wang;
use crate::coordforms;
use crate::error::{Error, Result};
use crate::exterior::ExteriorForm;
use crate::fourman::{self, PairedManifoldDescriptor, T2BundleData};
use crate::json::{self as js, AlgebraLiteral};
use crate::lie::{Catalog, LieAlgebra};
use crate::pairs::{self, PairKind, PairReport};
use crate::reproduce;
use crate::search;

pub const SCHEMA: u32 = 1;
const DEFAULT_SEED: u64 = 2024;

#[derive(Parser, Debug)]
#[command(name = "sympair", version, about = "Verify and construct symplectic pairs on Lie algebras")]
pub struct Cli {
    /// Seed for randomized steps.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Machine-readable output where a command has a human default.
    #[arg(long, global = true)]
    pub json: bool,
    /// Suppress the human summary.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a pair of forms on an algebra.
    CheckPair { algebra: String, forms: String },
    /// Boothby–Wang lift of a pair (or central extension by one 2-form).
    BwExtend {
        algebra: String,
        forms: String,
        /// Extend by both forms at once (torus extension).
        #[arg(long)]
        twice: bool,
    },
    /// Decide existence of an invariant symplectic pair in dimension 4.
    SearchPair {
        algebra: String,
        /// Also run the randomized oracle with this many trials.
        #[arg(long)]
        oracle: Option<usize>,
    },
    /// Check polynomial forms on a coordinate chart.
    CoordCheck { input: String },
    /// Classify a T^2-bundle over T^2 given in table normal form.
    ClassifyBundle {
        #[arg(long = "C", value_name = "a,b,c,d", allow_hyphen_values = true)]
        c: String,
        #[arg(long = "D", value_name = "I|-I", allow_hyphen_values = true)]
        d: String,
        #[arg(long, value_name = "m,n", allow_hyphen_values = true)]
        euler: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<i64>,
    },
    /// Gompf sum of two manifolds carrying symplectic pairs.
    Gompf { first: String, second: String },
    /// Run every worked example end to end.
    ReproducePaper,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub source: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: &'static str,
    pub version: &'static str,
    pub inputs: Vec<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub outcome: &'static str,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Outcome {
    code: i32,
    result: Value,
    summary: Vec<String>,
}

struct Ctx {
    inputs: Vec<InputDigest>,
    seed: Option<u64>,
    catalog: Catalog,
}

fn digest(source: &str, bytes: &[u8]) -> InputDigest {
    InputDigest {
        source: source.to_string(),
        sha256: hex::encode(Sha256::digest(bytes)),
    }
}

impl Ctx {
    fn read(&mut self, arg: &str) -> Result<String> {
        let text = if arg == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Input(format!("cannot read stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(arg).map_err(|e| Error::Input(format!("cannot read {arg}: {e}")))?
        };
        self.inputs.push(digest(arg, text.as_bytes()));
        Ok(text)
    }

    fn algebra(&mut self, arg: &str) -> Result<LieAlgebra> {
        if let Some(name) = arg.strip_prefix("catalog:") {
            self.inputs.push(digest(arg, arg.as_bytes()));
            return Ok(self.catalog.get(name)?.algebra);
        }
        let text = self.read(arg)?;
        js::parse_algebra(&text, arg, &self.catalog)
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn pair_value(report: &PairReport) -> Value {
    let mut v = to_value(report);
    let passed: Map<String, Value> = report.axioms.iter().map(|a| (a.name.clone(), Value::Bool(a.pass))).collect();
    v["axioms_passed"] = Value::Object(passed);
    v["explanation"] = to_value(&report.explanation());
    v
}

fn verdict_code(pass: bool) -> i32 {
    if pass {
        0
    } else {
        1
    }
}

fn cmd_check_pair(ctx: &mut Ctx, algebra: &str, forms: &str) -> Result<Outcome> {
    let g = ctx.algebra(algebra)?;
    let text = ctx.read(forms)?;
    let input = js::parse_forms(&text, forms)?;
    let report = pairs::check_pair(&g, input.kind, &input.forms)?;
    let mut summary = vec![format!(
        "{} {} pair on {}: {}",
        if report.verdict { "valid" } else { "invalid" },
        serde_json::to_string(&input.kind).unwrap_or_default().trim_matches('"'),
        g.name().unwrap_or("algebra"),
        if report.verdict { "all axioms pass" } else { "some axioms fail" }
    )];
    summary.extend(report.explanation());
    Ok(Outcome {
        code: verdict_code(report.verdict),
        result: pair_value(&report),
        summary,
    })
}

fn single_form(text: &str, source: &str) -> Result<Option<ExteriorForm>> {
    let v: Value = js::parse(text, source)?;
    if v.get("degree").is_some() {
        return js::parse_value(text, source).map(Some);
    }
    Ok(None)
}

fn cmd_bw_extend(ctx: &mut Ctx, algebra: &str, forms: &str, twice: bool) -> Result<Outcome> {
    let g = ctx.algebra(algebra)?;
    let text = ctx.read(forms)?;
    if let Some(omega) = single_form(&text, forms)? {
        if twice {
            return Err(Error::Input("--twice needs a symplectic pair".into()));
        }
        let ext = boothby_wang::central_extension(&g, &omega)?;
        let b1 = ext.total.cohomology_dims()[1];
        let predicted = boothby_wang::predicted_b1(&g, &omega)?;
        return Ok(Outcome {
            code: 0,
            result: json!({
                "extension": AlgebraLiteral::from_algebra(&ext.total),
                "central_index": ext.central_index(),
                "connection": ext.connection,
                "assumptions": ext.assumptions,
                "b1": b1,
                "predicted_b1": predicted,
            }),
            summary: vec![format!("central extension of dimension {}, b1 = {b1}", ext.total.dim())],
        });
    }
    let input = js::parse_forms(&text, forms)?;
    let [a, b] = [&input.forms[0], &input.forms[1]];
    let pre = match input.kind {
        PairKind::Symplectic => pairs::check_symplectic_pair(&g, a, b)?,
        PairKind::ContactSymplectic if !twice => pairs::check_contact_symplectic_pair(&g, a, b)?,
        kind => {
            return Err(Error::Input(format!(
                "cannot lift a {} pair{}",
                serde_json::to_string(&kind).unwrap_or_default().trim_matches('"'),
                if twice { " with --twice" } else { "" }
            )))
        }
    };
    if !pre.verdict {
        let mut summary = vec!["input is not a valid pair; nothing lifted".to_string()];
        summary.extend(pre.explanation());
        return Ok(Outcome {
            code: 1,
            result: json!({ "input_report": pair_value(&pre) }),
            summary,
        });
    }
    let (total, first, second, report, assumptions) = match (input.kind, twice) {
        (PairKind::Symplectic, true) => {
            let t = boothby_wang::torus_extension(&g, a, b)?;
            (t.total, ("alpha", t.alpha), ("gamma", t.gamma), t.report, Vec::new())
        }
        (PairKind::Symplectic, false) => {
            let l = boothby_wang::bw_contact_symplectic(&g, a, b)?;
            (l.extension.total, ("alpha", l.alpha), ("beta", l.beta), l.report, l.extension.assumptions)
        }
        _ => {
            let l = boothby_wang::bw_contact_pair_from_cs(&g, a, b)?;
            (l.extension.total, ("alpha", l.alpha), ("gamma", l.gamma), l.report, l.extension.assumptions)
        }
    };
    let mut result = json!({
        "extension": AlgebraLiteral::from_algebra(&total),
        "report": pair_value(&report),
        "assumptions": assumptions,
    });
    result[first.0] = to_value(&first.1);
    result[second.0] = to_value(&second.1);
    let mut summary = vec![format!(
        "lifted to dimension {}: {}",
        total.dim(),
        if report.verdict { "valid" } else { "INVALID" }
    )];
    summary.extend(report.explanation());
    Ok(Outcome {
        code: verdict_code(report.verdict),
        result,
        summary,
    })
}

fn cmd_search_pair(ctx: &mut Ctx, algebra: &str, oracle: Option<usize>) -> Result<Outcome> {
    let g = ctx.algebra(algebra)?;
    let gram = search::wedge_gram(&g)?;
    let sig = gram.signature();
    let found = search::construct_pair_witness(&g)?;
    let witness = found.witness().map(|w| {
        json!({
            "forms": [w.omega1, w.omega2],
            "kind": PairKind::Symplectic,
            "radicand": w.radicand,
        })
    });
    let mut result = json!({
        "symplectic": !gram.is_zero(),
        "pair": sig.is_indefinite(),
        "signature": sig.as_array(),
        "witness": witness,
        "certificate": found.certificate(),
    });
    let mut summary = vec![format!(
        "{}: signature {:?}, symplectic {}, pair {}",
        g.name().unwrap_or("algebra"),
        sig.as_array(),
        !gram.is_zero(),
        sig.is_indefinite()
    )];
    if let Some(trials) = oracle {
        let seed = ctx.seed.unwrap_or(DEFAULT_SEED);
        ctx.seed = Some(seed);
        let hit = search::brute_force_oracle(&g, seed, trials)?;
        result["oracle"] = json!({ "seed": seed, "trials": trials, "found": hit });
        summary.push(format!("oracle ({trials} trials, seed {seed}): found {hit}"));
    }
    Ok(Outcome {
        code: 0,
        result,
        summary,
    })
}

fn cmd_coord_check(ctx: &mut Ctx, input: &str) -> Result<Outcome> {
    let text = ctx.read(input)?;
    let c = js::parse_coord_input(&text, input)?;
    let samples = c.sample_points()?;
    if c.forms.is_empty() || c.forms.len() > 2 {
        return Err(Error::Input(format!("expected one or two forms, found {}", c.forms.len())));
    }
    let mut pass = true;
    let mut summary = Vec::new();
    let mut result = Map::new();
    if let [a, b] = c.forms.as_slice() {
        let rep = coordforms::check_coordinate_pair(a, b, &samples)?;
        pass &= rep.verdict;
        summary.push(format!(
            "({}, {}): {} over {} samples",
            coordforms::display(a),
            coordforms::display(b),
            if rep.verdict { "symplectic pair" } else { "not a symplectic pair" },
            rep.samples
        ));
        result.insert("pair".into(), to_value(&rep));
    } else {
        let rep = coordforms::generic_rank(&c.forms[0], &samples)?;
        summary.push(format!("{}: ranks {}..{}", coordforms::display(&c.forms[0]), rep.min, rep.max));
        result.insert("ranks".into(), to_value(&rep));
    }
    let mut invariance = Vec::new();
    for phi in &c.forms {
        let v = coordforms::invariance_check(phi, &c.maps)?;
        for x in v.iter().filter(|x| !x.invariant) {
            pass = false;
            summary.push(format!("{} not invariant under map {}", coordforms::display(phi), x.generator));
        }
        invariance.push(v);
    }
    result.insert("invariance".into(), to_value(&invariance));
    result.insert("samples".into(), json!(samples.len()));
    result.insert("verdict".into(), json!(pass));
    Ok(Outcome {
        code: verdict_code(pass),
        result: Value::Object(result),
        summary,
    })
}

fn int_list<const N: usize>(s: &str, what: &str) -> Result<[i64; N]> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::Input(format!("{what}: '{s}' ({e})")))?;
    v.try_into()
        .map_err(|v: Vec<i64>| Error::Input(format!("{what}: expected {N} integers, found {}", v.len())))
}

fn cmd_classify_bundle(ctx: &mut Ctx, c: &str, d: &str, euler: &str, lambda: Option<i64>) -> Result<Outcome> {
    let [a, b, cc, dd] = int_list::<4>(c, "--C")?;
    let d = match d.trim() {
        "I" => [[1, 0], [0, 1]],
        "-I" => [[-1, 0], [0, -1]],
        other => return Err(Error::Input(format!("--D must be I or -I, got '{other}'"))),
    };
    let [m, n] = int_list::<2>(euler, "--euler")?;
    let data = T2BundleData::new([[a, b], [cc, dd]], d, (m, n), lambda)?;
    ctx.inputs.push(digest("arguments", serde_json::to_string(&data).unwrap_or_default().as_bytes()));
    let cls = fourman::classify_t2_bundle(&data)?;
    Ok(Outcome {
        code: 0,
        result: json!({
            "row": cls.row.label().to_string(),
            "b1": cls.b1,
            "geometry": cls.geometry,
            "algebra": cls.algebra,
            "coordinate_forms": cls.coordinate_forms,
        }),
        summary: vec![format!("row {}, b1 = {}, geometry {}", cls.row, cls.b1, cls.geometry)],
    })
}

fn cmd_gompf(ctx: &mut Ctx, first: &str, second: &str) -> Result<Outcome> {
    let t1 = ctx.read(first)?;
    let t2 = ctx.read(second)?;
    let d1: PairedManifoldDescriptor = js::parse_value(&t1, first)?;
    let d2: PairedManifoldDescriptor = js::parse_value(&t2, second)?;
    let f = fourman::gompf_feasible(&d1, &d2)?;
    if !f.feasible {
        let mut summary = vec!["Gompf sum not feasible".to_string()];
        summary.extend(f.reasons.iter().cloned());
        return Ok(Outcome {
            code: 1,
            result: json!({ "feasibility": f }),
            summary,
        });
    }
    let sum = fourman::gompf_invariants(&d1, &d2)?;
    let d = &sum.descriptor;
    // The normal bundle of each foliation is the tangent bundle of the other.
    let riemannian = json!({
        "f": fourman::pasternack_obstruction(d.p1_tg, 2)?,
        "g": fourman::pasternack_obstruction(d.p1_tf, 2)?,
    });
    Ok(Outcome {
        code: 0,
        summary: vec![format!(
            "sum along genus {} leaves: chi = {}, sigma = {}, p1(TF) = {}, p1(TG) = {}",
            sum.genus, d.euler_characteristic, d.signature, d.p1_tf, d.p1_tg
        )],
        result: json!({ "feasibility": f, "sum": sum, "riemannian_possible": riemannian }),
    })
}

fn error_code(_: &Error) -> i32 {
    2
}

fn document(manifest: &RunManifest, result: Value) -> String {
    let mut doc = Map::new();
    doc.insert("schema".into(), json!(SCHEMA));
    if let Value::Object(m) = result {
        doc.extend(m);
    }
    doc.insert("manifest".into(), to_value(manifest));
    let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json");
    s.push('\n');
    s
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::CheckPair { .. } => "check-pair",
        Command::BwExtend { .. } => "bw-extend",
        Command::SearchPair { .. } => "search-pair",
        Command::CoordCheck { .. } => "coord-check",
        Command::ClassifyBundle { .. } => "classify-bundle",
        Command::Gompf { .. } => "gompf",
        Command::ReproducePaper => "reproduce-paper",
    }
}

fn run_reproduce(cli: &Cli) -> RunOutput {
    let report = reproduce::reproduce(&Catalog::standard());
    let code = verdict_code(report.all_passed());
    let manifest = RunManifest {
        command: "reproduce-paper",
        version: env!("CARGO_PKG_VERSION"),
        inputs: Vec::new(),
        seed: None,
        outcome: if code == 0 { "pass" } else { "fail" },
    };
    let stdout = if cli.json {
        document(&manifest, json!({ "checks": report.checks, "passed": report.passed, "failed": report.failed }))
    } else {
        let mut s = String::new();
        for c in &report.checks {
            if cli.quiet && c.pass {
                continue;
            }
            s.push_str(&format!("[{}] {:<12} {}", if c.pass { "pass" } else { "FAIL" }, c.group, c.name));
            if !c.pass && !c.detail.is_empty() {
                s.push_str(&format!(": {}", c.detail));
            }
            s.push('\n');
        }
        s.push_str(&format!("{} passed, {} failed\n", report.passed, report.failed));
        s
    };
    RunOutput {
        code,
        stdout,
        stderr: String::new(),
    }
}

/// Parse `args` (including the program name) and run one command.
pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                RunOutput { code, stdout: text, stderr: String::new() }
            } else {
                RunOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> RunOutput {
    if matches!(cli.command, Command::ReproducePaper) {
        return run_reproduce(cli);
    }
    let mut ctx = Ctx {
        inputs: Vec::new(),
        seed: cli.seed,
        catalog: Catalog::standard(),
    };
    let outcome = match &cli.command {
        Command::CheckPair { algebra, forms } => cmd_check_pair(&mut ctx, algebra, forms),
        Command::BwExtend { algebra, forms, twice } => cmd_bw_extend(&mut ctx, algebra, forms, *twice),
        Command::SearchPair { algebra, oracle } => cmd_search_pair(&mut ctx, algebra, *oracle),
        Command::CoordCheck { input } => cmd_coord_check(&mut ctx, input),
        Command::ClassifyBundle { c, d, euler, lambda } => cmd_classify_bundle(&mut ctx, c, d, euler, *lambda),
        Command::Gompf { first, second } => cmd_gompf(&mut ctx, first, second),
        Command::ReproducePaper => unreachable!(),
    };
    let outcome = outcome.unwrap_or_else(|e| Outcome {
        code: error_code(&e),
        result: json!({ "error": e.to_string() }),
        summary: vec![format!("error: {e}")],
    });
    let manifest = RunManifest {
        command: command_name(&cli.command),
        version: env!("CARGO_PKG_VERSION"),
        inputs: ctx.inputs,
        seed: ctx.seed,
        outcome: match outcome.code {
            0 => "pass",
            1 => "fail",
            _ => "input-error",
        },
    };
    let stderr = if cli.quiet && outcome.code != 2 {
        String::new()
    } else {
        outcome.summary.iter().map(|l| format!("{l}\n")).collect()
    };
    RunOutput {
        code: outcome.code,
        stdout: document(&manifest, outcome.result),
        stderr,
    }
}
