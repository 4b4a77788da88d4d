//! Command-line front end. `run` parses arguments, executes one command and
//! returns the exit code with the rendered report.

use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use stratalg::algebra::{is_symmetric, Algebra};
use stratalg::derived::{hom_homotopy, resolve_module, serre_duality_check, BoundedComplex};
use stratalg::homological::ext_dim;
use stratalg::json::{algebra_json, algebra_to_string, module_json, order_json, parse_algebra, parse_module, parse_order};
use stratalg::module::Module;
use stratalg::serre::{
    basic_projective, centre_comparison, check_serre_characterisation, check_serrecoapprox_equivalence,
    preconditions, projective_injective_vertices, serre_pairing_table, Coapp, ProjFunctorTable,
};
use stratalg::strat::{StratOrder, Stratified};
use stratalg::tilting::{cartan_equivalent, dc_tilting, ringel_dual, tilting_data};
use stratalg::zoo::{analyze, zoo_get, zoo_list, zoo_report, ZooEntry};
use stratalg::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

const DEFAULT_RESOLUTION_CAP: usize = 20;
const DEFAULT_LENGTH_CAP: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "stratalg", version, about = "Stratified algebras, tilting and Serre functors over the rationals")]
struct Cli {
    /// Render a short human-readable summary instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    human: bool,
    /// Emit the JSON report (default).
    #[arg(long, global = true)]
    json: bool,
    /// Cap on resolution lengths.
    #[arg(long, global = true, default_value_t = DEFAULT_RESOLUTION_CAP)]
    cap: usize,
    /// Path length cap for algebras whose JSON omits `lengthCap`.
    #[arg(long, global = true, default_value_t = DEFAULT_LENGTH_CAP)]
    length_cap: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Full report: stratification, tilting, Ringel dual, dc, Serre checks.
    Analyze(Input),
    #[command(subcommand)]
    Strat(StratCmd),
    #[command(subcommand)]
    Tilt(TiltCmd),
    #[command(subcommand)]
    Ringel(RingelCmd),
    #[command(subcommand)]
    Dc(DcCmd),
    #[command(subcommand)]
    Serre(SerreCmd),
    /// Partial coapproximation of a module.
    Coapp(CoappArgs),
    /// Centre of the algebra, optionally compared with the centre of End(Q).
    Centre(CentreArgs),
    #[command(subcommand)]
    Dbcheck(DbCmd),
    #[command(subcommand)]
    Zoo(ZooCmd),
}

#[derive(Subcommand, Debug)]
enum StratCmd {
    /// Standardly / properly stratified and quasi-hereditary verdicts.
    Check(Input),
}

#[derive(Subcommand, Debug)]
enum TiltCmd {
    /// Indecomposable tilting modules with their flags.
    Compute(Input),
}

#[derive(Subcommand, Debug)]
enum RingelCmd {
    /// Presentation of the Ringel dual.
    Dual(Input),
}

#[derive(Subcommand, Debug)]
enum DcCmd {
    /// Tilting module with the double centraliser property.
    Find(Input),
}

#[derive(Subcommand, Debug)]
enum SerreCmd {
    /// Preconditions, the three equivalent conditions and the Serre pairing table.
    Check(SerreArgs),
}

#[derive(Subcommand, Debug)]
enum DbCmd {
    /// dim Hom(M, S N[n]) against dim Hom(N, M[-n]) for all simple pairs.
    SerreTable(TableArgs),
    /// Ext dimensions between two modules, cross-checked in the homotopy category.
    Ext(ExtArgs),
}

#[derive(Subcommand, Debug)]
enum ZooCmd {
    List,
    /// Algebra and order JSON of an entry.
    Emit { name: String },
    /// Recompute an entry and compare with its pinned values.
    Verify {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        all: bool,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Algebra JSON file, or `zoo:<name>`.
    algebra: String,
    /// Order JSON file; defaults to the pinned order of a zoo entry.
    order: Option<String>,
    #[arg(long = "order", conflicts_with = "order")]
    order_flag: Option<String>,
}

#[derive(Args, Debug)]
struct SerreArgs {
    #[command(flatten)]
    input: Input,
    /// `auto`, `basic-proj-inj`, or a comma-separated list of vertex labels.
    #[arg(long, default_value = "auto")]
    q: String,
}

#[derive(Args, Debug)]
struct CoappArgs {
    algebra: String,
    #[arg(long)]
    q: String,
    /// `P:λ`, `I:λ`, `L:λ`, `Delta:λ`, `Nabla:λ`, `T:λ` or a module JSON file.
    #[arg(long)]
    module: String,
    #[arg(long, default_value_t = 1)]
    power: usize,
    #[arg(long)]
    order: Option<String>,
}

#[derive(Args, Debug)]
struct CentreArgs {
    algebra: String,
    #[arg(long)]
    compare_q: Option<String>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    input: Input,
    /// Inclusive range `lo..hi`.
    #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
    range: String,
}

#[derive(Args, Debug)]
struct ExtArgs {
    algebra: String,
    #[arg(long)]
    from: String,
    #[arg(long)]
    to: String,
    #[arg(long, default_value_t = 4)]
    max: usize,
    #[arg(long)]
    order: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    PreconditionFailed,
    Skipped,
}

impl Verdict {
    fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::PreconditionFailed => "precondition-failed",
            Verdict::Skipped => "skipped",
        }
    }

    fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

struct CheckRecord {
    name: String,
    verdict: Verdict,
    witnesses: Value,
    provenance: &'static str,
}

#[derive(Default)]
struct Report {
    command: String,
    inputs: Map<String, Value>,
    checks: Vec<CheckRecord>,
    result: Value,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            result: Value::Null,
            ..Default::default()
        }
    }

    fn check(&mut self, name: &str, verdict: Verdict, witnesses: Value, provenance: &'static str) {
        self.checks.push(CheckRecord {
            name: name.to_string(),
            verdict,
            witnesses,
            provenance,
        });
    }

    /// Records a computation error as a failed or precondition-failed check.
    fn error(&mut self, name: &str, e: &Error, provenance: &'static str) {
        let verdict = if exit_code_for(e) == EXIT_PRECONDITION {
            Verdict::PreconditionFailed
        } else {
            Verdict::Fail
        };
        self.check(name, verdict, json!({ "error": e.to_string() }), provenance);
    }

    fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.verdict == Verdict::Fail) {
            EXIT_FAIL
        } else if self.checks.iter().any(|c| c.verdict == Verdict::PreconditionFailed) {
            EXIT_PRECONDITION
        } else {
            EXIT_PASS
        }
    }

    fn to_value(&self, seconds: f64) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "verdict": c.verdict.as_str(),
                    "witnesses": c.witnesses,
                    "provenance": c.provenance,
                })
            })
            .collect();
        json!({
            "tool": "stratalg",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "inputs": self.inputs,
            "checks": checks,
            "result": self.result,
            "timing": { "seconds": seconds },
        })
    }

    fn to_human(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for c in &self.checks {
            out.push_str(&format!("  {:<20} {}\n", c.verdict.as_str(), c.name));
        }
        if !self.result.is_null() {
            out.push_str(&serde_json::to_string_pretty(&self.result).expect("serializable"));
            out.push('\n');
        }
        out
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::PreconditionFailed(_)
        | Error::NotStratified
        | Error::NotProjectiveInjective
        | Error::QNotProjective
        | Error::DoubleCentraliserMissing
        | Error::ResolutionCapExceeded(_)
        | Error::NonTerminating(_) => EXIT_PRECONDITION,
        Error::Parse(_)
        | Error::UnknownLabel(_)
        | Error::UnknownEntry(_)
        | Error::InvalidOrder(_)
        | Error::InvalidQuiver(_)
        | Error::MalformedRelation(_)
        | Error::NotDirected(_)
        | Error::NonAdmissible(_)
        | Error::DimensionMismatch(_) => EXIT_USAGE,
        Error::Mismatch { .. } | Error::StratificationInvalid(_) | Error::NonSplit | Error::AlgebraMismatch => {
            EXIT_FAIL
        }
    }
}

/// Output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

/// An input error, reported with exit code 64 before any check runs.
struct InputError(Error);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e)
    }
}

type In<T> = std::result::Result<T, InputError>;

struct Loaded {
    alg: Arc<Algebra>,
    order: Option<StratOrder>,
    entry: Option<ZooEntry>,
}

fn sha256_hex(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn read(path: &str) -> In<String> {
    std::fs::read_to_string(path).map_err(|e| InputError(Error::Parse(format!("{path}: {e}"))))
}

fn load_algebra(spec: &str, length_cap: usize) -> In<(Arc<Algebra>, Option<ZooEntry>)> {
    if let Some(name) = spec.strip_prefix("zoo:") {
        let e = zoo_get(name)?;
        return Ok((e.algebra.clone(), Some(e)));
    }
    let text = read(spec)?;
    let mut value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
    if let Value::Object(m) = &mut value {
        m.entry("lengthCap").or_insert(json!(length_cap));
    }
    Ok((parse_algebra(&value.to_string())?, None))
}

fn load(report: &mut Report, input: &Input, length_cap: usize, need_order: bool) -> In<Loaded> {
    let (alg, entry) = load_algebra(&input.algebra, length_cap)?;
    report.inputs.insert("algebra".into(), json!(sha256_hex(&algebra_to_string(&alg))));
    let order_src = input.order.as_ref().or(input.order_flag.as_ref());
    let order = match (order_src, &entry) {
        (Some(path), _) => {
            let o = parse_order(&read(path)?, &alg)?;
            Some(o)
        }
        (None, Some(e)) => Some(e.order.clone()),
        (None, None) if need_order => {
            return Err(InputError(Error::Parse("an order file is required for this algebra".into())))
        }
        (None, None) => None,
    };
    if let Some(o) = &order {
        report.inputs.insert("order".into(), json!(sha256_hex(&serde_json::to_string(&order_json(o)).expect("serializable"))));
    }
    Ok(Loaded { alg, order, entry })
}

fn label_list(alg: &Algebra, vs: &[usize]) -> Value {
    json!(vs.iter().map(|&v| alg.vertex_label(v)).collect::<Vec<_>>())
}

fn dims_value(alg: &Algebra, m: &Module) -> Value {
    let map: Map<String, Value> = alg
        .vertex_labels()
        .iter()
        .zip(m.dims())
        .map(|(l, d)| (l.clone(), json!(d)))
        .collect();
    Value::Object(map)
}

fn parse_q(alg: &Arc<Algebra>, spec: &str) -> In<Vec<usize>> {
    match spec {
        "auto" | "basic-proj-inj" => Ok(projective_injective_vertices(alg)),
        list => {
            let mut out = Vec::new();
            for l in list.split(',').map(str::trim).filter(|l| !l.is_empty()) {
                out.push(alg.vertex(l)?);
            }
            Ok(out)
        }
    }
}

fn parse_range(s: &str) -> In<(i64, i64)> {
    let bad = || InputError(Error::Parse(format!("range {s:?} is not of the form lo..hi")));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = a.trim().parse().map_err(|_| bad())?;
    let hi: i64 = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn module_ref(alg: &Arc<Algebra>, order: Option<&StratOrder>, spec: &str) -> In<Module> {
    let Some((kind, label)) = spec.split_once(':') else {
        let m = parse_module(&read(spec)?)?;
        if *m.algebra().as_ref() != *alg.as_ref() {
            return Err(InputError(Error::AlgebraMismatch));
        }
        return Ok(Module::new(alg, m.dims().to_vec(), m.arrows().to_vec())?);
    };
    let v = alg.vertex(label)?;
    let strat = || -> In<Stratified> {
        let o = order.ok_or_else(|| InputError(Error::Parse(format!("{spec} needs an order"))))?;
        Ok(Stratified::new(alg, o.clone())?)
    };
    Ok(match kind {
        "P" => Module::projective(alg, v),
        "I" => Module::injective(alg, v),
        "L" => Module::simple(alg, v),
        "Delta" => strat()?.standard(v).clone(),
        "Nabla" => strat()?.costandard(v).clone(),
        "T" => {
            let s = strat()?;
            if !s.is_standardly_stratified() {
                return Err(InputError(Error::NotStratified));
            }
            tilting_data(&s).map_err(InputError)?.modules[v].clone()
        }
        _ => return Err(InputError(Error::Parse(format!("unknown module kind {kind:?}")))),
    })
}

fn cmd_analyze(r: &mut Report, input: &Input, cli: &Cli) -> In<()> {
    let l = load(r, input, cli.length_cap, true)?;
    let q = l.entry.as_ref().map_or_else(|| projective_injective_vertices(&l.alg), |e| e.q_vertices.clone());
    match analyze(&l.alg, l.order.as_ref().unwrap(), &q) {
        Ok(v) => {
            r.check("analysis", Verdict::Pass, Value::Null, "full pipeline");
            r.result = v;
        }
        Err(e) => r.error("analysis", &e, "full pipeline"),
    }
    Ok(())
}

fn cmd_strat(r: &mut Report, input: &Input, cli: &Cli) -> In<()> {
    let l = load(r, input, cli.length_cap, true)?;
    let s = Stratified::new(&l.alg, l.order.unwrap())?;
    let alg = &l.alg;
    let n = alg.num_vertices();
    let fam = |f: &dyn Fn(usize) -> Module| -> Value {
        let m: Map<String, Value> = (0..n).map(|v| (alg.vertex_label(v).to_string(), dims_value(alg, &f(v)))).collect();
        Value::Object(m)
    };
    let verdict = s.check_standardly_stratified();
    let failure = verdict.failure.as_ref().map(|f| {
        json!({ "label": alg.vertex_label(f.label), "condition": f.condition.to_string(), "reason": f.reason })
    });
    let qh = s.is_quasi_hereditary();
    let ps = s.is_properly_stratified();
    r.result = json!({
        "standardlyStratified": verdict.holds,
        "quasiHereditary": qh.as_ref().ok(),
        "properlyStratified": ps.as_ref().ok(),
        "delta": fam(&|v| s.standard(v).clone()),
        "deltaBar": fam(&|v| s.proper_standard(v).clone()),
        "nabla": fam(&|v| s.costandard(v).clone()),
        "nablaBar": fam(&|v| s.proper_costandard(v).clone()),
        "failure": failure,
    });
    r.check(
        "standardlyStratified",
        Verdict::from_bool(verdict.holds),
        json!({ "failure": failure, "kernelFlags": verdict.kernel_flags.iter().map(|f| label_list(alg, f)).collect::<Vec<_>>() }),
        "standard-flag peel of ker(P(λ) → Δ(λ)) with Ext¹ cross-check",
    );
    if let Err(e) = qh {
        r.error("quasiHereditary", &e, "endomorphism rings of Δ(λ)");
    }
    Ok(())
}

fn stratified(r: &mut Report, input: &Input, cli: &Cli, name: &str) -> In<Option<Stratified>> {
    let l = load(r, input, cli.length_cap, true)?;
    let s = Stratified::new(&l.alg, l.order.unwrap())?;
    if !s.is_standardly_stratified() {
        r.error(name, &Error::NotStratified, "standard stratification check");
        return Ok(None);
    }
    Ok(Some(s))
}

fn cmd_tilt(r: &mut Report, input: &Input, cli: &Cli) -> In<()> {
    let Some(s) = stratified(r, input, cli, "tilting")? else { return Ok(()) };
    let alg = s.algebra().clone();
    match tilting_data(&s) {
        Ok(td) => {
            let mut out = Map::new();
            let mut verified = true;
            for (v, t) in td.modules.iter().enumerate() {
                verified &= s.ext_from_family_vanishes(t, stratalg::strat::Family::Delta).unwrap_or(false);
                out.insert(
                    alg.vertex_label(v).to_string(),
                    json!({
                        "dims": dims_value(&alg, t),
                        "deltaFlag": label_list(&alg, &td.delta_flags[v]),
                        "nablaBarFlag": label_list(&alg, &td.nabla_bar_flags[v]),
                    }),
                );
            }
            r.result = json!({ "tilting": out, "characteristicDim": td.characteristic.total_dim() });
            r.check("tilting", Verdict::from_bool(verified), Value::Null, "universal extensions by standard modules; Ext¹(Δ, T) = 0 rechecked");
        }
        Err(e) => r.error("tilting", &e, "universal extensions by standard modules"),
    }
    Ok(())
}

fn cmd_ringel(r: &mut Report, input: &Input, cli: &Cli) -> In<()> {
    let Some(s) = stratified(r, input, cli, "ringelDual")? else { return Ok(()) };
    let res = tilting_data(&s).and_then(|td| ringel_dual(&td));
    match res {
        Ok(rd) => {
            let verified = rd.presented.verify();
            let pa = &rd.presented.algebra;
            r.result = json!({
                "algebra": algebra_json(pa),
                "order": order_json(rd.strat.order()),
                "dim": pa.dim(),
                "cartanEquivalent": cartan_equivalent(s.algebra(), pa).is_some(),
                "standardlyStratified": rd.strat.is_standardly_stratified(),
                "quasiHereditary": rd.strat.is_quasi_hereditary().ok(),
            });
            match verified {
                Ok(()) => r.check("presentation", Verdict::Pass, Value::Null, "multiplication checked against composition"),
                Err(e) => r.error("presentation", &e, "multiplication checked against composition"),
            }
            r.check(
                "ringelDualStandardlyStratified",
                Verdict::from_bool(rd.strat.is_standardly_stratified()),
                Value::Null,
                "opposite order on End(T)",
            );
        }
        Err(e) => r.error("ringelDual", &e, "basic presentation of End(T)"),
    }
    Ok(())
}

fn cmd_dc(r: &mut Report, input: &Input, cli: &Cli) -> In<()> {
    let Some(s) = stratified(r, input, cli, "doubleCentraliser")? else { return Ok(()) };
    let alg = s.algebra().clone();
    match tilting_data(&s).and_then(|td| dc_tilting(&td)) {
        Ok(dc) => {
            r.result = json!({
                "X": dc.x_summands.iter().map(|m| dims_value(&alg, m)).collect::<Vec<_>>(),
                "Q": dims_value(&alg, &dc.q),
                "cokernelFlag": label_list(&alg, &dc.coker_flag),
                "Y": dims_value(&alg, &dc.y),
                "doubleCentraliser": dc.double_centraliser,
                "XequalsCharacteristicTilting": dc.x_is_characteristic,
                "XinAddQ": dc.x_in_add_q,
            });
            r.check(
                "doubleCentraliser",
                Verdict::from_bool(dc.double_centraliser),
                Value::Null,
                "commutant dimension against dim A",
            );
        }
        Err(e) => r.error("doubleCentraliser", &e, "left add(T)-approximation of A"),
    }
    Ok(())
}

fn cmd_serre(r: &mut Report, args: &SerreArgs, cli: &Cli) -> In<()> {
    let l = load(r, &args.input, cli.length_cap, false)?;
    let alg = &l.alg;
    let qv = parse_q(alg, &args.q)?;
    let qm = basic_projective(alg, &qv);
    let table: Vec<Value> = serre_pairing_table(alg)
        .into_iter()
        .map(|(x, y, a, b)| json!({ "x": alg.vertex_label(x), "y": alg.vertex_label(y), "homXHY": a, "homYX": b }))
        .collect();
    let pairing_ok = table.iter().all(|row| row["homXHY"] == row["homYX"]);
    let mut result = json!({ "q": label_list(alg, &qv), "serrePairing": table });
    r.check("serrePairing", Verdict::from_bool(pairing_ok), Value::Null, "dim Hom(P, H P') = dim Hom(P', P)");
    match preconditions(alg, &qm) {
        Ok(p) => {
            result["preconditions"] = json!({
                "finiteGlobalDimension": p.finite_global_dimension,
                "projectiveInjective": p.projective_injective,
                "basic": p.basic,
                "good": p.good,
                "doubleCentraliser": p.double_centraliser,
                "oppositeDoubleCentraliser": p.opposite_double_centraliser,
            });
            if let Some(failed) = p.first_failure() {
                r.check("preconditions", Verdict::PreconditionFailed, json!({ "first": failed }), "hypotheses of the equivalence");
            } else {
                r.check("preconditions", Verdict::Pass, Value::Null, "hypotheses of the equivalence");
                match check_serrecoapprox_equivalence(alg, &qm) {
                    Ok(x) => {
                        result["conditions"] = json!({ "i": x.cond_i, "ii": x.cond_ii, "iii": x.cond_iii });
                        r.check(
                            "serrecoapproxEquivalence",
                            Verdict::from_bool(x.all_equal),
                            json!({ "i": x.cond_i, "ii": x.cond_ii, "iii": x.cond_iii }),
                            "natural isomorphisms solved on projectives; symmetrizing form search",
                        );
                    }
                    Err(e) => r.error("serrecoapproxEquivalence", &e, "natural isomorphisms solved on projectives"),
                }
                match check_serre_characterisation(alg, &qm, &ProjFunctorTable::nakayama(alg)) {
                    Ok(c) => r.check(
                        "nakayamaCharacterisation",
                        Verdict::from_bool(c.all()),
                        json!({ "a": c.cond_a_surrogate, "b": c.cond_b, "c": c.cond_c }),
                        "characterisation conditions for H",
                    ),
                    Err(e) => r.error("nakayamaCharacterisation", &e, "characterisation conditions for H"),
                }
            }
        }
        Err(e) => r.error("preconditions", &e, "hypotheses of the equivalence"),
    }
    r.result = result;
    Ok(())
}

fn cmd_coapp(r: &mut Report, args: &CoappArgs, cli: &Cli) -> In<()> {
    let input = Input {
        algebra: args.algebra.clone(),
        order: args.order.clone(),
        order_flag: None,
    };
    let l = load(r, &input, cli.length_cap, false)?;
    let qv = parse_q(&l.alg, &args.q)?;
    let m = module_ref(&l.alg, l.order.as_ref(), &args.module)?;
    let c = Coapp::from_vertices(&qv);
    let out = c.power(&m, args.power);
    r.result = json!({ "module": module_json(&out), "dims": dims_value(&l.alg, &out) });
    r.check("coapp", Verdict::Pass, Value::Null, "(P/K_Q)_Q on a projective presentation");
    Ok(())
}

fn cmd_centre(r: &mut Report, args: &CentreArgs, cli: &Cli) -> In<()> {
    let input = Input {
        algebra: args.algebra.clone(),
        order: None,
        order_flag: None,
    };
    let l = load(r, &input, cli.length_cap, false)?;
    let alg = &l.alg;
    let mut result = json!({ "centreDim": alg.centre().dim(), "symmetric": is_symmetric(alg).symmetric });
    if let Some(spec) = &args.compare_q {
        let qv = parse_q(alg, spec)?;
        match centre_comparison(alg, &basic_projective(alg, &qv)) {
            Ok(c) => {
                result["endQCentreDim"] = json!(c.end_q_centre_dim);
                result["restrictionInjective"] = json!(c.restriction_injective);
                r.check("centreComparison", Verdict::from_bool(c.holds), Value::Null, "Z(A) → Z(End(Q)) by restriction");
            }
            Err(e) => r.error("centreComparison", &e, "Z(A) → Z(End(Q)) by restriction"),
        }
    }
    r.result = result;
    Ok(())
}

fn cmd_serre_table(r: &mut Report, args: &TableArgs, cli: &Cli) -> In<()> {
    let l = load(r, &args.input, cli.length_cap, false)?;
    let (lo, hi) = parse_range(&args.range)?;
    let alg = &l.alg;
    let n = alg.num_vertices();
    let mut rows = Vec::new();
    let mut all = true;
    for a in 0..n {
        for b in 0..n {
            match serre_duality_check(&Module::simple(alg, a), &Module::simple(alg, b), lo, hi, cli.cap) {
                Ok(t) => {
                    all &= t.iter().all(|x| x.equal);
                    rows.push(json!({
                        "from": alg.vertex_label(a),
                        "to": alg.vertex_label(b),
                        "rows": t.iter().map(|x| json!({ "n": x.n, "lhs": x.lhs, "rhs": x.rhs, "equal": x.equal })).collect::<Vec<_>>(),
                    }));
                }
                Err(e) => {
                    r.error("serreTable", &e, "Hom in the homotopy category of projective resolutions");
                    return Ok(());
                }
            }
        }
    }
    r.result = json!({ "range": [lo, hi], "table": rows });
    r.check("serreTable", Verdict::from_bool(all), Value::Null, "Hom in the homotopy category of projective resolutions");
    Ok(())
}

fn cmd_ext(r: &mut Report, args: &ExtArgs, cli: &Cli) -> In<()> {
    let input = Input {
        algebra: args.algebra.clone(),
        order: args.order.clone(),
        order_flag: None,
    };
    let l = load(r, &input, cli.length_cap, false)?;
    let m = module_ref(&l.alg, l.order.as_ref(), &args.from)?;
    let n = module_ref(&l.alg, l.order.as_ref(), &args.to)?;
    let mut dims = Vec::new();
    for k in 0..=args.max {
        match ext_dim(&m, &n, k, cli.cap) {
            Ok(d) => dims.push(d),
            Err(e) => {
                r.error("ext", &e, "minimal projective resolution");
                return Ok(());
            }
        }
    }
    let mut result = json!({ "ext": dims });
    match resolve_module(&m, cli.cap) {
        Ok(res) => {
            let stalk = BoundedComplex::stalk(&n, 0);
            let via: Vec<usize> = (0..=args.max as i64).map(|k| hom_homotopy(&res, &stalk, k)).collect();
            r.check(
                "extConsistency",
                Verdict::from_bool(via == dims),
                json!({ "homotopy": via }),
                "Hom(res M, N[k]) up to homotopy",
            );
            result["homotopy"] = json!(via);
        }
        Err(_) => r.check("extConsistency", Verdict::Skipped, json!({ "reason": "infinite projective dimension" }), "Hom(res M, N[k]) up to homotopy"),
    }
    r.result = result;
    Ok(())
}

fn cmd_zoo(r: &mut Report, z: &ZooCmd) -> In<()> {
    match z {
        ZooCmd::List => {
            r.result = json!(zoo_list());
        }
        ZooCmd::Emit { name } => {
            let e = zoo_get(name)?;
            r.inputs.insert("algebra".into(), json!(sha256_hex(&algebra_to_string(&e.algebra))));
            r.result = json!({
                "algebra": algebra_json(&e.algebra),
                "order": order_json(&e.order),
                "q": label_list(&e.algebra, &e.q_vertices),
            });
        }
        ZooCmd::Verify { name, all } => {
            let names: Vec<String> = match (name, all) {
                (Some(n), _) => vec![n.clone()],
                (None, true) => zoo_list().into_iter().map(String::from).collect(),
                (None, false) => return Err(InputError(Error::Parse("give an entry name or --all".into()))),
            };
            let mut reports = Map::new();
            for n in &names {
                let e = zoo_get(n)?;
                match zoo_report(&e) {
                    Ok(rep) => {
                        let mismatch = first_mismatch(&e.expected, &rep);
                        match mismatch {
                            None => r.check(n, Verdict::Pass, Value::Null, "pinned expected values"),
                            Some((field, exp, got)) => r.check(
                                n,
                                Verdict::Fail,
                                json!({ "field": field, "expected": exp, "actual": got }),
                                "pinned expected values",
                            ),
                        }
                        reports.insert(n.clone(), rep);
                    }
                    Err(e) => r.error(n, &e, "pinned expected values"),
                }
            }
            r.result = Value::Object(reports);
        }
    }
    Ok(())
}

fn first_mismatch(expected: &Value, report: &Value) -> Option<(String, Value, Value)> {
    let Value::Object(exp) = expected else { return None };
    exp.iter().find_map(|(k, v)| {
        let got = report.get(k).cloned().unwrap_or(Value::Null);
        (got != *v).then(|| (k.clone(), v.clone(), got))
    })
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Analyze(_) => "analyze",
        Cmd::Strat(_) => "strat check",
        Cmd::Tilt(_) => "tilt compute",
        Cmd::Ringel(_) => "ringel dual",
        Cmd::Dc(_) => "dc find",
        Cmd::Serre(_) => "serre check",
        Cmd::Coapp(_) => "coapp",
        Cmd::Centre(_) => "centre",
        Cmd::Dbcheck(DbCmd::SerreTable(_)) => "dbcheck serre-table",
        Cmd::Dbcheck(DbCmd::Ext(_)) => "dbcheck ext",
        Cmd::Zoo(ZooCmd::List) => "zoo list",
        Cmd::Zoo(ZooCmd::Emit { .. }) => "zoo emit",
        Cmd::Zoo(ZooCmd::Verify { .. }) => "zoo verify",
    }
}

/// Renders the report; timing is the only field that varies between runs.
fn render(report: &Report, human: bool, seconds: f64) -> String {
    if human {
        report.to_human()
    } else {
        let mut s = serde_json::to_string_pretty(&report.to_value(seconds)).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let start = Instant::now();
    let mut report = Report::new(command_name(&cli.cmd));
    let res = match &cli.cmd {
        Cmd::Analyze(i) => cmd_analyze(&mut report, i, &cli),
        Cmd::Strat(StratCmd::Check(i)) => cmd_strat(&mut report, i, &cli),
        Cmd::Tilt(TiltCmd::Compute(i)) => cmd_tilt(&mut report, i, &cli),
        Cmd::Ringel(RingelCmd::Dual(i)) => cmd_ringel(&mut report, i, &cli),
        Cmd::Dc(DcCmd::Find(i)) => cmd_dc(&mut report, i, &cli),
        Cmd::Serre(SerreCmd::Check(a)) => cmd_serre(&mut report, a, &cli),
        Cmd::Coapp(a) => cmd_coapp(&mut report, a, &cli),
        Cmd::Centre(a) => cmd_centre(&mut report, a, &cli),
        Cmd::Dbcheck(DbCmd::SerreTable(a)) => cmd_serre_table(&mut report, a, &cli),
        Cmd::Dbcheck(DbCmd::Ext(a)) => cmd_ext(&mut report, a, &cli),
        Cmd::Zoo(z) => cmd_zoo(&mut report, z),
    };
    match res {
        Ok(()) => Outcome {
            code: report.exit_code(),
            stdout: render(&report, cli.human, start.elapsed().as_secs_f64()),
            stderr: String::new(),
        },
        Err(InputError(e)) => {
            let code = match exit_code_for(&e) {
                EXIT_PRECONDITION => EXIT_PRECONDITION,
                _ => EXIT_USAGE,
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}
