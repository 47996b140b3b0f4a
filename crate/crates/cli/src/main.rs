mod presentation;
mod report;

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use conformal_gsb::gsb::{
    self, check_gsb, complete, irr_enumerate, kd_basis, reduce_with, CheckOptions, CompleteOptions, Completion, GsbReport,
    IrrBounds, LimitHit, Limits, MultBounds, Overall, RelationSet, Strategy, Verdict, Window,
};
use conformal_gsb::lie::{self, verify::compare_irr, EmbeddingVerdict, Example, ExampleOptions, IndexWindow};
use conformal_gsb::Signature;

use presentation::{FileOptions, InputError, Presentation, Relation};
use report::Status;

#[derive(Parser, Debug)]
#[command(name = "cgsb", version, about = "Gröbner–Shirshov bases in free associative conformal algebras")]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    cmd: Cmd,
}

/// Flags override the environment, which overrides `[options]` in the file.
#[derive(Args, Clone, Debug, Default)]
struct Flags {
    /// Composition window: indices of multipliers and ambiguities lie in [-W, W].
    #[arg(long, global = true, value_name = "W")]
    window: Option<u64>,
    /// Schemas are instantiated for parameters in [-M*W, M*W].
    #[arg(long, global = true, value_name = "M")]
    relation_multiplier: Option<u64>,
    /// Longest word for irr/kdbasis, or longest new leading word for completion.
    #[arg(long, global = true, value_name = "L")]
    max_length: Option<usize>,
    /// Largest D-power for irr and the embedding check.
    #[arg(long, global = true, value_name = "K")]
    max_dpow: Option<u32>,
    /// Widen the multiplication-composition index range to at least K.
    #[arg(long, global = true, value_name = "K")]
    mult_bound: Option<u32>,
    #[arg(long, global = true, env = "CONFGSB_MAX_ITERS")]
    max_iters: Option<usize>,
    #[arg(long, global = true, env = "CONFGSB_MAX_BASIS")]
    max_basis: Option<usize>,
    /// Include reduction traces in the report.
    #[arg(long, global = true)]
    trace: bool,
    /// Write a JSON report to OUT (`-` for stdout).
    #[arg(long, global = true, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Check compositions on all cores.
    #[arg(long, global = true)]
    parallel: bool,
    /// Report wall-clock time (stderr, and the JSON report).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Rewrite an expression into normal words.
    Normalize { file: PathBuf, expr: String },
    /// Compare two normal words.
    Order { file: PathBuf, u: String, v: String },
    /// Divide a polynomial by the relations.
    Reduce { file: PathBuf, poly: String },
    /// List all compositions of the relations.
    Compositions { file: PathBuf },
    /// Decide whether the relations form a Gröbner–Shirshov basis.
    Check { file: PathBuf },
    /// Run the completion algorithm and print the reduced basis.
    Complete { file: PathBuf },
    /// Enumerate irreducible normal words.
    Irr { file: PathBuf },
    /// Enumerate the D-free irreducible words.
    Kdbasis { file: PathBuf },
    /// Verify a built-in Lie conformal algebra.
    Example {
        /// virasoro or heisenberg-virasoro
        name: String,
        #[arg(value_enum, default_value_t = ExampleAction::Run)]
        action: ExampleAction,
    },
    /// Print a presentation file in canonical form.
    Fmt { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ExampleAction {
    /// Ideal equality, GSB check, Irr closed form and embedding.
    Run,
    Check,
    Complete,
    Irr,
    Kdbasis,
}

#[derive(Clone, Debug)]
struct Settings {
    window: Option<u64>,
    multiplier: Option<u64>,
    max_length: Option<usize>,
    max_dpow: Option<u32>,
    mult_bound: Option<u32>,
    max_iters: Option<usize>,
    max_basis: Option<usize>,
    parallel: bool,
    trace: bool,
}

impl Settings {
    fn new(f: &Flags, o: &FileOptions) -> Self {
        Settings {
            window: f.window.or(o.window),
            multiplier: f.relation_multiplier.or(o.relation_multiplier),
            max_length: f.max_length.or(o.max_length),
            max_dpow: f.max_dpow.or(o.max_dpow),
            mult_bound: f.mult_bound.or(o.mult_bound),
            max_iters: f.max_iters.or(o.max_iters),
            max_basis: f.max_basis.or(o.max_basis),
            parallel: (f.parallel || o.parallel.unwrap_or(false)) && gsb::par::AVAILABLE,
            trace: f.trace,
        }
    }

    fn mult(&self) -> MultBounds {
        MultBounds { left: self.mult_bound, right: self.mult_bound }
    }

    fn limits(&self, base: Limits) -> Limits {
        Limits {
            max_basis: self.max_basis.unwrap_or(base.max_basis),
            max_length: self.max_length.unwrap_or(base.max_length),
            max_iters: self.max_iters.unwrap_or(base.max_iters),
        }
    }

    fn check_options(&self, window: Option<Window>) -> CheckOptions {
        CheckOptions { window, mult: self.mult(), parallel: self.parallel, traces: self.trace }
    }

    fn irr_bounds(&self, sig: &Signature, window: Option<&Window>) -> IrrBounds {
        IrrBounds {
            max_length: self.max_length.unwrap_or(3),
            max_dpow: self.max_dpow.unwrap_or(2),
            generators: gsb::check::multiplier_generators(sig, window),
        }
    }
}

struct Out {
    human: String,
    json: Value,
    status: Status,
}

impl Out {
    fn ok(human: String, json: Value) -> Self {
        Out { human, json, status: Status::Ok }
    }
}

struct Loaded {
    pres: Presentation,
    set: RelationSet,
    window: Option<Window>,
    settings: Settings,
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::Msg(format!("{}: {e}", path.display())))
}

fn parse_file(path: &Path) -> Result<Presentation, InputError> {
    Presentation::parse(&read(path)?).map_err(|e| InputError::Msg(format!("{}: {e}", path.display())))
}

fn load(path: &Path, flags: &Flags) -> Result<Loaded, InputError> {
    let pres = parse_file(path)?;
    let settings = Settings::new(flags, &pres.options);
    let n = pres.sig.locality();
    let params = pres.max_params();
    if !pres.has_indexed() && params == 0 {
        let polys = pres.relations.iter().filter_map(|r| match r {
            Relation::Plain { poly, .. } => Some(poly.clone()),
            Relation::Schema { .. } => None,
        });
        let set = RelationSet::monic(n, polys);
        return Ok(Loaded { pres, set, window: None, settings });
    }
    let w = settings.window.ok_or_else(|| {
        InputError::Msg("indexed generators or schemas need a window (--window or `window` in [options])".into())
    })?;
    let f = params.max(1);
    let iw = IndexWindow { w, m: settings.multiplier.unwrap_or(f as u64) };
    let schemas = pres.relations.iter().map(|r| r.schema(&pres.sig)).collect::<Result<Vec<_>, _>>()?;
    let set = RelationSet::monic(n, lie::instantiate_schemas(&schemas, &pres.sig, iw)?);
    Ok(Loaded { pres, set, window: Some(iw.check_window(f)), settings })
}

fn window_json(w: Option<&Window>) -> Value {
    w.map_or(Value::Null, |w| json!({ "radius": w.radius, "trusted": w.trusted }))
}

fn overall_status(o: Overall) -> Status {
    match o {
        Overall::Gsb => Status::Ok,
        Overall::NotGsb => Status::Fail,
        Overall::Inconclusive => Status::Inconclusive,
    }
}

const SHOWN: usize = 20;

fn check_out(sig: &Signature, set: &RelationSet, rep: &GsbReport, trace: bool) -> Out {
    let status = overall_status(rep.overall());
    let mut h = String::new();
    let verdict = match rep.overall() {
        Overall::Gsb => "Gröbner–Shirshov basis",
        Overall::NotGsb => "not a Gröbner–Shirshov basis",
        Overall::Inconclusive => "inconclusive",
    };
    let _ = writeln!(h, "verdict: {verdict}");
    if rep.window.is_some() {
        let _ = writeln!(h, "relations: {} ({} with leading word in the window)", rep.relations, rep.members);
    } else {
        let _ = writeln!(h, "relations: {}", rep.relations);
    }
    let _ = writeln!(h, "compositions: {}", rep.items.len());
    for (kind, c) in rep.counts() {
        if c.total > 0 {
            let _ = writeln!(
                h,
                "  {kind}: {} ({} trivial, {} nontrivial, {} inconclusive)",
                c.total, c.trivial, c.nontrivial, c.inconclusive
            );
        }
    }
    let open: Vec<_> = rep.items.iter().filter(|c| !matches!(c.verdict, Verdict::Trivial)).collect();
    for c in open.iter().take(SHOWN) {
        let (Verdict::Nontrivial(r) | Verdict::Inconclusive(r)) = &c.verdict else { continue };
        let _ = writeln!(
            h,
            "  {} {} ({}, {}): remainder {}",
            c.verdict.name(),
            c.composition.kind,
            c.composition.f,
            c.composition.g,
            sig.fmt_poly(r)
        );
    }
    if open.len() > SHOWN {
        let _ = writeln!(h, "  ... {} more", open.len() - SHOWN);
    }
    Out { human: h, json: report::gsb(sig, set, rep, trace), status }
}

fn limit_text(sig: &Signature, l: &LimitHit) -> String {
    match l {
        LimitHit::BasisSize(n) => format!("basis size reached {n}"),
        LimitHit::Length(w) => format!("leading word too long: {}", sig.fmt_word(w)),
        LimitHit::Iterations(n) => format!("stopped after {n} rounds"),
    }
}

fn complete_out(sig: &Signature, c: &Completion) -> Out {
    let mut h = String::new();
    match &c.limit {
        None => {
            let _ = writeln!(h, "complete after {} rounds ({} compositions)", c.rounds, c.compositions);
        }
        Some(l) => {
            let _ = writeln!(h, "incomplete: {} ({} remainders pending)", limit_text(sig, l), c.pending.len());
        }
    }
    let _ = writeln!(h, "basis ({}):", c.basis.len());
    for p in c.basis.iter() {
        let _ = writeln!(h, "  {}", sig.fmt_poly(p));
    }
    let json = json!({
        "complete": c.is_complete(),
        "limit": c.limit.as_ref().map(|l| limit_text(sig, l)),
        "rounds": c.rounds,
        "compositions": c.compositions,
        "size": c.basis.len(),
        "basis": report::polys(sig, c.basis.iter()),
        "pending": report::polys(sig, &c.pending),
    });
    Out { human: h, json, status: if c.is_complete() { Status::Ok } else { Status::Inconclusive } }
}

fn word_list_out(sig: &Signature, ws: &[conformal_gsb::NormalWord], bounds: &IrrBounds) -> Out {
    let mut h = format!("{} words\n", ws.len());
    for w in ws {
        let _ = writeln!(h, "  {}", sig.fmt_word(w));
    }
    let json = json!({
        "bounds": { "max_length": bounds.max_length, "max_dpow": bounds.max_dpow, "generators": bounds.generators.len() },
        "count": ws.len(),
        "words": report::words(sig, ws),
    });
    Out::ok(h, json)
}

fn kdbasis_out(sig: &Signature, set: &RelationSet, bounds: &IrrBounds) -> Out {
    match kd_basis(set, bounds) {
        Ok(ws) => word_list_out(sig, &ws, bounds),
        Err(e) => Out { human: format!("{e}\n"), json: json!({ "error": e.to_string() }), status: Status::Fail },
    }
}

fn cmd_normalize(path: &Path, expr: &str) -> Result<Out, InputError> {
    let pres = parse_file(path)?;
    let p = pres.sig.parse_poly(expr)?;
    let text = pres.sig.fmt_poly(&p);
    Ok(Out::ok(format!("{text}\n"), json!({ "input": expr, "result": text })))
}

fn cmd_order(path: &Path, u: &str, v: &str) -> Result<Out, InputError> {
    let pres = parse_file(path)?;
    let (wu, wv) = (pres.sig.parse_word(u)?, pres.sig.parse_word(v)?);
    let (name, sym) = match pres.sig.compare_words(&wu, &wv)? {
        Ordering::Less => ("less", "<"),
        Ordering::Equal => ("equal", "="),
        Ordering::Greater => ("greater", ">"),
    };
    let (fu, fv) = (pres.sig.fmt_word(&wu), pres.sig.fmt_word(&wv));
    Ok(Out::ok(format!("{fu} {sym} {fv}\n"), json!({ "u": fu, "v": fv, "order": name })))
}

fn cmd_reduce(path: &Path, poly: &str, flags: &Flags) -> Result<Out, InputError> {
    let l = load(path, flags)?;
    let sig = &l.pres.sig;
    let p = sig.parse_poly(poly)?;
    let t = reduce_with(&p, &l.set, Strategy::Leftmost, l.settings.trace);
    let mut h = String::new();
    if l.settings.trace {
        for s in &t.steps {
            let _ = writeln!(h, "  {}: coefficient {} on an S-word of relation {}", sig.fmt_word(&s.word), s.coeff, s.pattern.rel);
        }
    }
    let _ = writeln!(h, "{}", sig.fmt_poly(&t.remainder));
    let mut json = json!({ "input": sig.fmt_poly(&p), "remainder": sig.fmt_poly(&t.remainder) });
    if l.settings.trace {
        json["trace"] = report::trace(sig, &l.set, &t);
    }
    Ok(Out::ok(h, json))
}

fn cmd_compositions(path: &Path, flags: &Flags) -> Result<Out, InputError> {
    let l = load(path, flags)?;
    let sig = &l.pres.sig;
    let cs = gsb::compositions(&l.set, sig, &l.settings.check_options(l.window));
    let mut h = format!("{} compositions\n", cs.len());
    for c in &cs {
        let _ = writeln!(h, "  {} ({}, {}): {}", c.kind, c.f, c.g, sig.fmt_poly(&c.poly));
    }
    let items: Vec<Value> = cs.iter().map(|c| report::composition(sig, c)).collect();
    Ok(Out::ok(h, json!({ "window": window_json(l.window.as_ref()), "count": cs.len(), "items": items })))
}

fn cmd_check(path: &Path, flags: &Flags) -> Result<Out, InputError> {
    let l = load(path, flags)?;
    let rep = check_gsb(&l.set, &l.pres.sig, &l.settings.check_options(l.window));
    Ok(check_out(&l.pres.sig, &l.set, &rep, l.settings.trace))
}

fn cmd_complete(path: &Path, flags: &Flags) -> Result<Out, InputError> {
    let l = load(path, flags)?;
    let opts = CompleteOptions {
        limits: l.settings.limits(Limits::default()),
        window: l.window,
        mult: l.settings.mult(),
        parallel: l.settings.parallel,
    };
    let c = complete(&l.set, &l.pres.sig, &opts);
    Ok(complete_out(&l.pres.sig, &c))
}

fn cmd_irr(path: &Path, flags: &Flags, flat: bool) -> Result<Out, InputError> {
    let l = load(path, flags)?;
    let bounds = l.settings.irr_bounds(&l.pres.sig, l.window.as_ref());
    if flat {
        return Ok(kdbasis_out(&l.pres.sig, &l.set, &bounds));
    }
    Ok(word_list_out(&l.pres.sig, &irr_enumerate(&l.set, &bounds), &bounds))
}

fn cmd_fmt(path: &Path) -> Result<Out, InputError> {
    let pres = parse_file(path)?;
    let text = pres.to_canonical();
    Ok(Out::ok(text.clone(), json!({ "canonical": text })))
}

/// Default `(W, M)` for the built-in examples.
fn example_window(name: &str) -> (u64, u64) {
    if name == "virasoro" {
        (3, 3)
    } else {
        (2, 4)
    }
}

fn cmd_example(name: &str, action: ExampleAction, flags: &Flags) -> Result<Out, InputError> {
    let ex: Example = lie::by_name(name)
        .ok_or_else(|| InputError::Msg(format!("unknown example `{name}` (known: {})", lie::builtins::NAMES.join(", "))))?;
    let s = Settings::new(flags, &FileOptions::default());
    let (dw, dm) = example_window(name);
    let iw = IndexWindow { w: s.window.unwrap_or(dw), m: s.multiplier.unwrap_or(dm) };
    let window = iw.check_window(ex.max_params());
    let sig = &ex.sig;
    let base = ExampleOptions::new(iw.w, iw.m);
    let mut out = match action {
        ExampleAction::Check => {
            let set = ex.s1_set(iw)?;
            check_out(sig, &set, &check_gsb(&set, sig, &s.check_options(Some(window))), s.trace)
        }
        ExampleAction::Complete => {
            let opts = CompleteOptions { limits: s.limits(base.completion), window: Some(window), mult: s.mult(), parallel: s.parallel };
            complete_out(sig, &complete(&ex.s_minus(iw), sig, &opts))
        }
        ExampleAction::Irr => {
            let set = ex.s1_set(iw)?;
            let (got, cmp) = compare_irr(&ex, &set, &s.irr_bounds(sig, Some(&window)));
            let mut h = format!("{} irreducible words, {} in the closed form\n", cmp.enumerated, cmp.expected);
            for (label, ws) in [("missing", &cmp.missing), ("unexpected", &cmp.unexpected)] {
                for w in ws.iter() {
                    let _ = writeln!(h, "  {label}: {}", sig.fmt_word(w));
                }
            }
            let json = json!({
                "count": cmp.enumerated,
                "expected": cmp.expected,
                "missing": report::words(sig, &cmp.missing),
                "unexpected": report::words(sig, &cmp.unexpected),
                "words": report::words(sig, &got),
            });
            Out { human: h, json, status: if cmp.matches() { Status::Ok } else { Status::Fail } }
        }
        ExampleAction::Kdbasis => kdbasis_out(sig, &ex.s1_set(iw)?, &s.irr_bounds(sig, Some(&window))),
        ExampleAction::Run => {
            let opts = ExampleOptions {
                window: iw,
                max_length: s.max_length.unwrap_or(base.max_length),
                max_dpow: s.max_dpow.unwrap_or(base.max_dpow),
                parallel: s.parallel,
                completion: s.limits(base.completion),
            };
            let rep = lie::run_example(&ex, &opts)?;
            let membership = |m: &lie::verify::MembershipReport| {
                if !m.failed.is_empty() {
                    Status::Fail
                } else if !m.inconclusive.is_empty() {
                    Status::Inconclusive
                } else {
                    Status::Ok
                }
            };
            let parts = [
                ("forward membership", membership(&rep.forward)),
                ("backward membership", membership(&rep.backward)),
                ("GSB check", overall_status(rep.gsb.overall())),
                ("Irr closed form", if rep.irr.matches() { Status::Ok } else { Status::Fail }),
                (
                    "embedding",
                    match rep.embedding.verdict {
                        EmbeddingVerdict::Embedded => Status::Ok,
                        EmbeddingVerdict::NotEmbedded => Status::Fail,
                        EmbeddingVerdict::Inconclusive => Status::Inconclusive,
                    },
                ),
            ];
            let status = parts.iter().fold(Status::Ok, |acc, (_, s)| acc.and(*s));
            let mut h = format!("relations: {} commutator, {} expected basis\n", rep.s_minus, rep.s1);
            for (label, st) in &parts {
                let _ = writeln!(h, "{label}: {}", st.name());
            }
            let _ = writeln!(
                h,
                "Irr: {} enumerated, {} expected, {} missing, {} unexpected",
                rep.irr.enumerated,
                rep.irr.expected,
                rep.irr.missing.len(),
                rep.irr.unexpected.len()
            );
            let mem = |m: &lie::verify::MembershipReport| {
                let pairs = |v: &[(conformal_gsb::Polynomial, conformal_gsb::Polynomial)]| -> Vec<Value> {
                    v.iter().map(|(p, r)| json!({ "relation": sig.fmt_poly(p), "remainder": sig.fmt_poly(r) })).collect()
                };
                json!({ "checked": m.checked, "failed": pairs(&m.failed), "inconclusive": pairs(&m.inconclusive) })
            };
            let json = json!({
                "s_minus": rep.s_minus,
                "s1": rep.s1,
                "forward": mem(&rep.forward),
                "backward": mem(&rep.backward),
                "backward_completion": { "complete": rep.backward_completion.is_complete(), "size": rep.backward_completion.basis.len() },
                "gsb": report::gsb(sig, &ex.s1_set(iw)?, &rep.gsb, s.trace),
                "irr": {
                    "enumerated": rep.irr.enumerated,
                    "expected": rep.irr.expected,
                    "missing": report::words(sig, &rep.irr.missing),
                    "unexpected": report::words(sig, &rep.irr.unexpected),
                },
                "embedding": {
                    "verdict": format!("{:?}", rep.embedding.verdict).to_lowercase(),
                    "checked": rep.embedding.checked,
                    "reducible": report::words(sig, &rep.embedding.reducible),
                },
            });
            Out { human: h, json, status }
        }
    };
    out.json["example"] = json!({ "name": ex.name, "window": iw.w, "relation_multiplier": iw.m, "trusted": window.trusted });
    Ok(out)
}

fn run(cli: &Cli) -> Result<Out, InputError> {
    let f = &cli.flags;
    match &cli.cmd {
        Cmd::Normalize { file, expr } => cmd_normalize(file, expr),
        Cmd::Order { file, u, v } => cmd_order(file, u, v),
        Cmd::Reduce { file, poly } => cmd_reduce(file, poly, f),
        Cmd::Compositions { file } => cmd_compositions(file, f),
        Cmd::Check { file } => cmd_check(file, f),
        Cmd::Complete { file } => cmd_complete(file, f),
        Cmd::Irr { file } => cmd_irr(file, f, false),
        Cmd::Kdbasis { file } => cmd_irr(file, f, true),
        Cmd::Example { name, action } => cmd_example(name, *action, f),
        Cmd::Fmt { file } => cmd_fmt(file),
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Normalize { .. } => "normalize",
        Cmd::Order { .. } => "order",
        Cmd::Reduce { .. } => "reduce",
        Cmd::Compositions { .. } => "compositions",
        Cmd::Check { .. } => "check",
        Cmd::Complete { .. } => "complete",
        Cmd::Irr { .. } => "irr",
        Cmd::Kdbasis { .. } => "kdbasis",
        Cmd::Example { .. } => "example",
        Cmd::Fmt { .. } => "fmt",
    }
}

fn input_file(cmd: &Cmd) -> Option<&Path> {
    match cmd {
        Cmd::Normalize { file, .. }
        | Cmd::Order { file, .. }
        | Cmd::Reduce { file, .. }
        | Cmd::Compositions { file }
        | Cmd::Check { file }
        | Cmd::Complete { file }
        | Cmd::Irr { file }
        | Cmd::Kdbasis { file }
        | Cmd::Fmt { file } => Some(file),
        Cmd::Example { .. } => None,
    }
}

/// Hash of the command, its arguments, the file contents and every flag
/// that can change the result.
fn inputs_digest(cli: &Cli) -> String {
    let contents = input_file(&cli.cmd).and_then(|p| std::fs::read(p).ok()).unwrap_or_default();
    let flags = Flags { json: None, timings: false, parallel: false, ..cli.flags.clone() };
    report::digest(&[format!("{:?}", cli.cmd).as_bytes(), &contents, format!("{flags:?}").as_bytes()])
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let start = Instant::now();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let elapsed = start.elapsed();

    let mut doc = json!({
        "command": command_name(&cli.cmd),
        "inputs": { "digest": inputs_digest(&cli) },
        "verdict": out.status.name(),
        "result": out.json,
    });
    if let Some(path) = input_file(&cli.cmd) {
        doc["inputs"]["file"] = json!(path.display().to_string());
    }
    if cli.flags.timings {
        doc["timings"] = json!({ "total_ms": elapsed.as_secs_f64() * 1e3 });
        eprintln!("elapsed: {elapsed:.2?}");
    }
    let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n";
    match cli.flags.json.as_deref() {
        Some(p) if p == Path::new("-") => print!("{text}"),
        Some(p) => {
            print!("{}", out.human);
            if let Err(e) = std::fs::write(p, text) {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(3);
            }
        }
        None => print!("{}", out.human),
    }
    ExitCode::from(out.status.exit_code())
}
