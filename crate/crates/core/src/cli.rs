//! Command-line front end. `run` returns the process exit code.

use crate::constructions::{build_first_family, build_second_family, PipelineReport};
use crate::error::{Error, Result};
use crate::factorization::{Context, Factorization};
use crate::fpgroups::{self, Enumeration};
use crate::invariants::{self, InvariantReport};
use crate::mcg::{Level, Verdict, DEFAULT_WORD_BUDGET};
use crate::surface::{CurveCatalog, SurfaceKind};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_SCHEMA: i32 = 65;

#[derive(Parser, Debug)]
#[command(name = "monodromy", version, about = "Build, verify and analyze positive Dehn-twist factorizations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build one of the two families and report its invariants.
    Build {
        family: Family,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        n: Option<u32>,
        #[command(flatten)]
        opts: Common,
        /// Write the factorization JSON here instead of embedding it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a factorization file.
    Verify {
        path: PathBuf,
        #[command(flatten)]
        opts: Common,
    },
    /// Invariant report of a factorization file.
    Report {
        path: PathBuf,
        #[command(flatten)]
        opts: Common,
    },
    /// Dump the named curves on a surface.
    Catalog {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 1)]
        boundary: u32,
        #[command(flatten)]
        opts: Common,
    },
    /// Analyze the fundamental group of the total space.
    Pi1 {
        path: PathBuf,
        #[command(flatten)]
        opts: Common,
    },
}

#[derive(clap::Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = LevelArg::L2)]
    pub level: LevelArg,
    #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
    pub word_budget: usize,
    #[arg(long, default_value_t = fpgroups::DEFAULT_MAX_COSETS)]
    pub max_cosets: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Thm1,
    Thm2,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LevelArg {
    #[value(name = "L1", alias = "l1")]
    L1,
    #[value(name = "L2", alias = "l2")]
    L2,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::L1 => Level::L1,
            LevelArg::L2 => Level::L2,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

struct Outcome {
    doc: Value,
    text: Vec<String>,
    code: i32,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            return match e.kind() {
                DisplayHelp | DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let format = match &cli.command {
        Command::Build { opts, .. }
        | Command::Verify { opts, .. }
        | Command::Report { opts, .. }
        | Command::Catalog { opts, .. }
        | Command::Pi1 { opts, .. } => opts.format,
    };
    match dispatch(cli.command) {
        Ok(o) => {
            let body = match format {
                Format::Json => serde_json::to_string_pretty(&o.doc).expect("values serialize") + "\n",
                Format::Text => o.text.join("\n") + "\n",
            };
            let _ = out.write_all(body.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Schema(_) => EXIT_SCHEMA,
        Error::Usage(_) => EXIT_USAGE,
        _ => EXIT_FAILED,
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Build { family, genus, n, opts, out } => build(family, genus, n, &opts, out.as_deref()),
        Command::Verify { path, opts } => verify(&path, &opts),
        Command::Report { path, .. } => report(&path),
        Command::Catalog { genus, boundary, .. } => catalog(genus, boundary),
        Command::Pi1 { path, opts } => pi1(&path, &opts),
    }
}

fn read(path: &Path) -> Result<Factorization> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Factorization::from_json(&text)
}

fn verdict_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Verified { .. } => EXIT_OK,
        Verdict::Refuted { .. } => EXIT_FAILED,
        Verdict::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Verified { level } => format!("verified at {level:?}"),
        Verdict::Refuted { level } => format!("refuted at {level:?}"),
        Verdict::Inconclusive { l1_verified, reason } => format!("inconclusive (L1 verified: {l1_verified}; {reason})"),
    }
}

fn report_text(r: &InvariantReport) -> Vec<String> {
    let opt = |x: Option<i64>| x.map_or("n/a".to_string(), |v| v.to_string());
    let mut t = vec![
        format!("genus: {}", r.genus),
        format!("cycles: {} ({} nonseparating)", r.n_cycles, r.n_nonseparating),
        format!("euler: {}", r.euler),
        format!("signature: {} ({:?})", opt(r.sigma), r.sigma_method),
        format!("K2: {}", opt(r.k2)),
        format!("chi_h: {}", opt(r.chi_h)),
    ];
    if let Some(l) = r.lambda {
        t.push(format!("slope: {}/{}", l.num, l.den));
    }
    if let Some(v) = r.slope_violation {
        t.push(format!("slope violation: {v}"));
    }
    t.push(format!("sections: {}", r.sections));
    if let Some(p) = r.nonholomorphic_flags.pi1_obstruction {
        t.push(format!("H1 of shape Z + Z_n: {p}"));
    }
    t
}

fn build(family: Family, genus: u32, n: Option<u32>, opts: &Common, out: Option<&Path>) -> Result<Outcome> {
    let (boundary, min) = match family {
        Family::Thm1 => (1, 3),
        Family::Thm2 => (2, 4),
    };
    if genus < min {
        return Err(Error::Usage(format!("{family:?} needs --genus ≥ {min}").to_lowercase()));
    }
    let n = match (family, n) {
        (Family::Thm2, None) => return Err(Error::Usage("thm2 needs --n".into())),
        (Family::Thm2, Some(0)) => return Err(Error::Usage("--n must be at least 1".into())),
        (Family::Thm1, Some(_)) => return Err(Error::Usage("--n only applies to thm2".into())),
        (_, n) => n,
    };
    let mut ctx = Context::new(SurfaceKind::new(genus, boundary)?)?;
    ctx.level = Level::L1;
    let pipeline: PipelineReport = match family {
        Family::Thm1 => build_first_family(&mut ctx)?,
        Family::Thm2 => build_second_family(&mut ctx, n.expect("checked above"))?,
    };
    ctx.level = opts.level.into();
    ctx.ev.set_budget(opts.word_budget);
    let f = pipeline.final_factorization();
    let verdict = ctx.verify(f);
    let obstruction = invariants::pi1_obstruction(f)?;
    let rep = invariants::report(f, obstruction)?;
    let mut code = verdict_code(&verdict);
    let mut text = vec![pipeline.name.clone(), format!("verdict: {}", verdict_text(&verdict))];
    let stages: Vec<Value> =
        pipeline.stages.iter().map(|s| json!({"name": s.name, "cycles": s.factorization.len()})).collect();
    text.push(format!(
        "stages: {}",
        pipeline.stages.iter().map(|s| format!("{} ({})", s.name, s.factorization.len())).collect::<Vec<_>>().join(" -> ")
    ));
    text.extend(report_text(&rep));
    let mut doc = json!({
        "schema": crate::SCHEMA,
        "family": format!("{family:?}").to_lowercase(),
        "genus": genus,
        "n": n,
        "verdict": verdict,
        "stages": stages,
        "report": rep,
    });
    let p = fpgroups::pi1_total_space(f)?;
    let ab = fpgroups::abelianization(&p);
    text.push(format!("H1: {ab}"));
    doc["h1"] = json!(ab);
    if let (Family::Thm2, Some(n)) = (family, n) {
        let cert = fpgroups::second_family_certificate(&p, genus, n)?;
        let groups = fpgroups::second_family_group_stages(f, n)?;
        let g_docs: Vec<Value> = groups
            .iter()
            .map(|s| json!({"name": s.name, "h1": s.abelian, "target": s.target, "target_met": s.target_met}))
            .collect();
        text.push(format!("quotient certificate: {cert}"));
        for s in &groups {
            text.push(format!("{}: H1 {}, {} reached: {}", s.name, s.abelian, s.target, s.target_met));
        }
        doc["quotient_certificate"] = json!(cert);
        doc["groups"] = json!(g_docs);
        if (!cert || ab != fpgroups::z_plus_zn(n)) && code == EXIT_OK {
            code = EXIT_FAILED;
        }
    }
    match out {
        Some(path) => {
            std::fs::write(path, f.to_json()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            doc["factorization_path"] = json!(path.display().to_string());
            text.push(format!("factorization written to {}", path.display()));
        }
        None => doc["factorization"] = serde_json::to_value(f.to_doc()).expect("document serializes"),
    }
    Ok(Outcome { doc, text, code })
}

fn verify(path: &Path, opts: &Common) -> Result<Outcome> {
    let f = read(path)?;
    let mut ctx = Context::with_budget(f.surface, opts.word_budget)?;
    ctx.level = opts.level.into();
    let v = ctx.verify(&f);
    let doc = json!({
        "schema": crate::SCHEMA,
        "verdict": v,
        "cycles": f.len(),
        "boundary_exponents": f.boundary_exponents,
        "sections": f.sections(),
    });
    let text = vec![format!("verdict: {}", verdict_text(&v)), format!("cycles: {}", f.len()), format!("sections: {}", f.sections())];
    Ok(Outcome { doc, text, code: verdict_code(&v) })
}

fn report(path: &Path) -> Result<Outcome> {
    let f = read(path)?;
    let rep = invariants::report(&f, invariants::pi1_obstruction(&f)?)?;
    let text = report_text(&rep);
    Ok(Outcome { doc: json!({"schema": crate::SCHEMA, "report": rep}), text, code: EXIT_OK })
}

fn catalog(genus: u32, boundary: u32) -> Result<Outcome> {
    let s = SurfaceKind::new(genus, boundary).map_err(|e| Error::Usage(e.to_string()))?;
    let cat = CurveCatalog::build(s)?;
    let al = s.alphabet();
    let text = cat
        .entries()
        .iter()
        .map(|e| format!("{}: {}", e.name, al.format(&e.curve.word)))
        .collect();
    Ok(Outcome { doc: cat.to_json(), text, code: EXIT_OK })
}

fn enumeration_json(e: &Enumeration) -> Value {
    match e {
        Enumeration::FiniteOrder(k) => json!({"result": "finite_order", "order": k}),
        Enumeration::Inconclusive { cosets_defined } => json!({"result": "inconclusive", "cosets_defined": cosets_defined}),
    }
}

fn pi1(path: &Path, opts: &Common) -> Result<Outcome> {
    let f = read(path)?;
    let p = fpgroups::pi1_total_space(&f)?;
    let ab = fpgroups::abelianization(&p);
    let simp = fpgroups::tietze_simplify(&p, fpgroups::STAGE_BUDGET);
    let tc = fpgroups::todd_coxeter(&p, opts.max_cosets);
    let sp = &simp.presentation;
    let rels: Vec<String> = sp.relators.iter().map(|r| sp.generators.format(r)).collect();
    let doc = json!({
        "schema": crate::SCHEMA,
        "presentation": {"generators": p.generators.rank(), "relators": p.relators.len(), "length": p.total_length()},
        "h1": ab,
        "h1_text": ab.to_string(),
        "simplified": {
            "generators": sp.generators.names(),
            "relators": rels,
            "moves": simp.log.len(),
            "exhausted": simp.exhausted,
        },
        "todd_coxeter": enumeration_json(&tc),
    });
    let mut text = vec![
        format!("presentation: {} generators, {} relators", p.generators.rank(), p.relators.len()),
        format!("H1: {ab}"),
        format!("simplified: <{} | {}>", sp.generators.names().join(", "), rels.join(", ")),
    ];
    text.push(match tc {
        Enumeration::FiniteOrder(k) => format!("order: {k}"),
        Enumeration::Inconclusive { cosets_defined } => format!("order: unknown ({cosets_defined} cosets defined)"),
    });
    Ok(Outcome { doc, text, code: EXIT_OK })
}
