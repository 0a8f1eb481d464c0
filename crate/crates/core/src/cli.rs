//! The `ncnum` command line. `run` does all the work and returns the exit
//! code with both output streams, so tests drive it without a process.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::category::{
    check_semisimple, karoubi_envelope, numerical_ideal, orbit_category, quotient_by_ideal, PresentedCategory,
};
use crate::error::Error;
use crate::fixtures::{default_fixture_dir, read_doc, Corpus, FixtureDoc, Payload};
use crate::hochschild::{Method, DEFAULT_BAR_CUTOFF};
use crate::linalg::{format_rational, parse_rational, Rational};
use crate::motives::{
    categorical_trace, export_presented_category, gram_report, intersection_number, Correspondence, MotiveAlgebra,
    NcMotive,
};
use crate::quiver::check_smooth_proper;
use crate::verify::{self, Suite};

/// Run-wide settings. The base field is always ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    pub base_field: &'static str,
    pub bar_cutoff: usize,
    pub fixture_dir: PathBuf,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            base_field: "Q",
            bar_cutoff: DEFAULT_BAR_CUTOFF,
            fixture_dir: default_fixture_dir(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ncnum", version, about = "Exact trace pairings and numerical quotients over Q")]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pub pretty: bool,
    /// JSON output (the default).
    #[arg(long, global = true)]
    pub json: bool,
    /// Fixture directory used to resolve names referenced by documents.
    #[arg(long, global = true, value_name = "DIR")]
    pub fixtures: Option<PathBuf>,
    /// Truncation degree of the bar complex.
    #[arg(long, global = true, default_value_t = DEFAULT_BAR_CUTOFF)]
    pub bar_cutoff: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct CategoryInput {
    /// A category fixture.
    #[arg(long)]
    pub category: Option<PathBuf>,
    /// A quiver fixture; uses the NChow category on (Q, id) and (A, id).
    #[arg(long)]
    pub nchow: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a fixture of any kind.
    Check { file: PathBuf },
    /// Categorical trace of an endo-correspondence.
    Trace {
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        corr: PathBuf,
    },
    /// Intersection number ⟨X·Y⟩ of X: A → B and Y: B → A.
    Pair {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        source: Option<PathBuf>,
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Gram matrix of the pairing between two motives.
    Gram {
        #[arg(long)]
        motive: PathBuf,
        /// Second motive; defaults to the first.
        #[arg(long)]
        other: Option<PathBuf>,
        /// Algebra for motive documents that do not name one.
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Numerical ideal of a category.
    Radical {
        #[command(flatten)]
        input: CategoryInput,
    },
    /// Quotient by the numerical ideal.
    Quotient {
        #[command(flatten)]
        input: CategoryInput,
    },
    /// Karoubi envelope on listed idempotents, given as `OBJECT=c1,c2,...`.
    Karoubi {
        #[command(flatten)]
        input: CategoryInput,
        #[arg(long = "idempotent", value_name = "OBJECT=COORDS")]
        idempotents: Vec<String>,
    },
    /// Orbit category of an orbit spec.
    Orbit {
        #[arg(long)]
        spec: PathBuf,
        /// Category the spec refers to, if not in the fixture directory.
        #[arg(long)]
        category: Option<PathBuf>,
    },
    /// Radicals and pairing ranks of a category or of its numerical quotient.
    Semisimple {
        #[command(flatten)]
        input: CategoryInput,
        #[arg(long)]
        after_quotient: bool,
    },
    /// Seeded property suites over the fixture corpus.
    Verify {
        #[arg(value_parser = ["ideal", "largest", "trace-agreement", "prop31", "conservativity", "nilpotent", "all"])]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failed command: the violated invariant and where it came from.
#[derive(Debug)]
struct Failure {
    code: i32,
    error: Error,
    fixture: String,
}

impl Failure {
    fn new(error: Error, fixture: impl Into<String>) -> Self {
        let code = if error.is_input_error() { 2 } else { 1 };
        Self {
            code,
            error,
            fixture: fixture.into(),
        }
    }
}

/// A finished command; `passed = false` exits 1.
struct Report {
    passed: bool,
    json: Value,
    pretty: String,
}

type CmdResult = std::result::Result<Report, Failure>;

trait Context<T> {
    fn at(self, fixture: &str) -> std::result::Result<T, Failure>;
}

impl<T> Context<T> for crate::error::Result<T> {
    fn at(self, fixture: &str) -> std::result::Result<T, Failure> {
        self.map_err(|e| Failure::new(e, fixture))
    }
}

struct Session {
    config: Config,
    corpus: Corpus,
}

impl Session {
    fn open(config: Config) -> std::result::Result<Self, Failure> {
        let dir = &config.fixture_dir;
        let corpus = if dir.is_dir() {
            Corpus::load(dir).at(&dir.display().to_string())?
        } else {
            Corpus::default()
        };
        Ok(Self { config, corpus })
    }

    /// Reads a document and makes it visible to name resolution.
    fn load(&mut self, path: &Path) -> std::result::Result<FixtureDoc, Failure> {
        let doc = read_doc(path).at(&path.display().to_string())?;
        self.corpus.put(doc.clone());
        Ok(doc)
    }

    fn algebra(&mut self, path: &Path) -> std::result::Result<Arc<MotiveAlgebra>, Failure> {
        let doc = self.load(path)?;
        self.corpus.algebra(&doc.name).at(&label(&doc, path))
    }

    fn correspondence(
        &mut self,
        path: &Path,
        algebras: (Option<Arc<MotiveAlgebra>>, Option<Arc<MotiveAlgebra>>),
    ) -> std::result::Result<(String, Correspondence), Failure> {
        let doc = self.load(path)?;
        let fixture = label(&doc, path);
        match &doc.payload {
            Payload::Correspondence(c) => Ok((doc.name.clone(), self.corpus.correspondence_from(c, algebras).at(&fixture)?)),
            p => Err(Failure::new(
                Error::Schema(format!("expected a correspondence, found a {}", p.kind())),
                fixture,
            )),
        }
    }

    fn category(&mut self, input: &CategoryInput) -> std::result::Result<(String, PresentedCategory), Failure> {
        if let Some(path) = &input.category {
            let doc = self.load(path)?;
            let fixture = label(&doc, path);
            let c = self.corpus.category(&doc.name).at(&fixture)?;
            c.validate().at(&fixture)?;
            Ok((fixture, c))
        } else {
            let path = input.nchow.as_ref().expect("clap requires one input");
            let a = self.algebra(path)?;
            let fixture = path.display().to_string();
            let c = export_presented_category(&format!("nchow:{}", a.name), &verify::nchow_objects(&a)).at(&fixture)?;
            Ok((fixture, c))
        }
    }
}

fn label(doc: &FixtureDoc, path: &Path) -> String {
    format!("{} ({})", doc.name, path.display())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().map(|s| format!("{s:>width$}")).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
    out
}

fn dims_table(c: &PresentedCategory, dims: &[Vec<usize>]) -> String {
    let mut rows = vec![std::iter::once(String::new()).chain(c.objects.iter().cloned()).collect::<Vec<_>>()];
    for (x, r) in dims.iter().enumerate() {
        rows.push(std::iter::once(c.objects[x].clone()).chain(r.iter().map(|d| d.to_string())).collect());
    }
    table(&rows)
}

fn cmd_check(s: &mut Session, path: &Path) -> CmdResult {
    let doc = s.load(path)?;
    let fixture = label(&doc, path);
    let kind = doc.payload.kind();
    if let Payload::Quiver(_) = doc.payload {
        let a = s.corpus.path_algebra(&doc.name).at(&fixture)?;
        let r = check_smooth_proper(&a);
        let pretty = format!("smooth: {}, proper: {}, dim {}\n", yes(r.smooth), yes(r.proper), r.dim);
        let mut json = serde_json::to_value(&r).expect("report serializes");
        json["kind"] = json!(kind);
        return Ok(Report {
            passed: r.smooth && r.proper,
            json,
            pretty,
        });
    }
    s.corpus.check(&doc.name).at(&fixture)?;
    Ok(Report {
        passed: true,
        json: json!({ "fixture": doc.name, "kind": kind, "valid": true }),
        pretty: format!("{kind} `{}`: valid\n", doc.name),
    })
}

fn cmd_trace(s: &mut Session, algebra: Option<&Path>, corr: &Path) -> CmdResult {
    let a = algebra.map(|p| s.algebra(p)).transpose()?;
    let (name, z) = s.correspondence(corr, (a, None))?;
    let fixture = format!("{name} ({})", corr.display());
    if !z.is_endomorphism() {
        return Err(Failure::new(Error::MiddleMismatch(z.source.name.clone(), z.target.name.clone()), fixture));
    }
    let value = categorical_trace(&z).at(&fixture)?;
    let mut json = json!({ "algebra": z.source.name, "correspondence": name, "trace": format_rational(&value) });
    let mut pretty = format!("tr = {}\n", format_rational(&value));
    if z.terms.is_some() {
        // the same number along both Hochschild routes
        let standard = verify::hh_value(&z, Method::Standard).at(&fixture)?;
        let bar = verify::hh_value(&z, Method::Bar { cutoff: s.config.bar_cutoff }).at(&fixture)?;
        json["hh_standard"] = json!(format_rational(&standard));
        json["hh_bar"] = json!(format_rational(&bar));
        let _ = writeln!(pretty, "χ(HH) standard = {}, bar = {}", format_rational(&standard), format_rational(&bar));
        if standard != value || bar != value {
            return Ok(Report {
                passed: false,
                json,
                pretty,
            });
        }
    }
    Ok(Report {
        passed: true,
        json,
        pretty,
    })
}

fn cmd_pair(s: &mut Session, x: &Path, y: &Path, source: Option<&Path>, target: Option<&Path>) -> CmdResult {
    let a = source.map(|p| s.algebra(p)).transpose()?;
    let b = target.map(|p| s.algebra(p)).transpose()?;
    let (xn, xc) = s.correspondence(x, (a.clone(), b.clone()))?;
    let (yn, yc) = s.correspondence(y, (b.or_else(|| Some(xc.target.clone())), a.or_else(|| Some(xc.source.clone()))))?;
    let value = intersection_number(&xc, &yc).at(&format!("{xn}, {yn}"))?;
    Ok(Report {
        passed: true,
        json: json!({ "x": xn, "y": yn, "source": xc.source.name, "target": xc.target.name, "value": format_rational(&value) }),
        pretty: format!("⟨{xn}·{yn}⟩ = {}\n", format_rational(&value)),
    })
}

fn cmd_gram(s: &mut Session, motive: &Path, other: Option<&Path>, algebra: Option<&Path>) -> CmdResult {
    let a = algebra.map(|p| s.algebra(p)).transpose()?;
    let motive_at = |s: &mut Session, p: &Path| -> std::result::Result<NcMotive, Failure> {
        let (name, e) = s.correspondence(p, (a.clone(), None))?;
        NcMotive::new(name.clone(), e).at(&format!("{name} ({})", p.display()))
    };
    let m = motive_at(s, motive)?;
    let n = match other {
        Some(p) => motive_at(s, p)?,
        None => m.clone(),
    };
    let r = gram_report(&m, &n).at(&m.label)?;
    let mut pretty = format!("Gram {} × {}:\n", r.source, r.target);
    pretty += &table(&r.matrix);
    let _ = writeln!(pretty, "rank {}, radical_dim {}", r.rank, r.radical_dim);
    Ok(Report {
        passed: true,
        json: serde_json::to_value(&r).expect("report serializes"),
        pretty,
    })
}

fn vectors(v: &[Vec<Rational>]) -> Vec<Vec<String>> {
    v.iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

fn cmd_radical(s: &mut Session, input: &CategoryInput) -> CmdResult {
    let (fixture, c) = s.category(input)?;
    let n = numerical_ideal(&c).at(&fixture)?;
    let mut basis = Vec::new();
    for x in 0..c.len() {
        for y in 0..c.len() {
            if n.get(x, y).dim() > 0 {
                basis.push(json!({ "source": c.objects[x], "target": c.objects[y], "vectors": vectors(n.get(x, y).basis()) }));
            }
        }
    }
    let dims = n.dims();
    let pretty = format!("numerical ideal of {} (dimensions):\n{}", c.name, dims_table(&c, &dims));
    Ok(Report {
        passed: true,
        json: json!({ "category": c.name, "objects": c.objects, "ideal_dims": dims, "basis": basis }),
        pretty,
    })
}

fn cmd_quotient(s: &mut Session, input: &CategoryInput) -> CmdResult {
    let (fixture, c) = s.category(input)?;
    let n = numerical_ideal(&c).at(&fixture)?;
    let q = quotient_by_ideal(&c, &n).at(&fixture)?;
    let pretty = format!(
        "{}: hom dimensions before\n{}after the quotient\n{}",
        c.name,
        dims_table(&c, &c.hom_dims),
        dims_table(&q.category, &q.category.hom_dims)
    );
    Ok(Report {
        passed: true,
        json: json!({
            "category": c.name,
            "objects": c.objects,
            "hom_dims": c.hom_dims,
            "ideal_dims": n.dims(),
            "quotient_hom_dims": q.category.hom_dims,
        }),
        pretty,
    })
}

fn parse_idempotent(c: &PresentedCategory, text: &str) -> crate::error::Result<(usize, Vec<Rational>)> {
    let (obj, coords) = text
        .split_once('=')
        .ok_or_else(|| Error::Schema(format!("idempotent `{text}`: expected OBJECT=c1,c2,...")))?;
    let x = c.object_index(obj)?;
    let e = coords.split(',').map(|t| parse_rational(t.trim())).collect::<crate::error::Result<Vec<_>>>()?;
    Ok((x, e))
}

fn cmd_karoubi(s: &mut Session, input: &CategoryInput, idempotents: &[String]) -> CmdResult {
    let (fixture, c) = s.category(input)?;
    let es = idempotents
        .iter()
        .map(|t| parse_idempotent(&c, t))
        .collect::<crate::error::Result<Vec<_>>>()
        .at(&fixture)?;
    let k = karoubi_envelope(&c, &es).at(&fixture)?;
    let kc = &k.category;
    Ok(Report {
        passed: true,
        json: json!({ "category": c.name, "objects": kc.objects, "hom_dims": kc.hom_dims }),
        pretty: format!("Karoubi envelope of {}:\n{}", c.name, dims_table(kc, &kc.hom_dims)),
    })
}

fn cmd_orbit(s: &mut Session, spec: &Path, category: Option<&Path>) -> CmdResult {
    if let Some(p) = category {
        s.load(p)?;
    }
    let doc = s.load(spec)?;
    let fixture = label(&doc, spec);
    let (c, o) = s.corpus.orbit_spec(&doc.name).at(&fixture)?;
    let orbit = orbit_category(&c, &o).at(&fixture)?;
    let oc = &orbit.category;
    let twists: Vec<Vec<Vec<i64>>> = orbit
        .blocks
        .iter()
        .map(|r| r.iter().map(|bs| bs.iter().filter(|b| b.dim > 0).map(|b| b.twist).collect()).collect())
        .collect();
    Ok(Report {
        passed: true,
        json: json!({
            "category": c.name,
            "object": c.objects[o.object],
            "bound": o.bound,
            "objects": oc.objects,
            "hom_dims": oc.hom_dims,
            "twists": twists,
        }),
        pretty: format!(
            "{} / − ⊗ {} (bound {}):\n{}",
            c.name,
            c.objects[o.object],
            o.bound,
            dims_table(oc, &oc.hom_dims)
        ),
    })
}

fn cmd_semisimple(s: &mut Session, input: &CategoryInput, after_quotient: bool) -> CmdResult {
    let (fixture, c) = s.category(input)?;
    let target = if after_quotient {
        let n = numerical_ideal(&c).at(&fixture)?;
        quotient_by_ideal(&c, &n).at(&fixture)?.category
    } else {
        c
    };
    let r = check_semisimple(&target).at(&fixture)?;
    let mut json = serde_json::to_value(&r).expect("report serializes");
    json["after_quotient"] = json!(after_quotient);
    let mut pretty = format!("{}{}:\n", r.category, if after_quotient { " modulo N" } else { "" });
    for o in &r.objects {
        let _ = writeln!(pretty, "  End({}): dim {}, radical {}", o.object, o.end_dim, o.radical_dim);
    }
    let _ = writeln!(
        pretty,
        "radicals vanish: {}, pairings nondegenerate: {}, semisimple: {}",
        yes(r.radicals_vanish),
        yes(r.pairings_nondegenerate),
        yes(r.semisimple)
    );
    Ok(Report {
        passed: r.semisimple,
        json,
        pretty,
    })
}

fn cmd_verify(s: &mut Session, suite: &str, seed: u64) -> CmdResult {
    let suites: Vec<Suite> = match Suite::parse(suite) {
        Some(one) => vec![one],
        None => Suite::ALL.to_vec(),
    };
    let fixture = s.config.fixture_dir.display().to_string();
    let mut reports = Vec::new();
    let mut pretty = String::new();
    for su in suites {
        let r = verify::run(&s.corpus, su, seed).at(&fixture)?;
        let _ = writeln!(
            pretty,
            "{:<16} {} ({} assertions){}",
            r.suite,
            if r.passed { "pass" } else { "FAIL" },
            r.assertions,
            r.counterexample.as_ref().map(|c| format!(": {c}")).unwrap_or_default()
        );
        reports.push(r);
    }
    let passed = reports.iter().all(|r| r.passed);
    let json = if reports.len() == 1 {
        serde_json::to_value(&reports[0]).expect("report serializes")
    } else {
        json!({ "seed": seed, "passed": passed, "suites": reports })
    };
    Ok(Report { passed, json, pretty })
}

fn dispatch(s: &mut Session, cmd: &Command) -> CmdResult {
    match cmd {
        Command::Check { file } => cmd_check(s, file),
        Command::Trace { algebra, corr } => cmd_trace(s, algebra.as_deref(), corr),
        Command::Pair { x, y, source, target } => cmd_pair(s, x, y, source.as_deref(), target.as_deref()),
        Command::Gram { motive, other, algebra } => cmd_gram(s, motive, other.as_deref(), algebra.as_deref()),
        Command::Radical { input } => cmd_radical(s, input),
        Command::Quotient { input } => cmd_quotient(s, input),
        Command::Karoubi { input, idempotents } => cmd_karoubi(s, input, idempotents),
        Command::Orbit { spec, category } => cmd_orbit(s, spec, category.as_deref()),
        Command::Semisimple { input, after_quotient } => cmd_semisimple(s, input, *after_quotient),
        Command::Verify { suite, seed } => cmd_verify(s, suite, *seed),
    }
}

fn render(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("values serialize");
    out.push('\n');
    out
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
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
    let config = Config {
        bar_cutoff: cli.bar_cutoff,
        fixture_dir: cli.fixtures.clone().unwrap_or_else(default_fixture_dir),
        ..Config::default()
    };
    let result = Session::open(config).and_then(|mut s| dispatch(&mut s, &cli.command));
    match result {
        Ok(r) => Outcome {
            code: if r.passed { 0 } else { 1 },
            stdout: if cli.pretty { r.pretty } else { render(&r.json) },
            stderr: String::new(),
        },
        Err(f) => {
            let line = format!("error in {}: {}\n", f.fixture, f.error);
            let stdout = if cli.pretty {
                String::new()
            } else {
                render(&json!({
                    "error": f.error.invariant(),
                    "message": f.error.to_string(),
                    "fixture": f.fixture,
                }))
            };
            Outcome {
                code: f.code,
                stdout,
                stderr: line,
            }
        }
    }
}
