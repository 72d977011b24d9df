//! Command-line front end. Every subcommand is a thin wrapper over a
//! library operation; checks print a certificate and exit 0 on pass, 1
//! on a property failure. Malformed input exits 2.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::certificate::{Certificate, Format, InputDigest};
use crate::corpus;
use crate::doc;
use crate::error::{Error, Result};
use crate::grothendieck::{check_gr_relnerve_iso, check_opfibration, cocartesian_lift, grothendieck, DiagramSCat, Fibration};
use crate::monoidal::{c_otimes, check_cotimes_gr_iso, check_monoidal_fibers, check_op_theorems, check_operadic_relnerve, operadic_nerve, MonSCat};
use crate::nerves::{coherent_nerve, ordinary_nerve, relative_nerve, Chain, RelativeNerve};
use crate::scat::{terminal_scat, FinCat, SCat};
use crate::simplex;
use crate::sset::check_quasicategory;

/// Hom-complex cap used for fixtures when `--cap` is not given.
pub const DEFAULT_CAP: usize = 2;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "nervekit", version, about = "Nerves of enriched categories, Grothendieck constructions and categories of operators")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Dimension cap shared by every loaded complex (default 2 for fixtures).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Truncation bound M of Δ^op.
    #[arg(long = "delta-max", global = true, default_value_t = 2)]
    delta_max: usize,
    /// Top dimension compared by gr-relnerve and cotimes-gr.
    #[arg(long, global = true)]
    nmax: Option<usize>,
    /// Write the document or certificate here as well.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

/// Inputs name a corpus fixture, or a JSON document when they end in `.json`.
#[derive(Subcommand, Debug)]
enum Command {
    /// Ordinary nerve of a finite category.
    Nerve {
        #[arg(long)]
        base: String,
    },
    /// Homotopy-coherent nerve of an enriched category.
    CoherentNerve {
        #[arg(long)]
        fixture: String,
    },
    /// Relative nerve of `N ∘ F`; `constant-point` may be placed over any `--base`.
    RelativeNerve {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        base: Option<String>,
    },
    /// Grothendieck construction of a diagram, with its projection.
    Grothendieck {
        #[arg(long)]
        diagram: String,
    },
    /// Operadic nerve N^⊗(C) of a strict monoidal enriched category.
    OperadicNerve {
        #[arg(long)]
        monoidal: String,
    },
    /// Verify a property and print a certificate; exit 0 on pass, 1 on failure
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// N(Gr F) ≅ relative nerve of N ∘ F.
    GrRelnerve {
        #[arg(long)]
        diagram: String,
    },
    /// C^⊗ ≅ Gr(C^•) over Δ^op; with `--nmax` also through the relative nerve.
    CotimesGr {
        #[arg(long)]
        monoidal: String,
    },
    /// Fiber of N^⊗(C) over [n] against N(C)^n.
    Fibers {
        #[arg(long)]
        monoidal: String,
        #[arg(long)]
        level: usize,
    },
    /// The four opposite comparisons, as strict isomorphisms.
    Opposites {
        #[arg(long)]
        monoidal: String,
    },
    /// Pullback criterion for chosen lifts and the lift search.
    Opfibration {
        /// A diagram fixture or document, or `opfibration_negative`.
        #[arg(long, conflicts_with = "monoidal", required_unless_present = "monoidal")]
        diagram: Option<String>,
        #[arg(long)]
        monoidal: Option<String>,
        /// Check this arrow, `SOURCE->TARGET` or `SOURCE->TARGET@VERTEX`, in
        /// place of the chosen lifts.
        #[arg(long)]
        arrow: Option<String>,
    },
    /// Inner horn filling of a nerve.
    Quasicat {
        #[arg(long, conflicts_with = "base", required_unless_present = "base")]
        fixture: Option<String>,
        #[arg(long)]
        base: Option<String>,
    },
}

/// Global cap, Δ^op bound and the inputs loaded so far.
#[derive(Debug)]
pub struct Workspace {
    cap: Option<usize>,
    pub delta_max: usize,
    pub nmax: Option<usize>,
    pub out: Option<PathBuf>,
    pub inputs: Vec<InputDigest>,
}

fn is_document(value: &str) -> bool {
    value.ends_with(".json")
}

impl Workspace {
    pub fn new(cap: Option<usize>, delta_max: usize, nmax: Option<usize>, out: Option<PathBuf>) -> Self {
        Self { cap, delta_max, nmax, out, inputs: Vec::new() }
    }

    pub fn cap(&self) -> usize {
        self.cap.unwrap_or(DEFAULT_CAP)
    }

    /// Every loaded complex shares one cap; the first document fixes it
    /// when `--cap` was not given.
    fn adopt_cap(&mut self, cap: usize) -> Result<()> {
        match self.cap {
            Some(c) => Error::cap_check(c, cap),
            None => {
                self.cap = Some(cap);
                Ok(())
            }
        }
    }

    fn read(&mut self, path: &str) -> Result<String> {
        let text = fs::read_to_string(path).map_err(|e| Error::malformed("input file", format!("{path}: {e}")))?;
        self.inputs.push(InputDigest::of(path, text.as_bytes()));
        Ok(text)
    }

    fn record(&mut self, name: &str, canonical: String) {
        self.inputs.push(InputDigest::of(name, canonical.as_bytes()));
    }

    pub fn category(&mut self, value: &str) -> Result<FinCat> {
        if is_document(value) {
            let text = self.read(value)?;
            return doc::fincat_from_doc(&doc::from_json("category document", &text)?);
        }
        let d = corpus::category(value)?;
        self.record(value, doc::to_json(&doc::fincat_to_doc(&d)));
        Ok(d)
    }

    pub fn scat(&mut self, value: &str) -> Result<SCat> {
        if is_document(value) {
            let text = self.read(value)?;
            let c = doc::scat_from_doc(&doc::from_json("enriched category document", &text)?)?;
            self.adopt_cap(c.cap())?;
            return Ok(c);
        }
        let c = corpus::scat(value, self.cap())?;
        self.record(value, doc::to_json(&doc::scat_to_doc(&c)));
        Ok(c)
    }

    pub fn diagram(&mut self, value: &str) -> Result<DiagramSCat> {
        if is_document(value) {
            let text = self.read(value)?;
            let f = doc::diagram_from_doc(&doc::from_json("diagram document", &text)?)?;
            self.adopt_cap(f.cap())?;
            return Ok(f);
        }
        let f = corpus::diagram(value, self.cap())?;
        self.record(value, doc::to_json(&doc::diagram_to_doc(&f)));
        Ok(f)
    }

    pub fn monoidal(&mut self, value: &str) -> Result<MonSCat> {
        if is_document(value) {
            let text = self.read(value)?;
            let m = doc::monoidal_from_doc(&doc::from_json("monoidal document", &text)?)?;
            self.adopt_cap(m.cap())?;
            return Ok(m);
        }
        let m = corpus::monoidal(value, self.cap())?;
        self.record(value, doc::to_json(&doc::monoidal_to_doc(&m)));
        Ok(m)
    }

    /// Writes `content` to `--out` when given.
    fn emit(&self, content: &str) -> Result<()> {
        if let Some(path) = &self.out {
            write_file(path, content)?;
        }
        Ok(())
    }
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    fs::write(path, content).map_err(|e| Error::malformed("output file", format!("{}: {e}", path.display())))
}

/// What a command printed and the exit status it asks for.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Parses `args` (program name first), runs the command and prints its
/// output. Returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_MALFORMED } else { EXIT_PASS };
        }
    };
    let invocation: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match execute(&cli, &invocation.join(" ")) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Property failures surfaced as errors exit 1; everything else is bad input.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Counterexample(_) => EXIT_FAIL,
        _ => EXIT_MALFORMED,
    }
}

pub fn execute(cli: &Cli, invocation: &str) -> Result<Outcome> {
    let o = &cli.opts;
    let mut ws = Workspace::new(o.cap, o.delta_max, o.nmax, o.out.clone());
    let format = match o.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    let cert = match &cli.command {
        Command::Nerve { base } => {
            let d = ws.category(base)?;
            let n = ordinary_nerve(&d, ws.cap());
            let out = doc::nerve_doc(&n.sset, |k, c| describe_chain(&d, n.chain(k, c)));
            return construction(&ws, nerve_summary("nerve", &out), doc::to_json(&out));
        }
        Command::CoherentNerve { fixture } => {
            let k = ws.scat(fixture)?;
            let n = coherent_nerve(&k, ws.cap())?;
            let out = doc::nerve_doc(&n.sset, |dim, c| n.describe(&k, dim, c));
            return construction(&ws, nerve_summary("coherent-nerve", &out), doc::to_json(&out));
        }
        Command::RelativeNerve { diagram, base } => {
            let f = relative_input(&mut ws, diagram, base.as_deref())?;
            let fn_nerve = f.nerve(ws.cap())?;
            let r = relative_nerve(&fn_nerve.diagram, ws.cap())?;
            let out = doc::nerve_doc(&r.sset, |k, c| describe_relative(&f.base, &fn_nerve.diagram, &r, k, c));
            return construction(&ws, nerve_summary("relative-nerve", &out), doc::to_json(&out));
        }
        Command::Grothendieck { diagram } => {
            let f = ws.diagram(diagram)?;
            let e = grothendieck(&f)?;
            let out = doc::FibrationDoc {
                total: doc::scat_to_doc(&e.total),
                base: doc::scat_to_doc(&e.base_scat),
                projection: doc::functor_to_doc(&e.projection, &e.total, &e.base_scat),
            };
            let summary = format!("grothendieck: {} objects over {} base objects", e.object_count(), e.base.object_count());
            return construction(&ws, summary, doc::to_json(&out));
        }
        Command::OperadicNerve { monoidal } => {
            let m = ws.monoidal(monoidal)?;
            let x = operadic_nerve(&m, ws.delta_max, ws.cap())?;
            let levels = |k: usize, c: usize| {
                let chain = x.base.chain(k, x.projection.apply(k, c));
                let objs: Vec<&str> = chain.objects.iter().map(|&o| x.base.sset.name(0, o)).collect();
                format!("{} over {}", x.nerve.describe(&x.operators.total, k, c), objs.join(","))
            };
            let out = doc::nerve_doc(&x.nerve.sset, levels);
            return construction(&ws, nerve_summary("operadic-nerve", &out), doc::to_json(&out));
        }
        Command::Check(check) => run_check(&mut ws, check)?,
    };
    let mut cert = cert;
    cert.command = format!("nervekit {invocation} (cap {}, delta-max {})", ws.cap(), ws.delta_max);
    cert.inputs = std::mem::take(&mut ws.inputs);
    let rendered = cert.render(format);
    ws.emit(&rendered)?;
    let code = if cert.passed() { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome { stdout: ensure_newline(rendered), code })
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn nerve_summary(what: &str, out: &doc::NerveDoc) -> String {
    let counts: Vec<String> = out.sset.cells.iter().map(|c| c.len().to_string()).collect();
    format!("{what}: cells per dimension ({})", counts.join(", "))
}

/// Document to `--out` with a count summary on stdout, or the document
/// itself on stdout.
fn construction(ws: &Workspace, summary: String, json: String) -> Result<Outcome> {
    match &ws.out {
        Some(path) => {
            write_file(path, &json)?;
            Ok(Outcome { stdout: format!("{summary}; written to {}\n", path.display()), code: EXIT_PASS })
        }
        None => Ok(Outcome { stdout: ensure_newline(json), code: EXIT_PASS }),
    }
}

fn relative_input(ws: &mut Workspace, diagram: &str, base: Option<&str>) -> Result<DiagramSCat> {
    let constant = diagram.replace('-', "_") == "constant_point";
    match base {
        Some(b) if constant => {
            let d = ws.category(b)?;
            Ok(DiagramSCat::constant(&d, &terminal_scat(ws.cap())))
        }
        Some(b) => {
            let d = ws.category(b)?;
            let f = ws.diagram(diagram)?;
            if f.base != d {
                return Err(Error::malformed("--base", format!("`{b}` is not the base of `{diagram}`")));
            }
            Ok(f)
        }
        None => ws.diagram(diagram),
    }
}

fn describe_chain(d: &FinCat, chain: &Chain) -> String {
    if chain.arrows.is_empty() {
        return d.objects()[chain.objects[0]].clone();
    }
    chain.arrows.iter().map(|&a| d.arrow_info(a).name.as_str()).collect::<Vec<_>>().join(" ; ")
}

fn describe_relative(d: &FinCat, f: &crate::nerves::DiagramSSet, r: &RelativeNerve, k: usize, c: usize) -> String {
    let s = r.simplex(k, c);
    let family: Vec<String> = (1..=simplex::interval(0, k))
        .map(|j| {
            let elems = simplex::elements(j);
            let value = f.value(s.chain.objects[simplex::max_elem(j)]);
            let digits: String = elems.iter().map(|e| e.to_string()).collect();
            format!("{digits}={}", value.name(elems.len() - 1, s.cell(j)))
        })
        .collect();
    format!("{} | {}", describe_chain(d, &s.chain), family.join(" "))
}

/// Resolves `SOURCE->TARGET[@VERTEX]` against the objects and hom vertices
/// of `total`; the vertex may be left out when the hom has exactly one.
fn given_arrow(total: &SCat, text: Option<&str>) -> Result<Option<Vec<(usize, usize, usize)>>> {
    let Some(text) = text else { return Ok(None) };
    let bad = |detail: &str| Error::malformed("--arrow", format!("`{text}`: {detail}"));
    let (ends, vertex) = match text.split_once('@') {
        Some((ends, v)) => (ends, Some(v)),
        None => (text, None),
    };
    let (source, target) = ends.split_once("->").ok_or_else(|| bad("expected SOURCE->TARGET"))?;
    let s = total.find_object(source.trim()).ok_or_else(|| bad("unknown source"))?;
    let t = total.find_object(target.trim()).ok_or_else(|| bad("unknown target"))?;
    let hom = total.hom(s, t);
    let v = match vertex {
        Some(name) => hom.find(0, name).ok_or_else(|| bad("unknown vertex"))?,
        None if hom.count(0) == 1 => 0,
        None => return Err(bad(&format!("hom has {} vertices; name one with @VERTEX", hom.count(0)))),
    };
    Ok(Some(vec![(s, t, v)]))
}

fn run_check(ws: &mut Workspace, check: &CheckCommand) -> Result<Certificate> {
    let cap = ws.cap();
    match check {
        CheckCommand::GrRelnerve { diagram } => {
            let f = ws.diagram(diagram)?;
            check_gr_relnerve_iso(&f, ws.nmax.unwrap_or(ws.cap()))
        }
        CheckCommand::CotimesGr { monoidal } => {
            let m = ws.monoidal(monoidal)?;
            match ws.nmax {
                Some(n) => check_operadic_relnerve(&m, ws.delta_max, n),
                None => check_cotimes_gr_iso(&m, ws.delta_max),
            }
        }
        CheckCommand::Fibers { monoidal, level } => {
            let m = ws.monoidal(monoidal)?;
            let x = operadic_nerve(&m, ws.delta_max, ws.cap())?;
            check_monoidal_fibers(&x, *level)
        }
        CheckCommand::Opposites { monoidal } => {
            let m = ws.monoidal(monoidal)?;
            check_op_theorems(&m, ws.delta_max, ws.cap())
        }
        CheckCommand::Opfibration { diagram: Some(name), arrow, .. } if name.replace('-', "_") == "opfibration_negative" => {
            let fib = corpus::opfibration_negative(cap)?;
            ws.record(name, doc::to_json(&doc::scat_to_doc(&fib.total)));
            let given = given_arrow(&fib.total, arrow.as_deref())?;
            check_opfibration(&fib, &given.unwrap_or_default(), cap)
        }
        CheckCommand::Opfibration { diagram: Some(name), arrow, .. } => {
            let f = ws.diagram(name)?;
            let e = grothendieck(&f)?;
            let lifts = match given_arrow(&e.total, arrow.as_deref())? {
                Some(given) => given,
                None => {
                    let mut lifts = Vec::new();
                    for o in 0..e.object_count() {
                        let (c, _) = e.split_object(o);
                        for (a, info) in e.base.arrows().iter().enumerate() {
                            if info.src == c {
                                let lift = cocartesian_lift(&e, o, a)?;
                                let vertex = e.arrow_vertex(&lift).ok_or_else(|| Error::malformed("arrow", e.describe_arrow(&lift)))?;
                                lifts.push((lift.source, lift.target, vertex));
                            }
                        }
                    }
                    lifts
                }
            };
            check_opfibration(&Fibration::of(&e), &lifts, ws.cap())
        }
        CheckCommand::Opfibration { monoidal: Some(name), arrow, .. } => {
            let m = ws.monoidal(name)?;
            let o = c_otimes(&m, ws.delta_max)?;
            let lifts = match given_arrow(&o.total, arrow.as_deref())? {
                Some(given) => given,
                None => {
                    let mut lifts = Vec::new();
                    for s in 0..o.object_count() {
                        for level in 0..=ws.delta_max {
                            for &a in o.delta.category.hom(o.level(s), level) {
                                let lift = o.chosen_lift(s, a)?;
                                lifts.push((s, lift.target, lift.vertex));
                            }
                        }
                    }
                    lifts
                }
            };
            check_opfibration(&o.fibration(), &lifts, ws.cap())
        }
        CheckCommand::Opfibration { .. } => Err(Error::malformed("check opfibration", "needs --diagram or --monoidal")),
        CheckCommand::Quasicat { fixture: Some(name), .. } => {
            let k = ws.scat(name)?;
            check_quasicategory(&coherent_nerve(&k, ws.cap())?.sset, ws.cap())
        }
        CheckCommand::Quasicat { base: Some(name), .. } => {
            let d = ws.category(name)?;
            check_quasicategory(&ordinary_nerve(&d, cap).sset, cap)
        }
        CheckCommand::Quasicat { .. } => Err(Error::malformed("check quasicat", "needs --fixture or --base")),
    }
}
