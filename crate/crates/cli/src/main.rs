//! `supertgw`: command-line access to the TGW toolkit.
//!
//! Exit codes: 0 on pass/valid/member, 1 on fail/invalid/non-member, 2 on
//! usage, parse and resource errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use supertgw_core::io::read_matrix;
use supertgw_core::liesuper::{
    build_fixtures, calibrate, check_relations, check_triangle, Calibration, CalibrationFixture, Family, LiePreset,
    Realization, ResidualReport, TriangleReport,
};
use supertgw_core::support::{
    enumerate_support, injectivity_report, is_in_support, BoxSpec, DEFAULT_BOX_CAP,
};
use supertgw_core::tgwdatum::{consistency_check, eval_word, phi_generator, validate_gamma};
use supertgw_core::{Error, GammaMatrix, Letter, TgwDatum, ValidatedGamma};

#[derive(Parser)]
#[command(name = "supertgw", version, about = "Weyl-Clifford superalgebras and TGW algebras from integer matrices")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the sufficient conditions on a matrix.
    Validate(MatrixArg),
    /// Print the derived datum (t, σ, μ, parities).
    Datum(MatrixArg),
    /// Evaluate the consistency equations (diagnostic).
    Consistency(MatrixArg),
    /// Print φ(X_i) and φ(Y_i) for every column.
    Phi(MatrixArg),
    /// Degree and φ-image of a word in the X_i, Y_i.
    Eval {
        matrix: PathBuf,
        /// Comma separated letters, e.g. X1,Y2.
        #[arg(long)]
        word: String,
    },
    /// Graded support queries.
    #[command(subcommand)]
    Support(SupportCommand),
    /// Injectivity diagnostics on a box.
    Injectivity {
        matrix: PathBuf,
        #[command(flatten)]
        region: Region,
    },
    /// Lie superalgebra realizations.
    #[command(subcommand)]
    Lie(LieCommand),
}

#[derive(Args)]
struct MatrixArg {
    matrix: PathBuf,
}

#[derive(Args)]
struct Region {
    /// Intervals a:b,c:d,... one per column.
    #[arg(long = "box", allow_hyphen_values = true, conflicts_with = "radius")]
    bx: Option<String>,
    /// Use the cube [-r, r]^m.
    #[arg(long)]
    radius: Option<u32>,
    /// Maximum number of candidate points.
    #[arg(long, default_value_t = DEFAULT_BOX_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    cap: u64,
}

impl Region {
    fn resolve(&self, m: usize) -> Result<BoxSpec, Error> {
        match (&self.bx, self.radius) {
            (Some(text), _) => BoxSpec::parse(text),
            (None, Some(r)) => Ok(BoxSpec::cube(m, i64::from(r))),
            (None, None) => Err(Error::InvalidInput("one of --box or --radius is required".into())),
        }
    }
}

#[derive(Subcommand)]
enum SupportCommand {
    /// Decide whether a degree is in the support.
    Member {
        matrix: PathBuf,
        /// Degree, comma separated.
        #[arg(short = 'g', long = "degree", allow_hyphen_values = true)]
        g: String,
    },
    /// List the support points in a box.
    Enum {
        matrix: PathBuf,
        #[command(flatten)]
        region: Region,
        /// Keep only points with even coordinate sum.
        #[arg(long)]
        even_lattice: bool,
    },
}

#[derive(Subcommand)]
enum LieCommand {
    /// Relation residuals and the comparison with φ.
    Check {
        family: String,
        p: usize,
        q: usize,
        #[arg(long)]
        realization: Option<String>,
        /// Solve for scalings and shifts instead of using unit ones.
        #[arg(long, conflicts_with = "fixtures")]
        calibrate: bool,
        /// Take scalings and shifts from a fixture file.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Solve the calibration of every supported preset and print the fixture file.
    Fixtures {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
}

struct Outcome {
    pass: bool,
}

impl Outcome {
    fn of(pass: bool) -> Self {
        Outcome { pass }
    }
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("reports serialize"));
}

fn load(path: &PathBuf) -> Result<GammaMatrix, Error> {
    read_matrix(path)
}

fn load_valid(path: &PathBuf) -> Result<ValidatedGamma, Error> {
    load(path)?.validated()
}

fn parse_vector(text: &str) -> Result<Vec<i64>, Error> {
    text.split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad integer '{s}' in '{text}'"))))
        .collect()
}

fn witness_text(w: &supertgw_core::support::SupportWitness) -> String {
    let parts: Vec<String> = w
        .steps
        .iter()
        .map(|s| format!("{}{}", if s.sign > 0 { "+" } else { "-" }, s.column + 1))
        .collect();
    format!("({})", parts.join(" "))
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let text = cli.format == Format::Text;
    match &cli.command {
        Command::Validate(a) => {
            let report = validate_gamma(&load(&a.matrix)?);
            if text {
                println!("{report}");
            } else {
                emit(&report);
            }
            Ok(Outcome::of(report.is_valid()))
        }
        Command::Datum(a) => {
            let g = load_valid(&a.matrix)?;
            let d = TgwDatum::derive(&g);
            if text {
                print!("{}", d.render());
            } else {
                emit(&json!({
                    "t": d.t.iter().map(|t| t.render()).collect::<Vec<_>>(),
                    "sigma": d.sigma.iter().map(|s| s.render()).collect::<Vec<_>>(),
                    "sigma_exponents": d.sigma.iter().map(|s| s.0.clone()).collect::<Vec<_>>(),
                    "mu": d.mu,
                    "pparity": d.pparity,
                    "pprime": d.pprime,
                }));
            }
            Ok(Outcome::of(true))
        }
        Command::Consistency(a) => {
            let g = load_valid(&a.matrix)?;
            let report = consistency_check(&TgwDatum::derive(&g));
            if text {
                println!("{} (equations are not known to decide consistency for non-regular data)", report.label);
                for p in &report.pairs {
                    println!("pair ({},{}): {}", p.i, p.j, if p.pass { "pass" } else { &p.residual });
                }
                for t in &report.triples {
                    println!("triple ({},{},{}): {}", t.i, t.j, t.k, if t.pass { "pass" } else { &t.residual });
                }
                println!("all pass: {}", report.all_pass);
            } else {
                emit(&report);
            }
            Ok(Outcome::of(report.all_pass))
        }
        Command::Phi(a) => {
            let g = load_valid(&a.matrix)?;
            let mut cols = Vec::new();
            for i in 0..g.m() {
                let x = phi_generator(&g, Letter::X(i))?.render();
                let y = phi_generator(&g, Letter::Y(i))?.render();
                if text {
                    println!("phi(X{0}) = {x}\nphi(Y{0}) = {y}", i + 1);
                }
                cols.push(json!({"column": i + 1, "X": x, "Y": y}));
            }
            if !text {
                emit(&json!({ "columns": cols }));
            }
            Ok(Outcome::of(true))
        }
        Command::Eval { matrix, word } => {
            let g = load_valid(matrix)?;
            let letters = word.split(',').map(Letter::parse).collect::<Result<Vec<_>, _>>()?;
            let ge = eval_word(&g, &letters)?;
            if text {
                println!("degree = ({})\nimage = {}", join(&ge.degree), ge.image);
            } else {
                emit(&json!({
                    "word": letters.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                    "degree": ge.degree,
                    "image": ge.image.render(),
                    "vanishes": ge.image.is_zero(),
                }));
            }
            Ok(Outcome::of(true))
        }
        Command::Support(SupportCommand::Member { matrix, g }) => {
            let gamma = load_valid(matrix)?;
            let point = parse_vector(g)?;
            let w = is_in_support(&gamma, &point)?;
            if text {
                match &w {
                    Some(w) => println!("({}) member {}", join(&point), witness_text(w)),
                    None => println!("({}) not a member", join(&point)),
                }
            } else {
                emit(&json!({"point": point, "member": w.is_some(), "witness": w}));
            }
            Ok(Outcome::of(w.is_some()))
        }
        Command::Support(SupportCommand::Enum { matrix, region, even_lattice }) => {
            let gamma = load_valid(matrix)?;
            let bx = region.resolve(gamma.m())?;
            for p in enumerate_support(&gamma, &bx, *even_lattice, region.cap)? {
                if text {
                    println!("({}) {}", join(&p.point), witness_text(&p.witness));
                } else {
                    emit(&json!({"point": p.point, "member": true, "witness": p.witness}));
                }
            }
            Ok(Outcome::of(true))
        }
        Command::Injectivity { matrix, region } => {
            let gamma = load_valid(matrix)?;
            let bx = region.resolve(gamma.m())?;
            let r = injectivity_report(&gamma, &bx, region.cap)?;
            if text {
                println!("rank {} of {} ({})", r.rank, r.m, if r.scope == "global" { "global certificate" } else { "box-restricted" });
                for k in &r.kernel {
                    println!("kernel vector ({})", join(k));
                }
                println!("box {}: {} support points", r.bx, r.support_size);
                println!("gamma injective on support: {}", r.gamma_injective);
                println!("projected gamma injective on support: {}", r.projected_injective);
                println!("projected gamma kernel trivial on support: {}", r.projected_kernel_trivial);
                println!("supersupport containment violations: {}", r.containment_violations.len());
            } else {
                emit(&r);
            }
            Ok(Outcome::of(r.injective))
        }
        Command::Lie(LieCommand::Check { family, p, q, realization, calibrate: solve, fixtures }) => {
            let family: Family = family.parse()?;
            let realization: Realization = match realization {
                Some(r) => r.parse()?,
                None => family.default_realization(),
            };
            let preset = LiePreset::new(family, *p, *q, realization)?;
            let cal = match (solve, fixtures) {
                (true, _) => calibrate(&preset)?,
                (false, Some(path)) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
                    let fx = CalibrationFixture::parse(&text)?;
                    fx.lookup(family, realization, *p, *q)
                        .ok_or_else(|| {
                            Error::InvalidInput(format!("no fixture entry for {family} {realization} {p} {q}"))
                        })?
                        .calibration
                        .parse()?
                }
                (false, None) => Calibration::unit(&preset),
            };
            let residuals = check_relations(&preset, &cal)?;
            let triangle = check_triangle(&preset, &cal)?;
            let pass = residuals.all_pass && triangle.all_match;
            if text {
                print_lie_text(&residuals, &triangle);
            } else {
                #[derive(Serialize)]
                struct LieOutput<'a> {
                    #[serde(flatten)]
                    residuals: &'a ResidualReport,
                    triangle: &'a TriangleReport,
                }
                emit(&LieOutput { residuals: &residuals, triangle: &triangle });
            }
            Ok(Outcome::of(pass))
        }
        Command::Lie(LieCommand::Fixtures { max_n }) => {
            print!("{}", build_fixtures(*max_n)?.render());
            Ok(Outcome::of(true))
        }
    }
}

fn print_lie_text(r: &ResidualReport, t: &TriangleReport) {
    println!("{} p={} q={} ({})", r.family, r.p, r.q, r.realization);
    println!(
        "calibration: e = [{}], f = [{}], h shift = [{}]",
        r.calibration.e_scale.join(", "),
        r.calibration.f_scale.join(", "),
        r.calibration.h_shift.join(", ")
    );
    for rel in &r.relations {
        if rel.pass {
            println!("ok    {}", rel.relation);
        } else {
            println!("FAIL  {}   residual {}", rel.relation, rel.residual);
        }
    }
    for c in t.e.iter().chain(&t.f) {
        println!("{}: phi = {}, pi = {}{}", c.generator, c.phi, c.pi, if c.pass { "" } else { "  MISMATCH" });
    }
    for c in &t.h {
        match &c.offset {
            Some(o) => println!("{}: pi - psi = {o}", c.generator),
            None => println!("{}: pi - psi is not constant", c.generator),
        }
    }
    println!("all relations pass: {}", r.all_pass);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => ExitCode::from(if o.pass { 0 } else { 1 }),
        Err(Error::InvalidGamma(report)) => {
            if cli.format == Format::Text {
                println!("refused: {report}");
            } else {
                emit(&json!({ "refused": "matrix fails validation", "validation": report }));
            }
            ExitCode::from(1)
        }
        Err(e @ Error::Calibration(_)) => {
            eprintln!("supertgw: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("supertgw: {e}");
            ExitCode::from(2)
        }
    }
}
