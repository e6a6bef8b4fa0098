//! Batch front end: parse point sets, drive construction, gluing and
//! verification, and emit certificates or search reports with stable
//! formats and exit codes.
//!
//! Exit codes: 0 success / exact match, 1 verification or search
//! mismatch, 2 input error, 3 effort exhausted. Logs go to stderr;
//! machine output goes to stdout or --output.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;

use prescurve_core::arith;
use prescurve_core::certificate::{verify, Certificate};
use prescurve_core::config::EffortConfig;
use prescurve_core::construct::{
    construct_curve, singleton_certificate, AcceptableSet, ForbiddenRoots,
};
use prescurve_core::error::Error as CoreError;
use prescurve_core::newton;
use prescurve_core::oracle::{
    search_glued, search_superelliptic, search_twist, SearchReport, SearchVerdict,
};
use prescurve_core::poly::Polynomial;
use prescurve_core::projective::{glue, ProjectivePoint};

const EXIT_OK: i32 = 0;
const EXIT_MISMATCH: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_EFFORT: i32 = 3;

#[derive(Parser)]
#[command(
    name = "prescurve",
    about = "Construct smooth projective curves whose rational points are exactly a prescribed finite set",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct EffortArgs {
    /// Largest interpolant specialization value tried
    #[arg(long, default_value_t = 200)]
    max_y: u64,
    /// How many primes from the 5 mod 12 class to try
    #[arg(long, default_value_t = 500)]
    max_ell_candidates: u64,
    /// Bound on mod-p irreducibility witness primes
    #[arg(long, default_value_t = 1000)]
    witness_prime_bound: u64,
    /// Seed for the randomized coordinate searches
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl EffortArgs {
    fn to_config(&self) -> EffortConfig {
        EffortConfig {
            max_y: self.max_y,
            max_ell_candidates: self.max_ell_candidates,
            witness_prime_bound: self.witness_prime_bound,
            seed: self.seed,
            ..EffortConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a superelliptic curve certificate for an affine point set
    Construct {
        /// Input JSON: {"space":"A2","points":[["a","b"],...]}
        #[arg(long)]
        input: PathBuf,
        /// Certificate destination (stdout when omitted)
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        effort: EffortArgs,
    },
    /// Build a glued curve system for a projective point set
    Glue {
        /// Input JSON: {"space":"Pn","n":3,"points":[["x0",...,"xn"],...]}
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        effort: EffortArgs,
    },
    /// Emit the fixed one-point curve certificate
    Singleton {
        /// Input JSON with exactly one point (A2 or Pn)
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        effort: EffortArgs,
    },
    /// Recheck every stored certificate check from the stored data alone
    Verify {
        /// Certificate JSON produced by construct, glue or singleton
        #[arg(long)]
        input: PathBuf,
    },
    /// Bounded-height rational point search against a certificate
    Search {
        /// Certificate JSON to search (omit when using --twist)
        #[arg(long, conflicts_with = "twist")]
        input: Option<PathBuf>,
        /// Search the Mordell twist ell*y^2 = x^3 - 1 instead
        #[arg(long)]
        twist: Option<String>,
        /// Height bound: candidates x = u/v with |u|, v <= H
        #[arg(long, default_value_t = 30)]
        height: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the p-adic Newton polygon of a polynomial
    InspectPolygon {
        /// Input JSON: {"polynomial":["c0","c1",...],"prime":"p"}
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = Cli::parse();
    std::process::exit(run(cli.command));
}

fn run(command: Command) -> i32 {
    match command {
        Command::Construct {
            input,
            output,
            effort,
        } => construct_cmd(&input, output.as_deref(), &effort),
        Command::Glue {
            input,
            output,
            effort,
        } => glue_cmd(&input, output.as_deref(), &effort),
        Command::Singleton {
            input,
            output,
            effort,
        } => singleton_cmd(&input, output.as_deref(), &effort),
        Command::Verify { input } => verify_cmd(&input),
        Command::Search {
            input,
            twist,
            height,
            output,
        } => search_cmd(
            input.as_deref(),
            twist.as_deref(),
            height,
            output.as_deref(),
        ),
        Command::InspectPolygon { input, output } => inspect_polygon_cmd(&input, output.as_deref()),
    }
}

fn core_exit(e: &CoreError) -> i32 {
    match e {
        CoreError::EffortExhausted { .. } => EXIT_EFFORT,
        _ => EXIT_INPUT,
    }
}

fn fail_input(msg: impl std::fmt::Display) -> i32 {
    log::error!("{msg}");
    EXIT_INPUT
}

// ---------------------------------------------------------------------------
// input documents
// ---------------------------------------------------------------------------

#[derive(serde::Deserialize)]
struct InputDoc {
    space: String,
    #[serde(default)]
    n: Option<u64>,
    points: Vec<Vec<String>>,
}

enum PointSet {
    Affine(Vec<(BigRational, BigRational)>),
    Projective(Vec<ProjectivePoint>),
}

fn read_to_string(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn parse_input(path: &Path) -> Result<PointSet, String> {
    let text = read_to_string(path)?;
    let doc: InputDoc = serde_json::from_str(&text)
        .map_err(|e| format!("{}: malformed input document: {e}", path.display()))?;
    if doc.points.is_empty() {
        return Err(format!("{}: empty point list", path.display()));
    }
    match doc.space.as_str() {
        "A2" => {
            let mut points = Vec::with_capacity(doc.points.len());
            for (i, coords) in doc.points.iter().enumerate() {
                if coords.len() != 2 {
                    return Err(format!(
                        "point {i}: affine plane points take exactly 2 coordinates, got {}",
                        coords.len()
                    ));
                }
                let a = arith::parse_rational(&coords[0]).map_err(|e| format!("point {i}: {e}"))?;
                let b = arith::parse_rational(&coords[1]).map_err(|e| format!("point {i}: {e}"))?;
                points.push((a, b));
            }
            Ok(PointSet::Affine(points))
        }
        "Pn" => {
            let n = doc.n.ok_or("projective input needs the field \"n\"")? as usize;
            if n < 1 {
                return Err("projective dimension n must be at least 1".into());
            }
            let mut points = Vec::with_capacity(doc.points.len());
            for (i, coords) in doc.points.iter().enumerate() {
                if coords.len() != n + 1 {
                    return Err(format!(
                        "point {i}: P^{n} points take {} homogeneous coordinates, got {}",
                        n + 1,
                        coords.len()
                    ));
                }
                let raw: Vec<BigRational> = coords
                    .iter()
                    .map(|s| arith::parse_rational(s))
                    .collect::<Result<_, _>>()
                    .map_err(|e| format!("point {i}: {e}"))?;
                let p = ProjectivePoint::new(&raw).map_err(|e| format!("point {i}: {e}"))?;
                points.push(p);
            }
            Ok(PointSet::Projective(points))
        }
        other => Err(format!(
            "unknown space {other:?}, expected \"A2\" or \"Pn\""
        )),
    }
}

fn write_output(output: Option<&Path>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

fn construct_cmd(input: &Path, output: Option<&Path>, effort: &EffortArgs) -> i32 {
    let config = effort.to_config();
    let points = match parse_input(input) {
        Ok(PointSet::Affine(points)) => points,
        Ok(PointSet::Projective(_)) => {
            return fail_input("construct expects affine plane input (space A2); use glue for Pn")
        }
        Err(e) => return fail_input(e),
    };
    let set = match AcceptableSet::validate(&points) {
        Ok(set) => set,
        Err(e) => return fail_input(e),
    };
    let certificate = if set.r() == 1 {
        log::info!("single prescribed point: routing through the fixed-curve path");
        let (a, b) = (&set.points()[0].0, &set.points()[0].1);
        let affine = [
            BigRational::from_integer(a.clone()),
            BigRational::from_integer(b.clone()),
        ];
        let point = match ProjectivePoint::from_affine(&affine) {
            Ok(p) => p,
            Err(e) => return fail_input(e),
        };
        match singleton_certificate(&point, &config) {
            Ok(cert) => Certificate::Singleton(cert),
            Err(e) => {
                log::error!("{e}");
                return core_exit(&e);
            }
        }
    } else {
        match construct_curve(&set, &ForbiddenRoots::empty(), &config) {
            Ok(cert) => Certificate::Construction(cert),
            Err(e) => {
                log::error!("{e}");
                return core_exit(&e);
            }
        }
    };
    match write_output(output, &certificate.to_json()) {
        Ok(()) => {
            log::info!("certificate written");
            EXIT_OK
        }
        Err(e) => fail_input(e),
    }
}

fn glue_cmd(input: &Path, output: Option<&Path>, effort: &EffortArgs) -> i32 {
    let config = effort.to_config();
    let points = match parse_input(input) {
        Ok(PointSet::Projective(points)) => points,
        Ok(PointSet::Affine(_)) => {
            return fail_input("glue expects projective input (space Pn); use construct for A2")
        }
        Err(e) => return fail_input(e),
    };
    let certificate = match glue(&points, &config) {
        Ok(cert) => Certificate::System(cert),
        Err(CoreError::SingletonCase) => {
            log::info!("single prescribed point: routing through the fixed-curve path");
            match singleton_certificate(&points[0], &config) {
                Ok(cert) => Certificate::Singleton(cert),
                Err(e) => {
                    log::error!("{e}");
                    return core_exit(&e);
                }
            }
        }
        Err(e) => {
            log::error!("{e}");
            return core_exit(&e);
        }
    };
    match write_output(output, &certificate.to_json()) {
        Ok(()) => {
            log::info!("system certificate written");
            EXIT_OK
        }
        Err(e) => fail_input(e),
    }
}

fn singleton_cmd(input: &Path, output: Option<&Path>, effort: &EffortArgs) -> i32 {
    let config = effort.to_config();
    let point = match parse_input(input) {
        Ok(PointSet::Affine(points)) => {
            let mut deduped = points.clone();
            deduped.dedup();
            if deduped.len() != 1 {
                return fail_input("singleton expects exactly one point");
            }
            match ProjectivePoint::from_affine(&[deduped[0].0.clone(), deduped[0].1.clone()]) {
                Ok(p) => p,
                Err(e) => return fail_input(e),
            }
        }
        Ok(PointSet::Projective(points)) => {
            let mut deduped: Vec<ProjectivePoint> = Vec::new();
            for p in points {
                if !deduped.contains(&p) {
                    deduped.push(p);
                }
            }
            if deduped.len() != 1 {
                return fail_input("singleton expects exactly one point");
            }
            deduped.into_iter().next().unwrap()
        }
        Err(e) => return fail_input(e),
    };
    match singleton_certificate(&point, &config) {
        Ok(cert) => match write_output(output, &Certificate::Singleton(cert).to_json()) {
            Ok(()) => EXIT_OK,
            Err(e) => fail_input(e),
        },
        Err(e) => {
            log::error!("{e}");
            core_exit(&e)
        }
    }
}

fn verify_cmd(input: &Path) -> i32 {
    let text = match read_to_string(input) {
        Ok(t) => t,
        Err(e) => return fail_input(e),
    };
    let certificate = match Certificate::from_json(&text) {
        Ok(c) => c,
        Err(e) => return fail_input(e),
    };
    match verify(&certificate) {
        Ok(()) => {
            println!("{}", serde_json::json!({"verified": true}));
            log::info!("certificate verified: all checks re-derived and matched");
            EXIT_OK
        }
        Err(failure) => {
            println!(
                "{}",
                serde_json::json!({
                    "verified": false,
                    "failed_check": failure.check,
                    "detail": failure.detail,
                })
            );
            log::error!(
                "verification failed at check {:?}: {}",
                failure.check,
                failure.detail
            );
            EXIT_MISMATCH
        }
    }
}

fn report_exit(report: &SearchReport) -> i32 {
    match report.verdict {
        Some(SearchVerdict::ExactMatch) | None => EXIT_OK,
        _ => EXIT_MISMATCH,
    }
}

fn emit_report(report: &SearchReport, output: Option<&Path>) -> i32 {
    let mut text = serde_json::to_string_pretty(report).expect("report serializes");
    text.push('\n');
    match write_output(output, &text) {
        Ok(()) => report_exit(report),
        Err(e) => fail_input(e),
    }
}

fn search_cmd(
    input: Option<&Path>,
    twist: Option<&str>,
    height: u64,
    output: Option<&Path>,
) -> i32 {
    if let Some(ell_text) = twist {
        let ell = match arith::parse_integer(ell_text) {
            Ok(v) => v,
            Err(e) => return fail_input(e),
        };
        let report = search_twist(&ell, height);
        return emit_report(&report, output);
    }
    let Some(input) = input else {
        return fail_input("search needs --input CERT or --twist ELL");
    };
    let text = match read_to_string(input) {
        Ok(t) => t,
        Err(e) => return fail_input(e),
    };
    let certificate = match Certificate::from_json(&text) {
        Ok(c) => c,
        Err(e) => return fail_input(e),
    };
    match certificate {
        Certificate::Construction(cert) => {
            let parsed = match cert.parse() {
                Ok(p) => p,
                Err(e) => return fail_input(e),
            };
            let expected: Vec<(BigRational, BigRational)> = parsed
                .set
                .points()
                .iter()
                .map(|(a, b)| {
                    (
                        BigRational::from_integer(a.clone()),
                        BigRational::from_integer(b.clone()),
                    )
                })
                .collect();
            let d = parsed.params.d as u32;
            let mut report = search_superelliptic(&parsed.f, d, height, Some(&expected));
            report.notes.push(
                "no rational points at infinity: the certificate records v_ell(lc f) = 2".into(),
            );
            emit_report(&report, output)
        }
        Certificate::System(cert) => match search_glued(&cert, height) {
            Ok(report) => emit_report(&report, output),
            Err(e) => fail_input(e),
        },
        Certificate::Singleton(cert) => {
            let d: u32 = match arith::parse_integer(&cert.model.exponent)
                .ok()
                .and_then(|v| u32::try_from(v).ok())
            {
                Some(d) => d,
                None => return fail_input("bad exponent in singleton certificate"),
            };
            let mut report = search_superelliptic(&cert.model.polynomial, d, height, Some(&[]));
            report.notes.push(
                "the model's unique rational point lies at infinity and maps to the prescribed point"
                    .into(),
            );
            emit_report(&report, output)
        }
    }
}

#[derive(serde::Deserialize)]
struct PolygonDoc {
    polynomial: Vec<String>,
    prime: String,
}

fn inspect_polygon_cmd(input: &Path, output: Option<&Path>) -> i32 {
    let text = match read_to_string(input) {
        Ok(t) => t,
        Err(e) => return fail_input(e),
    };
    let doc: PolygonDoc = match serde_json::from_str(&text) {
        Ok(d) => d,
        Err(e) => return fail_input(format!("malformed polygon input: {e}")),
    };
    let coeffs: Result<Vec<BigRational>, _> = doc
        .polynomial
        .iter()
        .map(|s| arith::parse_rational(s))
        .collect();
    let coeffs = match coeffs {
        Ok(c) => c,
        Err(e) => return fail_input(e),
    };
    let prime = match arith::parse_integer(&doc.prime) {
        Ok(p) => p,
        Err(e) => return fail_input(e),
    };
    let poly = Polynomial::new(coeffs);
    match newton::newton_polygon(&poly, &prime) {
        Ok(polygon) => {
            let out = serde_json::json!({
                "prime": prime.to_string(),
                "polynomial": poly,
                "vertices": polygon
                    .vertices()
                    .iter()
                    .map(|(i, v)| serde_json::json!([i, v]))
                    .collect::<Vec<_>>(),
                "segments": polygon.segments(),
            });
            let mut text = serde_json::to_string_pretty(&out).expect("serializes");
            text.push('\n');
            match write_output(output, &text) {
                Ok(()) => EXIT_OK,
                Err(e) => fail_input(e),
            }
        }
        Err(e) => fail_input(e),
    }
}
