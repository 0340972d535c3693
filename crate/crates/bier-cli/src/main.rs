//! JSON-in/JSON-out command line front end for the `bier` library.
//!
//! Every command reads complexes or weight vectors from `--input` files in
//! the library's JSON formats, prints one JSON report to stdout, and exits
//! 0 on success, 2 on domain/IO errors, 3 on budget errors. Rationals are
//! serialized as `p/q` strings so exactness survives the pipe.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use bier::polytopality::{self, Feasibility, HeightVector, SolveOptions};
use bier::{fan, geometry, sphere};
use bier::{Circuit, FaceSet, RationalVector, SimplicialComplex, VerifyFanOptions, WeightVector};

#[derive(Parser)]
#[command(
    name = "bier",
    version,
    about = "Bier spheres, canonical fans, exact volumes and polytopality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Path to a complex JSON file like `{"n": 3, "facets": [[1],[2],[3]]}`
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander dual of a complex
    Dual(InputArg),
    /// Bier sphere reports
    Bier {
        #[command(subcommand)]
        sub: BierCmd,
    },
    /// Canonical fan operations
    Fan {
        #[command(subcommand)]
        sub: FanCmd,
    },
    /// Normalized and Euclidean volume of Star(K)
    Volume(InputArg),
    /// Volume change of the bistellar move adding a minimal non-face
    DeltaVolume {
        #[command(flatten)]
        input: InputArg,
        /// The minimal non-face, e.g. --b 1,2
        #[arg(long)]
        b: String,
    },
    /// Exact membership of a rational point in Star(K)
    StarContains {
        #[command(flatten)]
        input: InputArg,
        /// Comma-separated rational coordinates, e.g. --point -2/3,1/3,1/3
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Van Kampen-Flores polytope operations
    Vkf {
        #[command(subcommand)]
        sub: VkfCmd,
    },
    /// Vertices of the hypersimplex Delta(n,r)
    Hypersimplex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// The threshold complex of a weight vector JSON: {"l":["3/10",...],"nu":"1/2"}
    Threshold(InputArg),
    /// Wall-crossing feasibility, witnesses and realizations
    Polytopality {
        #[command(subcommand)]
        sub: PolyCmd,
    },
}

#[derive(Subcommand)]
enum BierCmd {
    /// All facets (A1, A2; B)
    Facets(InputArg),
    /// The f-vector (f_0, ..., f_{n-2})
    Fvector(InputArg),
    /// All ridges with their Lambda/V/X classification
    Ridges(InputArg),
}

#[derive(Subcommand)]
enum FanCmd {
    /// Check that Fan(K) is a complete simplicial fan
    Verify {
        #[command(flatten)]
        input: InputArg,
        /// Seed for the sampled intersection-law check
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Permutation budget (the check sweeps n! permutations)
        #[arg(long, default_value_t = fan::MAX_VERIFY_GROUND)]
        max_n: usize,
    },
    /// Inequality description of the cone of a face
    Cone {
        #[command(flatten)]
        input: InputArg,
        /// K-side vertices, e.g. --a1 1 (omit for the empty set)
        #[arg(long, default_value = "")]
        a1: String,
        /// Dual-side vertices, e.g. --a2 3
        #[arg(long, default_value = "")]
        a2: String,
    },
    /// Primitive ray generators of a facet cone
    Rays {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value = "")]
        a1: String,
        #[arg(long, default_value = "")]
        a2: String,
    },
}

#[derive(Subcommand)]
enum VkfCmd {
    /// Face test for vertex sets {u_i}_I ∪ {-u_j}_J of Omega_n
    Face {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        i: String,
        #[arg(long, default_value = "")]
        j: String,
    },
    /// Minkowski functionals of Delta, Nabla and their intersection
    Minkowski {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Hypersimplex identification of the polar dual
    PolarIso {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Decide wall-crossing feasibility (witness or Farkas certificate)
    Solve {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 200_000)]
        max_pivots: usize,
    },
    /// Verify a height vector against the full ridge system
    Verify {
        #[command(flatten)]
        input: InputArg,
        /// Height JSON: {"1":"3/20","1bar":"3/20",...}
        #[arg(long)]
        witness: PathBuf,
    },
    /// Realize P_h and report the facet-cone/vertex correspondence
    Realize {
        #[command(flatten)]
        input: InputArg,
        /// Height JSON; when omitted, a witness is obtained from solve
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, default_value_t = 200_000)]
        max_pivots: usize,
    },
}

struct CliError {
    code: String,
    message: String,
    budget: bool,
}

impl From<bier::Error> for CliError {
    fn from(err: bier::Error) -> Self {
        CliError {
            code: err.code().to_string(),
            message: err.to_string(),
            budget: err.is_budget(),
        }
    }
}

type CliResult = Result<Value, CliError>;

fn io_error(path: &Path, err: impl std::fmt::Display) -> CliError {
    CliError {
        code: "IO".into(),
        message: format!("{}: {err}", path.display()),
        budget: false,
    }
}

fn parse_error(what: &str, err: impl std::fmt::Display) -> CliError {
    CliError {
        code: "PARSE".into(),
        message: format!("{what}: {err}"),
        budget: false,
    }
}

#[derive(serde::Deserialize)]
struct RawComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
}

#[derive(serde::Deserialize)]
struct RawWeights {
    l: Vec<String>,
    nu: String,
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let raw: RawComplex =
        serde_json::from_str(&text).map_err(|e| parse_error("complex JSON", e))?;
    let ground = bier::GroundSet::new(raw.n)?;
    let facets = raw
        .facets
        .iter()
        .map(|f| FaceSet::from_vertices(f.iter().copied()))
        .collect::<bier::Result<Vec<_>>>()?;
    Ok(SimplicialComplex::from_facets(ground, &facets)?)
}

fn load_weights(path: &Path) -> Result<WeightVector, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let raw: RawWeights =
        serde_json::from_str(&text).map_err(|e| parse_error("weights JSON", e))?;
    let l = raw
        .l
        .iter()
        .map(|s| bier::linalg::parse_rational(s))
        .collect::<bier::Result<Vec<_>>>()?;
    Ok(WeightVector::new(
        l,
        bier::linalg::parse_rational(&raw.nu)?,
    )?)
}

fn load_witness(path: &Path) -> Result<HeightVector, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    let map: BTreeMap<String, String> =
        serde_json::from_str(&text).map_err(|e| parse_error("witness JSON", e))?;
    Ok(HeightVector::from_label_map(&map)?)
}

fn parse_vertex_set(text: &str) -> Result<FaceSet, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(FaceSet::EMPTY);
    }
    let vertices = trimmed
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| parse_error("vertex list", e))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FaceSet::from_vertices(vertices)?)
}

fn parse_point(text: &str) -> Result<RationalVector, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    Ok(RationalVector::parse(&parts)?)
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize")
}

fn feasibility_report(outcome: &Feasibility, system: &[polytopality::WallInequality]) -> Value {
    match outcome {
        Feasibility::Feasible { witness } => {
            json!({"status": "feasible", "witness": to_value(witness)})
        }
        Feasibility::Infeasible { certificate } => {
            let cert: Vec<Value> = certificate
                .iter()
                .map(|(idx, mult)| json!([system[*idx].id(), mult.to_string()]))
                .collect();
            json!({"status": "infeasible", "certificate": cert})
        }
    }
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Dual(input) => {
            let k = load_complex(&input.input)?;
            Ok(to_value(&k.alexander_dual()))
        }
        Command::Bier { sub } => match sub {
            BierCmd::Facets(input) => {
                let k = load_complex(&input.input)?;
                let facets = sphere::facets(&k);
                Ok(json!({"count": facets.len(), "facets": to_value(&facets)}))
            }
            BierCmd::Fvector(input) => {
                let k = load_complex(&input.input)?;
                Ok(json!({"f_vector": sphere::f_vector(&k)?}))
            }
            BierCmd::Ridges(input) => {
                let k = load_complex(&input.input)?;
                let ridges = sphere::ridges(&k)?;
                Ok(json!({"count": ridges.len(), "ridges": to_value(&ridges)}))
            }
        },
        Command::Fan { sub } => match sub {
            FanCmd::Verify { input, seed, max_n } => {
                let k = load_complex(&input.input)?;
                let opts = VerifyFanOptions {
                    seed,
                    max_n,
                    ..VerifyFanOptions::default()
                };
                Ok(to_value(&fan::verify_fan(&k, &opts)?))
            }
            FanCmd::Cone { input, a1, a2 } => {
                let k = load_complex(&input.input)?;
                let face =
                    bier::BierFace::face_of(&k, parse_vertex_set(&a1)?, parse_vertex_set(&a2)?)?;
                Ok(to_value(&fan::cone_of_face(&face).descriptor()))
            }
            FanCmd::Rays { input, a1, a2 } => {
                let k = load_complex(&input.input)?;
                let face =
                    bier::BierFace::face_of(&k, parse_vertex_set(&a1)?, parse_vertex_set(&a2)?)?;
                let circuit = Circuit::delta(k.n())?;
                let rays: Vec<Vec<i64>> = fan::facet_rays(&face, &circuit)?
                    .into_iter()
                    .map(|ray| {
                        ray.into_iter()
                            .map(|c| i64::try_from(&c).expect("delta rays are small integers"))
                            .collect()
                    })
                    .collect();
                Ok(json!({"rays": rays}))
            }
        },
        Command::Volume(input) => {
            let k = load_complex(&input.input)?;
            let normalized = geometry::normalized_volume(&k);
            let v0 = geometry::vol0(k.n())?;
            let euclid = geometry::euclidean_volume(&k)?;
            Ok(json!({
                "normalized": normalized,
                "vol0_sq": v0.squared().to_string(),
                "euclid_sq": euclid.squared().to_string(),
            }))
        }
        Command::DeltaVolume { input, b } => {
            let k = load_complex(&input.input)?;
            let b = parse_vertex_set(&b)?;
            let delta = geometry::volume_delta(&k, b)?;
            Ok(json!({"b": to_value(&b), "delta": delta}))
        }
        Command::StarContains { input, point } => {
            let k = load_complex(&input.input)?;
            let x = parse_point(&point)?;
            let contains = geometry::star_contains(&k, &x)?;
            Ok(json!({"point": to_value(&x), "contains": contains}))
        }
        Command::Vkf { sub } => match sub {
            VkfCmd::Face { n, i, j } => {
                let i = parse_vertex_set(&i)?;
                let j = parse_vertex_set(&j)?;
                let face = geometry::vkf_is_face(n, i, j)?;
                Ok(json!({"n": n, "i": to_value(&i), "j": to_value(&j), "face": face}))
            }
            VkfCmd::Minkowski { n, point } => {
                let circuit = Circuit::delta(n)?;
                let x = parse_point(&point)?;
                Ok(to_value(&geometry::minkowski(&circuit, &x)?))
            }
            VkfCmd::PolarIso { n } => Ok(to_value(&geometry::polar_iso_check(n)?)),
        },
        Command::Hypersimplex { n, r } => {
            let vertices = geometry::hypersimplex_vertices(n, r)?;
            Ok(json!({"n": n, "r": r, "count": vertices.len(), "vertices": vertices}))
        }
        Command::Threshold(input) => {
            let w = load_weights(&input.input)?;
            Ok(to_value(&w.threshold_complex()?))
        }
        Command::Polytopality { sub } => match sub {
            PolyCmd::Solve { input, max_pivots } => {
                let k = load_complex(&input.input)?;
                let opts = SolveOptions {
                    max_pivots,
                    ..SolveOptions::default()
                };
                let outcome = polytopality::solve(&k, &opts)?;
                let system = polytopality::ridge_system(&k)?;
                Ok(feasibility_report(&outcome, &system))
            }
            PolyCmd::Verify { input, witness } => {
                let k = load_complex(&input.input)?;
                let f = load_witness(&witness)?;
                Ok(json!({"valid": polytopality::verify_witness(&k, &f)?}))
            }
            PolyCmd::Realize {
                input,
                witness,
                max_pivots,
            } => {
                let k = load_complex(&input.input)?;
                let f = match witness {
                    Some(path) => load_witness(&path)?,
                    None => {
                        let opts = SolveOptions {
                            max_pivots,
                            ..SolveOptions::default()
                        };
                        match polytopality::solve(&k, &opts)? {
                            Feasibility::Feasible { witness } => witness,
                            Feasibility::Infeasible { .. } => {
                                return Err(bier::Error::WitnessInvalid.into());
                            }
                        }
                    }
                };
                let realization = polytopality::realize_polytope(&k, &f)?;
                Ok(json!({
                    "count": realization.vertices.len(),
                    "vertices": to_value(&realization.vertices),
                }))
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("valid JSON")
            );
            ExitCode::SUCCESS
        }
        Err(err) => {
            let object = json!({"error": {"code": err.code, "message": err.message}});
            println!(
                "{}",
                serde_json::to_string_pretty(&object).expect("valid JSON")
            );
            ExitCode::from(if err.budget { 3 } else { 2 })
        }
    }
}
