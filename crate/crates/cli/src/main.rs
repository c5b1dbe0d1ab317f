use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gradedcone_core::deformation::{hom_graded_dim, ConeDeformations, DeformationProblem};
use gradedcone_core::formats::{build_rc2q, veronese_ambient};
use gradedcone_core::syzygy::{syzygy_module, DEFAULT_MAX_DEGREE};
use gradedcone_core::{parse_polynomial, Polynomial};
use gradedcone_cli::{load_ideal, load_parameters, run_many, CliError, DChoice, Options, SCENARIOS};

#[derive(Parser)]
#[command(name = "gradedcone", version, about = "Exact computations on the graded cone ring and its deformations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification scenarios (`all` runs every one).
    Verify {
        #[arg(required = true)]
        scenarios: Vec<String>,
        /// `zero`, `sample`, or a file holding a degree-7 polynomial.
        #[arg(long, default_value = "zero")]
        d_poly: String,
        #[arg(long)]
        max_degree: Option<u32>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Machine-readable output.
        #[arg(long, conflicts_with = "pretty")]
        json: bool,
        #[arg(long)]
        pretty: bool,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List the scenarios.
    List,
    /// Reduced Gröbner basis of an ideal file.
    Gb { file: PathBuf },
    /// Hilbert function of the quotient up to a degree.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        max_degree: u32,
    },
    /// Minimal relations among the generators.
    Syzygies {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// Dimension of the degree `-k` first-order deformations.
    T1 {
        file: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Second-order lifting of the reduced direction at a parameter point.
    Lift2 {
        file: PathBuf,
        #[arg(long)]
        params: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

/// Returns whether every comparison passed.
fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Verify { scenarios, d_poly, max_degree, seed, json, pretty: _, jobs } => {
            let names: Vec<String> = if scenarios.iter().any(|s| s == "all") {
                SCENARIOS.iter().map(|(n, _)| n.to_string()).collect()
            } else {
                scenarios
            };
            let opts = Options { d_poly: DChoice::parse(&d_poly), max_degree, seed };
            let reports = match jobs {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .install(|| run_many(&names, &opts))?,
                None => run_many(&names, &opts)?,
            };
            if json {
                let values: Vec<_> = reports.iter().map(|r| serde_json::to_value(r).expect("serializable")).collect();
                println!("{}", serde_json::to_string_pretty(&values).expect("serializable"));
            } else {
                for r in &reports {
                    print!("{}", r.to_pretty());
                }
            }
            Ok(reports.iter().all(|r| r.pass))
        }
        Command::List => {
            for (name, about) in SCENARIOS {
                println!("{name:<26} {about}");
            }
            Ok(true)
        }
        Command::Gb { file } => {
            let ideal = load_ideal(&file)?;
            for g in ideal.groebner_basis().elements() {
                println!("{g}");
            }
            Ok(true)
        }
        Command::Hilbert { file, max_degree } => {
            let ideal = load_ideal(&file)?;
            let values: Vec<String> = ideal.hilbert_function(max_degree).coeffs().iter().map(i64::to_string).collect();
            println!("{}", values.join(" "));
            Ok(true)
        }
        Command::Syzygies { file, max_degree } => {
            let ideal = load_ideal(&file)?;
            if ideal.generators().is_empty() {
                return Ok(true);
            }
            for s in syzygy_module(ideal.generators(), max_degree) {
                let entries: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
                println!("degree {}: ({})", s.degree(), entries.join(", "));
            }
            Ok(true)
        }
        Command::T1 { file, k } => {
            let ideal = load_ideal(&file)?;
            if ideal.generators().is_empty() {
                return Err(CliError::Input("t1 needs at least one generator".into()));
            }
            let syz = syzygy_module(ideal.generators(), DEFAULT_MAX_DEGREE);
            let problem = DeformationProblem::new(ideal.ring(), ideal.generators().to_vec(), syz)?;
            println!("{}", hom_graded_dim(&problem, k));
            Ok(true)
        }
        Command::Lift2 { file, params } => {
            let ideal = load_ideal(&file)?;
            let pt = load_parameters(&params)?;
            let d = recover_d(ideal.generators())?;
            let family = ConeDeformations::new(&d)?;
            let lift = family.lift_order2(&pt)?;
            let vanish = pt.quadrics_vanish();
            println!("point: {pt}");
            println!("D: {d}");
            println!("lifts to second order: {}", lift.feasible);
            println!("obstruction quadrics vanish: {vanish}");
            Ok(lift.feasible == vanish)
        }
    }
}

/// Reads `D` off `f7 = x2 D + z1 v - y z2^2` and checks that the file holds
/// exactly the cone generators for that `D`.
fn recover_d(gens: &[Polynomial]) -> Result<Polynomial, CliError> {
    let ring = veronese_ambient();
    let not_cone = || CliError::Input("the file does not hold the cone generators f1..f9".into());
    if gens.len() != 9 {
        return Err(not_cone());
    }
    let gens: Vec<Polynomial> = gens.iter().map(|g| g.embed(&ring)).collect::<Result<_, _>>().map_err(|_| not_cone())?;
    let lit = |s: &str| parse_polynomial(&ring, s).expect("literal");
    let rest = &(&gens[6] - &lit("z1*v")) + &lit("y*z2^2");
    let x2 = lit("x2");
    let d = rest.div_monomial(x2.leading_monomial().expect("monomial")).ok_or_else(not_cone)?;
    if build_rc2q(&d)?.generators() != gens.as_slice() {
        return Err(not_cone());
    }
    Ok(d)
}
