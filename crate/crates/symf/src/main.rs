//! Command-line front end: a small expression language over symmetric
//! functions, one subcommand per library capability, and a `verify` family
//! of self-checks.
//!
//! Exit codes: 0 success/verified, 1 verification failure, 2 expression
//! parse error, 3 invalid arguments or domain errors, 4 cap exceeded.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use symf::error::Error;
use symf::expr;
use symf::lambda;
use symf::partition::{partitions_of, Partition};
use symf::repsn::{self, ClassFunction};
use symf::schur_weyl::{self, CommutantReport, TensorOperator};
use symf::symfunc::{Basis, SymFunc};
use symf::transforms::convert;
use symf::truncate;

#[derive(Parser)]
#[command(
    name = "symf",
    version,
    about = "Exact symmetric-function algebra",
    disable_help_subcommand = true
)]
struct Cli {
    /// Override the global degree cap (default 20; env SYMF_DEGREE_CAP)
    #[arg(long, global = true, value_name = "DEGREE")]
    cap: Option<usize>,

    /// Emit canonical JSON instead of human-readable text
    #[arg(long, global = true)]
    json: bool,

    /// Include extra detail (e.g. a commutant basis) in output
    #[arg(long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BasisArg {
    /// Output basis: one of m, e, h, p, s
    #[arg(long, value_name = "LETTER")]
    basis: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print it in the chosen basis (default m)
    Eval {
        expr: String,
        #[command(flatten)]
        basis: BasisArg,
    },
    /// Evaluate an expression and convert it to the required basis
    Convert {
        expr: String,
        /// Output basis: one of m, e, h, p, s
        #[arg(long, value_name = "LETTER")]
        basis: String,
    },
    /// Expand an expression into N variables
    Expand {
        expr: String,
        #[arg(short = 'N', long = "nvars")]
        nvars: usize,
    },
    /// Expand into N variables, then set variables beyond the first n to zero
    Truncate {
        expr: String,
        #[arg(short = 'N', long = "nvars")]
        nvars: usize,
        /// Number of variables kept (must be < N)
        #[arg(short = 'n', long = "degree")]
        degree: usize,
    },
    /// Collect a symmetric polynomial (PolyN JSON) back into the m-basis
    Collect {
        /// PolyN as JSON, e.g. {"nvars":2,"terms":[{"exps":[1,1],"coeff":"1"}]}
        input: String,
        #[command(flatten)]
        basis: BasisArg,
    },
    /// Print the character table of the symmetric group S_n
    Chartable {
        #[arg(short = 'n', long = "degree")]
        degree: usize,
    },
    /// Frobenius characteristic of the irreducible character for a partition
    Ch {
        /// Partition, e.g. "[2,1]" or "2,1"
        partition: String,
        #[command(flatten)]
        basis: BasisArg,
    },
    /// Decompose a homogeneous expression into irreducible characters
    Decompose { expr: String },
    /// Apply the omega involution to an expression
    Omega {
        expr: String,
        #[command(flatten)]
        basis: BasisArg,
    },
    /// Run a self-check; exit 0 if verified, 1 otherwise
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Commutant of the diagonal matrix action on (k^N)^(tensor n)
    SchurWeyl {
        #[arg(short = 'N', long = "nvars")]
        nvars: usize,
        #[arg(short = 'n', long = "degree")]
        degree: usize,
        /// Override the tensor-space size cap N^n <= 256
        #[arg(long, value_name = "SIZE")]
        size_cap: Option<usize>,
    },
    /// Injectivity of expansion on Schur images up to the given degree
    Splitting {
        #[arg(short = 'n', long = "degree")]
        degree: usize,
        #[arg(short = 'N', long = "nvars")]
        nvars: Option<usize>,
    },
    /// Lambda-operation laws: sum rule, e_n identity, degree-2 split
    LambdaAxioms,
    /// Frobenius characteristic against the Jacobi-Trudi route
    Frobenius,
    /// Omega is an involution intertwining the sign twist
    OmegaDuality,
}

fn parse_basis(text: &str) -> Result<Basis, Error> {
    let mut chars = text.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Basis::from_letter(c)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown basis {text:?}"))),
        _ => Err(Error::InvalidArgument(format!("unknown basis {text:?}"))),
    }
}

fn parse_partition(text: &str) -> Result<Partition, Error> {
    let inner = text
        .trim()
        .trim_start_matches('[')
        .trim_end_matches(']')
        .trim();
    let mut parts: Vec<i64> = Vec::new();
    if !inner.is_empty() {
        for piece in inner.split(',') {
            parts.push(
                piece
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad partition {text:?}")))?,
            );
        }
    }
    Partition::new(parts)
}

fn eval_expr(text: &str) -> Result<SymFunc, Error> {
    expr::eval(&expr::parse_expr(text)?)
}

fn print_symfunc(f: &SymFunc, json: bool) -> Result<(), Error> {
    if json {
        println!("{}", serde_json::to_string(f).expect("serializable"));
    } else {
        println!("{f}");
    }
    Ok(())
}

#[derive(Serialize)]
struct CharTableRow {
    partition: Partition,
    character: ClassFunction,
}

#[derive(Serialize)]
struct VerboseCommutant<'a> {
    #[serde(flatten)]
    report: &'a CommutantReport,
    basis: &'a [TensorOperator],
}

fn rational_str(q: &symf::Rational) -> String {
    if q.denom() == &symf::Integer::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Eval { expr: text, basis } => {
            let target = match basis.basis {
                Some(b) => parse_basis(&b)?,
                None => Basis::M,
            };
            let f = convert(&eval_expr(&text)?, target)?;
            print_symfunc(&f, cli.json)?;
            Ok(true)
        }
        Command::Convert { expr: text, basis } => {
            let f = convert(&eval_expr(&text)?, parse_basis(&basis)?)?;
            print_symfunc(&f, cli.json)?;
            Ok(true)
        }
        Command::Expand { expr: text, nvars } => {
            let p = truncate::expand(&eval_expr(&text)?, nvars)?;
            if cli.json {
                println!("{}", serde_json::to_string(&p).expect("serializable"));
            } else {
                println!("{p}");
            }
            Ok(true)
        }
        Command::Truncate {
            expr: text,
            nvars,
            degree,
        } => {
            let p = truncate::expand(&eval_expr(&text)?, nvars)?.truncate_var(degree)?;
            if cli.json {
                println!("{}", serde_json::to_string(&p).expect("serializable"));
            } else {
                println!("{p}");
            }
            Ok(true)
        }
        Command::Collect { input, basis } => {
            let p: truncate::PolyN = serde_json::from_str(&input)
                .map_err(|e| Error::InvalidArgument(format!("bad PolyN JSON: {e}")))?;
            let mut f = truncate::collect(&p)?;
            if let Some(b) = basis.basis {
                f = convert(&f, parse_basis(&b)?)?;
            }
            print_symfunc(&f, cli.json)?;
            Ok(true)
        }
        Command::Chartable { degree } => {
            let lambdas = partitions_of(degree, None)?;
            let rows: Vec<CharTableRow> = lambdas
                .iter()
                .map(|lam| {
                    Ok(CharTableRow {
                        partition: lam.clone(),
                        character: repsn::irreducible_character(lam)?,
                    })
                })
                .collect::<Result<_, Error>>()?;
            if cli.json {
                println!("{}", serde_json::to_string(&rows).expect("serializable"));
            } else {
                let classes: Vec<String> = lambdas.iter().map(|l| l.to_string()).collect();
                println!("classes: {}", classes.join(" "));
                for row in &rows {
                    let values: Vec<String> = lambdas
                        .iter()
                        .map(|mu| rational_str(&row.character.value(mu)))
                        .collect();
                    println!("chi{}: {}", row.partition, values.join(" "));
                }
            }
            Ok(true)
        }
        Command::Ch { partition, basis } => {
            let lam = parse_partition(&partition)?;
            let chi = repsn::irreducible_character(&lam)?;
            let target = match basis.basis {
                Some(b) => parse_basis(&b)?,
                None => Basis::S,
            };
            let f = convert(&repsn::frobenius(&chi), target)?;
            print_symfunc(&f, cli.json)?;
            Ok(true)
        }
        Command::Decompose { expr: text } => {
            let f = eval_expr(&text)?;
            let chi = repsn::inverse_frobenius(&f)?;
            let rep = repsn::decompose(&chi)?;
            if cli.json {
                println!("{}", serde_json::to_string(&rep).expect("serializable"));
            } else if rep.is_zero() {
                println!("0");
            } else {
                let terms: Vec<String> = rep
                    .terms()
                    .map(|(lam, mult)| format!("{mult}*chi{lam}"))
                    .collect();
                println!("{}", terms.join(" + "));
            }
            Ok(true)
        }
        Command::Omega { expr: text, basis } => {
            let target = match basis.basis {
                Some(b) => parse_basis(&b)?,
                None => Basis::M,
            };
            let f = convert(&lambda::omega(&eval_expr(&text)?), target)?;
            print_symfunc(&f, cli.json)?;
            Ok(true)
        }
        Command::Verify { check } => verify(check, cli.json, cli.verbose),
    }
}

fn verify(check: VerifyCommand, json: bool, verbose: bool) -> Result<bool, Error> {
    match check {
        VerifyCommand::SchurWeyl {
            nvars,
            degree,
            size_cap,
        } => {
            let cap = size_cap.unwrap_or(schur_weyl::DEFAULT_SIZE_CAP);
            let report = schur_weyl::commutant_with_cap(nvars, degree, cap)?;
            let predicted = schur_weyl::predicted_commutant_dimension(nvars, degree);
            let expected_iso = nvars >= degree;
            let verified = report.dimension == predicted && report.is_isomorphism == expected_iso;
            if json {
                if verbose {
                    let v = VerboseCommutant {
                        report: &report,
                        basis: &report.basis,
                    };
                    println!("{}", serde_json::to_string(&v).expect("serializable"));
                } else {
                    println!("{}", serde_json::to_string(&report).expect("serializable"));
                }
            } else {
                println!("N = {}, n = {}", report.nvars, report.degree);
                println!("dimension = {}", report.dimension);
                println!(
                    "permutation_image_dimension = {}",
                    report.permutation_image_dimension
                );
                println!("is_isomorphism = {}", report.is_isomorphism);
                if verified {
                    println!(
                        "verified: dimension matches character-theory prediction ({predicted})"
                    );
                } else {
                    println!("FAILED: predicted dimension {predicted}, expected isomorphism {expected_iso}");
                }
                if verbose {
                    for (i, op) in report.basis.iter().enumerate() {
                        println!(
                            "basis[{i}] = {}",
                            serde_json::to_string(op).expect("serializable")
                        );
                    }
                }
            }
            Ok(verified)
        }
        VerifyCommand::Splitting { degree, nvars } => {
            let report = truncate::splitting_injectivity_report(degree, nvars)?;
            if json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                println!("degree = {}, nvars = {}", report.degree, report.nvars);
                for (lam, mu) in &report.collisions {
                    match mu {
                        Some(mu) => println!("collision: s{lam} = s{mu}"),
                        None => println!("collision: s{lam} = 0"),
                    }
                }
                for lam in &report.vanishing_failures {
                    println!("vanishing failure: s{lam}");
                }
                println!("{}", if report.pass { "verified" } else { "FAILED" });
            }
            Ok(report.pass)
        }
        VerifyCommand::LambdaAxioms => {
            let mut pass = true;
            let mut check = |label: &str, ok: bool| {
                pass &= ok;
                if !json {
                    println!("{label}: {}", if ok { "ok" } else { "FAILED" });
                }
            };
            // lambda(n, h1) = e_n
            let h1 = eval_expr("h[1]")?;
            let mut en_ok = true;
            for n in 1..=8usize {
                let lhs = lambda::lambda_power(n, &h1)?;
                let rhs = eval_expr(&format!("e[{n}]"))?;
                en_ok &= lhs.equals(&rhs);
            }
            check("lambda(n, h[1]) = e[n] for n <= 8", en_ok);
            // degree-2 split: sigma^2 + lambda^2 = square
            let split = lambda::sigma_power(2, &h1)?
                .add(&lambda::lambda_power(2, &h1)?)?
                .equals(&h1.pow(2)?);
            check("sigma^2(h[1]) + lambda^2(h[1]) = h[1]^2", split);
            // sum rule on sample inputs
            let samples = [
                eval_expr("h[1]")?,
                eval_expr("e[2]")?,
                eval_expr("p[2] + h[1]")?,
            ];
            let mut sum_ok = true;
            for f in &samples {
                for g in &samples {
                    for k in 0..=4usize {
                        let lhs = lambda::lambda_power(k, &f.add(g)?)?;
                        let mut rhs = SymFunc::zero(Basis::P);
                        for i in 0..=k {
                            rhs = rhs.add(
                                &lambda::lambda_power(i, f)?
                                    .multiply(&lambda::lambda_power(k - i, g)?)?,
                            )?;
                        }
                        sum_ok &= lhs.equals(&rhs);
                    }
                }
            }
            check(
                "lambda^k(f+g) = sum lambda^i(f) lambda^j(g), k <= 4",
                sum_ok,
            );
            if json {
                println!("{{\"pass\":{pass}}}");
            } else {
                println!("{}", if pass { "verified" } else { "FAILED" });
            }
            Ok(pass)
        }
        VerifyCommand::Frobenius => {
            let mut pass = true;
            for n in 1..=5usize {
                for lam in partitions_of(n, None)? {
                    let chi = repsn::irreducible_character(&lam)?;
                    let lhs = convert(&repsn::frobenius(&chi), Basis::S)?;
                    let rhs = SymFunc::generator(Basis::S, lam.clone());
                    if !lhs.equals(&rhs) {
                        pass = false;
                        if !json {
                            println!("FAILED: ch(chi{lam}) != s{lam}");
                        }
                    }
                }
            }
            for n in 1..=6usize {
                let triv = convert(&repsn::frobenius(&repsn::trivial_character(n)?), Basis::H)?;
                let sgn = convert(&repsn::frobenius(&repsn::sign_character(n)?), Basis::E)?;
                let hn = SymFunc::generator(Basis::H, Partition::new([n as i64])?);
                let en = SymFunc::generator(Basis::E, Partition::new([n as i64])?);
                if !triv.equals(&hn) || !sgn.equals(&en) {
                    pass = false;
                    if !json {
                        println!("FAILED: trivial/sign characteristic at n = {n}");
                    }
                }
            }
            if json {
                println!("{{\"pass\":{pass}}}");
            } else {
                println!("{}", if pass { "verified" } else { "FAILED" });
            }
            Ok(pass)
        }
        VerifyCommand::OmegaDuality => {
            let mut pass = true;
            for d in 1..=5usize {
                for lam in partitions_of(d, None)? {
                    for basis in Basis::ALL {
                        let f = SymFunc::generator(basis, lam.clone());
                        if !lambda::omega(&lambda::omega(&f)).equals(&f) {
                            pass = false;
                        }
                    }
                    let e = SymFunc::generator(Basis::E, lam.clone());
                    let h = SymFunc::generator(Basis::H, lam.clone());
                    let s = SymFunc::generator(Basis::S, lam.clone());
                    let sconj = SymFunc::generator(Basis::S, lam.conjugate());
                    pass &= lambda::omega(&e).equals(&h);
                    pass &= lambda::omega(&s).equals(&sconj);
                    // ch(sign-twisted chi) = omega(ch(chi))
                    let chi = repsn::irreducible_character(&lam)?;
                    let lhs = repsn::frobenius(&chi.sign_twist());
                    let rhs = lambda::omega(&repsn::frobenius(&chi));
                    pass &= lhs.equals(&rhs);
                }
            }
            if json {
                println!("{{\"pass\":{pass}}}");
            } else {
                println!("{}", if pass { "verified" } else { "FAILED" });
            }
            Ok(pass)
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::SyntaxError { .. } => 2,
        Error::DegreeCapExceeded { .. } | Error::SizeCapExceeded { .. } => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    if let Ok(text) = std::env::var("SYMF_DEGREE_CAP") {
        match text.parse::<usize>() {
            Ok(cap) => symf::set_degree_cap(cap),
            Err(_) => {
                eprintln!("error: SYMF_DEGREE_CAP must be a nonnegative integer");
                return ExitCode::from(3);
            }
        }
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(cap) = cli.cap {
        symf::set_degree_cap(cap);
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
