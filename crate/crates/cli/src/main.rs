//! `cliffordforge`: verification suites and calculators for the exact
//! algebra engine.
//!
//! Exit status is 0 when every reported identity holds, 1 when one fails,
//! and 2 for usage or parse errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cliffordforge::cayley_dickson::{basis_table, find_associator_witness};
use cliffordforge::checkerboard::{
    check_lightcone_series, choice_coeff, eval_float, eval_series, path_count_oracle, series_psi, Psi,
};
use cliffordforge::dirac::{
    build_u, build_udag, describe_wave, fermion_relations, generator_relations, majorana_solutions, majorana_split,
    majorana_split_relations, verify_plane_wave, DiracAlgebra, DiracConfig, EnergyMomentum,
};
use cliffordforge::suites::{self, Scope, SuiteOptions};
use cliffordforge::text::{eval_clifford, parse_group_element, Base};
use cliffordforge::{from_matrix, to_matrix, Check, Error, GroupAlgebra, Matrix, Rational, VerificationReport};

#[derive(Parser)]
#[command(
    name = "cliffordforge",
    version,
    about = "Exact Clifford, iterant and Dirac algebra verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites.
    Verify {
        /// all, hat, group, matrix, cd, dirac, majorana or checkerboard.
        scope: String,
        #[arg(long, env = "CLIFFORDFORGE_SEED", default_value_t = 0)]
        seed: u64,
        /// Random samples per identity.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Momentum for the dirac, majorana and checkerboard suites (1 or 3 components).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        p: Option<Vec<Rational>>,
        /// Mass; the energy is the exact root of |p|^2 + m^2.
        #[arg(long, allow_negative_numbers = true)]
        m: Option<Rational>,
        /// Series truncation order for the checkerboard suite.
        #[arg(long, default_value_t = 32)]
        order: u32,
        /// Print elapsed time per suite.
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate an expression in a Clifford algebra, e.g. "[1,2]+[3,4]*h".
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = BaseArg::Auto)]
        base: BaseArg,
        /// Minimum number of generators.
        #[arg(long, default_value_t = 1)]
        generators: usize,
        /// Also print the matrix image.
        #[arg(long)]
        matrix: bool,
    },
    /// Matrix image of an element of (R^n)^[C_n], or the element of a matrix.
    Matrix {
        #[arg(long)]
        n: usize,
        /// Element such as "[1,2]+[3,4]*s", or with --from a matrix "[[1,3],[4,2]]".
        expr: String,
        /// Read a matrix and print its element.
        #[arg(long)]
        from: bool,
    },
    /// Nilpotent U, U† and the fermion relations for on-shell data.
    Dirac {
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        p: Vec<Rational>,
        #[arg(long, allow_negative_numbers = true)]
        m: Rational,
    },
    /// Majorana operators and real solutions for a three-dimensional momentum.
    Majorana {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        p: Vec<Rational>,
        #[arg(long, allow_negative_numbers = true)]
        m: Rational,
    },
    /// Light-cone series, choice coefficients and path counts.
    Checkerboard {
        #[arg(long, default_value_t = 32)]
        order: u32,
        /// Evaluate psi0, psi_R, psi_L at (r, l).
        #[arg(long, num_args = 2, value_names = ["R", "L"], allow_negative_numbers = true)]
        point: Option<Vec<Rational>>,
        /// Print C[delta]^x_k.
        #[arg(long, num_args = 3, value_names = ["X", "DELTA", "K"], allow_negative_numbers = true)]
        coeff: Option<Vec<Rational>>,
        /// Count paths in an R x L rectangle by number of corners.
        #[arg(long, num_args = 2, value_names = ["R", "L"])]
        paths: Option<Vec<u32>>,
    },
    /// Cayley-Dickson algebra at a doubling level.
    Cd {
        #[arg(long, default_value_t = 3)]
        level: usize,
        /// Print the basis multiplication table.
        #[arg(long)]
        table: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseArg {
    Auto,
    Real,
    Complex,
    Gaussian,
    Iterant,
}

impl From<BaseArg> for Base {
    fn from(b: BaseArg) -> Self {
        match b {
            BaseArg::Auto => Base::Auto,
            BaseArg::Real => Base::Real,
            BaseArg::Complex => Base::Complex,
            BaseArg::Gaussian => Base::Gaussian,
            BaseArg::Iterant => Base::Iterant,
        }
    }
}

/// Outcome of a subcommand: printed text plus whether all identities held.
struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn info(text: String) -> Self {
        Outcome { text, passed: true }
    }

    fn from_reports(reports: &[VerificationReport], timing: bool) -> Self {
        let text = reports.iter().map(|r| r.render(timing)).collect::<Vec<_>>().join("");
        let passed = reports.iter().all(|r| r.all_passed());
        let total: usize = reports.iter().map(|r| r.checks.len()).sum();
        let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
        let summary = if passed {
            format!("ALL PASS ({total} checks)\n")
        } else {
            format!("FAILED {failed} of {total} checks\n")
        };
        Outcome {
            text: text + &summary,
            passed,
        }
    }
}

fn report_from(suite: &str, checks: Vec<Check>) -> VerificationReport {
    let mut r = VerificationReport::new(suite);
    r.extend(checks);
    r
}

fn on_shell(p: Vec<Rational>, m: Rational) -> Result<EnergyMomentum, Error> {
    EnergyMomentum::from_momentum_mass(p, m)
}

fn verify(
    scope: &str,
    seed: u64,
    samples: usize,
    p: Option<Vec<Rational>>,
    m: Option<Rational>,
    order: u32,
    timing: bool,
) -> Result<Outcome, Error> {
    let scope: Scope = scope.parse()?;
    let mut opts = SuiteOptions {
        seed,
        samples,
        series_order: order,
        ..SuiteOptions::default()
    };
    match (p, m) {
        (Some(p), Some(m)) => {
            let pm = on_shell(p, m)?;
            match pm.momentum().len() {
                1 => {
                    opts.dirac = vec![(DiracConfig::OneD, pm.clone())];
                    opts.lightcone = pm;
                }
                3 => {
                    opts.dirac = vec![(DiracConfig::ThreeD, pm.clone())];
                    opts.majorana = pm;
                }
                n => return Err(Error::InvalidArgument(format!("--p needs 1 or 3 components, got {n}"))),
            }
        }
        (None, None) => {}
        _ => return Err(Error::InvalidArgument("--p and --m go together".into())),
    }
    Ok(Outcome::from_reports(&suites::run(scope, &opts)?, timing))
}

fn eval(expr: &str, base: BaseArg, generators: usize, matrix: bool) -> Result<Outcome, Error> {
    let x = eval_clifford(expr, base.into(), generators)?;
    let mut text = format!("{x}\n");
    if matrix {
        text += &format!("{}\n", x.matrix_image()?);
    }
    Ok(Outcome::info(text))
}

fn matrix(n: usize, expr: &str, from: bool) -> Result<Outcome, Error> {
    let alg = GroupAlgebra::cyclic(n)?;
    let text = if from {
        let m: Matrix = expr.parse()?;
        format!("{}\n", from_matrix(&m, n)?)
    } else {
        format!("{}\n", to_matrix(&parse_group_element(expr, &alg)?)?)
    };
    Ok(Outcome::info(text))
}

fn dirac(dim: usize, p: Vec<Rational>, m: Rational) -> Result<Outcome, Error> {
    let cfg = DiracConfig::from_dim(dim)?;
    let pm = on_shell(p, m)?;
    let alg = DiracAlgebra::new();
    let u = build_u(&alg, cfg, &pm)?;
    let ud = build_udag(&alg, cfg, &pm)?;
    let (a, b) = majorana_split(&alg, cfg, &pm)?;
    let mut text = format!(
        "{pm}\nU  = {}\nU† = {}\nUU† + U†U = {}\nA  = {}\nB  = {}\n",
        alg.describe(&u),
        alg.describe(&ud),
        alg.describe(&u.anticommutator(&ud)?),
        alg.describe(&a),
        alg.describe(&b),
    );
    let mut checks = generator_relations(&alg, cfg);
    checks.extend(fermion_relations(&alg, cfg, &pm)?);
    checks.extend(majorana_split_relations(&alg, cfg, &pm)?);
    checks.extend(verify_plane_wave(&alg, cfg, &pm)?);
    let out = Outcome::from_reports(&[report_from("dirac", checks)], false);
    text += &out.text;
    Ok(Outcome {
        text,
        passed: out.passed,
    })
}

fn majorana(p: Vec<Rational>, m: Rational) -> Result<Outcome, Error> {
    let pm = on_shell(p, m)?;
    let alg = DiracAlgebra::new();
    let sol = majorana_solutions(&alg, &pm)?;
    let residual = |w| cliffordforge::dirac::apply_operator(&sol.nabla, w).map(|r| describe_wave(&alg, &r));
    let mut text = format!(
        "{pm}\nA   = {}\nB   = {}\nPhi = {}\nPsi = {}\nnabla Phi = {}\nnabla Psi = {}\n",
        alg.describe(&sol.a),
        alg.describe(&sol.b),
        describe_wave(&alg, &sol.phi),
        describe_wave(&alg, &sol.psi),
        residual(&sol.phi)?,
        residual(&sol.psi)?,
    );
    let out = Outcome::from_reports(&[report_from("majorana", sol.checks)], false);
    text += &out.text;
    Ok(Outcome {
        text,
        passed: out.passed,
    })
}

fn checkerboard(
    order: u32,
    point: Option<Vec<Rational>>,
    coeff: Option<Vec<Rational>>,
    paths: Option<Vec<u32>>,
) -> Result<Outcome, Error> {
    let mut text = String::new();
    if let Some(pt) = point {
        let (r, l) = (&pt[0], &pt[1]);
        for (name, which) in [("psi0", Psi::Zero), ("psi_R", Psi::R), ("psi_L", Psi::L)] {
            let s = series_psi(which, order)?;
            text += &format!(
                "{name}({r},{l}) = {} ~ {:.15}\n",
                eval_series(&s, r, l),
                eval_float(&s, r, l)
            );
        }
    }
    if let Some(c) = coeff {
        let k = &c[2];
        if !k.is_integer() || k.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "k must be a nonnegative integer, got {k}"
            )));
        }
        let k: u32 = k
            .to_string()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("k = {k} is too large")))?;
        let v = choice_coeff(&c[0], &c[1], k);
        text += &format!("C[{}]^{}_{} = {v} ~ {:.15}\n", c[1], c[0], k, v.to_f64());
    }
    if let Some(rl) = paths {
        let (r, l) = (rl[0], rl[1]);
        for c in 0..r + l {
            let n = path_count_oracle(r, l, c);
            if n > 0 {
                text += &format!("paths R={r} L={l} corners={c}: {n}\n");
            }
        }
    }
    let out = Outcome::from_reports(&[report_from("series", check_lightcone_series(order)?)], false);
    text += &out.text;
    Ok(Outcome {
        text,
        passed: out.passed,
    })
}

fn cd(level: usize, table: bool) -> Result<Outcome, Error> {
    let mut text = String::new();
    if table {
        for row in basis_table(level)? {
            let cells: Vec<String> = row
                .iter()
                .map(|(s, k)| format!("{}e{k}", if *s < 0 { "-" } else { "+" }))
                .collect();
            text += &format!("{}\n", cells.join(" "));
        }
    }
    text += &match find_associator_witness(level)? {
        Some(w) => {
            let (i, j, k) = w.indices;
            format!("non-associative: (e{i} e{j}) e{k} - e{i} (e{j} e{k}) = {}\n", w.value)
        }
        None => format!("associative on all basis triples at dimension {}\n", 1usize << level),
    };
    Ok(Outcome::info(text))
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Verify {
            scope,
            seed,
            samples,
            p,
            m,
            order,
            timing,
        } => verify(&scope, seed, samples, p, m, order, timing),
        Command::Eval {
            expr,
            base,
            generators,
            matrix: show,
        } => eval(&expr, base, generators, show),
        Command::Matrix { n, expr, from } => matrix(n, &expr, from),
        Command::Dirac { dim, p, m } => dirac(dim, p, m),
        Command::Majorana { p, m } => majorana(p, m),
        Command::Checkerboard {
            order,
            point,
            coeff,
            paths,
        } => checkerboard(order, point, coeff, paths),
        Command::Cd { level, table } => cd(level, table),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
