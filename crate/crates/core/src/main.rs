use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use liecontract::autos::validate_automorphism;
use liecontract::contract::{
    contract, tower_vs_copies_contraction, tower_vs_cyclic_contraction, tower_vs_fixedpoint_contraction,
    QuasiGrading,
};
use liecontract::corpus::{AlgebraSpec, ThetaSpec};
use liecontract::harness::{run_scenario_file, scenario_dir, target_algebra, Setup, EXIT_INPUT};
use liecontract::invariants::{self, Rep};
use liecontract::takiff::{hat_eigenspaces, lift_automorphism, predicted_hat_dims, takiff};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(name = "liecontract", version, about = "Takiff algebras, periodic gradings, contractions and their invariants")]
struct Cli {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = invariants::DEFAULT_MAX_DEGREE)]
    degree: u32,
    #[arg(long, global = true, default_value_t = invariants::DEFAULT_INDEX_TRIALS)]
    trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Work over Q(z_N) for a multiple N of this value.
    #[arg(long, global = true, default_value_t = 1)]
    conductor: u32,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Cyclic,
    Copies,
    Fixedpoint,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an algebra such as sl3, sp4, 2*sl2 or sl2<3> and check Jacobi.
    Construct { algebra: String },
    /// Eigenspace grading of an automorphism (id, neg_transpose, torus:1,0,2,3/4, shift, ...).
    Grade { algebra: String, theta: String },
    /// Takiff algebra of level m; with --theta also the lifted automorphism.
    Takiff {
        algebra: String,
        #[arg(short)]
        m: usize,
        #[arg(long)]
        theta: Option<String>,
    },
    /// Contraction of the grading (cyclic), of n copies, or of the fixed-point quasi-grading.
    Contract {
        algebra: String,
        theta: String,
        #[arg(long, value_enum, default_value_t = Mode::Cyclic)]
        mode: Mode,
        #[arg(short, default_value_t = 1)]
        n: usize,
    },
    /// Poincare series of adjoint or coadjoint invariants up to --degree.
    Invariants {
        algebra: String,
        #[arg(long, default_value = "adjoint")]
        rep: String,
        #[arg(long)]
        theta: Option<String>,
        /// source, fixed, contraction, copies, tower or tower_plus
        #[arg(long, default_value = "source")]
        target: String,
        #[arg(short, default_value_t = 1)]
        n: usize,
        /// Also print the echelon bases.
        #[arg(long)]
        basis: bool,
    },
    /// Sampled index of an algebra.
    Index {
        algebra: String,
        #[arg(long)]
        theta: Option<String>,
        #[arg(long, default_value = "source")]
        target: String,
        #[arg(short, default_value_t = 1)]
        n: usize,
    },
    /// Run scenario files; with no path, every bundled scenario.
    Verify { paths: Vec<PathBuf> },
}

fn resolve(cli: &Cli, algebra: &str, theta: Option<&str>, target: &str, n: usize) -> liecontract::Result<liecontract::liealg::LieAlgebra> {
    let spec: AlgebraSpec = algebra.parse()?;
    match theta {
        None if target == "source" => {
            let g = spec.build()?;
            g.lift(liecontract::scalars::lcm(g.conductor(), cli.conductor))
        }
        None => Err(liecontract::Error::Invalid(format!("target {target:?} needs --theta"))),
        Some(t) => {
            let s = Setup::from_specs(&spec, &t.parse::<ThetaSpec>()?, cli.conductor)?;
            target_algebra(&s, n, target)
        }
    }
}

fn run(cli: &Cli) -> liecontract::Result<(Value, String, u8)> {
    match &cli.cmd {
        Cmd::Construct { algebra } => {
            let g = resolve(cli, algebra, None, "source", 1)?;
            let v = g.validate();
            let text = format!(
                "{algebra}: dim {} conductor {} rank {} jacobi {}",
                g.dim(),
                g.conductor(),
                g.rank().map(|r| r.to_string()).unwrap_or("-".into()),
                if v.passed { "ok" } else { "FAILS" }
            );
            Ok((json!({"algebra": g, "validation": v}), text, 0))
        }
        Cmd::Grade { algebra, theta } => {
            let s = Setup::from_specs(&algebra.parse()?, &theta.parse()?, cli.conductor)?;
            let a = validate_automorphism(&s.theta);
            let text = format!(
                "order {} conductor {} dims {:?} closure {}",
                s.k(),
                s.algebra().conductor(),
                s.grading.dims(),
                if s.grading.closure_defect().is_none() { "ok" } else { "FAILS" }
            );
            Ok((json!({"automorphism": a, "dims": s.grading.dims(), "grading": s.grading}), text, 0))
        }
        Cmd::Takiff { algebra, m, theta } => {
            let spec: AlgebraSpec = algebra.parse()?;
            match theta {
                None => {
                    let t = takiff(&spec.build()?, *m)?;
                    let ok = t.algebra.validate().passed;
                    let text = format!("{algebra}<{m}>: dim {} jacobi {}", t.algebra.dim(), if ok { "ok" } else { "FAILS" });
                    Ok((json!({"takiff": t, "valid": ok}), text, 0))
                }
                Some(th) => {
                    let s = Setup::from_specs(&spec, &th.parse()?, cli.conductor)?;
                    let (_, hat) = lift_automorphism(&s.theta, *m)?;
                    let gr = hat_eigenspaces(&hat)?;
                    let predicted = predicted_hat_dims(&s.grading.dims(), *m);
                    let iso = liecontract::contract::tower_vs_hat_fixed(&s.theta, *m)?.holds()?;
                    let text = format!(
                        "hat order {} (theta {}), hat dims {:?}, predicted {:?}, hat0 = tower: {iso}",
                        hat.order(),
                        s.k(),
                        gr.dims(),
                        predicted
                    );
                    Ok((
                        json!({"order": hat.order(), "theta_order": s.k(), "dims": gr.dims(), "predicted": predicted, "hat0_is_tower": iso}),
                        text,
                        0,
                    ))
                }
            }
        }
        Cmd::Contract { algebra, theta, mode, n } => {
            let s = Setup::from_specs(&algebra.parse()?, &theta.parse()?, cli.conductor)?;
            let (c, cmp) = match mode {
                Mode::Cyclic => {
                    let c = contract(&QuasiGrading::from(&s.grading))?;
                    (c, tower_vs_cyclic_contraction(&s.grading)?)
                }
                Mode::Copies => {
                    let cmp = tower_vs_copies_contraction(&s.theta, *n)?;
                    (cmp.target.clone(), cmp)
                }
                Mode::Fixedpoint => {
                    let cmp = tower_vs_fixedpoint_contraction(&s.theta, *n)?;
                    (cmp.target.clone(), cmp)
                }
            };
            let ok = c.validate().passed;
            let iso = cmp.holds()?;
            let text = format!("contraction dim {} jacobi {} isomorphic to tower: {iso}", c.dim(), if ok { "ok" } else { "FAILS" });
            Ok((json!({"contraction": c, "valid": ok, "tower_isomorphic": iso}), text, 0))
        }
        Cmd::Invariants { algebra, rep, theta, target, n, basis } => {
            let g = resolve(cli, algebra, theta.as_deref(), target, *n)?;
            let rep: Rep = rep.parse()?;
            invariants::check_limits(&g, cli.degree, invariants::DEFAULT_MAX_DIM, invariants::DEFAULT_MAX_DEGREE)?;
            let slices: Vec<_> = (0..=cli.degree).map(|m| invariants::invariant_basis(&g, rep, m, None)).collect();
            let series: Vec<usize> = slices.iter().map(|s| s.dim()).collect();
            let mut text = format!("{:?} invariants of {target} (dim {}): {:?}", rep, g.dim(), series);
            if *basis {
                for s in &slices {
                    for f in &s.basis {
                        text.push_str(&format!("\n  deg {}: {f}", s.degree));
                    }
                }
            }
            let mut v = json!({"rep": rep, "dim": g.dim(), "series": series});
            if *basis {
                v["slices"] = serde_json::to_value(&slices).unwrap_or(Value::Null);
            }
            Ok((v, text, 0))
        }
        Cmd::Index { algebra, theta, target, n } => {
            let g = resolve(cli, algebra, theta.as_deref(), target, *n)?;
            let r = invariants::index(&g, cli.trials, cli.seed, invariants::DEFAULT_COORD_BOUND);
            let b = invariants::b_of(&g, r.value);
            let text = format!(
                "index <= {} (dim {}, {} trials, seed {}), b = {}",
                r.value,
                g.dim(),
                r.trials,
                r.seed,
                b.value
            );
            Ok((json!({"index": r, "b": b}), text, 0))
        }
        Cmd::Verify { paths } => {
            let paths: Vec<PathBuf> = if paths.is_empty() {
                let mut v: Vec<PathBuf> = std::fs::read_dir(scenario_dir())
                    .map_err(|e| liecontract::Error::Invalid(e.to_string()))?
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.extension().is_some_and(|x| x == "json"))
                    .collect();
                v.sort();
                v
            } else {
                paths.clone()
            };
            let seed = (cli.seed != 0).then_some(cli.seed);
            let mut worst = 0;
            let mut reports = Vec::new();
            let mut text = Vec::new();
            for p in &paths {
                let r = run_scenario_file(p, seed);
                worst = worst.max(r.exit_code);
                text.push(format!("{} -> exit {}", r.scenario, r.exit_code));
                for c in &r.results {
                    let mut line = format!("  {:<22} {}", c.check, c.verdict);
                    if !c.diff.is_empty() {
                        line.push_str(&format!("  [{}]", c.diff.join("; ")));
                    }
                    if let Some(notes) = c.details.get("notes").and_then(Value::as_array) {
                        let ns: Vec<&str> = notes.iter().filter_map(Value::as_str).collect();
                        if !ns.is_empty() {
                            line.push_str(&format!("  ({})", ns.join("; ")));
                        }
                    }
                    text.push(line);
                }
                if let Some(e) = &r.error {
                    text.push(format!("  error: {e}"));
                }
                reports.push(r);
            }
            let v = if reports.len() == 1 { serde_json::to_value(&reports[0]) } else { serde_json::to_value(&reports) };
            Ok((v.unwrap_or(Value::Null), text.join("\n"), worst as u8))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((v, text, code)) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&v).unwrap_or_default()),
                Format::Text => println!("{text}"),
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
