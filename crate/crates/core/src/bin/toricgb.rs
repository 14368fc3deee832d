use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use toricgb::gb::{BlockOrder, GroebnerBasis, VariableUniverse};
use toricgb::toric::{bound_report, toric_groebner, BoundReport, ReportOptions};
use toricgb::verifier::{
    cap_from_env, load_config, reproduce, run_sweep, threads_from_env, write_jsonl, Check, Predicate, SweepSpec,
    PRESETS,
};
use toricgb::{Configuration, Result};

#[derive(Parser)]
#[command(name = "toricgb", version, about = "Gröbner bases and degree bounds for simplicial toric ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the bound report for one configuration file.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Term orders to compute bases for (grevlex is always computed).
        #[arg(long = "order", value_enum)]
        orders: Vec<OrderArg>,
        /// Also measure the reduced basis of the elimination ideal.
        #[arg(long)]
        ja_maxdeg: bool,
        #[arg(long)]
        normality: bool,
        #[arg(long, value_enum, default_value = "table")]
        emit: Emit,
    },
    /// Enumerate M_(alpha,d) minus K points and check every class.
    Sweep {
        #[arg(long)]
        alpha: u64,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        delete: usize,
        /// none | edge-one-each | facet-min(M) | must-delete(V) | must-keep(V) | edge-full(I,J); repeatable
        #[arg(long = "predicate")]
        predicates: Vec<Predicate>,
        /// e.g. "r <= 8", "r == 2", conjecture, thmA1, thmA4, propA6, lemmaA2, sturmfels; repeatable
        #[arg(long = "check")]
        checks: Vec<Check>,
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a fixed expectation suite (or `all`).
    Reproduce {
        #[arg(value_parser = preset_names())]
        preset: String,
    },
}

fn preset_names() -> Vec<&'static str> {
    let mut v = PRESETS.to_vec();
    v.push("all");
    v
}

fn basis_json(g: &GroebnerBasis, cfg: &Configuration) -> serde_json::Value {
    let u = VariableUniverse::toric(cfg.codimension(), cfg.dim());
    g.elements()
        .iter()
        .map(|b| {
            json!({
                "text": b.display(&u).to_string(),
                "lead": b.lead().exponents(),
                "tail": b.tail().exponents(),
            })
        })
        .collect()
}

fn print_table(rep: &BoundReport, bases: &[(&str, GroebnerBasis)], cfg: &Configuration) {
    println!("configuration      {}", rep.configuration);
    let rows: Vec<(&str, String)> = vec![
        ("r(S)", rep.r.to_string()),
        ("deg K[S]", rep.deg.to_string()),
        ("codim", rep.c.to_string()),
        ("maxdeg revlex", rep.maxdeg_revlex.to_string()),
        ("maxdeg lex", rep.maxdeg_lex.map_or("-".into(), |m| m.to_string())),
        ("maxdeg J_A", rep.maxdeg_ja.map_or("-".into(), |m| m.to_string())),
        ("max{r+1,2r-1}", rep.bound_reduction.to_string()),
        ("max{2,2(deg-c)-1}", rep.bound_reduction_deg.to_string()),
        ("max{c,a,c(a-1)-1}", rep.bound_codim.to_string()),
        ("c*deg", rep.bound_sturmfels.to_string()),
        ("J_A bound", rep.bound_elimination.to_string()),
        ("deg-c+1", rep.bound_eg.to_string()),
        ("full-face bound", rep.full_face_bound.map_or("-".into(), |m| m.to_string())),
        ("normal", rep.is_normal.map_or("-".into(), |m| m.to_string())),
        ("conjecture holds", rep.conjecture_holds.to_string()),
    ];
    for (k, v) in rows {
        println!("{k:<18} {v}");
    }
    let u = VariableUniverse::toric(cfg.codimension(), cfg.dim());
    for (name, g) in bases {
        println!("\n{name} basis ({} elements):", g.len());
        for b in g.elements() {
            println!("  {}", b.display(&u));
        }
    }
}

fn cmd_run(config: PathBuf, orders: Vec<OrderArg>, ja_maxdeg: bool, normality: bool, emit: Emit) -> Result<u8> {
    let cfg = load_config(&config)?;
    for w in cfg.warnings() {
        eprintln!("warning: {w:?}");
    }
    let want_lex = orders.contains(&OrderArg::Lex);
    let opts = ReportOptions {
        compute_lex: want_lex,
        compute_ja_maxdeg: ja_maxdeg,
        compute_normality: normality,
        ..Default::default()
    };
    let rep = bound_report(&cfg, &opts)?;
    let mut bases = vec![("grevlex", toric_groebner(&cfg, BlockOrder::Grevlex)?)];
    if want_lex {
        bases.push(("lex", toric_groebner(&cfg, BlockOrder::Lex)?));
    }
    match emit {
        Emit::Table => print_table(&rep, &bases, &cfg),
        Emit::Json => {
            let mut v = serde_json::to_value(&rep)?;
            for (name, g) in &bases {
                v[format!("basis_{name}")] = basis_json(g, &cfg);
            }
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(match rep.counterexample_candidate() {
        Some(msg) => {
            eprintln!("{msg}");
            1
        }
        None => 0,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    alpha: u64,
    dim: usize,
    delete: usize,
    predicates: Vec<Predicate>,
    checks: Vec<Check>,
    no_symmetry: bool,
    out: PathBuf,
) -> Result<u8> {
    let mut spec = SweepSpec::new(alpha, dim, delete);
    spec.predicates = predicates.into_iter().filter(|p| *p != Predicate::None).collect();
    spec.checks = checks;
    spec.symmetry = !no_symmetry;
    if spec.symmetry && spec.predicates.iter().any(|p| !p.is_symmetric()) {
        eprintln!("note: classes are formed after filtering; representatives need not satisfy position-dependent predicates");
    }
    let outcome = run_sweep(&spec, cap_from_env()?, threads_from_env()?)?;
    let mut w = BufWriter::new(File::create(&out)?);
    write_jsonl(&mut w, &spec, &outcome)?;
    w.flush()?;

    let failing: Vec<_> = outcome.records.iter().filter(|r| !r.all_checks_pass()).collect();
    println!(
        "{} raw, {} matching, {} {}, {} incidence situations, {:.2?}",
        outcome.raw_count,
        outcome.matched,
        outcome.records.len(),
        if spec.symmetry { "classes" } else { "configurations" },
        outcome.incidence_situations().len(),
        outcome.elapsed
    );
    for r in &failing {
        let bad: Vec<String> = r.checks.iter().filter(|c| !c.is_pass()).map(|c| c.check.to_string()).collect();
        println!("FAIL {} (r = {}): {}", r.report.configuration, r.report.r, bad.join(", "));
    }
    println!("wrote {}", out.display());
    Ok(if failing.is_empty() { 0 } else { 1 })
}

fn cmd_reproduce(preset: &str) -> Result<u8> {
    let names: Vec<&str> = if preset == "all" { PRESETS.to_vec() } else { vec![preset] };
    let mut code = 0;
    for name in names {
        let outcome = reproduce(name)?;
        println!("{outcome}");
        if !outcome.passed() {
            code = 1;
        }
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run {
            config,
            orders,
            ja_maxdeg,
            normality,
            emit,
        } => cmd_run(config, orders, ja_maxdeg, normality, emit),
        Command::Sweep {
            alpha,
            dim,
            delete,
            predicates,
            checks,
            no_symmetry,
            out,
        } => cmd_sweep(alpha, dim, delete, predicates, checks, no_symmetry, out),
        Command::Reproduce { preset } => cmd_reproduce(&preset),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
