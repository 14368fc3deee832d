// Every bound for one configuration, as the JSON the CLI emits.
//
// $ cargo run --example bound_report
use toricgb::lattice::Configuration;
use toricgb::toric::{bound_report, ReportOptions};

fn main() -> toricgb::Result<()> {
    let cfg = Configuration::with_deleted(3, 3, &[toricgb::LatticeVector::new(vec![1, 1, 1])])?;
    let opts = ReportOptions {
        compute_lex: true,
        compute_ja_maxdeg: true,
        check_truncation: true,
        ..Default::default()
    };
    let rep = bound_report(&cfg, &opts)?;
    println!("{}", serde_json::to_string_pretty(&rep)?);
    match rep.counterexample_candidate() {
        Some(msg) => println!("{msg}"),
        None => println!("maxdeg {} <= deg - codim + 1 = {}", rep.maxdeg_revlex, rep.bound_eg),
    }
    Ok(())
}
