// Enumerate M_(3,4) minus four points with at least two deletions on every
// facet, up to coordinate permutation, and check r(S) <= 8 on each class.
//
// $ cargo run --release --example sweep
use toricgb::verifier::{run_sweep, write_jsonl, Predicate, SweepSpec, DEFAULT_CAP};

fn main() -> toricgb::Result<()> {
    let spec = SweepSpec::new(3, 4, 4)
        .predicate(Predicate::FacetMin(2))
        .check("r <= 8".parse()?)
        .check("conjecture".parse()?);
    let out = run_sweep(&spec, DEFAULT_CAP, None)?;
    eprintln!(
        "{} raw deletion sets, {} match, {} classes, {} incidence situations",
        out.raw_count,
        out.matched,
        out.records.len(),
        out.incidence_situations().len()
    );
    write_jsonl(&mut std::io::stdout().lock(), &spec, &out)?;
    assert!(out.all_checks_pass());
    Ok(())
}
