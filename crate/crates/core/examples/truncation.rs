// Weighted truncation of the elimination run: with wt(t) = 1 and
// wt(x) = wt(y) = alpha, pairs above alpha times the degree bound for J_A
// can be dropped without losing basis elements.
//
// $ cargo run --example truncation
use toricgb::lattice::Configuration;
use toricgb::semigroup::Semigroup;
use toricgb::toric::{run_pipeline, truncation_cap, PipelineOptions};

fn main() -> toricgb::Result<()> {
    let cfg = Configuration::new(4, 3, &[vec![3, 1, 0], vec![1, 3, 0], vec![2, 1, 1], vec![0, 1, 3], vec![1, 0, 3]])?;
    let r = Semigroup::new(&cfg).reduction_number()? as u64;
    let cap = truncation_cap(&cfg, r);

    let full = run_pipeline(&cfg, &PipelineOptions { keep_elimination_basis: true, ..Default::default() })?;
    let cut = run_pipeline(
        &cfg,
        &PipelineOptions {
            keep_elimination_basis: true,
            truncation: Some(cap),
            ..Default::default()
        },
    )?;
    println!("r(S) = {r}, weighted cap = {cap}");
    println!("untruncated: {:?}", full.stats);
    println!("truncated  : {:?}", cut.stats);
    println!("same I_A basis: {}", full.basis == cut.basis);
    println!("same J_A basis: {}", full.elimination_basis == cut.elimination_basis);
    Ok(())
}
