// Initial ideal and its Hilbert series; the multiplicity must equal deg K[S].
//
// $ cargo run --example hilbert_series
use toricgb::gb::{hilbert_data, hilbert_numerator, initial_ideal, BlockOrder, VariableUniverse};
use toricgb::lattice::Configuration;
use toricgb::toric::toric_groebner;

fn main() -> toricgb::Result<()> {
    let cfg = Configuration::new(
        3,
        3,
        &[vec![2, 0, 1], vec![1, 2, 0], vec![1, 1, 1], vec![1, 0, 2], vec![0, 2, 1], vec![0, 1, 2]],
    )?;
    let g = toric_groebner(&cfg, BlockOrder::Grevlex)?;
    let ini = initial_ideal(&g);
    let u = VariableUniverse::toric(cfg.codimension(), cfg.dim());
    let shown: Vec<String> = ini.iter().map(|m| m.display(&u).to_string()).collect();
    println!("in(I_A) = ({})", shown.join(", "));

    let n = cfg.codimension() + cfg.dim();
    println!("numerator of H(t)(1-t)^{n}: {:?}", hilbert_numerator(&ini, n)?);
    let h = hilbert_data(&ini, n)?;
    println!("dimension {}, multiplicity {}", h.dimension, h.multiplicity);
    println!("deg K[S] from the lattice index: {}", cfg.degree()?);
    Ok(())
}
