// Lattice index, multiplicity and codimension of a configuration.
//
// $ cargo run --example lattice_invariants
use toricgb::lattice::{enumerate_simplex_points, Configuration};

fn main() -> toricgb::Result<()> {
    let cfg = Configuration::new(4, 2, &[vec![3, 1], vec![1, 3]])?;
    println!("{cfg}");
    println!("points of M_(4,2): {}", enumerate_simplex_points(4, 2).len());
    println!("codim            : {}", cfg.codimension());
    println!("[Z^d : ZS]       : {}", cfg.lattice_index()?);
    println!("deg K[S]         : {}", cfg.degree()?);
    println!("deg - codim + 1  : {}", cfg.eisenbud_goto_bound()?);

    let snf = cfg.smith_form()?;
    println!("elementary divisors: {:?}", snf.divisors);

    // A common factor in every coordinate is accepted but flagged.
    let scaled = Configuration::new(4, 2, &[vec![2, 2]])?;
    println!("{scaled}: warnings {:?}", scaled.warnings());
    Ok(())
}
