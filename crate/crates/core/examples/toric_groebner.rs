// Reduced Gröbner bases of a toric ideal via elimination, under revlex and lex.
//
// $ cargo run --example toric_groebner
use toricgb::gb::{BlockOrder, VariableUniverse};
use toricgb::lattice::Configuration;
use toricgb::toric::{build_elimination_system, toric_groebner};

fn main() -> toricgb::Result<()> {
    let cfg = Configuration::new(4, 2, &[vec![3, 1], vec![1, 3]])?;

    let sys = build_elimination_system(&cfg, BlockOrder::Grevlex)?;
    println!("J_A generators:");
    for g in &sys.generators {
        println!("  {}", g.display(&sys.universe));
    }

    let u = VariableUniverse::toric(cfg.codimension(), cfg.dim());
    for order in [BlockOrder::Grevlex, BlockOrder::Lex] {
        let g = toric_groebner(&cfg, order)?;
        println!("\n{order:?}: {} elements, max degree {}", g.len(), g.max_degree());
        for b in g.elements() {
            println!("  {}", b.display(&u));
        }
    }
    Ok(())
}
