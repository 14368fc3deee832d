// The binomial Buchberger engine on its own, outside the toric pipeline.
//
// $ cargo run --example binomial_buchberger
use toricgb::gb::{
    buchberger_with_stats, is_groebner, parse_binomial, BuchbergerOptions, PairStrategy, TermOrder, VariableUniverse,
};

fn main() -> toricgb::Result<()> {
    let u = VariableUniverse::new(["a", "b", "c", "d"].map(String::from).to_vec());
    let order = TermOrder::Grevlex;
    // twisted cubic
    let gens = ["a*c - b^2", "b*d - c^2", "a*d - b*c"]
        .iter()
        .map(|s| parse_binomial(s, &u, &order))
        .collect::<toricgb::Result<Vec<_>>>()?;

    for strategy in [PairStrategy::Normal, PairStrategy::Fifo] {
        let opts = BuchbergerOptions {
            strategy,
            ..Default::default()
        };
        let (g, stats) = buchberger_with_stats(&gens, &order, &opts)?;
        println!("{strategy:?}: {stats:?}");
        for b in g.elements() {
            println!("  {}", b.display(&u));
        }
        assert!(is_groebner(&g)?);
    }
    Ok(())
}
