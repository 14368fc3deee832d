// Run every reproduction preset and print its expectation diff.
//
// $ cargo run --release --example reproduce
use toricgb::verifier::{reproduce, PRESETS};

fn main() -> toricgb::Result<()> {
    let mut ok = true;
    for name in PRESETS {
        let outcome = reproduce(name)?;
        println!("{outcome}\n");
        ok &= outcome.passed();
    }
    std::process::exit(if ok { 0 } else { 1 });
}
