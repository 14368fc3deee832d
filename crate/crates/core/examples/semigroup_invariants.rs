// Graded pieces, reduction number, full faces and normality.
//
// $ cargo run --example semigroup_invariants
use toricgb::lattice::{Configuration, LatticeVector};
use toricgb::semigroup::{full_face_bound, Semigroup};

fn main() -> toricgb::Result<()> {
    let cfg = Configuration::new(4, 2, &[vec![3, 1], vec![1, 3]])?;
    let mut s = Semigroup::new(&cfg);
    for n in 1..=3 {
        let piece = s.graded_piece(n)?;
        let shown: Vec<String> = piece.elements().iter().map(|p| p.to_string()).collect();
        println!("{n}A = {{{}}}", shown.join(" "));
    }
    // (2,2) lies in the group but not in the semigroup
    println!("(2,2) in S: {}", s.contains(&LatticeVector::new(vec![2, 2]))?);
    println!("r(S) = {}", s.reduction_number()?);
    println!("normal: {}", s.is_normal()?);
    println!("full-face bound: {:?}", full_face_bound(&cfg)?);

    let full = Configuration::full(3, 3)?;
    let mut s = Semigroup::new(&full);
    println!("\nM_(3,3): r(S) = {}, normal = {}", s.reduction_number()?, s.is_normal()?);
    for f in s.faces().iter().filter(|f| f.is_full && f.dimension == 1) {
        println!("  full edge off coordinates {:?}: {} points", f.zero_set, f.members.len());
    }
    Ok(())
}
