//! Combining bielements and expanding their product into diagonal and
//! cross terms.

use bisemikit::bisemigroup::*;
use bisemikit::faults::Concat;

fn main() {
    let x = Bielement::new(-1i64, 2i64);
    let y = Bielement::new(-3i64, 4i64);

    println!("combine: {:?}", cross_combine(&x, &y).unwrap());
    for term in cross_expand_terms(&x, &y).unwrap() {
        println!("  {:?} x{}", term.element, term.coeff);
    }
    let expansion = cross_expand(&x, &y).unwrap();
    println!(
        "{}",
        serde_json::to_string_pretty(&expansion.to_json()).unwrap()
    );

    println!("abelian: {}", check_cross_abelian(&x, &y).holds);
    println!("associative: {}", check_cross_associative(&x, &y, &x).holds);

    // String concatenation is not commutative, and the check says where.
    let s = |v: &str| Concat(v.to_string());
    let v = check_cross_abelian(
        &Bielement::new(s("ab"), s("c")),
        &Bielement::new(s("d"), s("e")),
    );
    println!(
        "concat abelian: {} ({})",
        v.holds,
        v.witness.unwrap_or_default()
    );
}
