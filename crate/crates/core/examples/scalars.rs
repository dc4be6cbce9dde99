//! The two carriers of each backend and the involution between them.
//!
//! ```bash
//! cargo run --example scalars
//! ```

use bisemikit::scalar::*;

fn main() {
    let r = RightScalar::new(rational(-5, 3)).unwrap();
    let l = project_right_to_left(&r);
    println!(
        "right {} projects to left {}",
        r.value().render(),
        l.value().render()
    );
    println!("involution of 3/7: {}", rational(3, 7).involute().render());

    assert!(LeftScalar::new(rational(-1, 1)).is_err());

    let z = Complex64::new(1.5, 2.0);
    println!("complex involution of {z}: {}", z.involute());

    for report in [
        check_semifield_axioms::<LeftScalar<Rational>>(200, 1),
        check_semifield_axioms::<RightScalar<Rational>>(200, 1),
        check_semifield_axioms::<LeftScalar<Complex64>>(200, 1),
    ] {
        println!("{}", serde_json::to_string(&report).unwrap());
    }
}
