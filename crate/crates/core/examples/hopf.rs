//! Group bisemialgebras: axiom checks, convolution, and what a wrong
//! antipode looks like.

use bisemikit::hopf::*;
use bisemikit::linalg::Matrix;
use bisemikit::scalar::{Complex64, Rational};

fn main() {
    let g = FiniteGroup::symmetric3();
    let h = build_group_bisemialgebra::<Rational>(&g);
    let report = hopf_axiom_check(&h);
    println!("{}: all axioms hold = {}", g.name(), report.all_pass());

    let id = Matrix::identity(g.order());
    assert_eq!(convolution(h.antipode(), &id, &h).unwrap(), h.unit_counit());

    let x = BisemialgebraElement::left_oriented(h.basis(1), h.basis(4));
    let y = bilinear_antipode(&x, &h).unwrap();
    println!("S_b flips orientation to {:?}", y.orientation);

    let broken = h.with_antipode(id).unwrap();
    let v = hopf_axiom_check(&broken)
        .verdict("antipode-left")
        .unwrap()
        .clone();
    println!(
        "identity as antipode: holds = {}, witness: {}",
        v.holds,
        v.witness.unwrap_or_default()
    );

    let hc = build_group_bisemialgebra::<Complex64>(&FiniteGroup::cyclic(4));
    println!(
        "{}",
        serde_json::to_string(&star_involution_check(&hc, 32, 5)).unwrap()
    );
}
