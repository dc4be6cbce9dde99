//! Splits a matrix into a right and a left triangular factor and acts
//! with the pair on a bipoint.

use bisemikit::error::Error;
use bisemikit::linalg::Matrix;
use bisemikit::matrix::*;
use bisemikit::scalar::{rational, Rational};

fn m(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| rational(x, 1)).collect())
            .collect(),
    )
    .unwrap()
}

fn main() {
    let a = m(&[&[2, 1, 0], &[4, 3, 1], &[-2, 5, 7]]);
    let f = gauss_ldu(&a).unwrap();
    assert_eq!(f.reconstruct(), a);

    for rule in [SplitRule::DeltaLeft, SplitRule::DeltaSqrt] {
        match bilinear_decompose(&a, rule) {
            Ok(pair) => println!("{}: T_R T_L = A is {}", rule.name(), pair.product() == a),
            Err(e) => println!("{}: {e}", rule.name()),
        }
    }

    let pair = bilinear_decompose(&a, SplitRule::DeltaLeft).unwrap();
    let v_r = vec![rational(-1, 1), rational(0, 1), rational(-2, 1)];
    let v_l = vec![rational(1, 1), rational(1, 1), rational(0, 1)];
    let bp = bisemimodule_action(&pair, &v_r, &v_l).unwrap();
    println!("{}", serde_json::to_string_pretty(&bp.to_json()).unwrap());

    println!("{:?}", correspondence_roundtrip(&a).unwrap());

    match gauss_ldu(&m(&[&[0, 1], &[1, 0]])) {
        Err(Error::DecompositionUndefined { index }) => println!("leading minor {index} vanishes"),
        other => println!("unexpected: {other:?}"),
    }
}
