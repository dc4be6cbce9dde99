//! Tensor splitting and the three stages of the inner product.
//!
//! A right vector is paired with a left vector directly (mixed stage),
//! after projection to the left side (external), and after raising the
//! index with a metric (internal).

use bisemikit::bipoint::MetricComponents;
use bisemikit::linalg::Matrix;
use bisemikit::scalar::{rational, Complex64, Rational, Scalar};
use bisemikit::tensor::*;

fn qv(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rational(x, 1)).collect()
}

fn main() {
    let x = BisemimoduleElement::new(Matrix::from_fn(3, 3, |i, j| {
        rational((3 * i + j) as i64, 1)
    }))
    .unwrap();
    let (d, od) = tensor_split(&x);
    println!(
        "diagonal part has {} nonzero terms, off-diagonal {}",
        d.nonzero_count(),
        od.nonzero_count()
    );

    let x_r = SemimoduleVector::right(qv(&[-1, -2])).unwrap();
    let x_l = SemimoduleVector::left(qv(&[1, 2])).unwrap();
    let external = project_p(&x_r, Side::Left).unwrap();
    let internal = riesz_b(&external, &MetricComponents::identity(2)).unwrap();

    for (stage, lhs) in [
        (Stage::Mixed, &x_r),
        (Stage::External, &external),
        (Stage::Internal, &internal),
    ] {
        for mode in [
            PairingMode::Diagonal,
            PairingMode::Extended,
            PairingMode::OffDiagonal,
        ] {
            let v = product(lhs, &x_l, InnerProductSpec::new(mode, stage)).unwrap();
            println!(
                "{:>8} {:>12}: {}",
                format!("{stage:?}"),
                format!("{mode:?}"),
                v.render()
            );
        }
    }

    let z =
        SemimoduleVector::left(vec![Complex64::new(1.0, 1.0), Complex64::new(0.0, -2.0)]).unwrap();
    let spec = InnerProductSpec::new(PairingMode::Diagonal, Stage::Internal);
    println!(
        "<z, z> = {}",
        inner_product(&conjugate_partner(&z).unwrap(), &z, spec).unwrap()
    );
    println!("|z| = {}", norm(&z));
    println!(
        "{}",
        serde_json::to_string(&hilbert_correspondence_check(
            &[z.clone(), z.scaled(&Complex64::new(0.0, 1.0))],
            0
        ))
        .unwrap()
    );
}
