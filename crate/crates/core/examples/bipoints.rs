use bisemikit::bipoint::*;
use bisemikit::scalar::{rational, Rational, Scalar};

fn qv(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| rational(x, 1)).collect()
}

fn main() {
    let bp = outer_bipoint(&qv(&[-1, -2, -3]), &qv(&[1, 2, 3])).unwrap();
    println!("{}", serde_json::to_string_pretty(&bp.to_json()).unwrap());
    println!("rank one: {}", bp.minors_vanish());

    let (diag, off) = partition_bipoint(&bp);
    let show = |v: &[Rational]| v.iter().map(Scalar::render).collect::<Vec<_>>().join(" ");
    println!("diagonal: {}", show(&diag));
    println!("off-diagonal: {}", show(&off));
    println!("point: {}", show(&project_bipoint_to_point(&bp).unwrap()));

    let g = MetricComponents::new(
        MetricKind::Covariant,
        bisemikit::linalg::Matrix::diagonal(&qv(&[2, 4, 8])),
    )
    .unwrap();
    let up = convert_metric(&g, MetricKind::Contravariant).unwrap();
    println!(
        "raised metric diagonal: {}",
        show(
            &(0..3)
                .map(|i| metric_component(&up, i, i).unwrap())
                .collect::<Vec<_>>()
        )
    );
}
