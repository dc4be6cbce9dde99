use bisemikit::function_space::*;
use bisemikit::scalar::Complex64;

fn main() {
    let m = 32;
    let xs: Vec<f64> = (0..m).map(|k| (k as f64 + 0.5) / m as f64).collect();
    let phi_r: Vec<Complex64> = xs.iter().map(|&x| Complex64::new(x, -x * x)).collect();
    let phi_l: Vec<Complex64> = xs
        .iter()
        .map(|&x| Complex64::new((6.0 * x).cos(), (6.0 * x).sin()))
        .collect();

    let fr = SampledFunction::uniform(phi_r, "midpoint").unwrap();
    let fl = SampledFunction::uniform(phi_l, "midpoint").unwrap();
    println!("L1 of phi_L: {:.6}", quadrature_l1(&fl));
    println!("L2^2 of phi_L: {:.6}", quadrature_l2_squared(&fl));

    let bf = Bifunction::new(fr, fl).unwrap();
    let member = l11_membership(&bf, 10.0);
    println!(
        "L11 value {:.6}, within bound: {}",
        member.value, member.within_bound
    );

    let t = transform_bl_pl(&bf);
    println!("after transform, L2 value {:.6}", t.l2_value);
}
