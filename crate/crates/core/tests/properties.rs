mod common;

use bisemikit::bipoint::*;
use bisemikit::bisemigroup::*;
use bisemikit::function_space::*;
use bisemikit::hopf::*;
use bisemikit::linalg::{vector_from_json, vector_to_json, Matrix};
use bisemikit::matrix::*;
use bisemikit::scalar::*;
use bisemikit::tensor::*;
use common::rel_close;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(p, q)| rational(p, q))
}

fn nonneg_rat() -> impl Strategy<Value = Rational> {
    (0i64..=40, 1i64..=9).prop_map(|(p, q)| rational(p, q))
}

fn cplx() -> impl Strategy<Value = Complex64> {
    (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn rat_vec(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rat(), n)
}

fn cvec(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec(cplx(), n)
}

fn rat_grid() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(rat(), n * n)
            .prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
    })
}

fn bielem() -> impl Strategy<Value = Bielement<i64, i64>> {
    (-1000i64..=0, 0i64..=1000).prop_map(|(r, l)| Bielement::new(r, l))
}

/// Right tuple (nonpositive) and left tuple (nonnegative) of equal length.
fn sources() -> impl Strategy<Value = (Vec<Rational>, Vec<Rational>)> {
    (1usize..=6).prop_flat_map(|n| {
        (
            prop::collection::vec(nonneg_rat().prop_map(|x| -x), n),
            prop::collection::vec(nonneg_rat(), n),
        )
    })
}

fn unitriangular(n: usize, lower: bool, entries: &[i64]) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            rational(1, 1)
        } else if (i > j) == lower {
            rational(entries[i * n + j], 1)
        } else {
            rational(0, 1)
        }
    })
}

fn pair() -> impl Strategy<Value = BilinearMatrixPair<Rational>> {
    (1usize..=4).prop_flat_map(|n| {
        (
            prop::collection::vec(-3i64..=3, n * n),
            prop::collection::vec(1i64..=5, n),
            prop::collection::vec(-3i64..=3, n * n),
        )
            .prop_map(move |(l, d, u)| {
                let d: Vec<Rational> = d.iter().map(|&x| rational(x, 1)).collect();
                let t_r = unitriangular(n, true, &l);
                let t_l = Matrix::diagonal(&d)
                    .mul(&unitriangular(n, false, &u))
                    .unwrap();
                BilinearMatrixPair::new(t_r, t_l).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn involution_round_trip(a in nonneg_rat(), z in cplx()) {
        let l = LeftScalar::new(a.clone()).unwrap();
        prop_assert_eq!(project_right_to_left(&involution_left_to_right(&l)).into_inner(), a);
        let lz = LeftScalar::new(z).unwrap();
        prop_assert_eq!(project_right_to_left(&involution_left_to_right(&lz)).into_inner(), z);
    }

    #[test]
    fn carrier_closure(a in nonneg_rat(), b in nonneg_rat()) {
        prop_assert!((a.clone() + b.clone()).in_left_carrier());
        prop_assert!((a.clone() * b.clone()).in_left_carrier());
        let (ra, rb) = (-a.clone(), -b.clone());
        prop_assert!((ra.clone() + rb.clone()).in_right_carrier());
        prop_assert!((ra * rb).in_left_carrier());
    }

    #[test]
    fn biscalar_multiplication(xs in prop::collection::vec(nonneg_rat(), 6)) {
        let b = |r: &Rational, l: &Rational| BiScalar::new(RightScalar::new(-r.clone()).unwrap(), LeftScalar::new(l.clone()).unwrap());
        let (x, y, z) = (b(&xs[0], &xs[1]), b(&xs[2], &xs[3]), b(&xs[4], &xs[5]));
        prop_assert!(x.mul(&y).equivalent(&y.mul(&x)));
        prop_assert!(x.mul(&y).mul(&z).equivalent(&x.mul(&y.mul(&z))));
        prop_assert!(x.mul(&BiScalar::biunit()).equivalent(&x));
    }

    #[test]
    fn expansion_consistency(b1 in bielem(), b2 in bielem()) {
        let terms = cross_expand_terms(&b1, &b2).unwrap();
        let tags: Vec<Tag> = terms.iter().map(|t| t.element.tag).collect();
        prop_assert_eq!(tags, vec![Tag::Diagonal, Tag::Diagonal, Tag::Cross, Tag::Cross]);
        let combined = cross_combine(&b1, &b2).unwrap();
        prop_assert_eq!(terms[0].element.right + terms[1].element.right, combined.right);
        prop_assert_eq!(terms[0].element.left + terms[1].element.left, combined.left);
        prop_assert_eq!(cross_expand(&b1, &b2).unwrap(), cross_expand(&b2, &b1).unwrap());
    }

    #[test]
    fn canonical_form(elems in prop::collection::vec((bielem(), -3i64..=3, any::<bool>()), 0..8), seed in any::<u64>()) {
        let terms: Vec<Term<i64, i64>> = elems
            .iter()
            .map(|(e, k, cross)| Term { coeff: *k, element: e.clone().with_tag(if *cross { Tag::Cross } else { Tag::Diagonal }) })
            .collect();
        let sum = BiformalSum::from_terms(terms.clone());
        let again = BiformalSum::from_terms(sum.terms().to_vec());
        prop_assert!(again.tagged_eq(&sum));
        let mut shuffled = terms;
        let k = (seed as usize) % (shuffled.len() + 1);
        let len = shuffled.len();
        shuffled.rotate_left(k.min(len));
        shuffled.reverse();
        prop_assert!(BiformalSum::from_terms(shuffled).tagged_eq(&sum));
        prop_assert_eq!(BiformalSum::<i64, i64>::from_json(&sum.to_json()).unwrap(), sum);
    }

    #[test]
    fn bipoint_structure((r, l) in sources()) {
        let bp = outer_bipoint(&r, &l).unwrap();
        prop_assert!(bp.minors_vanish());
        let (d, od) = partition_bipoint(&bp);
        prop_assert_eq!((d.len(), od.len()), (r.len(), r.len() * r.len() - r.len()));
        prop_assert_eq!(&reassemble_grid(&d, &od).unwrap(), bp.entries());
        prop_assert_eq!(AlgebraicBipoint::from_json(&bp.to_json()).unwrap(), bp.clone());
        let sym = outer_bipoint(&l.iter().map(|x| -x.clone()).collect::<Vec<_>>(), &l).unwrap();
        prop_assert_eq!(project_bipoint_to_point(&sym).unwrap(), l);
    }

    #[test]
    fn cross_bipoints_match_expansion((r1, l1) in sources(), seed in 0u64..1000) {
        let n = r1.len();
        let r2: Vec<Rational> = (0..n).map(|k| rational(-((seed as i64 + k as i64) % 7), 1)).collect();
        let l2: Vec<Rational> = (0..n).map(|k| rational((seed as i64 * 3 + k as i64) % 5, 2)).collect();
        let bi = outer_bipoint(&r1, &l1).unwrap();
        let bj = outer_bipoint(&r2, &l2).unwrap();
        let cb = cross_bipoints(&bi, &bj).unwrap();
        let grids = expansion_grids(&bi, &bj).unwrap();
        let from_points: Vec<&Matrix<Rational>> = cb.general.iter().chain(&cb.cross).map(|b| b.entries()).collect();
        prop_assert_eq!(grids.iter().collect::<Vec<_>>(), from_points);
    }

    #[test]
    fn metric_conversion_round_trip(b in rat_grid()) {
        let n = b.rows();
        let g = b.transpose().mul(&b).unwrap().add(&Matrix::identity(n)).unwrap();
        let m = MetricComponents::new(MetricKind::Covariant, g).unwrap();
        prop_assert!(m.is_positive_definite());
        let up = convert_metric(&m, MetricKind::Contravariant).unwrap();
        prop_assert_eq!(convert_metric(&up, MetricKind::Covariant).unwrap(), m.clone());
        prop_assert_eq!(convert_metric(&m, MetricKind::Mixed).unwrap().matrix().clone(), Matrix::identity(n));
    }

    #[test]
    fn split_reconstructs(x in rat_grid()) {
        let n = x.rows();
        let el = BisemimoduleElement::new(x).unwrap();
        let (d, od) = tensor_split(&el);
        prop_assert_eq!(d.add(&od).unwrap(), el);
        prop_assert!(d.nonzero_count() <= n);
        prop_assert!(od.coeffs().diag().iter().all(|v| *v == rational(0, 1)));
    }

    #[test]
    fn mixed_product_develops((r1, l1) in sources(), (r2, l2) in sources()) {
        let n = r1.len().min(r2.len());
        let v = |c: &[Rational], right: bool| if right {
            SemimoduleVector::right(c[..n].to_vec()).unwrap()
        } else {
            SemimoduleVector::left(c[..n].to_vec()).unwrap()
        };
        let (xr, xr2, xl, xl2) = (v(&r1, true), v(&r2, true), v(&l1, false), v(&l2, false));
        let spec = InnerProductSpec::new(PairingMode::Diagonal, Stage::Mixed);
        let mp = |a: &SemimoduleVector<Rational>, b: &SemimoduleVector<Rational>| mixed_product(a, b, spec).unwrap();
        let whole = mp(&xr.plus(&xr2).unwrap(), &xl.plus(&xl2).unwrap());
        prop_assert_eq!(whole, mp(&xr, &xl) + mp(&xr, &xl2) + mp(&xr2, &xl) + mp(&xr2, &xl2));
        let at = |mode| mixed_product(&xr, &xl, InnerProductSpec::new(mode, Stage::Mixed)).unwrap();
        prop_assert_eq!(at(PairingMode::Extended), at(PairingMode::Diagonal) + at(PairingMode::OffDiagonal));
    }

    #[test]
    fn positivity_isometry_parallelogram(n in 1usize..=8, x in cvec(8), y in cvec(8)) {
        let x = SemimoduleVector::left(x[..n].to_vec()).unwrap();
        let y = SemimoduleVector::left(y[..n].to_vec()).unwrap();
        let spec = InnerProductSpec::new(PairingMode::Diagonal, Stage::Internal);
        let self_ip = inner_product(&conjugate_partner(&x).unwrap(), &x, spec).unwrap();
        prop_assert_eq!(self_ip.im, 0.0);
        prop_assert!(self_ip.re >= 0.0);
        prop_assert_eq!(self_ip.re == 0.0, x.coords().iter().all(|c| *c == Complex64::new(0.0, 0.0)));

        let x_r = x.involuted();
        let raised = riesz_b(&project_p(&x_r, Side::Left).unwrap(), &MetricComponents::identity(n)).unwrap();
        prop_assert_eq!(norm(&raised), norm(&x_r));

        let sq = |v: &SemimoduleVector<Complex64>| norm(v).powi(2);
        let lhs = sq(&x.plus(&y).unwrap()) + sq(&x.plus(&y.scaled(&Complex64::new(-1.0, 0.0))).unwrap());
        prop_assert!(rel_close(lhs, 2.0 * sq(&x) + 2.0 * sq(&y), 1e-12));
    }

    #[test]
    fn convolution_monoid(a in rat_vec(9), b in rat_vec(9), c in rat_vec(9)) {
        let h = build_group_bisemialgebra::<Rational>(&FiniteGroup::cyclic(3));
        let m = |v: &[Rational]| Matrix::from_fn(3, 3, |i, j| v[i * 3 + j].clone());
        let (a, b, c) = (m(&a), m(&b), m(&c));
        let conv = |x: &Matrix<Rational>, y: &Matrix<Rational>| convolution(x, y, &h).unwrap();
        prop_assert_eq!(conv(&conv(&a, &b), &c), conv(&a, &conv(&b, &c)));
        prop_assert_eq!(conv(&h.unit_counit(), &a), a.clone());
        prop_assert_eq!(conv(&a, &h.unit_counit()), a);
    }

    #[test]
    fn antipode_on_diagonal_pairs(a in rat_vec(6), b in rat_vec(6)) {
        let h = build_group_bisemialgebra::<Rational>(&FiniteGroup::symmetric3());
        let x = BisemialgebraElement::left_oriented(a.clone(), b);
        prop_assert_eq!(bilinear_antipode_inverse(&bilinear_antipode(&x, &h).unwrap(), &h).unwrap(), x);
        let d = BisemialgebraElement::left_oriented(a.clone(), a);
        let once = bilinear_antipode(&d, &h).unwrap();
        let (p, q) = once.as_pair();
        let twice = bilinear_antipode(&BisemialgebraElement::left_oriented(p.to_vec(), q.to_vec()), &h).unwrap();
        prop_assert_eq!(twice.as_pair(), d.as_pair());
    }

    #[test]
    fn action_is_a_homomorphism(p in pair(), q_ in pair(), seed in any::<u64>()) {
        let n = p.n();
        prop_assume!(q_.n() == n);
        let v_r: Vec<Rational> = (0..n).map(|k| rational(-(((seed >> k) % 5) as i64), 1)).collect();
        let v_l: Vec<Rational> = (0..n).map(|k| rational(((seed >> (2 * k)) % 7) as i64, 3)).collect();
        let first = bisemimodule_action(&p, &v_r, &v_l).unwrap();
        let second = bisemimodule_action(&q_, first.source_right(), first.source_left()).unwrap();
        let once = bisemimodule_action(&p.then(&q_).unwrap(), &v_r, &v_l).unwrap();
        prop_assert_eq!(&second, &once);
        prop_assert!(once.minors_vanish());
    }

    #[test]
    fn decomposition_reconstructs(p in pair()) {
        let a = p.product();
        for rule in [SplitRule::DeltaLeft, SplitRule::DeltaSqrt] {
            match bilinear_decompose(&a, rule) {
                Ok(pair) => prop_assert_eq!(pair.product(), a.clone()),
                Err(e) => prop_assert_eq!(e.name(), "SqrtUnavailable"),
            }
        }
        let json = decomposition_to_json(&a, SplitRule::DeltaLeft).unwrap();
        prop_assert_eq!(Matrix::<Rational>::from_json(&json["T_R"]).unwrap(), bilinear_decompose(&a, SplitRule::DeltaLeft).unwrap().t_r().clone());
        prop_assert_eq!(vector_from_json::<Rational>(&json["delta"]).unwrap(), gauss_ldu(&a).unwrap().delta);
    }

    #[test]
    fn function_space_invariants(m in 1usize..=16, r in cvec(16), l in cvec(16), w in prop::collection::vec(0.01f64..2.0, 16)) {
        let w = w[..m].to_vec();
        let fr = SampledFunction::new(r[..m].to_vec(), w.clone(), "g").unwrap();
        let fl = SampledFunction::new(l[..m].to_vec(), w.clone(), "g").unwrap();
        let bf = Bifunction::new(fr.clone(), fl.clone()).unwrap();
        let t = transform_bl_pl(&bf);
        for (a, b) in t.squared.phi_r().samples().iter().zip(t.squared.phi_l().samples()) {
            prop_assert_eq!(*a, b.conj());
        }
        let ip = weighted_inner(&fr, &fl).unwrap();
        prop_assert!(ip.norm_sqr() <= quadrature_l2_squared(&fr) * quadrature_l2_squared(&fl) * (1.0 + 1e-12));
        prop_assert_eq!(Bifunction::from_json(&bf.to_json()).unwrap(), bf);
    }

    #[test]
    fn vector_json_round_trip(v in rat_vec(5), z in cvec(5)) {
        prop_assert_eq!(vector_from_json::<Rational>(&vector_to_json(&v)).unwrap(), v);
        prop_assert_eq!(vector_from_json::<Complex64>(&vector_to_json(&z)).unwrap(), z);
    }
}
