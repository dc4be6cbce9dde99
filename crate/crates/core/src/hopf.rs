//! Hopf structure on finite group algebras, the bilinear antipode on
//! two-factor elements, and the `*`-involution.
//!
//! Structure constants are stored densely: `mu[i][j][k]` is the coefficient
//! of `e_k` in `e_i e_j`, and `delta[i][j][k]` the coefficient of
//! `e_j (x) e_k` in `Delta(e_i)`. Linear maps are matrices whose column `j` is
//! the image of `e_j`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::{ensure_len, Error, Result};
use crate::linalg::Matrix;
use crate::report::{AxiomReport, LawTally};
use crate::scalar::{Complex64, Scalar};

/// A finite group given by its Cayley table over elements `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!(
                    "entry {bad} in row {i} is not an element"
                )));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let inverses = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("element {g} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            table,
            identity,
            inverses,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Self::from_table(format!("Z{n}"), table).expect("cyclic table is a group")
    }

    /// `Z2 x Z2`, elements encoded as two bits.
    pub fn klein() -> Self {
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        Self::from_table("Z2xZ2", table).expect("klein table is a group")
    }

    /// The symmetric group on three letters, elements listed in
    /// lexicographic order of their permutation images.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| {
            perms
                .iter()
                .position(|q| *q == p)
                .expect("closed under composition")
        };
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index([a[b[0]], a[b[1]], a[b[2]]]))
                    .collect()
            })
            .collect();
        Self::from_table("S3", table).expect("S3 table is a group")
    }

    /// Parses `z<n>`, `z2xz2`, `klein` or `s3`.
    pub fn named(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "s3" => Ok(Self::symmetric3()),
            "z2xz2" | "klein" => Ok(Self::klein()),
            other => other
                .strip_prefix('z')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .map(Self::cyclic)
                .ok_or_else(|| Error::InvalidGroup(format!("unknown group `{name}`"))),
        }
    }

    /// A JSON array of rows, or an object with a `table` field.
    pub fn from_json(v: &Value) -> Result<Self> {
        let (name, rows) = match v {
            Value::Object(map) => (
                map.get("name").and_then(Value::as_str).unwrap_or("table"),
                map.get("table").unwrap_or(&Value::Null),
            ),
            other => ("table", other),
        };
        let table = rows
            .as_array()
            .ok_or_else(|| Error::InvalidGroup("table must be an array of rows".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::InvalidGroup("rows must be arrays".into()))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|x| x as usize)
                            .ok_or_else(|| Error::InvalidGroup(format!("bad element {x}")))
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Self::from_table(name, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HopfData<S> {
    name: String,
    dim: usize,
    mu: Vec<S>,
    unit: Vec<S>,
    comul: Vec<S>,
    counit: Vec<S>,
    antipode: Matrix<S>,
}

/// The group algebra `k[G]` with `Delta(g) = g (x) g`, `eps(g) = 1` and
/// `S(g) = g^-1`.
pub fn build_group_bisemialgebra<S: Scalar>(group: &FiniteGroup) -> HopfData<S> {
    let n = group.order();
    let mut mu = vec![S::zero(); n * n * n];
    let mut comul = vec![S::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            mu[(i * n + j) * n + group.op(i, j)] = S::one();
        }
        comul[(i * n + i) * n + i] = S::one();
    }
    let mut unit = vec![S::zero(); n];
    unit[group.identity()] = S::one();
    HopfData {
        name: group.name().to_string(),
        dim: n,
        mu,
        unit,
        comul,
        counit: vec![S::one(); n],
        antipode: Matrix::from_fn(n, n, |i, j| {
            if group.inverse(j) == i {
                S::one()
            } else {
                S::zero()
            }
        }),
    }
}

type Sparse<S> = Vec<(usize, S)>;

impl<S: Scalar> HopfData<S> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mu(&self, i: usize, j: usize, k: usize) -> &S {
        &self.mu[(i * self.dim + j) * self.dim + k]
    }

    pub fn comul(&self, i: usize, j: usize, k: usize) -> &S {
        &self.comul[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit(&self) -> &[S] {
        &self.unit
    }

    pub fn counit(&self) -> &[S] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix<S> {
        &self.antipode
    }

    /// The same data with the antipode replaced, e.g. to inject a fault.
    pub fn with_antipode(&self, antipode: Matrix<S>) -> Result<Self> {
        ensure_len("antipode rows", self.dim, antipode.rows())?;
        ensure_len("antipode columns", self.dim, antipode.cols())?;
        Ok(HopfData {
            antipode,
            name: format!("{} (replaced antipode)", self.name),
            ..self.clone()
        })
    }

    pub fn basis(&self, i: usize) -> Vec<S> {
        (0..self.dim)
            .map(|k| if k == i { S::one() } else { S::zero() })
            .collect()
    }

    fn sparse(v: &[S]) -> Sparse<S> {
        v.iter()
            .cloned()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// `Delta(e_i)` as a sparse list of `((j, k), coefficient)`.
    fn comul_terms(&self, i: usize) -> Vec<((usize, usize), S)> {
        let n = self.dim;
        (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .map(|(j, k)| ((j, k), self.comul(i, j, k).clone()))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn multiply(&self, a: &[S], b: &[S]) -> Result<Vec<S>> {
        ensure_len("algebra element", self.dim, a.len())?;
        ensure_len("algebra element", self.dim, b.len())?;
        let mut out = vec![S::zero(); self.dim];
        for (i, x) in Self::sparse(a) {
            for (j, y) in Self::sparse(b) {
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.mu(i, j, k);
                    if !c.is_zero() {
                        *slot = slot.clone() + x.clone() * y.clone() * c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Delta(a)` as a `dim x dim` coefficient grid over `e_j (x) e_k`.
    pub fn comultiply(&self, a: &[S]) -> Result<Matrix<S>> {
        ensure_len("algebra element", self.dim, a.len())?;
        let mut out = Matrix::<S>::zeros(self.dim, self.dim);
        for (i, x) in Self::sparse(a) {
            for ((j, k), c) in self.comul_terms(i) {
                out[(j, k)] = out[(j, k)].clone() + x.clone() * c;
            }
        }
        Ok(out)
    }

    pub fn epsilon(&self, a: &[S]) -> S {
        diagonal(&self.counit, a)
    }

    /// `eta o eps`, the unit for convolution.
    pub fn unit_counit(&self) -> Matrix<S> {
        Matrix::from_fn(self.dim, self.dim, |i, j| {
            self.unit[i].clone() * self.counit[j].clone()
        })
    }

    fn product_in_tensor_square(&self, x: &Matrix<S>, y: &Matrix<S>) -> Matrix<S> {
        let n = self.dim;
        let mut out = Matrix::<S>::zeros(n, n);
        for p in 0..n {
            for q in 0..n {
                if x[(p, q)].is_zero() {
                    continue;
                }
                for r in 0..n {
                    for s in 0..n {
                        if y[(r, s)].is_zero() {
                            continue;
                        }
                        let w = x[(p, q)].clone() * y[(r, s)].clone();
                        for a in 0..n {
                            if self.mu(p, r, a).is_zero() {
                                continue;
                            }
                            for b in 0..n {
                                if self.mu(q, s, b).is_zero() {
                                    continue;
                                }
                                out[(a, b)] = out[(a, b)].clone()
                                    + w.clone()
                                        * self.mu(p, r, a).clone()
                                        * self.mu(q, s, b).clone();
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn diagonal<S: Scalar>(x: &[S], y: &[S]) -> S {
    x.iter()
        .zip(y)
        .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

fn show_vec<S: Scalar>(v: &[S]) -> String {
    format!(
        "[{}]",
        v.iter().map(Scalar::render).collect::<Vec<_>>().join(", ")
    )
}

fn vec_eq<S: Scalar>(a: &[S], b: &[S]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.approx_eq(y))
}

/// `h1 * h2 = mu o (h1 (x) h2) o Delta`.
pub fn convolution<S: Scalar>(
    h1: &Matrix<S>,
    h2: &Matrix<S>,
    h: &HopfData<S>,
) -> Result<Matrix<S>> {
    for m in [h1, h2] {
        ensure_len("map rows", h.dim, m.rows())?;
        ensure_len("map columns", h.dim, m.cols())?;
    }
    let n = h.dim;
    let columns_1 = h1.transpose();
    let columns_2 = h2.transpose();
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        let mut image = vec![S::zero(); n];
        for ((j, k), c) in h.comul_terms(i) {
            let prod = h.multiply(columns_1.row(j), columns_2.row(k))?;
            for (slot, v) in image.iter_mut().zip(prod) {
                *slot = slot.clone() + c.clone() * v;
            }
        }
        for (r, v) in image.into_iter().enumerate() {
            out[(r, i)] = v;
        }
    }
    Ok(out)
}

/// Every Hopf law evaluated on all basis elements, pairs or triples.
pub fn hopf_axiom_check<S: Scalar>(h: &HopfData<S>) -> AxiomReport {
    let n = h.dim;
    let e = |i: usize| h.basis(i);
    let mut assoc = LawTally::new("associativity");
    let mut unit = LawTally::new("unit");
    let mut coassoc = LawTally::new("coassociativity");
    let mut counit = LawTally::new("counit");
    let mut comul_mult = LawTally::new("comultiplication-multiplicative");
    let mut counit_mult = LawTally::new("counit-multiplicative");
    let mut unit_coalg = LawTally::new("unit-coalgebra-map");
    let mut antipode_left = LawTally::new("antipode-left");
    let mut antipode_right = LawTally::new("antipode-right");

    let mul = |a: &[S], b: &[S]| {
        h.multiply(a, b)
            .expect("basis elements have the algebra dimension")
    };
    for i in 0..n {
        for j in 0..n {
            let ij = mul(&e(i), &e(j));
            for k in 0..n {
                let lhs = mul(&ij, &e(k));
                let rhs = mul(&e(i), &mul(&e(j), &e(k)));
                assoc.record(vec_eq(&lhs, &rhs), || {
                    format!("e{i}, e{j}, e{k}: {} vs {}", show_vec(&lhs), show_vec(&rhs))
                });
            }
            let lhs = h.comultiply(&ij).expect("dimension");
            let rhs = h.product_in_tensor_square(
                &h.comultiply(&e(i)).expect("dimension"),
                &h.comultiply(&e(j)).expect("dimension"),
            );
            comul_mult.record(lhs.approx_eq(&rhs), || format!("e{i}, e{j}"));
            counit_mult.record(
                h.epsilon(&ij)
                    .approx_eq(&(h.epsilon(&e(i)) * h.epsilon(&e(j)))),
                || format!("e{i}, e{j}"),
            );
        }

        unit.record(
            vec_eq(&mul(&h.unit, &e(i)), &e(i)) && vec_eq(&mul(&e(i), &h.unit), &e(i)),
            || format!("e{i}"),
        );

        // (Delta (x) id) Delta and (id (x) Delta) Delta, compared on e_a (x) e_b (x) e_c.
        let mut left = vec![S::zero(); n * n * n];
        let mut right = vec![S::zero(); n * n * n];
        for ((j, k), c) in h.comul_terms(i) {
            for ((a, b), d) in h.comul_terms(j) {
                let slot = &mut left[(a * n + b) * n + k];
                *slot = slot.clone() + c.clone() * d;
            }
            for ((b, cc), d) in h.comul_terms(k) {
                let slot = &mut right[(j * n + b) * n + cc];
                *slot = slot.clone() + c.clone() * d;
            }
        }
        coassoc.record(vec_eq(&left, &right), || format!("e{i}"));

        let delta = h.comultiply(&e(i)).expect("dimension");
        let first: Vec<S> = (0..n)
            .map(|k| diagonal(&h.counit, delta.transpose().row(k)))
            .collect();
        let second: Vec<S> = (0..n).map(|j| diagonal(delta.row(j), &h.counit)).collect();
        counit.record(vec_eq(&first, &e(i)) && vec_eq(&second, &e(i)), || {
            format!("e{i}")
        });
    }

    let unit_delta = h.comultiply(&h.unit).expect("dimension");
    let unit_unit = Matrix::from_fn(n, n, |a, b| h.unit[a].clone() * h.unit[b].clone());
    unit_coalg.record(
        unit_delta.approx_eq(&unit_unit) && h.epsilon(&h.unit).approx_eq(&S::one()),
        || format!("unit {}", show_vec(&h.unit)),
    );

    let id = Matrix::identity(n);
    let target = h.unit_counit();
    for (tally, lhs) in [
        (&mut antipode_left, convolution(&h.antipode, &id, h)),
        (&mut antipode_right, convolution(&id, &h.antipode, h)),
    ] {
        let lhs = lhs.expect("maps have the algebra dimension");
        for i in 0..n {
            let got = lhs.transpose().row(i).to_vec();
            let want = target.transpose().row(i).to_vec();
            tally.record(vec_eq(&got, &want), || {
                format!(
                    "g = e{i}: got {}, expected {}",
                    show_vec(&got),
                    show_vec(&want)
                )
            });
        }
    }

    AxiomReport {
        subject: h.name.clone(),
        verdicts: [
            assoc,
            unit,
            coassoc,
            counit,
            comul_mult,
            counit_mult,
            unit_coalg,
            antipode_left,
            antipode_right,
        ]
        .into_iter()
        .map(LawTally::finish)
        .collect(),
    }
}

/// Which pair of factors an element lives in: `A_{R(P)} (x) A_L` (`LeftBi`)
/// or `A_{L(P)} (x) A_R` (`RightBi`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    LeftBi,
    RightBi,
}

impl Orientation {
    fn name(self) -> &'static str {
        match self {
            Orientation::LeftBi => "left-oriented",
            Orientation::RightBi => "right-oriented",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BisemialgebraElement<S> {
    pub left_factor: Vec<S>,
    pub right_factor: Vec<S>,
    pub orientation: Orientation,
}

impl<S: Scalar> BisemialgebraElement<S> {
    /// An element of `A_{R(P)} (x) A_L`, written `(a, b)` with `a` the
    /// projected right factor.
    pub fn left_oriented(a: Vec<S>, b: Vec<S>) -> Self {
        BisemialgebraElement {
            right_factor: a,
            left_factor: b,
            orientation: Orientation::LeftBi,
        }
    }

    /// The two factors in the written order of the orientation.
    pub fn as_pair(&self) -> (&[S], &[S]) {
        match self.orientation {
            Orientation::LeftBi => (&self.right_factor, &self.left_factor),
            Orientation::RightBi => (&self.left_factor, &self.right_factor),
        }
    }

    fn expect(&self, orientation: Orientation) -> Result<()> {
        if self.orientation == orientation {
            Ok(())
        } else {
            Err(Error::WrongOrientation {
                expected: orientation.name(),
            })
        }
    }
}

/// `S_b: (a, b) -> (S b, S a)`, exchanging the orientation. Coefficients are
/// carried over unchanged.
pub fn bilinear_antipode<S: Scalar>(
    x: &BisemialgebraElement<S>,
    h: &HopfData<S>,
) -> Result<BisemialgebraElement<S>> {
    x.expect(Orientation::LeftBi)?;
    Ok(BisemialgebraElement {
        left_factor: h.antipode.mul_vec(&x.left_factor)?,
        right_factor: h.antipode.mul_vec(&x.right_factor)?,
        orientation: Orientation::RightBi,
    })
}

/// `S_b^-1`, using the inverse of the antipode matrix.
pub fn bilinear_antipode_inverse<S: Scalar>(
    x: &BisemialgebraElement<S>,
    h: &HopfData<S>,
) -> Result<BisemialgebraElement<S>> {
    x.expect(Orientation::RightBi)?;
    let inv = h.antipode.inverse()?;
    Ok(BisemialgebraElement {
        left_factor: inv.mul_vec(&x.left_factor)?,
        right_factor: inv.mul_vec(&x.right_factor)?,
        orientation: Orientation::LeftBi,
    })
}

/// `a* = S(conj(a))`, the left-to-right involution.
pub fn star<S: Scalar>(a: &[S], h: &HopfData<S>) -> Result<Vec<S>> {
    let conj: Vec<S> = a.iter().map(Scalar::conj).collect();
    h.antipode.mul_vec(&conj)
}

/// The right-to-left involution, `conj(S^-1 b)`.
pub fn star_inverse<S: Scalar>(b: &[S], h: &HopfData<S>) -> Result<Vec<S>> {
    Ok(h.antipode
        .inverse()?
        .mul_vec(b)?
        .iter()
        .map(Scalar::conj)
        .collect())
}

/// Samples `samples` coefficient pairs from `seed` and checks that `*` is
/// conjugate-linear, reverses products, is inverted by the right-to-left
/// map, and is its own inverse.
pub fn star_involution_check(h: &HopfData<Complex64>, samples: usize, seed: u64) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = h.dim;
    let mut conj_linear = LawTally::new("conjugate-linearity");
    let mut anti = LawTally::new("antimultiplicativity");
    let mut inverse = LawTally::new("inverse-involution");
    let mut double = LawTally::new("double-involution");

    for _ in 0..samples.max(1) {
        let a: Vec<Complex64> = (0..n).map(|_| Complex64::sample_any(&mut rng)).collect();
        let b: Vec<Complex64> = (0..n).map(|_| Complex64::sample_any(&mut rng)).collect();
        let alpha = Complex64::sample_any(&mut rng);
        let witness = || format!("a={} b={}", show_vec(&a), show_vec(&b));
        let st = |v: &[Complex64]| star(v, h).ok();

        let ok = (|| {
            let combo: Vec<Complex64> = a.iter().zip(&b).map(|(x, y)| alpha * x + y).collect();
            let lhs = st(&combo)?;
            let rhs: Vec<Complex64> = st(&a)?
                .iter()
                .zip(st(&b)?)
                .map(|(x, y)| alpha.conj() * x + y)
                .collect();
            Some(vec_eq(&lhs, &rhs))
        })();
        conj_linear.record(ok == Some(true), witness);

        let ok = (|| {
            let lhs = st(&h.multiply(&a, &b).ok()?)?;
            let rhs = h.multiply(&st(&b)?, &st(&a)?).ok()?;
            Some(vec_eq(&lhs, &rhs))
        })();
        anti.record(ok == Some(true), witness);

        let ok = (|| Some(vec_eq(&star_inverse(&st(&a)?, h).ok()?, &a)))();
        inverse.record(ok == Some(true), witness);

        let ok = (|| Some(vec_eq(&st(&st(&a)?)?, &a)))();
        double.record(ok == Some(true), witness);
    }

    AxiomReport {
        subject: format!("{} star", h.name),
        verdicts: [conj_linear, anti, inverse, double]
            .into_iter()
            .map(LawTally::finish)
            .collect(),
    }
}
