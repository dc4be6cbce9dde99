//! Half-space splitting of point sets, algebraic bipoints and metric bookkeeping.
//!
//! An algebraic bipoint over `n` coordinates is the `n x n` grid of products
//! `(-a_i) * (a_j)` of a right source tuple by a left source tuple. Entries
//! with `i == j` are diagonal products, the rest off-diagonal.

use std::cmp::Ordering;

use serde_json::{json, Value};

use crate::bisemigroup::{cross_expand_terms, AdditiveCarrier, Bielement};
use crate::error::{ensure_len, Error, Result};
use crate::linalg::{vector_from_json, vector_to_json, Matrix};
use crate::matrix::gauss_ldu;
use crate::scalar::Scalar;

/// Points sorted into the two symmetric semispaces.
#[derive(Debug, Clone, PartialEq)]
pub struct SemispacePartition<S> {
    /// Points with every coordinate `>= 0`, including the origin.
    pub left: Vec<Vec<S>>,
    /// Points with every coordinate `<= 0` and at least one `< 0`.
    pub right: Vec<Vec<S>>,
    /// Points belonging to neither side.
    pub mixed: Vec<Vec<S>>,
}

pub fn split_solutions<S: Scalar>(points: &[Vec<S>]) -> SemispacePartition<S> {
    let mut partition = SemispacePartition {
        left: Vec::new(),
        right: Vec::new(),
        mixed: Vec::new(),
    };
    for p in points {
        let signs: Option<Vec<Ordering>> = p.iter().map(Scalar::real_sign).collect();
        let side = signs.map(|signs| {
            let nonneg = signs.iter().all(|s| *s != Ordering::Less);
            let nonpos = signs.iter().all(|s| *s != Ordering::Greater);
            (nonneg, nonpos)
        });
        match side {
            Some((true, _)) => partition.left.push(p.clone()),
            Some((false, true)) => partition.right.push(p.clone()),
            _ => partition.mixed.push(p.clone()),
        }
    }
    partition
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductMarker {
    Diagonal,
    OffDiagonal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraicBipoint<S> {
    source_right: Vec<S>,
    source_left: Vec<S>,
    entries: Matrix<S>,
}

/// Builds the bipoint whose entry `(i, j)` is `right[i] * left[j]`.
pub fn outer_bipoint<S: Scalar>(right: &[S], left: &[S]) -> Result<AlgebraicBipoint<S>> {
    ensure_len("bipoint sources", right.len(), left.len())?;
    if right.is_empty() {
        return Err(Error::DimensionMismatch {
            context: "bipoint sources",
            expected: 1,
            found: 0,
        });
    }
    let entries = Matrix::from_fn(right.len(), left.len(), |i, j| {
        right[i].clone() * left[j].clone()
    });
    Ok(AlgebraicBipoint {
        source_right: right.to_vec(),
        source_left: left.to_vec(),
        entries,
    })
}

impl<S: Scalar> AlgebraicBipoint<S> {
    pub fn n(&self) -> usize {
        self.source_right.len()
    }

    pub fn source_right(&self) -> &[S] {
        &self.source_right
    }

    pub fn source_left(&self) -> &[S] {
        &self.source_left
    }

    pub fn entries(&self) -> &Matrix<S> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.entries[(i, j)]
    }

    pub fn marker(&self, i: usize, j: usize) -> ProductMarker {
        if i == j {
            ProductMarker::Diagonal
        } else {
            ProductMarker::OffDiagonal
        }
    }

    /// Every 2x2 minor of the entry grid vanishes.
    pub fn minors_vanish(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (i + 1..n).all(|k| {
                (0..n).all(|j| {
                    (j + 1..n).all(|l| {
                        let d = self.entry(i, j).clone() * self.entry(k, l).clone()
                            - self.entry(i, l).clone() * self.entry(k, j).clone();
                        d.approx_eq(&S::zero())
                    })
                })
            })
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n(),
            "right": vector_to_json(&self.source_right),
            "left": vector_to_json(&self.source_left),
            "entries": self.entries.to_json(),
        })
    }

    /// Parses the JSON form and checks that the entries are the products of the sources.
    pub fn from_json(v: &Value) -> Result<Self> {
        let right = vector_from_json(v.get("right").unwrap_or(&Value::Null))?;
        let left = vector_from_json(v.get("left").unwrap_or(&Value::Null))?;
        let bp = outer_bipoint(&right, &left)?;
        if let Some(n) = v.get("n").and_then(Value::as_u64) {
            ensure_len("bipoint n", bp.n(), n as usize)?;
        }
        if let Some(entries) = v.get("entries") {
            let parsed = Matrix::<S>::from_json(entries)?;
            if !parsed.approx_eq(&bp.entries) {
                return Err(Error::Parse(
                    "bipoint entries are not the products of its sources".into(),
                ));
            }
        }
        Ok(bp)
    }
}

/// Splits the grid into its diagonal (n entries) and off-diagonal
/// (n^2 - n entries, row-major) parts.
pub fn partition_bipoint<S: Scalar>(bp: &AlgebraicBipoint<S>) -> (Vec<S>, Vec<S>) {
    let n = bp.n();
    let diagonal = bp.entries.diag();
    let off_diagonal = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| bp.entry(i, j).clone())
        .collect();
    (diagonal, off_diagonal)
}

/// Inverse of [`partition_bipoint`] on the entry grid.
pub fn reassemble_grid<S: Scalar>(diagonal: &[S], off_diagonal: &[S]) -> Result<Matrix<S>> {
    let n = diagonal.len();
    ensure_len("off-diagonal part", n * n - n, off_diagonal.len())?;
    let mut off = off_diagonal.iter();
    Ok(Matrix::from_fn(n, n, |i, j| {
        if i == j {
            diagonal[i].clone()
        } else {
            off.next().cloned().unwrap_or_else(S::zero)
        }
    }))
}

/// The two general bipoints together with the two cross bipoints obtained by
/// exchanging their left sources.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossBipoints<S> {
    pub general: [AlgebraicBipoint<S>; 2],
    pub cross: [AlgebraicBipoint<S>; 2],
}

pub fn cross_bipoints<S: Scalar>(
    bp_i: &AlgebraicBipoint<S>,
    bp_j: &AlgebraicBipoint<S>,
) -> Result<CrossBipoints<S>> {
    ensure_len("cross bipoints", bp_i.n(), bp_j.n())?;
    let ij = outer_bipoint(&bp_i.source_right, &bp_j.source_left)?;
    let ji = outer_bipoint(&bp_j.source_right, &bp_i.source_left)?;
    Ok(CrossBipoints {
        general: [bp_i.clone(), bp_j.clone()],
        cross: [ij, ji],
    })
}

/// Grids of the four terms produced by the cross-operation development of the
/// source bielements, in development order (two diagonal, then two cross).
pub fn expansion_grids<S>(
    bp_i: &AlgebraicBipoint<S>,
    bp_j: &AlgebraicBipoint<S>,
) -> Result<Vec<Matrix<S>>>
where
    S: Scalar,
    Vec<S>: AdditiveCarrier,
{
    let bi = Bielement::new(bp_i.source_right.clone(), bp_i.source_left.clone());
    let bj = Bielement::new(bp_j.source_right.clone(), bp_j.source_left.clone());
    cross_expand_terms(&bi, &bj)?
        .iter()
        .map(|t| outer_bipoint(&t.element.right, &t.element.left).map(|bp| bp.entries))
        .collect()
}

/// The classical point `(a_1, ..., a_n)` identified with a bipoint whose
/// sources are symmetric (`left = P_{R->L}(right)`).
pub fn project_bipoint_to_point<S: Scalar>(bp: &AlgebraicBipoint<S>) -> Result<Vec<S>> {
    for (k, (r, l)) in bp.source_right.iter().zip(&bp.source_left).enumerate() {
        if !r.involute().approx_eq(l) {
            return Err(Error::AsymmetricSources { index: k });
        }
    }
    Ok(bp.source_left.clone())
}

/// The bipoint on the projected bisemispace: `P_{R->L}` applied to every
/// right coordinate, so both sources coincide.
pub fn projected_bipoint<S: Scalar>(bp: &AlgebraicBipoint<S>) -> Result<AlgebraicBipoint<S>> {
    let projected: Vec<S> = bp.source_right.iter().map(Scalar::involute).collect();
    outer_bipoint(&projected, &bp.source_left)
}

/// Index type of a metric tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    /// `(0,2)`: `g_ij`.
    Covariant,
    /// `(1,1)`: `g_i^j`.
    Mixed,
    /// `(2,0)`: `g^ij`.
    Contravariant,
}

impl MetricKind {
    pub fn label(self) -> &'static str {
        match self {
            MetricKind::Covariant => "(0,2)",
            MetricKind::Mixed => "(1,1)",
            MetricKind::Contravariant => "(2,0)",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricComponents<S> {
    kind: MetricKind,
    g: Matrix<S>,
}

impl<S: Scalar> MetricComponents<S> {
    /// `g` must be square and symmetric (Hermitian on the complex backend).
    pub fn new(kind: MetricKind, g: Matrix<S>) -> Result<Self> {
        ensure_len("metric", g.rows(), g.cols())?;
        for i in 0..g.rows() {
            for j in i..g.cols() {
                if !g[(i, j)].approx_eq(&g[(j, i)].conj()) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(MetricComponents { kind, g })
    }

    pub fn identity(n: usize) -> Self {
        MetricComponents {
            kind: MetricKind::Covariant,
            g: Matrix::identity(n),
        }
    }

    pub fn kind(&self) -> MetricKind {
        self.kind
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    /// Sylvester's criterion: all pivots real and positive. Complex pivots
    /// of a Hermitian matrix carry rounding noise in the imaginary part, so
    /// "real" means equal to the conjugate within tolerance.
    pub fn is_positive_definite(&self) -> bool {
        match gauss_ldu(&self.g) {
            Ok(f) => f
                .delta
                .iter()
                .all(|d| d.approx_eq(&d.conj()) && d.to_complex().re > 0.0),
            Err(_) => false,
        }
    }
}

pub fn metric_component<S: Scalar>(g: &MetricComponents<S>, i: usize, j: usize) -> Result<S> {
    let n = g.dim();
    if i >= n || j >= n {
        return Err(Error::DimensionMismatch {
            context: "metric index",
            expected: n,
            found: i.max(j),
        });
    }
    Ok(g.g[(i, j)].clone())
}

/// Raises or lowers indices with `g^{-1}` / `g`.
///
/// Converting to `(1,1)` contracts one index against the inverse and yields
/// the Kronecker delta. A `(1,1)` metric no longer determines `g`, so
/// converting away from it is an error.
pub fn convert_metric<S: Scalar>(
    g: &MetricComponents<S>,
    target: MetricKind,
) -> Result<MetricComponents<S>> {
    use MetricKind::*;
    let out = match (g.kind, target) {
        (a, b) if a == b => g.g.clone(),
        (Covariant, Contravariant) | (Contravariant, Covariant) => g.g.inverse()?,
        (Covariant, Mixed) | (Contravariant, Mixed) => {
            let inv = g.g.inverse()?;
            inv.mul(&g.g)?
        }
        (Mixed, _) => return Err(Error::MetricUnderdetermined),
        _ => unreachable!("all kind pairs covered"),
    };
    Ok(MetricComponents {
        kind: target,
        g: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Rational};

    fn qv(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rational(x, 1)).collect()
    }

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| qv(r)).collect()).unwrap()
    }

    #[test]
    fn split_by_sign() {
        let p = split_solutions(&[qv(&[1, 2]), qv(&[-1, -2])]);
        assert_eq!(p.left, vec![qv(&[1, 2])]);
        assert_eq!(p.right, vec![qv(&[-1, -2])]);
        let origin = split_solutions(&[qv(&[0, 0])]);
        assert_eq!(origin.left.len(), 1);
        assert!(origin.right.is_empty());
        let mixed = split_solutions(&[qv(&[1, -2])]);
        assert!(mixed.left.is_empty() && mixed.right.is_empty());
        assert_eq!(mixed.mixed, vec![qv(&[1, -2])]);
    }

    #[test]
    fn outer_bipoint_grid() {
        let bp = outer_bipoint(&qv(&[-1, -2]), &qv(&[1, 2])).unwrap();
        assert_eq!(bp.entries(), &qm(&[&[-1, -2], &[-2, -4]]));
        assert_eq!(bp.marker(0, 0), ProductMarker::Diagonal);
        assert_eq!(bp.marker(0, 1), ProductMarker::OffDiagonal);
        assert!(bp.minors_vanish());
        let one = outer_bipoint(&qv(&[-1]), &qv(&[1])).unwrap();
        assert_eq!(one.entries(), &qm(&[&[-1]]));
        let zero = outer_bipoint(&qv(&[0, 0]), &qv(&[3, 4])).unwrap();
        assert_eq!(zero.entries(), &Matrix::zeros(2, 2));
        assert!(outer_bipoint(&qv(&[1]), &qv(&[1, 2])).is_err());
    }

    #[test]
    fn partition_and_reassemble() {
        let bp = outer_bipoint(&qv(&[-1, -2]), &qv(&[1, 2])).unwrap();
        let (d, od) = partition_bipoint(&bp);
        assert_eq!(d, qv(&[-1, -4]));
        assert_eq!(od, qv(&[-2, -2]));
        assert_eq!(&reassemble_grid(&d, &od).unwrap(), bp.entries());
        let (d1, od1) = partition_bipoint(&outer_bipoint(&qv(&[-3]), &qv(&[3])).unwrap());
        assert_eq!(d1.len(), 1);
        assert!(od1.is_empty());
    }

    #[test]
    fn cross_bipoint_pair() {
        let bi = outer_bipoint(&qv(&[-1, 0]), &qv(&[1, 0])).unwrap();
        let bj = outer_bipoint(&qv(&[0, -1]), &qv(&[0, 1])).unwrap();
        let c = cross_bipoints(&bi, &bj).unwrap();
        assert_eq!(c.cross[0].entries(), &qm(&[&[0, -1], &[0, 0]]));
        assert_eq!(c.cross[1].entries(), &qm(&[&[0, 0], &[-1, 0]]));
        let same = cross_bipoints(&bi, &bi).unwrap();
        assert_eq!(same.cross[0], same.general[0]);
        assert_eq!(same.cross[1], same.general[1]);

        let grids = expansion_grids(&bi, &bj).unwrap();
        assert_eq!(&grids[0], bi.entries());
        assert_eq!(&grids[1], bj.entries());
        assert_eq!(&grids[2], c.cross[0].entries());
        assert_eq!(&grids[3], c.cross[1].entries());
    }

    #[test]
    fn projection_to_classical_point() {
        let bp = outer_bipoint(&qv(&[-1, -2]), &qv(&[1, 2])).unwrap();
        assert_eq!(project_bipoint_to_point(&bp).unwrap(), qv(&[1, 2]));
        let zero = outer_bipoint(&qv(&[0, 0]), &qv(&[0, 0])).unwrap();
        assert_eq!(project_bipoint_to_point(&zero).unwrap(), qv(&[0, 0]));
        let skew = outer_bipoint(&qv(&[-1, -2]), &qv(&[3, 4])).unwrap();
        assert_eq!(
            project_bipoint_to_point(&skew),
            Err(Error::AsymmetricSources { index: 0 })
        );
        let projected = projected_bipoint(&bp).unwrap();
        assert_eq!(projected.source_right(), projected.source_left());
        assert_eq!(projected.entries(), &qm(&[&[1, 2], &[2, 4]]));
    }

    #[test]
    fn metric_conversions() {
        let id = MetricComponents::<Rational>::identity(3);
        assert_eq!(
            convert_metric(&id, MetricKind::Mixed).unwrap().matrix(),
            &Matrix::identity(3)
        );

        let g = MetricComponents::new(MetricKind::Covariant, qm(&[&[2, 0], &[0, 3]])).unwrap();
        let up = convert_metric(&g, MetricKind::Contravariant).unwrap();
        assert_eq!(
            up.matrix(),
            &Matrix::diagonal(&[rational(1, 2), rational(1, 3)])
        );
        let back = convert_metric(&up, MetricKind::Covariant).unwrap();
        assert_eq!(back, g);
        assert_eq!(
            convert_metric(
                &convert_metric(&g, MetricKind::Mixed).unwrap(),
                MetricKind::Covariant
            ),
            Err(Error::MetricUnderdetermined)
        );

        let half = Matrix::from_rows(vec![
            vec![rational(1, 1), rational(1, 2)],
            vec![rational(1, 2), rational(1, 1)],
        ])
        .unwrap();
        let g = MetricComponents::new(MetricKind::Covariant, half).unwrap();
        assert_eq!(metric_component(&g, 0, 1).unwrap(), rational(1, 2));
        assert!(g.is_positive_definite());
        assert!(metric_component(&g, 2, 0).is_err());

        assert!(MetricComponents::new(MetricKind::Covariant, qm(&[&[1, 2], &[3, 1]])).is_err());
        let singular =
            MetricComponents::new(MetricKind::Covariant, qm(&[&[1, 1], &[1, 1]])).unwrap();
        assert_eq!(
            convert_metric(&singular, MetricKind::Contravariant),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn bipoint_json_round_trip() {
        let bp = outer_bipoint(&qv(&[-1, -2]), &qv(&[1, 2])).unwrap();
        let json = bp.to_json();
        assert_eq!(json["n"], 2);
        assert_eq!(json["entries"][1][1], "-4/1");
        assert_eq!(AlgebraicBipoint::<Rational>::from_json(&json).unwrap(), bp);
    }
}
