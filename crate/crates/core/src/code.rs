//! Linear codes over F_q, Reed–Solomon and generalized Reed–Solomon
//! constructions, Euclidean and Hermitian duals, and the Hermitian
//! self-duality conditions on GRS weights.

use std::sync::OnceLock;

use thiserror::Error;

use crate::field::{Elem, Field, FieldError};
use crate::linalg::{self, Matrix};
use crate::proj::ProjPoint;
use crate::ErrorCode;

/// Default cap on the number of messages enumerated by distance searches.
pub const DEFAULT_SEARCH_BOUND: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("evaluation points are not distinct")]
    DuplicatePoints,
    #[error("degree bound k = {k} exceeds the length n = {n}")]
    DegreeTooLarge { k: usize, n: usize },
    #[error("weight vector contains a zero entry")]
    ZeroWeight,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{n} points exceed the maximum {max} for this construction")]
    TooManyPoints { n: usize, max: usize },
    #[error("search over {size} candidates exceeds the bound {bound}")]
    SearchBoundExceeded { size: u64, bound: u64 },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("no (q+1)-th root of the required weight value exists")]
    NoRoot,
    #[error("codes live over different fields")]
    FieldMismatch,
}

impl ErrorCode for CodeError {
    fn code(&self) -> &'static str {
        match self {
            CodeError::Field(e) => e.code(),
            CodeError::DuplicatePoints => "DuplicatePoints",
            CodeError::DegreeTooLarge { .. } => "DegreeTooLarge",
            CodeError::ZeroWeight => "ZeroWeight",
            CodeError::LengthMismatch { .. } => "LengthMismatch",
            CodeError::TooManyPoints { .. } => "TooManyPoints",
            CodeError::SearchBoundExceeded { .. } => "SearchBoundExceeded",
            CodeError::ZeroCode => "ZeroCode",
            CodeError::NoRoot => "NoRoot",
            CodeError::FieldMismatch => "FieldMismatch",
        }
    }
}

/// A k-dimensional subspace of F_q^n, stored by its reduced echelon
/// generator so that equal codes compare equal.
#[derive(Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    generator: Matrix,
    min_distance: OnceLock<usize>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        let min_distance = OnceLock::new();
        if let Some(&d) = self.min_distance.get() {
            let _ = min_distance.set(d);
        }
        LinearCode { field: self.field.clone(), n: self.n, generator: self.generator.clone(), min_distance }
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.generator == other.generator
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// The row space of `generator` (any rank; dependent rows are dropped).
    pub fn from_generator(field: &Field, generator: &Matrix) -> LinearCode {
        let (g, _) = generator.rref(field);
        LinearCode { field: field.clone(), n: generator.cols(), generator: g, min_distance: OnceLock::new() }
    }

    pub fn from_rows(field: &Field, n: usize, rows: &[Vec<Elem>]) -> LinearCode {
        LinearCode::from_generator(field, &Matrix::from_rows(n, rows))
    }

    pub fn zero(field: &Field, n: usize) -> LinearCode {
        LinearCode::from_generator(field, &Matrix::zeros(0, n))
    }

    pub fn full(field: &Field, n: usize) -> LinearCode {
        LinearCode::from_generator(field, &Matrix::identity(n))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// Generator in reduced row echelon form.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// Minimum distance if it has already been computed.
    pub fn known_min_distance(&self) -> Option<usize> {
        self.min_distance.get().copied()
    }

    /// Encodes a message against the echelon generator.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>, CodeError> {
        if message.len() != self.k() {
            return Err(CodeError::LengthMismatch { expected: self.k(), got: message.len() });
        }
        Ok(self.generator.vec_mul(&self.field, message))
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.n && self.generator.row_space_contains(&self.field, v)
    }

    /// Whether `self ⊆ other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.field == other.field
            && self.n == other.n
            && other.generator.row_space_contains_all(&self.field, &self.generator)
    }

    /// Parity-check matrix: rows span the Euclidean dual.
    pub fn parity_check(&self) -> Matrix {
        self.generator.kernel(&self.field)
    }

    pub fn dual_euclidean(&self) -> LinearCode {
        LinearCode::from_generator(&self.field, &self.parity_check())
    }

    /// `{v : Σ c_i v_i^q = 0 for all c ∈ C}` over F_{q²}.
    pub fn dual_hermitian(&self) -> Result<LinearCode, CodeError> {
        let conj = self.conjugate()?;
        Ok(conj.dual_euclidean())
    }

    /// Coordinatewise image under `x ↦ x^q` on F_{q²}.
    pub fn conjugate(&self) -> Result<LinearCode, CodeError> {
        let f = &self.field;
        let mut rows = Vec::with_capacity(self.k());
        for i in 0..self.k() {
            rows.push(self.generator.row(i).iter().map(|&x| f.conjugate(x)).collect::<Result<Vec<_>, _>>()?);
        }
        Ok(LinearCode::from_rows(f, self.n, &rows))
    }

    pub fn is_hermitian_self_orthogonal(&self) -> Result<bool, CodeError> {
        Ok(self.is_subcode_of(&self.dual_hermitian()?))
    }

    pub fn is_euclidean_self_orthogonal(&self) -> bool {
        self.is_subcode_of(&self.dual_euclidean())
    }

    /// All codewords, in message order. Only for small codes.
    pub fn codewords(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let mut out = vec![vec![Elem::ZERO; self.n]];
        for i in 0..self.k() {
            let row = self.generator.row(i);
            let mut next = Vec::with_capacity(out.len() * f.q() as usize);
            for c in f.elements() {
                for w in &out {
                    next.push(linalg::vec_add(f, w, &linalg::vec_scale(f, c, row)));
                }
            }
            out = next;
        }
        out
    }

    /// Exact minimum Hamming weight of a nonzero codeword, by enumeration.
    pub fn min_distance(&self) -> Result<usize, CodeError> {
        self.min_distance_bounded(DEFAULT_SEARCH_BOUND)
    }

    pub fn min_distance_bounded(&self, bound: u64) -> Result<usize, CodeError> {
        if let Some(&d) = self.min_distance.get() {
            return Ok(d);
        }
        if self.k() == 0 {
            return Err(CodeError::ZeroCode);
        }
        let d = min_weight_search(&self.field, &self.generator, None, &linalg::weight, bound)?
            .expect("a nonzero code has nonzero words");
        let _ = self.min_distance.set(d);
        Ok(d)
    }

    /// Minimum weight over `self ∖ sub`; `None` when `self ⊆ sub`.
    pub fn min_distance_outside(&self, sub: &LinearCode, bound: u64) -> Result<Option<usize>, CodeError> {
        if self.field != sub.field {
            return Err(CodeError::FieldMismatch);
        }
        if self.is_subcode_of(sub) {
            return Ok(None);
        }
        min_weight_search(&self.field, &self.generator, Some(&sub.generator), &linalg::weight, bound)
    }

    /// The subcode of vectors with all entries in the image of `emb`,
    /// returned as a code over the small field.
    pub fn subfield_subcode(&self, emb: &crate::field::Embedding) -> Result<LinearCode, CodeError> {
        let (small, big) = (emb.small(), emb.big());
        if big != &self.field {
            return Err(CodeError::FieldMismatch);
        }
        let prime = Field::prime(small.p())?;
        let (n, s, r) = (self.n, small.r() as usize, big.r() as usize);
        let h = self.parity_check();
        // Unknowns y[i*s + t] ∈ F_p with c_i = Σ_t y[i*s+t] β_t, β the basis of the
        // small field. Each check row gives r equations over F_p.
        let beta: Vec<Elem> = small.basis().iter().map(|&b| emb.map(b)).collect();
        let mut sys = Matrix::zeros(0, n * s);
        for row in 0..h.rows() {
            let mut eqs = vec![vec![Elem::ZERO; n * s]; r];
            for i in 0..n {
                for (t, &b) in beta.iter().enumerate() {
                    let coeff = big.basis_expand(big.mul(h.get(row, i), b));
                    for (e, &c) in coeff.iter().enumerate() {
                        eqs[e][i * s + t] = Elem(c);
                    }
                }
            }
            for e in eqs {
                sys.push_row(&e);
            }
        }
        let ker = sys.kernel(&prime);
        let rows: Vec<Vec<Elem>> = (0..ker.rows())
            .map(|j| {
                (0..n)
                    .map(|i| {
                        let coeffs: Vec<u32> = (0..s).map(|t| ker.get(j, i * s + t).0).collect();
                        small.basis_combine(&coeffs).expect("coefficients in range")
                    })
                    .collect()
            })
            .collect();
        Ok(LinearCode::from_rows(small, n, &rows))
    }

    /// Extension of scalars along `emb`: the same generator read over `big`.
    pub fn extend_scalars(&self, emb: &crate::field::Embedding) -> LinearCode {
        let rows: Vec<Vec<Elem>> =
            self.generator.row_vecs().into_iter().map(|r| r.into_iter().map(|x| emb.map(x)).collect()).collect();
        LinearCode::from_rows(emb.big(), self.n, &rows)
    }
}

/// Number of messages with first nonzero coordinate equal to 1.
fn projective_count(q: u64, k: usize) -> u64 {
    (0..k).fold(0u64, |acc, _| acc.saturating_mul(q).saturating_add(1))
}

/// Minimum of `weight` over the nonzero vectors of the row space of `gen`
/// that are not in the row space of `exclude`. Only one representative per
/// scalar class is visited, which is enough because both the weight
/// functions used here and membership in `exclude` are scale invariant.
pub fn min_weight_search(
    f: &Field,
    gen: &Matrix,
    exclude: Option<&Matrix>,
    weight: &dyn Fn(&[Elem]) -> usize,
    bound: u64,
) -> Result<Option<usize>, CodeError> {
    let k = gen.rows();
    let n = gen.cols();
    let size = projective_count(f.q() as u64, k);
    if (f.q() as u64).checked_pow(k as u32).is_none_or(|s| s > bound) {
        return Err(CodeError::SearchBoundExceeded { size, bound });
    }
    let checks = exclude.map(|m| {
        let (r, _) = m.rref(f);
        r.kernel(f)
    });
    let outside = |v: &[Elem]| match &checks {
        None => true,
        Some(h) => (0..h.rows()).any(|i| !linalg::dot(f, h.row(i), v).is_zero()),
    };
    // multiples[i][c] = c · row_i
    let multiples: Vec<Vec<Vec<Elem>>> =
        (0..k).map(|i| f.elements().map(|c| linalg::vec_scale(f, c, gen.row(i))).collect()).collect();
    let mut best: Option<usize> = None;
    let mut acc = vec![vec![Elem::ZERO; n]; k + 1];
    for lead in 0..k {
        acc[lead + 1] = multiples[lead][1].clone();
        if visit(f, &multiples, lead + 1, &mut acc, &outside, weight, &mut best) {
            break;
        }
    }
    Ok(best)
}

// Depth-first walk over the coefficients after the leading one. Returns true
// once a weight-1 vector is found, since nothing can beat it.
fn visit(
    f: &Field,
    multiples: &[Vec<Vec<Elem>>],
    depth: usize,
    acc: &mut Vec<Vec<Elem>>,
    outside: &dyn Fn(&[Elem]) -> bool,
    weight: &dyn Fn(&[Elem]) -> usize,
    best: &mut Option<usize>,
) -> bool {
    let k = multiples.len();
    if depth == k {
        let v = &acc[k];
        let w = weight(v);
        if best.is_none_or(|b| w < b) && outside(v) {
            *best = Some(w);
        }
        return *best == Some(1);
    }
    for c in 0..f.q() as usize {
        let next: Vec<Elem> =
            if c == 0 { acc[depth].clone() } else { linalg::vec_add(f, &acc[depth], &multiples[depth][c]) };
        acc[depth + 1] = next;
        if visit(f, multiples, depth + 1, acc, outside, weight, best) {
            return true;
        }
    }
    false
}

/// Evaluation point of a GRS code.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum EvalPoint {
    /// The point (1:0) of P¹.
    Infinity,
    /// The point (x:1).
    Affine(Elem),
}

impl EvalPoint {
    pub fn from_proj(f: &Field, p: &ProjPoint) -> EvalPoint {
        match p.affine_coordinate(f) {
            None => EvalPoint::Infinity,
            Some(x) => EvalPoint::Affine(x),
        }
    }
}

/// Points, weights and degree bound of a (generalized) Reed–Solomon code.
#[derive(Clone, Debug)]
pub struct EvaluationSpec {
    pub points: Vec<EvalPoint>,
    pub weights: Vec<Elem>,
    pub k: usize,
}

impl EvaluationSpec {
    pub fn affine(points: &[Elem], weights: Option<&[Elem]>, k: usize) -> EvaluationSpec {
        let weights = weights.map_or_else(|| vec![Elem::ONE; points.len()], |w| w.to_vec());
        EvaluationSpec { points: points.iter().map(|&x| EvalPoint::Affine(x)).collect(), weights, k }
    }

    pub fn projective(f: &Field, points: &[ProjPoint], weights: Option<&[Elem]>, k: usize) -> EvaluationSpec {
        let weights = weights.map_or_else(|| vec![Elem::ONE; points.len()], |w| w.to_vec());
        EvaluationSpec { points: points.iter().map(|p| EvalPoint::from_proj(f, p)).collect(), weights, k }
    }

    fn validate(&self, max_points: usize) -> Result<(), CodeError> {
        let n = self.points.len();
        if self.weights.len() != n {
            return Err(CodeError::LengthMismatch { expected: n, got: self.weights.len() });
        }
        if n > max_points {
            return Err(CodeError::TooManyPoints { n, max: max_points });
        }
        if self.k > n {
            return Err(CodeError::DegreeTooLarge { k: self.k, n });
        }
        if self.weights.iter().any(|w| w.is_zero()) {
            return Err(CodeError::ZeroWeight);
        }
        let mut seen = std::collections::HashSet::new();
        if !self.points.iter().all(|p| seen.insert(*p)) {
            return Err(CodeError::DuplicatePoints);
        }
        Ok(())
    }

    /// Value of `f_a(u, v) = Σ_{i<k} a_i u^i v^{k-1-i}` at the point, chart
    /// representatives `(x:1)` and `(1:0)`.
    pub fn evaluate(f: &Field, coeffs: &[Elem], p: EvalPoint) -> Elem {
        match p {
            EvalPoint::Infinity => coeffs.last().copied().unwrap_or(Elem::ZERO),
            EvalPoint::Affine(x) => f.eval_poly(coeffs, x),
        }
    }

    /// Unreduced generator: row i evaluates the monomial `u^i v^{k-1-i}`.
    pub fn generator_matrix(&self, f: &Field) -> Matrix {
        let n = self.points.len();
        let mut g = Matrix::zeros(self.k, n);
        for i in 0..self.k {
            let mut mono = vec![Elem::ZERO; self.k];
            mono[i] = Elem::ONE;
            for (j, (&p, &w)) in self.points.iter().zip(&self.weights).enumerate() {
                g.set(i, j, f.mul(w, EvaluationSpec::evaluate(f, &mono, p)));
            }
        }
        g
    }

    /// `(w_1 f(P_1), …, w_n f(P_n))` for the coefficient vector `message`.
    pub fn encode(&self, f: &Field, message: &[Elem]) -> Result<Vec<Elem>, CodeError> {
        if message.len() != self.k {
            return Err(CodeError::LengthMismatch { expected: self.k, got: message.len() });
        }
        Ok(self
            .points
            .iter()
            .zip(&self.weights)
            .map(|(&p, &w)| f.mul(w, EvaluationSpec::evaluate(f, message, p)))
            .collect())
    }
}

/// `C_{w,k}`: weighted evaluations of polynomials of degree < k at affine points.
pub fn rs_affine(f: &Field, spec: &EvaluationSpec) -> Result<LinearCode, CodeError> {
    if spec.points.contains(&EvalPoint::Infinity) {
        return Err(CodeError::TooManyPoints { n: spec.points.len(), max: f.q() as usize });
    }
    spec.validate(f.q() as usize)?;
    Ok(LinearCode::from_generator(f, &spec.generator_matrix(f)))
}

/// Weighted evaluations of binary forms of degree k-1 on points of P¹.
pub fn rs_projective(f: &Field, spec: &EvaluationSpec) -> Result<LinearCode, CodeError> {
    spec.validate(f.q() as usize + 1)?;
    Ok(LinearCode::from_generator(f, &spec.generator_matrix(f)))
}

/// Weights `w_i` with `w_i^{q+1} = (Π_{j≠i}(x_i − x_j))^{-1}` in F_{q²}; the
/// least root in element order is chosen.
pub fn selfdual_grs_weights(f: &Field, points: &[Elem]) -> Result<Vec<Elem>, CodeError> {
    let q = f.half_order()? as usize;
    if points.len() > q {
        return Err(CodeError::TooManyPoints { n: points.len(), max: q });
    }
    let mut seen = std::collections::HashSet::new();
    if !points.iter().all(|p| seen.insert(*p)) {
        return Err(CodeError::DuplicatePoints);
    }
    points
        .iter()
        .enumerate()
        .map(|(i, &xi)| {
            let prod = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(Elem::ONE, |acc, (_, &xj)| f.mul(acc, f.sub(xi, xj)));
            let target = f.inv(prod)?;
            f.elements().find(|&w| f.pow(w, q as u64 + 1) == target).ok_or(CodeError::NoRoot)
        })
        .collect()
}

/// Whether `Σ_i w_i^{q+1} x_i^{qj+ℓ} = 0` for all `0 ≤ j, ℓ < k` (with 0^0 = 1).
pub fn check_hermitian_selfduality_condition(
    f: &Field,
    weights: &[Elem],
    points: &[Elem],
    k: usize,
) -> Result<bool, CodeError> {
    if weights.len() != points.len() {
        return Err(CodeError::LengthMismatch { expected: points.len(), got: weights.len() });
    }
    let q = f.half_order()? as u64;
    let norms: Vec<Elem> = weights.iter().map(|&w| f.pow(w, q + 1)).collect();
    for j in 0..k as u64 {
        for l in 0..k as u64 {
            let s =
                norms.iter().zip(points).fold(Elem::ZERO, |acc, (&n, &x)| f.add(acc, f.mul(n, f.pow(x, q * j + l))));
            if !s.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Σ v_i w_i^q` on F_{q²}^n.
pub fn hermitian_inner(f: &Field, v: &[Elem], w: &[Elem]) -> Result<Elem, CodeError> {
    let mut acc = Elem::ZERO;
    for (&a, &b) in v.iter().zip(w) {
        acc = f.add(acc, f.mul(a, f.conjugate(b)?));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proj::p1_points;

    fn all_affine(f: &Field) -> Vec<Elem> {
        f.elements().collect()
    }

    #[test]
    fn rs_over_f3() {
        let f = Field::prime(3).unwrap();
        let c = rs_affine(&f, &EvaluationSpec::affine(&all_affine(&f), None, 2)).unwrap();
        assert_eq!((c.n(), c.k(), c.min_distance().unwrap()), (3, 2, 2));
        let spec = EvaluationSpec::affine(&all_affine(&f), Some(&[Elem(1), Elem(2), Elem(1)]), 2);
        assert_eq!(spec.encode(&f, &[Elem(2), Elem(0)]).unwrap(), vec![Elem(2), Elem(1), Elem(2)]);
    }

    #[test]
    fn rs_over_f5_has_distance_four() {
        let f = Field::prime(5).unwrap();
        let c = rs_affine(&f, &EvaluationSpec::affine(&all_affine(&f), None, 2)).unwrap();
        assert_eq!(c.min_distance().unwrap(), 4);
        assert_eq!(c.codewords().len(), 25);
    }

    #[test]
    fn projective_parity_code() {
        let f = Field::prime(2).unwrap();
        let pts = p1_points(&f);
        let spec = EvaluationSpec::projective(&f, &pts, None, 2);
        let c = rs_projective(&f, &spec).unwrap();
        assert_eq!((c.n(), c.k(), c.min_distance().unwrap()), (3, 2, 2));
        assert!(c.codewords().iter().all(|w| linalg::weight(w).is_multiple_of(2)));
        assert_eq!(spec.encode(&f, &[Elem(0), Elem(0)]).unwrap(), vec![Elem(0); 3]);
        // top coefficient at infinity, Σ a_i x^i elsewhere
        assert_eq!(spec.encode(&f, &[Elem(1), Elem(0)]).unwrap(), vec![Elem(0), Elem(1), Elem(1)]);
        let dual = c.dual_euclidean();
        assert_eq!((dual.k(), dual.min_distance().unwrap()), (1, 3));
    }

    #[test]
    fn construction_errors() {
        let f = Field::prime(3).unwrap();
        let dup = EvaluationSpec::affine(&[Elem(1), Elem(1)], None, 1);
        assert_eq!(rs_affine(&f, &dup).unwrap_err(), CodeError::DuplicatePoints);
        let big_k = EvaluationSpec::affine(&[Elem(0), Elem(1)], None, 3);
        assert!(matches!(rs_affine(&f, &big_k), Err(CodeError::DegreeTooLarge { .. })));
        let zero_w = EvaluationSpec::affine(&[Elem(0), Elem(1)], Some(&[Elem(1), Elem(0)]), 1);
        assert_eq!(rs_affine(&f, &zero_w).unwrap_err(), CodeError::ZeroWeight);
        assert_eq!(LinearCode::zero(&f, 3).min_distance().unwrap_err(), CodeError::ZeroCode);
    }

    #[test]
    fn duals() {
        let f = Field::prime(3).unwrap();
        assert_eq!(LinearCode::full(&f, 4).dual_euclidean(), LinearCode::zero(&f, 4));
        let c = LinearCode::from_rows(&f, 4, &[vec![Elem(1), Elem(2), Elem(0), Elem(1)]]);
        assert_eq!(c.dual_euclidean().dual_euclidean(), c);
        assert_eq!(c.dual_euclidean().k(), 3);
    }

    #[test]
    fn repetition_distance() {
        let f = Field::prime(2).unwrap();
        let rep = LinearCode::from_rows(&f, 5, &[vec![Elem::ONE; 5]]);
        assert_eq!(rep.min_distance().unwrap(), 5);
    }

    #[test]
    fn search_bound() {
        let f = Field::prime(2).unwrap();
        let full = LinearCode::full(&f, 30);
        assert!(matches!(full.min_distance(), Err(CodeError::SearchBoundExceeded { .. })));
        assert_eq!(LinearCode::full(&f, 8).min_distance().unwrap(), 1);
    }

    #[test]
    fn perfect_tensor_weights() {
        let f25 = Field::new(5, 2, None).unwrap();
        let pts: Vec<Elem> = (0..5).map(Elem).collect();
        let w = selfdual_grs_weights(&f25, &pts).unwrap();
        for &wi in &w {
            assert_eq!(f25.pow(wi, 6), Elem(4));
        }
        let w1 = selfdual_grs_weights(&f25, &[Elem(3)]).unwrap();
        assert_eq!(f25.pow(w1[0], 6), Elem::ONE);
    }

    #[test]
    fn q3_grs_pair() {
        let f9 = Field::new(3, 2, None).unwrap();
        let pts: Vec<Elem> = (0..3).map(Elem).collect();
        let w = selfdual_grs_weights(&f9, &pts).unwrap();
        for (i, &wi) in w.iter().enumerate() {
            let prod = (0..3).filter(|&j| j != i).fold(Elem::ONE, |a, j| f9.mul(a, f9.sub(pts[i], pts[j])));
            assert_eq!(f9.mul(f9.pow(wi, 4), prod), Elem::ONE);
        }
        assert!(check_hermitian_selfduality_condition(&f9, &w, &pts, 1).unwrap());
        let c1 = rs_affine(&f9, &EvaluationSpec::affine(&pts, Some(&w), 1)).unwrap();
        let c2 = rs_affine(&f9, &EvaluationSpec::affine(&pts, Some(&w), 2)).unwrap();
        assert!(c1.is_subcode_of(&c2));
        assert_eq!(c2.dual_hermitian().unwrap(), c1);
        assert!(c1.is_hermitian_self_orthogonal().unwrap());
    }

    #[test]
    fn hermitian_projective_f4() {
        let f4 = Field::new(2, 2, None).unwrap();
        let spec = EvaluationSpec::projective(&f4, &p1_points(&f4), None, 2);
        let c = rs_projective(&f4, &spec).unwrap();
        assert!(c.is_hermitian_self_orthogonal().unwrap());
        assert_eq!(c.min_distance().unwrap(), 4);
    }

    #[test]
    fn affine_f4_condition_fails() {
        // Σ_{x ∈ F_4} x^3 = 3 · 1 = 1 ≠ 0, so the (j, ℓ) = (0, 1) condition fails.
        let f4 = Field::new(2, 2, None).unwrap();
        let pts = all_affine(&f4);
        assert!(!check_hermitian_selfduality_condition(&f4, &[Elem::ONE; 4], &pts, 2).unwrap());
        assert!(check_hermitian_selfduality_condition(&f4, &[Elem::ONE; 4], &pts, 0).unwrap());
        let c = rs_affine(&f4, &EvaluationSpec::affine(&pts, None, 2)).unwrap();
        assert!(!c.is_hermitian_self_orthogonal().unwrap());
    }

    #[test]
    fn subfield_subcode_of_extension() {
        let f3 = Field::prime(3).unwrap();
        let f9 = Field::new(3, 2, None).unwrap();
        let emb = f3.embed_into(&f9).unwrap();
        let c = rs_affine(&f3, &EvaluationSpec::affine(&all_affine(&f3), None, 2)).unwrap();
        let ext = c.extend_scalars(&emb);
        assert_eq!(ext.k(), 2);
        assert_eq!(ext.subfield_subcode(&emb).unwrap(), c);
    }
}
