use std::sync::OnceLock;

use super::pauli::{phi, ErrorOperator};
use super::QuantumError;
use crate::code::{min_weight_search, CodeError, LinearCode, DEFAULT_SEARCH_BOUND};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;

/// A stabilizer code on n q-ary qudits: a commuting set of error operators
/// together with the F_p-span of their symplectic vectors.
#[derive(Debug)]
pub struct StabilizerCode {
    field: Field,
    prime: Field,
    n: usize,
    generators: Vec<ErrorOperator>,
    // Reduced echelon basis of the generator span, rows laid out as
    // (a coordinates | b coordinates) over F_p.
    span: Matrix,
    k: usize,
    d_q: OnceLock<usize>,
}

impl Clone for StabilizerCode {
    fn clone(&self) -> Self {
        let d_q = OnceLock::new();
        if let Some(&d) = self.d_q.get() {
            let _ = d_q.set(d);
        }
        StabilizerCode {
            field: self.field.clone(),
            prime: self.prime.clone(),
            n: self.n,
            generators: self.generators.clone(),
            span: self.span.clone(),
            k: self.k,
            d_q,
        }
    }
}

impl StabilizerCode {
    /// Checks that the generators commute and records the span.
    pub fn from_generators(
        field: &Field,
        n: usize,
        generators: Vec<ErrorOperator>,
    ) -> Result<StabilizerCode, QuantumError> {
        if generators.iter().any(|g| g.n() != n) {
            return Err(QuantumError::LengthMismatch);
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                if !generators[i].commutes_with(field, &generators[j])? {
                    return Err(QuantumError::NotCommuting(i, j));
                }
            }
        }
        let prime = Field::prime(field.p())?;
        let r = field.r() as usize;
        let rows: Vec<Vec<Elem>> = generators.iter().map(|g| g.to_prime_vector(field)).collect();
        let (span, _) = Matrix::from_rows(2 * n * r, &rows).rref(&prime);
        let m = span.rows();
        if m % r != 0 {
            return Err(QuantumError::NonIntegralDimension(m));
        }
        Ok(StabilizerCode { field: field.clone(), prime, n, generators, span, k: n - m / r, d_q: OnceLock::new() })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of logical q-ary qudits.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generators(&self) -> &[ErrorOperator] {
        &self.generators
    }

    /// F_p-dimension of the stabilizer group modulo phases.
    pub fn rank(&self) -> usize {
        self.span.rows()
    }

    pub fn known_distance(&self) -> Option<usize> {
        self.d_q.get().copied()
    }

    fn qudit_weight(&self) -> impl Fn(&[Elem]) -> usize + '_ {
        let (n, r) = (self.n, self.field.r() as usize);
        move |v: &[Elem]| {
            (0..n).filter(|&i| (0..r).any(|t| !v[i * r + t].is_zero() || !v[n * r + i * r + t].is_zero())).count()
        }
    }

    /// Basis of the symplectic complement of the span, over F_p.
    pub fn normalizer(&self) -> Matrix {
        let half = self.n * self.field.r() as usize;
        let mut m = Matrix::zeros(0, 2 * half);
        for i in 0..self.span.rows() {
            let row = self.span.row(i);
            let mut flipped: Vec<Elem> = row[half..].iter().map(|&x| self.prime.neg(x)).collect();
            flipped.extend_from_slice(&row[..half]);
            m.push_row(&flipped);
        }
        m.kernel(&self.prime)
    }

    /// Whether the F_p vector `(a | b)` lies in the stabilizer span.
    pub fn span_contains(&self, op: &ErrorOperator) -> bool {
        self.span.row_space_contains(&self.prime, &op.to_prime_vector(&self.field))
    }

    /// `d_Q = min{ω(a,b) : (a,b) ∈ C^⊥ ∖ C}`. When `k = 0` that set is empty
    /// and the minimum is taken over the nonzero elements of `C` instead.
    pub fn distance(&self) -> Result<usize, QuantumError> {
        self.distance_bounded(DEFAULT_SEARCH_BOUND)
    }

    pub fn distance_bounded(&self, bound: u64) -> Result<usize, QuantumError> {
        if let Some(&d) = self.d_q.get() {
            return Ok(d);
        }
        let weight = self.qudit_weight();
        let d = if self.k > 0 {
            let norm = self.normalizer();
            min_weight_search(&self.prime, &norm, Some(&self.span), &weight, bound)?
        } else {
            min_weight_search(&self.prime, &self.span, None, &weight, bound)?
        };
        // n = 0 is the only way both searches come back empty.
        let d = d.unwrap_or(0);
        let _ = self.d_q.set(d);
        Ok(d)
    }
}

/// CRSS: a self-orthogonal `C ⊆ F_q^{2n}` (words `(a | b)`) gives the
/// stabilizer generated by `E_{γa, φ(γb)}` for `(a | b)` in a basis of `C`
/// and `γ` in the F_p-basis of F_q.
pub fn crss_self_orthogonal(c: &LinearCode) -> Result<StabilizerCode, QuantumError> {
    let f = c.field();
    if !c.n().is_multiple_of(2) {
        return Err(QuantumError::LengthMismatch);
    }
    let n = c.n() / 2;
    let rows = c.generator().row_vecs();
    for x in &rows {
        for y in &rows {
            let mut s = Elem::ZERO;
            for i in 0..n {
                s = f.add(s, f.mul(x[i], y[n + i]));
                s = f.sub(s, f.mul(y[i], x[n + i]));
            }
            if !s.is_zero() {
                return Err(QuantumError::NotSelfOrthogonal);
            }
        }
    }
    let mut gens = Vec::with_capacity(rows.len() * f.r() as usize);
    for row in &rows {
        for &g in f.basis() {
            let a = row[..n].iter().map(|&x| f.mul(g, x)).collect();
            let b = row[n..].iter().map(|&x| phi(f, f.mul(g, x))).collect();
            gens.push(ErrorOperator { a, b, phase: 0 });
        }
    }
    StabilizerCode::from_generators(f, n, gens)
}

/// The stabilizer `S_1 = XZZXI` and its cyclic shifts.
pub fn five_qubit_code() -> StabilizerCode {
    let f = Field::prime(2).expect("2 is prime");
    let a0 = [1u32, 0, 0, 1, 0];
    let b0 = [0u32, 1, 1, 0, 0];
    let rows: Vec<Vec<Elem>> = (0..5)
        .map(|s| {
            let shift = |v: &[u32; 5]| -> Vec<Elem> { (0..5).map(|i| Elem(v[(i + 5 - s) % 5])).collect() };
            [shift(&a0), shift(&b0)].concat()
        })
        .collect();
    let c = LinearCode::from_rows(&f, 10, &rows);
    crss_self_orthogonal(&c).expect("the five-qubit stabilizers commute")
}

fn quadratic_extension(small: &Field) -> Result<(Field, crate::field::Embedding), QuantumError> {
    let big = Field::new(small.p(), 2 * small.r(), None)?;
    let emb = small.embed_into(&big)?;
    Ok((big, emb))
}

/// Nested pair `C1 ⊆ C2` over F_q. The F_q-space `γ C1 + γ̄ C2^⊥ ⊆ F_{q²}^n`
/// (γ the least primitive element of F_{q²}, γ̄ = γ^q) is expanded in the
/// basis `{γ, γ̄}` into a self-orthogonal code in F_q^{2n}.
pub fn crss_nested_pair(c1: &LinearCode, c2: &LinearCode) -> Result<StabilizerCode, QuantumError> {
    if c1.n() != c2.n() || !c1.is_subcode_of(c2) {
        return Err(QuantumError::NotNested);
    }
    let small = c1.field();
    let n = c1.n();
    let (big, emb) = quadratic_extension(small)?;
    let q = small.q() as u64;
    let g = big.least_primitive();
    let gbar = big.pow(g, q);
    let lift =
        |row: &Vec<Elem>, scale: Elem| -> Vec<Elem> { row.iter().map(|&x| big.mul(scale, emb.map(x))).collect() };
    let mut words: Vec<Vec<Elem>> = c1.generator().row_vecs().iter().map(|r| lift(r, g)).collect();
    words.extend(c2.dual_euclidean().generator().row_vecs().iter().map(|r| lift(r, gbar)));

    // z = uγ + vγ^q with u, v ∈ F_q:
    //   u = (zγ − z^q γ^q) / (γ² − γ^{2q}),  v = (zγ^q − z^q γ) / (γ^{2q} − γ²).
    let denom_u = big.sub(big.mul(g, g), big.mul(gbar, gbar));
    let denom_v = big.neg(denom_u);
    let expand = |z: Elem| -> Result<(Elem, Elem), QuantumError> {
        let zq = big.pow(z, q);
        let u = big.div(big.sub(big.mul(z, g), big.mul(zq, gbar)), denom_u)?;
        let v = big.div(big.sub(big.mul(z, gbar), big.mul(zq, g)), denom_v)?;
        let back = |x: Elem| emb.preimage(x).ok_or(QuantumError::NotSelfOrthogonal);
        Ok((back(u)?, back(v)?))
    };
    let mut rows = Vec::with_capacity(words.len());
    for w in &words {
        let mut us = Vec::with_capacity(2 * n);
        let mut vs = Vec::with_capacity(n);
        for &z in w {
            let (u, v) = expand(z)?;
            us.push(u);
            vs.push(v);
        }
        us.extend(vs);
        rows.push(us);
    }
    crss_self_orthogonal(&LinearCode::from_rows(small, 2 * n, &rows))
}

/// `(γ, γ_0)`: γ the least primitive element of F_{q²} and `γ_0 = γ + γ^q`, so
/// that `γ^q = −γ + γ_0`.
pub fn hermitian_expansion_basis(big: &Field) -> Result<(Elem, Elem), QuantumError> {
    let q = big.half_order()? as u64;
    let g = big.least_primitive();
    Ok((g, big.add(g, big.pow(g, q))))
}

/// Hermitian construction: a code `C ⊆ C^{⊥H}` over F_{q²} of dimension k is
/// expanded over the basis `{1, γ}` into a symplectically self-orthogonal
/// F_q-code of dimension 2k, giving an `[[n, n − 2k]]_q` stabilizer code.
pub fn crss_hermitian(c: &LinearCode) -> Result<StabilizerCode, QuantumError> {
    let big = c.field();
    let half = big.half_degree()?;
    if !c.is_hermitian_self_orthogonal()? {
        return Err(QuantumError::NotHermitianSelfOrthogonal);
    }
    let small = Field::new(big.p(), half, None)?;
    let emb = small.embed_into(big)?;
    let q = small.q() as u64;
    let (g, _) = hermitian_expansion_basis(big)?;
    let gq = big.pow(g, q);
    let denom = big.sub(g, gq);
    let n = c.n();
    let mut rows = Vec::new();
    for row in c.generator().row_vecs() {
        for lambda in [Elem::ONE, g] {
            let mut s_part = Vec::with_capacity(2 * n);
            let mut t_part = Vec::with_capacity(n);
            for &x in &row {
                // z = s + tγ, s, t ∈ F_q
                let z = big.mul(lambda, x);
                let t = big.div(big.sub(z, big.pow(z, q)), denom)?;
                let s = big.sub(z, big.mul(t, g));
                let back = |y: Elem| emb.preimage(y).ok_or(CodeError::FieldMismatch);
                s_part.push(back(s)?);
                t_part.push(back(t)?);
            }
            s_part.extend(t_part);
            rows.push(s_part);
        }
    }
    crss_self_orthogonal(&LinearCode::from_rows(&small, 2 * n, &rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{rs_affine, rs_projective, selfdual_grs_weights, EvaluationSpec};
    use crate::proj::p1_points;

    #[test]
    fn five_qubit_parameters() {
        let c = five_qubit_code();
        assert_eq!((c.n(), c.k(), c.rank()), (5, 1, 4));
        assert_eq!(c.distance().unwrap(), 3);
    }

    #[test]
    fn zero_code_is_trivial() {
        let f = Field::prime(3).unwrap();
        let c = crss_self_orthogonal(&LinearCode::zero(&f, 6)).unwrap();
        assert_eq!((c.n(), c.k(), c.distance().unwrap()), (3, 3, 1));
    }

    #[test]
    fn bell_pair() {
        let f = Field::prime(2).unwrap();
        let o = Elem::ONE;
        let z = Elem::ZERO;
        let c = LinearCode::from_rows(&f, 4, &[vec![o, o, z, z], vec![z, z, o, o]]);
        let s = crss_self_orthogonal(&c).unwrap();
        assert_eq!((s.n(), s.k(), s.distance().unwrap()), (2, 0, 2));
    }

    #[test]
    fn non_commuting_rejected() {
        let f = Field::prime(2).unwrap();
        let c = LinearCode::from_rows(&f, 2, &[vec![Elem::ONE, Elem::ZERO], vec![Elem::ZERO, Elem::ONE]]);
        assert_eq!(crss_self_orthogonal(&c).unwrap_err(), QuantumError::NotSelfOrthogonal);
    }

    #[test]
    fn hermitian_projective_f4_gives_513() {
        let f4 = Field::new(2, 2, None).unwrap();
        let c = rs_projective(&f4, &EvaluationSpec::projective(&f4, &p1_points(&f4), None, 2)).unwrap();
        let s = crss_hermitian(&c).unwrap();
        assert_eq!((s.n(), s.k(), s.distance().unwrap()), (5, 1, 3));
        let (g, g0) = hermitian_expansion_basis(&f4).unwrap();
        assert_eq!(f4.pow(g, 2), f4.add(f4.neg(g), g0));
        assert!(g0.0 < 2);
    }

    #[test]
    fn hermitian_f4_pair() {
        let f4 = Field::new(2, 2, None).unwrap();
        let c = rs_affine(&f4, &EvaluationSpec::affine(&[Elem(0), Elem(1)], None, 1)).unwrap();
        let s = crss_hermitian(&c).unwrap();
        assert_eq!((s.n(), s.k(), s.distance().unwrap()), (2, 0, 2));
        let zero = crss_hermitian(&LinearCode::zero(&f4, 3)).unwrap();
        assert_eq!((zero.n(), zero.k(), zero.distance().unwrap()), (3, 3, 1));
        let affine = rs_affine(&f4, &EvaluationSpec::affine(&[Elem(0), Elem(1), Elem(2), Elem(3)], None, 2)).unwrap();
        assert_eq!(crss_hermitian(&affine).unwrap_err(), QuantumError::NotHermitianSelfOrthogonal);
    }

    #[test]
    fn nested_pair_q3() {
        let f3 = Field::prime(3).unwrap();
        let f9 = Field::new(3, 2, None).unwrap();
        let emb = f3.embed_into(&f9).unwrap();
        let pts: Vec<Elem> = (0..3).map(Elem).collect();
        let w = selfdual_grs_weights(&f9, &pts).unwrap();
        let c1 = rs_affine(&f9, &EvaluationSpec::affine(&pts, Some(&w), 1)).unwrap();
        let c2 = rs_affine(&f9, &EvaluationSpec::affine(&pts, Some(&w), 2)).unwrap();
        let (s1, s2) = (c1.subfield_subcode(&emb).unwrap(), c2.subfield_subcode(&emb).unwrap());
        assert_eq!((s1.k(), s2.k()), (1, 2));
        let q = crss_nested_pair(&s1, &s2).unwrap();
        assert_eq!((q.n(), q.k(), q.distance().unwrap()), (3, 1, 2));
        assert_eq!(crss_nested_pair(&s2, &s1).unwrap_err(), QuantumError::NotNested);
    }

    #[test]
    fn nested_extremes() {
        let f = Field::prime(3).unwrap();
        let full = LinearCode::full(&f, 2);
        let zero = LinearCode::zero(&f, 2);
        let trivial = crss_nested_pair(&zero, &full).unwrap();
        assert_eq!((trivial.k(), trivial.distance().unwrap()), (2, 1));
        let c = LinearCode::from_rows(&f, 2, &[vec![Elem(1), Elem(1)]]);
        let state = crss_nested_pair(&c, &c).unwrap();
        assert_eq!(state.k(), 0);
    }
}
