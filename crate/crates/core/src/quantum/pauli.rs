use serde::{Deserialize, Serialize};

use super::QuantumError;
use crate::field::{Elem, Field};

/// `ξ^phase · E_{a,b}` with `E_{a,b} = T_a R_b` on n q-ary qudits. `a` is the
/// shift part and `b` the phase part; `b` holds the actual exponent of `R`,
/// so the stabilizer attached to a symplectic word `(a, b)` is
/// `E_{a, φ(b)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ErrorOperator {
    pub a: Vec<Elem>,
    pub b: Vec<Elem>,
    /// Exponent of ξ, reduced mod p.
    pub phase: u32,
}

/// `⟨u, v⟩ = Σ_i Σ_j u_{i,j} v_{i,j}` over F_p, on basis coordinates.
pub(crate) fn coord_dot(f: &Field, u: &[Elem], v: &[Elem]) -> u32 {
    let p = f.p() as u64;
    let mut acc = 0u64;
    for (&x, &y) in u.iter().zip(v) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let (ex, ey) = (f.basis_expand(x), f.basis_expand(y));
        acc += ex.iter().zip(&ey).map(|(&s, &t)| s as u64 * t as u64).sum::<u64>();
    }
    (acc % p) as u32
}

impl ErrorOperator {
    pub fn new(a: Vec<Elem>, b: Vec<Elem>) -> Result<ErrorOperator, QuantumError> {
        if a.len() != b.len() {
            return Err(QuantumError::LengthMismatch);
        }
        Ok(ErrorOperator { a, b, phase: 0 })
    }

    pub fn identity(n: usize) -> ErrorOperator {
        ErrorOperator { a: vec![Elem::ZERO; n], b: vec![Elem::ZERO; n], phase: 0 }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Number of qudits on which the operator acts nontrivially.
    pub fn weight(&self) -> usize {
        self.a.iter().zip(&self.b).filter(|(x, y)| !x.is_zero() || !y.is_zero()).count()
    }

    /// Product `self · other`, using
    /// `E_{a,b} E_{a',b'} = ξ^{-⟨b,a'⟩} E_{a+a',b+b'}`.
    pub fn compose(&self, f: &Field, other: &ErrorOperator) -> Result<ErrorOperator, QuantumError> {
        if self.n() != other.n() {
            return Err(QuantumError::LengthMismatch);
        }
        let p = f.p();
        let cross = coord_dot(f, &self.b, &other.a);
        let phase = (self.phase + other.phase + p - cross) % p;
        Ok(ErrorOperator {
            a: self.a.iter().zip(&other.a).map(|(&x, &y)| f.add(x, y)).collect(),
            b: self.b.iter().zip(&other.b).map(|(&x, &y)| f.add(x, y)).collect(),
            phase,
        })
    }

    /// Exponent `c` in `E E' = ξ^c E' E`, namely `⟨a,b'⟩ − ⟨b,a'⟩`.
    pub fn commutator_exponent(&self, f: &Field, other: &ErrorOperator) -> Result<u32, QuantumError> {
        if self.n() != other.n() {
            return Err(QuantumError::LengthMismatch);
        }
        let p = f.p();
        Ok((coord_dot(f, &self.a, &other.b) + p - coord_dot(f, &self.b, &other.a)) % p)
    }

    pub fn commutes_with(&self, f: &Field, other: &ErrorOperator) -> Result<bool, QuantumError> {
        Ok(self.commutator_exponent(f, other)? == 0)
    }

    /// Concatenated F_p coordinates `(a | b)`, qudit-major within each half.
    pub fn to_prime_vector(&self, f: &Field) -> Vec<Elem> {
        self.a.iter().chain(&self.b).flat_map(|&x| f.basis_expand(x)).map(Elem).collect()
    }
}

/// The F_p-linear map with `⟨a, φ(b)⟩ = Tr(a b)` for all `a`: in basis
/// coordinates, `φ(b)_j = Tr(γ_j b)`.
pub fn phi(f: &Field, b: Elem) -> Elem {
    let coords: Vec<u32> = f.basis().iter().map(|&g| f.trace(f.mul(g, b))).collect();
    f.basis_combine(&coords).expect("trace values lie in F_p")
}

/// `Tr(Σ a_i b'_i − Σ a'_i b_i)`, the symplectic pairing of `(a,b)` and `(a',b')`.
pub fn symplectic_pairing(f: &Field, x: (&[Elem], &[Elem]), y: (&[Elem], &[Elem])) -> Result<u32, QuantumError> {
    let n = x.0.len();
    if x.1.len() != n || y.0.len() != n || y.1.len() != n {
        return Err(QuantumError::LengthMismatch);
    }
    let mut s = Elem::ZERO;
    for i in 0..n {
        s = f.add(s, f.mul(x.0[i], y.1[i]));
        s = f.sub(s, f.mul(y.0[i], x.1[i]));
    }
    Ok(f.trace(s))
}

/// `ω(a,b) = #{i : a_i ≠ 0 or b_i ≠ 0}` for a vector laid out as `(a | b)`.
pub fn symplectic_weight(v: &[Elem]) -> usize {
    let n = v.len() / 2;
    (0..n).filter(|&i| !v[i].is_zero() || !v[n + i].is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_realizes_trace_form() {
        for (p, r) in [(2, 2), (3, 2), (2, 3)] {
            let f = Field::new(p, r, None).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(coord_dot(&f, &[a], &[phi(&f, b)]), f.trace(f.mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn x_and_z_anticommute() {
        let f = Field::prime(2).unwrap();
        assert_eq!(symplectic_pairing(&f, (&[Elem(1)], &[Elem(0)]), (&[Elem(0)], &[Elem(1)])).unwrap(), 1);
        let x = ErrorOperator::new(vec![Elem(1)], vec![Elem(0)]).unwrap();
        let z = ErrorOperator::new(vec![Elem(0)], vec![Elem(1)]).unwrap();
        assert!(!x.commutes_with(&f, &z).unwrap());
        assert!(x.commutes_with(&f, &x).unwrap());
    }

    #[test]
    fn five_qubit_rows_pair_to_zero() {
        let f = Field::prime(2).unwrap();
        let a0 = [1, 0, 0, 1, 0];
        let b0 = [0, 1, 1, 0, 0];
        let shift = |v: &[u32], s: usize| -> Vec<Elem> { (0..5).map(|i| Elem(v[(i + 5 - s) % 5])).collect() };
        for s in 0..5 {
            for t in 0..5 {
                let x = (shift(&a0, s), shift(&b0, s));
                let y = (shift(&a0, t), shift(&b0, t));
                assert_eq!(symplectic_pairing(&f, (&x.0, &x.1), (&y.0, &y.1)).unwrap(), 0);
            }
        }
    }

    #[test]
    fn length_mismatch() {
        let f = Field::prime(3).unwrap();
        let r = symplectic_pairing(&f, (&[Elem(1)], &[Elem(0)]), (&[Elem(0), Elem(1)], &[Elem(1)]));
        assert_eq!(r.unwrap_err(), QuantumError::LengthMismatch);
    }
}
