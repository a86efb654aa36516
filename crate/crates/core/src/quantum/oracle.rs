//! Exact matrix model of the error operators. Every operator here is a
//! monomial matrix (a permutation with root-of-unity entries), so products,
//! traces and projector sums are computed exactly in Z[ω], with ω a
//! primitive p-th root of unity for odd p and ω = i for p = 2.

use std::collections::BTreeMap;

use super::pauli::ErrorOperator;
use super::stabilizer::StabilizerCode;
use super::QuantumError;
use crate::field::Field;

/// Largest Hilbert-space dimension the oracle will build.
pub const DEFAULT_ORACLE_BOUND: u64 = 1 << 12;

/// Order of the root of unity used for a given characteristic.
fn root_order(p: u32) -> u32 {
    if p == 2 {
        4
    } else {
        p
    }
}

/// An element `Σ c_j ω^j` of Z[ω], ω a primitive N-th root of unity with N
/// an odd prime or 4.
#[derive(Clone, Debug)]
pub struct Cyclo {
    c: Vec<i64>,
}

impl Cyclo {
    pub fn zero(order: u32) -> Cyclo {
        Cyclo { c: vec![0; order as usize] }
    }

    pub fn from_int(order: u32, v: i64) -> Cyclo {
        let mut z = Cyclo::zero(order);
        z.c[0] = v;
        z
    }

    /// `ω^e`.
    pub fn root(order: u32, e: u32) -> Cyclo {
        let mut z = Cyclo::zero(order);
        z.c[(e % order) as usize] = 1;
        z
    }

    fn order(&self) -> usize {
        self.c.len()
    }

    pub fn add_assign(&mut self, other: &Cyclo) {
        for (x, y) in self.c.iter_mut().zip(&other.c) {
            *x += y;
        }
    }

    pub fn add_root(&mut self, e: u32) {
        let n = self.order();
        self.c[e as usize % n] += 1;
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        let n = self.order();
        let mut out = vec![0i64; n];
        for (i, &x) in self.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in other.c.iter().enumerate() {
                out[(i + j) % n] += x * y;
            }
        }
        Cyclo { c: out }
    }

    pub fn scale(&self, k: i64) -> Cyclo {
        Cyclo { c: self.c.iter().map(|x| x * k).collect() }
    }

    /// Coordinates in an integral basis of Z[ω], so that equal elements have
    /// equal normal forms.
    pub fn normal_form(&self) -> Vec<i64> {
        let n = self.order();
        if n == 4 {
            vec![self.c[0] - self.c[2], self.c[1] - self.c[3]]
        } else {
            // 1 + ω + … + ω^{p-1} = 0
            let last = self.c[n - 1];
            self.c[..n - 1].iter().map(|x| x - last).collect()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.normal_form().iter().all(|&x| x == 0)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let nf = self.normal_form();
        nf[1..].iter().all(|&x| x == 0).then_some(nf[0])
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.normal_form() == other.normal_form()
    }
}

impl Eq for Cyclo {}

/// A monomial matrix: column `x` has the single entry `ω^{phase[x]}` in row
/// `perm[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    order: u32,
    perm: Vec<u32>,
    phase: Vec<u32>,
}

impl Monomial {
    pub fn identity(order: u32, dim: usize) -> Monomial {
        Monomial { order, perm: (0..dim as u32).collect(), phase: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// The cyclic shift with `T|j⟩ = |j − 1⟩` on C^p (ones on the
    /// superdiagonal and in the bottom-left corner).
    pub fn shift(p: u32) -> Monomial {
        Monomial { order: root_order(p), perm: (0..p).map(|j| (j + p - 1) % p).collect(), phase: vec![0; p as usize] }
    }

    /// The clock `R|j⟩ = ξ^j |j⟩` on C^p.
    pub fn clock(p: u32) -> Monomial {
        let step = root_order(p) / p;
        Monomial { order: root_order(p), perm: (0..p).collect(), phase: (0..p).map(|j| j * step).collect() }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let perm = other.perm.iter().map(|&y| self.perm[y as usize]).collect();
        let phase =
            other.perm.iter().zip(&other.phase).map(|(&y, &e)| (e + self.phase[y as usize]) % self.order).collect();
        Monomial { order: self.order, perm, phase }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        (0..e).fold(Monomial::identity(self.order, self.dim()), |acc, _| acc.mul(self))
    }

    pub fn kron(&self, other: &Monomial) -> Monomial {
        let db = other.dim();
        let mut perm = Vec::with_capacity(self.dim() * db);
        let mut phase = Vec::with_capacity(self.dim() * db);
        for xa in 0..self.dim() {
            for xb in 0..db {
                perm.push(self.perm[xa] * db as u32 + other.perm[xb]);
                phase.push((self.phase[xa] + other.phase[xb]) % self.order);
            }
        }
        Monomial { order: self.order, perm, phase }
    }

    pub fn adjoint(&self) -> Monomial {
        let mut perm = vec![0; self.dim()];
        let mut phase = vec![0; self.dim()];
        for (x, (&y, &e)) in self.perm.iter().zip(&self.phase).enumerate() {
            perm[y as usize] = x as u32;
            phase[y as usize] = (self.order - e) % self.order;
        }
        Monomial { order: self.order, perm, phase }
    }

    /// Multiplies by the scalar `ω^e`.
    pub fn times_root(&self, e: u32) -> Monomial {
        Monomial {
            order: self.order,
            perm: self.perm.clone(),
            phase: self.phase.iter().map(|&x| (x + e) % self.order).collect(),
        }
    }

    pub fn trace(&self) -> Cyclo {
        let mut t = Cyclo::zero(self.order);
        for (x, (&y, &e)) in self.perm.iter().zip(&self.phase).enumerate() {
            if y as usize == x {
                t.add_root(e);
            }
        }
        t
    }

    /// Entry in row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> Cyclo {
        if self.perm[j] as usize == i {
            Cyclo::root(self.order, self.phase[j])
        } else {
            Cyclo::zero(self.order)
        }
    }
}

/// The matrix of `ξ^phase E_{a,b}`, built as a tensor product of powers of
/// the p×p shift and clock over all qudits and all basis coordinates.
pub fn error_matrix(f: &Field, e: &ErrorOperator) -> Monomial {
    let p = f.p();
    let order = root_order(p);
    let (t, r) = (Monomial::shift(p), Monomial::clock(p));
    let mut m = Monomial::identity(order, 1);
    for (&a, &b) in e.a.iter().zip(&e.b) {
        for (ai, bi) in f.basis_expand(a).into_iter().zip(f.basis_expand(b)) {
            m = m.kron(&t.pow(ai).mul(&r.pow(bi)));
        }
    }
    m.times_root(e.phase * (order / p))
}

/// The operator whose +1 eigenspace a generator cuts out: `E_{a,b}` itself
/// for odd p, and the Hermitian representative `i^{⟨a,b⟩} E_{a,b}` for p = 2
/// (which squares to the identity).
pub fn generator_matrix(f: &Field, e: &ErrorOperator) -> Monomial {
    let m = error_matrix(f, e);
    if f.p() != 2 {
        return m;
    }
    let overlap: u32 =
        e.a.iter()
            .zip(&e.b)
            .map(|(&a, &b)| {
                let (x, y) = (f.basis_expand(a), f.basis_expand(b));
                x.iter().zip(&y).map(|(s, t)| s * t).sum::<u32>()
            })
            .sum();
    m.times_root(overlap % 4)
}

fn check_bound(code: &StabilizerCode, bound: u64) -> Result<u64, QuantumError> {
    let q = code.field().q() as u64;
    let size = (q).checked_pow(code.n() as u32).unwrap_or(u64::MAX);
    if size > bound {
        return Err(QuantumError::OracleBoundExceeded { size, bound });
    }
    Ok(size)
}

/// Group elements `Π M_i^{c_i}` for all exponent tuples, where the `M_i`
/// run over an F_p-independent subset of the generators.
fn group_elements(code: &StabilizerCode) -> Result<Vec<Monomial>, QuantumError> {
    let f = code.field();
    let p = f.p();
    let order = root_order(p);
    let dim = (f.q() as usize).pow(code.n() as u32);
    let mats: Vec<Monomial> = code.generators().iter().map(|g| generator_matrix(f, g)).collect();
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            if mats[i].mul(&mats[j]) != mats[j].mul(&mats[i]) {
                return Err(QuantumError::NotCommuting(i, j));
            }
        }
    }
    // Keep generators that enlarge the span, so each element appears once.
    let prime = Field::prime(p)?;
    let mut basis = crate::linalg::Matrix::zeros(0, 2 * code.n() * f.r() as usize);
    let mut independent = Vec::new();
    for (g, m) in code.generators().iter().zip(&mats) {
        let v = g.to_prime_vector(f);
        if !basis.row_space_contains(&prime, &v) {
            basis.push_row(&v);
            independent.push(m.clone());
        }
    }
    let mut elems = vec![Monomial::identity(order, dim)];
    for m in &independent {
        let powers: Vec<Monomial> = (0..p).map(|e| m.pow(e)).collect();
        let mut next = Vec::with_capacity(elems.len() * p as usize);
        for e in &elems {
            for pw in &powers {
                next.push(e.mul(pw));
            }
        }
        elems = next;
    }
    Ok(elems)
}

/// Dimension of the joint +1 eigenspace of the generators, computed as
/// `tr P` with `P = |S|^{-1} Σ_{s ∈ S} s`.
pub fn eigenspace_oracle(code: &StabilizerCode, bound: u64) -> Result<u64, QuantumError> {
    check_bound(code, bound)?;
    let elems = group_elements(code)?;
    let order = root_order(code.field().p());
    let mut total = Cyclo::zero(order);
    for s in &elems {
        total.add_assign(&s.trace());
    }
    let t = total.as_integer().ok_or(QuantumError::OracleInconsistent)?;
    let g = elems.len() as i64;
    if t % g != 0 || t < 0 {
        return Err(QuantumError::OracleInconsistent);
    }
    Ok((t / g) as u64)
}

// Sparse matrix stored by columns: column x maps row -> entry.
type SparseCols = Vec<BTreeMap<u32, Cyclo>>;

fn sparse_sum(elems: &[Monomial], order: u32) -> SparseCols {
    let dim = elems[0].dim();
    let mut cols: SparseCols = vec![BTreeMap::new(); dim];
    for s in elems {
        for x in 0..dim {
            cols[x].entry(s.perm[x]).or_insert_with(|| Cyclo::zero(order)).add_root(s.phase[x]);
        }
    }
    for c in cols.iter_mut() {
        c.retain(|_, v| !v.is_zero());
    }
    cols
}

fn sparse_mul(a: &SparseCols, b: &SparseCols, order: u32) -> SparseCols {
    b.iter()
        .map(|col| {
            let mut out: BTreeMap<u32, Cyclo> = BTreeMap::new();
            for (&j, v) in col {
                for (&i, w) in &a[j as usize] {
                    out.entry(i).or_insert_with(|| Cyclo::zero(order)).add_assign(&w.mul(v));
                }
            }
            out.retain(|_, v| !v.is_zero());
            out
        })
        .collect()
}

fn sparse_times_monomial(a: &SparseCols, m: &Monomial) -> SparseCols {
    // (A M)[:, x] = ω^{phase[x]} A[:, perm[x]]
    (0..m.dim())
        .map(|x| {
            let factor = Cyclo::root(m.order, m.phase[x]);
            a[m.perm[x] as usize].iter().map(|(&i, v)| (i, v.mul(&factor))).collect()
        })
        .collect()
}

fn sparse_trace(a: &SparseCols, order: u32) -> Cyclo {
    let mut t = Cyclo::zero(order);
    for (x, col) in a.iter().enumerate() {
        if let Some(v) = col.get(&(x as u32)) {
            t.add_assign(v);
        }
    }
    t
}

/// Outcome of a detectability test: `P E P = λ P` with
/// `λ = numerator / denominator`.
#[derive(Clone, Debug)]
pub struct Detectability {
    pub detectable: bool,
    pub numerator: Cyclo,
    pub denominator: i64,
}

/// Decides whether `P E P` is a scalar multiple of the code projector `P`.
/// With `A = Σ_{s∈S} s = |S| P` and `B = A E A`, this holds iff
/// `tr(A) · B = tr(B) · A`, and then `λ = tr(B) / (|S| tr(A))`.
pub fn detectability_check(
    code: &StabilizerCode,
    error: &ErrorOperator,
    bound: u64,
) -> Result<Detectability, QuantumError> {
    check_bound(code, bound)?;
    if error.n() != code.n() {
        return Err(QuantumError::LengthMismatch);
    }
    let f = code.field();
    let order = root_order(f.p());
    let elems = group_elements(code)?;
    let a = sparse_sum(&elems, order);
    let e = error_matrix(f, error);
    let b = sparse_mul(&sparse_times_monomial(&a, &e), &a, order);
    let t = sparse_trace(&a, order).as_integer().ok_or(QuantumError::OracleInconsistent)?;
    let s = sparse_trace(&b, order);
    let mut detectable = true;
    'outer: for x in 0..a.len() {
        let rows: std::collections::BTreeSet<u32> = a[x].keys().chain(b[x].keys()).copied().collect();
        for i in rows {
            let bv = b[x].get(&i).cloned().unwrap_or_else(|| Cyclo::zero(order)).scale(t);
            let av = a[x].get(&i).cloned().unwrap_or_else(|| Cyclo::zero(order)).mul(&s);
            if bv != av {
                detectable = false;
                break 'outer;
            }
        }
    }
    Ok(Detectability { detectable, numerator: s, denominator: elems.len() as i64 * t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Elem;

    fn ops(f: &Field, n: usize) -> Vec<ErrorOperator> {
        let q = f.q();
        let total = (q as u64).pow(2 * n as u32);
        (0..total)
            .map(|mut idx| {
                let mut v = Vec::with_capacity(2 * n);
                for _ in 0..2 * n {
                    v.push(Elem((idx % q as u64) as u32));
                    idx /= q as u64;
                }
                ErrorOperator::new(v[..n].to_vec(), v[n..].to_vec()).unwrap()
            })
            .collect()
    }

    #[test]
    fn clock_and_shift_relation() {
        for p in [2, 3, 5] {
            let (t, r) = (Monomial::shift(p), Monomial::clock(p));
            let xi = root_order(p) / p;
            assert_eq!(t.mul(&r), r.mul(&t).times_root(xi));
        }
    }

    #[test]
    fn composition_matches_matrices_single_qudit() {
        for (p, r) in [(2, 1), (3, 1), (2, 2)] {
            let f = Field::new(p, r, None).unwrap();
            let all = ops(&f, 1);
            for x in &all {
                for y in &all {
                    let sym = x.compose(&f, y).unwrap();
                    assert_eq!(error_matrix(&f, &sym), error_matrix(&f, x).mul(&error_matrix(&f, y)));
                }
            }
        }
    }

    #[test]
    fn cyclo_normal_forms() {
        let mut s = Cyclo::zero(3);
        for e in 0..3 {
            s.add_root(e);
        }
        assert!(s.is_zero());
        let i = Cyclo::root(4, 1);
        assert_eq!(i.mul(&i), Cyclo::from_int(4, -1));
        assert_eq!(Cyclo::from_int(5, 7).as_integer(), Some(7));
    }

    #[test]
    fn oracle_trivial_cases() {
        let f = Field::prime(2).unwrap();
        let empty = StabilizerCode::from_generators(&f, 2, vec![]).unwrap();
        assert_eq!(eigenspace_oracle(&empty, DEFAULT_ORACLE_BOUND).unwrap(), 4);
        let y = ErrorOperator::new(vec![Elem(1)], vec![Elem(1)]).unwrap();
        let code = StabilizerCode::from_generators(&f, 1, vec![y]).unwrap();
        assert_eq!(eigenspace_oracle(&code, DEFAULT_ORACLE_BOUND).unwrap(), 1);
    }

    #[test]
    fn five_qubit_oracle() {
        let code = crate::quantum::five_qubit_code();
        assert_eq!(eigenspace_oracle(&code, DEFAULT_ORACLE_BOUND).unwrap(), 2);
        let id = ErrorOperator::identity(5);
        let det = detectability_check(&code, &id, DEFAULT_ORACLE_BOUND).unwrap();
        assert!(det.detectable);
        assert_eq!(det.numerator.as_integer(), Some(det.denominator));
        let x0 = ErrorOperator::new(vec![Elem(1), Elem(0), Elem(0), Elem(0), Elem(0)], vec![Elem(0); 5]).unwrap();
        assert!(detectability_check(&code, &x0, DEFAULT_ORACLE_BOUND).unwrap().detectable);
    }
}
