use serde::Serialize;

use super::HoloError;
use crate::code::{EvalPoint, EvaluationSpec};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;
use crate::proj::p1_points;

pub const DEFAULT_DEPTH_BOUND: usize = 8;

/// The ball of radius N around a root vertex of the (q+1)-regular tree.
///
/// A vertex is addressed by the labels along the path from the root: the
/// first label is a P¹ index (0 = ∞, 1 + i = affine `Elem(i)`), later labels
/// are affine indices in `0..q` (the ∞ direction of a non-root vertex points
/// back to its parent). Vertices are listed in lexicographic order of
/// addresses, which is a pre-order walk.
#[derive(Clone, Debug, Serialize)]
pub struct RootedTree {
    #[serde(skip)]
    field: Field,
    depth: usize,
    vertices: Vec<Vec<u32>>,
}

impl RootedTree {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn vertices(&self) -> &[Vec<u32>] {
        &self.vertices
    }

    /// Boundary vertices (depth N), in address order.
    pub fn leaves(&self) -> Vec<&Vec<u32>> {
        if self.depth == 0 {
            return Vec::new();
        }
        self.vertices.iter().filter(|v| v.len() == self.depth).collect()
    }

    /// Non-root, non-leaf vertices, in input order.
    pub fn internal_nonroot(&self) -> Vec<&Vec<u32>> {
        self.vertices.iter().filter(|v| !v.is_empty() && v.len() < self.depth).collect()
    }

    /// Number of input symbols for a given k.
    pub fn input_len(&self, k: usize) -> usize {
        k + (k - 1) * self.internal_nonroot().len()
    }
}

pub fn tree_build(f: &Field, depth: usize) -> Result<RootedTree, HoloError> {
    tree_build_bounded(f, depth, DEFAULT_DEPTH_BOUND)
}

pub fn tree_build_bounded(f: &Field, depth: usize, bound: usize) -> Result<RootedTree, HoloError> {
    if depth > bound {
        return Err(HoloError::DepthBoundExceeded { depth, bound });
    }
    let q = f.q();
    let mut vertices = Vec::new();
    fn walk(addr: &mut Vec<u32>, depth: usize, q: u32, out: &mut Vec<Vec<u32>>) {
        out.push(addr.clone());
        if addr.len() == depth {
            return;
        }
        let width = if addr.is_empty() { q + 1 } else { q };
        for c in 0..width {
            addr.push(c);
            walk(addr, depth, q, out);
            addr.pop();
        }
    }
    walk(&mut Vec::new(), depth, q, &mut vertices);
    Ok(RootedTree { field: f.clone(), depth, vertices })
}

/// Value of `f_a(u,v) = Σ_{i<k} a_i u^i v^{k−1−i}` on a forward leg of a
/// non-root vertex: leg `t` is the point `(1:t)`, so the value is
/// `Σ a_i t^{k−1−i}`. The ∞ leg is `(0:1)`, where the value is `a_0`.
pub fn nonroot_leg_value(f: &Field, coeffs: &[Elem], leg: Option<Elem>) -> Elem {
    let k = coeffs.len();
    match leg {
        None => coeffs.first().copied().unwrap_or(Elem::ZERO),
        Some(t) => coeffs
            .iter()
            .enumerate()
            .fold(Elem::ZERO, |acc, (i, &a)| f.add(acc, f.mul(a, f.pow(t, (k - 1 - i) as u64)))),
    }
}

/// Propagates `value` into a subtree whose leaves sit `levels` steps below
/// the vertex receiving it (`levels = 1` means the vertex is a leaf).
pub(crate) fn propagate(
    f: &Field,
    k: usize,
    value: Elem,
    levels: usize,
    inputs: &mut std::slice::Iter<'_, Elem>,
    out: &mut Vec<Elem>,
) {
    if levels <= 1 {
        out.push(value);
        return;
    }
    let mut coeffs = Vec::with_capacity(k);
    coeffs.push(value);
    coeffs.extend(inputs.by_ref().take(k - 1).copied());
    debug_assert_eq!(nonroot_leg_value(f, &coeffs, None), value, "inherited symbol must sit at ∞");
    for t in f.elements() {
        let child = nonroot_leg_value(f, &coeffs, Some(t));
        propagate(f, k, child, levels - 1, inputs, out);
    }
}

fn check_k(f: &Field, k: usize) -> Result<(), HoloError> {
    if k == 0 || k > f.q() as usize {
        return Err(HoloError::KOutOfRange { k, max: f.q() as usize });
    }
    Ok(())
}

/// Runs the encoder. `inputs` holds the k root symbols followed by k−1
/// symbols for each internal non-root vertex in address order. The output
/// lists the leaf symbols in address order.
pub fn holographic_encode(tree: &RootedTree, k: usize, inputs: &[Elem]) -> Result<Vec<Elem>, HoloError> {
    let f = &tree.field;
    check_k(f, k)?;
    if tree.depth == 0 {
        return Err(HoloError::NoBoundary);
    }
    let expected = tree.input_len(k);
    if inputs.len() != expected {
        return Err(HoloError::InputShapeMismatch { expected, got: inputs.len() });
    }
    let root = &inputs[..k];
    let mut rest = inputs[k..].iter();
    let mut out = Vec::with_capacity(tree.leaves().len());
    for p in p1_points(f) {
        let value = EvaluationSpec::evaluate(f, root, EvalPoint::from_proj(f, &p));
        propagate(f, k, value, tree.depth, &mut rest, &mut out);
    }
    debug_assert!(rest.next().is_none());
    Ok(out)
}

/// The matrix of the encoder: row `j` is the boundary word of the j-th unit
/// input vector.
pub fn encode_matrix(tree: &RootedTree, k: usize) -> Result<Matrix, HoloError> {
    check_k(&tree.field, k)?;
    let len = tree.input_len(k);
    let mut m = Matrix::zeros(0, tree.leaves().len());
    for j in 0..len {
        let mut e = vec![Elem::ZERO; len];
        e[j] = Elem::ONE;
        m.push_row(&holographic_encode(tree, k, &e)?);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::rs_projective;
    use crate::linalg::vec_add;

    #[test]
    fn vertex_counts() {
        for (q, n, verts, leaves) in [(2, 1, 4, 3), (2, 2, 10, 6), (3, 2, 17, 12), (2, 3, 22, 12)] {
            let f = Field::prime(q).unwrap();
            let t = tree_build(&f, n).unwrap();
            assert_eq!(t.vertices().len(), verts);
            assert_eq!(t.leaves().len(), leaves);
        }
        let f = Field::prime(2).unwrap();
        assert_eq!(tree_build(&f, 0).unwrap().vertices().len(), 1);
        assert!(matches!(tree_build(&f, 9), Err(HoloError::DepthBoundExceeded { .. })));
    }

    #[test]
    fn depth_one_is_projective_rs() {
        let f = Field::prime(2).unwrap();
        let t = tree_build(&f, 1).unwrap();
        let m = encode_matrix(&t, 2).unwrap();
        let rs = rs_projective(&f, &EvaluationSpec::projective(&f, &p1_points(&f), None, 2)).unwrap();
        assert_eq!(crate::LinearCode::from_generator(&f, &m), rs);
        // a_0 v + a_1 u on (1:0), (0:1), (1:1)
        assert_eq!(holographic_encode(&t, 2, &[Elem(1), Elem(0)]).unwrap(), vec![Elem(0), Elem(1), Elem(1)]);
        assert_eq!(holographic_encode(&t, 2, &[Elem(0), Elem(1)]).unwrap(), vec![Elem(1), Elem(0), Elem(1)]);
    }

    #[test]
    fn ranks() {
        let f2 = Field::prime(2).unwrap();
        let m = encode_matrix(&tree_build(&f2, 2).unwrap(), 2).unwrap();
        assert_eq!((m.rows(), m.cols(), m.rank(&f2)), (5, 6, 5));
        let f3 = Field::prime(3).unwrap();
        let m3 = encode_matrix(&tree_build(&f3, 2).unwrap(), 2).unwrap();
        assert_eq!(m3.rank(&f3), 6);
        let m1 = encode_matrix(&tree_build(&f3, 2).unwrap(), 1).unwrap();
        assert_eq!(m1.rows(), 1);
        assert!(m1.row(0).iter().all(|&x| x == Elem::ONE));
    }

    #[test]
    fn shape_errors() {
        let f = Field::prime(2).unwrap();
        let t = tree_build(&f, 2).unwrap();
        assert_eq!(
            holographic_encode(&t, 2, &[Elem(0); 4]).unwrap_err(),
            HoloError::InputShapeMismatch { expected: 5, got: 4 }
        );
        assert!(matches!(holographic_encode(&t, 3, &[Elem(0); 9]), Err(HoloError::KOutOfRange { .. })));
        let t0 = tree_build(&f, 0).unwrap();
        assert_eq!(holographic_encode(&t0, 1, &[Elem(1)]).unwrap_err(), HoloError::NoBoundary);
    }

    #[test]
    fn linear_in_inputs() {
        let f = Field::prime(3).unwrap();
        let t = tree_build(&f, 2).unwrap();
        let len = t.input_len(2);
        let x: Vec<Elem> = (0..len).map(|i| Elem((i as u32 * 2 + 1) % 3)).collect();
        let y: Vec<Elem> = (0..len).map(|i| Elem((i as u32 * i as u32) % 3)).collect();
        let lhs = holographic_encode(&t, 2, &vec_add(&f, &x, &y)).unwrap();
        let rhs = vec_add(&f, &holographic_encode(&t, 2, &x).unwrap(), &holographic_encode(&t, 2, &y).unwrap());
        assert_eq!(lhs, rhs);
    }
}
