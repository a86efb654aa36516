use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::tree::propagate;
use super::HoloError;
use crate::code::{EvalPoint, EvaluationSpec, LinearCode};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;
use crate::proj::p1_points;

/// Dual graph of a degenerate curve: `components` copies of P¹(F_q), and
/// edges `[i, P_i, j, P_j]` gluing point `P_i` of component `i` to point
/// `P_j` of component `j` (points as P¹ indices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MumfordGraph {
    pub components: usize,
    pub edges: Vec<[usize; 4]>,
}

impl MumfordGraph {
    pub fn new(components: usize, edges: Vec<[usize; 4]>) -> MumfordGraph {
        MumfordGraph { components, edges }
    }

    /// Checks indices and that no point is glued twice.
    pub fn validate(&self, f: &Field) -> Result<(), HoloError> {
        let np = f.q() as usize + 1;
        let mut used = HashSet::new();
        for e in &self.edges {
            let [i, pi, j, pj] = *e;
            if i >= self.components || j >= self.components {
                return Err(HoloError::InvalidGluing(format!("component out of range in {e:?}")));
            }
            if pi >= np || pj >= np {
                return Err(HoloError::InvalidGluing(format!("point out of range in {e:?}")));
            }
            if !used.insert((i, pi)) || !used.insert((j, pj)) {
                return Err(HoloError::InvalidGluing(format!("point glued twice in {e:?}")));
            }
        }
        Ok(())
    }

    fn connected_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.components).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[2]));
            parent[a] = b;
        }
        (0..self.components).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// First Betti number `M − N + c`.
    pub fn betti(&self) -> usize {
        self.edges.len() + self.connected_components() - self.components
    }

    /// Unglued `(component, point)` pairs in order.
    pub fn free_legs(&self, f: &Field) -> Vec<(usize, usize)> {
        let used: HashSet<(usize, usize)> = self.edges.iter().flat_map(|e| [(e[0], e[1]), (e[2], e[3])]).collect();
        (0..self.components)
            .flat_map(|c| (0..=f.q() as usize).map(move |p| (c, p)))
            .filter(|x| !used.contains(x))
            .collect()
    }
}

/// The code `C(G)` with its dimension bookkeeping.
#[derive(Clone, Debug)]
pub struct MumfordCode {
    pub k: usize,
    pub betti: usize,
    pub constraint_rank: usize,
    pub solution_dim: usize,
    /// `kN − M`, the dimension expected when the constraints are independent.
    pub expected_dim: i64,
    pub free_legs: Vec<(usize, usize)>,
    /// Rows span the solutions `(f_1, …, f_N)`, component-major coefficients.
    pub solutions: Matrix,
    /// Row j is the free-leg word of solution j.
    pub encoder: Matrix,
    pub code: LinearCode,
}

impl MumfordCode {
    pub fn full_rank(&self) -> bool {
        self.solution_dim as i64 == self.expected_dim
    }
}

fn eval_row(f: &Field, k: usize, point: EvalPoint) -> Vec<Elem> {
    (0..k)
        .map(|i| {
            let mut mono = vec![Elem::ZERO; k];
            mono[i] = Elem::ONE;
            EvaluationSpec::evaluate(f, &mono, point)
        })
        .collect()
}

pub fn mumford_code(f: &Field, g: &MumfordGraph, k: usize) -> Result<MumfordCode, HoloError> {
    g.validate(f)?;
    if k == 0 || k > f.q() as usize + 1 {
        return Err(HoloError::KOutOfRange { k, max: f.q() as usize + 1 });
    }
    let n = g.components;
    let b1 = g.betti();
    // k > 1 + (b1 − 1)/N  ⇔  N(k − 1) > b1 − 1
    if n == 0 || ((n * (k - 1)) as i64) < b1 as i64 {
        return Err(HoloError::KTooSmall { k, b1, components: n });
    }
    let pts: Vec<EvalPoint> = p1_points(f).iter().map(|p| EvalPoint::from_proj(f, p)).collect();
    let mut constraints = Matrix::zeros(0, n * k);
    for e in &g.edges {
        let [i, pi, j, pj] = *e;
        let mut row = vec![Elem::ZERO; n * k];
        for (t, v) in eval_row(f, k, pts[pi]).into_iter().enumerate() {
            row[i * k + t] = f.add(row[i * k + t], v);
        }
        for (t, v) in eval_row(f, k, pts[pj]).into_iter().enumerate() {
            row[j * k + t] = f.sub(row[j * k + t], v);
        }
        constraints.push_row(&row);
    }
    let constraint_rank = constraints.rank(f);
    let solutions = constraints.kernel(f);
    let free_legs = g.free_legs(f);
    let mut eval = Matrix::zeros(n * k, free_legs.len());
    for (col, &(c, p)) in free_legs.iter().enumerate() {
        for (t, v) in eval_row(f, k, pts[p]).into_iter().enumerate() {
            eval.set(c * k + t, col, v);
        }
    }
    let encoder = solutions.mul(f, &eval);
    let code = LinearCode::from_generator(f, &encoder);
    Ok(MumfordCode {
        k,
        betti: b1,
        constraint_rank,
        solution_dim: solutions.rows(),
        expected_dim: (k * n) as i64 - g.edges.len() as i64,
        free_legs,
        solutions,
        encoder,
        code,
    })
}

/// The graph code with trees of the given depth hung off every free leg.
#[derive(Clone, Debug)]
pub struct MumfordExtension {
    pub base: MumfordCode,
    pub depth: usize,
    pub input_dim: usize,
    /// Rows: unit inputs (solution coordinates, then k−1 per internal tree
    /// vertex); columns: boundary symbols.
    pub matrix: Matrix,
    pub rank: usize,
}

/// Attaches a depth-`depth` tree to each free leg. A free leg carrying value
/// `v` ends at a new vertex which receives `v` on its ∞ leg and propagates by
/// the tree rule, so each free leg fans out into `q^depth` boundary legs.
/// Depth 0 keeps the free legs themselves as the boundary.
pub fn mumford_holographic_extend(
    f: &Field,
    g: &MumfordGraph,
    k: usize,
    depth: usize,
) -> Result<MumfordExtension, HoloError> {
    if depth > super::DEFAULT_DEPTH_BOUND {
        return Err(HoloError::DepthBoundExceeded { depth, bound: super::DEFAULT_DEPTH_BOUND });
    }
    let base = mumford_code(f, g, k)?;
    let q = f.q() as usize;
    let per_tree = (q.pow(depth as u32) - 1) / (q - 1);
    let tree_inputs = base.free_legs.len() * per_tree * (k - 1);
    let input_dim = base.solution_dim + tree_inputs;
    let encode = |msg: &[Elem], extra: &[Elem]| -> Vec<Elem> {
        let leg_values = base.encoder.vec_mul(f, msg);
        let mut it = extra.iter();
        let mut out = Vec::new();
        for v in leg_values {
            propagate(f, k, v, depth + 1, &mut it, &mut out);
        }
        out
    };
    let mut matrix = Matrix::zeros(0, base.free_legs.len() * q.pow(depth as u32));
    for j in 0..input_dim {
        let mut e = vec![Elem::ZERO; input_dim];
        e[j] = Elem::ONE;
        let (msg, extra) = e.split_at(base.solution_dim);
        matrix.push_row(&encode(msg, extra));
    }
    let rank = matrix.rank(f);
    Ok(MumfordExtension { base, depth, input_dim, matrix, rank })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::rs_projective;

    #[test]
    fn single_component_is_projective_rs() {
        let f = Field::prime(3).unwrap();
        let g = MumfordGraph::new(1, vec![]);
        let m = mumford_code(&f, &g, 2).unwrap();
        assert_eq!(m.solution_dim, 2);
        let rs = rs_projective(&f, &EvaluationSpec::projective(&f, &p1_points(&f), None, 2)).unwrap();
        assert_eq!(m.code, rs);
    }

    #[test]
    fn genus_one_cycles() {
        let f2 = Field::prime(2).unwrap();
        let g = MumfordGraph::new(2, vec![[0, 0, 1, 0], [0, 1, 1, 1]]);
        assert_eq!(g.betti(), 1);
        let m = mumford_code(&f2, &g, 2).unwrap();
        assert_eq!((m.solution_dim, m.expected_dim), (2, 2));
        let f3 = Field::prime(3).unwrap();
        let tri = MumfordGraph::new(3, vec![[0, 0, 1, 1], [1, 0, 2, 1], [2, 0, 0, 1]]);
        let m3 = mumford_code(&f3, &tri, 2).unwrap();
        assert_eq!((m3.solution_dim, m3.expected_dim), (3, 3));
    }

    #[test]
    fn gluing_errors() {
        let f = Field::prime(2).unwrap();
        let twice = MumfordGraph::new(2, vec![[0, 0, 1, 0], [0, 0, 1, 1]]);
        assert!(matches!(mumford_code(&f, &twice, 2), Err(HoloError::InvalidGluing(_))));
        // b1 = 2 on a single vertex needs k > 2
        let loops = MumfordGraph::new(1, vec![[0, 0, 0, 1], [0, 2, 0, 3]]);
        let f3 = Field::prime(3).unwrap();
        assert!(matches!(mumford_code(&f3, &loops, 2), Err(HoloError::KTooSmall { .. })));
    }

    #[test]
    fn extension_depth_zero_matches_code() {
        let f = Field::prime(2).unwrap();
        let g = MumfordGraph::new(2, vec![[0, 0, 1, 0], [0, 1, 1, 1]]);
        let e0 = mumford_holographic_extend(&f, &g, 2, 0).unwrap();
        assert_eq!(e0.matrix, e0.base.encoder);
        let e1 = mumford_holographic_extend(&f, &g, 2, 1).unwrap();
        assert_eq!((e1.input_dim, e1.matrix.cols()), (2 + 2, 4));
        // both components carry the same linear form, so the two free legs agree
        assert_eq!(e1.base.code.k(), 1);
        assert_eq!(e1.rank, 1 + 2);
        let e2 = mumford_holographic_extend(&f, &g, 2, 2).unwrap();
        assert_eq!((e2.input_dim, e2.matrix.cols()), (2 + 2 * 3, 8));
    }
}
