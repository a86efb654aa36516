use serde::Serialize;

use super::region::SurfaceComplex;
use super::TilingError;
use crate::code::{LinearCode, DEFAULT_SEARCH_BOUND};
use crate::field::{Elem, Field};
use crate::linalg::vec_scale;
use crate::quantum::{ErrorOperator, StabilizerCode};

/// Homological code of a complex and its parameter report.
#[derive(Clone, Debug, Serialize)]
pub struct SurfaceCode {
    #[serde(skip)]
    pub stabilizer: StabilizerCode,
    pub n: usize,
    pub k: usize,
    pub dim_v: usize,
    pub dim_v_dual: usize,
    /// `dim V^⊥ / V*`.
    pub homology: usize,
    /// `dim V*^⊥ / V`.
    pub cohomology: usize,
    /// Minimum weight on `V^⊥ ∖ V*`, if that set is nonempty.
    pub d_v: Option<usize>,
    /// Minimum weight on `V*^⊥ ∖ V`.
    pub d_v_dual: Option<usize>,
    pub d: Option<usize>,
}

/// Builds the code with X-type generators from ℰ and Z-type generators from
/// ℰ*. Distances are searched exhaustively within `bound`; pass `None` to
/// skip them.
pub fn surface_code(f: &Field, complex: &SurfaceComplex, bound: Option<u64>) -> Result<SurfaceCode, TilingError> {
    complex.validate()?;
    let n = complex.edges.len();
    let e = complex.vertex_matrix(f);
    let es = complex.dual_matrix(f);
    if !e.mul(f, &es.transpose()).is_zero() {
        return Err(TilingError::NotOrthogonal);
    }
    let v = LinearCode::from_generator(f, &e);
    let vs = LinearCode::from_generator(f, &es);
    let zero = vec![Elem::ZERO; n];
    let mut gens = Vec::new();
    // scale by a basis of F_q so the F_p span is the F_q span
    for g in f.basis().to_vec() {
        for r in 0..v.k() {
            gens.push(ErrorOperator::new(vec_scale(f, g, v.generator().row(r)), zero.clone())?);
        }
        for r in 0..vs.k() {
            gens.push(ErrorOperator::new(zero.clone(), vec_scale(f, g, vs.generator().row(r)))?);
        }
    }
    let stabilizer = StabilizerCode::from_generators(f, n, gens)?;
    let v_perp = v.dual_euclidean();
    let vs_perp = vs.dual_euclidean();
    let (d_v, d_v_dual) = match bound {
        Some(b) => (v_perp.min_distance_outside(&vs, b)?, vs_perp.min_distance_outside(&v, b)?),
        None => (None, None),
    };
    let d = match (d_v, d_v_dual) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(SurfaceCode {
        n,
        k: n - v.k() - vs.k(),
        dim_v: v.k(),
        dim_v_dual: vs.k(),
        homology: v_perp.k() - vs.k(),
        cohomology: vs_perp.k() - v.k(),
        d_v,
        d_v_dual,
        d,
        stabilizer,
    })
}

impl SurfaceCode {
    pub fn with_default_bound(f: &Field, complex: &SurfaceComplex) -> Result<SurfaceCode, TilingError> {
        surface_code(f, complex, Some(DEFAULT_SEARCH_BOUND))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{region_build, toric_code};

    #[test]
    fn toric_parameters() {
        let f = Field::prime(2).unwrap();
        for (l, d) in [(2, 2), (3, 3)] {
            let c = surface_code(&f, &toric_code(l).unwrap(), Some(DEFAULT_SEARCH_BOUND)).unwrap();
            assert_eq!((c.n, c.k, c.d), (2 * l * l, 2, Some(d)));
            assert_eq!(c.dim_v, l * l - 1);
            assert_eq!(c.stabilizer.k(), 2);
        }
    }

    #[test]
    fn toric_over_f3() {
        let f = Field::prime(3).unwrap();
        let c = surface_code(&f, &toric_code(2).unwrap(), Some(DEFAULT_SEARCH_BOUND)).unwrap();
        assert_eq!((c.k, c.d), (2, Some(2)));
    }

    #[test]
    fn tetrahedron_has_no_logical_qudits() {
        // the boundary of a tetrahedron, a sphere
        let edges = vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
        let faces = vec![
            vec![(0, 1), (3, 1), (1, -1)],
            vec![(0, 1), (4, 1), (2, -1)],
            vec![(1, 1), (5, 1), (2, -1)],
            vec![(3, 1), (5, 1), (4, -1)],
        ];
        let c = SurfaceComplex { vertices: 4, edges, faces, boundary: vec![] };
        let f = Field::prime(2).unwrap();
        let s = surface_code(&f, &c, Some(DEFAULT_SEARCH_BOUND)).unwrap();
        assert_eq!((s.n, s.k, s.homology, s.d), (6, 0, 0, None));
    }

    #[test]
    fn disk_regions() {
        let f = Field::prime(2).unwrap();
        for n in 0..=1 {
            let s = surface_code(&f, &region_build(n).unwrap(), Some(DEFAULT_SEARCH_BOUND)).unwrap();
            assert_eq!(s.k, 0);
            assert_eq!(s.k, s.stabilizer.k());
        }
    }

    #[test]
    fn rejects_non_orthogonal() {
        let c =
            SurfaceComplex { vertices: 3, edges: vec![[0, 1], [1, 2]], faces: vec![vec![(0, 1)]], boundary: vec![] };
        let f = Field::prime(2).unwrap();
        assert_eq!(surface_code(&f, &c, None).unwrap_err(), TilingError::NotOrthogonal);
    }
}
