//! Local codes on the rank-2 building: degree-m forms on P²(F_q) evaluated
//! at rational points, restricted to lines of the vertex link, and
//! propagated across 2-cells by linear algebra.

use serde::Serialize;
use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::field::{Elem, Field};
use crate::linalg::Matrix;
use crate::proj::{p2_lines, p2_points, ProjLine, ProjPoint};
use crate::ErrorCode;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildingError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("degree {m} is outside [1, {q}]")]
    DegreeOutOfRange { m: usize, q: u32 },
    #[error("the two lines coincide")]
    SameLine,
    #[error("no section matches the given line values")]
    InconsistentConstraints,
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

impl ErrorCode for BuildingError {
    fn code(&self) -> &'static str {
        match self {
            BuildingError::Code(e) => e.code(),
            BuildingError::DegreeOutOfRange { .. } => "DegreeOutOfRange",
            BuildingError::SameLine => "SameLine",
            BuildingError::InconsistentConstraints => "InconsistentConstraints",
            BuildingError::LengthMismatch { .. } => "LengthMismatch",
        }
    }
}

/// Homogeneous forms of degree m in x0, x1, x2. Monomials are listed by
/// exponent triple in descending lexicographic order, so `x0^m` comes first.
#[derive(Clone, Debug)]
pub struct SectionSpace {
    field: Field,
    m: usize,
    monomials: Vec<[usize; 3]>,
}

impl SectionSpace {
    pub fn new(f: &Field, m: usize) -> SectionSpace {
        let mut monomials = Vec::new();
        for e0 in (0..=m).rev() {
            for e1 in (0..=m - e0).rev() {
                monomials.push([e0, e1, m - e0 - e1]);
            }
        }
        SectionSpace { field: f.clone(), m, monomials }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[[usize; 3]] {
        &self.monomials
    }

    /// Values of the monomials at the canonical representative of `p`.
    pub fn eval_row(&self, p: &ProjPoint) -> Vec<Elem> {
        let f = &self.field;
        let c = p.coords();
        self.monomials.iter().map(|e| (0..3).fold(Elem::ONE, |acc, i| f.mul(acc, f.pow(c[i], e[i] as u64)))).collect()
    }

    pub fn evaluate(&self, section: &[Elem], p: &ProjPoint) -> Elem {
        crate::linalg::dot(&self.field, section, &self.eval_row(p))
    }

    fn check(&self, section: &[Elem]) -> Result<(), BuildingError> {
        if section.len() != self.dim() {
            return Err(BuildingError::LengthMismatch { expected: self.dim(), got: section.len() });
        }
        Ok(())
    }
}

/// Values on the q+1 points of a line, in canonical point order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineValueVector {
    pub line: ProjLine,
    pub values: Vec<Elem>,
}

/// The code of degree-m forms evaluated at all points of P²(F_q), 0 < m ≤ q.
pub fn p2_evaluation_code(f: &Field, m: usize) -> Result<LinearCode, BuildingError> {
    if m == 0 || m > f.q() as usize {
        return Err(BuildingError::DegreeOutOfRange { m, q: f.q() });
    }
    Ok(p2_evaluation_code_unchecked(f, m))
}

/// Same as [`p2_evaluation_code`] without the degree check; `m = 0` gives
/// the repetition code.
pub fn p2_evaluation_code_unchecked(f: &Field, m: usize) -> LinearCode {
    let space = SectionSpace::new(f, m);
    let pts = p2_points(f);
    let mut g = Matrix::zeros(space.dim(), pts.len());
    for (j, p) in pts.iter().enumerate() {
        for (i, v) in space.eval_row(p).into_iter().enumerate() {
            g.set(i, j, v);
        }
    }
    LinearCode::from_generator(f, &g)
}

pub fn restrict_to_line(
    space: &SectionSpace,
    section: &[Elem],
    line: &ProjLine,
) -> Result<LineValueVector, BuildingError> {
    space.check(section)?;
    let values = line.points(&space.field).iter().map(|p| space.evaluate(section, p)).collect();
    Ok(LineValueVector { line: line.clone(), values })
}

/// Whether two line vectors agree at the point where the lines meet.
pub fn cell_consistency(f: &Field, xv: &LineValueVector, xw: &LineValueVector) -> Result<bool, BuildingError> {
    if xv.line == xw.line {
        return Err(BuildingError::SameLine);
    }
    let n = f.q() as usize + 1;
    for x in [xv, xw] {
        if x.values.len() != n {
            return Err(BuildingError::LengthMismatch { expected: n, got: x.values.len() });
        }
    }
    let p = xv.line.meet(f, &xw.line).expect("distinct lines meet");
    let i = xv.line.points(f).iter().position(|x| *x == p).expect("meet point on line");
    let j = xw.line.points(f).iter().position(|x| *x == p).expect("meet point on line");
    Ok(xv.values[i] == xw.values[j])
}

/// Outputs on a target line compatible with the known line values: an affine
/// subspace `base + span(directions)`.
#[derive(Clone, Debug, Serialize)]
pub struct CellPropagation {
    pub base: LineValueVector,
    /// Rows span the direction space, in reduced form.
    pub directions: Matrix,
    /// Dimension of the affine space of sections matching the constraints.
    pub section_dim: usize,
    /// Rank of the constraint system.
    pub constraint_rank: usize,
}

impl CellPropagation {
    pub fn output_dim(&self) -> usize {
        self.directions.rows()
    }

    pub fn contains(&self, f: &Field, values: &[Elem]) -> bool {
        let diff = crate::linalg::vec_add(f, values, &crate::linalg::vec_scale(f, f.neg(Elem::ONE), &self.base.values));
        diff.iter().all(|x| x.is_zero()) || self.directions.row_space_contains(f, &diff)
    }
}

pub fn propagate_cell(
    space: &SectionSpace,
    known: &[LineValueVector],
    target: &ProjLine,
) -> Result<CellPropagation, BuildingError> {
    let f = &space.field;
    let n = f.q() as usize + 1;
    let mut a = Matrix::zeros(0, space.dim());
    let mut rhs = Vec::new();
    for x in known {
        if x.line == *target {
            return Err(BuildingError::SameLine);
        }
        if x.values.len() != n {
            return Err(BuildingError::LengthMismatch { expected: n, got: x.values.len() });
        }
        for (p, &v) in x.line.points(f).iter().zip(&x.values) {
            a.push_row(&space.eval_row(p));
            rhs.push(v);
        }
    }
    let constraint_rank = a.rank(f);
    let (particular, kernel) = if a.rows() == 0 {
        (vec![Elem::ZERO; space.dim()], Matrix::identity(space.dim()))
    } else {
        a.solve(f, &rhs).ok_or(BuildingError::InconsistentConstraints)?
    };
    let base = restrict_to_line(space, &particular, target)?;
    let pts = target.points(f);
    let mut restrict = Matrix::zeros(space.dim(), pts.len());
    for (j, p) in pts.iter().enumerate() {
        for (i, v) in space.eval_row(p).into_iter().enumerate() {
            restrict.set(i, j, v);
        }
    }
    let (directions, _) = kernel.mul(f, &restrict).rref(f);
    Ok(CellPropagation { base, directions, section_dim: kernel.rows(), constraint_rank })
}

/// Outputs of one root section on every line of the link.
#[derive(Clone, Debug, Serialize)]
pub struct BuildingLocalCode {
    pub outputs: Vec<LineValueVector>,
    /// Number of line pairs checked for agreement at their meeting point.
    pub checks: usize,
}

pub fn building_local_code(space: &SectionSpace, root_section: &[Elem]) -> Result<BuildingLocalCode, BuildingError> {
    let f = &space.field;
    let outputs =
        p2_lines(f).iter().map(|l| restrict_to_line(space, root_section, l)).collect::<Result<Vec<_>, _>>()?;
    let mut checks = 0;
    for i in 0..outputs.len() {
        for j in i + 1..outputs.len() {
            assert!(cell_consistency(f, &outputs[i], &outputs[j])?, "restrictions of one section agree");
            checks += 1;
        }
    }
    Ok(BuildingLocalCode { outputs, checks })
}
