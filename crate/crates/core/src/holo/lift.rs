use serde::Serialize;

use super::tree::{tree_build, RootedTree};
use super::HoloError;
use crate::code::{rs_projective, EvaluationSpec};
use crate::field::Field;
use crate::proj::p1_points;
use crate::quantum::{crss_hermitian, StabilizerCode};

/// One tree edge seen from both ends: the parent's leg (a P¹ index in the
/// parent's chart) carries the same qudit as the child's ∞ leg.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeMatch {
    pub parent: Vec<u32>,
    pub parent_leg: usize,
    pub child: Vec<u32>,
    pub child_leg: usize,
}

/// Per-vertex quantum codes on the tree over F_{q²}. Every vertex carries the
/// same `[[q²+1, q²−2q+1, q+1]]_q` code built from the projective RS code of
/// dimension q; the edges record which legs must agree.
#[derive(Clone, Debug)]
pub struct QuantumTreeLift {
    pub tree: RootedTree,
    pub vertex_code: StabilizerCode,
    pub edges: Vec<EdgeMatch>,
}

impl QuantumTreeLift {
    pub fn big_field(&self) -> &Field {
        self.tree.field()
    }

    /// Number of q-ary qudits on boundary legs.
    pub fn boundary_qudits(&self) -> usize {
        self.tree.leaves().len()
    }
}

/// Builds the lift for the base field `f` (order q) and tree depth `depth`.
pub fn quantum_tree_lift(f: &Field, depth: usize) -> Result<QuantumTreeLift, HoloError> {
    let q = f.q();
    let big = Field::new(f.p(), 2 * f.r(), None)?;
    let tree = tree_build(&big, depth)?;
    let spec = EvaluationSpec::projective(&big, &p1_points(&big), None, q as usize);
    let classical = rs_projective(&big, &spec)?;
    let vertex_code = crss_hermitian(&classical)?;
    let edges = tree
        .vertices()
        .iter()
        .filter(|v| !v.is_empty())
        .map(|v| {
            let (last, parent) = v.split_last().unwrap();
            // root children are labelled by P¹ index, deeper ones by affine index
            let parent_leg = if parent.is_empty() { *last as usize } else { *last as usize + 1 };
            EdgeMatch { parent: parent.to_vec(), parent_leg, child: v.clone(), child_leg: 0 }
        })
        .collect();
    Ok(QuantumTreeLift { tree, vertex_code, edges })
}
