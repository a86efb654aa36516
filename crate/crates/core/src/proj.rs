//! Points of P¹(F_q) and P²(F_q), lines of P²(F_q), and the point–line
//! incidence graph that forms the link of a vertex in the rank-2 building.
//!
//! Ordering conventions:
//! * P¹: index 0 is ∞ = (1:0); index `1 + i` is the affine point with
//!   coordinate `Elem(i)`, i.e. the class of `(x:1)`.
//! * P²: canonical triples sorted by the number `Σ idx(c_i) q^i`, which puts
//!   `(1:0:0), (0:1:0), (1:1:0), …` first. Lines use the same order on their
//!   dual coordinates.

use serde::{Deserialize, Serialize};

use crate::field::{Elem, Field};

/// A point of projective space in canonical form (first nonzero coordinate 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjPoint {
    coords: Vec<Elem>,
}

impl ProjPoint {
    /// Canonicalizes a nonzero coordinate vector; `None` for the zero vector.
    pub fn new(f: &Field, coords: &[Elem]) -> Option<ProjPoint> {
        let lead = coords.iter().copied().find(|c| !c.is_zero())?;
        let inv = f.inv(lead).ok()?;
        Some(ProjPoint { coords: coords.iter().map(|&c| f.mul(c, inv)).collect() })
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// For a point of P¹: the affine coordinate `u/v`, or `None` at ∞.
    pub fn affine_coordinate(&self, f: &Field) -> Option<Elem> {
        debug_assert_eq!(self.coords.len(), 2);
        let (u, v) = (self.coords[0], self.coords[1]);
        if v.is_zero() {
            None
        } else {
            Some(f.div(u, v).expect("v is nonzero"))
        }
    }
}

/// A line of P²(F_q), given by canonical dual coordinates `(l0:l1:l2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProjLine {
    dual: ProjPoint,
}

impl ProjLine {
    pub fn new(f: &Field, coeffs: &[Elem]) -> Option<ProjLine> {
        if coeffs.len() != 3 {
            return None;
        }
        Some(ProjLine { dual: ProjPoint::new(f, coeffs)? })
    }

    pub fn coeffs(&self) -> &[Elem] {
        self.dual.coords()
    }

    pub fn contains(&self, f: &Field, p: &ProjPoint) -> bool {
        crate::linalg::dot(f, self.coeffs(), p.coords()).is_zero()
    }

    /// Points of the line in canonical P² order.
    pub fn points(&self, f: &Field) -> Vec<ProjPoint> {
        p2_points(f).into_iter().filter(|p| self.contains(f, p)).collect()
    }

    /// The common point of two distinct lines.
    pub fn meet(&self, f: &Field, other: &ProjLine) -> Option<ProjPoint> {
        let (a, b) = (self.coeffs(), other.coeffs());
        let cross = [
            f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
        ];
        ProjPoint::new(f, &cross)
    }
}

/// The q+1 points of P¹(F_q): ∞ first, then affine points by coordinate.
pub fn p1_points(f: &Field) -> Vec<ProjPoint> {
    let mut out = vec![ProjPoint { coords: vec![Elem::ONE, Elem::ZERO] }];
    for x in f.elements() {
        out.push(ProjPoint::new(f, &[x, Elem::ONE]).expect("nonzero"));
    }
    out
}

/// Index of a P¹ point in [`p1_points`] order.
pub fn p1_index(f: &Field, p: &ProjPoint) -> usize {
    match p.affine_coordinate(f) {
        None => 0,
        Some(x) => 1 + x.index() as usize,
    }
}

fn p2_key(f: &Field, coords: &[Elem]) -> u64 {
    coords.iter().rev().fold(0u64, |acc, c| acc * f.q() as u64 + c.index() as u64)
}

/// The q²+q+1 points of P²(F_q) in canonical order.
pub fn p2_points(f: &Field) -> Vec<ProjPoint> {
    let q = f.q();
    let mut out = Vec::with_capacity((q * q + q + 1) as usize);
    for a in f.elements() {
        for b in f.elements() {
            out.push(ProjPoint { coords: vec![Elem::ONE, a, b] });
        }
        out.push(ProjPoint { coords: vec![Elem::ZERO, Elem::ONE, a] });
    }
    out.push(ProjPoint { coords: vec![Elem::ZERO, Elem::ZERO, Elem::ONE] });
    out.sort_by_key(|p| p2_key(f, p.coords()));
    out
}

/// The q²+q+1 lines of P²(F_q) in canonical order.
pub fn p2_lines(f: &Field) -> Vec<ProjLine> {
    p2_points(f).into_iter().map(|dual| ProjLine { dual }).collect()
}

/// Index of a P² point in [`p2_points`] order.
pub fn p2_index(f: &Field, p: &ProjPoint) -> usize {
    p2_points(f).iter().position(|x| x == p).expect("point of P²")
}

/// A vertex of the building link: a point or a line of P²(F_q), by index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "index", rename_all = "lowercase")]
pub enum LinkVertex {
    Point(usize),
    Line(usize),
}

/// Bipartite point–line incidence graph of P²(F_q).
#[derive(Clone, Debug, Serialize)]
pub struct BuildingLink {
    pub points: Vec<Vec<u32>>,
    pub lines: Vec<Vec<u32>>,
    /// `(point index, line index)` for each incident pair.
    pub edges: Vec<(usize, usize)>,
}

impl BuildingLink {
    pub fn vertex_count(&self) -> usize {
        self.points.len() + self.lines.len()
    }

    pub fn degree(&self, v: LinkVertex) -> usize {
        match v {
            LinkVertex::Point(i) => self.edges.iter().filter(|e| e.0 == i).count(),
            LinkVertex::Line(j) => self.edges.iter().filter(|e| e.1 == j).count(),
        }
    }

    pub fn adjacent(&self, u: LinkVertex, w: LinkVertex) -> bool {
        match (u, w) {
            (LinkVertex::Point(i), LinkVertex::Line(j)) | (LinkVertex::Line(j), LinkVertex::Point(i)) => {
                self.edges.contains(&(i, j))
            }
            _ => false,
        }
    }
}

pub fn link_graph(f: &Field) -> BuildingLink {
    let pts = p2_points(f);
    let lines = p2_lines(f);
    let mut edges = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in lines.iter().enumerate() {
            if l.contains(f, p) {
                edges.push((i, j));
            }
        }
    }
    let idx = |c: &[Elem]| c.iter().map(|e| e.index()).collect();
    BuildingLink {
        points: pts.iter().map(|p| idx(p.coords())).collect(),
        lines: lines.iter().map(|l| idx(l.coeffs())).collect(),
        edges,
    }
}

/// Whether the curves of the blow-up of P² at all rational points that
/// correspond to `u` and `w` meet. A point vertex stands for its exceptional
/// divisor, a line vertex for the proper transform of the line. Exceptional
/// divisors over distinct points are disjoint, two distinct proper
/// transforms are separated because their meeting point was blown up, and
/// `E_P` meets the transform of `L` exactly when `P ∈ L`.
pub fn blowup_lines_intersect(f: &Field, u: LinkVertex, w: LinkVertex) -> bool {
    match (u, w) {
        (LinkVertex::Point(_), LinkVertex::Point(_)) | (LinkVertex::Line(_), LinkVertex::Line(_)) => {
            // Same vertex: a curve meets itself, but that is not a 2-simplex.
            false
        }
        (LinkVertex::Point(i), LinkVertex::Line(j)) | (LinkVertex::Line(j), LinkVertex::Point(i)) => {
            let p = &p2_points(f)[i];
            p2_lines(f)[j].contains(f, p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn p1_counts_and_order() {
        for (p, r) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let f = Field::new(p, r, None).unwrap();
            let pts = p1_points(&f);
            assert_eq!(pts.len(), f.q() as usize + 1);
            let set: HashSet<_> = pts.iter().collect();
            assert_eq!(set.len(), pts.len());
            for (i, pt) in pts.iter().enumerate() {
                assert_eq!(p1_index(&f, pt), i);
            }
            assert_eq!(pts[0].affine_coordinate(&f), None);
        }
    }

    #[test]
    fn p2_first_points() {
        let f = Field::prime(2).unwrap();
        let pts = p2_points(&f);
        assert_eq!(pts.len(), 7);
        let first: Vec<Vec<u32>> = pts[..3].iter().map(|p| p.coords().iter().map(|e| e.0).collect()).collect();
        assert_eq!(first, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]);
    }

    #[test]
    fn lines_meet_once() {
        for q in [2, 3] {
            let f = Field::prime(q).unwrap();
            let lines = p2_lines(&f);
            assert_eq!(lines.len(), (q * q + q + 1) as usize);
            for l in &lines {
                assert_eq!(l.points(&f).len(), q as usize + 1);
            }
            for (i, a) in lines.iter().enumerate() {
                for b in &lines[i + 1..] {
                    let common: Vec<_> = a.points(&f).into_iter().filter(|p| b.contains(&f, p)).collect();
                    assert_eq!(common.len(), 1);
                    assert_eq!(a.meet(&f, b).as_ref(), Some(&common[0]));
                }
            }
        }
    }

    #[test]
    fn fano_link() {
        let f = Field::prime(2).unwrap();
        let g = link_graph(&f);
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edges.len(), 21);
        for i in 0..7 {
            assert_eq!(g.degree(LinkVertex::Point(i)), 3);
            assert_eq!(g.degree(LinkVertex::Line(i)), 3);
        }
        let f3 = Field::prime(3).unwrap();
        let g3 = link_graph(&f3);
        assert_eq!((g3.vertex_count(), g3.edges.len()), (26, 52));
    }

    #[test]
    fn blowup_rule_matches_incidence() {
        let f = Field::prime(2).unwrap();
        let g = link_graph(&f);
        let verts: Vec<LinkVertex> = (0..7).map(LinkVertex::Point).chain((0..7).map(LinkVertex::Line)).collect();
        for &u in &verts {
            for &w in &verts {
                let b = blowup_lines_intersect(&f, u, w);
                assert_eq!(b, blowup_lines_intersect(&f, w, u));
                assert_eq!(b, g.adjacent(u, w));
            }
        }
    }
}
