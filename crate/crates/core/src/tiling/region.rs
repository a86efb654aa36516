use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::TilingError;
use crate::field::{Elem, Field};
use crate::linalg::Matrix;

pub const DEFAULT_REGION_BOUND: usize = 4;

/// An oriented 2-complex. Edges run `[tail, head]`; faces are closed walks
/// given as `[edge, sign]` pairs with sign ±1 for the traversal direction.
/// `boundary` lists the edges that lie on exactly one face of a disk region;
/// each gets its own dual vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceComplex {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<Vec<(usize, i8)>>,
    #[serde(default)]
    pub boundary: Vec<usize>,
}

impl SurfaceComplex {
    pub fn validate(&self) -> Result<(), TilingError> {
        let bad = |m: String| Err(TilingError::InvalidComplex(m));
        for (i, e) in self.edges.iter().enumerate() {
            if e[0] >= self.vertices || e[1] >= self.vertices {
                return bad(format!("edge {i} has an endpoint out of range"));
            }
        }
        for (i, face) in self.faces.iter().enumerate() {
            if face.iter().any(|&(e, s)| e >= self.edges.len() || (s != 1 && s != -1)) {
                return bad(format!("face {i} has a bad edge entry"));
            }
        }
        if self.boundary.iter().any(|&e| e >= self.edges.len()) {
            return bad("boundary edge out of range".into());
        }
        Ok(())
    }

    /// Vertices not touching a boundary edge; their stars generate V.
    pub fn interior_vertices(&self) -> Vec<usize> {
        let mut on_boundary = vec![false; self.vertices];
        for &e in &self.boundary {
            on_boundary[self.edges[e][0]] = true;
            on_boundary[self.edges[e][1]] = true;
        }
        (0..self.vertices).filter(|&v| !on_boundary[v]).collect()
    }

    /// Rows of ℰ: signed vertex–edge incidence for interior vertices.
    pub fn vertex_matrix(&self, f: &Field) -> Matrix {
        let n = self.edges.len();
        let verts = self.interior_vertices();
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut m = Matrix::zeros(verts.len(), n);
        for (e, &[t, h]) in self.edges.iter().enumerate() {
            if t == h {
                continue;
            }
            if let Some(&i) = pos.get(&h) {
                m.set(i, e, f.add(m.get(i, e), Elem::ONE));
            }
            if let Some(&i) = pos.get(&t) {
                m.set(i, e, f.sub(m.get(i, e), Elem::ONE));
            }
        }
        m
    }

    /// Rows of ℰ*: one per face, then one unit row per boundary edge.
    pub fn dual_matrix(&self, f: &Field) -> Matrix {
        let n = self.edges.len();
        let mut m = Matrix::zeros(0, n);
        for face in &self.faces {
            let mut row = vec![Elem::ZERO; n];
            for &(e, s) in face {
                row[e] = f.add(row[e], f.from_int(s as i64));
            }
            m.push_row(&row);
        }
        for &e in &self.boundary {
            let mut row = vec![Elem::ZERO; n];
            row[e] = Elem::ONE;
            m.push_row(&row);
        }
        m
    }

    /// Number of dual vertices: faces plus boundary edges.
    pub fn dual_vertices(&self) -> usize {
        self.faces.len() + self.boundary.len()
    }
}

struct Builder {
    vertices: usize,
    edges: Vec<[usize; 2]>,
    index: HashMap<(usize, usize), usize>,
    faces: Vec<Vec<(usize, i8)>>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.vertices += 1;
        self.vertices - 1
    }

    fn edge(&mut self, u: usize, v: usize) -> (usize, i8) {
        if let Some(&e) = self.index.get(&(u, v)) {
            return (e, 1);
        }
        if let Some(&e) = self.index.get(&(v, u)) {
            return (e, -1);
        }
        self.edges.push([u, v]);
        self.index.insert((u, v), self.edges.len() - 1);
        (self.edges.len() - 1, 1)
    }

    /// Adds the face with the given counterclockwise vertex cycle.
    fn face(&mut self, cycle: &[usize]) {
        let walk = (0..cycle.len()).map(|i| self.edge(cycle[i], cycle[(i + 1) % cycle.len()])).collect();
        self.faces.push(walk);
    }
}

pub fn region_build(n: usize) -> Result<SurfaceComplex, TilingError> {
    region_build_bounded(n, DEFAULT_REGION_BOUND)
}

/// Grows the {5,4} disk ring by ring from a central pentagon. Each ring adds
/// one pentagon across every boundary edge and one pentagon at every boundary
/// vertex that so far meets a single face; vertices meeting two faces are
/// closed off by the two edge pentagons alone.
pub fn region_build_bounded(n: usize, bound: usize) -> Result<SurfaceComplex, TilingError> {
    if n > bound {
        return Err(TilingError::DepthBoundExceeded { depth: n, bound });
    }
    let mut b = Builder { vertices: 0, edges: Vec::new(), index: HashMap::new(), faces: Vec::new() };
    let center: Vec<usize> = (0..5).map(|_| b.vertex()).collect();
    b.face(&center);
    // counterclockwise boundary cycle with the number of faces at each vertex
    let mut ring: Vec<(usize, u8)> = center.iter().map(|&v| (v, 1)).collect();
    for _ in 0..n {
        let len = ring.len();
        // (left spoke, right spoke) at each boundary vertex, plus the outer
        // path between them for the single-face vertices
        let mut spokes = Vec::with_capacity(len);
        for &(v, c) in &ring {
            if c == 2 {
                let s = b.vertex();
                spokes.push((s, s, Vec::new()));
            } else {
                let (l, y1, y2, r) = (b.vertex(), b.vertex(), b.vertex(), b.vertex());
                b.face(&[l, y1, y2, r, v]);
                spokes.push((l, r, vec![y1, y2]));
            }
        }
        let mut next = Vec::new();
        for i in 0..len {
            let j = (i + 1) % len;
            let (vi, vj) = (ring[i].0, ring[j].0);
            let (ri, lj) = (spokes[i].1, spokes[j].0);
            let mid = b.vertex();
            b.face(&[vj, vi, ri, mid, lj]);
            next.push((ri, 2));
            next.push((mid, 1));
            if ring[j].1 == 1 {
                next.push((lj, 2));
                next.extend(spokes[j].2.iter().map(|&y| (y, 1)));
            }
        }
        ring = next;
    }
    let boundary = (0..ring.len()).map(|i| b.edge(ring[i].0, ring[(i + 1) % ring.len()].0).0).collect();
    Ok(SurfaceComplex { vertices: b.vertices, edges: b.edges, faces: b.faces, boundary })
}

/// The L×L square tessellation of the torus. Vertex `(x, y)` is `x + L·y`;
/// edge `2v` runs right from `v`, edge `2v + 1` runs up.
pub fn toric_code(l: usize) -> Result<SurfaceComplex, TilingError> {
    if l < 2 {
        return Err(TilingError::InvalidComplex(format!("torus side {l} is below 2")));
    }
    let v = |x: usize, y: usize| (x % l) + l * (y % l);
    let mut edges = Vec::with_capacity(2 * l * l);
    for y in 0..l {
        for x in 0..l {
            edges.push([v(x, y), v(x + 1, y)]);
            edges.push([v(x, y), v(x, y + 1)]);
        }
    }
    let faces = (0..l)
        .flat_map(|y| (0..l).map(move |x| (x, y)))
        .map(|(x, y)| {
            let right = |a, b| 2 * v(a, b);
            let up = |a, b| 2 * v(a, b) + 1;
            vec![(right(x, y), 1), (up(x + 1, y), 1), (right(x, y + 1), -1), (up(x, y), -1)]
        })
        .collect();
    Ok(SurfaceComplex { vertices: l * l, edges, faces, boundary: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::pentagon_census;

    fn edge_face_counts(c: &SurfaceComplex) -> Vec<usize> {
        let mut count = vec![0; c.edges.len()];
        for face in &c.faces {
            for &(e, _) in face {
                count[e] += 1;
            }
        }
        count
    }

    #[test]
    fn single_pentagon() {
        let c = region_build(0).unwrap();
        assert_eq!((c.vertices, c.edges.len(), c.faces.len(), c.boundary.len()), (5, 5, 1, 5));
        assert!(c.interior_vertices().is_empty());
    }

    #[test]
    fn rings_match_census() {
        let census = pentagon_census(4);
        for n in 0..=4 {
            let c = region_build(n).unwrap();
            assert_eq!(c.faces.len() as u64, census.total_faces(n));
            let verts = 5 + census.steps.iter().take(n).map(|s| s.new_vertices).sum::<u64>();
            assert_eq!(c.vertices as u64, verts);
            let expected_boundary = if n == 0 { 5 } else { census.steps[n - 1].boundary_edges };
            assert_eq!(c.boundary.len() as u64, expected_boundary);
            // Euler characteristic of a disk
            assert_eq!(c.vertices as i64 - c.edges.len() as i64 + c.faces.len() as i64, 1);
            let counts = edge_face_counts(&c);
            assert!(counts.iter().all(|&k| k == 1 || k == 2));
            assert_eq!(counts.iter().filter(|&&k| k == 1).count(), c.boundary.len());
        }
    }

    #[test]
    fn four_pentagons_at_interior_vertices() {
        let c = region_build(2).unwrap();
        let mut deg = vec![0; c.vertices];
        for e in &c.edges {
            deg[e[0]] += 1;
            deg[e[1]] += 1;
        }
        assert!(c.interior_vertices().iter().all(|&v| deg[v] == 4));
        assert!(c.faces.iter().all(|f| f.len() == 5));
    }

    #[test]
    fn bound_and_torus() {
        assert!(matches!(region_build(5), Err(TilingError::DepthBoundExceeded { .. })));
        let t = toric_code(3).unwrap();
        assert_eq!((t.vertices, t.edges.len(), t.faces.len()), (9, 18, 9));
        assert!(edge_face_counts(&t).iter().all(|&k| k == 2));
        assert!(toric_code(1).is_err());
    }
}
