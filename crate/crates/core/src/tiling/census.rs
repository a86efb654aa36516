use serde::Serialize;

/// Counts for one growth step of the pentagon tiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusStep {
    pub step: usize,
    /// Tiles sharing an edge with the previous layer.
    pub m: u64,
    /// Tiles sharing only a vertex with the previous layer.
    pub n: u64,
    /// New faces `m + n`.
    pub faces: u64,
    /// New vertices `2m + 3n`.
    pub new_vertices: u64,
    /// Vertices of the region up to this step.
    pub vertices: u64,
    /// Boundary edges of the region after this step.
    pub boundary_edges: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TilingCensus {
    pub steps: Vec<CensusStep>,
}

impl TilingCensus {
    /// Faces of the region after `n` steps, counting the central pentagon.
    pub fn total_faces(&self, n: usize) -> u64 {
        1 + self.steps.iter().take(n).map(|s| s.faces).sum::<u64>()
    }
}

/// Steps 1..=n_max of `m' = 2m + 3n`, `n' = m + 2n` from `m_1 = n_1 = 5`.
/// The central pentagon contributes 5 vertices before step 1.
pub fn pentagon_census(n_max: usize) -> TilingCensus {
    let (mut m, mut n) = (5u64, 5u64);
    let mut vertices = 5u64;
    let mut steps = Vec::with_capacity(n_max);
    for step in 1..=n_max {
        let w = 2 * m + 3 * n;
        vertices += w;
        steps.push(CensusStep { step, m, n, faces: m + n, new_vertices: w, vertices, boundary_edges: w });
        (m, n) = (2 * m + 3 * n, m + 2 * n);
    }
    TilingCensus { steps }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_table() {
        let c = pentagon_census(6);
        let mn: Vec<(u64, u64)> = c.steps.iter().map(|s| (s.m, s.n)).collect();
        assert_eq!(mn, vec![(5, 5), (25, 15), (95, 55), (355, 205), (1325, 765), (4945, 2855)]);
        let f: Vec<u64> = c.steps.iter().map(|s| s.faces).collect();
        assert_eq!(f, vec![10, 40, 150, 560, 2090, 7800]);
        assert_eq!(c.total_faces(2), 51);
        assert_eq!(c.steps[1].boundary_edges, 95);
    }
}
