//! Finite simple labelled graphs and the complete / path / lollipop / lariat
//! families.
//!
//! Vertices are `0..vertex_count`. For `lollipop(m, n)` the clique occupies
//! `0..m`, the path occupies `m..m+n`, and the bridge is `{m-1, m}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An undirected edge, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge [{0},{0}]")]
    Loop(usize),
    #[error("duplicate edge [{0},{1}]")]
    DuplicateEdge(usize, usize),
    #[error("edge [{0},{1}] has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {0} repeated in cycle")]
    RepeatedVertex(usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("lariat L_k needs k >= 3, got {0}")]
    LariatTooSmall(usize),
    #[error("edges {0}, {1}, {2} do not form a triangle")]
    NotATriangle(Edge, Edge, Edge),
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// Graph with no edges.
    pub fn edgeless(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    /// Validating constructor: rejects loops, duplicates and out-of-range
    /// endpoints, naming the offending pair.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::edgeless(vertex_count);
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange(u, v, vertex_count));
            }
            if !g.edges.insert(Edge::new(u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        Ok(g)
    }

    pub fn complete(m: usize) -> Self {
        let mut g = Self::edgeless(m);
        for u in 0..m {
            for v in u + 1..m {
                g.edges.insert(Edge(u, v));
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for v in 1..n {
            g.edges.insert(Edge(v - 1, v));
        }
        g
    }

    /// `K_m` joined by a bridge to an end of `P_n`. `lollipop(m, 0) = K_m`
    /// and `lollipop(0, n) = P_n`.
    pub fn lollipop(m: usize, n: usize) -> Self {
        let mut g = Self::complete(m);
        g.vertex_count = m + n;
        for v in m + 1..m + n {
            g.edges.insert(Edge(v - 1, v));
        }
        if m >= 1 && n >= 1 {
            g.edges.insert(Edge(m - 1, m));
        }
        g
    }

    /// The lariat `L_k = L_{3, k-3}`, indexed by its vertex count.
    pub fn lariat(k: usize) -> Result<Self, GraphError> {
        if k < 3 {
            return Err(GraphError::LariatTooSmall(k));
        }
        Ok(Self::lollipop(3, k - 3))
    }

    /// `C_k` on vertices `0..k`.
    pub fn cycle(k: usize) -> Result<Self, GraphError> {
        if k < 3 {
            return Err(GraphError::CycleTooShort(k));
        }
        let mut g = Self::path(k);
        g.edges.insert(Edge(0, k - 1));
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&Edge::new(u, v))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(GraphError::VertexOutOfRange(u, v, self.vertex_count));
        }
        if !self.edges.insert(Edge::new(u, v)) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        Ok(())
    }

    /// Adjacency as bitmasks, one per vertex. Only valid for graphs with at
    /// most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(
            self.vertex_count <= 64,
            "bitmask adjacency needs <= 64 vertices"
        );
        let mut masks = vec![0u64; self.vertex_count];
        for Edge(u, v) in self.edges.iter().copied() {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    pub fn delete_edges<'a, I>(&self, remove: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = self.clone();
        for e in remove {
            if !g.edges.remove(e) && !self.edges.contains(e) {
                return Err(GraphError::UnknownEdge(*e));
            }
        }
        Ok(g)
    }

    /// `self ⊔ other`, with `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let mut g = self.clone();
        g.vertex_count += other.vertex_count;
        g.edges.extend(
            other
                .edges
                .iter()
                .map(|Edge(u, v)| Edge(u + shift, v + shift)),
        );
        g
    }

    /// Edges `ε_1..ε_k` of the cycle through `vertices` in order, where `ε_i`
    /// joins `v_i` and `v_{i+1}` and `ε_k` closes the cycle at `v_1`.
    pub fn find_cycle_edges(&self, vertices: &[usize]) -> Result<Vec<Edge>, GraphError> {
        let k = vertices.len();
        if k < 3 {
            return Err(GraphError::CycleTooShort(k));
        }
        let mut seen = BTreeSet::new();
        for &v in vertices {
            if !seen.insert(v) {
                return Err(GraphError::RepeatedVertex(v));
            }
        }
        (0..k)
            .map(|i| {
                let (a, b) = (vertices[i], vertices[(i + 1) % k]);
                if self.has_edge(a, b) {
                    Ok(Edge::new(a, b))
                } else {
                    Err(GraphError::NotAdjacent(a, b))
                }
            })
            .collect()
    }

    /// Checks that three edges of the graph form a triangle.
    pub fn check_triangle(&self, tri: [Edge; 3]) -> Result<(), GraphError> {
        for e in tri {
            if !self.edges.contains(&e) {
                return Err(GraphError::UnknownEdge(e));
            }
        }
        let mut verts: Vec<usize> = tri.iter().flat_map(|e| [e.0, e.1]).collect();
        verts.sort_unstable();
        let is_triangle = tri[0] != tri[1]
            && tri[1] != tri[2]
            && tri[0] != tri[2]
            && verts[0] == verts[1]
            && verts[2] == verts[3]
            && verts[4] == verts[5]
            && verts[1] != verts[2]
            && verts[3] != verts[4];
        if is_triangle {
            Ok(())
        } else {
            Err(GraphError::NotATriangle(tri[0], tri[1], tri[2]))
        }
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let raw: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        raw.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }
}

/// On-disk form: `{"vertices": n, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(raw: GraphJson) -> Result<Self, Self::Error> {
        Graph::from_edges(raw.vertices, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.vertex_count,
            edges: g.edges.iter().map(|Edge(u, v)| [*u, *v]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn choose2(m: usize) -> usize {
        m * m.saturating_sub(1) / 2
    }

    #[test]
    fn lollipop_counts() {
        let g = Graph::lollipop(3, 6);
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 9));
        for m in 0..=7 {
            for n in 0..=7 {
                let g = Graph::lollipop(m, n);
                assert_eq!(g.vertex_count(), m + n);
                let expected = match (m, n) {
                    (0, 0) => 0,
                    (0, n) => n - 1,
                    (m, 0) => choose2(m),
                    (m, n) => choose2(m) + n,
                };
                assert_eq!(g.edge_count(), expected, "L_{{{m},{n}}}");
            }
        }
    }

    #[test]
    fn family_identities() {
        assert_eq!(Graph::lollipop(0, 0), Graph::edgeless(0));
        for n in 0..=7 {
            assert_eq!(Graph::lollipop(2, n), Graph::path(n + 2));
            assert_eq!(Graph::lollipop(1, n), Graph::path(n + 1));
            assert_eq!(Graph::lollipop(0, n), Graph::path(n));
        }
        for m in 0..=7 {
            assert_eq!(Graph::lollipop(m, 0), Graph::complete(m));
        }
        assert_eq!(Graph::lariat(9).unwrap(), Graph::lollipop(3, 6));
        assert_eq!(Graph::lariat(2), Err(GraphError::LariatTooSmall(2)));
    }

    #[test]
    fn deleting_bridge_vertex_clique_edges() {
        for m in 2..=6 {
            for n in 0..=3 {
                let g = Graph::lollipop(m, n);
                let all: Vec<Edge> = (0..m - 1).map(|i| Edge::new(i, m - 1)).collect();
                let split = g.delete_edges(&all).unwrap();
                assert_eq!(
                    split,
                    Graph::complete(m - 1).disjoint_union(&Graph::path(n + 1))
                );
                assert_eq!(split.vertex_count(), g.vertex_count());
                if m >= 3 {
                    let shorter = g.delete_edges(&all[..m - 2]).unwrap();
                    assert_eq!(shorter, Graph::lollipop(m - 1, n + 1));
                }
            }
        }
        let g = Graph::lollipop(4, 2);
        assert_eq!(g.delete_edges(&[]).unwrap(), g);
        assert_eq!(
            g.delete_edges(&[Edge::new(0, 5)]),
            Err(GraphError::UnknownEdge(Edge::new(0, 5)))
        );
    }

    #[test]
    fn cycle_edges() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.find_cycle_edges(&[0, 1, 2]).unwrap().len(), 3);
        let l31 = Graph::lollipop(3, 1);
        assert_eq!(
            l31.find_cycle_edges(&[0, 1, 2]).unwrap(),
            vec![Edge::new(0, 1), Edge::new(1, 2), Edge::new(0, 2)]
        );
        assert_eq!(
            Graph::path(3).find_cycle_edges(&[0, 1, 2]),
            Err(GraphError::NotAdjacent(2, 0))
        );
        assert_eq!(
            k3.find_cycle_edges(&[0, 1, 0]),
            Err(GraphError::RepeatedVertex(0))
        );
    }

    #[test]
    fn triangle_check() {
        let k4 = Graph::complete(4);
        assert!(k4
            .check_triangle([Edge::new(0, 1), Edge::new(1, 2), Edge::new(0, 2)])
            .is_ok());
        assert!(k4
            .check_triangle([Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3)])
            .is_err());
    }

    #[test]
    fn json_errors_name_the_pair() {
        let g = Graph::from_json(r#"{"vertices":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        let dup = Graph::from_json(r#"{"vertices":3,"edges":[[0,1],[1,0]]}"#).unwrap_err();
        assert_eq!(dup.to_string(), "duplicate edge [1,0]");
        let looped = Graph::from_json(r#"{"vertices":3,"edges":[[2,2]]}"#).unwrap_err();
        assert_eq!(looped.to_string(), "loop edge [2,2]");
        assert!(Graph::from_json(r#"{"vertices":2,"edges":[[0,5]]}"#).is_err());
        assert!(Graph::from_json("not json").is_err());
    }
}
