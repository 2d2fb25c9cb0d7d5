//! r-uniform hypergraphs with dense 0-based vertex indices.
//!
//! Every structure keeps a `u64` bitset mirror of each hyperedge, so vertex
//! counts are capped at [`MAX_VERTICES`]. That is the operating regime of the
//! search oracles; closed-form evaluators elsewhere take plain integers and
//! have no such cap.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::binom::subsets_lex;
use crate::error::{Error, Result};

/// Largest supported vertex count for incidence structures.
pub const MAX_VERTICES: usize = 64;

/// Dense 0-based vertex index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A hyperedge: strictly increasing vertex list plus its bitset mirror.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge {
    verts: Vec<VertexId>,
    mask: u64,
}

impl Hyperedge {
    /// Builds a hyperedge from a strictly increasing vertex list.
    pub fn new(verts: Vec<VertexId>) -> Result<Self> {
        if verts.is_empty() {
            return Err(Error::InvalidInput("empty hyperedge".into()));
        }
        let mut mask = 0u64;
        for w in verts.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(format!(
                    "hyperedge vertices must be strictly increasing, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        for v in &verts {
            if v.0 >= MAX_VERTICES {
                return Err(Error::InvalidVertex {
                    vertex: v.0,
                    n: MAX_VERTICES,
                });
            }
            mask |= 1u64 << v.0;
        }
        Ok(Hyperedge { verts, mask })
    }

    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        Hyperedge::new(indices.iter().map(|&i| VertexId(i)).collect())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn indices(&self) -> Vec<usize> {
        self.verts.iter().map(|v| v.0).collect()
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < MAX_VERTICES && self.mask & (1u64 << v.0) != 0
    }

    pub fn contains_pair(&self, a: VertexId, b: VertexId) -> bool {
        self.contains(a) && self.contains(b)
    }
}

impl Serialize for Hyperedge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.verts.len()))?;
        for v in &self.verts {
            seq.serialize_element(&v.0)?;
        }
        seq.end()
    }
}

/// A simple r-uniform hypergraph on vertices {0, .., n-1}.
///
/// Immutable after construction; duplicate hyperedges are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Hyperedge>,
}

impl Hypergraph {
    /// Builds a hypergraph, validating uniformity, vertex range, and simplicity.
    pub fn new(n: usize, r: usize, mut edges: Vec<Hyperedge>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "n = {n} exceeds the supported maximum of {MAX_VERTICES} vertices"
            )));
        }
        if r < 2 {
            return Err(Error::InvalidParameter(format!(
                "uniformity r must be at least 2, got {r}"
            )));
        }
        for e in &edges {
            if e.len() != r {
                return Err(Error::InvalidInput(format!(
                    "hyperedge {:?} has {} vertices in a {r}-uniform hypergraph",
                    e.indices(),
                    e.len()
                )));
            }
            for v in e.vertices() {
                if v.0 >= n {
                    return Err(Error::InvalidVertex { vertex: v.0, n });
                }
            }
        }
        edges.sort();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidInput(format!(
                    "duplicate hyperedge {:?}",
                    w[0].indices()
                )));
            }
        }
        Ok(Hypergraph { n, r, edges })
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Hypergraph::new(n, r, Vec::new())
    }

    /// Convenience constructor from raw index slices.
    pub fn from_edges<I, E>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let edges = edges
            .into_iter()
            .map(|e| Hyperedge::from_indices(e.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(n, r, edges)
    }

    /// The complete r-graph K_n^(r).
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        Hypergraph::from_edges(n, r, subsets_lex(n, r))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_masks(&self) -> Vec<u64> {
        self.edges.iter().map(|e| e.mask()).collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Minimum vertex degree; 0 for an edgeless or empty-vertex hypergraph.
    pub fn min_degree(&self) -> usize {
        (0..self.n)
            .map(|v| self.degree(VertexId(v)))
            .min()
            .unwrap_or(0)
    }

    fn vertex_set_mask(&self, s: &[VertexId]) -> Result<u64> {
        let mut mask = 0u64;
        for v in s {
            if v.0 >= self.n {
                return Err(Error::InvalidVertex {
                    vertex: v.0,
                    n: self.n,
                });
            }
            mask |= 1u64 << v.0;
        }
        Ok(mask)
    }

    /// The hyperedges meeting the vertex set `s` (the set N_H(S)).
    pub fn incident_edges(&self, s: &[VertexId]) -> Result<Vec<&Hyperedge>> {
        let mask = self.vertex_set_mask(s)?;
        Ok(self.edges.iter().filter(|e| e.mask() & mask != 0).collect())
    }

    /// |N_H(S)| without materializing the edge list.
    pub fn incident_edge_count(&self, s: &[VertexId]) -> Result<usize> {
        let mask = self.vertex_set_mask(s)?;
        Ok(self.edges.iter().filter(|e| e.mask() & mask != 0).count())
    }

    /// Removes the vertices of `u` and every hyperedge meeting them; the
    /// surviving vertices are reindexed densely, preserving order.
    pub fn delete_vertices(&self, u: &[VertexId]) -> Result<Hypergraph> {
        let mask = self.vertex_set_mask(u)?;
        let removed = mask.count_ones() as usize;
        let mut new_index = vec![usize::MAX; self.n];
        let mut next = 0usize;
        for (v, slot) in new_index.iter_mut().enumerate() {
            if mask & (1u64 << v) == 0 {
                *slot = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.mask() & mask == 0)
            .map(|e| {
                Hyperedge::new(
                    e.vertices()
                        .iter()
                        .map(|v| VertexId(new_index[v.0]))
                        .collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(self.n - removed, self.r, edges)
    }

    /// Vertex partition into maximal sets connected by chains of intersecting
    /// hyperedges; isolated vertices form singleton components.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for e in &self.edges {
            let first = e.vertices()[0].0;
            for v in &e.vertices()[1..] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, v.0));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: Vec<Vec<VertexId>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            let root = find(&mut parent, v);
            groups[root].push(VertexId(v));
        }
        let mut out: Vec<Vec<VertexId>> = groups.into_iter().filter(|g| !g.is_empty()).collect();
        out.sort_by_key(|g| g[0]);
        out
    }

    /// Component vertex sets as bitmasks, sorted by least vertex.
    pub(crate) fn component_masks(&self) -> Vec<u64> {
        self.components()
            .iter()
            .map(|c| c.iter().fold(0u64, |m, v| m | (1u64 << v.0)))
            .collect()
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Hypergraph", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("edges", &self.edges)?;
        st.end()
    }
}
