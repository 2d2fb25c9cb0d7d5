//! Red-blue graphs: simple graphs whose edges carry one of two colors.

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::graph::Graph;

/// A simple graph with every edge colored red or blue; the color classes are
/// disjoint by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedBlueGraph {
    n: usize,
    red: Vec<(usize, usize)>,
    blue: Vec<(usize, usize)>,
}

impl RedBlueGraph {
    pub fn new(n: usize, red: Vec<(usize, usize)>, blue: Vec<(usize, usize)>) -> Result<Self> {
        // validates range, loops, duplicates within and across colors
        let mut all = red.clone();
        all.extend(blue.iter().copied());
        Graph::new(n, all)?;
        let norm = |edges: Vec<(usize, usize)>| {
            let mut e: Vec<(usize, usize)> = edges
                .into_iter()
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            e.sort();
            e
        };
        Ok(RedBlueGraph {
            n,
            red: norm(red),
            blue: norm(blue),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn red_edges(&self) -> &[(usize, usize)] {
        &self.red
    }

    pub fn blue_edges(&self) -> &[(usize, usize)] {
        &self.blue
    }

    pub fn red_edge_count(&self) -> usize {
        self.red.len()
    }

    /// The uncolored union graph.
    pub fn underlying(&self) -> Graph {
        let mut all = self.red.clone();
        all.extend(self.blue.iter().copied());
        Graph::new(self.n, all).expect("validated at construction")
    }

    pub fn blue_subgraph(&self) -> Graph {
        Graph::new(self.n, self.blue.clone()).expect("validated at construction")
    }

    pub fn red_subgraph(&self) -> Graph {
        Graph::new(self.n, self.red.clone()).expect("validated at construction")
    }
}

impl Serialize for RedBlueGraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RedBlueGraph", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("red", &self.red)?;
        st.serialize_field("blue", &self.blue)?;
        st.end()
    }
}
