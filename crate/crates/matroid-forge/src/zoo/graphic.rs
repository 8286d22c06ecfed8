//! Graphic matroids of finite multigraphs.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset, MAX_ELEMENTS};

const NO_EDGE: [u16; 2] = [u16::MAX, u16::MAX];

/// The cycle matroid of a multigraph: an edge set is independent iff it is
/// acyclic. Parallel edges and self-loops are allowed; a self-loop is a
/// matroid loop.
#[derive(Clone, Debug)]
pub struct GraphicMatroid {
    ground: GroundSet,
    // endpoint pairs indexed by edge id, vertices compressed to 0..vertex_count
    endpoints: Vec<[u16; 2]>,
    vertex_count: usize,
}

impl GraphicMatroid {
    /// Builds from `(edge id, endpoint, endpoint)` triples. Edge ids must be
    /// distinct and below [`MAX_ELEMENTS`].
    pub fn new(edges: &[(u32, u32, u32)]) -> Result<GraphicMatroid> {
        let mut ground = Subset::EMPTY;
        let mut vertex_ids: Vec<u32> = Vec::new();
        for &(id, u, v) in edges {
            if id >= MAX_ELEMENTS {
                return Err(Error::InvalidArgument(format!(
                    "edge id {id} exceeds the supported maximum {}",
                    MAX_ELEMENTS - 1
                )));
            }
            if ground.contains(id) {
                return Err(Error::InvalidArgument(format!("duplicate edge id {id}")));
            }
            ground.insert(id);
            vertex_ids.push(u);
            vertex_ids.push(v);
        }
        vertex_ids.sort_unstable();
        vertex_ids.dedup();
        let compress = |v: u32| vertex_ids.binary_search(&v).unwrap() as u16;
        let mut endpoints = vec![NO_EDGE; edges.iter().map(|e| e.0 + 1).max().unwrap_or(0) as usize];
        for &(id, u, v) in edges {
            endpoints[id as usize] = [compress(u), compress(v)];
        }
        Ok(GraphicMatroid {
            ground: GroundSet::new(ground),
            endpoints,
            vertex_count: vertex_ids.len(),
        })
    }

    pub fn edge_endpoints(&self, id: u32) -> Option<(u16, u16)> {
        let e = *self.endpoints.get(id as usize)?;
        if e == NO_EDGE {
            None
        } else {
            Some((e[0], e[1]))
        }
    }
}

impl Matroid for GraphicMatroid {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn indep(&self, s: Subset) -> bool {
        // Disjoint-set forest rebuilt per query; the matroid itself stays
        // immutable so concurrent queries are safe.
        debug_assert!(self.vertex_count <= 256);
        let mut parent = [u16::MAX; 256];
        fn find(parent: &[u16; 256], mut x: u16) -> u16 {
            while parent[x as usize] != u16::MAX {
                x = parent[x as usize];
            }
            x
        }
        for id in s.iter() {
            let [u, v] = self.endpoints[id as usize];
            let ru = find(&parent, u);
            let rv = find(&parent, v);
            if ru == rv {
                return false;
            }
            parent[ru as usize] = rv;
        }
        true
    }
}
