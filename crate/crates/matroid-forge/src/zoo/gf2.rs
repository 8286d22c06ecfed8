//! Binary linear matroids: column vectors over GF(2).

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{GroundSet, Subset, MAX_ELEMENTS};

/// Largest supported vector dimension (columns are stored as `u64` masks).
pub const GF2_MAX_DIM: usize = 64;

/// A matroid of 0/1 column vectors; a set is independent iff its columns are
/// linearly independent over the two-element field.
#[derive(Clone, Debug)]
pub struct LinearMatroidGf2 {
    ground: GroundSet,
    columns: Vec<u64>, // indexed by element id
    dim: usize,
}

impl LinearMatroidGf2 {
    /// Builds from `(element id, column bits)` pairs, where bit `i` of the
    /// column mask is the vector's coordinate `i`.
    pub fn new(dim: usize, columns: &[(u32, u64)]) -> Result<LinearMatroidGf2> {
        if dim > GF2_MAX_DIM {
            return Err(Error::CapacityExceeded {
                what: "GF(2) vector dimension",
                size: dim,
                limit: GF2_MAX_DIM,
            });
        }
        let mut ground = Subset::EMPTY;
        let mut table = vec![0u64; columns.iter().map(|c| c.0 + 1).max().unwrap_or(0) as usize];
        for &(id, bits) in columns {
            if id >= MAX_ELEMENTS {
                return Err(Error::InvalidArgument(format!(
                    "column id {id} exceeds the supported maximum {}",
                    MAX_ELEMENTS - 1
                )));
            }
            if ground.contains(id) {
                return Err(Error::InvalidArgument(format!("duplicate column id {id}")));
            }
            if dim < 64 && bits >> dim != 0 {
                return Err(Error::InvalidArgument(format!(
                    "column {id} has coordinates outside dimension {dim}"
                )));
            }
            ground.insert(id);
            table[id as usize] = bits;
        }
        Ok(LinearMatroidGf2 { ground: GroundSet::new(ground), columns: table, dim })
    }

    /// Convenience constructor from explicit 0/1 coordinate rows.
    pub fn from_bit_rows(dim: usize, columns: &[(u32, Vec<u8>)]) -> Result<LinearMatroidGf2> {
        let mut packed = Vec::with_capacity(columns.len());
        for (id, coords) in columns {
            if coords.len() != dim {
                return Err(Error::InvalidArgument(format!(
                    "column {id} has {} coordinates, expected {dim}",
                    coords.len()
                )));
            }
            let mut bits = 0u64;
            for (i, &c) in coords.iter().enumerate() {
                match c {
                    0 => {}
                    1 => bits |= 1u64 << i,
                    other => {
                        return Err(Error::InvalidArgument(format!(
                            "column {id} coordinate {i} is {other}, expected 0 or 1"
                        )))
                    }
                }
            }
            packed.push((*id, bits));
        }
        LinearMatroidGf2::new(dim, &packed)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, id: u32) -> Option<u64> {
        if self.ground.contains(id) {
            Some(self.columns[id as usize])
        } else {
            None
        }
    }
}

impl Matroid for LinearMatroidGf2 {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn indep(&self, s: Subset) -> bool {
        // Incremental elimination basis keyed by leading bit; a column that
        // reduces to zero is in the span of the previous ones.
        let mut basis = [0u64; GF2_MAX_DIM];
        for id in s.iter() {
            let mut v = self.columns[id as usize];
            while v != 0 {
                let lead = 63 - v.leading_zeros() as usize;
                if basis[lead] == 0 {
                    basis[lead] = v;
                    break;
                }
                v ^= basis[lead];
            }
            if v == 0 {
                return false;
            }
        }
        true
    }
}
