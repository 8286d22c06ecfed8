//! Seeded random instance generation. Identical specs yield bit-identical
//! instances.

use crate::config::Thresholds;
use crate::error::{Error, Result};
use crate::explicit::ExplicitMatroid;
use crate::instance::{InstanceFile, MatroidDescriptor, PartDescriptor, PartitionDescriptor};
use crate::set::GroundSet;
use crate::zoo::{GraphicMatroid, LinearMatroidGf2, UniformMatroid};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatroidFamily {
    Uniform,
    Graphic,
    LinearGf2,
    Explicit,
}

impl MatroidFamily {
    pub const ALL: [MatroidFamily; 4] = [
        MatroidFamily::Uniform,
        MatroidFamily::Graphic,
        MatroidFamily::LinearGf2,
        MatroidFamily::Explicit,
    ];
}

impl std::str::FromStr for MatroidFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<MatroidFamily> {
        match s {
            "uniform" => Ok(MatroidFamily::Uniform),
            "graphic" => Ok(MatroidFamily::Graphic),
            "linear_gf2" => Ok(MatroidFamily::LinearGf2),
            "explicit" => Ok(MatroidFamily::Explicit),
            other => Err(Error::InvalidArgument(format!(
                "unknown family `{other}` (expected uniform|graphic|linear_gf2|explicit)"
            ))),
        }
    }
}

/// Generation parameters. `size` is the element count, except for graphic
/// instances where it is the vertex count and the edge count follows from
/// `edge_prob`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub seed: u64,
    pub family: MatroidFamily,
    pub size: usize,
    pub parts: usize,
    pub cap_min: usize,
    pub cap_max: usize,
    pub edge_prob: f64,
    pub gf2_dim: usize,
}

impl Default for GeneratorSpec {
    fn default() -> Self {
        GeneratorSpec {
            seed: 0,
            family: MatroidFamily::Uniform,
            size: 8,
            parts: 3,
            cap_min: 0,
            cap_max: usize::MAX,
            edge_prob: 0.5,
            gf2_dim: 4,
        }
    }
}

const MAX_SIZE: usize = 20;
const MAX_EXPLICIT_SIZE: usize = 8;
const MAX_GRAPHIC_VERTICES: usize = 16;
const MAX_PARTS: usize = 8;

impl GeneratorSpec {
    fn validate(&self) -> Result<()> {
        let size_limit = match self.family {
            MatroidFamily::Explicit => MAX_EXPLICIT_SIZE,
            MatroidFamily::Graphic => MAX_GRAPHIC_VERTICES,
            _ => MAX_SIZE,
        };
        if self.size > size_limit {
            return Err(Error::CapacityExceeded {
                what: "generator size",
                size: self.size,
                limit: size_limit,
            });
        }
        if self.parts > MAX_PARTS {
            return Err(Error::CapacityExceeded {
                what: "generator part count",
                size: self.parts,
                limit: MAX_PARTS,
            });
        }
        if !(0.0..=1.0).contains(&self.edge_prob) {
            return Err(Error::InvalidArgument(format!(
                "edge probability {} outside [0, 1]",
                self.edge_prob
            )));
        }
        if self.gf2_dim == 0 || self.gf2_dim > 16 {
            return Err(Error::InvalidArgument(format!(
                "gf2 dimension {} outside 1..=16",
                self.gf2_dim
            )));
        }
        if self.cap_min > self.cap_max {
            return Err(Error::InvalidArgument(format!(
                "cap range {}..={} is empty",
                self.cap_min, self.cap_max
            )));
        }
        Ok(())
    }
}

/// Deterministic instance generation; explicit families are axiom-checked
/// before emission.
pub fn generate(spec: &GeneratorSpec) -> Result<InstanceFile> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let (element_count, m) = match spec.family {
        MatroidFamily::Uniform => {
            let rank = rng.gen_range(0..=spec.size);
            (spec.size, MatroidDescriptor::Uniform { rank })
        }
        MatroidFamily::Graphic => {
            let mut edges = Vec::new();
            for u in 0..spec.size as u32 {
                for v in (u + 1)..spec.size as u32 {
                    if rng.gen::<f64>() < spec.edge_prob {
                        edges.push((edges.len() as u32, u, v));
                    }
                }
            }
            edges.truncate(MAX_SIZE);
            (edges.len(), MatroidDescriptor::Graphic { edges })
        }
        MatroidFamily::LinearGf2 => {
            let columns: Vec<(u32, Vec<u8>)> = (0..spec.size as u32)
                .map(|id| {
                    let bits: Vec<u8> = (0..spec.gf2_dim).map(|_| rng.gen_range(0..=1u8)).collect();
                    (id, bits)
                })
                .collect();
            (spec.size, MatroidDescriptor::LinearGf2 { dim: spec.gf2_dim, columns })
        }
        MatroidFamily::Explicit => {
            let descriptor = random_explicit(spec.size, &mut rng)?;
            (spec.size, descriptor)
        }
    };

    let elements: Vec<u32> = (0..element_count as u32).collect();
    let n = random_partition(element_count, spec, &mut rng);
    let file = InstanceFile { elements, m, n };
    // Generated documents must instantiate cleanly.
    file.instantiate_lenient()?;
    Ok(file)
}

/// Random partition of `0..count` into at most `spec.parts` nonempty blocks
/// with per-block caps inside the configured range.
fn random_partition(count: usize, spec: &GeneratorSpec, rng: &mut ChaCha8Rng) -> PartitionDescriptor {
    if count == 0 || spec.parts == 0 {
        return PartitionDescriptor { parts: Vec::new() };
    }
    let block_count = rng.gen_range(1..=spec.parts.min(count));
    let mut ids: Vec<u32> = (0..count as u32).collect();
    ids.shuffle(rng);
    // block_count - 1 distinct cut positions inside 1..count
    let mut cuts: Vec<usize> = (1..count).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(block_count - 1).collect();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(count);

    let mut parts = Vec::with_capacity(block_count);
    for w in cuts.windows(2) {
        let mut block: Vec<u32> = ids[w[0]..w[1]].to_vec();
        block.sort_unstable();
        let high = spec.cap_max.min(block.len());
        let low = spec.cap_min.min(high);
        let cap = rng.gen_range(low..=high);
        parts.push(PartDescriptor { elements: block, cap });
    }
    parts.sort_by_key(|p| p.elements[0]);
    PartitionDescriptor { parts }
}

/// Random explicit matroid: a snapshot of a random small construction,
/// possibly dualized, validated against the axioms before emission.
fn random_explicit(size: usize, rng: &mut ChaCha8Rng) -> Result<MatroidDescriptor> {
    let ground = GroundSet::dense(size);
    let snapshot: ExplicitMatroid = match rng.gen_range(0..3u8) {
        0 => {
            let rank = rng.gen_range(0..=size);
            ExplicitMatroid::from_matroid(&UniformMatroid::new(ground, rank)?)?
        }
        1 => {
            let vertices = (size / 2 + 2) as u32;
            let edges: Vec<(u32, u32, u32)> = (0..size as u32)
                .map(|id| {
                    let u = rng.gen_range(0..vertices);
                    let v = rng.gen_range(0..vertices);
                    (id, u, v)
                })
                .collect();
            ExplicitMatroid::from_matroid(&GraphicMatroid::new(&edges)?)?
        }
        _ => {
            let dim = rng.gen_range(1..=4usize);
            let columns: Vec<(u32, u64)> = (0..size as u32)
                .map(|id| (id, rng.gen_range(0..(1u64 << dim))))
                .collect();
            ExplicitMatroid::from_matroid(&LinearMatroidGf2::new(dim, &columns)?)?
        }
    };
    let thresholds = Thresholds::default();
    let snapshot = if rng.gen::<bool>() && size <= thresholds.axioms {
        snapshot.dual(&thresholds)?
    } else {
        snapshot
    };
    let report = snapshot.validate(&thresholds)?;
    if !report.passed() {
        return Err(Error::InvalidMatroid(report));
    }
    let mut independent: Vec<Vec<u32>> = snapshot.family().iter().map(|s| s.elements()).collect();
    independent.sort(); // canonical document order
    Ok(MatroidDescriptor::Explicit { independent })
}
