//! Classical matroid intersection: shortest augmenting paths on the exchange
//! graph, with a min-max certificate, plus the exhaustive oracle used to
//! validate it.

use crate::config::Thresholds;
use crate::error::{Error, Result};
use crate::matroid::{check_domain, Matroid};
use crate::set::{GroundSet, Subset};
use serde::Serialize;

/// A maximum common independent set together with a certifying set `A`:
/// `rank_1(A) + rank_2(E∖A) = |I|` proves maximality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedOptimum {
    #[serde(rename = "I_star")]
    pub set: Subset,
    #[serde(rename = "A")]
    pub certificate: Subset,
}

impl CertifiedOptimum {
    pub fn size(&self) -> usize {
        self.set.len()
    }
}

/// The directed auxiliary graph of the intersection algorithm for a common
/// independent set `current`:
/// arcs `y → z` (`y ∈ I`, `z ∉ I`) when `I − y + z` is independent in the
/// first matroid, arcs `z → y` when `I − y + z` is independent in the second;
/// sources are the elements addable in the first matroid, sinks those addable
/// in the second.
pub struct ExchangeGraph {
    pub current: Subset,
    pub sources: Subset,
    pub sinks: Subset,
    ground: GroundSet,
    successors: Vec<Subset>, // indexed by element id
}

impl ExchangeGraph {
    pub fn build(m1: &dyn Matroid, m2: &dyn Matroid, current: Subset) -> ExchangeGraph {
        let ground = m1.ground();
        debug_assert_eq!(ground, m2.ground());
        debug_assert!(m1.indep(current) && m2.indep(current));
        let outside = ground.mask().minus(current);

        let mut sources = Subset::EMPTY;
        let mut sinks = Subset::EMPTY;
        for z in outside.iter() {
            if m1.indep(current.with(z)) {
                sources.insert(z);
            }
            if m2.indep(current.with(z)) {
                sinks.insert(z);
            }
        }

        let max_id = ground.max_element().map_or(0, |m| m as usize + 1);
        let mut successors = vec![Subset::EMPTY; max_id];
        for y in current.iter() {
            for z in outside.iter() {
                let swapped = current.without(y).with(z);
                if m1.indep(swapped) {
                    successors[y as usize].insert(z);
                }
                if m2.indep(swapped) {
                    successors[z as usize].insert(y);
                }
            }
        }
        ExchangeGraph { current, sources, sinks, ground, successors }
    }

    pub fn successors(&self, v: u32) -> Subset {
        self.successors.get(v as usize).copied().unwrap_or(Subset::EMPTY)
    }

    /// Everything reachable from `from` (inclusive).
    pub fn reachable_from(&self, from: Subset) -> Subset {
        let mut reached = from;
        let mut frontier = from;
        while !frontier.is_empty() {
            let mut next = Subset::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.successors(v));
            }
            frontier = next.minus(reached);
            reached = reached.union(frontier);
        }
        reached
    }

    /// Lexicographically least shortest source→sink path as a vertex
    /// sequence, or `None` when the sinks are unreachable. Tie-breaking picks
    /// the smallest vertex at every step, which makes the whole run
    /// deterministic.
    pub fn shortest_augmenting_path(&self) -> Option<Vec<u32>> {
        if self.sources.is_empty() || self.sinks.is_empty() {
            return None;
        }
        // Distance-to-sink layers via reverse BFS.
        let mut dist = [usize::MAX; 128];
        let mut layer = self.sinks;
        let mut reached = self.sinks;
        let mut d = 0;
        for v in layer.iter() {
            dist[v as usize] = 0;
        }
        while !layer.is_empty() {
            d += 1;
            let mut next = Subset::EMPTY;
            for v in self.ground.iter() {
                if !reached.contains(v) && !self.successors(v).intersect(layer).is_empty() {
                    next.insert(v);
                    dist[v as usize] = d;
                }
            }
            reached = reached.union(next);
            layer = next;
        }

        let total = self.sources.iter().map(|s| dist[s as usize]).min()?;
        if total == usize::MAX {
            return None;
        }
        let start = self.sources.iter().find(|&s| dist[s as usize] == total)?;
        let mut path = vec![start];
        let mut at = start;
        for step in (0..total).rev() {
            let next = self
                .successors(at)
                .iter()
                .find(|&w| dist[w as usize] == step)
                .expect("BFS layering guarantees a successor one layer closer");
            path.push(next);
            at = next;
        }
        Some(path)
    }
}

/// Maximum common independent set by shortest augmenting paths, starting
/// from the ascending-greedy common independent set, with the certificate
/// extracted from final-phase reachability (`A` = elements the sources
/// cannot reach).
pub fn max_common_independent(m1: &dyn Matroid, m2: &dyn Matroid) -> Result<CertifiedOptimum> {
    Ok(max_common_independent_phases(m1, m2)?.0)
}

/// Same as [`max_common_independent`], also returning the common independent
/// set after every augmentation.
pub fn max_common_independent_phases(
    m1: &dyn Matroid,
    m2: &dyn Matroid,
) -> Result<(CertifiedOptimum, Vec<Subset>)> {
    let ground = m1.ground();
    if ground != m2.ground() {
        return Err(Error::GroundMismatch { left: ground, right: m2.ground() });
    }

    let mut current = Subset::EMPTY;
    for e in ground.iter() {
        let grown = current.with(e);
        if m1.indep(grown) && m2.indep(grown) {
            current = grown;
        }
    }

    let mut phases = Vec::new();
    loop {
        let graph = ExchangeGraph::build(m1, m2, current);
        match graph.shortest_augmenting_path() {
            Some(path) => {
                for v in path {
                    current = current.symmetric_difference(Subset::singleton(v));
                }
                debug_assert!(m1.indep(current) && m2.indep(current));
                phases.push(current);
            }
            None => {
                let reach = graph.reachable_from(graph.sources);
                let certificate = ground.mask().minus(reach);
                let opt = CertifiedOptimum { set: current, certificate };
                debug_assert!(matches!(certify(m1, m2, opt.set, opt.certificate), Ok(true)));
                return Ok((opt, phases));
            }
        }
    }
}

/// Exhaustive oracle: the lexicographically least maximum common independent
/// set over the full subset enumeration.
pub fn brute_force_max_common(
    m1: &dyn Matroid,
    m2: &dyn Matroid,
    thresholds: &Thresholds,
) -> Result<Subset> {
    let ground = m1.ground();
    if ground != m2.ground() {
        return Err(Error::GroundMismatch { left: ground, right: m2.ground() });
    }
    if ground.len() > thresholds.brute_force {
        return Err(Error::CapacityExceeded {
            what: "brute-force intersection ground set",
            size: ground.len(),
            limit: thresholds.brute_force,
        });
    }
    let mut best = Subset::EMPTY;
    for s in ground.subsets() {
        if m1.indep(s) && m2.indep(s) && (s.len() > best.len() || (s.len() == best.len() && s.lex_le(best)))
        {
            best = s;
        }
    }
    Ok(best)
}

/// Min-max equality check: `rank_1(A) + rank_2(E∖A) = |I|`. For a common
/// independent `I` this equality proves `I` is maximum, since every common
/// independent set splits into an independent subset of `A` and one of its
/// complement.
pub fn certify(m1: &dyn Matroid, m2: &dyn Matroid, i: Subset, a: Subset) -> Result<bool> {
    let ground = m1.ground();
    if ground != m2.ground() {
        return Err(Error::GroundMismatch { left: ground, right: m2.ground() });
    }
    check_domain(ground, i)?;
    check_domain(ground, a)?;
    Ok(m1.rank_set(a) + m2.rank_set(ground.mask().minus(a)) == i.len())
}
