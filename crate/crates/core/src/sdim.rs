//! Strong metric dimension by three independent methods.
//!
//! * `sdim_bruteforce`: definitional search over vertex subsets by
//!   increasing cardinality; the ground truth on small graphs.
//! * `sdim_via_vertex_cover`: minimum vertex cover of the strong resolving
//!   graph; exact for every connected graph.
//! * `sdim_via_reduction`: `|V| - omega(reduced graph)`; applies only when
//!   the diameter is verified to be exactly 2 at runtime.

use crate::bitset::BitSet;
use crate::graph::{
    all_pairs_distances, diameter_of, max_clique, min_vertex_cover,
    reduce_by_closed_neighborhoods, strong_resolving_graph, Diameter, DistanceMatrix, Graph,
};
use thiserror::Error;

pub const DEFAULT_BRUTEFORCE_CAP: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdimMethod {
    ReductionTheorem,
    VertexCover,
    BruteForce,
}

impl SdimMethod {
    pub fn name(self) -> &'static str {
        match self {
            SdimMethod::ReductionTheorem => "reduction",
            SdimMethod::VertexCover => "vertex_cover",
            SdimMethod::BruteForce => "bruteforce",
        }
    }
}

/// Outcome of one method run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdimResult {
    pub method: SdimMethod,
    pub outcome: SdimOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SdimOutcome {
    Value { value: usize, witness: Vec<usize> },
    NotApplicable { reason: String },
}

impl SdimResult {
    pub fn applicable(&self) -> bool {
        matches!(self.outcome, SdimOutcome::Value { .. })
    }

    pub fn value(&self) -> Option<usize> {
        match &self.outcome {
            SdimOutcome::Value { value, .. } => Some(*value),
            SdimOutcome::NotApplicable { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match &self.outcome {
            SdimOutcome::Value { witness, .. } => Some(witness),
            SdimOutcome::NotApplicable { .. } => None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SdimError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{vertices} vertices exceed the brute-force cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
}

/// Does `w` strongly resolve the pair `(u, v)`: is one of them on a
/// shortest path between the other and `w`?
///
/// Panics when any of the vertices are mutually unreachable.
pub fn strongly_resolves(d: &DistanceMatrix, w: usize, u: usize, v: usize) -> bool {
    let wu = d.dist(w, u);
    let wv = d.dist(w, v);
    let uv = d.dist(u, v);
    wu == wv + uv || wv == wu + uv
}

pub fn is_strong_resolving_set(g: &Graph, set: &[usize]) -> Result<bool, SdimError> {
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return Err(SdimError::Disconnected);
    }
    Ok(resolves_all_pairs(&d, set))
}

fn resolves_all_pairs(d: &DistanceMatrix, set: &[usize]) -> bool {
    let n = d.size();
    for u in 0..n {
        for v in u + 1..n {
            if !set.iter().any(|&w| strongly_resolves(d, w, u, v)) {
                return false;
            }
        }
    }
    true
}

/// Smallest strong resolving set by exhaustive search, subsets enumerated
/// by increasing size and lexicographically within each size, so the first
/// hit is the canonical witness.
pub fn sdim_bruteforce(g: &Graph, cap: usize) -> Result<SdimResult, SdimError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(SdimError::TooLarge { vertices: n, cap });
    }
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return Err(SdimError::Disconnected);
    }
    // resolver set per unordered pair
    let mut resolvers: Vec<BitSet> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let mut r = BitSet::new(n);
            for w in 0..n {
                if strongly_resolves(&d, w, u, v) {
                    r.insert(w);
                }
            }
            resolvers.push(r);
        }
    }
    for k in 0..=n {
        let mut found: Option<Vec<usize>> = None;
        for_each_combination(n, k, &mut |subset| {
            if found.is_none() {
                let s = BitSet::from_indices(n, subset);
                if resolvers.iter().all(|r| !r.is_disjoint(&s)) {
                    found = Some(subset.to_vec());
                }
            }
        });
        if let Some(witness) = found {
            return Ok(SdimResult {
                method: SdimMethod::BruteForce,
                outcome: SdimOutcome::Value { value: k, witness },
            });
        }
    }
    unreachable!("the full vertex set strongly resolves every pair");
}

/// Visit all k-subsets of `0..n` in lexicographic order.
fn for_each_combination(n: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
    let mut subset: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        visit(&subset);
        // advance the rightmost index that can still move
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if subset[i] < n - (k - i) {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `|V| - omega(reduced graph)`, valid for connected graphs of diameter
/// exactly 2. The witness is the maximum clique of the reduced graph,
/// mapped back to source vertices.
pub fn sdim_via_reduction(g: &Graph) -> Result<SdimResult, SdimError> {
    let d = all_pairs_distances(g);
    match diameter_of(&d) {
        Diameter::Disconnected => Err(SdimError::Disconnected),
        Diameter::Finite(2) => {
            let reduced = reduce_by_closed_neighborhoods(g);
            let (omega, witness) = max_clique(&reduced.graph);
            Ok(SdimResult {
                method: SdimMethod::ReductionTheorem,
                outcome: SdimOutcome::Value {
                    value: g.vertex_count() - omega,
                    witness: reduced.to_source(&witness),
                },
            })
        }
        Diameter::Finite(other) => Ok(SdimResult {
            method: SdimMethod::ReductionTheorem,
            outcome: SdimOutcome::NotApplicable {
                reason: format!("diameter is {other}, theorem needs exactly 2"),
            },
        }),
    }
}

/// Minimum vertex cover of the strong resolving graph; the general-purpose
/// exact method. The cover itself is a minimum strong resolving set.
pub fn sdim_via_vertex_cover(g: &Graph) -> Result<SdimResult, SdimError> {
    let d = all_pairs_distances(g);
    let srg = strong_resolving_graph(g, &d).map_err(|_| SdimError::Disconnected)?;
    let (value, witness) = min_vertex_cover(&srg);
    Ok(SdimResult {
        method: SdimMethod::VertexCover,
        outcome: SdimOutcome::Value { value, witness },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    #[test]
    fn strongly_resolves_on_a_path() {
        // path a-b-c: a strongly resolves (b, c)
        let g = graph_from_edges(3, &[(0, 1), (1, 2)]);
        let d = all_pairs_distances(&g);
        assert!(strongly_resolves(&d, 0, 1, 2));
        // triangle: an outside vertex resolves nothing
        let t = complete(3);
        let dt = all_pairs_distances(&t);
        assert!(!strongly_resolves(&dt, 0, 1, 2));
        // a vertex strongly resolves any pair containing it
        assert!(strongly_resolves(&dt, 1, 1, 2));
    }

    #[test]
    #[should_panic(expected = "different components")]
    fn strongly_resolves_panics_on_unreachable() {
        let g = graph_from_edges(3, &[(0, 1)]);
        let d = all_pairs_distances(&g);
        strongly_resolves(&d, 2, 0, 1);
    }

    #[test]
    fn full_vertex_set_always_resolves() {
        let g = graph_from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(is_strong_resolving_set(&g, &all), Ok(true));
        assert_eq!(is_strong_resolving_set(&g, &[]), Ok(false));
    }

    #[test]
    fn resolving_set_check_rejects_disconnected() {
        let g = graph_from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(is_strong_resolving_set(&g, &[0, 2]), Err(SdimError::Disconnected));
        assert_eq!(sdim_via_vertex_cover(&g).unwrap_err(), SdimError::Disconnected);
        assert_eq!(sdim_via_reduction(&g).unwrap_err(), SdimError::Disconnected);
        assert_eq!(sdim_bruteforce(&g, 14).unwrap_err(), SdimError::Disconnected);
    }

    #[test]
    fn bruteforce_respects_cap() {
        let g = complete(15);
        assert_eq!(
            sdim_bruteforce(&g, 14).unwrap_err(),
            SdimError::TooLarge { vertices: 15, cap: 14 }
        );
        assert!(sdim_bruteforce(&complete(15), 20).is_ok());
    }

    #[test]
    fn complete_graphs() {
        for n in 2..6 {
            let g = complete(n);
            let brute = sdim_bruteforce(&g, 14).unwrap();
            assert_eq!(brute.value(), Some(n - 1));
            let cover = sdim_via_vertex_cover(&g).unwrap();
            assert_eq!(cover.value(), Some(n - 1));
            // K_n has diameter 1, so the reduction theorem must refuse it
            let red = sdim_via_reduction(&g).unwrap();
            assert!(!red.applicable());
        }
    }

    #[test]
    fn single_vertex_graph_needs_nothing() {
        let g = Graph::new(1);
        assert_eq!(sdim_bruteforce(&g, 14).unwrap().value(), Some(0));
        assert_eq!(sdim_via_vertex_cover(&g).unwrap().value(), Some(0));
    }

    #[test]
    fn path_of_three() {
        let g = graph_from_edges(3, &[(0, 1), (1, 2)]);
        let brute = sdim_bruteforce(&g, 14).unwrap();
        assert_eq!(brute.value(), Some(1));
        assert_eq!(brute.witness(), Some(&[0][..]));
        let cover = sdim_via_vertex_cover(&g).unwrap();
        assert_eq!(cover.value(), Some(1));
        assert_eq!(cover.witness(), Some(&[0][..]));
        let red = sdim_via_reduction(&g).unwrap();
        assert_eq!(red.value(), Some(1));
    }

    #[test]
    fn witnesses_validate() {
        let g = graph_from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
        for result in [
            sdim_bruteforce(&g, 14).unwrap(),
            sdim_via_vertex_cover(&g).unwrap(),
        ] {
            let witness = result.witness().unwrap().to_vec();
            assert_eq!(is_strong_resolving_set(&g, &witness), Ok(true));
            // dropping to one fewer vertex can never be done by re-using a
            // smaller prefix: the value is minimal
            assert_eq!(witness.len(), result.value().unwrap());
        }
    }

    #[test]
    fn combination_enumeration_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, &mut |s| seen.push(s.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut empty = Vec::new();
        for_each_combination(3, 0, &mut |s| empty.push(s.to_vec()));
        assert_eq!(empty, vec![Vec::<usize>::new()]);
    }
}
