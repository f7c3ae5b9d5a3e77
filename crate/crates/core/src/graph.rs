//! Exact graph algorithms: BFS distances, diameter, closed-neighborhood
//! reduction, maximum clique, strong resolving graph, minimum vertex cover.
//!
//! All searches are exact and deterministic. Witness sets are canonical:
//! among optimal solutions the lexicographically least vertex set is
//! returned, so reports and golden tests can compare witnesses directly.

use crate::bitset::BitSet;
use thiserror::Error;

const UNREACHABLE: u32 = u32::MAX;

/// Undirected simple graph over vertices `0..n` with bit-set adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is disconnected")]
    Disconnected,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count()).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert_ne!(i, j, "no self-loops");
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i].contains(j)
    }

    pub fn neighbors(&self, i: usize) -> &BitSet {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count()
    }

    /// Edges as `(i, j)` pairs with `i < j`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.vertex_count() {
            for j in self.adj[i].iter() {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if !self.has_edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// All-pairs hop counts; unreachable pairs carry a sentinel internally and
/// surface as `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        let v = self.d[i * self.n + j];
        (v != UNREACHABLE).then_some(v)
    }

    /// Distance that must exist; panics on an unreachable pair.
    pub fn dist(&self, i: usize, j: usize) -> u32 {
        self.get(i, j).expect("vertices are in different components")
    }

    pub fn is_connected(&self) -> bool {
        self.d.iter().all(|&v| v != UNREACHABLE)
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut d = vec![UNREACHABLE; n * n];
    let mut queue = Vec::with_capacity(n);
    for src in 0..n {
        let row = &mut d[src * n..(src + 1) * n];
        row[src] = 0;
        queue.clear();
        queue.push(src);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = row[u];
            for v in g.neighbors(u).iter() {
                if row[v] == UNREACHABLE {
                    row[v] = du + 1;
                    queue.push(v);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Disconnected,
}

pub fn diameter(g: &Graph) -> Diameter {
    diameter_of(&all_pairs_distances(g))
}

pub fn diameter_of(d: &DistanceMatrix) -> Diameter {
    if !d.is_connected() {
        return Diameter::Disconnected;
    }
    let mut max = 0;
    for i in 0..d.size() {
        for j in i + 1..d.size() {
            max = max.max(d.dist(i, j));
        }
    }
    Diameter::Finite(max)
}

/// Quotient of a graph by equality of closed neighborhoods.
#[derive(Debug, Clone)]
pub struct ReducedGraph {
    /// Vertex classes with identical `N[x]`, each sorted ascending, ordered
    /// by their least member.
    pub classes: Vec<Vec<usize>>,
    /// Least-index vertex of each class.
    pub representatives: Vec<usize>,
    /// Adjacency between representatives, indexed like `representatives`.
    pub graph: Graph,
}

impl ReducedGraph {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Map a clique (or any vertex set) of the reduced graph back to source
    /// vertex indices.
    pub fn to_source(&self, reduced_vertices: &[usize]) -> Vec<usize> {
        reduced_vertices.iter().map(|&i| self.representatives[i]).collect()
    }
}

pub fn reduce_by_closed_neighborhoods(g: &Graph) -> ReducedGraph {
    let n = g.vertex_count();
    let mut closed: Vec<BitSet> = Vec::with_capacity(n);
    for i in 0..n {
        let mut nb = g.neighbors(i).clone();
        nb.insert(i);
        closed.push(nb);
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let found = (0..classes.len()).find(|&c| closed[classes[c][0]] == closed[i]);
        match found {
            Some(c) => {
                classes[c].push(i);
                class_of[i] = c;
            }
            None => {
                class_of[i] = classes.len();
                classes.push(vec![i]);
            }
        }
    }
    let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let mut graph = Graph::new(representatives.len());
    for a in 0..representatives.len() {
        for b in a + 1..representatives.len() {
            if g.has_edge(representatives[a], representatives[b]) {
                graph.add_edge(a, b);
            }
        }
    }
    ReducedGraph {
        classes,
        representatives,
        graph,
    }
}

/// Exact maximum clique: size plus the lexicographically least witness.
pub fn max_clique(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let all = BitSet::full(n);
    let omega = clique_number_in(g, &all);
    (omega, lex_least_clique(g, &all, omega))
}

/// Clique number of the subgraph induced by `cand`.
fn clique_number_in(g: &Graph, cand: &BitSet) -> usize {
    let mut best = 0;
    expand(g, cand.clone(), 0, &mut best);
    best
}

/// Branch and bound with a greedy-coloring upper bound.
fn expand(g: &Graph, mut cand: BitSet, size: usize, best: &mut usize) {
    if cand.is_empty() {
        if size > *best {
            *best = size;
        }
        return;
    }
    let order = color_order(g, &cand);
    for &(v, bound) in order.iter().rev() {
        if size + bound <= *best {
            return; // bounds are ascending: nothing better remains
        }
        let next = cand.intersection(g.neighbors(v));
        expand(g, next, size + 1, best);
        cand.remove(v);
    }
}

/// Is there a clique of at least `k` vertices inside `cand`?
fn has_clique(g: &Graph, cand: &BitSet, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if cand.count() < k {
        return false;
    }
    let order = color_order(g, cand);
    let mut cand = cand.clone();
    for &(v, bound) in order.iter().rev() {
        if bound < k {
            return false;
        }
        let next = cand.intersection(g.neighbors(v));
        if has_clique(g, &next, k - 1) {
            return true;
        }
        cand.remove(v);
    }
    false
}

/// Greedy coloring of `cand`; returns `(vertex, color)` with colors 1-based
/// and entries sorted by ascending color. `size + color` bounds any clique
/// extending through that vertex.
fn color_order(g: &Graph, cand: &BitSet) -> Vec<(usize, usize)> {
    let mut class_members: Vec<BitSet> = Vec::new();
    let mut out: Vec<(usize, usize)> = Vec::new();
    for v in cand.iter() {
        let color = class_members
            .iter()
            .position(|members| members.is_disjoint(g.neighbors(v)))
            .unwrap_or_else(|| {
                class_members.push(BitSet::new(cand.universe()));
                class_members.len() - 1
            });
        class_members[color].insert(v);
        out.push((v, color + 1));
    }
    out.sort_by_key(|&(v, color)| (color, v));
    out
}

/// Lexicographically least clique of exactly `target` vertices inside `cand`.
///
/// Scans vertices in ascending order, committing each one that still admits
/// a completion; committed vertices shrink the candidate set to their
/// neighborhood, so the greedy prefix is the lexicographic minimum.
fn lex_least_clique(g: &Graph, cand: &BitSet, target: usize) -> Vec<usize> {
    let mut avail = cand.clone();
    let mut chosen = Vec::with_capacity(target);
    for v in cand.iter() {
        if chosen.len() == target {
            break;
        }
        if !avail.contains(v) {
            continue;
        }
        let rest = avail.intersection(g.neighbors(v));
        if has_clique(g, &rest, target - chosen.len() - 1) {
            chosen.push(v);
            avail = rest;
        } else {
            avail.remove(v);
        }
    }
    debug_assert_eq!(chosen.len(), target);
    chosen
}

/// Lexicographically greatest maximum clique. Dual of `lex_least_clique`:
/// drop each vertex in ascending order whenever a maximum clique survives
/// without it, otherwise the vertex is forced. `cand` holds the undecided
/// vertices, all adjacent to every forced one.
fn lex_greatest_max_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let all = BitSet::full(n);
    let omega = clique_number_in(g, &all);
    let mut cand = all;
    let mut forced: Vec<usize> = Vec::with_capacity(omega);
    for v in 0..n {
        if forced.len() == omega {
            break;
        }
        if !cand.contains(v) {
            continue;
        }
        let mut without = cand.clone();
        without.remove(v);
        if has_clique(g, &without, omega - forced.len()) {
            cand = without;
        } else {
            forced.push(v);
            cand.intersect_with(g.neighbors(v));
        }
    }
    debug_assert_eq!(forced.len(), omega);
    forced
}

/// Exact minimum vertex cover via a maximum independent set (a maximum
/// clique of the complement). The witness is the lexicographically least
/// minimum cover, which is the complement of the lexicographically greatest
/// maximum independent set.
pub fn min_vertex_cover(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (0, Vec::new());
    }
    let independent = lex_greatest_max_clique(&g.complement());
    let mut in_is = vec![false; n];
    for &v in &independent {
        in_is[v] = true;
    }
    let cover: Vec<usize> = (0..n).filter(|&v| !in_is[v]).collect();
    (cover.len(), cover)
}

/// Strong resolving graph: same vertices, edges between mutually maximally
/// distant pairs (`d(u,v) >= d(u,w)` for every neighbor `w` of `v`, and
/// symmetrically).
pub fn strong_resolving_graph(g: &Graph, d: &DistanceMatrix) -> Result<Graph, GraphError> {
    if !d.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.vertex_count();
    let mut srg = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if mutually_maximally_distant(g, d, u, v) {
                srg.add_edge(u, v);
            }
        }
    }
    Ok(srg)
}

fn mutually_maximally_distant(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    let duv = d.dist(u, v);
    g.neighbors(v).iter().all(|w| d.dist(u, w) <= duv)
        && g.neighbors(u).iter().all(|w| d.dist(v, w) <= duv)
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

    fn path(n: usize) -> Graph {
        graph_from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn distances_and_diameter() {
        let g = path(4);
        let d = all_pairs_distances(&g);
        assert_eq!(d.dist(0, 3), 3);
        assert_eq!(d.dist(0, 0), 0);
        assert!(d.is_connected());
        assert_eq!(diameter(&g), Diameter::Finite(3));
        assert_eq!(diameter(&complete(3)), Diameter::Finite(1));

        let disconnected = graph_from_edges(4, &[(0, 1), (2, 3)]);
        let dd = all_pairs_distances(&disconnected);
        assert_eq!(dd.get(0, 2), None);
        assert_eq!(dd.get(0, 1), Some(1));
        assert_eq!(diameter(&disconnected), Diameter::Disconnected);
    }

    #[test]
    fn distance_matrix_is_metric() {
        let g = graph_from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)]);
        let d = all_pairs_distances(&g);
        let n = g.vertex_count();
        for i in 0..n {
            assert_eq!(d.dist(i, i), 0);
            for j in 0..n {
                assert_eq!(d.dist(i, j), d.dist(j, i));
                for k in 0..n {
                    assert!(d.dist(i, k) <= d.dist(i, j) + d.dist(j, k));
                }
            }
        }
    }

    #[test]
    fn reduction_collapses_complete_graph() {
        let r = reduce_by_closed_neighborhoods(&complete(3));
        assert_eq!(r.class_count(), 1);
        assert_eq!(r.classes[0], vec![0, 1, 2]);
        assert_eq!(r.graph.vertex_count(), 1);
    }

    #[test]
    fn reduction_keeps_distinct_neighborhoods() {
        let g = path(4);
        let r = reduce_by_closed_neighborhoods(&g);
        assert_eq!(r.class_count(), 4);
    }

    #[test]
    fn reduction_is_idempotent() {
        for g in [
            complete(5),
            path(6),
            graph_from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]),
        ] {
            let r = reduce_by_closed_neighborhoods(&g);
            let again = reduce_by_closed_neighborhoods(&r.graph);
            assert_eq!(again.class_count(), r.class_count());
            assert!(again.classes.iter().all(|c| c.len() == 1));
        }
    }

    #[test]
    fn clique_basics() {
        assert_eq!(max_clique(&complete(4)), (4, vec![0, 1, 2, 3]));
        assert_eq!(max_clique(&Graph::new(5)).0, 1);
        assert_eq!(max_clique(&Graph::new(5)).1, vec![0]);
        assert_eq!(max_clique(&Graph::new(0)), (0, vec![]));
        // triangle 1-2-3 plus pendant vertex 0
        let g = graph_from_edges(4, &[(1, 2), (1, 3), (2, 3), (0, 1)]);
        assert_eq!(max_clique(&g), (3, vec![1, 2, 3]));
    }

    #[test]
    fn clique_witness_is_lex_least() {
        // two triangles {0,4,5} and {1,2,3}; lex-least witness starts at 0
        let g = graph_from_edges(6, &[(0, 4), (0, 5), (4, 5), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(max_clique(&g), (3, vec![0, 4, 5]));
    }

    #[test]
    fn vertex_cover_basics() {
        assert_eq!(min_vertex_cover(&complete(5)).0, 4);
        assert_eq!(min_vertex_cover(&Graph::new(4)), (0, vec![]));
        assert_eq!(min_vertex_cover(&graph_from_edges(2, &[(0, 1)])).0, 1);
        // star: center covers everything
        let star = graph_from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(min_vertex_cover(&star), (1, vec![0]));
        // C4: two minimum covers {0,2} and {1,3}; lex-least wins
        let c4 = graph_from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(min_vertex_cover(&c4), (2, vec![0, 2]));
    }

    #[test]
    fn cover_witness_covers_all_edges() {
        let g = graph_from_edges(7, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)]);
        let (size, cover) = min_vertex_cover(&g);
        assert_eq!(size, cover.len());
        for (i, j) in g.edges() {
            assert!(cover.contains(&i) || cover.contains(&j), "edge ({i},{j}) uncovered");
        }
    }

    #[test]
    fn clique_cover_duality() {
        let graphs = [
            complete(6),
            path(7),
            Graph::new(5),
            graph_from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (2, 3), (1, 4), (4, 5)]),
        ];
        for g in graphs {
            let n = g.vertex_count();
            let (omega, _) = max_clique(&g);
            let (tau, _) = min_vertex_cover(&g.complement());
            assert_eq!(omega + tau, n);
        }
    }

    #[test]
    fn srg_of_path_connects_endpoints() {
        let g = path(3);
        let d = all_pairs_distances(&g);
        let srg = strong_resolving_graph(&g, &d).unwrap();
        assert_eq!(srg.edges(), vec![(0, 2)]);
    }

    #[test]
    fn srg_of_complete_graph_is_complete() {
        for n in 2..6 {
            let g = complete(n);
            let d = all_pairs_distances(&g);
            let srg = strong_resolving_graph(&g, &d).unwrap();
            assert_eq!(srg.edge_count(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn srg_rejects_disconnected_input() {
        let g = graph_from_edges(4, &[(0, 1), (2, 3)]);
        let d = all_pairs_distances(&g);
        assert_eq!(strong_resolving_graph(&g, &d), Err(GraphError::Disconnected));
    }
}
