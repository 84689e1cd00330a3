//! Simple undirected graphs on vertices `0..n`, the standard families, and the
//! complement and Mycielskian constructions.

mod enumerate;
mod family;
mod io;

pub use enumerate::{canonical_form, enumerate_graphs, is_isomorphic, GraphStream, MAX_ENUM_ORDER};
pub use family::{FamilySpec, GraphFamily, GraphOp};
pub use io::{from_edge_list, from_graph6, to_edge_list, to_graph6};

use crate::error::{invalid, Result};

/// Largest order the bitmask based algorithms accept.
pub const MAX_MASK_ORDER: usize = 64;

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Build a graph from an edge list, rejecting loops, duplicates and out of range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(invalid(format!(
                    "edge {{{i},{j}}} has an endpoint outside 0..{n}"
                )));
            }
            if i == j {
                return Err(invalid(format!("self-loop at vertex {i}")));
            }
            if adj[i].contains(&j) {
                return Err(invalid(format!("duplicate edge {{{i},{j}}}")));
            }
            adj[i].push(j);
            adj[j].push(i);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Internal constructor for edge sets already known to be valid.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Graph {
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, m }
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// Open neighborhood of `v`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.order() && self.adj[i].binary_search(&j).is_ok()
    }

    /// δ(G); zero for the graph with no vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Δ(G); zero for the graph with no vertices.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// First vertex with no neighbours, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(Vec::is_empty)
    }

    /// Edges as pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Neighborhoods as bitmasks. `None` when the order exceeds [`MAX_MASK_ORDER`].
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.order() > MAX_MASK_ORDER {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|row| row.iter().fold(0u64, |acc, &j| acc | 1 << j))
                .collect(),
        )
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(invalid("relabeling is not a permutation of the vertex set"));
        }
        let mut adj = vec![Vec::new(); n];
        for (v, row) in self.adj.iter().enumerate() {
            adj[perm[v]] = row.iter().map(|&u| perm[u]).collect();
        }
        Ok(Graph::from_adjacency(adj))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.order(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// P_n: edges `{i, i+1}`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// C_n: edges `{i, i+1 mod n}`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// W_n of order n+1. Vertex 0 is the hub; 1..=n form the rim cycle.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("wheel needs n >= 3"));
    }
    let spokes = (1..=n).map(|i| (0, i));
    let rim = (0..n).map(|i| (1 + i, 1 + (i + 1) % n));
    Graph::from_edges(n + 1, spokes.chain(rim))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let adj = (0..n)
        .map(|i| (0..n).filter(|&j| j != i).collect())
        .collect();
    Ok(Graph::from_adjacency(adj))
}

/// Complete multipartite graph; parts occupy consecutive vertex ranges.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(invalid(
            "complete multipartite graph needs a non-empty list of positive part sizes",
        ));
    }
    let part_of: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(p, &size)| std::iter::repeat_n(p, size))
        .collect();
    let n = part_of.len();
    let adj = (0..n)
        .map(|i| (0..n).filter(|&j| part_of[j] != part_of[i]).collect())
        .collect();
    Ok(Graph::from_adjacency(adj))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let adj = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && !g.has_edge(i, j)).collect())
        .collect();
    Graph::from_adjacency(adj)
}

/// M(G) on 2n+1 vertices: originals `0..n`, shadows `n..2n` (shadow of `i` is `n + i`),
/// apex `2n`. Shadow `n + i` is adjacent to N_G(i) and the apex.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.order();
    let apex = 2 * n;
    let mut adj = vec![Vec::new(); 2 * n + 1];
    for i in 0..n {
        for &j in g.neighbors(i) {
            adj[i].push(j);
            adj[i].push(n + j);
            adj[n + i].push(j);
        }
        adj[n + i].push(apex);
        adj[apex].push(n + i);
    }
    Graph::from_adjacency(adj)
}

/// M^t(G), with M^0(G) = G.
pub fn iterated_mycielskian(g: &Graph, t: usize) -> Graph {
    (0..t).fold(g.clone(), |acc, _| mycielskian(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_shapes() {
        let p1 = path(1).unwrap();
        assert_eq!((p1.order(), p1.size()), (1, 0));
        assert_eq!(path(2).unwrap().edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(
            path(4).unwrap().edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3)]
        );
        assert!(path(0).is_err());
    }

    #[test]
    fn cycle_shapes() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.size(), 6);
        assert!((0..6).all(|v| c6.degree(v) == 2));
        assert!(matches!(cycle(2), Err(crate::Error::InvalidParameter(_))));
        let c4 = cycle(4).unwrap();
        assert!(is_isomorphic(&c4, &complete_multipartite(&[2, 2]).unwrap()));
    }

    #[test]
    fn wheel_shapes() {
        assert!(is_isomorphic(&wheel(3).unwrap(), &complete(4).unwrap()));
        let w4 = wheel(4).unwrap();
        assert_eq!((w4.order(), w4.size(), w4.degree(0)), (5, 8, 4));
        let w5 = wheel(5).unwrap();
        assert_eq!((w5.order(), w5.size()), (6, 10));
        assert!(wheel(2).is_err());
    }

    #[test]
    fn complete_and_multipartite() {
        assert_eq!(
            complete(3).unwrap(),
            complete_multipartite(&[1, 1, 1]).unwrap()
        );
        assert_eq!(complete(5).unwrap().size(), 10);
        let star = complete_multipartite(&[1, 3]).unwrap();
        assert_eq!((star.size(), star.degree(0)), (3, 3));
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&complete(4).unwrap()).size(), 0);
        let p4 = path(4).unwrap();
        assert!(is_isomorphic(&complement(&p4), &p4));
        let c5 = cycle(5).unwrap();
        assert!(is_isomorphic(&complement(&c5), &c5));
    }

    #[test]
    fn mycielskian_small_cases() {
        let k2 = path(2).unwrap();
        assert!(is_isomorphic(&mycielskian(&k2), &cycle(5).unwrap()));
        let grotzsch = mycielskian(&cycle(5).unwrap());
        assert_eq!((grotzsch.order(), grotzsch.size()), (11, 20));
        let k1 = mycielskian(&Graph::empty(1));
        assert_eq!(k1.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn mycielskian_layout() {
        let g = path(3).unwrap();
        let m = mycielskian(&g);
        // shadow of vertex 1 is 4, apex is 6
        assert_eq!(m.neighbors(4), &[0, 2, 6]);
        assert_eq!(m.neighbors(6), &[3, 4, 5]);
        assert_eq!(m.neighbors(1), &[0, 2, 3, 5]);
    }

    #[test]
    fn iterated_orders() {
        let k3 = complete(3).unwrap();
        assert_eq!(iterated_mycielskian(&k3, 0), k3);
        assert_eq!(iterated_mycielskian(&k3, 1).order(), 7);
        assert_eq!(iterated_mycielskian(&k3, 2).order(), 15);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn relabel_checks_permutation() {
        let g = path(3).unwrap();
        assert_eq!(
            g.relabel(&[1, 0, 2]).unwrap().edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2)]
        );
        assert!(g.relabel(&[0, 0, 1]).is_err());
    }
}
