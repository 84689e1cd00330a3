//! Exhaustive enumeration of small labeled graphs and brute-force canonical forms.

use super::io::upper_triangle_pairs;
use super::Graph;
use crate::error::{invalid, Error, Result};

/// Largest order accepted by [`enumerate_graphs`] and [`canonical_form`].
pub const MAX_ENUM_ORDER: usize = 8;

/// Upper-triangle adjacency bits in graph6 order, first pair in the most significant position.
fn adjacency_code(g: &Graph) -> u64 {
    upper_triangle_pairs(g.order()).fold(0u64, |acc, (i, j)| acc << 1 | g.has_edge(i, j) as u64)
}

fn from_code(n: usize, code: u64) -> Graph {
    let len = n * n.saturating_sub(1) / 2;
    let mut adj = vec![Vec::new(); n];
    for (k, (i, j)) in upper_triangle_pairs(n).enumerate() {
        if code >> (len - 1 - k) & 1 == 1 {
            adj[i].push(j);
            adj[j].push(i);
        }
    }
    Graph::from_adjacency(adj)
}

struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    len: usize,
    // new label -> original vertex
    inv: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u64, Vec<usize>)>,
}

impl Canonizer<'_> {
    /// `prefix` holds the bits of columns 1..depth; `tight` is true while it equals the best prefix.
    fn search(&mut self, depth: usize, prefix: u64, bits: usize, tight: bool) {
        if depth == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.inv.clone()));
            }
            return;
        }
        for v in 0..self.n {
            if self.used[v] {
                continue;
            }
            let mut column = prefix;
            for i in 0..depth {
                column = column << 1 | self.g.has_edge(self.inv[i], v) as u64;
            }
            let nbits = bits + depth;
            let mut still_tight = tight;
            if let Some((best, _)) = &self.best {
                if tight {
                    let best_prefix = if nbits == 0 {
                        0
                    } else {
                        best >> (self.len - nbits)
                    };
                    if column > best_prefix {
                        continue;
                    }
                    still_tight = column == best_prefix;
                }
            }
            self.used[v] = true;
            self.inv[depth] = v;
            self.search(depth + 1, column, nbits, still_tight);
            self.used[v] = false;
        }
    }
}

/// The relabeling of `g` whose adjacency bitstring is lexicographically least.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if n > MAX_ENUM_ORDER {
        return Err(Error::InstanceTooLarge {
            n,
            max: MAX_ENUM_ORDER,
        });
    }
    let mut c = Canonizer {
        g,
        n,
        len: n * n.saturating_sub(1) / 2,
        inv: vec![0; n],
        used: vec![false; n],
        best: None,
    };
    c.search(0, 0, 0, true);
    let (code, _) = c.best.expect("at least one permutation");
    Ok(from_code(n, code))
}

/// Backtracking isomorphism test; fine for the small graphs this crate works with.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == a.order() {
            return true;
        }
        for w in 0..b.order() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
                continue;
            }
            used[w] = true;
            map.push(w);
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(a, b, &mut Vec::with_capacity(n), &mut vec![false; n])
}

/// Stream over labeled graphs on `n` vertices with minimum degree at least `min_degree`,
/// in increasing order of the adjacency code. With `dedup_isomorphs` only graphs that are
/// their own canonical form are yielded, one per isomorphism class.
pub struct GraphStream {
    n: usize,
    min_degree: usize,
    dedup: bool,
    next: u64,
    end: u64,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let code = self.next;
            self.next += 1;
            let g = from_code(self.n, code);
            if g.min_degree() < self.min_degree && self.n > 0 {
                continue;
            }
            if self.dedup && adjacency_code(&canonical_form(&g).expect("order checked")) != code {
                continue;
            }
            return Some(g);
        }
        None
    }
}

pub fn enumerate_graphs(n: usize, min_degree: usize, dedup_isomorphs: bool) -> Result<GraphStream> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(invalid(format!(
            "enumeration needs 1 <= n <= {MAX_ENUM_ORDER}, got {n}"
        )));
    }
    let len = n * (n - 1) / 2;
    Ok(GraphStream {
        n,
        min_degree,
        dedup: dedup_isomorphs,
        next: 0,
        end: 1u64 << len,
    })
}
