//! Exact chromatic number by DSATUR branch-and-bound. Used as the lower bound for χ_d^t.

use crate::graph::Graph;

struct Dsatur<'a> {
    g: &'a Graph,
    color: Vec<Option<usize>>,
    best: usize,
}

impl Dsatur<'_> {
    /// Uncolored vertex with the most distinct neighbor colors; ties by degree, then index.
    fn pick(&self) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| self.color[v].is_none())
            .max_by_key(|&v| {
                let mut seen: Vec<usize> = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter_map(|&u| self.color[u])
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                (seen.len(), self.g.degree(v), std::cmp::Reverse(v))
            })
    }

    fn search(&mut self, used: usize) {
        if used >= self.best {
            return;
        }
        let Some(v) = self.pick() else {
            self.best = used;
            return;
        };
        for c in 0..=used {
            if c + 1 >= self.best && c == used {
                break;
            }
            if self
                .g
                .neighbors(v)
                .iter()
                .any(|&u| self.color[u] == Some(c))
            {
                continue;
            }
            self.color[v] = Some(c);
            self.search(used.max(c + 1));
            self.color[v] = None;
        }
    }
}

/// χ(G). Zero for the graph with no vertices.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    let mut d = Dsatur {
        g,
        color: vec![None; n],
        best: n + 1,
    };
    d.search(0);
    d.best.min(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, mycielskian, path, Graph};

    #[test]
    fn known_values() {
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        assert_eq!(chromatic_number(&path(5).unwrap()), 2);
        assert_eq!(chromatic_number(&cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&cycle(6).unwrap()), 2);
        assert_eq!(chromatic_number(&complete(6).unwrap()), 6);
        assert_eq!(
            chromatic_number(&complete_multipartite(&[2, 3, 1]).unwrap()),
            3
        );
    }

    #[test]
    fn mycielski_raises_chromatic_number() {
        let grotzsch = mycielskian(&cycle(5).unwrap());
        assert_eq!(chromatic_number(&grotzsch), 4);
        assert_eq!(chromatic_number(&mycielskian(&grotzsch)), 5);
    }
}
