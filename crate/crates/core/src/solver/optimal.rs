//! Lazy enumeration of every total dominator coloring with exactly `k` classes.

use super::search::search_order;
use super::{check_solvable, chi_d_t, SearchConfig, VertexOrder};
use crate::coloring::Coloring;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, MAX_MASK_ORDER};

/// Stream of total dominator colorings with exactly `k` classes, one per partition of the
/// vertex set (color permutations collapsed), each in canonical form.
pub struct TdcStream {
    n: usize,
    k: usize,
    order: Vec<usize>,
    nbr: Vec<u64>,
    color: Vec<usize>,
    class_mask: Vec<u64>,
    free: u64,
    used: usize,
    depth: usize,
    cursor: Vec<usize>,
    yielded: u64,
    done: bool,
}

impl TdcStream {
    fn new(g: &Graph, k: usize) -> TdcStream {
        let n = g.order();
        TdcStream {
            n,
            k,
            order: search_order(g, VertexOrder::Degeneracy),
            nbr: g.neighbor_masks().expect("order checked"),
            color: vec![usize::MAX; n],
            class_mask: vec![0; k + 1],
            free: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            used: 0,
            depth: 0,
            cursor: vec![0; n + 1],
            yielded: 0,
            done: k == 0 || k > n,
        }
    }

    /// Number of colorings produced so far.
    pub fn yielded(&self) -> u64 {
        self.yielded
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.class_mask[c] |= 1 << v;
        self.free &= !(1 << v);
        if c == self.used {
            self.used += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = usize::MAX;
        self.class_mask[c] &= !(1 << v);
        self.free |= 1 << v;
        if self.class_mask[c] == 0 {
            self.used -= 1;
        }
    }

    fn viable(&self) -> bool {
        let remaining = self.n - self.depth;
        if self.used + remaining < self.k {
            return false;
        }
        let can_open = self.used < self.k;
        (0..self.n).all(|v| {
            let nbr = self.nbr[v];
            (can_open && nbr & self.free != 0)
                || self.class_mask[..self.used].iter().any(|&m| m & !nbr == 0)
        })
    }
}

impl Iterator for TdcStream {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        loop {
            if self.done {
                return None;
            }
            if self.depth == self.n {
                // resume after a yielded leaf
                self.depth -= 1;
                self.unassign(self.order[self.depth]);
                continue;
            }
            let v = self.order[self.depth];
            let start = self.cursor[self.depth];
            let top = self.used.min(self.k - 1);
            let next =
                (start..=top).find(|&c| c == self.used || self.class_mask[c] & self.nbr[v] == 0);
            let Some(c) = next else {
                if self.depth == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.unassign(self.order[self.depth]);
                continue;
            };
            self.cursor[self.depth] = c + 1;
            self.assign(v, c);
            self.depth += 1;
            if !self.viable() {
                self.depth -= 1;
                self.unassign(v);
                continue;
            }
            if self.depth == self.n {
                self.yielded += 1;
                return Some(Coloring::from_labels(&self.color));
            }
            self.cursor[self.depth] = 0;
        }
    }
}

/// Every total dominator coloring of `g` with exactly `k` classes, without comparing `k` to the
/// optimum.
pub fn tdcs_with_classes(g: &Graph, k: usize) -> Result<TdcStream> {
    check_solvable(g, MAX_MASK_ORDER)?;
    Ok(TdcStream::new(g, k))
}

/// Every optimal total dominator coloring. `k` must equal χ_d^t(G): below it there is nothing to
/// enumerate ([`Error::EmptyStream`]); above it the colorings are not optimal.
pub fn enumerate_optimal_tdc(g: &Graph, k: usize) -> Result<TdcStream> {
    let optimum = chi_d_t(g, &SearchConfig::default())?.value;
    if k < optimum {
        return Err(Error::EmptyStream { k, optimum });
    }
    if k > optimum {
        return Err(invalid(format!(
            "{k} classes is above the optimum {optimum}"
        )));
    }
    tdcs_with_classes(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_total_dominator;
    use crate::graph::{complete, cycle, path, wheel};
    use std::collections::HashSet;

    #[test]
    fn small_counts() {
        assert_eq!(
            enumerate_optimal_tdc(&complete(3).unwrap(), 3)
                .unwrap()
                .count(),
            1
        );
        assert_eq!(
            enumerate_optimal_tdc(&path(2).unwrap(), 2).unwrap().count(),
            1
        );
        let only: Vec<Coloring> = enumerate_optimal_tdc(&cycle(4).unwrap(), 2)
            .unwrap()
            .collect();
        assert_eq!(only, vec![Coloring::new(vec![0, 1, 0, 1]).unwrap()]);
    }

    #[test]
    fn k_out_of_range() {
        let c5 = cycle(5).unwrap();
        assert_eq!(
            enumerate_optimal_tdc(&c5, 3).err(),
            Some(Error::EmptyStream { k: 3, optimum: 4 })
        );
        assert!(matches!(
            enumerate_optimal_tdc(&c5, 5),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn yields_distinct_valid_colorings() {
        for g in [cycle(7).unwrap(), wheel(5).unwrap(), path(6).unwrap()] {
            let k = chi_d_t(&g, &SearchConfig::default()).unwrap().value;
            let all: Vec<Coloring> = enumerate_optimal_tdc(&g, k).unwrap().collect();
            assert!(!all.is_empty());
            let distinct: HashSet<&Coloring> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            for f in &all {
                assert_eq!(f.num_colors(), k);
                assert!(f.is_canonical());
                assert!(is_total_dominator(&g, f).unwrap());
            }
        }
    }

    #[test]
    fn non_optimal_class_counts_are_enumerable() {
        // every partition of K_3 into 3 classes, and none into 2
        assert_eq!(
            tdcs_with_classes(&complete(3).unwrap(), 2).unwrap().count(),
            0
        );
        assert_eq!(tdcs_with_classes(&path(3).unwrap(), 3).unwrap().count(), 1);
    }
}
