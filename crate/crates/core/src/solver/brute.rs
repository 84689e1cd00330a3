//! Exhaustive oracle for χ_d^t: every set partition of the vertex set, in restricted-growth
//! order, filtered by the total dominator predicate.

use std::time::Instant;

use super::{check_solvable, SolveResult};
use crate::coloring::{is_total_dominator, Coloring};
use crate::error::Result;
use crate::graph::Graph;

pub const BRUTE_FORCE_MAX_ORDER: usize = 10;

/// Advance a restricted-growth string in place (`a[0] = 0`, `a[i] <= 1 + max(a[..i])`).
/// Returns false after the last string.
fn next_rgs(a: &mut [usize]) -> bool {
    for i in (1..a.len()).rev() {
        let bound = a[..i].iter().max().copied().unwrap_or(0) + 1;
        if a[i] < bound {
            a[i] += 1;
            a[i + 1..].iter_mut().for_each(|x| *x = 0);
            return true;
        }
    }
    false
}

pub fn brute_force_chi_d_t(g: &Graph) -> Result<SolveResult> {
    check_solvable(g, BRUTE_FORCE_MAX_ORDER)?;
    let start = Instant::now();
    let mut rgs = vec![0usize; g.order()];
    let mut best: Option<Coloring> = None;
    let mut scanned = 0u64;
    loop {
        scanned += 1;
        let f = Coloring::new(rgs.clone())?;
        let better = best
            .as_ref()
            .is_none_or(|b| f.num_colors() < b.num_colors());
        if better && is_total_dominator(g, &f)? {
            best = Some(f);
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    // all singletons is a total dominator coloring once every vertex has a neighbor
    let witness = best.expect("singleton partition is a total dominator coloring");
    Ok(SolveResult {
        value: witness.num_colors(),
        witness,
        nodes_explored: scanned,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{cycle, path};

    #[test]
    fn scans_bell_many_partitions() {
        for (n, bell) in [(3, 5), (4, 15), (5, 52), (6, 203), (7, 877)] {
            let r = brute_force_chi_d_t(&cycle(n).unwrap()).unwrap();
            assert_eq!(r.nodes_explored, bell, "n = {n}");
        }
    }

    #[test]
    fn small_family_values() {
        assert_eq!(brute_force_chi_d_t(&cycle(6).unwrap()).unwrap().value, 4);
        assert_eq!(brute_force_chi_d_t(&path(3).unwrap()).unwrap().value, 2);
    }

    #[test]
    fn too_large() {
        assert_eq!(
            brute_force_chi_d_t(&cycle(11).unwrap()).unwrap_err(),
            Error::InstanceTooLarge { n: 11, max: 10 }
        );
    }
}
