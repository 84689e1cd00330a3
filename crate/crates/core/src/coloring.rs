//! Colorings and the predicates built on them: properness, total dominator colorings,
//! and common and private neighborhoods of color classes.
//!
//! A vertex `v` *dominates* a class `V_i` when every member of `V_i` is adjacent to `v`.
//! Neighborhoods are open, so a vertex never dominates its own class.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Vertex → color assignment with colors `0..k` and no empty class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Accepts an assignment whose colors are exactly `0..k` for some `k`.
    pub fn new(colors: Vec<usize>) -> Result<Coloring> {
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let mut used = vec![false; k];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidColoring(format!(
                "color {missing} has an empty class"
            )));
        }
        Ok(Coloring { colors, k })
    }

    /// Relabels arbitrary color labels by first occurrence, so the result is canonical.
    pub fn from_labels<T: Eq + std::hash::Hash + Copy>(labels: &[T]) -> Coloring {
        let mut seen = std::collections::HashMap::new();
        let colors = labels
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(*l).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            k: seen.len(),
        }
    }

    /// Build from explicit classes covering `0..n` exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Coloring> {
        let mut colors = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidColoring(format!("class {c} is empty")));
            }
            for &v in class {
                if v >= n || colors[v] != usize::MAX {
                    return Err(Error::InvalidColoring(format!(
                        "vertex {v} is out of range or listed twice"
                    )));
                }
                colors[v] = c;
            }
        }
        if let Some(v) = colors.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidColoring(format!("vertex {v} has no color")));
        }
        Ok(Coloring {
            colors,
            k: classes.len(),
        })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of color classes.
    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Members of class `c`, ascending.
    pub fn class(&self, c: usize) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.colors[v] == c).collect()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Colors renumbered in order of each class's smallest vertex.
    pub fn canonical(&self) -> Coloring {
        Coloring::from_labels(&self.colors)
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({self})")
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Coloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Coloring> {
        let colors = s
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::InvalidColoring(format!("invalid color {t:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Coloring::new(colors)
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.colors.serialize(serializer)
    }
}

fn check_len(g: &Graph, f: &Coloring) -> Result<()> {
    if f.len() != g.order() {
        return Err(Error::InvalidColoring(format!(
            "coloring has {} entries but the graph has {} vertices",
            f.len(),
            g.order()
        )));
    }
    Ok(())
}

pub fn is_proper(g: &Graph, f: &Coloring) -> Result<bool> {
    check_len(g, f)?;
    Ok(g.edges().all(|(i, j)| f.color(i) != f.color(j)))
}

/// Classes of `f` dominated by `v`, ascending.
pub fn dominated_classes(g: &Graph, f: &Coloring, v: usize) -> Result<Vec<usize>> {
    check_len(g, f)?;
    // count members of each class inside N(v); v dominates c when that count is the class size
    let mut inside = vec![0usize; f.num_colors()];
    for &u in g.neighbors(v) {
        inside[f.color(u)] += 1;
    }
    let mut sizes = vec![0usize; f.num_colors()];
    for &c in f.colors() {
        sizes[c] += 1;
    }
    Ok((0..f.num_colors())
        .filter(|&c| inside[c] == sizes[c])
        .collect())
}

/// Proper, and every vertex dominates at least one class. Improper colorings give `false`.
pub fn is_total_dominator(g: &Graph, f: &Coloring) -> Result<bool> {
    if !is_proper(g, f)? {
        return Ok(false);
    }
    for v in 0..g.order() {
        if dominated_classes(g, f, v)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// CN(S): vertices adjacent to every member of `S`.
pub fn common_neighborhood(g: &Graph, set: &[usize]) -> Result<Vec<usize>> {
    if set.is_empty() {
        return Err(invalid("common neighborhood of the empty set"));
    }
    if let Some(&v) = set.iter().find(|&&v| v >= g.order()) {
        return Err(invalid(format!("vertex {v} is not in the graph")));
    }
    Ok((0..g.order())
        .filter(|&v| set.iter().all(|&s| g.has_edge(v, s)))
        .collect())
}

/// pn(V_i; f): vertices that dominate class `i` and no other class.
///
/// Meaningful when `f` is a total dominator coloring, but computed for any coloring.
pub fn private_neighborhood(g: &Graph, f: &Coloring, i: usize) -> Result<Vec<usize>> {
    check_len(g, f)?;
    if i >= f.num_colors() {
        return Err(invalid(format!(
            "color {i} out of range 0..{}",
            f.num_colors()
        )));
    }
    let mut out = Vec::new();
    for v in 0..g.order() {
        if dominated_classes(g, f, v)? == [i] {
            out.push(v);
        }
    }
    Ok(out)
}

/// Classes of `f` whose private neighborhood is empty, ascending.
pub fn empty_private_classes(g: &Graph, f: &Coloring) -> Result<Vec<usize>> {
    check_len(g, f)?;
    let mut has_private = vec![false; f.num_colors()];
    for v in 0..g.order() {
        if let [c] = dominated_classes(g, f, v)?[..] {
            has_private[c] = true;
        }
    }
    Ok((0..f.num_colors()).filter(|&c| !has_private[c]).collect())
}
