//! Colorings built the way the constructive arguments build them.

use serde::Serialize;

use crate::coloring::{empty_private_classes, is_total_dominator, Coloring};
use crate::error::{invalid, Result};
use crate::graph::{cycle, mycielskian, Graph};

/// Pattern used for each run of six consecutive cycle vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum CycleWay {
    /// a, b, a, b, c, d
    #[default]
    One,
    /// a, b, a, c, d, c
    Two,
}

#[derive(Debug, Clone, Serialize)]
pub struct CycleConstruction {
    pub n: usize,
    pub coloring: Coloring,
    pub colors: usize,
    pub is_tdc: bool,
}

/// [`construct_cycle_tdc_with`] using the first six-vertex pattern.
pub fn construct_cycle_tdc(n: usize) -> Result<CycleConstruction> {
    construct_cycle_tdc_with(n, CycleWay::One)
}

/// Colors C_n with ⌊n/6⌋ blocks of four fresh colors each, then the tail for `n mod 6`:
///
/// | r | tail colors (fresh) |
/// |---|---------------------|
/// | 0 | none                |
/// | 1 | ε                   |
/// | 2 | θ, ε                |
/// | 3 | ε, θ, ε             |
/// | 4 | π, ς, θ, ε          |
/// | 5 | π, ς, π, θ, ε       |
///
/// The result is checked, not repaired: small `n` may produce an invalid coloring.
pub fn construct_cycle_tdc_with(n: usize, way: CycleWay) -> Result<CycleConstruction> {
    let g = cycle(n)?;
    let block: [usize; 6] = match way {
        CycleWay::One => [0, 1, 0, 1, 2, 3],
        CycleWay::Two => [0, 1, 0, 2, 3, 2],
    };
    let (q, r) = (n / 6, n % 6);
    let mut labels: Vec<usize> = (0..q)
        .flat_map(|b| block.iter().map(move |c| 4 * b + c))
        .collect();
    let tail: &[usize] = match r {
        0 => &[],
        1 => &[0],
        2 => &[0, 1],
        3 => &[0, 1, 0],
        4 => &[0, 1, 2, 3],
        _ => &[0, 1, 0, 2, 3],
    };
    labels.extend(tail.iter().map(|c| 4 * q + c));
    let coloring = Coloring::new(labels)?;
    Ok(CycleConstruction {
        n,
        colors: coloring.num_colors(),
        is_tdc: is_total_dominator(&g, &coloring)?,
        coloring,
    })
}

/// Lift a total dominator coloring `f = (V_1, …, V_ℓ)` of G to M(G).
///
/// Without `empty_pn_class`: `(V_1, …, V_ℓ, U, {w})`, ℓ + 2 classes.
/// With class `i`, whose private neighborhood must be empty: `(V_1, …, V_i ∪ {w}, …, V_ℓ, U)`,
/// ℓ + 1 classes. Shadows `U` take color ℓ in both.
pub fn construct_mycielskian_tdc(
    g: &Graph,
    f: &Coloring,
    empty_pn_class: Option<usize>,
) -> Result<Coloring> {
    if !is_total_dominator(g, f)? {
        return Err(invalid(
            "the coloring is not a total dominator coloring of G",
        ));
    }
    let n = g.order();
    let l = f.num_colors();
    let apex = match empty_pn_class {
        None => l + 1,
        Some(i) => {
            if i >= l {
                return Err(invalid(format!("class {i} out of range 0..{l}")));
            }
            if !empty_private_classes(g, f)?.contains(&i) {
                return Err(invalid(format!(
                    "class {i} has a non-empty private neighborhood"
                )));
            }
            i
        }
    };
    let mut colors = f.colors().to_vec();
    colors.extend(std::iter::repeat_n(l, n));
    colors.push(apex);
    let lifted = Coloring::new(colors)?;
    debug_assert_eq!(lifted.len(), mycielskian(g).order());
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn cycle_constructions() {
        let c12 = construct_cycle_tdc(12).unwrap();
        assert_eq!((c12.colors, c12.is_tdc), (8, true));
        let c6 = construct_cycle_tdc(6).unwrap();
        assert_eq!(c6.coloring.colors(), &[0, 1, 0, 1, 2, 3]);
        assert!(c6.is_tdc);
        let c6b = construct_cycle_tdc_with(6, CycleWay::Two).unwrap();
        assert_eq!(c6b.coloring.colors(), &[0, 1, 0, 2, 3, 2]);
        assert!(c6b.is_tdc);
        // C_4 gets four singleton classes, which is a valid but non-optimal coloring
        let c4 = construct_cycle_tdc(4).unwrap();
        assert_eq!((c4.colors, c4.is_tdc), (4, true));
        // the r = 3 tail puts ε on two adjacent vertices of the triangle
        assert!(!construct_cycle_tdc(3).unwrap().is_tdc);
        assert!(construct_cycle_tdc(2).is_err());
    }

    #[test]
    fn mycielskian_lifts_on_k3() {
        let k3 = complete(3).unwrap();
        let f = Coloring::new(vec![0, 1, 2]).unwrap();
        let m = mycielskian(&k3);
        let plus_two = construct_mycielskian_tdc(&k3, &f, None).unwrap();
        assert_eq!(plus_two.num_colors(), 5);
        assert!(is_total_dominator(&m, &plus_two).unwrap());
        for i in 0..3 {
            let plus_one = construct_mycielskian_tdc(&k3, &f, Some(i)).unwrap();
            assert_eq!(plus_one.num_colors(), 4);
            assert!(is_total_dominator(&m, &plus_one).unwrap());
        }
    }

    #[test]
    fn lift_preconditions() {
        let k2 = path(2).unwrap();
        let f = Coloring::new(vec![0, 1]).unwrap();
        assert!(construct_mycielskian_tdc(&k2, &f, Some(0)).is_err());
        assert!(construct_mycielskian_tdc(&k2, &f, Some(5)).is_err());
        assert!(construct_mycielskian_tdc(&k2, &f, None).is_ok());
        let bad = Coloring::new(vec![0, 0]).unwrap();
        assert!(construct_mycielskian_tdc(&k2, &bad, None).is_err());
    }
}
