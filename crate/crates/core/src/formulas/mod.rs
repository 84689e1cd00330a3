//! Closed-form predictions for χ_d^t and class membership of the standard families, transcribed
//! case by case. Nothing here is corrected: when a formula is wrong for some `n`, the audit is
//! what reports it.

mod audit;
mod construct;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use audit::{
    audit, evaluate, table, AuditConfig, ClaimReport, Observed, Status, TableFamily, TableRow,
};
pub use construct::{
    construct_cycle_tdc, construct_cycle_tdc_with, construct_mycielskian_tdc, CycleConstruction,
    CycleWay,
};

use crate::classifier::GraphClass;
use crate::error::{invalid, Error};

/// Every checkable statement about a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Wheel,
    Cycle,
    Path,
    ComplementCycle,
    ComplementPath,
    Complete,
    MycWheel,
    MycCycle,
    MycPath,
    MycComplementCycle,
    MycComplementPath,
    ClassWheel,
    ClassCycle,
    ClassPath,
    ClassComplementCycle,
    ClassComplementPath,
    ClassComplete,
    ClassMultipartite,
    IteratedMycielskian,
    Converse,
}

impl Claim {
    pub const ALL: [Claim; 20] = [
        Claim::Wheel,
        Claim::Cycle,
        Claim::Path,
        Claim::ComplementCycle,
        Claim::ComplementPath,
        Claim::Complete,
        Claim::MycWheel,
        Claim::MycCycle,
        Claim::MycPath,
        Claim::MycComplementCycle,
        Claim::MycComplementPath,
        Claim::ClassWheel,
        Claim::ClassCycle,
        Claim::ClassPath,
        Claim::ClassComplementCycle,
        Claim::ClassComplementPath,
        Claim::ClassComplete,
        Claim::ClassMultipartite,
        Claim::IteratedMycielskian,
        Claim::Converse,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Wheel => "wheel",
            Claim::Cycle => "cycle",
            Claim::Path => "path",
            Claim::ComplementCycle => "comp-cycle",
            Claim::ComplementPath => "comp-path",
            Claim::Complete => "complete",
            Claim::MycWheel => "myc-wheel",
            Claim::MycCycle => "myc-cycle",
            Claim::MycPath => "myc-path",
            Claim::MycComplementCycle => "myc-comp-cycle",
            Claim::MycComplementPath => "myc-comp-path",
            Claim::ClassWheel => "class-wheel",
            Claim::ClassCycle => "class-cycle",
            Claim::ClassPath => "class-path",
            Claim::ClassComplementCycle => "class-comp-cycle",
            Claim::ClassComplementPath => "class-comp-path",
            Claim::ClassComplete => "class-complete",
            Claim::ClassMultipartite => "class-multipartite",
            Claim::IteratedMycielskian => "iterated-myc",
            Claim::Converse => "converse",
        }
    }

    /// Smallest parameter the claim speaks about.
    pub fn min_param(self) -> usize {
        match self {
            Claim::Wheel | Claim::Cycle | Claim::MycWheel | Claim::MycCycle | Claim::ClassWheel => {
                3
            }
            Claim::ClassCycle | Claim::ClassComplete => 3,
            Claim::Path
            | Claim::MycPath
            | Claim::ClassPath
            | Claim::ClassMultipartite
            | Claim::Converse => 2,
            Claim::ComplementCycle | Claim::ComplementPath => 4,
            Claim::MycComplementCycle | Claim::MycComplementPath => 4,
            Claim::ClassComplementCycle | Claim::ClassComplementPath => 4,
            Claim::Complete => 2,
            Claim::IteratedMycielskian => 0,
        }
    }

    /// Default upper end of the audited range, keeping every instance at 15 vertices or fewer.
    pub fn default_max_param(self) -> usize {
        match self {
            Claim::Wheel | Claim::ClassWheel => 9,
            Claim::Complete | Claim::ClassComplete | Claim::ClassMultipartite => 8,
            Claim::MycWheel => 6,
            Claim::MycCycle
            | Claim::MycPath
            | Claim::MycComplementCycle
            | Claim::MycComplementPath => 7,
            Claim::IteratedMycielskian => 2,
            Claim::Converse => 5,
            _ => 12,
        }
    }

    pub fn is_class_claim(self) -> bool {
        matches!(
            self,
            Claim::ClassWheel
                | Claim::ClassCycle
                | Claim::ClassPath
                | Claim::ClassComplementCycle
                | Claim::ClassComplementPath
                | Claim::ClassComplete
                | Claim::ClassMultipartite
                | Claim::Converse
        )
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Claim, Error> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| invalid(format!("unknown claim {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PredictedClass {
    One,
    Two,
    Unspecified,
}

impl PredictedClass {
    pub fn as_class(self) -> Option<GraphClass> {
        match self {
            PredictedClass::One => Some(GraphClass::One),
            PredictedClass::Two => Some(GraphClass::Two),
            PredictedClass::Unspecified => None,
        }
    }
}

fn class_if(one: bool) -> PredictedClass {
    if one {
        PredictedClass::One
    } else {
        PredictedClass::Two
    }
}

/// A closed-form value (None when the formula does not cover `n`) and the stated class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaPrediction {
    pub family: &'static str,
    pub n: usize,
    pub chi_d_t: Option<usize>,
    pub class: PredictedClass,
    pub source: &'static str,
}

impl FormulaPrediction {
    pub fn is_applicable(&self) -> bool {
        self.chi_d_t.is_some()
    }
}

fn prediction(
    family: &'static str,
    n: usize,
    chi_d_t: Option<usize>,
    class: PredictedClass,
    source: &'static str,
) -> FormulaPrediction {
    FormulaPrediction {
        family,
        n,
        chi_d_t,
        class,
        source,
    }
}

/// W_n: 3 for even n, 4 for odd n; every wheel is in Class 1.
pub fn formula_wheel(n: usize) -> FormulaPrediction {
    if n < 3 {
        return prediction("wheel", n, None, PredictedClass::Unspecified, "chi(W_n)");
    }
    let value = if n.is_multiple_of(2) { 3 } else { 4 };
    prediction(
        "wheel",
        n,
        Some(value),
        PredictedClass::One,
        "chi(W_n); W_n in Class 1",
    )
}

/// C_n: 2 when n = 4; 4⌊n/6⌋ + r for r ∈ {0,1,2,4}; 4⌊n/6⌋ + r − 1 for r ∈ {3,5}.
/// Class 1 exactly when n ∉ {4,5} and n ≡ 4 (mod 6), as the statement reads.
pub fn formula_cycle(n: usize) -> FormulaPrediction {
    if n < 3 {
        return prediction("cycle", n, None, PredictedClass::Unspecified, "chi(C_n)");
    }
    let (q, r) = (n / 6, n % 6);
    let value = match r {
        _ if n == 4 => 2,
        0 | 1 | 2 | 4 => 4 * q + r,
        _ => 4 * q + r - 1,
    };
    let class = class_if(n != 4 && n != 5 && r == 4);
    prediction(
        "cycle",
        n,
        Some(value),
        class,
        "chi(C_n); class of C_n (statement)",
    )
}

/// P_n: 2⌈n/3⌉ − 1 when n ≡ 1 (mod 3), otherwise 2⌈n/3⌉. Class 2 exactly when n = 2 or 3 | n.
pub fn formula_path(n: usize) -> FormulaPrediction {
    if n < 2 {
        return prediction("path", n, None, PredictedClass::Unspecified, "chi(P_n)");
    }
    let ceil = n.div_ceil(3);
    let value = if n % 3 == 1 { 2 * ceil - 1 } else { 2 * ceil };
    let class = class_if(!(n == 2 || n.is_multiple_of(3)));
    prediction("path", n, Some(value), class, "chi(P_n); class of P_n")
}

/// Complement of C_n: 4 for n ∈ {4,5}, ⌈n/2⌉ for n ≥ 6. Class 2 exactly for n ∈ {4,5,6}.
pub fn formula_complement_cycle(n: usize) -> FormulaPrediction {
    if n < 4 {
        return prediction(
            "comp-cycle",
            n,
            None,
            PredictedClass::Unspecified,
            "chi(comp C_n)",
        );
    }
    let value = if n <= 5 { 4 } else { n.div_ceil(2) };
    let class = class_if(!(4..=6).contains(&n));
    prediction(
        "comp-cycle",
        n,
        Some(value),
        class,
        "chi(comp C_n); class of comp C_n",
    )
}

/// Complement of P_n: 3 for n = 4, ⌈n/2⌉ for n ≥ 5. Always Class 1.
pub fn formula_complement_path(n: usize) -> FormulaPrediction {
    if n < 4 {
        return prediction(
            "comp-path",
            n,
            None,
            PredictedClass::Unspecified,
            "chi(comp P_n)",
        );
    }
    let value = if n == 4 { 3 } else { n.div_ceil(2) };
    prediction(
        "comp-path",
        n,
        Some(value),
        PredictedClass::One,
        "chi(comp P_n); class of comp P_n",
    )
}

/// K_n: n, and Class 1 from order 3 on.
pub fn formula_complete(n: usize) -> FormulaPrediction {
    if n < 2 {
        return prediction("complete", n, None, PredictedClass::Unspecified, "chi(K_n)");
    }
    prediction(
        "complete",
        n,
        Some(n),
        class_if(n >= 3),
        "chi(K_n); K_n in Class 1 for n >= 3",
    )
}

/// M(W_n): 4 for even n, 5 for odd n.
pub fn formula_myc_wheel(n: usize) -> FormulaPrediction {
    let value = (n >= 3).then(|| if n.is_multiple_of(2) { 4 } else { 5 });
    prediction(
        "myc-wheel",
        n,
        value,
        PredictedClass::Unspecified,
        "chi(M(W_n))",
    )
}

/// M(C_n): n for n ∈ {4,5}; 4⌊n/6⌋ + r + 2 for r ∈ {0,1,2}; 4⌊n/6⌋ + r + 1 for r ∈ {3,4,5}.
pub fn formula_myc_cycle(n: usize) -> FormulaPrediction {
    let value = (n >= 3).then(|| {
        let (q, r) = (n / 6, n % 6);
        match r {
            _ if n == 4 || n == 5 => n,
            0..=2 => 4 * q + r + 2,
            _ => 4 * q + r + 1,
        }
    });
    prediction(
        "myc-cycle",
        n,
        value,
        PredictedClass::Unspecified,
        "chi(M(C_n))",
    )
}

/// M(complement of C_n): 6 for n ∈ {4,5}, 5 for n = 6, ⌈n/2⌉ + 1 for n ≥ 7.
pub fn formula_myc_complement_cycle(n: usize) -> FormulaPrediction {
    let value = match n {
        4 | 5 => Some(6),
        6 => Some(5),
        _ if n >= 7 => Some(n.div_ceil(2) + 1),
        _ => None,
    };
    prediction(
        "myc-comp-cycle",
        n,
        value,
        PredictedClass::Unspecified,
        "chi(M(comp C_n))",
    )
}

/// M(P_n): 4 for n = 2; 2⌈n/3⌉ for n ≡ 1; 2⌈n/3⌉ + 2 for n ≡ 0; 2⌈n/3⌉ + 1 for n ≡ 2, n ≠ 2.
pub fn formula_myc_path(n: usize) -> FormulaPrediction {
    let value = (n >= 2).then(|| {
        let ceil = n.div_ceil(3);
        match n % 3 {
            _ if n == 2 => 4,
            1 => 2 * ceil,
            0 => 2 * ceil + 2,
            _ => 2 * ceil + 1,
        }
    });
    prediction(
        "myc-path",
        n,
        value,
        PredictedClass::Unspecified,
        "chi(M(P_n))",
    )
}

/// M(complement of P_n): 4 for n = 4, ⌈n/2⌉ + 1 for n ≥ 5.
pub fn formula_myc_complement_path(n: usize) -> FormulaPrediction {
    let value = match n {
        4 => Some(4),
        _ if n >= 5 => Some(n.div_ceil(2) + 1),
        _ => None,
    };
    prediction(
        "myc-comp-path",
        n,
        value,
        PredictedClass::Unspecified,
        "chi(M(comp P_n))",
    )
}

/// M^t(K_3): 3 + t, and Class 1 throughout.
pub fn formula_iterated_mycielskian(t: usize) -> FormulaPrediction {
    prediction(
        "iterated-myc",
        t,
        Some(3 + t),
        PredictedClass::One,
        "chi(M^t(K_3)) = 3 + t",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(p: FormulaPrediction) -> Option<usize> {
        p.chi_d_t
    }

    #[test]
    fn wheel_cases() {
        assert_eq!(v(formula_wheel(4)), Some(3));
        assert_eq!(v(formula_wheel(5)), Some(4));
        assert_eq!(v(formula_wheel(3)), Some(4));
        assert_eq!(v(formula_wheel(2)), None);
        assert_eq!(formula_wheel(7).class, PredictedClass::One);
    }

    #[test]
    fn cycle_cases() {
        assert_eq!(v(formula_cycle(4)), Some(2));
        assert_eq!(v(formula_cycle(6)), Some(4));
        assert_eq!(v(formula_cycle(10)), Some(8));
        // r = 3 branch: 4·0 + 3 − 1
        assert_eq!(v(formula_cycle(3)), Some(2));
        assert_eq!(v(formula_cycle(11)), Some(8));
        assert_eq!(formula_cycle(10).class, PredictedClass::One);
        assert_eq!(formula_cycle(4).class, PredictedClass::Two);
        assert_eq!(formula_cycle(5).class, PredictedClass::Two);
    }

    #[test]
    fn path_cases() {
        assert_eq!(v(formula_path(2)), Some(2));
        assert_eq!(v(formula_path(4)), Some(3));
        assert_eq!(v(formula_path(7)), Some(5));
        assert_eq!(v(formula_path(1)), None);
        assert_eq!(formula_path(9).class, PredictedClass::Two);
        assert_eq!(formula_path(8).class, PredictedClass::One);
    }

    #[test]
    fn complement_cases() {
        assert_eq!(v(formula_complement_cycle(5)), Some(4));
        assert_eq!(v(formula_complement_cycle(7)), Some(4));
        assert_eq!(v(formula_complement_cycle(3)), None);
        assert_eq!(v(formula_complement_path(4)), Some(3));
        assert_eq!(v(formula_complement_path(9)), Some(5));
        assert_eq!(formula_complement_cycle(6).class, PredictedClass::Two);
        assert_eq!(formula_complement_cycle(7).class, PredictedClass::One);
    }

    #[test]
    fn mycielskian_cases() {
        assert_eq!(v(formula_myc_path(2)), Some(4));
        assert_eq!(v(formula_myc_path(3)), Some(4));
        assert_eq!(v(formula_myc_path(5)), Some(5));
        assert_eq!(v(formula_myc_cycle(6)), Some(6));
        assert_eq!(v(formula_myc_cycle(5)), Some(5));
        assert_eq!(v(formula_myc_cycle(9)), Some(8));
        assert_eq!(v(formula_myc_complement_cycle(6)), Some(5));
        assert_eq!(v(formula_myc_complement_cycle(3)), None);
        assert_eq!(v(formula_myc_complement_path(4)), Some(4));
        assert_eq!(v(formula_myc_complement_path(3)), None);
        assert_eq!(v(formula_myc_wheel(4)), Some(4));
        assert_eq!(v(formula_iterated_mycielskian(2)), Some(5));
    }

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
        assert!("nope".parse::<Claim>().is_err());
    }
}
