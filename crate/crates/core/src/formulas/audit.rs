//! Mechanical comparison of every closed-form claim against exact computation.

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::*;
use crate::classifier::{classify, ClassifyConfig, GraphClass};
use crate::error::{invalid, Error, Result};
use crate::graph::{
    complement, complete, complete_multipartite, cycle, iterated_mycielskian, mycielskian, path,
    wheel, Graph,
};
use crate::solver::{chi_d_t, SearchConfig};

/// A value or class, as predicted or as computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Observed {
    Value(usize),
    Class(GraphClass),
}

impl std::fmt::Display for Observed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Observed::Value(v) => write!(f, "{v}"),
            Observed::Class(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Agree,
    Disagree,
    Inapplicable,
    Inconclusive,
}

/// One audited (claim, parameter) instance. Serialized as one JSON line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub n: usize,
    pub predicted: Option<Observed>,
    pub computed: Option<Observed>,
    pub status: Status,
    pub notes: String,
}

#[derive(Debug, Clone)]
pub struct AuditConfig {
    /// Per-instance search settings.
    pub search: SearchConfig,
    pub max_colorings: Option<u64>,
    /// Instances with more vertices are reported Inconclusive without being solved.
    pub max_order: usize,
    /// Instances evaluated concurrently.
    pub workers: usize,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            search: SearchConfig::default(),
            max_colorings: Some(10_000_000),
            max_order: 15,
            workers: 1,
        }
    }
}

struct Instance {
    graph: Result<Graph>,
    predicted: Option<Observed>,
    notes: Vec<String>,
}

fn value_instance(graph: Result<Graph>, p: FormulaPrediction) -> Instance {
    Instance {
        graph,
        predicted: p.chi_d_t.map(Observed::Value),
        notes: Vec::new(),
    }
}

fn class_instance(graph: Result<Graph>, p: FormulaPrediction) -> Instance {
    // class statements only cover the range where the value formula applies
    let predicted = p.chi_d_t.and(p.class.as_class()).map(Observed::Class);
    Instance {
        graph,
        predicted,
        notes: Vec::new(),
    }
}

/// Integer partitions of `n` into at least two parts, parts non-increasing.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn instances(claim: Claim, n: usize) -> Vec<Instance> {
    let myc = |g: Result<Graph>| g.map(|g| mycielskian(&g));
    let comp = |g: Result<Graph>| g.map(|g| complement(&g));
    let one = match claim {
        Claim::Wheel => value_instance(wheel(n), formula_wheel(n)),
        Claim::Cycle => value_instance(cycle(n), formula_cycle(n)),
        Claim::Path => value_instance(path(n), formula_path(n)),
        Claim::ComplementCycle => value_instance(comp(cycle(n)), formula_complement_cycle(n)),
        Claim::ComplementPath => value_instance(comp(path(n)), formula_complement_path(n)),
        Claim::Complete => value_instance(complete(n), formula_complete(n)),
        Claim::MycWheel => value_instance(myc(wheel(n)), formula_myc_wheel(n)),
        Claim::MycCycle => value_instance(myc(cycle(n)), formula_myc_cycle(n)),
        Claim::MycPath => value_instance(myc(path(n)), formula_myc_path(n)),
        Claim::MycComplementCycle => {
            value_instance(myc(comp(cycle(n))), formula_myc_complement_cycle(n))
        }
        Claim::MycComplementPath => {
            value_instance(myc(comp(path(n))), formula_myc_complement_path(n))
        }
        Claim::ClassWheel => class_instance(wheel(n), formula_wheel(n)),
        Claim::ClassCycle => {
            let mut inst = class_instance(cycle(n), formula_cycle(n));
            match n {
                4 => inst
                    .notes
                    .push("proof text asserts One (C_4 = K_{2,2})".into()),
                5 => inst
                    .notes
                    .push("proof text asserts One via ({v1,v3},{v2},{v4},{v5})".into()),
                _ => {}
            }
            inst
        }
        Claim::ClassPath => class_instance(path(n), formula_path(n)),
        Claim::ClassComplementCycle => class_instance(comp(cycle(n)), formula_complement_cycle(n)),
        Claim::ClassComplementPath => class_instance(comp(path(n)), formula_complement_path(n)),
        Claim::ClassComplete => class_instance(complete(n), formula_complete(n)),
        Claim::ClassMultipartite => {
            return partitions(n)
                .into_iter()
                .map(|parts| {
                    let labels: Vec<String> = parts.iter().map(usize::to_string).collect();
                    let predicted = if parts.len() == 2 {
                        GraphClass::Two
                    } else {
                        GraphClass::One
                    };
                    Instance {
                        graph: complete_multipartite(&parts),
                        predicted: Some(Observed::Class(predicted)),
                        notes: vec![format!("parts={}", labels.join(","))],
                    }
                })
                .collect();
        }
        Claim::IteratedMycielskian => value_instance(
            complete(3).map(|k3| iterated_mycielskian(&k3, n)),
            formula_iterated_mycielskian(n),
        ),
        Claim::Converse => {
            return match n {
                2 => vec![Instance {
                    graph: complete(2),
                    predicted: Some(Observed::Class(GraphClass::One)),
                    notes: vec!["asserted: K_2 in Class 1".into()],
                }],
                5 => vec![Instance {
                    graph: path(2).map(|k2| mycielskian(&k2)),
                    predicted: Some(Observed::Class(GraphClass::Two)),
                    notes: vec!["asserted: M(K_2) = C_5 not in Class 1".into()],
                }],
                _ => Vec::new(),
            };
        }
    };
    vec![one]
}

fn compute(claim: Claim, g: &Graph, cfg: &AuditConfig) -> Result<Observed> {
    if claim.is_class_claim() {
        let ccfg = ClassifyConfig {
            search: cfg.search.clone(),
            max_colorings: cfg.max_colorings,
        };
        Ok(Observed::Class(classify(g, &ccfg)?.class))
    } else {
        Ok(Observed::Value(chi_d_t(g, &cfg.search)?.value))
    }
}

fn report(claim: Claim, n: usize, inst: Instance, cfg: &AuditConfig) -> ClaimReport {
    let mut notes = inst.notes;
    let mut computed = None;
    let mut failure = None;
    match &inst.graph {
        Err(e) => failure = Some(e.to_string()),
        Ok(g) if g.order() > cfg.max_order => {
            failure = Some(format!(
                "order {} exceeds the cap of {}",
                g.order(),
                cfg.max_order
            ));
        }
        Ok(g) => match compute(claim, g, cfg) {
            Ok(obs) => computed = Some(obs),
            Err(Error::BudgetExceeded { upper_bound }) => {
                failure = Some(format!("search budget exceeded, upper bound {upper_bound}"))
            }
            Err(e) => failure = Some(e.to_string()),
        },
    }
    let status = match (inst.predicted, computed) {
        (None, _) => Status::Inapplicable,
        (Some(_), None) => Status::Inconclusive,
        (Some(p), Some(c)) if p == c => Status::Agree,
        (Some(_), Some(_)) => Status::Disagree,
    };
    if let Some(reason) = failure {
        if status != Status::Inapplicable || inst.graph.is_ok() {
            notes.push(reason);
        }
    }
    ClaimReport {
        claim_id: claim.id().to_string(),
        n,
        predicted: inst.predicted,
        computed,
        status,
        notes: notes.join("; "),
    }
}

/// All reports for one claim at parameter `n`. Usually one; the multipartite claim yields one
/// per part-size multiset and the converse claim only speaks about n = 2 and n = 5.
pub fn evaluate(claim: Claim, n: usize, cfg: &AuditConfig) -> Vec<ClaimReport> {
    instances(claim, n)
        .into_iter()
        .map(|inst| report(claim, n, inst, cfg))
        .collect()
}

fn in_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    if workers <= 1 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| invalid(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(job))
}

/// Audit `claims` over `from..=to` (each end defaulting to the claim's own range).
/// Output order is claim order, then parameter order, whatever the worker count.
pub fn audit(
    claims: &[Claim],
    from: Option<usize>,
    to: Option<usize>,
    cfg: &AuditConfig,
) -> Result<Vec<ClaimReport>> {
    let jobs: Vec<(Claim, usize)> = claims
        .iter()
        .flat_map(|&c| {
            let lo = from.unwrap_or(c.min_param());
            let hi = to.unwrap_or(c.default_max_param());
            (lo..=hi).map(move |n| (c, n))
        })
        .collect();
    in_pool(cfg.workers, || {
        jobs.par_iter()
            .map(|&(c, n)| evaluate(c, n, cfg))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    })
}

/// Base families that have a value formula, a Mycielskian formula and a class statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFamily {
    Path,
    Cycle,
    Wheel,
    ComplementCycle,
    ComplementPath,
}

impl TableFamily {
    fn claims(self) -> [Claim; 3] {
        match self {
            TableFamily::Path => [Claim::Path, Claim::MycPath, Claim::ClassPath],
            TableFamily::Cycle => [Claim::Cycle, Claim::MycCycle, Claim::ClassCycle],
            TableFamily::Wheel => [Claim::Wheel, Claim::MycWheel, Claim::ClassWheel],
            TableFamily::ComplementCycle => [
                Claim::ComplementCycle,
                Claim::MycComplementCycle,
                Claim::ClassComplementCycle,
            ],
            TableFamily::ComplementPath => [
                Claim::ComplementPath,
                Claim::MycComplementPath,
                Claim::ClassComplementPath,
            ],
        }
    }

    pub fn min_param(self) -> usize {
        self.claims()[0].min_param()
    }
}

impl FromStr for TableFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<TableFamily> {
        match s {
            "path" => Ok(TableFamily::Path),
            "cycle" => Ok(TableFamily::Cycle),
            "wheel" => Ok(TableFamily::Wheel),
            "comp-cycle" => Ok(TableFamily::ComplementCycle),
            "comp-path" => Ok(TableFamily::ComplementPath),
            _ => Err(invalid(format!("no value table for {s:?}"))),
        }
    }
}

/// χ_d^t(G), χ_d^t(M(G)) and the class of G at one parameter, predicted and computed.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub chi_d_t: ClaimReport,
    pub chi_d_t_mycielskian: ClaimReport,
    pub class: ClaimReport,
}

impl TableRow {
    pub fn reports(&self) -> [&ClaimReport; 3] {
        [&self.chi_d_t, &self.chi_d_t_mycielskian, &self.class]
    }
}

pub fn table(
    family: TableFamily,
    from: usize,
    to: usize,
    cfg: &AuditConfig,
) -> Result<Vec<TableRow>> {
    let [value, myc, class] = family.claims();
    let params: Vec<usize> = (from..=to).collect();
    let one = |claim: Claim, n: usize| {
        evaluate(claim, n, cfg)
            .pop()
            .expect("single instance claim")
    };
    in_pool(cfg.workers, || {
        params
            .par_iter()
            .map(|&n| TableRow {
                n,
                chi_d_t: one(value, n),
                chi_d_t_mycielskian: one(myc, n),
                class: one(class, n),
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn status(claim: Claim, n: usize) -> Status {
        evaluate(claim, n, &AuditConfig::default())[0].status
    }

    #[test]
    fn cycle_formula_rows() {
        assert_eq!(status(Claim::Cycle, 6), Status::Agree);
        let r = &evaluate(Claim::Cycle, 3, &AuditConfig::default())[0];
        assert_eq!(
            (r.predicted, r.computed),
            (Some(Observed::Value(2)), Some(Observed::Value(3)))
        );
        assert_eq!(r.status, Status::Disagree);
        assert_eq!(status(Claim::Cycle, 2), Status::Inapplicable);
    }

    #[test]
    fn class_cycle_five_carries_both_readings() {
        let r = &evaluate(Claim::ClassCycle, 5, &AuditConfig::default())[0];
        assert_eq!(r.predicted, Some(Observed::Class(GraphClass::Two)));
        assert_eq!(r.computed, Some(Observed::Class(GraphClass::One)));
        assert_eq!(r.status, Status::Disagree);
        assert!(r.notes.contains("proof text asserts One"));
    }

    #[test]
    fn order_cap_is_inconclusive() {
        let r = &evaluate(Claim::MycCycle, 8, &AuditConfig::default())[0];
        assert_eq!(r.status, Status::Inconclusive);
        assert!(r.notes.contains("exceeds the cap"));
    }

    #[test]
    fn partitions_of_small_orders() {
        assert_eq!(
            partitions(4),
            vec![vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(partitions(1), Vec::<Vec<usize>>::new());
    }

    #[test]
    fn multipartite_claim_holds() {
        for n in 2..=6 {
            for r in evaluate(Claim::ClassMultipartite, n, &AuditConfig::default()) {
                assert_eq!(r.status, Status::Agree, "{r:?}");
            }
        }
    }

    #[test]
    fn converse_rows() {
        let cfg = AuditConfig::default();
        assert!(evaluate(Claim::Converse, 3, &cfg).is_empty());
        let k2 = &evaluate(Claim::Converse, 2, &cfg)[0];
        assert_eq!(k2.computed, Some(Observed::Class(GraphClass::Two)));
        let c5 = &evaluate(Claim::Converse, 5, &cfg)[0];
        assert_eq!(c5.computed, Some(Observed::Class(GraphClass::One)));
    }

    #[test]
    fn audit_is_ordered_and_reproducible() {
        let cfg = AuditConfig {
            workers: 3,
            ..Default::default()
        };
        let a = audit(&[Claim::Path, Claim::Wheel], None, Some(8), &cfg).unwrap();
        let b = audit(
            &[Claim::Path, Claim::Wheel],
            None,
            Some(8),
            &AuditConfig::default(),
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.first().map(|r| (r.claim_id.as_str(), r.n)),
            Some(("path", 2))
        );
        assert_eq!(
            a.last().map(|r| (r.claim_id.as_str(), r.n)),
            Some(("wheel", 8))
        );
    }

    #[test]
    fn json_line_schema() {
        let r = &evaluate(Claim::Cycle, 3, &AuditConfig::default())[0];
        let line = serde_json::to_string(r).unwrap();
        assert_eq!(
            line,
            r#"{"claim_id":"cycle","n":3,"predicted":2,"computed":3,"status":"Disagree","notes":""}"#
        );
    }
}
