//! Named graph families and the `name:param[,param]` spec grammar.
//!
//! Prefix operators `comp:` and `myc:` compose right to left, so `myc:comp:cycle:6`
//! is the Mycielskian of the complement of C_6.

use std::fmt;
use std::str::FromStr;

use super::{complement, complete, complete_multipartite, cycle, mycielskian, path, wheel, Graph};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    Path(usize),
    Cycle(usize),
    Wheel(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    ComplementCycle(usize),
    ComplementPath(usize),
}

impl GraphFamily {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphFamily::Path(n) => path(*n),
            GraphFamily::Cycle(n) => cycle(*n),
            GraphFamily::Wheel(n) => wheel(*n),
            GraphFamily::Complete(n) => complete(*n),
            GraphFamily::CompleteMultipartite(parts) => complete_multipartite(parts),
            GraphFamily::ComplementCycle(n) => cycle(*n).map(|g| complement(&g)),
            GraphFamily::ComplementPath(n) => path(*n).map(|g| complement(&g)),
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Path(n) => write!(f, "path:{n}"),
            GraphFamily::Cycle(n) => write!(f, "cycle:{n}"),
            GraphFamily::Wheel(n) => write!(f, "wheel:{n}"),
            GraphFamily::Complete(n) => write!(f, "complete:{n}"),
            GraphFamily::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            GraphFamily::ComplementCycle(n) => write!(f, "comp:cycle:{n}"),
            GraphFamily::ComplementPath(n) => write!(f, "comp:path:{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphOp {
    Complement,
    Mycielskian,
}

/// A family member with prefix operators, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub ops: Vec<GraphOp>,
    pub base: GraphFamily,
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        let base = self.base.build()?;
        Ok(self.ops.iter().rev().fold(base, |g, op| match op {
            GraphOp::Complement => complement(&g),
            GraphOp::Mycielskian => mycielskian(&g),
        }))
    }
}

impl From<GraphFamily> for FamilySpec {
    fn from(base: GraphFamily) -> Self {
        FamilySpec {
            ops: Vec::new(),
            base,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in &self.ops {
            f.write_str(match op {
                GraphOp::Complement => "comp:",
                GraphOp::Mycielskian => "myc:",
            })?;
        }
        write!(f, "{}", self.base)
    }
}

fn parse_param(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| {
        invalid(format!(
            "expected a non-negative integer parameter, found {s:?}"
        ))
    })
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let tokens: Vec<&str> = s.trim().split(':').collect();
        let mut ops = Vec::new();
        let mut idx = 0;
        while idx < tokens.len() {
            match tokens[idx] {
                "comp" | "complement" => ops.push(GraphOp::Complement),
                "myc" | "mycielskian" => ops.push(GraphOp::Mycielskian),
                _ => break,
            }
            idx += 1;
        }
        let rest = &tokens[idx..];
        let [name, params] = rest else {
            return Err(invalid(format!("family spec {s:?} must end in name:param")));
        };
        let single = || parse_param(params);
        let base = match *name {
            "path" => GraphFamily::Path(single()?),
            "cycle" => GraphFamily::Cycle(single()?),
            "wheel" => GraphFamily::Wheel(single()?),
            "complete" => GraphFamily::Complete(single()?),
            "multipartite" | "kpartite" => GraphFamily::CompleteMultipartite(
                params.split(',').map(parse_param).collect::<Result<_>>()?,
            ),
            other => return Err(invalid(format!("unknown graph family {other:?}"))),
        };
        // normalise `comp:cycle:n` / `comp:path:n` onto the named complement families
        let (ops, base) = match (ops.last(), base) {
            (Some(GraphOp::Complement), GraphFamily::Cycle(n)) => (
                ops[..ops.len() - 1].to_vec(),
                GraphFamily::ComplementCycle(n),
            ),
            (Some(GraphOp::Complement), GraphFamily::Path(n)) => (
                ops[..ops.len() - 1].to_vec(),
                GraphFamily::ComplementPath(n),
            ),
            (_, base) => (ops, base),
        };
        let spec = FamilySpec { ops, base };
        spec.base.build()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn parses_grammar() {
        let s: FamilySpec = "cycle:7".parse().unwrap();
        assert_eq!(s.base, GraphFamily::Cycle(7));
        let s: FamilySpec = "myc:path:3".parse().unwrap();
        assert_eq!(s.build().unwrap().order(), 7);
        let s: FamilySpec = "comp:cycle:6".parse().unwrap();
        assert_eq!(s.base, GraphFamily::ComplementCycle(6));
        let s: FamilySpec = "myc:myc:complete:3".parse().unwrap();
        assert_eq!(s.build().unwrap().order(), 15);
        let s: FamilySpec = "multipartite:2,3".parse().unwrap();
        assert_eq!(s.build().unwrap().size(), 6);
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "cycle:7",
            "myc:comp:cycle:6",
            "comp:myc:path:3",
            "multipartite:1,2,2",
            "myc:myc:complete:3",
        ] {
            let s: FamilySpec = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
    }

    #[test]
    fn composes_right_to_left() {
        let a: FamilySpec = "comp:myc:path:2".parse().unwrap();
        let b = complement(&mycielskian(&path(2).unwrap()));
        assert_eq!(a.build().unwrap(), b);
        assert!(is_isomorphic(&a.build().unwrap(), &cycle(5).unwrap()));
    }

    #[test]
    fn rejects_bad_specs() {
        for bad in [
            "",
            "cycle",
            "cycle:2",
            "myc:",
            "wheel:x",
            "foo:3",
            "path:0",
            "multipartite:2,0",
            "cycle:3:4",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad:?}");
        }
    }
}
