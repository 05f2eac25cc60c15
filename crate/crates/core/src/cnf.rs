//! CNF formulas under not-all-equal semantics.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    /// 0-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// DIMACS integer: `x_{var+1}` or its negation.
    pub fn from_dimacs(lit: i64) -> Option<Self> {
        if lit == 0 {
            return None;
        }
        Some(Literal {
            var: lit.unsigned_abs() as usize - 1,
            positive: lit > 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn value(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }

    pub fn negated(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var + 1)
        } else {
            write!(f, "!x{}", self.var + 1)
        }
    }
}

/// What normalization did to the raw clause list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NormalizationNote {
    /// Clause (0-based raw index) contained a variable and its negation.
    DroppedTautology(usize),
    /// A literal repeated inside one clause was merged.
    MergedDuplicateLiteral { clause: usize, literal: i64 },
}

/// A normalized formula: every clause has at least two literals, over distinct
/// variables, in the order they were first written.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    /// Normalize raw clauses: merge repeated literals, delete clauses holding
    /// both `x` and `!x` (every assignment makes one of them true and one
    /// false). Empty and unit clauses are rejected: neither can ever be
    /// not-all-equal satisfied, and a unit clause has no clause cycle.
    pub fn normalize(num_vars: usize, raw: Vec<Vec<Literal>>) -> Result<(Self, Vec<NormalizationNote>)> {
        let mut notes = Vec::new();
        let mut clauses = Vec::with_capacity(raw.len());
        'clauses: for (ci, clause) in raw.into_iter().enumerate() {
            let mut kept: Vec<Literal> = Vec::with_capacity(clause.len());
            for lit in clause {
                if lit.var >= num_vars {
                    return Err(Error::precondition(format!(
                        "clause {} uses x{} but the formula has {num_vars} variables",
                        ci + 1,
                        lit.var + 1
                    )));
                }
                if kept.contains(&lit.negated()) {
                    notes.push(NormalizationNote::DroppedTautology(ci));
                    continue 'clauses;
                }
                if kept.contains(&lit) {
                    notes.push(NormalizationNote::MergedDuplicateLiteral {
                        clause: ci,
                        literal: lit.to_dimacs(),
                    });
                    continue;
                }
                kept.push(lit);
            }
            match kept.len() {
                0 => return Err(Error::precondition(format!("clause {} is empty", ci + 1))),
                1 => {
                    return Err(Error::precondition(format!(
                        "clause {} is a unit clause ({}); unit clauses are never NAE-satisfiable and are not accepted",
                        ci + 1,
                        kept[0]
                    )))
                }
                _ => clauses.push(kept),
            }
        }
        Ok((CnfFormula { num_vars, clauses }, notes))
    }

    /// Normalize, discarding the notes.
    pub fn new(num_vars: usize, raw: Vec<Vec<Literal>>) -> Result<Self> {
        Self::normalize(num_vars, raw).map(|(f, _)| f)
    }

    pub fn from_dimacs(num_vars: usize, clauses: &[Vec<i64>]) -> Result<Self> {
        let raw = clauses
            .iter()
            .map(|c| c.iter().filter_map(|&l| Literal::from_dimacs(l)).collect())
            .collect();
        Self::new(num_vars, raw)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn total_literals(&self) -> usize {
        self.clauses.iter().map(Vec::len).sum()
    }

    pub fn dimacs_clauses(&self) -> Vec<Vec<i64>> {
        self.clauses
            .iter()
            .map(|c| c.iter().map(|l| l.to_dimacs()).collect())
            .collect()
    }

    /// Index of the first clause whose literals all take the same value.
    pub fn first_all_equal_clause(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|c| {
            let first = c[0].value(assignment);
            c.iter().all(|l| l.value(assignment) == first)
        })
    }

    pub fn nae_satisfied(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars && self.first_all_equal_clause(assignment).is_none()
    }

    /// Same formula with every literal negated.
    pub fn flipped(&self) -> Self {
        CnfFormula {
            num_vars: self.num_vars,
            clauses: self
                .clauses
                .iter()
                .map(|c| c.iter().map(|l| l.negated()).collect())
                .collect(),
        }
    }

    /// Occurrences `(clause, position)` of `literal`, in clause order.
    pub fn occurrences(&self, literal: Literal) -> Vec<(usize, usize)> {
        self.clauses
            .iter()
            .enumerate()
            .filter_map(|(ci, c)| c.iter().position(|&l| l == literal).map(|k| (ci, k)))
            .collect()
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| format!("({})", c.iter().map(Literal::to_string).collect::<Vec<_>>().join(" | ")))
            .collect();
        write!(f, "{}", parts.join(" & "))
    }
}
