use std::fmt::Write as _;

use super::ReductionError;
use crate::solvers::Lit;

/// A CNF whose clauses have one to three literals.
///
/// [`MonotoneCnf::new`] also demands that each clause is all-positive or
/// all-negative; [`MonotoneCnf::with_mixed`] skips that check, which the
/// generator tolerates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneCnf {
    vars: usize,
    clauses: Vec<Vec<Lit>>,
}

impl MonotoneCnf {
    pub fn new(vars: usize, clauses: Vec<Vec<Lit>>) -> Result<Self, ReductionError> {
        let f = Self::with_mixed(vars, clauses)?;
        if let Some(j) = f.clauses.iter().position(|c| c.iter().any(|l| l.positive != c[0].positive)) {
            return Err(ReductionError::MixedClause { clause: j });
        }
        Ok(f)
    }

    pub fn with_mixed(vars: usize, clauses: Vec<Vec<Lit>>) -> Result<Self, ReductionError> {
        for (j, c) in clauses.iter().enumerate() {
            if c.is_empty() {
                return Err(ReductionError::EmptyClause { clause: j });
            }
            if c.len() > 3 {
                return Err(ReductionError::ClauseTooLong { clause: j, len: c.len() });
            }
            if let Some(l) = c.iter().find(|l| l.var >= vars) {
                return Err(ReductionError::VariableOutOfRange { clause: j, var: l.var, vars });
            }
        }
        Ok(MonotoneCnf { vars, clauses })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn is_monotone(&self) -> bool {
        self.clauses.iter().all(|c| c.iter().all(|l| l.positive == c[0].positive))
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.vars && self.clauses.iter().all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    /// Reads `p cnf <vars> <clauses>` followed by zero-terminated clauses of
    /// signed 1-based literals. Lines starting with `c` are comments.
    pub fn parse_dimacs(text: &str, allow_mixed: bool) -> Result<Self, ReductionError> {
        let bad = |m: String| ReductionError::Parameters(m);
        let mut header = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .skip(1)
                    .map(|t| t.parse().map_err(|_| bad(format!("bad header `{line}`"))))
                    .collect::<Result<_, _>>()?;
                if nums.len() != 2 {
                    return Err(bad(format!("bad header `{line}`")));
                }
                header = Some((nums[0], nums[1]));
                continue;
            }
            let (vars, _) = header.ok_or_else(|| bad("missing `p cnf` header".into()))?;
            for tok in line.split_whitespace() {
                let x: i64 = tok.parse().map_err(|_| bad(format!("bad literal `{tok}`")))?;
                if x == 0 {
                    clauses.push(std::mem::take(&mut current));
                    continue;
                }
                let var = x.unsigned_abs() as usize - 1;
                if var >= vars {
                    return Err(ReductionError::VariableOutOfRange { clause: clauses.len(), var, vars });
                }
                current.push(Lit { var, positive: x > 0 });
            }
        }
        let (vars, count) = header.ok_or_else(|| bad("missing `p cnf` header".into()))?;
        if !current.is_empty() {
            return Err(bad("last clause is not terminated by 0".into()));
        }
        if clauses.len() != count {
            return Err(bad(format!("header declares {count} clauses, found {}", clauses.len())));
        }
        if allow_mixed {
            Self::with_mixed(vars, clauses)
        } else {
            Self::new(vars, clauses)
        }
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let x = l.var as i64 + 1;
                let _ = write!(s, "{} ", if l.positive { x } else { -x });
            }
            s.push_str("0\n");
        }
        s
    }
}
