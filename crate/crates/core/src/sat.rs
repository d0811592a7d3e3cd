//! Exact-width CNF formulas and threshold satisfiability: an assignment
//! passes at threshold `r` when every clause has at least `r` true literals.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("clause {clause} has {got} literals, expected {expected}")]
    NonUniformClause { clause: usize, expected: usize, got: usize },
    #[error("clause {clause} repeats variable {var}")]
    RepeatedVariable { clause: usize, var: usize },
    #[error("variable {var} outside 1..={n}")]
    VariableOutOfRange { var: usize, n: usize },
    #[error("threshold {r} exceeds clause width {k}")]
    InvalidThreshold { r: usize, k: usize },
    #[error("assignment has {got} values, formula has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{0} variables is too many for exhaustive search (limit {MAX_BRUTE_VARS})")]
    TooManyVariables(usize),
    #[error("clause width {0} is below 3")]
    WidthTooSmall(usize),
}

pub const MAX_BRUTE_VARS: usize = 24;

/// A literal over variable `var` (1-based, as in DIMACS).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Literal {
        Literal { var, positive: false }
    }

    pub fn from_dimacs(x: i64) -> Literal {
        Literal {
            var: x.unsigned_abs() as usize,
            positive: x > 0,
        }
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    pub fn negated(self) -> Literal {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    pub fn eval(self, a: &Assignment) -> bool {
        a.values[self.var - 1] == self.positive
    }
}

/// CNF where every clause has exactly `k` literals over `k` distinct
/// variables. Literals inside a clause are kept sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CnfFormula {
    num_vars: usize,
    k: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, k: usize, clauses: Vec<Vec<Literal>>) -> Result<CnfFormula, SatError> {
        let mut clauses = clauses;
        for (ci, clause) in clauses.iter_mut().enumerate() {
            if clause.len() != k {
                return Err(SatError::NonUniformClause {
                    clause: ci,
                    expected: k,
                    got: clause.len(),
                });
            }
            clause.sort_by_key(|l| l.var);
            for l in clause.iter() {
                if l.var == 0 || l.var > num_vars {
                    return Err(SatError::VariableOutOfRange { var: l.var, n: num_vars });
                }
            }
            if let Some(w) = clause.windows(2).find(|w| w[0].var == w[1].var) {
                return Err(SatError::RepeatedVariable { clause: ci, var: w[0].var });
            }
        }
        Ok(CnfFormula { num_vars, k, clauses })
    }

    /// Builds from DIMACS-style signed integers, one slice per clause.
    pub fn from_ints(num_vars: usize, k: usize, clauses: &[&[i64]]) -> Result<CnfFormula, SatError> {
        let clauses = clauses
            .iter()
            .map(|c| c.iter().map(|&x| Literal::from_dimacs(x)).collect())
            .collect();
        CnfFormula::new(num_vars, k, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn width(&self) -> usize {
        self.k
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Assignment {
        Assignment { values }
    }

    pub fn all(n: usize, value: bool) -> Assignment {
        Assignment { values: vec![value; n] }
    }
}

/// Parses DIMACS CNF. The clause width is inferred from the first clause and
/// must be uniform; `%` ends the clause section (SATLIB style).
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, SatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(perr(line_no, "second problem line"));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(perr(line_no, "expected `p cnf <vars> <clauses>`"));
            }
            let num = |s: &str| s.parse::<usize>().map_err(|_| perr(line_no, "bad number in header"));
            header = Some((num(parts[2])?, num(parts[3])?));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(perr(line_no, "clause before problem line"));
        };
        for tok in line.split_whitespace() {
            let x: i64 = tok
                .parse()
                .map_err(|_| perr(line_no, &format!("bad literal {tok:?}")))?;
            if x == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                let lit = Literal::from_dimacs(x);
                if lit.var > n {
                    return Err(perr(line_no, &format!("variable {} exceeds declared {n}", lit.var)));
                }
                current.push(lit);
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(perr(last_line.max(1), "missing problem line"));
    };
    if !current.is_empty() {
        return Err(perr(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(perr(
            last_line.max(1),
            &format!("header declares {m} clauses, found {}", clauses.len()),
        ));
    }
    let k = clauses.first().map_or(0, |c| c.len());
    CnfFormula::new(n, k, clauses)
}

fn perr(line: usize, msg: &str) -> SatError {
    SatError::Parse {
        line,
        msg: msg.to_string(),
    }
}

pub fn emit_dimacs(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars, phi.clauses.len());
    for clause in &phi.clauses {
        for l in clause {
            write!(out, "{} ", l.to_dimacs()).unwrap();
        }
        out.push_str("0\n");
    }
    out
}

/// Every clause has at least `r` true literals under `a`.
pub fn check_threshold(phi: &CnfFormula, a: &Assignment, r: usize) -> Result<bool, SatError> {
    if r > phi.k {
        return Err(SatError::InvalidThreshold { r, k: phi.k });
    }
    if a.values.len() != phi.num_vars {
        return Err(SatError::LengthMismatch {
            expected: phi.num_vars,
            got: a.values.len(),
        });
    }
    Ok(phi
        .clauses
        .iter()
        .all(|c| c.iter().filter(|l| l.eval(a)).count() >= r))
}

/// Least assignment passing threshold `r`, reading `(x1, ..., xn)` as a
/// binary word with `x1` most significant and `false < true`.
pub fn brute_sat(phi: &CnfFormula, r: usize) -> Result<Option<Assignment>, SatError> {
    let n = phi.num_vars;
    if n > MAX_BRUTE_VARS {
        return Err(SatError::TooManyVariables(n));
    }
    if r > phi.k {
        return Err(SatError::InvalidThreshold { r, k: phi.k });
    }
    // per clause: (mask of positive vars, mask of negative vars) in bit order x1 = bit n-1
    let bit = |var: usize| 1u32 << (n - var);
    let masks: Vec<(u32, u32)> = phi
        .clauses
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(p, q), l| {
                if l.positive {
                    (p | bit(l.var), q)
                } else {
                    (p, q | bit(l.var))
                }
            })
        })
        .collect();
    for word in 0u32..(1u32 << n) {
        let ok = masks
            .iter()
            .all(|&(p, q)| ((word & p).count_ones() + (!word & q).count_ones()) as usize >= r);
        if ok {
            let values = (1..=n).map(|var| word & bit(var) != 0).collect();
            return Ok(Some(Assignment { values }));
        }
    }
    Ok(None)
}

/// Widens every clause by one fresh positive variable: clause `i` gains
/// `Y_i` with index `n + i`. A formula with `>= s-2` true literals per
/// clause exists iff the lifted one has `>= s-1`.
pub fn lift(phi: &CnfFormula) -> Result<CnfFormula, SatError> {
    if phi.k < 3 {
        return Err(SatError::WidthTooSmall(phi.k));
    }
    let n = phi.num_vars;
    let clauses = phi
        .clauses
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut c = c.clone();
            c.push(Literal::pos(n + i + 1));
            c
        })
        .collect();
    CnfFormula::new(n + phi.clauses.len(), phi.k + 1, clauses)
}

/// Appends one clause of `k` fresh positive variables, so that some clause
/// shares no variable with any given clause.
pub fn add_dummy_clause(phi: &CnfFormula) -> CnfFormula {
    let n = phi.num_vars;
    let mut clauses = phi.clauses.clone();
    clauses.push((1..=phi.k).map(|j| Literal::pos(n + j)).collect());
    CnfFormula {
        num_vars: n + phi.k,
        k: phi.k,
        clauses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_basic() {
        let phi = parse_dimacs("c demo\np cnf 3 1\n1 -2 3 0\n").unwrap();
        assert_eq!((phi.num_vars(), phi.num_clauses(), phi.width()), (3, 1, 3));
        assert_eq!(phi.clauses()[0][1], Literal::neg(2));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 1 2 0\n"),
            Err(SatError::RepeatedVariable { clause: 0, var: 1 })
        );
        assert!(matches!(
            parse_dimacs("p cnf 3 2\n1 2 3 0\n1 2 0\n"),
            Err(SatError::NonUniformClause { clause: 1, .. })
        ));
        assert!(matches!(parse_dimacs("p cnf 3 1\n1 x 3 0\n"), Err(SatError::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("1 2 3 0\n"), Err(SatError::Parse { line: 1, .. })));
        assert!(matches!(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), Err(SatError::Parse { .. })));
        assert!(matches!(parse_dimacs("p cnf 3 1\n1 2 4 0\n"), Err(SatError::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("p cnf 3 1\n1 2 3\n"), Err(SatError::Parse { .. })));
    }

    #[test]
    fn emit_normalizes() {
        let text = "c x\np cnf 4 2\n3 -1 2\n 0 4 2 -3 0\n%\n0\n";
        let phi = parse_dimacs(text).unwrap();
        assert_eq!(emit_dimacs(&phi), "p cnf 4 2\n-1 2 3 0\n2 -3 4 0\n");
        assert_eq!(parse_dimacs(&emit_dimacs(&phi)).unwrap(), phi);
    }

    #[test]
    fn thresholds() {
        let phi = CnfFormula::from_ints(4, 4, &[&[1, 2, 3, 4]]).unwrap();
        assert!(check_threshold(&phi, &Assignment::all(4, false), 0).unwrap());
        assert!(check_threshold(&phi, &Assignment::all(4, true), 2).unwrap());
        let one = Assignment::new(vec![false, true, false, false]);
        assert!(!check_threshold(&phi, &one, 2).unwrap());
        assert!(check_threshold(&phi, &one, 1).unwrap());
        assert_eq!(
            check_threshold(&phi, &Assignment::all(3, true), 1),
            Err(SatError::LengthMismatch { expected: 4, got: 3 })
        );
        assert_eq!(
            check_threshold(&phi, &one, 5),
            Err(SatError::InvalidThreshold { r: 5, k: 4 })
        );
    }

    #[test]
    fn brute_sat_examples() {
        let phi = CnfFormula::from_ints(3, 3, &[&[1, 2, 3], &[-1, -2, -3]]).unwrap();
        assert_eq!(brute_sat(&phi, 3).unwrap(), None);
        // least word with a true literal in each clause: x1..x3 = 001
        assert_eq!(
            brute_sat(&phi, 1).unwrap(),
            Some(Assignment::new(vec![false, false, true]))
        );
        let wide = CnfFormula::new(25, 3, vec![]).unwrap();
        assert_eq!(brute_sat(&wide, 1), Err(SatError::TooManyVariables(25)));
    }

    #[test]
    fn lift_examples() {
        let phi = CnfFormula::from_ints(3, 3, &[&[1, 2, 3]]).unwrap();
        let psi = lift(&phi).unwrap();
        assert_eq!((psi.num_vars(), psi.num_clauses(), psi.width()), (4, 1, 4));
        assert_eq!(psi.clauses()[0], vec![Literal::pos(1), Literal::pos(2), Literal::pos(3), Literal::pos(4)]);
        let empty = CnfFormula::new(5, 3, vec![]).unwrap();
        let lifted = lift(&empty).unwrap();
        assert_eq!((lifted.num_vars(), lifted.num_clauses()), (5, 0));
        let narrow = CnfFormula::from_ints(2, 2, &[&[1, 2]]).unwrap();
        assert_eq!(lift(&narrow), Err(SatError::WidthTooSmall(2)));
    }

    #[test]
    fn dummy_clause_uses_fresh_variables() {
        let phi = CnfFormula::from_ints(4, 4, &[&[1, 2, 3, 4]]).unwrap();
        let d = add_dummy_clause(&phi);
        assert_eq!((d.num_vars(), d.num_clauses()), (8, 2));
        assert!(d.clauses()[1].iter().all(|l| l.var > 4 && l.positive));
    }

    fn arb_formula() -> impl Strategy<Value = CnfFormula> {
        (3usize..=8, 3usize..=3).prop_flat_map(|(n, k)| {
            let clause = proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), k)
                .prop_flat_map(move |vars| {
                    proptest::collection::vec(any::<bool>(), k).prop_map(move |signs| {
                        vars.iter().zip(signs).map(|(&var, positive)| Literal { var, positive }).collect::<Vec<_>>()
                    })
                });
            proptest::collection::vec(clause, 0..6)
                .prop_map(move |cl| CnfFormula::new(n, k, cl).unwrap())
        })
    }

    proptest! {
        #[test]
        fn threshold_is_monotone(phi in arb_formula(), bits in any::<u32>(), r in 0usize..=3) {
            let a = Assignment::new((0..phi.num_vars()).map(|i| bits >> i & 1 == 1).collect());
            if check_threshold(&phi, &a, r).unwrap() {
                for lower in 0..=r {
                    prop_assert!(check_threshold(&phi, &a, lower).unwrap());
                }
            }
        }

        #[test]
        fn dimacs_round_trip(phi in arb_formula()) {
            prop_assume!(phi.num_clauses() > 0);
            prop_assert_eq!(parse_dimacs(&emit_dimacs(&phi)).unwrap(), phi);
        }

        #[test]
        fn brute_sat_matches_truth_table(phi in arb_formula(), r in 0usize..=3) {
            // independent scan in natural counting order, then pick the least word
            let n = phi.num_vars();
            let mut best: Option<Vec<bool>> = None;
            for m in 0u32..1 << n {
                let values: Vec<bool> = (0..n).map(|i| m >> i & 1 == 1).collect();
                let ok = phi.clauses().iter().all(|c| {
                    c.iter().filter(|l| values[l.var - 1] == l.positive).count() >= r
                });
                if ok && best.as_ref().map_or(true, |b| values < *b) {
                    best = Some(values);
                }
            }
            prop_assert_eq!(brute_sat(&phi, r).unwrap().map(|a| a.values), best);
        }

        #[test]
        fn lift_preserves_shape(phi in arb_formula()) {
            let psi = lift(&phi).unwrap();
            prop_assert_eq!(psi.num_clauses(), phi.num_clauses());
            prop_assert_eq!(psi.num_vars(), phi.num_vars() + phi.num_clauses());
            for (c, d) in phi.clauses().iter().zip(psi.clauses()) {
                prop_assert_eq!(&d[..c.len()], &c[..]);
            }
        }
    }
}
