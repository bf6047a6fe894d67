use std::fmt;

use thiserror::Error;

use super::{Const, Identity, Op, Term, Var};
use crate::table::Magma;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable {} is not bound", .0.as_char())]
    UnboundVariable(Var),
    #[error("'*' is used but no second operation was supplied")]
    MissingOperation,
    #[error("constant {} is used but not bound", .0.as_char())]
    UnboundConstant(Const),
    #[error("literal {value} is out of range for order {order}")]
    LiteralOutOfRange { value: usize, order: usize },
    #[error("element {value} bound to {name} is out of range for order {order}")]
    BindingOutOfRange {
        name: char,
        value: usize,
        order: usize,
    },
    #[error("the two operations have different orders ({left} and {right})")]
    OrderMismatch { left: usize, right: usize },
}

/// The operations and constants a term is evaluated against.
#[derive(Debug, Clone, Copy)]
pub struct Interpretation<'a> {
    pub dot: &'a Magma,
    pub star: Option<&'a Magma>,
    pub e: Option<usize>,
    pub f: Option<usize>,
}

impl<'a> Interpretation<'a> {
    pub fn new(dot: &'a Magma) -> Self {
        Interpretation {
            dot,
            star: None,
            e: None,
            f: None,
        }
    }

    pub fn with_star(mut self, star: &'a Magma) -> Self {
        self.star = Some(star);
        self
    }

    pub fn with_e(mut self, e: usize) -> Self {
        self.e = Some(e);
        self
    }

    pub fn with_f(mut self, f: usize) -> Self {
        self.f = Some(f);
        self
    }

    pub fn order(&self) -> usize {
        self.dot.order()
    }

    fn constant(&self, c: Const) -> Option<usize> {
        match c {
            Const::E => self.e,
            Const::F => self.f,
        }
    }

    fn validate_bindings(&self) -> Result<(), EvalError> {
        let order = self.order();
        if let Some(star) = self.star {
            if star.order() != order {
                return Err(EvalError::OrderMismatch {
                    left: order,
                    right: star.order(),
                });
            }
        }
        for (name, value) in [('e', self.e), ('f', self.f)] {
            if let Some(value) = value.filter(|&v| v >= order) {
                return Err(EvalError::BindingOutOfRange { name, value, order });
            }
        }
        Ok(())
    }

    /// Checks that every symbol of `t` can be resolved (variables aside).
    fn validate_term(&self, t: &Term) -> Result<(), EvalError> {
        if t.uses(Op::Star) && self.star.is_none() {
            return Err(EvalError::MissingOperation);
        }
        for c in [Const::E, Const::F] {
            if t.uses_const(c) && self.constant(c).is_none() {
                return Err(EvalError::UnboundConstant(c));
            }
        }
        if let Some(value) = t.max_literal().filter(|&k| k >= self.order()) {
            return Err(EvalError::LiteralOutOfRange {
                value,
                order: self.order(),
            });
        }
        Ok(())
    }

    /// Evaluation after validation; cannot fail.
    fn eval_fast(&self, t: &Term, values: &[usize; 6]) -> usize {
        match t {
            Term::Var(v) => values[v.index()],
            Term::Const(c) => self.constant(*c).unwrap_or_default(),
            Term::Lit(k) => *k,
            Term::App(op, l, r) => {
                let a = self.eval_fast(l, values);
                let b = self.eval_fast(r, values);
                match op {
                    Op::Dot => self.dot.op(a, b),
                    Op::Star => self.star.map_or(0, |s| s.op(a, b)),
                }
            }
        }
    }
}

/// A partial map from variables to elements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Assignment([Option<usize>; 6]);

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, usize)>) -> Self {
        let mut a = Assignment::new();
        for (v, x) in pairs {
            a.set(v, x);
        }
        a
    }

    pub fn get(&self, v: Var) -> Option<usize> {
        self.0[v.index()]
    }

    pub fn set(&mut self, v: Var, x: usize) {
        self.0[v.index()] = Some(x);
    }

    /// Bound variables with their values, in canonical order.
    pub fn bindings(&self) -> Vec<(Var, usize)> {
        Var::ALL
            .into_iter()
            .filter_map(|v| self.get(v).map(|x| (v, x)))
            .collect()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .bindings()
            .into_iter()
            .map(|(v, x)| format!("{}={x}", v.as_char()))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Evaluates `t` bottom-up; `.` uses the first operation and `*` the second.
pub fn eval_term(
    t: &Term,
    assignment: &Assignment,
    interp: &Interpretation<'_>,
) -> Result<usize, EvalError> {
    interp.validate_bindings()?;
    interp.validate_term(t)?;
    let mut values = [0; 6];
    for v in t.variables() {
        let x = assignment.get(v).ok_or(EvalError::UnboundVariable(v))?;
        if x >= interp.order() {
            return Err(EvalError::BindingOutOfRange {
                name: v.as_char(),
                value: x,
                order: interp.order(),
            });
        }
        values[v.index()] = x;
    }
    Ok(interp.eval_fast(t, &values))
}

/// Result of a universal check; the witness is the first falsifying
/// assignment in lexicographic order of the identity's variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub witness: Option<Assignment>,
}

impl CheckResult {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn holds_universally(
    id: &Identity,
    interp: &Interpretation<'_>,
) -> Result<CheckResult, EvalError> {
    interp.validate_bindings()?;
    interp.validate_term(&id.lhs)?;
    interp.validate_term(&id.rhs)?;
    let vars = id.variables();
    let n = interp.order();
    let mut digits = vec![0usize; vars.len()];
    let mut values = [0usize; 6];
    loop {
        for (v, &d) in vars.iter().zip(&digits) {
            values[v.index()] = d;
        }
        if interp.eval_fast(&id.lhs, &values) != interp.eval_fast(&id.rhs, &values) {
            let witness = Assignment::from_pairs(vars.iter().copied().zip(digits));
            return Ok(CheckResult {
                witness: Some(witness),
            });
        }
        // odometer, last variable fastest
        let mut i = vars.len();
        loop {
            if i == 0 {
                return Ok(CheckResult { witness: None });
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < n {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse::{parse_identity, parse_term};
    use super::*;

    fn w3() -> Magma {
        Magma::from_rows(&[[0, 2, 1], [1, 0, 2], [2, 1, 0]]).unwrap()
    }

    fn z3() -> Magma {
        Magma::from_rows(&[[0, 1, 2], [1, 2, 0], [2, 0, 1]]).unwrap()
    }

    #[test]
    fn evaluates_examples() {
        let w3 = w3();
        let interp = Interpretation::new(&w3);
        let a = Assignment::from_pairs([(Var::X, 1), (Var::Y, 0), (Var::Z, 2)]);
        assert_eq!(eval_term(&parse_term("(x.z).(y.z)").unwrap(), &a, &interp), Ok(1));
        assert_eq!(eval_term(&parse_term("x.y").unwrap(), &a, &interp), Ok(1));
        let a = Assignment::from_pairs([(Var::X, 2)]);
        let interp = interp.with_e(0);
        assert_eq!(eval_term(&parse_term("e.x").unwrap(), &a, &interp), Ok(1));
    }

    #[test]
    fn evaluation_errors() {
        let w3 = w3();
        let interp = Interpretation::new(&w3);
        let empty = Assignment::new();
        assert_eq!(
            eval_term(&parse_term("x.y").unwrap(), &empty, &interp),
            Err(EvalError::UnboundVariable(Var::X))
        );
        assert_eq!(
            eval_term(&parse_term("0*1").unwrap(), &empty, &interp),
            Err(EvalError::MissingOperation)
        );
        assert_eq!(
            eval_term(&parse_term("e.1").unwrap(), &empty, &interp),
            Err(EvalError::UnboundConstant(Const::E))
        );
        assert_eq!(
            eval_term(&parse_term("0.3").unwrap(), &empty, &interp),
            Err(EvalError::LiteralOutOfRange { value: 3, order: 3 })
        );
        let z2 = Magma::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert!(matches!(
            eval_term(&parse_term("0*1").unwrap(), &empty, &interp.with_star(&z2)),
            Err(EvalError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn universal_checks() {
        let ward = parse_identity("(x.z).(y.z) = x.y").unwrap();
        let w3 = w3();
        assert!(holds_universally(&ward, &Interpretation::new(&w3))
            .unwrap()
            .holds());
        let z3 = z3();
        let r = holds_universally(&ward, &Interpretation::new(&z3)).unwrap();
        let witness = r.witness.unwrap();
        assert_eq!(witness.bindings(), vec![(Var::X, 0), (Var::Y, 0), (Var::Z, 1)]);

        let dw3 = Magma::from_rows(&[[0, 2, 1], [2, 1, 0], [1, 0, 2]]).unwrap();
        let eq2 = parse_identity("((e.e).(x.z)).((e.y).z) = x.y").unwrap();
        assert!(holds_universally(&eq2, &Interpretation::new(&dw3).with_e(0))
            .unwrap()
            .holds());
    }

    #[test]
    fn closed_identities() {
        let z3 = z3();
        let id = parse_identity("1.1 = 2").unwrap();
        assert!(holds_universally(&id, &Interpretation::new(&z3)).unwrap().holds());
        let id = parse_identity("1.1 = 0").unwrap();
        let r = holds_universally(&id, &Interpretation::new(&z3)).unwrap();
        assert_eq!(r.witness, Some(Assignment::new()));
    }
}
