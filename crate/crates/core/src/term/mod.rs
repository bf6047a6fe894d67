//! A small term language for magma identities.
//!
//! Terms use explicit infix products: `.` for the first operation and `*`
//! for the second. `.` binds tighter than `*` and both associate to the
//! left. Variables are `x y z w u v`, pointed constants are `e f`, and
//! integer literals name carrier elements directly.
//!
//! ```
//! use wardforge::term::parse_identity;
//! let ward = parse_identity("(x.z).(y.z) = x.y").unwrap();
//! assert_eq!(ward.to_string(), "(x.z).(y.z) = x.y");
//! ```

mod catalog;
mod eval;
mod parse;

use std::fmt;

pub use catalog::{catalog, catalog_names, CATALOG};
pub use eval::{eval_term, holds_universally, Assignment, CheckResult, EvalError, Interpretation};
pub use parse::{parse_identity, parse_term, ParseError, ParseErrorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    W,
    U,
    V,
}

impl Var {
    /// Canonical variable order; witnesses are reported lexicographically
    /// in this order.
    pub const ALL: [Var; 6] = [Var::X, Var::Y, Var::Z, Var::W, Var::U, Var::V];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_char(c: char) -> Option<Var> {
        Some(match c {
            'x' => Var::X,
            'y' => Var::Y,
            'z' => Var::Z,
            'w' => Var::W,
            'u' => Var::U,
            'v' => Var::V,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        b"xyzwuv"[self.index()] as char
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Const {
    E,
    F,
}

impl Const {
    pub fn from_char(c: char) -> Option<Const> {
        match c {
            'e' => Some(Const::E),
            'f' => Some(Const::F),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Const::E => 'e',
            Const::F => 'f',
        }
    }
}

/// The two binary operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    /// `.`, the first operation.
    Dot,
    /// `*`, the second operation.
    Star,
}

impl Op {
    fn symbol(self) -> char {
        match self {
            Op::Dot => '.',
            Op::Star => '*',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    Const(Const),
    Lit(usize),
    App(Op, Box<Term>, Box<Term>),
}

impl Term {
    pub fn app(op: Op, left: Term, right: Term) -> Term {
        Term::App(op, Box::new(left), Box::new(right))
    }

    pub fn dot(left: Term, right: Term) -> Term {
        Term::app(Op::Dot, left, right)
    }

    pub fn star(left: Term, right: Term) -> Term {
        Term::app(Op::Star, left, right)
    }

    fn visit(&self, f: &mut impl FnMut(&Term)) {
        f(self);
        if let Term::App(_, l, r) = self {
            l.visit(f);
            r.visit(f);
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut seen = [false; 6];
        self.visit(&mut |t| {
            if let Term::Var(v) = t {
                seen[v.index()] = true;
            }
        });
        Var::ALL.into_iter().filter(|v| seen[v.index()]).collect()
    }

    pub fn uses(&self, op: Op) -> bool {
        let mut found = false;
        self.visit(&mut |t| found |= matches!(t, Term::App(o, ..) if *o == op));
        found
    }

    pub fn uses_const(&self, c: Const) -> bool {
        let mut found = false;
        self.visit(&mut |t| found |= *t == Term::Const(c));
        found
    }

    pub fn max_literal(&self) -> Option<usize> {
        let mut max = None;
        self.visit(&mut |t| {
            if let Term::Lit(k) = t {
                max = max.max(Some(*k));
            }
        });
        max
    }

    /// Applies `f` to every literal.
    pub fn map_literals(&self, f: &mut impl FnMut(usize) -> usize) -> Term {
        match self {
            Term::Lit(k) => Term::Lit(f(*k)),
            Term::App(op, l, r) => Term::app(*op, l.map_literals(f), r.map_literals(f)),
            other => other.clone(),
        }
    }
}

/// Canonical form: every compound operand is parenthesized, atoms print
/// bare.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{}", v.as_char()),
            Term::Const(c) => write!(f, "{}", c.as_char()),
            Term::Lit(k) => write!(f, "{k}"),
            Term::App(op, l, r) => {
                write_operand(f, l)?;
                write!(f, "{}", op.symbol())?;
                write_operand(f, r)
            }
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    match t {
        Term::App(..) => write!(f, "({t})"),
        _ => write!(f, "{t}"),
    }
}

/// An equation between two terms, universally quantified over its
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Identity { lhs, rhs }
    }

    /// Variables of both sides in canonical order.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars = self.lhs.variables();
        vars.extend(self.rhs.variables());
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn uses(&self, op: Op) -> bool {
        self.lhs.uses(op) || self.rhs.uses(op)
    }

    pub fn uses_const(&self, c: Const) -> bool {
        self.lhs.uses_const(c) || self.rhs.uses_const(c)
    }

    pub fn max_literal(&self) -> Option<usize> {
        self.lhs.max_literal().max(self.rhs.max_literal())
    }

    pub fn map_literals(&self, mut f: impl FnMut(usize) -> usize) -> Identity {
        Identity::new(self.lhs.map_literals(&mut f), self.rhs.map_literals(&mut f))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printer_parenthesizes_compound_operands() {
        let x = || Term::Var(Var::X);
        let y = || Term::Var(Var::Y);
        let z = || Term::Var(Var::Z);
        let t = Term::dot(Term::dot(x(), z()), Term::dot(y(), z()));
        assert_eq!(t.to_string(), "(x.z).(y.z)");
        let s = Term::star(Term::dot(x(), y()), z());
        assert_eq!(s.to_string(), "(x.y)*z");
        assert_eq!(Term::dot(Term::Const(Const::E), Term::Lit(3)).to_string(), "e.3");
    }

    #[test]
    fn variable_sets() {
        let id = Identity::new(
            Term::dot(Term::Var(Var::W), Term::Var(Var::X)),
            Term::Var(Var::Z),
        );
        assert_eq!(id.variables(), vec![Var::X, Var::Z, Var::W]);
    }
}
