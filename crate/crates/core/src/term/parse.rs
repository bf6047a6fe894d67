use std::fmt;

use super::{Const, Identity, Op, Term, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnknownSymbol(char),
    UnexpectedToken { found: String, expected: &'static str },
    UnexpectedEnd { expected: &'static str },
    MissingEquals,
    ExtraEquals,
    TrailingInput(String),
    LiteralTooLarge,
}

/// A syntax error at a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: ", self.position + 1)?;
        match &self.kind {
            ParseErrorKind::UnknownSymbol(c) => write!(f, "unknown symbol {c:?}"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found {found:?}")
            }
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "expected {expected}, found end of input")
            }
            ParseErrorKind::MissingEquals => write!(f, "missing '='"),
            ParseErrorKind::ExtraEquals => write!(f, "more than one '='"),
            ParseErrorKind::TrailingInput(t) => write!(f, "unexpected trailing {t:?}"),
            ParseErrorKind::LiteralTooLarge => write!(f, "literal too large"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var(Var),
    Const(Const),
    Lit(usize),
    Op(Op),
    LParen,
    RParen,
    Equals,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Var(v) => v.as_char().to_string(),
            Token::Const(c) => c.as_char().to_string(),
            Token::Lit(k) => k.to_string(),
            Token::Op(Op::Dot) => ".".into(),
            Token::Op(Op::Star) => "*".into(),
            Token::LParen => "(".into(),
            Token::RParen => ")".into(),
            Token::Equals => "=".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let token = match c {
            c if c.is_whitespace() => continue,
            '.' => Token::Op(Op::Dot),
            '*' => Token::Op(Op::Star),
            '(' => Token::LParen,
            ')' => Token::RParen,
            '=' => Token::Equals,
            '0'..='9' => {
                let mut value: usize = c.to_digit(10).unwrap() as usize;
                while let Some(&(_, d)) = chars.peek() {
                    let Some(digit) = d.to_digit(10) else { break };
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(digit as usize))
                        .ok_or(ParseError {
                            kind: ParseErrorKind::LiteralTooLarge,
                            position: pos,
                        })?;
                    chars.next();
                }
                Token::Lit(value)
            }
            c => {
                if let Some(v) = Var::from_char(c) {
                    Token::Var(v)
                } else if let Some(k) = Const::from_char(c) {
                    Token::Const(k)
                } else {
                    return Err(ParseError {
                        kind: ParseErrorKind::UnknownSymbol(c),
                        position: pos,
                    });
                }
            }
        };
        tokens.push((token, pos));
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    next: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.next).map(|(t, _)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.next).map_or(self.end, |&(_, p)| p)
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            position: self.position(),
        }
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        let mut left = self.product()?;
        while self.peek() == Some(&Token::Op(Op::Star)) {
            self.next += 1;
            let right = self.product()?;
            left = Term::star(left, right);
        }
        Ok(left)
    }

    fn product(&mut self) -> Result<Term, ParseError> {
        let mut left = self.atom()?;
        while self.peek() == Some(&Token::Op(Op::Dot)) {
            self.next += 1;
            let right = self.atom()?;
            left = Term::dot(left, right);
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        const EXPECTED: &str = "a variable, constant, literal or '('";
        let Some(token) = self.peek().cloned() else {
            return Err(self.error(ParseErrorKind::UnexpectedEnd { expected: EXPECTED }));
        };
        let term = match token {
            Token::Var(v) => Term::Var(v),
            Token::Const(c) => Term::Const(c),
            Token::Lit(k) => Term::Lit(k),
            Token::LParen => {
                self.next += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Token::RParen) => {}
                    Some(t) => {
                        let found = t.describe();
                        return Err(self.error(ParseErrorKind::UnexpectedToken {
                            found,
                            expected: "')'",
                        }));
                    }
                    None => {
                        return Err(self.error(ParseErrorKind::UnexpectedEnd { expected: "')'" }))
                    }
                }
                inner
            }
            other => {
                return Err(self.error(ParseErrorKind::UnexpectedToken {
                    found: other.describe(),
                    expected: EXPECTED,
                }))
            }
        };
        self.next += 1;
        Ok(term)
    }
}

fn parser(text: &str) -> Result<Parser, ParseError> {
    Ok(Parser {
        tokens: tokenize(text)?,
        next: 0,
        end: text.len(),
    })
}

/// Parses a single term with nothing after it.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = parser(text)?;
    let term = p.expr()?;
    match p.peek() {
        None => Ok(term),
        Some(t) => {
            let found = t.describe();
            Err(p.error(ParseErrorKind::TrailingInput(found)))
        }
    }
}

/// Parses `term = term`.
pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    let mut p = parser(text)?;
    let lhs = p.expr()?;
    match p.peek() {
        Some(Token::Equals) => p.next += 1,
        None => return Err(p.error(ParseErrorKind::MissingEquals)),
        Some(t) => {
            let found = t.describe();
            return Err(p.error(ParseErrorKind::UnexpectedToken {
                found,
                expected: "an operator or '='",
            }));
        }
    }
    let rhs = p.expr()?;
    match p.peek() {
        None => Ok(Identity::new(lhs, rhs)),
        Some(Token::Equals) => Err(p.error(ParseErrorKind::ExtraEquals)),
        Some(t) => {
            let found = t.describe();
            Err(p.error(ParseErrorKind::TrailingInput(found)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(c: char) -> Term {
        Term::Var(Var::from_char(c).unwrap())
    }

    #[test]
    fn parses_ward_identity() {
        let id = parse_identity("(x.z).(y.z) = x.y").unwrap();
        let expected = Identity::new(
            Term::dot(Term::dot(var('x'), var('z')), Term::dot(var('y'), var('z'))),
            Term::dot(var('x'), var('y')),
        );
        assert_eq!(id, expected);
    }

    #[test]
    fn parses_interchange_identity() {
        let id = parse_identity("(x.y)*(z.w) = (x*z).(y*w)").unwrap();
        let expected = Identity::new(
            Term::star(Term::dot(var('x'), var('y')), Term::dot(var('z'), var('w'))),
            Term::dot(Term::star(var('x'), var('z')), Term::star(var('y'), var('w'))),
        );
        assert_eq!(id, expected);
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse_term("x.y*z.w").unwrap(),
            Term::star(Term::dot(var('x'), var('y')), Term::dot(var('z'), var('w')))
        );
        assert_eq!(
            parse_term("x.y.z").unwrap(),
            Term::dot(Term::dot(var('x'), var('y')), var('z'))
        );
        assert_eq!(
            parse_term("x*y*z").unwrap(),
            Term::star(Term::star(var('x'), var('y')), var('z'))
        );
        assert_eq!(
            parse_term("e.12").unwrap(),
            Term::dot(Term::Const(Const::E), Term::Lit(12))
        );
    }

    #[test]
    fn trailing_paren_is_positioned() {
        let err = parse_identity("x.y = y.x (").unwrap_err();
        assert_eq!(err.position, 10);
        assert_eq!(err.kind, ParseErrorKind::TrailingInput("(".into()));
    }

    #[test]
    fn error_kinds() {
        assert_eq!(
            parse_identity("x.y").unwrap_err(),
            ParseError {
                kind: ParseErrorKind::MissingEquals,
                position: 3
            }
        );
        assert_eq!(
            parse_identity("x.a = x").unwrap_err(),
            ParseError {
                kind: ParseErrorKind::UnknownSymbol('a'),
                position: 2
            }
        );
        assert_eq!(
            parse_identity("x = y = z").unwrap_err().kind,
            ParseErrorKind::ExtraEquals
        );
        assert!(matches!(
            parse_identity("(x.y = x").unwrap_err().kind,
            ParseErrorKind::UnexpectedToken { .. }
        ));
    }
}
