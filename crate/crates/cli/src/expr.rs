//! Expression language for rational functions in matrix entries and chart
//! parameters.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ['^' ['-'] integer]
//! atom   := integer | decimal | var | '(' expr ')'
//! var    := name '(' indices ')' | name digits
//! ```
//!
//! Variables are `u(i,j)`, `g(i,j)`, `a(k)`, `b(k)` and `t(i)`. The compact
//! forms `u12`, `g31`, `a5`, `t2` printed by the library are accepted too.

use std::fmt;

use coordring::arith::{BigInt, BigRational, RatFunc, Var};

use crate::error::CliError;

/// Index bounds for the variables of a session with group `SL_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Universe {
    pub n: usize,
}

impl Universe {
    pub fn new(n: usize) -> Self {
        Universe { n }
    }

    /// Number of chart parameters, the length of the longest element.
    pub fn nu(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn check(&self, v: Var, text: &str) -> Result<(), CliError> {
        let idx: Vec<usize> = v.indices().iter().map(|&k| k as usize).collect();
        let n = self.n;
        let ok = match v.family() {
            'u' => idx[0] >= 1 && idx[0] < idx[1] && idx[1] <= n,
            'g' => (1..=n).contains(&idx[0]) && (1..=n).contains(&idx[1]),
            'a' | 'b' => (1..=self.nu()).contains(&idx[0]),
            't' => (1..n).contains(&idx[0]),
            _ => unreachable!(),
        };
        if ok {
            Ok(())
        } else {
            Err(CliError::IndexOutOfBounds {
                var: text.to_string(),
                n,
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Rational(BigRational),
    Var(Var),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

impl Expr {
    pub fn eval(&self) -> Result<RatFunc, CliError> {
        Ok(match self {
            Expr::Int(k) => RatFunc::rational(&BigRational::from_integer(k.clone())),
            Expr::Rational(r) => RatFunc::rational(r),
            Expr::Var(v) => RatFunc::var(*v),
            Expr::Neg(e) => -e.eval()?,
            Expr::Binary(op, l, r) => {
                let (l, r) = (l.eval()?, r.eval()?);
                match op {
                    BinOp::Add => &l + &r,
                    BinOp::Sub => &l - &r,
                    BinOp::Mul => &l * &r,
                    BinOp::Div => l.checked_div(&r)?,
                }
            }
            Expr::Pow(b, k) => b.eval()?.pow(*k)?,
        })
    }
}

impl fmt::Display for Expr {
    /// Fully parenthesized except for atoms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(k) => write!(f, "{k}"),
            Expr::Rational(r) => write!(f, "({r})"),
            Expr::Var(v) => write_var(f, *v),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
            Expr::Pow(b, k) => write!(f, "{b}^{k}"),
        }
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, v: Var) -> fmt::Result {
    let idx = v.indices();
    if idx.len() == 2 {
        write!(f, "{}({},{})", v.family(), idx[0], idx[1])
    } else {
        write!(f, "{}({})", v.family(), idx[0])
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    LParen,
    RParen,
    Comma,
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let take = |k: &mut usize, pred: &dyn Fn(char) -> bool| {
            let start = *k;
            while *k < chars.len() && pred(chars[*k].1) {
                *k += 1;
            }
            chars[start..*k].iter().map(|&(_, c)| c).collect::<String>()
        };
        let tok = match c {
            '0'..='9' | '.' => Tok::Num(take(&mut k, &|c| c.is_ascii_digit() || c == '.')),
            c if c.is_ascii_alphabetic() => Tok::Ident(take(&mut k, &|c| c.is_ascii_alphanumeric() || c == '_')),
            '(' | ')' | ',' | '+' | '-' | '*' | '/' | '^' => {
                k += 1;
                match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    _ => Tok::Op(c),
                }
            }
            _ => return Err(CliError::syntax(pos, format!("unexpected character {c:?}"))),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    k: usize,
    end: usize,
    universe: &'a Universe,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.k).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.k).map_or(self.end, |&(p, _)| p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.k).map(|(_, t)| t.clone());
        self.k += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), CliError> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(CliError::syntax(pos, format!("expected {what}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let op = if *c == '+' { BinOp::Add } else { BinOp::Sub };
            self.k += 1;
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.factor()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek() {
            let op = if *c == '*' { BinOp::Mul } else { BinOp::Div };
            self.k += 1;
            let rhs = self.factor()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.k += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.k += 1;
            let neg = matches!(self.peek(), Some(Tok::Op('-')));
            if neg {
                self.k += 1;
            }
            let pos = self.pos();
            let e = match self.bump() {
                Some(Tok::Num(s)) => s
                    .parse::<i32>()
                    .map_err(|_| CliError::syntax(pos, "exponent must be a small integer"))?,
                _ => return Err(CliError::syntax(pos, "expected integer exponent")),
            };
            if let Some(Tok::Op('^')) = self.peek() {
                return Err(CliError::syntax(self.pos(), "chained exponents need parentheses"));
            }
            return Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(s)) => number(&s).ok_or_else(|| CliError::syntax(pos, format!("bad number {s:?}"))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => self.var(pos, &name),
            Some(_) => Err(CliError::syntax(pos, "expected a number, variable or '('")),
            None => Err(CliError::syntax(pos, "unexpected end of input")),
        }
    }

    fn var(&mut self, pos: usize, name: &str) -> Result<Expr, CliError> {
        let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
        let (fam, digits) = name.split_at(split);
        let family = match fam {
            "u" | "g" | "a" | "b" | "t" => fam.chars().next().unwrap(),
            _ => return Err(CliError::UnknownVariable(name.to_string())),
        };
        let matrix = matches!(family, 'u' | 'g');
        let bad_index = || CliError::syntax(pos, format!("bad index in {name:?}"));
        let indices: Vec<u16> = if digits.is_empty() {
            self.expect(Tok::LParen, &format!("'(' after {name}"))?;
            let mut idx = Vec::new();
            loop {
                let p = self.pos();
                match self.bump() {
                    Some(Tok::Num(s)) => idx.push(s.parse::<u16>().map_err(|_| CliError::syntax(p, "bad index"))?),
                    _ => return Err(CliError::syntax(p, "expected index")),
                }
                match self.bump() {
                    Some(Tok::Comma) => continue,
                    Some(Tok::RParen) => break,
                    _ => return Err(CliError::syntax(self.pos().min(self.end), "expected ',' or ')'")),
                }
            }
            idx
        } else if !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(CliError::UnknownVariable(name.to_string()));
        } else if matrix {
            if digits.len() != 2 {
                return Err(bad_index());
            }
            digits.chars().map(|c| c.to_digit(10).unwrap() as u16).collect()
        } else {
            vec![digits.parse::<u16>().map_err(|_| bad_index())?]
        };
        let arity = if matrix { 2 } else { 1 };
        if indices.len() != arity {
            return Err(CliError::syntax(pos, format!("{family} takes {arity} index(es)")));
        }
        let v = if matrix {
            Var::entry(family, indices[0], indices[1])
        } else {
            Var::indexed(family, indices[0])
        };
        self.universe.check(v, name)?;
        Ok(Expr::Var(v))
    }
}

fn number(s: &str) -> Option<Expr> {
    match s.split_once('.') {
        None => s.parse::<BigInt>().ok().map(Expr::Int),
        Some((int, frac)) => {
            if int.is_empty() && frac.is_empty() || frac.contains('.') {
                return None;
            }
            let digits: BigInt = format!("{int}{frac}").parse().ok()?;
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            Some(Expr::Rational(BigRational::new(digits, scale)))
        }
    }
}

/// Parses `text` into an expression tree.
pub fn parse_ast(text: &str, universe: &Universe) -> Result<Expr, CliError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        k: 0,
        end: text.len(),
        universe,
    };
    let e = p.expr()?;
    if p.k < p.toks.len() {
        return Err(CliError::syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and evaluates `text` to a canonical rational function.
pub fn parse_expression(text: &str, universe: &Universe) -> Result<RatFunc, CliError> {
    parse_ast(text, universe)?.eval()
}

/// Splits a parameter list at top-level commas: `a(1), 2*u(1,2)`.
pub fn split_list(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl4() -> Universe {
        Universe::new(4)
    }

    fn u(i: u16, j: u16) -> RatFunc {
        RatFunc::var(Var::entry('u', i, j))
    }

    #[test]
    fn witness_expression() {
        let f = parse_expression("u(1,2) - (u(1,3)*u(3,4)-u(1,4))/(u(2,3)*u(3,4)-u(2,4))", &sl4()).unwrap();
        let expect = &u(1, 2) - &(&(&(&u(1, 3) * &u(3, 4)) - &u(1, 4)) / &(&(&u(2, 3) * &u(3, 4)) - &u(2, 4)));
        assert_eq!(f, expect);
    }

    #[test]
    fn precedence() {
        let a = |k| RatFunc::var(Var::indexed('a', k));
        let f = parse_expression("a(1)^2*a(2)", &sl4()).unwrap();
        assert_eq!(f, &(&a(1) * &a(1)) * &a(2));
        assert_eq!(parse_expression("-a1^2", &sl4()).unwrap(), -(&a(1) * &a(1)));
        assert_eq!(parse_expression("2-3-4", &sl4()).unwrap(), RatFunc::int(-5));
        assert_eq!(parse_expression("8/2/2", &sl4()).unwrap(), RatFunc::int(2));
        assert_eq!(parse_expression("1+2*3^2", &sl4()).unwrap(), RatFunc::int(19));
        assert_eq!(parse_expression("a1^-1", &sl4()).unwrap(), a(1).inv().unwrap());
        assert_eq!(parse_expression("0.25*4", &sl4()).unwrap(), RatFunc::one());
        assert_eq!(parse_expression("u13 - u(1,3)", &sl4()).unwrap(), RatFunc::zero());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_expression("1/0", &sl4()), Err(CliError::Core(_))));
        assert_eq!(
            parse_expression("u(1,2) +", &sl4()),
            Err(CliError::syntax(8, "unexpected end of input"))
        );
        assert!(matches!(
            parse_expression("1 $ 2", &sl4()),
            Err(CliError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_expression("x + 1", &sl4()),
            Err(CliError::UnknownVariable(_))
        ));
        assert!(matches!(
            parse_expression("u(1,5)", &sl4()),
            Err(CliError::IndexOutOfBounds { .. })
        ));
        assert!(matches!(
            parse_expression("u(2,1)", &sl4()),
            Err(CliError::IndexOutOfBounds { .. })
        ));
        assert!(matches!(
            parse_expression("a(7)", &sl4()),
            Err(CliError::IndexOutOfBounds { .. })
        ));
        assert!(matches!(
            parse_expression("t(4)", &sl4()),
            Err(CliError::IndexOutOfBounds { .. })
        ));
        assert!(matches!(
            parse_expression("a^2^3", &sl4()),
            Err(CliError::Syntax { .. })
        ));
        assert!(matches!(parse_expression("(a1", &sl4()), Err(CliError::Syntax { .. })));
    }

    #[test]
    fn lists() {
        assert_eq!(split_list("a(1), 2*u(1,2),3"), vec!["a(1)", "2*u(1,2)", "3"]);
        assert!(split_list("").is_empty());
    }
}
