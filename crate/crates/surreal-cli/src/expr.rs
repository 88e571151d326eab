//! The expression language: surreal terms with literals, cuts, arithmetic,
//! comparisons, and a few built-in functions.
//!
//! Precedence, loosest first: comparisons (non-associative), additive,
//! multiplicative, unary minus, atoms. `|` separates cut sides and binds
//! only inside braces; whitespace is insignificant. `/` appears only in
//! dyadic literals — there is no division.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use surreal_core::{Dyadic, Sign, SignSeq};

/// Comparison operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cmp {
    Lt,
    Leq,
    Eq,
    Apart,
}

impl Cmp {
    fn symbol(self) -> &'static str {
        match self {
            Cmp::Lt => "<",
            Cmp::Leq => "<=",
            Cmp::Eq => "==",
            Cmp::Apart => "><",
        }
    }
}

/// Built-in functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Value,
    Sign,
    Birthday,
    Canon,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Value => "value",
            Func::Sign => "sign",
            Func::Birthday => "birthday",
            Func::Canon => "canon",
        }
    }
}

/// Abstract syntax of one expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Dyadic),
    Signs(SignSeq),
    Cut(Vec<Expr>, Vec<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Compare(Cmp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// A parse failure, pointing at the byte offset where it happened.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub position: usize,
    pub expected: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: expected {}", self.position, self.expected)
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    SignLit(SignSeq),
    Ident(String),
    LBrace,
    RBrace,
    Pipe,
    Comma,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Lt,
    Leq,
    EqEq,
    Apart,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn tokens(mut self) -> Result<Vec<(usize, Token)>, SyntaxError> {
        let mut out = Vec::new();
        loop {
            let ws = self.rest().len() - self.rest().trim_start().len();
            self.pos += ws;
            if self.rest().is_empty() {
                return Ok(out);
            }
            let at = self.pos;
            out.push((at, self.next_token()?));
        }
    }

    fn next_token(&mut self) -> Result<Token, SyntaxError> {
        let rest = self.rest();
        let c = rest.chars().next().expect("caller ensured nonempty input");
        let single = |t| (t, 1);
        let (token, len) = match c {
            '{' => single(Token::LBrace),
            '}' => single(Token::RBrace),
            '|' => single(Token::Pipe),
            ',' => single(Token::Comma),
            '(' => single(Token::LParen),
            ')' => single(Token::RParen),
            '+' => single(Token::Plus),
            '-' => single(Token::Minus),
            '*' => single(Token::Star),
            '/' => single(Token::Slash),
            '<' if rest.starts_with("<=") => (Token::Leq, 2),
            '<' => single(Token::Lt),
            '=' if rest.starts_with("==") => (Token::EqEq, 2),
            '=' => {
                return Err(SyntaxError {
                    position: self.pos,
                    expected: String::from("'==' (single '=' is not an operator)"),
                })
            }
            '>' if rest.starts_with("><") => (Token::Apart, 2),
            '>' => {
                return Err(SyntaxError {
                    position: self.pos,
                    expected: String::from("'><' (there is no '>' operator)"),
                })
            }
            '0'..='9' => {
                let len = rest.chars().take_while(char::is_ascii_digit).count();
                let n: BigInt = rest[..len].parse().expect("digits form an integer");
                (Token::Int(n), len)
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let len = rest
                    .chars()
                    .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                    .count();
                let word = &rest[..len];
                if word == "s" && rest[len..].starts_with(':') {
                    let signs = rest[len + 1..].chars().take_while(|c| *c == '+' || *c == '-');
                    let seq: Vec<Sign> = signs
                        .map(|c| if c == '+' { Sign::Plus } else { Sign::Minus })
                        .collect();
                    let taken = len + 1 + seq.len();
                    (Token::SignLit(SignSeq(seq)), taken)
                } else {
                    (Token::Ident(String::from(word)), len)
                }
            }
            _ => {
                return Err(SyntaxError {
                    position: self.pos,
                    expected: String::from("a token"),
                })
            }
        };
        self.pos += len;
        Ok(token)
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    end: usize,
    at: usize,
}

/// Parses one complete expression; trailing input is an error.
pub fn parse(input: &str) -> Result<Expr, SyntaxError> {
    let tokens = Lexer::new(input).tokens()?;
    let mut parser = Parser { tokens, end: input.len(), at: 0 };
    let expr = parser.comparison()?;
    match parser.peek() {
        None => Ok(expr),
        Some(_) => Err(parser.expected("end of input")),
    }
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn position(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn expected(&self, what: &str) -> SyntaxError {
        SyntaxError { position: self.position(), expected: String::from(what) }
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), SyntaxError> {
        if self.peek() == Some(&token) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.expected(what))
        }
    }

    fn comparison(&mut self) -> Result<Expr, SyntaxError> {
        let lhs = self.additive()?;
        let op = match self.peek() {
            Some(Token::Lt) => Cmp::Lt,
            Some(Token::Leq) => Cmp::Leq,
            Some(Token::EqEq) => Cmp::Eq,
            Some(Token::Apart) => Cmp::Apart,
            _ => return Ok(lhs),
        };
        self.at += 1;
        let rhs = self.additive()?;
        Ok(Expr::Compare(op, Box::new(lhs), Box::new(rhs)))
    }

    fn additive(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.multiplicative()?;
        loop {
            let sub = match self.peek() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                _ => return Ok(lhs),
            };
            self.at += 1;
            let rhs = self.multiplicative()?;
            let (l, r) = (Box::new(lhs), Box::new(rhs));
            lhs = if sub { Expr::Sub(l, r) } else { Expr::Add(l, r) };
        }
    }

    fn multiplicative(&mut self) -> Result<Expr, SyntaxError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.at += 1;
            let rhs = self.unary()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, SyntaxError> {
        if self.peek() == Some(&Token::Minus) {
            self.at += 1;
            let inner = self.unary()?;
            // A negated numeral is just a numeral; folding here keeps
            // printing and reparsing structurally stable.
            return Ok(match inner {
                Expr::Num(d) => Expr::Num(-d),
                other => Expr::Neg(Box::new(other)),
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek() {
            Some(Token::Int(_)) => self.numeral(),
            Some(Token::SignLit(_)) => {
                let Some(Token::SignLit(seq)) = self.bump() else { unreachable!() };
                Ok(Expr::Signs(seq))
            }
            Some(Token::LParen) => {
                self.at += 1;
                let inner = self.comparison()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some(Token::LBrace) => self.cut(),
            Some(Token::Ident(_)) => self.call(),
            _ => Err(self.expected("an expression")),
        }
    }

    fn numeral(&mut self) -> Result<Expr, SyntaxError> {
        let Some(Token::Int(num)) = self.bump() else { unreachable!() };
        if self.peek() != Some(&Token::Slash) {
            return Ok(Expr::Num(Dyadic::from_int(num)));
        }
        self.at += 1;
        let at = self.position();
        if !matches!(self.peek(), Some(Token::Int(_))) {
            return Err(self.expected("a denominator"));
        }
        let Some(Token::Int(den)) = self.bump() else { unreachable!() };
        let exp = dyadic_exponent(&den).ok_or(SyntaxError {
            position: at,
            expected: String::from(
                "a power-of-two denominator (only dyadic rationals are finitely born)",
            ),
        })?;
        Ok(Expr::Num(Dyadic::new(num, exp)))
    }

    fn cut(&mut self) -> Result<Expr, SyntaxError> {
        self.expect(Token::LBrace, "'{'")?;
        let left = self.options(&Token::Pipe)?;
        self.expect(Token::Pipe, "'|'")?;
        let right = self.options(&Token::RBrace)?;
        self.expect(Token::RBrace, "'}'")?;
        Ok(Expr::Cut(left, right))
    }

    /// A possibly empty comma-separated list, ended by `stop`.
    fn options(&mut self, stop: &Token) -> Result<Vec<Expr>, SyntaxError> {
        let mut out = Vec::new();
        if self.peek() == Some(stop) {
            return Ok(out);
        }
        loop {
            out.push(self.comparison()?);
            if self.peek() != Some(&Token::Comma) {
                return Ok(out);
            }
            self.at += 1;
        }
    }

    fn call(&mut self) -> Result<Expr, SyntaxError> {
        let at = self.position();
        let Some(Token::Ident(name)) = self.bump() else { unreachable!() };
        let func = match name.as_str() {
            "value" => Func::Value,
            "sign" => Func::Sign,
            "birthday" => Func::Birthday,
            "canon" => Func::Canon,
            _ => {
                return Err(SyntaxError {
                    position: at,
                    expected: String::from("a function name: value, sign, birthday, or canon"),
                })
            }
        };
        self.expect(Token::LParen, "'('")?;
        let arg = self.comparison()?;
        self.expect(Token::RParen, "')'")?;
        Ok(Expr::Call(func, Box::new(arg)))
    }
}

/// `log2(den)` when `den` is a power of two.
fn dyadic_exponent(den: &BigInt) -> Option<u32> {
    if den.is_zero() || den.sign() == num_bigint::Sign::Minus {
        return None;
    }
    let bits = den.bits();
    if den.trailing_zeros() == Some(bits - 1) {
        u32::try_from(bits - 1).ok()
    } else {
        None
    }
}

// Binding strength, mirrored by the printer below.
const PREC_CMP: u8 = 0;
const PREC_ADD: u8 = 1;
const PREC_MUL: u8 = 2;
const PREC_UNARY: u8 = 3;
const PREC_ATOM: u8 = 4;

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Compare(..) => PREC_CMP,
            Expr::Add(..) | Expr::Sub(..) => PREC_ADD,
            Expr::Mul(..) => PREC_MUL,
            Expr::Neg(_) => PREC_UNARY,
            Expr::Num(_) | Expr::Signs(_) | Expr::Cut(..) | Expr::Call(..) => PREC_ATOM,
        }
    }

    /// Writes `self`, parenthesizing whenever it binds looser than `min`.
    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.fmt_prec(f, PREC_CMP)?;
            return write!(f, ")");
        }
        match self {
            Expr::Num(d) => write!(f, "{d}"),
            Expr::Signs(seq) => write!(f, "s:{seq}"),
            Expr::Cut(left, right) => {
                write!(f, "{{")?;
                for (i, e) in left.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    e.fmt_prec(f, PREC_CMP)?;
                }
                write!(f, " | ")?;
                for (i, e) in right.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    e.fmt_prec(f, PREC_CMP)?;
                }
                write!(f, "}}")
            }
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.fmt_prec(f, PREC_ATOM)
            }
            Expr::Add(l, r) => {
                l.fmt_prec(f, PREC_ADD)?;
                write!(f, " + ")?;
                r.fmt_prec(f, PREC_MUL)
            }
            Expr::Sub(l, r) => {
                l.fmt_prec(f, PREC_ADD)?;
                write!(f, " - ")?;
                r.fmt_prec(f, PREC_MUL)
            }
            Expr::Mul(l, r) => {
                l.fmt_prec(f, PREC_MUL)?;
                write!(f, " * ")?;
                r.fmt_prec(f, PREC_UNARY)
            }
            Expr::Compare(op, l, r) => {
                l.fmt_prec(f, PREC_ADD)?;
                write!(f, " {} ", op.symbol())?;
                r.fmt_prec(f, PREC_ADD)
            }
            Expr::Call(func, arg) => {
                write!(f, "{}(", func.name())?;
                arg.fmt_prec(f, PREC_CMP)?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, PREC_CMP)
    }
}
