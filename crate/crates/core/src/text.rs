//! The expression language and the JSON chain schema.
//!
//! ```text
//! sum    := ['-'] tprod (('+' | '-') tprod)*
//! tprod  := prod ('@' prod)*
//! prod   := power (('*' | '/') power)*
//! power  := atom ('^' exp)?
//! exp    := ['-'] int | '(' ['-'] int ['/' int] ')'
//! atom   := int | 'q' | 'v' | 'a' | 'b' | 'c' | 'd' | '(' sum ')'
//!         | name '(' sum (',' sum)* ')' | key | 'trace' '[' sum [';' sum ',' sum] ']'
//! ```
//!
//! `^` binds tighter than `*` and `/`, which bind tighter than `@`, which binds
//! tighter than `+` and `-`. So `b@c - c@b` is a difference of two 2-tensors.
//! On cochains `*` is the cup product; `trace[..] * f` is the functional
//! `∫(· ⌢ f)`.

use crate::algebra::{Aut, Elem, Gen, Word};
use crate::catalog::{self, CatalogItem, CatalogKey, KoszulComplex, Sign};
use crate::complexes::{Chain, Cochain, Functional, Trace};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{wedge2, wedge3};
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::json;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let ch = b[i] as char;
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(s[st..i].parse().unwrap()), st));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let st = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            let mut id = s[st..i].to_string();
            // derivation names carry their sign: delH+, del-(2)
            if matches!(id.as_str(), "delH" | "delE" | "delF" | "del") && i < b.len() && (b[i] == b'+' || b[i] == b'-') {
                id.push(b[i] as char);
                i += 1;
            }
            out.push((Tok::Ident(id), st));
        } else if "+-*/^@()[],;".contains(ch) {
            out.push((Tok::Sym(ch), i));
            i += 1;
        } else {
            return Err(err(i, format!("unexpected character `{}`", &s[i..].chars().next().unwrap())));
        }
    }
    out.push((Tok::End, s.len()));
    Ok(out)
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

/// `n` or `n/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exponent {
    Int(i64),
    Half(i64),
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Int(BigInt),
    /// `q` or `v`.
    Var(char),
    Gen(Gen),
    /// A key or literal with arguments: `sigma(..)`, `omega3(..)`, `trace[..]`, `delH+`, `dA`.
    Call(String, Vec<Expr>),
    Neg(Box<Expr>),
    Bin(char, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    /// Byte offset into the source.
    pub pos: usize,
}

const CALLS: &[(&str, usize)] = &[
    ("sigma", 2),
    ("tau", 2),
    ("wedge", 0),
    ("omega", 2),
    ("omega2", 2),
    ("omega2p", 2),
    ("omega3", 2),
    ("del+", 1),
    ("del-", 1),
    ("center", 2),
    ("eta", 1),
];

const BARE: &[&str] = &["dA", "delH+", "delH-", "delE+", "delE-", "delF+", "delF-", "phi", "xi", "koszul", "id"];

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(err(self.pos(), format!("expected `{c}`, found {}", describe(self.peek()))))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let pos = self.pos();
        let mut e = if self.eat('-') {
            let x = self.tprod()?;
            Expr { kind: ExprKind::Neg(Box::new(x)), pos }
        } else {
            self.tprod()?
        };
        loop {
            let pos = self.pos();
            let op = match self.peek() {
                Tok::Sym(c @ ('+' | '-')) => *c,
                _ => return Ok(e),
            };
            self.bump();
            let r = self.tprod()?;
            e = Expr { kind: ExprKind::Bin(op, Box::new(e), Box::new(r)), pos };
        }
    }

    fn tprod(&mut self) -> Result<Expr> {
        let mut e = self.prod()?;
        while *self.peek() == Tok::Sym('@') {
            let pos = self.pos();
            self.bump();
            let r = self.prod()?;
            e = Expr { kind: ExprKind::Bin('@', Box::new(e), Box::new(r)), pos };
        }
        Ok(e)
    }

    fn prod(&mut self) -> Result<Expr> {
        let mut e = self.power()?;
        loop {
            let pos = self.pos();
            let op = match self.peek() {
                Tok::Sym(c @ ('*' | '/')) => *c,
                _ => return Ok(e),
            };
            self.bump();
            let r = self.power()?;
            e = Expr { kind: ExprKind::Bin(op, Box::new(e), Box::new(r)), pos };
        }
    }

    fn int(&mut self) -> Result<i64> {
        let pos = self.pos();
        let neg = self.eat('-');
        match self.bump() {
            (Tok::Int(n), _) => {
                let n = n.to_i64().ok_or_else(|| err(pos, "exponent too large"))?;
                Ok(if neg { -n } else { n })
            }
            (t, p) => Err(err(p, format!("expected an integer exponent, found {}", describe(&t)))),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let exp = if self.eat('(') {
            let n = self.int()?;
            let e = if self.eat('/') {
                let dpos = self.pos();
                match self.int()? {
                    1 => Exponent::Int(n),
                    2 if n % 2 == 0 => Exponent::Int(n / 2),
                    2 => Exponent::Half(n),
                    d => return Err(err(dpos, format!("only half-integer powers are allowed, not /{d}"))),
                }
            } else {
                Exponent::Int(n)
            };
            self.expect(')')?;
            e
        } else {
            Exponent::Int(self.int()?)
        };
        Ok(Expr { kind: ExprKind::Pow(Box::new(base), exp), pos })
    }

    fn atom(&mut self) -> Result<Expr> {
        let (t, pos) = self.bump();
        let kind = match t {
            Tok::Int(n) => ExprKind::Int(n),
            Tok::Sym('(') => {
                let e = self.sum()?;
                self.expect(')')?;
                return Ok(e);
            }
            Tok::Ident(id) => match id.as_str() {
                "q" | "v" => ExprKind::Var(id.chars().next().unwrap()),
                "a" => ExprKind::Gen(Gen::A),
                "b" => ExprKind::Gen(Gen::B),
                "c" => ExprKind::Gen(Gen::C),
                "d" => ExprKind::Gen(Gen::D),
                "trace" => {
                    self.expect('[')?;
                    let mut args = vec![self.sum()?];
                    if self.eat(';') {
                        args.push(self.sum()?);
                        self.expect(',')?;
                        args.push(self.sum()?);
                    }
                    self.expect(']')?;
                    ExprKind::Call(id, args)
                }
                _ if BARE.contains(&id.as_str()) => ExprKind::Call(id, vec![]),
                _ => {
                    let Some(&(_, n)) = CALLS.iter().find(|(c, _)| *c == id) else {
                        return Err(err(pos, format!("unknown name `{id}`")));
                    };
                    self.expect('(')?;
                    let mut args = vec![self.sum()?];
                    while self.eat(',') {
                        args.push(self.sum()?);
                    }
                    self.expect(')')?;
                    let ok = if n == 0 { (2..=3).contains(&args.len()) } else { args.len() == n };
                    if !ok {
                        return Err(err(pos, format!("`{id}` takes {} arguments, got {}", if n == 0 { "2 or 3".into() } else { n.to_string() }, args.len())));
                    }
                    ExprKind::Call(id, args)
                }
            },
            t => return Err(err(pos, format!("expected an expression, found {}", describe(&t)))),
        };
        Ok(Expr { kind, pos })
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(err(p.pos(), format!("unexpected {}", describe(p.peek()))));
    }
    Ok(e)
}

/// Parses and evaluates.
pub fn eval_str(text: &str) -> Result<Value> {
    parse(text)?.eval()
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(n) => write!(f, "{n}"),
            ExprKind::Var(c) => write!(f, "{c}"),
            ExprKind::Gen(g) => write!(f, "{}", g.name()),
            ExprKind::Call(name, args) if name == "trace" => {
                write!(f, "trace[{}", args[0])?;
                if args.len() == 3 {
                    write!(f, "; {}, {}", args[1], args[2])?;
                }
                write!(f, "]")
            }
            ExprKind::Call(name, args) if args.is_empty() => write!(f, "{name}"),
            ExprKind::Call(name, args) => {
                let a: Vec<String> = args.iter().map(|x| x.to_string()).collect();
                write!(f, "{name}({})", a.join(", "))
            }
            ExprKind::Neg(x) => write!(f, "-({x})"),
            ExprKind::Bin(op, l, r) => write!(f, "({l} {op} {r})"),
            ExprKind::Pow(x, Exponent::Int(n)) => write!(f, "({x})^({n})"),
            ExprKind::Pow(x, Exponent::Half(n)) => write!(f, "({x})^({n}/2)"),
        }
    }
}

/// The value of an expression.
#[derive(Clone, Debug)]
pub enum Value {
    Scalar(Scalar),
    /// Arity one is an algebra element.
    Tensor(Tensor),
    Chain(Chain),
    Aut(Aut),
    Cochain(Cochain),
    Trace(Trace),
    Functional(Functional),
    Koszul(KoszulComplex<Scalar>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Tensor(t) if t.arity() == 1 => "algebra element",
            Value::Tensor(_) => "tensor",
            Value::Chain(_) => "chain",
            Value::Aut(_) => "automorphism",
            Value::Cochain(_) => "cochain",
            Value::Trace(_) => "trace",
            Value::Functional(_) => "functional",
            Value::Koszul(_) => "Koszul complex",
        }
    }

    pub fn into_scalar(self) -> Result<Scalar> {
        match self {
            Value::Scalar(s) => Ok(s),
            v => Err(Error::Domain(format!("expected a scalar, got a {}", v.kind()))),
        }
    }

    pub fn into_elem(self) -> Result<Elem> {
        match self {
            Value::Scalar(s) => Ok(Elem::scalar(s)),
            Value::Tensor(t) if t.arity() == 1 => Ok(t.to_elem()),
            v => Err(Error::Domain(format!("expected an algebra element, got a {}", v.kind()))),
        }
    }

    /// A chain; bare tensors take `twist`.
    pub fn into_chain(self, twist: Option<&Aut>) -> Result<Chain> {
        match (self, twist) {
            (Value::Chain(c), None) => Ok(c),
            (Value::Chain(c), Some(t)) if c.twist() == t => Ok(c),
            (Value::Chain(c), Some(t)) => {
                Err(Error::TwistMismatch { expected: c.twist().to_string(), got: t.to_string() })
            }
            (Value::Scalar(s), t) => Ok(Chain::new(t.cloned().unwrap_or_else(Aut::identity), Tensor::from_elem(&Elem::scalar(s)))),
            (Value::Tensor(x), t) => Ok(Chain::new(t.cloned().unwrap_or_else(Aut::identity), x)),
            (v, _) => Err(Error::Domain(format!("expected a chain, got a {}", v.kind()))),
        }
    }

    pub fn into_cochain(self) -> Result<Cochain> {
        match self {
            Value::Cochain(c) => Ok(c),
            Value::Scalar(s) => Ok(Cochain::central(Elem::scalar(s), Aut::identity())),
            v => Err(Error::Domain(format!("expected a cochain, got a {}", v.kind()))),
        }
    }

    pub fn into_functional(self) -> Result<Functional> {
        match self {
            Value::Functional(f) => Ok(f),
            Value::Trace(t) => Ok(Functional::new(t, Cochain::central(Elem::one(), Aut::identity()))),
            v => Err(Error::Domain(format!("expected a functional, got a {}", v.kind()))),
        }
    }

    pub fn into_aut(self) -> Result<Aut> {
        match self {
            Value::Aut(a) => Ok(a),
            v => Err(Error::Domain(format!("expected an automorphism, got a {}", v.kind()))),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Tensor(t) => write!(f, "{t}"),
            Value::Chain(c) => write!(f, "{c}"),
            Value::Aut(a) => write!(f, "{a}"),
            Value::Cochain(c) => write!(f, "{c}"),
            Value::Trace(t) => write!(f, "{t}"),
            Value::Functional(x) => write!(f, "{x}"),
            Value::Koszul(k) => {
                for (n, m) in k.maps.iter().enumerate() {
                    if n > 0 {
                        writeln!(f)?;
                    }
                    let rows: Vec<String> =
                        m.iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))).collect();
                    write!(f, "[{}]", rows.join(", "))?;
                }
                Ok(())
            }
        }
    }
}

fn at<T>(pos: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        e => err(pos, e.to_string()),
    })
}

fn sign(c: char) -> Sign {
    if c == '+' {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

impl Expr {
    fn nat(&self) -> Result<u32> {
        let s = self.eval()?.into_scalar();
        let r = at(self.pos, s)?.as_rational();
        match r.filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_u32()) {
            Some(n) => Ok(n),
            None => Err(err(self.pos, "expected a natural number")),
        }
    }

    fn integer(&self) -> Result<i64> {
        let s = at(self.pos, self.eval()?.into_scalar())?;
        match s.as_rational().filter(|r| r.is_integer()).and_then(|r| r.to_integer().to_i64()) {
            Some(n) => Ok(n),
            None => Err(err(self.pos, "expected an integer")),
        }
    }

    fn unit(&self) -> Result<Scalar> {
        let s = at(self.pos, self.eval()?.into_scalar())?;
        if s.is_zero() {
            return Err(err(self.pos, "automorphism parameters must be nonzero"));
        }
        Ok(s)
    }

    /// The catalog key this expression names, if it is one.
    pub fn as_key(&self) -> Result<CatalogKey> {
        let ExprKind::Call(name, args) = &self.kind else {
            return Err(err(self.pos, format!("`{self}` is not a catalog key")));
        };
        use CatalogKey::*;
        Ok(match name.as_str() {
            "omega" => Omega(args[0].nat()?, args[1].nat()?),
            "omega2" => Omega2(args[0].nat()?, args[1].nat()?),
            "omega2p" => Omega2p(args[0].nat()?, args[1].nat()?),
            "omega3" => Omega3(args[0].nat()?, args[1].nat()?),
            "dA" => DA,
            "delH+" | "delH-" => DelH(sign(name.chars().last().unwrap())),
            "delE+" | "delE-" => DelE(sign(name.chars().last().unwrap())),
            "delF+" | "delF-" => DelF(sign(name.chars().last().unwrap())),
            "del+" | "del-" => DelClass(sign(name.chars().nth(3).unwrap()), args[0].integer()?),
            "center" => Central(args[0].nat()?, args[1].nat()?),
            "trace" => {
                let w = at(args[0].pos, args[0].eval()?.into_elem())?;
                let w = w.as_word().ok_or_else(|| err(args[0].pos, "a trace is indexed by a single basis word"))?;
                let tw = if args.len() == 3 { Some(Aut::sigma(args[1].unit()?, args[2].unit()?)) } else { None };
                Trace(w, tw)
            }
            "phi" => Phi,
            "xi" => Xi,
            "eta" => Eta(args[0].unit()?),
            "koszul" => Koszul,
            _ => return Err(err(self.pos, format!("`{name}` is not a catalog key"))),
        })
    }

    pub fn eval(&self) -> Result<Value> {
        let pos = self.pos;
        match &self.kind {
            ExprKind::Int(n) => Ok(Value::Scalar(Scalar::rational(BigRational::from_integer(n.clone())))),
            ExprKind::Var('q') => Ok(Value::Scalar(Scalar::q())),
            ExprKind::Var(_) => Ok(Value::Scalar(Scalar::v())),
            ExprKind::Gen(g) => Ok(Value::Tensor(Tensor::from_elem(&Elem::gen(*g)))),
            ExprKind::Call(name, args) => match name.as_str() {
                "sigma" => Ok(Value::Aut(Aut::sigma(args[0].unit()?, args[1].unit()?))),
                "tau" => Ok(Value::Aut(Aut::tau(args[0].unit()?, args[1].unit()?))),
                "id" => Ok(Value::Aut(Aut::identity())),
                "wedge" => {
                    let xs = args.iter().map(|a| at(a.pos, a.eval()?.into_elem())).collect::<Result<Vec<_>>>()?;
                    Ok(Value::Tensor(if xs.len() == 2 { wedge2(&xs[0], &xs[1]) } else { wedge3(&xs[0], &xs[1], &xs[2]) }))
                }
                _ => {
                    let key = self.as_key()?;
                    Ok(match at(pos, catalog::lookup(&key))? {
                        CatalogItem::Chain(c) => Value::Chain(c),
                        CatalogItem::Cochain(c) => Value::Cochain(c),
                        CatalogItem::Trace(t) => Value::Trace(t),
                        CatalogItem::Functional(f) => Value::Functional(f),
                        CatalogItem::Koszul(k) => Value::Koszul(k),
                    })
                }
            },
            ExprKind::Neg(x) => at(pos, mul(Value::Scalar(-Scalar::one()), x.eval()?)),
            ExprKind::Bin(op, l, r) => {
                let (l, r) = (l.eval()?, r.eval()?);
                at(
                    pos,
                    match op {
                        '+' => add(l, r, false),
                        '-' => add(l, r, true),
                        '*' => mul(l, r),
                        '/' => {
                            let d = r.into_scalar()?;
                            let inv = d.inverse().ok_or_else(|| Error::Domain("division by zero".into()))?;
                            mul(l, Value::Scalar(inv))
                        }
                        _ => tensor(l, r),
                    },
                )
            }
            ExprKind::Pow(x, e) => at(pos, power(x, *e)),
        }
    }
}

fn power(x: &Expr, e: Exponent) -> Result<Value> {
    if let Exponent::Half(n) = e {
        return match x.kind {
            ExprKind::Var('q') => Ok(Value::Scalar(Scalar::v_pow(n))),
            _ => Err(Error::Domain("half-integer powers are only defined for q".into())),
        };
    }
    let Exponent::Int(n) = e else { unreachable!() };
    match x.eval()? {
        Value::Scalar(s) => {
            if n < 0 && s.is_zero() {
                return Err(Error::Domain("negative power of zero".into()));
            }
            Ok(Value::Scalar(s.pow(n)))
        }
        Value::Tensor(t) if t.arity() == 1 => {
            if n < 0 {
                return Err(Error::Domain("negative powers of algebra elements are not allowed; write d^2, not a^-2".into()));
            }
            Ok(Value::Tensor(Tensor::from_elem(&t.to_elem().pow(n as u32))))
        }
        Value::Aut(a) => {
            let mut r = Aut::identity();
            let b = if n < 0 { a.inverse() } else { a };
            for _ in 0..n.unsigned_abs() {
                r = r.compose(&b);
            }
            Ok(Value::Aut(r))
        }
        v => Err(Error::Domain(format!("cannot raise a {} to a power", v.kind()))),
    }
}

fn as_tensor(v: Value) -> Option<Tensor> {
    match v {
        Value::Scalar(s) => Some(Tensor::from_elem(&Elem::scalar(s))),
        Value::Tensor(t) => Some(t),
        _ => None,
    }
}

fn arity_mismatch(a: usize, b: usize) -> Error {
    Error::Domain(format!("arity mismatch: {a} vs {b} tensor factors"))
}

/// A bare tensor as a chain in the twist of `ch`.
fn like(ch: &Chain, v: Value) -> Result<Chain> {
    let t = as_tensor(v).expect("scalar or tensor");
    if t.arity() != ch.degree() + 1 {
        return Err(arity_mismatch(ch.degree() + 1, t.arity()));
    }
    Ok(Chain::new(ch.twist().clone(), t))
}

fn add(l: Value, r: Value, sub: bool) -> Result<Value> {
    let sgn = if sub { -Scalar::one() } else { Scalar::one() };
    match (l, r) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x + y * sgn)),
        (Value::Chain(x), Value::Chain(y)) => {
            if x.twist() != y.twist() {
                return Err(Error::TwistMismatch { expected: x.twist().to_string(), got: y.twist().to_string() });
            }
            if x.degree() != y.degree() {
                return Err(arity_mismatch(x.degree() + 1, y.degree() + 1));
            }
            Ok(Value::Chain(x.add(&y.scale(&sgn))))
        }
        (Value::Chain(x), y @ (Value::Scalar(_) | Value::Tensor(_))) => {
            let y = like(&x, y)?;
            Ok(Value::Chain(x.add(&y.scale(&sgn))))
        }
        (y @ (Value::Scalar(_) | Value::Tensor(_)), Value::Chain(x)) => {
            let y = like(&x, y)?;
            Ok(Value::Chain(y.add(&x.scale(&sgn))))
        }
        (Value::Cochain(x), y) => Ok(Value::Cochain(x.add(&y.into_cochain()?.scale(sgn))?)),
        (x @ Value::Scalar(_), Value::Cochain(y)) => Ok(Value::Cochain(x.into_cochain()?.add(&y.scale(sgn))?)),
        (x @ (Value::Functional(_) | Value::Trace(_)), y @ (Value::Functional(_) | Value::Trace(_))) => {
            Ok(Value::Functional(Functional::combination(vec![(Scalar::one(), x.into_functional()?), (sgn, y.into_functional()?)])?))
        }
        (l, r) => {
            let (lk, rk) = (l.kind(), r.kind());
            match (as_tensor(l), as_tensor(r)) {
                (Some(x), Some(y)) if x.arity() == y.arity() => Ok(Value::Tensor(x.add(&y.scale(&sgn)))),
                (Some(x), Some(y)) => Err(arity_mismatch(x.arity(), y.arity())),
                _ => Err(Error::Domain(format!("cannot add a {lk} and a {rk}"))),
            }
        }
    }
}

fn mul(l: Value, r: Value) -> Result<Value> {
    match (l, r) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x * y)),
        (Value::Scalar(k), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(k)) => Ok(Value::Tensor(t.scale(&k))),
        (Value::Scalar(k), Value::Chain(c)) | (Value::Chain(c), Value::Scalar(k)) => Ok(Value::Chain(c.scale(&k))),
        (Value::Scalar(k), Value::Cochain(c)) | (Value::Cochain(c), Value::Scalar(k)) => Ok(Value::Cochain(c.scale(k))),
        (Value::Scalar(k), f @ (Value::Functional(_) | Value::Trace(_))) | (f @ (Value::Functional(_) | Value::Trace(_)), Value::Scalar(k)) => {
            Ok(Value::Functional(Functional::combination(vec![(k, f.into_functional()?)])?))
        }
        (Value::Tensor(x), Value::Tensor(y)) => {
            if x.arity() != y.arity() {
                return Err(arity_mismatch(x.arity(), y.arity()));
            }
            Ok(Value::Tensor(x.mul(&y)))
        }
        (Value::Cochain(f), Value::Cochain(g)) => Ok(Value::Cochain(f.cup(&g))),
        (Value::Trace(t), Value::Cochain(f)) => Ok(Value::Functional(Functional::new(t, f))),
        (Value::Aut(s), Value::Aut(t)) => Ok(Value::Aut(s.compose(&t))),
        (Value::Aut(s), Value::Tensor(t)) if t.arity() == 1 => Ok(Value::Tensor(Tensor::from_elem(&s.apply(&t.to_elem())))),
        (l, r) => Err(Error::Domain(format!("cannot multiply a {} by a {}", l.kind(), r.kind()))),
    }
}

fn tensor(l: Value, r: Value) -> Result<Value> {
    let (lk, rk) = (l.kind(), r.kind());
    match (as_tensor(l), as_tensor(r)) {
        (Some(x), Some(y)) => Ok(Value::Tensor(x.tensor(&y))),
        _ => Err(Error::Domain(format!("cannot form the tensor product of a {lk} and a {rk}"))),
    }
}

/// Parses a chain; tensors take `twist`, catalog chains keep their own.
pub fn parse_chain(text: &str, twist: Option<&Aut>) -> Result<Chain> {
    eval_str(text)?.into_chain(twist)
}

pub fn parse_elem(text: &str) -> Result<Elem> {
    at(0, eval_str(text)?.into_elem())
}

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    at(0, eval_str(text)?.into_scalar())
}

pub fn parse_aut(text: &str) -> Result<Aut> {
    at(0, eval_str(text)?.into_aut())
}

pub fn parse_word(text: &str) -> Result<Word> {
    parse_elem(text)?.as_word().ok_or_else(|| err(0, format!("`{text}` is not a basis word")))
}

pub fn parse_key(text: &str) -> Result<CatalogKey> {
    parse(text)?.as_key()
}

/// `{"degree": n, "twist": "sigma(λ, μ)", "terms": [{"coeff": "…", "tuple": ["…", …]}, …]}`;
/// coefficients, words and the twist use the expression syntax.
pub fn chain_to_json(ch: &Chain) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = ch
        .terms()
        .map(|(t, c)| json!({"coeff": c.to_string(), "tuple": t.iter().map(|w| w.to_string()).collect::<Vec<_>>()}))
        .collect();
    json!({"degree": ch.degree(), "twist": ch.twist().to_string(), "terms": terms})
}

pub fn chain_from_json(v: &serde_json::Value) -> Result<Chain> {
    let bad = |m: &str| Error::Domain(format!("chain JSON: {m}"));
    let degree = v["degree"].as_u64().ok_or_else(|| bad("missing `degree`"))? as usize;
    let twist = parse_aut(v["twist"].as_str().ok_or_else(|| bad("missing `twist`"))?)?;
    let mut body = Tensor::zero(degree + 1);
    for t in v["terms"].as_array().ok_or_else(|| bad("missing `terms`"))? {
        let c = parse_scalar(t["coeff"].as_str().ok_or_else(|| bad("term without `coeff`"))?)?;
        let ws = t["tuple"].as_array().ok_or_else(|| bad("term without `tuple`"))?;
        if ws.len() != degree + 1 {
            return Err(bad(&format!("tuple of length {} in degree {degree}", ws.len())));
        }
        let tup = ws
            .iter()
            .map(|w| parse_word(w.as_str().ok_or_else(|| bad("words are strings"))?))
            .collect::<Result<Vec<Word>>>()?;
        body.add_term(tup, c);
    }
    Ok(Chain::new(twist, body))
}
