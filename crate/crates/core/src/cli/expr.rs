//! Expression language of `combhopf eval`.
//!
//! ```text
//! expr    := sum
//! sum     := product (('+' | '-') product)*
//! product := power (('*' | '/') power)*
//! power   := unary ('^' integer)?
//! unary   := '-' unary | atom
//! atom    := integer | 'q' | literal | call | '(' expr ')'
//! ```
//!
//! Literals: `F[312] G[312] V[312] Fup[..] Gup[..]` (FQSym), `St[[1,2],[3]]`
//! (free Schur), `LR[((.,.),.)]` (Loday–Ronco tree), `Gamma{n=3; 1<3}`
//! (poset), `MS[[2,1],[1,0]] PhiS[..]` (MQSym), `F(2,1) M(2,1)` (QSym),
//! `S(2,1) R(2,1)` (NSym), `s[2,1] h[..] m[..] p[..]` (Sym), `T[312]` (0-Hecke).

use crate::combinatorics::{BinTree, Composition, Partition, Permutation, Tableau};
use crate::error::{parse_err, Error, Result};
use crate::exactalg::{LinComb, QPoly, Ring, Scalar};
use crate::fqsym::{
    gbasis_q_shuffle, graded_series_inverse, phi_q, pi_projector, q_product, render_tensor, tensor_product, FQElem, FqBasis, FqTensor,
};
use crate::hecke0::HeckeElem;
use crate::mqsym::{embed_fqsym, ev, t_ev, tensor_mul, MQElem, MqBasis, MqTensor, PackedMat};
use crate::posets::{gamma_free, loday_ronco_f, Poset};
use crate::symfam::{commutative_image, free_schur, NSymElem, NsBasis, QSymElem, QsBasis, SymBasis, SymElem};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(QPoly),
    Fq(FQElem<QPoly>),
    FqTensor(FqTensor<QPoly>),
    Mq(MQElem),
    MqTensor(MqTensor),
    QSym(QSymElem<QPoly>),
    NSym(NSymElem),
    Sym(SymElem),
    Hecke(HeckeElem),
}

impl Value {
    pub fn algebra(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Fq(_) => "FQSym",
            Value::FqTensor(_) => "FQSym⊗FQSym",
            Value::Mq(_) => "MQSym",
            Value::MqTensor(_) => "MQSym⊗MQSym",
            Value::QSym(_) => "QSym",
            Value::NSym(_) => "NSym",
            Value::Sym(_) => "Sym",
            Value::Hecke(_) => "H_n(0)",
        }
    }

    pub fn render(&self) -> String {
        match self {
            Value::Scalar(c) => c.render(),
            Value::Fq(x) => x.render(),
            Value::FqTensor(t) => render_tensor(t, "F"),
            Value::Mq(x) => x.render(),
            Value::MqTensor(t) => render_mq_tensor(t),
            Value::QSym(x) => x.render(),
            Value::NSym(x) => x.render(),
            Value::Sym(x) => x.render(),
            Value::Hecke(x) => x.render(),
        }
    }

    /// `(label, coefficient)` pairs in output order.
    pub fn terms(&self) -> Vec<(String, String)> {
        fn collect<B: Ord + Clone, R: Ring>(lc: &LinComb<B, R>, label: impl Fn(&B) -> String) -> Vec<(String, String)> {
            lc.iter().map(|(b, c)| (label(b), c.render())).collect()
        }
        match self {
            Value::Scalar(c) => vec![("1".into(), c.render())],
            Value::Fq(x) => collect(x.terms(), |s| format!("{}[{s}]", x.basis().symbol())),
            Value::FqTensor(t) => collect(t, |(a, b)| format!("F[{a}] ⊗ F[{b}]")),
            Value::Mq(x) => collect(x.terms(), |p| format!("{}{p}", x.basis().symbol())),
            Value::MqTensor(t) => collect(t, |(a, b)| format!("MS{a} ⊗ MS{b}")),
            Value::QSym(x) => {
                let sym = if x.basis() == QsBasis::M { "M" } else { "F" };
                collect(x.terms(), |i| format!("{sym}{i}"))
            }
            Value::NSym(x) => {
                let sym = if x.basis() == NsBasis::S { "S" } else { "R" };
                collect(x.terms(), |i| format!("{sym}{i}"))
            }
            Value::Sym(x) => collect(x.terms(), |l| format!("{}{l}", sym_symbol(x.basis()))),
            Value::Hecke(x) => collect(x.terms(), |s| format!("T[{s}]")),
        }
    }
}

fn sym_symbol(b: SymBasis) -> &'static str {
    match b {
        SymBasis::H => "h",
        SymBasis::S => "s",
        SymBasis::M => "m",
        SymBasis::P => "p",
    }
}

fn render_mq_tensor(t: &MqTensor) -> String {
    let side = |p: &PackedMat| if p.height() == 0 { "1".to_string() } else { format!("MS{p}") };
    crate::exactalg::render_combination(t, |(a, b)| Some(format!("{} ⊗ {}", side(a), side(b))))
}

/// Options that influence evaluation.
#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    /// Truncation degree for series inverses.
    pub max_degree: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { max_degree: 4 }
    }
}

/// Parses and evaluates `src`.
pub fn evaluate(src: &str, opts: EvalOptions) -> Result<Value> {
    let mut p = Parser { src, chars: src.char_indices().collect(), pos: 0, opts };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(parse_err(p.offset(), format!("unexpected {:?}", p.chars[p.pos].1)));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    opts: EvalOptions,
}

const FUNCTIONS: &[&str] =
    &["pair", "coproduct", "specialize", "qmul", "gshuffle", "ev", "tev", "embed", "image", "phiq", "pi", "inverse", "to", "counit"];

impl Parser<'_> {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |c| c.0)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(parse_err(self.offset(), format!("expected {c:?}")))
        }
    }

    fn sum(&mut self) -> Result<Value> {
        let mut acc = self.product()?;
        loop {
            if self.eat('+') {
                let rhs = self.product()?;
                acc = add(acc, rhs)?;
            } else if self.eat('-') {
                let rhs = self.product()?;
                acc = add(acc, scale(rhs, &-QPoly::one())?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Value> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                let rhs = self.power()?;
                acc = mul(acc, rhs)?;
            } else if self.eat('/') {
                let at = self.offset();
                let rhs = self.power()?;
                let c = match rhs {
                    Value::Scalar(c) => constant(&c).filter(|c| !c.is_zero()),
                    _ => None,
                }
                .ok_or_else(|| parse_err(at, "division only by a nonzero rational constant"))?;
                acc = scale(acc, &QPoly::constant(c.recip()))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.unary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let at = self.offset();
        let e = self.integer()?.ok_or_else(|| parse_err(at, "expected an exponent"))?;
        let e: usize = e.try_into().map_err(|_| parse_err(at, "exponent too large"))?;
        let mut acc = unit_like(&base)?;
        for _ in 0..e {
            acc = mul(acc, base.clone())?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value> {
        if self.eat('-') {
            let v = self.unary()?;
            return scale(v, &-QPoly::one());
        }
        self.atom()
    }

    fn integer(&mut self) -> Result<Option<BigInt>> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(Some(text.parse().map_err(|_| parse_err(self.chars[start].0, "bad integer"))?))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().map(|c| c.1).collect()
    }

    /// Raw text between a bracket and its match; the cursor sits on the opener.
    fn bracketed(&mut self) -> Result<(char, String)> {
        let open = self.peek().ok_or_else(|| parse_err(self.offset(), "expected a bracket"))?;
        let close = match open {
            '[' => ']',
            '(' => ')',
            '{' => '}',
            _ => return Err(parse_err(self.offset(), "expected '[', '(' or '{'")),
        };
        let start = self.pos + 1;
        let mut depth = 0;
        while let Some(c) = self.peek() {
            if c == open {
                depth += 1;
            } else if c == close {
                depth -= 1;
                if depth == 0 {
                    let text = self.chars[start..self.pos].iter().map(|c| c.1).collect();
                    self.pos += 1;
                    return Ok((open, text));
                }
            }
            self.pos += 1;
        }
        Err(parse_err(self.src.len(), format!("unclosed {open:?}")))
    }

    fn atom(&mut self) -> Result<Value> {
        self.skip_ws();
        let at = self.offset();
        if let Some(n) = self.integer()? {
            return Ok(Value::Scalar(QPoly::constant(Scalar::from_integer(n))));
        }
        if self.eat('(') {
            let v = self.sum()?;
            self.expect(')')?;
            return Ok(v);
        }
        let name = self.ident();
        if name.is_empty() {
            return Err(parse_err(
                at,
                match self.peek() {
                    Some(c) => format!("unexpected {c:?}"),
                    None => "unexpected end of input".into(),
                },
            ));
        }
        if name == "q" {
            return Ok(Value::Scalar(QPoly::var()));
        }
        if FUNCTIONS.contains(&name.as_str()) {
            return self.call(&name, at);
        }
        if !matches!(self.peek(), Some('[' | '(' | '{')) {
            return Err(parse_err(at, format!("unknown symbol {name:?}")));
        }
        let (open, inner) = self.bracketed()?;
        literal(&name, open, &inner).map_err(|e| match e {
            Error::Parse { msg, .. } => parse_err(at, format!("in {name} literal: {msg}")),
            other => other,
        })
    }

    fn args(&mut self) -> Result<Vec<Value>> {
        self.expect('(')?;
        let mut out = vec![self.sum()?];
        while self.eat(',') {
            out.push(self.sum()?);
        }
        self.expect(')')?;
        Ok(out)
    }

    fn call(&mut self, name: &str, at: usize) -> Result<Value> {
        if name == "to" {
            self.expect('(')?;
            let x = self.sum()?;
            self.expect(',')?;
            self.skip_ws();
            let target = self.ident();
            self.expect(')')?;
            return change_basis(x, &target).map_err(|e| relocate(e, at));
        }
        if name == "specialize" {
            self.expect('(')?;
            let x = self.sum()?;
            self.expect(',')?;
            self.skip_ws();
            let save = self.pos;
            if self.ident() != "q" || !self.eat('=') {
                self.pos = save;
            }
            let v = self.sum()?;
            self.expect(')')?;
            let v = match v {
                Value::Scalar(c) => constant(&c),
                _ => None,
            }
            .ok_or_else(|| parse_err(at, "specialize needs a rational value for q"))?;
            return specialize(x, &v);
        }
        let args = self.args()?;
        let arity = match name {
            "pair" | "qmul" | "gshuffle" => 2,
            _ => 1,
        };
        if args.len() != arity {
            return Err(parse_err(at, format!("{name} takes {arity} argument(s)")));
        }
        let mut it = args.into_iter();
        let a = it.next().expect("arity checked");
        match name {
            "pair" => pair(a, it.next().expect("arity checked")),
            "qmul" => qmul(a, it.next().expect("arity checked")),
            "gshuffle" => gshuffle(a, it.next().expect("arity checked")),
            "coproduct" => coproduct(a),
            "counit" => counit(a),
            "ev" => match a {
                Value::Mq(x) => Ok(Value::QSym(qsym_to_q(&ev(&x)))),
                other => Err(type_err(&other, "ev")),
            },
            "tev" => match a {
                Value::NSym(x) => Ok(Value::Mq(t_ev(&x)?)),
                other => Err(type_err(&other, "tev")),
            },
            "embed" => match a {
                Value::Fq(x) => Ok(Value::Mq(embed_fqsym(&fq_to_scalar(&x)?)?)),
                Value::NSym(x) => Ok(Value::Fq(fq_to_q(&x.embed_fqsym()))),
                other => Err(type_err(&other, "embed")),
            },
            "image" => match a {
                Value::Fq(x) => Ok(Value::QSym(commutative_image(&x)?)),
                Value::NSym(x) => Ok(Value::Sym(x.commutative_image())),
                Value::QSym(x) => Ok(Value::Sym(qsym_to_scalar(&x)?.to_sym()?)),
                other => Err(type_err(&other, "image")),
            },
            "phiq" => match a {
                Value::Fq(x) => Ok(Value::QSym(phi_q(&x)?)),
                other => Err(type_err(&other, "phiq")),
            },
            "pi" => match a {
                Value::Fq(x) => Ok(Value::Fq(pi_projector(&x)?)),
                other => Err(type_err(&other, "pi")),
            },
            "inverse" => match a {
                Value::Fq(x) => Ok(Value::Fq(graded_series_inverse(&x, self.opts.max_degree)?)),
                other => Err(type_err(&other, "inverse")),
            },
            _ => Err(parse_err(at, format!("unknown function {name}"))),
        }
    }
}

fn relocate(e: Error, at: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => parse_err(at, msg),
        other => other,
    }
}

fn type_err(v: &Value, what: &str) -> Error {
    Error::Type(v.algebra().to_string(), what.to_string())
}

fn constant(c: &QPoly) -> Option<Scalar> {
    match c.degree() {
        None => Some(Scalar::zero()),
        Some(0) => Some(c.coeff(0)),
        _ => None,
    }
}

fn fq_to_q(x: &FQElem) -> FQElem<QPoly> {
    FQElem::new(x.basis(), x.terms().map_coeffs(|c| QPoly::constant(c.clone())))
}

fn fq_to_scalar(x: &FQElem<QPoly>) -> Result<FQElem> {
    let mut out = LinComb::zero();
    for (s, c) in x.terms().iter() {
        out.add_term(s.clone(), constant(c).ok_or_else(|| Error::Type("ℚ[q]".into(), "FQSym over ℚ".into()))?);
    }
    Ok(FQElem::new(x.basis(), out))
}

fn qsym_to_q(x: &QSymElem) -> QSymElem<QPoly> {
    QSymElem::new(x.basis(), x.terms().map_coeffs(|c| QPoly::constant(c.clone())))
}

fn qsym_to_scalar(x: &QSymElem<QPoly>) -> Result<QSymElem> {
    let mut out = LinComb::zero();
    for (s, c) in x.terms().iter() {
        out.add_term(s.clone(), constant(c).ok_or_else(|| Error::Type("ℚ[q]".into(), "QSym over ℚ".into()))?);
    }
    Ok(QSymElem::new(x.basis(), out))
}

fn literal(name: &str, open: char, inner: &str) -> Result<Value> {
    let perm = || -> Result<Permutation> {
        if inner.trim().is_empty() {
            Ok(Permutation::identity(0))
        } else if inner.contains(',') && !inner.trim_start().starts_with('[') {
            format!("[{inner}]").parse()
        } else {
            inner.parse()
        }
    };
    let compo = || -> Result<Composition> { format!("({inner})").parse() };
    let part = || -> Result<Partition> { format!("[{inner}]").parse() };
    let fq = |b: FqBasis| -> Result<Value> { Ok(Value::Fq(FQElem::basis_element(b, perm()?))) };
    match (name, open) {
        ("F", '[') => fq(FqBasis::F),
        ("G", '[') => fq(FqBasis::G),
        ("V", '[') => fq(FqBasis::V),
        ("Fup", '[') => fq(FqBasis::FUpper),
        ("Gup", '[') => fq(FqBasis::GUpper),
        ("St", '[') => Ok(Value::Fq(fq_to_q(&free_schur(&format!("[{inner}]").parse::<Tableau>()?)?))),
        ("LR", '[') => Ok(Value::Fq(fq_to_q(&loday_ronco_f(&inner.parse::<BinTree>()?)?))),
        ("Gamma", '{') => Ok(Value::Fq(fq_to_q(&gamma_free(&inner.parse::<Poset>()?)?))),
        ("MS" | "PhiS", '[') => {
            let p = if inner.trim().is_empty() { PackedMat::empty() } else { format!("[{inner}]").parse()? };
            Ok(Value::Mq(if name == "MS" { MQElem::ms(&p) } else { MQElem::phis(&p) }))
        }
        ("F", '(') => Ok(Value::QSym(QSymElem::f(&compo()?))),
        ("M", '(') => Ok(Value::QSym(QSymElem::m(&compo()?))),
        ("S", '(') => Ok(Value::NSym(NSymElem::s(&compo()?))),
        ("R", '(') => Ok(Value::NSym(NSymElem::r(&compo()?))),
        ("s" | "h" | "m" | "p", '[') => {
            let b = match name {
                "s" => SymBasis::S,
                "h" => SymBasis::H,
                "m" => SymBasis::M,
                _ => SymBasis::P,
            };
            Ok(Value::Sym(SymElem::basis_element(b, part()?)))
        }
        ("T", '[') => Ok(Value::Hecke(HeckeElem::t_basis(&perm()?))),
        _ => Err(parse_err(0, format!("unknown basis symbol {name}{open}…"))),
    }
}

fn unit_like(v: &Value) -> Result<Value> {
    Ok(match v {
        Value::Scalar(_) => Value::Scalar(QPoly::one()),
        Value::Fq(_) => Value::Fq(FQElem::one()),
        Value::FqTensor(_) => {
            let e = Permutation::identity(0);
            Value::FqTensor(LinComb::basis((e.clone(), e)))
        }
        Value::Mq(_) => Value::Mq(MQElem::one()),
        Value::MqTensor(_) => Value::MqTensor(LinComb::basis((PackedMat::empty(), PackedMat::empty()))),
        Value::QSym(_) => Value::QSym(QSymElem::f(&Composition::empty())),
        Value::NSym(_) => Value::NSym(NSymElem::s(&Composition::empty())),
        Value::Sym(_) => Value::Sym(SymElem::basis_element(SymBasis::H, Partition::new(Vec::new())?)),
        Value::Hecke(x) => Value::Hecke(HeckeElem::one(x.rank())),
    })
}

fn scale(v: Value, c: &QPoly) -> Result<Value> {
    let rational = || constant(c).ok_or_else(|| Error::Type("ℚ[q]".into(), v.algebra().into()));
    Ok(match &v {
        Value::Scalar(x) => Value::Scalar(x.clone() * c.clone()),
        Value::Fq(x) => Value::Fq(x.scale(c)),
        Value::FqTensor(t) => Value::FqTensor(t.scale(c)),
        Value::QSym(x) => Value::QSym(x.scale(c)),
        Value::Mq(x) => Value::Mq(x.scale(&rational()?)),
        Value::MqTensor(t) => Value::MqTensor(t.scale(&rational()?)),
        Value::NSym(x) => Value::NSym(NSymElem::new(x.basis(), x.terms().scale(&rational()?))),
        Value::Sym(x) => Value::Sym(x.scale(&rational()?)),
        Value::Hecke(x) => Value::Hecke(x.scale(&rational()?)),
    })
}

fn add(a: Value, b: Value) -> Result<Value> {
    let (a, b) = match (a, b) {
        (Value::Scalar(c), b) if !matches!(b, Value::Scalar(_)) => (scale(unit_like(&b)?, &c)?, b),
        (a, Value::Scalar(c)) if !matches!(a, Value::Scalar(_)) => {
            let u = scale(unit_like(&a)?, &c)?;
            (a, u)
        }
        pair => pair,
    };
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
        (Value::Fq(x), Value::Fq(y)) => Value::Fq(x.add(&y)?),
        (Value::FqTensor(x), Value::FqTensor(y)) => Value::FqTensor(x + y),
        (Value::Mq(x), Value::Mq(y)) => Value::Mq(x.add(&y)),
        (Value::MqTensor(x), Value::MqTensor(y)) => Value::MqTensor(x + y),
        (Value::QSym(x), Value::QSym(y)) => Value::QSym(x.add(&y)),
        (Value::NSym(x), Value::NSym(y)) => {
            let y = y.to_basis(x.basis());
            Value::NSym(NSymElem::new(x.basis(), x.terms().clone() + y.terms().clone()))
        }
        (Value::Sym(x), Value::Sym(y)) => Value::Sym(x.add(&y)?),
        (Value::Hecke(x), Value::Hecke(y)) => {
            if x.rank() != y.rank() {
                return Err(Error::SizeMismatch(x.rank(), y.rank()));
            }
            Value::Hecke(x.add(&y))
        }
        (a, b) => return Err(Error::Type(a.algebra().into(), b.algebra().into())),
    })
}

fn mul(a: Value, b: Value) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
        (Value::Scalar(c), v) | (v, Value::Scalar(c)) => scale(v, &c)?,
        (Value::Fq(x), Value::Fq(y)) => Value::Fq(x.mul(&y)?),
        (Value::FqTensor(x), Value::FqTensor(y)) => Value::FqTensor(tensor_product(&x, &y)),
        (Value::Mq(x), Value::Mq(y)) => Value::Mq(x.mul(&y)),
        (Value::MqTensor(x), Value::MqTensor(y)) => Value::MqTensor(tensor_mul(&x, &y)),
        (Value::QSym(x), Value::QSym(y)) => Value::QSym(x.product(&y)),
        (Value::NSym(x), Value::NSym(y)) => Value::NSym(x.product(&y)),
        (Value::Sym(x), Value::Sym(y)) => Value::Sym(x.mul(&y)?),
        (Value::Hecke(x), Value::Hecke(y)) => Value::Hecke(x.mul(&y)?),
        (a, b) => return Err(Error::Type(a.algebra().into(), b.algebra().into())),
    })
}

fn qmul(a: Value, b: Value) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Fq(x), Value::Fq(y)) => Value::Fq(q_product(&x, &y)?),
        (Value::QSym(x), Value::QSym(y)) => Value::QSym(x.q_product(&y)),
        (a, b) => return Err(Error::Type(a.algebra().into(), b.algebra().into())),
    })
}

/// `G_α ⧢_q G_β`, extended bilinearly after rewriting both sides in G.
fn gshuffle(a: Value, b: Value) -> Result<Value> {
    let (x, y) = match (a, b) {
        (Value::Fq(x), Value::Fq(y)) => (x.to_basis(FqBasis::G)?, y.to_basis(FqBasis::G)?),
        (a, b) => return Err(Error::Type(a.algebra().into(), b.algebra().into())),
    };
    let mut out = FQElem::zero(FqBasis::G);
    for (s, c) in x.terms().iter() {
        for (t, d) in y.terms().iter() {
            out = out.add(&gbasis_q_shuffle(s, t).scale(&(c.clone() * d.clone())))?;
        }
    }
    Ok(Value::Fq(out))
}

fn pair(a: Value, b: Value) -> Result<Value> {
    let q = |s: Scalar| Value::Scalar(QPoly::constant(s));
    Ok(match (a, b) {
        (Value::Fq(x), Value::Fq(y)) => Value::Scalar(x.pair(&y)?),
        (Value::Mq(x), Value::Mq(y)) => q(x.pair(&y)),
        // ⟨S^I, M_J⟩ = δ(I = J)
        (Value::NSym(x), Value::QSym(y)) | (Value::QSym(y), Value::NSym(x)) => {
            let s = x.to_basis(NsBasis::S);
            let m = y.to_basis(QsBasis::M);
            let mut acc = QPoly::zero();
            for (i, c) in s.terms().iter() {
                acc = acc + m.terms().coeff(i) * QPoly::constant(c.clone());
            }
            Value::Scalar(acc)
        }
        // Hall inner product, Schur functions orthonormal
        (Value::Sym(x), Value::Sym(y)) => {
            let (x, y) = (x.to_schur()?, y.to_schur()?);
            q(x.terms().iter().map(|(l, c)| c.clone() * y.terms().coeff(l)).fold(Scalar::zero(), |a, b| a + b))
        }
        (a, b) => return Err(Error::Type(a.algebra().into(), b.algebra().into())),
    })
}

fn coproduct(a: Value) -> Result<Value> {
    match a {
        Value::Fq(x) => Ok(Value::FqTensor(x.coproduct()?)),
        Value::Mq(x) => Ok(Value::MqTensor(x.coproduct())),
        other => Err(type_err(&other, "coproduct")),
    }
}

fn counit(a: Value) -> Result<Value> {
    match a {
        Value::Fq(x) => Ok(Value::Scalar(x.to_f()?.terms().coeff(&Permutation::identity(0)))),
        Value::Mq(x) => Ok(Value::Scalar(QPoly::constant(x.counit()))),
        other => Err(type_err(&other, "counit")),
    }
}

fn specialize(x: Value, v: &Scalar) -> Result<Value> {
    let at = |c: &QPoly| QPoly::constant(c.eval(v));
    Ok(match x {
        Value::Scalar(c) => Value::Scalar(at(&c)),
        Value::Fq(x) => Value::Fq(FQElem::new(x.basis(), x.terms().map_coeffs(at))),
        Value::FqTensor(t) => Value::FqTensor(t.map_coeffs(at)),
        Value::QSym(x) => Value::QSym(qsym_to_q(&x.specialize(v))),
        other => other,
    })
}

fn change_basis(x: Value, target: &str) -> Result<Value> {
    let bad = || parse_err(0, format!("unknown basis {target:?}"));
    Ok(match x {
        Value::Fq(x) => {
            let b = match target {
                "F" => FqBasis::F,
                "G" => FqBasis::G,
                "V" => FqBasis::V,
                "Fup" => FqBasis::FUpper,
                "Gup" => FqBasis::GUpper,
                _ => return Err(bad()),
            };
            Value::Fq(x.to_basis(b)?)
        }
        Value::Mq(x) => Value::Mq(x.to_basis(match target {
            "MS" => MqBasis::MS,
            "PhiS" => MqBasis::PhiS,
            _ => return Err(bad()),
        })),
        Value::QSym(x) => Value::QSym(x.to_basis(match target {
            "M" => QsBasis::M,
            "F" => QsBasis::F,
            _ => return Err(bad()),
        })),
        Value::NSym(x) => Value::NSym(x.to_basis(match target {
            "S" => NsBasis::S,
            "R" => NsBasis::R,
            _ => return Err(bad()),
        })),
        Value::Sym(x) => Value::Sym(x.to_basis(match target {
            "s" => SymBasis::S,
            "h" => SymBasis::H,
            "m" => SymBasis::M,
            "p" => SymBasis::P,
            _ => return Err(bad()),
        })?),
        other => return Err(type_err(&other, "basis change")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev_str(s: &str) -> String {
        evaluate(s, EvalOptions::default()).unwrap().render()
    }

    #[test]
    fn basics() {
        assert_eq!(ev_str("F[12]*F[1]"), "F[123] + F[132] + F[312]");
        assert_eq!(ev_str("pair(F[312], G[312])"), "1");
        assert_eq!(ev_str("2*F[1] - F[1]"), "F[1]");
        assert_eq!(ev_str("MS[[1]]*MS[[1]]"), "MS[[0,1],[1,0]] + MS[[1,0],[0,1]] + MS[[1,1]]");
        assert_eq!(ev_str("pair(MS[[1,1]], MS[[1,1]])"), "0");
        assert_eq!(ev_str("ev(MS[[2,1],[1,0]])"), "M(3,1)");
        assert_eq!(ev_str("qmul(F[1], F[1])"), "F[12] + q*F[21]");
        assert_eq!(ev_str("specialize(qmul(F[1], F[1]), q=1)"), "F[12] + F[21]");
        assert_eq!(ev_str("1/2*F[1] + 1/2*F[1]"), "F[1]");
    }

    #[test]
    fn errors() {
        assert!(matches!(evaluate("F[12] * MS[[1]]", EvalOptions::default()), Err(Error::Type(..))));
        assert!(matches!(evaluate("F[12] +", EvalOptions::default()), Err(Error::Parse { .. })));
        assert!(matches!(evaluate("foo[1]", EvalOptions::default()), Err(Error::Parse { .. })));
    }
}
