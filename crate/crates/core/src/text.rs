//! Text expressions for Clifford and group algebra elements.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' digits)?
//! atom  := rational | 'i' | '[' scalar (',' scalar)* ']' | ident | '(' expr ')'
//! ```
//!
//! In a Clifford algebra an identifier is `h` (the first generator) or a
//! word such as `h1h3h2`; in a group algebra it is a group label. `−`
//! (U+2212) is accepted as a minus sign. Error positions count characters.

use std::fmt;

use crate::clifford::{iterate_clifford, CliffordAlgebra, CliffordElement};
use crate::error::{Error, Result};
use crate::group_algebra::{clifford_as_group_algebra, GroupAlgebra, GroupAlgebraElement};
use crate::hat::{ComplexScalar, InvolutiveAlgebra};
use crate::iterant::Iterant;
use crate::matrix::{permutation_image, to_matrix, Matrix};
use crate::scalar::{GaussianRational, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Scalar(GaussianRational),
    Iterant(Iterant, usize),
    Ident(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.take_while(|c| c.is_ascii_digit());
            let exp = digits
                .parse()
                .map_err(|_| Error::parse(start, "expected a nonnegative exponent"))?;
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| f(*c)) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = match self.peek() {
            None => return Err(Error::parse(self.pos, "unexpected end of input")),
            Some(_) => self.pos,
        };
        let c = self.chars[start];
        if c == '(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(')') {
                return Err(Error::parse(self.pos, "expected `)`"));
            }
            Ok(e)
        } else if c == '[' {
            let close = self.chars[start..]
                .iter()
                .position(|&c| c == ']')
                .map(|k| start + k)
                .ok_or_else(|| Error::parse(start, "unclosed `[`"))?;
            let body: String = self.chars[start..=close].iter().collect();
            self.pos = close + 1;
            let v = body.parse::<Iterant>().map_err(|e| shift(e, start))?;
            Ok(Expr::Iterant(v, start))
        } else if c.is_ascii_digit() {
            let text = self.take_while(|c| c.is_ascii_digit() || c == '/');
            let q = text.parse::<Rational>().map_err(|e| shift(e, start))?;
            Ok(Expr::Scalar(q.into()))
        } else if c.is_alphabetic() || c == '_' {
            let name = self.take_while(|c| c.is_alphanumeric() || c == '_');
            if name == "i" {
                Ok(Expr::Scalar(GaussianRational::i()))
            } else {
                Ok(Expr::Ident(name, start))
            }
        } else {
            Err(Error::parse(start, format!("unexpected `{c}`")))
        }
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::parse(pos + by, msg),
        other => other,
    }
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let chars = src.chars().map(|c| if c == '\u{2212}' { '-' } else { c }).collect();
    let mut p = Parser { chars, pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(Error::parse(p.pos, format!("unexpected `{c}`")));
    }
    Ok(e)
}

trait Context {
    type V: Clone;
    fn constant(&self, z: &GaussianRational, pos: usize) -> Result<Self::V>;
    fn iterant(&self, v: &Iterant, pos: usize) -> Result<Self::V>;
    fn ident(&self, name: &str, pos: usize) -> Result<Self::V>;
    fn one(&self) -> Self::V;
    fn add(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    fn sub(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Result<Self::V>;
    fn neg(&self, a: &Self::V) -> Self::V;
}

fn eval<C: Context>(ctx: &C, e: &Expr) -> Result<C::V> {
    match e {
        Expr::Scalar(z) => ctx.constant(z, 0),
        Expr::Iterant(v, pos) => ctx.iterant(v, *pos),
        Expr::Ident(name, pos) => ctx.ident(name, *pos),
        Expr::Neg(a) => Ok(ctx.neg(&eval(ctx, a)?)),
        Expr::Add(a, b) => ctx.add(&eval(ctx, a)?, &eval(ctx, b)?),
        Expr::Sub(a, b) => ctx.sub(&eval(ctx, a)?, &eval(ctx, b)?),
        Expr::Mul(a, b) => ctx.mul(&eval(ctx, a)?, &eval(ctx, b)?),
        Expr::Pow(a, k) => {
            let base = eval(ctx, a)?;
            (0..*k).try_fold(ctx.one(), |acc, _| ctx.mul(&acc, &base))
        }
    }
}

/// Base algebras that can be written down in expressions.
pub trait TextBase: InvolutiveAlgebra {
    /// `z · 1`, if the base contains it.
    fn from_scalar(unit: &Self, z: &GaussianRational) -> Option<Self>;
    fn from_iterant(unit: &Self, v: &Iterant) -> Option<Self>;
}

impl TextBase for Rational {
    fn from_scalar(_: &Self, z: &GaussianRational) -> Option<Self> {
        z.is_real().then(|| z.re.clone())
    }
    fn from_iterant(_: &Self, _: &Iterant) -> Option<Self> {
        None
    }
}

impl TextBase for ComplexScalar {
    fn from_scalar(_: &Self, z: &GaussianRational) -> Option<Self> {
        Some(ComplexScalar(z.clone()))
    }
    fn from_iterant(_: &Self, _: &Iterant) -> Option<Self> {
        None
    }
}

impl TextBase for GaussianRational {
    fn from_scalar(_: &Self, z: &GaussianRational) -> Option<Self> {
        Some(z.clone())
    }
    fn from_iterant(_: &Self, _: &Iterant) -> Option<Self> {
        None
    }
}

impl TextBase for Iterant {
    fn from_scalar(unit: &Self, z: &GaussianRational) -> Option<Self> {
        Some(unit.scale(z))
    }
    fn from_iterant(unit: &Self, v: &Iterant) -> Option<Self> {
        (v.len() == unit.len()).then(|| v.clone())
    }
}

/// Reads `h` or `h<k>h<k>...` into a generator word.
fn generator_word(name: &str, pos: usize) -> Result<Vec<usize>> {
    if name == "h" {
        return Ok(vec![1]);
    }
    let bad = || Error::parse(pos, format!("unknown identifier `{name}`; expected h or h1h2..."));
    let mut word = Vec::new();
    for part in name.split('h').skip(1) {
        word.push(part.parse::<usize>().ok().filter(|&k| k >= 1).ok_or_else(bad)?);
    }
    if !name.starts_with('h') || word.is_empty() {
        return Err(bad());
    }
    Ok(word)
}

struct CliffordCtx<'a, A: InvolutiveAlgebra> {
    alg: &'a CliffordAlgebra<A>,
    unit: A,
}

impl<A: TextBase> Context for CliffordCtx<'_, A> {
    type V = CliffordElement<A>;
    fn constant(&self, z: &GaussianRational, pos: usize) -> Result<Self::V> {
        A::from_scalar(&self.unit, z)
            .map(|a| self.alg.scalar(a))
            .ok_or_else(|| Error::parse(pos, format!("scalar {z} is not in the base algebra")))
    }
    fn iterant(&self, v: &Iterant, pos: usize) -> Result<Self::V> {
        A::from_iterant(&self.unit, v)
            .map(|a| self.alg.scalar(a))
            .ok_or_else(|| Error::parse(pos, format!("iterant {v} is not in the base algebra")))
    }
    fn ident(&self, name: &str, pos: usize) -> Result<Self::V> {
        let word = generator_word(name, pos)?;
        self.alg
            .word(&word, self.unit.clone())
            .map_err(|e| Error::parse(pos, e.to_string()))
    }
    fn one(&self) -> Self::V {
        self.alg.one()
    }
    fn add(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        Ok(a.add(b))
    }
    fn sub(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        Ok(a.sub(b))
    }
    fn mul(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        Ok(a.mul(b))
    }
    fn neg(&self, a: &Self::V) -> Self::V {
        a.neg()
    }
}

/// Parses an element of `alg`; the inverse of its `Display`.
pub fn parse_clifford<A: TextBase>(src: &str, alg: &CliffordAlgebra<A>) -> Result<CliffordElement<A>> {
    let unit = alg.one().coefficient(&[]);
    eval(&CliffordCtx { alg, unit }, &parse_expr(src)?)
}

struct GroupCtx<'a>(&'a GroupAlgebra);

impl Context for GroupCtx<'_> {
    type V = GroupAlgebraElement;
    fn constant(&self, z: &GaussianRational, _: usize) -> Result<Self::V> {
        Ok(self.0.scalar(z.clone()))
    }
    fn iterant(&self, v: &Iterant, pos: usize) -> Result<Self::V> {
        self.0.iterant(v.clone()).map_err(|e| Error::parse(pos, e.to_string()))
    }
    fn ident(&self, name: &str, pos: usize) -> Result<Self::V> {
        self.0.element(name).map_err(|e| Error::parse(pos, e.to_string()))
    }
    fn one(&self) -> Self::V {
        self.0.one()
    }
    fn add(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        a.try_add(b)
    }
    fn sub(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        a.try_sub(b)
    }
    fn mul(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        crate::group_algebra::ga_mul(a, b)
    }
    fn neg(&self, a: &Self::V) -> Self::V {
        -a
    }
}

/// Parses an element of a group algebra; identifiers are group labels.
pub fn parse_group_element(src: &str, alg: &GroupAlgebra) -> Result<GroupAlgebraElement> {
    eval(&GroupCtx(alg), &parse_expr(src)?)
}

/// Base algebra for [`eval_clifford`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    /// Iterants if any appear, complex scalars if `i` appears, else rationals.
    Auto,
    Real,
    /// Gaussian rationals commuting with every generator.
    Complex,
    /// Gaussian rationals with conjugation as the involution.
    Gaussian,
    Iterant,
}

/// A Clifford element over a base chosen at run time.
#[derive(Clone, Debug, PartialEq)]
pub enum CliffordValue {
    Real(CliffordElement<Rational>),
    Complex(CliffordElement<ComplexScalar>),
    Gaussian(CliffordElement<GaussianRational>),
    Iterant(CliffordElement<Iterant>),
}

impl fmt::Display for CliffordValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordValue::Real(x) => x.fmt(f),
            CliffordValue::Complex(x) => x.fmt(f),
            CliffordValue::Gaussian(x) => x.fmt(f),
            CliffordValue::Iterant(x) => x.fmt(f),
        }
    }
}

#[derive(Default)]
struct Survey {
    generators: usize,
    iterant_len: Option<usize>,
    has_i: bool,
}

fn survey(e: &Expr, s: &mut Survey) -> Result<()> {
    match e {
        Expr::Scalar(z) => s.has_i |= !z.is_real(),
        Expr::Iterant(v, pos) => match s.iterant_len {
            Some(n) if n != v.len() => {
                return Err(Error::parse(
                    *pos,
                    format!("iterant of length {} where {n} expected", v.len()),
                ))
            }
            _ => s.iterant_len = Some(v.len()),
        },
        Expr::Ident(name, pos) => {
            let max = generator_word(name, *pos)?.into_iter().max().unwrap_or(0);
            s.generators = s.generators.max(max);
        }
        Expr::Neg(a) | Expr::Pow(a, _) => survey(a, s)?,
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            survey(a, s)?;
            survey(b, s)?;
        }
    }
    Ok(())
}

/// Evaluates `src` in `A^[n]`, where `n` is the largest generator index
/// used (at least `min_generators`) and `A` is chosen by `base`.
pub fn eval_clifford(src: &str, base: Base, min_generators: usize) -> Result<CliffordValue> {
    let expr = parse_expr(src)?;
    let mut s = Survey::default();
    survey(&expr, &mut s)?;
    let n = s.generators.max(min_generators);
    let base = match base {
        Base::Auto if s.iterant_len.is_some() => Base::Iterant,
        Base::Auto if s.has_i => Base::Complex,
        Base::Auto => Base::Real,
        b => b,
    };
    fn run<A: TextBase>(expr: &Expr, unit: A, n: usize) -> Result<CliffordElement<A>> {
        let alg = iterate_clifford(unit.clone(), n);
        eval(&CliffordCtx { alg: &alg, unit }, expr)
    }
    Ok(match base {
        Base::Real | Base::Auto => CliffordValue::Real(run(&expr, Rational::one(), n)?),
        Base::Complex => CliffordValue::Complex(run(&expr, ComplexScalar(GaussianRational::one()), n)?),
        Base::Gaussian => CliffordValue::Gaussian(run(&expr, GaussianRational::one(), n)?),
        Base::Iterant => {
            let len = s.iterant_len.unwrap_or(2);
            CliffordValue::Iterant(run(&expr, Iterant::one(len), n)?)
        }
    })
}

impl CliffordValue {
    /// Matrix image: over `R²` with one generator, `a + bη ↦ a + b s` in
    /// `(R²)^[C2]`; over the rationals, the regular image of the group
    /// algebra realisation. Other bases have no matrix image here.
    pub fn matrix_image(&self) -> Result<Matrix> {
        match self {
            CliffordValue::Iterant(x) if x.level() == 1 && x.coefficient(&[]).len() == 2 => {
                let alg = GroupAlgebra::cyclic(2)?;
                let g = alg.from_terms([("e", x.coefficient(&[])), ("s", x.coefficient(&[1]))])?;
                to_matrix(&g)
            }
            CliffordValue::Real(x) => {
                let emb = clifford_as_group_algebra(x.level())?;
                Ok(permutation_image(&emb.map(x)?))
            }
            _ => Err(Error::InvalidArgument(
                "matrix image needs a rational base, or iterants of length 2 with one generator".into(),
            )),
        }
    }
}
