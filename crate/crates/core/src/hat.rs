//! The hat construction `Â = {a + bη}` over an associative algebra with a
//! homomorphic involution, and the brace algebra `{x}` that it is
//! isomorphic to via `η = {1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::iterant::Iterant;
use crate::scalar::{GaussianRational, Rational};

/// An associative unital algebra over the rationals with an involution
/// satisfying `1⋆ = 1`, `a⋆⋆ = a` and `(ab)⋆ = a⋆b⋆` (order preserved).
///
/// Elements carry their own shape (e.g. iterant length); combining elements
/// of different shapes is a caller error and may panic.
pub trait InvolutiveAlgebra: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn star(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn scale_by(&self, r: &Rational) -> Self;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }
}

/// The reals (rationals here) with the identity involution.
impl InvolutiveAlgebra for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn star(&self) -> Self {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn scale_by(&self, r: &Rational) -> Self {
        self * r
    }
}

/// The complex numbers with conjugation as involution.
impl InvolutiveAlgebra for GaussianRational {
    fn zero_like(&self) -> Self {
        GaussianRational::zero()
    }
    fn one_like(&self) -> Self {
        GaussianRational::one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn star(&self) -> Self {
        self.conj()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn scale_by(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

/// Complex scalars with the identity involution: a copy of `C` that commutes
/// with every `η`, i.e. scalar extension of a real construction.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ComplexScalar(pub GaussianRational);

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl InvolutiveAlgebra for ComplexScalar {
    fn zero_like(&self) -> Self {
        ComplexScalar(GaussianRational::zero())
    }
    fn one_like(&self) -> Self {
        ComplexScalar(GaussianRational::one())
    }
    fn plus(&self, rhs: &Self) -> Self {
        ComplexScalar(&self.0 + &rhs.0)
    }
    fn times(&self, rhs: &Self) -> Self {
        ComplexScalar(&self.0 * &rhs.0)
    }
    fn negate(&self) -> Self {
        ComplexScalar(-&self.0)
    }
    fn star(&self) -> Self {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn scale_by(&self, r: &Rational) -> Self {
        ComplexScalar(self.0.scale(r))
    }
}

/// `R^n` with coordinatewise operations and coordinate reversal as the
/// involution; for `n = 2` this is the swap `[a,b]⋆ = [b,a]`.
impl InvolutiveAlgebra for Iterant {
    fn zero_like(&self) -> Self {
        Iterant::zero(self.len())
    }
    fn one_like(&self) -> Self {
        Iterant::one(self.len())
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn star(&self) -> Self {
        self.reversed()
    }
    fn is_zero(&self) -> bool {
        Iterant::is_zero(self)
    }
    fn scale_by(&self, r: &Rational) -> Self {
        self.scale(&GaussianRational::from(r.clone()))
    }
}

/// `a + bη` over a base algebra `A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HatElement<A> {
    pub a: A,
    pub b: A,
}

impl<A: InvolutiveAlgebra> HatElement<A> {
    pub fn new(a: A, b: A) -> Self {
        HatElement { a, b }
    }

    /// The base element `a` viewed as `a + 0η`.
    pub fn base(a: A) -> Self {
        let b = a.zero_like();
        HatElement { a, b }
    }

    /// `η` itself; `unit` only supplies the shape of the base algebra.
    pub fn eta(unit: &A) -> Self {
        HatElement {
            a: unit.zero_like(),
            b: unit.one_like(),
        }
    }
}

/// `(a + bη)(c + dη) = (ac + bd⋆) + (ad + bc⋆)η`.
pub fn hat_mul<A: InvolutiveAlgebra>(p: &HatElement<A>, q: &HatElement<A>) -> HatElement<A> {
    let (a, b, c, d) = (&p.a, &p.b, &q.a, &q.b);
    HatElement {
        a: a.times(c).plus(&b.times(&d.star())),
        b: a.times(d).plus(&b.times(&c.star())),
    }
}

/// `(a + bη)⋆ = a⋆ − b⋆η`.
pub fn hat_star<A: InvolutiveAlgebra>(p: &HatElement<A>) -> HatElement<A> {
    HatElement {
        a: p.a.star(),
        b: p.b.star().negate(),
    }
}

impl<A: InvolutiveAlgebra> InvolutiveAlgebra for HatElement<A> {
    fn zero_like(&self) -> Self {
        HatElement {
            a: self.a.zero_like(),
            b: self.a.zero_like(),
        }
    }
    fn one_like(&self) -> Self {
        HatElement::base(self.a.one_like())
    }
    fn plus(&self, rhs: &Self) -> Self {
        HatElement {
            a: self.a.plus(&rhs.a),
            b: self.b.plus(&rhs.b),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        hat_mul(self, rhs)
    }
    fn negate(&self) -> Self {
        HatElement {
            a: self.a.negate(),
            b: self.b.negate(),
        }
    }
    fn star(&self) -> Self {
        hat_star(self)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn scale_by(&self, r: &Rational) -> Self {
        HatElement {
            a: self.a.scale_by(r),
            b: self.b.scale_by(r),
        }
    }
}

impl<A: fmt::Debug> fmt::Debug for HatElement<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})η", self.a, self.b)
    }
}

/// `(A + Bη).C = AC + BC⋆` for `A, B, C` in `R × R`: the analogue of a
/// 2×2 matrix acting on a column vector.
pub fn hat_vector_action(m: &HatElement<Iterant>, c: &Iterant) -> Result<Iterant> {
    for len in [m.a.len(), m.b.len(), c.len()] {
        if len != 2 {
            return Err(Error::LengthMismatch { left: 2, right: len });
        }
    }
    m.a.try_mul(c)?.try_add(&m.b.try_mul(&c.reversed())?)
}

/// A single monomial of the brace algebra: `x` or `{x}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraceElement<A> {
    pub x: A,
    pub braced: bool,
}

/// `x + {y}`, with the unbraced and braced parts kept separately.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraceSum<A> {
    pub plain: A,
    pub braced: A,
}

impl<A: InvolutiveAlgebra> BraceSum<A> {
    pub fn new(plain: A, braced: A) -> Self {
        BraceSum { plain, braced }
    }

    pub fn plain(x: A) -> Self {
        let braced = x.zero_like();
        BraceSum { plain: x, braced }
    }

    pub fn braced(x: A) -> Self {
        let plain = x.zero_like();
        BraceSum { plain, braced: x }
    }

    fn monomials(&self) -> [BraceElement<A>; 2] {
        [
            BraceElement {
                x: self.plain.clone(),
                braced: false,
            },
            BraceElement {
                x: self.braced.clone(),
                braced: true,
            },
        ]
    }

    fn accumulate(&mut self, m: BraceElement<A>) {
        if m.braced {
            self.braced = self.braced.plus(&m.x);
        } else {
            self.plain = self.plain.plus(&m.x);
        }
    }
}

/// Product of two monomials by the rules `{x}{y} = xy⋆`, `x{y} = {xy}`
/// and `{x}y = {xy⋆}`.
pub fn brace_monomial_mul<A: InvolutiveAlgebra>(u: &BraceElement<A>, v: &BraceElement<A>) -> BraceElement<A> {
    match (u.braced, v.braced) {
        (false, false) => BraceElement {
            x: u.x.times(&v.x),
            braced: false,
        },
        (true, true) => BraceElement {
            x: u.x.times(&v.x.star()),
            braced: false,
        },
        (false, true) => BraceElement {
            x: u.x.times(&v.x),
            braced: true,
        },
        (true, false) => BraceElement {
            x: u.x.times(&v.x.star()),
            braced: true,
        },
    }
}

/// Bilinear extension of [`brace_monomial_mul`].
pub fn brace_mul<A: InvolutiveAlgebra>(u: &BraceSum<A>, v: &BraceSum<A>) -> BraceSum<A> {
    let zero = u.plain.zero_like();
    let mut out = BraceSum::new(zero.clone(), zero);
    for mu in u.monomials() {
        for mv in v.monomials() {
            out.accumulate(brace_monomial_mul(&mu, &mv));
        }
    }
    out
}

/// `x + {y} ↦ x + yη`, i.e. `η = {1}`.
pub fn brace_to_hat<A: InvolutiveAlgebra>(u: &BraceSum<A>) -> HatElement<A> {
    HatElement::new(u.plain.clone(), u.braced.clone())
}
