//! Cayley–Dickson doubling over the rationals, for contrast with the hat
//! construction: here conjugation reverses products and associativity is
//! lost at level 3 (octonions).
//!
//! An element of level `ℓ` is stored as its `2^ℓ` coefficients; the first
//! half is `a` and the second half `b` in `a + Jb`, recursively.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Rational;

pub const MAX_LEVEL: usize = 4;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CDElement {
    level: usize,
    coeffs: Vec<Rational>,
}

impl CDElement {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        let len = coeffs.len();
        if !len.is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "coefficient count {len} is not a power of two"
            )));
        }
        let level = len.trailing_zeros() as usize;
        if level > MAX_LEVEL {
            return Err(Error::UnsupportedLevel(level));
        }
        Ok(CDElement { level, coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        CDElement::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero(level: usize) -> Result<Self> {
        if level > MAX_LEVEL {
            return Err(Error::UnsupportedLevel(level));
        }
        CDElement::from_coeffs(vec![Rational::zero(); 1 << level])
    }

    pub fn one(level: usize) -> Result<Self> {
        CDElement::basis(level, 0)
    }

    /// The unit `e_k`: a single 1 in slot `k`.
    pub fn basis(level: usize, k: usize) -> Result<Self> {
        let mut z = CDElement::zero(level)?;
        if k >= z.coeffs.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: z.coeffs.len() - 1,
            });
        }
        z.coeffs[k] = Rational::one();
        Ok(z)
    }

    /// `(a, b) ↦ a + Jb` for two elements of the previous level.
    pub fn pair(a: &CDElement, b: &CDElement) -> Result<Self> {
        if a.level != b.level {
            return Err(Error::LevelMismatch {
                left: a.level,
                right: b.level,
            });
        }
        CDElement::from_coeffs(a.coeffs.iter().chain(&b.coeffs).cloned().collect())
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn dimension(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn scalar_part(&self) -> &Rational {
        &self.coeffs[0]
    }

    fn check_level(&self, other: &CDElement) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CDElement) -> Result<CDElement> {
        self.check_level(other)?;
        Ok(CDElement {
            level: self.level,
            coeffs: add(&self.coeffs, &other.coeffs),
        })
    }

    pub fn sub(&self, other: &CDElement) -> Result<CDElement> {
        self.check_level(other)?;
        Ok(CDElement {
            level: self.level,
            coeffs: sub(&self.coeffs, &other.coeffs),
        })
    }

    pub fn neg(&self) -> CDElement {
        CDElement {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// `N(x)`: the scalar part of `x · conj(x)`.
    pub fn norm(&self) -> Rational {
        mul(&self.coeffs, &conj(&self.coeffs))[0].clone()
    }
}

fn add(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn conj(x: &[Rational]) -> Vec<Rational> {
    if x.len() == 1 {
        return x.to_vec();
    }
    let (a, b) = x.split_at(x.len() / 2);
    let mut out = conj(a);
    out.extend(b.iter().map(|c| -c));
    out
}

/// `(a + Jb)(c + Jd) = (ac − d b̄) + J(cb + ā d)`.
fn mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let mut out = sub(&mul(a, c), &mul(d, &conj(b)));
    out.extend(add(&mul(c, b), &mul(&conj(a), d)));
    out
}

pub fn cd_mul(x: &CDElement, y: &CDElement) -> Result<CDElement> {
    x.check_level(y)?;
    Ok(CDElement {
        level: x.level,
        coeffs: mul(&x.coeffs, &y.coeffs),
    })
}

/// `conj(a + Jb) = ā − Jb`.
pub fn cd_conj(x: &CDElement) -> CDElement {
    CDElement {
        level: x.level,
        coeffs: conj(&x.coeffs),
    }
}

/// `(xy)z − x(yz)`.
pub fn associator(x: &CDElement, y: &CDElement, z: &CDElement) -> Result<CDElement> {
    cd_mul(&cd_mul(x, y)?, z)?.sub(&cd_mul(x, &cd_mul(y, z)?)?)
}

/// A basis triple `(i, j, k)` with non-zero associator and its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatorWitness {
    pub indices: (usize, usize, usize),
    pub value: CDElement,
}

/// Exhaustive search over basis triples in lexicographic order; `None`
/// means the level is associative on the basis (hence everywhere).
pub fn find_associator_witness(level: usize) -> Result<Option<AssociatorWitness>> {
    let dim = 1usize << level;
    let basis: Vec<CDElement> = (0..dim).map(|k| CDElement::basis(level, k)).collect::<Result<_>>()?;
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let value = associator(&basis[i], &basis[j], &basis[k])?;
                if !value.is_zero() {
                    return Ok(Some(AssociatorWitness {
                        indices: (i, j, k),
                        value,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Multiplication table of basis units: entry `[i][j]` is `(sign, k)` with
/// `e_i e_j = sign · e_k`.
pub fn basis_table(level: usize) -> Result<Vec<Vec<(i8, usize)>>> {
    let dim = 1usize << level;
    let mut table = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(dim);
        for j in 0..dim {
            let p = cd_mul(&CDElement::basis(level, i)?, &CDElement::basis(level, j)?)?;
            let (k, c) = p
                .coeffs
                .iter()
                .enumerate()
                .find(|(_, c)| !c.is_zero())
                .expect("product of units is a signed unit");
            row.push((if c.is_negative() { -1 } else { 1 }, k));
        }
        table.push(row);
    }
    Ok(table)
}

/// `(c0,c1,...)`.
impl fmt::Display for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for CDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CDElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, "expected (c0,c1,...)"))?;
        CDElement::from_coeffs(inner.split(',').map(str::parse).collect::<Result<_>>()?)
    }
}
