//! Truncated bivariate power series in the light-cone variables `r`, `l`,
//! the discrete choice coefficients `C[Δ]^x_k`, and a brute-force count of
//! checkerboard paths by number of corners.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::report::Check;
use crate::scalar::Rational;

/// `Σ c_{ij} r^i l^j` with every term of total degree `< order` exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries {
    order: u32,
    coeffs: BTreeMap<(u32, u32), Rational>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    R,
    L,
}

/// Which of the three light-cone series.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Psi {
    /// `Σ (−1)^k r^{k+1}/(k+1)! · l^k/k!`
    R,
    /// `Σ (−1)^k r^k/k! · l^{k+1}/(k+1)!`
    L,
    /// `Σ (−1)^k r^k/k! · l^k/k!`
    Zero,
}

impl BiSeries {
    pub fn zero(order: u32) -> Self {
        BiSeries {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    /// Terms at or beyond `order` and zero coefficients are dropped.
    pub fn from_terms(order: u32, terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut s = BiSeries::zero(order);
        for (key, c) in terms {
            s.accumulate(key, c);
        }
        s
    }

    fn accumulate(&mut self, (i, j): (u32, u32), c: Rational) {
        if i + j >= self.order || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((i, j)).or_insert_with(Rational::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Drops terms of total degree `>= order`.
    pub fn truncate(&self, order: u32) -> BiSeries {
        BiSeries::from_terms(order.min(self.order), self.coeffs.iter().map(|(k, c)| (*k, c.clone())))
    }

    /// Sum, valid to the smaller of the two orders.
    pub fn add(&self, other: &BiSeries) -> BiSeries {
        let mut out = self.truncate(other.order);
        for (k, c) in &other.coeffs {
            out.accumulate(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> BiSeries {
        BiSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &BiSeries) -> BiSeries {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rational) -> BiSeries {
        BiSeries::from_terms(self.order, self.coeffs.iter().map(|(k, c)| (*k, c * r)))
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (n, ((i, j), c)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*r^{i}*l^{j}")?;
        }
        write!(f, " + O({})", self.order)
    }
}

fn sign(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `r^i/i! · l^j/j!` coefficient.
fn monomial(i: u32, j: u32) -> Rational {
    (&Rational::factorial(i) * &Rational::factorial(j))
        .recip()
        .expect("factorials are nonzero")
}

pub fn series_psi(which: Psi, order: u32) -> Result<BiSeries> {
    if order < 1 {
        return Err(Error::InvalidArgument("series order must be at least 1".into()));
    }
    let (dr, dl) = match which {
        Psi::R => (1, 0),
        Psi::L => (0, 1),
        Psi::Zero => (0, 0),
    };
    Ok(BiSeries::from_terms(
        order,
        (0..order).map(|k| ((k + dr, k + dl), &sign(k) * &monomial(k + dr, k + dl))),
    ))
}

/// `cos(r + l)` and `sin(r + l)`, expanded as
/// `e^{i(r+l)} = Σ_n i^n Σ_{a+b=n} r^a/a! · l^b/b!`.
pub fn series_cos_sin(order: u32) -> (BiSeries, BiSeries) {
    let mut cos = BiSeries::zero(order);
    let mut sin = BiSeries::zero(order);
    for n in 0..order {
        let s = sign(n / 2);
        for a in 0..=n {
            let c = &s * &monomial(a, n - a);
            if n % 2 == 0 {
                cos.accumulate((a, n - a), c);
            } else {
                sin.accumulate((a, n - a), c);
            }
        }
    }
    (cos, sin)
}

/// Term-by-term derivative; the result is exact to order `N − 1`.
pub fn series_diff(s: &BiSeries, var: Var) -> BiSeries {
    let order = s.order.saturating_sub(1);
    BiSeries::from_terms(
        order,
        s.coeffs.iter().filter_map(|(&(i, j), c)| match var {
            Var::R if i > 0 => Some(((i - 1, j), c * &Rational::from(i64::from(i)))),
            Var::L if j > 0 => Some(((i, j - 1), c * &Rational::from(i64::from(j)))),
            _ => None,
        }),
    )
}

/// Exact partial sum at `(r, l)`.
pub fn eval_series(s: &BiSeries, r: &Rational, l: &Rational) -> Rational {
    s.coeffs.iter().fold(Rational::zero(), |acc, ((i, j), c)| {
        &acc + &(&(c * &r.pow(*i)) * &l.pow(*j))
    })
}

/// The exact partial sum, rounded once.
pub fn eval_float(s: &BiSeries, r: &Rational, l: &Rational) -> f64 {
    eval_series(s, r, l).to_f64()
}

fn residual_check(label: &str, description: &str, residual: &BiSeries) -> Check {
    let detail = residual
        .terms()
        .next()
        .map(|((i, j), c)| format!("first nonzero residual coefficient: r^{i} l^{j} -> {c}"));
    Check::new(label, description, residual.is_zero()).or_counterexample(detail)
}

/// Checks the `m = 1` light-cone system `∂ψ₁/∂l = ψ₂`, `∂ψ₂/∂r = −ψ₁` for
/// `ψ₁ = ψ₀ + ψ_L`, `ψ₂ = ψ₀ − ψ_R` and for `ψ₁ = sin(r+l)`,
/// `ψ₂ = cos(r+l)`, comparing every coefficient of degree `< N − 1`.
pub fn check_lightcone_series(order: u32) -> Result<Vec<Check>> {
    if order < 2 {
        return Err(Error::InvalidArgument("series order must be at least 2".into()));
    }
    let psi0 = series_psi(Psi::Zero, order)?;
    let psi_r = series_psi(Psi::R, order)?;
    let psi_l = series_psi(Psi::L, order)?;
    let psi1 = psi0.add(&psi_l);
    let psi2 = psi0.sub(&psi_r);
    let (cos, sin) = series_cos_sin(order);
    let below = order - 1;
    Ok(vec![
        residual_check(
            "psi0_dr",
            &format!("d psi0/dr = -psi_L below degree {below}"),
            &series_diff(&psi0, Var::R).add(&psi_l),
        ),
        residual_check(
            "dl_psi1",
            &format!("d psi1/dl = psi2 below degree {below}, psi1 = psi0 + psi_L"),
            &series_diff(&psi1, Var::L).sub(&psi2),
        ),
        residual_check(
            "dr_psi2",
            &format!("d psi2/dr = -psi1 below degree {below}, psi2 = psi0 - psi_R"),
            &series_diff(&psi2, Var::R).add(&psi1),
        ),
        residual_check(
            "dl_sin",
            &format!("d sin(r+l)/dl = cos(r+l) below degree {below}"),
            &series_diff(&sin, Var::L).sub(&cos),
        ),
        residual_check(
            "dr_cos",
            &format!("d cos(r+l)/dr = -sin(r+l) below degree {below}"),
            &series_diff(&cos, Var::R).add(&sin),
        ),
    ])
}

/// `C[Δ]^x_k = x(x−Δ)(x−2Δ)⋯(x−(k−1)Δ)/k!`.
pub fn choice_coeff(x: &Rational, delta: &Rational, k: u32) -> Rational {
    let falling = (0..k).fold(Rational::one(), |acc, j| {
        &acc * &(x - &(delta * &Rational::from(i64::from(j))))
    });
    &falling * &Rational::factorial(k).recip().expect("nonzero")
}

/// A unit step along the light-cone rectangle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Right,
    Left,
}

fn for_each_path(r: u32, l: u32, prefix: &mut Vec<Step>, visit: &mut impl FnMut(&[Step])) {
    if r == 0 && l == 0 {
        visit(prefix);
        return;
    }
    for (step, left_r, left_l) in [(Step::Right, r.wrapping_sub(1), l), (Step::Left, r, l.wrapping_sub(1))] {
        if (step == Step::Right && r == 0) || (step == Step::Left && l == 0) {
            continue;
        }
        prefix.push(step);
        for_each_path(left_r, left_l, prefix, visit);
        prefix.pop();
    }
}

fn corners(path: &[Step]) -> u32 {
    path.windows(2).filter(|w| w[0] != w[1]).count() as u32
}

fn count_paths(r: u32, l: u32, c: u32, first: Option<Step>) -> u64 {
    let mut count = 0;
    for_each_path(r, l, &mut Vec::new(), &mut |p| {
        if corners(p) == c && first.is_none_or(|s| p.first() == Some(&s)) {
            count += 1;
        }
    });
    count
}

/// Number of lattice paths with `r` right-steps and `l` left-steps that
/// change direction exactly `c` times. Found by enumerating every path.
pub fn path_count_oracle(r: u32, l: u32, c: u32) -> u64 {
    count_paths(r, l, c, None)
}

/// As [`path_count_oracle`], restricted to paths whose first step is `first`.
pub fn path_count_starting(r: u32, l: u32, c: u32, first: Step) -> u64 {
    count_paths(r, l, c, Some(first))
}
