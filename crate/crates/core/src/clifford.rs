//! Normal-form arithmetic for the iterated construction `A^[n]`.
//!
//! An element is a finite sum `Σ c_S η_S` where `S` is a strictly increasing
//! list of generator indices in `1..=n`. Coefficients sit to the left of the
//! generators; moving a coefficient across a generator applies the base
//! involution (`η_k a = a⋆ η_k`).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hat::{HatElement, InvolutiveAlgebra};
use crate::scalar::Rational;

/// Reduces a word in the generators to `±η_S` by adjacent transpositions.
/// Returns `(negative, S)`.
pub fn normalize_word(word: &[usize], n: usize) -> Result<(bool, Vec<usize>)> {
    if let Some(&bad) = word.iter().find(|&&k| k == 0 || k > n) {
        return Err(Error::IndexOutOfRange { index: bad, max: n });
    }
    let mut w = word.to_vec();
    let mut negative = false;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < w.len() {
            if w[i] == w[i + 1] {
                w.drain(i..i + 2);
                changed = true;
                i = i.saturating_sub(1);
            } else if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                negative = !negative;
                changed = true;
                i += 1;
            } else {
                i += 1;
            }
        }
        if !changed {
            return Ok((negative, w));
        }
    }
}

/// `η_S η_T` for sorted `S`, `T`: the sign is the parity of pairs
/// `s > t`, the support is the symmetric difference.
fn merge_blades(s: &[usize], t: &[usize]) -> (bool, Vec<usize>) {
    let mut inversions = 0usize;
    for &a in s {
        inversions += t.iter().filter(|&&b| a > b).count();
    }
    let mut out = Vec::with_capacity(s.len() + t.len());
    let (mut i, mut j) = (0, 0);
    while i < s.len() || j < t.len() {
        match (s.get(i), t.get(j)) {
            (Some(a), Some(b)) if a == b => {
                i += 1;
                j += 1;
            }
            (Some(a), Some(b)) if a < b => {
                out.push(*a);
                i += 1;
            }
            (Some(a), None) => {
                out.push(*a);
                i += 1;
            }
            (_, Some(b)) => {
                out.push(*b);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    (inversions % 2 == 1, out)
}

fn star_pow<A: InvolutiveAlgebra>(a: &A, k: usize) -> A {
    if k % 2 == 1 {
        a.star()
    } else {
        a.clone()
    }
}

/// An element of `A^[n]` in sorted-subset normal form.
#[derive(Clone, PartialEq)]
pub struct CliffordElement<A> {
    n: usize,
    unit: A,
    terms: BTreeMap<Vec<usize>, A>,
}

/// Handle for the algebra `A^[n]`.
#[derive(Clone, Debug)]
pub struct CliffordAlgebra<A> {
    n: usize,
    unit: A,
}

/// `A^[n]`, the construction iterated `n` times over the base whose unit is
/// `base_unit`. `n = 0` gives the base algebra itself.
pub fn iterate_clifford<A: InvolutiveAlgebra>(base_unit: A, n: usize) -> CliffordAlgebra<A> {
    CliffordAlgebra {
        n,
        unit: base_unit.one_like(),
    }
}

impl<A: InvolutiveAlgebra> CliffordAlgebra<A> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> CliffordElement<A> {
        CliffordElement {
            n: self.n,
            unit: self.unit.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> CliffordElement<A> {
        self.scalar(self.unit.clone())
    }

    pub fn scalar(&self, a: A) -> CliffordElement<A> {
        let mut z = self.zero();
        z.insert(Vec::new(), a);
        z
    }

    /// `η_k`, `1 <= k <= n`.
    pub fn generator(&self, k: usize) -> Result<CliffordElement<A>> {
        self.word(&[k], self.unit.clone())
    }

    /// `coeff · η_{w1} η_{w2} ...` reduced to normal form.
    pub fn word(&self, word: &[usize], coeff: A) -> Result<CliffordElement<A>> {
        clifford_normal_form(word, coeff, self.n)
    }

    /// Number of basis monomials over the base, `2^n`.
    pub fn dimension(&self) -> usize {
        1 << self.n
    }

    /// All index subsets in the order used by [`CliffordElement::coefficients`].
    pub fn basis_keys(&self) -> Vec<Vec<usize>> {
        (0..1usize << self.n)
            .map(|mask| (1..=self.n).filter(|k| mask & (1 << (k - 1)) != 0).collect())
            .collect()
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Vec<usize>, A)>) -> Result<CliffordElement<A>> {
        let mut z = self.zero();
        for (key, c) in terms {
            z = z.add(&self.word(&key, c)?);
        }
        Ok(z)
    }
}

/// `coeff · η_{word}` in normal form: adjacent out-of-order generators are
/// swapped with a sign flip and equal neighbours cancel (`η_k² = 1`).
pub fn clifford_normal_form<A: InvolutiveAlgebra>(word: &[usize], coeff: A, n: usize) -> Result<CliffordElement<A>> {
    let (negative, key) = normalize_word(word, n)?;
    let mut z = CliffordElement {
        n,
        unit: coeff.one_like(),
        terms: BTreeMap::new(),
    };
    z.insert(key, if negative { coeff.negate() } else { coeff });
    Ok(z)
}

impl<A: InvolutiveAlgebra> CliffordElement<A> {
    fn insert(&mut self, key: Vec<usize>, c: A) {
        let entry = match self.terms.remove(&key) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if !entry.is_zero() {
            self.terms.insert(key, entry);
        }
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> CliffordAlgebra<A> {
        CliffordAlgebra {
            n: self.n,
            unit: self.unit.clone(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &A)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, key: &[usize]) -> A {
        self.terms.get(key).cloned().unwrap_or_else(|| self.unit.zero_like())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "Clifford level mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        CliffordElement {
            n: self.n,
            unit: self.unit.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.negate())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// `(a η_S)(b η_T) = a · b^{⋆|S|} · η_S η_T`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "Clifford level mismatch");
        let mut out = self.algebra().zero();
        for (s, a) in &self.terms {
            for (t, b) in &rhs.terms {
                let (negative, key) = merge_blades(s, t);
                let c = a.times(&star_pow(b, s.len()));
                out.insert(key, if negative { c.negate() } else { c });
            }
        }
        out
    }

    /// `(a η_S)⋆ = (−1)^{|S|} a⋆ η_S`.
    pub fn star(&self) -> Self {
        CliffordElement {
            n: self.n,
            unit: self.unit.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let c = c.star();
                    (k.clone(), if k.len() % 2 == 1 { c.negate() } else { c })
                })
                .collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = self.algebra().zero();
        for (k, c) in &self.terms {
            out.insert(k.clone(), c.scale_by(r));
        }
        out
    }

    /// Splits `x ∈ A^[n]` as `a + b η_n` with `a, b ∈ A^[n-1]`.
    pub fn split_top(&self) -> Result<HatElement<CliffordElement<A>>> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("level 0 has no top generator".into()));
        }
        let lower = CliffordAlgebra {
            n: self.n - 1,
            unit: self.unit.clone(),
        };
        let (mut a, mut b) = (lower.zero(), lower.zero());
        for (k, c) in &self.terms {
            if k.last() == Some(&self.n) {
                b.insert(k[..k.len() - 1].to_vec(), c.clone());
            } else {
                a.insert(k.clone(), c.clone());
            }
        }
        Ok(HatElement::new(a, b))
    }

    /// Inverse of [`split_top`](Self::split_top).
    pub fn join_top(h: &HatElement<CliffordElement<A>>) -> Self {
        let upper = CliffordAlgebra {
            n: h.a.n + 1,
            unit: h.a.unit.clone(),
        };
        let mut out = upper.zero();
        for (k, c) in &h.a.terms {
            out.insert(k.clone(), c.clone());
        }
        for (k, c) in &h.b.terms {
            let mut key = k.clone();
            key.push(upper.n);
            out.insert(key, c.clone());
        }
        out
    }
}

impl<A: InvolutiveAlgebra> InvolutiveAlgebra for CliffordElement<A> {
    fn zero_like(&self) -> Self {
        self.algebra().zero()
    }
    fn one_like(&self) -> Self {
        self.algebra().one()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn star(&self) -> Self {
        CliffordElement::star(self)
    }
    fn is_zero(&self) -> bool {
        CliffordElement::is_zero(self)
    }
    fn scale_by(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

pub(crate) fn needs_parens(text: &str) -> bool {
    text.char_indices().any(|(i, c)| i > 0 && (c == '+' || c == '-')) && !text.starts_with('[')
}

pub(crate) fn fmt_term(f: &mut fmt::Formatter<'_>, coeff: &str, monomial: &str) -> fmt::Result {
    if monomial.is_empty() {
        return f.write_str(coeff);
    }
    if needs_parens(coeff) {
        write!(f, "({coeff})*{monomial}")
    } else {
        write!(f, "{coeff}*{monomial}")
    }
}

/// Terms `coeff*h1h3` joined by ` + `; the zero element prints as `0`.
impl<A: fmt::Display> fmt::Display for CliffordElement<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let monomial: String = key.iter().map(|k| format!("h{k}")).collect();
            fmt_term(f, &c.to_string(), &monomial)?;
        }
        Ok(())
    }
}

impl<A: fmt::Debug> fmt::Debug for CliffordElement<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
