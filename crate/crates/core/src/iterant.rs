//! Iterants (tuples with coordinatewise arithmetic), permutations and small
//! finite groups acting on iterants by permuting coordinates.
//!
//! Action convention: `act(g, v)[k] = v[σ_g(k)]` with `σ_{gh} = σ_h ∘ σ_g`,
//! so that `act(g, act(h, v)) == act(gh, v)` holds literally.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// An n-tuple of scalars with coordinatewise addition and multiplication.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Iterant(Vec<GaussianRational>);

impl Iterant {
    /// Panics if `components` is empty.
    pub fn new(components: Vec<GaussianRational>) -> Self {
        assert!(!components.is_empty(), "iterants have length at least 1");
        Iterant(components)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Iterant::new(values.iter().map(|&v| GaussianRational::real(v)).collect())
    }

    pub fn constant(len: usize, value: GaussianRational) -> Self {
        Iterant::new(vec![value; len])
    }

    pub fn zero(len: usize) -> Self {
        Iterant::constant(len, GaussianRational::zero())
    }

    pub fn one(len: usize) -> Self {
        Iterant::constant(len, GaussianRational::one())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn components(&self) -> &[GaussianRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GaussianRational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(GaussianRational::is_one)
    }

    /// The common value if every component is equal.
    pub fn as_constant(&self) -> Option<&GaussianRational> {
        let first = &self.0[0];
        self.0.iter().all(|c| c == first).then_some(first)
    }

    pub fn scale(&self, s: &GaussianRational) -> Iterant {
        Iterant(self.0.iter().map(|c| c * s).collect())
    }

    pub fn conj(&self) -> Iterant {
        Iterant(self.0.iter().map(GaussianRational::conj).collect())
    }

    pub fn reversed(&self) -> Iterant {
        Iterant(self.0.iter().rev().cloned().collect())
    }

    fn zip_with(
        &self,
        other: &Iterant,
        f: impl Fn(&GaussianRational, &GaussianRational) -> GaussianRational,
    ) -> Result<Iterant> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Iterant(self.0.iter().zip(&other.0).map(|(a, b)| f(a, b)).collect()))
    }

    pub fn try_add(&self, other: &Iterant) -> Result<Iterant> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Iterant) -> Result<Iterant> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn try_mul(&self, other: &Iterant) -> Result<Iterant> {
        self.zip_with(other, |a, b| a * b)
    }
}

/// Coordinatewise product `[a,b][c,d] = [ac,bd]`.
pub fn iter_mul(a: &Iterant, b: &Iterant) -> Result<Iterant> {
    a.try_mul(b)
}

impl Index<usize> for Iterant {
    type Output = GaussianRational;
    fn index(&self, k: usize) -> &GaussianRational {
        &self.0[k]
    }
}

// Operator forms panic on length mismatch; use the `try_*` methods when the
// lengths are not known to agree.
impl Add for &Iterant {
    type Output = Iterant;
    fn add(self, rhs: &Iterant) -> Iterant {
        self.try_add(rhs).expect("iterant length mismatch")
    }
}

impl Sub for &Iterant {
    type Output = Iterant;
    fn sub(self, rhs: &Iterant) -> Iterant {
        self.try_sub(rhs).expect("iterant length mismatch")
    }
}

impl Mul for &Iterant {
    type Output = Iterant;
    fn mul(self, rhs: &Iterant) -> Iterant {
        self.try_mul(rhs).expect("iterant length mismatch")
    }
}

impl Neg for &Iterant {
    type Output = Iterant;
    fn neg(self) -> Iterant {
        Iterant(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Iterant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Iterant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Iterant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, "iterant must be written as [a,b,...]"))?;
        if inner.trim().is_empty() {
            return Err(Error::parse(1, "empty iterant"));
        }
        let components = inner
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<GaussianRational>>>()?;
        Ok(Iterant::new(components))
    }
}

/// A bijection of `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, k: usize) -> usize {
        self.0[k]
    }

    /// `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&k| self.0[k]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (k, &i) in self.0.iter().enumerate() {
            inv[i] = k;
        }
        Permutation(inv)
    }
}

/// A finite group given by explicit tables, together with a permutation
/// action on `degree` letters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    rep: Vec<Permutation>,
    degree: usize,
}

impl FiniteGroup {
    /// Builds a group from labels, a multiplication table (`table[g][h]` is
    /// the index of `gh`) and the permutations `σ_g`. Group axioms and the
    /// action contract `σ_{gh} = σ_h ∘ σ_g` are checked over the full table.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>, rep: Vec<Permutation>) -> Result<Self> {
        let n = labels.len();
        let invalid = |msg: String| Err(Error::InvalidGroup(msg));
        if n == 0 {
            return invalid("a group has at least one element".into());
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return invalid(format!("duplicate label `{l}`"));
            }
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return invalid("multiplication table is not square".into());
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return invalid("multiplication table is not closed".into());
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return invalid(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        ));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("`{}` has no inverse", labels[g])))?;
            inverse.push(inv);
        }
        if rep.len() != n {
            return invalid("representation must assign a permutation to every element".into());
        }
        let degree = rep[0].degree();
        if degree == 0 || rep.iter().any(|p| p.degree() != degree) {
            return invalid("representation permutations must share a positive degree".into());
        }
        for g in 0..n {
            for h in 0..n {
                if rep[table[g][h]] != rep[h].compose(&rep[g]) {
                    return invalid(format!("action contract fails for ({}, {})", labels[g], labels[h]));
                }
            }
        }
        Ok(FiniteGroup {
            labels,
            table,
            identity,
            inverse,
            rep,
            degree,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of letters permuted by the representation.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn permutation(&self, g: usize) -> &Permutation {
        &self.rep[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// `v^g` for the element with index `g`.
    pub fn act_index(&self, g: usize, v: &Iterant) -> Result<Iterant> {
        if g >= self.order() {
            return Err(Error::UnknownLabel(format!("#{g}")));
        }
        if v.len() != self.degree {
            return Err(Error::LengthMismatch {
                left: self.degree,
                right: v.len(),
            });
        }
        let sigma = &self.rep[g];
        Ok(Iterant::new(
            (0..self.degree).map(|k| v[sigma.apply(k)].clone()).collect(),
        ))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|g| (0..n).all(|h| self.table[g][h] == self.table[h][g]))
    }

    /// Textual serialization: order, labels, multiplication table and
    /// representation images, one item per line.
    pub fn serialize(&self) -> String {
        let mut out = format!("order {}\nlabels {}\n", self.order(), self.labels.join(" "));
        for row in &self.table {
            let row: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&format!("mul {}\n", row.join(" ")));
        }
        for p in &self.rep {
            let imgs: Vec<String> = p.images().iter().map(usize::to_string).collect();
            out.push_str(&format!("rep {}\n", imgs.join(" ")));
        }
        out
    }

    pub fn deserialize(text: &str) -> Result<Self> {
        let mut labels = Vec::new();
        let mut table = Vec::new();
        let mut rep = Vec::new();
        let mut order = None;
        let nums = |rest: &str, line: usize| -> Result<Vec<usize>> {
            rest.split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::parse(line, format!("bad index `{t}`"))))
                .collect()
        };
        for (line, raw) in text.lines().enumerate() {
            let raw = raw.trim();
            if raw.is_empty() {
                continue;
            }
            let (key, rest) = raw.split_once(' ').unwrap_or((raw, ""));
            match key {
                "order" => {
                    order = Some(
                        rest.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::parse(line, "bad order"))?,
                    )
                }
                "labels" => labels = rest.split_whitespace().map(String::from).collect(),
                "mul" => table.push(nums(rest, line)?),
                "rep" => rep.push(Permutation::new(nums(rest, line)?)?),
                other => return Err(Error::parse(line, format!("unknown key `{other}`"))),
            }
        }
        if order != Some(labels.len()) {
            return Err(Error::InvalidGroup("order does not match label count".into()));
        }
        FiniteGroup::new(labels, table, rep)
    }
}

/// `v^g`, the action of the element labelled `g` on `v`.
pub fn act(g: &str, v: &Iterant, group: &FiniteGroup) -> Result<Iterant> {
    group.act_index(group.index_of(g)?, v)
}

/// Cyclic group of order `n` acting on `n` letters by the shift
/// `act(s, [x0, .., x_{n-1}]) = [x_{n-1}, x0, .., x_{n-2}]`.
///
/// Labels are `e`, `s`, `s2`, ..; the label `s{k}` is the index `k`.
pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n < 1 {
        return Err(Error::InvalidArgument("cyclic group order must be >= 1".into()));
    }
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "s".to_string(),
            k => format!("s{k}"),
        })
        .collect();
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let rep = (0..n)
        .map(|j| Permutation((0..n).map(|k| (k + n - j) % n).collect()))
        .collect();
    FiniteGroup::new(labels, table, rep)
}

/// `G × H` acting on `degree(G)·degree(H)` letters; letter `i·m + j`
/// is the pair `(i, j)` and element `(g, h)` has index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (ng, nh) = (g.order(), h.order());
    let m = h.degree();
    let labels = (0..ng)
        .flat_map(|a| (0..nh).map(move |b| (a, b)))
        .map(|(a, b)| format!("{}_{}", g.label(a), h.label(b)))
        .collect();
    let table = (0..ng * nh)
        .map(|x| {
            (0..ng * nh)
                .map(|y| g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh))
                .collect()
        })
        .collect();
    let rep = (0..ng * nh)
        .map(|x| {
            let (sg, sh) = (g.permutation(x / nh), h.permutation(x % nh));
            Permutation(
                (0..g.degree() * m)
                    .map(|k| sg.apply(k / m) * m + sh.apply(k % m))
                    .collect(),
            )
        })
        .collect();
    FiniteGroup::new(labels, table, rep).expect("direct product of valid groups is valid")
}

/// The trivial group on one letter.
pub fn trivial_group() -> FiniteGroup {
    make_cyclic(1).expect("order 1 is valid")
}
