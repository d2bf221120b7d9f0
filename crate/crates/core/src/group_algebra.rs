//! The twisted group algebra `(R^n)^[G]`: formal sums `Σ v_g g` with
//! `g v = v^g g`, so that `(v_g g)(v_h h) = (v_g v_h^g)(gh)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::clifford::{fmt_term, CliffordAlgebra, CliffordElement};
use crate::error::{Error, Result};
use crate::iterant::{direct_product, make_cyclic, FiniteGroup, Iterant, Permutation};
use crate::matrix::rank;
use crate::scalar::{GaussianRational, Rational};

/// Handle for `(R^n)^[G]`, where `n` is the degree of the group's action.
#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    group: Arc<FiniteGroup>,
}

/// A sparse element `Σ v_g g`; absent labels have zero coefficient.
#[derive(Clone)]
pub struct GroupAlgebraElement {
    group: Arc<FiniteGroup>,
    terms: BTreeMap<usize, Iterant>,
}

impl GroupAlgebra {
    pub fn new(group: FiniteGroup) -> Self {
        GroupAlgebra { group: Arc::new(group) }
    }

    /// `(R^n)^[C_n]` with the shift action.
    pub fn cyclic(n: usize) -> Result<Self> {
        Ok(GroupAlgebra::new(make_cyclic(n)?))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// Dimension over the scalars, `|G|·n`.
    pub fn dimension(&self) -> usize {
        self.group.order() * self.group.degree()
    }

    pub fn zero(&self) -> GroupAlgebraElement {
        GroupAlgebraElement {
            group: self.group.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> GroupAlgebraElement {
        self.iterant(Iterant::one(self.degree()))
            .expect("unit has the right length")
    }

    pub fn scalar(&self, z: GaussianRational) -> GroupAlgebraElement {
        self.iterant(Iterant::constant(self.degree(), z))
            .expect("constant has the right length")
    }

    /// `v · e`.
    pub fn iterant(&self, v: Iterant) -> Result<GroupAlgebraElement> {
        self.term_index(self.group.identity(), v)
    }

    /// `1 · g`.
    pub fn element(&self, label: &str) -> Result<GroupAlgebraElement> {
        self.term(label, Iterant::one(self.degree()))
    }

    /// `v · g`.
    pub fn term(&self, label: &str, v: Iterant) -> Result<GroupAlgebraElement> {
        self.term_index(self.group.index_of(label)?, v)
    }

    pub fn term_index(&self, g: usize, v: Iterant) -> Result<GroupAlgebraElement> {
        if g >= self.group.order() {
            return Err(Error::UnknownLabel(format!("#{g}")));
        }
        if v.len() != self.degree() {
            return Err(Error::LengthMismatch {
                left: self.degree(),
                right: v.len(),
            });
        }
        let mut z = self.zero();
        z.accumulate(g, v);
        Ok(z)
    }

    pub fn from_terms<'a>(&self, terms: impl IntoIterator<Item = (&'a str, Iterant)>) -> Result<GroupAlgebraElement> {
        let mut z = self.zero();
        for (label, v) in terms {
            z = z.try_add(&self.term(label, v)?)?;
        }
        Ok(z)
    }

    /// Basis `δ_k · g`: unit vectors times group elements, ordered by group
    /// index then coordinate.
    pub fn basis(&self) -> Vec<GroupAlgebraElement> {
        let n = self.degree();
        (0..self.group.order())
            .flat_map(|g| (0..n).map(move |k| (g, k)))
            .map(|(g, k)| {
                let mut v = vec![GaussianRational::zero(); n];
                v[k] = GaussianRational::one();
                self.term_index(g, Iterant::new(v)).expect("basis element")
            })
            .collect()
    }

    pub fn same_as(&self, other: &GroupAlgebra) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group == other.group
    }
}

impl GroupAlgebraElement {
    fn accumulate(&mut self, g: usize, v: Iterant) {
        let entry = match self.terms.remove(&g) {
            Some(old) => &old + &v,
            None => v,
        };
        if !entry.is_zero() {
            self.terms.insert(g, entry);
        }
    }

    pub fn algebra(&self) -> GroupAlgebra {
        GroupAlgebra {
            group: self.group.clone(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Coefficient `v_g` for the group element with index `g`.
    pub fn coefficient_index(&self, g: usize) -> Iterant {
        self.terms
            .get(&g)
            .cloned()
            .unwrap_or_else(|| Iterant::zero(self.group.degree()))
    }

    pub fn coefficient(&self, label: &str) -> Result<Iterant> {
        Ok(self.coefficient_index(self.group.index_of(label)?))
    }

    /// Non-zero terms as `(group index, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Iterant)> {
        self.terms.iter().map(|(g, v)| (*g, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (g, v) in &other.terms {
            out.accumulate(*g, v.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, z: &GaussianRational) -> Self {
        let mut out = self.algebra().zero();
        for (g, v) in &self.terms {
            out.accumulate(*g, v.scale(z));
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&GaussianRational::from(r.clone()))
    }

    /// Componentwise complex conjugate of every coefficient.
    pub fn conj(&self) -> Self {
        GroupAlgebraElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(g, v)| (*g, v.conj())).collect(),
        }
    }

    /// True if every scalar component has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms
            .values()
            .all(|v| v.components().iter().all(GaussianRational::is_real))
    }

    /// Coordinates in the basis of [`GroupAlgebra::basis`].
    pub fn to_vector(&self) -> Vec<GaussianRational> {
        (0..self.group.order())
            .flat_map(|g| self.coefficient_index(g).components().to_vec())
            .collect()
    }

    /// Commutator `xy − yx`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        ga_mul(self, other)?.try_sub(&ga_mul(other, self)?)
    }

    /// Anticommutator `xy + yx`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        ga_mul(self, other)?.try_add(&ga_mul(other, self)?)
    }
}

/// Bilinear extension of `(v_g g)(v_h h) = (v_g · act(g, v_h))(gh)`.
pub fn ga_mul(x: &GroupAlgebraElement, y: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
    x.check_same(y)?;
    let group = &x.group;
    let n = group.degree();
    let mut dense: Vec<Option<Vec<GaussianRational>>> = vec![None; group.order()];
    for (&g, vg) in &x.terms {
        let sigma = group.permutation(g);
        for (&h, vh) in &y.terms {
            let slot = dense[group.mul(g, h)].get_or_insert_with(|| vec![GaussianRational::zero(); n]);
            for (k, acc) in slot.iter_mut().enumerate() {
                *acc = &*acc + &(&vg[k] * &vh[sigma.apply(k)]);
            }
        }
    }
    let terms = dense
        .into_iter()
        .enumerate()
        .filter_map(|(g, v)| v.map(|v| (g, Iterant::new(v))))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    Ok(GroupAlgebraElement {
        group: Arc::clone(group),
        terms,
    })
}

/// `M.w = Σ v_g w^g`, the analogue of a matrix acting on a column vector.
pub fn ga_action(m: &GroupAlgebraElement, w: &Iterant) -> Result<Iterant> {
    let group = &m.group;
    if w.len() != group.degree() {
        return Err(Error::LengthMismatch {
            left: group.degree(),
            right: w.len(),
        });
    }
    let mut acc = Iterant::zero(group.degree());
    for (&g, vg) in &m.terms {
        acc = &acc + &(vg * &group.act_index(g, w)?);
    }
    Ok(acc)
}

/// The group ring `R[G]`: one coordinate, trivial action, so products are
/// plain convolution over the group table.
pub fn group_ring(group: &FiniteGroup) -> GroupAlgebra {
    let rep = vec![Permutation::identity(1); group.order()];
    let g = FiniteGroup::new(group.labels().to_vec(), group.table().to_vec(), rep)
        .expect("trivial action satisfies the action contract");
    GroupAlgebra::new(g)
}

/// `X ⊗ Y` realised as `(R^{nm})^[G×H]`, with commuting embeddings of both
/// factors. Coordinate `i·m + j` pairs coordinate `i` of the left factor with
/// coordinate `j` of the right factor.
#[derive(Clone, Debug)]
pub struct TensorAlgebra {
    pub left: GroupAlgebra,
    pub right: GroupAlgebra,
    pub product: GroupAlgebra,
}

pub fn ga_tensor(left: &GroupAlgebra, right: &GroupAlgebra) -> TensorAlgebra {
    let product = GroupAlgebra::new(direct_product(left.group(), right.group()));
    TensorAlgebra {
        left: left.clone(),
        right: right.clone(),
        product,
    }
}

impl TensorAlgebra {
    /// `x ↦ x ⊗ 1`.
    pub fn embed_left(&self, x: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        if !x.algebra().same_as(&self.left) {
            return Err(Error::AlgebraMismatch);
        }
        let (nh, m) = (self.right.group().order(), self.right.degree());
        let mut out = self.product.zero();
        for (g, v) in x.terms() {
            let comps = (0..v.len() * m).map(|k| v[k / m].clone()).collect();
            out.accumulate(g * nh + self.right.group().identity(), Iterant::new(comps));
        }
        Ok(out)
    }

    /// `y ↦ 1 ⊗ y`.
    pub fn embed_right(&self, y: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        if !y.algebra().same_as(&self.right) {
            return Err(Error::AlgebraMismatch);
        }
        let (nh, n, m) = (self.right.group().order(), self.left.degree(), self.right.degree());
        let mut out = self.product.zero();
        for (h, v) in y.terms() {
            let comps = (0..n * m).map(|k| v[k % m].clone()).collect();
            out.accumulate(self.left.group().identity() * nh + h, Iterant::new(comps));
        }
        Ok(out)
    }

    pub fn dimension(&self) -> usize {
        self.product.dimension()
    }
}

/// Realisation of `R^[n]` inside `(R^{2^n})^[C2^n]`: `η_k` maps to
/// `e_1 ⋯ e_{k-1} g_k`, where `g_k` swaps the `k`-th tensor factor and
/// `e_j = [-1,1]` in the `j`-th factor.
#[derive(Clone, Debug)]
pub struct CliffordEmbedding {
    pub n: usize,
    pub algebra: GroupAlgebra,
    pub generators: Vec<GroupAlgebraElement>,
}

pub fn clifford_as_group_algebra(n: usize) -> Result<CliffordEmbedding> {
    if n < 1 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let c2 = make_cyclic(2)?;
    let group = (1..n).fold(c2.clone(), |acc, _| direct_product(&acc, &c2));
    let algebra = GroupAlgebra::new(group);
    let dim = 1usize << n;
    // Letter index bits: factor 1 is the most significant bit.
    let bit = |letter: usize, factor: usize| (letter >> (n - factor)) & 1;
    let sign_iterant = |factor: usize| {
        Iterant::new(
            (0..dim)
                .map(|letter| GaussianRational::real(if bit(letter, factor) == 0 { -1 } else { 1 }))
                .collect(),
        )
    };
    let mut generators = Vec::with_capacity(n);
    for k in 1..=n {
        let label: Vec<&str> = (1..=n).map(|f| if f == k { "s" } else { "e" }).collect();
        let mut x = algebra.element(&label.join("_"))?;
        for j in (1..k).rev() {
            x = ga_mul(&algebra.iterant(sign_iterant(j))?, &x)?;
        }
        generators.push(x);
    }
    Ok(CliffordEmbedding { n, algebra, generators })
}

impl CliffordEmbedding {
    /// Image of `η_S` (product of generator images in increasing order).
    pub fn monomial(&self, key: &[usize]) -> Result<GroupAlgebraElement> {
        key.iter().try_fold(self.algebra.one(), |acc, &k| {
            let g = self
                .generators
                .get(k.wrapping_sub(1))
                .ok_or(Error::IndexOutOfRange { index: k, max: self.n })?;
            ga_mul(&acc, g)
        })
    }

    pub fn map(&self, x: &CliffordElement<Rational>) -> Result<GroupAlgebraElement> {
        if x.level() != self.n {
            return Err(Error::LevelMismatch {
                left: x.level(),
                right: self.n,
            });
        }
        let mut out = self.algebra.zero();
        for (key, c) in x.terms() {
            out = out.try_add(&self.monomial(key)?.scale_rational(c))?;
        }
        Ok(out)
    }

    /// Checks generator relations, multiplicativity on every pair of basis
    /// monomials, and linear independence of the `2^n` monomial images.
    /// Returns a list of `(label, passed)`.
    pub fn verify(&self) -> Result<Vec<(String, bool)>> {
        let mut checks = Vec::new();
        let one = self.algebra.one();
        let zero = self.algebra.zero();
        let mut squares = true;
        let mut anti = true;
        for (i, gi) in self.generators.iter().enumerate() {
            squares &= ga_mul(gi, gi)? == one;
            for gj in &self.generators[i + 1..] {
                anti &= gi.anticommutator(gj)? == zero;
            }
        }
        checks.push(("generators square to one".to_string(), squares));
        checks.push(("distinct generators anticommute".to_string(), anti));

        let clifford: CliffordAlgebra<Rational> = crate::clifford::iterate_clifford(Rational::one(), self.n);
        let keys = clifford.basis_keys();
        let mut hom = true;
        for s in &keys {
            for t in &keys {
                let lhs = self.map(
                    &clifford
                        .word(s, Rational::one())?
                        .mul(&clifford.word(t, Rational::one())?),
                )?;
                let rhs = ga_mul(&self.monomial(s)?, &self.monomial(t)?)?;
                hom &= lhs == rhs;
            }
        }
        checks.push(("multiplicative on basis monomials".to_string(), hom));
        let images: Vec<Vec<GaussianRational>> = keys
            .iter()
            .map(|k| self.monomial(k).map(|m| m.to_vector()))
            .collect::<Result<_>>()?;
        checks.push((
            format!("{} monomial images are independent", keys.len()),
            rank(&images) == keys.len(),
        ));
        Ok(checks)
    }
}

impl PartialEq for GroupAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group) && self.terms == other.terms
    }
}

macro_rules! panicking_op {
    ($trait:ident, $method:ident, $f:expr) => {
        impl $trait for &GroupAlgebraElement {
            type Output = GroupAlgebraElement;
            fn $method(self, rhs: &GroupAlgebraElement) -> GroupAlgebraElement {
                $f(self, rhs).expect("group algebra elements from different algebras")
            }
        }
    };
}

panicking_op!(Add, add, GroupAlgebraElement::try_add);
panicking_op!(Sub, sub, GroupAlgebraElement::try_sub);
panicking_op!(Mul, mul, ga_mul);

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;
    fn neg(self) -> GroupAlgebraElement {
        GroupAlgebraElement {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(g, v)| (*g, -v)).collect(),
        }
    }
}

/// `[c1,...,cn]*g` terms joined by ` + `; the identity term omits `*e`.
impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let label = if *g == self.group.identity() {
                ""
            } else {
                self.group.label(*g)
            };
            fmt_term(f, &v.to_string(), label)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn it(v: &[i64]) -> Iterant {
        Iterant::from_ints(v)
    }

    #[test]
    fn eta_moves_past_pairs() {
        let alg = GroupAlgebra::cyclic(2).unwrap();
        let eta = alg.element("s").unwrap();
        let ab = alg.iterant(it(&[2, 9])).unwrap();
        assert_eq!(ga_mul(&eta, &ab).unwrap(), alg.term("s", it(&[9, 2])).unwrap());
    }

    #[test]
    fn identity_terms_multiply_coordinatewise() {
        let alg = GroupAlgebra::cyclic(3).unwrap();
        let x = alg.iterant(it(&[1, 2, 3])).unwrap();
        let y = alg.iterant(it(&[4, 5, 6])).unwrap();
        assert_eq!(&x * &y, alg.iterant(it(&[4, 10, 18])).unwrap());
    }

    #[test]
    fn i_squares_to_minus_one() {
        let alg = GroupAlgebra::cyclic(2).unwrap();
        let i = alg.term("s", it(&[-1, 1])).unwrap();
        assert_eq!(&i * &i, alg.iterant(it(&[-1, -1])).unwrap());
    }

    #[test]
    fn module_action() {
        let alg = GroupAlgebra::cyclic(2).unwrap();
        let i = alg.term("s", it(&[-1, 1])).unwrap();
        assert_eq!(ga_action(&i, &it(&[3, 8])).unwrap(), it(&[-8, 3]));
        assert_eq!(ga_action(&alg.one(), &it(&[3, 8])).unwrap(), it(&[3, 8]));
        assert!(ga_action(&i, &it(&[1, 2, 3])).is_err());
    }

    #[test]
    fn group_ring_convolution() {
        let c2 = make_cyclic(2).unwrap();
        let ring = group_ring(&c2);
        let x = ring.from_terms([("e", it(&[2])), ("s", it(&[3]))]).unwrap();
        let y = ring.from_terms([("e", it(&[5])), ("s", it(&[7]))]).unwrap();
        let expected = ring
            .from_terms([("e", it(&[2 * 5 + 3 * 7])), ("s", it(&[2 * 7 + 3 * 5]))])
            .unwrap();
        assert_eq!(&x * &y, expected);

        let c3 = group_ring(&make_cyclic(3).unwrap());
        let sum = c3
            .from_terms([("e", it(&[1])), ("s", it(&[1])), ("s2", it(&[1]))])
            .unwrap();
        assert_eq!(&sum * &c3.element("s").unwrap(), sum);
        assert_eq!(&c3.element("s").unwrap() * &c3.element("s2").unwrap(), c3.one());
    }

    #[test]
    fn mismatched_algebras() {
        let a = GroupAlgebra::cyclic(2).unwrap().one();
        let b = GroupAlgebra::cyclic(3).unwrap().one();
        assert_eq!(ga_mul(&a, &b), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn tensor_of_split_quaternions() {
        let sq = GroupAlgebra::cyclic(2).unwrap();
        let t = ga_tensor(&sq, &sq);
        assert_eq!(t.dimension(), 16);
        let eps = sq.iterant(it(&[-1, 1])).unwrap();
        let eta = sq.element("s").unwrap();
        let eps_l = t.embed_left(&eps).unwrap();
        let eps_r = t.embed_right(&eps).unwrap();
        let eta_l = t.embed_left(&eta).unwrap();
        let eta_r = t.embed_right(&eta).unwrap();
        assert_eq!(&eps_l * &eps_r, &eps_r * &eps_l);
        assert_eq!(&eta_l * &eta_r, &eta_r * &eta_l);
        assert_eq!(&eps_l * &eta_r, &eta_r * &eps_l);
        assert_eq!(&eta_l * &eta_l, t.product.one());
        assert_eq!(&eps_r * &eta_r, -&(&eta_r * &eps_r));
    }

    #[test]
    fn clifford_embedding_small_cases() {
        let e1 = clifford_as_group_algebra(1).unwrap();
        assert_eq!(e1.generators[0], e1.algebra.element("s").unwrap());
        for n in 1..=3 {
            let emb = clifford_as_group_algebra(n).unwrap();
            for (label, ok) in emb.verify().unwrap() {
                assert!(ok, "n={n}: {label}");
            }
        }
        assert!(clifford_as_group_algebra(0).is_err());
    }

    #[test]
    fn display() {
        let alg = GroupAlgebra::cyclic(3).unwrap();
        let x = alg
            .from_terms([("e", it(&[1, 2, 3])), ("s2", it(&[0, -1, 0]))])
            .unwrap();
        assert_eq!(x.to_string(), "[1,2,3] + [0,-1,0]*s2");
    }
}
