//! Exact square matrices and the representation of iterant algebras by
//! matrices.
//!
//! Convention: `P` is the permutation matrix with `P·e_k = e_{k+1 mod n}`
//! and `diag(v)` places `v` on the diagonal in index order. For the cyclic
//! algebra `(R^n)^[C_n]`,
//!
//! ```text
//! to_matrix(Σ_k v_k s^k) = Σ_k diag(v_k) P^k,   entry (i, i-k mod n) = v_k[i]
//! ```
//!
//! which matches the shift action of [`make_cyclic`](crate::iterant::make_cyclic)
//! (`P diag(v) = diag(v^s) P`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group_algebra::{ga_action, ga_mul, GroupAlgebra, GroupAlgebraElement};
use crate::iterant::{make_cyclic, Iterant};
use crate::report::{first_failure, Check};
use crate::sample::Sampler;
use crate::scalar::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<GaussianRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatOp {
    Add,
    Mul,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("matrix must be at least 1x1".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                left: n,
                right: bad.len(),
            });
        }
        Ok(Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Matrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::real(x)).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![GaussianRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn diag(v: &Iterant) -> Self {
        let mut m = Matrix::zero(v.len());
        for i in 0..v.len() {
            m.set(i, i, v[i].clone());
        }
        m
    }

    /// Permutation matrix with `P·e_k = e_{perm(k)}`.
    pub fn permutation(images: &[usize]) -> Self {
        let mut m = Matrix::zero(images.len());
        for (k, &i) in images.iter().enumerate() {
            m.set(i, k, GaussianRational::one());
        }
        m
    }

    /// The cyclic shift `P·e_k = e_{k+1 mod n}`.
    pub fn shift(n: usize) -> Self {
        Matrix::permutation(&(0..n).map(|k| (k + 1) % n).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: GaussianRational) {
        self.entries[i * self.n + j] = z;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GaussianRational]> {
        self.entries.chunks(self.n)
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    fn check_dim(&self, other: &Matrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_dim(other)?;
        Ok(Matrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_dim(other)?;
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a * other.get(k, j);
                    let cur = out.get(i, j) + &prod;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, z: &GaussianRational) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a * z).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Matrix {
        (0..k).fold(Matrix::identity(self.n), |acc, _| {
            acc.mul(self).expect("same dimension")
        })
    }

    pub fn mul_vec(&self, v: &Iterant) -> Result<Iterant> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: v.len(),
            });
        }
        Ok(Iterant::new(
            self.rows()
                .map(|row| {
                    row.iter()
                        .zip(v.components())
                        .fold(GaussianRational::zero(), |acc, (a, b)| &acc + &(a * b))
                })
                .collect(),
        ))
    }

    /// Column `j` as an iterant.
    pub fn column(&self, j: usize) -> Iterant {
        Iterant::new((0..self.n).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn trace(&self) -> GaussianRational {
        (0..self.n).fold(GaussianRational::zero(), |acc, i| &acc + self.get(i, i))
    }
}

pub fn mat_arith(a: &Matrix, b: &Matrix, op: MatOp) -> Result<Matrix> {
    match op {
        MatOp::Add => a.add(b),
        MatOp::Mul => a.mul(b),
    }
}

/// `[[a,b],[c,d]]`.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, z) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{z}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Matrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix("[[")
            .and_then(|r| r.strip_suffix("]]"))
            .ok_or_else(|| Error::parse(0, "matrix must be written as [[a,b],[c,d]]"))?;
        let rows = inner
            .split("],[")
            .map(|row| {
                row.split(',')
                    .map(str::parse)
                    .collect::<Result<Vec<GaussianRational>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(rows)
    }
}

/// Matrix image of any iterant group algebra element:
/// `Σ_g diag(v_g) P_g` where `P_g` is the permutation matrix of `σ_g^{-1}`.
/// This is a ring homomorphism for every group satisfying the action
/// contract.
pub fn permutation_image(x: &GroupAlgebraElement) -> Matrix {
    let group = x.group();
    let n = group.degree();
    let mut out = Matrix::zero(n);
    for (g, v) in x.terms() {
        let p = Matrix::permutation(group.permutation(g).inverse().images());
        let term = Matrix::diag(v).mul(&p).expect("same dimension");
        out = out.add(&term).expect("same dimension");
    }
    out
}

fn cyclic_order(x: &GroupAlgebraElement) -> Result<usize> {
    let n = x.group().order();
    if *x.group() != make_cyclic(n)? {
        return Err(Error::NotCyclic(
            "expected the cyclic group with its shift action".into(),
        ));
    }
    Ok(n)
}

/// `Σ_k diag(v_{s^k}) P^k` for an element of `(R^n)^[C_n]`.
pub fn to_matrix(x: &GroupAlgebraElement) -> Result<Matrix> {
    let n = cyclic_order(x)?;
    let mut out = Matrix::zero(n);
    for (k, v) in x.terms() {
        for i in 0..n {
            out.set(i, (i + n - k) % n, v[i].clone());
        }
    }
    Ok(out)
}

/// Reads the `k`-th cyclic diagonal of `m` as the coefficient of `s^k`.
pub fn from_matrix(m: &Matrix, n: usize) -> Result<GroupAlgebraElement> {
    if m.dim() != n {
        return Err(Error::LengthMismatch {
            left: n,
            right: m.dim(),
        });
    }
    let alg = GroupAlgebra::cyclic(n)?;
    let mut out = alg.zero();
    for k in 0..n {
        let v = Iterant::new((0..n).map(|i| m.get(i, (i + n - k) % n).clone()).collect());
        out = &out + &alg.term_index(k, v)?;
    }
    Ok(out)
}

/// Rank of a list of vectors by exact Gaussian elimination.
pub fn rank(vectors: &[Vec<GaussianRational>]) -> usize {
    let mut rows: Vec<Vec<GaussianRational>> = vectors.to_vec();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip().expect("pivot is non-zero");
        let pivot_row: Vec<GaussianRational> = rows[rank].iter().map(|z| z * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (a, p) in row.iter_mut().zip(&pivot_row) {
                *a = &*a - &(&factor * p);
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Checks that `to_matrix` is an isomorphism `(R^n)^[C_n] → M_n`:
/// unit, additivity and multiplicativity on every pair of basis elements
/// and on `samples` random pairs, both round trips, injectivity via the
/// rank of the basis images, and agreement of `M.w` with matrix-vector
/// products.
pub fn iso_check(n: usize, samples: usize, seed: u64) -> Result<Vec<Check>> {
    if n < 2 {
        return Err(Error::InvalidArgument("iso_check needs n >= 2".into()));
    }
    let alg = GroupAlgebra::cyclic(n)?;
    let mut rng = Sampler::new(seed);
    let tag = |s: &str| format!("n{n}.{s}");
    let mut checks = Vec::new();

    checks.push(Check::new(
        tag("unit"),
        format!("phi(1) = I_{n}"),
        to_matrix(&alg.one())? == Matrix::identity(n),
    ));

    let basis = alg.basis();
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|a| (0..basis.len()).map(move |b| (a, b)))
        .collect();
    let bad = first_failure(
        pairs.iter().copied(),
        |&(a, b)| {
            let (x, y) = (&basis[a], &basis[b]);
            Ok(to_matrix(&ga_mul(x, y)?)? == to_matrix(x)?.mul(&to_matrix(y)?)?
                && to_matrix(&x.try_add(y)?)? == to_matrix(x)?.add(&to_matrix(y)?)?)
        },
        |&(a, b)| format!("x = {}, y = {}", basis[a], basis[b]),
    )?;
    checks.push(
        Check::new(
            tag("basis_hom"),
            format!(
                "phi(xy) = phi(x)phi(y), phi(x+y) = phi(x)+phi(y) on all {} basis pairs",
                pairs.len()
            ),
            bad.is_none(),
        )
        .or_counterexample(bad),
    );

    let random: Vec<_> = (0..samples)
        .map(|_| (rng.group_element(&alg, false), rng.group_element(&alg, false)))
        .collect();
    let bad = first_failure(
        random.iter(),
        |(x, y)| {
            Ok(to_matrix(&ga_mul(x, y)?)? == to_matrix(x)?.mul(&to_matrix(y)?)?
                && to_matrix(&x.try_add(y)?)? == to_matrix(x)?.add(&to_matrix(y)?)?)
        },
        |(x, y)| format!("x = {x}, y = {y}"),
    )?;
    checks.push(
        Check::new(
            tag("random_hom"),
            format!("phi is a ring homomorphism on {samples} random pairs"),
            bad.is_none(),
        )
        .or_counterexample(bad),
    );

    let bad = first_failure(
        random.iter().map(|(x, _)| x),
        |x| Ok(from_matrix(&to_matrix(x)?, n)? == **x),
        |x| format!("x = {x}"),
    )?;
    checks.push(
        Check::new(
            tag("round_trip_element"),
            "from_matrix(to_matrix(x)) = x",
            bad.is_none(),
        )
        .or_counterexample(bad),
    );
    let mats: Vec<Matrix> = (0..samples.max(1)).map(|_| rng.matrix(n)).collect();
    let bad = first_failure(
        mats.iter(),
        |m| Ok(to_matrix(&from_matrix(m, n)?)? == **m),
        |m| format!("M = {m}"),
    )?;
    checks.push(
        Check::new(tag("round_trip_matrix"), "to_matrix(from_matrix(M)) = M", bad.is_none()).or_counterexample(bad),
    );

    let images: Vec<Vec<GaussianRational>> = basis
        .iter()
        .map(|b| to_matrix(b).map(|m| m.entries().to_vec()))
        .collect::<Result<_>>()?;
    let r = rank(&images);
    checks.push(
        Check::new(
            tag("injective"),
            format!("the {} basis images are linearly independent", n * n),
            r == n * n,
        )
        .with_detail(format!("rank {r}")),
    );

    let bad = first_failure(
        random.iter().map(|(x, _)| (x, rng.iterant(n))).collect::<Vec<_>>(),
        |(x, w)| Ok(to_matrix(x)?.mul_vec(w)? == ga_action(x, w)?),
        |(x, w)| format!("M = {x}, w = {w}"),
    )?;
    checks.push(Check::new(tag("action"), "to_matrix(M) w = M.w", bad.is_none()).or_counterexample(bad));
    Ok(checks)
}
