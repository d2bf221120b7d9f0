//! The 1+1 dimensional real Dirac system `∂t + ε∂x + εηm` over a single
//! copy of the split quaternions, and its light-cone form.

use super::wave::{apply_operator, Coord, DiracOperator, Phase, TrigWave};
use super::EnergyMomentum;
use crate::error::{Error, Result};
use crate::group_algebra::{GroupAlgebra, GroupAlgebraElement};
use crate::iterant::Iterant;
use crate::matrix::{to_matrix, Matrix};
use crate::report::Check;
use crate::scalar::{GaussianRational, Rational};

#[derive(Clone, Debug)]
pub struct LightconeSystem {
    /// `∇ = ∂t + ε∂x + εηm`.
    pub nabla: DiracOperator<GroupAlgebraElement>,
    /// `𝒟 = iη∂t + iηε∂x − iεm = iη∇`.
    pub d: DiracOperator<GroupAlgebraElement>,
    /// `A = ηE + εηp`.
    pub a: GroupAlgebraElement,
    /// `B = −εm`.
    pub b: GroupAlgebraElement,
    /// `A cos θ − B sin θ`, the real part of `(A + iB)e^{iθ}`.
    pub solution: TrigWave<GroupAlgebraElement>,
    /// Matrix images of the cosine and sine coefficients of `solution`.
    pub solution_matrix: (Matrix, Matrix),
    /// `θ` in light-cone coordinates `r = (t+x)/2`, `l = (t−x)/2`.
    pub lightcone_phase: Phase,
    /// `ψ₁ = −m sin θ`.
    pub psi1: TrigWave<GaussianRational>,
    /// `ψ₂ = (E+p) cos θ`.
    pub psi2: TrigWave<GaussianRational>,
    pub checks: Vec<Check>,
}

fn eq<T: PartialEq + std::fmt::Display>(label: &str, description: &str, lhs: &T, rhs: &T) -> Check {
    Check::new(label, description, lhs == rhs).or_counterexample(Some(format!("lhs = {lhs}; rhs = {rhs}")))
}

/// Applies a matrix differential operator to the vector wave `c cos θ + s sin θ`.
fn apply_matrix_operator(
    terms: &[(Matrix, Option<Coord>)],
    c: &Iterant,
    s: &Iterant,
    phase: &Phase,
) -> Result<(Iterant, Iterant)> {
    let n = c.len();
    let (mut rc, mut rs) = (Iterant::zero(n), Iterant::zero(n));
    for (mat, u) in terms {
        let (dc, ds) = match u {
            Some(u) => {
                let k = GaussianRational::from(phase.coefficient(*u)?);
                (s.scale(&k), c.scale(&-&k))
            }
            None => (c.clone(), s.clone()),
        };
        rc = rc.try_add(&mat.mul_vec(&dc)?)?;
        rs = rs.try_add(&mat.mul_vec(&ds)?)?;
    }
    Ok((rc, rs))
}

pub fn lightcone_system(pm: &EnergyMomentum) -> Result<LightconeSystem> {
    let p = match pm.momentum() {
        [p] => p,
        other => {
            return Err(Error::LengthMismatch {
                left: 1,
                right: other.len(),
            })
        }
    };
    let (e, m) = (pm.energy(), pm.mass());
    let alg = GroupAlgebra::cyclic(2)?;
    let eps = alg.iterant(Iterant::from_ints(&[-1, 1]))?;
    let eta = alg.element("s")?;
    let i = alg.scalar(GaussianRational::i());
    let eps_eta = &eps * &eta;

    let nabla = DiracOperator::new(vec![
        (alg.one(), Some(Coord::T)),
        (eps.clone(), Some(Coord::X)),
        (eps_eta.scale_rational(m), None),
    ]);
    let i_eta = &i * &eta;
    let d = DiracOperator::new(vec![
        (i_eta.clone(), Some(Coord::T)),
        (&i_eta * &eps, Some(Coord::X)),
        (-&(&i * &eps).scale_rational(m), None),
    ]);
    let a = &eta.scale_rational(e) + &eps_eta.scale_rational(p);
    let b = -&eps.scale_rational(m);
    let phase = pm.phase();
    let solution = TrigWave::new(a.clone(), -&b, phase.clone());
    let mc = to_matrix(&solution.cos)?;
    let ms = to_matrix(&solution.sin)?;

    let mut checks = Vec::new();
    checks.push(Check::new(
        "d_is_i_eta_nabla",
        "D = i eta nabla",
        d == nabla.left_mul(&i_eta),
    ));
    let a_ib = &a + &(&i * &b);
    checks.push(eq(
        "symbol",
        "D psi = (A + iB) psi",
        &d.symbol(&phase, &alg.one())?,
        &a_ib,
    ));
    let m2 = alg.scalar(GaussianRational::from(m * m));
    checks.push(eq("a_square", "A^2 = E^2 - p^2 = m^2", &(&a * &a), &m2));
    checks.push(eq("b_square", "B^2 = m^2", &(&b * &b), &m2));
    checks.push(eq("ab_anticommute", "AB + BA = 0", &a.anticommutator(&b)?, &alg.zero()));
    checks.push(eq("nilpotent", "(A + iB)^2 = 0", &(&a_ib * &a_ib), &alg.zero()));
    let residual = apply_operator(&nabla, &solution)?;
    checks.push(Check::new(
        "real_solution",
        "nabla (A cos theta - B sin theta) = 0",
        residual.is_zero(),
    ));

    let ent = |r: &Rational| GaussianRational::from(r.clone());
    let zero = GaussianRational::zero();
    let expected_cos = Matrix::new(vec![
        vec![zero.clone(), ent(&(e - p))],
        vec![ent(&(e + p)), zero.clone()],
    ])?;
    let expected_sin = Matrix::new(vec![vec![ent(&-m), zero.clone()], vec![zero, ent(m)]])?;
    checks.push(
        Check::new(
            "solution_matrix",
            "cosine part [[0, E-p], [E+p, 0]], sine part [[-m, 0], [0, m]]",
            mc == expected_cos && ms == expected_sin,
        )
        .or_counterexample(Some(format!("cosine part {mc}, sine part {ms}"))),
    );
    let op_matrices = vec![
        (Matrix::identity(2), Some(Coord::T)),
        (to_matrix(&eps)?, Some(Coord::X)),
        (to_matrix(&eps_eta)?.scale(&ent(m)), None),
    ];
    for j in 0..2 {
        let (rc, rs) = apply_matrix_operator(&op_matrices, &mc.column(j), &ms.column(j), &phase)?;
        checks.push(
            Check::new(
                format!("column{}", j + 1),
                format!("column {} of the solution matrix is annihilated by nabla", j + 1),
                rc.is_zero() && rs.is_zero(),
            )
            .or_counterexample(Some(format!("residual {rc} cos + {rs} sin"))),
        );
    }

    let lc = phase.to_lightcone()?;
    let expected_lc = Phase::new(
        super::CoordSystem::LightCone,
        [(Coord::R, -&(e - p)), (Coord::L, -&(e + p))],
    )?;
    checks.push(eq("lightcone_phase", "theta = -(E-p) r - (E+p) l", &lc, &expected_lc));
    let psi1 = TrigWave::new(GaussianRational::zero(), ent(&-m), lc.clone());
    let psi2 = TrigWave::new(ent(&(e + p)), GaussianRational::zero(), lc.clone());
    let m_z = ent(m);
    checks.push(Check::new(
        "dl_psi1",
        "d psi1/dl = m psi2",
        psi1.derivative(Coord::L)? == psi2.scale(&m_z),
    ));
    checks.push(Check::new(
        "dr_psi2",
        "d psi2/dr = -m psi1",
        psi2.derivative(Coord::R)? == psi1.scale(&-&m_z),
    ));

    Ok(LightconeSystem {
        nabla,
        d,
        a,
        b,
        solution,
        solution_matrix: (mc, ms),
        lightcone_phase: lc,
        psi1,
        psi2,
        checks,
    })
}
