//! The real Majorana-Dirac operator and its real plane-wave solutions.

use super::wave::{apply_operator, Coord, DiracOperator, TrigWave};
use super::{clifford_relations, describe_wave, eq_check, DiracAlgebra, EnergyMomentum};
use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::report::Check;
use crate::scalar::Rational;

/// `α_x = η̂η`, `α_y = ε`, `α_z = ε̂η`, `β = iε̂η̂η`.
pub fn majorana_generators(alg: &DiracAlgebra) -> [(&'static str, GroupAlgebraElement); 4] {
    [
        ("alpha_x", &alg.eta_hat * &alg.eta),
        ("alpha_y", alg.eps.clone()),
        ("alpha_z", &alg.eps_hat * &alg.eta),
        ("beta", alg.product(&[&alg.i(), &alg.eps_hat, &alg.eta_hat, &alg.eta])),
    ]
}

/// `∂t + η̂η ∂x + ε ∂y + ε̂η ∂z − ε̂η̂η m`; every coefficient is real.
pub fn majorana_operator(alg: &DiracAlgebra, mass: &Rational) -> DiracOperator<GroupAlgebraElement> {
    DiracOperator::new(vec![
        (alg.one(), Some(Coord::T)),
        (&alg.eta_hat * &alg.eta, Some(Coord::X)),
        (alg.eps.clone(), Some(Coord::Y)),
        (&alg.eps_hat * &alg.eta, Some(Coord::Z)),
        (
            -&alg
                .product(&[&alg.eps_hat, &alg.eta_hat, &alg.eta])
                .scale_rational(mass),
            None,
        ),
    ])
}

#[derive(Clone, Debug)]
pub struct MajoranaSolution {
    /// Symbol of the Majorana operator: `𝒟 e^{iθ} = Γ e^{iθ}`.
    pub gamma: GroupAlgebraElement,
    /// `U = εηΓ`.
    pub u: GroupAlgebraElement,
    /// `A = εε̂η̂ m`.
    pub a: GroupAlgebraElement,
    /// `B = −ηεE − η̂ε p_x + η p_y − εε̂ p_z`.
    pub b: GroupAlgebraElement,
    /// `Φ = A cos θ − B sin θ`.
    pub phi: TrigWave<GroupAlgebraElement>,
    /// `Ψ = B cos θ + A sin θ`.
    pub psi: TrigWave<GroupAlgebraElement>,
    /// `∇ = εη𝒟`.
    pub nabla: DiracOperator<GroupAlgebraElement>,
    pub checks: Vec<Check>,
}

fn real_check(label: &str, what: &str, elems: &[&GroupAlgebraElement]) -> Check {
    Check::new(
        label,
        format!("{what} have zero imaginary part"),
        elems.iter().all(|x| x.is_real()),
    )
}

/// Builds `Γ`, `U`, the Majorana operators `A`, `B` and the real solutions
/// `Φ`, `Ψ` for a three-dimensional momentum, checking every relation.
pub fn majorana_solutions(alg: &DiracAlgebra, pm: &EnergyMomentum) -> Result<MajoranaSolution> {
    let [px, py, pz] = match pm.momentum() {
        [x, y, z] => [x, y, z],
        p => {
            return Err(Error::LengthMismatch {
                left: 3,
                right: p.len(),
            })
        }
    };
    let (e, m) = (pm.energy(), pm.mass());
    let i = alg.i();
    let d = majorana_operator(alg, m);
    let phase = pm.phase();
    let gamma = d.symbol(&phase, &alg.one())?;

    let eps_eta = &alg.eps * &alg.eta;
    let u = &eps_eta * &gamma;
    let a = alg.product(&[&alg.eps, &alg.eps_hat, &alg.eta_hat]).scale_rational(m);
    let b = {
        let t = -&(&alg.eta * &alg.eps).scale_rational(e);
        let x = (&alg.eta_hat * &alg.eps).scale_rational(px);
        let y = alg.eta.scale_rational(py);
        let z = (&alg.eps * &alg.eps_hat).scale_rational(pz);
        &(&(&t - &x) + &y) - &z
    };
    let nabla = d.left_mul(&eps_eta);
    let phi = TrigWave::new(a.clone(), -&b, phase.clone());
    let psi = TrigWave::new(b.clone(), a.clone(), phase.clone());

    let mut checks = Vec::new();
    let gens = majorana_generators(alg);
    let named: Vec<_> = gens.iter().map(|(n, g)| (*n, g)).collect();
    checks.extend(clifford_relations(alg, "", &named));
    let coeffs: Vec<_> = d.coefficients().chain(nabla.coefficients()).collect();
    checks.push(real_check("operator_real", "coefficients of D and nabla", &coeffs));

    let expected_gamma = {
        let spatial = &(&(&alg.eta_hat * &alg.eta).scale_rational(px) + &alg.eps.scale_rational(py))
            + &(&alg.eps_hat * &alg.eta).scale_rational(pz);
        let mass = alg.product(&[&alg.eps_hat, &alg.eta_hat, &alg.eta]).scale_rational(m);
        &(&i * &(&spatial - &alg.scalar(e.clone()))) - &mass
    };
    checks.push(eq_check(
        "gamma",
        "D psi = Gamma psi with Gamma = -iE + i(p_x eta_hat eta + p_y eps + p_z eps_hat eta) - m eps_hat eta_hat eta",
        &gamma,
        &expected_gamma,
        alg,
    ));
    let zero = alg.zero();
    let minus_m2 = alg.scalar(-&(m * m));
    checks.push(eq_check(
        "u_nilpotent",
        "U^2 = 0 for U = eps eta Gamma",
        &(&u * &u),
        &zero,
        alg,
    ));
    checks.push(eq_check("a_square", "A^2 = -m^2", &(&a * &a), &minus_m2, alg));
    checks.push(eq_check("b_square", "B^2 = -m^2", &(&b * &b), &minus_m2, alg));
    checks.push(eq_check(
        "ab_anticommute",
        "AB + BA = 0",
        &a.anticommutator(&b)?,
        &zero,
        alg,
    ));
    let a_ib = &a + &(&i * &b);
    checks.push(eq_check("a_plus_ib", "A + iB = -U", &a_ib, &-&u, alg));
    checks.push(eq_check(
        "a_plus_ib_nilpotent",
        "(A + iB)^2 = 0",
        &(&a_ib * &a_ib),
        &zero,
        alg,
    ));
    for (label, w) in [("phi", &phi), ("psi", &psi)] {
        let r = apply_operator(&nabla, w)?;
        checks.push(
            Check::new(format!("nabla_{label}"), format!("nabla {label} = 0"), r.is_zero())
                .or_counterexample(Some(format!("residual {}", describe_wave(alg, &r)))),
        );
    }
    checks.push(real_check(
        "solutions_real",
        "coefficients of Phi and Psi",
        &[&phi.cos, &phi.sin, &psi.cos, &psi.sin],
    ));

    Ok(MajoranaSolution {
        gamma,
        u,
        a,
        b,
        phi,
        psi,
        nabla,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solutions_at_1_2_2_4_5() {
        let alg = DiracAlgebra::new();
        let q = |n| Rational::from(n);
        let pm = EnergyMomentum::new(q(5), vec![q(1), q(2), q(2)], q(4)).unwrap();
        let sol = majorana_solutions(&alg, &pm).unwrap();
        for c in &sol.checks {
            assert!(c.passed, "{}: {:?}", c.label, c.detail);
        }
        assert_eq!(&sol.a * &sol.a, alg.scalar(q(-16)));
    }

    #[test]
    fn beta_is_not_real_but_operator_is() {
        let alg = DiracAlgebra::new();
        let gens = majorana_generators(&alg);
        assert!(!gens[3].1.is_real());
        assert!(majorana_operator(&alg, &Rational::from(4))
            .coefficients()
            .all(|c| c.is_real()));
    }

    #[test]
    fn needs_three_momenta() {
        let alg = DiracAlgebra::new();
        let pm = EnergyMomentum::new(Rational::from(5), vec![Rational::from(3)], Rational::from(4)).unwrap();
        assert!(majorana_solutions(&alg, &pm).is_err());
    }
}
