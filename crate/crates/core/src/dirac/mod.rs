//! Dirac operators, nilpotent plane-wave solutions and Majorana operators,
//! all inside two commuting copies of the split quaternions.

mod lightcone;
mod majorana;
mod wave;

pub use lightcone::{lightcone_system, LightconeSystem};
pub use majorana::{majorana_generators, majorana_operator, majorana_solutions, MajoranaSolution};
pub use wave::{apply_operator, Coord, CoordSystem, DiracOperator, Phase, TrigWave, WaveAlgebra};

use std::fmt;

use crate::error::{Error, Result};
use crate::group_algebra::{ga_tensor, GroupAlgebra, GroupAlgebraElement, TensorAlgebra};
use crate::iterant::Iterant;
use crate::matrix::permutation_image;
use crate::report::Check;
use crate::scalar::{GaussianRational, Rational};

/// `(R²)^[C2] ⊗ (R²)^[C2]` over Gaussian rationals, with `ε = [-1,1]`,
/// `η = s` in the first factor and `ε̂`, `η̂` the same elements in the second.
#[derive(Clone, Debug)]
pub struct DiracAlgebra {
    pub tensor: TensorAlgebra,
    pub eps: GroupAlgebraElement,
    pub eta: GroupAlgebraElement,
    pub eps_hat: GroupAlgebraElement,
    pub eta_hat: GroupAlgebraElement,
}

impl Default for DiracAlgebra {
    fn default() -> Self {
        Self::new()
    }
}

impl DiracAlgebra {
    pub fn new() -> Self {
        let c2 = GroupAlgebra::cyclic(2).expect("C2 exists");
        let eps = c2.iterant(Iterant::from_ints(&[-1, 1])).expect("length 2");
        let eta = c2.element("s").expect("C2 has s");
        let tensor = ga_tensor(&c2, &c2);
        let embed = |x: &GroupAlgebraElement, left: bool| {
            if left {
                tensor.embed_left(x)
            } else {
                tensor.embed_right(x)
            }
            .expect("element of C2 algebra")
        };
        DiracAlgebra {
            eps: embed(&eps, true),
            eta: embed(&eta, true),
            eps_hat: embed(&eps, false),
            eta_hat: embed(&eta, false),
            tensor,
        }
    }

    pub fn algebra(&self) -> &GroupAlgebra {
        &self.tensor.product
    }

    pub fn one(&self) -> GroupAlgebraElement {
        self.algebra().one()
    }

    pub fn zero(&self) -> GroupAlgebraElement {
        self.algebra().zero()
    }

    pub fn scalar(&self, z: impl Into<GaussianRational>) -> GroupAlgebraElement {
        self.algebra().scalar(z.into())
    }

    /// The scalar `i`.
    pub fn i(&self) -> GroupAlgebraElement {
        self.scalar(GaussianRational::i())
    }

    /// Product of a sequence of elements, `1` for an empty sequence.
    pub fn product(&self, factors: &[&GroupAlgebraElement]) -> GroupAlgebraElement {
        factors.iter().fold(self.one(), |acc, f| &acc * *f)
    }

    /// The sixteen monomials `ε^a η^b ε̂^c η̂^d`, named e.g. `eps*eta_hat`.
    pub fn monomials(&self) -> Vec<(String, GroupAlgebraElement)> {
        let gens = [
            ("eps", &self.eps),
            ("eta", &self.eta),
            ("eps_hat", &self.eps_hat),
            ("eta_hat", &self.eta_hat),
        ];
        (0..16u32)
            .map(|mask| {
                let chosen: Vec<_> = gens
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, g)| *g)
                    .collect();
                let name = if chosen.is_empty() {
                    "1".to_string()
                } else {
                    chosen.iter().map(|(n, _)| *n).collect::<Vec<_>>().join("*")
                };
                let value = self.product(&chosen.iter().map(|(_, g)| *g).collect::<Vec<_>>());
                (name, value)
            })
            .collect()
    }

    /// Coordinates of `x` in the monomial basis, `c_k = tr(m_k⁻¹ x) / 4`
    /// computed in the regular matrix image. Zero coordinates are omitted.
    pub fn decompose(&self, x: &GroupAlgebraElement) -> Vec<(String, GaussianRational)> {
        let quarter = GaussianRational::from(Rational::new(1, 4).expect("nonzero"));
        self.monomials()
            .into_iter()
            .filter_map(|(name, m)| {
                // Every monomial squares to ±1, so m⁻¹ = m³.
                let inv = &(&m * &m) * &m;
                let c = permutation_image(&(&inv * x)).trace() * &quarter;
                (!c.is_zero()).then_some((name, c))
            })
            .collect()
    }

    /// `Σ c_k m_k` rendered with monomial names.
    pub fn describe(&self, x: &GroupAlgebraElement) -> String {
        let parts = self.decompose(x);
        match parts.as_slice() {
            [] => return "0".into(),
            [(name, c)] if name == "1" => return c.to_string(),
            _ => {}
        }
        parts
            .iter()
            .map(|(name, c)| {
                if name == "1" {
                    format!("({c})")
                } else {
                    format!("({c})*{name}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn generators(&self, cfg: DiracConfig) -> DiracGenerators {
        let sigma = match cfg {
            DiracConfig::OneD => vec![self.one()],
            DiracConfig::ThreeD => vec![
                self.eta_hat.clone(),
                self.product(&[&self.i(), &self.eps_hat, &self.eta_hat]),
                self.eps_hat.clone(),
            ],
        };
        DiracGenerators {
            alpha: self.eta.clone(),
            beta: self.eps.clone(),
            sigma,
        }
    }
}

/// Spatial dimension of the Dirac configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiracConfig {
    OneD,
    ThreeD,
}

impl DiracConfig {
    pub fn spatial_dim(self) -> usize {
        match self {
            DiracConfig::OneD => 1,
            DiracConfig::ThreeD => 3,
        }
    }

    pub fn from_dim(d: usize) -> Result<Self> {
        match d {
            1 => Ok(DiracConfig::OneD),
            3 => Ok(DiracConfig::ThreeD),
            _ => Err(Error::InvalidArgument(format!("dimension must be 1 or 3, got {d}"))),
        }
    }
}

/// `α`, `β` and the commuting `σ` copy; in one dimension `σ = [1]`.
#[derive(Clone, Debug)]
pub struct DiracGenerators {
    pub alpha: GroupAlgebraElement,
    pub beta: GroupAlgebraElement,
    pub sigma: Vec<GroupAlgebraElement>,
}

/// On-shell energy-momentum data, `E² = |p|² + m²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyMomentum {
    energy: Rational,
    momentum: Vec<Rational>,
    mass: Rational,
}

impl EnergyMomentum {
    pub fn new(energy: Rational, momentum: Vec<Rational>, mass: Rational) -> Result<Self> {
        if momentum.is_empty() || momentum.len() > 3 {
            return Err(Error::InvalidArgument(format!(
                "momentum must have 1 to 3 components, got {}",
                momentum.len()
            )));
        }
        let e2 = &energy * &energy;
        let rhs = Self::mass_shell(&momentum, &mass);
        if e2 != rhs {
            return Err(Error::OffShell {
                e2: e2.to_string(),
                rhs: rhs.to_string(),
            });
        }
        Ok(EnergyMomentum { energy, momentum, mass })
    }

    /// Takes the nonnegative root `E = sqrt(|p|² + m²)`, which must be rational.
    pub fn from_momentum_mass(momentum: Vec<Rational>, mass: Rational) -> Result<Self> {
        let rhs = Self::mass_shell(&momentum, &mass);
        let energy = rhs.sqrt_exact().ok_or_else(|| Error::NoRationalSqrt(rhs.to_string()))?;
        Self::new(energy, momentum, mass)
    }

    fn mass_shell(momentum: &[Rational], mass: &Rational) -> Rational {
        momentum.iter().fold(mass * mass, |acc, p| &acc + &(p * p))
    }

    pub fn energy(&self) -> &Rational {
        &self.energy
    }

    pub fn momentum(&self) -> &[Rational] {
        &self.momentum
    }

    pub fn mass(&self) -> &Rational {
        &self.mass
    }

    /// `θ = p·r − E t`.
    pub fn phase(&self) -> Phase {
        Phase::plane_wave(&self.energy, &self.momentum).expect("at most three momenta")
    }

    /// `p·r + E t`, the time-reversed phase.
    pub fn reversed_phase(&self) -> Phase {
        Phase::plane_wave(&-&self.energy, &self.momentum).expect("at most three momenta")
    }

    fn check_dim(&self, cfg: DiracConfig) -> Result<()> {
        if self.momentum.len() != cfg.spatial_dim() {
            return Err(Error::LengthMismatch {
                left: cfg.spatial_dim(),
                right: self.momentum.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for EnergyMomentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.momentum.iter().map(|r| r.to_string()).collect();
        write!(f, "E={} p=({}) m={}", self.energy, p.join(","), self.mass)
    }
}

/// `(p, m, E) = (u² − v², 2uv, u² + v²)`.
pub fn pythagorean_triple(u: i64, v: i64) -> (i64, i64, i64) {
    (u * u - v * v, 2 * u * v, u * u + v * v)
}

/// The first `count` triples with `u > v ≥ 1`, ordered by `u` then `v`.
pub fn pythagorean_triples(count: usize) -> Vec<(i64, i64, i64)> {
    (2..)
        .flat_map(|u| (1..u).map(move |v| pythagorean_triple(u, v)))
        .take(count)
        .collect()
}

fn p_dot_sigma(alg: &DiracAlgebra, gens: &DiracGenerators, pm: &EnergyMomentum) -> GroupAlgebraElement {
    gens.sigma
        .iter()
        .zip(pm.momentum())
        .fold(alg.zero(), |acc, (s, p)| &acc + &s.scale_rational(p))
}

fn fermion_operator(
    alg: &DiracAlgebra,
    cfg: DiracConfig,
    pm: &EnergyMomentum,
    time_sign: i64,
) -> Result<GroupAlgebraElement> {
    pm.check_dim(cfg)?;
    let g = alg.generators(cfg);
    let ba = &g.beta * &g.alpha;
    let energy = pm.energy() * &Rational::from(time_sign);
    let u = &ba.scale_rational(&energy) + &(&g.beta * &p_dot_sigma(alg, &g, pm));
    Ok(&u - &g.alpha.scale_rational(pm.mass()))
}

/// `U = βαE + β(p·σ) − αm`.
pub fn build_u(alg: &DiracAlgebra, cfg: DiracConfig, pm: &EnergyMomentum) -> Result<GroupAlgebraElement> {
    fermion_operator(alg, cfg, pm, 1)
}

/// `U† = −βαE + β(p·σ) − αm`.
pub fn build_udag(alg: &DiracAlgebra, cfg: DiracConfig, pm: &EnergyMomentum) -> Result<GroupAlgebraElement> {
    fermion_operator(alg, cfg, pm, -1)
}

const SPATIAL: [Coord; 3] = [Coord::X, Coord::Y, Coord::Z];

/// `𝒪 = i∂t + iα Σ σ_k ∂k − βm`.
pub fn dirac_operator(alg: &DiracAlgebra, cfg: DiracConfig, mass: &Rational) -> DiracOperator<GroupAlgebraElement> {
    let g = alg.generators(cfg);
    let i = alg.i();
    let ia = &i * &g.alpha;
    let mut terms = vec![(i, Some(Coord::T))];
    terms.extend(g.sigma.iter().zip(SPATIAL).map(|(s, c)| (&ia * s, Some(c))));
    terms.push((-&g.beta.scale_rational(mass), None));
    DiracOperator::new(terms)
}

/// `𝒟 = 𝒪βα`, which works out to `iβα∂t − iβ Σ σ_k ∂k − αm`.
pub fn modified_operator(alg: &DiracAlgebra, cfg: DiracConfig, mass: &Rational) -> DiracOperator<GroupAlgebraElement> {
    let g = alg.generators(cfg);
    dirac_operator(alg, cfg, mass).right_mul(&(&g.beta * &g.alpha))
}

/// Majorana operators `A = (β(p·σ) − αm)/E`, `B = −iβα`, so that
/// `U = (A + Bi)E` and `U† = (A − Bi)E`.
pub fn majorana_split(
    alg: &DiracAlgebra,
    cfg: DiracConfig,
    pm: &EnergyMomentum,
) -> Result<(GroupAlgebraElement, GroupAlgebraElement)> {
    pm.check_dim(cfg)?;
    let inv_e = pm.energy().recip()?;
    let g = alg.generators(cfg);
    let num = &(&g.beta * &p_dot_sigma(alg, &g, pm)) - &g.alpha.scale_rational(pm.mass());
    let a = num.scale_rational(&inv_e);
    let b = -&alg.product(&[&alg.i(), &g.beta, &g.alpha]);
    Ok((a, b))
}

fn eq_check(
    label: &str,
    description: &str,
    lhs: &GroupAlgebraElement,
    rhs: &GroupAlgebraElement,
    alg: &DiracAlgebra,
) -> Check {
    Check::new(label, description, lhs == rhs).or_counterexample(Some(format!(
        "lhs = {}; rhs = {}",
        alg.describe(lhs),
        alg.describe(rhs)
    )))
}

/// Square-one and anticommutation relations of a generator list.
pub fn clifford_relations(alg: &DiracAlgebra, prefix: &str, gens: &[(&str, &GroupAlgebraElement)]) -> Vec<Check> {
    let one = alg.one();
    let zero = alg.zero();
    let mut out = Vec::new();
    for (name, g) in gens {
        out.push(eq_check(
            &format!("{prefix}{name}_square"),
            &format!("{name}^2 = 1"),
            &(*g * *g),
            &one,
            alg,
        ));
    }
    for (i, (n1, g1)) in gens.iter().enumerate() {
        for (n2, g2) in &gens[i + 1..] {
            let anti = g1.anticommutator(g2).expect("same algebra");
            out.push(eq_check(
                &format!("{prefix}{n1}_{n2}_anticommute"),
                &format!("{n1} {n2} + {n2} {n1} = 0"),
                &anti,
                &zero,
                alg,
            ));
        }
    }
    out
}

/// Algebra relations of the configuration: `α`, `β` form a Clifford pair,
/// the `σ` form a Clifford triple, and each `σ` commutes with `α` and `β`.
pub fn generator_relations(alg: &DiracAlgebra, cfg: DiracConfig) -> Vec<Check> {
    let g = alg.generators(cfg);
    let mut out = clifford_relations(alg, "", &[("alpha", &g.alpha), ("beta", &g.beta)]);
    if cfg == DiracConfig::ThreeD {
        let names = ["sigma1", "sigma2", "sigma3"];
        let sig: Vec<_> = names.iter().copied().zip(g.sigma.iter()).collect();
        out.extend(clifford_relations(alg, "", &sig));
        for (n, s) in &sig {
            for (m, x) in [("alpha", &g.alpha), ("beta", &g.beta)] {
                let c = s.commutator(x).expect("same algebra");
                out.push(eq_check(
                    &format!("{n}_{m}_commute"),
                    &format!("{n} {m} = {m} {n}"),
                    &c,
                    &alg.zero(),
                    alg,
                ));
            }
        }
    }
    out
}

/// Fermion algebra of `U`, `U†`: both nilpotent, `UU† + U†U = 4E²`,
/// `(U + U†)² = 4E²` and `(U − U†)² = −4E²`.
pub fn fermion_relations(alg: &DiracAlgebra, cfg: DiracConfig, pm: &EnergyMomentum) -> Result<Vec<Check>> {
    let u = build_u(alg, cfg, pm)?;
    let ud = build_udag(alg, cfg, pm)?;
    let zero = alg.zero();
    let four_e2 = alg.scalar(&Rational::from(4) * &(pm.energy() * pm.energy()));
    let sum = &u + &ud;
    let diff = &u - &ud;
    Ok(vec![
        eq_check("u_nilpotent", "U^2 = 0", &(&u * &u), &zero, alg),
        eq_check("udag_nilpotent", "U†^2 = 0", &(&ud * &ud), &zero, alg),
        eq_check(
            "anticommutator",
            "UU† + U†U = 4E^2",
            &u.anticommutator(&ud)?,
            &four_e2,
            alg,
        ),
        eq_check("sum_square", "(U + U†)^2 = 4E^2", &(&sum * &sum), &four_e2, alg),
        eq_check(
            "difference_square",
            "(U - U†)^2 = -4E^2",
            &(&diff * &diff),
            &-&four_e2,
            alg,
        ),
    ])
}

/// Majorana split relations: `A² = B² = 1`, `AB + BA = 0`,
/// `(A + Bi)E = U`, `(A − Bi)E = U†`.
pub fn majorana_split_relations(alg: &DiracAlgebra, cfg: DiracConfig, pm: &EnergyMomentum) -> Result<Vec<Check>> {
    let (a, b) = majorana_split(alg, cfg, pm)?;
    let u = build_u(alg, cfg, pm)?;
    let ud = build_udag(alg, cfg, pm)?;
    let bi = &b * &alg.i();
    let e = pm.energy();
    let one = alg.one();
    Ok(vec![
        eq_check("split_a_square", "A^2 = 1", &(&a * &a), &one, alg),
        eq_check("split_b_square", "B^2 = 1", &(&b * &b), &one, alg),
        eq_check(
            "split_anticommute",
            "AB + BA = 0",
            &a.anticommutator(&b)?,
            &alg.zero(),
            alg,
        ),
        eq_check("split_u", "(A + Bi)E = U", &(&a + &bi).scale_rational(e), &u, alg),
        eq_check("split_udag", "(A - Bi)E = U†", &(&a - &bi).scale_rational(e), &ud, alg),
    ])
}

/// Applies `𝒟 = 𝒪βα` to `Uψ`, `ψ = e^{i(p·r − Et)}`, and to the
/// time-reversed `U†ψ̃`, `ψ̃ = e^{i(p·r + Et)}`.
pub fn verify_plane_wave(alg: &DiracAlgebra, cfg: DiracConfig, pm: &EnergyMomentum) -> Result<Vec<Check>> {
    let d = modified_operator(alg, cfg, pm.mass());
    let u = build_u(alg, cfg, pm)?;
    let ud = build_udag(alg, cfg, pm)?;
    let one = alg.one();
    let mut out = Vec::new();
    for (tag, phase, nil, name) in [("", pm.phase(), &u, "U"), ("reversed_", pm.reversed_phase(), &ud, "U†")] {
        let psi = TrigWave::exp_i(&one, phase);
        let d_psi = apply_operator(&d, &psi)?;
        let expected = psi.left_mul(nil);
        out.push(
            Check::new(format!("{tag}symbol"), format!("D psi = {name} psi"), d_psi == expected)
                .or_counterexample(Some(describe_wave(alg, &d_psi))),
        );
        let residual = apply_operator(&d, &psi.left_mul(nil))?;
        out.push(
            Check::new(
                format!("{tag}solution"),
                format!("D({name} psi) = 0 with psi = exp(i({}))", psi.phase),
                residual.is_zero(),
            )
            .or_counterexample(Some(format!("residual {}", describe_wave(alg, &residual)))),
        );
    }
    Ok(out)
}

/// `A cos θ + B sin θ` with `A`, `B` in monomial coordinates.
pub fn describe_wave(alg: &DiracAlgebra, w: &TrigWave<GroupAlgebraElement>) -> String {
    format!(
        "[{}] cos({}) + [{}] sin({})",
        alg.describe(&w.cos),
        w.phase,
        alg.describe(&w.sin),
        w.phase
    )
}
