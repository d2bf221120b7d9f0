//! Verification suites: every identity the engine claims, checked exactly
//! on exhaustive bases and deterministic random samples.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::cayley_dickson::{associator, cd_conj, cd_mul, find_associator_witness, CDElement, MAX_LEVEL};
use crate::checkerboard::{check_lightcone_series, choice_coeff, eval_float, path_count_oracle, series_psi, Psi};
use crate::clifford::{iterate_clifford, CliffordAlgebra, CliffordElement};
use crate::dirac::{
    fermion_relations, generator_relations, lightcone_system, majorana_solutions, majorana_split_relations,
    pythagorean_triples, verify_plane_wave, DiracAlgebra, DiracConfig, EnergyMomentum,
};
use crate::error::{Error, Result};
use crate::group_algebra::{clifford_as_group_algebra, ga_action, ga_mul, ga_tensor, GroupAlgebra};
use crate::hat::{brace_mul, brace_to_hat, hat_mul, BraceSum, ComplexScalar, HatElement, InvolutiveAlgebra};
use crate::iterant::{direct_product, make_cyclic};
use crate::matrix::{iso_check, permutation_image, to_matrix};
use crate::report::{first_failure, Check, VerificationReport};
use crate::sample::Sampler;
use crate::scalar::{GaussianRational, Rational};
use crate::text::{eval_clifford, parse_group_element, Base};

/// `J₀(2)` to double precision, the value of `Σ (−1)^k/(k!)²`.
pub const BESSEL_J0_2: f64 = 0.223_890_779_141_235_67;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Hat,
    Group,
    Matrix,
    Cd,
    Dirac,
    Majorana,
    Checkerboard,
}

impl Scope {
    pub const SUITES: [Scope; 7] = [
        Scope::Hat,
        Scope::Group,
        Scope::Matrix,
        Scope::Cd,
        Scope::Dirac,
        Scope::Majorana,
        Scope::Checkerboard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Hat => "hat",
            Scope::Group => "group",
            Scope::Matrix => "matrix",
            Scope::Cd => "cd",
            Scope::Dirac => "dirac",
            Scope::Majorana => "majorana",
            Scope::Checkerboard => "checkerboard",
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Scope::All)
            .chain(Scope::SUITES)
            .find(|sc| sc.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown scope `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random samples per identity.
    pub samples: usize,
    /// Energy-momentum data for the Dirac suite.
    pub dirac: Vec<(DiracConfig, EnergyMomentum)>,
    /// Three-dimensional data for the Majorana suite.
    pub majorana: EnergyMomentum,
    /// One-dimensional data for the light-cone system.
    pub lightcone: EnergyMomentum,
    /// Truncation order for the series residual checks.
    pub series_order: u32,
}

fn on_shell(e: i64, p: &[i64], m: i64) -> EnergyMomentum {
    EnergyMomentum::new(e.into(), p.iter().map(|&x| x.into()).collect(), m.into()).expect("on shell")
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            samples: 1000,
            dirac: vec![
                (DiracConfig::OneD, on_shell(5, &[3], 4)),
                (DiracConfig::ThreeD, on_shell(5, &[1, 2, 2], 4)),
            ],
            majorana: on_shell(5, &[1, 2, 2], 4),
            lightcone: on_shell(5, &[3], 4),
            series_order: 32,
        }
    }
}

/// Runs one suite, or all of them on separate threads; reports come back
/// in the fixed order of [`Scope::SUITES`].
pub fn run(scope: Scope, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    if scope != Scope::All {
        return Ok(vec![run_suite(scope, opts)?]);
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = Scope::SUITES
            .iter()
            .map(|&sc| s.spawn(move || run_suite(sc, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

pub fn run_suite(scope: Scope, opts: &SuiteOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let checks = match scope {
        Scope::All => return Err(Error::InvalidArgument("`all` is not a single suite".into())),
        Scope::Hat => hat_suite(opts)?,
        Scope::Group => group_suite(opts)?,
        Scope::Matrix => matrix_suite(opts)?,
        Scope::Cd => cd_suite(opts)?,
        Scope::Dirac => dirac_suite(opts)?,
        Scope::Majorana => majorana_suite(opts)?,
        Scope::Checkerboard => checkerboard_suite(opts)?,
    };
    let mut report = VerificationReport::new(scope.name());
    report.extend(checks);
    report.elapsed = start.elapsed();
    Ok(report)
}

fn check(label: impl Into<String>, description: impl Into<String>, failure: Option<String>) -> Check {
    Check::new(label, description, failure.is_none()).or_counterexample(failure)
}

/// Associativity and the involution laws of `Â` on random samples.
pub fn hat_laws<A: InvolutiveAlgebra>(
    name: &str,
    samples: usize,
    rng: &mut Sampler,
    mut base: impl FnMut(&mut Sampler) -> A,
) -> Result<Vec<Check>> {
    let triples: Vec<_> = (0..samples)
        .map(|_| (rng.hat(&mut base), rng.hat(&mut base), rng.hat(&mut base)))
        .collect();
    let assoc = first_failure(
        triples.iter(),
        |(x, y, z)| Ok(hat_mul(&hat_mul(x, y), z) == hat_mul(x, &hat_mul(y, z))),
        |(x, y, z)| format!("x = {x:?}, y = {y:?}, z = {z:?}"),
    )?;
    let invol = first_failure(
        triples.iter(),
        |(x, y, _)| {
            Ok(x.star().star() == *x
                && x.times(y).star() == x.star().times(&y.star())
                && x.plus(y).star() == x.star().plus(&y.star()))
        },
        |(x, y, _)| format!("x = {x:?}, y = {y:?}"),
    )?;
    let eta_twist = first_failure(
        triples.iter(),
        |(x, _, _)| {
            let eta = HatElement::eta(&x.a);
            let a = HatElement::base(x.a.clone());
            Ok(hat_mul(&hat_mul(&eta, &a), &eta) == HatElement::base(x.a.star()))
        },
        |(x, _, _)| format!("a = {:?}", x.a),
    )?;
    let unit = &triples.first().map(|t| t.0.a.clone());
    let eta_ok = unit.as_ref().is_none_or(|u| {
        let eta = HatElement::eta(u);
        let one = HatElement::base(u.one_like());
        hat_mul(&eta, &eta) == one && eta.star() == eta.negate()
    });
    Ok(vec![
        check(
            format!("{name}.assoc"),
            format!("(xy)z = x(yz) in the hat extension, {samples} random triples"),
            assoc,
        ),
        check(
            format!("{name}.involution"),
            format!("x** = x, (xy)* = x*y*, (x+y)* = x*+y*, {samples} random pairs"),
            invol,
        ),
        check(
            format!("{name}.eta_twist"),
            "eta a eta = a* for base elements",
            eta_twist,
        ),
        Check::new(format!("{name}.eta"), "eta^2 = 1 and eta* = -eta", eta_ok),
    ])
}

/// `η_i² = 1`, `η_iη_j = −η_jη_i` and `η_i⋆ = −η_i` on every generator pair.
pub fn clifford_generator_relations<A: InvolutiveAlgebra>(alg: &CliffordAlgebra<A>) -> Result<Option<String>> {
    let n = alg.n();
    let gens: Vec<_> = (1..=n).map(|k| alg.generator(k)).collect::<Result<_>>()?;
    let one = alg.one();
    for i in 0..n {
        if gens[i].mul(&gens[i]) != one {
            return Ok(Some(format!("h{}^2 != 1", i + 1)));
        }
        if gens[i].star() != gens[i].neg() {
            return Ok(Some(format!("h{}* != -h{}", i + 1, i + 1)));
        }
        for j in 0..n {
            if i != j && !gens[i].mul(&gens[j]).add(&gens[j].mul(&gens[i])).is_zero() {
                return Ok(Some(format!("h{}h{} + h{}h{} != 0", i + 1, j + 1, j + 1, i + 1)));
            }
        }
    }
    Ok(None)
}

/// `I² = J² = K² = IJK = −1`.
pub fn quaternion_failure<A: InvolutiveAlgebra>(
    i: &CliffordElement<A>,
    j: &CliffordElement<A>,
    k: &CliffordElement<A>,
) -> Option<String> {
    let minus_one = i.algebra().one().neg();
    [
        ("I^2", i.mul(i)),
        ("J^2", j.mul(j)),
        ("K^2", k.mul(k)),
        ("IJK", i.mul(j).mul(k)),
    ]
    .into_iter()
    .find(|(_, v)| *v != minus_one)
    .map(|(name, v)| format!("{name} = {v:?}"))
}

fn hat_suite(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut rng = Sampler::new(opts.seed);
    let n = opts.samples;
    let mut out = Vec::new();
    out.extend(hat_laws("real", n, &mut rng, |r| r.rational())?);
    out.extend(hat_laws("complex_conj", n, &mut rng, |r| r.gaussian())?);
    out.extend(hat_laws("iterant2", n, &mut rng, |r| r.real_iterant(2))?);

    for level in 1..=5 {
        let alg = iterate_clifford(Rational::one(), level);
        out.push(check(
            format!("clifford.n{level}"),
            format!("generators of R^[{level}] square to 1, anticommute and are negated by *"),
            clifford_generator_relations(&alg)?,
        ));
    }
    let r3 = iterate_clifford(Rational::one(), 3);
    let w = |word: &[usize]| r3.word(word, Rational::one());
    out.push(check(
        "quaternion.r3",
        "I = h2h1, J = h3h2, K = h1h3 satisfy I^2 = J^2 = K^2 = IJK = -1",
        quaternion_failure(&w(&[2, 1])?, &w(&[3, 2])?, &w(&[1, 3])?),
    ));
    let c2 = iterate_clifford(ComplexScalar(GaussianRational::one()), 2);
    let i = c2.scalar(ComplexScalar(GaussianRational::i()));
    let (eta, lambda) = (c2.generator(1)?, c2.generator(2)?);
    out.push(check(
        "quaternion.r2_complex",
        "with i commuting, I = i eta, J = i lambda, K = lambda eta satisfy I^2 = J^2 = K^2 = IJK = -1",
        quaternion_failure(&i.mul(&eta), &i.mul(&lambda), &lambda.mul(&eta)),
    ));
    let c1 = iterate_clifford(GaussianRational::one(), 1);
    let (i, eta) = (c1.scalar(GaussianRational::i()), c1.generator(1)?);
    let ie = i.mul(&eta);
    let hat_c_ok = eta.mul(&i).mul(&eta) == i.neg()
        && ie.mul(&ie) == c1.one()
        && ie.mul(&i).add(&i.mul(&ie)).is_zero()
        && ie.mul(&eta).add(&eta.mul(&ie)).is_zero();
    out.push(Check::new(
        "complex_hat",
        "over C with conjugation: eta i eta = -i, (i eta)^2 = 1, i eta anticommutes with i and eta",
        hat_c_ok,
    ));

    let samples: Vec<_> = (0..n.div_ceil(10))
        .map(|_| {
            let mut f = |r: &mut Sampler| r.rational();
            (
                rng.clifford(&r3, &mut f),
                rng.clifford(&r3, &mut f),
                rng.clifford(&r3, &mut f),
            )
        })
        .collect();
    let bad = first_failure(
        samples.iter(),
        |(x, y, z)| {
            let split_mul = hat_mul(&x.split_top()?, &y.split_top()?);
            Ok(x.mul(y).mul(z) == x.mul(&y.mul(z))
                && CliffordElement::join_top(&x.split_top()?) == *x
                && x.mul(y).split_top()? == split_mul)
        },
        |(x, y, z)| format!("x = {x}, y = {y}, z = {z}"),
    )?;
    out.push(check(
        "clifford.nested",
        format!(
            "R^[3] is associative and agrees with the nested hat product, {} random triples",
            samples.len()
        ),
        bad,
    ));

    let braces: Vec<_> = (0..n)
        .map(|_| {
            let mut b = || BraceSum::new(rng.gaussian(), rng.gaussian());
            (b(), b(), b())
        })
        .collect();
    let bad = first_failure(
        braces.iter(),
        |(u, v, w)| Ok(brace_mul(&brace_mul(u, v), w) == brace_mul(u, &brace_mul(v, w))),
        |(u, v, w)| format!("u = {u:?}, v = {v:?}, w = {w:?}"),
    )?;
    out.push(check(
        "brace.assoc",
        format!("brace algebra over C is associative, {n} random triples"),
        bad,
    ));
    let bad = first_failure(
        braces.iter(),
        |(u, v, _)| Ok(brace_to_hat(&brace_mul(u, v)) == hat_mul(&brace_to_hat(u), &brace_to_hat(v))),
        |(u, v, _)| format!("u = {u:?}, v = {v:?}"),
    )?;
    let one = GaussianRational::one();
    let eta_is_brace_one = brace_to_hat(&BraceSum::braced(one.clone())) == HatElement::eta(&one);
    out.push(check(
        "brace.iso",
        format!("x + {{y}} -> x + y eta is multiplicative with eta = {{1}}, {n} random pairs"),
        if eta_is_brace_one {
            bad
        } else {
            Some("{1} does not map to eta".into())
        },
    ));
    Ok(out)
}

fn group_suite(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut rng = Sampler::new(opts.seed);
    let n = opts.samples;
    let c2 = make_cyclic(2)?;
    let algebras = [
        ("c2", GroupAlgebra::cyclic(2)?),
        ("c3", GroupAlgebra::cyclic(3)?),
        ("c2xc2", GroupAlgebra::new(direct_product(&c2, &c2))),
    ];
    let mut out = Vec::new();
    for (name, alg) in &algebras {
        let triples: Vec<_> = (0..n)
            .map(|_| {
                (
                    rng.group_element(alg, false),
                    rng.group_element(alg, false),
                    rng.group_element(alg, false),
                )
            })
            .collect();
        let bad = first_failure(
            triples.iter(),
            |(x, y, z)| Ok(ga_mul(&ga_mul(x, y)?, z)? == ga_mul(x, &ga_mul(y, z)?)?),
            |(x, y, z)| format!("x = {x}, y = {y}, z = {z}"),
        )?;
        out.push(check(
            format!("{name}.assoc"),
            format!("(xy)z = x(yz), {n} random triples"),
            bad,
        ));
        let bad = first_failure(
            triples.iter(),
            |(x, y, z)| Ok(ga_mul(x, &y.try_add(z)?)? == ga_mul(x, y)?.try_add(&ga_mul(x, z)?)?),
            |(x, y, z)| format!("x = {x}, y = {y}, z = {z}"),
        )?;
        out.push(check(format!("{name}.distributive"), "x(y + z) = xy + xz", bad));
        let bad = first_failure(
            triples
                .iter()
                .take(n.div_ceil(2))
                .map(|(x, y, _)| (x, y, rng.iterant(alg.degree())))
                .collect::<Vec<_>>(),
            |(x, y, w)| Ok(ga_action(&ga_mul(x, y)?, w)? == ga_action(x, &ga_action(y, w)?)?),
            |(x, y, w)| format!("x = {x}, y = {y}, w = {w}"),
        )?;
        out.push(check(
            format!("{name}.module"),
            format!("(xy).w = x.(y.w), {} random samples", n.div_ceil(2)),
            bad,
        ));
    }

    for level in 1..=4 {
        let emb = clifford_as_group_algebra(level)?;
        let failed: Vec<String> = emb
            .verify()?
            .into_iter()
            .filter(|(_, ok)| !ok)
            .map(|(l, _)| l)
            .collect();
        out.push(check(
            format!("clifford_embedding.n{level}"),
            format!("R^[{level}] is realised inside (R^{})^[C2^{level}]", 1 << level),
            (!failed.is_empty()).then(|| failed.join("; ")),
        ));
    }

    let (a, b) = (&algebras[0].1, &algebras[1].1);
    let t = ga_tensor(a, b);
    let pairs: Vec<_> = (0..n.div_ceil(10))
        .map(|_| {
            (
                rng.group_element(a, false),
                rng.group_element(a, false),
                rng.group_element(b, false),
            )
        })
        .collect();
    let bad = first_failure(
        pairs.iter(),
        |(x1, x2, y)| {
            let (l1, l2, r) = (t.embed_left(x1)?, t.embed_left(x2)?, t.embed_right(y)?);
            Ok(ga_mul(&l1, &r)? == ga_mul(&r, &l1)? && t.embed_left(&ga_mul(x1, x2)?)? == ga_mul(&l1, &l2)?)
        },
        |(x1, x2, y)| format!("x1 = {x1}, x2 = {x2}, y = {y}"),
    )?;
    out.push(check(
        "tensor",
        "x (x) 1 commutes with 1 (x) y, and x -> x (x) 1 is multiplicative",
        bad,
    ));
    Ok(out)
}

fn matrix_suite(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=4 {
        out.extend(iso_check(n, opts.samples / 2, opts.seed)?);
    }
    let alg = GroupAlgebra::cyclic(2)?;
    let x = parse_group_element("[1,2]+[3,4]*s", &alg)?;
    let img = to_matrix(&x)?.to_string();
    let hat_img = eval_clifford("[1,2]+[3,4]*h", Base::Auto, 1)?
        .matrix_image()?
        .to_string();
    out.push(
        Check::new(
            "example",
            "[1,2] + [3,4] eta maps to [[1,3],[4,2]]",
            img == "[[1,3],[4,2]]" && hat_img == img,
        )
        .with_detail(format!("image {img}")),
    );
    let c2 = make_cyclic(2)?;
    let klein = GroupAlgebra::new(direct_product(&c2, &c2));
    let mut rng = Sampler::new(opts.seed);
    let pairs: Vec<_> = (0..opts.samples.div_ceil(10))
        .map(|_| (rng.group_element(&klein, false), rng.group_element(&klein, false)))
        .collect();
    let bad = first_failure(
        pairs.iter(),
        |(x, y)| Ok(permutation_image(&ga_mul(x, y)?) == permutation_image(x).mul(&permutation_image(y))?),
        |(x, y)| format!("x = {x}, y = {y}"),
    )?;
    out.push(check(
        "permutation_image",
        "the regular image of (R^4)^[C2xC2] is multiplicative",
        bad,
    ));
    Ok(out)
}

fn cd_suite(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut rng = Sampler::new(opts.seed);
    let mut out = Vec::new();
    for level in 0..=3 {
        let pairs: Vec<_> = (0..opts.samples).map(|_| (rng.cd(level), rng.cd(level))).collect();
        let bad = first_failure(
            pairs.iter(),
            |(x, y)| {
                Ok(cd_conj(&cd_mul(x, y)?) == cd_mul(&cd_conj(y), &cd_conj(x))?
                    && cd_conj(&cd_conj(x)) == *x
                    && cd_mul(x, y)?.norm() == &x.norm() * &y.norm())
            },
            |(x, y)| format!("x = {x}, y = {y}"),
        )?;
        out.push(check(
            format!("level{level}.conj"),
            format!(
                "conj(xy) = conj(y)conj(x), conj conj x = x and |xy|^2 = |x|^2|y|^2 at dimension {}, {} random pairs",
                1 << level,
                opts.samples
            ),
            bad,
        ));
    }
    for level in 0..=2 {
        let w = find_associator_witness(level)?;
        out.push(check(
            format!("level{level}.assoc"),
            format!("associative on all basis triples at dimension {}", 1 << level),
            w.map(|w| format!("witness {:?}", w.indices)),
        ));
    }
    let witness = find_associator_witness(3)?;
    let mut c = Check::new(
        "level3.witness",
        "dimension 8 has a basis triple with nonzero associator",
        witness.is_some(),
    );
    if let Some(w) = &witness {
        let (i, j, k) = w.indices;
        let lhs = cd_mul(
            &cd_mul(&CDElement::basis(3, i)?, &CDElement::basis(3, j)?)?,
            &CDElement::basis(3, k)?,
        )?;
        let rhs = cd_mul(
            &CDElement::basis(3, i)?,
            &cd_mul(&CDElement::basis(3, j)?, &CDElement::basis(3, k)?)?,
        )?;
        c = c.with_detail(format!(
            "(e{i} e{j}) e{k} = {lhs}, e{i} (e{j} e{k}) = {rhs}, associator {}",
            w.value
        ));
    }
    out.push(c);
    let triples: Vec<_> = (0..opts.samples.div_ceil(10))
        .map(|_| (rng.cd(MAX_LEVEL), rng.cd(MAX_LEVEL), rng.cd(MAX_LEVEL)))
        .collect();
    let nonassoc = triples
        .iter()
        .map(|(x, y, z)| associator(x, y, z).map(|a| !a.is_zero()))
        .collect::<Result<Vec<_>>>()?;
    out.push(Check::new(
        "level4.nonassoc",
        "random sedenion triples are generically non-associative",
        nonassoc.iter().any(|&b| b),
    ));
    Ok(out)
}

fn prefixed(prefix: &str, checks: Vec<Check>) -> impl Iterator<Item = Check> + '_ {
    checks.into_iter().map(move |mut c| {
        c.label = format!("{prefix}.{}", c.label);
        c
    })
}

fn cfg_tag(cfg: DiracConfig) -> &'static str {
    match cfg {
        DiracConfig::OneD => "1d",
        DiracConfig::ThreeD => "3d",
    }
}

fn dirac_suite(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let alg = DiracAlgebra::new();
    let mut out = Vec::new();
    for cfg in [DiracConfig::OneD, DiracConfig::ThreeD] {
        out.extend(prefixed(
            &format!("{}.generators", cfg_tag(cfg)),
            generator_relations(&alg, cfg),
        ));
    }
    for (cfg, pm) in &opts.dirac {
        let tag = cfg_tag(*cfg);
        let mut rel = fermion_relations(&alg, *cfg, pm)?;
        let u = crate::dirac::build_u(&alg, *cfg, pm)?;
        let ud = crate::dirac::build_udag(&alg, *cfg, pm)?;
        if let Some(c) = rel.iter_mut().find(|c| c.label == "anticommutator") {
            c.detail = Some(format!("UU† + U†U = {}", alg.describe(&u.anticommutator(&ud)?)));
        }
        let head = Check::new(format!("{tag}.data"), format!("on-shell data {pm}"), true).with_detail(format!(
            "U = {}\nU† = {}",
            alg.describe(&u),
            alg.describe(&ud)
        ));
        out.push(head);
        out.extend(prefixed(tag, rel));
        out.extend(prefixed(tag, verify_plane_wave(&alg, *cfg, pm)?));
        out.extend(prefixed(tag, majorana_split_relations(&alg, *cfg, pm)?));
    }
    let mut bad = None;
    for (p, m, e) in pythagorean_triples(20) {
        let pm = on_shell(e, &[p], m);
        if let Some(c) = fermion_relations(&alg, DiracConfig::OneD, &pm)?
            .into_iter()
            .find(|c| !c.passed)
        {
            bad = Some(format!("(p,m,E) = ({p},{m},{e}): {} fails", c.description));
            break;
        }
    }
    out.push(check(
        "triples",
        "U^2 = U†^2 = 0, UU† + U†U = 4E^2, (U ± U†)^2 = ±4E^2 for 20 triples (u^2-v^2, 2uv, u^2+v^2)",
        bad,
    ));
    Ok(out)
}

fn majorana_suite(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let alg = DiracAlgebra::new();
    let sol = majorana_solutions(&alg, &opts.majorana)?;
    let mut out = vec![
        Check::new("data", format!("on-shell data {}", opts.majorana), true).with_detail(format!(
            "A = {}\nB = {}",
            alg.describe(&sol.a),
            alg.describe(&sol.b)
        )),
    ];
    out.extend(sol.checks);
    Ok(out)
}

/// Binomial coefficients from Pascal's rule.
fn pascal(rows: usize) -> Vec<Vec<u64>> {
    let mut t: Vec<Vec<u64>> = vec![vec![1]];
    for n in 1..=rows {
        let prev = &t[n - 1];
        let row = (0..=n)
            .map(|k| if k == 0 || k == n { 1 } else { prev[k - 1] + prev[k] })
            .collect();
        t.push(row);
    }
    t
}

fn checkerboard_suite(opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let sys = lightcone_system(&opts.lightcone)?;
    out.push(Check::new(
        "lightcone.data",
        format!("on-shell data {}", opts.lightcone),
        true,
    ));
    out.extend(prefixed("lightcone", sys.checks));
    out.extend(prefixed("series", check_lightcone_series(opts.series_order)?));

    let psi0 = series_psi(Psi::Zero, 40)?;
    let one = Rational::one();
    let value = eval_float(&psi0, &one, &one);
    out.push(
        Check::new(
            "series.bessel",
            "psi0(1,1) at N = 40 is within 1e-9 of J0(2)",
            (value - BESSEL_J0_2).abs() < 1e-9,
        )
        .with_detail(format!("psi0(1,1) = {value:.17}, J0(2) = {BESSEL_J0_2:.17}")),
    );

    let mut rng = Sampler::new(opts.seed);
    let samples: Vec<_> = (0..opts.samples.clamp(1, 200))
        .map(|_| (rng.rational(), rng.nonzero_rational(), rng.int(1, 10) as u32))
        .collect();
    let bad = first_failure(
        samples.iter(),
        |(x, d, k)| {
            let x_prev = x - d;
            Ok(&choice_coeff(x, d, *k) - &choice_coeff(&x_prev, d, *k) == d * &choice_coeff(&x_prev, d, k - 1))
        },
        |(x, d, k)| format!("x = {x}, delta = {d}, k = {k}"),
    )?;
    out.push(check(
        "choice.difference",
        format!(
            "C[d]^x_k - C[d]^(x-d)_k = d C[d]^(x-d)_(k-1), {} random samples",
            samples.len()
        ),
        bad,
    ));
    let table = pascal(12);
    let mut bad = None;
    'outer: for (n, row) in table.iter().enumerate() {
        for (k, b) in row.iter().enumerate() {
            let c = choice_coeff(&Rational::from(n as i64), &one, k as u32);
            if c != Rational::from(*b as i64) {
                bad = Some(format!("n = {n}, k = {k}: {c} != {b}"));
                break 'outer;
            }
        }
    }
    out.push(check("choice.binomial", "C[1]^n_k = binomial(n, k) for n <= 12", bad));
    let x = Rational::new(3, 2)?;
    let k = 3;
    let limit = &x.pow(k) * &Rational::factorial(k).recip()?;
    let errors: Vec<Rational> = (0..=10)
        .map(|j| (&choice_coeff(&x, &Rational::new(1, 1i64 << j).expect("nonzero"), k) - &limit).abs())
        .collect();
    out.push(Check::new(
        "choice.limit",
        "|C[d]^x_k - x^k/k!| strictly decreases along d = 2^-j, j = 0..10 (x = 3/2, k = 3)",
        errors.windows(2).all(|w| w[1] < w[0]),
    ));
    let mut bad = None;
    for r in 1..=4u32 {
        for l in 1..=4u32 {
            let total: u64 = (0..r + l).map(|c| path_count_oracle(r, l, c)).sum();
            if total != table[(r + l) as usize][r as usize] {
                bad = Some(format!("R = {r}, L = {l}: {total} paths"));
            }
        }
    }
    out.push(check(
        "paths.total",
        "path counts over all corner numbers sum to binomial(R+L, R) for R, L <= 4",
        bad,
    ));
    Ok(out)
}
