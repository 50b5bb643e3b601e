//! Verification suites. Each returns ordered check results; exact checks
//! carry no tolerance, floating-point ones record the tolerance they used.

use ccrop_core::certificate::certify_asymmetry;
use ccrop_core::cone::Cone;
use ccrop_core::fock::{check_covariance, check_weyl_relation, gram_matrix, ExpCombo};
use ccrop_core::lattice::{Point, Window};
use ccrop_core::module::{translate_equivalent, ConeModule, Decision, ModuleExpr};
use ccrop_core::opposite_rep::{class_make, inversion_to_vb, rerepresent};
use ccrop_core::rational::{neg, Rational};
use ccrop_core::sparse::{RepContext, SparseVector};
use ccrop_core::Error;
use serde_json::{json, Value};

use crate::codec;
use crate::config::module_spec;
use crate::error::CliResult;
use crate::psd::{hermitian_spectrum, is_psd, max_hermitian_defect};
use crate::report::{CheckResult, Status};
use crate::sampling::{window_points, Sampler};

/// Radius of the window random vectors are supported on.
const SUPPORT_RADIUS: i64 = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Params {
    pub window: i64,
    pub seed: u64,
    pub cases: usize,
    pub tol: f64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            window: 10,
            seed: 0,
            cases: 100,
            tol: 1e-9,
        }
    }
}

impl Params {
    fn window(&self) -> CliResult<Window> {
        Ok(Window::new(self.window)?)
    }

    fn support_radius(&self) -> i64 {
        self.window.min(SUPPORT_RADIUS)
    }
}

mod stream {
    pub const CONE: u64 = 1;
    pub const OPPOSITE_REP: u64 = 2;
    pub const DILATION: u64 = 3;
    pub const PURITY: u64 = 4;
    pub const WOLD: u64 = 5;
    pub const CCR: u64 = 6;
    pub const TRANSLATE: u64 = 7;
}

fn case_name(prefix: &str, i: usize) -> String {
    format!("{prefix}/case-{i:03}")
}

pub fn cone_check(cone: &Cone, p: &Params) -> CliResult<Vec<CheckResult>> {
    let mut out = Vec::new();
    let gens_inside = cone.generators().iter().map(|g| cone.contains(g)).collect::<Result<Vec<_>, _>>()?;
    out.push(CheckResult::exact(
        "halfspaces",
        gens_inside.iter().all(|b| *b),
        json!({
            "normals": cone.int_normals(),
            "pointed": cone.is_pointed(),
            "steps": codec::points(cone.lattice_steps()),
        }),
    ));

    let mut s = Sampler::new(p.seed, stream::CONE);
    let d = cone.dim();
    let mut mismatches = Vec::new();
    for _ in 0..p.cases {
        let den = s.below(6) as i64 + 1;
        let x: Vec<Rational> = s.point(d, 12).coords().iter().map(|n| Rational::new((*n).into(), den.into())).collect();
        if cone.contains(&x)? != cone.contains_by_generators(&x)? {
            mismatches.push(codec::ratvec(&x));
        }
    }
    out.push(CheckResult::exact(
        "duality",
        mismatches.is_empty(),
        json!({ "samples": p.cases, "mismatches": mismatches }),
    ));

    let a = cone.interior_lattice_point();
    let mut failures = Vec::new();
    for _ in 0..p.cases {
        let x = s.point(d, p.window);
        let n = cone.archimedean_bound_lattice(&a, &x)?;
        let dominated = |k: u64| cone.interior_point(&(&a.scale(k as i64) - &x));
        if !dominated(n) || (n > 1 && dominated(n - 1)) {
            failures.push(json!({ "x": codec::point(&x), "bound": n }));
        }
    }
    out.push(CheckResult::exact(
        "archimedean",
        failures.is_empty(),
        json!({ "index": codec::point(&a), "samples": p.cases, "failures": failures }),
    ));

    if d >= 2 {
        let w = cone.outside_witness()?;
        let ok = !cone.contains(&w)? && !cone.contains(&neg(&w))?;
        out.push(CheckResult::exact("outside-witness", ok, json!({ "witness": codec::ratvec(&w) })));
    }
    Ok(out)
}

pub fn module_opposite(m: &ModuleExpr, p: &Params) -> CliResult<Vec<CheckResult>> {
    let w = p.window()?;
    let opp = m.opposite();
    let back = opp.opposite();
    let mut double = Vec::new();
    let mut reflected = Vec::new();
    for y in w.points(m.dim()) {
        if back.member(&y) != m.member(&y) {
            double.push(codec::point(&y));
        }
        if opp.member(&y) == m.member(&-&y) {
            reflected.push(codec::point(&y));
        }
    }
    let mut witness = json!({
        "module": module_spec(m),
        "opposite": module_spec(&opp),
        "window": p.window,
    });
    if let Some(plain) = opp.as_cone_module() {
        witness["opposite_as_cone_module"] = json!(module_spec(&ModuleExpr::Cone(plain)));
    }
    Ok(vec![
        CheckResult::exact("opposite", reflected.is_empty(), json!({ "description": witness, "disagreements": reflected })),
        CheckResult::exact("double-opposite", double.is_empty(), json!({ "window": p.window, "disagreements": double })),
    ])
}

/// Checks `m2 = m1 + z` on every window point.
pub fn verify_shift(m1: &ModuleExpr, m2: &ModuleExpr, z: &Point, w: &Window) -> bool {
    w.points(m1.dim()).all(|y| m2.member(&(&y + z)) == m1.member(&y))
}

pub fn translate_eq(m1: &ModuleExpr, m2: &ModuleExpr, p: &Params) -> CliResult<(CheckResult, Decision)> {
    let w = p.window()?;
    let d = translate_equivalent(m1, m2, &w)?;
    let status = match &d {
        Decision::Yes { shift } => Status::from_bool(verify_shift(m1, m2, shift, &w)),
        Decision::No(_) => Status::Pass,
        Decision::Inconclusive(_) => Status::Inconclusive,
    };
    let result = CheckResult {
        name: "translate-eq".into(),
        status,
        witness: codec::decision(&d),
        tolerance: None,
    };
    Ok((result, d))
}

pub fn certify(cone: &Cone) -> CliResult<(Vec<CheckResult>, Value)> {
    let cert = certify_asymmetry(cone)?;
    let w = &cert.witness;
    let witness_ok = !cone.contains(w)? && !cone.contains(&neg(w))?;
    let cone_ok = cert.cone_report.verify(cone)? && cert.cone_report.extreme_points.len() == 1;
    let opp_ok = cert.opposite_report.verify(cone)? && cert.opposite_report.extreme_points.is_empty();
    let decision_ok = matches!(cert.decision, Decision::No(_));
    let replay_ok = cert.replay(cone)?;
    let results = vec![
        CheckResult::exact("witness", witness_ok, json!({ "x": codec::ratvec(w) })),
        CheckResult::exact("cone-extreme-points", cone_ok, codec::extreme_report(&cert.cone_report)),
        CheckResult::exact("opposite-extreme-points", opp_ok, codec::extreme_report(&cert.opposite_report)),
        CheckResult::exact("translate-decision", decision_ok, codec::decision(&cert.decision)),
        CheckResult::exact("replay", replay_ok, json!({ "chain": cert.chain })),
    ];
    Ok((results, codec::certificate(&cert)))
}

pub fn opposite_rep(m: &ModuleExpr, p: &Params) -> CliResult<Vec<CheckResult>> {
    let ctx = RepContext::new(m.clone());
    let cone = m.cone();
    let r = p.support_radius();
    let outside = window_points(m.dim(), r, |y| !m.member(y));
    let inside = window_points(m.dim(), r, |y| m.member(y));
    let mut s = Sampler::new(p.seed, stream::OPPOSITE_REP);
    let mut out = Vec::with_capacity(p.cases);
    for i in 0..p.cases {
        let a = s.interior_element(cone, 1);
        let b = s.interior_element(cone, 1);
        let samples: Vec<SparseVector> = (0..3).map(|_| s.vector_on(&outside, 6, 1.0)).collect();
        let chain = inversion_to_vb(&ctx, &samples, &a, &b, p.tol)?;

        let xi = ctx.kernel_project(&a, &s.vector_on(&inside, 6, 1.0));
        let class = class_make(&ctx, xi, a.clone())?;
        let c = s.semigroup_element(cone, 2);
        let other = rerepresent(&ctx, &class, &c)?;
        let well_defined = other.same_class(&class) && other.normal() == class.normal();

        out.push(CheckResult::toleranced(
            case_name("opposite-rep", i),
            chain.passed() && well_defined,
            json!({
                "a": codec::point(&a),
                "b": codec::point(&b),
                "reflection_support": chain.reflection_support_ok,
                "reflection_intertwining": chain.reflection_intertwining_error,
                "t_intertwining": chain.t_intertwining_error,
                "gram_t": chain.gram_error_t,
                "gram_chain": chain.gram_error_chain,
                "inner_routes": chain.inner_route_error,
                "rerepresented_by": codec::point(&c),
                "class": codec::class(&class),
                "well_defined": well_defined,
            }),
            p.tol,
        ));
    }
    Ok(out)
}

pub fn dilation(m: &ModuleExpr, p: &Params) -> CliResult<Vec<CheckResult>> {
    let ctx = RepContext::new(m.clone());
    let cone = m.cone();
    let inside = window_points(m.dim(), p.support_radius(), |y| m.member(y));
    let mut s = Sampler::new(p.seed, stream::DILATION);
    let mut out = Vec::with_capacity(p.cases + 1);
    for i in 0..p.cases {
        let x = s.semigroup_element(cone, 2);
        let f = s.vector_on(&inside, 6, 1.0);
        let forward = f.translate(&x).restrict(|y| m.member(y)) == ctx.v_shift(&x, &f)?;
        let backward = f.translate(&-&x).restrict(|y| m.member(y)) == ctx.v_adjoint(&x, &f)?;
        out.push(CheckResult::exact(
            case_name("compression", i),
            forward && backward,
            json!({ "x": codec::point(&x), "f": codec::vector(&f) }),
        ));
    }
    let report = ctx.check_dilation_minimality(&p.window()?)?;
    out.push(CheckResult::exact(
        "coverage",
        report.passed(),
        json!({
            "direction": codec::point(&report.direction),
            "window": p.window,
            "covered": report.covered.len(),
            "uncovered": codec::points(&report.uncovered),
            "max_shift": report.covered.iter().map(|c| c.shift.coords().iter().copied().max().unwrap_or(0)).max(),
        }),
    ));
    Ok(out)
}

pub fn purity(m: &ModuleExpr, p: &Params) -> CliResult<Vec<CheckResult>> {
    let ctx = RepContext::new(m.clone());
    let a = m.cone().interior_lattice_point();
    let inside = window_points(m.dim(), p.window, |y| m.member(y));
    let outside = window_points(m.dim(), p.window, |y| !m.member(y));
    let mut s = Sampler::new(p.seed, stream::PURITY);
    let mut out = Vec::with_capacity(2 * p.cases);
    for (prefix, pool, in_a) in [("purity", &inside, true), ("complement", &outside, false)] {
        for i in 0..p.cases {
            let Some(y) = s.choose(pool).cloned() else {
                out.push(CheckResult::exact(case_name(prefix, i), false, json!({ "error": "no window points" })));
                continue;
            };
            let e = if in_a { ctx.purity_escape(&y, &a)? } else { ctx.complement_escape(&y, &a)? };
            let at = |n: u64| if in_a { &y - &a.scale(n as i64) } else { &y + &a.scale(n as i64) };
            let escaped = m.member(&at(e.steps)) != in_a;
            let minimal = m.member(&at(e.steps - 1)) == in_a;
            out.push(CheckResult::exact(
                case_name(prefix, i),
                escaped && minimal && e.steps <= e.bound,
                json!({ "y": codec::point(&y), "a": codec::point(&a), "steps": e.steps, "bound": e.bound }),
            ));
        }
    }
    Ok(out)
}

pub fn wold(m: &ModuleExpr, p: &Params) -> CliResult<Vec<CheckResult>> {
    let ctx = RepContext::new(m.clone());
    let cone = m.cone();
    let inside = window_points(m.dim(), p.support_radius(), |y| m.member(y));
    let mut s = Sampler::new(p.seed, stream::WOLD);
    let mut out = Vec::with_capacity(p.cases + 1);
    for i in 0..p.cases {
        let x = s.semigroup_element(cone, 2);
        let f = s.vector_on(&inside, 6, 1.0);
        let residue = ctx.kernel_project(&x, &ctx.v_shift(&x, &f)?);
        out.push(CheckResult::exact(
            case_name("wandering", i),
            residue.is_zero(),
            json!({ "x": codec::point(&x), "residue": codec::vector(&residue) }),
        ));
    }
    let w = p.window()?;
    let mut mismatched = Vec::new();
    let mut sizes = Vec::new();
    let mut indices = vec![cone.interior_lattice_point()];
    indices.extend(cone.lattice_steps().iter().cloned());
    for a in &indices {
        let basis = ctx.kernel_window_basis(a, &w)?;
        let enumerated: Vec<Point> = w.points(m.dim()).filter(|y| m.member(y) && !m.member(&(y - a))).collect();
        sizes.push(json!({ "a": codec::point(a), "size": basis.len() }));
        if basis != enumerated {
            mismatched.push(codec::point(a));
        }
    }
    out.push(CheckResult::exact(
        "kernel-basis",
        mismatched.is_empty(),
        json!({ "window": p.window, "indices": sizes, "mismatched": mismatched }),
    ));
    Ok(out)
}

pub fn ccr(m: &ModuleExpr, p: &Params) -> CliResult<Vec<CheckResult>> {
    let ctx = RepContext::new(m.clone());
    let cone = m.cone();
    let r = p.support_radius().min(3);
    let anywhere = window_points(m.dim(), r, |_| true);
    let inside = window_points(m.dim(), r, |y| m.member(y));
    let mut s = Sampler::new(p.seed, stream::CCR);
    let mut out = Vec::with_capacity(p.cases);
    for i in 0..p.cases {
        let xi = s.vector_on(&anywhere, 3, 0.5);
        let eta = s.vector_on(&anywhere, 3, 0.5);
        let xi_a = s.vector_on(&inside, 3, 0.5);
        let x = s.semigroup_element(cone, 2);
        let probes: Vec<ExpCombo> = (0..2)
            .map(|_| ExpCombo::new((0..2).map(|_| (s.coeff(1.0), s.vector_on(&inside, 3, 0.5)))))
            .collect();
        let weyl = check_weyl_relation(&xi, &eta, &probes, p.tol)?;
        let cov = check_covariance(&ctx, &x, &xi_a, &probes, p.tol)?;

        let mut family = vec![xi.clone(), eta.clone(), xi.add(&eta), xi_a.clone(), ctx.v_shift(&x, &xi_a)?];
        family.extend(probes.iter().flat_map(|c| c.terms().iter().map(|(_, g)| g.clone())));
        let gram = gram_matrix(&family)?;
        let spectrum = hermitian_spectrum(&gram);
        let hermitian = max_hermitian_defect(&gram);
        let psd = is_psd(spectrum, p.tol) && hermitian <= p.tol;

        out.push(CheckResult::toleranced(
            case_name("ccr", i),
            weyl.passed() && cov.passed() && psd,
            json!({
                "xi": codec::vector(&xi),
                "eta": codec::vector(&eta),
                "x": codec::point(&x),
                "weyl_discrepancy": weyl.max_discrepancy(),
                "covariance_discrepancy": cov.max_discrepancy(),
                "gram_size": family.len(),
                "gram_min_eigenvalue": spectrum.min,
                "gram_max_eigenvalue": spectrum.max,
            }),
            p.tol,
        ));
    }
    Ok(out)
}

fn random_cone_module(s: &mut Sampler, cone: &Cone) -> CliResult<ModuleExpr> {
    let n = s.below(3) + 1;
    let offs: Vec<Point> = (0..n).map(|_| s.point(cone.dim(), 2)).collect();
    Ok(ModuleExpr::cone_module(cone.clone(), offs)?)
}

/// An offset comparable to none of `offs`, so adding it grows the antichain.
fn incomparable_offset(s: &mut Sampler, cone: &Cone, offs: &[Point]) -> Option<Point> {
    (0..256).map(|_| s.point(cone.dim(), 4)).find(|g| {
        offs.iter().all(|f| !cone.contains_point(&(g - f)) && !cone.contains_point(&(f - g)))
    })
}

/// Random pairs: even cases are genuine translates, odd cases perturbed by an
/// extra incomparable offset, which changes the antichain size.
pub fn translate_soundness(cone: &Cone, p: &Params) -> CliResult<Vec<CheckResult>> {
    if cone.dim() < 2 {
        return Err(Error::DimensionOne("every pair of half-line modules is a translate pair").into());
    }
    let w = p.window()?;
    let mut s = Sampler::new(p.seed, stream::TRANSLATE);
    let mut out = Vec::with_capacity(p.cases);
    let mut i = 0;
    while out.len() < p.cases {
        let m1 = random_cone_module(&mut s, cone)?;
        let z = s.point(cone.dim(), 3);
        let genuine = i % 2 == 0;
        let shifted = m1.translate(&z);
        let m2 = if genuine {
            shifted
        } else {
            let Some(g) = incomparable_offset(&mut s, cone, shifted.inner().offsets()) else {
                continue;
            };
            let mut offs = shifted.inner().offsets().to_vec();
            offs.push(g);
            ModuleExpr::Cone(ConeModule::new(cone.clone(), offs)?)
        };
        let (m1, m2, expected) = if s.coin() {
            (m1.opposite(), m2.opposite(), -&z)
        } else {
            (m1, m2, z)
        };
        let decision = translate_equivalent(&m1, &m2, &w)?;
        let ok = match &decision {
            Decision::Yes { shift } => genuine && *shift == expected && verify_shift(&m1, &m2, shift, &w),
            Decision::No(_) => !genuine,
            Decision::Inconclusive(_) => false,
        };
        out.push(CheckResult::exact(
            case_name("translate", i),
            ok,
            json!({
                "left": module_spec(&m1),
                "right": module_spec(&m2),
                "constructed": if genuine { "translate" } else { "perturbed" },
                "decision": codec::decision(&decision),
            }),
        ));
        i += 1;
    }
    Ok(out)
}

/// `N` against its opposite: in one parameter they are translates by `1`.
pub fn one_parameter(cone: &Cone, p: &Params) -> CliResult<CheckResult> {
    let n = ModuleExpr::semigroup(cone.clone());
    let (mut result, decision) = translate_eq(&n, &n.opposite(), p)?;
    result.name = "one-parameter-symmetry".into();
    if !matches!(decision, Decision::Yes { .. }) {
        result.status = Status::Fail;
    }
    Ok(result)
}
