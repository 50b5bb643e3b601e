//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ccrop::report::{CheckResult, Status};
use ccrop::suites::{self, Params};
use ccrop_core::certificate::{certify_asymmetry, Verdict};
use ccrop_core::cone::Cone;
use ccrop_core::lattice::{Point, Window};
use ccrop_core::module::{translate_equivalent, Decision, ExtremeCertificate, ModuleExpr};
use ccrop_core::rational::{from_ints, neg};

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Duration,
    check: fn() -> Result<String, String>,
}

fn cone(gens: &[&[i64]]) -> Cone {
    let gens: Vec<_> = gens.iter().map(|g| from_ints(g)).collect();
    Cone::from_generators(gens[0].len(), &gens).expect("valid cone")
}

fn quadrant() -> Cone {
    cone(&[&[1, 0], &[0, 1]])
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn all_pass(results: &[CheckResult]) -> Result<(), String> {
    match results.iter().find(|r| r.status != Status::Pass) {
        None => Ok(()),
        Some(r) => Err(format!("{} is {}: {}", r.name, r.status.as_str(), r.witness)),
    }
}

fn params(window: i64, cases: usize) -> Params {
    Params {
        window,
        seed: 0,
        cases,
        tol: 1e-9,
    }
}

fn headline() -> Result<String, String> {
    let q = quadrant();
    let cert = certify_asymmetry(&q).map_err(|e| e.to_string())?;
    let x = &cert.witness;
    // both membership routes, H-form and LP, must reject x and -x
    for v in [x.clone(), neg(x)] {
        ensure(!q.contains(&v).unwrap() && !q.contains_by_generators(&v).unwrap(), "witness inside P ∪ -P")?;
    }
    ensure(cert.cone_report.extreme_points == vec![from_ints(&[0, 0])], "ext(P) ≠ {0}")?;
    ensure(cert.cone_report.verify(&q).unwrap(), "apex certificate does not verify")?;
    ensure(cert.opposite_report.extreme_points.is_empty(), "ext(-Ω^c) ≠ ∅")?;
    ensure(
        matches!(cert.opposite_report.certificate, ExtremeCertificate::Midpoint { .. }),
        "opposite lacks a midpoint certificate",
    )?;
    ensure(cert.opposite_report.verify(&q).unwrap(), "midpoint certificate does not verify")?;
    ensure(matches!(cert.decision, Decision::No(_)), "translate decision is not NO")?;
    ensure(cert.replay(&q).unwrap() && cert.verdict == Verdict::Asymmetric, "replay failed")?;
    Ok(format!("verdict ASYMMETRIC, witness ({},{})", x[0], x[1]))
}

fn one_parameter() -> Result<String, String> {
    let n = ModuleExpr::semigroup(cone(&[&[1]]));
    let w = Window::new(20).unwrap();
    let d = translate_equivalent(&n, &n.opposite(), &w).map_err(|e| e.to_string())?;
    ensure(d == Decision::Yes { shift: Point(vec![1]) }, format!("got {d:?}"))?;
    ensure(suites::verify_shift(&n, &n.opposite(), &Point(vec![1]), &w), "shift fails on window")?;
    Ok("YES(z=1)".into())
}

fn double_opposite() -> Result<String, String> {
    let q = quadrant();
    let modules = [
        ModuleExpr::semigroup(q.clone()),
        ModuleExpr::cone_module(q, vec![Point(vec![1, 0]), Point(vec![0, 1])]).unwrap(),
        ModuleExpr::semigroup(cone(&[&[1, 0], &[1, 1]])),
    ];
    let w = Window::new(20).unwrap();
    let mut checked = 0;
    for m in &modules {
        let c = m.cone();
        let offsets = m.inner().offsets();
        // oracle from the definitions, membership through the generator LP
        let in_m = |y: &Point| offsets.iter().any(|f| c.contains_by_generators(&(y - f).to_rational()).unwrap());
        let in_opp = |y: &Point| !in_m(&-y);
        let in_opp_opp = |y: &Point| !in_opp(&-y);
        let back = m.opposite().opposite();
        for y in w.points(2) {
            let expected = in_opp_opp(&y);
            ensure(back.member(&y) == expected && m.member(&y) == expected, format!("disagreement at {y}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} window points"))
}

fn opposite_rep() -> Result<String, String> {
    let m = ModuleExpr::semigroup(quadrant());
    let rs = suites::opposite_rep(&m, &params(10, 100)).map_err(|e| e.to_string())?;
    all_pass(&rs)?;
    ensure(rs.iter().all(|r| r.witness["well_defined"] == true), "well-definedness")?;
    Ok(format!("{} cases", rs.len()))
}

fn dilation() -> Result<String, String> {
    let m = ModuleExpr::semigroup(quadrant());
    let rs = suites::dilation(&m, &params(10, 100)).map_err(|e| e.to_string())?;
    all_pass(&rs)?;
    let coverage = rs.last().unwrap();
    ensure(coverage.witness["covered"] == 441, "coverage is not the full window")?;
    Ok(format!("{} compressions, 441/441 covered", rs.len() - 1))
}

fn purity() -> Result<String, String> {
    let m = ModuleExpr::semigroup(quadrant());
    let rs = suites::purity(&m, &params(10, 50)).map_err(|e| e.to_string())?;
    all_pass(&rs)?;
    Ok(format!("{} escapes within bound, minimal", rs.len()))
}

fn wold() -> Result<String, String> {
    let m = ModuleExpr::semigroup(quadrant());
    let rs = suites::wold(&m, &params(10, 100)).map_err(|e| e.to_string())?;
    all_pass(&rs)?;
    Ok("kernel∘V = 0; Ker(V_a^*) = A \\ (A+a)".into())
}

fn ccr() -> Result<String, String> {
    let m = ModuleExpr::semigroup(quadrant());
    let rs = suites::ccr(&m, &params(10, 50)).map_err(|e| e.to_string())?;
    all_pass(&rs)?;
    let worst = rs
        .iter()
        .map(|r| r.witness["weyl_discrepancy"].as_f64().unwrap().max(r.witness["covariance_discrepancy"].as_f64().unwrap()))
        .fold(0.0, f64::max);
    Ok(format!("50 Weyl + 50 covariance, max discrepancy {worst:.1e}"))
}

fn translate_soundness() -> Result<String, String> {
    let rs = suites::translate_soundness(&quadrant(), &params(10, 20)).map_err(|e| e.to_string())?;
    all_pass(&rs)?;
    let genuine = rs.iter().filter(|r| r.witness["constructed"] == "translate").count();
    ensure(genuine == 10 && rs.len() == 20, "not a 10/10 split")?;
    let yes = rs.iter().filter(|r| r.witness["decision"]["answer"] == "YES").count();
    ensure(yes == 10, format!("{yes} YES answers"))?;
    Ok("10 YES verified, 10 NO".into())
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "headline counterexample", limit: Duration::from_secs(1), check: headline },
        Criterion { id: 2, title: "one-parameter symmetry", limit: Duration::from_secs(1), check: one_parameter },
        Criterion { id: 3, title: "double opposite", limit: Duration::from_secs(5), check: double_opposite },
        Criterion { id: 4, title: "opposite representation", limit: Duration::from_secs(10), check: opposite_rep },
        Criterion { id: 5, title: "dilation", limit: Duration::from_secs(5), check: dilation },
        Criterion { id: 6, title: "purity", limit: Duration::from_secs(5), check: purity },
        Criterion { id: 7, title: "wold step", limit: Duration::from_secs(2), check: wold },
        Criterion { id: 8, title: "ccr suite", limit: Duration::from_secs(10), check: ccr },
        Criterion { id: 9, title: "translate soundness", limit: Duration::from_secs(10), check: translate_soundness },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= c.limit {
                Ok(detail)
            } else {
                Err(format!("{detail}; over the {:?} limit", c.limit))
            }
        });
        let ms = elapsed.as_secs_f64() * 1e3;
        match outcome {
            Ok(detail) => println!("PASS [{}] {} ({ms:.0} ms): {detail}", c.id, c.title),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {} ({ms:.0} ms): {why}", c.id, c.title);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
