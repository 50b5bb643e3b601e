//! Asymmetry certificates: the CCR flow of the shift representation on a
//! pointed cone is not cocycle conjugate to its opposite.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::lattice::Window;
use crate::module::{
    extreme_points_continuous, translate_equivalent, Decision, ExtremeReport, ModuleExpr,
    NoCertificate,
};
use crate::rational::{neg, RatVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Asymmetric,
}

/// The reasoning steps a certificate rests on, in order. The first three are
/// checked numerically by [`AsymmetryCertificate::replay`]; the rest are the
/// cited structural facts that turn them into the verdict.
pub const CHAIN: [&str; 6] = [
    "witness x satisfies x ∉ P and -x ∉ P, so P ∪ -P ≠ R^d",
    "P is pointed: its only extreme point is the apex 0",
    "-Ω^c is invariant under positive scaling and contains ±x, so it has no extreme point",
    "translations biject extreme points, hence -Ω^c ≠ P + z for every z",
    "V^A and its opposite V^B (B = -(Int A)^c) are unitarily equivalent iff A is a translate of B",
    "unitary inequivalence of V and V^op rules out a cocycle conjugacy between α^V and its opposite",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymmetryCertificate {
    pub witness: RatVec,
    pub cone_report: ExtremeReport,
    pub opposite_report: ExtremeReport,
    pub decision: Decision,
    pub chain: Vec<&'static str>,
    pub verdict: Verdict,
}

impl AsymmetryCertificate {
    /// Replays every numeric claim by membership tests against `cone`.
    pub fn replay(&self, cone: &Cone) -> Result<bool> {
        let witness_ok = !cone.contains(&self.witness)? && !cone.contains(&neg(&self.witness))?;
        let reports_ok = self.cone_report.verify(cone)? && self.opposite_report.verify(cone)?;
        let counts_differ =
            self.cone_report.extreme_points.len() != self.opposite_report.extreme_points.len();
        let decision_ok = matches!(
            &self.decision,
            Decision::No(NoCertificate::ExtremePoints { left, right })
                if **left == self.cone_report && **right == self.opposite_report
        );
        Ok(witness_ok && reports_ok && counts_differ && decision_ok)
    }
}

pub fn certify_asymmetry(cone: &Cone) -> Result<AsymmetryCertificate> {
    if cone.dim() == 1 {
        return Err(Error::DimensionOne(
            "no asymmetry in dimension 1: the opposite of a half-line module is its translate by one step",
        ));
    }
    if !cone.is_pointed() {
        return Err(Error::DegenerateCone("asymmetry certificates require a pointed cone".to_string()));
    }
    let witness = cone.outside_witness()?;
    let module = ModuleExpr::semigroup(cone.clone());
    let opposite = module.opposite();
    let cone_report = extreme_points_continuous(&module)?;
    let opposite_report = extreme_points_continuous(&opposite)?;
    let window = Window::new(1)?;
    let decision = translate_equivalent(&module, &opposite, &window)?;
    Ok(AsymmetryCertificate {
        witness,
        cone_report,
        opposite_report,
        decision,
        chain: CHAIN.to_vec(),
        verdict: Verdict::Asymmetric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_ints;
    use alloc::vec;

    #[test]
    fn quadrant_certificate() {
        let q = Cone::from_generators(2, &[from_ints(&[1, 0]), from_ints(&[0, 1])]).unwrap();
        let cert = certify_asymmetry(&q).unwrap();
        assert_eq!(cert.witness, from_ints(&[1, -1]));
        assert_eq!(cert.verdict, Verdict::Asymmetric);
        assert_eq!(cert.cone_report.extreme_points, vec![from_ints(&[0, 0])]);
        assert!(cert.opposite_report.extreme_points.is_empty());
        assert!(cert.replay(&q).unwrap());
    }

    #[test]
    fn tampered_certificate_fails_replay() {
        let q = Cone::from_generators(2, &[from_ints(&[1, 0]), from_ints(&[0, 1])]).unwrap();
        let mut cert = certify_asymmetry(&q).unwrap();
        cert.witness = from_ints(&[1, 1]);
        assert!(!cert.replay(&q).unwrap());
    }

    #[test]
    fn half_line_is_refused() {
        let h = Cone::from_generators(1, &[from_ints(&[1])]).unwrap();
        assert!(matches!(certify_asymmetry(&h), Err(Error::DimensionOne(_))));
    }
}
