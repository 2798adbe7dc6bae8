//! Obstructions to epimorphisms between 2-bridge knot groups.
//!
//! An epimorphism from the group of `K` onto the group of `K'` forces
//! `Δ_{K'} | Δ_K`. Failure of that divisibility rules the epimorphism out.
//! Divisibility of Riley polynomials is reported as well, but only as
//! evidence: it is not known to be necessary without extra hypotheses on
//! the epimorphism, so it never decides the verdict.

use std::fmt;

use rayon::prelude::*;

use crate::alexander::{alexander_polynomial, AlexanderPolynomial};
use crate::normal_form::{enumerate_forms, TwoBridgeForm};
use crate::poly::divides_up_to_units;
use crate::riley::{RileyData, RileyError};
use crate::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObstructionVerdict {
    RuledOut,
    NotRuledOut,
}

impl ObstructionVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            ObstructionVerdict::RuledOut => "RuledOut",
            ObstructionVerdict::NotRuledOut => "NotRuledOut",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvidenceTag {
    Alexander,
    Degree,
    Riley,
    SameKnot,
}

impl EvidenceTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            EvidenceTag::Alexander => "alexander",
            EvidenceTag::Degree => "degree",
            EvidenceTag::Riley => "riley-heuristic",
            EvidenceTag::SameKnot => "same-knot",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub tag: EvidenceTag,
    pub message: String,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.tag.as_str(), self.message)
    }
}

/// The polynomials an obstruction check needs for one form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormInvariants {
    pub form: TwoBridgeForm,
    pub alexander: AlexanderPolynomial,
    pub lambda: IntPolynomial,
}

impl FormInvariants {
    pub fn compute(form: &TwoBridgeForm) -> Result<Self, RileyError> {
        Ok(FormInvariants {
            form: *form,
            alexander: alexander_polynomial(form),
            lambda: RileyData::compute(form).lambda()?.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub source: TwoBridgeForm,
    pub target: TwoBridgeForm,
    pub alexander_divides: bool,
    /// Heuristic only; never affects `verdict`.
    pub riley_divides: bool,
    pub verdict: ObstructionVerdict,
    pub reasons: Vec<Evidence>,
}

pub fn obstruct(source: &TwoBridgeForm, target: &TwoBridgeForm) -> Result<ObstructionReport, RileyError> {
    Ok(obstruct_invariants(&FormInvariants::compute(source)?, &FormInvariants::compute(target)?))
}

pub fn obstruct_invariants(source: &FormInvariants, target: &FormInvariants) -> ObstructionReport {
    let alexander_divides = target.alexander.divides(&source.alexander);
    let riley_divides = divides_up_to_units(&target.lambda, &source.lambda).unwrap_or(false);
    let mut reasons = Vec::new();
    if source.form.same_class(&target.form) {
        reasons.push(Evidence {
            tag: EvidenceTag::SameKnot,
            message: format!("{} and {} share p and canonical key", source.form, target.form),
        });
    }
    let (ds, dt) = (source.alexander.degree(), target.alexander.degree());
    if dt > ds {
        reasons.push(Evidence {
            tag: EvidenceTag::Degree,
            message: format!("deg Δ_target = {dt} exceeds deg Δ_source = {ds}"),
        });
    }
    let relation = if alexander_divides { "divides" } else { "does not divide" };
    reasons.push(Evidence {
        tag: EvidenceTag::Alexander,
        message: format!("Δ_target = {} {relation} Δ_source = {}", target.alexander, source.alexander),
    });
    let relation = if riley_divides { "divides" } else { "does not divide" };
    reasons.push(Evidence {
        tag: EvidenceTag::Riley,
        message: format!(
            "Λ_target = {} {relation} Λ_source = {} (not used for the verdict)",
            target.lambda, source.lambda
        ),
    });
    let verdict =
        if alexander_divides { ObstructionVerdict::NotRuledOut } else { ObstructionVerdict::RuledOut };
    ObstructionReport {
        source: source.form,
        target: target.form,
        alexander_divides,
        riley_divides,
        verdict,
        reasons,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSummary {
    pub reports: Vec<ObstructionReport>,
    pub ruled_out: usize,
    pub not_ruled_out: usize,
}

/// Reports for every ordered pair of distinct deduplicated forms with
/// `p <= p_max`, ordered by `(source, target)`.
pub fn scan(p_max: u32) -> Result<ScanSummary, RileyError> {
    let forms = enumerate_forms(p_max);
    let invariants: Vec<FormInvariants> =
        forms.par_iter().map(FormInvariants::compute).collect::<Result<_, _>>()?;
    let pairs: Vec<(usize, usize)> = (0..invariants.len())
        .flat_map(|i| (0..invariants.len()).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let reports: Vec<ObstructionReport> =
        pairs.par_iter().map(|&(i, j)| obstruct_invariants(&invariants[i], &invariants[j])).collect();
    let ruled_out = reports.iter().filter(|r| r.verdict == ObstructionVerdict::RuledOut).count();
    Ok(ScanSummary { not_ruled_out: reports.len() - ruled_out, ruled_out, reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::{torus_alexander, torus_targets};

    fn form(p: i64, q: i64) -> TwoBridgeForm {
        TwoBridgeForm::new(p, q).unwrap()
    }

    #[test]
    fn obstruct_examples() {
        let r = obstruct(&form(5, 3), &form(3, 1)).unwrap();
        assert_eq!(r.verdict, ObstructionVerdict::RuledOut);
        assert!(!r.alexander_divides);

        let r = obstruct(&form(5, 3), &form(5, 3)).unwrap();
        assert_eq!(r.verdict, ObstructionVerdict::NotRuledOut);
        assert!(r.alexander_divides && r.riley_divides);
        assert!(r.reasons.iter().any(|e| e.tag == EvidenceTag::SameKnot));

        let r = obstruct(&form(7, 3), &form(5, 3)).unwrap();
        assert_eq!(r.verdict, ObstructionVerdict::RuledOut);
    }

    #[test]
    fn mirror_forms_are_not_ruled_out() {
        let r = obstruct(&form(7, 3), &form(7, 5)).unwrap();
        assert_eq!(r.verdict, ObstructionVerdict::NotRuledOut);
    }

    #[test]
    fn scan_examples() {
        assert!(scan(3).unwrap().reports.is_empty());
        let s = scan(5).unwrap();
        assert_eq!(s.reports.len(), 6);
        assert_eq!(s.ruled_out, 6);
        assert_eq!(s.not_ruled_out, 0);
        assert!(s.reports.iter().all(|r| r.source != r.target));
    }

    /// Brute force for the small scan: every pair, with the divisibility
    /// decided by rational division in the oracle's own loop.
    #[test]
    fn scan_matches_rational_division_oracle() {
        let s = scan(15).unwrap();
        for r in &s.reports {
            let a = alexander_polynomial(&r.source).poly().to_rational();
            let b = alexander_polynomial(&r.target).poly().to_rational();
            let (q, rem) = a.div_rem(&b).unwrap();
            let divides = rem.coeffs().is_empty() && q.coeffs().iter().all(|c| c.is_integer());
            assert_eq!(r.alexander_divides, divides, "{} -> {}", r.source, r.target);
        }
    }

    #[test]
    fn scan_invariants_up_to_21() {
        let s = scan(21).unwrap();
        for r in &s.reports {
            let ds = alexander_polynomial(&r.source);
            let dt = alexander_polynomial(&r.target);
            assert_eq!(r.verdict == ObstructionVerdict::RuledOut, !r.alexander_divides);
            if dt.degree() > ds.degree() {
                assert_eq!(r.verdict, ObstructionVerdict::RuledOut);
            }
            if r.verdict == ObstructionVerdict::NotRuledOut {
                let back = s.reports.iter().find(|b| b.source == r.target && b.target == r.source).unwrap();
                if back.verdict == ObstructionVerdict::NotRuledOut {
                    assert_eq!(ds.degree(), dt.degree());
                    assert_eq!(ds, dt);
                }
            }
        }
    }

    #[test]
    fn torus_sources_agree_with_torus_targets() {
        for p in (3..=31u32).step_by(2) {
            let source = form(p.into(), 1);
            let targets = torus_targets(&alexander_polynomial(&source));
            for p2 in (3..=p).step_by(2) {
                let report = obstruct(&source, &form(p2.into(), 1)).unwrap();
                let listed = targets.contains(&(2, p2));
                assert_eq!(report.verdict == ObstructionVerdict::NotRuledOut, listed, "{p} -> {p2}");
            }
            assert!(targets.iter().all(|&(r, s)| torus_alexander(r, s).is_ok()));
        }
    }
}
