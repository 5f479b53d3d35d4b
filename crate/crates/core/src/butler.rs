//! Dual span bundles of type `(2, d, 5)` systems and the hypotheses of the
//! Butler-conjecture case `d in {2 d_2 - 1, 2 d_2}`.

use std::ops::RangeInclusive;

use serde::Serialize;
use thiserror::Error;

use crate::check::{all_pass, Check, Rel};
use crate::construct::{self, mf_ext_condition, ExtensionDatum};
use crate::curve::{CurveModel, OracleError};
use crate::profile::{NetStatus, ProfileError, SystemProfile};
use crate::rat::Rat;
use crate::slope::{lex_compare_small_alpha, CohType, LimitOrder};

/// Smallest genus the Butler-case arguments cover.
pub const BUTLER_MIN_GENUS: i64 = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ButlerError {
    #[error("expected type {expected}, got {got}")]
    WrongType { expected: String, got: CohType },
    #[error("net status of the profile is unknown")]
    NetStatusUnknown,
    #[error("genus {0} is below {BUTLER_MIN_GENUS}")]
    GenusTooSmall(i64),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DsbConclusion {
    DsbStable,
    PremiseFails,
    CaseGap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseOutcome {
    /// Positive margin means the case cannot destabilize.
    Margin(Rat),
    /// Ruled out by a premise.
    Excluded,
}

impl CaseOutcome {
    fn is_safe(&self) -> bool {
        match self {
            CaseOutcome::Margin(m) => m.is_positive(),
            CaseOutcome::Excluded => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DsbCase {
    pub class: String,
    pub bound: String,
    pub outcome: CaseOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DsbReport {
    pub genus: i64,
    pub sys: CohType,
    pub d1: i64,
    pub premise_ok: bool,
    pub premise_note: Option<String>,
    pub cases: Vec<DsbCase>,
    pub conclusion: DsbConclusion,
}

/// Stability of the dual span bundle `M_{E,V}^*` of a generated, net-free
/// system of type `(2, d, 5)` with `d < 3 d_1`.
///
/// A maximal subbundle `S` of `M_{E,V}` is examined by rank of `S^*` and, in
/// rank 2, by the dimension of the sections it receives; both branches of the
/// Clifford dichotomy are evaluated. Margins are exact and must be positive.
pub fn dsb_check_2d5(p: &SystemProfile) -> Result<DsbReport, ButlerError> {
    let sys = *p.sys();
    if sys.r != 2 || sys.n != 5 || !sys.generated {
        return Err(ButlerError::WrongType {
            expected: "generated (2, d, 5)".into(),
            got: sys,
        });
    }
    let curve = p.curve();
    let g = curve.genus;
    let d1 = curve.gonality(1)?;
    let mut report = DsbReport {
        genus: g,
        sys,
        d1,
        premise_ok: false,
        premise_note: None,
        cases: Vec::new(),
        conclusion: DsbConclusion::PremiseFails,
    };
    match p.contains_net()? {
        NetStatus::Unknown => return Err(ButlerError::NetStatusUnknown),
        NetStatus::Yes(w) => {
            report.premise_note =
                Some(format!("contains the net {w}, so it is not alpha_L-stable"));
            return Ok(report);
        }
        NetStatus::No => {}
    }
    if sys.d >= 3 * d1 {
        report.premise_note = Some(format!("d = {} is not below 3 d_1 = {}", sys.d, 3 * d1));
        return Ok(report);
    }
    report.premise_ok = true;
    let third = Rat::frac(sys.d, 3);
    report.cases = vec![
        DsbCase {
            class: "rank-1 S^*".into(),
            bound: "h^0(S^*) >= 2 gives deg S^* >= d_1 against mu(M^*) = d/3".into(),
            outcome: CaseOutcome::Margin(Rat::int(d1) - third),
        },
        DsbCase {
            class: "rank-2 S^*, dim W = 3".into(),
            bound: "would give a net in (E, V)".into(),
            outcome: CaseOutcome::Excluded,
        },
        DsbCase {
            class: "rank-2 S^*, dim W >= 4, contributing".into(),
            bound: "mu(S^*) - h^0(S^*) + 2 >= gamma_2 = d_1 - 2 gives mu(S) <= -d_1".into(),
            outcome: CaseOutcome::Margin(Rat::int(d1) - third),
        },
        DsbCase {
            class: "rank-2 S^*, dim W >= 4, non-contributing".into(),
            bound: "mu(S^*) >= g - 1".into(),
            outcome: CaseOutcome::Margin(Rat::int(g - 1) - third),
        },
    ];
    report.conclusion = if report.cases.iter().all(|c| c.outcome.is_safe()) {
        DsbConclusion::DsbStable
    } else {
        DsbConclusion::CaseGap
    };
    Ok(report)
}

/// True when the dual span bundle check proves the profile's system linearly stable.
pub(crate) fn dsb_proves_linear(p: &SystemProfile) -> bool {
    let s = p.sys();
    if s.r != 2 || s.n != 5 || !s.generated {
        return false;
    }
    matches!(
        dsb_check_2d5(p),
        Ok(DsbReport {
            conclusion: DsbConclusion::DsbStable,
            ..
        })
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub genus: i64,
    pub d: i64,
    pub d2: i64,
    pub epsilon: i64,
    /// The `dim W = 2` chain `mu(S^*) >= d_1 >= g/2 + 1 > 2 d_2 / 3 >= mu(E_1)`.
    pub pencil_case: Vec<Check>,
    /// `deg S <= -d_2` against `mu(M) = -d/2`.
    pub net_case: Check,
    pub boundary_reached: bool,
    /// Small-alpha comparison of the best rank-1 subsystem `(1, d_2, 2)` of the dual system, at the boundary.
    pub tie_break: Option<LimitOrder>,
    pub dual_alpha_s_stable: bool,
}

/// Destabilizer search for the dual span of an alpha_S-stable system of type
/// `(3, d, 5)` with `d in {2 d_2 - 1, 2 d_2}`.
pub fn butler_diagram_search(m: &SystemProfile) -> Result<DiagramReport, ButlerError> {
    let curve = m.curve();
    let g = curve.genus;
    if g < BUTLER_MIN_GENUS {
        return Err(ButlerError::GenusTooSmall(g));
    }
    let d1 = curve.gonality(1)?;
    let d2 = curve.gonality(2)?;
    let sys = *m.sys();
    let epsilon = sys.d - (2 * d2 - 1);
    if sys.r != 3 || sys.n != 5 || !(0..=1).contains(&epsilon) {
        return Err(ButlerError::WrongType {
            expected: format!("(3, {}, 5) or (3, {}, 5)", 2 * d2 - 1, 2 * d2),
            got: sys,
        });
    }
    let half_g_plus_1 = Rat::frac(g, 2) + Rat::ONE;
    let two_d2_thirds = Rat::frac(2 * d2, 3);
    let pencil_case = vec![
        Check::new("d_1 >= g/2 + 1", d1, Rel::Ge, half_g_plus_1),
        Check::new("g/2 + 1 > 2 d_2/3", half_g_plus_1, Rel::Gt, two_d2_thirds),
        Check::new(
            "2 d_2/3 >= mu(E_1)",
            two_d2_thirds,
            Rel::Ge,
            Rat::frac(sys.d, 3),
        ),
    ];
    let net_case = Check::new("-d_2 <= mu(M)", -d2, Rel::Le, Rat::frac(-sys.d, 2));
    let boundary_reached = net_case.lhs == net_case.rhs;
    let tie_break = if boundary_reached {
        // a nontrivial extension has no (1, e, 3); the best line subsystem is (1, d_2, 2)
        Some(lex_compare_small_alpha(
            &CohType::new(1, d2, 2, false),
            &CohType::new(2, sys.d, 5, true),
        )?)
    } else {
        None
    };
    let dual_alpha_s_stable =
        all_pass(&pencil_case) && net_case.pass && tie_break.is_none_or(|t| t == LimitOrder::Safe);
    Ok(DiagramReport {
        genus: g,
        d: sys.d,
        d2,
        epsilon,
        pencil_case,
        net_case,
        boundary_reached,
        tie_break,
        dual_alpha_s_stable,
    })
}

impl From<crate::slope::SlopeError> for ButlerError {
    fn from(e: crate::slope::SlopeError) -> ButlerError {
        ButlerError::Profile(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ButlerCase {
    /// `d = 2 d_2 - 1`.
    A,
    /// `d = 2 d_2`.
    B,
}

impl ButlerCase {
    pub fn epsilon(self) -> i64 {
        match self {
            ButlerCase::A => 0,
            ButlerCase::B => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ButlerFeasibility {
    pub genus: i64,
    pub case: ButlerCase,
    pub d2: i64,
    pub d: i64,
    pub epsilon: i64,
    pub strict_mode: bool,
    pub checks: Vec<Check>,
    pub feasible: bool,
    pub reasons: Vec<String>,
}

/// The line bundles `L_1 in W^1_{d_2 - 1}`, `L_2 in W^2_{d_2 + eps}` of the construction.
pub fn butler_datum(g: i64, case: ButlerCase) -> Result<ExtensionDatum, ButlerError> {
    let d2 = CurveModel::general(g)?.gonality(2)?;
    Ok(ExtensionDatum {
        g,
        ell1: d2 - 1,
        k1: 2,
        ell2: d2 + case.epsilon(),
        k2: 3,
    })
}

/// Hypotheses of the Butler case. `strict_mode` asks `g = 2 mod 3` in
/// case A; otherwise only `g != 0 mod 3`, which is what the inequality needs.
pub fn maind_conditions(
    g: i64,
    case: ButlerCase,
    strict_mode: bool,
) -> Result<ButlerFeasibility, ButlerError> {
    if g < BUTLER_MIN_GENUS {
        return Err(ButlerError::GenusTooSmall(g));
    }
    let curve = CurveModel::general(g)?;
    let d1 = curve.gonality(1)?;
    let d2 = curve.gonality(2)?;
    let eps = case.epsilon();
    let d = 2 * d2 - 1 + eps;
    let ineq_name = if eps == 0 {
        "d_2 > 2g/3 + 2".to_string()
    } else {
        format!("d_2 > (2g - {eps})/3 + 2")
    };
    let mut checks = vec![Check::new(
        ineq_name,
        d2,
        Rel::Gt,
        Rat::frac(2 * g - eps, 3) + Rat::int(2),
    )];
    if case == ButlerCase::A {
        checks.push(if strict_mode {
            Check::new("g mod 3 = 2", g.rem_euclid(3), Rel::Eq, 2)
        } else {
            Check::new("g mod 3 != 0", g.rem_euclid(3), Rel::Ne, 0)
        });
    }
    checks.push(Check::new("d < 3 d_1", d, Rel::Lt, 3 * d1));
    let datum = butler_datum(g, case)?;
    checks.extend(construct::line_bundle_checks(&curve, &datum)?);
    checks.push(mf_ext_condition(&datum).check);
    let feasible = all_pass(&checks);
    let reasons = checks
        .iter()
        .filter(|c| !c.pass)
        .map(Check::reason)
        .collect();
    Ok(ButlerFeasibility {
        genus: g,
        case,
        d2,
        d,
        epsilon: eps,
        strict_mode,
        checks,
        feasible,
        reasons,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub genus: i64,
    pub case_a_strict: Option<bool>,
    pub case_a_proof: Option<bool>,
    pub case_b: Option<bool>,
    pub dsb_a: Option<DsbConclusion>,
    pub dsb_b: Option<DsbConclusion>,
    pub note: Option<String>,
}

/// Feasibility grid per genus; per-genus failures become row notes.
pub fn butler_sweep(range: RangeInclusive<i64>) -> Vec<SweepRow> {
    range.map(sweep_row).collect()
}

fn sweep_row(g: i64) -> SweepRow {
    let mut row = SweepRow {
        genus: g,
        case_a_strict: None,
        case_a_proof: None,
        case_b: None,
        dsb_a: None,
        dsb_b: None,
        note: None,
    };
    let mut notes = Vec::new();
    let mut feas = |case, strict| match maind_conditions(g, case, strict) {
        Ok(f) => Some(f.feasible),
        Err(e) => {
            notes.push(e.to_string());
            None
        }
    };
    row.case_a_strict = feas(ButlerCase::A, true);
    row.case_a_proof = feas(ButlerCase::A, false);
    row.case_b = feas(ButlerCase::B, true);
    notes.dedup();
    if notes.is_empty() {
        for case in [ButlerCase::A, ButlerCase::B] {
            let dsb = construct::butler_profile(g, case)
                .map_err(|e| e.to_string())
                .and_then(|p| dsb_check_2d5(&p).map_err(|e| e.to_string()));
            match dsb {
                Ok(r) => match case {
                    ButlerCase::A => row.dsb_a = Some(r.conclusion),
                    ButlerCase::B => row.dsb_b = Some(r.conclusion),
                },
                Err(e) => notes.push(format!("case {case:?}: {e}")),
            }
        }
    }
    if !notes.is_empty() {
        row.note = Some(notes.join("; "));
    }
    row
}
