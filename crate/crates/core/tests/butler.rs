use cohstab::butler::*;
use cohstab::construct::{butler_profile, example_profile, ExampleName};
use cohstab::curve::CurveModel;
use cohstab::profile::{Exclusion, Outcome, SystemProfile};
use cohstab::rat::Rat;
use cohstab::slope::{CohType, LimitOrder};

fn net_free_2d5(g: i64, d: i64) -> SystemProfile {
    SystemProfile::builder(CurveModel::general(g).unwrap(), CohType::new(2, d, 5, true))
        .line_max_degree(d / 2)
        .exclude(Exclusion::NoNet)
        .build()
        .unwrap()
}

fn margins(r: &DsbReport) -> Vec<Option<Rat>> {
    r.cases
        .iter()
        .map(|c| match c.outcome {
            CaseOutcome::Margin(m) => Some(m),
            CaseOutcome::Excluded => None,
        })
        .collect()
}

#[test]
fn dsb_at_genus_25() {
    let p = example_profile(ExampleName::YYY, 25).unwrap().profile;
    let r = dsb_check_2d5(&p).unwrap();
    assert_eq!(r.conclusion, DsbConclusion::DsbStable);
    assert_eq!(
        margins(&r),
        vec![Some(Rat::ONE), None, Some(Rat::ONE), Some(Rat::int(11))]
    );
}

#[test]
fn dsb_at_genus_18() {
    let r = dsb_check_2d5(&net_free_2d5(18, 28)).unwrap();
    assert_eq!(r.conclusion, DsbConclusion::DsbStable);
    assert!(margins(&r).iter().flatten().all(|m| m.is_positive()));
    let r = dsb_check_2d5(&net_free_2d5(18, 30)).unwrap();
    assert_eq!(r.conclusion, DsbConclusion::PremiseFails);
    assert!(!r.premise_ok);
}

#[test]
fn dsb_premise_is_sharp() {
    for g in 18..=40 {
        let d1 = CurveModel::general(g).unwrap().gonality(1).unwrap();
        let r = dsb_check_2d5(&net_free_2d5(g, 3 * d1)).unwrap();
        assert_eq!(r.conclusion, DsbConclusion::PremiseFails, "g = {g}");
        let r = dsb_check_2d5(&net_free_2d5(g, 3 * d1 - 1)).unwrap();
        assert_eq!(r.conclusion, DsbConclusion::DsbStable, "g = {g}");
    }
}

#[test]
fn dsb_errors() {
    let nny = example_profile(ExampleName::NNY, 4).unwrap().profile;
    assert!(matches!(
        dsb_check_2d5(&nny),
        Err(ButlerError::WrongType { .. })
    ));
    let unknown = SystemProfile::builder(
        CurveModel::general(18).unwrap(),
        CohType::new(2, 28, 5, true),
    )
    .line_max_degree(14)
    .build()
    .unwrap();
    assert_eq!(dsb_check_2d5(&unknown), Err(ButlerError::NetStatusUnknown));
    let with_net = example_profile(ExampleName::YNN, 12).unwrap().profile;
    assert_eq!(
        dsb_check_2d5(&with_net).unwrap().conclusion,
        DsbConclusion::PremiseFails
    );
}

#[test]
fn elementary_transformation_never_contradicts() {
    for g in 18..=40 {
        let p = example_profile(ExampleName::NYN, g).unwrap().profile;
        assert_eq!(
            dsb_check_2d5(&p).unwrap().conclusion,
            DsbConclusion::PremiseFails
        );
    }
}

#[test]
fn dsb_stability_implies_linear_stability() {
    let mut profiles: Vec<SystemProfile> = ExampleName::ALL
        .iter()
        .map(|&n| example_profile(n, n.default_genus()).unwrap().profile)
        .collect();
    for g in 18..=30 {
        profiles.push(butler_profile(g, ButlerCase::B).unwrap());
    }
    for p in profiles {
        let stable = matches!(
            dsb_check_2d5(&p),
            Ok(DsbReport {
                conclusion: DsbConclusion::DsbStable,
                ..
            })
        );
        if stable {
            assert_eq!(p.triple_verdict().unwrap().linear.outcome, Outcome::Stable);
            assert_ne!(p.verdict_linear().unwrap().outcome, Outcome::Unstable);
        }
    }
}

fn dual(g: i64, d: i64) -> SystemProfile {
    SystemProfile::builder(CurveModel::general(g).unwrap(), CohType::new(3, d, 5, true))
        .build()
        .unwrap()
}

#[test]
fn diagram_search() {
    let r = butler_diagram_search(&dual(20, 31)).unwrap();
    assert!(r.dual_alpha_s_stable && !r.boundary_reached);
    // g/2 + 1 = 11 > 32/3
    assert_eq!(
        (r.pencil_case[1].lhs, r.pencil_case[1].rhs),
        (Rat::int(11), Rat::frac(32, 3))
    );
    let r = butler_diagram_search(&dual(18, 28)).unwrap();
    assert!(r.boundary_reached);
    assert_eq!(r.tie_break, Some(LimitOrder::Safe));
    assert!(r.dual_alpha_s_stable);
    assert_eq!(
        butler_diagram_search(&dual(17, 26)),
        Err(ButlerError::GenusTooSmall(17))
    );
    assert!(matches!(
        butler_diagram_search(&dual(20, 30)),
        Err(ButlerError::WrongType { .. })
    ));
}

#[test]
fn hypothesis_checker() {
    let f = maind_conditions(20, ButlerCase::A, true).unwrap();
    assert!(f.feasible);
    assert_eq!((f.d2, f.d, f.epsilon), (16, 31, 0));
    assert_eq!(f.checks[0].rhs, Rat::frac(46, 3));
    let f = maind_conditions(18, ButlerCase::A, true).unwrap();
    assert!(!f.feasible);
    assert_eq!(f.reasons[0], "d_2 > 2g/3 + 2 fails at equality");
    let f = maind_conditions(18, ButlerCase::B, true).unwrap();
    assert!(f.feasible);
    assert_eq!((f.d, f.checks[0].rhs), (28, Rat::frac(41, 3)));
    assert_eq!(
        maind_conditions(17, ButlerCase::B, true),
        Err(ButlerError::GenusTooSmall(17))
    );
}

#[test]
fn hypothesis_checker_over_range() {
    for g in 18..=40 {
        assert!(maind_conditions(g, ButlerCase::B, true).unwrap().feasible);
        assert_eq!(
            maind_conditions(g, ButlerCase::A, true).unwrap().feasible,
            g % 3 == 2
        );
        assert_eq!(
            maind_conditions(g, ButlerCase::A, false).unwrap().feasible,
            g % 3 != 0
        );
    }
}

#[test]
fn sweep() {
    let rows = butler_sweep(18..=24);
    assert_eq!(rows.len(), 7);
    let strict: Vec<i64> = rows
        .iter()
        .filter(|r| r.case_a_strict == Some(true))
        .map(|r| r.genus)
        .collect();
    assert_eq!(strict, vec![20, 23]);
    assert!(rows
        .iter()
        .all(|r| r.dsb_b == Some(DsbConclusion::DsbStable)));
    assert_eq!(butler_sweep(18..=18)[0].case_b, Some(true));
    #[allow(clippy::reversed_empty_ranges)]
    let empty = butler_sweep(20..=19);
    assert!(empty.is_empty());
    let low = &butler_sweep(17..=17)[0];
    assert!(low.note.is_some() && low.case_b.is_none());
}
