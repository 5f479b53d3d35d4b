use cohstab::construct::*;
use cohstab::profile::{Basis, Outcome, SearchRegime};
use cohstab::rat::Rat;
use cohstab::slope::CohType;

fn datum(g: i64, ell1: i64, k1: i64, ell2: i64, k2: i64) -> ExtensionDatum {
    ExtensionDatum {
        g,
        ell1,
        k1,
        ell2,
        k2,
    }
}

/// Independent restatement of the lifting inequality.
fn lifts(x: &ExtensionDatum) -> bool {
    x.ell2 - x.k1 * x.k2 - (x.k2 - 1) * (x.g - 1 - x.ell1) > 0
}

#[test]
fn lifting_condition_examples() {
    for (x, lhs, rhs) in [
        (datum(6, 5, 2, 6, 2), 6, 4),
        (datum(12, 11, 3, 12, 2), 12, 6),
        (datum(25, 20, 2, 19, 3), 19, 14),
    ] {
        let c = mf_ext_condition(&x);
        assert!(c.holds);
        assert_eq!((c.check.lhs, c.check.rhs), (Rat::int(lhs), Rat::int(rhs)));
        assert_eq!(c.holds, lifts(&x));
    }
    let boundary = datum(6, 4, 2, 5, 2);
    assert!(!mf_ext_condition(&boundary).holds);
    assert!(matches!(
        build_mf_ext_profile(&boundary, |b| b),
        Err(ConstructError::Infeasible(_))
    ));
}

#[test]
fn extension_profiles() {
    let p = build_mf_ext_profile(&datum(6, 5, 2, 6, 2), |b| {
        b.line_max_degree(5).section_cap(1, 5, 2)
    })
    .unwrap();
    assert_eq!(*p.sys(), CohType::new(2, 11, 4, true));
    assert_eq!(p.declared(), &[CohType::new(1, 5, 2, true)]);
    let p = build_mf_ext_profile(&datum(12, 11, 3, 12, 2), |b| b.line_max_degree(11)).unwrap();
    assert_eq!(*p.sys(), CohType::new(2, 23, 5, true));
    assert_eq!(p.line_max_degree(), Some(11));
}

#[test]
fn default_examples() {
    let r = example_profile(ExampleName::YYY, 25).unwrap();
    assert_eq!(r.parameter.as_ref().unwrap().value, 19);
    assert_eq!(*r.profile.sys(), CohType::new(2, 39, 5, true));
    assert_eq!(r.computed.outcomes(), [Outcome::Stable; 3]);

    let r = example_profile(ExampleName::NNY, 4).unwrap();
    assert_eq!(r.parameter.as_ref().unwrap().value, 4);
    assert_eq!(*r.profile.sys(), CohType::new(2, 9, 4, true));
    assert_eq!(
        r.computed.outcomes(),
        [Outcome::Unstable, Outcome::Unstable, Outcome::Stable]
    );

    let r = example_profile(ExampleName::NYN, 18).unwrap();
    assert_eq!(
        (r.epsilon, r.parameter.as_ref().unwrap().value),
        (Some(1), 6)
    );
    assert_eq!(*r.profile.sys(), CohType::new(2, 37, 5, true));
    assert_eq!(
        r.computed.outcomes(),
        [Outcome::Unstable, Outcome::Stable, Outcome::Unstable]
    );

    let nnn = example_profile(ExampleName::NNN, 6).unwrap();
    assert!(nnn
        .profile
        .declared()
        .contains(&CohType::new(1, 4, 2, true)));
    assert!(nnn
        .profile
        .declared()
        .contains(&CohType::new(1, 5, 2, true)));
}

#[test]
fn elementary_transformation_arithmetic() {
    let r = nyn_feasibility(18).unwrap();
    assert_eq!((r.epsilon, r.e, r.beta), (1, 6, 4));
    assert_eq!(
        (r.secant_dim, r.pointed_secant_dim, r.quot_secant_dim),
        (4, 2, 10)
    );
    assert!(r.feasible);
    let r = nyn_feasibility(19).unwrap();
    assert_eq!((r.epsilon, r.e, r.beta), (3, 7, 3));
    assert!(matches!(
        nyn_feasibility(17),
        Err(ConstructError::GenusTooSmall { .. })
    ));
    for g in 18..=40 {
        let r = nyn_feasibility(g).unwrap();
        assert_eq!((g - 1 + r.epsilon) % 3, 0);
        assert_eq!(r.beta, g - 2 * r.e - 2);
        assert!(r.feasible, "g = {g}");
    }
}

#[test]
fn overview_rows() {
    let rows = overview_table(&default_genus_map());
    let lines: Vec<String> = rows.iter().map(|r| r.pattern.clone()).collect();
    assert_eq!(
        lines,
        ["N N N", "Y Y N", "Y N N", "N Y N", "N N Y", "N Y Y", "Y Y Y", "Y N Y"]
    );
    assert_eq!(rows[7].label, "Impossible by Proposition 3.2");

    let mut m = default_genus_map();
    m.insert(ExampleName::YYN, 5);
    m.insert(ExampleName::NYN, 10);
    let rows = overview_table(&m);
    assert_eq!(rows[1].pattern, "Y Y N");
    assert!(rows[3].error.is_some());
    let yyn5 = example_profile(ExampleName::YYN, 5).unwrap();
    assert!(yyn5.below_stated_bound);
}

#[test]
fn yyn_over_genus_range() {
    for g in 6..=40 {
        let r = example_profile(ExampleName::YYN, g).unwrap();
        assert_eq!(
            r.computed.outcomes(),
            [Outcome::Stable, Outcome::Stable, Outcome::Unstable],
            "g = {g}"
        );
    }
}

#[test]
fn ynn_over_genus_range_has_one_wall() {
    for g in 12..=40 {
        let r = example_profile(ExampleName::YNN, g).unwrap();
        assert_eq!(
            r.computed.outcomes(),
            [Outcome::Stable, Outcome::Unstable, Outcome::Unstable],
            "g = {g}"
        );
        let ell = r.parameter.as_ref().unwrap().value;
        let d = r.profile.sys().d;
        let walls: Vec<Rat> = r
            .profile
            .critical_alphas()
            .unwrap()
            .iter()
            .map(|w| w.alpha)
            .collect();
        assert_eq!(walls, vec![Rat::int(d - 2 * ell)], "g = {g}");
    }
}

#[test]
fn dual_span_examples_over_genus_range() {
    for g in 25..=40 {
        for name in [ExampleName::NYY, ExampleName::YYY] {
            let r = example_profile(name, g).unwrap();
            assert_eq!(
                r.computed.linear.basis,
                Basis::DualSpanBundle,
                "{name} g = {g}"
            );
            let d1 = r.profile.curve().gonality(1).unwrap();
            assert!(r.profile.sys().d < 3 * d1);
        }
    }
}

#[test]
fn all_examples_over_their_ranges() {
    for name in ExampleName::ALL {
        for g in name.default_genus()..=40 {
            let r = example_profile(name, g).unwrap_or_else(|e| panic!("{name} g = {g}: {e}"));
            assert!(!r.below_stated_bound);
            assert_eq!(
                r.computed.outcomes().map(|o| o == Outcome::Stable),
                name.expected()
            );
        }
    }
}

#[test]
fn strict_lifting_inequality_matters() {
    // one step below the chosen parameters of the pencil examples the two sides tie
    let weak = |x: &ExtensionDatum| x.ell2 - x.k1 * x.k2 - (x.k2 - 1) * (x.g - 1 - x.ell1) >= 0;
    for x in [datum(6, 4, 2, 5, 2), datum(4, 4, 2, 3, 2)] {
        assert!(!mf_ext_condition(&x).holds);
        assert!(weak(&x));
    }
    let yyn = example_profile(ExampleName::YYN, 6).unwrap();
    assert_eq!(yyn.parameter.unwrap().value, 5);
}

#[test]
fn example_names_parse() {
    assert_eq!("yyy".parse::<ExampleName>().unwrap(), ExampleName::YYY);
    assert!("XYZ".parse::<ExampleName>().is_err());
    assert_eq!(ExampleName::NYY.expected(), [false, true, true]);
}

#[test]
fn nny_linear_candidates_respect_degree_rules() {
    let r = example_profile(ExampleName::NNY, 4).unwrap();
    let c = r
        .profile
        .enumerate_candidates(SearchRegime::Linear)
        .unwrap();
    let d2 = r.profile.curve().gonality(2).unwrap();
    assert!(c.iter().filter(|c| c.r == 2 && c.n >= 3).all(|c| c.d >= d2));
}
