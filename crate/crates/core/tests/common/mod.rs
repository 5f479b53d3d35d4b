//! Shared test support: seeded random profiles and brute-force oracles that
//! do not go through the engine's candidate pruning.

#![allow(dead_code)]

use cohstab::curve::CurveModel;
use cohstab::profile::{Exclusion, Outcome, ProfileBuilder, SearchRegime, SystemProfile};
use cohstab::rat::Rat;
use cohstab::slope::CohType;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy)]
pub struct GenConfig {
    pub max_rank: i64,
    pub max_deg: i64,
    pub max_n: i64,
    /// Declare every candidate the engine would otherwise leave open.
    pub complete: bool,
    /// Force type `(2, d, 5)`.
    pub two_d_five: bool,
}

impl GenConfig {
    pub fn small() -> GenConfig {
        GenConfig {
            max_rank: 3,
            max_deg: 40,
            max_n: 10,
            complete: false,
            two_d_five: false,
        }
    }
}

fn try_add(
    b: &ProfileBuilder,
    f: impl FnOnce(ProfileBuilder) -> ProfileBuilder,
) -> Option<ProfileBuilder> {
    let nb = f(b.clone());
    nb.clone().build().ok().map(|_| nb)
}

fn random_exclusion(rng: &mut ChaCha8Rng, r: i64, n: i64, max_deg: i64) -> Exclusion {
    match rng.gen_range(0..3) {
        0 => Exclusion::NoNet,
        1 => Exclusion::Sections {
            rank: rng.gen_range(1..=r),
            min_sections: rng.gen_range(1..=n.max(1)),
        },
        _ => Exclusion::DegreeSections {
            rank: rng.gen_range(1..=r),
            min_degree: rng.gen_range(-2..=max_deg),
            min_sections: rng.gen_range(1..=n.max(1)),
        },
    }
}

/// A valid random profile of a generated system, or `None` when the draw is rejected.
pub fn random_profile(rng: &mut ChaCha8Rng, cfg: GenConfig) -> Option<SystemProfile> {
    let g = rng.gen_range(4..=20);
    let curve = CurveModel::general(g).unwrap();
    let (r, n) = if cfg.two_d_five {
        (2, 5)
    } else {
        let r = rng.gen_range(2..=cfg.max_rank);
        (r, rng.gen_range(r + 1..=cfg.max_n.max(r + 1)))
    };
    let d = rng.gen_range(1..=cfg.max_deg);
    let sys = CohType::new(r, d, n, true);
    let mu = d / r;
    let mut b = SystemProfile::builder(curve, sys).line_max_degree(rng.gen_range(mu - 4..=mu + 3));
    for rank in 2..r {
        let centre = d * rank / r;
        b = b.rank_max_degree(rank, rng.gen_range(centre - 3..=centre + 3));
    }
    b.clone().build().ok()?;
    for _ in 0..rng.gen_range(0..=3) {
        let cap = (
            rng.gen_range(1..=r),
            rng.gen_range(-5..=cfg.max_deg),
            rng.gen_range(0..=n),
        );
        if let Some(nb) = try_add(&b, |b| b.section_cap(cap.0, cap.1, cap.2)) {
            b = nb;
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let ex = random_exclusion(rng, r, n, cfg.max_deg);
        if let Some(nb) = try_add(&b, |b| b.exclude(ex)) {
            b = nb;
        }
    }
    let base = b.clone().build().ok()?;
    for _ in 0..rng.gen_range(0..=3) {
        let rank = rng.gen_range(1..=r);
        let top = base.degree_bound(rank)?;
        let deg = rng.gen_range(top - 6..=top);
        let cap = base.section_cap(rank, deg).ok()?;
        if cap < 0 {
            continue;
        }
        let secs = rng.gen_range(0..=cap);
        let rec = CohType::new(rank, deg, secs, rng.gen_bool(0.5));
        if let Some(nb) = try_add(&b, |b| b.declare(rec)) {
            b = nb;
        }
    }
    let mut p = b.clone().build().ok()?;
    if cfg.complete {
        for regime in [
            SearchRegime::SmallAlpha,
            SearchRegime::LargeAlpha,
            SearchRegime::Linear,
        ] {
            let Ok(cands) = p.enumerate_candidates(regime) else {
                continue;
            };
            for c in cands {
                let gen = c.d > 0 || c.n <= c.r;
                let rec = CohType::new(c.r, c.d, c.n, gen);
                let added = if rec.r == r {
                    try_add(&b, |b| b.declare_generated_fullrank(rec))
                } else {
                    try_add(&b, |b| b.declare(rec))
                };
                if let Some(nb) = added {
                    b = nb;
                }
            }
            p = b.clone().build().ok()?;
        }
    }
    Some(p)
}

/// `(d + alpha n) / r`, computed directly.
pub fn mu_alpha(r: i64, d: i64, n: i64, alpha: Rat) -> Rat {
    (Rat::int(d) + alpha * Rat::int(n)) / Rat::int(r)
}

/// Every admissible proper subsystem type of rank below the system's, with
/// degrees from `lo` up to the rank's bound.
pub fn admissible_points(p: &SystemProfile, lo: i64) -> Vec<CohType> {
    let sys = *p.sys();
    let mut out = Vec::new();
    for rank in 1..sys.r {
        let top = p.degree_bound(rank).expect("bounded profile");
        for d in lo.min(top)..=top {
            let cap = p.section_cap(rank, d).unwrap();
            for n in 0..=cap {
                if !p.exclusions().iter().any(|e| e.forbids(rank, d, n)) {
                    out.push(CohType::new(rank, d, n, false));
                }
            }
        }
    }
    out
}

/// Positive alphas where some point ties with the system.
pub fn brute_walls(sys: &CohType, pts: &[CohType]) -> Vec<Rat> {
    let mut w: Vec<Rat> = pts
        .iter()
        .filter_map(|t| {
            let den = t.n * sys.r - sys.n * t.r;
            if den == 0 {
                return None;
            }
            let a = Rat::frac(sys.d * t.r - t.d * sys.r, den);
            a.is_positive().then_some(a)
        })
        .collect();
    w.sort();
    w.dedup();
    w
}

/// Verdict at a numeric alpha over every admissible point plus the declared records.
pub fn brute_verdict_at(p: &SystemProfile, pts: &[CohType], alpha: Rat) -> Outcome {
    let sys = *p.sys();
    let target = mu_alpha(sys.r, sys.d, sys.n, alpha);
    let declared: Vec<CohType> = p
        .declared()
        .iter()
        .chain(p.declared_generated_fullrank())
        .copied()
        .collect();
    let is_decl = |t: &CohType| declared.iter().any(|x| (x.r, x.d, x.n) == (t.r, t.d, t.n));
    let cmp = |t: &CohType| mu_alpha(t.r, t.d, t.n, alpha).cmp(&target);
    use std::cmp::Ordering::*;
    if declared.iter().any(|t| cmp(t) == Greater) {
        return Outcome::Unstable;
    }
    if pts.iter().any(|t| !is_decl(t) && cmp(t) == Greater) {
        return Outcome::Undetermined;
    }
    if declared.iter().any(|t| cmp(t) == Equal) {
        return Outcome::StrictlySemistable;
    }
    if pts.iter().any(|t| !is_decl(t) && cmp(t) == Equal) {
        return Outcome::Undetermined;
    }
    Outcome::Stable
}

pub fn score(o: Outcome) -> Option<u8> {
    match o {
        Outcome::Unstable => Some(0),
        Outcome::StrictlySemistable => Some(1),
        Outcome::Stable => Some(2),
        Outcome::Undetermined => None,
    }
}
