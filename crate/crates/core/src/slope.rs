//! Slope arithmetic for coherent systems: alpha-slopes, linear slopes,
//! critical values, and the limit comparisons that decide small- and
//! large-alpha behaviour without fixing a numeric alpha.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeError {
    #[error("alpha must be nonnegative (got {0})")]
    NegativeAlpha(Rat),
    #[error("linear slope needs a generated system")]
    NotGenerated,
    #[error("linear slope needs positive degree (got {0})")]
    NonPositiveDegree(i64),
    #[error("linear slope needs more sections than rank (n = {n}, r = {r})")]
    NoExcessSections { r: i64, n: i64 },
    #[error("{sub} is not a proper subsystem type of {sys}")]
    NotProper { sub: CohType, sys: CohType },
    #[error("no enumeration bounds supplied")]
    EmptyCaps,
}

/// Numeric type `(r, d, n)` of a coherent system or subsystem, plus whether
/// the sections generate the sheaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CohType {
    pub r: i64,
    pub d: i64,
    pub n: i64,
    pub generated: bool,
}

pub type SystemType = CohType;
pub type SubsystemRecord = CohType;

impl CohType {
    pub const fn new(r: i64, d: i64, n: i64, generated: bool) -> CohType {
        CohType { r, d, n, generated }
    }

    pub fn slope(&self) -> Rat {
        Rat::frac(self.d, self.r)
    }

    /// Sections per unit rank.
    pub fn section_density(&self) -> Rat {
        Rat::frac(self.n, self.r)
    }

    fn same_numbers(&self, other: &CohType) -> bool {
        (self.r, self.d, self.n) == (other.r, other.d, other.n)
    }
}

impl fmt::Display for CohType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.r, self.d, self.n)
    }
}

/// `mu_alpha = (d + alpha n) / r`.
pub fn alpha_slope(t: &CohType, alpha: Rat) -> Result<Rat, SlopeError> {
    if alpha.is_negative() {
        return Err(SlopeError::NegativeAlpha(alpha));
    }
    Ok((Rat::int(t.d) + alpha * Rat::int(t.n)) / Rat::int(t.r))
}

/// `lambda = d / (n - r)` for a generated system of positive degree.
pub fn linear_slope(t: &CohType) -> Result<Rat, SlopeError> {
    if !t.generated {
        return Err(SlopeError::NotGenerated);
    }
    if t.d <= 0 {
        return Err(SlopeError::NonPositiveDegree(t.d));
    }
    if t.n <= t.r {
        return Err(SlopeError::NoExcessSections { r: t.r, n: t.n });
    }
    Ok(Rat::frac(t.d, t.n - t.r))
}

pub fn is_proper(sub: &CohType, sys: &CohType) -> bool {
    sub.r >= 1 && sub.r <= sys.r && sub.n >= 0 && !sub.same_numbers(sys)
}

fn require_proper(sub: &CohType, sys: &CohType) -> Result<(), SlopeError> {
    if is_proper(sub, sys) {
        Ok(())
    } else {
        Err(SlopeError::NotProper {
            sub: *sub,
            sys: *sys,
        })
    }
}

/// A positive critical value of alpha at which `witness` and `sys` have equal alpha-slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Wall {
    pub alpha: Rat,
    pub witness: CohType,
    pub sys: CohType,
}

/// Solves `mu_alpha(sub) = mu_alpha(sys)`, i.e.
/// `alpha (n_F r - n r_F) = d r_F - d_F r`, keeping only positive solutions.
pub fn wall_alpha(sys: &CohType, sub: &CohType) -> Result<Option<Wall>, SlopeError> {
    require_proper(sub, sys)?;
    let den = sub.n * sys.r - sys.n * sub.r;
    if den == 0 {
        return Ok(None);
    }
    let alpha = Rat::frac(sys.d * sub.r - sub.d * sys.r, den);
    Ok(alpha.is_positive().then_some(Wall {
        alpha,
        witness: *sub,
        sys: *sys,
    }))
}

/// How a subsystem compares with the ambient system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LimitOrder {
    /// The subsystem's slope is strictly larger.
    Destabilizes,
    Equal,
    Safe,
}

impl From<Ordering> for LimitOrder {
    fn from(o: Ordering) -> LimitOrder {
        match o {
            Ordering::Greater => LimitOrder::Destabilizes,
            Ordering::Equal => LimitOrder::Equal,
            Ordering::Less => LimitOrder::Safe,
        }
    }
}

/// Behaviour for all sufficiently small alpha > 0: slope first, then section density.
pub fn lex_compare_small_alpha(sub: &CohType, sys: &CohType) -> Result<LimitOrder, SlopeError> {
    require_proper(sub, sys)?;
    let ord = sub
        .slope()
        .cmp(&sys.slope())
        .then(sub.section_density().cmp(&sys.section_density()));
    Ok(ord.into())
}

/// Behaviour for all sufficiently large alpha: section density first, then slope.
pub fn lex_compare_large_alpha(sub: &CohType, sys: &CohType) -> Result<LimitOrder, SlopeError> {
    require_proper(sub, sys)?;
    let ord = sub
        .section_density()
        .cmp(&sys.section_density())
        .then(sub.slope().cmp(&sys.slope()));
    Ok(ord.into())
}

pub fn compare_at_alpha(
    sub: &CohType,
    sys: &CohType,
    alpha: Rat,
) -> Result<LimitOrder, SlopeError> {
    require_proper(sub, sys)?;
    Ok(alpha_slope(sub, alpha)?
        .cmp(&alpha_slope(sys, alpha)?)
        .into())
}

/// Admissible `(degree, sections)` region for subsystems of one rank:
/// degrees `min_degree..=max_degree`, and at degree `min_degree + i` at most
/// `max_sections[i]` sections (a negative entry means no subsystem of that degree).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCaps {
    pub rank: i64,
    pub min_degree: i64,
    pub max_sections: Vec<i64>,
}

impl RankCaps {
    pub fn from_fn(
        rank: i64,
        min_degree: i64,
        max_degree: i64,
        cap: impl Fn(i64) -> i64,
    ) -> RankCaps {
        RankCaps {
            rank,
            min_degree,
            max_sections: (min_degree..=max_degree).map(cap).collect(),
        }
    }

    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.max_sections
            .iter()
            .enumerate()
            .filter(|(_, &n)| n >= 0)
            .map(move |(i, &n)| (self.min_degree + i as i64, n))
    }

    /// Pareto-maximal `(degree, sections)` points of the region.
    pub fn frontier(&self) -> Vec<(i64, i64)> {
        pareto_frontier(self.points())
    }
}

/// Points not dominated in both coordinates, sorted by ascending first coordinate.
pub fn pareto_frontier(points: impl IntoIterator<Item = (i64, i64)>) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = points.into_iter().collect();
    pts.sort_unstable_by(|a, b| b.cmp(a));
    pts.dedup();
    let mut out = Vec::new();
    let mut best_n = i64::MIN;
    for (d, n) in pts {
        if n > best_n {
            out.push((d, n));
            best_n = n;
        }
    }
    out.reverse();
    out
}

/// Walls contributed by `candidates`, ascending and duplicate-free, each with a
/// canonical witness (minimal rank, then maximal degree, then maximal sections).
pub fn walls_of<'a>(
    sys: &CohType,
    candidates: impl IntoIterator<Item = &'a CohType>,
) -> Result<Vec<Wall>, SlopeError> {
    let mut best: BTreeMap<Rat, Wall> = BTreeMap::new();
    for c in candidates {
        if let Some(w) = wall_alpha(sys, c)? {
            best.entry(w.alpha)
                .and_modify(|cur| {
                    let key = |t: &CohType| (t.r, -t.d, -t.n);
                    if key(&w.witness) < key(&cur.witness) {
                        *cur = w;
                    }
                })
                .or_insert(w);
        }
    }
    Ok(best.into_values().collect())
}

/// Critical values of `sys` over the dominance frontier of each rank's caps.
///
/// Dominated candidates have strictly smaller alpha-slope than some frontier
/// point for every alpha > 0, so they never change a verdict.
pub fn critical_alphas(sys: &CohType, caps: &[RankCaps]) -> Result<Vec<Wall>, SlopeError> {
    if caps.is_empty() {
        return Err(SlopeError::EmptyCaps);
    }
    let mut cands = Vec::new();
    for rc in caps {
        for (d, n) in rc.frontier() {
            let t = CohType::new(rc.rank, d, n, false);
            if is_proper(&t, sys) {
                cands.push(t);
            }
        }
    }
    walls_of(sys, &cands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(r: i64, d: i64, n: i64) -> CohType {
        CohType::new(r, d, n, true)
    }

    #[test]
    fn alpha_slope_values() {
        assert_eq!(alpha_slope(&t(1, 5, 2), Rat::ZERO).unwrap(), Rat::int(5));
        assert_eq!(alpha_slope(&t(1, 5, 2), Rat::ONE).unwrap(), Rat::int(7));
        assert_eq!(
            alpha_slope(&t(2, 11, 4), Rat::frac(3, 2)).unwrap(),
            Rat::frac(17, 2)
        );
        assert!(matches!(
            alpha_slope(&t(1, 5, 2), Rat::frac(-1, 2)),
            Err(SlopeError::NegativeAlpha(_))
        ));
    }

    #[test]
    fn linear_slope_values() {
        assert_eq!(linear_slope(&t(1, 5, 2)).unwrap(), Rat::int(5));
        assert_eq!(linear_slope(&t(2, 11, 4)).unwrap(), Rat::frac(11, 2));
        assert_eq!(linear_slope(&t(2, 23, 5)).unwrap(), Rat::frac(23, 3));
        assert_eq!(
            linear_slope(&CohType::new(1, 5, 2, false)),
            Err(SlopeError::NotGenerated)
        );
        assert_eq!(
            linear_slope(&t(1, 0, 2)),
            Err(SlopeError::NonPositiveDegree(0))
        );
        assert_eq!(
            linear_slope(&t(2, 3, 2)),
            Err(SlopeError::NoExcessSections { r: 2, n: 2 })
        );
    }

    #[test]
    fn wall_values() {
        let w = wall_alpha(&t(2, 23, 5), &t(1, 11, 3)).unwrap().unwrap();
        assert_eq!(w.alpha, Rat::ONE);
        assert_eq!(wall_alpha(&t(2, 11, 4), &t(1, 5, 2)).unwrap(), None);
        assert_eq!(wall_alpha(&t(2, 9, 4), &t(1, 5, 2)).unwrap(), None);
        assert!(matches!(
            wall_alpha(&t(2, 9, 4), &t(2, 9, 4)),
            Err(SlopeError::NotProper { .. })
        ));
        assert!(wall_alpha(&t(2, 9, 4), &t(3, 1, 1)).is_err());
    }

    #[test]
    fn limit_comparisons() {
        use LimitOrder::*;
        assert_eq!(
            lex_compare_small_alpha(&t(1, 5, 2), &t(2, 9, 4)).unwrap(),
            Destabilizes
        );
        assert_eq!(
            lex_compare_small_alpha(&t(1, 11, 3), &t(2, 23, 5)).unwrap(),
            Safe
        );
        assert_eq!(
            lex_compare_small_alpha(&t(1, 14, 3), &t(2, 28, 5)).unwrap(),
            Destabilizes
        );
        assert_eq!(
            lex_compare_large_alpha(&t(1, 11, 3), &t(2, 23, 5)).unwrap(),
            Destabilizes
        );
        for e in -20..40 {
            assert_eq!(
                lex_compare_large_alpha(&t(1, e, 2), &t(2, 31, 5)).unwrap(),
                Safe
            );
        }
        assert_eq!(
            lex_compare_large_alpha(&t(1, 5, 2), &t(2, 9, 4)).unwrap(),
            Destabilizes
        );
        assert_eq!(
            lex_compare_small_alpha(&t(1, 4, 2), &t(2, 8, 4)).unwrap(),
            Equal
        );
    }

    #[test]
    fn critical_values() {
        let caps = [RankCaps::from_fn(1, 0, 5, |_| 2)];
        assert!(critical_alphas(&t(2, 11, 4), &caps).unwrap().is_empty());

        let g12 = crate::curve::CurveModel::general(12).unwrap();
        let caps = [RankCaps::from_fn(1, 0, 11, |d| {
            g12.max_line_sections(d).unwrap()
        })];
        let walls = critical_alphas(&t(2, 23, 5), &caps).unwrap();
        assert_eq!(
            walls.iter().map(|w| w.alpha).collect::<Vec<_>>(),
            vec![Rat::ONE]
        );
        assert_eq!(walls[0].witness, CohType::new(1, 11, 3, false));

        let caps = [RankCaps::from_fn(1, 0, 7, |_| 3)];
        assert!(critical_alphas(&t(1, 7, 3), &caps).unwrap().is_empty());
        assert_eq!(
            critical_alphas(&t(1, 7, 3), &[]),
            Err(SlopeError::EmptyCaps)
        );
    }

    #[test]
    fn frontier_keeps_maximal_points() {
        let f = pareto_frontier([(1, 5), (3, 2), (2, 5), (3, 1), (0, 6), (2, 4)]);
        assert_eq!(f, vec![(0, 6), (2, 5), (3, 2)]);
        assert!(pareto_frontier(Vec::new()).is_empty());
    }

    #[test]
    fn canonical_witness() {
        // both (1, 4, 3) and (2, 8, 6) cross (3, 13, 8) at the same alpha
        let sys = t(3, 13, 8);
        let a = t(1, 4, 3);
        let b = t(2, 8, 6);
        let wa = wall_alpha(&sys, &a).unwrap().unwrap();
        let wb = wall_alpha(&sys, &b).unwrap().unwrap();
        assert_eq!(wa.alpha, wb.alpha);
        let walls = walls_of(&sys, [&b, &a]).unwrap();
        assert_eq!(walls.len(), 1);
        assert_eq!(walls[0].witness, a);
    }

    fn pair() -> impl Strategy<Value = (CohType, CohType)> {
        (1i64..=4, -50i64..=50, 0i64..=12)
            .prop_flat_map(|(r, d, n)| (Just(t(r, d, n)), 1i64..=r, -50i64..=50, 0i64..=12))
            .prop_map(|(sys, rf, df, nf)| (sys, t(rf, df, nf)))
            .prop_filter("proper", |(sys, sub)| is_proper(sub, sys))
    }

    proptest! {
        #[test]
        fn wall_equation_holds((sys, sub) in pair()) {
            if let Some(w) = wall_alpha(&sys, &sub).unwrap() {
                prop_assert!(w.alpha.is_positive());
                prop_assert_eq!(
                    w.alpha * Rat::int(sub.n * sys.r - sys.n * sub.r),
                    Rat::int(sys.d * sub.r - sub.d * sys.r)
                );
                prop_assert_eq!(alpha_slope(&sub, w.alpha).unwrap(), alpha_slope(&sys, w.alpha).unwrap());
            }
        }

        #[test]
        fn sign_constant_between_walls((sys, sub) in pair()) {
            let wall = wall_alpha(&sys, &sub).unwrap().map(|w| w.alpha);
            let cuts: Vec<Rat> = match wall {
                Some(a) => vec![Rat::ZERO, a, a + Rat::int(10)],
                None => vec![Rat::ZERO, Rat::int(10)],
            };
            for win in cuts.windows(2) {
                let (lo, hi) = (win[0], win[1]);
                let step = (hi - lo) / Rat::int(4);
                let signs: Vec<LimitOrder> = (1..=3)
                    .map(|i| compare_at_alpha(&sub, &sys, lo + step * Rat::int(i)).unwrap())
                    .collect();
                prop_assert!(signs.iter().all(|s| *s == signs[0]));
                if signs[0] == LimitOrder::Equal {
                    // equality off a wall only for identical slope and density
                    prop_assert_eq!(sub.slope(), sys.slope());
                    prop_assert_eq!(sub.section_density(), sys.section_density());
                }
            }
        }

        #[test]
        fn limits_agree_with_sampled_alpha((sys, sub) in pair()) {
            let wall = wall_alpha(&sys, &sub).unwrap().map(|w| w.alpha);
            let small = wall.map(|a| a / Rat::int(2)).unwrap_or(Rat::ONE);
            let large = wall.map(|a| a + Rat::ONE).unwrap_or(Rat::ONE);
            prop_assert_eq!(lex_compare_small_alpha(&sub, &sys).unwrap(), compare_at_alpha(&sub, &sys, small).unwrap());
            prop_assert_eq!(lex_compare_large_alpha(&sub, &sys).unwrap(), compare_at_alpha(&sub, &sys, large).unwrap());
        }
    }
}
