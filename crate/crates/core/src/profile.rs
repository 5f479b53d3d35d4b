//! Finite evidence profiles of coherent systems and the verdicts decided from them.
//!
//! A [`SystemProfile`] records what is known about the subsystems of one
//! coherent system: degree bounds per rank, caps on sections, subsystems
//! known to exist, and patterns known not to occur. Verdicts are decided
//! exactly from that evidence. When the evidence admits a potential
//! destabilizer that is neither declared nor excluded, the verdict is
//! `Undetermined` and names the unresolved region.
//!
//! Section caps are nondecreasing in degree for every rank (curve-oracle
//! caps, `sectionCaps` entries, which bound all degrees up to their
//! threshold, and exclusions all have this shape). The alpha-regime
//! searches rely on this: the dominance frontier of each rank is found by
//! scanning down to the lowest breakpoint.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::{CurveModel, OracleError};
use crate::rat::Rat;
use crate::slope::{
    self, compare_at_alpha, is_proper, lex_compare_large_alpha, lex_compare_small_alpha,
    linear_slope, CohType, LimitOrder, RankCaps, SlopeError, SubsystemRecord, SystemType, Wall,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("invalid profile: {0}")]
    Invalid(String),
    #[error("declared subsystem {record} contradicts the profile: {reason}")]
    Contradiction { record: CohType, reason: String },
    #[error("rank {0} subsystems have no degree bound")]
    MissingDegreeBound(i64),
    #[error("system is not generated")]
    NotGenerated,
    #[error("system has nonpositive degree {0}")]
    NonPositiveDegree(i64),
    #[error("system has {0} sections; nets need at least 3")]
    TooFewSections(i64),
    #[error("expected a system of type (2, d, 5), got {0}")]
    WrongType(CohType),
    #[error("alpha must be positive (got {0})")]
    NonPositiveAlpha(Rat),
    #[error("verdicts violate the implication (alpha_S and linear stable => alpha_L stable): {0}")]
    ForbiddenRow(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Slope(#[from] SlopeError),
}

/// A pattern of subsystems asserted not to occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exclusion {
    /// No rank-1 subsystem with three or more sections.
    NoNet,
    /// No subsystem of this rank with at least `min_sections` sections.
    Sections { rank: i64, min_sections: i64 },
    /// Every subsystem of this rank with at least `min_sections` sections has degree at least `min_degree`.
    DegreeSections {
        rank: i64,
        min_degree: i64,
        min_sections: i64,
    },
}

impl Exclusion {
    pub fn forbids(&self, r: i64, d: i64, n: i64) -> bool {
        match *self {
            Exclusion::NoNet => r == 1 && n >= 3,
            Exclusion::Sections { rank, min_sections } => r == rank && n >= min_sections,
            Exclusion::DegreeSections {
                rank,
                min_degree,
                min_sections,
            } => r == rank && n >= min_sections && d < min_degree,
        }
    }

    fn rank(&self) -> i64 {
        match *self {
            Exclusion::NoNet => 1,
            Exclusion::Sections { rank, .. } | Exclusion::DegreeSections { rank, .. } => rank,
        }
    }

    /// Largest number of sections allowed at degree `d` for rank `r`, if restricted.
    fn section_limit(&self, r: i64, d: i64) -> Option<i64> {
        if r != self.rank() {
            return None;
        }
        match *self {
            Exclusion::NoNet => Some(2),
            Exclusion::Sections { min_sections, .. } => Some(min_sections - 1),
            Exclusion::DegreeSections {
                min_degree,
                min_sections,
                ..
            } => (d < min_degree).then_some(min_sections - 1),
        }
    }
}

impl fmt::Display for Exclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Exclusion::NoNet => write!(f, "no net"),
            Exclusion::Sections { rank, min_sections } => {
                write!(
                    f,
                    "no rank-{rank} subsystem with >= {min_sections} sections"
                )
            }
            Exclusion::DegreeSections {
                rank,
                min_degree,
                min_sections,
            } => write!(
                f,
                "no rank-{rank} subsystem of degree < {min_degree} with >= {min_sections} sections"
            ),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct DegreeSectionsRepr {
    rank: i64,
    min_degree: i64,
    min_sections: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
struct SectionsRepr {
    rank: i64,
    min_sections: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ExclusionRepr {
    Keyword(String),
    DegreeSections(DegreeSectionsRepr),
    Sections(SectionsRepr),
}

impl Serialize for Exclusion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            Exclusion::NoNet => ExclusionRepr::Keyword("no_net".into()),
            Exclusion::Sections { rank, min_sections } => {
                ExclusionRepr::Sections(SectionsRepr { rank, min_sections })
            }
            Exclusion::DegreeSections {
                rank,
                min_degree,
                min_sections,
            } => ExclusionRepr::DegreeSections(DegreeSectionsRepr {
                rank,
                min_degree,
                min_sections,
            }),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Exclusion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Exclusion, D::Error> {
        match ExclusionRepr::deserialize(d)? {
            ExclusionRepr::Keyword(k) if k == "no_net" => Ok(Exclusion::NoNet),
            ExclusionRepr::Keyword(k) => Err(serde::de::Error::custom(format!(
                "unknown exclusion keyword {k:?} (expected \"no_net\")"
            ))),
            ExclusionRepr::Sections(SectionsRepr { rank, min_sections }) => {
                Ok(Exclusion::Sections { rank, min_sections })
            }
            ExclusionRepr::DegreeSections(DegreeSectionsRepr {
                rank,
                min_degree,
                min_sections,
            }) => Ok(Exclusion::DegreeSections {
                rank,
                min_degree,
                min_sections,
            }),
        }
    }
}

/// Every rank-`rank` subsystem of degree at most `degree` has at most `max_sections` sections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct SectionCap {
    pub rank: i64,
    pub degree: i64,
    pub max_sections: i64,
}

impl From<[i64; 3]> for SectionCap {
    fn from([rank, degree, max_sections]: [i64; 3]) -> SectionCap {
        SectionCap {
            rank,
            degree,
            max_sections,
        }
    }
}

impl From<SectionCap> for [i64; 3] {
    fn from(c: SectionCap) -> [i64; 3] {
        [c.rank, c.degree, c.max_sections]
    }
}

/// Lower bounds on the degree of generated subsheaves used by linear verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct LowerDegreeRules {
    /// A generated subsheaf with `k + 1` sections has degree at least `d_k`
    /// (for rank above one, through its determinant: at least `d_1`).
    pub gonality: bool,
    /// A generated rank-2 subsheaf with at least 3 sections and no pencil has
    /// degree at least `d_2`; subsheaves containing a pencil are supplied as
    /// `declaredGeneratedFullRank` records.
    pub rank2_no_pencil: bool,
}

impl Default for LowerDegreeRules {
    fn default() -> Self {
        LowerDegreeRules {
            gonality: true,
            rank2_no_pencil: true,
        }
    }
}

/// On-disk shape of a profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ProfileFile {
    pub genus: i64,
    #[serde(default = "yes")]
    pub general: bool,
    pub system: SystemType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line_max_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rank_max_degree: Vec<[i64; 2]>,
    #[serde(default)]
    pub section_caps: Vec<SectionCap>,
    #[serde(default)]
    pub declared: Vec<SubsystemRecord>,
    #[serde(default)]
    pub declared_generated_full_rank: Vec<SubsystemRecord>,
    #[serde(default)]
    pub exclusions: Vec<Exclusion>,
    #[serde(default)]
    pub lower_degree_rules: LowerDegreeRules,
}

fn yes() -> bool {
    true
}

/// Validated evidence about one coherent system. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ProfileFile", into = "ProfileFile")]
pub struct SystemProfile {
    curve: CurveModel,
    sys: SystemType,
    line_max_degree: Option<i64>,
    rank_max_degree: Vec<[i64; 2]>,
    section_caps: Vec<SectionCap>,
    declared: Vec<SubsystemRecord>,
    declared_generated_fullrank: Vec<SubsystemRecord>,
    exclusions: Vec<Exclusion>,
    rules: LowerDegreeRules,
}

impl From<SystemProfile> for ProfileFile {
    fn from(p: SystemProfile) -> ProfileFile {
        ProfileFile {
            genus: p.curve.genus,
            general: p.curve.general,
            system: p.sys,
            line_max_degree: p.line_max_degree,
            rank_max_degree: p.rank_max_degree,
            section_caps: p.section_caps,
            declared: p.declared,
            declared_generated_full_rank: p.declared_generated_fullrank,
            exclusions: p.exclusions,
            lower_degree_rules: p.rules,
        }
    }
}

impl TryFrom<ProfileFile> for SystemProfile {
    type Error = ProfileError;

    fn try_from(f: ProfileFile) -> Result<SystemProfile, ProfileError> {
        let curve = CurveModel::new(f.genus, f.general)?;
        let mut b = ProfileBuilder::new(curve, f.system);
        b.line_max_degree = f.line_max_degree;
        b.rank_max_degree = f.rank_max_degree;
        b.section_caps = f.section_caps;
        b.declared = f.declared;
        b.declared_generated_fullrank = f.declared_generated_full_rank;
        b.exclusions = f.exclusions;
        b.rules = f.lower_degree_rules;
        b.build()
    }
}

#[derive(Debug, Clone)]
pub struct ProfileBuilder {
    curve: CurveModel,
    sys: SystemType,
    line_max_degree: Option<i64>,
    rank_max_degree: Vec<[i64; 2]>,
    section_caps: Vec<SectionCap>,
    declared: Vec<SubsystemRecord>,
    declared_generated_fullrank: Vec<SubsystemRecord>,
    exclusions: Vec<Exclusion>,
    rules: LowerDegreeRules,
}

impl ProfileBuilder {
    pub fn new(curve: CurveModel, sys: SystemType) -> ProfileBuilder {
        ProfileBuilder {
            curve,
            sys,
            line_max_degree: None,
            rank_max_degree: Vec::new(),
            section_caps: Vec::new(),
            declared: Vec::new(),
            declared_generated_fullrank: Vec::new(),
            exclusions: Vec::new(),
            rules: LowerDegreeRules::default(),
        }
    }

    pub fn line_max_degree(mut self, d: i64) -> Self {
        self.line_max_degree = Some(d);
        self
    }

    pub fn rank_max_degree(mut self, rank: i64, d: i64) -> Self {
        self.rank_max_degree.push([rank, d]);
        self
    }

    pub fn section_cap(mut self, rank: i64, degree: i64, max_sections: i64) -> Self {
        self.section_caps.push(SectionCap {
            rank,
            degree,
            max_sections,
        });
        self
    }

    pub fn declare(mut self, rec: SubsystemRecord) -> Self {
        self.declared.push(rec);
        self
    }

    pub fn declare_generated_fullrank(mut self, rec: SubsystemRecord) -> Self {
        self.declared_generated_fullrank.push(rec);
        self
    }

    pub fn exclude(mut self, ex: Exclusion) -> Self {
        self.exclusions.push(ex);
        self
    }

    pub fn rules(mut self, rules: LowerDegreeRules) -> Self {
        self.rules = rules;
        self
    }

    pub fn build(self) -> Result<SystemProfile, ProfileError> {
        let p = SystemProfile {
            curve: self.curve,
            sys: self.sys,
            line_max_degree: self.line_max_degree,
            rank_max_degree: self.rank_max_degree,
            section_caps: self.section_caps,
            declared: self.declared,
            declared_generated_fullrank: self.declared_generated_fullrank,
            exclusions: self.exclusions,
            rules: self.rules,
        };
        p.validate()?;
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Stable,
    StrictlySemistable,
    Unstable,
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    SmallAlpha,
    LargeAlpha,
    AtAlpha(Rat),
    Linear,
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Basis {
    /// Exhaustive comparison over declared records and the admissible region.
    Enumeration,
    /// Linear stability inferred from stability of the dual span bundle.
    DualSpanBundle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Option<SubsystemRecord>,
    pub regime: Regime,
    /// Unresolved candidate region, for `Undetermined`.
    pub region: Option<String>,
    pub basis: Basis,
}

impl Verdict {
    fn new(
        outcome: Outcome,
        witness: Option<CohType>,
        regime: Regime,
        region: Option<String>,
    ) -> Verdict {
        Verdict {
            outcome,
            witness,
            regime,
            region,
            basis: Basis::Enumeration,
        }
    }

    pub fn is_stable(&self) -> bool {
        self.outcome == Outcome::Stable
    }

    pub fn is_determined(&self) -> bool {
        self.outcome != Outcome::Undetermined
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriVerdict {
    pub alpha_small: Verdict,
    pub alpha_large: Verdict,
    pub linear: Verdict,
}

impl TriVerdict {
    pub fn outcomes(&self) -> [Outcome; 3] {
        [
            self.alpha_small.outcome,
            self.alpha_large.outcome,
            self.linear.outcome,
        ]
    }

    /// Stable for small alpha and linearly stable, yet determined not stable for large alpha.
    pub fn is_forbidden_row(&self) -> bool {
        self.alpha_small.is_stable()
            && self.linear.is_stable()
            && self.alpha_large.is_determined()
            && !self.alpha_large.is_stable()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NetStatus {
    Yes(SubsystemRecord),
    No,
    Unknown,
}

/// Which comparison a candidate search uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchRegime {
    SmallAlpha,
    LargeAlpha,
    AtAlpha(Rat),
    Linear,
}

fn canonical_key(t: &CohType) -> (i64, i64, i64) {
    (t.r, -t.d, -t.n)
}

impl SystemProfile {
    pub fn builder(curve: CurveModel, sys: SystemType) -> ProfileBuilder {
        ProfileBuilder::new(curve, sys)
    }

    pub fn curve(&self) -> &CurveModel {
        &self.curve
    }

    pub fn sys(&self) -> &SystemType {
        &self.sys
    }

    pub fn line_max_degree(&self) -> Option<i64> {
        self.line_max_degree
    }

    pub fn declared(&self) -> &[SubsystemRecord] {
        &self.declared
    }

    pub fn declared_generated_fullrank(&self) -> &[SubsystemRecord] {
        &self.declared_generated_fullrank
    }

    pub fn exclusions(&self) -> &[Exclusion] {
        &self.exclusions
    }

    pub fn section_caps(&self) -> &[SectionCap] {
        &self.section_caps
    }

    pub fn rules(&self) -> LowerDegreeRules {
        self.rules
    }

    /// Returns a builder seeded with this profile's evidence.
    pub fn to_builder(&self) -> ProfileBuilder {
        ProfileBuilder {
            curve: self.curve,
            sys: self.sys,
            line_max_degree: self.line_max_degree,
            rank_max_degree: self.rank_max_degree.clone(),
            section_caps: self.section_caps.clone(),
            declared: self.declared.clone(),
            declared_generated_fullrank: self.declared_generated_fullrank.clone(),
            exclusions: self.exclusions.clone(),
            rules: self.rules,
        }
    }

    fn all_declared(&self) -> impl Iterator<Item = &CohType> {
        self.declared
            .iter()
            .chain(self.declared_generated_fullrank.iter())
    }

    fn validate(&self) -> Result<(), ProfileError> {
        let s = &self.sys;
        let invalid = |m: String| Err(ProfileError::Invalid(m));
        if s.r < 1 || s.n < 0 {
            return invalid(format!("system {s} needs r >= 1 and n >= 0"));
        }
        if s.generated && s.d < 0 {
            return invalid(format!("generated system {s} has negative degree"));
        }
        if s.generated && s.d > 0 && s.n <= s.r {
            return invalid(format!(
                "generated system {s} of positive degree needs n > r"
            ));
        }
        if s.generated && s.d == 0 && s.n > s.r {
            return invalid(format!(
                "generated system {s} of degree 0 is trivial, so n <= r"
            ));
        }
        if self.line_max_degree.is_some() && s.r < 2 {
            return invalid("lineMaxDegree needs a system of rank at least 2".into());
        }
        for &[rank, _] in &self.rank_max_degree {
            if rank < 1 || rank >= s.r {
                return invalid(format!("rankMaxDegree rank {rank} must lie in 1..{}", s.r));
            }
        }
        for c in &self.section_caps {
            if c.rank < 1 || c.rank > s.r || c.max_sections < 0 {
                return invalid(format!(
                    "section cap {:?} out of range",
                    <[i64; 3]>::from(*c)
                ));
            }
        }
        for e in &self.exclusions {
            if e.rank() < 1 || e.rank() > s.r {
                return invalid(format!("exclusion '{e}' has rank outside 1..={}", s.r));
            }
        }
        for rec in &self.declared {
            self.check_record(rec)?;
        }
        for rec in &self.declared_generated_fullrank {
            if rec.r != s.r || !rec.generated || rec.d <= 0 {
                return Err(ProfileError::Contradiction {
                    record: *rec,
                    reason: "full-rank records must have the system's rank, be generated and have positive degree".into(),
                });
            }
            self.check_record(rec)?;
        }
        Ok(())
    }

    fn check_record(&self, rec: &CohType) -> Result<(), ProfileError> {
        let s = &self.sys;
        let fail = |reason: String| {
            Err(ProfileError::Contradiction {
                record: *rec,
                reason,
            })
        };
        if !is_proper(rec, s) {
            return fail(format!("not a proper subsystem type of {s}"));
        }
        if rec.r == s.r && rec.d > s.d {
            return fail("full-rank subsheaf cannot exceed the system's degree".into());
        }
        if rec.generated && rec.n > rec.r && rec.d <= 0 {
            return fail(
                "a generated sheaf with more sections than rank has positive degree".into(),
            );
        }
        if rec.generated && rec.n > rec.r && self.rules.gonality && self.curve.general {
            // its determinant is generated with at least two sections
            let k = if rec.r == 1 { rec.n - 1 } else { 1 };
            let floor = self.curve.gonality(k)?;
            if rec.d < floor {
                return fail(format!(
                    "a generated sheaf of this type has degree at least d_{k} = {floor}"
                ));
            }
        }
        if s.generated && rec.generated && (rec.n > s.n || rec.d > s.d) {
            return fail("generated record exceeds the system's degree or sections".into());
        }
        if let Some(bound) = self.degree_bound(rec.r) {
            if rec.d > bound {
                return fail(format!("degree exceeds the rank-{} bound {bound}", rec.r));
            }
        }
        let cap = self.section_cap(rec.r, rec.d)?;
        if rec.n > cap {
            return fail(format!(
                "{} sections exceed the cap {cap} at degree {}",
                rec.n, rec.d
            ));
        }
        if let Some(e) = self
            .exclusions
            .iter()
            .find(|e| e.forbids(rec.r, rec.d, rec.n))
        {
            return fail(format!("excluded by '{e}'"));
        }
        if !rec.generated && rec.n > rec.r && !self.sections_carried(rec)? {
            return fail("no admissible generated subsheaf carries its sections".into());
        }
        Ok(())
    }

    /// The sections `W` of a subsystem `(F, W)` generate a subsheaf of rank at
    /// most `rk F` with `dim W` sections, of degree at most `deg F` when the
    /// ranks agree. Some such sheaf must be admissible.
    fn sections_carried(&self, rec: &CohType) -> Result<bool, ProfileError> {
        for rank in 1..rec.r {
            if self.linear_min_degree(rank, rec.n)?.is_some() {
                return Ok(true);
            }
        }
        Ok(self
            .linear_min_degree(rec.r, rec.n)?
            .is_some_and(|d| d <= rec.d))
    }

    /// Maximal degree of a rank-`rank` subsystem, when known.
    pub fn degree_bound(&self, rank: i64) -> Option<i64> {
        if rank == self.sys.r {
            return Some(self.sys.d);
        }
        let listed = self
            .rank_max_degree
            .iter()
            .filter(|[r, _]| *r == rank)
            .map(|[_, d]| *d);
        let line = if rank == 1 {
            self.line_max_degree
        } else {
            None
        };
        listed.chain(line).min()
    }

    /// Cap on sections of a rank-`rank` subsystem of degree `d`. Nondecreasing in `d`.
    pub fn section_cap(&self, rank: i64, d: i64) -> Result<i64, ProfileError> {
        let s = &self.sys;
        // for a generated system, W = V forces F = E
        let mut cap = if s.generated && (rank < s.r || d < s.d) {
            s.n - 1
        } else {
            s.n
        };
        for c in self
            .section_caps
            .iter()
            .filter(|c| c.rank == rank && d <= c.degree)
        {
            cap = cap.min(c.max_sections);
        }
        if rank == 1 {
            cap = cap.min(self.curve.max_line_sections(d)?);
        }
        for lim in self
            .exclusions
            .iter()
            .filter_map(|e| e.section_limit(rank, d))
        {
            cap = cap.min(lim);
        }
        Ok(cap)
    }

    /// A degree beyond which no cap changes.
    fn horizon(&self) -> i64 {
        let g = self.curve.genus;
        let mut h = self.sys.d.abs().max(2 * g + self.sys.n);
        h = h.max(
            self.section_caps
                .iter()
                .map(|c| c.degree)
                .max()
                .unwrap_or(0),
        );
        for e in &self.exclusions {
            if let Exclusion::DegreeSections { min_degree, .. } = e {
                h = h.max(*min_degree);
            }
        }
        h = h.max(self.line_max_degree.unwrap_or(0));
        h = h.max(
            self.rank_max_degree
                .iter()
                .map(|[_, d]| *d)
                .max()
                .unwrap_or(0),
        );
        h + 1
    }

    /// Lowest degree at which the caps of any rank can change.
    fn lowest_breakpoint(&self) -> i64 {
        let mut lo = -1;
        lo = lo.min(
            self.section_caps
                .iter()
                .map(|c| c.degree)
                .min()
                .unwrap_or(lo),
        );
        for e in &self.exclusions {
            if let Exclusion::DegreeSections { min_degree, .. } = e {
                lo = lo.min(*min_degree - 1);
            }
        }
        lo
    }

    /// Admissible `(degree, sections)` region of a proper rank, for the alpha regimes.
    pub fn rank_caps(&self, rank: i64) -> Result<RankCaps, ProfileError> {
        let top = self
            .degree_bound(rank)
            .ok_or(ProfileError::MissingDegreeBound(rank))?;
        let lo = self.lowest_breakpoint().min(top);
        let mut caps = Vec::with_capacity((top - lo + 1) as usize);
        for d in lo..=top {
            caps.push(self.section_cap(rank, d)?);
        }
        Ok(RankCaps {
            rank,
            min_degree: lo,
            max_sections: caps,
        })
    }

    fn frontier_candidates(&self, rank: i64) -> Result<Vec<CohType>, ProfileError> {
        Ok(self
            .rank_caps(rank)?
            .frontier()
            .into_iter()
            .map(|(d, n)| CohType::new(rank, d, n, false))
            .filter(|t| is_proper(t, &self.sys) && !self.is_excluded(t))
            .collect())
    }

    fn is_excluded(&self, t: &CohType) -> bool {
        self.exclusions.iter().any(|e| e.forbids(t.r, t.d, t.n))
    }

    fn is_declared(&self, t: &CohType) -> bool {
        self.all_declared()
            .any(|x| (x.r, x.d, x.n) == (t.r, t.d, t.n))
    }

    /// Smallest degree of a generated subsheaf of rank `rank` with `n` sections, if any.
    fn linear_min_degree(&self, rank: i64, n: i64) -> Result<Option<i64>, ProfileError> {
        let mut lo = 1;
        if self.rules.gonality {
            let k = if rank == 1 { n - 1 } else { 1 };
            lo = lo.max(self.curve.gonality(k)?);
        }
        if self.rules.rank2_no_pencil && rank == 2 && n >= 3 {
            lo = lo.max(self.curve.gonality(2)?);
        }
        let hi = self.degree_bound(rank).unwrap_or_else(|| self.horizon());
        for d in lo..=hi {
            let t = CohType::new(rank, d, n, true);
            if !is_proper(&t, &self.sys) || self.is_excluded(&t) {
                continue;
            }
            if self.section_cap(rank, d)? >= n {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }

    /// Candidates that decide a verdict in `regime`.
    ///
    /// Alpha regimes: declared records plus the dominance frontier of each
    /// proper rank below the system's rank (full-rank subsystems have strictly
    /// smaller alpha-slope for every alpha > 0). Linear: declared generated
    /// records plus, for each rank and section count, the generated candidate
    /// of least admissible degree.
    pub fn enumerate_candidates(&self, regime: SearchRegime) -> Result<Vec<CohType>, ProfileError> {
        let mut out: BTreeSet<CohType> = BTreeSet::new();
        match regime {
            SearchRegime::Linear => {
                for rec in self.all_declared().filter(|t| linear_slope(t).is_ok()) {
                    out.insert(*rec);
                }
                for rank in 1..=self.sys.r {
                    for c in self.enumerate_linear_rank(rank)? {
                        if !self.is_declared(&c) {
                            out.insert(c);
                        }
                    }
                }
            }
            _ => {
                out.extend(self.all_declared().copied());
                for rank in 1..self.sys.r {
                    for c in self.frontier_candidates(rank)? {
                        if !self.is_declared(&c) {
                            out.insert(c);
                        }
                    }
                }
            }
        }
        let mut v: Vec<CohType> = out.into_iter().collect();
        v.sort_by_key(canonical_key);
        Ok(v)
    }

    fn compare(&self, regime: SearchRegime, sub: &CohType) -> Result<LimitOrder, ProfileError> {
        Ok(match regime {
            SearchRegime::SmallAlpha => lex_compare_small_alpha(sub, &self.sys)?,
            SearchRegime::LargeAlpha => lex_compare_large_alpha(sub, &self.sys)?,
            SearchRegime::AtAlpha(a) => compare_at_alpha(sub, &self.sys, a)?,
            SearchRegime::Linear => {
                // smaller linear slope destabilizes
                linear_slope(&self.sys)?.cmp(&linear_slope(sub)?).into()
            }
        })
    }

    fn decide(&self, regime: SearchRegime, out_regime: Regime) -> Result<Verdict, ProfileError> {
        let declared: Vec<CohType> = match regime {
            SearchRegime::Linear => self
                .all_declared()
                .filter(|t| linear_slope(t).is_ok())
                .copied()
                .collect(),
            _ => self.all_declared().copied().collect(),
        };
        let mut declared_equal = None;
        let mut worst: Option<(CohType, Rat)> = None;
        for rec in &declared {
            match self.compare(regime, rec)? {
                LimitOrder::Destabilizes => {
                    let score = self.severity(regime, rec)?;
                    let better = match worst {
                        None => true,
                        Some((w, s)) => {
                            score > s || (score == s && canonical_key(rec) < canonical_key(&w))
                        }
                    };
                    if better {
                        worst = Some((*rec, score));
                    }
                }
                LimitOrder::Equal => {
                    if declared_equal.is_none() {
                        declared_equal = Some(*rec);
                    }
                }
                LimitOrder::Safe => {}
            }
        }
        if let Some((w, _)) = worst {
            return Ok(Verdict::new(Outcome::Unstable, Some(w), out_regime, None));
        }

        let mut unresolved: Vec<String> = Vec::new();
        let mut region_equal: Vec<CohType> = Vec::new();
        let ranks: Vec<i64> = match regime {
            SearchRegime::Linear => (1..=self.sys.r).collect(),
            _ => (1..self.sys.r).collect(),
        };
        for rank in ranks {
            let cands = match regime {
                SearchRegime::Linear => self.enumerate_linear_rank(rank)?,
                _ => match self.frontier_candidates(rank) {
                    Ok(c) => c,
                    Err(ProfileError::MissingDegreeBound(_)) => {
                        if let Some(msg) = self.unbounded_rank(regime, rank)? {
                            unresolved.push(msg);
                        }
                        continue;
                    }
                    Err(e) => return Err(e),
                },
            };
            for c in cands {
                if self.is_declared(&c) {
                    continue;
                }
                match self.compare(regime, &c)? {
                    LimitOrder::Destabilizes => {
                        unresolved.push(format!("{c} admissible and destabilizing"))
                    }
                    LimitOrder::Equal => region_equal.push(c),
                    LimitOrder::Safe => {}
                }
            }
        }
        if !unresolved.is_empty() {
            return Ok(Verdict::new(
                Outcome::Undetermined,
                None,
                out_regime,
                Some(unresolved.join("; ")),
            ));
        }
        if let Some(w) = declared_equal {
            return Ok(Verdict::new(
                Outcome::StrictlySemistable,
                Some(w),
                out_regime,
                None,
            ));
        }
        if !region_equal.is_empty() {
            let msg = region_equal
                .iter()
                .map(|c| format!("{c} admissible with equal slope"))
                .collect::<Vec<_>>()
                .join("; ");
            return Ok(Verdict::new(
                Outcome::Undetermined,
                None,
                out_regime,
                Some(msg),
            ));
        }
        Ok(Verdict::new(Outcome::Stable, None, out_regime, None))
    }

    /// Degree-unbounded rank: only the large-alpha regime can still be settled,
    /// by section density alone.
    fn unbounded_rank(
        &self,
        regime: SearchRegime,
        rank: i64,
    ) -> Result<Option<String>, ProfileError> {
        if regime == SearchRegime::LargeAlpha {
            let n_sup = self.section_cap(rank, self.horizon())?;
            if Rat::frac(n_sup, rank) < self.sys.section_density() {
                return Ok(None);
            }
        }
        Ok(Some(format!("rank-{rank} subsystems have no degree bound")))
    }

    fn enumerate_linear_rank(&self, rank: i64) -> Result<Vec<CohType>, ProfileError> {
        let mut pts = Vec::new();
        for n in (rank + 1)..=self.sys.n {
            if let Some(d) = self.linear_min_degree(rank, n)? {
                pts.push((-d, n));
            }
        }
        Ok(slope::pareto_frontier(pts)
            .into_iter()
            .map(|(negd, n)| CohType::new(rank, -negd, n, true))
            .collect())
    }

    /// Larger is more destabilizing; used to choose among declared witnesses.
    fn severity(&self, regime: SearchRegime, sub: &CohType) -> Result<Rat, ProfileError> {
        Ok(match regime {
            SearchRegime::SmallAlpha => sub.slope() - self.sys.slope(),
            SearchRegime::LargeAlpha => sub.section_density() - self.sys.section_density(),
            SearchRegime::AtAlpha(a) => {
                slope::alpha_slope(sub, a)? - slope::alpha_slope(&self.sys, a)?
            }
            SearchRegime::Linear => linear_slope(&self.sys)? - linear_slope(sub)?,
        })
    }

    pub fn verdict_alpha_small(&self) -> Result<Verdict, ProfileError> {
        self.decide(SearchRegime::SmallAlpha, Regime::SmallAlpha)
    }

    pub fn verdict_alpha_large(&self) -> Result<Verdict, ProfileError> {
        self.decide(SearchRegime::LargeAlpha, Regime::LargeAlpha)
    }

    pub fn verdict_at_alpha(&self, alpha: Rat) -> Result<Verdict, ProfileError> {
        if !alpha.is_positive() {
            return Err(ProfileError::NonPositiveAlpha(alpha));
        }
        self.decide(SearchRegime::AtAlpha(alpha), Regime::AtAlpha(alpha))
    }

    pub fn verdict_linear(&self) -> Result<Verdict, ProfileError> {
        if !self.sys.generated {
            return Err(ProfileError::NotGenerated);
        }
        if self.sys.d <= 0 {
            return Err(ProfileError::NonPositiveDegree(self.sys.d));
        }
        self.decide(SearchRegime::Linear, Regime::Linear)
    }

    /// Critical values of alpha over declared records and the frontier of every proper rank.
    pub fn critical_alphas(&self) -> Result<Vec<Wall>, ProfileError> {
        let cands = self.enumerate_candidates(SearchRegime::SmallAlpha)?;
        Ok(slope::walls_of(&self.sys, &cands)?)
    }

    pub fn contains_net(&self) -> Result<NetStatus, ProfileError> {
        if self.sys.n < 3 {
            return Err(ProfileError::TooFewSections(self.sys.n));
        }
        if let Some(net) = self
            .all_declared()
            .filter(|t| t.r == 1 && t.n >= 3)
            .min_by_key(|t| canonical_key(t))
        {
            return Ok(NetStatus::Yes(*net));
        }
        let top = self.degree_bound(1).unwrap_or_else(|| self.horizon());
        let possible = (self.lowest_breakpoint().min(top)..=top).try_fold(false, |acc, d| {
            if acc {
                return Ok::<bool, ProfileError>(true);
            }
            let n = self.section_cap(1, d)?;
            Ok(n >= 3 && !self.is_excluded(&CohType::new(1, d, 3, false)))
        })?;
        Ok(if possible {
            NetStatus::Unknown
        } else {
            NetStatus::No
        })
    }

    /// Large-alpha verdict for type `(2, d, 5)` from the presence of a net alone.
    pub fn verdict_2d5_large(&self) -> Result<Verdict, ProfileError> {
        if self.sys.r != 2 || self.sys.n != 5 {
            return Err(ProfileError::WrongType(self.sys));
        }
        Ok(match self.contains_net()? {
            NetStatus::Yes(w) => Verdict::new(Outcome::Unstable, Some(w), Regime::LargeAlpha, None),
            NetStatus::No => Verdict::new(Outcome::Stable, None, Regime::LargeAlpha, None),
            NetStatus::Unknown => Verdict::new(
                Outcome::Undetermined,
                None,
                Regime::LargeAlpha,
                Some("a rank-1 subsystem with 3 sections is admissible but not declared".into()),
            ),
        })
    }

    /// The three verdicts. For type `(2, d, 5)` the linear verdict comes from
    /// stability of the dual span bundle whenever that check succeeds.
    pub fn triple_verdict(&self) -> Result<TriVerdict, ProfileError> {
        if !self.sys.generated {
            return Err(ProfileError::NotGenerated);
        }
        if self.sys.d <= 0 {
            return Err(ProfileError::NonPositiveDegree(self.sys.d));
        }
        let alpha_small = self.verdict_alpha_small()?;
        let alpha_large = self.verdict_alpha_large()?;
        let mut linear = self.verdict_linear()?;
        if crate::butler::dsb_proves_linear(self) {
            // a stable dual span bundle forces linear stability
            if matches!(
                linear.outcome,
                Outcome::Unstable | Outcome::StrictlySemistable
            ) {
                return Err(ProfileError::Invalid(format!(
                    "dual span bundle of {} is stable, yet {} is a linear destabilizer",
                    self.sys,
                    linear.witness.map_or_else(String::new, |w| w.to_string())
                )));
            }
            linear = Verdict::dsb_stable();
        }
        let tri = TriVerdict {
            alpha_small,
            alpha_large,
            linear,
        };
        if tri.is_forbidden_row() {
            return Err(ProfileError::ForbiddenRow(format!(
                "{} has outcomes {:?}",
                self.sys,
                tri.outcomes()
            )));
        }
        Ok(tri)
    }
}

impl Verdict {
    pub(crate) fn dsb_stable() -> Verdict {
        Verdict {
            outcome: Outcome::Stable,
            witness: None,
            regime: Regime::Linear,
            region: None,
            basis: Basis::DualSpanBundle,
        }
    }
}
