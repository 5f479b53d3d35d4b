//! Generators for the example systems: extensions of line bundles whose
//! sections all lift, the elementary-transformation example, and the
//! overview grid of stability patterns.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::butler::{butler_datum, ButlerCase, ButlerError};
use crate::check::{all_pass, Check, Rel};
use crate::curve::{secant_expected_dim, CurveModel, OracleError};
use crate::profile::{Exclusion, Outcome, ProfileBuilder, ProfileError, SystemProfile, TriVerdict};
use crate::rat::Rat;
use crate::slope::CohType;

/// Smallest genus accepted by the elementary-transformation example.
pub const NYN_MIN_GENUS: i64 = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("genus {genus} is too small: {needed}")]
    GenusTooSmall { genus: i64, needed: String },
    #[error("parameter window {lo} .. {hi} is empty")]
    WindowEmpty { lo: String, hi: String },
    #[error("infeasible: {}", .0.join("; "))]
    Infeasible(Vec<String>),
    #[error("invalid extension datum: {0}")]
    InvalidDatum(String),
    #[error("{name} at genus {genus}: computed {computed}, expected {expected}")]
    VerdictMismatch {
        name: ExampleName,
        genus: i64,
        computed: String,
        expected: String,
    },
    #[error("unknown example {0:?}")]
    UnknownExample(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

impl From<ButlerError> for ConstructError {
    fn from(e: ButlerError) -> ConstructError {
        match e {
            ButlerError::Oracle(o) => o.into(),
            ButlerError::Profile(p) => p.into(),
            ButlerError::GenusTooSmall(g) => ConstructError::GenusTooSmall {
                genus: g,
                needed: format!("g >= {}", crate::butler::BUTLER_MIN_GENUS),
            },
            other => ConstructError::InvalidDatum(other.to_string()),
        }
    }
}

/// Line bundles `L_1` (degree `ell1`, `k1` sections) and `L_2` (degree
/// `ell2`, `k2` sections) on a general curve of genus `g`, to be glued into
/// an extension `0 -> L_1 -> E -> L_2 -> 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDatum {
    pub g: i64,
    pub ell1: i64,
    pub k1: i64,
    pub ell2: i64,
    pub k2: i64,
}

impl ExtensionDatum {
    fn validate(&self) -> Result<(), ConstructError> {
        if self.k1 < 1 || self.k2 < 1 || self.ell1 < 0 || self.ell2 < 0 {
            return Err(ConstructError::InvalidDatum(format!(
                "need k1, k2 >= 1 and ell1, ell2 >= 0, got {self:?}"
            )));
        }
        Ok(())
    }

    pub fn system(&self) -> CohType {
        CohType::new(2, self.ell1 + self.ell2, self.k1 + self.k2, true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtCondition {
    pub holds: bool,
    pub check: Check,
}

/// Whether all sections of `L_2` lift to `E` for a general extension:
/// `ell2 > k1 k2 + (k2 - 1)(g - 1 - ell1)`.
pub fn mf_ext_condition(x: &ExtensionDatum) -> ExtCondition {
    let rhs = x.k1 * x.k2 + (x.k2 - 1) * (x.g - 1 - x.ell1);
    let check = Check::new(
        "l_2 > k_1 k_2 + (k_2 - 1)(g - 1 - l_1)",
        x.ell2,
        Rel::Gt,
        rhs,
    );
    ExtCondition {
        holds: check.pass,
        check,
    }
}

/// Brill-Noether nonemptiness and base-point-freeness for both line bundles.
pub fn line_bundle_checks(
    curve: &CurveModel,
    x: &ExtensionDatum,
) -> Result<Vec<Check>, OracleError> {
    let mut out = Vec::new();
    for (i, ell, k) in [(1, x.ell1, x.k1), (2, x.ell2, x.k2)] {
        let r = k - 1;
        if r == 0 {
            out.push(Check::flag(format!("L_{i} = O_C"), ell == 0));
            continue;
        }
        out.push(Check::new(
            format!("beta(W^{r}_{ell}) >= 0 for L_{i}"),
            curve.bn_number(r, ell)?,
            Rel::Ge,
            0,
        ));
        out.push(Check::flag(
            format!("L_{i} in W^{r}_{ell} general is base point free"),
            curve.bpf_general_ok(r, ell)?,
        ));
    }
    Ok(out)
}

/// Generated extension profile: type `(2, ell1 + ell2, k1 + k2)` with the
/// subsystem `(L_1, H^0(L_1))` declared. `extra` adds the caps and
/// exclusions the caller derives from the construction.
pub fn build_mf_ext_profile(
    x: &ExtensionDatum,
    extra: impl FnOnce(ProfileBuilder) -> ProfileBuilder,
) -> Result<SystemProfile, ConstructError> {
    x.validate()?;
    let curve = CurveModel::general(x.g)?;
    let mut checks = line_bundle_checks(&curve, x)?;
    checks.push(mf_ext_condition(x).check);
    if !all_pass(&checks) {
        return Err(ConstructError::Infeasible(
            checks
                .iter()
                .filter(|c| !c.pass)
                .map(Check::reason)
                .collect(),
        ));
    }
    let b = SystemProfile::builder(curve, x.system()).declare(CohType::new(1, x.ell1, x.k1, true));
    Ok(extra(b).build()?)
}

/// The generated `(2, d, 5)` extension used for the Butler case; it has no net.
pub fn butler_profile(g: i64, case: ButlerCase) -> Result<SystemProfile, ConstructError> {
    let x = butler_datum(g, case)?;
    let d = x.ell1 + x.ell2;
    build_mf_ext_profile(&x, |b| b.line_max_degree(d / 2).exclude(Exclusion::NoNet))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExampleName {
    NNN,
    YYN,
    YNN,
    NYN,
    NNY,
    NYY,
    YYY,
}

impl ExampleName {
    pub const ALL: [ExampleName; 7] = [
        ExampleName::NNN,
        ExampleName::YYN,
        ExampleName::YNN,
        ExampleName::NYN,
        ExampleName::NNY,
        ExampleName::NYY,
        ExampleName::YYY,
    ];

    pub fn default_genus(self) -> i64 {
        match self {
            ExampleName::NNN | ExampleName::YYN => 6,
            ExampleName::YNN => 12,
            ExampleName::NYN => 18,
            ExampleName::NNY => 4,
            ExampleName::NYY | ExampleName::YYY => 25,
        }
    }

    /// Genus from which the construction is known to work.
    pub fn stated_min_genus(self) -> i64 {
        self.default_genus()
    }

    /// Advertised stability: (alpha_S, alpha_L, linear).
    pub fn expected(self) -> [bool; 3] {
        let s = format!("{self:?}");
        let mut out = [false; 3];
        for (o, c) in out.iter_mut().zip(s.chars()) {
            *o = c == 'Y';
        }
        out
    }
}

impl fmt::Display for ExampleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for ExampleName {
    type Err = ConstructError;

    fn from_str(s: &str) -> Result<ExampleName, ConstructError> {
        ExampleName::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ConstructError::UnknownExample(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Parameter {
    pub name: String,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleReport {
    pub name: ExampleName,
    pub genus: i64,
    pub parameter: Option<Parameter>,
    pub epsilon: Option<i64>,
    /// The genus is below the bound the construction is stated for, yet every check passed.
    pub below_stated_bound: bool,
    pub profile: SystemProfile,
    pub expected: [bool; 3],
    pub computed: TriVerdict,
    pub trace: Vec<Check>,
    /// Justification of each exclusion attached to the profile, in order.
    pub exclusion_notes: Vec<String>,
    pub notes: Vec<String>,
}

/// Y/N/? encoding of an outcome.
pub fn grid_symbol(o: Outcome) -> &'static str {
    match o {
        Outcome::Stable => "Y",
        Outcome::Unstable | Outcome::StrictlySemistable => "N",
        Outcome::Undetermined => "?",
    }
}

pub fn grid_row(t: &TriVerdict) -> String {
    t.outcomes().map(grid_symbol).join(" ")
}

struct Built {
    parameter: Option<Parameter>,
    epsilon: Option<i64>,
    profile: SystemProfile,
    trace: Vec<Check>,
    exclusion_notes: Vec<String>,
    notes: Vec<String>,
}

/// Smallest integer in the open/closed window `lo .. hi` for which `build` succeeds.
fn search_window(
    lo: i64,
    hi: i64,
    describe: (String, String),
    mut build: impl FnMut(i64) -> Result<Built, ConstructError>,
) -> Result<Built, ConstructError> {
    if lo > hi {
        return Err(ConstructError::WindowEmpty {
            lo: describe.0,
            hi: describe.1,
        });
    }
    let mut first_err = None;
    for ell in lo..=hi {
        match build(ell) {
            Ok(b) => return Ok(b),
            Err(e @ ConstructError::Infeasible(_)) => {
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(first_err.expect("nonempty window"))
}

fn ell_param(value: i64) -> Option<Parameter> {
    Some(Parameter {
        name: "ell".into(),
        value,
    })
}

/// Builds the profile with full trace from a datum; the trace records the
/// line-bundle and lifting checks.
fn ext_built(
    x: ExtensionDatum,
    window: Vec<Check>,
    exclusion_notes: Vec<String>,
    extra: impl FnOnce(ProfileBuilder) -> ProfileBuilder,
) -> Result<Built, ConstructError> {
    let curve = CurveModel::general(x.g)?;
    let mut trace = window;
    trace.extend(line_bundle_checks(&curve, &x)?);
    trace.push(mf_ext_condition(&x).check);
    if !all_pass(&trace) {
        return Err(ConstructError::Infeasible(
            trace
                .iter()
                .filter(|c| !c.pass)
                .map(Check::reason)
                .collect(),
        ));
    }
    let profile = build_mf_ext_profile(&x, extra)?;
    Ok(Built {
        parameter: ell_param(x.ell1.min(x.ell2)),
        epsilon: None,
        profile,
        trace,
        exclusion_notes,
        notes: Vec::new(),
    })
}

fn build_nnn(g: i64) -> Result<Built, ConstructError> {
    let curve = CurveModel::general(g)?;
    let d1 = curve.gonality(1)?;
    let (a, b) = (d1, d1 + 1);
    let mut trace = Vec::new();
    for (name, e) in [("L", a), ("M", b)] {
        trace.push(Check::new(
            format!("beta(W^1_{e}) >= 0 for {name}"),
            curve.bn_number(1, e)?,
            Rel::Ge,
            0,
        ));
        trace.push(Check::flag(
            format!("{name} in W^1_{e} general is base point free"),
            curve.bpf_general_ok(1, e)?,
        ));
        trace.push(Check::new(
            format!("h^0({name}) = 2 generically"),
            curve.max_line_sections(e)?,
            Rel::Eq,
            2,
        ));
    }
    if !all_pass(&trace) {
        return Err(ConstructError::Infeasible(
            trace
                .iter()
                .filter(|c| !c.pass)
                .map(Check::reason)
                .collect(),
        ));
    }
    let profile = SystemProfile::builder(curve, CohType::new(2, a + b, 4, true))
        .line_max_degree(b)
        .declare(CohType::new(1, a, 2, true))
        .declare(CohType::new(1, b, 2, true))
        .build()?;
    Ok(Built {
        parameter: Some(Parameter {
            name: "deg M".into(),
            value: b,
        }),
        epsilon: None,
        profile,
        trace,
        exclusion_notes: Vec::new(),
        notes: vec![format!(
            "E = L + M with deg L = {a}, deg M = {b}, both pencils"
        )],
    })
}

fn build_yyn(g: i64) -> Result<Built, ConstructError> {
    let curve = CurveModel::general(g)?;
    let d1 = curve.gonality(1)?;
    search_window(
        d1 + 1,
        g,
        (format!("d_1 = {d1} (exclusive)"), format!("g = {g}")),
        |ell| {
            let x = ExtensionDatum {
                g,
                ell1: ell,
                k1: 2,
                ell2: ell + 1,
                k2: 2,
            };
            let window = vec![
                Check::new("l > d_1", ell, Rel::Gt, d1),
                Check::new("l <= g", ell, Rel::Le, g),
            ];
            ext_built(x, window, Vec::new(), |b| {
                b.line_max_degree(ell).section_cap(1, ell, 2)
            })
        },
    )
}

fn build_ynn(g: i64) -> Result<Built, ConstructError> {
    let curve = CurveModel::general(g)?;
    let d2 = curve.gonality(2)?;
    search_window(
        d2 + 1,
        g,
        (format!("d_2 = {d2} (exclusive)"), format!("g = {g}")),
        |ell| {
            let x = ExtensionDatum {
                g,
                ell1: ell,
                k1: 3,
                ell2: ell + 1,
                k2: 2,
            };
            let window = vec![
                Check::new("l > d_2", ell, Rel::Gt, d2),
                Check::new("l <= g", ell, Rel::Le, g),
            ];
            ext_built(x, window, Vec::new(), |b| b.line_max_degree(ell))
        },
    )
}

fn build_nny(g: i64) -> Result<Built, ConstructError> {
    // g/2 + 1 < l < 2g/3 + 3/2
    let lo_r = Rat::frac(g, 2) + Rat::ONE;
    let hi_r = Rat::frac(2 * g, 3) + Rat::frac(3, 2);
    let lo = lo_r.floor() + 1;
    let hi = hi_r.ceil() - 1;
    search_window(
        lo,
        hi,
        (format!("{lo_r} (exclusive)"), format!("{hi_r} (exclusive)")),
        |ell| {
            let x = ExtensionDatum {
                g,
                ell1: ell + 1,
                k1: 2,
                ell2: ell,
                k2: 2,
            };
            let window = vec![
                Check::new("l > g/2 + 1", ell, Rel::Gt, lo_r),
                Check::new("l < 2g/3 + 3/2", ell, Rel::Lt, hi_r),
            ];
            let notes = vec![
                "a pencil N of degree <= l would lift from L_2 and split the nontrivial extension"
                    .to_string(),
                "no line subbundle has 3 sections: L_1 and L_2 are pencils".to_string(),
            ];
            let mut built = ext_built(x, window, notes, |b| {
                b.line_max_degree(ell + 1)
                    .declare_generated_fullrank(CohType::new(2, ell + 1, 3, true))
                    .exclude(Exclusion::DegreeSections {
                        rank: 1,
                        min_degree: ell + 1,
                        min_sections: 2,
                    })
                    .exclude(Exclusion::Sections {
                        rank: 1,
                        min_sections: 3,
                    })
            })?;
            built.parameter = ell_param(ell);
            if g == 4 {
                built
                    .notes
                    .push("g = 4 is the boundary case l = g of the window".into());
            }
            Ok(built)
        },
    )
}

/// `d_2 <= l < 3g/4 + 1`; `l_of` gives `(ell1, k1, ell2, k2)` from `l`.
fn build_dsb_example(g: i64, name: ExampleName) -> Result<Built, ConstructError> {
    let curve = CurveModel::general(g)?;
    let d1 = curve.gonality(1)?;
    let d2 = curve.gonality(2)?;
    let hi_r = Rat::frac(3 * g, 4) + Rat::ONE;
    let hi = hi_r.ceil() - 1;
    search_window(
        d2,
        hi,
        (format!("d_2 = {d2}"), format!("{hi_r} (exclusive)")),
        |ell| {
            let (x, line_max) = match name {
                ExampleName::NYY => (
                    ExtensionDatum {
                        g,
                        ell1: ell + 1,
                        k1: 2,
                        ell2: ell,
                        k2: 3,
                    },
                    ell + 1,
                ),
                _ => (
                    ExtensionDatum {
                        g,
                        ell1: ell,
                        k1: 2,
                        ell2: ell + 1,
                        k2: 3,
                    },
                    ell,
                ),
            };
            let window = vec![
                Check::new("l >= d_2", ell, Rel::Ge, d2),
                Check::new("l < 3g/4 + 1", ell, Rel::Lt, hi_r),
                Check::new("deg E < 3 d_1", 2 * ell + 1, Rel::Lt, 3 * d1),
            ];
            let notes = vec![
                "h^0(N) < h^0(L_2) = 3 for every line subbundle N of the nontrivial extension"
                    .to_string(),
            ];
            let mut built = ext_built(x, window, notes, |b| {
                b.line_max_degree(line_max).exclude(Exclusion::NoNet)
            })?;
            built.parameter = ell_param(ell);
            Ok(built)
        },
    )
}

/// Feasibility arithmetic of the elementary-transformation example.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NynReport {
    pub genus: i64,
    pub epsilon: i64,
    pub e: i64,
    /// `beta^2_{1, g - e} = g - 2e - 2`.
    pub beta: i64,
    pub secant_dim: i64,
    pub pointed_secant_dim: i64,
    pub quot_secant_dim: i64,
    pub checks: Vec<Check>,
    pub feasible: bool,
}

pub fn nyn_feasibility(g: i64) -> Result<NynReport, ConstructError> {
    if g < NYN_MIN_GENUS {
        return Err(ConstructError::GenusTooSmall {
            genus: g,
            needed: format!("g >= {NYN_MIN_GENUS}"),
        });
    }
    let curve = CurveModel::general(g)?;
    let epsilon = (1..=3)
        .find(|eps| (g - 1 + eps) % 3 == 0)
        .expect("some residue works");
    let e = (g - 1 + epsilon) / 3;
    let beta = curve.bn_number(1, g - e)?;
    let secant_dim = secant_expected_dim(e, 1, 1, e + 1)?.expected_dim;
    let pointed_secant_dim = secant_expected_dim(e - 1, 1, 1, e + 1)?.expected_dim;
    let quot_secant_dim = secant_expected_dim(e, 1, 2, e + 1)?.expected_dim;
    let d1 = curve.gonality(1)?;
    let w2_codim = g - curve.bn_number(2, g)?;
    let checks = vec![
        Check::new("beta^2_{1,g-e} = g - 2e - 2", beta, Rel::Eq, g - 2 * e - 2),
        Check::new("beta^2_{1,g-e} > 0", beta, Rel::Gt, 0),
        Check::new("e >= 6", e, Rel::Ge, 6),
        Check::new("e <= (g + 2)/3", e, Rel::Le, Rat::frac(g + 2, 3)),
        Check::new("(g + 2)/3 < d_1", Rat::frac(g + 2, 3), Rel::Lt, d1),
        Check::new("codim W^2_g <= e", w2_codim, Rel::Le, e),
        Check::new("secant dimension = e - 2", secant_dim, Rel::Eq, e - 2),
        Check::new(
            "pointed secant dimension = e - 4",
            pointed_secant_dim,
            Rel::Eq,
            e - 4,
        ),
        Check::new(
            "Quot secant dimension = 2e - 2",
            quot_secant_dim,
            Rel::Eq,
            2 * e - 2,
        ),
        Check::new("splitting family e < 2e - 2", e, Rel::Lt, quot_secant_dim),
    ];
    let feasible = all_pass(&checks);
    Ok(NynReport {
        genus: g,
        epsilon,
        e,
        beta,
        secant_dim,
        pointed_secant_dim,
        quot_secant_dim,
        checks,
        feasible,
    })
}

fn build_nyn(g: i64) -> Result<Built, ConstructError> {
    let rep = nyn_feasibility(g)?;
    if !rep.feasible {
        return Err(ConstructError::Infeasible(
            rep.checks
                .iter()
                .filter(|c| !c.pass)
                .map(Check::reason)
                .collect(),
        ));
    }
    let curve = CurveModel::general(g)?;
    let e = rep.e;
    let profile = SystemProfile::builder(curve, CohType::new(2, 2 * g + 1, 5, true))
        .line_max_degree(g + 1)
        .declare(CohType::new(1, g - e, 2, true))
        .declare(CohType::new(1, g + 1, 2, true))
        .exclude(Exclusion::NoNet)
        .build()?;
    Ok(Built {
        parameter: Some(Parameter {
            name: "e".into(),
            value: e,
        }),
        epsilon: Some(rep.epsilon),
        profile,
        trace: rep.checks,
        exclusion_notes: vec![
            "the elementary transformation has no line subbundle with 3 sections".into(),
        ],
        notes: Vec::new(),
    })
}

/// Builds the named example at genus `g`, choosing the smallest admissible
/// parameter, and checks the computed verdicts against the advertised pattern.
pub fn example_profile(name: ExampleName, g: i64) -> Result<ExampleReport, ConstructError> {
    if g < 4 {
        return Err(ConstructError::GenusTooSmall {
            genus: g,
            needed: "g >= 4".into(),
        });
    }
    let built = match name {
        ExampleName::NNN => build_nnn(g),
        ExampleName::YYN => build_yyn(g),
        ExampleName::YNN => build_ynn(g),
        ExampleName::NYN => build_nyn(g),
        ExampleName::NNY => build_nny(g),
        ExampleName::NYY | ExampleName::YYY => build_dsb_example(g, name),
    }?;
    let computed = built.profile.triple_verdict()?;
    let expected = name.expected();
    let got = computed.outcomes().map(|o| o == Outcome::Stable);
    let determined = computed
        .outcomes()
        .iter()
        .all(|o| *o != Outcome::Undetermined);
    if got != expected || !determined {
        return Err(ConstructError::VerdictMismatch {
            name,
            genus: g,
            computed: grid_row(&computed),
            expected: expected.map(|b| if b { "Y" } else { "N" }).join(" "),
        });
    }
    let below_stated_bound = g < name.stated_min_genus();
    let mut notes = built.notes;
    if below_stated_bound {
        notes.push(format!(
            "genus {g} is below the stated bound {}; every check still passes",
            name.stated_min_genus()
        ));
    }
    Ok(ExampleReport {
        name,
        genus: g,
        parameter: built.parameter,
        epsilon: built.epsilon,
        below_stated_bound,
        profile: built.profile,
        expected,
        computed,
        trace: built.trace,
        exclusion_notes: built.exclusion_notes,
        notes,
    })
}

/// Literal last row of the overview grid: the pattern no system realizes.
pub const FORBIDDEN_ROW_LABEL: &str = "Impossible by Proposition 3.2";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverviewRow {
    pub pattern: String,
    pub label: String,
    pub genus: Option<i64>,
    pub error: Option<String>,
}

impl OverviewRow {
    /// `"Y Y N  YYN"`-style line.
    pub fn line(&self) -> String {
        format!("{}  {}", self.pattern, self.label)
    }
}

pub fn default_genus_map() -> BTreeMap<ExampleName, i64> {
    ExampleName::ALL
        .iter()
        .map(|n| (*n, n.default_genus()))
        .collect()
}

/// Seven example rows (in the fixed order of [`ExampleName::ALL`]) plus the forbidden pattern.
/// Examples missing from `genus_map` use their default genus; failures become error rows.
pub fn overview_table(genus_map: &BTreeMap<ExampleName, i64>) -> Vec<OverviewRow> {
    let mut rows: Vec<OverviewRow> = ExampleName::ALL
        .iter()
        .map(|&name| {
            let g = genus_map
                .get(&name)
                .copied()
                .unwrap_or(name.default_genus());
            match example_profile(name, g) {
                Ok(r) => OverviewRow {
                    pattern: grid_row(&r.computed),
                    label: name.to_string(),
                    genus: Some(g),
                    error: None,
                },
                Err(e) => OverviewRow {
                    pattern: "- - -".into(),
                    label: name.to_string(),
                    genus: Some(g),
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    rows.push(OverviewRow {
        pattern: "Y N Y".into(),
        label: FORBIDDEN_ROW_LABEL.into(),
        genus: None,
        error: None,
    });
    rows
}
