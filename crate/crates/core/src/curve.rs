//! Arithmetic invariants of a curve that is general in moduli.
//!
//! Everything here is a closed formula in the genus: the gonality sequence,
//! Brill-Noether numbers, Clifford indices of rank one and two, caps on the
//! number of sections of a line bundle of given degree, and expected
//! dimensions of secant loci. No floating point is used anywhere.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("curve is not general in moduli; oracle formulas do not apply")]
    NonGeneralCurve,
    #[error("invalid k = {0}: must be at least {1}")]
    InvalidK(i64, i64),
    #[error("genus {genus} is too small (need {needed})")]
    GenusTooSmall { genus: i64, needed: String },
    #[error("invalid rank {0}")]
    InvalidRank(i64),
    #[error("Clifford index is only available for rank 1 and 2 (got {0})")]
    UnsupportedRank(i64),
    #[error("need 0 <= f <= e (got e = {e}, f = {f})")]
    InvalidRange { e: i64, f: i64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A smooth projective curve, known only through its genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveModel {
    pub genus: i64,
    pub general: bool,
}

impl CurveModel {
    pub fn new(genus: i64, general: bool) -> Result<CurveModel, OracleError> {
        if genus < 2 {
            return Err(OracleError::GenusTooSmall {
                genus,
                needed: "g >= 2".into(),
            });
        }
        Ok(CurveModel { genus, general })
    }

    /// A curve of genus `genus` assumed general in moduli.
    pub fn general(genus: i64) -> Result<CurveModel, OracleError> {
        CurveModel::new(genus, true)
    }

    fn require_general(&self) -> Result<(), OracleError> {
        if self.general {
            Ok(())
        } else {
            Err(OracleError::NonGeneralCurve)
        }
    }

    /// `d_k`: the minimal degree of a line bundle with at least `k + 1`
    /// sections, which on a general curve is `ceil(k g / (k + 1) + k)`.
    pub fn gonality(&self, k: i64) -> Result<i64, OracleError> {
        self.require_general()?;
        if k < 1 {
            return Err(OracleError::InvalidK(k, 1));
        }
        Ok(Rat::frac(k * self.genus + k * (k + 1), k + 1).ceil())
    }

    /// Expected dimension `g - (k + 1)(k - d + g)` of the locus of degree `d`
    /// line bundles with at least `k + 1` sections. May be negative.
    pub fn bn_number(&self, k: i64, d: i64) -> Result<i64, OracleError> {
        if k < 0 {
            return Err(OracleError::InvalidK(k, 0));
        }
        if d < 0 {
            return Err(OracleError::InvalidArgument(format!("degree {d} < 0")));
        }
        let g = self.genus;
        Ok(g - (k + 1) * (k - d + g))
    }

    pub fn bn_nonempty(&self, k: i64, d: i64) -> Result<bool, OracleError> {
        self.require_general()?;
        Ok(self.bn_number(k, d)? >= 0)
    }

    /// Upper bound on `h^0` of any line bundle of degree `e` on a general curve.
    ///
    /// Blends the gonality sequence (with `d_0 = 0`) and the Riemann-Roch floor
    /// `e - g + 1`, so the bound holds in every degree.
    pub fn max_line_sections(&self, e: i64) -> Result<i64, OracleError> {
        self.require_general()?;
        let g = self.genus;
        if e < 0 {
            return Ok(0);
        }
        if e >= 2 * g {
            return Ok(e - g + 1);
        }
        let mut k = 0;
        while self.gonality(k + 1)? <= e {
            k += 1;
        }
        Ok((k + 1).max(e - g + 1))
    }

    /// Hypotheses under which a general member of `W^k_ell` has exactly
    /// `k + 1` sections and no base points: `ell >= d_k` and `k - ell + g >= 0`.
    pub fn bpf_general_ok(&self, k: i64, ell: i64) -> Result<bool, OracleError> {
        self.require_general()?;
        if self.genus <= 2 {
            return Err(OracleError::GenusTooSmall {
                genus: self.genus,
                needed: "g > 2".into(),
            });
        }
        if k < 1 {
            return Err(OracleError::InvalidK(k, 1));
        }
        Ok(ell >= self.gonality(k)? && k - ell + self.genus >= 0)
    }

    /// `gamma'_r` for `r` in {1, 2}; both equal `d_1 - 2` on a general curve.
    pub fn clifford_index(&self, r: i64) -> Result<i64, OracleError> {
        self.require_general()?;
        if self.genus < 4 {
            return Err(OracleError::GenusTooSmall {
                genus: self.genus,
                needed: "g >= 4".into(),
            });
        }
        match r {
            1 | 2 => Ok(self.gonality(1)? - 2),
            r if r < 1 => Err(OracleError::InvalidRank(r)),
            r => Err(OracleError::UnsupportedRank(r)),
        }
    }
}

/// Clifford value `gamma(E) = (d - 2 (h0 - r)) / r` of a bundle with the given invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliffordDatum {
    pub rank: i64,
    pub degree: i64,
    pub sections: i64,
    pub gamma: Rat,
}

pub fn clifford_gamma(r: i64, d: i64, h0: i64) -> Result<CliffordDatum, OracleError> {
    if r < 1 {
        return Err(OracleError::InvalidRank(r));
    }
    if h0 < 0 {
        return Err(OracleError::InvalidArgument(format!("h0 = {h0} < 0")));
    }
    Ok(CliffordDatum {
        rank: r,
        degree: d,
        sections: h0,
        gamma: Rat::frac(d - 2 * (h0 - r), r),
    })
}

/// Dimension count of a (generalized) secant locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SecantDatum {
    pub e: i64,
    pub f: i64,
    pub ambient_rank: i64,
    pub ambient_sections: i64,
    pub expected_dim: i64,
}

/// Expected dimension `r e - f (h0 - e + f)` of the locus of length-`e`
/// quotients failing to impose `f` conditions on an `h0`-dimensional space.
pub fn secant_expected_dim(
    e: i64,
    f: i64,
    ambient_rank: i64,
    ambient_sections: i64,
) -> Result<SecantDatum, OracleError> {
    if f < 0 || f > e {
        return Err(OracleError::InvalidRange { e, f });
    }
    if ambient_rank < 1 {
        return Err(OracleError::InvalidRank(ambient_rank));
    }
    if ambient_sections < 0 {
        return Err(OracleError::InvalidArgument(format!(
            "ambient sections {ambient_sections} < 0"
        )));
    }
    Ok(SecantDatum {
        e,
        f,
        ambient_rank,
        ambient_sections,
        expected_dim: ambient_rank * e - f * (ambient_sections - e + f),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(g: i64) -> CurveModel {
        CurveModel::general(g).unwrap()
    }

    /// Smallest degree with a nonnegative Brill-Noether number, by scanning.
    fn gonality_by_scan(g: i64, k: i64) -> i64 {
        (0..).find(|&e| c(g).bn_number(k, e).unwrap() >= 0).unwrap()
    }

    #[test]
    fn gonality_values() {
        assert_eq!(c(18).gonality(1).unwrap(), 10);
        assert_eq!(c(12).gonality(2).unwrap(), 10);
        assert_eq!(c(25).gonality(3).unwrap(), 22);
        assert_eq!(c(4).gonality(1).unwrap(), 3);
        for (g, k) in [(18, 1), (12, 2), (25, 3), (4, 1)] {
            assert_eq!(c(g).gonality(k).unwrap(), gonality_by_scan(g, k));
        }
    }

    #[test]
    fn gonality_errors() {
        let special = CurveModel::new(10, false).unwrap();
        assert_eq!(special.gonality(1), Err(OracleError::NonGeneralCurve));
        assert_eq!(c(10).gonality(0), Err(OracleError::InvalidK(0, 1)));
        assert!(CurveModel::general(1).is_err());
    }

    #[test]
    fn bn_values() {
        assert_eq!(c(18).bn_number(1, 10).unwrap(), 0);
        assert_eq!(c(18).bn_number(1, 9).unwrap(), -2);
        assert_eq!(c(18).bn_number(1, 12).unwrap(), 18 - 2 * 6 - 2);
        assert!(c(6).bn_nonempty(1, 4).unwrap());
        assert!(!c(6).bn_nonempty(1, 3).unwrap());
        assert!(c(25).bn_nonempty(2, 19).unwrap());
        assert_eq!(c(25).bn_number(2, 19).unwrap(), 1);
    }

    #[test]
    fn line_section_caps() {
        assert_eq!(c(6).max_line_sections(-1).unwrap(), 0);
        assert_eq!(c(6).max_line_sections(0).unwrap(), 1);
        assert_eq!(c(6).max_line_sections(5).unwrap(), 2);
        assert_eq!(c(18).max_line_sections(14).unwrap(), 3);
    }

    #[test]
    fn base_point_free_hypotheses() {
        assert!(c(6).bpf_general_ok(1, 5).unwrap());
        assert!(!c(6).bpf_general_ok(1, 3).unwrap());
        assert!(!c(18).bpf_general_ok(2, 40).unwrap());
        assert!(matches!(
            CurveModel::general(2).unwrap().bpf_general_ok(1, 2),
            Err(OracleError::GenusTooSmall { .. })
        ));
    }

    #[test]
    fn clifford() {
        assert_eq!(clifford_gamma(1, 8, 5).unwrap().gamma, Rat::ZERO);
        assert_eq!(clifford_gamma(2, 28, 4).unwrap().gamma, Rat::int(12));
        assert_eq!(clifford_gamma(1, 10, 2).unwrap().gamma, Rat::int(8));
        assert_eq!(clifford_gamma(0, 1, 1), Err(OracleError::InvalidRank(0)));
        assert_eq!(c(18).clifford_index(1).unwrap(), 8);
        assert_eq!(c(18).clifford_index(2).unwrap(), 8);
        assert_eq!(c(25).clifford_index(2).unwrap(), 12);
        assert_eq!(
            c(18).clifford_index(3),
            Err(OracleError::UnsupportedRank(3))
        );
        assert!(matches!(
            c(3).clifford_index(1),
            Err(OracleError::GenusTooSmall { .. })
        ));
    }

    #[test]
    fn secant_dims() {
        assert_eq!(secant_expected_dim(5, 0, 1, 9).unwrap().expected_dim, 5);
        assert_eq!(secant_expected_dim(6, 1, 1, 7).unwrap().expected_dim, 4);
        assert_eq!(secant_expected_dim(6, 1, 2, 9).unwrap().expected_dim, 8);
        assert_eq!(
            secant_expected_dim(3, 4, 1, 2),
            Err(OracleError::InvalidRange { e: 3, f: 4 })
        );
        assert!(secant_expected_dim(3, -1, 1, 2).is_err());
    }

    #[test]
    fn gonality_matches_scan_everywhere() {
        for g in 4..=60 {
            for k in 1..=5 {
                assert_eq!(
                    c(g).gonality(k).unwrap(),
                    gonality_by_scan(g, k),
                    "g={g} k={k}"
                );
            }
        }
    }

    #[test]
    fn section_caps_monotone_and_nonspecial() {
        for g in 2..=30 {
            let mut prev = 0;
            for e in -3..=(3 * g) {
                let s = c(g).max_line_sections(e).unwrap();
                assert!(s >= prev, "g={g} e={e}");
                if e >= 2 * g {
                    assert_eq!(s, e - g + 1);
                }
                prev = s;
            }
        }
    }

    #[test]
    fn clifford_index_is_gonality_minus_two() {
        for g in 4..=60 {
            assert_eq!(
                c(g).clifford_index(1).unwrap(),
                c(g).gonality(1).unwrap() - 2
            );
        }
    }

    proptest! {
        #[test]
        fn bn_gap_identity(g in 3i64..60, k in 1i64..6, ell in 0i64..80) {
            prop_assume!(k - ell + g >= 0);
            let cv = c(g);
            let gap = cv.bn_number(k, ell).unwrap() - cv.bn_number(k + 1, ell).unwrap();
            prop_assert_eq!(gap, (k + 1 - ell + g) + (k + 1));
            prop_assert!(gap >= k + 2);
        }

        #[test]
        fn gonality_nondecreasing(g in 2i64..80, k in 1i64..8) {
            prop_assert!(c(g).gonality(k).unwrap() <= c(g).gonality(k + 1).unwrap());
        }

        #[test]
        fn secant_formula(e in 0i64..30, f in 0i64..30, r in 1i64..4, h0 in 0i64..40) {
            prop_assume!(f <= e);
            let got = secant_expected_dim(e, f, r, h0).unwrap().expected_dim;
            let mut expect = 0i64;
            for _ in 0..r { expect += e; }
            for _ in 0..f { expect -= h0 - e + f; }
            prop_assert_eq!(got, expect);
        }
    }
}
