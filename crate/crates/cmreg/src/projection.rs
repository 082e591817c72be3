//! Variety specifications and the numerics of isomorphic linear projection.
//!
//! A smooth nondegenerate `X ⊂ P^r` can be projected from a general center
//! into `P^m` (with `n+1 <= m <= r`); pushing the twisted ideal sheaf
//! `I_X(2)` forward along the projection yields a sheaf on `P^m` whose
//! Euler-characteristic profile is computable from the Hilbert polynomial of
//! `X` alone, because the pushforward of `O_{P^r}(2)` decomposes as
//!
//! ```text
//! O(2) ⊕ (r-m)·O(1) ⊕ C(r+1-m, 2)·O
//! ```
//!
//! (the symmetric square of `O(1) ⊕ (r-m)·O`). The profile is what the rank
//!-table machinery consumes, with cohomology degree `k = n+1`. For `m = r`
//! the projection is the identity and the profile degenerates to
//! `s ↦ χ(I_X(2+s))` on `P^r`.
//!
//! The bound extracted from the profile is only as good as the hypothesis
//! that the pushforward has one-row cohomology, which holds when the
//! projection's fibers are short (length at most 3). That cannot be checked
//! numerically; what this module does provide is the bookkeeping of *when it
//! is known*: the guaranteed range `m >= m₀`, the extended range where
//! fiber-length results apply, the identity case, and an explicit
//! user-asserted override. Statuses are attached to every reported number
//! and never silently filter anything.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::beilinson::{BeilinsonError, ChiProfile};
use crate::hilbert::{binomial, HilbertError, HilbertPoly, RationalPoly};

/// Errors from variety validation and projection setup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionError {
    #[error("variety dimension must be >= 1, got {n}")]
    DimensionTooSmall { n: usize },
    #[error("ambient dimension r = {r} must be at least n + 1 = {}", n + 1)]
    AmbientTooSmall { n: usize, r: usize },
    #[error("Hilbert polynomial has dimension {got}, spec says {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("family parameters regenerate coefficients {expected:?}, spec carries {got:?}")]
    FamilyMismatch { expected: Vec<BigInt>, got: Vec<BigInt> },
    #[error("projection target m = {m} must exceed the variety dimension n = {n}")]
    MTooSmall { m: usize, n: usize },
    #[error("projection target m = {m} exceeds the ambient dimension r = {r}")]
    MTooLarge { m: usize, r: usize },
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Beilinson(#[from] BeilinsonError),
}

/// Family tag carrying the classical parameters that determine the Hilbert
/// polynomial: degree `d`, (sectional) genus, and for surfaces `χ(O)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Curve of degree `d` and genus `g`: coefficients `[1-g, d]`.
    Curve { d: i64, g: i64 },
    /// Surface of degree `d`, sectional genus `pi`, Euler characteristic
    /// `chi = χ(O)`: coefficients `[chi, 1-pi, d]`.
    Surface { d: i64, pi: i64, chi: i64 },
    /// `n`-dimensional scroll of degree `d` over a genus-`g` curve:
    /// coefficients `[1-g, …, 1-g, d]` (the dimension lives on the `VarietySpec`).
    Scroll { d: i64, g: i64 },
}

impl Family {
    /// The binomial-basis coefficient dictionary for this family in
    /// dimension `n`.
    pub fn coefficients(&self, n: usize) -> Vec<BigInt> {
        match *self {
            Family::Curve { d, g } => vec![BigInt::from(1 - g), BigInt::from(d)],
            Family::Surface { d, pi, chi } => {
                vec![BigInt::from(chi), BigInt::from(1 - pi), BigInt::from(d)]
            }
            Family::Scroll { d, g } => {
                let mut c = vec![BigInt::from(1 - g); n];
                c.push(BigInt::from(d));
                c
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Curve { d, g } => write!(f, "curve(d={d}, g={g})"),
            Family::Surface { d, pi, chi } => {
                write!(f, "surface(d={d}, pi={pi}, chi={chi})")
            }
            Family::Scroll { d, g } => write!(f, "scroll(d={d}, g={g})"),
        }
    }
}

/// An `n`-dimensional nondegenerate subvariety of `P^r`, known through its
/// Hilbert polynomial and an optional family tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarietySpec {
    name: String,
    n: usize,
    r: usize,
    hilbert: HilbertPoly,
    family: Option<Family>,
}

impl VarietySpec {
    /// Validates `n >= 1`, `r >= n+1`, dimension agreement, and — when a
    /// family tag is present — that its parameters regenerate the
    /// coefficient vector exactly.
    pub fn new(
        name: impl Into<String>,
        n: usize,
        r: usize,
        hilbert: HilbertPoly,
        family: Option<Family>,
    ) -> Result<Self, ProjectionError> {
        if n < 1 {
            return Err(ProjectionError::DimensionTooSmall { n });
        }
        if r < n + 1 {
            return Err(ProjectionError::AmbientTooSmall { n, r });
        }
        if hilbert.dim() != n {
            return Err(ProjectionError::DimensionMismatch { expected: n, got: hilbert.dim() });
        }
        if let Some(fam) = &family {
            let expected = fam.coefficients(n);
            if expected != hilbert.coeffs() {
                return Err(ProjectionError::FamilyMismatch {
                    expected,
                    got: hilbert.coeffs().to_vec(),
                });
            }
        }
        Ok(VarietySpec { name: name.into(), n, r, hilbert, family })
    }

    pub fn curve(name: impl Into<String>, d: i64, g: i64, r: usize) -> Result<Self, ProjectionError> {
        let fam = Family::Curve { d, g };
        let hilbert = HilbertPoly::new(fam.coefficients(1))?;
        Self::new(name, 1, r, hilbert, Some(fam))
    }

    pub fn surface(
        name: impl Into<String>,
        d: i64,
        pi: i64,
        chi: i64,
        r: usize,
    ) -> Result<Self, ProjectionError> {
        let fam = Family::Surface { d, pi, chi };
        let hilbert = HilbertPoly::new(fam.coefficients(2))?;
        Self::new(name, 2, r, hilbert, Some(fam))
    }

    pub fn scroll(
        name: impl Into<String>,
        n: usize,
        d: i64,
        g: i64,
        r: usize,
    ) -> Result<Self, ProjectionError> {
        let fam = Family::Scroll { d, g };
        let hilbert = HilbertPoly::new(fam.coefficients(n))?;
        Self::new(name, n, r, hilbert, Some(fam))
    }

    /// A spec with no family tag, from raw binomial-basis coefficients.
    pub fn generic(
        name: impl Into<String>,
        r: usize,
        hilbert: HilbertPoly,
    ) -> Result<Self, ProjectionError> {
        let n = hilbert.dim();
        Self::new(name, n, r, hilbert, None)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Variety dimension `n`.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Ambient projective dimension `r`.
    pub fn ambient(&self) -> usize {
        self.r
    }

    pub fn hilbert(&self) -> &HilbertPoly {
        &self.hilbert
    }

    pub fn family(&self) -> Option<&Family> {
        self.family.as_ref()
    }

    /// Degree of the variety (leading binomial-basis coefficient).
    pub fn degree(&self) -> &BigInt {
        self.hilbert.degree()
    }

    pub fn codim(&self) -> usize {
        self.r - self.n
    }

    /// `χ(O_X(z))`.
    pub fn chi(&self, z: i64) -> BigInt {
        self.hilbert.eval(z)
    }

    /// The profile of the projected twisted ideal sheaf on `P^m` (see module
    /// docs): ambient `m`, cohomology degree `n+1`, and
    ///
    /// ```text
    /// Ψ(s) = C(s+2+m, m) + (r-m)·C(s+1+m, m) + C(r+1-m, 2)·C(s+m, m) - χ_X(s+2).
    /// ```
    pub fn pushforward_profile(&self, m: usize) -> Result<ChiProfile, ProjectionError> {
        if m <= self.n {
            return Err(ProjectionError::MTooSmall { m, n: self.n });
        }
        if m > self.r {
            return Err(ProjectionError::MTooLarge { m, r: self.r });
        }
        let mi = m as i64;
        let ri = self.r as i64;
        let rank_o = binomial(ri + 1 - mi, 2);
        let mut chi = RationalPoly::binomial_in_z(2 + mi, m as u32);
        chi = &chi
            + &RationalPoly::binomial_in_z(1 + mi, m as u32)
                .scale(&BigRational::from_integer(BigInt::from(ri - mi)));
        chi = &chi
            + &RationalPoly::binomial_in_z(mi, m as u32)
                .scale(&BigRational::from_integer(rank_o));
        // Subtract χ_X(s+2): each basis term C(s+j-1, j) shifts to C(s+j+1, j).
        for (j, c) in self.hilbert.coeffs().iter().enumerate() {
            let shifted = RationalPoly::binomial_in_z(j as i64 + 1, j as u32)
                .scale(&BigRational::from_integer(c.clone()));
            chi = &chi - &shifted;
        }
        Ok(ChiProfile::new(m, self.n + 1, chi)?)
    }

    /// Checks the cross-table relation tying the projected profile to the
    /// Hilbert polynomial: `Ψ(j-2) + χ_X(j)` must equal `r+1` at `j = 1`,
    /// `1` at `j = 0`, and `0` for `max(2-m, 1-n) <= j <= -1`. These are the
    /// rows the bound derivation consumes, so the report doubles as a
    /// route-independence audit.
    pub fn table_relation_check(&self, m: usize) -> Result<TableRelationReport, ProjectionError> {
        let profile = self.pushforward_profile(m)?;
        let low = (2 - m as i64).max(1 - self.n as i64);
        let mut rows = Vec::new();
        for j in (low..=1).rev() {
            let expected = match j {
                1 => BigInt::from(self.r as i64 + 1),
                0 => BigInt::one(),
                _ => BigInt::zero(),
            };
            let lhs = profile.chi_at(j - 2) + self.chi(j);
            rows.push(TableRelationRow { j, lhs, expected });
        }
        Ok(TableRelationReport { m, rows })
    }
}

impl fmt::Display for VarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n={}, r={}, coeffs={}", self.name, self.n, self.r, self.hilbert)?;
        if let Some(fam) = &self.family {
            write!(f, ", {fam}")?;
        }
        write!(f, ")")
    }
}

/// One row of the cross-table relation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRelationRow {
    pub j: i64,
    pub lhs: BigInt,
    pub expected: BigInt,
}

impl TableRelationRow {
    pub fn passed(&self) -> bool {
        self.lhs == self.expected
    }
}

/// Report of [`VarietySpec::table_relation_check`], one row per consumed `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRelationReport {
    pub m: usize,
    pub rows: Vec<TableRelationRow>,
}

impl TableRelationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(TableRelationRow::passed)
    }
}

/// How strongly a reported bound is backed for a given projection target,
/// from weakest to strongest. `Guaranteed` and above certify the one-row
/// cohomology hypothesis; `Assumed` records that the user asserted it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GuaranteeLevel {
    /// No known condition certifies this target dimension.
    Unsupported,
    /// The user asserted the fiber condition via an explicit override.
    Assumed,
    /// Within the guaranteed range `m₀ <= m <= r`.
    Guaranteed,
    /// Certified by the fiber-length conditions for general projections,
    /// which may reach below `m₀`.
    RanExtended,
    /// `m = r`: no projection at all.
    Identity,
}

impl GuaranteeLevel {
    /// Stable lowercase token used in machine-readable output.
    pub fn token(self) -> &'static str {
        match self {
            GuaranteeLevel::Unsupported => "unsupported",
            GuaranteeLevel::Assumed => "assumed",
            GuaranteeLevel::Guaranteed => "guaranteed",
            GuaranteeLevel::RanExtended => "ran-extended",
            GuaranteeLevel::Identity => "identity",
        }
    }

    /// Whether a bound at this level is certified (not merely assumed).
    pub fn is_certified(self) -> bool {
        self >= GuaranteeLevel::Guaranteed
    }
}

impl fmt::Display for GuaranteeLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A guarantee level together with the reason it applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionStatus {
    pub level: GuaranteeLevel,
    pub detail: String,
}

/// The smallest projection target `m₀` for which the bound is guaranteed
/// without fiber analysis: `2` for curves, otherwise `min(r, 2n-1)`.
pub fn min_guaranteed_m(n: usize, r: usize) -> usize {
    if n == 1 {
        2
    } else {
        r.min(2 * n - 1)
    }
}

/// Whether the fiber-length conditions for a general projection to `P^m`
/// hold: `3m > 4n` together with `m = r-1`, `m = r-2`, or
/// `m > 2n - r + max(n/3 - 2, 0)`. All comparisons are exact (scaled by 3).
fn ran_conditions(n: usize, r: usize, m: usize) -> Option<&'static str> {
    let (n, r, m) = (n as i64, r as i64, m as i64);
    if 3 * m <= 4 * n {
        return None;
    }
    if m == r - 1 {
        Some("m = r-1")
    } else if m == r - 2 {
        Some("m = r-2")
    } else if 3 * m > 6 * n - 3 * r + (n - 6).max(0) {
        Some("m > 2n - r + max(n/3 - 2, 0)")
    } else {
        None
    }
}

/// Classifies a projection target `m`, reporting the strongest applicable
/// guarantee. With `assume_fibers`, any otherwise-unsupported finite target
/// (`n < m <= r`) is upgraded to [`GuaranteeLevel::Assumed`].
pub fn projection_status(n: usize, r: usize, m: usize, assume_fibers: bool) -> ProjectionStatus {
    if m > r {
        return ProjectionStatus {
            level: GuaranteeLevel::Unsupported,
            detail: format!("m = {m} exceeds the ambient dimension r = {r}"),
        };
    }
    if m <= n {
        return ProjectionStatus {
            level: GuaranteeLevel::Unsupported,
            detail: format!("m = {m} <= n = {n}: projection cannot be finite"),
        };
    }
    if m == r {
        return ProjectionStatus {
            level: GuaranteeLevel::Identity,
            detail: "m = r: no projection".to_string(),
        };
    }
    let m0 = min_guaranteed_m(n, r);
    let in_range = m >= m0;
    if let Some(clause) = ran_conditions(n, r, m) {
        let mut detail = format!("general fibers have length <= 3: 3m > 4n and {clause}");
        if in_range {
            detail.push_str(&format!("; also within guaranteed range [m0 = {m0}, r]"));
        }
        return ProjectionStatus { level: GuaranteeLevel::RanExtended, detail };
    }
    if in_range {
        return ProjectionStatus {
            level: GuaranteeLevel::Guaranteed,
            detail: format!("within guaranteed range [m0 = {m0}, r]"),
        };
    }
    if assume_fibers {
        return ProjectionStatus {
            level: GuaranteeLevel::Assumed,
            detail: "fiber condition asserted by user (--assume-fibers)".to_string(),
        };
    }
    ProjectionStatus {
        level: GuaranteeLevel::Unsupported,
        detail: format!("below guaranteed range (m0 = {m0}) and fiber conditions not established"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn elliptic_quartic() -> VarietySpec {
        VarietySpec::curve("elliptic-quartic", 4, 1, 3).unwrap()
    }

    fn veronese() -> VarietySpec {
        VarietySpec::surface("veronese", 4, 0, 1, 5).unwrap()
    }

    #[test]
    fn family_dictionaries() {
        let eq = elliptic_quartic();
        assert_eq!(eq.hilbert().coeffs(), &[BigInt::zero(), BigInt::from(4)]);
        assert_eq!(eq.dim(), 1);
        assert_eq!(eq.codim(), 2);

        let v = veronese();
        assert_eq!(
            v.hilbert().coeffs(),
            &[BigInt::one(), BigInt::one(), BigInt::from(4)]
        );

        let scroll = VarietySpec::scroll("s", 3, 6, 2, 7).unwrap();
        assert_eq!(
            scroll.hilbert().coeffs(),
            &[BigInt::from(-1), BigInt::from(-1), BigInt::from(-1), BigInt::from(6)]
        );
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            VarietySpec::curve("c", 3, 0, 1).unwrap_err(),
            ProjectionError::AmbientTooSmall { .. }
        ));
        // d = 0 is a non-positive leading coefficient.
        assert!(matches!(
            VarietySpec::curve("c", 0, 0, 3).unwrap_err(),
            ProjectionError::Hilbert(HilbertError::DegreeNonPositive { .. })
        ));
        // Family tag must regenerate the supplied coefficients.
        let hp = HilbertPoly::from_integers(&[1, 3]).unwrap();
        assert!(matches!(
            VarietySpec::new("c", 1, 3, hp, Some(Family::Curve { d: 3, g: 1 })).unwrap_err(),
            ProjectionError::FamilyMismatch { .. }
        ));
    }

    #[test]
    fn pushforward_profile_fixtures() {
        let eq = elliptic_quartic();
        let p = eq.pushforward_profile(2).unwrap();
        assert_eq!(p.ambient(), 2);
        assert_eq!(p.k(), 2);
        assert_eq!(p.chi_at(-2), BigInt::one());
        assert_eq!(p.chi_at(-1), BigInt::zero());
        assert_eq!(p.chi_at(0), BigInt::from(2));

        // Identity projection: Ψ(s) = C(s+5, 3) - 4(s+2); Ψ(0) = 10 - 8 = 2,
        // the number of quadrics through the curve.
        let id = eq.pushforward_profile(3).unwrap();
        assert_eq!(id.chi_at(0), BigInt::from(2));

        let tc = VarietySpec::curve("twisted-cubic", 3, 0, 3).unwrap();
        let p = tc.pushforward_profile(2).unwrap();
        assert_eq!(p.chi_at(-2), BigInt::zero());
        assert_eq!(p.chi_at(-1), BigInt::zero());
        assert_eq!(p.chi_at(0), BigInt::from(3));
    }

    #[test]
    fn pushforward_m_bounds() {
        let eq = elliptic_quartic();
        assert!(matches!(
            eq.pushforward_profile(1).unwrap_err(),
            ProjectionError::MTooSmall { m: 1, n: 1 }
        ));
        assert!(matches!(
            eq.pushforward_profile(4).unwrap_err(),
            ProjectionError::MTooLarge { m: 4, r: 3 }
        ));
    }

    #[test]
    fn identity_projection_decomposition_collapses() {
        // At m = r the three-summand decomposition must reproduce
        // χ(O_{P^r}(s+2)) on the nose.
        for spec in [elliptic_quartic(), veronese()] {
            let r = spec.ambient();
            let p = spec.pushforward_profile(r).unwrap();
            for s in -(r as i64) - 2..=5 {
                assert_eq!(
                    p.chi_at(s) + spec.chi(s + 2),
                    binomial(s + 2 + r as i64, r as i64),
                    "spec {} s {s}",
                    spec.name()
                );
            }
        }
    }

    #[test]
    fn summand_ranks_total_symmetric_square() {
        // 1 + (r-m) + C(r+1-m, 2) = C(r-m+2, 2), the rank of the symmetric
        // square of O(1) ⊕ (r-m)·O.
        for r in 2i64..=12 {
            for m in 1..=r {
                let total = 1 + (r - m) + binomial(r + 1 - m, 2);
                assert_eq!(total, binomial(r - m + 2, 2));
            }
        }
    }

    #[test]
    fn table_relations_hold_on_fixtures() {
        let eq = elliptic_quartic();
        let report = eq.table_relation_check(2).unwrap();
        assert!(report.passed());
        // j = 1 row: Ψ(-1) + χ_X(1) = 0 + 4 = r + 1.
        let j1 = report.rows.iter().find(|row| row.j == 1).unwrap();
        assert_eq!(j1.lhs, BigInt::from(4));
        // j = 0 row: 1 + 0 = 1.
        let j0 = report.rows.iter().find(|row| row.j == 0).unwrap();
        assert_eq!(j0.lhs, BigInt::one());

        // Veronese at m = 4 includes a j = -1 row: Ψ(-3) + χ_X(-1) = 0.
        let v = veronese();
        let report = v.table_relation_check(4).unwrap();
        assert!(report.passed());
        let jm1 = report.rows.iter().find(|row| row.j == -1).unwrap();
        assert_eq!(jm1.lhs, BigInt::zero());
    }

    #[test]
    fn table_relations_hold_for_every_m() {
        // The relation is algebraic in m and holds across the whole range.
        for spec in [
            elliptic_quartic(),
            veronese(),
            VarietySpec::scroll("scroll", 3, 6, 1, 8).unwrap(),
        ] {
            for m in spec.dim() + 1..=spec.ambient() {
                assert!(spec.table_relation_check(m).unwrap().passed(), "m = {m}");
            }
        }
    }

    #[test]
    fn min_guaranteed_m_cases() {
        assert_eq!(min_guaranteed_m(1, 3), 2);
        assert_eq!(min_guaranteed_m(2, 5), 3);
        assert_eq!(min_guaranteed_m(3, 4), 4);
        for n in 1..=6 {
            for r in n + 1..=14 {
                assert!(min_guaranteed_m(n, r) >= n + 1, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn status_classification() {
        // Curve in P^3, m = 2: extended conditions hold (m = r-1, 3m > 4n).
        let s = projection_status(1, 3, 2, false);
        assert_eq!(s.level, GuaranteeLevel::RanExtended);
        assert!(s.detail.contains("m = r-1"));
        assert!(s.detail.contains("guaranteed range"));

        let s = projection_status(2, 5, 3, false);
        assert_eq!(s.level, GuaranteeLevel::RanExtended);
        assert!(s.detail.contains("m = r-2"));

        // n=5, r=11, m=7: below m₀ = 9 but inside the extended range.
        let s = projection_status(5, 11, 7, false);
        assert_eq!(s.level, GuaranteeLevel::RanExtended);
        assert!(s.detail.contains("max(n/3 - 2, 0)"));
        assert!(!s.detail.contains("guaranteed range"));

        assert_eq!(projection_status(1, 3, 3, false).level, GuaranteeLevel::Identity);
        assert_eq!(projection_status(1, 3, 1, false).level, GuaranteeLevel::Unsupported);
        assert_eq!(projection_status(1, 3, 4, false).level, GuaranteeLevel::Unsupported);

        // n=5, r=11, m=6: 3m = 18 <= 4n = 20 fails, below m₀ → unsupported,
        // unless the user asserts the fiber condition.
        assert_eq!(projection_status(5, 11, 6, false).level, GuaranteeLevel::Unsupported);
        assert_eq!(projection_status(5, 11, 6, true).level, GuaranteeLevel::Assumed);
        // The override never upgrades infinite or out-of-range targets.
        assert_eq!(projection_status(5, 11, 5, true).level, GuaranteeLevel::Unsupported);
        assert_eq!(projection_status(5, 11, 12, true).level, GuaranteeLevel::Unsupported);
    }

    #[test]
    fn level_ordering() {
        use GuaranteeLevel::*;
        assert!(Unsupported < Assumed);
        assert!(Assumed < Guaranteed);
        assert!(Guaranteed < RanExtended);
        assert!(RanExtended < Identity);
        assert!(!Assumed.is_certified());
        assert!(Guaranteed.is_certified());
        assert!(RanExtended.is_certified());
        assert!(Identity.is_certified());
    }
}
