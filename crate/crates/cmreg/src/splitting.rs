//! Splitting types of the kernel bundle on lines, and the secant-length cap
//! they force.
//!
//! For the unprojected case (`F = I_X(2)` on `P^r`), the kernel bundle `E`
//! restricts to every line `L` as a direct sum `⊕ O_L(s_i)` with
//! `(r-n+1) - d <= s_i <= 0`. If `L` meets `X` in a length-`l` subscheme
//! (`l >= 2`, `L ⊄ X`), the restriction is forced completely:
//!
//! ```text
//! E_L ≅ O_L(2-l) ⊕ n₁·O_L(-1) ⊕ n₂·O_L,   n₁ = 2-l-c₁(E),  n₂ = rk(E)-1-n₁.
//! ```
//!
//! Negative `n₁` or `n₂` proves that no `l`-secant line exists, which caps
//! the secant length at `min(2-low, 2-c₁(E))` — at the minimal entry bound
//! this is exactly the degree-minus-codimension-plus-one value, matching the
//! classical picture that a long secant line obstructs low regularity.
//!
//! These constraints are stated for the bundle on the original `P^r`;
//! nothing here is applied to projected bundles on smaller spaces.

use std::fmt;

use thiserror::Error;

/// Errors from secant-splitting requests.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplittingError {
    /// A secant line meets the variety in at least two points.
    #[error("secant length l = {l} must be at least 2")]
    SecantTooShort { l: i64 },
    /// The forced splitting would need a negative number of summands, so no
    /// such secant line can exist.
    #[error("no length-{l} secant is compatible: would need n1 = {n1}, n2 = {n2}")]
    Incompatible { l: i64, n1: i64, n2: i64 },
}

/// The multiset of twists of a bundle restricted to a line, kept in
/// nonincreasing order. All entries are nonpositive for the bundles
/// considered here.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SplittingType {
    components: Vec<i64>,
}

impl SplittingType {
    /// Builds a splitting type, sorting the components nonincreasingly.
    ///
    /// # Panics
    /// If any component is positive; the bundles profiled here are
    /// subsheaves of trivial bundles, so twists never exceed 0.
    pub fn new(mut components: Vec<i64>) -> Self {
        assert!(
            components.iter().all(|&s| s <= 0),
            "splitting components must be nonpositive"
        );
        components.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType { components }
    }

    /// Components in nonincreasing order.
    pub fn components(&self) -> &[i64] {
        &self.components
    }

    /// The rank of the restricted bundle.
    pub fn rank(&self) -> usize {
        self.components.len()
    }

    /// The first Chern class: the sum of the twists.
    pub fn c1(&self) -> i64 {
        self.components.iter().sum()
    }
}

impl fmt::Display for SplittingType {
    /// Renders with multiplicities, e.g. `3·O ⊕ 2·O(-1) ⊕ O(-2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let mut pieces: Vec<String> = Vec::new();
        let mut idx = 0;
        while idx < self.components.len() {
            let twist = self.components[idx];
            let mut count = 0;
            while idx < self.components.len() && self.components[idx] == twist {
                count += 1;
                idx += 1;
            }
            let line_bundle = if twist == 0 {
                "O".to_string()
            } else {
                format!("O({twist})")
            };
            if count == 1 {
                pieces.push(line_bundle);
            } else {
                pieces.push(format!("{count}·{line_bundle}"));
            }
        }
        write!(f, "{}", pieces.join(" ⊕ "))
    }
}

/// The allowed twist range `((r-n+1)-d, 0)` for splitting components of the
/// kernel bundle of a degree-`d`, dimension-`n` variety in `P^r`.
pub fn component_range(d: i64, r: i64, n: i64) -> (i64, i64) {
    ((r - n + 1) - d, 0)
}

/// The forced splitting on a length-`l` secant line (`l >= 2`):
/// `O(2-l) ⊕ n₁·O(-1) ⊕ n₂·O`. Fails with
/// [`SplittingError::Incompatible`] when either multiplicity would be
/// negative, proving no such secant exists.
pub fn secant_splitting(rk_e: usize, c1_e: i64, l: i64) -> Result<SplittingType, SplittingError> {
    if l < 2 {
        return Err(SplittingError::SecantTooShort { l });
    }
    let n1 = 2 - l - c1_e;
    let n2 = rk_e as i64 - 1 - n1;
    if n1 < 0 || n2 < 0 {
        return Err(SplittingError::Incompatible { l, n1, n2 });
    }
    let mut components = vec![0i64; n2 as usize];
    components.extend(std::iter::repeat_n(-1, n1 as usize));
    components.push(2 - l);
    Ok(SplittingType::new(components))
}

/// All nonincreasing sequences of length `rk_e` with entries in `[low, 0]`
/// summing to `c1_e`, in descending lexicographic order. Empty when the sum
/// is infeasible.
pub fn enumerate_splittings(rk_e: usize, c1_e: i64, low: i64) -> Vec<SplittingType> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(rk_e);
    extend(rk_e, c1_e, low, 0, &mut prefix, &mut out);
    out
}

fn extend(
    remaining: usize,
    sum: i64,
    low: i64,
    max_entry: i64,
    prefix: &mut Vec<i64>,
    out: &mut Vec<SplittingType>,
) {
    if remaining == 0 {
        if sum == 0 {
            out.push(SplittingType { components: prefix.clone() });
        }
        return;
    }
    let rest = remaining as i64 - 1;
    for entry in (low..=max_entry.min(0)).rev() {
        // The remaining entries are at most `entry` and at least `low`.
        let left = sum - entry;
        if left > entry * rest || left < low * rest {
            continue;
        }
        prefix.push(entry);
        extend(remaining - 1, left, low, entry, prefix, out);
        prefix.pop();
    }
}

/// The largest secant length not excluded by the component range and the
/// forced splitting: `min(2-low, 2-c₁(E))`. At `low = (r-n+1)-d` the first
/// argument is `d+1-(r-n)`, the degree-minus-codimension-plus-one value.
pub fn max_secant_length(c1_e: i64, low: i64) -> i64 {
    (2 - low).min(2 - c1_e)
}
