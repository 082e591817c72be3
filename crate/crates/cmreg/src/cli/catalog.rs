//! Built-in variety catalog: classical anchor examples with known-sharp
//! regularity values, plus parametric constructors reachable by name
//! (`rnc-<r>` for rational normal curves, `scroll-<n>-<r>` for rational
//! normal scrolls of minimal degree).

use crate::projection::VarietySpec;

use super::CliError;

/// A named catalog variety. `expected` carries a known-sharp regularity
/// value together with a note on why it is known.
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub expected: Option<(i64, &'static str)>,
    make: fn() -> VarietySpec,
}

impl CatalogEntry {
    pub fn spec(&self) -> VarietySpec {
        (self.make)()
    }
}

macro_rules! entry {
    ($name:literal, $summary:literal, $expected:expr, $make:expr) => {
        CatalogEntry { name: $name, summary: $summary, expected: $expected, make: $make }
    };
}

static ENTRIES: &[CatalogEntry] = &[
    entry!(
        "twisted-cubic",
        "rational normal curve of degree 3 in P^3",
        Some((2, "sharp: minimal-degree curve, no trisecant lines")),
        || VarietySpec::curve("twisted-cubic", 3, 0, 3).unwrap()
    ),
    entry!(
        "elliptic-quartic",
        "genus-1 curve of degree 4 in P^3 (intersection of two quadrics)",
        Some((3, "sharp: complete intersection of two quadrics")),
        || VarietySpec::curve("elliptic-quartic", 4, 1, 3).unwrap()
    ),
    entry!(
        "elliptic-quintic",
        "genus-1 curve of degree 5 in P^4",
        Some((3, "sharp: elliptic normal curve")),
        || VarietySpec::curve("elliptic-quintic", 5, 1, 4).unwrap()
    ),
    entry!(
        "rnc-4",
        "rational normal curve of degree 4 in P^4",
        Some((2, "sharp: minimal-degree curve")),
        || VarietySpec::curve("rnc-4", 4, 0, 4).unwrap()
    ),
    entry!(
        "rnc-6",
        "rational normal curve of degree 6 in P^6",
        Some((2, "sharp: minimal-degree curve")),
        || VarietySpec::curve("rnc-6", 6, 0, 6).unwrap()
    ),
    entry!(
        "veronese",
        "Veronese surface (P^2 in P^5 by conics), degree 4",
        Some((2, "sharp: ideal generated by quadrics, 2-regular")),
        || VarietySpec::surface("veronese", 4, 0, 1, 5).unwrap()
    ),
    entry!(
        "cubic-surface",
        "smooth cubic surface in P^3",
        Some((3, "sharp: hypersurface of degree 3")),
        || VarietySpec::surface("cubic-surface", 3, 1, 1, 3).unwrap()
    ),
    entry!(
        "del-pezzo-quartic",
        "degree-4 del Pezzo surface in P^4 (intersection of two quadrics)",
        Some((3, "sharp: complete intersection of two quadrics")),
        || VarietySpec::surface("del-pezzo-quartic", 4, 1, 1, 4).unwrap()
    ),
    entry!(
        "scroll-2-5",
        "rational normal surface scroll of degree 4 in P^5",
        Some((2, "sharp: variety of minimal degree")),
        || VarietySpec::scroll("scroll-2-5", 2, 4, 0, 5).unwrap()
    ),
    entry!(
        "scroll-3-7",
        "rational normal threefold scroll of degree 5 in P^7",
        Some((2, "sharp: variety of minimal degree")),
        || VarietySpec::scroll("scroll-3-7", 3, 5, 0, 7).unwrap()
    ),
    entry!(
        "scroll-4-9",
        "rational normal fourfold scroll of degree 6 in P^9",
        Some((2, "sharp: variety of minimal degree")),
        || VarietySpec::scroll("scroll-4-9", 4, 6, 0, 9).unwrap()
    ),
];

/// The fixed catalog, in stable listing order.
pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

/// Resolves a name to a spec: a fixed entry, or a parametric pattern
/// `rnc-<r>` / `scroll-<n>-<r>`. Returns `Ok(None)` when the name matches
/// no catalog form at all (the caller may then treat it as a file path);
/// malformed parameters inside a recognized pattern are reported as errors.
pub fn lookup(name: &str) -> Result<Option<VarietySpec>, CliError> {
    if let Some(entry) = ENTRIES.iter().find(|e| e.name == name) {
        return Ok(Some(entry.spec()));
    }
    if let Some(rest) = name.strip_prefix("rnc-") {
        let r: usize = rest
            .parse()
            .map_err(|_| CliError::Validation(format!("bad rational-normal-curve name `{name}`")))?;
        if r < 2 {
            return Err(CliError::Validation(format!(
                "rational normal curve needs r >= 2, got `{name}`"
            )));
        }
        let spec = VarietySpec::curve(name.to_string(), r as i64, 0, r)
            .map_err(|err| CliError::Validation(err.to_string()))?;
        return Ok(Some(spec));
    }
    if let Some(rest) = name.strip_prefix("scroll-") {
        let parts: Vec<&str> = rest.split('-').collect();
        if parts.len() != 2 {
            return Ok(None);
        }
        let parse = |s: &str| -> Result<usize, CliError> {
            s.parse()
                .map_err(|_| CliError::Validation(format!("bad scroll name `{name}`")))
        };
        let n = parse(parts[0])?;
        let r = parse(parts[1])?;
        if n < 1 || r < n + 1 {
            return Err(CliError::Validation(format!(
                "scroll needs n >= 1 and r >= n+1, got `{name}`"
            )));
        }
        let d = (r - n + 1) as i64;
        let spec = VarietySpec::scroll(name.to_string(), n, d, 0, r)
            .map_err(|err| CliError::Validation(err.to_string()))?;
        return Ok(Some(spec));
    }
    Ok(None)
}
