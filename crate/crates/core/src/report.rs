//! Machine-readable report schema and the text renderers: sector tables and
//! the Hodge diamond. All rationals are serialized as `numer/denom` strings.

use crate::poly::ChargeData;
use crate::rat::{format_rat, int, Rat};
use crate::state::{BigradedDims, Sector, Side, StateSpace};
use serde::Serialize;

pub type DimEntry = (String, String, u64);

#[derive(Serialize, Debug, Clone)]
pub struct InputEcho {
    pub poly: String,
    pub group: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct ChargesJson {
    pub w: Vec<u64>,
    pub d: u64,
    pub q: Vec<String>,
    pub cy: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct SectorJson {
    pub side: String,
    pub label: String,
    #[serde(rename = "N_gamma")]
    pub n_gamma: usize,
    pub age: String,
    pub kind: String,
    pub dims: Vec<DimEntry>,
}

#[derive(Serialize, Debug, Clone, Default)]
pub struct ChecksJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso: Option<CheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mirror: Option<CheckJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<CheckJson>,
}

#[derive(Serialize, Debug, Clone)]
pub struct CheckJson {
    pub pass: bool,
    pub diffs: Vec<String>,
}

#[derive(Serialize, Debug, Clone)]
pub struct JsonReport {
    pub input: InputEcho,
    pub charges: ChargesJson,
    pub sectors: Vec<SectorJson>,
    pub totals: Vec<DimEntry>,
    pub checks: ChecksJson,
}

pub fn charges_json(c: &ChargeData) -> ChargesJson {
    ChargesJson {
        w: c.weights.clone(),
        d: c.degree,
        q: c.charges.iter().map(format_rat).collect(),
        cy: c.calabi_yau,
    }
}

pub fn dim_entries(dims: &BigradedDims) -> Vec<DimEntry> {
    dims.iter()
        .map(|(p, q, m)| (format_rat(&p), format_rat(&q), m))
        .collect()
}

pub fn sector_json(sector: &Sector) -> SectorJson {
    SectorJson {
        side: match sector.side {
            Side::Lg => "LG".into(),
            Side::Cy => "CY".into(),
        },
        label: sector.label(),
        n_gamma: sector.n_fixed,
        age: format_rat(&sector.age),
        kind: sector.kind.to_string(),
        dims: dim_entries(&sector.dims),
    }
}

pub fn state_space_sectors(space: &StateSpace) -> Vec<SectorJson> {
    space.sectors.iter().map(sector_json).collect()
}

/// Plain-text sector table.
pub fn render_sector_table(space: &StateSpace) -> String {
    let mut out = String::new();
    let side = match space.side {
        Side::Lg => "singularity",
        Side::Cy => "hypersurface",
    };
    out.push_str(&format!(
        "{side} side: {} sectors, total dimension {}\n",
        space.sectors.len(),
        space.total.total()
    ));
    for sec in &space.sectors {
        let dims = if sec.dims.is_empty() {
            "-".to_string()
        } else {
            sec.dims.to_string()
        };
        out.push_str(&format!(
            "  {:<40} N={} age={} {:<14} {}\n",
            sec.label(),
            sec.n_fixed,
            sec.age,
            sec.kind.to_string(),
            dims
        ));
    }
    out
}

/// Classic diamond layout for integral tables of a dimension-`n` variety:
/// one row per total degree, `h^{p,q}` with `p` decreasing left to right.
/// Returns `None` when some bidegree is fractional or out of range.
pub fn render_diamond(dims: &BigradedDims, n: usize) -> Option<String> {
    if !dims.is_integral() {
        return None;
    }
    let n = n as i64;
    for (p, q, _) in dims.iter() {
        let (p, q) = (p.to_integer(), q.to_integer());
        if p < 0 || q < 0 || p > n as i128 || q > n as i128 {
            return None;
        }
    }
    let rows = diamond_rows(dims, n as usize);
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in &rows {
        let pad = (n as usize + 1 - row.len()) * (width + 1) / 2;
        out.push_str(&" ".repeat(pad));
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    Some(out)
}

/// The numeric content of the diamond, row by row from degree 0 to `2n`.
pub fn diamond_rows(dims: &BigradedDims, n: usize) -> Vec<Vec<u64>> {
    let n = n as i64;
    (0..=2 * n)
        .map(|total| {
            let hi = total.min(n);
            let lo = (total - n).max(0);
            (lo..=hi)
                .rev()
                .map(|p| dims.get(int(p as i128), int((total - p) as i128)))
                .collect()
        })
        .collect()
}

/// Rows a verification produced, as strings for the JSON diff list.
pub fn iso_rows(rows: &[(Rat, Rat, u64, u64)]) -> Vec<String> {
    rows.iter()
        .filter(|(_, _, a, b)| a != b)
        .map(|(p, q, a, b)| {
            format!(
                "({},{}): {} vs {}",
                format_rat(p),
                format_rat(q),
                a,
                b
            )
        })
        .collect()
}
