//! CSV figure data: sampled parabolas, tangent segments, region boundaries,
//! and the wall table. Sampled grids are rendered as fixed-width decimal
//! strings at a caller-chosen precision; the wall table stays exact since
//! its two columns are already closed-form rationals.
//!
//! No drawing happens here — the files feed external plotting tools.

use fanotilt_core::{rat, rat_int, Rat, Wall, WallScanReport};
use num_bigint::BigInt;
use num_traits::Signed;

use crate::json::rat_string;

/// One CSV file: header row plus data rows, LF line endings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvTable {
    pub header: &'static str,
    pub rows: Vec<String>,
}

impl CsvTable {
    pub fn render(&self) -> String {
        let mut out = String::from(self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(row);
            out.push('\n');
        }
        out
    }
}

/// Rounds `r` to `digits` decimals (half away from zero) and renders it with
/// exactly that many fractional digits, so columns align and reruns are
/// byte-identical.
pub fn decimal_string(r: &Rat, digits: u32) -> String {
    let ten = BigInt::from(10u32).pow(digits);
    let scaled = r * Rat::from_integer(ten.clone());
    let (n, d) = (scaled.numer(), scaled.denom());
    let q = (n.abs() * 2u32 + d) / (d * 2u32);
    let signed = if n.is_negative() { -q } else { q };
    let (int_part, frac_part) = ((&signed / &ten).abs(), (&signed % &ten).abs());
    let sign = if signed.is_negative() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits as usize)
    }
}

/// The sampling grid all figures share: `x` from `-3` to `3` in steps of
/// `1/10`, 61 points.
fn grid() -> impl Iterator<Item = Rat> {
    (-30i64..=30).map(|i| rat(i, 10))
}

/// Points of the parabola `y = (x^2 - m)/2`, the locus of reduced
/// discriminant `m` (`m = 0` is the cone boundary itself).
pub fn parabola_table(m: &Rat, digits: u32) -> CsvTable {
    let rows = grid()
        .map(|x| {
            let y = (&x * &x - m) / rat_int(2);
            format!("{},{}", decimal_string(&x, digits), decimal_string(&y, digits))
        })
        .collect();
    CsvTable { header: "x,y", rows }
}

/// Tangent-line segments `y = kx - k^2/2` for integer `k` in
/// `[k_lo, k_hi]`, each sampled on `[k - 1, k + 1]` around its touch point.
pub fn tangents_table(k_lo: i64, k_hi: i64, digits: u32) -> CsvTable {
    let mut rows = Vec::new();
    for k in k_lo..=k_hi {
        let kr = rat_int(k);
        for j in -10i64..=10 {
            let x = &kr + rat(j, 10);
            let y = &kr * &x - &kr * &kr / rat_int(2);
            rows.push(format!(
                "{k},{},{}",
                decimal_string(&x, digits),
                decimal_string(&y, digits)
            ));
        }
    }
    CsvTable { header: "k,x,y", rows }
}

/// The boundary of the region `R_m`: at each grid `x` the larger of the
/// parabola `(x^2 - m)/2` and the best integer tangent, producing the broken
/// curve of tangent segments bridged by parabola arcs.
pub fn region_boundary_table(m: &Rat, digits: u32) -> CsvTable {
    let rows = grid()
        .map(|x| {
            let mut y = (&x * &x - m) / rat_int(2);
            for k in [x.floor(), x.ceil()] {
                let t = &k * &x - &k * &k / rat_int(2);
                if t > y {
                    y = t;
                }
            }
            format!("{},{}", decimal_string(&x, digits), decimal_string(&y, digits))
        })
        .collect();
    CsvTable { header: "x,y", rows }
}

/// One exact row per wall: locus kind, its defining rationals, and how many
/// candidate characters produced it. Vertical walls put their `beta` in the
/// `center` column and leave `radius2` empty.
pub fn walls_table(report: &WallScanReport) -> CsvTable {
    let rows = report
        .walls
        .iter()
        .map(|g| match &g.wall {
            Wall::Semicircle { center, radius2 } => format!(
                "semicircle,{},{},{}",
                rat_string(center),
                rat_string(radius2),
                g.candidates.len()
            ),
            Wall::Vertical { at } => {
                format!("vertical,{},,{}", rat_string(at), g.candidates.len())
            }
        })
        .collect();
    CsvTable { header: "kind,center,radius2,candidates", rows }
}
