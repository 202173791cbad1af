use std::io::Write;

use serde::Serialize;

use crate::constants::ConstantsReport;
use crate::verify::{ChainCheck, LemmaCheck, RadiusResult, ScanReport, SweepReport};

/// Twelve significant digits, `%.12g` style: plain decimals for moderate
/// exponents, scientific notation otherwise, trailing zeros trimmed.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn opt(x: Option<f64>) -> String {
    x.map(sig12).unwrap_or_default()
}

pub fn json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn csv_rows(
    out: &mut dyn Write,
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()
}

pub fn constants_csv(out: &mut dyn Write, report: &ConstantsReport) -> std::io::Result<()> {
    let mut rows: Vec<Vec<String>> = report
        .residuals
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                sig12(r.computed),
                sig12(r.published),
                sig12(r.residual),
                sig12(r.tolerance),
                r.ok.to_string(),
            ]
        })
        .collect();
    let derived = [("p", report.p), ("classic", report.radii.classic)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .chain(
            report
                .multi_radii
                .iter()
                .flat_map(|&(n, m, e)| [(format!("multi({n})"), m), (format!("multiE({n})"), e)]),
        );
    for (name, v) in derived {
        if !rows.iter().any(|r| r[0] == name) {
            rows.push(vec![
                name,
                sig12(v),
                String::new(),
                String::new(),
                String::new(),
                "true".into(),
            ]);
        }
    }
    csv_rows(
        out,
        &[
            "name",
            "computed",
            "published",
            "residual",
            "tolerance",
            "ok",
        ],
        rows,
    )
}

pub const SWEEP_HEADER: [&str; 13] = [
    "theorem",
    "n",
    "a",
    "r",
    "interpretation",
    "head",
    "tail",
    "area",
    "area_sq",
    "extra",
    "total",
    "margin",
    "certified",
];

pub fn sweep_csv(out: &mut dyn Write, report: &SweepReport) -> std::io::Result<()> {
    let rows = report.rows.iter().map(|row| {
        let b = &row.breakdown;
        vec![
            row.theorem.to_string(),
            row.n.to_string(),
            sig12(row.a),
            sig12(row.r),
            b.interpretation.to_string(),
            sig12(b.head_value),
            sig12(b.majorant_tail),
            sig12(b.area_term),
            sig12(b.area_term_squared_contribution),
            sig12(b.extra_area_contribution),
            sig12(b.total),
            sig12(b.margin),
            b.certified.to_string(),
        ]
    });
    csv_rows(out, &SWEEP_HEADER, rows)
}

pub fn radius_csv(out: &mut dyn Write, r: &RadiusResult) -> std::io::Result<()> {
    csv_rows(
        out,
        &[
            "family",
            "radius",
            "lo",
            "hi",
            "iterations",
            "binding",
            "certified",
        ],
        [vec![
            r.family.clone(),
            sig12(r.radius),
            sig12(r.bracket.0),
            sig12(r.bracket.1),
            r.iterations.to_string(),
            r.binding.to_string(),
            r.certified.to_string(),
        ]],
    )
}

pub fn scan_csv(out: &mut dyn Write, theorem: &str, reports: &[ScanReport]) -> std::io::Result<()> {
    let rows = reports.iter().map(|s| {
        vec![
            theorem.to_string(),
            s.n.to_string(),
            sig12(s.bold_r),
            sig12(s.epsilon),
            s.interpretation.to_string(),
            s.perturbation_target.id().to_string(),
            sig12(s.max_total),
            sig12(s.argmax_a),
            sig12(s.perturbed_max),
            sig12(s.perturbed_at_argmax),
            opt(s.literal_margin_at_argmax),
            s.within_bound.to_string(),
        ]
    });
    csv_rows(
        out,
        &[
            "theorem",
            "n",
            "r",
            "epsilon",
            "interpretation",
            "perturbed_weight",
            "max_total",
            "argmax_a",
            "perturbed_max",
            "perturbed_at_argmax",
            "literal_margin_at_argmax",
            "within_bound",
        ],
        rows,
    )
}

/// One output row of the `lemma` command.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum LemmaRow {
    Bound {
        part: &'static str,
        check: LemmaCheck,
    },
    Chain {
        part: &'static str,
        check: ChainCheck,
    },
}

impl LemmaRow {
    pub fn ok(&self) -> bool {
        match self {
            LemmaRow::Bound { check, .. } => check.ok,
            LemmaRow::Chain { check, .. } => check.ok,
        }
    }
}

pub fn lemma_csv(out: &mut dyn Write, rows: &[LemmaRow]) -> std::io::Result<()> {
    let rows = rows.iter().map(|row| match row {
        LemmaRow::Bound { part, check } => vec![
            part.to_string(),
            check.family.clone(),
            sig12(check.bold_r),
            check.truncation_degree.to_string(),
            sig12(check.lhs),
            sig12(check.lhs_tail),
            sig12(check.rhs),
            check.ok.to_string(),
        ],
        LemmaRow::Chain { part, check } => vec![
            part.to_string(),
            check.family.clone(),
            sig12(check.bold_r),
            String::new(),
            sig12(check.max_modulus),
            "0".into(),
            sig12(if check.first_link_applies {
                check.schwarz_pick
            } else {
                check.schwarz_pick_dilated
            }),
            check.ok.to_string(),
        ],
    });
    csv_rows(
        out,
        &["part", "family", "r", "k", "lhs", "lhs_tail", "rhs", "ok"],
        rows,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(1.0), "1");
        assert_eq!(sig12(0.5672839368174051), "0.567283936817");
        assert_eq!(sig12(18.609549031341057), "18.6095490313");
        assert_eq!(sig12(-2.5e-13), "-2.5e-13");
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(123456789012345.0), "1.23456789012e14");
        assert_eq!(sig12(0.99999999999999), "1");
    }
}
