//! The JSON report document emitted by every command, and its table
//! rendering.

use serde::{Deserialize, Serialize};

use crate::value::{ClassFunctionJson, CyclotomicJson, SeriesJson};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumeratorJson {
    pub denom_exp: usize,
    pub coeffs: Vec<ClassFunctionJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlagEntryJson {
    pub colors: Vec<usize>,
    pub f: ClassFunctionJson,
    pub h: ClassFunctionJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_effective: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EffectivenessJson {
    pub name: String,
    pub multiplicities: Vec<String>,
    pub effective: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationEntryJson {
    pub class: String,
    pub degree: usize,
    pub lattice_count: String,
    pub monomial_count: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub ok: bool,
    pub mismatches: Vec<VerificationEntryJson>,
}

/// One report per job; sections are present when the command computes them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// Cycle-type labels of the conjugacy class representatives.
    pub classes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerator: Option<NumeratorJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flag: Vec<FlagEntryJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub effectiveness: Vec<EffectivenessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
}

impl Report {
    pub fn new(command: &str, classes: Vec<String>) -> Self {
        Report {
            command: command.to_string(),
            classes,
            series: None,
            numerator: None,
            flag: Vec::new(),
            effectiveness: Vec::new(),
            verification: None,
            notes: Vec::new(),
            verdict: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

fn cell(value: &CyclotomicJson) -> String {
    match value.to_core() {
        Ok(v) => format!("{v}"),
        Err(_) => "?".to_string(),
    }
}

/// One row per conjugacy class, one column per degree.
fn render_series_table(out: &mut String, classes: &[String], coeffs: &[ClassFunctionJson]) {
    let mut header = String::from("class");
    for degree in 0..coeffs.len() {
        header.push_str(&format!("\tt^{degree}"));
    }
    out.push_str(&header);
    out.push('\n');
    for (c, label) in classes.iter().enumerate() {
        let mut row = label.clone();
        for coeff in coeffs {
            row.push('\t');
            row.push_str(&cell(&coeff.values[c]));
        }
        out.push_str(&row);
        out.push('\n');
    }
}

/// Deterministic human-readable rendering of a report.
pub fn render_table(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("command: {}\n", report.command));
    if let Some(series) = &report.series {
        out.push_str(&format!("series (truncation {}):\n", series.truncation));
        render_series_table(&mut out, &report.classes, &series.coeffs);
        if let Some(rational) = &series.rational {
            out.push_str(&format!(
                "rational form: numerator below over (1-t)^{}\n",
                rational.denom_exp
            ));
            render_series_table(&mut out, &report.classes, &rational.numerator);
        }
    }
    if let Some(numerator) = &report.numerator {
        out.push_str(&format!(
            "numerator over (1-t)^{}:\n",
            numerator.denom_exp
        ));
        render_series_table(&mut out, &report.classes, &numerator.coeffs);
    }
    if !report.flag.is_empty() {
        out.push_str("flag characters (rows: f_S; h_S):\n");
        for entry in &report.flag {
            let colors: Vec<String> = entry.colors.iter().map(|c| c.to_string()).collect();
            let f_values: Vec<String> = entry.f.values.iter().map(cell).collect();
            let h_values: Vec<String> = entry.h.values.iter().map(cell).collect();
            let effective = match entry.h_effective {
                Some(true) => " effective",
                Some(false) => " NOT effective",
                None => "",
            };
            out.push_str(&format!(
                "S={{{}}}\tf_S=({})\th_S=({}){}\n",
                colors.join(","),
                f_values.join(", "),
                h_values.join(", "),
                effective
            ));
        }
    }
    if !report.effectiveness.is_empty() {
        out.push_str("effectiveness:\n");
        for entry in &report.effectiveness {
            out.push_str(&format!(
                "{}\tmultiplicities=({})\t{}\n",
                entry.name,
                entry.multiplicities.join(", "),
                if entry.effective { "effective" } else { "NOT effective" }
            ));
        }
    }
    if let Some(verification) = &report.verification {
        out.push_str(&format!(
            "verification: {}\n",
            if verification.ok { "PASS" } else { "FAIL" }
        ));
        for entry in &verification.mismatches {
            out.push_str(&format!(
                "mismatch at class {}, degree {}: lattice {} vs monomials {}\n",
                entry.class, entry.degree, entry.lattice_count, entry.monomial_count
            ));
        }
    }
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    if let Some(verdict) = report.verdict {
        out.push_str(&format!("verdict: {}\n", if verdict { "PASS" } else { "FAIL" }));
    }
    out
}
