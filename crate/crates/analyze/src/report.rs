use std::collections::BTreeMap;
use std::time::Instant;

use asp_core::dependency_graph;
use cnf::CnfFormula;
use encoder::GroundProgram;
use ordaug::OrderingAugmentedTd;
use serde::Serialize;

use crate::{constructed_td, scc_report, tightness_width, AnalyzeError, SccInfo};

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub variables: u32,
    pub clauses: usize,
    /// Width of the input decomposition.
    pub k: usize,
    /// Largest ordering group.
    pub k_prime: usize,
    /// Block size for blocked orderings, absent for plain ones.
    pub iota: Option<usize>,
    pub output_width: usize,
    /// `output_width / k`, absent when `k` is zero.
    pub width_ratio: Option<f64>,
    pub largest_scc: usize,
    /// Largest component per group, 1 when a group has no cycles.
    pub group_scc: Vec<usize>,
    pub sccs: Vec<SccInfo>,
    /// Tightness width measured on the constructed decomposition.
    pub tightness_width: usize,
    pub atoms: usize,
    pub rules: usize,
    pub rules_per_formula: BTreeMap<String, usize>,
    /// Only filled in on request, so reports stay reproducible by default.
    pub wall_time_ms: Option<f64>,
}

/// Flat subset of the report for one CSV row per instance.
#[derive(Debug, Clone, Serialize)]
pub struct CsvRow {
    pub variables: u32,
    pub clauses: usize,
    pub k: usize,
    pub k_prime: usize,
    pub iota: Option<usize>,
    pub output_width: usize,
    pub width_ratio: Option<f64>,
    pub largest_scc: usize,
    pub tightness_width: usize,
    pub atoms: usize,
    pub rules: usize,
    pub wall_time_ms: Option<f64>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn csv_row(&self) -> CsvRow {
        CsvRow {
            variables: self.variables,
            clauses: self.clauses,
            k: self.k,
            k_prime: self.k_prime,
            iota: self.iota,
            output_width: self.output_width,
            width_ratio: self.width_ratio,
            largest_scc: self.largest_scc,
            tightness_width: self.tightness_width,
            atoms: self.atoms,
            rules: self.rules,
            wall_time_ms: self.wall_time_ms,
        }
    }

    /// Header plus one data row.
    pub fn to_csv(&self, header: bool) -> Result<String, AnalyzeError> {
        let mut w = csv::WriterBuilder::new().has_headers(header).from_writer(Vec::new());
        w.serialize(self.csv_row())?;
        let bytes = w.into_inner().map_err(|e| AnalyzeError::Csv(e.into_error().into()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Builds the report. `timed` records the time spent on the analysis itself.
pub fn metrics(
    f: &CnfFormula,
    atd: &OrderingAugmentedTd,
    gp: &GroundProgram,
    timed: bool,
) -> Result<AnalysisReport, AnalyzeError> {
    let start = Instant::now();
    let td = constructed_td(gp, atd)?;
    let sccs = scc_report(gp, atd)?;
    let mut group_scc = vec![1; atd.groups().len()];
    for s in &sccs {
        group_scc[s.group] = group_scc[s.group].max(s.size);
    }
    let k = atd.td().width();
    let output_width = td.width();
    let iota = match atd.mode() {
        ordaug::Mode::R => None,
        ordaug::Mode::RPrime { iota } => Some(iota),
    };
    let rules_per_formula =
        gp.formula_counts().into_iter().map(|(f, n)| (f.to_string(), n)).collect();
    let largest_scc = if gp.atoms().is_empty() { 0 } else { dependency_graph(gp.program()).largest_scc() };
    let tightness = tightness_width(&td, gp.program());
    Ok(AnalysisReport {
        variables: f.num_vars(),
        clauses: f.clauses().len(),
        k,
        k_prime: atd.groups().iter().map(|g| g.len()).max().unwrap_or(0),
        iota,
        output_width,
        width_ratio: (k > 0).then(|| output_width as f64 / k as f64),
        largest_scc,
        group_scc,
        sccs,
        tightness_width: tightness,
        atoms: gp.atoms().len(),
        rules: gp.len(),
        rules_per_formula,
        wall_time_ms: timed.then(|| start.elapsed().as_secs_f64() * 1000.0),
    })
}
