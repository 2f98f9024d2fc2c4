//! Record types shared by the subcommands, plus the human-readable renderers.
//!
//! JSON Lines records are serialized from structs so that key order is fixed
//! by declaration order; two runs over the same instances produce identical
//! bytes.

use circulant_invariants::complex::independence_complex_capped;
use circulant_invariants::invariants::{betti_table_hochster_capped, InvariantsError};
use circulant_invariants::theorems::VerifyError;
use circulant_invariants::{
    build_circulant, hilbert_data, AlgebraicReport, CirculantSpec, FieldSpec,
};
use serde::Serialize;
use serde_json::Value;
use std::fmt;

/// Errors surfaced to the user, each mapped to a distinct process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed invocation: bad instance, bad flag value, unknown claim.
    Usage(String),
    /// A configured resource cap was exceeded.
    Resource(String),
    /// Output could not be written.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Resource(msg) | CliError::Io(msg) => {
                f.write_str(msg)
            }
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(err: VerifyError) -> Self {
        match err {
            VerifyError::Complex(e) => CliError::Resource(e.to_string()),
            VerifyError::Invariants(InvariantsError::GroundTooLarge { .. }) => {
                CliError::Resource(err.to_string())
            }
            VerifyError::Invariants(e) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<InvariantsError> for CliError {
    fn from(err: InvariantsError) -> Self {
        match err {
            InvariantsError::GroundTooLarge { .. } => CliError::Resource(err.to_string()),
            InvariantsError::SymmetryUnavailable => CliError::Usage(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}

/// Resource caps applied when enumerating faces and computing Betti tables.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub max_faces: usize,
    pub max_betti_n: usize,
}

/// One nonzero Betti table entry.
#[derive(Debug, Clone, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

/// One invariant record for a single instance. Field order here is the
/// stable key order of the JSON Lines output.
#[derive(Debug, Clone, Serialize)]
pub struct InstanceRecord {
    pub n: usize,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub edges: usize,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub euler: i64,
    pub krull_dim: usize,
    pub ri: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<BettiEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reg: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cm: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cm_type: Option<u64>,
}

/// Everything `analyze` needs: the record plus the Hilbert polynomials that
/// only appear in the human-readable report.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub record: InstanceRecord,
    pub h_poly: Vec<i64>,
    pub k_poly: Vec<i64>,
}

/// One verification record. Field order is the stable JSON key order.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyRecord {
    pub claim: String,
    pub n: usize,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// Compute the full invariant record for one instance.
pub fn build_analysis(
    spec: &CirculantSpec,
    field: FieldSpec,
    want_betti: bool,
    symmetry: bool,
    caps: Caps,
) -> Result<Analysis, CliError> {
    let graph = build_circulant(spec);
    let delta = independence_complex_capped(&graph, caps.max_faces)
        .map_err(|e| CliError::Resource(e.to_string()))?;
    let f = delta.f_vector();
    let hilbert = hilbert_data(&f, spec.n());

    let mut record = InstanceRecord {
        n: spec.n(),
        s: spec.connections().to_vec(),
        edges: graph.edge_count(),
        f: f.entries().to_vec(),
        h: f.h_vector().entries().to_vec(),
        euler: f.reduced_euler(),
        krull_dim: f.krull_dim(),
        ri: hilbert.regularity_index(),
        field: None,
        betti: None,
        pd: None,
        depth: None,
        reg: None,
        cm: None,
        gorenstein: None,
        level: None,
        cm_type: None,
    };

    if want_betti {
        let table = betti_table_hochster_capped(&delta, field, symmetry, caps.max_betti_n)?;
        let report = AlgebraicReport::from_table(&delta, &table);
        record.field = Some(field.to_string());
        record.betti = Some(
            table
                .iter()
                .map(|((i, j), value)| BettiEntry { i, j, value })
                .collect(),
        );
        record.pd = Some(report.projective_dimension);
        record.depth = Some(report.depth);
        record.reg = Some(report.regularity);
        record.cm = Some(report.is_cohen_macaulay);
        record.gorenstein = Some(report.is_gorenstein);
        record.level = Some(report.is_level);
        record.cm_type = report.cm_type;
    }

    Ok(Analysis {
        record,
        h_poly: hilbert.h_poly().to_vec(),
        k_poly: hilbert.k_poly().to_vec(),
    })
}

fn fmt_instance(n: usize, s: &[usize]) -> String {
    let inner = s
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("C_{n}({{{inner}}})")
}

fn fmt_poly(coeffs: &[i64]) -> String {
    let inner = coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("[{inner}]")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Render the `analyze` report as an aligned human-readable block.
pub fn render_analysis(analysis: &Analysis) -> String {
    let r = &analysis.record;
    let mut out = String::new();
    out.push_str(&format!("{}\n", fmt_instance(r.n, &r.s)));
    out.push_str(&format!("  edges             {}\n", r.edges));
    out.push_str(&format!(
        "  f-vector          {}\n",
        fmt_poly(&r.f.iter().map(|&v| v as i64).collect::<Vec<_>>())
    ));
    out.push_str(&format!("  h-vector          {}\n", fmt_poly(&r.h)));
    out.push_str(&format!("  reduced euler     {}\n", r.euler));
    out.push_str(&format!("  krull dimension   {}\n", r.krull_dim));
    out.push_str(&format!(
        "  hilbert h-poly    {}\n",
        fmt_poly(&analysis.h_poly)
    ));
    out.push_str(&format!(
        "  hilbert K-poly    {}\n",
        fmt_poly(&analysis.k_poly)
    ));
    out.push_str(&format!("  regularity index  {}\n", r.ri));
    if let (Some(field), Some(betti)) = (&r.field, &r.betti) {
        out.push_str(&format!("  field             {field}\n"));
        out.push_str(&render_betti_grid(betti));
        out.push_str(&format!(
            "  projective dim    {}\n",
            r.pd.expect("pd accompanies betti")
        ));
        out.push_str(&format!(
            "  depth             {}\n",
            r.depth.expect("depth accompanies betti")
        ));
        out.push_str(&format!(
            "  regularity        {}\n",
            r.reg.expect("reg accompanies betti")
        ));
        out.push_str(&format!(
            "  cohen-macaulay    {}\n",
            yes_no(r.cm.expect("cm accompanies betti"))
        ));
        match r.cm_type {
            Some(t) => out.push_str(&format!("  cm type           {t}\n")),
            None => out.push_str("  cm type           -\n"),
        }
        out.push_str(&format!(
            "  gorenstein        {}\n",
            yes_no(r.gorenstein.expect("gorenstein accompanies betti"))
        ));
        out.push_str(&format!(
            "  level             {}\n",
            yes_no(r.level.expect("level accompanies betti"))
        ));
    }
    out
}

/// Render the Betti table as a grid with homological degree down the side
/// and internal degree across the top.
fn render_betti_grid(entries: &[BettiEntry]) -> String {
    if entries.is_empty() {
        return String::from("  betti table       (empty)\n");
    }
    let max_i = entries.iter().map(|e| e.i).max().unwrap_or(0);
    let mut cols: Vec<usize> = entries.iter().map(|e| e.j).collect();
    cols.sort_unstable();
    cols.dedup();

    let cell = |i: usize, j: usize| -> String {
        entries
            .iter()
            .find(|e| e.i == i && e.j == j)
            .map(|e| e.value.to_string())
            .unwrap_or_else(|| ".".to_string())
    };

    let mut widths: Vec<usize> = Vec::with_capacity(cols.len());
    for &j in &cols {
        let mut w = j.to_string().len();
        for i in 0..=max_i {
            w = w.max(cell(i, j).len());
        }
        widths.push(w);
    }

    let mut out = String::from("  betti table (rows i, columns j):\n");
    out.push_str("      j |");
    for (idx, &j) in cols.iter().enumerate() {
        out.push_str(&format!(" {:>width$}", j, width = widths[idx]));
    }
    out.push('\n');
    let rule_len = cols.iter().enumerate().map(|(idx, _)| widths[idx] + 1).sum::<usize>();
    out.push_str(&format!("      --+{}\n", "-".repeat(rule_len)));
    for i in 0..=max_i {
        out.push_str(&format!("    {:>3} |", i));
        for (idx, &j) in cols.iter().enumerate() {
            out.push_str(&format!(" {:>width$}", cell(i, j), width = widths[idx]));
        }
        out.push('\n');
    }
    out
}

/// Render one sweep record as a single human-readable line.
pub fn render_sweep_row(record: &InstanceRecord) -> String {
    let mut line = format!(
        "{:<16} edges={:<3} f={} euler={} krull={} ri={}",
        fmt_instance(record.n, &record.s),
        record.edges,
        fmt_poly(&record.f.iter().map(|&v| v as i64).collect::<Vec<_>>()),
        record.euler,
        record.krull_dim,
        record.ri,
    );
    if let Some(pd) = record.pd {
        line.push_str(&format!(
            " pd={} depth={} reg={} cm={}",
            pd,
            record.depth.expect("depth accompanies pd"),
            record.reg.expect("reg accompanies pd"),
            yes_no(record.cm.expect("cm accompanies pd")),
        ));
        match record.cm_type {
            Some(t) => line.push_str(&format!(" type={t}")),
            None => line.push_str(" type=-"),
        }
        line.push_str(&format!(
            " gor={} level={}",
            yes_no(record.gorenstein.expect("gorenstein accompanies pd")),
            yes_no(record.level.expect("level accompanies pd")),
        ));
    }
    line
}

/// Render one verification record as a single human-readable line.
pub fn render_verify_row(record: &VerifyRecord) -> String {
    let mut line = format!(
        "{:<16} {:<10} {}",
        fmt_instance(record.n, &record.s),
        record.claim,
        record.status,
    );
    if record.status == "inapplicable" {
        if let Some(reason) = record
            .witness
            .as_ref()
            .and_then(|w| w.get("reason"))
            .and_then(|v| v.as_str())
        {
            line.push_str(&format!("  ({reason})"));
        }
    } else if record.status == "fails" {
        if let Some(witness) = &record.witness {
            line.push_str(&format!("  witness={witness}"));
        }
    }
    line
}
