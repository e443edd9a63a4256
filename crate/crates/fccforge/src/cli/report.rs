//! The report envelope every subcommand emits, and the fixed registry of
//! citable statements.
//!
//! Reports are deterministic: for identical inputs (and seeds) the bytes
//! on stdout are identical. Citations come only from the registry below,
//! so report text stays stable across tool versions.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::covering::CoveringResult;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Statements a report may cite, keyed by stable id.
pub const THEOREM_REGISTRY: &[(&str, &str)] = &[
    (
        "connected-exclusion",
        "If the distance graph G_{d_f-1}(C) is connected, no encoding over C protects a \
         non-constant function with d_f > d_d.",
    ),
    (
        "component-count-exclusion",
        "If G_{d_f-1}(C) has Q connected components, no encoding over C with d_f > d_d \
         protects a function taking more than Q values.",
    ),
    (
        "perfect-code-connectivity",
        "The minimum-distance graph of a perfect t-error-correcting code is connected.",
    ),
    (
        "mds-connectivity",
        "The minimum-distance graph of an MDS code is connected.",
    ),
    (
        "covering-radius-connectivity",
        "G_alpha(C) is connected for every alpha >= 2R(C) + 1, where R(C) is the covering \
         radius of C.",
    ),
    (
        "min-weight-span",
        "The minimum-distance graph of a linear code is connected exactly when the \
         minimum-weight codewords span the code.",
    ),
    (
        "perfect-radius",
        "A perfect t-error-correcting code has covering radius exactly t.",
    ),
    (
        "quasi-perfect-radius",
        "Extending a perfect t-error-correcting code by an overall parity check gives a \
         quasi-perfect code with covering radius t + 1.",
    ),
    (
        "rm1-radius-formula",
        "The first-order Reed-Muller code RM(1, m) has covering radius \
         2^(m-1) - 2^(ceil(m/2) - 1) for m <= 4.",
    ),
    (
        "dual-distance-bound",
        "For a linear code with dual distance d', the printed bound \
         n - sum_{i=0}^{d'-2} ceil((n-i)/q) on the covering radius certifies nothing when \
         non-positive and never overrides an exactly computed radius.",
    ),
    (
        "two-step-construction",
        "Appending a label codeword for f(u) to an inner encoding of u yields \
         d_d >= dmin(inner) and d_f >= dmin(inner) + dmin(label code).",
    ),
    (
        "perfect-redundancy-bound",
        "If (n, k, d) are the parameters of a perfect code over F_q, any encoding of k \
         symbols with data distance d and a strictly protected function needs redundancy at \
         least n - k + 1.",
    ),
    (
        "mds-redundancy-bound",
        "At MDS parameters n = k + d - 1, any encoding with data distance d and a strictly \
         protected function needs redundancy at least d.",
    ),
];

/// One cited statement.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Citation {
    pub id: &'static str,
    pub text: &'static str,
}

/// Look up a registry entry; ids are compile-time constants, so a miss is
/// a programming error.
pub fn citation(id: &str) -> Citation {
    THEOREM_REGISTRY
        .iter()
        .find(|(rid, _)| *rid == id)
        .map(|&(id, text)| Citation { id, text })
        .unwrap_or_else(|| panic!("citation id {id:?} is not in the registry"))
}

/// Deduplicate citation ids, keeping first-appearance order.
pub fn citations(ids: &[&'static str]) -> Vec<Citation> {
    let mut out: Vec<Citation> = Vec::new();
    for &id in ids {
        if !out.iter().any(|c| c.id == id) {
            out.push(citation(id));
        }
    }
    out
}

/// The envelope around every command's payload.
#[derive(Serialize, Clone, Debug)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    pub command: String,
    pub version: &'static str,
    pub input_digest: String,
    pub result: Value,
    pub citations: Vec<Citation>,
}

impl ReportDocument {
    pub fn new(
        command: &str,
        digest_parts: &[&str],
        result: Value,
        ids: &[&'static str],
    ) -> ReportDocument {
        ReportDocument {
            command: command.to_owned(),
            version: TOOL_VERSION,
            input_digest: input_digest(command, digest_parts),
            result,
            citations: citations(ids),
        }
    }
}

/// Length-prefixed SHA-256 over the command name and its semantic inputs
/// (file contents or shorthand strings, then flags in a fixed order).
pub fn input_digest(command: &str, parts: &[&str]) -> String {
    let mut h = Sha256::new();
    h.update((command.len() as u64).to_le_bytes());
    h.update(command.as_bytes());
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    format!("sha256:{:x}", h.finalize())
}

/// Render any serializable value as JSON with the requested indent
/// (0 = compact), always ending in a newline.
pub fn render(value: &impl Serialize, indent: usize) -> String {
    let mut buf = Vec::new();
    if indent == 0 {
        serde_json::to_writer(&mut buf, value).expect("report values serialize");
    } else {
        let pad = vec![b' '; indent];
        let fmt = serde_json::ser::PrettyFormatter::with_indent(&pad);
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
        value.serialize(&mut ser).expect("report values serialize");
    }
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// The covering payload shape shared by the covering command and the
/// feasibility cross-check: value, method label, optional certifier,
/// vacuous flag.
pub fn covering_payload(r: &CoveringResult) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("value".into(), Value::from(r.value));
    obj.insert("method".into(), Value::from(r.method.label()));
    if let Some(w) = &r.certifier {
        obj.insert("certifier".into(), Value::from(w.symbols().to_vec()));
    }
    obj.insert("vacuous".into(), Value::from(r.vacuous));
    Value::Object(obj)
}
