//! One function per subcommand. Each returns the finished report plus a
//! flag marking verified-negative outcomes (claim checked and found
//! false), which the driver turns into exit code 1; errors become exit
//! code 2.

use std::path::Path;

use serde_json::{json, Value};

use crate::code::Code;
use crate::covering::{self, CoveringMethod, CoveringResult};
use crate::error::{Error, Result};
use crate::fcc;
use crate::graph;
use crate::mdspath;

use super::document::{self, EncodingDocument};
use super::report::{covering_payload, render, ReportDocument};

pub struct Outcome {
    pub report: ReportDocument,
    pub negative: bool,
}

fn positive(report: ReportDocument) -> Outcome {
    Outcome { report, negative: false }
}

pub fn analyze(code_arg: &str, alpha: Option<usize>, dot: Option<&Path>) -> Result<Outcome> {
    let (code, payload) = document::load_code(code_arg)?;
    let profile = graph::component_profile(&code)?;
    let alpha_star = graph::connectivity_threshold(&code)?;
    let mut result = json!({
        "name": code.name(),
        "q": code.field().order(),
        "length": code.length(),
        "size": code.size(),
        "dMin": code.dmin(),
        "dMax": code.dmax(),
        "profile": profile,
        "alphaStar": alpha_star,
    });
    if let Some(a) = alpha {
        let g = graph::build_alpha_graph(&code, a)?;
        result["graph"] = json!({
            "alpha": a,
            "components": g.component_count(),
            "connected": g.is_connected(),
            "members": g.members(),
        });
        if let Some(path) = dot {
            std::fs::write(path, graph::export_dot(&code, &g)?)?;
            result["dot"] = Value::from(path.display().to_string());
        }
    }
    let alpha_part = fmt_opt("alpha", alpha);
    Ok(positive(ReportDocument::new("analyze", &[&payload, &alpha_part], result, &[])))
}

pub fn feasibility(code_arg: &str, values: u32, df: Option<usize>) -> Result<Outcome> {
    let (code, payload) = document::load_code(code_arg)?;
    let report = fcc::feasibility_report(&code)?;
    let mut ids: Vec<&'static str> = Vec::new();
    if code.is_perfect() {
        ids.push("perfect-code-connectivity");
    }
    if code.is_mds() {
        ids.push("mds-connectivity");
    }
    let mut negative = false;
    let mut result = serde_json::to_value(&report)?;
    if let Some(df) = df {
        let verdict = fcc::strict_feasible(&code, values, df)?;
        if let Some(t) = verdict.theorem {
            ids.push(t);
        }
        negative = !verdict.feasible;
        result["query"] = serde_json::to_value(&verdict)?;
    }
    for v in &report.verdicts {
        if let Some(t) = v.theorem {
            ids.push(t);
        }
    }
    if report.covering.is_some() {
        ids.push("covering-radius-connectivity");
    }
    let parts = [payload, format!("values={values}"), fmt_opt("df", df)];
    let parts: Vec<&str> = parts.iter().map(String::as_str).collect();
    Ok(Outcome { report: ReportDocument::new("feasibility", &parts, result, &ids), negative })
}

/// Best exact radius available without blowing the size caps: structural
/// tag, then ambient sweep, then coset-leader sweep.
fn best_exact_radius(code: &Code) -> Option<CoveringResult> {
    if let Some(known) = covering::known_covering_radius(code) {
        return Some(known);
    }
    match covering::covering_radius_exact(code) {
        Ok(r) => Some(r),
        Err(_) => covering::covering_radius_coset_leader(code).ok(),
    }
}

fn covering_citation(method: CoveringMethod) -> Option<&'static str> {
    match method {
        CoveringMethod::PerfectCode => Some("perfect-radius"),
        CoveringMethod::QuasiPerfectCode => Some("quasi-perfect-radius"),
        CoveringMethod::ReedMuller1Formula => Some("rm1-radius-formula"),
        CoveringMethod::UpperBoundOnly => Some("dual-distance-bound"),
        CoveringMethod::ExactAmbient | CoveringMethod::CosetLeader => None,
    }
}

pub fn covering(code_arg: &str, method: &str) -> Result<Outcome> {
    let (code, payload) = document::load_code(code_arg)?;
    let mut ids: Vec<&'static str> = Vec::new();
    let result = match method {
        "exact" => {
            let r = covering::covering_radius_exact(&code)?;
            ids.extend(covering_citation(r.method));
            covering_payload(&r)
        }
        "coset" => {
            let r = covering::covering_radius_coset_leader(&code)?;
            ids.extend(covering_citation(r.method));
            covering_payload(&r)
        }
        "known" => {
            let r = covering::known_covering_radius(&code).ok_or_else(|| {
                Error::BadParameter("no structural covering radius known for this code".into())
            })?;
            ids.extend(covering_citation(r.method));
            covering_payload(&r)
        }
        "auto" => {
            let r = covering::covering_radius_auto(&code)?;
            ids.extend(covering_citation(r.method));
            covering_payload(&r)
        }
        "bounds" => {
            let mut jm = covering::janwa_mattson_bound(&code)?;
            let exact = best_exact_radius(&code);
            // A bound exceeded by the true radius certifies nothing; the
            // exact figure always travels alongside and takes precedence.
            if let Some(ex) = &exact {
                if ex.value > jm.value {
                    jm.vacuous = true;
                }
            }
            ids.extend(covering_citation(jm.method));
            let mut v = covering_payload(&jm);
            if let Some(ex) = exact {
                ids.extend(covering_citation(ex.method));
                v["exact"] = covering_payload(&ex);
            }
            v
        }
        other => {
            return Err(Error::BadParameter(format!("unknown covering method {other:?}")));
        }
    };
    let parts = [payload.as_str(), method];
    Ok(positive(ReportDocument::new("covering", &parts, result, &ids)))
}

pub fn construct(
    function: &str,
    inner_arg: &str,
    fc_arg: &str,
    out: Option<&Path>,
) -> Result<Outcome> {
    let (inner, inner_payload) = document::load_code(inner_arg)?;
    let (fc, fc_payload) = document::load_code(fc_arg)?;
    let k = document::message_dimension(&inner)?;
    let f = document::parse_function_shorthand(function, inner.field().clone(), k)?;
    let index = fcc::default_label_index(&f, &fc)?;
    let enc = fcc::two_step_construct(&f, &inner, &fc, &index)?;
    let doc = EncodingDocument::from_encoding(&enc);
    if let Some(path) = out {
        std::fs::write(path, render(&doc, 2))?;
    }
    let metrics = enc.measure();
    let result = json!({
        "out": out.map(|p| p.display().to_string()),
        "size": enc.size(),
        "length": enc.length(),
        "redundancy": enc.redundancy(),
        "numValues": f.num_values(),
        "dataDistance": metrics.data_distance,
        "functionDistance": metrics.function_distance,
    });
    let parts = [function, &inner_payload, &fc_payload];
    Ok(positive(ReportDocument::new("construct", &parts, result, &["two-step-construction"])))
}

pub fn verify(encoding_path: &str, dd: usize, df: usize) -> Result<Outcome> {
    let (enc, payload) = document::load_encoding(encoding_path)?;
    let report = fcc::verify_fcc(&enc, dd, df)?;
    let negative = !report.pass;
    let result = serde_json::to_value(&report)?;
    let parts = [payload, format!("dd={dd}"), format!("df={df}")];
    let parts: Vec<&str> = parts.iter().map(String::as_str).collect();
    Ok(Outcome { report: ReportDocument::new("verify", &parts, result, &[]), negative })
}

pub fn mds_path(code_arg: &str, from: &str, to: &str) -> Result<Outcome> {
    let (code, payload) = document::load_code(code_arg)?;
    let u = document::parse_word(code.field(), from)?;
    let v = document::parse_word(code.field(), to)?;
    let path = mdspath::mds_path(&code, &u, &v)?;
    let result = json!({
        "path": path.words.iter().map(|w| w.symbols().to_vec()).collect::<Vec<_>>(),
        "hops": path.hops(),
        "dMin": code.dmin(),
    });
    let parts = [payload.as_str(), from, to];
    Ok(positive(ReportDocument::new("mds-path", &parts, result, &["mds-connectivity"])))
}

pub fn bound(kind: &str, q: Option<u32>, k: usize, d: usize) -> Result<Outcome> {
    let (bound, id) = match kind {
        "perfect" => {
            let q = q.ok_or_else(|| Error::BadParameter("perfect bound needs --q".into()))?;
            (fcc::perfect_redundancy_bound(q, k, d)?, "perfect-redundancy-bound")
        }
        "mds" => (fcc::mds_redundancy_bound(k, d)?, "mds-redundancy-bound"),
        other => return Err(Error::BadParameter(format!("unknown bound kind {other:?}"))),
    };
    let result = serde_json::to_value(&bound)?;
    let parts = [kind.to_owned(), fmt_opt("q", q), format!("k={k}"), format!("d={d}")];
    let parts: Vec<&str> = parts.iter().map(String::as_str).collect();
    Ok(positive(ReportDocument::new("bound", &parts, result, &[id])))
}

pub fn simulate(
    encoding_path: &str,
    t_data: usize,
    t_func: usize,
    trials: u64,
    seed: u64,
) -> Result<Outcome> {
    let (enc, payload) = document::load_encoding(encoding_path)?;
    let stats = fcc::simulate_channel(&enc, t_data, t_func, trials, seed)?;
    let negative = stats.data_recovery < 1.0 || stats.function_recovery < 1.0;
    let result = serde_json::to_value(stats)?;
    let parts = [
        payload,
        format!("tData={t_data}"),
        format!("tFunc={t_func}"),
        format!("trials={trials}"),
        format!("seed={seed}"),
    ];
    let parts: Vec<&str> = parts.iter().map(String::as_str).collect();
    Ok(Outcome { report: ReportDocument::new("simulate", &parts, result, &[]), negative })
}

fn fmt_opt<T: std::fmt::Display>(name: &str, v: Option<T>) -> String {
    match v {
        Some(v) => format!("{name}={v}"),
        None => format!("{name}="),
    }
}
