//! Function-correcting encodings with data protection.
//!
//! An encoding maps every message of F_q^k injectively to a codeword. Two
//! distances are measured over it: the data distance d_d (minimum over all
//! distinct message pairs) and the function distance d_f (minimum over
//! pairs whose messages evaluate differently under a target function f).
//! Since the second minimum ranges over a subset of pairs, d_d <= d_f
//! whenever d_f is finite; for constant functions the set is empty and
//! d_f is reported as an explicit "unconstrained" sentinel.
//!
//! Strictness (d_f > d_d) is what makes function correction interesting,
//! and it is exactly what the distance-graph machinery constrains: within
//! a component of G_{d_f-1} all codewords must carry the same function
//! value, so a code whose graph has Q components admits no strict
//! encoding of a function with more than Q values.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::OnceLock;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{self, Code};
use crate::covering::{self, CoveringResult};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::{self, ProfileEntry};
use crate::word::{index_to_symbols, symbols_to_index, Word};

/// Function values are opaque labels.
pub type Label = u32;

/// Theorem-registry id: a connected (d_f-1)-graph excludes every strict
/// encoding of a non-constant function.
pub const CONNECTED_EXCLUSION: &str = "connected-exclusion";
/// Theorem-registry id: Q components exclude functions with > Q values.
pub const COMPONENT_COUNT_EXCLUSION: &str = "component-count-exclusion";

/// The shape of a target function on F_q^k.
#[derive(Clone, Debug)]
pub enum FunctionKind {
    /// Sum of the message symbols in the field (weight mod 2 over GF(2)).
    Parity,
    /// Hamming weight of the message, reduced modulo s.
    WeightMod(u32),
    /// The i-th message symbol, with i counted from 1.
    Coordinate(usize),
    /// Explicit label for every message, indexed by message number.
    Table(Vec<Label>),
}

impl FunctionKind {
    pub fn name(&self) -> &'static str {
        match self {
            FunctionKind::Parity => "parity",
            FunctionKind::WeightMod(_) => "weight-mod",
            FunctionKind::Coordinate(_) => "coordinate",
            FunctionKind::Table(_) => "table",
        }
    }
}

/// A total function from F_q^k to labels.
#[derive(Clone, Debug)]
pub struct FunctionSpec {
    field: FieldSpec,
    k: usize,
    kind: FunctionKind,
    image: Vec<Label>,
}

impl FunctionSpec {
    pub fn parity(field: FieldSpec, k: usize) -> Result<Self> {
        Self::new(field, k, FunctionKind::Parity)
    }

    pub fn weight_mod(field: FieldSpec, k: usize, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::BadParameter("weight modulus must be at least 1".into()));
        }
        Self::new(field, k, FunctionKind::WeightMod(s))
    }

    /// The i-th coordinate, 1-based.
    pub fn coordinate(field: FieldSpec, k: usize, i: usize) -> Result<Self> {
        if i == 0 || i > k {
            return Err(Error::BadParameter(format!(
                "coordinate index {i} out of range 1..={k}"
            )));
        }
        Self::new(field, k, FunctionKind::Coordinate(i))
    }

    /// Explicit table with one label per message, in message order.
    pub fn table(field: FieldSpec, k: usize, entries: Vec<Label>) -> Result<Self> {
        let expected = domain_size(&field, k)?;
        if entries.len() != expected {
            return Err(Error::BadParameter(format!(
                "table has {} entries, domain has {expected} messages",
                entries.len()
            )));
        }
        Self::new(field, k, FunctionKind::Table(entries))
    }

    fn new(field: FieldSpec, k: usize, kind: FunctionKind) -> Result<Self> {
        domain_size(&field, k)?;
        let mut spec = FunctionSpec { field, k, kind, image: Vec::new() };
        let mut image = BTreeSet::new();
        for_each_message(&spec.field, spec.k, |idx, msg| {
            image.insert(spec.eval_unchecked(idx, msg));
        });
        spec.image = image.into_iter().collect();
        Ok(spec)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Message length k.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> &FunctionKind {
        &self.kind
    }

    /// Number of messages q^k.
    pub fn domain_size(&self) -> usize {
        domain_size(&self.field, self.k).expect("validated at construction")
    }

    /// Im(f), ascending and without duplicates.
    pub fn image(&self) -> &[Label] {
        &self.image
    }

    pub fn num_values(&self) -> usize {
        self.image.len()
    }

    /// f(u) for a message given as symbols.
    pub fn evaluate(&self, u: &[u8]) -> Result<Label> {
        if u.len() != self.k {
            return Err(Error::LengthMismatch { left: self.k, right: u.len() });
        }
        for &s in u {
            self.field.check_symbol(s)?;
        }
        Ok(self.eval_unchecked(symbols_to_index(self.field.order(), u), u))
    }

    /// f(u) for a message given by index.
    pub fn evaluate_index(&self, index: usize) -> Result<Label> {
        if index >= self.domain_size() {
            return Err(Error::BadParameter(format!(
                "message index {index} out of range for {} messages",
                self.domain_size()
            )));
        }
        if let FunctionKind::Table(t) = &self.kind {
            return Ok(t[index]);
        }
        let msg = index_to_symbols(self.field.order(), self.k, index);
        Ok(self.eval_unchecked(index, &msg))
    }

    fn eval_unchecked(&self, index: usize, u: &[u8]) -> Label {
        match &self.kind {
            FunctionKind::Parity => {
                u.iter().fold(0u8, |acc, &s| self.field.add(acc, s)) as Label
            }
            FunctionKind::WeightMod(s) => {
                u.iter().filter(|&&x| x != 0).count() as Label % s
            }
            FunctionKind::Coordinate(i) => u[i - 1] as Label,
            FunctionKind::Table(t) => t[index],
        }
    }
}

fn domain_size(field: &FieldSpec, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::BadParameter("message length k must be at least 1".into()));
    }
    let q = field.order();
    let mut acc: usize = 1;
    for _ in 0..k {
        acc = acc
            .checked_mul(q as usize)
            .filter(|&v| v <= code::MAX_WORDS)
            .ok_or_else(|| {
                Error::SizeLimit(format!("domain {q}^{k} exceeds {}", code::MAX_WORDS))
            })?;
    }
    Ok(acc)
}

/// Run `f(index, symbols)` over all messages of F_q^k in index order,
/// reusing one symbol buffer (base-q odometer, most significant first).
fn for_each_message(field: &FieldSpec, k: usize, mut f: impl FnMut(usize, &[u8])) {
    let q = field.order() as u8;
    let total = domain_size(field, k).expect("caller validated the domain");
    let mut sym = vec![0u8; k];
    for idx in 0..total {
        f(idx, &sym);
        for pos in (0..k).rev() {
            sym[pos] += 1;
            if sym[pos] < q {
                break;
            }
            sym[pos] = 0;
        }
    }
}

/// The function distance of an encoding: a number, or "unconstrained"
/// when no two messages disagree under f.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FunctionDistance {
    Finite(usize),
    Unconstrained,
}

impl FunctionDistance {
    /// Does the measured distance meet a claimed one? The sentinel
    /// satisfies every claim.
    pub fn satisfies(self, claimed: usize) -> bool {
        match self {
            FunctionDistance::Finite(d) => d >= claimed,
            FunctionDistance::Unconstrained => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            FunctionDistance::Finite(d) => Some(d),
            FunctionDistance::Unconstrained => None,
        }
    }
}

impl std::fmt::Display for FunctionDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FunctionDistance::Finite(d) => write!(f, "{d}"),
            FunctionDistance::Unconstrained => write!(f, "unconstrained"),
        }
    }
}

impl Serialize for FunctionDistance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FunctionDistance::Finite(d) => s.serialize_u64(*d as u64),
            FunctionDistance::Unconstrained => s.serialize_str("unconstrained"),
        }
    }
}

/// Measured distances of an encoding, with the message pairs attaining them.
#[derive(Clone, Copy, Debug)]
pub struct FccMetrics {
    pub data_distance: usize,
    /// Message-index pair attaining the data distance.
    pub data_witness: (usize, usize),
    pub function_distance: FunctionDistance,
    /// Message-index pair attaining the function distance, when finite.
    pub function_witness: Option<(usize, usize)>,
}

/// An injective encoding of F_q^k together with its target function.
pub struct FccEncoding {
    function: FunctionSpec,
    words: Vec<Word>,
    labels: Vec<Label>,
    length: usize,
    metrics: OnceLock<FccMetrics>,
}

impl FccEncoding {
    /// Wrap a codeword list indexed by message number. Words must share
    /// the function's field, have a common length, and be pairwise
    /// distinct (one codeword per message).
    pub fn new(function: FunctionSpec, words: Vec<Word>) -> Result<Self> {
        let m = function.domain_size();
        if words.len() != m {
            return Err(Error::BadParameter(format!(
                "encoding lists {} codewords for {m} messages",
                words.len()
            )));
        }
        let length = words[0].len();
        for w in &words {
            if w.field() != function.field() {
                return Err(Error::FieldMismatch);
            }
            if w.len() != length {
                return Err(Error::LengthMismatch { left: length, right: w.len() });
            }
        }
        let mut seen: HashMap<&[u8], ()> = HashMap::with_capacity(m);
        for w in &words {
            if seen.insert(w.symbols(), ()).is_some() {
                return Err(Error::DuplicateWords);
            }
        }
        let labels =
            (0..m).map(|i| function.evaluate_index(i)).collect::<Result<Vec<_>>>()?;
        Ok(FccEncoding { function, words, labels, length, metrics: OnceLock::new() })
    }

    pub fn function(&self) -> &FunctionSpec {
        &self.function
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, message_index: usize) -> &Word {
        &self.words[message_index]
    }

    /// f(u) for message index i, precomputed.
    pub fn label(&self, message_index: usize) -> Label {
        self.labels[message_index]
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Codeword length k + r.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Redundancy r = codeword length - message length.
    pub fn redundancy(&self) -> usize {
        self.length - self.function.k()
    }

    pub fn message(&self, index: usize) -> Vec<u8> {
        index_to_symbols(self.function.field().order(), self.function.k(), index)
    }

    /// Nearest-codeword decoding; ties resolve to the lowest message index.
    pub fn nearest(&self, x: &Word) -> Result<usize> {
        x.check_compatible(&self.words[0])?;
        let mut best = (usize::MAX, 0usize);
        for (i, c) in self.words.iter().enumerate() {
            let d = c.dist(x);
            if d < best.0 {
                best = (d, i);
            }
        }
        Ok(best.1)
    }

    /// Measured d_d and d_f with witnesses (cached after the first scan).
    pub fn measure(&self) -> &FccMetrics {
        self.metrics.get_or_init(|| self.scan())
    }

    fn scan(&self) -> FccMetrics {
        let m = self.words.len();
        // (distance, i, j) triples ordered lexicographically make the
        // min-reduction deterministic regardless of scan order.
        const NONE: (usize, usize, usize) = (usize::MAX, usize::MAX, usize::MAX);
        let combine = |a: ((usize, usize, usize), (usize, usize, usize)),
                       b: ((usize, usize, usize), (usize, usize, usize))| {
            (a.0.min(b.0), a.1.min(b.1))
        };
        let row = |i: usize| {
            let mut dd = NONE;
            let mut df = NONE;
            for j in i + 1..m {
                let d = self.words[i].dist(&self.words[j]);
                dd = dd.min((d, i, j));
                if self.labels[i] != self.labels[j] {
                    df = df.min((d, i, j));
                }
            }
            (dd, df)
        };
        let (dd, df) = if m >= 1024 {
            (0..m).into_par_iter().map(row).reduce(|| (NONE, NONE), combine)
        } else {
            (0..m).map(row).fold((NONE, NONE), combine)
        };
        FccMetrics {
            data_distance: dd.0,
            data_witness: (dd.1, dd.2),
            function_distance: if df == NONE {
                FunctionDistance::Unconstrained
            } else {
                FunctionDistance::Finite(df.0)
            },
            function_witness: (df != NONE).then_some((df.1, df.2)),
        }
    }
}

/// A message pair falsifying a claimed distance.
#[derive(Serialize, Clone, Debug)]
#[serde(rename_all = "camelCase")]
pub struct ViolatingPair {
    /// Which claim failed: "data" or "function".
    pub claim: &'static str,
    pub message_a: Vec<u8>,
    pub message_b: Vec<u8>,
    pub distance: usize,
}

/// Outcome of checking claimed (d_d, d_f) against measured distances.
#[derive(Serialize, Clone, Debug)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub pass: bool,
    pub claimed_dd: usize,
    pub claimed_df: usize,
    pub measured_dd: usize,
    pub measured_df: FunctionDistance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<ViolatingPair>,
}

/// Check an encoding against claimed distances. Requires
/// claimed_dd <= claimed_df; failure to meet the claims is reported in
/// the result, not as an error.
pub fn verify_fcc(enc: &FccEncoding, claimed_dd: usize, claimed_df: usize) -> Result<VerifyReport> {
    if claimed_dd > claimed_df {
        return Err(Error::BadParameter(format!(
            "claimed data distance {claimed_dd} exceeds claimed function distance {claimed_df}"
        )));
    }
    let m = enc.measure();
    let dd_ok = m.data_distance >= claimed_dd;
    let df_ok = m.function_distance.satisfies(claimed_df);
    let violation = if !dd_ok {
        let (i, j) = m.data_witness;
        Some(ViolatingPair {
            claim: "data",
            message_a: enc.message(i),
            message_b: enc.message(j),
            distance: m.data_distance,
        })
    } else if !df_ok {
        let (i, j) = m.function_witness.expect("finite d_f has a witness");
        Some(ViolatingPair {
            claim: "function",
            message_a: enc.message(i),
            message_b: enc.message(j),
            distance: m.function_distance.finite().expect("finite when violated"),
        })
    } else {
        None
    };
    Ok(VerifyReport {
        pass: dd_ok && df_ok,
        claimed_dd,
        claimed_df,
        measured_dd: m.data_distance,
        measured_df: m.function_distance,
        violation,
    })
}

/// Label assignment for the two-step construction: each function value in
/// ascending order takes the next codeword of the label code.
pub fn default_label_index(f: &FunctionSpec, function_code: &Code) -> Result<BTreeMap<Label, usize>> {
    if function_code.length() == 0 {
        return Ok(f.image().iter().map(|&l| (l, 0)).collect());
    }
    if function_code.size() < f.num_values() {
        return Err(Error::TooFewCodewords);
    }
    Ok(f.image().iter().enumerate().map(|(i, &l)| (l, i)).collect())
}

/// The two-step construction: encode the message with an inner code, then
/// append the label codeword assigned to its function value.
///
/// `inner` must list exactly one codeword per message (q^k of them, in
/// message order). The result is guaranteed to have d_d >= dMin(inner)
/// and d_f >= dMin(inner) + dMin(functionCode), and has redundancy
/// (n_inner - k) + n_functionCode.
pub fn two_step_construct(
    f: &FunctionSpec,
    inner: &Code,
    function_code: &Code,
    label_index: &BTreeMap<Label, usize>,
) -> Result<FccEncoding> {
    if inner.field() != f.field() || function_code.field() != f.field() {
        return Err(Error::FieldMismatch);
    }
    if inner.size() != f.domain_size() {
        return Err(Error::BadParameter(format!(
            "inner code has {} codewords, domain has {} messages",
            inner.size(),
            f.domain_size()
        )));
    }
    let mut used = BTreeSet::new();
    for label in f.image() {
        let &idx = label_index.get(label).ok_or_else(|| {
            Error::BadParameter(format!("label index is missing function value {label}"))
        })?;
        if idx >= function_code.size() {
            return Err(Error::BadParameter(format!(
                "label {label} points at codeword {idx}, but the label code has {} words",
                function_code.size()
            )));
        }
        // A length-0 label code carries no information, so sharing its
        // single empty word is fine; otherwise assignments must not collide.
        if !used.insert(idx) && function_code.length() > 0 {
            return Err(Error::BadParameter(format!(
                "label index is not injective: codeword {idx} assigned twice"
            )));
        }
    }
    let words = (0..inner.size())
        .map(|i| {
            let mut symbols = inner.word(i).symbols().to_vec();
            let label = f.evaluate_index(i)?;
            symbols.extend_from_slice(function_code.word(label_index[&label]).symbols());
            Word::new(f.field().clone(), symbols)
        })
        .collect::<Result<Vec<_>>>()?;
    FccEncoding::new(f.clone(), words)
}

/// Verdict on whether a strict encoding can exist over a given data code.
#[derive(Serialize, Clone, Debug)]
#[serde(rename_all = "camelCase")]
pub struct StrictVerdict {
    pub df: usize,
    pub num_values: u32,
    /// Q(G_{d_f-1}) of the data code.
    pub component_count: usize,
    pub feasible: bool,
    /// Exclusion rule applied when infeasible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<&'static str>,
    /// On feasible: codeword indices grouped into numValues classes whose
    /// pairwise cross distance is >= d_f (whole components).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<usize>>>,
}

/// Can some function with `num_values` values admit an encoding over
/// `code` with function distance >= `df` (strict, i.e. df > dMin)?
///
/// Feasible exactly when G_{df-1}(code) has at least `num_values`
/// components: distinct values must occupy distinct components, and
/// conversely whole components can be labeled freely.
pub fn strict_feasible(code: &Code, num_values: u32, df: usize) -> Result<StrictVerdict> {
    if num_values < 2 {
        return Err(Error::BadParameter(
            "strict feasibility concerns functions with at least 2 values".into(),
        ));
    }
    let dmin = code.dmin().ok_or(Error::TooFewCodewords)?;
    if df <= dmin {
        return Err(Error::StrictnessViolated { df, dmin });
    }
    let g = graph::build_alpha_graph(code, df - 1)?;
    let q = g.component_count();
    let feasible = num_values as usize <= q;
    let witness = feasible.then(|| {
        let members = g.members();
        let v = num_values as usize;
        let mut groups: Vec<Vec<usize>> = members[..v - 1].to_vec();
        groups.push(members[v - 1..].concat());
        groups
    });
    let theorem = if feasible {
        None
    } else if num_values == 2 && q == 1 {
        Some(CONNECTED_EXCLUSION)
    } else {
        Some(COMPONENT_COUNT_EXCLUSION)
    };
    Ok(StrictVerdict { df, num_values, component_count: q, feasible, theorem, witness })
}

/// One row of a feasibility report: can a 2-valued function be strictly
/// protected at this d_f?
#[derive(Serialize, Clone, Debug)]
#[serde(rename_all = "camelCase")]
pub struct FeasibilityVerdict {
    pub df: usize,
    pub num_values: u32,
    pub components: usize,
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<&'static str>,
}

/// Covering-radius consistency check: G_alpha is connected for every
/// alpha >= 2R+1, so no strict d_f can exceed 2R+1.
#[derive(Serialize, Clone, Debug)]
#[serde(rename_all = "camelCase")]
pub struct CoveringCheck {
    pub radius: i64,
    pub method: &'static str,
    /// 2R + 1, an upper bound on any strict d_f.
    pub strict_df_cap: i64,
    /// Whether the measured connectivity threshold respects the cap.
    pub consistent: bool,
}

/// Structural feasibility summary for a data code.
#[derive(Serialize, Clone, Debug)]
#[serde(rename_all = "camelCase")]
pub struct FeasibilityReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub q: u32,
    pub length: usize,
    pub size: usize,
    #[serde(rename = "dMin")]
    pub dmin: usize,
    #[serde(rename = "dMax")]
    pub dmax: usize,
    pub profile: Vec<ProfileEntry>,
    pub alpha_star: usize,
    /// Largest strict d_f admitting a >= 2-valued function, if any.
    pub max_strict_df: Option<usize>,
    pub verdicts: Vec<FeasibilityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covering: Option<CoveringCheck>,
}

/// Ambient/syndrome sweep budget for the report's covering check; kept
/// small because the check is a side dish, not the query.
const REPORT_SWEEP: usize = 1 << 16;

fn cheap_covering_radius(code: &Code) -> Option<CoveringResult> {
    if let Some(known) = covering::known_covering_radius(code) {
        return Some(known);
    }
    let q = code.field().order() as usize;
    let fits = |exp: usize| {
        let mut acc = 1usize;
        for _ in 0..exp {
            acc = match acc.checked_mul(q) {
                Some(v) if v <= REPORT_SWEEP => v,
                _ => return false,
            };
        }
        true
    };
    if fits(code.length()) {
        return covering::covering_radius_exact(code).ok();
    }
    if let Some(k) = code.dimension() {
        if fits(code.length() - k) {
            return covering::covering_radius_coset_leader(code).ok();
        }
    }
    None
}

/// Full structural analysis: component profile, connectivity threshold,
/// the best strict d_f (alpha* when alpha* > dMin, otherwise none), a
/// per-d_f verdict table for 2-valued functions, and the covering-radius
/// cap d_f <= 2R+1 when R is cheaply available.
pub fn feasibility_report(code: &Code) -> Result<FeasibilityReport> {
    let dmin = code.dmin().ok_or(Error::TooFewCodewords)?;
    let dmax = code.dmax().expect("dmax exists whenever dmin does");
    let profile = graph::component_profile(code)?;
    let alpha_star = graph::connectivity_threshold(code)?;
    let max_strict_df = (alpha_star > dmin).then_some(alpha_star);
    let verdicts = profile
        .iter()
        .map(|e| {
            let feasible = e.components >= 2;
            FeasibilityVerdict {
                df: e.alpha + 1,
                num_values: 2,
                components: e.components,
                feasible,
                theorem: (!feasible).then_some(CONNECTED_EXCLUSION),
            }
        })
        .collect();
    let covering = cheap_covering_radius(code).map(|r| CoveringCheck {
        radius: r.value,
        method: r.method.label(),
        strict_df_cap: 2 * r.value + 1,
        consistent: alpha_star as i64 <= 2 * r.value + 1,
    });
    Ok(FeasibilityReport {
        name: code.name().map(str::to_owned),
        q: code.field().order(),
        length: code.length(),
        size: code.size(),
        dmin,
        dmax,
        profile,
        alpha_star,
        max_strict_df,
        verdicts,
        covering,
    })
}

/// A redundancy lower bound derived from a classical parameter family.
#[derive(Serialize, Clone, Debug)]
#[serde(rename_all = "camelCase")]
pub struct RedundancyBound {
    /// "perfect-corollary" or "mds-corollary".
    pub source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    pub k: usize,
    pub d: usize,
    /// Code length witnessing the bound, when applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    /// The bound: r >= value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    pub applicable: bool,
}

/// Registry id for the perfect-code redundancy corollary.
pub const PERFECT_REDUNDANCY: &str = "perfect-redundancy-bound";
/// Registry id for the MDS redundancy corollary.
pub const MDS_REDUNDANCY: &str = "mds-redundancy-bound";

/// Redundancy bound r >= n-k+1 at perfect-code parameters: searches
/// n in (k, k+64] for q^(n-k) = sum_{i<=t} C(n,i)(q-1)^i with
/// t = (d-1)/2. Such parameter sets are sparse; when no n satisfies the
/// equality within the window the bound is reported inapplicable.
pub fn perfect_redundancy_bound(q: u32, k: usize, d: usize) -> Result<RedundancyBound> {
    if q < 2 {
        return Err(Error::BadParameter("field order must be at least 2".into()));
    }
    if k == 0 || d == 0 {
        return Err(Error::BadParameter("k and d must be at least 1".into()));
    }
    let t = (d - 1) / 2;
    let n = (k + 1..=k + 64).find(|&n| {
        BigUint::from(q as u64).pow((n - k) as u32) == code::ball_size(q, n, t)
    });
    Ok(RedundancyBound {
        source: "perfect-corollary",
        q: Some(q),
        k,
        d,
        n,
        value: n.map(|n| n - k + 1),
        applicable: n.is_some(),
    })
}

/// Redundancy bound r >= n-k+1 = d at MDS parameters n = k+d-1.
pub fn mds_redundancy_bound(k: usize, d: usize) -> Result<RedundancyBound> {
    if k == 0 || d == 0 {
        return Err(Error::BadParameter("k and d must be at least 1".into()));
    }
    Ok(RedundancyBound {
        source: "mds-corollary",
        q: None,
        k,
        d,
        n: Some(k + d - 1),
        value: Some(d),
        applicable: true,
    })
}

/// Outcome of a Monte Carlo error-injection run.
#[derive(Serialize, Clone, Copy, Debug)]
#[serde(rename_all = "camelCase")]
pub struct SimulationStats {
    pub trials: u64,
    pub t_data: usize,
    pub t_func: usize,
    pub data_successes: u64,
    pub function_successes: u64,
    pub data_recovery: f64,
    pub function_recovery: f64,
}

/// Per trial: corrupt a uniform message's codeword in tData (resp. tFunc)
/// distinct uniformly-chosen coordinates with uniform wrong symbols,
/// decode to the nearest codeword (lowest index on ties), and record
/// whether the message (resp. its function value) survived.
///
/// Requires 2*tData+1 <= d_d and 2*tFunc+1 <= d_f, under which both rates
/// are forced to 1.0; the harness exists to demonstrate exactly that.
/// Trial t draws from stream t of a counter-based generator, so results
/// are reproducible for a fixed seed and independent of thread count.
pub fn simulate_channel(
    enc: &FccEncoding,
    t_data: usize,
    t_func: usize,
    trials: u64,
    seed: u64,
) -> Result<SimulationStats> {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    let metrics = enc.measure();
    if 2 * t_data + 1 > metrics.data_distance {
        return Err(Error::BadParameter(format!(
            "tData = {t_data} exceeds the guarantee of d_d = {}",
            metrics.data_distance
        )));
    }
    if let Some(df) = metrics.function_distance.finite() {
        if 2 * t_func + 1 > df {
            return Err(Error::BadParameter(format!(
                "tFunc = {t_func} exceeds the guarantee of d_f = {df}"
            )));
        }
    }
    let m = enc.size();
    let n = enc.length();
    let q = enc.function().field().order();

    let run_trial = |trial: u64| -> (u64, u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let mut experiment = |t: usize| -> (usize, usize) {
            let msg = rng.gen_range(0..m);
            let mut symbols = enc.word(msg).symbols().to_vec();
            for pos in rand::seq::index::sample(&mut rng, n, t) {
                let offset = rng.gen_range(1..q);
                symbols[pos] = ((symbols[pos] as u32 + offset) % q) as u8;
            }
            let corrupted = Word::new(enc.function().field().clone(), symbols)
                .expect("corrupted symbols stay in the field");
            (msg, enc.nearest(&corrupted).expect("same field and length"))
        };
        let (sent, decoded) = experiment(t_data);
        let data_ok = (decoded == sent) as u64;
        let (sent, decoded) = experiment(t_func);
        let func_ok = (enc.label(decoded) == enc.label(sent)) as u64;
        (data_ok, func_ok)
    };

    let (data_successes, function_successes) = (0..trials)
        .into_par_iter()
        .map(run_trial)
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(SimulationStats {
        trials,
        t_data,
        t_func,
        data_successes,
        function_successes,
        data_recovery: data_successes as f64 / trials as f64,
        function_recovery: function_successes as f64 / trials as f64,
    })
}

/// A concrete error pattern that defeats data recovery.
#[derive(Serialize, Clone, Debug)]
#[serde(rename_all = "camelCase")]
pub struct Miscorrection {
    pub message_index: usize,
    pub positions: Vec<usize>,
    pub corrupted: Vec<u8>,
    pub decoded_index: usize,
}

/// Search for a t-error pattern that decodes to the wrong message,
/// demonstrating the limit of the data guarantee. Deterministic scan in
/// (message, positions, values) order; returns the first hit, or None if
/// every t-error pattern is corrected.
pub fn find_data_miscorrection(enc: &FccEncoding, t: usize) -> Result<Option<Miscorrection>> {
    let n = enc.length();
    let q = enc.function().field().order() as u64;
    if t > n {
        return Err(Error::BadParameter(format!("t = {t} exceeds length {n}")));
    }
    // Cost guard: M * C(n,t) * (q-1)^t patterns.
    let mut cost = enc.size() as u64;
    let mut binom = 1u64;
    for i in 0..t {
        binom = binom * (n - i) as u64 / (i + 1) as u64;
        cost = cost.saturating_mul(q - 1);
    }
    cost = cost.saturating_mul(binom);
    if cost > 1 << 24 {
        return Err(Error::SizeLimit(format!("{cost} error patterns exceed the search budget")));
    }

    let mut positions: Vec<usize> = (0..t).collect();
    loop {
        // All (q-1)^t wrong-value offsets for this position set, odometer order.
        let mut offsets = vec![1u32; t];
        loop {
            for msg in 0..enc.size() {
                let mut symbols = enc.word(msg).symbols().to_vec();
                for (slot, &pos) in positions.iter().enumerate() {
                    symbols[pos] = ((symbols[pos] as u32 + offsets[slot]) % q as u32) as u8;
                }
                let corrupted = Word::new(enc.function().field().clone(), symbols.clone())?;
                let decoded = enc.nearest(&corrupted)?;
                if decoded != msg {
                    return Ok(Some(Miscorrection {
                        message_index: msg,
                        positions: positions.clone(),
                        corrupted: symbols,
                        decoded_index: decoded,
                    }));
                }
            }
            // Next offset combination.
            let mut rolled_over = true;
            for slot in (0..t).rev() {
                offsets[slot] += 1;
                if offsets[slot] < q as u32 {
                    rolled_over = false;
                    break;
                }
                offsets[slot] = 1;
            }
            if rolled_over {
                break;
            }
        }
        // Next position combination (lexicographic).
        let mut advanced = false;
        for i in (0..t).rev() {
            if positions[i] < n - t + i {
                positions[i] += 1;
                for j in i + 1..t {
                    positions[j] = positions[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(None);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn parity_hamming_encoding() -> FccEncoding {
        let f = FunctionSpec::parity(gf2(), 4).unwrap();
        let inner = families::hamming(3).unwrap();
        let fc = families::repetition(2).unwrap();
        let idx = default_label_index(&f, &fc).unwrap();
        two_step_construct(&f, &inner, &fc, &idx).unwrap()
    }

    #[test]
    fn parity_and_coordinate_evaluate() {
        let f = FunctionSpec::parity(gf2(), 4).unwrap();
        assert_eq!(f.evaluate(&[0, 0, 0, 1]).unwrap(), 1);
        assert_eq!(f.evaluate(&[0, 0, 0, 0]).unwrap(), 0);
        assert_eq!(f.image(), &[0, 1]);
        let g = FunctionSpec::coordinate(gf2(), 4, 2).unwrap();
        assert_eq!(g.evaluate(&[0, 1, 1, 0]).unwrap(), 1);
        assert!(FunctionSpec::coordinate(gf2(), 4, 5).is_err());
        assert!(FunctionSpec::coordinate(gf2(), 4, 0).is_err());
    }

    #[test]
    fn weight_mod_and_table_evaluate() {
        let f3 = FieldSpec::prime(3).unwrap();
        let f = FunctionSpec::weight_mod(f3.clone(), 2, 3).unwrap();
        assert_eq!(f.evaluate(&[1, 2]).unwrap(), 2);
        assert_eq!(f.evaluate(&[0, 2]).unwrap(), 1);
        assert_eq!(f.image(), &[0, 1, 2]);
        assert!(FunctionSpec::weight_mod(f3.clone(), 2, 0).is_err());

        let t = FunctionSpec::table(f3.clone(), 1, vec![7, 7, 9]).unwrap();
        assert_eq!(t.evaluate(&[2]).unwrap(), 9);
        assert_eq!(t.image(), &[7, 9]);
        assert!(FunctionSpec::table(f3, 1, vec![1, 2]).is_err());

        // Parity over GF(2) is weight mod 2.
        let p = FunctionSpec::parity(gf2(), 3).unwrap();
        let w = FunctionSpec::weight_mod(gf2(), 3, 2).unwrap();
        for i in 0..8 {
            assert_eq!(p.evaluate_index(i).unwrap(), w.evaluate_index(i).unwrap());
        }
    }

    #[test]
    fn two_step_parity_hamming_metrics() {
        let enc = parity_hamming_encoding();
        assert_eq!(enc.length(), 9);
        assert_eq!(enc.redundancy(), 5);
        let m = enc.measure();
        assert_eq!(m.data_distance, 3);
        assert_eq!(m.function_distance, FunctionDistance::Finite(5));
        let report = verify_fcc(&enc, 3, 5).unwrap();
        assert!(report.pass);
        assert!(report.violation.is_none());
    }

    #[test]
    fn verify_reports_violations() {
        let enc = parity_hamming_encoding();
        let report = verify_fcc(&enc, 3, 6).unwrap();
        assert!(!report.pass);
        let v = report.violation.unwrap();
        assert_eq!(v.claim, "function");
        assert_eq!(v.distance, 5);
        // The reported pair really does disagree under f at distance 5.
        let f = enc.function();
        assert_ne!(f.evaluate(&v.message_a).unwrap(), f.evaluate(&v.message_b).unwrap());

        let report = verify_fcc(&enc, 4, 6).unwrap();
        assert!(!report.pass);
        assert_eq!(report.violation.unwrap().claim, "data");

        assert!(verify_fcc(&enc, 6, 5).is_err());
    }

    #[test]
    fn constant_function_distance_is_unconstrained() {
        let f = FunctionSpec::table(gf2(), 2, vec![5, 5, 5, 5]).unwrap();
        let inner = families::even_weight(3).unwrap();
        let fc = families::repetition(2).unwrap();
        let idx = default_label_index(&f, &fc).unwrap();
        let enc = two_step_construct(&f, &inner, &fc, &idx).unwrap();
        let m = enc.measure();
        assert_eq!(m.function_distance, FunctionDistance::Unconstrained);
        assert!(m.function_witness.is_none());
        // The sentinel satisfies any claim.
        assert!(verify_fcc(&enc, 1, 100).unwrap().pass);
        assert_eq!(serde_json::to_string(&m.function_distance).unwrap(), "\"unconstrained\"");
    }

    #[test]
    fn identity_function_makes_distances_equal() {
        let f = FunctionSpec::table(gf2(), 2, vec![0, 1, 2, 3]).unwrap();
        let inner = families::even_weight(3).unwrap();
        let fc = Code::from_list(gf2(), vec![vec![]]).unwrap();
        let idx = default_label_index(&f, &fc).unwrap();
        let enc = two_step_construct(&f, &inner, &fc, &idx).unwrap();
        let m = enc.measure();
        assert_eq!(m.data_distance, 2);
        assert_eq!(m.function_distance, FunctionDistance::Finite(2));
    }

    #[test]
    fn zero_length_label_code_degenerates_to_plain_ecc() {
        let f = FunctionSpec::parity(gf2(), 4).unwrap();
        let inner = families::hamming(3).unwrap();
        let fc = Code::from_list(gf2(), vec![vec![]]).unwrap();
        let idx = default_label_index(&f, &fc).unwrap();
        let enc = two_step_construct(&f, &inner, &fc, &idx).unwrap();
        assert_eq!(enc.length(), 7);
        assert_eq!(enc.redundancy(), 3);
        assert_eq!(enc.words(), inner.words());
        assert_eq!(enc.measure().data_distance, 3);
    }

    #[test]
    fn three_repetition_label_code_widens_the_gap() {
        let f = FunctionSpec::parity(gf2(), 4).unwrap();
        let inner = families::hamming(3).unwrap();
        let fc = families::repetition(3).unwrap();
        let idx = default_label_index(&f, &fc).unwrap();
        let enc = two_step_construct(&f, &inner, &fc, &idx).unwrap();
        assert_eq!(enc.redundancy(), 6);
        let m = enc.measure();
        assert!(m.data_distance >= 3);
        assert!(m.function_distance.satisfies(6));
    }

    #[test]
    fn two_step_rejects_bad_label_maps() {
        let f = FunctionSpec::parity(gf2(), 4).unwrap();
        let inner = families::hamming(3).unwrap();
        let fc = families::repetition(2).unwrap();
        let mut idx = BTreeMap::new();
        idx.insert(0, 0);
        // Missing label 1.
        assert!(two_step_construct(&f, &inner, &fc, &idx).is_err());
        // Non-injective assignment.
        idx.insert(1, 0);
        assert!(two_step_construct(&f, &inner, &fc, &idx).is_err());
        // Out-of-range index.
        idx.insert(1, 9);
        assert!(two_step_construct(&f, &inner, &fc, &idx).is_err());
    }

    fn six_word_code() -> Code {
        let rows = ["00000", "00001", "00010", "01111", "10111", "11111"]
            .iter()
            .map(|s| s.bytes().map(|b| b - b'0').collect())
            .collect();
        Code::from_list(gf2(), rows).unwrap()
    }

    #[test]
    fn strict_feasibility_of_six_word_code() {
        let c = six_word_code();
        let v = strict_feasible(&c, 2, 3).unwrap();
        assert!(v.feasible);
        assert_eq!(v.component_count, 2);
        assert_eq!(v.witness, Some(vec![vec![0, 1, 2], vec![3, 4, 5]]));
        assert_eq!(v.theorem, None);

        let v = strict_feasible(&c, 3, 3).unwrap();
        assert!(!v.feasible);
        assert_eq!(v.theorem, Some(COMPONENT_COUNT_EXCLUSION));

        assert!(matches!(
            strict_feasible(&c, 2, 1),
            Err(Error::StrictnessViolated { df: 1, dmin: 1 })
        ));
        assert!(strict_feasible(&c, 1, 3).is_err());
    }

    #[test]
    fn hamming_admits_no_strict_function_distance() {
        let c = families::hamming(3).unwrap();
        let v = strict_feasible(&c, 2, 4).unwrap();
        assert!(!v.feasible);
        assert_eq!(v.component_count, 1);
        assert_eq!(v.theorem, Some(CONNECTED_EXCLUSION));
    }

    #[test]
    fn witness_groups_are_separated() {
        let c = six_word_code();
        let v = strict_feasible(&c, 2, 3).unwrap();
        let groups = v.witness.unwrap();
        let words = |g: &Vec<usize>| g.iter().map(|&i| c.word(i).clone()).collect::<Vec<_>>();
        let d = crate::word::set_distance(&words(&groups[0]), &words(&groups[1])).unwrap();
        assert!(d >= 3);
    }

    #[test]
    fn feasibility_report_of_six_word_code() {
        let r = feasibility_report(&six_word_code()).unwrap();
        assert_eq!(r.dmin, 1);
        assert_eq!(r.dmax, 5);
        assert_eq!(r.alpha_star, 3);
        assert_eq!(r.max_strict_df, Some(3));
        assert_eq!(r.profile.len(), 5);
        assert_eq!(r.verdicts[1].df, 3);
        assert!(r.verdicts[1].feasible);
        assert!(!r.verdicts[2].feasible);
        // Exact sweep is affordable here: R = 2, cap = 5, alpha* = 3 <= 5.
        let cov = r.covering.unwrap();
        assert_eq!(cov.radius, 2);
        assert_eq!(cov.strict_df_cap, 5);
        assert!(cov.consistent);
    }

    #[test]
    fn feasibility_report_on_connected_codes_says_none() {
        let r = feasibility_report(&families::hamming(3).unwrap()).unwrap();
        assert_eq!(r.alpha_star, 3);
        assert_eq!(r.max_strict_df, None);
        assert_eq!(r.covering.as_ref().unwrap().radius, 1);
        assert_eq!(r.covering.as_ref().unwrap().method, "perfect");

        let f5 = FieldSpec::prime(5).unwrap();
        let rs = families::reed_solomon(f5, 4, 2, None).unwrap();
        let r = feasibility_report(&rs).unwrap();
        assert_eq!(r.max_strict_df, None);
    }

    #[test]
    fn perfect_parameter_bounds() {
        let b = perfect_redundancy_bound(2, 4, 3).unwrap();
        assert!(b.applicable);
        assert_eq!(b.n, Some(7));
        assert_eq!(b.value, Some(4));

        let b = perfect_redundancy_bound(2, 12, 7).unwrap();
        assert_eq!(b.n, Some(23));
        assert_eq!(b.value, Some(12));

        let b = perfect_redundancy_bound(2, 2, 3).unwrap();
        assert!(!b.applicable);
        assert_eq!(b.value, None);
    }

    #[test]
    fn mds_parameter_bounds() {
        assert_eq!(mds_redundancy_bound(2, 3).unwrap().value, Some(3));
        assert_eq!(mds_redundancy_bound(7, 1).unwrap().value, Some(1));
        assert_eq!(mds_redundancy_bound(4, 5).unwrap().value, Some(5));
        assert_eq!(mds_redundancy_bound(4, 5).unwrap().n, Some(8));
        assert!(mds_redundancy_bound(0, 3).is_err());
    }

    #[test]
    fn simulation_within_guarantees_never_fails() {
        let enc = parity_hamming_encoding();
        let stats = simulate_channel(&enc, 1, 2, 2000, 99).unwrap();
        assert_eq!(stats.data_recovery, 1.0);
        assert_eq!(stats.function_recovery, 1.0);
        assert_eq!(stats.data_successes, 2000);
        // Same seed, same counts.
        let again = simulate_channel(&enc, 1, 2, 2000, 99).unwrap();
        assert_eq!(again.data_successes, stats.data_successes);
    }

    #[test]
    fn simulation_rejects_claims_beyond_guarantees() {
        let enc = parity_hamming_encoding();
        assert!(simulate_channel(&enc, 2, 2, 10, 1).is_err());
        assert!(simulate_channel(&enc, 1, 3, 10, 1).is_err());
    }

    #[test]
    fn two_errors_can_defeat_data_recovery() {
        let enc = parity_hamming_encoding();
        // One error is always corrected (d_d = 3 = 2*1+1).
        assert!(find_data_miscorrection(&enc, 1).unwrap().is_none());
        // Two errors can land nearer a different codeword.
        let hit = find_data_miscorrection(&enc, 2).unwrap().unwrap();
        assert_ne!(hit.decoded_index, hit.message_index);
        assert_eq!(hit.positions.len(), 2);
        let w = Word::new(gf2(), hit.corrupted.clone()).unwrap();
        assert_eq!(enc.word(hit.message_index).dist(&w), 2);
        // And the decoder really prefers the other codeword.
        assert!(enc.word(hit.decoded_index).dist(&w) <= 2);
    }

    #[test]
    fn encoding_rejects_collisions_and_mismatches() {
        let f = FunctionSpec::parity(gf2(), 2).unwrap();
        let w = |s: &str| Word::new(gf2(), s.bytes().map(|b| b - b'0').collect()).unwrap();
        let dup = vec![w("000"), w("011"), w("000"), w("110")];
        assert!(matches!(FccEncoding::new(f.clone(), dup), Err(Error::DuplicateWords)));
        let short = vec![w("000"), w("011"), w("101")];
        assert!(FccEncoding::new(f.clone(), short).is_err());
        let ragged = vec![w("000"), w("011"), w("101"), Word::new(gf2(), vec![1, 0]).unwrap()];
        assert!(FccEncoding::new(f, ragged).is_err());
    }

    #[test]
    fn strict_feasibility_matches_partition_oracle_on_small_codes() {
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(3..=6);
            let m = rng.gen_range(2..=8.min(1usize << n));
            let mut rows: Vec<Vec<u8>> = Vec::new();
            while rows.len() < m {
                let w: Vec<u8> = (0..n).map(|_| rng.gen_range(0..=1)).collect();
                if !rows.contains(&w) {
                    rows.push(w);
                }
            }
            let c = Code::from_list(gf2(), rows).unwrap();
            let dmin = c.dmin().unwrap();
            let dmax = c.dmax().unwrap();
            for df in dmin + 1..=dmax {
                for v in 2..=4u32 {
                    let verdict = strict_feasible(&c, v, df).unwrap();
                    assert_eq!(
                        verdict.feasible,
                        partition_oracle(&c, v as usize, df),
                        "n={n} m={m} df={df} v={v}"
                    );
                }
            }
        }
    }

    /// Exhaustive search over partitions into exactly `v` nonempty groups
    /// with pairwise cross distance >= df.
    fn partition_oracle(c: &Code, v: usize, df: usize) -> bool {
        fn rec(c: &Code, v: usize, df: usize, next: usize, groups: &mut Vec<Vec<usize>>) -> bool {
            if next == c.size() {
                return groups.len() == v;
            }
            // Prune: even merging everything remaining can't fill v groups.
            if groups.len() + (c.size() - next) < v {
                return false;
            }
            for gi in 0..groups.len() {
                let clash = (0..groups.len()).any(|other| {
                    other != gi
                        && groups[other].iter().any(|&w| c.pair_distance(w, next) < df)
                });
                if !clash {
                    groups[gi].push(next);
                    if rec(c, v, df, next + 1, groups) {
                        return true;
                    }
                    groups[gi].pop();
                }
            }
            if groups.len() < v {
                let clash = groups
                    .iter()
                    .flatten()
                    .any(|&w| c.pair_distance(w, next) < df);
                if !clash {
                    groups.push(vec![next]);
                    if rec(c, v, df, next + 1, groups) {
                        return true;
                    }
                    groups.pop();
                }
            }
            false
        }
        rec(c, v, df, 0, &mut Vec::new())
    }
}
