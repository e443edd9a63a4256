//! File formats and shorthand notations accepted on the command line.
//!
//! Codes travel as JSON documents carrying either a generator matrix, an
//! explicit codeword list, or a family name with parameters; encodings
//! bundle a code, a function description, and a message-to-codeword map.
//! Family and function shorthands ("hamming:3", "weight-mod:2") resolve
//! at parse time so everything downstream works on plain values.

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::families;
use crate::fcc::{FccEncoding, FunctionKind, FunctionSpec, Label};
use crate::field::{FieldDoc, FieldSpec};
use crate::matrix::Matrix;
use crate::word::{symbols_to_index, Word};

/// A code on disk: exactly one of `generator` (kind "linear"),
/// `codewords` (kind "explicit"), or `family` must be present.
#[derive(Serialize, Deserialize, Clone, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<Vec<Vec<u8>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codewords: Option<Vec<Vec<u8>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<u8>>,
}

impl CodeSpecDocument {
    pub fn resolve(&self) -> Result<Code> {
        let sources =
            [self.generator.is_some(), self.codewords.is_some(), self.family.is_some()];
        if sources.iter().filter(|&&b| b).count() != 1 {
            return Err(Error::InvalidDocument(
                "exactly one of generator, codewords, family must be present".into(),
            ));
        }
        let code = if let Some(family) = &self.family {
            self.resolve_family(family)?
        } else {
            let field: FieldSpec = self
                .field
                .clone()
                .ok_or_else(|| Error::InvalidDocument("field is required".into()))?
                .try_into()?;
            match (self.kind.as_deref(), &self.generator, &self.codewords) {
                (Some("linear"), Some(rows), None) => {
                    Code::from_generator(field.clone(), Matrix::new(field, rows.clone())?)?
                }
                (Some("explicit"), None, Some(rows)) => Code::from_list(field, rows.clone())?,
                (Some(other), ..) => {
                    return Err(Error::InvalidDocument(format!(
                        "kind {other:?} does not match the payload (linear takes generator, \
                         explicit takes codewords)"
                    )));
                }
                (None, ..) => {
                    return Err(Error::InvalidDocument(
                        "kind is required alongside generator or codewords".into(),
                    ));
                }
            }
        };
        Ok(match &self.name {
            Some(name) => code.with_name(name.clone()),
            None => code,
        })
    }

    fn resolve_family(&self, family: &str) -> Result<Code> {
        let forbid_inline = self.field.is_some() || self.kind.is_some();
        if forbid_inline {
            return Err(Error::InvalidDocument(
                "family documents carry their own field and kind".into(),
            ));
        }
        let want_m = || self.m.ok_or_else(|| Error::InvalidDocument("family needs m".into()));
        let want_n = || self.n.ok_or_else(|| Error::InvalidDocument("family needs n".into()));
        match family {
            "hamming" => families::hamming(want_m()?),
            "extended-hamming" => families::extended_hamming(want_m()?),
            "golay" => families::golay(),
            "extended-golay" => families::extended_golay(),
            "reed-muller1" => families::reed_muller1(want_m()?),
            "repetition" => families::repetition(want_n()?),
            "even-weight" => families::even_weight(want_n()?),
            "reed-solomon" => {
                let q = self.q.ok_or_else(|| Error::InvalidDocument("family needs q".into()))?;
                let k = self.k.ok_or_else(|| Error::InvalidDocument("family needs k".into()))?;
                families::reed_solomon(FieldSpec::of_order(q)?, want_n()?, k, self.points.clone())
            }
            other => Err(Error::InvalidDocument(format!("unknown family {other:?}"))),
        }
    }

    /// Explicit listing of an existing code (the lossless direction).
    pub fn from_code(code: &Code) -> CodeSpecDocument {
        CodeSpecDocument {
            name: code.name().map(str::to_owned),
            field: Some(code.field().clone().into()),
            kind: Some("explicit".into()),
            codewords: Some(code.words().iter().map(|w| w.symbols().to_vec()).collect()),
            ..CodeSpecDocument::default()
        }
    }
}

/// Families nameable as "name" or "name:arg[:arg...]" on the command line.
const FAMILY_ALIASES: &[(&str, &str)] = &[
    ("hamming", "hamming"),
    ("ext-hamming", "extended-hamming"),
    ("extended-hamming", "extended-hamming"),
    ("golay", "golay"),
    ("ext-golay", "extended-golay"),
    ("extended-golay", "extended-golay"),
    ("rm1", "reed-muller1"),
    ("reed-muller1", "reed-muller1"),
    ("rep", "repetition"),
    ("repetition", "repetition"),
    ("even", "even-weight"),
    ("even-weight", "even-weight"),
    ("rs", "reed-solomon"),
    ("reed-solomon", "reed-solomon"),
];

/// Parse "hamming:3", "rs:5:4:2", "golay", ... into a family document.
/// Returns None when the head is not a family name (the argument is then
/// treated as a file path).
pub fn parse_family_shorthand(arg: &str) -> Option<CodeSpecDocument> {
    let mut parts = arg.split(':');
    let head = parts.next()?;
    let canonical = FAMILY_ALIASES.iter().find(|(a, _)| *a == head)?.1;
    let args: Option<Vec<u64>> = parts.map(|t| t.parse().ok()).collect();
    let args = args?;
    let mut doc = CodeSpecDocument { family: Some(canonical.into()), ..Default::default() };
    match (canonical, args.as_slice()) {
        ("hamming" | "extended-hamming" | "reed-muller1", [m]) => doc.m = Some(*m as u32),
        ("golay" | "extended-golay", []) => {}
        ("repetition" | "even-weight", [n]) => doc.n = Some(*n as usize),
        ("reed-solomon", [q, n, k]) => {
            doc.q = Some(*q as u32);
            doc.n = Some(*n as usize);
            doc.k = Some(*k as usize);
        }
        _ => return None,
    }
    Some(doc)
}

/// Resolve a command-line code argument: family shorthand, or a path to
/// a code-spec JSON file. Returns the code and the exact text that
/// determined it (for input digests).
pub fn load_code(arg: &str) -> Result<(Code, String)> {
    if let Some(doc) = parse_family_shorthand(arg) {
        return Ok((doc.resolve()?, arg.to_owned()));
    }
    let text = std::fs::read_to_string(arg)?;
    let doc: CodeSpecDocument = serde_json::from_str(&text)?;
    Ok((doc.resolve()?, text))
}

/// Parse a word as comma-separated symbols ("1,0,4,3") or, for orders up
/// to 10, as a digit string ("1043").
pub fn parse_word(field: &FieldSpec, arg: &str) -> Result<Word> {
    let symbols: Vec<u8> = if arg.contains(',') {
        arg.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::InvalidDocument(format!("bad symbol {t:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        arg.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::InvalidDocument(format!("bad symbol {c:?}")))
            })
            .collect::<Result<_>>()?
    };
    Word::new(field.clone(), symbols)
}

/// Function description inside encoding files.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct FunctionDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<FunctionParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Label>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct FunctionParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
}

impl FunctionDoc {
    pub fn to_function(&self, field: FieldSpec, k: usize) -> Result<FunctionSpec> {
        let want = |v: Option<u32>, name: &str| {
            v.ok_or_else(|| Error::InvalidDocument(format!("function needs params.{name}")))
        };
        match self.kind.as_str() {
            "parity" => FunctionSpec::parity(field, k),
            "weight-mod" => {
                let s = want(self.params.as_ref().and_then(|p| p.s), "s")?;
                FunctionSpec::weight_mod(field, k, s)
            }
            "coordinate" => {
                let i = self
                    .params
                    .as_ref()
                    .and_then(|p| p.i)
                    .ok_or_else(|| Error::InvalidDocument("function needs params.i".into()))?;
                FunctionSpec::coordinate(field, k, i)
            }
            "table" => {
                let entries = self
                    .table
                    .clone()
                    .ok_or_else(|| Error::InvalidDocument("table function needs table".into()))?;
                FunctionSpec::table(field, k, entries)
            }
            other => Err(Error::InvalidDocument(format!("unknown function kind {other:?}"))),
        }
    }

    pub fn from_function(f: &FunctionSpec) -> FunctionDoc {
        let (kind, params, table) = match f.kind() {
            FunctionKind::Parity => ("parity", None, None),
            FunctionKind::WeightMod(s) => {
                ("weight-mod", Some(FunctionParams { s: Some(*s), i: None }), None)
            }
            FunctionKind::Coordinate(i) => {
                ("coordinate", Some(FunctionParams { s: None, i: Some(*i) }), None)
            }
            FunctionKind::Table(t) => ("table", None, Some(t.clone())),
        };
        FunctionDoc { kind: kind.into(), params, table }
    }
}

/// Parse "parity", "weight-mod:2", or "coordinate:1" into a function
/// over the given message space.
pub fn parse_function_shorthand(arg: &str, field: FieldSpec, k: usize) -> Result<FunctionSpec> {
    let (head, rest) = match arg.split_once(':') {
        Some((h, r)) => (h, Some(r)),
        None => (arg, None),
    };
    let want = |name: &str| -> Result<u64> {
        rest.and_then(|r| r.parse().ok())
            .ok_or_else(|| Error::BadParameter(format!("{head} needs a numeric {name} argument")))
    };
    match head {
        "parity" => FunctionSpec::parity(field, k),
        "weight-mod" => FunctionSpec::weight_mod(field, k, want("modulus")? as u32),
        "coordinate" => FunctionSpec::coordinate(field, k, want("index")? as usize),
        other => Err(Error::BadParameter(format!("unknown function {other:?}"))),
    }
}

/// An encoding on disk: the codeword pool, the function, and a map
/// listing [message, codeword index] pairs covering every message.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct EncodingDocument {
    pub code: CodeSpecDocument,
    pub function: FunctionDoc,
    pub map: Vec<(Vec<u8>, usize)>,
}

impl EncodingDocument {
    pub fn to_encoding(&self) -> Result<FccEncoding> {
        let pool = self.code.resolve()?;
        let field = pool.field().clone();
        let first = self
            .map
            .first()
            .ok_or_else(|| Error::InvalidDocument("encoding map is empty".into()))?;
        let k = first.0.len();
        let function = self.function.to_function(field.clone(), k)?;
        let m = function.domain_size();
        if self.map.len() != m {
            return Err(Error::InvalidDocument(format!(
                "map lists {} messages, the domain has {m}",
                self.map.len()
            )));
        }
        let mut words: Vec<Option<Word>> = vec![None; m];
        for (msg, idx) in &self.map {
            if msg.len() != k {
                return Err(Error::InvalidDocument("messages differ in length".into()));
            }
            for &s in msg {
                field.check_symbol(s)?;
            }
            if *idx >= pool.size() {
                return Err(Error::InvalidDocument(format!(
                    "map points at codeword {idx}, the pool has {}",
                    pool.size()
                )));
            }
            let slot = &mut words[symbols_to_index(field.order(), msg)];
            if slot.is_some() {
                return Err(Error::InvalidDocument(format!("message {msg:?} mapped twice")));
            }
            *slot = Some(pool.word(*idx).clone());
        }
        let words = words
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidDocument("map does not cover every message".into()))?;
        FccEncoding::new(function, words)
    }

    pub fn from_encoding(enc: &FccEncoding) -> EncodingDocument {
        let field = enc.function().field().clone();
        let pool = Code::from_list(
            field,
            enc.words().iter().map(|w| w.symbols().to_vec()).collect(),
        )
        .expect("encoding words are valid and distinct");
        EncodingDocument {
            code: CodeSpecDocument::from_code(&pool),
            function: FunctionDoc::from_function(enc.function()),
            map: (0..enc.size()).map(|i| (enc.message(i), i)).collect(),
        }
    }
}

/// Read an encoding file. Returns the encoding and the raw text (for
/// input digests).
pub fn load_encoding(path: &str) -> Result<(FccEncoding, String)> {
    let text = std::fs::read_to_string(path)?;
    let doc: EncodingDocument = serde_json::from_str(&text)?;
    Ok((doc.to_encoding()?, text))
}

/// Message length for a code used as the inner step of a construction:
/// its dimension when linear, otherwise the k with q^k codewords.
pub fn message_dimension(code: &Code) -> Result<usize> {
    if let Some(k) = code.dimension() {
        return Ok(k);
    }
    let q = code.field().order() as usize;
    let mut acc = 1usize;
    let mut k = 0;
    while acc < code.size() {
        acc *= q;
        k += 1;
    }
    if acc == code.size() {
        Ok(k)
    } else {
        Err(Error::BadParameter(format!(
            "inner code must have q^k codewords, got {}",
            code.size()
        )))
    }
}
