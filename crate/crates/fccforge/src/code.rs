//! Block codes over GF(q): an ordered list of distinct codewords of a
//! common length, optionally backed by a generator matrix (linear codes).
//!
//! Construction eagerly computes and caches the minimum and maximum
//! pairwise distances. For linear codes both reduce to weight scans
//! (translation invariance: d(u, v) = wt(u - v)); explicit codes fall back
//! to an all-pairs scan, parallelized for large codes.
//!
//! Enumeration caps keep everything exact and in memory: q^k <= 2^20
//! codewords and block length n <= 24.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;
use crate::word::{index_to_symbols, Word};

/// Largest supported codeword count (q^k for linear codes).
pub const MAX_WORDS: usize = 1 << 20;
/// Largest supported block length.
pub const MAX_LENGTH: usize = 24;

/// What is structurally known about a code at construction time.
/// `Perfect(t)` asserts Hamming-bound equality at radius t,
/// `QuasiPerfect(t)` a code that punctures to such a perfect code.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyTag {
    Perfect(usize),
    QuasiPerfect(usize),
    Mds,
    ReedMuller1(u32),
    Generic,
}

impl FamilyTag {
    pub fn label(&self) -> String {
        match self {
            FamilyTag::Perfect(t) => format!("perfect({t})"),
            FamilyTag::QuasiPerfect(t) => format!("quasiPerfect({t})"),
            FamilyTag::Mds => "mds".into(),
            FamilyTag::ReedMuller1(m) => format!("reedMuller1({m})"),
            FamilyTag::Generic => "generic".into(),
        }
    }
}

/// Evaluation structure of a Reed-Solomon code: codewords are the
/// evaluations of polynomials of degree < k at fixed distinct points.
#[derive(Clone, Debug)]
pub struct RsInfo {
    pub k: usize,
    pub eval_points: Vec<u8>,
}

#[derive(Clone)]
pub struct Code {
    field: FieldSpec,
    length: usize,
    words: Vec<Word>,
    generator: Option<Matrix>,
    dmin: Option<usize>,
    dmax: Option<usize>,
    family: FamilyTag,
    rs: Option<RsInfo>,
    name: Option<String>,
    index: OnceLock<HashMap<Vec<u8>, usize>>,
}

impl Code {
    /// The linear code generated by the rows of `gen`: all q^k combinations,
    /// ordered by message (messages enumerate base-q, most significant
    /// symbol first, so message index i encodes the i-th codeword).
    pub fn from_generator(field: FieldSpec, gen: Matrix) -> Result<Self> {
        if *gen.field() != field {
            return Err(Error::FieldMismatch);
        }
        let n = gen.cols();
        let k = gen.rows();
        if n > MAX_LENGTH {
            return Err(Error::SizeLimit(format!("block length {n} exceeds {MAX_LENGTH}")));
        }
        if k > n {
            return Err(Error::RankDeficient);
        }
        if gen.rank() != k {
            return Err(Error::RankDeficient);
        }
        let q = field.order();
        let m = checked_power(q, k)
            .filter(|&m| m <= MAX_WORDS)
            .ok_or_else(|| Error::SizeLimit(format!("{q}^{k} codewords exceed {MAX_WORDS}")))?;

        let mut words = Vec::with_capacity(m);
        for i in 0..m {
            let msg = index_to_symbols(q, k, i);
            let symbols = gen.mul_message(&msg);
            words.push(Word::new(field.clone(), symbols)?);
        }

        let (dmin, dmax) = linear_metrics(&words);
        Ok(Code {
            field,
            length: n,
            words,
            generator: Some(gen),
            dmin,
            dmax,
            family: FamilyTag::Generic,
            rs: None,
            name: None,
            index: OnceLock::new(),
        })
    }

    /// An explicit code from a list of codeword symbol rows. Rows must be
    /// nonempty, of equal length, and pairwise distinct.
    pub fn from_list(field: FieldSpec, rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyCode);
        }
        let n = rows[0].len();
        if n > MAX_LENGTH {
            return Err(Error::SizeLimit(format!("block length {n} exceeds {MAX_LENGTH}")));
        }
        if rows.len() > MAX_WORDS {
            return Err(Error::SizeLimit(format!("{} codewords exceed {MAX_WORDS}", rows.len())));
        }
        let mut words = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch { left: n, right: row.len() });
            }
            words.push(Word::new(field.clone(), row)?);
        }
        let mut seen: HashMap<&[u8], ()> = HashMap::with_capacity(words.len());
        for w in &words {
            if seen.insert(w.symbols(), ()).is_some() {
                return Err(Error::DuplicateWords);
            }
        }
        let (dmin, dmax) = pairwise_metrics(&words);
        Ok(Code {
            field,
            length: n,
            words,
            generator: None,
            dmin,
            dmax,
            family: FamilyTag::Generic,
            rs: None,
            name: None,
            index: OnceLock::new(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub(crate) fn with_family(mut self, family: FamilyTag) -> Self {
        self.family = family;
        self
    }

    pub(crate) fn with_rs_info(mut self, rs: RsInfo) -> Self {
        self.rs = Some(rs);
        self
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Block length n.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Number of codewords M.
    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Dimension k for linear codes.
    pub fn dimension(&self) -> Option<usize> {
        self.generator.as_ref().map(Matrix::rows)
    }

    pub fn is_linear(&self) -> bool {
        self.generator.is_some()
    }

    pub fn generator(&self) -> Option<&Matrix> {
        self.generator.as_ref()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    /// Minimum pairwise distance; `None` for single-word codes.
    pub fn dmin(&self) -> Option<usize> {
        self.dmin
    }

    /// Maximum pairwise distance; `None` for single-word codes.
    pub fn dmax(&self) -> Option<usize> {
        self.dmax
    }

    pub fn family(&self) -> FamilyTag {
        self.family
    }

    pub fn rs_info(&self) -> Option<&RsInfo> {
        self.rs.as_ref()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub(crate) fn pair_distance(&self, i: usize, j: usize) -> usize {
        self.words[i].dist(&self.words[j])
    }

    fn index(&self) -> &HashMap<Vec<u8>, usize> {
        self.index.get_or_init(|| {
            self.words.iter().enumerate().map(|(i, w)| (w.symbols().to_vec(), i)).collect()
        })
    }

    /// Position of `w` in the codeword list, if it is a codeword.
    pub fn index_of(&self, w: &Word) -> Option<usize> {
        if *w.field() != self.field || w.len() != self.length {
            return None;
        }
        self.index().get(w.symbols()).copied()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.index_of(w).is_some()
    }

    /// Distance from an ambient word to the code: min over codewords.
    pub fn distance_from(&self, x: &Word) -> Result<usize> {
        x.check_compatible(&self.words[0])?;
        Ok(self.words.iter().map(|c| c.dist(x)).min().expect("code is nonempty"))
    }

    /// Index of the nearest codeword; ties resolve to the lowest index.
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

    /// The dual code: the null space of the generator matrix.
    pub fn dual(&self) -> Result<Code> {
        let gen = self.generator.as_ref().ok_or(Error::NotLinear)?;
        let ns = gen.null_space();
        Code::from_generator(self.field.clone(), ns)
    }

    /// Minimum distance of the dual code.
    pub fn dual_distance(&self) -> Result<usize> {
        self.dual()?.dmin().ok_or_else(|| {
            Error::BadParameter("dual distance undefined: dual code has a single word".into())
        })
    }

    /// Append an overall parity coordinate -sum(c) to every codeword.
    /// Requires a linear code over a prime field. A perfect tag becomes
    /// quasi-perfect (puncturing the new coordinate recovers the input).
    pub fn extend_parity(&self) -> Result<Code> {
        let gen = self.generator.as_ref().ok_or(Error::NotLinear)?;
        if self.field.m() != 1 {
            return Err(Error::BadParameter(
                "parity extension is defined over prime fields".into(),
            ));
        }
        let f = &self.field;
        let rows: Vec<Vec<u8>> = gen
            .to_rows()
            .into_iter()
            .map(|mut row| {
                let sum = row.iter().fold(0u8, |acc, &c| f.add(acc, c));
                row.push(f.neg(sum));
                row
            })
            .collect();
        let extended = Code::from_generator(self.field.clone(), Matrix::new(f.clone(), rows)?)?;
        let family = match self.family {
            FamilyTag::Perfect(t) => FamilyTag::QuasiPerfect(t),
            _ => FamilyTag::Generic,
        };
        Ok(extended.with_family(family))
    }

    /// Delete coordinate `col` (0-based) from every codeword. Fails if two
    /// codewords would collapse onto each other.
    pub fn puncture(&self, col: usize) -> Result<Code> {
        if col >= self.length {
            return Err(Error::BadParameter(format!(
                "coordinate {col} out of range for length {}",
                self.length
            )));
        }
        if let Some(gen) = &self.generator {
            let punctured = gen.without_column(col);
            if punctured.rank() != gen.rows() {
                return Err(Error::PunctureMerges(col));
            }
            return Code::from_generator(self.field.clone(), punctured);
        }
        let rows: Vec<Vec<u8>> = self
            .words
            .iter()
            .map(|w| {
                let mut row = w.symbols().to_vec();
                row.remove(col);
                row
            })
            .collect();
        match Code::from_list(self.field.clone(), rows) {
            Err(Error::DuplicateWords) => Err(Error::PunctureMerges(col)),
            other => other,
        }
    }

    /// Hamming-bound equality: M * sum_{i<=t} C(n,i)(q-1)^i = q^n with
    /// t = (dmin-1)/2 and dmin odd.
    pub fn is_perfect(&self) -> bool {
        let Some(d) = self.dmin else { return false };
        if d % 2 == 0 {
            return false;
        }
        let t = (d - 1) / 2;
        let q = self.field.order();
        let n = self.length;
        let covered = BigUint::from(self.words.len() as u64) * ball_size(q, n, t);
        covered == BigUint::from(q as u64).pow(n as u32)
    }

    /// Singleton-bound equality: M = q^(n - dmin + 1).
    pub fn is_mds(&self) -> bool {
        let Some(d) = self.dmin else {
            // A single-word code has no pairwise distance; only the trivial
            // length-0 code is conventionally MDS, which we don't special-case.
            return false;
        };
        let q = BigUint::from(self.field.order() as u64);
        q.pow((self.length - d + 1) as u32) == BigUint::from(self.words.len() as u64)
    }

    /// Do the minimum-weight codewords span the whole code?
    pub fn min_weight_span(&self) -> Result<bool> {
        let gen = self.generator.as_ref().ok_or(Error::NotLinear)?;
        let k = gen.rows();
        let Some(d) = self.dmin else {
            return Ok(true); // zero-dimensional code, trivially spanned
        };
        let rows: Vec<Vec<u8>> = self
            .words
            .iter()
            .filter(|w| w.weight() == d)
            .map(|w| w.symbols().to_vec())
            .collect();
        let span = Matrix::new(self.field.clone(), rows)?;
        Ok(span.rank() == k)
    }
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.length == other.length
            && self.words.len() == other.words.len()
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a.symbols() == b.symbols())
    }
}

impl Eq for Code {}

impl std::fmt::Debug for Code {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Code")
            .field("field", &self.field)
            .field("n", &self.length)
            .field("M", &self.words.len())
            .field("dmin", &self.dmin)
            .field("family", &self.family.label())
            .finish()
    }
}

fn checked_power(q: u32, k: usize) -> Option<usize> {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = acc.checked_mul(q as u128)?;
        if acc > MAX_WORDS as u128 {
            return None;
        }
    }
    Some(acc as usize)
}

/// Volume of a Hamming ball of radius t in GF(q)^n.
pub(crate) fn ball_size(q: u32, n: usize, t: usize) -> BigUint {
    let mut total = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    let mut power = BigUint::from(1u32);
    for i in 0..=t {
        if i > 0 {
            binom = binom * BigUint::from((n - i + 1) as u64) / BigUint::from(i as u64);
            power *= BigUint::from((q - 1) as u64);
        }
        total += &binom * &power;
    }
    total
}

/// dmin/dmax of a linear code by weight scan (the zero word is index 0).
fn linear_metrics(words: &[Word]) -> (Option<usize>, Option<usize>) {
    if words.len() < 2 {
        return (None, None);
    }
    let mut min = usize::MAX;
    let mut max = 0;
    for w in &words[1..] {
        let wt = w.weight();
        min = min.min(wt);
        max = max.max(wt);
    }
    (Some(min), Some(max))
}

fn pairwise_metrics(words: &[Word]) -> (Option<usize>, Option<usize>) {
    let m = words.len();
    if m < 2 {
        return (None, None);
    }
    let row_extremes = |i: usize| -> (usize, usize) {
        let mut min = usize::MAX;
        let mut max = 0;
        for j in i + 1..m {
            let d = words[i].dist(&words[j]);
            min = min.min(d);
            max = max.max(d);
        }
        (min, max)
    };
    let merged = if m >= 1024 {
        (0..m - 1)
            .into_par_iter()
            .map(row_extremes)
            .reduce(|| (usize::MAX, 0), |a, b| (a.0.min(b.0), a.1.max(b.1)))
    } else {
        (0..m - 1).map(row_extremes).fold((usize::MAX, 0), |a, b| (a.0.min(b.0), a.1.max(b.1)))
    };
    (Some(merged.0), Some(merged.1))
}
