//! Words (fixed-length symbol vectors) over a finite field, with the
//! Hamming metric. Words over GF(2) of length <= 64 additionally carry a
//! packed-bit representation so distance computations reduce to an XOR and
//! a popcount.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;

#[derive(Clone, PartialEq, Eq)]
pub struct Word {
    field: FieldSpec,
    symbols: Vec<u8>,
    packed: Option<u64>,
}

impl Word {
    pub fn new(field: FieldSpec, symbols: Vec<u8>) -> Result<Self> {
        for &s in &symbols {
            field.check_symbol(s)?;
        }
        let packed = pack(&field, &symbols);
        Ok(Word { field, symbols, packed })
    }

    pub fn zero(field: FieldSpec, len: usize) -> Self {
        let packed = (field.order() == 2 && len <= 64).then_some(0);
        Word { field, symbols: vec![0; len], packed }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> usize {
        match self.packed {
            Some(bits) => bits.count_ones() as usize,
            None => self.symbols.iter().filter(|&&s| s != 0).count(),
        }
    }

    /// Coordinate-wise sum.
    pub fn add(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let symbols: Vec<u8> =
            self.symbols.iter().zip(&other.symbols).map(|(&a, &b)| self.field.add(a, b)).collect();
        Ok(Word { field: self.field.clone(), packed: pack(&self.field, &symbols), symbols })
    }

    /// Coordinate-wise difference.
    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let symbols: Vec<u8> =
            self.symbols.iter().zip(&other.symbols).map(|(&a, &b)| self.field.sub(a, b)).collect();
        Ok(Word { field: self.field.clone(), packed: pack(&self.field, &symbols), symbols })
    }

    pub(crate) fn check_compatible(&self, other: &Word) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.symbols.len() != other.symbols.len() {
            return Err(Error::LengthMismatch { left: self.symbols.len(), right: other.symbols.len() });
        }
        Ok(())
    }

    /// Distance without compatibility checks; callers guarantee equal
    /// fields and lengths (e.g. codewords of one code).
    pub(crate) fn dist(&self, other: &Word) -> usize {
        match (self.packed, other.packed) {
            (Some(a), Some(b)) => (a ^ b).count_ones() as usize,
            _ => self.symbols.iter().zip(&other.symbols).filter(|(a, b)| a != b).count(),
        }
    }
}

fn pack(field: &FieldSpec, symbols: &[u8]) -> Option<u64> {
    if field.order() != 2 || symbols.len() > 64 {
        return None;
    }
    Some(symbols.iter().enumerate().fold(0u64, |acc, (i, &s)| acc | ((s as u64) << i)))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.order() <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Hamming distance between two words of equal length over the same field.
pub fn hamming_distance(u: &Word, v: &Word) -> Result<usize> {
    u.check_compatible(v)?;
    Ok(u.dist(v))
}

/// Hamming weight (distance from the zero word).
pub fn hamming_weight(u: &Word) -> usize {
    u.weight()
}

/// Minimum distance between two nonempty sets of words:
/// min over (a, b) in A x B of d(a, b).
pub fn set_distance(a: &[Word], b: &[Word]) -> Result<usize> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut best = usize::MAX;
    for u in a {
        for v in b {
            best = best.min(hamming_distance(u, v)?);
        }
    }
    Ok(best)
}

/// Digits of `index` in base q, most significant first, width `len`.
/// This is the canonical enumeration order of messages and ambient words.
pub fn index_to_symbols(q: u32, len: usize, index: usize) -> Vec<u8> {
    let mut out = vec![0u8; len];
    let mut rest = index;
    for slot in out.iter_mut().rev() {
        *slot = (rest % q as usize) as u8;
        rest /= q as usize;
    }
    debug_assert_eq!(rest, 0, "index out of range for q^len");
    out
}

/// Inverse of [`index_to_symbols`].
pub fn symbols_to_index(q: u32, symbols: &[u8]) -> usize {
    symbols.iter().fold(0usize, |acc, &d| acc * q as usize + d as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn w(bits: &str) -> Word {
        let symbols = bits.bytes().map(|b| b - b'0').collect();
        Word::new(gf2(), symbols).unwrap()
    }

    #[test]
    fn distances_of_reference_pairs() {
        assert_eq!(hamming_distance(&w("000000000"), &w("000111111")).unwrap(), 6);
        assert_eq!(hamming_distance(&w("01111"), &w("10111")).unwrap(), 2);
        assert_eq!(hamming_weight(&w("10111")), 4);
        assert_eq!(hamming_distance(&w("00000"), &w("00000")).unwrap(), 0);
    }

    #[test]
    fn mismatches_are_rejected() {
        let gf3 = FieldSpec::prime(3).unwrap();
        let a = w("0101");
        let b = Word::new(gf3, vec![0, 1, 0, 1]).unwrap();
        assert!(matches!(hamming_distance(&a, &b), Err(Error::FieldMismatch)));
        assert!(matches!(
            hamming_distance(&a, &w("01010")),
            Err(Error::LengthMismatch { left: 4, right: 5 })
        ));
        assert!(matches!(
            Word::new(gf2(), vec![0, 2]),
            Err(Error::SymbolOutOfRange { symbol: 2, order: 2 })
        ));
    }

    #[test]
    fn set_distance_of_triangle_clusters() {
        let a: Vec<Word> = ["00000", "00001", "00010"].iter().map(|s| w(s)).collect();
        let b: Vec<Word> = ["01111", "10111", "11111"].iter().map(|s| w(s)).collect();
        assert_eq!(set_distance(&a, &b).unwrap(), 3);
        assert!(matches!(set_distance(&a, &[]), Err(Error::EmptySet)));
    }

    #[test]
    fn set_distance_of_repetition_endpoints() {
        for n in [2usize, 5, 9] {
            let zero = Word::zero(gf2(), n);
            let ones = Word::new(gf2(), vec![1; n]).unwrap();
            assert_eq!(set_distance(&[zero], &[ones]).unwrap(), n);
        }
    }

    #[test]
    fn packed_and_unpacked_distances_agree() {
        let gf4 = FieldSpec::extension(2, 2).unwrap();
        let a = Word::new(gf4.clone(), vec![0, 1, 2, 3, 1]).unwrap();
        let b = Word::new(gf4, vec![0, 2, 2, 1, 1]).unwrap();
        assert!(a.packed.is_none());
        assert_eq!(hamming_distance(&a, &b).unwrap(), 2);

        let u = w("1011001");
        let v = w("0011010");
        assert!(u.packed.is_some());
        assert_eq!(hamming_distance(&u, &v).unwrap(), 3);
    }

    #[test]
    fn index_round_trip_is_lexicographic() {
        assert_eq!(index_to_symbols(2, 4, 1), vec![0, 0, 0, 1]);
        assert_eq!(index_to_symbols(2, 4, 9), vec![1, 0, 0, 1]);
        assert_eq!(index_to_symbols(5, 3, 7), vec![0, 1, 2]);
        for q in [2u32, 3, 5] {
            for i in 0..(q as usize).pow(3) {
                assert_eq!(symbols_to_index(q, &index_to_symbols(q, 3, i)), i);
            }
        }
    }

    #[test]
    fn display_uses_compact_digits_for_small_fields() {
        assert_eq!(w("01101").to_string(), "01101");
        let gf16 = FieldSpec::extension(2, 4).unwrap();
        let x = Word::new(gf16, vec![0, 11, 15]).unwrap();
        assert_eq!(x.to_string(), "0,11,15");
    }
}
