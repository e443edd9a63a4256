//! Named code families with their textbook parameters.
//!
//! Hamming codes use the systematic form [I_k | P] where the parity
//! constraints are read off the binary expansions of the data-column
//! values (all m-bit values of weight >= 2, ascending), so codeword
//! identity is pinned bit for bit. The [23,12,7] Golay code is built
//! cyclically from g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1.

use crate::code::{Code, FamilyTag, RsInfo};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;

fn gf2() -> FieldSpec {
    FieldSpec::prime(2).expect("GF(2) is valid")
}

/// Binary Hamming code [2^m - 1, 2^m - 1 - m, 3]; m in 2..=4 under the
/// length cap. Parity coordinate b (0-based, appended after the data
/// coordinates) checks the data positions whose column value has bit b set.
pub fn hamming(m: u32) -> Result<Code> {
    if !(2..=4).contains(&m) {
        return Err(Error::BadParameter(format!(
            "hamming: m must be in 2..=4 (length cap), got {m}"
        )));
    }
    let n = (1usize << m) - 1;
    let k = n - m as usize;
    let data_values: Vec<u32> = (1..=n as u32).filter(|v| v.count_ones() >= 2).collect();
    debug_assert_eq!(data_values.len(), k);
    let mut rows = Vec::with_capacity(k);
    for (i, &v) in data_values.iter().enumerate() {
        let mut row = vec![0u8; n];
        row[i] = 1;
        for b in 0..m {
            row[k + b as usize] = ((v >> b) & 1) as u8;
        }
        rows.push(row);
    }
    let code = Code::from_generator(gf2(), Matrix::new(gf2(), rows)?)?;
    Ok(code.with_family(FamilyTag::Perfect(1)).with_name(format!("hamming-{m}")))
}

/// Extended binary Hamming code [2^m, 2^m - 1 - m, 4].
pub fn extended_hamming(m: u32) -> Result<Code> {
    Ok(hamming(m)?.extend_parity()?.with_name(format!("extended-hamming-{m}")))
}

/// Binary Golay code [23, 12, 7], perfect with t = 3.
pub fn golay() -> Result<Code> {
    // Ascending coefficients of the degree-11 generator polynomial.
    const G: [u8; 12] = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1];
    let mut rows = Vec::with_capacity(12);
    for i in 0..12 {
        let mut row = vec![0u8; 23];
        row[i..i + 12].copy_from_slice(&G);
        rows.push(row);
    }
    let code = Code::from_generator(gf2(), Matrix::new(gf2(), rows)?)?;
    debug_assert_eq!(code.dmin(), Some(7));
    Ok(code.with_family(FamilyTag::Perfect(3)).with_name("golay"))
}

/// Extended binary Golay code [24, 12, 8].
pub fn extended_golay() -> Result<Code> {
    Ok(golay()?.extend_parity()?.with_name("extended-golay"))
}

/// First-order Reed-Muller code RM(1, m) = [2^m, m + 1, 2^(m-1)];
/// m in 1..=4 under the length cap. Row 0 is all ones; row i evaluates
/// the i-th coordinate function (bit m - i of the position index, so
/// row 1 toggles in the largest blocks).
pub fn reed_muller1(m: u32) -> Result<Code> {
    if !(1..=4).contains(&m) {
        return Err(Error::BadParameter(format!(
            "rm1: m must be in 1..=4 (length cap), got {m}"
        )));
    }
    let n = 1usize << m;
    let mut rows = vec![vec![1u8; n]];
    for i in 1..=m {
        let bit = m - i;
        rows.push((0..n).map(|pos| ((pos >> bit) & 1) as u8).collect());
    }
    let code = Code::from_generator(gf2(), Matrix::new(gf2(), rows)?)?;
    debug_assert_eq!(code.dmin(), Some(n / 2));
    Ok(code.with_family(FamilyTag::ReedMuller1(m)).with_name(format!("rm1-{m}")))
}

/// Binary repetition code {0^n, 1^n}; trivially MDS.
pub fn repetition(n: usize) -> Result<Code> {
    if n == 0 {
        return Err(Error::BadParameter("repetition: length must be positive".into()));
    }
    let code = Code::from_generator(gf2(), Matrix::new(gf2(), vec![vec![1; n]])?)?;
    Ok(code.with_family(FamilyTag::Mds).with_name(format!("repetition-{n}")))
}

/// Binary even-weight code [n, n-1, 2]; the dual of repetition, MDS.
pub fn even_weight(n: usize) -> Result<Code> {
    if n < 2 {
        return Err(Error::BadParameter("even-weight: length must be at least 2".into()));
    }
    let mut rows = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        let mut row = vec![0u8; n];
        row[i] = 1;
        row[n - 1] = 1;
        rows.push(row);
    }
    let code = Code::from_generator(gf2(), Matrix::new(gf2(), rows)?)?;
    Ok(code.with_family(FamilyTag::Mds).with_name(format!("even-weight-{n}")))
}

/// Reed-Solomon code over `field`: evaluations of all polynomials of
/// degree < k at n distinct points (default 0, 1, ..., n-1 in the field's
/// integer encoding). Message symbol i is the coefficient of x^i.
/// Parameters [n, k, n - k + 1]; MDS.
pub fn reed_solomon(
    field: FieldSpec,
    n: usize,
    k: usize,
    points: Option<Vec<u8>>,
) -> Result<Code> {
    let q = field.order() as usize;
    if k == 0 || k > n {
        return Err(Error::BadParameter(format!("rs: need 1 <= k <= n, got k={k}, n={n}")));
    }
    if n > q {
        return Err(Error::BadParameter(format!(
            "rs: length {n} exceeds the field order {q} (evaluation points must be distinct)"
        )));
    }
    let points = match points {
        Some(pts) => {
            if pts.len() != n {
                return Err(Error::LengthMismatch { left: n, right: pts.len() });
            }
            for &p in &pts {
                field.check_symbol(p)?;
            }
            let mut sorted = pts.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != n {
                return Err(Error::BadParameter("rs: evaluation points must be distinct".into()));
            }
            pts
        }
        None => (0..n as u32).map(|x| x as u8).collect(),
    };

    // Row i holds the evaluations of x^i at every point.
    let mut rows = vec![vec![0u8; n]; k];
    for (j, &pt) in points.iter().enumerate() {
        let mut pw = 1u8;
        for row in rows.iter_mut() {
            row[j] = pw;
            pw = field.mul(pw, pt);
        }
    }
    let name = format!("rs-{q}-{n}-{k}");
    let gen = Matrix::new(field.clone(), rows)?;
    let code = Code::from_generator(field, gen)?;
    debug_assert_eq!(code.dmin(), Some(n - k + 1));
    Ok(code
        .with_family(FamilyTag::Mds)
        .with_rs_info(RsInfo { k, eval_points: points })
        .with_name(name))
}
