//! Exact weight enumerators, minimum distance, the MacWilliams transform,
//! optimality classification, and entanglement-assisted quantum code
//! parameters.
//!
//! Exhaustive enumeration walks one representative per 1-dimensional
//! subspace, so a dimension-`k` code costs `(4^k - 1)/3` steps.  Codewords
//! are packed into two bit planes per machine word and updated
//! incrementally: advancing the coefficient odometer by one digit is a
//! single XOR of a pre-scaled row, so the inner loop carries no field
//! arithmetic at all.

use crate::code::LinearCode;
use crate::corpus::bounds::BoundsTable;
use crate::gf4::Gf4;
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default cap on the enumerated dimension (`(4^13 - 1)/3 ≈ 22.4M`
/// representatives).
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 13;

/// Exact weight distribution `A_0 ... A_n` of an `[n,k]` code.
///
/// Coefficients are arbitrary-precision: the MacWilliams transform of a
/// long code's enumerator describes its dual, whose counts overflow any
/// fixed width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    n: usize,
    k: usize,
    coeffs: Vec<BigUint>,
}

impl WeightEnumerator {
    /// Wraps a coefficient vector, checking the normalization invariants:
    /// `A_0 = 1`, `sum A_i = 4^k`, and `3 | A_i` for `i >= 1`.
    pub fn new(n: usize, k: usize, coeffs: Vec<BigUint>) -> WeightEnumerator {
        assert_eq!(coeffs.len(), n + 1, "need n+1 coefficients");
        let w = WeightEnumerator { n, k, coeffs };
        w.assert_normalized();
        w
    }

    fn assert_normalized(&self) {
        assert!(self.coeffs[0].is_one(), "A_0 must be 1");
        let total: BigUint = self.coeffs.iter().sum();
        assert_eq!(total, BigUint::from(4u32).pow(self.k as u32), "sum A_i must be 4^k");
        let three = BigUint::from(3u32);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            assert!((c % &three).is_zero(), "A_{i} not divisible by 3");
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigUint {
        &self.coeffs[i]
    }

    /// Smallest `i >= 1` with `A_i > 0`; `None` for the zero-dimensional
    /// enumerator `1`.
    pub fn min_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&i| !self.coeffs[i].is_zero())
    }

    /// Nonzero terms as `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> Vec<(usize, BigUint)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    /// Compact polynomial rendering, `1 + 15z^4` style.
    pub fn polynomial_string(&self) -> String {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i == 0 {
                parts.push(c.to_string());
            } else {
                parts.push(format!("{c} z^{i}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Packed codeword: two bit planes (low and high encoding bit) per word.
#[derive(Clone)]
struct Packed {
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Packed {
    fn zero(words: usize) -> Packed {
        Packed { lo: vec![0; words], hi: vec![0; words] }
    }

    fn from_row(row: &[Gf4], scale: Gf4, words: usize) -> Packed {
        let mut p = Packed::zero(words);
        for (j, &x) in row.iter().enumerate() {
            let d = (scale * x).digit();
            p.lo[j / 64] |= ((d & 1) as u64) << (j % 64);
            p.hi[j / 64] |= (((d >> 1) & 1) as u64) << (j % 64);
        }
        p
    }

    #[inline]
    fn xor_assign(&mut self, other: &Packed) {
        for (a, b) in self.lo.iter_mut().zip(&other.lo) {
            *a ^= b;
        }
        for (a, b) in self.hi.iter_mut().zip(&other.hi) {
            *a ^= b;
        }
    }

    #[inline]
    fn weight(&self) -> usize {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| (l | h).count_ones() as usize)
            .sum()
    }
}

/// Histogram of the weights of one representative per projective point of
/// the row space (counts must be multiplied by 3 for the full distribution).
fn representative_histogram(code: &LinearCode) -> Vec<u64> {
    let n = code.n();
    let k = code.k();
    let words = n.div_ceil(64);
    let gen = code.generator();
    // scaled[i][0] = 1*row_i, scaled[i][1] = 3*row_i: the odometer digit
    // sequence 0->1->2->3->0 has GF(4) deltas 1, 3, 1, 3.
    let scaled: Vec<[Packed; 2]> = (0..k)
        .map(|i| {
            [
                Packed::from_row(gen.row(i), Gf4::ONE, words),
                Packed::from_row(gen.row(i), Gf4::OMEGABAR, words),
            ]
        })
        .collect();

    let mut hist = vec![0u64; n + 1];
    let mut digits = vec![0u8; k];
    for lead in 0..k {
        // representatives whose first nonzero coefficient (at `lead`) is 1
        let mut cur = scaled[lead][0].clone();
        hist[cur.weight()] += 1;
        let tail = k - lead - 1;
        if tail == 0 {
            continue;
        }
        digits[..tail].fill(0);
        let total = 4u64.pow(tail as u32);
        for _ in 1..total {
            let mut i = 0;
            loop {
                let d = digits[i];
                // delta of +1 in the cycle 0,1,2,3: encodings xor to 1,3,1,3
                let which = (d & 1) as usize;
                cur.xor_assign(&scaled[lead + 1 + i][which]);
                if d == 3 {
                    digits[i] = 0;
                    i += 1; // carry
                } else {
                    digits[i] = d + 1;
                    break;
                }
            }
            hist[cur.weight()] += 1;
        }
    }
    hist
}

/// Exact weight enumerator by exhaustive enumeration of the code itself.
pub fn enumerate_weights(code: &LinearCode) -> Result<WeightEnumerator> {
    enumerate_weights_limited(code, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn enumerate_weights_limited(code: &LinearCode, limit: usize) -> Result<WeightEnumerator> {
    if code.k() > limit {
        return Err(Error::LimitExceeded { k: code.k(), nk: code.n() - code.k(), limit });
    }
    let hist = representative_histogram(code);
    let mut coeffs: Vec<BigUint> = hist.iter().map(|&c| BigUint::from(3 * c)).collect();
    coeffs[0] = BigUint::one();
    Ok(WeightEnumerator::new(code.n(), code.k(), coeffs))
}

/// Quaternary Krawtchouk polynomial
/// `K_j(i) = sum_s (-1)^s 3^(j-s) C(i,s) C(n-i, j-s)`.
fn krawtchouk(n: usize, j: usize, i: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for s in 0..=j {
        let a = binomial(i, s);
        let b = binomial(n - i, j - s);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let term = a * b * BigInt::from(3).pow((j - s) as u32);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..r.min(n - r) {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// The MacWilliams transform: the dual code's enumerator,
/// `A'_j = 4^(-k) sum_i A_i K_j(i)`.  All intermediates are exact big
/// integers; a non-integral or negative output signals an invalid input.
pub fn macwilliams_transform(w: &WeightEnumerator) -> Result<WeightEnumerator> {
    let n = w.n();
    let k = w.k();
    let scale = BigInt::from(4).pow(k as u32);
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for i in 0..=n {
            let a = BigInt::from(w.coeff(i).clone());
            if a.is_zero() {
                continue;
            }
            acc += a * krawtchouk(n, j, i);
        }
        if acc.is_negative() || (&acc % &scale) != BigInt::zero() {
            return Err(Error::InvalidTransform(j));
        }
        out.push((acc / &scale).to_biguint().expect("non-negative"));
    }
    Ok(WeightEnumerator::new(n, n - k, out))
}

/// Enumerator computed on the dual side: enumerate the Hermitian dual
/// exhaustively, then transform back.  For the full space the dual is the
/// zero code, whose enumerator is the constant 1.
pub fn weight_enumerator_via_dual(code: &LinearCode) -> Result<WeightEnumerator> {
    weight_enumerator_via_dual_limited(code, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn weight_enumerator_via_dual_limited(
    code: &LinearCode,
    limit: usize,
) -> Result<WeightEnumerator> {
    let n = code.n();
    let k = code.k();
    if n - k > limit {
        return Err(Error::LimitExceeded { k, nk: n - k, limit });
    }
    let dual_enum = if k == n {
        let mut coeffs = vec![BigUint::zero(); n + 1];
        coeffs[0] = BigUint::one();
        WeightEnumerator::new(n, 0, coeffs)
    } else {
        enumerate_weights_limited(&code.hermitian_dual()?, limit)?
    };
    macwilliams_transform(&dual_enum)
}

/// Exact enumerator by the cheaper of the two engines.
pub fn weight_enumerator(code: &LinearCode) -> Result<WeightEnumerator> {
    weight_enumerator_limited(code, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn weight_enumerator_limited(code: &LinearCode, limit: usize) -> Result<WeightEnumerator> {
    let k = code.k();
    let nk = code.n() - k;
    if k <= nk {
        if k <= limit {
            enumerate_weights_limited(code, limit)
        } else {
            Err(Error::LimitExceeded { k, nk, limit })
        }
    } else if nk <= limit {
        weight_enumerator_via_dual_limited(code, limit)
    } else if k <= limit {
        enumerate_weights_limited(code, limit)
    } else {
        Err(Error::LimitExceeded { k, nk, limit })
    }
}

/// Minimum distance, engine chosen automatically.
pub fn min_distance(code: &LinearCode) -> Result<usize> {
    min_distance_limited(code, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn min_distance_limited(code: &LinearCode, limit: usize) -> Result<usize> {
    let w = weight_enumerator_limited(code, limit)?;
    Ok(w.min_weight().expect("k >= 1 codes have nonzero words"))
}

/// Parameters `[[n, 2k-n+c, d; c]]` of the entanglement-assisted quantum
/// code derived from a classical `[n,k,d]` code; `c` is the rank of
/// `H H†` for a parity-check matrix `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EaqeccParams {
    pub n: usize,
    pub dim: isize,
    pub d: usize,
    pub c: usize,
}

impl std::fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{},{},{};{}]]", self.n, self.dim, self.d, self.c)
    }
}

pub fn eaqecc_params(code: &LinearCode, d: usize) -> EaqeccParams {
    let n = code.n();
    let k = code.k();
    let c = if k == n { 0 } else { code.hermitian_dual().expect("k < n").gram_rank() };
    EaqeccParams { n, dim: 2 * k as isize - n as isize + c as isize, d, c }
}

/// How a code's distance compares with the referenced best-known linear
/// distance for its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OptimalityStatus {
    OptimalLcd,
    NearlyOptimalLcd,
    BelowBounds,
    AboveTable,
}

impl std::fmt::Display for OptimalityStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            OptimalityStatus::OptimalLcd => "optimal-LCD",
            OptimalityStatus::NearlyOptimalLcd => "nearly-optimal-LCD",
            OptimalityStatus::BelowBounds => "below-bounds",
            OptimalityStatus::AboveTable => "above-table",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimalityVerdict {
    pub status: OptimalityStatus,
    pub d_computed: usize,
    pub d_reference: usize,
}

/// Classifies `d` against the best-known linear distance for `[n,k]`.
pub fn classify_optimality(
    n: usize,
    k: usize,
    d: usize,
    bounds: &BoundsTable,
) -> Result<OptimalityVerdict> {
    let entry = bounds.get(n, k).ok_or(Error::MissingBoundsEntry { n, k })?;
    let reference = entry.linear_best;
    let status = if d > reference {
        OptimalityStatus::AboveTable
    } else if d == reference {
        OptimalityStatus::OptimalLcd
    } else if d + 1 == reference {
        OptimalityStatus::NearlyOptimalLcd
    } else {
        OptimalityStatus::BelowBounds
    };
    Ok(OptimalityVerdict { status, d_computed: d, d_reference: reference })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{simplex, LinearCode};
    use crate::matrix::Gf4Matrix;

    fn code(rows: &[&[u8]]) -> LinearCode {
        let m = Gf4Matrix::from_digits(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap();
        LinearCode::from_generator(&m).unwrap()
    }

    fn enum_from_pairs(n: usize, k: usize, pairs: &[(usize, u64)]) -> WeightEnumerator {
        let mut coeffs = vec![BigUint::zero(); n + 1];
        for &(i, c) in pairs {
            coeffs[i] = BigUint::from(c);
        }
        WeightEnumerator::new(n, k, coeffs)
    }

    #[test]
    fn line_code_enumerator() {
        // span{(1,1)}: the three scalar multiples all have weight 2
        let w = enumerate_weights(&code(&[&[1, 1]])).unwrap();
        assert_eq!(w, enum_from_pairs(2, 1, &[(0, 1), (2, 3)]));
    }

    #[test]
    fn simplex_enumerators() {
        for (k, wt, count) in [(2u32, 4usize, 15u64), (3, 16, 63), (4, 64, 255), (5, 256, 1023)] {
            let s = simplex(k).unwrap();
            let w = enumerate_weights(&s).unwrap();
            let n = s.n();
            assert_eq!(w, enum_from_pairs(n, k as usize, &[(0, 1), (wt, count)]));
            assert_eq!(w.min_weight(), Some(wt));
        }
    }

    #[test]
    fn macwilliams_zero_dual() {
        // [1,1] full line 1 + 3z -> dual {0}: enumerator 1
        let w = enum_from_pairs(1, 1, &[(0, 1), (1, 3)]);
        let d = macwilliams_transform(&w).unwrap();
        assert_eq!(d, enum_from_pairs(1, 0, &[(0, 1)]));
    }

    #[test]
    fn macwilliams_simplex2_dual_matches_bruteforce() {
        // brute-force oracle over the 4^3 words of the [5,3] dual
        let s = simplex(2).unwrap();
        let dual = s.hermitian_dual().unwrap();
        let mut hist = vec![0u64; 6];
        let g = dual.generator();
        for a in Gf4::ALL {
            for b in Gf4::ALL {
                for c in Gf4::ALL {
                    let mut word = [Gf4::ZERO; 5];
                    for j in 0..5 {
                        word[j] = a * g.row(0)[j] + b * g.row(1)[j] + c * g.row(2)[j];
                    }
                    hist[word.iter().filter(|x| !x.is_zero()).count()] += 1;
                }
            }
        }
        let oracle: Vec<BigUint> = hist.iter().map(|&c| BigUint::from(c)).collect();
        let oracle = WeightEnumerator::new(5, 3, oracle);

        let via_transform = macwilliams_transform(&enumerate_weights(&s).unwrap()).unwrap();
        assert_eq!(via_transform, oracle);
    }

    #[test]
    fn macwilliams_double_transform_is_identity() {
        let s = simplex(3).unwrap();
        let w = enumerate_weights(&s).unwrap();
        let back = macwilliams_transform(&macwilliams_transform(&w).unwrap()).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn via_dual_full_space_is_binomial() {
        // [n,n]: dual is the zero code, enumerator (1+3z)^n
        let full = LinearCode::from_generator(&Gf4Matrix::identity(4)).unwrap();
        let w = weight_enumerator_via_dual(&full).unwrap();
        let mut expected = Vec::new();
        for j in 0..=4usize {
            let c = binomial(4, j) * BigInt::from(3).pow(j as u32);
            expected.push(c.to_biguint().unwrap());
        }
        assert_eq!(w, WeightEnumerator::new(4, 4, expected));
        // and the primal engine agrees
        assert_eq!(enumerate_weights(&full).unwrap(), w);
    }

    #[test]
    fn engines_agree_on_small_codes() {
        let c = code(&[&[1, 0, 2, 1, 3, 0], &[0, 1, 1, 1, 0, 2], &[0, 0, 1, 2, 2, 1]]);
        let a = enumerate_weights(&c).unwrap();
        let b = weight_enumerator_via_dual(&c).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(min_distance(&simplex(3).unwrap()).unwrap(), 16);
        let id = LinearCode::from_generator(&Gf4Matrix::identity(5)).unwrap();
        assert_eq!(min_distance(&id).unwrap(), 1);
    }

    #[test]
    fn limit_is_enforced() {
        let c = code(&[&[1, 0, 2, 1], &[0, 1, 1, 1]]);
        assert!(matches!(
            enumerate_weights_limited(&c, 1),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(matches!(
            weight_enumerator_limited(&c, 1),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn eaqecc_from_lcd_code() {
        // LCD [n,k] gives c = n-k and dimension k
        let c = code(&[&[1, 0, 1, 2], &[0, 1, 3, 1]]);
        assert!(c.is_lcd());
        let d = min_distance(&c).unwrap();
        let p = eaqecc_params(&c, d);
        assert_eq!(p.c, c.n() - c.k());
        assert_eq!(p.dim, c.k() as isize);
        assert_eq!(p.to_string(), format!("[[4,2,{d};2]]"));
    }
}
