//! Linear codes over GF(4): construction, Hermitian duality, LCD testing,
//! and the transformations used to derive new codes from old ones.
//!
//! A [`LinearCode`] always stores its generator in reduced row echelon form
//! with zero rows removed, so two codes are equal exactly when their row
//! spaces are equal.  Coordinates are 1-based at every public interface and
//! converted internally.

use crate::gf4::Gf4;
use crate::matrix::Gf4Matrix;
use crate::{Error, Result};

/// Largest simplex code length `(4^k - 1)/3` the constructor will build.
pub const SIMPLEX_LENGTH_LIMIT: usize = 100_000;

/// A sorted, duplicate-free set of 1-based coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordSet {
    indices: Vec<usize>,
}

impl CoordSet {
    /// Accepts coordinates in any order; rejects duplicates and zeros.
    pub fn new(mut indices: Vec<usize>) -> Result<CoordSet> {
        indices.sort_unstable();
        for w in indices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateCoord(w[0]));
            }
        }
        if indices.first() == Some(&0) {
            return Err(Error::CoordOutOfRange { coord: 0, n: 0 });
        }
        Ok(CoordSet { indices })
    }

    pub fn empty() -> CoordSet {
        CoordSet { indices: Vec::new() }
    }

    /// Parses a comma-separated list such as `1,3,6`.
    pub fn parse(s: &str) -> Result<CoordSet> {
        let mut v = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let x: usize = tok
                .parse()
                .map_err(|_| Error::Parse { path: "coords".into(), msg: format!("bad coordinate {tok:?}") })?;
            v.push(x);
        }
        CoordSet::new(v)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn validate(&self, n: usize) -> Result<()> {
        for &i in &self.indices {
            if i == 0 || i > n {
                return Err(Error::CoordOutOfRange { coord: i, n });
            }
        }
        Ok(())
    }

    /// 0-based complement within `1..=n`.
    fn kept_columns(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|c| !self.indices.contains(&(c + 1))).collect()
    }
}

impl std::fmt::Display for CoordSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// An `[n,k]` linear code over GF(4) held by its canonical generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: Gf4Matrix,
    label: Option<String>,
}

impl LinearCode {
    /// Builds the code spanned by the rows of `m`.  Row-dependent inputs are
    /// accepted and reduced; the all-zero matrix is rejected.
    pub fn from_generator(m: &Gf4Matrix) -> Result<LinearCode> {
        let basis = m.row_space_basis();
        if basis.rows() == 0 {
            return Err(Error::ZeroMatrix);
        }
        Ok(LinearCode { gen: basis, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> LinearCode {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Code length.
    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    /// Code dimension.
    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// The canonical (reduced echelon) generator matrix.
    pub fn generator(&self) -> &Gf4Matrix {
        &self.gen
    }

    /// The Hermitian dual `[n, n-k]` code: the plain null space of the
    /// entrywise-conjugated generator.  The full space has the zero code as
    /// its dual, which cannot be represented, so `k = n` is an error.
    pub fn hermitian_dual(&self) -> Result<LinearCode> {
        if self.k() == self.n() {
            return Err(Error::DualOfFullSpace);
        }
        LinearCode::from_generator(&self.gen.conj().null_space())
    }

    /// Euclidean (non-conjugated) dual generator; zero rows when `k = n`.
    fn euclidean_dual_basis(&self) -> Gf4Matrix {
        self.gen.null_space().row_space_basis()
    }

    /// `G · G†` for the stored generator.
    pub fn gram_matrix(&self) -> Gf4Matrix {
        self.gen.mul(&self.gen.conj_transpose())
    }

    /// Rank of `G · G†`; independent of the choice of generator.
    pub fn gram_rank(&self) -> usize {
        self.gram_matrix().rank()
    }

    /// Linear complementary dual test: `rank(G G†) = k`.
    pub fn is_lcd(&self) -> bool {
        self.gram_rank() == self.k()
    }

    /// Self-orthogonality test: `rank(G G†) = 0`.
    pub fn is_self_orthogonal(&self) -> bool {
        self.gram_rank() == 0
    }

    /// Dimension of the hull `C ∩ C^⊥h`, via the rank of the stacked
    /// generator and parity-check matrices.
    pub fn hull_dimension(&self) -> usize {
        if self.k() == self.n() {
            return 0;
        }
        let dual = self.gen.conj().null_space().row_space_basis();
        let stacked = self.gen.stack(&dual);
        self.k() + dual.rows() - stacked.rank()
    }

    /// Deletes the coordinates in `coords` from every codeword.  The
    /// dimension may drop; the result reports its true `k`.
    pub fn puncture(&self, coords: &CoordSet) -> Result<LinearCode> {
        coords.validate(self.n())?;
        if coords.is_empty() {
            return Ok(self.clone());
        }
        if coords.len() >= self.n() {
            return Err(Error::EmptyAfterPuncture);
        }
        let kept = coords.kept_columns(self.n());
        LinearCode::from_generator(&self.gen.select_cols(&kept))
    }

    /// The subcode of words vanishing on `coords`, with those coordinates
    /// deleted.  Shortening is a support operation and is independent of the
    /// inner product, so it is computed through plain Euclidean duality:
    /// `shorten(C, S) = dual(puncture(dual(C), S))`.
    pub fn shorten(&self, coords: &CoordSet) -> Result<LinearCode> {
        coords.validate(self.n())?;
        if coords.is_empty() {
            return Ok(self.clone());
        }
        if coords.len() >= self.n() {
            return Err(Error::ShortenedToZero);
        }
        let dual = self.euclidean_dual_basis();
        let kept = coords.kept_columns(self.n());
        let punctured = if dual.rows() == 0 {
            Gf4Matrix::zeros(0, kept.len())
        } else {
            dual.select_cols(&kept)
        };
        let gen = punctured.null_space();
        if gen.rows() == 0 {
            return Err(Error::ShortenedToZero);
        }
        LinearCode::from_generator(&gen)
    }

    /// Appends one coordinate to each generator row so the plain entry sum
    /// of every row becomes zero; returns an `[n+1, k]` code.
    pub fn extend_parity(&self) -> LinearCode {
        let k = self.k();
        let mut parity = Gf4Matrix::zeros(k, 1);
        for i in 0..k {
            parity[(i, 0)] = self.gen.row(i).iter().copied().sum();
        }
        let ext = self.gen.augment(&parity);
        LinearCode::from_generator(&ext).expect("extension preserves rank")
    }

    /// The code spanned by the selected (1-based) rows of the canonical
    /// generator.
    pub fn row_subcode(&self, rows: &[usize]) -> Result<LinearCode> {
        if rows.is_empty() {
            return Err(Error::BadRowSelection("empty".into()));
        }
        let mut sel = Vec::with_capacity(rows.len());
        for &r in rows {
            if r == 0 || r > self.k() {
                return Err(Error::BadRowSelection(format!("row {r} of {}", self.k())));
            }
            sel.push(r - 1);
        }
        LinearCode::from_generator(&self.gen.select_rows(&sel))
    }

    /// Applies a coordinate permutation (`perm[i]` is the 1-based source
    /// coordinate placed at position `i+1`) and optionally the entrywise
    /// Frobenius map.
    pub fn permute_and_conjugate(&self, perm: &[usize], frobenius: bool) -> Result<LinearCode> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::BadPermutation(format!("length {} != {}", perm.len(), n)));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::BadPermutation(format!("bad entry {p}")));
            }
            seen[p - 1] = true;
        }
        let cols: Vec<usize> = perm.iter().map(|&p| p - 1).collect();
        let mut m = self.gen.select_cols(&cols);
        if frobenius {
            m = m.conj();
        }
        LinearCode::from_generator(&m)
    }
}

/// `[I_k | A]` as a code.
pub fn identity_augment(a: &Gf4Matrix) -> Result<LinearCode> {
    let id = Gf4Matrix::identity(a.rows());
    LinearCode::from_generator(&id.augment(a))
}

/// The raw recursive simplex generator `S_k` exactly as laid out in the
/// seed-and-recurse construction: `S_k = [S_{k-1} 0 S_{k-1} S_{k-1} S_{k-1};
/// 0 1 1 ω ϖ]` starting from the printed `S_2`.
pub fn simplex_matrix(k: u32) -> Gf4Matrix {
    assert!(k >= 2);
    let s2 = Gf4Matrix::from_digits(&[vec![0, 1, 1, 1, 1], vec![1, 0, 1, 2, 3]]).unwrap();
    let mut s = s2;
    for _ in 3..=k {
        let m = s.cols();
        let zero_col = Gf4Matrix::zeros(s.rows(), 1);
        let top = s.augment(&zero_col).augment(&s).augment(&s).augment(&s);
        let mut bottom = Gf4Matrix::zeros(1, 4 * m + 1);
        bottom[(0, m)] = Gf4::ONE;
        for j in 0..m {
            bottom[(0, m + 1 + j)] = Gf4::ONE;
            bottom[(0, 2 * m + 1 + j)] = Gf4::OMEGA;
            bottom[(0, 3 * m + 1 + j)] = Gf4::OMEGABAR;
        }
        s = top.stack(&bottom);
    }
    s
}

/// The `[(4^k-1)/3, k, 4^(k-1)]` simplex code.
pub fn simplex(k: u32) -> Result<LinearCode> {
    if k < 2 {
        return Err(Error::SimplexTooSmall(k));
    }
    let len = (4usize.checked_pow(k).ok_or(Error::SimplexTooLong { k, limit: SIMPLEX_LENGTH_LIMIT })? - 1) / 3;
    if len > SIMPLEX_LENGTH_LIMIT {
        return Err(Error::SimplexTooLong { k, limit: SIMPLEX_LENGTH_LIMIT });
    }
    Ok(LinearCode::from_generator(&simplex_matrix(k))?.with_label(format!("s{k}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(rows: &[&[u8]]) -> LinearCode {
        let m = Gf4Matrix::from_digits(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap();
        LinearCode::from_generator(&m).unwrap()
    }

    #[test]
    fn from_generator_reduces() {
        let c = code(&[&[0, 1, 1, 1, 1], &[1, 0, 1, 2, 3]]);
        assert_eq!((c.n(), c.k()), (5, 2));

        let full = LinearCode::from_generator(&Gf4Matrix::identity(4)).unwrap();
        assert_eq!((full.n(), full.k()), (4, 4));

        // duplicate rows collapse
        let c = code(&[&[1, 2], &[1, 2]]);
        assert_eq!((c.n(), c.k()), (2, 1));

        let zero = Gf4Matrix::zeros(2, 3);
        assert!(matches!(LinearCode::from_generator(&zero), Err(Error::ZeroMatrix)));
    }

    #[test]
    fn canonical_equality() {
        // same row space, different presentations
        let a = code(&[&[1, 0, 1], &[0, 1, 2]]);
        let b = code(&[&[1, 1, 3], &[0, 1, 2]]);
        assert_eq!(a, b);
    }

    #[test]
    fn hermitian_dual_basics() {
        let c = code(&[&[1, 0]]);
        let d = c.hermitian_dual().unwrap();
        assert_eq!(d, code(&[&[0, 1]]));

        let full = LinearCode::from_generator(&Gf4Matrix::identity(3)).unwrap();
        assert!(matches!(full.hermitian_dual(), Err(Error::DualOfFullSpace)));

        // dual dimensions and orthogonality
        let c = code(&[&[1, 2, 3, 0, 1], &[0, 1, 1, 2, 2]]);
        let d = c.hermitian_dual().unwrap();
        assert_eq!(d.k(), 3);
        assert!(c.generator().mul(&d.generator().conj_transpose()).is_zero());
        assert_eq!(d.hermitian_dual().unwrap(), c);
    }

    #[test]
    fn simplex_is_self_orthogonal_and_inside_dual() {
        for k in 2..=5u32 {
            let s = simplex(k).unwrap();
            assert_eq!(s.n(), (4usize.pow(k) - 1) / 3);
            assert_eq!(s.k(), k as usize);
            assert!(s.is_self_orthogonal());
            assert_eq!(s.gram_rank(), 0);
            assert_eq!(s.hull_dimension(), s.k());
        }
        // C ⊆ C^⊥h for the [5,2] simplex
        let s = simplex(2).unwrap();
        let d = s.hermitian_dual().unwrap();
        assert!(d.generator().mul(&s.generator().conj_transpose()).is_zero());
        let stacked = d.generator().stack(s.generator());
        assert_eq!(stacked.rank(), d.k());
    }

    #[test]
    fn simplex_errors() {
        assert!(matches!(simplex(1), Err(Error::SimplexTooSmall(1))));
        assert!(matches!(simplex(10), Err(Error::SimplexTooLong { .. })));
    }

    #[test]
    fn gram_and_lcd() {
        let id = LinearCode::from_generator(&Gf4Matrix::identity(4)).unwrap();
        assert_eq!(id.gram_rank(), 4);
        assert!(id.is_lcd());
        assert!(!id.is_self_orthogonal());

        let s3 = simplex(3).unwrap();
        assert_eq!(s3.gram_rank(), 0);
        assert!(!s3.is_lcd());
    }

    #[test]
    fn hull_dimension_matches_gram_deficiency() {
        let s2 = simplex(2).unwrap();
        assert_eq!(s2.hull_dimension(), 2);
        let c = code(&[&[1, 0, 2, 1], &[0, 1, 1, 1]]);
        assert_eq!(c.hull_dimension(), c.k() - c.gram_rank());
    }

    #[test]
    fn puncture_basics() {
        let c = code(&[&[1, 0, 2, 1], &[0, 1, 1, 1]]);
        assert_eq!(c.puncture(&CoordSet::empty()).unwrap(), c);
        let p = c.puncture(&CoordSet::new(vec![3]).unwrap()).unwrap();
        assert_eq!((p.n(), p.k()), (3, 2));

        assert!(c.puncture(&CoordSet::new(vec![5]).unwrap()).is_err());
        assert!(c.puncture(&CoordSet::new(vec![1, 2, 3, 4]).unwrap()).is_err());

        // dimension can drop: two equal columns, puncture the rest
        let c = code(&[&[1, 1, 0], &[0, 0, 1]]);
        let p = c.puncture(&CoordSet::new(vec![3]).unwrap()).unwrap();
        assert_eq!((p.n(), p.k()), (2, 1));
    }

    #[test]
    fn shorten_basics() {
        let c = code(&[&[1, 0, 2, 1], &[0, 1, 1, 1]]);
        assert_eq!(c.shorten(&CoordSet::empty()).unwrap(), c);

        // shortening the full space stays the full space, one shorter
        let full = LinearCode::from_generator(&Gf4Matrix::identity(3)).unwrap();
        let s = full.shorten(&CoordSet::new(vec![2]).unwrap()).unwrap();
        assert_eq!((s.n(), s.k()), (2, 2));

        // [2,1] repetition shortened on one coordinate dies
        let rep = code(&[&[1, 1]]);
        assert!(matches!(
            rep.shorten(&CoordSet::new(vec![1]).unwrap()),
            Err(Error::ShortenedToZero)
        ));
    }

    #[test]
    fn shorten_matches_direct_definition() {
        // words vanishing on S, with S deleted
        let c = code(&[&[1, 0, 1, 2], &[0, 1, 3, 1]]);
        let s = c.shorten(&CoordSet::new(vec![1]).unwrap()).unwrap();
        // the v with zero first coordinate inside C: combinations x*r1+y*r2
        // with x = 0 -> spanned by r2 = (0,1,3,1) -> shortened (1,3,1)
        assert_eq!(s, code(&[&[1, 3, 1]]));
    }

    #[test]
    fn extend_parity_examples() {
        let c = code(&[&[1, 1]]);
        let e = c.extend_parity();
        assert_eq!(e, code(&[&[1, 1, 0]]));

        let c = code(&[&[1, 0]]);
        let e = c.extend_parity();
        assert_eq!(e, code(&[&[1, 0, 1]]));

        // round trip: extend then puncture the new coordinate
        let c = code(&[&[1, 0, 2, 1], &[0, 1, 1, 1]]);
        let e = c.extend_parity();
        assert_eq!((e.n(), e.k()), (c.n() + 1, c.k()));
        let back = e.puncture(&CoordSet::new(vec![e.n()]).unwrap()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn identity_augment_and_row_subcode() {
        let a = Gf4Matrix::zeros(3, 1);
        let c = identity_augment(&a).unwrap();
        assert_eq!((c.n(), c.k()), (4, 3));

        let full = c.row_subcode(&[1, 2, 3]).unwrap();
        assert_eq!(full, c);

        let single = LinearCode::from_generator(&Gf4Matrix::identity(3))
            .unwrap()
            .row_subcode(&[2])
            .unwrap();
        assert_eq!((single.n(), single.k()), (3, 1));
        assert_eq!(single.generator().row(0).iter().filter(|x| !x.is_zero()).count(), 1);

        assert!(c.row_subcode(&[]).is_err());
        assert!(c.row_subcode(&[4]).is_err());
    }

    #[test]
    fn permute_and_conjugate_basics() {
        let c = code(&[&[1, 0, 2, 1], &[0, 1, 1, 1]]);
        let id: Vec<usize> = (1..=4).collect();
        assert_eq!(c.permute_and_conjugate(&id, false).unwrap(), c);

        let perm = vec![2, 1, 4, 3];
        let p = c.permute_and_conjugate(&perm, false).unwrap();
        assert_eq!(p.k(), c.k());
        assert_eq!(p.gram_rank(), c.gram_rank());

        assert!(c.permute_and_conjugate(&[1, 1, 2, 3], false).is_err());
        assert!(c.permute_and_conjugate(&[1, 2, 3], false).is_err());
    }
}
