//! Square band matrices and banded LU factorization with partial pivoting.

use crate::error::{Error, Result};

/// Square matrix with `lower` sub-diagonals and `upper` super-diagonals.
///
/// Row-major diagonal-offset layout: entry `(i, j)` lives at
/// `i * (lower + upper + 1) + (j + lower - i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BandedMatrix {
    n: usize,
    lower: usize,
    upper: usize,
    bands: Vec<f64>,
}

impl BandedMatrix {
    pub fn zeros(n: usize, lower: usize, upper: usize) -> Self {
        let lower = lower.min(n.saturating_sub(1));
        let upper = upper.min(n.saturating_sub(1));
        Self {
            n,
            lower,
            upper,
            bands: vec![0.0; n * (lower + upper + 1)],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, 0, 0);
        m.bands.iter_mut().for_each(|v| *v = 1.0);
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn lower_bandwidth(&self) -> usize {
        self.lower
    }

    pub fn upper_bandwidth(&self) -> usize {
        self.upper
    }

    fn width(&self) -> usize {
        self.lower + self.upper + 1
    }

    pub fn in_band(&self, i: usize, j: usize) -> bool {
        j + self.lower >= i && j <= i + self.upper
    }

    /// Column range of the band in row `i`.
    fn row_span(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        i.saturating_sub(self.lower)..=(i + self.upper).min(self.n - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i >= self.n || j >= self.n || !self.in_band(i, j) {
            return 0.0;
        }
        self.bands[i * self.width() + j + self.lower - i]
    }

    /// Sets an in-band entry. Panics if `(i, j)` is outside the band.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        assert!(
            i < self.n && j < self.n && self.in_band(i, j),
            "entry ({i}, {j}) outside band"
        );
        let w = self.width();
        self.bands[i * w + j + self.lower - i] = value;
    }

    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: x.len(),
            });
        }
        let mut y = vec![0.0; self.n];
        self.matvec_into(x, &mut y);
        Ok(y)
    }

    pub(crate) fn matvec_into(&self, x: &[f64], y: &mut [f64]) {
        let w = self.width();
        for (i, yi) in y.iter_mut().enumerate() {
            let row = &self.bands[i * w..(i + 1) * w];
            let mut acc = 0.0;
            for j in self.row_span(i) {
                acc += row[j + self.lower - i] * x[j];
            }
            *yi = acc;
        }
    }

    /// `w^T A`.
    pub fn left_matvec(&self, w: &[f64]) -> Result<Vec<f64>> {
        if w.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: w.len(),
            });
        }
        let mut out = vec![0.0; self.n];
        for (i, wi) in w.iter().enumerate() {
            for j in self.row_span(i) {
                out[j] += wi * self.get(i, j);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: f64) -> Self {
        let mut out = self.clone();
        out.bands.iter_mut().for_each(|v| *v *= c);
        out
    }

    /// `self + c I`
    pub fn add_identity(&self, c: f64) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            let v = out.get(i, i) + c;
            out.set(i, i, v);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: other.n,
            });
        }
        let mut out = Self::zeros(
            self.n,
            self.lower.max(other.lower),
            self.upper.max(other.upper),
        );
        for i in 0..self.n {
            for j in out.row_span(i) {
                out.set(i, j, self.get(i, j) + other.get(i, j));
            }
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Evaluates `c_0 I + c_1 A + ... + c_k A^k` by Horner's rule.
    pub fn polynomial(&self, coeffs: &[f64]) -> Self {
        let Some((&lead, rest)) = coeffs.split_last() else {
            return Self::zeros(self.n, 0, 0);
        };
        let mut acc = Self::identity(self.n).scale(lead);
        for &c in rest.iter().rev() {
            acc = band_matmul(&acc, self)
                .expect("same dimension")
                .add_identity(c);
        }
        acc
    }
}

/// Exact banded product; bandwidths add (capped at `n - 1`).
pub fn band_matmul(a: &BandedMatrix, b: &BandedMatrix) -> Result<BandedMatrix> {
    if a.n != b.n {
        return Err(Error::Dimension {
            expected: a.n,
            got: b.n,
        });
    }
    let n = a.n;
    let mut c = BandedMatrix::zeros(n, a.lower + b.lower, a.upper + b.upper);
    for i in 0..n {
        for k in a.row_span(i) {
            let aik = a.get(i, k);
            if aik == 0.0 {
                continue;
            }
            for j in b.row_span(k) {
                let idx = i * c.width() + j + c.lower - i;
                c.bands[idx] += aik * b.get(k, j);
            }
        }
    }
    Ok(c)
}

/// LU factors of a band matrix computed with row partial pivoting.
///
/// `U` has upper bandwidth `lower + upper`; the multipliers of `L` are kept in
/// the sub-diagonal slots and applied together with the recorded interchanges.
#[derive(Clone, Debug)]
pub struct BandLu {
    n: usize,
    lower: usize,
    /// Upper bandwidth of `U`.
    upper: usize,
    /// Row `i` holds columns `i - lower ..= i + upper`.
    factors: Vec<f64>,
    pivots: Vec<usize>,
}

impl BandLu {
    pub fn factor(a: &BandedMatrix) -> Result<Self> {
        let n = a.n;
        let lower = a.lower;
        let upper = (a.lower + a.upper).min(n.saturating_sub(1));
        let w = lower + upper + 1;
        let mut f = vec![0.0; n * w];
        let idx = |i: usize, j: usize| i * w + j + lower - i;
        for i in 0..n {
            for j in a.row_span(i) {
                f[idx(i, j)] = a.get(i, j);
            }
        }
        let mut pivots = vec![0; n];
        for k in 0..n {
            let last_row = (k + lower).min(n - 1);
            let last_col = (k + upper).min(n - 1);
            let (p, pmax) = (k..=last_row)
                .map(|i| (i, f[idx(i, k)].abs()))
                .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pmax == 0.0 {
                return Err(Error::Singular { column: k });
            }
            pivots[k] = p;
            if p != k {
                for j in k..=last_col {
                    f.swap(idx(k, j), idx(p, j));
                }
            }
            let pivot = f[idx(k, k)];
            for i in k + 1..=last_row {
                let l = f[idx(i, k)] / pivot;
                f[idx(i, k)] = l;
                if l != 0.0 {
                    for j in k + 1..=last_col {
                        f[idx(i, j)] -= l * f[idx(k, j)];
                    }
                }
            }
        }
        Ok(Self {
            n,
            lower,
            upper,
            factors: f,
            pivots,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        if b.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: b.len(),
            });
        }
        let mut x = b.to_vec();
        self.solve_in_place(&mut x);
        Ok(x)
    }

    pub(crate) fn solve_in_place(&self, x: &mut [f64]) {
        let n = self.n;
        let w = self.lower + self.upper + 1;
        let lower = self.lower;
        let idx = |i: usize, j: usize| i * w + j + lower - i;
        for k in 0..n {
            let p = self.pivots[k];
            if p != k {
                x.swap(k, p);
            }
            let xk = x[k];
            if xk != 0.0 {
                for i in k + 1..=(k + lower).min(n - 1) {
                    x[i] -= self.factors[idx(i, k)] * xk;
                }
            }
        }
        for k in (0..n).rev() {
            let mut acc = x[k];
            for j in k + 1..=(k + self.upper).min(n - 1) {
                acc -= self.factors[idx(k, j)] * x[j];
            }
            x[k] = acc / self.factors[idx(k, k)];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    fn sample(n: usize) -> BandedMatrix {
        let mut m = BandedMatrix::zeros(n, 2, 1);
        for i in 0..n {
            for j in i.saturating_sub(2)..=(i + 1).min(n - 1) {
                m.set(i, j, 1.0 + (3 * i + 7 * j) as f64 % 5.0 - if i == j { 0.0 } else { 2.5 });
            }
        }
        m
    }

    #[test]
    fn storage_roundtrip_and_band_limits() {
        let m = sample(6);
        assert_eq!(m.get(0, 3), 0.0);
        assert_eq!(m.get(5, 0), 0.0);
        assert_eq!(m.lower_bandwidth(), 2);
        assert_eq!(m.upper_bandwidth(), 1);
    }

    #[test]
    fn matmul_matches_dense() {
        let a = sample(7);
        let b = sample(7);
        let c = band_matmul(&a, &b).unwrap();
        assert_eq!(c.lower_bandwidth(), 4);
        assert_eq!(c.upper_bandwidth(), 2);
        let dense = dense_mul(&a.to_dense(), &b.to_dense());
        for i in 0..7 {
            for j in 0..7 {
                assert!((c.get(i, j) - dense[i][j]).abs() < 1e-12);
            }
        }
        assert!(band_matmul(&a, &sample(5)).is_err());
    }

    #[test]
    fn polynomial_horner() {
        let a = sample(5);
        let p = a.polynomial(&[2.0, -1.0, 0.5]);
        let a2 = dense_mul(&a.to_dense(), &a.to_dense());
        let ad = a.to_dense();
        for i in 0..5 {
            for j in 0..5 {
                let e = if i == j { 2.0 } else { 0.0 } - ad[i][j] + 0.5 * a2[i][j];
                assert!((p.get(i, j) - e).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn lu_solves_with_pivoting() {
        // Zero leading diagonal forces an interchange.
        let mut m = BandedMatrix::zeros(5, 1, 1);
        let rows: [[f64; 3]; 5] = [
            [0.0, 0.0, 2.0],
            [1.0, 4.0, 1.0],
            [3.0, 1.0, 1.0],
            [1.0, 5.0, 2.0],
            [2.0, 3.0, 0.0],
        ];
        for i in 0..5 {
            for (k, j) in (i as i64 - 1..=i as i64 + 1).enumerate() {
                if (0..5).contains(&j) {
                    m.set(i, j as usize, rows[i][k]);
                }
            }
        }
        let lu = BandLu::factor(&m).unwrap();
        let x_true = [1.0, -2.0, 3.0, 0.5, -1.0];
        let b = m.matvec(&x_true).unwrap();
        let x = lu.solve(&b).unwrap();
        for (a, e) in x.iter().zip(x_true) {
            assert!((a - e).abs() < 1e-12);
        }
    }

    #[test]
    fn lu_reports_singular() {
        let m = BandedMatrix::zeros(3, 1, 1);
        assert!(matches!(BandLu::factor(&m), Err(Error::Singular { column: 0 })));
    }
}
