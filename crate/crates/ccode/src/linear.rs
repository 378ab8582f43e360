//! Linear block codes over finite fields.
//!
//! A code is presented by a generator matrix; the check matrix is derived as
//! a null-space basis, so generators may arrive in any form, not just
//! `[I | P]`. Codebook-wide computations (minimum distance, weight
//! enumerator, syndrome table) enumerate exhaustively and fail loudly at
//! the documented caps instead of sampling — exactness is the contract.
//!
//! The coset-leader rule maximizes the noise probability P_Z^n(z); ties are
//! broken toward the lexicographically smallest pattern read as a base-q
//! number. Leader probabilities are computed from a per-symbol histogram
//! with `powi`, so patterns with equal symbol multisets compare as exactly
//! equal floats and the tie-break is deterministic.

use thiserror::Error;

use crate::channel::{Dist, Dmc};
use crate::gf::Field;
use crate::matf::MatF;
use crate::DecodeReport;

/// Codebook-enumeration cap (q^k and q^n).
const CODEBOOK_CAP: u64 = 1 << 24;
/// Coset-count cap (q^{n-k}).
const COSET_CAP: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearError {
    #[error("generator matrix rows are linearly dependent")]
    RankDeficient,
    #[error("enumeration needs {needed} items, cap is {cap}")]
    TooLarge { needed: u64, cap: u64 },
    #[error("channel does not have a binary input alphabet")]
    NotBinaryInput,
}

/// Number of nonzero entries.
pub fn hamming_weight(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Number of positions where v and w differ. Panics on length mismatch.
pub fn hamming_distance(v: &[u64], w: &[u64]) -> usize {
    assert_eq!(v.len(), w.len(), "vectors of different lengths");
    v.iter().zip(w).filter(|(a, b)| a != b).count()
}

/// An (n, k) linear block code presented by a generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    g: MatF,
    rre_g: MatF,
    h: MatF,
    /// Pivot columns of rre_g; the code is systematic in these positions
    /// with respect to the rre generator.
    pivot_cols: Vec<usize>,
    /// Inverse of G restricted to the pivot columns; maps systematic
    /// symbols back to info words of the *original* G.
    t_inv: MatF,
}

impl LinearCode {
    /// Build from a full-row-rank generator matrix.
    pub fn from_generator(g: MatF) -> Result<LinearCode, LinearError> {
        let field = g.field().clone();
        let (k, n) = (g.rows(), g.cols());
        assert!(n >= 1, "zero block length");
        let rre_g = g.rref();
        if rre_g.rows() < k {
            return Err(LinearError::RankDeficient);
        }
        let pivot_cols: Vec<usize> = (0..k)
            .map(|r| (0..n).find(|&c| rre_g.get(r, c) != 0).unwrap())
            .collect();
        let t = g.select_columns(&pivot_cols);
        let t_inv = t.invert().expect("full-rank generator has invertible pivot block");
        let h = g.null_space_basis();
        Ok(LinearCode {
            field,
            n,
            k,
            g,
            rre_g,
            h,
            pivot_cols,
            t_inv,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn generator(&self) -> &MatF {
        &self.g
    }
    /// The canonical (reduced-row-echelon) generator; equal for equal codes.
    pub fn rre_generator(&self) -> &MatF {
        &self.rre_g
    }
    /// Check matrix: a null-space basis of G, (n−k)×n, possibly 0 rows.
    pub fn check_matrix(&self) -> &MatF {
        &self.h
    }

    /// Information rate k·log2(q) / n in bits per symbol... normalized as
    /// log2|C| / n.
    pub fn rate(&self) -> f64 {
        self.k as f64 * (self.field.q() as f64).log2() / self.n as f64
    }

    pub fn encode(&self, u: &[u64]) -> Vec<u64> {
        self.g.vec_mul(u)
    }

    /// Info word of a codeword (the u with u·G = c). Panics if c is not a
    /// codeword.
    pub fn decode_info(&self, c: &[u64]) -> Vec<u64> {
        assert!(self.is_codeword(c), "not a codeword");
        // c = u·G and G = T·rre_G with T = G at the pivot columns, so the
        // pivot entries of c are exactly u·T.
        let v: Vec<u64> = self.pivot_cols.iter().map(|&j| c[j]).collect();
        self.t_inv.vec_mul(&v)
    }

    pub fn syndrome(&self, y: &[u64]) -> Vec<u64> {
        self.h.mul_vec(y)
    }

    pub fn is_codeword(&self, y: &[u64]) -> bool {
        self.syndrome(y).iter().all(|&s| s == 0)
    }

    /// All q^k codewords, info words ascending as base-q numbers with the
    /// first symbol most significant.
    pub fn codewords(&self) -> Result<Vec<Vec<u64>>, LinearError> {
        let count = checked_power(self.field.q(), self.k as u32, CODEBOOK_CAP)?;
        let mut out = Vec::with_capacity(count as usize);
        let mut u = vec![0u64; self.k];
        loop {
            out.push(self.encode(&u));
            if !odometer(&mut u, self.field.q()) {
                break;
            }
        }
        Ok(out)
    }

    /// Minimum weight of the nonzero codewords. Panics for k = 0.
    pub fn min_distance(&self) -> Result<usize, LinearError> {
        assert!(self.k > 0, "the zero code has no minimum distance");
        Ok(self
            .codewords()?
            .iter()
            .map(|c| hamming_weight(c))
            .filter(|&w| w > 0)
            .min()
            .unwrap())
    }

    pub fn weight_enumerator(&self) -> Result<WeightEnumerator, LinearError> {
        let mut counts = vec![0u64; self.n + 1];
        for c in self.codewords()? {
            counts[hamming_weight(&c)] += 1;
        }
        Ok(WeightEnumerator { counts })
    }

    /// The dual code, generated by the check matrix.
    pub fn dual(&self) -> LinearCode {
        LinearCode::from_generator(self.h.clone())
            .expect("null-space basis rows are independent")
    }

    /// Coset-leader table for syndrome decoding under the given per-symbol
    /// noise distribution (one probability per field element). Enumerates
    /// all q^n patterns; caps: q^{n−k} ≤ 2^20 cosets, q^n ≤ 2^24 patterns.
    pub fn build_syndrome_table(&self, noise: &Dist) -> Result<SyndromeTable, LinearError> {
        let q = self.field.q();
        assert_eq!(
            noise.len(),
            q as usize,
            "noise distribution must cover the field alphabet"
        );
        let cosets = checked_power(q, (self.n - self.k) as u32, COSET_CAP)?;
        checked_power(q, self.n as u32, CODEBOOK_CAP)?;

        let mut leaders: Vec<Option<Vec<u64>>> = vec![None; cosets as usize];
        let mut best_prob = vec![0.0f64; cosets as usize];
        let mut z = vec![0u64; self.n];
        let mut hist = vec![0u32; q as usize];
        loop {
            // P_Z^n(z) via symbol histogram: equal multisets give
            // bit-identical products, so ties are exact.
            hist.fill(0);
            for &s in &z {
                hist[s as usize] += 1;
            }
            let prob: f64 = hist
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(v, &c)| noise.probs()[v].powi(c as i32))
                .product();
            let idx = self.syndrome_index(&self.syndrome(&z));
            // Strict > keeps the first (lexicographically smallest) pattern
            // among equals, since z ascends as a base-q number.
            if leaders[idx].is_none() || prob > best_prob[idx] {
                best_prob[idx] = prob;
                leaders[idx] = Some(z.clone());
            }
            if !odometer(&mut z, q) {
                break;
            }
        }
        Ok(SyndromeTable {
            leaders: leaders
                .into_iter()
                .map(|l| l.expect("cosets partition the whole space"))
                .collect(),
        })
    }

    /// Index of a syndrome vector as a base-q number, first symbol most
    /// significant.
    fn syndrome_index(&self, s: &[u64]) -> usize {
        let q = self.field.q();
        s.iter().fold(0usize, |acc, &d| acc * q as usize + d as usize)
    }

    /// Syndrome decoding: subtract the coset leader of y's syndrome. The
    /// result is always a codeword.
    pub fn syndrome_decode(&self, table: &SyndromeTable, y: &[u64]) -> DecodeReport {
        assert_eq!(y.len(), self.n, "received word has wrong length");
        let leader = &table.leaders[self.syndrome_index(&self.syndrome(y))];
        let f = &self.field;
        let codeword: Vec<u64> = y.iter().zip(leader).map(|(&a, &b)| f.sub(a, b)).collect();
        debug_assert!(self.is_codeword(&codeword));
        DecodeReport {
            codeword,
            error: leader.clone(),
        }
    }
}

fn checked_power(q: u64, e: u32, cap: u64) -> Result<u64, LinearError> {
    match q.checked_pow(e) {
        Some(v) if v <= cap => Ok(v),
        other => Err(LinearError::TooLarge {
            needed: other.unwrap_or(u64::MAX),
            cap,
        }),
    }
}

/// Advance a base-q tuple, first symbol most significant; false on wrap.
fn odometer(t: &mut [u64], base: u64) -> bool {
    for d in t.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Weight distribution A_0..A_n of a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// A(x) = Σ A_i x^i.
    pub fn eval(&self, x: f64) -> f64 {
        self.counts
            .iter()
            .rev()
            .fold(0.0, |acc, &a| acc * x + a as f64)
    }

    /// The ML union bound A(β) − 1 on block-error probability, β the
    /// channel's Bhattacharyya parameter.
    pub fn ml_union_bound(&self, beta: f64) -> f64 {
        assert!((0.0..=1.0).contains(&beta), "beta must lie in [0,1]");
        self.eval(beta) - 1.0
    }
}

/// Bhattacharyya parameter β = Σ_b √(W(b|0)·W(b|1)) of a binary-input
/// channel.
pub fn bhattacharyya(ch: &Dmc) -> Result<f64, LinearError> {
    if ch.nx() != 2 {
        return Err(LinearError::NotBinaryInput);
    }
    Ok((0..ch.ny())
        .map(|b| (ch.prob(0, b as u64) * ch.prob(1, b as u64)).sqrt())
        .sum())
}

/// Coset-leader table, indexed by syndrome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeTable {
    /// leaders[i] = minimum-noise pattern of the coset with syndrome index i.
    leaders: Vec<Vec<u64>>,
}

impl SyndromeTable {
    pub fn leaders(&self) -> &[Vec<u64>] {
        &self.leaders
    }
}

/// A linear code plus its syndrome table, packaged for Monte Carlo runs.
pub struct SyndromeScheme {
    code: LinearCode,
    table: SyndromeTable,
}

impl SyndromeScheme {
    pub fn new(code: LinearCode, table: SyndromeTable) -> SyndromeScheme {
        SyndromeScheme { code, table }
    }
}

impl crate::channel::BlockScheme for SyndromeScheme {
    fn info_len(&self) -> usize {
        self.code.k()
    }
    fn block_len(&self) -> usize {
        self.code.n()
    }
    fn alphabet(&self) -> u64 {
        self.code.field().q()
    }
    fn encode(&self, u: &[u64]) -> Vec<u64> {
        self.code.encode(u)
    }
    fn decode(&self, y: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let rep = self.code.syndrome_decode(&self.table, y);
        let u = self.code.decode_info(&rep.codeword);
        (rep.codeword, u)
    }
}

/// The (7,4) binary Hamming code's classic generator matrix.
pub fn hamming_7_4_generator(f2: Field) -> MatF {
    assert_eq!(f2.q(), 2, "Hamming(7,4) is binary");
    MatF::from_rows(
        f2,
        &[
            vec![1, 0, 0, 0, 0, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 1, 1, 1],
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }
    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    fn hamming() -> LinearCode {
        LinearCode::from_generator(hamming_7_4_generator(f2())).unwrap()
    }

    fn repetition(n: usize) -> LinearCode {
        LinearCode::from_generator(MatF::from_rows(f2(), &[vec![1; n]])).unwrap()
    }

    #[test]
    fn weights_and_distances() {
        assert_eq!(hamming_weight(&[0, 1, 0, 1]), 2);
        assert_eq!(hamming_weight(&[0, 2, 0, 1]), 2); // F_3 vector, same count
        assert_eq!(hamming_distance(&[1, 1, 0], &[1, 1, 0]), 0);
        assert_eq!(hamming_distance(&[1, 0, 2], &[1, 1, 0]), 2);
    }

    #[test]
    fn hamming_code_shape() {
        let c = hamming();
        assert_eq!((c.n(), c.k()), (7, 4));
        assert_eq!(c.min_distance().unwrap(), 3);
        assert_eq!(
            c.weight_enumerator().unwrap().counts(),
            &[1, 0, 0, 7, 7, 0, 0, 1]
        );
        // G·Hᵀ = 0.
        let gh = c.generator().mat_mul(&c.check_matrix().transpose());
        assert!(gh.rows_iter().all(|r| r.iter().all(|&v| v == 0)));
        assert!((c.rate() - 4.0 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn rank_deficient_rejected() {
        let g = MatF::from_rows(f2(), &[vec![1, 1, 0], vec![1, 1, 0]]);
        assert_eq!(
            LinearCode::from_generator(g).unwrap_err(),
            LinearError::RankDeficient
        );
    }

    #[test]
    fn repetition_and_parity_dual() {
        let rep = repetition(3);
        assert_eq!(rep.min_distance().unwrap(), 3);
        assert_eq!(rep.weight_enumerator().unwrap().counts(), &[1, 0, 0, 1]);
        let spc = rep.dual();
        assert_eq!((spc.n(), spc.k()), (3, 2));
        assert_eq!(spc.min_distance().unwrap(), 2);
        // Dual of the dual is the original code (canonical generators equal).
        assert_eq!(spc.dual().rre_generator(), rep.rre_generator());
        assert_eq!(rep.k() + spc.k(), 3);
    }

    #[test]
    fn encode_decode_info_round_trip() {
        let c = hamming();
        for u in [[0, 0, 0, 0], [1, 0, 1, 1], [1, 1, 1, 1], [0, 1, 0, 1]] {
            let cw = c.encode(&u);
            assert!(c.is_codeword(&cw));
            assert_eq!(c.decode_info(&cw), u.to_vec());
        }
        // A non-systematic generator still round-trips.
        let g = MatF::from_rows(f3(), &[vec![1, 2, 1, 0], vec![2, 1, 0, 1]]);
        let c = LinearCode::from_generator(g).unwrap();
        for u in [[0, 0], [1, 2], [2, 2], [2, 1]] {
            assert_eq!(c.decode_info(&c.encode(&u)), u.to_vec());
        }
    }

    #[test]
    fn bhattacharyya_values() {
        let b = bhattacharyya(&Dmc::bsc(0.2).unwrap()).unwrap();
        assert!((b - 2.0 * (0.2f64 * 0.8).sqrt()).abs() < 1e-12);
        assert_eq!(bhattacharyya(&Dmc::bsc(0.0).unwrap()).unwrap(), 0.0);
        let b = bhattacharyya(&Dmc::bec(0.3).unwrap()).unwrap();
        assert!((b - 0.3).abs() < 1e-12);
        assert_eq!(
            bhattacharyya(&Dmc::q_sym(3, 0.1).unwrap()).unwrap_err(),
            LinearError::NotBinaryInput
        );
    }

    #[test]
    fn union_bound_forms() {
        let rep = repetition(3).weight_enumerator().unwrap();
        let beta = 0.4;
        assert!((rep.ml_union_bound(beta) - beta.powi(3)).abs() < 1e-12);
        assert_eq!(rep.ml_union_bound(0.0), 0.0);
        // Hamming bound = 7β³+7β⁴+β⁷.
        let w = hamming().weight_enumerator().unwrap();
        let expect = 7.0 * beta.powi(3) + 7.0 * beta.powi(4) + beta.powi(7);
        assert!((w.ml_union_bound(beta) - expect).abs() < 1e-12);
    }

    fn bsc_noise(delta: f64) -> Dist {
        Dist::new(vec![1.0 - delta, delta]).unwrap()
    }

    #[test]
    fn hamming_coset_leaders() {
        let c = hamming();
        let t = c.build_syndrome_table(&bsc_noise(0.1)).unwrap();
        let mut leaders = t.leaders().to_vec();
        leaders.sort();
        // Perfect code: the zero pattern and all seven weight-1 patterns.
        assert_eq!(leaders.len(), 8);
        assert!(leaders.iter().all(|l| hamming_weight(l) <= 1));
        assert_eq!(
            leaders.iter().filter(|l| hamming_weight(l) == 1).count(),
            7
        );
    }

    #[test]
    fn two_one_repetition_tie_break() {
        let c = repetition(2);
        let t = c.build_syndrome_table(&bsc_noise(0.1)).unwrap();
        let mut leaders = t.leaders().to_vec();
        leaders.sort();
        // Coset {01, 10} ties at weight 1; lexicographically 01 wins.
        assert_eq!(leaders, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn full_code_trivial_table() {
        let c = LinearCode::from_generator(MatF::identity(f2(), 2)).unwrap();
        assert_eq!(c.check_matrix().rows(), 0);
        let t = c.build_syndrome_table(&bsc_noise(0.2)).unwrap();
        assert_eq!(t.leaders(), &[vec![0, 0]]);
        let rep = c.syndrome_decode(&t, &[1, 0]);
        assert_eq!(rep.codeword, vec![1, 0]);
    }

    #[test]
    fn syndrome_decode_corrects_single_errors() {
        let c = hamming();
        let t = c.build_syndrome_table(&bsc_noise(0.05)).unwrap();
        let cw = c.encode(&[1, 0, 1, 1]);
        assert_eq!(c.syndrome_decode(&t, &cw).codeword, cw);
        for i in 0..7 {
            let mut y = cw.clone();
            y[i] ^= 1;
            let rep = c.syndrome_decode(&t, &y);
            assert_eq!(rep.codeword, cw, "flip at {i} not corrected");
            assert_eq!(hamming_weight(&rep.error), 1);
        }
    }

    #[test]
    fn codeword_caps_enforced() {
        // k = 30 over F_2 → 2^30 codewords > 2^24 cap.
        let g = MatF::identity(f2(), 30);
        let c = LinearCode::from_generator(g).unwrap();
        assert!(matches!(
            c.codewords().unwrap_err(),
            LinearError::TooLarge { .. }
        ));
    }

    #[test]
    fn ternary_code_table() {
        // (3,1) repetition over F_3 under q-ary symmetric noise.
        let c = LinearCode::from_generator(MatF::from_rows(f3(), &[vec![1, 1, 1]])).unwrap();
        let noise = Dist::new(vec![0.9, 0.05, 0.05]).unwrap();
        let t = c.build_syndrome_table(&noise).unwrap();
        assert_eq!(t.leaders().len(), 9);
        // 7 patterns of weight ≤ 1 cover 7 cosets; the remaining 2 cosets
        // (e.g. {012,120,201}) bottom out at weight 2.
        assert_eq!(
            t.leaders().iter().filter(|l| hamming_weight(l) <= 1).count(),
            7
        );
        assert!(t.leaders().iter().all(|l| hamming_weight(l) <= 2));
        // Single symbol errors are corrected.
        let cw = c.encode(&[2]);
        for i in 0..3 {
            for e in 1..3u64 {
                let mut y = cw.clone();
                y[i] = (y[i] + e) % 3;
                assert_eq!(c.syndrome_decode(&t, &y).codeword, cw);
            }
        }
    }
}
