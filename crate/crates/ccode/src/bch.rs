//! Binary BCH codes as subfield subcodes of Reed–Solomon codes.
//!
//! Fix F_{2^m} with primitive element α and n = 2^m − 1. The mother RS code
//! of dimension rs_k has the roots α, α², …, α^{n−rs_k}; the BCH code is
//! its binary subcode: all binary words whose polynomials vanish on those
//! roots — equivalently on the whole conjugate closure B of the root set,
//! which makes the generator g̃(x) = ∏_{β∈B}(x−β) a product of minimal
//! polynomials and therefore binary.
//!
//! The design distance is n − rs_k + 1 (the mother code's distance); the
//! true distance can only be found by enumeration. Bounded-distance
//! decoding corrects t = ⌊(design_d−1)/2⌋ errors: syndromes s_i = y(α^{i+1})
//! for i < 2t feed Berlekamp–Massey, the locator's roots α^{−i} name the
//! error positions, and a full membership check (division by g̃) guards the
//! result — the 2t-syndrome window alone under-determines membership when
//! the window misses a conjugacy class, so a success is never a
//! non-codeword.

use thiserror::Error;

use crate::cyclic::CyclicCode;
use crate::gf::{Field, GfError};
use crate::linear::LinearCode;
use crate::matf::MatF;
use crate::poly::Poly;
use crate::DecodeReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BchError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("rs_k = {rs_k} is out of range for block length {n}")]
    BadDimension { rs_k: usize, n: usize },
    #[error("no supported field fits the requested parameters")]
    NoFieldFits,
    #[error("locator has {expected} roots expected but {found} found")]
    RootCountMismatch { found: usize, expected: usize },
    #[error("more errors than the decoder can correct")]
    Uncorrectable,
    #[error("{unerased} unerased symbols, need at least {needed}")]
    TooManyErasures { unerased: usize, needed: usize },
    #[error("unerased symbols are inconsistent with every codeword (symbol errors present)")]
    Inconsistent,
}

/// Error-locator stage output: the locator polynomial over F_{2^m} and the
/// positions it names (ℓ(α^{−i}) = 0 exactly for i in `positions`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatorResult {
    pub ell: Poly,
    pub positions: Vec<usize>,
}

/// A default primitive polynomial over F_2 for each degree 2..=16
/// (ascending coefficients), from the standard tables.
pub fn default_prime_poly(m: u32) -> Option<&'static [u64]> {
    let p: &[u64] = match m {
        2 => &[1, 1, 1],
        3 => &[1, 1, 0, 1],
        4 => &[1, 1, 0, 0, 1],
        5 => &[1, 0, 1, 0, 0, 1],
        6 => &[1, 1, 0, 0, 0, 0, 1],
        7 => &[1, 0, 0, 1, 0, 0, 0, 1],
        8 => &[1, 0, 1, 1, 1, 0, 0, 0, 1],
        9 => &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1],
        10 => &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1],
        11 => &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        12 => &[1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1],
        13 => &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        14 => &[1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1],
        15 => &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        16 => &[1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1],
        _ => return None,
    };
    Some(p)
}

/// A binary BCH code of length n = 2^m − 1.
#[derive(Debug, Clone)]
pub struct BchCode {
    field: Field,
    m: u32,
    n: usize,
    rs_k: usize,
    design_d: usize,
    t: usize,
    g_tilde: Poly,
    k_tilde: usize,
    /// The same code as a binary cyclic code; handles encoding and the
    /// membership test.
    inner: CyclicCode,
}

impl BchCode {
    /// Build the binary subcode of the dimension-rs_k RS code over
    /// F_2[z]/(prime_poly): close the root exponents 1..=n−rs_k under
    /// doubling mod n, multiply out g̃, and verify its coefficients are
    /// binary.
    pub fn make_bch(m: u32, rs_k: usize, prime_poly: &[u64]) -> Result<BchCode, BchError> {
        let field = Field::extension(2, prime_poly)?;
        assert_eq!(field.m(), m, "prime polynomial degree does not match m");
        let n = (field.q() - 1) as usize;
        if rs_k < 1 || rs_k >= n {
            return Err(BchError::BadDimension { rs_k, n });
        }
        let design_d = n - rs_k + 1;
        let t = (design_d - 1) / 2;

        // Conjugate closure of the exponent range under e ↦ 2e (mod n).
        let mut in_b = vec![false; n];
        for e in 1..=(n - rs_k) {
            let mut cur = e % n;
            while !in_b[cur] {
                in_b[cur] = true;
                cur = (cur * 2) % n;
            }
        }
        let x = Poly::x(field.clone());
        let mut g_big = Poly::one(field.clone());
        for (e, _) in in_b.iter().enumerate().filter(|(_, &b)| b) {
            let root = field.alpha_pow(e as i64);
            g_big = g_big.mul(&x.sub(&Poly::constant(field.clone(), root)));
        }
        let f2 = field.prime_subfield();
        let coeffs: Vec<u64> = g_big
            .coeffs()
            .iter()
            .map(|&c| {
                assert!(c <= 1, "generator left the binary subfield");
                c
            })
            .collect();
        let g_tilde = Poly::new(f2.clone(), coeffs);
        let k_tilde = n - g_tilde.degree().finite().unwrap();
        let inner = CyclicCode::new(f2, n, &g_tilde)
            .expect("a product of distinct roots of x^n-1 divides x^n-1");
        Ok(BchCode {
            field,
            m,
            n,
            rs_k,
            design_d,
            t,
            g_tilde,
            k_tilde,
            inner,
        })
    }

    /// Pick the largest field with 2^m − 1 ≤ max_n (default prime
    /// polynomial) and the mother dimension that gives design distance
    /// 2t + 1.
    pub fn design_for_t(max_n: usize, t: usize) -> Result<BchCode, BchError> {
        assert!(t >= 1, "design target needs t >= 1");
        let m = (2..=16u32)
            .filter(|&m| (1usize << m) - 1 <= max_n)
            .next_back()
            .ok_or(BchError::NoFieldFits)?;
        let n = (1usize << m) - 1;
        if 2 * t >= n {
            return Err(BchError::BadDimension { rs_k: 0, n });
        }
        BchCode::make_bch(m, n - 2 * t, default_prime_poly(m).unwrap())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn rs_k(&self) -> usize {
        self.rs_k
    }
    /// Design distance n − rs_k + 1; the true distance is ≥ this.
    pub fn design_d(&self) -> usize {
        self.design_d
    }
    /// Guaranteed correction radius ⌊(design_d − 1)/2⌋.
    pub fn t(&self) -> usize {
        self.t
    }
    /// The binary generator polynomial.
    pub fn g_tilde(&self) -> &Poly {
        &self.g_tilde
    }
    pub fn k_tilde(&self) -> usize {
        self.k_tilde
    }
    /// The code as a binary cyclic code.
    pub fn as_cyclic(&self) -> &CyclicCode {
        &self.inner
    }
    pub fn as_linear_code(&self) -> LinearCode {
        self.inner.as_linear_code()
    }
    /// k̃×n generator matrix (shift basis of g̃).
    pub fn generator_matrix(&self) -> MatF {
        self.inner.generator_matrix()
    }

    /// True minimum distance by codebook enumeration (2^k̃ codewords).
    pub fn true_distance(&self) -> usize {
        self.as_linear_code()
            .min_distance()
            .expect("BCH codebooks here are enumerable")
    }

    fn check_word(&self, y: &[u64]) {
        assert_eq!(y.len(), self.n, "word length must be n");
        assert!(y.iter().all(|&b| b <= 1), "BCH words are binary");
    }

    pub fn encode(&self, u: &[u64]) -> Vec<u64> {
        assert_eq!(u.len(), self.k_tilde, "info word length must be k-tilde");
        assert!(u.iter().all(|&b| b <= 1), "BCH info words are binary");
        let up = Poly::new(self.inner.field().clone(), u.to_vec());
        self.inner
            .encode_mult(&up)
            .expect("degree bounded by construction")
            .coeffs_padded(self.n)
    }

    pub fn is_codeword(&self, y: &[u64]) -> bool {
        self.check_word(y);
        let yp = Poly::new(self.inner.field().clone(), y.to_vec());
        self.inner.is_codeword(&yp)
    }

    /// The 2t syndromes s_i = y(α^{i+1}), i = 0..2t−1, evaluated in
    /// F_{2^m}. For y = c + e they equal e(α^{i+1}).
    pub fn syndromes(&self, y: &[u64]) -> Vec<u64> {
        self.check_word(y);
        let yp = Poly::new(self.field.clone(), y.to_vec());
        (0..2 * self.t)
            .map(|i| yp.eval(self.field.alpha_pow(i as i64 + 1)))
            .collect()
    }

    /// Roots of the locator among {α⁻ⁱ}: position i is reported when
    /// ℓ(α^{−i}) = 0. Succeeds only when the root count matches deg ℓ —
    /// anything else means more than t errors.
    pub fn locator_roots(&self, ell: &Poly) -> Result<Vec<usize>, BchError> {
        let deg = ell
            .degree()
            .finite()
            .expect("locator is never the zero polynomial");
        assert!(deg <= self.t, "locator degree exceeds t");
        let positions: Vec<usize> = (0..self.n)
            .filter(|&i| ell.eval(self.field.alpha_pow(-(i as i64))) == 0)
            .collect();
        if positions.len() != deg {
            return Err(BchError::RootCountMismatch {
                found: positions.len(),
                expected: deg,
            });
        }
        Ok(positions)
    }

    /// Syndromes → Berlekamp–Massey → root search.
    pub fn locate_errors(&self, y: &[u64]) -> Result<LocatorResult, BchError> {
        let s = self.syndromes(y);
        let ell = berlekamp_massey(&self.field, &s);
        if ell.degree().finite().unwrap() > self.t {
            return Err(BchError::Uncorrectable);
        }
        let positions = self
            .locator_roots(&ell)
            .map_err(|_| BchError::Uncorrectable)?;
        Ok(LocatorResult { ell, positions })
    }

    /// Bounded-distance decoding: locate, flip, and verify full membership.
    /// Guaranteed to return the transmitted codeword when at most t bits
    /// are in error; never reports success with a non-codeword.
    pub fn bm_decode(&self, y: &[u64]) -> Result<DecodeReport, BchError> {
        let located = self.locate_errors(y)?;
        self.apply_flips(y, &located.positions)
    }

    fn apply_flips(&self, y: &[u64], positions: &[usize]) -> Result<DecodeReport, BchError> {
        let mut codeword = y.to_vec();
        let mut error = vec![0u64; self.n];
        for &i in positions {
            codeword[i] ^= 1;
            error[i] = 1;
        }
        if !self.is_codeword(&codeword) {
            return Err(BchError::Uncorrectable);
        }
        Ok(DecodeReport { codeword, error })
    }

    /// The hand method for t = 2 codes: with s_i = y(α^{i+1}), a weight-2
    /// error at positions {i, j} has γ = αⁱ, ρ = αʲ satisfying
    /// γ + ρ = s₀ and γρ = s₀² − s₂·s₀⁻¹, so the positions fall out of
    /// factoring x² + s₀x + γρ. Weight ≤ 1 is tested first (s₂ = s₀³), and
    /// s₀ = 0 with a nonzero window means more than two errors.
    pub fn two_error_decode(&self, y: &[u64]) -> Result<DecodeReport, BchError> {
        assert_eq!(self.t, 2, "closed form requires a t = 2 code");
        let f = &self.field;
        let s = self.syndromes(y);
        // Frobenius ties for binary words: s₁ = s₀², s₃ = s₁².
        debug_assert_eq!(s[1], f.mul(s[0], s[0]));
        debug_assert_eq!(s[3], f.mul(s[1], s[1]));
        if s.iter().all(|&v| v == 0) {
            return self.apply_flips(y, &[]);
        }
        let (s0, s2) = (s[0], s[2]);
        if s0 == 0 {
            return Err(BchError::Uncorrectable);
        }
        let s0_cubed = f.pow(s0, 3).unwrap();
        if s2 == s0_cubed {
            // Single error: the syndrome sequence is geometric in γ = s₀.
            let i = f.log(s0).expect("s0 nonzero") as usize;
            return self.apply_flips(y, &[i]);
        }
        // γρ = s₀² − s₂/s₀ (nonzero here since s₂ ≠ s₀³).
        let gamma_rho = f.sub(f.mul(s0, s0), f.div(s2, s0).unwrap());
        let positions: Vec<usize> = (0..self.n)
            .filter(|&i| {
                let a = f.alpha_pow(i as i64);
                // x² + s₀x + γρ at x = αⁱ (char 2).
                f.add(f.add(f.mul(a, a), f.mul(s0, a)), gamma_rho) == 0
            })
            .collect();
        if positions.len() != 2 {
            return Err(BchError::Uncorrectable);
        }
        self.apply_flips(y, &positions)
    }

    /// Erasure decoding against this code's own generator matrix.
    pub fn erasure_decode(&self, y: &[Option<u64>]) -> Result<Vec<u64>, BchError> {
        self.erasure_decode_with(&self.generator_matrix(), y)
    }

    /// Erasure decoding relative to a given k̃×n generator matrix of this
    /// code: greedily select the lowest-index unerased positions whose
    /// G-columns are linearly independent, solve for u, re-encode, and
    /// check every unerased position. With at most design_d − 1 erasures
    /// the selection always reaches k̃ columns (any n − design_d + 1
    /// positions of a distance-≥design_d code carry full rank).
    pub fn erasure_decode_with(
        &self,
        g: &MatF,
        y: &[Option<u64>],
    ) -> Result<Vec<u64>, BchError> {
        assert_eq!(
            (g.rows(), g.cols()),
            (self.k_tilde, self.n),
            "generator matrix shape mismatch"
        );
        assert_eq!(y.len(), self.n, "word length must be n");
        let unerased: Vec<usize> = (0..y.len()).filter(|&i| y[i].is_some()).collect();
        let needed = self.n - (self.design_d - 1);
        if unerased.len() < needed {
            return Err(BchError::TooManyErasures {
                unerased: unerased.len(),
                needed,
            });
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(self.k_tilde);
        for &pos in &unerased {
            if chosen.len() == self.k_tilde {
                break;
            }
            let mut cols = chosen.clone();
            cols.push(pos);
            if g.select_columns(&cols).rank() == cols.len() {
                chosen.push(pos);
            }
        }
        assert_eq!(
            chosen.len(),
            self.k_tilde,
            "the distance guarantee provides k independent columns"
        );
        let sub = g.select_columns(&chosen);
        let sub_inv = sub.invert().expect("chosen columns are independent");
        let rhs: Vec<u64> = chosen.iter().map(|&i| y[i].unwrap()).collect();
        let u = sub_inv.vec_mul(&rhs); // u·G̃ = rhs
        let reencoded = g.vec_mul(&u);
        for &i in &unerased {
            if reencoded[i] != y[i].unwrap() {
                return Err(BchError::Inconsistent);
            }
        }
        Ok(u)
    }
}

/// LFSR synthesis: the minimal connection polynomial ℓ (ℓ₀ = 1) with
/// Σ_j ℓ_j·s_{i−j} = 0 for deg ℓ ≤ i < len(s). For an error pattern of
/// weight w ≤ t observed through 2t syndromes, the result is exactly the
/// error locator of degree w.
pub fn berlekamp_massey(field: &Field, s: &[u64]) -> Poly {
    let f = field.clone();
    let mut c = Poly::one(f.clone()); // connection polynomial
    let mut b = Poly::one(f.clone()); // last length-change copy
    let mut l = 0usize; // current LFSR length
    let mut gap = 1usize; // iterations since the copy
    let mut bb = 1u64; // discrepancy at the copy
    for i in 0..s.len() {
        // Discrepancy: how far the current LFSR misses s[i].
        let mut d = s[i];
        for j in 1..=l {
            d = f.add(d, f.mul(c.coeff(j), s[i - j]));
        }
        if d == 0 {
            gap += 1;
        } else {
            let corr = b
                .mul(&Poly::monomial(f.clone(), f.div(d, bb).unwrap(), gap));
            if 2 * l <= i {
                let prev = c.clone();
                c = c.sub(&corr);
                l = i + 1 - l;
                b = prev;
                bb = d;
                gap = 1;
            } else {
                c = c.sub(&corr);
                gap += 1;
            }
        }
    }
    c
}
