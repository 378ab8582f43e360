//! Cyclic codes of block length n: ideals of F_q[x]/(xⁿ−1).
//!
//! A cyclic code is presented by its generator polynomial g, the monic
//! nonzero codeword of least degree; validity requires g | xⁿ−1 (and hence
//! g₀ ≠ 0). Codewords are polynomials of degree < n; the vector view is the
//! coefficient list c₀..c_{n−1}.
//!
//! Three encoders are provided — plain multiplication u·g, systematic in
//! the high positions, and systematic in the low positions — together with
//! their data-recovery inverses. They are different bijections of the same
//! 2^k… q^k message space onto the same codebook.
//!
//! The `*_raw` free functions compute the same formulas without requiring
//! g | xⁿ−1; the systematic structure survives, membership does not. They
//! exist for exploring what the encoders do with an invalid generator.

use thiserror::Error;

use crate::gf::Field;
use crate::linear::LinearCode;
use crate::matf::MatF;
use crate::poly::{Degree, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicError {
    #[error("generator polynomial does not divide x^{0}-1")]
    NotADivisor(usize),
    #[error("generator polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("data polynomial degree exceeds k-1 = {0}")]
    DegreeTooHigh(usize),
}

/// xⁿ − 1 over the given field.
pub fn x_pow_minus_one(field: &Field, n: usize) -> Poly {
    assert!(n >= 1);
    let mut coeffs = vec![0u64; n + 1];
    coeffs[0] = field.neg(1);
    coeffs[n] = 1;
    Poly::new(field.clone(), coeffs)
}

/// The i-fold cyclic shift of a length-n word: xⁱ·c mod (xⁿ−1), i.e. the
/// coefficient vector rotated right by i. Panics unless degree(c) < n.
pub fn cyclic_shift(c: &Poly, i: usize, n: usize) -> Poly {
    assert!(c.degree() < Degree::Finite(n), "word does not fit in length n");
    let src = c.coeffs_padded(n);
    let mut out = vec![0u64; n];
    for (j, &v) in src.iter().enumerate() {
        out[(j + i) % n] = v;
    }
    Poly::new(c.field().clone(), out)
}

/// u(x)·g(x) — the multiplication encoder, with any g.
pub fn encode_mult_raw(g: &Poly, u: &Poly) -> Poly {
    u.mul(g)
}

/// The right-systematic encoder formula with any monic g of degree n−k:
/// x^{n−k}u − (x^{n−k}u mod g). Data occupies coefficients n−k..n−1.
pub fn encode_sys_right_raw(g: &Poly, n: usize, u: &Poly) -> Poly {
    let nk = g.degree().finite().expect("constant-free generator");
    let shifted = u.mul(&Poly::monomial(g.field().clone(), 1, nk));
    let c = shifted.sub(&shifted.rem(g));
    debug_assert!(c.degree() < Degree::Finite(n.max(1)));
    c
}

/// The left-systematic encoder formula with any monic g of degree n−k:
/// u − x^k·(x^{n−k}u mod g). Data occupies coefficients 0..k−1.
pub fn encode_sys_left_raw(g: &Poly, n: usize, u: &Poly) -> Poly {
    let nk = g.degree().finite().expect("constant-free generator");
    let k = n - nk;
    let f = g.field().clone();
    let r = u.mul(&Poly::monomial(f.clone(), 1, nk)).rem(g);
    u.sub(&r.mul(&Poly::monomial(f, 1, k)))
}

/// An (n, k) cyclic code with generator polynomial g, k = n − deg g.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    field: Field,
    n: usize,
    k: usize,
    g: Poly,
    h: Poly,
}

impl CyclicCode {
    /// Validate and build. `g` is normalized monic; it must have a nonzero
    /// constant term and divide xⁿ−1.
    pub fn new(field: Field, n: usize, g: &Poly) -> Result<CyclicCode, CyclicError> {
        assert!(n >= 1, "zero block length");
        assert!(*g.field() == field, "generator over the wrong field");
        assert!(!g.is_zero(), "zero generator polynomial");
        assert!(
            g.degree() <= Degree::Finite(n),
            "generator degree exceeds block length"
        );
        if g.coeff(0) == 0 {
            return Err(CyclicError::ZeroConstantTerm);
        }
        let lead_inv = field.inv(g.leading_coeff()).expect("nonzero leading coeff");
        let g = g.scale(lead_inv);
        let modulus = x_pow_minus_one(&field, n);
        let (h, r) = modulus.div_rem(&g);
        if !r.is_zero() {
            return Err(CyclicError::NotADivisor(n));
        }
        let k = n - g.degree().finite().unwrap();
        Ok(CyclicCode { field, n, k, g, h })
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
    /// The monic generator polynomial.
    pub fn generator_poly(&self) -> &Poly {
        &self.g
    }
    /// The check polynomial h = (xⁿ−1)/g, degree k.
    pub fn check_poly(&self) -> &Poly {
        &self.h
    }

    fn check_data(&self, u: &Poly) -> Result<(), CyclicError> {
        assert!(*u.field() == self.field, "data over the wrong field");
        if self.k == 0 {
            if !u.is_zero() {
                return Err(CyclicError::DegreeTooHigh(0));
            }
            return Ok(());
        }
        if u.degree() > Degree::Finite(self.k - 1) {
            return Err(CyclicError::DegreeTooHigh(self.k - 1));
        }
        Ok(())
    }

    /// u ↦ u·g.
    pub fn encode_mult(&self, u: &Poly) -> Result<Poly, CyclicError> {
        self.check_data(u)?;
        Ok(encode_mult_raw(&self.g, u))
    }

    /// Inverse of [`encode_mult`](Self::encode_mult): exact division by g.
    /// Panics if c is not a codeword.
    pub fn decode_mult(&self, c: &Poly) -> Poly {
        let (q, r) = c.div_rem(&self.g);
        assert!(r.is_zero(), "not a codeword");
        q
    }

    /// Systematic encoder, data in the high coefficients n−k..n−1.
    pub fn encode_sys_right(&self, u: &Poly) -> Result<Poly, CyclicError> {
        self.check_data(u)?;
        Ok(encode_sys_right_raw(&self.g, self.n, u))
    }

    /// Data recovery for the right-systematic encoder: strip the high
    /// coefficients. Panics if c is not a codeword.
    pub fn decode_sys_right(&self, c: &Poly) -> Poly {
        assert!(self.is_codeword(c), "not a codeword");
        let full = c.coeffs_padded(self.n);
        Poly::new(self.field.clone(), full[self.n - self.k..].to_vec())
    }

    /// Systematic encoder, data in the low coefficients 0..k−1.
    pub fn encode_sys_left(&self, u: &Poly) -> Result<Poly, CyclicError> {
        self.check_data(u)?;
        Ok(encode_sys_left_raw(&self.g, self.n, u))
    }

    /// Data recovery for the left-systematic encoder: strip the low
    /// coefficients. Panics if c is not a codeword.
    pub fn decode_sys_left(&self, c: &Poly) -> Poly {
        assert!(self.is_codeword(c), "not a codeword");
        let full = c.coeffs_padded(self.n);
        Poly::new(self.field.clone(), full[..self.k].to_vec())
    }

    /// The syndrome polynomial s = v mod g; v is a codeword iff s = 0.
    pub fn syndrome_poly(&self, v: &Poly) -> Poly {
        assert!(
            v.degree() < Degree::Finite(self.n),
            "received word does not fit in length n"
        );
        v.rem(&self.g)
    }

    pub fn is_codeword(&self, v: &Poly) -> bool {
        self.syndrome_poly(v).is_zero()
    }

    /// k×n generator matrix; row i is xⁱ·g.
    pub fn generator_matrix(&self) -> MatF {
        let rows: Vec<Vec<u64>> = (0..self.k)
            .map(|i| {
                cyclic_shift(&self.g, i, self.n).coeffs_padded(self.n)
            })
            .collect();
        if rows.is_empty() {
            return MatF::zero(self.field.clone(), 0, self.n);
        }
        MatF::from_rows(self.field.clone(), &rows)
    }

    /// (n−k)×n check matrix of shifted, reversed check-polynomial
    /// coefficients: row i holds h_k, h_{k−1}, …, h₀ starting at column i.
    pub fn check_matrix(&self) -> MatF {
        let nk = self.n - self.k;
        let h = self.h.coeffs_padded(self.k + 1);
        let mut m = MatF::zero(self.field.clone(), nk, self.n);
        for i in 0..nk {
            for j in 0..=self.k {
                m.set(i, i + j, h[self.k - j]);
            }
        }
        m
    }

    /// View as a generic linear code (generator = the shift basis of g).
    pub fn as_linear_code(&self) -> LinearCode {
        LinearCode::from_generator(self.generator_matrix())
            .expect("shift basis rows are independent")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn code_15_11() -> CyclicCode {
        let g = Poly::new(f2(), vec![1, 1, 0, 0, 1]);
        CyclicCode::new(f2(), 15, &g).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        let c = code_15_11();
        assert_eq!((c.n(), c.k()), (15, 11));
        assert_eq!(c.generator_poly().mul(c.check_poly()), x_pow_minus_one(&f2(), 15));

        let c63 = CyclicCode::new(f2(), 6, &Poly::new(f2(), vec![1, 0, 0, 1])).unwrap();
        assert_eq!(c63.k(), 3);

        // 1+x+x² does not divide x⁵−1 = (1+x)(1+x+x²+x³+x⁴).
        let bad = CyclicCode::new(f2(), 5, &Poly::new(f2(), vec![1, 1, 1]));
        assert_eq!(bad.unwrap_err(), CyclicError::NotADivisor(5));

        let zc = CyclicCode::new(f2(), 5, &Poly::x(f2()));
        assert_eq!(zc.unwrap_err(), CyclicError::ZeroConstantTerm);
    }

    #[test]
    fn non_monic_generator_normalized() {
        let f3 = Field::prime(3).unwrap();
        // 2+2x scales to the monic 1+x, which divides x²−1 over F_3.
        let c = CyclicCode::new(f3.clone(), 2, &Poly::new(f3.clone(), vec![2, 2])).unwrap();
        assert_eq!(c.generator_poly().coeffs(), &[1, 1]);
        assert_eq!(c.k(), 1);
    }

    #[test]
    fn shifts() {
        let f5 = Field::prime(5).unwrap();
        let c = Poly::new(f5.clone(), vec![1, 2, 3]);
        assert_eq!(cyclic_shift(&c, 1, 3).coeffs(), &[3, 1, 2]);
        assert_eq!(cyclic_shift(&c, 3, 3), c);
        assert_eq!(
            cyclic_shift(&cyclic_shift(&c, 1, 3), 1, 3),
            cyclic_shift(&c, 2, 3)
        );
        // Identity with the polynomial definition xⁱ·c mod (xⁿ−1).
        let m = x_pow_minus_one(&f5, 3);
        let alg = c.mul(&Poly::monomial(f5, 1, 2)).rem(&m);
        assert_eq!(cyclic_shift(&c, 2, 3), alg);
    }

    #[test]
    fn three_encoders_15_11() {
        let c = code_15_11();
        let u = Poly::new(f2(), vec![0, 1, 1, 1]); // x + x² + x³

        let m = c.encode_mult(&u).unwrap();
        assert_eq!(m.coeffs(), &[0, 1, 0, 0, 1, 1, 1, 1]); // x+x⁴+x⁵+x⁶+x⁷

        let r = c.encode_sys_right(&u).unwrap();
        assert_eq!(r.coeffs(), &[1, 0, 0, 0, 0, 1, 1, 1]); // 1+x⁵+x⁶+x⁷
        // Data sits verbatim in coefficients n−k..n−1.
        assert_eq!(&r.coeffs_padded(15)[4..], &u.coeffs_padded(11)[..]);

        let l = c.encode_sys_left(&u).unwrap();
        assert_eq!(&l.coeffs_padded(15)[..11], &u.coeffs_padded(11)[..]);

        for e in [&m, &r, &l] {
            assert!(c.is_codeword(e));
        }
        assert_eq!(c.decode_mult(&m), u);
        assert_eq!(c.decode_sys_right(&r), u);
        assert_eq!(c.decode_sys_left(&l), u);

        let too_big = Poly::monomial(f2(), 1, 11);
        assert_eq!(
            c.encode_mult(&too_big).unwrap_err(),
            CyclicError::DegreeTooHigh(10)
        );
    }

    #[test]
    fn raw_encoders_with_invalid_generator() {
        // 1+x² = (1+x)² does not divide x⁵−1, so the code is rejected —
        // but the systematic formulas still compute. Data bits 011.
        let g = Poly::new(f2(), vec![1, 0, 1]);
        assert!(CyclicCode::new(f2(), 5, &g).is_err());
        let u = Poly::new(f2(), vec![0, 1, 1]);
        let right = encode_sys_right_raw(&g, 5, &u);
        assert_eq!(right.coeffs_padded(5), vec![1, 1, 0, 1, 1]);
        let left = encode_sys_left_raw(&g, 5, &u);
        assert_eq!(left.coeffs_padded(5), vec![0, 1, 1, 1, 1]);
        // Systematic positions carry the data either way.
        assert_eq!(&right.coeffs_padded(5)[2..], &[0, 1, 1]);
        assert_eq!(&left.coeffs_padded(5)[..3], &[0, 1, 1]);
    }

    #[test]
    fn syndrome_21_12() {
        let g = Poly::new(f2(), vec![1, 1, 0, 0, 1, 1, 0, 1, 1, 1]);
        let c = CyclicCode::new(f2(), 21, &g).unwrap();
        assert_eq!(c.k(), 12);
        let mut r = vec![0u64; 17];
        (r[0], r[4], r[16]) = (1, 1, 1); // 1 + x⁴ + x¹⁶
        let r = Poly::new(f2(), r);
        let s = c.syndrome_poly(&r);
        assert_eq!(s.coeffs(), &[1, 0, 1, 1, 0, 1, 0, 1]); // 1+x²+x³+x⁵+x⁷
        assert!(!c.is_codeword(&r));
        assert!(c.is_codeword(&Poly::zero(f2())));
    }

    #[test]
    fn matrices() {
        let c = code_15_11();
        let g = c.generator_matrix();
        let h = c.check_matrix();
        assert_eq!((g.rows(), g.cols()), (11, 15));
        assert_eq!((h.rows(), h.cols()), (4, 15));
        assert_eq!(g.rank(), 11);
        assert_eq!(h.rank(), 4);
        let prod = g.mat_mul(&h.transpose());
        assert!(prod.rows_iter().all(|r| r.iter().all(|&v| v == 0)));

        // Enumerate the (6,3) codebook: every codeword orthogonal to H.
        let c63 = CyclicCode::new(f2(), 6, &Poly::new(f2(), vec![1, 0, 0, 1])).unwrap();
        let lin = c63.as_linear_code();
        let h63 = c63.check_matrix();
        for cw in lin.codewords().unwrap() {
            assert!(h63.mul_vec(&cw).iter().all(|&v| v == 0));
        }

        // k = n code: generator 1, empty check matrix.
        let full = CyclicCode::new(f2(), 4, &Poly::one(f2())).unwrap();
        assert_eq!(full.k(), 4);
        assert_eq!(full.check_matrix().rows(), 0);
    }

    #[test]
    fn shift_closure() {
        let c = code_15_11();
        let cw = c.encode_mult(&Poly::new(f2(), vec![1, 0, 1, 1, 0, 1])).unwrap();
        for i in 0..15 {
            assert!(c.is_codeword(&cyclic_shift(&cw, i, 15)));
        }
    }
}
