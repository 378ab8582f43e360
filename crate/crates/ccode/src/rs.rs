//! Reed–Solomon codes as polynomial-evaluation codes.
//!
//! A message u ∈ F_q^k names the polynomial u(x) = u₀ + u₁x + … of degree
//! < k; the codeword is its value list over a fixed sequence of distinct
//! evaluation points. Three point layouts are supported:
//!
//! - full: n = q, points (0, 1, α, α², …, α^{q−2});
//! - primitive: n = q−1, points (α⁰, α¹, …, α^{n−1});
//! - punctured: the full layout with the last `removed` points dropped.
//!
//! The primitive variant is cyclic; only it carries syndromes, the check
//! matrix, and the generator polynomial. A nonzero message polynomial has
//! at most k−1 roots, so every nonzero codeword has weight ≥ n−k+1: the
//! code is MDS.
//!
//! The Fourier pair here is the finite-field transform c_i = v(ωⁱ) with
//! inverse v_i = (n·1)⁻¹·c(ω⁻ⁱ); n·1 ≠ 0 because ord(ω) divides q−1, which
//! is coprime to the characteristic.

use thiserror::Error;

use crate::gf::Field;
use crate::linear::{LinearCode, LinearError};
use crate::matf::MatF;
use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RsError {
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vector length {len} is not the order {order} of omega")]
    LengthNotOrder { len: usize, order: u64 },
    #[error("operation requires the primitive (cyclic) variant")]
    NotPrimitiveVariant,
    #[error("{unerased} unerased symbols cannot determine {k} message symbols")]
    TooManyErasures { unerased: usize, k: usize },
    #[error("unerased symbols are inconsistent with every codeword (symbol errors present)")]
    Inconsistent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RsVariant {
    Full,
    Primitive,
    /// Full layout with the last `removed` points dropped.
    Punctured { removed: usize },
}

/// An (n, k) Reed–Solomon code over F_q.
#[derive(Debug, Clone)]
pub struct RsCode {
    field: Field,
    variant: RsVariant,
    k: usize,
    points: Vec<u64>,
}

impl RsCode {
    /// n = q; evaluation points 0, 1, α, α², …, α^{q−2}.
    pub fn full(field: Field, k: usize) -> RsCode {
        let points = full_points(&field);
        RsCode::with_points(field, RsVariant::Full, k, points)
    }

    /// n = q−1; evaluation points α⁰, …, α^{n−1}. The cyclic variant.
    pub fn primitive(field: Field, k: usize) -> RsCode {
        let n = (field.q() - 1) as usize;
        let points = (0..n).map(|i| field.alpha_pow(i as i64)).collect();
        RsCode::with_points(field, RsVariant::Primitive, k, points)
    }

    /// The full layout minus its last `removed` points; n = q − removed.
    pub fn punctured(field: Field, k: usize, removed: usize) -> RsCode {
        let mut points = full_points(&field);
        assert!(
            removed < points.len(),
            "cannot remove every evaluation point"
        );
        points.truncate(points.len() - removed);
        RsCode::with_points(field, RsVariant::Punctured { removed }, k, points)
    }

    fn with_points(field: Field, variant: RsVariant, k: usize, points: Vec<u64>) -> RsCode {
        assert!(
            k >= 1 && k <= points.len(),
            "dimension must satisfy 1 <= k <= n"
        );
        RsCode {
            field,
            variant,
            k,
            points,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn variant(&self) -> RsVariant {
        self.variant
    }
    pub fn n(&self) -> usize {
        self.points.len()
    }
    pub fn k(&self) -> usize {
        self.k
    }
    /// Minimum distance n−k+1 (MDS).
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }
    pub fn eval_points(&self) -> &[u64] {
        &self.points
    }

    /// The evaluation map: u ↦ (u(β₁), …, u(β_n)).
    pub fn encode_eval(&self, u: &[u64]) -> Result<Vec<u64>, RsError> {
        if u.len() != self.k {
            return Err(RsError::LengthMismatch {
                expected: self.k,
                got: u.len(),
            });
        }
        let poly = Poly::new(self.field.clone(), u.to_vec());
        Ok(self.points.iter().map(|&b| poly.eval(b)).collect())
    }

    /// k×n Vandermonde generator: row i, column j holds β_j^i.
    pub fn generator_matrix(&self) -> MatF {
        let f = &self.field;
        let mut g = MatF::zero(f.clone(), self.k, self.n());
        for (j, &b) in self.points.iter().enumerate() {
            let mut p = 1u64;
            for i in 0..self.k {
                g.set(i, j, p);
                p = f.mul(p, b);
            }
        }
        g
    }

    /// View as a generic linear code.
    pub fn as_linear_code(&self) -> LinearCode {
        LinearCode::from_generator(self.generator_matrix())
            .expect("Vandermonde rows on distinct points are independent")
    }

    fn require_primitive(&self) -> Result<(), RsError> {
        if self.variant != RsVariant::Primitive {
            return Err(RsError::NotPrimitiveVariant);
        }
        Ok(())
    }

    /// The cyclic generator polynomial ∏_{j=1}^{n−k}(x − α^j); primitive
    /// variant only.
    pub fn generator_poly(&self) -> Result<Poly, RsError> {
        self.require_primitive()?;
        let f = self.field.clone();
        let x = Poly::x(f.clone());
        let mut g = Poly::one(f.clone());
        for j in 1..=(self.n() - self.k) {
            let root = f.alpha_pow(j as i64);
            g = g.mul(&x.sub(&Poly::constant(f.clone(), root)));
        }
        Ok(g)
    }

    /// Syndromes (y(α), y(α²), …, y(α^{n−k})); zero iff y is a codeword.
    /// Primitive variant only.
    pub fn syndrome(&self, y: &[u64]) -> Result<Vec<u64>, RsError> {
        self.require_primitive()?;
        if y.len() != self.n() {
            return Err(RsError::LengthMismatch {
                expected: self.n(),
                got: y.len(),
            });
        }
        let poly = Poly::new(self.field.clone(), y.to_vec());
        Ok((1..=(self.n() - self.k))
            .map(|j| poly.eval(self.field.alpha_pow(j as i64)))
            .collect())
    }

    /// (n−k)×n check matrix with entry (i, j) = α^{(i+1)j}; y·Hᵀ equals the
    /// syndrome vector. Primitive variant only.
    pub fn check_matrix(&self) -> Result<MatF, RsError> {
        self.require_primitive()?;
        let f = &self.field;
        let nk = self.n() - self.k;
        let mut h = MatF::zero(f.clone(), nk, self.n());
        for i in 0..nk {
            for j in 0..self.n() {
                h.set(i, j, f.alpha_pow(((i + 1) * j) as i64));
            }
        }
        Ok(h)
    }

    /// Recover the message from a codeword with erased symbols (`None`).
    /// Any k correct symbols determine u (MDS property); the first k
    /// unerased positions are used, then every unerased position is checked
    /// against the re-encoding. A mismatch means symbol errors, which this
    /// decoder does not correct.
    pub fn erasure_decode_mds(&self, y: &[Option<u64>]) -> Result<Vec<u64>, RsError> {
        if y.len() != self.n() {
            return Err(RsError::LengthMismatch {
                expected: self.n(),
                got: y.len(),
            });
        }
        let unerased: Vec<usize> = (0..y.len()).filter(|&i| y[i].is_some()).collect();
        if unerased.len() < self.k {
            return Err(RsError::TooManyErasures {
                unerased: unerased.len(),
                k: self.k,
            });
        }
        let chosen = &unerased[..self.k];
        let sub = self.generator_matrix().select_columns(chosen);
        let sub_inv = sub
            .invert()
            .expect("Vandermonde columns on distinct points are independent");
        let rhs: Vec<u64> = chosen.iter().map(|&i| y[i].unwrap()).collect();
        // u·G̃ = rhs, so u = rhs·G̃⁻¹.
        let u = sub_inv.vec_mul(&rhs);
        let reencoded = self.encode_eval(&u)?;
        for &i in &unerased {
            if reencoded[i] != y[i].unwrap() {
                return Err(RsError::Inconsistent);
            }
        }
        Ok(u)
    }
}

fn full_points(field: &Field) -> Vec<u64> {
    let q = field.q() as usize;
    let mut points = Vec::with_capacity(q);
    points.push(0);
    for i in 0..q - 1 {
        points.push(field.alpha_pow(i as i64));
    }
    points
}

/// Fourier transform c_i = v(ωⁱ), i = 0..n−1; requires n = ord(ω).
pub fn fourier(field: &Field, v: &[u64], omega: u64) -> Result<Vec<u64>, RsError> {
    check_order(field, v.len(), omega)?;
    let poly = Poly::new(field.clone(), v.to_vec());
    Ok((0..v.len())
        .map(|i| poly.eval(field.pow(omega, i as i64).unwrap()))
        .collect())
}

/// Inverse transform v_i = (n·1)⁻¹ · c(ω⁻ⁱ).
pub fn inv_fourier(field: &Field, c: &[u64], omega: u64) -> Result<Vec<u64>, RsError> {
    check_order(field, c.len(), omega)?;
    let n = c.len();
    // n·1 in the field: n reduced mod the characteristic. Nonzero because
    // n | q−1 and gcd(q−1, p) = 1.
    let n_elem = (n as u64) % field.p();
    let n_inv = field.inv(n_elem).expect("block length unit is invertible");
    let poly = Poly::new(field.clone(), c.to_vec());
    Ok((0..n)
        .map(|i| {
            let w = field.pow(omega, -(i as i64)).unwrap();
            field.mul(n_inv, poly.eval(w))
        })
        .collect())
}

fn check_order(field: &Field, len: usize, omega: u64) -> Result<(), RsError> {
    let order = field
        .element_order(omega)
        .expect("omega must be a nonzero element");
    if len as u64 != order {
        return Err(RsError::LengthNotOrder { len, order });
    }
    Ok(())
}

/// Does the code meet the Singleton bound with equality (|C| = q^{n−d+1})?
pub fn singleton_check(code: &LinearCode) -> Result<bool, LinearError> {
    let d = code.min_distance()?;
    Ok(code.k() == code.n() - d + 1)
}
