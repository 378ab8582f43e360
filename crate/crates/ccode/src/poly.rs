//! Polynomials over a finite field.
//!
//! Coefficients are stored dense in ascending order (`coeffs[i]` multiplies
//! x^i) and kept normalized: the top coefficient is nonzero, and the zero
//! polynomial stores an empty vector. The degree of the zero polynomial is
//! [`Degree::NegInf`], which orders below every finite degree and absorbs
//! under addition — so `deg(a*b) = deg(a) + deg(b)` holds without special
//! cases.
//!
//! Mixing polynomials over different fields panics.

use std::cmp::Ordering;
use std::fmt;

use crate::gf::Field;

/// Degree of a polynomial: `NegInf` for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInf, Degree::NegInf) => Ordering::Equal,
            (Degree::NegInf, _) => Ordering::Less,
            (_, Degree::NegInf) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl std::ops::Add for Degree {
    type Output = Degree;
    /// deg(a) + deg(b), with NegInf absorbing: matches deg(a*b).
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    /// Ascending coefficients; invariant: empty, or last() != 0.
    coeffs: Vec<u64>,
}

impl Poly {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    /// Panics if a coefficient is not an element of `field`.
    pub fn new(field: Field, mut coeffs: Vec<u64>) -> Poly {
        for &c in &coeffs {
            assert!(c < field.q(), "coefficient {c} is not an element of {field}");
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn constant(field: Field, c: u64) -> Poly {
        Poly::new(field, vec![c])
    }

    /// The monomial x.
    pub fn x(field: Field) -> Poly {
        Poly::new(field, vec![0, 1])
    }

    /// c * x^k.
    pub fn monomial(field: Field, c: u64, k: usize) -> Poly {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of x^i (0 beyond the stored degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Ascending coefficients padded with zeros to exactly `len` entries.
    /// Panics if the polynomial does not fit.
    pub fn coeffs_padded(&self, len: usize) -> Vec<u64> {
        assert!(
            self.coeffs.len() <= len,
            "degree {} polynomial does not fit in {len} coefficients",
            self.degree()
        );
        let mut v = self.coeffs.clone();
        v.resize(len, 0);
        v
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInf
        } else {
            Degree::Finite(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn require_same_field(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "polynomials belong to different fields"
        );
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        self.require_same_field(rhs);
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), rhs.coeff(i)))
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        let coeffs = self.coeffs.iter().map(|&c| f.neg(c)).collect();
        Poly::new(f.clone(), coeffs)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    /// Schoolbook product; O(deg a * deg b), ample for coding-size inputs.
    pub fn mul(&self, rhs: &Poly) -> Poly {
        self.require_same_field(rhs);
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f.clone());
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::new(f.clone(), coeffs)
    }

    pub fn scale(&self, c: u64) -> Poly {
        let f = &self.field;
        let coeffs = self.coeffs.iter().map(|&a| f.mul(a, c)).collect();
        Poly::new(f.clone(), coeffs)
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg r < deg d. Panics if the divisor is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        self.require_same_field(d);
        assert!(!d.is_zero(), "polynomial division by zero");
        let f = self.field.clone();
        let dd = d.coeffs.len() - 1;
        let lead_inv = f.inv(d.leading_coeff()).expect("leading coeff nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let qc = f.mul(c, lead_inv);
            quot[i - dd] = qc;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = f.sub(rem[idx], f.mul(qc, dc));
            }
        }
        (Poly::new(f.clone(), quot), Poly::new(f, rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// Horner evaluation at a point.
    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let p = f.p();
        let coeffs: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul((i as u64) % p, c))
            .collect();
        Poly::new(f.clone(), coeffs)
    }

    /// Monic greatest common divisor (gcd(0,0) = 0).
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.require_same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = self.field.inv(a.leading_coeff()).unwrap();
            a.scale(inv)
        }
    }

    /// Irreducibility over the coefficient field by trial division: a monic
    /// polynomial of degree m >= 1 is irreducible iff no monic polynomial of
    /// degree in [1, m/2] divides it. Exponential in m — intended for the
    /// small degrees used to build extension fields. Panics on non-monic
    /// input or degree 0.
    pub fn is_irreducible(&self) -> bool {
        let m = match self.degree() {
            Degree::Finite(m) => m,
            Degree::NegInf => panic!("irreducibility of the zero polynomial"),
        };
        assert!(self.is_monic(), "irreducibility requires a monic polynomial");
        assert!(m >= 1, "irreducibility of a constant");
        if m == 1 {
            return true;
        }
        let f = &self.field;
        let q = f.q();
        for d in 1..=m / 2 {
            // All monic degree-d candidates: low coefficients count in base q.
            let mut low = vec![0u64; d];
            loop {
                let mut cand = low.clone();
                cand.push(1);
                if Poly::new(f.clone(), cand).divides(self) {
                    return false;
                }
                // Odometer increment.
                let mut i = 0;
                loop {
                    if i == d {
                        break;
                    }
                    low[i] += 1;
                    if low[i] < q {
                        break;
                    }
                    low[i] = 0;
                    i += 1;
                }
                if i == d {
                    break;
                }
            }
        }
        true
    }

    /// All roots in the coefficient field, ascending by encoding, with
    /// multiplicity 1 each (multiplicities are not reported).
    pub fn roots(&self) -> Vec<u64> {
        if self.is_zero() {
            panic!("every point is a root of the zero polynomial");
        }
        self.field.elems().filter(|&x| self.eval(x) == 0).collect()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    /// Ascending-power form, e.g. `1+x^4+x^6+x^7+x^8`; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (_, 1) => write!(f, "{var}")?,
                _ => write!(f, "{c}{var}")?,
            }
        }
        Ok(())
    }
}
