//! Prime fields F_p and extension fields F_{p^m}.
//!
//! An element of F_{p^m} is a residue class of F_p[x] modulo a degree-m prime
//! polynomial. We encode it as the integer in `[0, q)` whose base-p digits are
//! the coefficients of the residue, digit i holding the coefficient of x^i.
//! For p = 2 this is the familiar bit-pattern encoding: in F_16 built from
//! 1 + z + z^4, the element 1 + z^3 is `0b1001 = 9`.
//!
//! Multiplication uses log/antilog tables over a primitive element for
//! q <= 2^16 and falls back to polynomial multiplication mod the prime
//! polynomial for larger fields (correct, but not tuned).
//!
//! [`Field`] is an immutable shared handle; all value-level operations take
//! and return raw `u64` encodings. [`Elem`] wraps a value together with its
//! field for operator syntax.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::poly::Poly;

/// Largest field order for which log/antilog tables are built.
const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime polynomial must be monic")]
    NotMonic,
    #[error("prime polynomial must have degree >= 2")]
    DegreeTooLow,
    #[error("prime polynomial is reducible")]
    Reducible,
    #[error("division by zero")]
    DivideByZero,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("invalid field spec `{0}`")]
    BadSpec(String),
}

struct Repr {
    p: u64,
    m: u32,
    q: u64,
    /// Ascending coefficients of the prime polynomial over F_p; empty for m = 1.
    prime_poly: Vec<u64>,
    alpha: u64,
    /// exp[i] = alpha^i for i in [0, q-1); empty when q > TABLE_LIMIT.
    exp: Vec<u64>,
    /// log[v] = i with alpha^i = v; log[0] is a sentinel. Empty when exp is.
    log: Vec<u32>,
}

/// Immutable handle to a finite field; cheap to clone, safe to share.
#[derive(Clone)]
pub struct Field(Arc<Repr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.prime_poly == other.0.prime_poly)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec_string())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Ascending list of all divisors of n.
fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

impl Field {
    /// The prime field F_p (integers with mod-p arithmetic).
    pub fn prime(p: u64) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        let mut repr = Repr {
            p,
            m: 1,
            q: p,
            prime_poly: Vec::new(),
            alpha: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        repr.alpha = find_alpha(&repr, None);
        if repr.q <= TABLE_LIMIT {
            build_tables(&mut repr);
        }
        Ok(Field(Arc::new(repr)))
    }

    /// The extension field F_p[x] mod `prime_poly`, of order p^m where m is
    /// the degree of `prime_poly` (ascending coefficients, monic, irreducible
    /// over F_p; irreducibility is validated here by trial division).
    pub fn extension(p: u64, prime_poly: &[u64]) -> Result<Field, GfError> {
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        let base = Field::prime(p)?;
        let mut coeffs = prime_poly.to_vec();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.len() < 3 {
            return Err(GfError::DegreeTooLow);
        }
        if coeffs.iter().any(|&c| c >= p) {
            return Err(GfError::BadSpec(format!(
                "prime polynomial has a coefficient >= {p}"
            )));
        }
        let m = (coeffs.len() - 1) as u32;
        let g = Poly::new(base.clone(), coeffs.clone());
        if !g.is_monic() {
            return Err(GfError::NotMonic);
        }
        if !g.is_irreducible() {
            return Err(GfError::Reducible);
        }
        let q = p
            .checked_pow(m)
            .expect("field order p^m overflows u64");
        let mut repr = Repr {
            p,
            m,
            q,
            prime_poly: coeffs,
            alpha: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        repr.alpha = find_alpha(&repr, Some(p));
        if repr.q <= TABLE_LIMIT {
            build_tables(&mut repr);
        }
        Ok(Field(Arc::new(repr)))
    }

    /// Parse a field spec: `p` for prime fields, `p^m:c0c1...cm` for
    /// extensions (prime-poly digits ascending), e.g. `2^4:11001` for F_16
    /// built from 1 + z + z^4. Coefficients of fields with p > 9 are
    /// comma-separated instead of single digits.
    pub fn parse_spec(s: &str) -> Result<Field, GfError> {
        let bad = || GfError::BadSpec(s.to_string());
        match s.split_once('^') {
            None => {
                let p: u64 = s.trim().parse().map_err(|_| bad())?;
                Field::prime(p)
            }
            Some((p_str, rest)) => {
                let p: u64 = p_str.trim().parse().map_err(|_| bad())?;
                let (m_str, poly_str) = rest.split_once(':').ok_or_else(bad)?;
                let m: u32 = m_str.trim().parse().map_err(|_| bad())?;
                let digits: Vec<u64> = if poly_str.contains(',') {
                    poly_str
                        .split(',')
                        .map(|d| d.trim().parse().map_err(|_| bad()))
                        .collect::<Result<_, _>>()?
                } else {
                    poly_str
                        .trim()
                        .chars()
                        .map(|c| c.to_digit(10).map(u64::from).ok_or_else(bad))
                        .collect::<Result<_, _>>()?
                };
                if digits.len() != m as usize + 1 {
                    return Err(bad());
                }
                Field::extension(p, &digits)
            }
        }
    }

    /// Canonical spec string, parseable by [`Field::parse_spec`].
    pub fn spec_string(&self) -> String {
        if self.0.m == 1 {
            format!("{}", self.0.p)
        } else {
            let coeffs = &self.0.prime_poly;
            let body: String = if self.0.p <= 9 {
                coeffs.iter().map(|c| c.to_string()).collect()
            } else {
                coeffs
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            format!("{}^{}:{}", self.0.p, self.0.m, body)
        }
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn m(&self) -> u32 {
        self.0.m
    }
    pub fn q(&self) -> u64 {
        self.0.q
    }

    /// Prime polynomial coefficients (ascending); `None` for prime fields.
    pub fn prime_poly(&self) -> Option<&[u64]> {
        if self.0.m == 1 {
            None
        } else {
            Some(&self.0.prime_poly)
        }
    }

    /// The canonical primitive element: the residue of x when that has
    /// multiplicative order q-1, otherwise the first element in ascending
    /// value order with order q-1 (for prime fields, the smallest primitive
    /// residue). Implementation-defined where the construction leaves a
    /// choice.
    pub fn alpha(&self) -> u64 {
        self.0.alpha
    }

    pub fn prime_subfield(&self) -> Field {
        Field::prime(self.0.p).expect("p was validated prime")
    }

    /// All element encodings, 0..q.
    pub fn elems(&self) -> impl Iterator<Item = u64> {
        0..self.0.q
    }

    /// All nonzero element encodings.
    pub fn nonzero(&self) -> impl Iterator<Item = u64> {
        1..self.0.q
    }

    #[inline]
    fn check(&self, v: u64) -> u64 {
        debug_assert!(v < self.0.q, "value {v} is not an element of {self}");
        v
    }

    fn to_digits(&self, mut v: u64) -> Vec<u64> {
        let mut d = vec![0; self.0.m as usize];
        for slot in d.iter_mut() {
            *slot = v % self.0.p;
            v /= self.0.p;
        }
        d
    }

    fn from_digits(&self, d: &[u64]) -> u64 {
        let mut v = 0;
        for &c in d.iter().rev() {
            v = v * self.0.p + c;
        }
        v
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.check(a);
        self.check(b);
        let r = &self.0;
        if r.m == 1 {
            return (a + b) % r.p;
        }
        if r.p == 2 {
            return a ^ b;
        }
        let (da, db) = (self.to_digits(a), self.to_digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % r.p).collect();
        self.from_digits(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.check(a);
        let r = &self.0;
        if r.m == 1 {
            return (r.p - a) % r.p;
        }
        if r.p == 2 {
            return a;
        }
        let da = self.to_digits(a);
        let nd: Vec<u64> = da.iter().map(|x| (r.p - x) % r.p).collect();
        self.from_digits(&nd)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.check(a);
        self.check(b);
        if a == 0 || b == 0 {
            return 0;
        }
        let r = &self.0;
        if !r.exp.is_empty() {
            let e = (r.log[a as usize] as u64 + r.log[b as usize] as u64) % (r.q - 1);
            return r.exp[e as usize];
        }
        raw_mul(r, a, b)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self, a: u64) -> Result<u64, GfError> {
        self.check(a);
        if a == 0 {
            return Err(GfError::DivideByZero);
        }
        let r = &self.0;
        if !r.exp.is_empty() {
            let e = (r.q - 1 - r.log[a as usize] as u64) % (r.q - 1);
            return Ok(r.exp[e as usize]);
        }
        // a^(q-2), valid in any finite field.
        Ok(raw_pow(r, a, r.q - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// a^e with e possibly negative (then a must be nonzero). 0^0 = 1.
    pub fn pow(&self, a: u64, e: i64) -> Result<u64, GfError> {
        self.check(a);
        if a == 0 {
            return match e.signum() {
                1 => Ok(0),
                0 => Ok(1),
                _ => Err(GfError::DivideByZero),
            };
        }
        let r = &self.0;
        let order = r.q - 1;
        let e_red = e.rem_euclid(order as i64) as u64;
        if !r.exp.is_empty() {
            let le = (r.log[a as usize] as u64 * e_red) % order;
            return Ok(r.exp[le as usize]);
        }
        Ok(raw_pow(r, a, e_red))
    }

    /// alpha^e for any integer e (e may be negative).
    pub fn alpha_pow(&self, e: i64) -> u64 {
        self.pow(self.0.alpha, e).expect("alpha is nonzero")
    }

    /// Discrete log base alpha; `None` for the zero element.
    pub fn log(&self, a: u64) -> Option<u64> {
        self.check(a);
        if a == 0 {
            return None;
        }
        let r = &self.0;
        if !r.exp.is_empty() {
            return Some(r.log[a as usize] as u64);
        }
        // Fallback scan for table-less fields.
        let mut acc = 1u64;
        for e in 0..r.q - 1 {
            if acc == a {
                return Some(e);
            }
            acc = raw_mul(r, acc, r.alpha);
        }
        unreachable!("alpha generates the multiplicative group");
    }

    /// min { i > 0 : a^i = 1 }; divides q-1. Errors on zero.
    pub fn element_order(&self, a: u64) -> Result<u64, GfError> {
        self.check(a);
        if a == 0 {
            return Err(GfError::ZeroElement);
        }
        Ok(order_in(&self.0, a))
    }

    /// The conjugacy class {a, a^p, a^{p^2}, ...} in orbit order.
    pub fn conjugacy_class(&self, a: u64) -> Vec<u64> {
        self.check(a);
        let mut class = vec![a];
        let mut cur = self.pow(a, self.0.p as i64).unwrap();
        while cur != a {
            class.push(cur);
            cur = self.pow(cur, self.0.p as i64).unwrap();
        }
        class
    }

    /// The minimal polynomial of `a` over the prime subfield:
    /// the product of (x - w) over the conjugacy class of `a`. Its
    /// coefficients provably lie in F_p; that is asserted, not trusted.
    pub fn minimal_polynomial(&self, a: u64) -> Poly {
        let x = Poly::x(self.clone());
        let mut h = Poly::one(self.clone());
        for w in self.conjugacy_class(a) {
            h = h.mul(&x.sub(&Poly::constant(self.clone(), w)));
        }
        let fp = self.prime_subfield();
        let coeffs: Vec<u64> = h
            .coeffs()
            .iter()
            .map(|&c| {
                assert!(
                    c < self.0.p,
                    "minimal polynomial left the prime subfield: coefficient {c}"
                );
                c
            })
            .collect();
        Poly::new(fp, coeffs)
    }

    pub fn elem(&self, value: u64) -> Elem {
        assert!(
            value < self.0.q,
            "value {value} is not an element of {self}"
        );
        Elem {
            field: self.clone(),
            value,
        }
    }

    /// Render a value as a polynomial in z, e.g. `1+z^3` in F_16.
    pub fn poly_string(&self, v: u64) -> String {
        self.check(v);
        if self.0.m == 1 || v == 0 {
            return v.to_string();
        }
        let mut terms = Vec::new();
        for (i, d) in self.to_digits(v).into_iter().enumerate() {
            if d == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            terms.push(match (i, d) {
                (0, _) => d.to_string(),
                (_, 1) => var,
                _ => format!("{d}{var}"),
            });
        }
        terms.join("+")
    }

    /// Exhaustive field-axiom check: closure, associativity, commutativity,
    /// identities, inverses, distributivity, and a*0 = 0. Intended for tests
    /// on fields with q <= 64 (cost is O(q^3)).
    pub fn verify_axioms(&self) -> Result<(), String> {
        let q = self.0.q;
        for a in 0..q {
            if self.add(a, 0) != a {
                return Err(format!("additive identity fails at {a}"));
            }
            if self.mul(a, 1) != a {
                return Err(format!("multiplicative identity fails at {a}"));
            }
            if self.mul(a, 0) != 0 {
                return Err(format!("a*0 != 0 at {a}"));
            }
            if self.add(a, self.neg(a)) != 0 {
                return Err(format!("additive inverse fails at {a}"));
            }
            if a != 0 {
                let ai = self.inv(a).unwrap();
                if self.mul(a, ai) != 1 {
                    return Err(format!("multiplicative inverse fails at {a}"));
                }
            }
        }
        for a in 0..q {
            for b in 0..q {
                if self.add(a, b) >= q || self.mul(a, b) >= q {
                    return Err(format!("closure fails at ({a},{b})"));
                }
                if self.add(a, b) != self.add(b, a) {
                    return Err(format!("+ not commutative at ({a},{b})"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(format!("* not commutative at ({a},{b})"));
                }
            }
        }
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(format!("+ not associative at ({a},{b},{c})"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(format!("* not associative at ({a},{b},{c})"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Polynomial multiplication of digit vectors mod the prime polynomial.
/// Used to bootstrap table construction and as the big-field fallback.
fn raw_mul(r: &Repr, a: u64, b: u64) -> u64 {
    if r.m == 1 {
        return ((a as u128 * b as u128) % r.p as u128) as u64;
    }
    let m = r.m as usize;
    let p = r.p;
    let digits = |mut v: u64| {
        let mut d = vec![0u64; m];
        for slot in d.iter_mut() {
            *slot = v % p;
            v /= p;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // Reduce: x^m = -(g_0 + g_1 x + ... + g_{m-1} x^{m-1}) since g is monic.
    for i in (m..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..m {
            let gj = r.prime_poly[j];
            if gj != 0 {
                let sub = (c * gj) % p;
                prod[i - m + j] = (prod[i - m + j] + p * p - sub) % p;
            }
        }
    }
    let mut v = 0;
    for &c in prod[..m].iter().rev() {
        v = v * p + c;
    }
    v
}

fn raw_pow(r: &Repr, mut base: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(r, acc, base);
        }
        base = raw_mul(r, base, base);
        e >>= 1;
    }
    acc
}

/// Order of a nonzero element: the smallest divisor d of q-1 with a^d = 1.
fn order_in(r: &Repr, a: u64) -> u64 {
    for d in divisors(r.q - 1) {
        if raw_pow(r, a, d) == 1 {
            return d;
        }
    }
    unreachable!("a^(q-1) = 1 for every nonzero a")
}

/// The canonical primitive element; `x_value` is the encoding of the residue
/// of x for extension fields (i.e. p), tried first.
fn find_alpha(r: &Repr, x_value: Option<u64>) -> u64 {
    let target = r.q - 1;
    if let Some(x) = x_value {
        if order_in(r, x) == target {
            return x;
        }
    }
    (1..r.q)
        .find(|&a| order_in(r, a) == target)
        .expect("the multiplicative group of a finite field is cyclic")
}

fn build_tables(r: &mut Repr) {
    let n = (r.q - 1) as usize;
    let mut exp = Vec::with_capacity(n);
    let mut log = vec![u32::MAX; r.q as usize];
    let mut acc = 1u64;
    for i in 0..n {
        exp.push(acc);
        log[acc as usize] = i as u32;
        acc = raw_mul(r, acc, r.alpha);
    }
    debug_assert_eq!(acc, 1, "alpha order mismatch while building tables");
    r.exp = exp;
    r.log = log;
}

/// A field element bundled with its field handle, for operator syntax.
/// Mixing elements of different fields panics.
#[derive(Clone, PartialEq, Eq)]
pub struct Elem {
    field: Field,
    value: u64,
}

impl Elem {
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn value(&self) -> u64 {
        self.value
    }
    pub fn inv(&self) -> Result<Elem, GfError> {
        Ok(self.field.elem(self.field.inv(self.value)?))
    }
    pub fn pow(&self, e: i64) -> Result<Elem, GfError> {
        Ok(self.field.elem(self.field.pow(self.value, e)?))
    }
    pub fn order(&self) -> Result<u64, GfError> {
        self.field.element_order(self.value)
    }
    pub fn conjugacy_class(&self) -> Vec<Elem> {
        self.field
            .conjugacy_class(self.value)
            .into_iter()
            .map(|v| self.field.elem(v))
            .collect()
    }
    pub fn minimal_polynomial(&self) -> Poly {
        self.field.minimal_polynomial(self.value)
    }
    fn require_same_field(&self, other: &Elem) {
        assert!(
            self.field == other.field,
            "elements belong to different fields"
        );
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl std::ops::Add for &Elem {
    type Output = Elem;
    fn add(self, rhs: &Elem) -> Elem {
        self.require_same_field(rhs);
        self.field.elem(self.field.add(self.value, rhs.value))
    }
}
impl std::ops::Sub for &Elem {
    type Output = Elem;
    fn sub(self, rhs: &Elem) -> Elem {
        self.require_same_field(rhs);
        self.field.elem(self.field.sub(self.value, rhs.value))
    }
}
impl std::ops::Mul for &Elem {
    type Output = Elem;
    fn mul(self, rhs: &Elem) -> Elem {
        self.require_same_field(rhs);
        self.field.elem(self.field.mul(self.value, rhs.value))
    }
}
impl std::ops::Div for &Elem {
    type Output = Elem;
    fn div(self, rhs: &Elem) -> Elem {
        self.require_same_field(rhs);
        self.field
            .elem(self.field.div(self.value, rhs.value).expect("division by zero"))
    }
}
impl std::ops::Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        self.field.elem(self.field.neg(self.value))
    }
}


#[cfg(test)]
impl Field {
    fn exp_tables_absent(&self) -> bool {
        self.0.exp.is_empty()
    }
}
