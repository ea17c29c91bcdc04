//! Weighted polynomial rings over the rationals.

use crate::error::{Error, Result};
use crate::exactalg::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::sync::Arc;

/// Variables with positive integer weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    names: Vec<String>,
    weights: Vec<u32>,
}

pub type Ring = Arc<RingSpec>;

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl RingSpec {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, u32)>) -> Result<Ring> {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        let mut seen = HashSet::new();
        for (n, w) in vars {
            let n: String = n.into();
            if !valid_name(&n) {
                return Err(Error::InvalidRing(format!("invalid variable name `{n}`")));
            }
            if w == 0 {
                return Err(Error::InvalidRing(format!("variable `{n}` has weight 0")));
            }
            if !seen.insert(n.clone()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
            names.push(n);
            weights.push(w);
        }
        Ok(Arc::new(RingSpec { names, weights }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.0.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    /// Weighted degree first, then reverse lexicographic.
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.degree(a).cmp(&self.degree(b)).then_with(|| {
            for i in (0..a.0.len()).rev() {
                if a.0[i] != b.0[i] {
                    return b.0[i].cmp(&a.0[i]);
                }
            }
            Ordering::Equal
        })
    }

    /// All monomials of weighted degree `d`, largest first.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        fn rec(w: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if left == 0 {
                    out.push(Monomial(cur.clone()));
                }
                return;
            }
            for e in 0..=left / w[i] {
                cur[i] = e;
                rec(w, i + 1, left - e * w[i], cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        let mut cur = vec![0; self.nvars()];
        rec(&self.weights, 0, d, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp_monomials(b, a));
        out
    }

    pub fn one(self: &Arc<Self>) -> Monomial {
        Monomial(vec![0; self.nvars()])
    }
}

/// Exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Unweighted total degree.
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn format(&self, ring: &RingSpec) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { ring.name(i).to_string() } else { format!("{}^{}", ring.name(i), e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Self::from_terms(ring, [(ring.one(), c)])
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        Self::from_terms(ring, [(Monomial(e), Rational::one())])
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        Self::from_terms(ring, [(m, c)])
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.0.len(), ring.nvars(), "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Weighted degree if homogeneous and non-zero.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| self.ring.degree(m));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Smallest unweighted total degree among the terms.
    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::constant(&self.ring, Rational::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut n = m.clone();
                n.0[i] -= 1;
                out.add_term(n, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Re-embeds into `target`, mapping variable `i` to `index_map[i]`.
    pub fn embed(&self, target: &Ring, index_map: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; target.nvars()];
                for (i, &x) in m.0.iter().enumerate() {
                    e[index_map[i]] += x;
                }
                (Monomial(e), c.clone())
            }),
        )
    }

    /// Terms sorted largest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| self.ring.cmp_monomials(b.0, a.0));
        t
    }

    pub fn parse(ring: &Ring, input: &str) -> Result<Polynomial> {
        Parser { ring, src: input.as_bytes(), pos: 0 }.parse()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.format(&self.ring))?;
            } else {
                write!(f, "{a}*{}", m.format(&self.ring))?;
            }
        }
        Ok(())
    }
}

macro_rules! poly_op {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings.
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials belong to different rings")
            }
        }
    };
}
poly_op!(Add, add, checked_add);
poly_op!(Sub, sub, checked_sub);
poly_op!(Mul, mul, checked_mul);

struct Parser<'a> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.ring);
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        loop {
            let mut sign = Rational::one();
            match self.peek() {
                Some(b'+') => self.pos += 1,
                Some(b'-') => {
                    self.pos += 1;
                    sign = -sign;
                }
                None => break,
                Some(_) if first => {}
                Some(c) => return self.err(format!("unexpected character `{}`", c as char)),
            }
            first = false;
            let (m, c) = self.term()?;
            out.add_term(m, c * sign);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.ring.nvars()];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    let mut x = Rational::from_integer(n);
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let at = self.pos;
                        let d = self.integer()?;
                        if d.is_zero() {
                            self.pos = at;
                            return self.err("division by zero");
                        }
                        x /= Rational::from_integer(d);
                    }
                    coeff *= x;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric() || matches!(self.src[self.pos], b'_' | b'\''))
                    {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                    let Some(i) = self.ring.index_of(name) else {
                        return Err(Error::UnknownVariable { name: name.to_string(), position: start });
                    };
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let n = self.integer()?;
                        e = match u32::try_from(n) {
                            Ok(e) => e,
                            Err(_) => return self.err("exponent too large"),
                        };
                    }
                    exps[i] += e;
                }
                Some(c) => return self.err(format!("unexpected character `{}`", c as char)),
                None => return self.err("unexpected end of input"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial(exps), coeff))
    }
}
