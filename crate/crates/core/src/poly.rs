//! Sparse integer Laurent polynomials in the two variables `v` and `z`.
//!
//! Terms are kept in a canonical form: no zero coefficients are stored, and
//! rendering orders terms by `v`-exponent descending, then `z`-exponent
//! descending. Coefficient arithmetic is checked and panics on 64-bit
//! overflow instead of wrapping.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow in Laurent2 arithmetic")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow in Laurent2 arithmetic")
}

fn checked_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("exponent overflow in Laurent2 arithmetic")
}

/// A sparse integer Laurent polynomial in `v` and `z`.
///
/// The map is keyed by `(v_exponent, z_exponent)`; both exponents may be
/// negative. Equality is term-by-term equality of the canonical form.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(into = "PolyRepr", from = "PolyRepr")]
pub struct Laurent2 {
    terms: BTreeMap<(i32, i32), i64>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    v: i32,
    z: i32,
    c: i64,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

impl From<Laurent2> for PolyRepr {
    fn from(p: Laurent2) -> PolyRepr {
        PolyRepr {
            terms: p
                .terms
                .iter()
                .rev()
                .map(|(&(v, z), &c)| TermRepr { v, z, c })
                .collect(),
        }
    }
}

impl From<PolyRepr> for Laurent2 {
    fn from(r: PolyRepr) -> Laurent2 {
        let mut p = Laurent2::zero();
        for t in r.terms {
            p.add_term(t.c, t.v, t.z);
        }
        p
    }
}

impl Laurent2 {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Laurent2 { terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Laurent2::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(c: i64) -> Self {
        Laurent2::monomial(c, 0, 0)
    }

    /// The single term `c * v^dv * z^dz` (zero when `c == 0`).
    pub fn monomial(c: i64, dv: i32, dz: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert((dv, dz), c);
        }
        Laurent2 { terms }
    }

    /// Builds a polynomial from `(coefficient, v_exponent, z_exponent)` triples.
    pub fn from_terms(terms: &[(i64, i32, i32)]) -> Self {
        let mut p = Laurent2::zero();
        for &(c, dv, dz) in terms {
            p.add_term(c, dv, dz);
        }
        p
    }

    /// `(-z)^k` for any integer `k` (also negative).
    pub fn neg_z_power(k: i32) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Laurent2::monomial(sign, 0, k)
    }

    /// `delta^k` where `delta = (v^-1 - v) / z` is the unknot-splitting factor.
    pub fn delta_power(k: usize) -> Self {
        let delta = Laurent2::from_terms(&[(1, -1, -1), (-1, 1, -1)]);
        let mut acc = Laurent2::one();
        for _ in 0..k {
            acc = &acc * &delta;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical rendering order: `v`-exponent descending, then
    /// `z`-exponent descending. Yields `((dv, dz), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    /// Coefficient of `v^dv * z^dz` (zero when absent).
    pub fn coeff(&self, dv: i32, dz: i32) -> i64 {
        self.terms.get(&(dv, dz)).copied().unwrap_or(0)
    }

    fn add_term(&mut self, c: i64, dv: i32, dz: i32) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry((dv, dz)).or_insert(0);
        *entry = checked_add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&(dv, dz));
        }
    }

    /// Minimal and maximal `v`-exponent; `Err(ZeroPolynomial)` for zero.
    pub fn v_degree_bounds(&self) -> Result<(i32, i32)> {
        if self.terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        let min = self.terms.keys().map(|&(dv, _)| dv).min().unwrap();
        let max = self.terms.keys().map(|&(dv, _)| dv).max().unwrap();
        Ok((min, max))
    }

    /// The polynomial in `z` multiplying `v^dv`, returned with `v`-exponent 0.
    pub fn coeff_of_v(&self, dv: i32) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (&(v, z), &c) in &self.terms {
            if v == dv {
                out.add_term(c, 0, z);
            }
        }
        out
    }

    /// Specializes `v = 1`, merging terms that collide.
    pub fn specialize_v_one(&self) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (&(_, z), &c) in &self.terms {
            out.add_term(c, 0, z);
        }
        out
    }
}

impl Add for &Laurent2 {
    type Output = Laurent2;

    fn add(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&(dv, dz), &c) in &rhs.terms {
            out.add_term(c, dv, dz);
        }
        out
    }
}

impl Sub for &Laurent2 {
    type Output = Laurent2;

    fn sub(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = self.clone();
        for (&(dv, dz), &c) in &rhs.terms {
            out.add_term(c.checked_neg().expect("coefficient overflow in Laurent2 arithmetic"), dv, dz);
        }
        out
    }
}

impl Neg for &Laurent2 {
    type Output = Laurent2;

    fn neg(self) -> Laurent2 {
        &Laurent2::zero() - self
    }
}

impl Mul for &Laurent2 {
    type Output = Laurent2;

    fn mul(self, rhs: &Laurent2) -> Laurent2 {
        let mut acc: HashMap<(i32, i32), i64> = HashMap::new();
        for (&(av, az), &ac) in &self.terms {
            for (&(bv, bz), &bc) in &rhs.terms {
                let key = (checked_exp(av, bv), checked_exp(az, bz));
                let entry = acc.entry(key).or_insert(0);
                *entry = checked_add(*entry, checked_mul(ac, bc));
            }
        }
        Laurent2 {
            terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Laurent2 {
            type Output = Laurent2;
            fn $method(self, rhs: Laurent2) -> Laurent2 {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Laurent2> for Laurent2 {
            type Output = Laurent2;
            fn $method(self, rhs: &Laurent2) -> Laurent2 {
                (&self).$method(rhs)
            }
        }
        impl $trait<Laurent2> for &Laurent2 {
            type Output = Laurent2;
            fn $method(self, rhs: Laurent2) -> Laurent2 {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

fn write_power(out: &mut String, var: char, exp: i32) {
    out.push(var);
    if exp != 1 {
        out.push('^');
        out.push_str(&exp.to_string());
    }
}

impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (idx, ((dv, dz), c)) in self.terms().enumerate() {
            if idx == 0 {
                if c < 0 {
                    s.push('-');
                }
            } else if c < 0 {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let abs = c.unsigned_abs();
            let mut parts: Vec<String> = Vec::new();
            if abs != 1 || (dv == 0 && dz == 0) {
                parts.push(abs.to_string());
            }
            if dv != 0 {
                let mut p = String::new();
                write_power(&mut p, 'v', dv);
                parts.push(p);
            }
            if dz != 0 {
                let mut p = String::new();
                write_power(&mut p, 'z', dz);
                parts.push(p);
            }
            s.push_str(&parts.join("*"));
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent2({self})")
    }
}
