//! Sparse multivariate polynomials with integer coefficients.
//!
//! There is one indeterminate per cell of an initial tableau, `v[i,j]`. Terms
//! are kept in a [`BTreeMap`] keyed by [`Monomial`] under the graded
//! lexicographic order, so the leading term is always the last entry and two
//! equal polynomials have identical maps.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::{Integer, Ring};
use crate::error::{Error, Result};

/// The indeterminate standing for tableau cell `(row, col)`, zero-based.
///
/// Variables compare by `(row, col)`; a smaller variable is more significant
/// in the lexicographic tie-break, so `v[1,1] > v[1,2] > ... > v[2,1]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var {
    pub row: u16,
    pub col: u16,
}

impl Var {
    pub fn new(row: usize, col: usize) -> Self {
        Var {
            row: u16::try_from(row).expect("tableau row index exceeds u16"),
            col: u16::try_from(col).expect("tableau column index exceeds u16"),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}_{}", self.row + 1, self.col + 1)
    }
}

/// Power product, stored as `(variable, exponent)` pairs sorted by variable
/// with every exponent positive.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(mut powers: Vec<(Var, u32)>) -> Self {
        powers.retain(|&(_, e)| e > 0);
        powers.sort_by_key(|&(v, _)| v);
        let mut merged: Vec<(Var, u32)> = Vec::with_capacity(powers.len());
        for (v, e) in powers {
            match merged.last_mut() {
                Some((last, acc)) if *last == v => *acc += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial(merged)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / rhs` when `rhs` divides `self`.
    pub fn checked_div(&self, rhs: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < rhs.0.len() && rhs.0[j].0 < v {
                return None;
            }
            if j < rhs.0.len() && rhs.0[j].0 == v {
                let d = rhs.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < rhs.0.len() {
            return None;
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        // `va` is absent from `other`: self has the larger exponent.
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial over the integers in the tableau indeterminates.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Integer>,
}

impl MultiPoly {
    pub fn constant(c: Integer) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    /// The indeterminate for tableau cell `(row, col)`.
    pub fn var(row: usize, col: usize) -> Self {
        MultiPoly::monomial(Integer::one(), Monomial::var(Var::new(row, col)))
    }

    pub fn monomial(c: Integer, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Integer)>) -> Self {
        let mut p = MultiPoly::default();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the leading term down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Integer)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Integer)> {
        self.terms.iter().next_back()
    }

    /// Maximum total degree over the stored terms; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Every term has the same total degree. The zero polynomial counts as
    /// homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: &Integer) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Integer) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.mul(c)))
                .collect(),
        }
    }

    fn inexact(&self, rhs: &MultiPoly) -> Error {
        Error::InexactDivision {
            dividend: self.to_string(),
            divisor: rhs.to_string(),
            at: None,
        }
    }
}

impl Ring for MultiPoly {
    const IS_FIELD: bool = false;

    fn zero() -> Self {
        MultiPoly::default()
    }

    fn one() -> Self {
        MultiPoly::constant(Integer::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = MultiPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &ca.mul(cb));
            }
        }
        out
    }

    /// Division by repeated leading-term reduction. Over an integral domain
    /// the leading term of an exact product is the product of leading terms,
    /// so any remainder whose leading term is not divisible means the
    /// division is not exact.
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        let (lead_m, lead_c) = rhs.leading_term().ok_or(Error::DivideByZero)?;
        let mut rem = self.clone();
        let mut quotient = MultiPoly::default();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.checked_div(lead_m).ok_or_else(|| self.inexact(rhs))?;
            let c = rc.exact_div(lead_c).map_err(|_| self.inexact(rhs))?;
            rem = rem.sub(&rhs.mul_term(&m, &c));
            quotient.add_term(m, &c);
        }
        Ok(quotient)
    }

    fn size_bits(&self) -> u64 {
        self.terms.values().map(Integer::bits).max().unwrap_or(0)
    }
}

impl From<Integer> for MultiPoly {
    fn from(c: Integer) -> Self {
        MultiPoly::constant(c)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = m.powers().is_empty();
            if is_const {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
