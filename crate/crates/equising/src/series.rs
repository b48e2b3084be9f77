//! Dense polynomials / truncated power series in x over a tower level.
//!
//! Exact polynomial inputs carry infinite precision and stay exact through
//! the whole pipeline; the oracle's Weierstrass lifting is the only consumer
//! of finite precision.

use crate::error::Error;
use crate::tower::{Elem, RingView};

/// Precision marker: `Exact` means a genuine polynomial, `Trunc(n)` means
/// the coefficients of x^i are known for i < n only.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prec {
    Exact,
    Trunc(usize),
}

impl Prec {
    pub fn min(self, other: Prec) -> Prec {
        match (self, other) {
            (Prec::Exact, p) | (p, Prec::Exact) => p,
            (Prec::Trunc(a), Prec::Trunc(b)) => Prec::Trunc(a.min(b)),
        }
    }

    pub fn allows(self, i: usize) -> bool {
        match self {
            Prec::Exact => true,
            Prec::Trunc(n) => i < n,
        }
    }
}

/// Series/polynomial in x; coefficients are tower elements of one level.
#[derive(Clone, Debug)]
pub struct XPoly {
    pub coeffs: Vec<Elem>,
    pub prec: Prec,
}

impl XPoly {
    pub fn new(coeffs: Vec<Elem>, prec: Prec, rv: &RingView<'_>) -> Self {
        let mut p = XPoly { coeffs, prec };
        p.normalize(rv);
        p
    }

    pub fn zero(prec: Prec) -> Self {
        XPoly {
            coeffs: Vec::new(),
            prec,
        }
    }

    pub fn constant(c: Elem, rv: &RingView<'_>) -> Self {
        XPoly::new(vec![c], Prec::Exact, rv)
    }

    pub fn one(rv: &RingView<'_>) -> Self {
        XPoly::constant(rv.one(), rv)
    }

    /// c * x^k
    pub fn monomial(c: Elem, k: usize, rv: &RingView<'_>) -> Self {
        let mut coeffs = vec![rv.zero(); k + 1];
        coeffs[k] = c;
        XPoly::new(coeffs, Prec::Exact, rv)
    }

    fn normalize(&mut self, rv: &RingView<'_>) {
        if let Prec::Trunc(n) = self.prec {
            self.coeffs.truncate(n);
        }
        while self
            .coeffs
            .last()
            .map(|c| rv.is_zero(c))
            .unwrap_or(false)
        {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, rv: &RingView<'_>) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rv.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Least i with nonzero coefficient. `Ok(None)` encodes +infinity (exact
    /// zero); a zero truncated series cannot certify its valuation.
    pub fn valuation_in(&self, rv: &RingView<'_>) -> Result<Option<usize>, Error> {
        for (i, c) in self.coeffs.iter().enumerate() {
            if !rv.is_zero(c) {
                return Ok(Some(i));
            }
        }
        match self.prec {
            Prec::Exact => Ok(None),
            Prec::Trunc(_) => Err(Error::ValuationBelowPrecision),
        }
    }

    pub fn add(&self, other: &XPoly, rv: &RingView<'_>) -> XPoly {
        let prec = self.prec.min(other.prec);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(rv.add(&self.coeff(i, rv), &other.coeff(i, rv)));
        }
        XPoly::new(out, prec, rv)
    }

    pub fn neg(&self, rv: &RingView<'_>) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| rv.neg(c)).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &XPoly, rv: &RingView<'_>) -> XPoly {
        self.add(&other.neg(rv), rv)
    }

    pub fn mul(&self, other: &XPoly, rv: &RingView<'_>) -> XPoly {
        let prec = self.prec.min(other.prec);
        if self.is_zero() || other.is_zero() {
            return XPoly::zero(prec);
        }
        let mut out = vec![rv.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if rv.is_zero(a) {
                continue;
            }
            if !prec.allows(i) {
                break;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !prec.allows(i + j) {
                    break;
                }
                out[i + j] = rv.add(&out[i + j], &rv.mul(a, b));
            }
        }
        XPoly::new(out, prec, rv)
    }

    pub fn scale(&self, c: &Elem, rv: &RingView<'_>) -> XPoly {
        XPoly::new(
            self.coeffs.iter().map(|a| rv.mul(a, c)).collect(),
            self.prec,
            rv,
        )
    }

    /// Multiplication by x^k.
    pub fn shift_up(&self, k: usize, rv: &RingView<'_>) -> XPoly {
        if self.is_zero() {
            let prec = match self.prec {
                Prec::Exact => Prec::Exact,
                Prec::Trunc(n) => Prec::Trunc(n + k),
            };
            return XPoly::zero(prec);
        }
        let mut coeffs = vec![rv.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        let prec = match self.prec {
            Prec::Exact => Prec::Exact,
            Prec::Trunc(n) => Prec::Trunc(n + k),
        };
        XPoly::new(coeffs, prec, rv)
    }

    /// Exact division by x^k; fails if some lower coefficient is nonzero.
    pub fn shift_down(&self, k: usize, rv: &RingView<'_>) -> Result<XPoly, Error> {
        for i in 0..k.min(self.coeffs.len()) {
            if !rv.is_zero(&self.coeffs[i]) {
                return Err(Error::InvalidPrefix);
            }
        }
        let coeffs = if self.coeffs.len() > k {
            self.coeffs[k..].to_vec()
        } else {
            Vec::new()
        };
        let prec = match self.prec {
            Prec::Exact => Prec::Exact,
            Prec::Trunc(n) => Prec::Trunc(n.saturating_sub(k)),
        };
        Ok(XPoly::new(coeffs, prec, rv))
    }

    pub fn truncate(&self, n: usize, rv: &RingView<'_>) -> XPoly {
        XPoly::new(self.coeffs.clone(), Prec::Trunc(n).min(self.prec), rv)
    }

    /// Substitution x -> u * x^q (u a ring element), used by the blow-up
    /// transform sigma_k.
    pub fn subst_scaled_power(&self, u: &Elem, q: usize, rv: &RingView<'_>) -> XPoly {
        let prec = match self.prec {
            Prec::Exact => Prec::Exact,
            Prec::Trunc(n) => Prec::Trunc(n.saturating_mul(q)),
        };
        if self.is_zero() {
            return XPoly::zero(prec);
        }
        let mut out = vec![rv.zero(); (self.coeffs.len() - 1) * q + 1];
        let mut upow = rv.one();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !rv.is_zero(c) {
                out[i * q] = rv.mul(c, &upow);
            }
            if i + 1 < self.coeffs.len() {
                upow = rv.mul(&upow, u);
            }
        }
        XPoly::new(out, prec, rv)
    }

    /// Lifts all coefficients from a lower tower level into `rv`'s level.
    pub fn embed_from(&self, from: usize, rv: &RingView<'_>) -> XPoly {
        XPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| rv.embed_from(c, from))
                .collect(),
            prec: self.prec,
        }
    }

    /// Multiplicative inverse as a power series to precision n (the constant
    /// term must be a unit).
    pub fn invert_series(&self, n: usize, rv: &RingView<'_>) -> Result<XPoly, Error> {
        let c0 = self.coeff(0, rv);
        let inv0 = rv.invert(&c0)?;
        let mut inv = vec![inv0.clone()];
        for i in 1..n {
            // coefficient i of (self * inv) must vanish
            let mut acc = rv.zero();
            for j in 0..i {
                let a = self.coeff(i - j, rv);
                if !rv.is_zero(&a) {
                    acc = rv.add(&acc, &rv.mul(&a, &inv[j]));
                }
            }
            inv.push(rv.neg(&rv.mul(&acc, &inv0)));
        }
        Ok(XPoly::new(inv, Prec::Trunc(n), rv))
    }

    /// Evaluation at a ring element (Horner).
    pub fn eval(&self, x: &Elem, rv: &RingView<'_>) -> Elem {
        let mut acc = rv.zero();
        for c in self.coeffs.iter().rev() {
            acc = rv.add(&rv.mul(&acc, x), c);
        }
        acc
    }

    pub fn eq_poly(&self, other: &XPoly, rv: &RingView<'_>) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i, rv) == other.coeff(i, rv))
    }
}
