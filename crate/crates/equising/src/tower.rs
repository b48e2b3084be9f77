//! Towers of residue rings K_k = K[Z_1]/(P_1) ... [Z_k]/(P_k).
//!
//! Each modulus is monic and square-free over the ring below it, so every
//! level is (isomorphic to) a finite direct product of field extensions of
//! the base field. Zero divisors are therefore possible and every primitive
//! here is division-free: unit tests go through iterated norms and inverses
//! through the Cayley-Hamilton identity, both built on the Berkowitz
//! characteristic polynomial.
//!
//! Elements are kept in a canonical fully-reduced dense representation, so
//! equality is plain structural equality.

use std::fmt;

use crate::error::Error;
use crate::field::{BaseField, Scalar};
use crate::linalg::{self, Ring};

/// An element of some level of a tower. `Base` lives at level 0; an `Ext`
/// at level k holds exactly `deg P_k` coefficients of level k-1.
#[derive(Clone, Debug, PartialEq)]
pub enum Elem {
    Base(Scalar),
    Ext(Vec<Elem>),
}

/// Univariate polynomial over a tower level, dense, no trailing zeros
/// (except the zero polynomial which has an empty coefficient list).
#[derive(Clone, Debug, PartialEq)]
pub struct TowerPoly {
    pub coeffs: Vec<Elem>,
}

/// An owned tower of residue rings.
#[derive(Clone, Debug, PartialEq)]
pub struct TowerRing {
    base: BaseField,
    moduli: Vec<TowerPoly>,
}

/// A borrowed view of a tower prefix; all element arithmetic lives here.
#[derive(Clone, Copy)]
pub struct RingView<'a> {
    pub base: &'a BaseField,
    pub moduli: &'a [TowerPoly],
}

impl TowerRing {
    pub fn new(base: BaseField) -> Self {
        TowerRing {
            base,
            moduli: Vec::new(),
        }
    }

    pub fn base(&self) -> BaseField {
        self.base
    }

    pub fn level(&self) -> usize {
        self.moduli.len()
    }

    pub fn moduli(&self) -> &[TowerPoly] {
        &self.moduli
    }

    pub fn view(&self) -> RingView<'_> {
        RingView {
            base: &self.base,
            moduli: &self.moduli,
        }
    }

    /// Extends the tower by a monic square-free modulus.
    pub fn extend(&self, p: TowerPoly) -> Result<TowerRing, Error> {
        let rv = self.view();
        if p.degree().is_none() || p.degree() == Some(0) {
            return Err(Error::NotMonic);
        }
        if !p.is_monic(&rv) {
            return Err(Error::NotMonic);
        }
        if !is_squarefree(&p, &rv) {
            return Err(Error::NotSquareFree);
        }
        let mut moduli = self.moduli.clone();
        moduli.push(p);
        Ok(TowerRing {
            base: self.base,
            moduli,
        })
    }

    /// Dimension over the base field: the product of the moduli degrees.
    pub fn dimension(&self) -> usize {
        self.moduli
            .iter()
            .map(|m| m.coeffs.len() - 1)
            .product::<usize>()
    }
}

impl<'a> RingView<'a> {
    pub fn level(&self) -> usize {
        self.moduli.len()
    }

    /// Degree of the top modulus.
    pub fn ell(&self) -> usize {
        self.moduli
            .last()
            .map(|m| m.coeffs.len() - 1)
            .expect("ell() at level 0")
    }

    pub fn below(&self) -> RingView<'a> {
        RingView {
            base: self.base,
            moduli: &self.moduli[..self.moduli.len() - 1],
        }
    }

    pub fn zero(&self) -> Elem {
        self.embed_from(&Elem::Base(self.base.zero()), 0)
    }

    pub fn one(&self) -> Elem {
        self.embed_from(&Elem::Base(self.base.one()), 0)
    }

    pub fn from_scalar(&self, s: Scalar) -> Elem {
        self.embed_from(&Elem::Base(s), 0)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_scalar(self.base.from_i64(n))
    }

    /// Lifts a level-`from` element coefficient-wise into this ring.
    pub fn embed_from(&self, e: &Elem, from: usize) -> Elem {
        let mut cur = e.clone();
        for l in from..self.level() {
            let ell = self.moduli[l].coeffs.len() - 1;
            let sub = RingView {
                base: self.base,
                moduli: &self.moduli[..l],
            };
            let mut v = vec![sub.zero(); ell];
            v[0] = cur;
            cur = Elem::Ext(v);
        }
        cur
    }

    /// The residue class z_k of the top variable (level must be >= 1).
    pub fn generator(&self) -> Elem {
        let ell = self.ell();
        let sub = self.below();
        if ell == 1 {
            // Z = -P(0) in a degree-1 extension
            Elem::Ext(vec![sub.neg(&self.moduli[self.level() - 1].coeffs[0])])
        } else {
            let mut v = vec![sub.zero(); ell];
            v[1] = sub.one();
            Elem::Ext(v)
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Base(s) => self.base.is_zero(s),
            Elem::Ext(v) => {
                let sub = self.below();
                v.iter().all(|c| sub.is_zero(c))
            }
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Base(x), Elem::Base(y)) => Elem::Base(self.base.add(x, y)),
            (Elem::Ext(x), Elem::Ext(y)) => {
                debug_assert_eq!(x.len(), y.len());
                let sub = self.below();
                Elem::Ext(
                    x.iter()
                        .zip(y.iter())
                        .map(|(u, v)| sub.add(u, v))
                        .collect(),
                )
            }
            _ => panic!("elements at different tower levels"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Base(x) => Elem::Base(self.base.neg(x)),
            Elem::Ext(x) => {
                let sub = self.below();
                Elem::Ext(x.iter().map(|u| sub.neg(u)).collect())
            }
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Base(x), Elem::Base(y)) => Elem::Base(self.base.mul(x, y)),
            (Elem::Ext(x), Elem::Ext(y)) => {
                let sub = self.below();
                let n = x.len();
                let mut conv = vec![sub.zero(); 2 * n - 1];
                for (i, xi) in x.iter().enumerate() {
                    if sub.is_zero(xi) {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        conv[i + j] = sub.add(&conv[i + j], &sub.mul(xi, yj));
                    }
                }
                let modulus = &self.moduli[self.level() - 1];
                reduce_mod(&mut conv, modulus, &sub);
                conv.truncate(n);
                Elem::Ext(conv)
            }
            _ => panic!("elements at different tower levels"),
        }
    }

    pub fn pow(&self, a: &Elem, mut e: usize) -> Elem {
        let mut result = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        result
    }

    /// Matrix of multiplication by `a` on this level, over the ring below.
    fn mult_matrix(&self, a: &Elem) -> Vec<Vec<Elem>> {
        let Elem::Ext(coeffs) = a else {
            panic!("mult_matrix needs level >= 1")
        };
        let n = coeffs.len();
        let sub = self.below();
        let modulus = &self.moduli[self.level() - 1];
        let mut mat = vec![vec![sub.zero(); n]; n];
        let mut col: Vec<Elem> = coeffs.clone();
        for j in 0..n {
            for (i, row) in mat.iter_mut().enumerate() {
                row[j] = col[i].clone();
            }
            if j + 1 < n {
                // col <- col * z mod modulus
                let mut shifted = Vec::with_capacity(n + 1);
                shifted.push(sub.zero());
                shifted.extend(col.iter().cloned());
                reduce_mod(&mut shifted, modulus, &sub);
                shifted.truncate(n);
                col = shifted;
            }
        }
        mat
    }

    /// True iff `a` is invertible; decided by the iterated norm.
    pub fn is_unit(&self, a: &Elem) -> bool {
        match a {
            Elem::Base(s) => !self.base.is_zero(s),
            Elem::Ext(_) => {
                let sub = self.below();
                let det = linalg::determinant(&sub, &self.mult_matrix(a));
                sub.is_unit(&det)
            }
        }
    }

    /// Inverse of a unit; distinguishes zero from proper zero divisors.
    pub fn invert(&self, a: &Elem) -> Result<Elem, Error> {
        if self.is_zero(a) {
            return Err(Error::ZeroElement);
        }
        match a {
            Elem::Base(s) => Ok(Elem::Base(self.base.inv(s)?)),
            Elem::Ext(_) => {
                let sub = self.below();
                let mat = self.mult_matrix(a);
                let n = mat.len();
                // charpoly t^n + c_{n-1} t^{n-1} + ... + c_0, descending order
                let cp = linalg::berkowitz_charpoly(&sub, &mat);
                let c0 = &cp[n];
                let inv_c0 = sub.invert(c0).map_err(|_| {
                    Error::ZeroDivisor(self.display(a).to_string())
                })?;
                // Cayley-Hamilton: a * (a^{n-1} + c_{n-1} a^{n-2} + ... + c_1) = -c_0
                let mut acc = self.zero();
                let mut apow = self.one();
                for j in 1..=n {
                    // coefficient c_j (with c_n = 1) times a^{j-1}
                    let cj = self.embed_from(&cp[n - j], self.level() - 1);
                    acc = self.add(&acc, &self.mul(&cj, &apow));
                    if j < n {
                        apow = self.mul(&apow, a);
                    }
                }
                let minus_inv_c0 =
                    self.neg(&self.embed_from(&inv_c0, self.level() - 1));
                let b = self.mul(&minus_inv_c0, &acc);
                if self.mul(a, &b) != self.one() {
                    return Err(Error::InternalInvariant(
                        "Cayley-Hamilton inverse failed verification".into(),
                    ));
                }
                Ok(b)
            }
        }
    }

    /// Wraps an element for display with variables z1, ..., zk.
    pub fn display(&self, e: &Elem) -> ElemDisplay {
        ElemDisplay {
            elem: e.clone(),
            level: self.level(),
        }
    }
}

impl<'a> Ring for RingView<'a> {
    type El = Elem;
    fn zero(&self) -> Elem {
        RingView::zero(self)
    }
    fn one(&self) -> Elem {
        RingView::one(self)
    }
    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        RingView::add(self, a, b)
    }
    fn neg(&self, a: &Elem) -> Elem {
        RingView::neg(self, a)
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        RingView::mul(self, a, b)
    }
    fn is_zero(&self, a: &Elem) -> bool {
        RingView::is_zero(self, a)
    }
}

/// In-place reduction of a coefficient vector modulo a monic polynomial.
fn reduce_mod(coeffs: &mut Vec<Elem>, modulus: &TowerPoly, sub: &RingView<'_>) {
    let deg = modulus.coeffs.len() - 1;
    while coeffs.len() > deg {
        let top = coeffs.pop().unwrap();
        if sub.is_zero(&top) {
            continue;
        }
        let k = coeffs.len() - deg;
        for i in 0..deg {
            let t = sub.mul(&top, &modulus.coeffs[i]);
            coeffs[k + i] = sub.sub(&coeffs[k + i], &t);
        }
    }
    while coeffs.len() < deg {
        coeffs.push(sub.zero());
    }
}

impl TowerPoly {
    pub fn new(mut coeffs: Vec<Elem>, rv: &RingView<'_>) -> Self {
        while coeffs.len() > 1 && rv.is_zero(coeffs.last().unwrap()) {
            coeffs.pop();
        }
        if coeffs.len() == 1 && rv.is_zero(&coeffs[0]) {
            coeffs.clear();
        }
        TowerPoly { coeffs }
    }

    pub fn zero() -> Self {
        TowerPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_monic(&self, rv: &RingView<'_>) -> bool {
        self.coeffs
            .last()
            .map(|c| *c == rv.one())
            .unwrap_or(false)
    }

    pub fn leading(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    pub fn constant_term(&self, rv: &RingView<'_>) -> Elem {
        self.coeffs.first().cloned().unwrap_or_else(|| rv.zero())
    }

    pub fn add(&self, other: &TowerPoly, rv: &RingView<'_>) -> TowerPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| rv.zero());
            let b = other.coeffs.get(i).cloned().unwrap_or_else(|| rv.zero());
            out.push(rv.add(&a, &b));
        }
        TowerPoly::new(out, rv)
    }

    pub fn sub(&self, other: &TowerPoly, rv: &RingView<'_>) -> TowerPoly {
        self.add(&other.neg(rv), rv)
    }

    pub fn neg(&self, rv: &RingView<'_>) -> TowerPoly {
        TowerPoly {
            coeffs: self.coeffs.iter().map(|c| rv.neg(c)).collect(),
        }
    }

    pub fn mul(&self, other: &TowerPoly, rv: &RingView<'_>) -> TowerPoly {
        if self.is_zero() || other.is_zero() {
            return TowerPoly::zero();
        }
        let mut out = vec![rv.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if rv.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = rv.add(&out[i + j], &rv.mul(a, b));
            }
        }
        TowerPoly::new(out, rv)
    }

    pub fn pow(&self, mut e: usize, rv: &RingView<'_>) -> TowerPoly {
        let mut result = TowerPoly {
            coeffs: vec![rv.one()],
        };
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&b, rv);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b, rv);
            }
        }
        result
    }

    pub fn derivative(&self, rv: &RingView<'_>) -> TowerPoly {
        if self.coeffs.len() <= 1 {
            return TowerPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| rv.mul(&rv.from_i64(i as i64), c))
            .collect();
        TowerPoly::new(out, rv)
    }

    pub fn eval(&self, x: &Elem, rv: &RingView<'_>) -> Elem {
        let mut acc = rv.zero();
        for c in self.coeffs.iter().rev() {
            acc = rv.add(&rv.mul(&acc, x), c);
        }
        acc
    }
}

/// Resultant of two polynomials over the view, as a Sylvester determinant.
/// Division-free, hence safe in the presence of zero divisors.
pub fn resultant(a: &TowerPoly, b: &TowerPoly, rv: &RingView<'_>) -> Elem {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return rv.zero();
    };
    if m == 0 && n == 0 {
        return rv.one();
    }
    if n == 0 {
        return rv.pow(&b.coeffs[0], m);
    }
    if m == 0 {
        return rv.pow(&a.coeffs[0], n);
    }
    let size = m + n;
    let mut mat = vec![vec![rv.zero(); size]; size];
    for row in 0..n {
        for (k, c) in a.coeffs.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in b.coeffs.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    linalg::determinant(rv, &mat)
}

/// Square-freeness over a direct product of fields: Res(P, P') must be a unit.
pub fn is_squarefree(p: &TowerPoly, rv: &RingView<'_>) -> bool {
    let d = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let dp = p.derivative(rv);
    if dp.is_zero() {
        return false;
    }
    rv.is_unit(&resultant(p, &dp, rv))
}

/// Exact monic N-th root: returns `P` with `P^N = Q`, or `None`.
///
/// The top coefficients of `P` are determined one at a time (N is invertible
/// by the characteristic constraint) and the candidate is verified by full
/// re-expansion before being accepted.
pub fn nth_root_monic(q: &TowerPoly, n: usize, rv: &RingView<'_>) -> Option<TowerPoly> {
    let dq = q.degree()?;
    if n == 0 || !q.is_monic(rv) || dq % n != 0 {
        return None;
    }
    if n == 1 {
        return Some(q.clone());
    }
    let ell = dq / n;
    let inv_n = rv.invert(&rv.from_i64(n as i64)).ok()?;
    let mut root = vec![rv.zero(); ell + 1];
    root[ell] = rv.one();
    for j in 1..=ell {
        let p = TowerPoly::new(root.clone(), rv);
        let pn = p.pow(n, rv);
        let target = q.coeffs.get(dq - j).cloned().unwrap_or_else(|| rv.zero());
        let have = pn.coeffs.get(dq - j).cloned().unwrap_or_else(|| rv.zero());
        root[ell - j] = rv.mul(&rv.sub(&target, &have), &inv_n);
    }
    let p = TowerPoly::new(root, rv);
    if p.pow(n, rv) == *q {
        Some(p)
    } else {
        None
    }
}

/// Display wrapper: prints elements as polynomials in z1, ..., zk.
pub struct ElemDisplay {
    elem: Elem,
    level: usize,
}

fn collect_monomials(
    elem: &Elem,
    level: usize,
    exps: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, Scalar)>,
) {
    match elem {
        Elem::Base(s) => {
            out.push((exps.clone(), s.clone()));
        }
        Elem::Ext(v) => {
            for (i, c) in v.iter().enumerate() {
                exps[level - 1] = i;
                collect_monomials(c, level - 1, exps, out);
            }
            exps[level - 1] = 0;
        }
    }
}

impl fmt::Display for ElemDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut exps = vec![0usize; self.level];
        let mut monomials = Vec::new();
        collect_monomials(&self.elem, self.level, &mut exps, &mut monomials);
        // sorted by total degree then lexicographically, highest first
        monomials.sort_by(|a, b| {
            let ta: usize = a.0.iter().sum();
            let tb: usize = b.0.iter().sum();
            tb.cmp(&ta).then_with(|| b.0.cmp(&a.0))
        });
        let mut first = true;
        for (exp, coeff) in &monomials {
            let is_zero = match coeff {
                Scalar::Fp(v) => *v == 0,
                Scalar::Q(q) => num_traits::Zero::is_zero(q),
            };
            if is_zero {
                continue;
            }
            let s = coeff.to_string();
            let (sign, mag) = if let Some(rest) = s.strip_prefix('-') {
                ("-", rest.to_string())
            } else {
                ("+", s)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| {
                    if *e == 1 {
                        format!("z{}", i + 1)
                    } else {
                        format!("z{}^{}", i + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> TowerRing {
        TowerRing::new(BaseField::Rationals)
    }

    /// The running example ring: Q[z1]/(z1^3 - z1), a product of three copies of Q.
    fn ring1() -> TowerRing {
        let r = q();
        let rv = r.view();
        // Z^3 - Z
        let p = TowerPoly::new(
            vec![rv.zero(), rv.from_i64(-1), rv.zero(), rv.one()],
            &rv,
        );
        r.extend(p).unwrap()
    }

    #[test]
    fn extend_accepts_squarefree_and_rejects_others() {
        let r = q();
        let rv = r.view();
        // Z - 1: dimension-1 extension isomorphic to Q
        let lin = TowerPoly::new(vec![rv.from_i64(-1), rv.one()], &rv);
        let r1 = r.extend(lin).unwrap();
        assert_eq!(r1.dimension(), 1);
        // Z(Z-1)^2 = Z^3 - 2Z^2 + Z is not square-free
        let bad = TowerPoly::new(
            vec![rv.zero(), rv.one(), rv.from_i64(-2), rv.one()],
            &rv,
        );
        assert_eq!(r.extend(bad).unwrap_err(), Error::NotSquareFree);
        // non-monic
        let nm = TowerPoly::new(vec![rv.one(), rv.from_i64(2)], &rv);
        assert_eq!(r.extend(nm).unwrap_err(), Error::NotMonic);
        assert_eq!(ring1().dimension(), 3);
    }

    #[test]
    fn units_and_zero_divisors_in_product_ring() {
        let r = ring1();
        let rv = r.view();
        let z = rv.generator();
        // 3 z1^2 - 1 = P_1'(z1) is invertible
        let p1p = rv.sub(&rv.mul(&rv.from_i64(3), &rv.mul(&z, &z)), &rv.one());
        assert!(rv.is_unit(&p1p));
        let inv = rv.invert(&p1p).unwrap();
        assert_eq!(rv.mul(&p1p, &inv), rv.one());
        // z1 vanishes at the Z=0 projection: zero divisor
        assert!(!rv.is_unit(&z));
        assert_eq!(
            rv.invert(&z).unwrap_err(),
            Error::ZeroDivisor("z1".into())
        );
        assert!(rv.is_unit(&rv.one()));
        assert_eq!(rv.invert(&rv.one()).unwrap(), rv.one());
        assert_eq!(rv.invert(&rv.zero()).unwrap_err(), Error::ZeroElement);
    }

    #[test]
    fn unit_status_matches_evaluation_at_projections() {
        // In Q[z1]/(z1^3 - z1) an element a(z1) is a unit iff
        // a(-1), a(0), a(1) are all nonzero.
        let r = ring1();
        let rv = r.view();
        let z = rv.generator();
        for c2 in -2i64..=2 {
            for c1 in -2i64..=2 {
                for c0 in -2i64..=2 {
                    let a = rv.add(
                        &rv.add(
                            &rv.mul(&rv.from_i64(c2), &rv.mul(&z, &z)),
                            &rv.mul(&rv.from_i64(c1), &z),
                        ),
                        &rv.from_i64(c0),
                    );
                    let expected = [-1i64, 0, 1]
                        .iter()
                        .all(|t| c2 * t * t + c1 * t + c0 != 0);
                    assert_eq!(rv.is_unit(&a), expected, "c=({c2},{c1},{c0})");
                }
            }
        }
    }

    #[test]
    fn nth_root_recovers_base() {
        let r = q();
        let rv = r.view();
        // Q = (Z^3 - Z)^2, N = 2 -> Z^3 - Z
        let p = TowerPoly::new(
            vec![rv.zero(), rv.from_i64(-1), rv.zero(), rv.one()],
            &rv,
        );
        let q2 = p.pow(2, &rv);
        assert_eq!(nth_root_monic(&q2, 2, &rv), Some(p.clone()));
        assert_eq!(nth_root_monic(&q2, 1, &rv), Some(q2.clone()));
        // Z(Z-1)^2 admits no cube root (degree constraint)
        let bad = TowerPoly::new(
            vec![rv.zero(), rv.one(), rv.from_i64(-2), rv.one()],
            &rv,
        );
        assert_eq!(nth_root_monic(&bad, 3, &rv), None);
        assert_eq!(nth_root_monic(&bad, 2, &rv), None);
    }

    #[test]
    fn squarefree_examples() {
        let r = q();
        let rv = r.view();
        let p = TowerPoly::new(
            vec![rv.zero(), rv.from_i64(-1), rv.zero(), rv.one()],
            &rv,
        );
        assert!(is_squarefree(&p, &rv));
        let bad = TowerPoly::new(
            vec![rv.zero(), rv.one(), rv.from_i64(-2), rv.one()],
            &rv,
        );
        assert!(!is_squarefree(&bad, &rv));
        let lin = TowerPoly::new(vec![rv.from_i64(5), rv.one()], &rv);
        assert!(is_squarefree(&lin, &rv));
    }

    #[test]
    fn degree_one_extension_on_top() {
        // Q[z1]/(z1^3-z1), then Z2 - (z1 + 2): dimension stays 3.
        let r = ring1();
        let rv = r.view();
        let z = rv.generator();
        let c = rv.add(&z, &rv.from_i64(2));
        let p2 = TowerPoly::new(vec![rv.neg(&c), rv.one()], &rv);
        let r2 = r.extend(p2).unwrap();
        assert_eq!(r2.dimension(), 3);
        let rv2 = r2.view();
        let z2 = rv2.generator();
        // z2 equals the embedded z1 + 2
        assert_eq!(z2, rv2.embed_from(&c, 1));
    }

    #[test]
    fn display_canonical() {
        let r = ring1();
        let rv = r.view();
        let z = rv.generator();
        let a = rv.sub(&rv.mul(&rv.from_i64(3), &rv.mul(&z, &z)), &rv.one());
        assert_eq!(rv.display(&a).to_string(), "3*z1^2 - 1");
        assert_eq!(rv.display(&rv.zero()).to_string(), "0");
    }
}
