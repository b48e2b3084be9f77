//! Brute-force cross-checks, independent of the expansion-based pipeline.
//!
//! Three families of tools: resultants in y (by evaluation and Lagrange
//! interpolation) for discriminant valuations and pairwise intersection
//! multiplicities; branch parametrizations (x = Tᵉ, y = S(T)) with their
//! minimal polynomials and characteristic exponents; and explicit blow-up
//! transforms with Weierstrass splitting at finite x-precision, recomputing
//! every stage polynomial H_k that the pipeline only touches through its
//! Ψ-adic expansion.

use crate::error::Error;
use crate::field::BaseField;
use crate::linalg::{berkowitz_charpoly, Ring};
use crate::newton::{boundary_poly, lower_edge, EdgeData, YPoly};
use crate::series::{Prec, XPoly};
use crate::tower::{Elem, RingView, TowerPoly, TowerRing};

// ---------- univariate resultants over the base field ----------

fn univ_rem(a: &TowerPoly, b: &TowerPoly, rv: &RingView<'_>) -> Result<TowerPoly, Error> {
    let db = b.degree().ok_or(Error::ZeroPolynomial)?;
    let lb_inv = rv.invert(b.leading().unwrap())?;
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let c = rv.mul(r.leading().unwrap(), &lb_inv);
        let mut sub = vec![rv.zero(); dr + 1];
        for (j, bc) in b.coeffs.iter().enumerate() {
            sub[dr - db + j] = rv.mul(&c, bc);
        }
        r = r.sub(&TowerPoly::new(sub, rv), rv);
    }
    Ok(r)
}

/// Resultant of univariate polynomials over a field (Euclidean algorithm).
fn resultant_univ(a: &TowerPoly, b: &TowerPoly, rv: &RingView<'_>) -> Result<Elem, Error> {
    let mut a = a.clone();
    let mut b = b.clone();
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(da), Some(db)) => (da, db),
        _ => return Ok(rv.zero()),
    };
    if da < db {
        std::mem::swap(&mut a, &mut b);
        if da * db % 2 == 1 {
            // swap sign then fall through with the swapped pair
            let r = resultant_univ(&a, &b, rv)?;
            return Ok(rv.neg(&r));
        }
        return resultant_univ(&a, &b, rv);
    }
    let mut res = rv.one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        if db == 0 {
            res = rv.mul(&res, &rv.pow(&b.coeffs[0], da));
            return Ok(res);
        }
        let r = univ_rem(&a, &b, rv)?;
        let dr = match r.degree() {
            None => return Ok(rv.zero()),
            Some(dr) => dr,
        };
        res = rv.mul(&res, &rv.pow(b.leading().unwrap(), da - dr));
        if da * db % 2 == 1 {
            res = rv.neg(&res);
        }
        a = b;
        b = r;
    }
}

/// Newton-form interpolation through (xs[i], ys[i]) with distinct nodes.
fn interpolate(xs: &[Elem], ys: &[Elem], rv: &RingView<'_>) -> Result<XPoly, Error> {
    let n = xs.len();
    // divided differences
    let mut dd: Vec<Elem> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = rv.sub(&dd[i], &dd[i - 1]);
            let den = rv.sub(&xs[i], &xs[i - level]);
            dd[i] = rv.mul(&num, &rv.invert(&den)?);
        }
    }
    // poly = Σ dd[i]·Π_{j<i}(x − x_j)
    let mut acc = XPoly::zero(Prec::Exact);
    let mut basis = XPoly::one(rv);
    for i in 0..n {
        acc = acc.add(&basis.scale(&dd[i], rv), rv);
        if i + 1 < n {
            let lin = XPoly::new(vec![rv.neg(&xs[i]), rv.one()], Prec::Exact, rv);
            basis = basis.mul(&lin, rv);
        }
    }
    Ok(acc)
}

fn max_x_degree(f: &YPoly) -> usize {
    f.coeffs
        .iter()
        .filter_map(|c| c.degree())
        .max()
        .unwrap_or(0)
}

fn eval_at_x(f: &YPoly, x: &Elem, rv: &RingView<'_>) -> TowerPoly {
    TowerPoly::new(f.coeffs.iter().map(|c| c.eval(x, rv)).collect(), rv)
}

/// Resultant of `a` and `b` with respect to y, by evaluation/interpolation.
/// Requires exact coefficients and enough field elements for the nodes.
pub fn resultant_y(a: &YPoly, b: &YPoly, rv: &RingView<'_>) -> Result<XPoly, Error> {
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(da), Some(db)) => (da, db),
        _ => return Ok(XPoly::zero(Prec::Exact)),
    };
    if da == 0 {
        return Ok(a.coeff(0).pow_checked(db, rv));
    }
    if db == 0 {
        return Ok(b.coeff(0).pow_checked(da, rv));
    }
    let bound = max_x_degree(a) * db + max_x_degree(b) * da;
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut node: i64 = 0;
    while xs.len() <= bound {
        let x = rv.from_i64(node);
        if node > 0 && rv.is_zero(&x) {
            return Err(Error::InvalidInput(
                "field is too small to interpolate the resultant".into(),
            ));
        }
        node += 1;
        let av = eval_at_x(a, &x, rv);
        let bv = eval_at_x(b, &x, rv);
        // skip nodes where a leading coefficient vanishes
        if av.degree() != Some(da) || bv.degree() != Some(db) {
            continue;
        }
        xs.push(x);
        ys.push(resultant_univ(&av, &bv, rv)?);
    }
    interpolate(&xs, &ys, rv)
}

impl XPoly {
    fn pow_checked(&self, e: usize, rv: &RingView<'_>) -> XPoly {
        let mut acc = XPoly::one(rv);
        for _ in 0..e {
            acc = acc.mul(self, rv);
        }
        acc
    }
}

/// Valuation of Res_y(F, ∂F/∂y); fails with `CommonFactor` when F is not
/// square-free.
pub fn disc_valuation(f: &YPoly, rv: &RingView<'_>) -> Result<usize, Error> {
    let r = resultant_y(f, &f.derivative_y(rv), rv)?;
    match r.valuation_in(rv)? {
        Some(v) => Ok(v),
        None => Err(Error::CommonFactor),
    }
}

/// Intersection multiplicity (F, G)₀ = val_x Res_y(F, G) of two coprime
/// monic polynomials.
pub fn intersection_multiplicity(
    a: &YPoly,
    b: &YPoly,
    rv: &RingView<'_>,
) -> Result<usize, Error> {
    let r = resultant_y(a, b, rv)?;
    match r.valuation_in(rv)? {
        Some(v) => Ok(v),
        None => Err(Error::CommonFactor),
    }
}

// ---------- branch parametrizations ----------

/// A branch x = Tᵉ, y = S(T) with gcd(e, supp S) = 1.
#[derive(Clone, Debug)]
pub struct Branch {
    pub e: usize,
    pub s: XPoly,
}

impl Branch {
    pub fn new(e: usize, s: XPoly, rv: &RingView<'_>) -> Result<Branch, Error> {
        if e == 0 {
            return Err(Error::InvalidInput("ramification index must be ≥ 1".into()));
        }
        let mut g = e;
        for (j, c) in s.coeffs.iter().enumerate() {
            if !rv.is_zero(c) {
                g = gcd(g, j);
            }
        }
        if g != 1 {
            return Err(Error::NotPrimitive);
        }
        Ok(Branch { e, s })
    }

    /// Minimal polynomial: the characteristic polynomial of multiplication
    /// by S(T) on K[x][T]/(Tᵉ − x), a monic degree-e polynomial in y.
    pub fn to_poly(&self, rv: &RingView<'_>) -> YPoly {
        let e = self.e;
        let ring = XRing { rv };
        let mut m = vec![vec![XPoly::zero(Prec::Exact); e]; e];
        for col in 0..e {
            for (j, c) in self.s.coeffs.iter().enumerate() {
                if rv.is_zero(c) {
                    continue;
                }
                let row = (col + j) % e;
                let xpow = (col + j) / e;
                let term = XPoly::monomial(c.clone(), xpow, rv);
                m[row][col] = m[row][col].add(&term, rv);
            }
        }
        let cp = berkowitz_charpoly(&ring, &m);
        // cp is descending: y^e + cp[1]·y^{e−1} + … + cp[e]
        let mut coeffs = Vec::with_capacity(e + 1);
        for i in 0..=e {
            coeffs.push(cp[e - i].clone());
        }
        YPoly::new(coeffs)
    }

    /// Characteristic exponents (e; β₁ < β₂ < …) read off the support of S
    /// through the gcd chain.
    pub fn char_exponents(&self, rv: &RingView<'_>) -> Vec<usize> {
        let mut out = vec![self.e];
        let mut g = self.e;
        for (j, c) in self.s.coeffs.iter().enumerate() {
            if g == 1 {
                break;
            }
            if !rv.is_zero(c) && j % g != 0 {
                out.push(j);
                g = gcd(g, j);
            }
        }
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

struct XRing<'a, 'r> {
    rv: &'a RingView<'r>,
}

impl<'a, 'r> Ring for XRing<'a, 'r> {
    type El = XPoly;
    fn zero(&self) -> XPoly {
        XPoly::zero(Prec::Exact)
    }
    fn one(&self) -> XPoly {
        XPoly::one(self.rv)
    }
    fn add(&self, a: &XPoly, b: &XPoly) -> XPoly {
        a.add(b, self.rv)
    }
    fn neg(&self, a: &XPoly) -> XPoly {
        a.neg(self.rv)
    }
    fn mul(&self, a: &XPoly, b: &XPoly) -> XPoly {
        a.mul(b, self.rv)
    }
    fn is_zero(&self, a: &XPoly) -> bool {
        a.is_zero()
    }
}

// ---------- explicit stage transforms ----------

/// Inverse of s modulo y^n (constant term must be a unit).
fn inverse_mod_yn(s: &TowerPoly, n: usize, rv: &RingView<'_>) -> Result<TowerPoly, Error> {
    let c0 = s.constant_term(rv);
    let inv0 = rv.invert(&c0)?;
    let mut w = vec![inv0.clone()];
    for i in 1..n {
        let mut acc = rv.zero();
        for j in 0..i {
            if let Some(c) = s.coeffs.get(i - j) {
                acc = rv.add(&acc, &rv.mul(c, &w[j]));
            }
        }
        w.push(rv.neg(&rv.mul(&acc, &inv0)));
    }
    Ok(TowerPoly::new(w, rv))
}

fn x_coefficient(h: &YPoly, j: usize, rv: &RingView<'_>) -> TowerPoly {
    TowerPoly::new(h.coeffs.iter().map(|c| c.coeff(j, rv)).collect(), rv)
}

/// Weierstrass factor of degree n of `h`, where h(0, y) = yⁿ·s(y) with s(0)
/// a unit, lifted x-coefficient by x-coefficient up to precision `rho`.
pub fn weierstrass_factor(
    h: &YPoly,
    n: usize,
    rho: usize,
    rv: &RingView<'_>,
) -> Result<YPoly, Error> {
    let h0 = h.at_x0(rv);
    for i in 0..n {
        if h0.coeffs.get(i).map(|c| !rv.is_zero(c)).unwrap_or(false) {
            return Err(Error::InternalInvariant(
                "transform is not divisible by y^n at x = 0".into(),
            ));
        }
    }
    let s = TowerPoly::new(h0.coeffs.iter().skip(n).cloned().collect(), rv);
    if !rv.is_unit(&s.constant_term(rv)) {
        return Err(Error::InternalInvariant(
            "cofactor of y^n at x = 0 is not a unit".into(),
        ));
    }
    let w = inverse_mod_yn(&s, n.max(1), rv)?;
    // g, u as y-coefficient lists of x-coefficient lists
    let du = h.degree().unwrap() - n;
    let mut g = vec![vec![rv.zero(); rho]; n + 1];
    g[n][0] = rv.one();
    let mut u = vec![vec![rv.zero(); rho]; du + 1];
    for i in 0..=du {
        u[i][0] = s.coeffs.get(i).cloned().unwrap_or_else(|| rv.zero());
    }
    let to_ypoly = |cs: &Vec<Vec<Elem>>| {
        YPoly::new(
            cs.iter()
                .map(|c| XPoly::new(c.clone(), Prec::Trunc(rho), rv))
                .collect(),
        )
    };
    for j in 1..rho {
        let gy = to_ypoly(&g);
        let uy = to_ypoly(&u);
        let e = h.sub(&gy.mul(&uy, rv), rv);
        let ej = x_coefficient(&e, j, rv);
        if ej.is_zero() {
            continue;
        }
        // δg·s + yⁿ·δu = e_j with deg δg < n
        let prod = ej.mul(&w, rv);
        let dg = TowerPoly::new(prod.coeffs.iter().take(n).cloned().collect(), rv);
        let rem = ej.sub(&dg.mul(&s, rv), rv);
        for i in 0..n.min(rem.coeffs.len()) {
            if !rv.is_zero(&rem.coeffs[i]) {
                return Err(Error::InternalInvariant(
                    "Weierstrass correction is not divisible by y^n".into(),
                ));
            }
        }
        let duu = TowerPoly::new(rem.coeffs.iter().skip(n).cloned().collect(), rv);
        for (i, c) in dg.coeffs.iter().enumerate() {
            g[i][j] = c.clone();
        }
        for (i, c) in duu.coeffs.iter().enumerate() {
            if i <= du {
                u[i][j] = c.clone();
            }
        }
    }
    Ok(to_ypoly(&g))
}

fn boundary_of(h: &YPoly, rv: &RingView<'_>) -> Result<YPoly, Error> {
    // coefficients that are zero to their precision are fine as long as
    // their possible support starts strictly above the edge
    let mut pts = Vec::new();
    let mut unknown = Vec::new();
    for (i, c) in h.coeffs.iter().enumerate() {
        match c.valuation_in(rv) {
            Ok(Some(v)) => pts.push((i, v)),
            Ok(None) => {}
            Err(_) => match c.prec {
                Prec::Trunc(p) => unknown.push((i, p)),
                Prec::Exact => unreachable!("exact zero cannot fail valuation"),
            },
        }
    }
    if pts.is_empty() {
        return Err(Error::PrecisionTooLow);
    }
    let edge = lower_edge(&pts);
    for (i, p) in unknown {
        if edge.m * i + edge.q * p <= edge.l {
            return Err(Error::PrecisionTooLow);
        }
    }
    Ok(boundary_poly(h, edge, rv))
}

fn min_prec(h: &YPoly) -> Option<usize> {
    h.coeffs
        .iter()
        .filter_map(|c| match c.prec {
            Prec::Exact => None,
            Prec::Trunc(n) => Some(n),
        })
        .min()
}

/// Recomputes the lower boundary polynomial of every stage transform H_k by
/// explicit substitution, power-of-x division, Weierstrass splitting and
/// tame shifting, working at x-precision `rho0`. Returns one boundary per
/// stage that carries information: a final edge with N = 1 forces H = y and
/// is skipped, so the result has exactly one entry per boundary the
/// expansion-based test inspects.
pub fn transform_boundaries(
    f: &YPoly,
    data: &[EdgeData],
    base: BaseField,
    rho0: usize,
) -> Result<Vec<YPoly>, Error> {
    let mut ring = TowerRing::new(base);
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let mut out = Vec::with_capacity(data.len() + 1);
    let mut h = {
        let rv = ring.view();
        if !f.is_monic(&rv) {
            return Err(Error::NotMonic);
        }
        let inv_d = rv.invert(&rv.from_i64(d as i64))?;
        let c0 = f.coeff(d - 1).scale(&rv.neg(&inv_d), &rv);
        let h0 = f.taylor_shift_series(&c0, &rv).truncate_x(rho0, &rv);
        out.push(boundary_of(&h0, &rv)?);
        h0
    };
    for ed in data {
        if ed.n == 1 {
            break;
        }
        let next = ring.extend(ed.pol.clone())?;
        {
            let rv = next.view();
            let z = rv.generator();
            let lifted = h.embed_from(rv.level() - 1, &rv);
            // σ: x ↦ z^t·x^q, y ↦ x^m·(y + z^s)
            let zt = rv.pow(&z, ed.t);
            let subbed = YPoly::new(
                lifted
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        c.subst_scaled_power(&zt, ed.q, &rv)
                            .shift_up(ed.m * i, &rv)
                    })
                    .collect(),
            )
            .taylor_shift(&rv.pow(&z, ed.s), &rv);
            let strip = ed.q * ed.m * ed.ell * ed.n;
            let stripped = YPoly::new(
                subbed
                    .coeffs
                    .iter()
                    .map(|c| c.shift_down(strip, &rv))
                    .collect::<Result<Vec<_>, _>>()?,
            );
            let rho = min_prec(&stripped).unwrap_or(rho0);
            if rho == 0 {
                return Err(Error::PrecisionTooLow);
            }
            let gk = weierstrass_factor(&stripped, ed.n, rho, &rv)?;
            let hk = if ed.n >= 1 {
                let inv_n = rv.invert(&rv.from_i64(ed.n as i64))?;
                let ck = gk.coeff(ed.n - 1).scale(&rv.neg(&inv_n), &rv);
                gk.taylor_shift_series(&ck, &rv)
            } else {
                gk
            };
            out.push(boundary_of(&hk, &rv)?);
            h = hk;
        }
        ring = next;
    }
    Ok(out)
}
