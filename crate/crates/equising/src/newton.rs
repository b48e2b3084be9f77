//! Polynomials in y over x-series, Newton polygons and the
//! pseudo-degeneracy test.
//!
//! For F = Σ aᵢ(x) yⁱ monic in y, the Newton polygon is the lower convex
//! hull of the points (i, val aᵢ). Its right-hand edge mi + qj = l (coprime
//! q, m ≥ 0, slope (1,0) when the polygon is a single point) carries the
//! lower boundary polynomial F̄ = Σ_{(i,j) on edge} a_{ij} xʲ yⁱ. F is
//! pseudo-degenerate when F̄ = (P(y^q/x^m) x^{m·deg P})^N with P monic and
//! square-free, and P(0) a unit whenever q > 1.

use crate::error::Error;
use crate::series::{Prec, XPoly};
use crate::tower::{is_squarefree, nth_root_monic, Elem, RingView, TowerPoly};

/// Polynomial in y with x-series coefficients; `coeffs[i]` multiplies yⁱ.
#[derive(Clone, Debug)]
pub struct YPoly {
    pub coeffs: Vec<XPoly>,
}

impl YPoly {
    pub fn new(mut coeffs: Vec<XPoly>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        YPoly { coeffs }
    }

    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
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

    pub fn coeff(&self, i: usize) -> XPoly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| XPoly::zero(Prec::Exact))
    }

    pub fn is_monic(&self, rv: &RingView<'_>) -> bool {
        match self.coeffs.last() {
            Some(c) => c.coeffs.len() == 1 && c.coeffs[0] == rv.one(),
            None => false,
        }
    }

    pub fn add(&self, other: &YPoly, rv: &RingView<'_>) -> YPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        YPoly::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i), rv)).collect())
    }

    pub fn neg(&self, rv: &RingView<'_>) -> YPoly {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg(rv)).collect(),
        }
    }

    pub fn sub(&self, other: &YPoly, rv: &RingView<'_>) -> YPoly {
        self.add(&other.neg(rv), rv)
    }

    pub fn mul(&self, other: &YPoly, rv: &RingView<'_>) -> YPoly {
        if self.is_zero() || other.is_zero() {
            return YPoly::zero();
        }
        let prec = self
            .coeffs
            .iter()
            .chain(other.coeffs.iter())
            .fold(Prec::Exact, |p, c| p.min(c.prec));
        let mut out = vec![XPoly::zero(prec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b, rv), rv);
            }
        }
        YPoly::new(out)
    }

    pub fn pow(&self, mut e: usize, rv: &RingView<'_>) -> YPoly {
        let mut acc = YPoly::new(vec![XPoly::one(rv)]);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, rv);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, rv);
            }
        }
        acc
    }

    pub fn scale_series(&self, s: &XPoly, rv: &RingView<'_>) -> YPoly {
        YPoly::new(self.coeffs.iter().map(|c| c.mul(s, rv)).collect())
    }

    pub fn scale_elem(&self, e: &Elem, rv: &RingView<'_>) -> YPoly {
        YPoly::new(self.coeffs.iter().map(|c| c.scale(e, rv)).collect())
    }

    /// ∂F/∂y.
    pub fn derivative_y(&self, rv: &RingView<'_>) -> YPoly {
        if self.coeffs.len() <= 1 {
            return YPoly::zero();
        }
        YPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&rv.from_i64((i + 1) as i64), rv))
                .collect(),
        )
    }

    /// Euclidean division by a monic divisor: self = q·div + r, deg_y r < deg_y div.
    pub fn div_rem(&self, div: &YPoly, rv: &RingView<'_>) -> Result<(YPoly, YPoly), Error> {
        if !div.is_monic(rv) {
            return Err(Error::NotMonic);
        }
        let dd = div.degree().unwrap();
        let mut rem: Vec<XPoly> = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((YPoly::zero(), YPoly::new(rem)));
        }
        let mut quo = vec![XPoly::zero(Prec::Exact); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone();
            if c.is_zero() {
                continue;
            }
            quo[i - dd] = c.clone();
            for j in 0..=dd {
                rem[i - dd + j] = rem[i - dd + j].sub(&c.mul(&div.coeff(j), rv), rv);
            }
        }
        rem.truncate(dd);
        Ok((YPoly::new(quo), YPoly::new(rem)))
    }

    /// F(x, y + c) for a ring element c (synthetic division).
    pub fn taylor_shift(&self, c: &Elem, rv: &RingView<'_>) -> YPoly {
        if rv.is_zero(c) || self.is_zero() {
            return self.clone();
        }
        let d = self.coeffs.len() - 1;
        let mut cs = self.coeffs.clone();
        for i in 0..d {
            for j in (i..d).rev() {
                let t = cs[j + 1].scale(c, rv);
                cs[j] = cs[j].add(&t, rv);
            }
        }
        YPoly::new(cs)
    }

    /// F(x, y + c(x)) for a series c (synthetic division).
    pub fn taylor_shift_series(&self, c: &XPoly, rv: &RingView<'_>) -> YPoly {
        if c.is_zero() || self.is_zero() {
            return self.clone();
        }
        let d = self.coeffs.len() - 1;
        let mut cs = self.coeffs.clone();
        for i in 0..d {
            for j in (i..d).rev() {
                let t = cs[j + 1].mul(c, rv);
                cs[j] = cs[j].add(&t, rv);
            }
        }
        YPoly::new(cs)
    }

    /// Coefficients at x = 0, as a polynomial in y.
    pub fn at_x0(&self, rv: &RingView<'_>) -> TowerPoly {
        TowerPoly::new(self.coeffs.iter().map(|c| c.coeff(0, rv)).collect(), rv)
    }

    /// Lifts every coefficient from a lower tower level into `rv`'s level.
    pub fn embed_from(&self, from: usize, rv: &RingView<'_>) -> YPoly {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| c.embed_from(from, rv)).collect(),
        }
    }

    pub fn truncate_x(&self, n: usize, rv: &RingView<'_>) -> YPoly {
        YPoly::new(self.coeffs.iter().map(|c| c.truncate(n, rv)).collect())
    }

    pub fn eq_poly(&self, other: &YPoly, rv: &RingView<'_>) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i).eq_poly(&other.coeff(i), rv))
    }
}

/// Right-hand edge of the Newton polygon: mi + qj = l with gcd(q, m) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub q: usize,
    pub m: usize,
    pub l: usize,
}

/// Edge data (q, m, P, N) of a pseudo-degenerate polynomial, together with
/// the Bézout pair s·q − t·m = 1 (0 ≤ t < q) and ℓ = deg P.
#[derive(Clone, Debug)]
pub struct EdgeData {
    pub q: usize,
    pub m: usize,
    pub pol: TowerPoly,
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub ell: usize,
}

/// Support points (i, val aᵢ) of a monic F; errors if some truncated
/// coefficient is zero to its precision.
pub fn support_points(f: &YPoly, rv: &RingView<'_>) -> Result<Vec<(usize, usize)>, Error> {
    let mut pts = Vec::new();
    for (i, c) in f.coeffs.iter().enumerate() {
        match c.valuation_in(rv) {
            Ok(Some(v)) => pts.push((i, v)),
            Ok(None) => {}
            Err(e) => return Err(e),
        }
    }
    if pts.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(pts)
}

/// Right-hand edge of the lower convex hull of the support. Single-point
/// polygons report slope (1, 0).
pub fn lower_edge(points: &[(usize, usize)]) -> Edge {
    debug_assert!(points.windows(2).all(|w| w[0].0 < w[1].0));
    if points.len() == 1 {
        return Edge { q: 1, m: 0, l: points[0].1 };
    }
    // monotone-chain lower hull
    let mut hull: Vec<(usize, usize)> = Vec::new();
    for &p in points {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // keep b only if it is strictly below segment a-p
            let cross = (b.0 as i128 - a.0 as i128) * (p.1 as i128 - a.1 as i128)
                - (b.1 as i128 - a.1 as i128) * (p.0 as i128 - a.0 as i128);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    if hull.len() == 1 {
        let (i, j) = hull[0];
        let _ = i;
        return Edge { q: 1, m: 0, l: j };
    }
    let a = hull[hull.len() - 2];
    let b = hull[hull.len() - 1];
    let di = b.0 - a.0;
    let dj = a.1 as i128 - b.1 as i128; // ≥ 0: rightmost point has minimal valuation
    debug_assert!(dj >= 0);
    let dj = dj as usize;
    let g = gcd(di, dj);
    let (q, m) = if dj == 0 { (1, 0) } else { (di / g, dj / g) };
    Edge { q, m, l: m * b.0 + q * b.1 }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// Lower boundary polynomial F̄: the terms of F on the edge.
pub fn boundary_poly(f: &YPoly, edge: Edge, rv: &RingView<'_>) -> YPoly {
    let mut out = vec![XPoly::zero(Prec::Exact); f.coeffs.len()];
    for (i, c) in f.coeffs.iter().enumerate() {
        let num = edge.l as i128 - (edge.m * i) as i128;
        if num < 0 || num % edge.q as i128 != 0 {
            continue;
        }
        let j = (num / edge.q as i128) as usize;
        let a = c.coeff(j, rv);
        if !rv.is_zero(&a) {
            // the point must lie on or above the hull; on the edge iff val ≥ rule holds
            out[i] = XPoly::monomial(a, j, rv);
        }
    }
    YPoly::new(out)
}

/// Residual polynomial Q = Σ_{(i,j) on edge} a_{ij} Z^{i/q}; requires q | d.
pub fn residual_q(f: &YPoly, edge: Edge, rv: &RingView<'_>) -> TowerPoly {
    let d = f.degree().unwrap();
    debug_assert_eq!(d % edge.q, 0);
    let mut cs = vec![rv.zero(); d / edge.q + 1];
    let mut i = 0;
    while i <= d {
        let num = edge.l as i128 - (edge.m * i) as i128;
        if num >= 0 && num % edge.q as i128 == 0 {
            let j = (num / edge.q as i128) as usize;
            cs[i / edge.q] = f.coeff(i).coeff(j, rv);
        }
        i += edge.q;
    }
    TowerPoly::new(cs, rv)
}

fn divisors_desc(n: usize) -> Vec<usize> {
    let mut ds: Vec<usize> = (1..=n).filter(|k| n % k == 0).collect();
    ds.reverse();
    ds
}

fn bezout(q: usize, m: usize) -> (usize, usize) {
    if q == 1 {
        return (1, 0);
    }
    for t in 0..q {
        if (t * m + 1) % q == 0 {
            return ((t * m + 1) / q, t);
        }
    }
    unreachable!("q and m are coprime")
}

/// Decides pseudo-degeneracy of a monic F and returns its edge data.
pub fn pseudo_degeneracy_test(
    f: &YPoly,
    rv: &RingView<'_>,
) -> Result<Option<EdgeData>, Error> {
    if !f.is_monic(rv) {
        return Err(Error::NotMonic);
    }
    let d = f.degree().unwrap();
    let pts = support_points(f, rv)?;
    let edge = lower_edge(&pts);
    if d % edge.q != 0 {
        return Ok(None);
    }
    let q_pol = residual_q(f, edge, rv);
    let deg_q = match q_pol.degree() {
        Some(dq) => dq,
        None => return Err(Error::InternalInvariant("empty residual polynomial".into())),
    };
    for n in divisors_desc(deg_q) {
        if let Some(p) = nth_root_monic(&q_pol, n, rv) {
            if !is_squarefree(&p, rv) {
                continue;
            }
            if edge.q > 1 && !rv.is_unit(&p.constant_term(rv)) {
                return Ok(None);
            }
            let ell = p.degree().unwrap();
            let (s, t) = bezout(edge.q, edge.m);
            return Ok(Some(EdgeData {
                q: edge.q,
                m: edge.m,
                pol: p,
                n,
                s,
                t,
                ell,
            }));
        }
    }
    Ok(None)
}
