//! Approximate roots and the Ψ-adic expansion.
//!
//! For N dividing d = deg F, the N-th approximate root of a monic F is the
//! unique monic ψ of degree d/N with deg_y(F − ψᴺ) < d − d/N. Expanding F
//! in the basis Ψ = (x, ψ₀, …, ψ_k) by iterated Euclidean division yields
//! F = Σ f_B Ψ^B with base-field coefficients f_B and exponent tuples
//! B = (b₋₁, b₀, …, b_k) satisfying b_{i−1} < deg ψ_i / deg ψ_{i−1}.

use crate::error::Error;
use crate::field::Scalar;
use crate::newton::YPoly;
use crate::series::{Prec, XPoly};
use crate::tower::{Elem, RingView};

/// N-th approximate root of a monic polynomial of degree divisible by N.
/// The base characteristic must not divide N.
pub fn approximate_root(f: &YPoly, n: usize, rv: &RingView<'_>) -> Result<YPoly, Error> {
    if !f.is_monic(rv) {
        return Err(Error::NotMonic);
    }
    let d = f.degree().unwrap();
    if n == 0 || d % n != 0 {
        return Err(Error::NotDivisor(n));
    }
    let rd = d / n;
    let inv_n = rv.invert(&rv.from_i64(n as i64))?;
    let mut psi = vec![XPoly::zero(Prec::Exact); rd + 1];
    psi[rd] = XPoly::one(rv);
    // triangular solve: the coefficient of y^{d-j} in ψ^N is N·c_{rd-j} plus
    // terms depending only on c_{rd-j+1}, …, c_{rd-1}
    for j in 1..=rd {
        let pow = YPoly::new(psi.clone()).pow(n, rv);
        let delta = f.coeff(d - j).sub(&pow.coeff(d - j), rv);
        psi[rd - j] = delta.scale(&inv_n, rv);
    }
    let psi = YPoly::new(psi);
    let diff = f.sub(&psi.pow(n, rv), rv);
    if diff.degree().map(|dd| dd + rd >= d).unwrap_or(false) {
        return Err(Error::InternalInvariant(
            "approximate root does not satisfy its degree bound".into(),
        ));
    }
    Ok(psi)
}

/// One term of a Ψ-adic expansion: exponents (b₋₁, b₀, …, b_k) and the
/// base-field coefficient.
pub type ExpansionTerm = (Vec<usize>, Scalar);

/// Ψ-adic expansion of `f` with respect to `psis` = (ψ₀, …, ψ_k); the
/// implicit ψ₋₁ = x contributes the first exponent.
pub fn psi_expand(
    f: &YPoly,
    psis: &[YPoly],
    rv: &RingView<'_>,
) -> Result<Vec<ExpansionTerm>, Error> {
    if rv.level() != 0 {
        return Err(Error::RingMismatch);
    }
    expand_rec(f, psis, rv)
}

fn expand_rec(
    g: &YPoly,
    psis: &[YPoly],
    rv: &RingView<'_>,
) -> Result<Vec<ExpansionTerm>, Error> {
    match psis.split_last() {
        None => {
            if g.degree().map(|d| d > 0).unwrap_or(false) {
                return Err(Error::InternalInvariant(
                    "expansion residual has positive y-degree".into(),
                ));
            }
            let c = g.coeff(0);
            let mut out = Vec::new();
            for (j, e) in c.coeffs.iter().enumerate() {
                if rv.is_zero(e) {
                    continue;
                }
                match e {
                    Elem::Base(s) => out.push((vec![j], s.clone())),
                    Elem::Ext(_) => {
                        return Err(Error::InternalInvariant(
                            "expansion coefficient is not in the base field".into(),
                        ))
                    }
                }
            }
            Ok(out)
        }
        Some((last, rest)) => {
            let mut cur = g.clone();
            let mut b = 0usize;
            let mut out = Vec::new();
            while !cur.is_zero() {
                let (quo, rem) = cur.div_rem(last, rv)?;
                for (mut bvec, s) in expand_rec(&rem, rest, rv)? {
                    bvec.push(b);
                    out.push((bvec, s));
                }
                cur = quo;
                b += 1;
            }
            Ok(out)
        }
    }
}

/// Rebuilds Σ f_B Ψ^B; used to validate expansions.
pub fn reconstruct(
    terms: &[ExpansionTerm],
    psis: &[YPoly],
    rv: &RingView<'_>,
) -> YPoly {
    let mut acc = YPoly::zero();
    for (b, s) in terms {
        let mut t = YPoly::new(vec![XPoly::monomial(rv.from_scalar(s.clone()), b[0], rv)]);
        for (i, psi) in psis.iter().enumerate() {
            if b[i + 1] > 0 {
                t = t.mul(&psi.pow(b[i + 1], rv), rv);
            }
        }
        acc = acc.add(&t, rv);
    }
    acc
}
