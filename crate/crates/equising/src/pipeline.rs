//! The pseudo-irreducibility test and the equisingularity invariants.
//!
//! The driver computes approximate roots ψ₀, ψ₁, … of F, expands F in the
//! basis Ψ = (x, ψ₀, …, ψ_k), and reconstructs the lower boundary
//! polynomial H̄_k of the k-th transform H_k directly from the expansion —
//! the transforms themselves are never computed. Each stage either yields
//! edge data (q, m, P, N) extending the residue tower, or certifies that F
//! is not pseudo-irreducible. On success the edge data determine the number
//! of absolutely irreducible factors, their degree, characteristic
//! exponents, pairwise intersection multiplicities and the discriminant
//! valuation.

use crate::error::Error;
use crate::field::BaseField;
use crate::newton::{pseudo_degeneracy_test, EdgeData, YPoly};
use crate::roots::{approximate_root, psi_expand, ExpansionTerm};
use crate::series::{Prec, XPoly};
use crate::tower::{Elem, RingView, TowerPoly, TowerRing};

/// Weights V and scaling coefficients Λ, both indexed by −1, 0, …, k.
#[derive(Clone, Debug)]
pub struct VL {
    pub v: Vec<usize>,
    pub lambda: Vec<Elem>,
}

impl VL {
    /// Rank-0 state: V = (1, 0), Λ = (1, 1).
    pub fn initial(rv: &RingView<'_>) -> VL {
        VL {
            v: vec![1, 0],
            lambda: vec![rv.one(), rv.one()],
        }
    }

    /// Advances from rank k to rank k+1; `rv` views the extended tower and
    /// `ed` is the stage's edge data (with P over the previous level).
    pub fn update(&self, ed: &EdgeData, rv: &RingView<'_>) -> Result<VL, Error> {
        let old_len = self.v.len();
        let z = rv.generator();
        let mut v = Vec::with_capacity(old_len + 1);
        let mut lambda = Vec::with_capacity(old_len + 1);
        for j in 0..old_len - 1 {
            v.push(ed.q * self.v[j]);
            let lam = rv.embed_from(&self.lambda[j], rv.level() - 1);
            lambda.push(rv.mul(&lam, &rv.pow(&z, ed.t * self.v[j])));
        }
        let v_last = self.v[old_len - 1];
        v.push(ed.q * v_last + ed.m);
        let lam_last = rv.embed_from(&self.lambda[old_len - 1], rv.level() - 1);
        lambda.push(rv.mul(&lam_last, &rv.pow(&z, ed.t * v_last + ed.s)));
        v.push(ed.q * ed.ell * v[old_len - 1]);
        // λ_top = q·P'(z)·λ_prev^{qℓ}·z^E with
        // E = 1 − s − ℓ + qℓ(t·v_prev + s); E ≥ 0 always (E = 0 when q = 1)
        let e_exp = 1i128 - ed.s as i128 - ed.ell as i128
            + (ed.q * ed.ell) as i128 * (ed.t * v_last + ed.s) as i128;
        if e_exp < 0 {
            return Err(Error::InternalInvariant(
                "negative z-exponent in the Λ update".into(),
            ));
        }
        let p_here = TowerPoly::new(
            ed.pol
                .coeffs
                .iter()
                .map(|c| rv.embed_from(c, rv.level() - 1))
                .collect(),
            rv,
        );
        let dp = p_here.derivative(rv).eval(&z, rv);
        let mut top = rv.mul(&rv.from_i64(ed.q as i64), &dp);
        top = rv.mul(&top, &rv.pow(&lam_last, ed.q * ed.ell));
        top = rv.mul(&top, &rv.pow(&z, e_exp as usize));
        if !rv.is_unit(&top) {
            return Err(Error::InternalInvariant(
                "top Λ coefficient is not a unit".into(),
            ));
        }
        lambda.push(top);
        Ok(VL { v, lambda })
    }
}

fn dot(b: &[usize], v: &[usize]) -> usize {
    b.iter().zip(v).map(|(x, y)| x * y).sum()
}

/// Lower boundary polynomial H̄_k reconstructed from the Ψ-adic expansion:
/// coefficient of xʷⁱ yⁱ is Σ_{⟨B,V⟩ minimal with b_k = i} f_B Λ^{B−B₀}.
pub fn boundary_from_expansion(
    terms: &[ExpansionTerm],
    vl: &VL,
    n: usize,
    rv: &RingView<'_>,
) -> Result<YPoly, Error> {
    let vf = terms
        .iter()
        .map(|(b, _)| dot(b, &vl.v))
        .min()
        .ok_or(Error::ZeroPolynomial)?;
    let mut w: Vec<Option<usize>> = vec![None; n + 1];
    for (b, _) in terms {
        let i = *b.last().unwrap();
        if i > n {
            return Err(Error::InternalInvariant(
                "expansion exponent exceeds the stage degree".into(),
            ));
        }
        let val = dot(b, &vl.v);
        if w[i].map(|cur| val < cur).unwrap_or(true) {
            w[i] = Some(val);
        }
    }
    if w[n] != Some(vf) {
        return Err(Error::InternalInvariant(
            "leading term does not reach the minimal weight".into(),
        ));
    }
    let top = vl.lambda.last().unwrap();
    let top_inv = rv.invert(top)?;
    let mut coeffs = vec![XPoly::zero(Prec::Exact); n + 1];
    for i in 0..=n {
        let wi = match w[i] {
            Some(wi) => wi,
            None => continue,
        };
        let mut acc = rv.zero();
        for (b, s) in terms {
            if *b.last().unwrap() != i || dot(b, &vl.v) != wi {
                continue;
            }
            // Λ^{B−B₀} with B₀ = (0,…,0,n): only the last slot goes negative
            let mut t = rv.from_scalar(s.clone());
            for (j, &bj) in b.iter().enumerate().take(b.len() - 1) {
                if bj > 0 {
                    t = rv.mul(&t, &rv.pow(&vl.lambda[j], bj));
                }
            }
            t = rv.mul(&t, &rv.pow(top, i));
            t = rv.mul(&t, &rv.pow(&top_inv, n));
            acc = rv.add(&acc, &t);
        }
        if !rv.is_zero(&acc) {
            coeffs[i] = XPoly::monomial(acc, wi - vf, rv);
        }
    }
    // restrict to the lower edge: off-edge terms are not part of H̄_k
    let t = YPoly::new(coeffs);
    let pts = crate::newton::support_points(&t, rv)?;
    let edge = crate::newton::lower_edge(&pts);
    Ok(crate::newton::boundary_poly(&t, edge, rv))
}

/// Outcome of the pseudo-irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    PseudoIrreducible,
    /// The boundary polynomial at this stage (0-based) is not
    /// pseudo-degenerate.
    NotPseudoIrreducible { stage: usize },
}

/// Per-stage diagnostics kept for cross-checking.
#[derive(Clone, Debug)]
pub struct Stage {
    /// H̄_k over the stage's residue ring (tower level k).
    pub boundary: YPoly,
}

/// Result of running the test on a monic polynomial.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub d: usize,
    pub verdict: Verdict,
    /// Edge data (q_k, m_k, P_k, N_k); P_k lives over tower level k−1.
    pub data: Vec<EdgeData>,
    /// Residue tower K ⊂ K₁ ⊂ … built from the residual polynomials.
    pub ring: TowerRing,
    pub stages: Vec<Stage>,
}

/// Decides pseudo-irreducibility of a monic `f` with coefficients over the
/// base field, collecting edge data and per-stage boundary polynomials.
pub fn analyze(f: &YPoly, base: BaseField) -> Result<Analysis, Error> {
    let ring0 = TowerRing::new(base);
    let rv0 = ring0.view();
    if !f.is_monic(&rv0) {
        return Err(Error::NotMonic);
    }
    let d = f.degree().unwrap();
    if !base.characteristic_exceeds(d) {
        return Err(Error::InvalidInput(
            "base characteristic must be zero or exceed the degree".into(),
        ));
    }
    let mut ring = ring0.clone();
    let mut vl = VL::initial(&rv0);
    let mut psis: Vec<YPoly> = Vec::new();
    let mut data: Vec<EdgeData> = Vec::new();
    let mut stages: Vec<Stage> = Vec::new();
    let mut n = d;
    let mut verdict = Verdict::PseudoIrreducible;
    while n > 1 {
        let k = data.len();
        psis.push(approximate_root(f, n, &rv0)?);
        let terms = psi_expand(f, &psis, &rv0)?;
        let edge_data = {
            let rv = ring.view();
            debug_assert_eq!(rv.level(), k);
            let boundary = boundary_from_expansion(&terms, &vl, n, &rv)?;
            let ed = pseudo_degeneracy_test(&boundary, &rv)?;
            stages.push(Stage { boundary });
            ed
        };
        match edge_data {
            None => {
                verdict = Verdict::NotPseudoIrreducible { stage: k };
                break;
            }
            Some(ed) => {
                // (q, m, ℓ) = (1, 0, 1) means the boundary is the single
                // point y^N, i.e. F = ψ^N exactly — only possible for a
                // non-square-free input, and the stage would make no progress
                if ed.q == 1 && ed.ell == 1 && ed.m == 0 {
                    return Err(Error::NotSquareFreeInput);
                }
                let next = ring.extend(ed.pol.clone())?;
                vl = vl.update(&ed, &next.view())?;
                ring = next;
                n = ed.n;
                data.push(ed);
            }
        }
    }
    Ok(Analysis {
        d,
        verdict,
        data,
        ring,
        stages,
    })
}

/// Equisingularity invariants computed from the edge data of a
/// pseudo-irreducible polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    /// Degree of each absolutely irreducible factor.
    pub e: usize,
    /// Number of absolutely irreducible factors.
    pub f: usize,
    /// Characteristic exponents (B₀; B_k for q_k > 1), shared by all factors.
    pub char_exponents: Vec<usize>,
    /// Pairwise intersection multiplicities of one factor with the others
    /// (M_k repeated f̂_{k−1} − f̂_k times for ℓ_k > 1), sorted.
    pub intersections: Vec<usize>,
    /// Valuation of the discriminant of F.
    pub disc_valuation: usize,
    /// Valuation of the discriminant of each irreducible factor.
    pub branch_disc_valuation: usize,
}

/// Evaluates the invariant formulas on an edge-data list.
pub fn invariants(data: &[EdgeData], d: usize) -> Result<Invariants, Error> {
    if let Some(last) = data.last() {
        if last.n != 1 {
            return Err(Error::IncompleteData);
        }
    }
    let g = data.len();
    let e: usize = data.iter().map(|ed| ed.q).product();
    let f: usize = data.iter().map(|ed| ed.ell).product();
    if d != e * f {
        return Err(Error::InternalInvariant(
            "degree does not factor as e·f".into(),
        ));
    }
    // ê_k = e / (q₁⋯q_k), f̂_k likewise
    let mut e_hat = vec![e];
    let mut f_hat = vec![f];
    for ed in data {
        e_hat.push(e_hat.last().unwrap() / ed.q);
        f_hat.push(f_hat.last().unwrap() / ed.ell);
    }
    // B₀ = e, B_k = Σ_{i≤k} m_i ê_i and M_k = Σ_{i≤k} m_i ê_{i−1} ê_i
    let mut b = vec![e];
    let mut m = vec![0usize];
    let mut acc_b = 0usize;
    for (k, ed) in data.iter().enumerate() {
        acc_b += ed.m * e_hat[k + 1];
        b.push(acc_b);
        m.push(m.last().unwrap() + ed.m * e_hat[k] * e_hat[k + 1]);
    }
    let mut char_exponents = vec![b[0]];
    for k in 1..=g {
        if data[k - 1].q > 1 {
            char_exponents.push(b[k]);
        }
    }
    let mut intersections = Vec::new();
    for k in 1..=g {
        if data[k - 1].ell > 1 {
            for _ in 0..(f_hat[k - 1] - f_hat[k]) {
                intersections.push(m[k]);
            }
        }
    }
    intersections.sort_unstable();
    if intersections.len() + 1 != f {
        return Err(Error::InternalInvariant(
            "intersection multiset has wrong cardinality".into(),
        ));
    }
    let branch_disc_valuation: usize = (1..=g)
        .filter(|&k| data[k - 1].q > 1)
        .map(|k| (e_hat[k - 1] - e_hat[k]) * b[k])
        .sum();
    // vF = f(Σ_{ℓ_k>1}(f̂_{k−1}−f̂_k)M_k + Σ_{q_k>1}(ê_{k−1}−ê_k)B_k)
    let pairwise: usize = intersections.iter().sum();
    let disc_valuation = f * (pairwise + branch_disc_valuation);
    Ok(Invariants {
        e,
        f,
        char_exponents,
        intersections,
        disc_valuation,
        branch_disc_valuation,
    })
}

/// Brings an arbitrary nonzero polynomial to monic form without changing
/// the verdict or any reported invariant: if the leading y-coefficient is a
/// unit series u, replace F by u^{d−1}·F(x, y/u); otherwise first apply the
/// projective substitution y ↦ (zy+1)/y (cleared of denominators) for a
/// z with F(0, z) ≠ 0.
pub fn monic_reduce(f: &YPoly, rv: &RingView<'_>) -> Result<YPoly, Error> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if f.is_monic(rv) {
        return Ok(f.clone());
    }
    let lead = f.coeff(d);
    let work = if matches!(lead.valuation_in(rv)?, Some(0)) {
        f.clone()
    } else {
        let f0 = f.at_x0(rv);
        let mut shift = None;
        for z in 0..=d as i64 {
            if !rv.is_zero(&f0.eval(&rv.from_i64(z), rv)) {
                shift = Some(z);
                break;
            }
        }
        let z = shift.ok_or(Error::NoValidShift)?;
        // y^d · F(x, (zy+1)/y) = Σ aᵢ (zy+1)ⁱ y^{d−i}
        let zy1 = YPoly::new(vec![
            XPoly::one(rv),
            XPoly::constant(rv.from_i64(z), rv),
        ]);
        let ypow = YPoly::new(vec![XPoly::zero(Prec::Exact), XPoly::one(rv)]);
        let mut acc = YPoly::zero();
        for i in 0..=d {
            let a = f.coeff(i);
            if a.is_zero() {
                continue;
            }
            let t = zy1.pow(i, rv).mul(&ypow.pow(d - i, rv), rv);
            acc = acc.add(&t.scale_series(&a, rv), rv);
        }
        acc
    };
    let dd = work.degree().unwrap();
    if dd != d {
        return Err(Error::InternalInvariant(
            "projective substitution changed the degree".into(),
        ));
    }
    let u = work.coeff(dd);
    debug_assert!(matches!(u.valuation_in(rv)?, Some(0)));
    // u^{d−1}·W(x, y/u): coefficient of yⁱ becomes aᵢ·u^{d−1−i}, top becomes 1
    let mut coeffs = Vec::with_capacity(dd + 1);
    let mut upow = vec![XPoly::one(rv)];
    for _ in 0..dd {
        upow.push(upow.last().unwrap().mul(&u, rv));
    }
    for i in 0..dd {
        coeffs.push(work.coeff(i).mul(&upow[dd - 1 - i], rv));
    }
    coeffs.push(XPoly::one(rv));
    Ok(YPoly::new(coeffs))
}
