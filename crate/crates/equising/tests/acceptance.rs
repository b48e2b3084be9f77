//! Acceptance suite: one test — and hence one pass/fail line in the test
//! output — per acceptance criterion. Each test states its criterion in
//! its name and asserts the exact expected values; the randomized families
//! are seeded, so every run checks the same instances.

use std::time::Instant;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use equising::field::BaseField;
use equising::input::parse_poly;
use equising::newton::{pseudo_degeneracy_test, EdgeData, YPoly};
use equising::oracle::{self, Branch};
use equising::pipeline::{analyze, invariants, Analysis, Verdict, VL};
use equising::roots::{approximate_root, psi_expand, reconstruct};
use equising::series::{Prec, XPoly};
use equising::tower::{RingView, TowerPoly, TowerRing};

const EX1: &str = "y^6-3*x^3*y^4-2*x^2*y^4+3*x^6*y^2+x^4*y^2-x^9+2*x^8-x^7";
const EX2: &str = "y^6-x^6*y^4-2*x^4*y^4-2*x^2*y^4+2*x^10*y^2+3*x^8*y^2\
                   -2*x^6*y^2+x^4*y^2-x^14+2*x^12-x^10";
const EX3: &str =
    "(y+1)^6-3*x^3*(y+1)^4-2*(y+1)^4+3*x^6*(y+1)^2+(y+1)^2-x^9+2*x^6-x^3";

fn parse_q(src: &str) -> (TowerRing, YPoly) {
    let ring = TowerRing::new(BaseField::Rationals);
    let f = parse_poly(src, &ring.view()).unwrap();
    (ring, f)
}

/// α = (3z² + 1)/(3z² − 1)² over K[z]/(z³ − z).
fn alpha_balanced(rv: &RingView<'_>) -> equising::Elem {
    let z = rv.generator();
    let z2 = rv.mul(&z, &z);
    let num = rv.add(&rv.mul(&rv.from_i64(3), &z2), &rv.one());
    let den = rv.sub(&rv.mul(&rv.from_i64(3), &z2), &rv.one());
    rv.mul(&num, &rv.invert(&rv.mul(&den, &den)).unwrap())
}

#[test]
fn criterion_01_golden_example_one_exact_data_and_invariants() {
    let start = Instant::now();
    let (ring, f) = parse_q(EX1);
    let a = analyze(&f, BaseField::Rationals).unwrap();
    assert_eq!(a.verdict, Verdict::PseudoIrreducible);
    assert_eq!(a.data.len(), 2);
    let rv = ring.view();
    // stage 0: (q, m, P, N) = (1, 1, Z³ − Z, 2)
    assert_eq!((a.data[0].q, a.data[0].m, a.data[0].n), (1, 1, 2));
    let p0 = TowerPoly::new(
        vec![rv.zero(), rv.from_i64(-1), rv.zero(), rv.one()],
        &rv,
    );
    assert_eq!(a.data[0].pol, p0);
    // stage 1: (q, m, P, N) = (2, 1, Z − α, 1) with α = (3z₁²+1)/(3z₁²−1)²
    let r1 = ring.extend(a.data[0].pol.clone()).unwrap();
    let rv1 = r1.view();
    let alpha = alpha_balanced(&rv1);
    assert_eq!((a.data[1].q, a.data[1].m, a.data[1].n), (2, 1, 1));
    let p1 = TowerPoly::new(vec![rv1.neg(&alpha), rv1.one()], &rv1);
    assert_eq!(a.data[1].pol, p1);
    let inv = invariants(&a.data, a.d).unwrap();
    assert_eq!((inv.e, inv.f), (2, 3));
    assert_eq!(inv.char_exponents, vec![2, 3]);
    assert_eq!(inv.intersections, vec![4, 4]);
    assert!(start.elapsed().as_secs_f64() < 1.0, "took {:?}", start.elapsed());
}

#[test]
fn criterion_02_golden_example_two_rejected_at_stage_one() {
    let (ring, f) = parse_q(EX2);
    let a = analyze(&f, BaseField::Rationals).unwrap();
    assert_eq!(a.verdict, Verdict::NotPseudoIrreducible { stage: 1 });
    // H̄₁ = y² − αx² with α = 4z₁²/(3z₁²−1)², a zero divisor
    let r1 = ring.extend(a.data[0].pol.clone()).unwrap();
    let rv1 = r1.view();
    let z = rv1.generator();
    let z2 = rv1.mul(&z, &z);
    let den = rv1.sub(&rv1.mul(&rv1.from_i64(3), &z2), &rv1.one());
    let alpha = rv1.mul(
        &rv1.mul(&rv1.from_i64(4), &z2),
        &rv1.invert(&rv1.mul(&den, &den)).unwrap(),
    );
    let expected = YPoly::new(vec![
        XPoly::monomial(rv1.neg(&alpha), 2, &rv1),
        XPoly::zero(Prec::Exact),
        XPoly::one(&rv1),
    ]);
    assert!(a.stages[1].boundary.eq_poly(&expected, &rv1));
    assert!(!rv1.is_zero(&alpha));
    assert!(!rv1.is_unit(&alpha));
}

#[test]
fn criterion_03_golden_example_three_non_weierstrass() {
    let (_ring, f) = parse_q(EX3);
    let a = analyze(&f, BaseField::Rationals).unwrap();
    assert_eq!(a.verdict, Verdict::PseudoIrreducible);
    assert_eq!((a.data[0].q, a.data[0].m, a.data[0].n), (1, 0, 2));
    assert_eq!((a.data[1].q, a.data[1].m, a.data[1].n), (2, 3, 1));
    let inv = invariants(&a.data, a.d).unwrap();
    assert_eq!(inv.char_exponents, vec![2, 3]);
    assert_eq!(inv.intersections, vec![0, 0]);
    // B = (B₀, B₁, B₂) = (2, 0, 3) and M = (M₁, M₂) = (0, 6)
    let (b, m) = b_and_m(&a.data, inv.e);
    assert_eq!(b, vec![2, 0, 3]);
    assert_eq!(m, vec![0, 6]);
}

/// B_k = Σ_{i≤k} m_i ê_i (with B₀ = e) and M_k = Σ_{i≤k} m_i ê_{i−1} ê_i.
fn b_and_m(data: &[EdgeData], e: usize) -> (Vec<usize>, Vec<usize>) {
    let mut e_hat = vec![e];
    for ed in data {
        e_hat.push(e_hat.last().unwrap() / ed.q);
    }
    let mut b = vec![e];
    let mut m = Vec::new();
    let (mut acc_b, mut acc_m) = (0usize, 0usize);
    for (k, ed) in data.iter().enumerate() {
        acc_b += ed.m * e_hat[k + 1];
        acc_m += ed.m * e_hat[k] * e_hat[k + 1];
        b.push(acc_b);
        m.push(acc_m);
    }
    (b, m)
}

#[test]
fn criterion_04_pseudo_degeneracy_micro_examples() {
    let ring = TowerRing::new(BaseField::Rationals);
    let rv = ring.view();
    // (y² − x²)²(y − x²)(y − x³): pseudo-degenerate with (1, 1, Z³ − Z, 2)
    let f1 = parse_poly("(y^2-x^2)^2*(y-x^2)*(y-x^3)", &rv).unwrap();
    let ed = pseudo_degeneracy_test(&f1, &rv).unwrap().unwrap();
    assert_eq!((ed.q, ed.m, ed.n), (1, 1, 2));
    let p = TowerPoly::new(
        vec![rv.zero(), rv.from_i64(-1), rv.zero(), rv.one()],
        &rv,
    );
    assert_eq!(ed.pol, p);
    // the four rejected cases
    for src in [
        "(y^2-x^2)^2*(y-x^2)",
        "(y^2-x^3)^2*(y-x^4)",
        "(y^2-x^3)^2*(y-x^4)^2",
        "(y^2-x^3)^2*(y^2-x^4)^2",
    ] {
        let f = parse_poly(src, &rv).unwrap();
        assert!(
            pseudo_degeneracy_test(&f, &rv).unwrap().is_none(),
            "{src} should not be pseudo-degenerate"
        );
    }
}

#[test]
fn criterion_05_balanced_example_battery() {
    let ring = TowerRing::new(BaseField::Rationals);
    let rv = ring.view();
    let verdict = |src: &str| {
        let f = parse_poly(src, &rv).unwrap();
        analyze(&f, BaseField::Rationals).unwrap().verdict
    };
    // item 1: reducible but balanced
    assert_eq!(verdict("(y-x)*(y+x^2)"), Verdict::PseudoIrreducible);
    // items 2, 3, 5: not balanced
    for src in [
        "(y^2-x^3)*(y^2+x^3)*(y^2+x^3+x^4)",
        "(y-x-x^2)*(y-x+x^2)*(y^2-x^3)",
        "(y^2-x^3)*(y^3-x^2)",
    ] {
        assert!(
            matches!(verdict(src), Verdict::NotPseudoIrreducible { .. }),
            "{src} should be rejected"
        );
    }
    // item 4: four smooth branches, Γᵢ = (1, 1, 2), v_F = 16
    let f = parse_poly("(y^2-x^2)^2-2*x^4*y^2-2*x^6+x^8", &rv).unwrap();
    let a = analyze(&f, BaseField::Rationals).unwrap();
    assert_eq!(a.verdict, Verdict::PseudoIrreducible);
    let inv = invariants(&a.data, a.d).unwrap();
    assert_eq!(inv.intersections, vec![1, 1, 2]);
    assert_eq!(inv.disc_valuation, 16);
    let factors: Vec<YPoly> = ["y+x+x^2", "y+x-x^2", "y-x+x^2", "y-x-x^2"]
        .iter()
        .map(|s| parse_poly(s, &rv).unwrap())
        .collect();
    let mut total = 0usize;
    for i in 0..4 {
        let mut gamma = Vec::new();
        for j in 0..4 {
            if i != j {
                gamma.push(
                    oracle::intersection_multiplicity(&factors[i], &factors[j], &rv)
                        .unwrap(),
                );
            }
        }
        gamma.sort_unstable();
        assert_eq!(gamma, vec![1, 1, 2]);
        total += gamma.iter().sum::<usize>();
        // each factor is smooth: its own discriminant valuation is 0
        assert_eq!(oracle::disc_valuation(&factors[i], &rv).unwrap(), 0);
    }
    // discriminant formula: v_F = Σᵢ v_{Fᵢ} + Σ_{i≠j} (Fᵢ, Fⱼ)₀ = 0 + 16
    assert_eq!(total, 16);
    assert_eq!(oracle::disc_valuation(&f, &rv).unwrap(), 16);
}

/// Parameters of a balanced branch family: f branches x = Tᵉ,
/// y = cᵢT^{ae} + T^b with gcd(e, b) = 1, b > ae and distinct cᵢ.
#[derive(Clone, Copy, Debug)]
struct Family {
    e: usize,
    a: usize,
    b: usize,
    f: usize,
}

impl Family {
    /// v_F = f·((f−1)·a·e² + (e−1)·b) for this family.
    fn vf(&self) -> usize {
        self.f * ((self.f - 1) * self.a * self.e * self.e + (self.e - 1) * self.b)
    }
}

const FAMILIES: &[Family] = &[
    Family { e: 1, a: 1, b: 2, f: 2 },
    Family { e: 1, a: 1, b: 3, f: 3 },
    Family { e: 1, a: 2, b: 3, f: 3 },
    Family { e: 1, a: 3, b: 4, f: 4 },
    Family { e: 2, a: 1, b: 3, f: 2 },
    Family { e: 2, a: 1, b: 3, f: 3 },
    Family { e: 2, a: 2, b: 5, f: 2 },
    Family { e: 2, a: 3, b: 7, f: 3 },
    Family { e: 2, a: 5, b: 11, f: 4 },
    Family { e: 3, a: 1, b: 4, f: 2 },
    Family { e: 3, a: 1, b: 5, f: 3 },
    Family { e: 4, a: 1, b: 5, f: 2 },
    Family { e: 4, a: 1, b: 7, f: 3 },
];

const FAMILY_PRIME: u64 = 100003;

fn distinct_coeffs(rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    let mut cs = Vec::new();
    while cs.len() < n {
        let c = rng.gen_range(1..1000i64);
        if !cs.contains(&c) {
            cs.push(c);
        }
    }
    cs
}

fn family_branches(fam: Family, cs: &[i64], rv: &RingView<'_>) -> Vec<Branch> {
    cs.iter()
        .map(|&c| {
            let mut coeffs = vec![rv.zero(); fam.b + 1];
            coeffs[fam.a * fam.e] = rv.from_i64(c);
            coeffs[fam.b] = rv.one();
            Branch::new(fam.e, XPoly::new(coeffs, Prec::Exact, rv), rv).unwrap()
        })
        .collect()
}

fn product(polys: &[YPoly], rv: &RingView<'_>) -> YPoly {
    let mut acc = YPoly::new(vec![XPoly::one(rv)]);
    for p in polys {
        acc = acc.mul(p, rv);
    }
    acc
}

#[test]
fn criterion_06_randomized_balanced_products_match_the_oracle_discriminant() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let base = BaseField::Prime(FAMILY_PRIME);
    let ring = TowerRing::new(base);
    let rv = ring.view();
    let mut count = 0usize;
    for round in 0..2 {
        for &fam in FAMILIES {
            assert!(fam.e * fam.f <= 24 && fam.vf() <= 400);
            let cs = distinct_coeffs(&mut rng, fam.f);
            let branches = family_branches(fam, &cs, &rv);
            let factors: Vec<YPoly> =
                branches.iter().map(|b| b.to_poly(&rv)).collect();
            let f = product(&factors, &rv);
            let a = analyze(&f, base).unwrap();
            assert_eq!(
                a.verdict,
                Verdict::PseudoIrreducible,
                "round {round}, family {fam:?}"
            );
            let inv = invariants(&a.data, a.d).unwrap();
            assert_eq!(
                inv.disc_valuation,
                oracle::disc_valuation(&f, &rv).unwrap(),
                "v_F mismatch for {fam:?}"
            );
            for fi in &factors {
                assert_eq!(
                    inv.branch_disc_valuation,
                    oracle::disc_valuation(fi, &rv).unwrap(),
                    "per-branch v_F mismatch for {fam:?}"
                );
            }
            count += 1;
        }
    }
    assert!(count >= 25, "only {count} instances");
    assert!(
        start.elapsed().as_secs_f64() < 60.0,
        "took {:?}",
        start.elapsed()
    );
}

/// The balanced test applied literally: all branch characteristic-exponent
/// lists equal and all pairwise intersection multisets equal.
fn oracle_balanced(branches: &[Branch], rv: &RingView<'_>) -> bool {
    let factors: Vec<YPoly> = branches.iter().map(|b| b.to_poly(rv)).collect();
    let cs: Vec<Vec<usize>> =
        branches.iter().map(|b| b.char_exponents(rv)).collect();
    if cs.iter().any(|c| c != &cs[0]) {
        return false;
    }
    let mut gammas = Vec::new();
    for i in 0..factors.len() {
        let mut g = Vec::new();
        for j in 0..factors.len() {
            if i != j {
                g.push(
                    oracle::intersection_multiplicity(&factors[i], &factors[j], rv)
                        .unwrap(),
                );
            }
        }
        g.sort_unstable();
        gammas.push(g);
    }
    gammas.iter().all(|g| g == &gammas[0])
}

#[test]
fn criterion_07_verdict_agrees_with_the_literal_balanced_test() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let base = BaseField::Prime(FAMILY_PRIME);
    let ring = TowerRing::new(base);
    let rv = ring.view();
    let mut balanced_count = 0usize;
    let mut unbalanced_count = 0usize;
    for round in 0..2 {
        for &fam in FAMILIES {
            let cs = distinct_coeffs(&mut rng, fam.f);
            // balanced instance
            let branches = family_branches(fam, &cs, &rv);
            check_agreement(&branches, base, &rv, &format!("balanced {fam:?} r{round}"));
            balanced_count += 1;
            // unbalanced perturbation
            let mut bad = branches.clone();
            let last = bad.len() - 1;
            if fam.e > 1 {
                // raise the last branch's second exponent: C differs
                let mut coeffs = vec![rv.zero(); fam.b + fam.e + 1];
                coeffs[fam.a * fam.e] = rv.from_i64(cs[last]);
                coeffs[fam.b + fam.e] = rv.one();
                bad[last] =
                    Branch::new(fam.e, XPoly::new(coeffs, Prec::Exact, &rv), &rv)
                        .unwrap();
            } else {
                // reuse c₁ with a doubled top coefficient: Γ multisets differ
                // (needs f ≥ 3; extend two-branch families with a third branch)
                if bad.len() < 3 {
                    let extra = family_branches(
                        fam,
                        &[*cs.last().unwrap() + 1000],
                        &rv,
                    );
                    bad.push(extra.into_iter().next().unwrap());
                }
                let last = bad.len() - 1;
                let mut coeffs = vec![rv.zero(); fam.b + 1];
                coeffs[fam.a * fam.e] = rv.from_i64(cs[0]);
                coeffs[fam.b] = rv.from_i64(2);
                bad[last] =
                    Branch::new(fam.e, XPoly::new(coeffs, Prec::Exact, &rv), &rv)
                        .unwrap();
            }
            check_agreement(&bad, base, &rv, &format!("unbalanced {fam:?} r{round}"));
            assert!(
                !oracle_balanced(&bad, &rv),
                "perturbation failed to unbalance {fam:?}"
            );
            unbalanced_count += 1;
        }
    }
    assert!(balanced_count >= 25 && unbalanced_count >= 25);
}

fn check_agreement(
    branches: &[Branch],
    base: BaseField,
    rv: &RingView<'_>,
    label: &str,
) {
    let factors: Vec<YPoly> = branches.iter().map(|b| b.to_poly(rv)).collect();
    let f = product(&factors, rv);
    let expected = oracle_balanced(branches, rv);
    let a = analyze(&f, base).unwrap();
    let got = a.verdict == Verdict::PseudoIrreducible;
    assert_eq!(got, expected, "verdict disagreement on {label}");
}

/// Direct-transform boundaries, raising the precision until the edge is
/// certain.
fn transforms(f: &YPoly, a: &Analysis, base: BaseField, rho0: usize) -> Vec<YPoly> {
    let mut rho = rho0.max(1);
    loop {
        match oracle::transform_boundaries(f, &a.data, base, rho) {
            Ok(b) => return b,
            Err(equising::Error::PrecisionTooLow) => rho *= 2,
            Err(e) => panic!("transform failed: {e}"),
        }
    }
}

#[test]
fn criterion_08_transform_boundaries_match_every_stage() {
    for src in [EX1, EX2, EX3] {
        let (ring, f) = parse_q(src);
        let a = analyze(&f, BaseField::Rationals).unwrap();
        let rho0 = oracle::disc_valuation(&f, &ring.view()).unwrap() + 1;
        let bounds = transforms(&f, &a, BaseField::Rationals, rho0);
        assert_eq!(bounds.len(), a.stages.len());
        let mut r = TowerRing::new(BaseField::Rationals);
        for (k, b) in bounds.iter().enumerate() {
            {
                let rv = r.view();
                assert!(
                    b.eq_poly(&a.stages[k].boundary, &rv),
                    "stage {k} boundary mismatch on {src}"
                );
            }
            if k < a.data.len() {
                r = r.extend(a.data[k].pol.clone()).unwrap();
            }
        }
    }
}

#[test]
fn criterion_09_property_battery_on_executed_instances() {
    // golden examples over ℚ plus one branch family per e over 𝔽p
    let mut instances: Vec<(BaseField, YPoly)> = Vec::new();
    for src in [EX1, EX3, "(y^2-x^2)^2-2*x^4*y^2-2*x^6+x^8"] {
        let (_r, f) = parse_q(src);
        instances.push((BaseField::Rationals, f));
    }
    let base = BaseField::Prime(FAMILY_PRIME);
    let ring = TowerRing::new(base);
    let rv = ring.view();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for &fam in &[FAMILIES[1], FAMILIES[5], FAMILIES[10], FAMILIES[12]] {
        let cs = distinct_coeffs(&mut rng, fam.f);
        let branches = family_branches(fam, &cs, &rv);
        let factors: Vec<YPoly> = branches.iter().map(|b| b.to_poly(&rv)).collect();
        instances.push((base, product(&factors, &rv)));
    }
    for (base, f) in &instances {
        check_properties(f, *base);
    }
}

fn check_properties(f: &YPoly, base: BaseField) {
    let ring0 = TowerRing::new(base);
    let rv0 = ring0.view();
    let d = f.degree().unwrap();
    let a = analyze(f, base).unwrap();
    assert_eq!(a.verdict, Verdict::PseudoIrreducible);
    // approximate-root degree bounds and Ψ-adic reconstruction at each stage
    let mut psis = Vec::new();
    let mut n = d;
    let mut ring = TowerRing::new(base);
    let mut vl = VL::initial(&rv0);
    for ed in &a.data {
        let psi = approximate_root(f, n, &rv0).unwrap();
        assert_eq!(psi.degree(), Some(d / n));
        let diff = f.sub(&psi.pow(n, &rv0), &rv0);
        assert!(diff.degree().map(|dd| dd < d - d / n).unwrap_or(true));
        psis.push(psi);
        let terms = psi_expand(f, &psis, &rv0).unwrap();
        assert!(reconstruct(&terms, &psis, &rv0).eq_poly(f, &rv0));
        // exponent bounds: b_j < q_{j+1}·ℓ_{j+1} for expanded stages, b_k ≤ n
        for (b, _) in &terms {
            for (j, edj) in a.data.iter().take(psis.len() - 1).enumerate() {
                assert!(b[j + 1] < edj.q * edj.ell);
            }
            assert!(*b.last().unwrap() <= n);
        }
        // w_n = 0: some term with b_k = n attains the minimal weight
        let vf = terms.iter().map(|(b, _)| dot(b, &vl.v)).min().unwrap();
        let wn = terms
            .iter()
            .filter(|(b, _)| *b.last().unwrap() == n)
            .map(|(b, _)| dot(b, &vl.v))
            .min()
            .unwrap();
        assert_eq!(wn, vf);
        // λ_top stays a unit along the tower
        let next = ring.extend(ed.pol.clone()).unwrap();
        vl = vl.update(ed, &next.view()).unwrap();
        assert!(next.view().is_unit(vl.lambda.last().unwrap()));
        ring = next;
        n = ed.n;
    }
    // ê_k = gcd(B₀, …, B_k); |Γ| = f − 1; d = e·f
    let inv = invariants(&a.data, d).unwrap();
    let (b, _m) = b_and_m(&a.data, inv.e);
    let mut e_hat = vec![inv.e];
    for ed in &a.data {
        e_hat.push(e_hat.last().unwrap() / ed.q);
    }
    for k in 0..b.len() {
        assert_eq!(e_hat[k], gcd_expected(&b[..=k]), "gcd chain at {k}");
    }
    assert_eq!(inv.intersections.len() + 1, inv.f);
    assert_eq!(d, inv.e * inv.f);
}

fn dot(b: &[usize], v: &[usize]) -> usize {
    b.iter().zip(v).map(|(x, y)| x * y).sum()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn gcd_expected(bs: &[usize]) -> usize {
    bs.iter().copied().fold(0, gcd)
}

#[test]
fn criterion_10_runtime_grows_subquadratically_in_the_discriminant() {
    // Fₙ = ∏_{i=1}^{3} ((y − cᵢx)² − x^{2r+1}) has v_F = 6r + 27; the four
    // instances hit v_F ≈ 50, 100, 200, 400. Informational sanity proxy for
    // the quasi-linear complexity claim, measured as min-of-3 runs.
    let base = BaseField::Prime(FAMILY_PRIME);
    let ring = TowerRing::new(base);
    let rv = ring.view();
    let mut points = Vec::new();
    for &r in &[4usize, 12, 29, 62] {
        let fam = Family { e: 2, a: 1, b: 2 * r + 1, f: 3 };
        let branches = family_branches(fam, &[1, 2, 3], &rv);
        let factors: Vec<YPoly> = branches.iter().map(|b| b.to_poly(&rv)).collect();
        let f = product(&factors, &rv);
        let vf = 6 * r + 27;
        let mut best = f64::INFINITY;
        for _ in 0..3 {
            let t = Instant::now();
            let a = analyze(&f, base).unwrap();
            best = best.min(t.elapsed().as_secs_f64());
            let inv = invariants(&a.data, a.d).unwrap();
            assert_eq!(inv.disc_valuation, vf);
        }
        points.push((vf as f64, best));
    }
    // least-squares slope in log-log coordinates
    let logs: Vec<(f64, f64)> = points
        .iter()
        .map(|(v, t)| (v.ln(), t.max(1e-6).ln()))
        .collect();
    let n = logs.len() as f64;
    let sx: f64 = logs.iter().map(|(x, _)| x).sum();
    let sy: f64 = logs.iter().map(|(_, y)| y).sum();
    let sxx: f64 = logs.iter().map(|(x, _)| x * x).sum();
    let sxy: f64 = logs.iter().map(|(x, y)| x * y).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    eprintln!("runtime points (v_F, seconds): {points:?}; log-log slope {slope:.3}");
    assert!(slope < 2.0, "log-log slope {slope:.3} is not subquadratic");
}
