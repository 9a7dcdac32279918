use jackdiag_core::annular_trace::*;
use jackdiag_core::coeff_ring::{rat, Coeff, Rational};
use jackdiag_core::diagram_engine::{CGen, CenterCombo, Engine};
use jackdiag_core::frobenius::{builtin, field, surface, truncated_poly, FrobAlgebra, WreathElement};
use jackdiag_core::partitions_symfunc::{convert, partitions_of, Partition, SymBasis, SymElement};
use proptest::prelude::*;

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec())
}

/// `prod i^{m_i} m_i!`, computed directly.
fn z(l: &Partition) -> Rational {
    let mut out = rat(1);
    let parts = l.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
            out *= rat(parts[i] as i64) * rat((j - i) as i64);
        }
        i = j;
    }
    out
}

fn pair(l: &[u32], m: &[u32], b: &FrobAlgebra) -> Rational {
    pair_partitions(&part(l), &part(m), b).unwrap()
}

#[test]
fn p_class_shapes() {
    let b = truncated_poly(2).unwrap();
    let one = p_class(&part(&[1]), Sign::Plus, &b).unwrap();
    assert_eq!(one.element, WreathElement::monomial(vec![0], vec![0], rat(1)));
    let x = p_class(&part(&[3, 2]), Sign::Plus, &b).unwrap();
    assert_eq!(x.element, WreathElement::monomial(vec![0; 5], vec![1, 2, 0, 4, 3], rat(1)));
    let e = p_class(&Partition::empty(), Sign::Plus, &b).unwrap();
    assert_eq!(e.strands(), 0);
}

#[test]
fn rotation_of_cycles() {
    let b = surface(1).unwrap();
    for n in 0..=5u32 {
        let l = if n == 0 { Partition::empty() } else { part(&[n]) };
        let x = p_class(&l, Sign::Plus, &b).unwrap();
        assert_eq!(rotate(&x, &b), p_class(&l, Sign::Minus, &b).unwrap());
    }
}

#[test]
fn rotation_moves_dots_across() {
    let b = surface(1).unwrap();
    let (a1, a2) = (b.index_of("a1").unwrap(), b.index_of("a2").unwrap());
    let x = AnnularClass::new(Sign::Plus, WreathElement::monomial(vec![a1, a2], vec![0, 1], rat(1)));
    let r = rotate(&x, &b);
    assert_eq!(r.element, WreathElement::monomial(vec![a2, a1], vec![0, 1], rat(1)));
    // crossed strands carry the dots past each other
    let x = AnnularClass::new(Sign::Plus, WreathElement::monomial(vec![a1, a2], vec![1, 0], rat(1)));
    assert_eq!(rotate(&x, &b).element, WreathElement::monomial(vec![a1, a2], vec![1, 0], rat(-1)));
}

#[test]
fn worked_pairing() {
    for k in 1..=5u32 {
        assert_eq!(pair(&[1], &[1], &truncated_poly(k).unwrap()), rat(i64::from(k)));
    }
    assert_eq!(pair(&[2], &[1, 1], &truncated_poly(2).unwrap()), rat(0));
}

#[test]
fn surface_diagonal() {
    let b = surface(2).unwrap();
    for n in 1..=3 {
        for l in partitions_of(n) {
            let mut expect = z(&l);
            for _ in 0..l.length() {
                expect *= rat(-2);
            }
            assert_eq!(pair_partitions(&l, &l, &b).unwrap(), expect, "{}", l);
        }
    }
}

#[test]
fn genus_one_pairing_vanishes() {
    let b = surface(1).unwrap();
    let g = gram_matrix(&b, 3).unwrap();
    assert!(g.cells.iter().flatten().all(|c| *c == rat(0)));
}

#[test]
fn gram_block() {
    let g = gram_matrix(&surface(2).unwrap(), 2).unwrap();
    assert_eq!(g.labels, vec![part(&[1]), part(&[2]), part(&[1, 1])]);
    assert_eq!(g.cells[1][1], rat(-4));
    assert_eq!(g.cells[2][2], rat(8));
    assert_eq!(g.cells[1][2], rat(0));
    assert_eq!(g.cells[0][1], rat(0));
}

#[test]
fn transcript_records_rules() {
    let b = truncated_poly(2).unwrap();
    let x = p_class(&part(&[1]), Sign::Plus, &b).unwrap();
    let r = pair_with(&x, &x, &b, true).unwrap();
    assert_eq!(r.value, rat(2));
    let log = r.transcript.unwrap();
    assert!(log.len() > 1);
    assert!(diagrammatic_pair(&x, &x, &b).unwrap().transcript.is_none());
}

#[test]
fn phi_examples() {
    let b = truncated_poly(2).unwrap();
    for n in 1..=4 {
        for l in partitions_of(n) {
            let x = p_class(&l, Sign::Plus, &b).unwrap();
            assert_eq!(phi_b(&x, &b).unwrap(), SymElement::p(l.parts()));
        }
        for (anti, shape) in [(false, vec![n as u32]), (true, vec![1; n])] {
            let e = young_class(n, anti, Sign::Plus, &b).unwrap();
            let s = convert(&phi_b(&e, &b).unwrap(), SymBasis::S).unwrap();
            assert_eq!(s, SymElement::basis_element(SymBasis::S, Partition::new(shape)));
        }
    }
    let unit = p_class(&Partition::empty(), Sign::Plus, &b).unwrap();
    assert_eq!(phi_b(&unit, &b).unwrap(), SymElement::unit(SymBasis::P));
    let dotted = AnnularClass::new(Sign::Plus, WreathElement::monomial(vec![1], vec![0], rat(1)));
    assert!(matches!(phi_b(&dotted, &b), Err(AnnularError::UnsupportedDots(_))));
}

fn cpoly(terms: &[(i64, &[u32])]) -> CenterCombo {
    let sig = Engine::new(&field()).unwrap().signature();
    let mut out = CenterCombo::zero(sig.clone());
    for (c, ks) in terms {
        let mut m = CenterCombo::scalar(sig.clone(), rat(*c));
        for &k in *ks {
            m = m.mul(&CenterCombo::generator(sig.clone(), CGen { curls: k, label: 0 }));
        }
        out = out.add(&m);
    }
    out
}

#[test]
fn center_action() {
    let f = field();
    let one = cpoly(&[(1, &[])]);
    let p1 = p_class(&part(&[1]), Sign::Plus, &f).unwrap();
    assert_eq!(act_on_center(&p1, &one, &f).unwrap(), cpoly(&[(1, &[0])]));
    let p2 = act_on_center(&p_class(&part(&[2]), Sign::Plus, &f).unwrap(), &one, &f).unwrap();
    assert_eq!(filtration_leading(&p2), (2, cpoly(&[(1, &[1])])));
    let c0 = cpoly(&[(1, &[0])]);
    let nested = act_on_center(&p1, &c0, &f).unwrap();
    let juxt = c0.mul(&act_on_center(&p1, &one, &f).unwrap());
    assert_eq!(filtration_leading(&nested), filtration_leading(&juxt));
    let diff = nested.add(&juxt.scale(&rat(-1)));
    assert!(filtration_leading(&diff).0 < 2);
    let b = truncated_poly(2).unwrap();
    let sig = Engine::new(&b).unwrap().signature();
    assert_eq!(act_on_center(&p_class(&part(&[1]), Sign::Plus, &b).unwrap(), &CenterCombo::scalar(sig, rat(1)), &b),
        Err(AnnularError::NotField));
}

#[test]
fn filtration_examples() {
    assert_eq!(filtration_leading(&cpoly(&[(1, &[1]), (3, &[0])])), (2, cpoly(&[(1, &[1])])));
    assert_eq!(filtration_leading(&cpoly(&[(7, &[])])), (0, cpoly(&[(7, &[])])));
}

#[test]
fn associated_graded_of_cycle_closures() {
    let f = field();
    let one = cpoly(&[(1, &[])]);
    for n in 1..=4 {
        for l in partitions_of(n) {
            let c = act_on_center(&p_class(&l, Sign::Plus, &f).unwrap(), &one, &f).unwrap();
            let ks: Vec<u32> = l.parts().iter().map(|p| p - 1).collect();
            assert_eq!(filtration_leading(&c), (n as u32, cpoly(&[(1, &ks)])), "{}", l);
        }
    }
    // nesting a circle versus placing it alongside differs in lower weight
    for n in 1..=3u32 {
        let x = p_class(&part(&[n]), Sign::Plus, &f).unwrap();
        let c1 = cpoly(&[(1, &[1])]);
        let nested = act_on_center(&x, &c1, &f).unwrap();
        let juxt = c1.mul(&act_on_center(&x, &one, &f).unwrap());
        assert_eq!(filtration_leading(&nested), filtration_leading(&juxt));
        assert!(filtration_leading(&nested.add(&juxt.scale(&rat(-1)))).0 < n + 2);
    }
}

fn class(labels: usize, max_n: usize) -> impl Strategy<Value = AnnularClass> {
    (1..=max_n).prop_flat_map(move |n| {
        let term = (prop::collection::vec(0..labels, n), prop::sample::select(all_perms(n)), -2i64..=2);
        prop::collection::vec(term, 1..=2).prop_map(move |ts| {
            let mut w = WreathElement::zero(n);
            for (d, p, c) in ts {
                w.add_term(d, p, rat(c));
            }
            AnnularClass::new(Sign::Plus, w)
        })
    })
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::sample::select(all_perms(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rotation_is_an_involution(x in class(4, 4)) {
        let b = surface(1).unwrap();
        prop_assert_eq!(rotate(&rotate(&x, &b), &b), x);
    }

    #[test]
    fn pairing_is_conjugation_invariant(
        (x, u) in class(4, 3).prop_flat_map(|x| { let n = x.strands(); (Just(x), perm(n)) }),
        (y, v) in class(4, 3).prop_flat_map(|y| { let n = y.strands(); (Just(y), perm(n)) }),
    ) {
        let b = surface(1).unwrap();
        let base = diagrammatic_pair(&x, &y, &b).unwrap().value;
        prop_assert_eq!(diagrammatic_pair(&x.conjugate(&u, &b), &y, &b).unwrap().value, base.clone());
        prop_assert_eq!(diagrammatic_pair(&x, &y.conjugate(&v, &b), &b).unwrap().value, base);
    }

    #[test]
    fn pairing_is_conjugation_invariant_truncated(
        (x, u) in class(3, 3).prop_flat_map(|x| { let n = x.strands(); (Just(x), perm(n)) }),
        y in class(3, 3),
    ) {
        let b = truncated_poly(3).unwrap();
        let base = diagrammatic_pair(&x, &y, &b).unwrap().value;
        prop_assert_eq!(diagrammatic_pair(&x.conjugate(&u, &b), &y, &b).unwrap().value, base.clone());
        prop_assert_eq!(diagrammatic_pair(&y, &x.conjugate(&u, &b), &b).unwrap().value,
            diagrammatic_pair(&y, &x, &b).unwrap().value);
    }

    #[test]
    fn pairing_is_bilinear(x in class(2, 3), z in class(2, 3), a in -3i64..=3, c in -3i64..=3) {
        let b = truncated_poly(2).unwrap();
        let n = x.strands();
        let y = AnnularClass::new(Sign::Plus, WreathElement::unit(n, 0));
        let sum = AnnularClass::new(Sign::Plus, x.element.scale(&rat(a)).add(&y.element.scale(&rat(c))).unwrap());
        let lhs = diagrammatic_pair(&sum, &z, &b).unwrap().value;
        let rhs = rat(a) * diagrammatic_pair(&x, &z, &b).unwrap().value + rat(c) * diagrammatic_pair(&y, &z, &b).unwrap().value;
        prop_assert_eq!(lhs, rhs);
        let lhs = diagrammatic_pair(&z, &sum, &b).unwrap().value;
        let rhs = rat(a) * diagrammatic_pair(&z, &x, &b).unwrap().value + rat(c) * diagrammatic_pair(&z, &y, &b).unwrap().value;
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_is_conjugation_invariant((x, u) in class(1, 4).prop_flat_map(|x| { let n = x.strands(); (Just(x), perm(n)) })) {
        let b = builtin("truncpoly:2").unwrap();
        prop_assert_eq!(phi_b(&x.conjugate(&u, &b), &b).unwrap(), phi_b(&x, &b).unwrap());
    }

    #[test]
    fn phi_is_multiplicative(x in class(1, 2), y in class(1, 2)) {
        let b = truncated_poly(2).unwrap();
        prop_assert_eq!(phi_b(&x.juxtapose(&y).unwrap(), &b).unwrap(), phi_b_product(&x, &y, &b).unwrap());
    }
}

#[test]
fn phi_scalar_coefficients() {
    let b = truncated_poly(2).unwrap();
    let x = AnnularClass::new(Sign::Plus, WreathElement::monomial(vec![0, 0], vec![1, 0], rat(3)));
    let mut expect = SymElement::zero(SymBasis::P);
    expect.add_term(part(&[2]), Coeff::scalar(rat(3)));
    assert_eq!(phi_b(&x, &b).unwrap(), expect);
}
