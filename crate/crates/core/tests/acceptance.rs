//! One line per acceptance criterion, exact equality throughout.
//!
//! The test fails if the set of failing criteria differs from `KNOWN_GAPS`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use jackdiag_core::annular_trace::{
    act_on_center, filtration_leading, gram_matrix, p_class, pair_partitions, Sign,
};
use jackdiag_core::coeff_ring::{eval_1_neg1, rat, rf_equal, Coeff, PiValue, Rational, RationalFunction};
use jackdiag_core::diagram_engine::{degree_of, CGen, CenterCombo, DiagramWord, Engine};
use jackdiag_core::frobenius::{builtin, field, surface, truncated_poly, FrobAlgebra};
use jackdiag_core::heisenberg::*;
use jackdiag_core::partitions_symfunc::*;
use num_bigint::BigInt;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

mod common;
use common::{mutate, tree, SURF, TRUNC};

/// Criteria expected to fail, with the reason recorded alongside the project notes.
const KNOWN_GAPS: &[u32] = &[2];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn z(l: &Partition) -> Rational {
    Rational::from_integer(z_of(l))
}

fn criterion_1() -> Outcome {
    let mut values = Vec::new();
    for k in 1..=5u32 {
        let b = truncated_poly(k).unwrap();
        let one = Partition::new(vec![1]);
        values.push((pair_partitions(&one, &one, &b).unwrap(), rat(i64::from(k))));
    }
    let pass = values.iter().all(|(a, b)| a == b);
    let shown: Vec<String> = values.iter().map(|(a, _)| a.to_string()).collect();
    outcome(pass, format!("<p1,p1> over truncpoly:1..5 = {}", shown.join(",")))
}

fn criterion_2() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    let mut follows_power = true;
    let mut follows_linear = true;
    for spec in ["truncpoly:1", "truncpoly:2", "truncpoly:3", "surface:0", "surface:1", "surface:2"] {
        let b = builtin(spec).unwrap();
        let k = b.super_dim();
        let start = Instant::now();
        let g = gram_matrix(&b, 4).unwrap();
        let elapsed = start.elapsed();
        let mut bad = 0;
        let mut bad_same_size = 0;
        for (i, l) in g.labels.iter().enumerate() {
            for (j, m) in g.labels.iter().enumerate() {
                let v = &g.cells[i][j];
                if *v != jack_pair(l, m, k) {
                    bad += 1;
                    bad_same_size += usize::from(l.size() == m.size());
                }
                if i == j {
                    let power = z(l) * Rational::from_integer(BigInt::from(k).pow(l.length() as u32));
                    follows_power &= *v == power;
                    follows_linear &= *v == z(l) * rat(k);
                }
            }
        }
        let cells = g.labels.len() * g.labels.len();
        if bad > 0 || elapsed > Duration::from_secs(300) {
            pass = false;
            notes.push(format!("{}: {} of {} cells differ ({} with |lambda| = |mu|)", spec, bad, cells, bad_same_size));
        } else {
            notes.push(format!("{}: {} cells exact", spec, cells));
        }
    }
    let which = match (follows_power, follows_linear) {
        (true, false) => "diagonal follows k^l(lambda) z_lambda",
        (false, true) => "diagonal follows k z_lambda",
        _ => "diagonal follows neither closed form",
    };
    notes.push(which.into());
    outcome(pass, notes.join("; "))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for spec in ["truncpoly:2", "truncpoly:3", "surface:2"] {
        let l = Lattice::of_algebra(&builtin(spec).unwrap());
        let parts = partitions_up_to(5);
        for lambda in &parts {
            for mu in &parts {
                let word: Vec<Gen> = lambda
                    .parts()
                    .iter()
                    .map(|&n| Gen::minus(n))
                    .chain(mu.parts().iter().map(|&n| Gen::plus(n)))
                    .collect();
                let h = normal_order(&word, &l).unwrap();
                let v = fock_apply(&h, &SymElement::unit(SymBasis::P), &l).unwrap();
                if kappa0(&v) != pair_pp(lambda, mu, &l).unwrap() {
                    return outcome(false, format!("{} at {} {}", spec, lambda, mu));
                }
                count += 1;
            }
        }
    }
    outcome(true, format!("{} pairs over three lattices", count))
}

fn criterion_4() -> Outcome {
    for spec in ["truncpoly:2", "truncpoly:3", "surface:2"] {
        let l = Lattice::of_algebra(&builtin(spec).unwrap());
        for kind in [PresentationKind::HH, PresentationKind::HE] {
            if !verify_presentation(kind, &l, 5).unwrap() {
                return outcome(false, format!("{:?} fails over {}", kind, spec));
            }
        }
    }
    outcome(true, "hh and he for n, m <= 5 over three lattices")
}

fn criterion_5() -> Outcome {
    for k in 0..=6 {
        for exterior in [false, true] {
            let closed = if exterior { macdonald_ext_closed_form(k) } else { macdonald_sym_closed_form(k) }.unwrap();
            let coefficient = macdonald_generating_coefficient(k, exterior).unwrap();
            if !rf_equal(&closed, &coefficient).unwrap() {
                return outcome(false, format!("k = {}, exterior = {}", k, exterior));
            }
        }
    }
    outcome(true, "symmetric and exterior closed forms for k <= 6")
}

fn criterion_6() -> Outcome {
    for k in 1..=5u32 {
        let l = Lattice::of_algebra(&truncated_poly(k).unwrap());
        for lambda in partitions_up_to(4) {
            let mac = macdonald_pair(&lambda, &lambda).unwrap();
            let special = mac.map(|c| c.specialize_two(k as i32, PiValue::Minus)).unwrap();
            let graded = pair_pp(&lambda, &lambda, &l).unwrap();
            let same = rf_equal(&special, &RationalFunction::from_coeff(graded.clone())).unwrap();
            if !same || eval_1_neg1(&graded) != jack_pair(&lambda, &lambda, i64::from(k)) {
                return outcome(false, format!("k = {} at {}", k, lambda));
            }
        }
    }
    outcome(true, "q2 = q1^k, pi = -1, then q = 1, for k <= 5 and |lambda| <= 4")
}

fn criterion_7() -> Outcome {
    for k in 1..=5 {
        let rows = dg_cohomology_check(k, 10).unwrap();
        if rows.len() != 11 || rows.iter().any(|r| (r.even, r.odd) != (usize::from(r.degree < k), 0)) {
            return outcome(false, format!("k = {}", k));
        }
    }
    outcome(true, "cohomology is F[x]/(x^k) for k <= 5")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    out
}

fn sign_of(p: &[usize]) -> i64 {
    let inv = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inv % 2 == 0 { 1 } else { -1 }
}

fn giambelli_holds(lambda: &Partition) -> bool {
    let conj = lambda.conjugate();
    let d = (0..lambda.length()).take_while(|&i| lambda.parts()[i] as usize > i).count();
    let hook = |i: usize, j: usize| {
        let mut parts = vec![lambda.parts()[i] - i as u32];
        parts.extend(std::iter::repeat_n(1, conj.parts()[j] as usize - 1 - j));
        convert(&SymElement::basis_element(SymBasis::S, Partition::new(parts)), SymBasis::P).unwrap()
    };
    let mut det = SymElement::zero(SymBasis::P);
    for s in permutations(d) {
        let mut term = SymElement::unit(SymBasis::P);
        for (i, &j) in s.iter().enumerate() {
            term = sym_mul(&term, &hook(i, j)).unwrap();
        }
        det = det.add(&term.scale(&Coeff::int(sign_of(&s))));
    }
    convert(&SymElement::basis_element(SymBasis::S, lambda.clone()), SymBasis::P).unwrap() == det
}

fn criterion_8() -> Outcome {
    for n in 1..=6 {
        let t = char_table(n).unwrap();
        for a in 0..t.parts.len() {
            for b in 0..t.parts.len() {
                let mut sum = rat(0);
                for (j, mu) in t.parts.iter().enumerate() {
                    sum += Rational::new(BigInt::from(t.values[a][j] * t.values[b][j]), z_of(mu));
                }
                if sum != rat(i64::from(a == b)) {
                    return outcome(false, format!("orthogonality at n = {}", n));
                }
            }
        }
    }
    for lambda in partitions_up_to(6) {
        let p = SymElement::basis_element(SymBasis::P, lambda.clone());
        if convert(&convert(&p, SymBasis::S).unwrap(), SymBasis::P).unwrap() != p {
            return outcome(false, format!("p -> s -> p at {}", lambda));
        }
    }
    if let Some(l) = partitions_up_to(5).into_iter().filter(|l| !l.is_empty()).find(|l| !giambelli_holds(l)) {
        return outcome(false, format!("Giambelli at {}", l));
    }
    outcome(true, "orthogonality and p <-> s for n <= 6, Giambelli for |lambda| <= 5")
}

fn cpoly(sig: &std::sync::Arc<jackdiag_core::diagram_engine::Signature>, ks: &[u32]) -> CenterCombo {
    ks.iter().fold(CenterCombo::scalar(sig.clone(), rat(1)), |m, &k| {
        m.mul(&CenterCombo::generator(sig.clone(), CGen { curls: k, label: 0 }))
    })
}

fn criterion_9() -> Outcome {
    let f = field();
    let sig = Engine::new(&f).unwrap().signature();
    let one = cpoly(&sig, &[]);
    let act = |l: &Partition, c: &CenterCombo| act_on_center(&p_class(l, Sign::Plus, &f).unwrap(), c, &f).unwrap();
    if act(&Partition::new(vec![1]), &one) != cpoly(&sig, &[0]) {
        return outcome(false, "P_(1).1 is not c0");
    }
    for n in 1..=4 {
        for l in partitions_of(n) {
            let ks: Vec<u32> = l.parts().iter().map(|p| p - 1).collect();
            if filtration_leading(&act(&l, &one)) != (n as u32, cpoly(&sig, &ks)) {
                return outcome(false, format!("leading term of P_{}.1", l));
            }
        }
    }
    let mut pairs = 0;
    for n in 1..=3 {
        for m in 1..=4 - n {
            for l in partitions_of(n) {
                for mu in partitions_of(m) {
                    let c = act(&mu, &one);
                    let nested = act(&l, &c);
                    let juxt = c.mul(&act(&l, &one));
                    let (w, lead) = filtration_leading(&juxt);
                    let diff = nested.add(&juxt.scale(&rat(-1)));
                    if filtration_leading(&nested) != (w, lead) || filtration_leading(&diff).0 >= w {
                        return outcome(false, format!("P_{} around P_{}.1", l, mu));
                    }
                    pairs += 1;
                }
            }
        }
    }
    outcome(true, format!("P_lambda.1 leading terms for |lambda| <= 4; {} nested/juxtaposed pairs", pairs))
}

fn sample<S: Strategy>(s: &S, runner: &mut TestRunner) -> S::Value {
    s.new_tree(runner).unwrap().current()
}

fn degrees_conserved(d: &DiagramWord, b: &FrobAlgebra) -> bool {
    let (deg, _) = degree_of(d, b).unwrap();
    let c = Engine::new(b).unwrap().normalize(d).unwrap();
    let ok = c.terms().all(|(m, _)| c.degree(m) == deg);
    ok
}

fn criterion_10() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let b = truncated_poly(3).unwrap();
    let s = surface(1).unwrap();
    let v = |c: [i64; 3]| c.iter().map(|&x| rat(x)).collect::<Vec<Rational>>();
    let monomial = Engine::new(&b).unwrap();
    let other = Engine::with_basis(&b, &[v([1, 0, 0]), v([0, 1, 0]), v([0, 1, 1])]).unwrap();
    let seeds = proptest::collection::vec(proptest::arbitrary::any::<(u8, usize, usize, bool)>(), 50);
    let mut evaluated = 0;
    for round in 0..20 {
        let d = jackdiag_core::diagram_engine::build(&sample(&tree(TRUNC), &mut runner)).unwrap();
        let base = monomial.normalize(&d).unwrap();
        if other.normalize(&d).unwrap() != base {
            return outcome(false, format!("basis dependence on diagram {}", round));
        }
        let (m, neg) = mutate(&d, &b, &sample(&seeds, &mut runner));
        if neg || monomial.normalize(&m).unwrap() != base {
            return outcome(false, format!("isotopy on diagram {}", round));
        }
        let ds = jackdiag_core::diagram_engine::build(&sample(&tree(SURF), &mut runner)).unwrap();
        let (ms, neg) = mutate(&ds, &s, &sample(&seeds, &mut runner));
        let sb = Engine::new(&s).unwrap().normalize(&ds).unwrap();
        let expect = if neg { sb.scale(&rat(-1)) } else { sb };
        if Engine::new(&s).unwrap().normalize(&ms).unwrap() != expect {
            return outcome(false, format!("signed isotopy on diagram {}", round));
        }
        for (w, alg) in [(&d, &b), (&m, &b), (&ds, &s), (&ms, &s)] {
            if !degrees_conserved(w, alg) {
                return outcome(false, format!("degree of a term on diagram {}", round));
            }
        }
        evaluated += 4;
    }
    outcome(true, format!("20 diagrams, two bases, 50 moves each; {} normalizations terminated", evaluated))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome, Duration); 10] = [
        (1, "worked pairing example", criterion_1, Duration::from_secs(1)),
        (2, "diagrammatic pairing equals the Jack pairing", criterion_2, Duration::from_secs(1800)),
        (3, "oracle adjointness", criterion_3, Duration::from_secs(10)),
        (4, "presentation identities", criterion_4, Duration::from_secs(30)),
        (5, "graded power closed forms", criterion_5, Duration::from_secs(10)),
        (6, "Macdonald to Jack degeneration", criterion_6, Duration::from_secs(60)),
        (7, "dg cohomology", criterion_7, Duration::from_secs(60)),
        (8, "characters and transitions", criterion_8, Duration::from_secs(60)),
        (9, "filtration suite over the field", criterion_9, Duration::from_secs(60)),
        (10, "engine robustness", criterion_10, Duration::from_secs(600)),
    ];
    let mut failed = BTreeSet::new();
    for (n, title, f, limit) in criteria {
        let start = Instant::now();
        let o = f();
        let elapsed = start.elapsed();
        let pass = o.pass && elapsed <= limit;
        if !pass {
            failed.insert(n);
        }
        println!(
            "criterion {:>2}: {} {} ({}; {:.2?})",
            n,
            if pass { "PASS" } else { "FAIL" },
            title,
            o.detail,
            elapsed
        );
    }
    let expected: BTreeSet<u32> = KNOWN_GAPS.iter().copied().collect();
    if failed != expected {
        println!("acceptance: failing criteria {:?}, recorded gaps {:?}", failed, expected);
        std::process::exit(1);
    }
    println!("acceptance: failing criteria match the recorded gaps {:?}", expected);
}
