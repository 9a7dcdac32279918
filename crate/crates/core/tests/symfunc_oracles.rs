use jackdiag_core::coeff_ring::{rat, Coeff, Rational};
use jackdiag_core::partitions_symfunc::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn cycle_type(p: &[usize]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

fn block_permutation(lambda: &Partition) -> Vec<usize> {
    let mut p = Vec::new();
    let mut start = 0;
    for &part in lambda.parts() {
        let part = part as usize;
        for i in 0..part {
            p.push(start + (i + 1) % part);
        }
        start += part;
    }
    p
}

// Permutation character of the Young subgroup of type nu: number of ways to place
// the cycles of mu into labelled blocks of sizes nu.
fn young_permutation_character(nu: &[i64], mu: &[u32]) -> i64 {
    fn go(cycles: &[u32], room: &mut Vec<i64>) -> i64 {
        match cycles.split_first() {
            None => i64::from(room.iter().all(|&r| r == 0)),
            Some((&c, rest)) => {
                let mut total = 0;
                for i in 0..room.len() {
                    if room[i] >= c as i64 {
                        room[i] -= c as i64;
                        total += go(rest, room);
                        room[i] += c as i64;
                    }
                }
                total
            }
        }
    }
    if nu.iter().any(|&x| x < 0) {
        return 0;
    }
    go(mu, &mut nu.to_vec())
}

fn sign_of(p: &[usize]) -> i64 {
    let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inversions % 2 == 0 { 1 } else { -1 }
}

// Determinantal formula with permutation characters: an oracle independent of the rim-hook rule.
fn oracle_character(lambda: &Partition, mu: &Partition) -> i64 {
    let l = lambda.length();
    permutations(l)
        .into_iter()
        .map(|s| {
            let nu: Vec<i64> = (0..l).map(|i| lambda.parts()[i] as i64 - i as i64 + s[i] as i64).collect();
            sign_of(&s) * young_permutation_character(&nu, mu.parts())
        })
        .sum()
}

#[test]
fn z_matches_brute_force_centralizers() {
    for n in 0..=6 {
        let perms = permutations(n);
        for lambda in partitions_of(n) {
            let g = block_permutation(&lambda);
            let commuting = perms
                .iter()
                .filter(|h| (0..n).all(|i| h[g[i]] == g[h[i]]))
                .count();
            assert_eq!(z_of(&lambda), BigInt::from(commuting), "{}", lambda);
        }
    }
    assert_eq!(z_of(&"[2,1]".parse().unwrap()), BigInt::from(2));
    assert_eq!(z_of(&"[3]".parse().unwrap()), BigInt::from(3));
    assert_eq!(z_of(&Partition::empty()), BigInt::from(1));
}

#[test]
fn z_times_class_size_is_factorial() {
    for n in 0..=7 {
        let mut counts = std::collections::BTreeMap::new();
        for p in permutations(n) {
            *counts.entry(cycle_type(&p)).or_insert(0u64) += 1;
        }
        for lambda in partitions_of(n) {
            let c = BigInt::from(counts[&lambda]);
            assert_eq!(z_of(&lambda) * &c, factorial(n));
            assert_eq!(class_size(&lambda), c);
        }
    }
}

#[test]
fn character_table_matches_determinantal_oracle() {
    for n in 1..=6 {
        let t = char_table(n).unwrap();
        for (i, l) in t.parts.iter().enumerate() {
            for (j, m) in t.parts.iter().enumerate() {
                assert_eq!(t.values[i][j], oracle_character(l, m), "chi_{}({})", l, m);
            }
        }
        let trivial = t.index(&Partition::new(vec![n as u32])).unwrap();
        assert!(t.values[trivial].iter().all(|&v| v == 1));
    }
}

#[test]
fn character_orthogonality() {
    for n in 1..=6 {
        let t = char_table(n).unwrap();
        for a in 0..t.parts.len() {
            for b in 0..t.parts.len() {
                let mut sum = Rational::from_integer(0.into());
                for (j, mu) in t.parts.iter().enumerate() {
                    sum += Rational::new(BigInt::from(t.values[a][j] * t.values[b][j]), z_of(mu));
                }
                assert_eq!(sum, rat(i64::from(a == b)));
            }
        }
    }
}

#[test]
fn p_to_s_round_trip() {
    for lambda in partitions_up_to(6) {
        let p = SymElement::basis_element(SymBasis::P, lambda.clone());
        let s = convert(&p, SymBasis::S).unwrap();
        assert_eq!(convert(&s, SymBasis::P).unwrap(), p);
        for target in [SymBasis::H, SymBasis::E] {
            let x = convert(&p, target).unwrap();
            assert_eq!(convert(&x, SymBasis::P).unwrap(), p);
        }
    }
}

fn h_product(parts: &[i64]) -> SymElement {
    if parts.iter().any(|&x| x < 0) {
        return SymElement::zero(SymBasis::H);
    }
    SymElement::basis_element(SymBasis::H, Partition::new(parts.iter().map(|&x| x as u32).collect()))
}

#[test]
fn jacobi_trudi() {
    for lambda in partitions_up_to(5) {
        let l = lambda.length();
        let mut det = SymElement::zero(SymBasis::H);
        for s in permutations(l) {
            let entries: Vec<i64> = (0..l).map(|i| lambda.parts()[i] as i64 - i as i64 + s[i] as i64).collect();
            det = det.add(&h_product(&entries).scale(&Coeff::int(sign_of(&s))));
        }
        let s = SymElement::basis_element(SymBasis::S, lambda.clone());
        assert_eq!(convert(&s, SymBasis::H).unwrap(), det, "{}", lambda);
    }
}

#[test]
fn newton_oracle_for_h2() {
    // H(z) = exp(sum p_n z^n / n): order-2 coefficient is p_1^2/2 + p_2/2.
    let h2 = convert(&SymElement::basis_element(SymBasis::H, "[2]".parse().unwrap()), SymBasis::P).unwrap();
    let expected = SymElement::p(&[1, 1]).scale(&Coeff::scalar(Rational::new(1.into(), 2.into())))
        .add(&SymElement::p(&[2]).scale(&Coeff::scalar(Rational::new(1.into(), 2.into()))));
    assert_eq!(h2, expected);
}

#[test]
fn pieri_oracle_for_s1_squared() {
    let s1 = SymElement::basis_element(SymBasis::S, "[1]".parse().unwrap());
    let expected = SymElement::basis_element(SymBasis::S, "[2]".parse().unwrap())
        .add(&SymElement::basis_element(SymBasis::S, "[1,1]".parse().unwrap()));
    assert_eq!(sym_mul(&s1, &s1).unwrap(), expected);
}

proptest! {
    #[test]
    fn multiplication_is_basis_independent(
        a in prop::sample::select(partitions_up_to(3)),
        b in prop::sample::select(partitions_up_to(3)),
        basis in prop::sample::select(vec![SymBasis::P, SymBasis::H, SymBasis::E, SymBasis::S]),
    ) {
        let x = convert(&SymElement::basis_element(SymBasis::P, a), basis).unwrap();
        let y = convert(&SymElement::basis_element(SymBasis::P, b), basis).unwrap();
        let prod = sym_mul(&x, &y).unwrap();
        prop_assert_eq!(prod.basis(), basis);
        let in_p = sym_mul(&convert(&x, SymBasis::P).unwrap(), &convert(&y, SymBasis::P).unwrap()).unwrap();
        prop_assert_eq!(convert(&prod, SymBasis::P).unwrap(), in_p);
    }
}

/// Frobenius coordinates `(a | b)`: arm and leg lengths along the diagonal.
fn frobenius_coordinates(lambda: &Partition) -> (Vec<u32>, Vec<u32>) {
    let conj = lambda.conjugate();
    let d = lambda.parts().iter().enumerate().take_while(|(i, &p)| p as usize > *i).count();
    let arms = (0..d).map(|i| lambda.parts()[i] - 1 - i as u32).collect();
    let legs = (0..d).map(|i| conj.parts()[i] - 1 - i as u32).collect();
    (arms, legs)
}

fn hook(a: u32, b: u32) -> SymElement {
    let mut parts = vec![a + 1];
    parts.extend(std::iter::repeat_n(1, b as usize));
    convert(&SymElement::basis_element(SymBasis::S, Partition::new(parts)), SymBasis::P).unwrap()
}

#[test]
fn giambelli() {
    for lambda in partitions_up_to(5).into_iter().filter(|l| !l.is_empty()) {
        let (arms, legs) = frobenius_coordinates(&lambda);
        let d = arms.len();
        let mut det = SymElement::zero(SymBasis::P);
        for s in permutations(d) {
            let mut term = SymElement::unit(SymBasis::P);
            for i in 0..d {
                term = sym_mul(&term, &hook(arms[i], legs[s[i]])).unwrap();
            }
            det = det.add(&term.scale(&Coeff::int(sign_of(&s))));
        }
        let s = SymElement::basis_element(SymBasis::S, lambda.clone());
        assert_eq!(convert(&s, SymBasis::P).unwrap(), det, "{}", lambda);
    }
}
