//! Partitions, symmetric-group characters and symmetric functions in the `p`, `h`, `e`, `s` bases.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff_ring::{fmt_rational, rat, Coeff, CoeffError, Rational};
use crate::linalg::{self, Matrix};

/// Largest `n` accepted by [`char_table`] unless a larger bound is passed explicitly.
pub const DEFAULT_CHAR_BOUND: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("degree {n} exceeds the character table bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("cannot parse partition: {0}")]
    Parse(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicity of the part `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// Union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Remove one copy of the part `k`, if present.
    pub fn remove_part(&self, k: u32) -> Option<Partition> {
        let i = self.0.iter().position(|&p| p == k)?;
        let mut parts = self.0.clone();
        parts.remove(i);
        Some(Partition(parts))
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str("]")
    }
}

impl core::str::FromStr for Partition {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Self, SymError> {
        let bad = || SymError::Parse(s.to_string());
        let t = s.trim();
        let inner = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let v: u32 = piece.trim().parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(bad());
            }
            parts.push(v);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad());
        }
        Ok(Partition(parts))
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// All partitions of `n`, in reverse lexicographic order (`[n]` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, by increasing size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `z_lambda = prod_k k^{m_k} m_k!`.
pub fn z_of(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut k_seen: Vec<u32> = lambda.0.clone();
    k_seen.dedup();
    for k in k_seen {
        let m = lambda.multiplicity(k);
        z *= BigInt::from(k).pow(m as u32) * factorial(m);
    }
    z
}

/// Number of permutations of cycle type `lambda`.
pub fn class_size(lambda: &Partition) -> BigInt {
    factorial(lambda.size()) / z_of(lambda)
}

/// Character table of `S_n`: `values[i][j] = chi_{parts[i]}(g_{parts[j]})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharTable {
    pub parts: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn index(&self, lambda: &Partition) -> Option<usize> {
        self.parts.iter().position(|p| p == lambda)
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.values[self.index(lambda)?][self.index(mu)?])
    }
}

pub fn char_table(n: usize) -> Result<CharTable, SymError> {
    char_table_bounded(n, DEFAULT_CHAR_BOUND)
}

pub fn char_table_bounded(n: usize, bound: usize) -> Result<CharTable, SymError> {
    if n > bound {
        return Err(SymError::BoundExceeded { n, bound });
    }
    let parts = partitions_of(n);
    let mut memo = BTreeMap::new();
    let values = parts
        .iter()
        .map(|l| parts.iter().map(|m| mn_character(l, m.parts(), &mut memo)).collect())
        .collect();
    Ok(CharTable { parts, values })
}

/// Murnaghan–Nakayama on beta-sets, memoized on `(shape, remaining cycle type)`.
fn mn_character(lambda: &Partition, mu: &[u32], memo: &mut BTreeMap<(Partition, Vec<u32>), i64>) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0] as i64;
    let len = lambda.length() as i64;
    let beta: Vec<i64> = lambda.0.iter().enumerate().map(|(i, &p)| p as i64 + (len - 1 - i as i64)).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        let target = b - r;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let l2 = nb.len() as i64;
        let shape = Partition::new(nb.iter().enumerate().map(|(j, &x)| (x - (l2 - 1 - j as i64)) as u32).collect());
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_character(&shape, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Basis tag of a [`SymElement`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymBasis {
    P,
    H,
    E,
    S,
}

impl SymBasis {
    pub fn letter(self) -> char {
        match self {
            SymBasis::P => 'p',
            SymBasis::H => 'h',
            SymBasis::E => 'e',
            SymBasis::S => 's',
        }
    }
}

/// Symmetric function as a finite combination of basis elements indexed by partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymElement {
    basis: SymBasis,
    coeffs: BTreeMap<Partition, Coeff>,
}

impl SymElement {
    pub fn zero(basis: SymBasis) -> Self {
        SymElement { basis, coeffs: BTreeMap::new() }
    }

    pub fn unit(basis: SymBasis) -> Self {
        SymElement::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: SymBasis, lambda: Partition) -> Self {
        let mut e = SymElement::zero(basis);
        e.add_term(lambda, Coeff::one());
        e
    }

    pub fn p(parts: &[u32]) -> Self {
        SymElement::basis_element(SymBasis::P, Partition::from(parts))
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Coeff)> {
        self.coeffs.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Coeff {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&lambda) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.coeffs.remove(&lambda);
                }
            }
            None => {
                self.coeffs.insert(lambda, c);
            }
        }
    }

    /// Sum of two elements in the same basis. Panics on basis mismatch.
    pub fn add(&self, other: &SymElement) -> SymElement {
        assert_eq!(self.basis, other.basis, "basis mismatch in SymElement::add");
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> SymElement {
        let mut out = SymElement::zero(self.basis);
        for (l, v) in &self.coeffs {
            out.add_term(l.clone(), v * c);
        }
        out
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            write_term(f, i == 0, c, &format!("{}{}", self.basis.letter(), l))?;
        }
        Ok(())
    }
}

/// Write `c*name` as one summand; an empty `name` stands for the unit.
pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Coeff, name: &str) -> fmt::Result {
    match c.as_scalar() {
        Some(r) => {
            let neg = r < Rational::zero();
            let abs = if neg { -r } else { r };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if name.is_empty() {
                f.write_str(&fmt_rational(&abs))
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", fmt_rational(&abs))?;
                }
                f.write_str(name)
            }
        }
        None => {
            if !first {
                f.write_str(" + ")?;
            }
            if name.is_empty() {
                write!(f, "({})", c)
            } else {
                write!(f, "({})*{}", c, name)
            }
        }
    }
}

/// Rational expansion of one basis element in the `p` basis.
fn to_p_row(basis: SymBasis, lambda: &Partition, bound: usize) -> Result<BTreeMap<Partition, Rational>, SymError> {
    let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
    match basis {
        SymBasis::P => {
            acc.insert(lambda.clone(), Rational::one());
        }
        SymBasis::H | SymBasis::E => {
            acc.insert(Partition::empty(), Rational::one());
            for &part in lambda.parts() {
                let factor = complete_or_elementary_in_p(part as usize, basis == SymBasis::E);
                let mut next = BTreeMap::new();
                for (a, ca) in &acc {
                    for (b, cb) in &factor {
                        *next.entry(a.union(b)).or_insert_with(Rational::zero) += ca * cb;
                    }
                }
                acc = next;
            }
        }
        SymBasis::S => {
            let n = lambda.size();
            let table = char_table_bounded(n, bound)?;
            let i = table.index(lambda).expect("partition of n");
            for (j, mu) in table.parts.iter().enumerate() {
                let v = table.values[i][j];
                if v != 0 {
                    acc.insert(mu.clone(), Rational::new(BigInt::from(v), z_of(mu)));
                }
            }
        }
    }
    acc.retain(|_, v| !v.is_zero());
    Ok(acc)
}

/// `h_n` (or `e_n`) as `sum_mu (sign) p_mu / z_mu`.
pub fn complete_or_elementary_in_p(n: usize, elementary: bool) -> BTreeMap<Partition, Rational> {
    partitions_of(n)
        .into_iter()
        .map(|mu| {
            let sign = if elementary && (n - mu.length()) % 2 == 1 { -1 } else { 1 };
            let z = z_of(&mu);
            (mu, Rational::new(BigInt::from(sign), z))
        })
        .collect()
}

/// Matrix `M[i][j]` = coefficient of `p_{parts[j]}` in `basis_{parts[i]}`, for partitions of `n`.
fn transition_to_p(basis: SymBasis, n: usize, bound: usize) -> Result<(Vec<Partition>, Matrix), SymError> {
    let parts = partitions_of(n);
    let mut m = Vec::with_capacity(parts.len());
    for l in &parts {
        let row = to_p_row(basis, l, bound)?;
        m.push(parts.iter().map(|mu| row.get(mu).cloned().unwrap_or_else(Rational::zero)).collect());
    }
    Ok((parts, m))
}

pub fn convert(x: &SymElement, target: SymBasis) -> Result<SymElement, SymError> {
    convert_bounded(x, target, DEFAULT_CHAR_BOUND)
}

pub fn convert_bounded(x: &SymElement, target: SymBasis, bound: usize) -> Result<SymElement, SymError> {
    if x.basis == target {
        return Ok(x.clone());
    }
    // into p
    let mut in_p = SymElement::zero(SymBasis::P);
    for (l, c) in &x.coeffs {
        for (mu, r) in to_p_row(x.basis, l, bound)? {
            in_p.add_term(mu, c.scale(&r));
        }
    }
    if target == SymBasis::P {
        return Ok(in_p);
    }
    // out of p, degree by degree
    let mut by_degree: BTreeMap<usize, Vec<(Partition, Coeff)>> = BTreeMap::new();
    for (l, c) in in_p.coeffs {
        by_degree.entry(l.size()).or_default().push((l, c));
    }
    let mut out = SymElement::zero(target);
    for (n, terms) in by_degree {
        if target == SymBasis::S {
            let table = char_table_bounded(n, bound)?;
            for (mu, c) in terms {
                let j = table.index(&mu).expect("partition of n");
                for (i, lambda) in table.parts.iter().enumerate() {
                    let v = table.values[i][j];
                    if v != 0 {
                        out.add_term(lambda.clone(), c.scale(&rat(v)));
                    }
                }
            }
        } else {
            let (parts, m) = transition_to_p(target, n, bound)?;
            let inv = linalg::inverse(&m).expect("h and e transition matrices are invertible");
            for (mu, c) in terms {
                let k = parts.iter().position(|p| p == &mu).expect("partition of n");
                for (j, lambda) in parts.iter().enumerate() {
                    if !inv[k][j].is_zero() {
                        out.add_term(lambda.clone(), c.scale(&inv[k][j]));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Product in the ring of symmetric functions, returned in the basis of `x`.
pub fn sym_mul(x: &SymElement, y: &SymElement) -> Result<SymElement, SymError> {
    let xp = convert(x, SymBasis::P)?;
    let yp = convert(y, SymBasis::P)?;
    let mut prod = SymElement::zero(SymBasis::P);
    for (a, ca) in &xp.coeffs {
        for (b, cb) in &yp.coeffs {
            prod.add_term(a.union(b), ca * cb);
        }
    }
    convert(&prod, x.basis)
}

/// `n * d/dp_n` applied to an element in the `p` basis, with the coefficient `scale` per removed part.
pub fn p_derivative(f: &SymElement, n: u32, scale: &Coeff) -> SymElement {
    assert_eq!(f.basis, SymBasis::P, "p_derivative expects the p basis");
    let mut out = SymElement::zero(SymBasis::P);
    for (l, c) in &f.coeffs {
        let m = l.multiplicity(n);
        if m == 0 {
            continue;
        }
        let rest = l.remove_part(n).expect("part present");
        let factor = Coeff::int((m as i64) * n as i64) * scale.clone();
        out.add_term(rest, c * &factor);
    }
    out
}
