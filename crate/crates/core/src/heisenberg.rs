//! Rank-one lattice Heisenberg algebras, their Fock space, and the Macdonald and Jack pairings.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coeff_ring::{rat, theta, Coeff, CoeffError, Mode, Mono, Rational, RationalFunction};
use crate::frobenius::FrobAlgebra;
use crate::linalg;
use crate::partitions_symfunc::{
    complete_or_elementary_in_p, p_derivative, write_term, z_of, Partition, SymBasis, SymElement,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeisError {
    #[error("not a graded dimension: {0}")]
    BadDimension(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Rank-one lattice with `<v, v> = d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    self_pairing: Coeff,
}

impl Lattice {
    pub fn new(self_pairing: Coeff) -> Result<Self, HeisError> {
        check_dimension(&self_pairing)?;
        Ok(Lattice { self_pairing })
    }

    /// `<v, v> = grdim B`.
    pub fn of_algebra(b: &FrobAlgebra) -> Self {
        Lattice { self_pairing: b.graded_dim() }
    }

    pub fn rank(&self) -> usize {
        1
    }

    pub fn self_pairing(&self) -> &Coeff {
        &self.self_pairing
    }
}

fn check_dimension(d: &Coeff) -> Result<(), HeisError> {
    for (_, c) in d.terms() {
        if !c.is_integer() || c.is_negative() {
            return Err(HeisError::BadDimension(format!("{}", d)));
        }
    }
    Ok(())
}

/// `<p_lambda^-, p_mu^+> = delta z_lambda prod theta_{lambda_k}(d)`.
pub fn pair_pp(lambda: &Partition, mu: &Partition, lattice: &Lattice) -> Result<Coeff, HeisError> {
    if lambda != mu {
        return Ok(Coeff::zero());
    }
    let mut out = Coeff::scalar(Rational::from_integer(z_of(lambda)));
    for &part in lambda.parts() {
        out = out.try_mul(&theta(part, &lattice.self_pairing)?)?;
    }
    Ok(out)
}

/// `delta z_lambda k^{l(lambda)}`.
pub fn jack_pair(lambda: &Partition, mu: &Partition, k: i64) -> Rational {
    if lambda != mu {
        return Rational::zero();
    }
    let mut out = Rational::from_integer(z_of(lambda));
    for _ in 0..lambda.length() {
        out *= rat(k);
    }
    out
}

/// Generator `p_n^+` or `p_n^-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub n: u32,
    pub plus: bool,
}

impl Gen {
    pub fn plus(n: u32) -> Self {
        Gen { n, plus: true }
    }

    pub fn minus(n: u32) -> Self {
        Gen { n, plus: false }
    }
}

/// Normal-ordered element `sum c p_{lambda}^- p_{mu}^+`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeisElement {
    terms: BTreeMap<(Partition, Partition), Coeff>,
}

impl HeisElement {
    pub fn zero() -> Self {
        HeisElement::default()
    }

    pub fn one() -> Self {
        HeisElement::term(Partition::empty(), Partition::empty(), Coeff::one())
    }

    pub fn term(minus: Partition, plus: Partition, c: Coeff) -> Self {
        let mut h = HeisElement::zero();
        h.add_term(minus, plus, c);
        h
    }

    /// Plus-part-only element from a symmetric function in the `p` basis.
    pub fn from_sym(f: &SymElement, plus: bool) -> Self {
        assert_eq!(f.basis(), SymBasis::P, "expected the p basis");
        let mut h = HeisElement::zero();
        for (l, c) in f.terms() {
            if plus {
                h.add_term(Partition::empty(), l.clone(), c.clone());
            } else {
                h.add_term(l.clone(), Partition::empty(), c.clone());
            }
        }
        h
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, minus: &Partition, plus: &Partition) -> Coeff {
        self.terms.get(&(minus.clone(), plus.clone())).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, minus: Partition, plus: Partition, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let key = (minus, plus);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &HeisElement) -> HeisElement {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> HeisElement {
        let mut out = HeisElement::zero();
        for ((a, b), v) in &self.terms {
            out.add_term(a.clone(), b.clone(), v * c);
        }
        out
    }

    /// Right multiplication by one generator, staying in normal form.
    pub fn mul_gen(&self, g: Gen, lattice: &Lattice) -> Result<HeisElement, HeisError> {
        let mut out = HeisElement::zero();
        if g.plus {
            for ((a, b), c) in &self.terms {
                out.add_term(a.clone(), b.union(&Partition::new(vec![g.n])), c.clone());
            }
            return Ok(out);
        }
        let comm = theta(g.n, &lattice.self_pairing)?.scale(&rat(i64::from(g.n)));
        for ((a, b), c) in &self.terms {
            out.add_term(a.union(&Partition::new(vec![g.n])), b.clone(), c.clone());
            let m = b.multiplicity(g.n);
            if m > 0 {
                let rest = b.remove_part(g.n).expect("part present");
                out.add_term(a.clone(), rest, c.try_mul(&comm)?.scale(&rat(m as i64)));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &HeisElement, lattice: &Lattice) -> Result<HeisElement, HeisError> {
        let mut out = HeisElement::zero();
        for ((a, b), c) in &other.terms {
            let mut acc = self.scale(c);
            for &n in a.parts() {
                acc = acc.mul_gen(Gen::minus(n), lattice)?;
            }
            for &n in b.parts() {
                acc = acc.mul_gen(Gen::plus(n), lattice)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

impl fmt::Display for HeisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            let mut name = String::new();
            if !a.is_empty() {
                name.push_str(&format!("p-{}", a));
            }
            if !b.is_empty() {
                if !name.is_empty() {
                    name.push(' ');
                }
                name.push_str(&format!("p+{}", b));
            }
            write_term(f, i == 0, c, &name)?;
        }
        Ok(())
    }
}

/// Normal form of a word of generators.
pub fn normal_order(word: &[Gen], lattice: &Lattice) -> Result<HeisElement, HeisError> {
    let mut acc = HeisElement::one();
    for &g in word {
        acc = acc.mul_gen(g, lattice)?;
    }
    Ok(acc)
}

/// Normal form by local rewriting of `p_n^+ p_m^-` pairs; `choose(k)` picks one of `k` redexes.
pub fn normal_order_by<F>(word: &[Gen], lattice: &Lattice, mut choose: F) -> Result<HeisElement, HeisError>
where
    F: FnMut(usize) -> usize,
{
    let mut pending: Vec<(Vec<Gen>, Coeff)> = vec![(word.to_vec(), Coeff::one())];
    let mut out = HeisElement::zero();
    while let Some((w, c)) = pending.pop() {
        let redexes: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i].plus && !w[i + 1].plus).collect();
        if redexes.is_empty() {
            let minus: Vec<u32> = w.iter().filter(|g| !g.plus).map(|g| g.n).collect();
            let plus: Vec<u32> = w.iter().filter(|g| g.plus).map(|g| g.n).collect();
            out.add_term(Partition::new(minus), Partition::new(plus), c);
            continue;
        }
        let i = redexes[choose(redexes.len()) % redexes.len()];
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        if w[i].n == w[i + 1].n {
            let n = w[i].n;
            let comm = theta(n, &lattice.self_pairing)?.scale(&rat(i64::from(n)));
            let mut shorter = w.clone();
            shorter.drain(i..i + 2);
            pending.push((shorter, c.try_mul(&comm)?));
        }
        pending.push((swapped, c));
    }
    Ok(out)
}

/// Action on the Fock space: `p_n^+` multiplies by `p_n`, `p_n^-` acts by `n theta_n(d) d/dp_n`.
pub fn fock_apply(h: &HeisElement, f: &SymElement, lattice: &Lattice) -> Result<SymElement, HeisError> {
    if f.basis() != SymBasis::P {
        return Err(HeisError::Invalid("Fock space vectors must be in the p basis".into()));
    }
    let mut out = SymElement::zero(SymBasis::P);
    for ((minus, plus), c) in h.terms() {
        let mut v = SymElement::zero(SymBasis::P);
        for (l, a) in f.terms() {
            v.add_term(l.union(plus), a.clone());
        }
        for &n in minus.parts() {
            v = p_derivative(&v, n, &theta(n, &lattice.self_pairing)?);
        }
        out = out.add(&v.scale(c));
    }
    Ok(out)
}

/// Degree-zero component.
pub fn kappa0(f: &SymElement) -> Coeff {
    f.coefficient(&Partition::empty())
}

/// Power series in `z` truncated after `z^order`.
type ZSeries = Vec<Coeff>;

fn series_mul(a: &ZSeries, b: &ZSeries) -> Result<ZSeries, CoeffError> {
    let order = a.len().min(b.len());
    let mut out = vec![Coeff::zero(); order];
    for i in 0..order {
        for j in 0..order - i {
            if !a[i].is_zero() && !b[j].is_zero() {
                out[i + j] = out[i + j].try_add(&a[i].try_mul(&b[j])?)?;
            }
        }
    }
    Ok(out)
}

fn binomial(n: i64, k: i64) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r = r * rat(n - i) / rat(i + 1);
    }
    r
}

/// `(1 - m z)^{-c}` if `inverse`, else `(1 + m z)^c`, truncated.
fn factor_series(m: &Coeff, c: i64, inverse: bool, len: usize) -> Result<ZSeries, CoeffError> {
    let mut out = Vec::with_capacity(len);
    for j in 0..len as i64 {
        let b = if inverse { binomial(c + j - 1, j) } else { binomial(c, j) };
        out.push(m.pow(j as u32)?.scale(&b));
    }
    Ok(out)
}

fn power_dims(v: &Coeff, k: usize, exterior: bool) -> Result<ZSeries, HeisError> {
    check_dimension(v)?;
    let mut acc: ZSeries = vec![Coeff::zero(); k + 1];
    acc[0] = Coeff::one();
    for (m, c) in v.terms() {
        let c = c.to_integer().to_i64().ok_or_else(|| HeisError::BadDimension(format!("{}", v)))?;
        let mono = Coeff::monomial(v.mode(), *m, rat(1));
        // odd monomials swap roles between the symmetric and exterior cases
        let inverse = m.pi == exterior;
        acc = series_mul(&acc, &factor_series(&mono, c, inverse, k + 1)?)?;
    }
    Ok(acc)
}

/// `grdim S^k(V)` from the generating product.
pub fn sym_power_dim(v: &Coeff, k: usize) -> Result<Coeff, HeisError> {
    Ok(power_dims(v, k, false)?.swap_remove(k))
}

/// `grdim Λ^k(V)` from the generating product.
pub fn ext_power_dim(v: &Coeff, k: usize) -> Result<Coeff, HeisError> {
    Ok(power_dims(v, k, true)?.swap_remove(k))
}

/// Which presentation to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationKind {
    /// `h_n^+ h_m^-`
    HH,
    /// `h_n^+ e_m^-`
    HE,
}

fn h_or_e(n: usize, elementary: bool, plus: bool) -> HeisElement {
    let mut h = HeisElement::zero();
    for (mu, r) in complete_or_elementary_in_p(n, elementary) {
        if plus {
            h.add_term(Partition::empty(), mu, Coeff::scalar(r));
        } else {
            h.add_term(mu, Partition::empty(), Coeff::scalar(r));
        }
    }
    h
}

/// Both sides of the commutation relation for one `(n, m)`.
pub fn presentation_sides(
    kind: PresentationKind,
    lattice: &Lattice,
    n: usize,
    m: usize,
) -> Result<(HeisElement, HeisElement), HeisError> {
    let elementary = kind == PresentationKind::HE;
    let lhs = h_or_e(n, false, true).mul(&h_or_e(m, elementary, false), lattice)?;
    let dims = power_dims(lattice.self_pairing(), n.min(m), elementary)?;
    let mut rhs = HeisElement::zero();
    for (l, dim) in dims.iter().enumerate() {
        let term = h_or_e(m - l, elementary, false).mul(&h_or_e(n - l, false, true), lattice)?;
        rhs = rhs.add(&term.scale(dim));
    }
    Ok((lhs, rhs))
}

pub fn verify_presentation_pair(kind: PresentationKind, lattice: &Lattice, n: usize, m: usize) -> Result<bool, HeisError> {
    let (lhs, rhs) = presentation_sides(kind, lattice, n, m)?;
    Ok(lhs == rhs)
}

/// Check the relation for all `n, m <= bound`.
pub fn verify_presentation(kind: PresentationKind, lattice: &Lattice, bound: usize) -> Result<bool, HeisError> {
    for n in 0..=bound {
        for m in 0..=bound {
            if !verify_presentation_pair(kind, lattice, n, m)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn q1(e: i32) -> Coeff {
    Coeff::q12_pow(e, 0)
}

fn pi_q2_q1(e: i32) -> Coeff {
    Coeff::monomial(Mode::Two, Mono { exp: [e, 1], pi: true }, rat(1))
}

fn q_factorial_denominator(k: usize) -> Result<Coeff, CoeffError> {
    let mut den = Coeff::one().into_two();
    for j in 1..=k as i32 {
        den = den.try_mul(&(Coeff::one().into_two() - q1(j)))?;
    }
    Ok(den)
}

/// `prod_{j<k} (1 + pi q2 q1^j) / prod_{j<=k} (1 - q1^j)`.
pub fn macdonald_sym_closed_form(k: usize) -> Result<RationalFunction, HeisError> {
    let mut num = Coeff::one().into_two();
    for j in 0..k as i32 {
        num = num.try_mul(&(Coeff::one().into_two() + pi_q2_q1(j)))?;
    }
    Ok(RationalFunction::new(num, q_factorial_denominator(k)?)?)
}

/// `prod_{j<k} (pi q2 + q1^j) / prod_{j<=k} (1 - q1^j)`.
pub fn macdonald_ext_closed_form(k: usize) -> Result<RationalFunction, HeisError> {
    let mut num = Coeff::one().into_two();
    for j in 0..k as i32 {
        num = num.try_mul(&(pi_q2_q1(0) + q1(j)))?;
    }
    Ok(RationalFunction::new(num, q_factorial_denominator(k)?)?)
}

/// Coefficient of `z^k` in `prod_{a>=0} f(q1^a z)` for `V = (1 + pi q2)/(1 - q1)`, from the
/// functional equation `G(z) = f(z) G(q1 z)`.
pub fn macdonald_generating_coefficient(k: usize, exterior: bool) -> Result<RationalFunction, HeisError> {
    let mut g = RationalFunction::from_coeff(Coeff::one().into_two());
    for j in 1..=k as i32 {
        // sym: (1 - q1^j) g_j = (1 + pi q2 q1^{j-1}) g_{j-1}
        // ext: (1 - q1^j) g_j = (pi q2 + q1^{j-1}) g_{j-1}
        let num = if exterior { pi_q2_q1(0) + q1(j - 1) } else { Coeff::one().into_two() + pi_q2_q1(j - 1) };
        let step = RationalFunction::new(num, Coeff::one().into_two() - q1(j))?;
        g = g.mul(&step)?;
    }
    Ok(g)
}

/// `q1`-adic expansion of the `z^k` coefficient up to `q1^order`, by direct multiplication of the
/// truncated product.
pub fn macdonald_generating_series(k: usize, exterior: bool, order: usize) -> Result<Coeff, HeisError> {
    let mut acc: ZSeries = vec![Coeff::zero().into_two(); k + 1];
    acc[0] = Coeff::one().into_two();
    for a in 0..=order as i32 {
        let (even, odd) = (q1(a), pi_q2_q1(a));
        acc = truncate_q1(series_mul(&acc, &factor_series(&even, 1, !exterior, k + 1)?)?, order);
        acc = truncate_q1(series_mul(&acc, &factor_series(&odd, 1, exterior, k + 1)?)?, order);
    }
    Ok(acc.swap_remove(k))
}

fn truncate_q1(s: ZSeries, order: usize) -> ZSeries {
    s.into_iter().map(|c| truncate_coeff(&c, order)).collect()
}

/// Drop monomials with `q1` exponent above `order`.
pub fn truncate_coeff(c: &Coeff, order: usize) -> Coeff {
    let mut out = Coeff::zero().into_two();
    for (m, v) in c.terms() {
        if m.exp[0] <= order as i32 {
            out += &Coeff::monomial(Mode::Two, *m, v.clone());
        }
    }
    out
}

/// `delta z_lambda prod (1 + pi q2^{lambda_i}) / (1 - q1^{lambda_i})`.
pub fn macdonald_pair(lambda: &Partition, mu: &Partition) -> Result<RationalFunction, HeisError> {
    if lambda != mu {
        return Ok(RationalFunction::from_coeff(Coeff::zero().into_two()));
    }
    let z = Rational::from_integer(z_of(lambda));
    let mut out = RationalFunction::from_coeff(Coeff::scalar(z).into_two());
    for &part in lambda.parts() {
        let e = part as i32;
        let num = Coeff::one().into_two() + Coeff::monomial(Mode::Two, Mono { exp: [0, e], pi: true }, rat(1));
        out = out.mul(&RationalFunction::new(num, Coeff::one().into_two() - q1(e))?)?;
    }
    Ok(out)
}

/// `(1 - q^{kn}) / (1 - q^n)` as a polynomial.
pub fn jack_limit_factor(k: u32, n: u32) -> Result<Coeff, HeisError> {
    if n == 0 {
        return Err(HeisError::Invalid("n must be positive".into()));
    }
    let kn = i32::try_from(k * n).map_err(|_| CoeffError::ExponentOverflow)?;
    let num = Coeff::one() - Coeff::q_pow(kn);
    let den = Coeff::one() - Coeff::q_pow(n as i32);
    num.div_exact(&den)?.ok_or_else(|| HeisError::Invalid(format!("1 - q^{} does not divide 1 - q^{}", n, kn)))
}

/// Cohomology dimensions in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DgRow {
    pub degree: usize,
    pub even: usize,
    pub odd: usize,
}

/// `H*(S(x, y), d_k)` with `|x| = 1`, `|y| = k`, `d_k(x^a y) = x^{a+k}`, in degrees `0..=bound`.
pub fn dg_cohomology_check(k: usize, bound: usize) -> Result<Vec<DgRow>, HeisError> {
    if k == 0 {
        return Err(HeisError::Invalid("k must be at least 1".into()));
    }
    if bound < k {
        return Err(HeisError::Invalid("degree bound must be at least k".into()));
    }
    // even part in degree t: x^t; odd part: x^{t-k} y
    let odd_dim = |t: usize| usize::from(t >= k);
    let boundary = |t: usize| -> linalg::Matrix {
        // matrix of d from odd degree t to even degree t, rows indexed by odd basis
        if t >= k {
            vec![vec![Rational::one()]]
        } else {
            Vec::new()
        }
    };
    let mut rows = Vec::new();
    for t in 0..=bound {
        let d = boundary(t);
        let r = if d.is_empty() { 0 } else { linalg::rank(&d) };
        // the differential is zero on the even part, so every even element is a cycle
        rows.push(DgRow { degree: t, even: 1 - r, odd: odd_dim(t) - r });
    }
    Ok(rows)
}

/// [`pair_pp`] specialized at `q = 1`, `pi = -1`.
pub fn jack_pair_via_lattice(lambda: &Partition, mu: &Partition, lattice: &Lattice) -> Result<Rational, HeisError> {
    Ok(crate::coeff_ring::eval_1_neg1(&pair_pp(lambda, mu, lattice)?))
}

/// `z_lambda` as a rational.
pub fn z_rational(lambda: &Partition) -> Rational {
    Rational::from_integer(z_of(lambda))
}
