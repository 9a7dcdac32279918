//! Annular classes as wreath elements, their pairing and their images in symmetric functions.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_traits::{One, Zero};

use crate::coeff_ring::{Coeff, Rational};
use crate::diagram_engine::{build, Block, CenterCombo, DiagramWord, Engine, EngineError, Event};
use crate::frobenius::{
    koszul_permutation_sign, perm_cycle_type, perm_identity, perm_inverse, FrobAlgebra, FrobError, Perm,
    WreathElement,
};
use crate::partitions_symfunc::{partitions_of, sym_mul, Partition, SymElement, SymError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnnularError {
    #[error("algebra has no basis vector equal to 1")]
    NoUnitBasisVector,
    #[error("expected a class on {0} strands")]
    WrongSign(&'static str),
    #[error("unsupported dot configuration: {0}")]
    UnsupportedDots(String),
    #[error("this operation needs the field algebra")]
    NotField,
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Frob(#[from] FrobError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

type Result<T> = core::result::Result<T, AnnularError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A class in the trace of the up (`Plus`) or down (`Minus`) strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnularClass {
    pub sign: Sign,
    pub element: WreathElement,
}

impl AnnularClass {
    pub fn new(sign: Sign, element: WreathElement) -> Self {
        AnnularClass { sign, element }
    }

    pub fn strands(&self) -> usize {
        self.element.strands()
    }

    /// Disjoint union: `self` on the left strands, `other` on the right.
    pub fn juxtapose(&self, other: &AnnularClass) -> Result<AnnularClass> {
        if self.sign != other.sign {
            return Err(AnnularError::WrongSign("matching"));
        }
        let n = self.strands();
        let mut out = WreathElement::zero(n + other.strands());
        for ((d1, s1), c1) in self.element.terms() {
            for ((d2, s2), c2) in other.element.terms() {
                let dots = d1.iter().chain(d2).copied().collect();
                let perm = s1.iter().copied().chain(s2.iter().map(|x| x + n)).collect();
                out.add_term(dots, perm, c1 * c2);
            }
        }
        Ok(AnnularClass::new(self.sign, out))
    }

    /// Conjugate every representative by `u`; the class does not change.
    pub fn conjugate(&self, u: &[usize], b: &FrobAlgebra) -> AnnularClass {
        let inv = perm_inverse(u);
        let mut out = WreathElement::zero(self.strands());
        for ((dots, sigma), c) in self.element.terms() {
            let perm: Perm = (0..u.len()).map(|i| u[sigma[inv[i]]]).collect();
            let odd: Vec<bool> = dots.iter().map(|&x| b.is_odd(x)).collect();
            let mut moved = vec![0; dots.len()];
            for (i, &d) in dots.iter().enumerate() {
                moved[u[i]] = d;
            }
            let c = if koszul_permutation_sign(&odd, u) { -c.clone() } else { c.clone() };
            out.add_term(moved, perm, c);
        }
        AnnularClass::new(self.sign, out)
    }

    pub fn render(&self, b: &FrobAlgebra) -> String {
        let s = match self.sign {
            Sign::Plus => '+',
            Sign::Minus => '-',
        };
        format!("[{}]^{}", self.element.render(b), s)
    }
}

/// Basis index of the unit.
pub fn unit_index(b: &FrobAlgebra) -> Result<usize> {
    let one = b.unit()?;
    (0..b.dim()).find(|&i| b.basis_elem(i) == one).ok_or(AnnularError::NoUnitBasisVector)
}

/// The permutation with cycles `(s, s+1, .., s+l-1)` on consecutive blocks.
pub fn block_cycles(lambda: &Partition) -> Perm {
    let mut perm = Vec::with_capacity(lambda.size());
    let mut start = 0;
    for &l in lambda.parts() {
        let l = l as usize;
        for i in 0..l {
            perm.push(start + (i + 1) % l);
        }
        start += l;
    }
    perm
}

/// Undotted class of cycle type `lambda`.
pub fn p_class(lambda: &Partition, sign: Sign, b: &FrobAlgebra) -> Result<AnnularClass> {
    let one = unit_index(b)?;
    let n = lambda.size();
    Ok(AnnularClass::new(sign, WreathElement::monomial(vec![one; n], block_cycles(lambda), Rational::one())))
}

/// `1/n! sum (+-1)^sigma sigma` with unit dots.
pub fn young_class(n: usize, antisymmetric: bool, sign: Sign, b: &FrobAlgebra) -> Result<AnnularClass> {
    let one = unit_index(b)?;
    let mut fact = Rational::one();
    for k in 1..=n {
        fact *= Rational::from_integer(k.into());
    }
    let mut out = WreathElement::zero(n);
    for perm in all_perms(n) {
        let odd = perm_cycle_type(&perm).iter().filter(|&&l| l % 2 == 0).count() % 2 == 1;
        let c = if antisymmetric && odd { -fact.recip() } else { fact.recip() };
        out.add_term(vec![one; n], perm, c);
    }
    Ok(AnnularClass::new(sign, out))
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = vec![perm_identity(n)];
    for k in 1..n {
        let mut next = Vec::new();
        for p in &out {
            for t in 0..=k {
                let mut q = p.clone();
                q.swap(t, k);
                next.push(q);
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Rotation by a half turn: `sigma -> w0 sigma^-1 w0`, dots carried along with their Koszul sign.
pub fn rotate(x: &AnnularClass, b: &FrobAlgebra) -> AnnularClass {
    let n = x.strands();
    let mut out = WreathElement::zero(n);
    for ((dots, sigma), c) in x.element.terms() {
        let inv = perm_inverse(sigma);
        let perm: Perm = (0..n).map(|j| n - 1 - inv[n - 1 - j]).collect();
        // after the turn the dots read d_{n-1}, .., d_0 from the top; d_i lands on top position n-1-inv(i)
        let mut moved = vec![0; n];
        let mut odd = Vec::with_capacity(n);
        let mut target = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let q = n - 1 - inv[i];
            moved[q] = dots[i];
            odd.push(b.is_odd(dots[i]));
            target.push(q);
        }
        let c = if koszul_permutation_sign(&odd, &target) { -c.clone() } else { c.clone() };
        out.add_term(moved, perm, c);
    }
    AnnularClass::new(x.sign.flip(), out)
}

/// Adjacent crossings taking bottom position `i` to top position `sigma(i)`, then the dots, leftmost highest.
fn word_events(dots: &[usize], sigma: &[usize], unit: Option<usize>, b: &FrobAlgebra) -> Vec<Event> {
    let n = sigma.len();
    let mut cur: Vec<usize> = (0..n).collect();
    let mut events = Vec::new();
    loop {
        let mut swapped = false;
        for p in 0..n.saturating_sub(1) {
            if sigma[cur[p]] > sigma[cur[p + 1]] {
                cur.swap(p, p + 1);
                events.push(Event::Cross(p));
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    for p in (0..n).rev() {
        if Some(dots[p]) != unit {
            events.push(Event::Dot(p, b.label(dots[p]).to_string()));
        }
    }
    events
}

fn block(sign: Sign, n: usize, events: Vec<Event>, inner: Vec<Block>) -> Block {
    match sign {
        Sign::Plus => Block::Up { n, events, inner },
        Sign::Minus => Block::Down { n, events, inner },
    }
}

/// Closed diagrams, with coefficients, whose sum is `x^rot` juxtaposed left of `y` and closed to the right.
pub fn pairing_diagrams(x: &AnnularClass, y: &AnnularClass, b: &FrobAlgebra) -> Result<Vec<(Rational, DiagramWord)>> {
    if x.sign != Sign::Plus || y.sign != Sign::Plus {
        return Err(AnnularError::WrongSign("up"));
    }
    let unit = unit_index(b).ok();
    let xr = rotate(x, b);
    let mut out = Vec::new();
    for ((dx, sx), cx) in xr.element.terms() {
        for ((dy, sy), cy) in y.element.terms() {
            let inner = if sy.is_empty() {
                vec![]
            } else {
                vec![block(Sign::Plus, sy.len(), word_events(dy, sy, unit, b), vec![])]
            };
            let blocks = if sx.is_empty() {
                inner
            } else {
                vec![block(Sign::Minus, sx.len(), word_events(dx, sx, unit, b), inner)]
            };
            out.push((cx * cy, build(&blocks)?));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingResult {
    pub value: Rational,
    pub transcript: Option<Vec<String>>,
}

pub fn diagrammatic_pair(x: &AnnularClass, y: &AnnularClass, b: &FrobAlgebra) -> Result<PairingResult> {
    pair_with(x, y, b, false)
}

/// The pairing; with `transcript` set, the rule log of every closed diagram evaluated.
pub fn pair_with(x: &AnnularClass, y: &AnnularClass, b: &FrobAlgebra, transcript: bool) -> Result<PairingResult> {
    let mut engine = Engine::new(b)?;
    if transcript {
        engine = engine.with_transcript();
    }
    let mut value = Rational::zero();
    for (c, d) in pairing_diagrams(x, y, b)? {
        if transcript {
            engine.note_line(format!("diagram: {}", d));
        }
        let combo = engine.to_combo(&engine.evaluate(&d)?)?;
        value += c * combo.constant_term();
    }
    let transcript = transcript.then(|| engine.transcript());
    Ok(PairingResult { value, transcript })
}

pub fn pair_partitions(lambda: &Partition, mu: &Partition, b: &FrobAlgebra) -> Result<Rational> {
    let x = p_class(lambda, Sign::Plus, b)?;
    let y = p_class(mu, Sign::Plus, b)?;
    Ok(diagrammatic_pair(&x, &y, b)?.value)
}

/// `phi_B` on classes whose dots all have degree zero.
pub fn phi_b(x: &AnnularClass, b: &FrobAlgebra) -> Result<SymElement> {
    let one = unit_index(b)?;
    let mut out = SymElement::zero(crate::partitions_symfunc::SymBasis::P);
    for ((dots, sigma), c) in x.element.terms() {
        if let Some(&d) = dots.iter().find(|&&d| d != one) {
            return Err(AnnularError::UnsupportedDots(format!("dot {} is not the unit", b.label(d))));
        }
        out.add_term(Partition::new(perm_cycle_type(sigma)), Coeff::scalar(c.clone()));
    }
    Ok(out)
}

/// `phi_B` is multiplicative on juxtaposition.
pub fn phi_b_product(x: &AnnularClass, y: &AnnularClass, b: &FrobAlgebra) -> Result<SymElement> {
    Ok(sym_mul(&phi_b(x, b)?, &phi_b(y, b)?)?)
}

fn center_blocks(mono: &[crate::diagram_engine::CGen], b: &FrobAlgebra) -> Vec<Block> {
    mono.iter()
        .map(|g| {
            let mut events = vec![Event::Dot(0, b.label(g.label).to_string())];
            events.extend(core::iter::repeat_n(Event::Curl(0), g.curls as usize));
            Block::Up { n: 1, events, inner: vec![] }
        })
        .collect()
}

/// Place `c` in the middle of the annulus and close `x` around it. Field only.
pub fn act_on_center(x: &AnnularClass, c: &CenterCombo, b: &FrobAlgebra) -> Result<CenterCombo> {
    if b.dim() != 1 || b.top_degree() != 0 {
        return Err(AnnularError::NotField);
    }
    if x.sign != Sign::Plus {
        return Err(AnnularError::WrongSign("up"));
    }
    let engine = Engine::new(b)?;
    let mut out = CenterCombo::zero(engine.signature());
    for ((dots, sigma), cx) in x.element.terms() {
        for (mono, cc) in c.terms() {
            let inner = center_blocks(mono, b);
            let blocks = if sigma.is_empty() {
                inner
            } else {
                vec![Block::Up { n: sigma.len(), events: word_events(dots, sigma, Some(0), b), inner }]
            };
            let v = if blocks.is_empty() {
                CenterCombo::scalar(engine.signature(), Rational::one())
            } else {
                engine.normalize(&build(&blocks)?)?
            };
            out = out.add(&v.scale(&(cx * cc)));
        }
    }
    Ok(out)
}

/// Highest filtration weight and its homogeneous part; zero has weight 0.
pub fn filtration_leading(c: &CenterCombo) -> (u32, CenterCombo) {
    c.leading().unwrap_or_else(|| (0, c.clone()))
}

/// Pairing matrix on all partitions of sizes `1..=max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub labels: Vec<Partition>,
    pub cells: Vec<Vec<Rational>>,
}

pub fn gram_labels(max_degree: usize) -> Vec<Partition> {
    (1..=max_degree).flat_map(partitions_of).collect()
}

pub fn gram_matrix(b: &FrobAlgebra, max_degree: usize) -> Result<GramMatrix> {
    let labels = gram_labels(max_degree);
    let cells = labels
        .iter()
        .map(|l| labels.iter().map(|m| pair_partitions(l, m, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(GramMatrix { labels, cells })
}
