//! Polynomials in the clockwise circles `c_{b,k}` (a strand with dot `b` and `k` curls).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::cmp::Reverse;
use core::fmt;

use num_traits::{One, Zero};

use super::EngineError;
use crate::coeff_ring::{Coeff, Rational};
use crate::partitions_symfunc::write_term;

/// What a combination needs to know about its algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub names: Vec<String>,
    pub odd: Vec<bool>,
    pub degree: Vec<u32>,
    pub delta: u32,
    pub unit: Option<usize>,
}

impl Signature {
    fn is_field(&self) -> bool {
        self.names.len() == 1 && self.delta == 0
    }
}

/// `c_{label, curls}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CGen {
    pub curls: u32,
    pub label: usize,
}

impl CGen {
    pub fn weight(&self) -> u32 {
        self.curls + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterCombo {
    sig: Arc<Signature>,
    terms: BTreeMap<Vec<CGen>, Rational>,
}

impl CenterCombo {
    pub fn zero(sig: Arc<Signature>) -> Self {
        CenterCombo { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: Arc<Signature>, r: Rational) -> Self {
        let mut c = CenterCombo::zero(sig);
        c.add_term(Vec::new(), r);
        c
    }

    pub fn generator(sig: Arc<Signature>, g: CGen) -> Self {
        let mut c = CenterCombo::zero(sig);
        c.add_term(vec![g], Rational::one());
        c
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<CGen>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &[CGen]) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&[])
    }

    /// Sort generators with the Koszul sign; `None` if an odd generator repeats.
    pub fn canonical(mut gens: Vec<CGen>, sig: &Signature) -> Option<(bool, Vec<CGen>)> {
        let ord = |g: &CGen| (Reverse(g.curls), g.label);
        let odd = |g: &CGen| sig.odd[g.label];
        let mut neg = false;
        for i in 1..gens.len() {
            let mut j = i;
            while j > 0 && ord(&gens[j - 1]) > ord(&gens[j]) {
                if odd(&gens[j]) && odd(&gens[j - 1]) {
                    neg = !neg;
                }
                gens.swap(j - 1, j);
                j -= 1;
            }
        }
        if gens.windows(2).any(|w| w[0] == w[1] && odd(&w[0])) {
            return None;
        }
        Some((neg, gens))
    }

    pub(crate) fn add_term(&mut self, mono: Vec<CGen>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(mono.clone()).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn add(&self, other: &CenterCombo) -> CenterCombo {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> CenterCombo {
        let mut out = CenterCombo::zero(self.sig.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * r);
        }
        out
    }

    pub fn mul(&self, other: &CenterCombo) -> CenterCombo {
        let mut out = CenterCombo::zero(self.sig.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let gens: Vec<CGen> = m1.iter().chain(m2).copied().collect();
                if let Some((neg, m)) = CenterCombo::canonical(gens, &self.sig) {
                    let c = c1 * c2;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// Filtration weight, `c_{b,k}` counting `k + 1`.
    pub fn weight(mono: &[CGen]) -> u32 {
        mono.iter().map(CGen::weight).sum()
    }

    /// `(|b| + (k+1) delta)` summed over the monomial.
    pub fn degree(&self, mono: &[CGen]) -> i64 {
        mono.iter().map(|g| i64::from(self.sig.degree[g.label]) + i64::from(g.weight()) * i64::from(self.sig.delta)).sum()
    }

    /// Top filtration weight and the terms attaining it; `None` for zero.
    pub fn leading(&self) -> Option<(u32, CenterCombo)> {
        let w = self.terms.keys().map(|m| CenterCombo::weight(m)).max()?;
        let mut lead = CenterCombo::zero(self.sig.clone());
        for (m, c) in &self.terms {
            if CenterCombo::weight(m) == w {
                lead.add_term(m.clone(), c.clone());
            }
        }
        Some((w, lead))
    }

    fn gen_name(&self, g: &CGen) -> String {
        if self.sig.is_field() {
            format!("c{}", g.curls)
        } else {
            format!("c({},{})", self.sig.names[g.label], g.curls)
        }
    }

    fn mono_name(&self, mono: &[CGen]) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < mono.len() {
            let mut j = i;
            while j < mono.len() && mono[j] == mono[i] {
                j += 1;
            }
            let name = self.gen_name(&mono[i]);
            parts.push(if j - i > 1 { format!("{}^{}", name, j - i) } else { name });
            i = j;
        }
        parts.join("*")
    }
}

impl fmt::Display for CenterCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut monos: Vec<(&Vec<CGen>, &Rational)> = self.terms.iter().collect();
        monos.sort_by_key(|(m, _)| Reverse(CenterCombo::weight(m)));
        for (i, (m, c)) in monos.into_iter().enumerate() {
            write_term(f, i == 0, &Coeff::scalar(c.clone()), &self.mono_name(m))?;
        }
        Ok(())
    }
}

/// Degree-zero projection: the constant term. Needs a positive top degree.
pub fn f0(c: &CenterCombo) -> Result<Rational, EngineError> {
    if c.sig.delta == 0 {
        return Err(EngineError::ZeroTopDegree);
    }
    Ok(c.constant_term())
}
