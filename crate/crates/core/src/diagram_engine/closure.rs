//! Central elements in the closure basis: closures of dotted cycles, one basis
//! element per multiset of `(cycle length, dot label)`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::cell::RefCell;
use core::cmp::Reverse;

use num_traits::{One, Zero};

use super::combo::{CGen, CenterCombo, Signature};
use super::recognize::{presented_order, recognize, RBlock, REv, Transcript};
use super::{show, DiagramWord, EngineError, Generator};
use crate::coeff_ring::Rational;
use crate::frobenius::{dual_of, Elem, FrobAlgebra};

/// Sorted cycles `(length, basis index)`.
pub type Key = Vec<(u32, usize)>;

/// Linear combination of closure classes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClosureElem {
    terms: BTreeMap<Key, Rational>,
}

impl ClosureElem {
    pub fn zero() -> Self {
        ClosureElem::default()
    }

    pub fn scalar(r: Rational) -> Self {
        let mut e = ClosureElem::zero();
        e.add_term(Vec::new(), r);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &Key) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the empty closure.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Vec::new())
    }

    pub(crate) fn add_term(&mut self, k: Key, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &ClosureElem, c: &Rational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn render(&self, b: &FrobAlgebra) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let cyc: Vec<String> = k.iter().map(|(l, i)| format!("({},{})", l, b.label(*i))).collect();
                format!("{}*cl[{}]", show(c), cyc.join(""))
            })
            .collect();
        parts.join(" + ")
    }
}

/// Events of a word on up strands, bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Ev {
    Dot(usize, usize),
    Cross(usize),
    /// The strand at position `i` moves to `sigma[i]`.
    Perm(Vec<usize>),
    Curl(usize),
}

/// Reduction engine for one algebra and a chosen basis for the Casimir sums.
pub struct Engine<'a> {
    alg: &'a FrobAlgebra,
    odd: Vec<bool>,
    unit: Elem,
    sig: Arc<Signature>,
    /// `(i, j, w)`: `w e_i (x) e_j` summands of `v (x) v^vee`, one vector `v` at a time.
    casimir: Vec<(usize, usize, Rational)>,
    /// Summands of the handle `sum_v v^vee v`, one vector at a time.
    handle: Vec<(usize, Rational)>,
    /// `hmat[a][b] = sum_v tr(v^vee e_b v e_a)`.
    hmat: Vec<Vec<Rational>>,
    log: RefCell<Transcript>,
    gens: RefCell<BTreeMap<CGen, ClosureElem>>,
    products: RefCell<BTreeMap<(Key, Key), ClosureElem>>,
}

impl<'a> Engine<'a> {
    pub fn new(alg: &'a FrobAlgebra) -> Result<Self, EngineError> {
        let vectors: Vec<Elem> = (0..alg.dim()).map(|i| alg.basis_elem(i)).collect();
        Engine::with_basis(alg, &vectors)
    }

    /// Use `vectors` and their duals for every Casimir sum.
    pub fn with_basis(alg: &'a FrobAlgebra, vectors: &[Elem]) -> Result<Self, EngineError> {
        let d = alg.dim();
        let odd: Vec<bool> = (0..d).map(|i| alg.is_odd(i)).collect();
        for i in 0..d {
            for j in 0..d {
                let ij = alg.mul_basis(i, j);
                let ji = alg.mul_basis(j, i);
                let sign = if odd[i] && odd[j] { -Rational::one() } else { Rational::one() };
                if ij.iter().zip(ji).any(|(x, y)| *x != &sign * y) {
                    return Err(EngineError::NotSupercommutative);
                }
            }
        }
        let unit = alg.unit()?;
        let duals = dual_of(alg, vectors)?;
        let mut casimir = Vec::new();
        for (v, w) in vectors.iter().zip(&duals) {
            for (i, x) in v.iter().enumerate() {
                for (j, y) in w.iter().enumerate() {
                    if !x.is_zero() && !y.is_zero() {
                        casimir.push((i, j, x * y));
                    }
                }
            }
        }
        let mut handle = Vec::new();
        for (v, w) in vectors.iter().zip(&duals) {
            for (i, x) in alg.mul(w, v).into_iter().enumerate() {
                if !x.is_zero() {
                    handle.push((i, x));
                }
            }
        }
        let mut hmat = vec![vec![Rational::zero(); d]; d];
        for (v, w) in vectors.iter().zip(&duals) {
            for (a, row) in hmat.iter_mut().enumerate() {
                for (b, h) in row.iter_mut().enumerate() {
                    let t = alg.mul(&alg.mul(&alg.mul(w, &alg.basis_elem(b)), v), &alg.basis_elem(a));
                    *h += alg.tr(&t);
                }
            }
        }
        let unit_index = (0..d).find(|&i| alg.basis_elem(i) == unit);
        let sig = Arc::new(Signature {
            names: (0..d).map(|i| alg.label(i).to_string()).collect(),
            odd: odd.clone(),
            degree: (0..d).map(|i| alg.degree(i)).collect(),
            delta: alg.top_degree(),
            unit: unit_index,
        });
        Ok(Engine {
            alg,
            odd,
            unit,
            sig,
            casimir,
            handle,
            hmat,
            log: RefCell::new(Transcript::default()),
            gens: RefCell::new(BTreeMap::new()),
            products: RefCell::new(BTreeMap::new()),
        })
    }

    /// Record rule applications from now on.
    pub fn with_transcript(self) -> Self {
        self.log.borrow_mut().lines = Some(Vec::new());
        self
    }

    pub fn transcript(&self) -> Vec<String> {
        self.log.borrow().lines.clone().unwrap_or_default()
    }

    pub fn note_line(&self, line: String) {
        self.note(|| line);
    }

    pub fn algebra(&self) -> &FrobAlgebra {
        self.alg
    }

    pub fn signature(&self) -> Arc<Signature> {
        self.sig.clone()
    }

    fn note<F: FnOnce() -> String>(&self, f: F) {
        self.log.borrow_mut().note(f);
    }

    /// Reduce a closed diagram to a polynomial in clockwise circles.
    pub fn normalize(&self, d: &DiagramWord) -> Result<CenterCombo, EngineError> {
        let e = self.evaluate(d)?;
        self.to_combo(&e)
    }

    /// Reduce a closed diagram in the closure basis.
    pub fn evaluate(&self, d: &DiagramWord) -> Result<ClosureElem, EngineError> {
        for (k, slice) in d.slices().iter().enumerate() {
            let mut odd = 0;
            for g in slice {
                if let Generator::Dot { label, .. } = g {
                    if self.odd[self.alg.index_of(label)?] {
                        odd += 1;
                    }
                }
            }
            if odd > 1 {
                return Err(EngineError::OddDotsAtSameHeight(k));
            }
        }
        let labels: Vec<(String, String, Rational)> = self
            .casimir
            .iter()
            .map(|(i, j, w)| (self.alg.label(*i).to_string(), self.alg.label(*j).to_string(), w.clone()))
            .collect();
        let rec = recognize(d, Some(&labels), &mut self.log.borrow_mut())?;
        let idx: Vec<usize> = rec.dots.iter().map(|x| self.alg.index_of(&x.label)).collect::<Result<_, _>>()?;
        let mut total = ClosureElem::zero();
        for (c, blocks) in &rec.terms {
            let mut order = Vec::new();
            presented_order(blocks, &mut order);
            let mut actual = order.clone();
            actual.sort_by_key(|&i| (Reverse(rec.dots[i].height), i));
            let rank: BTreeMap<usize, usize> = order.iter().enumerate().map(|(r, &i)| (i, r)).collect();
            let odd_ranks: Vec<usize> = actual.iter().filter(|&&i| self.odd[idx[i]]).map(|i| rank[i]).collect();
            let neg = inversions(&odd_ranks) % 2 == 1;
            let v = self.eval_blocks(blocks, &idx)?;
            let c = if neg { -c.clone() } else { c.clone() };
            total.add_scaled(&v, &c);
        }
        self.note(|| format!("closure-basis value: {}", total.render(self.alg)));
        Ok(total)
    }

    fn eval_blocks(&self, blocks: &[RBlock], idx: &[usize]) -> Result<ClosureElem, EngineError> {
        let mut acc = ClosureElem::scalar(Rational::one());
        for b in blocks.iter().rev() {
            let v = self.eval_block(b, idx)?;
            acc = self.product(&v, &acc);
        }
        Ok(acc)
    }

    fn eval_block(&self, b: &RBlock, idx: &[usize]) -> Result<ClosureElem, EngineError> {
        let inner = self.eval_blocks(&b.inner, idx)?;
        let events: Vec<Ev> = b
            .events
            .iter()
            .map(|e| match *e {
                REv::Dot(p, id) => Ev::Dot(p, idx[id]),
                REv::Cross(p) => Ev::Cross(p),
                REv::Curl(p) => Ev::Curl(p),
            })
            .collect();
        if b.up {
            self.close_up(b.n, &events, &inner)
        } else {
            self.note(|| format!("counterclockwise closure of {} strand(s) contracted", b.n));
            let mut out = ClosureElem::zero();
            for (cx, xs) in self.trace(b.n, &events) {
                for (k, cy) in inner.terms() {
                    for (c, rest) in self.contract(&xs, k) {
                        out.add_term(rest, &cx * cy * c);
                    }
                }
            }
            Ok(out)
        }
    }

    /// Closure to the right of `n` up strands carrying `events`, around `inner`.
    pub(crate) fn close_up(&self, n: usize, events: &[Ev], inner: &ClosureElem) -> Result<ClosureElem, EngineError> {
        let mut out = ClosureElem::zero();
        for (k, c) in inner.terms() {
            let (m, base) = canonical_word(k);
            let mut word: Vec<Ev> = base.into_iter().map(|e| shift(e, n, n + m)).collect();
            word.extend(events.iter().map(|e| match e {
                Ev::Perm(s) => Ev::Perm(s.iter().copied().chain(n..n + m).collect()),
                other => other.clone(),
            }));
            out.add_scaled(&self.close_word(n + m, word), c);
        }
        Ok(out)
    }

    /// Close a word with curls, removing curls first.
    fn close_word(&self, n: usize, word: Vec<Ev>) -> ClosureElem {
        let mut out = ClosureElem::zero();
        let mut stack: Vec<(Rational, usize, Vec<Ev>)> = vec![(Rational::one(), n, word)];
        while let Some((c, n, mut w)) = stack.pop() {
            let Some(k) = w.iter().position(|e| matches!(e, Ev::Curl(_))) else {
                for (s, cyc) in self.trace(n, &w) {
                    if let Some((neg, key)) = canonicalize(cyc, &self.odd) {
                        let v = &c * s;
                        out.add_term(key, if neg { -v } else { v });
                    }
                }
                continue;
            };
            let Ev::Curl(p) = w[k] else { unreachable!() };
            if p + 1 == n {
                self.note(|| format!("curl on the outer strand {} traded for a new strand", p));
                w[k] = Ev::Cross(p);
                for e in w.iter_mut() {
                    if let Ev::Perm(s) = e {
                        s.push(n);
                    }
                }
                stack.push((c, n + 1, w));
            } else {
                self.note(|| format!("curl moved from strand {} to strand {}", p, p + 1));
                for (a, b, x) in &self.casimir {
                    let mut alt = w.clone();
                    alt.splice(k..k + 1, [Ev::Dot(p, *a), Ev::Dot(p + 1, *b), Ev::Cross(p)]);
                    stack.push((&c * x, n, alt));
                }
                w.splice(k..k + 1, [Ev::Cross(p), Ev::Curl(p + 1), Ev::Cross(p)]);
                stack.push((c, n, w));
            }
        }
        out
    }

    /// Loops of the right closure of a curl-free word, each with the product of its dots.
    /// Cycles come in loop order, signs included.
    fn trace(&self, n: usize, events: &[Ev]) -> Vec<(Rational, Vec<(u32, usize)>)> {
        let mut at: Vec<usize> = (0..n).collect();
        let mut dots: Vec<(usize, usize)> = Vec::new();
        for ev in events {
            match ev {
                Ev::Cross(p) => at.swap(*p, p + 1),
                Ev::Perm(s) => {
                    let mut next = vec![0; n];
                    for (i, &t) in s.iter().enumerate() {
                        next[t] = at[i];
                    }
                    at = next;
                }
                Ev::Dot(p, l) => dots.push((at[*p], *l)),
                Ev::Curl(_) => unreachable!("curls are removed before tracing"),
            }
        }
        let mut pi = vec![0; n];
        for (t, &s) in at.iter().enumerate() {
            pi[s] = t;
        }
        let mut loop_of = vec![usize::MAX; n];
        let mut lens: Vec<u32> = Vec::new();
        for s in 0..n {
            if loop_of[s] != usize::MAX {
                continue;
            }
            let id = lens.len();
            let (mut j, mut l) = (s, 0);
            while loop_of[j] == usize::MAX {
                loop_of[j] = id;
                j = pi[j];
                l += 1;
            }
            lens.push(l);
        }
        // top to bottom
        let order: Vec<(usize, usize)> = dots.iter().rev().map(|&(s, l)| (loop_of[s], l)).collect();
        let odd_loops: Vec<usize> = order.iter().filter(|(_, l)| self.odd[*l]).map(|(lp, _)| *lp).collect();
        let neg = inversions(&odd_loops) % 2 == 1;
        let mut elems: Vec<Elem> = vec![self.unit.clone(); lens.len()];
        for (lp, l) in order {
            elems[lp] = self.mul_by_basis(&elems[lp], l);
        }
        let start = if neg { -Rational::one() } else { Rational::one() };
        let mut out = vec![(start, Vec::new())];
        for (lp, e) in elems.iter().enumerate() {
            let mut next = Vec::new();
            for (c, cyc) in &out {
                for (b, x) in e.iter().enumerate() {
                    if !x.is_zero() {
                        let mut cyc: Vec<(u32, usize)> = cyc.clone();
                        cyc.push((lens[lp], b));
                        next.push((c * x, cyc));
                    }
                }
            }
            out = next;
        }
        out
    }

    fn mul_by_basis(&self, a: &Elem, l: usize) -> Elem {
        let mut out = self.alg.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (t, y) in self.alg.mul_basis(i, l).iter().enumerate() {
                if !y.is_zero() {
                    out[t] += x * y;
                }
            }
        }
        out
    }

    /// Counterclockwise closure of cycles `xs` around the class `y`.
    fn contract(&self, xs: &[(u32, usize)], y: &Key) -> Vec<(Rational, Key)> {
        let mut out = Vec::new();
        let mut assign: Vec<Option<usize>> = Vec::with_capacity(xs.len());
        let mut used = vec![false; y.len()];
        self.contract_rec(xs, y, &mut assign, &mut used, &mut out);
        out
    }

    fn contract_rec(
        &self,
        xs: &[(u32, usize)],
        y: &Key,
        assign: &mut Vec<Option<usize>>,
        used: &mut [bool],
        out: &mut Vec<(Rational, Key)>,
    ) {
        let i = assign.len();
        if i == xs.len() {
            out.extend(self.contract_value(xs, y, assign));
            return;
        }
        if xs[i].0 == 1 {
            assign.push(None);
            self.contract_rec(xs, y, assign, used, out);
            assign.pop();
        }
        for j in 0..y.len() {
            if !used[j] && y[j].0 == xs[i].0 {
                used[j] = true;
                assign.push(Some(j));
                self.contract_rec(xs, y, assign, used, out);
                assign.pop();
                used[j] = false;
            }
        }
    }

    fn contract_value(&self, xs: &[(u32, usize)], y: &Key, assign: &[Option<usize>]) -> Option<(Rational, Key)> {
        let mut val = Rational::one();
        // (is_x, index, odd)
        let mut list: Vec<(bool, usize, bool)> = xs.iter().enumerate().map(|(i, c)| (true, i, self.odd[c.1])).collect();
        list.extend(y.iter().enumerate().map(|(j, c)| (false, j, self.odd[c.1])));
        let mut neg = false;
        for (i, a) in assign.iter().enumerate() {
            let px = list.iter().position(|e| e.0 && e.1 == i).unwrap();
            match a {
                Some(j) => {
                    let py = list.iter().position(|e| !e.0 && e.1 == *j).unwrap();
                    let between = list[px + 1..py].iter().filter(|e| e.2).count();
                    if list[py].2 && between % 2 == 1 {
                        neg = !neg;
                    }
                    val *= Rational::from_integer(xs[i].0.into()) * &self.hmat[xs[i].1][y[*j].1];
                    list.remove(py);
                    list.remove(px);
                }
                None => {
                    val *= self.alg.tr(&self.alg.basis_elem(xs[i].1));
                    list.remove(px);
                }
            }
            if val.is_zero() {
                return None;
            }
        }
        let rest: Key = y.iter().enumerate().filter(|(j, _)| !assign.contains(&Some(*j))).map(|(_, c)| *c).collect();
        Some((if neg { -val } else { val }, rest))
    }

    /// Juxtaposition product; `a` is drawn above `b`.
    pub fn product(&self, a: &ClosureElem, b: &ClosureElem) -> ClosureElem {
        let mut out = ClosureElem::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let p = self.product_keys(ka, kb);
                out.add_scaled(&p, &(ca * cb));
            }
        }
        out
    }

    fn product_keys(&self, k1: &Key, k2: &Key) -> ClosureElem {
        if k1.is_empty() || k2.is_empty() {
            let mut k: Key = k1.clone();
            k.extend(k2.iter().copied());
            return ClosureElem { terms: [(k, Rational::one())].into_iter().collect() };
        }
        let cache_key = (k1.clone(), k2.clone());
        if let Some(v) = self.products.borrow().get(&cache_key) {
            return v.clone();
        }
        let (n1, z1) = canonical_word(k1);
        let (n2, z2) = canonical_word(k2);
        let mut out = ClosureElem::zero();
        let mut matchings = Vec::new();
        partial_injections(n1, n2, &mut Vec::new(), &mut vec![false; n2], &mut matchings);
        self.note(|| format!("juxtaposition merged over {} partial matching(s)", matchings.len()));
        for m in matchings {
            let mut place = vec![0; n1];
            let mut next = n2;
            for (i, t) in m.iter().enumerate() {
                place[i] = match t {
                    Some(j) => *j,
                    None => {
                        next += 1;
                        next - 1
                    }
                };
            }
            let n = next;
            let base: Vec<Ev> = z2.iter().cloned().map(|e| shift(e, 0, n)).collect();
            let matched: Vec<usize> = m.iter().flatten().copied().collect();
            let upper: Vec<Ev> = z1
                .iter()
                .map(|e| match e {
                    Ev::Dot(p, l) => Ev::Dot(place[*p], *l),
                    Ev::Cross(p) => Ev::Cross(place[*p]),
                    Ev::Perm(s) => {
                        let mut t: Vec<usize> = (0..n).collect();
                        for (i, &si) in s.iter().enumerate() {
                            t[place[i]] = place[si];
                        }
                        Ev::Perm(t)
                    }
                    Ev::Curl(p) => Ev::Curl(place[*p]),
                })
                .collect();
            // an independent handle at each merged point
            let mut choices: Vec<(Rational, Vec<Ev>)> = vec![(Rational::one(), Vec::new())];
            for &p in &matched {
                let mut grown = Vec::new();
                for (c, dots) in &choices {
                    for (h, w) in &self.handle {
                        let mut dots = dots.clone();
                        dots.push(Ev::Dot(p, *h));
                        grown.push((c * w, dots));
                    }
                }
                choices = grown;
            }
            for (c, dots) in choices {
                let mut w = dots;
                w.extend(base.iter().cloned());
                w.extend(upper.iter().cloned());
                for (s, cyc) in self.trace(n, &w) {
                    if let Some((neg, key)) = canonicalize(cyc, &self.odd) {
                        let v = &c * s;
                        out.add_term(key, if neg { -v } else { v });
                    }
                }
            }
        }
        self.products.borrow_mut().insert(cache_key, out.clone());
        out
    }

    /// `c_{b,k}`: one strand with dot `b` and `k` right curls, closed clockwise.
    pub(crate) fn generator(&self, g: CGen) -> ClosureElem {
        if let Some(v) = self.gens.borrow().get(&g) {
            return v.clone();
        }
        let mut word = vec![Ev::Dot(0, g.label)];
        word.extend((0..g.curls).map(|_| Ev::Curl(0)));
        let v = self.close_word(1, word);
        self.gens.borrow_mut().insert(g, v.clone());
        v
    }

    /// Expand a polynomial in the clockwise circles into the closure basis.
    pub fn from_combo(&self, c: &CenterCombo) -> ClosureElem {
        let mut out = ClosureElem::zero();
        for (mono, coef) in c.terms() {
            out.add_scaled(&self.monomial(mono), coef);
        }
        out
    }

    fn monomial(&self, mono: &[CGen]) -> ClosureElem {
        let mut acc = ClosureElem::scalar(Rational::one());
        for g in mono.iter().rev() {
            acc = self.product(&self.generator(*g), &acc);
        }
        acc
    }

    /// Rewrite a closure-basis element as a polynomial in the clockwise circles.
    pub fn to_combo(&self, e: &ClosureElem) -> Result<CenterCombo, EngineError> {
        let mut rest = e.clone();
        let mut out = CenterCombo::zero(self.sig.clone());
        let mut guard = 0usize;
        while let Some(k) = rest.terms.keys().max_by_key(|k| (k.iter().map(|c| c.0).sum::<u32>(), (*k).clone())).cloned()
        {
            guard += 1;
            if guard > 100_000 {
                return Err(EngineError::Inconsistent("triangular conversion did not terminate".into()));
            }
            let gens: Vec<CGen> = k.iter().map(|&(l, b)| CGen { curls: l - 1, label: b }).collect();
            let Some((_, mono)) = CenterCombo::canonical(gens, &self.sig) else {
                return Err(EngineError::Inconsistent("repeated odd cycle in a closure key".into()));
            };
            let x = self.monomial(&mono);
            let lead = x.coeff(&k);
            if lead.is_zero() {
                return Err(EngineError::Inconsistent("leading closure missing from its monomial".into()));
            }
            let a = rest.coeff(&k) / lead;
            rest.add_scaled(&x, &-a.clone());
            out.add_term(mono, a);
        }
        Ok(out)
    }
}

fn inversions(xs: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] > xs[j] {
                n += 1;
            }
        }
    }
    n
}

/// Move events on `0..m` to the strands `off..off+m` of an `n`-strand word.
fn shift(e: Ev, off: usize, n: usize) -> Ev {
    match e {
        Ev::Dot(p, l) => Ev::Dot(p + off, l),
        Ev::Cross(p) => Ev::Cross(p + off),
        Ev::Curl(p) => Ev::Curl(p + off),
        Ev::Perm(s) => {
            let mut t: Vec<usize> = (0..n).collect();
            for (i, &si) in s.iter().enumerate() {
                t[i + off] = si + off;
            }
            Ev::Perm(t)
        }
    }
}

/// Cycles on consecutive blocks; each dot on the first strand of its block, leftmost highest.
pub(crate) fn canonical_word(k: &Key) -> (usize, Vec<Ev>) {
    let n: usize = k.iter().map(|c| c.0 as usize).sum();
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut starts = Vec::new();
    let mut s = 0;
    for &(l, _) in k {
        let l = l as usize;
        for j in 0..l {
            sigma[s + j] = if j + 1 == l { s } else { s + j + 1 };
        }
        starts.push(s);
        s += l;
    }
    let mut ev = vec![Ev::Perm(sigma)];
    for (i, &(_, b)) in k.iter().enumerate().rev() {
        ev.push(Ev::Dot(starts[i], b));
    }
    (n, ev)
}

/// Sort cycles into key order with the Koszul sign; `None` if an odd cycle repeats.
pub(crate) fn canonicalize(mut cyc: Vec<(u32, usize)>, odd: &[bool]) -> Option<(bool, Key)> {
    let ord = |c: &(u32, usize)| (Reverse(c.0), c.1);
    let mut neg = false;
    for i in 1..cyc.len() {
        let mut j = i;
        while j > 0 && ord(&cyc[j - 1]) > ord(&cyc[j]) {
            if odd[cyc[j].1] && odd[cyc[j - 1].1] {
                neg = !neg;
            }
            cyc.swap(j - 1, j);
            j -= 1;
        }
    }
    if cyc.windows(2).any(|w| w[0] == w[1] && odd[w[0].1]) {
        return None;
    }
    Some((neg, cyc))
}

/// All partial injections `0..n1 -> 0..n2`.
fn partial_injections(
    n1: usize,
    n2: usize,
    cur: &mut Vec<Option<usize>>,
    used: &mut [bool],
    out: &mut Vec<Vec<Option<usize>>>,
) {
    if cur.len() == n1 {
        out.push(cur.clone());
        return;
    }
    cur.push(None);
    partial_injections(n1, n2, cur, used, out);
    cur.pop();
    for j in 0..n2 {
        if !used[j] {
            used[j] = true;
            cur.push(Some(j));
            partial_injections(n1, n2, cur, used, out);
            cur.pop();
            used[j] = false;
        }
    }
}
