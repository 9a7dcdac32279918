//! Graded Frobenius superalgebras given by structure constants, and their wreath products.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::coeff_ring::{fmt_rational, rat, Coeff, Mode, Mono, Rational};
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrobError {
    #[error("invalid algebra data: {0}")]
    Invalid(String),
    #[error("unknown algebra spec: {0}")]
    UnknownSpec(String),
    #[error("unknown basis label: {0}")]
    UnknownLabel(String),
    #[error("the trace form is degenerate")]
    Singular,
    #[error("algebra has no unit")]
    NoUnit,
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("algebra failed validation: {0}")]
    Validation(String),
}

/// Basis vector data: label, degree and parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVector {
    pub label: String,
    pub degree: u32,
    pub odd: bool,
}

/// Algebra element in coordinates with respect to the basis.
pub type Elem = Vec<Rational>;

/// `N`-graded Frobenius superalgebra with structure constants `mult[i][j][k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobAlgebra {
    name: String,
    basis: Vec<BasisVector>,
    mult: Vec<Vec<Elem>>,
    trace: Vec<Rational>,
}

impl FrobAlgebra {
    /// Build from sparse structure constants `(i, j, [(k, c)])`.
    pub fn from_parts(
        name: &str,
        basis: Vec<BasisVector>,
        mult: &[(usize, usize, Vec<(usize, Rational)>)],
        trace: Vec<Rational>,
    ) -> Result<Self, FrobError> {
        let d = basis.len();
        if d == 0 {
            return Err(FrobError::Invalid("empty basis".into()));
        }
        if trace.len() != d {
            return Err(FrobError::Invalid(format!("trace has {} entries, basis has {}", trace.len(), d)));
        }
        let mut table = vec![vec![vec![Rational::zero(); d]; d]; d];
        for (i, j, entries) in mult {
            if *i >= d || *j >= d {
                return Err(FrobError::Invalid(format!("product index ({}, {}) out of range", i, j)));
            }
            for (k, c) in entries {
                if *k >= d {
                    return Err(FrobError::Invalid(format!("result index {} out of range", k)));
                }
                table[*i][*j][*k] += c;
            }
        }
        let mut labels: Vec<&str> = basis.iter().map(|b| b.label.as_str()).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(FrobError::Invalid("duplicate basis label".into()));
        }
        Ok(FrobAlgebra { name: name.into(), basis, mult: table, trace })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn index_of(&self, label: &str) -> Result<usize, FrobError> {
        self.basis.iter().position(|b| b.label == label).ok_or_else(|| FrobError::UnknownLabel(label.into()))
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.basis[i].degree
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.basis[i].odd
    }

    /// Highest degree carried by a basis vector.
    pub fn top_degree(&self) -> u32 {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    pub fn zero(&self) -> Elem {
        vec![Rational::zero(); self.dim()]
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut e = self.zero();
        e[i] = Rational::one();
        e
    }

    /// Product of basis vectors.
    pub fn mul_basis(&self, i: usize, j: usize) -> &Elem {
        &self.mult[i][j]
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let f = ai * bj;
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &f * c;
                    }
                }
            }
        }
        out
    }

    pub fn tr(&self, a: &Elem) -> Rational {
        a.iter().zip(&self.trace).fold(Rational::zero(), |acc, (x, t)| acc + x * t)
    }

    pub fn trace_vector(&self) -> &[Rational] {
        &self.trace
    }

    /// Solve for a two-sided unit.
    pub fn unit(&self) -> Result<Elem, FrobError> {
        let d = self.dim();
        // unknowns u_i; equations sum_i u_i mult[i][j][k] = delta_jk and sum_i u_i mult[j][i][k] = delta_jk
        let mut rows: linalg::Matrix = Vec::new();
        for j in 0..d {
            for k in 0..d {
                let mut left: Vec<Rational> = (0..d).map(|i| self.mult[i][j][k].clone()).collect();
                left.push(rat(i64::from(j == k)));
                rows.push(left);
                let mut right: Vec<Rational> = (0..d).map(|i| self.mult[j][i][k].clone()).collect();
                right.push(rat(i64::from(j == k)));
                rows.push(right);
            }
        }
        let pivots = linalg::row_reduce(&mut rows);
        if pivots.contains(&d) {
            return Err(FrobError::NoUnit);
        }
        let mut u = self.zero();
        for (r, &c) in pivots.iter().enumerate() {
            u[c] = rows[r][d].clone();
        }
        Ok(u)
    }

    /// `G[i][j] = tr(b_i b_j)`.
    pub fn gram(&self) -> linalg::Matrix {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.tr(&self.mult[i][j])).collect()).collect()
    }

    /// Graded dimension `sum q^{deg} pi^{parity}`.
    pub fn graded_dim(&self) -> Coeff {
        self.basis.iter().fold(Coeff::zero(), |acc, b| {
            acc + Coeff::monomial(Mode::One, Mono { exp: [b.degree as i32, 0], pi: b.odd }, rat(1))
        })
    }

    /// `dim B_even - dim B_odd`.
    pub fn super_dim(&self) -> i64 {
        self.basis.iter().map(|b| if b.odd { -1 } else { 1 }).sum()
    }

    /// Degree and parity of a homogeneous element, `None` if zero or inhomogeneous.
    pub fn homogeneous_type(&self, a: &Elem) -> Option<(u32, bool)> {
        let mut ty = None;
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let t = (self.basis[i].degree, self.basis[i].odd);
            match ty {
                None => ty = Some(t),
                Some(prev) if prev != t => return None,
                _ => {}
            }
        }
        ty
    }

    pub fn render_elem(&self, a: &Elem) -> String {
        let mut parts = Vec::new();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if x.is_one() {
                parts.push(self.basis[i].label.clone());
            } else {
                parts.push(format!("{}*{}", fmt_rational(x), self.basis[i].label));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// One check of [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Basis indices witnessing a failure.
    pub witness: Option<(usize, usize, usize)>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
    pub top_degree: u32,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            if let Some((a, b, d)) = c.witness {
                write!(f, " witness=({}, {}, {})", a, b, d)?;
            }
            if !c.detail.is_empty() {
                write!(f, " {}", c.detail)?;
            }
            writeln!(f)?;
        }
        write!(f, "top degree {}", self.top_degree)
    }
}

fn check(name: &'static str, witness: Option<(usize, usize, usize)>, detail: String) -> CheckResult {
    CheckResult { name, passed: witness.is_none() && detail.is_empty(), witness, detail }
}

/// Check every standing assumption; failures are entries of the report.
pub fn validate(b: &FrobAlgebra) -> ValidationReport {
    let d = b.dim();
    let delta = b.top_degree();
    let mut checks = Vec::new();

    let mut wit = None;
    'assoc: for i in 0..d {
        for j in 0..d {
            let ij = b.mul(&b.basis_elem(i), &b.basis_elem(j));
            for k in 0..d {
                let left = b.mul(&ij, &b.basis_elem(k));
                let jk = b.mul(&b.basis_elem(j), &b.basis_elem(k));
                let right = b.mul(&b.basis_elem(i), &jk);
                if left != right {
                    wit = Some((i, j, k));
                    break 'assoc;
                }
            }
        }
    }
    checks.push(check("associativity", wit, String::new()));

    let unit = b.unit();
    checks.push(check(
        "unit",
        None,
        match &unit {
            Ok(_) => String::new(),
            Err(_) => "no two-sided unit".into(),
        },
    ));

    let mut deg_wit = None;
    let mut par_wit = None;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if b.mult[i][j][k].is_zero() {
                    continue;
                }
                if deg_wit.is_none() && b.degree(k) != b.degree(i) + b.degree(j) {
                    deg_wit = Some((i, j, k));
                }
                if par_wit.is_none() && b.is_odd(k) != (b.is_odd(i) ^ b.is_odd(j)) {
                    par_wit = Some((i, j, k));
                }
            }
        }
    }
    checks.push(check("degree additivity", deg_wit, String::new()));
    checks.push(check("parity additivity", par_wit, String::new()));

    let trace_wit = (0..d)
        .find(|&i| !b.trace[i].is_zero() && (b.degree(i) != delta || b.is_odd(i)))
        .map(|i| (i, i, i));
    checks.push(check("trace even and supported in top degree", trace_wit, String::new()));

    let mut sym_wit = None;
    'sym: for i in 0..d {
        for j in 0..d {
            let s = if b.is_odd(i) && b.is_odd(j) { rat(-1) } else { rat(1) };
            if b.tr(&b.mult[i][j]) != s * b.tr(&b.mult[j][i]) {
                sym_wit = Some((i, j, j));
                break 'sym;
            }
        }
    }
    checks.push(check("supersymmetric trace", sym_wit, String::new()));

    let nondeg = linalg::inverse(&b.gram()).is_some();
    checks.push(check("nondegenerate trace form", None, if nondeg { String::new() } else { "Gram matrix is singular".into() }));

    let deg0: Vec<usize> = (0..d).filter(|&i| b.degree(i) == 0).collect();
    let base_ok = deg0.len() == 1
        && !b.is_odd(deg0[0])
        && unit.as_ref().map(|u| b.homogeneous_type(u) == Some((0, false))).unwrap_or(false);
    checks.push(check(
        "degree-zero part is the ground field",
        None,
        if base_ok { String::new() } else { format!("degree-zero part has dimension {}", deg0.len()) },
    ));

    ValidationReport { checks, top_degree: delta }
}

/// Validate and turn failures into an error.
pub fn ensure_valid(b: &FrobAlgebra) -> Result<(), FrobError> {
    let report = validate(b);
    let first = report.failures().next().map(|c| c.name.to_string());
    match first {
        None => Ok(()),
        Some(name) => Err(FrobError::Validation(name)),
    }
}

/// Right dual basis: `tr(b_i b_j^vee) = delta_ij`.
pub fn dual_basis(b: &FrobAlgebra) -> Result<Vec<Elem>, FrobError> {
    let vectors: Vec<Elem> = (0..b.dim()).map(|i| b.basis_elem(i)).collect();
    dual_of(b, &vectors)
}

/// Dual basis of an arbitrary basis given in coordinates.
pub fn dual_of(b: &FrobAlgebra, vectors: &[Elem]) -> Result<Vec<Elem>, FrobError> {
    let n = vectors.len();
    if n != b.dim() {
        return Err(FrobError::Invalid("not a basis".into()));
    }
    let g: linalg::Matrix = vectors.iter().map(|v| vectors.iter().map(|w| b.tr(&b.mul(v, w))).collect()).collect();
    let inv = linalg::inverse(&g).ok_or(FrobError::Singular)?;
    // v_j^vee = sum_k D[j][k] v_k with G D^T = I, so D = (G^{-1})^T
    Ok((0..n)
        .map(|j| {
            let mut e = b.zero();
            for k in 0..n {
                let c = &inv[k][j];
                if c.is_zero() {
                    continue;
                }
                for (t, x) in vectors[k].iter().enumerate() {
                    e[t] += c * x;
                }
            }
            e
        })
        .collect())
}

/// `sum_b b (x) b^vee` as a `dim x dim` coefficient matrix, for the given basis.
pub fn casimir_tensor(b: &FrobAlgebra, vectors: &[Elem]) -> Result<linalg::Matrix, FrobError> {
    let duals = dual_of(b, vectors)?;
    let d = b.dim();
    let mut m = vec![vec![Rational::zero(); d]; d];
    for (v, w) in vectors.iter().zip(&duals) {
        for i in 0..d {
            for j in 0..d {
                if !v[i].is_zero() && !w[j].is_zero() {
                    m[i][j] += &v[i] * &w[j];
                }
            }
        }
    }
    Ok(m)
}

/// The one-dimensional algebra `F`.
pub fn field() -> FrobAlgebra {
    FrobAlgebra::from_parts(
        "field",
        vec![BasisVector { label: "1".into(), degree: 0, odd: false }],
        &[(0, 0, vec![(0, rat(1))])],
        vec![rat(1)],
    )
    .expect("field data is well formed")
}

/// `F[x]/(x^k)` with `|x| = 1` and `tr(x^{k-1}) = 1`.
pub fn truncated_poly(k: u32) -> Result<FrobAlgebra, FrobError> {
    if k == 0 {
        return Err(FrobError::Invalid("truncated polynomial algebra needs k >= 1".into()));
    }
    let k = k as usize;
    let basis = (0..k)
        .map(|j| BasisVector {
            label: match j {
                0 => "1".into(),
                1 => "x".into(),
                _ => format!("x^{}", j),
            },
            degree: j as u32,
            odd: false,
        })
        .collect();
    let mut mult = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i + j < k {
                mult.push((i, j, vec![(i + j, rat(1))]));
            }
        }
    }
    let trace = (0..k).map(|j| rat(i64::from(j == k - 1))).collect();
    FrobAlgebra::from_parts(&format!("truncpoly:{}", k), basis, &mult, trace)
}

/// Cohomology of a genus-`g` surface: `1`, odd `a_1..a_{2g}` of degree 1, top class `t`.
pub fn surface(g: u32) -> Result<FrobAlgebra, FrobError> {
    let g = g as usize;
    let n = 2 * g + 2;
    let top = n - 1;
    let mut basis = vec![BasisVector { label: "1".into(), degree: 0, odd: false }];
    for i in 1..=2 * g {
        basis.push(BasisVector { label: format!("a{}", i), degree: 1, odd: true });
    }
    basis.push(BasisVector { label: "t".into(), degree: 2, odd: false });
    let mut mult = Vec::new();
    for i in 0..n {
        mult.push((0, i, vec![(i, rat(1))]));
        if i != 0 {
            mult.push((i, 0, vec![(i, rat(1))]));
        }
    }
    for i in 1..=g {
        mult.push((i, i + g, vec![(top, rat(1))]));
        mult.push((i + g, i, vec![(top, rat(-1))]));
    }
    let mut trace = vec![Rational::zero(); n];
    trace[top] = rat(1);
    FrobAlgebra::from_parts(&format!("surface:{}", g), basis, &mult, trace)
}

/// Parse `field`, `truncpoly:k` or `surface:g`.
pub fn builtin(spec: &str) -> Result<FrobAlgebra, FrobError> {
    let spec = spec.trim();
    let unknown = || FrobError::UnknownSpec(spec.into());
    if spec == "field" {
        return Ok(field());
    }
    let (kind, param) = spec.split_once(':').ok_or_else(unknown)?;
    let param: u32 = param.trim().parse().map_err(|_| unknown())?;
    match kind.trim() {
        "truncpoly" | "truncated_poly" => truncated_poly(param),
        "surface" => surface(param),
        _ => Err(unknown()),
    }
}

/// Permutation as the image list `perm[i] = sigma(i)`.
pub type Perm = Vec<usize>;

pub fn perm_identity(n: usize) -> Perm {
    (0..n).collect()
}

/// `(sigma tau)(i) = sigma(tau(i))`.
pub fn perm_compose(sigma: &[usize], tau: &[usize]) -> Perm {
    tau.iter().map(|&t| sigma[t]).collect()
}

pub fn perm_inverse(sigma: &[usize]) -> Perm {
    let mut inv = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    inv
}

/// Cycle type of a permutation.
pub fn perm_cycle_type(sigma: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; sigma.len()];
    let mut parts = Vec::new();
    for i in 0..sigma.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = sigma[j];
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Linear combination of `(b_1 (x) ... (x) b_n, sigma)` in `B^{(x)n} x| S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathElement {
    n: usize,
    terms: BTreeMap<(Vec<usize>, Perm), Rational>,
}

impl WreathElement {
    pub fn zero(n: usize) -> Self {
        WreathElement { n, terms: BTreeMap::new() }
    }

    /// The identity of `B^{x| n}`; `unit_index` is the basis index of `1`.
    pub fn unit(n: usize, unit_index: usize) -> Self {
        WreathElement::monomial(vec![unit_index; n], perm_identity(n), Rational::one())
    }

    pub fn monomial(dots: Vec<usize>, perm: Perm, c: Rational) -> Self {
        assert_eq!(dots.len(), perm.len(), "dot tuple and permutation sizes differ");
        let mut w = WreathElement::zero(perm.len());
        w.add_term(dots, perm, c);
        w
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<usize>, Perm), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, dots: Vec<usize>, perm: Perm, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (dots, perm);
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &WreathElement) -> Result<WreathElement, FrobError> {
        if self.n != other.n {
            return Err(FrobError::StrandMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for ((d, p), c) in &other.terms {
            out.add_term(d.clone(), p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, r: &Rational) -> WreathElement {
        let mut out = WreathElement::zero(self.n);
        for ((d, p), c) in &self.terms {
            out.add_term(d.clone(), p.clone(), c * r);
        }
        out
    }

    pub fn render(&self, b: &FrobAlgebra) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for ((d, p), c) in &self.terms {
            let dots: Vec<&str> = d.iter().map(|&i| b.label(i)).collect();
            let perm: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
            parts.push(format!("{}*({}; [{}])", fmt_rational(c), dots.join("⊗"), perm.join(",")));
        }
        parts.join(" + ")
    }
}

/// Koszul sign of sending the factor at position `i` to position `sigma(i)`.
pub fn koszul_permutation_sign(odd: &[bool], sigma: &[usize]) -> bool {
    let mut neg = false;
    for i in 0..sigma.len() {
        if !odd[i] {
            continue;
        }
        for j in i + 1..sigma.len() {
            if odd[j] && sigma[i] > sigma[j] {
                neg = !neg;
            }
        }
    }
    neg
}

/// `(b, sigma)(c, tau) = (b . sigma(c), sigma tau)` with Koszul signs.
pub fn wreath_mul(alg: &FrobAlgebra, a: &WreathElement, b: &WreathElement) -> Result<WreathElement, FrobError> {
    if a.n != b.n {
        return Err(FrobError::StrandMismatch(a.n, b.n));
    }
    let n = a.n;
    let mut out = WreathElement::zero(n);
    for ((bd, sigma), ca) in &a.terms {
        for ((cd, tau), cb) in &b.terms {
            let odd_c: Vec<bool> = cd.iter().map(|&x| alg.is_odd(x)).collect();
            let mut neg = koszul_permutation_sign(&odd_c, sigma);
            let mut moved = vec![0; n];
            for i in 0..n {
                moved[sigma[i]] = cd[i];
            }
            // (b_1 (x) .. (x) b_n)(c'_1 (x) .. (x) c'_n): c'_j passes b_i for i > j
            for i in 0..n {
                if !alg.is_odd(bd[i]) {
                    continue;
                }
                for &cj in moved.iter().take(i) {
                    if alg.is_odd(cj) {
                        neg = !neg;
                    }
                }
            }
            let perm = perm_compose(sigma, tau);
            // expand the product factor by factor
            let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), ca * cb)];
            for i in 0..n {
                let prod = alg.mul_basis(bd[i], moved[i]);
                let mut next = Vec::new();
                for (prefix, c) in &partial {
                    for (k, x) in prod.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let mut p = prefix.clone();
                        p.push(k);
                        next.push((p, c * x));
                    }
                }
                partial = next;
            }
            for (dots, c) in partial {
                out.add_term(dots, perm.clone(), if neg { -c } else { c });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for spec in ["field", "truncpoly:1", "truncpoly:3", "surface:0", "surface:1", "surface:2"] {
            let b = builtin(spec).unwrap();
            let report = validate(&b);
            assert!(report.passed(), "{}: {}", spec, report);
        }
        assert_eq!(validate(&field()).top_degree, 0);
    }

    #[test]
    fn zero_trace_is_degenerate() {
        let b = truncated_poly(3).unwrap();
        let broken = FrobAlgebra { trace: vec![rat(0); 3], ..b };
        let report = validate(&broken);
        let failed: Vec<&str> = report.failures().map(|c| c.name).collect();
        assert_eq!(failed, vec!["nondegenerate trace form"]);
    }

    #[test]
    fn graded_dimensions() {
        assert_eq!(truncated_poly(3).unwrap().graded_dim(), "1 + q + q^2".parse().unwrap());
        assert_eq!(surface(2).unwrap().graded_dim(), "1 + 4*pi*q + q^2".parse().unwrap());
        assert_eq!(field().graded_dim(), Coeff::one());
    }

    #[test]
    fn unknown_specs() {
        assert!(matches!(builtin("truncpoly:0"), Err(FrobError::Invalid(_))));
        assert!(matches!(builtin("torus"), Err(FrobError::UnknownSpec(_))));
    }

    #[test]
    fn wreath_examples() {
        let b = truncated_poly(2).unwrap();
        let x = WreathElement::monomial(vec![1, 0], perm_identity(2), rat(1));
        let y = WreathElement::monomial(vec![0, 1], perm_identity(2), rat(1));
        let xy = wreath_mul(&b, &x, &y).unwrap();
        assert_eq!(xy, WreathElement::monomial(vec![1, 1], perm_identity(2), rat(1)));
        let s = WreathElement::monomial(vec![0, 0], vec![1, 0], rat(1));
        assert_eq!(wreath_mul(&b, &s, &s).unwrap(), WreathElement::unit(2, 0));
        assert_eq!(wreath_mul(&b, &x, &WreathElement::unit(2, 0)).unwrap(), x);
        assert_eq!(wreath_mul(&b, &x, &WreathElement::unit(3, 0)), Err(FrobError::StrandMismatch(2, 3)));
    }
}
