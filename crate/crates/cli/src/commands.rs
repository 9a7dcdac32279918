use std::path::Path;

use anyhow::{Context, Result};
use jackdiag_core::annular_trace::{
    act_on_center, filtration_leading, gram_labels, p_class, pair_partitions, pair_with, phi_b, Sign,
};
use jackdiag_core::coeff_ring::{eval_1_neg1, fmt_rational, rat, rf_equal};
use jackdiag_core::diagram_engine::{f0, CenterCombo, DiagramWord, Engine, EngineError};
use jackdiag_core::frobenius::{ensure_valid, field, validate, FrobAlgebra};
use jackdiag_core::heisenberg::{
    jack_limit_factor, jack_pair_via_lattice, macdonald_ext_closed_form, macdonald_generating_coefficient,
    macdonald_sym_closed_form, pair_pp, verify_presentation_pair, Lattice, PresentationKind,
};
use jackdiag_core::partitions_symfunc::{convert, partitions_up_to, Partition, SymBasis};
use rayon::prelude::*;

use crate::render::{Body, Report};
use crate::{algebra, UsageError};

fn checked(spec: &str) -> Result<FrobAlgebra> {
    let b = algebra::load(spec)?;
    ensure_valid(&b).with_context(|| format!("algebra {} failed validation", spec))?;
    Ok(b)
}

fn yes_no(b: bool) -> String {
    if b { "true" } else { "false" }.into()
}

pub fn validate_frobenius(spec: &str) -> Result<Report> {
    let b = algebra::load(spec)?;
    let report = validate(&b);
    let rows = report
        .checks
        .iter()
        .map(|c| {
            let witness = c.witness.map(|(i, j, k)| format!("({}, {}, {})", i, j, k)).unwrap_or_default();
            vec![c.name.to_string(), if c.passed { "PASS" } else { "FAIL" }.into(), witness, c.detail.clone()]
        })
        .collect();
    let header = ["check", "status", "witness", "detail"].map(String::from).to_vec();
    let mut r = Report::new(Body::Table { header, rows })
        .note(format!("{}: dimension {}, top degree {}, super dimension {}", b.name(), b.dim(), report.top_degree, b.super_dim()));
    if report.passed() && report.top_degree == 0 {
        r = r.note("top degree 0: the degree-zero projection is undefined; pair and gram-matrix fall back to the constant term, and eval-diagram reports the polynomial only");
    }
    r.ok = report.passed();
    Ok(r)
}

pub fn pair(spec: &str, lambda: &Partition, mu: &Partition, transcript: bool) -> Result<Report> {
    let b = checked(spec)?;
    let x = p_class(lambda, Sign::Plus, &b)?;
    let y = p_class(mu, Sign::Plus, &b)?;
    let res = pair_with(&x, &y, &b, transcript)?;
    let mut r = Report::new(Body::Scalar(fmt_rational(&res.value)));
    r.transcript = res.transcript;
    Ok(r)
}

pub fn oracle_pair(spec: &str, lambda: &Partition, mu: &Partition) -> Result<Report> {
    let b = checked(spec)?;
    let lattice = Lattice::of_algebra(&b);
    let graded = pair_pp(lambda, mu, &lattice)?;
    let value = jack_pair_via_lattice(lambda, mu, &lattice)?;
    Ok(Report::new(Body::Record(vec![("graded".into(), graded.to_string()), ("value".into(), fmt_rational(&value))])))
}

pub fn gram_matrix(spec: &str, max_degree: usize) -> Result<Report> {
    let b = checked(spec)?;
    let labels = gram_labels(max_degree);
    let cells: Vec<(usize, usize)> = (0..labels.len()).flat_map(|i| (0..labels.len()).map(move |j| (i, j))).collect();
    let values = cells
        .par_iter()
        .map(|&(i, j)| pair_partitions(&labels[i], &labels[j], &b).map(|v| fmt_rational(&v)))
        .collect::<Result<Vec<_>, _>>()?;
    let n = labels.len();
    let cells = values.chunks(n.max(1)).map(|c| c.to_vec()).collect();
    Ok(Report::new(Body::Matrix { labels: labels.iter().map(|l| l.to_string()).collect(), cells }))
}

pub fn verify_presentations(spec: &str, kind: PresentationKind, bound: usize) -> Result<Report> {
    let b = checked(spec)?;
    let lattice = Lattice::of_algebra(&b);
    let pairs: Vec<(usize, usize)> = (0..=bound).flat_map(|n| (0..=bound).map(move |m| (n, m))).collect();
    let holds = pairs
        .par_iter()
        .map(|&(n, m)| verify_presentation_pair(kind, &lattice, n, m))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = pairs.iter().zip(&holds).map(|(&(n, m), &h)| vec![n.to_string(), m.to_string(), yes_no(h)]).collect();
    let mut r = Report::new(Body::Table { header: ["n", "m", "holds"].map(String::from).to_vec(), rows });
    r.ok = holds.iter().all(|&h| h);
    Ok(r)
}

pub fn macdonald_dims(k: usize) -> Result<Report> {
    let rows = (0..=k)
        .into_par_iter()
        .map(|j| {
            let sym = macdonald_sym_closed_form(j)?;
            let ext = macdonald_ext_closed_form(j)?;
            let sym_ok = rf_equal(&sym, &macdonald_generating_coefficient(j, false)?)?;
            let ext_ok = rf_equal(&ext, &macdonald_generating_coefficient(j, true)?)?;
            Ok((vec![j.to_string(), sym.to_string(), ext.to_string(), yes_no(sym_ok), yes_no(ext_ok)], sym_ok && ext_ok))
        })
        .collect::<Result<Vec<_>>>()?;
    let ok = rows.iter().all(|r| r.1);
    let header = ["k", "sym", "ext", "sym_matches", "ext_matches"].map(String::from).to_vec();
    let mut r = Report::new(Body::Table { header, rows: rows.into_iter().map(|r| r.0).collect() });
    r.ok = ok;
    Ok(r)
}

pub fn jack_limit_check(k: u32, bound: u32) -> Result<Report> {
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 1..=bound {
        let f = jack_limit_factor(k, n)?;
        let at_one = eval_1_neg1(&f);
        let holds = at_one == rat(i64::from(k));
        ok &= holds;
        rows.push(vec![n.to_string(), f.to_string(), fmt_rational(&at_one), yes_no(holds)]);
    }
    let mut r = Report::new(Body::Table { header: ["n", "factor", "at_q1", "equals_k"].map(String::from).to_vec(), rows });
    r.ok = ok;
    Ok(r)
}

pub fn eval_diagram(spec: &str, file: &Path, transcript: bool) -> Result<Report> {
    let b = checked(spec)?;
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let d: DiagramWord = text.parse().map_err(|e: EngineError| UsageError(format!("{}: {}", file.display(), e)))?;
    let mut engine = Engine::new(&b)?;
    if transcript {
        engine = engine.with_transcript();
    }
    let combo = engine.normalize(&d)?;
    let value = match f0(&combo) {
        Ok(v) => fmt_rational(&v),
        Err(EngineError::ZeroTopDegree) => "undefined (top degree 0)".into(),
        Err(e) => return Err(e.into()),
    };
    let mut r = Report::new(Body::Record(vec![("combo".into(), combo.to_string()), ("f0".into(), value)]));
    r.transcript = transcript.then(|| engine.transcript());
    Ok(r)
}

pub fn center_basis(max_n: usize) -> Result<Report> {
    let b = field();
    let sig = Engine::new(&b)?.signature();
    let one = CenterCombo::scalar(sig, rat(1));
    let parts: Vec<Partition> = partitions_up_to(max_n).into_iter().filter(|l| !l.is_empty()).collect();
    let rows = parts
        .par_iter()
        .map(|l| {
            let c = act_on_center(&p_class(l, Sign::Plus, &b)?, &one, &b)?;
            let (w, lead) = filtration_leading(&c);
            Ok(vec![l.to_string(), c.to_string(), w.to_string(), lead.to_string()])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(Body::Table { header: ["lambda", "expansion", "weight", "leading"].map(String::from).to_vec(), rows }))
}

pub fn phi(spec: &str, lambda: &Partition, basis: SymBasis) -> Result<Report> {
    let b = checked(spec)?;
    let image = phi_b(&p_class(lambda, Sign::Plus, &b)?, &b)?;
    Ok(Report::new(Body::Scalar(convert(&image, basis)?.to_string())))
}
