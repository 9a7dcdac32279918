//! Command results and their text, TSV and JSON renderings.

use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Body {
    Scalar(String),
    Record(Vec<(String, String)>),
    Table { header: Vec<String>, rows: Vec<Vec<String>> },
    /// Square matrix with partition labels on both axes.
    Matrix { labels: Vec<String>, cells: Vec<Vec<String>> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: Body,
    pub notes: Vec<String>,
    pub transcript: Option<Vec<String>>,
    /// `false` when a check ran to completion and failed.
    pub ok: bool,
}

impl Report {
    pub fn new(body: Body) -> Self {
        Report { body, notes: Vec::new(), transcript: None, ok: true }
    }

    pub fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }
}

fn tsv_line(cells: &[String]) -> String {
    let mut s = cells.join("\t");
    s.push('\n');
    s
}

fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{:<w$}", c, w = *w)).collect();
        let mut s = padded.join("  ").trim_end().to_string();
        s.push('\n');
        s
    };
    let mut out = line(header);
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

fn json_body(body: &Body) -> Value {
    match body {
        Body::Scalar(v) => json!({ "value": v }),
        Body::Record(kv) => Value::Object(kv.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect()),
        Body::Table { header, rows } => Value::Array(
            rows.iter()
                .map(|r| Value::Object(header.iter().cloned().zip(r.iter().map(|c| Value::String(c.clone()))).collect()))
                .collect(),
        ),
        Body::Matrix { labels, cells } => json!({ "labels": labels, "cells": cells }),
    }
}

/// Everything destined for stdout (or `--out`).
pub fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut top = Map::new();
            top.insert("ok".into(), Value::Bool(r.ok));
            top.insert("result".into(), json_body(&r.body));
            if !r.notes.is_empty() {
                top.insert("notes".into(), json!(r.notes));
            }
            if let Some(t) = &r.transcript {
                top.insert("transcript".into(), json!(t));
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Tsv => match &r.body {
            Body::Scalar(v) => format!("value\n{}\n", v),
            Body::Record(kv) => {
                let (k, v): (Vec<String>, Vec<String>) = kv.iter().cloned().unzip();
                tsv_line(&k) + &tsv_line(&v)
            }
            Body::Table { header, rows } => {
                let mut s = tsv_line(header);
                rows.iter().for_each(|row| s.push_str(&tsv_line(row)));
                s
            }
            Body::Matrix { .. } => matrix_tsv(&r.body),
        },
        Format::Text => {
            let mut s = match &r.body {
                Body::Scalar(v) => format!("{}\n", v),
                Body::Record(kv) => kv.iter().map(|(k, v)| format!("{}: {}\n", k, v)).collect(),
                Body::Table { header, rows } => aligned(header, rows),
                Body::Matrix { .. } => matrix_tsv(&r.body),
            };
            for n in &r.notes {
                s.push_str(&format!("note: {}\n", n));
            }
            s
        }
    }
}

fn matrix_tsv(body: &Body) -> String {
    let Body::Matrix { labels, cells } = body else { unreachable!() };
    let mut head = vec![String::new()];
    head.extend(labels.iter().cloned());
    let mut s = tsv_line(&head);
    for (l, row) in labels.iter().zip(cells) {
        let mut line = vec![l.clone()];
        line.extend(row.iter().cloned());
        s.push_str(&tsv_line(&line));
    }
    s
}
