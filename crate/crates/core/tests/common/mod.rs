//! Random closed diagrams and the moves applied to them.
#![allow(dead_code)]

use jackdiag_core::diagram_engine::mutate::{insert_zigzag, swap_dots};
use jackdiag_core::diagram_engine::{Block, DiagramWord, Event};
use jackdiag_core::frobenius::FrobAlgebra;
use proptest::prelude::*;

pub const TRUNC: &[&str] = &["1", "x", "x^2"];
pub const SURF: &[&str] = &["1", "a1", "a2", "t"];

pub fn events(n: usize, labels: &'static [&'static str], curls: bool) -> impl Strategy<Value = Vec<Event>> {
    let ev = (0..4usize, 0..n, 0..labels.len()).prop_map(move |(kind, p, l)| match kind {
        0 if n > 1 => Event::Cross(p.min(n - 2)),
        1 if curls => Event::Curl(p),
        _ => Event::Dot(p, labels[l].to_string()),
    });
    prop::collection::vec(ev, 0..5).prop_map(|mut v| {
        let mut seen = 0;
        v.retain(|e| {
            if matches!(e, Event::Curl(_)) {
                seen += 1;
                seen <= 1
            } else {
                true
            }
        });
        v
    })
}

pub fn leaf(labels: &'static [&'static str]) -> impl Strategy<Value = Block> {
    (1..=2usize, any::<bool>()).prop_flat_map(move |(n, is_up)| {
        events(n, labels, is_up).prop_map(move |events| {
            if is_up {
                Block::Up { n, events, inner: vec![] }
            } else {
                Block::Down { n, events, inner: vec![] }
            }
        })
    })
}

pub fn tree(labels: &'static [&'static str]) -> impl Strategy<Value = Vec<Block>> {
    let nested = (1..=2usize, any::<bool>(), leaf(labels)).prop_flat_map(move |(n, is_up, inner)| {
        events(n, labels, is_up).prop_map(move |events| {
            let inner = vec![inner.clone()];
            if is_up {
                Block::Up { n, events, inner }
            } else {
                Block::Down { n, events, inner }
            }
        })
    });
    prop::collection::vec(prop_oneof![leaf(labels), nested], 1..=2)
        .prop_filter("at most six strands", |b| strands(b) <= 3)
}

pub fn strands(b: &[Block]) -> usize {
    b.iter()
        .map(|x| match x {
            Block::Up { n, inner, .. } | Block::Down { n, inner, .. } => n + strands(inner),
        })
        .sum()
}

/// Apply the seeded R3/R12 moves; returns the word and whether it equals the original negated.
pub fn mutate(d: &DiagramWord, b: &FrobAlgebra, seeds: &[(u8, usize, usize, bool)]) -> (DiagramWord, bool) {
    let mut w = d.clone();
    let mut neg = false;
    for &(kind, a, p, right) in seeds {
        let len = w.slices().len();
        if kind % 2 == 0 {
            if let Some((next, flip)) = swap_dots(&w, a % len.max(1), b).unwrap() {
                w = next;
                neg ^= flip;
            }
        } else {
            let k = a % (len + 1);
            let width = w.strands_at(k).len();
            if width > 0 {
                w = insert_zigzag(&w, k, p % width, right).unwrap();
            }
        }
    }
    (w, neg)
}
