//! Local moves that preserve a diagram up to sign.

use alloc::vec::Vec;

use super::{DiagramWord, EngineError, Generator, Orient};
use crate::frobenius::FrobAlgebra;

fn identity_for(o: Orient) -> Generator {
    match o {
        Orient::Up => Generator::IdUp,
        Orient::Down => Generator::IdDown,
    }
}

fn slice_with(cur: &[Orient], pos: usize, g: Generator) -> Vec<Generator> {
    let consumed = g.input().len();
    let mut s: Vec<Generator> = cur[..pos].iter().map(|&o| identity_for(o)).collect();
    s.push(g);
    s.extend(cur[pos + consumed..].iter().map(|&o| identity_for(o)));
    s
}

/// The strand carrying the only dot of a slice, with its label.
fn lone_dot(slice: &[Generator]) -> Option<(usize, &str)> {
    let mut found = None;
    for (p, g) in slice.iter().enumerate() {
        match g {
            Generator::IdUp | Generator::IdDown => {}
            Generator::Dot { label, .. } if found.is_none() => found = Some((p, label.as_str())),
            _ => return None,
        }
    }
    found
}

/// Exchange slices `k` and `k + 1` when each holds one dot and the dots sit on different strands.
/// Returns the new word and whether it equals the old one negated.
pub fn swap_dots(d: &DiagramWord, k: usize, b: &FrobAlgebra) -> Result<Option<(DiagramWord, bool)>, EngineError> {
    let slices = d.slices();
    if k + 1 >= slices.len() {
        return Ok(None);
    }
    let (Some((p, l1)), Some((q, l2))) = (lone_dot(&slices[k]), lone_dot(&slices[k + 1])) else {
        return Ok(None);
    };
    if p == q {
        return Ok(None);
    }
    let neg = b.is_odd(b.index_of(l1)?) && b.is_odd(b.index_of(l2)?);
    let mut s = slices.to_vec();
    s.swap(k, k + 1);
    Ok(Some((DiagramWord::new(d.bottom().to_vec(), s)?, neg)))
}

/// Insert a zig-zag on strand `p` just below slice `k`, bending to the right or to the left.
pub fn insert_zigzag(d: &DiagramWord, k: usize, p: usize, right: bool) -> Result<DiagramWord, EngineError> {
    let cur = d.strands_at(k);
    let o = *cur.get(p).ok_or_else(|| EngineError::Precondition("no strand at that position".into()))?;
    let (cup, gap, cap, at) = match (o, right) {
        (Orient::Up, true) => (Generator::CupRight, p + 1, Generator::CapRight, p),
        (Orient::Up, false) => (Generator::CupLeft, p, Generator::CapLeft, p + 1),
        (Orient::Down, true) => (Generator::CupLeft, p + 1, Generator::CapLeft, p),
        (Orient::Down, false) => (Generator::CupRight, p, Generator::CapRight, p + 1),
    };
    let first = slice_with(&cur, gap, cup);
    let mid: Vec<Orient> = first.iter().flat_map(|g| g.output()).collect();
    let second = slice_with(&mid, at, cap);
    let mut s = d.slices().to_vec();
    s.splice(k..k, [first, second]);
    DiagramWord::new(d.bottom().to_vec(), s)
}
