//! Block trees rendered as slice words.

use alloc::string::String;
use alloc::vec::Vec;

use super::{DiagramWord, EngineError, Generator};

/// An event on the strands of a closure, numbered from the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Event {
    Dot(usize, String),
    Cross(usize),
    /// Right curl.
    Curl(usize),
}

/// `n` strands closed to the right around the blocks in `inner`.
/// Up strands close clockwise, down strands counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Block {
    Up { n: usize, events: Vec<Event>, inner: Vec<Block> },
    Down { n: usize, events: Vec<Event>, inner: Vec<Block> },
}

fn ids(up: bool, k: usize) -> impl Iterator<Item = Generator> {
    core::iter::repeat_n(if up { Generator::IdUp } else { Generator::IdDown }, k)
}

fn padded(up: bool, left: usize, mid: Vec<Generator>, right: usize, n: usize) -> Vec<Generator> {
    ids(up, left).chain(mid).chain(ids(up, right)).chain(ids(!up, n)).collect()
}

fn block_slices(b: &Block, out: &mut Vec<Vec<Generator>>) -> Result<(), EngineError> {
    let (up, n, events, inner) = match b {
        Block::Up { n, events, inner } => (true, *n, events, inner),
        Block::Down { n, events, inner } => (false, *n, events, inner),
    };
    if n == 0 {
        return Err(EngineError::Precondition("a closure needs at least one strand".into()));
    }
    let (cup, cap, cross) = if up {
        (Generator::CupLeft, Generator::CapRight, Generator::CrossUU)
    } else {
        (Generator::CupRight, Generator::CapLeft, Generator::CrossDD)
    };
    for k in 0..n {
        out.push(ids(up, k).chain([cup.clone()]).chain(ids(!up, k)).collect());
    }
    let mut inner_slices = Vec::new();
    slices_of(inner, &mut inner_slices)?;
    for s in inner_slices {
        out.push(ids(up, n).chain(s).chain(ids(!up, n)).collect());
    }
    for ev in events {
        let p = match ev {
            Event::Dot(p, _) | Event::Curl(p) => *p,
            Event::Cross(p) => *p + 1,
        };
        if p >= n {
            return Err(EngineError::Precondition("event outside the closure strands".into()));
        }
        match ev {
            Event::Dot(p, label) => {
                out.push(padded(up, *p, [Generator::Dot { label: label.clone(), up }].into(), n - p - 1, n));
            }
            Event::Cross(p) => out.push(padded(up, *p, [cross.clone()].into(), n - p - 2, n)),
            Event::Curl(p) => {
                if up {
                    out.push(padded(up, p + 1, [Generator::CupLeft].into(), n - p - 1, n));
                    out.push(padded(up, *p, [Generator::CrossUU, Generator::IdDown].into(), n - p - 1, n));
                    out.push(padded(up, *p, [Generator::IdUp, Generator::CapRight].into(), n - p - 1, n));
                } else {
                    out.push(padded(up, *p, [Generator::CupLeft, Generator::IdDown].into(), n - p - 1, n));
                    out.push(padded(up, *p, [Generator::IdUp, Generator::CrossDD].into(), n - p - 1, n));
                    out.push(padded(up, *p, [Generator::CapRight, Generator::IdDown].into(), n - p - 1, n));
                }
            }
        }
    }
    for k in (0..n).rev() {
        out.push(ids(up, k).chain([cap.clone()]).chain(ids(!up, k)).collect());
    }
    Ok(())
}

fn slices_of(blocks: &[Block], out: &mut Vec<Vec<Generator>>) -> Result<(), EngineError> {
    for b in blocks.iter().rev() {
        block_slices(b, out)?;
    }
    Ok(())
}

/// Juxtaposed blocks, leftmost first; the leftmost block is drawn highest.
pub fn build(blocks: &[Block]) -> Result<DiagramWord, EngineError> {
    let mut slices = Vec::new();
    slices_of(blocks, &mut slices)?;
    DiagramWord::new(Vec::new(), slices)
}
