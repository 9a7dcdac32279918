//! Closed planar diagrams as slice words, reduced to polynomials in clockwise circles.
//!
//! A diagram is a list of horizontal slices read bottom to top. The text form lists
//! slices separated by `;` or newlines, e.g. `cupL; dotU(x):0 idU; capR`. A generator
//! may carry `:p`, the number of strands to its left; strands not mentioned are
//! identities.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::str::FromStr;

use crate::frobenius::{FrobAlgebra, FrobError};

mod build;
mod closure;
mod combo;
pub mod mutate;
mod recognize;

pub use build::{build, Block, Event};
pub use closure::ClosureElem;
pub use combo::{f0, CGen, CenterCombo, Signature};

use crate::coeff_ring::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("slice {slice}: {msg}")]
    Parse { slice: usize, msg: String },
    #[error("diagram has open boundary")]
    NotClosed,
    #[error("unsupported diagram: {0}")]
    Unsupported(String),
    #[error("inconsistent diagram: {0}")]
    Inconsistent(String),
    #[error("top degree is 0, so the degree-zero projection is undefined; use center_expand")]
    ZeroTopDegree,
    #[error("this operation needs the field algebra")]
    NotField,
    #[error("algebra is not supercommutative")]
    NotSupercommutative,
    #[error("slice {0} holds more than one odd dot")]
    OddDotsAtSameHeight(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Frob(#[from] FrobError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    fn letter(self) -> char {
        match self {
            Orient::Up => 'U',
            Orient::Down => 'D',
        }
    }
}

use Orient::{Down, Up};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    IdUp,
    IdDown,
    CrossUU,
    CrossDD,
    /// Bottom `↑↓`, top `↓↑`.
    CrossUD,
    /// Bottom `↓↑`, top `↑↓`.
    CrossDU,
    /// `∅ → ↓↑`.
    CupRight,
    /// `∅ → ↑↓`.
    CupLeft,
    /// `↑↓ → ∅`.
    CapRight,
    /// `↓↑ → ∅`.
    CapLeft,
    Dot { label: String, up: bool },
    /// Shorthand for a curl on one strand; `right` curls survive, left curls vanish.
    Curl { up: bool, right: bool },
}

impl Generator {
    pub fn input(&self) -> Vec<Orient> {
        match self {
            Generator::IdUp | Generator::Dot { up: true, .. } | Generator::Curl { up: true, .. } => vec![Up],
            Generator::IdDown | Generator::Dot { up: false, .. } | Generator::Curl { up: false, .. } => vec![Down],
            Generator::CrossUU => vec![Up, Up],
            Generator::CrossDD => vec![Down, Down],
            Generator::CrossUD | Generator::CapRight => vec![Up, Down],
            Generator::CrossDU | Generator::CapLeft => vec![Down, Up],
            Generator::CupRight | Generator::CupLeft => vec![],
        }
    }

    pub fn output(&self) -> Vec<Orient> {
        match self {
            Generator::CrossUD | Generator::CupRight => vec![Down, Up],
            Generator::CrossDU | Generator::CupLeft => vec![Up, Down],
            Generator::CapRight | Generator::CapLeft => vec![],
            _ => self.input(),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Generator::IdUp | Generator::IdDown)
    }

    /// `(Z-degree, odd)` given the top degree `delta`.
    pub fn degree(&self, b: &FrobAlgebra) -> Result<(i64, bool), EngineError> {
        let delta = i64::from(b.top_degree());
        Ok(match self {
            Generator::CupLeft => (delta, false),
            Generator::CapLeft => (-delta, false),
            Generator::Curl { right: true, .. } => (delta, false),
            Generator::Curl { right: false, .. } => (-delta, false),
            Generator::Dot { label, .. } => {
                let i = b.index_of(label)?;
                (i64::from(b.degree(i)), b.is_odd(i))
            }
            _ => (0, false),
        })
    }

    fn token(&self) -> String {
        match self {
            Generator::IdUp => "idU".into(),
            Generator::IdDown => "idD".into(),
            Generator::CrossUU => "crossUU".into(),
            Generator::CrossDD => "crossDD".into(),
            Generator::CrossUD => "crossUD".into(),
            Generator::CrossDU => "crossDU".into(),
            Generator::CupRight => "cupR".into(),
            Generator::CupLeft => "cupL".into(),
            Generator::CapRight => "capR".into(),
            Generator::CapLeft => "capL".into(),
            Generator::Dot { label, up } => format!("dot{}({})", if *up { 'U' } else { 'D' }, label),
            Generator::Curl { up, right } => {
                format!("{}curl{}", if *right { "" } else { "l" }, if *up { 'U' } else { 'D' })
            }
        }
    }
}

/// Slices of generators, bottom to top; each slice covers every strand at its height.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagramWord {
    bottom: Vec<Orient>,
    slices: Vec<Vec<Generator>>,
}

impl DiagramWord {
    /// Checks that consecutive slices compose.
    pub fn new(bottom: Vec<Orient>, slices: Vec<Vec<Generator>>) -> Result<Self, EngineError> {
        let mut cur = bottom.clone();
        for (k, slice) in slices.iter().enumerate() {
            let input: Vec<Orient> = slice.iter().flat_map(|g| g.input()).collect();
            if input != cur {
                return Err(EngineError::Parse { slice: k, msg: "slice does not match the strands below".into() });
            }
            cur = slice.iter().flat_map(|g| g.output()).collect();
        }
        Ok(DiagramWord { bottom, slices })
    }

    pub fn empty() -> Self {
        DiagramWord { bottom: Vec::new(), slices: Vec::new() }
    }

    pub fn bottom(&self) -> &[Orient] {
        &self.bottom
    }

    pub fn top(&self) -> Vec<Orient> {
        match self.slices.last() {
            None => self.bottom.clone(),
            Some(s) => s.iter().flat_map(|g| g.output()).collect(),
        }
    }

    pub fn slices(&self) -> &[Vec<Generator>] {
        &self.slices
    }

    pub fn is_closed(&self) -> bool {
        self.bottom.is_empty() && self.top().is_empty()
    }

    /// Orientations of the strands below slice `k` (`k = len` gives the top).
    pub fn strands_at(&self, k: usize) -> Vec<Orient> {
        if k == 0 {
            return self.bottom.clone();
        }
        self.slices[k - 1].iter().flat_map(|g| g.output()).collect()
    }

    /// Stack `other` on top of `self`.
    pub fn then(&self, other: &DiagramWord) -> Result<DiagramWord, EngineError> {
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().cloned());
        DiagramWord::new(self.bottom.clone(), slices)
    }

    /// Parse with the given bottom boundary.
    pub fn parse_with_bottom(text: &str, bottom: Vec<Orient>) -> Result<Self, EngineError> {
        let mut cur = bottom.clone();
        let mut slices = Vec::new();
        let lines = text.lines().map(|l| l.split('#').next().unwrap_or(""));
        for chunk in lines.flat_map(|l| l.split(';')) {
            if chunk.trim().is_empty() {
                continue;
            }
            let k = slices.len();
            let slice = parse_slice(chunk, &cur).map_err(|msg| EngineError::Parse { slice: k, msg })?;
            cur = slice.iter().flat_map(|g| g.output()).collect();
            slices.push(slice);
        }
        DiagramWord::new(bottom, slices)
    }
}

fn parse_token(tok: &str) -> Result<(Generator, Option<usize>), String> {
    let (body, pos) = match tok.rfind(':') {
        Some(i) if !tok[i..].contains(')') => {
            let p = tok[i + 1..].parse::<usize>().map_err(|_| format!("bad position in `{}`", tok))?;
            (&tok[..i], Some(p))
        }
        _ => (tok, None),
    };
    let (name, label) = match body.find('(') {
        Some(i) => {
            if !body.ends_with(')') {
                return Err(format!("unclosed label in `{}`", tok));
            }
            (&body[..i], Some(body[i + 1..body.len() - 1].trim().to_string()))
        }
        None => (body, None),
    };
    let g = match (name, label) {
        ("idU", None) | ("id", None) => Generator::IdUp,
        ("idD", None) => Generator::IdDown,
        ("crossUU", None) => Generator::CrossUU,
        ("crossDD", None) => Generator::CrossDD,
        ("crossUD", None) => Generator::CrossUD,
        ("crossDU", None) => Generator::CrossDU,
        ("cupR", None) => Generator::CupRight,
        ("cupL", None) => Generator::CupLeft,
        ("capR", None) => Generator::CapRight,
        ("capL", None) => Generator::CapLeft,
        ("curlU", None) => Generator::Curl { up: true, right: true },
        ("curlD", None) => Generator::Curl { up: false, right: true },
        ("lcurlU", None) => Generator::Curl { up: true, right: false },
        ("lcurlD", None) => Generator::Curl { up: false, right: false },
        ("dotU", Some(l)) if !l.is_empty() => Generator::Dot { label: l, up: true },
        ("dotD", Some(l)) if !l.is_empty() => Generator::Dot { label: l, up: false },
        _ => return Err(format!("unknown generator `{}`", tok)),
    };
    Ok((g, pos))
}

fn parse_slice(chunk: &str, cur: &[Orient]) -> Result<Vec<Generator>, String> {
    let mut out = Vec::new();
    let mut cursor = 0;
    let pad = |out: &mut Vec<Generator>, from: usize, to: usize| {
        for o in &cur[from..to] {
            out.push(if *o == Up { Generator::IdUp } else { Generator::IdDown });
        }
    };
    for tok in chunk.split_whitespace() {
        let (g, pos) = parse_token(tok)?;
        let p = pos.unwrap_or(cursor);
        if p < cursor || p > cur.len() {
            return Err(format!("position {} of `{}` is out of order or out of range", p, tok));
        }
        pad(&mut out, cursor, p);
        if g.is_identity() {
            // identity tokens take the orientation of the strand they cover
            let o = *cur.get(p).ok_or_else(|| format!("`{}` has no strand to cover", tok))?;
            out.push(if o == Up { Generator::IdUp } else { Generator::IdDown });
            cursor = p + 1;
            continue;
        }
        let input = g.input();
        if cur.len() < p + input.len() || cur[p..p + input.len()] != input[..] {
            return Err(format!("`{}` does not fit the strands at position {}", tok, p));
        }
        cursor = p + input.len();
        out.push(g);
    }
    pad(&mut out, cursor, cur.len());
    Ok(out)
}

impl FromStr for DiagramWord {
    type Err = EngineError;

    /// Parse a closed-bottom diagram.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DiagramWord::parse_with_bottom(s, Vec::new())
    }
}

impl fmt::Display for DiagramWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.bottom.is_empty() {
            let b: String = self.bottom.iter().map(|o| o.letter()).collect();
            writeln!(f, "# bottom {}", b)?;
        }
        for (k, slice) in self.slices.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            let toks: Vec<String> = slice.iter().map(|g| g.token()).collect();
            f.write_str(&toks.join(" "))?;
        }
        Ok(())
    }
}

/// Sum of generator degrees.
pub fn degree_of(d: &DiagramWord, b: &FrobAlgebra) -> Result<(i64, bool), EngineError> {
    let mut deg = 0;
    let mut odd = false;
    for g in d.slices.iter().flatten() {
        let (z, p) = g.degree(b)?;
        deg += z;
        odd ^= p;
    }
    Ok((deg, odd))
}

pub use closure::Engine;

/// Reduce a closed diagram to a polynomial in clockwise circles.
pub fn normalize(d: &DiagramWord, b: &FrobAlgebra) -> Result<CenterCombo, EngineError> {
    Engine::new(b)?.normalize(d)
}

/// Full reduction over the field algebra, as a polynomial in the `c_k`.
pub fn center_expand(d: &DiagramWord, b: &FrobAlgebra) -> Result<CenterCombo, EngineError> {
    if b.dim() != 1 || b.top_degree() != 0 {
        return Err(EngineError::NotField);
    }
    Engine::new(b)?.normalize(d)
}

/// Trade the lowest right curl on the rightmost strand of an up-strand closure for a new strand.
pub fn curl_to_strand(d: &DiagramWord) -> Result<DiagramWord, EngineError> {
    let blocks = recognize::recognize_blocks(d)?;
    let [block] = &blocks[..] else {
        return Err(EngineError::Precondition("expected the closure of a single up-strand diagram".into()));
    };
    let Block::Up { n, events, inner } = block else {
        return Err(EngineError::Precondition("expected up strands closed to the right".into()));
    };
    if !inner.is_empty() {
        return Err(EngineError::Precondition("closure has nested components".into()));
    }
    let at = events
        .iter()
        .position(|e| matches!(e, Event::Curl(p) if *p + 1 == *n))
        .ok_or_else(|| EngineError::Precondition("no right curl on the rightmost strand".into()))?;
    let mut events = events.clone();
    events[at] = Event::Cross(n - 1);
    build(&[Block::Up { n: n + 1, events, inner: Vec::new() }])
}

/// One-line summary of a rational for transcripts.
pub(crate) fn show(r: &Rational) -> String {
    crate::coeff_ring::fmt_rational(r)
}
