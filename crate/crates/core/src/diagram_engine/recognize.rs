//! Local rewrites bringing a slice word into plat form, and its decomposition into closures.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_traits::{One, Zero};

use super::build::{Block, Event};
use super::{DiagramWord, EngineError, Generator, Orient};
use crate::coeff_ring::Rational;

/// Reduction log, collected only when enabled.
#[derive(Debug, Default)]
pub(crate) struct Transcript {
    pub lines: Option<Vec<String>>,
}

impl Transcript {
    pub fn note<F: FnOnce() -> String>(&mut self, f: F) {
        if let Some(l) = self.lines.as_mut() {
            l.push(f());
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct DotInfo {
    pub label: String,
    /// Geometric height; larger is higher.
    pub height: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Cross(Orient, Orient),
    /// `true` for `cupL`.
    Cup(bool),
    /// `true` for `capL`.
    Cap(bool),
    Dot(usize),
    /// Right curl; `true` on an up strand.
    Curl(bool),
}

#[derive(Debug, Clone)]
struct Step {
    kind: Kind,
    pos: usize,
    height: i64,
}

impl Step {
    fn arity(&self) -> (usize, usize) {
        match self.kind {
            Kind::Cross(..) => (2, 2),
            Kind::Cup(_) => (0, 2),
            Kind::Cap(_) => (2, 0),
            Kind::Dot(_) | Kind::Curl(_) => (1, 1),
        }
    }

    fn is_cup(&self) -> bool {
        matches!(self.kind, Kind::Cup(_))
    }

    fn is_cap(&self) -> bool {
        matches!(self.kind, Kind::Cap(_))
    }

    fn shifted(&self, by: isize) -> Step {
        Step { pos: (self.pos as isize + by) as usize, ..self.clone() }
    }
}

/// Exchange `a` (lower) with `b` (upper) when they touch disjoint strands.
/// A cup meeting a cap at the same gap passes to its left.
fn commute(a: &Step, b: &Step) -> Option<(Step, Step)> {
    let (ain, aout) = a.arity();
    let (bin, bout) = b.arity();
    if b.pos + bin <= a.pos {
        Some((b.clone(), a.shifted(bout as isize - bin as isize)))
    } else if b.pos >= a.pos + aout {
        Some((b.shifted(-(aout as isize - ain as isize)), a.clone()))
    } else {
        None
    }
}

#[derive(Debug, Clone)]
pub(crate) enum REv {
    Dot(usize, usize),
    Cross(usize),
    Curl(usize),
}

#[derive(Debug, Clone)]
pub(crate) struct RBlock {
    pub up: bool,
    pub n: usize,
    /// Main-strand events bottom to top, followed by the events moved in from the return legs.
    pub events: Vec<REv>,
    pub inner: Vec<RBlock>,
}

pub(crate) struct Recognized {
    pub dots: Vec<DotInfo>,
    pub terms: Vec<(Rational, Vec<RBlock>)>,
}

fn to_steps(d: &DiagramWord, dots: &mut Vec<DotInfo>) -> Result<Option<Vec<Step>>, EngineError> {
    let mut steps = Vec::new();
    for (k, slice) in d.slices().iter().enumerate() {
        let height = 8 * k as i64 + 4;
        // positions shift as earlier generators in the slice change the strand count
        let mut pos = 0usize;
        for g in slice {
            let kind = match g {
                Generator::IdUp | Generator::IdDown => None,
                Generator::CrossUU => Some(Kind::Cross(Orient::Up, Orient::Up)),
                Generator::CrossDD => Some(Kind::Cross(Orient::Down, Orient::Down)),
                Generator::CrossUD => Some(Kind::Cross(Orient::Up, Orient::Down)),
                Generator::CrossDU => Some(Kind::Cross(Orient::Down, Orient::Up)),
                Generator::CupLeft => Some(Kind::Cup(true)),
                Generator::CupRight => Some(Kind::Cup(false)),
                Generator::CapLeft => Some(Kind::Cap(true)),
                Generator::CapRight => Some(Kind::Cap(false)),
                Generator::Dot { label, .. } => {
                    dots.push(DotInfo { label: label.clone(), height });
                    Some(Kind::Dot(dots.len() - 1))
                }
                Generator::Curl { right: false, .. } => return Ok(None),
                Generator::Curl { up, right: true } => Some(Kind::Curl(*up)),
            };
            if let Some(kind) = kind {
                steps.push(Step { kind, pos, height });
            }
            pos += g.output().len();
        }
    }
    Ok(Some(steps))
}

enum Rewrite {
    Remove(usize, usize),
    Curl(usize, Step),
    Zero,
    DownUp(usize),
}

fn find_rewrite(steps: &[Step]) -> Option<(Rewrite, &'static str)> {
    for i in 0..steps.len().saturating_sub(1) {
        let (a, b) = (&steps[i], &steps[i + 1]);
        match (&a.kind, &b.kind) {
            (Kind::Cup(_), Kind::Cap(_)) if b.pos == a.pos + 1 || b.pos + 1 == a.pos => {
                return Some((Rewrite::Remove(i, 2), "R12 zig-zag"));
            }
            (Kind::Cross(x, y), Kind::Cross(u, v)) if a.pos == b.pos => match (x, y, u, v) {
                (Orient::Up, Orient::Up, _, _) | (Orient::Down, Orient::Down, _, _) => {
                    return Some((Rewrite::Remove(i, 2), "R7 double crossing"))
                }
                (Orient::Up, Orient::Down, _, _) => return Some((Rewrite::Remove(i, 2), "R9 up-down double crossing")),
                (Orient::Down, Orient::Up, _, _) => return Some((Rewrite::DownUp(i), "R8 down-up double crossing")),
            },
            _ => {}
        }
        if i + 2 < steps.len() {
            let c = &steps[i + 2];
            let p = b.pos;
            let found = match (&a.kind, &b.kind, &c.kind) {
                (Kind::Cup(true), Kind::Cross(Orient::Up, Orient::Up), Kind::Cap(false))
                    if a.pos == p + 1 && c.pos == p + 1 =>
                {
                    Some(Rewrite::Curl(i, Step { kind: Kind::Curl(true), pos: p, height: b.height }))
                }
                (Kind::Cup(true), Kind::Cross(Orient::Down, Orient::Down), Kind::Cap(false))
                    if p >= 1 && a.pos == p - 1 && c.pos == p - 1 =>
                {
                    Some(Rewrite::Curl(i, Step { kind: Kind::Curl(false), pos: p - 1, height: b.height }))
                }
                (Kind::Cup(false), Kind::Cross(Orient::Up, Orient::Up), Kind::Cap(true))
                    if p >= 1 && a.pos == p - 1 && c.pos == p - 1 =>
                {
                    Some(Rewrite::Zero)
                }
                (Kind::Cup(false), Kind::Cross(Orient::Down, Orient::Down), Kind::Cap(true))
                    if a.pos == p + 1 && c.pos == p + 1 =>
                {
                    Some(Rewrite::Zero)
                }
                _ => None,
            };
            if let Some(r) = found {
                let name = if matches!(r, Rewrite::Zero) { "R11 left curl" } else { "right curl" };
                return Some((r, name));
            }
        }
    }
    None
}

/// Cups rise and caps sink past disjoint steps until they meet something on their strands.
fn compact(steps: &mut [Step]) {
    loop {
        let mut changed = false;
        for i in 0..steps.len().saturating_sub(1) {
            let (a, b) = (&steps[i], &steps[i + 1]);
            let want = (a.is_cup() && !b.is_cup()) || (b.is_cap() && !a.is_cup() && !a.is_cap());
            if want {
                if let Some((b2, a2)) = commute(a, b) {
                    steps[i] = b2;
                    steps[i + 1] = a2;
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

/// Cups sink to the bottom and caps rise to the top.
fn to_plat(steps: &mut [Step]) -> Result<(), EngineError> {
    loop {
        let mut changed = false;
        for i in 0..steps.len().saturating_sub(1) {
            let (a, b) = (&steps[i], &steps[i + 1]);
            if (b.is_cup() && !a.is_cup()) || (a.is_cap() && !b.is_cap()) {
                if let Some((b2, a2)) = commute(a, b) {
                    steps[i] = b2;
                    steps[i + 1] = a2;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let cups = steps.iter().take_while(|s| s.is_cup()).count();
    let caps = steps.iter().rev().take_while(|s| s.is_cap()).count();
    if steps[cups..steps.len() - caps].iter().any(|s| s.is_cup() || s.is_cap()) {
        return Err(EngineError::Unsupported("a cup or cap is trapped between crossings".into()));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Main(usize),
    Ret(usize),
}

struct Node {
    up: bool,
    n: usize,
    main: Vec<REv>,
    ret: Vec<REv>,
    children: Vec<usize>,
}

fn unsupported(msg: &str) -> EngineError {
    EngineError::Unsupported(msg.to_string())
}

/// Split the plat into nested rainbow closures.
fn decompose(steps: &[Step]) -> Result<Vec<RBlock>, EngineError> {
    let cups = steps.iter().take_while(|s| s.is_cup()).count();
    let caps = steps.iter().rev().take_while(|s| s.is_cap()).count();
    let middle = &steps[cups..steps.len() - caps];
    // bottom matching
    let mut arr: Vec<usize> = Vec::new();
    let mut partner: Vec<usize> = Vec::new();
    let mut orient: Vec<Orient> = Vec::new();
    for s in &steps[..cups] {
        let Kind::Cup(left) = s.kind else { unreachable!() };
        let id = partner.len();
        partner.extend([id + 1, id]);
        if left {
            orient.extend([Orient::Up, Orient::Down]);
        } else {
            orient.extend([Orient::Down, Orient::Up]);
        }
        arr.splice(s.pos..s.pos, [id, id + 1]);
    }
    let n = arr.len();
    let mut where_id = vec![0; n];
    for (p, &id) in arr.iter().enumerate() {
        where_id[id] = p;
    }
    let bottom_pair: Vec<usize> = (0..n).map(|p| where_id[partner[arr[p]]]).collect();
    let bottom_orient: Vec<Orient> = (0..n).map(|p| orient[arr[p]]).collect();
    // top matching
    let mut cur: Vec<usize> = (0..n).collect();
    let mut top_pair = vec![usize::MAX; n];
    for s in &steps[steps.len() - caps..] {
        let (x, y) = (cur[s.pos], cur[s.pos + 1]);
        top_pair[x] = y;
        top_pair[y] = x;
        cur.drain(s.pos..s.pos + 2);
    }
    if !cur.is_empty() || top_pair.contains(&usize::MAX) {
        return Err(EngineError::NotClosed);
    }
    let mut nodes: Vec<Node> = Vec::new();
    let mut owner: Vec<(usize, Part)> = vec![(0, Part::Main(0)); n];
    fn parse(
        lo: usize,
        hi: usize,
        bp: &[usize],
        tp: &[usize],
        or: &[Orient],
        nodes: &mut Vec<Node>,
        owner: &mut [(usize, Part)],
    ) -> Result<Vec<usize>, EngineError> {
        let mut out = Vec::new();
        let mut lo = lo;
        while lo < hi {
            let r = bp[lo];
            if r <= lo || r >= hi || tp[lo] != r {
                return Err(unsupported("components are not nested closures"));
            }
            let o = or[lo];
            let mut k = 1;
            while lo + k < r - k && bp[lo + k] == r - k && tp[lo + k] == r - k && or[lo + k] == o {
                k += 1;
            }
            let id = nodes.len();
            nodes.push(Node { up: o == Orient::Up, n: k, main: Vec::new(), ret: Vec::new(), children: Vec::new() });
            for j in 0..k {
                owner[lo + j] = (id, Part::Main(j));
                owner[r + 1 - k + j] = (id, Part::Ret(j));
            }
            let children = parse(lo + k, r + 1 - k, bp, tp, or, nodes, owner)?;
            nodes[id].children = children;
            out.push(id);
            lo = r + 1;
        }
        Ok(out)
    }
    let roots = parse(0, n, &bottom_pair, &top_pair, &bottom_orient, &mut nodes, &mut owner)?;
    for s in middle {
        let (node, part) = owner[s.pos];
        let (ev, local) = match (&s.kind, part) {
            (Kind::Dot(id), Part::Main(j) | Part::Ret(j)) => (REv::Dot(j, *id), j),
            (Kind::Curl(_), Part::Main(j) | Part::Ret(j)) => (REv::Curl(j), j),
            (Kind::Cross(..), Part::Main(j) | Part::Ret(j)) => {
                if owner[s.pos + 1] != (node, if let Part::Main(_) = part { Part::Main(j + 1) } else { Part::Ret(j + 1) })
                {
                    return Err(unsupported("a crossing joins different closures"));
                }
                (REv::Cross(j), j)
            }
            _ => return Err(EngineError::Inconsistent("cup or cap in the middle of a plat".into())),
        };
        let _ = local;
        match part {
            Part::Main(_) => nodes[node].main.push(ev),
            Part::Ret(_) => nodes[node].ret.push(ev),
        }
    }
    fn assemble(id: usize, nodes: &[Node]) -> Result<RBlock, EngineError> {
        let nd = &nodes[id];
        let n = nd.n;
        let mut events = nd.main.clone();
        // return legs are carried around the caps onto the main strands
        for ev in nd.ret.iter().rev() {
            events.push(match *ev {
                REv::Dot(q, d) => REv::Dot(n - 1 - q, d),
                REv::Curl(q) => REv::Curl(n - 1 - q),
                REv::Cross(q) => REv::Cross(n - 2 - q),
            });
        }
        if !nd.up && events.iter().any(|e| matches!(e, REv::Curl(_))) {
            return Err(unsupported("curls on a counterclockwise closure"));
        }
        let inner = nd.children.iter().map(|&c| assemble(c, nodes)).collect::<Result<Vec<_>, _>>()?;
        Ok(RBlock { up: nd.up, n, events, inner })
    }
    roots.iter().map(|&r| assemble(r, &nodes)).collect()
}

/// Apply local rewrites and decompose every resulting term.
pub(crate) fn recognize(
    d: &DiagramWord,
    casimir: Option<&[(String, String, Rational)]>,
    log: &mut Transcript,
) -> Result<Recognized, EngineError> {
    if !d.is_closed() {
        return Err(EngineError::NotClosed);
    }
    let mut dots = Vec::new();
    let Some(start) = to_steps(d, &mut dots)? else {
        log.note(|| "R11 left curl: diagram is 0".into());
        return Ok(Recognized { dots, terms: Vec::new() });
    };
    let mut pending: Vec<(Rational, Vec<Step>)> = vec![(Rational::one(), start)];
    let mut finished: Vec<(Rational, Vec<Step>)> = Vec::new();
    while let Some((c, mut steps)) = pending.pop() {
        loop {
            compact(&mut steps);
            let Some((rw, name)) = find_rewrite(&steps) else {
                finished.push((c, steps));
                break;
            };
            log.note(|| name.to_string());
            match rw {
                Rewrite::Remove(i, k) => {
                    steps.drain(i..i + k);
                }
                Rewrite::Curl(i, s) => {
                    steps.splice(i..i + 3, [s]);
                }
                Rewrite::Zero => break,
                Rewrite::DownUp(i) => {
                    let cas = casimir.ok_or_else(|| unsupported("down-up double crossing needs an algebra"))?;
                    let (p, h1, h2) = (steps[i].pos, steps[i].height, steps[i + 1].height);
                    for (b, bv, w) in cas {
                        dots.push(DotInfo { label: bv.clone(), height: h1 - 1 });
                        let lower = dots.len() - 1;
                        dots.push(DotInfo { label: b.clone(), height: h2 + 1 });
                        let upper = dots.len() - 1;
                        let mut alt = steps.clone();
                        alt.splice(
                            i..i + 2,
                            [
                                Step { kind: Kind::Dot(lower), pos: p, height: h1 - 1 },
                                Step { kind: Kind::Cap(true), pos: p, height: h1 },
                                Step { kind: Kind::Cup(false), pos: p, height: h2 },
                                Step { kind: Kind::Dot(upper), pos: p, height: h2 + 1 },
                            ],
                        );
                        pending.push((-(&c * w), alt));
                    }
                    steps.drain(i..i + 2);
                }
            }
        }
    }
    let mut terms = Vec::new();
    for (c, mut steps) in finished {
        if c.is_zero() {
            continue;
        }
        to_plat(&mut steps)?;
        let blocks = decompose(&steps)?;
        log.note(|| format!("plat form with {} closure block(s)", count_blocks(&blocks)));
        terms.push((c, blocks));
    }
    Ok(Recognized { dots, terms })
}

fn count_blocks(b: &[RBlock]) -> usize {
    b.iter().map(|x| 1 + count_blocks(&x.inner)).sum()
}

/// Dot ids from top to bottom in the order the evaluation places them.
pub(crate) fn presented_order(blocks: &[RBlock], out: &mut Vec<usize>) {
    for b in blocks {
        for ev in b.events.iter().rev() {
            if let REv::Dot(_, id) = ev {
                out.push(*id);
            }
        }
        presented_order(&b.inner, out);
    }
}

/// Recognize a diagram whose dots keep their height order; no algebra is needed.
pub(crate) fn recognize_blocks(d: &DiagramWord) -> Result<Vec<Block>, EngineError> {
    let mut log = Transcript::default();
    let rec = recognize(d, None, &mut log)?;
    let [(c, blocks)] = &rec.terms[..] else {
        return Err(EngineError::Precondition("diagram does not reduce to a single closure term".into()));
    };
    if !c.is_one() {
        return Err(EngineError::Precondition("diagram reduces with a scalar factor".into()));
    }
    let mut order = Vec::new();
    presented_order(blocks, &mut order);
    let heights: Vec<i64> = order.iter().map(|&i| rec.dots[i].height).collect();
    if heights.windows(2).any(|w| w[0] < w[1]) {
        return Err(EngineError::Precondition("dots would change height order".into()));
    }
    fn convert(b: &RBlock, dots: &[DotInfo]) -> Block {
        let events = b
            .events
            .iter()
            .map(|e| match *e {
                REv::Dot(p, id) => Event::Dot(p, dots[id].label.clone()),
                REv::Cross(p) => Event::Cross(p),
                REv::Curl(p) => Event::Curl(p),
            })
            .collect();
        let inner = b.inner.iter().map(|x| convert(x, dots)).collect();
        if b.up {
            Block::Up { n: b.n, events, inner }
        } else {
            Block::Down { n: b.n, events, inner }
        }
    }
    Ok(blocks.iter().map(|b| convert(b, &rec.dots)).collect())
}
