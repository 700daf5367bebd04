//! Resumable enumeration.
//!
//! Enumerators are nested loops over index ranges. A [`Cursor`] records the
//! current loop indices; the indices at the moment an item is emitted form
//! its position, and positions increase strictly (lexicographically) along a
//! run. Resuming from a position restarts every loop at the recorded index
//! and suppresses output up to and including that position, so only the
//! innermost unit of work is repeated.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Why a walk stopped early.
#[derive(Debug)]
pub enum Halt {
    /// The consumer asked to stop.
    Stop,
    Failed(Error),
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        Halt::Failed(e)
    }
}

pub type Walk = std::result::Result<(), Halt>;

/// Loop indices of a running enumeration and the position to resume after.
#[derive(Clone, Debug, Default)]
pub struct Cursor {
    stack: Vec<u64>,
    target: Option<Vec<u64>>,
}

impl Cursor {
    pub fn new() -> Self {
        Cursor::default()
    }

    /// A cursor that skips everything up to and including `position`.
    pub fn resume_after(position: Vec<u64>) -> Self {
        Cursor { stack: Vec::new(), target: Some(position) }
    }

    /// First index of the loop about to start at the current depth.
    pub fn start(&self) -> u64 {
        match &self.target {
            Some(t) if t.len() > self.stack.len() && t[..self.stack.len()] == self.stack[..] => {
                t[self.stack.len()]
            }
            _ => 0,
        }
    }

    pub fn push(&mut self, i: u64) {
        self.stack.push(i);
    }

    pub fn pop(&mut self) {
        self.stack.pop();
    }

    pub fn position(&self) -> &[u64] {
        &self.stack
    }

    /// Whether an item at the current position is new (not yet emitted
    /// before the resume point). Clears the resume point once passed.
    pub fn admit(&mut self) -> bool {
        match &self.target {
            Some(t) if self.stack[..] <= t[..] => false,
            Some(_) => {
                self.target = None;
                true
            }
            None => true,
        }
    }

    /// Runs `body` for each index of `0..hi` at a new depth, starting at the
    /// resume index when resuming.
    pub fn range(&mut self, hi: u64, body: impl FnMut(&mut Cursor, u64) -> Walk) -> Walk {
        self.range_in(0, hi, body)
    }

    /// Like [`Cursor::range`] over `lo..hi`.
    pub fn range_in(&mut self, lo: u64, hi: u64, mut body: impl FnMut(&mut Cursor, u64) -> Walk) -> Walk {
        let lo = lo.max(self.start());
        for i in lo..hi {
            self.push(i);
            let r = body(self, i);
            self.pop();
            r?;
        }
        Ok(())
    }

    /// Like [`Cursor::range`] over the items of a slice.
    pub fn each<T>(&mut self, items: &[T], mut body: impl FnMut(&mut Cursor, &T) -> Walk) -> Walk {
        self.range(items.len() as u64, |c, i| body(c, &items[i as usize]))
    }
}

/// Runs a walker to completion, collecting everything it emits.
pub fn collect<T>(
    walk: impl FnOnce(&mut Cursor, &mut dyn FnMut(&mut Cursor, T) -> Walk) -> Walk,
) -> Result<Vec<T>> {
    let mut out = Vec::new();
    match walk(&mut Cursor::new(), &mut |_, x| {
        out.push(x);
        Ok(())
    }) {
        Ok(()) | Err(Halt::Stop) => Ok(out),
        Err(Halt::Failed(e)) => Err(e),
    }
}

/// Runs a walker from `state`, passing each new item to `emit` and keeping
/// `state` pointed at the last emitted item. Stops after `limit` new items.
/// Returns whether the walk ran to completion.
pub fn drive<T>(
    state: &mut ResumeState,
    limit: Option<u64>,
    walk: impl FnOnce(&mut Cursor, &mut dyn FnMut(&mut Cursor, T) -> Walk) -> Walk,
    mut emit: impl FnMut(&T) -> Result<()>,
) -> Result<bool> {
    let mut cur = state.cursor();
    let mut fresh = 0u64;
    let r = walk(&mut cur, &mut |cur, x| {
        if !cur.admit() {
            return Ok(());
        }
        emit(&x)?;
        state.position = cur.position().to_vec();
        state.emitted += 1;
        fresh += 1;
        if limit.is_some_and(|l| fresh >= l) {
            return Err(Halt::Stop);
        }
        Ok(())
    });
    match r {
        Ok(()) => Ok(true),
        Err(Halt::Stop) => Ok(false),
        Err(Halt::Failed(e)) => Err(e),
    }
}

const MAGIC: &[u8; 4] = b"P1RS";
const VERSION: u32 = 1;

/// Serializable continuation of a stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResumeState {
    pub version: u32,
    /// `"places"` or `"divisors"`.
    pub kind: String,
    pub q: u64,
    pub n: u32,
    pub seed: u64,
    /// Position of the last emitted item.
    pub position: Vec<u64>,
    pub emitted: u64,
}

impl ResumeState {
    pub fn new(kind: &str, q: u64, n: u32, seed: u64) -> Self {
        ResumeState { version: VERSION, kind: kind.to_string(), q, n, seed, position: Vec::new(), emitted: 0 }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = MAGIC.to_vec();
        ciborium::into_writer(self, &mut out).expect("writing to a vector");
        out
    }

    pub fn from_bytes(b: &[u8]) -> Result<Self> {
        if b.len() < MAGIC.len() || &b[..MAGIC.len()] != MAGIC {
            return Err(Error::State("not a resume state".into()));
        }
        let s: ResumeState = ciborium::from_reader(&b[MAGIC.len()..])
            .map_err(|e| Error::State(format!("corrupt resume state: {e}")))?;
        if s.version != VERSION {
            return Err(Error::State(format!("unsupported resume state version {}", s.version)));
        }
        Ok(s)
    }

    /// Cursor continuing after the last emitted item.
    pub fn cursor(&self) -> Cursor {
        if self.emitted == 0 {
            Cursor::new()
        } else {
            Cursor::resume_after(self.position.clone())
        }
    }
}
