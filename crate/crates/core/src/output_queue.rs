//! Delay flattening for enumeration trees in which every internal node has at
//! least two children.
//!
//! The first `n` solutions are buffered. Afterwards every leaf solution joins a
//! FIFO buffer and the oldest buffered solution is released after every third
//! traversal event (entering an internal node, leaving it, or reaching a leaf).
//! A finished subtree has more leaves than internal nodes, so the buffer only
//! loses ground along the current root path, which is at most `n` deep.
//!
//! [`ThetaBuilder`] and [`build_theta`] construct a consistent map from internal
//! nodes to leaves, the matching that underlies the leaf surplus.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::sink::{SolutionSink, TreeSink};

/// Online construction of a consistent map from internal nodes to leaves:
/// each leaf goes to its nearest ancestor that has no leaf yet.
#[derive(Clone, Debug)]
pub struct ThetaBuilder<N> {
    unassigned: Vec<N>,
}

impl<N> Default for ThetaBuilder<N> {
    fn default() -> Self {
        Self { unassigned: Vec::new() }
    }
}

impl<N: Copy + PartialEq> ThetaBuilder<N> {
    pub fn new() -> Self {
        Self::default()
    }

    /// An internal node was discovered.
    pub fn open(&mut self, node: N) {
        self.unassigned.push(node);
    }

    /// A leaf was discovered; returns the internal node it is assigned to.
    pub fn assign(&mut self) -> Option<N> {
        self.unassigned.pop()
    }

    /// An internal node was examined. Returns `false` if it never got a leaf.
    pub fn close(&mut self, node: N) -> bool {
        if self.unassigned.last() == Some(&node) {
            self.unassigned.pop();
            false
        } else {
            true
        }
    }
}

/// Applies [`ThetaBuilder`] to an explicit rooted tree given by child lists.
/// Returns, for every node, the leaf assigned to it (always `None` for leaves).
pub fn build_theta(children: &[Vec<usize>], root: usize) -> Vec<Option<usize>> {
    let mut theta = vec![None; children.len()];
    let mut builder = ThetaBuilder::new();
    let mut stack = vec![(root, 0usize)];
    if children[root].is_empty() {
        return theta;
    }
    builder.open(root);
    while let Some(top) = stack.last_mut() {
        let (x, next) = *top;
        match children[x].get(next) {
            Some(&c) => {
                top.1 += 1;
                if children[c].is_empty() {
                    if let Some(owner) = builder.assign() {
                        theta[owner] = Some(c);
                    }
                } else {
                    builder.open(c);
                    stack.push((c, 0));
                }
            }
            None => {
                builder.close(x);
                stack.pop();
            }
        }
    }
    theta
}

/// Traversal events allowed between two releases after the buffering phase.
pub const MAX_GAP: u64 = 3;

/// Counters exposed by [`OutputQueue`] for delay and occupancy checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QueueStats {
    pub emitted: u64,
    /// Solutions buffered before the first release.
    pub preprocessed: u64,
    /// Subtrees whose root was discovered after the buffering phase while its
    /// parent was discovered during it.
    pub subtrees: u64,
    /// Largest number of traversal events between two consecutive releases
    /// after the buffering phase. Entering an internal node, leaving it and
    /// reaching a leaf each count as one event.
    pub max_gap: u64,
    /// Subtree roots discovered while fewer than `n / 2` solutions were held.
    pub occupancy_violations: u64,
    /// Scheduled releases that found the buffer empty.
    pub starved: u64,
}

/// A [`TreeSink`] that releases leaf solutions to a [`SolutionSink`] with
/// bounded gaps. Call [`OutputQueue::finish`] when the traversal ends.
pub struct OutputQueue<'a, S, K: ?Sized> {
    sink: &'a mut K,
    capacity: usize,
    buffer: VecDeque<S>,
    steady: bool,
    /// One flag per open internal node: discovered after the buffering phase.
    stack: Vec<bool>,
    since_emit: u64,
    stats: QueueStats,
    finished: bool,
}

impl<'a, S: Clone, K: SolutionSink<S> + ?Sized> OutputQueue<'a, S, K> {
    /// `n` is the vertex count of the instance, which bounds the depth of the
    /// enumeration tree; the buffer holds `n` solutions rounded up to an even number.
    pub fn new(n: usize, sink: &'a mut K) -> Self {
        let capacity = (n.max(1) + 1) & !1;
        Self {
            sink,
            capacity,
            buffer: VecDeque::with_capacity(capacity + 1),
            steady: false,
            stack: Vec::new(),
            since_emit: 0,
            stats: QueueStats::default(),
            finished: false,
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn stats(&self) -> &QueueStats {
        &self.stats
    }

    /// Releases everything still held. Idempotent.
    pub fn finish(&mut self) -> ControlFlow<()> {
        if self.finished {
            return ControlFlow::Continue(());
        }
        self.finished = true;
        if !self.steady && self.stats.emitted == 0 {
            self.stats.preprocessed = self.buffer.len() as u64;
        }
        self.steady = false;
        while let Some(s) = self.buffer.pop_front() {
            self.release(s)?;
        }
        ControlFlow::Continue(())
    }

    fn release(&mut self, s: S) -> ControlFlow<()> {
        if self.steady {
            self.stats.max_gap = self.stats.max_gap.max(self.since_emit);
            self.since_emit = 0;
        }
        self.stats.emitted += 1;
        self.sink.emit(&s)
    }

    /// Counts one traversal event and releases if the gap is used up.
    fn tick(&mut self) -> ControlFlow<()> {
        if !self.steady {
            return ControlFlow::Continue(());
        }
        self.since_emit += 1;
        if self.since_emit < MAX_GAP {
            return ControlFlow::Continue(());
        }
        match self.buffer.pop_front() {
            Some(s) => self.release(s),
            None => {
                self.stats.starved += 1;
                ControlFlow::Continue(())
            }
        }
    }

    /// Bookkeeping for a node about to be discovered.
    fn discover(&mut self) {
        if self.steady && self.stack.last() == Some(&false) {
            self.stats.subtrees += 1;
            if self.buffer.len() < self.capacity / 2 {
                self.stats.occupancy_violations += 1;
            }
        }
    }

    fn check_done(&mut self) -> ControlFlow<()> {
        if self.stack.is_empty() {
            self.finish()
        } else {
            ControlFlow::Continue(())
        }
    }
}

impl<S: Clone, K: SolutionSink<S> + ?Sized> TreeSink<S> for OutputQueue<'_, S, K> {
    fn enter(&mut self, _: &S) -> ControlFlow<()> {
        self.discover();
        self.stack.push(self.steady);
        self.tick()
    }

    fn leaf(&mut self, solution: &S) -> ControlFlow<()> {
        self.discover();
        self.buffer.push_back(solution.clone());
        if !self.steady {
            if self.buffer.len() >= self.capacity {
                self.steady = true;
                self.stats.preprocessed = self.buffer.len() as u64;
            }
            return self.check_done();
        }
        if self.buffer.len() > self.capacity {
            self.since_emit += 1;
            let s = self.buffer.pop_front().expect("buffer is over capacity");
            self.release(s)?;
        } else {
            self.tick()?;
        }
        self.check_done()
    }

    fn exit(&mut self) -> ControlFlow<()> {
        self.stack.pop().expect("exit without matching enter");
        self.tick()?;
        self.check_done()
    }
}
