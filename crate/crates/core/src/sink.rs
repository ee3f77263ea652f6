//! Streaming contracts between enumerators and their consumers.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::Result;
use crate::output_queue::OutputQueue;

/// Receives solutions one at a time. Returning `Break` stops the enumeration.
pub trait SolutionSink<S: ?Sized> {
    fn emit(&mut self, solution: &S) -> ControlFlow<()>;
}

impl<S: ?Sized, F: FnMut(&S) -> ControlFlow<()>> SolutionSink<S> for F {
    fn emit(&mut self, solution: &S) -> ControlFlow<()> {
        self(solution)
    }
}

/// Depth-first events of an enumeration tree.
///
/// Internal nodes produce `enter` ... `exit`; a leaf produces a single `leaf`
/// call carrying its solution.
pub trait TreeSink<S> {
    fn enter(&mut self, partial: &S) -> ControlFlow<()>;
    fn leaf(&mut self, solution: &S) -> ControlFlow<()>;
    fn exit(&mut self) -> ControlFlow<()>;
}

/// How a branching enumerator is run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Branch on the smallest uncovered terminal.
    Plain,
    /// Branch only where at least two children exist.
    #[default]
    Improved,
    /// Improved tree with solutions released through an output queue.
    Queued,
}

impl Mode {
    pub fn is_improved(self) -> bool {
        self != Mode::Plain
    }
}

/// Forwards every leaf straight to a [`SolutionSink`].
pub struct DirectEmit<'a, K: ?Sized>(pub &'a mut K);

impl<S, K: SolutionSink<S> + ?Sized> TreeSink<S> for DirectEmit<'_, K> {
    fn enter(&mut self, _: &S) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }

    fn leaf(&mut self, solution: &S) -> ControlFlow<()> {
        self.0.emit(solution)
    }

    fn exit(&mut self) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
}

/// Shape of an enumeration tree as observed through its events.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeStats {
    pub internal: u64,
    pub leaves: u64,
    /// Internal nodes that ended with fewer than two children.
    pub low_branching: u64,
    pub max_depth: usize,
    /// Number of internal nodes per child count.
    pub children: BTreeMap<u64, u64>,
}

/// Pass-through [`TreeSink`] that records [`TreeStats`] and, optionally,
/// every partial solution seen at an internal node.
pub struct Recorder<'a, S, T: ?Sized> {
    inner: &'a mut T,
    children: Vec<u64>,
    pub stats: TreeStats,
    pub partials: Option<Vec<S>>,
}

impl<'a, S, T: TreeSink<S> + ?Sized> Recorder<'a, S, T> {
    pub fn new(inner: &'a mut T) -> Self {
        Self {
            inner,
            children: Vec::new(),
            stats: TreeStats::default(),
            partials: None,
        }
    }

    pub fn keeping_partials(mut self) -> Self {
        self.partials = Some(Vec::new());
        self
    }

    fn count_child(&mut self) {
        if let Some(c) = self.children.last_mut() {
            *c += 1;
        }
    }
}

impl<S: Clone, T: TreeSink<S> + ?Sized> TreeSink<S> for Recorder<'_, S, T> {
    fn enter(&mut self, partial: &S) -> ControlFlow<()> {
        self.count_child();
        self.children.push(0);
        self.stats.internal += 1;
        self.stats.max_depth = self.stats.max_depth.max(self.children.len() - 1);
        if let Some(p) = &mut self.partials {
            p.push(partial.clone());
        }
        self.inner.enter(partial)
    }

    fn leaf(&mut self, solution: &S) -> ControlFlow<()> {
        self.count_child();
        self.stats.leaves += 1;
        self.stats.max_depth = self.stats.max_depth.max(self.children.len());
        self.inner.leaf(solution)
    }

    fn exit(&mut self) -> ControlFlow<()> {
        if let Some(c) = self.children.pop() {
            *self.stats.children.entry(c).or_default() += 1;
            if c < 2 {
                self.stats.low_branching += 1;
            }
        }
        self.inner.exit()
    }
}

/// Discards everything; handy for counting through a [`Recorder`].
pub struct NullTree;

impl<S> TreeSink<S> for NullTree {
    fn enter(&mut self, _: &S) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
    fn leaf(&mut self, _: &S) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
    fn exit(&mut self) -> ControlFlow<()> {
        ControlFlow::Continue(())
    }
}

/// Runs a tree enumeration in the given mode and returns the number of
/// solutions passed to `sink`. `n` sizes the output queue.
pub(crate) fn run_in_mode<S: Clone>(
    n: usize,
    mode: Mode,
    sink: &mut dyn SolutionSink<S>,
    body: impl FnOnce(&mut dyn TreeSink<S>) -> Result<ControlFlow<()>>,
) -> Result<u64> {
    let mut count = 0;
    let mut counting = |s: &S| {
        count += 1;
        sink.emit(s)
    };
    match mode {
        Mode::Plain | Mode::Improved => {
            let _ = body(&mut DirectEmit(&mut counting))?;
        }
        Mode::Queued => {
            let mut queue = OutputQueue::new(n, &mut counting);
            if body(&mut queue)?.is_continue() {
                let _ = queue.finish();
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recorder_counts_children() {
        let mut null = NullTree;
        let mut rec = Recorder::new(&mut null);
        let _ = rec.enter(&0);
        let _ = rec.leaf(&1);
        let _ = rec.enter(&2);
        let _ = rec.leaf(&3);
        let _ = rec.exit();
        let _ = rec.exit();
        assert_eq!(
            rec.stats,
            TreeStats {
                internal: 2,
                leaves: 2,
                low_branching: 1,
                max_depth: 2,
                children: BTreeMap::from([(1, 1), (2, 1)]),
            }
        );
    }

    #[test]
    fn closures_are_sinks() {
        let mut seen = Vec::new();
        let mut sink = |s: &u32| {
            seen.push(*s);
            ControlFlow::Continue(())
        };
        let mut tree = DirectEmit(&mut sink);
        let _ = tree.enter(&0);
        let _ = tree.leaf(&7);
        let _ = tree.exit();
        assert_eq!(seen, vec![7]);
    }
}
