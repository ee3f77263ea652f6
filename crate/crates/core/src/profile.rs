//! Delay and shape measurements for a single enumeration run.

use std::cell::Cell;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use crate::error::Result;
use crate::output_queue::{OutputQueue, QueueStats};
use crate::sink::{DirectEmit, Mode, Recorder, SolutionSink, TreeSink, TreeStats};

#[derive(Clone, Debug, Default)]
pub struct ProfileRecord {
    /// Wall time before each solution, measured from the previous one (or
    /// from the start for the first).
    pub delays: Vec<Duration>,
    /// Largest number of enumeration-tree events between two consecutive
    /// solutions, not counting the wait for the first one. `None` when the
    /// enumerator does not report tree events.
    pub max_node_gap: Option<u64>,
    pub tree: Option<TreeStats>,
    pub queue: Option<QueueStats>,
}

impl ProfileRecord {
    pub fn solutions(&self) -> u64 {
        self.delays.len() as u64
    }

    pub fn max_delay(&self) -> Duration {
        self.delays.iter().copied().max().unwrap_or_default()
    }

    pub fn mean_delay(&self) -> Duration {
        if self.delays.is_empty() {
            return Duration::ZERO;
        }
        self.delays.iter().sum::<Duration>() / self.delays.len() as u32
    }

    /// Human-readable report, one `# key=value` line per measurement.
    pub fn summary(&self) -> String {
        let mut lines = vec![
            format!("# solutions={}", self.solutions()),
            format!("# max_delay_us={}", self.max_delay().as_micros()),
            format!("# mean_delay_us={}", self.mean_delay().as_micros()),
        ];
        if let Some(gap) = self.max_node_gap {
            lines.push(format!("# max_node_gap={gap}"));
        }
        if let Some(t) = &self.tree {
            lines.push(format!(
                "# tree internal={} leaves={} low_branching={} max_depth={}",
                t.internal, t.leaves, t.low_branching, t.max_depth
            ));
            let hist: Vec<String> = t.children.iter().map(|(k, v)| format!("{k}:{v}")).collect();
            lines.push(format!("# children {}", hist.join(" ")));
        }
        if let Some(q) = &self.queue {
            lines.push(format!(
                "# queue preprocessed={} subtrees={} max_gap={} occupancy_violations={} starved={}",
                q.preprocessed, q.subtrees, q.max_gap, q.occupancy_violations, q.starved
            ));
        }
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

/// Timestamps solutions on their way to the real sink.
struct Stopwatch<'a> {
    last: Instant,
    events: Option<&'a Cell<u64>>,
    record: ProfileRecord,
}

impl<'a> Stopwatch<'a> {
    fn new(events: Option<&'a Cell<u64>>) -> Self {
        Self {
            last: Instant::now(),
            events,
            record: ProfileRecord::default(),
        }
    }

    fn lap(&mut self) {
        let now = Instant::now();
        self.record.delays.push(now - self.last);
        self.last = now;
        if let Some(events) = self.events {
            let gap = events.replace(0);
            if self.record.delays.len() > 1 {
                let best = self.record.max_node_gap.get_or_insert(0);
                *best = (*best).max(gap);
            } else {
                self.record.max_node_gap.get_or_insert(0);
            }
        }
    }
}

/// Counts every tree event before passing it on.
struct EventCounter<'a, T: ?Sized> {
    inner: &'a mut T,
    events: &'a Cell<u64>,
}

impl<S, T: TreeSink<S> + ?Sized> TreeSink<S> for EventCounter<'_, T> {
    fn enter(&mut self, partial: &S) -> ControlFlow<()> {
        self.events.set(self.events.get() + 1);
        self.inner.enter(partial)
    }

    fn leaf(&mut self, solution: &S) -> ControlFlow<()> {
        self.events.set(self.events.get() + 1);
        self.inner.leaf(solution)
    }

    fn exit(&mut self) -> ControlFlow<()> {
        self.events.set(self.events.get() + 1);
        self.inner.exit()
    }
}

/// Runs a tree enumeration in `mode`, forwarding solutions to `sink` and
/// measuring delays, tree shape and queue counters. `n` sizes the output queue.
pub fn profile_tree<S: Clone>(
    n: usize,
    mode: Mode,
    sink: &mut dyn SolutionSink<S>,
    body: impl FnOnce(&mut dyn TreeSink<S>) -> Result<ControlFlow<()>>,
) -> Result<ProfileRecord> {
    let events = Cell::new(0);
    let mut watch = Stopwatch::new(Some(&events));
    let mut timed = |s: &S| {
        watch.lap();
        sink.emit(s)
    };
    let (tree, queue) = match mode {
        Mode::Plain | Mode::Improved => {
            let mut direct = DirectEmit(&mut timed);
            let mut counter = EventCounter {
                inner: &mut direct,
                events: &events,
            };
            let mut recorder = Recorder::new(&mut counter);
            let _ = body(&mut recorder)?;
            (recorder.stats, None)
        }
        Mode::Queued => {
            let mut queue = OutputQueue::new(n, &mut timed);
            let mut counter = EventCounter {
                inner: &mut queue,
                events: &events,
            };
            let mut recorder = Recorder::new(&mut counter);
            let flow = body(&mut recorder)?;
            let stats = recorder.stats;
            if flow.is_continue() {
                let _ = queue.finish();
            }
            (stats, Some(queue.stats().clone()))
        }
    };
    let mut record = watch.record;
    record.tree = Some(tree);
    record.queue = queue;
    Ok(record)
}

/// Runs an enumerator that reports solutions only, measuring delays.
pub fn profile_flat<S: ?Sized>(
    sink: &mut dyn SolutionSink<S>,
    body: impl FnOnce(&mut dyn FnMut(&S) -> ControlFlow<()>) -> Result<()>,
) -> Result<ProfileRecord> {
    let mut watch = Stopwatch::new(None);
    body(&mut |s: &S| {
        watch.lap();
        sink.emit(s)
    })?;
    Ok(watch.record)
}
