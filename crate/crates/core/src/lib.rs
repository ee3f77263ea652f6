pub mod certify;
pub mod cli;
pub mod directed_steiner;
pub mod error;
pub mod generate;
pub mod graph;
pub mod induced_clawfree;
pub mod instance;
pub mod oracle;
pub mod output_queue;
pub mod path_enum;
pub mod profile;
pub mod sink;
pub mod steiner_forest;
pub mod steiner_tree;
pub mod terminal_steiner;

pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, VertexSet};
pub use sink::{Mode, SolutionSink, TreeSink};
