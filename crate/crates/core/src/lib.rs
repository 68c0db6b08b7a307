pub mod analysis;
pub mod cli;
pub mod constructive;
pub mod graph;
pub mod matching;
pub mod oracle;
