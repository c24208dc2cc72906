pub mod graph;
pub mod numlin;
pub mod obstructions;
pub mod search;
pub mod witnesses;
pub mod pipeline;
