pub mod automorphism;
pub mod cli;
pub mod graph;
pub mod snf;
pub mod thickening;
pub mod twisted;
pub mod words;
