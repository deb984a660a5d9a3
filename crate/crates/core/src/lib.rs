pub mod budget;
pub mod check;
pub mod dss;
pub mod error;
pub mod es;
pub mod graph;
pub mod repro;
pub mod solver;
