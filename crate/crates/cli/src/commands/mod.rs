pub mod benchmark;
pub mod dims;
pub mod export_qubo;
pub mod solve;
pub mod variance;
