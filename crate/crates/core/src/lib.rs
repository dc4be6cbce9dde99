pub mod bipoint;
pub mod bisemigroup;
pub mod cli;
pub mod error;
pub mod faults;
pub mod function_space;
pub mod harness;
pub mod hopf;
pub mod linalg;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod tensor;
