pub mod scalars;
pub mod groups;
pub mod algebra;
pub mod linalg;
pub mod module;
pub mod interseries;
pub mod induced;
pub mod classical;
pub mod classify;
pub mod cli;
