pub mod commands;
pub mod spec;
pub mod properties;
pub mod report;
