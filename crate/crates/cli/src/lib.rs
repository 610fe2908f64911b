//! Text format and command runner for the `psbck` workbench.

pub mod app;
pub mod commands;
pub mod document;
