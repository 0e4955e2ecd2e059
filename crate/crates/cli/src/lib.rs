//! Operand parsing, rendering, and the report schema behind the
//! `immaculata` binary, split out so integration tests can exercise the
//! exact JSON round trip.

pub mod parse;
pub mod render;
pub mod report;
