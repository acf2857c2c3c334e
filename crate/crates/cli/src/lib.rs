//! Report encoding shared by the `landau` binary and its tests.

pub mod report;
