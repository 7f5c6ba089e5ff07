//! Compact behavioral model of gated-synaptic devices (GSDs) with a
//! fixed-step transient simulator.
//!
//! - [`model`]: device equations and the single-step state update.
//! - [`stimulus`]: piecewise terminal waveforms and scenario files.
//! - [`engine`]: runs a scenario on a fixed time grid and writes CSV traces.
//! - [`presets`]: fitted parameter sets for published devices.
//! - [`check`]: the invariant suite behind `gsdsim check`.

pub mod check;
pub mod cli;
pub mod engine;
pub mod model;
pub mod plot;
pub mod presets;
pub mod stimulus;

pub use engine::{ivsweep, run, Trace, TraceRecord};
pub use model::{GsdParams, GsdState, Model, NormConstants, Polarity, TerminalVoltages};
pub use stimulus::{Scenario, Segment, Terminal, Waveform};
