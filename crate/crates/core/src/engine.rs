//! Fixed-step transient simulation of a single device.

use std::fmt;
use std::io::{self, Write};

use thiserror::Error;

use crate::model::{GsdParams, GsdState, Model, NonMonotonicTime, TerminalVoltages};
use crate::stimulus::{scenario_duration, Scenario, StimulusError, Terminal};

pub const CSV_HEADER: &str = "t,v_in,v_out,v_gate,v_eff,x,x_min,g_syn,i_syn";

/// Observables at one grid point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRecord {
    pub t: f64,
    pub v_in: f64,
    pub v_out: f64,
    pub v_gate: f64,
    /// Effective gate voltage, after the depression gain when above threshold.
    pub v_eff: f64,
    pub x: f64,
    pub x_min: f64,
    pub g_syn: f64,
    pub i_syn: f64,
}

impl TraceRecord {
    pub fn fields(&self) -> [f64; 9] {
        [
            self.t,
            self.v_in,
            self.v_out,
            self.v_gate,
            self.v_eff,
            self.x,
            self.x_min,
            self.g_syn,
            self.i_syn,
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// `dt` exceeds `1 / (r_stp * t_set)`, so one decay step can overshoot the floor.
    UnstableStep { dt: f64, bound: f64 },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::UnstableStep { dt, bound } => write!(
                f,
                "UnstableStep: dt = {} s exceeds the decay stability bound 1/(r_stp*t_set) = {} s",
                fmt_f64(*dt),
                fmt_f64(*bound)
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("invalid scenario: {0}")]
    InvalidScenario(#[from] StimulusError),
    #[error("scenario `{label}` has no triangle sweep on the `{terminal}` terminal")]
    MissingSweep { label: String, terminal: Terminal },
    #[error(transparent)]
    NonMonotonicTime(#[from] NonMonotonicTime),
}

/// A simulated trace plus the metadata written as CSV comments.
#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub label: String,
    pub params: GsdParams,
    pub dt: f64,
    pub warnings: Vec<Warning>,
    /// Set when the caller replaced the scenario's own step.
    pub dt_override: Option<f64>,
    /// Terminal carrying the sweep when the trace is meant for I-V plotting.
    pub sweep: Option<Terminal>,
    pub records: Vec<TraceRecord>,
}

/// Decay-stability bound on the step, or `None` when short-term decay is off.
pub fn stability_bound(p: &GsdParams) -> Option<f64> {
    let rate = p.r_stp * p.t_set;
    (rate > 0.0).then(|| 1.0 / rate)
}

/// Number of steps on the grid `k * dt` covering `duration`.
///
/// Ratios within 1e-9 (relative) of an integer are snapped, so a duration
/// that is nominally a multiple of `dt` gets its final grid point.
pub fn step_count(duration: f64, dt: f64) -> usize {
    let ratio = duration / dt;
    let nearest = ratio.round();
    if (ratio - nearest).abs() <= 1e-9 * nearest.max(1.0) {
        nearest as usize
    } else {
        ratio.floor() as usize
    }
}

fn voltages_at(s: &Scenario, t: f64) -> TerminalVoltages {
    TerminalVoltages::new(
        s.input.value_at(t),
        s.output.value_at(t),
        s.gate.value_at(t),
    )
}

/// Runs `s` on the grid `t = k * dt`, `k = 0..=n`.
///
/// The record at `t = 0` holds the initial state; each later record is the
/// result of one model step evaluated at that grid time.
pub fn run(s: &Scenario) -> Result<Trace, EngineError> {
    s.validate()?;
    let model = Model::new(s.params).expect("validated with the scenario");
    let duration = scenario_duration(s);
    let n = step_count(duration, s.dt);

    let mut warnings = Vec::new();
    if let Some(bound) = stability_bound(&s.params) {
        if s.dt > bound {
            warnings.push(Warning::UnstableStep { dt: s.dt, bound });
        }
    }

    let mut records = Vec::with_capacity(n + 1);
    let mut state = GsdState::initial(&s.params);
    let v0 = voltages_at(s, 0.0);
    let obs = model.observe(&state, &v0);
    records.push(record(0.0, &v0, obs.v_eff, &state, obs.g_syn, obs.i_syn));

    for k in 1..=n {
        let t = k as f64 * s.dt;
        let v = voltages_at(s, t);
        let out = model.step(&state, &v, t)?;
        state = out.state;
        records.push(record(t, &v, out.v_eff, &state, out.g_syn, out.i_syn));
    }

    Ok(Trace {
        label: s.label.clone(),
        params: s.params,
        dt: s.dt,
        warnings,
        dt_override: None,
        sweep: None,
        records,
    })
}

fn record(
    t: f64,
    v: &TerminalVoltages,
    v_eff: f64,
    state: &GsdState,
    g_syn: f64,
    i_syn: f64,
) -> TraceRecord {
    TraceRecord {
        t,
        v_in: v.v_in,
        v_out: v.v_out,
        v_gate: v.v_gate,
        v_eff,
        x: state.x,
        x_min: state.x_min,
        g_syn,
        i_syn,
    }
}

/// Like [`run`], but requires a triangle sweep on `terminal` and tags the trace for I-V plotting.
pub fn ivsweep(s: &Scenario, terminal: Terminal) -> Result<Trace, EngineError> {
    if !s.waveform(terminal).has_sweep() {
        return Err(EngineError::MissingSweep {
            label: s.label.clone(),
            terminal,
        });
    }
    let mut trace = run(s)?;
    trace.sweep = Some(terminal);
    Ok(trace)
}

/// Shortest decimal that parses back to the same `f64`.
///
/// Magnitudes in `[1e-4, 1e16)` use plain notation, everything else scientific.
pub fn fmt_f64(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-4..1e16).contains(&a) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

impl Trace {
    /// Writes the trace as CSV: `#` metadata lines, the header, then one row per record.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "# label: {}", self.label)?;
        writeln!(w, "# dt: {}", fmt_f64(self.dt))?;
        if let Some(dt) = self.dt_override {
            writeln!(w, "# dt_override: {}", fmt_f64(dt))?;
        }
        if let Some(terminal) = self.sweep {
            writeln!(w, "# sweep: {terminal}")?;
        }
        let params = serde_json::to_string(&self.params).map_err(io::Error::other)?;
        writeln!(w, "# params: {params}")?;
        for warning in &self.warnings {
            writeln!(w, "# warning: {warning}")?;
        }
        writeln!(w, "{CSV_HEADER}")?;
        let mut line = String::with_capacity(160);
        for r in &self.records {
            line.clear();
            for (i, v) in r.fields().iter().enumerate() {
                if i > 0 {
                    line.push(',');
                }
                line.push_str(&fmt_f64(*v));
            }
            line.push('\n');
            w.write_all(line.as_bytes())?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }

    pub fn last(&self) -> &TraceRecord {
        self.records
            .last()
            .expect("a trace always has its t = 0 record")
    }
}
