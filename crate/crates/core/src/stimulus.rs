//! Piecewise voltage waveforms and scenario files.
//!
//! A [`Waveform`] is an ordered list of [`Segment`]s played back to back.
//! Evaluation is right-continuous: at a segment boundary (or a pulse edge) the
//! value is the one after the edge. Past the end the waveform holds its final
//! value, and an empty waveform is a grounded terminal (0 V).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{GsdParams, ParamError};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Segment {
    /// Constant `level` (V) for `duration` (s).
    Hold { level: f64, duration: f64 },
    /// Linear ramp from `from` to `to` (V) over `duration` (s).
    Ramp { from: f64, to: f64, duration: f64 },
    /// `count` pulses of height `base + amplitude` lasting `width`, one every `period`;
    /// `base` in between.
    PulseTrain {
        base: f64,
        amplitude: f64,
        width: f64,
        period: f64,
        count: u32,
    },
    /// `cycles` sweeps `from -> peak -> from` at `rate` (V/s).
    TriangleSweep {
        from: f64,
        peak: f64,
        rate: f64,
        cycles: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StimulusError {
    #[error("segment {index}: {reason}")]
    InvalidSegment { index: usize, reason: String },
    #[error("scenario `{label}`: {reason}")]
    InvalidScenario { label: String, reason: String },
    #[error("scenario `{label}`: {source}")]
    InvalidParams {
        label: String,
        #[source]
        source: ParamError,
    },
}

impl Segment {
    pub fn duration(&self) -> f64 {
        match *self {
            Segment::Hold { duration, .. } | Segment::Ramp { duration, .. } => duration,
            Segment::PulseTrain { period, count, .. } => period * f64::from(count),
            Segment::TriangleSweep {
                from,
                peak,
                rate,
                cycles,
            } => 2.0 * (peak - from).abs() / rate * f64::from(cycles),
        }
    }

    /// Value at local time `tau` in `[0, duration)`.
    pub fn value_at(&self, tau: f64) -> f64 {
        match *self {
            Segment::Hold { level, .. } => level,
            Segment::Ramp { from, to, duration } => from + (to - from) * (tau / duration),
            Segment::PulseTrain {
                base,
                amplitude,
                width,
                period,
                count,
            } => {
                let n = (tau / period).floor();
                if n >= f64::from(count) {
                    return self.end_value();
                }
                if tau - n * period < width {
                    base + amplitude
                } else {
                    base
                }
            }
            Segment::TriangleSweep {
                from, peak, rate, ..
            } => {
                let leg = (peak - from).abs() / rate;
                let phase = tau % (2.0 * leg);
                let frac = if phase <= leg {
                    phase / leg
                } else {
                    (2.0 * leg - phase) / leg
                };
                from * (1.0 - frac) + peak * frac
            }
        }
    }

    /// Left limit at the end of the segment; held after the waveform ends.
    pub fn end_value(&self) -> f64 {
        match *self {
            Segment::Hold { level, .. } => level,
            Segment::Ramp { to, .. } => to,
            Segment::PulseTrain {
                base,
                amplitude,
                width,
                period,
                ..
            } => {
                if width >= period {
                    base + amplitude
                } else {
                    base
                }
            }
            Segment::TriangleSweep { from, .. } => from,
        }
    }

    /// Returns a copy with every voltage multiplied by `k`.
    pub fn scaled(&self, k: f64) -> Segment {
        match *self {
            Segment::Hold { level, duration } => Segment::Hold {
                level: level * k,
                duration,
            },
            Segment::Ramp { from, to, duration } => Segment::Ramp {
                from: from * k,
                to: to * k,
                duration,
            },
            Segment::PulseTrain {
                base,
                amplitude,
                width,
                period,
                count,
            } => Segment::PulseTrain {
                base: base * k,
                amplitude: amplitude * k,
                width,
                period,
                count,
            },
            Segment::TriangleSweep {
                from,
                peak,
                rate,
                cycles,
            } => Segment::TriangleSweep {
                from: from * k,
                peak: peak * k,
                rate: rate * k.abs(),
                cycles,
            },
        }
    }

    fn validate(&self) -> Result<(), String> {
        let finite = |name: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(format!("{name} must be finite"))
            }
        };
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(format!("{name} must be > 0, got {v}"))
            }
        };
        match *self {
            Segment::Hold { level, duration } => {
                finite("level", level)?;
                positive("duration", duration)
            }
            Segment::Ramp { from, to, duration } => {
                finite("from", from)?;
                finite("to", to)?;
                positive("duration", duration)
            }
            Segment::PulseTrain {
                base,
                amplitude,
                width,
                period,
                count,
            } => {
                finite("base", base)?;
                finite("amplitude", amplitude)?;
                positive("width", width)?;
                positive("period", period)?;
                if width > period {
                    return Err(format!("width {width} exceeds period {period}"));
                }
                if count == 0 {
                    return Err("count must be >= 1".into());
                }
                Ok(())
            }
            Segment::TriangleSweep {
                from,
                peak,
                rate,
                cycles,
            } => {
                finite("from", from)?;
                finite("peak", peak)?;
                positive("rate", rate)?;
                if from == peak {
                    return Err("peak must differ from the starting level".into());
                }
                if cycles == 0 {
                    return Err("cycles must be >= 1".into());
                }
                Ok(())
            }
        }
    }
}

/// A piecewise voltage waveform for one terminal.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Waveform {
    pub segments: Vec<Segment>,
}

impl Waveform {
    pub fn new(segments: Vec<Segment>) -> Self {
        Waveform { segments }
    }

    /// A grounded terminal.
    pub fn ground() -> Self {
        Waveform::default()
    }

    pub fn hold(level: f64, duration: f64) -> Self {
        Waveform::new(vec![Segment::Hold { level, duration }])
    }

    pub fn then(mut self, seg: Segment) -> Self {
        self.segments.push(seg);
        self
    }

    /// Appends all segments of `other` after this waveform.
    pub fn concat(&self, other: &Waveform) -> Waveform {
        let mut segments = self.segments.clone();
        segments.extend_from_slice(&other.segments);
        Waveform { segments }
    }

    pub fn scaled(&self, k: f64) -> Waveform {
        Waveform {
            segments: self.segments.iter().map(|s| s.scaled(k)).collect(),
        }
    }

    pub fn total_duration(&self) -> f64 {
        self.segments.iter().map(Segment::duration).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn has_sweep(&self) -> bool {
        self.segments
            .iter()
            .any(|s| matches!(s, Segment::TriangleSweep { .. }))
    }

    /// Voltage at time `t` (s).
    pub fn value_at(&self, t: f64) -> f64 {
        let mut start = 0.0;
        for seg in &self.segments {
            let end = start + seg.duration();
            if t < end {
                return seg.value_at((t - start).max(0.0));
            }
            start = end;
        }
        self.segments.last().map_or(0.0, Segment::end_value)
    }

    pub fn validate(&self) -> Result<(), StimulusError> {
        for (index, seg) in self.segments.iter().enumerate() {
            seg.validate()
                .map_err(|reason| StimulusError::InvalidSegment { index, reason })?;
        }
        Ok(())
    }
}

/// Evaluates `w` at `t`; free-function form of [`Waveform::value_at`].
pub fn waveform_value(w: &Waveform, t: f64) -> f64 {
    w.value_at(t)
}

/// Terminal selector for sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Terminal {
    In,
    Out,
    Gate,
}

impl std::fmt::Display for Terminal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Terminal::In => "in",
            Terminal::Out => "out",
            Terminal::Gate => "gate",
        })
    }
}

/// One simulated experiment: device parameters plus per-terminal stimuli.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub label: String,
    /// Fixed simulation step (s).
    pub dt: f64,
    /// Requested simulated time (s); extended to cover every waveform.
    pub duration: f64,
    pub params: GsdParams,
    #[serde(default)]
    pub gate: Waveform,
    #[serde(default, rename = "in")]
    pub input: Waveform,
    #[serde(default, rename = "out")]
    pub output: Waveform,
}

impl Scenario {
    pub fn waveform(&self, terminal: Terminal) -> &Waveform {
        match terminal {
            Terminal::In => &self.input,
            Terminal::Out => &self.output,
            Terminal::Gate => &self.gate,
        }
    }

    pub fn validate(&self) -> Result<(), StimulusError> {
        let bad = |reason: String| StimulusError::InvalidScenario {
            label: self.label.clone(),
            reason,
        };
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(bad(format!("dt must be > 0, got {}", self.dt)));
        }
        if !(self.duration.is_finite() && self.duration >= self.dt) {
            return Err(bad(format!(
                "duration {} must be at least dt {}",
                self.duration, self.dt
            )));
        }
        self.params
            .validate()
            .map_err(|source| StimulusError::InvalidParams {
                label: self.label.clone(),
                source,
            })?;
        for (name, w) in [
            ("gate", &self.gate),
            ("in", &self.input),
            ("out", &self.output),
        ] {
            w.validate()
                .map_err(|e| bad(format!("{name} waveform: {e}")))?;
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Scenario, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }

    /// Copy with the gate waveform scaled by `k`.
    pub fn with_gate_scaled(&self, k: f64) -> Scenario {
        Scenario {
            gate: self.gate.scaled(k),
            ..self.clone()
        }
    }
}

/// Simulated time span: the declared duration or the longest waveform, whichever is larger.
pub fn scenario_duration(s: &Scenario) -> f64 {
    [&s.gate, &s.input, &s.output]
        .into_iter()
        .map(Waveform::total_duration)
        .fold(s.duration, f64::max)
}
