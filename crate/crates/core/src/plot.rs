//! Static SVG plots of a trace.
//!
//! Two stacked panels: conductance against time, and current against time
//! (or against the swept terminal voltage for sweep traces). No text is
//! rendered so the output does not depend on system fonts.

use std::path::Path;

use plotters::prelude::*;

use crate::engine::{Trace, TraceRecord};
use crate::stimulus::Terminal;

#[derive(Debug, thiserror::Error)]
#[error("plotting failed: {0}")]
pub struct PlotError(String);

fn bounds(values: impl Iterator<Item = f64> + Clone) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    if !lo.is_finite() || !hi.is_finite() {
        return (0.0, 1.0);
    }
    let pad = if hi > lo {
        (hi - lo) * 0.05
    } else {
        lo.abs().max(1e-30) * 0.05
    };
    (lo - pad, hi + pad)
}

fn panel<DB: DrawingBackend>(
    area: &DrawingArea<DB, plotters::coord::Shift>,
    points: &[(f64, f64)],
    color: RGBColor,
) -> Result<(), PlotError>
where
    DB::ErrorType: 'static,
{
    let (x0, x1) = bounds(points.iter().map(|p| p.0));
    let (y0, y1) = bounds(points.iter().map(|p| p.1));
    let mut chart = ChartBuilder::on(area)
        .margin(20)
        .build_cartesian_2d(x0..x1, y0..y1)
        .map_err(|e| PlotError(e.to_string()))?;
    chart
        .configure_mesh()
        .disable_x_mesh()
        .disable_y_mesh()
        .x_labels(0)
        .y_labels(0)
        .draw()
        .map_err(|e| PlotError(e.to_string()))?;
    chart
        .draw_series(LineSeries::new(points.iter().copied(), &color))
        .map_err(|e| PlotError(e.to_string()))?;
    Ok(())
}

fn swept_voltage(r: &TraceRecord, terminal: Terminal) -> f64 {
    match terminal {
        Terminal::In => r.v_in,
        Terminal::Out => r.v_out,
        Terminal::Gate => r.v_gate,
    }
}

// Long traces are thinned to at most this many points per panel.
const MAX_POINTS: usize = 4000;

pub fn write_svg(trace: &Trace, path: &Path) -> Result<(), PlotError> {
    let stride = (trace.records.len() / MAX_POINTS).max(1);
    let records: Vec<&TraceRecord> = trace.records.iter().step_by(stride).collect();
    let conductance: Vec<(f64, f64)> = records.iter().map(|r| (r.t, r.g_syn)).collect();
    let current: Vec<(f64, f64)> = match trace.sweep {
        Some(terminal) => records
            .iter()
            .map(|r| (swept_voltage(r, terminal), r.i_syn))
            .collect(),
        None => records.iter().map(|r| (r.t, r.i_syn)).collect(),
    };

    let root = SVGBackend::new(path, (800, 800)).into_drawing_area();
    root.fill(&WHITE).map_err(|e| PlotError(e.to_string()))?;
    let halves = root.split_evenly((2, 1));
    panel(&halves[0], &conductance, BLUE)?;
    panel(&halves[1], &current, RED)?;
    root.present().map_err(|e| PlotError(e.to_string()))?;
    Ok(())
}
