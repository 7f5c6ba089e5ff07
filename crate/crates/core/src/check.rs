//! Runtime invariant suite behind `gsdsim check`.
//!
//! Each property returns a [`PropertyResult`]; the suite runs the preset
//! scenarios in parallel and the analytic properties on fixed grids and a
//! seeded random sample.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::engine::{run, Trace};
use crate::model::{
    branch_weights, channel_current, conductance, delta_x, delta_x_min, norm_constants, GsdParams,
    GsdState, Model, Polarity, TerminalVoltages,
};
use crate::presets::{self, Preset};
use crate::stimulus::{Scenario, Waveform};

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, failure: Option<String>, ok_detail: String) -> PropertyResult {
    match failure {
        None => PropertyResult {
            name,
            passed: true,
            detail: ok_detail,
        },
        Some(detail) => PropertyResult {
            name,
            passed: false,
            detail,
        },
    }
}

/// Checks the per-record invariants of a trace; returns the first violation.
pub fn trace_violation(trace: &Trace) -> Option<String> {
    let p = &trace.params;
    let g_lo = p.g_min * (1.0 - 1e-6);
    let mut prev_t = f64::NEG_INFINITY;
    for r in &trace.records {
        if r.fields().iter().any(|v| !v.is_finite()) {
            return Some(format!("non-finite value at t = {}", r.t));
        }
        if r.t <= prev_t {
            return Some(format!("time not increasing at t = {}", r.t));
        }
        prev_t = r.t;
        if !(0.0 <= r.x_min && r.x_min <= r.x && r.x <= 1.0) {
            return Some(format!(
                "state bounds broken at t = {}: x_min = {}, x = {}",
                r.t, r.x_min, r.x
            ));
        }
        if !(g_lo <= r.g_syn && r.g_syn <= p.g_max) {
            return Some(format!("g_syn = {} out of range at t = {}", r.g_syn, r.t));
        }
    }
    None
}

fn preset_traces() -> Vec<(&'static Preset, Trace, Trace)> {
    presets::all()
        .par_iter()
        .map(|p| {
            let a = run(&p.scenario).expect("preset scenarios are valid");
            let b = run(&p.scenario).expect("preset scenarios are valid");
            (p, a, b)
        })
        .collect()
}

fn preset_sweep(traces: &[(&'static Preset, Trace, Trace)]) -> PropertyResult {
    let failure = traces
        .iter()
        .find_map(|(p, t, _)| trace_violation(t).map(|e| format!("{}: {e}", p.id)));
    outcome(
        "preset-trace-invariants",
        failure,
        format!("{} presets", traces.len()),
    )
}

fn determinism(traces: &[(&'static Preset, Trace, Trace)]) -> PropertyResult {
    let failure = traces
        .iter()
        .find(|(_, a, b)| a.to_csv_string() != b.to_csv_string())
        .map(|(p, _, _)| format!("{}: repeat run differs", p.id));
    outcome("determinism", failure, "byte-identical repeat runs".into())
}

fn flipped_potentiation(traces: &[(&'static Preset, Trace, Trace)]) -> PropertyResult {
    let mut checked = 0;
    let failure = traces.iter().find_map(|(p, t, _)| {
        if p.params.f != Polarity::Flipped {
            return None;
        }
        let end = p.potentiation_end?;
        checked += 1;
        let r = t.records.iter().take_while(|r| r.t <= end).last()?;
        (r.x <= p.params.x_start).then(|| {
            format!(
                "{}: x = {} at end of potentiation, x_start = {}",
                p.id, r.x, p.params.x_start
            )
        })
    });
    outcome(
        "flipped-polarity-potentiates",
        failure,
        format!("{checked} presets"),
    )
}

fn parameter_sets() -> Vec<GsdParams> {
    let mut sets: Vec<GsdParams> = presets::all().iter().map(|p| p.params).collect();
    sets.push(GsdParams::default());
    sets
}

fn random_window(rng: &mut StdRng) -> (f64, f64) {
    loop {
        let g_min = 10f64.powf(rng.gen_range(-13.0..-2.0));
        let g_max = 10f64.powf(rng.gen_range(-13.0..-2.0));
        if g_max > 2.0 * g_min {
            return (g_min, g_max);
        }
    }
}

fn monotone_conductance() -> PropertyResult {
    let mut failure = None;
    'outer: for base in parameter_sets() {
        for i in 0..=20 {
            let p = GsdParams {
                g_c: i as f64 / 20.0,
                ..base
            };
            let n = norm_constants(&p);
            let mut prev = conductance(0.0, &p, &n);
            for k in 1..=1000 {
                let g = conductance(k as f64 * 1e-3, &p, &n);
                if g.is_nan() || g <= prev {
                    failure = Some(format!(
                        "g_c = {}, window [{:e}, {:e}]: not increasing at x = {}",
                        p.g_c,
                        p.g_min,
                        p.g_max,
                        k as f64 * 1e-3
                    ));
                    break 'outer;
                }
                prev = g;
            }
        }
    }
    outcome("monotone-conductance", failure, "1e-3 grid".into())
}

fn endpoint_normalization() -> PropertyResult {
    let mut failure = None;
    'outer: for base in parameter_sets() {
        for g_c in [0.0, 0.25, 0.5, 0.75, 1.0, base.g_c] {
            let p = GsdParams { g_c, ..base };
            let n = norm_constants(&p);
            let g0 = conductance(0.0, &p, &n);
            let g1 = conductance(1.0, &p, &n);
            let exact_start = [0.0, 0.5].contains(&g_c);
            let start_ok = if exact_start {
                g0 == p.g_min
            } else {
                (g0 - p.g_min).abs() <= 1e-6 * p.g_min
            };
            let floor = p.g_max * (1.0 - n.g_range - 2.0 * p.g_min / p.g_max);
            let end_ok = g1 >= floor && g1 <= p.g_max;
            if !(start_ok && end_ok) {
                failure = Some(format!(
                    "g_c = {g_c}, window [{:e}, {:e}]: g(0) = {g0:e}, g(1) = {g1:e}",
                    p.g_min, p.g_max
                ));
                break 'outer;
            }
        }
    }
    outcome(
        "endpoint-normalization",
        failure,
        "g(0) = g_min, g(1) near g_max".into(),
    )
}

fn blend_partition() -> PropertyResult {
    let failure = (0..=1000).find_map(|i| {
        let g_c = i as f64 / 1000.0;
        let sum: f64 = branch_weights(g_c).iter().sum();
        ((sum - 1.0).abs() > 1e-15).then(|| format!("g_c = {g_c}: weights sum to {sum}"))
    });
    outcome("blend-partition", failure, "1001 values of g_c".into())
}

fn ulps_apart(a: f64, b: f64) -> u64 {
    let key = |v: f64| {
        let bits = v.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    };
    key(a).abs_diff(key(b))
}

fn s_equals_p() -> PropertyResult {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut windows: Vec<(f64, f64)> = parameter_sets()
        .iter()
        .map(|p| (p.g_min, p.g_max))
        .collect();
    windows.extend((0..10_000).map(|_| random_window(&mut rng)));
    let failure = windows.iter().find_map(|&(g_min, g_max)| {
        let p = GsdParams {
            g_min,
            g_max,
            ..GsdParams::default()
        };
        let n = norm_constants(&p);
        (ulps_apart(n.s, n.p) > 4)
            .then(|| format!("window [{g_min:e}, {g_max:e}]: s = {}, p = {}", n.s, n.p))
    });
    outcome("s-equals-p", failure, format!("{} windows", windows.len()))
}

fn current_properties() -> PropertyResult {
    let mut failure = None;
    'outer: for b_rev in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let p = GsdParams {
            b_rev,
            ..GsdParams::default()
        };
        for g in [1e-11, 1e-6, 1e-3] {
            let at_zero = channel_current(0.0, g, &p);
            let left = channel_current(-1e-12, g, &p);
            let right = channel_current(1e-12, g, &p);
            if at_zero != 0.0 || left.abs() > 2e-12 * g || right.abs() > 2e-12 * g {
                failure = Some(format!("discontinuous at dv = 0 for b_rev = {b_rev}"));
                break 'outer;
            }
            // linear in b_rev between the diode and ohmic values
            for dv in [-2.0, -0.5, -0.01] {
                let diode = g * f64::exp_m1(dv);
                let ohmic = g * dv;
                let want = b_rev * ohmic + (1.0 - b_rev) * diode;
                let got = channel_current(dv, g, &p);
                if (got - want).abs() > 1e-12 * want.abs() {
                    failure = Some(format!("b_rev = {b_rev}, dv = {dv}: {got} vs {want}"));
                    break 'outer;
                }
            }
        }
    }
    outcome(
        "current-continuity-and-blend",
        failure,
        "b_rev in {0, .25, .5, .75, 1}".into(),
    )
}

fn set_scenario(dt: f64) -> Scenario {
    Scenario {
        label: "ideal-set".into(),
        dt,
        duration: 1e-6,
        params: GsdParams::default(),
        gate: Waveform::hold(1.0, 1e-6),
        input: Waveform::hold(0.1, 1e-6),
        output: Waveform::ground(),
    }
}

fn ideal_set_time() -> PropertyResult {
    let failure = [1e-8, 2.5e-9, 1e-9].into_iter().find_map(|dt| {
        let trace = run(&set_scenario(dt)).ok()?;
        let x = trace.last().x;
        ((x - 1.0).abs() > 1e-9).then(|| format!("dt = {dt}: x(t_set) = {x}"))
    });
    outcome("ideal-set-time", failure, "x(t_set) = 1".into())
}

fn threshold_inertness() -> PropertyResult {
    let mut rng = StdRng::seed_from_u64(7);
    let failure = presets::all().iter().find_map(|preset| {
        let p = GsdParams {
            r_stp: 0.0,
            r_ltp: 0.0,
            x_start: 0.5,
            v_t: preset.params.v_t.max(0.5),
            o_c: 0.0,
            ..preset.params
        };
        let model = Model::new(p).ok()?;
        let mut s = GsdState::initial(&p);
        for k in 1..=1000 {
            let v_gate = rng.gen_range(-p.v_t..=p.v_t);
            let v = TerminalVoltages::new(rng.gen_range(-2.0..2.0), 0.0, v_gate);
            s = model.step(&s, &v, k as f64 * 1e-3).ok()?.state;
        }
        (s.x != 0.5 || s.x_min != 0.0).then(|| format!("{}: x drifted to {}", preset.id, s.x))
    });
    outcome("threshold-inertness", failure, "sub-threshold gate".into())
}

fn state_bounds_fuzz() -> PropertyResult {
    let mut rng = StdRng::seed_from_u64(11);
    let failure = presets::all().iter().find_map(|preset| {
        let model = Model::new(preset.params).ok()?;
        let mut s = GsdState::initial(&preset.params);
        let mut t = 0.0;
        for _ in 0..2000 {
            t += rng.gen_range(0.0..0.2) * preset.params.t_set;
            let v = TerminalVoltages::new(
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-6.0..6.0),
            );
            s = model.step(&s, &v, t).ok()?.state;
            if !(0.0 <= s.x_min && s.x_min <= s.x && s.x <= 1.0) {
                return Some(format!("{}: x_min = {}, x = {}", preset.id, s.x_min, s.x));
            }
        }
        None
    });
    outcome(
        "state-bounds-fuzz",
        failure,
        "2000 random steps per preset".into(),
    )
}

fn n_amp_asymmetry() -> PropertyResult {
    let failure = [1.0, 40.0, 345.0].into_iter().find_map(|n_amp| {
        let p = GsdParams {
            n_amp,
            t_set: 1.0,
            x_start: 0.5,
            ..GsdParams::default()
        };
        let model = Model::new(p).ok()?;
        let s = GsdState::initial(&p);
        let dt = 1.0 / 1024.0;
        let up = model
            .step(&s, &TerminalVoltages::new(0.0, 0.0, 1.0), dt)
            .ok()?
            .state
            .x
            - 0.5;
        let down = 0.5
            - model
                .step(&s, &TerminalVoltages::new(0.0, 0.0, -1.0), dt)
                .ok()?
                .state
                .x;
        (down != n_amp * up).then(|| format!("n_amp = {n_amp}: +{up} vs -{down}"))
    });
    outcome("n-amp-asymmetry", failure, "n_amp in {1, 40, 345}".into())
}

fn polarity_flip() -> PropertyResult {
    let failure = presets::all()
        .iter()
        .filter(|p| p.params.f == Polarity::Flipped)
        .find_map(|preset| {
            let flipped = run(&preset.scenario).ok()?;
            let mirrored = Scenario {
                params: GsdParams {
                    f: Polarity::Normal,
                    ..preset.params
                },
                gate: preset.scenario.gate.scaled(-1.0),
                ..preset.scenario.clone()
            };
            let normal = run(&mirrored).ok()?;
            flipped
                .records
                .iter()
                .zip(&normal.records)
                .find(|(a, b)| {
                    (a.v_eff, a.x, a.x_min, a.g_syn, a.i_syn)
                        != (b.v_eff, b.x, b.x_min, b.g_syn, b.i_syn)
                })
                .map(|(a, _)| format!("{}: trajectories diverge at t = {}", preset.id, a.t))
        });
    outcome("polarity-flip", failure, "all flipped presets".into())
}

fn ltp_proportionality() -> PropertyResult {
    let mut rng = StdRng::seed_from_u64(3);
    let failure = (0..1000).find_map(|_| {
        let p = GsdParams {
            q_ltp: rng.gen_range(0.0..=1.0),
            v_t: rng.gen_range(0.0..2.0),
            t_c: rng.gen_range(0.0..=1.0),
            t_set: 10f64.powf(rng.gen_range(-6.0..4.0)),
            ..GsdParams::default()
        };
        let v = rng.gen_range(-10.0..10.0);
        let dt = rng.gen_range(0.0..1.0) * p.t_set;
        let (a, b) = (delta_x_min(v, dt, &p), p.q_ltp * delta_x(v, dt, &p));
        (a != b).then(|| format!("q_ltp = {}: {a} vs {b}", p.q_ltp))
    });
    outcome("ltp-proportionality", failure, "1000 random inputs".into())
}

fn decay_convergence() -> PropertyResult {
    let p = GsdParams {
        r_stp: 2.0,
        t_set: 0.5,
        x_start: 1.0,
        ..GsdParams::default()
    };
    let rate = p.r_stp * p.t_set;
    let s = Scenario {
        label: "decay".into(),
        dt: 0.01,
        duration: 20.0 / rate,
        params: p,
        gate: Waveform::ground(),
        input: Waveform::ground(),
        output: Waveform::ground(),
    };
    let failure = match run(&s) {
        Err(e) => Some(e.to_string()),
        Ok(trace) => {
            let mono = trace
                .records
                .windows(2)
                .find(|w| w[1].x > w[0].x || w[1].x < w[1].x_min)
                .map(|w| format!("x rose or undershot at t = {}", w[1].t));
            mono.or_else(|| {
                let r = trace.last();
                ((r.x - r.x_min).abs() >= 1e-6).then(|| format!("x(T) - x_min = {}", r.x - r.x_min))
            })
        }
    };
    outcome("decay-convergence", failure, "gate grounded".into())
}

/// Final `x` of `s` re-run at step `dt`.
pub fn final_x_at(s: &Scenario, dt: f64) -> Option<f64> {
    let s = Scenario { dt, ..s.clone() };
    run(&s).ok().map(|t| t.last().x)
}

fn step_size_consistency() -> PropertyResult {
    let preset = presets::get("bao-2c").expect("bao-2c is registered");
    let dt = preset.scenario.dt;
    let xs: Option<Vec<f64>> = [dt, dt / 10.0, dt / 100.0]
        .into_iter()
        .map(|h| final_x_at(&preset.scenario, h))
        .collect();
    let failure = match xs {
        None => Some("run failed".into()),
        Some(xs) => {
            let coarse = (xs[0] - xs[1]).abs();
            let fine = (xs[1] - xs[2]).abs();
            (coarse >= 10.0 * fine).then(|| {
                format!("|x(dt) - x(dt/10)| = {coarse:e}, |x(dt/10) - x(dt/100)| = {fine:e}")
            })
        }
    };
    outcome(
        "forward-euler-consistency",
        failure,
        "bao-2c at dt, dt/10, dt/100".into(),
    )
}

/// Runs every property; the CLI prints the results as a table.
pub fn run_all() -> Vec<PropertyResult> {
    let traces = preset_traces();
    let mut results = vec![
        preset_sweep(&traces),
        determinism(&traces),
        flipped_potentiation(&traces),
    ];
    let analytic: Vec<fn() -> PropertyResult> = vec![
        monotone_conductance,
        endpoint_normalization,
        blend_partition,
        s_equals_p,
        current_properties,
        ideal_set_time,
        threshold_inertness,
        state_bounds_fuzz,
        n_amp_asymmetry,
        polarity_flip,
        ltp_proportionality,
        decay_convergence,
        step_size_consistency,
    ];
    results.extend(analytic.par_iter().map(|f| f()).collect::<Vec<_>>());
    results
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ulp_distance() {
        assert_eq!(ulps_apart(1.0, 1.0), 0);
        assert_eq!(ulps_apart(1.0, f64::from_bits(1.0f64.to_bits() + 3)), 3);
        assert_eq!(ulps_apart(-0.0, 0.0), 0);
    }

    #[test]
    fn analytic_properties_pass() {
        for f in [
            monotone_conductance,
            endpoint_normalization,
            blend_partition,
            s_equals_p,
            current_properties,
            ideal_set_time,
            threshold_inertness,
            state_bounds_fuzz,
            n_amp_asymmetry,
            ltp_proportionality,
            decay_convergence,
        ] {
            let r = f();
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn violation_detector_flags_bad_records() {
        let mut trace = run(&set_scenario(1e-8)).unwrap();
        assert_eq!(trace_violation(&trace), None);
        trace.records[3].x_min = trace.records[3].x + 0.1;
        assert!(trace_violation(&trace).is_some());
    }
}
