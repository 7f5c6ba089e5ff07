//! Behavioral equations of the gated-synaptic device (GSD).
//!
//! A GSD has a channel between `v_in` and `v_out` whose conductance is set by
//! a unitless state `x` in `[0, 1]`. The gate terminal programs `x`; the state
//! decays toward a long-term floor `x_min` which is itself programmable and
//! slowly decays. Everything here is pure arithmetic on `f64` values; the
//! stateful recurrence lives in [`Model::step`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Upper bound of the state variable.
pub const X_MAX: f64 = 1.0;

/// Gate polarity. `Flipped` devices potentiate under negative gate bias.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub enum Polarity {
    Normal,
    Flipped,
}

impl Polarity {
    pub fn sign(self) -> f64 {
        match self {
            Polarity::Normal => 1.0,
            Polarity::Flipped => -1.0,
        }
    }
}

impl TryFrom<f64> for Polarity {
    type Error = String;

    fn try_from(v: f64) -> Result<Self, Self::Error> {
        if v == 1.0 {
            Ok(Polarity::Normal)
        } else if v == -1.0 {
            Ok(Polarity::Flipped)
        } else {
            Err(format!("polarity flag f must be 1 or -1, got {v}"))
        }
    }
}

impl From<Polarity> for f64 {
    fn from(p: Polarity) -> f64 {
        p.sign()
    }
}

/// The fourteen user-defined behavioral parameters.
///
/// Field names match the parameter names used in scenario files. Missing
/// fields in a file take the [`Default`] value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GsdParams {
    /// Blend across inverse-exponential (0), linear (0.5) and sigmoid (1) conductance curves.
    pub g_c: f64,
    /// Reverse-bias blend: 1 is ohmic, 0 is diode-like.
    pub b_rev: f64,
    /// Minimum conductance (S).
    pub g_min: f64,
    /// Maximum conductance (S).
    pub g_max: f64,
    /// Ideal set time (s): time to drive `x` from 0 to 1 at 1 V above threshold.
    pub t_set: f64,
    /// Gate threshold voltage (V).
    pub v_t: f64,
    /// Gain applied to negative effective gate voltage.
    pub n_amp: f64,
    /// Channel-bias coupling into the effective gate voltage.
    pub o_c: f64,
    /// Threshold emphasis in the state increment.
    pub t_c: f64,
    /// Short-term decay rate.
    pub r_stp: f64,
    /// Long-term potentiation rate relative to the short-term increment.
    pub q_ltp: f64,
    /// Long-term (linear) decay rate.
    pub r_ltp: f64,
    /// Gate polarity flag, serialized as `1` or `-1`.
    pub f: Polarity,
    /// Initial value of `x`.
    pub x_start: f64,
}

impl Default for GsdParams {
    fn default() -> Self {
        GsdParams {
            g_c: 0.0,
            b_rev: 1.0,
            g_min: 1e-11,
            g_max: 1e-6,
            t_set: 1e-6,
            v_t: 0.0,
            n_amp: 1.0,
            o_c: 0.0,
            t_c: 0.0,
            r_stp: 0.0,
            q_ltp: 0.0,
            r_ltp: 0.0,
            f: Polarity::Normal,
            x_start: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("parameter `{field}` = {value} is outside its allowed range ({range})")]
    RangeViolation {
        field: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("g_min ({g_min:e} S) must be strictly below g_max ({g_max:e} S)")]
    DegenerateConductance { g_min: f64, g_max: f64 },
    #[error("g_max - g_min = {g_range:e} S; the sigmoid normalization needs a window below 1 S")]
    SigmoidUndefined { g_range: f64 },
    #[error(
        "g_max ({g_max:e} S) must exceed 2 * g_min ({g_min:e} S) for the normalization constants to be positive"
    )]
    ShallowWindow { g_min: f64, g_max: f64 },
}

fn check_range(
    field: &'static str,
    value: f64,
    range: &'static str,
    ok: impl Fn(f64) -> bool,
) -> Result<(), ParamError> {
    if value.is_finite() && ok(value) {
        Ok(())
    } else {
        Err(ParamError::RangeViolation {
            field,
            value,
            range,
        })
    }
}

impl GsdParams {
    /// Checks every range constraint; see [`validate_params`].
    pub fn validate(&self) -> Result<(), ParamError> {
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        check_range("g_c", self.g_c, "0 to 1", unit)?;
        check_range("b_rev", self.b_rev, "0 to 1", unit)?;
        check_range("o_c", self.o_c, "0 to 1", unit)?;
        check_range("t_c", self.t_c, "0 to 1", unit)?;
        check_range("q_ltp", self.q_ltp, "0 to 1", unit)?;
        check_range("x_start", self.x_start, "0 to 1", unit)?;
        check_range("g_min", self.g_min, "> 0", |v| v > 0.0)?;
        check_range("g_max", self.g_max, "> 0", |v| v > 0.0)?;
        check_range("t_set", self.t_set, "> 0", |v| v > 0.0)?;
        check_range("v_t", self.v_t, ">= 0", |v| v >= 0.0)?;
        check_range("n_amp", self.n_amp, "> 0", |v| v > 0.0)?;
        check_range("r_stp", self.r_stp, ">= 0", |v| v >= 0.0)?;
        check_range("r_ltp", self.r_ltp, ">= 0", |v| v >= 0.0)?;

        if self.g_min >= self.g_max {
            return Err(ParamError::DegenerateConductance {
                g_min: self.g_min,
                g_max: self.g_max,
            });
        }
        let g_range = self.g_max - self.g_min;
        if g_range >= 1.0 {
            return Err(ParamError::SigmoidUndefined { g_range });
        }
        if self.g_max <= 2.0 * self.g_min {
            return Err(ParamError::ShallowWindow {
                g_min: self.g_min,
                g_max: self.g_max,
            });
        }
        Ok(())
    }
}

/// Returns `p` unchanged when it satisfies every parameter constraint.
pub fn validate_params(p: GsdParams) -> Result<GsdParams, ParamError> {
    p.validate().map(|()| p)
}

/// Normalization constants that pin the conductance curves to `[g_min, g_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormConstants {
    /// Sigmoid offset, `ln(g_max/g_min - 1)`.
    pub s: f64,
    /// Sigmoid slope, `ln(1/g_range - 1) + s` with `g_range` taken as a number of siemens.
    pub m: f64,
    /// Inverse-exponential rate, `-ln(g_min/g_range)`.
    pub p: f64,
    pub g_range: f64,
}

/// Computes the normalization constants. `p` must already be validated.
pub fn norm_constants(p: &GsdParams) -> NormConstants {
    let g_range = p.g_max - p.g_min;
    // Below g_max = 3 g_min the direct forms cancel badly; evaluate them
    // through ln_1p around the exact difference g_max - 2 g_min instead.
    let (s, p_const) = if p.g_max >= 3.0 * p.g_min {
        ((g_range / p.g_min).ln(), -(p.g_min / g_range).ln())
    } else {
        let d = p.g_max - 2.0 * p.g_min;
        ((d / p.g_min).ln_1p(), -(-d / g_range).ln_1p())
    };
    let m = (1.0 / g_range - 1.0).ln() + s;
    NormConstants {
        s,
        m,
        p: p_const,
        g_range,
    }
}

/// Weights of the inverse-exponential, linear and sigmoid branches for a given `g_c`.
pub fn branch_weights(g_c: f64) -> [f64; 3] {
    [
        (1.0 - 2.0 * g_c).max(0.0),
        1.0 - (2.0 * g_c - 1.0).abs(),
        (2.0 * g_c - 1.0).max(0.0),
    ]
}

/// Channel conductance (S) at state `x`.
///
/// The inverse-exponential branch carries a `+g_min` offset so that every
/// `g_c` starts from `g_min` at `x = 0`.
pub fn conductance(x: f64, p: &GsdParams, n: &NormConstants) -> f64 {
    let [w_exp, w_lin, w_sig] = branch_weights(p.g_c);
    let inv_exp = n.g_range * (1.0 - (-n.p * x).exp()) + p.g_min;
    let linear = n.g_range * x + p.g_min;
    let sigmoid = p.g_max / (1.0 + (-n.m * x + n.s).exp());
    w_exp * inv_exp + w_lin * linear + w_sig * sigmoid
}

/// Channel current (A) for channel bias `dv = v_in - v_out`.
///
/// Forward bias is ohmic. Reverse bias blends the ohmic term with a
/// diode-like `g_syn * (e^dv - 1)` term by `b_rev`.
pub fn channel_current(dv: f64, g_syn: f64, p: &GsdParams) -> f64 {
    if dv >= 0.0 {
        g_syn * dv
    } else {
        p.b_rev * g_syn * dv + (1.0 - p.b_rev) * g_syn * dv.exp_m1()
    }
}

/// Instantaneous terminal voltages (V).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TerminalVoltages {
    pub v_in: f64,
    pub v_out: f64,
    pub v_gate: f64,
}

impl TerminalVoltages {
    pub fn new(v_in: f64, v_out: f64, v_gate: f64) -> Self {
        TerminalVoltages {
            v_in,
            v_out,
            v_gate,
        }
    }

    /// Channel bias `v_in - v_out`.
    pub fn channel_bias(&self) -> f64 {
        self.v_in - self.v_out
    }
}

/// Gate voltage corrected by polarity and channel coupling.
pub fn effective_voltage(v: &TerminalVoltages, p: &GsdParams) -> f64 {
    p.f.sign() * v.v_gate - p.o_c * v.channel_bias()
}

/// Applies the depression gain to a negative effective voltage.
///
/// Only meaningful once the threshold guard `|v_eff| > v_t` has passed.
pub fn amplify_negative(v_eff: f64, p: &GsdParams) -> f64 {
    if v_eff < 0.0 {
        p.n_amp * v_eff
    } else {
        v_eff
    }
}

// sign(0) = 0, unlike f64::signum.
fn sign(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// State increment for an above-threshold (and already amplified) `v_eff` over `dt`.
pub fn delta_x(v_eff: f64, dt: f64, p: &GsdParams) -> f64 {
    let x_scale = dt / p.t_set;
    x_scale * (v_eff - sign(v_eff) * p.t_c * p.v_t)
}

/// Long-term floor increment; always `q_ltp` times [`delta_x`].
pub fn delta_x_min(v_eff: f64, dt: f64, p: &GsdParams) -> f64 {
    p.q_ltp * delta_x(v_eff, dt, p)
}

/// Short-term decrement of `x`, proportional to its distance above the floor.
pub fn decay_stp(x: f64, x_min: f64, dt: f64, p: &GsdParams) -> f64 {
    p.r_stp * p.t_set * (x - x_min) * dt
}

/// Linear long-term decrement of `x_min`.
pub fn decay_ltp(dt: f64, p: &GsdParams) -> f64 {
    p.r_ltp * p.t_set * dt
}

/// Dynamic state of one device.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GsdState {
    pub x: f64,
    pub x_min: f64,
    /// Time of the previous evaluation (s).
    pub t_last: f64,
}

impl GsdState {
    /// Initial state at `t = 0`: `x = x_start`, no long-term floor.
    pub fn initial(p: &GsdParams) -> Self {
        GsdState {
            x: p.x_start * X_MAX,
            x_min: 0.0,
            t_last: 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("evaluation time {t_now} s precedes the previous evaluation at {t_last} s")]
pub struct NonMonotonicTime {
    pub t_now: f64,
    pub t_last: f64,
}

/// Observables produced by one evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepOutput {
    pub state: GsdState,
    /// Effective gate voltage after the depression gain (when above threshold).
    pub v_eff: f64,
    pub g_syn: f64,
    pub i_syn: f64,
}

/// Validated parameters paired with their normalization constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Model {
    params: GsdParams,
    norm: NormConstants,
}

impl Model {
    pub fn new(params: GsdParams) -> Result<Self, ParamError> {
        params.validate()?;
        Ok(Model {
            params,
            norm: norm_constants(&params),
        })
    }

    pub fn params(&self) -> &GsdParams {
        &self.params
    }

    pub fn norm(&self) -> &NormConstants {
        &self.norm
    }

    pub fn conductance(&self, x: f64) -> f64 {
        conductance(x, &self.params, &self.norm)
    }

    pub fn current(&self, dv: f64, g_syn: f64) -> f64 {
        channel_current(dv, g_syn, &self.params)
    }

    fn gated_voltage(&self, v: &TerminalVoltages) -> (f64, bool) {
        let v_eff = effective_voltage(v, &self.params);
        if v_eff.abs() > self.params.v_t {
            (amplify_negative(v_eff, &self.params), true)
        } else {
            (v_eff, false)
        }
    }

    /// Observables for `state` under `v` without advancing it.
    pub fn observe(&self, state: &GsdState, v: &TerminalVoltages) -> StepOutput {
        let (v_eff, _) = self.gated_voltage(v);
        let g_syn = self.conductance(state.x);
        StepOutput {
            state: *state,
            v_eff,
            g_syn,
            i_syn: self.current(v.channel_bias(), g_syn),
        }
    }

    /// Advances `state` to `t_now` under terminal voltages `v` (one forward-Euler step).
    ///
    /// Order: programming update, short-term decay of `x`, long-term decay of
    /// `x_min`, clamp `x_min` to `[0, 1]`, then clamp `x` to `[x_min, 1]`.
    pub fn step(
        &self,
        state: &GsdState,
        v: &TerminalVoltages,
        t_now: f64,
    ) -> Result<StepOutput, NonMonotonicTime> {
        if t_now.is_nan() || t_now < state.t_last {
            return Err(NonMonotonicTime {
                t_now,
                t_last: state.t_last,
            });
        }
        let p = &self.params;
        let dt = t_now - state.t_last;
        let mut x = state.x;
        let mut x_min = state.x_min;

        let (v_eff, above) = self.gated_voltage(v);
        if above {
            x += delta_x(v_eff, dt, p);
            x_min += delta_x_min(v_eff, dt, p);
        }
        if x > x_min {
            x -= decay_stp(x, x_min, dt, p);
        }
        if x_min > 0.0 {
            x_min -= decay_ltp(dt, p);
        }
        x_min = x_min.clamp(0.0, X_MAX);
        x = x.clamp(x_min, X_MAX);

        let g_syn = self.conductance(x);
        Ok(StepOutput {
            state: GsdState {
                x,
                x_min,
                t_last: t_now,
            },
            v_eff,
            g_syn,
            i_syn: self.current(v.channel_bias(), g_syn),
        })
    }
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn defaults() -> GsdParams {
        GsdParams::default()
    }

    fn rel_close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn default_row_validates() {
        assert_eq!(validate_params(defaults()), Ok(defaults()));
    }

    #[test]
    fn out_of_range_g_c_is_rejected() {
        let p = GsdParams {
            g_c: 1.5,
            ..defaults()
        };
        match validate_params(p) {
            Err(ParamError::RangeViolation { field, .. }) => assert_eq!(field, "g_c"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn inverted_window_is_degenerate() {
        let p = GsdParams {
            g_min: 2e-6,
            ..defaults()
        };
        assert!(matches!(
            validate_params(p),
            Err(ParamError::DegenerateConductance { .. })
        ));
    }

    #[test]
    fn window_of_one_siemens_is_rejected() {
        let p = GsdParams {
            g_min: 1e-3,
            g_max: 1.5,
            ..defaults()
        };
        assert!(matches!(
            validate_params(p),
            Err(ParamError::SigmoidUndefined { .. })
        ));
    }

    #[test]
    fn shallow_window_is_rejected() {
        let p = GsdParams {
            g_min: 1e-9,
            g_max: 1.5e-9,
            ..defaults()
        };
        assert!(matches!(
            validate_params(p),
            Err(ParamError::ShallowWindow { .. })
        ));
    }

    #[test]
    fn nan_is_a_range_violation() {
        let p = GsdParams {
            t_set: f64::NAN,
            ..defaults()
        };
        assert!(matches!(
            validate_params(p),
            Err(ParamError::RangeViolation { field: "t_set", .. })
        ));
    }

    #[test]
    fn polarity_rejects_other_values() {
        assert!(Polarity::try_from(0.5).is_err());
        assert_eq!(Polarity::try_from(-1.0), Ok(Polarity::Flipped));
    }

    // Reference values computed with 50-digit arithmetic.
    #[test]
    fn norm_constants_for_default_window() {
        let n = norm_constants(&defaults());
        assert!(rel_close(n.g_range, 9.9999e-7, 1e-15));
        assert!(rel_close(n.s, 11.512915464920228, 1e-14));
        assert!(rel_close(n.p, 11.512915464920228, 1e-14));
        assert!(rel_close(n.m, 25.328435022944003, 1e-14));
    }

    #[test]
    fn norm_constants_for_herrmann_window() {
        let p = GsdParams {
            g_min: 6e-12,
            g_max: 6e-9,
            ..defaults()
        };
        let n = norm_constants(&p);
        assert!(rel_close(n.g_range, 5.994e-9, 1e-14));
        assert!(rel_close(n.s, 6.906754778648554, 1e-13));
        assert!(rel_close(n.m, 25.839261640706493, 1e-13));
    }

    #[test]
    fn branch_weights_partition_unity() {
        for i in 0..=1000 {
            let g_c = i as f64 / 1000.0;
            let w = branch_weights(g_c);
            assert!(w.iter().all(|&v| v >= 0.0));
            assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-15, "g_c={g_c}");
        }
    }

    #[test]
    fn conductance_endpoints() {
        let p = GsdParams {
            g_c: 0.5,
            ..defaults()
        };
        let n = norm_constants(&p);
        assert_eq!(conductance(0.0, &p, &n), p.g_min);
        assert!(rel_close(conductance(1.0, &p, &n), p.g_max, 1e-15));

        let p = GsdParams {
            g_c: 1.0,
            ..defaults()
        };
        let n = norm_constants(&p);
        assert!(rel_close(conductance(0.0, &p, &n), 1e-11, 1e-12));
        // sigmoid top endpoint g_max * (1 - g_range)
        assert!(rel_close(conductance(1.0, &p, &n), 9.9999900001e-7, 1e-12));

        let p = defaults();
        let n = norm_constants(&p);
        assert_eq!(conductance(0.0, &p, &n), p.g_min);
    }

    #[test]
    fn conductance_interior_reference_points() {
        // x = 0.3, default window, 50-digit reference.
        for (g_c, want) in [
            (0.0, 9.6837744475808446e-7),
            (0.25, 6.3419222237904223e-7),
            (0.75, 1.5978474495838777e-7),
        ] {
            let p = GsdParams { g_c, ..defaults() };
            let n = norm_constants(&p);
            let got = conductance(0.3, &p, &n);
            assert!(rel_close(got, want, 1e-12), "g_c={g_c}: {got} vs {want}");
        }
    }

    #[test]
    fn current_reference_points() {
        let p = GsdParams {
            b_rev: 0.0,
            ..defaults()
        };
        assert!(rel_close(
            channel_current(-0.5, 1e-6, &p),
            -3.9346934028736658e-7,
            1e-14
        ));
        let p = GsdParams {
            b_rev: 0.5,
            ..defaults()
        };
        assert!(rel_close(
            channel_current(-1.0, 1e-6, &p),
            -8.1606027941427884e-7,
            1e-14
        ));
        for b_rev in [0.0, 0.3, 1.0] {
            let p = GsdParams {
                b_rev,
                ..defaults()
            };
            assert_eq!(channel_current(0.0, 1e-6, &p), 0.0);
        }
    }

    #[test]
    fn effective_voltage_cases() {
        let p = defaults();
        assert_eq!(
            effective_voltage(&TerminalVoltages::new(0.0, 0.0, 1.0), &p),
            1.0
        );
        let p = GsdParams {
            f: Polarity::Flipped,
            ..defaults()
        };
        assert_eq!(
            effective_voltage(&TerminalVoltages::new(0.0, 0.0, -1.0), &p),
            1.0
        );
        let p = GsdParams {
            o_c: 1.0,
            ..defaults()
        };
        assert_eq!(
            effective_voltage(&TerminalVoltages::new(0.5, 0.0, 2.0), &p),
            1.5
        );
    }

    #[test]
    fn amplification_only_touches_negative_bias() {
        let p = defaults();
        assert_eq!(amplify_negative(-1.0, &p), -1.0);
        let p = GsdParams {
            n_amp: 40.0,
            ..defaults()
        };
        assert_eq!(amplify_negative(-1.0, &p), -40.0);
        assert_eq!(amplify_negative(2.0, &p), 2.0);
    }

    #[test]
    fn increments() {
        let p = defaults();
        assert_eq!(delta_x(1.0, 1e-6, &p), 1.0);

        let p = GsdParams {
            v_t: 0.7,
            t_c: 1.0,
            ..defaults()
        };
        assert!(rel_close(delta_x(2.0, 1e-8, &p), 0.013, 1e-12));
        assert!(rel_close(delta_x(-2.0, 1e-8, &p), -0.013, 1e-12));

        assert_eq!(delta_x_min(2.0, 1e-8, &defaults()), 0.0);
        let p = GsdParams {
            q_ltp: 0.4,
            ..defaults()
        };
        assert!(rel_close(delta_x_min(2.0, 1e-8, &p), 0.008, 1e-12));
    }

    #[test]
    fn decays() {
        let p = GsdParams {
            r_stp: 3.5e-3,
            t_set: 1800.0,
            r_ltp: 7e-9,
            ..defaults()
        };
        assert_eq!(decay_stp(0.3, 0.3, 1.0, &p), 0.0);
        assert!(rel_close(decay_stp(0.5, 0.1, 0.01, &p), 0.0252, 1e-12));
        assert!(rel_close(decay_ltp(1.0, &p), 1.26e-5, 1e-12));
        assert_eq!(decay_stp(0.9, 0.0, 1.0, &defaults()), 0.0);
        assert_eq!(decay_ltp(1.0, &defaults()), 0.0);
    }

    #[test]
    fn zero_timestep_leaves_state() {
        let p = GsdParams {
            x_start: 0.4,
            r_stp: 1.0,
            ..defaults()
        };
        let model = Model::new(p).unwrap();
        let s0 = GsdState {
            t_last: 2e-6,
            ..GsdState::initial(&p)
        };
        let out = model
            .step(&s0, &TerminalVoltages::new(0.1, 0.0, 3.0), 2e-6)
            .unwrap();
        assert_eq!(out.state, s0);
        assert_eq!(out.g_syn, model.conductance(0.4));
    }

    #[test]
    fn backwards_time_is_an_error() {
        let model = Model::new(defaults()).unwrap();
        let s0 = GsdState {
            t_last: 1.0,
            ..GsdState::initial(model.params())
        };
        assert!(model.step(&s0, &TerminalVoltages::default(), 0.5).is_err());
    }

    #[test]
    fn ideal_set_in_one_hundred_steps() {
        let model = Model::new(defaults()).unwrap();
        let v = TerminalVoltages::new(0.1, 0.0, 1.0);
        let mut s = GsdState::initial(model.params());
        for k in 1..=100 {
            s = model.step(&s, &v, k as f64 * 1e-8).unwrap().state;
        }
        // closed form: sum of 100 increments of 0.01
        assert!((s.x - 1.0).abs() < 1e-12, "x = {}", s.x);
    }

    #[test]
    fn subthreshold_gate_is_inert() {
        let p = GsdParams {
            v_t: 0.7,
            x_start: 0.25,
            ..defaults()
        };
        let model = Model::new(p).unwrap();
        let v = TerminalVoltages::new(0.1, 0.0, 0.5);
        let mut s = GsdState::initial(&p);
        for k in 1..=1000 {
            s = model.step(&s, &v, k as f64 * 1e-8).unwrap().state;
        }
        assert_eq!(s.x, 0.25);
        assert_eq!(s.x_min, 0.0);
    }

    #[test]
    fn threshold_boundary_does_not_program() {
        let p = GsdParams {
            v_t: 0.7,
            ..defaults()
        };
        let model = Model::new(p).unwrap();
        let s = GsdState::initial(&p);
        let out = model
            .step(&s, &TerminalVoltages::new(0.0, 0.0, 0.7), 1e-6)
            .unwrap();
        assert_eq!(out.state.x, 0.0);
    }

    #[test]
    fn clamp_discards_overshoot() {
        let model = Model::new(defaults()).unwrap();
        let s = GsdState::initial(model.params());
        let out = model
            .step(&s, &TerminalVoltages::new(0.0, 0.0, 5.0), 1e-6)
            .unwrap();
        assert_eq!(out.state.x, 1.0);
        let out = model
            .step(&out.state, &TerminalVoltages::new(0.0, 0.0, -0.5), 2e-6)
            .unwrap();
        assert_eq!(out.state.x, 0.5);
    }
}
