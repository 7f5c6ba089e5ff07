//! Fitted parameter sets for 26 published gated-synaptic device experiments.
//!
//! Each [`Preset`] pairs one fitted parameter row with a scripted stimulus
//! that approximates the original experiment. Where the original stimulus is
//! not fully known the scenario is a documented reconstruction; `provenance`
//! spells out the assumptions.

use std::sync::LazyLock;

use thiserror::Error;

use crate::model::{GsdParams, Polarity};
use crate::stimulus::{Scenario, Segment, Waveform};

#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    /// Registry key, `<first author>-<figure>`.
    pub id: &'static str,
    /// Source publication of the experiment.
    pub source: &'static str,
    pub params: GsdParams,
    pub scenario: Scenario,
    pub provenance: String,
    /// End of the scripted potentiation phase (s), when the scenario has one.
    pub potentiation_end: Option<f64>,
    /// Alternative gate levels (V) for experiments run at several amplitudes.
    /// The scenario itself uses `gate_levels.last()` when non-empty.
    pub gate_levels: Vec<f64>,
}

impl Preset {
    /// One scenario per entry of `gate_levels`, the gate waveform rescaled to that level.
    pub fn amplitude_family(&self) -> Vec<Scenario> {
        let Some(&reference) = self.gate_levels.last() else {
            return vec![self.scenario.clone()];
        };
        self.gate_levels
            .iter()
            .map(|&level| {
                let mut s = self.scenario.with_gate_scaled(level / reference);
                s.label = format!("{}@{}V", self.id, level);
                s
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("unknown preset `{id}`; {}", match .suggestion {
    Some(s) => format!("did you mean `{s}`?"),
    None => "run `gsdsim list` to see the available presets".to_string(),
})]
pub struct UnknownPreset {
    pub id: String,
    pub suggestion: Option<&'static str>,
}

/// Parameters in fitted-table column order.
#[allow(clippy::too_many_arguments)]
fn row(
    g_c: f64,
    v_t: f64,
    b_rev: f64,
    g_min: f64,
    g_max: f64,
    t_set: f64,
    r_stp: f64,
    n_amp: f64,
    o_c: f64,
    t_c: f64,
    q_ltp: f64,
    r_ltp: f64,
    f: i8,
    x_start: f64,
) -> GsdParams {
    GsdParams {
        g_c,
        b_rev,
        g_min,
        g_max,
        t_set,
        v_t,
        n_amp,
        o_c,
        t_c,
        r_stp,
        q_ltp,
        r_ltp,
        f: if f < 0 {
            Polarity::Flipped
        } else {
            Polarity::Normal
        },
        x_start,
    }
}

fn hold(level: f64, duration: f64) -> Segment {
    Segment::Hold { level, duration }
}

fn pulses(level: f64, width: f64, period: f64, count: u32) -> Segment {
    Segment::PulseTrain {
        base: 0.0,
        amplitude: level,
        width,
        period,
        count,
    }
}

fn sweep(peak: f64, rate: f64) -> Segment {
    Segment::TriangleSweep {
        from: 0.0,
        peak,
        rate,
        cycles: 1,
    }
}

fn repeat(segments: &[Segment], times: usize) -> Vec<Segment> {
    segments
        .iter()
        .copied()
        .cycle()
        .take(segments.len() * times)
        .collect()
}

struct Spec {
    id: &'static str,
    source: &'static str,
    params: GsdParams,
    dt: f64,
    gate: Vec<Segment>,
    input: Vec<Segment>,
    output: Vec<Segment>,
    provenance: &'static str,
    potentiation_end: Option<f64>,
    gate_levels: Vec<f64>,
}

impl Spec {
    fn build(self) -> Preset {
        let gate = Waveform::new(self.gate);
        let input = Waveform::new(self.input);
        let output = Waveform::new(self.output);
        let duration = [&gate, &input, &output]
            .into_iter()
            .map(Waveform::total_duration)
            .fold(self.dt, f64::max);
        Preset {
            id: self.id,
            source: self.source,
            params: self.params,
            scenario: Scenario {
                label: self.id.to_string(),
                dt: self.dt,
                duration,
                params: self.params,
                gate,
                input,
                output,
            },
            provenance: self.provenance.to_string(),
            potentiation_end: self.potentiation_end,
            gate_levels: self.gate_levels,
        }
    }
}

const BAO: &str = "Bao et al., Dual-Gated MoS2 Neuristor, ACS Appl. Mater. Interfaces (2019)";
const BURGT: &str = "van de Burgt et al., organic electrochemical synapse, Nature Materials (2017)";
const HERRMANN: &str =
    "Herrmann et al., gate-controlled three-terminal metal oxide memristor, IEEE EDL (2018)";
const LIM: &str = "Lim et al., gated Schottky diode synapse, ISCAS (2018)";
const MURDOCH: &str = "Murdoch et al., light-gated amorphous carbon memristors, Carbon (2019)";
const TAN: &str = "Tan et al., light-gated memristor, ACS Nano (2017)";
const TANG: &str = "Tang et al., ECRAM synaptic cell, IEDM (2018)";

const READ: f64 = 0.1;

#[rustfmt::skip]
fn specs() -> Vec<Spec> {
    vec![
        Spec {
            id: "bao-2c",
            source: BAO,
            params: row(0.40, 0.700, 1.0, 3.000e-11, 2.10e-6, 1800.0, 3.5e-3, 1.0, 0.0, 1.0, 0.040, 7.0e-9, 1, 0.0),
            dt: 1e-3,
            gate: vec![hold(0.0, 1.0), hold(5.0, 0.1), hold(0.0, 2.9)],
            input: vec![hold(READ, 4.0)],
            output: vec![],
            provenance: "Fig. 2c: 100 ms gate pulse at t = 1 s. The five gate levels (1-5 V) and the 0.1 V read bias are assumed.",
            potentiation_end: Some(1.1),
            gate_levels: vec![1.0, 2.0, 3.0, 4.0, 5.0],
        },
        Spec {
            id: "bao-3a",
            source: BAO,
            params: row(0.40, 0.700, 1.0, 9.000e-10, 2.60e-6, 100.0, 3.5e-3, 1.0, 0.0, 1.0, 2.5e-3, 7.0e-8, 1, 0.0),
            dt: 1e-3,
            gate: vec![hold(0.0, 1.0), pulses(3.0, 0.05, 0.2, 10), hold(0.0, 9.0)],
            input: vec![hold(READ, 12.0)],
            output: vec![],
            provenance: "Fig. 3a: assumed train of ten 3 V, 50 ms gate pulses at 5 Hz followed by 9 s of decay.",
            potentiation_end: Some(3.0),
            gate_levels: vec![],
        },
        Spec {
            id: "bao-3b",
            source: BAO,
            params: row(0.40, 0.700, 1.0, 7.000e-10, 2.60e-6, 100.0, 3.5e-3, 1.0, 0.0, 1.0, 2.5e-3, 7.0e-8, 1, 0.0),
            dt: 1e-3,
            gate: vec![hold(0.0, 1.0), pulses(3.0, 0.05, 0.1, 50), hold(0.0, 20.0)],
            input: vec![hold(READ, 26.0)],
            output: vec![],
            provenance: "Fig. 3b: assumed fifty 3 V, 50 ms gate pulses at 10 Hz building a long-term floor, then 20 s of decay.",
            potentiation_end: Some(6.0),
            gate_levels: vec![],
        },
        Spec {
            id: "bao-3d",
            source: BAO,
            params: row(0.40, 0.700, 1.0, 3.000e-11, 1.00e-7, 4600.0, 2.0e-6, 1.0, 0.0, 1.0, 2.5e-3, 7.0e-8, 1, 0.0),
            dt: 1e-2,
            gate: repeat(&[pulses(5.0, 1.0, 2.0, 50), pulses(-5.0, 1.0, 2.0, 50)], 3),
            input: vec![hold(READ, 600.0)],
            output: vec![],
            provenance: "Fig. 3d: three potentiation/depression cycles; assumed fifty +5 V then fifty -5 V gate pulses (1 s wide, 2 s period) per cycle.",
            potentiation_end: Some(100.0),
            gate_levels: vec![],
        },
        Spec {
            id: "burgt-1d",
            source: BURGT,
            params: row(0.00, 0.000, 1.0, 5.750e-4, 1.35e-3, 4.0, 2.0e-3, 1.0, 0.0, 0.0, 0.400, 1.0e-6, -1, 0.2),
            dt: 1e-2,
            gate: [repeat(&[hold(-0.5, 0.4), hold(0.0, 10.0)], 4), repeat(&[hold(0.5, 0.4), hold(0.0, 10.0)], 4)].concat(),
            input: vec![hold(READ, 83.2)],
            output: vec![],
            provenance: "Fig. 1d: device starts semi-potentiated (x_start = 0.2) and steps through discrete levels; assumed four -0.5 V, 0.4 s gate steps up then four +0.5 V steps down, 10 s apart. Negative gate potentiates (f = -1).",
            potentiation_end: Some(41.6),
            gate_levels: vec![],
        },
        Spec {
            id: "burgt-2a",
            source: BURGT,
            params: row(0.00, 0.000, 1.0, 5.250e-4, 1.60e-3, 1.0, 2.0e-3, 1.0, 0.0, 0.0, 0.400, 1.0e-6, -1, 0.0),
            dt: 1e-3,
            gate: repeat(&[pulses(-0.5, 0.02, 0.1, 50), pulses(0.5, 0.02, 0.1, 50)], 2),
            input: vec![hold(READ, 20.0)],
            output: vec![],
            provenance: "Fig. 2a: two potentiation/depression cycles; assumed fifty -0.5 V then fifty +0.5 V gate pulses (20 ms wide, 10 Hz).",
            potentiation_end: Some(5.0),
            gate_levels: vec![],
        },
        Spec {
            id: "burgt-2b",
            source: BURGT,
            params: row(0.60, 0.000, 1.0, 7.500e-4, 3.00e-3, 33.0, 1.0e-4, 1.0, 0.0, 0.0, 0.400, 1.0e-6, -1, 0.0),
            dt: 1e-2,
            gate: vec![pulses(-1.0, 0.5, 1.0, 50), pulses(1.0, 0.5, 1.0, 50), pulses(-1.0, 0.5, 1.0, 50)],
            input: vec![hold(READ, 150.0)],
            output: vec![],
            provenance: "Fig. 2b: 1.5 potentiation/depression cycles. The original programs with current pulses; replaced by +/-1 V, 0.5 s gate pulses at 1 Hz.",
            potentiation_end: Some(50.0),
            gate_levels: vec![],
        },
        Spec {
            id: "burgt-2c",
            source: BURGT,
            params: row(0.00, 0.000, 1.0, 5.250e-4, 1.60e-3, 1.0, 3.0e-2, 1.0, 0.0, 0.0, 0.100, 1.0e-7, -1, 0.0),
            dt: 2e-3,
            gate: vec![pulses(-0.5, 0.02, 0.1, 20), hold(0.0, 100.0)],
            input: vec![hold(READ, 102.0)],
            output: vec![],
            provenance: "Fig. 2c inset: potentiation then retention; assumed twenty -0.5 V, 20 ms gate pulses followed by 100 s of decay.",
            potentiation_end: Some(2.0),
            gate_levels: vec![],
        },
        Spec {
            id: "burgt-3c",
            source: BURGT,
            params: row(0.00, 0.000, 1.0, 1.725e-3, 7.00e-3, 1.0, 1.0e-2, 1.0, 0.0, 0.0, 0.400, 1.0e-6, -1, 0.0),
            dt: 1e-3,
            gate: repeat(&[pulses(-0.5, 0.04, 0.1, 25), pulses(0.5, 0.04, 0.1, 25)], 10),
            input: vec![hold(READ, 50.0)],
            output: vec![],
            provenance: "Fig. 3c: ten potentiation/depression cycles; assumed twenty-five -0.5 V then twenty-five +0.5 V gate pulses (40 ms wide, 10 Hz) per cycle.",
            potentiation_end: Some(2.5),
            gate_levels: vec![],
        },
        Spec {
            id: "herrmann-2a",
            source: HERRMANN,
            params: row(0.45, 0.788, 1.0, 6.000e-12, 6.00e-9, 90.0, 2.0e-2, 1.0, 0.0, 1.0, 0.010, 7.0e-8, 1, 0.0),
            dt: 1e-2,
            gate: vec![sweep(4.0, 0.2), sweep(-4.0, 0.2), sweep(4.0, 0.1), sweep(-4.0, 0.1)],
            input: vec![hold(READ, 240.0)],
            output: vec![],
            provenance: "Fig. 2a: gate swept 0 -> 4 -> 0 -> -4 -> 0 V at two rates (0.2 V/s then 0.1 V/s, assumed) with a 0.1 V channel read.",
            potentiation_end: None,
            gate_levels: vec![],
        },
        Spec {
            id: "herrmann-2b",
            source: HERRMANN,
            params: row(0.45, 0.788, 1.0, 6.000e-12, 6.00e-9, 90.0, 2.0e-2, 1.0, 0.0, 1.0, 0.010, 1.0e-8, 1, 0.0),
            dt: 5e-2,
            gate: vec![hold(3.5, 2000.0)],
            input: vec![hold(READ, 2000.0), sweep(2.0, 0.1), sweep(-2.0, 0.1)],
            output: vec![],
            provenance: "Fig. 2b: 2000 s of gate programming, then an input sweep 0 -> 2 -> 0 -> -2 -> 0 V at 0.1 V/s with the gate grounded. The six gate levels (1-3.5 V) are assumed.",
            potentiation_end: Some(2000.0),
            gate_levels: vec![1.0, 1.5, 2.0, 2.5, 3.0, 3.5],
        },
        Spec {
            id: "herrmann-3",
            source: HERRMANN,
            params: row(0.45, 0.788, 1.0, 6.000e-12, 6.00e-9, 90.0, 1.0e-3, 1.0, 0.0, 1.0, 0.010, 1.7e-6, 1, 0.0),
            dt: 5e-2,
            gate: vec![hold(3.0, 100.0), hold(0.0, 400.0)],
            input: vec![hold(READ, 500.0)],
            output: vec![],
            provenance: "Fig. 3: assumed 100 s of constant 3 V gate bias followed by 400 s of retention.",
            potentiation_end: Some(100.0),
            gate_levels: vec![],
        },
        Spec {
            id: "herrmann-4a",
            source: HERRMANN,
            params: row(0.45, 0.788, 1.0, 6.000e-12, 6.00e-9, 90.0, 2.0e-2, 1.0, 0.0, 1.0, 0.010, 1.7e-6, 1, 0.0),
            dt: 5e-2,
            gate: vec![hold(5.0, 1000.0)],
            input: vec![hold(READ, 1000.0)],
            output: vec![],
            provenance: "Fig. 4a: constant gate bias at five levels (1-5 V); 1000 s duration assumed.",
            potentiation_end: Some(1000.0),
            gate_levels: vec![1.0, 2.0, 3.0, 4.0, 5.0],
        },
        Spec {
            id: "lim-2a",
            source: LIM,
            params: row(0.45, 0.000, 0.0, 1.000e-12, 2.00e-9, 5.5e-3, 1.0e-1, 40.0, 0.0, 0.0, 0.000, 0.0, 1, 0.0),
            dt: 1e-5,
            gate: repeat(&[hold(1.0, 5e-5), hold(0.0, 4e-3)], 64),
            input: repeat(&[hold(0.0, 5e-5), sweep(-2.0, 1000.0)], 64),
            output: vec![],
            provenance: "Fig. 2a: 64 gate programming pulses, each followed by a reverse-bias input sweep 0 -> -2 -> 0 V. Pulse height 1 V, width 50 us and sweep rate 1000 V/s are assumed.",
            potentiation_end: Some(0.2592),
            gate_levels: vec![],
        },
        Spec {
            id: "lim-2b",
            source: LIM,
            params: row(0.45, 0.000, 0.0, 1.000e-12, 2.00e-9, 5.5e-3, 1.0e-1, 40.0, 0.0, 0.0, 0.000, 0.0, 1, 0.0),
            dt: 1e-5,
            gate: repeat(&[pulses(1.0, 5e-5, 1e-3, 50), pulses(-0.05, 5e-5, 1e-3, 50)], 3),
            input: vec![hold(READ, 0.3)],
            output: vec![],
            provenance: "Fig. 2b: three potentiation/depression cycles; assumed fifty +1 V then fifty -0.05 V gate pulses (50 us, 1 kHz). Depression is amplified by n_amp = 40.",
            potentiation_end: Some(0.05),
            gate_levels: vec![],
        },
        Spec {
            id: "lim-5",
            source: LIM,
            params: row(0.45, 0.000, 0.0, 1.000e-12, 2.00e-9, 5.5e-3, 1.0e-1, 40.0, 0.0, 0.0, 0.000, 0.0, 1, 0.0),
            dt: 1e-5,
            gate: vec![pulses(1.0, 5e-5, 1e-3, 100), pulses(-0.05, 5e-5, 1e-3, 100)],
            input: vec![hold(READ, 0.2)],
            output: vec![],
            provenance: "Fig. 5: one potentiation/depression curve; assumed a hundred +1 V then a hundred -0.05 V gate pulses (50 us, 1 kHz).",
            potentiation_end: Some(0.1),
            gate_levels: vec![],
        },
        Spec {
            id: "murdoch-4c",
            source: MURDOCH,
            params: row(0.05, 2.000, 0.0, 2.500e-10, 1.40e-9, 5.0, 1.2e-1, 1.0, 1.0, 1.0, 0.020, 3.0e-4, 1, 0.0),
            dt: 1e-2,
            gate: vec![hold(0.0, 2.0), hold(5.0, 10.0), hold(0.0, 28.0)],
            input: vec![hold(READ, 40.0)],
            output: vec![],
            provenance: "Fig. 4c: light exposure replaced by a 5 V gate level; 10 s exposure at t = 2 s and 28 s of decay are assumed.",
            potentiation_end: Some(12.0),
            gate_levels: vec![],
        },
        Spec {
            id: "murdoch-4d",
            source: MURDOCH,
            params: row(0.05, 1.990, 0.0, 3.000e-9, 1.15e-8, 3.0, 4.5e-1, 40.0, 1.0, 1.0, 0.040, 3.0e-4, 1, 0.0),
            dt: 1e-2,
            gate: vec![hold(0.0, 2.0), hold(5.0, 10.0), hold(0.0, 4.0), hold(5.0, 12.0), hold(0.0, 12.0)],
            input: vec![hold(READ, 40.0)],
            output: vec![hold(0.0, 14.0), hold(-3.0, 0.5), hold(0.0, 15.5), hold(-3.0, 0.5), hold(0.0, 9.5)],
            provenance: "Fig. 4d: light replaced by a 5 V gate level; the device is reset through its output node at t = 14 s and t = 30 s (assumed -3 V for 0.5 s), coupled in by o_c = 1.",
            potentiation_end: Some(12.0),
            gate_levels: vec![],
        },
        Spec {
            id: "murdoch-5a",
            source: MURDOCH,
            params: row(0.05, 2.000, 0.0, 2.800e-9, 1.00e-8, 3.0, 8.5e-1, 40.0, 1.0, 1.0, 0.100, 7.0e-3, 1, 0.0),
            dt: 1e-2,
            gate: vec![hold(0.0, 2.0), pulses(5.0, 1.0, 2.0, 5), hold(0.0, 20.0)],
            input: vec![hold(READ, 32.0)],
            output: vec![],
            provenance: "Fig. 5a: light pulses replaced by five 5 V, 1 s gate pulses at 0.5 Hz, then 20 s of decay (timing assumed).",
            potentiation_end: Some(12.0),
            gate_levels: vec![],
        },
        Spec {
            id: "tan-1c",
            source: TAN,
            params: row(0.05, 1.400, 1.0, 5.000e-12, 4.00e-8, 5500.0, 1.0e-8, 345.0, 0.0, 1.0, 0.010, 1.0e-6, 1, 0.0),
            dt: 1e-1,
            gate: vec![hold(5.0, 1000.0)],
            input: vec![hold(READ, 1000.0)],
            output: vec![],
            provenance: "Fig. 1c: four light intensities mapped to constant gate levels in proportion to the strongest (5 V); the 1.5/2.5/3.75 V ratios and 1000 s duration are assumed.",
            potentiation_end: Some(1000.0),
            gate_levels: vec![1.5, 2.5, 3.75, 5.0],
        },
        Spec {
            id: "tan-1d",
            source: TAN,
            params: row(0.05, 1.400, 1.0, 5.000e-12, 4.00e-8, 2500.0, 6.0e-4, 345.0, 1.0, 1.0, 0.175, 2.0e-8, 1, 0.0),
            dt: 1e-2,
            gate: vec![hold(0.0, 70.0), hold(5.0, 60.0), hold(0.0, 70.0)],
            input: vec![sweep(1.5, 0.1), sweep(-1.5, 0.1), hold(0.0, 80.0), sweep(1.5, 0.1), sweep(-1.5, 0.1)],
            output: vec![],
            provenance: "Fig. 1d: input I-V sweeps (+/-1.5 V at 0.1 V/s, assumed) before and after a 60 s, 5 V gate pulse standing in for light.",
            potentiation_end: Some(130.0),
            gate_levels: vec![],
        },
        Spec {
            id: "tan-1e",
            source: TAN,
            params: row(0.00, 0.800, 1.0, 1.000e-13, 4.00e-8, 5500.0, 7.0e-5, 345.0, 0.5, 1.0, 0.250, 1e-10, 1, 0.0),
            dt: 1e-1,
            gate: repeat(&[hold(5.0, 300.0), hold(0.0, 100.0)], 4),
            input: repeat(&[hold(READ, 350.0), hold(4.0, 10.0), hold(READ, 40.0)], 4),
            output: vec![],
            provenance: "Fig. 1e: 300 s of 5 V gate bias (light substitute), then a reset through the input terminal (4 V for 10 s, assumed), repeated at four points.",
            potentiation_end: Some(300.0),
            gate_levels: vec![],
        },
        Spec {
            id: "tang-2",
            source: TANG,
            params: row(0.85, 0.000, 1.0, 1.000e-9, 2.40e-9, 1175.0, 2.0e-7, 1.0, 0.0, 0.0, 0.000, 0.0, 1, 0.0),
            dt: 0.5,
            gate: vec![pulses(1.0, 10.0, 20.0, 100), pulses(-1.0, 10.0, 20.0, 100)],
            input: vec![hold(READ, 4000.0)],
            output: vec![],
            provenance: "Fig. 2: one potentiation/depression curve. Current pulses replaced by +/-1 V gate pulses (10 s wide, 20 s period, 100 each way).",
            potentiation_end: Some(2000.0),
            gate_levels: vec![],
        },
        Spec {
            id: "tang-9",
            source: TANG,
            params: row(0.00, 0.000, 1.0, 2.040e-9, 4.50e-9, 50.0, 4.0e-5, 1.0, 0.0, 0.0, 0.600, 1.0e-8, 1, 0.0),
            dt: 5e-2,
            gate: repeat(&[pulses(1.0, 0.5, 1.0, 50), pulses(-1.0, 0.5, 1.0, 50)], 2),
            input: vec![hold(READ, 200.0)],
            output: vec![],
            provenance: "Fig. 9: two potentiation/depression curves. Current pulses replaced by +/-1 V, 0.5 s gate pulses at 1 Hz (50 each way).",
            potentiation_end: Some(50.0),
            gate_levels: vec![],
        },
        Spec {
            id: "tang-14",
            source: TANG,
            params: row(1.00, 0.000, 1.0, 5.000e-12, 6.00e-8, 10.0, 9.5e-5, 1.0, 0.0, 0.0, 0.000, 0.0, 1, 0.0),
            dt: 1e-2,
            gate: vec![pulses(1.0, 0.1, 0.2, 100), pulses(-1.0, 0.1, 0.2, 100)],
            input: vec![hold(READ, 40.0)],
            output: vec![],
            provenance: "Fig. 14: one potentiation/depression curve. Current pulses replaced by +/-1 V, 100 ms gate pulses at 5 Hz (100 each way).",
            potentiation_end: Some(20.0),
            gate_levels: vec![],
        },
        Spec {
            id: "tang-15",
            source: TANG,
            params: row(1.00, 0.000, 1.0, 5.000e-11, 3.00e-9, 150.0, 2.0e-7, 1.0, 0.0, 0.0, 0.000, 0.0, 1, 0.0),
            dt: 1e-1,
            gate: vec![pulses(1.0, 1.0, 2.0, 150)],
            input: vec![hold(READ, 300.0)],
            output: vec![],
            provenance: "Fig. 15: one potentiation curve from 150 voltage pulses (1 V, 1 s wide, 0.5 Hz) standing in for current pulses.",
            potentiation_end: Some(300.0),
            gate_levels: vec![],
        },
    ]
}

static REGISTRY: LazyLock<Vec<Preset>> =
    LazyLock::new(|| specs().into_iter().map(Spec::build).collect());

/// Every preset, grouped by source publication.
pub fn all() -> &'static [Preset] {
    &REGISTRY
}

pub fn get(id: &str) -> Result<&'static Preset, UnknownPreset> {
    all()
        .iter()
        .find(|p| p.id == id)
        .ok_or_else(|| UnknownPreset {
            id: id.to_string(),
            suggestion: nearest(id),
        })
}

fn nearest(id: &str) -> Option<&'static str> {
    all()
        .iter()
        .map(|p| (strsim::levenshtein(id, p.id), p.id))
        .min()
        .filter(|&(d, _)| d <= id.len().max(3) / 2 + 1)
        .map(|(_, id)| id)
}

/// `(id, provenance)` for every preset, in registry order.
pub fn list() -> Vec<(&'static str, &'static str)> {
    all()
        .iter()
        .map(|p| (p.id, p.provenance.as_str()))
        .collect()
}
