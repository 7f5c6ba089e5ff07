use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const HEADER: &str = "t,v_in,v_out,v_gate,v_eff,x,x_min,g_syn,i_syn";

fn gsdsim(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsdsim"))
        .args(args)
        .current_dir(dir)
        .env_remove("GSDSIM_DT")
        .output()
        .expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn run_preset_writes_metadata_then_header() {
    let dir = TempDir::new().unwrap();
    let out = gsdsim(
        &["run", "--preset", "bao-2c", "--out", "bao.csv"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    let csv = fs::read_to_string(dir.path().join("bao.csv")).unwrap();
    let mut lines = csv.lines().skip_while(|l| l.starts_with('#'));
    assert_eq!(lines.next(), Some(HEADER));
    assert_eq!(lines.next().unwrap().split(',').count(), 9);
    assert!(csv.starts_with("# label: bao-2c\n"));
}

#[test]
fn unknown_preset_exits_2_with_suggestion() {
    let dir = TempDir::new().unwrap();
    let out = gsdsim(&["run", "--preset", "nosuch", "--out", "x.csv"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("gsdsim list"));
    assert!(!dir.path().join("x.csv").exists());

    let out = gsdsim(&["run", "--preset", "lim-2c", "--out", "x.csv"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("did you mean"), "{}", stderr(&out));
}

#[test]
fn bad_scenario_file_exits_2() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("bad.json"), r#"{"label": "x", "bogus": 1}"#).unwrap();
    let out = gsdsim(
        &["run", "--scenario", "bad.json", "--out", "x.csv"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bogus"));

    let out = gsdsim(
        &["run", "--scenario", "missing.json", "--out", "x.csv"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_parameters_exit_2() {
    let dir = TempDir::new().unwrap();
    let text =
        r#"{"label": "x", "dt": 1e-3, "duration": 1.0, "params": {"g_min": 1e-6, "g_max": 1e-7}}"#;
    fs::write(dir.path().join("s.json"), text).unwrap();
    let out = gsdsim(
        &["run", "--scenario", "s.json", "--out", "x.csv"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_3() {
    let dir = TempDir::new().unwrap();
    let out = gsdsim(
        &["run", "--preset", "lim-2a", "--out", "no/such/dir/x.csv"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
    let out = gsdsim(
        &[
            "export",
            "--preset",
            "lim-2a",
            "--out",
            "no/such/dir/x.json",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn export_then_run_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    assert!(
        gsdsim(&["export", "--preset", "lim-2a", "--out", "lim.json"], d)
            .status
            .success()
    );
    assert!(
        gsdsim(&["run", "--scenario", "lim.json", "--out", "a.csv"], d)
            .status
            .success()
    );
    assert!(gsdsim(&["run", "--preset", "lim-2a", "--out", "b.csv"], d)
        .status
        .success());
    assert_eq!(
        fs::read(d.join("a.csv")).unwrap(),
        fs::read(d.join("b.csv")).unwrap()
    );
}

#[test]
fn export_round_trip_for_every_preset() {
    for id in gsdsim_ids() {
        let s = gsdsim::presets::get(&id).unwrap();
        let back = gsdsim::Scenario::from_json(&s.scenario.to_json()).unwrap();
        assert_eq!(back, s.scenario, "{id}");
    }
}

fn gsdsim_ids() -> Vec<String> {
    gsdsim::presets::all()
        .iter()
        .map(|p| p.id.to_string())
        .collect()
}

fn metadata(path: &Path) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .take_while(|l| l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

#[test]
fn dt_flag_and_environment_override() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    gsdsim(&["export", "--preset", "lim-2a", "--out", "lim.json"], d);

    let custom = r#"{"label": "custom", "dt": 1e-8, "duration": 1e-6, "params": {},
        "gate": [{"type": "hold", "level": 1.0, "duration": 1e-6}]}"#;
    fs::write(d.join("custom.json"), custom).unwrap();
    let out = gsdsim(
        &[
            "run",
            "--scenario",
            "custom.json",
            "--dt",
            "1e-9",
            "--out",
            "t.csv",
        ],
        d,
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let meta = metadata(&d.join("t.csv"));
    assert!(
        meta.contains(&"# dt_override: 1e-9".to_string()),
        "{meta:?}"
    );
    let rows = fs::read_to_string(d.join("t.csv"))
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#'))
        .count();
    assert_eq!(rows, 1 + 1001);

    let run_env = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_gsdsim"))
            .args(args)
            .current_dir(d)
            .env("GSDSIM_DT", "1e-4")
            .output()
            .unwrap()
    };
    assert!(
        run_env(&["run", "--scenario", "lim.json", "--out", "e.csv"])
            .status
            .success()
    );
    assert!(metadata(&d.join("e.csv")).contains(&"# dt: 0.0001".to_string()));

    assert!(run_env(&[
        "run",
        "--scenario",
        "lim.json",
        "--dt",
        "2e-4",
        "--out",
        "f.csv"
    ])
    .status
    .success());
    assert!(metadata(&d.join("f.csv")).contains(&"# dt: 0.0002".to_string()));

    let plain = gsdsim(&["run", "--scenario", "lim.json", "--out", "p.csv"], d);
    assert!(plain.status.success());
    assert!(!metadata(&d.join("p.csv"))
        .iter()
        .any(|l| l.starts_with("# dt_override")));
}

#[test]
fn list_prints_every_preset() {
    let dir = TempDir::new().unwrap();
    let out = gsdsim(&["list"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 26);
    assert!(text
        .lines()
        .all(|l| l.split_once('\t').is_some_and(|(_, p)| !p.is_empty())));
}

#[test]
fn check_prints_a_table_and_passes() {
    let dir = TempDir::new().unwrap();
    let out = gsdsim(&["check"], dir.path());
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    assert_eq!(out.status.code(), Some(0), "{text}{}", stderr(&out));
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn plot_writes_svg_for_time_and_sweep_runs() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let out = gsdsim(
        &[
            "run", "--preset", "bao-2c", "--out", "a.csv", "--plot", "a.svg",
        ],
        d,
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let svg = fs::read_to_string(d.join("a.svg")).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("polyline"));

    let out = gsdsim(
        &[
            "run",
            "--preset",
            "herrmann-2a",
            "--sweep",
            "gate",
            "--out",
            "h.csv",
            "--plot",
            "h.svg",
        ],
        d,
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(metadata(&d.join("h.csv")).contains(&"# sweep: gate".to_string()));
    assert!(d.join("h.svg").exists());
}

#[test]
fn sweep_without_triangle_is_rejected() {
    let dir = TempDir::new().unwrap();
    let out = gsdsim(
        &[
            "run", "--preset", "bao-2c", "--sweep", "in", "--out", "x.csv",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
}
