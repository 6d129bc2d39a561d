//! Acceptance criterion 11: same-seed reruns produce byte-identical outputs.

use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_shortcut-forge")
}

fn run(args: &[&str]) {
    let out = Command::new(bin())
        .args(args)
        .output()
        .expect("binary should launch");
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
}

fn read(path: &Path) -> Vec<u8> {
    std::fs::read(path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

/// Runs the same command twice into separate files and asserts the outputs
/// are byte-identical.
fn assert_repeatable(dir: &Path, name: &str, args: &[&str]) {
    let files: Vec<PathBuf> = (0..2).map(|i| dir.join(format!("{name}.{i}"))).collect();
    for f in &files {
        let f = f.to_str().expect("utf-8 temp path");
        let full: Vec<&str> = args.iter().copied().chain(["-o", f]).collect();
        run(&full);
    }
    assert_eq!(
        read(&files[0]),
        read(&files[1]),
        "{name}: same-seed reruns differ"
    );
}

/// Wall-clock time is the one intentionally non-reproducible column; drop it
/// before comparing bench CSVs.
fn strip_ms(csv: &[u8]) -> String {
    String::from_utf8(csv.to_vec())
        .expect("csv is utf-8")
        .lines()
        .map(|line| {
            let cols: Vec<&str> = line.split(',').collect();
            assert_eq!(cols.len(), 13, "unexpected csv shape: {line}");
            let mut kept = cols;
            kept.remove(11);
            kept.join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn criterion_11_determinism() {
    let dir = std::env::temp_dir().join(format!("shortcut-forge-accept-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("create temp dir");

    assert_repeatable(
        &dir,
        "gen-random",
        &[
            "gen",
            "--kind",
            "random",
            "--n",
            "40",
            "--edge-prob",
            "0.1",
            "--seed",
            "7",
        ],
    );
    assert_repeatable(
        &dir,
        "gen-layered",
        &[
            "gen", "--kind", "layered", "--n", "30", "--layers", "5", "--seed", "3",
        ],
    );
    assert_repeatable(
        &dir,
        "gen-labelcover",
        &[
            "gen",
            "--kind",
            "labelcover",
            "--delta",
            "3",
            "--labels",
            "3",
            "--rho",
            "4",
            "--satisfiable",
            "--seed",
            "1",
        ],
    );

    let graph = dir.join("graph.txt");
    let graph = graph.to_str().expect("utf-8 temp path");
    run(&[
        "gen",
        "--kind",
        "random",
        "--n",
        "40",
        "--edge-prob",
        "0.1",
        "--seed",
        "7",
        "-o",
        graph,
    ]);
    assert_repeatable(
        &dir,
        "shortcut",
        &[
            "shortcut",
            graph,
            "--s",
            "40",
            "--d",
            "2",
            "--alpha-d",
            "2",
            "--seed",
            "5",
        ],
    );
    assert_repeatable(
        &dir,
        "tcspanner",
        &[
            "tcspanner",
            graph,
            "--s",
            "80",
            "--d",
            "4",
            "--alpha-d",
            "2",
            "--seed",
            "5",
        ],
    );

    let bench: Vec<PathBuf> = (0..2).map(|i| dir.join(format!("bench.{i}"))).collect();
    for f in &bench {
        let f = f.to_str().expect("utf-8 temp path");
        run(&[
            "bench",
            "--kinds",
            "random",
            "--ns",
            "20",
            "--ds",
            "2",
            "--alpha-ds",
            "2",
            "--seeds",
            "2",
            "-o",
            f,
        ]);
    }
    assert_eq!(
        strip_ms(&read(&bench[0])),
        strip_ms(&read(&bench[1])),
        "bench: same-seed reruns differ beyond the ms column"
    );

    std::fs::remove_dir_all(&dir).ok();
    println!(
        "criterion 11 (determinism): PASS — gen/shortcut/tcspanner files byte-identical, bench \
         CSV identical up to wall-clock"
    );
}
