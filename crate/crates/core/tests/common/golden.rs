//! Golden-file runner over `tests/golden/cases.txt`.
//! `FREEMOD_BLESS=1` rewrites the stored outputs.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn dir(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(name)
}

pub struct Case {
    pub name: String,
    pub exit: i32,
    pub args: Vec<String>,
}

pub fn cases() -> Vec<Case> {
    let text = fs::read_to_string(dir("golden").join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.split('|').map(str::trim).collect();
            assert_eq!(parts.len(), 3, "bad case line: {l}");
            Case {
                name: parts[0].to_string(),
                exit: parts[1].parse().unwrap(),
                args: parts[2].split_whitespace().map(String::from).collect(),
            }
        })
        .collect()
}

pub fn run(case: &Case) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_freemod"))
        .args(&case.args)
        .current_dir(dir("fixtures"))
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

/// Runs every case; returns the names whose exit code or output differ.
pub fn check_all() -> Vec<String> {
    let bless = std::env::var_os("FREEMOD_BLESS").is_some();
    let mut bad = Vec::new();
    for case in cases() {
        let path = dir("golden").join(format!("{}.out", case.name));
        let (code, stdout) = run(&case);
        if bless {
            fs::write(&path, &stdout).unwrap();
        }
        let expected = fs::read_to_string(&path).unwrap_or_default();
        if code != case.exit || stdout != expected {
            eprintln!(
                "{}: exit {code} (want {}), output matches: {}",
                case.name,
                case.exit,
                stdout == expected
            );
            bad.push(case.name);
        }
    }
    bad
}

pub fn fixture_names() -> Vec<String> {
    let mut out: Vec<String> = fs::read_dir(dir("fixtures"))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    out.sort();
    out
}
