//! Drives the command line in-process: a cold and a warm `verify` run sharing a
//! memo cache print identical reports.

use nullspec::cli;

pub fn run_example() -> nullspec::Result<()> {
    let dir = std::env::temp_dir().join(format!("nullspec-example-{}", std::process::id()));
    let args = |extra: &[&str]| {
        let mut v = vec!["nullspec", "verify", "--backend", "quiver:A2", "--p", "2", "--bound", "2", "--format", "json"];
        v.extend_from_slice(extra);
        v.into_iter().map(String::from).collect::<Vec<_>>()
    };
    let dir_arg = dir.to_string_lossy().into_owned();
    let cold = cli::run(args(&["--cache-dir", &dir_arg]));
    let warm = cli::run(args(&["--cache-dir", &dir_arg, "--workers", "1"]));
    let uncached = cli::run(args(&["--no-cache"]));
    println!("exit codes: {} {} {}", cold.code, warm.code, uncached.code);
    println!("identical reports: {}", cold.stdout == warm.stdout && warm.stdout == uncached.stdout);
    for entry in std::fs::read_dir(&dir)? {
        let path = entry?.path();
        let lines = std::fs::read_to_string(&path)?.lines().count();
        println!("{}: {lines} cached decisions", path.display());
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> nullspec::Result<()> {
    run_example()
}
