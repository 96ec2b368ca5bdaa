//! Drives the command-line front end in-process and writes a JSON report.

use laguerre_ltp::cli;

fn main() {
    let dir = std::env::temp_dir().join("ltp-cli-example.json");
    let args = [
        "ltp",
        "--json",
        "--output",
        dir.to_str().expect("utf-8 path"),
        "integral",
        "--method",
        "quadrature",
    ];
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(args, &mut out, &mut err);
    println!("exit status {code}");
    print!("{}", String::from_utf8_lossy(&err));
    print!("{}", std::fs::read_to_string(&dir).unwrap_or_default());
}
