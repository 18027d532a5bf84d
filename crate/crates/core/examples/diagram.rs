//! Writes the category pictures and the two-panel Sz figure to a directory.
//!
//! cargo run --example diagram -- 3 target/figures

use std::fs;
use std::path::PathBuf;

use szczarba::diagram::{category_dot, sz_figure_dot, sz_figure_tikz, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "target/figures".into()));
    fs::create_dir_all(&dir)?;

    let files = [
        (format!("c_delta{n}.dot"), category_dot(n, Family::C)?),
        (format!("g_delta{n}.dot"), category_dot(n, Family::G)?),
        (format!("sz_delta{n}.dot"), sz_figure_dot(n, 0, n)?),
        (format!("sz_delta{n}.tex"), sz_figure_tikz(n, 0, n)?),
    ];
    for (name, body) in files {
        let path = dir.join(name);
        fs::write(&path, body)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
