//! Rebuilds `data/conventions.json` and `data/errata.json`.
//!
//! ```text
//! cargo run --release --example regenerate_data
//! ```

use std::fs;
use std::path::Path;

use osp_macdonald::weylchar::verify::{generate_conventions, generate_errata, MAX_VERIFY_N};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let conventions = generate_conventions(3);
    fs::write(dir.join("conventions.json"), serde_json::to_string_pretty(&conventions)? + "\n")?;
    let errata = generate_errata(MAX_VERIFY_N, &conventions);
    fs::write(dir.join("errata.json"), serde_json::to_string_pretty(&errata)? + "\n")?;
    println!("{} conventions, {} errata", conventions.len(), errata.len());
    Ok(())
}
