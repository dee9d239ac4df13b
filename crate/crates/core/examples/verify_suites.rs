//! Run every verification suite on the default algebra zoo and print a
//! one-line summary per run, followed by any failures.
//!
//! $ cargo run --release --example verify_suites -- 200

use seqlab::cli::report_table;
use seqlab::descriptor::AlgebraDescriptor;
use seqlab::verify::run_all;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(50);
    let reports = run_all(&AlgebraDescriptor::default_zoo(), samples, 0)?;
    print!("{}", report_table(&reports));
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("\n{} reports, {failed} failing", reports.len());
    Ok(())
}
