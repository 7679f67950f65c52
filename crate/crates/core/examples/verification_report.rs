//! Running a verification suite from code and rendering the report.

use toric_diagonal::report::{run, RunOptions};

fn main() -> toric_diagonal::Result<()> {
    let opts = RunOptions { samples: 200, ..RunOptions::default() };
    let report = run("no-lift", &opts)?;
    print!("{}", report.to_markdown());
    println!("all pass: {}", report.all_pass());
    Ok(())
}
