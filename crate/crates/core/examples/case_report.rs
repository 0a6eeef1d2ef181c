//! Runs one registered case and prints its report as JSON.

use spencer::registry;
use spencer::report::{run_case, RunOptions};

fn main() -> spencer::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "svect(0|3)".to_string());
    let spec = registry::find(&name)?;
    let r = run_case(&spec, &RunOptions::default())?;
    print!("{}", r.to_json()?);
    eprintln!("{}: nonzero orders {:?}", r.case, r.nonzero_orders());
    Ok(())
}
