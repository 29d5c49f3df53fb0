//! Runs the built-in identity checks and prints a per-suite tally.

use std::collections::BTreeMap;

use qhankel::verify::{run_suites, suite_names};

fn main() -> qhankel::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let cases = run_suites(max_n, None)?;
    let mut tally: BTreeMap<&str, (usize, usize)> = suite_names().into_iter().map(|s| (s, (0, 0))).collect();
    for c in &cases {
        let suite = c.case.split('/').next().unwrap_or_default();
        if let Some(t) = tally.get_mut(suite) {
            t.0 += 1;
            t.1 += usize::from(!c.equal);
        }
    }
    for (suite, (total, failed)) in &tally {
        println!("{suite:<24} {total:>4} cases {failed:>2} failed");
    }
    Ok(())
}
