//! Run the counting identities at a range of sizes. Small sizes are checked
//! against enumeration, larger ones between independent closed forms.
//!
//!     cargo run --example verify_identities -- 0 40

use pinj::counting::{verify_identities_with, Sequences, VerifyOptions};

fn main() -> pinj::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("size"));
    let lo = args.next().unwrap_or(0);
    let hi = args.next().unwrap_or(lo.max(6));
    let seq = Sequences::up_to(hi + 1);
    for n in lo..=hi {
        let report = verify_identities_with(&seq, n, VerifyOptions::default())?;
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        println!(
            "n = {n:<3} {} checks, failed: {failed:?}",
            report.checks.len()
        );
    }
    if lo == hi {
        print!(
            "{}",
            verify_identities_with(&seq, lo, VerifyOptions::default())?
        );
    }
    Ok(())
}
