//! Sample random products and compare the rank frequencies with the exact
//! distribution.
//!
//!     cargo run --release --example monte_carlo -- 3 2 1000000 42

use pinj::random_products::monte_carlo;

fn main() -> pinj::Result<()> {
    let mut args = std::env::args().skip(1);
    let mut next = |default: u64| args.next().map_or(default, |s| s.parse().expect("number"));
    let n = next(3) as usize;
    let k = next(2) as usize;
    let trials = next(200_000);
    let seed = next(42);

    let report = monte_carlo(n, k, trials, seed)?;
    println!("{report}");
    println!(
        "within 4 sigma at every rank: {}",
        report.within_tolerance()
    );
    Ok(())
}
