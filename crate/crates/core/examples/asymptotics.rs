//! Growth ratios, unimodality of the rank and Lah rows, and how evenly the
//! ranks spread over residue classes.
//!
//!     cargo run --example asymptotics -- 60 3

use pinj::asymptotics::{
    growth_report, mod_deviation_shrinks, mod_distribution, unimodality_report,
};

fn main() -> pinj::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("number"));
    let n = args.next().unwrap_or(60);
    let m = args.next().unwrap_or(3);

    println!("{}", growth_report(n)?);
    print!("{}", unimodality_report(n)?);
    println!("{}", mod_distribution(n, m)?);
    println!(
        "deviation smaller at 2n than at n: {}",
        mod_deviation_shrinks(n, m)?
    );

    let big = unimodality_report(10_001)?;
    println!("n = 10001: rank peak {} passed {}", big.k0, big.passed());
    Ok(())
}
