//! Exact rank distribution of a product of k uniform random elements, the
//! transition matrix behind it and its eigenbasis.
//!
//!     cargo run --example random_products -- 3 4

use pinj::counting::DEFAULT_BUDGET;
use pinj::random_products::{
    brute_force_distribution, build_matrix, cross_checks, eigenbasis, rank_distributions,
    verify_spectral_identities,
};

fn main() -> pinj::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("size"));
    let n = args.next().unwrap_or(3);
    let k_max = args.next().unwrap_or(4);

    println!("transition matrix for n = {n}:\n{}", build_matrix(n));
    for e in eigenbasis(n) {
        println!(
            "eigenvalue {} vector {:?}",
            e.eigenvalue,
            e.vector.iter().map(ToString::to_string).collect::<Vec<_>>()
        );
    }
    print!("{}", verify_spectral_identities(n));

    for d in rank_distributions(n, k_max)? {
        print!("{d}");
    }
    if n <= 3 {
        let brute = brute_force_distribution(n, 2, DEFAULT_BUDGET)?;
        let exact = &rank_distributions(n, 2)?[1];
        println!("brute force at k = 2 agrees: {}", &brute == exact);
    }
    let checks = cross_checks(n, k_max, 8)?;
    println!("cross-checks passed: {}", checks.passed());
    Ok(())
}
