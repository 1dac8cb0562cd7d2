//! Closed-form counts for IS_n next to a brute-force tally.
//!
//!     cargo run --example count_table -- 5

use pinj::counting::{count_table, enumerated_table, DEFAULT_BUDGET};

fn main() -> pinj::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(5, |s| s.parse().expect("n"));
    let table = count_table(n);
    println!("{}", serde_json::to_string_pretty(&table).expect("json"));
    if n <= 7 {
        let tallied = enumerated_table(n, DEFAULT_BUDGET)?;
        let diff = table.differences(&tallied);
        println!("enumeration agrees on every field: {}", diff.is_empty());
    }
    Ok(())
}
