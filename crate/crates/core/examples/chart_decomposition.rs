//! Parse an element in chart notation, print its invariants, and multiply
//! it by its inverse.
//!
//!     cargo run --example chart_decomposition -- 10 "(1,7,2,4)[3,5,10][9,6][8]"

use pinj::{parse_chart, PartialInjection};

fn main() -> pinj::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(10, |s| s.parse().expect("n"));
    let text = args
        .next()
        .unwrap_or_else(|| "(1,7,2,4)[3,5,10][9,6][8]".to_string());

    let a = parse_chart(&text, n)?;
    let p = a.profile();
    println!("element      {a}");
    println!("map table    {:?}", a.map_table());
    println!("rank/defect  {}/{}", p.rank, p.defect);
    println!("stable rank  {}", p.stable_rank);
    println!("nilpotent    {}", p.is_nilpotent);
    println!(
        "chain type   cycles {:?} chains {:?}",
        p.chain_type.cycle_counts, p.chain_type.chain_counts
    );
    for x in 1..=n {
        let o = a.orbit(x)?;
        println!("orbit of {x:<3} {:?} ({:?})", o.points, o.terminal);
    }

    let e = a.compose(&a.inverse())?;
    println!("a a^-1       {e}  idempotent: {}", e.is_idempotent());
    let b = PartialInjection::from_pairs(n, &[(1, 2), (2, 3)])?;
    println!("a b          {}", a.compose(&b)?);
    println!("a^{n}         {}", a.power(n as u64));
    Ok(())
}
