//! Apply each combinatorial bijection to one marked element, then sweep all
//! of them exhaustively at a small size.
//!
//!     cargo run --example bijections -- 4

use pinj::bijections::{sweep, Bijection, MarkedElement};
use pinj::counting::DEFAULT_BUDGET;
use pinj::parse_chart;

fn main() -> pinj::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(4, |s| s.parse().expect("n"));

    let nil = MarkedElement::point(parse_chart("[3,1,5][2,4][6]", 6)?, 3)?;
    let image = Bijection::LahDefect.forward(&nil)?;
    println!("lah_defect     {nil} -> {image}");

    let a = parse_chart("(1,4,2)[3,5][6]", 6)?;
    let cyc = MarkedElement::cycle_at(a.clone(), 4)?;
    println!(
        "cycle_chain    {cyc} -> {}",
        Bijection::CycleChain.forward(&cyc)?
    );

    let p = MarkedElement::point(a.clone(), 5)?;
    println!(
        "fixed_point    {p} -> {}",
        Bijection::FixedPoint.forward(&p)?
    );

    let o = MarkedElement::point(a, 2)?;
    println!(
        "orbit_chain    {o} -> {}",
        Bijection::OrbitChain.forward(&o)?
    );

    let lifted = MarkedElement::point(parse_chart("(1,3)[2][4,5]", 5)?, 2)?;
    println!(
        "permpart_chain {lifted} -> {}",
        Bijection::PermpartChain.forward(&lifted)?
    );

    for b in Bijection::ALL {
        println!("{}", sweep(b, n, DEFAULT_BUDGET)?);
    }
    Ok(())
}
