//! Sz through the α recursion and the operators E_{i,k}, with the unreduced
//! words next to their normal forms.
//!
//! cargo run --example operator_route -- 4 0 4 3,1,2

use szczarba::hom::SequenceIndex;
use szczarba::sz::{derive_operator, sz_operator_route, verify_instance, AlphaTable};

fn main() -> szczarba::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, d: usize| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(d);
    let (n, p, q) = (num(0, 3), num(1, 0), num(2, 3));
    let entries: Vec<usize> = match args.get(3) {
        Some(s) => s.split(',').filter(|x| !x.is_empty()).map(|x| x.parse().unwrap()).collect(),
        None => vec![2, 1],
    };
    let seq = SequenceIndex::new(p, q, entries)?;

    let table = AlphaTable::new(n, &seq)?;
    println!("ω along {seq}: {:?}", table.omegas);
    for row in &table.rows {
        println!("α_{} over prefixes: {:?}", row.k, row.values);
    }
    for k in (p + 1..=q).rev() {
        let d = derive_operator(&seq, k, n)?;
        println!("E_k for k={k}: {} = {}", d.word, d.operator.display_word());
    }
    println!("Sz{seq} = {}", sz_operator_route(&seq, n)?);
    println!("agrees with the element-wise map: {}", verify_instance(n, &seq)?.matches);
    Ok(())
}
