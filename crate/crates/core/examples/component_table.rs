//! Sz computed entry by entry: each chain entry goes through Hin and the
//! components are read off column by column.
//!
//! cargo run --example component_table -- 3 0 3 2,1

use szczarba::hom::{seq_to_chain, SequenceIndex};
use szczarba::sz::{hin_vertex, sz_elementwise};

fn main() -> szczarba::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, d: usize| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(d);
    let (n, p, q) = (num(0, 3), num(1, 0), num(2, 3));
    let entries: Vec<usize> = match args.get(3) {
        Some(s) => s.split(',').filter(|x| !x.is_empty()).map(|x| x.parse().unwrap()).collect(),
        None => vec![2, 1],
    };

    let seq = SequenceIndex::new(p, q, entries)?;
    let chain = seq_to_chain(&seq, n)?;
    println!("i = {seq}: {}", chain.descending());
    for u in chain.entries() {
        println!("  Hin({u}) = {}", hin_vertex(u));
    }
    for c in sz_elementwise(&chain).components {
        println!("k={}: {}", c.k, c.vertices);
    }
    Ok(())
}
