//! Elements, Hasse diagram and nerve of one hom poset of either category.
//!
//! cargo run --example hom_poset -- 3 0 3 g

use szczarba::hom::{enumerate_nerve, hasse_edges, GHom, HomPoset, SubsetHom};

fn show<H: HomPoset>(hom: &H, length: usize)
where
    H::Element: std::fmt::Display,
{
    let els = hom.elements();
    println!("{} elements", els.len());
    for e in &els {
        println!("  {e}");
    }
    println!("Hasse edges:");
    for (a, b) in hasse_edges(hom) {
        println!("  {} < {}", els[a], els[b]);
    }
    let chains = enumerate_nerve(hom, length, true);
    println!("{} nondegenerate {length}-simplices", chains.len());
    for c in chains {
        println!("  {}", c.ascending());
    }
}

fn main() -> szczarba::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, d: usize| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(d);
    let (n, p, q) = (num(0, 3), num(1, 0), num(2, 3));
    match args.get(3).map(String::as_str) {
        Some("g") => show(&GHom::new(n, p, q)?, 2),
        _ => show(&SubsetHom::new(n, p, q)?, 2),
    }
    Ok(())
}
