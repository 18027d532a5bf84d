//! The Hinich map on every subset morphism of one hom, plus a worked case.
//!
//! cargo run --example hinich_map -- 5 0 4

use szczarba::hom::{HomPoset, SubsetHom, SubsetMorphism};
use szczarba::sz::hin_vertex;

fn main() -> szczarba::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, p, q) = match args[..] {
        [n, p, q] => (n, p, q),
        _ => (5, 0, 4),
    };

    let u = SubsetMorphism::from_members(5, vec![0, 2, 4])?;
    println!("Hin({u}) = {}", hin_vertex(&u));
    println!();

    let hom = SubsetHom::new(n, p, q)?;
    for u in hom.elements() {
        let image = hin_vertex(&u);
        println!("{u:<16} ↦ {image}   positions {:?}", image.positions());
    }
    Ok(())
}
