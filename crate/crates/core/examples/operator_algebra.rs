//! Normal forms of words in faces and degeneracies.
//!
//! cargo run --example operator_algebra -- "d_2^2 s_1^2 d_1 s_0" 2

use szczarba::ops::{NormalOperator, VertexList, Word};

fn main() -> szczarba::Result<()> {
    let mut args = std::env::args().skip(1);
    let word: Word = args.next().as_deref().unwrap_or("d_2^2 s_1^2 d_1 s_0").parse()?;
    let domain: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);

    let op = word.normalize(domain)?;
    println!("word          {word}");
    println!("normal form   {}", op.display_word());
    println!("stored        s{:?} d{:?}", op.degeneracy_indices(), op.face_indices());
    println!("dimensions    {} -> {}", op.domain_dim(), op.codomain_dim());
    println!("action        {} -> {}", VertexList::generic(domain), op.action());

    let s0 = "s_0".parse::<Word>()?.normalize(op.codomain_dim())?;
    let composite = NormalOperator::compose(&s0, &op)?;
    println!("s_0 after it  {}", composite.display_word());
    println!("shifted by 1  {}", op.shift(1).display_word());
    Ok(())
}
