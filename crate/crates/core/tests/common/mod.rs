#![allow(dead_code)]

//! Oracles and exhaustive structural checks shared by the integration suites.
//! Nothing here calls into the operator route.

use szczarba::hom::{
    compose_c, compose_g, enumerate_nerve, enumerate_sequences, seq_to_chain, Chain, GHom,
    GHomElement, HomPoset, PosetElement, SubsetHom, SubsetMorphism,
};
use szczarba::ops::{Generator, VertexList, Word};
use szczarba::sz::{alpha_prefixes, hin_vertex, omega, sz_elementwise};

/// Tally of an exhaustive check.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub violations: usize,
}

impl Tally {
    pub fn check(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
        }
    }

    pub fn merge(self, other: Tally) -> Tally {
        Tally {
            checked: self.checked + other.checked,
            violations: self.violations + other.violations,
        }
    }
}

pub fn homs(max_n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..=max_n).flat_map(move |n| (0..=n).flat_map(move |q| (0..=q).map(move |p| (n, p, q))))
}

/// Hinich image computed from its definition: `Hin({p,q})` has `k` component
/// `d_1^{n-q} d_0^{q-k} g_k`, i.e. position `q - k`, and a general subset is
/// the concatenation of its indecomposable pieces, top piece first.
pub fn hin_by_pieces(u: &SubsetMorphism) -> Vec<usize> {
    let m = u.members();
    let mut positions = Vec::new();
    for piece in m.windows(2).rev() {
        let (a, b) = (piece[0], piece[1]);
        positions.extend((a + 1..=b).rev().map(|k| b - k));
    }
    positions
}

/// `n!/(n-l)!`.
pub fn falling(n: usize, l: usize) -> usize {
    (0..l).map(|j| n - j).product()
}

/// Instance count of the full cross-route sweep up to `max_n`.
pub fn sweep_instances(max_n: usize) -> usize {
    let mut total = 0;
    for n in 1..=max_n {
        for q in 1..=n {
            for p in 0..q {
                let d = q - p - 1;
                total += (0..=d).map(|l| falling(d, l)).sum::<usize>();
            }
        }
    }
    total
}

/// Word of all generators acting on dimension `dim`.
pub fn generators_at(dim: usize) -> Vec<Generator> {
    let mut gens: Vec<Generator> = (0..=dim).map(Generator::Degeneracy).collect();
    if dim >= 1 {
        gens.extend((0..=dim).map(Generator::Face));
    }
    gens
}

fn word(gens: &[Generator]) -> Word {
    Word::new(gens.to_vec())
}

/// The five simplicial identities, every instance with domain dimension `<= max_dim`,
/// compared as normal forms and by action on the generic simplex.
pub fn simplicial_identities(max_dim: usize) -> Tally {
    use Generator::{Degeneracy as S, Face as D};
    let mut t = Tally::default();
    let mut same = |lhs: Vec<Generator>, rhs: Vec<Generator>, dim: usize| {
        let (l, r) = (word(&lhs), word(&rhs));
        let (Ok(nl), Ok(nr)) = (l.normalize(dim), r.normalize(dim)) else {
            t.check(false);
            return;
        };
        let g = VertexList::generic(dim);
        t.check(nl == nr && l.apply_raw(&g).unwrap() == r.apply_raw(&g).unwrap());
    };
    for dim in 0..=max_dim {
        for i in 0..=dim + 1 {
            for j in 0..=dim + 1 {
                // d_i d_j = d_{j-1} d_i, i < j
                if i < j && dim >= 2 && j <= dim {
                    same(vec![D(i), D(j)], vec![D(j - 1), D(i)], dim);
                }
                // s_i s_j = s_{j+1} s_i, i <= j
                if i <= j && j <= dim {
                    same(vec![S(i), S(j)], vec![S(j + 1), S(i)], dim);
                }
                if j <= dim {
                    // d_i s_j = s_{j-1} d_i, i < j
                    if i < j && dim >= 1 {
                        same(vec![D(i), S(j)], vec![S(j - 1), D(i)], dim);
                    }
                    // d_j s_j = d_{j+1} s_j = id
                    if i == j || i == j + 1 {
                        same(vec![D(i), S(j)], vec![], dim);
                    }
                    // d_i s_j = s_j d_{i-1}, i > j + 1
                    if i > j + 1 && dim >= 1 && i <= dim + 1 {
                        same(vec![D(i), S(j)], vec![S(j), D(i - 1)], dim);
                    }
                }
            }
        }
    }
    t
}

pub fn hin_monotone(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for (n, p, q) in homs(max_n) {
        let els = SubsetHom { n, p, q }.elements();
        for u in &els {
            for v in &els {
                if u.poset_le(v) {
                    t.check(hin_vertex(u).poset_le(&hin_vertex(v)));
                }
            }
        }
    }
    t
}

pub fn hin_matches_pieces(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for (n, p, q) in homs(max_n) {
        for u in (SubsetHom { n, p, q }).elements() {
            t.check(hin_vertex(&u).positions() == hin_by_pieces(&u).as_slice());
        }
    }
    t
}

/// `Hin(U ∪ V) = Hin(U) · Hin(V)` for `U: p -> r`, `V: r -> q`.
pub fn hin_functorial(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for (n, p, q) in homs(max_n) {
        for r in p..=q {
            let lower = SubsetHom { n, p, q: r }.elements();
            let upper = SubsetHom { n, p: r, q }.elements();
            for u in &lower {
                for v in &upper {
                    let lhs = hin_vertex(&compose_c(u, v).unwrap());
                    let rhs = compose_g(&hin_vertex(u), &hin_vertex(v)).unwrap();
                    t.check(lhs == rhs);
                }
            }
        }
    }
    t
}

/// Chains of a subset hom used for naturality checks: every weak chain up to
/// dimension `max(2, q - p)`, capped at 4.
pub fn test_chains(n: usize, p: usize, q: usize) -> Vec<Chain<SubsetMorphism>> {
    let hom = SubsetHom { n, p, q };
    let top = (q - p).clamp(2, 4);
    (0..=top).flat_map(|l| enumerate_nerve(&hom, l, false)).collect()
}

fn component_lists(c: &Chain<SubsetMorphism>) -> Vec<Vec<usize>> {
    sz_elementwise(c)
        .components
        .into_iter()
        .map(|c| c.vertices.into_vec())
        .collect()
}

/// The element-wise map commutes with faces and degeneracies.
pub fn elementwise_natural(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for (n, p, q) in homs(max_n) {
        if p == q {
            continue;
        }
        for c in test_chains(n, p, q) {
            let image = component_lists(&c);
            for j in 0..=c.dim() {
                if c.dim() > 0 {
                    let lhs = component_lists(&c.face(j).unwrap());
                    let rhs: Vec<Vec<usize>> = image
                        .iter()
                        .map(|v| {
                            let mut v = v.clone();
                            v.remove(j);
                            v
                        })
                        .collect();
                    t.check(lhs == rhs);
                }
                let lhs = component_lists(&c.degeneracy(j).unwrap());
                let rhs: Vec<Vec<usize>> = image
                    .iter()
                    .map(|v| {
                        let mut v = v.clone();
                        v.insert(j, v[j]);
                        v
                    })
                    .collect();
                t.check(lhs == rhs);
            }
        }
    }
    t
}

fn union_chain(a: &Chain<SubsetMorphism>, b: &Chain<SubsetMorphism>) -> Chain<SubsetMorphism> {
    Chain::new(
        a.entries()
            .iter()
            .zip(b.entries())
            .map(|(u, v)| compose_c(u, v).unwrap())
            .collect(),
    )
    .unwrap()
}

/// For sequence chains `a` in `(p, r)` and `b` in `(r, q)` of equal dimension, the
/// image of the entrywise union is the concatenation of the images.
pub fn sz_functorial(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for n in 1..=max_n {
        for q in 0..=n {
            for p in 0..q {
                for r in p + 1..q {
                    for l in 0..=(r - p).saturating_sub(1).min((q - r).saturating_sub(1)) {
                        for s in enumerate_sequences(p, r, l) {
                            for u in enumerate_sequences(r, q, l) {
                                let a = seq_to_chain(&s, n).unwrap();
                                let b = seq_to_chain(&u, n).unwrap();
                                let lhs = component_lists(&union_chain(&a, &b));
                                let mut rhs = component_lists(&b);
                                rhs.extend(component_lists(&a));
                                t.check(lhs == rhs);
                            }
                        }
                    }
                }
            }
        }
    }
    t
}

/// Every component of the image of a sequence chain ends at `q - k`.
pub fn base_anchor(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for n in 1..=max_n {
        for q in 1..=n {
            for p in 0..q {
                for l in 0..q - p {
                    for s in enumerate_sequences(p, q, l) {
                        let image = sz_elementwise(&seq_to_chain(&s, n).unwrap());
                        for c in &image.components {
                            t.check(c.vertices.vertices().last() == Some(&(q - c.k)));
                        }
                    }
                }
            }
        }
    }
    t
}

/// Brute-force hom cardinalities for `n <= max_n`.
pub fn hom_sizes(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for (n, p, q) in homs(max_n) {
        let g = GHom { n, p, q }.elements();
        let expected: usize = (p + 1..=q).map(|k| n - k + 1).product();
        t.check(g.len() == expected);
        let c = SubsetHom { n, p, q }.elements();
        let expected = if p == q { 1 } else { 1 << (q - p - 1) };
        t.check(c.len() == expected);
        // all distinct and valid
        let mut sorted = g.clone();
        sorted.dedup();
        t.check(sorted.len() == g.len());
        t.check(g.iter().all(|e| GHomElement::new(n, p, q, e.positions().to_vec()).is_ok()));
    }
    t
}

/// `α_k` never increases along prefixes, and drops exactly when `ω < k <= i_ℓ`.
pub fn alpha_monotone(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for q in 1..=max_n {
        for p in 0..q {
            for l in 0..q - p {
                for s in enumerate_sequences(p, q, l) {
                    for k in p + 1..=q {
                        let a = alpha_prefixes(k, &s).unwrap();
                        for len in 1..=s.len() {
                            let next = s.entries()[len - 1];
                            let w = omega(&s.prefix(len - 1), next).unwrap();
                            let in_range = w < k && k <= next;
                            t.check(a[len] <= a[len - 1]);
                            // when in range the new value is next - k, which is below the old one
                            t.check(in_range == (a[len] < a[len - 1]));
                        }
                    }
                }
            }
        }
    }
    t
}
