//! Hom posets of the two poset-enriched categories attached to `Δ^n`.
//!
//! In the rigidification category a morphism `p -> q` is a subset of
//! `{p, ..., q}` containing both endpoints, ordered by reverse inclusion and
//! composed by union. In the loop-group category it is a tuple of positions
//! `(a_q, ..., a_{p+1})`, one per linear order `⟨g_k⟩^{n-k}`, ordered
//! componentwise and composed by concatenation.
//!
//! Nerves of these posets are represented by [`Chain`], stored weakly
//! increasing with entry 0 the minimal element.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ops::{Generator, NormalOperator, Word};

/// Elements of a finite poset.
pub trait PosetElement: Clone + Eq + Ord + fmt::Debug + fmt::Display {
    fn poset_le(&self, other: &Self) -> bool;
}

impl PosetElement for usize {
    fn poset_le(&self, other: &Self) -> bool {
        self <= other
    }
}

/// The vertex `d_1^{n-k-a} d_0^a g_k` of `⟨g_k⟩^{n-k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GPosetPosition {
    pub n: usize,
    pub k: usize,
    pub a: usize,
}

impl GPosetPosition {
    pub fn new(n: usize, k: usize, a: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParameter(format!("need 1 <= k <= n, got k={k}, n={n}")));
        }
        if a > n - k {
            return Err(Error::InvalidParameter(format!(
                "position {a} outside ⟨g_{k}⟩^{}",
                n - k
            )));
        }
        Ok(GPosetPosition { n, k, a })
    }

    /// The face operator `d_1^{n-k-a} d_0^a` from `g_k` down to this vertex.
    pub fn operator(&self) -> NormalOperator {
        let top = self.n - self.k;
        Word::power(Generator::Face(1), top - self.a)
            .then_after(&Word::power(Generator::Face(0), self.a))
            .normalize(top)
            .expect("position lies in range")
    }

    pub fn notation(&self) -> String {
        let ones = self.n - self.k - self.a;
        let mut out = String::new();
        for (idx, exp) in [(1, ones), (0, self.a)] {
            match exp {
                0 => {}
                1 => out.push_str(&format!("d_{idx} ")),
                e => out.push_str(&format!("d_{idx}^{e} ")),
            }
        }
        out.push_str(&format!("g_{}", self.k));
        out
    }
}

impl fmt::Display for GPosetPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

fn check_objects(n: usize, p: usize, q: usize) -> Result<()> {
    if p > q || q > n {
        return Err(Error::InvalidParameter(format!(
            "objects must satisfy 0 <= p <= q <= n, got p={p}, q={q}, n={n}"
        )));
    }
    Ok(())
}

/// A morphism `p -> q` of the loop-group poset category: positions
/// `(a_q, a_{q-1}, ..., a_{p+1})` with `a_k ∈ [0, n-k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGHom")]
pub struct GHomElement {
    n: usize,
    p: usize,
    q: usize,
    positions: Vec<usize>,
}

#[derive(Deserialize)]
struct RawGHom {
    n: usize,
    p: usize,
    q: usize,
    positions: Vec<usize>,
}

impl TryFrom<RawGHom> for GHomElement {
    type Error = Error;

    fn try_from(raw: RawGHom) -> Result<Self> {
        GHomElement::new(raw.n, raw.p, raw.q, raw.positions)
    }
}

impl GHomElement {
    pub fn new(n: usize, p: usize, q: usize, positions: Vec<usize>) -> Result<Self> {
        check_objects(n, p, q)?;
        if positions.len() != q - p {
            return Err(Error::InvalidParameter(format!(
                "hom ({p},{q}) needs {} positions, got {}",
                q - p,
                positions.len()
            )));
        }
        for (k, &a) in (p + 1..=q).rev().zip(&positions) {
            GPosetPosition::new(n, k, a)?;
        }
        Ok(GHomElement { n, p, q, positions })
    }

    pub fn identity(n: usize, q: usize) -> Self {
        GHomElement { n, p: q, q, positions: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> usize {
        self.p
    }

    pub fn target(&self) -> usize {
        self.q
    }

    /// Positions ordered `k = q` down to `k = p + 1`.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// Position of the `k` component, `p < k <= q`.
    pub fn position(&self, k: usize) -> Option<usize> {
        (self.p < k && k <= self.q).then(|| self.positions[self.q - k])
    }

    pub fn components(&self) -> impl Iterator<Item = GPosetPosition> + '_ {
        (self.p + 1..=self.q)
            .rev()
            .zip(&self.positions)
            .map(|(k, &a)| GPosetPosition { n: self.n, k, a })
    }
}

impl PosetElement for GHomElement {
    fn poset_le(&self, other: &Self) -> bool {
        (self.n, self.p, self.q) == (other.n, other.p, other.q)
            && self.positions.iter().zip(&other.positions).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for GHomElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == self.q {
            return write!(f, "id_{}", self.q);
        }
        write!(f, "(")?;
        for (pos, c) in self.components().enumerate() {
            if pos > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Composite of `f: p -> r` and `g: r -> q`, by concatenation `(g..., f...)`.
pub fn compose_g(f: &GHomElement, g: &GHomElement) -> Result<GHomElement> {
    if f.n != g.n || f.q != g.p {
        return Err(Error::ObjectMismatch(format!(
            "({},{}) in Δ^{} then ({},{}) in Δ^{}",
            f.p, f.q, f.n, g.p, g.q, g.n
        )));
    }
    let mut positions = g.positions.clone();
    positions.extend_from_slice(&f.positions);
    Ok(GHomElement { n: f.n, p: f.p, q: g.q, positions })
}

/// A morphism `p -> q` of the rigidification poset category: a set
/// `{p, ..., q}`-subset containing both endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSubset")]
pub struct SubsetMorphism {
    n: usize,
    p: usize,
    q: usize,
    members: Vec<usize>,
}

#[derive(Deserialize)]
struct RawSubset {
    n: usize,
    p: usize,
    q: usize,
    members: Vec<usize>,
}

impl TryFrom<RawSubset> for SubsetMorphism {
    type Error = Error;

    fn try_from(raw: RawSubset) -> Result<Self> {
        SubsetMorphism::new(raw.n, raw.p, raw.q, raw.members)
    }
}

impl SubsetMorphism {
    pub fn new(n: usize, p: usize, q: usize, mut members: Vec<usize>) -> Result<Self> {
        check_objects(n, p, q)?;
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset(format!("{members:?} has repeated members")));
        }
        if members.first() != Some(&p) || members.last() != Some(&q) {
            return Err(Error::InvalidSubset(format!(
                "{members:?} must contain both endpoints {p} and {q} and lie between them"
            )));
        }
        Ok(SubsetMorphism { n, p, q, members })
    }

    /// Reads the endpoints off the smallest and largest members.
    pub fn from_members(n: usize, members: Vec<usize>) -> Result<Self> {
        let (Some(&p), Some(&q)) = (members.iter().min(), members.iter().max()) else {
            return Err(Error::InvalidSubset("empty subset".into()));
        };
        SubsetMorphism::new(n, p, q, members)
    }

    pub fn identity(n: usize, q: usize) -> Self {
        SubsetMorphism { n, p: q, q, members: vec![q] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> usize {
        self.p
    }

    pub fn target(&self) -> usize {
        self.q
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

impl PosetElement for SubsetMorphism {
    /// `U <= V` iff `V ⊆ U`.
    fn poset_le(&self, other: &Self) -> bool {
        (self.n, self.p, self.q) == (other.n, other.p, other.q)
            && other.members.iter().all(|&x| self.contains(x))
    }
}

impl fmt::Display for SubsetMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, m) in self.members.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Composite of `u: p -> r` and `v: r -> q`, by union.
pub fn compose_c(u: &SubsetMorphism, v: &SubsetMorphism) -> Result<SubsetMorphism> {
    if u.n != v.n || u.q != v.p {
        return Err(Error::ObjectMismatch(format!(
            "({},{}) in Δ^{} then ({},{}) in Δ^{}",
            u.p, u.q, u.n, v.p, v.q, v.n
        )));
    }
    let mut members = u.members.clone();
    members.extend_from_slice(&v.members[1..]);
    Ok(SubsetMorphism { n: u.n, p: u.p, q: v.q, members })
}

/// An ℓ-simplex of the nerve of a poset: `ℓ + 1` weakly increasing entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Chain<E> {
    entries: Vec<E>,
}

impl<'de, E: PosetElement + Deserialize<'de>> Deserialize<'de> for Chain<E> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<E>::deserialize(d)?;
        Chain::new(entries).map_err(serde::de::Error::custom)
    }
}

impl<E: PosetElement> Chain<E> {
    pub fn new(entries: Vec<E>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidChain("a chain needs at least one entry".into()));
        }
        if let Some(w) = entries.windows(2).find(|w| !w[0].poset_le(&w[1])) {
            return Err(Error::InvalidChain(format!("{} is not <= {}", w[0], w[1])));
        }
        Ok(Chain { entries })
    }

    pub fn vertex(e: E) -> Self {
        Chain { entries: vec![e] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] != w[1])
    }

    /// Deletes entry `j`.
    pub fn face(&self, j: usize) -> Result<Self> {
        if j > self.dim() || self.dim() == 0 {
            return Err(Error::IndexOutOfRange { index: j, dim: self.dim() });
        }
        let mut entries = self.entries.clone();
        entries.remove(j);
        Ok(Chain { entries })
    }

    /// Repeats entry `j`.
    pub fn degeneracy(&self, j: usize) -> Result<Self> {
        if j > self.dim() {
            return Err(Error::IndexOutOfRange { index: j, dim: self.dim() });
        }
        let mut entries = self.entries.clone();
        entries.insert(j, entries[j].clone());
        Ok(Chain { entries })
    }

    /// Entries joined by `≤`, minimal first.
    pub fn ascending(&self) -> String {
        join(self.entries.iter(), " ≤ ")
    }

    /// Entries joined by `≥`, maximal first.
    pub fn descending(&self) -> String {
        join(self.entries.iter().rev(), " ≥ ")
    }
}

pub fn chain_face<E: PosetElement>(j: usize, c: &Chain<E>) -> Result<Chain<E>> {
    c.face(j)
}

pub fn chain_degeneracy<E: PosetElement>(j: usize, c: &Chain<E>) -> Result<Chain<E>> {
    c.degeneracy(j)
}

fn join<T: fmt::Display>(items: impl Iterator<Item = T>, sep: &str) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl<E: PosetElement> fmt::Display for Chain<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascending())
    }
}

/// An injective sequence `(i_1, ..., i_ℓ)` of integers strictly between `p` and `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSequence")]
pub struct SequenceIndex {
    p: usize,
    q: usize,
    entries: Vec<usize>,
}

#[derive(Deserialize)]
struct RawSequence {
    p: usize,
    q: usize,
    entries: Vec<usize>,
}

impl TryFrom<RawSequence> for SequenceIndex {
    type Error = Error;

    fn try_from(raw: RawSequence) -> Result<Self> {
        SequenceIndex::new(raw.p, raw.q, raw.entries)
    }
}

impl SequenceIndex {
    pub fn new(p: usize, q: usize, entries: Vec<usize>) -> Result<Self> {
        if p >= q {
            return Err(Error::InvalidSequence(format!("need p < q, got p={p}, q={q}")));
        }
        for (pos, &x) in entries.iter().enumerate() {
            if x <= p || x >= q {
                return Err(Error::InvalidSequence(format!(
                    "entry {x} is not strictly between {p} and {q}"
                )));
            }
            if entries[..pos].contains(&x) {
                return Err(Error::DegenerateSequence(x));
            }
        }
        Ok(SequenceIndex { p, q, entries })
    }

    pub fn empty(p: usize, q: usize) -> Result<Self> {
        SequenceIndex::new(p, q, Vec::new())
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The first `len` entries.
    pub fn prefix(&self, len: usize) -> SequenceIndex {
        SequenceIndex { p: self.p, q: self.q, entries: self.entries[..len].to_vec() }
    }

    /// The sequence with its last entry dropped, `i'`.
    pub fn parent(&self) -> Option<SequenceIndex> {
        (!self.is_empty()).then(|| self.prefix(self.len() - 1))
    }

    pub fn last(&self) -> Option<usize> {
        self.entries.last().copied()
    }
}

impl fmt::Display for SequenceIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "({})", join(self.entries.iter(), ","))
    }
}

/// The chain `{p,i_1,...,i_ℓ,q} ≤ {p,i_1,...,i_{ℓ-1},q} ≤ ... ≤ {p,q}` in `Δ^n`.
pub fn seq_to_chain(seq: &SequenceIndex, n: usize) -> Result<Chain<SubsetMorphism>> {
    check_objects(n, seq.p, seq.q)?;
    let entries = (0..=seq.len())
        .map(|j| {
            let mut members = vec![seq.p, seq.q];
            members.extend_from_slice(&seq.entries[..seq.len() - j]);
            members.sort_unstable();
            SubsetMorphism { n, p: seq.p, q: seq.q, members }
        })
        .collect();
    Ok(Chain { entries })
}

/// All injective length-`len` sequences over `{p+1, ..., q-1}`, lexicographically.
pub fn enumerate_sequences(p: usize, q: usize, len: usize) -> Vec<SequenceIndex> {
    if p >= q || len > q - p - 1 {
        return Vec::new();
    }
    fn extend(p: usize, q: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<SequenceIndex>) {
        if cur.len() == len {
            out.push(SequenceIndex { p, q, entries: cur.clone() });
            return;
        }
        for x in p + 1..q {
            if !cur.contains(&x) {
                cur.push(x);
                extend(p, q, len, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(p, q, len, &mut Vec::with_capacity(len), &mut out);
    out
}

/// A finite hom poset whose elements can be listed.
pub trait HomPoset {
    type Element: PosetElement;

    fn n(&self) -> usize;
    fn source(&self) -> usize;
    fn target(&self) -> usize;

    /// All elements in lexicographic order.
    fn elements(&self) -> Vec<Self::Element>;
}

/// `P_𝔠(Δ^n)(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetHom {
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

impl SubsetHom {
    pub fn new(n: usize, p: usize, q: usize) -> Result<Self> {
        check_objects(n, p, q)?;
        Ok(SubsetHom { n, p, q })
    }
}

impl HomPoset for SubsetHom {
    type Element = SubsetMorphism;

    fn n(&self) -> usize {
        self.n
    }

    fn source(&self) -> usize {
        self.p
    }

    fn target(&self) -> usize {
        self.q
    }

    fn elements(&self) -> Vec<SubsetMorphism> {
        let (n, p, q) = (self.n, self.p, self.q);
        if p == q {
            return vec![SubsetMorphism::identity(n, q)];
        }
        let interior = q - p - 1;
        let mut out: Vec<_> = (0u64..1 << interior)
            .map(|mask| {
                let mut members = vec![p];
                members.extend((0..interior).filter(|b| mask >> b & 1 == 1).map(|b| p + 1 + b));
                members.push(q);
                SubsetMorphism { n, p, q, members }
            })
            .collect();
        out.sort();
        out
    }
}

/// `P_G(Δ^n)(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GHom {
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

impl GHom {
    pub fn new(n: usize, p: usize, q: usize) -> Result<Self> {
        check_objects(n, p, q)?;
        Ok(GHom { n, p, q })
    }
}

impl HomPoset for GHom {
    type Element = GHomElement;

    fn n(&self) -> usize {
        self.n
    }

    fn source(&self) -> usize {
        self.p
    }

    fn target(&self) -> usize {
        self.q
    }

    fn elements(&self) -> Vec<GHomElement> {
        let (n, p, q) = (self.n, self.p, self.q);
        let bounds: Vec<usize> = (p + 1..=q).rev().map(|k| n - k).collect();
        let mut out = Vec::new();
        let mut cur = vec![0; bounds.len()];
        loop {
            out.push(GHomElement { n, p, q, positions: cur.clone() });
            // odometer, last component fastest
            let Some(slot) = (0..cur.len()).rev().find(|&s| cur[s] < bounds[s]) else {
                break;
            };
            cur[slot] += 1;
            cur[slot + 1..].iter_mut().for_each(|c| *c = 0);
        }
        out
    }
}

/// All ℓ-chains in the nerve of `hom`, lexicographic in element order.
pub fn enumerate_nerve<H: HomPoset>(hom: &H, len: usize, nondegenerate_only: bool) -> Vec<Chain<H::Element>> {
    let elements = hom.elements();
    let m = elements.len();
    let le: Vec<Vec<bool>> = elements
        .iter()
        .map(|a| elements.iter().map(|b| a.poset_le(b)).collect())
        .collect();

    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::with_capacity(len + 1);
    fn grow(
        le: &[Vec<bool>],
        m: usize,
        len: usize,
        strict: bool,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if stack.len() == len + 1 {
            out.push(stack.clone());
            return;
        }
        for next in 0..m {
            let ok = match stack.last() {
                None => true,
                Some(&prev) => le[prev][next] && !(strict && prev == next),
            };
            if ok {
                stack.push(next);
                grow(le, m, len, strict, stack, out);
                stack.pop();
            }
        }
    }
    let mut index_chains = Vec::new();
    grow(&le, m, len, nondegenerate_only, &mut stack, &mut index_chains);
    out.extend(index_chains.into_iter().map(|idx| Chain {
        entries: idx.into_iter().map(|i| elements[i].clone()).collect(),
    }));
    out
}

/// Covering pairs `(a, b)` with `a < b`, as indices into `hom.elements()`.
pub fn hasse_edges<H: HomPoset>(hom: &H) -> Vec<(usize, usize)> {
    let elements = hom.elements();
    let lt = |a: usize, b: usize| a != b && elements[a].poset_le(&elements[b]);
    let m = elements.len();
    let mut edges = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if lt(a, b) && !(0..m).any(|c| lt(a, c) && lt(c, b)) {
                edges.push((a, b));
            }
        }
    }
    edges
}
