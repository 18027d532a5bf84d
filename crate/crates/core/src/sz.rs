//! The Hinich map and the Szczarba map `𝔠(Δ^n)(p,q) -> G(Δ^n)(p,q)`.
//!
//! Two routes compute the image of a chain of subsets:
//!
//! * [`sz_elementwise`] applies [`hin_vertex`] to every entry of the chain. This is
//!   the nerve of the Hinich functor on hom posets, so it is the ground truth.
//! * [`sz_operator_route`] builds, for each `k`, a simplicial operator `E_{i,k}`
//!   from the `α_k` recursion and evaluates it on the generic simplex `g_k`.
//!
//! [`verify_range`] checks that the two agree on every injective sequence.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hom::{seq_to_chain, Chain, GHomElement, SequenceIndex, SubsetMorphism};
use crate::hom::{enumerate_sequences, PosetElement};
use crate::ops::{Generator, NormalOperator, VertexList, Word};

/// The Hinich map on a single morphism.
///
/// For `U = {p = u_0 < ... < u_{m+1} = q}` the `k` component sits at position
/// `u_{t+1} - k`, where `u_t < k <= u_{t+1}`.
pub fn hin_vertex(u: &SubsetMorphism) -> GHomElement {
    let members = u.members();
    let positions = (u.source() + 1..=u.target())
        .rev()
        .map(|k| {
            let upper = members[members.partition_point(|&x| x < k)];
            upper - k
        })
        .collect();
    GHomElement::new(u.n(), u.source(), u.target(), positions).expect("Hinich image lies in range")
}

/// One component of an image simplex in `N⟨g_k⟩^{n-k} ≅ Δ^{n-k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentChain {
    pub k: usize,
    pub vertices: VertexList,
}

/// The image of a chain under the nerve of the Hinich map, split by component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementwiseSz {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// Ordered `k = q` down to `k = p + 1`.
    pub components: Vec<ComponentChain>,
}

impl ElementwiseSz {
    pub fn component(&self, k: usize) -> Option<&VertexList> {
        self.components.iter().find(|c| c.k == k).map(|c| &c.vertices)
    }

    /// The chain of loop-group morphisms, entry by entry.
    pub fn as_chain(&self) -> Chain<GHomElement> {
        let len = self.components.first().map_or(1, |c| c.vertices.vertices().len());
        let entries = (0..len)
            .map(|j| {
                let positions = self.components.iter().map(|c| c.vertices.vertices()[j]).collect();
                GHomElement::new(self.n, self.p, self.q, positions).expect("valid positions")
            })
            .collect();
        Chain::new(entries).expect("Hinich map is monotone")
    }
}

/// `Sz` on an arbitrary chain, degenerate or not.
pub fn sz_elementwise(chain: &Chain<SubsetMorphism>) -> ElementwiseSz {
    let first = &chain.entries()[0];
    let (n, p, q) = (first.n(), first.source(), first.target());
    let images: Vec<GHomElement> = chain.entries().iter().map(hin_vertex).collect();
    let components = (p + 1..=q)
        .rev()
        .enumerate()
        .map(|(slot, k)| ComponentChain {
            k,
            vertices: VertexList::new(images.iter().map(|g| g.positions()[slot]).collect())
                .expect("Hinich map is monotone"),
        })
        .collect();
    ElementwiseSz { n, p, q, components }
}

/// The largest element of `{p, i_1, ..., i_{ℓ-1}, q}` below `next`.
pub fn omega(prefix: &SequenceIndex, next: usize) -> Result<usize> {
    if next <= prefix.p() || next >= prefix.q() {
        return Err(Error::InvalidSequence(format!(
            "{next} is not strictly between {} and {}",
            prefix.p(),
            prefix.q()
        )));
    }
    if prefix.entries().contains(&next) {
        return Err(Error::DegenerateSequence(next));
    }
    Ok(prefix
        .entries()
        .iter()
        .copied()
        .filter(|&x| x < next)
        .fold(prefix.p(), usize::max))
}

fn check_k(seq: &SequenceIndex, k: usize) -> Result<()> {
    if k <= seq.p() || k > seq.q() {
        return Err(Error::InvalidParameter(format!(
            "component k={k} outside ({}, {}]",
            seq.p(),
            seq.q()
        )));
    }
    Ok(())
}

/// `α_k` of every prefix of `seq`, starting from `α_k(∅) = q - k`.
pub fn alpha_prefixes(k: usize, seq: &SequenceIndex) -> Result<Vec<usize>> {
    check_k(seq, k)?;
    let mut values = Vec::with_capacity(seq.len() + 1);
    let mut current = seq.q() - k;
    values.push(current);
    for (len, &next) in seq.entries().iter().enumerate() {
        let w = omega(&seq.prefix(len), next)?;
        if w < k && k <= next {
            current = next - k;
        }
        values.push(current);
    }
    Ok(values)
}

/// `α_k(i)` for the whole sequence.
pub fn alpha(k: usize, seq: &SequenceIndex) -> Result<usize> {
    Ok(*alpha_prefixes(k, seq)?.last().expect("at least the empty prefix"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaRow {
    pub k: usize,
    /// `values[j] = α_k(i_1, ..., i_j)`.
    pub values: Vec<usize>,
}

/// `α_k` on every prefix of a sequence, for every `k`, plus the `ω` used at each step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaTable {
    pub n: usize,
    pub sequence: SequenceIndex,
    /// `omegas[j] = ω_{(i_1..i_j)}(i_{j+1})`.
    pub omegas: Vec<usize>,
    /// Ordered `k = q` down to `k = p + 1`.
    pub rows: Vec<AlphaRow>,
}

impl AlphaTable {
    pub fn new(n: usize, seq: &SequenceIndex) -> Result<Self> {
        if seq.q() > n {
            return Err(Error::InvalidParameter(format!("q={} exceeds n={n}", seq.q())));
        }
        let omegas = seq
            .entries()
            .iter()
            .enumerate()
            .map(|(len, &next)| omega(&seq.prefix(len), next))
            .collect::<Result<_>>()?;
        let rows = (seq.p() + 1..=seq.q())
            .rev()
            .map(|k| Ok(AlphaRow { k, values: alpha_prefixes(k, seq)? }))
            .collect::<Result<_>>()?;
        Ok(AlphaTable { n, sequence: seq.clone(), omegas, rows })
    }

    pub fn get(&self, k: usize, prefix_len: usize) -> Option<usize> {
        self.rows.iter().find(|r| r.k == k)?.values.get(prefix_len).copied()
    }
}

/// `E_{i,k}` together with the unreduced word the induction produces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorDerivation {
    pub operator: NormalOperator,
    pub word: Word,
}

/// Builds `E_{i,k}` by induction on the length of `i`.
///
/// `E_{∅,k} = d_1^{n-q} d_0^{q-k}`; then `s_0 E_{i',k}` when `α_k` is unchanged
/// and `E'_{i',k} s_0^{α+1} d_0^{α}` when it drops to `α = α_k(i)`.
pub fn derive_operator(seq: &SequenceIndex, k: usize, n: usize) -> Result<OperatorDerivation> {
    check_k(seq, k)?;
    if seq.q() > n {
        return Err(Error::InvalidParameter(format!("q={} exceeds n={n}", seq.q())));
    }
    let alphas = alpha_prefixes(k, seq)?;
    let top = n - k;

    let mut word = Word::power(Generator::Face(1), n - seq.q())
        .then_after(&Word::power(Generator::Face(0), seq.q() - k));
    let mut operator = word.normalize(top)?;

    for len in 1..=seq.len() {
        let (before, after) = (alphas[len - 1], alphas[len]);
        if after == before {
            let s0 = Word::power(Generator::Degeneracy(0), 1).normalize(len - 1)?;
            operator = NormalOperator::compose(&s0, &operator)?;
            word = Word::power(Generator::Degeneracy(0), 1).then_after(&word);
        } else if after < before {
            let prep = Word::power(Generator::Degeneracy(0), after + 1)
                .then_after(&Word::power(Generator::Face(0), after));
            operator = NormalOperator::compose(&operator.shift(1), &prep.normalize(top)?)?;
            word = word.shifted(1).then_after(&prep);
        } else {
            return Err(Error::Internal(format!(
                "α_{k} increased from {before} to {after} at prefix length {len} of {seq}"
            )));
        }
    }

    if operator.domain_dim() != top || operator.codomain_dim() != seq.len() {
        return Err(Error::Internal(format!(
            "E_{{{seq},{k}}} has arity {} -> {}, expected {top} -> {}",
            operator.domain_dim(),
            operator.codomain_dim(),
            seq.len()
        )));
    }
    Ok(OperatorDerivation { operator, word })
}

pub fn build_operator(seq: &SequenceIndex, k: usize, n: usize) -> Result<NormalOperator> {
    Ok(derive_operator(seq, k, n)?.operator)
}

/// One component `E_{i,k} g_k` of an operator-route result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SzComponent {
    pub k: usize,
    pub operator: NormalOperator,
    /// The word as produced by the induction, before reduction.
    pub word: Word,
    pub vertices: VertexList,
    pub pretty: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SzResult {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub sequence: SequenceIndex,
    /// Ordered `k = q` down to `k = p + 1`.
    pub components: Vec<SzComponent>,
}

impl SzResult {
    pub fn component(&self, k: usize) -> Option<&SzComponent> {
        self.components.iter().find(|c| c.k == k)
    }
}

impl fmt::Display for SzResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.components.iter().map(|c| c.pretty.as_str()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `Sz(i) = (E_{i,q} g_q, ..., E_{i,p+1} g_{p+1})`.
pub fn sz_operator_route(seq: &SequenceIndex, n: usize) -> Result<SzResult> {
    let components = (seq.p() + 1..=seq.q())
        .rev()
        .map(|k| {
            let OperatorDerivation { operator, word } = derive_operator(seq, k, n)?;
            let vertices = operator.action();
            let pretty = operator.notation(&format!("g_{k}"));
            Ok(SzComponent { k, operator, word, vertices, pretty })
        })
        .collect::<Result<_>>()?;
    Ok(SzResult { n, p: seq.p(), q: seq.q(), sequence: seq.clone(), components })
}

/// Raw sequences that may repeat entries go through here; repeats are rejected.
pub fn sz_operator_route_raw(n: usize, p: usize, q: usize, entries: Vec<usize>) -> Result<SzResult> {
    sz_operator_route(&SequenceIndex::new(p, q, entries)?, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub n: usize,
    pub sequence: SequenceIndex,
    pub matches: bool,
    pub operator_route: Vec<VertexList>,
    pub elementwise: Vec<VertexList>,
}

/// Compares both routes on one sequence.
pub fn verify_instance(n: usize, seq: &SequenceIndex) -> Result<InstanceReport> {
    let by_operator = sz_operator_route(seq, n)?;
    let by_elements = sz_elementwise(&seq_to_chain(seq, n)?);
    let operator_route: Vec<VertexList> =
        by_operator.components.into_iter().map(|c| c.vertices).collect();
    let elementwise: Vec<VertexList> =
        by_elements.components.into_iter().map(|c| c.vertices).collect();
    Ok(InstanceReport {
        n,
        sequence: seq.clone(),
        matches: operator_route == elementwise,
        operator_route,
        elementwise,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionCount {
    pub n: usize,
    pub instances: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub instances: usize,
    pub per_dimension: Vec<DimensionCount>,
    /// Failing instances in `(n, p, q, sequence)` order. Operator-route errors are
    /// recorded as mismatches with an empty operator side.
    pub mismatches: Vec<InstanceReport>,
}

impl VerifyReport {
    pub fn is_success(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.per_dimension {
            writeln!(f, "n={}: {} instances, {} mismatches", d.n, d.instances, d.mismatches)?;
        }
        for m in &self.mismatches {
            writeln!(
                f,
                "mismatch: n={} (p,q)=({},{}) i={}",
                m.n,
                m.sequence.p(),
                m.sequence.q(),
                m.sequence
            )?;
        }
        write!(
            f,
            "verified {} instances up to n={}: {} mismatches",
            self.instances,
            self.max_n,
            self.mismatches.len()
        )
    }
}

/// Every `(n, p, q, i)` with `1 <= n <= max_n`, `0 <= p < q <= n`, `i ∈ S^ℓ_{p,q}`.
pub fn verify_range(max_n: usize) -> VerifyReport {
    let triples: Vec<(usize, usize, usize)> = (1..=max_n)
        .flat_map(|n| (0..=n).flat_map(move |q| (0..q).map(move |p| (n, p, q))))
        .collect();

    let mut results: Vec<(usize, Vec<InstanceReport>, usize)> = triples
        .par_iter()
        .map(|&(n, p, q)| {
            let mut count = 0;
            let mut bad = Vec::new();
            for len in 0..q - p {
                for seq in enumerate_sequences(p, q, len) {
                    count += 1;
                    let report = verify_instance(n, &seq).unwrap_or_else(|_| InstanceReport {
                        n,
                        elementwise: sz_elementwise(&seq_to_chain(&seq, n).expect("valid"))
                            .components
                            .into_iter()
                            .map(|c| c.vertices)
                            .collect(),
                        sequence: seq.clone(),
                        matches: false,
                        operator_route: Vec::new(),
                    });
                    if !report.matches {
                        bad.push(report);
                    }
                }
            }
            (n, bad, count)
        })
        .collect();
    results.sort_by_key(|(n, bad, _)| (*n, bad.first().map(|b| b.sequence.clone())));

    let per_dimension = (1..=max_n)
        .map(|n| {
            let (instances, mismatches) = results
                .iter()
                .filter(|r| r.0 == n)
                .fold((0, 0), |(i, m), r| (i + r.2, m + r.1.len()));
            DimensionCount { n, instances, mismatches }
        })
        .collect();
    let instances = results.iter().map(|r| r.2).sum();
    let mut mismatches: Vec<InstanceReport> = results.into_iter().flat_map(|r| r.1).collect();
    mismatches.sort_by(|a, b| {
        (a.n, a.sequence.p(), a.sequence.q(), &a.sequence)
            .cmp(&(b.n, b.sequence.p(), b.sequence.q(), &b.sequence))
    });
    VerifyReport { max_n, instances, per_dimension, mismatches }
}

/// `true` iff `hin_vertex` preserves `u <= v`.
pub fn hin_preserves_order(u: &SubsetMorphism, v: &SubsetMorphism) -> bool {
    !u.poset_le(v) || hin_vertex(u).poset_le(&hin_vertex(v))
}
