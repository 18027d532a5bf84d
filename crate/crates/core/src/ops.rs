//! Simplicial operators acting on simplices of a standard simplex.
//!
//! A simplex of `Δ^m` is a weakly increasing [`VertexList`]. The face map `d_i`
//! deletes vertex `i`, the degeneracy `s_i` repeats it. Words of such generators are
//! written in composition order, so the rightmost generator acts first.
//!
//! Every word reduces, using the simplicial identities, to a unique
//! [`NormalOperator`] `s_{j_1} ... s_{j_t} d_{i_1} ... d_{i_u}` with
//! `j_1 > ... > j_t` and `i_1 < ... < i_u`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single face or degeneracy map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Generator {
    Face(usize),
    Degeneracy(usize),
}

impl Generator {
    /// Dimension of the result when acting on a simplex of dimension `dim`.
    pub fn target_dim(self, dim: usize) -> Option<usize> {
        match self {
            Generator::Face(i) if dim >= 1 && i <= dim => Some(dim - 1),
            Generator::Degeneracy(i) if i <= dim => Some(dim + 1),
            _ => None,
        }
    }

    pub fn shifted(self, amount: usize) -> Generator {
        match self {
            Generator::Face(i) => Generator::Face(i + amount),
            Generator::Degeneracy(i) => Generator::Degeneracy(i + amount),
        }
    }

    pub fn index(self) -> usize {
        match self {
            Generator::Face(i) | Generator::Degeneracy(i) => i,
        }
    }

    fn symbol(self) -> char {
        match self {
            Generator::Face(_) => 'd',
            Generator::Degeneracy(_) => 's',
        }
    }

    /// Acts on a raw vertex sequence in place. The caller checks the index.
    fn act(self, vertices: &mut Vec<usize>) {
        match self {
            Generator::Face(i) => {
                vertices.remove(i);
            }
            Generator::Degeneracy(i) => {
                let v = vertices[i];
                vertices.insert(i, v);
            }
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.symbol(), self.index())
    }
}

/// An ℓ-simplex of a standard simplex, given by its ℓ+1 vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexList(Vec<usize>);

impl VertexList {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidChain("a simplex needs at least one vertex".into()));
        }
        if vertices.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidChain(format!(
                "vertices {vertices:?} are not weakly increasing"
            )));
        }
        Ok(VertexList(vertices))
    }

    /// The nondegenerate top simplex `[0, 1, ..., m]` of `Δ^m`.
    pub fn generic(m: usize) -> Self {
        VertexList((0..=m).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl TryFrom<Vec<usize>> for VertexList {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        VertexList::new(v)
    }
}

impl From<VertexList> for Vec<usize> {
    fn from(v: VertexList) -> Self {
        v.0
    }
}

impl fmt::Display for VertexList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (pos, v) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// An unreduced word of generators in composition order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(generators: Vec<Generator>) -> Self {
        Word(generators)
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    /// `gen^count`, e.g. `d_1^3`.
    pub fn power(generator: Generator, count: usize) -> Self {
        Word(vec![generator; count])
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// The composite `self ∘ inner`: `inner` acts first.
    pub fn then_after(&self, inner: &Word) -> Word {
        let mut gens = self.0.clone();
        gens.extend_from_slice(&inner.0);
        Word(gens)
    }

    pub fn shifted(&self, amount: usize) -> Word {
        Word(self.0.iter().map(|g| g.shifted(amount)).collect())
    }

    /// Checks the word right to left starting from `domain_dim` and returns the
    /// dimension it lands in.
    pub fn codomain_dim(&self, domain_dim: usize) -> Result<usize> {
        let mut dim = domain_dim;
        for (position, g) in self.0.iter().enumerate().rev() {
            dim = g.target_dim(dim).ok_or_else(|| Error::InvalidWord {
                generator: g.to_string(),
                position,
                dim,
            })?;
        }
        Ok(dim)
    }

    /// Acts generator by generator, rightmost first, without any rewriting.
    pub fn apply_raw(&self, simplex: &VertexList) -> Result<VertexList> {
        self.codomain_dim(simplex.dim())?;
        let mut vertices = simplex.0.clone();
        for g in self.0.iter().rev() {
            g.act(&mut vertices);
        }
        Ok(VertexList(vertices))
    }

    /// Reduces the word to normal form with the simplicial identities.
    pub fn normalize(&self, domain_dim: usize) -> Result<NormalOperator> {
        normalize(self, domain_dim)
    }
}

impl fmt::Display for Word {
    /// Exponent-compressed, e.g. `d_2^2 s_1^2 d_1 s_0`; the empty word prints as `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        let mut first = true;
        let mut rest = self.0.as_slice();
        while let Some(&g) = rest.first() {
            let run = rest.iter().take_while(|&&h| h == g).count();
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{run}")?;
            }
            rest = &rest[run..];
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses the compressed notation, e.g. `"d_1^3 d_0"` or `"id"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for token in s.split_whitespace() {
            if token == "id" {
                continue;
            }
            let bad = || Error::InvalidParameter(format!("cannot parse generator `{token}`"));
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let (sym, idx) = base.split_once('_').ok_or_else(bad)?;
            let idx = idx.parse::<usize>().map_err(|_| bad())?;
            let g = match sym {
                "d" => Generator::Face(idx),
                "s" => Generator::Degeneracy(idx),
                _ => return Err(bad()),
            };
            gens.extend(std::iter::repeat_n(g, exp));
        }
        Ok(Word(gens))
    }
}

/// A simplicial operator in normal form: degeneracies (strictly decreasing indices)
/// after faces (strictly increasing indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOperator")]
pub struct NormalOperator {
    degeneracy_indices: Vec<usize>,
    face_indices: Vec<usize>,
    domain_dim: usize,
}

#[derive(Deserialize)]
struct RawOperator {
    degeneracy_indices: Vec<usize>,
    face_indices: Vec<usize>,
    domain_dim: usize,
}

impl TryFrom<RawOperator> for NormalOperator {
    type Error = Error;

    fn try_from(raw: RawOperator) -> Result<Self> {
        NormalOperator::from_parts(raw.degeneracy_indices, raw.face_indices, raw.domain_dim)
    }
}

impl NormalOperator {
    pub fn identity(dim: usize) -> Self {
        NormalOperator {
            degeneracy_indices: Vec::new(),
            face_indices: Vec::new(),
            domain_dim: dim,
        }
    }

    pub fn from_parts(
        degeneracy_indices: Vec<usize>,
        face_indices: Vec<usize>,
        domain_dim: usize,
    ) -> Result<Self> {
        if degeneracy_indices.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "degeneracy indices {degeneracy_indices:?} are not strictly decreasing"
            )));
        }
        if face_indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(format!(
                "face indices {face_indices:?} are not strictly increasing"
            )));
        }
        let op = NormalOperator {
            degeneracy_indices,
            face_indices,
            domain_dim,
        };
        op.word().codomain_dim(domain_dim)?;
        Ok(op)
    }

    pub fn degeneracy_indices(&self) -> &[usize] {
        &self.degeneracy_indices
    }

    pub fn face_indices(&self) -> &[usize] {
        &self.face_indices
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.domain_dim + self.degeneracy_indices.len() - self.face_indices.len()
    }

    pub fn is_identity(&self) -> bool {
        self.degeneracy_indices.is_empty() && self.face_indices.is_empty()
    }

    /// The normal form as a word `s_{j_1} ... s_{j_t} d_{i_1} ... d_{i_u}`.
    pub fn word(&self) -> Word {
        let degens = self.degeneracy_indices.iter().map(|&j| Generator::Degeneracy(j));
        let faces = self.face_indices.iter().map(|&i| Generator::Face(i));
        Word(degens.chain(faces).collect())
    }

    pub fn apply(&self, simplex: &VertexList) -> Result<VertexList> {
        if simplex.dim() != self.domain_dim {
            return Err(Error::DimensionMismatch {
                expected: self.domain_dim,
                found: simplex.dim(),
            });
        }
        self.word().apply_raw(simplex)
    }

    /// The vertex list `self` picks out of the generic simplex.
    pub fn action(&self) -> VertexList {
        self.word()
            .apply_raw(&VertexList::generic(self.domain_dim))
            .expect("normal form is valid on its domain")
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &NormalOperator, inner: &NormalOperator) -> Result<NormalOperator> {
        if inner.codomain_dim() != outer.domain_dim {
            return Err(Error::DimensionMismatch {
                expected: outer.domain_dim,
                found: inner.codomain_dim(),
            });
        }
        outer.word().then_after(&inner.word()).normalize(inner.domain_dim)
    }

    /// Adds `amount` to every index, so the operator leaves the first `amount`
    /// vertices alone and acts on the rest.
    pub fn shift(&self, amount: usize) -> NormalOperator {
        NormalOperator {
            degeneracy_indices: self.degeneracy_indices.iter().map(|j| j + amount).collect(),
            face_indices: self.face_indices.iter().map(|i| i + amount).collect(),
            domain_dim: self.domain_dim + amount,
        }
    }

    /// The same operator written with weakly increasing degeneracy indices and
    /// weakly decreasing face indices, e.g. `s_0^2` rather than `s_1 s_0` and
    /// `d_1^3 d_0` rather than `d_0 d_2 d_3 d_4`.
    pub fn display_word(&self) -> Word {
        let mut gens = Vec::with_capacity(self.degeneracy_indices.len() + self.face_indices.len());
        gens.extend(
            self.degeneracy_indices
                .iter()
                .rev()
                .enumerate()
                .map(|(s, &j)| Generator::Degeneracy(j - s)),
        );
        let mut faces: Vec<_> = self
            .face_indices
            .iter()
            .enumerate()
            .map(|(r, &i)| Generator::Face(i - r))
            .collect();
        faces.reverse();
        gens.extend(faces);
        Word(gens)
    }

    /// Renders the operator applied to a named simplex, e.g. `s_0 d_1 g_1`.
    pub fn notation(&self, simplex: &str) -> String {
        if self.is_identity() {
            simplex.to_string()
        } else {
            format!("{} {simplex}", self.display_word())
        }
    }
}

impl fmt::Display for NormalOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_word())
    }
}

/// Rewrites `word` into normal form.
///
/// Faces are first pushed to the right of degeneracies with
/// `d_i s_j = s_{j-1} d_i (i < j)`, `d_j s_j = d_{j+1} s_j = id`,
/// `d_i s_j = s_j d_{i-1} (i > j+1)`. The face block is then sorted with
/// `d_i d_j = d_{j-1} d_i (i < j)` and the degeneracy block with
/// `s_i s_j = s_{j+1} s_i (i <= j)`.
pub fn normalize(word: &Word, domain_dim: usize) -> Result<NormalOperator> {
    word.codomain_dim(domain_dim)?;
    let mut gens = word.0.clone();

    'push: loop {
        for pos in 0..gens.len().saturating_sub(1) {
            if let (Generator::Face(i), Generator::Degeneracy(j)) = (gens[pos], gens[pos + 1]) {
                if i < j {
                    gens[pos] = Generator::Degeneracy(j - 1);
                    gens[pos + 1] = Generator::Face(i);
                } else if i == j || i == j + 1 {
                    gens.drain(pos..pos + 2);
                } else {
                    gens[pos] = Generator::Degeneracy(j);
                    gens[pos + 1] = Generator::Face(i - 1);
                }
                continue 'push;
            }
        }
        break;
    }

    let split = gens
        .iter()
        .position(|g| matches!(g, Generator::Face(_)))
        .unwrap_or(gens.len());
    let mut degens: Vec<usize> = gens[..split].iter().map(|g| g.index()).collect();
    let mut faces: Vec<usize> = gens[split..].iter().map(|g| g.index()).collect();

    // d_a d_b with a >= b becomes d_b d_{a+1}
    let mut changed = true;
    while changed {
        changed = false;
        for pos in 0..faces.len().saturating_sub(1) {
            let (a, b) = (faces[pos], faces[pos + 1]);
            if a >= b {
                faces[pos] = b;
                faces[pos + 1] = a + 1;
                changed = true;
            }
        }
    }

    // s_a s_b with a <= b becomes s_{b+1} s_a
    changed = true;
    while changed {
        changed = false;
        for pos in 0..degens.len().saturating_sub(1) {
            let (a, b) = (degens[pos], degens[pos + 1]);
            if a <= b {
                degens[pos] = b + 1;
                degens[pos + 1] = a;
                changed = true;
            }
        }
    }

    Ok(NormalOperator {
        degeneracy_indices: degens,
        face_indices: faces,
        domain_dim,
    })
}
