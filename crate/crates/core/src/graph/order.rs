use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ABSENT: usize = usize::MAX;

/// Rank lookup shared by orderings and their reversed views.
pub trait Positions {
    /// Rank of `v`, or `None` if `v` is not ordered.
    fn position(&self, v: usize) -> Option<usize>;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A linear ordering of a set of vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearOrder {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let bound = seq.iter().max().map_or(0, |m| m + 1);
        let mut pos = vec![ABSENT; bound];
        for (i, &v) in seq.iter().enumerate() {
            if pos[v] != ABSENT {
                return Err(Error::validation(format!("vertex {v} repeated in ordering")));
            }
            pos[v] = i;
        }
        Ok(LinearOrder { seq, pos })
    }

    pub fn identity(n: usize) -> Self {
        LinearOrder {
            seq: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    /// Uniformly random permutation of `0..n`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut seq: Vec<usize> = (0..n).collect();
        seq.shuffle(rng);
        Self::new(seq).expect("shuffled identity is a permutation")
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.seq
    }

    pub fn contains(&self, v: usize) -> bool {
        self.pos.get(v).is_some_and(|&p| p != ABSENT)
    }

    /// True iff this is a permutation of exactly `0..n`.
    pub fn is_permutation_of(&self, n: usize) -> bool {
        self.seq.len() == n && self.pos.len() == n
    }

    /// Constant-time reversed view.
    pub fn reversed(&self) -> Reversed<'_> {
        Reversed(self)
    }

    pub fn to_reversed(&self) -> LinearOrder {
        let mut seq = self.seq.clone();
        seq.reverse();
        Self::new(seq).expect("reversal keeps elements distinct")
    }

    /// The subsequence of vertices accepted by `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(usize) -> bool) -> LinearOrder {
        Self::new(self.seq.iter().copied().filter(|&v| keep(v)).collect())
            .expect("subsequence keeps elements distinct")
    }

    /// Applies an injective relabeling to every vertex.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> LinearOrder {
        Self::new(self.seq.iter().map(|&v| f(v)).collect())
            .expect("relabeling must be injective")
    }

    /// `vertices` sorted by rank in this ordering. Every vertex must be present.
    pub fn sort_by_rank(&self, vertices: &mut [usize]) {
        vertices.sort_unstable_by_key(|&v| self.pos[v]);
    }
}

impl Positions for LinearOrder {
    fn position(&self, v: usize) -> Option<usize> {
        self.pos.get(v).copied().filter(|&p| p != ABSENT)
    }

    fn len(&self) -> usize {
        self.seq.len()
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.seq).finish()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Reversed<'a>(&'a LinearOrder);

impl Positions for Reversed<'_> {
    fn position(&self, v: usize) -> Option<usize> {
        self.0.position(v).map(|p| self.0.len() - 1 - p)
    }

    fn len(&self) -> usize {
        self.0.len()
    }
}

impl<T: Positions + ?Sized> Positions for &T {
    fn position(&self, v: usize) -> Option<usize> {
        (**self).position(v)
    }

    fn len(&self) -> usize {
        (**self).len()
    }
}

/// What a representation has been verified to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepKind {
    /// Not (yet) checked, e.g. a hand-written or adversarial instance.
    Unverified,
    Separating,
    Strong,
}

/// A non-empty sequence of orderings, each a permutation of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    n: usize,
    orderings: Vec<LinearOrder>,
    provenance: Vec<String>,
    kind: RepKind,
}

impl Representation {
    pub fn new(n: usize, orderings: Vec<LinearOrder>) -> Result<Self> {
        let tags = vec![String::new(); orderings.len()];
        Self::with_provenance(n, orderings, tags)
    }

    pub fn with_provenance(
        n: usize,
        orderings: Vec<LinearOrder>,
        provenance: Vec<String>,
    ) -> Result<Self> {
        if orderings.is_empty() {
            return Err(Error::validation("a representation needs at least one ordering"));
        }
        if provenance.len() != orderings.len() {
            return Err(Error::validation("one provenance tag per ordering"));
        }
        if let Some(i) = orderings.iter().position(|o| !o.is_permutation_of(n)) {
            return Err(Error::validation(format!(
                "ordering {i} is not a permutation of 0..{n}"
            )));
        }
        Ok(Representation {
            n,
            orderings,
            provenance,
            kind: RepKind::Unverified,
        })
    }

    pub fn from_vecs(n: usize, orderings: Vec<Vec<usize>>) -> Result<Self> {
        let orderings = orderings
            .into_iter()
            .map(LinearOrder::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, orderings)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.orderings.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn orderings(&self) -> &[LinearOrder] {
        &self.orderings
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub(crate) fn mark(mut self, kind: RepKind) -> Self {
        self.kind = kind;
        self
    }

    pub(crate) fn push(&mut self, order: LinearOrder, tag: impl Into<String>) {
        debug_assert!(order.is_permutation_of(self.n));
        self.orderings.push(order);
        self.provenance.push(tag.into());
        self.kind = RepKind::Unverified;
    }

    /// Pads to `size` orderings by repeating the first one.
    pub fn padded(&self, size: usize) -> Representation {
        let mut out = self.clone();
        while out.orderings.len() < size {
            out.orderings.push(self.orderings[0].clone());
            out.provenance.push(format!("pad({})", self.provenance[0]));
        }
        out
    }

    /// Reverses every ordering.
    pub fn reversed(&self) -> Representation {
        Representation {
            n: self.n,
            orderings: self.orderings.iter().map(LinearOrder::to_reversed).collect(),
            provenance: self.provenance.clone(),
            kind: self.kind,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RepresentationData {
    n: usize,
    orderings: Vec<Vec<usize>>,
    #[serde(default)]
    provenance: Option<Vec<String>>,
    #[serde(default = "unverified")]
    kind: RepKind,
}

fn unverified() -> RepKind {
    RepKind::Unverified
}

impl Serialize for Representation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RepresentationData {
            n: self.n,
            orderings: self.orderings.iter().map(|o| o.as_slice().to_vec()).collect(),
            provenance: Some(self.provenance.clone()),
            kind: self.kind,
        }
        .serialize(s)
    }
}

/// Deserialized representations are always `Unverified`: the `kind` field
/// in a file is a claim, not a fact.
impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let data = RepresentationData::deserialize(d)?;
        let count = data.orderings.len();
        let orderings = data
            .orderings
            .into_iter()
            .map(LinearOrder::new)
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        let provenance = data.provenance.unwrap_or_else(|| vec![String::new(); count]);
        Representation::with_provenance(data.n, orderings, provenance).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversed_view_matches_materialized_reverse() {
        let o = LinearOrder::new(vec![2, 0, 3, 1]).unwrap();
        let r = o.to_reversed();
        for v in 0..4 {
            assert_eq!(o.reversed().position(v), r.position(v));
        }
        assert_eq!(r.as_slice(), &[1, 3, 0, 2]);
    }

    #[test]
    fn rejects_repeats_and_partial_orders() {
        assert!(LinearOrder::new(vec![0, 1, 0]).is_err());
        let partial = LinearOrder::new(vec![0, 2]).unwrap();
        assert!(!partial.is_permutation_of(3));
        assert!(Representation::new(3, vec![partial]).is_err());
        assert!(Representation::new(3, vec![]).is_err());
    }

    #[test]
    fn padding_repeats_first() {
        let rep = Representation::from_vecs(2, vec![vec![1, 0]]).unwrap();
        let p = rep.padded(3);
        assert_eq!(p.len(), 3);
        assert_eq!(p.orderings()[2].as_slice(), &[1, 0]);
    }

    #[test]
    fn subset_positions() {
        let o = LinearOrder::new(vec![5, 2, 9]).unwrap();
        assert_eq!(o.position(9), Some(2));
        assert_eq!(o.position(3), None);
        assert_eq!(o.position(100), None);
        assert!(!o.contains(0));
    }
}
