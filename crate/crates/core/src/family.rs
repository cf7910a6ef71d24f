//! Families of partitions indexed by conjugacy classes or irreducible
//! characters of `G`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};

/// What the indices of a [`PartitionFamily`] refer to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// Indexed by conjugacy classes of `G`; class 0 is `{1_G}`.
    Classes,
    /// Indexed by rows of the canonical character table.
    Characters,
}

/// A mapping index → partition. Empty partitions are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionFamily {
    kind: FamilyKind,
    entries: BTreeMap<usize, Partition>,
}

static EMPTY: Partition = Partition::EMPTY;

impl PartitionFamily {
    pub fn empty(kind: FamilyKind) -> Self {
        PartitionFamily { kind, entries: BTreeMap::new() }
    }

    pub fn new(kind: FamilyKind, entries: impl IntoIterator<Item = (usize, Partition)>) -> Self {
        let mut f = Self::empty(kind);
        for (i, p) in entries {
            f.set(i, p);
        }
        f
    }

    /// Class-indexed family from `(class, parts)` pairs.
    pub fn classes<I, P>(entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, P)>,
        P: Into<Vec<usize>>,
    {
        Self::new(FamilyKind::Classes, entries.into_iter().map(|(i, p)| (i, Partition::new(p))))
    }

    /// Character-indexed family from `(character, parts)` pairs.
    pub fn characters<I, P>(entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, P)>,
        P: Into<Vec<usize>>,
    {
        Self::new(FamilyKind::Characters, entries.into_iter().map(|(i, p)| (i, Partition::new(p))))
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: FamilyKind) -> Self {
        self.kind = kind;
        self
    }

    /// Entry at `index`; the empty partition when absent.
    pub fn get(&self, index: usize) -> &Partition {
        self.entries.get(&index).unwrap_or(&EMPTY)
    }

    pub fn set(&mut self, index: usize, p: Partition) {
        if p.is_empty() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, p);
        }
    }

    /// Non-empty entries in index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Partition)> {
        self.entries.iter().map(|(&i, p)| (i, p))
    }

    pub fn size(&self) -> usize {
        self.entries.values().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of parts over all entries.
    pub fn num_parts(&self) -> usize {
        self.entries.values().map(Partition::length).sum()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// Checks every index is below `count`.
    pub fn validate(&self, count: usize) -> Result<()> {
        match self.max_index() {
            Some(i) if i >= count => Err(Error::IndexOutOfRange {
                what: match self.kind {
                    FamilyKind::Classes => "conjugacy classes",
                    FamilyKind::Characters => "irreducible characters",
                },
                index: i,
                count,
            }),
            _ => Ok(()),
        }
    }

    /// Class-indexed families: the identity-class entry has no part equal to 1.
    pub fn is_proper(&self) -> bool {
        self.get(0).is_proper()
    }

    /// `m_1` of the identity-class entry.
    pub fn identity_ones(&self) -> usize {
        self.get(0).multiplicity(1)
    }

    /// Strips the 1-parts of the identity-class entry.
    pub fn properize(&self) -> Self {
        let mut f = self.clone();
        f.set(0, self.get(0).proper_part());
        f
    }

    /// `Λ̲ₙ`: adds `n - |Λ|` parts equal to 1 at the identity class.
    pub fn pad(&self, n: usize) -> Result<Self> {
        let size = self.size();
        if n < size {
            return Err(Error::PadTooSmall { size, n });
        }
        Ok(self.add_identity_ones(n - size))
    }

    /// `Γ^j`: the identity-class entry gains `j` parts equal to 1.
    pub fn add_identity_ones(&self, j: usize) -> Self {
        let mut f = self.clone();
        f.set(0, self.get(0).union(&Partition::ones(j)));
        f
    }

    /// Entry-wise union.
    pub fn union(&self, other: &Self) -> Self {
        let mut f = self.clone();
        for (i, p) in other.iter() {
            f.set(i, f.get(i).union(p));
        }
        f
    }

    /// Entry-wise containment of diagrams.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.iter().all(|(i, p)| p.is_contained_in(other.get(i)))
    }
}

impl fmt::Display for PartitionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (i, p)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}: {p}")?;
        }
        write!(f, "}}")
    }
}

impl PartitionFamily {
    /// JSON object `{"<index>": [parts], ...}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(FamilyJson(self)).unwrap()
    }

    pub fn from_json_str(kind: FamilyKind, s: &str) -> std::result::Result<Self, serde_json::Error> {
        let map: BTreeMap<String, Partition> = serde_json::from_str(s)?;
        Self::from_string_map(kind, map).map_err(de::Error::custom)
    }

    pub fn from_json_value(kind: FamilyKind, v: &serde_json::Value) -> std::result::Result<Self, serde_json::Error> {
        let map: BTreeMap<String, Partition> = serde_json::from_value(v.clone())?;
        Self::from_string_map(kind, map).map_err(de::Error::custom)
    }

    fn from_string_map(kind: FamilyKind, map: BTreeMap<String, Partition>) -> std::result::Result<Self, String> {
        let mut f = Self::empty(kind);
        for (k, p) in map {
            let i: usize = k.trim().parse().map_err(|_| format!("family key `{k}` is not a non-negative integer"))?;
            f.set(i, p);
        }
        Ok(f)
    }
}

/// Serde adapter; the kind is not part of the wire format.
pub struct FamilyJson<'a>(pub &'a PartitionFamily);

impl serde::Serialize for FamilyJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.entries.len()))?;
        for (i, p) in self.0.iter() {
            m.serialize_entry(&i.to_string(), p)?;
        }
        m.end()
    }
}

impl serde::Serialize for PartitionFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyJson(self).serialize(s)
    }
}

/// Deserializes as a class-indexed family.
impl<'de> serde::Deserialize<'de> for PartitionFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = PartitionFamily;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an object mapping class ids to partitions")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Self::Value, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((k, p)) = map.next_entry::<String, Partition>()? {
                    out.insert(k, p);
                }
                PartitionFamily::from_string_map(FamilyKind::Classes, out).map_err(de::Error::custom)
            }
        }
        d.deserialize_map(V)
    }
}

/// All families of total size `n` over `count` indices, in a fixed order.
pub fn families_of_size(kind: FamilyKind, count: usize, n: usize) -> Vec<PartitionFamily> {
    fn go(count: usize, idx: usize, rem: usize, cur: &mut PartitionFamily, out: &mut Vec<PartitionFamily>) {
        if idx + 1 == count {
            for p in partitions_of(rem) {
                cur.set(idx, p);
                out.push(cur.clone());
            }
            cur.set(idx, Partition::empty());
            return;
        }
        for k in (0..=rem).rev() {
            for p in partitions_of(k) {
                cur.set(idx, p);
                go(count, idx + 1, rem - k, cur, out);
            }
        }
        cur.set(idx, Partition::empty());
    }
    if count == 0 {
        return if n == 0 { vec![PartitionFamily::empty(kind)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(count, 0, n, &mut PartitionFamily::empty(kind), &mut out);
    out
}

/// All families of size at most `max`, by increasing size.
pub fn families_up_to(kind: FamilyKind, count: usize, max: usize) -> Vec<PartitionFamily> {
    (0..=max).flat_map(|n| families_of_size(kind, count, n)).collect()
}

/// Proper class-indexed families of size at most `max`.
pub fn proper_families_up_to(count: usize, max: usize) -> Vec<PartitionFamily> {
    families_up_to(FamilyKind::Classes, count, max).into_iter().filter(PartitionFamily::is_proper).collect()
}
