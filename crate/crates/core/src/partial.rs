//! `G`-partial permutations: a finite support `d ⊂ {1, 2, ...}`, a bijection
//! `ω` of `d`, and a label in `G` for every point of `d`.
//!
//! Positions are 1-based, as in the ambient set `[n] = {1..n}`. The ambient
//! `n` is never stored; operations that need it take it as an argument.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, combinations};
use crate::error::{Error, Result};
use crate::family::{FamilyKind, PartitionFamily};
use crate::group::{Elem, FiniteGroup};
use crate::wreath::{class_order, type_of_slices, CycleEngine, WreathElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GPartialPermutation {
    /// `(point, ω(point), label)`, sorted by point.
    entries: Vec<(usize, usize, Elem)>,
}

impl GPartialPermutation {
    /// The unity: empty support.
    pub fn unity() -> Self {
        GPartialPermutation { entries: Vec::new() }
    }

    /// Builds from `(point, image, label)` triples in any order.
    pub fn new(g: &FiniteGroup, mut entries: Vec<(usize, usize, Elem)>) -> Result<Self> {
        entries.sort_unstable();
        let support: BTreeSet<usize> = entries.iter().map(|e| e.0).collect();
        if support.len() != entries.len() {
            return Err(Error::InvalidPartialPermutation("repeated support point".into()));
        }
        if support.contains(&0) {
            return Err(Error::InvalidPartialPermutation("support points are 1-based".into()));
        }
        let images: BTreeSet<usize> = entries.iter().map(|e| e.1).collect();
        if images != support {
            return Err(Error::InvalidPartialPermutation("ω does not map the support onto itself".into()));
        }
        if let Some(e) = entries.iter().find(|e| e.2 >= g.order()) {
            return Err(Error::IndexOutOfRange { what: "group elements", index: e.2, count: g.order() });
        }
        Ok(GPartialPermutation { entries })
    }

    /// Support given with cycles of `ω` (1-based) and a label per support point.
    pub fn from_cycles(
        g: &FiniteGroup,
        support: &[usize],
        cycles: &[&[usize]],
        labels: &BTreeMap<usize, Elem>,
    ) -> Result<Self> {
        let mut omega: BTreeMap<usize, usize> = support.iter().map(|&p| (p, p)).collect();
        for c in cycles {
            for k in 0..c.len() {
                if !omega.contains_key(&c[k]) {
                    return Err(Error::InvalidPartialPermutation(format!("cycle point {} outside the support", c[k])));
                }
                omega.insert(c[k], c[(k + 1) % c.len()]);
            }
        }
        let mut entries = Vec::new();
        for (&p, &w) in &omega {
            let l = *labels
                .get(&p)
                .ok_or_else(|| Error::InvalidPartialPermutation(format!("missing label at {p}")))?;
            entries.push((p, w, l));
        }
        if labels.keys().any(|k| !omega.contains_key(k)) {
            return Err(Error::InvalidPartialPermutation("label outside the support".into()));
        }
        Self::new(g, entries)
    }

    /// The element `(g; ([n], σ))` attached to `x ∈ G ≀ Sₙ`.
    pub fn from_wreath(x: &WreathElement) -> Self {
        let entries = (0..x.n()).map(|i| (i + 1, x.perm()[i] + 1, x.labels()[i])).collect();
        GPartialPermutation { entries }
    }

    /// Restriction of `x` to a 0-based ground set stable under its permutation.
    pub(crate) fn from_slices(ground: &[usize], labels: &[Elem], perm: &[usize]) -> Self {
        let mut entries: Vec<_> = ground.iter().map(|&p| (p + 1, perm[p] + 1, labels[p])).collect();
        entries.sort_unstable();
        GPartialPermutation { entries }
    }

    pub fn support(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.0).collect()
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, Elem)] {
        &self.entries
    }

    fn find(&self, p: usize) -> Option<&(usize, usize, Elem)> {
        self.entries.binary_search_by_key(&p, |e| e.0).ok().map(|i| &self.entries[i])
    }

    /// `ω(p)`, or `None` off the support.
    pub fn omega(&self, p: usize) -> Option<usize> {
        self.find(p).map(|e| e.1)
    }

    pub fn label(&self, p: usize) -> Option<Elem> {
        self.find(p).map(|e| e.2)
    }

    pub fn max_point(&self) -> usize {
        self.entries.last().map_or(0, |e| e.0)
    }

    /// Product with support `d₁ ∪ d₂`: permutations extended by fixed points
    /// and composed left factor first; label at `i` is `g̃_{ω̃₂⁻¹(i)} h̃_i`.
    pub fn mul(&self, g: &FiniteGroup, other: &Self) -> Self {
        let support: BTreeSet<usize> = self.entries.iter().chain(&other.entries).map(|e| e.0).collect();
        let mut w2_inv: BTreeMap<usize, usize> = BTreeMap::new();
        for &(p, w, _) in &other.entries {
            w2_inv.insert(w, p);
        }
        let entries = support
            .into_iter()
            .map(|p| {
                let image = self.omega(p).unwrap_or(p);
                let image = other.omega(image).unwrap_or(image);
                let pre = w2_inv.get(&p).copied().unwrap_or(p);
                let label = g.mul(self.label(pre).unwrap_or(0), other.label(p).unwrap_or(0));
                (p, image, label)
            })
            .collect();
        GPartialPermutation { entries }
    }

    /// `x̃` in `G ≀ Sₙ`: identity and trivial labels off the support.
    pub fn psi(&self, n: usize) -> Result<WreathElement> {
        if let Some(p) = self.entries.iter().map(|e| e.0).find(|&p| p > n) {
            return Err(Error::SupportExceedsN { point: p, n });
        }
        let mut labels = vec![0; n];
        let mut perm: Vec<usize> = (0..n).collect();
        for &(p, w, l) in &self.entries {
            labels[p - 1] = l;
            perm[p - 1] = w - 1;
        }
        Ok(WreathElement::from_parts_unchecked(labels, perm))
    }

    /// Type of `x̃` restricted to the support; its size is `|d|`.
    pub fn type_of(&self, g: &FiniteGroup) -> PartitionFamily {
        let index: BTreeMap<usize, usize> = self.entries.iter().enumerate().map(|(i, e)| (e.0, i)).collect();
        let labels: Vec<Elem> = self.entries.iter().map(|e| e.2).collect();
        let perm: Vec<usize> = self.entries.iter().map(|e| index[&e.1]).collect();
        type_of_slices(g, &labels, &perm)
    }

    /// `(g; σ) · (h; (d, ω)) = (f; (σ⁻¹(d), σωσ⁻¹))` with
    /// `f_i = g_{ω⁻¹(σ(i))} h_{σ(i)} g⁻¹_{σ(i)}`.
    pub fn act(&self, g: &FiniteGroup, a: &WreathElement) -> Result<Self> {
        let n = a.n();
        if let Some(p) = self.entries.iter().map(|e| e.0).find(|&p| p > n) {
            return Err(Error::SupportExceedsN { point: p, n });
        }
        let sigma = a.perm();
        let gl = a.labels();
        let mut sigma_inv = vec![0; n];
        for i in 0..n {
            sigma_inv[sigma[i]] = i;
        }
        let mut omega_inv = BTreeMap::new();
        for &(p, w, _) in &self.entries {
            omega_inv.insert(w, p);
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for &(p, w, h) in &self.entries {
            // i = σ⁻¹(p) ∈ σ⁻¹(d).
            let i = sigma_inv[p - 1];
            let image = sigma_inv[w - 1] + 1;
            let pre = omega_inv[&p];
            let f = g.mul(g.mul(gl[pre - 1], h), g.inv(gl[p - 1]));
            entries.push((i + 1, image, f));
        }
        entries.sort_unstable();
        Ok(GPartialPermutation { entries })
    }

    /// JSON object with 1-based positions:
    /// `{"support": [...], "omega": {"i": ω(i)}, "labels": {"i": g_i}}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PartialJson::from(self)).unwrap()
    }

    pub fn from_json(g: &FiniteGroup, v: &serde_json::Value) -> Result<Self> {
        let pj: PartialJson = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidPartialPermutation(e.to_string()))?;
        let support: BTreeSet<usize> = pj.support.iter().copied().collect();
        let key = |k: &str| -> Result<usize> {
            k.trim().parse().map_err(|_| Error::InvalidPartialPermutation(format!("bad position `{k}`")))
        };
        let mut omega = BTreeMap::new();
        for (k, v) in &pj.omega {
            omega.insert(key(k)?, v.value()?);
        }
        let mut labels = BTreeMap::new();
        for (k, v) in &pj.labels {
            labels.insert(key(k)?, *v);
        }
        if omega.keys().copied().collect::<BTreeSet<_>>() != support
            || labels.keys().copied().collect::<BTreeSet<_>>() != support
        {
            return Err(Error::InvalidPartialPermutation("omega and labels must be defined exactly on the support".into()));
        }
        Self::new(g, support.iter().map(|p| (*p, omega[p], labels[p])).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct PartialJson {
    support: Vec<usize>,
    omega: BTreeMap<String, Position>,
    labels: BTreeMap<String, Elem>,
}

/// Accepts positions written as integers or as numeric strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Position {
    Int(usize),
    Str(String),
}

impl Position {
    fn value(&self) -> Result<usize> {
        match self {
            Position::Int(v) => Ok(*v),
            Position::Str(s) => {
                s.trim().parse().map_err(|_| Error::InvalidPartialPermutation(format!("bad position `{s}`")))
            }
        }
    }
}

impl From<&GPartialPermutation> for PartialJson {
    fn from(x: &GPartialPermutation) -> Self {
        let mut omega = BTreeMap::new();
        let mut labels = BTreeMap::new();
        for &(p, w, l) in &x.entries {
            omega.insert(p.to_string(), Position::Int(w));
            labels.insert(p.to_string(), l);
        }
        PartialJson { support: x.support(), omega, labels }
    }
}

impl fmt::Display for GPartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|(p, w, l)| format!("{p}->{w}:{l}")).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

/// `|C_{Λ;n}| = binom(n - |Λ| + m₁, m₁) · |C_{Λ̲ₙ}|`, `m₁` counting the
/// 1-parts of the identity-class entry.
pub fn class_size_partial(g: &FiniteGroup, lam: &PartitionFamily, n: usize) -> Result<u64> {
    let k = lam.size();
    if k > n {
        return Err(Error::SizeMismatch { expected: n, found: k });
    }
    let m1 = lam.identity_ones();
    let (_, padded) = class_order(g, &lam.pad(n)?)?;
    binomial(n - k + m1, m1)?.checked_mul(padded).ok_or(Error::Overflow("|C_{Lambda;n}|"))
}

/// `|𝔓ᴳ_n| = Σ_k binom(n,k) k! |G|^k`.
pub fn semigroup_order(g: &FiniteGroup, n: usize) -> Result<u64> {
    let mut total: u64 = 0;
    for k in 0..=n {
        let term = binomial(n, k)?
            .checked_mul(crate::combinat::factorial(k)?)
            .and_then(|v| v.checked_mul((g.order() as u64).checked_pow(k as u32)?))
            .ok_or(Error::Overflow("|P^G_n|"))?;
        total = total.checked_add(term).ok_or(Error::Overflow("|P^G_n|"))?;
    }
    Ok(total)
}

/// Streams `C_{Λ;n}` (optionally only supports inside `restrict`), in a
/// fixed order: supports in lexicographic order, then the cycle engine.
///
/// `visit` receives the 0-based support and the full label and
/// permutation buffers of length `n`; points off the support are fixed
/// with trivial labels.
pub fn for_each_partial_raw(
    g: &FiniteGroup,
    lam: &PartitionFamily,
    n: usize,
    restrict: Option<&[usize]>,
    visit: &mut dyn FnMut(&[usize], &[Elem], &[usize]),
) -> Result<()> {
    lam.validate(g.num_classes())?;
    let k = lam.size();
    if k > n {
        return Err(Error::SizeMismatch { expected: n, found: k });
    }
    let pool: Vec<usize> = match restrict {
        Some(r) => {
            let set: BTreeSet<usize> = r.iter().copied().filter(|&p| p >= 1 && p <= n).collect();
            set.into_iter().map(|p| p - 1).collect()
        }
        None => (0..n).collect(),
    };
    let mut engine = CycleEngine::new(g, n, lam);
    for support in combinations(&pool, k) {
        engine.run(&support, &mut |labels, perm| visit(&support, labels, perm));
    }
    Ok(())
}

/// Streams `C_{Λ;n}` as [`GPartialPermutation`] values.
pub fn enumerate_partial_class<F>(
    g: &FiniteGroup,
    lam: &PartitionFamily,
    n: usize,
    restrict: Option<&[usize]>,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&GPartialPermutation),
{
    for_each_partial_raw(g, lam, n, restrict, &mut |support, labels, perm| {
        visit(&GPartialPermutation::from_slices(support, labels, perm))
    })
}

/// A finite formal combination of `G`-partial permutations with integer
/// coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartialCombination {
    terms: BTreeMap<GPartialPermutation, i64>,
}

impl PartialCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unity() -> Self {
        let mut c = Self::zero();
        c.terms.insert(GPartialPermutation::unity(), 1);
        c
    }

    /// The class sum `𝐂_{Λ;n}`.
    pub fn class_sum(g: &FiniteGroup, lam: &PartitionFamily, n: usize) -> Result<Self> {
        let mut c = Self::zero();
        enumerate_partial_class(g, lam, n, None, |x| {
            c.terms.insert(x.clone(), 1);
        })?;
        Ok(c)
    }

    pub fn add_term(&mut self, x: GPartialPermutation, coeff: i64) -> Result<()> {
        let slot = self.terms.entry(x).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow("combination coefficient"))?;
        self.terms.retain(|_, v| *v != 0);
        Ok(())
    }

    pub fn coefficient(&self, x: &GPartialPermutation) -> i64 {
        self.terms.get(x).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GPartialPermutation, i64)> {
        self.terms.iter().map(|(x, &c)| (x, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Full bilinear expansion of the semigroup-algebra product.
    pub fn mul(&self, g: &FiniteGroup, other: &Self) -> Result<Self> {
        let mut acc: BTreeMap<GPartialPermutation, i64> = BTreeMap::new();
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let c = a.checked_mul(*b).ok_or(Error::Overflow("combination product"))?;
                let slot = acc.entry(x.mul(g, y)).or_insert(0);
                *slot = slot.checked_add(c).ok_or(Error::Overflow("combination product"))?;
            }
        }
        acc.retain(|_, v| *v != 0);
        Ok(PartialCombination { terms: acc })
    }

    /// Keeps the terms whose support lies in `[n]`.
    pub fn proj(&self, n: usize) -> Self {
        let terms = self.terms.iter().filter(|(x, _)| x.max_point() <= n).map(|(x, &c)| (x.clone(), c)).collect();
        PartialCombination { terms }
    }

    /// Summed coefficients grouped by type.
    pub fn mass_by_type(&self, g: &FiniteGroup) -> BTreeMap<PartitionFamily, i64> {
        let mut out = BTreeMap::new();
        for (x, &c) in &self.terms {
            *out.entry(x.type_of(g)).or_insert(0) += c;
        }
        out
    }
}

/// Canonical member of `C_{Γ;n}` with support `{1..|Γ|}`.
pub fn canonical_partial(g: &FiniteGroup, gamma: &PartitionFamily) -> Result<GPartialPermutation> {
    let m = gamma.size();
    let rep = crate::wreath::canonical_representative(g, gamma, m)?;
    debug_assert_eq!(rep.type_of(g), gamma.clone().with_kind(FamilyKind::Classes));
    Ok(GPartialPermutation::from_wreath(&rep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::families_up_to;

    fn labels(pairs: &[(usize, Elem)]) -> BTreeMap<usize, Elem> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn worked_product() {
        // Generic labels in S₄ so that every product is visible.
        let g = FiniteGroup::from_spec("sym:4").unwrap();
        let gl: BTreeMap<usize, Elem> = labels(&[(2, 5), (4, 7), (5, 11), (6, 13)]);
        let fl: BTreeMap<usize, Elem> = labels(&[(1, 3), (3, 17), (5, 19), (6, 21), (8, 22), (9, 23)]);
        let x = GPartialPermutation::from_cycles(&g, &[2, 4, 5, 6], &[&[2, 5], &[4, 6]], &gl).unwrap();
        let y = GPartialPermutation::from_cycles(&g, &[1, 3, 5, 6, 8, 9], &[&[1, 5, 8], &[3, 9]], &fl).unwrap();
        let xy = x.mul(&g, &y);
        assert_eq!(xy.support(), vec![1, 2, 3, 4, 5, 6, 8, 9]);
        let expect_perm = [(1, 5), (5, 2), (2, 8), (8, 1), (3, 9), (9, 3), (4, 6), (6, 4)];
        for (p, w) in expect_perm {
            assert_eq!(xy.omega(p), Some(w));
        }
        let expect_labels = [
            (1, fl[&1]),
            (2, gl[&2]),
            (3, fl[&3]),
            (4, gl[&4]),
            (5, fl[&5]),
            (6, g.mul(gl[&6], fl[&6])),
            (8, g.mul(gl[&5], fl[&8])),
            (9, fl[&9]),
        ];
        for (p, l) in expect_labels {
            assert_eq!(xy.label(p), Some(l), "label at {p}");
        }
    }

    #[test]
    fn worked_action() {
        let g = FiniteGroup::from_spec("sym:4").unwrap();
        let mut sigma = vec![0; 9];
        for c in [&[2usize, 3, 6][..], &[1, 4], &[5, 7, 9], &[8]] {
            for k in 0..c.len() {
                sigma[c[k] - 1] = c[(k + 1) % c.len()] - 1;
            }
        }
        let gl: Vec<Elem> = vec![1, 2, 3, 5, 7, 11, 13, 17, 19];
        let a = WreathElement::new(&g, gl.clone(), sigma).unwrap();
        let hl = labels(&[(2, 4), (4, 9), (5, 15), (6, 20)]);
        let x = GPartialPermutation::from_cycles(&g, &[2, 4, 5, 6], &[&[2, 5], &[4, 6]], &hl).unwrap();
        let y = x.act(&g, &a).unwrap();
        assert_eq!(y.support(), vec![1, 3, 6, 9]);
        for (p, w) in [(1, 3), (3, 1), (6, 9), (9, 6)] {
            assert_eq!(y.omega(p), Some(w));
        }
        let gi = |i: usize| gl[i - 1];
        let conj = |a: usize, h: usize, b: usize| g.mul(g.mul(gi(a), hl[&h]), g.inv(gi(b)));
        assert_eq!(y.label(1), Some(conj(6, 4, 4)));
        assert_eq!(y.label(3), Some(conj(4, 6, 6)));
        assert_eq!(y.label(6), Some(conj(5, 2, 2)));
        assert_eq!(y.label(9), Some(conj(2, 5, 5)));
    }

    #[test]
    fn unity_and_disjoint_products() {
        let g = FiniteGroup::cyclic(3);
        let u = GPartialPermutation::unity();
        assert_eq!(u.mul(&g, &u), u);
        assert!(u.type_of(&g).is_empty());
        assert!(u.psi(4).unwrap().is_identity());
        let a = GPartialPermutation::new(&g, vec![(1, 1, 2)]).unwrap();
        let b = GPartialPermutation::new(&g, vec![(3, 3, 1)]).unwrap();
        assert_eq!(a.mul(&g, &u), a);
        assert_eq!(u.mul(&g, &a), a);
        assert_eq!(a.mul(&g, &b), GPartialPermutation::new(&g, vec![(1, 1, 2), (3, 3, 1)]).unwrap());
        assert_eq!(b.type_of(&g), PartitionFamily::classes([(1, vec![1])]));
    }

    #[test]
    fn psi_by_definition() {
        let g = FiniteGroup::cyclic(2);
        let x = GPartialPermutation::new(&g, vec![(2, 2, 1)]).unwrap();
        assert_eq!(x.psi(3).unwrap(), WreathElement::new(&g, vec![0, 1, 0], vec![0, 1, 2]).unwrap());
        assert!(matches!(x.psi(1), Err(Error::SupportExceedsN { point: 2, n: 1 })));
    }

    #[test]
    fn invalid_inputs() {
        let g = FiniteGroup::cyclic(2);
        assert!(GPartialPermutation::new(&g, vec![(1, 2, 0)]).is_err());
        assert!(GPartialPermutation::new(&g, vec![(1, 1, 5)]).is_err());
        assert!(GPartialPermutation::new(&g, vec![(0, 0, 0)]).is_err());
    }

    #[test]
    fn json_shape() {
        let g = FiniteGroup::cyclic(3);
        let x = GPartialPermutation::new(&g, vec![(2, 5, 1), (5, 2, 0), (7, 7, 2)]).unwrap();
        let v = x.to_json();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"labels":{"2":1,"5":0,"7":2},"omega":{"2":5,"5":2,"7":7},"support":[2,5,7]}"#
        );
        assert_eq!(GPartialPermutation::from_json(&g, &v).unwrap(), x);
        let s: serde_json::Value =
            serde_json::from_str(r#"{"support":[1],"omega":{"1":"1"},"labels":{"1":2}}"#).unwrap();
        assert_eq!(GPartialPermutation::from_json(&g, &s).unwrap().label(1), Some(2));
        let bad: serde_json::Value = serde_json::from_str(r#"{"support":[1,2],"omega":{"1":"1"},"labels":{"1":2}}"#).unwrap();
        assert!(GPartialPermutation::from_json(&g, &bad).is_err());
    }

    #[test]
    fn partial_class_sizes_match_enumeration() {
        for k in 1..=3 {
            let g = FiniteGroup::cyclic(k);
            for n in 0..=4 {
                let mut total = 0;
                for lam in families_up_to(FamilyKind::Classes, k, n) {
                    let mut count = 0u64;
                    let mut seen = BTreeSet::new();
                    enumerate_partial_class(&g, &lam, n, None, |x| {
                        assert_eq!(x.type_of(&g), lam);
                        seen.insert(x.clone());
                        count += 1;
                    })
                    .unwrap();
                    assert_eq!(seen.len() as u64, count);
                    assert_eq!(count, class_size_partial(&g, &lam, n).unwrap(), "{lam} n={n}");
                    let direct = binomial(n, lam.size()).unwrap() * class_order(&g, &lam).unwrap().1;
                    assert_eq!(count, direct);
                    total += count;
                }
                assert_eq!(total, semigroup_order(&g, n).unwrap());
            }
        }
        assert_eq!(semigroup_order(&FiniteGroup::cyclic(2), 2).unwrap(), 13);
    }

    #[test]
    fn class_size_examples() {
        let g = FiniteGroup::cyclic(2);
        assert_eq!(class_size_partial(&g, &PartitionFamily::empty(FamilyKind::Classes), 3).unwrap(), 1);
        assert_eq!(class_size_partial(&g, &PartitionFamily::classes([(0, vec![1])]), 2).unwrap(), 2);
        assert_eq!(class_size_partial(&g, &PartitionFamily::classes([(0, vec![2])]), 3).unwrap(), 6);
        assert!(class_size_partial(&g, &PartitionFamily::classes([(0, vec![2])]), 1).is_err());
    }

    #[test]
    fn restricted_enumeration() {
        let g = FiniteGroup::cyclic(2);
        let lam = PartitionFamily::classes([(0, vec![2])]);
        let mut n = 0;
        enumerate_partial_class(&g, &lam, 4, Some(&[1]), |_| n += 1).unwrap();
        assert_eq!(n, 0);
        enumerate_partial_class(&g, &lam, 4, Some(&[1, 3, 9]), |x| {
            assert_eq!(x.support(), vec![1, 3]);
            n += 1
        })
        .unwrap();
        assert_eq!(n, 2);
    }

    #[test]
    fn projection() {
        let g = FiniteGroup::cyclic(2);
        let lam = PartitionFamily::classes([(1, vec![1]), (0, vec![1])]);
        let c4 = PartialCombination::class_sum(&g, &lam, 4).unwrap();
        let p3 = c4.proj(3);
        assert_eq!(p3.len() as u64, class_size_partial(&g, &lam, 3).unwrap());
        assert_eq!(p3, PartialCombination::class_sum(&g, &lam, 3).unwrap());
        assert!(c4.proj(1).is_empty());
        assert_eq!(PartialCombination::unity().proj(0), PartialCombination::unity());
    }

    #[test]
    fn orbits_are_types() {
        // Equal type and support size means one orbit, n = 3 over ℤ₂.
        let g = FiniteGroup::cyclic(2);
        let n = 3;
        let mut group = Vec::new();
        crate::wreath::enumerate_group(&g, n, |a| group.push(a.clone())).unwrap();
        for lam in families_up_to(FamilyKind::Classes, 2, n) {
            let mut members = BTreeSet::new();
            enumerate_partial_class(&g, &lam, n, None, |x| {
                members.insert(x.clone());
            })
            .unwrap();
            let first = members.iter().next().unwrap().clone();
            let orbit: BTreeSet<_> = group.iter().map(|a| first.act(&g, a).unwrap()).collect();
            assert_eq!(orbit, members, "{lam}");
        }
    }

    #[test]
    fn canonical_partial_has_leading_support() {
        let g = FiniteGroup::cyclic(3);
        let gamma = PartitionFamily::classes([(1, vec![2]), (0, vec![1])]);
        let z = canonical_partial(&g, &gamma).unwrap();
        assert_eq!(z.support(), vec![1, 2, 3]);
        assert_eq!(z.type_of(&g), gamma);
    }
}
