//! Elements of `G ≀ Sₙ`, their types, and conjugacy-class enumeration.
//!
//! Positions are 0-based internally. An element `(g; p)` stores the label
//! `g_i` at position `i` and the one-line images `perm[i] = p(i)`. Products
//! apply the left factor's permutation first.

use std::fmt;

use crate::combinat::{checked_pow, factorial};
use crate::error::{Error, Result};
use crate::family::{FamilyKind, PartitionFamily};
use crate::group::{ClassId, Elem, FiniteGroup};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    labels: Vec<Elem>,
    perm: Vec<usize>,
}

impl WreathElement {
    pub fn identity(n: usize) -> Self {
        WreathElement { labels: vec![0; n], perm: (0..n).collect() }
    }

    /// Validates that `perm` is a bijection of `0..n` and labels are group elements.
    pub fn new(g: &FiniteGroup, labels: Vec<Elem>, perm: Vec<usize>) -> Result<Self> {
        if labels.len() != perm.len() {
            return Err(Error::SizeMismatch { expected: perm.len(), found: labels.len() });
        }
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidPartialPermutation(format!("{perm:?} is not a permutation of 0..{n}")));
            }
            seen[p] = true;
        }
        if let Some(&bad) = labels.iter().find(|&&l| l >= g.order()) {
            return Err(Error::IndexOutOfRange { what: "group elements", index: bad, count: g.order() });
        }
        Ok(WreathElement { labels, perm })
    }

    /// Element with trivial labels.
    pub fn from_perm(perm: Vec<usize>) -> Self {
        let n = perm.len();
        WreathElement { labels: vec![0; n], perm }
    }

    pub(crate) fn from_parts_unchecked(labels: Vec<Elem>, perm: Vec<usize>) -> Self {
        WreathElement { labels, perm }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn labels(&self) -> &[Elem] {
        &self.labels
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// `((σ); p) · ((ε); q) = ((σ_{q⁻¹(i)} ε_i)_i ; pq)`, where `pq` applies `p` first.
    pub fn multiply(&self, g: &FiniteGroup, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: other.n() });
        }
        Ok(self.mul_unchecked(g, other))
    }

    pub(crate) fn mul_unchecked(&self, g: &FiniteGroup, other: &Self) -> Self {
        let n = self.n();
        let mut labels = vec![0; n];
        let mut perm = vec![0; n];
        for i in 0..n {
            let j = other.perm[i];
            // q(i) = j, so position j receives σ_i.
            labels[j] = g.mul(self.labels[i], other.labels[j]);
            perm[i] = other.perm[self.perm[i]];
        }
        WreathElement { labels, perm }
    }

    /// `((σ); p)⁻¹ = ((σ⁻¹_{p(i)})_i ; p⁻¹)`.
    pub fn inverse(&self, g: &FiniteGroup) -> Self {
        let n = self.n();
        let mut labels = vec![0; n];
        let mut perm = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            labels[i] = g.inv(self.labels[self.perm[i]]);
        }
        WreathElement { labels, perm }
    }

    pub fn conjugate_by(&self, g: &FiniteGroup, a: &Self) -> Result<Self> {
        Ok(a.multiply(g, self)?.mul_unchecked(g, &a.inverse(g)))
    }

    pub fn is_identity(&self) -> bool {
        self.labels.iter().all(|&l| l == 0) && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Cycles of the permutation, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.perm[x];
            }
            out.push(c);
        }
        out
    }

    /// The ordered label product along `cycle`, following the permutation
    /// from its first entry. A different starting point yields a conjugate.
    pub fn cycle_product_elem(&self, g: &FiniteGroup, cycle: &[usize]) -> Result<Elem> {
        let r = cycle.len();
        let ok = r > 0
            && cycle.iter().all(|&c| c < self.n())
            && (0..r).all(|k| self.perm[cycle[k]] == cycle[(k + 1) % r]);
        if !ok {
            return Err(Error::NotACycle(cycle.to_vec()));
        }
        Ok(cycle.iter().fold(0, |acc, &c| g.mul(acc, self.labels[c])))
    }

    /// Conjugacy class of the cycle product.
    pub fn cycle_product(&self, g: &FiniteGroup, cycle: &[usize]) -> Result<ClassId> {
        Ok(g.class_of(self.cycle_product_elem(g, cycle)?))
    }

    /// The class-indexed family recording cycle lengths by cycle-product class.
    pub fn type_of(&self, g: &FiniteGroup) -> PartitionFamily {
        type_of_slices(g, &self.labels, &self.perm)
    }
}

/// Type computed directly from label and permutation slices.
pub(crate) fn type_of_slices(g: &FiniteGroup, labels: &[Elem], perm: &[usize]) -> PartitionFamily {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); g.num_classes()];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut x = s;
        let mut len = 0;
        let mut prod = 0;
        while !seen[x] {
            seen[x] = true;
            prod = g.mul(prod, labels[x]);
            len += 1;
            x = perm[x];
        }
        parts[g.class_of(prod).0].push(len);
    }
    PartitionFamily::new(FamilyKind::Classes, parts.into_iter().enumerate().map(|(i, p)| (i, Partition::new(p))))
}

/// Compact type signature: `(class, cycle length)` pairs sorted by class
/// ascending, then length descending. Equal keys mean equal types.
pub type TypeKey = Vec<(u16, u16)>;

/// Scratch space for [`type_key_into`] and [`mul_into`].
#[derive(Default)]
pub(crate) struct Scratch {
    seen: Vec<bool>,
    pub(crate) key: TypeKey,
}

pub(crate) fn type_key_into(g: &FiniteGroup, labels: &[Elem], perm: &[usize], s: &mut Scratch) {
    let n = perm.len();
    s.seen.clear();
    s.seen.resize(n, false);
    s.key.clear();
    for start in 0..n {
        if s.seen[start] {
            continue;
        }
        let mut x = start;
        let mut len = 0u16;
        let mut prod = 0;
        while !s.seen[x] {
            s.seen[x] = true;
            prod = g.mul(prod, labels[x]);
            len += 1;
            x = perm[x];
        }
        s.key.push((g.class_of(prod).0 as u16, len));
    }
    s.key.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
}

pub fn family_key(lam: &PartitionFamily) -> TypeKey {
    cycle_specs(lam).into_iter().map(|(r, c)| (c.0 as u16, r as u16)).collect()
}

pub fn key_family(key: &[(u16, u16)]) -> PartitionFamily {
    let mut parts: std::collections::BTreeMap<usize, Vec<usize>> = std::collections::BTreeMap::new();
    for &(c, r) in key {
        parts.entry(c as usize).or_default().push(r as usize);
    }
    PartitionFamily::new(FamilyKind::Classes, parts.into_iter().map(|(c, p)| (c, Partition::new(p))))
}

/// Writes `a · b` into the output buffers; all slices have length `n`.
#[inline]
pub(crate) fn mul_into(
    g: &FiniteGroup,
    (al, ap): (&[Elem], &[usize]),
    (bl, bp): (&[Elem], &[usize]),
    ol: &mut [Elem],
    op: &mut [usize],
) {
    for i in 0..ap.len() {
        let j = bp[i];
        ol[j] = g.mul(al[i], bl[j]);
        op[i] = bp[ap[i]];
    }
}

/// Writes `a⁻¹` into the output buffers.
#[inline]
pub(crate) fn inverse_into(g: &FiniteGroup, (al, ap): (&[Elem], &[usize]), ol: &mut [Elem], op: &mut [usize]) {
    for i in 0..ap.len() {
        op[ap[i]] = i;
        ol[i] = g.inv(al[ap[i]]);
    }
}

impl fmt::Display for WreathElement {
    /// `((g_1,...,g_n); one-line images)` with 1-based images.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.labels.iter().map(|x| x.to_string()).collect();
        let p: Vec<String> = self.perm.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "(({}); [{}])", l.join(","), p.join(","))
    }
}

/// `Z_Λ = Π_c z_{Λ(c)} ξ_c^{l(Λ(c))}`.
pub fn centralizer_order(g: &FiniteGroup, lam: &PartitionFamily) -> Result<u64> {
    lam.validate(g.num_classes())?;
    let mut z: u64 = 1;
    for (c, p) in lam.iter() {
        let zc = p.checked_z().ok_or(Error::Overflow("z_lambda"))?;
        let xi = checked_pow(g.centralizer_order(ClassId(c)) as u64, p.length())?;
        z = z.checked_mul(zc).and_then(|v| v.checked_mul(xi)).ok_or(Error::Overflow("Z_Lambda"))?;
    }
    Ok(z)
}

/// `(Z_Λ, |C_Λ|)` in `G ≀ Sₙ` with `n = |Λ|`.
pub fn class_order(g: &FiniteGroup, lam: &PartitionFamily) -> Result<(u64, u64)> {
    let n = lam.size();
    let z = centralizer_order(g, lam)?;
    let total = checked_pow(g.order() as u64, n)?
        .checked_mul(factorial(n)?)
        .ok_or(Error::Overflow("|G|^n n!"))?;
    debug_assert_eq!(total % z, 0);
    Ok((z, total / z))
}

#[cfg(feature = "bigint")]
/// `|C_Λ|` in arbitrary precision.
pub fn class_order_big(g: &FiniteGroup, lam: &PartitionFamily) -> Result<num_bigint::BigUint> {
    use num_bigint::BigUint;
    lam.validate(g.num_classes())?;
    let n = lam.size();
    let mut total = BigUint::from(g.order()).pow(n as u32);
    for k in 2..=n {
        total *= BigUint::from(k);
    }
    let mut z = BigUint::from(1u32);
    for (c, p) in lam.iter() {
        for (i, m) in p.exponents() {
            z *= BigUint::from(i).pow(m as u32);
            for k in 2..=m {
                z *= BigUint::from(k);
            }
        }
        z *= BigUint::from(g.centralizer_order(ClassId(c))).pow(p.length() as u32);
    }
    Ok(total / z)
}

/// Cycle specs `(length, class)` of a family, in layout order: classes
/// ascending, lengths descending within a class.
pub(crate) fn cycle_specs(lam: &PartitionFamily) -> Vec<(usize, ClassId)> {
    lam.iter().flat_map(|(c, p)| p.parts().iter().map(move |&r| (r, ClassId(c)))).collect()
}

/// Deterministic member of `C_{Λ̲ₙ}`: cycles on consecutive points, labels
/// trivial except the last point of each cycle, which carries the minimal
/// member of the cycle's class; padding fixed points come last.
pub fn canonical_representative(g: &FiniteGroup, lam: &PartitionFamily, n: usize) -> Result<WreathElement> {
    lam.validate(g.num_classes())?;
    let size = lam.size();
    if size > n {
        return Err(Error::PadTooSmall { size, n });
    }
    let mut labels = vec![0; n];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut at = 0;
    for (r, c) in cycle_specs(lam) {
        for k in 0..r {
            perm[at + k] = at + (k + 1) % r;
        }
        labels[at + r - 1] = g.class_min(c);
        at += r;
    }
    Ok(WreathElement { labels, perm })
}

/// Calls `visit` once for each element of `C_Λ`, `|Λ| = n`, in a fixed order.
pub fn enumerate_class<F>(g: &FiniteGroup, lam: &PartitionFamily, n: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&WreathElement),
{
    lam.validate(g.num_classes())?;
    if lam.size() != n {
        return Err(Error::SizeMismatch { expected: n, found: lam.size() });
    }
    let ground: Vec<usize> = (0..n).collect();
    let mut buf = WreathElement::identity(n);
    let mut engine = CycleEngine::new(g, n, lam);
    engine.run(&ground, &mut |labels, perm| {
        buf.labels.copy_from_slice(labels);
        buf.perm.copy_from_slice(perm);
        visit(&buf);
    });
    Ok(())
}

/// Collects a class; intended for tests and small inputs.
pub fn class_elements(g: &FiniteGroup, lam: &PartitionFamily, n: usize) -> Result<Vec<WreathElement>> {
    let mut out = Vec::new();
    enumerate_class(g, lam, n, |x| out.push(x.clone()))?;
    Ok(out)
}

/// Every element of `G ≀ Sₙ`, class by class.
pub fn enumerate_group<F: FnMut(&WreathElement)>(g: &FiniteGroup, n: usize, mut visit: F) -> Result<()> {
    for lam in crate::family::families_of_size(FamilyKind::Classes, g.num_classes(), n) {
        enumerate_class(g, &lam, n, &mut visit)?;
    }
    Ok(())
}

/// Recursive generator of all labelled permutations of a ground set with a
/// prescribed multiset of `(cycle length, cycle-product class)`.
///
/// Each cycle starts at the smallest unused ground point. Its other points
/// are an ordered choice of unused points; all labels but the last are
/// free and the last one is forced so the product lands in the class.
pub(crate) struct CycleEngine<'g> {
    g: &'g FiniteGroup,
    specs: Vec<(usize, ClassId, usize)>,
    used: Vec<bool>,
    labels: Vec<Elem>,
    perm: Vec<usize>,
    remaining: usize,
}

impl<'g> CycleEngine<'g> {
    /// `n` is the ambient size of the label and permutation buffers.
    pub(crate) fn new(g: &'g FiniteGroup, n: usize, lam: &PartitionFamily) -> Self {
        let mut specs: Vec<(usize, ClassId, usize)> = Vec::new();
        for (r, c) in cycle_specs(lam) {
            match specs.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += 1,
                _ => specs.push((r, c, 1)),
            }
        }
        CycleEngine {
            g,
            specs,
            used: vec![false; n],
            labels: vec![0; n],
            perm: (0..n).collect(),
            remaining: lam.num_parts(),
        }
    }

    /// Runs over the given ground points, which must number `|Λ|`. Points
    /// outside the ground set stay fixed with trivial labels.
    pub(crate) fn run(&mut self, ground: &[usize], visit: &mut dyn FnMut(&[Elem], &[usize])) {
        for u in self.used.iter_mut() {
            *u = true;
        }
        for &p in ground {
            self.used[p] = false;
        }
        let mut cycle = Vec::new();
        self.fill(ground, &mut cycle, visit);
        for &p in ground {
            self.used[p] = false;
            self.labels[p] = 0;
            self.perm[p] = p;
        }
    }

    fn fill(&mut self, ground: &[usize], cycle: &mut Vec<usize>, visit: &mut dyn FnMut(&[Elem], &[usize])) {
        let Some(&a) = ground.iter().find(|&&p| !self.used[p]) else {
            if self.remaining == 0 {
                visit(&self.labels, &self.perm);
            }
            return;
        };
        if self.remaining == 0 {
            return;
        }
        for s in 0..self.specs.len() {
            if self.specs[s].2 == 0 {
                continue;
            }
            self.specs[s].2 -= 1;
            self.remaining -= 1;
            self.used[a] = true;
            let start = cycle.len();
            cycle.push(a);
            self.extend(ground, cycle, start, s, visit);
            cycle.pop();
            self.used[a] = false;
            self.remaining += 1;
            self.specs[s].2 += 1;
        }
    }

    fn extend(
        &mut self,
        ground: &[usize],
        cycle: &mut Vec<usize>,
        start: usize,
        s: usize,
        visit: &mut dyn FnMut(&[Elem], &[usize]),
    ) {
        let (r, c, _) = self.specs[s];
        if cycle.len() - start == r {
            for k in 0..r {
                self.perm[cycle[start + k]] = cycle[start + (k + 1) % r];
            }
            self.assign(ground, cycle, start, 0, 0, c, visit);
            return;
        }
        for i in 0..ground.len() {
            let b = ground[i];
            if self.used[b] {
                continue;
            }
            self.used[b] = true;
            cycle.push(b);
            self.extend(ground, cycle, start, s, visit);
            cycle.pop();
            self.used[b] = false;
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn assign(
        &mut self,
        ground: &[usize],
        cycle: &mut Vec<usize>,
        start: usize,
        pos: usize,
        prefix: Elem,
        c: ClassId,
        visit: &mut dyn FnMut(&[Elem], &[usize]),
    ) {
        let g = self.g;
        let r = cycle.len() - start;
        let point = cycle[start + pos];
        if pos + 1 == r {
            let pinv = g.inv(prefix);
            for &m in &g.conjugacy_classes()[c.0] {
                self.labels[point] = g.mul(pinv, m);
                self.fill(ground, cycle, visit);
            }
            return;
        }
        for h in 0..g.order() {
            self.labels[point] = h;
            self.assign(ground, cycle, start, pos + 1, g.mul(prefix, h), c, visit);
        }
    }
}
