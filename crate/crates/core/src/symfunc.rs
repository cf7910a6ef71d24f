//! Shifted symmetric functions, irreducible characters of `G ≀ Sₙ`, and the
//! pointwise evaluation of the map sending `𝐂_{Δ;∞}` to a shifted function
//! on families of partitions.
//!
//! Irreducible characters of `G ≀ Sₙ` are indexed by character-indexed
//! families `Λ` with `|Λ| = n`, using the canonical row order of
//! [`CharacterTable`].

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::characters::CharacterTable;
use crate::combinat::{falling_factorial, factorial};
use crate::error::{Error, Result};
use crate::family::{families_up_to, FamilyKind, PartitionFamily};
use crate::group::{ClassId, FiniteGroup};
use crate::partition::{dim_partition, mn_character, partitions_of, skew_count, Partition};
use crate::wreath::centralizer_order;

pub type Rational = Ratio<i128>;

/// `p^#_δ(λ) = (|λ|↓|δ|) / dim λ · χ^λ_{δ ∪ 1^{|λ|-|δ|}}`, zero when `|λ| < |δ|`.
pub fn p_sharp_eval(delta: &Partition, lambda: &Partition) -> Rational {
    let (n, k) = (lambda.size(), delta.size());
    if n < k {
        return Rational::zero();
    }
    let chi = mn_character(lambda, &delta.pad(n).expect("n ≥ |δ|")).expect("sizes agree");
    let ff = falling_factorial(n, k).expect("desk-scale falling factorial");
    Rational::new(ff as i128 * chi as i128, dim_partition(lambda) as i128)
}

/// `s^#_ρ(λ) = (|λ|↓|ρ|) / dim λ · f^{λ/ρ}`, zero when `ρ ⊄ λ`.
pub fn s_sharp_eval(rho: &Partition, lambda: &Partition) -> Rational {
    if !rho.is_contained_in(lambda) {
        return Rational::zero();
    }
    let ff = falling_factorial(lambda.size(), rho.size()).expect("desk-scale falling factorial");
    Rational::new(ff as i128 * skew_count(lambda, rho) as i128, dim_partition(lambda) as i128)
}

/// `Π_c p^#_{Δ(c)}(Λ(c))`, one partition of the point per class index.
pub fn p_sharp_family_eval(delta: &PartitionFamily, point: &PartitionFamily) -> Rational {
    delta.iter().map(|(c, d)| p_sharp_eval(d, point.get(c))).product()
}

/// Trivial group: `z_δ⁻¹ p^#_δ(λ)`, exactly.
pub fn f_image_eval_trivial(delta: &Partition, lambda: &Partition) -> Rational {
    p_sharp_eval(delta, lambda) / Rational::from_integer(delta.z() as i128)
}

/// Relative closeness `|a - b| ≤ tol · max(1, |a|, |b|)`.
pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * 1f64.max(a.norm()).max(b.norm())
}

/// Linear combination of products of power sums over several alphabets,
/// either one alphabet per class (`P_r(c)`) or one per irreducible
/// character (`P_r(γ)`). The basis is given by the family kind.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiAlphabetPowerSum {
    kind: FamilyKind,
    terms: BTreeMap<PartitionFamily, Complex64>,
}

const DROP: f64 = 1e-13;

impl MultiAlphabetPowerSum {
    pub fn zero(kind: FamilyKind) -> Self {
        MultiAlphabetPowerSum { kind, terms: BTreeMap::new() }
    }

    /// The monomial `P_Λ`; the alphabet kind follows `Λ`.
    pub fn monomial(lam: PartitionFamily) -> Self {
        let mut f = Self::zero(lam.kind());
        f.terms.insert(lam, Complex64::new(1.0, 0.0));
        f
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn add(&mut self, lam: PartitionFamily, c: Complex64) -> Result<()> {
        if lam.kind() != self.kind {
            return Err(Error::BasisMismatch);
        }
        let slot = self.terms.entry(lam).or_insert(Complex64::zero());
        *slot += c;
        Ok(())
    }

    pub fn coefficient(&self, lam: &PartitionFamily) -> Complex64 {
        self.terms.get(lam).copied().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PartitionFamily, Complex64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    fn prune(mut self) -> Self {
        self.terms.retain(|_, v| v.norm() > DROP);
        self
    }

    /// Largest coefficient difference.
    pub fn distance(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for k in self.terms.keys().chain(other.terms.keys()) {
            d = d.max((self.coefficient(k) - other.coefficient(k)).norm());
        }
        d
    }

    /// Re-expands every part through `P_r(src) = Σ_dst w(src, dst) P_r(dst)`.
    fn substitute(&self, kind: FamilyKind, targets: usize, w: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut out = Self::zero(kind);
        for (lam, &coeff) in &self.terms {
            let mut states: BTreeMap<Vec<Vec<usize>>, Complex64> = BTreeMap::new();
            states.insert(vec![Vec::new(); targets], coeff);
            for (src, p) in lam.iter() {
                for &r in p.parts() {
                    let mut next = BTreeMap::new();
                    for (st, v) in &states {
                        for dst in 0..targets {
                            let wt = w(src, dst);
                            if wt.norm() < DROP {
                                continue;
                            }
                            let mut s2 = st.clone();
                            s2[dst].push(r);
                            s2[dst].sort_unstable_by(|a, b| b.cmp(a));
                            *next.entry(s2).or_insert(Complex64::zero()) += v * wt;
                        }
                    }
                    states = next;
                }
            }
            for (st, v) in states {
                let fam = PartitionFamily::new(kind, st.into_iter().enumerate().map(|(i, p)| (i, Partition::new(p))));
                *out.terms.entry(fam).or_insert(Complex64::zero()) += v;
            }
        }
        out.prune()
    }

    /// `P_r(c) = Σ_γ conj(γ(c)) P_r(γ)`.
    pub fn to_character_alphabets(&self, table: &CharacterTable) -> Result<Self> {
        if self.kind != FamilyKind::Classes {
            return Err(Error::BasisMismatch);
        }
        Ok(self.substitute(FamilyKind::Characters, table.len(), |c, gam| table.value(gam, ClassId(c)).conj()))
    }

    /// `P_r(γ) = Σ_c ξ_c⁻¹ γ(c) P_r(c)`.
    pub fn to_class_alphabets(&self, g: &FiniteGroup, table: &CharacterTable) -> Result<Self> {
        if self.kind != FamilyKind::Characters {
            return Err(Error::BasisMismatch);
        }
        Ok(self.substitute(FamilyKind::Classes, g.num_classes(), |gam, c| {
            table.value(gam, ClassId(c)) / g.centralizer_order(ClassId(c)) as f64
        }))
    }
}

/// `⟨f, g⟩ = Σ_Λ f_Λ conj(g_Λ) Z_Λ` on class alphabets, and the analogous
/// product with weights `Π_γ z_{Λ(γ)}` on character alphabets.
pub fn hall_inner(f: &MultiAlphabetPowerSum, h: &MultiAlphabetPowerSum, g: &FiniteGroup) -> Result<Complex64> {
    if f.kind != h.kind {
        return Err(Error::BasisMismatch);
    }
    let mut s = Complex64::zero();
    for (lam, &a) in &f.terms {
        let b = h.coefficient(lam);
        if b == Complex64::zero() {
            continue;
        }
        let z = match f.kind {
            FamilyKind::Classes => centralizer_order(g, lam)? as f64,
            FamilyKind::Characters => lam.iter().map(|(_, p)| p.z() as f64).product(),
        };
        s += a * b.conj() * z;
    }
    Ok(s)
}

/// `η_n(γ)` at an element of type `Λ`: `Π_c γ(c)^{l(Λ(c))}`.
pub fn eta_value(gamma: usize, x_type: &PartitionFamily, table: &CharacterTable) -> Complex64 {
    x_type.iter().map(|(c, p)| table.value(gamma, ClassId(c)).powu(p.length() as u32)).product()
}

/// Character values and shifted-function evaluations for one group.
///
/// Keeps per-instance caches; create one per worker thread.
pub struct WreathCharacters<'a> {
    g: &'a FiniteGroup,
    table: &'a CharacterTable,
    x_cache: RefCell<HashMap<(PartitionFamily, PartitionFamily), Complex64>>,
    s_cache: RefCell<HashMap<(Partition, Partition), f64>>,
    f_cache: RefCell<HashMap<(PartitionFamily, PartitionFamily), Complex64>>,
}

impl<'a> WreathCharacters<'a> {
    pub fn new(g: &'a FiniteGroup, table: &'a CharacterTable) -> Self {
        WreathCharacters {
            g,
            table,
            x_cache: RefCell::default(),
            s_cache: RefCell::default(),
            f_cache: RefCell::default(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.g
    }

    pub fn table(&self) -> &CharacterTable {
        self.table
    }

    /// Irreducible labels of `G ≀ Sₙ`.
    pub fn irreducibles(&self, n: usize) -> Vec<PartitionFamily> {
        crate::family::families_of_size(FamilyKind::Characters, self.table.len(), n)
    }

    fn check_pair(&self, lam: &PartitionFamily, del: &PartitionFamily) -> Result<()> {
        if lam.kind() != FamilyKind::Characters || del.kind() != FamilyKind::Classes {
            return Err(Error::BasisMismatch);
        }
        lam.validate(self.table.len())?;
        del.validate(self.g.num_classes())?;
        if lam.size() != del.size() {
            return Err(Error::SizeMismatch { expected: lam.size(), found: del.size() });
        }
        Ok(())
    }

    /// `X^Λ_Δ = ⟨S_Λ, P_Δ⟩`: every part `(r, c)` of `Δ` is sent to an
    /// alphabet `γ` with weight `γ(c)`, and each alphabet contributes
    /// `χ^{Λ(γ)}` at the cycle type it received.
    pub fn character_value(&self, lam: &PartitionFamily, del: &PartitionFamily) -> Result<Complex64> {
        self.check_pair(lam, del)?;
        let key = (lam.clone(), del.clone());
        if let Some(&v) = self.x_cache.borrow().get(&key) {
            return Ok(v);
        }
        let h = self.table.len();
        let caps: Vec<usize> = (0..h).map(|i| lam.get(i).size()).collect();
        let mut states: BTreeMap<Vec<Vec<usize>>, Complex64> = BTreeMap::new();
        states.insert(vec![Vec::new(); h], Complex64::new(1.0, 0.0));
        let mut filled = vec![0usize; h];
        for (c, p) in del.iter() {
            for &r in p.parts() {
                let mut next: BTreeMap<Vec<Vec<usize>>, Complex64> = BTreeMap::new();
                for (st, v) in &states {
                    for gam in 0..h {
                        for (i, f) in filled.iter_mut().enumerate() {
                            *f = st[i].iter().sum();
                        }
                        if filled[gam] + r > caps[gam] {
                            continue;
                        }
                        let wt = self.table.value(gam, ClassId(c));
                        if wt == Complex64::zero() {
                            continue;
                        }
                        let mut s2 = st.clone();
                        s2[gam].push(r);
                        s2[gam].sort_unstable_by(|a, b| b.cmp(a));
                        *next.entry(s2).or_insert(Complex64::zero()) += v * wt;
                    }
                }
                states = next;
            }
        }
        let mut total = Complex64::zero();
        for (st, v) in states {
            let mut prod = v;
            for (gam, parts) in st.into_iter().enumerate() {
                prod *= mn_character(lam.get(gam), &Partition::new(parts))? as f64;
            }
            total += prod;
        }
        self.x_cache.borrow_mut().insert(key, total);
        Ok(total)
    }

    /// `dim Λ = n! Π_γ d_γ^{|Λ(γ)|} f^{Λ(γ)} / |Λ(γ)|!`.
    pub fn dimension(&self, lam: &PartitionFamily) -> Result<u64> {
        lam.validate(self.table.len())?;
        let mut num: u128 = factorial(lam.size())? as u128;
        let mut den: u128 = 1;
        for (gam, p) in lam.iter() {
            num *= (self.table.degree(gam) as u128).pow(p.size() as u32) * dim_partition(p) as u128;
            den *= factorial(p.size())? as u128;
        }
        u64::try_from(num / den).map_err(|_| Error::Overflow("dimension"))
    }

    /// `S_Λ = Σ_Γ Z_Γ⁻¹ X^Λ_Γ P_Γ` on class alphabets.
    pub fn schur_expansion(&self, lam: &PartitionFamily) -> Result<MultiAlphabetPowerSum> {
        let mut out = MultiAlphabetPowerSum::zero(FamilyKind::Classes);
        for gam in crate::family::families_of_size(FamilyKind::Classes, self.g.num_classes(), lam.size()) {
            let x = self.character_value(lam, &gam)?;
            out.add(gam.clone(), x / centralizer_order(self.g, &gam)? as f64)?;
        }
        Ok(out.prune())
    }

    fn s_sharp_f64(&self, rho: &Partition, lam: &Partition) -> f64 {
        let key = (rho.clone(), lam.clone());
        if let Some(&v) = self.s_cache.borrow().get(&key) {
            return v;
        }
        let r = s_sharp_eval(rho, lam);
        let v = *r.numer() as f64 / *r.denom() as f64;
        self.s_cache.borrow_mut().insert(key, v);
        v
    }

    /// The image of `𝐂_{Δ;∞}` evaluated at a character-indexed point `Λ`:
    ///
    /// `(|G|^{|Δ|} / Z_Δ) Σ_Σ X^Σ_Δ Π_γ d_γ^{-|Σ(γ)|} s^#_{Σ(γ)}(Λ(γ))`,
    /// the sum over `Σ ⊆ Λ` entrywise with `|Σ| = |Δ|`.
    pub fn f_image_eval(&self, del: &PartitionFamily, point: &PartitionFamily) -> Result<Complex64> {
        if del.kind() != FamilyKind::Classes || point.kind() != FamilyKind::Characters {
            return Err(Error::BasisMismatch);
        }
        del.validate(self.g.num_classes())?;
        point.validate(self.table.len())?;
        let k = del.size();
        if point.size() < k {
            return Ok(Complex64::zero());
        }
        let key = (del.clone(), point.clone());
        if let Some(&v) = self.f_cache.borrow().get(&key) {
            return Ok(v);
        }
        let scale = (self.g.order() as f64).powi(k as i32) / centralizer_order(self.g, del)? as f64;
        let mut total = Complex64::zero();
        for sigma in sub_families(point, k) {
            let mut w = 1.0;
            for (gam, s) in sigma.iter() {
                w *= self.s_sharp_f64(s, point.get(gam)) / (self.table.degree(gam) as f64).powi(s.size() as i32);
            }
            if w == 0.0 {
                continue;
            }
            total += self.character_value(&sigma, del)? * w;
        }
        total *= scale;
        self.f_cache.borrow_mut().insert(key, total);
        Ok(total)
    }

    /// Central-character route: `(|G|^{|Δ|}/Z_Δ) (|Λ|↓|Δ|) / dim Λ · X^Λ_{Δ̲}`.
    pub fn central_character_route(&self, del: &PartitionFamily, point: &PartitionFamily) -> Result<Complex64> {
        let (n, k) = (point.size(), del.size());
        if n < k {
            return Ok(Complex64::zero());
        }
        let scale = (self.g.order() as f64).powi(k as i32) / centralizer_order(self.g, del)? as f64;
        let ff = falling_factorial(n, k)? as f64;
        let x = self.character_value(point, &del.pad(n)?)?;
        Ok(x * (scale * ff / self.dimension(point)? as f64))
    }
}

/// All `Σ ⊆ Λ` (entrywise diagram containment) with `|Σ| = k`.
pub fn sub_families(lam: &PartitionFamily, k: usize) -> Vec<PartitionFamily> {
    let idx: Vec<(usize, Vec<Partition>)> = lam
        .iter()
        .map(|(i, p)| {
            let subs: Vec<Partition> =
                (0..=p.size()).flat_map(partitions_of).filter(|s| s.is_contained_in(p)).collect();
            (i, subs)
        })
        .collect();
    let mut out = Vec::new();
    fn go(
        idx: &[(usize, Vec<Partition>)],
        pos: usize,
        rem: usize,
        cur: &mut PartitionFamily,
        out: &mut Vec<PartitionFamily>,
    ) {
        if pos == idx.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let (i, subs) = &idx[pos];
        let left: usize = idx[pos + 1..].iter().map(|(_, s)| s.last().map_or(0, Partition::size)).sum();
        for s in subs {
            if s.size() > rem || rem - s.size() > left {
                continue;
            }
            cur.set(*i, s.clone());
            go(idx, pos + 1, rem - s.size(), cur, out);
        }
        cur.set(*i, Partition::empty());
    }
    go(&idx, 0, k, &mut PartitionFamily::empty(lam.kind()), &mut out);
    out
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckRecord {
    pub check: &'static str,
    pub input: serde_json::Value,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn abs_err(&self) -> f64 {
        (self.lhs - self.rhs).norm()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let c = |z: Complex64| if z.im == 0.0 { serde_json::json!(z.re) } else { serde_json::json!([z.re, z.im]) };
        serde_json::json!({
            "check": self.check,
            "input": self.input,
            "lhs": c(self.lhs),
            "rhs": c(self.rhs),
            "pass": self.pass,
            "abs_err": self.abs_err(),
        })
    }
}

/// Options for [`verify_isomorphism`].
#[derive(Clone, Debug)]
pub struct IsoCheckConfig {
    /// Largest `|Δ|` in the chain check and `|Δᵢ|` in the homomorphism check.
    pub size_cap: usize,
    /// Largest evaluation point; `None` means `|Δ₁| + |Δ₂| + 1` per pair.
    pub point_size: Option<usize>,
    /// Ceiling on the number of evaluation points per case; larger point
    /// sets are subsampled with `seed`.
    pub max_points: Option<usize>,
    pub seed: u64,
    pub tolerance: f64,
}

impl Default for IsoCheckConfig {
    fn default() -> Self {
        IsoCheckConfig { size_cap: 2, point_size: None, max_points: Some(200), seed: 0, tolerance: 1e-6 }
    }
}

impl IsoCheckConfig {
    /// Character-indexed points of size `≤ max_size`, subsampled in
    /// enumeration order when over the ceiling.
    pub fn points(&self, table_len: usize, max_size: usize) -> Vec<PartitionFamily> {
        let all = families_up_to(FamilyKind::Characters, table_len, max_size);
        match self.max_points {
            Some(m) if all.len() > m => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                let mut idx = rand::seq::index::sample(&mut rng, all.len(), m).into_vec();
                idx.sort_unstable();
                idx.into_iter().map(|i| all[i].clone()).collect()
            }
            _ => all,
        }
    }
}

/// Chain check: `f_image_eval` against the central-character route for
/// every class family `Δ` with `|Δ| ≤ size_cap` and every point.
pub fn chain_checks(chars: &WreathCharacters, cfg: &IsoCheckConfig) -> Result<Vec<CheckRecord>> {
    let g = chars.group();
    let psize = cfg.point_size.unwrap_or(cfg.size_cap + 1);
    let points = cfg.points(chars.table().len(), psize);
    let mut out = Vec::new();
    for del in families_up_to(FamilyKind::Classes, g.num_classes(), cfg.size_cap) {
        for pt in &points {
            let lhs = chars.f_image_eval(&del, pt)?;
            let rhs = chars.central_character_route(&del, pt)?;
            out.push(CheckRecord {
                check: "chain",
                input: serde_json::json!({"delta": del.to_json(), "point": pt.to_json()}),
                lhs,
                rhs,
                pass: close(lhs, rhs, cfg.tolerance),
            });
        }
    }
    Ok(out)
}

/// Homomorphism check for one pair: `Σ_Γ k^Γ F(Γ)(Λ) = F(Δ₁)(Λ) F(Δ₂)(Λ)`.
pub fn homomorphism_checks(
    chars: &WreathCharacters,
    d1: &PartitionFamily,
    d2: &PartitionFamily,
    points: &[PartitionFamily],
    tolerance: f64,
) -> Result<Vec<CheckRecord>> {
    let prod = crate::universal::product(chars.group(), d1, d2)?;
    let mut out = Vec::new();
    for pt in points {
        let mut lhs = Complex64::zero();
        for (gamma, &k) in &prod {
            lhs += chars.f_image_eval(gamma, pt)? * k as f64;
        }
        let rhs = chars.f_image_eval(d1, pt)? * chars.f_image_eval(d2, pt)?;
        out.push(CheckRecord {
            check: "homomorphism",
            input: serde_json::json!({"delta1": d1.to_json(), "delta2": d2.to_json(), "point": pt.to_json()}),
            lhs,
            rhs,
            pass: close(lhs, rhs, tolerance),
        });
    }
    Ok(out)
}

/// Exact homomorphism check for the trivial group.
pub fn homomorphism_checks_trivial(d1: &Partition, d2: &Partition, points: &[Partition]) -> Result<Vec<(Partition, Rational, Rational)>> {
    let g = FiniteGroup::trivial();
    let fam = |p: &Partition| PartitionFamily::new(FamilyKind::Classes, [(0, p.clone())]);
    let prod = crate::universal::product(&g, &fam(d1), &fam(d2))?;
    let mut out = Vec::new();
    for pt in points {
        let mut lhs = Rational::zero();
        for (gamma, &k) in &prod {
            lhs += f_image_eval_trivial(gamma.get(0), pt) * Rational::from_integer(k as i128);
        }
        let rhs = f_image_eval_trivial(d1, pt) * f_image_eval_trivial(d2, pt);
        out.push((pt.clone(), lhs, rhs));
    }
    Ok(out)
}

/// Both checks over every proper pair with `|Δᵢ| ≤ size_cap`, in a fixed
/// order. Pairs run in parallel on the current rayon pool.
pub fn verify_isomorphism(g: &FiniteGroup, table: &CharacterTable, cfg: &IsoCheckConfig) -> Result<Vec<CheckRecord>> {
    let mut out = chain_checks(&WreathCharacters::new(g, table), cfg)?;
    let proper = crate::family::proper_families_up_to(g.num_classes(), cfg.size_cap);
    let pairs: Vec<(&PartitionFamily, &PartitionFamily)> =
        proper.iter().enumerate().flat_map(|(i, a)| proper[i..].iter().map(move |b| (a, b))).collect();
    let chunks: Vec<Result<Vec<CheckRecord>>> = pairs
        .par_iter()
        .map_init(
            || WreathCharacters::new(g, table),
            |chars, &(d1, d2)| {
                let psize = cfg.point_size.unwrap_or(d1.size() + d2.size() + 1);
                homomorphism_checks(chars, d1, d2, &cfg.points(table.len(), psize), cfg.tolerance)
            },
        )
        .collect();
    for c in chunks {
        out.extend(c?);
    }
    Ok(out)
}

/// `Σ_ρ χ^ρ_δ s^#_ρ(λ)` over `ρ ⊢ |δ|`.
pub fn p_sharp_via_schur(delta: &Partition, lambda: &Partition) -> Rational {
    partitions_of(delta.size())
        .iter()
        .map(|rho| s_sharp_eval(rho, lambda) * Rational::from_integer(mn_character(rho, delta).unwrap() as i128))
        .sum()
}

impl One for MultiAlphabetPowerSum {
    fn one() -> Self {
        Self::monomial(PartitionFamily::empty(FamilyKind::Classes))
    }
}

impl std::ops::Mul for MultiAlphabetPowerSum {
    type Output = Self;
    /// Product of power sums: families multiply by entrywise union.
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.kind, rhs.kind, "alphabet kinds differ");
        let mut out = Self::zero(self.kind);
        for (a, &x) in &self.terms {
            for (b, &y) in &rhs.terms {
                *out.terms.entry(a.union(b)).or_insert(Complex64::zero()) += x * y;
            }
        }
        out.prune()
    }
}
