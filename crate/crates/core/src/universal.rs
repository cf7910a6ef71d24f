//! The `n`-independent coefficients `k_{ΛΔ}^Γ` of the algebra of invariant
//! `G`-partial permutations, computed in the truncation `n* = |Λ| + |Δ|`,
//! and the resulting polynomial `c_{ΛΔ}^Γ(n)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::center::CenterAlgebra;
use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::family::{FamilyKind, PartitionFamily};
use crate::group::{Elem, FiniteGroup};
use crate::partial::{canonical_partial, class_size_partial, for_each_partial_raw, PartialCombination};
use crate::wreath::{inverse_into, key_family, mul_into, type_key_into, Scratch, TypeKey};

/// Oracle guardrail on `|Λ| + |Δ|`.
pub const ORACLE_MAX_SIZE: usize = 5;
/// Oracle guardrail on `|G|`.
pub const ORACLE_MAX_ORDER: usize = 3;

/// `Γ^j`: `Γ` with `j` extra parts equal to 1 at the identity class.
pub fn gamma_j(gamma: &PartitionFamily, j: usize) -> PartitionFamily {
    gamma.add_identity_ones(j)
}

/// Whether `Γ` lies in the window `max(|Λ|,|Δ|) ≤ |Γ| ≤ |Λ|+|Δ|`.
pub fn in_window(lam: &PartitionFamily, del: &PartitionFamily, gamma: &PartitionFamily) -> bool {
    let (a, b, c) = (lam.size(), del.size(), gamma.size());
    a.max(b) <= c && c <= a + b
}

fn check_classes(g: &FiniteGroup, fams: &[&PartitionFamily]) -> Result<()> {
    for f in fams {
        if f.kind() != FamilyKind::Classes {
            return Err(Error::BasisMismatch);
        }
        f.validate(g.num_classes())?;
    }
    Ok(())
}

/// `k_{ΛΔ}^Γ` by counting pairs `(x, y)` of the truncation `n*` with `xy = z`
/// for `z` the canonical member of `C_{Γ;n*}` supported on `[m]`, `m = |Γ|`.
///
/// Every `x` of type `Λ` with support in `[m]` determines
/// `ỹ = x̃⁻¹ z̃` in `G ≀ S_m`. Let `s` be the points `ỹ` moves or labels
/// non-trivially. A valid `y` is `ỹ` restricted to a support `d_y` with
/// `s ∪ ([m] ∖ d_x) ⊆ d_y` and `|d_y| = |Δ|`, whose type is the type of `ỹ`
/// on `s` plus `|Δ| - |s|` trivially labelled fixed points.
pub fn k_coeff(g: &FiniteGroup, lam: &PartitionFamily, del: &PartitionFamily, gamma: &PartitionFamily) -> Result<u64> {
    check_classes(g, &[lam, del, gamma])?;
    if !in_window(lam, del, gamma) {
        return Ok(0);
    }
    let m = gamma.size();
    let dsize = del.size();
    let z = canonical_partial(g, gamma)?.psi(m)?;
    // Δ with its identity-class 1-parts removed, and how many there were.
    let del_core = crate::wreath::family_key(&del.properize());
    let del_ones = del.identity_ones();

    let mut inv_l = vec![0; m];
    let mut inv_p = vec![0; m];
    let mut yl: Vec<Elem> = vec![0; m];
    let mut yp = vec![0; m];
    let mut scratch = Scratch::default();
    let mut in_dx = vec![false; m];
    let mut total: u64 = 0;
    let mut err = None;
    for_each_partial_raw(g, lam, m, None, &mut |support, labels, perm| {
        inverse_into(g, (labels, perm), &mut inv_l, &mut inv_p);
        mul_into(g, (&inv_l, &inv_p), (z.labels(), z.perm()), &mut yl, &mut yp);
        // Type of ỹ with its trivial fixed points dropped.
        type_key_into(g, &yl, &yp, &mut scratch);
        let core: TypeKey = scratch.key.iter().copied().filter(|&(c, r)| !(c == 0 && r == 1)).collect();
        if core != del_core {
            return;
        }
        let s_size: usize = core.iter().map(|&(_, r)| r as usize).sum();
        if s_size > dsize || dsize - s_size != del_ones {
            return;
        }
        for f in in_dx.iter_mut() {
            *f = false;
        }
        for &p in support {
            in_dx[p] = true;
        }
        // R = s ∪ ([m] ∖ d_x); free points are d_x ∖ s.
        let mut r_size = 0;
        let mut free = 0;
        for p in 0..m {
            let in_s = yp[p] != p || yl[p] != 0;
            if in_s || !in_dx[p] {
                r_size += 1;
            } else {
                free += 1;
            }
        }
        if r_size > dsize {
            return;
        }
        match binomial(free, dsize - r_size).and_then(|b| total.checked_add(b).ok_or(Error::Overflow("k coefficient"))) {
            Ok(t) => total = t,
            Err(e) => err = Some(e),
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// All nonzero `k_{ΛΔ}^Γ` at once.
///
/// Fixes `x₀`, the canonical member of `C_{Λ;n*}`, streams `y ∈ C_{Δ;n*}`
/// and tallies the type of `x₀y`; then
/// `k^Γ = |C_{Λ;n*}| · tally_Γ / |C_{Γ;n*}|`.
pub fn product(g: &FiniteGroup, lam: &PartitionFamily, del: &PartitionFamily) -> Result<BTreeMap<PartitionFamily, u64>> {
    check_classes(g, &[lam, del])?;
    let n = lam.size() + del.size();
    let x0 = canonical_partial(g, lam)?.psi(n)?;
    let x0_support = lam.size();
    let mut ol = vec![0; n];
    let mut op = vec![0; n];
    let mut scratch = Scratch::default();
    let mut tally: HashMap<TypeKey, u64> = HashMap::new();
    for_each_partial_raw(g, del, n, None, &mut |support, labels, perm| {
        mul_into(g, (x0.labels(), x0.perm()), (labels, perm), &mut ol, &mut op);
        type_key_into(g, &ol, &op, &mut scratch);
        // Points outside d_x ∪ d_y are trivial fixed points of the product.
        let union = x0_support + support.iter().filter(|&&p| p >= x0_support).count();
        let mut drop = n - union;
        let mut key: TypeKey = Vec::with_capacity(scratch.key.len());
        for &(c, r) in scratch.key.iter().rev() {
            if drop > 0 && c == 0 && r == 1 {
                drop -= 1;
            } else {
                key.push((c, r));
            }
        }
        key.reverse();
        *tally.entry(key).or_insert(0) += 1;
    })?;
    let lam_size = class_size_partial(g, lam, n)?;
    let mut out = BTreeMap::new();
    for (key, t) in tally {
        let gamma = key_family(&key);
        let size = class_size_partial(g, &gamma, n)?;
        let num = lam_size as u128 * t as u128;
        assert_eq!(num % size as u128, 0, "non-integral universal coefficient for {gamma}");
        out.insert(gamma, u64::try_from(num / size as u128).map_err(|_| Error::Overflow("k coefficient"))?);
    }
    Ok(out)
}

fn oracle_guard(g: &FiniteGroup, lam: &PartitionFamily, del: &PartitionFamily, extra: usize) -> Result<usize> {
    let n = lam.size() + del.size();
    if n > ORACLE_MAX_SIZE || g.order() > ORACLE_MAX_ORDER {
        return Err(Error::GuardrailExceeded(format!(
            "oracle needs |Λ|+|Δ| ≤ {ORACLE_MAX_SIZE} and |G| ≤ {ORACLE_MAX_ORDER}, got {n} and {}",
            g.order()
        )));
    }
    Ok(n + extra)
}

/// Full expansion of `𝐂_{Λ;N} 𝐂_{Δ;N}` in the semigroup algebra, with
/// `N = |Λ| + |Δ| + extra`.
pub fn oracle_expansion(
    g: &FiniteGroup,
    lam: &PartitionFamily,
    del: &PartitionFamily,
    extra: usize,
) -> Result<PartialCombination> {
    check_classes(g, &[lam, del])?;
    let n = oracle_guard(g, lam, del, extra)?;
    let a = PartialCombination::class_sum(g, lam, n)?;
    let b = PartialCombination::class_sum(g, del, n)?;
    a.mul(g, &b)
}

/// `k_{ΛΔ}^Γ` read off the full expansion at a member of `C_{Γ;n*}`.
pub fn k_coeff_oracle(g: &FiniteGroup, lam: &PartitionFamily, del: &PartitionFamily, gamma: &PartitionFamily) -> Result<u64> {
    check_classes(g, &[gamma])?;
    let prod = oracle_expansion(g, lam, del, 0)?;
    if gamma.size() > lam.size() + del.size() {
        return Ok(0);
    }
    Ok(prod.coefficient(&canonical_partial(g, gamma)?) as u64)
}

/// Every type's coefficient in the oracle expansion, each read at the
/// canonical member of its class.
pub fn oracle_product(
    g: &FiniteGroup,
    lam: &PartitionFamily,
    del: &PartitionFamily,
    extra: usize,
) -> Result<BTreeMap<PartitionFamily, u64>> {
    let prod = oracle_expansion(g, lam, del, extra)?;
    let mut out = BTreeMap::new();
    for gamma in prod.mass_by_type(g).into_keys() {
        let c = prod.coefficient(&canonical_partial(g, &gamma)?);
        if c != 0 {
            out.insert(gamma, c as u64);
        }
    }
    Ok(out)
}

/// `c(n) = Σ_j k_j binom(n − |Γ|, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialInN {
    gamma: PartitionFamily,
    binomial: Vec<u64>,
}

impl PolynomialInN {
    pub fn new(gamma: PartitionFamily, mut binomial: Vec<u64>) -> Self {
        while binomial.last() == Some(&0) {
            binomial.pop();
        }
        PolynomialInN { gamma, binomial }
    }

    pub fn gamma(&self) -> &PartitionFamily {
        &self.gamma
    }

    pub fn base_size(&self) -> usize {
        self.gamma.size()
    }

    /// `k_j` for `j = 0, 1, ...`; trailing zeros trimmed.
    pub fn binomial_coeffs(&self) -> &[u64] {
        &self.binomial
    }

    pub fn is_zero(&self) -> bool {
        self.binomial.is_empty()
    }

    /// `max{ j : k_j ≠ 0 }`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.binomial.len().checked_sub(1)
    }

    /// Value at `n ≥ |Γ|`.
    pub fn eval(&self, n: usize) -> Result<u128> {
        let b = self.base_size();
        if n < b {
            return Err(Error::PadTooSmall { size: b, n });
        }
        let mut v: u128 = 0;
        for (j, &k) in self.binomial.iter().enumerate() {
            v += k as u128 * binomial(n - b, j)? as u128;
        }
        Ok(v)
    }

    /// Coefficients of `1, n, n², ...` as exact rationals.
    pub fn monomial(&self) -> Vec<Ratio<i128>> {
        let b = self.base_size() as i128;
        let mut out: Vec<Ratio<i128>> = vec![Ratio::zero(); self.binomial.len()];
        for (j, &k) in self.binomial.iter().enumerate() {
            if k == 0 {
                continue;
            }
            // binom(n - b, j) = Π_{i<j} (n - b - i) / j!
            let mut poly: Vec<Ratio<i128>> = vec![Ratio::one()];
            for i in 0..j as i128 {
                let mut next = vec![Ratio::zero(); poly.len() + 1];
                for (d, c) in poly.iter().enumerate() {
                    next[d + 1] += *c;
                    next[d] -= *c * Ratio::from_integer(b + i);
                }
                poly = next;
            }
            let fact: i128 = (1..=j as i128).product();
            for (d, c) in poly.into_iter().enumerate() {
                out[d] += c * Ratio::new(k as i128, fact);
            }
        }
        while out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    /// Human-readable monomial form, e.g. `3/2 n^2 - 1/2 n + 1`.
    pub fn monomial_string(&self) -> String {
        let m = self.monomial();
        if m.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (d, c) in m.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Ratio::zero();
            let a = if neg { -*c } else { *c };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coeff = if a.is_integer() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
            match d {
                0 => s.push_str(&coeff),
                _ => {
                    if !a.is_one() {
                        s.push_str(&coeff);
                        s.push(' ');
                    }
                    s.push('n');
                    if d > 1 {
                        let _ = write!(s, "^{d}");
                    }
                }
            }
        }
        s
    }

    /// LaTeX of the binomial form.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let b = self.base_size();
        let top = if b == 0 { "n".to_string() } else { format!("n-{b}") };
        let mut terms = Vec::new();
        for (j, &k) in self.binomial.iter().enumerate() {
            if k == 0 {
                continue;
            }
            terms.push(match (j, k) {
                (0, _) => k.to_string(),
                (_, 1) => format!("\\binom{{{top}}}{{{j}}}"),
                _ => format!("{k}\\binom{{{top}}}{{{j}}}"),
            });
        }
        terms.join(" + ")
    }

    /// `{"gamma", "binomial", "monomial", "degree", "latex", "display"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let binom: serde_json::Map<String, serde_json::Value> =
            self.binomial.iter().enumerate().map(|(j, k)| (j.to_string(), serde_json::json!(k))).collect();
        let mono: Vec<[String; 2]> = self.monomial().iter().map(|c| [c.numer().to_string(), c.denom().to_string()]).collect();
        serde_json::json!({
            "gamma": self.gamma.to_json(),
            "binomial": binom,
            "monomial": mono,
            "degree": self.degree(),
            "latex": self.latex(),
            "display": self.monomial_string(),
        })
    }
}

fn require_proper(which: &str, f: &PartitionFamily) -> Result<()> {
    if f.is_proper() {
        Ok(())
    } else {
        Err(Error::NotProper { which: format!("{which} = {f}") })
    }
}

/// `c_{ΛΔ}^Γ(n)` for proper `Λ, Δ, Γ`, from `k_j = k_{ΛΔ}^{Γ^j}`.
pub fn structure_polynomial(
    g: &FiniteGroup,
    lam: &PartitionFamily,
    del: &PartitionFamily,
    gamma: &PartitionFamily,
) -> Result<PolynomialInN> {
    require_proper("Λ", lam)?;
    require_proper("Δ", del)?;
    require_proper("Γ", gamma)?;
    let top = (lam.size() + del.size()).saturating_sub(gamma.size());
    let mut coeffs = Vec::new();
    if gamma.size() <= lam.size() + del.size() {
        for j in 0..=top {
            coeffs.push(k_coeff(g, lam, del, &gamma_j(gamma, j))?);
        }
    }
    Ok(PolynomialInN::new(gamma.clone(), coeffs))
}

/// Every nonzero polynomial `c_{ΛΔ}^Γ(n)` with `Γ` proper, from one product.
pub fn structure_polynomials(
    g: &FiniteGroup,
    lam: &PartitionFamily,
    del: &PartitionFamily,
) -> Result<BTreeMap<PartitionFamily, PolynomialInN>> {
    require_proper("Λ", lam)?;
    require_proper("Δ", del)?;
    let mut grouped: BTreeMap<PartitionFamily, Vec<u64>> = BTreeMap::new();
    for (gamma, k) in product(g, lam, del)? {
        let j = gamma.identity_ones();
        let slot = grouped.entry(gamma.properize()).or_default();
        if slot.len() <= j {
            slot.resize(j + 1, 0);
        }
        slot[j] = k;
    }
    Ok(grouped.into_iter().map(|(gm, c)| (gm.clone(), PolynomialInN::new(gm, c))).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialityRow {
    pub n: usize,
    pub predicted: u128,
    pub direct: u64,
}

impl PolynomialityRow {
    pub fn matches(&self) -> bool {
        self.predicted == self.direct as u128
    }
}

/// Compares the polynomial against direct center computations at each `n`.
pub fn verify_polynomiality(
    g: &FiniteGroup,
    lam: &PartitionFamily,
    del: &PartitionFamily,
    gamma: &PartitionFamily,
    ns: impl IntoIterator<Item = usize>,
    cap: u64,
) -> Result<Vec<PolynomialityRow>> {
    let poly = structure_polynomial(g, lam, del, gamma)?;
    let lo = lam.size().max(del.size()).max(gamma.size());
    let mut rows = Vec::new();
    for n in ns {
        if n < lo {
            continue;
        }
        let alg = CenterAlgebra::new(g, n).with_cap(cap);
        let direct = alg.c_coeff(&lam.pad(n)?, &del.pad(n)?, &gamma.pad(n)?)?;
        rows.push(PolynomialityRow { n, predicted: poly.eval(n)?, direct });
    }
    Ok(rows)
}
