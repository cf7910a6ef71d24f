//! Class sums `𝐂_Λ` of `Z(ℂ[G ≀ Sₙ])` and their structure coefficients
//! `c_{ΛΔ}^Γ`, obtained by exact counting.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::family::PartitionFamily;
use crate::group::FiniteGroup;
use crate::wreath::{
    canonical_representative, class_order, enumerate_class, family_key, inverse_into, key_family, mul_into,
    type_key_into, Scratch, TypeKey,
};

/// Default ceiling on the size of a streamed conjugacy class.
pub const DEFAULT_CLASS_CAP: u64 = 5_000_000;

/// Sparse combination of class sums, keyed by type; zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraVector {
    terms: BTreeMap<PartitionFamily, u64>,
}

impl AlgebraVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(lam: PartitionFamily) -> Self {
        let mut v = Self::zero();
        v.terms.insert(lam, 1);
        v
    }

    pub fn get(&self, lam: &PartitionFamily) -> u64 {
        self.terms.get(lam).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PartitionFamily, u64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, lam: &PartitionFamily, c: u64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(lam.clone()).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow("algebra coefficient"))?;
        Ok(())
    }

    /// `Σ_Γ c_Γ |C_Γ|`, the number of group elements counted with multiplicity.
    pub fn mass(&self, g: &FiniteGroup) -> Result<u128> {
        let mut m: u128 = 0;
        for (lam, &c) in &self.terms {
            m += c as u128 * class_order(g, lam)?.1 as u128;
        }
        Ok(m)
    }

    /// `{"terms": [{"gamma": ..., "coeff": ...}], "mass": ...}`.
    pub fn to_json(&self, g: &FiniteGroup) -> Result<serde_json::Value> {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, &v)| serde_json::json!({"gamma": k.to_json(), "coeff": v}))
            .collect();
        Ok(serde_json::json!({"terms": terms, "mass": self.mass(g)?.to_string()}))
    }
}

/// `Z(ℂ[G ≀ Sₙ])` for fixed `G` and `n`.
#[derive(Clone, Debug)]
pub struct CenterAlgebra<'g> {
    g: &'g FiniteGroup,
    n: usize,
    cap: u64,
}

impl<'g> CenterAlgebra<'g> {
    pub fn new(g: &'g FiniteGroup, n: usize) -> Self {
        CenterAlgebra { g, n, cap: DEFAULT_CLASS_CAP }
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn group(&self) -> &FiniteGroup {
        self.g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, lam: &PartitionFamily) -> Result<u64> {
        lam.validate(self.g.num_classes())?;
        if lam.size() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: lam.size() });
        }
        Ok(class_order(self.g, lam)?.1)
    }

    fn check_cap(&self, size: u64) -> Result<()> {
        if size > self.cap {
            Err(Error::CapExceeded { size, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// `c_{ΛΔ}^Γ`: with `z` the canonical member of `C_Γ`, the number of
    /// `x ∈ C_Λ` such that `x⁻¹z` has type `Δ` (equivalently of `y ∈ C_Δ`
    /// with `zy⁻¹` of type `Λ`), streaming the smaller class.
    pub fn c_coeff(&self, lam: &PartitionFamily, del: &PartitionFamily, gamma: &PartitionFamily) -> Result<u64> {
        let (sl, sd) = (self.check(lam)?, self.check(del)?);
        self.check(gamma)?;
        let z = canonical_representative(self.g, gamma, self.n)?;
        self.c_coeff_with(lam, del, &z, sl, sd)
    }

    /// As [`Self::c_coeff`] with an arbitrary member `z` of `C_Γ`.
    pub fn c_coeff_at(&self, lam: &PartitionFamily, del: &PartitionFamily, z: &crate::WreathElement) -> Result<u64> {
        let (sl, sd) = (self.check(lam)?, self.check(del)?);
        if z.n() != self.n {
            return Err(Error::SizeMismatch { expected: self.n, found: z.n() });
        }
        self.c_coeff_with(lam, del, z, sl, sd)
    }

    fn c_coeff_with(
        &self,
        lam: &PartitionFamily,
        del: &PartitionFamily,
        z: &crate::WreathElement,
        sl: u64,
        sd: u64,
    ) -> Result<u64> {
        let g = self.g;
        let n = self.n;
        let (stream, target, stream_lam) = if sl <= sd { (lam, del, true) } else { (del, lam, false) };
        self.check_cap(sl.min(sd))?;
        let want = family_key(target);
        let mut inv_l = vec![0; n];
        let mut inv_p = vec![0; n];
        let mut out_l = vec![0; n];
        let mut out_p = vec![0; n];
        let mut scratch = Scratch::default();
        let mut count = 0u64;
        enumerate_class(g, stream, n, |x| {
            inverse_into(g, (x.labels(), x.perm()), &mut inv_l, &mut inv_p);
            if stream_lam {
                mul_into(g, (&inv_l, &inv_p), (z.labels(), z.perm()), &mut out_l, &mut out_p);
            } else {
                mul_into(g, (z.labels(), z.perm()), (&inv_l, &inv_p), &mut out_l, &mut out_p);
            }
            type_key_into(g, &out_l, &out_p, &mut scratch);
            if scratch.key == want {
                count += 1;
            }
        })?;
        Ok(count)
    }

    /// Full expansion `𝐂_Λ 𝐂_Δ = Σ_Γ c_{ΛΔ}^Γ 𝐂_Γ`.
    ///
    /// One factor is fixed at its canonical member `x₀` and the other class
    /// is streamed, tallying the types of the products; conjugation
    /// invariance gives `c^Γ = |C_fixed| · tally_Γ / |C_Γ|`.
    pub fn product(&self, lam: &PartitionFamily, del: &PartitionFamily) -> Result<AlgebraVector> {
        let (sl, sd) = (self.check(lam)?, self.check(del)?);
        let g = self.g;
        let n = self.n;
        let stream_del = sd <= sl;
        let (fixed, stream, fixed_size) = if stream_del { (lam, del, sl) } else { (del, lam, sd) };
        self.check_cap(sl.min(sd))?;
        let x0 = canonical_representative(g, fixed, n)?;
        let mut out_l = vec![0; n];
        let mut out_p = vec![0; n];
        let mut scratch = Scratch::default();
        let mut tally: HashMap<TypeKey, u64> = HashMap::new();
        enumerate_class(g, stream, n, |y| {
            if stream_del {
                mul_into(g, (x0.labels(), x0.perm()), (y.labels(), y.perm()), &mut out_l, &mut out_p);
            } else {
                mul_into(g, (y.labels(), y.perm()), (x0.labels(), x0.perm()), &mut out_l, &mut out_p);
            }
            type_key_into(g, &out_l, &out_p, &mut scratch);
            *tally.entry(scratch.key.clone()).or_insert(0) += 1;
        })?;
        let mut v = AlgebraVector::zero();
        for (key, t) in tally {
            let gamma = key_family(&key);
            let size = class_order(g, &gamma)?.1;
            let num = fixed_size as u128 * t as u128;
            assert_eq!(num % size as u128, 0, "non-integral structure coefficient for {gamma}");
            let c = u64::try_from(num / size as u128).map_err(|_| Error::Overflow("structure coefficient"))?;
            v.add_scaled(&gamma, c)?;
        }
        Ok(v)
    }

    /// Bilinear extension of [`Self::product`].
    pub fn mul_vectors(&self, a: &AlgebraVector, b: &AlgebraVector) -> Result<AlgebraVector> {
        let mut out = AlgebraVector::zero();
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                let cxy = cx.checked_mul(cy).ok_or(Error::Overflow("algebra coefficient"))?;
                for (z, c) in self.product(x, y)?.iter() {
                    out.add_scaled(z, c.checked_mul(cxy).ok_or(Error::Overflow("algebra coefficient"))?)?;
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{families_of_size, FamilyKind};
    use crate::wreath::class_elements;

    fn fam(e: &[(usize, &[usize])]) -> PartitionFamily {
        PartitionFamily::classes(e.iter().map(|(c, p)| (*c, p.to_vec())))
    }

    /// Brute-force class-sum product over the whole group.
    fn brute_product(g: &FiniteGroup, n: usize, lam: &PartitionFamily, del: &PartitionFamily) -> AlgebraVector {
        let xs = class_elements(g, lam, n).unwrap();
        let ys = class_elements(g, del, n).unwrap();
        let mut mass: BTreeMap<PartitionFamily, u64> = BTreeMap::new();
        for x in &xs {
            for y in &ys {
                *mass.entry(x.multiply(g, y).unwrap().type_of(g)).or_insert(0) += 1;
            }
        }
        let mut v = AlgebraVector::zero();
        for (gamma, m) in mass {
            let size = class_order(g, &gamma).unwrap().1;
            assert_eq!(m % size, 0);
            v.add_scaled(&gamma, m / size).unwrap();
        }
        v
    }

    #[test]
    fn products_match_brute_force() {
        for spec in ["trivial", "cyclic:2", "cyclic:3", "sym:3"] {
            let g = FiniteGroup::from_spec(spec).unwrap();
            let nmax = if g.order() > 3 { 2 } else { 3 };
            for n in 1..=nmax {
                let fams = families_of_size(FamilyKind::Classes, g.num_classes(), n);
                let alg = CenterAlgebra::new(&g, n);
                for lam in &fams {
                    for del in &fams {
                        let v = alg.product(lam, del).unwrap();
                        assert_eq!(v, brute_product(&g, n, lam, del), "{spec} n={n} {lam} * {del}");
                        for gamma in &fams {
                            assert_eq!(alg.c_coeff(lam, del, gamma).unwrap(), v.get(gamma));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn identity_and_mass() {
        let g = FiniteGroup::cyclic(3);
        let n = 3;
        let alg = CenterAlgebra::new(&g, n);
        let id = fam(&[(0, &[1, 1, 1])]);
        for lam in families_of_size(FamilyKind::Classes, 3, n) {
            assert_eq!(alg.product(&id, &lam).unwrap(), AlgebraVector::basis(lam.clone()));
            for del in families_of_size(FamilyKind::Classes, 3, n) {
                let v = alg.product(&lam, &del).unwrap();
                let expect = class_order(&g, &lam).unwrap().1 as u128 * class_order(&g, &del).unwrap().1 as u128;
                assert_eq!(v.mass(&g).unwrap(), expect);
                assert_eq!(v, alg.product(&del, &lam).unwrap());
            }
        }
    }

    #[test]
    fn identity_coefficient_counts_inverse_pairs() {
        // ℤ₃: the inverse of a class-1 cycle product lies in class 2.
        let g = FiniteGroup::cyclic(3);
        for n in 2..=4 {
            let alg = CenterAlgebra::new(&g, n);
            let a = fam(&[(1, &[1])]).pad(n).unwrap();
            let b = fam(&[(2, &[1])]).pad(n).unwrap();
            let id = PartitionFamily::empty(FamilyKind::Classes).pad(n).unwrap();
            assert_eq!(alg.c_coeff(&a, &b, &id).unwrap(), n as u64);
            assert_eq!(alg.c_coeff(&a, &a, &id).unwrap(), 0);
        }
    }

    #[test]
    fn representative_independence() {
        let g = FiniteGroup::from_spec("sym:3").unwrap();
        let n = 2;
        let alg = CenterAlgebra::new(&g, n);
        let fams = families_of_size(FamilyKind::Classes, 3, n);
        for gamma in &fams {
            let members = class_elements(&g, gamma, n).unwrap();
            for lam in &fams {
                for del in &fams {
                    let base = alg.c_coeff(lam, del, gamma).unwrap();
                    for z in members.iter().step_by(members.len().div_ceil(3).max(1)) {
                        assert_eq!(alg.c_coeff_at(lam, del, z).unwrap(), base);
                    }
                }
            }
        }
    }

    #[test]
    fn cap_and_size_errors() {
        let g = FiniteGroup::cyclic(2);
        let alg = CenterAlgebra::new(&g, 3).with_cap(2);
        let lam = fam(&[(0, &[2, 1])]);
        assert!(matches!(alg.product(&lam, &lam), Err(Error::CapExceeded { .. })));
        assert!(matches!(alg.product(&fam(&[(0, &[2])]), &lam), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn associativity_on_samples() {
        let g = FiniteGroup::cyclic(2);
        let n = 3;
        let alg = CenterAlgebra::new(&g, n);
        let fams = families_of_size(FamilyKind::Classes, 2, n);
        for a in fams.iter().step_by(3) {
            for b in fams.iter().step_by(2) {
                for c in fams.iter().step_by(4) {
                    let (va, vb, vc) = (AlgebraVector::basis(a.clone()), AlgebraVector::basis(b.clone()), AlgebraVector::basis(c.clone()));
                    let l = alg.mul_vectors(&alg.mul_vectors(&va, &vb).unwrap(), &vc).unwrap();
                    let r = alg.mul_vectors(&va, &alg.mul_vectors(&vb, &vc).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }
}
