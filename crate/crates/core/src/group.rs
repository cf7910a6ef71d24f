//! Finite groups given by a full multiplication table.
//!
//! Element ids are `0..order`, with the identity always relabeled to `0`.
//! Conjugacy classes are stored in the canonical order: ascending class
//! size, ties broken by ascending minimal member.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element id of a finite group.
pub type Elem = usize;

/// Default ceiling on `|G|` accepted by [`FiniteGroup::from_table`].
pub const DEFAULT_MAX_ORDER: usize = 24;

/// Index into the canonical conjugacy-class list. Class 0 is `{1_G}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassId(pub usize);

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Elem>,
    inv: Vec<Elem>,
    classes: Vec<Vec<Elem>>,
    class_of: Vec<ClassId>,
}

/// Built-in group families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinGroup {
    Trivial,
    /// `ℤ_k`, element `i` is the residue `i`.
    Cyclic(usize),
    /// `S_k` for `k ≤ 4`. Elements are the permutations of `0..k` in
    /// lexicographic order of their one-line notation; `a*b` applies `a` first.
    Symmetric(usize),
    /// Dihedral group of order `2k`; element `a + k*b` is `r^a s^b`.
    Dihedral(usize),
}

impl std::str::FromStr for BuiltinGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unsupported = || Error::UnsupportedSpec(s.to_string());
        let s_trim = s.trim();
        if s_trim == "trivial" {
            return Ok(BuiltinGroup::Trivial);
        }
        let (family, arg) = s_trim.split_once(':').ok_or_else(unsupported)?;
        let k: usize = arg.trim().parse().map_err(|_| unsupported())?;
        let g = match family.trim() {
            "cyclic" | "Z" => BuiltinGroup::Cyclic(k),
            "sym" | "symmetric" | "S" => BuiltinGroup::Symmetric(k),
            "dihedral" | "D" => BuiltinGroup::Dihedral(k),
            _ => return Err(unsupported()),
        };
        Ok(g)
    }
}

impl FiniteGroup {
    /// Validates a square multiplication table `table[i][j] = i*j`.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        Self::from_table_with_max(table, DEFAULT_MAX_ORDER)
    }

    pub fn from_table_with_max(table: &[Vec<usize>], max_order: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedTable("table is empty".into()));
        }
        if n > max_order {
            return Err(Error::GroupTooLarge { order: n, max: max_order });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some((j, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(Error::MalformedTable(format!(
                    "cell [{i}][{j}] = {v} is out of range 0..{n}"
                )));
            }
        }
        for a in 0..n {
            let mut row_seen = vec![None; n];
            let mut col_seen = vec![None; n];
            for b in 0..n {
                let v = table[a][b];
                if let Some(first) = row_seen[v] {
                    return Err(Error::NotBijectiveRow { axis: "row", line: a, first, second: b, value: v });
                }
                row_seen[v] = Some(b);
                let w = table[b][a];
                if let Some(first) = col_seen[w] {
                    return Err(Error::NotBijectiveRow { axis: "column", line: a, first, second: b, value: w });
                }
                col_seen[w] = Some(b);
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(Error::NoIdentity)?;
        // Swap ids e <-> 0.
        let relabel = |x: usize| if x == e { 0 } else if x == 0 { e } else { x };
        let mut flat = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = flat[x * n + y];
                for z in 0..n {
                    if flat[xy * n + z] != flat[x * n + flat[y * n + z]] {
                        return Err(Error::NotAssociative { x: relabel(x), y: relabel(y), z: relabel(z) });
                    }
                }
            }
        }
        Ok(Self::from_flat(n, flat))
    }

    /// Assumes a valid group table with identity 0.
    fn from_flat(order: usize, table: Vec<Elem>) -> Self {
        let inv: Vec<Elem> = (0..order)
            .map(|x| (0..order).find(|&y| table[x * order + y] == 0).unwrap())
            .collect();
        let mut assigned = vec![false; order];
        let mut classes = Vec::new();
        for x in 0..order {
            if assigned[x] {
                continue;
            }
            let mut class: Vec<Elem> = (0..order)
                .map(|g| table[table[g * order + x] * order + inv[g]])
                .collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                assigned[y] = true;
            }
            classes.push(class);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        let mut class_of = vec![ClassId(0); order];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = ClassId(i);
            }
        }
        FiniteGroup { order, table, inv, classes, class_of }
    }

    pub fn builtin(spec: BuiltinGroup) -> Result<Self> {
        let bad = |msg: &str| Error::UnsupportedSpec(msg.to_string());
        match spec {
            BuiltinGroup::Trivial => Ok(Self::from_flat(1, vec![0])),
            BuiltinGroup::Cyclic(k) => {
                if k == 0 || k > DEFAULT_MAX_ORDER {
                    return Err(bad(&format!("cyclic:{k} needs 1 <= k <= {DEFAULT_MAX_ORDER}")));
                }
                let table = (0..k * k).map(|ij| (ij / k + ij % k) % k).collect();
                Ok(Self::from_flat(k, table))
            }
            BuiltinGroup::Symmetric(k) => {
                if k == 0 || k > 4 {
                    return Err(bad(&format!("sym:{k} needs 1 <= k <= 4")));
                }
                let perms = permutations_lex(k);
                let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
                let n = perms.len();
                let mut table = vec![0; n * n];
                for (a, pa) in perms.iter().enumerate() {
                    for (b, pb) in perms.iter().enumerate() {
                        let prod: Vec<usize> = (0..k).map(|x| pb[pa[x]]).collect();
                        table[a * n + b] = index(&prod);
                    }
                }
                Ok(Self::from_flat(n, table))
            }
            BuiltinGroup::Dihedral(k) => {
                if k == 0 || 2 * k > DEFAULT_MAX_ORDER {
                    return Err(bad(&format!("dihedral:{k} needs 1 <= 2k <= {DEFAULT_MAX_ORDER}")));
                }
                let n = 2 * k;
                let mut table = vec![0; n * n];
                for x in 0..n {
                    let (a, b) = (x % k, x / k);
                    for y in 0..n {
                        let (c, d) = (y % k, y / k);
                        // r^a s^b r^c s^d = r^{a ± c} s^{b+d}
                        let rot = if b == 0 { (a + c) % k } else { (a + k - c) % k };
                        table[x * n + y] = rot + k * ((b + d) % 2);
                    }
                }
                Ok(Self::from_flat(n, table))
            }
        }
    }

    /// Parses `trivial`, `cyclic:k`, `sym:k` or `dihedral:k`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        Self::builtin(spec.parse()?)
    }

    pub fn trivial() -> Self {
        Self::builtin(BuiltinGroup::Trivial).unwrap()
    }

    pub fn cyclic(k: usize) -> Self {
        Self::builtin(BuiltinGroup::Cyclic(k)).expect("cyclic group order out of range")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    pub fn table(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn conjugacy_classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn class_of(&self, x: Elem) -> ClassId {
        self.class_of[x]
    }

    pub fn class_size(&self, c: ClassId) -> usize {
        self.classes[c.0].len()
    }

    /// Smallest element id in class `c`.
    pub fn class_min(&self, c: ClassId) -> Elem {
        self.classes[c.0][0]
    }

    /// `ξ_c = |G| / |c|`, the centralizer order of any member of `c`.
    pub fn centralizer_order(&self, c: ClassId) -> usize {
        self.order / self.class_size(c)
    }

    pub fn check_class(&self, c: usize) -> Result<ClassId> {
        if c < self.num_classes() {
            Ok(ClassId(c))
        } else {
            Err(Error::IndexOutOfRange { what: "conjugacy classes", index: c, count: self.num_classes() })
        }
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn permutations_lex(k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_sizes(g: &FiniteGroup) -> Vec<usize> {
        g.conjugacy_classes().iter().map(Vec::len).collect()
    }

    /// Orbits under conjugation, computed independently of the stored classes.
    fn brute_orbits(g: &FiniteGroup) -> Vec<Vec<Elem>> {
        let n = g.order();
        let mut orbits: Vec<Vec<Elem>> = Vec::new();
        for x in 0..n {
            if orbits.iter().any(|o| o.contains(&x)) {
                continue;
            }
            let mut o: Vec<Elem> = Vec::new();
            for h in 0..n {
                let y = g.mul(g.mul(h, x), g.inv(h));
                if !o.contains(&y) {
                    o.push(y);
                }
            }
            o.sort();
            orbits.push(o);
        }
        orbits
    }

    #[test]
    fn trivial_group_from_table() {
        let g = FiniteGroup::from_table(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes(), &[vec![0]]);
        assert_eq!(g.centralizer_order(ClassId(0)), 1);
    }

    #[test]
    fn cyclic_three() {
        let table: Vec<Vec<usize>> = (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect();
        let g = FiniteGroup::from_table(&table).unwrap();
        assert_eq!(g.conjugacy_classes(), &[vec![0], vec![1], vec![2]]);
        for c in 0..3 {
            assert_eq!(g.centralizer_order(ClassId(c)), 3);
        }
        let b = FiniteGroup::cyclic(3);
        assert_eq!(b.table(), table);
    }

    #[test]
    fn symmetric_three_classes() {
        let g = FiniteGroup::from_spec("sym:3").unwrap();
        assert_eq!(g.order(), 6);
        let mut sizes = class_sizes(&g);
        assert_eq!(sizes, vec![1, 2, 3]);
        sizes.sort();
        let mut brute: Vec<usize> = brute_orbits(&g).iter().map(Vec::len).collect();
        brute.sort();
        assert_eq!(sizes, brute);
        // Transpositions have centralizer order 2.
        let transpositions = ClassId(2);
        assert_eq!(g.class_size(transpositions), 3);
        assert_eq!(g.centralizer_order(transpositions), 2);
        for x in &g.conjugacy_classes()[2] {
            assert_eq!(g.element_order(*x), 2);
        }
    }

    #[test]
    fn identity_is_relabeled_to_zero() {
        // ℤ₂ with the identity stored as element 1.
        let g = FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn table_errors() {
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 1], vec![0, 1]]),
            Err(Error::NotBijectiveRow { .. })
        ));
        assert!(matches!(
            FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]]),
            Err(Error::MalformedTable(_))
        ));
        // Latin square without identity.
        assert!(FiniteGroup::from_table(&[vec![1, 0], vec![0, 1]]).is_ok());
        assert_eq!(
            FiniteGroup::from_table(&[vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]]).unwrap().order(),
            3
        );
        let no_id = vec![vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0]];
        assert_eq!(FiniteGroup::from_table(&no_id), Err(Error::NoIdentity));
        // A Latin square with identity that is not associative (order 5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&loop5), Err(Error::NotAssociative { .. })));
        assert!(matches!(
            FiniteGroup::from_table_with_max(&FiniteGroup::cyclic(5).table(), 4),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn builtin_specs() {
        assert_eq!(FiniteGroup::from_spec("trivial").unwrap().order(), 1);
        let z3 = FiniteGroup::from_spec("cyclic:3").unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(z3.mul(i, j), (i + j) % 3);
            }
        }
        assert_eq!(FiniteGroup::from_spec("dihedral:4").unwrap().num_classes(), 5);
        assert_eq!(FiniteGroup::from_spec("sym:4").unwrap().num_classes(), 5);
        assert!(matches!(FiniteGroup::from_spec("sym:5"), Err(Error::UnsupportedSpec(_))));
        assert!(matches!(FiniteGroup::from_spec("quaternion:8"), Err(Error::UnsupportedSpec(_))));
    }

    #[test]
    fn group_axioms_and_class_invariants() {
        for spec in ["trivial", "cyclic:4", "sym:3", "sym:4", "dihedral:3", "dihedral:5"] {
            let g = FiniteGroup::from_spec(spec).unwrap();
            let n = g.order();
            for x in 0..n {
                assert_eq!(g.mul(0, x), x);
                assert_eq!(g.mul(x, 0), x);
                assert_eq!(g.mul(x, g.inv(x)), 0);
                for y in 0..n {
                    for z in 0..n {
                        assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                    }
                }
            }
            let total: usize = class_sizes(&g).iter().sum();
            assert_eq!(total, n);
            assert_eq!(g.conjugacy_classes()[0], vec![0]);
            let mut ours = g.conjugacy_classes().to_vec();
            ours.sort();
            let mut brute = brute_orbits(&g);
            brute.sort();
            assert_eq!(ours, brute, "{spec}");
            for (i, c) in g.conjugacy_classes().iter().enumerate() {
                assert_eq!(n % c.len(), 0);
                for &x in c {
                    for h in 0..n {
                        assert_eq!(g.class_of(g.mul(g.mul(h, x), g.inv(h))), ClassId(i));
                    }
                }
            }
            let keys: Vec<(usize, usize)> = g.conjugacy_classes().iter().map(|c| (c.len(), c[0])).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            assert_eq!(keys, sorted);
        }
    }
}
