use proptest::prelude::*;
use wreath_core::center::CenterAlgebra;
use wreath_core::partial::canonical_partial;
use wreath_core::wreath::{canonical_representative, class_order};
use wreath_core::{FamilyKind, FiniteGroup, GPartialPermutation, MultiAlphabetPowerSum, PartitionFamily, WreathElement};

const GROUPS: [&str; 4] = ["trivial", "cyclic:2", "cyclic:3", "sym:3"];

fn group(i: usize) -> FiniteGroup {
    FiniteGroup::from_spec(GROUPS[i]).unwrap()
}

fn order(i: usize) -> usize {
    [1, 2, 3, 6][i]
}

fn wreath(gi: usize, n: usize) -> impl Strategy<Value = WreathElement> {
    let g = group(gi);
    (
        prop::collection::vec(0..order(gi), n),
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
    )
        .prop_map(move |(labels, perm)| WreathElement::new(&g, labels, perm).unwrap())
}

fn partial(gi: usize, n: usize) -> impl Strategy<Value = GPartialPermutation> {
    let g = group(gi);
    prop::sample::subsequence((1..=n).collect::<Vec<usize>>(), 0..=n)
        .prop_flat_map(move |support| {
            let k = support.len();
            (Just(support.clone()), Just(support).prop_shuffle(), prop::collection::vec(0..order(gi), k))
        })
        .prop_map(move |(support, images, labels)| {
            let entries = support.iter().zip(&images).zip(&labels).map(|((&p, &w), &l)| (p, w, l)).collect();
            GPartialPermutation::new(&g, entries).unwrap()
        })
}

fn setting() -> impl Strategy<Value = (usize, usize)> {
    (0..GROUPS.len(), 1usize..=5)
}

fn wreath_triple() -> impl Strategy<Value = (usize, usize, WreathElement, WreathElement, WreathElement)> {
    setting().prop_flat_map(|(gi, n)| (Just(gi), Just(n), wreath(gi, n), wreath(gi, n), wreath(gi, n)))
}

fn partial_triple() -> impl Strategy<Value = (usize, usize, GPartialPermutation, GPartialPermutation, GPartialPermutation)> {
    setting().prop_flat_map(|(gi, n)| (Just(gi), Just(n), partial(gi, n), partial(gi, n), partial(gi, n)))
}

#[allow(clippy::type_complexity)]
fn action_case() -> impl Strategy<Value = (usize, usize, GPartialPermutation, GPartialPermutation, WreathElement, WreathElement)> {
    setting().prop_flat_map(|(gi, n)| (Just(gi), Just(n), partial(gi, n), partial(gi, n), wreath(gi, n), wreath(gi, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn wreath_product_is_a_group((gi, _n, a, b, c) in wreath_triple()) {
        let g = group(gi);
        let ab_c = a.multiply(&g, &b).unwrap().multiply(&g, &c).unwrap();
        let a_bc = a.multiply(&g, &b.multiply(&g, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert!(a.multiply(&g, &a.inverse(&g)).unwrap().is_identity());
        prop_assert!(a.inverse(&g).multiply(&g, &a).unwrap().is_identity());
        prop_assert_eq!(a.conjugate_by(&g, &b).unwrap().type_of(&g), a.type_of(&g));
    }

    #[test]
    fn psi_is_a_homomorphism((gi, n, x, y, _z) in partial_triple()) {
        let g = group(gi);
        let lhs = x.mul(&g, &y).psi(n).unwrap();
        let rhs = x.psi(n).unwrap().multiply(&g, &y.psi(n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // Partial types restrict wreath types.
        prop_assert!(x.type_of(&g).is_contained_in(&x.psi(n).unwrap().type_of(&g)));
    }

    #[test]
    fn partial_product_is_associative((gi, _n, x, y, z) in partial_triple()) {
        let g = group(gi);
        prop_assert_eq!(x.mul(&g, &y).mul(&g, &z), x.mul(&g, &y.mul(&g, &z)));
        prop_assert_eq!(x.mul(&g, &GPartialPermutation::unity()), x.clone());
        let mut sup = x.support();
        sup.extend(y.support());
        sup.sort_unstable();
        sup.dedup();
        prop_assert_eq!(x.mul(&g, &y).support(), sup);
    }

    #[test]
    fn action_is_compatible((gi, n, x, y, a, b) in action_case()) {
        let g = group(gi);
        let ax = x.act(&g, &a).unwrap();
        // ψ intertwines the action with conjugation.
        prop_assert_eq!(ax.psi(n).unwrap(), x.psi(n).unwrap().conjugate_by(&g, &a).unwrap());
        // The action preserves types, support sizes and products.
        prop_assert_eq!(ax.type_of(&g), x.type_of(&g));
        prop_assert_eq!(ax.support_size(), x.support_size());
        prop_assert_eq!(x.mul(&g, &y).act(&g, &a).unwrap(), ax.mul(&g, &y.act(&g, &a).unwrap()));
        prop_assert_eq!(x.act(&g, &a.multiply(&g, &b).unwrap()).unwrap(), x.act(&g, &b).unwrap().act(&g, &a).unwrap());
    }

    #[test]
    fn json_round_trip((gi, _n, x, _y, _z) in partial_triple()) {
        let g = group(gi);
        prop_assert_eq!(GPartialPermutation::from_json(&g, &x.to_json()).unwrap(), x);
    }

    #[test]
    fn alphabet_round_trip(gi in 0..GROUPS.len(), parts in prop::collection::vec((0usize..3, 1usize..=3), 0..=3)) {
        let g = group(gi);
        let t = wreath_core::CharacterTable::compute(&g).unwrap();
        let h = g.num_classes();
        let mut grouped: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (c, r) in parts {
            grouped.entry(c % h).or_default().push(r);
        }
        let f = MultiAlphabetPowerSum::monomial(PartitionFamily::classes(grouped));
        let back = f.to_character_alphabets(&t).unwrap().to_class_alphabets(&g, &t).unwrap();
        prop_assert!(back.distance(&f) < 1e-9);
    }
}

#[test]
fn class_sizes_add_up() {
    for gi in 0..GROUPS.len() {
        let g = group(gi);
        for n in 0..=4 {
            let total: u64 = wreath_core::family::families_of_size(FamilyKind::Classes, g.num_classes(), n)
                .iter()
                .map(|l| class_order(&g, l).unwrap().1)
                .sum();
            assert_eq!(total, (order(gi) as u64).pow(n as u32) * (1..=n as u64).product::<u64>());
        }
    }
}

#[test]
fn center_is_commutative_with_unit() {
    let g = group(3);
    let alg = CenterAlgebra::new(&g, 3);
    let fams = wreath_core::family::families_of_size(FamilyKind::Classes, 3, 3);
    let unit = PartitionFamily::classes([(0, vec![1, 1, 1])]);
    for a in &fams {
        let r = alg.product(a, &unit).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.get(a), 1);
        for b in &fams {
            assert_eq!(alg.product(a, b).unwrap(), alg.product(b, a).unwrap());
        }
    }
}

#[test]
fn canonical_members_have_their_type() {
    for gi in 0..GROUPS.len() {
        let g = group(gi);
        for lam in wreath_core::family::families_up_to(FamilyKind::Classes, g.num_classes(), 3) {
            assert_eq!(canonical_partial(&g, &lam).unwrap().type_of(&g), lam);
            assert_eq!(canonical_representative(&g, &lam, 4).unwrap().type_of(&g), lam.pad(4).unwrap());
        }
    }
}
