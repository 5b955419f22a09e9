use proptest::prelude::*;

use rackcoh::cochain::{
    cubical_group_diff, group_diff, pointed_cohomology, rack_diff, rack_diff_twisted, tuples, Cochain, CochainKind,
};
use rackcoh::fixtures;
use rackcoh::linalg::{AbelianInvariants, Matrix};
use rackcoh::scalar::{IntDomain, Mat2, Mat2Domain, ModDomain, ModInt};
use rackcoh::structures::{conj_rack, RackModuleAction};
use rackcoh::{CoefficientSpec, Complex, FiniteGroup, FiniteRack};

fn complexes_of<'a>(racks: &'a [FiniteRack], groups: &'a [FiniteGroup]) -> Vec<(String, Complex<'a>)> {
    let mut out = Vec::new();
    for r in racks {
        out.push((format!("rack {}", r.name()), Complex::Rack(r)));
        if r.unit().is_some() {
            out.push((format!("pointed {}", r.name()), Complex::Pointed(r)));
        }
    }
    for g in groups {
        out.push((format!("group {}", g.name()), Complex::Group(g)));
        out.push((format!("cubical {}", g.name()), Complex::CubicalGroup(g)));
    }
    out
}

#[test]
fn d_squared_vanishes_on_fixtures() {
    let racks = fixtures::fixture_racks();
    let groups = fixtures::fixture_groups();
    for (name, c) in complexes_of(&racks, &groups) {
        for n in 0..=2 {
            let d1 = c.diff_matrix_i64(n).unwrap();
            let d2 = c.diff_matrix_i64(n + 1).unwrap();
            assert!(d2.mul(&d1).unwrap().is_zero(), "{name} n={n}");
            assert!(c.pointed_closed(n).unwrap(), "{name} n={n}");
        }
    }
}

fn conj_s3_representations() -> Vec<RackModuleAction> {
    // S3 listed as e, (23), (12), (123), (132), (13)
    let sign = [1, -1, -1, 1, 1, -1];
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let permutation_matrices = perms
        .iter()
        .map(|p| (0..3).map(|i| (0..3).map(|j| i64::from(p[j] == i)).collect()).collect())
        .collect();
    vec![
        RackModuleAction { modulus: 0, dim: 1, matrices: sign.iter().map(|&s| vec![vec![s]]).collect() },
        RackModuleAction { modulus: 0, dim: 3, matrices: permutation_matrices },
        RackModuleAction { modulus: 3, dim: 1, matrices: sign.iter().map(|&s| vec![vec![s]]).collect() },
    ]
}

#[test]
fn twisted_d_squared_vanishes() {
    let g = fixtures::symmetric_group_3();
    let r = conj_rack(&g);
    for action in conj_s3_representations() {
        assert!(action.validate(&r).unwrap().is_valid());
        let c = Complex::Twisted(&r, &action);
        for n in 0..=2 {
            let d1 = c.diff_matrix_i64(n).unwrap();
            let d2 = c.diff_matrix_i64(n + 1).unwrap();
            let prod = d2.mul(&d1).unwrap();
            let m = action.modulus as i64;
            assert!(prod.entries().iter().all(|&v| if m == 0 { v == 0 } else { v % m == 0 }), "dim {} n={n}", action.dim);
        }
    }
}

#[test]
fn twisted_with_trivial_action_is_untwisted() {
    let r = fixtures::dihedral_quandle(3);
    let action = RackModuleAction::trivial(3, 1, 0);
    for n in 0..=2 {
        assert_eq!(
            Complex::Twisted(&r, &action).diff_matrix_i64(n).unwrap(),
            Complex::Rack(&r).diff_matrix_i64(n).unwrap()
        );
    }
    let f = Cochain::from_fn(CochainKind::Rack, 3, 2, |t| (t[0] * 3 + t[1]) as i64).unwrap();
    assert_eq!(rack_diff_twisted(&r, &action, &f).unwrap(), rack_diff(&r, &f).unwrap());
}

#[test]
fn twisted_degree_one_by_hand() {
    // d f(x1, x2) = -(f(x1▷x2) - M_{x1} f(x2)) + (f(x1) - M_{x1▷x2} f(x1))
    let g = fixtures::symmetric_group_3();
    let r = conj_rack(&g);
    let action = &conj_s3_representations()[0];
    let f = Cochain::from_fn(CochainKind::Rack, 6, 1, |t| t[0] as i64 * 2 + 1).unwrap();
    let d = rack_diff_twisted(&r, action, &f).unwrap();
    for a in 0..6 {
        for b in 0..6 {
            let m = |x: usize| action.matrices[x][0][0];
            let expected = -(f.at(&[r.op(a, b)]) - m(a) * f.at(&[b])) + (f.at(&[a]) - m(r.op(a, b)) * f.at(&[a]));
            assert_eq!(*d.at(&[a, b]), expected);
        }
    }
}

#[test]
fn cubical_group_complex_is_the_conjugation_rack_complex() {
    for g in fixtures::fixture_groups() {
        let conj = conj_rack(&g);
        for n in 0..=2 {
            let f = Cochain::from_fn(CochainKind::CubicalGroup, g.size(), n, |t| {
                t.iter().fold(2i64, |a, &v| a * 3 + v as i64 - 1)
            })
            .unwrap();
            let as_rack = Cochain::from_values(CochainKind::Rack, g.size(), n, f.values.clone()).unwrap();
            assert_eq!(cubical_group_diff(&g, &f).unwrap().values, rack_diff(&conj, &as_rack).unwrap().values);
        }
    }
}

fn known(rack: &FiniteRack, n: usize) -> AbelianInvariants {
    Complex::Rack(rack).cohomology(n, &CoefficientSpec::Integers).unwrap()
}

#[test]
fn point_and_trivial_racks() {
    let p = fixtures::point_rack();
    for n in 0..=4 {
        assert_eq!(known(&p, n), AbelianInvariants::free(1));
    }
    for k in 1..=3 {
        let t = fixtures::trivial_rack(k);
        for n in 0..=4usize {
            assert_eq!(known(&t, n), AbelianInvariants::free(k.pow(n as u32)), "k={k} n={n}");
        }
    }
}

/// Orbits of the action `y ↦ x ▷ y`, found by search.
fn orbit_count(rack: &FiniteRack) -> usize {
    let n = rack.size();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        if c[x] != x {
            let r = find(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for x in 0..n {
        for y in 0..n {
            let (a, b) = (find(&mut comp, y), find(&mut comp, rack.op(x, y)));
            comp[a] = b;
        }
    }
    (0..n).filter(|&x| find(&mut comp, x) == x).count()
}

#[test]
fn degree_one_is_orbit_functions() {
    // 1-cocycles satisfy f(x ▷ y) = f(y); degree-0 coboundaries vanish
    for rack in fixtures::fixture_racks() {
        assert_eq!(known(&rack, 1), AbelianInvariants::free(orbit_count(&rack)), "{}", rack.name());
    }
    let s3 = conj_rack(&fixtures::symmetric_group_3());
    assert_eq!(orbit_count(&s3), 3);
    assert_eq!(known(&s3, 1), AbelianInvariants::free(3));
    // pointed: orbit functions vanishing on the unit's orbit
    assert_eq!(pointed_cohomology(&s3, 1, &CoefficientSpec::Integers).unwrap(), AbelianInvariants::free(2));
}

#[test]
fn group_h1_is_hom() {
    // Hom(G, Z/p) by enumeration
    for g in fixtures::fixture_groups() {
        for p in [2u64, 3] {
            let homs = tuples(p as usize, g.size())
                .filter(|f| {
                    (0..g.size()).all(|a| (0..g.size()).all(|b| (f[a] + f[b]) % p as usize == f[g.mul(a, b)]))
                })
                .count();
            let h = Complex::Group(&g).cohomology(1, &CoefficientSpec::IntegersMod { modulus: p }).unwrap();
            assert_eq!(p.pow(h.dimension_mod(p).unwrap() as u32), homs as u64, "{} p={p}", g.name());
        }
    }
}

#[test]
fn rejects_mismatched_cochains() {
    let r = fixtures::dihedral_quandle(3);
    let f = Cochain::<i64>::zero(CochainKind::Group, 3, 1).unwrap();
    assert!(rack_diff(&r, &f).is_err());
    let g = fixtures::cyclic_group(2);
    assert!(group_diff(&g, &Cochain::<i64>::zero(CochainKind::Group, 3, 1).unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squared_on_random_integer_cochains(which in 0usize..12, n in 0usize..3, seed in any::<u64>()) {
        let rack = &fixtures::fixture_racks()[which];
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let f: Cochain<i64> = Cochain::random(CochainKind::Rack, rack.size(), n, &IntDomain::default(), &mut rng).unwrap();
        prop_assert!(rack_diff(rack, &rack_diff(rack, &f).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn d_squared_on_random_matrix_cochains(which in 0usize..6, n in 0usize..3, seed in any::<u64>()) {
        let g = &fixtures::fixture_groups()[which];
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let dom = Mat2Domain { inner: IntDomain::default() };
        let f: Cochain<Mat2<i64>> = Cochain::random(CochainKind::Group, g.size(), n, &dom, &mut rng).unwrap();
        prop_assert!(group_diff(g, &group_diff(g, &f).unwrap()).unwrap().is_zero());
        let c = Cochain::from_values(CochainKind::CubicalGroup, g.size(), n, f.values.clone()).unwrap();
        prop_assert!(cubical_group_diff(g, &cubical_group_diff(g, &c).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn d_squared_mod_five(which in 0usize..12, n in 0usize..3, seed in any::<u64>()) {
        let rack = &fixtures::fixture_racks()[which];
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let f: Cochain<ModInt> = Cochain::random(CochainKind::Rack, rack.size(), n, &ModDomain { modulus: 5 }, &mut rng).unwrap();
        prop_assert!(rack_diff(rack, &rack_diff(rack, &f).unwrap()).unwrap().is_zero());
    }
}

#[test]
fn matrix_entries_are_small() {
    let m: Matrix<i64> = Complex::Rack(&fixtures::trivial_rack(2)).diff_matrix_i64(1).unwrap();
    assert!(m.is_zero());
}
