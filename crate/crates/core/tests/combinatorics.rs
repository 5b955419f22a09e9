use std::collections::HashSet;

use proptest::prelude::*;

use rackcoh::combinatorics::*;
use rackcoh::cubical::{face_mask, permute_mask, sigma_vertex, simplicial_face};

/// Sign by counting cycles, independent of the inversion count.
fn sign_by_cycles(p: &Permutation) -> i8 {
    let n = p.n();
    let mut seen = vec![false; n + 1];
    let mut even_cycles = 0;
    for s in 1..=n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = p.image(k);
            len += 1;
        }
        if len % 2 == 0 {
            even_cycles += 1;
        }
    }
    if even_cycles % 2 == 0 {
        1
    } else {
        -1
    }
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn sign_is_multiplicative(n in 1usize..8, seed in any::<u64>()) {
        let perms = all_permutations(n.min(5));
        let a = &perms[(seed % perms.len() as u64) as usize];
        let b = &perms[((seed >> 20) % perms.len() as u64) as usize];
        prop_assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
        prop_assert_eq!(a.inverse().sign(), a.sign());
    }

    #[test]
    fn sign_agrees_with_cycle_type(p in (1usize..9).prop_flat_map(permutation)) {
        prop_assert_eq!(p.sign(), sign_by_cycles(&p));
    }

    #[test]
    fn compose_with_inverse(p in (1usize..9).prop_flat_map(permutation)) {
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert!(p.inverse().compose(&p).is_identity());
    }
}

#[test]
fn star_sign_is_multiplicative() {
    for p in 0..=3 {
        for q in 0..=3 {
            for a in all_permutations(p) {
                for b in all_permutations(q) {
                    assert_eq!(star(&a, &b).sign(), a.sign() * b.sign());
                }
            }
        }
    }
    let s = Permutation::new(vec![2, 1]).unwrap();
    assert_eq!(star(&s, &Permutation::identity(1)).images(), &[2, 1, 3]);
}

#[test]
fn consecutive_cycles() {
    let c = Permutation::consecutive_cycle(4, 2, 4).unwrap();
    assert_eq!(c.images(), &[1, 3, 4, 2]);
    let d = Permutation::consecutive_cycle(4, 4, 2).unwrap();
    assert_eq!(d.images(), &[1, 4, 2, 3]);
    assert!(c.compose(&d).is_identity());
    assert!(Permutation::consecutive_cycle(3, 2, 2).unwrap().is_identity());
}

#[test]
fn shuffle_cardinalities() {
    for total in 0..=8 {
        for p1 in 0..=total {
            let p2 = total - p1;
            let all = shuffles(p1, p2, ShuffleClass::All);
            assert_eq!(all.len(), binomial(total, p1), "({p1},{p2})");
            let top = shuffles(p1, p2, ShuffleClass::TopFixed);
            let left = shuffles(p1, p2, ShuffleClass::LeftMax);
            if p1 >= 1 && p2 >= 1 {
                assert_eq!(top.len(), binomial(total - 1, p1));
                assert_eq!(left.len(), binomial(total - 1, p1 - 1));
            }
            // the two classes partition the shuffles
            let a: HashSet<_> = all.iter().map(|s| s.perm.clone()).collect();
            let t: HashSet<_> = top.iter().map(|s| s.perm.clone()).collect();
            let l: HashSet<_> = left.iter().map(|s| s.perm.clone()).collect();
            assert!(t.is_disjoint(&l));
            assert_eq!(&t | &l, a);
            for s in &all {
                assert!(is_shuffle(&s.perm, &[p1, p2]));
                assert_eq!(s.sign, s.perm.sign());
            }
        }
    }
}

#[test]
fn shuffles_are_exactly_the_block_increasing_permutations() {
    for n in 0..=5 {
        for p1 in 0..=n {
            let brute: HashSet<Permutation> = all_permutations(n)
                .into_iter()
                .filter(|s| {
                    (1..p1).all(|k| s.image(k) < s.image(k + 1)) && (p1 + 1..n).all(|k| s.image(k) < s.image(k + 1))
                })
                .collect();
            let listed: HashSet<Permutation> = shuffles(p1, n - p1, ShuffleClass::All).into_iter().map(|s| s.perm).collect();
            assert_eq!(brute, listed);
        }
    }
}

#[test]
fn alpha_and_beta_are_sign_preserving_bijections() {
    for p1 in 0..=3 {
        for p2 in 0..=3 {
            for p3 in 0..=3 {
                let p = [p1, p2, p3];
                let target: HashSet<Permutation> = triple_shuffles(p1, p2, p3).into_iter().collect();
                let mut from_alpha = HashSet::new();
                for s in shuffles(p1, p2 + p3, ShuffleClass::All) {
                    for g in shuffles(p2, p3, ShuffleClass::All) {
                        let a = alpha(&s.perm, &g.perm, p).unwrap();
                        assert_eq!(a.sign(), s.sign * g.sign);
                        if p1 + p2 + p3 <= 4 {
                            assert_eq!(alpha_by_subsets(&s.perm, &g.perm, p1), a);
                        }
                        assert!(from_alpha.insert(a));
                    }
                }
                assert_eq!(from_alpha, target, "alpha {p:?}");
                let mut from_beta = HashSet::new();
                for s in shuffles(p1 + p2, p3, ShuffleClass::All) {
                    for g in shuffles(p1, p2, ShuffleClass::All) {
                        let b = beta(&s.perm, &g.perm, p).unwrap();
                        assert_eq!(b.sign(), s.sign * g.sign);
                        if p1 + p2 + p3 <= 4 {
                            assert_eq!(beta_by_subsets(&s.perm, &g.perm), b);
                        }
                        assert!(from_beta.insert(b));
                    }
                }
                assert_eq!(from_beta, target, "beta {p:?}");
            }
        }
    }
}

#[test]
fn triple_shuffle_count_is_multinomial() {
    for (p1, p2, p3) in [(1, 1, 1), (2, 1, 1), (2, 2, 2), (0, 3, 1)] {
        let n = p1 + p2 + p3;
        assert_eq!(triple_shuffles(p1, p2, p3).len(), binomial(n, p1) * binomial(n - p1, p2));
    }
}

#[test]
fn phi_change_of_variables() {
    for m in 1..=5 {
        for sigma in all_permutations(m) {
            for i in 1..=m {
                let f = phi(&sigma, i).unwrap();
                assert_eq!(f.n(), m - 1);
                let si = sigma.image(i);
                // (-1)^{σ(i)} ε(φ) = (-1)^i ε(σ)
                let lhs = if si % 2 == 0 { f.sign() } else { -f.sign() };
                let rhs = if i % 2 == 0 { sigma.sign() } else { -sigma.sign() };
                assert_eq!(lhs, rhs, "{sigma} {i}");
                if m <= 4 {
                    // vertex maps □_{m−1} → □_m
                    for eps in 0..2u8 {
                        for mask in 0..1u32 << (m - 1) {
                            let left = face_mask(si, eps, permute_mask(&f, mask));
                            let right = permute_mask(&sigma, face_mask(i, eps, mask));
                            assert_eq!(left, right, "{sigma} i={i} eps={eps}");
                        }
                    }
                }
                assert_eq!(psi(&sigma, i).unwrap(), (f, si));
            }
        }
    }
}

#[test]
fn psi_fibres_are_indexed_by_position() {
    // for fixed (τ, j), each i has exactly one σ with ψ(σ, i) = (τ, j)
    for m in 1..=4 {
        let mut fibres: std::collections::HashMap<(Permutation, usize), Vec<usize>> = Default::default();
        for sigma in all_permutations(m) {
            for i in 1..=m {
                fibres.entry(psi(&sigma, i).unwrap()).or_default().push(i);
            }
        }
        assert_eq!(fibres.len(), all_permutations(m - 1).len() * m);
        for positions in fibres.values_mut() {
            positions.sort_unstable();
            assert_eq!(*positions, (1..=m).collect::<Vec<_>>());
        }
    }
}

fn mask_of(v: &[usize]) -> u32 {
    v.iter().fold(0, |acc, &e| acc | 1 << (e - 1))
}

#[test]
fn nu_identities() {
    for n in 0..=3 {
        let mut image = HashSet::new();
        for sigma in all_permutations(n) {
            for i in 1..=n + 1 {
                let v = nu(&sigma, i).unwrap();
                for k in 0..=n {
                    let lhs = face_mask(i, 1, sigma_vertex(&sigma, k).unwrap().mask);
                    let rhs = sigma_vertex(&v, k + 1).unwrap().mask;
                    assert_eq!(lhs, rhs);
                }
                let expected = if i % 2 == 0 { -sigma.sign() } else { sigma.sign() };
                assert_eq!(v.sign(), expected);
                assert!(image.insert(v));
            }
        }
        assert_eq!(image.len(), all_permutations(n + 1).len());
    }
}

#[test]
fn xi_identities() {
    for n in 0..=3 {
        let mut image = HashSet::new();
        for sigma in all_permutations(n) {
            for i in 1..=n + 1 {
                let x = xi(&sigma, i).unwrap();
                for k in 0..=n {
                    let lhs = face_mask(i, 0, sigma_vertex(&sigma, k).unwrap().mask);
                    assert_eq!(lhs, sigma_vertex(&x, k).unwrap().mask);
                }
                // (-1)^i ε(σ) = (-1)^{n+1} ε(ξ)
                let lhs = if i % 2 == 0 { sigma.sign() } else { -sigma.sign() };
                let rhs = if (n + 1) % 2 == 0 { x.sign() } else { -x.sign() };
                assert_eq!(lhs, rhs);
                assert!(image.insert(x));
            }
        }
        assert_eq!(image.len(), all_permutations(n + 1).len());
    }
}

#[test]
fn kappa_identities() {
    for n in 1..=3 {
        for sigma in all_permutations(n + 1) {
            for i in 1..=n {
                let k = kappa(&sigma, i).unwrap();
                assert_eq!(k.sign(), -sigma.sign());
                assert_eq!(kappa(&k, i).unwrap(), sigma);
                // σ ∘ ∂_i and κ ∘ ∂_i agree as functors Δ_n → □_{n+1}
                for j in 0..=n {
                    let v = |p: &Permutation| mask_of(&(1..=simplicial_face(i, j)).map(|c| p.image(c)).collect::<Vec<_>>());
                    assert_eq!(v(&sigma), v(&k));
                }
            }
        }
    }
}
