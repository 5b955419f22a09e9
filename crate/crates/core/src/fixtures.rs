//! The shipped library of small racks and groups.

use crate::structures::{conj_rack, FiniteGroup, FiniteRack, Structure};

/// `x ▷ y = y` on `k` elements, pointed at `0`.
pub fn trivial_rack(k: usize) -> FiniteRack {
    let table = (0..k).map(|_| (0..k).collect()).collect();
    FiniteRack::new(table, (k > 0).then_some(0)).expect("trivial rack").with_name(format!("trivial{k}"))
}

/// The one-point rack.
pub fn point_rack() -> FiniteRack {
    trivial_rack(1).with_name("point")
}

/// `x ▷ y = 2x − y mod n` (not pointed).
pub fn dihedral_quandle(n: usize) -> FiniteRack {
    let table = (0..n).map(|x| (0..n).map(|y| (2 * x + n - y) % n).collect()).collect();
    FiniteRack::new(table, None).expect("dihedral quandle").with_name(format!("dihedral{n}"))
}

pub fn trivial_group() -> FiniteGroup {
    FiniteGroup::cyclic(1).with_name("Z/1")
}

pub fn cyclic_group(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n)
}

pub fn klein_group() -> FiniteGroup {
    FiniteGroup::direct_product(&cyclic_group(2), &cyclic_group(2)).with_name("Z/2xZ/2")
}

/// `S_3` in lexicographic order of one-line notation:
/// `e, (23), (12), (123), (132), (13)`.
pub fn symmetric_group_3() -> FiniteGroup {
    FiniteGroup::from_permutations(vec![
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![2, 1, 0],
    ])
    .expect("S3")
    .with_name("S3")
    .with_labels(["e", "(23)", "(12)", "(123)", "(132)", "(13)"].map(String::from).to_vec())
    .expect("labels")
}

/// Fixture groups used throughout the checks, smallest first.
pub fn fixture_groups() -> Vec<FiniteGroup> {
    vec![trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_group(), symmetric_group_3()]
}

/// Fixture racks: trivial racks of size 1 to 4, conjugation racks of the
/// fixture groups and the dihedral quandles of order 3, 4, 5.
pub fn fixture_racks() -> Vec<FiniteRack> {
    let mut out: Vec<FiniteRack> = (1..=4).map(trivial_rack).collect();
    out.extend(fixture_groups().iter().skip(1).map(conj_rack));
    out.extend([3, 4, 5].map(dihedral_quandle));
    out
}

/// Canonical short names accepted wherever a structure is named.
pub const FIXTURE_NAMES: &[&str] = &[
    "point", "trivial1", "trivial2", "trivial3", "trivial4", "conj-z2", "conj-z3", "conj-z4", "conj-z2xz2", "conj-s3",
    "dihedral3", "dihedral4", "dihedral5", "z1", "z2", "z3", "z4", "z2xz2", "s3",
];

fn group_by_name(name: &str) -> Option<FiniteGroup> {
    Some(match name {
        "z1" => trivial_group(),
        "z2" => cyclic_group(2),
        "z3" => cyclic_group(3),
        "z4" => cyclic_group(4),
        "z2xz2" => klein_group(),
        "s3" => symmetric_group_3(),
        _ => return None,
    })
}

pub fn by_name(name: &str) -> Option<Structure> {
    let name = name.to_ascii_lowercase();
    let rack = match name.as_str() {
        "point" => point_rack(),
        "trivial1" | "trivial2" | "trivial3" | "trivial4" => trivial_rack(name[7..].parse().ok()?),
        "dihedral3" | "dihedral4" | "dihedral5" => dihedral_quandle(name[8..].parse().ok()?),
        other => {
            if let Some(g) = other.strip_prefix("conj-").and_then(group_by_name) {
                conj_rack(&g)
            } else {
                return group_by_name(other).map(Structure::Group);
            }
        }
    };
    Some(Structure::Rack { rack, action: None })
}
