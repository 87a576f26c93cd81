//! Built-in fixture semigroups.
//!
//! Each fixture is stored as a literal table. [`construct`] rebuilds the same
//! semigroup from its definition so a corrupted table can be detected.

use crate::semigroup::{recognize_inverse, symmetric_inverse_monoid, InverseSemigroup, MulTable};

pub const NAMES: [&str; 8] = ["T1", "E2", "E3", "Z2", "Z3", "I1", "I2", "B2"];

fn literal(name: &str, rows: &[&[usize]]) -> InverseSemigroup {
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    recognize_inverse(MulTable::from_rows(&rows).expect("fixture table"))
        .expect("fixture is inverse")
        .with_name(name)
}

/// Trivial group.
pub fn t1() -> InverseSemigroup {
    literal("T1", &[&[0]])
}

/// Two-element semilattice {0 < 1}.
pub fn e2() -> InverseSemigroup {
    literal("E2", &[&[0, 0], &[0, 1]])
}

/// Three-element chain {0 < 1 < 2}.
pub fn e3() -> InverseSemigroup {
    literal("E3", &[&[0, 0, 0], &[0, 1, 1], &[0, 1, 2]])
}

pub fn z2() -> InverseSemigroup {
    literal("Z2", &[&[0, 1], &[1, 0]])
}

pub fn z3() -> InverseSemigroup {
    literal("Z3", &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]])
}

/// Symmetric inverse monoid on one point: [empty map, identity].
pub fn i1() -> InverseSemigroup {
    literal("I1", &[&[0, 0], &[0, 1]])
}

/// Symmetric inverse monoid on two points, canonical order:
/// empty, {0->0}, {0->1}, {1->0}, {1->1}, identity, swap.
pub fn i2() -> InverseSemigroup {
    literal(
        "I2",
        &[
            &[0, 0, 0, 0, 0, 0, 0],
            &[0, 1, 0, 3, 0, 1, 3],
            &[0, 2, 0, 4, 0, 2, 4],
            &[0, 0, 1, 0, 3, 3, 1],
            &[0, 0, 2, 0, 4, 4, 2],
            &[0, 1, 2, 3, 4, 5, 6],
            &[0, 2, 1, 4, 3, 6, 5],
        ],
    )
}

/// Brandt semigroup B2: [0, e11, e12, e21, e22].
pub fn b2() -> InverseSemigroup {
    literal(
        "B2",
        &[
            &[0, 0, 0, 0, 0],
            &[0, 1, 2, 0, 0],
            &[0, 0, 0, 1, 2],
            &[0, 3, 4, 0, 0],
            &[0, 0, 0, 3, 4],
        ],
    )
}

pub fn all() -> Vec<InverseSemigroup> {
    NAMES.iter().map(|n| by_name(n).unwrap()).collect()
}

pub fn by_name(name: &str) -> Option<InverseSemigroup> {
    Some(match name {
        "T1" => t1(),
        "E2" => e2(),
        "E3" => e3(),
        "Z2" => z2(),
        "Z3" => z3(),
        "I1" => i1(),
        "I2" => i2(),
        "B2" => b2(),
        _ => return None,
    })
}

/// Builds the named fixture from its mathematical definition.
pub fn construct(name: &str) -> Option<InverseSemigroup> {
    let build = |n: usize, f: &dyn Fn(usize, usize) -> usize| {
        recognize_inverse(MulTable::from_fn(n, f).ok()?).ok()
    };
    let s = match name {
        "T1" => build(1, &|_, _| 0)?,
        "E2" => build(2, &|a, b| a.min(b))?,
        "E3" => build(3, &|a, b| a.min(b))?,
        "Z2" => build(2, &|a, b| (a + b) % 2)?,
        "Z3" => build(3, &|a, b| (a + b) % 3)?,
        "I1" => symmetric_inverse_monoid(1).ok()?,
        "I2" => symmetric_inverse_monoid(2).ok()?,
        "B2" => {
            // matrix units e_ij with a zero, indexed 1 + 2(i-1) + (j-1)
            let unit = |x: usize| (x != 0).then(|| ((x - 1) / 2, (x - 1) % 2));
            build(5, &|a, b| match (unit(a), unit(b)) {
                (Some((i, j)), Some((k, l))) if j == k => 1 + 2 * i + l,
                _ => 0,
            })?
        }
        _ => return None,
    };
    Some(s.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_match_constructions() {
        for name in NAMES {
            let lit = by_name(name).unwrap();
            let built = construct(name).unwrap();
            assert_eq!(lit.table(), built.table(), "{name}");
        }
    }

    #[test]
    fn basic_shape() {
        assert_eq!(b2().idempotents(), &[0, 1, 4]);
        assert_eq!(b2().zero(), Some(0));
        assert_eq!(b2().identity(), None);
        assert_eq!(i2().identity(), Some(5));
        assert_eq!(i2().inverse_map(), &[0, 1, 3, 2, 4, 5, 6]);
        assert!(z3().is_group());
    }
}
