//! Recognition of the small families named in the analyses: cyclic,
//! elementary abelian, dihedral and symmetric groups.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{PermGroup, Permutation};
use crate::error::Result;
use crate::ring::{factorize, PrimePower};

pub const MULTISET_LIMIT: u64 = 1_000_000;
pub const RECOGNITION_LIMIT: u64 = 512;

/// Named isomorphism type. Dihedral groups follow `|D_m| = 2m`, with `D_1`
/// and `D_2` reported as the cyclic groups `C1` and `C2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SmallGroup {
    Cyclic(u64),
    ElementaryAbelian { p: u64, rank: u32 },
    Dihedral(u64),
    Symmetric(u64),
    Unrecognized,
}

impl fmt::Display for SmallGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmallGroup::Cyclic(m) => write!(f, "C{m}"),
            SmallGroup::ElementaryAbelian { p, rank } => write!(f, "(Z/{p})^{rank}"),
            SmallGroup::Dihedral(m) => write!(f, "D{m}"),
            SmallGroup::Symmetric(m) => write!(f, "S{m}"),
            SmallGroup::Unrecognized => write!(f, "unrecognized"),
        }
    }
}

/// Name plus the raw invariants it was decided from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recognition {
    pub name: SmallGroup,
    pub order: u64,
    pub abelian: bool,
    pub element_orders: BTreeMap<u64, u64>,
}

pub fn element_order_multiset(g: &PermGroup) -> Result<BTreeMap<u64, u64>> {
    let elems = g.require_elements(MULTISET_LIMIT)?;
    let mut out = BTreeMap::new();
    for e in elems {
        *out.entry(e.order()).or_insert(0) += 1;
    }
    Ok(out)
}

pub fn recognize_small_group(g: &PermGroup) -> Result<Recognition> {
    let elems = g.require_elements(RECOGNITION_LIMIT)?;
    let order = elems.len() as u64;
    let abelian = g.is_abelian();
    let element_orders = element_order_multiset(g)?;
    let name = classify(elems, order, abelian, &element_orders);
    Ok(Recognition {
        name,
        order,
        abelian,
        element_orders,
    })
}

fn classify(
    elems: &[Permutation],
    order: u64,
    abelian: bool,
    element_orders: &BTreeMap<u64, u64>,
) -> SmallGroup {
    if element_orders.contains_key(&order) {
        return SmallGroup::Cyclic(order);
    }
    if abelian {
        if let [PrimePower { p, k }] = factorize(order).as_slice() {
            if element_orders.keys().all(|&o| o == 1 || o == *p) {
                return SmallGroup::ElementaryAbelian { p: *p, rank: *k };
            }
        }
        return SmallGroup::Unrecognized;
    }
    if order.is_multiple_of(2) && order >= 6 {
        let m = order / 2;
        let rotations = elems.iter().filter(|e| e.order() == m);
        let involutions: Vec<&Permutation> = elems.iter().filter(|e| e.order() == 2).collect();
        for r in rotations {
            let r_inv = r.inverse();
            if involutions.iter().any(|s| s.then(r).then(s) == r_inv) {
                return SmallGroup::Dihedral(m);
            }
        }
    }
    let mut m = 1u64;
    let mut fact = 1u64;
    while fact < order {
        m += 1;
        fact *= m;
    }
    if fact == order && m >= 3 && *element_orders == symmetric_order_multiset(m) {
        return SmallGroup::Symmetric(m);
    }
    SmallGroup::Unrecognized
}

/// Element-order multiset of the symmetric group on `m` letters, by cycle type.
pub fn symmetric_order_multiset(m: u64) -> BTreeMap<u64, u64> {
    fn rec(
        remaining: u64,
        max_part: u64,
        parts: &mut Vec<u64>,
        m: u64,
        out: &mut BTreeMap<u64, u64>,
    ) {
        if remaining == 0 {
            // m! / prod(i^a_i * a_i!)
            let mut count: u128 = (1..=m as u128).product();
            let mut runs: BTreeMap<u64, u64> = BTreeMap::new();
            for &p in parts.iter() {
                *runs.entry(p).or_insert(0) += 1;
            }
            for (&part, &mult) in &runs {
                count /= (part as u128).pow(mult as u32);
                count /= (1..=mult as u128).product::<u128>();
            }
            let ord = parts.iter().fold(1u64, |acc, &p| acc / gcd(acc, p) * p);
            *out.entry(ord).or_insert(0) += count as u64;
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            parts.push(part);
            rec(remaining - part, part, parts, m, out);
            parts.pop();
        }
    }
    let mut out = BTreeMap::new();
    rec(m, m, &mut Vec::new(), m, &mut out);
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    fn group(gens: &[&str], n: usize) -> PermGroup {
        let gens: Vec<Permutation> = gens.iter().map(|g| c(g, n)).collect();
        PermGroup::generate(&gens).unwrap()
    }

    #[test]
    fn multisets() {
        let d4 = group(&["(0,1,2,3)", "(1,3)"], 4);
        assert_eq!(
            element_order_multiset(&d4).unwrap(),
            BTreeMap::from([(1, 1), (2, 5), (4, 2)])
        );
        let triv = group(&["e"], 4);
        assert_eq!(
            element_order_multiset(&triv).unwrap(),
            BTreeMap::from([(1, 1)])
        );
        let c4 = group(&["(0,1,2,3)"], 4);
        assert_eq!(
            element_order_multiset(&c4).unwrap(),
            BTreeMap::from([(1, 1), (2, 1), (4, 2)])
        );
    }

    #[test]
    fn names() {
        let name = |gens: &[&str], n| recognize_small_group(&group(gens, n)).unwrap().name;
        assert_eq!(name(&["(0,1,2,3)", "(1,3)"], 4), SmallGroup::Dihedral(4));
        assert_eq!(name(&["(0,1)"], 4), SmallGroup::Cyclic(2));
        assert_eq!(name(&["e"], 3), SmallGroup::Cyclic(1));
        assert_eq!(
            name(&["(0,1)", "(2,3)"], 4),
            SmallGroup::ElementaryAbelian { p: 2, rank: 2 }
        );
        assert_eq!(name(&["(0,1,2,3)", "(0,1)"], 4), SmallGroup::Symmetric(4));
        assert_eq!(name(&["(0,1,2)", "(0,1)"], 3), SmallGroup::Dihedral(3));
        assert_eq!(name(&["(0,1,2,3,4)", "(0,1)"], 5), SmallGroup::Symmetric(5));
        // C2 x C4 is abelian but neither cyclic nor elementary abelian
        assert_eq!(name(&["(0,1)", "(2,3,4,5)"], 6), SmallGroup::Unrecognized);
        // A4
        assert_eq!(
            name(&["(0,1,2)", "(0,1)(2,3)"], 4),
            SmallGroup::Unrecognized
        );
    }

    #[test]
    fn symmetric_multiset_counts() {
        let s4 = symmetric_order_multiset(4);
        assert_eq!(s4, BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)]));
        assert_eq!(symmetric_order_multiset(5).values().sum::<u64>(), 120);
    }

    #[test]
    fn too_large() {
        let s6 = group(&["(0,1,2,3,4,5)", "(0,1)"], 6);
        assert!(recognize_small_group(&s6).is_err());
        assert!(element_order_multiset(&s6).is_ok());
    }
}
