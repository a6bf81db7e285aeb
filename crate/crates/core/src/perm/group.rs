use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{Permutation, StabChain};
use crate::error::{Error, Result};

/// Largest supported permutation degree.
pub const MAX_DEGREE: usize = 1 << 20;

/// Strategy knobs for [`PermGroup::generate_with`].
#[derive(Clone, Copy, Debug)]
pub struct GroupOptions {
    /// Groups up to this order also keep an explicit element list built by
    /// breadth-first search.
    pub explicit_limit: u64,
}

impl Default for GroupOptions {
    fn default() -> Self {
        GroupOptions {
            explicit_limit: 10_000_000,
        }
    }
}

/// A subgroup of the symmetric group on `degree` points given by generators.
///
/// The stabilizer chain is always built; it fixes the order and answers
/// membership. Small groups additionally carry their elements in breadth-first
/// order (generators in the given order, FIFO queue, products `e.then(g)`),
/// which is reproducible across runs.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    order: BigUint,
    chain: StabChain,
    elements: Option<ElementStore>,
}

struct ElementStore {
    list: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PermGroup {
    pub fn generate(generators: &[Permutation]) -> Result<Self> {
        Self::generate_with(generators, GroupOptions::default())
    }

    pub fn generate_with(generators: &[Permutation], opts: GroupOptions) -> Result<Self> {
        let degree = generators
            .first()
            .ok_or_else(|| Error::InvalidParameters("empty generator list".into()))?
            .degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::SizeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        if degree > MAX_DEGREE {
            return Err(Error::ResourceCap(format!(
                "degree {degree} exceeds {MAX_DEGREE} points"
            )));
        }
        let chain = StabChain::from_generators(degree, generators);
        let order = chain.order();
        let elements = match order.to_u64() {
            Some(o) if o <= opts.explicit_limit => Some(bfs_closure(degree, generators, o)),
            _ => None,
        };
        Ok(PermGroup {
            degree,
            generators: generators.to_vec(),
            order,
            chain,
            elements,
        })
    }

    /// Closure by breadth-first search alone, without a stabilizer chain.
    /// Fails once more than `limit` elements have been found.
    pub fn enumerate_elements(generators: &[Permutation], limit: u64) -> Result<Vec<Permutation>> {
        let degree = generators
            .first()
            .ok_or_else(|| Error::InvalidParameters("empty generator list".into()))?
            .degree();
        let store = bfs_closure(degree, generators, limit);
        if store.list.len() as u64 > limit {
            return Err(Error::ResourceCap(format!(
                "closure exceeds {limit} elements"
            )));
        }
        Ok(store.list)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    /// Explicit elements in breadth-first order, when the group is small enough.
    pub fn elements(&self) -> Option<&[Permutation]> {
        self.elements.as_ref().map(|s| s.list.as_slice())
    }

    pub fn has_element_store(&self) -> bool {
        self.elements.is_some()
    }

    pub fn contains(&self, f: &Permutation) -> bool {
        if f.degree() != self.degree {
            return false;
        }
        match &self.elements {
            Some(store) => store.index.contains_key(f),
            None => self.chain.contains(f),
        }
    }

    /// Membership through the stabilizer chain only.
    pub fn chain_contains(&self, f: &Permutation) -> bool {
        self.chain.contains(f)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.then(b) == b.then(a))
        })
    }

    pub(crate) fn require_elements(&self, limit: u64) -> Result<&[Permutation]> {
        match (&self.elements, self.order.to_u64()) {
            (Some(store), Some(o)) if o <= limit => Ok(&store.list),
            _ => Err(Error::TooLarge {
                order: self.order.clone(),
                limit,
            }),
        }
    }
}

/// Stops after `limit + 1` elements so callers can detect overflow.
fn bfs_closure(degree: usize, generators: &[Permutation], limit: u64) -> ElementStore {
    let id = Permutation::identity(degree);
    let mut list = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let h = list[i].then(g);
            if !index.contains_key(&h) {
                index.insert(h.clone(), list.len());
                queue.push_back(list.len());
                list.push(h);
                if list.len() as u64 > limit {
                    return ElementStore { list, index };
                }
            }
        }
    }
    ElementStore { list, index }
}

/// Outcome of [`normal_closure_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub is_subgroup: bool,
    pub is_normal: bool,
    pub subgroup_order: BigUint,
    pub quotient_order: BigUint,
}

/// Checks that `<h_generators>` is a subgroup of `g` and whether it is normal
/// (`x^-1 h x` in `<H>` for every generator pair).
pub fn normal_closure_check(
    g: &PermGroup,
    h_generators: &[Permutation],
) -> Result<NormalityReport> {
    if let Some(bad) = h_generators.iter().find(|h| !g.contains(h)) {
        return Err(Error::NotInGroup(bad.format_cycles()));
    }
    let h_gens: Vec<Permutation> = if h_generators.is_empty() {
        vec![Permutation::identity(g.degree())]
    } else {
        h_generators.to_vec()
    };
    let h = PermGroup::generate(&h_gens)?;
    let is_normal = g
        .generators()
        .iter()
        .all(|x| h_gens.iter().all(|y| h.contains(&y.conjugate_by(x))));
    let quotient_order = g.order() / h.order();
    Ok(NormalityReport {
        is_subgroup: true,
        is_normal,
        subgroup_order: h.order().clone(),
        quotient_order,
    })
}

/// The action of `g` on the right cosets of its subgroup `h`, as a permutation
/// group on `[g : h]` points. When `h` is normal this realizes `g / h`.
/// Cosets are numbered by their first appearance in `g`'s element order.
pub fn coset_action(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    const LIMIT: u64 = 1_000_000;
    let g_elems = g.require_elements(LIMIT)?;
    let h_elems = h.require_elements(LIMIT)?;
    if let Some(bad) = h.generators().iter().find(|x| !g.contains(x)) {
        return Err(Error::NotInGroup(bad.format_cycles()));
    }
    // coset label of every element of g
    let mut label: HashMap<&Permutation, u32> = HashMap::new();
    let mut reps: Vec<&Permutation> = Vec::new();
    for x in g_elems {
        if label.contains_key(x) {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for y in h_elems {
            let hx = y.then(x);
            let slot = g
                .elements
                .as_ref()
                .and_then(|s| s.index.get(&hx))
                .ok_or_else(|| Error::Internal("coset element outside group".into()))?;
            label.insert(&g_elems[*slot], id);
        }
    }
    let gens = g
        .generators()
        .iter()
        .map(|s| {
            let images = reps
                .iter()
                .map(|r| {
                    let moved = r.then(s);
                    g.elements
                        .as_ref()
                        .and_then(|st| st.index.get(&moved))
                        .map(|&i| label[&g_elems[i]])
                        .ok_or_else(|| Error::Internal("coset image outside group".into()))
                })
                .collect::<Result<Vec<u32>>>()?;
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::generate(&gens)
}
