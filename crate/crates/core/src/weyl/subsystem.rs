use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lie_data::{
    pairing_vec, positive_roots_at, root_height, root_lattice_coords, same_type, LieType, Root,
    Weight,
};
use crate::rational::Q;

use super::descriptor::{CoxeterComponent, CoxeterDescriptor};

/// Integral root data of a weight at a fixed level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralSubsystem {
    pub level: usize,
    /// Φ⁺[λ] in canonical root order.
    pub positive: Vec<Root>,
    /// Σ[λ], ordered by letter.
    pub simple: Vec<Root>,
    pub descriptor: CoxeterDescriptor,
    /// Letter of each simple root in the product alphabet of `descriptor`.
    pub letters: BTreeMap<Root, usize>,
}

impl IntegralSubsystem {
    pub fn letter(&self, root: Root) -> usize {
        self.letters[&root]
    }

    /// Simple root carrying a given letter.
    pub fn root_of(&self, letter: usize) -> Root {
        self.simple[letter - 1]
    }
}

/// Φ⁺[λ], Σ[λ] and the Coxeter type of W[λ] at `scope_level`.
pub fn integral_subsystem(lambda: &Weight, scope_level: usize) -> Result<IntegralSubsystem> {
    let ty = lambda.lie_type();
    ty.check_level(scope_level)?;
    if scope_level < lambda.support() {
        return Err(Error::ScopeTooSmall {
            scope: scope_level,
            needed: lambda.support(),
        });
    }
    Ok(integral_subsystem_at(lambda, scope_level))
}

/// Same as [`integral_subsystem`] without the scope check; coordinates past
/// `level` are ignored.
pub(crate) fn integral_subsystem_at(lambda: &Weight, level: usize) -> IntegralSubsystem {
    let ty = lambda.lie_type();
    let v = lambda.to_vec(level);
    let positive: Vec<Root> = positive_roots_at(ty, level)
        .into_iter()
        .filter(|&a| pairing_vec(&v, a).is_integer())
        .collect();
    subsystem_from_positive(ty, level, positive)
}

pub(crate) fn subsystem_from_positive(
    ty: LieType,
    level: usize,
    positive: Vec<Root>,
) -> IntegralSubsystem {
    let simple = simple_system(level, &positive);
    let (descriptor, ordered) = classify(ty, &simple);
    let letters = ordered
        .iter()
        .enumerate()
        .map(|(k, &r)| (r, k + 1))
        .collect();
    IntegralSubsystem {
        level,
        positive,
        simple: ordered,
        descriptor,
        letters,
    }
}

fn coroot_vec(level: usize, a: Root) -> Vec<i64> {
    let mut v = vec![0; level];
    for (i, c) in a.coroot() {
        v[i - 1] += c;
    }
    v
}

/// Roots whose coroot is not a sum of two coroots from the subsystem.
fn simple_system(level: usize, positive: &[Root]) -> Vec<Root> {
    let coroots: Vec<Vec<i64>> = positive.iter().map(|&a| coroot_vec(level, a)).collect();
    let set: std::collections::HashSet<&Vec<i64>> = coroots.iter().collect();
    positive
        .iter()
        .zip(&coroots)
        .filter(|(_, c)| {
            !coroots.iter().any(|d| {
                let rest: Vec<i64> = c.iter().zip(d).map(|(x, y)| x - y).collect();
                set.contains(&rest)
            })
        })
        .map(|(&a, _)| a)
        .collect()
}

/// ⟨β_i, β_j^∨⟩.
fn cartan(a: Root, b: Root) -> i64 {
    let av = a.vector();
    b.coroot()
        .into_iter()
        .map(|(i, c)| {
            av.iter()
                .filter(|(j, _)| *j == i)
                .map(|(_, d)| c * d)
                .sum::<i64>()
        })
        .sum()
}

/// Splits a simple system into irreducible components, names them, and
/// orders nodes to match the standard realizations.
fn classify(ty: LieType, simple: &[Root]) -> (CoxeterDescriptor, Vec<Root>) {
    let n = simple.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && cartan(simple[i], simple[j]) != 0)
                .collect()
        })
        .collect();
    let mut seen = vec![false; n];
    let mut comps: Vec<(CoxeterComponent, Vec<Root>)> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < nodes.len() {
            for &j in &adj[nodes[i]] {
                if !seen[j] {
                    seen[j] = true;
                    nodes.push(j);
                }
            }
            i += 1;
        }
        nodes.sort();
        comps.push(order_component(ty, simple, &adj, &nodes));
    }
    comps.sort_by_key(|(c, _)| *c);
    let descriptor = CoxeterDescriptor::new(comps.iter().map(|(c, _)| *c).collect());
    let ordered = comps.into_iter().flat_map(|(_, r)| r).collect();
    (descriptor, ordered)
}

fn order_component(
    ty: LieType,
    simple: &[Root],
    adj: &[Vec<usize>],
    nodes: &[usize],
) -> (CoxeterComponent, Vec<Root>) {
    let r = nodes.len();
    let key = |i: usize| (root_height(ty, simple[i]), simple[i].indices(), simple[i]);
    let walk = |first: usize, prefix: &[usize]| -> Vec<usize> {
        let mut path: Vec<usize> = prefix.to_vec();
        path.push(first);
        loop {
            let last = *path.last().unwrap();
            match adj[last].iter().find(|j| !path.contains(j)) {
                Some(&next) => path.push(next),
                None => break,
            }
        }
        path
    };
    let double = nodes.iter().find_map(|&i| {
        adj[i]
            .iter()
            .find(|&&j| cartan(simple[i], simple[j]) * cartan(simple[j], simple[i]) == 2)
            .map(|&j| (i, j))
    });
    let branch = nodes.iter().copied().find(|&i| adj[i].len() == 3);
    let (kind, order) = if let Some((i, j)) = double {
        // the double edge sits at an end of the diagram
        let (end, other) = if r == 2 {
            if simple[i].norm2() < simple[j].norm2() {
                (i, j)
            } else {
                (j, i)
            }
        } else if adj[i].len() == 1 {
            (i, j)
        } else {
            (j, i)
        };
        let kind = if simple[end].norm2() < simple[other].norm2() {
            LieType::B
        } else {
            LieType::C
        };
        (kind, walk(end, &[]))
    } else if let Some(b) = branch {
        let mut leaves: Vec<usize> = adj[b].iter().copied().filter(|&j| adj[j].len() == 1).collect();
        leaves.sort_by_key(|&j| key(j));
        let (l1, l2) = (leaves[0], leaves[1]);
        let rest = adj[b]
            .iter()
            .copied()
            .find(|&j| j != l1 && j != l2)
            .expect("branch node has degree three");
        (LieType::D, walk(rest, &[l1, l2, b]))
    } else {
        let mut ends: Vec<usize> = nodes.iter().copied().filter(|&i| adj[i].len() <= 1).collect();
        ends.sort_by_key(|&j| key(j));
        (LieType::A, walk(ends[0], &[]))
    };
    debug_assert_eq!(order.len(), r);
    (
        CoxeterComponent::new(kind, r),
        order.into_iter().map(|i| simple[i]).collect(),
    )
}

/// Level past which every positive root pairs strictly positively with λ+ρ.
pub fn stable_level(lambda: &Weight) -> usize {
    let ty = lambda.lie_type();
    let s = lambda.support();
    let bound = lambda
        .shifted(s)
        .iter()
        .map(|x| crate::rational::ceil(&x.abs()))
        .max()
        .unwrap_or_default();
    let bound: usize = bound.try_into().expect("coordinates of moderate size");
    (s + 1).max(ty.min_level()) + 1 + bound
}

/// Positive roots at `level` with ⟨λ+ρ, α^∨⟩ = 0.
pub fn dot_stabilizer(lambda: &Weight, level: usize) -> Vec<Root> {
    let v = lambda.shifted(level);
    positive_roots_at(lambda.lie_type(), level)
        .into_iter()
        .filter(|&a| pairing_vec(&v, a).is_zero())
        .collect()
}

/// Whether no root at any level fixes λ under the dot action.
pub fn is_dot_regular(lambda: &Weight) -> bool {
    dot_stabilizer(lambda, stable_level(lambda)).is_empty()
}

/// Whether μ lies in the block of λ: λ − μ ∈ Λ and μ ∈ W·λ.
pub fn same_block(lambda: &Weight, mu: &Weight) -> Result<bool> {
    same_type(lambda, mu)?;
    if root_lattice_coords(&(lambda - mu)).is_none() {
        return Ok(false);
    }
    let ty = lambda.lie_type();
    let level = lambda.support().max(mu.support()).max(ty.min_level());
    Ok(same_orbit(ty, &lambda.shifted(level), &mu.shifted(level)))
}

/// Whether two coordinate vectors are related by the level-n Weyl group.
pub(crate) fn same_orbit(ty: LieType, a: &[Q], b: &[Q]) -> bool {
    let sorted = |v: &[Q], abs: bool| {
        let mut s: Vec<Q> = v.iter().map(|x| if abs { x.abs() } else { x.clone() }).collect();
        s.sort();
        s
    };
    match ty {
        LieType::A => sorted(a, false) == sorted(b, false),
        _ => {
            if sorted(a, true) != sorted(b, true) {
                return false;
            }
            if ty == LieType::D && !a.iter().any(|x| x.is_zero()) {
                let negs = |v: &[Q]| v.iter().filter(|x| x.is_negative()).count() % 2;
                return negs(a) == negs(b);
            }
            true
        }
    }
}

/// Coxeter type of the integral Weyl group of λ in the direct limit: the
/// finite components, and the infinite chain growing at the tail.
pub fn limit_descriptor(lambda: &Weight) -> CoxeterDescriptor {
    let ty = lambda.lie_type();
    let level = lambda.support().max(ty.min_level()) + 4;
    let sub = integral_subsystem_at(lambda, level);
    let offsets = sub.descriptor.offsets();
    let tail_slot = sub.descriptor.components.iter().enumerate().position(|(slot, c)| {
        (offsets[slot] + 1..=offsets[slot] + c.rank)
            .any(|k| sub.root_of(k).max_index() == level)
    });
    let mut components = sub.descriptor.components.clone();
    if let Some(slot) = tail_slot {
        components.remove(slot);
    }
    CoxeterDescriptor {
        components,
        tail: Some(ty),
    }
}
