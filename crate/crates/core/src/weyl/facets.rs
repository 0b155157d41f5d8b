use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lie_data::{pairing_vec, Root, Weight};
use crate::rational::Q;

use super::element::WeylElement;
use super::subsystem::{integral_subsystem, integral_subsystem_at, stable_level, IntegralSubsystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    fn of(x: &Q) -> Sign {
        match x.cmp(&Q::zero()) {
            Ordering::Less => Sign::Neg,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Pos,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }
}

/// Signs of ⟨λ+ρ, α^∨⟩ over the positive integral roots at a level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetSignature {
    pub scope_level: usize,
    pub signature: BTreeMap<Root, Sign>,
}

impl FacetSignature {
    pub fn count(&self, sign: Sign) -> usize {
        self.signature.values().filter(|&&s| s == sign).count()
    }
}

impl fmt::Display for FacetSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "level {}: {}+ {}0 {}-",
            self.scope_level,
            self.count(Sign::Pos),
            self.count(Sign::Zero),
            self.count(Sign::Neg)
        )
    }
}

pub fn facet_signature(lambda: &Weight, scope_level: usize) -> Result<FacetSignature> {
    let sub = integral_subsystem(lambda, scope_level)?;
    Ok(signature_of(lambda, &sub))
}

fn signature_of(lambda: &Weight, sub: &IntegralSubsystem) -> FacetSignature {
    let v = lambda.shifted(sub.level);
    FacetSignature {
        scope_level: sub.level,
        signature: sub
            .positive
            .iter()
            .map(|&a| (a, Sign::of(&pairing_vec(&v, a))))
            .collect(),
    }
}

/// Whether λ and μ have the same integral subsystem and lie in the same
/// facet. The comparison happens at a level past which every root is
/// positive for both weights, so it covers the whole direct limit.
pub fn same_facet(lambda: &Weight, mu: &Weight) -> bool {
    if lambda.lie_type() != mu.lie_type() {
        return false;
    }
    let level = stable_level(lambda).max(stable_level(mu));
    let a = integral_subsystem_at(lambda, level);
    let b = integral_subsystem_at(mu, level);
    a.positive == b.positive && signature_of(lambda, &a) == signature_of(mu, &b)
}

/// Antidominant weight linked to λ inside a given integral subsystem, and
/// the word x with λ = x·ξ. Letters refer to `sub`.
pub(crate) fn antidominant_in(lambda: &Weight, sub: &IntegralSubsystem) -> (Weight, Vec<usize>) {
    let ty = lambda.lie_type();
    let mut v = lambda.shifted(sub.level);
    let mut word = Vec::new();
    while let Some(&beta) = sub
        .simple
        .iter()
        .find(|&&b| pairing_vec(&v, b).is_positive())
    {
        v = WeylElement::reflection(ty, beta).act_vec(&v);
        word.push(sub.letter(beta));
    }
    (Weight::from_shifted(lambda, &v), word)
}

/// Antidominant ξ linked to λ at `level`, with w of minimal length such that
/// w·ξ = λ. Requires λ to be integral at the level.
pub fn antidominant_representative(
    lambda: &Weight,
    level: usize,
) -> Result<(Weight, WeylElement)> {
    let ty = lambda.lie_type();
    let sub = integral_subsystem(lambda, level)?;
    if sub.positive.len() != crate::lie_data::positive_roots_at(ty, level).len() {
        return Err(Error::NotIntegral { level });
    }
    let (xi, word) = antidominant_in(lambda, &sub);
    let w = word.iter().fold(WeylElement::identity(ty), |acc, &k| {
        acc.compose(&WeylElement::reflection(ty, sub.root_of(k)))
    });
    Ok((xi, w))
}
