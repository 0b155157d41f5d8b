//! Multiplicities in regular blocks: Verma factors of tilting modules,
//! composition factors of Verma modules, and the surrounding bookkeeping
//! (n₀, weight classes, translation admissibility, block matching).
//!
//! Everything runs at a finite level n. Coordinates past n are spectators:
//! the level-n Weyl group does not touch them, so the level-n dot action and
//! integral subsystem only read the first n coordinates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::charring::{verma_character, window, CharacterSeries, Offset};
use crate::error::{Error, Result};
use crate::kl::{canonical_word, kl_at_one, longest_word, KlCache};
use crate::lie_data::{lattice_coords_int, root_lattice_coords, same_type, LieType, Weight};
use crate::rational::{is_integer, Q};
use crate::weyl::{
    antidominant_in, dot_stabilizer, integral_subsystem_at, limit_descriptor, same_block,
    same_facet, stable_level, subsystem_from_positive, CoxeterDescriptor, IntegralSubsystem,
    WeylElement,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDiagnostics {
    pub same_block: bool,
    pub regular: bool,
    /// Coxeter type of the integral Weyl group at the working level.
    pub descriptor: CoxeterDescriptor,
}

/// λ = x·ξ and μ = y·ξ with ξ antidominant; words use the letters of the
/// integral descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub xi: Weight,
    pub x_word: Vec<usize>,
    pub y_word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub value: BigInt,
    pub stabilization_level: usize,
    pub diagnostics: BlockDiagnostics,
    pub witness: Witness,
}

/// Smallest level whose root lattice contains λ − μ.
pub fn n0(lambda: &Weight, mu: &Weight) -> Result<usize> {
    same_type(lambda, mu)?;
    let delta = lambda - mu;
    if root_lattice_coords(&delta).is_none() {
        return Err(Error::NotInRootLattice);
    }
    if delta.is_zero() {
        return Ok(1);
    }
    Ok(delta.support().max(lambda.lie_type().min_level()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightClass {
    pub integral: bool,
    pub dominant_integral: bool,
    pub nonintegral: bool,
    pub almost_nonintegral: bool,
    pub restricted: bool,
}

/// Integrality flags of λ in the direct limit.
///
/// A finite-support weight pairs to 0 with every root living past its
/// support, so infinitely many pairings are integral: such a weight is never
/// nonintegral or almost nonintegral, and it is always restricted. It is
/// integral exactly when every coordinate is an integer; B, C and D force
/// this through ⟨λ, ε_i ± ε_j⟩ with j in the tail.
pub fn classify_weight(lambda: &Weight, scope_level: usize) -> Result<WeightClass> {
    let ty = lambda.lie_type();
    ty.check_level(scope_level)?;
    if scope_level < lambda.support() {
        return Err(Error::ScopeTooSmall {
            scope: scope_level,
            needed: lambda.support(),
        });
    }
    let integral = lambda.iter().all(|(_, x)| is_integer(x));
    let dominant_integral = integral
        && match ty {
            // λ_1 ≥ λ_2 ≥ … ≥ 0, the last inequality against the tail
            LieType::A => {
                let v = lambda.to_vec(lambda.support());
                v.iter().all(|x| !x.is_negative()) && v.windows(2).all(|w| w[0] >= w[1])
            }
            // ε_k ± ε_j with k in the tail force every λ_j to vanish
            _ => lambda.is_zero(),
        };
    Ok(WeightClass {
        integral,
        dominant_integral,
        nonintegral: false,
        almost_nonintegral: false,
        restricted: true,
    })
}

/// Outcome of the W-stability test on a truncated character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrabilityCheck {
    pub integrable: bool,
    /// Reflected weights that fell outside the truncation window.
    pub skipped: Vec<Weight>,
}

/// Whether the support of `ch` is stable under the simple reflections at
/// `level`, as far as the window can tell. A reflected weight not below the
/// anchor cannot be a weight of the module; one below the anchor but deeper
/// than the window is skipped.
pub fn is_integrable_character(ch: &CharacterSeries, level: usize) -> Result<IntegrabilityCheck> {
    let ty = ch.lie_type();
    ty.check_level(level)?;
    let rank = ch.rank();
    let mut skipped = Vec::new();
    for (beta, _) in ch.coeffs() {
        let nu = ch.anchor() - &beta.to_weight(ty);
        for k in 1..=ty.rank(level) {
            let image = WeylElement::simple_reflection(ty, k).act(&nu)?;
            let Some(coords) = root_lattice_coords(&(ch.anchor() - &image)) else {
                return Ok(IntegrabilityCheck { integrable: false, skipped });
            };
            if coords.values().any(|c| c.is_negative()) || coords.keys().any(|&j| j > rank) {
                return Ok(IntegrabilityCheck { integrable: false, skipped });
            }
            let mut off = vec![0u32; rank];
            for (j, c) in coords {
                off[j - 1] = u32::try_from(c).expect("window offsets are small");
            }
            let off = Offset(off);
            if off.height() as usize > ch.depth() {
                skipped.push(image);
                continue;
            }
            if ch.coeff(&off).is_zero() {
                return Ok(IntegrabilityCheck { integrable: false, skipped });
            }
        }
    }
    skipped.sort_by(|a, b| a.to_vec(level).cmp(&b.to_vec(level)));
    skipped.dedup();
    Ok(IntegrabilityCheck { integrable: true, skipped })
}

/// Validated data of a pair (λ, μ) in one regular block at a level.
struct Pair {
    sub: IntegralSubsystem,
    xi: Weight,
    x: Vec<usize>,
    y: Vec<usize>,
}

fn regular_pair(lambda: &Weight, mu: &Weight, level: Option<usize>) -> Result<(Pair, usize)> {
    same_type(lambda, mu)?;
    let Some(delta) = root_lattice_coords(&(lambda - mu)) else {
        return Err(Error::DifferentBlocks);
    };
    if delta.values().any(|c| c.is_negative()) {
        return Err(Error::NotComparable);
    }
    if !same_block(lambda, mu)? {
        return Err(Error::DifferentBlocks);
    }
    let stab = dot_stabilizer(lambda, stable_level(lambda));
    if !stab.is_empty() {
        return Err(Error::SingularBlockUnsupported {
            level: stable_level(lambda),
            roots: stab.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "),
        });
    }
    let start = n0(lambda, mu)?;
    let level = match level {
        Some(l) if l < start => {
            return Err(Error::ScopeTooSmall {
                scope: l,
                needed: start,
            })
        }
        Some(l) => l,
        None => start,
    };
    let sub = integral_subsystem_at(lambda, level);
    let (xi, x) = antidominant_in(lambda, &sub);
    let (xi_mu, y) = antidominant_in(mu, &sub);
    if xi != xi_mu {
        return Err(Error::DifferentBlocks);
    }
    Ok((Pair { sub, xi, x, y }, level))
}

fn report(pair: Pair, value: BigInt, level: usize, cache: &mut KlCache) -> Result<MultiplicityReport> {
    let desc = &pair.sub.descriptor;
    Ok(MultiplicityReport {
        value,
        stabilization_level: level,
        diagnostics: BlockDiagnostics {
            same_block: true,
            regular: true,
            descriptor: desc.clone(),
        },
        witness: Witness {
            x_word: canonical_word(&pair.x, desc, cache)?,
            y_word: canonical_word(&pair.y, desc, cache)?,
            xi: pair.xi,
        },
    })
}

/// {D(λ) : Δ(μ)} = P_{y,x}(1), computed at n₀(μ, λ). Tilting modules are
/// self-dual, so this is also {D(λ) : ∇(μ)}.
pub fn verma_in_tilting(lambda: &Weight, mu: &Weight, cache: &mut KlCache) -> Result<MultiplicityReport> {
    tilting_at(lambda, mu, None, cache)
}

/// [`verma_in_tilting`] at a fixed level ≥ n₀.
pub fn verma_in_tilting_at(
    lambda: &Weight,
    mu: &Weight,
    level: usize,
    cache: &mut KlCache,
) -> Result<MultiplicityReport> {
    tilting_at(lambda, mu, Some(level), cache)
}

fn tilting_at(
    lambda: &Weight,
    mu: &Weight,
    level: Option<usize>,
    cache: &mut KlCache,
) -> Result<MultiplicityReport> {
    let (pair, level) = regular_pair(lambda, mu, level)?;
    let value = kl_at_one(&pair.y, &pair.x, &pair.sub.descriptor, cache)?;
    report(pair, value, level, cache)
}

/// [Δ(λ) : L(μ)] = P_{w₀x, w₀y}(1) for λ = x·ξ and μ = y·ξ.
pub fn verma_composition_mult(
    lambda: &Weight,
    mu: &Weight,
    cache: &mut KlCache,
) -> Result<MultiplicityReport> {
    composition_at(lambda, mu, None, cache)
}

/// [`verma_composition_mult`] at a fixed level ≥ n₀.
pub fn verma_composition_mult_at(
    lambda: &Weight,
    mu: &Weight,
    level: usize,
    cache: &mut KlCache,
) -> Result<MultiplicityReport> {
    composition_at(lambda, mu, Some(level), cache)
}

fn composition_at(
    lambda: &Weight,
    mu: &Weight,
    level: Option<usize>,
    cache: &mut KlCache,
) -> Result<MultiplicityReport> {
    let (pair, level) = regular_pair(lambda, mu, level)?;
    let w0 = longest_word(&pair.sub.descriptor, cache)?;
    let prefixed = |w: &[usize]| [w0.as_slice(), w].concat();
    let value = kl_at_one(&prefixed(&pair.x), &prefixed(&pair.y), &pair.sub.descriptor, cache)?;
    report(pair, value, level, cache)
}

/// Longest element of the integral Weyl group of λ at a level.
fn integral_longest(lambda: &Weight, level: usize, cache: &mut KlCache) -> Result<WeylElement> {
    let ty = lambda.lie_type();
    let sub = integral_subsystem_at(lambda, level);
    let word = longest_word(&sub.descriptor, cache)?;
    Ok(word.iter().fold(WeylElement::identity(ty), |acc, &k| {
        acc.compose(&WeylElement::reflection(ty, sub.root_of(k)))
    }))
}

/// Compares {D(λ):Δ(μ)} with [Δ(w₀·μ) : L(w₀·λ)], where w₀ is the longest
/// element of the integral Weyl group at n₀.
pub fn reciprocity_check(lambda: &Weight, mu: &Weight, cache: &mut KlCache) -> Result<bool> {
    let direct = verma_in_tilting(lambda, mu, cache)?;
    let level = direct.stabilization_level;
    let w0 = integral_longest(lambda, level, cache)?;
    let (l2, m2) = (w0.dot(lambda)?, w0.dot(mu)?);
    let other = verma_composition_mult_at(&m2, &l2, level, cache)?;
    Ok(direct.value == other.value)
}

/// ch D(λ) at `level`, truncated to `depth`: the sum of
/// {D(λ):Δ(μ)} ch Δ(μ) over μ in the block with height(λ − μ) ≤ depth.
pub fn tilting_character(
    lambda: &Weight,
    depth: usize,
    level: usize,
    cache: &mut KlCache,
) -> Result<CharacterSeries> {
    let ty = lambda.lie_type();
    let verma = verma_character(lambda, depth, level)?;
    let stab = dot_stabilizer(lambda, stable_level(lambda));
    if !stab.is_empty() {
        return Err(Error::SingularBlockUnsupported {
            level: stable_level(lambda),
            roots: stab.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "),
        });
    }
    let mut out = CharacterSeries::from_coeffs(lambda.clone(), depth, level, []);
    for beta in window(ty.rank(level), depth) {
        let mu = lambda - &beta.to_weight(ty);
        if !same_block(lambda, &mu)? {
            continue;
        }
        let m = verma_in_tilting(lambda, &mu, cache)?.value;
        if !m.is_zero() {
            out.add_shifted(&verma, &beta, &m)?;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationVerdict {
    pub admissible: bool,
    pub reasons: Vec<Condition>,
    pub dominant_rep: Option<Weight>,
}

/// Conditions for translation from λ to μ to be an equivalence: λ ∥ μ,
/// equal integral subsystems, and a common facet.
pub fn translation_check(lambda: &Weight, mu: &Weight) -> TranslationVerdict {
    let mut reasons = Vec::new();
    if lambda.lie_type() != mu.lie_type() {
        reasons.push(Condition {
            name: "compatible",
            passed: false,
            detail: format!("types {} and {}", lambda.lie_type(), mu.lie_type()),
        });
        return TranslationVerdict {
            admissible: false,
            reasons,
            dominant_rep: None,
        };
    }
    let delta = lambda - mu;
    let in_lattice = root_lattice_coords(&delta).is_some();
    reasons.push(Condition {
        name: "compatible",
        passed: in_lattice,
        detail: if in_lattice {
            format!("λ−μ = {delta} lies in the root lattice and is restricted")
        } else {
            format!("λ−μ = {delta} is not in the root lattice")
        },
    });
    let level = stable_level(lambda).max(stable_level(mu));
    let a = integral_subsystem_at(lambda, level);
    let b = integral_subsystem_at(mu, level);
    let equal = a.positive == b.positive;
    reasons.push(Condition {
        name: "integral_subsystem",
        passed: equal,
        detail: format!("{} vs {} at level {level}", a.descriptor, b.descriptor),
    });
    let facet = same_facet(lambda, mu);
    reasons.push(Condition {
        name: "same_facet",
        passed: facet,
        detail: if facet {
            "sign patterns agree".into()
        } else {
            "sign patterns differ".into()
        },
    });
    let admissible = reasons.iter().all(|c| c.passed);
    TranslationVerdict {
        admissible,
        dominant_rep: admissible.then(|| dominant_in_orbit(&delta)),
        reasons,
    }
}

/// The dominant element of the orbit of δ under the Weyl group at the
/// smallest level containing it.
pub fn dominant_in_orbit(delta: &Weight) -> Weight {
    let ty = delta.lie_type();
    if delta.is_zero() {
        return Weight::zero(ty);
    }
    let n = delta.support().max(ty.min_level());
    let mut v = delta.to_vec(n);
    match ty {
        LieType::A => v.sort_by(|a, b| b.cmp(a)),
        LieType::B | LieType::C => {
            v = v.iter().map(|x| x.abs()).collect();
            v.sort();
        }
        LieType::D => {
            let odd = v.iter().filter(|x| x.is_negative()).count() % 2 == 1;
            let zero = v.iter().any(|x| x.is_zero());
            v = v.iter().map(|x| x.abs()).collect();
            v.sort();
            if odd && !zero {
                v[0] = -v[0].clone();
            }
        }
    }
    Weight::from_slice(ty, &v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatch {
    /// Common canonical type of the integral Weyl groups.
    pub descriptor: CoxeterDescriptor,
    /// Canonical types of the dot stabilizers of λ and λ′.
    pub stabilizers: (CoxeterDescriptor, CoxeterDescriptor),
    pub stabilizers_match: bool,
}

impl fmt::Display for BlockMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (stabilizers {} / {}, {})",
            self.descriptor,
            self.stabilizers.0,
            self.stabilizers.1,
            if self.stabilizers_match { "matched" } else { "unmatched" }
        )
    }
}

/// Matches (W[λ], S[λ]) with (W[λ′], S[λ′]) up to Coxeter isomorphism and
/// compares the dot stabilizers; `None` when the integral types differ.
pub fn block_equivalence_hint(lambda: &Weight, lambda2: &Weight) -> Option<BlockMatch> {
    if lambda.lie_type() != lambda2.lie_type() {
        return None;
    }
    let d1 = limit_descriptor(lambda).canonical();
    let d2 = limit_descriptor(lambda2).canonical();
    if d1 != d2 {
        return None;
    }
    let ty = lambda.lie_type();
    let level = stable_level(lambda).max(stable_level(lambda2));
    let stab = |w: &Weight| {
        subsystem_from_positive(ty, level, dot_stabilizer(w, level))
            .descriptor
            .canonical()
    };
    let (s1, s2) = (stab(lambda), stab(lambda2));
    Some(BlockMatch {
        descriptor: d1,
        stabilizers_match: s1 == s2,
        stabilizers: (s1, s2),
    })
}

/// Simple-root coordinates of λ − μ at a level, if it is a nonnegative
/// combination there.
pub fn offset_between(lambda: &Weight, mu: &Weight, level: usize) -> Option<Offset> {
    let ty = lambda.lie_type();
    let delta = (lambda - mu).to_vec(level.max(lambda.support()).max(mu.support()));
    let as_int: Option<Vec<(usize, i64)>> = delta
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| to_i64(x).map(|c| (i + 1, c)))
        .collect();
    let coords: BTreeMap<usize, i64> = lattice_coords_int(ty, &as_int?)?;
    let rank = ty.rank(level);
    let mut v = vec![0u32; rank];
    for (k, c) in coords {
        if k > rank || c < 0 {
            return None;
        }
        v[k - 1] = c as u32;
    }
    Some(Offset(v))
}

fn to_i64(x: &Q) -> Option<i64> {
    x.is_integer().then(|| i64::try_from(x.to_integer()).ok()).flatten()
}
