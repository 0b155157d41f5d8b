//! Bruhat order and Kazhdan–Lusztig polynomials on finite Weyl groups and
//! their products.
//!
//! Elements are named by words in the product alphabet of a
//! [`CoxeterDescriptor`]: letters `1..=r₁` belong to the first component,
//! the next `r₂` letters to the second, and so on. Polynomials of products
//! are products of componentwise polynomials.

mod cache;
mod engine;
mod group;
mod mu;
mod poly;

pub use cache::{CacheKey, KlCache, CACHE_DIR_ENV, CACHE_FILE};
pub use engine::KlEngine;
pub use group::{CoxeterGroup, ORDER_LIMIT};
pub use mu::{MuTable, TABLE_LIMIT};
pub use poly::KlPolynomial;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lie_data::LieType;
use crate::weyl::{CoxeterComponent, CoxeterDescriptor, WeylElement};

/// Parses `"1 2 1"` (spaces or commas); `""` and `"e"` are the identity.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k),
            _ => Err(Error::Parse(format!("bad letter {t:?} in word {s:?}"))),
        })
        .collect()
}

/// Splits words into canonical irreducible pieces.
fn pieces(
    scope: &CoxeterDescriptor,
    words: [&[usize]; 2],
) -> Result<Vec<(CoxeterComponent, [Vec<usize>; 2])>> {
    if scope.tail.is_some() {
        return Err(Error::OutOfScope(format!("{scope} is infinite")));
    }
    let (canon, letters) = scope.canonicalize();
    if canon.order() > ORDER_LIMIT {
        return Err(Error::ScaleGuardrail {
            descriptor: canon.to_string(),
            limit: ORDER_LIMIT,
        });
    }
    let remap = |w: &[usize]| -> Result<Vec<usize>> {
        w.iter()
            .map(|&k| {
                letters
                    .get(k.wrapping_sub(1))
                    .copied()
                    .ok_or_else(|| Error::OutOfScope(format!("letter {k} outside {scope}")))
            })
            .collect()
    };
    let x = canon.split_word(&remap(words[0])?)?;
    let y = canon.split_word(&remap(words[1])?)?;
    Ok(canon
        .components
        .iter()
        .zip(x.into_iter().zip(y))
        .map(|(&c, (a, b))| (c, [a, b]))
        .collect())
}

/// Bruhat order on words of a descriptor.
pub fn bruhat_leq_words(
    x: &[usize],
    y: &[usize],
    scope: &CoxeterDescriptor,
    cache: &mut KlCache,
) -> Result<bool> {
    for (c, [a, b]) in pieces(scope, [x, y])? {
        let g = cache.engine(c)?.group();
        if !g.leq(g.element(&a)?, g.element(&b)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Bruhat order for elements of the standard realization of an irreducible
/// descriptor (the ambient Weyl group at the matching level).
pub fn bruhat_leq(x: &WeylElement, y: &WeylElement, scope: &CoxeterDescriptor) -> Result<bool> {
    let [component] = scope.components[..] else {
        return Err(Error::OutOfScope(format!(
            "{scope} is not an irreducible finite descriptor"
        )));
    };
    if scope.tail.is_some() {
        return Err(Error::OutOfScope(format!("{scope} is infinite")));
    }
    check_realization(component, x)?;
    check_realization(component, y)?;
    let mut cache = KlCache::in_memory();
    bruhat_leq_words(&x.reduced_word(), &y.reduced_word(), scope, &mut cache)
}

fn check_realization(c: CoxeterComponent, w: &WeylElement) -> Result<()> {
    let ty = w.lie_type();
    let same = ty == c.kind
        || matches!((ty, c.kind), (LieType::B | LieType::C, LieType::B | LieType::C));
    let degree = if c.kind == LieType::A { c.rank + 1 } else { c.rank };
    if !same || w.support() > degree {
        return Err(Error::OutOfScope(format!("{w} is not an element of {c}")));
    }
    Ok(())
}

/// P_{x,y} for words in the alphabet of `scope`; zero unless x ≤ y.
pub fn kl_polynomial(
    x: &[usize],
    y: &[usize],
    scope: &CoxeterDescriptor,
    cache: &mut KlCache,
) -> Result<KlPolynomial> {
    let mut acc = KlPolynomial::one();
    for (c, [a, b]) in pieces(scope, [x, y])? {
        let p = cache.component_polynomial(c, &a, &b)?;
        if p.is_zero() {
            return Ok(p);
        }
        acc = acc.mul(&p);
    }
    Ok(acc)
}

/// P_{x,y}(1).
pub fn kl_at_one(
    x: &[usize],
    y: &[usize],
    scope: &CoxeterDescriptor,
    cache: &mut KlCache,
) -> Result<BigInt> {
    Ok(kl_polynomial(x, y, scope, cache)?.at_one())
}

/// Lexicographically least reduced word of the element named by `word`.
pub fn canonical_word(word: &[usize], scope: &CoxeterDescriptor, cache: &mut KlCache) -> Result<Vec<usize>> {
    let (canon, letters) = scope.canonicalize();
    let mut back = vec![0; letters.len()];
    for (old, &new) in letters.iter().enumerate() {
        back[new - 1] = old + 1;
    }
    let offsets = canon.offsets();
    let mut out = Vec::new();
    for (slot, (c, [a, _])) in pieces(scope, [word, &[]])?.into_iter().enumerate() {
        let g = cache.engine(c)?.group();
        let reduced = g.word(g.element(&a)?);
        // letters of different components commute, so concatenation is fine
        out.extend(reduced.into_iter().map(|k| back[offsets[slot] + k - 1]));
    }
    Ok(out)
}

/// Lexicographically least reduced word of the longest element.
pub fn longest_word(scope: &CoxeterDescriptor, cache: &mut KlCache) -> Result<Vec<usize>> {
    let (canon, letters) = scope.canonicalize();
    let mut back = vec![0; letters.len()];
    for (old, &new) in letters.iter().enumerate() {
        back[new - 1] = old + 1;
    }
    let offsets = canon.offsets();
    let mut out = Vec::new();
    for (slot, (c, _)) in pieces(scope, [&[], &[]])?.into_iter().enumerate() {
        let g = cache.engine(c)?.group();
        out.extend(g.word(g.longest()).into_iter().map(|k| back[offsets[slot] + k - 1]));
    }
    Ok(out)
}
