//! Depth-truncated formal characters.
//!
//! A [`CharacterSeries`] at level n stores the coefficients of e^{anchor − β}
//! for offsets β = Σ c_k α_k over the level-n simple roots with height
//! Σ c_k ≤ depth. Every positive root of the direct limit with bounded
//! height eventually lies at some finite level, and roots outside level n
//! never contribute to offsets inside it, so a series is the exact
//! character restricted to this window.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie_data::{lattice_coords_int, lattice_vector, positive_roots_at, LieType, Root, Weight};

/// Simple-root coordinates of an offset, ordered by height and then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Offset(pub Vec<u32>);

impl Offset {
    pub fn zero(rank: usize) -> Self {
        Offset(vec![0; rank])
    }

    pub fn height(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    fn checked_sub(&self, other: &[u32]) -> Option<Offset> {
        self.0
            .iter()
            .zip(other)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Offset)
    }

    fn add(&self, other: &Offset) -> Offset {
        Offset(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Σ c_k α_k as a weight.
    pub fn to_weight(&self, ty: LieType) -> Weight {
        let coeffs = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k + 1, BigInt::from(c)))
            .collect();
        lattice_vector(ty, &coeffs)
    }
}

impl Ord for Offset {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.height(), &self.0).cmp(&(other.height(), &other.0))
    }
}

impl PartialOrd for Offset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Offset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Offset vector of a positive root at a level.
pub fn root_offset(ty: LieType, level: usize, alpha: Root) -> Offset {
    let coords = lattice_coords_int(ty, &alpha.vector()).expect("roots lie in the lattice");
    let mut v = vec![0u32; ty.rank(level)];
    for (k, c) in coords {
        v[k - 1] = c as u32;
    }
    Offset(v)
}

/// All offsets of rank `rank` with height ≤ `depth`, in series order.
pub fn window(rank: usize, depth: usize) -> Vec<Offset> {
    fn rec(rank: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Offset>) {
        if cur.len() == rank {
            out.push(Offset(cur.clone()));
            return;
        }
        for c in 0..=left {
            cur.push(c);
            rec(rank, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, depth as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSeries {
    ty: LieType,
    anchor: Weight,
    level: usize,
    depth: usize,
    coeffs: BTreeMap<Offset, BigInt>,
}

impl CharacterSeries {
    /// The series e^{anchor}.
    pub fn monomial(anchor: Weight, depth: usize, level: usize) -> Self {
        let ty = anchor.lie_type();
        let rank = ty.rank(level);
        CharacterSeries {
            ty,
            anchor,
            level,
            depth,
            coeffs: BTreeMap::from([(Offset::zero(rank), BigInt::one())]),
        }
    }

    pub fn from_coeffs(
        anchor: Weight,
        depth: usize,
        level: usize,
        coeffs: impl IntoIterator<Item = (Offset, BigInt)>,
    ) -> Self {
        let ty = anchor.lie_type();
        let rank = ty.rank(level);
        let coeffs = coeffs
            .into_iter()
            .filter(|(o, c)| {
                assert_eq!(o.rank(), rank, "offset rank does not match the level");
                !c.is_zero() && o.height() as usize <= depth
            })
            .collect();
        CharacterSeries {
            ty,
            anchor,
            level,
            depth,
            coeffs,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn anchor(&self) -> &Weight {
        &self.anchor
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn rank(&self) -> usize {
        self.ty.rank(self.level)
    }

    pub fn coeff(&self, beta: &Offset) -> BigInt {
        self.coeffs.get(beta).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &BTreeMap<Offset, BigInt> {
        &self.coeffs
    }

    /// Terms as (weight, coefficient) in series order.
    pub fn terms(&self) -> Vec<(Weight, BigInt)> {
        self.coeffs
            .iter()
            .map(|(o, c)| (&self.anchor - &o.to_weight(self.ty), c.clone()))
            .collect()
    }

    pub fn truncate(&self, depth: usize) -> Self {
        let depth = depth.min(self.depth);
        Self::from_coeffs(self.anchor.clone(), depth, self.level, self.coeffs.clone())
    }

    /// The same series viewed at a higher level, with offsets padded.
    pub fn embed(&self, level: usize) -> Result<Self> {
        if level < self.level {
            return Err(Error::ScopeTooSmall {
                scope: level,
                needed: self.level,
            });
        }
        let rank = self.ty.rank(level);
        let coeffs = self.coeffs.iter().map(|(o, c)| {
            let mut v = o.0.clone();
            v.resize(rank, 0);
            (Offset(v), c.clone())
        });
        Ok(Self::from_coeffs(self.anchor.clone(), self.depth, level, coeffs))
    }

    /// Formal duality fixes characters.
    pub fn dual(&self) -> Self {
        self.clone()
    }

    /// self + c · (series shifted down by β). Both series must share type and
    /// level; the shifted anchor is `self.anchor − β`.
    pub fn add_shifted(&mut self, other: &CharacterSeries, beta: &Offset, c: &BigInt) -> Result<()> {
        self.check_compatible(other)?;
        for (o, x) in &other.coeffs {
            let key = o.add(beta);
            if key.height() as usize > self.depth {
                continue;
            }
            let e = self.coeffs.entry(key).or_default();
            *e += x * c;
        }
        self.coeffs.retain(|_, v| !v.is_zero());
        Ok(())
    }

    fn check_compatible(&self, other: &CharacterSeries) -> Result<()> {
        if self.ty != other.ty {
            return Err(Error::TypeMismatch(format!("{} vs {}", self.ty, other.ty)));
        }
        if self.level != other.level {
            return Err(Error::TypeMismatch(format!(
                "levels {} and {}",
                self.level, other.level
            )));
        }
        Ok(())
    }
}

impl fmt::Display for CharacterSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.level.max(self.anchor.support());
        for (w, c) in self.terms() {
            writeln!(f, "{} {c}", w.positional(len))?;
        }
        Ok(())
    }
}

/// Truncated product, anchored at the sum of the anchors.
pub fn mul(c1: &CharacterSeries, c2: &CharacterSeries, depth: usize) -> Result<CharacterSeries> {
    c1.check_compatible(c2)?;
    let depth = depth.min(c1.depth).min(c2.depth);
    let mut out: BTreeMap<Offset, BigInt> = BTreeMap::new();
    for (a, x) in &c1.coeffs {
        for (b, y) in &c2.coeffs {
            let o = a.add(b);
            if o.height() as usize <= depth {
                *out.entry(o).or_default() += x * y;
            }
        }
    }
    Ok(CharacterSeries::from_coeffs(
        &c1.anchor + &c2.anchor,
        depth,
        c1.level,
        out,
    ))
}

fn check_level(ty: LieType, level: usize, lambda: Option<&Weight>) -> Result<()> {
    ty.check_level(level)?;
    if let Some(l) = lambda {
        if level < l.support() {
            return Err(Error::ScopeTooSmall {
                scope: level,
                needed: l.support(),
            });
        }
    }
    Ok(())
}

/// Π 1/(1 − e^{−α}) over `roots`, as coefficients on the window.
fn partition_table(ty: LieType, level: usize, roots: &[Root], depth: usize) -> BTreeMap<Offset, BigInt> {
    let rank = ty.rank(level);
    let win = window(rank, depth);
    let mut table: BTreeMap<Offset, BigInt> = BTreeMap::new();
    table.insert(Offset::zero(rank), BigInt::one());
    for &alpha in roots {
        let a = root_offset(ty, level, alpha);
        if a.height() as usize > depth {
            continue;
        }
        // unbounded knapsack: increasing order reuses the root
        for beta in &win {
            if let Some(rest) = beta.checked_sub(&a.0) {
                if let Some(v) = table.get(&rest).cloned() {
                    *table.entry(beta.clone()).or_default() += v;
                }
            }
        }
    }
    table.retain(|_, v| !v.is_zero());
    table
}

/// Number of multisets of positive roots at `level` summing to β.
pub fn kostant_partition(beta: &Offset, ty: LieType, level: usize) -> Result<BigInt> {
    check_level(ty, level, None)?;
    if beta.rank() != ty.rank(level) {
        return Err(Error::TypeMismatch(format!(
            "offset of rank {} at level {level} of type {ty}",
            beta.rank()
        )));
    }
    let depth = beta.height() as usize;
    let roots: Vec<Root> = positive_roots_at(ty, level)
        .into_iter()
        .filter(|&a| {
            root_offset(ty, level, a)
                .0
                .iter()
                .zip(&beta.0)
                .all(|(x, y)| x <= y)
        })
        .collect();
    let table = partition_table(ty, level, &roots, depth);
    Ok(table.get(beta).cloned().unwrap_or_default())
}

/// ch Δ(λ) truncated to `depth` at `level`.
pub fn verma_character(lambda: &Weight, depth: usize, level: usize) -> Result<CharacterSeries> {
    let ty = lambda.lie_type();
    check_level(ty, level, Some(lambda))?;
    let table = partition_table(ty, level, &positive_roots_at(ty, level), depth);
    Ok(CharacterSeries::from_coeffs(lambda.clone(), depth, level, table))
}

/// A series anchored at 0, used for q = Π (e⁰ − e^{−α}).
pub type DenominatorSeries = CharacterSeries;

/// Π (e⁰ − e^{−α}) over the positive roots at `level`, truncated.
pub fn denominator_q(ty: LieType, depth: usize, level: usize) -> Result<DenominatorSeries> {
    check_level(ty, level, None)?;
    let rank = ty.rank(level);
    let mut win = window(rank, depth);
    win.reverse();
    let mut table: BTreeMap<Offset, BigInt> = BTreeMap::new();
    table.insert(Offset::zero(rank), BigInt::one());
    for alpha in positive_roots_at(ty, level) {
        let a = root_offset(ty, level, alpha);
        if a.height() as usize > depth {
            continue;
        }
        // 0/1 knapsack with sign: decreasing order uses each root once
        for beta in &win {
            if let Some(rest) = beta.checked_sub(&a.0) {
                if let Some(v) = table.get(&rest).cloned() {
                    *table.entry(beta.clone()).or_default() -= v;
                }
            }
        }
    }
    Ok(CharacterSeries::from_coeffs(Weight::zero(ty), depth, level, table))
}

/// Coefficients of ch · q: the multiplicity of Δ(anchor − β) in a module
/// with a standard filtration and character `ch`.
pub fn standard_multiplicities(ch: &CharacterSeries) -> Result<BTreeMap<Offset, BigInt>> {
    let q = denominator_q(ch.ty, ch.depth, ch.level)?;
    Ok(mul(ch, &q, ch.depth)?.coeffs)
}

/// Restriction of Δ(λ) at `ambient_level` to the level-n subalgebra: the
/// coefficient at β is the multiplicity of Δ^{(n)}(λ − β), i.e. the number
/// of multisets of roots outside level n summing to β.
pub fn branch_verma(
    lambda: &Weight,
    n: usize,
    depth: usize,
    ambient_level: usize,
) -> Result<CharacterSeries> {
    let ty = lambda.lie_type();
    check_level(ty, ambient_level, Some(lambda))?;
    if n > ambient_level {
        return Err(Error::ScopeTooSmall {
            scope: ambient_level,
            needed: n,
        });
    }
    let inner = positive_roots_at(ty, n);
    let complement: Vec<Root> = positive_roots_at(ty, ambient_level)
        .into_iter()
        .filter(|a| !inner.contains(a))
        .collect();
    let table = partition_table(ty, ambient_level, &complement, depth);
    Ok(CharacterSeries::from_coeffs(lambda.clone(), depth, ambient_level, table))
}
