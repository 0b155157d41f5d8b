//! Classical root data. Each of the four types is the direct limit of its
//! finite-rank truncations; `level` is the number of ε-coordinates kept.
//!
//! Borel orientation: type A uses the usual ε_i − ε_j (i < j). Types B, C and
//! D grow at the tail: positive roots are ε_j ± ε_i for j > i together with
//! ε_i (B) or 2ε_i (C), and the simple roots are
//!
//! * B: ε_1, ε_2 − ε_1, ε_3 − ε_2, ...
//! * C: 2ε_1, ε_2 − ε_1, ...
//! * D: ε_1 + ε_2, ε_2 − ε_1, ε_3 − ε_2, ...
//!
//! With this choice ρ has a level-independent closed form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, q, q_frac, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    pub const ALL: [LieType; 4] = [LieType::A, LieType::B, LieType::C, LieType::D];

    pub fn min_level(self) -> usize {
        match self {
            LieType::D => 2,
            _ => 1,
        }
    }

    pub fn check_level(self, level: usize) -> Result<()> {
        if level < self.min_level() {
            Err(Error::IllegalLevel {
                ty: self,
                level,
                min: self.min_level(),
            })
        } else {
            Ok(())
        }
    }

    /// Number of simple roots at `level`.
    pub fn rank(self, level: usize) -> usize {
        match self {
            LieType::A => level.saturating_sub(1),
            LieType::B | LieType::C => level,
            LieType::D if level < 2 => 0,
            LieType::D => level,
        }
    }

    /// ρ_i, the i-th coordinate of the fixed ρ functional.
    pub fn rho(self, i: usize) -> Q {
        let i = i as i64;
        match self {
            LieType::A => q(-i),
            LieType::B => q_frac(2 * i - 1, 2),
            LieType::C => q(i),
            LieType::D => q(i - 1),
        }
    }

    pub fn letter(self) -> char {
        match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::Parse(format!("unknown type {other:?}"))),
        }
    }
}

/// A finitely supported rational weight in the ε-basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    ty: LieType,
    coords: BTreeMap<usize, Q>,
}

impl Weight {
    pub fn zero(ty: LieType) -> Self {
        Weight {
            ty,
            coords: BTreeMap::new(),
        }
    }

    /// Builds a weight from `(index, value)` pairs; indices are 1-based.
    pub fn new(ty: LieType, coords: impl IntoIterator<Item = (usize, Q)>) -> Self {
        let mut map = BTreeMap::new();
        for (i, v) in coords {
            assert!(i >= 1, "weight indices are 1-based");
            if !v.is_zero() {
                map.insert(i, v);
            }
        }
        Weight { ty, coords: map }
    }

    /// Positional constructor: `values[0]` is the coordinate at index 1.
    pub fn from_slice(ty: LieType, values: &[Q]) -> Self {
        Self::new(ty, values.iter().cloned().enumerate().map(|(i, v)| (i + 1, v)))
    }

    pub fn from_ints(ty: LieType, values: &[i64]) -> Self {
        Self::new(ty, values.iter().enumerate().map(|(i, &v)| (i + 1, q(v))))
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn coord(&self, i: usize) -> Q {
        self.coords.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    /// Largest index with a nonzero coordinate, or 0 for the zero weight.
    pub fn support(&self) -> usize {
        self.coords.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coords.iter().map(|(&i, v)| (i, v))
    }

    pub fn to_vec(&self, level: usize) -> Vec<Q> {
        (1..=level).map(|i| self.coord(i)).collect()
    }

    /// Coordinates of λ + ρ at indices `1..=level`.
    pub fn shifted(&self, level: usize) -> Vec<Q> {
        (1..=level).map(|i| self.coord(i) + self.ty.rho(i)).collect()
    }

    /// Inverse of [`Weight::shifted`] on the first `v.len()` coordinates; the
    /// remaining coordinates are copied from `rest`.
    pub fn from_shifted(rest: &Weight, v: &[Q]) -> Weight {
        let ty = rest.ty;
        let level = v.len();
        let head = v
            .iter()
            .enumerate()
            .map(|(k, x)| (k + 1, x - ty.rho(k + 1)));
        let tail = rest
            .iter()
            .filter(|&(i, _)| i > level)
            .map(|(i, x)| (i, x.clone()));
        Weight::new(ty, head.chain(tail))
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        same_type(self, other)?;
        Ok(self - other)
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        same_type(self, other)?;
        Ok(self + other)
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight::new(self.ty, self.iter().map(|(i, v)| (i, v * c)))
    }

    pub fn is_integral_vector(&self) -> bool {
        self.coords.values().all(|v| v.is_integer())
    }

    /// Positional rendering `3,1/2,0` over indices `1..=len`.
    pub fn positional(&self, len: usize) -> String {
        let len = len.max(1);
        (1..=len)
            .map(|i| format_rational(&self.coord(i)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.positional(self.support()))
    }
}

pub(crate) fn same_type(a: &Weight, b: &Weight) -> Result<()> {
    if a.ty != b.ty {
        return Err(Error::TypeMismatch(format!("{} vs {}", a.ty, b.ty)));
    }
    Ok(())
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.ty, rhs.ty, "adding weights of different types");
        let mut coords = self.coords.clone();
        for (i, v) in rhs.iter() {
            let e = coords.entry(i).or_insert_with(Q::zero);
            *e += v;
        }
        Weight::new(self.ty, coords)
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self + &(-rhs)
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight::new(self.ty, self.iter().map(|(i, v)| (i, -v)))
    }
}

/// A root as an ε-shape. `Diff(i, j)` is ε_i − ε_j and `Sum(i, j)` is
/// ε_i + ε_j with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Root {
    Diff(usize, usize),
    Sum(usize, usize),
    Short(usize),
    Long(usize),
}

impl Root {
    pub fn sum(i: usize, j: usize) -> Root {
        Root::Sum(i.min(j), i.max(j))
    }

    pub fn is_legal(self, ty: LieType) -> bool {
        let indices_ok = match self {
            Root::Diff(i, j) => i >= 1 && j >= 1 && i != j,
            Root::Sum(i, j) => i >= 1 && i < j,
            Root::Short(i) | Root::Long(i) => i >= 1,
        };
        let shape_ok = match (ty, self) {
            (_, Root::Diff(..)) => true,
            (LieType::A, _) => false,
            (_, Root::Sum(..)) => true,
            (LieType::B, Root::Short(_)) => true,
            (LieType::C, Root::Long(_)) => true,
            _ => false,
        };
        indices_ok && shape_ok
    }

    pub fn check(self, ty: LieType) -> Result<()> {
        if self.is_legal(ty) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                ty,
                root: self.to_string(),
            })
        }
    }

    pub fn vector(self) -> Vec<(usize, i64)> {
        match self {
            Root::Diff(i, j) => vec![(i, 1), (j, -1)],
            Root::Sum(i, j) => vec![(i, 1), (j, 1)],
            Root::Short(i) => vec![(i, 1)],
            Root::Long(i) => vec![(i, 2)],
        }
    }

    /// The coroot α^∨ = 2α/(α,α) in ε-coordinates.
    pub fn coroot(self) -> Vec<(usize, i64)> {
        match self {
            Root::Short(i) => vec![(i, 2)],
            Root::Long(i) => vec![(i, 1)],
            other => other.vector(),
        }
    }

    /// Squared length in the standard inner product.
    pub fn norm2(self) -> i64 {
        self.vector().iter().map(|(_, c)| c * c).sum()
    }

    pub fn max_index(self) -> usize {
        match self {
            Root::Diff(i, j) | Root::Sum(i, j) => i.max(j),
            Root::Short(i) | Root::Long(i) => i,
        }
    }

    pub fn indices(self) -> Vec<usize> {
        match self {
            Root::Diff(i, j) | Root::Sum(i, j) => vec![i.min(j), i.max(j)],
            Root::Short(i) | Root::Long(i) => vec![i],
        }
    }

    pub fn is_positive(self, ty: LieType) -> bool {
        vector_is_positive(ty, &self.vector())
    }

    pub fn as_weight(self, ty: LieType) -> Weight {
        Weight::new(ty, self.vector().into_iter().map(|(i, c)| (i, q(c))))
    }

    fn tag(self) -> u8 {
        match self {
            Root::Diff(..) => 0,
            Root::Sum(..) => 1,
            Root::Short(_) => 2,
            Root::Long(_) => 3,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff(i, j) => write!(f, "e{i}-e{j}"),
            Root::Sum(i, j) => write!(f, "e{i}+e{j}"),
            Root::Short(i) => write!(f, "e{i}"),
            Root::Long(i) => write!(f, "2e{i}"),
        }
    }
}

/// Whether a nonzero root vector is positive for the fixed Borel.
pub(crate) fn vector_is_positive(ty: LieType, v: &[(usize, i64)]) -> bool {
    let nonzero = v.iter().filter(|(_, c)| *c != 0);
    let pick = match ty {
        LieType::A => nonzero.min_by_key(|(i, _)| *i),
        _ => nonzero.max_by_key(|(i, _)| *i),
    };
    pick.map(|(_, c)| *c > 0).unwrap_or(false)
}

/// Recovers the positive root and sign from an ε-vector of a root.
pub(crate) fn root_from_vector(ty: LieType, v: &[(usize, i64)]) -> (Root, bool) {
    let mut entries: Vec<(usize, i64)> = v.iter().copied().filter(|(_, c)| *c != 0).collect();
    entries.sort();
    let positive = vector_is_positive(ty, &entries);
    let s = if positive { 1 } else { -1 };
    let root = match entries.as_slice() {
        [(i, c)] if c.abs() == 1 => {
            debug_assert_eq!(*c * s, 1);
            Root::Short(*i)
        }
        [(i, c)] => {
            debug_assert_eq!(*c * s, 2);
            Root::Long(*i)
        }
        [(i, a), (j, b)] => {
            let (a, b) = (a * s, b * s);
            match (a, b) {
                (1, 1) => Root::Sum(*i, *j),
                (1, -1) => Root::Diff(*i, *j),
                (-1, 1) => Root::Diff(*j, *i),
                _ => unreachable!("not a root vector: {v:?}"),
            }
        }
        _ => unreachable!("not a root vector: {v:?}"),
    };
    (root, positive)
}

pub fn simple_root(ty: LieType, k: usize) -> Root {
    assert!(k >= 1);
    match (ty, k) {
        (LieType::A, k) => Root::Diff(k, k + 1),
        (LieType::B, 1) => Root::Short(1),
        (LieType::C, 1) => Root::Long(1),
        (LieType::D, 1) => Root::Sum(1, 2),
        (_, k) => Root::Diff(k, k - 1),
    }
}

pub fn simple_roots(ty: LieType, level: usize) -> Vec<Root> {
    (1..=ty.rank(level)).map(|k| simple_root(ty, k)).collect()
}

/// Positive roots at `level`, ordered by height, then by indices.
pub fn positive_roots(ty: LieType, level: usize) -> Result<Vec<Root>> {
    ty.check_level(level)?;
    Ok(positive_roots_at(ty, level))
}

/// Same as [`positive_roots`] but tolerant of degenerate levels (returns the
/// empty system where the type has no roots yet).
pub(crate) fn positive_roots_at(ty: LieType, level: usize) -> Vec<Root> {
    let mut roots = Vec::new();
    match ty {
        LieType::A => {
            for i in 1..=level {
                for j in i + 1..=level {
                    roots.push(Root::Diff(i, j));
                }
            }
        }
        _ => {
            for j in 1..=level {
                match ty {
                    LieType::B => roots.push(Root::Short(j)),
                    LieType::C => roots.push(Root::Long(j)),
                    _ => {}
                }
                for i in 1..j {
                    roots.push(Root::Diff(j, i));
                    roots.push(Root::Sum(i, j));
                }
            }
        }
    }
    roots.sort_by_key(|&r| (root_height(ty, r), r.indices(), r.tag()));
    roots
}

/// Height of a positive root in simple-root coordinates.
pub fn root_height(ty: LieType, root: Root) -> usize {
    let coeffs = lattice_coords_int(ty, &root.vector()).expect("roots lie in the root lattice");
    coeffs.values().sum::<i64>() as usize
}

/// ⟨λ, α^∨⟩.
pub fn coroot_pairing(lambda: &Weight, alpha: Root) -> Result<Q> {
    alpha.check(lambda.ty)?;
    Ok(alpha
        .coroot()
        .into_iter()
        .map(|(i, c)| lambda.coord(i) * q(c))
        .sum())
}

/// ⟨v, α^∨⟩ for a coordinate vector with `v[0]` at index 1.
pub(crate) fn pairing_vec(v: &[Q], alpha: Root) -> Q {
    alpha
        .coroot()
        .into_iter()
        .map(|(i, c)| &v[i - 1] * q(c))
        .sum()
}

/// ⟨ρ, α^∨⟩ from the closed-form ρ.
pub fn rho_pairing(ty: LieType, alpha: Root) -> Result<Q> {
    alpha.check(ty)?;
    Ok(alpha
        .coroot()
        .into_iter()
        .map(|(i, c)| ty.rho(i) * q(c))
        .sum())
}

/// Simple-root coordinates of δ when δ lies in the root lattice.
pub fn root_lattice_coords(delta: &Weight) -> Option<BTreeMap<usize, BigInt>> {
    if !delta.is_integral_vector() {
        return None;
    }
    let v: BTreeMap<usize, BigInt> = delta
        .iter()
        .map(|(i, x)| (i, x.numer().clone()))
        .collect();
    lattice_coords_big(delta.ty, &v)
}

fn lattice_coords_big(ty: LieType, v: &BTreeMap<usize, BigInt>) -> Option<BTreeMap<usize, BigInt>> {
    let s = v.keys().next_back().copied().unwrap_or(0);
    let get = |i: usize| v.get(&i).cloned().unwrap_or_default();
    let total: BigInt = v.values().sum();
    let suffix = |k: usize| -> BigInt { (k..=s).map(get).sum() };
    let mut out = BTreeMap::new();
    let mut put = |k: usize, c: BigInt| {
        if !c.is_zero() {
            out.insert(k, c);
        }
    };
    match ty {
        LieType::A => {
            if !total.is_zero() {
                return None;
            }
            let mut acc = BigInt::zero();
            for k in 1..s {
                acc += get(k);
                put(k, acc.clone());
            }
        }
        LieType::B => {
            for k in 1..=s {
                put(k, suffix(k));
            }
        }
        LieType::C | LieType::D => {
            if !total.is_even() {
                return None;
            }
            let half: BigInt = &total / 2;
            put(1, half.clone());
            if ty == LieType::C {
                for k in 2..=s {
                    put(k, suffix(k));
                }
            } else {
                put(2, half - get(1));
                for k in 3..=s {
                    put(k, suffix(k));
                }
            }
        }
    }
    Some(out)
}

pub(crate) fn lattice_coords_int(ty: LieType, v: &[(usize, i64)]) -> Option<BTreeMap<usize, i64>> {
    let big: BTreeMap<usize, BigInt> = v
        .iter()
        .filter(|(_, c)| *c != 0)
        .map(|&(i, c)| (i, BigInt::from(c)))
        .collect();
    lattice_coords_big(ty, &big).map(|m| {
        m.into_iter()
            .map(|(k, c)| (k, c.to_i64().expect("small lattice coordinate")))
            .collect()
    })
}

/// Σ c_k α_k as a weight.
pub fn lattice_vector(ty: LieType, coeffs: &BTreeMap<usize, BigInt>) -> Weight {
    let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
    for (&k, c) in coeffs {
        for (i, e) in simple_root(ty, k).vector() {
            *acc.entry(i).or_insert_with(Q::zero) += Q::from_integer(c * BigInt::from(e));
        }
    }
    Weight::new(ty, acc)
}

/// Sum of simple-root coefficients.
pub fn height(coeffs: &BTreeMap<usize, BigInt>) -> BigInt {
    coeffs.values().sum()
}

/// Whether λ − μ is a nonnegative combination of simple roots.
pub fn dominates(lambda: &Weight, mu: &Weight) -> Result<bool> {
    let delta = lambda.checked_sub(mu)?;
    Ok(root_lattice_coords(&delta)
        .map(|c| c.values().all(|x| !x.is_negative()))
        .unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ty: LieType, v: &[i64]) -> Weight {
        Weight::from_ints(ty, v)
    }

    #[test]
    fn positive_roots_small_cases() {
        assert_eq!(positive_roots(LieType::A, 2).unwrap(), vec![Root::Diff(1, 2)]);
        assert_eq!(
            positive_roots(LieType::A, 3).unwrap(),
            vec![Root::Diff(1, 2), Root::Diff(2, 3), Root::Diff(1, 3)]
        );
        let b2 = positive_roots(LieType::B, 2).unwrap();
        assert_eq!(b2.len(), 4);
        for r in [Root::Short(1), Root::Short(2), Root::Diff(2, 1), Root::Sum(1, 2)] {
            assert!(b2.contains(&r));
        }
        assert!(matches!(
            positive_roots(LieType::D, 1),
            Err(Error::IllegalLevel { .. })
        ));
    }

    #[test]
    fn root_counts() {
        for n in 1..=6 {
            assert_eq!(positive_roots_at(LieType::A, n).len(), n * (n - 1) / 2);
            assert_eq!(positive_roots_at(LieType::B, n).len(), n * n);
            assert_eq!(positive_roots_at(LieType::C, n).len(), n * n);
            assert_eq!(positive_roots_at(LieType::D, n).len(), n * (n - 1));
        }
    }

    #[test]
    fn coroot_pairing_examples() {
        for ty in LieType::ALL {
            for alpha in positive_roots_at(ty, 4) {
                let p = coroot_pairing(&alpha.as_weight(ty), alpha).unwrap();
                assert_eq!(p, q(2), "{ty} {alpha}");
                assert_eq!(coroot_pairing(&Weight::zero(ty), alpha).unwrap(), q(0));
            }
        }
        assert_eq!(
            coroot_pairing(&w(LieType::A, &[3, 1]), Root::Diff(1, 2)).unwrap(),
            q(2)
        );
        assert!(matches!(
            coroot_pairing(&w(LieType::A, &[3, 1]), Root::Short(1)),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn rho_pairing_examples() {
        for i in 1..=5 {
            assert_eq!(rho_pairing(LieType::A, Root::Diff(i, i + 1)).unwrap(), q(1));
        }
        assert_eq!(rho_pairing(LieType::B, Root::Short(1)).unwrap(), q(1));
        assert_eq!(rho_pairing(LieType::D, Root::Sum(1, 2)).unwrap(), q(1));
    }

    #[test]
    fn lattice_coordinates() {
        let c = root_lattice_coords(&w(LieType::A, &[1, -1])).unwrap();
        assert_eq!(c, BTreeMap::from([(1, BigInt::from(1))]));
        assert!(root_lattice_coords(&w(LieType::A, &[1, 0])).is_none());
        let c = root_lattice_coords(&w(LieType::B, &[1, 1])).unwrap();
        assert_eq!(c, BTreeMap::from([(1, BigInt::from(2)), (2, BigInt::from(1))]));
        assert!(root_lattice_coords(&w(LieType::C, &[1, 0])).is_none());
        assert!(root_lattice_coords(&w(LieType::D, &[1])).is_none());
        let c = root_lattice_coords(&w(LieType::D, &[2])).unwrap();
        assert_eq!(lattice_vector(LieType::D, &c), w(LieType::D, &[2]));
        assert!(root_lattice_coords(&Weight::from_slice(LieType::B, &[q_frac(1, 2)])).is_none());
    }

    #[test]
    fn heights() {
        assert_eq!(height(&BTreeMap::new()), BigInt::zero());
        let c = BTreeMap::from([(1, BigInt::from(2)), (2, BigInt::from(1))]);
        assert_eq!(height(&c), BigInt::from(3));
        let c = root_lattice_coords(&Root::Diff(1, 3).as_weight(LieType::A)).unwrap();
        assert_eq!(height(&c), BigInt::from(2));
        assert_eq!(root_height(LieType::D, Root::Sum(2, 3)), 3);
        assert_eq!(root_height(LieType::C, Root::Long(2)), 3);
    }

    #[test]
    fn root_vectors_round_trip() {
        for ty in LieType::ALL {
            for alpha in positive_roots_at(ty, 5) {
                let v = alpha.vector();
                assert_eq!(root_from_vector(ty, &v), (alpha, true));
                let neg: Vec<_> = v.iter().map(|&(i, c)| (i, -c)).collect();
                assert_eq!(root_from_vector(ty, &neg), (alpha, false));
            }
        }
    }
}
