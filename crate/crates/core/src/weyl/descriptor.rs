use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lie_data::LieType;

/// One irreducible finite Coxeter component, named by the classical type of
/// its Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterComponent {
    pub kind: LieType,
    pub rank: usize,
}

impl CoxeterComponent {
    pub fn new(kind: LieType, rank: usize) -> Self {
        CoxeterComponent { kind, rank }
    }

    /// Order of the Weyl group, saturating at `u64::MAX`.
    pub fn order(self) -> u64 {
        let fact = |n: usize| (1..=n as u64).try_fold(1u64, |a, b| a.checked_mul(b));
        let r = self.rank;
        match self.kind {
            LieType::A => fact(r + 1),
            LieType::B | LieType::C => {
                fact(r).and_then(|f| 1u64.checked_shl(r as u32).and_then(|p| p.checked_mul(f)))
            }
            LieType::D => fact(r).and_then(|f| {
                1u64.checked_shl(r.saturating_sub(1) as u32)
                    .and_then(|p| p.checked_mul(f))
            }),
        }
        .unwrap_or(u64::MAX)
    }

    /// Canonical form as a list of components together with where each
    /// letter goes: `letters[k - 1] = (component slot, letter in it)`.
    fn canonical_parts(self) -> (Vec<CoxeterComponent>, Vec<(usize, usize)>) {
        let r = self.rank;
        let same = |kind| {
            (
                vec![CoxeterComponent::new(kind, r)],
                (1..=r).map(|k| (0, k)).collect(),
            )
        };
        match (self.kind, r) {
            (_, 1) => same(LieType::A),
            (LieType::C, _) => same(LieType::B),
            (LieType::D, 2) => (
                vec![CoxeterComponent::new(LieType::A, 1); 2],
                vec![(0, 1), (1, 1)],
            ),
            // Diagram 1 - 3 - 2 becomes the path 1 - 2 - 3.
            (LieType::D, 3) => (
                vec![CoxeterComponent::new(LieType::A, 3)],
                vec![(0, 1), (0, 3), (0, 2)],
            ),
            (kind, _) => same(kind),
        }
    }
}

impl fmt::Display for CoxeterComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

/// A product of finite Coxeter components, optionally followed by one
/// infinite chain. The letters of the product alphabet run through the
/// components in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CoxeterDescriptor {
    pub components: Vec<CoxeterComponent>,
    pub tail: Option<LieType>,
}

impl CoxeterDescriptor {
    pub fn new(components: Vec<CoxeterComponent>) -> Self {
        CoxeterDescriptor {
            components,
            tail: None,
        }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    /// Product of the component orders, saturating.
    pub fn order(&self) -> u64 {
        self.components
            .iter()
            .try_fold(1u64, |acc, c| acc.checked_mul(c.order()))
            .unwrap_or(u64::MAX)
    }

    /// First global letter of each component.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.components
            .iter()
            .map(|c| {
                let o = acc;
                acc += c.rank;
                o
            })
            .collect()
    }

    /// Splits a word in the product alphabet into per-component words.
    pub fn split_word(&self, word: &[usize]) -> Result<Vec<Vec<usize>>> {
        let offsets = self.offsets();
        let mut parts = vec![Vec::new(); self.components.len()];
        for &k in word {
            let slot = offsets
                .iter()
                .zip(&self.components)
                .position(|(&o, c)| k > o && k <= o + c.rank)
                .ok_or_else(|| Error::OutOfScope(format!("letter {k} outside {self}")))?;
            parts[slot].push(k - offsets[slot]);
        }
        Ok(parts)
    }

    /// Canonical representative of the Coxeter system, with a letter map.
    ///
    /// C_r and B_r have the same Coxeter graph, so C is rewritten as B; the
    /// rank-one and small-D coincidences are also resolved. Components are
    /// sorted, and `letters[k - 1]` is the new letter of old letter `k`.
    pub fn canonicalize(&self) -> (CoxeterDescriptor, Vec<usize>) {
        let mut parts: Vec<(CoxeterComponent, usize)> = Vec::new();
        let mut old_slots: Vec<(usize, usize)> = Vec::new();
        for c in &self.components {
            let (comps, letters) = c.canonical_parts();
            let base = parts.len();
            for comp in comps {
                parts.push((comp, parts.len()));
            }
            old_slots.extend(letters.into_iter().map(|(slot, k)| (base + slot, k)));
        }
        let mut order: Vec<usize> = (0..parts.len()).collect();
        order.sort_by_key(|&i| (parts[i].0, i));
        let components: Vec<CoxeterComponent> = order.iter().map(|&i| parts[i].0).collect();
        let mut position = vec![0; parts.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let canonical = CoxeterDescriptor {
            components,
            tail: self.tail.map(|t| if t == LieType::C { LieType::B } else { t }),
        };
        let offsets = canonical.offsets();
        let letters = old_slots
            .into_iter()
            .map(|(slot, k)| offsets[position[slot]] + k)
            .collect();
        (canonical, letters)
    }

    pub fn canonical(&self) -> CoxeterDescriptor {
        self.canonicalize().0
    }
}

/// Whether two descriptors describe isomorphic Coxeter systems.
pub fn coxeter_isomorphic(d1: &CoxeterDescriptor, d2: &CoxeterDescriptor) -> bool {
    d1.canonical() == d2.canonical()
}

impl fmt::Display for CoxeterDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            match self.tail {
                None => write!(f, "trivial"),
                Some(t) => write!(f, "{t}_inf"),
            }
        } else {
            let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
            write!(f, "{}", parts.join("x"))?;
            if let Some(t) = self.tail {
                write!(f, "+{t}_inf")?;
            }
            Ok(())
        }
    }
}

impl FromStr for CoxeterDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "trivial" {
            return Ok(Self::trivial());
        }
        if let Some(t) = s.strip_suffix("_inf").filter(|t| !t.contains('+')) {
            return Ok(CoxeterDescriptor {
                components: Vec::new(),
                tail: Some(t.parse()?),
            });
        }
        let (finite, tail) = match s.split_once('+') {
            Some((head, t)) => {
                let t = t
                    .strip_suffix("_inf")
                    .ok_or_else(|| Error::Parse(format!("bad tail in {s:?}")))?;
                (head, Some(t.parse::<LieType>()?))
            }
            None => (s, None),
        };
        let mut components = Vec::new();
        for part in finite.split(['x', 'X', '*']) {
            let part = part.trim();
            let mut chars = part.chars();
            let kind: LieType = chars
                .next()
                .ok_or_else(|| Error::Parse(format!("empty component in {s:?}")))?
                .to_string()
                .parse()?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank in {part:?}")))?;
            let min = if kind == LieType::D { 2 } else { 1 };
            if rank < min {
                return Err(Error::Parse(format!("{part} is not a Coxeter component")));
            }
            components.push(CoxeterComponent::new(kind, rank));
        }
        Ok(CoxeterDescriptor { components, tail })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> CoxeterDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn coincidences() {
        assert!(coxeter_isomorphic(&d("B2"), &d("C2")));
        assert!(coxeter_isomorphic(&d("A3"), &d("D3")));
        assert!(coxeter_isomorphic(&d("D2"), &d("A1xA1")));
        assert!(coxeter_isomorphic(&d("B1"), &d("A1")));
        assert!(coxeter_isomorphic(&d("C1"), &d("A1")));
        assert!(!coxeter_isomorphic(&d("A2"), &d("A1xA1")));
        assert!(coxeter_isomorphic(&d("A2xB3"), &d("C3xA2")));
        assert!(!coxeter_isomorphic(&d("A1+A_inf"), &d("A1")));
    }

    #[test]
    fn display_round_trip() {
        for s in ["trivial", "A1xA1", "B3xD4+A_inf", "A_inf", "C2"] {
            assert_eq!(d(s).to_string(), s);
        }
        assert!("A0".parse::<CoxeterDescriptor>().is_err());
        assert!("D1".parse::<CoxeterDescriptor>().is_err());
        assert!("Q2".parse::<CoxeterDescriptor>().is_err());
    }

    #[test]
    fn canonical_letters() {
        let (c, letters) = d("D3").canonicalize();
        assert_eq!(c, d("A3"));
        assert_eq!(letters, vec![1, 3, 2]);
        let (c, letters) = d("B2xC1").canonicalize();
        assert_eq!(c, d("A1xB2"));
        assert_eq!(letters, vec![2, 3, 1]);
    }

    #[test]
    fn orders() {
        assert_eq!(d("A3").order(), 24);
        assert_eq!(d("B2").order(), 8);
        assert_eq!(d("D4").order(), 192);
        assert_eq!(d("A1xA1").order(), 4);
        assert_eq!(d("A30").order(), u64::MAX);
    }

    #[test]
    fn splits_words() {
        let desc = d("A1xA2");
        assert_eq!(
            desc.split_word(&[2, 1, 3]).unwrap(),
            vec![vec![1], vec![1, 2]]
        );
        assert!(desc.split_word(&[4]).is_err());
    }
}
