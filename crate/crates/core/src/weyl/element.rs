use std::fmt;

use crate::error::{Error, Result};
use crate::lie_data::{
    positive_roots_at, root_from_vector, simple_root, vector_is_positive, LieType, Root, Weight,
};
use crate::rational::Q;

/// A finitely supported signed permutation. `images[i - 1] = ±j` means
/// w(ε_i) = ±ε_j; indices past the end of `images` are fixed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    ty: LieType,
    images: Vec<i64>,
}

impl WeylElement {
    pub fn identity(ty: LieType) -> Self {
        WeylElement {
            ty,
            images: Vec::new(),
        }
    }

    /// Validates and normalizes a signed permutation in one-line notation.
    pub fn from_images(ty: LieType, images: Vec<i64>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            let a = j.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::OutOfScope(format!(
                    "{images:?} is not a signed permutation"
                )));
            }
            seen[a - 1] = true;
        }
        let negatives = images.iter().filter(|&&j| j < 0).count();
        match ty {
            LieType::A if negatives > 0 => {
                return Err(Error::OutOfScope("type A elements carry no signs".into()))
            }
            LieType::D if negatives % 2 == 1 => {
                return Err(Error::OutOfScope(
                    "type D elements flip an even number of signs".into(),
                ))
            }
            _ => {}
        }
        Ok(Self::normalized(ty, images))
    }

    fn normalized(ty: LieType, mut images: Vec<i64>) -> Self {
        while let Some(&last) = images.last() {
            if last == images.len() as i64 {
                images.pop();
            } else {
                break;
            }
        }
        WeylElement { ty, images }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    /// Signed image of index `i`.
    pub fn image(&self, i: usize) -> i64 {
        self.images.get(i - 1).copied().unwrap_or(i as i64)
    }

    /// One-line notation over `1..=n` for `n >= support`.
    pub fn one_line(&self, n: usize) -> Vec<i64> {
        (1..=n.max(self.support())).map(|i| self.image(i)).collect()
    }

    /// Largest index moved or sign-flipped.
    pub fn support(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// The simple reflection s_k of the ambient type.
    pub fn simple_reflection(ty: LieType, k: usize) -> Self {
        Self::reflection(ty, simple_root(ty, k))
    }

    /// The reflection s_α.
    pub fn reflection(ty: LieType, alpha: Root) -> Self {
        let n = alpha.max_index();
        let mut images: Vec<i64> = (1..=n as i64).collect();
        match alpha {
            Root::Diff(i, j) => images.swap(i - 1, j - 1),
            Root::Sum(i, j) => {
                images[i - 1] = -(j as i64);
                images[j - 1] = -(i as i64);
            }
            Root::Short(i) | Root::Long(i) => images[i - 1] = -(i as i64),
        }
        Self::normalized(ty, images)
    }

    /// The product s_{k_1} s_{k_2} ⋯ of ambient simple reflections.
    pub fn from_word(ty: LieType, word: &[usize]) -> Self {
        word.iter().fold(Self::identity(ty), |acc, &k| {
            acc.compose(&Self::simple_reflection(ty, k))
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.support().max(other.support());
        let images = (1..=n)
            .map(|i| {
                let j = other.image(i);
                j.signum() * self.image(j.unsigned_abs() as usize)
            })
            .collect();
        Self::normalized(self.ty, images)
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.support();
        let mut images = vec![0i64; n];
        for i in 1..=n {
            let j = self.image(i);
            images[j.unsigned_abs() as usize - 1] = j.signum() * i as i64;
        }
        Self::normalized(self.ty, images)
    }

    /// Linear action on a coordinate vector indexed from 1.
    pub(crate) fn act_vec(&self, v: &[Q]) -> Vec<Q> {
        let mut out = v.to_vec();
        for i in 1..=self.support().min(v.len()) {
            let j = self.image(i);
            let target = j.unsigned_abs() as usize - 1;
            out[target] = if j < 0 { -&v[i - 1] } else { v[i - 1].clone() };
        }
        out
    }

    /// Linear action on weights.
    pub fn act(&self, lambda: &Weight) -> Result<Weight> {
        self.check_type(lambda.lie_type())?;
        let n = self.support().max(lambda.support());
        let v = self.act_vec(&lambda.to_vec(n));
        Ok(Weight::from_slice(self.ty, &v))
    }

    /// Dot action w·λ = w(λ+ρ) − ρ.
    pub fn dot(&self, lambda: &Weight) -> Result<Weight> {
        self.check_type(lambda.lie_type())?;
        let n = self.support().max(lambda.support());
        let v = self.act_vec(&lambda.shifted(n));
        Ok(Weight::from_shifted(lambda, &v))
    }

    fn check_type(&self, ty: LieType) -> Result<()> {
        if self.ty != ty {
            return Err(Error::TypeMismatch(format!(
                "element of type {} acting on a weight of type {ty}",
                self.ty
            )));
        }
        Ok(())
    }

    /// Image of a root, returned as a positive root and a sign.
    pub fn act_on_root(&self, alpha: Root) -> (Root, bool) {
        let v: Vec<(usize, i64)> = alpha
            .vector()
            .into_iter()
            .map(|(i, c)| {
                let j = self.image(i);
                (j.unsigned_abs() as usize, c * j.signum())
            })
            .collect();
        root_from_vector(self.ty, &v)
    }

    fn sends_negative(&self, alpha: Root) -> bool {
        let v: Vec<(usize, i64)> = alpha
            .vector()
            .into_iter()
            .map(|(i, c)| {
                let j = self.image(i);
                (j.unsigned_abs() as usize, c * j.signum())
            })
            .collect();
        !vector_is_positive(self.ty, &v)
    }

    /// Number of positive roots sent to negative roots. Roots outside the
    /// support are never inverted, so this is independent of the level.
    pub fn length(&self) -> usize {
        positive_roots_at(self.ty, self.support())
            .into_iter()
            .filter(|&a| self.sends_negative(a))
            .count()
    }

    /// Whether ℓ(s_k w) < ℓ(w).
    pub fn has_left_descent(&self, k: usize) -> bool {
        self.inverse().sends_negative(simple_root(self.ty, k))
    }

    /// Whether ℓ(w s_k) < ℓ(w).
    pub fn has_right_descent(&self, k: usize) -> bool {
        self.sends_negative(simple_root(self.ty, k))
    }

    /// Lexicographically least reduced word in the ambient simple reflections.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while !w.is_identity() {
            let rank = self.ty.rank(w.support().max(self.ty.min_level()));
            let k = (1..=rank)
                .find(|&k| w.has_left_descent(k))
                .expect("a nontrivial element has a left descent");
            word.push(k);
            w = WeylElement::simple_reflection(self.ty, k).compose(&w);
        }
        word
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.images.iter().map(|j| j.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// The longest element of the level-`level` Weyl group.
pub fn longest_element(ty: LieType, level: usize) -> Result<WeylElement> {
    ty.check_level(level)?;
    let n = level as i64;
    let images = match ty {
        LieType::A => (1..=n).rev().collect(),
        LieType::D if n % 2 == 1 => (1..=n).map(|i| if i == 1 { 1 } else { -i }).collect(),
        _ => (1..=n).map(|i| -i).collect(),
    };
    Ok(WeylElement::normalized(ty, images))
}

/// Formats a word as space-separated letters, `e` for the empty word.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}
