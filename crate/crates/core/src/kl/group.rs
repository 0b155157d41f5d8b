use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::lie_data::LieType;
use crate::weyl::{CoxeterComponent, WeylElement};

/// Upper bound on the Weyl group order the engines will enumerate.
pub const ORDER_LIMIT: u64 = 1_000_000;

/// An irreducible finite Weyl group, enumerated in its standard signed
/// permutation realization. Element 0 is the identity.
#[derive(Debug, Clone)]
pub struct CoxeterGroup {
    component: CoxeterComponent,
    degree: usize,
    elems: Vec<Vec<i8>>,
    index: HashMap<Vec<i8>, u32>,
    lengths: Vec<u16>,
    right: Vec<u32>,
    left: Vec<u32>,
}

fn generators(component: CoxeterComponent) -> (usize, Vec<Vec<i8>>) {
    let r = component.rank;
    let degree = if component.kind == LieType::A { r + 1 } else { r };
    let gens = (1..=r)
        .map(|k| {
            let ty = if component.kind == LieType::C {
                LieType::B
            } else {
                component.kind
            };
            WeylElement::simple_reflection(ty, k)
                .one_line(degree)
                .into_iter()
                .map(|j| j as i8)
                .collect()
        })
        .collect();
    (degree, gens)
}

/// (a ∘ b)(i) = a(b(i)) on signed one-line notation.
fn compose(a: &[i8], b: &[i8]) -> Vec<i8> {
    b.iter()
        .map(|&j| j.signum() * a[j.unsigned_abs() as usize - 1])
        .collect()
}

impl CoxeterGroup {
    pub fn new(component: CoxeterComponent) -> Result<Self> {
        let order = component.order();
        if order > ORDER_LIMIT {
            return Err(Error::ScaleGuardrail {
                descriptor: component.to_string(),
                limit: ORDER_LIMIT,
            });
        }
        let r = component.rank;
        let (degree, gens) = generators(component);
        let id: Vec<i8> = (1..=degree as i8).collect();
        let mut elems = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut lengths = vec![0u16];
        let mut right = vec![u32::MAX; r];
        let mut queue = VecDeque::from([0u32]);
        while let Some(e) = queue.pop_front() {
            for s in 0..r {
                let next = compose(&elems[e as usize], &gens[s]);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = elems.len() as u32;
                        index.insert(next.clone(), id);
                        elems.push(next);
                        lengths.push(lengths[e as usize] + 1);
                        right.extend(std::iter::repeat(u32::MAX).take(r));
                        queue.push_back(id);
                        id
                    }
                };
                right[e as usize * r + s] = id;
            }
        }
        debug_assert_eq!(elems.len() as u64, order);
        let mut left = vec![0u32; elems.len() * r];
        for (e, img) in elems.iter().enumerate() {
            for s in 0..r {
                left[e * r + s] = index[&compose(&gens[s], img)];
            }
        }
        Ok(CoxeterGroup {
            component,
            degree,
            elems,
            index,
            lengths,
            right,
            left,
        })
    }

    pub fn component(&self) -> CoxeterComponent {
        self.component
    }

    pub fn rank(&self) -> usize {
        self.component.rank
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn length(&self, e: u32) -> usize {
        self.lengths[e as usize] as usize
    }

    /// e · s_k, letters 1-based.
    pub fn right_mul(&self, e: u32, k: usize) -> u32 {
        self.right[e as usize * self.rank() + k - 1]
    }

    /// s_k · e.
    pub fn left_mul(&self, k: usize, e: u32) -> u32 {
        self.left[e as usize * self.rank() + k - 1]
    }

    pub fn right_descent(&self, e: u32) -> Option<usize> {
        (1..=self.rank()).find(|&k| self.lengths[self.right_mul(e, k) as usize] < self.lengths[e as usize])
    }

    pub fn left_descents(&self, e: u32) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank()).filter(move |&k| self.length(self.left_mul(k, e)) < self.length(e))
    }

    pub fn right_descents(&self, e: u32) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank()).filter(move |&k| self.length(self.right_mul(e, k)) < self.length(e))
    }

    /// The element s_{k_1} ⋯ s_{k_m}.
    pub fn element(&self, word: &[usize]) -> Result<u32> {
        word.iter().try_fold(0u32, |e, &k| {
            if k == 0 || k > self.rank() {
                Err(Error::OutOfScope(format!(
                    "letter {k} outside {}",
                    self.component
                )))
            } else {
                Ok(self.right_mul(e, k))
            }
        })
    }

    /// Lexicographically least reduced word.
    pub fn word(&self, e: u32) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(e));
        let mut cur = e;
        while cur != 0 {
            let k = self.left_descents(cur).next().expect("nonidentity has a descent");
            word.push(k);
            cur = self.left_mul(k, cur);
        }
        word
    }

    pub fn inverse(&self, e: u32) -> u32 {
        self.word(e)
            .iter()
            .fold(0u32, |acc, &k| self.left_mul(k, acc))
    }

    pub fn longest(&self) -> u32 {
        (0..self.size() as u32)
            .max_by_key(|&e| self.lengths[e as usize])
            .unwrap_or(0)
    }

    /// Product e · f.
    pub fn mul(&self, e: u32, f: u32) -> u32 {
        self.word(f)
            .iter()
            .fold(e, |acc, &k| self.right_mul(acc, k))
    }

    /// Looks up an element of the standard realization.
    pub fn from_element(&self, w: &WeylElement) -> Result<u32> {
        let ty = w.lie_type();
        let matches = ty == self.component.kind
            || (matches!(ty, LieType::B | LieType::C)
                && matches!(self.component.kind, LieType::B | LieType::C));
        if !matches || w.support() > self.degree {
            return Err(Error::OutOfScope(format!(
                "{w} is not an element of {}",
                self.component
            )));
        }
        let img: Vec<i8> = w.one_line(self.degree).into_iter().map(|j| j as i8).collect();
        self.index
            .get(&img)
            .copied()
            .ok_or_else(|| Error::OutOfScope(format!("{w} is not in {}", self.component)))
    }

    /// Bruhat order, by the lifting property along right descents of y.
    pub fn leq(&self, mut x: u32, mut y: u32) -> bool {
        loop {
            let (lx, ly) = (self.length(x), self.length(y));
            if lx > ly {
                return false;
            }
            if lx == ly {
                return x == y;
            }
            if lx == 0 {
                return true;
            }
            let s = self.right_descent(y).expect("y is not the identity");
            let xs = self.right_mul(x, s);
            if self.length(xs) < lx {
                x = xs;
            }
            y = self.right_mul(y, s);
        }
    }

    /// All z ≤ w, as subword products of a reduced word of w.
    pub fn lower_interval(&self, w: u32) -> Vec<u32> {
        let mut seen = vec![false; self.size()];
        seen[0] = true;
        let mut out = vec![0u32];
        for k in self.word(w) {
            for i in 0..out.len() {
                let z = self.right_mul(out[i], k);
                if !seen[z as usize] {
                    seen[z as usize] = true;
                    out.push(z);
                }
            }
        }
        out
    }
}
