//! Kazhdan–Lusztig polynomials through R-polynomials.
//!
//! For z < w put d = ℓ(w) − ℓ(z). The identity
//!
//! ```text
//! q^d P_{z,w}(1/q) − P_{z,w}(q) = Σ_{z < b ≤ w} R_{z,b}(q) P_{b,w}(q)
//! ```
//!
//! separates by degree, because deg P_{z,w} ≤ (d − 1)/2: the coefficients of
//! P_{z,w} are minus the low-degree coefficients of the right-hand side. One
//! column [x, w] is filled in order of decreasing length.

use std::collections::HashMap;

use super::group::CoxeterGroup;
use super::poly::{add_into, mul, trim, Poly};

#[derive(Debug)]
pub struct KlEngine {
    group: CoxeterGroup,
    r_memo: HashMap<(u32, u32), Poly>,
    p_memo: HashMap<(u32, u32), Poly>,
}

impl KlEngine {
    pub fn new(group: CoxeterGroup) -> Self {
        KlEngine {
            group,
            r_memo: HashMap::new(),
            p_memo: HashMap::new(),
        }
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    /// R_{a,b}; zero unless a ≤ b.
    pub fn r(&mut self, a: u32, b: u32) -> Poly {
        if a == b {
            return vec![1];
        }
        if !self.group.leq(a, b) {
            return Vec::new();
        }
        if let Some(p) = self.r_memo.get(&(a, b)) {
            return p.clone();
        }
        let g = &self.group;
        let s = g.right_descent(b).expect("b is above a");
        let (a_s, b_s) = (g.right_mul(a, s), g.right_mul(b, s));
        let out = if g.length(a_s) < g.length(a) {
            self.r(a_s, b_s)
        } else {
            let lower = self.r(a, b_s);
            let both = self.r(a_s, b_s);
            // (q − 1) R_{a,bs} + q R_{as,bs}
            let mut acc = Vec::new();
            add_into(&mut acc, &lower, 1, 1);
            add_into(&mut acc, &lower, 0, -1);
            add_into(&mut acc, &both, 1, 1);
            trim(acc)
        };
        self.r_memo.insert((a, b), out.clone());
        out
    }

    /// Moves x up while P_{x,w} is unchanged: P_{x,w} = P_{sx,w} for a left
    /// descent s of w, and likewise on the right.
    fn lift(&self, mut x: u32, w: u32) -> u32 {
        let g = &self.group;
        let left: Vec<usize> = g.left_descents(w).collect();
        let right: Vec<usize> = g.right_descents(w).collect();
        loop {
            let up = left
                .iter()
                .map(|&s| g.left_mul(s, x))
                .chain(right.iter().map(|&s| g.right_mul(x, s)))
                .find(|&y| g.length(y) > g.length(x));
            match up {
                Some(y) => x = y,
                None => return x,
            }
        }
    }

    /// P_{x,w}; zero unless x ≤ w.
    pub fn p(&mut self, x: u32, w: u32) -> Poly {
        if !self.group.leq(x, w) {
            return Vec::new();
        }
        let x = self.lift(x, w);
        if x == w {
            return vec![1];
        }
        if let Some(p) = self.p_memo.get(&(x, w)) {
            return p.clone();
        }
        self.fill_column(x, w);
        self.p_memo[&(x, w)].clone()
    }

    fn fill_column(&mut self, x: u32, w: u32) {
        let mut interval: Vec<u32> = self
            .group
            .lower_interval(w)
            .into_iter()
            .filter(|&z| self.group.leq(x, z))
            .collect();
        interval.sort_by_key(|&z| std::cmp::Reverse(self.group.length(z)));
        let lw = self.group.length(w);
        let mut vals: HashMap<u32, Poly> = HashMap::from([(w, vec![1])]);
        for i in 1..interval.len() {
            let z = interval[i];
            let up = self.lift(z, w);
            if up != z {
                let v = vals[&up].clone();
                vals.insert(z, v);
                continue;
            }
            if let Some(p) = self.p_memo.get(&(z, w)) {
                vals.insert(z, p.clone());
                continue;
            }
            let lz = self.group.length(z);
            let mut sum: Poly = Vec::new();
            for &b in &interval[..i] {
                if self.group.length(b) == lz {
                    continue;
                }
                let r = self.r(z, b);
                if !r.is_empty() {
                    add_into(&mut sum, &mul(&r, &vals[&b]), 0, 1);
                }
            }
            let d = lw - lz;
            let top = (d - 1) / 2;
            let p: Poly = trim((0..=top).map(|k| -sum.get(k).copied().unwrap_or(0)).collect());
            self.p_memo.insert((z, w), p.clone());
            vals.insert(z, p);
        }
    }
}
