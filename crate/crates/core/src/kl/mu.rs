//! Full table of Kazhdan–Lusztig polynomials by the μ-coefficient recursion.
//!
//! For w = sv > v and c = [sx < x],
//!
//! ```text
//! P_{x,w} = q^{1−c} P_{sx,v} + q^c P_{x,v} − Σ μ(z,v) q^{(ℓ(w)−ℓ(z))/2} P_{x,z}
//! ```
//!
//! with the sum over z < v with sz < z. This is independent of the
//! R-polynomial engine and serves as a cross-check on small groups.

use crate::error::{Error, Result};

use super::group::CoxeterGroup;
use super::poly::{add_into, trim, Poly};

/// Largest group for which a full table is built.
pub const TABLE_LIMIT: usize = 1000;

#[derive(Debug)]
pub struct MuTable {
    n: usize,
    table: Vec<Poly>,
}

impl MuTable {
    pub fn new(group: &CoxeterGroup) -> Result<Self> {
        let n = group.size();
        if n > TABLE_LIMIT {
            return Err(Error::ScaleGuardrail {
                descriptor: group.component().to_string(),
                limit: TABLE_LIMIT as u64,
            });
        }
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_by_key(|&e| group.length(e));
        let mut table = vec![Vec::new(); n * n];
        let leq: Vec<bool> = (0..n * n)
            .map(|i| group.leq((i / n) as u32, (i % n) as u32))
            .collect();
        table[0] = vec![1];
        for &w in &order[1..] {
            let s = group.left_descents(w).next().expect("w is not the identity");
            let v = group.left_mul(s, w);
            let lw = group.length(w);
            let lv = lw - 1;
            // z < v with sz < z and μ(z, v) ≠ 0
            let mus: Vec<(u32, i64)> = (0..n as u32)
                .filter(|&z| z != v && leq[z as usize * n + v as usize])
                .filter(|&z| group.length(group.left_mul(s, z)) < group.length(z))
                .filter_map(|z| {
                    let d = lv - group.length(z);
                    if d % 2 == 0 {
                        return None;
                    }
                    let p = &table[z as usize * n + v as usize];
                    let m = p.get((d - 1) / 2).copied().unwrap_or(0);
                    (m != 0).then_some((z, m))
                })
                .collect();
            for x in 0..n as u32 {
                if !leq[x as usize * n + w as usize] {
                    continue;
                }
                let sx = group.left_mul(s, x);
                let c = usize::from(group.length(sx) < group.length(x));
                let mut p = Vec::new();
                add_into(&mut p, &table[sx as usize * n + v as usize], 1 - c, 1);
                add_into(&mut p, &table[x as usize * n + v as usize], c, 1);
                for &(z, m) in &mus {
                    let shift = (lw - group.length(z)) / 2;
                    add_into(&mut p, &table[x as usize * n + z as usize], shift, -m);
                }
                table[x as usize * n + w as usize] = trim(p);
            }
        }
        Ok(MuTable { n, table })
    }

    pub fn p(&self, x: u32, w: u32) -> &[i64] {
        &self.table[x as usize * self.n + w as usize]
    }
}
