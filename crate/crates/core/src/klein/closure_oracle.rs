//! Element-level brute force for the lower central series of `K ⋊ C` in a small window.

use super::lcs::Window;
use super::nil2::Nil2;

struct Table {
    w: Window,
}

impl Table {
    fn size(&self) -> usize {
        self.w.order() as usize
    }

    fn index(&self, x: Nil2) -> usize {
        let x = self.w.reduce(x);
        let m = self.w.modulus();
        (x.i + m * (x.j + m * x.k)) as usize
    }

    fn element(&self, idx: usize) -> Nil2 {
        let m = self.w.modulus() as usize;
        Nil2::new((idx % m) as i64, ((idx / m) % m) as i64, (idx / (m * m)) as i64)
    }

    /// Subgroup generated by `seed`, by closing under right multiplication with generators.
    fn closure(&self, seed: &[Nil2]) -> Vec<bool> {
        let mut gens: Vec<Nil2> = Vec::new();
        let mut mask = vec![false; self.size()];
        mask[self.index(Nil2::ONE)] = true;
        for &s in seed {
            if mask[self.index(s)] {
                continue;
            }
            gens.push(self.w.reduce(s));
            let mut stack: Vec<usize> = (0..self.size()).filter(|&x| mask[x]).collect();
            while let Some(x) = stack.pop() {
                let ex = self.element(x);
                for &g in &gens {
                    let y = self.index(self.w.mul(ex, g));
                    if !mask[y] {
                        mask[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        mask
    }

    fn normal_closure(&self, seed: &[Nil2]) -> Vec<bool> {
        let mut mask = self.closure(seed);
        loop {
            let members: Vec<Nil2> = (0..self.size()).filter(|&x| mask[x]).map(|x| self.element(x)).collect();
            let mut extra = Vec::new();
            for &x in &members {
                for y in [
                    Nil2::A.inv().mul(x).mul(Nil2::A),
                    Nil2::B.inv().mul(x).mul(Nil2::B),
                    x.tau(),
                    x.tau_inv(),
                ] {
                    if !mask[self.index(y)] {
                        extra.push(y);
                    }
                }
            }
            if extra.is_empty() {
                return mask;
            }
            let mut seed2 = members;
            seed2.extend(extra);
            mask = self.closure(&seed2);
        }
    }
}

/// Smallest `z > 0` with `c^z` in `γ_n(K ⋊ C)` within the window, and the size of `γ_n`.
pub fn brute_force_term(w: Window, n: usize) -> (i64, usize) {
    let t = Table { w };
    let comm_t = |x: Nil2| x.inv().mul(x.tau());
    let mut mask = t.normal_closure(&[Nil2::A.commutator(Nil2::B), comm_t(Nil2::A), comm_t(Nil2::B)]);
    for _ in 2..n {
        let mut seed = Vec::new();
        for x in (0..t.size()).filter(|&x| mask[x]).map(|x| t.element(x)) {
            seed.push(x.commutator(Nil2::A));
            seed.push(x.commutator(Nil2::B));
            seed.push(comm_t(x));
        }
        mask = t.normal_closure(&seed);
    }
    let z = (1..=w.central_modulus()).find(|&k| mask[t.index(Nil2::new(0, 0, k))]).unwrap();
    (z, mask.iter().filter(|&&b| b).count())
}
