use num_integer::Integer;

use super::nil2::Nil2;
use crate::error::{Error, Result};

/// Largest window exponent tried before giving up.
pub const MAX_WINDOW: u32 = 20;

/// The τ-stable central quotient `K / ⟨a^(2^N), b^(2^N), c^(2^(N-1))⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub exp: u32,
}

impl Window {
    pub fn new(exp: u32) -> Self {
        assert!((2..=MAX_WINDOW).contains(&exp), "window exponent out of range");
        Window { exp }
    }

    pub fn modulus(&self) -> i64 {
        1 << self.exp
    }

    pub fn central_modulus(&self) -> i64 {
        1 << (self.exp - 1)
    }

    /// Canonical coset representative.
    pub fn reduce(&self, x: Nil2) -> Nil2 {
        Nil2 {
            i: x.i.rem_euclid(self.modulus()),
            j: x.j.rem_euclid(self.modulus()),
            k: x.k.rem_euclid(self.central_modulus()),
        }
    }

    pub fn mul(&self, x: Nil2, y: Nil2) -> Nil2 {
        self.reduce(x.mul(y))
    }

    pub fn pow(&self, x: Nil2, e: i64) -> Nil2 {
        let e = e.rem_euclid(2 * self.modulus());
        let mut out = Nil2::ONE;
        let mut base = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = self.mul(out, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        out
    }

    pub fn order(&self) -> u64 {
        1u64 << (3 * self.exp - 1)
    }
}

/// A subgroup of `K` containing the window kernel:
/// `{ h1^x h2^y c^(z w) }` with `h1 = (p, q, k1)`, `h2 = (0, r, k2)`, `z | 2^(N-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub window: Window,
    pub h1: Nil2,
    pub h2: Nil2,
    pub z: i64,
}

impl Subgroup {
    pub fn generated(w: Window, gens: &[Nil2]) -> Subgroup {
        let m = w.modulus();
        let mut els: Vec<Nil2> = gens.iter().map(|&g| w.reduce(g)).collect();
        els.push(Nil2::new(m, 0, 0));
        els.push(Nil2::new(0, m, 0));
        let mut z = w.central_modulus();
        for x in 0..els.len() {
            for y in x + 1..els.len() {
                z = z.gcd(&(els[x].i * els[y].j - els[x].j * els[y].i));
            }
        }
        // Euclid on the a-exponent, then on the b-exponent, by exact moves g <- g p^(-q);
        // b^(2^N) stays untouched in the first pass, so j may be reduced mod 2^N there
        let h1 = euclid(w, &mut els, |x| x.i, |x| Nil2 { j: x.j.rem_euclid(m), k: x.k.rem_euclid(z), ..x });
        let h2 = euclid(w, &mut els, |x| x.j, |x| Nil2 { k: x.k.rem_euclid(z), ..x });
        for x in &els {
            debug_assert!(x.i == 0 && x.j == 0);
            z = z.gcd(&x.k);
        }
        let (h1, mut h2) = (h1.expect("lattice contains 2^N Z²"), h2.expect("lattice contains 2^N Z²"));
        h2.k = h2.k.rem_euclid(z);
        let q = Integer::div_floor(&h1.j, &h2.j);
        let mut h1 = exact_mul(w, h1, exact_pow(w, h2, -q));
        h1.k = h1.k.rem_euclid(z);
        Subgroup { window: w, h1, h2, z }
    }

    pub fn whole(w: Window) -> Subgroup {
        Subgroup::generated(w, &[Nil2::A, Nil2::B, Nil2::C])
    }

    pub fn generators(&self) -> [Nil2; 3] {
        [self.h1, self.h2, Nil2::new(0, 0, self.z)]
    }

    pub fn contains(&self, x: Nil2) -> bool {
        let x = self.window.reduce(x);
        if x.i % self.h1.i != 0 {
            return false;
        }
        let w = self.window;
        let x1 = w.mul(x, w.pow(self.h1, -(x.i / self.h1.i)));
        if x1.j % self.h2.j != 0 {
            return false;
        }
        let x2 = w.mul(x1, w.pow(self.h2, -(x1.j / self.h2.j)));
        x2.i == 0 && x2.j == 0 && x2.k.rem_euclid(self.z) == 0
    }

    /// Index of the abelianization image: `Z² / L`.
    pub fn image_basis(&self) -> [[i64; 2]; 2] {
        [[self.h1.i, self.h1.j], [0, self.h2.j]]
    }

    /// `log2 z`, the exponent of `S ∩ ⟨c⟩ = ⟨c^z⟩`.
    pub fn central_exponent(&self) -> u32 {
        self.z.trailing_zeros()
    }

    /// Normal closure in `K ⋊ C` of the subgroup generated by `gens`.
    pub fn normal_closure(w: Window, gens: &[Nil2]) -> Subgroup {
        let mut s = Subgroup::generated(w, gens);
        loop {
            let mut more: Vec<Nil2> = s.generators().to_vec();
            for g in s.generators() {
                more.push(Nil2::A.inv().mul(g).mul(Nil2::A));
                more.push(Nil2::B.inv().mul(g).mul(Nil2::B));
                more.push(g.tau());
                more.push(g.tau_inv());
            }
            let next = Subgroup::generated(w, &more);
            if next == s {
                return s;
            }
            s = next;
        }
    }
}

/// Product with exact `a`, `b` exponents and the `c` exponent taken in the window.
fn exact_mul(w: Window, x: Nil2, y: Nil2) -> Nil2 {
    Nil2 { i: x.i + y.i, j: x.j + y.j, k: w.mul(x, y).k }
}

fn exact_pow(w: Window, x: Nil2, e: i64) -> Nil2 {
    Nil2 { i: e * x.i, j: e * x.j, k: w.pow(x, e).k }
}

fn euclid(w: Window, els: &mut Vec<Nil2>, coord: impl Fn(&Nil2) -> i64, red: impl Fn(Nil2) -> Nil2) -> Option<Nil2> {
    loop {
        let piv = (0..els.len()).filter(|&t| coord(&els[t]) != 0).min_by_key(|&t| coord(&els[t]).abs());
        let Some(piv) = piv else { return None };
        let p = els[piv];
        let mut done = true;
        for t in 0..els.len() {
            if t != piv && coord(&els[t]) != 0 {
                let q = Integer::div_floor(&coord(&els[t]), &coord(&p));
                els[t] = red(exact_mul(w, els[t], exact_pow(w, p, -q)));
                if coord(&els[t]) != 0 {
                    done = false;
                }
            }
        }
        if done {
            let mut p = els.swap_remove(piv);
            if coord(&p) < 0 {
                p = red(exact_pow(w, p, -1));
            }
            return Some(p);
        }
    }
}

/// `[x, t] = x⁻¹ τ(x)` for `t⁻¹ x t = τ(x)`.
pub fn commutator_with_t(x: Nil2) -> Nil2 {
    x.inv().mul(x.tau())
}

/// `γ_n(K ⋊ C)` inside the window, `n ≥ 2`.
pub fn lower_central_term(w: Window, n: usize) -> Subgroup {
    assert!(n >= 2);
    let (a, b) = (Nil2::A, Nil2::B);
    let mut s = Subgroup::normal_closure(w, &[a.commutator(b), commutator_with_t(a), commutator_with_t(b)]);
    for _ in 2..n {
        let mut gens = Vec::new();
        for g in s.generators() {
            gens.push(g.commutator(a));
            gens.push(g.commutator(b));
            gens.push(commutator_with_t(g));
        }
        s = Subgroup::normal_closure(w, &gens);
    }
    s
}

/// `m` with `γ_n(K ⋊ C) ∩ γ₂(K) = ⟨c^(2^m)⟩` in the window, or `None` when the window truncates it.
pub fn windowed_exponent(w: Window, n: usize) -> Option<u32> {
    let m = lower_central_term(w, n).central_exponent();
    (m + 1 < w.exp).then_some(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcsExponent {
    pub level: usize,
    pub exponent: u32,
    /// Window exponents tried, with the value seen in each.
    pub trials: Vec<(u32, Option<u32>)>,
}

/// `m(n)`, growing the window until the value repeats over two further increments.
pub fn lcs_intersection_exponent(n: usize) -> Result<LcsExponent> {
    if !(2..=12).contains(&n) {
        return Err(Error::Precondition(format!("level {n} outside 2..=12")));
    }
    let mut trials = Vec::new();
    for exp in 3..=MAX_WINDOW {
        trials.push((exp, windowed_exponent(Window::new(exp), n)));
        if let [.., (_, Some(x)), (_, Some(y)), (_, Some(z))] = trials[..] {
            if x == y && y == z {
                return Ok(LcsExponent { level: n, exponent: x, trials });
            }
        }
    }
    Err(Error::NotStabilized(format!("m({n}) did not stabilize for window exponents up to {MAX_WINDOW}")))
}
