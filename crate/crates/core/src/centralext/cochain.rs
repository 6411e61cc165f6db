use super::group::FiniteGroup;
use crate::exactalg::FgAbelian;

/// Finite abelian coefficient group `Z/d1 ⊕ ... ⊕ Z/dk`, elements encoded as mixed-radix indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffGroup {
    factors: Vec<u64>,
    size: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
}

impl CoeffGroup {
    pub fn new(factors: &[u64]) -> Self {
        let factors: Vec<u64> = factors.iter().copied().filter(|&d| d > 1).collect();
        let size = factors.iter().product::<u64>() as usize;
        let mut g = CoeffGroup { factors, size, add: vec![], neg: vec![] };
        let add = (0..size * size)
            .map(|k| {
                let (a, b) = (g.decode(k / size), g.decode(k % size));
                g.encode(&a.iter().zip(&b).map(|(x, y)| (x + y) as i64).collect::<Vec<_>>())
            })
            .collect();
        let neg = (0..size).map(|a| g.encode(&g.decode(a).iter().map(|&x| -(x as i64)).collect::<Vec<_>>())).collect();
        g.add = add;
        g.neg = neg;
        g
    }

    pub fn cyclic(d: u64) -> Self {
        Self::new(&[d])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn as_abelian(&self) -> FgAbelian {
        FgAbelian::new(0, self.factors.iter().map(|&d| d.into()).collect())
    }

    pub fn decode(&self, mut x: usize) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&d| {
                let r = (x as u64) % d;
                x /= d as usize;
                r
            })
            .collect()
    }

    /// Components are reduced mod the factors.
    pub fn encode(&self, comps: &[i64]) -> usize {
        let mut x = 0usize;
        let mut scale = 1usize;
        for (c, &d) in comps.iter().zip(&self.factors) {
            x += c.rem_euclid(d as i64) as usize * scale;
            scale *= d as usize;
        }
        x
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut y = a;
        while y != 0 {
            y = self.add(y, a);
            k += 1;
        }
        k
    }

    /// Images of a homomorphism `self -> other` determined by images of the standard generators.
    pub fn hom_images(&self, other: &CoeffGroup, gen_images: &[usize]) -> Option<Vec<usize>> {
        let mut out = Vec::with_capacity(self.size);
        for x in 0..self.size {
            let mut v = 0;
            for (k, &c) in self.decode(x).iter().enumerate() {
                for _ in 0..c {
                    v = other.add(v, gen_images[k]);
                }
            }
            out.push(v);
        }
        // well-defined: d_k · image_k = 0
        for (k, &d) in self.factors.iter().enumerate() {
            let mut v = 0;
            for _ in 0..d {
                v = other.add(v, gen_images[k]);
            }
            if v != 0 {
                return None;
            }
        }
        Some(out)
    }

    /// All homomorphisms `self -> other`, as image tables.
    pub fn all_homs(&self, other: &CoeffGroup) -> Vec<Vec<usize>> {
        let k = self.factors.len();
        let mut out = Vec::new();
        let mut choice = vec![0usize; k];
        loop {
            if let Some(h) = self.hom_images(other, &choice) {
                out.push(h);
            }
            let mut i = 0;
            while i < k {
                choice[i] += 1;
                if choice[i] < other.size {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
        out
    }
}

/// Normalized 1-cochain `G -> A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain1 {
    pub values: Vec<usize>,
}

/// Normalized 2-cochain `G × G -> A`, value of `(g1, g2)` at `g1 * |G| + g2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain2 {
    pub n: usize,
    pub values: Vec<usize>,
}

impl Cochain1 {
    pub fn zero(n: usize) -> Self {
        Cochain1 { values: vec![0; n] }
    }

    pub fn at(&self, g: usize) -> usize {
        self.values[g]
    }

    pub fn is_normalized(&self) -> bool {
        self.values.first() == Some(&0)
    }

    pub fn compose(&self, f: &super::group::GroupHom) -> Cochain1 {
        Cochain1 { values: f.images.iter().map(|&g| self.values[g]).collect() }
    }

    pub fn add(&self, o: &Cochain1, a: &CoeffGroup) -> Cochain1 {
        Cochain1 { values: self.values.iter().zip(&o.values).map(|(&x, &y)| a.add(x, y)).collect() }
    }
}

impl Cochain2 {
    pub fn zero(n: usize) -> Self {
        Cochain2 { n, values: vec![0; n * n] }
    }

    pub fn at(&self, g1: usize, g2: usize) -> usize {
        self.values[g1 * self.n + g2]
    }

    pub fn set(&mut self, g1: usize, g2: usize, v: usize) {
        self.values[g1 * self.n + g2] = v;
    }

    pub fn is_normalized(&self) -> bool {
        (0..self.n).all(|g| self.at(0, g) == 0 && self.at(g, 0) == 0)
    }

    pub fn add(&self, o: &Cochain2, a: &CoeffGroup) -> Cochain2 {
        Cochain2 { n: self.n, values: self.values.iter().zip(&o.values).map(|(&x, &y)| a.add(x, y)).collect() }
    }

    pub fn neg(&self, a: &CoeffGroup) -> Cochain2 {
        Cochain2 { n: self.n, values: self.values.iter().map(|&x| a.neg(x)).collect() }
    }

    /// `f*c (h1, h2) = c(f h1, f h2)`
    pub fn pullback(&self, f: &super::group::GroupHom) -> Cochain2 {
        let m = f.domain.order();
        let mut out = Cochain2::zero(m);
        for h1 in 0..m {
            for h2 in 0..m {
                out.set(h1, h2, self.at(f.apply(h1), f.apply(h2)));
            }
        }
        out
    }

    /// First triple violating `c(g2,g3) - c(g1g2,g3) + c(g1,g2g3) - c(g1,g2) = 0`.
    pub fn cocycle_violation(&self, g: &FiniteGroup, a: &CoeffGroup) -> Option<(usize, usize, usize)> {
        let n = g.order();
        for g1 in 0..n {
            for g2 in 0..n {
                for g3 in 0..n {
                    let v = a.add(
                        a.sub(self.at(g2, g3), self.at(g.mul(g1, g2), g3)),
                        a.sub(self.at(g1, g.mul(g2, g3)), self.at(g1, g2)),
                    );
                    if v != 0 {
                        return Some((g1, g2, g3));
                    }
                }
            }
        }
        None
    }

    pub fn is_cocycle(&self, g: &FiniteGroup, a: &CoeffGroup) -> bool {
        self.cocycle_violation(g, a).is_none()
    }
}

/// `∂α(g1, g2) = α(g1) - α(g1 g2) + α(g2)`.
pub fn coboundary(alpha: &Cochain1, g: &FiniteGroup, a: &CoeffGroup) -> Cochain2 {
    let n = g.order();
    let mut c = Cochain2::zero(n);
    for g1 in 0..n {
        for g2 in 0..n {
            c.set(g1, g2, a.add(a.sub(alpha.at(g1), alpha.at(g.mul(g1, g2))), alpha.at(g2)));
        }
    }
    c
}
