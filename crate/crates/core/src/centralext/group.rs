use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    pub fn from_table(name: &str, n: usize, table: Vec<usize>, labels: Vec<String>) -> Result<Self> {
        if table.len() != n * n || labels.len() != n || n == 0 {
            return Err(Error::Dimension(format!("table for a group of order {n} has wrong size")));
        }
        if table.iter().any(|&x| x >= n) {
            return Err(Error::InvalidModule("table entry out of range".into()));
        }
        for x in 0..n {
            if table[x] != x || table[x * n] != x {
                return Err(Error::InvalidModule(format!("element 0 is not neutral for {x}")));
            }
        }
        let mut inverses = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| table[x * n + y] == 0 && table[y * n + x] == 0) {
                Some(y) => inverses[x] = y,
                None => return Err(Error::InvalidModule(format!("element {x} has no inverse"))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(Error::InvalidModule(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), n, table, inverses, labels })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        let name = if n == 1 { "1".to_string() } else { format!("Z{n}") };
        Self::from_table(&name, n, table, labels).expect("cyclic group")
    }

    /// `Z/d1 × ... × Z/dk`.
    pub fn abelian(orders: &[usize]) -> Self {
        orders.iter().fold(Self::trivial(), |acc, &d| acc.direct_product(&Self::cyclic(d)))
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        if self.n == 1 {
            return other.clone();
        }
        if other.n == 1 {
            return self.clone();
        }
        let (n, m) = (self.n, other.n);
        let size = n * m;
        let mut table = vec![0; size * size];
        for x in 0..size {
            for y in 0..size {
                let (a, b) = (x / m, x % m);
                let (c, d) = (y / m, y % m);
                table[x * size + y] = self.mul(a, c) * m + other.mul(b, d);
            }
        }
        let labels = (0..size).map(|x| format!("({},{})", self.labels[x / m], other.labels[x % m])).collect();
        Self::from_table(&format!("{}x{}", self.name, other.name), size, table, labels).expect("direct product")
    }

    /// Symmetric group on three letters.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mut table = vec![0; 36];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                // apply q first, then p
                table[i * 6 + j] = idx([p[q[0]], p[q[1]], p[q[2]]]);
            }
        }
        let labels = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
        Self::from_table("S3", 6, table, labels).expect("S3")
    }

    /// All groups of order at most 6, up to isomorphism.
    pub fn small_groups() -> Vec<FiniteGroup> {
        vec![
            Self::trivial(),
            Self::cyclic(2),
            Self::cyclic(3),
            Self::cyclic(4),
            Self::abelian(&[2, 2]),
            Self::cyclic(5),
            Self::cyclic(6),
            Self::symmetric3(),
        ]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `[x, y] = x^-1 y^-1 x y`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        mask[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        mask
    }

    /// A small generating set, chosen greedily.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut mask = self.subgroup(&gens);
        while let Some(x) = (0..self.n).filter(|&x| !mask[x]).max_by_key(|&x| (self.element_order(x), usize::MAX - x)) {
            gens.push(x);
            mask = self.subgroup(&gens);
        }
        gens
    }

    pub fn commutator_subgroup(&self) -> Vec<bool> {
        let comms: Vec<usize> =
            (0..self.n).flat_map(|a| (0..self.n).map(move |b| (a, b))).map(|(a, b)| self.commutator(a, b)).collect();
        self.subgroup(&comms)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.n)
    }
}

/// A homomorphism `f: H -> G`.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub domain: FiniteGroup,
    pub codomain: FiniteGroup,
    pub images: Vec<usize>,
}

impl GroupHom {
    pub fn new(domain: FiniteGroup, codomain: FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != domain.order() || images.iter().any(|&x| x >= codomain.order()) {
            return Err(Error::Dimension("image list does not match the groups".into()));
        }
        for x in 0..domain.order() {
            for y in 0..domain.order() {
                if images[domain.mul(x, y)] != codomain.mul(images[x], images[y]) {
                    return Err(Error::Precondition(format!("not a homomorphism at ({x}, {y})")));
                }
            }
        }
        Ok(GroupHom { domain, codomain, images })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom { domain: g.clone(), codomain: g.clone(), images: (0..g.order()).collect() }
    }

    pub fn apply(&self, h: usize) -> usize {
        self.images[h]
    }

    /// Every homomorphism `H -> G`, by choosing images of generators.
    pub fn all(h: &FiniteGroup, g: &FiniteGroup) -> Vec<GroupHom> {
        let gens = h.generators();
        let mut out = Vec::new();
        let mut choice = vec![0usize; gens.len()];
        loop {
            if let Some(images) = extend(h, g, &gens, &choice) {
                out.push(GroupHom { domain: h.clone(), codomain: g.clone(), images });
            }
            let mut k = 0;
            while k < choice.len() {
                choice[k] += 1;
                if choice[k] < g.order() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
        }
        out
    }
}

fn extend(h: &FiniteGroup, g: &FiniteGroup, gens: &[usize], choice: &[usize]) -> Option<Vec<usize>> {
    let mut img = vec![usize::MAX; h.order()];
    img[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (k, &s) in gens.iter().enumerate() {
            let y = h.mul(x, s);
            let v = g.mul(img[x], choice[k]);
            if img[y] == usize::MAX {
                img[y] = v;
                queue.push_back(y);
            } else if img[y] != v {
                return None;
            }
        }
    }
    for x in 0..h.order() {
        for y in 0..h.order() {
            if img[h.mul(x, y)] != g.mul(img[x], img[y]) {
                return None;
            }
        }
    }
    Some(img)
}
