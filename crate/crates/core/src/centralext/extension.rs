use std::collections::VecDeque;

use super::cochain::{Cochain1, Cochain2, CoeffGroup};
use super::cohomology::{in_relative_cocycles, relative_cocycles};
use super::group::{FiniteGroup, GroupHom};
use crate::error::{Error, Result};

/// Largest `|G|·|H|` accepted by the enumeration routines.
pub const ENUMERATION_GUARD: usize = 36;

/// `A ↣ E_c ↠ G`, with `(a, g)` stored at `a * |G| + g`.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub a: CoeffGroup,
    pub g: FiniteGroup,
    pub c: Cochain2,
    pub group: FiniteGroup,
}

impl CentralExtension {
    pub fn element(&self, a: usize, g: usize) -> usize {
        a * self.g.order() + g
    }

    pub fn split(&self, x: usize) -> (usize, usize) {
        (x / self.g.order(), x % self.g.order())
    }

    pub fn project(&self, x: usize) -> usize {
        x % self.g.order()
    }

    /// Whether the projection admits a homomorphic section.
    pub fn splits(&self) -> bool {
        sections(self).next().is_some()
    }
}

/// Sections `g ↦ (s(g), g)` that are homomorphisms, as cochains `s`.
fn sections(e: &CentralExtension) -> impl Iterator<Item = Cochain1> + '_ {
    let gens = e.g.generators();
    let k = gens.len();
    let size = e.a.size();
    (0..size.pow(k as u32)).filter_map(move |mut code| {
        let vals: Vec<usize> = (0..k)
            .map(|_| {
                let v = code % size;
                code /= size;
                v
            })
            .collect();
        propagate(&e.g, &gens, &vals, |g1, g2| e.c.at(g1, g2), &e.a)
    })
}

/// Extends `β` from generators via `β(g1 g2) = β(g1) + β(g2) + d(g1, g2)` and checks consistency.
fn propagate(
    g: &FiniteGroup,
    gens: &[usize],
    vals: &[usize],
    defect: impl Fn(usize, usize) -> usize,
    a: &CoeffGroup,
) -> Option<Cochain1> {
    let n = g.order();
    let mut beta = vec![usize::MAX; n];
    beta[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&s, &bs) in gens.iter().zip(vals) {
            let y = g.mul(x, s);
            let v = a.add(a.add(beta[x], bs), defect(x, s));
            if beta[y] == usize::MAX {
                beta[y] = v;
                queue.push_back(y);
            }
        }
    }
    for g1 in 0..n {
        for g2 in 0..n {
            if beta[g.mul(g1, g2)] != a.add(a.add(beta[g1], beta[g2]), defect(g1, g2)) {
                return None;
            }
        }
    }
    Some(Cochain1 { values: beta })
}

/// Product table of `(a1, g1)(a2, g2) = (a1 + a2 + c(g1, g2), g1 g2)` on `A × G`, unchecked.
pub fn extension_table(c: &Cochain2, a: &CoeffGroup, g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let size = a.size() * n;
    let mut table = vec![0; size * size];
    for x in 0..size {
        let (a1, g1) = (x / n, x % n);
        for y in 0..size {
            let (a2, g2) = (y / n, y % n);
            let s = a.add(a.add(a1, a2), c.at(g1, g2));
            table[x * size + y] = s * n + g.mul(g1, g2);
        }
    }
    table
}

pub fn build_extension(c: &Cochain2, a: &CoeffGroup, g: &FiniteGroup) -> Result<CentralExtension> {
    let n = g.order();
    if c.n != n || c.values.iter().any(|&x| x >= a.size()) {
        return Err(Error::Dimension("cochain does not match the groups".into()));
    }
    if !c.is_normalized() {
        return Err(Error::NotCocycle("cochain is not normalized".into()));
    }
    if let Some((g1, g2, g3)) = c.cocycle_violation(g, a) {
        return Err(Error::NotCocycle(format!(
            "cocycle identity fails at ({}, {}, {})",
            g.label(g1),
            g.label(g2),
            g.label(g3)
        )));
    }
    let size = a.size() * n;
    let table = extension_table(c, a, g);
    let labels = (0..size).map(|x| format!("({}, {})", x / n, g.label(x % n))).collect();
    let group = FiniteGroup::from_table(&format!("E({})", g.name()), size, table, labels)?;
    Ok(CentralExtension { a: a.clone(), g: g.clone(), c: c.clone(), group })
}

/// `(A ↣ E_c ↠ G, f̃_α)` with `f̃_α(h) = (α(h), f(h))`.
#[derive(Clone, Debug)]
pub struct RelativeExtension {
    pub ext: CentralExtension,
    pub f: GroupHom,
    pub alpha: Cochain1,
    pub lift: GroupHom,
}

pub fn build_relative(c: &Cochain2, alpha: &Cochain1, f: &GroupHom, a: &CoeffGroup) -> Result<RelativeExtension> {
    if alpha.values.len() != f.domain.order() {
        return Err(Error::Dimension("1-cochain does not match the domain".into()));
    }
    let ext = build_extension(c, a, &f.codomain)?;
    if !in_relative_cocycles(c, alpha, f, a) {
        return Err(Error::NotCocycle("the pair does not satisfy f*c = -∂α".into()));
    }
    let images = (0..f.domain.order()).map(|h| ext.element(alpha.at(h), f.apply(h))).collect();
    let lift = GroupHom::new(f.domain.clone(), ext.group.clone(), images)?;
    Ok(RelativeExtension { ext, f: f.clone(), alpha: alpha.clone(), lift })
}

fn same_ambient(e1: &RelativeExtension, e2: &RelativeExtension) -> Result<()> {
    if e1.ext.a != e2.ext.a || e1.ext.g != e2.ext.g || e1.f.domain != e2.f.domain || e1.f.images != e2.f.images {
        return Err(Error::Precondition("extensions live over different data".into()));
    }
    Ok(())
}

/// A `β` with `θ_β(a, g) = (a + β(g), g)` an equivalence `e1 -> e2`, if any.
pub fn are_equivalent(e1: &RelativeExtension, e2: &RelativeExtension) -> Result<Option<Cochain1>> {
    same_ambient(e1, e2)?;
    let a = &e1.ext.a;
    let g = &e1.ext.g;
    let gens = g.generators();
    let k = gens.len();
    let size = a.size();
    let defect = |g1: usize, g2: usize| a.sub(e2.ext.c.at(g1, g2), e1.ext.c.at(g1, g2));
    for mut code in 0..size.pow(k as u32) {
        let vals: Vec<usize> = (0..k)
            .map(|_| {
                let v = code % size;
                code /= size;
                v
            })
            .collect();
        if let Some(beta) = propagate(g, &gens, &vals, defect, a) {
            if e1.alpha.add(&beta.compose(&e1.f), a) == e2.alpha {
                return Ok(Some(beta));
            }
        }
    }
    Ok(None)
}

/// A morphism of central extensions over `id_G`: `θ(a, g) = (φ(a) + β(g), g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionMorphism {
    pub phi: Vec<usize>,
    pub beta: Cochain1,
}

impl ExtensionMorphism {
    pub fn apply(&self, e1: &CentralExtension, e2: &CentralExtension, x: usize) -> usize {
        let (a, g) = e1.split(x);
        e2.element(e2.a.add(self.phi[a], self.beta.at(g)), g)
    }
}

/// Every morphism `e1 -> e2` of central extensions of the same `G` inducing the identity on `G`.
pub fn morphisms(e1: &CentralExtension, e2: &CentralExtension) -> Result<Vec<ExtensionMorphism>> {
    if e1.g != e2.g {
        return Err(Error::Precondition("extensions of different groups".into()));
    }
    let g = &e1.g;
    let gens = g.generators();
    let k = gens.len();
    let size = e2.a.size();
    let mut out = Vec::new();
    for phi in e1.a.all_homs(&e2.a) {
        let defect = |g1: usize, g2: usize| e2.a.sub(e2.c.at(g1, g2), phi[e1.c.at(g1, g2)]);
        for mut code in 0..size.pow(k as u32) {
            let vals: Vec<usize> = (0..k)
                .map(|_| {
                    let v = code % size;
                    code /= size;
                    v
                })
                .collect();
            if let Some(beta) = propagate(g, &gens, &vals, defect, &e2.a) {
                out.push(ExtensionMorphism { phi: phi.clone(), beta });
            }
        }
    }
    Ok(out)
}

/// `f` is perfect when `f(H)·[G, G] = G`, i.e. `H_ab -> G_ab` is onto.
pub fn is_perfect(f: &GroupHom) -> bool {
    let g = &f.codomain;
    let mut gens: Vec<usize> = f.images.clone();
    gens.extend((0..g.order()).filter(|&x| g.commutator_subgroup()[x]));
    g.subgroup(&gens).iter().all(|&b| b)
}

fn enumeration_guard(f: &GroupHom) -> Result<()> {
    let size = f.domain.order() * f.codomain.order();
    if size > ENUMERATION_GUARD {
        return Err(Error::SizeGuard(format!("|G|·|H| = {size} exceeds {ENUMERATION_GUARD}")));
    }
    Ok(())
}

/// Equivalence classes of relative central extensions, one representative each.
pub fn extension_classes(f: &GroupHom, a: &CoeffGroup) -> Result<Vec<RelativeExtension>> {
    enumeration_guard(f)?;
    let z = relative_cocycles(f, a)?;
    let mut reps: Vec<RelativeExtension> = Vec::new();
    for (c, alpha) in z.elements() {
        let e = build_relative(&c, &alpha, f, a)?;
        let mut known = false;
        for r in &reps {
            if are_equivalent(r, &e)?.is_some() {
                known = true;
                break;
            }
        }
        if !known {
            reps.push(e);
        }
    }
    Ok(reps)
}

/// Checks that a morphism with `φ = 0` yields a homomorphic section of the target.
pub fn zero_morphism_splits(e1: &CentralExtension, e2: &CentralExtension) -> Result<bool> {
    for m in morphisms(e1, e2)? {
        if m.phi.iter().all(|&x| x == 0) {
            let s = (0..e2.g.order()).map(|g| m.apply(e1, e2, e1.element(0, g))).collect();
            if GroupHom::new(e2.g.clone(), e2.group.clone(), s).is_err() || !e2.splits() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that any two morphisms `e1 -> e2` agree on `[E1, E1]`.
pub fn morphisms_agree_on_commutators(e1: &CentralExtension, e2: &CentralExtension) -> Result<bool> {
    let ms = morphisms(e1, e2)?;
    let comm = e1.group.commutator_subgroup();
    let Some(first) = ms.first() else { return Ok(true) };
    Ok(ms.iter().all(|m| {
        (0..e1.group.order()).filter(|&x| comm[x]).all(|x| m.apply(e1, e2, x) == first.apply(e1, e2, x))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centralext::cochain::coboundary;

    fn z2_cocycle() -> Cochain2 {
        let mut c = Cochain2::zero(2);
        c.set(1, 1, 1);
        c
    }

    #[test]
    fn zero_cocycle_gives_product() {
        let g = FiniteGroup::cyclic(3);
        let a = CoeffGroup::cyclic(2);
        let e = build_extension(&Cochain2::zero(3), &a, &g).unwrap();
        assert_eq!(e.group.order(), 6);
        assert!(e.group.is_abelian());
        assert!(e.splits());
    }

    #[test]
    fn nontrivial_z2_extension_is_cyclic() {
        let e = build_extension(&z2_cocycle(), &CoeffGroup::cyclic(2), &FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(e.group.order(), 4);
        assert_eq!(e.group.element_order(e.element(0, 1)), 4);
        assert!(!e.splits());
    }

    #[test]
    fn non_cocycle_reports_triple() {
        let mut c = Cochain2::zero(3);
        c.set(1, 1, 1);
        let err = build_extension(&c, &CoeffGroup::cyclic(2), &FiniteGroup::cyclic(3)).unwrap_err();
        assert!(matches!(err, Error::NotCocycle(ref s) if s.contains("fails at")));
    }

    #[test]
    fn lift_is_a_homomorphism() {
        let g = FiniteGroup::cyclic(2);
        let a = CoeffGroup::cyclic(2);
        let f = GroupHom::identity(&g);
        // f*c = -∂α with c(x,x) = 1 needs α(x) with -(α+α-0) = 1, impossible mod 2
        assert!(build_relative(&z2_cocycle(), &Cochain1::zero(2), &f, &a).is_err());
        let e = build_relative(&Cochain2::zero(2), &Cochain1 { values: vec![0, 1] }, &f, &a).unwrap();
        assert_eq!(e.lift.apply(1), e.ext.element(1, 1));
    }

    #[test]
    fn equivalence_recovers_beta() {
        let g = FiniteGroup::cyclic(4);
        let h = FiniteGroup::cyclic(2);
        let f = GroupHom::new(h, g.clone(), vec![0, 2]).unwrap();
        let a = CoeffGroup::cyclic(4);
        let e = build_relative(&Cochain2::zero(4), &Cochain1::zero(2), &f, &a).unwrap();
        assert_eq!(are_equivalent(&e, &e).unwrap(), Some(Cochain1::zero(4)));
        let beta = Cochain1 { values: vec![0, 1, 3, 2] };
        let c2 = coboundary(&beta, &g, &a).neg(&a);
        let alpha2 = Cochain1::zero(2).add(&beta.compose(&f), &a);
        let e2 = build_relative(&c2, &alpha2, &f, &a).unwrap();
        assert_eq!(are_equivalent(&e, &e2).unwrap(), Some(beta));
    }

    #[test]
    fn perfect_maps() {
        let z2 = FiniteGroup::cyclic(2);
        let z4 = FiniteGroup::cyclic(4);
        assert!(is_perfect(&GroupHom::identity(&z4)));
        assert!(!is_perfect(&GroupHom::new(FiniteGroup::trivial(), z2.clone(), vec![0]).unwrap()));
        assert!(is_perfect(&GroupHom::new(z4, z2, vec![0, 1, 0, 1]).unwrap()));
    }

    #[test]
    fn classes_match_h2_for_small_cases() {
        let z2 = FiniteGroup::cyclic(2);
        let cases = [
            (GroupHom::new(FiniteGroup::trivial(), z2.clone(), vec![0]).unwrap(), 2usize),
            (GroupHom::identity(&z2), 1),
            (GroupHom::new(z2.clone(), FiniteGroup::trivial(), vec![0, 0]).unwrap(), 2),
        ];
        for (f, expect) in cases {
            let a = if f.codomain.order() == 1 { CoeffGroup::cyclic(4) } else { CoeffGroup::cyclic(2) };
            assert_eq!(extension_classes(&f, &a).unwrap().len(), expect);
        }
    }

    #[test]
    fn morphism_lemmas() {
        let g = FiniteGroup::abelian(&[2, 2]);
        let a = CoeffGroup::cyclic(2);
        let mut c = Cochain2::zero(4);
        c.set(1, 2, 1);
        c.set(1, 3, 1);
        c.set(3, 2, 1);
        c.set(3, 3, 1);
        let e1 = build_extension(&c, &a, &g).unwrap();
        let e0 = build_extension(&Cochain2::zero(4), &a, &g).unwrap();
        for (x, y) in [(&e1, &e1), (&e1, &e0), (&e0, &e1), (&e0, &e0)] {
            assert!(zero_morphism_splits(x, y).unwrap());
            assert!(morphisms_agree_on_commutators(x, y).unwrap());
        }
    }
}
