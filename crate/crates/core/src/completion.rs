//! Truncated completions `M / MI^i` and stabilization of the tower.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{
    cokernel, contains_cols, lattice_cols, preimage_lattice, solve_int, FgAbelian, IntMatrix,
};
use crate::zcmod::{LaurentModule, ZCModule, ZFinite};

/// A finite stage `M / MI^i`: `Z^gens / colspan(relations)` with `t` acting by `action`.
#[derive(Clone, Debug)]
pub struct FiniteAbelianWithEndo {
    pub group: FgAbelian,
    pub level: usize,
    /// `gens x r`, one relation per column.
    pub relations: IntMatrix,
    pub action: IntMatrix,
}

impl FiniteAbelianWithEndo {
    fn build(level: usize, relations: IntMatrix, action: IntMatrix) -> Self {
        FiniteAbelianWithEndo { group: cokernel(&relations), level, relations, action }
    }

    pub fn gens(&self) -> usize {
        self.action.rows()
    }

    pub fn to_zfinite(&self) -> ZFinite {
        let canon = lattice_cols(&self.relations);
        let rel = if canon.cols() == 0 { IntMatrix::zeros(0, self.gens()) } else { canon.transpose() };
        ZFinite::new(rel, self.action.clone())
    }

    /// `(A - I)^level` kills the group.
    pub fn is_unipotent(&self) -> bool {
        let n = self.gens();
        let nil = self.action.sub(&IntMatrix::identity(n)).pow(self.level as u32);
        contains_cols(&self.relations, &nil)
    }

    /// Whether the action is invertible modulo the relations.
    pub fn action_invertible(&self) -> bool {
        self.to_zfinite().validate().is_ok()
    }
}

/// Presentation data of `M / MI^i` before taking the cokernel.
pub fn truncate(m: &ZCModule, i: usize) -> Result<FiniteAbelianWithEndo> {
    if i == 0 {
        return Err(Error::Precondition("truncation level must be at least 1".into()));
    }
    m.validate()?;
    let e = i as u32;
    match m {
        ZCModule::ZFinite(z) => {
            let g = z.gens();
            let nil = z.action.sub(&IntMatrix::identity(g)).pow(e);
            let rel = z.relation_cols().pad_empty(g).hstack(&nil);
            Ok(FiniteAbelianWithEndo::build(i, rel, z.action.clone()))
        }
        ZCModule::Lattice(l) => {
            let model = l.model()?;
            let rel = model.t_minus_one().pow(e);
            Ok(FiniteAbelianWithEndo::build(i, rel, model.action_mod(e)))
        }
        ZCModule::Laurent(p) => Ok(truncate_laurent(p, i)),
    }
}

/// `Z[s]/(s^i)`-reduction with `s = t - 1`; generator `e_k s^j` has index `k * i + j`.
fn truncate_laurent(p: &LaurentModule, i: usize) -> FiniteAbelianWithEndo {
    let g = p.gens;
    let n = g * i;
    let mut cols = Vec::new();
    for row in &p.relations {
        let entries: Vec<Vec<BigInt>> = row.iter().map(|e| LaurentModule::truncated_entry(e, i)).collect();
        for j in 0..i {
            let mut v = vec![BigInt::zero(); n];
            for (k, c) in entries.iter().enumerate() {
                for (l, x) in c.iter().enumerate() {
                    if l + j < i {
                        v[k * i + l + j] += x;
                    }
                }
            }
            cols.push(v);
        }
    }
    let rel = IntMatrix::from_columns(&cols, n);
    let mut action = IntMatrix::identity(n);
    for k in 0..g {
        for j in 0..i.saturating_sub(1) {
            action[(k * i + j + 1, k * i + j)] = BigInt::one();
        }
    }
    FiniteAbelianWithEndo::build(i, rel, action)
}

/// Matrix of the reduction `stage(i+1) -> stage(i)` on generators.
fn transition_matrix(m: &ZCModule, upper: &FiniteAbelianWithEndo, lower: &FiniteAbelianWithEndo) -> IntMatrix {
    match m {
        ZCModule::Laurent(p) => {
            let (hi, lo) = (upper.level, lower.level);
            let mut t = IntMatrix::zeros(p.gens * lo, p.gens * hi);
            for k in 0..p.gens {
                for j in 0..lo {
                    t[(k * lo + j, k * hi + j)] = BigInt::one();
                }
            }
            t
        }
        _ => IntMatrix::identity(upper.gens()),
    }
}

#[derive(Clone, Debug)]
pub struct Transition {
    /// From level `i + 1` to level `i`.
    pub from_level: usize,
    pub matrix: IntMatrix,
    pub surjective: bool,
    pub equivariant: bool,
    pub isomorphism: bool,
}

fn check_transition(matrix: IntMatrix, upper: &FiniteAbelianWithEndo, lower: &FiniteAbelianWithEndo) -> Transition {
    let surjective = cokernel(&matrix.hstack(&lower.relations)).is_zero();
    let lhs = matrix.mul(&upper.action).sub(&lower.action.mul(&matrix));
    let equivariant = contains_cols(&lower.relations, &lhs);
    let pre = preimage_lattice(&matrix, &lower.relations);
    let isomorphism = surjective && contains_cols(&upper.relations, &pre);
    Transition { from_level: upper.level, matrix, surjective, equivariant, isomorphism }
}

#[derive(Clone, Debug)]
pub struct CompletionTower {
    pub stages: Vec<FiniteAbelianWithEndo>,
    /// `transitions[k]` maps `stages[k + 1]` onto `stages[k]`.
    pub transitions: Vec<Transition>,
    pub stabilized_at: Option<usize>,
}

impl CompletionTower {
    pub fn verdict(&self) -> String {
        match self.stabilized_at {
            Some(i) => format!("prenilpotent within window (stabilized at {i})"),
            None => format!("not stabilized by imax = {}", self.stages.len()),
        }
    }
}

pub fn tower(m: &ZCModule, imax: usize) -> Result<CompletionTower> {
    if imax < 2 {
        return Err(Error::Precondition("tower needs imax >= 2".into()));
    }
    let stages: Vec<FiniteAbelianWithEndo> = (1..=imax).map(|i| truncate(m, i)).collect::<Result<_>>()?;
    let transitions: Vec<Transition> = stages
        .windows(2)
        .map(|w| check_transition(transition_matrix(m, &w[1], &w[0]), &w[1], &w[0]))
        .collect();
    let stabilized_at = transitions.iter().position(|t| t.isomorphism).map(|k| k + 1);
    Ok(CompletionTower { stages, transitions, stabilized_at })
}

#[derive(Clone, Debug)]
pub struct MembershipProof {
    pub generator: usize,
    pub level: usize,
    /// `x` with `(T - 1)^level x = n^level · e_generator` (plus relations for presented groups).
    pub witness: Vec<BigInt>,
}

/// Certificate that `n^i M ⊆ MI^i` with `n = χ(1)`.
#[derive(Clone, Debug)]
pub struct CompletionCertificate {
    pub n: BigInt,
    pub proofs: Vec<MembershipProof>,
    /// `(generator, level)` pairs with no solution; nonempty would indicate a bug.
    pub failures: Vec<(usize, usize)>,
}

impl CompletionCertificate {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn lemma_completion_certificate(m: &ZCModule, imax: usize) -> Result<CompletionCertificate> {
    let an = m.analyze()?;
    if !an.is_tame() {
        return Err(Error::NotTame("completion certificate needs a tame module".into()));
    }
    if !an.is_torsion_free() {
        return Err(Error::Precondition("completion certificate needs a torsion-free module".into()));
    }
    if !an.invariant_free {
        return Err(Error::Precondition("module has nonzero invariants (n = 0)".into()));
    }
    // (generators, T - I, relation columns, n)
    let (g, nil, rel, n) = match m {
        ZCModule::ZFinite(z) => {
            let g = z.gens();
            let n = an.chi.to_int().unwrap().eval(&BigInt::one());
            (g, z.action.sub(&IntMatrix::identity(g)), z.relation_cols().pad_empty(g), n)
        }
        ZCModule::Lattice(l) => {
            let model = l.model()?;
            let r = model.rank();
            let chi = crate::exactalg::char_poly(&model.t.to_rat())?;
            let n = chi.to_int().unwrap().eval(&BigInt::one());
            (r, model.t_minus_one(), IntMatrix::zeros(r, 0), n)
        }
        ZCModule::Laurent(_) => return Err(Error::Unsupported("completion certificate of a Laurent presentation".into())),
    };
    let mut proofs = Vec::new();
    let mut failures = Vec::new();
    for i in 1..=imax {
        let p = nil.pow(i as u32);
        let sys = p.hstack(&rel);
        let scale = num_traits::pow(n.clone(), i);
        for k in 0..g {
            let mut b = vec![BigInt::zero(); g];
            b[k] = scale.clone();
            match solve_int(&sys, &b) {
                Some(x) => {
                    debug_assert_eq!(sys.mul_vec(&x), b);
                    proofs.push(MembershipProof { generator: k, level: i, witness: x[..g].to_vec() });
                }
                None => failures.push((k, i)),
            }
        }
    }
    Ok(CompletionCertificate { n, proofs, failures })
}

/// Finite-stage shadow: `Λ²(M/MI^i)` with its invariants, coinvariants, and the cokernel of invariants -> coinvariants.
#[derive(Clone, Debug)]
pub struct SquareStage {
    pub level: usize,
    pub invariants: FgAbelian,
    pub coinvariants: FgAbelian,
    pub map_cokernel: FgAbelian,
}

pub fn completed_square_coinvariants(m: &ZCModule, i: usize) -> Result<SquareStage> {
    let stage = truncate(m, i)?.to_zfinite();
    let ext = stage.exterior_square();
    let n = ext.gens();
    let nil = ext.action.sub(&IntMatrix::identity(n));
    let rel = ext.relation_cols().pad_empty(n);
    let p = preimage_lattice(&nil, &rel);
    Ok(SquareStage {
        level: i,
        invariants: ext.invariants(),
        coinvariants: ext.coinvariants(),
        map_cokernel: cokernel(&p.pad_empty(n).hstack(&nil)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int_vec, rat_vec, RatMatrix};
    use num_rational::BigRational;

    fn klein() -> ZCModule {
        ZCModule::free(IntMatrix::from_i64(&[&[-1]]))
    }

    fn root() -> ZCModule {
        ZCModule::free(IntMatrix::from_i64(&[&[-1, 1], &[0, -1]]))
    }

    fn scalar_lattice(n: i64) -> ZCModule {
        ZCModule::lattice(RatMatrix::from_i64(&[&[n]]), vec![vec![BigRational::one()]])
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(truncate(&klein(), 3).unwrap().group, FgAbelian::cyclic(8));
        assert_eq!(truncate(&root(), 4).unwrap().group, FgAbelian::new(0, int_vec(&[16, 16])));
        assert!(truncate(&scalar_lattice(2), 5).unwrap().group.is_zero());
        assert!(truncate(&klein(), 0).is_err());
    }

    #[test]
    fn towers() {
        let t = tower(&scalar_lattice(2), 4).unwrap();
        assert_eq!(t.stabilized_at, Some(1));
        let t = tower(&klein(), 10).unwrap();
        assert_eq!(t.stabilized_at, None);
        assert!(t.transitions.iter().all(|x| x.surjective && x.equivariant));
        // Z ⊕ Z[1/2] with action diag(1, 2): the trivial summand gives Z at every stage, and MI = MI^2
        let demo = ZCModule::lattice(
            RatMatrix::from_i64(&[&[1, 0], &[0, 2]]),
            vec![rat_vec(&int_vec(&[1, 0])), rat_vec(&int_vec(&[0, 1]))],
        );
        let t = tower(&demo, 5).unwrap();
        assert_eq!(t.stages[0].group, FgAbelian::free(1));
        assert_eq!(t.stabilized_at, Some(1));
    }

    #[test]
    fn certificates() {
        let c = lemma_completion_certificate(&klein(), 4).unwrap();
        assert_eq!(c.n, BigInt::from(2));
        assert!(c.holds());
        let c = lemma_completion_certificate(&root(), 4).unwrap();
        assert_eq!(c.n, BigInt::from(4));
        assert!(c.holds());
        let c = lemma_completion_certificate(&scalar_lattice(3), 4).unwrap();
        assert_eq!(c.n, BigInt::from(-2));
        assert!(c.holds());
        assert!(lemma_completion_certificate(&ZCModule::free(IntMatrix::identity(1)), 2).is_err());
    }

    #[test]
    fn square_stages() {
        let s = completed_square_coinvariants(&klein(), 3).unwrap();
        assert!(s.invariants.is_zero() && s.coinvariants.is_zero());
        let s = completed_square_coinvariants(&root(), 2).unwrap();
        assert_eq!(s.invariants, FgAbelian::cyclic(4));
        assert_eq!(s.coinvariants, FgAbelian::cyclic(4));
        assert!(s.map_cokernel.is_zero());
        let s = completed_square_coinvariants(&ZCModule::free(IntMatrix::identity(2)), 1).unwrap();
        assert_eq!(s.invariants, s.coinvariants);
        assert!(s.map_cokernel.is_zero());
    }
}
