//! Verma modules on a PBW basis and their simple quotients.
//!
//! `M(λ) = U(n̄) v_λ` is spanned by ordered words `Y_{β_1}^{e_1} ⋯ Y_{β_r}^{e_r} v_λ`
//! in the global root order, with odd exponents at most one: an odd square is
//! rewritten as `Y_γ² = ½ [Y_γ, Y_γ] = ½ Y_{2γ}` as soon as it appears.
//!
//! The maximal submodule is found top-down: a vector of weight `μ < λ` lies in
//! `N` exactly when every simple raising operator sends it into `N`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::charlib::dominance_interval;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::liealg::{BasisKind, Realization};
use crate::rootsys::{int, is_integral_dominant, rat, Parity, Rational, RootId, Weight};

/// Exponents of an ordered PBW word, indexed by root id.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial(Vec<u32>);

impl PbwMonomial {
    pub fn one(roots: usize) -> Self {
        PbwMonomial(vec![0; roots])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn first(&self) -> Option<RootId> {
        self.0.iter().position(|&e| e > 0)
    }

    fn bumped(&self, root: RootId, by: i32) -> PbwMonomial {
        let mut e = self.0.clone();
        e[root] = (e[root] as i32 + by) as u32;
        PbwMonomial(e)
    }
}

type Terms = Vec<(PbwMonomial, Rational)>;

fn accumulate(acc: &mut BTreeMap<PbwMonomial, Rational>, terms: &Terms, scale: &Rational) {
    for (m, c) in terms {
        let e = acc.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c * scale;
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

/// The Verma module `M(λ)` with memoized straightening.
#[derive(Debug)]
pub struct VermaModule {
    g: Arc<Realization>,
    lambda: Weight,
    lower_memo: HashMap<(RootId, PbwMonomial), Terms>,
    raise_memo: HashMap<(RootId, PbwMonomial), Terms>,
}

impl VermaModule {
    pub fn new(g: Arc<Realization>, lambda: Weight) -> Result<Self> {
        if lambda.rank() != g.rank() {
            return Err(Error::RankMismatch {
                expected: g.rank(),
                found: lambda.rank(),
            });
        }
        Ok(VermaModule {
            g,
            lambda,
            lower_memo: HashMap::new(),
            raise_memo: HashMap::new(),
        })
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn algebra(&self) -> &Arc<Realization> {
        &self.g
    }

    /// Weight of `m · v_λ`.
    pub fn weight_of(&self, m: &PbwMonomial) -> Weight {
        let rs = self.g.roots();
        m.0.iter().enumerate().fold(self.lambda.clone(), |acc, (r, &e)| {
            if e == 0 {
                acc
            } else {
                &acc - &rs.root(r).weight.scale(&int(e as i64))
            }
        })
    }

    /// Basis of `M(λ)^μ`, sorted.
    pub fn pbw_basis(&self, mu: &Weight) -> Vec<PbwMonomial> {
        let rs = self.g.roots();
        let Some(target) = (&self.lambda - mu).nonneg_root_coords() else {
            return Vec::new();
        };
        let roots: Vec<Vec<i64>> = rs
            .positive()
            .iter()
            .map(|r| r.weight.nonneg_root_coords().unwrap())
            .collect();
        let mut out = Vec::new();
        let mut exps = vec![0u32; rs.len()];
        fn rec(
            idx: usize,
            rest: Vec<i64>,
            roots: &[Vec<i64>],
            odd: &[bool],
            exps: &mut Vec<u32>,
            out: &mut Vec<PbwMonomial>,
        ) {
            if rest.iter().all(|&c| c == 0) {
                out.push(PbwMonomial(exps.clone()));
                return;
            }
            if idx == roots.len() {
                return;
            }
            let mut cur = rest;
            let mut e = 0;
            loop {
                exps[idx] = e;
                rec(idx + 1, cur.clone(), roots, odd, exps, out);
                if odd[idx] && e == 1 {
                    break;
                }
                for (c, r) in cur.iter_mut().zip(&roots[idx]) {
                    *c -= r;
                }
                if cur.iter().any(|&c| c < 0) {
                    break;
                }
                e += 1;
            }
            exps[idx] = 0;
        }
        let odd: Vec<bool> = (0..rs.len()).map(|r| rs.parity(r) == Parity::Odd).collect();
        rec(0, target, &roots, &odd, &mut exps, &mut out);
        out.sort();
        out
    }

    /// Normal form of `Y_a · m`.
    pub fn mul_lowering(&mut self, a: RootId, m: &PbwMonomial) -> Terms {
        let key = (a, m.clone());
        if let Some(t) = self.lower_memo.get(&key) {
            return t.clone();
        }
        let g = Arc::clone(&self.g);
        let rs = g.roots();
        let result = match m.first() {
            None => vec![(m.bumped(a, 1), Rational::one())],
            Some(b) if a < b => vec![(m.bumped(a, 1), Rational::one())],
            Some(b) if a == b => {
                if rs.parity(a) == Parity::Even {
                    vec![(m.bumped(a, 1), Rational::one())]
                } else {
                    // Y_γ Y_γ = ½ [Y_γ, Y_γ]
                    let rest = m.bumped(a, -1);
                    let (sq, c) = g.bracket_lowering(a, a).expect("odd root squares to a root");
                    let half = c * rat(1, 2);
                    self.mul_lowering(sq, &rest)
                        .into_iter()
                        .map(|(x, v)| (x, v * &half))
                        .collect()
                }
            }
            Some(b) => {
                // Y_a Y_b r = (−1)^{|a||b|} Y_b (Y_a r) + [Y_a, Y_b] r
                let rest = m.bumped(b, -1);
                let mut acc = BTreeMap::new();
                let sign = int(rs.parity(a).sign_with(rs.parity(b)) as i64);
                for (x, c) in self.mul_lowering(a, &rest) {
                    let t = self.mul_lowering(b, &x);
                    accumulate(&mut acc, &t, &(&c * &sign));
                }
                if let Some((ab, c)) = g.bracket_lowering(a, b) {
                    let c = c.clone();
                    let t = self.mul_lowering(ab, &rest);
                    accumulate(&mut acc, &t, &c);
                }
                acc.into_iter().collect()
            }
        };
        self.lower_memo.insert(key, result.clone());
        result
    }

    /// Action of a basis element of the realization on `m · v_λ`.
    pub fn act(&mut self, basis: usize, m: &PbwMonomial) -> Terms {
        match self.g.element(basis).kind {
            BasisKind::Lowering(a) => self.mul_lowering(a, m),
            BasisKind::Cartan(i) => {
                let c = self.weight_of(m).coords()[i].clone();
                if c.is_zero() {
                    Vec::new()
                } else {
                    vec![(m.clone(), c)]
                }
            }
            BasisKind::Raising(a) => self.act_raising(a, m),
        }
    }

    /// `X_a · m v_λ`, commuting `X_a` to the right where it kills `v_λ`.
    pub fn act_raising(&mut self, a: RootId, m: &PbwMonomial) -> Terms {
        let Some(b) = m.first() else {
            return Vec::new();
        };
        let key = (a, m.clone());
        if let Some(t) = self.raise_memo.get(&key) {
            return t.clone();
        }
        let g = Arc::clone(&self.g);
        let rest = m.bumped(b, -1);
        let mut acc = BTreeMap::new();
        // X Y_b r = [X, Y_b] r + (−1)^{|X||Y_b|} Y_b (X r)
        for (k, c) in g.bracket_basis(g.x(a), g.y(b)) {
            let t = self.act(*k, &rest);
            accumulate(&mut acc, &t, c);
        }
        let sign = int(g.parity(g.x(a)).sign_with(g.parity(g.y(b))) as i64);
        for (x, c) in self.act_raising(a, &rest) {
            let t = self.mul_lowering(b, &x);
            accumulate(&mut acc, &t, &(&c * &sign));
        }
        let result: Terms = acc.into_iter().collect();
        self.raise_memo.insert(key, result.clone());
        result
    }

    fn matrix_between(
        &mut self,
        source: &[PbwMonomial],
        target: &[PbwMonomial],
        f: impl Fn(&mut Self, &PbwMonomial) -> Terms,
    ) -> DenseMatrix {
        let index: HashMap<&PbwMonomial, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut out = DenseMatrix::zeros(target.len(), source.len());
        for (j, m) in source.iter().enumerate() {
            for (x, c) in f(self, m) {
                let i = *index.get(&x).expect("image lies in the target weight space");
                out.set(i, j, c);
            }
        }
        out
    }

    /// Matrix of the simple raising operator `X_{α_i}` from `M^μ` to `M^{μ+α_i}`.
    pub fn raising_action(&mut self, i: usize, mu: &Weight) -> DenseMatrix {
        let alpha = self.g.roots().simple_roots()[i];
        let up = mu + &self.g.roots().root(alpha).weight;
        let source = self.pbw_basis(mu);
        let target = self.pbw_basis(&up);
        self.matrix_between(&source, &target, |v, m| v.act_raising(alpha, m))
    }

    /// Matrix of `Y_a` from `M^μ` to `M^{μ−a}`.
    pub fn lowering_action(&mut self, a: RootId, mu: &Weight) -> DenseMatrix {
        let down = mu - &self.g.roots().root(a).weight;
        let source = self.pbw_basis(mu);
        let target = self.pbw_basis(&down);
        self.matrix_between(&source, &target, |v, m| v.mul_lowering(a, m))
    }
}

/// Quotient data at one weight: `proj` is the RREF of a matrix whose kernel
/// is `N^μ`; its pivot columns pick PBW representatives of a basis of `L^μ`.
#[derive(Clone, Debug)]
struct QuotientBlock {
    basis: Vec<PbwMonomial>,
    proj: DenseMatrix,
    pivots: Vec<usize>,
}

fn quotient_blocks(verma: &mut VermaModule, support: &[Weight]) -> Result<BTreeMap<Weight, QuotientBlock>> {
    let lambda = verma.lambda().clone();
    let g = Arc::clone(verma.algebra());
    let rs = g.roots();
    let in_support: std::collections::HashSet<&Weight> = support.iter().collect();
    if !in_support.contains(&lambda) {
        return Err(Error::SupportNotClosed(lambda.to_string()));
    }
    for mu in support {
        for &a in rs.simple_roots() {
            let up = mu + &rs.root(a).weight;
            if up.le_dominance(&lambda) && !in_support.contains(&up) {
                return Err(Error::SupportNotClosed(up.to_string()));
            }
        }
    }
    let mut order: Vec<&Weight> = support.iter().filter(|m| m.le_dominance(&lambda)).collect();
    order.sort_by_key(|m| (&lambda - m).height().unwrap());

    let mut blocks: BTreeMap<Weight, QuotientBlock> = BTreeMap::new();
    for mu in order {
        let basis = verma.pbw_basis(mu);
        let proj = if mu == &lambda {
            DenseMatrix::identity(1)
        } else {
            let mut stacked = DenseMatrix::zeros(0, basis.len());
            for i in 0..rs.rank() {
                let up = mu + &rs.root(rs.simple_roots()[i]).weight;
                let Some(above) = blocks.get(&up) else {
                    continue;
                };
                if above.proj.nrows() == 0 {
                    continue;
                }
                let raise = verma.raising_action(i, mu);
                stacked = stacked.vstack(&above.proj.mul(&raise));
            }
            stacked.row_space()
        };
        let pivots = proj.rref().pivots;
        blocks.insert(mu.clone(), QuotientBlock { basis, proj, pivots });
    }
    Ok(blocks)
}

/// Bases of `N^μ` (in PBW coordinates of `M(λ)^μ`) for every `μ` in `support`.
pub fn maximal_submodule_blocks(
    g: Arc<Realization>,
    lambda: &Weight,
    support: &[Weight],
) -> Result<BTreeMap<Weight, Vec<Vec<Rational>>>> {
    if !is_integral_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut verma = VermaModule::new(g, lambda.clone())?;
    let blocks = quotient_blocks(&mut verma, support)?;
    Ok(blocks
        .into_iter()
        .map(|(w, b)| {
            let kernel = if b.proj.nrows() == 0 {
                (0..b.basis.len())
                    .map(|i| {
                        let mut v = vec![Rational::zero(); b.basis.len()];
                        v[i] = Rational::one();
                        v
                    })
                    .collect()
            } else {
                b.proj.kernel()
            };
            (w, kernel)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBlock {
    pub weight: Weight,
    pub dim: usize,
}

/// A finite-dimensional simple module `L(λ)` given by weight blocks and the
/// matrices of every lowering operator `Y_α : L^μ → L^{μ−α}`.
#[derive(Clone, Debug)]
pub struct SimpleModule {
    g: Arc<Realization>,
    lambda: Weight,
    blocks: Vec<ModuleBlock>,
    index: HashMap<Weight, usize>,
    /// `actions[root][block]`: target block and matrix, absent when the target is zero.
    actions: Vec<Vec<Option<(usize, DenseMatrix)>>>,
}

impl SimpleModule {
    /// Assembles a module from stored parts, checking shapes.
    pub fn from_parts(
        g: Arc<Realization>,
        lambda: Weight,
        blocks: Vec<ModuleBlock>,
        actions: Vec<Vec<Option<(usize, DenseMatrix)>>>,
    ) -> Result<Self> {
        let rs = g.roots();
        let bad = |msg: &str| Error::Parse(format!("inconsistent module data: {msg}"));
        if actions.len() != rs.len() || actions.iter().any(|a| a.len() != blocks.len()) {
            return Err(bad("action table shape"));
        }
        let index: HashMap<Weight, usize> = blocks.iter().enumerate().map(|(i, b)| (b.weight.clone(), i)).collect();
        for (r, per_block) in actions.iter().enumerate() {
            for (b, entry) in per_block.iter().enumerate() {
                let target = &blocks[b].weight - &rs.root(r).weight;
                match (entry, index.get(&target)) {
                    (Some((t, m)), Some(&ti)) => {
                        if *t != ti || m.nrows() != blocks[ti].dim || m.ncols() != blocks[b].dim {
                            return Err(bad("action matrix shape"));
                        }
                    }
                    (None, None) => {}
                    _ => return Err(bad("action target")),
                }
            }
        }
        Ok(SimpleModule {
            g,
            lambda,
            blocks,
            index,
            actions,
        })
    }

    pub fn algebra(&self) -> &Arc<Realization> {
        &self.g
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn rank(&self) -> usize {
        self.lambda.rank()
    }

    pub fn blocks(&self) -> &[ModuleBlock] {
        &self.blocks
    }

    pub fn block_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.dim).sum()
    }

    pub fn dim_at(&self, w: &Weight) -> usize {
        self.block_of(w).map_or(0, |b| self.blocks[b].dim)
    }

    /// `Y_root` on block `block`: `(target block, matrix)`.
    pub fn action(&self, root: RootId, block: usize) -> Option<(usize, &DenseMatrix)> {
        self.actions[root][block].as_ref().map(|(t, m)| (*t, m))
    }

    pub fn actions(&self) -> &[Vec<Option<(usize, DenseMatrix)>>] {
        &self.actions
    }
}

/// Builds `L(λ)` as `M(λ)/N`, computing `N` on the dominance interval
/// `[−λ, λ]`, which contains every weight of `L(λ)`.
pub fn simple_quotient(g: Arc<Realization>, lambda: &Weight) -> Result<SimpleModule> {
    if !is_integral_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut verma = VermaModule::new(Arc::clone(&g), lambda.clone())?;
    let support = dominance_interval(lambda);
    let quotient = quotient_blocks(&mut verma, &support)?;
    let rs = g.roots();

    let mut kept: Vec<(&Weight, &QuotientBlock)> = quotient.iter().filter(|(_, b)| !b.pivots.is_empty()).collect();
    kept.sort_by_key(|(w, _)| ((lambda - *w).height().unwrap(), std::cmp::Reverse((*w).clone())));
    let blocks: Vec<ModuleBlock> = kept
        .iter()
        .map(|(w, b)| ModuleBlock {
            weight: (*w).clone(),
            dim: b.pivots.len(),
        })
        .collect();
    let index: HashMap<Weight, usize> = blocks.iter().enumerate().map(|(i, b)| (b.weight.clone(), i)).collect();

    let mut actions = vec![vec![None; blocks.len()]; rs.len()];
    for (bi, (w, qb)) in kept.iter().enumerate() {
        for (a, row) in actions.iter_mut().enumerate() {
            let down = *w - &rs.root(a).weight;
            let Some(&ti) = index.get(&down) else {
                continue;
            };
            let target = &quotient[&down];
            let target_index: HashMap<&PbwMonomial, usize> =
                target.basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut mat = DenseMatrix::zeros(blocks[ti].dim, qb.pivots.len());
            for (j, &p) in qb.pivots.iter().enumerate() {
                let mut image = vec![Rational::zero(); target.basis.len()];
                for (x, c) in verma.mul_lowering(a, &qb.basis[p]) {
                    image[target_index[&x]] = c;
                }
                for (i, v) in target.proj.mul_vec(&image).into_iter().enumerate() {
                    mat.set(i, j, v);
                }
            }
            row[bi] = Some((ti, mat));
        }
    }
    SimpleModule::from_parts(g, lambda.clone(), blocks, actions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlib::{simple_character, verma_mult};
    use crate::liealg::realize;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn alg(n: usize) -> Arc<Realization> {
        Arc::new(realize(n).unwrap())
    }

    #[test]
    fn pbw_basis_counts() {
        let g = alg(1);
        let v = VermaModule::new(Arc::clone(&g), w("0")).unwrap();
        assert_eq!(v.pbw_basis(&w("-2")).len(), 1);
        assert_eq!(v.pbw_basis(&w("0")), vec![PbwMonomial::one(2)]);
        let d = v.pbw_basis(&w("-1"));
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].exponents()[g.roots().short(0)], 1);
        for lam in ["1,0", "1,1"] {
            let g2 = alg(2);
            let v = VermaModule::new(g2, w(lam)).unwrap();
            for mu in dominance_interval(&w(lam)) {
                assert_eq!(v.pbw_basis(&mu).len() as u64, verma_mult(&w(lam), &mu).unwrap());
            }
        }
    }

    #[test]
    fn raising_examples() {
        let g = alg(1);
        let mut v = VermaModule::new(Arc::clone(&g), w("0")).unwrap();
        assert!(v.raising_action(0, &w("0")).is_zero());
        assert!(v.raising_action(0, &w("-1")).is_zero());
        let mut v1 = VermaModule::new(g, w("1")).unwrap();
        let m = v1.raising_action(0, &w("0"));
        assert_eq!((m.nrows(), m.ncols()), (1, 1));
        assert!(!m.is_zero());
    }

    #[test]
    fn straightening_respects_brackets() {
        // Y_a (Y_b m) − (−1)^{|a||b|} Y_b (Y_a m) = [Y_a, Y_b] m on M(λ).
        let g = alg(2);
        let rs = g.roots().clone();
        let mut v = VermaModule::new(Arc::clone(&g), w("1,0")).unwrap();
        for mu in [w("1,0"), w("0,0"), w("0,-1"), w("-1,0")] {
            for m in v.pbw_basis(&mu) {
                for a in 0..rs.len() {
                    for b in 0..rs.len() {
                        let mut lhs = BTreeMap::new();
                        for (x, c) in v.mul_lowering(b, &m) {
                            let t = v.mul_lowering(a, &x);
                            accumulate(&mut lhs, &t, &c);
                        }
                        let sign = -int(rs.parity(a).sign_with(rs.parity(b)) as i64);
                        for (x, c) in v.mul_lowering(a, &m) {
                            let t = v.mul_lowering(b, &x);
                            accumulate(&mut lhs, &t, &(&c * &sign));
                        }
                        let mut rhs = BTreeMap::new();
                        if let Some((ab, c)) = g.bracket_lowering(a, b) {
                            let t = v.mul_lowering(ab, &m);
                            accumulate(&mut rhs, &t, c);
                        }
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn raising_respects_brackets() {
        // X_a Y_b − (−1)^{|a||b|} Y_b X_a = [X_a, Y_b] on M(λ).
        let g = alg(2);
        let rs = g.roots().clone();
        let mut v = VermaModule::new(Arc::clone(&g), w("1,1")).unwrap();
        for mu in [w("1,1"), w("0,1"), w("0,0"), w("1,-1")] {
            for m in v.pbw_basis(&mu) {
                for a in 0..rs.len() {
                    for b in 0..rs.len() {
                        let mut lhs = BTreeMap::new();
                        for (x, c) in v.mul_lowering(b, &m) {
                            let t = v.act_raising(a, &x);
                            accumulate(&mut lhs, &t, &c);
                        }
                        let sign = -int(rs.parity(a).sign_with(rs.parity(b)) as i64);
                        for (x, c) in v.act_raising(a, &m) {
                            let t = v.mul_lowering(b, &x);
                            accumulate(&mut lhs, &t, &(&c * &sign));
                        }
                        let mut rhs = BTreeMap::new();
                        for (k, c) in g.bracket_basis(g.x(a), g.y(b)) {
                            let t = v.act(*k, &m);
                            accumulate(&mut rhs, &t, c);
                        }
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn maximal_submodule_examples() {
        let g = alg(1);
        let sup0 = dominance_interval(&w("0"));
        let n0 = maximal_submodule_blocks(Arc::clone(&g), &w("0"), &sup0).unwrap();
        assert!(n0[&w("0")].is_empty());
        let support = vec![w("0"), w("-1"), w("-2")];
        let n0 = maximal_submodule_blocks(Arc::clone(&g), &w("0"), &support).unwrap();
        assert_eq!(n0[&w("-1")].len(), 1);
        let n1 = maximal_submodule_blocks(Arc::clone(&g), &w("1"), &dominance_interval(&w("1"))).unwrap();
        assert_eq!(n1[&w("-1")].len(), 0);
        let deeper = vec![w("1"), w("0"), w("-1"), w("-2")];
        let n1 = maximal_submodule_blocks(Arc::clone(&g), &w("1"), &deeper).unwrap();
        assert_eq!(n1[&w("-2")].len(), 1);
        let gap = vec![w("1"), w("-1")];
        assert!(matches!(
            maximal_submodule_blocks(g, &w("1"), &gap),
            Err(Error::SupportNotClosed(_))
        ));
    }

    #[test]
    fn quotient_matches_freudenthal() {
        for lam in ["0", "1", "2", "3"] {
            let l = simple_quotient(alg(1), &w(lam)).unwrap();
            let ch = simple_character(&w(lam)).unwrap();
            assert_eq!(l.dim() as u64, ch.dim());
            for b in l.blocks() {
                assert_eq!(b.dim as u64, ch.mult(&b.weight));
            }
        }
        for lam in ["0,0", "1,0", "1,1", "2,0"] {
            let l = simple_quotient(alg(2), &w(lam)).unwrap();
            let ch = simple_character(&w(lam)).unwrap();
            assert_eq!(l.dim() as u64, ch.dim(), "{lam}");
            for (mu, m) in ch.iter() {
                assert_eq!(l.dim_at(mu) as u64, m, "{lam} at {mu}");
            }
        }
        let triv = simple_quotient(alg(2), &w("0,0")).unwrap();
        assert_eq!(triv.blocks().len(), 1);
        assert!(simple_quotient(alg(2), &w("0,1")).is_err());
    }

    #[test]
    fn quotient_actions_supercommute() {
        for (n, lam) in [(1, "1"), (1, "2"), (2, "1,0"), (2, "1,1")] {
            let g = alg(n);
            let rs = g.roots().clone();
            let l = simple_quotient(Arc::clone(&g), &w(lam)).unwrap();
            for bi in 0..l.blocks().len() {
                for a in 0..rs.len() {
                    for b in 0..rs.len() {
                        let apply = |r: RootId, blk: usize, m: &DenseMatrix| -> Option<(usize, DenseMatrix)> {
                            l.action(r, blk).map(|(t, x)| (t, x.mul(m)))
                        };
                        let id = DenseMatrix::identity(l.blocks()[bi].dim);
                        let ab = apply(b, bi, &id).and_then(|(t, m)| apply(a, t, &m));
                        let ba = apply(a, bi, &id).and_then(|(t, m)| apply(b, t, &m));
                        let sign = int(rs.parity(a).sign_with(rs.parity(b)) as i64);
                        let lhs = match (ab, ba) {
                            (Some((t, x)), Some((_, y))) => Some((t, x.sub(&y.scale(&sign)))),
                            (Some(p), None) => Some(p),
                            (None, Some((t, y))) => Some((t, y.scale(&-sign))),
                            (None, None) => None,
                        };
                        let rhs = g
                            .bracket_lowering(a, b)
                            .and_then(|(ab, c)| apply(ab, bi, &id).map(|(t, m)| (t, m.scale(c))));
                        match (lhs, rhs) {
                            (Some((_, x)), Some((_, y))) => assert_eq!(x, y),
                            (Some((_, x)), None) => assert!(x.is_zero()),
                            (None, Some((_, y))) => assert!(y.is_zero()),
                            (None, None) => {}
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn maximal_submodule_is_stable() {
        let g = alg(2);
        let lam = w("1,0");
        let support = dominance_interval(&lam);
        let kernels = maximal_submodule_blocks(Arc::clone(&g), &lam, &support).unwrap();
        let mut verma = VermaModule::new(Arc::clone(&g), lam.clone()).unwrap();
        let blocks = quotient_blocks(&mut verma, &support).unwrap();
        for (mu, ker) in &kernels {
            for a in 0..g.roots().len() {
                let down = mu - &g.roots().root(a).weight;
                let Some(target) = blocks.get(&down) else { continue };
                let y = verma.lowering_action(a, mu);
                for v in ker {
                    let image = y.mul_vec(v);
                    assert!(target.proj.mul_vec(&image).iter().all(Zero::is_zero));
                }
            }
        }
    }
}
