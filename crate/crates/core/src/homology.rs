//! Exact homology of the chain complex, weight block by weight block.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::chains::{ChainBlock, ChainComplex, Tag};
use crate::charlib::{euler_rhs, FormalCharacter, SignedCharacter};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{DenseMatrix, SparseMatrix};
use crate::rootsys::{inner_unchecked, Rational, Weight};
use crate::verma::SimpleModule;
use crate::weyl::{dot_act_unchecked, elements_of_length};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyBlock {
    pub k: usize,
    pub mu: Weight,
    pub dim_c: usize,
    /// Rank of the outgoing boundary `C_k → C_{k−1}`.
    pub rank_out: usize,
    /// Rank of the incoming boundary `C_{k+1} → C_k`.
    pub rank_in: usize,
    pub dim_h: usize,
}

#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub lambda: Weight,
    pub k_max: usize,
    pub blocks: Vec<HomologyBlock>,
    /// `(k, w·λ)` for every `w` of length `k ≤ k_max`.
    pub predicted: Vec<(usize, Weight)>,
    pub matches: bool,
}

impl HomologyReport {
    fn assemble(lambda: Weight, k_max: usize, blocks: Vec<HomologyBlock>) -> Self {
        let n = lambda.rank();
        let mut predicted = Vec::new();
        for k in 0..=k_max {
            for w in elements_of_length(n, k).unwrap_or_default() {
                predicted.push((k, dot_act_unchecked(&w, &lambda)));
            }
        }
        predicted.sort();
        let mut expected: BTreeMap<(usize, Weight), usize> = BTreeMap::new();
        for p in &predicted {
            *expected.entry(p.clone()).or_default() += 1;
        }
        let mut report = HomologyReport {
            lambda,
            k_max,
            blocks,
            predicted,
            matches: false,
        };
        report.matches = report.nonzero() == expected;
        report
    }

    /// Nonzero `dim H_k(μ)` keyed by `(k, μ)`.
    pub fn nonzero(&self) -> BTreeMap<(usize, Weight), usize> {
        self.blocks
            .iter()
            .filter(|b| b.dim_h > 0)
            .map(|b| ((b.k, b.mu.clone()), b.dim_h))
            .collect()
    }

    pub fn character(&self, k: usize) -> FormalCharacter {
        self.blocks
            .iter()
            .filter(|b| b.k == k && b.dim_h > 0)
            .map(|b| (b.mu.clone(), b.dim_h as u64))
            .collect()
    }

    pub fn total(&self, k: usize) -> usize {
        self.blocks.iter().filter(|b| b.k == k).map(|b| b.dim_h).sum()
    }

    /// `Σ_k (−1)^k ch H_k`.
    pub fn euler_character(&self) -> SignedCharacter {
        SignedCharacter::from_terms(self.blocks.iter().filter(|b| b.dim_h > 0).map(|b| {
            let sign = if b.k % 2 == 0 { 1 } else { -1 };
            (b.mu.clone(), sign * b.dim_h as i64)
        }))
    }

    pub fn euler_matches(&self) -> Result<bool> {
        Ok(self.euler_character().sub(&euler_rhs(&self.lambda)?).is_zero())
    }
}

fn rank_table(
    weights: &[(usize, Weight)],
    exec: Exec,
    rank: impl Fn(usize, &Weight) -> usize + Sync + Send,
) -> BTreeMap<(usize, Weight), usize> {
    let ranks = exec.map(weights, |(k, mu)| rank(*k, mu));
    weights.iter().cloned().zip(ranks).collect()
}

fn report_from_ranks(
    lambda: Weight,
    k_max: usize,
    dims: impl Fn(usize) -> Vec<(Weight, usize)>,
    ranks: &BTreeMap<(usize, Weight), usize>,
) -> HomologyReport {
    let mut blocks = Vec::new();
    for k in 0..=k_max {
        for (mu, dim_c) in dims(k) {
            let rank_out = if k == 0 { 0 } else { ranks.get(&(k, mu.clone())).copied().unwrap_or(0) };
            let rank_in = ranks.get(&(k + 1, mu.clone())).copied().unwrap_or(0);
            let dim_h = dim_c
                .checked_sub(rank_out + rank_in)
                .expect("boundary ranks exceed the block dimension");
            blocks.push(HomologyBlock {
                k,
                mu,
                dim_c,
                rank_out,
                rank_in,
                dim_h,
            });
        }
    }
    HomologyReport::assemble(lambda, k_max, blocks)
}

/// Homology of a complex built to degree at least `k_max + 1`.
pub fn homology_of(cc: &ChainComplex, k_max: usize, exec: Exec) -> HomologyReport {
    assert!(cc.top_degree() > k_max, "complex must reach degree k_max + 1");
    let weights: Vec<(usize, Weight)> = (1..=k_max + 1)
        .flat_map(|k| cc.blocks(k).keys().map(move |mu| (k, mu.clone())))
        .collect();
    let ranks = rank_table(&weights, exec, |k, mu| cc.delta_matrix(k, mu).rank());
    report_from_ranks(
        cc.module().lambda().clone(),
        k_max,
        |k| cc.blocks(k).iter().map(|(mu, b)| (mu.clone(), b.dim())).collect(),
        &ranks,
    )
}

/// `H_k(n̄, L(λ))` for `k ≤ k_max`, per weight.
pub fn homology_dims(module: Arc<SimpleModule>, k_max: usize, exec: Exec) -> Result<HomologyReport> {
    if k_max == 0 {
        return Err(Error::Decomposition("k_max must be positive".into()));
    }
    let cc = ChainComplex::new(module, k_max + 1, exec);
    Ok(homology_of(&cc, k_max, exec))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaplacianReport {
    pub k: usize,
    pub blocks: Vec<(Weight, usize)>,
    pub total: usize,
}

/// Weight blocks of `C_k` on which `⟨μ+ρ, μ+ρ⟩ = ⟨λ+ρ, λ+ρ⟩`.
pub fn laplacian_kernel(cc: &ChainComplex, k: usize) -> LaplacianReport {
    let rho = cc.roots().rho().clone();
    let lr = cc.module().lambda() + &rho;
    let target = inner_unchecked(&lr, &lr);
    let blocks: Vec<(Weight, usize)> = cc
        .blocks(k)
        .iter()
        .filter(|(mu, _)| {
            let m = *mu + &rho;
            inner_unchecked(&m, &m) == target
        })
        .map(|(mu, b)| (mu.clone(), b.dim()))
        .collect();
    let total = blocks.iter().map(|(_, d)| d).sum();
    LaplacianReport { k, blocks, total }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionBlock {
    pub mu: Weight,
    pub dim_c: usize,
    pub dim_a: usize,
    /// `dim δ*(A_{k+1})` at this weight.
    pub dim_delta_a: usize,
    pub dim_r: usize,
    pub dim_b: usize,
    /// `A_k ∩ ker δ* = 0`.
    pub a_injective: bool,
    /// `C_k = A_k ⊕ δ*A_{k+1} ⊕ R_k`.
    pub direct_sum: bool,
}

impl DecompositionBlock {
    pub fn holds(&self) -> bool {
        self.a_injective && self.direct_sum && self.dim_delta_a == self.dim_b
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub k: usize,
    pub blocks: Vec<DecompositionBlock>,
}

impl DecompositionReport {
    pub fn holds(&self) -> bool {
        self.blocks.iter().all(DecompositionBlock::holds)
    }

    pub fn totals(&self) -> (usize, usize, usize) {
        self.blocks.iter().fold((0, 0, 0), |(a, d, r), b| {
            (a + b.dim_a, d + b.dim_delta_a, r + b.dim_r)
        })
    }
}

fn unit_columns(positions: &[usize]) -> Vec<Vec<(usize, Rational)>> {
    positions.iter().map(|&p| vec![(p, Rational::from_integer(1.into()))]).collect()
}

fn image_columns(cc: &ChainComplex, source: Option<&ChainBlock>, target: &ChainBlock, pred: impl Fn(Tag) -> bool) -> Vec<Vec<(usize, Rational)>> {
    let Some(source) = source else {
        return Vec::new();
    };
    source
        .positions_where(pred)
        .into_iter()
        .map(|p| {
            let mut col: Vec<(usize, Rational)> = cc
                .boundary(&source.basis[p])
                .iter()
                .map(|(m, c)| (target.position(m).expect("δ* preserves weight"), c.clone()))
                .collect();
            col.sort_by_key(|(i, _)| *i);
            col
        })
        .collect()
}

fn is_a(t: Tag) -> bool {
    matches!(t, Tag::A(_))
}

fn is_b(t: Tag) -> bool {
    matches!(t, Tag::B(_))
}

fn is_r(t: Tag) -> bool {
    t == Tag::R
}

/// Checks `C_k = A_k ⊕ δ*A_{k+1} ⊕ R_k` and `A_k ∩ ker δ* = 0` by exact ranks.
pub fn verify_decomposition(cc: &ChainComplex, k: usize, exec: Exec) -> DecompositionReport {
    assert!(cc.top_degree() > k, "complex must reach degree k + 1");
    let weights: Vec<&Weight> = cc.blocks(k).keys().collect();
    let blocks = exec.map(&weights, |mu| {
        let block = &cc.blocks(k)[*mu];
        let a = block.positions_where(is_a);
        let r = block.positions_where(is_r);
        let b = block.positions_where(is_b);
        let delta_a = image_columns(cc, cc.block(k + 1, mu), block, is_a);
        let dim_delta_a = SparseMatrix::from_columns(block.dim(), delta_a.clone()).rank();
        let mut all = unit_columns(&a);
        all.extend(delta_a);
        all.extend(unit_columns(&r));
        let full = SparseMatrix::from_columns(block.dim(), all).rank();
        let a_injective = a.is_empty()
            || cc.block(k - 1, mu).is_some_and(|below| {
                let cols = image_columns(cc, Some(block), below, is_a);
                SparseMatrix::from_columns(below.dim(), cols).rank() == a.len()
            });
        DecompositionBlock {
            mu: (*mu).clone(),
            dim_c: block.dim(),
            dim_a: a.len(),
            dim_delta_a,
            dim_r: r.len(),
            dim_b: b.len(),
            a_injective,
            direct_sum: full == block.dim() && a.len() + dim_delta_a + r.len() == block.dim(),
        }
    });
    DecompositionReport { k, blocks }
}

/// `A_k → C_{k−1} → C_{k−1}/(A ⊕ R)` has rank `dim A_k` on every weight block.
pub fn verify_phi_iso(cc: &ChainComplex, k: usize, exec: Exec) -> bool {
    assert!(k >= 1 && cc.top_degree() >= k);
    let weights: Vec<&Weight> = cc.blocks(k).keys().collect();
    exec.map(&weights, |mu| {
        let block = &cc.blocks(k)[*mu];
        let a = block.positions_where(is_a);
        if a.is_empty() {
            return true;
        }
        let Some(below) = cc.block(k - 1, mu) else {
            return false;
        };
        let b_rows = below.positions_where(is_b);
        phi_matrix(cc, block, below, &b_rows).rank() == a.len()
    })
    .into_iter()
    .all(|ok| ok)
}

/// Dense `δ*` restricted to `A`-columns, projected to the given rows of the block below.
fn phi_matrix(cc: &ChainComplex, block: &ChainBlock, below: &ChainBlock, rows: &[usize]) -> DenseMatrix {
    let cols = image_columns(cc, Some(block), below, is_a);
    dense(below.dim(), &cols).select_rows(rows)
}

fn dense(nrows: usize, cols: &[Vec<(usize, Rational)>]) -> DenseMatrix {
    SparseMatrix::from_columns(nrows, cols.to_vec()).to_dense()
}

/// Matrix of the induced differential `d: R_k → R_{k−1}` on weight `μ`:
/// write `δ*r = a + δ*b + c` with `a ∈ A`, `b ∈ A_k`, `c ∈ R` and keep `c`.
pub fn reduced_differential(cc: &ChainComplex, k: usize, mu: &Weight) -> Result<DenseMatrix> {
    let Some(block) = cc.block(k, mu) else {
        return Ok(DenseMatrix::zeros(0, 0));
    };
    let r_cols = block.positions_where(is_r);
    let Some(below) = cc.block(k - 1, mu) else {
        return Ok(DenseMatrix::zeros(0, r_cols.len()));
    };
    let r_rows = below.positions_where(is_r);
    let b_rows = below.positions_where(is_b);
    let t = dense(below.dim(), &image_columns(cc, Some(block), below, is_a));
    let t_b = t.select_rows(&b_rows);
    if t_b.nrows() != t_b.ncols() || t_b.rank() != t_b.ncols() {
        return Err(Error::Decomposition(format!(
            "φ is not invertible at k = {k}, μ = {mu}"
        )));
    }
    let images = dense(below.dim(), &image_columns(cc, Some(block), below, is_r));
    let mut out = DenseMatrix::zeros(r_rows.len(), r_cols.len());
    for j in 0..r_cols.len() {
        let v = images.column(j);
        let v_b: Vec<Rational> = b_rows.iter().map(|&i| v[i].clone()).collect();
        let b = t_b
            .solve(&v_b)
            .ok_or_else(|| Error::Decomposition(format!("no preimage in A at k = {k}, μ = {mu}")))?;
        let tb = t.mul_vec(&b);
        for (i, &row) in r_rows.iter().enumerate() {
            let c = &v[row] - &tb[row];
            if !c.is_zero() {
                out.set(i, j, c);
            }
        }
    }
    Ok(out)
}

/// Homology of `(R, d)`, a second path to the same numbers.
pub fn reduced_homology_of(cc: &ChainComplex, k_max: usize, exec: Exec) -> Result<HomologyReport> {
    assert!(cc.top_degree() > k_max, "complex must reach degree k_max + 1");
    let weights: Vec<(usize, Weight)> = (1..=k_max + 1)
        .flat_map(|k| cc.blocks(k).keys().map(move |mu| (k, mu.clone())))
        .collect();
    let results = exec.map(&weights, |(k, mu)| reduced_differential(cc, *k, mu).map(|d| d.rank()));
    let mut ranks = BTreeMap::new();
    for (key, r) in weights.into_iter().zip(results) {
        ranks.insert(key, r?);
    }
    Ok(report_from_ranks(
        cc.module().lambda().clone(),
        k_max,
        |k| {
            cc.blocks(k)
                .iter()
                .map(|(mu, b)| (mu.clone(), b.positions_where(is_r).len()))
                .filter(|(_, d)| *d > 0)
                .collect()
        },
        &ranks,
    ))
}

pub fn reduced_homology_dims(module: Arc<SimpleModule>, k_max: usize, exec: Exec) -> Result<HomologyReport> {
    let cc = ChainComplex::new(module, k_max + 1, exec);
    reduced_homology_of(&cc, k_max, exec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::realize;
    use crate::verma::simple_quotient;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn complex(n: usize, lam: &str, k: usize) -> ChainComplex {
        let g = Arc::new(realize(n).unwrap());
        let l = Arc::new(simple_quotient(g, &w(lam)).unwrap());
        ChainComplex::new(l, k, Exec::default())
    }

    #[test]
    fn homology_examples() {
        let cc = complex(1, "0", 3);
        let h = homology_of(&cc, 2, Exec::default());
        assert!(h.matches);
        assert_eq!(h.character(0).iter().collect::<Vec<_>>(), vec![(&w("0"), 1)]);
        assert_eq!(h.character(1).iter().collect::<Vec<_>>(), vec![(&w("-1"), 1)]);
        assert_eq!(h.total(2), 0);

        let cc = complex(2, "0,0", 6);
        let h = homology_of(&cc, 5, Exec::default());
        assert!(h.matches);
        let h1: Vec<_> = h.character(1).iter().map(|(w, m)| (w.clone(), m)).collect();
        assert_eq!(h1, vec![(w("-1,1"), 1), (w("0,-1"), 1)]);
        assert!(h.euler_matches().unwrap());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let cc = complex(2, "1,0", 6);
        let a = homology_of(&cc, 5, Exec::Sequential);
        let b = homology_of(&cc, 5, Exec::Parallel);
        assert_eq!(a.blocks, b.blocks);
        assert!(a.matches);
    }

    #[test]
    fn laplacian_examples() {
        let cc = complex(1, "1", 2);
        assert_eq!(laplacian_kernel(&cc, 1).total, 2);
        assert_eq!(laplacian_kernel(&cc, 0).blocks, vec![(w("1"), 1)]);
        let h = homology_of(&cc, 1, Exec::default());
        assert_eq!(h.total(1), 1);
        let cc = complex(1, "0", 2);
        assert_eq!(laplacian_kernel(&cc, 2).total, 0);
    }

    #[test]
    fn decomposition_examples() {
        let cc = complex(1, "0", 3);
        let d2 = verify_decomposition(&cc, 2, Exec::default());
        assert!(d2.holds());
        assert_eq!(d2.totals(), (1, 1, 0));
        let d1 = verify_decomposition(&cc, 1, Exec::default());
        assert!(d1.holds());
        assert_eq!(d1.totals(), (0, 1, 1));
        let d0 = verify_decomposition(&cc, 0, Exec::default());
        assert_eq!(d0.totals(), (0, 0, 1));
        assert!(verify_phi_iso(&cc, 2, Exec::default()));
        assert!(verify_phi_iso(&cc, 1, Exec::default()));

        let cc = complex(2, "0,0", 6);
        for k in 0..=5 {
            assert!(verify_decomposition(&cc, k, Exec::default()).holds(), "k={k}");
            if k >= 1 {
                assert!(verify_phi_iso(&cc, k, Exec::default()));
            }
        }
    }

    #[test]
    fn reduced_path_agrees() {
        for (n, lam) in [(1, "0"), (1, "2"), (2, "1,0")] {
            let k_max = n * n + 1;
            let cc = complex(n, lam, k_max + 1);
            let h = homology_of(&cc, k_max, Exec::default());
            let r = reduced_homology_of(&cc, k_max, Exec::default()).unwrap();
            assert_eq!(h.nonzero(), r.nonzero(), "{lam}");
            assert!(r.matches);
            assert_eq!(h.total(k_max), 0);
        }
    }

    #[test]
    fn reduced_differential_squares_to_zero() {
        let cc = complex(2, "1,0", 5);
        for k in 2..=5 {
            for mu in cc.blocks(k).keys() {
                let d_k = reduced_differential(&cc, k, mu).unwrap();
                let d_km1 = reduced_differential(&cc, k - 1, mu).unwrap();
                if d_k.nrows() > 0 && d_km1.nrows() > 0 && d_k.ncols() > 0 {
                    assert!(d_km1.mul(&d_k).is_zero());
                }
            }
        }
    }
}
