//! osp(1|2n) realized inside gl(1|2n).
//!
//! The defining module has basis `e_0` (even, weight 0), `e_1..e_n` (odd,
//! weights `δ_i`) and `f_1..f_n` (odd, weights `−δ_i`), carrying the even
//! supersymmetric form `B(e_0,e_0) = 1`, `B(e_i,f_i) = −B(f_i,e_i) = 1`.
//! Every root space is obtained as the kernel of the invariance condition
//! restricted to matrices of that weight, so no structure constant is
//! entered by hand.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::rootsys::{int, Parity, Rational, RootId, RootKind, RootSystem, Weight};

/// What a basis element of the realization is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    /// Raising vector `X_α`.
    Raising(RootId),
    /// Lowering vector `Y_α` of weight `−α`.
    Lowering(RootId),
    /// Cartan element `h_i` with `μ(h_i) = μ_i`.
    Cartan(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub kind: BasisKind,
    pub index: usize,
}

/// A finite linear combination of basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    rank: usize,
    terms: BTreeMap<usize, Rational>,
}

impl Element {
    pub fn zero(rank: usize) -> Self {
        Element {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(rank: usize, index: usize) -> Self {
        Element {
            rank,
            terms: BTreeMap::from([(index, Rational::one())]),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coeff(&self, index: usize) -> Rational {
        self.terms.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: usize, c: Rational) {
        let e = self.terms.entry(index).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Element {
        let mut out = Element::zero(self.rank);
        if !s.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(*k, v * s);
            }
        }
        out
    }
}

/// Structure constants of osp(1|2n) together with the defining matrices.
#[derive(Clone, Debug)]
pub struct Realization {
    roots: RootSystem,
    elements: Vec<BasisElement>,
    weights: Vec<Weight>,
    parities: Vec<Parity>,
    matrices: Vec<DenseMatrix>,
    table: Vec<Vec<Vec<(usize, Rational)>>>,
    lowering_table: Vec<Vec<Option<(RootId, Rational)>>>,
}

impl Realization {
    pub fn new(n: usize) -> Result<Self> {
        let roots = RootSystem::new(n)?;
        let dim_v = 2 * n + 1;
        let module_weights: Vec<Weight> = (0..dim_v)
            .map(|a| match a {
                0 => Weight::zero(n),
                a if a <= n => Weight::delta(n, a - 1),
                a => -&Weight::delta(n, a - n - 1),
            })
            .collect();
        let module_parity = |a: usize| if a == 0 { Parity::Even } else { Parity::Odd };
        let mut gram = DenseMatrix::zeros(dim_v, dim_v);
        gram.set(0, 0, Rational::one());
        for i in 1..=n {
            gram.set(i, i + n, Rational::one());
            gram.set(i + n, i, -Rational::one());
        }

        let root_space = |target: &Weight| -> Vec<DenseMatrix> {
            let candidates: Vec<(usize, usize)> = (0..dim_v)
                .flat_map(|a| (0..dim_v).map(move |b| (a, b)))
                .filter(|&(a, b)| &(&module_weights[a] - &module_weights[b]) == target)
                .collect();
            let parity = |&(a, b): &(usize, usize)| module_parity(a).is_odd() != module_parity(b).is_odd();
            let odd = candidates.first().map(parity).unwrap_or(false);
            debug_assert!(candidates.iter().all(|c| parity(c) == odd));
            // Rows: invariance condition (Xᵀ G)_{uv} + (−1)^{|X||u|} (G X)_{uv} = 0.
            let mut rows = Vec::new();
            for u in 0..dim_v {
                for v in 0..dim_v {
                    let sign = if odd && module_parity(u).is_odd() { -1 } else { 1 };
                    let row: Vec<Rational> = candidates
                        .iter()
                        .map(|&(a, b)| {
                            // E_{ab}: (Eᵀ G)_{uv} = [b = u] G_{av}; (G E)_{uv} = G_{ua} [b = v].
                            let mut x = Rational::zero();
                            if b == u {
                                x += gram.get(a, v);
                            }
                            if b == v {
                                x += gram.get(u, a) * int(sign);
                            }
                            x
                        })
                        .collect();
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
            let system = DenseMatrix::from_rows(candidates.len(), rows);
            system
                .kernel()
                .into_iter()
                .map(|v| {
                    let first = v.iter().find(|x| !x.is_zero()).unwrap().clone();
                    let mut m = DenseMatrix::zeros(dim_v, dim_v);
                    for (&(a, b), c) in candidates.iter().zip(&v) {
                        m.set(a, b, c / &first);
                    }
                    m
                })
                .collect()
        };

        let r = roots.len();
        let mut elements = Vec::new();
        let mut weights = Vec::new();
        let mut parities = Vec::new();
        let mut matrices = Vec::new();
        for id in 0..r {
            let space = root_space(&roots.root(id).weight);
            assert_eq!(space.len(), 1, "root space of {} is not one-dimensional", roots.root(id).weight);
            elements.push(BasisElement {
                kind: BasisKind::Raising(id),
                index: id,
            });
            weights.push(roots.root(id).weight.clone());
            parities.push(roots.parity(id));
            matrices.push(space.into_iter().next().unwrap());
        }
        for id in 0..r {
            let space = root_space(&-&roots.root(id).weight);
            assert_eq!(space.len(), 1);
            elements.push(BasisElement {
                kind: BasisKind::Lowering(id),
                index: r + id,
            });
            weights.push(-&roots.root(id).weight);
            parities.push(roots.parity(id));
            matrices.push(space.into_iter().next().unwrap());
        }
        assert_eq!(root_space(&Weight::zero(n)).len(), n, "Cartan subalgebra has wrong dimension");
        for i in 0..n {
            let mut h = DenseMatrix::zeros(dim_v, dim_v);
            h.set(i + 1, i + 1, Rational::one());
            h.set(i + 1 + n, i + 1 + n, -Rational::one());
            elements.push(BasisElement {
                kind: BasisKind::Cartan(i),
                index: 2 * r + i,
            });
            weights.push(Weight::zero(n));
            parities.push(Parity::Even);
            matrices.push(h);
        }

        // Normalize Y_{2δ_i} := [Y_{δ_i}, Y_{δ_i}].
        for i in 0..n {
            let y = &matrices[r + roots.short(i)];
            let sq = supercommutator(y, y, Parity::Odd, Parity::Odd);
            matrices[r + roots.long(i)] = sq;
        }

        let mut real = Realization {
            roots,
            elements,
            weights,
            parities,
            matrices,
            table: Vec::new(),
            lowering_table: Vec::new(),
        };
        real.build_table();
        Ok(real)
    }

    fn build_table(&mut self) {
        let dim = self.dim();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let m = supercommutator(
                    &self.matrices[a],
                    &self.matrices[b],
                    self.parities[a],
                    self.parities[b],
                );
                let w = &self.weights[a] + &self.weights[b];
                table[a][b] = self.decompose(&m, &w);
            }
        }
        let r = self.roots.len();
        let mut lowering = vec![vec![None; r]; r];
        for a in 0..r {
            for b in 0..r {
                let terms = &table[r + a][r + b];
                debug_assert!(terms.len() <= 1);
                if let Some((idx, c)) = terms.first() {
                    lowering[a][b] = Some((idx - r, c.clone()));
                }
            }
        }
        self.table = table;
        self.lowering_table = lowering;
    }

    /// Expresses a matrix of known weight in the basis; panics if it lies
    /// outside the span, which would mean the realization is broken.
    fn decompose(&self, m: &DenseMatrix, w: &Weight) -> Vec<(usize, Rational)> {
        let dim = self.dim();
        if m.is_zero() {
            return Vec::new();
        }
        let n = self.rank();
        let mut out = Vec::new();
        let mut rebuilt = DenseMatrix::zeros(m.nrows(), m.ncols());
        if w.is_zero() {
            for i in 0..n {
                let c = m.get(i + 1, i + 1).clone();
                if !c.is_zero() {
                    rebuilt = add(&rebuilt, &self.matrices[2 * self.roots.len() + i].scale(&c));
                    out.push((2 * self.roots.len() + i, c));
                }
            }
        } else {
            let idx = (0..dim)
                .find(|&i| &self.weights[i] == w && self.elements[i].kind != BasisKind::Cartan(0))
                .unwrap_or_else(|| panic!("bracket of weight {w} is nonzero but {w} is not a root"));
            let basis = &self.matrices[idx];
            let (r0, c0) = first_nonzero(basis);
            let c = m.get(r0, c0) / basis.get(r0, c0);
            rebuilt = basis.scale(&c);
            out.push((idx, c));
        }
        assert_eq!(&rebuilt, m, "bracket not closed in the realization");
        out
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    /// Total dimension `2n² + 3n`.
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, index: usize) -> &BasisElement {
        &self.elements[index]
    }

    pub fn weight(&self, index: usize) -> &Weight {
        &self.weights[index]
    }

    pub fn parity(&self, index: usize) -> Parity {
        self.parities[index]
    }

    /// Matrix of a basis element in the defining representation.
    pub fn matrix(&self, index: usize) -> &DenseMatrix {
        &self.matrices[index]
    }

    /// Parity of the defining-module basis vector `a`.
    pub fn module_parity(&self, a: usize) -> Parity {
        if a == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn x(&self, root: RootId) -> usize {
        root
    }

    pub fn y(&self, root: RootId) -> usize {
        self.roots.len() + root
    }

    pub fn h(&self, i: usize) -> usize {
        2 * self.roots.len() + i
    }

    /// Structure constants `[b_a, b_b]` as a sparse combination.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.table[a][b]
    }

    /// `[Y_a, Y_b] = c · Y_{a+b}` when nonzero.
    pub fn bracket_lowering(&self, a: RootId, b: RootId) -> Option<(RootId, &Rational)> {
        self.lowering_table[a][b].as_ref().map(|(r, c)| (*r, c))
    }

    /// Bilinear extension of the structure table.
    pub fn bracket(&self, a: &Element, b: &Element) -> Result<Element> {
        for e in [a, b] {
            if e.rank != self.rank() {
                return Err(Error::RankMismatch {
                    expected: self.rank(),
                    found: e.rank,
                });
            }
        }
        let mut out = Element::zero(self.rank());
        for (i, ca) in &a.terms {
            for (j, cb) in &b.terms {
                let c = ca * cb;
                for (k, v) in &self.table[*i][*j] {
                    out.add_term(*k, &c * v);
                }
            }
        }
        Ok(out)
    }

    pub fn basis_element(&self, index: usize) -> Element {
        Element::basis(self.rank(), index)
    }

    /// Index of the basis element for a root given by kind.
    pub fn lowering_of(&self, kind: RootKind) -> Option<usize> {
        self.roots.find_kind(kind).map(|r| self.y(r))
    }
}

fn first_nonzero(m: &DenseMatrix) -> (usize, usize) {
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            if !m.get(r, c).is_zero() {
                return (r, c);
            }
        }
    }
    unreachable!("basis matrix is zero")
}

fn add(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    a.sub(&b.scale(&-Rational::one()))
}

/// `[A, B] = AB − (−1)^{|A||B|} BA`.
pub fn supercommutator(a: &DenseMatrix, b: &DenseMatrix, pa: Parity, pb: Parity) -> DenseMatrix {
    let ab = a.mul(b);
    let ba = b.mul(a);
    if pa.sign_with(pb) < 0 {
        add(&ab, &ba)
    } else {
        ab.sub(&ba)
    }
}

/// Builds the structure table of osp(1|2n).
pub fn realize(n: usize) -> Result<Realization> {
    Realization::new(n)
}
