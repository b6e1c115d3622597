//! Root data of osp(1|2n) in the `δ`-basis.
//!
//! Weights are vectors of exact rationals; the `i`-th coordinate is the
//! coefficient of `δ_i`. The invariant form is the standard one,
//! `⟨δ_i, δ_j⟩ = [i = j]`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// A weight `Σ c_i δ_i` of a fixed rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![Rational::zero(); n])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    /// The basis vector `δ_i` (zero-based `i`).
    pub fn delta(n: usize, i: usize) -> Self {
        let mut w = Weight::zero(n);
        w.0[i] = Rational::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, if every coordinate is an integer fitting in `i64`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn scale(&self, s: &Rational) -> Weight {
        Weight(self.0.iter().map(|c| c * s).collect())
    }

    /// Sum of the coordinates.
    pub fn coord_sum(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    fn check_rank(&self, other: &Weight) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.check_rank(other)?;
        Ok(self - other)
    }

    /// Coefficients of `self` in the simple roots `δ_1−δ_2, …, δ_{n−1}−δ_n, δ_n`.
    ///
    /// These are the partial sums of the coordinates.
    pub fn simple_root_coords(&self) -> Vec<Rational> {
        let mut acc = Rational::zero();
        self.0
            .iter()
            .map(|c| {
                acc += c;
                acc.clone()
            })
            .collect()
    }

    /// `Some(c)` when `self = Σ c_i α_i` with every `c_i` a non-negative integer.
    pub fn nonneg_root_coords(&self) -> Option<Vec<i64>> {
        self.simple_root_coords()
            .into_iter()
            .map(|c| {
                if c.is_integer() && !c.is_negative() {
                    c.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Height of `self` as an element of the root lattice, if it lies in `Q⁺`.
    pub fn height(&self) -> Option<i64> {
        self.nonneg_root_coords().map(|c| c.iter().sum())
    }

    /// Dominance order: `self ≤ other` iff `other − self ∈ Q⁺`.
    pub fn le_dominance(&self, other: &Weight) -> bool {
        (other - self).nonneg_root_coords().is_some()
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse(format!("empty weight {s:?}")));
        }
        s.split(',')
            .map(|part| {
                Rational::from_str(part.trim())
                    .map_err(|_| Error::Parse(format!("bad rational {part:?} in weight {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// `Σ_i μ_i ν_i`.
pub fn inner(mu: &Weight, nu: &Weight) -> Result<Rational> {
    mu.check_rank(nu)?;
    Ok(inner_unchecked(mu, nu))
}

pub(crate) fn inner_unchecked(mu: &Weight, nu: &Weight) -> Rational {
    mu.0.iter().zip(&nu.0).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// Integer coordinates, weakly decreasing, non-negative.
pub fn is_integral_dominant(lambda: &Weight) -> bool {
    match lambda.to_ints() {
        Some(c) => c.windows(2).all(|w| w[0] >= w[1]) && c.last().is_none_or(|&x| x >= 0),
        None => false,
    }
}

/// Trivial stabilizer of `λ+ρ`: absolute values pairwise distinct and nonzero.
pub fn is_dot_regular(lambda: &Weight) -> bool {
    let shifted = lambda + &rho(lambda.rank());
    let mut abs: Vec<Rational> = shifted.coords().iter().map(|c| c.abs()).collect();
    if abs.iter().any(Zero::is_zero) {
        return false;
    }
    abs.sort();
    abs.windows(2).all(|w| w[0] != w[1])
}

/// `ρ = Σ_j (n + 1/2 − j) δ_j`.
pub fn rho(n: usize) -> Weight {
    Weight(
        (1..=n)
            .map(|j| rat(2 * (n as i64) + 1 - 2 * j as i64, 2))
            .collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(−1)^{p·q}`.
    pub fn sign_with(self, other: Parity) -> i32 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    pub weight: Weight,
    pub parity: Parity,
    pub positive: bool,
}

/// Shape of a positive root, with zero-based indices `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    /// `δ_i − δ_j`
    Minus(usize, usize),
    /// `δ_i + δ_j`
    Plus(usize, usize),
    /// `2δ_i`
    Long(usize),
    /// `δ_i` (odd)
    Short(usize),
}

/// Index into [`RootSystem::positive`].
pub type RootId = usize;

/// Positive root data of osp(1|2n).
///
/// The positive roots are stored in one global order used by PBW words and
/// chain monomials: even roots sorted by height (ties broken
/// lexicographically, larger coordinates first), then odd roots by height.
#[derive(Clone, Debug)]
pub struct RootSystem {
    rank: usize,
    positive: Vec<Root>,
    kinds: Vec<RootKind>,
    heights: Vec<i64>,
    by_weight: HashMap<Weight, RootId>,
    rho: Weight,
    simple: Vec<RootId>,
}

impl RootSystem {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(0));
        }
        let mut kinds = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                kinds.push(RootKind::Minus(i, j));
                kinds.push(RootKind::Plus(i, j));
            }
            kinds.push(RootKind::Long(i));
            kinds.push(RootKind::Short(i));
        }
        let weight_of = |k: &RootKind| -> Weight {
            let mut w = vec![0i64; n];
            match *k {
                RootKind::Minus(i, j) => {
                    w[i] = 1;
                    w[j] = -1;
                }
                RootKind::Plus(i, j) => {
                    w[i] = 1;
                    w[j] = 1;
                }
                RootKind::Long(i) => w[i] = 2,
                RootKind::Short(i) => w[i] = 1,
            }
            Weight::from_ints(&w)
        };
        let mut entries: Vec<(RootKind, Weight, i64)> = kinds
            .iter()
            .map(|k| {
                let w = weight_of(k);
                let h = w.height().expect("positive root lies in Q+");
                (*k, w, h)
            })
            .collect();
        entries.sort_by(|a, b| {
            let pa = matches!(a.0, RootKind::Short(_));
            let pb = matches!(b.0, RootKind::Short(_));
            pa.cmp(&pb)
                .then(a.2.cmp(&b.2))
                .then_with(|| b.1.cmp(&a.1))
        });
        let mut positive = Vec::new();
        let mut kinds = Vec::new();
        let mut heights = Vec::new();
        let mut by_weight = HashMap::new();
        for (id, (k, w, h)) in entries.into_iter().enumerate() {
            let parity = if matches!(k, RootKind::Short(_)) {
                Parity::Odd
            } else {
                Parity::Even
            };
            by_weight.insert(w.clone(), id);
            positive.push(Root {
                weight: w,
                parity,
                positive: true,
            });
            kinds.push(k);
            heights.push(h);
        }
        let simple = (0..n)
            .map(|i| {
                let k = if i + 1 < n {
                    RootKind::Minus(i, i + 1)
                } else {
                    RootKind::Short(i)
                };
                kinds.iter().position(|x| *x == k).unwrap()
            })
            .collect();
        Ok(RootSystem {
            rank: n,
            positive,
            kinds,
            heights,
            by_weight,
            rho: rho(n),
            simple,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All positive roots in the global order.
    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.positive[id]
    }

    pub fn kind(&self, id: RootId) -> RootKind {
        self.kinds[id]
    }

    pub fn parity(&self, id: RootId) -> Parity {
        self.positive[id].parity
    }

    pub fn height(&self, id: RootId) -> i64 {
        self.heights[id]
    }

    pub fn positive_even(&self) -> Vec<&Root> {
        self.positive.iter().filter(|r| r.parity == Parity::Even).collect()
    }

    pub fn positive_odd(&self) -> Vec<&Root> {
        self.positive.iter().filter(|r| r.parity == Parity::Odd).collect()
    }

    pub fn even_ids(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.len()).filter(|&i| self.parity(i) == Parity::Even)
    }

    pub fn odd_ids(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.len()).filter(|&i| self.parity(i) == Parity::Odd)
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Simple roots `δ_1−δ_2, …, δ_{n−1}−δ_n, δ_n`, in that order.
    pub fn simple_roots(&self) -> &[RootId] {
        &self.simple
    }

    pub fn find(&self, w: &Weight) -> Option<RootId> {
        self.by_weight.get(w).copied()
    }

    pub fn find_kind(&self, kind: RootKind) -> Option<RootId> {
        self.kinds.iter().position(|k| *k == kind)
    }

    /// Id of `δ_i` (odd).
    pub fn short(&self, i: usize) -> RootId {
        self.find_kind(RootKind::Short(i)).unwrap()
    }

    /// Id of `2δ_i`.
    pub fn long(&self, i: usize) -> RootId {
        self.find_kind(RootKind::Long(i)).unwrap()
    }
}

/// Convenience wrapper matching the operation name used by the CLI.
pub fn build_root_system(n: usize) -> Result<RootSystem> {
    RootSystem::new(n)
}
