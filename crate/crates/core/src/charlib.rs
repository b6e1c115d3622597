//! Formal characters.
//!
//! Irreducible characters come from Freudenthal's recursion for so(2n+1),
//! whose integral characters agree with those of osp(1|2n) under the
//! identification of weight lattices.

use std::collections::{BTreeMap, HashMap};

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{inner_unchecked, int, is_integral_dominant, rho, Parity, Rational, RootId, RootSystem, Weight};
use crate::weyl::{dot_act_unchecked, enumerate_weyl};

/// Finitely supported map from weights to positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCharacter(BTreeMap<Weight, u64>);

impl FormalCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.0.entry(w).or_insert(0) += m;
        }
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.0.iter().map(|(w, m)| (w, *m))
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.0.keys()
    }

    pub fn dim(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn translate(&self, by: &Weight) -> FormalCharacter {
        FormalCharacter(self.0.iter().map(|(w, m)| (w + by, *m)).collect())
    }

    /// Product of characters (convolution of supports).
    pub fn mul(&self, other: &FormalCharacter) -> FormalCharacter {
        let mut out = FormalCharacter::new();
        for (a, ma) in &self.0 {
            for (b, mb) in &other.0 {
                out.add(a + b, ma * mb);
            }
        }
        out
    }
}

impl FromIterator<(Weight, u64)> for FormalCharacter {
    fn from_iter<I: IntoIterator<Item = (Weight, u64)>>(iter: I) -> Self {
        let mut c = FormalCharacter::new();
        for (w, m) in iter {
            c.add(w, m);
        }
        c
    }
}

/// Character with integer multiplicities, kept as positive and negative parts
/// with disjoint supports.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedCharacter {
    pub positive: FormalCharacter,
    pub negative: FormalCharacter,
}

impl SignedCharacter {
    pub fn from_terms<I: IntoIterator<Item = (Weight, i64)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
        for (w, m) in terms {
            *acc.entry(w).or_insert(0) += m;
        }
        let mut out = SignedCharacter::default();
        for (w, m) in acc {
            if m > 0 {
                out.positive.add(w, m as u64);
            } else if m < 0 {
                out.negative.add(w, m.unsigned_abs());
            }
        }
        out
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.positive.mult(w) as i64 - self.negative.mult(w) as i64
    }

    pub fn terms(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.positive
            .iter()
            .map(|(w, m)| (w.clone(), m as i64))
            .chain(self.negative.iter().map(|(w, m)| (w.clone(), -(m as i64))))
    }

    pub fn sub(&self, other: &SignedCharacter) -> SignedCharacter {
        SignedCharacter::from_terms(self.terms().chain(other.terms().map(|(w, m)| (w, -m))))
    }

    pub fn is_zero(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }
}

/// Counts PBW exponent vectors (even roots unbounded, odd roots at most once)
/// summing to a given element of `Q⁺`. Results are memoized.
#[derive(Debug)]
pub struct VermaCounter {
    roots: Vec<(Vec<i64>, Parity)>,
    memo: HashMap<(usize, Vec<i64>), u64>,
}

impl VermaCounter {
    pub fn new(rs: &RootSystem) -> Self {
        let roots = rs
            .positive()
            .iter()
            .map(|r| (r.weight.nonneg_root_coords().unwrap(), r.parity))
            .collect();
        VermaCounter {
            roots,
            memo: HashMap::new(),
        }
    }

    /// `dim M(λ)^{λ−diff}`.
    pub fn count(&mut self, diff: &Weight) -> u64 {
        match diff.nonneg_root_coords() {
            Some(c) => self.count_from(0, c),
            None => 0,
        }
    }

    fn count_from(&mut self, idx: usize, rest: Vec<i64>) -> u64 {
        if rest.iter().all(|&c| c == 0) {
            return 1;
        }
        if idx == self.roots.len() {
            return 0;
        }
        let key = (idx, rest);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (root, parity) = self.roots[idx].clone();
        let max_uses = if parity == Parity::Odd { 1 } else { u32::MAX };
        let mut total = 0;
        let mut cur = key.1.clone();
        let mut uses = 0;
        loop {
            total += self.count_from(idx + 1, cur.clone());
            if uses == max_uses {
                break;
            }
            for (c, r) in cur.iter_mut().zip(&root) {
                *c -= r;
            }
            if cur.iter().any(|&c| c < 0) {
                break;
            }
            uses += 1;
        }
        self.memo.insert(key, total);
        total
    }
}

/// `dim M(λ)^μ`.
pub fn verma_mult(lambda: &Weight, mu: &Weight) -> Result<u64> {
    let rs = RootSystem::new(lambda.rank())?;
    if mu.rank() != lambda.rank() {
        return Err(Error::RankMismatch {
            expected: lambda.rank(),
            found: mu.rank(),
        });
    }
    Ok(VermaCounter::new(&rs).count(&(lambda - mu)))
}

/// Positive roots of so(2n+1): `δ_i ± δ_j` (i<j) and `δ_i`.
fn so_odd_positive_roots(n: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(&Weight::delta(n, i) - &Weight::delta(n, j));
            out.push(&Weight::delta(n, i) + &Weight::delta(n, j));
        }
        out.push(Weight::delta(n, i));
    }
    out
}

/// Weights `μ` with `−λ ≤ μ ≤ λ` in dominance order, sorted by the height of `λ − μ`.
pub fn dominance_interval(lambda: &Weight) -> Vec<Weight> {
    let n = lambda.rank();
    let span = lambda.scale(&int(2)).nonneg_root_coords().unwrap_or_default();
    let simple: Vec<Weight> = (0..n)
        .map(|i| {
            if i + 1 < n {
                &Weight::delta(n, i) - &Weight::delta(n, i + 1)
            } else {
                Weight::delta(n, i)
            }
        })
        .collect();
    let mut out: Vec<(i64, Weight)> = Vec::new();
    let mut coeffs = vec![0i64; n];
    loop {
        let mut mu = lambda.clone();
        for (c, a) in coeffs.iter().zip(&simple) {
            mu = &mu - &a.scale(&int(*c));
        }
        out.push((coeffs.iter().sum(), mu));
        let mut i = 0;
        loop {
            if i == n {
                out.sort();
                return out.into_iter().map(|(_, w)| w).collect();
            }
            if coeffs[i] < span[i] {
                coeffs[i] += 1;
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// `ch L(λ)` by Freudenthal's formula.
pub fn simple_character(lambda: &Weight) -> Result<FormalCharacter> {
    if !is_integral_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let n = lambda.rank();
    let r = rho(n);
    let roots = so_odd_positive_roots(n);
    let top = inner_unchecked(&(lambda + &r), &(lambda + &r));
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    for mu in dominance_interval(lambda) {
        if &mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let shifted = &mu + &r;
        let denom = &top - inner_unchecked(&shifted, &shifted);
        let mut num = Rational::zero();
        for alpha in &roots {
            let mut k = 1;
            loop {
                let nu = &mu + &alpha.scale(&int(k));
                if !nu.le_dominance(lambda) {
                    break;
                }
                if let Some(&m) = mult.get(&nu) {
                    num += int(2 * m as i64) * inner_unchecked(&nu, alpha);
                }
                k += 1;
            }
        }
        if denom.is_zero() {
            debug_assert!(num.is_zero());
            continue;
        }
        let m = num / denom;
        assert!(m.is_integer(), "non-integral Freudenthal multiplicity at {mu}");
        let m = m.to_integer().to_u64().expect("negative multiplicity");
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    Ok(mult.into_iter().collect())
}

/// Weyl's dimension formula for so(2n+1).
pub fn weyl_dimension(lambda: &Weight) -> Rational {
    let r = rho(lambda.rank());
    let shifted = lambda + &r;
    so_odd_positive_roots(lambda.rank())
        .iter()
        .fold(int(1), |acc, a| acc * inner_unchecked(&shifted, a) / inner_unchecked(&r, a))
}

/// Super-exterior monomials of degree `k`: sorted root-id lists in which even
/// roots occur at most once and odd roots any number of times.
pub fn exterior_monomials(rs: &RootSystem, k: usize) -> Vec<Vec<RootId>> {
    fn rec(rs: &RootSystem, start: RootId, left: usize, cur: &mut Vec<RootId>, out: &mut Vec<Vec<RootId>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for id in start..rs.len() {
            cur.push(id);
            let next = if rs.parity(id) == Parity::Odd { id } else { id + 1 };
            rec(rs, next, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rs, 0, k, &mut Vec::new(), &mut out);
    out
}

/// `ch Λᵏ n̄` in the super sense.
pub fn exterior_character(n: usize, k: usize) -> Result<FormalCharacter> {
    let rs = RootSystem::new(n)?;
    Ok(exterior_monomials(&rs, k)
        .into_iter()
        .map(|m| {
            let w = m
                .iter()
                .fold(Weight::zero(n), |acc, &id| &acc - &rs.root(id).weight);
            (w, 1)
        })
        .collect())
}

/// `Σ_{w∈W} (−1)^{|w|} e^{w·λ}`.
pub fn euler_rhs(lambda: &Weight) -> Result<SignedCharacter> {
    if !is_integral_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let terms = enumerate_weyl(lambda.rank())?
        .into_iter()
        .map(|w| {
            let sign = if w.length() % 2 == 0 { 1 } else { -1 };
            (dot_act_unchecked(&w, lambda), sign)
        })
        .collect::<Vec<_>>();
    Ok(SignedCharacter::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn verma_examples() {
        // U(n̄) for osp(1|2) has PBW basis Y_{2δ}^b Y_δ^a, a ∈ {0,1}: one vector per weight.
        assert_eq!(verma_mult(&w("0"), &w("-2")).unwrap(), 1);
        assert_eq!(verma_mult(&w("0"), &w("-5")).unwrap(), 1);
        assert_eq!(verma_mult(&w("1,0"), &w("1,0")).unwrap(), 1);
        assert_eq!(verma_mult(&w("0,0"), &w("1,0")).unwrap(), 0);
        assert_eq!(verma_mult(&w("0,0"), &w("1/2,0")).unwrap(), 0);
    }

    #[test]
    fn verma_matches_generating_function() {
        // Π_odd (1 + x^γ) / Π_even (1 − x^α), expanded by brute force for n = 2.
        let rs = RootSystem::new(2).unwrap();
        let mut counter = VermaCounter::new(&rs);
        let bound = 6i64;
        let mut series: HashMap<Vec<i64>, u64> = HashMap::from([(vec![0, 0], 1)]);
        for r in rs.positive() {
            let step = r.weight.to_ints().unwrap();
            let max = if r.parity == Parity::Odd { 1 } else { bound };
            let mut next: HashMap<Vec<i64>, u64> = HashMap::new();
            for (v, m) in &series {
                for e in 0..=max {
                    let u = vec![v[0] + e * step[0], v[1] + e * step[1]];
                    if u[0].abs() <= bound && u[1].abs() <= bound {
                        *next.entry(u).or_insert(0) += m;
                    }
                }
            }
            series = next;
        }
        for a in 0..=3 {
            for b in -3..=3 {
                let d = Weight::from_ints(&[a, b]);
                let expected = series.get(&vec![a, b]).copied().unwrap_or(0);
                assert_eq!(counter.count(&d), expected, "{d}");
            }
        }
    }

    #[test]
    fn simple_character_examples() {
        let triv = simple_character(&w("0,0")).unwrap();
        assert_eq!(triv.dim(), 1);
        assert_eq!(triv.mult(&w("0,0")), 1);
        let c = simple_character(&w("1")).unwrap();
        assert_eq!(c.dim(), 3);
        for x in ["1", "0", "-1"] {
            assert_eq!(c.mult(&w(x)), 1);
        }
        let v = simple_character(&w("1,0")).unwrap();
        assert_eq!(v.dim(), 5);
        for x in ["1,0", "-1,0", "0,1", "0,-1", "0,0"] {
            assert_eq!(v.mult(&w(x)), 1);
        }
        assert!(simple_character(&w("0,1")).is_err());
    }

    #[test]
    fn freudenthal_matches_weyl_dimension_and_invariance() {
        let cases = ["0", "1", "2", "5", "0,0", "1,0", "1,1", "2,0", "2,1", "3,2", "1,0,0", "1,1,0", "2,1,1"];
        for s in cases {
            let lambda = w(s);
            let ch = simple_character(&lambda).unwrap();
            assert_eq!(int(ch.dim() as i64), weyl_dimension(&lambda), "{s}");
            for x in enumerate_weyl(lambda.rank()).unwrap() {
                for (mu, m) in ch.iter() {
                    assert_eq!(ch.mult(&x.act(mu)), m);
                }
            }
        }
    }

    #[test]
    fn exterior_examples() {
        let e2 = exterior_character(1, 2).unwrap();
        assert_eq!(e2.dim(), 2);
        assert_eq!(e2.mult(&w("-2")), 1);
        assert_eq!(e2.mult(&w("-3")), 1);
        assert_eq!(exterior_character(2, 0).unwrap().mult(&w("0,0")), 1);
        let e1 = exterior_character(2, 1).unwrap();
        let rs = RootSystem::new(2).unwrap();
        assert_eq!(e1.dim(), 6);
        for r in rs.positive() {
            assert_eq!(e1.mult(&-&r.weight), 1);
        }
    }

    #[test]
    fn exterior_matches_product_formula() {
        // Π_even (1 + t e^{−α}) · Π_odd 1/(1 − t e^{−γ}), truncated in t.
        let n = 2;
        let rs = RootSystem::new(n).unwrap();
        let max_deg = 6usize;
        let mut series: BTreeMap<(usize, Weight), u64> = BTreeMap::from([((0, Weight::zero(n)), 1)]);
        for r in rs.positive() {
            let max = if r.parity == Parity::Even { 1 } else { max_deg };
            let mut next = BTreeMap::new();
            for ((d, wt), m) in &series {
                for e in 0..=max {
                    if d + e > max_deg {
                        break;
                    }
                    let key = (d + e, wt - &r.weight.scale(&int(e as i64)));
                    *next.entry(key).or_insert(0) += m;
                }
            }
            series = next;
        }
        for k in 0..=max_deg {
            let ch = exterior_character(n, k).unwrap();
            let expected: FormalCharacter = series
                .iter()
                .filter(|((d, _), _)| *d == k)
                .map(|((_, wt), m)| (wt.clone(), *m))
                .collect();
            assert_eq!(ch, expected, "k = {k}");
        }
    }

    #[test]
    fn euler_rhs_examples() {
        let e = euler_rhs(&w("0")).unwrap();
        assert_eq!(e.coeff(&w("0")), 1);
        assert_eq!(e.coeff(&w("-1")), -1);
        let e = euler_rhs(&w("0,0")).unwrap();
        assert_eq!(e.positive.dim() + e.negative.dim(), 8);
        assert_eq!(e.positive.len() + e.negative.len(), 8);
    }

    #[test]
    fn kostant_identity_on_characters() {
        // Σ_k (−1)^k ch Λᵏn̄ · ch L(λ) = Σ_w (−1)^{|w|} e^{w·λ}, checked at every
        // weight whose depth below λ is at most `depth`; deeper k cannot reach them.
        for s in ["0", "1", "2", "0,0", "1,0", "1,1"] {
            let lambda = w(s);
            let n = lambda.rank();
            let ch = simple_character(&lambda).unwrap();
            let depth = 8usize;
            let mut terms = Vec::new();
            for k in 0..=depth {
                let prod = exterior_character(n, k).unwrap().mul(&ch);
                let sign = if k % 2 == 0 { 1 } else { -1 };
                terms.extend(prod.iter().map(|(x, m)| (x.clone(), sign * m as i64)));
            }
            let lhs = SignedCharacter::from_terms(terms);
            let rhs = euler_rhs(&lambda).unwrap();
            for mu in dominance_interval(&lambda) {
                if (&lambda - &mu).height().unwrap() as usize <= depth {
                    assert_eq!(lhs.coeff(&mu), rhs.coeff(&mu), "{s} at {mu}");
                }
            }
            // Deeper weights reached by the bottom of the truncation are fine too.
            for (x, c) in rhs.terms() {
                if (&lambda - &x).height().unwrap() as usize <= depth {
                    assert_eq!(lhs.coeff(&x), c);
                }
            }
        }
    }
}
