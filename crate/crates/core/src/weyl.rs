//! The Weyl group of osp(1|2n) as signed permutations.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::{is_dot_regular, rho, Rational, Weight};

/// Default cap on the rank for full enumeration (`|W| = 2ⁿ n!`).
pub const DEFAULT_ENUMERATION_BOUND: usize = 5;

/// Signed permutation `δ_i ↦ signs[i] · δ_{perm[i]}` (zero-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Parse(format!("not a permutation: {perm:?}")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::Parse(format!("signs must be ±1: {signs:?}")));
        }
        Ok(WeylElement { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// The longest element `−1`.
    pub fn longest(n: usize) -> Self {
        WeylElement {
            perm: (0..n).collect(),
            signs: vec![-1; n],
        }
    }

    /// Simple reflection `s_i`: for `i < n−1` swaps `δ_i, δ_{i+1}`; `s_{n−1}` negates `δ_n`.
    pub fn simple_reflection(n: usize, i: usize) -> Self {
        let mut w = WeylElement::identity(n);
        if i + 1 < n {
            w.perm.swap(i, i + 1);
        } else {
            w.signs[n - 1] = -1;
        }
        w
    }

    /// Reflections in the positive even roots `δ_i−δ_j`, `δ_i+δ_j`, `2δ_i`.
    pub fn reflections(n: usize) -> Vec<WeylElement> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut minus = WeylElement::identity(n);
                minus.perm.swap(i, j);
                out.push(minus);
                let mut plus = WeylElement::identity(n);
                plus.perm.swap(i, j);
                plus.signs[i] = -1;
                plus.signs[j] = -1;
                out.push(plus);
            }
            let mut flip = WeylElement::identity(n);
            flip.signs[i] = -1;
            out.push(flip);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.signs.iter().all(|&s| s == 1)
    }

    /// Plain action on weights.
    pub fn act(&self, mu: &Weight) -> Weight {
        let mut out = vec![Rational::zero(); self.rank()];
        for (i, c) in mu.coords().iter().enumerate() {
            out[self.perm[i]] = if self.signs[i] < 0 { -c } else { c.clone() };
        }
        Weight::new(out)
    }

    fn act_ints(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, &c) in v.iter().enumerate() {
            out[self.perm[i]] = self.signs[i] as i64 * c;
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = other.signs[i] * self.signs[j];
        }
        WeylElement { perm, signs }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        WeylElement { perm, signs }
    }

    /// Number of positive even roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut count = 0;
        for root in even_positive_int_roots(n) {
            if is_negative(&self.act_ints(&root)) {
                count += 1;
            }
        }
        count
    }

    /// True when `l(self · s_i) < l(self)`, i.e. `self(α_i) < 0`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.rank();
        let mut alpha = vec![0; n];
        if i + 1 < n {
            alpha[i] = 1;
            alpha[i + 1] = -1;
        } else {
            alpha[n - 1] = 1;
        }
        is_negative(&self.act_ints(&alpha))
    }

    /// A reduced word `[i_1, …, i_l]` with `self = s_{i_1} ⋯ s_{i_l}`, found by
    /// peeling right descents greedily.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut w = self.clone();
        let mut peeled = Vec::new();
        while !w.is_identity() {
            let i = (0..n)
                .find(|&i| w.has_right_descent(i))
                .expect("non-identity element has a descent");
            w = w.compose(&WeylElement::simple_reflection(n, i));
            peeled.push(i);
        }
        peeled.reverse();
        peeled
    }
}

fn even_positive_int_roots(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in i + 1..n {
            let mut a = vec![0; n];
            a[i] = 1;
            a[j] = -1;
            out.push(a.clone());
            a[j] = 1;
            out.push(a);
        }
        let mut a = vec![0; n];
        a[i] = 2;
        out.push(a);
    }
    out
}

fn is_negative(v: &[i64]) -> bool {
    v.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.rank() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.signs[i] as i64 * (self.perm[i] as i64 + 1))?;
        }
        f.write_str(")")
    }
}

impl FromStr for WeylElement {
    type Err = Error;

    /// Signed one-line notation, e.g. `(2,-1)`: `δ_1 ↦ δ_2`, `δ_2 ↦ −δ_1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected (a,b,...), got {s:?}")))?;
        let mut perm = Vec::new();
        let mut signs = Vec::new();
        for part in inner.split(',') {
            let v: i64 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad entry {part:?}")))?;
            if v == 0 {
                return Err(Error::Parse("zero entry".into()));
            }
            perm.push(v.unsigned_abs() as usize - 1);
            signs.push(if v < 0 { -1 } else { 1 });
        }
        WeylElement::new(perm, signs)
    }
}

/// All `2ⁿ n!` signed permutations, sorted.
pub fn enumerate_weyl(n: usize) -> Result<Vec<WeylElement>> {
    enumerate_weyl_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_weyl_bounded(n: usize, bound: usize) -> Result<Vec<WeylElement>> {
    if n == 0 {
        return Err(Error::InvalidRank(0));
    }
    if n > bound {
        return Err(Error::RankTooLarge(n, bound));
    }
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for v in 0..n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    let mut out = Vec::with_capacity(perms.len() << n);
    for p in perms {
        for mask in 0..(1u32 << n) {
            let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push(WeylElement {
                perm: p.clone(),
                signs,
            });
        }
    }
    out.sort();
    Ok(out)
}

/// `W(k)`: elements of length `k`.
pub fn elements_of_length(n: usize, k: usize) -> Result<Vec<WeylElement>> {
    Ok(enumerate_weyl(n)?
        .into_iter()
        .filter(|w| w.length() == k)
        .collect())
}

/// `w(μ+ρ) − ρ`.
pub fn dot_act(w: &WeylElement, mu: &Weight) -> Result<Weight> {
    if w.rank() != mu.rank() {
        return Err(Error::RankMismatch {
            expected: w.rank(),
            found: mu.rank(),
        });
    }
    Ok(dot_act_unchecked(w, mu))
}

pub(crate) fn dot_act_unchecked(w: &WeylElement, mu: &Weight) -> Weight {
    let r = rho(mu.rank());
    &w.act(&(mu + &r)) - &r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominantResult {
    Regular { w: WeylElement, dominant: Weight },
    Singular,
}

/// The unique `w` with `w·μ` dot-dominant, or `Singular`.
pub fn to_dominant(mu: &Weight) -> DominantResult {
    if !is_dot_regular(mu) {
        return DominantResult::Singular;
    }
    let n = mu.rank();
    let shifted = mu + &rho(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| shifted.coords()[b].abs().cmp(&shifted.coords()[a].abs()));
    let mut perm = vec![0; n];
    for (pos, &i) in order.iter().enumerate() {
        perm[i] = pos;
    }
    let signs = shifted
        .coords()
        .iter()
        .map(|c| if c.is_negative() { -1 } else { 1 })
        .collect();
    let w = WeylElement { perm, signs };
    let dominant = dot_act_unchecked(&w, mu);
    DominantResult::Regular { w, dominant }
}

/// Dot-dominant: `Λ+ρ` has strictly decreasing positive coordinates.
pub fn is_dot_dominant(lambda: &Weight) -> bool {
    let s = lambda + &rho(lambda.rank());
    s.coords().iter().all(|c| c.is_positive()) && s.coords().windows(2).all(|w| w[0] > w[1])
}

/// Breadth-first search down the dot orbit of `λ` through reflections that
/// lower the weight.
pub fn strongly_linked(mu: &Weight, lambda: &Weight) -> bool {
    if mu == lambda {
        return true;
    }
    if mu.rank() != lambda.rank() {
        return false;
    }
    let refl = WeylElement::reflections(lambda.rank());
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([lambda.clone()]);
    seen.insert(lambda.clone());
    while let Some(nu) = queue.pop_front() {
        for s in &refl {
            let next = dot_act_unchecked(s, &nu);
            if next != nu && next.le_dominance(&nu) && seen.insert(next.clone()) {
                if &next == mu {
                    return true;
                }
                queue.push_back(next);
            }
        }
    }
    false
}

/// The Bruhat interval `[e, w]` as the set of products of subwords of a reduced word.
pub fn bruhat_interval(w: &WeylElement) -> HashSet<WeylElement> {
    let n = w.rank();
    let mut set = HashSet::from([WeylElement::identity(n)]);
    for i in w.reduced_word() {
        let s = WeylElement::simple_reflection(n, i);
        let extended: Vec<_> = set.iter().map(|x| x.compose(&s)).collect();
        set.extend(extended);
    }
    set
}

/// `v ≤ w` in Bruhat order, by the subword criterion.
pub fn bruhat_leq(v: &WeylElement, w: &WeylElement) -> bool {
    if v.rank() != w.rank() || v.length() > w.length() {
        return false;
    }
    bruhat_interval(w).contains(v)
}

/// `μ ∈ W·λ`.
pub fn same_central_character(mu: &Weight, lambda: &Weight) -> bool {
    if mu.rank() != lambda.rank() {
        return false;
    }
    let r = rho(mu.rank());
    let mut a: Vec<Rational> = (mu + &r).coords().iter().map(|c| c.abs()).collect();
    let mut b: Vec<Rational> = (lambda + &r).coords().iter().map(|c| c.abs()).collect();
    a.sort();
    b.sort();
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn e(s: &str) -> WeylElement {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_weyl(1).unwrap().len(), 2);
        assert_eq!(enumerate_weyl(2).unwrap().len(), 8);
        assert_eq!(enumerate_weyl(3).unwrap().len(), 48);
        assert!(matches!(enumerate_weyl(6), Err(Error::RankTooLarge(6, 5))));
        assert!(enumerate_weyl(0).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(WeylElement::identity(2).length(), 0);
        assert_eq!(WeylElement::longest(2).length(), 4);
        assert_eq!(WeylElement::simple_reflection(2, 0).length(), 1);
        let sizes: Vec<usize> = (0..=5).map(|k| elements_of_length(2, k).unwrap().len()).collect();
        assert_eq!(sizes, [1, 2, 2, 2, 1, 0]);
        let sizes: Vec<usize> = (0..=1).map(|k| elements_of_length(1, k).unwrap().len()).collect();
        assert_eq!(sizes, [1, 1]);
    }

    #[test]
    fn group_laws_and_words() {
        for n in 1..=3 {
            let all = enumerate_weyl(n).unwrap();
            for a in &all {
                assert!(a.compose(&a.inverse()).is_identity());
                assert_eq!(a.reduced_word().len(), a.length());
                let rebuilt = a
                    .reduced_word()
                    .iter()
                    .fold(WeylElement::identity(n), |acc, &i| {
                        acc.compose(&WeylElement::simple_reflection(n, i))
                    });
                assert_eq!(&rebuilt, a);
                assert_eq!(e(&a.to_string()), *a);
            }
        }
    }

    #[test]
    fn one_line_notation() {
        let x = e("(2,-1)");
        assert_eq!(x.act(&w("1,0")), w("0,1"));
        assert_eq!(x.act(&w("0,1")), w("-1,0"));
        assert!("(1,1)".parse::<WeylElement>().is_err());
        assert!("1,2".parse::<WeylElement>().is_err());
    }

    #[test]
    fn dot_action_examples() {
        let flip = WeylElement::simple_reflection(1, 0);
        assert_eq!(dot_act(&flip, &w("0")).unwrap(), w("-1"));
        let s2 = WeylElement::simple_reflection(2, 1);
        assert_eq!(dot_act(&s2, &w("0,0")).unwrap(), w("0,-1"));
        assert_eq!(dot_act(&WeylElement::identity(2), &w("3,1")).unwrap(), w("3,1"));
        assert!(dot_act(&s2, &w("0")).is_err());
    }

    #[test]
    fn dominant_representatives() {
        let s2 = WeylElement::simple_reflection(2, 1);
        assert_eq!(
            to_dominant(&w("0,-1")),
            DominantResult::Regular { w: s2, dominant: w("0,0") }
        );
        assert_eq!(to_dominant(&w("0,1")), DominantResult::Singular);
        assert_eq!(
            to_dominant(&w("2,1")),
            DominantResult::Regular { w: WeylElement::identity(2), dominant: w("2,1") }
        );
    }

    #[test]
    fn linkage() {
        assert!(strongly_linked(&w("0,-1"), &w("0,0")));
        assert!(strongly_linked(&w("1,1"), &w("1,1")));
        assert!(!strongly_linked(&w("0,0"), &w("0,-1")));
    }

    #[test]
    fn bruhat() {
        let w0 = WeylElement::longest(2);
        let s = WeylElement::simple_reflection(2, 0);
        for x in enumerate_weyl(2).unwrap() {
            assert!(bruhat_leq(&WeylElement::identity(2), &x));
            assert!(bruhat_leq(&x, &w0));
        }
        assert!(bruhat_leq(&s, &w0));
        assert!(!bruhat_leq(&w0, &s));
    }

    #[test]
    fn central_characters() {
        assert!(same_central_character(&w("0,-1"), &w("0,0")));
        assert!(same_central_character(&w("1,0"), &w("1,0")));
        assert!(!same_central_character(&w("1,0"), &w("0,0")));
    }
}
