//! Category O outputs: BGG resolution data, Ext dimensions, Bott-Borel-Weil
//! answers and projective dimensions in the regular block.

use crate::charlib::{simple_character, VermaCounter};
use crate::error::{Error, Result};
use crate::rootsys::{is_dot_regular, is_integral_dominant, RootSystem, Weight};
use crate::weyl::{dot_act_unchecked, elements_of_length, enumerate_weyl, to_dominant, DominantResult, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BggResolution {
    pub lambda: Weight,
    /// `terms[k]` lists `(w, w·λ)` for `w ∈ W(k)`.
    pub terms: Vec<Vec<(WeylElement, Weight)>>,
}

fn require_dominant(lambda: &Weight) -> Result<()> {
    if is_integral_dominant(lambda) {
        Ok(())
    } else {
        Err(Error::NotDominant(lambda.to_string()))
    }
}

pub fn bgg_resolution(lambda: &Weight) -> Result<BggResolution> {
    require_dominant(lambda)?;
    let n = lambda.rank();
    let terms = (0..=n * n)
        .map(|k| {
            let mut t: Vec<(WeylElement, Weight)> = elements_of_length(n, k)?
                .into_iter()
                .map(|w| {
                    let mu = dot_act_unchecked(&w, lambda);
                    (w, mu)
                })
                .collect();
            t.sort_by(|a, b| b.1.cmp(&a.1));
            Ok(t)
        })
        .collect::<Result<_>>()?;
    Ok(BggResolution {
        lambda: lambda.clone(),
        terms,
    })
}

/// Weights `λ − Σ c_i α_i` with `c_i ≥ 0` and `Σ c_i ≤ bound`.
pub fn weights_below(lambda: &Weight, bound: usize) -> Vec<Weight> {
    let n = lambda.rank();
    let rs = RootSystem::new(n).expect("positive rank");
    let simple: Vec<Weight> = rs.simple_roots().iter().map(|&r| rs.root(r).weight.clone()).collect();
    let mut out = Vec::new();
    fn rec(i: usize, left: usize, cur: Weight, simple: &[Weight], out: &mut Vec<Weight>) {
        if i == simple.len() {
            out.push(cur);
            return;
        }
        let mut w = cur;
        for c in 0..=left {
            if c > 0 {
                w = &w - &simple[i];
            }
            rec(i + 1, left - c, w.clone(), simple, out);
        }
    }
    rec(0, bound, lambda.clone(), &simple, &mut out);
    out
}

/// Weights where `Σ_k (−1)^k Σ_{w∈W(k)} dim M(w·λ)^μ ≠ dim L(λ)^μ`, as `(μ, alternating sum, dim L^μ)`.
pub fn resolution_character_defects(lambda: &Weight, height_bound: usize) -> Result<Vec<(Weight, i64, u64)>> {
    let res = bgg_resolution(lambda)?;
    let ch = simple_character(lambda)?;
    let rs = RootSystem::new(lambda.rank())?;
    let mut counter = VermaCounter::new(&rs);
    let mut defects = Vec::new();
    for mu in weights_below(lambda, height_bound) {
        let mut total = 0i64;
        for (k, term) in res.terms.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for (_, top) in term {
                total += sign * counter.count(&(top - &mu)) as i64;
            }
        }
        let expected = ch.mult(&mu);
        if total != expected as i64 {
            defects.push((mu, total, expected));
        }
    }
    Ok(defects)
}

pub fn verify_resolution_characters(lambda: &Weight, height_bound: usize) -> Result<bool> {
    Ok(resolution_character_defects(lambda, height_bound)?.is_empty())
}

/// `height(λ − w0·λ)`.
pub fn orbit_height(lambda: &Weight) -> i64 {
    let w0 = WeylElement::longest(lambda.rank());
    (lambda - &dot_act_unchecked(&w0, lambda)).height().expect("dot orbit lies in the root lattice")
}

/// `dim Ext^k_O(M(μ), L(λ))`.
pub fn ext_dim(mu: &Weight, lambda: &Weight, k: usize) -> Result<usize> {
    require_dominant(lambda)?;
    if mu.rank() != lambda.rank() {
        return Err(Error::RankMismatch {
            expected: lambda.rank(),
            found: mu.rank(),
        });
    }
    Ok(elements_of_length(lambda.rank(), k)?
        .iter()
        .filter(|w| &dot_act_unchecked(w, lambda) == mu)
        .count())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BbwAnswer {
    Zero,
    Cohomology { k: usize, highest_weight: Weight },
}

pub fn bbw(line_weight: &Weight) -> Result<BbwAnswer> {
    if !line_weight.is_integral() {
        return Err(Error::NotIntegral(line_weight.to_string()));
    }
    Ok(match to_dominant(line_weight) {
        DominantResult::Singular => BbwAnswer::Zero,
        DominantResult::Regular { w, dominant } => BbwAnswer::Cohomology {
            k: w.length(),
            highest_weight: dominant,
        },
    })
}

pub fn pd_verma(w: &WeylElement) -> usize {
    w.length()
}

pub fn pd_simple(w: &WeylElement) -> usize {
    global_dim(w.rank()) - w.length()
}

pub fn global_dim(n: usize) -> usize {
    2 * n * n
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdRow {
    pub w: WeylElement,
    pub weight: Weight,
    pub length: usize,
    pub pd_verma: usize,
    pub pd_simple: usize,
}

/// Projective dimensions of `M(w·λ)` and `L(w·λ)` over the block of `λ`.
/// Only integral dominant `λ` (whose orbit is regular) is accepted.
pub fn projective_dimensions(lambda: &Weight) -> Result<Vec<PdRow>> {
    if !lambda.is_integral() {
        return Err(Error::NotIntegral(lambda.to_string()));
    }
    if !is_dot_regular(lambda) {
        return Err(Error::Singular(lambda.to_string()));
    }
    require_dominant(lambda)?;
    let mut rows: Vec<PdRow> = enumerate_weyl(lambda.rank())?
        .into_iter()
        .map(|w| PdRow {
            weight: dot_act_unchecked(&w, lambda),
            length: w.length(),
            pd_verma: pd_verma(&w),
            pd_simple: pd_simple(&w),
            w,
        })
        .collect();
    rows.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| b.weight.cmp(&a.weight)));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{same_central_character, strongly_linked};

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn resolution_examples() {
        let r = bgg_resolution(&w("0,0")).unwrap();
        let t1: Vec<Weight> = r.terms[1].iter().map(|(_, m)| m.clone()).collect();
        assert_eq!(t1, vec![w("0,-1"), w("-1,1")]);
        assert_eq!(r.terms[0].len(), 1);
        assert_eq!(r.terms.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 2, 2, 2, 1]);
        for t in &r.terms {
            for (_, mu) in t {
                assert!(strongly_linked(mu, &w("0,0")));
            }
        }
        let r = bgg_resolution(&w("0")).unwrap();
        assert_eq!(r.terms.len(), 2);
        assert_eq!(r.terms[1][0].1, w("-1"));
        assert!(bgg_resolution(&w("0,1")).is_err());
    }

    #[test]
    fn resolution_characters() {
        assert!(verify_resolution_characters(&w("0"), 6).unwrap());
        assert!(verify_resolution_characters(&w("1,0"), 8).unwrap());
        assert!(verify_resolution_characters(&w("2"), 0).unwrap());
        assert_eq!(weights_below(&w("0,0"), 0), vec![w("0,0")]);
        assert_eq!(orbit_height(&w("0")), 1);
        assert_eq!(orbit_height(&w("1,1")), 13);
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext_dim(&w("-1,1"), &w("0,0"), 1).unwrap(), 1);
        assert_eq!(ext_dim(&w("-1,1"), &w("0,0"), 2).unwrap(), 0);
        assert_eq!(ext_dim(&w("5,5"), &w("0,0"), 0).unwrap(), 0);
        for lam in [w("0,0"), w("1,0")] {
            for mu in weights_below(&lam, 8) {
                let total: usize = (0..=4).map(|k| ext_dim(&mu, &lam, k).unwrap()).sum();
                assert_eq!(total, usize::from(same_central_character(&mu, &lam)));
            }
        }
    }

    #[test]
    fn bbw_examples() {
        assert_eq!(
            bbw(&w("1,0")).unwrap(),
            BbwAnswer::Cohomology {
                k: 0,
                highest_weight: w("1,0")
            }
        );
        assert_eq!(bbw(&w("0,1")).unwrap(), BbwAnswer::Zero);
        assert_eq!(
            bbw(&w("0,-1")).unwrap(),
            BbwAnswer::Cohomology {
                k: 1,
                highest_weight: w("0,0")
            }
        );
        assert!(bbw(&w("1/2,0")).is_err());
    }

    #[test]
    fn projective_dimension_examples() {
        for n in 1..=3 {
            for x in enumerate_weyl(n).unwrap() {
                assert_eq!(pd_verma(&x) + pd_simple(&x), global_dim(n));
            }
            let w0 = WeylElement::longest(n);
            assert_eq!(pd_verma(&w0), n * n);
            assert_eq!(pd_simple(&w0), n * n);
        }
        assert_eq!(pd_simple(&WeylElement::identity(2)), 8);
        assert_eq!(pd_simple(&WeylElement::identity(1)), 2);
        assert_eq!(global_dim(3), 18);
        assert_eq!(projective_dimensions(&w("0,0")).unwrap().len(), 8);
        assert!(matches!(projective_dimensions(&w("0,1")), Err(Error::Singular(_))));
        assert!(matches!(projective_dimensions(&w("0,-1")), Err(Error::NotDominant(_))));
    }
}
