//! The full check list for one highest weight, grouped by acceptance criterion.

use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::cat_o::{
    bbw, global_dim, orbit_height, pd_simple, pd_verma, resolution_character_defects, weights_below, BbwAnswer,
};
use crate::chains::{grading, ChainComplex};
use crate::charlib::simple_character;
use crate::error::Result;
use crate::exec::Exec;
use crate::homology::{
    homology_of, laplacian_kernel, reduced_homology_of, verify_decomposition, verify_phi_iso, HomologyReport,
};
use crate::liealg::realize;
use crate::oracles::oracle_suite;
use crate::rootsys::{is_dot_regular, Weight};
use crate::verma::{simple_quotient, SimpleModule};
use crate::weyl::{dot_act_unchecked, enumerate_weyl, is_dot_dominant, WeylElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(criterion: u8, name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        criterion,
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

/// Everything computed once per highest weight.
pub struct Case {
    pub lambda: Weight,
    pub k_max: usize,
    pub module: Arc<SimpleModule>,
    pub complex: ChainComplex,
    pub homology: HomologyReport,
    pub elapsed: Duration,
}

/// Builds `L(λ)`, the complex to degree `n² + 2` and its homology to `n² + 1`.
pub fn prepare(lambda: &Weight, exec: Exec) -> Result<Case> {
    let start = Instant::now();
    let g = Arc::new(realize(lambda.rank())?);
    let module = Arc::new(simple_quotient(g, lambda)?);
    let mut case = prepare_from_module(module, exec);
    case.elapsed = start.elapsed();
    Ok(case)
}

/// As [`prepare`], reusing an already built `L(λ)`.
pub fn prepare_from_module(module: Arc<SimpleModule>, exec: Exec) -> Case {
    let start = Instant::now();
    let lambda = module.lambda().clone();
    let n = lambda.rank();
    let k_max = n * n + 1;
    let complex = ChainComplex::new(Arc::clone(&module), k_max + 1, exec);
    let homology = homology_of(&complex, k_max, exec);
    Case {
        lambda,
        k_max,
        module,
        complex,
        homology,
        elapsed: start.elapsed(),
    }
}

/// Criteria that depend on `λ`: 1-8, 11 and 12.
pub fn check_case(case: &Case, exec: Exec) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let lam = &case.lambda;
    let n = lam.rank();
    let cc = &case.complex;
    let h = &case.homology;

    let found: Vec<String> = h.nonzero().iter().map(|((k, mu), d)| format!("H{k}({mu})={d}")).collect();
    out.push(check(
        1,
        format!("homology of L({lam}) matches W(k)·λ"),
        h.matches,
        format!("{} in {:.2?}", found.join(" "), case.elapsed),
    ));

    let monomials: Vec<_> = (2..=cc.top_degree())
        .flat_map(|k| cc.blocks(k).values().flat_map(|b| b.basis.iter()))
        .collect();
    let bad = exec
        .map(&monomials, |m| !cc.boundary_chain(cc.boundary(m)).is_empty())
        .into_iter()
        .filter(|&b| b)
        .count();
    out.push(check(
        2,
        format!("δ*δ* = 0 on C_2..C_{} of L({lam})", cc.top_degree()),
        bad == 0,
        format!("{} monomials, {bad} failures", monomials.len()),
    ));

    let reduced = reduced_homology_of(cc, case.k_max, exec)?;
    out.push(check(
        3,
        format!("reduced complex of L({lam}) has the same homology"),
        reduced.nonzero() == h.nonzero(),
        format!("{} nonzero blocks", reduced.nonzero().len()),
    ));

    for k in 0..=case.k_max {
        let d = verify_decomposition(cc, k, exec);
        let (a, da, r) = d.totals();
        out.push(check(
            4,
            format!("C_{k} = A ⊕ δ*A ⊕ R for L({lam})"),
            d.holds(),
            format!("dims A={a} δ*A={da} R={r}"),
        ));
        if k >= 1 {
            out.push(check(4, format!("φ bijective at k={k} for L({lam})"), verify_phi_iso(cc, k, exec), ""));
        }
    }

    let mut contained = true;
    for k in 0..=case.k_max {
        let lap = laplacian_kernel(cc, k);
        for b in h.blocks.iter().filter(|b| b.k == k && b.dim_h > 0) {
            let kernel = lap.blocks.iter().find(|(mu, _)| mu == &b.mu).map_or(0, |(_, d)| *d);
            contained &= kernel >= b.dim_h;
        }
    }
    out.push(check(5, format!("ker □ ⊇ H_k blockwise for L({lam})"), contained, ""));
    if n == 1 && lam == &Weight::from_ints(&[1]) {
        let lap = laplacian_kernel(cc, 1).total;
        let h1 = h.total(1);
        out.push(check(5, "Laplacian kernel exceeds H_1 for L(1)", lap == 2 && h1 == 1, format!("{lap} > {h1}")));
    }

    let ch = simple_character(lam)?;
    let agree = case.module.dim() as u64 == ch.dim()
        && ch.iter().all(|(mu, m)| case.module.dim_at(mu) as u64 == m)
        && case.module.blocks().len() == ch.len();
    out.push(check(
        6,
        format!("dim L({lam})^μ: quotient = Freudenthal"),
        agree,
        format!("dim {}", ch.dim()),
    ));

    out.push(check(7, format!("Euler characteristic of L({lam})"), h.euler_matches()?, ""));

    let bound = orbit_height(lam) as usize + 4;
    let defects = resolution_character_defects(lam, bound)?;
    out.push(check(
        8,
        format!("BGG alternating Verma sum for L({lam})"),
        defects.is_empty(),
        format!("{} weights up to height {bound}, {} defects", weights_below(lam, bound).len(), defects.len()),
    ));

    let mut worst = String::new();
    let mut monotone = true;
    let rs = cc.roots();
    for k in 1..=cc.top_degree() {
        for b in cc.blocks(k).values() {
            for (m, &d) in b.basis.iter().zip(&b.gradings) {
                for x in cc.boundary(m).keys() {
                    let dx = grading(rs, &x.factors, &case.module.blocks()[x.block].weight);
                    if dx > d {
                        monotone = false;
                        worst = cc.display_monomial(m);
                    }
                }
            }
        }
    }
    out.push(check(11, format!("δ* never raises D on L({lam})"), monotone, worst));

    if n <= 2 {
        for r in oracle_suite(n, lam) {
            out.push(check(
                12,
                format!("oracle {}: {}", lam, r.name),
                r.pass,
                if r.pass { String::new() } else { format!("expected {} got {}", r.expected, r.actual) },
            ));
        }
    }
    Ok(out)
}

/// Integral weights in the box `[−r, r]^n`.
pub fn weight_box(n: usize, r: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| (-r..=r).map(move |x| [p.clone(), vec![x]].concat()))
            .collect();
    }
    out.iter().map(|p| Weight::from_ints(p)).collect()
}

/// Criteria that depend only on the rank: 9 and 10.
pub fn check_rank(n: usize) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let weyl = enumerate_weyl(n)?;

    let zero = Weight::zero(n);
    let dominant_ok = [zero.clone(), Weight::delta(n, 0), Weight::from_ints(&vec![2; n])]
        .iter()
        .all(|l| bbw(l).ok() == Some(BbwAnswer::Cohomology { k: 0, highest_weight: l.clone() }));
    out.push(check(9, format!("BBW degree 0 on dominant weights, n={n}"), dominant_ok, ""));
    if n == 2 {
        let singular = bbw(&Weight::from_ints(&[0, 1]))? == BbwAnswer::Zero;
        out.push(check(9, "BBW vanishes at (0,1)", singular, ""));
        let regular = bbw(&Weight::from_ints(&[0, -1]))?
            == BbwAnswer::Cohomology {
                k: 1,
                highest_weight: zero.clone(),
            };
        out.push(check(9, "BBW at (0,-1) is degree 1 with weight (0,0)", regular, ""));
    }
    if n <= 2 {
        let mut swept = 0;
        let mut ok = true;
        for mu in weight_box(n, 5) {
            let hits: Vec<&WeylElement> = weyl
                .iter()
                .filter(|w| is_dot_dominant(&dot_act_unchecked(w, &mu)))
                .collect();
            let answer = bbw(&mu)?;
            ok &= match (is_dot_regular(&mu), hits.as_slice(), &answer) {
                (true, [w], BbwAnswer::Cohomology { k, highest_weight }) => {
                    *k == w.length() && *highest_weight == dot_act_unchecked(w, &mu)
                }
                (false, [], BbwAnswer::Zero) => true,
                _ => false,
            };
            swept += 1;
        }
        out.push(check(
            9,
            format!("BBW sweep, n={n}: one nonzero degree per regular weight"),
            ok,
            format!("{swept} weights"),
        ));
    }

    let sum_ok = weyl.iter().all(|w| pd_verma(w) + pd_simple(w) == 2 * n * n);
    out.push(check(10, format!("pd M + pd L = 2n², n={n}"), sum_ok, format!("{} elements", weyl.len())));
    let w0 = WeylElement::longest(n);
    out.push(check(
        10,
        format!("pd at the longest element, n={n}"),
        pd_verma(&w0) == n * n && pd_simple(&w0) == n * n,
        "",
    ));
    let max_simple = weyl.iter().map(pd_simple).max().unwrap_or(0);
    out.push(check(
        10,
        format!("global dimension, n={n}"),
        global_dim(n) == 2 * n * n && max_simple == global_dim(n),
        format!("{}", global_dim(n)),
    ));
    Ok(out)
}

/// Every check for one `λ`.
pub fn verify_all(lambda: &Weight, exec: Exec) -> Result<Vec<Check>> {
    let case = prepare(lambda, exec)?;
    let mut out = check_case(&case, exec)?;
    out.extend(check_rank(lambda.rank())?);
    Ok(out)
}
