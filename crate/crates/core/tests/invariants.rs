use std::sync::Arc;

use osp_core::cat_o::{bbw, ext_dim, pd_simple, pd_verma, BbwAnswer};
use osp_core::charlib::{simple_character, weyl_dimension};
use osp_core::exec::Exec;
use osp_core::homology::homology_dims;
use osp_core::liealg::realize;
use osp_core::rootsys::{int, Weight};
use osp_core::verma::simple_quotient;
use osp_core::weyl::{dot_act, enumerate_weyl, to_dominant, DominantResult, WeylElement};
use proptest::prelude::*;

fn weight(n: usize, r: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(-r..=r, n).prop_map(|v| Weight::from_ints(&v))
}

fn dominant(n: usize, r: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=r, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight::from_ints(&v)
    })
}

fn element(n: usize) -> impl Strategy<Value = WeylElement> {
    let all = enumerate_weyl(n).unwrap();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn dot_action_is_a_group_action(n in 1usize..=3, seed in any::<u64>()) {
        let all = enumerate_weyl(n).unwrap();
        let pick = |s: u64| all[(s % all.len() as u64) as usize].clone();
        let (v, w) = (pick(seed), pick(seed / 7 + 3));
        let mu = Weight::from_ints(&(0..n as i64).map(|i| (seed as i64 >> i) % 5).collect::<Vec<_>>());
        let lhs = dot_act(&v.compose(&w), &mu).unwrap();
        let rhs = dot_act(&v, &dot_act(&w, &mu).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn to_dominant_inverts_the_orbit(w in element(2), lam in dominant(2, 4)) {
        let mu = dot_act(&w, &lam).unwrap();
        match to_dominant(&mu) {
            DominantResult::Regular { w: v, dominant } => {
                prop_assert_eq!(dominant, lam);
                prop_assert_eq!(v.length(), w.length());
            }
            DominantResult::Singular => prop_assert!(false, "dominant orbit is regular"),
        }
    }

    #[test]
    fn bbw_degree_matches_ext(mu in weight(2, 4)) {
        if let BbwAnswer::Cohomology { k, highest_weight } = bbw(&mu).unwrap() {
            prop_assert_eq!(ext_dim(&mu, &highest_weight, k).unwrap(), 1);
        }
    }

    #[test]
    fn projective_dimensions_sum(w in element(3)) {
        prop_assert_eq!(pd_verma(&w) + pd_simple(&w), 18);
    }

    #[test]
    fn character_dimension_is_weyl_dimension(lam in dominant(2, 4)) {
        let ch = simple_character(&lam).unwrap();
        prop_assert_eq!(int(ch.dim() as i64), weyl_dimension(&lam));
    }
}

#[test]
fn homology_is_the_bgg_orbit_on_rank_one() {
    let g = Arc::new(realize(1).unwrap());
    for m in 0..=3 {
        let lam = Weight::from_ints(&[m]);
        let module = Arc::new(simple_quotient(Arc::clone(&g), &lam).unwrap());
        let report = homology_dims(module, 2, Exec::Sequential).unwrap();
        let got: Vec<(usize, Weight)> = report.nonzero().into_iter().map(|((k, mu), d)| {
            assert_eq!(d, 1);
            (k, mu)
        }).collect();
        assert_eq!(got, vec![(0, lam.clone()), (1, Weight::from_ints(&[-m - 1]))]);
    }
}
