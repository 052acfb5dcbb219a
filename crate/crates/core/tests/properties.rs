use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mfcat::catalog::{Catalog, CatalogObject, PhaseWindow};
use mfcat::gring::{parse_poly, AdeType, GaussRat, Mono, Poly};
use mfcat::homcat::{compose, hom_dim, hom_space, jacobi_annihilates, Multiset};
use mfcat::mf::direct_sum;
use mfcat::rat::Rat;
use mfcat::stability::{central_charge, hn_filtration, random_sum};

fn ty() -> impl Strategy<Value = AdeType> {
    prop_oneof![
        (1u32..=6).prop_map(AdeType::A),
        (4u32..=7).prop_map(AdeType::D),
        Just(AdeType::E6),
        Just(AdeType::E7),
        Just(AdeType::E8),
    ]
}

fn wide() -> PhaseWindow {
    PhaseWindow::new(Rat::ZERO, Rat::int(2))
}

fn pick(cat: &Catalog, i: usize) -> CatalogObject {
    let objs = cat.enumerate(&wide());
    objs[i % objs.len()].clone()
}

fn cat(ty: AdeType) -> Arc<Catalog> {
    Catalog::get(ty, 1).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_is_invariant_under_tau_and_t(ty in ty(), i in any::<usize>(), j in any::<usize>(), a in -3i64..3) {
        let c = cat(ty);
        let (x, y) = (pick(&c, i).gmf, pick(&c, j).gmf);
        let d = hom_dim(&x, &y).unwrap();
        prop_assert_eq!(hom_dim(&x.tau(a), &y.tau(a)).unwrap(), d);
        prop_assert_eq!(hom_dim(&x.shift_t(), &y.shift_t()).unwrap(), d);
    }

    #[test]
    fn serre_duality(ty in ty(), i in any::<usize>(), j in any::<usize>()) {
        let c = cat(ty);
        let (x, y) = (pick(&c, i).gmf, pick(&c, j).gmf);
        prop_assert_eq!(hom_dim(&x, &y).unwrap(), hom_dim(&y, &x.serre()).unwrap());
        prop_assert_eq!(x.serre().serre_inv(), x);
    }

    #[test]
    fn hom_is_additive(ty in ty(), i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let c = cat(ty);
        let (x, y, z) = (pick(&c, i).gmf, pick(&c, j).gmf, pick(&c, k).gmf);
        let s = direct_sum(&x, &y).unwrap();
        prop_assert_eq!(hom_dim(&s, &z).unwrap(), hom_dim(&x, &z).unwrap() + hom_dim(&y, &z).unwrap());
        prop_assert_eq!(hom_dim(&z, &s).unwrap(), hom_dim(&z, &x).unwrap() + hom_dim(&z, &y).unwrap());
    }

    #[test]
    fn central_charge_is_additive(ty in ty(), i in any::<usize>(), j in any::<usize>()) {
        let c = cat(ty);
        let (x, y) = (pick(&c, i).gmf, pick(&c, j).gmf);
        let (zx, zy) = (central_charge(&x).value, central_charge(&y).value);
        let zs = central_charge(&direct_sum(&x, &y).unwrap()).value;
        prop_assert!((zs.0 - zx.0 - zy.0).abs() < 1e-9 && (zs.1 - zx.1 - zy.1).abs() < 1e-9);
        let zt = central_charge(&x.shift_t()).value;
        prop_assert!((zt.0 + zx.0).abs() < 1e-9 && (zt.1 + zx.1).abs() < 1e-9);
    }

    #[test]
    fn composition_stays_in_hom(ty in ty(), i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let c = cat(ty);
        let (x, y, z) = (pick(&c, i).gmf, pick(&c, j).gmf, pick(&c, k).gmf);
        let (xy, yz, xz) = (hom_space(&x, &y).unwrap(), hom_space(&y, &z).unwrap(), hom_space(&x, &z).unwrap());
        for f in xy.basis.iter().take(3) {
            for g in yz.basis.iter().take(3) {
                let coords = compose(f, g, &xz).unwrap();
                prop_assert_eq!(coords.len(), xz.dim());
            }
        }
    }

    #[test]
    fn jacobi_ideal_acts_by_zero(ty in ty(), i in any::<usize>(), j in any::<usize>(), b in any::<usize>()) {
        let c = cat(ty);
        let (x, y) = (pick(&c, i).gmf, pick(&c, j).gmf);
        let space = hom_space(&x, &y).unwrap();
        if space.dim() > 0 {
            prop_assert!(jacobi_annihilates(&x, &y, &space.basis[b % space.dim()]).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scrambling_changes_nothing_observable(ty in ty(), seed in any::<u64>(), k in any::<usize>()) {
        let c = cat(ty);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, picks) = random_sum(&c, &wide(), 3, &mut rng);
        let plain: Vec<_> = picks.iter().map(|&(k, n)| c.object(k, n).unwrap().gmf).collect();
        let z = pick(&c, k).gmf;
        let want: usize = plain.iter().map(|p| hom_dim(p, &z).unwrap()).sum();
        prop_assert_eq!(hom_dim(&g, &z).unwrap(), want);
        let hn = hn_filtration(&c, &g).unwrap();
        let mut got: Vec<(u32, i64)> = hn.pieces.iter().flat_map(|p| p.summands.clone()).collect();
        let mut picks = picks;
        got.sort();
        picks.sort();
        prop_assert_eq!(got, picks);
        prop_assert!(hn.phases().windows(2).all(|w| w[0] > w[1]));
        prop_assert!(hn.triangles_hold());
    }
}

fn rat() -> impl Strategy<Value = Rat> {
    (-50i64..50, 1i64..20).prop_map(|(a, b)| Rat::new(a, b))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u16..4, 0u16..4, 0u16..4), rat(), rat()), 0..5).prop_map(|terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|((i, j, k), re, im)| (Mono::new(i, j, k), GaussRat::new(re, im))),
        )
    })
}

proptest! {
    #[test]
    fn rat_arithmetic_matches_bigrational(a in rat(), b in rat()) {
        prop_assert_eq!((&a + &b).to_big(), a.to_big() + b.to_big());
        prop_assert_eq!((&a * &b).to_big(), a.to_big() * b.to_big());
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a);
        }
    }

    #[test]
    fn poly_print_parse_fixed_point(p in poly()) {
        let text = p.to_string();
        let q = parse_poly(&text).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(q.to_string(), text);
    }

    #[test]
    fn multiset_text_round_trip(v in prop::collection::vec(-30i64..30, 0..12)) {
        let m = Multiset::from_values(v.clone());
        prop_assert_eq!(m.to_string().parse::<Multiset>().unwrap(), m.clone());
        prop_assert_eq!(m.len(), v.len());
    }
}
