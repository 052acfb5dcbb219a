use mfcat::catalog::{all_types, Catalog, PhaseWindow};
use mfcat::gring::AdeType;
use mfcat::mf::GradedMF;
use mfcat::rat::Rat;

fn instances() -> Vec<(AdeType, u32)> {
    all_types(8)
        .into_iter()
        .flat_map(|ty| match ty {
            AdeType::A(l) => (1..=l).map(|b| (ty, b)).collect::<Vec<_>>(),
            _ => vec![(ty, 1)],
        })
        .collect()
}

#[test]
fn every_object_factorizes_f_with_a_consistent_grading() {
    for (ty, b) in instances() {
        let cat = Catalog::get(ty, b).unwrap();
        for k in cat.vertices() {
            for n in -1..=2 {
                let o = cat.object(k, n).unwrap();
                o.gmf
                    .verify_mf()
                    .unwrap_or_else(|e| panic!("{ty} b={b} k={k}: {e}"));
                o.gmf
                    .verify_grading()
                    .unwrap_or_else(|e| panic!("{ty} b={b} k={k} n={n}: {e}"));
                assert_eq!(o.gmf.size() as u32, 2 * cat.nu(k));
                assert_eq!(
                    o.phase(),
                    Rat::new(2 * n + cat.sigma(k) as i64, cat.h() as i64)
                );
            }
        }
    }
}

#[test]
fn tau_moves_along_the_orbit() {
    for (ty, b) in instances() {
        let cat = Catalog::get(ty, b).unwrap();
        for k in cat.vertices() {
            let a = cat.object(k, 0).unwrap().gmf.tau(3);
            assert_eq!(a, cat.object(k, 3).unwrap().gmf);
            assert_eq!(cat.identify(&a), Some((k, 3)));
        }
    }
}

#[test]
fn json_round_trip() {
    for (ty, b) in instances() {
        let cat = Catalog::get(ty, b).unwrap();
        for k in cat.vertices() {
            let g = cat.object(k, 1).unwrap().gmf;
            let text = serde_json::to_string(&g.to_json(&ty.to_string())).unwrap();
            assert_eq!(GradedMF::from_json_str(&text).unwrap(), g);
        }
    }
}

#[test]
fn window_counts() {
    // (0, 2] holds two full phase periods
    for (ty, b) in instances() {
        let cat = Catalog::get(ty, b).unwrap();
        let one = cat.enumerate(&PhaseWindow::new(Rat::ZERO, Rat::ONE)).len();
        let two = cat
            .enumerate(&PhaseWindow::new(Rat::ZERO, Rat::int(2)))
            .len();
        assert_eq!(two, 2 * one);
        assert_eq!(one as u32, cat.rank() * cat.h() / 2);
    }
}
