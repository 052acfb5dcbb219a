mod common;

use mfcat::catalog::{Catalog, PhaseWindow};
use mfcat::gring::AdeType;
use mfcat::homcat::hom_dim;
use mfcat::rat::Rat;
use proptest::prelude::*;

#[test]
fn a1_a2_exhaustive() {
    for (ty, b) in [(AdeType::A(1), 1), (AdeType::A(2), 1), (AdeType::A(2), 2)] {
        let cat = Catalog::get(ty, b).unwrap();
        let objs = cat.enumerate(&PhaseWindow::new(Rat::ZERO, Rat::int(2)));
        for x in &objs {
            for y in &objs {
                assert_eq!(
                    hom_dim(&x.gmf, &y.gmf).unwrap(),
                    common::oracle::hom_dim(&x.gmf, &y.gmf)
                );
            }
        }
    }
}

fn small_type() -> impl Strategy<Value = AdeType> {
    prop_oneof![
        Just(AdeType::A(3)),
        Just(AdeType::A(4)),
        Just(AdeType::D(4)),
        Just(AdeType::D(5)),
        Just(AdeType::E6)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_pairs_agree(ty in small_type(), i in 0usize..1000, j in 0usize..1000) {
        let cat = Catalog::get(ty, 1).unwrap();
        let objs = cat.enumerate(&PhaseWindow::new(Rat::ZERO, Rat::int(2)));
        let (x, y) = (&objs[i % objs.len()], &objs[j % objs.len()]);
        prop_assert_eq!(hom_dim(&x.gmf, &y.gmf).unwrap(), common::oracle::hom_dim(&x.gmf, &y.gmf));
    }
}
