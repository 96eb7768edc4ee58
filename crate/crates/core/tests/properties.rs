use proptest::prelude::*;

use homcone::affine::{compare_ne_ir, AffineData};
use homcone::components::{classify, count_components, is_equidimensional, ne, Case};
use homcone::conegeom::ConeSpace;
use homcone::parabolic::ParabolicData;
use homcone::report;
use homcone::rootsys::{CartanType, Root, RootSystem, Weight};

fn all_types() -> Vec<CartanType> {
    CartanType::all_up_to_rank(8)
}

#[test]
fn positive_roots_are_well_formed() {
    for t in all_types() {
        let rs = RootSystem::build(t).unwrap();
        let n = rs.rank();
        for r in rs.positive_roots() {
            assert!(r.coords().iter().all(|&c| c >= 0) && r.height() > 0);
        }
        let units: Vec<&Root> = rs.positive_roots().iter().filter(|r| r.height() == 1).collect();
        assert_eq!(units.len(), n);
        for i in 0..n {
            assert_eq!(units[i], &Root::simple(n, i), "{t}");
        }
        // highest root: the unique root with no root above it
        let tops: Vec<&Root> = rs
            .positive_roots()
            .iter()
            .filter(|r| {
                (0..n).all(|i| {
                    let mut up = r.coords().to_vec();
                    up[i] += 1;
                    !rs.is_positive_root(&up)
                })
            })
            .collect();
        assert_eq!(tops, vec![rs.highest_root()], "{t}");
        let d = rs.symmetrizer();
        let c = rs.cartan();
        for i in 0..n {
            assert_eq!(c[i][i], 2);
            assert!(d[i] > 0);
            for j in 0..n {
                assert_eq!(d[i] * c[i][j], d[j] * c[j][i]);
                if i != j {
                    assert!(c[i][j] <= 0);
                    assert_eq!(c[i][j] == 0, c[j][i] == 0);
                }
            }
        }
    }
}

#[test]
fn vector_representation_of_sl() {
    for n in 1..=6 {
        let rs = RootSystem::build(format!("A{n}").parse().unwrap()).unwrap();
        let mut w = vec![0; n];
        w[0] = 1;
        assert_eq!(rs.weyl_dim(&Weight::new(w)).unwrap(), n as u128 + 1);
    }
}

fn subsets(rank: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << rank))
        .map(|m| (0..rank).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

#[test]
fn parabolic_sweep() {
    for t in CartanType::all_up_to_rank(4) {
        let rs = RootSystem::build(t).unwrap();
        for sub in subsets(t.rank()) {
            let p = ParabolicData::new(rs.clone(), &sub).unwrap();
            assert!(p.chern_degrees().iter().all(|&c| c >= 2), "{t} {sub:?}");
            // nilradical = positive roots not in the span of the Levi simple roots
            let levi: Vec<usize> = (0..t.rank()).filter(|i| !sub.contains(i)).collect();
            let expected: Vec<&Root> = rs
                .positive_roots()
                .iter()
                .filter(|g| {
                    let mut rest = g.coords().to_vec();
                    for &i in &levi {
                        rest[i] = 0;
                    }
                    rest.iter().any(|&c| c != 0)
                })
                .collect();
            assert_eq!(p.nilradical().iter().collect::<Vec<_>>(), expected);
            assert_eq!(p.dim_gp(), expected.len() as i64);
            assert!(p.validate_ample(&p.minimal_ample()).is_ok());
            assert!(p.validate_ample(&p.kappa()).is_ok());
            if sub.len() == t.rank() {
                let kappa: Vec<i64> = sub.iter().map(|&i| p.kappa().coords()[i]).collect();
                assert_eq!(p.chern_degrees(), kappa.as_slice());
            }
        }
    }
    for n in 1..=8usize {
        let rs = RootSystem::build(format!("A{n}").parse().unwrap()).unwrap();
        assert_eq!(ParabolicData::new(rs.clone(), &[0]).unwrap().dim_gp(), n as i64);
        let all: Vec<usize> = (0..n).collect();
        assert_eq!(ParabolicData::new(rs, &all).unwrap().dim_gp(), (n * (n + 1) / 2) as i64);
    }
}

#[test]
fn level_weights_match_box_scan() {
    for t in CartanType::all_up_to_rank(4) {
        let a = AffineData::new(t).unwrap();
        assert_eq!(a.level_weights(0), vec![vec![0; t.rank() + 1]]);
        for level in 0..=8i64 {
            let mut want = 0;
            let mut v = vec![0i64; a.comarks().len()];
            loop {
                if v.iter().zip(a.comarks()).map(|(m, c)| m * c).sum::<i64>() == level {
                    want += 1;
                }
                // odometer over [0, level]^(r+1)
                let mut k = 0;
                while k < v.len() && v[k] == level {
                    v[k] = 0;
                    k += 1;
                }
                if k == v.len() {
                    break;
                }
                v[k] += 1;
            }
            assert_eq!(a.level_weights(level as u32).len(), want, "{t} level {level}");
        }
    }
    for t in all_types() {
        assert_eq!(AffineData::new(t).unwrap().level_weights(0).len(), 1);
    }
}

fn arb_cone() -> impl Strategy<Value = ConeSpace> {
    let types = CartanType::all_up_to_rank(4);
    (0..types.len(), any::<u32>(), prop::collection::vec(1i64..=4, 4), 1i64..=3).prop_map(
        move |(ti, mask, ells, n)| {
            let t = types[ti];
            let r = t.rank();
            let mask = (mask % ((1 << r) - 1)) + 1;
            let sub: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
            let mut lambda = vec![0; r];
            for (k, &i) in sub.iter().enumerate() {
                lambda[i] = ells[k];
            }
            let p = ParabolicData::new(RootSystem::build(t).unwrap(), &sub).unwrap();
            ConeSpace::new(p, Weight::new(lambda), n).unwrap()
        },
    )
}

proptest! {
    #[test]
    fn ne_is_exact_and_complete(cone in arb_cone(), degree in 0u32..8) {
        let classes = ne(&cone, degree);
        for b in &classes {
            prop_assert_eq!(cone.ell_of(b.coeffs()).unwrap(), i64::from(degree));
        }
        let mut dedup: Vec<_> = classes.iter().map(|b| b.coeffs().to_vec()).collect();
        dedup.dedup();
        prop_assert_eq!(dedup.len(), classes.len());
        if cone.has_lines() {
            prop_assert!(!classes.is_empty());
        }
    }

    #[test]
    fn classification_invariants(cone in arb_cone(), degree in 0u32..6) {
        let r = classify(&cone, degree).unwrap();
        prop_assert_eq!(r.case == Case::Lines, cone.has_lines());
        prop_assert_eq!(r.components.len() as u64, count_components(&cone, degree));
        let mut seen = std::collections::HashSet::new();
        for c in &r.components {
            prop_assert_eq!(c.alpha_prime + c.vertex_multiplicity, i64::from(degree));
            prop_assert_eq!(cone.e_intersection(&c.tilde).unwrap(), c.vertex_multiplicity);
            prop_assert_eq!(cone.dim_mor_tilde(&c.tilde).unwrap(), c.dimension);
            if r.case == Case::Lines {
                prop_assert_eq!(c.vertex_multiplicity, 0);
            }
            prop_assert!(seen.insert((c.beta.coeffs().to_vec(), c.vertex_multiplicity)));
        }
        if degree == 0 {
            prop_assert_eq!(r.components.len(), 1);
            prop_assert_eq!(r.components[0].dimension, cone.dim_x());
        }
        // equidimensional exactly when beta.(c - l) is constant over the index set
        let diff: Vec<i64> = cone.parabolic().chern_degrees().iter().zip(cone.ell()).map(|(c, l)| c - l).collect();
        let variable: std::collections::BTreeSet<i64> = r.components.iter()
            .map(|c| c.beta.coeffs().iter().zip(&diff).map(|(b, d)| b * d).sum())
            .collect();
        prop_assert_eq!(r.equidimensional, variable.len() <= 1);
        prop_assert_eq!(is_equidimensional(&cone, degree).unwrap().equidimensional, r.equidimensional);
    }

    #[test]
    fn json_round_trip(cone in arb_cone(), degree in 0u32..5) {
        let r = classify(&cone, degree).unwrap();
        let text = report::to_json(&r);
        prop_assert_eq!(report::from_json(&text).unwrap(), r);
    }

    #[test]
    fn affine_comparison_never_fails(cone in arb_cone(), degree in 0u32..5) {
        let cmp = compare_ne_ir(&cone, degree);
        prop_assert_eq!(cmp.ne_count as usize, ne(&cone, degree).len());
        if degree == 0 {
            prop_assert!(cmp.matches);
        }
    }
}
