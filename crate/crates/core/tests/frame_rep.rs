mod common;

use common::{cd, euler, frame, interval_hom};
use coxeter_clusters::mutation::complements;
use coxeter_clusters::{
    algebraic_mutate, exchange_graph, AdaptedFrame, CartanData, ClusterObject, Error, RepData,
};
use rand::{seq::index::sample, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FRAMES: [&str; 11] = [
    "A1", "A5", "B3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2",
];

#[test]
fn frames_build_for_every_finite_type() {
    for label in FRAMES {
        let f = frame(label);
        let nu = f.cartan().positive_roots().unwrap().len();
        assert_eq!(f.nu(), nu, "{label}");
        assert_eq!(f.len(), nu + f.rank());
        assert_eq!(&f.cartan().word_to_element(&f.w0_word()).unwrap(), f.w0());
        // the initial selection leaves exactly the w0 word
        assert!(f.is_reduced_w0(&f.initial_selection()), "{label}");
    }
}

#[test]
fn rho_is_the_w0_twist() {
    assert_eq!(frame("A4").rho(), [4, 3, 2, 1]);
    assert_eq!(frame("B3").rho(), [1, 2, 3]);
    assert_eq!(frame("E7").rho(), [1, 2, 3, 4, 5, 6, 7]);
    // in type D the twist is trivial exactly for even rank
    for (label, trivial) in [("D4", true), ("D5", false), ("D6", true), ("D7", false)] {
        let f = frame(label);
        let id: Vec<usize> = (1..=f.rank()).collect();
        assert_eq!(f.rho() == id.as_slice(), trivial, "{label}");
    }
    let e6 = frame("E6");
    let mut rho = e6.rho().to_vec();
    assert_ne!(rho, (1..=6).collect::<Vec<_>>());
    rho.sort_unstable();
    assert_eq!(rho, (1..=6).collect::<Vec<_>>());
}

#[test]
fn deleted_word_identity_on_random_selections() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for label in ["B3", "D5", "E6", "G2"] {
        let f = frame(label);
        for _ in 0..300 {
            let mut pos: Vec<usize> = sample(&mut rng, f.len(), f.rank())
                .into_iter()
                .map(|t| t + 1)
                .collect();
            pos.sort_unstable();
            assert!(
                f.deleted_word_identity(&f.selection(&pos).unwrap()),
                "{label} {pos:?}"
            );
        }
    }
}

#[test]
fn selections_are_validated() {
    let f = frame("A2");
    assert!(f.selection(&[1]).is_err());
    assert!(f.selection(&[2, 2]).is_err());
    assert!(f.selection(&[0, 3]).is_err());
    assert!(f.selection(&[1, 6]).is_err());
    assert_eq!(f.selection(&[4, 1]).unwrap().positions(), [1, 4]);
}

#[test]
fn tau_is_c_inverse_on_dimension_vectors() {
    for label in ["A4", "D4", "D5", "E6"] {
        let f = frame(label);
        let rep = RepData::new(&f).unwrap();
        let cinv = f.cartan().coxeter_inverse();
        for m in rep.quiver().modules() {
            match rep.quiver().tau(m.position) {
                Some(u) => assert_eq!(rep.quiver().module(u).dim, cinv.apply(&m.dim)),
                None => assert!(m.projective.is_some(), "{label} {:?}", m.dim),
            }
        }
    }
}

#[test]
fn modules_match_frame_roots() {
    for label in ["A4", "D4", "E6"] {
        let f = frame(label);
        let rep = RepData::new(&f).unwrap();
        for t in 1..=f.nu() {
            assert_eq!(&rep.quiver().module(t).dim, f.alpha(t), "{label} t={t}");
        }
    }
}

#[test]
fn hom_oracle_on_other_orientations() {
    type Quiver<'a> = (usize, &'a [(usize, usize, u32)]);
    let quivers: [Quiver; 3] = [
        (3, &[(2, 1, 1), (2, 3, 1)]),
        (4, &[(1, 2, 1), (3, 2, 1), (3, 4, 1)]),
        (5, &[(2, 1, 1), (2, 3, 1), (4, 3, 1), (4, 5, 1)]),
    ];
    for (n, arrows) in quivers {
        let cd = CartanData::from_quiver(n, arrows).unwrap();
        let f = AdaptedFrame::build(&cd).unwrap();
        let rep = RepData::new(&f).unwrap();
        let mods = rep.quiver().modules();
        for x in mods {
            for y in mods {
                assert_eq!(
                    rep.homs().hom(x.position, y.position) as usize,
                    interval_hom(&cd, &x.dim, &y.dim),
                    "{arrows:?}: {:?} {:?}",
                    x.dim,
                    y.dim
                );
                let d = rep.homs().hom(x.position, y.position) as i64
                    - rep.homs().ext(x.position, y.position) as i64;
                assert_eq!(d, euler(&cd, &x.dim, &y.dim));
                assert_eq!(rep.euler_form(&x.dim, &y.dim), euler(&cd, &x.dim, &y.dim));
            }
        }
        // clusters still agree across the conditions
        for sel in f.all_selections() {
            assert_eq!(rep.is_cluster_tilting(&sel), f.is_reduced_w0(&sel));
        }
    }
}

#[test]
fn homs_only_go_forward() {
    let f = frame("D5");
    let rep = RepData::new(&f).unwrap();
    for x in 1..=f.nu() {
        assert_eq!(rep.homs().hom(x, x), 1);
        for y in 1..x {
            assert_eq!(rep.homs().hom(x, y), 0, "Hom(M{x}, M{y})");
        }
    }
}

#[test]
fn exceptional_examples() {
    let f = frame("A2");
    let rep = RepData::new(&f).unwrap();
    // modules S1 = P1, P2, S2 = I2
    let p1 = rep.quiver().projective(1);
    let p2 = rep.quiver().projective(2);
    let s2 = (1..=3).find(|&t| f.alpha(t).0 == [0, 1]).unwrap();
    assert!(rep.homs().is_exceptional_sequence(&[p1, p2]));
    assert!(
        rep.homs().is_exceptional_sequence(&[p1, s2])
            != rep.homs().is_exceptional_sequence(&[s2, p1])
    );
    assert!(!rep.homs().is_exceptional_sequence(&[p1, p1]));
}

#[test]
fn shifted_projectives_pair_with_support() {
    let f = frame("A3");
    let rep = RepData::new(&f).unwrap();
    for t in 1..=f.nu() {
        let dim = &f.alpha(t).0;
        for k in 1..=3 {
            let e = rep.cluster_ext(
                ClusterObject::Module(t),
                ClusterObject::ShiftedProjective(k),
            );
            assert_eq!(e as i64, dim[k - 1]);
        }
    }
}

#[test]
fn non_simply_laced_rep_is_refused() {
    let f = frame("B3");
    assert!(matches!(RepData::new(&f), Err(Error::NotSimplyLaced)));
}

#[test]
fn mutation_keeps_condition3() {
    for label in ["A4", "D4", "B3", "G2"] {
        let f = frame(label);
        let g = exchange_graph(&f).unwrap();
        for v in &g.vertices {
            assert!(f.condition3(v));
            for k in 1..=f.rank() {
                let step = algebraic_mutate(&f, v, k).unwrap();
                assert!(f.condition3(&step.to), "{label} {v} k={k}");
                assert_eq!(complements(&f, v, k), [step.inserted]);
            }
        }
    }
}

#[test]
fn mutation_rejects_non_clusters() {
    let f = frame("A3");
    let bad = f.all_selections().find(|s| !f.is_reduced_w0(s)).unwrap();
    assert!(matches!(
        algebraic_mutate(&f, &bad, 1),
        Err(Error::NotACluster(_))
    ));
    assert!(algebraic_mutate(&f, &f.initial_selection(), 4).is_err());
}

#[test]
fn exchange_graph_sizes() {
    for (label, clusters) in [("A1", 2), ("A5", 132), ("B2", 6), ("C3", 20), ("D5", 182)] {
        let g = exchange_graph(&frame(label)).unwrap();
        assert_eq!(g.vertices.len(), clusters, "{label}");
        assert!(g.is_regular(cd(label).rank()));
        assert!(g.is_connected());
    }
}
