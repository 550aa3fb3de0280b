use std::collections::BTreeMap;

use super::*;
use crate::ext::Gen;
use crate::fixtures;
use crate::weyl::WeylElt;

fn v(e: i32) -> Laurent {
    Laurent::v_pow(e)
}

/// `T_s⁻¹ = v^{-2L} T_s + (v^{-2L} - 1) T_1`, written out by hand.
fn inverse_gen(alg: &HeckeAlgebra, s: Gen) -> HeckeElt {
    let l = alg.params().weight(s) as i32;
    let mut h = alg.term(alg.group().gen(s), v(-2 * l));
    h.add_term(&alg.group().identity(), &(&v(-2 * l) - &Laurent::one()));
    h
}

#[test]
fn identity_is_neutral() {
    let alg = fixtures::load("a2_omega3");
    for w in alg.group().elements_up_to(2, 8).unwrap() {
        assert_eq!(alg.mul(&alg.one(), &alg.basis(&w)).unwrap(), alg.basis(&w));
        assert_eq!(alg.mul(&alg.basis(&w), &alg.one()).unwrap(), alg.basis(&w));
    }
}

#[test]
fn quadratic_relation_renders() {
    let alg = fixtures::load("c2_alternating");
    let s0 = alg.parse("s0").unwrap();
    let sq = alg.mul(&alg.basis(&s0), &alg.basis(&s0)).unwrap();
    assert_eq!(alg.render(&sq), "v^4·T[1] + (v^4 - 1)·T[s0]");
    let mut want = alg.term(&s0, &v(4) - &Laurent::one());
    want.add_term(&alg.group().identity(), &v(4));
    assert_eq!(sq, want);
}

#[test]
fn length_additive_product_is_single_term() {
    let alg = fixtures::load("a1_weight_lattice");
    let g = alg.group();
    let s = alg.parse("s1").unwrap();
    let t = alg.parse("(1)").unwrap();
    let st = g.mul(&s, &t);
    let ts = g.mul(&t, &s);
    let (additive, other) = if g.length(&st) == g.length(&s) + g.length(&t) { (st, t.clone()) } else { (ts, t.clone()) };
    assert_eq!(g.length(&additive), 2);
    let prod = if additive == g.mul(&s, &other) {
        alg.mul(&alg.basis(&s), &alg.basis(&other)).unwrap()
    } else {
        alg.mul(&alg.basis(&other), &alg.basis(&s)).unwrap()
    };
    assert_eq!(prod, alg.basis(&additive));
}

#[test]
fn inverses() {
    let alg = fixtures::load("a1_weight_lattice");
    let g = alg.group();
    assert_eq!(alg.inverse(&g.identity()), alg.one());
    let s1 = g.gen_by_name("s1").unwrap();
    assert_eq!(alg.inverse(g.gen(s1)), inverse_gen(&alg, s1));
    let tau = g.omega_generators()[0].clone();
    assert_eq!(alg.inverse(&tau), alg.basis(&g.inverse(&tau)));
    for w in g.elements_up_to(4, 8).unwrap() {
        let inv = alg.inverse(&w);
        assert_eq!(alg.mul(&inv, &alg.basis(&w)).unwrap(), alg.one());
        assert_eq!(alg.mul(&alg.basis(&w), &inv).unwrap(), alg.one());
    }
}

#[test]
fn theta_of_zero_and_dominant() {
    let alg = fixtures::load("c2_alternating");
    let g = alg.group();
    assert_eq!(alg.theta(&g.lattice().zero()), alg.one());
    let lam = alg.parse_lattice("(1,0)").unwrap();
    let t = g.translation(lam.clone());
    assert_eq!(alg.theta(&lam), alg.term(&t, v(-(alg.weight(&t) as i32))));
}

#[test]
fn theta_of_negative_coroot_in_a1() {
    let alg = fixtures::load("a1_root_lattice");
    let g = alg.group();
    let a = g.coroot(0).clone();
    let t = g.translation(a.clone());
    // t_{α∨} = s0·s1 here, so T_{t}⁻¹ = T_{s1}⁻¹ T_{s0}⁻¹.
    let (s0, s1) = (g.gen_by_name("s0").unwrap(), g.gen_by_name("s1").unwrap());
    assert_eq!(g.from_word(&[s0, s1]), t);
    let inv = alg.mul(&inverse_gen(&alg, s1), &inverse_gen(&alg, s0)).unwrap();
    let want = inv.scale(&v(alg.weight(&t) as i32));
    let neg = g.lattice().neg(&a);
    let th = alg.theta(&neg);
    assert_eq!(th, want);
    let tn = g.translation(neg);
    assert!(th.support().all(|w| g.bruhat_leq(w, &tn)));
    assert_eq!(th.len(), 4);
}

#[test]
fn theta_additivity_examples() {
    let alg = fixtures::load("a2_omega3");
    let g = alg.group();
    let zero = g.lattice().zero();
    for lam in g.translations_up_to(4, 1) {
        assert!(alg.theta_additivity_check(&zero, &lam));
        assert!(alg.theta_additivity_check(&lam, &g.lattice().neg(&lam)));
        let p = alg.mul(&alg.theta(&lam), &alg.theta(&g.lattice().neg(&lam))).unwrap();
        assert_eq!(p, alg.one());
    }
}

#[test]
fn theta_rejects_non_dominant_parts() {
    let alg = fixtures::load("a1_root_lattice");
    let g = alg.group();
    let a = g.coroot(0).clone();
    assert!(matches!(
        alg.theta_from(&g.lattice().neg(&a), &g.lattice().zero()),
        Err(HeckeError::NotDominant { .. })
    ));
}

#[test]
fn commutation_rhs_examples() {
    let alg = fixtures::load("a1_root_lattice");
    let g = alg.group();
    assert!(alg.commutation_rhs(0, &g.lattice().zero()).unwrap().is_zero());
    let a = g.coroot(0).clone();
    let l0 = &v(2) - &Laurent::one();
    let l1 = &v(2) - &Laurent::one();
    assert_eq!(alg.script_l(0, 0).unwrap(), l0);
    assert_eq!(alg.script_l(1, 0).unwrap(), l1);
    let mut want = alg.theta(&a).scale(&l0);
    want.add_scaled(&alg.theta(&g.lattice().zero()), &l1);
    assert_eq!(alg.commutation_rhs(0, &a).unwrap(), want);
    assert!(alg.commutation_check(0, &a).unwrap());
    assert!(alg.commutation_check(0, &g.lattice().neg(&a)).unwrap());
    assert_eq!(alg.commutation_rhs(1, &a), Err(HeckeError::NotFiniteSimple(2)));
}

#[test]
fn alternating_parameters_appear_in_c2() {
    let alg = fixtures::load("c2_alternating");
    let g = alg.group();
    // s2 is the reflection in the long root 2e2; its wall at level 1 has type s0.
    assert_eq!(alg.tilde_weight(1).unwrap(), 2);
    let (l0, l1) = (alg.script_l(0, 1).unwrap(), alg.script_l(1, 1).unwrap());
    assert_eq!(l0, &v(2) - &Laurent::one());
    assert_eq!(l1, &v(3) - &v(-1));
    let lam = alg.parse_lattice("(0,1)").unwrap();
    assert_eq!(g.pairing(1, &lam), 2);
    let rhs = alg.commutation_rhs(1, &lam).unwrap();
    let mut want = alg.theta(&lam).scale(&l0);
    want.add_scaled(&alg.theta(&g.lattice().sub(&lam, g.coroot(1))), &l1);
    assert_eq!(rhs, want);
    assert!(alg.commutation_check(1, &lam).unwrap());
}

#[test]
fn bernstein_examples() {
    let alg = fixtures::load("a2_omega3");
    let g = alg.group();
    let zero = g.lattice().zero();
    let b = alg.to_bernstein(&alg.one(), DEFAULT_MAX_STEPS).unwrap();
    assert_eq!(b, BTreeMap::from([((zero, WeylElt::IDENTITY), Laurent::one())]));
    let lam = alg.parse_lattice("(-1,1)").unwrap();
    for u in g.weyl().elements() {
        let h = alg.bernstein_basis(&lam, u);
        let b = alg.to_bernstein(&h, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(b, BTreeMap::from([((lam.clone(), u), Laurent::one())]));
    }
    let dom = alg.parse_lattice("(1,1)").unwrap();
    let t = g.translation(dom.clone());
    let b = alg.to_bernstein(&alg.basis(&t), DEFAULT_MAX_STEPS).unwrap();
    assert_eq!(b, BTreeMap::from([((dom, WeylElt::IDENTITY), v(alg.weight(&t) as i32))]));
}

#[test]
fn bernstein_step_cap_is_reported() {
    let alg = fixtures::load("a2_omega3");
    let h = alg.basis(&alg.parse("s0.s1.s2").unwrap());
    assert_eq!(alg.to_bernstein(&h, 1), Err(HeckeError::WindowExceeded { steps: 1 }));
}

#[test]
fn central_elements() {
    let alg = fixtures::load("a1_root_lattice");
    let g = alg.group();
    assert_eq!(alg.central_element(&g.weyl_orbit(&g.lattice().zero())), alg.one());
    let a = g.coroot(0).clone();
    let z = alg.central_element(&g.weyl_orbit(&a));
    assert_eq!(z, &alg.theta(&a) + &alg.theta(&g.lattice().neg(&a)));
    for x in g.gen_ids() {
        assert!(alg.commutator(&alg.gen(x), &z).is_zero());
    }
    let alg = fixtures::load("su6_ramified");
    let g = alg.group();
    let o = g.weyl_orbit(&alg.parse_lattice("(1,0,0)").unwrap());
    assert_eq!(o.len(), 6);
    assert!(alg.central_witness(&alg.central_element(&o)).is_none());
}

#[test]
fn center_decomposition() {
    let alg = fixtures::load("a2_omega3");
    let g = alg.group();
    let o0 = g.weyl_orbit(&g.lattice().zero());
    assert_eq!(alg.center_decompose(&alg.one()).unwrap(), BTreeMap::from([(o0, Laurent::one())]));
    let o1 = g.weyl_orbit(&alg.parse_lattice("(1,0)").unwrap());
    let o2 = g.weyl_orbit(&alg.parse_lattice("(1,1)").unwrap());
    let mut h = alg.central_element(&o1).scale(&Laurent::constant(3));
    h.add_scaled(&alg.central_element(&o2), &v(2));
    let want = BTreeMap::from([(o1, Laurent::constant(3)), (o2, v(2))]);
    assert_eq!(alg.center_decompose(&h).unwrap(), want);
    let s1 = alg.basis(&alg.parse("s1").unwrap());
    match alg.center_decompose(&s1) {
        Err(HeckeError::NotCentral { witness, terms, .. }) => {
            assert!(terms > 0);
            assert!(g.gen_by_name(&witness).is_some() || witness.starts_with('('));
        }
        other => panic!("expected NotCentral, got {other:?}"),
    }
}

#[test]
fn iota_drops_torsion() {
    let alg = fixtures::load("a1_torsion");
    let q = alg.torsion_free_quotient();
    let x = alg.parse("(1;1)").unwrap();
    let img = alg.iota(&alg.basis(&x), &q).unwrap();
    assert_eq!(img, q.basis(&q.parse("(1)").unwrap()));
    let free = fixtures::load("a1_weight_lattice");
    let fq = free.torsion_free_quotient();
    for w in free.group().elements_up_to(3, 8).unwrap() {
        let img = free.iota(&free.basis(&w), &fq).unwrap();
        assert_eq!(img.support().collect::<Vec<_>>(), vec![&w]);
    }
}

#[test]
fn iota_is_multiplicative_on_small_elements() {
    let alg = fixtures::load("a1_torsion");
    let q = alg.torsion_free_quotient();
    let els = alg.group().elements_up_to(2, 8).unwrap();
    for a in &els {
        for b in &els {
            let prod = alg.mul(&alg.basis(a), &alg.basis(b)).unwrap();
            let lhs = alg.iota(&prod, &q).unwrap();
            let rhs = q
                .mul(&alg.iota(&alg.basis(a), &q).unwrap(), &alg.iota(&alg.basis(b), &q).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn iota_rejects_unrelated_algebras() {
    let alg = fixtures::load("a1_torsion");
    let other = fixtures::load("a1_weight_lattice");
    assert_eq!(alg.iota(&alg.one(), &other), Err(HeckeError::ContextMismatch));
}

#[test]
fn context_mismatch() {
    let a = fixtures::load("a1_root_lattice");
    let b = fixtures::load("a1_root_lattice");
    assert_eq!(a.mul(&a.one(), &b.one()), Err(HeckeError::ContextMismatch));
}

#[test]
fn normalized_rendering() {
    let alg = fixtures::load("a1_root_lattice");
    let s = alg.basis(&alg.parse("s1").unwrap());
    assert_eq!(alg.render_normalized(&s), "v·T~[s1]");
    assert_eq!(alg.render(&alg.zero()), "0");
    assert_eq!(alg.render(&-&s), "-T[s1]");
}

#[test]
fn specialization_at_one_is_the_group_law() {
    let alg = fixtures::load("c2_alternating");
    let g = alg.group();
    let els = g.elements_up_to(3, 8).unwrap();
    for a in &els {
        for b in &els {
            let p = alg.specialize_one(&alg.mul(&alg.basis(a), &alg.basis(b)).unwrap());
            assert_eq!(p.len(), 1);
            assert_eq!(p.get(&g.mul(a, b)), Some(&1));
        }
    }
}

#[test]
fn literals() {
    let alg = fixtures::load("c2_alternating");
    let s0 = alg.parse("s0").unwrap();
    assert_eq!(alg.parse_basis("T[s0]").unwrap(), alg.basis(&s0));
    assert_eq!(alg.parse_basis("T~[s0]").unwrap(), alg.term(&s0, v(-2)));
    assert_eq!(alg.parse("T[(1,0)|s1 * s2]").unwrap(), alg.group().mul(&alg.parse("(1,0)|s1").unwrap(), &alg.parse("s2").unwrap()));
    assert!(matches!(alg.parse(""), Err(crate::literal::LiteralError::Empty)));
    assert!(matches!(alg.parse("T[s1"), Err(crate::literal::LiteralError::Unbalanced(_))));
    assert!(matches!(alg.parse("(1)"), Err(crate::literal::LiteralError::BadTranslation { .. })));
    assert_eq!(crate::literal::join_terms(&["a".into(), "-b".into(), "c".into()]), "a - b + c");
}
