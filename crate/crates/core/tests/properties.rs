//! Property tests over randomly generated Laurent polynomials, Weyl group
//! elements and quasi-polynomials.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use heckelab::coeffring::{Alphabet, ParamPoly};
use heckelab::hecke;
use heckelab::params::{ParamMode, ParamSet};
use heckelab::qpoly::{gamma_assemble, gamma_decompose, QPoly};
use heckelab::reps::Rep;
use heckelab::rootsys::{rat_vec, CartanKind, Lattice, Rat, RootSystem};
use heckelab::special::alcove_points;

fn alphabet() -> Arc<Alphabet> {
    Alphabet::new(&["t", "u"]).unwrap()
}

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec(((-3i32..=3, -2i32..=2), -4i64..=4), 0..5).prop_map(|terms| {
        let a = alphabet();
        let mut p = ParamPoly::zero(&a);
        for ((e1, e2), c) in terms {
            p.add_assign_ref(&ParamPoly::monomial(&a, &[e1, e2], BigInt::from(c)));
        }
        p
    })
}

fn systems() -> Vec<Arc<RootSystem>> {
    [
        (CartanKind::GL, 2),
        (CartanKind::GL, 3),
        (CartanKind::A, 2),
        (CartanKind::B, 2),
    ]
    .into_iter()
    .map(|(k, r)| Arc::new(RootSystem::new(k, r).unwrap()))
    .collect()
}

fn laurent(rs: &RootSystem, alph: &Arc<Alphabet>, terms: &[(Vec<i64>, i64)]) -> QPoly {
    let mut f = QPoly::zero(alph, rs.dim());
    for (e, c) in terms {
        let e: Vec<i64> = e.iter().take(rs.dim()).copied().collect();
        f.add_assign_ref(&QPoly::monomial_int(&ParamPoly::from_int(alph, *c), &e));
    }
    f
}

fn exps() -> impl Strategy<Value = Vec<(Vec<i64>, i64)>> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, 3), -3i64..=3), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_divides_back(a in param_poly(), b in param_poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn ring_axioms(a in param_poly(), b in param_poly(), c in param_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a - &a, ParamPoly::zero(&alphabet()));
    }

    #[test]
    fn specialization_is_a_homomorphism(a in param_poly(), b in param_poly(), k in -2i32..=2) {
        let target = Alphabet::new(&["t"]).unwrap();
        let mut map = BTreeMap::new();
        map.insert("u".to_string(), ParamPoly::symbol_pow(&target, "t", k).unwrap().scale_int(-1));
        let s = |p: &ParamPoly| p.specialize(&target, &map).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn display_parses_back(a in param_poly()) {
        let text = a.to_string();
        prop_assert_eq!(ParamPoly::parse(&alphabet(), &text).unwrap(), a.clone());
        prop_assert_eq!(ParamPoly::from_json(&alphabet(), &a.to_json()).unwrap(), a);
    }

    #[test]
    fn weyl_action_is_a_group_action(k in 0usize..4, i in 0usize..64, j in 0usize..64, terms in exps()) {
        let rs = &systems()[k];
        let ws: Vec<_> = rs.elements().collect();
        let (x, y) = (ws[i % ws.len()], ws[j % ws.len()]);
        let f = laurent(rs, &alphabet(), &terms);
        prop_assert_eq!(f.act_weyl(rs, y).act_weyl(rs, x), f.act_weyl(rs, rs.mul(x, y)));
        prop_assert_eq!(f.iota().iota(), f.clone());
        prop_assert_eq!(f.act_weyl(rs, x).iota(), f.iota().act_weyl(rs, x));
    }

    #[test]
    fn length_is_additive_on_reduced_products(k in 0usize..4, i in 0usize..64, s in 0usize..3) {
        let rs = &systems()[k];
        let ws: Vec<_> = rs.elements().collect();
        let w = ws[i % ws.len()];
        let s = s % rs.rank();
        let sw = rs.lmul_s(s, w);
        prop_assert_eq!(rs.length(w), rs.inversion_set(w).len());
        prop_assert_eq!(rs.length(sw).abs_diff(rs.length(w)), 1);
        let w0 = rs.longest();
        prop_assert_eq!(rs.length(rs.mul(w0, w)), rs.length(w0) - rs.length(w));
        prop_assert_eq!(rs.length(rs.mul(rs.mul(w0, w), w0)), rs.length(w));
    }

    #[test]
    fn coset_decomposition_reassembles(k in 0usize..4, i in 0usize..64, mask in 0u32..8) {
        let rs = &systems()[k];
        let ws: Vec<_> = rs.elements().collect();
        let w = ws[i % ws.len()];
        let j: Vec<usize> = (0..rs.rank()).filter(|b| mask & (1 << b) != 0).collect();
        let (a, b) = rs.coset_decompose(w, &j);
        prop_assert_eq!(rs.mul(a, b), w);
        prop_assert!(rs.is_min_coset_rep(a, &j));
        prop_assert_eq!(rs.length(a) + rs.length(b), rs.length(w));
    }

    #[test]
    fn nabla_matches_exact_division(k in 0usize..4, i in 0usize..3, m in 1i64..=3, terms in exps()) {
        let rs = &systems()[k];
        let f = laurent(rs, &alphabet(), &terms);
        let i = i % rs.rank();
        prop_assert_eq!(hecke::nabla(rs, i, m, &f), hecke::nabla_by_division(rs, i, m, &f).unwrap());
    }

    #[test]
    fn gamma_decomposition_reassembles(k in 0usize..4, pick in 0usize..64, terms in exps(), shifts in prop::collection::vec(0usize..8, 3)) {
        let rs = &systems()[k];
        let lattice = Lattice::default_for(rs);
        let points = alcove_points(rs, &lattice, 3).unwrap();
        let c = &points[pick % points.len()];
        let jc = rs.fixing_indices(c);
        let reps = rs.min_coset_reps(&jc);
        let alph = alphabet();
        let mut f = QPoly::zero(&alph, rs.dim());
        for ((e, coeff), s) in terms.iter().zip(&shifts) {
            let e: Vec<Rat> = rat_vec(&e[..rs.dim()]);
            let wc = rs.act_rat(reps[s % reps.len()], c);
            let y: Vec<Rat> = e.iter().zip(&wc).map(|(a, b)| a + b).collect();
            f.add_assign_ref(&QPoly::monomial(&ParamPoly::from_int(&alph, *coeff), &y));
        }
        let parts = gamma_decompose(&f, rs, c, &lattice).unwrap();
        prop_assert_eq!(gamma_assemble(&parts, rs, c, &alph), f);
    }

    #[test]
    fn quadratic_relation_in_all_flavors(k in 0usize..4, i in 0usize..3, terms in exps(), n in 1i64..=3) {
        let rs = systems()[k].clone();
        let ps = Arc::new(ParamSet::new(&rs, ParamMode::Generic, n, false).unwrap());
        let alph = ps.alphabet().clone();
        let i = i % rs.rank();
        let mut f = QPoly::zero(&alph, rs.dim());
        for (e, c) in &terms {
            f.add_assign_ref(&QPoly::monomial_int(&ParamPoly::from_int(&alph, *c), &e[..rs.dim()]));
        }
        let datum = heckelab::rootsys::MetaplecticDatum::standard(&rs, n);
        for rep in [Rep::pol(rs.clone(), ps.clone()).unwrap(), Rep::met(rs.clone(), ps.clone(), datum).unwrap()] {
            let tf = rep.apply_gen(i, &f, false).unwrap();
            let ttf = rep.apply_gen(i, &tf, false).unwrap();
            prop_assert_eq!(ttf, &tf.scale(rep.tdiff_simple(i)) + &f);
            prop_assert_eq!(rep.apply_gen(i, &tf, true).unwrap(), f.clone());
        }
    }
}
