use bitop_core::catalog;
use bitop_core::dframe::{all_valid_dframes, boolean_dframe, d_o, f_functor, g_functor, SliceObject};
use bitop_core::hm::{self, BFilter};
use bitop_core::order::BOrder;
use bitop_core::separation::{check, Axiom, AxiomReport};
use bitop_core::sobriety;
use bitop_core::space::find_homeomorphism;
use bitop_core::{BSet, BSpace, BVal, Carrier, Error, FinTopology, PointSet, TopSpace};

fn set(s: &BSpace, text: &str) -> PointSet {
    s.carrier.parse_set(text).unwrap()
}

#[test]
fn t4x3_specialization_matrix() {
    use BVal::*;
    let t = catalog::t4x3();
    let o = BOrder::specialization(&t);
    let want = [[Top, Tt, Bot], [Tt, Top, Ff], [Bot, Ff, Top]];
    for (x, row) in want.iter().enumerate() {
        for (y, v) in row.iter().enumerate() {
            assert_eq!(o.get(x, y), *v, "omega({x},{y})");
        }
    }
}

#[test]
fn chain2_orders() {
    let c = catalog::chain2();
    let o = BOrder::specialization(&c);
    assert_eq!(o.get(0, 1), BVal::Ff);
    assert_eq!(o.get(1, 0), BVal::Tt);
}

#[test]
fn generated_topologies() {
    let t = FinTopology::generate(3, &[PointSet(0b011), PointSet(0b100)]).unwrap();
    assert_eq!(t.opens(), &[PointSet(0), PointSet(0b011), PointSet(0b100), PointSet(0b111)]);
    assert_eq!(FinTopology::generate(3, &[]).unwrap(), FinTopology::indiscrete(3));
    let sierp = FinTopology::generate(2, &[PointSet(0b01)]).unwrap();
    assert_eq!(sierp.opens(), &[PointSet(0), PointSet(0b01), PointSet(0b11)]);
}

#[test]
fn catalog_expectations_hold() {
    for e in catalog::entries() {
        let r = AxiomReport::of(&e.space);
        for (a, want) in &e.axioms {
            assert_eq!(r.get(*a), *want, "{} {a}", e.name);
        }
        for (fact, want) in &e.facts {
            let got = match fact {
                catalog::Fact::BSober => sobriety::is_b_sober(&e.space),
                catalog::Fact::DSober => sobriety::is_d_sober(&e.space),
            };
            assert_eq!(got, *want, "{} {}", e.name, fact.key());
        }
    }
}

#[test]
fn partition_topology_facts() {
    use bitop_core::separation::{classical_axiom, Classical};
    let t = FinTopology::from_opens(4, &[PointSet(0), PointSet(0b0011), PointSet(0b1100), PointSet(0b1111)]).unwrap();
    assert!(classical_axiom(&t, Classical::R0));
    assert!(classical_axiom(&t, Classical::R1));
    assert!(classical_axiom(&t, Classical::Regular));
    assert!(!classical_axiom(&t, Classical::T0));
}

#[test]
fn saturation_and_filters_on_t4x3() {
    let t = catalog::t4x3();
    let x = t.carrier.index("x").unwrap();
    let sat = hm::saturate(&t, &BSet::point(3, x).unwrap());
    assert_eq!(t.carrier.render_bset(&sat), "tt{x y} ff{x}");
    assert_eq!(
        sat.values(),
        vec![BVal::Top, BVal::Tt, BVal::Bot]
    );

    let f = hm::filter_of_set(&t, &sat).unwrap();
    let n = t.len();
    let big = BSet::tt_ff(n, set(&t, "{x y}"), set(&t, "{x}"));
    let z = BSet::tt_ff(n, set(&t, "{z}"), PointSet::EMPTY);
    assert_eq!(f.eval(&big), BVal::Top);
    assert_eq!(f.eval(&z), BVal::Bot);

    let whole = hm::filter_of_set(&t, &BSet::constant(n, BVal::Top)).unwrap();
    for l in t.bopens() {
        assert_eq!(whole.eval(&l), BVal::meet_all(l.values()));
    }
    assert_eq!(hm::set_of_filter(&t, &whole).unwrap(), BSet::constant(n, BVal::Top));

    assert_eq!(hm::filter_of_set(&t, &z), Err(Error::NotInhabited(BVal::Tt)));

    let at_x = BFilter::principal(&t, t.tt.nbhd(x), t.ff.nbhd(x)).unwrap();
    assert_eq!(hm::set_of_filter(&t, &at_x).unwrap(), sat);
    assert!(BFilter::principal(&t, set(&t, "{x}"), set(&t, "{x}")).is_err());
}

#[test]
fn filter_counts() {
    let s = catalog::sierp();
    let filters = hm::enumerate_bfilters(&s).unwrap();
    assert_eq!(filters.len(), 4);
    for f in &filters {
        let t = hm::set_of_filter(&s, f).unwrap();
        assert_eq!(hm::filter_of_set(&s, &t).unwrap(), *f);
    }
    let one = BSpace::omega(&TopSpace::new(Carrier::new(["a"]).unwrap(), FinTopology::discrete(1)).unwrap());
    assert_eq!(hm::enumerate_bfilters(&one).unwrap().len(), 1);
}

#[test]
fn hofmann_mislove_reports() {
    for s in [catalog::sierp(), catalog::dot22()] {
        let r = hm::verify_hm(&s).unwrap();
        assert!(r.b_sober && r.bijection_holds && r.eq_ii_holds && r.part_i_holds, "{}", s.name);
        assert_eq!(r.n_bfilters, r.n_saturated_inhabited);
    }
    assert_eq!(hm::verify_hm(&catalog::sierp()).unwrap().n_bfilters, 4);
    let r = hm::verify_hm(&catalog::t4x3()).unwrap();
    assert!(!r.b_sober);
    assert!(r.part_i_holds && r.eq_ii_holds);
}

#[test]
fn literal_compactness_on_t4x3() {
    let t = catalog::t4x3();
    let fams = hm::DirectedFamilies::new(&t).unwrap();
    for theta in BSet::all(3) {
        assert!(fams.is_compact(&theta));
        assert_eq!(fams.is_compact(&theta), hm::is_compact(&t, &theta));
    }
    assert!(check(&t, Axiom::Compact));
}

#[test]
fn sobriety_reports() {
    let t = catalog::t4x3();
    assert_eq!(sobriety::irreducible_closed_bsets(&t).len(), 4);
    assert_eq!(sobriety::b_points(&t).len(), 4);
    assert!(!sobriety::is_b_sober(&t));
    assert!(sobriety::is_d_sober(&t));
    let w = sobriety::b_sober_witness(&t).unwrap();
    assert_eq!((w.k_tt, w.k_ff), (set(&t, "{z}"), set(&t, "{x}")));

    let sob = sobriety::sobrify(&t);
    assert_eq!(sob.space.len(), 4);
    assert!(sobriety::is_b_sober(&sob.space));

    let d = sobriety::d_sobrify(&t);
    assert!(find_homeomorphism(&d.space, &t, 8).unwrap().is_some());
    let s = catalog::sierp();
    assert!(find_homeomorphism(&sobriety::d_sobrify(&s).space, &s, 8).unwrap().is_some());

    let sizes: Vec<usize> = catalog::spaces().iter().map(|s| sobriety::sobrify(s).space.len()).collect();
    assert_eq!(sizes, vec![4, 4, 6, 4, 4]);
}

#[test]
fn d_frames() {
    for s in catalog::spaces() {
        assert!(d_o(&s).validate().is_empty(), "{}", s.name);
        let f = f_functor(&g_functor(&d_o(&s)));
        assert!(f.validate().is_empty(), "{}", s.name);
    }
    let valid = all_valid_dframes(&SliceObject::boolean()).unwrap();
    assert_eq!(valid.len(), 1);
    assert_eq!(valid[0].con, boolean_dframe().con);
    assert_eq!(valid[0].tot, boolean_dframe().tot);
}
