use idealis::algebra::Ring;
use idealis::fixtures::{nonlinear_square_ideal, order_sensitive_graph};
use idealis::graph::{classify_covers, minimal_vertex_covers, CoverForm};
use idealis::quotients::{c5_cover_power_order, check_products_minimal, find_linear_quotients, SearchOutcome};
use idealis::resolution::{betti_table, has_linear_resolution, is_componentwise_linear};
use idealis::{cover_ideal, edge_ideal, recognize_c4_2k2, regularity, Field, Graph, MonomialIdeal};

fn ideal(vars: &[&str], gens: &[&str]) -> MonomialIdeal {
    let ring = Ring::new(vars.iter().copied());
    let gens = gens.iter().map(|g| ring.parse_monomial(g).unwrap()).collect();
    MonomialIdeal::new(ring, gens).unwrap()
}

#[test]
fn order_sensitive_graph_structure() {
    let g = order_sensitive_graph();
    let p = recognize_c4_2k2(&g).into_partition().unwrap();
    let l = p.labelled(&g);
    assert_eq!(l.v1, ["a"]);
    assert_eq!(l.v2, ["b"]);
    assert_eq!(l.v3.len(), 5);
    assert_eq!(g.max_degree(), 6);
    let forms = classify_covers(&g, &p).unwrap();
    assert_eq!(forms.len(), 6);
    let type_two: Vec<_> = forms.iter().filter(|(_, f)| matches!(f, CoverForm::TypeII { .. })).collect();
    assert_eq!(type_two.len(), 1);
    assert_eq!(g.format_set(type_two[0].0), "{a,c,d,e,f,g}");
}

#[test]
fn pentagon_covers() {
    let c5 = Graph::cycle(5, "u");
    assert_eq!(minimal_vertex_covers(&c5).len(), 5);
    let j = cover_ideal(&c5).unwrap();
    for f in ["u1*u2*u4", "u4*u5*u2", "u2*u3*u5", "u3*u4*u1", "u5*u1*u3"] {
        assert!(j.is_generator(&j.ring().parse_monomial(f).unwrap()));
    }
    let counts: Vec<usize> = (1..=3).map(|p| c5_cover_power_order(p).unwrap().order().len()).collect();
    assert_eq!(counts, [5, 15, 35]);
}

#[test]
fn cover_products() {
    let c5 = Graph::cycle(5, "u");
    let p = recognize_c4_2k2(&c5).into_partition().unwrap();
    assert_eq!(check_products_minimal(&c5, &p, 2).unwrap().count, 15);
    let g = order_sensitive_graph();
    let p = recognize_c4_2k2(&g).into_partition().unwrap();
    let r = check_products_minimal(&g, &p, 2).unwrap();
    assert!(r.all_minimal);
    assert_eq!(r.count, 21);
}

#[test]
fn nonlinear_square_values() {
    let i = nonlinear_square_ideal();
    assert!(matches!(find_linear_quotients(&i).unwrap(), SearchOutcome::Found(_)));
    assert_eq!(regularity(&i, Field::Rationals).unwrap(), 3);
    let sq = i.power(2).unwrap();
    assert_eq!(sq.len(), 36);
    assert_eq!(regularity(&sq, Field::Rationals).unwrap(), 7);
    assert!(!has_linear_resolution(&sq, Field::Rationals).unwrap());
}

#[test]
fn order_sensitive_colon() {
    let i = edge_ideal(&order_sensitive_graph());
    let ab = i.ring().parse_monomial("a*b").unwrap();
    assert_eq!(regularity(&i.power(2).unwrap().colon(&ab).unwrap(), Field::Rationals).unwrap(), 3);
}

#[test]
fn small_tables() {
    let t = betti_table(&ideal(&["x", "y"], &["x", "y"]), Field::Rationals).unwrap();
    assert_eq!((t.get(0, 1), t.get(1, 2)), (2, 1));
    let two_k2 = Graph::from_edges(&[("a", "b"), ("c", "d")]).unwrap();
    let i = edge_ideal(&two_k2);
    assert_eq!(regularity(&i, Field::Rationals).unwrap(), 3);
    assert!(!has_linear_resolution(&i, Field::Rationals).unwrap());
    let squares = ideal(&["x", "y"], &["x^2", "y^2"]);
    assert!(!is_componentwise_linear(&squares, Field::Rationals).unwrap());
    let j = cover_ideal(&order_sensitive_graph()).unwrap();
    assert!(!j.is_equigenerated());
    assert!(is_componentwise_linear(&j, Field::Rationals).unwrap());
}
