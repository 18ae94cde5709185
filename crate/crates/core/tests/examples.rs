use schubcurve::catalog::{find, EXAMPLES};
use schubcurve::dual::count_chains;
use schubcurve::ktheory::{
    first_order_triples, k_coeff, k_coeff_pieri, k_promotion_count, lr_oracle,
};
use schubcurve::tableau::hook_length_count;
use schubcurve::{Partition, Rectangle};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn rect(k: usize, m: usize) -> Rectangle {
    Rectangle::new(k, m).unwrap()
}

#[test]
fn every_catalog_example_passes() {
    for e in EXAMPLES {
        let rep = e.run().unwrap();
        assert!(rep.ok, "{}: {:?}", e.id, rep.checks);
    }
    assert!(find("g49").unwrap().run().unwrap().checks.len() >= 4);
}

#[test]
fn known_lr_coefficients() {
    assert_eq!(lr_oracle(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
    assert_eq!(count_chains(&p("2,1"), &p("3,2,1"), &[p("2,1")]), 2);
    assert_eq!(lr_oracle(&p("2,1"), &p("2,1"), &p("4,2")), 1);
    assert_eq!(lr_oracle(&p("1"), &p("1"), &p("2")), 1);
    assert_eq!(lr_oracle(&p("2"), &p("2"), &p("2,2")), 1);
    assert_eq!(lr_oracle(&p("2"), &p("1,1"), &p("2,2")), 0);
    assert_eq!(
        count_chains(
            &Partition::empty(),
            &p("2,2"),
            &[p("1"), p("1"), p("1"), p("1")]
        ),
        2
    );
}

#[test]
fn known_tableau_counts() {
    assert_eq!(hook_length_count(&p("3,2,1")), 16);
    assert_eq!(hook_length_count(&p("4,4,4,4")), 24024);
    assert_eq!(hook_length_count(&p("5,5,5")), 6006);
}

#[test]
fn frozen_k_values() {
    assert_eq!(k_promotion_count(rect(2, 2)), 1);
    assert_eq!(k_promotion_count(rect(2, 3)), 5);
    assert_eq!(k_promotion_count(rect(3, 3)), 84);
    assert_eq!(k_promotion_count(rect(3, 4)), 1386);
    assert_eq!(
        k_coeff(&p("4,2"), &p("4"), &p("5,2"), rect(3, 6)).unwrap(),
        2
    );
    assert_eq!(
        k_coeff_pieri(&p("4,2"), 4, &p("5,2"), rect(3, 6)).unwrap(),
        2
    );
    assert_eq!(
        k_coeff(&p("3,1,1"), &p("3,1,1"), &p("3,1,1"), rect(4, 4)).unwrap(),
        0
    );
}

#[test]
fn first_order_triple_counts() {
    assert_eq!(first_order_triples(rect(2, 3)).len(), 57);
    assert_eq!(first_order_triples(rect(2, 4)).len(), 153);
    assert_eq!(first_order_triples(rect(3, 3)).len(), 321);
}
