mod common;

use semiring_cholesky::{parse_uri, q_closed, validate_table, AnySemiring, Error, Semiring};

const BUILTINS: [&str; 12] = [
    "bool",
    "zn:2",
    "zn:3",
    "zn:4",
    "zn:6",
    "zn:9",
    "chain:2",
    "chain:5",
    "z2x3",
    "product:zn:2,bool",
    "product:zn:3,zn:4",
    "product:product:bool,zn:2,chain:3",
];

#[test]
fn builtins_satisfy_the_axioms() {
    for uri in BUILTINS {
        let s = common::finite(uri);
        assert!(validate_table(&s.to_raw()).is_ok(), "{uri}");
    }
}

#[test]
fn derived_sets_are_consistent() {
    for uri in BUILTINS {
        let s = common::finite(uri);
        let elems = s.elements().unwrap();
        for a in elems {
            match s.inverse(a) {
                Some(inv) => assert_eq!(s.mul(a, &inv), s.one(), "{uri}"),
                None => assert!(elems.iter().all(|b| s.mul(a, b) != s.one()), "{uri}"),
            }
            match s.negate(a) {
                Some(neg) => assert_eq!(s.add(a, &neg), s.zero(), "{uri}"),
                None => assert!(elems.iter().all(|b| s.add(a, b) != s.zero()), "{uri}"),
            }
            let roots = s.square_roots(a);
            let brute: Vec<_> = elems
                .iter()
                .filter(|k| s.mul(k, k) == *a)
                .cloned()
                .collect();
            assert_eq!(roots, brute, "{uri}");
            assert_eq!(s.is_square(a), !roots.is_empty());
        }
    }
}

#[test]
fn units_and_negatables_are_closed() {
    for uri in BUILTINS {
        let s = common::finite(uri);
        let elems = s.elements().unwrap();
        for a in elems {
            for b in elems {
                if s.is_unit(a) && s.is_unit(b) {
                    assert!(s.is_unit(&s.mul(a, b)), "{uri}");
                }
                if s.is_negatable(a) && s.is_negatable(b) {
                    assert!(s.is_negatable(&s.add(a, b)), "{uri}");
                    assert!(s.is_negatable(&s.mul(a, b)), "{uri}");
                }
                if s.is_square(a) && s.is_square(b) {
                    assert!(s.is_square(&s.mul(a, b)), "{uri}");
                }
            }
        }
        assert_eq!(
            s.is_antinegative(),
            elems.iter().filter(|a| s.is_negatable(a)).count() == 1
        );
    }
}

#[test]
fn preferred_root_prefers_units() {
    let s = common::finite("zn:8");
    let one = s.one();
    let root = s.preferred_root(&one).unwrap();
    assert_eq!(root, one);
    let four = s.parse_element("4").unwrap();
    // 2 and 6 square to 4 and neither is a unit
    assert_eq!(s.name(&s.preferred_root(&four).unwrap()), "2");
}

#[test]
fn q_closure_over_builtins() {
    let expected = [
        ("bool", true),
        ("zn:2", true),
        ("zn:3", false),
        ("zn:4", false),
        ("zn:6", false),
        ("chain:2", true),
        ("chain:5", true),
        ("z2x3", true),
        ("product:zn:2,bool", true),
    ];
    for (uri, closed) in expected {
        assert_eq!(
            q_closed(common::finite(uri).as_ref()).unwrap(),
            closed,
            "{uri}"
        );
    }
    assert!(matches!(
        q_closed(&semiring_cholesky::Naturals),
        Err(Error::NotEnumerable)
    ));
}

#[test]
fn broken_tables_report_violations() {
    let mut raw = common::finite("zn:4").to_raw();
    raw.add[1][2] = 0;
    match validate_table(&raw) {
        Err(Error::AxiomViolations(v)) => assert!(!v.is_empty()),
        other => panic!("expected violations, got {other:?}"),
    }
    let mut raw = common::finite("zn:4").to_raw();
    raw.mul[3].pop();
    assert!(matches!(
        validate_table(&raw),
        Err(Error::MalformedTable(_))
    ));
}

#[test]
fn uri_errors() {
    for bad in ["zn:1", "zn:x", "product:bool", "chain:0", "poly", ""] {
        assert!(parse_uri(bad).is_err(), "{bad}");
    }
    assert!(matches!(
        parse_uri("nat").unwrap(),
        AnySemiring::Naturals(_)
    ));
}
