use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use qhmin::algebra::{classical_table, GradedElement, StructureTable};
use qhmin::presentation::{load_presentation, verify_quantum_presentation, Evaluator};
use qhmin::quantum::{
    complete_quantum_table, corrections, dmax_identity, giambelli_quantum_check, higher_duality_check,
    hyperplane_power_identity, lines_through_point, min_power_consistency, negative_entries, quantum_chevalley,
    quantum_table,
};
use qhmin::verify::{all_triples, associativity_failures, sampled_triples, ProductCache};
use qhmin::Space;

fn space(name: &'static str) -> &'static Space {
    static E6: OnceLock<Space> = OnceLock::new();
    static E7: OnceLock<Space> = OnceLock::new();
    let cell = match name {
        "E6/P1" => &E6,
        "E7/P7" => &E7,
        _ => unreachable!(),
    };
    cell.get_or_init(|| Space::parse(name).unwrap())
}

fn table(name: &'static str) -> &'static StructureTable<'static> {
    static E6: OnceLock<StructureTable<'static>> = OnceLock::new();
    static E7: OnceLock<StructureTable<'static>> = OnceLock::new();
    let cell = match name {
        "E6/P1" => &E6,
        "E7/P7" => &E7,
        _ => unreachable!(),
    };
    cell.get_or_init(|| quantum_table(space(name)).unwrap())
}

fn el(sp: &Space, terms: &[(usize, &str, i64)]) -> GradedElement {
    let mut e = GradedElement::zero();
    for &(d, n, c) in terms {
        e.add_term(d, sp.resolve(n).unwrap(), BigInt::from(c));
    }
    e
}

#[test]
fn cayley_plane_quantum_chevalley() {
    let sp = space("E6/P1");
    let s = |n| sp.resolve(n).unwrap();
    assert_eq!(quantum_chevalley(sp, s("s'12")), el(sp, &[(0, "s13", 1)]));
    assert_eq!(quantum_chevalley(sp, s("s''12")), el(sp, &[(0, "s13", 1), (1, "s1", 1)]));
    assert_eq!(quantum_chevalley(sp, s("pt")), el(sp, &[(1, "s''5", 1)]));
    // The classes carrying a q-term are exactly the interval [pt, s''11].
    let t1 = sp.resolve("s''11").unwrap();
    let domain: Vec<_> = (0..sp.len()).filter(|&w| sp.one_dual(w).is_some()).collect();
    let interval: Vec<_> = (0..sp.len()).filter(|&w| sp.contained(w, t1)).collect();
    assert_eq!(domain, interval);
    assert!(domain.contains(&sp.point()));
    assert_eq!(domain.len(), 6);
}

#[test]
fn quantum_chevalley_agrees_with_the_table() {
    for name in ["E6/P1", "E7/P7"] {
        let sp = space(name);
        let t = table(name);
        let h = sp.hyperplane().unwrap();
        for w in 0..sp.len() {
            assert_eq!(t.product(h, w).unwrap(), quantum_chevalley(sp, w), "{name}");
        }
    }
}

#[test]
fn hyperplane_power_identities() {
    let e6 = hyperplane_power_identity(space("E6/P1"));
    assert_eq!(e6.power, 12);
    assert_eq!(e6.q_coefficient, BigInt::from(12));
    assert!(e6.holds());
    let e7 = hyperplane_power_identity(space("E7/P7"));
    assert_eq!(e7.power, 18);
    assert_eq!(e7.q_coefficient, BigInt::from(78));
    assert!(e7.holds());
    // The 78 is the degree of the Cayley plane E6/P6, computed on its own.
    let e6p6 = Space::parse("E6/P6").unwrap();
    let deg = qhmin::algebra::schubert_degree(&e6p6, e6p6.fundamental());
    assert_eq!(lines_through_point(space("E7/P7")).degree, deg);
    assert_eq!(lines_through_point(space("E6/P1")).degree, BigInt::from(12));
}

#[test]
fn lines_through_a_point_on_small_spaces() {
    // Lines through a point of G(k,n) form P^{k-1} x P^{n-k-1} under Segre.
    let g = Space::parse("A4/P2").unwrap();
    let l = lines_through_point(&g);
    assert_eq!((l.dimension, l.degree), (3, BigInt::from(3)));
    let q = Space::parse("D5/P1").unwrap();
    assert_eq!(lines_through_point(&q).dimension, 6);
    for n in 1..5 {
        let p = Space::parse(&format!("A{n}/P1")).unwrap();
        let h = hyperplane_power_identity(&p);
        assert!(h.holds(), "P^{n}");
        assert_eq!(h.q_coefficient, BigInt::from(1));
    }
}

fn corrected(sp: &Space, t: &StructureTable<'_>, splits: &[(usize, usize)]) -> BTreeSet<(String, String)> {
    let mut out = BTreeSet::new();
    for &(a, b) in splits {
        for (u, v, q) in corrections(t, a, b).unwrap() {
            assert_eq!(q, GradedElement::q_class(1, sp.fundamental()));
            out.insert((sp.name(u).to_string(), sp.name(v).to_string()));
        }
    }
    out
}

fn pairs(list: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    list.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect()
}

#[test]
fn cayley_plane_degree_twelve_corrections() {
    let sp = space("E6/P1");
    let t = table("E6/P1");
    assert_eq!(corrected(sp, t, &[(4, 8)]), pairs(&[("s''4", "s'8"), ("s'4", "s''8")]));
    let s = GradedElement::class(sp.resolve("s'4").unwrap());
    let cube = t.power(&s, 3).unwrap();
    let mut expected = cube.q_part(0);
    expected.add_term(1, sp.fundamental(), BigInt::from(1));
    assert_eq!(cube, expected);
}

// Over every degree-18 pair there are fifteen corrections; the six in the
// splits (1,17), (5,13), (9,9) are the ones the others are reduced to.
#[test]
fn freudenthal_degree_eighteen_corrections() {
    let sp = space("E7/P7");
    let t = table("E7/P7");
    let six = pairs(&[
        ("s1", "s17"),
        ("s'5", "s'13"),
        ("s''5", "s''13"),
        ("s'9", "s'9"),
        ("s''9", "s''9"),
        ("s9", "s9"),
    ]);
    assert_eq!(corrected(sp, t, &[(1, 17), (5, 13), (9, 9)]), six);
    let all: Vec<_> = (1..=9).map(|a| (a, 18 - a)).collect();
    assert_eq!(corrected(sp, t, &all).len(), 15);
    // s2 * s16 = H * (H * s16) = H * s17 carries the same q.
    let s = |n| sp.resolve(n).unwrap();
    let h_s16 = t.product(s("H"), s("s16")).unwrap();
    let via_h = t.multiply(&h_s16, &GradedElement::class(s("H"))).unwrap();
    assert_eq!(t.product(s("s2"), s("s16")).unwrap(), via_h);
}

#[test]
fn quantum_presentations() {
    for name in ["E6/P1", "E7/P7"] {
        let sp = space(name);
        let data = load_presentation(sp).unwrap().unwrap();
        for c in verify_quantum_presentation(&data, table(name)).unwrap() {
            assert!(c.passed, "{name}: {} ({})", c.name, c.detail);
        }
    }
}

#[test]
fn quantum_relations_evaluate_to_zero() {
    let sp = space("E7/P7");
    let data = load_presentation(sp).unwrap().unwrap();
    let mut ev = Evaluator::new(table("E7/P7"), &data.quantum).unwrap();
    let r = data.quantum.parse("t^2 + 922*s*h^13 - 198*t*h^9 - 385*h^18 - q").unwrap();
    assert!(ev.eval(&r).unwrap().is_zero());
    // Without the q the classical relation fails in the quantum ring.
    let r = data.quantum.parse("t^2 + 922*s*h^13 - 198*t*h^9 - 385*h^18").unwrap();
    assert_eq!(ev.eval(&r).unwrap(), GradedElement::q_class(1, sp.fundamental()));
}

#[test]
fn giambelli_formulas_are_quantum() {
    let sp = space("E6/P1");
    let data = load_presentation(sp).unwrap().unwrap();
    for c in giambelli_quantum_check(table("E6/P1"), &data).unwrap() {
        assert!(c.passed, "{} ({})", c.name, c.detail);
    }
}

#[test]
fn higher_duality() {
    for name in ["E6/P1", "E7/P7"] {
        let checks = higher_duality_check(table(name)).unwrap();
        assert_eq!(checks.len(), space(name).d_max());
        for c in checks {
            assert!(c.passed, "{name}: {} ({})", c.name, c.detail);
        }
    }
}

#[test]
fn point_squared() {
    let e6 = space("E6/P1");
    let (got, predicted) = dmax_identity(table("E6/P1")).unwrap();
    assert_eq!(got, predicted);
    assert_eq!(got, el(e6, &[(2, "s8", 1)]));
    let e7 = space("E7/P7");
    let (got, predicted) = dmax_identity(table("E7/P7")).unwrap();
    assert_eq!(got, predicted);
    assert_eq!(got, GradedElement::q_class(3, e7.fundamental()));
}

#[test]
fn smallest_q_power() {
    for name in ["E6/P1", "E7/P7"] {
        let bad = min_power_consistency(table(name)).unwrap();
        assert!(bad.is_empty(), "{name}: {bad:?}");
    }
}

#[test]
fn nonnegativity() {
    for name in ["E6/P1", "E7/P7"] {
        let bad = negative_entries(table(name)).unwrap();
        assert!(bad.is_empty(), "{name}: {bad:?}");
    }
}

#[test]
fn quantum_products_are_homogeneous_and_commutative() {
    for name in ["E6/P1", "E7/P7"] {
        let sp = space(name);
        let t = table(name);
        for u in 0..sp.len() {
            for v in u..sp.len() {
                let p = t.product(u, v).unwrap();
                assert_eq!(p, t.product(v, u).unwrap());
                if !p.is_zero() {
                    assert_eq!(p.degree(sp), Some(sp.codim(u) + sp.codim(v)), "{name}");
                }
            }
        }
    }
}

#[test]
fn cayley_plane_associativity_is_exhaustive() {
    let sp = space("E6/P1");
    let cache = ProductCache::new(table("E6/P1")).unwrap();
    let triples = all_triples(sp, None);
    assert_eq!(triples.len(), 27 * 28 * 29 / 6);
    assert!(associativity_failures(&cache, &triples, 4).unwrap().is_empty());
}

#[test]
fn freudenthal_associativity_is_sampled() {
    let sp = space("E7/P7");
    let cache = ProductCache::new(table("E7/P7")).unwrap();
    let triples = sampled_triples(sp, 10_000, 7, &[sp.point()]);
    assert!(triples.len() >= 10_000);
    assert!(associativity_failures(&cache, &triples, 4).unwrap().is_empty());
}

#[test]
fn small_quantum_tables() {
    for name in ["A1/P1", "A2/P1", "A3/P2", "B3/P1", "C3/P3", "D4/P1", "D4/P4", "E6/P6"] {
        let sp = Space::parse(name).unwrap();
        let classical = classical_table(&sp).unwrap();
        let t = complete_quantum_table(&sp, &classical).unwrap();
        assert!(t.is_complete(), "{name}");
        assert!(negative_entries(&t).unwrap().is_empty(), "{name}");
        assert!(min_power_consistency(&t).unwrap().is_empty(), "{name}");
        for c in higher_duality_check(&t).unwrap() {
            assert!(c.passed, "{name}: {}", c.detail);
        }
        let cache = ProductCache::new(&t).unwrap();
        assert!(associativity_failures(&cache, &all_triples(&sp, None), 1).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn grassmannian_quantum_products() {
    // G(2,4): s1 * s21 = s22 + q, s2 * s2 = s22, s11 * s11 = s22, s2 * s11 = q
    // (s2 and s11 are the two codimension-2 classes).
    let sp = Space::parse("A3/P2").unwrap();
    let t = quantum_table(&sp).unwrap();
    let h = sp.hyperplane().unwrap();
    let s3 = sp.cosets().with_codim(3).next().unwrap();
    let mut expected = GradedElement::class(sp.point());
    expected.add_term(1, sp.fundamental(), BigInt::from(1));
    assert_eq!(t.product(h, s3).unwrap(), expected);
    let two: Vec<_> = sp.cosets().with_codim(2).collect();
    assert_eq!(t.product(two[0], two[1]).unwrap(), GradedElement::q_class(1, sp.fundamental()));
    assert_eq!(t.product(two[0], two[0]).unwrap(), GradedElement::class(sp.point()));
    // pt * pt = q^2 on G(2,4).
    assert_eq!(t.product(sp.point(), sp.point()).unwrap(), GradedElement::q_class(2, sp.fundamental()));
}

#[test]
fn projective_space_quantum_powers() {
    for n in 1..6 {
        let sp = Space::parse(&format!("A{n}/P1")).unwrap();
        let t = quantum_table(&sp).unwrap();
        let h = GradedElement::class(sp.hyperplane().unwrap());
        assert_eq!(t.power(&h, n + 1).unwrap(), GradedElement::q_class(1, sp.fundamental()), "P^{n}");
    }
}
