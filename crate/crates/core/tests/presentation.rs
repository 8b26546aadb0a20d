use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use qhmin::algebra::{classical_table, giambelli, GradedElement};
use qhmin::presentation::intmat::{self, determinant, hermite, mul, smith};
use qhmin::presentation::{load_presentation, verify_isomorphism, Evaluator, Generator, GradedPresentation, Matrix};
use qhmin::Space;

fn generator(name: &str, degree: usize) -> Generator {
    Generator {
        name: name.into(),
        degree,
        class: None,
    }
}

#[test]
fn projective_plane_ranks() {
    let p = GradedPresentation::new(vec![generator("h", 1)], &["h^3"]).unwrap();
    let ranks: Vec<usize> = p.rank_sequence(5).unwrap().iter().map(|s| s.rank).collect();
    assert_eq!(ranks, vec![1, 1, 1, 0, 0, 0]);
}

#[test]
fn torsion_is_detected() {
    let p = GradedPresentation::new(vec![generator("h", 1), generator("s", 1)], &["2*h - 4*s", "h^2"]).unwrap();
    let s = p.degree_slice(1).unwrap();
    assert_eq!(s.rank, 1);
    assert!(!s.free);
    assert_eq!(s.torsion, vec![BigInt::from(2)]);
}

#[test]
fn inhomogeneous_relations_are_rejected() {
    assert!(GradedPresentation::new(vec![generator("h", 1), generator("s", 4)], &["s - h^2"]).is_err());
}

#[test]
fn cayley_plane_slices() {
    let sp = Space::parse("E6/P1").unwrap();
    let pres = load_presentation(&sp).unwrap().unwrap().classical;
    let s0 = pres.degree_slice(0).unwrap();
    assert_eq!(s0.rank, 1);
    let s9 = pres.degree_slice(9).unwrap();
    assert_eq!(s9.monomials.len(), 3);
    assert_eq!(s9.relation_rows.len(), 1);
    let mut row: Vec<i64> = s9.relation_rows[0].iter().map(|x| i64::try_from(x).unwrap()).collect();
    row.sort_unstable();
    assert_eq!(row, vec![-6, 2, 3]);
    assert!(s9.free);
    assert_eq!(s9.rank, 2);
    // Degree 17: five monomials, five relation multiples, determinant one.
    let s17 = pres.degree_slice(17).unwrap();
    assert_eq!(s17.monomials.len(), 5);
    assert_eq!(s17.relation_rows.len(), 5);
    assert_eq!(determinant(&s17.relation_rows).abs(), BigInt::one());
    assert_eq!(s17.rank, 0);
}

#[test]
fn rank_sequences_match_betti_numbers() {
    for name in ["E6/P1", "E7/P7"] {
        let sp = Space::parse(name).unwrap();
        let pres = load_presentation(&sp).unwrap().unwrap().classical;
        let slices = pres.rank_sequence(sp.dimension() + 1).unwrap();
        let ranks: Vec<usize> = slices.iter().map(|s| s.rank).collect();
        let mut betti = sp.cosets().betti();
        betti.push(0);
        assert_eq!(ranks, betti, "{name}");
        assert!(slices.iter().all(|s| s.free), "{name}");
        assert_eq!(ranks.iter().sum::<usize>(), sp.len());
    }
}

#[test]
fn freudenthal_top_slice() {
    let sp = Space::parse("E7/P7").unwrap();
    let pres = load_presentation(&sp).unwrap().unwrap().classical;
    let s28 = pres.degree_slice(28).unwrap();
    assert_eq!(s28.rank, 0);
    assert_eq!(s28.determinant.map(|d| d.abs()), Some(BigInt::one()));
}

#[test]
fn classical_presentations_are_isomorphisms() {
    for name in ["E6/P1", "E7/P7"] {
        let sp = Space::parse(name).unwrap();
        let data = load_presentation(&sp).unwrap().unwrap();
        let t = classical_table(&sp).unwrap();
        for c in verify_isomorphism(&data.classical, &t, &data.giambelli).unwrap() {
            assert!(c.passed, "{name}: {} ({})", c.name, c.detail);
        }
    }
}

#[test]
fn relations_hold_in_the_tables() {
    let sp = Space::parse("E6/P1").unwrap();
    let data = load_presentation(&sp).unwrap().unwrap();
    let t = classical_table(&sp).unwrap();
    let mut ev = Evaluator::new(&t, &data.classical).unwrap();
    for r in ["3*h*s^2 - 6*h^5*s + 2*h^9", "s^3 - 12*h^8*s + 5*h^12"] {
        assert!(ev.eval(&data.classical.parse(r).unwrap()).unwrap().is_zero(), "{r}");
    }
    let sp = Space::parse("E7/P7").unwrap();
    let data = load_presentation(&sp).unwrap().unwrap();
    let t = classical_table(&sp).unwrap();
    let mut ev = Evaluator::new(&t, &data.classical).unwrap();
    for r in [
        "s^2 - 10*s*h^5 + 2*t*h + 4*h^10",
        "2*s*t - 12*s*h^9 + 2*t*h^5 + 5*h^14",
        "t^2 + 922*s*h^13 - 198*t*h^9 - 385*h^18",
    ] {
        assert!(ev.eval(&data.classical.parse(r).unwrap()).unwrap().is_zero(), "{r}");
    }
}

#[test]
fn every_class_has_an_integral_formula() {
    for name in ["E6/P1", "E7/P7"] {
        let sp = Space::parse(name).unwrap();
        let data = load_presentation(&sp).unwrap().unwrap();
        let t = classical_table(&sp).unwrap();
        let formulas = giambelli(&t, &data.classical).unwrap();
        assert_eq!(formulas.len(), sp.len());
    }
}

// The usual printed formula for the point class of the Cayley plane does
// not evaluate to it; the shipped one does.
#[test]
fn cayley_plane_point_formula() {
    let sp = Space::parse("E6/P1").unwrap();
    let data = load_presentation(&sp).unwrap().unwrap();
    let t = classical_table(&sp).unwrap();
    let mut ev = Evaluator::new(&t, &data.classical).unwrap();
    let pt = sp.point();
    let printed = data.classical.parse("s^4 - 2*h^4*s^3 - 10*h^8*s^2 + h^16").unwrap();
    assert_eq!(ev.eval(&printed).unwrap(), GradedElement::class(pt).scaled(&BigInt::from(-71)));
    let shipped = &data.giambelli.iter().find(|(w, _)| *w == pt).unwrap().1;
    assert_eq!(ev.eval(shipped).unwrap(), GradedElement::class(pt));
}

fn matrix(rows: &[Vec<i64>]) -> Matrix {
    intmat::from_i64(rows)
}

#[test]
fn smith_of_a_known_matrix() {
    let a = matrix(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith(&a).unwrap();
    assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
}

fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(m, n)| prop::collection::vec(prop::collection::vec(-9i64..10, n), m))
}

proptest! {
    #[test]
    fn smith_reconstructs(a in arb_matrix()) {
        let a = matrix(&a);
        let s = smith(&a).unwrap();
        prop_assert_eq!(mul(&mul(&s.u, &a), &s.v), s.d.clone());
        prop_assert_eq!(determinant(&s.u).abs(), BigInt::one());
        prop_assert_eq!(determinant(&s.v).abs(), BigInt::one());
        for (i, row) in s.d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j {
                    prop_assert!(x.is_zero());
                }
            }
        }
        for w in s.diagonal.windows(2) {
            prop_assert!(!w[0].is_negative());
            if !w[0].is_zero() {
                prop_assert!((&w[1] % &w[0]).is_zero());
            } else {
                prop_assert!(w[1].is_zero());
            }
        }
    }

    #[test]
    fn hermite_is_a_unimodular_echelon_form(a in arb_matrix()) {
        let a = matrix(&a);
        let (h, u) = hermite(&a);
        prop_assert_eq!(mul(&u, &a), h.clone());
        prop_assert_eq!(determinant(&u).abs(), BigInt::one());
        let mut last: Option<usize> = None;
        for row in &h {
            match row.iter().position(|x| !x.is_zero()) {
                Some(p) => {
                    prop_assert!(last.is_none_or(|l| p > l));
                    prop_assert!(row[p].is_positive());
                    last = Some(p);
                }
                None => last = Some(usize::MAX - 1),
            }
        }
    }
}
