//! One line per acceptance criterion. Exits non-zero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use qhmin::algebra::{classical_table, complete_table, load_seeds, schubert_degree, GradedElement, StructureTable};
use qhmin::presentation::intmat::determinant;
use qhmin::presentation::{load_presentation, verify_isomorphism, verify_quantum_presentation, Evaluator};
use qhmin::quantum::{
    complete_quantum_table, corrections, dmax_identity, higher_duality_check, hyperplane_power_identity,
    lines_through_point, min_power_consistency, negative_entries, quantum_chevalley,
};
use qhmin::quiver::Quiver;
use qhmin::verify::{all_triples, associativity_failures, sampled_triples, ProductCache};
use qhmin::{Error, Space};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Ctx) -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn ok<T, E: std::fmt::Display>(r: std::result::Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

struct Ctx {
    e6: Space,
    e7: Space,
}

impl Ctx {
    fn quantum<'a>(&self, sp: &'a Space) -> Result<StructureTable<'a>, String> {
        let classical = ok(classical_table(sp))?;
        ok(complete_quantum_table(sp, &classical))
    }
}

fn enumeration(c: &Ctx) -> Outcome {
    ensure(c.e6.len() == 27 && c.e7.len() == 56, "class counts")?;
    for sp in [&c.e6, &c.e7] {
        let b = sp.cosets().betti();
        ensure(b.iter().eq(b.iter().rev()), format!("{} Betti numbers not symmetric", sp.label()))?;
    }
    let b = c.e6.cosets().betti();
    ensure(b == [1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1], format!("E6 Betti numbers {b:?}"))?;
    Ok("27 and 56 classes, symmetric Betti numbers".into())
}

fn degrees(c: &Ctx) -> Outcome {
    let d = schubert_degree(&c.e6, c.e6.fundamental());
    ensure(d == BigInt::from(78), format!("deg E6/P1 = {d}"))?;
    let g = ok(Space::parse("A3/P2"))?;
    ensure(schubert_degree(&g, g.fundamental()) == BigInt::from(2), "deg G(2,4)")?;
    for n in 1..8 {
        let p = ok(Space::parse(&format!("A{n}/P1")))?;
        ensure(schubert_degree(&p, p.fundamental()).is_one(), format!("deg P^{n}"))?;
    }
    Ok("78, 2, 1".into())
}

fn presentations(c: &Ctx) -> Outcome {
    for (sp, top) in [(&c.e6, 17), (&c.e7, 28)] {
        let pres = ok(load_presentation(sp))?.ok_or("no presentation")?.classical;
        let slices = ok(pres.rank_sequence(sp.dimension()))?;
        let ranks: Vec<usize> = slices.iter().map(|s| s.rank).collect();
        ensure(ranks == sp.cosets().betti(), format!("{} ranks {ranks:?}", sp.label()))?;
        ensure(slices.iter().all(|s| s.free), format!("{} has torsion", sp.label()))?;
        let s = ok(pres.degree_slice(top))?;
        ensure(s.rank == 0, format!("{} degree {top} rank {}", sp.label(), s.rank))?;
        let det = s.determinant.clone().ok_or(format!("{} degree {top}: no square system", sp.label()))?;
        ensure(det.abs().is_one(), format!("{} degree {top} determinant {det}", sp.label()))?;
        if s.relation_rows.len() == s.monomials.len() {
            ensure(determinant(&s.relation_rows).abs().is_one(), "raw relation system")?;
        }
    }
    Ok("ranks sum to 27 and 56, free, unimodular top slices".into())
}

fn relations(c: &Ctx) -> Outcome {
    for sp in [&c.e6, &c.e7] {
        let data = ok(load_presentation(sp))?.ok_or("no presentation")?;
        let t = ok(classical_table(sp))?;
        let mut ev = ok(Evaluator::new(&t, &data.classical))?;
        for r in data.classical.relations() {
            ensure(ok(ev.eval(r))?.is_zero(), format!("{}: {r} is not zero", sp.label()))?;
        }
        for check in ok(verify_isomorphism(&data.classical, &t, &data.giambelli))? {
            ensure(check.passed, format!("{}: {}", sp.label(), check.name))?;
        }
    }
    Ok("2 relations on E6, 3 on E7".into())
}

fn completion(c: &Ctx) -> Outcome {
    let sp = &c.e7;
    let seeds = ok(load_seeds(sp))?;
    ensure(seeds.len() == 15, format!("{} seeds", seeds.len()))?;
    let full = ok(complete_table(sp, &seeds))?;
    ensure(full.is_complete(), "incomplete with all seeds")?;
    for s in &seeds {
        ensure(ok(full.product(s.u, s.v))? == s.value, format!("{} not reproduced", s.citation))?;
    }
    let (mut again, mut open) = (0, 0);
    for i in 0..seeds.len() {
        let mut rest = seeds.clone();
        let dropped = rest.remove(i);
        let t = ok(complete_table(sp, &rest))?;
        match t.product(dropped.u, dropped.v) {
            Ok(p) if p == dropped.value => again += 1,
            Ok(p) => return Err(format!("{} re-derived as {}", dropped.citation, p.render(sp))),
            Err(Error::Partial(_)) => open += 1,
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(format!("{again} re-derived, {open} underdetermined"))
}

fn chevalley(c: &Ctx) -> Outcome {
    let sp = &c.e6;
    let s = |n: &str| sp.resolve(n).map_err(|e| e.to_string());
    let mut expect = GradedElement::class(s("s13")?);
    ensure(quantum_chevalley(sp, s("s'12")?) == expect, "H*s'12")?;
    expect.add_term(1, s("s1")?, BigInt::one());
    ensure(quantum_chevalley(sp, s("s''12")?) == expect, "H*s''12")?;
    let t1 = sp.geometry(1).map_err(|e| e.to_string())?.t;
    let domain: Vec<_> = (0..sp.len()).filter(|&w| sp.one_dual(w).is_some()).collect();
    let interval: Vec<_> = (0..sp.len()).filter(|&w| sp.contained(w, t1)).collect();
    ensure(domain == interval, "1-dual domain")?;
    Ok(format!("domain is [pt, {}]", sp.name(t1)))
}

fn hyperplane(c: &Ctx) -> Outcome {
    let e6 = hyperplane_power_identity(&c.e6);
    ensure(e6.holds() && e6.q_coefficient == BigInt::from(12), "E6")?;
    let e7 = hyperplane_power_identity(&c.e7);
    let p6 = ok(Space::parse("E6/P6"))?;
    let deg = schubert_degree(&p6, p6.fundamental());
    ensure(lines_through_point(&c.e7).degree == deg, "lines through a point")?;
    ensure(e7.holds() && e7.q_coefficient == deg, format!("E7 gives {}", e7.q_coefficient))?;
    Ok(format!("12q and {deg}q"))
}

fn corrected(t: &StructureTable<'_>, splits: &[(usize, usize)]) -> Result<BTreeSet<(String, String)>, String> {
    let sp = t.space();
    let mut out = BTreeSet::new();
    for &(a, b) in splits {
        for (u, v, q) in ok(corrections(t, a, b))? {
            ensure(q == GradedElement::q_class(1, sp.fundamental()), format!("{} * {}", sp.name(u), sp.name(v)))?;
            out.insert((sp.name(u).to_string(), sp.name(v).to_string()));
        }
    }
    Ok(out)
}

fn pairs(list: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    list.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect()
}

fn e6_corrections(c: &Ctx) -> Outcome {
    let t = c.quantum(&c.e6)?;
    ensure(corrected(&t, &[(4, 8)])? == pairs(&[("s''4", "s'8"), ("s'4", "s''8")]), "degree (4,8)")?;
    let s = GradedElement::class(ok(c.e6.resolve("s'4"))?);
    let cube = ok(t.power(&s, 3))?;
    let mut expected = cube.q_part(0);
    expected.add_term(1, c.e6.fundamental(), BigInt::one());
    ensure(cube == expected, "s'4 cubed")?;
    Ok("s'4*s''8 and s''4*s'8".into())
}

fn e7_corrections(c: &Ctx) -> Outcome {
    let t = c.quantum(&c.e7)?;
    let six = pairs(&[
        ("s1", "s17"),
        ("s'5", "s'13"),
        ("s''5", "s''13"),
        ("s9", "s9"),
        ("s'9", "s'9"),
        ("s''9", "s''9"),
    ]);
    let got = corrected(&t, &[(1, 17), (5, 13), (9, 9)])?;
    ensure(got == six, format!("{got:?}"))?;
    Ok("six products, each +q".into())
}

fn quantum_presentations(c: &Ctx) -> Outcome {
    for sp in [&c.e6, &c.e7] {
        let data = ok(load_presentation(sp))?.ok_or("no presentation")?;
        let t = c.quantum(sp)?;
        for check in ok(verify_quantum_presentation(&data, &t))? {
            ensure(check.passed, format!("{}: {} ({})", sp.label(), check.name, check.detail))?;
        }
    }
    Ok("E6 and E7".into())
}

fn higher_duality(c: &Ctx) -> Outcome {
    for sp in [&c.e6, &c.e7] {
        let t = c.quantum(sp)?;
        for check in ok(higher_duality_check(&t))? {
            ensure(check.passed, format!("{}: {}", sp.label(), check.detail))?;
        }
        let (got, predicted) = ok(dmax_identity(&t))?;
        ensure(got == predicted, format!("{}: pt*pt = {}", sp.label(), got.render(sp)))?;
    }
    let t = c.quantum(&c.e6)?;
    let pt = c.e6.point();
    ensure(ok(t.product(pt, pt))? == GradedElement::q_class(2, ok(c.e6.resolve("s8"))?), "E6 pt*pt")?;
    let t = c.quantum(&c.e7)?;
    let pt = c.e7.point();
    ensure(ok(t.product(pt, pt))? == GradedElement::q_class(3, c.e7.fundamental()), "E7 pt*pt")?;
    Ok("d <= d_max on E6 and E7".into())
}

fn smallest(c: &Ctx) -> Outcome {
    for sp in [&c.e6, &c.e7] {
        let bad = ok(min_power_consistency(&c.quantum(sp)?))?;
        ensure(bad.is_empty(), format!("{}: {} mismatches", sp.label(), bad.len()))?;
    }
    Ok("27x27 and 56x56 pairs".into())
}

fn properties(c: &Ctx) -> Outcome {
    let t = c.quantum(&c.e6)?;
    let cache = ok(ProductCache::new(&t))?;
    ensure(ok(associativity_failures(&cache, &all_triples(&c.e6, None), 4))?.is_empty(), "E6 associativity")?;
    let t7 = c.quantum(&c.e7)?;
    let cache = ok(ProductCache::new(&t7))?;
    let triples = sampled_triples(&c.e7, 10_000, 1, &[]);
    ensure(ok(associativity_failures(&cache, &triples, 4))?.is_empty(), "E7 associativity")?;
    for table in [&t, &t7] {
        let sp = table.space();
        ensure(ok(negative_entries(table))?.is_empty(), format!("{} negative entries", sp.label()))?;
        for u in 0..sp.len() {
            for v in 0..sp.len() {
                let p = ok(table.product(u, sp.dual(v)))?;
                let want = if u == v { BigInt::one() } else { BigInt::from(0) };
                ensure(p.coefficient(0, sp.point()) == want, format!("{} pairing", sp.label()))?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in [
        "A3/P2", "A4/P2", "A5/P3", "B3/P1", "B4/P1", "C3/P3", "C4/P4", "D4/P1", "D5/P1", "D5/P5", "D6/P6", "E6/P1",
        "E6/P6", "E7/P7",
    ] {
        let sp = ok(Space::parse(name))?;
        let iota = sp.root_system().weyl_involution();
        for w in 0..sp.len() {
            let q = sp.schubert_quiver().quiver_dual(w);
            ensure(q == sp.cosets().poincare_dual(iota, w) && q == sp.dual(w), format!("{name} quiver dual"))?;
        }
        let rd = sp.root_system().data();
        let q0 = sp.schubert_quiver().quiver();
        let reference: BTreeSet<_> = q0.labelled_arrows().into_iter().collect();
        let mut word = q0.source_word().to_vec();
        for _ in 0..100 {
            let spots: Vec<usize> = (0..word.len().saturating_sub(1))
                .filter(|&i| word[i] != word[i + 1] && rd.cartan()[word[i]][word[i + 1]] == 0)
                .collect();
            if spots.is_empty() {
                break;
            }
            let i = spots[rng.gen_range(0..spots.len())];
            word.swap(i, i + 1);
            let q = ok(Quiver::build(rd, &word))?;
            let arrows: BTreeSet<_> = q.labelled_arrows().into_iter().collect();
            ensure(arrows == reference, format!("{name}: quiver changed under a commuting swap"))?;
        }
    }
    Ok(format!("{} E6 triples, {} E7 triples", all_triples(&c.e6, None).len(), triples.len()))
}

fn main() -> ExitCode {
    let ctx = Ctx {
        e6: Space::parse("E6/P1").expect("E6/P1"),
        e7: Space::parse("E7/P7").expect("E7/P7"),
    };
    let criteria: [Criterion; 13] = [
        ("enumeration", enumeration),
        ("degrees", degrees),
        ("classical presentations", presentations),
        ("relations", relations),
        ("completion fidelity", completion),
        ("quantum Chevalley", chevalley),
        ("hyperplane power", hyperplane),
        ("E6 degree-12 corrections", e6_corrections),
        ("E7 degree-18 corrections", e7_corrections),
        ("quantum presentations", quantum_presentations),
        ("higher duality", higher_duality),
        ("smallest q-power", smallest),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(|| f(&ctx))).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
