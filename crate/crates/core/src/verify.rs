//! Verification suites over a space, with a JSON report.

use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{classical_table, schubert_degree, GradedElement, StructureTable};
use crate::error::{Error, Result};
use crate::presentation::{load_presentation, verify_isomorphism, verify_quantum_presentation, Check};
use crate::quantum;
use crate::space::Space;
use crate::weyl::ClassId;

pub use crate::export::SCHEMA_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Classical,
    Quantum,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(Suite::Classical),
            "quantum" => Ok(Suite::Quantum),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite `{s}` (classical, quantum, all)"))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub space: String,
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Every product `σ_u * σ_v`, indexed `[u][v]`.
pub struct ProductCache {
    rows: Vec<Vec<GradedElement>>,
}

impl ProductCache {
    pub fn new(table: &StructureTable<'_>) -> Result<Self> {
        let n = table.space().len();
        let mut rows = vec![vec![GradedElement::zero(); n]; n];
        for u in 0..n {
            for v in u..n {
                let p = table.product(u, v)?;
                rows[v][u] = p.clone();
                rows[u][v] = p;
            }
        }
        Ok(ProductCache { rows })
    }

    pub fn get(&self, u: ClassId, v: ClassId) -> &GradedElement {
        &self.rows[u][v]
    }

    /// `element * σ_c`.
    pub fn times(&self, element: &GradedElement, c: ClassId) -> GradedElement {
        let mut out = GradedElement::zero();
        for (d, w, k) in element.terms() {
            out.add_scaled(&self.rows[w][c].shift_q(d), k);
        }
        out
    }

    /// Whether `(σ_a * σ_b) * σ_c = σ_a * (σ_b * σ_c)`.
    pub fn associative(&self, a: ClassId, b: ClassId, c: ClassId) -> bool {
        let left = self.times(self.get(a, b), c);
        let right = self.times(self.get(b, c), a);
        left == right
    }
}

/// Triples failing associativity, checked in parallel on `jobs` threads.
pub fn associativity_failures(
    cache: &ProductCache,
    triples: &[(ClassId, ClassId, ClassId)],
    jobs: usize,
) -> Result<Vec<(ClassId, ClassId, ClassId)>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let mut bad: Vec<_> = pool.install(|| {
        triples
            .par_iter()
            .filter(|&&(a, b, c)| !cache.associative(a, b, c))
            .copied()
            .collect()
    });
    bad.sort_unstable();
    Ok(bad)
}

/// All triples `a ≤ b ≤ c`, with `codim` sum at most `limit` if given.
pub fn all_triples(space: &Space, limit: Option<usize>) -> Vec<(ClassId, ClassId, ClassId)> {
    let n = space.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let s = space.codim(a) + space.codim(b) + space.codim(c);
                if limit.is_none_or(|l| s <= l) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// `count` random triples from a fixed seed, plus every triple containing
/// one of `special`.
pub fn sampled_triples(
    space: &Space,
    count: usize,
    seed: u64,
    special: &[ClassId],
) -> Vec<(ClassId, ClassId, ClassId)> {
    let n = space.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<_> = (0..count)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    for &s in special {
        for b in 0..n {
            for c in b..n {
                out.push((s, b, c));
            }
        }
    }
    out
}

/// Exhaustive up to 27 classes, sampled above.
const EXHAUSTIVE_LIMIT: usize = 27;
const SAMPLES: usize = 10_000;
const SEED: u64 = 0x5eed_cafe;

fn names(space: &Space, ws: &[(ClassId, ClassId, ClassId)]) -> String {
    ws.iter()
        .take(10)
        .map(|&(a, b, c)| format!("({}, {}, {})", space.name(a), space.name(b), space.name(c)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn combinatorial_checks(space: &Space) -> Vec<Check> {
    let mut out = Vec::new();
    let betti = space.cosets().betti();
    let symmetric = betti.iter().eq(betti.iter().rev());
    out.push(Check::new(
        "Betti numbers symmetric",
        symmetric,
        format!("{} classes, Betti numbers {betti:?}", space.len()),
    ));
    let bad: Vec<String> = (0..space.len())
        .filter(|&w| space.schubert_quiver().quiver_dual(w) != space.dual(w))
        .map(|w| space.name(w).to_string())
        .collect();
    out.push(Check::new(
        "quiver duality matches Weyl-group duality",
        bad.is_empty(),
        if bad.is_empty() {
            "all classes".to_string()
        } else {
            bad.join(", ")
        },
    ));
    let bad: Vec<String> = (0..space.len())
        .filter(|&w| {
            let mut peaks = space.schubert_quiver().peak_removals(w);
            peaks.sort_unstable();
            let covers: Vec<ClassId> = space.chevalley(w).into_iter().map(|c| c.0).collect();
            peaks != covers
        })
        .map(|w| space.name(w).to_string())
        .collect();
    out.push(Check::new(
        "peak removal matches Hasse covers",
        bad.is_empty(),
        if bad.is_empty() {
            "all classes".to_string()
        } else {
            bad.join(", ")
        },
    ));
    let top = space.fundamental();
    let chains = space.cosets().schubert_degree(top);
    let iterated = schubert_degree(space, top);
    out.push(Check::new(
        "degree by chains equals degree by Chevalley",
        chains == iterated,
        format!("deg X = {iterated}"),
    ));
    out
}

fn table_checks(table: &StructureTable<'_>, cache: &ProductCache, jobs: usize) -> Result<Vec<Check>> {
    let sp = table.space();
    let quantum = table.is_quantum();
    let mut out = Vec::new();
    let pt = sp.point();
    let mut bad = Vec::new();
    for u in 0..sp.len() {
        for v in 0..sp.len() {
            let c = cache.get(u, v).coefficient(0, pt);
            let want = BigInt::from(u8::from(v == sp.dual(u)));
            if c != want {
                bad.push(format!("{} * {}", sp.name(u), sp.name(v)));
            }
        }
    }
    out.push(Check::new(
        "Poincaré pairing is orthonormal",
        bad.is_empty(),
        if bad.is_empty() {
            "all pairs".to_string()
        } else {
            bad.join(", ")
        },
    ));
    let negatives = quantum::negative_entries(table)?;
    out.push(Check::new(
        "all structure constants nonnegative",
        negatives.is_empty(),
        negatives.join("; "),
    ));
    let (triples, how) = if sp.len() <= EXHAUSTIVE_LIMIT {
        let limit = (!quantum).then_some(sp.dimension());
        (all_triples(sp, limit), "exhaustive".to_string())
    } else {
        let mut special: Vec<ClassId> = sp.hyperplane().into_iter().collect();
        if let Some(p) = load_presentation(sp)? {
            for g in p.classical.generators() {
                if let Some(c) = &g.class {
                    special.push(sp.resolve(c)?);
                }
            }
        }
        special.sort_unstable();
        special.dedup();
        (
            sampled_triples(sp, SAMPLES, SEED, &special),
            format!("{SAMPLES} sampled triples plus all triples with H or a generator"),
        )
    };
    let bad = associativity_failures(cache, &triples, jobs)?;
    out.push(Check::new(
        if quantum {
            "quantum associativity"
        } else {
            "associativity"
        },
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} triples, {how}", triples.len())
        } else {
            format!("{} failures: {}", bad.len(), names(sp, &bad))
        },
    ));
    Ok(out)
}

fn partial_check(table: &StructureTable<'_>, what: &str) -> Check {
    let sp = table.space();
    let pairs = table.underdetermined_pairs();
    let listed: Vec<String> = pairs
        .iter()
        .take(20)
        .map(|&(u, v)| format!("{} * {}", sp.name(u), sp.name(v)))
        .collect();
    Check::new(
        format!("{what} table complete"),
        pairs.is_empty(),
        if pairs.is_empty() {
            "every structure constant determined".to_string()
        } else {
            format!("{} undetermined pairs: {}", pairs.len(), listed.join(", "))
        },
    )
}

/// Runs a suite. Errors are only returned for failures to run at all;
/// contradictions found while completing tables become failed checks.
pub fn verify(space: &Space, suite: Suite, jobs: usize) -> Result<Report> {
    let mut checks = combinatorial_checks(space);
    let classical = match classical_table(space) {
        Ok(t) => Some(t),
        Err(Error::Contradiction(m)) => {
            checks.push(Check::new("classical table consistent", false, m));
            None
        }
        Err(e) => return Err(e),
    };
    let presentation = load_presentation(space)?;
    if let Some(table) = classical.as_ref() {
        checks.push(partial_check(table, "classical"));
        if table.is_complete() && suite != Suite::Quantum {
            let cache = ProductCache::new(table)?;
            checks.extend(table_checks(table, &cache, jobs)?);
            if let Some(p) = &presentation {
                checks.extend(verify_isomorphism(&p.classical, table, &p.giambelli)?);
            }
        }
    }
    if suite != Suite::Classical {
        if let Some(table) = classical.as_ref().filter(|t| t.is_complete()) {
            let h = quantum::hyperplane_power_identity(space);
            checks.push(Check::new(
                format!("H^{} correction is deg(F_o)·q", h.power),
                h.holds(),
                format!("correction {}, deg(F_o) = {}", h.correction.render(space), h.expected),
            ));
            match quantum::complete_quantum_table(space, table) {
                Ok(qt) => {
                    checks.push(partial_check(&qt, "quantum"));
                    if qt.is_complete() {
                        checks.extend(quantum_checks(&qt, table, jobs)?);
                        if let Some(p) = &presentation {
                            checks.extend(verify_quantum_presentation(p, &qt)?);
                            checks.extend(quantum::giambelli_quantum_check(&qt, p)?);
                        }
                    }
                }
                Err(Error::Contradiction(m)) => {
                    checks.push(Check::new("quantum table consistent", false, m));
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        space: space.label(),
        suite,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn quantum_checks(
    qt: &StructureTable<'_>,
    classical: &StructureTable<'_>,
    jobs: usize,
) -> Result<Vec<Check>> {
    let sp = qt.space();
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for u in 0..sp.len() {
        for v in u..sp.len() {
            if qt.product(u, v)?.q_part(0) != classical.product(u, v)? {
                bad.push(format!("{} * {}", sp.name(u), sp.name(v)));
            }
        }
    }
    out.push(Check::new(
        "q^0 slice equals the classical table",
        bad.is_empty(),
        bad.join(", "),
    ));
    let cache = ProductCache::new(qt)?;
    out.extend(table_checks(qt, &cache, jobs)?);
    let (got, want) = quantum::dmax_identity(qt)?;
    out.push(Check::new(
        "[pt] * [pt] = q^dmax [Y_dmax]",
        got == want,
        format!("{} (expected {})", got.render(sp), want.render(sp)),
    ));
    let mism = quantum::min_power_consistency(qt)?;
    out.push(Check::new(
        "smallest q-power matches the quiver criterion",
        mism.is_empty(),
        if mism.is_empty() {
            format!("{} pairs", sp.len() * (sp.len() + 1) / 2)
        } else {
            mism.iter()
                .take(10)
                .map(|m| format!("{} * {}: {} vs {:?}", m.u, m.v, m.predicted, m.table))
                .collect::<Vec<_>>()
                .join("; ")
        },
    ));
    out.extend(quantum::higher_duality_check(qt)?);
    let top = sp.fundamental();
    let unit = (0..sp.len()).all(|w| cache.get(top, w) == &GradedElement::class(w));
    out.push(Check::new("[X] is the unit", unit, ""));
    Ok(out)
}
