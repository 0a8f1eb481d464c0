//! Seeded property suites over the corpus. Every suite counts the
//! assertions it made and keeps the first counterexample.

use std::sync::Arc;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::category::{
    is_largest_ideal, nilpotent_trace_check, numerical_ideal, orbit_category, validate_ideal, verify_prop31,
    conservativity_check, OrbitSpec, PresentedCategory,
};
use crate::complexes::ProjComplex;
use crate::error::{Error, Result};
use crate::fixtures::{synthetic, Corpus};
use crate::hochschild::{hh_complex, Coefficients, HhRequest, Method, DEFAULT_BAR_CUTOFF};
use crate::linalg::{format_rational, is_zero_vec, jacobson_radical, rat, zero, Rational};
use crate::motives::{
    categorical_trace, compose, explicit_intersection_number, export_presented_category, external_tensor,
    intersection_number, is_numerically_trivial, Correspondence, MotiveAlgebra, NcMotive,
};
use crate::quiver::standard_resolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Ideal,
    Largest,
    TraceAgreement,
    Prop31,
    Conservativity,
    Nilpotent,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Ideal,
        Suite::Largest,
        Suite::TraceAgreement,
        Suite::Prop31,
        Suite::Conservativity,
        Suite::Nilpotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ideal => "ideal",
            Suite::Largest => "largest",
            Suite::TraceAgreement => "trace-agreement",
            Suite::Prop31 => "prop31",
            Suite::Conservativity => "conservativity",
            Suite::Nilpotent => "nilpotent",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub assertions: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub details: Value,
}

/// Assertion counter that remembers the first failure.
#[derive(Default)]
struct Tally {
    assertions: usize,
    counterexample: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.assertions += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
    }

    fn report(self, suite: Suite, seed: u64, details: Value) -> SuiteReport {
        SuiteReport {
            suite: suite.name().into(),
            seed,
            assertions: self.assertions,
            passed: self.counterexample.is_none(),
            counterexample: self.counterexample,
            details,
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-3..=3))
}

fn random_vec(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| small(rng)).collect()
}

/// A random bounded complex from `A` to `B`: a shifted projective, or for
/// endomorphisms possibly a shifted standard resolution, sometimes coned.
pub fn random_complex(rng: &mut impl Rng, a: &MotiveAlgebra, b: &MotiveAlgebra) -> ProjComplex {
    let (pa, pb) = (
        a.path_algebra().expect("path algebra").clone(),
        b.path_algebra().expect("path algebra").clone(),
    );
    let shift = rng.gen_range(-1..=1);
    let base = if a == b && rng.gen_bool(0.4) {
        standard_resolution(&pa).shift(shift)
    } else {
        let (v, u) = (rng.gen_range(0..a.vertex_count()), rng.gen_range(0..b.vertex_count()));
        ProjComplex::single(pa, pb, v, u, shift)
    };
    if rng.gen_bool(0.2) {
        base.cone_of_identity()
    } else {
        base
    }
}

/// `Σ aᵢ Xᵢ` with one to three random complexes and small coefficients.
pub fn random_correspondence(rng: &mut impl Rng, a: &Arc<MotiveAlgebra>, b: &Arc<MotiveAlgebra>) -> Correspondence {
    let n = rng.gen_range(1..=3);
    let terms = (0..n).map(|_| (small(rng), random_complex(rng, a, b))).collect();
    Correspondence::from_terms(a.clone(), b.clone(), terms).expect("complexes over the given algebras")
}

/// `Σ aᵢ χ(HH(A; Xᵢ))` along one method.
pub fn hh_value(z: &Correspondence, method: Method) -> Result<Rational> {
    let a = z
        .source
        .path_algebra()
        .ok_or_else(|| Error::Schema(format!("{}: no quiver presentation", z.source.name)))?;
    let terms = z
        .terms
        .as_ref()
        .ok_or_else(|| Error::Schema(format!("{}: class-only correspondence", z.source.name)))?;
    let mut total = zero();
    for (c, x) in terms {
        if c.is_zero() {
            continue;
        }
        let req = HhRequest {
            algebra: a.clone(),
            coefficients: Coefficients::Complex(x.clone()),
            method,
        };
        total += c * rat(hh_complex(&req)?.euler_char());
    }
    Ok(total)
}

/// `[(ℚ, id)]` alone, or with `(A, id)` for a nontrivial `A`.
pub fn nchow_objects(a: &Arc<MotiveAlgebra>) -> Vec<NcMotive> {
    let unit = NcMotive::of_algebra(Arc::new(MotiveAlgebra::ground()));
    if a.is_ground() {
        vec![unit]
    } else {
        vec![unit, NcMotive::of_algebra(a.clone())]
    }
}

/// Exported NChow categories, one per corpus algebra.
pub fn nchow_categories(corpus: &Corpus) -> Result<Vec<PresentedCategory>> {
    corpus
        .algebras()?
        .iter()
        .map(|a| export_presented_category(&format!("nchow:{}", a.name), &nchow_objects(a)))
        .collect()
}

/// Synthetic corpus categories followed by the NChow exports.
pub fn all_categories(corpus: &Corpus) -> Result<Vec<PresentedCategory>> {
    let mut cats = corpus.categories()?;
    cats.extend(nchow_categories(corpus)?);
    Ok(cats)
}

/// Cross-checks `categorical_trace` against the standard and bar
/// Hochschild complexes on random endo-correspondences of every algebra.
pub fn trace_agreement(corpus: &Corpus, seed: u64, per_algebra: usize) -> Result<SuiteReport> {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    let mut per = serde_json::Map::new();
    for a in corpus.algebras()? {
        let mut values = Vec::new();
        // the identity first, then random ones
        let mut samples = vec![Correspondence::identity(a.clone())];
        samples.extend((0..per_algebra).map(|_| random_correspondence(&mut rng, &a, &a)));
        for (k, z) in samples.iter().enumerate() {
            let tr = categorical_trace(z)?;
            let std = hh_value(z, Method::Standard)?;
            let bar = hh_value(z, Method::Bar { cutoff: DEFAULT_BAR_CUTOFF })?;
            t.check(tr == std && tr == bar, || {
                format!("{} sample {k}: trace {tr}, standard {std}, bar {bar}", a.name)
            });
            values.push(format_rational(&tr));
        }
        per.insert(a.name.clone(), json!({ "identity_trace": values[0], "samples": values.len() }));
    }
    Ok(t.report(Suite::TraceAgreement, seed, Value::Object(per)))
}

fn random_in(rng: &mut impl Rng, basis: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    let mut v = vec![zero(); len];
    for b in basis {
        crate::linalg::axpy(&mut v, &small(rng), b);
    }
    v
}

/// Numerically trivial morphisms stay trivial under composition on both
/// sides and under tensoring with identities.
pub fn ideal_property(corpus: &Corpus, seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    let mut per = serde_json::Map::new();
    for c in all_categories(corpus)? {
        let n_ideal = numerical_ideal(&c)?;
        let closed = validate_ideal(&c, &n_ideal);
        t.check(closed.is_ok(), || format!("{}: {}", c.name, closed.clone().unwrap_err()));
        let objs = c.len();
        let mut nonzero = 0;
        for _ in 0..samples {
            let (x, y) = (rng.gen_range(0..objs), rng.gen_range(0..objs));
            let f = random_in(&mut rng, n_ideal.get(x, y).basis(), c.dim(x, y));
            if !is_zero_vec(&f) {
                nonzero += 1;
            }
            let (z, w) = (rng.gen_range(0..objs), rng.gen_range(0..objs));
            let g = random_vec(&mut rng, c.dim(z, x));
            let h = random_vec(&mut rng, c.dim(y, w));
            let hfg = c.compose(z, y, w, &c.compose(z, x, y, &g, &f), &h);
            t.check(n_ideal.get(z, w).contains(&hfg), || {
                format!("{}: h∘f∘g leaves N for f: {} → {}", c.name, c.objects[x], c.objects[y])
            });
            for u in 0..objs {
                let id = c.identity(u).to_vec();
                if let Some(fu) = c.tensor_morphism((x, y), (u, u), &f, &id) {
                    let (s, d) = (c.tensor_object(x, u).unwrap(), c.tensor_object(y, u).unwrap());
                    t.check(n_ideal.get(s, d).contains(&fu), || {
                        format!("{}: f ⊗ id_{} leaves N", c.name, c.objects[u])
                    });
                }
                if let Some(uf) = c.tensor_morphism((u, u), (x, y), &id, &f) {
                    let (s, d) = (c.tensor_object(u, x).unwrap(), c.tensor_object(u, y).unwrap());
                    t.check(n_ideal.get(s, d).contains(&uf), || {
                        format!("{}: id_{} ⊗ f leaves N", c.name, c.objects[u])
                    });
                }
            }
        }
        per.insert(c.name.clone(), json!({ "ideal_dims": n_ideal.dims(), "nonzero_samples": nonzero }));
    }
    // NChow: the external tensor with an identity, checked on the motive side
    let algebras = corpus.algebras()?;
    for _ in 0..samples.min(20) {
        let a = algebras.choose(&mut rng).expect("nonempty corpus").clone();
        let b = algebras.choose(&mut rng).expect("nonempty corpus").clone();
        let m = algebras.choose(&mut rng).expect("nonempty corpus").clone();
        let ctx: Vec<NcMotive> = [&a, &b].iter().map(|x| NcMotive::of_algebra((*x).clone())).collect();
        let f = random_correspondence(&mut rng, &a, &b);
        if !is_numerically_trivial(&f, &ctx)? {
            continue;
        }
        let fm = external_tensor(&f, &Correspondence::identity(m.clone()));
        let tctx = vec![
            NcMotive::of_algebra(fm.source.clone()),
            NcMotive::of_algebra(fm.target.clone()),
        ];
        t.check(is_numerically_trivial(&fm, &tctx)?, || {
            format!("{} → {}: f ⊠ id_{} is not numerically trivial", a.name, b.name, m.name)
        });
    }
    Ok(t.report(Suite::Ideal, seed, Value::Object(per)))
}

/// `N` is the largest proper ideal: it is what `is_largest_ideal` certifies,
/// and sampled morphisms outside it pair nontrivially with some witness.
pub fn largest_ideal(corpus: &Corpus, seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    let mut per = serde_json::Map::new();
    for c in all_categories(corpus)? {
        if c.unit_end_dim() != Some(1) {
            continue;
        }
        let n_ideal = numerical_ideal(&c)?;
        let report = is_largest_ideal(&c, &n_ideal)?;
        t.check(report.is_largest, || format!("{}: numerical ideal not certified largest", c.name));
        let candidates: Vec<(usize, usize)> = (0..c.len())
            .flat_map(|x| (0..c.len()).map(move |y| (x, y)))
            .filter(|&(x, y)| !n_ideal.get(x, y).is_full())
            .collect();
        let mut found = 0;
        for _ in 0..samples {
            let &(x, y) = candidates.choose(&mut rng).expect("the identity of the unit is outside N");
            let f = loop {
                let f = random_vec(&mut rng, c.dim(x, y));
                if !n_ideal.get(x, y).contains(&f) {
                    break f;
                }
            };
            let mut witness = None;
            for j in 0..c.dim(y, x) {
                let g = c.basis(y, x, j);
                if !c.trace(x, &c.compose(x, y, x, &f, &g))?.is_zero() {
                    witness = Some(j);
                    break;
                }
            }
            if witness.is_some() {
                found += 1;
            }
            t.check(witness.is_some(), || {
                format!("{}: no witness for a morphism {} → {} outside N", c.name, c.objects[x], c.objects[y])
            });
        }
        per.insert(c.name.clone(), json!({ "witnesses_found": found }));
    }
    Ok(t.report(Suite::Largest, seed, Value::Object(per)))
}

/// Nilpotent endomorphisms of the corpus categories: radical elements and
/// `e∘u∘(1−e)` for listed idempotent classes.
pub fn nilpotent_samples(
    c: &PresentedCategory,
    rng: &mut impl Rng,
    idempotents: &[(usize, Vec<Rational>)],
) -> Result<Vec<(usize, Vec<Rational>)>> {
    let mut out = Vec::new();
    for x in 0..c.len() {
        let d = c.dim(x, x);
        if d == 0 {
            continue;
        }
        let rad = jacobson_radical(c.end_constants(x), d)?;
        if !rad.is_empty() {
            out.push((x, random_in(rng, &rad, d)));
        }
    }
    for (x, e) in idempotents {
        let d = c.dim(*x, *x);
        let one_minus: Vec<Rational> = c.identity(*x).iter().zip(e).map(|(a, b)| a - b).collect();
        let u = random_vec(rng, d);
        let f = c.compose(*x, *x, *x, &c.compose(*x, *x, *x, &one_minus, &u), e);
        if !is_zero_vec(&f) {
            out.push((*x, f));
        }
    }
    Ok(out)
}

/// Idempotent classes `[P(v,v)]` in `End(A, id)` of an NChow export whose
/// second object is `(A, id)`.
fn vertex_idempotents(c: &PresentedCategory, a: &MotiveAlgebra) -> Vec<(usize, Vec<Rational>)> {
    if c.len() < 2 {
        return Vec::new();
    }
    let n = a.vertex_count();
    (0..n)
        .map(|v| {
            // the hom basis of End(A, id) is the standard class basis
            let mut e = vec![zero(); n * n];
            e[v * n + v] = rat(1);
            (1, e)
        })
        .collect()
}

pub fn nilpotent_traces(corpus: &Corpus, seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    let mut pool: Vec<(PresentedCategory, Vec<(usize, Vec<Rational>)>)> = Vec::new();
    for c in corpus.categories()? {
        pool.push((c, Vec::new()));
    }
    for a in corpus.algebras()? {
        let c = export_presented_category(&format!("nchow:{}", a.name), &nchow_objects(&a))?;
        let ids = vertex_idempotents(&c, &a);
        pool.push((c, ids));
    }
    let mut by_category = serde_json::Map::new();
    let mut drawn = 0;
    let mut rounds = 0;
    while drawn < samples && rounds < 100 * samples {
        rounds += 1;
        let (c, ids) = pool.choose(&mut rng).expect("nonempty pool");
        let cands = nilpotent_samples(c, &mut rng, ids)?;
        let Some((x, f)) = cands.choose(&mut rng).cloned() else { continue };
        let r = nilpotent_trace_check(c, x, &f)?;
        t.check(r.trace_vanishes, || {
            format!("{}: nilpotent endomorphism of {} has traces {:?}", c.name, c.objects[x], r.power_traces)
        });
        drawn += 1;
        let slot = by_category.entry(c.name.clone()).or_insert(json!(0));
        *slot = json!(slot.as_u64().unwrap_or(0) + 1);
    }
    t.check(drawn == samples, || format!("only {drawn} nilpotent samples found"));
    Ok(t.report(Suite::Nilpotent, seed, json!({ "samples": drawn, "by_category": by_category })))
}

/// Construction commutation on every corpus orbit spec, with a
/// seeded choice of zero idempotents to split off.
pub fn prop31(corpus: &Corpus, seed: u64) -> Result<SuiteReport> {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    let mut tables = serde_json::Map::new();
    for (name, d, spec) in corpus.orbit_specs()? {
        let mut idempotents = Vec::new();
        if rng.gen_bool(0.5) {
            let x = rng.gen_range(0..d.len());
            idempotents.push((x, d.zero_hom(x, x)));
        }
        let r = verify_prop31(&d, &spec, &idempotents)?;
        t.check(r.tables_agree, || format!("{name}: dimension tables differ"));
        t.check(r.kernel_alpha_equals_n, || format!("{name}: ker α ≠ N"));
        t.check(r.beta_bijective && r.beta_functorial && r.beta_on_objects, || {
            format!("{name}: β is not an isomorphism of categories")
        });
        t.check(r.gamma_bijective && r.gamma_essentially_surjective, || {
            format!("{name}: γ^♮ is not an equivalence")
        });
        tables.insert(name, serde_json::to_value(&r).expect("report serializes"));
    }
    Ok(t.report(Suite::Prop31, seed, Value::Object(tables)))
}

/// Graded test instances for conservativity: the corpus orbit specs and a
/// graded category with two-line summands, restricted to objects whose
/// twists stay inside the presentation.
pub fn conservativity_instances(corpus: &Corpus) -> Result<Vec<(PresentedCategory, OrbitSpec)>> {
    let mut out: Vec<(PresentedCategory, OrbitSpec)> = corpus
        .orbit_specs()?
        .into_iter()
        .filter(|(n, _, _)| n.starts_with("graded"))
        .map(|(_, c, s)| (c, s))
        .collect();
    let sums = synthetic::graded_sums(-3, 3);
    let idx = |o: &str| sums.object_index(o);
    let spec = OrbitSpec {
        object: idx("L1")?,
        inverse: idx("L-1")?,
        bound: 2,
        objects: Some(vec![idx("L0")?, idx("S0")?, idx("D0")?]),
    };
    out.push((sums, spec));
    Ok(out)
}

pub fn conservativity(corpus: &Corpus, seed: u64, samples: usize) -> Result<SuiteReport> {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    let instances = conservativity_instances(corpus)?;
    let orbits: Vec<_> = instances
        .iter()
        .map(|(c, s)| orbit_category(c, s))
        .collect::<Result<_>>()?;
    let (mut invertible, mut singular) = (0, 0);
    for k in 0..samples {
        let i = k % instances.len();
        let (c, o) = (&instances[i].0, &orbits[i]);
        let (x, y) = (*o.objects.choose(&mut rng).unwrap(), *o.objects.choose(&mut rng).unwrap());
        // small entries so that singular morphisms show up often
        let f: Vec<Rational> = (0..c.dim(x, y)).map(|_| rat(rng.gen_range(-1..=1))).collect();
        let r = conservativity_check(c, o, x, y, &f)?;
        if r.invertible_in_base {
            invertible += 1;
        } else {
            singular += 1;
        }
        t.check(r.agrees, || {
            format!(
                "{}: {} → {} invertible in C: {}, in the orbit: {}",
                c.name, r.source, r.target, r.invertible_in_base, r.invertible_in_orbit
            )
        });
    }
    Ok(t.report(
        Suite::Conservativity,
        seed,
        json!({ "samples": samples, "invertible": invertible, "singular": singular }),
    ))
}

/// Associativity and bilinearity of `compose` on classes, checked against
/// the classes of the explicit tensored complexes, plus invariance of
/// every computed value under cone-of-identity perturbations.
pub fn k0_coherence(corpus: &Corpus, seed: u64, samples: usize) -> Result<(usize, Option<String>)> {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    let algebras = corpus.algebras()?;
    let explicit_class = |z: &Correspondence| {
        let mut class = vec![zero(); z.class.len()];
        for (c, x) in z.terms.as_ref().expect("explicit terms") {
            crate::linalg::axpy(&mut class, c, &x.k0_class());
        }
        class
    };
    for k in 0..samples {
        let pick = |rng: &mut ChaCha8Rng| algebras.choose(rng).expect("nonempty corpus").clone();
        let (a, b, c, d) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let x = random_correspondence(&mut rng, &a, &b);
        let x2 = random_correspondence(&mut rng, &a, &b);
        let y = random_correspondence(&mut rng, &b, &c);
        let z = random_correspondence(&mut rng, &c, &d);
        let xy = compose(&x, &y)?;
        t.check(xy.class == explicit_class(&xy), || format!("triple {k}: X ⊗ Y class differs from its complexes"));
        let left = compose(&xy, &z)?;
        let right = compose(&x, &compose(&y, &z)?)?;
        t.check(left == right, || format!("triple {k}: composition not associative"));
        t.check(left.class == explicit_class(&left), || format!("triple {k}: (X ⊗ Y) ⊗ Z class differs from its complexes"));
        let (s, s2) = (small(&mut rng), small(&mut rng));
        let lin = compose(&x.scale(&s).add(&x2.scale(&s2))?, &y)?;
        let expected = compose(&x, &y)?.scale(&s).add(&compose(&x2, &y)?.scale(&s2))?;
        t.check(lin == expected, || format!("triple {k}: composition not bilinear"));
        // cone perturbations
        let rep = random_complex(&mut rng, &a, &b);
        let xp = x.with_cone_term(small(&mut rng), &rep)?;
        t.check(compose(&xp, &y)? == xy, || format!("triple {k}: cone changes a composite"));
        if a == c {
            let yx = compose(&y, &x)?;
            t.check(
                intersection_number(&xp, &y)? == intersection_number(&x, &y)?
                    && categorical_trace(&yx)? == intersection_number(&x, &y)?,
                || format!("triple {k}: cone changes the pairing or the trace is not cyclic"),
            );
        }
        let ya = random_correspondence(&mut rng, &b, &a);
        let direct = intersection_number(&xp, &ya)?;
        t.check(direct == intersection_number(&x, &ya)?, || format!("triple {k}: cone changes ⟨X·Y⟩"));
        if k % 5 == 0 {
            // the slow explicit route on a subsample
            let explicit = explicit_intersection_number(&xp, &ya)?;
            t.check(explicit == direct, || format!("triple {k}: explicit HH pairing {explicit} ≠ {direct}"));
        }
    }
    Ok((t.assertions, t.counterexample))
}

/// Default sample sizes used by the command-line tool.
pub fn run(corpus: &Corpus, suite: Suite, seed: u64) -> Result<SuiteReport> {
    match suite {
        Suite::Ideal => ideal_property(corpus, seed, 100),
        Suite::Largest => largest_ideal(corpus, seed, 20),
        Suite::TraceAgreement => trace_agreement(corpus, seed, 30),
        Suite::Prop31 => prop31(corpus, seed),
        Suite::Conservativity => conservativity(corpus, seed, 50),
        Suite::Nilpotent => nilpotent_traces(corpus, seed, 50),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::builtin_docs;

    fn corpus() -> Corpus {
        Corpus::from_docs(builtin_docs()).unwrap()
    }

    #[test]
    fn small_runs_pass() {
        let c = corpus();
        for r in [
            trace_agreement(&c, 3, 3).unwrap(),
            ideal_property(&c, 3, 5).unwrap(),
            largest_ideal(&c, 3, 3).unwrap(),
            nilpotent_traces(&c, 3, 5).unwrap(),
            conservativity(&c, 3, 6).unwrap(),
        ] {
            assert!(r.passed, "{}: {:?}", r.suite, r.counterexample);
            assert!(r.assertions > 0);
        }
        let (n, bad) = k0_coherence(&c, 3, 3).unwrap();
        assert!(bad.is_none(), "{bad:?}");
        assert!(n > 0);
    }

    #[test]
    fn reports_are_deterministic() {
        let c = corpus();
        let a = serde_json::to_string(&nilpotent_traces(&c, 11, 4).unwrap()).unwrap();
        let b = serde_json::to_string(&nilpotent_traces(&c, 11, 4).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn failures_are_reported() {
        let mut t = Tally::default();
        t.check(true, || unreachable!());
        t.check(false, || "first".into());
        t.check(false, || "second".into());
        let r = t.report(Suite::Ideal, 0, Value::Null);
        assert!(!r.passed);
        assert_eq!(r.assertions, 3);
        assert_eq!(r.counterexample.as_deref(), Some("first"));
    }
}
