//! The nine acceptance criteria. Each prints one pass/fail line; the
//! process exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use ncnum::category::{
    check_semisimple, numerical_ideal, quotient_by_ideal, verify_prop31, PresentedCategory,
};
use ncnum::fixtures::{builtin_docs, synthetic, Corpus};
use ncnum::hochschild::{Method, DEFAULT_BAR_CUTOFF};
use ncnum::linalg::{rat, RatMatrix, Rational};
use ncnum::motives::{categorical_trace, compose, Correspondence, MotiveAlgebra};
use ncnum::verify;

const SEED: u64 = 20240501;
const _: () = assert!(DEFAULT_BAR_CUTOFF >= 4);

fn corpus() -> Corpus {
    Corpus::bundled().expect("bundled fixtures load")
}

/// `Ok(summary)` or `Err(reason)`.
type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:.0?}"))?;
    Ok(t)
}

fn suite(r: verify::SuiteReport) -> Result<verify::SuiteReport, String> {
    ensure(r.passed, || format!("counterexample: {}", r.counterexample.clone().unwrap_or_default()))?;
    Ok(r)
}

fn trace_agreement() -> Outcome {
    let start = Instant::now();
    let c = corpus();
    let r = suite(verify::trace_agreement(&c, SEED, 30).map_err(|e| e.to_string())?)?;
    let algebras = c.algebras().map_err(|e| e.to_string())?.len();
    // 30 random samples plus the identity, per algebra
    ensure(r.assertions == algebras * 31, || format!("{} assertions for {algebras} algebras", r.assertions))?;
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{algebras} algebras x 30 correspondences, 3 routes agree, {t:.2?}"))
}

fn identity_traces() -> Outcome {
    let c = corpus();
    let mut seen = Vec::new();
    for (name, expected) in [("point", 1), ("qq", 2), ("a2", 2)] {
        let a = c.algebra(name).map_err(|e| e.to_string())?;
        let id = Correspondence::identity(a);
        let tr = categorical_trace(&id).map_err(|e| e.to_string())?;
        let std = verify::hh_value(&id, Method::Standard).map_err(|e| e.to_string())?;
        let bar = verify::hh_value(&id, Method::Bar { cutoff: DEFAULT_BAR_CUTOFF }).map_err(|e| e.to_string())?;
        ensure(tr == rat(expected) && std == tr && bar == tr, || {
            format!("{name}: trace {tr}, standard {std}, bar {bar}, expected {expected}")
        })?;
        seen.push(format!("{name}={tr}"));
    }
    Ok(seen.join(", "))
}

fn ideal_property() -> Outcome {
    let r = suite(verify::ideal_property(&corpus(), SEED, 100).map_err(|e| e.to_string())?)?;
    Ok(format!("{} membership checks", r.assertions))
}

fn largest_ideal() -> Outcome {
    let r = suite(verify::largest_ideal(&corpus(), SEED, 20).map_err(|e| e.to_string())?)?;
    let cats = r.details.as_object().map(|m| m.len()).unwrap_or(0);
    ensure(cats > 0, || "no category with End(unit) = F".into())?;
    for (name, d) in r.details.as_object().unwrap() {
        ensure(d["witnesses_found"] == 20, || format!("{name}: {}", d["witnesses_found"]))?;
    }
    Ok(format!("{cats} categories, 20 witnesses each"))
}

/// End((kA₂, id)) as classes `[P(v,u)]` composed by `compose`, checked to be
/// isomorphic to 2×2 matrices through `X ↦ X·P`, `P[w][w'] = #paths w' → w`.
fn a2_end_is_matrix_algebra(a: &Arc<MotiveAlgebra>) -> Result<(), String> {
    let pa = a.path_algebra().expect("quiver algebra").clone();
    let n = pa.vertex_count();
    let p = RatMatrix::from_fn(n, n, |w, w2| rat(pa.path_count(w2, w) as i64));
    ensure(p.rank() == n, || "path matrix is singular".into())?;
    let as_matrix = |z: &Correspondence| RatMatrix::from_fn(n, n, |v, u| z.class[v * n + u].clone());
    let basis: Vec<Correspondence> = (0..n)
        .flat_map(|v| (0..n).map(move |u| (v, u)))
        .map(|(v, u)| Correspondence::projective(a.clone(), a.clone(), v, u).expect("vertex pair"))
        .collect();
    for x in &basis {
        for y in &basis {
            let xy = compose(x, y).map_err(|e| e.to_string())?;
            let lhs = as_matrix(&xy).mul(&p);
            let rhs = as_matrix(x).mul(&p).mul(&as_matrix(y).mul(&p));
            ensure(lhs == rhs, || "X ↦ X·P is not multiplicative".into())?;
        }
    }
    Ok(())
}

fn semisimplicity() -> Outcome {
    let start = Instant::now();
    let c = corpus();
    let mut cats: Vec<PresentedCategory> = verify::all_categories(&c).map_err(|e| e.to_string())?;
    cats.extend([
        synthetic::graded_sums(-2, 2),
        synthetic::dual_numbers(),
        synthetic::nilpotent_ideal(2),
        synthetic::point(),
        synthetic::split_pair(),
    ]);
    for cat in &cats {
        let n = numerical_ideal(cat).map_err(|e| format!("{}: {e}", cat.name))?;
        let q = quotient_by_ideal(cat, &n).map_err(|e| format!("{}: {e}", cat.name))?;
        let r = check_semisimple(&q.category).map_err(|e| format!("{}: {e}", cat.name))?;
        ensure(r.semisimple, || format!("{} modulo N is not semisimple", cat.name))?;
    }
    let qx2 = c.category("qx2").map_err(|e| e.to_string())?;
    let x = qx2.object_index("X").map_err(|e| e.to_string())?;
    let q = quotient_by_ideal(&qx2, &numerical_ideal(&qx2).unwrap()).unwrap().category;
    ensure(qx2.dim(x, x) == 2 && q.dim(x, x) == 1, || {
        format!("qx2: End(X) {} -> {}", qx2.dim(x, x), q.dim(x, x))
    })?;
    let a2 = c.algebra("a2").map_err(|e| e.to_string())?;
    a2_end_is_matrix_algebra(&a2)?;
    let nchow = cats.iter().find(|k| k.name == "nchow:a2").expect("exported");
    let r = check_semisimple(nchow).map_err(|e| e.to_string())?;
    let end = r.objects.iter().find(|o| o.object.contains("a2")).expect("(kA2, id) listed");
    ensure(end.end_dim == 4 && end.radical_dim == 0, || {
        format!("End(kA2, id): dim {}, radical {}", end.end_dim, end.radical_dim)
    })?;
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{} categories, qx2 End 2 -> 1, End(kA2,id) = M2(Q), {t:.2?}", cats.len()))
}

fn nilpotent() -> Outcome {
    let r = suite(verify::nilpotent_traces(&corpus(), SEED, 50).map_err(|e| e.to_string())?)?;
    ensure(r.details["samples"] == 50, || format!("{} samples", r.details["samples"]))?;
    Ok("50 nilpotent endomorphisms, all power traces vanish".into())
}

fn prop31() -> Outcome {
    let start = Instant::now();
    let c = corpus();
    let (lines, spec) = c.orbit_spec("graded-lines-shift").map_err(|e| e.to_string())?;
    ensure(lines.len() == 5, || format!("graded instance has {} objects", lines.len()))?;
    let (nil, nspec) = c.orbit_spec("nilpotent-ideal-shift").map_err(|e| e.to_string())?;
    let n_dims = numerical_ideal(&nil).map_err(|e| e.to_string())?;
    ensure(!n_dims.is_zero(), || "nilpotent-ideal has zero numerical ideal".into())?;
    let mut runs = 0;
    for (d, s) in [(&lines, &spec), (&nil, &nspec)] {
        let zero: Vec<(usize, Vec<Rational>)> = (0..d.len()).map(|x| (x, d.zero_hom(x, x))).take(1).collect();
        for idem in [Vec::new(), zero] {
            let r = verify_prop31(d, s, &idem).map_err(|e| format!("{}: {e}", d.name))?;
            ensure(r.tables_agree, || format!("{}: tables differ", d.name))?;
            ensure(r.kernel_alpha_equals_n, || format!("{}: ker alpha != N", d.name))?;
            ensure(r.beta_bijective && r.beta_functorial && r.beta_on_objects, || format!("{}: beta", d.name))?;
            ensure(r.gamma_bijective && r.gamma_essentially_surjective, || format!("{}: gamma", d.name))?;
            ensure(r.passed, || format!("{}: report failed", d.name))?;
            runs += 1;
        }
    }
    suite(verify::prop31(&c, SEED).map_err(|e| e.to_string())?)?;
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{runs} runs on graded lines and the nonzero-ideal fixture, {t:.2?}"))
}

fn conservativity() -> Outcome {
    let r = suite(verify::conservativity(&corpus(), SEED, 50).map_err(|e| e.to_string())?)?;
    ensure(r.assertions == 50, || format!("{} assertions", r.assertions))?;
    Ok(format!(
        "50 morphisms ({} invertible, {} singular)",
        r.details["invertible"], r.details["singular"]
    ))
}

fn k0_coherence() -> Outcome {
    let (n, bad) = verify::k0_coherence(&corpus(), SEED, 50).map_err(|e| e.to_string())?;
    ensure(bad.is_none(), || bad.unwrap_or_default())?;
    Ok(format!("50 triples, {n} checks"))
}

fn main() {
    // the bundled directory must match the in-code corpus
    let c = corpus();
    assert_eq!(c.docs().count(), builtin_docs().len());
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("trace/HH agreement", trace_agreement),
        ("identity traces", identity_traces),
        ("ideal property", ideal_property),
        ("largest ideal", largest_ideal),
        ("semisimplicity", semisimplicity),
        ("nilpotent trace", nilpotent),
        ("construction commutation", prop31),
        ("conservativity", conservativity),
        ("K0 coherence", k0_coherence),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match result {
            Ok(summary) => println!("criterion {}: PASS {name}: {summary}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria pass", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
