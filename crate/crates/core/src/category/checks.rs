use num_traits::Zero;
use serde::Serialize;

use super::{numerical_ideal, Orbit, PresentedCategory, TensorIdeal};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, is_zero_vec, jacobson_radical, RatMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargestIdealReport {
    pub is_largest: bool,
    pub equals_numerical_ideal: bool,
    pub proper: bool,
    /// `(source, target, basis index, witness index)` with `tr(g_w ∘ f_i) ≠ 0`.
    pub witnesses: Vec<(String, String, usize, usize)>,
}

/// Compares `I` with the numerical ideal and certifies, for every basis
/// morphism outside it, a partner with nonzero trace pairing.
pub fn is_largest_ideal(c: &PresentedCategory, ideal: &TensorIdeal) -> Result<LargestIdealReport> {
    match c.unit_end_dim() {
        Some(1) => {}
        Some(d) => return Err(Error::UnitEndNotF(d)),
        None => return Err(Error::UnitEndNotF(0)),
    }
    let n_ideal = numerical_ideal(c)?;
    let equals = n_ideal == *ideal;
    let proper = !ideal.is_entire();
    let mut witnesses = Vec::new();
    let mut certified = true;
    for x in 0..c.len() {
        for y in 0..c.len() {
            for i in 0..c.dim(x, y) {
                let f = c.basis(x, y, i);
                if ideal.get(x, y).contains(&f) {
                    continue;
                }
                let mut found = None;
                for j in 0..c.dim(y, x) {
                    let gf = c.compose(x, y, x, &f, &c.basis(y, x, j));
                    if !c.trace(x, &gf)?.is_zero() {
                        found = Some(j);
                        break;
                    }
                }
                match found {
                    Some(j) => witnesses.push((c.objects[x].clone(), c.objects[y].clone(), i, j)),
                    None => certified = false,
                }
            }
        }
    }
    Ok(LargestIdealReport {
        is_largest: equals && proper && certified,
        equals_numerical_ideal: equals,
        proper,
        witnesses,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObjectRadical {
    pub object: String,
    pub end_dim: usize,
    pub radical_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairDefect {
    pub source: String,
    pub target: String,
    pub dim: usize,
    /// `dim Hom(x,y) − rank` of the trace pairing; absent without trace data.
    pub rank_defect: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimpleReport {
    pub category: String,
    pub finite_dimensional: bool,
    pub objects: Vec<ObjectRadical>,
    pub pairs: Vec<PairDefect>,
    pub radicals_vanish: bool,
    pub pairings_nondegenerate: bool,
    pub semisimple: bool,
}

/// End-algebra radicals (Dickson) and trace-pairing rank defects.
pub fn check_semisimple(c: &PresentedCategory) -> Result<SemisimpleReport> {
    let mut objects = Vec::new();
    for x in 0..c.len() {
        let d = c.dim(x, x);
        let radical_dim = if d == 0 { 0 } else { jacobson_radical(c.end_constants(x), d)?.len() };
        objects.push(ObjectRadical {
            object: c.objects[x].clone(),
            end_dim: d,
            radical_dim,
        });
    }
    let mut pairs = Vec::new();
    for x in 0..c.len() {
        for y in 0..c.len() {
            let rank_defect = if c.has_trace() {
                Some(c.dim(x, y) - c.gram(x, y)?.rank())
            } else {
                None
            };
            pairs.push(PairDefect {
                source: c.objects[x].clone(),
                target: c.objects[y].clone(),
                dim: c.dim(x, y),
                rank_defect,
            });
        }
    }
    let radicals_vanish = objects.iter().all(|o| o.radical_dim == 0);
    let pairings_nondegenerate = pairs.iter().all(|p| p.rank_defect.unwrap_or(0) == 0);
    Ok(SemisimpleReport {
        category: c.name.clone(),
        finite_dimensional: true,
        objects,
        pairs,
        radicals_vanish,
        pairings_nondegenerate,
        semisimple: radicals_vanish && pairings_nondegenerate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotentReport {
    pub object: String,
    /// Least `n` with `fⁿ = 0`.
    pub nilpotency_index: usize,
    /// `tr(fᵐ)` for `m = 1, …, n`.
    pub power_traces: Vec<String>,
    pub trace_vanishes: bool,
}

pub fn nilpotent_trace_check(c: &PresentedCategory, x: usize, f: &[Rational]) -> Result<NilpotentReport> {
    let d = c.dim(x, x);
    if f.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: f.len() });
    }
    let mut power = f.to_vec();
    let mut traces = Vec::new();
    let mut index = None;
    for m in 1..=d.max(1) {
        if is_zero_vec(&power) {
            index = Some(m);
            break;
        }
        traces.push(c.trace(x, &power)?);
        power = c.compose(x, x, x, &power, f);
    }
    let index = match index {
        Some(m) => m,
        None if is_zero_vec(&power) => d.max(1) + 1,
        None => {
            return Err(Error::NotNilpotent(format!(
                "{}: endomorphism of {} has no vanishing power up to {}",
                c.name, c.objects[x], d
            )))
        }
    };
    // powers from the index on are zero, so their traces are too
    while traces.len() < index {
        traces.push(Rational::zero());
    }
    Ok(NilpotentReport {
        object: c.objects[x].clone(),
        nilpotency_index: index,
        trace_vanishes: traces.iter().all(Zero::is_zero),
        power_traces: traces.iter().map(format_rational).collect(),
    })
}

/// Solves `g ∘ f = id_x`, `f ∘ g = id_y` for `g: y → x`.
pub fn is_invertible(c: &PresentedCategory, x: usize, y: usize, f: &[Rational]) -> Option<Vec<Rational>> {
    let (dxx, dyy, dyx) = (c.dim(x, x), c.dim(y, y), c.dim(y, x));
    let mut m = RatMatrix::zeros(dxx + dyy, dyx);
    for k in 0..dyx {
        let g = c.basis(y, x, k);
        for (r, v) in c.compose(x, y, x, f, &g).into_iter().enumerate() {
            m[(r, k)] = v;
        }
        for (r, v) in c.compose(y, x, y, &g, f).into_iter().enumerate() {
            m[(dxx + r, k)] = v;
        }
    }
    let mut rhs = c.identity(x).to_vec();
    rhs.extend_from_slice(c.identity(y));
    m.solve(&rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConservativityReport {
    pub source: String,
    pub target: String,
    pub invertible_in_base: bool,
    pub invertible_in_orbit: bool,
    pub agrees: bool,
}

/// Invertibility of `f: x → y` in `C` and of `π(f)` in the orbit category.
pub fn conservativity_check(
    c: &PresentedCategory,
    orbit: &Orbit,
    x: usize,
    y: usize,
    f: &[Rational],
) -> Result<ConservativityReport> {
    let (a, b) = match (orbit.index_of(x), orbit.index_of(y)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::UnknownObject(format!("{} or {} not in the orbit", c.objects[x], c.objects[y]))),
    };
    let base = is_invertible(c, x, y, f).is_some();
    let pf = orbit.project(a, b, f);
    let orb = is_invertible(&orbit.category, a, b, &pf).is_some();
    Ok(ConservativityReport {
        source: c.objects[x].clone(),
        target: c.objects[y].clone(),
        invertible_in_base: base,
        invertible_in_orbit: orb,
        agrees: base == orb,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{orbit_category, quotient_by_ideal, OrbitSpec};
    use crate::fixtures::synthetic;
    use crate::linalg::rat;

    #[test]
    fn largest_ideal_on_dual_numbers() {
        let c = synthetic::dual_numbers();
        let n = numerical_ideal(&c).unwrap();
        assert!(is_largest_ideal(&c, &n).unwrap().is_largest);
        assert!(!is_largest_ideal(&c, &TensorIdeal::zero(&c)).unwrap().is_largest);
        assert!(!is_largest_ideal(&c, &TensorIdeal::entire(&c)).unwrap().is_largest);
        let mut no_unit = crate::category::testing::dual_numbers();
        no_unit.ambient_unit_end_dim = Some(2);
        assert!(matches!(
            is_largest_ideal(&no_unit, &TensorIdeal::zero(&no_unit)),
            Err(Error::UnitEndNotF(2))
        ));
    }

    #[test]
    fn semisimplicity() {
        let c = synthetic::graded_lines(-2, 2);
        assert!(check_semisimple(&c).unwrap().semisimple);
        let d = synthetic::dual_numbers();
        let r = check_semisimple(&d).unwrap();
        assert!(!r.semisimple);
        assert_eq!(r.objects[1].radical_dim, 1);
        let q = quotient_by_ideal(&d, &numerical_ideal(&d).unwrap()).unwrap();
        let r = check_semisimple(&q.category).unwrap();
        assert!(r.semisimple);
        assert_eq!(r.objects[1].end_dim, 1);
    }

    #[test]
    fn nilpotent_traces() {
        let d = synthetic::dual_numbers();
        let r = nilpotent_trace_check(&d, 1, &[rat(0), rat(1)]).unwrap();
        assert!(r.trace_vanishes);
        assert_eq!(r.nilpotency_index, 2);
        let z = nilpotent_trace_check(&d, 1, &[rat(0), rat(0)]).unwrap();
        assert!(z.trace_vanishes);
        assert_eq!(z.nilpotency_index, 1);
        assert!(matches!(
            nilpotent_trace_check(&d, 1, &[rat(1), rat(1)]),
            Err(Error::NotNilpotent(_))
        ));
    }

    #[test]
    fn conservativity_on_graded_sums() {
        let c = synthetic::graded_sums(-2, 2);
        let spec = OrbitSpec {
            object: c.object_index("L1").unwrap(),
            inverse: c.object_index("L-1").unwrap(),
            bound: 2,
            objects: Some(vec![c.object_index("L0").unwrap(), c.object_index("S0").unwrap()]),
        };
        let o = orbit_category(&c, &spec).unwrap();
        let s0 = c.object_index("S0").unwrap();
        let l0 = c.object_index("L0").unwrap();
        let id = c.identity(s0).to_vec();
        let r = conservativity_check(&c, &o, s0, s0, &id).unwrap();
        assert!(r.invertible_in_base && r.invertible_in_orbit);
        let r = conservativity_check(&c, &o, l0, s0, &[rat(1)]).unwrap();
        assert!(!r.invertible_in_base && !r.invertible_in_orbit);
        let r = conservativity_check(&c, &o, s0, s0, &[rat(2), rat(0)]).unwrap();
        assert!(r.agrees && !r.invertible_in_base);

        // in the orbit, S0 → S0 with an invertible twist-0 part plus a shift component
        let (a, bl) = (o.index_of(s0).unwrap(), o.block(o.index_of(s0).unwrap(), o.index_of(s0).unwrap(), 1));
        let mut f = o.project(a, a, &[rat(3), rat(5)]);
        f[bl.unwrap().offset] = rat(7);
        assert!(is_invertible(&o.category, a, a, &f).is_some());
        let mut g = o.project(a, a, &[rat(3), rat(0)]);
        g[bl.unwrap().offset] = rat(7);
        assert!(is_invertible(&o.category, a, a, &g).is_none());
    }
}
