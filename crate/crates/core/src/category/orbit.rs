use super::{build_comp, PresentedCategory};
use crate::error::{Error, Result};
use crate::linalg::{zero, Rational};

/// Twisting data for `C/−⊗O`: the invertible object, its inverse, the
/// declared support bound, and optionally the objects to keep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSpec {
    pub object: usize,
    pub inverse: usize,
    pub bound: usize,
    pub objects: Option<Vec<usize>>,
}

/// One summand `Hom_C(x, T_j y)` of an orbit hom space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub twist: i64,
    pub target: usize,
    pub offset: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub category: PresentedCategory,
    pub spec: OrbitSpec,
    /// Base object of each orbit object.
    pub objects: Vec<usize>,
    pub blocks: Vec<Vec<Vec<Block>>>,
}

impl Orbit {
    pub fn block(&self, a: usize, b: usize, j: i64) -> Option<&Block> {
        self.blocks[a][b].iter().find(|bl| bl.twist == j)
    }

    /// `π(f)` for `f ∈ Hom_C(x, y)`: the morphism concentrated in twist 0.
    pub fn project(&self, a: usize, b: usize, f: &[Rational]) -> Vec<Rational> {
        let mut v = vec![zero(); self.category.dim(a, b)];
        if let Some(bl) = self.block(a, b, 0) {
            v[bl.offset..bl.offset + bl.dim].clone_from_slice(f);
        }
        v
    }

    /// Component of an orbit morphism in `Hom_C(x, T_j y)`.
    pub fn component(&self, a: usize, b: usize, v: &[Rational], j: i64) -> Option<Vec<Rational>> {
        self.block(a, b, j).map(|bl| v[bl.offset..bl.offset + bl.dim].to_vec())
    }

    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.objects.iter().position(|&o| o == x)
    }
}

/// `T_j(y) = y ⊗ O^{⊗j}` (with `O⁻¹` for negative `j`), when every step is listed.
pub fn twist(c: &PresentedCategory, spec: &OrbitSpec, y: usize, j: i64) -> Option<usize> {
    let step = if j >= 0 { spec.object } else { spec.inverse };
    (0..j.unsigned_abs()).try_fold(y, |acc, _| c.tensor_object(acc, step))
}

/// `T_j(g) = g ⊗ id_O ⊗ … ⊗ id_O` for `g: y → z`.
pub fn twist_morphism(
    c: &PresentedCategory,
    spec: &OrbitSpec,
    (y, z): (usize, usize),
    g: &[Rational],
    j: i64,
) -> Option<(usize, usize, Vec<Rational>)> {
    let step = if j >= 0 { spec.object } else { spec.inverse };
    let id = c.identity(step).to_vec();
    (0..j.unsigned_abs()).try_fold((y, z, g.to_vec()), |(s, t, h), _| {
        let h2 = c.tensor_morphism((s, t), (step, step), &h, &id)?;
        Some((c.tensor_object(s, step)?, c.tensor_object(t, step)?, h2))
    })
}

fn validate_spec(c: &PresentedCategory, spec: &OrbitSpec) -> Result<Vec<usize>> {
    let t = c
        .tensor
        .as_ref()
        .ok_or_else(|| Error::Schema(format!("{}: orbit categories need tensor data", c.name)))?;
    let n = c.len();
    if spec.object >= n || spec.inverse >= n {
        return Err(Error::UnknownObject(format!("#{}", spec.object.max(spec.inverse))));
    }
    if t.products[spec.object][spec.inverse] != Some(t.unit) || t.products[spec.inverse][spec.object] != Some(t.unit) {
        return Err(Error::Schema(format!(
            "{}: {} is not inverse to {}",
            c.name, c.objects[spec.inverse], c.objects[spec.object]
        )));
    }
    let objects = spec.objects.clone().unwrap_or_else(|| (0..n).collect());
    if let Some(&bad) = objects.iter().find(|&&x| x >= n) {
        return Err(Error::UnknownObject(format!("#{bad}")));
    }
    // twists repeat with period at most n, so this window exposes any
    // nonzero hom beyond the bound
    let reach = (spec.bound + n + 1) as i64;
    for &x in &objects {
        for &y in &objects {
            for j in (-reach..=reach).filter(|j| j.unsigned_abs() as usize > spec.bound) {
                if let Some(w) = twist(c, spec, y, j) {
                    if c.dim(x, w) > 0 {
                        return Err(Error::UnboundedSupport(format!(
                            "{}: Hom({}, {} ⊗ O^{j}) ≠ 0 beyond bound {}",
                            c.name, c.objects[x], c.objects[y], spec.bound
                        )));
                    }
                }
            }
        }
    }
    Ok(objects)
}

/// `Hom(X, Y) = ⊕_{|j| ≤ b} Hom_C(X, T_j Y)`, composing `g ∘ f` as
/// `T_j(g) ∘ f` for `f` in twist `j`. Tensor data is not carried over.
pub fn orbit_category(c: &PresentedCategory, spec: &OrbitSpec) -> Result<Orbit> {
    let objects = validate_spec(c, spec)?;
    let n = objects.len();
    let b = spec.bound as i64;
    let blocks: Vec<Vec<Vec<Block>>> = objects
        .iter()
        .map(|&x| {
            objects
                .iter()
                .map(|&y| {
                    let mut offset = 0;
                    (-b..=b)
                        .filter_map(|j| {
                            let w = twist(c, spec, y, j)?;
                            let dim = c.dim(x, w);
                            let bl = Block {
                                twist: j,
                                target: w,
                                offset,
                                dim,
                            };
                            offset += dim;
                            (dim > 0 || j == 0).then_some(bl)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let hom_dims: Vec<Vec<usize>> = blocks
        .iter()
        .map(|r| r.iter().map(|bs| bs.iter().map(|bl| bl.dim).sum()).collect())
        .collect();
    let locate = |a: usize, bb: usize, i: usize| -> &Block {
        blocks[a][bb]
            .iter()
            .find(|bl| bl.offset <= i && i < bl.offset + bl.dim)
            .expect("basis index inside some block")
    };
    let mut strictness: Option<Error> = None;
    let comp = build_comp(&hom_dims, |a, bb, d, i, jj| {
        let (x, y, z) = (objects[a], objects[bb], objects[d]);
        let mut out = vec![zero(); hom_dims[a][d]];
        let bf = locate(a, bb, i);
        let bg = locate(bb, d, jj);
        let mut f = vec![zero(); bf.dim];
        f[i - bf.offset] = crate::linalg::one();
        let mut g = vec![zero(); bg.dim];
        g[jj - bg.offset] = crate::linalg::one();
        // g: y → T_i z, twisted by j: T_j y → T_j T_i z
        let Some((src, w, tg)) = twist_morphism(c, spec, (y, bg.target), &g, bf.twist) else {
            return out;
        };
        debug_assert_eq!(src, bf.target);
        let k = bf.twist + bg.twist;
        let value = c.compose(x, bf.target, w, &f, &tg);
        match blocks[a][d].iter().find(|bl| bl.twist == k) {
            Some(bl) if bl.target == w => {
                out[bl.offset..bl.offset + bl.dim].clone_from_slice(&value);
            }
            Some(_) => {
                strictness.get_or_insert(Error::TensorViolation(format!(
                    "{}: twists of {} do not compose strictly",
                    c.name, c.objects[z]
                )));
            }
            None => {
                if value.iter().any(|v| v != &zero()) {
                    strictness.get_or_insert(Error::UnboundedSupport(format!(
                        "{}: composite lands in twist {k} outside the bound",
                        c.name
                    )));
                }
            }
        }
        out
    });
    if let Some(e) = strictness {
        return Err(e);
    }
    let ids = (0..n)
        .map(|a| {
            let mut v = vec![zero(); hom_dims[a][a]];
            let bl = blocks[a][a].iter().find(|bl| bl.twist == 0).expect("twist 0 present");
            v[bl.offset..bl.offset + bl.dim].clone_from_slice(c.identity(objects[a]));
            v
        })
        .collect();
    let traces = c.traces.as_ref().map(|t| {
        (0..n)
            .map(|a| {
                let mut v = vec![zero(); hom_dims[a][a]];
                let bl = blocks[a][a].iter().find(|bl| bl.twist == 0).expect("twist 0 present");
                v[bl.offset..bl.offset + bl.dim].clone_from_slice(&t[objects[a]]);
                v
            })
            .collect()
    });
    let unit = c.unit.or(c.tensor.as_ref().map(|t| t.unit)).and_then(|u| objects.iter().position(|&o| o == u));
    let category = PresentedCategory {
        name: format!("{}/O", c.name),
        objects: objects.iter().map(|&x| c.objects[x].clone()).collect(),
        hom_dims,
        comp,
        ids,
        traces,
        unit,
        ambient_unit_end_dim: c.ambient_unit_end_dim,
        tensor: None,
    };
    // a truncated presentation can drop composites through unlisted twists
    if let Err(e @ (Error::CompositionViolation(_) | Error::TraceCyclicityViolation(_))) = category.validate() {
        return Err(Error::UnboundedSupport(format!("{}: twists leave the presentation ({e})", c.name)));
    }
    Ok(Orbit {
        category,
        spec: spec.clone(),
        objects,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::synthetic;

    fn spec(c: &PresentedCategory, bound: usize, objects: Option<&[&str]>) -> OrbitSpec {
        OrbitSpec {
            object: c.object_index("L1").unwrap(),
            inverse: c.object_index("L-1").unwrap(),
            bound,
            objects: objects.map(|os| os.iter().map(|o| c.object_index(o).unwrap()).collect()),
        }
    }

    #[test]
    fn graded_lines_orbit() {
        let c = synthetic::graded_lines(-2, 2);
        let o = orbit_category(&c, &spec(&c, 4, None)).unwrap();
        o.category.validate().unwrap();
        let l0 = c.object_index("L0").unwrap();
        let l1 = c.object_index("L1").unwrap();
        assert_eq!(o.category.dim(l0, l0), 1);
        assert_eq!(o.category.dim(l0, l1), 1);
        assert_eq!(o.blocks[l0][l1].iter().find(|b| b.dim > 0).unwrap().twist, -1);
        // every pair of lines becomes isomorphic
        assert!(o.category.hom_dims.iter().flatten().all(|&d| d == 1));
    }

    #[test]
    fn sums_orbit_end_dimension() {
        let c = synthetic::graded_sums(-2, 2);
        let o = orbit_category(&c, &spec(&c, 4, Some(&["L0", "S0"]))).unwrap();
        o.category.validate().unwrap();
        assert_eq!(o.category.dim(1, 1), 4);
        assert_eq!(o.category.dim(0, 1), 2);
    }

    #[test]
    fn support_beyond_bound_is_rejected() {
        let c = synthetic::graded_lines(-2, 2);
        assert!(matches!(orbit_category(&c, &spec(&c, 3, None)), Err(Error::UnboundedSupport(_))));
        // twisting by the unit never leaves the object
        let unit = c.object_index("L0").unwrap();
        let trivial = OrbitSpec {
            object: unit,
            inverse: unit,
            bound: 2,
            objects: None,
        };
        assert!(matches!(orbit_category(&c, &trivial), Err(Error::UnboundedSupport(_))));
    }

    #[test]
    fn truncated_twists_are_rejected() {
        let c = synthetic::graded_sums(-2, 2);
        assert!(matches!(orbit_category(&c, &spec(&c, 4, None)), Err(Error::UnboundedSupport(_))));
    }
}
