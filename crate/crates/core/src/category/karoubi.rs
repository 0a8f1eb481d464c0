use std::collections::BTreeMap;

use super::{build_comp, PresentedCategory, TensorData};
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational, Span};

/// Pseudo-abelian envelope on listed idempotents. Object `k` is the pair
/// `objects[k] = (x, e)`; its hom spaces sit inside those of the base.
#[derive(Clone, Debug)]
pub struct Karoubi {
    pub category: PresentedCategory,
    pub objects: Vec<(usize, Vec<Rational>)>,
    spans: Vec<Vec<Span>>,
}

impl Karoubi {
    /// `Hom((x,e),(y,e'))` as a subspace of `Hom(x,y)`.
    pub fn span(&self, a: usize, b: usize) -> &Span {
        &self.spans[a][b]
    }

    /// Coordinates in the base category.
    pub fn embed(&self, a: usize, b: usize, v: &[Rational]) -> Vec<Rational> {
        self.spans[a][b].combine(v)
    }

    pub fn coordinates(&self, a: usize, b: usize, w: &[Rational]) -> Option<Vec<Rational>> {
        self.spans[a][b].coordinates(w)
    }

    pub fn find(&self, x: usize, e: &[Rational]) -> Option<usize> {
        self.objects.iter().position(|(y, f)| *y == x && f.as_slice() == e)
    }
}

/// Objects are `(x, id_x)` for every `x`, followed by the listed `(x, e)`
/// not already present.
pub fn karoubi_envelope(c: &PresentedCategory, idempotents: &[(usize, Vec<Rational>)]) -> Result<Karoubi> {
    let mut objects: Vec<(usize, Vec<Rational>)> = (0..c.len()).map(|x| (x, c.identity(x).to_vec())).collect();
    let mut labels = c.objects.clone();
    for (k, (x, e)) in idempotents.iter().enumerate() {
        let x = *x;
        if x >= c.len() {
            return Err(Error::UnknownObject(format!("#{x}")));
        }
        if e.len() != c.dim(x, x) {
            return Err(Error::DimensionMismatch {
                expected: c.dim(x, x),
                found: e.len(),
            });
        }
        if c.compose(x, x, x, e, e) != *e {
            return Err(Error::NotIdempotent(format!(
                "{}: listed element #{k} of End({}) is not idempotent",
                c.name, c.objects[x]
            )));
        }
        if !objects.iter().any(|(y, f)| *y == x && f == e) {
            objects.push((x, e.clone()));
            labels.push(format!("({},e{k})", c.objects[x]));
        }
    }
    let n = objects.len();
    let spans: Vec<Vec<Span>> = objects
        .iter()
        .map(|(x, e)| {
            objects
                .iter()
                .map(|(y, e2)| {
                    let images: Vec<Vec<Rational>> = (0..c.dim(*x, *y))
                        .map(|i| {
                            let fe = c.compose(*x, *x, *y, e, &c.basis(*x, *y, i));
                            c.compose(*x, *y, *y, &fe, e2)
                        })
                        .collect();
                    Span::new(c.dim(*x, *y), &images)
                })
                .collect()
        })
        .collect();
    let hom_dims: Vec<Vec<usize>> = spans.iter().map(|r| r.iter().map(Span::dim).collect()).collect();
    let comp = build_comp(&hom_dims, |a, b, d, i, j| {
        let (x, y, z) = (objects[a].0, objects[b].0, objects[d].0);
        let f = &spans[a][b].basis()[i];
        let g = &spans[b][d].basis()[j];
        spans[a][d]
            .coordinates(&c.compose(x, y, z, f, g))
            .expect("compressed homs compose")
    });
    let ids = (0..n)
        .map(|a| spans[a][a].coordinates(&objects[a].1).expect("e lies in e∘End∘e"))
        .collect();
    let traces = c.traces.as_ref().map(|t| {
        (0..n)
            .map(|a| spans[a][a].basis().iter().map(|v| crate::linalg::dot(&t[objects[a].0], v)).collect())
            .collect()
    });
    let find = |x: usize, e: &[Rational]| objects.iter().position(|(y, f)| *y == x && f.as_slice() == e);
    let unit = c.unit.map(|u| find(u, c.identity(u)).expect("identity objects come first"));
    let tensor = match &c.tensor {
        None => None,
        Some(t) => {
            let mut products = vec![vec![None; n]; n];
            for a in 0..n {
                for b in 0..n {
                    let ((x, e), (y, e2)) = (&objects[a], &objects[b]);
                    if let Some(e12) = c.tensor_morphism((*x, *x), (*y, *y), e, e2) {
                        products[a][b] = find(t.products[*x][*y].unwrap(), &e12);
                    }
                }
            }
            let mut morphisms = BTreeMap::new();
            for a in 0..n {
                for b in 0..n {
                    for a2 in 0..n {
                        for b2 in 0..n {
                            let (Some(s), Some(d)) = (products[a][a2], products[b][b2]) else {
                                continue;
                            };
                            let (p, q) = (hom_dims[a][b], hom_dims[a2][b2]);
                            if p * q * hom_dims[s][d] == 0 {
                                continue;
                            }
                            let mut m = RatMatrix::zeros(hom_dims[s][d], p * q);
                            for i in 0..p {
                                for j in 0..q {
                                    let fg = c
                                        .tensor_morphism(
                                            (objects[a].0, objects[b].0),
                                            (objects[a2].0, objects[b2].0),
                                            &spans[a][b].basis()[i],
                                            &spans[a2][b2].basis()[j],
                                        )
                                        .expect("listed product");
                                    let v = spans[s][d].coordinates(&fg).expect("tensor respects idempotents");
                                    for (r, x) in v.into_iter().enumerate() {
                                        m[(r, i * q + j)] = x;
                                    }
                                }
                            }
                            morphisms.insert((a, b, a2, b2), m);
                        }
                    }
                }
            }
            let unit = find(t.unit, c.identity(t.unit)).expect("identity objects come first");
            Some(TensorData {
                products,
                unit,
                morphisms,
            })
        }
    };
    let category = PresentedCategory {
        name: format!("{}^♮", c.name),
        objects: labels,
        hom_dims,
        comp,
        ids,
        traces,
        unit,
        ambient_unit_end_dim: c.ambient_unit_end_dim,
        tensor,
    };
    Ok(Karoubi {
        category,
        objects,
        spans,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::synthetic;
    use crate::linalg::rat;

    #[test]
    fn identities_only() {
        let c = synthetic::dual_numbers();
        let k = karoubi_envelope(&c, &[(1, vec![rat(1), rat(0)])]).unwrap();
        assert_eq!(k.category.objects, c.objects);
        assert_eq!(k.category.hom_dims, c.hom_dims);
        k.category.validate().unwrap();
    }

    #[test]
    fn splitting_a_product_algebra() {
        let c = synthetic::split_pair();
        let k = karoubi_envelope(&c, &[(0, vec![rat(1), rat(0)]), (0, vec![rat(0), rat(1)])]).unwrap();
        assert_eq!(k.category.len(), 3);
        assert_eq!(k.category.dim(1, 1), 1);
        assert_eq!(k.category.dim(2, 2), 1);
        assert_eq!(k.category.dim(1, 2), 0);
        assert_eq!(k.category.dim(0, 1), 1);
        k.category.validate().unwrap();
    }

    #[test]
    fn rejects_non_idempotents() {
        let c = synthetic::split_pair();
        let err = karoubi_envelope(&c, &[(0, vec![rat(2), rat(0)])]);
        assert!(matches!(err, Err(Error::NotIdempotent(_))));
    }

    #[test]
    fn tensor_extends() {
        let c = synthetic::graded_sums(-1, 1);
        let s0 = c.object_index("S0").unwrap();
        let e = {
            // projection onto the degree-0 summand of S0 = L0 ⊕ L1
            let mut v = vec![rat(0); c.dim(s0, s0)];
            v[0] = rat(1);
            v
        };
        let l1 = c.object_index("L1").unwrap();
        let k = karoubi_envelope(&c, &[(s0, e)]).unwrap();
        k.category.validate().unwrap();
        let new = k.category.len() - 1;
        assert_eq!(k.category.dim(new, new), 1);
        // (S0, e) ⊗ L1 is not listed
        assert_eq!(k.category.tensor_object(new, l1), None);
    }
}
