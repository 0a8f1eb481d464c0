use num_traits::Zero;

use super::{build_comp, PresentedCategory, TensorData};
use crate::error::{Error, Result};
use crate::linalg::{pairing_radical, unit_vector, RatMatrix, Rational, Span};

/// A subspace of every hom space, indexed `[x][y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIdeal {
    pub spaces: Vec<Vec<Span>>,
}

impl TensorIdeal {
    pub fn zero(c: &PresentedCategory) -> Self {
        Self::from_fn(c, |x, y| Span::zero(c.dim(x, y)))
    }

    pub fn entire(c: &PresentedCategory) -> Self {
        Self::from_fn(c, |x, y| Span::full(c.dim(x, y)))
    }

    pub fn from_fn(c: &PresentedCategory, mut f: impl FnMut(usize, usize) -> Span) -> Self {
        let n = c.len();
        Self {
            spaces: (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect(),
        }
    }

    pub fn get(&self, x: usize, y: usize) -> &Span {
        &self.spaces[x][y]
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().flatten().all(Span::is_zero)
    }

    pub fn is_entire(&self) -> bool {
        self.spaces.iter().flatten().all(Span::is_full)
    }

    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.spaces.iter().map(|r| r.iter().map(Span::dim).collect()).collect()
    }
}

/// `N(x,y) = { f | tr(g∘f) = 0 for all g: y → x }`, the left radical of
/// each trace pairing.
pub fn numerical_ideal(c: &PresentedCategory) -> Result<TensorIdeal> {
    if !c.has_trace() {
        return Err(Error::TraceMissing(c.name.clone()));
    }
    let n = c.len();
    let mut spaces = vec![Vec::with_capacity(n); n];
    for (x, row) in spaces.iter_mut().enumerate() {
        for y in 0..n {
            let gram = c.gram(x, y)?;
            row.push(Span::new(c.dim(x, y), &pairing_radical(&gram)));
        }
    }
    Ok(TensorIdeal { spaces })
}

/// Closure under composition on both sides and, with tensor data, under
/// `f ↦ f ⊗ id_z` and `f ↦ id_z ⊗ f` wherever those products are listed.
pub fn validate_ideal(c: &PresentedCategory, ideal: &TensorIdeal) -> Result<()> {
    let n = c.len();
    let shape_ok = ideal.spaces.len() == n
        && ideal
            .spaces
            .iter()
            .enumerate()
            .all(|(x, r)| r.len() == n && r.iter().enumerate().all(|(y, s)| s.ambient() == c.dim(x, y)));
    if !shape_ok {
        return Err(Error::Schema(format!("{}: ideal does not match the hom table", c.name)));
    }
    let fail = |what: &str, x: usize, y: usize| {
        Error::NotAnIdeal(format!(
            "{}: {what} leaves the ideal from Hom({}, {})",
            c.name, c.objects[x], c.objects[y]
        ))
    };
    for x in 0..n {
        for y in 0..n {
            for f in ideal.get(x, y).basis() {
                for z in 0..n {
                    for j in 0..c.dim(y, z) {
                        if !ideal.get(x, z).contains(&c.compose(x, y, z, f, &c.basis(y, z, j))) {
                            return Err(fail("post-composition", x, y));
                        }
                    }
                    for j in 0..c.dim(z, x) {
                        if !ideal.get(z, y).contains(&c.compose(z, x, y, &c.basis(z, x, j), f)) {
                            return Err(fail("pre-composition", x, y));
                        }
                    }
                    let id = c.identity(z);
                    if let Some(g) = c.tensor_morphism((x, y), (z, z), f, id) {
                        let (s, d) = (c.tensor_object(x, z).unwrap(), c.tensor_object(y, z).unwrap());
                        if !ideal.get(s, d).contains(&g) {
                            return Err(fail("tensoring with an identity", x, y));
                        }
                    }
                    if let Some(g) = c.tensor_morphism((z, z), (x, y), id, f) {
                        let (s, d) = (c.tensor_object(z, x).unwrap(), c.tensor_object(z, y).unwrap());
                        if !ideal.get(s, d).contains(&g) {
                            return Err(fail("tensoring with an identity", x, y));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `C/I` together with the quotient functor on hom spaces.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub category: PresentedCategory,
    /// `Hom_C(x,y) → Hom_{C/I}(x,y)`, indexed `[x][y]`.
    pub projections: Vec<Vec<RatMatrix>>,
    /// Chosen lifts: columns are representatives of the quotient basis.
    pub sections: Vec<Vec<RatMatrix>>,
}

impl Quotient {
    pub fn project(&self, x: usize, y: usize, f: &[Rational]) -> Vec<Rational> {
        self.projections[x][y].mul_vec(f)
    }

    pub fn lift(&self, x: usize, y: usize, f: &[Rational]) -> Vec<Rational> {
        self.sections[x][y].mul_vec(f)
    }
}

/// Projection onto the span of the standard basis vectors not pivoted by
/// the subspace, along the subspace.
fn split(space: &Span) -> (RatMatrix, RatMatrix) {
    let d = space.ambient();
    let keep = space.complement_indices();
    let q = keep.len();
    let mut columns: Vec<Vec<Rational>> = keep.iter().map(|&i| unit_vector(d, i)).collect();
    columns.extend(space.basis().iter().cloned());
    let inv = RatMatrix::from_columns(&columns, d)
        .inverse()
        .expect("complement and subspace span the ambient space");
    let rows: Vec<usize> = (0..q).collect();
    let all: Vec<usize> = (0..d).collect();
    let projection = inv.submatrix(&rows, &all);
    let section = RatMatrix::from_columns(&columns[..q], d);
    (projection, section)
}

pub fn quotient_by_ideal(c: &PresentedCategory, ideal: &TensorIdeal) -> Result<Quotient> {
    validate_ideal(c, ideal)?;
    let n = c.len();
    let mut projections = vec![Vec::with_capacity(n); n];
    let mut sections = vec![Vec::with_capacity(n); n];
    for x in 0..n {
        for y in 0..n {
            let (p, s) = split(ideal.get(x, y));
            projections[x].push(p);
            sections[x].push(s);
        }
    }
    let hom_dims: Vec<Vec<usize>> = projections
        .iter()
        .map(|r| r.iter().map(RatMatrix::rows).collect())
        .collect();
    let comp = build_comp(&hom_dims, |x, y, z, i, j| {
        let f = sections[x][y].column(i);
        let g = sections[y][z].column(j);
        projections[x][z].mul_vec(&c.compose(x, y, z, &f, &g))
    });
    let ids = (0..n).map(|x| projections[x][x].mul_vec(c.identity(x))).collect();
    // the trace descends only when it vanishes on the ideal
    let traces = match &c.traces {
        Some(t) if (0..n).all(|x| ideal.get(x, x).basis().iter().all(|v| crate::linalg::dot(&t[x], v).is_zero())) => {
            Some((0..n).map(|x| sections[x][x].transpose().mul_vec(&t[x])).collect())
        }
        _ => None,
    };
    let tensor = c.tensor.as_ref().map(|t| {
        let mut morphisms = std::collections::BTreeMap::new();
        for &(x, y, x2, y2) in t.morphisms.keys() {
            let (s, d) = (t.products[x][x2].unwrap(), t.products[y][y2].unwrap());
            let (a, b) = (hom_dims[x][y], hom_dims[x2][y2]);
            if a * b * hom_dims[s][d] == 0 {
                continue;
            }
            let m = RatMatrix::from_fn(hom_dims[s][d], a * b, |r, col| {
                let f = sections[x][y].column(col / b);
                let g = sections[x2][y2].column(col % b);
                let fg = c.tensor_morphism((x, y), (x2, y2), &f, &g).expect("listed");
                projections[s][d].mul_vec(&fg)[r].clone()
            });
            morphisms.insert((x, y, x2, y2), m);
        }
        TensorData {
            products: t.products.clone(),
            unit: t.unit,
            morphisms,
        }
    });
    let category = PresentedCategory {
        name: format!("{}/N", c.name),
        objects: c.objects.clone(),
        hom_dims,
        comp,
        ids,
        traces,
        unit: c.unit,
        ambient_unit_end_dim: c.ambient_unit_end_dim,
        tensor,
    };
    Ok(Quotient {
        category,
        projections,
        sections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::testing;
    use crate::fixtures::synthetic;
    use crate::linalg::rat;

    #[test]
    fn numerical_ideal_examples() {
        let p = testing::point();
        assert!(numerical_ideal(&p).unwrap().is_zero());

        let d = testing::dual_numbers();
        let n = numerical_ideal(&d).unwrap();
        assert_eq!(n.get(0, 0), &Span::new(2, &[vec![rat(0), rat(1)]]));
        validate_ideal(&d, &n).unwrap();

        let mut no_trace = d.clone();
        no_trace.traces = None;
        assert!(matches!(numerical_ideal(&no_trace), Err(Error::TraceMissing(_))));
    }

    #[test]
    fn quotient_examples() {
        let d = testing::dual_numbers();
        let q = quotient_by_ideal(&d, &TensorIdeal::zero(&d)).unwrap();
        assert_eq!(q.category.hom_dims, d.hom_dims);
        assert_eq!(q.category.comp, d.comp);

        let n = numerical_ideal(&d).unwrap();
        let q = quotient_by_ideal(&d, &n).unwrap();
        assert_eq!(q.category.hom_dims, vec![vec![1]]);
        q.category.validate().unwrap();
        assert_eq!(q.category.traces, Some(vec![vec![rat(1)]]));

        let q = quotient_by_ideal(&d, &TensorIdeal::entire(&d)).unwrap();
        assert_eq!(q.category.hom_dims, vec![vec![0]]);
        assert!(q.category.traces.is_none());
    }

    #[test]
    fn non_ideals_are_rejected() {
        let c = synthetic::split_pair();
        // span{e1} is a two-sided ideal of ℚ×ℚ; span{e1 + e2} = span{1} is not proper-closed
        let e1 = TensorIdeal {
            spaces: vec![vec![Span::new(2, &[vec![rat(1), rat(0)]])]],
        };
        validate_ideal(&c, &e1).unwrap();
        let d = testing::dual_numbers();
        let bad = TensorIdeal {
            spaces: vec![vec![Span::new(2, &[vec![rat(1), rat(1)]])]],
        };
        assert!(matches!(quotient_by_ideal(&d, &bad), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn nilpotent_fixture_ideal_is_tensor_closed() {
        let c = synthetic::nilpotent_ideal(1);
        let n = numerical_ideal(&c).unwrap();
        validate_ideal(&c, &n).unwrap();
        let m0 = c.object_index("M0").unwrap();
        assert_eq!(n.get(m0, m0).dim(), 1);
        let q = quotient_by_ideal(&c, &n).unwrap();
        q.category.validate().unwrap();
        assert!(numerical_ideal(&q.category).unwrap().is_zero());
    }
}
