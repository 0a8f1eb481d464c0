//! Hand-presented categories: graded vector spaces and trace categories
//! with nonzero numerical ideal.

use std::collections::BTreeMap;

use crate::category::{PresentedCategory, TensorData};
use crate::linalg::{one, zero, RatMatrix, Rational};

/// Graded vector spaces spanned by the listed objects, each given as an
/// ordered list of degrees of its one-dimensional summands. Morphisms are
/// degree-preserving matrices; the tensor product concatenates summands and
/// is defined whenever the resulting degree list is itself listed.
pub fn graded(name: &str, objects: &[(String, Vec<i64>)]) -> PresentedCategory {
    let n = objects.len();
    let degs: Vec<&Vec<i64>> = objects.iter().map(|(_, d)| d).collect();
    // basis of Hom(x, y): pairs (p, q) with deg x[p] = deg y[q], matrix unit p ↦ q
    let basis = |x: usize, y: usize| -> Vec<(usize, usize)> {
        let mut b = Vec::new();
        for (p, dp) in degs[x].iter().enumerate() {
            for (q, dq) in degs[y].iter().enumerate() {
                if dp == dq {
                    b.push((p, q));
                }
            }
        }
        b
    };
    let bases: Vec<Vec<Vec<(usize, usize)>>> = (0..n).map(|x| (0..n).map(|y| basis(x, y)).collect()).collect();
    let hom_dims: Vec<Vec<usize>> = bases.iter().map(|r| r.iter().map(Vec::len).collect()).collect();
    let comp = crate::category::build_comp(&hom_dims, |x, y, z, i, j| {
        let (p, q) = bases[x][y][i];
        let (q2, r) = bases[y][z][j];
        let mut v = vec![zero(); hom_dims[x][z]];
        if q == q2 {
            let k = bases[x][z].iter().position(|&e| e == (p, r)).expect("degrees match");
            v[k] = one();
        }
        v
    });
    let diag = |x: usize| -> Vec<Rational> {
        bases[x][x].iter().map(|&(p, q)| if p == q { one() } else { zero() }).collect()
    };
    let ids: Vec<Vec<Rational>> = (0..n).map(diag).collect();
    let traces = Some(ids.clone());
    let find = |d: &[i64]| degs.iter().position(|e| e.as_slice() == d);
    let unit = find(&[0]);
    let tensor = unit.map(|u| {
        let products: Vec<Vec<Option<usize>>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let d: Vec<i64> = degs[x].iter().flat_map(|a| degs[y].iter().map(move |b| a + b)).collect();
                        find(&d)
                    })
                    .collect()
            })
            .collect();
        let mut morphisms = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                for x2 in 0..n {
                    for y2 in 0..n {
                        let (Some(s), Some(d)) = (products[x][x2], products[y][y2]) else {
                            continue;
                        };
                        let (a, b) = (hom_dims[x][y], hom_dims[x2][y2]);
                        if a * b == 0 {
                            continue;
                        }
                        let (w1, w2) = (degs[x2].len(), degs[y2].len());
                        let mut m = RatMatrix::zeros(hom_dims[s][d], a * b);
                        for (i, &(p, q)) in bases[x][y].iter().enumerate() {
                            for (j, &(p2, q2)) in bases[x2][y2].iter().enumerate() {
                                let e = (p * w1 + p2, q * w2 + q2);
                                let k = bases[s][d].iter().position(|&u| u == e).expect("degrees add");
                                m[(k, i * b + j)] = one();
                            }
                        }
                        morphisms.insert((x, y, x2, y2), m);
                    }
                }
            }
        }
        TensorData {
            products,
            unit: u,
            morphisms,
        }
    });
    PresentedCategory {
        name: name.to_string(),
        objects: objects.iter().map(|(l, _)| l.clone()).collect(),
        hom_dims,
        comp,
        ids,
        traces,
        unit,
        ambient_unit_end_dim: None,
        tensor,
    }
}

/// Lines `L{d}` in degrees `lo..=hi`.
pub fn graded_lines(lo: i64, hi: i64) -> PresentedCategory {
    let objects: Vec<(String, Vec<i64>)> = (lo..=hi).map(|d| (format!("L{d}"), vec![d])).collect();
    graded("graded-lines", &objects)
}

/// Lines `L{d}`, two-degree sums `S{d} = L{d} ⊕ L{d+1}` and doubled lines
/// `D{d} = L{d} ⊕ L{d}` over degrees `lo..=hi`.
pub fn graded_sums(lo: i64, hi: i64) -> PresentedCategory {
    let mut objects: Vec<(String, Vec<i64>)> = (lo..=hi).map(|d| (format!("L{d}"), vec![d])).collect();
    objects.extend((lo..hi).map(|d| (format!("S{d}"), vec![d, d + 1])));
    objects.extend((lo..=hi).map(|d| (format!("D{d}"), vec![d, d])));
    graded("graded-sums", &objects)
}

/// Dual numbers `ℚ[x]/x²` with `tr(a + bx) = a`, as a 2×4 composition block.
fn dual_block() -> RatMatrix {
    // columns (f, g): (1,1) (1,x) (x,1) (x,x)
    RatMatrix::from_i64(&[&[1, 0, 0, 0], &[0, 1, 1, 0]])
}

/// Unit object `1` with `End = ℚ` and an object `X` with `End = ℚ[x]/x²`,
/// traced by the constant term. The numerical ideal is `span{x}`.
pub fn dual_numbers() -> PresentedCategory {
    let comp = BTreeMap::from([((0, 0, 0), RatMatrix::from_i64(&[&[1]])), ((1, 1, 1), dual_block())]);
    let mut morphisms = BTreeMap::new();
    morphisms.insert((0, 0, 0, 0), RatMatrix::from_i64(&[&[1]]));
    morphisms.insert((0, 0, 1, 1), RatMatrix::identity(2));
    morphisms.insert((1, 1, 0, 0), RatMatrix::identity(2));
    PresentedCategory {
        name: "qx2".into(),
        objects: vec!["1".into(), "X".into()],
        hom_dims: vec![vec![1, 0], vec![0, 2]],
        comp,
        ids: vec![vec![one()], vec![one(), zero()]],
        traces: Some(vec![vec![one()], vec![one(), zero()]]),
        unit: Some(0),
        ambient_unit_end_dim: None,
        tensor: Some(TensorData {
            products: vec![vec![Some(0), Some(1)], vec![Some(1), None]],
            unit: 0,
            morphisms,
        }),
    }
}

/// Lines `L{d}` with `End = ℚ` and objects `M{d}` with `End = ℚ[x]/x²`
/// for `d` in `-r..=r`, all cross homs zero. `L{a} ⊗ L{b} = L{a+b}` and
/// `L{a} ⊗ M{b} = M{a+b}`; `M ⊗ M` lies outside the presentation. The
/// numerical ideal is `span{x}` in every `End(M{d})`, and `L1` is a
/// ⊗-invertible object satisfying `Hom(1, L1^n) = 0` for `n ≠ 0`.
pub fn nilpotent_ideal(r: i64) -> PresentedCategory {
    let lines: Vec<i64> = (-r..=r).collect();
    let k = lines.len();
    let l = |d: i64| lines.iter().position(|&e| e == d);
    let m = |d: i64| l(d).map(|i| i + k);
    let n = 2 * k;
    let mut objects: Vec<String> = lines.iter().map(|d| format!("L{d}")).collect();
    objects.extend(lines.iter().map(|d| format!("M{d}")));
    let hom_dims: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| if x != y { 0 } else if x < k { 1 } else { 2 }).collect())
        .collect();
    let mut comp = BTreeMap::new();
    for x in 0..n {
        comp.insert((x, x, x), if x < k { RatMatrix::from_i64(&[&[1]]) } else { dual_block() });
    }
    let unit_vec = |x: usize| -> Vec<Rational> {
        if x < k {
            vec![one()]
        } else {
            vec![one(), zero()]
        }
    };
    let ids: Vec<Vec<Rational>> = (0..n).map(unit_vec).collect();
    let mut products = vec![vec![None; n]; n];
    let mut morphisms = BTreeMap::new();
    for (a, &da) in lines.iter().enumerate() {
        for (b, &db) in lines.iter().enumerate() {
            products[a][b] = l(da + db);
            products[a][b + k] = m(da + db);
            products[b + k][a] = m(da + db);
            if products[a][b].is_some() {
                morphisms.insert((a, a, b, b), RatMatrix::from_i64(&[&[1]]));
            }
            if products[a][b + k].is_some() {
                morphisms.insert((a, a, b + k, b + k), RatMatrix::identity(2));
                morphisms.insert((b + k, b + k, a, a), RatMatrix::identity(2));
            }
        }
    }
    PresentedCategory {
        name: "nilpotent-ideal".into(),
        objects,
        hom_dims,
        comp,
        ids: ids.clone(),
        traces: Some(ids),
        unit: l(0),
        ambient_unit_end_dim: None,
        tensor: Some(TensorData {
            products,
            unit: l(0).expect("0 is in range"),
            morphisms,
        }),
    }
}

/// One object with `End = ℚ`, which is its own unit.
pub fn point() -> PresentedCategory {
    graded("point", &[("1".to_string(), vec![0])])
}

/// `End = ℚ × ℚ` on one object, basis the two orthogonal idempotents, with
/// trace `(1, 1)`.
pub fn split_pair() -> PresentedCategory {
    let mut c = RatMatrix::zeros(2, 4);
    c[(0, 0)] = one();
    c[(1, 3)] = one();
    PresentedCategory {
        name: "split-pair".into(),
        objects: vec!["X".into()],
        hom_dims: vec![vec![2]],
        comp: BTreeMap::from([((0, 0, 0), c)]),
        ids: vec![vec![one(), one()]],
        traces: Some(vec![vec![one(), one()]]),
        unit: None,
        ambient_unit_end_dim: None,
        tensor: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_validate() {
        for c in [
            graded_lines(-2, 2),
            graded_sums(-2, 2),
            dual_numbers(),
            nilpotent_ideal(1),
            point(),
            split_pair(),
        ] {
            c.validate().unwrap_or_else(|e| panic!("{}: {e}", c.name));
        }
    }

    #[test]
    fn graded_shapes() {
        let c = graded_sums(-2, 2);
        let s0 = c.object_index("S0").unwrap();
        let s1 = c.object_index("S1").unwrap();
        let d0 = c.object_index("D0").unwrap();
        assert_eq!(c.dim(s0, s0), 2);
        assert_eq!(c.dim(s0, s1), 1);
        assert_eq!(c.dim(d0, d0), 4);
        let l1 = c.object_index("L1").unwrap();
        assert_eq!(c.tensor_object(s0, l1), Some(s1));
        assert_eq!(c.tensor_object(s0, s0), None);
    }
}
