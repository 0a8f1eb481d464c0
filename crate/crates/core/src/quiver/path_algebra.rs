use std::collections::HashMap;

use num_traits::Zero;

use super::Quiver;
use crate::error::{Error, Result};
use crate::linalg::{axpy, one, unit_vector, zero, FdAlgebra, Rational};

/// Directed path, arrows listed in traversal order. A trivial path has no
/// arrows and `source == target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Path algebra kQ of an acyclic quiver. The product `p·q` is "first q,
/// then p": nonzero iff `source(p) == target(q)`, so `e_t(p)·p·e_s(p) = p`.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    quiver: Quiver,
    paths: Vec<Path>,
    lookup: HashMap<(usize, Vec<usize>), usize>,
    mult: Vec<Option<usize>>,
    idempotents: Vec<usize>,
}

impl PartialEq for PathAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver
    }
}

impl Eq for PathAlgebra {}

impl PathAlgebra {
    pub fn new(quiver: Quiver) -> Self {
        let mut paths: Vec<Path> = (0..quiver.vertex_count())
            .map(|v| Path {
                source: v,
                target: v,
                arrows: Vec::new(),
            })
            .collect();
        let mut frontier: Vec<Path> = paths.clone();
        // acyclic, so the frontier empties after at most |Q₀| rounds
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for a in 0..quiver.arrow_count() {
                    let (s, t) = quiver.ends(a);
                    if s == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        next.push(Path {
                            source: p.source,
                            target: t,
                            arrows,
                        });
                    }
                }
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        let lookup: HashMap<(usize, Vec<usize>), usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.source, p.arrows.clone()), i))
            .collect();
        let n = paths.len();
        let mut mult = vec![None; n * n];
        for (i, p) in paths.iter().enumerate() {
            for (j, q) in paths.iter().enumerate() {
                if p.source == q.target {
                    let mut arrows = q.arrows.clone();
                    arrows.extend(&p.arrows);
                    mult[i * n + j] = Some(lookup[&(q.source, arrows)]);
                }
            }
        }
        let idempotents = (0..quiver.vertex_count()).collect();
        Self {
            quiver,
            paths,
            lookup,
            mult,
            idempotents,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn name(&self) -> &str {
        self.quiver.name()
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, i: usize) -> &Path {
        &self.paths[i]
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// Basis index of the trivial path `e_v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    /// Basis product `b_i · b_j`, `None` when the paths do not compose.
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<usize> {
        self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![zero(); self.dim()];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                if let Some(k) = self.mul_basis(i, j) {
                    out[k] += x * y;
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Vec<Rational> {
        let mut u = vec![zero(); self.dim()];
        for v in 0..self.vertex_count() {
            u[self.idempotent(v)] = one();
        }
        u
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        unit_vector(self.dim(), i)
    }

    /// Basis of `e_to · A · e_from`: the paths from `from` to `to`.
    pub fn paths_between(&self, from: usize, to: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.paths[i].source == from && self.paths[i].target == to)
            .collect()
    }

    /// `dim e_to A e_from`, the number of paths from `from` to `to`.
    pub fn path_count(&self, from: usize, to: usize) -> usize {
        self.paths_between(from, to).len()
    }

    /// Basis of the projective left module `A e_v` (paths starting at `v`).
    pub fn paths_from(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.paths[i].source == v).collect()
    }

    /// Basis of the projective right module `e_u A` (paths ending at `u`).
    pub fn paths_to(&self, u: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.paths[i].target == u).collect()
    }

    /// Matrix `C[to][from] = dim e_to A e_from`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        (0..n)
            .map(|to| (0..n).map(|from| self.path_count(from, to)).collect())
            .collect()
    }

    pub fn structure_constants(&self) -> FdAlgebra {
        let n = self.dim();
        let mut c = vec![zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                if let Some(k) = self.mul_basis(i, j) {
                    c[(i * n + j) * n + k] = one();
                }
            }
        }
        FdAlgebra::new(n, c).expect("path algebras are associative and unital")
    }

    /// Name of a basis path: `e:<vertex>` for trivial paths, otherwise the
    /// arrows in product order, e.g. `b*a` for "first a, then b".
    pub fn path_name(&self, i: usize) -> String {
        let p = &self.paths[i];
        if p.is_trivial() {
            format!("e:{}", self.quiver.vertices()[p.source])
        } else {
            p.arrows
                .iter()
                .rev()
                .map(|&a| self.quiver.arrows()[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    pub fn parse_path(&self, name: &str) -> Result<usize> {
        if let Some(v) = name.strip_prefix("e:") {
            return Ok(self.idempotent(self.quiver.vertex_index(v)?));
        }
        let mut arrows = Vec::new();
        for part in name.split('*').rev() {
            arrows.push(self.quiver.arrow_index(part)?);
        }
        let source = self.quiver.ends(arrows[0]).0;
        self.lookup
            .get(&(source, arrows))
            .copied()
            .ok_or_else(|| Error::UnknownPath(name.to_string()))
    }

    /// Adds `scale · b_i · x` into `acc`, where `x` is a vector.
    pub fn left_mul_into(&self, acc: &mut [Rational], scale: &Rational, i: usize, x: &[Rational]) {
        for (j, y) in x.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            if let Some(k) = self.mul_basis(i, j) {
                acc[k] += scale * y;
            }
        }
    }

    pub fn sum_into(&self, acc: &mut [Rational], scale: &Rational, x: &[Rational]) {
        axpy(acc, scale, x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> PathAlgebra {
        PathAlgebra::new(Quiver::from_parts("a2", &["1", "2"], &[("alpha", "1", "2")]).unwrap())
    }

    #[test]
    fn dimensions() {
        let point = PathAlgebra::new(Quiver::from_parts("pt", &["*"], &[]).unwrap());
        assert_eq!(point.dim(), 1);
        let two = PathAlgebra::new(Quiver::from_parts("qq", &["1", "2"], &[]).unwrap());
        assert_eq!(two.dim(), 2);
        let a = a2();
        assert_eq!(a.dim(), 3);
        let names: Vec<String> = (0..3).map(|i| a.path_name(i)).collect();
        assert_eq!(names, ["e:1", "e:2", "alpha"]);
    }

    #[test]
    fn multiplication_is_concatenation() {
        let a = a2();
        let alpha = a.parse_path("alpha").unwrap();
        let (e1, e2) = (a.idempotent(0), a.idempotent(1));
        assert_eq!(a.mul_basis(e2, alpha), Some(alpha));
        assert_eq!(a.mul_basis(alpha, e1), Some(alpha));
        assert_eq!(a.mul_basis(alpha, e2), None);
        assert_eq!(a.mul_basis(e1, alpha), None);
        assert_eq!(a.mul_basis(alpha, alpha), None);
    }

    #[test]
    fn idempotents_sum_to_unit() {
        let a = PathAlgebra::new(
            Quiver::from_parts("a3", &["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap(),
        );
        assert_eq!(a.dim(), 6);
        let alg = a.structure_constants();
        assert_eq!(alg.unit(), a.unit().as_slice());
        assert_eq!(a.path_name(5), "b*a");
        assert_eq!(a.parse_path("b*a").unwrap(), 5);
        assert!(a.parse_path("a*b").is_err());
        for (i, p) in a.paths().iter().enumerate() {
            let left = a.mul_basis(a.idempotent(p.target), i);
            let right = a.mul_basis(i, a.idempotent(p.source));
            assert_eq!((left, right), (Some(i), Some(i)));
        }
    }

    #[test]
    fn projective_modules() {
        let a = a2();
        assert_eq!(a.paths_from(0).len(), 2); // A e_1 = span{e1, alpha}
        assert_eq!(a.paths_to(0).len(), 1); // e_1 A = span{e1}
        assert_eq!(a.cartan(), vec![vec![1, 0], vec![1, 1]]);
    }
}
