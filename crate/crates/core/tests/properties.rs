use std::sync::Arc;

use ncnum::category::{check_semisimple, numerical_ideal, PresentedCategory};
use ncnum::fixtures::{builtin_docs, synthetic, Corpus};
use ncnum::linalg::{rat, FdAlgebra, RatMatrix, Rational, Span};
use ncnum::motives::{categorical_trace, compose, intersection_number, MotiveAlgebra};
use ncnum::quiver::{check_smooth_proper, PathAlgebra, Quiver};
use ncnum::verify::{random_correspondence, rng};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec((-4i64..=4, 1i64..=3), rows * cols).prop_map(move |es| {
        RatMatrix::from_entries(rows, cols, es.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect())
    })
}

/// Acyclic quivers on up to four vertices: arrows only go from lower to
/// higher index, at most two per pair.
fn acyclic_quiver() -> impl Strategy<Value = Quiver> {
    (1usize..=4).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        prop::collection::vec(0usize..=2, pairs.len()).prop_map(move |mult| {
            let vertices: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
            let mut arrows = Vec::new();
            for (&(i, j), &m) in pairs.iter().zip(&mult) {
                for k in 0..m {
                    arrows.push((format!("a{i}{j}{k}"), vertices[i].clone(), vertices[j].clone()));
                }
            }
            let vs: Vec<&str> = vertices.iter().map(String::as_str).collect();
            let ar: Vec<(&str, &str, &str)> = arrows.iter().map(|(a, s, t)| (a.as_str(), s.as_str(), t.as_str())).collect();
            Quiver::from_parts("random", &vs, &ar).expect("acyclic by construction")
        })
    })
}

fn corpus_algebras() -> Vec<Arc<MotiveAlgebra>> {
    Corpus::from_docs(builtin_docs()).unwrap().algebras().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix(r, c))) {
        let cols = m.cols();
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == rat(0)));
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(3, 3)) {
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), RatMatrix::identity(3));
            prop_assert_eq!(inv.mul(&m), RatMatrix::identity(3));
        } else {
            prop_assert!(m.rank() < 3);
        }
    }

    /// The radical of a path algebra is spanned by the paths of positive
    /// length, and it is a two-sided ideal.
    #[test]
    fn radical_of_path_algebras(q in acyclic_quiver()) {
        let a = PathAlgebra::new(q);
        let alg: FdAlgebra = a.structure_constants();
        let rad = Span::new(a.dim(), &alg.jacobson_radical());
        let long: Vec<Vec<Rational>> = (0..a.dim())
            .filter(|&i| !a.path(i).is_trivial())
            .map(|i| a.basis_vector(i))
            .collect();
        prop_assert_eq!(&rad, &Span::new(a.dim(), &long));
        for r in rad.basis() {
            for i in 0..a.dim() {
                let ra = alg.mul(r, &a.basis_vector(i));
                let ar = alg.mul(&a.basis_vector(i), r);
                prop_assert!(rad.contains(&ra) && rad.contains(&ar));
            }
        }
        let report = check_smooth_proper(&Arc::new(a));
        prop_assert!(report.smooth && report.proper);
    }

    /// Classes, traces and pairings are additive in the correspondence.
    #[test]
    fn k0_additivity(seed in any::<u64>(), which in 0usize..5, s in -3i64..=3) {
        let algebras = corpus_algebras();
        let a = &algebras[which];
        let mut g = rng(seed);
        let x = random_correspondence(&mut g, a, a);
        let y = random_correspondence(&mut g, a, a);
        let z = random_correspondence(&mut g, a, a);
        let sum = x.scale(&rat(s)).add(&y).unwrap();
        prop_assert_eq!(
            categorical_trace(&sum).unwrap(),
            rat(s) * categorical_trace(&x).unwrap() + categorical_trace(&y).unwrap()
        );
        prop_assert_eq!(
            intersection_number(&sum, &z).unwrap(),
            rat(s) * intersection_number(&x, &z).unwrap() + intersection_number(&y, &z).unwrap()
        );
        let explicit: Vec<Rational> = sum.terms.as_ref().unwrap().iter().fold(vec![rat(0); sum.class.len()], |mut acc, (c, t)| {
            ncnum::linalg::axpy(&mut acc, c, &t.k0_class());
            acc
        });
        prop_assert_eq!(explicit, sum.class.clone());
    }

    #[test]
    fn composition_is_associative(seed in any::<u64>(), picks in (0usize..5, 0usize..5, 0usize..5, 0usize..5)) {
        let algebras = corpus_algebras();
        let (a, b, c, d) = (&algebras[picks.0], &algebras[picks.1], &algebras[picks.2], &algebras[picks.3]);
        let mut g = rng(seed);
        let x = random_correspondence(&mut g, a, b);
        let y = random_correspondence(&mut g, b, c);
        let z = random_correspondence(&mut g, c, d);
        let left = compose(&compose(&x, &y).unwrap(), &z).unwrap();
        let right = compose(&x, &compose(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    /// Semisimplicity and the numerical ideal do not depend on the chosen
    /// hom bases.
    #[test]
    fn semisimple_under_basis_change(seed in any::<u64>(), which in 0usize..4) {
        let c = [
            synthetic::dual_numbers(),
            synthetic::split_pair(),
            synthetic::nilpotent_ideal(1),
            synthetic::graded_sums(0, 1),
        ][which].clone();
        let changes = random_changes(&c, seed);
        let d = c.change_basis(&changes).unwrap();
        d.validate().unwrap();
        let (r, s) = (check_semisimple(&c).unwrap(), check_semisimple(&d).unwrap());
        prop_assert_eq!(r.semisimple, s.semisimple);
        let rads = |x: &ncnum::category::SemisimpleReport| x.objects.iter().map(|o| o.radical_dim).collect::<Vec<_>>();
        prop_assert_eq!(rads(&r), rads(&s));
        prop_assert_eq!(numerical_ideal(&c).unwrap().dims(), numerical_ideal(&d).unwrap().dims());
    }
}

/// Unitriangular changes with small random entries, so always invertible.
fn random_changes(c: &PresentedCategory, seed: u64) -> Vec<Vec<RatMatrix>> {
    use rand::Rng;
    let mut g = rng(seed);
    (0..c.len())
        .map(|x| {
            (0..c.len())
                .map(|y| {
                    let n = c.dim(x, y);
                    RatMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                        std::cmp::Ordering::Equal => rat(1),
                        std::cmp::Ordering::Less => rat(g.gen_range(-2..=2)),
                        std::cmp::Ordering::Greater => rat(0),
                    })
                })
                .collect()
        })
        .collect()
}
