use holocodes::building::{cell_consistency, propagate_cell, restrict_to_line, SectionSpace};
use holocodes::code::{rs_projective, EvaluationSpec};
use holocodes::holo::{holographic_encode, tree_build};
use holocodes::linalg::{vec_add, weight};
use holocodes::proj::{p1_points, p2_lines};
use holocodes::quantum::{symplectic_pairing, ErrorOperator};
use holocodes::tiling::vertex_poly_encode;
use holocodes::{Elem, Field, LinearCode};
use proptest::prelude::*;

fn field_of(q: u32) -> Field {
    Field::of_order(q).unwrap()
}

fn elems(q: u32, len: usize) -> impl Strategy<Value = Vec<Elem>> {
    prop::collection::vec((0..q).prop_map(Elem), len)
}

proptest! {
    #[test]
    fn field_axioms(q in prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9, 16, 25]), x in 0u32..25, y in 0u32..25, z in 0u32..25) {
        let f = field_of(q);
        let (a, b, c) = (Elem(x % q), Elem(y % q), Elem(z % q));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        }
        // Frobenius is a ring map and the trace is additive
        prop_assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
        prop_assert_eq!(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % f.p());
        prop_assert_eq!(f.basis_combine(&f.basis_expand(a)).unwrap(), a);
    }

    #[test]
    fn dual_is_an_involution(q in prop::sample::select(vec![2u32, 3, 4]), rows in 1usize..4, seed in prop::collection::vec(0u32..16, 12)) {
        let f = field_of(q);
        let n = 4;
        let rows: Vec<Vec<Elem>> = (0..rows).map(|r| (0..n).map(|i| Elem(seed[r * n + i] % q)).collect()).collect();
        let c = LinearCode::from_rows(&f, n, &rows);
        prop_assert_eq!(c.dual_euclidean().dual_euclidean(), c.clone());
        prop_assert_eq!(c.k() + c.dual_euclidean().k(), n);
    }

    #[test]
    fn projective_rs_is_mds(q in prop::sample::select(vec![2u32, 3, 4, 5]), n_off in 0usize..6, k_off in 0usize..6) {
        let f = field_of(q);
        let n = 1 + n_off % (q as usize + 1);
        let k = 1 + k_off % n;
        let c = rs_projective(&f, &EvaluationSpec::projective(&f, &p1_points(&f)[..n], None, k)).unwrap();
        prop_assert_eq!(c.k(), k);
        prop_assert_eq!(c.min_distance().unwrap(), n - k + 1);
    }

    #[test]
    fn encoding_is_linear(x in elems(4, 2), y in elems(4, 2)) {
        let f = field_of(4);
        let pts: Vec<Elem> = f.elements().collect();
        let spec = EvaluationSpec::affine(&pts, None, 2);
        let lhs = spec.encode(&f, &vec_add(&f, &x, &y)).unwrap();
        let rhs = vec_add(&f, &spec.encode(&f, &x).unwrap(), &spec.encode(&f, &y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn operator_algebra(q in prop::sample::select(vec![2u32, 3, 4, 9]), v in prop::collection::vec(0u32..9, 12)) {
        let f = field_of(q);
        let e = |i: usize| -> ErrorOperator {
            let a = (0..2).map(|j| Elem(v[4 * i + j] % q)).collect();
            let b = (0..2).map(|j| Elem(v[4 * i + 2 + j] % q)).collect();
            ErrorOperator::new(a, b).unwrap()
        };
        let (x, y, z) = (e(0), e(1), e(2));
        let left = x.compose(&f, &y).unwrap().compose(&f, &z).unwrap();
        let right = x.compose(&f, &y.compose(&f, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let c1 = x.commutator_exponent(&f, &y).unwrap();
        let c2 = y.commutator_exponent(&f, &x).unwrap();
        prop_assert_eq!((c1 + c2) % f.p(), 0);
        let s = symplectic_pairing(&f, (&x.a, &x.b), (&y.a, &y.b)).unwrap();
        let t = symplectic_pairing(&f, (&y.a, &y.b), (&x.a, &x.b)).unwrap();
        prop_assert_eq!((s + t) % f.p(), 0);
    }

    #[test]
    fn tree_encoder_is_linear(q in prop::sample::select(vec![2u32, 3]), depth in 1usize..=3, k_off in 0usize..3, seed in prop::collection::vec(0u32..3, 2 * 40)) {
        let f = field_of(q);
        let k = 1 + k_off % q as usize;
        let t = tree_build(&f, depth).unwrap();
        let len = t.input_len(k);
        prop_assume!(2 * len <= seed.len());
        let x: Vec<Elem> = seed[..len].iter().map(|&s| Elem(s % q)).collect();
        let y: Vec<Elem> = seed[len..2 * len].iter().map(|&s| Elem(s % q)).collect();
        let lhs = holographic_encode(&t, k, &vec_add(&f, &x, &y)).unwrap();
        let rhs = vec_add(&f, &holographic_encode(&t, k, &x).unwrap(), &holographic_encode(&t, k, &y).unwrap());
        prop_assert_eq!(lhs, rhs);
        let zero = holographic_encode(&t, k, &vec![Elem::ZERO; len]).unwrap();
        prop_assert_eq!(weight(&zero), 0);
    }

    #[test]
    fn propagation_contains_the_true_section(m in 1usize..=3, coeffs in elems(3, 10), a in 0usize..13, b in 0usize..13, c in 0usize..13) {
        let f = field_of(3);
        let space = SectionSpace::new(&f, m);
        let section = &coeffs[..space.dim()];
        let lines = p2_lines(&f);
        prop_assume!(a != b && a != c && b != c);
        let known = vec![
            restrict_to_line(&space, section, &lines[a]).unwrap(),
            restrict_to_line(&space, section, &lines[b]).unwrap(),
        ];
        prop_assert!(cell_consistency(&f, &known[0], &known[1]).unwrap());
        prop_assert!(cell_consistency(&f, &known[1], &known[0]).unwrap());
        let out = propagate_cell(&space, &known, &lines[c]).unwrap();
        let truth = restrict_to_line(&space, section, &lines[c]).unwrap();
        prop_assert!(out.contains(&f, &truth.values));
    }

    #[test]
    fn vertex_poly_leading_term(alpha in 0u64..20, beta in 0u64..20, coeffs in prop::collection::vec(0u64..20, 4)) {
        let (a, l) = (4, 20);
        let lhs = vertex_poly_encode(a, l, alpha + beta, &coeffs).unwrap();
        let base = vertex_poly_encode(a, l, alpha, &coeffs).unwrap();
        let shift = vertex_poly_encode(a, l, beta, &[0; 4]).unwrap();
        let rhs: Vec<u64> = base.iter().zip(&shift).map(|(x, y)| (x + y) % l).collect();
        prop_assert_eq!(lhs, rhs);
    }
}
