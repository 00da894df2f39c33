//! Cross-checks between independent code paths in the exact layer.

use exact::{rat, QMatrix, QPolynomial, Rat, RootMode};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn small_matrix(max_dim: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_rat(), r * c)
            .prop_map(move |entries| QMatrix::new(r, c, entries).unwrap())
    })
}

/// Horner evaluation of a polynomial at a square matrix.
fn eval_at_matrix(p: &QPolynomial, m: &QMatrix) -> QMatrix {
    let n = m.rows();
    let mut acc = QMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m).unwrap();
        let scaled = QMatrix::identity(n).scale(c);
        acc = acc.add(&scaled).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_rank_matches_naive_rank(m in small_matrix(5)) {
        prop_assert_eq!(m.rank(), m.rank_naive());
    }

    #[test]
    fn rank_plus_kernel_dim_is_cols(m in small_matrix(5)) {
        let (rank, kernel) = m.rank_and_kernel();
        prop_assert_eq!(rank + kernel.len(), m.cols());
        for v in &kernel {
            let image = m.apply(v).unwrap();
            prop_assert!(image.iter().all(|x| x.is_zero()));
        }
        // kernel vectors are independent
        if !kernel.is_empty() {
            let k = QMatrix::from_rows(kernel.clone()).unwrap();
            prop_assert_eq!(k.rank(), kernel.len());
        }
    }

    #[test]
    fn cayley_hamilton(m in small_matrix(4).prop_filter("square", |m| m.is_square())) {
        let p = m.charpoly().unwrap();
        prop_assert!(eval_at_matrix(&p, &m).is_zero());
    }

    #[test]
    fn integer_roots_are_roots_and_modes_nest(
        roots in proptest::collection::vec(-5i64..=5, 1..4),
        extra in small_rat(),
    ) {
        // polynomial with prescribed integer roots times an extra linear factor
        let mut p = QPolynomial::new(vec![extra, rat(1, 1)]);
        for r in &roots {
            p = p.mul(&QPolynomial::new(vec![rat(-r, 1), rat(1, 1)]));
        }
        let any = p.integer_roots(RootMode::AnyInteger).unwrap();
        let nonneg = p.integer_roots(RootMode::NonnegInteger).unwrap();
        for r in &roots {
            prop_assert!(any.contains(&BigInt::from(*r)));
        }
        for r in &any {
            prop_assert!(p.eval(&Rat::from(r.clone())).is_zero());
        }
        for r in &nonneg {
            prop_assert!(any.contains(r));
            prop_assert!(r >= &BigInt::zero());
        }
    }
}
