use lieder_core::catalog::random_nilpotent;
use lieder_core::leibniz::{is_leibniz_derivation, verify_bracket_closure, LeibnizSolver};
use lieder_core::nilpotency::{construct_semisimple_lder, nilpotency_by_main_theorem, Verdict};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solver_basis_satisfies_the_identity(seed in any::<u64>(), k in 1usize..=3) {
        let g = random_nilpotent(seed, 4);
        let s = LeibnizSolver::new(&g);
        let space = s.lder(k).unwrap();
        for p in space.basis_matrices() {
            prop_assert!(is_leibniz_derivation(&g, &p, k).unwrap());
        }
        prop_assert!(verify_bracket_closure(&space));
        prop_assert!(s.lder(2 * k).unwrap().space.contains(&space.space).unwrap());
    }

    #[test]
    fn nilpotent_algebras_have_invertible_elements(seed in any::<u64>()) {
        let g = random_nilpotent(seed, 5);
        let c = nilpotency_by_main_theorem(&LeibnizSolver::new(&g), 20, seed).unwrap();
        prop_assert_eq!(c.verdict, Verdict::Nilpotent);
        let p = construct_semisimple_lder(&g).unwrap();
        prop_assert!(!p.operator.det().unwrap().is_zero());
        prop_assert!(is_leibniz_derivation(&g, &p.operator, p.order).unwrap());
    }
}
