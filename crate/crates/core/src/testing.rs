use proptest::prelude::*;

use crate::term::Term;

pub(crate) fn arb_term(max_var: u32, max_index: u32) -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![Just(Term::Zero), Just(Term::One), (1..=max_var).prop_map(Term::Var)];
    leaf.prop_recursive(6, 48, 2, move |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::and(a, b)),
            inner.clone().prop_map(Term::neg),
            (1..=max_index, inner.clone()).prop_map(|(i, a)| Term::delta(i, a)),
            (0..=max_index, inner).prop_map(|(i, a)| Term::jay(i, a)),
        ]
    })
}
