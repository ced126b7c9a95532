use cleanideal::audit::{random_ideal, rng};
use cleanideal::core::filtration::prime_filtration;
use cleanideal::core::stanley::from_filtration;
use cleanideal::format::{parse, render_decomposition, render_filtration, render_ideal};
use proptest::prelude::*;

mod common;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rendered_files_parse_back(seed in any::<u64>(), n in 1usize..=4) {
        let i = random_ideal(&mut rng(seed), &common::ring(n), 5, 6);
        prop_assert_eq!(parse(&render_ideal(&i)).unwrap().ideal(), i.clone());

        let f = prime_filtration(&i);
        prop_assert_eq!(parse(&render_filtration(&f)).unwrap().filtration(), f.clone());

        let d = from_filtration(&f).unwrap();
        let back = parse(&render_decomposition(&d)).unwrap().decomposition();
        prop_assert_eq!(back.sorted_spaces(), d.sorted_spaces());
    }

    #[test]
    fn audit_only_reports_tight_filtrations_that_are_not_pretty_clean(seed in any::<u64>()) {
        let i = random_ideal(&mut rng(seed), &common::ring(3), 3, 5);
        let (found, pretty_clean, _) = cleanideal::audit::audit_ideal(&i);
        prop_assert!(pretty_clean);
        prop_assert!(found.iter().all(|(p, _)| *p == "length equals adeg iff pretty clean"), "{:?}", found);
    }
}
