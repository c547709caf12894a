use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use proptest::prelude::*;

use sturmian::christoffel::{christoffel_by_directive, christoffel_by_slope, recognize};
use sturmian::continuant::{christoffel_length_cf, continuant};
use sturmian::palindrome::{min_period_central, pal_closure, period_pair, psi, psi_inverse};
use sturmian::stern::{
    cs_decompose, stern, stern_via_christoffel, stern_via_integral_continuant, stern_via_subwords,
};
use sturmian::tree::{nu, nu_inverse, path_of_fraction, raney, stern_brocot, Flavor};
use sturmian::word::{subword_binomial, subword_occurrences, Letter, Word};

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len)
        .prop_map(|bits| bits.into_iter().map(Letter::from_digit).collect())
}

proptest! {
    #[test]
    fn psi_is_a_palindrome_of_predicted_length(v in word(18)) {
        let p = psi(&v).unwrap();
        prop_assert!(p.is_palindrome());
        prop_assert_eq!(BigUint::from(p.len()), period_pair(&v).central_len());
        prop_assert_eq!(psi_inverse(&p).unwrap(), v.clone());
        prop_assert_eq!(psi(&v.complement()).unwrap(), p.complement());
    }

    #[test]
    fn psi_is_iterated_closure(v in word(12)) {
        let mut acc = Word::empty();
        for &x in v.letters() {
            acc.push(x);
            acc = pal_closure(&acc);
        }
        prop_assert_eq!(psi(&v).unwrap(), acc);
    }

    #[test]
    fn slope_and_directive_constructions_agree(p in 1u64..400, q in 1u64..400) {
        prop_assume!(p.gcd(&q) == 1);
        let by_slope = christoffel_by_slope(p, q).unwrap();
        let v = by_slope.directive.clone().unwrap();
        let by_directive = christoffel_by_directive(&v).unwrap();
        prop_assert_eq!(&by_slope.word, &by_directive.word);
        prop_assert_eq!(&by_slope.slope, &by_directive.slope);
        prop_assert_eq!(by_slope.word.count(Letter::B) as u64, p);
        prop_assert_eq!(by_slope.word.count(Letter::A) as u64, q);
        prop_assert!(by_slope.word.is_lyndon());
        prop_assert_eq!(recognize(&by_slope.word).map(|c| c.word), Some(by_slope.word));
    }

    #[test]
    fn continuants_are_reversal_symmetric(xs in prop::collection::vec(-6i64..=6, 0..12)) {
        let mut rev = xs.clone();
        rev.reverse();
        prop_assert_eq!(continuant(&xs), continuant(&rev));
    }

    #[test]
    fn continuant_lengths_match_period_pair(v in word(40)) {
        let (len, period) = christoffel_length_cf(&v);
        prop_assert_eq!(len, period_pair(&v).christoffel_len());
        if v.len() <= 14 {
            prop_assert_eq!(period, min_period_central(&v));
        }
    }

    #[test]
    fn stern_evaluators_agree_on_large_arguments(n in 0u64..(1u64 << 50)) {
        let n = BigUint::from(n);
        let s = stern(&n);
        prop_assert_eq!(stern_via_christoffel(&n), s.clone());
        prop_assert_eq!(stern_via_subwords(&n), s);
    }

    #[test]
    fn integral_continuant_gives_stern_at_nu(v in word(30)) {
        prop_assert_eq!(stern_via_integral_continuant(&v), stern(&nu(&v)));
    }

    #[test]
    fn tree_paths_round_trip(v in word(40)) {
        prop_assert_eq!(nu_inverse(&nu(&v)).unwrap(), v.clone());
        prop_assert_eq!(path_of_fraction(&raney(&v), Flavor::Raney).unwrap(), v.clone());
        prop_assert_eq!(path_of_fraction(&stern_brocot(&v), Flavor::SternBrocot).unwrap(), v.clone());
        prop_assert_eq!(stern_brocot(&v), raney(&v.reverse()));
    }

    #[test]
    fn coons_shallit_total(v in word(16)) {
        prop_assert_eq!(cs_decompose(&v).total(), period_pair(&v).christoffel_len());
    }

    #[test]
    fn binary_encoding_round_trips(n in 0u64..(1u64 << 40)) {
        let w = Word::decode_u64(n);
        prop_assert_eq!(w.encode(), BigUint::from(n));
    }

    #[test]
    fn subword_counts_match_enumeration(host in word(12), u in word(4)) {
        let occ = subword_occurrences(&host, &u, 1 << 20).unwrap();
        prop_assert_eq!(BigUint::from(occ.len()), subword_binomial(&host, &u));
        for o in &occ {
            let spelled: Word = o.positions.iter().map(|&p| host[p - 1]).collect();
            prop_assert_eq!(&spelled, &u);
            prop_assert!(o.positions.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn signed_continuants_fit_recurrence(xs in prop::collection::vec(-9i64..=9, 2..10)) {
        let n = xs.len();
        let expected = BigInt::from(xs[n - 1]) * continuant(&xs[..n - 1]) + continuant(&xs[..n - 2]);
        prop_assert_eq!(continuant(&xs), expected);
    }
}
