use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use symcover::characters::{character_table, decompose, hook_length_degree, sigma};
use symcover::covering::{ccn_char, tworow_split_sequence};
use symcover::kronecker::kron_coeff;
use symcover::partitions::enumerate_partitions;
use symcover::tableaux::{kostka, lr_coefficient};
use symcover::Partition;

// Independent oracles --------------------------------------------------------

/// Standard Young tableaux of shape `l`, by removing the largest entry.
fn syt_count(l: &[usize], memo: &mut BTreeMap<Vec<usize>, u128>) -> u128 {
    if l.iter().sum::<usize>() <= 1 {
        return 1;
    }
    if let Some(&v) = memo.get(l) {
        return v;
    }
    let mut total = 0;
    for i in 0..l.len() {
        if l.get(i + 1).is_none_or(|&next| next < l[i]) {
            let mut smaller = l.to_vec();
            smaller[i] -= 1;
            if smaller[i] == 0 {
                smaller.pop();
            }
            total += syt_count(&smaller, memo);
        }
    }
    memo.insert(l.to_vec(), total);
    total
}

fn f(l: &Partition) -> u128 {
    syt_count(l.parts(), &mut BTreeMap::new())
}

fn binom(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn fact(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Conjugate by counting parts at least `j`, written without the library.
fn transpose(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|j| parts.iter().filter(|&&p| p >= j).count())
        .collect()
}

/// Dominance on partitions of the same weight.
fn dominates(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    (0..a.len().max(b.len())).all(|i| {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        sa >= sb
    })
}

// Strategies -----------------------------------------------------------------

fn partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let all = enumerate_partitions(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn partition(lo: usize, hi: usize) -> impl Strategy<Value = Partition> {
    (lo..=hi).prop_flat_map(partition_of)
}

fn pair(lo: usize, hi: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (lo..=hi).prop_flat_map(|n| (partition_of(n), partition_of(n)))
}

fn triple(lo: usize, hi: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (lo..=hi).prop_flat_map(|n| (partition_of(n), partition_of(n), partition_of(n)))
}

/// `(lambda, mu, nu)` with `|mu| + |nu| = |lambda|`.
fn lr_triple(hi: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (2..=hi)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, m)| (partition_of(n), partition_of(m), partition_of(n - m)))
}

// Partitions -----------------------------------------------------------------

proptest! {
    #[test]
    fn conjugation_is_an_involution(l in partition(0, 20)) {
        let c = l.conjugate();
        prop_assert_eq!(c.parts().to_vec(), transpose(l.parts()));
        prop_assert_eq!(c.weight(), l.weight());
        prop_assert_eq!(c.conjugate(), l.clone());
        prop_assert_eq!(c.durfee_rank(), l.durfee_rank());
    }

    #[test]
    fn conjugation_reverses_dominance((a, b) in pair(1, 12)) {
        prop_assert_eq!(a.dominates(&b).unwrap(), dominates(a.parts(), b.parts()));
        prop_assert_eq!(a.dominates(&b).unwrap(), b.conjugate().dominates(&a.conjugate()).unwrap());
    }

    #[test]
    fn display_parses_back(l in partition(0, 25)) {
        let text = l.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), l.clone());
        let bare = text.trim_start_matches('[').trim_end_matches(']');
        prop_assert_eq!(bare.parse::<Partition>().unwrap(), l);
    }

    #[test]
    fn json_round_trip(l in partition(0, 25)) {
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), l.clone());
        let array = serde_json::to_string(l.parts()).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&array).unwrap(), l);
    }

    #[test]
    fn enumeration_is_strictly_descending(n in 0usize..16) {
        let all = enumerate_partitions(n);
        prop_assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        prop_assert!(all.iter().all(|p| p.weight() == n));
    }
}

// Characters -----------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_matches_hook_formula_and_tableau_count(l in partition(1, 12)) {
        let t = character_table(l.weight()).unwrap();
        let row = t.position(&l).unwrap();
        prop_assert_eq!(BigInt::from(t.degree(row)), BigInt::from(hook_length_degree(&l)));
        prop_assert_eq!(t.degree(row) as u128, f(&l));
    }

    #[test]
    fn conjugate_row_is_sign_twist((l, mu) in pair(1, 11)) {
        let t = character_table(l.weight()).unwrap();
        let sign = if (mu.weight() - mu.len()) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(t.get(&l.conjugate(), &mu).unwrap(), sign * t.get(&l, &mu).unwrap());
    }

    #[test]
    fn kostka_unitriangular_and_standard((a, b) in pair(1, 9)) {
        let k = kostka(&a, &b).unwrap();
        prop_assert_eq!(k > 0, dominates(a.parts(), b.parts()));
        prop_assert_eq!(kostka(&a, &a).unwrap(), 1);
        prop_assert_eq!(kostka(&a, &Partition::column(a.weight())).unwrap() as u128, f(&a));
    }

    #[test]
    fn permutation_character_follows_kostka(mu in partition(1, 8)) {
        let n = mu.weight();
        let parts = decompose(&sigma(&mu).unwrap()).unwrap();
        for l in enumerate_partitions(n) {
            let m = parts.get(&l).cloned().unwrap_or_default();
            prop_assert_eq!(m, BigInt::from(kostka(&l, &mu).unwrap()));
        }
        let degree: u128 = fact(n) / mu.parts().iter().map(|&p| fact(p)).product::<u128>();
        let by_rule: u128 = parts.iter().map(|(l, m)| u128::try_from(m).unwrap() * f(l)).sum();
        prop_assert_eq!(by_rule, degree);
    }

    #[test]
    fn lr_symmetries((l, mu, nu) in lr_triple(9)) {
        let c = lr_coefficient(&l, &mu, &nu).unwrap();
        prop_assert_eq!(c, lr_coefficient(&l, &nu, &mu).unwrap());
        prop_assert_eq!(c, lr_coefficient(&l.conjugate(), &mu.conjugate(), &nu.conjugate()).unwrap());
    }

    #[test]
    fn lr_degree_identity((mu, nu) in (1usize..=5, 1usize..=4).prop_flat_map(|(a, b)| (partition_of(a), partition_of(b)))) {
        let n = mu.weight() + nu.weight();
        let total: u128 = enumerate_partitions(n)
            .iter()
            .map(|l| lr_coefficient(l, &mu, &nu).unwrap() as u128 * f(l))
            .sum();
        prop_assert_eq!(total, binom(n, mu.weight()) * f(&mu) * f(&nu));
    }

    #[test]
    fn kronecker_symmetries((a, b, c) in triple(1, 9)) {
        let g = kron_coeff(&a, &b, &c).unwrap();
        for (x, y, z) in [(&b, &a, &c), (&c, &b, &a), (&a, &c, &b)] {
            prop_assert_eq!(kron_coeff(x, y, z).unwrap(), g);
        }
        prop_assert_eq!(kron_coeff(&a.conjugate(), &b.conjugate(), &c).unwrap(), g);
        prop_assert_eq!(kron_coeff(&a.conjugate(), &b, &c.conjugate()).unwrap(), g);
    }

    #[test]
    fn kronecker_with_linear_characters((a, b) in pair(1, 9)) {
        let n = a.weight();
        prop_assert_eq!(kron_coeff(&a, &b, &Partition::row(n)).unwrap(), u64::from(a == b));
        prop_assert_eq!(kron_coeff(&a, &b, &Partition::column(n)).unwrap(), u64::from(a == b.conjugate()));
    }

    #[test]
    fn kronecker_degree_identity((a, b) in pair(1, 8)) {
        let total: u128 = enumerate_partitions(a.weight())
            .iter()
            .map(|l| kron_coeff(&a, &b, l).unwrap() as u128 * f(l))
            .sum();
        prop_assert_eq!(total, f(&a) * f(&b));
    }
}

// Covering -------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn covering_number_is_conjugation_invariant(l in partition(2, 9)) {
        let n = l.weight();
        prop_assert_eq!(ccn_char(&l, 2 * n).unwrap().result, ccn_char(&l.conjugate(), 2 * n).unwrap().result);
    }

    #[test]
    fn covering_powers_grow(l in partition(2, 9)) {
        let run = ccn_char(&l, 2 * l.weight()).unwrap();
        if run.result.value().is_some() {
            prop_assert!(run.power_sizes.windows(2).all(|w| w[0] <= w[1]));
            prop_assert_eq!(*run.power_sizes.last().unwrap(), enumerate_partitions(l.weight()).len());
        }
    }

    #[test]
    fn split_sequences_are_legal((n, k) in (4usize..=200).prop_flat_map(|n| (Just(n), 1..=n.isqrt().min(n / 2)))) {
        let seq = tworow_split_sequence(n, k).unwrap();
        seq.validate().unwrap();
        prop_assert_eq!(seq.len(), (2 * (n - 1)).div_ceil(k + 1));
        prop_assert!(seq.steps.iter().all(|s| s.weight() == n));
    }
}
