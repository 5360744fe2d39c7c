//! Property-based and randomized cross-checks: the transform against its
//! algebraic identities, and the counting pipeline against the independent
//! oracles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use witcount_core::candidates::count_candidates_profile_via_inverse;
use witcount_core::generator::random_instance;
use witcount_core::instance::build_char_table;
use witcount_core::oracle::{brute_force_convolution, brute_force_profile, naive_dp_profile};
use witcount_core::partitions::factorial;
use witcount_core::{
    count_candidates_profile, count_witnesses, fwht, inverse_fwht, parse_instance, xor_convolve,
    GF2Vector, Instance, Spectrum,
};

fn spectrum_strategy(dmax: usize) -> impl Strategy<Value = Spectrum> {
    (1usize..=dmax).prop_flat_map(|d| {
        prop::collection::vec(-50i64..=50, 1usize << d)
            .prop_map(move |v| Spectrum::from_integers(d, &v))
    })
}

fn spectrum_pair_strategy(dmax: usize) -> impl Strategy<Value = (Spectrum, Spectrum)> {
    (1usize..=dmax).prop_flat_map(|d| {
        let n = 1usize << d;
        (
            prop::collection::vec(-50i64..=50, n),
            prop::collection::vec(-50i64..=50, n),
        )
            .prop_map(move |(f, g)| {
                (Spectrum::from_integers(d, &f), Spectrum::from_integers(d, &g))
            })
    })
}

/// Instances small enough for exhaustive enumeration: at most 12 vectors,
/// k at most 5, so m^k stays within the oracle guard.
fn small_instance_strategy() -> impl Strategy<Value = Instance> {
    (1usize..=6).prop_flat_map(|d| {
        let cells: Vec<u32> = (0..1u32 << d).collect();
        let max_m = cells.len().min(12);
        (
            proptest::sample::subsequence(cells, 0..=max_m),
            0..1u32 << d,
            0usize..=5,
        )
            .prop_map(move |(vectors, t, k)| {
                Instance::new(
                    d,
                    vectors.into_iter().map(GF2Vector).collect(),
                    GF2Vector(t),
                    k,
                )
                .unwrap()
            })
    })
}

/// Instances with unrestricted density for the DP comparison.
fn dense_instance_strategy() -> impl Strategy<Value = Instance> {
    (1usize..=6).prop_flat_map(|d| {
        let cells: Vec<u32> = (0..1u32 << d).collect();
        let max_m = cells.len();
        (
            proptest::sample::subsequence(cells, 0..=max_m),
            0..1u32 << d,
            0usize..=6,
        )
            .prop_map(move |(vectors, t, k)| {
                Instance::new(
                    d,
                    vectors.into_iter().map(GF2Vector).collect(),
                    GF2Vector(t),
                    k,
                )
                .unwrap()
            })
    })
}

proptest! {
    #[test]
    fn transform_is_self_inverse_up_to_scale(f in spectrum_strategy(6)) {
        let back = inverse_fwht(&fwht(&f)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn transform_is_linear((f, g) in spectrum_pair_strategy(6), a in -9i64..=9, b in -9i64..=9) {
        let d = f.dimension();
        let combo = Spectrum::new(d, (0..1usize << d)
            .map(|i| BigInt::from(a) * &f[i] + BigInt::from(b) * &g[i])
            .collect());
        let fh = fwht(&f);
        let gh = fwht(&g);
        let expected = Spectrum::new(d, (0..1usize << d)
            .map(|i| BigInt::from(a) * &fh[i] + BigInt::from(b) * &gh[i])
            .collect());
        prop_assert_eq!(fwht(&combo), expected);
    }

    #[test]
    fn transform_preserves_energy_up_to_scale(f in spectrum_strategy(6)) {
        // Parseval over the integers: sum F(y)^2 = 2^d sum f(x)^2.
        let d = f.dimension();
        let fh = fwht(&f);
        let input_energy: BigInt = f.values().iter().map(|v| v * v).sum();
        let output_energy: BigInt = fh.values().iter().map(|v| v * v).sum();
        prop_assert_eq!(output_energy, input_energy << d);
    }

    #[test]
    fn convolution_matches_quadratic_definition((f, g) in spectrum_pair_strategy(5)) {
        let direct = brute_force_convolution(&f, &g).unwrap();
        prop_assert_eq!(xor_convolve(&f, &g), direct);
    }

    #[test]
    fn pipeline_agrees_with_enumeration(inst in small_instance_strategy()) {
        let fast = count_witnesses(&inst).unwrap();
        let slow = brute_force_profile(&inst).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn pipeline_agrees_with_naive_dp(inst in dense_instance_strategy()) {
        let fast = count_witnesses(&inst).unwrap();
        let dp = naive_dp_profile(&inst).unwrap();
        prop_assert_eq!(fast.wit(), dp.as_slice());
    }

    #[test]
    fn candidate_shortcut_matches_full_inverse(inst in dense_instance_strategy()) {
        let table = build_char_table(&inst);
        let fast = count_candidates_profile(&table, inst.target(), inst.k()).unwrap();
        let slow = count_candidates_profile_via_inverse(&table, inst.target(), inst.k()).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn witness_counts_divide_by_length_factorials(inst in dense_instance_strategy()) {
        // Witnesses are ordered and closed under permutation, so each count
        // is a multiple of i!.
        let profile = count_witnesses(&inst).unwrap();
        for (i, w) in profile.wit().iter().enumerate() {
            let (_, r) = w.div_rem(&factorial(i));
            prop_assert!(r.is_zero(), "wit[{}] = {} not divisible by {}!", i, w, i);
        }
    }

    #[test]
    fn vector_order_is_irrelevant(inst in dense_instance_strategy()) {
        let baseline = count_witnesses(&inst).unwrap();
        let mut reversed = inst.vectors().to_vec();
        reversed.reverse();
        let mid = reversed.len() / 2;
        if reversed.len() > 2 {
            reversed.swap(0, mid);
        }
        let permuted = Instance::new(
            inst.dimension(),
            reversed,
            inst.target(),
            inst.k(),
        ).unwrap();
        prop_assert_eq!(count_witnesses(&permuted).unwrap(), baseline);
    }

    #[test]
    fn instances_round_trip_through_text(inst in dense_instance_strategy()) {
        let parsed = parse_instance(&inst.to_file_string()).unwrap();
        prop_assert_eq!(parsed, inst);
    }
}

/// A seeded sweep mirroring the CLI's random mode: at every (d, k) in
/// range, full three-way agreement between the pipeline and both oracles.
#[test]
fn seeded_oracle_sweep_agrees_three_ways() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for trial in 0..120 {
        let d = rng.gen_range(1..=6);
        let k = rng.gen_range(0..=5);
        let cap = 1usize << d;
        // Keep m^k within the enumeration guard.
        let max_m = match k {
            0 | 1 => cap,
            _ => cap.min((10_000_000f64.powf(1.0 / k as f64)) as usize),
        };
        let m = rng.gen_range(0..=max_m.min(24));
        let inst = random_instance(&mut rng, d, m, k);

        let fast = count_witnesses(&inst).unwrap();
        let slow = brute_force_profile(&inst).unwrap();
        assert_eq!(fast, slow, "trial {trial}: enumeration disagrees on {inst:?}");
        let dp = naive_dp_profile(&inst).unwrap();
        assert_eq!(
            fast.wit(),
            dp.as_slice(),
            "trial {trial}: DP disagrees on {inst:?}"
        );
    }
}

/// Vacuous inputs that historically attract off-by-one bugs.
#[test]
fn degenerate_instances_behave() {
    // No vectors at all.
    let empty = Instance::new(4, vec![], GF2Vector(0), 3).unwrap();
    let profile = count_witnesses(&empty).unwrap();
    assert_eq!(profile.wit()[0], BigInt::from(1));
    assert!(profile.wit()[1..].iter().all(Zero::is_zero));

    // k exceeding m forces zero witnesses beyond m.
    let inst = Instance::new(3, vec![GF2Vector(1), GF2Vector(2)], GF2Vector(3), 5).unwrap();
    let profile = count_witnesses(&inst).unwrap();
    assert_eq!(profile.wit()[2], BigInt::from(2));
    assert!(profile.wit()[3..].iter().all(Zero::is_zero));

    // Single vector equal to the target.
    let inst = Instance::new(2, vec![GF2Vector(2)], GF2Vector(2), 2).unwrap();
    let profile = count_witnesses(&inst).unwrap();
    assert_eq!(profile.wit(), &[BigInt::zero(), BigInt::from(1), BigInt::zero()]);
}
