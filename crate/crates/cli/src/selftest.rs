//! The `selftest` command: a quick built-in battery over all pipeline
//! stages, printing one line per check. Meant for smoke-testing a build in
//! the field without the test harness.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use witcount_core::generator::random_instance;
use witcount_core::oracle::{
    brute_force_convolution, brute_force_profile, enumerate_partitions, naive_dp_profile,
};
use witcount_core::partitions::{build_parity_tables, unordered_parity_count};
use witcount_core::{
    count_perfect_matchings, count_witnesses, fwht, inverse_fwht, xor_convolve, GF2Vector,
    Hypergraph, Instance, Spectrum,
};

type Check = (&'static str, fn() -> Result<(), String>);

fn check_transform_identities() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for d in 1..=5 {
        for _ in 0..20 {
            let f = Spectrum::new(
                d,
                (0..1usize << d)
                    .map(|_| BigInt::from(rng.gen_range(-50i64..=50)))
                    .collect(),
            );
            let back = inverse_fwht(&fwht(&f)).map_err(|e| e.to_string())?;
            if back != f {
                return Err(format!("transform not self-inverse at d={d}"));
            }
        }
    }
    Ok(())
}

fn check_convolution() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for d in 1..=4 {
        for _ in 0..10 {
            let table = |rng: &mut ChaCha8Rng| {
                Spectrum::new(
                    d,
                    (0..1usize << d)
                        .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                        .collect(),
                )
            };
            let f = table(&mut rng);
            let g = table(&mut rng);
            let direct = brute_force_convolution(&f, &g).map_err(|e| e.to_string())?;
            if xor_convolve(&f, &g) != direct {
                return Err(format!("convolution mismatch at d={d}"));
            }
        }
    }
    Ok(())
}

fn check_micro_profiles() -> Result<(), String> {
    let expect = |got: &[BigInt], want: &[i64], what: &str| -> Result<(), String> {
        let want: Vec<BigInt> = want.iter().map(|&v| BigInt::from(v)).collect();
        if got != want.as_slice() {
            return Err(format!("{what}: got {got:?}, want {want:?}"));
        }
        Ok(())
    };

    let inst = Instance::new(
        2,
        vec![GF2Vector(1), GF2Vector(2), GF2Vector(3)],
        GF2Vector(0),
        3,
    )
    .unwrap();
    let profile = count_witnesses(&inst).map_err(|e| e.to_string())?;
    expect(profile.wit(), &[1, 0, 0, 6], "triples to zero")?;

    let inst = Instance::new(
        2,
        vec![GF2Vector(1), GF2Vector(2), GF2Vector(3)],
        GF2Vector(1),
        3,
    )
    .unwrap();
    let profile = count_witnesses(&inst).map_err(|e| e.to_string())?;
    expect(profile.cand(), &[0, 1, 2, 7], "cand to 01")?;
    expect(profile.fail(), &[0, 0, 0, 7], "fail to 01")?;

    let inst = Instance::new(1, vec![GF2Vector(0), GF2Vector(1)], GF2Vector(0), 2).unwrap();
    let profile = count_witnesses(&inst).map_err(|e| e.to_string())?;
    expect(profile.cand(), &[1, 1, 2], "pair cand")?;
    expect(profile.wit(), &[1, 1, 0], "pair wit")?;
    Ok(())
}

fn check_partition_tables() -> Result<(), String> {
    for kp in 0..=6 {
        let list = enumerate_partitions(kp).map_err(|e| e.to_string())?;
        let tables = build_parity_tables(kp);
        for ((e, o), want) in list.parity_histogram() {
            let got = unordered_parity_count(&tables, e, o, kp).map_err(|e| e.to_string())?;
            if got != BigInt::from(want) {
                return Err(format!(
                    "parity count ({e}, {o}) of {kp}: got {got}, want {want}"
                ));
            }
        }
    }
    Ok(())
}

fn check_matchings() -> Result<(), String> {
    let expect = |graph: &Hypergraph, want: i64, what: &str| -> Result<(), String> {
        let got = count_perfect_matchings(graph).map_err(|e| e.to_string())?;
        if got != BigInt::from(want) {
            return Err(format!("{what}: got {got}, want {want}"));
        }
        Ok(())
    };

    let k4 = Hypergraph::new(
        4,
        2,
        vec![
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3],
        ],
    )
    .unwrap();
    expect(&k4, 3, "complete graph on 4")?;

    let c4 = Hypergraph::new(4, 2, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap();
    expect(&c4, 2, "4-cycle")?;

    let mut triples = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                triples.push(vec![a, b, c]);
            }
        }
    }
    let complete3 = Hypergraph::new(6, 3, triples).unwrap();
    expect(&complete3, 10, "complete 3-uniform on 6")?;
    Ok(())
}

fn check_oracle_agreement() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for trial in 0..25 {
        let d = rng.gen_range(1..=5);
        let k = rng.gen_range(0..=4);
        let m = rng.gen_range(0..=(1usize << d).min(10));
        let inst = random_instance(&mut rng, d, m, k);
        let fast = count_witnesses(&inst).map_err(|e| e.to_string())?;
        let slow = brute_force_profile(&inst).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("enumeration mismatch on trial {trial}"));
        }
        let dp = naive_dp_profile(&inst).map_err(|e| e.to_string())?;
        if fast.wit() != dp.as_slice() {
            return Err(format!("DP mismatch on trial {trial}"));
        }
    }
    Ok(())
}

/// Runs every check, printing one status line each. Returns the number of
/// failures.
pub fn run_selftest() -> usize {
    let checks: &[Check] = &[
        ("transform identities", check_transform_identities),
        ("xor convolution", check_convolution),
        ("micro witness profiles", check_micro_profiles),
        ("partition parity tables", check_partition_tables),
        ("perfect matchings", check_matchings),
        ("oracle agreement", check_oracle_agreement),
    ];
    let mut failures = 0;
    for (name, check) in checks {
        match check() {
            Ok(()) => println!("selftest {name}: ok"),
            Err(reason) => {
                failures += 1;
                println!("selftest {name}: FAILED ({reason})");
            }
        }
    }
    if failures == 0 {
        println!("selftest: all {} checks passed", checks.len());
    } else {
        println!("selftest: {failures} of {} checks failed", checks.len());
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtin_checks_pass() {
        assert_eq!(run_selftest(), 0);
    }
}
