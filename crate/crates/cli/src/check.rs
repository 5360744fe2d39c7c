//! The `oracle-check` command: recompute profiles with the independent
//! oracles and demand exact agreement, either on one instance file or on a
//! stream of seeded random instances with sizes clamped to the oracles'
//! guards.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use witcount_core::generator::random_instance;
use witcount_core::oracle::{brute_force_profile, naive_dp_profile, NAIVE_DP_GUARD};
use witcount_core::witness::WitnessProfile;
use witcount_core::{count_witnesses, Instance};

use crate::error::CliError;

/// Tuple budget per random instance, kept well under the enumeration
/// oracle's guard so a whole sweep stays fast.
const RANDOM_TUPLE_BUDGET: u64 = 1_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RandomCheckParams {
    pub seed: u64,
    pub count: usize,
    pub dmax: usize,
    pub kmax: usize,
}

/// Parses trailing `key=value` arguments (`seed=`, `count=`, `dmax=`,
/// `kmax=`), starting from defaults.
pub fn parse_random_params(
    args: &[String],
    default_seed: u64,
) -> Result<RandomCheckParams, CliError> {
    let mut params = RandomCheckParams {
        seed: default_seed,
        count: 100,
        dmax: 6,
        kmax: 5,
    };
    for arg in args {
        let (key, value) = arg.split_once('=').ok_or_else(|| {
            CliError::Usage(format!(
                "expected key=value (one of seed=, count=, dmax=, kmax=), got {arg:?}"
            ))
        })?;
        let parse = |what: &str| -> Result<u64, CliError> {
            value
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("invalid integer {value:?} for {what}")))
        };
        match key {
            "seed" => params.seed = parse("seed")?,
            "count" => params.count = parse("count")? as usize,
            "dmax" => params.dmax = parse("dmax")? as usize,
            "kmax" => params.kmax = parse("kmax")? as usize,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown parameter {other:?} (expected seed=, count=, dmax=, kmax=)"
                )))
            }
        }
    }
    if params.dmax == 0 || params.dmax > witcount_core::MAX_DIMENSION {
        return Err(CliError::Usage(format!(
            "dmax must be in 1..={}, got {}",
            witcount_core::MAX_DIMENSION,
            params.dmax
        )));
    }
    Ok(params)
}

/// Compares the fast profile against both oracles. `None` means agreement;
/// otherwise a human-readable description of the first difference.
pub fn compare_profiles(
    fast: &WitnessProfile,
    enumerated: &WitnessProfile,
    dp_wit: &[BigInt],
) -> Option<String> {
    let sections: [(&str, &[BigInt], &[BigInt]); 3] = [
        ("cand", fast.cand(), enumerated.cand()),
        ("fail", fast.fail(), enumerated.fail()),
        ("wit", fast.wit(), enumerated.wit()),
    ];
    for (name, fast_values, slow_values) in sections {
        if fast_values != slow_values {
            return Some(format!(
                "{name} profile disagrees with enumeration\n  fast: {fast_values:?}\n  slow: {slow_values:?}"
            ));
        }
    }
    if fast.wit() != dp_wit {
        return Some(format!(
            "wit profile disagrees with the naive DP\n  fast: {:?}\n  dp:   {dp_wit:?}",
            fast.wit()
        ));
    }
    None
}

/// Runs all three counters on one instance. `Ok(None)` is agreement;
/// `Ok(Some(text))` describes a mismatch and includes the instance.
pub fn check_instance(instance: &Instance) -> Result<Option<String>, CliError> {
    let fast = count_witnesses(instance)?;
    let enumerated = brute_force_profile(instance)?;
    let dp = naive_dp_profile(instance)?;
    Ok(compare_profiles(&fast, &enumerated, &dp).map(|description| {
        format!(
            "{description}\ninstance:\n{}",
            instance.to_file_string()
        )
    }))
}

/// Largest m with m^k within the tuple budget.
fn enumeration_clamp(k: usize) -> usize {
    if k <= 1 {
        return RANDOM_TUPLE_BUDGET as usize;
    }
    let mut m = (RANDOM_TUPLE_BUDGET as f64).powf(1.0 / k as f64) as usize + 1;
    while m > 0 {
        let fits = (0..k).try_fold(1u64, |acc, _| {
            acc.checked_mul(m as u64)
                .filter(|&v| v <= RANDOM_TUPLE_BUDGET)
        });
        if fits.is_some() {
            break;
        }
        m -= 1;
    }
    m
}

/// Generates one oracle-eligible random instance: d uniform in [1, dmax],
/// k uniform in [0, kmax], m clamped so both oracles accept.
pub fn random_checkable_instance(
    rng: &mut ChaCha8Rng,
    dmax: usize,
    kmax: usize,
) -> Instance {
    let d = rng.gen_range(1..=dmax);
    let k = rng.gen_range(0..=kmax);
    let space = 1usize << d;
    let dp_clamp = (NAIVE_DP_GUARD / ((1u64 << d) * k.max(1) as u64)) as usize;
    let max_m = space.min(enumeration_clamp(k)).min(dp_clamp);
    let m = rng.gen_range(0..=max_m);
    random_instance(rng, d, m, k)
}

pub struct CheckSummary {
    pub checked: usize,
}

/// Random sweep. On the first mismatch returns `Err` with the full dump;
/// the caller maps that onto exit code 1.
pub fn run_random_check(params: RandomCheckParams) -> Result<CheckSummary, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for index in 0..params.count {
        let instance = random_checkable_instance(&mut rng, params.dmax, params.kmax);
        match check_instance(&instance) {
            Ok(None) => {}
            Ok(Some(mismatch)) => {
                return Err(format!("mismatch on instance {index}:\n{mismatch}"))
            }
            Err(e) => return Err(format!("error on instance {index}: {e}")),
        }
    }
    Ok(CheckSummary {
        checked: params.count,
    })
}
