//! Handlers for the file-driven commands: `count`, `candidates`, and
//! `matchings`. Each reads its input, runs the pipeline with the op tally
//! reset, and produces a serializable report.

use std::path::Path;
use std::time::Instant;

use witcount_core::instance::{build_char_table, ParseOptions};
use witcount_core::{
    count_candidates_profile, count_perfect_matchings, count_witnesses, parse_hypergraph,
    parse_instance_with, ops,
};

use crate::error::CliError;
use crate::report::{decimal_strings, InstanceSummary, MatchingReport, RunReport, Timing};

#[derive(Copy, Clone, Debug)]
pub struct CountOptions {
    pub cumulative: bool,
    pub dedupe: bool,
    pub dimension_cap: usize,
    /// Skip the failure correction and report candidates only.
    pub candidates_only: bool,
}

fn ms(from: Instant) -> f64 {
    from.elapsed().as_secs_f64() * 1e3
}

pub fn run_count(path: &Path, opts: CountOptions) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let instance = parse_instance_with(
        &text,
        ParseOptions {
            dedupe: opts.dedupe,
            dimension_cap: opts.dimension_cap,
        },
    )?;
    let parse_ms = ms(started);

    let summary = InstanceSummary {
        d: instance.dimension(),
        m: instance.vector_count(),
        k: instance.k(),
        t: instance.target().bitstring(instance.dimension()),
    };

    ops::reset();
    let counting = Instant::now();
    let report = if opts.candidates_only {
        let table = build_char_table(&instance);
        let profile = count_candidates_profile(&table, instance.target(), instance.k())?;
        let count_ms = ms(counting);
        RunReport {
            instance: summary,
            cand: decimal_strings(profile.counts()),
            fail: None,
            wit: None,
            cumulative_wit: None,
            ops: ops::total(),
            timing: Timing {
                parse_ms,
                count_ms,
                total_ms: ms(started),
            },
        }
    } else {
        let profile = count_witnesses(&instance)?;
        let count_ms = ms(counting);
        RunReport {
            instance: summary,
            cand: decimal_strings(profile.cand()),
            fail: Some(decimal_strings(profile.fail())),
            wit: Some(decimal_strings(profile.wit())),
            cumulative_wit: opts
                .cumulative
                .then(|| decimal_strings(&profile.cumulative_wit())),
            ops: ops::total(),
            timing: Timing {
                parse_ms,
                count_ms,
                total_ms: ms(started),
            },
        }
    };
    Ok(report)
}

pub fn run_matchings(path: &Path) -> Result<MatchingReport, CliError> {
    let started = Instant::now();
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let graph = parse_hypergraph(&text)?;
    let parse_ms = ms(started);

    ops::reset();
    let counting = Instant::now();
    let matchings = count_perfect_matchings(&graph)?;
    let count_ms = ms(counting);

    let divisible = graph.vertex_count() % graph.uniformity() == 0;
    Ok(MatchingReport {
        n: graph.vertex_count(),
        l: graph.uniformity(),
        edges: graph.edge_count(),
        matchings: matchings.to_string(),
        reason: (!divisible).then(|| "n not divisible by l".to_string()),
        ops: ops::total(),
        timing: Timing {
            parse_ms,
            count_ms,
            total_ms: ms(started),
        },
    })
}
