use std::path::PathBuf;

use latinburn::verify::{
    suite_bounds, suite_characterization, suite_cyclic, suite_examples, suite_exhaustive,
    suite_groups, suite_intercalates, suite_order_five, suite_roundtrips, SuiteResult,
    VerifyOptions,
};

use crate::cli::{Cli, VerifyArgs};
use crate::error::CliError;

pub fn run(cli: &Cli, args: &VerifyArgs) -> Result<(), CliError> {
    let mut opts = VerifyOptions::default();
    if let Some(n) = cli.max_order {
        opts.max_order = n;
    }
    if let Some(n) = args.n_max {
        opts.cyclic_max = n;
    }
    if let Some(n) = args.samples {
        opts.samples = n;
    }
    if let Some(s) = cli.seed.as_deref() {
        opts.seed = s
            .parse::<u64>()
            .map_err(|_| CliError::usage(format!("--seed {:?} is not a u64", s)))?;
    }

    let any_flag = args.exhaustive
        || args.order5
        || args.cyclic
        || args.ipow
        || args.bounds
        || args.characterization
        || args.examples
        || args.groups
        || args.roundtrip;
    let all = args.all || !any_flag;

    let mut results: Vec<SuiteResult> = Vec::new();
    if all || args.exhaustive {
        results.push(suite_exhaustive(&opts));
    }
    if all || args.order5 {
        results.push(suite_order_five(&opts));
    }
    if all || args.cyclic {
        results.push(suite_cyclic(&opts));
    }
    if all || args.ipow {
        results.push(suite_intercalates(&opts));
    }
    if all || args.bounds {
        results.push(suite_bounds(&opts));
    }
    if all || args.characterization {
        results.push(suite_characterization(&opts));
    }
    if all || args.examples {
        results.push(suite_examples());
    }
    if all || args.groups {
        results.push(suite_groups(&opts));
    }
    if all || args.roundtrip {
        results.push(suite_roundtrips(&opts));
    }

    let mut failed = false;
    for result in &results {
        if result.passed() {
            println!("suite {}: PASS ({} checks)", result.name, result.checks);
        } else {
            failed = true;
            let failure = &result.failures[0];
            println!("suite {}: FAIL — {}", result.name, failure.message);
            dump_counterexample(result, args.dump_dir.clone());
        }
    }
    if cli.json {
        let summary: Vec<serde_json::Value> = results
            .iter()
            .map(|r| {
                serde_json::json!({
                    "suite": r.name,
                    "passed": r.passed(),
                    "checks": r.checks,
                    "failure": r.failures.first().map(|f| &f.message),
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&summary).expect("serializes")
        );
    }
    if failed {
        Err(CliError::Verification(
            "one or more verification suites failed".into(),
        ))
    } else {
        Ok(())
    }
}

fn dump_counterexample(result: &SuiteResult, dir: Option<PathBuf>) {
    let failure = match result.failures.first() {
        Some(f) => f,
        None => return,
    };
    let dir = dir.unwrap_or_else(|| PathBuf::from("."));
    if let Some(square) = &failure.square {
        let path = dir.join(format!("counterexample-{}.ls", result.name));
        if std::fs::write(&path, square).is_ok() {
            println!("  counterexample square written to {}", path.display());
        }
    }
    let detail = serde_json::json!({
        "suite": result.name,
        "message": failure.message,
        "witness": failure.witness,
    });
    let path = dir.join(format!("counterexample-{}.json", result.name));
    if std::fs::write(
        &path,
        serde_json::to_string_pretty(&detail).expect("serializes"),
    )
    .is_ok()
    {
        println!("  counterexample detail written to {}", path.display());
    }
}
