use latinburn::chains::scc_bounds;
use latinburn::groups::FiniteGroup;

use crate::cli::{AnalyzeArgs, Cli};
use crate::error::CliError;
use crate::report::{analyze, AnalysisReport};

use super::{disp, read_square};

pub fn run(cli: &Cli, args: &AnalyzeArgs) -> Result<(), CliError> {
    let sq = read_square(&args.file)?;
    if args.as_group {
        FiniteGroup::from_table(&sq.rows())
            .map_err(|e| CliError::io(format!("{}: {}", args.file.display(), e)))?;
    }
    let report = analyze(&sq, args.oracle, cli.override_guard);
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print_human(&report, cli.human);
    }
    if report.consistent {
        Ok(())
    } else {
        Err(CliError::Verification(
            "analysis found a formula/oracle mismatch".into(),
        ))
    }
}

fn print_human(report: &AnalysisReport, human: bool) {
    let n = report.order;
    println!("order: {}", n);
    if report.degenerate_order_one {
        println!("note: order 1 is degenerate; reporting its special-cased values");
    }
    println!("scc: {}", report.scc);
    if let Some(chain) = &report.scc_witness {
        let cells: Vec<String> = chain
            .squares
            .iter()
            .skip(1)
            .map(|s| format!("{}x{}", s.size(), s.size()))
            .collect();
        println!("  chain: 0x0 -> {}", cells.join(" -> "));
    }
    print_value("mcs", report.mcs, report.mcs_exhaustive);
    print_value("b_L(H_L)", report.bl_hl, report.bl_hl_oracle);
    let seed: Vec<String> = report
        .bl_hl_witness
        .iter()
        .map(|e| format!("({},{})", disp(e.row, human), disp(e.col, human)))
        .collect();
    println!("  witness seed: {}", seed.join(" "));
    print_value("b_L(H^L)", report.bl_h3l, report.bl_h3l_oracle);
    let lines: Vec<String> = report
        .bl_h3l_witness
        .iter()
        .map(|l| {
            let tag = format!("{}", l);
            format!("{}{}", &tag[..1], disp(l.index, human))
        })
        .collect();
    println!("  witness lines: {}", lines.join(" "));
    println!("witnesses: {}", ok(report.witnesses_ok));
    match report.oracles_ok {
        Some(v) => println!("oracles: {}", ok(v)),
        None => println!("oracles: not run (pass --oracle)"),
    }
    println!("duality: {}", ok(report.duality_ok));
    if n >= 2 {
        let (lo, hi) = scc_bounds(n).expect("order checked");
        println!(
            "bounds: {} ({} <= {} <= {})",
            ok(report.bounds_ok),
            lo,
            report.scc,
            hi
        );
    }
    println!("consistent: {}", report.consistent);
}

fn print_value(name: &str, formula: usize, oracle: Option<usize>) {
    match oracle {
        Some(v) => println!("{}: {} (oracle: {})", name, formula, v),
        None => println!("{}: {}", name, formula),
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "MISMATCH"
    }
}
