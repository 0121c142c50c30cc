use crate::cli::{BurnArgs, BurnMode, Cli};
use crate::error::CliError;
use crate::spec::{parse_entry_seed, parse_line_seed};
use latinburn::burning::{build_h3l, build_hl, lazy_burn, Hypergraph, VertexLabel};

use super::{disp, read_square};

pub fn run(cli: &Cli, args: &BurnArgs) -> Result<(), CliError> {
    let sq = read_square(&args.file)?;
    let seed_spec = cli.seed.as_deref().unwrap_or("");
    let (h, seed) = match args.mode {
        BurnMode::Hl => {
            let entries = parse_entry_seed(&sq, seed_spec)?;
            let seed = entries.iter().map(|e| sq.entry_vertex(e)).collect();
            (build_hl(&sq), seed)
        }
        BurnMode::H3l => {
            let lines = parse_line_seed(&sq, seed_spec)?;
            let seed: Vec<usize> = lines.iter().map(|l| l.vertex_index(sq.order())).collect();
            (build_h3l(&sq), seed)
        }
    };
    let trace = lazy_burn(&h, &seed).map_err(CliError::usage)?;
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&trace.to_json(&h)).expect("serializes")
        );
        return Ok(());
    }

    println!(
        "mode: {}",
        if args.mode == BurnMode::Hl {
            "HL"
        } else {
            "H3L"
        }
    );
    println!(
        "seed ({}): {}",
        trace.seed.len(),
        label_list(&h, &trace.seed, cli.human)
    );
    for (i, round) in trace.rounds.iter().enumerate() {
        println!("round {}: {}", i + 1, label_list(&h, round, cli.human));
    }
    println!(
        "complete: {} ({} vertices burned in {} propagation rounds)",
        trace.complete,
        trace.burned_count(),
        trace.rounds_executed()
    );
    Ok(())
}

fn label_list(h: &Hypergraph, vertices: &[usize], human: bool) -> String {
    let parts: Vec<String> = vertices
        .iter()
        .map(|&v| match h.label(v) {
            Some(VertexLabel::Entry(e)) => format!(
                "({},{},{})",
                disp(e.row, human),
                disp(e.col, human),
                disp(e.sym, human)
            ),
            Some(VertexLabel::Line(l)) => {
                let tag = format!("{}", l);
                format!("{}{}", &tag[..1], disp(l.index, human))
            }
            None => format!("{}", disp(v, human)),
        })
        .collect();
    if parts.is_empty() {
        "(none)".into()
    } else {
        parts.join(" ")
    }
}
