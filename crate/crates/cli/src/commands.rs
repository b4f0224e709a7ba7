use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use subtuple_core::ingest::parse_identifier_list;
use subtuple_core::oracles::tail_count_exhaustive;
use subtuple_core::{
    derive_instance, parse_edge_list, pvalue_montecarlo, tail_count_fast, tail_count_naive, Budget,
    ComputationMode, DerivePolicy, ExactRational, PValueReport, ProblemInstance, Provenance,
    RemainderPoolMode, TailCount,
};

use crate::args::{
    Cli, Command, ComputeArgs, EnrichArgs, FormatArg, PvalueArgs, SweepArgs, ValidateArgs,
};
use crate::error::CliError;
use crate::output::{write_json_line, write_json_pretty, write_report, write_table};
use crate::{TOOL, VERSION};

pub fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Pvalue(args) => pvalue(args, out, err),
        Command::Validate(args) => validate(args, out),
        Command::Enrich(args) => enrich(args, out, err),
        Command::Sweep(args) => sweep(args, out, err),
    }
}

fn compute(
    inst: ProblemInstance,
    args: &ComputeArgs,
    command: &str,
) -> Result<PValueReport, CliError> {
    let mode = ComputationMode::from(args.mode);
    let remainder = RemainderPoolMode::from(args.remainder);
    let budget = Budget(args.budget);
    let mut provenance = Provenance::new(TOOL, VERSION)
        .with("command", command)
        .with("precision", args.precision);

    let count = match mode {
        ComputationMode::Fast => tail_count_fast(&inst, remainder),
        ComputationMode::Naive => {
            provenance = provenance.with("budget", budget);
            tail_count_naive(&inst, remainder, budget)?
        }
        ComputationMode::Exhaustive => {
            provenance = provenance.with("budget", budget);
            tail_count_exhaustive(&inst, budget)?
        }
        ComputationMode::Montecarlo => {
            let est = pvalue_montecarlo(&inst, args.samples, args.seed);
            provenance = provenance
                .with("samples", est.samples)
                .with("seed", est.seed)
                .with("standard_error", format!("{:e}", est.standard_error));
            TailCount {
                favorable: est.hits.into(),
                total: est.samples.into(),
            }
        }
    };
    Ok(PValueReport::new(
        inst,
        mode,
        remainder,
        &count.favorable,
        &count.total,
        args.precision as usize,
        provenance,
    ))
}

fn warn_if_not_probability(report: &PValueReport, err: &mut dyn Write) -> Result<(), CliError> {
    let favorable = report.favorable_count.parse().expect("rendered integer");
    let total = report.total_count.parse().expect("rendered integer");
    let p = ExactRational::from_counts(&favorable, &total).expect("positive total");
    if !p.is_probability() {
        writeln!(
            err,
            "warning: {} gives p = {} > 1; the paper remainder pool overcounts when x < y",
            report.instance, report.p_rational
        )?;
    }
    Ok(())
}

fn pvalue(args: PvalueArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let inst = ProblemInstance::new(args.n, args.x, args.y, args.z)?;
    let report = compute(inst, &args.compute, "pvalue")?;
    warn_if_not_probability(&report, err)?;
    write_report(out, &report, args.compute.format)?;
    Ok(())
}

struct Mismatch {
    check: &'static str,
    inst: ProblemInstance,
    mode: RemainderPoolMode,
    fast: ExactRational,
    other: ExactRational,
}

fn grid(max_n: u64, max_x: u64, max_y: u64) -> impl Iterator<Item = ProblemInstance> {
    (2..=max_n).flat_map(move |n| {
        (0..=(n * (n - 1)).min(max_x)).flat_map(move |x| {
            (0..=n.min(max_y)).flat_map(move |y| {
                (0..=x.min(y))
                    .map(move |z| ProblemInstance::new(n, x, y, z).expect("grid instance is valid"))
            })
        })
    })
}

fn validate(args: ValidateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.max_n < 2 {
        return Err(CliError::Invalid(format!(
            "--max-n must be at least 2 (n >= 2), got {}",
            args.max_n
        )));
    }
    if args.oracle_max_n < 2 {
        return Err(CliError::Invalid(format!(
            "--oracle-max-n must be at least 2 (n >= 2), got {}",
            args.oracle_max_n
        )));
    }
    let budget = Budget(args.budget);
    let mut mismatches: Vec<Mismatch> = Vec::new();

    let mut naive_checked = 0u64;
    let mut naive_failed = 0u64;
    for inst in grid(args.max_n, args.max_x, args.max_y) {
        for mode in RemainderPoolMode::ALL {
            let fast = tail_count_fast(&inst, mode).probability();
            let naive = tail_count_naive(&inst, mode, budget)?.probability();
            naive_checked += 1;
            if fast != naive {
                naive_failed += 1;
                mismatches.push(Mismatch {
                    check: "fast-vs-naive",
                    inst,
                    mode,
                    fast,
                    other: naive,
                });
            }
        }
    }

    let oracle_mode = RemainderPoolMode::from(args.oracle_remainder);
    let mut oracle_checked = 0u64;
    let mut oracle_failed = 0u64;
    for inst in grid(args.oracle_max_n, args.max_x, args.max_y) {
        let fast = tail_count_fast(&inst, oracle_mode).probability();
        let exhaustive = tail_count_exhaustive(&inst, budget)?.probability();
        oracle_checked += 1;
        if fast != exhaustive {
            oracle_failed += 1;
            mismatches.push(Mismatch {
                check: "fast-vs-exhaustive",
                inst,
                mode: oracle_mode,
                fast,
                other: exhaustive,
            });
        }
    }

    write_table(
        out,
        &["check", "instances", "mismatches"],
        &[
            vec![
                "fast-vs-naive".into(),
                naive_checked.to_string(),
                naive_failed.to_string(),
            ],
            vec![
                "fast-vs-exhaustive".into(),
                oracle_checked.to_string(),
                oracle_failed.to_string(),
            ],
        ],
    )?;
    writeln!(out, "{} mismatches", mismatches.len())?;
    match mismatches.first() {
        None => Ok(()),
        Some(m) => {
            writeln!(
                out,
                "first mismatch: {} {} remainder={}: fast {} vs {}",
                m.check, m.inst, m.mode, m.fast, m.other
            )?;
            Err(CliError::Mismatch(format!(
                "{} mismatches",
                mismatches.len()
            )))
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn ingest_error(path: &Path) -> impl FnOnce(subtuple_core::IngestError) -> CliError + '_ {
    move |source| CliError::Ingest {
        path: path.display().to_string(),
        source,
    }
}

#[derive(Serialize)]
struct DerivedBlock<'a> {
    n: u64,
    x: u64,
    y: u64,
    z: u64,
    universe_inferred: bool,
    regulators_found: Vec<&'a str>,
    warnings: &'a [String],
}

#[derive(Serialize)]
struct EnrichReport<'a> {
    derived: DerivedBlock<'a>,
    report: &'a PValueReport,
}

fn enrich(args: EnrichArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let edges = parse_edge_list(&read(&args.edges)?).map_err(ingest_error(&args.edges))?;
    let regulators: Vec<String> = parse_identifier_list(&read(&args.regulators)?)
        .map_err(ingest_error(&args.regulators))?
        .into_iter()
        .map(|id| id.name)
        .collect();
    let universe: Option<Vec<String>> = match &args.universe {
        Some(path) => Some(
            parse_identifier_list(&read(path)?)
                .map_err(ingest_error(path))?
                .into_iter()
                .map(|id| id.name)
                .collect(),
        ),
        None => None,
    };
    let policy = DerivePolicy {
        dedupe: args.dedupe,
        allow_unknown: args.allow_unknown,
        drop_self_loops: args.allow_self_loops_drop,
    };
    let derived =
        derive_instance(&edges, &regulators, universe.as_deref(), policy).map_err(|e| match e {
            subtuple_core::IngestError::Instance(inner) => CliError::Instance(inner),
            other => ingest_error(&args.edges)(other),
        })?;

    for w in &derived.warnings {
        writeln!(err, "warning: {w}")?;
    }
    if derived.network.universe_inferred {
        writeln!(
            err,
            "warning: universe inferred from edges and regulators (n = {}); pass --universe to fix n",
            derived.instance.n()
        )?;
    }

    let inst = derived.instance;
    let report = compute(inst, &args.compute, "enrich")?;
    warn_if_not_probability(&report, err)?;
    match args.compute.format {
        FormatArg::Json => {
            let block = EnrichReport {
                derived: DerivedBlock {
                    n: inst.n(),
                    x: inst.x(),
                    y: inst.y(),
                    z: inst.z(),
                    universe_inferred: derived.network.universe_inferred,
                    regulators_found: derived.network.regulators_found().into_iter().collect(),
                    warnings: &derived.warnings,
                },
                report: &report,
            };
            write_json_pretty(out, &block)?;
        }
        FormatArg::Rational => writeln!(out, "{inst} p={}", report.p_rational)?,
        FormatArg::Decimal => writeln!(out, "{inst} p={}", report.p_decimal)?,
    }
    Ok(())
}

fn sweep(args: SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let (variable, range) = match (&args.sweep_z, &args.sweep_x) {
        (Some(r), None) => ("z", r.clone()),
        (None, Some(r)) => ("x", r.clone()),
        _ => {
            return Err(CliError::Invalid(
                "pass exactly one of --sweep-z or --sweep-x".into(),
            ))
        }
    };
    if range.is_empty() {
        return Err(CliError::Invalid(format!(
            "--sweep-{variable} range {}..{} is empty",
            range.start(),
            range.end()
        )));
    }
    let fixed = |name: &str, value: Option<u64>| {
        value.ok_or_else(|| {
            CliError::Invalid(format!("--{name} is required when sweeping {variable}"))
        })
    };
    let instances: Vec<ProblemInstance> = if variable == "z" {
        let x = fixed("x", args.x)?;
        range
            .map(|z| ProblemInstance::new(args.n, x, args.y, z))
            .collect::<Result<_, _>>()?
    } else {
        let z = fixed("z", args.z)?;
        range
            .map(|x| ProblemInstance::new(args.n, x, args.y, z))
            .collect::<Result<_, _>>()?
    };

    let mut reports = Vec::with_capacity(instances.len());
    for inst in instances {
        let report = compute(inst, &args.compute, "sweep")?;
        warn_if_not_probability(&report, err)?;
        reports.push(report);
    }

    match args.compute.format {
        FormatArg::Json => {
            for report in &reports {
                write_json_line(out, report)?;
            }
        }
        FormatArg::Rational | FormatArg::Decimal => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let swept = if variable == "z" {
                        r.instance.z()
                    } else {
                        r.instance.x()
                    };
                    vec![
                        swept.to_string(),
                        r.p_rational.clone(),
                        r.p_decimal.clone(),
                        r.log10_p.clone(),
                    ]
                })
                .collect();
            write_table(
                out,
                &[variable, "p_rational", "p_decimal", "log10_p"],
                &rows,
            )?;
        }
    }
    Ok(())
}
