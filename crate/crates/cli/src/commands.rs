use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use subcomp::gadget::{
    c8_gadget, cycle_inductive, k15_gadget, p7_gadget, p8_gadget, path_inductive, star_inductive, GadgetInstance,
};
use subcomp::graph::{g6_decode, g6_encode, make_pattern, Graph, PatternSpec};
use subcomp::sat::{add_dummy_clause, parse_dimacs};
use subcomp::solve::{
    brute_solve, brute_solve_with, degenerate_recognizer, kt_free_recognizer, solve_complement_class, solve_kt_free,
    SolveReport, Status,
};
use subcomp::verify::{run_suite, Suite, VerifyConfig, VerifyError, VerifySummary};

use crate::args::{Cli, Command, ConvertArgs, Format, GenArgs, GenKind, RecognizerArg, SolveArgs, SuiteArg, Target, VerifyArgs};
use crate::error::CliError;

/// Exit status for a failed verification sweep.
const EXIT_VERIFY_FAILED: u8 = 3;

pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Solve(args) => solve(args, cli.human),
        Command::Gen(args) => gen(args, cli.human),
        Command::Verify(args) => verify(args, cli.human),
        Command::Convert(args) => convert(args),
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    let mut buf = Vec::new();
    let result = if path.as_os_str() == "-" {
        io::stdin().read_to_end(&mut buf).map(|_| ())
    } else {
        fs::read(path).map(|b| buf = b)
    };
    result.map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    Ok(buf)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn parse_g6(bytes: &[u8]) -> Result<Graph, CliError> {
    let text = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let line = text.split(|&b| b == b'\n').next().unwrap_or_default();
    let line = line.strip_suffix(b"\r").unwrap_or(line);
    g6_decode(line).map_err(CliError::data)
}

fn parse_json(bytes: &[u8]) -> Result<Graph, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CliError::Data(format!("input is not UTF-8: {e}")))?;
    Graph::from_json(text).map_err(CliError::data)
}

/// graph6 or JSON, told apart by a leading `{`.
fn parse_graph(bytes: &[u8]) -> Result<Graph, CliError> {
    if bytes.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'{') {
        parse_json(bytes)
    } else {
        parse_g6(bytes)
    }
}

fn solve(args: SolveArgs, human: bool) -> Result<u8, CliError> {
    let g = parse_graph(&read_input(&args.input)?)?;
    let report = match args.target {
        Target::Pattern => {
            let spec = args
                .pattern
                .as_deref()
                .ok_or_else(|| CliError::Usage("--target pattern needs --pattern".into()))?;
            let spec: PatternSpec = spec.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
            let h = make_pattern(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            brute_solve(&g, &h, args.budget)
        }
        Target::Kt | Target::KtBar => {
            let t = args
                .t
                .ok_or_else(|| CliError::Usage("--target kt and kt-bar need -t".into()))? as usize;
            let recognizer = recognizer(&args, t)?;
            let base = |x: &Graph| {
                if args.brute {
                    Ok(brute_solve_with(x, &recognizer, args.budget))
                } else {
                    solve_kt_free(x, t, &recognizer)
                }
            };
            let report = if args.target == Target::Kt {
                base(&g)
            } else {
                solve_complement_class(&g, base, &recognizer)
            };
            report.map_err(|e| CliError::Internal(e.to_string()))?
        }
    };
    print_report(&report, human);
    Ok(match report.status {
        Status::Yes => 0,
        Status::No => 1,
        Status::Unknown => 2,
    })
}

fn recognizer(args: &SolveArgs, t: usize) -> Result<Box<dyn Fn(&Graph) -> bool>, CliError> {
    match args.recognizer {
        RecognizerArg::Ktfree => Ok(Box::new(kt_free_recognizer(t))),
        RecognizerArg::Degenerate => {
            if t < 2 {
                return Err(CliError::Usage("the degenerate recognizer needs t >= 2".into()));
            }
            let d = args.degeneracy.unwrap_or(t - 2);
            if d + 2 > t {
                return Err(CliError::Usage(format!(
                    "{d}-degenerate graphs may contain K_{}, so they are not K_{t}-free",
                    d + 1
                )));
            }
            Ok(Box::new(degenerate_recognizer(d)))
        }
    }
}

fn print_report(report: &SolveReport, human: bool) {
    if !human {
        println!("{}", report.to_json());
        return;
    }
    println!("status     {:?}", report.status);
    if let Some(s) = &report.solution {
        println!("solution   {:?}", s.to_vec());
        println!("verified   {}", report.verified);
    }
    println!("subsets    {}", report.stats.subsets_examined);
    println!("pairs      {}", report.stats.pairs_examined);
    println!("elapsed    {:.6}s", report.stats.elapsed.as_secs_f64());
}

fn kind_name(kind: GenKind) -> &'static str {
    match kind {
        GenKind::Star => "star",
        GenKind::Path => "path",
        GenKind::Cycle => "cycle",
        GenKind::K15 => "k15",
        GenKind::P7 => "p7",
        GenKind::P8 => "p8",
        GenKind::C8 => "c8",
    }
}

fn gen(args: GenArgs, human: bool) -> Result<u8, CliError> {
    let bytes = read_input(&args.input)?;
    let inst = build_instance(&args, &bytes)?;
    let prefix = args
        .output
        .clone()
        .unwrap_or_else(|| args.input.with_extension(kind_name(args.kind)));
    let with_ext = |ext: &str| PathBuf::from(format!("{}.{ext}", prefix.display()));
    let (g6_path, json_path) = (with_ext("g6"), with_ext("json"));
    write_file(&g6_path, &format!("{}\n", g6_encode(&inst.graph)))?;
    let cert = serde_json::to_string_pretty(&inst.certificate()).map_err(|e| CliError::Internal(e.to_string()))?;
    write_file(&json_path, &format!("{cert}\n"))?;
    println!("vertices={}", inst.graph.n());
    if human {
        println!("kind       {}", inst.kind);
        println!("formula    {} = {}", inst.kind.size_formula(), inst.expected_size());
        println!("graph6     {}", g6_path.display());
        println!("certificate {}", json_path.display());
    }
    Ok(0)
}

fn build_instance(args: &GenArgs, bytes: &[u8]) -> Result<GadgetInstance, CliError> {
    let built = match args.kind {
        GenKind::Star | GenKind::Path | GenKind::Cycle => {
            let t = args
                .t
                .ok_or_else(|| CliError::Usage(format!("gen {} needs -t", kind_name(args.kind))))?;
            let g = parse_graph(bytes)?;
            match args.kind {
                GenKind::Star => star_inductive(&g, t),
                GenKind::Path => path_inductive(&g, t),
                _ => cycle_inductive(&g, t),
            }
        }
        _ => {
            let text = std::str::from_utf8(bytes).map_err(|e| CliError::Data(format!("input is not UTF-8: {e}")))?;
            let mut phi = parse_dimacs(text).map_err(CliError::data)?;
            if args.dummy_clause {
                phi = add_dummy_clause(&phi);
            }
            match args.kind {
                GenKind::K15 => k15_gadget(&phi),
                GenKind::P7 => p7_gadget(&phi),
                GenKind::P8 => p8_gadget(&phi),
                _ => c8_gadget(&phi),
            }
        }
    };
    built.map_err(CliError::data)
}

fn suite(arg: SuiteArg) -> Suite {
    match arg {
        SuiteArg::Gs => Suite::Gs,
        SuiteArg::Dual => Suite::Dual,
        SuiteArg::KtOracle => Suite::KtOracle,
        SuiteArg::Split => Suite::Split,
        SuiteArg::Gadget => Suite::Gadget,
        SuiteArg::Inductive => Suite::Inductive,
    }
}

fn verify(args: VerifyArgs, human: bool) -> Result<u8, CliError> {
    let suite = suite(args.suite);
    let mut cfg = VerifyConfig::for_suite(suite);
    cfg.seed = args.seed;
    if let Some(n) = args.max_n {
        cfg.max_n = n;
    }
    if let Some(k) = args.samples {
        cfg.samples = k as usize;
    }
    let summary = run_suite(suite, &cfg).map_err(|e| match e {
        VerifyError::MaxNOutOfRange { .. } => CliError::Usage(e.to_string()),
        other => CliError::Internal(other.to_string()),
    })?;
    print_summary(&summary, human)?;
    Ok(if summary.passed() { 0 } else { EXIT_VERIFY_FAILED })
}

fn print_summary(summary: &VerifySummary, human: bool) -> Result<(), CliError> {
    if !human {
        let text = serde_json::to_string(summary).map_err(|e| CliError::Internal(e.to_string()))?;
        println!("{text}");
        return Ok(());
    }
    let verdict = if summary.passed() { "pass" } else { "FAIL" };
    println!("{:<10} {:>6} {:>10} {:>9} {:>10}", "suite", "max-n", "cases", "failures", "seconds");
    println!(
        "{:<10} {:>6} {:>10} {:>9} {:>10.3}  {verdict}",
        summary.suite.name(),
        summary.max_n,
        summary.cases,
        summary.failures,
        summary.elapsed
    );
    for cx in &summary.counterexamples {
        let set = cx.set.as_ref().map(|s| format!(" S={:?}", s.to_vec())).unwrap_or_default();
        println!("  case {} graph6={}{set}: {}", cx.case, cx.graph6, cx.detail);
    }
    Ok(())
}

fn convert(args: ConvertArgs) -> Result<u8, CliError> {
    let input = args.input.unwrap_or_else(|| PathBuf::from("-"));
    let bytes = read_input(&input)?;
    let g = match args.from {
        Format::G6 => parse_g6(&bytes)?,
        Format::Json => parse_json(&bytes)?,
    };
    let out = match args.to {
        Format::G6 => g6_encode(&g),
        Format::Json => g.to_json(),
    };
    match &args.output {
        Some(path) => write_file(path, &format!("{out}\n"))?,
        None => {
            let mut stdout = io::stdout().lock();
            writeln!(stdout, "{out}").map_err(|source| CliError::Write {
                path: "stdout".into(),
                source,
            })?;
        }
    }
    Ok(0)
}
