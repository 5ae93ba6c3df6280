use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use eds_lab::enumeration::{canonical_code, ConstraintSpec, FreeTrees};
use eds_lab::formats::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use eds_lab::harness::{
    extremal_scan, parse_order_range, read_reports, summarize, write_reports, ParamFilter, TheoremId, Verifier,
};
use eds_lab::{FamilySpec, FormulaId, Invariant, InvariantRecord, TransformOp, Tree};

#[derive(Parser)]
#[command(name = "eds-lab", version, about = "Eccentric distance sum of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance invariants of one tree.
    Invariants {
        /// FamilySpec (e.g. `broom:4,1,5`), edge-list file or graph6 string.
        tree: String,
        #[arg(long)]
        json: bool,
    },
    /// Build a named family member.
    Construct {
        spec: FamilySpec,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
    },
    /// List all free trees of one order, optionally filtered.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        filter: ClassArgs,
        #[arg(long, value_enum, default_value = "code")]
        format: Format,
        /// Print only the number of trees.
        #[arg(long)]
        count: bool,
        #[arg(long, default_value_t = eds_lab::enumeration::DEFAULT_CAP)]
        cap: usize,
    },
    /// Apply a transformation, or list where it applies.
    Transform {
        op: TransformOp,
        tree: String,
        /// Vertex arguments, comma separated (`u,v`, `v,w`, spine, `w,u,v`).
        #[arg(long, value_delimiter = ',')]
        at: Vec<usize>,
        /// List the application sites instead of applying.
        #[arg(long)]
        sites: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a closed form.
    Formula {
        /// Formula name; omit with --list.
        id: Option<FormulaId>,
        #[arg(allow_negative_numbers = true)]
        args: Vec<i128>,
        #[arg(long)]
        list: bool,
    },
    /// Smallest and largest values of an invariant over a class.
    Extremal {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        filter: ClassArgs,
        #[arg(long, default_value = "eds")]
        invariant: Invariant,
        #[arg(long, default_value_t = 3)]
        bottom: usize,
        #[arg(long, default_value_t = 3)]
        top: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check claims against exhaustive enumeration.
    Verify(VerifyArgs),
    /// Summarize an existing report file.
    Report {
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Args)]
struct ClassArgs {
    #[arg(long)]
    leaves: Option<usize>,
    #[arg(long)]
    gamma: Option<usize>,
    #[arg(long)]
    beta: Option<usize>,
    /// Bipartition sizes `p,q`.
    #[arg(long, value_delimiter = ',')]
    bipartition: Option<Vec<usize>>,
}

impl ClassArgs {
    fn spec(&self) -> anyhow::Result<ConstraintSpec> {
        if let Some(b) = &self.bipartition {
            if b.len() != 2 {
                bail!("--bipartition takes two sizes p,q");
            }
        }
        Ok(ConstraintSpec {
            leaf_count: self.leaves,
            domination: self.gamma,
            matching: self.beta,
            bipartition: self.bipartition.as_ref().map(|v| (v[0], v[1])),
        })
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem id or `all`.
    #[arg(long, default_value = "all")]
    theorem: String,
    /// Orders to check: `a..b`, `a..=b` or a single `n`.
    #[arg(long)]
    order: String,
    /// Restrict parameter points, e.g. `p=7,variant=paper`.
    #[arg(long, default_value = "")]
    params: ParamFilter,
    /// JSON Lines output; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Exit with status 1 if any report is refuted.
    #[arg(long)]
    strict: bool,
    #[arg(long, env = "EDS_LAB_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Record elapsed milliseconds per report.
    #[arg(long)]
    timings: bool,
    #[arg(long, default_value_t = eds_lab::enumeration::DEFAULT_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Code,
    Graph6,
    Edgelist,
}

fn render(t: &Tree, format: Format) -> String {
    match format {
        Format::Code => format!("{}\n", canonical_code(t)),
        Format::Graph6 => format!("{}\n", to_graph6(t)),
        Format::Edgelist => to_edge_list(t),
    }
}

fn read_tree(input: &str) -> anyhow::Result<Tree> {
    if input.contains(':') {
        let spec: FamilySpec = input.parse()?;
        return Ok(spec.build()?);
    }
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        return Ok(parse_edge_list(&text)?);
    }
    Ok(parse_graph6(input)?)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Invariants { tree, json } => {
            let t = read_tree(&tree)?;
            let r = InvariantRecord::of(&t);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
            } else {
                writeln!(out, "n                   {}", r.n)?;
                writeln!(out, "eds                 {}", r.eds)?;
                writeln!(out, "wiener              {}", r.wiener)?;
                writeln!(out, "degree-distance     {}", r.degree_distance)?;
                writeln!(out, "ecc-connectivity    {}", r.ecc_connectivity)?;
                writeln!(out, "total-ecc           {}", r.total_eccentricity)?;
                writeln!(out, "radius              {}", r.radius)?;
                writeln!(out, "diameter            {}", r.diameter)?;
                writeln!(out, "center              {:?}", r.center)?;
                writeln!(out, "leaves              {}", r.leaf_count)?;
                writeln!(out, "bipartition         {} {}", r.bipartition.0, r.bipartition.1)?;
                writeln!(out, "code                {}", canonical_code(&t))?;
            }
        }
        Command::Construct { spec, format } => {
            write!(out, "{}", render(&spec.build()?, format))?;
        }
        Command::Enumerate { order, filter, format, count, cap } => {
            let spec = filter.spec()?;
            let mut total = 0usize;
            for code in FreeTrees::with_cap(order, cap)? {
                let t = code.to_tree();
                if !spec.accepts(&t) {
                    continue;
                }
                if !count {
                    if total > 0 && matches!(format, Format::Edgelist) {
                        writeln!(out)?;
                    }
                    match format {
                        Format::Code => writeln!(out, "{code}")?,
                        _ => write!(out, "{}", render(&t, format))?,
                    }
                }
                total += 1;
            }
            if count {
                writeln!(out, "{total}")?;
            }
        }
        Command::Transform { op, tree, at, sites, json } => {
            let t = read_tree(&tree)?;
            if sites {
                use eds_lab::transform as tr;
                let list: Vec<Vec<usize>> = match op {
                    TransformOp::EdgeGrowing => tr::edge_growing_sites(&t).into_iter().map(|(a, b)| vec![a, b]).collect(),
                    TransformOp::Rho => tr::rho_sites(&t).into_iter().map(|(a, b)| vec![a, b]).collect(),
                    TransformOp::Slide => tr::slide_spines(&t),
                    TransformOp::TransformationI => {
                        tr::transformation_i_sites(&t).into_iter().map(|(a, b, c)| vec![a, b, c]).collect()
                    }
                };
                for s in list {
                    let s: Vec<String> = s.iter().map(usize::to_string).collect();
                    writeln!(out, "{}", s.join(","))?;
                }
            } else {
                let (o, predicted) = op.apply(&t, &at)?;
                if json {
                    let v = json!({
                        "op": op.name(),
                        "eds_before": o.eds_before,
                        "eds_after": o.eds_after,
                        "relation": o.relation,
                        "equality_predicted": predicted,
                        "result": to_graph6(&o.result),
                        "code": canonical_code(&o.result).to_string(),
                    });
                    writeln!(out, "{v}")?;
                } else {
                    writeln!(out, "eds {} -> {} ({})", o.eds_before, o.eds_after, o.relation.name())?;
                    if let Some(p) = predicted {
                        writeln!(out, "equality predicted: {p}")?;
                    }
                    write!(out, "{}", to_edge_list(&o.result))?;
                }
            }
        }
        Command::Formula { id, args, list } => {
            if list {
                for f in FormulaId::ALL {
                    writeln!(out, "{:<24} {}", f.name(), f.params().join(","))?;
                }
            } else {
                let Some(id) = id else { bail!("give a formula name or --list") };
                let e = id.evaluate(&args)?;
                writeln!(out, "{}", e.value)?;
                if !e.valid {
                    eprintln!("warning: parameters are outside the formula's validity range");
                }
            }
        }
        Command::Extremal { order, filter, invariant, bottom, top, json } => {
            let table = extremal_scan(order, filter.spec()?, invariant, bottom, top)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&table)?)?;
            } else {
                writeln!(out, "{} over {} trees", invariant.name(), table.class_size)?;
                writeln!(out, "bottom")?;
                for r in &table.bottom {
                    writeln!(out, "  {:>10}  {}", r.value, r.code)?;
                }
                writeln!(out, "top")?;
                for r in &table.top {
                    writeln!(out, "  {:>10}  {}", r.value, r.code)?;
                }
            }
        }
        Command::Verify(args) => return verify(args, &mut out),
        Command::Report { file, strict } => {
            let reports = read_reports(BufReader::new(File::open(&file).with_context(|| format!("opening {}", file.display()))?))?;
            let summary = summarize(&reports);
            write!(out, "{summary}")?;
            out.flush()?;
            if strict && summary.refuted() > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs, out: &mut impl Write) -> anyhow::Result<ExitCode> {
    let theorems: Vec<TheoremId> = if args.theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        args.theorem.split(',').map(str::parse).collect::<Result<_, _>>()?
    };
    let orders = parse_order_range(&args.order)?;
    let verifier = Verifier::new(args.jobs)?.with_cap(args.cap).with_timings(args.timings);
    let reports = verifier.verify_many(&theorems, orders, &args.params)?;
    let summary = summarize(&reports);
    match &args.out {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(file);
            write_reports(&mut w, &reports)?;
            w.flush()?;
            write!(out, "{summary}")?;
        }
        None => {
            write_reports(&mut *out, &reports)?;
            eprint!("{summary}");
        }
    }
    out.flush()?;
    if args.strict && summary.refuted() > 0 {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
