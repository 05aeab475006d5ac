//! The `growth` command line.
//!
//! Exit codes: 0 on success or PASS, 1 on FAIL, 2 on usage or input
//! errors.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use growth_core::correspondences::{
    hesitating_to_setpartition, matching_to_oscillating, oscillating_to_matching, pair_to_vacillating,
    setpartition_to_hesitating, setpartition_to_vacillating, vacillating_to_pair, Matching, SetPartition,
};
use growth_core::enumeration::{
    count_table, explore_ne_se, jonsson_check, verify_theorem, Budget, Constraint, Instance, Report, Status, TheoremId,
};
use growth_core::figures::{self, render_labels};
use growth_core::greene::greene_values;
use growth_core::insertion::Tableau;
use growth_core::{
    label_diagram, reconstruct, Boundary, ChainSpec, Error, FerrersShape, Filling, FillingClass, OscillatingTableau,
    Partition, StackPolyomino, Variant,
};

#[derive(Parser, Debug)]
#[command(
    name = "growth",
    about = "Growth diagrams, RSK variants and crossing/nesting symmetries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Standard,
    Rsk,
    DualRsk,
    RskPrime,
    DualRskPrime,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Standard => Variant::Standard,
            VariantArg::Rsk => Variant::Rsk,
            VariantArg::DualRsk => Variant::DualRsk,
            VariantArg::RskPrime => Variant::RskPrime,
            VariantArg::DualRskPrime => Variant::DualRskPrime,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// staircase(1) .. staircase(max-n)
    Staircase,
    /// Every shape with at most max-cells cells.
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Label a filling, or map a set partition or matching to its tableau.
    Map(MapArgs),
    /// Recover a filling, set partition or matching from a tableau.
    Inverse(InverseArgs),
    /// Reproduce one of the worked examples.
    Demo {
        /// 0, 2, 3, 4, 5, 6, 6a, 7, 8 or 9; omit for all.
        #[arg(long)]
        figure: Option<String>,
    },
    /// Exhaustively check a symmetry theorem.
    Verify(VerifyArgs),
    /// Count table of two chain statistics.
    Count(CountArgs),
    /// Brute-force Greene statistics at one corner.
    Greene(GreeneArgs),
    /// Stack polyomino comparison and open-statement exploration.
    Explore(ExploreArgs),
}

#[derive(Args, Debug)]
struct MapArgs {
    #[arg(long, value_enum, default_value = "standard")]
    variant: VariantArg,
    /// D/R boundary word; defaults to the shape inside the filling.
    #[arg(long)]
    shape: Option<String>,
    /// Filling as JSON text or a path to a JSON file.
    #[arg(long, conflicts_with_all = ["set_partition", "matching"])]
    filling: Option<String>,
    /// Blocks separated by '|', e.g. "1 4 5 7 | 2 6 | 3".
    #[arg(long, conflicts_with = "matching")]
    set_partition: Option<String>,
    /// Use the hesitating tableau for --set-partition.
    #[arg(long, requires = "set_partition")]
    hesitating: bool,
    /// Standard tableau on block maxima for --set-partition, rows separated by '/'.
    #[arg(long, requires = "set_partition", conflicts_with = "hesitating")]
    tableau: Option<String>,
    /// Pairs such as "1-4 2-6 3-5".
    #[arg(long)]
    matching: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableauKind {
    /// A sequence along the border of --shape.
    Border,
    Vacillating,
    Hesitating,
    Oscillating,
}

#[derive(Args, Debug)]
struct InverseArgs {
    #[arg(long, value_enum, default_value = "border")]
    kind: TableauKind,
    /// Comma-separated partitions, e.g. "e,1,11,1,e".
    #[arg(long, conflicts_with = "tableau")]
    sequence: Option<String>,
    /// Tableau JSON ({"word","seq","variant"}) as text or a path.
    #[arg(long)]
    tableau: Option<String>,
    #[arg(long, value_enum, default_value = "standard")]
    variant: VariantArg,
    #[arg(long)]
    shape: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// T2, T2a-NES1, T2a-NES2, T2sym, T2asym, T4, T5 or T6.
    #[arg(long)]
    theorem: String,
    #[arg(long, value_enum, default_value = "all")]
    shape_family: Family,
    /// Largest staircase, or largest n for set partitions.
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, default_value_t = 6)]
    max_cells: usize,
    /// Largest entry sum (number of 1's for 0-1 classes).
    #[arg(long, default_value_t = 3)]
    max_total: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long)]
    shape: String,
    /// partial-permutation (pp), zero-one (01) or arbitrary.
    #[arg(long, default_value = "pp")]
    class: String,
    /// Chain flavor such as NE, se, nE; append +rect for the rectangle condition.
    #[arg(long, default_value = "NE")]
    x: String,
    #[arg(long, default_value = "SE+rect")]
    y: String,
    /// Exact entry sum.
    #[arg(long, conflicts_with_all = ["max_total", "max_entry"])]
    total: Option<u32>,
    #[arg(long, conflicts_with = "max_entry")]
    max_total: Option<u32>,
    #[arg(long)]
    max_entry: Option<u32>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args, Debug)]
struct GreeneArgs {
    /// Filling as JSON text or a path to a JSON file.
    #[arg(long)]
    filling: String,
    /// Chain flavor, e.g. NE or se+rect.
    #[arg(long)]
    flavor: String,
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Corner "x,y"; defaults to the top-right corner.
    #[arg(long)]
    corner: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct ExploreArgs {
    /// Column heights of a stack polyomino, e.g. "1,2,1".
    #[arg(long, conflicts_with = "shape")]
    stack: Option<String>,
    /// D/R word of a Ferrers shape.
    #[arg(long)]
    shape: Option<String>,
    /// Compare with the column-sorted shape at maximal size with ne-chains at most s.
    #[arg(long)]
    jonsson: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Runs the command line and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Error> {
    let text = |out: &mut dyn Write, s: &str| -> Result<(), Error> {
        out.write_all(s.as_bytes()).map_err(|e| Error::Parse(e.to_string()))
    };
    match command {
        Command::Map(args) => text(out, &map(args)?)?,
        Command::Inverse(args) => text(out, &inverse(args)?)?,
        Command::Demo { figure } => {
            let ids: Vec<String> = match figure {
                Some(id) => vec![id],
                None => figures::FIGURES.iter().map(|s| s.to_string()).collect(),
            };
            let mut all = String::new();
            for id in ids {
                all.push_str(&format!("== figure {id}\n{}", figures::render(&id)?));
            }
            text(out, &all)?;
        }
        Command::Verify(args) => {
            let report = verify(&args)?;
            text(out, &format_report(&report, args.format))?;
            return Ok(exit_code(&report));
        }
        Command::Count(args) => text(out, &count(args)?)?,
        Command::Greene(args) => text(out, &greene(args)?)?,
        Command::Explore(args) => {
            let report = explore(&args)?;
            text(out, &format_report(&report, args.format))?;
            return Ok(exit_code(&report));
        }
    }
    Ok(0)
}

fn exit_code(report: &Report) -> i32 {
    match report.status {
        Status::Fail => 1,
        Status::Pass | Status::Evidence => 0,
    }
}

fn format_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", report.to_json()),
        _ => format!("{report}\n"),
    }
}

/// JSON given inline, or else a path to read.
fn inline_or_file(value: &str) -> Result<String, Error> {
    let trimmed = value.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(value.to_string());
    }
    std::fs::read_to_string(Path::new(value)).map_err(|e| Error::Parse(format!("cannot read {value}: {e}")))
}

fn parse_sequence(text: &str) -> Result<Vec<Partition>, Error> {
    text.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|s| s.trim().parse())
        .collect()
}

fn parse_tableau(text: &str) -> Result<Tableau, Error> {
    let rows = text
        .split('/')
        .map(|row| {
            row.split_whitespace()
                .map(|e| e.parse::<u32>().map_err(|e| Error::Parse(e.to_string())))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Tableau::new(rows.into_iter().filter(|r| !r.is_empty()).collect())
}

fn sequence_output(t: &OscillatingTableau, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", t.to_json()),
        Format::Csv => format!(
            "index,partition\n{}",
            t.seq
                .iter()
                .enumerate()
                .map(|(i, p)| format!("{i},{p}\n"))
                .collect::<String>()
        ),
        Format::Text => format!("{}\n", t.compact()),
    }
}

fn map(args: MapArgs) -> Result<String, Error> {
    if let Some(text) = &args.set_partition {
        let p: SetPartition = text.parse()?;
        let t = if args.hesitating {
            setpartition_to_hesitating(&p)
        } else if let Some(tab) = &args.tableau {
            pair_to_vacillating(&p, &parse_tableau(tab)?)?
        } else {
            setpartition_to_vacillating(&p)
        };
        return Ok(sequence_output(&t, args.format));
    }
    if let Some(text) = &args.matching {
        let m: Matching = text.parse()?;
        return Ok(sequence_output(&matching_to_oscillating(&m), args.format));
    }
    let Some(filling) = &args.filling else {
        return Err(Error::Parse(
            "one of --filling, --set-partition or --matching is required".into(),
        ));
    };
    let mut f = Filling::from_json(&inline_or_file(filling)?)?;
    if let Some(word) = &args.shape {
        let shape = FerrersShape::from_word(word)?;
        if shape.normalized() != f.shape().normalized() {
            return Err(Error::InvalidShape(format!(
                "--shape {word} differs from the filling's shape {}",
                f.shape().word_string()
            )));
        }
        f = f.with_shape(shape)?;
    }
    let variant = Variant::from(args.variant);
    let d = label_diagram(&f, variant, &Boundary::empty(f.shape()))?;
    Ok(match args.format {
        Format::Json => format!("{}\n", d.border_tableau().to_json()),
        Format::Csv => d.to_csv(),
        Format::Text => format!("{}\n{}\n", render_labels(&d), d.border_tableau().compact()),
    })
}

fn inverse(args: InverseArgs) -> Result<String, Error> {
    let variant = Variant::from(args.variant);
    let t = match (&args.tableau, &args.sequence) {
        (Some(json), _) => OscillatingTableau::from_json(&inline_or_file(json)?)?,
        (None, Some(seq)) => {
            let seq = parse_sequence(seq)?;
            let word = match (&args.shape, args.kind) {
                (Some(w), _) => FerrersShape::from_word(w)?.word_string(),
                (None, TableauKind::Border) => {
                    return Err(Error::Parse("--shape is required for a border sequence".into()))
                }
                (None, _) => String::new(),
            };
            OscillatingTableau { word, seq, variant }
        }
        (None, None) => return Err(Error::Parse("one of --sequence or --tableau is required".into())),
    };
    let line = match args.kind {
        TableauKind::Border => {
            let shape = FerrersShape::from_word(&t.word)?;
            let t = OscillatingTableau::new(&t.word, t.seq, t.variant)?;
            let (f, _) = reconstruct(&shape, &t)?;
            return Ok(match args.format {
                Format::Json => format!("{}\n", f.to_json()),
                _ => format!("{f}\n"),
            });
        }
        TableauKind::Vacillating => {
            let (p, tab) = vacillating_to_pair(&t)?;
            if tab.size() == 0 {
                p.to_string()
            } else {
                let rows: Vec<String> = tab
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
                    .collect();
                format!("{p} ; {}", rows.join(" / "))
            }
        }
        TableauKind::Hesitating => hesitating_to_setpartition(&t)?.to_string(),
        TableauKind::Oscillating => oscillating_to_matching(&t)?.to_string(),
    };
    Ok(match args.format {
        Format::Json => format!("{}\n", serde_json::to_string(&line).expect("string")),
        _ => format!("{line}\n"),
    })
}

fn verify(args: &VerifyArgs) -> Result<Report, Error> {
    let id: TheoremId = args.theorem.parse()?;
    let instance = match id {
        TheoremId::T4 | TheoremId::T5 | TheoremId::T6 => Instance::set_partitions(args.max_n),
        _ => match args.shape_family {
            Family::Staircase => Instance::staircases(args.max_n),
            Family::All => Instance::all_shapes(args.max_cells, args.max_total),
        },
    };
    verify_theorem(id, &instance, &Budget::from_env())
}

fn count(args: CountArgs) -> Result<String, Error> {
    let shape = FerrersShape::from_word(&args.shape)?;
    let class: FillingClass = args.class.parse()?;
    let x: ChainSpec = args.x.parse()?;
    let y: ChainSpec = args.y.parse()?;
    let constraint = match (args.total, args.max_total, args.max_entry) {
        (Some(n), _, _) => Constraint::Total(n),
        (_, Some(n), _) => Constraint::TotalAtMost(n),
        (_, _, Some(m)) => Constraint::MaxEntry(m),
        _ if class == FillingClass::Arbitrary => {
            return Err(Error::Parse(
                "arbitrary fillings need --total, --max-total or --max-entry".into(),
            ))
        }
        _ => Constraint::MaxEntry(1),
    };
    let table = count_table(&shape, class, &x, &y, constraint, &Budget::from_env())?;
    Ok(match args.format {
        Format::Text => {
            let mut s = format!("{} {} x={} y={}\n", table.shape, class, table.x, table.y);
            for (&(n, a, b), &c) in &table.counts {
                s.push_str(&format!("n={n} s={a} t={b}: {c}\n"));
            }
            s
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = table
                .counts
                .iter()
                .map(|(&(n, s, t), &c)| serde_json::json!({"n": n, "s": s, "t": t, "count": c}))
                .collect();
            let value = serde_json::json!({
                "shape": table.shape, "class": class.to_string(), "x": table.x, "y": table.y, "counts": rows
            });
            format!("{value}\n")
        }
        Format::Csv => table.to_csv(),
    })
}

fn greene(args: GreeneArgs) -> Result<String, Error> {
    let f = Filling::from_json(&inline_or_file(&args.filling)?)?;
    let spec: ChainSpec = args.flavor.parse()?;
    let corner = match &args.corner {
        Some(text) => {
            let (x, y) = text
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("corner {text:?} is not x,y")))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|e| Error::Parse(e.to_string()));
            (parse(x)?, parse(y)?)
        }
        None => (f.shape().cols(), f.shape().rows()),
    };
    if !f.shape().has_corner(corner.0, corner.1) {
        return Err(Error::Parse(format!("{corner:?} is not a corner of the shape")));
    }
    let values = greene_values(f.shape(), &f.entries(), &spec, args.k, corner)?;
    Ok(match args.format {
        Format::Json => format!(
            "{}\n",
            serde_json::json!({"flavor": spec.to_string(), "corner": [corner.0, corner.1], "values": values})
        ),
        _ => format!(
            "{spec} at ({},{}): {}\n",
            corner.0,
            corner.1,
            values.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
        ),
    })
}

fn explore(args: &ExploreArgs) -> Result<Report, Error> {
    let budget = Budget::from_env();
    match (&args.stack, &args.shape, args.jonsson) {
        (Some(stack), _, Some(s)) => jonsson_check(&stack.parse::<StackPolyomino>()?, s, &budget),
        (Some(stack), _, None) => {
            let poly: StackPolyomino = stack.parse()?;
            explore_ne_se(&poly, &format!("stack {stack}"), &budget)
        }
        (None, Some(word), None) => explore_ne_se(&FerrersShape::from_word(word)?, word, &budget),
        (None, Some(_), Some(_)) => Err(Error::Parse("--jonsson needs --stack".into())),
        (None, None, _) => Err(Error::Parse("one of --stack or --shape is required".into())),
    }
}
