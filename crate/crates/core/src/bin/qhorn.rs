use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qhorn::table;
use qhorn::horn::HornEngine;
use qhorn::io::{self as qio, MembershipRecord, PolytopeRecord, PwRecord};
use qhorn::polytope;
use qhorn::{CartanType, Error, Mode};

#[derive(Parser)]
#[command(name = "qhorn", version, about = "Multiplicative Horn inequalities and polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an inequality list.
    Generate {
        #[arg(long)]
        group: CartanType,
        #[arg(long, default_value = "th3")]
        mode: Mode,
    },
    /// Facets and vertices of the polytope cut out by a list.
    Polytope {
        #[arg(long)]
        group: CartanType,
        #[arg(long, default_value = "th3")]
        mode: Mode,
        /// Print the facet and vertex lists in text output.
        #[arg(long)]
        full: bool,
    },
    /// Test a triple of alcove points, each given as `p/q,...` in coweight coordinates.
    Member {
        #[arg(long)]
        group: CartanType,
        #[arg(long, default_value = "th3")]
        mode: Mode,
        #[arg(long, allow_hyphen_values = true)]
        t1: String,
        #[arg(long, allow_hyphen_values = true)]
        t2: String,
        #[arg(long, allow_hyphen_values = true)]
        t3: String,
    },
    /// Reproduce the reference count table for the given groups.
    Table {
        /// Groups, repeated or comma-separated (default: the rank 2 and 3 rows).
        #[arg(long, value_delimiter = ',')]
        group: Vec<CartanType>,
        /// Leave the vertex and facet columns as `?`.
        #[arg(long)]
        skip_polytope: bool,
        /// Print the published table instead of computing.
        #[arg(long)]
        published: bool,
    },
    /// Scan the pairings of lifted degrees against the unipotent roots.
    PwRemark {
        #[arg(long)]
        group: CartanType,
    },
}

fn run(cli: Cli) -> Result<Vec<u8>, Error> {
    let format = cli.common.format;
    let mut out = Vec::new();
    match cli.command {
        Command::Generate { group, mode } => {
            let system = HornEngine::new(group)?.generate(mode)?;
            match format {
                Format::Json => writeln!(out, "{}", qio::to_json(&system)).unwrap(),
                Format::Csv => qio::write_csv(&system, &mut out)?,
                Format::Text => out.extend(qio::to_text(&system).into_bytes()),
            }
        }
        Command::Polytope { group, mode, full } => {
            let system = HornEngine::new(group)?.generate(mode)?;
            let facets = polytope::facets(&system.hrep()?)?;
            let vertices = polytope::vertices(&facets)?;
            let verified = polytope::verify(&facets, &vertices);
            let rec = PolytopeRecord::new(&system, &facets, Some(&vertices), Some(verified));
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&rec).unwrap()).unwrap()
                }
                Format::Csv => {
                    writeln!(out, "group,mode,inequalities,facets,vertices,verified").unwrap();
                    writeln!(
                        out,
                        "{},{},{},{},{},{}",
                        rec.group, rec.mode, rec.inequalities, rec.facets, vertices.len(), verified
                    )
                    .unwrap();
                }
                Format::Text => {
                    if full {
                        for r in &rec.facet_rows {
                            let (bound, normal) = r.split_last().unwrap();
                            writeln!(out, "facet [{}] <= {bound}", normal.join(", ")).unwrap();
                        }
                        for v in rec.vertex_list.iter().flatten() {
                            writeln!(out, "vertex [{}]", v.join(", ")).unwrap();
                        }
                    }
                    writeln!(
                        out,
                        "{} ({}), mode {}: {} inequalities, {} facets, {} vertices, verified {}",
                        group,
                        group.group_name(),
                        mode,
                        rec.inequalities,
                        rec.facets,
                        vertices.len(),
                        verified
                    )
                    .unwrap();
                }
            }
        }
        Command::Member { group, mode, t1, t2, t3 } => {
            let engine = HornEngine::new(group)?;
            let rank = engine.rank();
            let t = [
                qio::parse_point(&t1, rank)?,
                qio::parse_point(&t2, rank)?,
                qio::parse_point(&t3, rank)?,
            ];
            let system = engine.generate(mode)?;
            let m = system.membership(&engine, &t)?;
            let rec = MembershipRecord::new(&system, &m);
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&rec).unwrap()).unwrap()
                }
                Format::Csv => {
                    writeln!(out, "verdict,tight,violated").unwrap();
                    let join = |v: &[usize]| {
                        v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(";")
                    };
                    writeln!(out, "{},{},{}", rec.verdict, join(&rec.tight), join(&rec.violated))
                        .unwrap();
                }
                Format::Text => {
                    writeln!(out, "verdict: {}", rec.verdict).unwrap();
                    for (name, idx) in [("tight", &m.tight), ("violated", &m.violated)] {
                        for &i in idx {
                            let label = qio::label(&system.inequalities[i]);
                            writeln!(out, "{name}: #{} {label}", i + 1).unwrap();
                        }
                    }
                    if rec.in_alcove.contains(&false) {
                        writeln!(out, "note: in alcove {:?}", rec.in_alcove).unwrap();
                    }
                }
            }
        }
        Command::Table { published: true, .. } => {
            out.extend(table::render_reference().into_bytes());
        }
        Command::Table { group, skip_polytope, .. } => {
            let groups = if group.is_empty() {
                ["G2", "Sp(4)", "Sp(6)", "Spin(7)"]
                    .iter()
                    .map(|g| g.parse())
                    .collect::<Result<Vec<CartanType>, _>>()?
            } else {
                group
            };
            let mut rows = Vec::new();
            for g in groups {
                rows.push(table::reproduce(&HornEngine::new(g)?, !skip_polytope)?);
            }
            match format {
                Format::Text => out.extend(table::render(&rows).into_bytes()),
                Format::Csv | Format::Json => {
                    let cell = |v: Option<usize>| v.map_or("?".to_string(), |x| x.to_string());
                    let recs: Vec<[String; 7]> = rows
                        .iter()
                        .map(|r| {
                            [
                                r.group.group_name(),
                                r.max.to_string(),
                                r.tw.to_string(),
                                r.twbk.to_string(),
                                r.th3.to_string(),
                                cell(r.vertices),
                                cell(r.facets),
                            ]
                        })
                        .collect();
                    if format == Format::Json {
                        writeln!(out, "{}", serde_json::to_string_pretty(&recs).unwrap()).unwrap();
                    } else {
                        writeln!(out, "group,max,tw,twbk,th3,vertices,facets").unwrap();
                        for r in recs {
                            writeln!(out, "{}", r.join(",")).unwrap();
                        }
                    }
                }
            }
        }
        Command::PwRemark { group } => {
            let rec = PwRecord::new(&HornEngine::new(group)?.check_pw_remark()?);
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&rec).unwrap()).unwrap()
                }
                Format::Csv => {
                    writeln!(out, "beta,d,h_pw,min_pairing").unwrap();
                    for r in &rec.scanned {
                        let h: Vec<String> = r.h_pw.iter().map(|x| x.to_string()).collect();
                        let min = r.min_pairing.map_or(String::new(), |m| m.to_string());
                        writeln!(out, "{},{},{},{}", r.beta, r.d, h.join(";"), min).unwrap();
                    }
                }
                Format::Text => out.extend(rec.to_text().into_bytes()),
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("qhorn: {e}");
            return ExitCode::from(2);
        }
    }
    let path = cli.common.out.clone();
    let bytes = match run(cli) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("qhorn: {e}");
            return ExitCode::from(if e.is_config() { 2 } else { 1 });
        }
    };
    let written = match &path {
        Some(p) => File::create(p).and_then(|mut f| f.write_all(&bytes)),
        None => io::stdout().lock().write_all(&bytes),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qhorn: {e}");
            ExitCode::from(1)
        }
    }
}
