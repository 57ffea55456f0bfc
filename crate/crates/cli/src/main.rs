use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use dtg::cover::{is_cover, quotient, VertexPartition};
use dtg::drg::{classify_imprimitive, intersection_array};
use dtg::families::{build, golay, write_standard_pack, Built, FamilySpec, Golay};
use dtg::geom::{geometric_orbital_graph, FormedSpace, SpaceSpec};
use dtg::graph::io::{format_graph, read_graph};
use dtg::graph::{bipartition, diameter, girth, Bipartition, Graph};
use dtg::group::io::{format_generators, read_group};
use dtg::transitivity::{automorphism_group, is_distance_transitive, is_s_geodesic_transitive, DEFAULT_BUDGET};
use dtg::verify::{self, Options, Suite};

#[derive(Parser)]
#[command(name = "dtg", version, about = "Distance-transitive and geodesic-transitive graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a graph and write it in edge-list format.
    Build {
        /// Family name, e.g. `odd`, `hamming`, `pg-incidence`.
        #[arg(long, conflicts_with_all = ["cayley", "space"])]
        family: Option<String>,
        /// Family parameters, e.g. `d=3,n=4`.
        #[arg(long, default_value = "")]
        params: String,
        /// A Golay coset graph: golay-c12, golay-c22 or golay-c23.
        #[arg(long, conflicts_with = "space")]
        cayley: Option<String>,
        /// A formed space, e.g. `unitary:n=3,q=3`; builds the geometric
        /// orbital graph of `--class`.
        #[arg(long)]
        space: Option<String>,
        #[arg(long, default_value_t = 1)]
        class: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the construction's automorphism group.
        #[arg(long)]
        group_out: Option<PathBuf>,
    },
    /// Order, valency, diameter, girth, imprimitivity and intersection array.
    Invariants {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Full automorphism group.
    Aut {
        graph: PathBuf,
        /// Write generators to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Whether a group of automorphisms is distance transitive.
    CheckDt {
        graph: PathBuf,
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Whether a group of automorphisms is transitive on i-geodesics for all i <= s.
    CheckGeodesic {
        graph: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Quotient by a vertex partition, with the cover test.
    Quotient {
        graph: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites: tables, rank4, lemmas, golay, covers, properties or all.
    Verify {
        suite: String,
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        data_pack: Option<PathBuf>,
        /// Restrict the rank4 suite to one row.
        #[arg(long)]
        row: Option<u32>,
        /// Range for the symmetric-group rows, e.g. `7..10`.
        #[arg(long)]
        n: Option<String>,
    },
    /// Write the data pack of the largest constructed graphs.
    DataPack { dir: PathBuf },
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<Graph> {
    read_graph(path).with_context(|| format!("reading graph {}", path.display()))
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<u32>> {
    let (a, b) = s.split_once("..").context("expected a range like 7..10")?;
    let b = b.trim_start_matches('=');
    Ok(a.trim().parse()?..=b.trim().parse()?)
}

fn cmd_build(
    family: Option<String>,
    params: &str,
    cayley: Option<String>,
    space: Option<String>,
    class: usize,
    output: &Option<PathBuf>,
    group_out: &Option<PathBuf>,
) -> Result<()> {
    let built: Built = match (family, cayley, space) {
        (Some(f), None, None) => build(&FamilySpec::with_params(f.parse()?, params)?)?,
        (None, Some(c), None) => golay(c.parse::<Golay>()?)?,
        (None, None, Some(s)) => {
            let space = FormedSpace::new(s.parse::<SpaceSpec>()?)?;
            let (graph, points) = geometric_orbital_graph(&space, class)?;
            let labels = (0..points.len()).map(|i| i.to_string()).collect();
            Built { name: format!("{s} class {class}"), graph, labels, group: None }
        }
        _ => bail!("give exactly one of --family, --cayley, --space"),
    };
    emit(output, &format_graph(&built.graph))?;
    if let Some(path) = group_out {
        let g = built.group.as_ref().with_context(|| format!("{} has no construction group", built.name))?;
        fs::write(path, format_generators(g.degree(), g.generators()))?;
    }
    if output.is_some() {
        eprintln!("{}: {} vertices, {} edges", built.name, built.graph.n(), built.graph.m());
    }
    Ok(())
}

fn invariants(g: &Graph) -> serde_json::Value {
    let diam = diameter(g).ok();
    let bip = matches!(bipartition(g), Bipartition::Bipartite(_));
    let mut v = json!({
        "order": g.n(),
        "edges": g.m(),
        "valency": g.valency(),
        "diameter": diam,
        "girth": girth(g),
        "bipartite": bip,
    });
    match intersection_array(g) {
        Ok(a) => {
            let imp = classify_imprimitive(g, &a);
            v["distance_regular"] = json!(true);
            v["intersection_array"] = json!(a.to_string());
            v["antipodal_r"] = json!(imp.antipodal_r());
            v["kind"] = json!(imp.kind());
        }
        Err(e) => {
            v["distance_regular"] = json!(false);
            v["witness"] = json!(e.to_string());
        }
    }
    v
}

fn print_fields(v: &serde_json::Value) {
    if let Some(map) = v.as_object() {
        for (k, x) in map {
            let s = match x {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            println!("{k}: {s}");
        }
    }
}

fn report(v: serde_json::Value, as_json: bool) -> Result<()> {
    if as_json {
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        print_fields(&v);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build { family, params, cayley, space, class, output, group_out } => {
            cmd_build(family, &params, cayley, space, class, &output, &group_out)?;
        }
        Command::Invariants { graph, json } => report(invariants(&load(&graph)?), json)?,
        Command::Aut { graph, output, json } => {
            let g = load(&graph)?;
            let aut = automorphism_group(&g, DEFAULT_BUDGET)?;
            if let Some(p) = &output {
                fs::write(p, format_generators(g.n(), &aut.generators))?;
            }
            let group = aut.group(g.n());
            report(
                json!({
                    "order": aut.order.to_string(),
                    "generators": aut.generators.len(),
                    "vertex_transitive": group.is_transitive(),
                    "search_nodes": aut.nodes,
                }),
                json,
            )?;
        }
        Command::CheckDt { graph, group, json } => {
            let g = load(&graph)?;
            let grp = read_group(&group)?;
            let t = is_distance_transitive(&g, &grp)?;
            report(json!({"distance_transitive": t.transitive, "group_order": grp.order().to_string(), "witness": t.witness.map(|w| format!("{w:?}"))}), json)?;
        }
        Command::CheckGeodesic { graph, s, group, json } => {
            let g = load(&graph)?;
            let grp = read_group(&group)?;
            let t = is_s_geodesic_transitive(&g, &grp, s)?;
            report(json!({"s": s, "geodesic_transitive": t.transitive, "witness": t.witness.map(|w| format!("{w:?}"))}), json)?;
        }
        Command::Quotient { graph, partition, output, json } => {
            let g = load(&graph)?;
            let text = fs::read_to_string(&partition).with_context(|| format!("reading {}", partition.display()))?;
            let p = VertexPartition::parse(g.n(), &text)?;
            let q = quotient(&g, &p)?;
            let cover = is_cover(&g, &p)?;
            let summary = json!({
                "blocks": p.len(),
                "quotient_order": q.n(),
                "quotient_valency": q.valency(),
                "cover": cover.is_ok(),
                "violation": cover.err().map(|v| json!({"vertex": v.vertex, "block": v.block, "neighbours": v.neighbours})),
            });
            match &output {
                Some(_) => {
                    emit(&output, &format_graph(&q))?;
                    report(summary, json)?;
                }
                None => {
                    emit(&None, &format_graph(&q))?;
                    eprintln!("{summary}");
                }
            }
        }
        Command::Verify { suite, deep, json, data_pack, row, n } => {
            let suite: Suite = suite.parse()?;
            let opts = Options { deep, row, n_range: n.as_deref().map(parse_range).transpose()?, data_pack, ..Options::from_env() };
            let r = verify::run(suite, &opts);
            if json {
                println!("{}", r.to_json());
            } else {
                print!("{r}");
            }
            if r.has_fail() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::DataPack { dir } => {
            let m = write_standard_pack(&dir)?;
            for e in &m.graphs {
                println!("{} {} vertices sha256 {}", e.name, e.n, e.sha256);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
