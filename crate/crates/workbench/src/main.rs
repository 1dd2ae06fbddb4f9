//! Command-line front end: catalog and family builders, fusion tables,
//! group diagnostics, lattice reports and the verification suites.

use clap::{Args, Parser, Subcommand};
use griess_core::*;
use griess_exact::{determinant, ExactScalar, Matrix};
use griess_groups::{close_axes, permutation_image, product_order_table, FlavorRule};
use griess_lattice::{
    eta_frame, full_scan, s_t_decomposition, LatticeGriess, RootType,
};
use griess_models::*;
use griess_workbench::{
    export_algebra, import_algebra, run_suite, AlgebraJson, Check, WorkbenchConfig,
    WorkbenchError,
};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "griess", about = "Exact workbench for axis algebras and their involution groups", version)]
struct Cli {
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format for reports: json, csv or text
    #[arg(long, global = true)]
    format: Option<String>,
    /// Parallelism degree of the suite runner
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// JSON configuration file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a dihedral catalog algebra, or the classification table
    Catalog(CatalogArgs),
    /// Emit central charge, weight and fusion tables of a unitary series
    Fusion {
        /// Series index
        #[arg(long)]
        n: u32,
    },
    /// Build a family algebra and emit it with a verification report
    Build(BuildArgs),
    /// Axis-orbit closure and group diagnostics over a serialized algebra
    Group {
        /// Path to a serialized algebra
        #[arg(long)]
        model: PathBuf,
        /// Comma-separated basis labels of the seed axes
        #[arg(long)]
        seeds: String,
        /// Involution flavor rule: tau, sigma or auto
        #[arg(long, default_value = "auto")]
        flavor: String,
    },
    /// Lattice algebra reports
    Lattice {
        /// Root system type: A1..A8, D4, E6, E7, E8
        #[arg(long = "type")]
        rtype: String,
        /// Run the 496-vector enumeration (E8 only)
        #[arg(long)]
        enumerate_ising: bool,
        /// Emit the nested-chain frame charges (type A only)
        #[arg(long)]
        eta_frame: bool,
        /// Emit the orthogonal decomposition charges
        #[arg(long)]
        decompose: bool,
    },
    /// Run a verification suite: catalog, family, groups, lattice or all
    Verify {
        /// Suite name
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Args)]
struct CatalogArgs {
    /// Catalog type: 2A, 2B, 3A or 6A
    name: Option<String>,
    /// Emit the classification metadata table instead
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct BuildArgs {
    #[command(subcommand)]
    what: BuildWhat,
}

#[derive(Subcommand)]
enum BuildWhat {
    /// The inductive family member of the given stage
    Xn {
        #[arg(long)]
        n: usize,
    },
    /// The four-generator algebra over the given tail pair type
    Abxy {
        #[arg(long = "type")]
        tail: String,
    },
}

fn emit(cli_out: &Option<PathBuf>, text: String) -> Result<(), WorkbenchError> {
    match cli_out {
        Some(path) => std::fs::write(path, text).map_err(WorkbenchError::from),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

#[derive(Serialize)]
struct BuildOutput {
    algebra: AlgebraJson,
    verification: Vec<Check>,
}

#[derive(Serialize)]
struct FusionSector {
    r: u32,
    s: u32,
    h: String,
    tau_sign: i32,
    sigma_sign: Option<i32>,
}

#[derive(Serialize)]
struct FusionEntry {
    left: (u32, u32),
    right: (u32, u32),
    products: Vec<(u32, u32)>,
}

#[derive(Serialize)]
struct FusionOutput {
    n: u32,
    central_charge: String,
    sectors: Vec<FusionSector>,
    fusion: Vec<FusionEntry>,
}

fn canonical_sectors(n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for r in 1..=n + 1 {
        for s in 1..=n + 2 {
            if virasoro::canonical_sector(n, r, s) == (r, s) {
                out.push((r, s));
            }
        }
    }
    out
}

fn run(cli: Cli) -> Result<bool, WorkbenchError> {
    let mut cfg = match &cli.config {
        Some(path) => WorkbenchConfig::load(path)?,
        None => WorkbenchConfig::default(),
    };
    if let Some(f) = &cli.format {
        cfg.format = f.clone();
    }
    if let Some(j) = cli.jobs {
        cfg.jobs = j;
    }
    cfg.validate()?;

    match &cli.command {
        Command::Catalog(args) => {
            if args.table {
                let table = dihedral_table();
                let text = match cfg.format.as_str() {
                    "csv" => {
                        let mut out = String::from(
                            "type,scaled_inner_product,griess_dim,ising_count,full_table_available\n",
                        );
                        for row in table {
                            out.push_str(&format!(
                                "\"{}\",\"{}\",\"{}\",\"{}\",\"{}\"\n",
                                row.name,
                                row.scaled_inner_product,
                                row.griess_dim,
                                row.ising_count,
                                row.full_table_available
                            ));
                        }
                        out
                    }
                    _ => {
                        #[derive(Serialize)]
                        struct Row {
                            name: String,
                            scaled_inner_product: i64,
                            griess_dim: usize,
                            ising_count: usize,
                            full_table_available: bool,
                        }
                        let rows: Vec<Row> = table
                            .into_iter()
                            .map(|t| Row {
                                name: t.name.to_string(),
                                scaled_inner_product: t.scaled_inner_product,
                                griess_dim: t.griess_dim,
                                ising_count: t.ising_count,
                                full_table_available: t.full_table_available,
                            })
                            .collect();
                        to_pretty(&rows)
                    }
                };
                emit(&cli.out, text)?;
                return Ok(true);
            }
            let name = args.name.as_deref().ok_or_else(|| {
                WorkbenchError::Usage("give a catalog type or --table".into())
            })?;
            let tname = DihedralTypeName::from_label(name)
                .ok_or_else(|| WorkbenchError::Usage(format!("unknown type {name}")))?;
            let cat = make_catalog(tname).ok_or_else(|| {
                WorkbenchError::Usage(format!(
                    "type {tname} carries classification metadata only"
                ))
            })?;
            emit(&cli.out, to_pretty(&export_algebra(&cat.algebra)))?;
            Ok(true)
        }
        Command::Fusion { n } => {
            if *n == 0 {
                return Err(WorkbenchError::Usage("series index starts at 1".into()));
            }
            let sectors = canonical_sectors(*n);
            let out = FusionOutput {
                n: *n,
                central_charge: virasoro::UnitaryCharge::new(*n).c.to_string(),
                sectors: sectors
                    .iter()
                    .map(|&(r, s)| FusionSector {
                        r,
                        s,
                        h: virasoro::highest_weight(*n, r, s).unwrap().h.to_string(),
                        tau_sign: virasoro::tau_sign(*n, r, s).unwrap(),
                        sigma_sign: virasoro::sigma_sign(*n, r, s).ok(),
                    })
                    .collect(),
                fusion: sectors
                    .iter()
                    .flat_map(|&a| {
                        sectors.iter().map(move |&b| FusionEntry {
                            left: a,
                            right: b,
                            products: virasoro::fuse_canonical(*n, a, b).unwrap(),
                        })
                    })
                    .collect(),
            };
            emit(&cli.out, to_pretty(&out))?;
            Ok(true)
        }
        Command::Build(args) => {
            let (algebra, checks) = match &args.what {
                BuildWhat::Xn { n } => {
                    let f = build_xn_capped(*n, cfg.n_cap)
                        .map_err(|e| WorkbenchError::Usage(e.to_string()))?;
                    let mut checks = vec![Check::compare(
                        "build.charge",
                        "conformal central charge",
                        omega_charge(*n),
                        f.omega_virasoro(*n)
                            .map(|v| v.central_charge.to_string())
                            .unwrap_or_else(|e| format!("error: {e}")),
                    )];
                    let basis: Vec<Element> =
                        (0..f.dim()).map(|i| f.algebra.basis_element(i)).collect();
                    let det = determinant(&Matrix::from_fn(f.dim(), f.dim(), |i, j| {
                        f.algebra.form(&basis[i], &basis[j])
                    }))
                    .unwrap();
                    checks.push(Check::boolean(
                        "build.gram",
                        "Gram matrix of the basis is nonsingular",
                        !det.is_zero(),
                    ));
                    for k in 1..=*n {
                        checks.push(Check::compare(
                            format!("build.frame.f{k}"),
                            format!("central charge of frame vector {k}"),
                            virasoro::UnitaryCharge::new(k as u32 + 4).c,
                            central_charge(&f.algebra, &f.frame_vector(k)),
                        ));
                    }
                    (f.algebra, checks)
                }
                BuildWhat::Abxy { tail } => {
                    let tname = DihedralTypeName::from_label(tail)
                        .ok_or_else(|| WorkbenchError::Usage(format!("unknown type {tail}")))?;
                    let built = dispatch_abxy(tname)
                        .map_err(|e| WorkbenchError::Usage(e.to_string()))?;
                    let alg = built.algebra().clone();
                    let basis: Vec<Element> =
                        (0..alg.dim()).map(|i| alg.basis_element(i)).collect();
                    let omega = conformal_vector(&alg, &basis);
                    let checks = vec![Check::compare(
                        "build.charge",
                        "conformal central charge",
                        match tname {
                            DihedralTypeName::OneA => q(51, 20).to_string(),
                            DihedralTypeName::TwoA | DihedralTypeName::TwoB => {
                                q(52, 15).to_string()
                            }
                            _ => q(228, 55).to_string(),
                        },
                        omega
                            .map(|v| v.central_charge.to_string())
                            .unwrap_or_else(|e| format!("error: {e}")),
                    )];
                    (alg, checks)
                }
            };
            let out = BuildOutput {
                algebra: export_algebra(&algebra),
                verification: checks,
            };
            emit(&cli.out, to_pretty(&out))?;
            Ok(true)
        }
        Command::Group {
            model,
            seeds,
            flavor,
        } => {
            let text = std::fs::read_to_string(model)?;
            let json: AlgebraJson = serde_json::from_str(&text)
                .map_err(|e| WorkbenchError::SchemaViolation(e.to_string()))?;
            let alg = import_algebra(&json)?;
            let rule = FlavorRule::parse(flavor)
                .ok_or_else(|| WorkbenchError::Usage(format!("unknown flavor {flavor}")))?;
            let seed_elems: Vec<Element> = seeds
                .split(',')
                .map(|label| {
                    alg.index_of_label(label.trim())
                        .map(|i| alg.basis_element(i))
                        .ok_or_else(|| {
                            WorkbenchError::Usage(format!("unknown basis label {label}"))
                        })
                })
                .collect::<Result<_, _>>()?;
            let axes = close_axes(&alg, &seed_elems, rule, cfg.closure_budget)
                .map_err(|e| WorkbenchError::Usage(e.to_string()))?;
            let image = permutation_image(&alg, &axes)
                .map_err(|e| WorkbenchError::Usage(e.to_string()))?;
            let orders = product_order_table(&axes)
                .map_err(|e| WorkbenchError::Usage(e.to_string()))?;
            let verdict = griess_groups::three_transposition_verdict(&alg, &axes)
                .map_err(|e| WorkbenchError::Usage(e.to_string()))?;
            #[derive(Serialize)]
            struct GroupOutput {
                axis_count: usize,
                flavors: Vec<String>,
                order: String,
                faithful: bool,
                pair_order_histogram: Vec<(usize, usize)>,
                three_transposition: bool,
                transitive_on_axes: bool,
            }
            let out = GroupOutput {
                axis_count: axes.len(),
                flavors: axes.flavors().iter().map(|f| f.to_string()).collect(),
                order: image.group.order().to_string(),
                faithful: image.faithful,
                pair_order_histogram: {
                    let mut h: Vec<(usize, usize)> = Vec::new();
                    for (_, _, o) in orders {
                        match h.iter_mut().find(|(v, _)| *v == o) {
                            Some((_, c)) => *c += 1,
                            None => h.push((o, 1)),
                        }
                    }
                    h.sort_unstable();
                    h
                },
                three_transposition: verdict.is_three_transposition,
                transitive_on_axes: verdict.transitive_on_axes,
            };
            emit(&cli.out, to_pretty(&out))?;
            Ok(true)
        }
        Command::Lattice {
            rtype,
            enumerate_ising,
            eta_frame: want_eta,
            decompose,
        } => {
            let t = RootType::parse(rtype)
                .ok_or_else(|| WorkbenchError::Usage(format!("unknown root type {rtype}")))?;
            let lg = LatticeGriess::new(t)
                .map_err(|e| WorkbenchError::Usage(e.to_string()))?;
            #[derive(Serialize)]
            struct LatticeOutput {
                rtype: String,
                rank: usize,
                dim: usize,
                root_pairs: usize,
                coxeter: usize,
                decomposition: Option<(String, String)>,
                eta_charges: Option<Vec<String>>,
                ising_scan: Option<griess_workbench::report::Check>,
                scan_histogram: Option<Vec<(String, usize)>>,
            }
            let mut out = LatticeOutput {
                rtype: t.to_string(),
                rank: t.rank(),
                dim: lg.dim(),
                root_pairs: lg.xdim(),
                coxeter: lg.roots.coxeter,
                decomposition: None,
                eta_charges: None,
                ising_scan: None,
                scan_histogram: None,
            };
            if *decompose {
                let st = s_t_decomposition(&lg).map_err(|e| WorkbenchError::Usage(e.to_string()))?;
                out.decomposition = Some((
                    st.s.central_charge.to_string(),
                    st.t.central_charge.to_string(),
                ));
            }
            if *want_eta {
                let etas = eta_frame(&lg).map_err(|e| WorkbenchError::Usage(e.to_string()))?;
                out.eta_charges =
                    Some(etas.iter().map(|e| e.central_charge.to_string()).collect());
            }
            if *enumerate_ising {
                if t != RootType::E8 {
                    return Err(WorkbenchError::Usage(
                        "the full enumeration is defined for E8".into(),
                    ));
                }
                let report = full_scan(&lg).map_err(|e| WorkbenchError::Usage(e.to_string()))?;
                out.ising_scan = Some(Check::boolean(
                    "lattice.e8.scan",
                    format!(
                        "{} candidates, all axes: {}, distinct: {}, values in table: {}",
                        report.count, report.all_ising, report.all_distinct, report.values_in_table
                    ),
                    report.all_ising && report.all_distinct && report.values_in_table,
                ));
                out.scan_histogram = Some(report.scaled_histogram);
            }
            emit(&cli.out, to_pretty(&out))?;
            Ok(true)
        }
        Command::Verify { suite } => {
            let report = run_suite(suite, cfg.jobs).ok_or_else(|| {
                WorkbenchError::Usage(format!(
                    "unknown suite {suite}; choose from {:?}",
                    griess_workbench::SUITES
                ))
            })?;
            let text = match cfg.format.as_str() {
                "csv" => report.to_csv(),
                "text" => report.to_text(),
                _ => to_pretty(&report),
            };
            emit(&cli.out, text)?;
            Ok(report.all_pass())
        }
    }
}

fn q(p: i64, den: i64) -> ExactScalar {
    ExactScalar::ratio(p, den)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
