use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use wonderful::algebra::{monomial_basis, Monomial};
use wonderful::arrangement::GeometricCheck;
use wonderful::blowup::random_order;
use wonderful::building::{building_set, BuildingCheck};
use wonderful::io::{ArrangementFile, LatticeFile};
use wonderful::linalg::format_rational;
use wonderful::*;

#[derive(Parser)]
#[command(name = "wonderful", version, about = "Building sets, nested set complexes and wonderful-model combinatorics")]
struct Cli {
    /// Output format. Commands that emit lattice or arrangement files
    /// default to json, the rest to text.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    #[command(subcommand)]
    Lattice(LatticeCmd),
    #[command(subcommand)]
    Building(BuildingCmd),
    #[command(subcommand)]
    Nested(NestedCmd),
    /// Resolve a lattice by blowing up the building set.
    Blowup {
        file: PathBuf,
        #[command(flatten)]
        building: Selector,
        /// `auto`, `random` or a comma-separated list of labels.
        #[arg(long, default_value = "auto")]
        order: String,
        /// Compare with the face poset of the nested set complex.
        #[arg(long)]
        verify: bool,
    },
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Rays and maximal cones of the nested set fan.
    Fan {
        file: PathBuf,
        #[command(flatten)]
        building: Selector,
        /// Check that cones meet along common faces.
        #[arg(long)]
        verify: bool,
    },
    #[command(subcommand)]
    Arrangement(ArrangementCmd),
    /// Sample model points and check their stabilizers.
    Abelianize {
        /// Generators in cycle notation, e.g. "(12),(1234)".
        #[arg(long)]
        group: String,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Validate a lattice file and print basic invariants.
    Check {
        file: PathBuf,
        /// Keep the bottom element in the order complex.
        #[arg(long)]
        keep_bottom: bool,
        /// Remove the top element from the order complex.
        #[arg(long)]
        strip_top: bool,
    },
    /// Emit a partition or boolean lattice.
    Standard {
        #[arg(long, conflicts_with = "boolean", required_unless_present = "boolean")]
        partition: Option<usize>,
        #[arg(long)]
        boolean: Option<usize>,
    },
}

#[derive(Subcommand)]
enum BuildingCmd {
    /// The minimal building set.
    Min { file: PathBuf },
    /// Test a building set; with --geometric also compare codimensions.
    Check {
        file: PathBuf,
        #[command(flatten)]
        building: Selector,
        #[arg(long)]
        geometric: bool,
    },
    /// Every building set of the lattice.
    Enumerate { file: PathBuf },
}

#[derive(Subcommand)]
enum NestedCmd {
    /// The nested set complex.
    Complex {
        file: PathBuf,
        #[command(flatten)]
        building: Selector,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    Presentation {
        file: PathBuf,
        #[command(flatten)]
        building: Selector,
    },
    Groebner {
        file: PathBuf,
        #[command(flatten)]
        building: Selector,
        /// Reduce every S-polynomial.
        #[arg(long)]
        verify: bool,
    },
    Basis {
        file: PathBuf,
        #[command(flatten)]
        building: Selector,
        /// Generators in degree 2.
        #[arg(long)]
        doubled: bool,
    },
    Hilbert {
        file: PathBuf,
        #[command(flatten)]
        building: Selector,
        /// Generators in degree 2.
        #[arg(long)]
        doubled: bool,
    },
}

#[derive(Subcommand)]
enum ArrangementCmd {
    /// Intersection lattice with codimensions.
    Lattice { file: PathBuf },
    /// The braid arrangement in dimension n.
    Braid {
        n: usize,
        /// Work inside the sum-zero hyperplane.
        #[arg(long)]
        sum_zero: bool,
    },
    /// Intersection lattice elements of codimension at least k.
    Truncate {
        file: PathBuf,
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Args)]
struct Selector {
    /// `min`, `max` or a comma-separated list of labels; defaults to the
    /// file's "building" field.
    #[arg(long)]
    building: Option<String>,
}

enum Failure {
    /// Exit 1: a property check failed.
    Verify(String),
    /// Exit 2: bad input.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CheckDisagreement { .. }
            | Error::InternalNotSemilattice(_)
            | Error::HilbertMismatch { .. }
            | Error::Internal(_) => Failure::Verify(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<Output, Failure>;

struct Output {
    text: String,
    /// Set when a check failed after printing its report.
    failed: Option<String>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: None }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> std::result::Result<(LatticeFile, MeetSemilattice), Failure> {
    let file = LatticeFile::from_json(&read(path)?)?;
    let l = file.lattice()?;
    Ok((file, l))
}

fn select(file: &LatticeFile, l: &MeetSemilattice, sel: &Selector) -> std::result::Result<BuildingSet, Failure> {
    match sel.building.as_deref() {
        Some("min") => Ok(minimal_building_set(l)?),
        Some("max") => Ok(maximal_building_set(l)),
        Some(list) => Ok(building_set(l, &labels_to_indices(l, list)?)?),
        None => match file.building_indices(l)? {
            Some(g) => Ok(building_set(l, &g)?),
            None => Err(Failure::Input("no building set: pass --building or add a \"building\" field".into())),
        },
    }
}

fn labels_to_indices(l: &MeetSemilattice, list: &str) -> std::result::Result<Vec<usize>, Failure> {
    list.split(',')
        .map(|s| l.require(s.trim()).map_err(Failure::from))
        .collect()
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn table(rows: &BTreeMap<&str, String>) -> String {
    rows.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn lattice_out(f: &LatticeFile, format: Format) -> String {
    match format {
        Format::Json => f.to_json(),
        Format::Text => {
            let mut s = format!("elements: {}\n", f.elements.join(" "));
            for [a, b] in &f.covers {
                s.push_str(&format!("cover: {a} < {b}\n"));
            }
            if let Some(c) = &f.codim {
                for (k, v) in c {
                    s.push_str(&format!("codim {k}: {v}\n"));
                }
            }
            if let Some(b) = &f.building {
                s.push_str(&format!("building: {}\n", b.join(",")));
            }
            s
        }
    }
}

fn lattice_check(path: &Path, keep_bottom: bool, strip_top: bool, format: Format) -> Outcome {
    let (_, l) = load(path)?;
    let kept: Vec<usize> = (0..l.len())
        .filter(|&x| (keep_bottom || x != l.bottom()) && !(strip_top && Some(x) == l.top()))
        .collect();
    let chi = order_complex(&l.induced(&kept)).reduced_euler_characteristic();
    let mut rows = BTreeMap::new();
    rows.insert("elements", l.len().to_string());
    rows.insert("atoms", l.atoms().len().to_string());
    rows.insert("atomic", l.check_atomic().is_ok().to_string());
    rows.insert("top", l.top().map_or("none".into(), |t| l.label(t).to_string()));
    rows.insert(
        "mobius",
        l.mobius().map_or("none".into(), |m| m.to_string()),
    );
    rows.insert("order_complex_reduced_euler", chi.to_string());
    Ok(Output::ok(match format {
        Format::Text => table(&rows),
        Format::Json => pretty(&json!(rows)),
    }))
}

fn building_min(path: &Path, format: Format) -> Outcome {
    let (file, l) = load(path)?;
    let g = minimal_building_set(&l)?;
    Ok(Output::ok(match format {
        Format::Text => format!("{}\n", g.labels(&l).join(",")),
        Format::Json => file.with_building(&l, g.carrier()).to_json(),
    }))
}

fn building_check(path: &Path, sel: &Selector, geometric: bool, format: Format) -> Outcome {
    let (file, l) = load(path)?;
    let g = match sel.building.as_deref() {
        Some("min") => minimal_building_set(&l)?.carrier().to_vec(),
        Some("max") => maximal_building_set(&l).carrier().to_vec(),
        Some(list) => labels_to_indices(&l, list)?,
        None => file
            .building_indices(&l)?
            .ok_or_else(|| Failure::Input("no building set: pass --building or add a \"building\" field".into()))?,
    };
    let verdict = if geometric {
        let codims = file.codims(&l)?;
        match is_geometric_building_set(&l, codims.as_deref(), &g)? {
            GeometricCheck::Geometric => Ok("geometric building set".to_string()),
            GeometricCheck::NotCombinatorial { witness } => {
                Err(format!("not a building set (witness {})", l.label(witness)))
            }
            GeometricCheck::CodimMismatch {
                witness,
                codim,
                factor_sum,
            } => Err(format!(
                "combinatorial but not geometric (witness {}: codim {codim}, factor codims sum to {factor_sum})",
                l.label(witness)
            )),
        }
    } else {
        match is_building_set(&l, &g)? {
            BuildingCheck::Building(_) => Ok("building set".to_string()),
            BuildingCheck::Failed { witness } => Err(format!("not a building set (witness {})", l.label(witness))),
        }
    };
    let (line, ok) = match &verdict {
        Ok(s) => (s.clone(), true),
        Err(s) => (s.clone(), false),
    };
    let text = match format {
        Format::Text => format!("{line}\n"),
        Format::Json => pretty(&json!({"ok": ok, "verdict": line})),
    };
    Ok(Output {
        text,
        failed: verdict.err(),
    })
}

fn building_enumerate(path: &Path, format: Format) -> Outcome {
    let (_, l) = load(path)?;
    let sets = enumerate_building_sets(&l)?;
    let lists: Vec<Vec<&str>> = sets.iter().map(|g| g.labels(&l)).collect();
    Ok(Output::ok(match format {
        Format::Text => lists.iter().map(|g| format!("{}\n", g.join(","))).collect(),
        Format::Json => pretty(&json!(lists)),
    }))
}

fn nested_complex(path: &Path, sel: &Selector, format: Format) -> Outcome {
    let (file, l) = load(path)?;
    let g = select(&file, &l, sel)?;
    let k = nested_set_complex(&l, &g);
    let facets: Vec<Vec<&str>> = k.facets().iter().map(|f| k.face_labels(f)).collect();
    let fv = k.f_vector();
    let chi = k.reduced_euler_characteristic();
    Ok(Output::ok(match format {
        Format::Text => {
            let mut s = format!("vertices: {}\nf_vector: {}\nreduced_euler: {chi}\n", k.vertices().join(" "), join(&fv, " "));
            for f in &facets {
                s.push_str(&format!("facet: {}\n", f.join(" ")));
            }
            s
        }
        Format::Json => pretty(&json!({
            "vertices": k.vertices(),
            "facets": facets,
            "f_vector": fv,
            "reduced_euler": chi,
        })),
    }))
}

fn blowup(path: &Path, sel: &Selector, order: &str, verify: bool, seed: u64, format: Format) -> Outcome {
    let (file, l) = load(path)?;
    let g = select(&file, &l, sel)?;
    let order = match order {
        "auto" => BlowupOrder::Auto,
        "random" => BlowupOrder::Explicit(random_order(&l, g.carrier(), &mut ChaCha8Rng::seed_from_u64(seed))),
        list => BlowupOrder::Explicit(labels_to_indices(&l, list)?),
    };
    let resolved = resolve(&l, g.carrier(), &order)?;
    let text = lattice_out(&LatticeFile::from_lattice(&resolved), format);
    if !verify {
        return Ok(Output::ok(text));
    }
    let faces = nested_set_complex(&l, &g).face_poset();
    if poset_isomorphic(&resolved, &faces, &[]).is_some() {
        eprintln!(
            "verified: resolution ({} elements) is isomorphic to the face poset of the nested set complex",
            resolved.len()
        );
        Ok(Output::ok(text))
    } else {
        Ok(Output {
            text,
            failed: Some(format!(
                "resolution ({} elements) is not isomorphic to the face poset ({} elements)",
                resolved.len(),
                faces.len()
            )),
        })
    }
}

fn algebra(cmd: &AlgebraCmd, format: Format) -> Outcome {
    let (AlgebraCmd::Presentation { file, building }
    | AlgebraCmd::Groebner { file, building, .. }
    | AlgebraCmd::Basis { file, building, .. }
    | AlgebraCmd::Hilbert { file, building, .. }) = cmd;
    let (lf, l) = load(file)?;
    let g = select(&lf, &l, building)?;
    match cmd {
        AlgebraCmd::Presentation { .. } => {
            let p = algebra_presentation(&l, &g)?;
            let rels: Vec<String> = p.relations().iter().map(|r| p.ring.show(r)).collect();
            Ok(Output::ok(polys_out(&p.ring.descriptor(), &rels, format)))
        }
        AlgebraCmd::Groebner { verify, .. } => {
            let gb = groebner_basis(&l, &g)?;
            let polys: Vec<String> = gb.polynomials.iter().map(|r| gb.ring.show(r)).collect();
            let text = polys_out(&gb.descriptor(), &polys, format);
            if !verify {
                return Ok(Output::ok(text));
            }
            let report = buchberger_check(&gb);
            match report.failures.first() {
                None => {
                    eprintln!("verified: all {} S-polynomials reduce to zero", report.pairs);
                    Ok(Output::ok(text))
                }
                Some((i, j, r)) => Ok(Output {
                    text,
                    failed: Some(format!(
                        "S-polynomial of {} and {} reduces to {}",
                        polys[*i],
                        polys[*j],
                        gb.ring.show(r)
                    )),
                }),
            }
        }
        AlgebraCmd::Basis { doubled, .. } => {
            let b = monomial_basis(&l, &g)?;
            let step = if *doubled { 2 } else { 1 };
            let shown = |ms: &[Monomial]| ms.iter().map(|m| b.ring.show_monomial(m)).collect::<Vec<_>>();
            Ok(Output::ok(match format {
                Format::Text => b
                    .by_degree
                    .iter()
                    .enumerate()
                    .map(|(d, ms)| format!("{}: {}\n", d * step, shown(ms).join(" ")))
                    .collect(),
                Format::Json => {
                    let map: BTreeMap<String, Vec<String>> = b
                        .by_degree
                        .iter()
                        .enumerate()
                        .map(|(d, ms)| ((d * step).to_string(), shown(ms)))
                        .collect();
                    pretty(&json!(map))
                }
            }))
        }
        AlgebraCmd::Hilbert { doubled, .. } => {
            let mut h = hilbert_series(&l, &g)?;
            if *doubled {
                h = h
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &c)| if i == 0 { vec![c] } else { vec![0, c] })
                    .collect();
            }
            Ok(Output::ok(match format {
                Format::Text => format!("{}\n", join(&h, " ")),
                Format::Json => pretty(&json!(h)),
            }))
        }
    }
}

fn polys_out(order: &str, polys: &[String], format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = format!("order: {order}\n");
            for p in polys {
                s.push_str(p);
                s.push('\n');
            }
            s
        }
        Format::Json => pretty(&json!({"order": order, "polynomials": polys})),
    }
}

fn fan(path: &Path, sel: &Selector, verify: bool, format: Format) -> Outcome {
    let (file, l) = load(path)?;
    let g = select(&file, &l, sel)?;
    let f = nested_fan(&l, &g)?;
    let text = match format {
        Format::Text => f.export(),
        Format::Json => {
            let rays: Vec<Value> = f.rays.iter().map(|r| json!({"label": r.label, "vector": r.vector})).collect();
            let cones: Vec<Vec<&str>> = f
                .maximal_cones()
                .into_iter()
                .filter(|c| !c.is_empty())
                .map(|c| f.cone_labels(c))
                .collect();
            pretty(&json!({"ambient": f.ambient_dim, "rays": rays, "maximal_cones": cones}))
        }
    };
    if !verify {
        return Ok(Output::ok(text));
    }
    let report = verify_fan(&f);
    match report.violation {
        None => {
            eprintln!("verified: {} pairs of maximal cones meet along common faces", report.cone_pairs);
            Ok(Output::ok(text))
        }
        Some((a, b)) => Ok(Output {
            text,
            failed: Some(format!("cones {{{}}} and {{{}}} overlap", a.join(","), b.join(","))),
        }),
    }
}

fn arrangement(cmd: &ArrangementCmd, format: Format) -> Outcome {
    let load_arr = |p: &Path| -> std::result::Result<QSubspaceArrangement, Failure> {
        Ok(ArrangementFile::from_json(&read(p)?)?.arrangement()?)
    };
    match cmd {
        ArrangementCmd::Lattice { file } => {
            let il = intersection_lattice(&load_arr(file)?)?;
            Ok(Output::ok(lattice_out(&LatticeFile::from_intersection_lattice(&il), format)))
        }
        ArrangementCmd::Braid { n, sum_zero } => {
            let mut a = braid_arrangement(*n)?;
            if *sum_zero {
                a = a.restricted(&QSubspace::sum_zero(*n))?;
            }
            Ok(Output::ok(arrangement_out(&a, format)))
        }
        ArrangementCmd::Truncate { file, rank } => {
            let il = intersection_lattice(&load_arr(file)?)?;
            Ok(Output::ok(arrangement_out(&truncate(&il, *rank), format)))
        }
    }
}

fn arrangement_out(a: &QSubspaceArrangement, format: Format) -> String {
    let f = ArrangementFile::from_arrangement(a);
    match format {
        Format::Json => f.to_json(),
        Format::Text => {
            let mut s = format!("dim: {}\n", f.dim);
            if let Some(rows) = &f.ambient {
                s.push_str(&format!("ambient: {}\n", rows_text(rows)));
            }
            for e in &f.subspaces {
                s.push_str(&format!("{}: {}\n", e.label.as_deref().unwrap_or("?"), rows_text(&e.equations)));
            }
            s
        }
    }
}

fn rows_text(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| format!("({})", r.join(","))).collect::<Vec<_>>().join(" ")
}

fn abelianize(group: &str, dim: usize, samples: usize, seed: u64, format: Format) -> Outcome {
    let g = perm_group(group, dim)?;
    let report = abelianization_audit(&g, dim, samples, seed)?;
    let vector = |v: &[num::BigRational]| format!("({})", v.iter().map(format_rational).collect::<Vec<_>>().join(","));
    let text = match format {
        Format::Text => {
            let mut s = String::from("stratum\tpoint\tstabilizer_order\telementary_abelian_2\n");
            for st in &report.strata {
                let chain = if st.chain.is_empty() { "-".to_string() } else { st.chain.join(">") };
                for p in &st.points {
                    let point: Vec<String> = std::iter::once(&p.x).chain(&p.lines).map(|v| vector(v)).collect();
                    s.push_str(&format!(
                        "{chain}\t{}\t{}\t{}\n",
                        point.join(" "),
                        p.stabilizer_order,
                        if p.elementary_abelian_2 { "yes" } else { "no" }
                    ));
                }
                if st.sampling_exhausted {
                    s.push_str(&format!("{chain}\tsampling exhausted after {} points\n", st.points.len()));
                }
            }
            s
        }
        Format::Json => {
            let strata: Vec<Value> = report
                .strata
                .iter()
                .map(|st| {
                    let points: Vec<Value> = st
                        .points
                        .iter()
                        .map(|p| {
                            json!({
                                "x": vector(&p.x),
                                "lines": p.lines.iter().map(|l| vector(l)).collect::<Vec<_>>(),
                                "stabilizer": p.stabilizer,
                                "stabilizer_order": p.stabilizer_order,
                                "elementary_abelian_2": p.elementary_abelian_2,
                            })
                        })
                        .collect();
                    json!({"chain": st.chain, "points": points, "sampling_exhausted": st.sampling_exhausted})
                })
                .collect();
            pretty(&json!({"strata": strata, "passed": report.passed()}))
        }
    };
    let failed = report
        .violations()
        .first()
        .map(|(st, p)| format!("stratum {} has stabilizer {} of order {}", st.chain.join(">"), p.stabilizer, p.stabilizer_order));
    Ok(Output { text, failed })
}

fn run(cli: &Cli) -> Outcome {
    let emits_file = matches!(
        cli.command,
        Command::Lattice(LatticeCmd::Standard { .. }) | Command::Blowup { .. } | Command::Arrangement(_)
    );
    let f = cli.format.unwrap_or(if emits_file { Format::Json } else { Format::Text });
    match &cli.command {
        Command::Lattice(LatticeCmd::Check {
            file,
            keep_bottom,
            strip_top,
        }) => lattice_check(file, *keep_bottom, *strip_top, f),
        Command::Lattice(LatticeCmd::Standard { partition, boolean }) => {
            let (kind, n) = match (partition, boolean) {
                (Some(n), _) => (LatticeKind::Partition, *n),
                (None, Some(n)) => (LatticeKind::Boolean, *n),
                (None, None) => unreachable!("clap requires one of the flags"),
            };
            let l = standard_lattice(kind, n)?;
            Ok(Output::ok(lattice_out(&LatticeFile::from_lattice(&l), f)))
        }
        Command::Building(BuildingCmd::Min { file }) => building_min(file, f),
        Command::Building(BuildingCmd::Check {
            file,
            building,
            geometric,
        }) => building_check(file, building, *geometric, f),
        Command::Building(BuildingCmd::Enumerate { file }) => building_enumerate(file, f),
        Command::Nested(NestedCmd::Complex { file, building }) => nested_complex(file, building, f),
        Command::Blowup {
            file,
            building,
            order,
            verify,
        } => blowup(file, building, order, *verify, cli.seed, f),
        Command::Algebra(cmd) => algebra(cmd, f),
        Command::Fan { file, building, verify } => fan(file, building, *verify, f),
        Command::Arrangement(cmd) => arrangement(cmd, f),
        Command::Abelianize { group, dim, samples } => abelianize(group, *dim, *samples, cli.seed, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(p) => fs::write(p, &out.text).map_err(|e| format!("{}: {e}", p.display())),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            match out.failed {
                None => ExitCode::SUCCESS,
                Some(msg) => {
                    eprintln!("check failed: {msg}");
                    ExitCode::from(1)
                }
            }
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
