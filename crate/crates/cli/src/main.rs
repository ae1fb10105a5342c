use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bridgeworks::bench::{bench, Algorithm};
use bridgeworks::bridge::{
    approx_greedy, connect_forest, gen_fig2_instance, infer_backend, one_bridge_decide, solve_exact, BridgeSolution,
};
use bridgeworks::generate::{gen_random_tree, BBox};
use bridgeworks::geometry::{Point, WeightedTree};
use bridgeworks::io;
use bridgeworks::length::parse_rational;
use bridgeworks::reductions::cov::cov_to_one_bridge_with;
use bridgeworks::reductions::rdbp::min_vertex_cover;
use bridgeworks::reductions::{
    cov_brute_force, ksum_brute_force, one_in_three_sat_brute_force, rdbp_brute_force, rdbp_min_budget, sat_to_cov,
    sat_to_ksum, sat_to_threesum, threesum_brute_force, vc_to_rdbp, verify_one_bridge_iff, Layout, OneInThreeSat,
};
use bridgeworks::report::{InstanceDigest, RunReport};
use bridgeworks::twin::{brute_force_twin_threads, gen_fig3_instance, solve_twin, TwinBridgeSolution};
use bridgeworks::{Backend, Error, Length, Result};

#[derive(Parser)]
#[command(name = "bridgeworks", version, about = "Bridge insertion between geometric trees")]
struct Cli {
    /// Print a JSON run report instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Write a Graphviz drawing of the instance and its bridges.
    #[arg(long, global = true, value_name = "FILE")]
    emit_dot: Option<PathBuf>,
    /// Worker threads for the exhaustive solvers.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One bridge between two trees.
    #[command(subcommand)]
    Bridge(BridgeCmd),
    /// Two vertex-disjoint bridges between two trees.
    #[command(subcommand)]
    Twin(TwinCmd),
    /// Connect several trees into one.
    #[command(subcommand)]
    Forest(ForestCmd),
    /// Generate instances.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Run a hardness reduction.
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// Check a reduction's equivalence on one input.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Time the solvers on random trees.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Pair {
    #[arg(long)]
    t1: PathBuf,
    #[arg(long)]
    t2: PathBuf,
}

#[derive(Subcommand)]
enum BridgeCmd {
    /// Optimal bridge, O(n^2).
    Exact(Pair),
    /// Closest-pair bridge, within a factor 2.
    Approx(Pair),
    /// Is there a bridge of length C1 realizing a leaf-to-leaf route of length C2?
    Decide {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, allow_hyphen_values = true)]
        c1: String,
        #[arg(long, allow_hyphen_values = true)]
        c2: String,
    },
}

#[derive(Subcommand)]
enum TwinCmd {
    Solve(Pair),
    Brute {
        #[command(flatten)]
        pair: Pair,
        /// Skip the n1 * n2 size guard.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Subcommand)]
enum ForestCmd {
    Connect {
        #[arg(required = true, num_args = 2..)]
        trees: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Trees on which the greedy bridge is nearly twice the optimum.
    Fig2 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Trees whose optimal twin bridges cross.
    Fig3 {
        #[arg(long)]
        eps: String,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Random tree (uses --seed).
    Tree {
        #[arg(long)]
        n: usize,
        #[arg(long, num_args = 4, value_names = ["XMIN", "YMIN", "XMAX", "YMAX"], allow_hyphen_values = true)]
        bbox: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LayoutArg {
    OffAxis,
    OnAxis,
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// One-in-three SAT to a one-bridge decision instance (via COV)
    SatToOnebridge {
        #[arg(long)]
        sat: PathBuf,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "off-axis")]
        layout: LayoutArg,
        #[arg(long)]
        force: bool,
    },
    #[command(name = "sat-to-3sum")]
    /// One-in-three SAT to 3-SUM, or k-SUM with --k
    SatTo3sum {
        #[arg(long)]
        sat: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Planar cubic vertex cover to shortcut insertion (RDBP)
    VcToRdbp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// SAT, COV and the one-bridge decision agree on a formula
    IffOnebridge {
        #[arg(long)]
        sat: PathBuf,
    },
    #[command(name = "iff-3sum")]
    /// SAT and 3-SUM agree on a formula
    Iff3sum {
        #[arg(long)]
        sat: PathBuf,
    },
    /// Minimum shortcut budget equals the minimum vertex cover
    IffRdbp {
        #[arg(long)]
        graph: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Exact,
    Approx,
    Twin,
    All,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Sizes to time (defaults depend on the algorithm).
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Seeds per size.
    #[arg(long, default_value_t = 3)]
    seeds: u64,
}

/// Shared state of one invocation.
struct Run {
    json: bool,
    dot: Option<PathBuf>,
    threads: usize,
    seed: u64,
    backend: Backend,
    command: Vec<String>,
    start: Instant,
}

impl Run {
    fn report<T: Serialize>(&self, backend: Backend, instances: Vec<InstanceDigest>, solution: T, human: String) {
        if self.json {
            let report = RunReport {
                command: self.command.clone(),
                seed: Some(self.seed),
                backend,
                instances,
                solution,
                duration_ms: self.start.elapsed().as_secs_f64() * 1e3,
            };
            println!("{}", report.to_json());
        } else {
            print!("{human}");
        }
    }

    fn tree(&self, path: &Path) -> Result<WeightedTree> {
        let t = io::parse_tree(&io::read_file(path)?, self.backend)?;
        Ok(match self.backend {
            Backend::Double => t.in_backend(Backend::Double),
            Backend::Rational => t,
        })
    }

    fn pair(&self, p: &Pair) -> Result<(WeightedTree, WeightedTree)> {
        Ok((self.tree(&p.t1)?, self.tree(&p.t2)?))
    }

    fn dot(&self, trees: &[&WeightedTree], bridges: &[io::BridgeEnds]) -> Result<()> {
        match &self.dot {
            Some(path) => io::write_file(path, &io::to_dot(trees, bridges)),
            None => Ok(()),
        }
    }
}

fn sat_file(path: &Path) -> Result<OneInThreeSat> {
    io::parse_sat(&io::read_file(path)?)
}

fn digests(t1: &WeightedTree, t2: &WeightedTree) -> Vec<InstanceDigest> {
    vec![InstanceDigest::tree("t1", t1), InstanceDigest::tree("t2", t2)]
}

fn exact_length(s: &str) -> Result<Length> {
    parse_rational(s).map(Length::Exact).map_err(Error::InvalidInput)
}

fn out_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.display())))
}

#[derive(Serialize)]
struct BridgeOutput {
    bridge: (String, String),
    bridge_length: Length,
    value: Length,
    witness: (String, String),
    backend: Backend,
}

fn bridge_output(t1: &WeightedTree, t2: &WeightedTree, s: &BridgeSolution, backend: Backend) -> BridgeOutput {
    BridgeOutput {
        bridge: (t1.label(s.p), t2.label(s.q)),
        bridge_length: s.bridge_length.clone(),
        value: s.value.clone(),
        witness: (t1.label(s.witness.0), t2.label(s.witness.1)),
        backend,
    }
}

fn bridge_table(o: &BridgeOutput) -> String {
    format!(
        "bridge      {} -- {}\nlength      {}\ndiameter    {}\nwitness     {} .. {}\nbackend     {}\n",
        o.bridge.0,
        o.bridge.1,
        o.bridge_length,
        o.value,
        o.witness.0,
        o.witness.1,
        o.backend.name()
    )
}

fn twin_table(t1: &WeightedTree, t2: &WeightedTree, s: &TwinBridgeSolution) -> String {
    let name = |v: bridgeworks::twin::TreeVertex| match v.tree {
        1 => format!("T1:{}", t1.label(v.vertex)),
        _ => format!("T2:{}", t2.label(v.vertex)),
    };
    format!(
        "bridge 1    {} -- {}\nbridge 2    {} -- {}\ndiameter    {}\nwitness     {} .. {}\ncase        {}\ncrossing    {}\n",
        t1.label(s.bridge1.0),
        t2.label(s.bridge1.1),
        t1.label(s.bridge2.0),
        t2.label(s.bridge2.1),
        s.value,
        name(s.witness.0),
        name(s.witness.1),
        s.dominant_case,
        s.intersecting
    )
}

fn twin_bridges(s: &TwinBridgeSolution) -> Vec<((usize, usize), (usize, usize))> {
    vec![((0, s.bridge1.0), (1, s.bridge1.1)), ((0, s.bridge2.0), (1, s.bridge2.1))]
}

fn run(cli: Cli, run: &Run) -> Result<bool> {
    match cli.command {
        Command::Bridge(cmd) => {
            let (pair, decide) = match &cmd {
                BridgeCmd::Exact(p) | BridgeCmd::Approx(p) => (p, None),
                BridgeCmd::Decide { pair, c1, c2 } => (pair, Some((exact_length(c1)?, exact_length(c2)?))),
            };
            let (t1, t2) = run.pair(pair)?;
            let backend = infer_backend(&[&t1, &t2]);
            if let Some((c1, c2)) = decide {
                let w = one_bridge_decide(&t1, &t2, &c1, &c2);
                if let Some(w) = &w {
                    run.dot(&[&t1, &t2], &[((0, w.p), (1, w.q))])?;
                }
                let human = match &w {
                    Some(w) => format!(
                        "yes: bridge {} -- {}, route {} .. {}\n",
                        t1.label(w.p),
                        t2.label(w.q),
                        t1.label(w.x),
                        t2.label(w.y)
                    ),
                    None => "no\n".to_string(),
                };
                let found = w.is_some();
                run.report(backend, digests(&t1, &t2), w, human);
                return Ok(found);
            }
            let s = match cmd {
                BridgeCmd::Exact(_) => solve_exact(&t1, &t2),
                _ => approx_greedy(&t1, &t2),
            };
            run.dot(&[&t1, &t2], &[((0, s.p), (1, s.q))])?;
            let out = bridge_output(&t1, &t2, &s, backend);
            let human = bridge_table(&out);
            run.report(backend, digests(&t1, &t2), out, human);
            Ok(true)
        }
        Command::Twin(cmd) => {
            let (s, t1, t2) = match cmd {
                TwinCmd::Solve(p) => {
                    let (t1, t2) = run.pair(&p)?;
                    (solve_twin(&t1, &t2)?, t1, t2)
                }
                TwinCmd::Brute { pair, force } => {
                    let (t1, t2) = run.pair(&pair)?;
                    (brute_force_twin_threads(&t1, &t2, force, run.threads)?, t1, t2)
                }
            };
            run.dot(&[&t1, &t2], &twin_bridges(&s))?;
            let human = twin_table(&t1, &t2, &s);
            run.report(infer_backend(&[&t1, &t2]), digests(&t1, &t2), s, human);
            Ok(true)
        }
        Command::Forest(ForestCmd::Connect { trees: paths }) => {
            let trees = paths.iter().map(|p| run.tree(p)).collect::<Result<Vec<_>>>()?;
            let c = connect_forest(&trees)?;
            let refs: Vec<&WeightedTree> = trees.iter().collect();
            let bridges: Vec<_> = c.bridges.iter().map(|b| (b.from, b.to)).collect();
            run.dot(&refs, &bridges)?;
            let mut human = format!("hub tree    {}\ndiameter    {}\n", c.hub, c.diameter);
            for b in &c.bridges {
                human += &format!(
                    "bridge      T{}:{} -- T{}:{}  ({})\n",
                    b.from.0,
                    trees[b.from.0].label(b.from.1),
                    b.to.0,
                    trees[b.to.0].label(b.to.1),
                    b.length
                );
            }
            let digests = trees.iter().enumerate().map(|(i, t)| InstanceDigest::tree(&format!("t{i}"), t)).collect();
            run.report(infer_backend(&refs), digests, c, human);
            Ok(true)
        }
        Command::Gen(cmd) => generate(cmd, run),
        Command::Reduce(cmd) => reduce(cmd, run),
        Command::Verify(cmd) => verify(cmd, run),
        Command::Bench(args) => {
            let algorithms = match args.suite {
                Suite::Exact => vec![Algorithm::SolveExact],
                Suite::Approx => vec![Algorithm::ApproxGreedy],
                Suite::Twin => vec![Algorithm::SolveTwin],
                Suite::All => vec![Algorithm::SolveExact, Algorithm::ApproxGreedy, Algorithm::SolveTwin],
            };
            let seeds: Vec<u64> = (run.seed..run.seed + args.seeds.max(1)).collect();
            let table = bench(&algorithms, args.sizes.as_deref(), &seeds);
            let mut human = format!("{:<14} {:>6} {:>12}\n", "algorithm", "n", "median ms");
            for r in &table.rows {
                human += &format!("{:<14} {:>6} {:>12.3}\n", r.algorithm.name(), r.n, r.median_ms);
            }
            for (a, e) in &table.exponents {
                human += &format!("exponent {:<14} {e:.2}\n", a.name());
            }
            run.report(run.backend, vec![], table, human);
            Ok(true)
        }
    }
}

#[derive(Serialize)]
struct GenOutput {
    exact: Option<BridgeOutput>,
    greedy: Option<BridgeOutput>,
    twin: Option<TwinBridgeSolution>,
}

fn write_pair(dir: &Option<PathBuf>, t1: &WeightedTree, t2: &WeightedTree) -> Result<()> {
    if let Some(dir) = dir {
        out_dir(dir)?;
        io::write_file(dir.join("t1.tree"), &io::write_tree(t1))?;
        io::write_file(dir.join("t2.tree"), &io::write_tree(t2))?;
    }
    Ok(())
}

fn generate(cmd: GenCmd, run: &Run) -> Result<bool> {
    match cmd {
        GenCmd::Fig2 { n, eps, out_dir } => {
            let eps = parse_rational(&eps).map_err(Error::InvalidInput)?;
            let (t1, t2) = gen_fig2_instance(n, &eps)?;
            write_pair(&out_dir, &t1, &t2)?;
            let backend = infer_backend(&[&t1, &t2]);
            let exact = bridge_output(&t1, &t2, &solve_exact(&t1, &t2), backend);
            let greedy = bridge_output(&t1, &t2, &approx_greedy(&t1, &t2), backend);
            let ratio = greedy.value.to_f64() / exact.value.to_f64();
            run.dot(
                &[&t1, &t2],
                &[
                    ((0, t1.index_of(&exact.bridge.0).unwrap_or(0)), (1, t2.index_of(&exact.bridge.1).unwrap_or(0))),
                    ((0, t1.index_of(&greedy.bridge.0).unwrap_or(0)), (1, t2.index_of(&greedy.bridge.1).unwrap_or(0))),
                ],
            )?;
            let human = format!(
                "exact       {} -- {}  diameter {}\ngreedy      {} -- {}  diameter {}\nratio       {ratio:.6}\n",
                exact.bridge.0, exact.bridge.1, exact.value, greedy.bridge.0, greedy.bridge.1, greedy.value
            );
            let out = GenOutput { exact: Some(exact), greedy: Some(greedy), twin: None };
            run.report(backend, digests(&t1, &t2), out, human);
            Ok(true)
        }
        GenCmd::Fig3 { eps, out_dir } => {
            let eps = parse_rational(&eps).map_err(Error::InvalidInput)?;
            let (t1, t2) = gen_fig3_instance(&eps)?;
            write_pair(&out_dir, &t1, &t2)?;
            let s = solve_twin(&t1, &t2)?;
            run.dot(&[&t1, &t2], &twin_bridges(&s))?;
            let human = twin_table(&t1, &t2, &s);
            let out = GenOutput { exact: None, greedy: None, twin: Some(s) };
            run.report(infer_backend(&[&t1, &t2]), digests(&t1, &t2), out, human);
            Ok(true)
        }
        GenCmd::Tree { n, bbox, out } => {
            if n == 0 {
                return Err(Error::InvalidInput("n must be at least 1".into()));
            }
            let bbox = match bbox {
                Some(v) => {
                    let c =
                        v.iter().map(|s| parse_rational(s).map_err(Error::InvalidInput)).collect::<Result<Vec<_>>>()?;
                    let [x0, y0, x1, y1] =
                        <[_; 4]>::try_from(c).map_err(|_| Error::InvalidInput("bbox needs 4 numbers".into()))?;
                    if x0 > x1 || y0 > y1 {
                        return Err(Error::InvalidInput("bbox minimum exceeds maximum".into()));
                    }
                    BBox { min: Point::new(x0, y0), max: Point::new(x1, y1) }
                }
                None => BBox::default(),
            };
            let t = gen_random_tree(n, run.seed, &bbox);
            let text = io::write_tree(&t);
            match &out {
                Some(path) => io::write_file(path, &text)?,
                None if !run.json => print!("{text}"),
                None => {}
            }
            if run.json {
                run.report(
                    infer_backend(&[&t]),
                    vec![InstanceDigest::tree("tree", &t)],
                    io::write_tree(&t),
                    String::new(),
                );
            }
            Ok(true)
        }
    }
}

#[derive(Serialize)]
struct OneBridgeOutput {
    m: usize,
    c: Length,
    c1: Length,
    c2: Length,
    a: usize,
    b: usize,
    padded: bool,
    complementary: Option<(usize, usize)>,
}

#[derive(Serialize)]
struct SumOutput {
    k: usize,
    digits: usize,
    parts: Vec<Vec<String>>,
    witness: Option<Vec<usize>>,
}

fn reduce(cmd: ReduceCmd, run: &Run) -> Result<bool> {
    match cmd {
        ReduceCmd::SatToOnebridge { sat, out_dir: dir, layout, force } => {
            let phi = sat_file(&sat)?;
            let cov = sat_to_cov(&phi, force)?;
            let layout = match layout {
                LayoutArg::OffAxis => Layout::OffAxis,
                LayoutArg::OnAxis => Layout::OnAxis,
            };
            let (t1, t2, params) = cov_to_one_bridge_with(&cov, layout)?;
            let complementary = cov_brute_force(&cov);
            if let Some(dir) = &dir {
                write_pair(&Some(dir.clone()), &t1, &t2)?;
                let json = serde_json::to_string_pretty(&params).expect("params serialize");
                io::write_file(dir.join("params.json"), &json)?;
                io::write_file(dir.join("cov.json"), &serde_json::to_string_pretty(&cov).expect("cov serializes"))?;
            }
            run.dot(&[&t1, &t2], &[])?;
            let out = OneBridgeOutput {
                m: params.m,
                c: params.c.clone(),
                c1: params.c1.clone(),
                c2: params.c2.clone(),
                a: cov.a.len(),
                b: cov.b.len(),
                padded: cov.provenance.as_ref().is_some_and(|p| p.padded),
                complementary,
            };
            let human = format!(
                "clauses     {}\nC           {}\nC1, C2      {}, {}\n|A|, |B|    {}, {}\ntrees       {} and {} vertices\n",
                out.m,
                out.c,
                out.c1,
                out.c2,
                out.a,
                out.b,
                t1.len(),
                t2.len()
            );
            run.report(Backend::Rational, digests(&t1, &t2), out, human);
            Ok(true)
        }
        ReduceCmd::SatTo3sum { sat, k, out, force } => {
            let phi = sat_file(&sat)?;
            let (parts, digits, witness) = if k == 3 {
                let inst = sat_to_threesum(&phi, force)?;
                let w = threesum_brute_force(&inst.s).map(|w| w.to_vec());
                (vec![inst.s], inst.digits, w)
            } else {
                let inst = sat_to_ksum(&phi, k, force)?;
                let w = ksum_brute_force(&inst)?;
                (inst.parts, inst.digits, w)
            };
            let mut text = String::new();
            for (i, p) in parts.iter().enumerate() {
                if parts.len() > 1 {
                    text += &format!("# part {}\n", i + 1);
                }
                text += &io::write_integers(p);
            }
            if let Some(path) = &out {
                io::write_file(path, &text)?;
            }
            let found = witness.is_some();
            let human = if out.is_some() { String::new() } else { text };
            let out = SumOutput {
                k,
                digits,
                parts: parts.iter().map(|p| p.iter().map(|x| x.to_string()).collect()).collect(),
                witness,
            };
            run.report(Backend::Rational, vec![], out, human);
            Ok(found)
        }
        ReduceCmd::VcToRdbp { graph, k, out_dir: dir } => {
            let g = io::parse_graph(&io::read_file(&graph)?, Backend::Rational)?;
            let inst = vc_to_rdbp(&g, k)?;
            if let Some(dir) = &dir {
                out_dir(dir)?;
                io::write_file(dir.join("graph.txt"), &io::write_graph(&inst.graph))?;
                io::write_file(dir.join("pairs.txt"), &io::write_pairs(&inst.pairs))?;
                let c: Vec<_> = inst.candidates.clone();
                io::write_file(dir.join("shortcuts.txt"), &io::write_candidates(&c))?;
            }
            let summary = inst.summary();
            let human = format!(
                "vertices    {}\nedges       {}\npairs       {}\nshortcuts   {}\nmax degree  {}\neps         {:.6}\n",
                summary.vertices, summary.edges, summary.pairs, summary.candidates, summary.max_degree, summary.eps
            );
            let digests = vec![InstanceDigest::graph("input", &g), InstanceDigest::graph("gadget", &inst.graph)];
            run.report(Backend::Rational, digests, summary, human);
            Ok(true)
        }
    }
}

#[derive(Serialize)]
struct Agreement<T: Serialize> {
    agree: bool,
    details: T,
}

#[derive(Serialize)]
struct SumIff {
    sat: bool,
    threesum: Option<[usize; 3]>,
    uses_target: bool,
}

#[derive(Serialize)]
struct RdbpIff {
    vertex_cover: usize,
    shortcuts: usize,
    witness: Vec<usize>,
    below_fails: bool,
}

fn verify(cmd: VerifyCmd, run: &Run) -> Result<bool> {
    match cmd {
        VerifyCmd::IffOnebridge { sat } => {
            let r = verify_one_bridge_iff(&sat_file(&sat)?)?;
            let agree = r.agree();
            let human = format!(
                "sat         {}\ncov         {}\none-bridge  {}\nagree       {agree}\n",
                r.sat.is_some(),
                r.cov.is_some(),
                r.bridge.is_some()
            );
            run.report(Backend::Rational, vec![], Agreement { agree, details: r }, human);
            Ok(agree)
        }
        VerifyCmd::Iff3sum { sat } => {
            let phi = sat_file(&sat)?;
            let sat = one_in_three_sat_brute_force(&phi)?.is_some();
            let inst = sat_to_threesum(&phi, false)?;
            let w = threesum_brute_force(&inst.s);
            let uses_target = w.is_some_and(|w| w.contains(&inst.target_position()));
            let agree = sat == uses_target && sat == w.is_some();
            let human = format!("sat         {sat}\n3-sum       {}\nagree       {agree}\n", w.is_some());
            run.report(
                Backend::Rational,
                vec![],
                Agreement { agree, details: SumIff { sat, threesum: w, uses_target } },
                human,
            );
            Ok(agree)
        }
        VerifyCmd::IffRdbp { graph } => {
            let g = io::parse_graph(&io::read_file(&graph)?, Backend::Rational)?;
            let vc = min_vertex_cover(&g)?;
            let inst = vc_to_rdbp(&g, vc)?;
            let (budget, witness) = rdbp_min_budget(&inst)?;
            let below_fails = vc == 0
                || rdbp_brute_force(&bridgeworks::reductions::RdbpInstance { budget: vc - 1, ..inst })?.is_none();
            let agree = budget == vc && below_fails;
            let human = format!("vertex cover {vc}\nshortcuts    {budget}\nagree        {agree}\n");
            let details = RdbpIff { vertex_cover: vc, shortcuts: budget, witness, below_fails };
            run.report(
                Backend::Rational,
                vec![InstanceDigest::graph("input", &g)],
                Agreement { agree, details },
                human,
            );
            Ok(agree)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let backend = match Backend::from_env() {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let state = Run {
        json: cli.json,
        dot: cli.emit_dot.clone(),
        threads: cli.threads.max(1),
        seed: cli.seed,
        backend,
        command: std::env::args().skip(1).collect(),
        start: Instant::now(),
    };
    match run(cli, &state) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
