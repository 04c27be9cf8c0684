//! Command-line front end: argument parsing, file I/O, the reproducibility
//! header and exit codes for every operation of the `onep` library.
//!
//! Exit codes: 0 affirmative, 1 negative, 2 inconclusive, 64 usage or
//! parameter error, 65 malformed input data, 66 unreadable input, 73
//! unwritable output. The header (`c ...` lines) goes to stderr so that
//! stdout and emitted files depend only on the inputs, not on `--jobs`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use onep::canon::is_isomorphic;
use onep::embedding::{is_planar, RotationSystem};
use onep::families::{self, ChainKind, ChainSpec, DiagonalChoice, GridType, LinkKind, SmLambda};
use onep::immersion::{crossing_counts, crossing_lower_bound, edge_bound_reject, parse_immersion, serialize_immersion, verify, Immersion};
use onep::io::{parse_graph, parse_rotation, serialize_graph, serialize_rotation};
use onep::pn::{check_a_class, check_h_class};
use onep::reduction::{build_reduction_k, build_witness_k, extract_coloring, find_clash, parse_coloring, serialize_coloring, strip_low_degree, Coloring};
use onep::solver::{decide_1planar, decide_proper_1immersion, mn_check, MnStatus, SolverBudget, Status};
use onep::{Error, Graph};
use sha2::{Digest, Sha256};
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_CANT_CREATE: i32 = 73;

#[derive(Parser, Debug)]
#[command(name = "onep", version, about = "Exact 1-planarity, immersion certificates, graph families and the 3-colouring reduction")]
struct Cli {
    /// Worker threads for the solver; outputs do not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Generate a family member, with optional certificate and role metadata.
    Gen(GenArgs),
    /// Decide 1-planarity (or proper 1-immersibility) exactly.
    Solve(SolveArgs),
    /// Verify an immersion certificate against a graph.
    Verify(VerifyArgs),
    /// Check minimal non-1-planarity.
    MnCheck(MnArgs),
    /// Run the structural condition checker (class A or class H).
    PnCheck(PnArgs),
    /// Build the 3-colouring reduction instance and witnesses.
    Reduce(ReduceArgs),
    /// Test two graphs for isomorphism.
    Iso(IsoArgs),
    /// Print basic statistics of a graph.
    Stats(StatsArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Link,
    Chain,
    ChainGraph,
    Hn,
    Medial,
    Gn,
    Sm,
    SmLambda,
    UGraph,
    GridJoin,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    A,
    B,
    Base,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GridArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ClassArg {
    A,
    H,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Graph output file (stdout when absent).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Companion certificate output: the drawing of a u-graph or grid-join,
    /// or for chain-graph with --delete-edge the drawing of the graph minus
    /// that edge.
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Role metadata output.
    #[arg(long)]
    meta: Option<PathBuf>,
    /// Link or chain kind.
    #[arg(long, value_enum, ignore_case = true)]
    kind: Option<KindArg>,
    /// Chain length.
    #[arg(long)]
    length: Option<usize>,
    /// Variant positions of a B-chain, comma separated.
    #[arg(long, default_value = "")]
    variants: String,
    /// A-chain lengths of a chain graph, `t1,t2,t3`.
    #[arg(long)]
    a_lengths: Option<String>,
    /// B-chain lengths of a chain graph, `t1,t2,t3`.
    #[arg(long)]
    b_lengths: Option<String>,
    /// Variant positions per B-chain, `;`-separated comma lists.
    #[arg(long, default_value = ";;")]
    b_variants: String,
    /// Edge (1-based) whose deletion the chain-graph certificate draws.
    #[arg(long)]
    delete_edge: Option<usize>,
    /// Size parameter (hn, gn, u-graph, first order of grid-join).
    #[arg(long)]
    n: Option<usize>,
    /// Second U-graph parameter of grid-join.
    #[arg(long)]
    n2: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// λ entries (12m - 2 of them), comma separated.
    #[arg(long)]
    lambda: Option<String>,
    /// Host graph of a medial extension.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Diagonal choices for 4-valent host vertices: lines `d <vertex> <edge> <edge>`.
    #[arg(long)]
    diagonals: Option<PathBuf>,
    #[arg(long, value_enum)]
    grid: Option<GridArg>,
    /// Window start (1-based boundary position) on the first U-graph.
    #[arg(long, default_value_t = 1)]
    start1: usize,
    #[arg(long, default_value_t = 1)]
    start2: usize,
}

#[derive(Args, Debug, Clone)]
struct BudgetArgs {
    /// Largest crossing count to search.
    #[arg(long)]
    max_crossings: Option<usize>,
    /// Wall-clock budget in seconds; 0 disables it.
    #[arg(long, default_value_t = 60.0)]
    time_limit: f64,
    /// Planarity-test budget.
    #[arg(long)]
    node_limit: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self, jobs: u16) -> Result<SolverBudget, Failure> {
        if !(self.time_limit.is_finite() && self.time_limit >= 0.0) {
            return Err(Failure::usage("--time-limit must be a non-negative number of seconds"));
        }
        let time_limit = (self.time_limit > 0.0).then(|| Duration::from_secs_f64(self.time_limit));
        Ok(SolverBudget { max_crossings: self.max_crossings, time_limit, node_limit: self.node_limit, jobs: jobs as usize })
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Require at least one crossing.
    #[arg(long)]
    proper: bool,
    #[arg(long)]
    emit_witness: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    immersion: PathBuf,
    #[arg(long, default_value_t = 1)]
    k: usize,
}

#[derive(Args, Debug)]
struct MnArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Directory receiving one certificate per single-edge deletion.
    #[arg(long)]
    emit_witnesses: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PnArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "a", ignore_case = true)]
    class: ClassArg,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[arg(long)]
    input: PathBuf,
    /// Rotation system of the source (computed when absent).
    #[arg(long)]
    rotation: Option<PathBuf>,
    /// Edge multiplicity of the produced instance.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Colouring file, lines `v <vertex> <a|b|c>`.
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// Reduced instance output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    emit_witness: Option<PathBuf>,
    #[arg(long)]
    emit_meta: Option<PathBuf>,
    /// Recover the colouring encoded by a k = 1 certificate of the instance.
    #[arg(long)]
    extract: Option<PathBuf>,
    /// Delete vertices of degree at most 2 first (colouring files keep the original numbering).
    #[arg(long)]
    preprocess: bool,
}

#[derive(Args, Debug)]
struct IsoArgs {
    #[arg(long)]
    a: PathBuf,
    #[arg(long)]
    b: PathBuf,
}

#[derive(Args, Debug)]
struct StatsArgs {
    #[arg(long)]
    input: PathBuf,
}

/// A terminating error with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Rotation(_) | Error::Immersion(_) => EXIT_DATA,
            _ => EXIT_USAGE,
        };
        Failure { code, msg: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_CANT_CREATE, msg: e.to_string() }
    }
}

type Res<T> = Result<T, Failure>;

struct Ctx<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    jobs: u16,
}

impl Ctx<'_> {
    fn read(&mut self, path: &Path) -> Res<String> {
        let bytes = std::fs::read(path).map_err(|e| Failure { code: EXIT_NO_INPUT, msg: format!("cannot read {}: {e}", path.display()) })?;
        let _ = writeln!(self.err, "c input {} sha256 {}", path.display(), hex::encode(Sha256::digest(&bytes)));
        String::from_utf8(bytes).map_err(|_| Failure { code: EXIT_DATA, msg: format!("{} is not UTF-8 text", path.display()) })
    }

    fn read_graph(&mut self, path: &Path) -> Res<Graph> {
        let text = self.read(path)?;
        parse_graph(&text).map_err(|e| in_file(path, e))
    }

    fn write(&mut self, path: &Path, text: &str) -> Res<()> {
        std::fs::write(path, text).map_err(|e| Failure { code: EXIT_CANT_CREATE, msg: format!("cannot write {}: {e}", path.display()) })?;
        let _ = writeln!(self.err, "c output {} sha256 {}", path.display(), hex::encode(Sha256::digest(text.as_bytes())));
        Ok(())
    }

    fn say(&mut self, text: impl AsRef<str>) -> Res<()> {
        writeln!(self.out, "{}", text.as_ref())?;
        Ok(())
    }
}

fn in_file(path: &Path, e: Error) -> Failure {
    let f = Failure::from(e);
    Failure { code: f.code, msg: format!("{}: {}", path.display(), f.msg) }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let _ = writeln!(err, "c {} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"));
    let _ = writeln!(err, "c argv {}", argv.iter().skip(1).cloned().collect::<Vec<_>>().join(" "));
    let _ = writeln!(err, "c flags {:?}", cli);
    let mut ctx = Ctx { out, err, jobs: cli.jobs };
    let result = match &cli.cmd {
        Cmd::Gen(a) => gen(&mut ctx, a),
        Cmd::Solve(a) => solve(&mut ctx, a),
        Cmd::Verify(a) => verify_cmd(&mut ctx, a),
        Cmd::MnCheck(a) => mn(&mut ctx, a),
        Cmd::PnCheck(a) => pn(&mut ctx, a),
        Cmd::Reduce(a) => reduce(&mut ctx, a),
        Cmd::Iso(a) => iso(&mut ctx, a),
        Cmd::Stats(a) => stats(&mut ctx, a),
    };
    let _ = ctx.out.flush();
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(ctx.err, "error: {}", f.msg);
            f.code
        }
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: Family) -> Res<T> {
    v.ok_or_else(|| Failure::usage(format!("--{flag} is required for --family {}", family_name(family))))
}

fn family_name(f: Family) -> String {
    f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn parse_list(s: &str, flag: &str) -> Res<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::usage(format!("--{flag}: {t:?} is not a non-negative integer"))))
        .collect()
}

fn parse_triple(s: Option<&String>, flag: &str) -> Res<[usize; 3]> {
    let s = s.ok_or_else(|| Failure::usage(format!("--{flag} is required for --family chain-graph")))?;
    let v = parse_list(s, flag)?;
    v.try_into().map_err(|_| Failure::usage(format!("--{flag} takes exactly three lengths")))
}

fn one_based(v: &[usize]) -> String {
    v.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")
}

/// Lines `d <vertex> <edge> <edge>`, all 1-based.
fn parse_diagonals(text: &str, h: &Graph) -> Res<DiagonalChoice> {
    let mut d = DiagonalChoice::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || Failure { code: EXIT_DATA, msg: format!("line {}: expected `d <vertex> <edge> <edge>`", i + 1) };
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.len() != 4 || t[0] != "d" {
            return Err(bad());
        }
        let nums: Vec<usize> = t[1..].iter().map(|x| x.parse::<usize>()).collect::<Result<_, _>>().map_err(|_| bad())?;
        if nums[0] == 0 || nums[0] > h.n() || nums[1..].iter().any(|&e| e == 0 || e > h.m()) {
            return Err(Failure { code: EXIT_DATA, msg: format!("line {}: index out of range", i + 1) });
        }
        d.insert(nums[0] - 1, (nums[1] - 1, nums[2] - 1));
    }
    Ok(d)
}

fn gen(ctx: &mut Ctx, a: &GenArgs) -> Res<i32> {
    let f = a.family;
    let mut meta = String::new();
    let mut certificate: Option<Immersion> = None;
    let graph = match f {
        Family::Link => {
            let kind = match need(a.kind, "kind", f)? {
                KindArg::A => LinkKind::A,
                KindArg::B => LinkKind::B,
                KindArg::Base => LinkKind::Base,
            };
            let l = families::gen_link(kind);
            let _ = writeln!(meta, "z {}\nzbar {}", l.z + 1, l.zbar + 1);
            for (c, (e1, e2)) in l.free_cycles.iter().zip(&l.core_adjacent) {
                let _ = writeln!(meta, "free-cycle {} core-adjacent {} {}", one_based(c), e1 + 1, e2 + 1);
            }
            if let Some(e) = l.middle_edge {
                let _ = writeln!(meta, "middle-edge {}", e + 1);
            }
            l.graph
        }
        Family::Chain => {
            let kind = match need(a.kind, "kind", f)? {
                KindArg::A => ChainKind::A,
                KindArg::B => ChainKind::B,
                KindArg::Base => return Err(Failure::usage("--kind must be a or b for --family chain")),
            };
            let c = families::gen_chain(kind, need(a.length, "length", f)?, &parse_list(&a.variants, "variants")?)?;
            let _ = writeln!(meta, "core {}", one_based(&c.info.core));
            for l in &c.info.links {
                let _ = writeln!(meta, "link {} {:?} flipped {} vertices {}", l.position, l.kind, l.flipped, one_based(&l.vertices));
            }
            c.graph
        }
        Family::ChainGraph => {
            let variants: Vec<Vec<usize>> = a.b_variants.split(';').map(|s| parse_list(s, "b-variants")).collect::<Res<_>>()?;
            let b_variants: [Vec<usize>; 3] = variants.try_into().map_err(|_| Failure::usage("--b-variants takes three ;-separated lists"))?;
            let spec = ChainSpec { a_lengths: parse_triple(a.a_lengths.as_ref(), "a-lengths")?, b_lengths: parse_triple(a.b_lengths.as_ref(), "b-lengths")?, b_variants };
            let cg = families::gen_chain_graph(&spec)?;
            let _ = writeln!(meta, "omega {}\na {}\nb {}\nbase {}", cg.omega + 1, cg.a + 1, cg.b + 1, one_based(&cg.base));
            let _ = writeln!(meta, "omega-edges {}", one_based(&cg.omega_edges));
            for c in cg.chains() {
                let _ = writeln!(meta, "chain {:?} length {} variants {:?} core {}", c.kind, c.length, c.variants, one_based(&c.core));
            }
            if let Some(e) = a.delete_edge {
                if e == 0 || e > cg.graph.m() {
                    return Err(Failure::usage(format!("--delete-edge {e} out of range 1..={}", cg.graph.m())));
                }
                certificate = Some(families::immersions_of_deleted_edge(&cg, e - 1)?);
            }
            cg.graph
        }
        Family::Hn => families::gen_h_n(need(a.n, "n", f)?)?,
        Family::Gn => families::gen_g_n(need(a.n, "n", f)?)?,
        Family::Medial => {
            let path = a.input.as_deref().ok_or_else(|| Failure::usage("--input is required for --family medial"))?;
            let h = ctx.read_graph(path)?;
            let d = match &a.diagonals {
                Some(p) => {
                    let text = ctx.read(p)?;
                    parse_diagonals(&text, &h)?
                }
                None => DiagonalChoice::new(),
            };
            let me = families::gen_medial_extension(&h, &d)?;
            for (v, es) in me.associated.iter().enumerate() {
                let _ = writeln!(meta, "host-vertex {} vertices {}", v + 1, one_based(es));
            }
            me.graph
        }
        Family::Sm | Family::SmLambda => {
            let m = need(a.m, "m", f)?;
            let spec = match (f, &a.lambda) {
                (Family::Sm, None) => SmLambda::zero(m),
                (Family::SmLambda, Some(l)) => SmLambda { m, lambda: parse_list(l, "lambda")? },
                (Family::Sm, Some(_)) => return Err(Failure::usage("--lambda belongs to --family sm-lambda")),
                _ => return Err(Failure::usage("--lambda is required for --family sm-lambda")),
            };
            let s = families::gen_s_m_lambda(&spec)?;
            for (k, r) in s.rings.iter().enumerate() {
                let _ = writeln!(meta, "ring {k} {}", one_based(r));
            }
            for p in &s.central_paths {
                let _ = writeln!(meta, "central-path {}", one_based(p));
            }
            for (e, t) in s.edge_type.iter().enumerate() {
                if let Some(t) = t {
                    let _ = writeln!(meta, "edge-type {} {t}", e + 1);
                }
            }
            s.graph
        }
        Family::UGraph => {
            let u = families::gen_u_graph(need(a.n, "n", f)?)?;
            for (i, r) in u.placed.rings.iter().enumerate() {
                let _ = writeln!(meta, "ring {i} {}", one_based(r));
            }
            certificate = Some(u.immersion);
            u.graph
        }
        Family::GridJoin => {
            let grid = match need(a.grid, "grid", f)? {
                GridArg::One => GridType::One,
                GridArg::Two => GridType::Two,
            };
            if a.start1 == 0 || a.start2 == 0 {
                return Err(Failure::usage("window starts are 1-based"));
            }
            let j = families::gen_grid_join(need(a.n, "n", f)?, need(a.n2, "n2", f)?, grid, a.start1 - 1, a.start2 - 1)?;
            for (i, u) in j.u_graphs.iter().enumerate() {
                let _ = writeln!(meta, "u-graph {} boundary {}", i + 1, one_based(u.boundary()));
            }
            for p in j.basic_paths.iter().flatten() {
                let _ = writeln!(meta, "basic-path {}", one_based(p));
            }
            certificate = Some(j.immersion);
            j.graph
        }
    };
    let text = serialize_graph(&graph);
    match &a.output {
        Some(p) => ctx.write(p, &text)?,
        None => ctx.say(text.trim_end())?,
    }
    if let Some(p) = &a.certificate {
        let imm = certificate.ok_or_else(|| Failure::usage(format!("--family {} has no companion certificate", family_name(f))))?;
        ctx.write(p, &serialize_immersion(&imm))?;
    }
    if let Some(p) = &a.meta {
        ctx.write(p, &meta)?;
    }
    if a.output.is_some() {
        ctx.say(format!("generated {} n {} m {}", family_name(f), graph.n(), graph.m()))?;
    }
    Ok(EXIT_OK)
}

fn status_code(s: Status) -> i32 {
    match s {
        Status::Yes => EXIT_OK,
        Status::No => EXIT_NEGATIVE,
        Status::Timeout => EXIT_INCONCLUSIVE,
    }
}

fn solve(ctx: &mut Ctx, a: &SolveArgs) -> Res<i32> {
    let g = ctx.read_graph(&a.input)?;
    let budget = a.budget.budget(ctx.jobs)?;
    let v = if a.proper { decide_proper_1immersion(&g, &budget) } else { decide_1planar(&g, &budget) };
    let label = match (v.status, a.proper) {
        (Status::Yes, false) => "1-PLANAR",
        (Status::No, false) => "NOT 1-PLANAR",
        (Status::Yes, true) => "PROPER 1-IMMERSION",
        (Status::No, true) => "NO PROPER 1-IMMERSION",
        (Status::Timeout, _) => "TIMEOUT",
    };
    ctx.say(label)?;
    ctx.say(format!("reason {}", v.stats.reason))?;
    // Node counts are only reproducible for decided instances.
    if v.status != Status::Timeout {
        ctx.say(format!("nodes {}", v.stats.nodes))?;
    }
    if let Some(c) = v.stats.crossings {
        ctx.say(format!("crossings {c}"))?;
    }
    if let Some(w) = &v.witness {
        let violations = verify(w, 1);
        if !violations.is_empty() {
            return Err(Failure { code: EXIT_DATA, msg: format!("internal error: witness fails verification: {}", violations[0]) });
        }
        ctx.say("witness verified")?;
        if let Some(p) = &a.emit_witness {
            ctx.write(p, &serialize_immersion(w))?;
        }
    }
    Ok(status_code(v.status))
}

fn verify_cmd(ctx: &mut Ctx, a: &VerifyArgs) -> Res<i32> {
    if a.k == 0 {
        return Err(Failure::usage("--k must be positive"));
    }
    let g = ctx.read_graph(&a.graph)?;
    let text = ctx.read(&a.immersion)?;
    let imm = parse_immersion(&text).map_err(|e| in_file(&a.immersion, e))?;
    if imm.base != g {
        ctx.say("INVALID")?;
        ctx.say("certificate is for a different graph")?;
        return Ok(EXIT_NEGATIVE);
    }
    let violations = verify(&imm, a.k);
    if violations.is_empty() {
        let max = crossing_counts(&imm).into_iter().max().unwrap_or(0);
        ctx.say("VALID")?;
        ctx.say(format!("crossings {} max-per-edge {max}", imm.crossings.len()))?;
        Ok(EXIT_OK)
    } else {
        ctx.say("INVALID")?;
        for v in &violations {
            ctx.say(v.to_string())?;
        }
        Ok(EXIT_NEGATIVE)
    }
}

fn mn(ctx: &mut Ctx, a: &MnArgs) -> Res<i32> {
    let g = ctx.read_graph(&a.input)?;
    let r = mn_check(&g, &a.budget.budget(ctx.jobs)?);
    ctx.say(format!("graph {}", r.graph.status))?;
    for ((u, v), d) in &r.deletions {
        if let Some(d) = d {
            let crossings = d.stats.crossings.map(|c| format!(" crossings {c}")).unwrap_or_default();
            ctx.say(format!("delete {} {} {}{crossings}", u + 1, v + 1, d.status))?;
            if let (Some(dir), Some(w)) = (&a.emit_witnesses, &d.witness) {
                ctx.write(&dir.join(format!("delete-{}-{}.imm", u + 1, v + 1)), &serialize_immersion(w))?;
            }
        }
    }
    let (line, code) = match r.status {
        MnStatus::Confirmed => ("MN CONFIRMED".to_string(), EXIT_OK),
        MnStatus::GraphIsOnePlanar => ("NOT MN: the graph is 1-planar".to_string(), EXIT_NEGATIVE),
        MnStatus::DeletionNotOnePlanar(u, v) => (format!("NOT MN: deleting {}-{} leaves a non-1-planar graph", u + 1, v + 1), EXIT_NEGATIVE),
        MnStatus::Inconclusive => ("INCONCLUSIVE".to_string(), EXIT_INCONCLUSIVE),
    };
    ctx.say(line)?;
    Ok(code)
}

fn pn(ctx: &mut Ctx, a: &PnArgs) -> Res<i32> {
    let g = ctx.read_graph(&a.input)?;
    let report = match a.class {
        ClassArg::A => check_a_class(&g)?,
        ClassArg::H => check_h_class(&g)?,
    };
    ctx.say(report.to_string().trim_end())?;
    ctx.say(if report.all_pass() { "ALL PASS" } else { "FAIL" })?;
    Ok(if report.all_pass() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn reduce(ctx: &mut Ctx, a: &ReduceArgs) -> Res<i32> {
    let original = ctx.read_graph(&a.input)?;
    let (source, kept) = if a.preprocess { strip_low_degree(&original) } else { (original.clone(), (0..original.n()).collect()) };
    if a.preprocess && a.rotation.is_some() {
        return Err(Failure::usage("--rotation cannot be combined with --preprocess"));
    }
    let rotation: Option<RotationSystem> = match &a.rotation {
        Some(p) => {
            let text = ctx.read(p)?;
            Some(parse_rotation(&text, &source).map_err(|e| in_file(p, e))?)
        }
        None => None,
    };
    let art = build_reduction_k(&source, rotation.as_ref(), a.k)?;
    let base = &art.base;
    if a.preprocess {
        ctx.say(format!("preprocess kept {} of {} vertices", source.n(), original.n()))?;
    }
    ctx.say(format!("source n {} m {}", source.n(), source.m()))?;
    ctx.say(format!("instance k {} n {} m {}", a.k, art.gbar.n(), art.gbar.m()))?;
    ctx.say(format!("skeleton n {} m {} crossings {}", base.g1_vertices, base.g1_edges, base.base_crossings.len()))?;
    if let Some(p) = &a.output {
        ctx.write(p, &serialize_graph(&art.gbar))?;
    }
    if let Some(p) = &a.emit_meta {
        let mut meta = base.meta_text();
        let _ = writeln!(meta, "k {}", a.k);
        let _ = writeln!(meta, "source-vertices {}", one_based(&kept));
        meta.push_str(&serialize_rotation(&base.rotation));
        ctx.write(p, &meta)?;
    }
    let mut code = EXIT_OK;
    if let Some(p) = &a.coloring {
        let text = ctx.read(p)?;
        let full = parse_coloring(&text, original.n()).map_err(|e| in_file(p, e))?;
        let col: Coloring = kept.iter().map(|&v| full[v]).collect();
        if let Some(clash) = find_clash(base, &col) {
            ctx.say(format!("CLASH {clash}"))?;
            code = EXIT_NEGATIVE;
        } else {
            let w = build_witness_k(&art, &col)?;
            let violations = verify(&w, a.k);
            if !violations.is_empty() {
                return Err(Failure { code: EXIT_DATA, msg: format!("internal error: witness fails verification: {}", violations[0]) });
            }
            ctx.say(format!("WITNESS VERIFIED k {} crossings {}", a.k, w.crossings.len()))?;
            if let Some(p) = &a.emit_witness {
                ctx.write(p, &serialize_immersion(&w))?;
            }
        }
    } else if a.emit_witness.is_some() {
        return Err(Failure::usage("--emit-witness needs --coloring"));
    }
    if let Some(p) = &a.extract {
        if a.k != 1 {
            return Err(Failure::usage("--extract reads k = 1 certificates"));
        }
        let text = ctx.read(p)?;
        let imm = parse_immersion(&text).map_err(|e| in_file(p, e))?;
        match extract_coloring(base, &imm) {
            Ok(col) => {
                let mut full = String::new();
                for (line, &v) in serialize_coloring(&col).lines().zip(&kept) {
                    let c = line.rsplit(' ').next().unwrap_or("");
                    let _ = writeln!(full, "v {} {c}", v + 1);
                }
                ctx.say("EXTRACTED")?;
                ctx.say(full.trim_end())?;
            }
            Err(e) => {
                ctx.say(format!("NOT EXTRACTED {e}"))?;
                code = EXIT_NEGATIVE;
            }
        }
    }
    Ok(code)
}

fn iso(ctx: &mut Ctx, a: &IsoArgs) -> Res<i32> {
    let g = ctx.read_graph(&a.a)?;
    let h = ctx.read_graph(&a.b)?;
    if is_isomorphic(&g, &h) {
        ctx.say("ISOMORPHIC")?;
        Ok(EXIT_OK)
    } else {
        ctx.say("NONISOMORPHIC")?;
        Ok(EXIT_NEGATIVE)
    }
}

fn stats(ctx: &mut Ctx, a: &StatsArgs) -> Res<i32> {
    let g = ctx.read_graph(&a.input)?;
    let mut deg = g.degrees();
    deg.sort_unstable_by(|x, y| y.cmp(x));
    ctx.say(format!("n {}", g.n()))?;
    ctx.say(format!("m {}", g.m()))?;
    ctx.say(format!("multigraph {}", g.has_parallel_edges()))?;
    ctx.say(format!("degrees {}", deg.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")))?;
    ctx.say(format!("connected {}", g.is_connected()))?;
    if !g.has_parallel_edges() {
        ctx.say(format!("planar {}", is_planar(&g)))?;
    }
    let limit = if g.n() >= 3 { 4 * g.n() - 8 } else { g.n().saturating_sub(1) };
    ctx.say(format!("edge-bound limit {limit} {}", if edge_bound_reject(&g) { "REJECT" } else { "ok" }))?;
    ctx.say(format!("crossing-lower-bound {}", crossing_lower_bound(&g)))?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("onep").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_64() {
        assert_eq!(run_str(&["solve"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["stats", "--input", "x", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["gen", "--family", "hn"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--jobs", "0", "gen", "--family", "hn", "--n", "6"]).0, EXIT_USAGE);
    }

    #[test]
    fn missing_input_exit_66() {
        let (code, _, err) = run_str(&["stats", "--input", "/nonexistent/graph.g"]);
        assert_eq!(code, EXIT_NO_INPUT);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn header_goes_to_stderr() {
        let (code, out, err) = run_str(&["gen", "--family", "hn", "--n", "6"]);
        assert_eq!(code, EXIT_OK);
        assert!(err.starts_with("c onep-cli "));
        assert!(err.contains("c argv gen --family hn --n 6"));
        assert!(out.starts_with("p graph"));
        assert!(parse_graph(&out).is_ok());
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("mn-check"));
    }

    #[test]
    fn lists_and_diagonals() {
        assert_eq!(parse_list("1, 2,,3", "x").unwrap(), vec![1, 2, 3]);
        assert!(parse_list("1,-2", "x").is_err());
        let h = onep::graph::named::cube();
        let d = parse_diagonals("# c\nd 1 1 2\n", &h).unwrap();
        assert_eq!(d.get(&0), Some(&(0, 1)));
        assert_eq!(parse_diagonals("d 1 1\n", &h).unwrap_err().code, EXIT_DATA);
    }
}
