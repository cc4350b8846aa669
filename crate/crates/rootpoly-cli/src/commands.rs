//! Implementations behind the CLI subcommands. Each returns a [`RunReport`];
//! the binary maps report verdicts and error kinds onto exit codes
//! (0 pass, 1 verification failure, 2 input error, 3 scale cap).

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::time::Instant;

use rootpoly::arith::Rat;
use rootpoly::digraph::Digraph;
use rootpoly::ehrhart;
use rootpoly::greedoid::{BranchingGreedoid, LambdaMethod};
use rootpoly::matroid::{ElemSet, MatroidRep};
use rootpoly::polytope::{arborescence_bases, RootPolytope};
use rootpoly::{Error as CoreError, Polynomial};

use crate::corpus;
use crate::formats::{self, Input, ParseError};
use crate::report::RunReport;

/// Errors with an exit-code classification.
#[derive(Debug)]
pub enum CliError {
    /// Unusable input: parse failures, violated preconditions. Exit 2.
    Input(String),
    /// A desk-scale cap was exceeded. Exit 3.
    Scale(String),
    /// Internal consistency failure. Exit 1.
    Internal(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Scale(m) => write!(f, "scale cap: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Scale(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::SizeCap(_) => CliError::Scale(e.to_string()),
            CoreError::Dimension(_) | CoreError::Precondition(_) | CoreError::Graph(_) => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

pub fn read_input(path: &Path) -> Result<Input, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(formats::parse_input(&text)?)
}

fn descriptor(path: &Path, input: &Input) -> String {
    match input {
        Input::Graph(g) => format!(
            "{} (digraph, {} vertices, {} edges)",
            path.display(),
            g.vertex_count(),
            g.edge_count()
        ),
        Input::Matrix(m) => {
            format!("{} (matrix, {}x{})", path.display(), m.rows(), m.cols())
        }
    }
}

const TU_CHECK_CAP: usize = 8;

pub fn cmd_check(path: &Path) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let input = read_input(path)?;
    let mut report = RunReport::new("check", descriptor(path, &input));
    match &input {
        Input::Graph(g) => {
            report.fact("vertices", g.vertex_count());
            report.fact("edges", g.edge_count());
            report.fact("connected", g.is_connected());
            report.fact("eulerian", g.is_eulerian());
            if g.edge_count() > 0 && g.is_connected() {
                let rep = MatroidRep::graphic(g)?;
                report.fact("graphic_rank", rep.rank());
                if rep.rank() >= 1 && rep.rank() < rep.size() {
                    let dual = rep.dual()?;
                    report.fact("dual_rank", dual.rank());
                    let polytope = RootPolytope::new(dual)?;
                    report.fact("dual_polytope_dim", polytope.dimension());
                    report.fact("dual_co_eulerian", polytope.is_co_eulerian());
                }
            }
        }
        Input::Matrix(m) => {
            report.fact("rows", m.rows());
            report.fact("cols", m.cols());
            report.fact("rank", m.rank());
            match m.is_totally_unimodular(TU_CHECK_CAP) {
                Ok(tu) => {
                    report.fact("totally_unimodular", tu);
                    if tu && m.rank() >= 1 {
                        let rep = MatroidRep::from_matrix(m.clone(), TU_CHECK_CAP)?;
                        report.fact("eulerian_matroid", rep.is_eulerian()?);
                        report.fact("co_eulerian_matroid", rep.is_co_eulerian()?);
                        let polytope = RootPolytope::new(rep)?;
                        report.fact("polytope_dim", polytope.dimension());
                    }
                }
                Err(CoreError::SizeCap(msg)) => {
                    report.fact("totally_unimodular", format!("unchecked ({msg})"));
                }
                Err(other) => return Err(other.into()),
            }
        }
    }
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

pub fn parse_methods(raw: &[String]) -> Result<Vec<LambdaMethod>, CliError> {
    if raw.iter().any(|m| m == "all") {
        return Ok(LambdaMethod::ALL.to_vec());
    }
    raw.iter()
        .map(|name| {
            LambdaMethod::parse(name).ok_or_else(|| {
                CliError::Input(format!(
                    "unknown method '{name}' (expected one of: {}, or 'all')",
                    LambdaMethod::ALL.map(|m| m.name()).join(", ")
                ))
            })
        })
        .collect()
}

fn require_graph(input: Input) -> Result<Digraph, CliError> {
    match input {
        Input::Graph(g) => Ok(g),
        Input::Matrix(_) => Err(CliError::Input(
            "this command needs a digraph input; matrices carry no greedoid".into(),
        )),
    }
}

/// Per-basis breakdown attached to mismatch reports.
fn basis_breakdown(g: &Digraph, root: usize) -> Result<Vec<String>, CliError> {
    let gr = BranchingGreedoid::new(g.clone(), root)?;
    let rep = MatroidRep::graphic(g)?.dual()?;
    let all: ElemSet = g.edge_ids().collect();
    let mut lines = Vec::new();
    for basis in gr.bases()? {
        let activity = gr.external_activity(&basis)?;
        let mut semiactive = 0;
        for e in g.edge_ids().filter(|e| !basis.contains(e)) {
            if g.is_externally_semiactive(root, &basis, e)? {
                semiactive += 1;
            }
        }
        let complement: ElemSet = all.difference(&basis).copied().collect();
        let semipassive = rep.internal_semipassivity(&complement)?;
        lines.push(format!(
            "arborescence {basis:?}: activity {activity}, semiactivity {semiactive}, complement semipassivity {semipassive}"
        ));
    }
    Ok(lines)
}

pub fn cmd_lambda(
    path: &Path,
    root: usize,
    methods: &[LambdaMethod],
    max_box: u64,
) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let input = read_input(path)?;
    let mut report = RunReport::new("lambda", descriptor(path, &input));
    let g = require_graph(input)?;
    let gr = BranchingGreedoid::new(g.clone(), root)?;
    let mut computed: Vec<(LambdaMethod, Polynomial)> = Vec::new();
    for &method in methods {
        let lambda = gr.lambda(method, max_box)?;
        report.polynomial(method.name(), &lambda);
        computed.push((method, lambda));
    }
    report.fact("root", root);
    if computed.len() >= 2 {
        let (reference_method, reference) = &computed[0];
        let mismatch = computed
            .iter()
            .find(|(_, p)| p != reference)
            .map(|(m, p)| (m, p.clone()));
        match mismatch {
            None => report.verdict("cross_method_equality", true, None),
            Some((method, p)) => {
                let mut witness = format!(
                    "{} gives {reference} but {} gives {p}",
                    reference_method.name(),
                    method.name()
                );
                for line in basis_breakdown(&g, root)? {
                    witness.push_str("\n    ");
                    witness.push_str(&line);
                }
                report.verdict("cross_method_equality", false, Some(witness));
            }
        }
    }
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

/// h* routes exposed by the `hstar` subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HstarRoute {
    Ehrhart,
    Triangulation,
    Semipassivity,
    Visibility,
}

impl HstarRoute {
    pub const ALL: [HstarRoute; 4] = [
        HstarRoute::Ehrhart,
        HstarRoute::Triangulation,
        HstarRoute::Semipassivity,
        HstarRoute::Visibility,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            HstarRoute::Ehrhart => "ehrhart",
            HstarRoute::Triangulation => "triangulation",
            HstarRoute::Semipassivity => "semipassivity",
            HstarRoute::Visibility => "visibility",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name() == name)
    }
}

pub fn parse_hstar_routes(raw: &[String]) -> Result<Vec<HstarRoute>, CliError> {
    if raw.iter().any(|m| m == "all") {
        return Ok(HstarRoute::ALL.to_vec());
    }
    raw.iter()
        .map(|name| {
            HstarRoute::parse(name).ok_or_else(|| {
                CliError::Input(format!(
                    "unknown route '{name}' (expected one of: {}, or 'all')",
                    HstarRoute::ALL.map(|r| r.name()).join(", ")
                ))
            })
        })
        .collect()
}

/// The root polytope of the input: the dual representation for digraphs,
/// the matrix's own column hull for matrix inputs.
fn polytope_of_input(input: &Input) -> Result<(RootPolytope, Option<Digraph>), CliError> {
    match input {
        Input::Graph(g) => {
            if !g.is_eulerian() {
                return Err(CliError::Input(
                    "h* commands need an Eulerian digraph; run 'check' for details".into(),
                ));
            }
            let rep = MatroidRep::graphic(g)?.dual()?;
            Ok((RootPolytope::new(rep)?, Some(g.clone())))
        }
        Input::Matrix(m) => {
            let rep = MatroidRep::from_matrix(m.clone(), TU_CHECK_CAP)?;
            Ok((RootPolytope::new(rep)?, None))
        }
    }
}

pub fn cmd_hstar(
    path: &Path,
    root: usize,
    routes: &[HstarRoute],
    max_box: u64,
) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let input = read_input(path)?;
    let mut report = RunReport::new("hstar", descriptor(path, &input));
    let (polytope, graph) = polytope_of_input(&input)?;
    report.fact("polytope_dim", polytope.dimension());
    let dissection: Option<Vec<ElemSet>> = match &graph {
        Some(g) => Some(arborescence_bases(g, root)?),
        None => None,
    };
    let mut computed: Vec<(HstarRoute, Polynomial)> = Vec::new();
    for &route in routes {
        let hstar = match route {
            HstarRoute::Ehrhart => ehrhart::hstar_from_ehrhart(&polytope, max_box)?,
            _ => {
                let Some(d) = &dissection else {
                    return Err(CliError::Input(format!(
                        "route '{}' needs the arborescence dissection; matrix inputs support only 'ehrhart'",
                        route.name()
                    )));
                };
                match route {
                    HstarRoute::Triangulation => ehrhart::hstar_from_triangulation(&polytope, d)?,
                    HstarRoute::Semipassivity => ehrhart::hstar_from_semipassivity(&polytope, d)?,
                    HstarRoute::Visibility => ehrhart::hstar_from_visibility(&polytope, d)?,
                    HstarRoute::Ehrhart => unreachable!(),
                }
            }
        };
        report.polynomial(route.name(), &hstar);
        computed.push((route, hstar));
    }
    if graph.is_some() {
        report.fact("root", root);
    }
    if computed.len() >= 2 {
        let (reference_route, reference) = &computed[0];
        let mismatch = computed.iter().find(|(_, p)| p != reference);
        match mismatch {
            None => report.verdict("cross_route_equality", true, None),
            Some((route, p)) => {
                let witness = format!(
                    "{} gives {reference} but {} gives {p}",
                    reference_route.name(),
                    route.name()
                );
                report.verdict("cross_route_equality", false, Some(witness));
            }
        }
    }
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

pub fn cmd_ehrhart(path: &Path, max_box: u64) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let input = read_input(path)?;
    let mut report = RunReport::new("ehrhart", descriptor(path, &input));
    let (polytope, _) = polytope_of_input(&input)?;
    let poly = ehrhart::ehrhart_polynomial(&polytope, max_box)?;
    report.fact("polytope_dim", polytope.dimension());
    report.polynomial("ehrhart", &poly);
    for t in 0..=polytope.dimension() as u64 + 2 {
        report.fact(
            format!("count_t{t}"),
            ehrhart::lattice_point_count(&polytope, t, max_box)?,
        );
    }
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

pub fn cmd_verify(path: &Path, root: usize, max_box: u64) -> Result<RunReport, CliError> {
    let started = Instant::now();
    let input = read_input(path)?;
    let mut report = RunReport::new("verify", descriptor(path, &input));
    let g = require_graph(input)?;
    if !g.is_eulerian() {
        return Err(CliError::Input("verify needs an Eulerian digraph".into()));
    }
    report.fact("root", root);

    // triangulation certificate at the requested root
    if g.edge_count() > 0 {
        let rep = MatroidRep::graphic(&g)?.dual()?;
        let polytope = RootPolytope::new(rep)?;
        let dissection = arborescence_bases(&g, root)?;
        let cert = polytope.verify_triangulation(&dissection, max_box)?;
        let witness = cert
            .failures
            .first()
            .map(|f| format!("{f:?} ({} failures total)", cert.failures.len()));
        report.fact("triangulation_simplices", cert.simplex_count);
        report.fact("normalized_volume", &cert.volume);
        report.verdict("triangulation", cert.passed(), witness);
    }

    // root sweep
    let lambdas: Vec<(usize, Polynomial)> = (1..=g.vertex_count())
        .map(|r| {
            let gr = BranchingGreedoid::new(g.clone(), r)?;
            Ok((r, gr.lambda(LambdaMethod::Semiactivity, max_box)?))
        })
        .collect::<Result<_, CliError>>()?;
    let (_, reference) = &lambdas[0];
    report.polynomial("lambda", reference);
    let sweep_mismatch = lambdas.iter().find(|(_, p)| p != reference);
    report.verdict(
        "root_independence",
        sweep_mismatch.is_none(),
        sweep_mismatch.map(|(r, p)| format!("root {r} gives {p} instead of {reference}")),
    );

    // reversal invariance
    let reversed = g.reversed();
    let gr_rev = BranchingGreedoid::new(reversed, root)?;
    let lambda_rev = gr_rev.lambda(LambdaMethod::Semiactivity, max_box)?;
    report.verdict(
        "reversal_invariance",
        &lambda_rev == reference,
        (&lambda_rev != reference).then(|| format!("reversed graph gives {lambda_rev}")),
    );

    // arborescence counts per root
    let mut count_witness = None;
    for (r, lambda) in &lambdas {
        let expected = Rat::from_integer(g.arborescence_count(*r)?);
        if lambda.eval_int(1) != expected {
            count_witness = Some(format!(
                "root {r}: lambda(1) = {} but the matrix-tree count is {expected}",
                lambda.eval_int(1)
            ));
            break;
        }
    }
    report.verdict("lambda_at_one_matrix_tree", count_witness.is_none(), count_witness);

    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

pub fn cmd_gen_corpus(
    out_dir: &Path,
    n_max: usize,
    m_max: usize,
    count: usize,
    seed: u64,
) -> Result<RunReport, CliError> {
    let started = Instant::now();
    if n_max < 2 {
        return Err(CliError::Input("corpus needs n_max >= 2".into()));
    }
    fs::create_dir_all(out_dir)
        .map_err(|e| CliError::Input(format!("cannot create {}: {e}", out_dir.display())))?;
    let mut files: BTreeMap<String, String> = BTreeMap::new();
    for (name, g) in corpus::named_family() {
        files.insert(format!("{name}.digraph"), formats::write_digraph(&g));
    }
    for (i, g) in corpus::exhaustive_eulerian(4, 6).iter().enumerate() {
        files.insert(format!("exhaustive_{i:04}.digraph"), formats::write_digraph(g));
    }
    for (i, g) in corpus::random_family(seed, n_max, m_max, count).iter().enumerate() {
        files.insert(format!("random_{i:04}.digraph"), formats::write_digraph(g));
    }
    for (name, content) in &files {
        let path = out_dir.join(name);
        fs::write(&path, content)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    let mut report = RunReport::new("gen-corpus", out_dir.display().to_string());
    report.fact("files", files.len());
    report.fact("seed", seed);
    report.fact("n_max", n_max);
    report.fact("m_max", m_max);
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}
