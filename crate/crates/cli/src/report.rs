//! Report types. Each one serializes to the `--json` schema and renders the
//! same data as plain text.

use std::fmt::{self, Write as _};

use facetor::tor::TorBlock;
use facetor::{BigradedTor, GradedDims, HomologyGroup, VertexSet};
use num_traits::ToPrimitive;
use serde::Serialize;

fn sigma_list(s: VertexSet) -> Vec<usize> {
    s.to_vec()
}

fn torsion_list(g: &HomologyGroup) -> Vec<u64> {
    g.torsion.iter().map(|t| t.to_u64().expect("invariant factor fits in u64")).collect()
}

fn lists(sets: &[VertexSet]) -> String {
    if sets.is_empty() {
        return "(none)".into();
    }
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")
}

#[derive(Serialize)]
pub struct SeriesJson {
    /// `[degree, rank]` pairs in ascending degree.
    pub terms: Vec<(u32, u64)>,
    pub total: u64,
    pub text: String,
}

impl From<&GradedDims> for SeriesJson {
    fn from(g: &GradedDims) -> Self {
        SeriesJson { terms: g.terms().collect(), total: g.total(), text: g.to_string() }
    }
}

#[derive(Serialize)]
pub struct BlockRow {
    pub q: usize,
    pub sigma: Vec<usize>,
    pub degree: u32,
    pub rank: usize,
    pub torsion: Vec<u64>,
    pub basis: Vec<String>,
}

impl From<&TorBlock> for BlockRow {
    fn from(b: &TorBlock) -> Self {
        BlockRow {
            q: b.q,
            sigma: sigma_list(b.sigma),
            degree: b.zk_degree(),
            rank: b.group.rank,
            torsion: torsion_list(&b.group),
            basis: b.labels(),
        }
    }
}

#[derive(Serialize)]
pub struct TorReport {
    pub m: usize,
    pub coefficients: String,
    pub blocks: Vec<BlockRow>,
    pub total_rank: usize,
}

impl TorReport {
    pub fn new(tor: &BigradedTor) -> Self {
        TorReport {
            m: tor.complement().m(),
            coefficients: tor.coefficients().to_string(),
            blocks: tor.nonzero_blocks().map(BlockRow::from).collect(),
            total_rank: tor.total_rank(),
        }
    }
}

impl fmt::Display for TorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coefficients: {}", self.coefficients)?;
        writeln!(f, "{:>3}  {:<20} {:>6} {:>5}  {:<10} basis", "q", "sigma", "degree", "rank", "torsion")?;
        for b in &self.blocks {
            let sigma = format!("{{{}}}", b.sigma.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
            let torsion = if b.torsion.is_empty() {
                "-".to_string()
            } else {
                b.torsion.iter().map(|t| format!("Z/{t}")).collect::<Vec<_>>().join("+")
            };
            let basis = if b.basis.is_empty() { "-".to_string() } else { b.basis.join(" ") };
            writeln!(f, "{:>3}  {:<20} {:>6} {:>5}  {:<10} {}", b.q, sigma, b.degree, b.rank, torsion, basis)?;
        }
        write!(f, "total rank {}", self.total_rank)
    }
}

#[derive(Serialize)]
pub struct ZkReport {
    pub m: usize,
    pub coefficients: String,
    pub poincare: SeriesJson,
}

impl fmt::Display for ZkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (total {})", self.poincare.text, self.poincare.total)
    }
}

#[derive(Serialize)]
pub struct BasisEntry {
    pub index: usize,
    pub label: String,
    pub q: usize,
    pub sigma: Vec<usize>,
    pub degree: u32,
}

#[derive(Serialize)]
pub struct ProductEntry {
    /// Indices into `basis`.
    pub left: usize,
    pub right: usize,
    pub q: usize,
    pub sigma: Vec<usize>,
    /// Coordinates in the basis of block `(q, sigma)`, as exact rationals.
    pub coordinates: Vec<String>,
    pub result: String,
}

#[derive(Serialize)]
pub struct RingReport {
    pub m: usize,
    pub coefficients: String,
    pub basis: Vec<BasisEntry>,
    /// Nonzero products `basis[left] x basis[right]` with `left <= right`,
    /// both of positive degree.
    pub products: Vec<ProductEntry>,
}

impl fmt::Display for RingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coefficients: {}", self.coefficients)?;
        writeln!(f, "basis ({} classes):", self.basis.len())?;
        for b in &self.basis {
            let sigma = VertexSet::of(&b.sigma);
            writeln!(f, "  {:<12} q={} sigma={} degree {}", b.label, b.q, sigma, b.degree)?;
        }
        write!(f, "nonzero products ({}):", self.products.len())?;
        for p in &self.products {
            write!(
                f,
                "\n  {} x {} = {}",
                self.basis[p.left].label, self.basis[p.right].label, p.result
            )?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
pub struct ComplexReport {
    pub operation: &'static str,
    pub omega: Vec<usize>,
    pub facets: Vec<Vec<usize>>,
    pub complement: Vec<Vec<usize>>,
    pub tor: TorReport,
}

impl fmt::Display for ComplexReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets = |ls: &[Vec<usize>]| lists(&ls.iter().map(|l| VertexSet::of(l)).collect::<Vec<_>>());
        writeln!(f, "{} of {}", self.operation, VertexSet::of(&self.omega))?;
        writeln!(f, "facets: {}", sets(&self.facets))?;
        writeln!(f, "missing faces: {}", sets(&self.complement))?;
        write!(f, "{}", self.tor)
    }
}

#[derive(Serialize)]
pub struct OmegaPart {
    pub omega: Vec<usize>,
    pub poincare: SeriesJson,
}

#[derive(Serialize)]
pub struct MazReport {
    pub m: usize,
    pub coefficients: String,
    pub pairs: String,
    pub poincare: SeriesJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub by_omega: Option<Vec<OmegaPart>>,
}

impl fmt::Display for MazReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "pairs: {}", self.pairs)?;
        writeln!(f, "{:>6} {:>8}", "degree", "rank")?;
        for (d, r) in &self.poincare.terms {
            writeln!(f, "{d:>6} {r:>8}")?;
        }
        write!(f, "{} (total {})", self.poincare.text, self.poincare.total)?;
        if let Some(parts) = &self.by_omega {
            write!(f, "\nby face:")?;
            for p in parts {
                write!(
                    f,
                    "\n  {:<16} {} (total {})",
                    VertexSet::of(&p.omega).to_string(),
                    p.poincare.text,
                    p.poincare.total
                )?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
pub struct CheckRow {
    pub q: usize,
    pub sigma: Vec<usize>,
    pub oracle_degree: isize,
    pub taylor: String,
    pub oracle: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct RingCheck {
    pub coefficients: String,
    pub blocks: Vec<CheckRow>,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub m: usize,
    pub complement: Vec<Vec<usize>>,
    pub runs: Vec<RingCheck>,
    pub passed: bool,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for run in &self.runs {
            for b in &run.blocks {
                writeln!(
                    out,
                    "{} {} q={} sigma={} taylor={} oracle H~^{}={}",
                    if b.pass { "PASS" } else { "FAIL" },
                    run.coefficients,
                    b.q,
                    VertexSet::of(&b.sigma),
                    b.taylor,
                    b.oracle_degree,
                    b.oracle
                )
                .unwrap();
            }
            let failed = run.blocks.iter().filter(|b| !b.pass).count();
            writeln!(out, "{}: {} blocks, {} failed", run.coefficients, run.blocks.len(), failed).unwrap();
        }
        out.push_str(if self.passed { "verify: PASS" } else { "verify: FAIL" });
        f.write_str(&out)
    }
}

#[derive(Serialize)]
pub struct Trial {
    pub trial: usize,
    pub m: usize,
    pub complement: Vec<Vec<usize>>,
    pub blocks: usize,
    /// `coefficients q sigma` of each failing block.
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct RandomVerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub max_m: usize,
    pub max_s: usize,
    pub coefficients: Vec<String>,
    pub results: Vec<Trial>,
    pub blocks: usize,
    pub passed: bool,
}

impl fmt::Display for RandomVerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "seed {} trials {} max-m {} max-s {} coefficients {}",
            self.seed,
            self.trials,
            self.max_m,
            self.max_s,
            self.coefficients.join(",")
        )?;
        for t in &self.results {
            let members: Vec<VertexSet> = t.complement.iter().map(|l| VertexSet::of(l)).collect();
            write!(
                f,
                "trial {} m={} [{}]: {} ({} blocks)",
                t.trial,
                t.m,
                members.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", "),
                if t.passed { "PASS" } else { "FAIL" },
                t.blocks
            )?;
            for fail in &t.failures {
                write!(f, "\n  mismatch {fail}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "verify: {} ({} blocks in {} trials)",
            if self.passed { "PASS" } else { "FAIL" },
            self.blocks,
            self.trials
        )
    }
}

#[derive(Serialize)]
pub struct ComplementDocument {
    pub m: usize,
    pub complement: Vec<Vec<usize>>,
}
