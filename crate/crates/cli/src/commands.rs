use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use permdeg::cache::LatticeCache;
use permdeg::corpus::{analyse, full_corpus, open_question_specs, small_corpus, sweep, LatticeSource};
use permdeg::families::dihedral_by_index_with;
use permdeg::lattice::{enumerate_subgroups_with, sigma, subgroup_commutativity_degree, tau};
use permdeg::permutizer::permutability_degree;
use permdeg::report::{Degree, Timing};
use permdeg::theorems::{
    check_errata_d8, check_lattice_formula, check_p61, summarize, SweepCounts, TheoremId, TheoremVerdict,
};
use permdeg::{parse_spec, DegreeReport, ExactRatio, GroupAnalysis, GroupSpec, Limits};

use crate::cli::{CacheAction, CorpusChoice, Format, GlobalArgs, Show, TablePreset, VerifyArgs};
use crate::error::{CliError, CliResult};
use crate::output::{csv_table, json, text_table};
use crate::source::RecordingSource;

/// What a command produced: text for stdout, warnings for stderr, and the
/// exit code when nothing went wrong.
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            warnings: Vec::new(),
            code: 0,
        }
    }
}

pub struct Context {
    pub format: Format,
    pub limits: Limits,
    pub cache_dir: Option<PathBuf>,
    pub use_cache: bool,
    pub trust_cache: bool,
    pub timing: bool,
}

impl Context {
    pub fn new(args: &GlobalArgs) -> Self {
        Context {
            format: args.format,
            limits: Limits {
                max_order: args.max_order,
                max_lattice: args.max_lattice,
                ..Limits::default()
            },
            cache_dir: args.cache_dir.clone().or_else(default_cache_dir),
            use_cache: !args.no_cache,
            trust_cache: args.trust_cache,
            timing: args.timing,
        }
    }

    fn cache(&self) -> Option<LatticeCache> {
        let dir = self.cache_dir.as_ref()?;
        Some(LatticeCache::new(dir, self.trust_cache))
    }

    fn source(&self) -> RecordingSource {
        RecordingSource::new(if self.use_cache { self.cache() } else { None })
    }
}

/// `$XDG_CACHE_HOME/permdeg`, else `$HOME/.cache/permdeg`.
fn default_cache_dir() -> Option<PathBuf> {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("permdeg"))
}

fn parse_specs(specs: &[String]) -> CliResult<Vec<GroupSpec>> {
    specs.iter().map(|s| Ok(parse_spec(s)?)).collect()
}

pub fn compute(ctx: &Context, specs: &[String]) -> CliResult<Output> {
    let specs = parse_specs(specs)?;
    let source = ctx.source();
    let timed: Vec<(GroupAnalysis, u64)> = specs
        .par_iter()
        .map(|s| {
            let start = Instant::now();
            let a = analyse(s, &ctx.limits, &source)?;
            Ok((a, start.elapsed().as_millis() as u64))
        })
        .collect::<CliResult<_>>()?;
    let reports: Vec<DegreeReport> = timed
        .iter()
        .map(|(a, ms)| {
            let mut r = DegreeReport::new(a);
            if ctx.timing {
                r.timing = Some(Timing {
                    milliseconds: *ms,
                    cache_hit: source.was_hit(&a.group),
                });
            }
            r
        })
        .collect();
    let stdout = match ctx.format {
        Format::Text => reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n"),
        Format::Json => json(&ReportsDocument { reports: &reports }),
        Format::Csv => {
            let mut header = DegreeReport::CSV_HEADER.to_vec();
            if ctx.timing {
                header.extend(["milliseconds", "cache_hit"]);
            }
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let mut row = r.csv_row();
                    if let Some(t) = &r.timing {
                        row.extend([t.milliseconds.to_string(), t.cache_hit.to_string()]);
                    }
                    row
                })
                .collect();
            csv_table(&header, &rows)?
        }
    };
    Ok(Output {
        stdout,
        warnings: source.warnings(),
        code: 0,
    })
}

#[derive(Serialize)]
struct ReportsDocument<'a> {
    reports: &'a [DegreeReport],
}

fn parse_theorems(names: &[String]) -> CliResult<Vec<TheoremId>> {
    let mut out = Vec::new();
    for name in names {
        if name.eq_ignore_ascii_case("all") {
            out.extend(TheoremId::ALL);
        } else {
            out.push(name.parse::<TheoremId>()?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn verify(ctx: &Context, args: &VerifyArgs) -> CliResult<Output> {
    let selected = parse_theorems(&args.theorems)?;
    let wants = |t: TheoremId| selected.contains(&t);
    let corpus_theorems: Vec<TheoremId> = selected
        .iter()
        .copied()
        .filter(|t| t.is_per_group() || *t == TheoremId::P42)
        .collect();
    let source = ctx.source();
    let mut verdicts: Vec<TheoremVerdict> = Vec::new();

    if !corpus_theorems.is_empty() {
        let specs = if args.groups.is_empty() {
            match args.corpus {
                CorpusChoice::Full => full_corpus(),
                CorpusChoice::Small => small_corpus(&ctx.limits),
                CorpusChoice::OpenQuestions => open_question_specs(),
            }
        } else {
            parse_specs(&args.groups)?
        };
        verdicts.extend(sweep(&specs, &corpus_theorems, &ctx.limits, &source)?);
    }
    if wants(TheoremId::P61) {
        for &p in &args.primes {
            if p % 2 == 0 || !permdeg::lattice::is_prime(p) {
                return Err(CliError::Usage(format!("--primes: {p} is not an odd prime")));
            }
        }
        let found: Vec<TheoremVerdict> = args
            .primes
            .par_iter()
            .map(|&p| check_p61(p, args.max_p, &ctx.limits))
            .collect::<Result<_, _>>()?;
        verdicts.extend(found);
    }
    if wants(TheoremId::LFormula) {
        let found: Vec<TheoremVerdict> = (1..=args.max_n)
            .into_par_iter()
            .map(|n| check_lattice_formula(n, &ctx.limits))
            .collect::<Result<_, _>>()?;
        verdicts.extend(found);
    }
    if wants(TheoremId::ErrataD8) {
        verdicts.push(check_errata_d8(&ctx.limits)?);
    }

    let summary = summarize(&verdicts);
    let failures = verdicts.iter().filter(|v| v.is_failure()).count();
    let shown: Vec<&TheoremVerdict> = verdicts
        .iter()
        .filter(|v| match args.show {
            Show::All => true,
            Show::Applicable => v.hypotheses_hold,
            Show::Failures => v.is_failure(),
            Show::None => false,
        })
        .collect();
    let stdout = match ctx.format {
        Format::Text => verify_text(&shown, &summary, failures),
        Format::Json => json(&VerifyDocument {
            verdicts: &shown,
            summary: &summary,
            failures,
            passed: failures == 0,
        }),
        Format::Csv => verify_csv(&shown)?,
    };
    Ok(Output {
        stdout,
        warnings: source.warnings(),
        code: if failures == 0 { 0 } else { 1 },
    })
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    verdicts: &'a [&'a TheoremVerdict],
    summary: &'a [SweepCounts],
    failures: usize,
    passed: bool,
}

fn status(v: &TheoremVerdict) -> &'static str {
    match (v.hypotheses_hold, v.passed) {
        (false, _) => "VACUOUS",
        (true, true) => "PASS",
        (true, false) => "FAIL",
    }
}

fn witness_text(v: &TheoremVerdict) -> String {
    v.witness
        .iter()
        .map(|(k, val)| format!("{k}={val}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn verify_text(shown: &[&TheoremVerdict], summary: &[SweepCounts], failures: usize) -> String {
    let mut out = String::new();
    for v in shown {
        out.push_str(&format!(
            "{:<8}{:<12}{}  {} {} {}\n",
            status(v),
            v.theorem_id.to_string(),
            v.group,
            v.lhs,
            v.relation.symbol(),
            v.rhs
        ));
    }
    if !shown.is_empty() {
        out.push('\n');
    }
    let rows: Vec<Vec<String>> = summary
        .iter()
        .map(|c| {
            vec![
                c.theorem_id.clone(),
                c.total.to_string(),
                c.applicable.to_string(),
                c.passed.to_string(),
                c.failed.to_string(),
                c.vacuous.to_string(),
            ]
        })
        .collect();
    out.push_str(&text_table(
        &["theorem", "total", "applicable", "passed", "failed", "vacuous"],
        &rows,
    ));
    out.push_str(&if failures == 0 {
        "no counterexamples\n".to_string()
    } else {
        format!("{failures} failing verdicts\n")
    });
    out
}

fn verify_csv(shown: &[&TheoremVerdict]) -> CliResult<String> {
    let rows: Vec<Vec<String>> = shown
        .iter()
        .map(|v| {
            vec![
                v.theorem_id.to_string(),
                v.group.clone(),
                v.hypotheses_hold.to_string(),
                v.lhs.to_string(),
                v.relation.symbol().to_string(),
                v.rhs.to_string(),
                v.conclusion_holds.to_string(),
                v.passed.to_string(),
                witness_text(v),
            ]
        })
        .collect();
    csv_table(
        &[
            "theorem_id",
            "group",
            "hypotheses_hold",
            "lhs",
            "relation",
            "rhs",
            "conclusion_holds",
            "passed",
            "witness",
        ],
        &rows,
    )
}

/// A table with typed JSON rows and string cells for text and CSV.
struct Table<R: Serialize> {
    name: &'static str,
    header: Vec<&'static str>,
    rows: Vec<R>,
    cells: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct TableDocument<'a, R: Serialize> {
    table: &'a str,
    columns: &'a [&'static str],
    rows: &'a [R],
}

impl<R: Serialize> Table<R> {
    fn render(&self, format: Format) -> CliResult<String> {
        Ok(match format {
            Format::Text => text_table(&self.header, &self.cells),
            Format::Csv => csv_table(&self.header, &self.cells)?,
            Format::Json => json(&TableDocument {
                table: self.name,
                columns: &self.header,
                rows: &self.rows,
            }),
        })
    }
}

#[derive(Serialize)]
struct OpenQuestionRow {
    group: String,
    order: usize,
    lattice_size: usize,
    pd: Degree,
    sd: Degree,
    d: Degree,
    p_order: usize,
    is_p_group: bool,
}

#[derive(Serialize)]
struct DihedralRow {
    n: usize,
    order: usize,
    lattice_size: usize,
    sigma_plus_tau: u64,
    pd: Degree,
    sd: Degree,
    d: Degree,
}

#[derive(Serialize)]
struct FixtureRow {
    group: String,
    quantity: String,
    published: String,
    computed: String,
    matches: bool,
}

pub fn table(ctx: &Context, preset: TablePreset, max_n: usize) -> CliResult<Output> {
    let source = ctx.source();
    let stdout = match preset {
        TablePreset::OpenQuestions => open_questions_table(ctx, &source)?.render(ctx.format)?,
        TablePreset::Dihedral => dihedral_table(ctx, max_n)?.render(ctx.format)?,
        TablePreset::Fixtures => fixtures_table(ctx, &source)?.render(ctx.format)?,
    };
    Ok(Output {
        stdout,
        warnings: source.warnings(),
        code: 0,
    })
}

fn degree_cells(d: &Degree) -> [String; 2] {
    [d.exact.to_string(), d.decimal.clone()]
}

fn open_questions_table(ctx: &Context, source: &dyn LatticeSource) -> CliResult<Table<OpenQuestionRow>> {
    let analyses: Vec<GroupAnalysis> = open_question_specs()
        .par_iter()
        .map(|s| analyse(s, &ctx.limits, source))
        .collect::<Result<_, _>>()?;
    let rows: Vec<OpenQuestionRow> = analyses
        .iter()
        .map(|a| OpenQuestionRow {
            group: a.spec.clone(),
            order: a.order(),
            lattice_size: a.lattice.len(),
            pd: a.pd().into(),
            sd: (&a.sd).into(),
            d: (&a.d).into(),
            p_order: a.profile.p_of_g.count(),
            is_p_group: a.is_p_group(),
        })
        .collect();
    let cells = rows
        .iter()
        .map(|r| {
            let mut c = vec![r.group.clone(), r.order.to_string(), r.lattice_size.to_string()];
            for d in [&r.pd, &r.sd, &r.d] {
                c.extend(degree_cells(d));
            }
            c.extend([r.p_order.to_string(), r.is_p_group.to_string()]);
            c
        })
        .collect();
    Ok(Table {
        name: "open-questions",
        header: vec![
            "group",
            "order",
            "lattice_size",
            "pd",
            "pd_decimal",
            "sd",
            "sd_decimal",
            "d",
            "d_decimal",
            "p_order",
            "is_p_group",
        ],
        rows,
        cells,
    })
}

fn dihedral_table(ctx: &Context, max_n: usize) -> CliResult<Table<DihedralRow>> {
    let rows: Vec<DihedralRow> = (1..=max_n)
        .into_par_iter()
        .map(|n| -> CliResult<DihedralRow> {
            let g = dihedral_by_index_with(n, &ctx.limits)?;
            let lattice = enumerate_subgroups_with(&g, &ctx.limits)?;
            Ok(DihedralRow {
                n,
                order: g.order(),
                lattice_size: lattice.len(),
                sigma_plus_tau: sigma(n as u64) + tau(n as u64),
                pd: (&permutability_degree(&g, &lattice)).into(),
                sd: (&subgroup_commutativity_degree(&g, &lattice)).into(),
                d: (&g.commutativity_degree()).into(),
            })
        })
        .collect::<CliResult<_>>()?;
    let cells = rows
        .iter()
        .map(|r| {
            let mut c = vec![
                r.n.to_string(),
                r.order.to_string(),
                r.lattice_size.to_string(),
                r.sigma_plus_tau.to_string(),
            ];
            for d in [&r.pd, &r.sd, &r.d] {
                c.extend(degree_cells(d));
            }
            c
        })
        .collect();
    Ok(Table {
        name: "dihedral",
        header: vec![
            "n",
            "order",
            "lattice_size",
            "sigma_plus_tau",
            "pd",
            "pd_decimal",
            "sd",
            "sd_decimal",
            "d",
            "d_decimal",
        ],
        rows,
        cells,
    })
}

/// Published values for S_3 and D_8, with pd(D_8) and P(D_8) as corrected
/// in the errata.
fn fixtures_table(ctx: &Context, source: &dyn LatticeSource) -> CliResult<Table<FixtureRow>> {
    let published: [(&str, &str, &str); 10] = [
        ("S:3", "d", "1/2"),
        ("S:3", "sd", "5/6"),
        ("S:3", "pd", "1/1"),
        ("S:3", "lattice_size", "6"),
        ("D:8", "d", "5/8"),
        ("D:8", "sd", "46/55"),
        ("D:8", "pd", "1/1"),
        ("D:8", "lattice_size", "10"),
        ("D:8", "p_order", "8"),
        ("D:8", "center_order", "2"),
    ];
    let mut analyses = Vec::new();
    for spec in ["S:3", "D:8"] {
        analyses.push(analyse(&parse_spec(spec)?, &ctx.limits, source)?);
    }
    let rows: Vec<FixtureRow> = published
        .iter()
        .map(|&(group, quantity, value)| {
            let a = analyses.iter().find(|a| a.spec == group).expect("fixture group analysed");
            let computed = match quantity {
                "d" => a.d.to_string(),
                "sd" => a.sd.to_string(),
                "pd" => a.pd().to_string(),
                "lattice_size" => a.lattice.len().to_string(),
                "p_order" => a.profile.p_of_g.count().to_string(),
                "center_order" => a.profile.center.count().to_string(),
                _ => unreachable!("unknown fixture quantity"),
            };
            let matches = match value.parse::<ExactRatio>() {
                Ok(v) if value.contains('/') => computed.parse::<ExactRatio>().ok() == Some(v),
                _ => computed == value,
            };
            FixtureRow {
                group: group.into(),
                quantity: quantity.into(),
                published: value.into(),
                computed,
                matches,
            }
        })
        .collect();
    let cells = rows
        .iter()
        .map(|r| {
            vec![
                r.group.clone(),
                r.quantity.clone(),
                r.published.clone(),
                r.computed.clone(),
                r.matches.to_string(),
            ]
        })
        .collect();
    Ok(Table {
        name: "fixtures",
        header: vec!["group", "quantity", "published", "computed", "matches"],
        rows,
        cells,
    })
}

#[derive(Serialize)]
struct CacheListDocument {
    dir: String,
    entries: Vec<CacheListEntry>,
}

#[derive(Serialize)]
struct CacheListEntry {
    hash: String,
    spec: String,
    order: usize,
    lattice_size: usize,
}

#[derive(Serialize)]
struct CacheClearDocument {
    dir: String,
    removed: usize,
}

pub fn cache(ctx: &Context, action: CacheAction) -> CliResult<Output> {
    let cache = ctx
        .cache()
        .ok_or_else(|| CliError::Usage("no cache directory: pass --cache-dir or set PERMDEG_CACHE_DIR".into()))?;
    let dir = cache.dir().display().to_string();
    let stdout = match action {
        CacheAction::List => {
            let entries: Vec<CacheListEntry> = cache
                .entries()?
                .into_iter()
                .map(|e| CacheListEntry {
                    hash: e.hash,
                    spec: e.spec,
                    order: e.order,
                    lattice_size: e.lattice_size,
                })
                .collect();
            let header = ["spec", "order", "lattice_size", "hash"];
            let cells: Vec<Vec<String>> = entries
                .iter()
                .map(|e| vec![e.spec.clone(), e.order.to_string(), e.lattice_size.to_string(), e.hash.clone()])
                .collect();
            match ctx.format {
                Format::Text => text_table(&header, &cells),
                Format::Csv => csv_table(&header, &cells)?,
                Format::Json => json(&CacheListDocument { dir, entries }),
            }
        }
        CacheAction::Clear => {
            let removed = cache.clear()?;
            match ctx.format {
                Format::Text => format!("removed {removed} cached lattices from {dir}\n"),
                Format::Csv => csv_table(&["dir", "removed"], &[vec![dir, removed.to_string()]])?,
                Format::Json => json(&CacheClearDocument { dir, removed }),
            }
        }
    };
    Ok(Output::ok(stdout))
}
