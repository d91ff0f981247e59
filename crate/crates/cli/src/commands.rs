use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::time::Instant;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use floorsq::construct::{self, CandidateTuple, RegionSpec};
use floorsq::enumerate::{self, EnumConfig, EnumReport, EnumStats, SmallTriple, ValueEntry};
use floorsq::equidist::{self, RationalBox};
use floorsq::fit::{self, FitResult, Sampling};
use floorsq::homog::{self, BracketKind, BrickCertificate, BridgeRecord, HomPoly, ScanResult};
use floorsq::membership::{self, IndexTriple};
use floorsq::{golden, par, Bracket, Rational, VerificationRecord};

use crate::output::{csv_pairs, fixed12, render, CliError, CliResult, ExitKind, Rendered, RunManifest};
use crate::{Cli, Command, ConstructArgs, EnumArgs, EquidistArgs, Family, Format, HomogArgs, SampleArg, SystemArg};

pub fn parse_alpha(s: &str) -> CliResult<Rational> {
    s.parse::<Rational>().map_err(|e| CliError::usage(format!("--alpha {s:?}: {e}")))
}

fn parse_big(s: &str) -> CliResult<BigInt> {
    s.trim().parse::<BigInt>().map_err(|_| CliError::usage(format!("not an integer: {s:?}")))
}

fn bracket_of(bar: bool) -> Bracket {
    if bar {
        Bracket::Ceil
    } else {
        Bracket::Floor
    }
}

fn stringify(t: &SmallTriple) -> [String; 3] {
    t.map(|v| v.to_string())
}

// ---------------------------------------------------------------- table1

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenDiff {
    pub matches: bool,
    pub missing: Vec<[String; 3]>,
    pub extra: Vec<[String; 3]>,
}

impl GoldenDiff {
    pub fn compare(got: &[SmallTriple], want: &[SmallTriple]) -> Self {
        let g: BTreeSet<_> = got.iter().collect();
        let w: BTreeSet<_> = want.iter().collect();
        let missing: Vec<_> = w.difference(&g).map(|t| stringify(t)).collect();
        let extra: Vec<_> = g.difference(&w).map(|t| stringify(t)).collect();
        GoldenDiff { matches: missing.is_empty() && extra.is_empty(), missing, extra }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub alpha: Rational,
    /// `#U≤x(α)`.
    pub count_u: usize,
    /// `#T≤x(α)`.
    pub count_t: usize,
    pub triples: Vec<[String; 3]>,
    pub golden: Option<GoldenDiff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub x: u64,
    pub rows: Vec<Table1Row>,
    pub all_match: bool,
}

pub fn table1(alpha: Option<&Rational>, x: u64) -> CliResult<Table1Report> {
    let gold = golden::table1()?;
    let alphas: Vec<Rational> = match alpha {
        Some(a) => vec![a.clone()],
        None => gold.rows.iter().map(|r| r.alpha.clone()).collect(),
    };
    let mut rows = Vec::new();
    for a in alphas {
        let rep = enumerate::enum_t(&a, x)?;
        let golden = match gold.row(&a) {
            Some(row) if x == gold.x() => Some(GoldenDiff::compare(&rep.index_triples, &row.triples_u64()?)),
            _ => None,
        };
        rows.push(Table1Row {
            count_u: rep.index_triples.len(),
            count_t: rep.value_triples.len(),
            triples: rep.index_triples.iter().map(stringify).collect(),
            alpha: a,
            golden,
        });
    }
    let all_match = rows.iter().all(|r| r.golden.as_ref().is_none_or(|g| g.matches));
    Ok(Table1Report { x, rows, all_match })
}

// ---------------------------------------------------------------- figure / fit

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FigureData {
    pub alpha: Rational,
    pub bracket: Bracket,
    pub x: u64,
    pub count_t: usize,
    pub count_u: usize,
    /// `(x, #T≤x)` at the start, every jump, and `x_max`.
    pub points: Vec<(u64, usize)>,
}

impl FigureData {
    pub fn steps(&self) -> Vec<(u64, usize)> {
        let mut prev = 0;
        let mut out = Vec::new();
        for &(x, c) in &self.points {
            if c != prev {
                out.push((x, c));
                prev = c;
            }
        }
        out
    }
}

pub fn figure_from_report(rep: &EnumReport) -> FigureData {
    let steps = rep.step_function();
    let start = rep.alpha.clone();
    let n0 = membership::FastAlpha::from_rational(&start).map(|f| f.min_index(rep.bracket)).unwrap_or(1);
    let mut points = Vec::with_capacity(steps.len() + 2);
    if steps.first().is_none_or(|s| s.0 > n0) {
        points.push((n0, 0));
    }
    points.extend(steps.iter().copied());
    let last = points.last().copied().unwrap_or((n0, 0));
    if last.0 < rep.x {
        points.push((rep.x, last.1));
    }
    FigureData {
        alpha: rep.alpha.clone(),
        bracket: rep.bracket,
        x: rep.x,
        count_t: rep.value_triples.len(),
        count_u: rep.index_triples.len(),
        points,
    }
}

pub fn figure(alpha: &Rational, x: u64, bracket: Bracket) -> CliResult<FigureData> {
    let rep = enumerate::enum_with(alpha, bracket, x, EnumConfig::default())?;
    Ok(figure_from_report(&rep))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub x_max: u64,
    pub jumps_in_data: usize,
    pub dense: Option<FitResult>,
    pub jumps: Option<FitResult>,
}

fn rounded(mut f: FitResult) -> FitResult {
    f.lambda = fixed12(f.lambda);
    f.kappa = fixed12(f.kappa);
    f.rms = fixed12(f.rms);
    f
}

pub fn fit_figure(data: &FigureData, sample: SampleArg) -> CliResult<FitReport> {
    let steps = data.steps();
    let run = |s: Sampling| fit::fit_steps(&steps, data.x, s).map(rounded);
    let dense = matches!(sample, SampleArg::Dense | SampleArg::Both).then(|| run(Sampling::Dense)).transpose()?;
    let jumps = matches!(sample, SampleArg::Jumps | SampleArg::Both).then(|| run(Sampling::Jumps)).transpose()?;
    Ok(FitReport { x_max: data.x, jumps_in_data: steps.len(), dense, jumps })
}

/// Reads two-column `x,count` data as written by `figure --format csv`.
pub fn read_figure_csv(path: &Path) -> CliResult<FigureData> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let mut points = Vec::new();
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let mut it = line.split(',');
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(CliError::usage(format!("line {}: expected two columns", i + 1)));
        };
        let x: u64 = a.trim().parse().map_err(|_| CliError::usage(format!("line {}: bad x", i + 1)))?;
        let c: usize = b.trim().parse().map_err(|_| CliError::usage(format!("line {}: bad count", i + 1)))?;
        points.push((x, c));
    }
    let Some(&(x, count)) = points.last() else {
        return Err(CliError::usage("empty step data"));
    };
    Ok(FigureData { alpha: Rational::zero(), bracket: Bracket::Floor, x, count_t: count, count_u: count, points })
}

// ---------------------------------------------------------------- vsearch

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VReport {
    pub x: u64,
    pub triples: Vec<[String; 3]>,
    /// Every triple passes the seven-sum check at α = 1/2.
    pub verified_at_half: bool,
    pub golden: Option<GoldenDiff>,
}

pub fn vsearch(x: u64) -> CliResult<VReport> {
    let found = enumerate::enum_v(x);
    let half = Rational::new(1, 2)?;
    let mut verified_at_half = true;
    for t in &found {
        verified_at_half &= membership::verify_t_tuple(&half, &IndexTriple::from_u64(*t))?.verified;
    }
    let gold = golden::v46300()?;
    let golden = (x == gold.x()).then(|| gold.triples_u64().map(|w| GoldenDiff::compare(&found, &w))).transpose()?;
    Ok(VReport { x, triples: found.iter().map(stringify).collect(), verified_at_half, golden })
}

// ---------------------------------------------------------------- construct

fn region_from(s: &Option<String>, t: &Option<String>) -> CliResult<RegionSpec> {
    match (s, t) {
        (Some(s), Some(t)) => Ok(RegionSpec::new(parse_alpha(s)?, parse_alpha(t)?)?),
        _ => Err(CliError::usage("this family needs --s and --t")),
    }
}

pub fn construct(args: &ConstructArgs) -> CliResult<CandidateTuple> {
    let alpha =
        || args.alpha.as_deref().ok_or_else(|| CliError::usage("this family needs --alpha")).and_then(parse_alpha);
    let c = match args.family {
        Family::Floor => construct::floor_family(&alpha()?, args.n)?,
        Family::FloorA => construct::floor_family_a(&alpha()?, &region_from(&args.s, &args.t)?, args.n)?,
        Family::CeilOdd => {
            let (Some(q), Some(p)) = (args.q, args.p) else {
                return Err(CliError::usage("ceil-odd needs --q and --p"));
            };
            construct::ceil_family_odd(q, p, args.n)?
        }
        Family::CeilIntervals => construct::ceil_family_intervals(&alpha()?, args.n)?,
        Family::CeilRegion => construct::ceil_family_region(&alpha()?, &region_from(&args.s, &args.t)?, args.n)?,
    };
    Ok(c)
}

// ---------------------------------------------------------------- enum

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumOutput {
    pub alpha: Rational,
    pub bracket: Bracket,
    pub x: u64,
    pub count_u: usize,
    pub count_t: usize,
    pub index_triples: Vec<[String; 3]>,
    pub value_triples: Vec<ValueOut>,
    pub stats: EnumStats,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueOut {
    pub values: [String; 3],
    pub first_x: u64,
}

impl From<&EnumReport> for EnumOutput {
    fn from(rep: &EnumReport) -> Self {
        EnumOutput {
            alpha: rep.alpha.clone(),
            bracket: rep.bracket,
            x: rep.x,
            count_u: rep.index_triples.len(),
            count_t: rep.value_triples.len(),
            index_triples: rep.index_triples.iter().map(stringify).collect(),
            value_triples: rep
                .value_triples
                .iter()
                .map(|v: &ValueEntry| ValueOut { values: stringify(&v.values), first_x: v.first_x })
                .collect(),
            stats: rep.stats.clone(),
        }
    }
}

pub fn enumerate(alpha: &Rational, x: u64, bracket: Bracket, memory_mib: u64) -> CliResult<EnumReport> {
    let cfg = EnumConfig { memory_limit_bytes: memory_mib << 20, ..EnumConfig::default() };
    Ok(enumerate::enum_with(alpha, bracket, x, cfg)?)
}

// ---------------------------------------------------------------- homog

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogReport {
    pub alpha: Rational,
    pub kind: BracketKind,
    pub n_max: u64,
    pub witness: Vec<String>,
    pub count: usize,
    pub density: Rational,
    /// `⌊N/q⌋/N`, the density that the multiples of the denominator guarantee.
    pub rational_floor: Rational,
    pub multipliers: Vec<u64>,
}

pub fn homog_scan(
    system: &[HomPoly],
    witness: &[BigInt],
    alpha: &Rational,
    n_max: u64,
    kind: BracketKind,
) -> CliResult<HomogReport> {
    let ScanResult { multipliers, density, .. } = homog::scan_multipliers(system, witness, alpha, n_max, kind)?;
    let q = alpha.denom().clone();
    let rational_floor = Rational::new(BigInt::from(n_max) / &q, BigInt::from(n_max))?;
    Ok(HomogReport {
        alpha: alpha.clone(),
        kind,
        n_max,
        witness: witness.iter().map(|w| w.to_string()).collect(),
        count: multipliers.len(),
        density,
        rational_floor,
        multipliers,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeReport {
    pub alpha: Rational,
    pub n_max: u64,
    pub full_certificate: bool,
    pub emitted: usize,
    pub pairs_verified: usize,
    pub verified: usize,
    pub records: Vec<BridgeRecord>,
}

pub fn bridge(cert: &[u64], alpha: &Rational, n_max: u64) -> CliResult<BridgeReport> {
    let cert = BrickCertificate::from_slice(cert)?;
    let records = homog::t_alpha_bridge(&cert, alpha, n_max)?;
    Ok(BridgeReport {
        alpha: alpha.clone(),
        n_max,
        full_certificate: cert.space.is_some(),
        emitted: records.len(),
        pairs_verified: records.iter().filter(|r| r.record.pairs_verified()).count(),
        verified: records.iter().filter(|r| r.record.verified).count(),
        records,
    })
}

fn system_of(args: &HomogArgs) -> CliResult<(Vec<HomPoly>, Vec<BigInt>)> {
    let (system, default) = match args.system {
        SystemArg::EulerBrick => (homog::euler_brick_system(), homog::euler_brick_witness()),
        SystemArg::Pythagorean => {
            (vec![HomPoly::signed_squares(&[1, 1, -1])?], [3, 4, 5].into_iter().map(BigInt::from).collect())
        }
    };
    let witness = match &args.witness {
        Some(w) => w.iter().map(|s| parse_big(s)).collect::<CliResult<_>>()?,
        None => default,
    };
    Ok((system, witness))
}

// ---------------------------------------------------------------- equidist

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquidistRow {
    pub alpha: Rational,
    /// `|N⁻¹ Σ e(h₁u + h₂v)|`, rounded to 12 decimals.
    pub weyl: String,
    pub box_frequency: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquidistReport {
    pub n: u64,
    pub h: (i64, i64),
    pub region: RationalBox,
    pub rows: Vec<EquidistRow>,
}

pub fn equidist_rows(alphas: &[Rational], n: u64, h: (i64, i64), region: &RationalBox) -> CliResult<EquidistReport> {
    let rows = par::map_slice(par::Parallelism::Parallel, alphas, |a| -> CliResult<EquidistRow> {
        let w = equidist::weyl_sum(h.0, h.1, a, n)?;
        Ok(EquidistRow {
            alpha: a.clone(),
            weyl: format!("{w:.12}"),
            box_frequency: equidist::box_frequency(a, region, n)?,
        })
    })
    .into_iter()
    .collect::<CliResult<Vec<_>>>()?;
    Ok(EquidistReport { n, h, region: region.clone(), rows })
}

/// `count` random α in `(lo, hi)` with 64-bit denominators, from `seed`.
pub fn random_alphas(seed: u64, count: usize, lo: &Rational, hi: &Rational) -> CliResult<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| equidist::random_alpha(&mut rng, lo, hi).map_err(CliError::from)).collect()
}

// ---------------------------------------------------------------- dispatch

fn params(pairs: &[(&str, Option<String>)]) -> BTreeMap<String, String> {
    pairs.iter().filter_map(|(k, v)| v.clone().map(|v| (k.to_string(), v))).collect()
}

fn s<T: ToString>(v: T) -> Option<String> {
    Some(v.to_string())
}

fn no_csv(format: Format) -> CliResult<()> {
    if format == Format::Csv {
        return Err(CliError::usage("this subcommand has no CSV form; use --format json"));
    }
    Ok(())
}

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> CliResult<Rendered> {
    let start = Instant::now();
    let mut out = par::with_workers(cli.workers, || dispatch(cli))?;
    if cli.timing {
        // the manifest is the first object in the envelope; patch it in
        let mut v: serde_json::Value = serde_json::from_str(&out.json).expect("own output");
        v["manifest"]["wall_time_ms"] = serde_json::json!(start.elapsed().as_millis() as u64);
        out.json = serde_json::to_string_pretty(&v).expect("json") + "\n";
    }
    Ok(out)
}

fn dispatch(cli: &Cli) -> CliResult<Rendered> {
    let workers = par::current_workers();
    let seed = s(cli.seed);
    match &cli.command {
        Command::Table1 { alpha, x } => {
            no_csv(cli.format)?;
            let a = alpha.as_deref().map(parse_alpha).transpose()?;
            let rep = table1(a.as_ref(), *x)?;
            let m = RunManifest::new("table1", params(&[("alpha", a.map(|a| a.to_string())), ("x", s(x))]), workers);
            let mut r = render(&m, &rep, None)?;
            if !rep.all_match {
                r.exit = ExitKind::Mismatch;
                let mut note = String::from("Table 1 mismatch:\n");
                for row in &rep.rows {
                    if let Some(g) = row.golden.as_ref().filter(|g| !g.matches) {
                        note.push_str(&format!(
                            "  alpha {}: missing {:?}, extra {:?}\n",
                            row.alpha, g.missing, g.extra
                        ));
                    }
                }
                r.note = Some(note);
            }
            Ok(r)
        }
        Command::Figure(a) => {
            let alpha = parse_alpha(&a.alpha)?;
            let data = figure(&alpha, a.x, bracket_of(a.bar))?;
            let m =
                RunManifest::new("figure", params(&[("alpha", s(&alpha)), ("x", s(a.x)), ("bar", s(a.bar))]), workers);
            let csv = csv_pairs(data.points.iter().copied());
            render(&m, &data, Some(csv))
        }
        Command::Fit { alpha, x, input, sample, bar } => {
            no_csv(cli.format)?;
            let data = match (input, alpha, x) {
                (Some(path), None, None) => read_figure_csv(path)?,
                (None, Some(a), Some(x)) => figure(&parse_alpha(a)?, *x, bracket_of(*bar))?,
                _ => return Err(CliError::usage("fit needs either --input, or --alpha and --x")),
            };
            let rep = fit_figure(&data, *sample)?;
            let m = RunManifest::new(
                "fit",
                params(&[
                    ("alpha", alpha.clone()),
                    ("x", x.map(|v| v.to_string())),
                    ("input", input.as_ref().map(|p| p.display().to_string())),
                    ("sample", s(format!("{sample:?}").to_lowercase())),
                    ("bar", s(bar)),
                ]),
                workers,
            );
            render(&m, &rep, None)
        }
        Command::Vsearch { x } => {
            let rep = vsearch(*x)?;
            let m = RunManifest::new("vsearch", params(&[("x", s(x))]), workers);
            let csv = rep.triples.iter().map(|t| t.join(",") + "\n").collect();
            let mut r = render(&m, &rep, Some(csv))?;
            if rep.golden.as_ref().is_some_and(|g| !g.matches) || !rep.verified_at_half {
                r.exit = ExitKind::Mismatch;
                r.note = Some(format!("V({x}) mismatch: {:?}", rep.golden));
            }
            Ok(r)
        }
        Command::Construct(args) => {
            no_csv(cli.format)?;
            let c = construct(args)?;
            let m = RunManifest::new(
                "construct",
                params(&[
                    ("family", s(format!("{:?}", args.family))),
                    ("alpha", args.alpha.clone()),
                    ("n", s(args.n)),
                    ("q", args.q.map(|v| v.to_string())),
                    ("p", args.p.map(|v| v.to_string())),
                    ("s", args.s.clone()),
                    ("t", args.t.clone()),
                ]),
                workers,
            );
            render(&m, &c, None)
        }
        Command::Enum(args) => run_enum(cli, args, workers),
        Command::Homog(args) => {
            no_csv(cli.format)?;
            let alpha = parse_alpha(&args.alpha)?;
            let kind: BracketKind = args.kind.parse()?;
            let m = RunManifest::new(
                "homog",
                params(&[
                    ("alpha", s(&alpha)),
                    ("n", s(args.n)),
                    ("kind", s(&args.kind)),
                    ("system", s(format!("{:?}", args.system))),
                    ("witness", args.witness.as_ref().map(|w| w.join(","))),
                    (
                        "bridge",
                        args.bridge.as_ref().map(|b| b.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
                    ),
                ]),
                workers,
            );
            if let Some(cert) = &args.bridge {
                render(&m, &bridge(cert, &alpha, args.n)?, None)
            } else {
                let (system, witness) = system_of(args)?;
                render(&m, &homog_scan(&system, &witness, &alpha, args.n, kind)?, None)
            }
        }
        Command::Equidist(args) => run_equidist(args, seed, workers, cli.seed),
        Command::Verify { alpha, idx, bar } => {
            no_csv(cli.format)?;
            let a = parse_alpha(alpha)?;
            let [i, j, k] =
                <[String; 3]>::try_from(idx.clone()).map_err(|_| CliError::usage("--idx needs three values"))?;
            let triple = IndexTriple::new(parse_big(&i)?, parse_big(&j)?, parse_big(&k)?);
            let rec: VerificationRecord = if *bar {
                membership::verify_tbar_tuple(&a, &triple)?
            } else {
                membership::verify_t_tuple(&a, &triple)?
            };
            let m = RunManifest::new(
                "verify",
                params(&[("alpha", s(&a)), ("idx", s(idx.join(","))), ("bar", s(bar))]),
                workers,
            );
            let mut r = render(&m, &rec, None)?;
            if !rec.verified {
                r.exit = ExitKind::Mismatch;
                let failing: Vec<String> = rec.failing().map(|c| format!("{} = {}", c.label, c.value)).collect();
                r.note = Some(format!("not verified; failing sums: {}", failing.join(", ")));
            }
            Ok(r)
        }
    }
}

fn run_enum(cli: &Cli, args: &EnumArgs, workers: usize) -> CliResult<Rendered> {
    let base = |extra: Vec<(&str, Option<String>)>| {
        let mut p = vec![("x", s(args.x)), ("bar", s(args.bar))];
        p.extend(extra);
        RunManifest::new("enum", params(&p), workers)
    };
    if let Some(a) = &args.abox {
        if a.len() != 3 {
            return Err(CliError::usage("--abox needs three values"));
        }
        no_csv(cli.format)?;
        let res = enumerate::enum_a_box(args.x, a[0], a[1], a[2])?;
        let m = base(vec![("abox", s(format!("{},{},{}", a[0], a[1], a[2])))]);
        return render(&m, &res, None);
    }
    if let Some(a) = &args.profile {
        if a.len() != 2 {
            return Err(CliError::usage("--profile needs two values"));
        }
        let rows = enumerate::divisor_sum_profile(args.x, a[0], a[1])?;
        let m = base(vec![("profile", s(format!("{},{}", a[0], a[1])))]);
        let csv = csv_pairs(rows.iter().map(|r| (r.x, r.sum)));
        return render(&m, &rows, Some(csv));
    }
    let alpha = parse_alpha(args.alpha.as_deref().ok_or_else(|| CliError::usage("enum needs --alpha"))?)?;
    let rep = enumerate(&alpha, args.x, bracket_of(args.bar), args.memory_mib)?;
    let m = base(vec![("alpha", s(&alpha)), ("memory_mib", s(args.memory_mib))]);
    let csv = csv_pairs(figure_from_report(&rep).points);
    render(&m, &EnumOutput::from(&rep), Some(csv))
}

fn run_equidist(args: &EquidistArgs, seed: Option<String>, workers: usize, seed_value: u64) -> CliResult<Rendered> {
    let alphas = match &args.alpha {
        Some(a) => vec![parse_alpha(a)?],
        None => random_alphas(seed_value, args.count, &parse_alpha(&args.lo)?, &parse_alpha(&args.hi)?)?,
    };
    let corners: Vec<Rational> = args.r#box.iter().map(|c| parse_alpha(c)).collect::<CliResult<_>>()?;
    let [u_lo, u_hi, v_lo, v_hi] =
        <[Rational; 4]>::try_from(corners).map_err(|_| CliError::usage("--box needs four values"))?;
    let region = RationalBox::new(u_lo, u_hi, v_lo, v_hi)?;
    let m = RunManifest::new(
        "equidist",
        params(&[
            ("alpha", args.alpha.clone()),
            ("seed", if args.alpha.is_none() { seed } else { None }),
            ("count", if args.alpha.is_none() { s(args.count) } else { None }),
            ("n", s(args.n)),
            ("h", s(format!("{},{}", args.h1, args.h2))),
            ("box", s(args.r#box.join(","))),
            ("points", s(args.points)),
        ]),
        workers,
    );
    if args.points {
        let pts = equidist::frac_sequence(&alphas[0], args.n)?;
        let csv = csv_pairs(pts.iter().map(|p| (format!("{:.12}", p.u.to_f64()), format!("{:.12}", p.v.to_f64()))));
        return render(&m, &pts, Some(csv));
    }
    let rep = equidist_rows(&alphas, args.n, (args.h1, args.h2), &region)?;
    render(&m, &rep, None)
}
