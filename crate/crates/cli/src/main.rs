use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qtab::contain::{self, Report};
use qtab::exact::{parse_rational, qbinomial, qfactorial, to_decimal};
use qtab::jset::{self, format_blocks, format_seq, IntSet};
use qtab::limits::{self, ConvergenceReport};
use qtab::qstat::{self, Method};
use qtab::rsk;
use qtab::tableau::{f_poly, f_poly_hook};
use qtab::{BivarPoly, LimitError, Partition, Permutation, Rational, SkewShape, Tableau};

const DEFAULT_MAX_N: usize = 12;

#[derive(Parser)]
#[command(name = "qtab", version, about = "Exact q-analogs of permutation and tableau containment")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for verification and limit grids.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Significant digits in decimal renderings.
    #[arg(long, global = true, default_value_t = qtab::exact::DEFAULT_DIGITS)]
    digits: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Descent set, maj and imaj of a permutation or tableau.
    Stat { kind: ObjKind, object: String },
    /// Robinson-Schensted insertion, or its inverse on two tableaux.
    Rs {
        #[arg(long)]
        inverse: bool,
        #[arg(required = true, num_args = 1..=2)]
        args: Vec<String>,
    },
    /// q-analog polynomials.
    Qpoly {
        #[command(subcommand)]
        which: QpolyCmd,
    },
    /// J(pi) = {j : pi^{<=j} is an involution}, with its difference profile.
    Jset { perm: String },
    /// J(sigma, tau), or `j2set check <set>` to test the j2-set criterion.
    J2set {
        #[arg(required = true, num_args = 2)]
        args: Vec<String>,
    },
    /// Counts of j2-sets.
    J2 {
        #[command(subcommand)]
        which: J2Cmd,
    },
    /// Check an identity family over a size range.
    Verify {
        suite: Suite,
        #[arg(long)]
        max_size: usize,
        /// Largest added size for majgen/majgen1 (defaults to --max-size).
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Finite-n values against their limits.
    Limit(LimitArgs),
    /// Exploratory ratios.
    Probe {
        #[command(subcommand)]
        which: ProbeCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjKind {
    Perm,
    Tab,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyMethod {
    Hook,
    Enum,
}

#[derive(Subcommand)]
enum QpolyCmd {
    /// [n]_q!
    Factorial { n: usize },
    /// Gaussian binomial [n choose k]_q.
    Binomial { n: usize, k: usize },
    /// maj generating polynomial of involutions of size n.
    Tn {
        n: usize,
        #[arg(long, value_enum, default_value = "hook")]
        method: PolyMethod,
    },
    /// (imaj, maj) generating polynomial of S_n.
    An {
        n: usize,
        #[arg(long, value_enum, default_value = "hook")]
        method: PolyMethod,
    },
    /// maj generating polynomial of SYT of shape outer/inner, e.g. `3,2,1 1`.
    Fshape { outer: String, inner: Option<String> },
}

#[derive(Clone, Copy, ValueEnum)]
enum CountMethod {
    Gf,
    Brute,
}

#[derive(Subcommand)]
enum J2Cmd {
    Count {
        #[arg(long, default_value_t = 15)]
        max: usize,
        #[arg(long, value_enum, default_value = "gf")]
        method: CountMethod,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Permcont1,
    Permcont2,
    Permtotab,
    Majgen,
    Majgen1,
    Shuffle,
}

#[derive(Clone, Copy, ValueEnum)]
enum LimitKind {
    Qlim1,
    #[value(name = "m2-1")]
    M2_1,
    M3,
    #[value(name = "m3-1")]
    M3_1,
    Tlim,
    Alim,
    Xi,
    Eq8,
}

#[derive(Clone, Copy, ValueEnum)]
enum Eq8Variant {
    Shifted,
    Doubled,
}

#[derive(clap::Args)]
struct LimitArgs {
    which: LimitKind,
    #[arg(long, default_value = "1/2")]
    q: String,
    #[arg(long)]
    p: Option<String>,
    /// Largest n in the grid.
    #[arg(long)]
    n: usize,
    /// Smallest n in the grid (defaults to --n, a single row).
    #[arg(long)]
    from: Option<usize>,
    #[arg(long, default_value_t = 1)]
    step: usize,
    #[arg(long)]
    sigma: Option<String>,
    #[arg(long)]
    tau: Option<String>,
    /// Pattern tableau for m3/m3-1, inline (`1,2|3`) or a JSON file.
    #[arg(long)]
    tab_a: Option<String>,
    #[arg(long)]
    tab_b: Option<String>,
    /// Exponent `a` for eq8.
    #[arg(long, default_value_t = 1)]
    a: usize,
    #[arg(long, value_enum, default_value = "shifted")]
    variant: Eq8Variant,
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand)]
enum ProbeCmd {
    /// Ratio of same-shape tableau tuples containing the given tableaux.
    Conjecture {
        /// Tableaux, inline (`1,2|3`) or JSON files.
        #[arg(long, required = true, num_args = 1..)]
        tableaux: Vec<String>,
        #[arg(long, required = true, value_delimiter = ',')]
        n: Vec<usize>,
        /// Also recompute by listing tableaux.
        #[arg(long)]
        brute: bool,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

type Out = Result<String, Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn max_n() -> usize {
    std::env::var("QTAB_MAX_N").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_N)
}

fn cap(n: usize, what: &str) -> Result<(), Failure> {
    let m = max_n();
    if n > m {
        Err(usage(format!("{what} = {n} exceeds QTAB_MAX_N = {m}")))
    } else {
        Ok(())
    }
}

fn perm(s: &str) -> Result<Permutation, Failure> {
    s.parse().map_err(usage)
}

fn rational(s: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(usage)
}

fn partition(s: &str) -> Result<Partition, Failure> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<usize> = if t.is_empty() || t == "∅" {
        Vec::new()
    } else {
        t.split(',').map(|x| x.trim().parse().map_err(|_| usage(format!("bad partition {s:?}")))).collect::<Result<_, _>>()?
    };
    Partition::new(&parts).map_err(usage)
}

/// A JSON file path, or the inline form `1,2|3`.
fn tableau(s: &str) -> Result<Tableau, Failure> {
    if s.ends_with(".json") || std::path::Path::new(s).is_file() {
        let text = std::fs::read_to_string(s).map_err(|e| usage(format!("{s}: {e}")))?;
        serde_json::from_str(&text).map_err(|e| usage(format!("{s}: {e}")))
    } else {
        s.parse().map_err(usage)
    }
}

fn set_str(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json value") + "\n"
}

fn stat(cli: &Cli, kind: ObjKind, object: &str) -> Out {
    match kind {
        ObjKind::Perm => {
            let pi = perm(object)?;
            let d = pi.descents();
            let id = pi.inverse().descents();
            if cli.json {
                return Ok(pretty(json!({
                    "perm": pi, "descents": d, "maj": pi.maj(), "inverse_descents": id, "imaj": pi.imaj(),
                })));
            }
            Ok(format!("D={} maj={}\niD={} imaj={}\n", set_str(&d), pi.maj(), set_str(&id), pi.imaj()))
        }
        ObjKind::Tab => {
            let t = tableau(object)?;
            let d = t.descents();
            if cli.json {
                return Ok(pretty(json!({ "tableau": t, "descents": d, "maj": t.maj() })));
            }
            Ok(format!("D={} maj={}\n", set_str(&d), t.maj()))
        }
    }
}

fn rs_cmd(cli: &Cli, inverse: bool, args: &[String]) -> Out {
    if inverse {
        let [p, q] = args else { return Err(usage("rs --inverse needs P and Q")) };
        let pi = rsk::rs_inverse(&tableau(p)?, &tableau(q)?).map_err(usage)?;
        if cli.json {
            return Ok(pretty(json!({ "perm": pi })));
        }
        return Ok(format!("{pi}\n"));
    }
    let [w] = args else { return Err(usage("rs takes one permutation")) };
    let pi = perm(w)?;
    let (p, q) = rsk::rs(&pi);
    if cli.json {
        return Ok(pretty(json!({ "perm": pi, "P": p, "Q": q })));
    }
    Ok(format!("P={p}\nQ={q}\nshape={}\n", p.shape()))
}

fn poly_out(cli: &Cli, name: &str, poly: &BivarPoly, method: Option<Method>) -> String {
    if cli.json {
        let mut v = json!({ "name": name, "terms": poly.to_json() });
        if let Some(m) = method {
            v["method"] = json!(m);
        }
        return pretty(v);
    }
    format!("{poly}\n")
}

fn qpoly(cli: &Cli, which: &QpolyCmd) -> Out {
    let method = |m: PolyMethod| match m {
        PolyMethod::Hook => Method::HookFormula,
        PolyMethod::Enum => Method::Enumeration,
    };
    Ok(match which {
        QpolyCmd::Factorial { n } => poly_out(cli, "factorial", &qfactorial(*n), None),
        QpolyCmd::Binomial { n, k } => poly_out(cli, "binomial", &qbinomial(*n, *k).map_err(usage)?, None),
        QpolyCmd::Tn { n, method: m } => {
            let poly = match m {
                PolyMethod::Hook => qstat::t_poly(*n),
                PolyMethod::Enum => {
                    cap(*n, "n")?;
                    qstat::t_poly_enum(*n)
                }
            };
            poly_out(cli, "tn", &poly, Some(method(*m)))
        }
        QpolyCmd::An { n, method: m } => {
            let poly = match m {
                PolyMethod::Hook => qstat::a_poly(*n),
                PolyMethod::Enum => {
                    cap(*n, "n")?;
                    qstat::a_poly_enum(*n)
                }
            };
            poly_out(cli, "an", &poly, Some(method(*m)))
        }
        QpolyCmd::Fshape { outer, inner } => {
            let outer = partition(outer)?;
            match inner {
                None => poly_out(cli, "fshape", &f_poly_hook(&outer), Some(Method::HookFormula)),
                Some(inner) => {
                    let shape = SkewShape::new(outer, partition(inner)?).map_err(usage)?;
                    cap(shape.size(), "skew size")?;
                    poly_out(cli, "fshape", &f_poly(&shape), Some(Method::Enumeration))
                }
            }
        }
    })
}

fn profile_lines(s: &IntSet) -> String {
    let mut out = String::new();
    if let Ok(p) = jset::profile(s) {
        let _ = writeln!(out, "delta={}", format_seq(&p.delta));
        let _ = writeln!(out, "delta_bar={}", format_seq(&p.delta_bar));
        let _ = writeln!(out, "psi={}", format_blocks(&p.psi));
        if let Some(b) = &p.psi2 {
            let _ = writeln!(out, "psi2={}", format_blocks(b));
        }
    }
    out
}

fn jset_cmd(cli: &Cli, w: &str) -> Out {
    let pi = perm(w)?;
    let j = jset::j_set(&pi);
    if cli.json {
        return Ok(pretty(json!({ "perm": pi, "j": j, "profile": jset::profile(&j).ok() })));
    }
    Ok(format!("J={j}\n{}", profile_lines(&j)))
}

fn j2set_cmd(cli: &Cli, args: &[String]) -> Out {
    if args[0] == "check" {
        let s: IntSet = args[1].parse().map_err(usage)?;
        let ok = jset::is_j2_set(&s);
        let text = if cli.json {
            pretty(json!({ "set": s, "is_j2_set": ok, "is_j_set": jset::is_j_set(&s), "profile": jset::profile(&s).ok() }))
        } else {
            format!("{s}: {}\n{}", if ok { "j2-set" } else { "not a j2-set" }, profile_lines(&s))
        };
        return if ok { Ok(text) } else { Err(Failure::Check(text)) };
    }
    let (sigma, tau) = (perm(&args[0])?, perm(&args[1])?);
    let j = jset::j2_set(&sigma, &tau);
    if cli.json {
        return Ok(pretty(json!({ "sigma": sigma, "tau": tau, "j2": j, "profile": jset::profile(&j).ok() })));
    }
    Ok(format!("J={j}\n{}", profile_lines(&j)))
}

fn j2_count(cli: &Cli, max: usize, method: CountMethod) -> Out {
    let counts: Vec<String> = match method {
        CountMethod::Gf => jset::j2_series(max).iter().map(|c| c.to_string()).collect(),
        CountMethod::Brute => {
            cap(max, "max")?;
            (0..=max).map(|n| jset::j2_count_brute(n).to_string()).collect()
        }
    };
    if cli.json {
        return Ok(pretty(json!({ "max": max, "counts": counts })));
    }
    Ok(counts.join(",") + "\n")
}

fn verify(cli: &Cli, suite: Suite, max_size: usize, max_n_arg: Option<usize>) -> Out {
    cap(max_size, "max-size")?;
    let extra = max_n_arg.unwrap_or(max_size);
    cap(extra, "max-n")?;
    let rep: Report = match suite {
        Suite::Permcont1 => contain::verify_permcont1_range(max_size),
        Suite::Permcont2 => contain::verify_permcont2_range(max_size),
        Suite::Permtotab => contain::verify_permtotab_range(max_size),
        Suite::Majgen => contain::verify_majgen_range(max_size, extra).0,
        Suite::Majgen1 => contain::verify_majgen_range(max_size, extra).1,
        Suite::Shuffle => {
            let mut rep = Report::new("shuffle", &[("max_size", max_size)]);
            for a in 0..=max_size {
                for b in 0..=max_size - a {
                    rep.absorb(contain::verify_shuffle(a, b));
                }
            }
            rep
        }
    };
    let text = if cli.json {
        serde_json::to_string_pretty(&rep).expect("report") + "\n"
    } else {
        let mut s = format!("{}: {} checked, {} failed\n", rep.theorem, rep.checked, rep.failures.len());
        for f in &rep.failures {
            let _ = writeln!(s, "  {}: {} != {}", f.instance, f.lhs, f.rhs);
        }
        s
    };
    if rep.passed() {
        Ok(text)
    } else {
        Err(Failure::Check(text))
    }
}

fn need<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, Failure> {
    v.as_deref().ok_or_else(|| usage(format!("this limit needs {flag}")))
}

fn limit(cli: &Cli, a: &LimitArgs) -> Out {
    let q = rational(&a.q)?;
    let p = a.p.as_deref().map(rational).transpose()?;
    let from = a.from.unwrap_or(a.n);
    if from > a.n || a.step == 0 {
        return Err(usage("need --from <= --n and --step >= 1"));
    }
    let ns: Vec<usize> = (from..=a.n).step_by(a.step).collect();
    let pp = || p.clone().ok_or_else(|| usage("this limit needs --p"));
    let e = |r: Result<Rational, LimitError>| r.map_err(usage);
    let build = |name: &str, lim: Rational, f: &(dyn Fn(usize) -> Result<Rational, LimitError> + Sync)| {
        ConvergenceReport::build(name, lim, &ns, f).map_err(usage)
    };
    let rep = match a.which {
        LimitKind::Qlim1 => {
            let s = perm(need(&a.sigma, "--sigma")?)?;
            build("qlim1", e(limits::qlim1_rhs(&s, &q))?, &|n| limits::qlim1_lhs(&s, &q, n))?
        }
        LimitKind::M2_1 => {
            let s = perm(need(&a.sigma, "--sigma")?)?;
            let t = perm(need(&a.tau, "--tau")?)?;
            let p = pp()?;
            build("m2-1", e(limits::m2_1_rhs(&s, &t, &p, &q))?, &|n| limits::m2_1_lhs(&s, &t, &p, &q, n))?
        }
        LimitKind::M3 => {
            let ta = tableau(need(&a.tab_a, "--tab-a")?)?;
            build("m3", e(limits::m3_rhs(&ta, &q))?, &|n| limits::m3_lhs(&ta, &q, n))?
        }
        LimitKind::M3_1 => {
            let ta = tableau(need(&a.tab_a, "--tab-a")?)?;
            let tb = tableau(need(&a.tab_b, "--tab-b")?)?;
            let p = pp()?;
            build("m3-1", e(limits::m3_1_rhs(&ta, &tb, &p, &q))?, &|n| limits::m3_1_lhs(&ta, &tb, &p, &q, n))?
        }
        LimitKind::Tlim => build("tlim", e(limits::t_ratio_limit(&q))?, &|n| limits::t_ratio(&q, n))?,
        LimitKind::Alim => {
            let p = pp()?;
            build("alim", e(limits::a_ratio_limit(&p, &q))?, &|n| limits::a_ratio(&p, &q, n))?
        }
        LimitKind::Xi => {
            let tol = rational(&format!("1/1{}", "0".repeat(cli.digits + 2)))?;
            match &p {
                None => {
                    let prod = limits::xi_limit_product(&q, &tol).map_err(usage)?;
                    build("xi", prod.value, &|n| limits::xi_partial(&q, n))?
                }
                Some(p) => {
                    let prod = limits::xi2_limit_product(p, &q, &tol).map_err(usage)?;
                    build("xi2", prod.value, &|n| limits::xi2_partial(p, &q, n))?
                }
            }
        }
        LimitKind::Eq8 => {
            let variant = a.variant;
            let pow = a.a;
            build("eq8", Rational::from_integer(1.into()), &|n| {
                let r = limits::eq8_check(pow, n)?;
                Ok(match variant {
                    Eq8Variant::Shifted => r.shifted,
                    Eq8Variant::Doubled => r.doubled,
                })
            })?
        }
    };
    if a.csv {
        return Ok(rep.to_csv(cli.digits));
    }
    if cli.json {
        return Ok(pretty(rep.to_json(cli.digits)));
    }
    let mut s = format!("{} limit={} ({})\n", rep.name, to_decimal(&rep.limit, cli.digits), rep.limit);
    for r in &rep.rows {
        let _ = writeln!(s, "n={} value={} gap={}", r.n, to_decimal(&r.value, cli.digits), to_decimal(&r.gap, cli.digits));
    }
    Ok(s)
}

fn probe(cli: &Cli, which: &ProbeCmd) -> Out {
    let ProbeCmd::Conjecture { tableaux, n, brute } = which;
    let tabs: Vec<Tableau> = tableaux.iter().map(|s| tableau(s)).collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for &k in n {
        let r = contain::conjecture_probe(&tabs, k);
        if *brute {
            cap(k, "n")?;
            if contain::conjecture_probe_brute(&tabs, k) != r {
                return Err(Failure::Check(format!("n={k}: listing disagrees with the shape sum\n")));
            }
        }
        rows.push((k, r));
    }
    if cli.json {
        let v: Vec<_> = rows
            .iter()
            .map(|(k, r)| json!({ "n": k, "ratio": r.to_string(), "decimal": to_decimal(r, cli.digits) }))
            .collect();
        return Ok(pretty(json!({ "tableaux": tabs, "rows": v })));
    }
    let mut s = String::new();
    for (k, r) in rows {
        let _ = writeln!(s, "n={k} ratio={r} ({})", to_decimal(&r, cli.digits));
    }
    Ok(s)
}

fn run(cli: &Cli) -> Out {
    match &cli.cmd {
        Cmd::Stat { kind, object } => stat(cli, *kind, object),
        Cmd::Rs { inverse, args } => rs_cmd(cli, *inverse, args),
        Cmd::Qpoly { which } => qpoly(cli, which),
        Cmd::Jset { perm } => jset_cmd(cli, perm),
        Cmd::J2set { args } => j2set_cmd(cli, args),
        Cmd::J2 { which: J2Cmd::Count { max, method } } => j2_count(cli, *max, *method),
        Cmd::Verify { suite, max_size, max_n } => verify(cli, *suite, *max_size, *max_n),
        Cmd::Limit(a) => limit(cli, a),
        Cmd::Probe { which } => probe(cli, which),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
