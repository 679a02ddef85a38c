use std::collections::BTreeSet;
use std::io::Write;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use super::table::{bnk_grid, kernel_table, KernelTable};
use super::{
    exit_code, BijectionArgs, CheckseqArgs, Cli, Command, CountMethodArg, JuggleArgs, MethodArg,
    PolyArgs, RenderArg, SetcountArgs, SortArgs, StatsArgs, TableArgs, VerifyArgs, EXIT_DOMAIN,
    EXIT_OK,
};
use crate::descent::{
    bijection_f, bijection_g, compare_routes, count_superset_brute, count_superset_recursive,
    restricted_poly, Family, Method,
};
use crate::enumerate::DEFAULT_ENUMERATION_CAP;
use crate::error::{Error, Result};
use crate::juggling::{
    phi, phi_inverse, psi, psi_inverse, render_diagram, validate, ColoredJugglingSequence,
    DiagramFormat, Validated, DEFAULT_PSI_CAP,
};
use crate::perm::{parse_int_list, DescentSet, Permutation, SignedPermutation, SignedWord};
use crate::seqprops::{is_log_concave, is_symmetric, is_unimodal, SequenceVerdict};
use crate::verify::{run_suite, Limits, Suite};

/// A command result in both renderings. `success = false` means the command
/// ran but its check failed (exit 1).
struct Output {
    text: String,
    json: Value,
    success: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            success: true,
        }
    }
}

pub(super) fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut warnings = Vec::new();
    let result = match &cli.command {
        Command::Stats(a) => stats(a),
        Command::Sort(a) => sort(a),
        Command::Poly(a) => poly(a, &mut warnings),
        Command::Setcount(a) => setcount(a, &mut warnings),
        Command::Bijection(a) => bijection(a),
        Command::Juggle(a) => juggle(a, &mut warnings),
        Command::Checkseq(a) => checkseq(a),
        Command::Table(a) => table(a, &mut warnings),
        Command::Verify(a) => verify(a),
    };
    for w in &warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    match result {
        Ok(output) => {
            let rendered = if cli.json {
                serde_json::to_string_pretty(&output.json).expect("JSON values always serialize")
            } else {
                output.text
            };
            let _ = out.write_all(rendered.as_bytes());
            if !rendered.ends_with('\n') {
                let _ = out.write_all(b"\n");
            }
            if output.success {
                EXIT_OK
            } else {
                EXIT_DOMAIN
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn raise_cap(what: &str, cap: usize, default: usize, warnings: &mut Vec<String>) {
    if cap > default {
        warnings.push(format!(
            "{what} cap raised from {default} to {cap}; large instances may take a long time"
        ));
    }
}

fn required<T: Clone>(value: &Option<T>, flag: &str) -> Result<T> {
    value
        .clone()
        .ok_or_else(|| Error::parse("", format!("{flag} is required in this mode")))
}

fn set_json(s: &DescentSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `label  value` lines with the values aligned.
fn aligned(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(l, v)| format!("{l:<width$}  {v}\n"))
        .collect()
}

fn stats(args: &StatsArgs) -> Result<Output> {
    let p: SignedPermutation = args.perm.parse()?;
    let des = p.descent_set();
    let mut rows = vec![
        ("perm", p.to_string()),
        ("descent_set_b", des.to_string()),
        ("des_b", p.descents().to_string()),
        ("maxdrop_b", p.max_drop().to_string()),
        ("bsc_b", p.bubble_sort_complexity().to_string()),
    ];
    let mut j = json!({
        "perm": p.values(),
        "descent_set_b": set_json(&des),
        "des_b": p.descents(),
        "maxdrop_b": p.max_drop(),
        "bsc_b": p.bubble_sort_complexity(),
    });
    if p.values().iter().all(|&v| v > 0) {
        let a = p.abs();
        rows.extend([
            ("descent_set_a", a.descent_set().to_string()),
            ("des_a", a.descents().to_string()),
            ("maxdrop_a", a.max_drop().to_string()),
            ("bsc_a", a.bubble_sort_complexity().to_string()),
        ]);
        let m = j.as_object_mut().expect("object literal");
        m.insert("descent_set_a".into(), set_json(&a.descent_set()));
        m.insert("des_a".into(), json!(a.descents()));
        m.insert("maxdrop_a".into(), json!(a.max_drop()));
        m.insert("bsc_a".into(), json!(a.bubble_sort_complexity()));
    }
    Ok(Output::ok(aligned(&rows), j))
}

fn sort(args: &SortArgs) -> Result<Output> {
    if args.complexity {
        let p: SignedPermutation = args.perm.parse()?;
        let mut passes = Vec::new();
        let mut current = p.clone();
        while !current.is_identity() {
            current = current.bubble_pass();
            passes.push(current.clone());
        }
        let bsc = p.bubble_sort_complexity();
        debug_assert_eq!(bsc, passes.len());
        let mut text = format!("start   {p}\n");
        for (i, q) in passes.iter().enumerate() {
            text.push_str(&format!("pass {}  {q}\n", i + 1));
        }
        text.push_str(&format!("bsc_b   {bsc}\nmaxdrop {}\n", p.max_drop()));
        let j = json!({
            "perm": p.values(),
            "passes": passes.iter().map(|q| q.values().to_vec()).collect::<Vec<_>>(),
            "bsc_b": bsc,
            "maxdrop_b": p.max_drop(),
        });
        return Ok(Output::ok(text, j));
    }
    let w: SignedWord = args.perm.parse()?;
    let (method, image) = if args.recursive {
        ("blocks", w.bubble_pass_recursive())
    } else {
        ("sweep", w.bubble_pass())
    };
    let j = json!({ "input": w.values(), "output": image.values(), "method": method });
    Ok(Output::ok(image.to_string(), j))
}

fn poly(args: &PolyArgs, warnings: &mut Vec<String>) -> Result<Output> {
    let family: Family = args.family.parse()?;
    let (n, k) = (args.n, args.k);
    raise_cap("enumeration", args.cap, DEFAULT_ENUMERATION_CAP, warnings);
    let label = format!("{family}_{{{n},{k}}}(x)");
    let method = match args.method {
        MethodArg::Brute => Method::Brute,
        MethodArg::Recurrence => Method::Recurrence,
        MethodArg::Explicit => Method::Explicit,
        MethodArg::Series => Method::Series,
        MethodArg::All => return poly_all(family, n, k, args.cap, &label),
    };
    let p = restricted_poly(family, n, k, method, args.cap)?;
    let text = format!(
        "{label} = {}\ncoefficients {}\n",
        p.pretty("x"),
        p.to_list_string()
    );
    let j = json!({
        "family": family.name(),
        "n": n,
        "k": k,
        "method": method.name(),
        "coefficients": p,
    });
    Ok(Output::ok(text, j))
}

fn poly_all(family: Family, n: usize, k: usize, cap: usize, label: &str) -> Result<Output> {
    let cmp = compare_routes(family, n, k, cap)?;
    let agree = cmp.agree();
    let mut text = format!("{label}\n");
    let mut routes = Map::new();
    for (method, p) in &cmp.results {
        text.push_str(&format!("{:<10}  {}\n", method.name(), p.to_list_string()));
        routes.insert(method.name().into(), json!(p));
    }
    let skipped: Vec<&str> = Method::ALL
        .iter()
        .filter(|m| cmp.results.iter().all(|(r, _)| r != *m))
        .map(|m| m.name())
        .collect();
    for s in &skipped {
        text.push_str(&format!(
            "{s:<10}  skipped (n = {n} exceeds the enumeration cap {cap})\n"
        ));
    }
    text.push_str(&format!("agree: {agree}\n"));
    let j = json!({
        "family": family.name(),
        "n": n,
        "k": k,
        "routes": routes,
        "skipped": skipped,
        "agree": agree,
    });
    Ok(Output {
        text,
        json: j,
        success: agree,
    })
}

fn setcount(args: &SetcountArgs, warnings: &mut Vec<String>) -> Result<Output> {
    let (n, k) = (args.n, args.k);
    let s = DescentSet::parse(n, &args.set)?;
    let label = format!("b_{{{n},{k}}}({s})");
    let base = json!({ "n": n, "k": k, "set": set_json(&s) });
    let mut j = base.as_object().expect("object literal").clone();
    match args.method {
        CountMethodArg::Recursive => {
            let c = count_superset_recursive(n, k, &s)?;
            j.insert("count".into(), big(&c));
            Ok(Output::ok(format!("{label} = {c}\n"), Value::Object(j)))
        }
        CountMethodArg::Brute => {
            raise_cap("enumeration", args.cap, DEFAULT_ENUMERATION_CAP, warnings);
            let c = count_superset_brute(n, k, &s, args.cap)?;
            j.insert("count".into(), big(&c));
            Ok(Output::ok(format!("{label} = {c}\n"), Value::Object(j)))
        }
        CountMethodArg::All => {
            raise_cap("enumeration", args.cap, DEFAULT_ENUMERATION_CAP, warnings);
            let recursive = count_superset_recursive(n, k, &s)?;
            let brute = count_superset_brute(n, k, &s, args.cap)?;
            let agree = recursive == brute;
            let text =
                format!("{label}\nbrute      {brute}\nrecursive  {recursive}\nagree: {agree}\n");
            j.insert(
                "counts".into(),
                json!({ "brute": big(&brute), "recursive": big(&recursive) }),
            );
            j.insert("agree".into(), json!(agree));
            Ok(Output {
                text,
                json: Value::Object(j),
                success: agree,
            })
        }
    }
}

fn parse_value_set(s: &str) -> Result<BTreeSet<u32>> {
    let inner = s.trim();
    let inner = inner
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(inner);
    Ok(parse_int_list::<u32>(inner)?.into_iter().collect())
}

fn format_value_set(x: &BTreeSet<u32>) -> String {
    let items: Vec<String> = x.iter().map(u32::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn bijection(args: &BijectionArgs) -> Result<Output> {
    let p: SignedPermutation = args.perm.parse()?;
    if args.f {
        let s = DescentSet::parse(p.len(), &required(&args.set, "--set")?)?;
        let split = bijection_f(&p, args.k, &s)?;
        let text = format!(
            "alpha  {}\nX      {}\n",
            split.alpha,
            format_value_set(&split.x)
        );
        let j = json!({ "alpha": split.alpha.values(), "x": split.x });
        Ok(Output::ok(text, j))
    } else {
        let x = parse_value_set(&required(&args.x, "--x")?)?;
        let n = required(&args.n, "--n")?;
        let q = bijection_g(&p, &x, n, args.k)?;
        let j = json!({ "perm": q.values() });
        Ok(Output::ok(format!("{q}\n"), j))
    }
}

fn throws_json(t: &ColoredJugglingSequence) -> Value {
    json!({ "throws": t.throws(), "text": t.to_string() })
}

fn juggle(args: &JuggleArgs, warnings: &mut Vec<String>) -> Result<Output> {
    let seq = || -> Result<Validated> {
        let text = required(&args.seq, "--seq")?;
        validate(&crate::juggling::parse_throws(&text)?)
    };
    let k = || required(&args.k, "--k");

    if args.validate {
        let v = seq()?;
        let t = v.colored();
        let kind = match v {
            Validated::Plain(_) => "plain",
            Validated::Colored(_) => "colored",
        };
        let state = t.state();
        let text = format!(
            "valid {kind} juggling sequence: period {}, {} balls, state {state}\n",
            t.period(),
            t.ball_count()
        );
        let j = json!({
            "valid": true,
            "kind": kind,
            "period": t.period(),
            "balls": t.ball_count(),
            "state": state.bits().iter().map(|&b| u8::from(b)).collect::<Vec<_>>(),
        });
        return Ok(Output::ok(text, j));
    }
    if args.state {
        let t = seq()?.colored();
        let state = t.state();
        let ground = t.is_ground_state(t.ball_count());
        let text = format!("{state}\nground state: {}\n", yes_no(ground));
        let j = json!({
            "state": state.bits().iter().map(|&b| u8::from(b)).collect::<Vec<_>>(),
            "balls": t.ball_count(),
            "ground": ground,
        });
        return Ok(Output::ok(text, j));
    }
    if args.landing {
        let tau = seq()?.colored().landing_permutation(k()?)?;
        return Ok(Output::ok(
            format!("{tau}\n"),
            json!({ "landing": tau.values() }),
        ));
    }
    if args.phi {
        let p: Permutation = required(&args.perm, "--perm")?.parse()?;
        let t = phi(&p, k()?)?;
        return Ok(Output::ok(format!("{t}\n"), throws_json(&t.to_colored())));
    }
    if args.phi_inverse {
        let t = match seq()? {
            Validated::Plain(t) => t,
            Validated::Colored(_) => {
                return Err(Error::parse(
                    args.seq.as_deref().unwrap_or_default(),
                    "phi^-1 takes nonnegative throws",
                ))
            }
        };
        let p = phi_inverse(&t, k()?)?;
        return Ok(Output::ok(format!("{p}\n"), json!({ "perm": p.values() })));
    }
    if args.psi {
        raise_cap("psi k", args.cap, DEFAULT_PSI_CAP, warnings);
        let p: SignedPermutation = required(&args.perm, "--perm")?.parse()?;
        let t = psi(&p, k()?, args.cap)?;
        return Ok(Output::ok(format!("{t}\n"), throws_json(&t)));
    }
    if args.psi_inverse {
        let t = seq()?.colored();
        let p = psi_inverse(&t, required(&args.n, "--n")?, k()?)?;
        return Ok(Output::ok(format!("{p}\n"), json!({ "perm": p.values() })));
    }
    let render = args.render.expect("clap enforces exactly one mode");
    let format = match render {
        RenderArg::Ascii => DiagramFormat::Ascii,
        RenderArg::Svg => DiagramFormat::Svg,
    };
    let diagram = render_diagram(&seq()?.colored(), format);
    let name = match render {
        RenderArg::Ascii => "ascii",
        RenderArg::Svg => "svg",
    };
    let j = json!({ "format": name, "diagram": diagram });
    Ok(Output::ok(diagram, j))
}

fn verdict_text(v: &SequenceVerdict) -> String {
    match v {
        SequenceVerdict::Holds => "yes".into(),
        SequenceVerdict::Fails(w) => {
            let items: Vec<String> = w.iter().map(usize::to_string).collect();
            format!("no (at {})", items.join(","))
        }
    }
}

fn checkseq(args: &CheckseqArgs) -> Result<Output> {
    let a: Vec<BigInt> = parse_int_list(&args.seq)?;
    if a.is_empty() {
        return Err(Error::EmptySequence);
    }
    let all = !(args.symmetric || args.unimodal || args.logconcave);
    let mut rows = Vec::new();
    let mut j = Map::new();
    type Checker = fn(&[BigInt]) -> SequenceVerdict;
    let checks: [(bool, &str, Checker); 3] = [
        (args.symmetric, "symmetric", is_symmetric),
        (args.unimodal, "unimodal", is_unimodal),
        (args.logconcave, "log_concave", is_log_concave),
    ];
    for (wanted, name, check) in checks {
        if all || wanted {
            let v = check(&a);
            rows.push((name, verdict_text(&v)));
            j.insert(
                name.into(),
                serde_json::to_value(&v).expect("verdicts serialize"),
            );
        }
    }
    Ok(Output::ok(aligned(&rows), Value::Object(j)))
}

fn table(args: &TableArgs, warnings: &mut Vec<String>) -> Result<Output> {
    raise_cap("table", args.cap, super::DEFAULT_TABLE_CAP, warnings);
    if args.bnk_grid {
        let family: Family = args.family.parse()?;
        let (text, j) = bnk_grid(family, args.max_n, args.cap)?;
        return Ok(Output::ok(text, j));
    }
    let which = if args.qk {
        KernelTable::Q
    } else {
        KernelTable::P
    };
    let (text, j) = kernel_table(which, args.max_k, args.cap)?;
    Ok(Output::ok(text, j))
}

fn verify(args: &VerifyArgs) -> Result<Output> {
    let limits = if args.quick {
        Limits::quick()
    } else {
        Limits::default()
    };
    let suites: Vec<Suite> = if args.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        let mut s = args
            .suites
            .iter()
            .map(|name| name.parse())
            .collect::<Result<Vec<Suite>>>()?;
        s.sort();
        s.dedup();
        s
    };
    let reports: Vec<_> = suites.iter().map(|&s| run_suite(s, &limits)).collect();
    let passed = reports.iter().all(|r| r.passed);
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: usize = reports
        .iter()
        .map(|r| r.checks.iter().filter(|c| !c.passed).count())
        .sum();

    let mut text = String::new();
    for r in &reports {
        for c in &r.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            text.push_str(&format!(
                "{status}  {}: {} ({} cases)\n",
                r.suite, c.name, c.cases
            ));
            for f in &c.failures {
                text.push_str(&format!("      {f}\n"));
            }
        }
        for note in &r.notes {
            text.push_str(&format!("note  {}: {note}\n", r.suite));
        }
    }
    text.push_str(&format!("{} of {total} checks passed\n", total - failed));
    let j = json!({
        "passed": passed,
        "limits": limits,
        "suites": reports,
    });
    Ok(Output {
        text,
        json: j,
        success: passed,
    })
}
