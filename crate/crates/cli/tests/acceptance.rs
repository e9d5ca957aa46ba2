//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p lawvere-cli --test acceptance`.

use std::fs;
use std::process::{Command, ExitCode};
use std::time::Instant;

use lawvere::adjunctions::laws::*;
use lawvere::adjunctions::{run_roundtrip, run_suite, Adjunction, MonoidTag, Sampler, Suite, SuiteConfig};
use lawvere::{
    Boolean, GaussianRational, LawReport, MultisetMonad, Nat, NonNegRational, Result, SemiringTag, Tropical,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20240601;

/// Criterion outcome: `Ok` or the list of problems found.
type Verdict = std::result::Result<(), Vec<String>>;

type Criterion = (&'static str, fn() -> Verdict);

fn collect(reports: impl IntoIterator<Item = (String, LawReport)>) -> Verdict {
    let mut problems = Vec::new();
    for (label, report) in reports {
        for o in report.failures() {
            problems.push(format!("{label}: {} ({:?})", o.law, o.counterexample));
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems)
    }
}

fn require_cases(label: &str, report: &LawReport, cases: usize, problems: &mut Vec<String>) {
    for o in &report.outcomes {
        if o.passed() && !o.expected_failure && o.cases != cases {
            problems.push(format!("{label}: {} ran {} of {cases} cases", o.law, o.cases));
        }
    }
}

fn require_laws(label: &str, report: &LawReport, laws: &[&str], problems: &mut Vec<String>) {
    for law in laws {
        if report.find(law).is_none() {
            problems.push(format!("{label}: law {law:?} was not checked"));
        }
    }
}

fn suite(suite: Suite, semiring: SemiringTag, monoid: Option<MonoidTag>, cases: usize) -> Result<LawReport> {
    Ok(run_suite(&SuiteConfig { suite, semiring, monoid, seed: SEED, cases })?.report)
}

macro_rules! per_semiring {
    ($f:ident $(, $arg:expr)*) => {
        vec![
            ("nat".to_string(), $f::<Nat>($($arg),*)),
            ("bool".to_string(), $f::<Boolean>($($arg),*)),
            ("tropical".to_string(), $f::<Tropical>($($arg),*)),
            ("rational".to_string(), $f::<NonNegRational>($($arg),*)),
            ("gaussian".to_string(), $f::<GaussianRational>($($arg),*)),
        ]
    };
}

fn ok_all(items: Vec<(String, Result<LawReport>)>) -> std::result::Result<Vec<(String, LawReport)>, Vec<String>> {
    let mut out = Vec::new();
    let mut errors = Vec::new();
    for (label, r) in items {
        match r {
            Ok(r) => out.push((label, r)),
            Err(e) => errors.push(format!("{label}: {e}")),
        }
    }
    if errors.is_empty() {
        Ok(out)
    } else {
        Err(errors)
    }
}

const MONAD_LAWS: [&str; 11] = [
    "multiply after unit",
    "multiply after mapped unit",
    "multiply associative",
    "functor identity",
    "functor composition",
    "unit natural",
    "multiply natural",
    "strength after unit",
    "strength after multiply",
    "strength unitor",
    "strength natural",
];

fn monad_law_suite() -> Verdict {
    let mut reports = Vec::new();
    for tag in SemiringTag::ALL {
        reports.push((format!("M_{tag}"), suite(Suite::MonadLaws, tag, None, 200)));
    }
    for m in [MonoidTag::Mul(SemiringTag::Nat), MonoidTag::Words] {
        reports.push((format!("A({m})"), suite(Suite::MonadLaws, SemiringTag::Nat, Some(m), 200)));
    }
    let reports = ok_all(reports)?;
    let mut problems = Vec::new();
    for (label, r) in &reports {
        require_laws(label, r, &MONAD_LAWS, &mut problems);
        let mut sampled = LawReport::new();
        sampled.outcomes = r.outcomes.iter().filter(|o| MONAD_LAWS.contains(&o.law.as_str())).cloned().collect();
        require_cases(label, &sampled, 200, &mut problems);
    }
    if !problems.is_empty() {
        return Err(problems);
    }
    collect(reports)
}

fn additivity() -> Verdict {
    let laws = [
        "T(0) has exactly one value",
        "bc after bc_inv",
        "bc_inv after bc",
        "bc natural",
        "bc right unitor",
        "bc swap",
        "bc associative",
        "bc after unit",
        "bc after multiply",
        "bc on a sum of values",
        "bc and strength",
    ];
    let s = Sampler::new(SEED);
    let reports = per_semiring!(additivity_laws_ms, &s, 200);
    let mut problems = Vec::new();
    for (label, r) in &reports {
        require_laws(label, r, &laws, &mut problems);
        let mut sampled = r.clone();
        sampled.outcomes.retain(|o| o.law != "T(0) has exactly one value");
        require_cases(label, &sampled, 200, &mut problems);
    }
    if !problems.is_empty() {
        return Err(problems);
    }
    collect(reports)
}

fn additivity_laws_ms<S: lawvere::Semiring>(s: &Sampler, cases: usize) -> LawReport {
    additivity_laws::<MultisetMonad<S>>(s, cases)
}

fn commutativity() -> Verdict {
    let mut reports = Vec::new();
    for tag in SemiringTag::ALL {
        reports.push((format!("M_{tag}"), suite(Suite::Commutativity, tag, None, 200)));
    }
    reports.push(("A(nat-mul)".into(), suite(Suite::Commutativity, SemiringTag::Nat, Some(MonoidTag::Mul(SemiringTag::Nat)), 200)));
    let words = suite(Suite::Commutativity, SemiringTag::Nat, Some(MonoidTag::Words), 200);
    let mut problems = Vec::new();
    if let Ok(w) = &words {
        let found = w.outcomes.iter().any(|o| o.expected_failure && o.counterexample.is_some());
        if !found {
            problems.push("A(free-words): no counterexample to commutativity".into());
        }
    }
    reports.push(("A(free-words)".into(), words));
    let reports = ok_all(reports)?;
    if !problems.is_empty() {
        return Err(problems);
    }
    collect(reports)
}

fn at_one() -> Verdict {
    let mut items = per_semiring!(at_one_iso_laws);
    items.push(("gaussian star".into(), Ok(at_one_star_laws::<GaussianRational>())));
    collect(ok_all(items)?)
}

fn module() -> Verdict {
    let s = Sampler::new(SEED);
    let reports = per_semiring!(module_laws_ms, &s, 200);
    let mut problems = Vec::new();
    for (label, r) in &reports {
        if r.outcomes.len() != 6 {
            problems.push(format!("{label}: expected six action laws, found {}", r.outcomes.len()));
        }
        require_cases(label, r, 200, &mut problems);
    }
    if !problems.is_empty() {
        return Err(problems);
    }
    collect(reports)
}

fn module_laws_ms<S: lawvere::Semiring>(s: &Sampler, cases: usize) -> LawReport {
    module_laws::<MultisetMonad<S>>(s, cases)
}

fn matcat() -> Verdict {
    let s = Sampler::new(SEED);
    let reports = per_semiring!(matcat_laws, &s, 100);
    let mut problems = Vec::new();
    for (label, r) in &reports {
        require_laws(label, r, &["compose matches the triple loop", "projections after coprojections", "tensor functorial", "tensor distributes over sums"], &mut problems);
        require_cases(label, r, 100, &mut problems);
    }
    if !problems.is_empty() {
        return Err(problems);
    }
    collect(reports)
}

fn dagger() -> Verdict {
    let r = dagger_laws::<GaussianRational>(&Sampler::new(SEED), 100);
    let mut problems = Vec::new();
    require_cases("gaussian", &r, 100, &mut problems);
    if !problems.is_empty() {
        return Err(problems);
    }
    collect([("gaussian".to_string(), r)])
}

fn kleisli() -> Verdict {
    let s = Sampler::new(SEED);
    let mut reports = per_semiring!(kleisli_iso_laws, &s, 100);
    reports.push(("gaussian dagger".into(), kleisli_dagger_laws::<GaussianRational>(&s, 100)));
    collect(reports)
}

fn freetheory() -> Verdict {
    let s = Sampler::new(SEED);
    let mut reports = per_semiring!(freetheory_laws, &s, 200);
    reports.push(("gaussian involution".into(), freetheory_involution_laws::<GaussianRational>(&s, 200)));
    collect(reports)
}

fn roundtrips() -> Verdict {
    let mut items = Vec::new();
    for adj in Adjunction::ALL {
        for tag in SemiringTag::ALL {
            items.push((format!("{adj} {tag}"), run_roundtrip(adj, tag, false, SEED, 100).map(|r| r.report)));
        }
        items.push((format!("{adj} gaussian involutive"), run_roundtrip(adj, SemiringTag::Gaussian, true, SEED, 100).map(|r| r.report)));
    }
    collect(ok_all(items)?)
}

fn homset() -> Verdict {
    let mut items = per_semiring!(homset_iso_laws);
    items.push(("gaussian star".into(), Ok(homset_star_laws::<GaussianRational>())));
    collect(ok_all(items)?)
}

fn run_binary(args: &[&str]) -> std::result::Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_lawvere")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

/// Minimum weight over every walk of at most `k` edges, by enumeration.
fn brute_force(n: usize, edges: &[(usize, usize, i64)], k: usize) -> Vec<Vec<Option<i64>>> {
    fn walk(at: usize, weight: i64, left: usize, edges: &[(usize, usize, i64)], best: &mut [Option<i64>]) {
        best[at] = Some(best[at].map_or(weight, |b| b.min(weight)));
        if left == 0 {
            return;
        }
        for &(src, dst, w) in edges {
            if src == at {
                walk(dst, weight + w, left - 1, edges, best);
            }
        }
    }
    (0..n)
        .map(|start| {
            let mut best = vec![None; n];
            walk(start, 0, k, edges, &mut best);
            best
        })
        .collect()
}

fn parse_output(text: &str) -> std::result::Result<Vec<Vec<Option<i64>>>, String> {
    let mut lines = text.lines();
    lines.next().filter(|h| h.starts_with("semiring tropical ")).ok_or("missing tropical header")?;
    lines
        .map(|l| {
            l.split_whitespace()
                .map(|t| if t == "inf" { Ok(None) } else { t.parse().map(Some).map_err(|e| format!("{t}: {e}")) })
                .collect()
        })
        .collect()
}

fn algebraic_path() -> Verdict {
    let dir = tempfile::tempdir().map_err(|e| vec![e.to_string()])?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut problems = Vec::new();
    for g in 0..20 {
        let n = rng.gen_range(1..=5);
        let k = rng.gen_range(0..=4);
        let edges: Vec<(usize, usize, i64)> = (0..rng.gen_range(0..=2 * n))
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(-2..=9)))
            .collect();
        let mut text = format!("{n}\n");
        for (a, b, w) in &edges {
            text.push_str(&format!("{a} {b} {w}\n"));
        }
        let path = dir.path().join(format!("g{g}.graph"));
        fs::write(&path, text).map_err(|e| vec![e.to_string()])?;
        let result = run_binary(&["shortest-path", "--graph", path.to_str().unwrap(), "--max-hops", &k.to_string()])
            .and_then(|out| parse_output(&out));
        match result {
            Ok(got) if got == brute_force(n, &edges, k) => {}
            Ok(got) => problems.push(format!("graph {g} (n={n}, k={k}, edges {edges:?}): got {got:?}")),
            Err(e) => problems.push(format!("graph {g}: {e}")),
        }
    }
    let fixtures = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");
    for (graph, k, golden) in [("three_cycle.graph", "2", "three_cycle.k2.mat"), ("five_nodes.graph", "3", "five_nodes.k3.mat")] {
        let want = fs::read(format!("{fixtures}/{golden}")).map_err(|e| vec![e.to_string()])?;
        match run_binary(&["shortest-path", "--graph", &format!("{fixtures}/{graph}"), "--max-hops", k]) {
            Ok(got) if got.as_bytes() == want.as_slice() => {}
            Ok(got) => problems.push(format!("{graph}: output differs from {golden}:\n{got}")),
            Err(e) => problems.push(e),
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems)
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("monad laws for M_S and A(M)", monad_law_suite),
        ("additivity and the bc diagrams", additivity),
        ("commutativity, with the free-word counterexample", commutativity),
        ("E(M_S) is isomorphic to S", at_one),
        ("module laws", module),
        ("Mat(S) category, biproduct and tensor laws", matcat),
        ("dagger on Mat(Q[i])", dagger),
        ("theta and xi are inverse and structure preserving", kleisli),
        ("free theory normal forms", freetheory),
        ("adjunction round trips", roundtrips),
        ("bounded-hop shortest paths", algebraic_path),
        ("H(Mat(S)) is isomorphic to S", homset),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("PASS criterion {:>2}: {name} ({:.1?})", i + 1, t.elapsed()),
            Err(problems) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} ({:.1?})", i + 1, t.elapsed());
                for p in problems.iter().take(10) {
                    println!("    {p}");
                }
            }
        }
    }
    println!("{} of {} criteria passed in {:.1?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
