//! Exhaustive verification suites, one pass/fail line per size.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::bijections::{count_exact_occurrences, prop9_forward, thomas_map, thomas_pairs, tunnel_cell, MAX_OCCURRENCE_COUNT_N};
use super::fixed_points::fixed_point_report;
use super::formula::{formula, Formula};
use super::sweep::{filter_permutations, fold_permutations, guard, Jobs, MAX_SWEEP_N};
use super::table::distribution;
use crate::diagram::{build_diagram, permutation_from_diagram, rank0_shape, stat_a_via_diagram};
use crate::dyck::{boundary_path, enumerate_paths, path_features, tunnels, PathFeatures, MAX_ENUMERATION_SEMILENGTH};
use crate::error::Result;
use crate::involution::{decompose, phi, phi_on_avoider, reconstruct, simion_schmidt};
use crate::perm::{avoids, stat, tail_pairs, PatternClass, PatternKind, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Involution,
    Equidistribution,
    Prop1,
    Prop2Roundtrip,
    Prop9,
    DyckIdentities,
    Noonan,
    Bona,
    Thomas,
    SimionSchmidt,
    All,
}

impl Suite {
    /// Run order of `all`.
    pub const ORDER: [Suite; 10] = [
        Suite::Involution,
        Suite::Equidistribution,
        Suite::Prop1,
        Suite::Prop2Roundtrip,
        Suite::Prop9,
        Suite::DyckIdentities,
        Suite::Noonan,
        Suite::Bona,
        Suite::Thomas,
        Suite::SimionSchmidt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Involution => "involution",
            Suite::Equidistribution => "equidistribution",
            Suite::Prop1 => "prop1",
            Suite::Prop2Roundtrip => "prop2-roundtrip",
            Suite::Prop9 => "prop9",
            Suite::DyckIdentities => "dyck-identities",
            Suite::Noonan => "noonan",
            Suite::Bona => "bona",
            Suite::Thomas => "thomas",
            Suite::SimionSchmidt => "simion-schmidt",
            Suite::All => "all",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            Suite::Involution | Suite::Equidistribution | Suite::Prop1 => 2,
            Suite::Prop9 => 3,
            _ => 1,
        }
    }

    pub fn max_n(self) -> usize {
        match self {
            Suite::DyckIdentities => MAX_ENUMERATION_SEMILENGTH,
            Suite::Noonan | Suite::Bona => MAX_OCCURRENCE_COUNT_N,
            _ => MAX_SWEEP_N,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ORDER
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub n: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub lines: Vec<CheckLine>,
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn summary(&self) -> String {
        match (self.lines.first(), self.lines.last()) {
            (Some(lo), Some(hi)) => format!(
                "{} n={}..{} {}",
                self.suite,
                lo.n,
                hi.n,
                verdict(self.passed())
            ),
            _ => format!("{} (no sizes in range) PASS", self.suite),
        }
    }

    /// Per-size lines followed by the summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&format!("{} n={} {}  {}\n", self.suite, l.n, verdict(l.passed), l.detail));
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }
}

/// Runs `suite` for every size from its minimum up to `n_max`.
///
/// A single suite rejects `n_max` above its limit; `all` runs each suite up
/// to `min(n_max, limit)`.
pub fn run_suite(suite: Suite, n_max: usize, jobs: Jobs) -> Result<Vec<SuiteReport>> {
    if suite == Suite::All {
        return Suite::ORDER
            .into_iter()
            .map(|s| run_single(s, n_max.min(s.max_n()), jobs))
            .collect();
    }
    guard(suite.name(), n_max, suite.max_n())?;
    Ok(vec![run_single(suite, n_max, jobs)?])
}

fn run_single(suite: Suite, n_max: usize, jobs: Jobs) -> Result<SuiteReport> {
    let lines = (suite.min_n()..=n_max)
        .map(|n| check(suite, n, jobs))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport { suite, lines })
}

pub fn check(suite: Suite, n: usize, jobs: Jobs) -> Result<CheckLine> {
    match suite {
        Suite::Involution => check_involution(n, jobs),
        Suite::Equidistribution => check_equidistribution(n, jobs),
        Suite::Prop1 => Ok(check_prop1(n, jobs)),
        Suite::Prop2Roundtrip => Ok(check_prop2(n, jobs)),
        Suite::Prop9 => check_prop9(n, jobs),
        Suite::DyckIdentities => check_dyck(n, jobs),
        Suite::Noonan => check_noonan(n, jobs),
        Suite::Bona => check_bona(n, jobs),
        Suite::Thomas => Ok(check_thomas(n, jobs)),
        Suite::SimionSchmidt => Ok(check_simion_schmidt(n, jobs)),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

fn line(n: usize, passed: bool, detail: String) -> CheckLine {
    CheckLine { n, passed, detail }
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn check_involution(n: usize, jobs: Jobs) -> Result<CheckLine> {
    #[derive(Default)]
    struct Acc {
        calls: u64,
        failures: u64,
    }
    let acc = fold_permutations(
        n,
        jobs,
        Acc::default,
        |acc, pi| {
            for m in 2..=n {
                acc.calls += 1;
                let a = PatternClass::a(m).unwrap();
                let b = PatternClass::b(m).unwrap();
                let ok = match phi(pi, m) {
                    Ok(sigma) => {
                        let back = phi(&sigma, m).ok();
                        let (a_pi, b_pi) = (stat(pi, a), stat(pi, b));
                        back.as_ref() == Some(pi)
                            && a_pi == stat(&sigma, b)
                            && b_pi == stat(&sigma, a)
                            && !(a_pi == 0 && b_pi == 0 && sigma != *pi)
                            && (a_pi != 0 || phi_on_avoider(pi, m).ok() == Some(sigma.clone()))
                    }
                    Err(_) => false,
                };
                acc.failures += (!ok) as u64;
            }
        },
        |mut x, y| {
            x.calls += y.calls;
            x.failures += y.failures;
            x
        },
    );
    let mut fixed = Vec::new();
    for m in 2..=n {
        let r = fixed_point_report(n, m, jobs)?;
        fixed.push(format!(
            "m={m}: {}/{}{}",
            r.fixed,
            r.avoiding_both,
            if r.fixed_but_containing > 0 { " (extra fixed points)" } else { "" }
        ));
    }
    Ok(line(
        n,
        acc.failures == 0,
        format!(
            "{} (π, m) pairs, {} failures; fixed/avoiding-both {}",
            acc.calls,
            acc.failures,
            fixed.join(", ")
        ),
    ))
}

fn check_equidistribution(n: usize, jobs: Jobs) -> Result<CheckLine> {
    let mut ok = true;
    let mut avoiders = Vec::new();
    for m in 2..=n {
        let a = distribution(n, m, PatternKind::A, jobs)?.counts(n, m, PatternKind::A);
        let b = distribution(n, m, PatternKind::B, jobs)?.counts(n, m, PatternKind::B);
        ok &= a == b;
        let a0 = a.get(&0).copied().unwrap_or(0);
        let b0 = b.get(&0).copied().unwrap_or(0);
        ok &= a0 == b0;
        if m == 3 {
            ok &= big(a0) == formula(Formula::Catalan, n as u64);
        }
        avoiders.push(format!("{a0}"));
    }
    Ok(line(
        n,
        ok,
        format!("a_m and b_m tables agree for m=2..{n}; avoiders {}", avoiders.join(" ")),
    ))
}

fn check_prop1(n: usize, jobs: Jobs) -> CheckLine {
    let failures = fold_permutations(
        n,
        jobs,
        || 0u64,
        |acc, pi| {
            let d = build_diagram(pi);
            let mut ok = d.squares().len() == pi.inversions()
                && d.squares().iter().all(|s| s.rank + 2 <= n);
            let shape = rank0_shape(pi);
            ok &= shape.windows(2).all(|w| w[0] >= w[1]);
            for m in 2..=n {
                let a = stat(pi, PatternClass::a(m).unwrap());
                ok &= stat_a_via_diagram(&d, m) == a;
                let low = d.squares().iter().all(|s| s.rank + 3 <= m);
                ok &= (a == 0) == low;
            }
            *acc += (!ok) as u64;
        },
        |a, b| a + b,
    );
    line(
        n,
        failures == 0,
        format!("diagram rank count = a_m for m=2..{n}; {failures} failures"),
    )
}

fn check_prop2(n: usize, jobs: Jobs) -> CheckLine {
    let failures = fold_permutations(
        n,
        jobs,
        || 0u64,
        |acc, pi| {
            let mut ok = permutation_from_diagram(n, &build_diagram(pi).cells()).ok().as_ref() == Some(pi);
            for m in 2..=n + 2 {
                ok &= decompose(pi, m)
                    .and_then(|data| reconstruct(&data))
                    .ok()
                    .as_ref()
                    == Some(pi);
            }
            *acc += (!ok) as u64;
        },
        |a, b| a + b,
    );
    line(
        n,
        failures == 0,
        format!("recovered every π for m=2..{}; {failures} failures", n + 2),
    )
}

fn check_prop9(n: usize, jobs: Jobs) -> Result<CheckLine> {
    let expected = formula(Formula::Prop9, n as u64);
    let a3 = PatternClass::a(3)?;
    let counted = distribution(n, 3, PatternKind::A, jobs)?.count_at(n, 3, PatternKind::A, 1);

    let avoiders = filter_permutations(n, jobs, |pi| stat(pi, a3) == 0);
    let mut images = Vec::new();
    let mut ok = true;
    for pi in &avoiders {
        let path = boundary_path(pi)?;
        for t in tunnels(&path).into_iter().filter(|t| t.is_qualifying()) {
            let sigma = prop9_forward(pi, &t)?;
            let (row, col) = tunnel_cell(&path, &t);
            let r = (t.length() - 2) / 2;
            let positive: Vec<_> = build_diagram(&sigma)
                .squares()
                .iter()
                .filter(|s| s.rank > 0)
                .copied()
                .collect();
            ok &= positive.len() == 1
                && (positive[0].row, positive[0].col, positive[0].rank) == (row, col, r);
            images.push(sigma);
        }
    }
    let produced = images.len();
    images.sort();
    images.dedup();
    let injective = images.len() == produced;
    let targets = filter_permutations(n, jobs, |pi| stat(pi, a3) == 1);
    ok &= injective && images == targets && big(counted) == expected;
    Ok(line(
        n,
        ok,
        format!(
            "a_3=1 count {counted}, C(2n-1,n-3) = {expected}, tunnel insertions {produced}{}",
            if injective { "" } else { " (not injective)" }
        ),
    ))
}

fn check_dyck(n: usize, jobs: Jobs) -> Result<CheckLine> {
    let mut sum = PathFeatures::default();
    let mut total_tunnels = 0u64;
    let mut paths = 0u64;
    let mut partition_ok = true;
    for d in enumerate_paths(n)? {
        let ts = tunnels(&d);
        let f = path_features(&d);
        let zero = ts.iter().filter(|t| t.height == 0).count();
        let high = ts.iter().filter(|t| t.height >= 1 && t.length() == 2).count();
        partition_ok &= ts.len() == n
            && f.returns == zero
            && f.high_peaks == high
            && f.qualifying_tunnels == n - f.returns - f.high_peaks;
        total_tunnels += ts.len() as u64;
        paths += 1;
        sum += f;
    }
    let nn = n as u64;
    let mut ok = partition_ok
        && big(paths) == formula(Formula::Catalan, nn)
        && big(total_tunnels) == formula(Formula::TunnelsTotal, nn)
        && big(sum.returns as u64) == formula(Formula::ReturnsTotal, nn)
        && big(sum.high_peaks as u64) == formula(Formula::HighPeaksTotal, nn)
        && big(sum.qualifying_tunnels as u64) == formula(Formula::Prop9, nn)
        && big(sum.valleys_above_zero as u64) == formula(Formula::Prop9, nn);

    let mut detail = format!(
        "{paths} paths: tunnels {total_tunnels}, returns {}, high peaks {}, qualifying {}, valleys>0 {}",
        sum.returns, sum.high_peaks, sum.qualifying_tunnels, sum.valleys_above_zero
    );
    if n <= MAX_SWEEP_N {
        let p132 = Permutation::new(vec![1, 3, 2])?;
        let avoiders = filter_permutations(n, jobs, |pi| avoids(pi, &p132));
        let boundaries: BTreeSet<_> = avoiders
            .iter()
            .map(|pi| boundary_path(pi).map(|d| d.to_string()))
            .collect::<Result<_>>()?;
        let bijective = boundaries.len() == avoiders.len() && big(avoiders.len() as u64) == formula(Formula::Catalan, nn);
        ok &= bijective;
        detail.push_str(&format!("; boundary paths of S_n(132) distinct: {bijective}"));
    }
    Ok(line(n, ok, detail))
}

fn check_noonan(n: usize, jobs: Jobs) -> Result<CheckLine> {
    let got = count_exact_occurrences(n, &Permutation::new(vec![1, 2, 3])?, 1, jobs)?;
    let expected = formula(Formula::Noonan, n as u64);
    Ok(line(
        n,
        big(got) == expected,
        format!("exactly one 123: {got}, 3/n C(2n,n-3) = {expected}"),
    ))
}

fn check_bona(n: usize, jobs: Jobs) -> Result<CheckLine> {
    let got = count_exact_occurrences(n, &Permutation::new(vec![1, 3, 2])?, 1, jobs)?;
    let expected = formula(Formula::Bona, n as u64);
    let by_diagram = filter_permutations(n, jobs, |pi| {
        let d = build_diagram(pi);
        d.squares().iter().filter(|s| s.rank == 1).count() == 1
            && d.squares().iter().all(|s| s.rank <= 1)
    })
    .len() as u64;
    Ok(line(
        n,
        big(got) == expected && got == by_diagram,
        format!("exactly one 132: {got}, C(2n-3,n-3) = {expected}, one rank-1 square: {by_diagram}"),
    ))
}

fn check_thomas(n: usize, jobs: Jobs) -> CheckLine {
    let b3 = PatternClass::b(3).unwrap();
    let p123 = Permutation::new(vec![1, 2, 3]).unwrap();
    let avoiders = filter_permutations(n, jobs, |pi| avoids(pi, &p123));
    let mut images = Vec::new();
    let mut ok = true;
    for sigma in &avoiders {
        for p in thomas_pairs(sigma).expect("123-avoider") {
            let pi = thomas_map(sigma, p).expect("admissible pair");
            ok &= tail_pairs(&pi, b3) == vec![p];
            images.push(pi);
        }
    }
    let produced = images.len();
    images.sort();
    images.dedup();
    let injective = images.len() == produced;
    let targets = filter_permutations(n, jobs, |pi| stat(pi, b3) == 1);
    let expected = formula(Formula::Prop9, n as u64);
    ok &= injective && images == targets && big(produced as u64) == expected;
    line(
        n,
        ok,
        format!(
            "{produced} swaps onto {} permutations with b_3=1, C(2n-1,n-3) = {expected}",
            targets.len()
        ),
    )
}

fn check_simion_schmidt(n: usize, jobs: Jobs) -> CheckLine {
    let p132 = Permutation::new(vec![1, 3, 2]).unwrap();
    let p123 = Permutation::new(vec![1, 2, 3]).unwrap();
    let avoiders = filter_permutations(n, jobs, |pi| avoids(pi, &p132));
    let count123 = filter_permutations(n, jobs, |pi| avoids(pi, &p123)).len();
    let mut ok = true;
    let mut images = BTreeSet::new();
    for pi in &avoiders {
        let ss = simion_schmidt(pi).expect("132-avoider");
        ok &= phi(pi, 3).ok().as_ref() == Some(&ss) && avoids(&ss, &p123);
        images.insert(ss);
    }
    let catalan = formula(Formula::Catalan, n as u64);
    ok &= images.len() == avoiders.len()
        && big(avoiders.len() as u64) == catalan
        && count123 == avoiders.len();
    line(
        n,
        ok,
        format!(
            "|S_n(132)| = {}, |S_n(123)| = {count123}, C_n = {catalan}",
            avoiders.len()
        ),
    )
}
