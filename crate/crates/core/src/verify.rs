//! Verification suites: every identity the crate implements, checked over a
//! range of orders and collected into a report.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::{One, Pow, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{binom, factorial, Integer, MultiPoly, OmegaPoly, Rational, Var, NVARS};
use crate::asm::{self, Asm};
use crate::dpp;
use crate::error::{Error, Result};
use crate::formulas;
use crate::matrices::{self, random_rational};
use crate::oscillating;
use crate::paths;
use crate::six_vertex::{self, IkPoint, SixVertexConfig};

/// The displayed generating function of order 3.
pub const Z3: &str = "1+x^3z^2+x+x^2z^2+xz+x^2z+xyz";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem1,
    Counting,
    Table,
    SixVertex,
    Ik,
    Lgv,
    Omega,
    Aux,
    Oscillating,
    M0,
    Symmetry,
    Parity,
    Boundary,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Theorem1,
        Suite::Counting,
        Suite::Table,
        Suite::SixVertex,
        Suite::Ik,
        Suite::Lgv,
        Suite::Omega,
        Suite::Aux,
        Suite::Oscillating,
        Suite::M0,
        Suite::Symmetry,
        Suite::Parity,
        Suite::Boundary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Counting => "counting",
            Suite::Table => "table",
            Suite::SixVertex => "sixvertex",
            Suite::Ik => "ik",
            Suite::Lgv => "lgv",
            Suite::Omega => "omega",
            Suite::Aux => "aux",
            Suite::Oscillating => "oscillating",
            Suite::M0 => "m0",
            Suite::Symmetry => "symmetry",
            Suite::Parity => "parity",
            Suite::Boundary => "boundary",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Theorem1 => "ASM and DPP generating functions equal the determinant",
            Suite::Counting => "straight and refined counts match the product formulas",
            Suite::Table => "per-cell (p, m, k) counts agree",
            Suite::SixVertex => "six-vertex bijection and vertex-count identities",
            Suite::Ik => "Izergin-Korepin determinant and its specializations",
            Suite::Lgv => "path sums, nonintersecting families and their determinant",
            Suite::Omega => "omega relation between the ASM and DPP matrices",
            Suite::Aux => "auxiliary matrix relations and the w-refinement",
            Suite::Oscillating => "oscillating tableau counts",
            Suite::M0 => "the m = 0 bijection",
            Suite::Symmetry => "vertical reflection and its statistics",
            Suite::Parity => "sum-of-parts parity, isolated ones and the q-product",
            Suite::Boundary => "Z(n, x, y, 0) = Z(n - 1, x, y, 1)",
        }
    }

    /// Largest order the suite visits, whatever the requested maximum.
    pub fn ceiling(self) -> usize {
        match self {
            Suite::SixVertex | Suite::Aux | Suite::Parity | Suite::Symmetry => 5,
            Suite::Ik => 4,
            _ => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub params: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = (Suite, &Check)> {
        self.suites.iter().flat_map(|s| s.checks.iter().filter(|c| !c.passed).map(move |c| (s.suite, c)))
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            let passed = s.checks.iter().filter(|c| c.passed).count();
            let status = if s.passed() { "PASS" } else { "FAIL" };
            write!(f, "{status} {} ({passed}/{} checks)", s.suite, s.checks.len())?;
            if let Some(ms) = s.elapsed_ms {
                write!(f, " in {ms} ms")?;
            }
            writeln!(f)?;
            for c in s.checks.iter().filter(|c| !c.passed) {
                write!(f, "  failed: {} [{}]", c.name, c.params)?;
                if let Some(d) = &c.detail {
                    write!(f, ": {d}")?;
                }
                writeln!(f)?;
            }
        }
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} overall (max n = {}, seed = {})", self.max_n, self.seed)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub seed: u64,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: 6, seed: 42, timings: false }
    }
}

type Job = Box<dyn Fn() -> Result<()> + Send + Sync>;

struct Plan {
    jobs: Vec<(String, String, Job)>,
}

impl Plan {
    fn new() -> Self {
        Plan { jobs: Vec::new() }
    }

    fn add(&mut self, name: &str, params: impl Into<String>, f: impl Fn() -> Result<()> + Send + Sync + 'static) {
        self.jobs.push((name.to_string(), params.into(), Box::new(f)));
    }

    fn run(self) -> Vec<Check> {
        self.jobs
            .into_par_iter()
            .map(|(name, params, job)| {
                let r = job();
                Check { name, params, passed: r.is_ok(), detail: r.err().map(|e| e.to_string()) }
            })
            .collect()
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invariant(msg()))
    }
}

fn eq<T: PartialEq + fmt::Display>(what: &str, a: &T, b: &T) -> Result<()> {
    ensure(a == b, || format!("{what}: {a} != {b}"))
}

fn rng_for(seed: u64, n: usize, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt.rotate_left(32))
}

fn n_param(n: usize) -> String {
    format!("n={n}")
}

pub fn run(suites: &[Suite], opts: &VerifyOptions) -> VerifyReport {
    let suites = suites
        .iter()
        .map(|&s| {
            let start = Instant::now();
            let checks = run_suite(s, opts);
            let elapsed_ms = opts.timings.then(|| start.elapsed().as_millis() as u64);
            SuiteReport { suite: s, checks, elapsed_ms }
        })
        .collect();
    VerifyReport { max_n: opts.max_n, seed: opts.seed, suites }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<Check> {
    let cap = opts.max_n.min(suite.ceiling());
    let seed = opts.seed;
    let mut plan = Plan::new();
    match suite {
        Suite::Theorem1 => theorem1(&mut plan, cap),
        Suite::Counting => counting(&mut plan, cap),
        Suite::Table => table(&mut plan, cap),
        Suite::SixVertex => sixvertex(&mut plan, cap),
        Suite::Ik => ik(&mut plan, cap, seed),
        Suite::Lgv => lgv(&mut plan, cap),
        Suite::Omega => omega(&mut plan, cap, seed),
        Suite::Aux => aux(&mut plan, cap),
        Suite::Oscillating => oscillating_suite(&mut plan, cap),
        Suite::M0 => m0(&mut plan, cap),
        Suite::Symmetry => symmetry(&mut plan, cap, opts.max_n),
        Suite::Parity => parity(&mut plan, cap, opts.max_n),
        Suite::Boundary => boundary(&mut plan, cap),
    }
    plan.run()
}

fn theorem1(plan: &mut Plan, cap: usize) {
    for n in 1..=cap {
        plan.add("z_asm == z_dpp == det", n_param(n), move || {
            let a = asm::z_asm_brute(n)?;
            let d = dpp::z_dpp_brute(n)?;
            let m = matrices::genfunc_det(n)?;
            eq("ASM vs DPP", &a, &d)?;
            eq("DPP vs determinant", &d, &m)
        });
    }
    if cap >= 3 {
        plan.add("order 3 closed form", n_param(3), || {
            let expect = Z3.parse::<MultiPoly>()?.to_string();
            eq("determinant text", &matrices::genfunc_det(3)?.to_string(), &expect)
        });
    }
}

fn rho_counts(h: &HashMap<asm::AsmStats, u64>, n: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    for (s, c) in h {
        v[s.rho as usize] += c;
    }
    v
}

fn counting(plan: &mut Plan, cap: usize) {
    for n in 1..=cap {
        plan.add("straight counts", n_param(n), move || {
            let expect = formulas::asm_total(n)?;
            let mut a = 0u64;
            asm::for_each_asm(n, |_| a += 1)?;
            let d = dpp::enumerate_dpps(n)?.len() as u64;
            eq("|ASM|", &Integer::from(a), &expect)?;
            eq("|DPP|", &Integer::from(d), &expect)
        });
        plan.add("refined counts", n_param(n), move || {
            let asm_k = rho_counts(&asm::stats_histogram(n)?, n);
            let mut dpp_k = vec![0u64; n];
            for d in dpp::enumerate_dpps(n)? {
                dpp_k[d.stats(n)?.rho as usize] += 1;
            }
            for k in 0..n {
                let expect = formulas::refined_total(n, k)?;
                eq(&format!("ASM k={k}"), &Integer::from(asm_k[k]), &expect)?;
                eq(&format!("DPP k={k}"), &Integer::from(dpp_k[k]), &expect)?;
            }
            Ok(())
        });
    }
}

fn table(plan: &mut Plan, cap: usize) {
    for n in 1..=cap {
        plan.add("per-cell equality", n_param(n), move || {
            let t = formulas::stat_table(n)?;
            if let Some((cell, counts)) = t.iter().find(|(_, (a, d))| a != d) {
                return Err(Error::Invariant(format!("cell {cell:?}: ASM {} vs DPP {}", counts.0, counts.1)));
            }
            ensure(formulas::special_families_hold(n, &t), || "special family counts".into())
        });
    }
    if cap >= 3 {
        plan.add("order 3 cells are singletons", n_param(3), || {
            let t = formulas::stat_table(3)?;
            ensure(t.len() == 7 && t.values().all(|&c| c == (1, 1)), || format!("{t:?}"))
        });
    }
    if cap >= 4 {
        plan.add("order 4 has a repeated cell", n_param(4), || {
            let t = formulas::stat_table(4)?;
            ensure(t.values().any(|&(a, _)| a >= 2), || "every cell has one object".into())
        });
    }
    if cap >= 5 {
        plan.add("cell (3, 1, 2)", n_param(5), || {
            let t = formulas::stat_table(5)?;
            let c = t.get(&(3, 1, 2)).copied().unwrap_or((0, 0));
            ensure(c == (10, 10), || format!("counts {c:?}"))
        });
    }
}

fn sixvertex(plan: &mut Plan, cap: usize) {
    for n in 1..=cap {
        plan.add("bijection and vertex counts", n_param(n), move || {
            let mut res = Ok(());
            asm::for_each_asm(n, |a| {
                if res.is_err() {
                    return;
                }
                res = (|| {
                    let c = six_vertex::asm_to_sixvertex(a);
                    eq("rebuilt configuration", &SixVertexConfig::new(c.to_grid())?, &c)?;
                    ensure(six_vertex::sixvertex_to_asm(&c) == *a, || format!("roundtrip of {a}"))?;
                    c.counts().check(a)
                })();
            })?;
            res
        });
    }
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> IkPoint {
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let r = random_rational(rng, 9);
        if !r.is_zero() {
            return r;
        }
    };
    IkPoint {
        q: nonzero(rng),
        s: (0..n).map(|_| nonzero(rng)).collect(),
        t: (0..n).map(|_| nonzero(rng)).collect(),
    }
}

const IK_TRIALS: usize = 20;

fn ik(plan: &mut Plan, cap: usize, seed: u64) {
    for n in 1..=cap {
        plan.add("determinant vs explicit sum", format!("n={n} points={IK_TRIALS}"), move || {
            let mut rng = rng_for(seed, n, 1);
            let mut done = 0;
            while done < IK_TRIALS {
                let pt = random_point(&mut rng, n);
                let det = match six_vertex::ik_determinant_rat(&pt) {
                    Err(Error::Degenerate(_)) => continue,
                    r => r?,
                };
                eq(&format!("at {pt:?}"), &det, &six_vertex::partition_function_explicit(&pt)?)?;
                done += 1;
            }
            Ok(())
        });
        plan.add("homogeneous and refined specializations", n_param(n), move || {
            let mut rng = rng_for(seed, n, 2);
            let z = asm::z_asm_brute(n)?;
            let mut done = 0;
            while done < 5 {
                let (q, r0, s1) = (random_rational(&mut rng, 9), random_rational(&mut rng, 9), random_rational(&mut rng, 9));
                if q.is_zero() || r0.is_zero() || s1.is_zero() {
                    continue;
                }
                let w = six_vertex::homogeneous_weights(&q, &r0);
                if w.a.is_zero() || w.b.is_zero() {
                    continue;
                }
                let one = Rational::one();
                let zero = Rational::zero();
                let x = (&w.a / &w.b) * (&w.a / &w.b);
                let y = (&w.c / &w.b) * (&w.c / &w.b);
                let hom = IkPoint::homogeneous(n, q.clone(), r0.clone());
                let expect = Pow::pow(&w.b, (n * (n - 1)) as u32)
                    * Pow::pow(&w.c, n as u32)
                    * z.eval(&[x.clone(), y.clone(), one.clone(), zero.clone(), zero.clone()])?;
                eq("homogeneous", &six_vertex::partition_function_explicit(&hom)?, &expect)?;

                let refd = IkPoint::refined(n, q, r0, s1);
                let wt = refd.weights(0, 0);
                if wt.b.is_zero() {
                    continue;
                }
                let zr = &wt.a * &w.b / (&w.a * &wt.b);
                let expect = Pow::pow(&w.b, ((n - 1) * (n - 1)) as u32)
                    * Pow::pow(&wt.b, (n - 1) as u32)
                    * Pow::pow(&w.c, (n - 1) as u32)
                    * &wt.c
                    * z.eval(&[x, y, zr, zero.clone(), zero])?;
                eq("refined", &six_vertex::partition_function_explicit(&refd)?, &expect)?;
                done += 1;
            }
            Ok(())
        });
    }
}

fn lgv(plan: &mut Plan, cap: usize) {
    for n in 1..=cap {
        for refined in [false, true] {
            let params = format!("n={n} refined={refined}");
            if n <= 5 {
                plan.add("closed-form path sums", params.clone(), move || {
                    for i in 0..n {
                        for j in 0..n {
                            let closed = paths::path_weight_sum(i, j, n, refined)?;
                            let direct = paths::path_weight_sum_direct(i, j, n, refined)?;
                            eq(&format!("({i}, {j})"), &closed, &direct)?;
                        }
                    }
                    Ok(())
                });
                plan.add("family sum equals determinant", params.clone(), move || {
                    paths::lgv_nilp_sum(n, refined)?;
                    let profiles = paths::lgv_profile_sum(n, refined)?;
                    let m = paths::path_sum_matrix(n, refined)?.try_sub(&matrices::shift(n))?;
                    eq("profile sum", &profiles, &m.det()?)
                });
            }
            plan.add("determinant equals DPP sum", params, move || {
                let mut z = dpp::z_dpp_brute(n)?;
                if !refined {
                    z = z.substitute(Var::Z.index(), &Integer::one());
                }
                eq("det", &matrices::m_bar(n, refined)?.det()?, &z)
            });
        }
    }
}

fn omega(plan: &mut Plan, cap: usize, seed: u64) {
    for n in 1..=cap {
        for refined in [false, true] {
            plan.add("omega relation", format!("n={n} refined={refined}"), move || {
                ensure(matrices::check_omega_relation(n, refined)?, || "relation fails".into())
            });
        }
        plan.add("perturbed relation fails", n_param(n), move || {
            let a = matrices::m_asm(n, true)?;
            let mut d = matrices::m_dpp(n, true)?;
            let bumped = d.get(n - 1, 0).try_add(&OmegaPoly::constant(MultiPoly::one(NVARS)))?;
            d.set(n - 1, 0, bumped)?;
            ensure(!matrices::check_omega_relation_with(&a, &d)?, || "perturbation went unnoticed".into())
        });
        plan.add("DPP determinant factor", n_param(n), move || {
            ensure(matrices::check_dpp_factor(n)?, || "det M_DPP differs".into())
        });
        if n <= 5 {
            plan.add("rational points on the curve", format!("n={n} trials=20"), move || {
                matrices::check_asm_det_rational(n, 20, &mut rng_for(seed, n, 3)).map(|_| ())
            });
        }
    }
}

fn aux(plan: &mut Plan, cap: usize) {
    for n in 1..=cap {
        for refined in [false, true] {
            plan.add("auxiliary relations", format!("n={n} refined={refined}"), move || {
                let (first, second) = matrices::check_aux_relations(n, refined)?;
                ensure(first, || "(I - S) M' = M̄ (I - Sᵗ) fails".into())?;
                ensure(second, || "B M'' = M̄ fails".into())?;
                let bar = matrices::m_bar(n, refined)?.det()?;
                eq("det M'", &matrices::m_prime(n, refined)?.det()?, &bar)?;
                eq("det M''", &matrices::m_double_prime(n, refined)?.det()?, &bar)
            });
        }
        plan.add("row-count refinement", n_param(n), move || {
            eq("det M̄_w", &matrices::genfunc_det_w(n)?, &dpp::z_dpp_brute_w(n)?)
        });
    }
}

fn double_factorial(p: u32) -> u64 {
    (1..=p as u64).map(|k| 2 * k - 1).product()
}

fn oscillating_suite(plan: &mut Plan, cap: usize) {
    for p in 0..=4u32 {
        plan.add("tableau counts and ascents", format!("p={p}"), move || {
            let asm_side = oscillating::asm_side_tableaux(p);
            let dpp_side = oscillating::dpp_side_tableaux(p);
            let df = double_factorial(p) as usize;
            ensure(asm_side.len() == df, || format!("|OT(∅, {})| = {}", 2 * p, asm_side.len()))?;
            ensure(dpp_side.len() == df, || format!("DPP side has {} tableaux", dpp_side.len()))?;
            let (a, d) = (oscillating::ascent_distribution(&asm_side), oscillating::ascent_distribution(&dpp_side));
            ensure(a == d, || format!("ascent distributions {a:?} vs {d:?}"))
        });
    }
    for n in 1..=cap {
        plan.add("binomial sums match nu counts", n_param(n), move || {
            let mut asm_nu: HashMap<u32, u64> = HashMap::new();
            for (s, c) in asm::stats_histogram(n)? {
                *asm_nu.entry(s.nu).or_default() += c;
            }
            let mut dpp_nu: HashMap<u32, u64> = HashMap::new();
            for d in dpp::enumerate_dpps(n)? {
                *dpp_nu.entry(d.stats(n)?.nu).or_default() += 1;
            }
            for p in 0..=4u32 {
                let (a, d) = oscillating::osc_counts(n, p);
                eq(&format!("ASM p={p}"), &a, &Integer::from(asm_nu.get(&p).copied().unwrap_or(0)))?;
                eq(&format!("DPP p={p}"), &d, &Integer::from(dpp_nu.get(&p).copied().unwrap_or(0)))?;
            }
            let expect = binom(n as i64, 4) + binom(n as i64 + 1, 4) * 2;
            let (a, d) = oscillating::osc_counts(n, 2);
            eq("p=2 closed form (ASM)", &a, &expect)?;
            eq("p=2 closed form (DPP)", &d, &expect)
        });
    }
}

fn m0(plan: &mut Plan, cap: usize) {
    for n in 1..=cap {
        plan.add("m = 0 bijection", n_param(n), move || {
            let x = Var::X.index();
            let z = Var::Z.index();
            let mut sum = MultiPoly::zero(NVARS);
            for a in asm::enumerate_asms(n)?.into_iter().filter(Asm::is_permutation) {
                let d = formulas::m0_asm_to_dpp(&a)?;
                let (sa, sd) = (a.stats(), d.stats(n)?);
                ensure((sa.nu, sa.mu, sa.rho) == (sd.nu, sd.mu, sd.rho), || format!("{a} -> {d}"))?;
                ensure(formulas::m0_dpp_to_asm(&d, n)? == a, || format!("{a} -> {d} does not return"))?;
                let mut e = vec![0; NVARS];
                e[x] = sa.nu;
                e[z] = sa.rho;
                sum = &sum + &MultiPoly::monomial(e, 1);
            }
            let mut seen = 0;
            for d in dpp::enumerate_dpps(n)? {
                if d.stats(n)?.mu == 0 {
                    seen += 1;
                    let back = formulas::m0_asm_to_dpp(&formulas::m0_dpp_to_asm(&d, n)?)?;
                    ensure(back == d, || format!("{d} -> {back}"))?;
                }
            }
            eq("μ = 0 DPPs", &Integer::from(seen), &factorial(n as u64))?;
            eq("Σ x^ν z^ρ", &sum, &formulas::z_mu_zero(n)?)
        });
    }
}

fn reflected_triple(n: usize, nu: u32, mu: u32, rho: u32) -> (u32, u32, u32) {
    ((n * (n - 1) / 2) as u32 - nu - mu, mu, n as u32 - 1 - rho)
}

fn symmetry(plan: &mut Plan, cap: usize, max_n: usize) {
    for n in 1..=cap {
        plan.add("reflection and statistics", n_param(n), move || {
            let mut res = Ok(());
            asm::for_each_asm(n, |a| {
                if res.is_ok() {
                    let r = a.reflect();
                    let (s, t) = (a.stats(), r.stats());
                    res = ensure(r.reflect() == *a, || format!("{a} is not restored"))
                        .and_then(|_| {
                            ensure(reflected_triple(n, s.nu, s.mu, s.rho) == (t.nu, t.mu, t.rho), || {
                                format!("statistics of the reflection of {a}")
                            })
                        });
                }
            })?;
            res
        });
    }
    for n in 1..=max_n.min(6) {
        plan.add("DPP statistics multiset", n_param(n), move || {
            let mut h: HashMap<(u32, u32, u32), u64> = HashMap::new();
            for d in dpp::enumerate_dpps(n)? {
                let s = d.stats(n)?;
                *h.entry((s.nu, s.mu, s.rho)).or_default() += 1;
            }
            for (&(nu, mu, rho), &c) in &h {
                let image = reflected_triple(n, nu, mu, rho);
                let ci = h.get(&image).copied().unwrap_or(0);
                ensure(c == ci, || format!("{:?} has {c}, its image {image:?} has {ci}", (nu, mu, rho)))?;
            }
            Ok(())
        });
    }
    for k in 1..=2usize {
        let order = 2 * k + 1;
        if order <= max_n {
            plan.add("vertically symmetric count", format!("order={order}"), move || {
                let mut c = 0u64;
                asm::for_each_asm(order, |a| c += u64::from(a.reflect() == *a))?;
                eq("count", &Integer::from(c), &formulas::vsasm_total(k)?)
            });
        }
    }
}

fn parity(plan: &mut Plan, cap: usize, max_n: usize) {
    for n in 1..=cap {
        plan.add("sum-of-parts parity", n_param(n), move || {
            let p = formulas::stanton_parity(n)?;
            ensure(p.holds(), || format!("{p:?}"))
        });
        for m in 0..=2u32 {
            plan.add("isolated-one expansion", format!("n={n} m={m}"), move || {
                let mut c = 0u64;
                asm::for_each_asm(n, |a| c += u64::from(a.stats().mu == m))?;
                eq("count", &Integer::from(c), &formulas::cdlg_sum(n, m)?)
            });
        }
    }
    for n in 1..=max_n.min(6) {
        plan.add("q-enumeration by sum of parts", n_param(n), move || {
            eq("Σ q^|D|", &dpp::q_sum_of_parts(n)?, &formulas::q_factorial_product(n)?)
        });
    }
}

fn boundary(plan: &mut Plan, cap: usize) {
    for n in 2..=cap {
        plan.add("boundary relation", n_param(n), move || {
            let (a, a1) = (asm::z_asm_brute(n)?, asm::z_asm_brute(n - 1)?);
            let (d, d1) = (dpp::z_dpp_brute(n)?, dpp::z_dpp_brute(n - 1)?);
            ensure(formulas::boundary_relation(&a, &a1), || "ASM".into())?;
            ensure(formulas::boundary_relation(&d, &d1), || "DPP".into())
        });
    }
}

/// One CSV line per `(p, m, k)` cell, sorted.
pub fn table_csv(n: usize) -> Result<String> {
    let t = formulas::stat_table(n)?;
    let mut cells: Vec<_> = t.into_iter().collect();
    cells.sort();
    let mut out = String::from("p,m,k,asm_count,dpp_count,equal\n");
    for ((p, m, k), (a, d)) in cells {
        out.push_str(&format!("{p},{m},{k},{a},{d},{}\n", a == d));
    }
    Ok(out)
}
