//! Acceptance suite: one line per criterion. Each criterion runs the matching
//! library verification suite and then re-derives its headline values with
//! the independent implementations in `oracle`.

mod oracle;

use std::collections::HashMap;
use std::process::ExitCode;

use asmdpp_core::verify::{self, Suite, VerifyOptions};
use asmdpp_core::{asm, dpp, formulas, matrices, oscillating, paths, rat, six_vertex};
use asmdpp_core::{IkPoint, Integer, MultiPoly, SixVertexConfig, Var};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn suite(s: Suite) -> Outcome {
    let checks = verify::run_suite(s, &VerifyOptions::default());
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(format!("{} [{}]: {}", c.name, c.params, c.detail.clone().unwrap_or_default())),
        None => Ok(()),
    }
}

fn theorem1() -> Outcome {
    suite(Suite::Theorem1)?;
    for n in 1..=6 {
        let det = oracle::poly_hist(&matrices::genfunc_det(n).map_err(e2s)?);
        ensure(det == oracle::asm_hist(n), || format!("determinant vs ASM oracle, n={n}"))?;
        ensure(det == oracle::dpp_hist(n), || format!("determinant vs DPP oracle, n={n}"))?;
    }
    let z3 = matrices::genfunc_det(3).map_err(e2s)?.to_string();
    ensure(z3 == "x^3*z^2 + x^2*z^2 + x^2*z + x*y*z + x*z + x + 1", || z3)
}

fn counting() -> Outcome {
    suite(Suite::Counting)?;
    let totals: Vec<u128> = (1..=6).map(oracle::asm_product).collect();
    ensure(totals == [1, 2, 7, 42, 429, 7436], || format!("{totals:?}"))?;
    for n in 1..=6usize {
        let expect = oracle::asm_product(n as u64);
        ensure(oracle::asms(n).len() as u128 == expect, || format!("ASM oracle count n={n}"))?;
        ensure(oracle::dpps(n as u32).len() as u128 == expect, || format!("DPP oracle count n={n}"))?;
        ensure(formulas::asm_total(n).map_err(e2s)? == Integer::from(expect), || format!("product n={n}"))?;
        for k in 0..n {
            let r = oracle::refined_product(n as u64, k as u64);
            let a = oracle::asm_hist(n).iter().filter(|(s, _)| s.2 == k as u32).map(|(_, c)| c).sum::<u64>();
            ensure(a as u128 == r, || format!("refined n={n} k={k}"))?;
            ensure(formulas::refined_total(n, k).map_err(e2s)? == Integer::from(r), || format!("refined_total n={n} k={k}"))?;
        }
    }
    Ok(())
}

fn table() -> Outcome {
    suite(Suite::Table)?;
    for n in 1..=6 {
        ensure(oracle::asm_hist(n) == oracle::dpp_hist(n), || format!("oracle tables differ at n={n}"))?;
    }
    let c = oracle::asm_hist(5).get(&(3, 1, 2)).copied();
    ensure(c == Some(10), || format!("cell (5; 3, 1, 2) = {c:?}"))
}

fn sixvertex() -> Outcome {
    suite(Suite::SixVertex)?;
    for n in 1..=5 {
        for m in oracle::asms(n) {
            let a = asmdpp_core::Asm::new(m.clone()).map_err(e2s)?;
            let c = SixVertexConfig::from_asm(&a);
            let names: Vec<Vec<&str>> = c.to_grid().iter().map(|r| r.iter().map(|t| t.name()).collect()).collect();
            ensure(names == oracle::vertex_types(&m), || format!("vertex types of {a}"))?;
            let mut count: HashMap<&str, u32> = HashMap::new();
            for t in names.iter().flatten() {
                *count.entry(t).or_default() += 1;
            }
            let g = |t| count.get(t).copied().unwrap_or(0);
            let (nu, mu, rho) = oracle::asm_stats(&m);
            let first_a = names[0].iter().filter(|&&t| t == "a1").count() as u32;
            ensure(
                g("a1") == g("a2") && g("b1") == g("b2") && g("c1") == g("c2") + n as u32,
                || format!("type balance for {a}"),
            )?;
            ensure(g("a1") + g("b1") + g("c2") == (n * (n - 1) / 2) as u32, || format!("sum for {a}"))?;
            ensure((g("a1"), g("c2"), first_a) == (nu, mu, rho), || format!("statistics for {a}"))?;
        }
    }
    Ok(())
}

fn ik() -> Outcome {
    suite(Suite::Ik)?;
    // Exact value of the explicit sum, computed separately with Python fractions.
    let p = IkPoint { q: rat(2, 1), s: vec![rat(1, 1), rat(2, 1)], t: vec![rat(3, 1), rat(5, 1)] };
    let v = six_vertex::ik_determinant_rat(&p).map_err(e2s)?;
    ensure(v == rat(4879, 160), || format!("IK value {v}"))
}

fn lgv() -> Outcome {
    suite(Suite::Lgv)?;
    let n3: MultiPoly = "1 + 2x + 2x^2 + x^3 + xy".parse().map_err(e2s)?;
    ensure(paths::lgv_nilp_sum(3, false).map_err(e2s)? == n3, || "unrefined family sum, n=3".into())?;
    for n in 1..=6 {
        let det = oracle::poly_hist(&matrices::m_bar(n, true).map_err(e2s)?.det().map_err(e2s)?);
        ensure(det == oracle::dpp_hist(n), || format!("det vs DPP oracle n={n}"))?;
    }
    Ok(())
}

fn omega() -> Outcome {
    suite(Suite::Omega)
}

fn aux() -> Outcome {
    suite(Suite::Aux)?;
    for n in 1..=5usize {
        let mut rows: HashMap<(u32, u32, u32, u32), u64> = HashMap::new();
        for d in oracle::dpps(n as u32) {
            let (nu, mu, rho) = oracle::dpp_stats(&d, n as u32);
            *rows.entry((nu, mu, rho, d.len() as u32 + 1)).or_default() += 1;
        }
        let det = matrices::genfunc_det_w(n).map_err(e2s)?;
        let got: HashMap<(u32, u32, u32, u32), u64> =
            det.terms().map(|(e, c)| ((e[0], e[1], e[2], e[3]), u64::try_from(c.clone()).unwrap())).collect();
        ensure(got == rows, || format!("row-count refinement n={n}"))?;
    }
    Ok(())
}

fn oscillating_criterion() -> Outcome {
    suite(Suite::Oscillating)?;
    for p in 0..=4u32 {
        let df: usize = (1..=p as usize).map(|k| 2 * k - 1).product();
        ensure(oscillating::asm_side_tableaux(p).len() == df, || format!("(2p-1)!! at p={p}"))?;
    }
    for n in 1..=6usize {
        let asm_h = oracle::asm_hist(n);
        let dpp_h = oracle::dpp_hist(n);
        for p in 0..=4u32 {
            let a: u64 = asm_h.iter().filter(|(s, _)| s.0 == p).map(|(_, c)| c).sum();
            let d: u64 = dpp_h.iter().filter(|(s, _)| s.0 == p).map(|(_, c)| c).sum();
            let (sa, sd) = oscillating::osc_counts(n, p);
            ensure(sa == Integer::from(a) && sd == Integer::from(d), || format!("n={n} p={p}"))?;
        }
        let closed = oracle::binom(n as u64, 4) + 2 * oracle::binom(n as u64 + 1, 4);
        let (sa, _) = oscillating::osc_counts(n, 2);
        ensure(sa == Integer::from(closed), || format!("p=2 closed form n={n}"))?;
    }
    Ok(())
}

fn m0() -> Outcome {
    suite(Suite::M0)?;
    for n in 1..=6usize {
        let mut h: HashMap<(u32, u32), i64> = HashMap::new();
        for m in oracle::asms(n).into_iter().filter(|m| !m.iter().flatten().any(|&v| v == -1)) {
            let (nu, _, rho) = oracle::asm_stats(&m);
            *h.entry((nu, rho)).or_default() += 1;
        }
        let z = formulas::z_mu_zero(n).map_err(e2s)?;
        let got: HashMap<(u32, u32), i64> = z.terms().map(|(e, c)| ((e[0], e[2]), i64::try_from(c.clone()).unwrap())).collect();
        ensure(got == h, || format!("mu = 0 generating function n={n}"))?;
    }
    Ok(())
}

fn symmetry() -> Outcome {
    suite(Suite::Symmetry)?;
    for n in 1..=5usize {
        let half = (n * (n - 1) / 2) as u32;
        for m in oracle::asms(n) {
            let r = oracle::reflect(&m);
            let (nu, mu, rho) = oracle::asm_stats(&m);
            ensure(oracle::asm_stats(&r) == (half - nu - mu, mu, n as u32 - 1 - rho), || format!("{m:?}"))?;
        }
    }
    let sym: Vec<usize> =
        [3, 5].iter().map(|&n| oracle::asms(n).iter().filter(|m| oracle::reflect(m) == **m).count()).collect();
    ensure(sym == [1, 3], || format!("symmetric counts {sym:?}"))?;
    let formula = [formulas::vsasm_total(1).map_err(e2s)?, formulas::vsasm_total(2).map_err(e2s)?];
    ensure(formula == [Integer::from(1), Integer::from(3)], || format!("{formula:?}"))
}

fn parity() -> Outcome {
    suite(Suite::Parity)?;
    for n in 1..=5usize {
        let ds = oracle::dpps(n as u32);
        let sums: Vec<u32> = ds.iter().map(|d| d.iter().flatten().sum()).collect();
        let even_odd = sums.iter().map(|s| if s % 2 == 0 { 1i64 } else { -1 }).sum::<i64>();
        let mod4 = sums.iter().map(|s| [1i64, 0, -1, 0][(s % 4) as usize]).sum::<i64>();
        let ms = oracle::asms(n);
        let half = ms.iter().filter(|m| oracle::rotate_half(m) == **m).count() as i64;
        let quarter = ms.iter().filter(|m| oracle::rotate_quarter(m) == **m).count() as i64;
        ensure((even_odd, mod4) == (half, quarter), || format!("parity n={n}"))?;
        for m in 0..=2u32 {
            let lhs = ms.iter().filter(|a| oracle::asm_stats(a).1 == m).count() as u128;
            let mut rhs = 0u128;
            for i in 0..=(3 * m as usize).min(n) {
                let c = if i == 0 {
                    u128::from(m == 0)
                } else {
                    oracle::asms(i)
                        .iter()
                        .filter(|a| oracle::asm_stats(a).1 == m && oracle::isolated_ones(a) == 0)
                        .count() as u128
                };
                let w = oracle::fact(n as u64).pow(2) / (oracle::fact(i as u64).pow(2) * oracle::fact((n - i) as u64));
                rhs += w * c;
            }
            ensure(lhs == rhs, || format!("isolated ones n={n} m={m}: {lhs} vs {rhs}"))?;
        }
    }
    for n in 1..=6usize {
        let mut num = vec![1i128];
        let mut den = vec![1i128];
        for i in 0..n {
            num = oracle::poly_mul(&num, &oracle::q_factorial(3 * i + 1));
            den = oracle::poly_mul(&den, &oracle::q_factorial(n + i));
        }
        let product = oracle::poly_div(&num, &den);
        let mut counts = vec![0i128; product.len()];
        for d in oracle::dpps(n as u32) {
            let s: u32 = d.iter().flatten().sum();
            counts[s as usize] += 1;
        }
        ensure(counts == product, || format!("q-product n={n}"))?;
        let lib = dpp::q_sum_of_parts(n).map_err(e2s)?;
        let q = Var::Q.index();
        let ok = (0..product.len()).all(|k| {
            let mut e = vec![0; 5];
            e[q] = k as u32;
            lib.coeff(&e) == Integer::from(product[k])
        });
        ensure(ok, || format!("library q-sum n={n}"))?;
    }
    Ok(())
}

fn boundary() -> Outcome {
    suite(Suite::Boundary)?;
    for n in 2..=6usize {
        for (name, h, prev) in [
            ("ASM", oracle::asm_hist(n), oracle::asm_hist(n - 1)),
            ("DPP", oracle::dpp_hist(n), oracle::dpp_hist(n - 1)),
        ] {
            let mut at_zero: HashMap<(u32, u32), u64> = HashMap::new();
            for (&(nu, mu, rho), &c) in &h {
                if rho == 0 {
                    *at_zero.entry((nu, mu)).or_default() += c;
                }
            }
            let mut at_one: HashMap<(u32, u32), u64> = HashMap::new();
            for (&(nu, mu, _), &c) in &prev {
                *at_one.entry((nu, mu)).or_default() += c;
            }
            ensure(at_zero == at_one, || format!("{name} n={n}"))?;
        }
    }
    let a = asm::z_asm_brute(4).map_err(e2s)?;
    ensure(formulas::boundary_relation(&a, &asm::z_asm_brute(3).map_err(e2s)?), || "library relation".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("ASM, DPP and determinant generating functions agree", theorem1),
        ("counting: straight and refined product formulas", counting),
        ("(p, m, k) table: per-cell agreement", table),
        ("six-vertex vertex counts and bijection", sixvertex),
        ("Izergin-Korepin determinant at rational points", ik),
        ("LGV: path sums and nonintersecting families", lgv),
        ("omega relation, negative control and rational points", omega),
        ("auxiliary matrices and the w-refinement", aux),
        ("oscillating tableaux", oscillating_criterion),
        ("m = 0 bijection", m0),
        ("symmetry under vertical reflection", symmetry),
        ("parity, isolated ones and the q-product", parity),
        ("boundary relation", boundary),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match r {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
