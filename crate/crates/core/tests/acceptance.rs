//! Desk-scale acceptance run. Prints one line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeSet;
use std::time::Instant;

use capelli_core::borel::{BorelDescriptor, WeightVector};
use capelli_core::equivalence::{orbit, OrbitResult, Point, DEFAULT_BUDGET};
use capelli_core::isjp::{build_isjp, cached_basis, eigenvalue_diag, eigenvalue_glm2n};
use capelli_core::partitions::{enumerate_hooks, frobenius_coords};
use capelli_core::rational::{factorial, frac, half, int, one, parse_rational_list, Rational};
use capelli_core::tau::{m0_and_x0, tau0_diag, MapChoice};
use capelli_core::verify::{
    gl22_table, gl22_uniqueness, negative_control_config, verify_appendix, verify_diag, verify_glm2n,
    Pair, SweepConfig,
};
use capelli_core::weights::{hw0_diag, hw0_glm2n, hw_b, hw_b_by_walk};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const CONFIGS: [(usize, usize); 3] = [(1, 1), (2, 1), (2, 2)];

fn thetas() -> [Rational; 2] {
    [one(), half()]
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Debug>(err: E) -> String {
    format!("{err:?}")
}

fn isjp_properties() -> Outcome {
    let mut checked = 0;
    for (m, n) in CONFIGS {
        for theta in thetas() {
            let hooks = enumerate_hooks(m, n, 5);
            for lam in &hooks {
                let p = build_isjp(lam, m, n, &theta).map_err(e)?;
                ensure(p.poly.satisfies_monoidal_symmetry_all_pairs(&theta), || {
                    format!("P_{lam} at (m,n)=({m},{n}) θ={theta} fails monoidal symmetry")
                })?;
                for mu in hooks.iter().filter(|mu| mu.size() <= lam.size()) {
                    let node = frobenius_coords(mu, m, n, &theta).map_err(e)?.coords();
                    let v = p.evaluate(&node).map_err(e)?;
                    let want = if mu == lam { factorial(lam.size()) } else { int(0) };
                    ensure(v == want, || format!("P_{lam}(node {mu}) = {v}, want {want}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} node evaluations"))
}

fn node_identities() -> Outcome {
    let mut checked = 0;
    for (m, n) in CONFIGS {
        for lam in enumerate_hooks(m, n, 6) {
            let d = tau0_diag(m, n).apply_diag(&hw0_diag(&lam, m, n)).map_err(e)?;
            let f1 = frobenius_coords(&lam, m, n, &one()).map_err(e)?.coords();
            ensure(d == f1, || format!("τ₀(−λ̲₀, λ̲₀) ≠ node at θ=1 for {lam}"))?;
            let g = m0_and_x0(m, n).apply_weight(&hw0_glm2n(&lam, m, n)).map_err(e)?;
            let fh = frobenius_coords(&lam, m, n, &half()).map_err(e)?.coords();
            ensure(g == fh, || format!("τ₀(λ̲₀) ≠ node at θ=½ for {lam}"))?;
            checked += 1;
        }
        let op = BorelDescriptor::opposite_standard(m, n);
        // c_μ(λ) vanishes for μ ≠ λ with |λ| ≤ |μ|; smaller μ need not vanish (c_∅ = 1)
        let hooks = enumerate_hooks(m, n, 5);
        for lam in &hooks {
            for mu in hooks.iter().filter(|mu| mu.size() >= lam.size()) {
                let want = if mu == lam { factorial(lam.size()) } else { int(0) };
                let c1 = eigenvalue_diag(mu, lam, m, n).map_err(e)?;
                let c2 = eigenvalue_glm2n(mu, lam, m, n, &op, MapChoice::Tau0).map_err(e)?;
                ensure(c1 == want && c2 == want, || {
                    format!("c_{mu}({lam}) = {c1}, {c2}; want {want}")
                })?;
            }
        }
    }
    Ok(format!("{checked} weights mapped onto nodes; eigenvalue corollary for |λ| ≤ 5"))
}

fn diag_sweep() -> Outcome {
    let mut cases = 0;
    for (m, n) in [(1, 1), (2, 1)] {
        let r = verify_diag(&SweepConfig::new(Pair::Diag, m, n, 4, 3)).map_err(e)?;
        ensure(r.passed(), || format!("({m},{n}): {} failures, first {:?}", r.failures.len(), r.failures[0]))?;
        cases += r.cases;
    }
    Ok(format!("{cases} exact three-way comparisons"))
}

fn glm2n_sweep() -> Outcome {
    let mut summary = Vec::new();
    for (m, n) in CONFIGS {
        let r = verify_glm2n(&SweepConfig::new(Pair::Glm2n, m, n, 5, 4)).map_err(e)?;
        ensure(r.passed(), || format!("({m},{n}): {} failures, first {:?}", r.failures.len(), r.failures[0]))?;
        let borels = BorelDescriptor::enumerate(m, n);
        let re = borels.iter().filter(|b| b.is_relatively_even()).count();
        let ve = borels.iter().filter(|b| b.is_very_even()).count();
        summary.push(format!("({m},{n}) {} Borels [{re} rel. even, {ve} very even] {} cases", borels.len(), r.cases));
    }
    Ok(summary.join("; "))
}

fn table() -> Outcome {
    let t = gl22_table(5).map_err(e)?;
    ensure(t.all_match, || {
        let bad = t.rows.iter().find(|r| !r.matches).expect("a mismatch");
        format!("row {} gives {} / {}", bad.lambda, bad.lambda_0, bad.lambda_b)
    })?;
    Ok(format!("{} rows match", t.rows.len()))
}

fn q(s: &str) -> Vec<Rational> {
    parse_rational_list(s).expect("literal")
}

fn worked_example() -> Outcome {
    let rep = gl22_uniqueness(3, 4).map_err(e)?;
    let xs: BTreeSet<Vec<Rational>> = rep.candidates.iter().map(|c| c.x.clone()).collect();
    let want: BTreeSet<Vec<Rational>> = [q("1/4,-5/4,1"), q("1/4,3/4,-1")].into_iter().collect();
    ensure(xs == want, || format!("candidate set {xs:?}"))?;
    ensure(rep.x_selected == q("1/4,3/4,-1"), || format!("selected X′ {:?}", rep.x_selected))?;
    let m_final = vec![
        vec!["-1/2", "0", "0", "0"],
        vec!["0", "-1/2", "1/2", "-1/2"],
        vec!["0", "0", "-1", "0"],
    ];
    ensure(rep.m_selected == m_final, || format!("M′ = {:?}", rep.m_selected))?;
    ensure(rep.matches_full_map, || "selected map differs from the full map".into())?;
    for r in 1..=3i64 {
        let a = int(r) - frac(1, 4);
        let u = Point::new(vec![a.clone(), frac(-3, 4), int(1)], 2, 1, half()).map_err(e)?;
        let OrbitResult::Finite { points } = orbit(&u, DEFAULT_BUDGET) else {
            return Err(format!("orbit for r = {r} not finite"));
        };
        let got: BTreeSet<Vec<Rational>> = points.into_iter().map(|p| p.coords).collect();
        let expect: BTreeSet<Vec<Rational>> = [
            vec![a.clone(), frac(-3, 4), int(1)],
            vec![a.clone(), frac(1, 4), int(0)],
            vec![frac(-3, 4), a.clone(), int(1)],
            vec![frac(1, 4), a.clone(), int(0)],
        ]
        .into_iter()
        .collect();
        ensure(got == expect, || format!("orbit for r = {r}: {got:?}"))?;
        // the printed fourth vector (1/4, r−1/4, 1) is not in the orbit
        ensure(!got.contains(&vec![frac(1, 4), a.clone(), int(1)]), || "printed vector found".into())?;
    }
    for a in [int(0), int(1), frac(7, 3)] {
        let u = Point::new(vec![&a - half(), a.clone(), -int(2) * &a + half()], 2, 1, half()).map_err(e)?;
        ensure(matches!(orbit(&u, DEFAULT_BUDGET), OrbitResult::InfiniteDetected { .. }), || {
            format!("no infinite orbit detected for a = {a}")
        })?;
    }
    Ok("X′ = (1/4, 3/4, −1), M′ and candidates reproduced; four-point orbits for r ≤ 3 \
        (fourth vector has last coordinate 0); infinite orbits flagged"
        .into())
}

fn negative_control() -> Outcome {
    let r = verify_glm2n(&negative_control_config()).map_err(e)?;
    ensure(!r.failures.is_empty(), || "forced C_𝔟 map reported no failure".into())?;
    let f = &r.failures[0];
    Ok(format!(
        "{} failures, e.g. λ={} μ={} on {}: {} ≠ {}",
        r.failures.len(),
        f.lambda,
        f.mu.as_deref().unwrap_or("-"),
        f.borel,
        f.lhs,
        f.rhs
    ))
}

fn appendix() -> Outcome {
    let rep = verify_appendix().map_err(e)?;
    ensure(rep.passed, || format!("{rep:?}"))?;
    let pairs: usize = rep.cases.iter().map(|c| c.pairs).sum();
    Ok(format!("φ′ = d!φ on {pairs} basis pairs; gl(1) scalar d! for d ≤ 4"))
}

fn structural() -> Outcome {
    for (m, n) in CONFIGS {
        for theta in thetas() {
            for d in 0..=5 {
                let dim = cached_basis(m, n, &theta, d).map_err(e)?.dim();
                let hooks = enumerate_hooks(m, n, d).len();
                ensure(dim == hooks, || {
                    format!("dim Λ_≤{d} = {dim} but {hooks} hooks at (m,n)=({m},{n}) θ={theta}")
                })?;
            }
        }
    }
    let mut borels = 0;
    for m in 1..=3 {
        for n in 1..=3 {
            for b in BorelDescriptor::enumerate(m, n) {
                let roots = b
                    .generic_roots()
                    .into_iter()
                    .fold(WeightVector::zero(m, 2 * n), |acc, a| &acc + &a);
                ensure(roots == b.r_b(), || format!("r_𝔟 ≠ Σ𝒢_𝔟 for {b}"))?;
                let mut sum = b.even_core().r_b();
                for k in b.t_set() {
                    sum = &sum + &b.r_odd(k).map_err(e)?;
                }
                ensure(sum == b.r_b(), || format!("r_𝔟 decomposition fails for {b} at ({m},{n})"))?;
                borels += 1;
            }
        }
    }
    let mut weights = 0;
    for (m, n) in CONFIGS {
        for b in BorelDescriptor::enumerate(m, n) {
            for lam in enumerate_hooks(m, n, 6) {
                ensure(hw_b_by_walk(&lam, &b) == hw_b(&lam, &b), || {
                    format!("walk and closed form differ for {lam} on {b}")
                })?;
                weights += 1;
            }
        }
    }
    Ok(format!("dimensions match to degree 5; {borels} Borels decomposed; {weights} weights walked"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("interpolation polynomial defining properties", isjp_properties),
        ("node identities", node_identities),
        ("gl(m|n) ⊕ gl(m|n) Borel-pair sweep", diag_sweep),
        ("gl(m|2n) decreasing Borel sweeps", glm2n_sweep),
        ("gl(2|2) highest-weight table", table),
        ("gl(2|2) uniqueness example", worked_example),
        ("negative control", negative_control),
        ("Capelli normalization lemma", appendix),
        ("structural properties", structural),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
