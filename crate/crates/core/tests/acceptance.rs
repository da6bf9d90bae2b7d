//! End-to-end acceptance criteria. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails. Tolerance is exact equality.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use coalg::cli::axiom_report;
use coalg::coalgebra::{builtin, coinvariants_of_dual, diagonal_coaction, gl_coalgebra_k, Coalgebra};
use coalg::complexes::{
    bar_homotopy_check, build, build_cyclic, ce_homotopy_check, deconcat_coproduct_check,
    epsilon_chain_map_check, ops::lie_leibniz, shuffle_factorization_check,
    shuffle_product_check, tn_exactness_check, ComplexKind,
};
use coalg::lqt::{bar_invariants_dim, primitives_dim, weyl_coinvariants_dim, SigmaAdElement};
use coalg::perm::long_cycle_class;
use coalg::report::Report;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const BUILTINS: [&str; 6] = ["trivial", "group:2", "group:3", "matrix:2", "matrix:3", "matrix:2:group:2"];

fn c(spec: &str) -> Coalgebra {
    builtin(spec).expect("built-in")
}

fn require(r: Report, what: &str) -> Result<usize, String> {
    if r.is_empty() {
        return Err(format!("{what}: no checks ran"));
    }
    match r.first_failure() {
        Some(f) => Err(format!("{what}: {f}")),
        None => Ok(r.len()),
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        Err(format!("took {t:?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn axioms() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for spec in BUILTINS {
        n += require(axiom_report(&c(spec)), spec)?;
    }
    within(Duration::from_secs(1), start)?;
    Ok(format!("{n} axiom checks over {} built-ins", BUILTINS.len()))
}

fn square_zero() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for (spec, degree) in [("group:2", 6), ("matrix:2", 4)] {
        for kind in ComplexKind::ALL {
            // one degree past the bound so d_degree ∘ d_(degree-1) is stored
            let x = build(kind, &c(spec), degree + 1).map_err(|e| format!("{spec} {kind}: {e}"))?;
            n += require(x.square_zero_report(), &format!("{spec} {kind}"))?;
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!("{n} composites vanish"))
}

fn homotopies() -> Outcome {
    let mut n = 0;
    for (spec, degree) in [("matrix:2", 4), ("group:2", 5)] {
        let c = c(spec);
        let l = lie_leibniz(&c).map_err(|e| e.to_string())?;
        n += require(bar_homotopy_check(&c, degree).map_err(|e| e.to_string())?, spec)?;
        n += require(ce_homotopy_check(&l, degree).map_err(|e| e.to_string())?, spec)?;
    }
    Ok(format!("{n} homotopy identities"))
}

fn exactness() -> Outcome {
    let mut n = 0;
    for (spec, degree) in [("matrix:2", 4), ("group:2", 5)] {
        n += require(tn_exactness_check(&c(spec), degree), spec)?;
    }
    Ok(format!("{n} subspace equalities and chain-map squares"))
}

fn epsilon_maps() -> Outcome {
    let r = epsilon_chain_map_check(&c("matrix:2"), 4).map_err(|e| e.to_string())?;
    Ok(format!("{} identities", require(r, "matrix:2")?))
}

fn shuffle_algebra() -> Outcome {
    let m2 = c("matrix:2");
    let mut n = require(shuffle_factorization_check(5), "factorization")?;
    n += require(shuffle_product_check(&m2, 5).map_err(|e| e.to_string())?, "shuffle product")?;
    n += require(deconcat_coproduct_check(&m2, 5), "deconcatenation")?;
    Ok(format!("{n} identities on gl_2^c(k), p+q ≤ 5"))
}

fn weyl() -> Outcome {
    let start = Instant::now();
    let mut values = Vec::new();
    for n in 1..=3usize {
        for m in 1..=n {
            let factorial: usize = (1..=m).product();
            let co = weyl_coinvariants_dim(n, m).map_err(|e| e.to_string())?;
            let inv = bar_invariants_dim(n, m).map_err(|e| e.to_string())?;
            let rho = diagonal_coaction(gl_coalgebra_k(n).map_err(|e| e.to_string())?.as_leibniz(), m)
                .map_err(|e| e.to_string())?;
            let dual = coinvariants_of_dual(&rho);
            if co != factorial || inv != co || dual != co {
                return Err(format!("n={n} m={m}: coinvariants {co}, invariants {inv}, dual {dual}, m! {factorial}"));
            }
            values.push(co);
        }
    }
    if values != [1, 1, 2, 1, 2, 6] {
        return Err(format!("values {values:?}"));
    }
    within(Duration::from_secs(300), start)?;
    Ok(format!("values {values:?}"))
}

fn cyclic_pattern() -> Outcome {
    // oracle: N_m acts on k as Σ_j (-1)^{(m-1)j}, i.e. m for odd m and 0
    // for even m, so im N alternates k, 0 and every differential is zero
    let oracle: Vec<usize> = (1..=6)
        .map(|m: i64| {
            let scalar: i64 = (0..m).map(|j| if ((m - 1) * j) % 2 == 0 { 1 } else { -1 }).sum();
            usize::from(scalar != 0)
        })
        .collect();
    let h = build_cyclic(&c("trivial"), 7).map_err(|e| e.to_string())?.homology();
    if h.first_degree != 1 || h.dims != oracle || oracle != [1, 0, 1, 0, 1, 0] {
        return Err(format!("homology {h}, oracle {oracle:?}"));
    }
    Ok(format!("HC(k)[+1] = {:?} in degrees 1..6", h.dims))
}

fn coalg_json(args: &[&str]) -> Result<serde_json::Value, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_coalg"))
        .args(args)
        .arg("--json")
        .output()
        .map_err(|e| e.to_string())?;
    if o.status.code() != Some(0) {
        return Err(format!("{args:?} exited {:?}: {}", o.status.code(), String::from_utf8_lossy(&o.stderr)));
    }
    serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())
}

fn lqt() -> Outcome {
    let start = Instant::now();
    let mut summary = Vec::new();
    for (spec, n, d) in [("trivial", "3", "3"), ("trivial", "2", "2"), ("group:2", "2", "2")] {
        let v = coalg_json(&["lqt", spec, "--n", n, "--max-degree", d])?;
        let rows = v["report"]["lqt"]["rows"].as_array().ok_or("missing rows")?.clone();
        for r in rows.iter().filter(|r| r["stable"] == true) {
            if r["lie"] != r["expected"] {
                return Err(format!("{spec} n={n}: degree {} gives {} vs {}", r["degree"], r["lie"], r["expected"]));
            }
        }
        let lie: Vec<u64> = rows.iter().map(|r| r["lie"].as_u64().unwrap_or(u64::MAX)).collect();
        summary.push(format!("{spec}/n={n}: {lie:?}"));
        if spec == "trivial" && n == "3" {
            let exp: Vec<u64> = rows.iter().map(|r| r["expected"].as_u64().unwrap_or(u64::MAX)).collect();
            if lie != [1, 1, 0, 1] || exp != [1, 1, 0, 1] {
                return Err(format!("H^Lie {lie:?}, Λ*HC[+1] {exp:?}"));
            }
        }
    }
    within(Duration::from_secs(600), start)?;
    Ok(summary.join("; "))
}

fn primitives() -> Outcome {
    let mut n = 0;
    for spec in BUILTINS {
        let c = c(spec);
        let cc = build_cyclic(&c, 5).map_err(|e| format!("{spec}: {e}"))?;
        for m in 1..=5 {
            let p = primitives_dim(&c, m).map_err(|e| e.to_string())?;
            if p != cc.dim(m) {
                return Err(format!("{spec} m={m}: primitives {p}, im N {}", cc.dim(m)));
            }
            n += 1;
        }
    }
    for m in 2..=4 {
        for s in long_cycle_class(m) {
            let a = SigmaAdElement::basis((0..m).collect(), s.clone()).map_err(|e| e.to_string())?;
            if !a.is_primitive() {
                return Err(format!("long cycle {s} is not primitive"));
            }
            n += 1;
        }
    }
    Ok(format!("{n} comparisons"))
}

fn determinism() -> Outcome {
    let runs: [&[&str]; 3] = [
        &["homology", "matrix:2", "ce-sym", "4", "--seed", "3"],
        &["verify", "group:2", "hopf", "--max-degree", "4", "--seed", "5"],
        &["lqt", "group:2", "--n", "2", "--max-degree", "2"],
    ];
    for args in runs {
        let (a, b) = (coalg_json(args)?, coalg_json(args)?);
        if serde_json::to_vec(&a["report"]).ok() != serde_json::to_vec(&b["report"]).ok() {
            return Err(format!("{args:?} differs between runs"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut n = 0;
    for (spec, degree) in [("group:2", 5), ("matrix:2", 3)] {
        for kind in ComplexKind::ALL {
            let x = build(kind, &c(spec), degree).map_err(|e| e.to_string())?;
            let moved = x.in_random_basis(&mut rng);
            if moved.homology() != x.homology() {
                return Err(format!("{spec} {kind}: {} vs {}", moved.homology(), x.homology()));
            }
            n += 1;
        }
    }
    Ok(format!("byte-identical reports; {n} complexes keep their homology under a seeded basis change"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("axioms of all built-ins", axioms),
        ("d² = 0 for all six complexes", square_zero),
        ("bar and CE homotopy identities", homotopies),
        ("(t, N) exactness and chain-map squares", exactness),
        ("ε chain maps and (id ⊗ ε) N = ε", epsilon_maps),
        ("shuffle algebra and deconcatenation", shuffle_algebra),
        ("Weyl coinvariants = m! = invariants", weyl),
        ("cyclic homology of k alternates", cyclic_pattern),
        ("LQT comparison in the stable range", lqt),
        ("primitives = im N, long cycles primitive", primitives),
        ("determinism and basis-change invariance", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  criterion {:>2}: {name} — {detail} ({t:.2} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name} — {why} ({t:.2} s)", i + 1);
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
