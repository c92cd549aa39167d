//! Acceptance suite: one line per criterion with its runtime limit.
//!
//! Runs under `cargo test` with a custom harness. Exits nonzero if any
//! criterion fails or overruns its limit.

use std::time::{Duration, Instant};

use qqsh::braided::fixtures;
use qqsh::par::Exec;
use qqsh::report::Report;
use qqsh::rotabaxter::{check_kt_closed_formula, RotaBaxter};
use qqsh::scalar::Scalar;
use qqsh::verify::{self, Fixture};
use qqsh::dualcoalg::DualContext;

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Option<Duration>,
    run: fn(Exec) -> Vec<Report>,
}

fn c1(_: Exec) -> Vec<Report> {
    vec![verify::check_enumeration(4)]
}

fn c2(exec: Exec) -> Vec<Report> {
    verify::product_fixtures().iter().map(|fx| verify::check_product_routes(fx, 6, exec)).collect()
}

fn c3(exec: Exec) -> Vec<Report> {
    vec![verify::check_nfold(&Fixture::by_name("A4").unwrap(), 5, exec)]
}

fn c4(_: Exec) -> Vec<Report> {
    vec![verify::check_power_formula(5, 1)]
}

fn c5(exec: Exec) -> Vec<Report> {
    verify::product_fixtures().iter().map(|fx| verify::check_associativity(fx, 6, exec)).collect()
}

fn c6(exec: Exec) -> Vec<Report> {
    verify::product_fixtures().iter().map(|fx| verify::check_bialgebra(fx, 4, exec)).collect()
}

fn c7(exec: Exec) -> Vec<Report> {
    let d = DualContext::from_algebra(&fixtures::a_n(4)).unwrap();
    vec![d.check_adjoint(4, exec), d.check_phi2(4, exec), d.check_coassociative(3, exec)]
}

fn c8(exec: Exec) -> Vec<Report> {
    let kt = RotaBaxter::kt();
    let neg = RotaBaxter::negation(4, Scalar::one());
    vec![kt.check_rb(), kt.check_hom(4, exec), neg.check_hom(4, exec), check_kt_closed_formula(&kt, 4, 4)]
}

fn c9(exec: Exec) -> Vec<Report> {
    vec![verify::check_zeta_routes(4, 5, exec)]
}

fn c10(exec: Exec) -> Vec<Report> {
    let mut out = Vec::new();
    for (name, space, letters) in verify::shipped_spaces() {
        out.push(verify::check_matsumoto(&space, &name, &letters, 4, exec));
        let mut yb = qqsh::braided::check_yang_baxter(&space.braiding, &qqsh::braided::all_triples(&letters));
        yb.name = format!("Yang–Baxter [{name}]");
        out.push(yb);
    }
    out
}

fn c11(exec: Exec) -> Vec<Report> {
    vec![verify::check_hoffman(&Fixture::by_name("hoffman:1,1,2").unwrap(), 3, 4, exec)]
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { id: 1, title: "mixable shuffle and marked permutation counts", limit: secs(1), run: c1 },
        Criterion { id: 2, title: "explicit = left = right recursion, i+j ≤ 6", limit: secs(60), run: c2 },
        Criterion { id: 3, title: "n-fold explicit = left fold, n ≤ 5 on A4", limit: secs(60), run: c3 },
        Criterion { id: 4, title: "closed power formula, k ≤ 5 on A_inf", limit: None, run: c4 },
        Criterion { id: 5, title: "associativity and unit laws, total degree ≤ 6", limit: None, run: c5 },
        Criterion { id: 6, title: "braided bialgebra compatibility, total degree ≤ 4", limit: None, run: c6 },
        Criterion { id: 7, title: "dual adjointness, Φ₂ = Δ_σ,i, coassociativity on A4", limit: secs(120), run: c7 },
        Criterion { id: 8, title: "Rota–Baxter identity, f̄ homomorphism, 𝕂[t] closed formula", limit: None, run: c8 },
        Criterion { id: 9, title: "q-zeta truncations: direct = quasi-shuffle route", limit: secs(120), run: c9 },
        Criterion { id: 10, title: "reduced-word independence and Yang–Baxter", limit: None, run: c10 },
        Criterion { id: 11, title: "graded q-product and closed graded formula", limit: None, run: c11 },
    ];
    let exec = Exec::default();
    let mut all_ok = true;
    for c in &criteria {
        let start = Instant::now();
        let reports = (c.run)(exec);
        let elapsed = start.elapsed();
        let checked: usize = reports.iter().map(|r| r.checked).sum();
        let passed = reports.iter().all(Report::passed) && checked > 0;
        let in_time = c.limit.is_none_or(|l| elapsed <= l);
        let ok = passed && in_time;
        all_ok &= ok;
        let limit = c.limit.map_or("none".to_string(), |l| format!("{}s", l.as_secs()));
        println!(
            "criterion {:>2}: {} {} (checked={checked}, {:.2}s, limit {limit})",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64(),
        );
        if !passed {
            for r in reports.iter().filter(|r| !r.passed()) {
                println!("    {r}");
                for w in &r.witnesses {
                    println!("      {w}");
                }
            }
        }
        if !in_time {
            println!("    over the runtime limit");
        }
    }
    if !all_ok {
        std::process::exit(1);
    }
}
