//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines are always printed; exits nonzero if any criterion fails.

use std::sync::Mutex;
use std::time::Instant;

use catalecticant::apolarity::{apolar_hilbert, stratify, StratumReport};
use catalecticant::ci::{associated_form, products_span_dim, roundtrip_span, GradedQuotient};
use catalecticant::identities::{check_a1, check_a2, check_a3, check_aux, check_dimt2_equals_n};
use catalecticant::poly::{act_on_form, FormTuple, Polynomial};
use catalecticant::sample::{random_ci_tuple, random_form, random_invertible, rng};
use catalecticant::tangent::{
    koszul_kernel_check, relation_space_dim_bruteforce, relation_space_dim_formula, tangent_dim,
};
use num_bigint::BigInt;
use rayon::prelude::*;

/// Every tuple sampled by any criterion, for the criteria quantified over all samples.
static SAMPLES: Mutex<Vec<FormTuple>> = Mutex::new(Vec::new());

fn sample(n: usize, d: usize, seed: u64) -> FormTuple {
    let f = random_ci_tuple(n, d, seed, 5).expect("sampling succeeds with the default bound");
    SAMPLES.lock().unwrap().push(f.clone());
    f
}

fn choose(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    (0..b).fold(1u128, |acc, i| acc * (a - i) as u128 / (i + 1) as u128) as usize
}

/// Coefficients of `(1 + u + ... + u^{d-1})^n` by repeated multiplication.
fn gorenstein(n: usize, d: usize) -> Vec<usize> {
    let mut v = vec![1usize];
    for _ in 0..n {
        let mut next = vec![0; v.len() + d - 1];
        for (i, c) in v.iter().enumerate() {
            for k in 0..d {
                next[i + k] += c;
            }
        }
        v = next;
    }
    v
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn smoothness() -> Outcome {
    let cases = [(3, 3, 22), (3, 4, 37), (3, 5, 55), (4, 2, 25), (4, 3, 65), (5, 2, 51)];
    let mut failures = Vec::new();
    let mut count = 0;
    for (n, d, listed) in cases {
        let expected = choose(d + n - 1, n - 1) * n - n * n + 1;
        assert_eq!(expected, listed, "N for ({n}, {d})");
        let dims: Vec<usize> = (0..5u64)
            .into_par_iter()
            .map(|s| {
                let f = sample(n, d, 1000 + s);
                tangent_dim(&associated_form(&f).unwrap(), d).unwrap().tangent_dim
            })
            .collect();
        count += dims.len();
        if dims.iter().any(|&t| t != expected) {
            failures.push(format!("({n},{d}): {dims:?} vs {expected}"));
        }
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{count} tangent dimensions equal N over 6 (n, d) cases")
        } else {
            failures.join("; ")
        },
    )
}

fn relation_space() -> Outcome {
    let cases = [(3, 4, 0), (3, 5, 0), (4, 4, 20), (6, 2, 70)];
    let mut failures = Vec::new();
    for (n, d, listed) in cases {
        let formula = relation_space_dim_formula(n, d).unwrap();
        if formula != BigInt::from(listed) {
            failures.push(format!("formula ({n},{d}) = {formula}, listed {listed}"));
        }
        let brute: Vec<usize> = (0..3u64)
            .into_par_iter()
            .map(|s| relation_space_dim_bruteforce(&sample(n, d, 2000 + s)).unwrap())
            .collect();
        if brute.iter().any(|&b| b != listed) {
            failures.push(format!("elimination ({n},{d}) = {brute:?}, expected {listed}"));
        }
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            "dim R by elimination equals the formula on 12 tuples: 0, 0, 20, 70".into()
        } else {
            failures.join("; ")
        },
    )
}

fn identity_suite() -> Outcome {
    let mut failures: Vec<String> = Vec::new();
    let mut count = 0;
    let mut note = |ok: bool, what: String| {
        count += 1;
        if !ok {
            failures.push(what);
        }
    };
    for p in 1..=40 {
        for r in 1..=40 {
            note(check_a1(p, r).unwrap().pass, format!("A1({p},{r})"));
            note(check_a2(p, r).unwrap().pass, format!("A2({p},{r})"));
        }
    }
    for n in 5..=30 {
        for m in 5..=n + 1 {
            note(check_a3(n, m).unwrap().pass, format!("A3({n},{m})"));
        }
    }
    for m in 2..=40 {
        for n in 2..=30 {
            let (a, b) = check_aux(n, m).unwrap();
            note(a.pass && b.pass, format!("aux({n},{m})"));
        }
    }
    for n in 2..=12 {
        for d in 2..=12 {
            note(check_dimt2_equals_n(n, d).unwrap().pass, format!("dimt2({n},{d})"));
        }
    }
    let detail = if failures.is_empty() {
        format!("{count} identity instances hold")
    } else {
        format!("failed: {}", failures.join(", "))
    };
    outcome(failures.is_empty(), detail)
}

fn associated_form_properties() -> Outcome {
    let cases = [(2, 2), (2, 3), (3, 2), (3, 3)];
    let failures: Vec<String> = cases
        .par_iter()
        .flat_map(|&(n, d)| (0..25u64).into_par_iter().map(move |s| (n, d, s)))
        .filter_map(|(n, d, s)| {
            let f = sample(n, d, 3000 + s);
            let a = associated_form(&f).unwrap();
            let annihilated = f.forms().iter().all(|g| g.apply_polar(&a).unwrap().is_zero());
            let hilbert = apolar_hilbert(&a, d).unwrap() == gorenstein(n, d);
            let mut r = rng(4000 + s);
            let g1 = random_invertible(&mut r, n, 3);
            let g2 = random_invertible(&mut r, n, 3);
            let lhs = associated_form(&f.act(&g1, &g2).unwrap()).unwrap();
            let det = g1.determinant().unwrap() * g2.determinant().unwrap();
            let rhs = act_on_form(&g1.inverse().unwrap().transpose(), &a).unwrap().scale(&det);
            let equivariant = lhs == rhs;
            let roundtrip = roundtrip_span(&f).unwrap();
            (!(annihilated && hilbert && equivariant && roundtrip)).then(|| {
                format!("({n},{d}) seed {s}: a {annihilated} b {hilbert} c {equivariant} d {roundtrip}")
            })
        })
        .collect();
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            "100 tuples: f ∘ A(f) = 0, apolar Hilbert function T, equivariance, round trip".into()
        } else {
            failures.join("; ")
        },
    )
}

fn koszul() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    for (n, d) in [(3, 3), (4, 2), (3, 4)] {
        for s in 0..3u64 {
            let f = sample(n, d, 5000 + s);
            for rho in d..=n * (d - 1) - d {
                checks += 1;
                let c = koszul_kernel_check(&f, rho).unwrap();
                if !c.holds() {
                    failures.push(format!("({n},{d}) seed {s} ρ {rho}: {c:?}"));
                }
            }
        }
    }
    outcome(
        failures.is_empty() && checks > 0,
        if failures.is_empty() {
            format!("{checks} kernels equal the Koszul span")
        } else {
            failures.join("; ")
        },
    )
}

fn hilbert_functions(samples: &[FormTuple]) -> Outcome {
    let failures: Vec<String> = samples
        .par_iter()
        .filter_map(|f| {
            let (n, d) = (f.n(), f.d());
            let h = GradedQuotient::new(f.clone()).hilbert_function();
            let mut expected = gorenstein(n, d);
            expected.push(0);
            let total: usize = h.iter().sum();
            (h != expected || total != d.pow(n as u32)).then(|| format!("({n},{d}): {h:?}"))
        })
        .collect();
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} sampled tuples have Hilbert function (1 + ... + u^(d-1))^n, total d^n", samples.len())
        } else {
            failures.join("; ")
        },
    )
}

fn independence(samples: &[FormTuple]) -> Outcome {
    let failures: Vec<String> = samples
        .par_iter()
        .flat_map(|f| [2usize, 3].into_par_iter().map(move |l| (f, l)))
        .filter_map(|(f, l)| {
            let dim = products_span_dim(f, l);
            let expected = choose(f.n() + l - 1, l);
            (dim != expected).then(|| format!("({},{}) ℓ {l}: {dim} vs {expected}", f.n(), f.d()))
        })
        .collect();
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} tuples: degree 2 and 3 monomials in f are independent", samples.len())
        } else {
            failures.join("; ")
        },
    )
}

fn stratification() -> Outcome {
    let mut corpus: Vec<(String, Polynomial, usize)> = Vec::new();
    for (n, d) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        for s in 0..3u64 {
            let a = associated_form(&sample(n, d, 6000 + s)).unwrap();
            corpus.push((format!("A(f) ({n},{d}) seed {s}"), a, d));
        }
        let mut r = rng(7000 + n as u64 * 10 + d as u64);
        for s in 0..3 {
            for bound in [1, 3] {
                let form = random_form(&mut r, n, n * (d - 1), bound);
                if !form.is_zero() {
                    corpus.push((format!("random ({n},{d}) #{s} bound {bound}"), form, d));
                }
            }
        }
    }
    for (text, n, d) in [
        ("y1^2", 2, 2),
        ("y1^4", 2, 3),
        ("y1^3*y2", 2, 3),
        ("y1^2*y2^2", 2, 3),
        ("y1^3 + y2^3 + y3^3", 3, 2),
        ("y1*y2*y3", 3, 2),
        ("y1^2*y2", 3, 2),
        ("y1^6 + y2^6 + y3^6", 3, 3),
    ] {
        corpus.push((text.to_string(), Polynomial::parse(text, n).unwrap(), d));
    }
    let reports: Vec<(String, StratumReport)> = corpus
        .par_iter()
        .map(|(label, f, d)| (label.clone(), stratify(f, *d).unwrap()))
        .collect();
    let implies = |a: bool, b: bool| !a || b;
    let mut failures: Vec<String> = reports
        .iter()
        .filter(|(_, r)| {
            !(implies(r.in_u_res, r.in_gor_t)
                && implies(r.in_gor_t, r.in_u)
                && implies(r.in_u, r.in_v)
                && r.in_u_res == (r.in_u && !r.in_z))
        })
        .map(|(label, r)| format!("{label}: {r:?}"))
        .collect();
    let z_example = &reports.iter().find(|(l, _)| l == "y1^2").unwrap().1;
    if !z_example.in_z {
        failures.push(format!("y1^2 not in Z: {z_example:?}"));
    }
    let associated_in_u_res = reports
        .iter()
        .filter(|(l, _)| l.starts_with("A(f)"))
        .all(|(_, r)| r.in_u_res);
    if !associated_in_u_res {
        failures.push("an associated form is outside U_Res".into());
    }
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} forms satisfy the flag implications; y1^2 lies in Z", reports.len())
        } else {
            failures.join("; ")
        },
    )
}

fn main() {
    let start = Instant::now();
    let mut results: Vec<(usize, &str, Outcome)> = vec![
        (1, "smoothness dimension", smoothness()),
        (2, "relation space", relation_space()),
        (3, "identity suite", identity_suite()),
        (4, "associated-form properties", associated_form_properties()),
        (6, "Koszul kernel", koszul()),
        (8, "stratification coherence", stratification()),
    ];
    let samples = SAMPLES.lock().unwrap().clone();
    results.push((5, "Hilbert function", hilbert_functions(&samples)));
    results.push((7, "independence of products", independence(&samples)));
    results.sort_by_key(|r| r.0);

    let mut all = true;
    for (k, name, o) in &results {
        all &= o.pass;
        println!("criterion {k} {name}: {} ({})", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance finished in {:.1?}", start.elapsed());
    if !all {
        std::process::exit(1);
    }
}
