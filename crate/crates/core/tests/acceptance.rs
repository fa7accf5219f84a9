//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::io::Write as _;
use std::process::{Command, Stdio};
use std::time::Instant;

use lorflat::catalog::{
    discriminate, in_branch_union, solve_admissible_dim1, solve_admissible_dim2, BranchKind, CatalogFamily, FamilyId,
};
use lorflat::cli::document::{parse_json, AlgebraDocument, TupleDocument};
use lorflat::corpus::{self, SkewSample};
use lorflat::double_extension::{extend, factorize, is_admissible, verify_structure_theorem};
use lorflat::levi_civita::{derived_perp_characterization, is_flat, koszul_product, left_symmetric_check};
use lorflat::linalg::{int, to_dmatrix, to_f64, Matrix, Scalar, Vector};
use lorflat::metric_lie::MetricLieAlgebra;
use lorflat::structure::{
    lorentz_case, milnor_build, riemannian_splitting, skew_canonical_euclidean, skew_canonical_lorentz, LorentzKind,
};
use num_traits::Zero;
use rand::Rng;

/// Tolerance for reconstruction errors and recovered angle rates.
const FLOAT_TOL: f64 = 1e-9;
const SEED: u64 = 20240611;
const POINTS_PER_FAMILY: usize = 25;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog() -> Vec<(CatalogFamily, MetricLieAlgebra)> {
    corpus::catalog_corpus(SEED, POINTS_PER_FAMILY)
        .into_iter()
        .map(|f| {
            let g = f.instantiate().expect("catalog parameters are valid");
            (f, g)
        })
        .collect()
}

/// Riemannian flat semidirect products with commuting rotation generators.
fn riemannian_corpus(n: usize) -> Vec<MetricLieAlgebra> {
    let mut rng = corpus::rng(SEED + 7);
    let j = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
    (0..n)
        .map(|_| {
            let dim_b = rng.gen_range(1..=2);
            let dim_u = rng.gen_range(2..=4);
            let gens: Vec<Matrix> = (0..dim_b)
                .map(|_| {
                    let mut m = Matrix::zeros(0, 0);
                    for _ in 0..dim_u / 2 {
                        m = m.direct_sum(&j.scale(&corpus::random_rational(&mut rng)));
                    }
                    m.direct_sum(&Matrix::zeros(dim_u % 2, dim_u % 2))
                })
                .collect();
            milnor_build(dim_b, dim_u, &gens).expect("commuting skew generators")
        })
        .collect()
}

fn milnor_extensions(n: usize) -> Vec<MetricLieAlgebra> {
    let mut rng = corpus::rng(SEED + 11);
    (0..n)
        .map(|_| extend(&corpus::random_milnor_tuple(&mut rng).expect("tuple")).expect("admissible").algebra)
        .collect()
}

fn abelian_extensions(n: usize) -> Vec<MetricLieAlgebra> {
    let mut rng = corpus::rng(SEED + 13);
    (0..n)
        .map(|i| {
            let t = corpus::random_abelian_tuple(&mut rng, 1 + i % 2, i % 3 == 0).expect("tuple");
            extend(&t).expect("admissible").algebra
        })
        .collect()
}

/// Every flat algebra used by the suite.
fn flat_corpus() -> Vec<MetricLieAlgebra> {
    let mut out: Vec<MetricLieAlgebra> = catalog().into_iter().map(|(_, g)| g).collect();
    out.extend(milnor_extensions(20));
    out.extend(abelian_extensions(20));
    out.extend(riemannian_corpus(20));
    out
}

fn criterion_1() -> Outcome {
    let corpus = catalog();
    for (f, g) in &corpus {
        let n = g.dim();
        ensure(common::jacobi_holds(g), || format!("{f}: Jacobi fails"))?;
        ensure(common::flat(g), || format!("{f}: curvature nonzero"))?;
        ensure(is_flat(g).is_flat(), || format!("{f}: library flatness disagrees"))?;
        let sig = common::signature(&common::mat(g.gram().matrix()));
        ensure(sig == (1, n - 1), || format!("{f}: signature {sig:?}"))?;
        let h = common::modular(g);
        ensure(h.iter().any(|x| !x.is_zero()), || format!("{f}: h = 0"))?;
        ensure(common::inner(g, &h, &h).is_zero(), || format!("{f}: <h,h> != 0"))?;
        ensure(lorflat::metric_lie::modular_vector(g).into_inner() == h, || format!("{f}: modular vector mismatch"))?;
    }
    Ok(format!("{} algebras over 6 families", corpus.len()))
}

fn criterion_2() -> Outcome {
    let corpus = catalog();
    for (f, g) in &corpus {
        let r = verify_structure_theorem(g).map_err(|e| format!("{f}: {e}"))?;
        ensure(r.all_pass(), || format!("{f}: {r:?}"))?;
        let p = common::koszul(g);
        let h = common::modular(g);
        let n = g.dim();
        let lh_zero = (0..n).all(|j| (0..n).all(|k| (0..n).map(|i| &h[i] * &p[i][j][k]).sum::<Scalar>().is_zero()));
        ensure(lh_zero, || format!("{f}: oracle L_h != 0"))?;
    }
    Ok(format!("{} algebras, zero failures", corpus.len()))
}

fn criterion_3() -> Outcome {
    let mut corpus: Vec<MetricLieAlgebra> = catalog().into_iter().map(|(_, g)| g).collect();
    corpus.extend(milnor_extensions(20));
    corpus.extend(abelian_extensions(20));
    for g in &corpus {
        let fz = factorize(g).map_err(|e| format!("factorize: {e}"))?;
        let t = &fz.tuple;
        ensure(is_admissible(t).map_err(|e| e.to_string())?.admissible(), || "recovered tuple not admissible".into())?;
        ensure(t.dee.trace() != -t.mu.clone(), || "tr D = -mu".into())?;
        ensure(fz.reproduces(g).map_err(|e| e.to_string())?, || "re-extension differs".into())?;
        let p = common::mat(&fz.change_of_basis);
        let pt: common::M = (0..p.len()).map(|i| (0..p.len()).map(|j| p[j][i].clone()).collect()).collect();
        let pulled = common::mul(&common::mul(&pt, &common::mat(g.gram().matrix())), &p);
        let rebuilt = extend(t).map_err(|e| e.to_string())?.algebra;
        ensure(pulled == common::mat(rebuilt.gram().matrix()), || "Gram of the re-extension differs".into())?;
    }
    Ok(format!("{} algebras factor and re-extend exactly", corpus.len()))
}

fn criterion_4() -> Outcome {
    let mut rng = corpus::rng(SEED + 4);
    let mut tuples = Vec::new();
    for i in 0..200 {
        tuples.push(corpus::random_abelian_tuple(&mut rng, 1 + i % 2, i % 4 < 2).map_err(|e| e.to_string())?);
    }
    for _ in 0..20 {
        tuples.push(corpus::random_milnor_tuple(&mut rng).map_err(|e| e.to_string())?);
    }
    for t in &tuples {
        let g = extend(t).map_err(|e| e.to_string())?.algebra;
        let expected = Vector::basis(g.dim(), 0).scale(&(&t.mu + t.dee.trace()));
        ensure(common::modular(&g) == expected.into_inner(), || format!("h mismatch for mu = {}", t.mu))?;
    }
    Ok("200 abelian + 20 Milnor tuples".into())
}

fn criterion_5() -> Outcome {
    let mut rng = corpus::rng(SEED + 5);
    for _ in 0..20 {
        let mu = corpus::random_nonzero_rational(&mut rng);
        let k1: Vec<BranchKind> = solve_admissible_dim1(&mu).map_err(|e| e.to_string())?.iter().map(|b| b.kind).collect();
        ensure(k1 == [BranchKind::LineZero, BranchKind::LineMu], || format!("dim 1 branches {k1:?}"))?;
        let k2: Vec<BranchKind> = solve_admissible_dim2(&mu).map_err(|e| e.to_string())?.iter().map(|b| b.kind).collect();
        ensure(k2 == [BranchKind::A, BranchKind::B, BranchKind::C, BranchKind::D], || format!("dim 2 branches {k2:?}"))?;
    }
    let mut summary = Vec::new();
    for dim in [1, 2] {
        let (mut admissible, mut outside, mut false_member) = (0, 0, 0);
        for _ in 0..1000 {
            let mu = corpus::random_nonzero_rational(&mut rng);
            let (xi, dee) = corpus::refutation_sample(&mut rng, dim, &mu);
            let member = in_branch_union(&mu, &xi, &dee);
            let t = corpus::abelian_tuple(&mu, xi, dee).map_err(|e| e.to_string())?;
            let ok = is_admissible(&t).map_err(|e| e.to_string())?.admissible();
            admissible += ok as usize;
            outside += (ok && !member) as usize;
            false_member += (!ok && member) as usize;
        }
        let mut failing_instances = 0;
        for _ in 0..1000 {
            let rotate = rng.gen_bool(0.5);
            let t = corpus::random_abelian_tuple(&mut rng, dim, rotate).map_err(|e| e.to_string())?;
            failing_instances += (!is_admissible(&t).map_err(|e| e.to_string())?.admissible()) as usize;
        }
        ensure(outside == 0 && false_member == 0 && failing_instances == 0, || {
            format!("dim {dim}: {outside} admissible outside, {false_member} non-admissible inside, {failing_instances} failing instances")
        })?;
        ensure(admissible > 0 && admissible < 1000, || format!("dim {dim}: degenerate sample ({admissible} admissible)"))?;
        summary.push(format!("dim {dim}: {admissible}/1000 admissible, all inside the branches"));
    }
    Ok(summary.join("; "))
}

fn criterion_6() -> Outcome {
    let mut flat: Vec<MetricLieAlgebra> = catalog().into_iter().step_by(7).take(20).map(|(_, g)| g).collect();
    flat.extend(milnor_extensions(15));
    flat.extend(riemannian_corpus(15));
    let mut rng = corpus::rng(SEED + 6);
    let perturbed: Vec<MetricLieAlgebra> = flat
        .iter()
        .map(|g| loop {
            if let Some(p) = corpus::perturb_metric(&mut rng, g) {
                break p;
            }
        })
        .collect();
    let mut nonflat = 0;
    for (i, g) in flat.iter().chain(&perturbed).enumerate() {
        ensure(common::jacobi_holds(g), || format!("input {i} fails Jacobi"))?;
        let oracle = common::flat(g);
        let lib = is_flat(g).is_flat();
        let lsa = left_symmetric_check(&koszul_product(g));
        ensure(lib == lsa && lib == oracle, || format!("input {i}: is_flat {lib}, left-symmetric {lsa}, oracle {oracle}"))?;
        ensure(i >= 50 || lib, || format!("flat input {i} reported nonflat"))?;
        nonflat += (!lib) as usize;
    }
    ensure(nonflat >= 25, || format!("only {nonflat} perturbed inputs are nonflat"))?;
    Ok(format!("{} inputs agree ({nonflat} nonflat)", flat.len() + perturbed.len()))
}

/// All words of length `n` in the given operators vanish, so every
/// combination of them is nilpotent of index at most `n`.
fn words_vanish(ops: &[common::M], n: usize) -> bool {
    if ops.is_empty() {
        return true;
    }
    let mut level: Vec<common::M> = ops.to_vec();
    for _ in 1..n {
        level = level.iter().flat_map(|w| ops.iter().map(move |r| common::mul(r, w))).filter(|w| !common::is_zero(w)).collect();
        if level.is_empty() {
            return true;
        }
    }
    level.iter().all(common::is_zero)
}

fn criterion_7() -> Outcome {
    let corpus = flat_corpus();
    let mut euclidean = 0;
    for (i, g) in corpus.iter().enumerate() {
        let n = g.dim();
        let r = derived_perp_characterization(g);
        ensure(r.agree, || format!("member {i}: [g,g]^perp and self-adjoint R_u differ"))?;
        ensure(r.orthogonal_of_derived.len() == n - common::derived_dim(g), || format!("member {i}: wrong dimension"))?;
        let p = common::koszul(g);
        let gm = common::mat(g.gram().matrix());
        let rights: Vec<common::M> = r.orthogonal_of_derived.iter().map(|w| common::right(&p, w.as_slice())).collect();
        for rw in &rights {
            let rt: common::M = (0..n).map(|a| (0..n).map(|b| rw[b][a].clone()).collect()).collect();
            ensure(common::mul(&rt, &gm) == common::mul(&gm, rw), || format!("member {i}: R_u not self-adjoint"))?;
        }
        ensure(words_vanish(&rights, n), || format!("member {i}: R_u not nilpotent on [g,g]^perp"))?;
        if g.gram().signature().0 == 0 {
            euclidean += 1;
            let s = riemannian_splitting(g).map_err(|e| format!("member {i}: {e}"))?;
            ensure(s.checks.routes_agree, || format!("member {i}: Riemannian routes differ"))?;
        }
    }
    Ok(format!("{} flat members ({euclidean} Riemannian)", corpus.len()))
}

fn rates_match(found: &[f64], expected: &[Scalar]) -> bool {
    found.len() == expected.len() && found.iter().zip(expected).all(|(a, b)| (a - to_f64(b)).abs() <= FLOAT_TOL)
}

fn criterion_8() -> Outcome {
    let mut rng = corpus::rng(SEED + 8);
    let mut worst: f64 = 0.0;
    for i in 0..100 {
        let s: SkewSample = corpus::euclidean_skew_sample(&mut rng);
        let c = skew_canonical_euclidean(&s.f).map_err(|e| format!("euclidean {i}: {e}"))?;
        let f = to_dmatrix(&s.f);
        worst = worst.max(c.reconstruction_error(&f));
        ensure(c.lorentz.is_none() && c.kernel.len() == s.f.rows() - 2 * s.rates.len(), || format!("euclidean {i}: block structure"))?;
        ensure(c.reconstruction_error(&f) <= FLOAT_TOL && c.invariants_hold(&f), || format!("euclidean {i}: invariants"))?;
        ensure(rates_match(&c.angle_rates(), &s.rates), || format!("euclidean {i}: rates {:?}", c.angle_rates()))?;
    }
    let kinds = [LorentzKind::CaseI, LorentzKind::CaseII, LorentzKind::CaseIII];
    for i in 0..100 {
        let kind = kinds[i % 3];
        let s = corpus::lorentz_skew_sample(&mut rng, kind);
        let found = lorentz_case(&s.f, &s.metric).map_err(|e| format!("lorentz {i}: {e}"))?;
        ensure(found == kind, || format!("lorentz {i}: {found} identified as {kind}"))?;
        let c = skew_canonical_lorentz(&s.f, &s.metric).map_err(|e| format!("lorentz {i}: {e}"))?;
        let f = to_dmatrix(&s.f);
        worst = worst.max(c.reconstruction_error(&f));
        let l = c.lorentz.as_ref().ok_or_else(|| format!("lorentz {i}: no Lorentzian block"))?;
        ensure(l.kind() == kind, || format!("lorentz {i}: form reports {}", l.kind()))?;
        ensure(c.reconstruction_error(&f) <= FLOAT_TOL && c.invariants_hold(&f), || format!("lorentz {i}: invariants"))?;
        ensure(rates_match(&c.angle_rates(), &s.rates), || format!("lorentz {i}: rates"))?;
        if let Some(a) = &s.lorentz_alpha {
            let got = l.alpha().unwrap_or(f64::NAN);
            ensure((got - to_f64(a)).abs() <= FLOAT_TOL, || format!("lorentz {i}: alpha {got} vs {a}"))?;
        }
    }
    Ok(format!("100 Euclidean + 100 Lorentzian, worst reconstruction error {worst:.1e}"))
}

fn criterion_9() -> Outcome {
    let corpus = catalog();
    for (f, g) in &corpus {
        let d = discriminate(g).map_err(|e| format!("{f}: {e}"))?;
        ensure(d.matches == [f.id], || format!("{f}: matched {:?}", d.matches))?;
        let dd = common::derived_dim(g);
        ensure(d.derived_dim == dd, || format!("{f}: derived dim {} vs oracle {dd}", d.derived_dim))?;
        let allowed: &[usize] = match f.id {
            FamilyId::G2 => &[1],
            FamilyId::G3 => &[1],
            FamilyId::G3P => &[2],
            FamilyId::G4 => &[2],
            FamilyId::G4P => &[1, 3],
        };
        ensure(allowed.contains(&dd), || format!("{f}: dim [g,g] = {dd}"))?;
    }
    Ok(format!("{} instances, every family separated", corpus.len()))
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn lorflat(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lorflat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().expect("stdin").write_all(stdin.as_bytes()).expect("write stdin");
    let out = child.wait_with_output().expect("binary finishes");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

fn criterion_10() -> Outcome {
    let mut algebras = flat_corpus();
    let mut rng = corpus::rng(SEED + 10);
    let perturbed: Vec<_> = algebras.iter().take(40).filter_map(|g| corpus::perturb_metric(&mut rng, g)).collect();
    algebras.extend(perturbed);
    for (i, g) in algebras.iter().enumerate() {
        let text = serde_json::to_string_pretty(&AlgebraDocument::from_algebra(g)).map_err(|e| e.to_string())?;
        let back = parse_json::<AlgebraDocument>(&text).and_then(|d| d.to_algebra()).map_err(|e| format!("algebra {i}: {e}"))?;
        ensure(&back == g, || format!("algebra {i}: round trip differs"))?;
    }
    let mut tuples = 0;
    for g in algebras.iter().filter(|g| factorize(g).is_ok()) {
        let fz = factorize(g).map_err(|e| e.to_string())?;
        let doc = TupleDocument::from_tuple(&fz.tuple, Some(&fz.change_of_basis));
        let text = serde_json::to_string(&doc).map_err(|e| e.to_string())?;
        let (t, p) = parse_json::<TupleDocument>(&text).and_then(|d| d.to_tuple()).map_err(|e| e.to_string())?;
        ensure(t == fz.tuple && p.as_ref() == Some(&fz.change_of_basis), || "tuple round trip differs".into())?;
        tuples += 1;
    }

    let g3 = serde_json::to_string(&AlgebraDocument::from_algebra(&CatalogFamily::g3(int(1), int(0)).instantiate().unwrap()))
        .unwrap();
    let nonflat = serde_json::to_string(&AlgebraDocument::from_algebra(&perturbed_nonflat())).unwrap();
    let abelian = r#"{"dim":2,"basis":["x","y"],"brackets":[],"metric":[["1","0"],["0","1"]]}"#;
    let lorentz_abelian = r#"{"dim":2,"basis":["x","y"],"brackets":[],"metric":[["0","1"],["1","0"]]}"#;
    let bad_tuple = r#"{"base":{"dim":1,"basis":["b1"],"brackets":[],"metric":[["1"]]},"xi":[["1"]],"dee":[["2"]],"mu":"1","b0":["0"]}"#;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let g3_path = dir.path().join("g3.json");
    std::fs::write(&g3_path, &g3).map_err(|e| e.to_string())?;
    let g3_path = g3_path.to_str().expect("utf-8 path");

    type Case<'a> = (&'a str, Vec<&'a str>, String, i32);
    let cases: Vec<Case> = vec![
        ("check G3 file", vec!["check", g3_path], String::new(), 0),
        ("check abelian", vec!["check", "-"], abelian.into(), 0),
        ("check nonflat", vec!["check", "-"], nonflat.clone(), 1),
        ("factor G3 roundtrip", vec!["factor", "--roundtrip", g3_path], String::new(), 0),
        ("factor unimodular", vec!["factor", "-"], lorentz_abelian.into(), 1),
        ("extend non-admissible", vec!["extend", "-"], bad_tuple.into(), 1),
        ("canon not skew", vec!["canon", "-"], r#"{"matrix":[["0","1"],["1","0"]]}"#.into(), 1),
        ("canon Euclidean", vec!["canon", "-"], r#"{"matrix":[["0","2"],["-2","0"]]}"#.into(), 0),
        ("catalog G3P", vec!["catalog", "G3P", "--mu", "2", "--alpha", "-1/3"], String::new(), 0),
        ("solve dim 2", vec!["solve", "2", "--mu", "1"], String::new(), 0),
        ("syntax error", vec!["check", "-"], "{\"dim\": 2,".into(), 2),
        ("rational 1/0", vec!["check", "-"], g3.replacen("\"1\"", "\"1/0\"", 1), 2),
        ("unknown field", vec!["check", "-"], abelian.replace("\"dim\"", "\"extra\":1,\"dim\""), 2),
        ("shape mismatch", vec!["check", "-"], abelian.replace("[\"0\",\"1\"]]", "[\"0\"]]"), 2),
        ("degenerate metric", vec!["check", "-"], abelian.replace("[\"0\",\"1\"]]", "[\"0\",\"0\"]]"), 2),
        ("nonsymmetric metric", vec!["check", "-"], abelian.replace("[[\"1\",\"0\"]", "[[\"1\",\"5\"]"), 2),
        ("bracket i >= j", vec!["check", "-"], abelian.replace("[]", "[{\"i\":1,\"j\":0,\"coeffs\":{}}]"), 2),
        ("missing file", vec!["check", "/nonexistent/doc.json"], String::new(), 2),
        ("unknown family", vec!["catalog", "G5", "--mu", "1"], String::new(), 2),
        ("catalog mu = 0", vec!["catalog", "G2", "--mu", "0"], String::new(), 2),
        ("catalog eps = 2", vec!["catalog", "G4P", "--mu", "1", "--eps", "2"], String::new(), 2),
        ("solve dim 3", vec!["solve", "3", "--mu", "1"], String::new(), 2),
        ("solve mu = 0", vec!["solve", "1", "--mu", "0"], String::new(), 2),
        ("canon --lorentz without metric", vec!["canon", "--lorentz", "-"], r#"{"matrix":[["0"]]}"#.into(), 2),
        ("unknown subcommand", vec!["frobnicate"], String::new(), 2),
    ];
    for (name, args, stdin, expected) in &cases {
        let r = lorflat(args, stdin);
        ensure(r.code == *expected, || format!("{name}: exit {} (expected {expected}); stderr: {}", r.code, r.stderr.trim()))?;
        if *expected == 2 {
            ensure(!r.stderr.trim().is_empty(), || format!("{name}: no diagnostic"))?;
        }
    }
    let r = lorflat(&["check", "-"], &g3.replacen("\"1\"", "\"1/0\"", 1));
    ensure(r.stderr.contains("metric["), || format!("1/0 diagnostic lacks a field path: {}", r.stderr))?;
    let r = lorflat(&["catalog", "G4", "--mu", "3/2", "--lambda", "-2", "--alpha", "1/7"], "");
    let back = parse_json::<AlgebraDocument>(&r.stdout).and_then(|d| d.to_algebra()).map_err(|e| e.to_string())?;
    let expected = CatalogFamily::g4(Scalar::new(3.into(), 2.into()), int(-2), Scalar::new(1.into(), 7.into()), int(0));
    ensure(back == expected.instantiate().unwrap(), || "catalog output does not round trip".into())?;
    Ok(format!("{} algebras and {tuples} tuples round trip; {} exit-code cases", algebras.len(), cases.len()))
}

fn perturbed_nonflat() -> MetricLieAlgebra {
    let g = CatalogFamily::g3(int(1), int(0)).instantiate().unwrap();
    let mut m = g.gram().matrix().clone();
    m[(2, 2)] = int(2);
    m[(0, 0)] = int(1);
    let g = g.with_gram(lorflat::linalg::GramMatrix::new(m).unwrap()).unwrap();
    assert!(!is_flat(&g).is_flat());
    g
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("catalog soundness", criterion_1),
        ("structure theorem on the catalog", criterion_2),
        ("factorization and exact re-extension", criterion_3),
        ("modular vector of a double extension", criterion_4),
        ("solver branches and refutation", criterion_5),
        ("flat iff left-symmetric", criterion_6),
        ("derived-perp characterization", criterion_7),
        ("skew canonical forms", criterion_8),
        ("catalog discriminants", criterion_9),
        ("CLI round trip and exit codes", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
