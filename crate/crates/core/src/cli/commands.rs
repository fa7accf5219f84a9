use serde::Serialize;
use serde_json::json;

use super::document::{emit_vector, parse_json, AlgebraDocument, CanonDocument, TupleDocument};
use super::{Outcome, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK};
use crate::catalog::{discriminate, solve_admissible_dim1, solve_admissible_dim2, CatalogFamily, FamilyId};
use crate::double_extension::{extend as extend_tuple, factorize, verify_structure_theorem};
use crate::error::Error;
use crate::levi_civita::{is_flat, modular_properties_check};
use crate::linalg::{format_scalar, parse_scalar, GramMatrix};
use crate::metric_lie::{classify_signature, is_unimodular, jacobi_check, modular_vector, MetricLieAlgebra, SignatureClass};
use crate::structure::{skew_canonical_euclidean, skew_canonical_lorentz, LorentzCase};

fn input_error(msg: impl std::fmt::Display) -> Outcome {
    Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_INPUT }
}

fn check_failure(msg: impl std::fmt::Display) -> Outcome {
    Outcome { stdout: String::new(), stderr: format!("{msg}\n"), code: EXIT_CHECK_FAILED }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularSummary {
    pub h_norm: String,
    pub in_derived: bool,
    pub orthogonal_to_derived: bool,
    pub right_symmetric: bool,
    pub right_nilpotent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub left_h_vanishes: bool,
    pub h_two_sided_ideal: bool,
    pub h_perp_two_sided_ideal: bool,
}

/// Everything `check` reports about an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub dim: usize,
    pub jacobi: bool,
    pub jacobi_violation: Option<(usize, usize, usize)>,
    pub signature: (usize, usize),
    pub signature_class: String,
    pub flat: bool,
    pub curvature_witness: Option<(usize, usize)>,
    pub unimodular: bool,
    pub modular_vector: Vec<String>,
    pub modular_vector_text: String,
    pub modular_properties: Option<ModularSummary>,
    pub structure_theorem: Option<StructureSummary>,
    pub catalog_match: Option<Vec<String>>,
    pub passed: bool,
}

pub fn check_report(g: &MetricLieAlgebra) -> CheckReport {
    let jv = jacobi_check(g);
    let jacobi = jv.holds();
    let signature = g.gram().signature();
    let signature_class = match classify_signature(g) {
        SignatureClass::Euclidean => "euclidean",
        SignatureClass::Lorentzian => "lorentzian",
        SignatureClass::OtherPseudo { .. } => "pseudo-riemannian",
    }
    .to_string();
    let fv = is_flat(g);
    let flat = fv.is_flat();
    let h = modular_vector(g);
    let unimodular = is_unimodular(g);
    let modular_properties = (jacobi && flat).then(|| {
        let r = modular_properties_check(g);
        ModularSummary {
            h_norm: format_scalar(&r.h_norm),
            in_derived: r.in_derived,
            orthogonal_to_derived: r.orthogonal_to_derived,
            right_symmetric: r.right_symmetric,
            right_nilpotent: r.right_nilpotent,
        }
    });
    let applicable = jacobi && flat && !unimodular && signature_class == "lorentzian";
    let structure_theorem = applicable.then(|| verify_structure_theorem(g).ok()).flatten().map(|r| StructureSummary {
        left_h_vanishes: r.left_h_vanishes,
        h_two_sided_ideal: r.h_two_sided_ideal,
        h_perp_two_sided_ideal: r.h_perp_two_sided_ideal,
    });
    let catalog_match =
        applicable.then(|| discriminate(g).ok()).flatten().map(|d| d.matches.iter().map(FamilyId::to_string).collect());
    let modular_ok = modular_properties.as_ref().is_none_or(|m| {
        m.h_norm == "0" && m.in_derived && m.orthogonal_to_derived && m.right_symmetric && m.right_nilpotent
    });
    let structure_ok = match (&structure_theorem, applicable) {
        (Some(s), _) => s.left_h_vanishes && s.h_two_sided_ideal && s.h_perp_two_sided_ideal,
        (None, applicable) => !applicable,
    };
    CheckReport {
        dim: g.dim(),
        jacobi,
        jacobi_violation: jv.violation.map(|v| v.triple),
        signature,
        signature_class,
        flat,
        curvature_witness: fv.witness.map(|(ij, _)| ij),
        unimodular,
        modular_vector: emit_vector(&h),
        modular_vector_text: g.format_vector(&h),
        modular_properties,
        structure_theorem,
        catalog_match,
        passed: jacobi && flat && modular_ok && structure_ok,
    }
}

fn render_check(r: &CheckReport) -> String {
    let (neg, pos) = r.signature;
    let mut s = format!(
        "flat: {}, signature: ({neg},{pos}), unimodular: {}, h = {}\n",
        yes(r.flat),
        yes(r.unimodular),
        r.modular_vector_text
    );
    s += &format!("dim: {}\n", r.dim);
    match r.jacobi_violation {
        None => s += "jacobi: yes\n",
        Some((i, j, k)) => s += &format!("jacobi: no (fails on basis triple {i},{j},{k})\n"),
    }
    s += &format!("signature: ({neg},{pos}) {}\n", r.signature_class);
    match r.curvature_witness {
        None => s += "flat: yes\n",
        Some((i, j)) => s += &format!("flat: no (K(e{i},e{j}) != 0)\n"),
    }
    s += &format!("unimodular: {}\n", yes(r.unimodular));
    s += &format!("modular vector: {}\n", r.modular_vector_text);
    if let Some(m) = &r.modular_properties {
        s += &format!(
            "modular vector properties: <h,h> = {}, h in [g,g]: {}, h orthogonal to [g,g]: {}, R_h self-adjoint: {}, R_h nilpotent: {}\n",
            m.h_norm,
            yes(m.in_derived),
            yes(m.orthogonal_to_derived),
            yes(m.right_symmetric),
            yes(m.right_nilpotent)
        );
    }
    if let Some(t) = &r.structure_theorem {
        s += &format!(
            "structure: L_h = 0: {}, span{{h}} two-sided ideal: {}, h^perp two-sided ideal: {}\n",
            yes(t.left_h_vanishes),
            yes(t.h_two_sided_ideal),
            yes(t.h_perp_two_sided_ideal)
        );
    }
    if let Some(m) = &r.catalog_match {
        s += &format!("catalog: {}\n", m.join(", "));
    }
    s += &format!("verdict: {}\n", if r.passed { "pass" } else { "fail" });
    s
}

fn report_outcome(r: &CheckReport, json: bool) -> (String, i32) {
    let text = if json { pretty(r) } else { render_check(r) };
    (text, if r.passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn load_algebra(text: &str) -> Result<MetricLieAlgebra, Outcome> {
    let doc: AlgebraDocument = parse_json(text).map_err(input_error)?;
    doc.to_algebra().map_err(input_error)
}

pub fn check(text: &str, json: bool) -> Outcome {
    let g = match load_algebra(text) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let (stdout, code) = report_outcome(&check_report(&g), json);
    Outcome { stdout, stderr: String::new(), code }
}

pub fn extend(text: &str, verify: bool, json: bool) -> Outcome {
    let doc: TupleDocument = match parse_json(text) {
        Ok(d) => d,
        Err(e) => return input_error(e),
    };
    let (tuple, _) = match doc.to_tuple() {
        Ok(t) => t,
        Err(e) => return input_error(e),
    };
    let g = match extend_tuple(&tuple) {
        Ok(r) => r.algebra,
        Err(Error::NotAdmissible(failed)) => return check_failure(format!("not admissible: fails {failed}")),
        Err(e) => return check_failure(e),
    };
    let stdout = pretty(&AlgebraDocument::from_algebra(&g));
    if !verify {
        return Outcome { stdout, stderr: String::new(), code: EXIT_OK };
    }
    let (stderr, code) = report_outcome(&check_report(&g), json);
    Outcome { stdout, stderr, code }
}

pub fn factor(text: &str, roundtrip: bool) -> Outcome {
    let g = match load_algebra(text) {
        Ok(g) => g,
        Err(o) => return o,
    };
    let f = match factorize(&g) {
        Ok(f) => f,
        Err(e) => return check_failure(e),
    };
    let stdout = pretty(&TupleDocument::from_tuple(&f.tuple, Some(&f.change_of_basis)));
    if !roundtrip {
        return Outcome { stdout, stderr: String::new(), code: EXIT_OK };
    }
    match f.reproduces(&g) {
        Ok(true) => Outcome { stdout, stderr: "roundtrip: exact\n".into(), code: EXIT_OK },
        Ok(false) => Outcome { stdout, stderr: "roundtrip: mismatch\n".into(), code: EXIT_CHECK_FAILED },
        Err(e) => Outcome { stdout, stderr: format!("roundtrip: {e}\n"), code: EXIT_CHECK_FAILED },
    }
}

pub fn catalog(family: &str, params: [&String; 6]) -> Outcome {
    let id: FamilyId = match family.parse() {
        Ok(id) => id,
        Err(e) => return input_error(e),
    };
    let names = ["--mu", "--alpha", "--beta", "--lambda", "--gamma", "--eps"];
    let mut values = Vec::with_capacity(6);
    for (name, raw) in names.iter().zip(params) {
        match parse_scalar(raw) {
            Some(v) => values.push(v),
            None => return input_error(format!("{name}: invalid rational {raw:?}")),
        }
    }
    let [mu, alpha, beta, lambda, gamma, eps]: [_; 6] = values.try_into().expect("six parameters");
    let fam = CatalogFamily { id, mu, alpha, beta, lambda, gamma, eps };
    match fam.instantiate() {
        Ok(g) => Outcome { stdout: pretty(&AlgebraDocument::from_algebra(&g)), stderr: String::new(), code: EXIT_OK },
        Err(e) => input_error(e),
    }
}

pub fn solve(dim: usize, mu: &str, json: bool) -> Outcome {
    let Some(mu) = parse_scalar(mu) else {
        return input_error(format!("--mu: invalid rational {mu:?}"));
    };
    let branches = match dim {
        1 => solve_admissible_dim1(&mu),
        2 => solve_admissible_dim2(&mu),
        _ => return input_error(format!("solver covers base dimensions 1 and 2, got {dim}")),
    };
    let branches = match branches {
        Ok(b) => b,
        Err(e) => return input_error(e),
    };
    let stdout = if json {
        let list: Vec<_> = branches
            .iter()
            .map(|b| {
                json!({
                    "label": b.label(),
                    "description": b.description(),
                    "free_parameters": b.free_parameters(),
                    "mu": format_scalar(&b.mu),
                })
            })
            .collect();
        pretty(&list)
    } else {
        let mut s = format!("{} branches on the abelian Euclidean base of dimension {dim} (b0 free in each):\n", branches.len());
        for b in &branches {
            let free = if b.free_parameters().is_empty() { String::new() } else { format!(" [free: {}]", b.free_parameters().join(", ")) };
            s += &format!("  {}: {}{}\n", b.label(), b.description(), free);
        }
        s
    };
    Outcome { stdout, stderr: String::new(), code: EXIT_OK }
}

fn approx(x: f64) -> String {
    format!("{:?}", (x * 1e9).round() / 1e9)
}

fn approx_vec(v: &nalgebra::DVector<f64>) -> Vec<String> {
    v.iter().map(|x| approx(*x)).collect()
}

pub fn canon(text: &str, lorentz: bool, json: bool) -> Outcome {
    let doc: CanonDocument = match parse_json(text) {
        Ok(d) => d,
        Err(e) => return input_error(e),
    };
    let (f, g) = match doc.to_parts() {
        Ok(p) => p,
        Err(e) => return input_error(e),
    };
    let form = if lorentz {
        let Some(g) = g else {
            return input_error("metric: required with --lorentz");
        };
        skew_canonical_lorentz(&f, &g)
    } else {
        if let Some(g) = g {
            if g != GramMatrix::identity(f.rows()) {
                return input_error("metric: only the identity is accepted without --lorentz");
            }
        }
        skew_canonical_euclidean(&f)
    };
    let form = match form {
        Ok(c) => c,
        Err(e) => return check_failure(e),
    };
    let ff = crate::linalg::to_dmatrix(&f);
    let ok = form.invariants_hold(&ff);
    let err = form.reconstruction_error(&ff);
    let code = if ok { EXIT_OK } else { EXIT_CHECK_FAILED };
    let stdout = if json {
        let lorentz = form.lorentz.as_ref().map(|l| {
            let basis: Vec<Vec<String>> = match l {
                LorentzCase::CaseI { v } => vec![approx_vec(v)],
                LorentzCase::CaseII { e, ebar, .. } => vec![approx_vec(e), approx_vec(ebar)],
                LorentzCase::CaseIII { e, ebar, f, .. } => vec![approx_vec(e), approx_vec(ebar), approx_vec(f)],
            };
            json!({ "case": l.kind().to_string(), "alpha": l.alpha(), "basis": basis })
        });
        let blocks: Vec<_> = form
            .blocks
            .iter()
            .map(|b| json!({ "alpha": b.alpha, "e": approx_vec(&b.e), "f": approx_vec(&b.f) }))
            .collect();
        let kernel: Vec<_> = form.kernel.iter().map(approx_vec).collect();
        pretty(&json!({
            "lorentz": lorentz,
            "blocks": blocks,
            "kernel": kernel,
            "reconstruction_error": err,
            "invariants_hold": ok,
        }))
    } else {
        let mut s = String::new();
        if let Some(l) = &form.lorentz {
            match l.alpha() {
                Some(a) => s += &format!("{}, alpha ≈ {}\n", l.kind(), approx(a)),
                None => s += &format!("{}\n", l.kind()),
            }
        }
        for b in &form.blocks {
            s += &format!("rotation block, alpha ≈ {}\n", approx(b.alpha));
        }
        s += &format!("kernel dimension: {}\n", form.kernel.len());
        s += &format!("reconstruction error: {err:.3e}\n");
        s += &format!("invariants: {}\n", if ok { "hold" } else { "violated" });
        s
    };
    Outcome { stdout, stderr: String::new(), code }
}
