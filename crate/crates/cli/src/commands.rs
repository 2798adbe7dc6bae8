use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::Result;
use num_traits::One;
use serde_json::{json, Value};
use twobridge::alexander::{alexander_polynomial, knot_determinant, torus_targets};
use twobridge::numeric::{verify_form, FormVerification, DEFAULT_ROOT_TOL};
use twobridge::obstruction::{obstruct, scan, ObstructionReport, ObstructionVerdict};
use twobridge::presentation::{build_relator, build_word};
use twobridge::riley::{certify_batch, property_l_certificate, PropertyLCertificate, RileyData, Verdict};
use twobridge::{enumerate_forms, IntPolynomial, TwoBridgeForm};

use crate::report::{
    self, class, class_name, coeff_cell, coeffs, complex, gf2_bits, int, key_cell, Report, Style, Table,
};

fn inputs_pq(p: i64, q: i64) -> Value {
    json!({ "p": p, "q": q })
}

fn poly_text(p: &IntPolynomial, var: &str) -> String {
    p.display(var).to_string()
}

pub fn present(p: i64, q: i64, f: &TwoBridgeForm) -> Report {
    let word = build_word(f);
    let relator = build_relator(f);
    let eps = f.epsilon_sequence();
    let eps_text: Vec<String> = eps.iter().map(|e| format!("{e:+}")).collect();

    let mut text = String::new();
    writeln!(text, "form      {f}{}", if f.mirror_flag() { " (mirror)" } else { "" }).unwrap();
    writeln!(text, "class     {}", f.classify()).unwrap();
    writeln!(text, "key       {}", key_cell(&f.canonical_key())).unwrap();
    writeln!(text, "epsilon   {}", eps_text.join(" ")).unwrap();
    writeln!(text, "sigma     {}", f.sigma()).unwrap();
    writeln!(text, "word      {word}").unwrap();
    writeln!(text, "relator   {relator}").unwrap();

    let mut table = Table::new(&[
        "p",
        "q",
        "mirror_flag",
        "class",
        "canonical_key",
        "epsilon",
        "sigma",
        "word",
        "relator",
    ]);
    table.push(vec![
        f.p().to_string(),
        f.q().to_string(),
        f.mirror_flag().to_string(),
        class_name(&f.classify()),
        key_cell(&f.canonical_key()),
        eps_text.join(" "),
        f.sigma().to_string(),
        word.to_string(),
        relator.to_string(),
    ]);

    Report {
        command: "present",
        inputs: inputs_pq(p, q),
        results: json!({
            "form": report::form(f),
            "class": class(&f.classify()),
            "canonical_key": f.canonical_key(),
            "epsilon": eps,
            "sigma": f.sigma(),
            "word": word.to_string(),
            "relator": relator.to_string(),
        }),
        text,
        table,
        failed: false,
    }
}

pub fn riley(p: i64, q: i64, f: &TwoBridgeForm, style: Style) -> Result<Report> {
    let data = RileyData::compute(f);
    let lambda = data.lambda()?;
    let w = &data.w;
    let det = w.det();
    let expected = f.half_length();
    let degree_ok = lambda.degree() == Some(expected) && lambda.constant_term().is_one();

    let mut text = String::new();
    writeln!(text, "form      {f}").unwrap();
    writeln!(text, "lambda    {}", poly_text(lambda, "y")).unwrap();
    writeln!(text, "degree    {:?} (expected {expected}, {})", lambda.degree(), style.flag(degree_ok))
        .unwrap();
    for (name, e) in ["w11", "w12", "w21", "w22"].iter().zip(w.entries()) {
        writeln!(text, "{name}       {}", poly_text(e, "y")).unwrap();
    }
    writeln!(text, "det W     {}", poly_text(&det, "y")).unwrap();

    let mut table = Table::new(&["p", "q", "lambda", "degree", "degree_check", "w11", "w12", "w21", "w22"]);
    table.push(vec![
        f.p().to_string(),
        f.q().to_string(),
        coeff_cell(lambda),
        expected.to_string(),
        degree_ok.to_string(),
        coeff_cell(&w.a11),
        coeff_cell(&w.a12),
        coeff_cell(&w.a21),
        coeff_cell(&w.a22),
    ]);

    Ok(Report {
        command: "riley",
        inputs: inputs_pq(p, q),
        results: json!({
            "form": report::form(f),
            "lambda": coeffs(lambda),
            "degree": lambda.degree(),
            "expected_degree": expected,
            "degree_check": degree_ok,
            "w": {
                "w11": coeffs(&w.a11),
                "w12": coeffs(&w.a12),
                "w21": coeffs(&w.a21),
                "w22": coeffs(&w.a22),
            },
            "determinant": coeffs(&det),
        }),
        text,
        table,
        failed: false,
    })
}

fn certificate_json(c: &PropertyLCertificate) -> Value {
    json!({
        "form": report::form(&c.form),
        "class": class(&c.class),
        "informational": c.is_informational(),
        "lambda": coeffs(&c.lambda),
        "g": coeffs(&c.g),
        "gcd_rational": coeffs(&c.gcd_rational_result),
        "gcd_is_one": c.gcd_is_one(),
        "gf2_divides": c.gf2_divides_result,
        "mod2_congruence": c.mod2_congruence,
        "verdict": c.verdict.as_str(),
    })
}

pub fn longitude(p: i64, q: i64, f: &TwoBridgeForm, style: Style) -> Result<Report> {
    let c = property_l_certificate(f)?;
    let lambda2 = c.lambda.reduce_mod2();
    let g2 = c.g.reduce_mod2();

    let mut text = String::new();
    writeln!(text, "form        {f}").unwrap();
    writeln!(text, "sigma       {}", f.sigma()).unwrap();
    writeln!(text, "g           {}", poly_text(&c.g, "y")).unwrap();
    writeln!(text, "lambda      {}", poly_text(&c.lambda, "y")).unwrap();
    writeln!(text, "gcd over Q  {} ({})", poly_text(&c.gcd_rational_result, "y"), style.flag(c.gcd_is_one()))
        .unwrap();
    writeln!(text, "lambda mod 2  {lambda2}").unwrap();
    writeln!(text, "g mod 2       {g2}").unwrap();
    writeln!(text, "lambda mod 2 | g - 1 mod 2  {}", style.flag(c.gf2_divides_result)).unwrap();
    writeln!(text, "W ≡ W′ mod 2  {}", style.flag(c.mod2_congruence)).unwrap();

    let mut table =
        Table::new(&["p", "q", "sigma", "g", "gcd_rational", "gcd_is_one", "gf2_divides", "mod2_congruence"]);
    table.push(vec![
        f.p().to_string(),
        f.q().to_string(),
        f.sigma().to_string(),
        coeff_cell(&c.g),
        coeff_cell(&c.gcd_rational_result),
        c.gcd_is_one().to_string(),
        c.gf2_divides_result.to_string(),
        c.mod2_congruence.to_string(),
    ]);

    Ok(Report {
        command: "longitude",
        inputs: inputs_pq(p, q),
        results: json!({
            "form": report::form(f),
            "sigma": f.sigma(),
            "g": coeffs(&c.g),
            "lambda": coeffs(&c.lambda),
            "gcd_rational": coeffs(&c.gcd_rational_result),
            "gcd_is_one": c.gcd_is_one(),
            "lambda_mod2": gf2_bits(&lambda2),
            "g_mod2": gf2_bits(&g2),
            "gf2_divides": c.gf2_divides_result,
            "mod2_congruence": c.mod2_congruence,
        }),
        text,
        table,
        failed: false,
    })
}

pub fn alexander(p: i64, q: i64, f: &TwoBridgeForm) -> Report {
    let delta = alexander_polynomial(f);
    let det = knot_determinant(f);
    let at_one = delta.at(1);
    let targets = torus_targets(&delta);
    let target_text: Vec<String> = targets.iter().map(|(r, s)| format!("T({r},{s})")).collect();

    let mut text = String::new();
    writeln!(text, "form          {f}").unwrap();
    writeln!(text, "delta         {}", poly_text(delta.poly(), "t")).unwrap();
    writeln!(text, "degree        {}", delta.degree()).unwrap();
    writeln!(text, "determinant   {det}").unwrap();
    writeln!(text, "delta(1)      {at_one}").unwrap();
    writeln!(
        text,
        "torus targets {}",
        if targets.is_empty() { "none".to_string() } else { target_text.join(" ") }
    )
    .unwrap();

    let mut table =
        Table::new(&["p", "q", "delta", "degree", "determinant", "delta_at_one", "torus_targets"]);
    table.push(vec![
        f.p().to_string(),
        f.q().to_string(),
        coeff_cell(delta.poly()),
        delta.degree().to_string(),
        det.to_string(),
        at_one.to_string(),
        target_text.join(" "),
    ]);

    Report {
        command: "alexander",
        inputs: inputs_pq(p, q),
        results: json!({
            "form": report::form(f),
            "delta": coeffs(delta.poly()),
            "degree": delta.degree(),
            "determinant": int(&det),
            "delta_at_one": int(&at_one),
            "palindromic": delta.is_palindromic_up_to_sign(),
            "torus_targets": targets.iter().map(|&(r, s)| json!([r, s])).collect::<Vec<_>>(),
        }),
        text,
        table,
        failed: false,
    }
}

const CERTIFICATE_HEADERS: [&str; 9] = [
    "p",
    "q",
    "mirror_flag",
    "class",
    "informational",
    "gcd_is_one",
    "gf2_divides",
    "mod2_congruence",
    "verdict",
];

fn certificate_row(c: &PropertyLCertificate) -> Vec<String> {
    vec![
        c.form.p().to_string(),
        c.form.q().to_string(),
        c.form.mirror_flag().to_string(),
        class_name(&c.class),
        c.is_informational().to_string(),
        c.gcd_is_one().to_string(),
        c.gf2_divides_result.to_string(),
        c.mod2_congruence.to_string(),
        c.verdict.as_str().to_string(),
    ]
}

pub fn certify(p: i64, q: i64, f: &TwoBridgeForm, style: Style) -> Result<Report> {
    let c = property_l_certificate(f)?;
    let mut text = String::new();
    writeln!(text, "form        {f} {}", f.classify()).unwrap();
    writeln!(text, "lambda      {}", poly_text(&c.lambda, "y")).unwrap();
    writeln!(text, "g           {}", poly_text(&c.g, "y")).unwrap();
    writeln!(text, "gcd = 1     {}", style.flag(c.gcd_is_one())).unwrap();
    writeln!(text, "mod 2 test  {}", style.flag(c.gf2_divides_result)).unwrap();
    writeln!(text, "W ≡ W′      {}", style.flag(c.mod2_congruence)).unwrap();
    write!(text, "verdict     {}", style.verdict(c.verdict)).unwrap();
    if c.is_informational() {
        text.push_str(" (torus form, informational)");
    }
    text.push('\n');

    let mut table = Table::new(&CERTIFICATE_HEADERS);
    table.push(certificate_row(&c));

    Ok(Report {
        command: "certify",
        inputs: inputs_pq(p, q),
        results: certificate_json(&c),
        text,
        table,
        failed: c.verdict == Verdict::Failed,
    })
}

fn reasons_json(r: &ObstructionReport) -> Value {
    r.reasons.iter().map(|e| json!({ "tag": e.tag.as_str(), "message": e.message })).collect()
}

pub fn obstruct_pair(inputs: [i64; 4], source: &TwoBridgeForm, target: &TwoBridgeForm) -> Result<Report> {
    let r = obstruct(source, target)?;
    let mut text = String::new();
    writeln!(text, "{} -> {}: {}", r.source, r.target, r.verdict.as_str()).unwrap();
    for e in &r.reasons {
        writeln!(text, "  {e}").unwrap();
    }

    let mut table = Table::new(&PAIR_HEADERS);
    table.push(pair_row(&r));

    Ok(Report {
        command: "obstruct",
        inputs: json!({ "p": inputs[0], "q": inputs[1], "p_target": inputs[2], "q_target": inputs[3] }),
        results: json!({
            "source": report::form(&r.source),
            "target": report::form(&r.target),
            "alexander_divides": r.alexander_divides,
            "riley_divides": r.riley_divides,
            "verdict": r.verdict.as_str(),
            "reasons": reasons_json(&r),
        }),
        text,
        table,
        failed: false,
    })
}

const PAIR_HEADERS: [&str; 8] = [
    "source_p",
    "source_q",
    "target_p",
    "target_q",
    "alexander_divides",
    "riley_divides",
    "verdict",
    "evidence",
];

fn evidence_tags(r: &ObstructionReport) -> Vec<&'static str> {
    r.reasons.iter().map(|e| e.tag.as_str()).collect()
}

fn pair_row(r: &ObstructionReport) -> Vec<String> {
    vec![
        r.source.p().to_string(),
        r.source.q().to_string(),
        r.target.p().to_string(),
        r.target.q().to_string(),
        r.alexander_divides.to_string(),
        r.riley_divides.to_string(),
        r.verdict.as_str().to_string(),
        evidence_tags(r).join(" "),
    ]
}

pub fn verify(p: i64, q: i64, f: &TwoBridgeForm, tol: f64, style: Style) -> Result<Report> {
    let v: FormVerification = verify_form(f, DEFAULT_ROOT_TOL, tol)?;
    let passed = v.passed();

    let mut text = String::new();
    writeln!(text, "form {f}: {} roots, tolerance {tol:e}", v.reps.len()).unwrap();
    writeln!(text, "{:>26} {:>26} {:>11} {:>11} {:>11} ok", "re y0", "im y0", "lambda", "relation", "|g|")
        .unwrap();
    let mut table = Table::new(&[
        "p",
        "q",
        "y0_re",
        "y0_im",
        "lambda_residual",
        "relation_residual",
        "determinant_residual",
        "g_re",
        "g_im",
        "g_abs",
        "passed",
    ]);
    let mut roots = Vec::new();
    for rep in &v.reps {
        let g = rep.longitude_translation();
        let ok = rep.relation_residual() <= tol && g.norm() > tol;
        writeln!(
            text,
            "{:>26} {:>26} {:>11.3e} {:>11.3e} {:>11.3e} {}",
            rep.y0.re,
            rep.y0.im,
            rep.residuals["lambda"],
            rep.relation_residual(),
            g.norm(),
            style.flag(ok)
        )
        .unwrap();
        table.push(vec![
            f.p().to_string(),
            f.q().to_string(),
            rep.y0.re.to_string(),
            rep.y0.im.to_string(),
            rep.residuals["lambda"].to_string(),
            rep.relation_residual().to_string(),
            rep.residuals["determinant"].to_string(),
            g.re.to_string(),
            g.im.to_string(),
            g.norm().to_string(),
            ok.to_string(),
        ]);
        roots.push(json!({
            "y0": complex(rep.y0),
            "residuals": rep.residuals,
            "g": complex(g),
            "g_abs": g.norm(),
            "passed": ok,
        }));
    }
    writeln!(
        text,
        "max relation residual {:.3e}, min |g| {:.3e}: {}",
        v.max_relation_residual(),
        v.min_longitude_translation(),
        if passed { style.good("passed") } else { style.bad("failed") }
    )
    .unwrap();

    Ok(Report {
        command: "verify",
        inputs: json!({ "p": p, "q": q, "tol": tol }),
        results: json!({
            "form": report::form(f),
            "root_tol": DEFAULT_ROOT_TOL,
            "verify_tol": tol,
            "roots": roots,
            "max_relation_residual": v.max_relation_residual(),
            "min_longitude_translation": v.min_longitude_translation(),
            "passed": passed,
        }),
        text,
        table,
        failed: !passed,
    })
}

pub fn scan_forms(pmax: u32, do_certify: bool, do_obstruct: bool, style: Style) -> Result<Report> {
    let forms = enumerate_forms(pmax);
    let certs: Option<Vec<PropertyLCertificate>> =
        if do_certify { Some(certify_batch(&forms).into_iter().collect::<Result<_, _>>()?) } else { None };
    let pairs = if do_obstruct { Some(scan(pmax)?) } else { None };

    let mut text = String::new();
    let mut results = serde_json::Map::new();
    results.insert("form_count".into(), json!(forms.len()));

    let mut form_rows = Vec::new();
    for (i, f) in forms.iter().enumerate() {
        let mut row = json!({
            "form": report::form(f),
            "class": class(&f.classify()),
            "canonical_key": f.canonical_key(),
        });
        if let Some(certs) = &certs {
            let c = &certs[i];
            row["certificate"] = json!({
                "informational": c.is_informational(),
                "gcd_is_one": c.gcd_is_one(),
                "gf2_divides": c.gf2_divides_result,
                "mod2_congruence": c.mod2_congruence,
                "verdict": c.verdict.as_str(),
            });
        }
        form_rows.push(row);
    }
    results.insert("forms".into(), Value::Array(form_rows));

    let mut failed = false;
    let mut table;
    if let Some(certs) = &certs {
        let n_failed = certs.iter().filter(|c| c.verdict == Verdict::Failed).count();
        let n_informational = certs.iter().filter(|c| c.is_informational()).count();
        failed = n_failed > 0;
        results.insert(
            "certificate_summary".into(),
            json!({
                "certified": certs.len() - n_failed,
                "failed": n_failed,
                "informational": n_informational,
            }),
        );
        writeln!(
            text,
            "{:>5} {:>5} {:<6} {:<14} {:<6} {:<6} {:<6} verdict",
            "p", "q", "mirror", "class", "gcd=1", "mod2", "W≡W′"
        )
        .unwrap();
        for c in certs {
            writeln!(
                text,
                "{:>5} {:>5} {:<6} {:<14} {:<6} {:<6} {:<6} {}",
                c.form.p(),
                c.form.q(),
                c.form.mirror_flag(),
                class_name(&c.class),
                c.gcd_is_one(),
                c.gf2_divides_result,
                c.mod2_congruence,
                style.verdict(c.verdict)
            )
            .unwrap();
        }
        writeln!(
            text,
            "{} forms: {} certified, {} failed ({} torus forms informational)",
            certs.len(),
            certs.len() - n_failed,
            n_failed,
            n_informational
        )
        .unwrap();
        table = Table::new(&CERTIFICATE_HEADERS);
        for c in certs {
            table.push(certificate_row(c));
        }
    } else {
        table = Table::new(&["p", "q", "mirror_flag", "class", "canonical_key"]);
        if !do_obstruct {
            writeln!(text, "{:>5} {:>5} {:<6} {:<14} key", "p", "q", "mirror", "class").unwrap();
        }
        for f in &forms {
            let class = class_name(&f.classify());
            let key = key_cell(&f.canonical_key());
            if !do_obstruct {
                writeln!(text, "{:>5} {:>5} {:<6} {:<14} {}", f.p(), f.q(), f.mirror_flag(), class, key)
                    .unwrap();
            }
            table.push(vec![f.p().to_string(), f.q().to_string(), f.mirror_flag().to_string(), class, key]);
        }
        if !do_obstruct {
            writeln!(text, "{} forms", forms.len()).unwrap();
        }
    }

    if let Some(summary) = &pairs {
        let pair_json: Vec<Value> = summary
            .reports
            .iter()
            .map(|r| {
                json!({
                    "source": report::form(&r.source),
                    "target": report::form(&r.target),
                    "alexander_divides": r.alexander_divides,
                    "riley_divides": r.riley_divides,
                    "verdict": r.verdict.as_str(),
                    "evidence": evidence_tags(r),
                })
            })
            .collect();
        results.insert("pairs".into(), Value::Array(pair_json));
        results.insert(
            "obstruction_summary".into(),
            json!({ "ruled_out": summary.ruled_out, "not_ruled_out": summary.not_ruled_out }),
        );
        if certs.is_some() {
            text.push('\n');
        }
        for r in &summary.reports {
            if r.verdict == ObstructionVerdict::NotRuledOut {
                writeln!(
                    text,
                    "{} -> {}: {} [{}]",
                    r.source,
                    r.target,
                    r.verdict.as_str(),
                    evidence_tags(r).join(", ")
                )
                .unwrap();
            }
        }
        writeln!(
            text,
            "{} ordered pairs: {} ruled out, {} not ruled out (listed)",
            summary.reports.len(),
            summary.ruled_out,
            summary.not_ruled_out
        )
        .unwrap();

        // CSV holds one table; with --obstruct it is the pair table, with the
        // source and target certificate verdicts flattened in when requested.
        let mut headers = PAIR_HEADERS.to_vec();
        if certs.is_some() {
            headers.extend(["source_certificate", "target_certificate"]);
        }
        let index: BTreeMap<TwoBridgeForm, usize> = forms.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        table = Table::new(&headers);
        for r in &summary.reports {
            let mut row = pair_row(r);
            if let Some(certs) = &certs {
                row.push(certs[index[&r.source]].verdict.as_str().to_string());
                row.push(certs[index[&r.target]].verdict.as_str().to_string());
            }
            table.push(row);
        }
    }

    Ok(Report {
        command: "scan",
        inputs: json!({ "pmax": pmax, "certify": do_certify, "obstruct": do_obstruct }),
        results: Value::Object(results),
        text,
        table,
        failed,
    })
}
