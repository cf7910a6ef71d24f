//! Subcommand drivers. Each returns a [`Report`]; nothing here prints.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};
use wreath_core::center::CenterAlgebra;
use wreath_core::family::{families_of_size, proper_families_up_to};
use wreath_core::partial::{class_size_partial, enumerate_partial_class};
use wreath_core::symfunc::{verify_isomorphism, IsoCheckConfig};
use wreath_core::universal::{self, structure_polynomial, structure_polynomials};
use wreath_core::wreath::class_order;
use wreath_core::{CharacterTable, ClassId, Error, FamilyKind, FiniteGroup, PartitionFamily};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::Report;

pub struct Context {
    pub config: RunConfig,
    pub group: FiniteGroup,
    pub table: CharacterTable,
}

/// Floats rounded to 12 decimals so tiny residues print as `0`.
fn num(x: f64) -> Value {
    let r = (x * 1e12).round() / 1e12;
    json!(if r == 0.0 { 0.0 } else { r })
}

pub fn parse_family(ctx: &Context, flag: &str, text: Option<&str>) -> Result<PartitionFamily, CliError> {
    let text = text.ok_or_else(|| CliError::Usage(format!("--{flag} is required")))?;
    let f = PartitionFamily::from_json_str(FamilyKind::Classes, text)
        .map_err(|e| CliError::Usage(format!("--{flag}: {e}")))?;
    f.validate(ctx.group.num_classes())?;
    Ok(f)
}

fn require_n(ctx: &Context, n: Option<usize>) -> Result<usize, CliError> {
    let n = n.ok_or_else(|| CliError::Usage("--n is required".into()))?;
    if n > ctx.config.max_n {
        return Err(Error::GuardrailExceeded(format!("n = {n} exceeds max_n = {}", ctx.config.max_n)).into());
    }
    Ok(n)
}

fn check_pair_size(ctx: &Context, lam: &PartitionFamily, del: &PartitionFamily) -> Result<(), CliError> {
    let s = lam.size() + del.size();
    if s > ctx.config.max_pair_size {
        return Err(Error::GuardrailExceeded(format!("|Λ| + |Δ| = {s} exceeds max_pair_size = {}", ctx.config.max_pair_size)).into());
    }
    Ok(())
}

fn fit(f: &PartitionFamily, n: usize) -> Result<PartitionFamily, CliError> {
    if f.size() == n {
        Ok(f.clone())
    } else {
        Ok(f.pad(n)?)
    }
}

pub fn group_info(ctx: &Context) -> Result<Report, CliError> {
    let g = &ctx.group;
    let t = &ctx.table;
    let mut classes = Vec::new();
    let mut rows = Vec::new();
    for (c, members) in g.conjugacy_classes().iter().enumerate() {
        let xi = g.centralizer_order(ClassId(c));
        classes.push(json!({"id": c, "size": members.len(), "centralizer": xi, "members": members}));
        rows.push(vec![c.to_string(), members.len().to_string(), xi.to_string(), format!("{members:?}")]);
    }
    let chars: Vec<Value> = t
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| json!({"degree": t.degree(i), "values": r.iter().map(|z| json!([num(z.re), num(z.im)])).collect::<Vec<_>>()}))
        .collect();
    let doc = json!({
        "order": g.order(),
        "abelian": g.is_abelian(),
        "classes": classes,
        "characters": chars,
        "orthogonality_residual": num(t.orthogonality_residual(g)),
    });
    Ok(Report::new(doc, &["class", "size", "centralizer", "members"], rows))
}

pub fn classes(ctx: &Context, n: Option<usize>) -> Result<Report, CliError> {
    let n = require_n(ctx, n)?;
    let g = &ctx.group;
    let mut out = Vec::new();
    let mut rows = Vec::new();
    let mut total: u128 = 0;
    for lam in families_of_size(FamilyKind::Classes, g.num_classes(), n) {
        let (z, size) = class_order(g, &lam)?;
        total += size as u128;
        out.push(json!({"lambda": lam.to_json(), "z": z, "size": size}));
        rows.push(vec![lam.to_string(), z.to_string(), size.to_string()]);
    }
    let expected = (g.order() as u128).pow(n as u32) * (1..=n as u128).product::<u128>();
    let doc = json!({
        "n": n,
        "classes": out,
        "checksum": total.to_string(),
        "group_order": expected.to_string(),
        "pass": total == expected,
    });
    let mut r = Report::new(doc, &["lambda", "z", "size"], rows);
    r.ok = total == expected;
    Ok(r)
}

pub fn ccoeff(ctx: &Context, n: Option<usize>, lam: Option<&str>, del: Option<&str>, gam: Option<&str>) -> Result<Report, CliError> {
    let n = require_n(ctx, n)?;
    let lam = fit(&parse_family(ctx, "lam", lam)?, n)?;
    let del = fit(&parse_family(ctx, "del", del)?, n)?;
    let alg = CenterAlgebra::new(&ctx.group, n).with_cap(ctx.config.max_class_size);
    if gam.is_some() {
        let gamma = fit(&parse_family(ctx, "gam", gam)?, n)?;
        let c = alg.c_coeff(&lam, &del, &gamma)?;
        let doc = json!({"n": n, "lam": lam.to_json(), "del": del.to_json(), "gamma": gamma.to_json(), "coeff": c});
        return Ok(Report::new(doc, &["gamma", "coeff"], vec![vec![gamma.to_string(), c.to_string()]]));
    }
    let v = alg.product(&lam, &del)?;
    let rows = v.iter().map(|(k, c)| vec![k.to_string(), c.to_string()]).collect();
    let mut doc = v.to_json(&ctx.group)?;
    doc["n"] = json!(n);
    doc["lam"] = lam.to_json();
    doc["del"] = del.to_json();
    Ok(Report::new(doc, &["gamma", "coeff"], rows))
}

pub fn kcoeff(ctx: &Context, lam: Option<&str>, del: Option<&str>, gam: Option<&str>) -> Result<Report, CliError> {
    let g = &ctx.group;
    let lam = parse_family(ctx, "lam", lam)?;
    let del = parse_family(ctx, "del", del)?;
    check_pair_size(ctx, &lam, &del)?;
    if gam.is_some() {
        let gamma = parse_family(ctx, "gam", gam)?;
        let k = universal::k_coeff(g, &lam, &del, &gamma)?;
        let doc = json!({"lam": lam.to_json(), "del": del.to_json(), "gamma": gamma.to_json(), "coeff": k});
        return Ok(Report::new(doc, &["gamma", "coeff"], vec![vec![gamma.to_string(), k.to_string()]]));
    }
    let prod = universal::product(g, &lam, &del)?;
    // Σ_Γ k^Γ |C_{Γ;N}| = |C_{Λ;N}| |C_{Δ;N}| at N = |Λ| + |Δ|.
    let top = lam.size() + del.size();
    let mut mass: u128 = 0;
    for (gamma, &k) in &prod {
        mass += k as u128 * class_size_partial(g, gamma, top)? as u128;
    }
    let terms: Vec<Value> = prod.iter().map(|(k, &c)| json!({"gamma": k.to_json(), "coeff": c})).collect();
    let rows = prod.iter().map(|(k, c)| vec![k.to_string(), c.to_string()]).collect();
    let doc = json!({"lam": lam.to_json(), "del": del.to_json(), "terms": terms, "mass": mass.to_string()});
    Ok(Report::new(doc, &["gamma", "coeff"], rows))
}

fn poly_row(p: &universal::PolynomialInN) -> Vec<String> {
    let b: Vec<String> = p.binomial_coeffs().iter().map(u64::to_string).collect();
    vec![p.gamma().to_string(), b.join(" "), p.monomial_string(), p.latex()]
}

pub fn poly(ctx: &Context, lam: Option<&str>, del: Option<&str>, gam: Option<&str>) -> Result<Report, CliError> {
    let g = &ctx.group;
    let lam = parse_family(ctx, "lam", lam)?;
    let del = parse_family(ctx, "del", del)?;
    check_pair_size(ctx, &lam, &del)?;
    let headers = ["gamma", "binomial", "monomial", "latex"];
    if gam.is_some() {
        let gamma = parse_family(ctx, "gam", gam)?;
        let p = structure_polynomial(g, &lam, &del, &gamma)?;
        let mut doc = p.to_json();
        doc["lam"] = lam.to_json();
        doc["del"] = del.to_json();
        return Ok(Report::new(doc, &headers, vec![poly_row(&p)]));
    }
    let all = structure_polynomials(g, &lam, &del)?;
    let rows = all.values().map(poly_row).collect();
    let doc = json!({
        "lam": lam.to_json(),
        "del": del.to_json(),
        "polynomials": all.values().map(|p| p.to_json()).collect::<Vec<_>>(),
    });
    Ok(Report::new(doc, &headers, rows))
}

/// Polynomials in `n` against direct center products for every proper pair
/// with `|Λ|, |Δ| ≤ max_size` and every `n ≤ n_max`.
pub fn verify_poly(ctx: &Context, max_size: usize, n_max: usize) -> Result<Report, CliError> {
    let g = &ctx.group;
    if n_max > ctx.config.max_n {
        return Err(Error::GuardrailExceeded(format!("n = {n_max} exceeds max_n = {}", ctx.config.max_n)).into());
    }
    let fams = proper_families_up_to(g.num_classes(), max_size);
    let pairs: Vec<(&PartitionFamily, &PartitionFamily)> =
        fams.iter().enumerate().flat_map(|(i, a)| fams[i..].iter().map(move |b| (a, b))).collect();
    let cap = ctx.config.max_class_size;
    let chunks: Vec<Result<Vec<Value>, CliError>> = pairs
        .par_iter()
        .map(|&(lam, del)| {
            let polys = structure_polynomials(g, lam, del)?;
            let mut rows = Vec::new();
            for n in lam.size().max(del.size())..=n_max {
                let direct = CenterAlgebra::new(g, n).with_cap(cap).product(&lam.pad(n)?, &del.pad(n)?)?;
                let mut seen: BTreeMap<PartitionFamily, (u128, u64)> = BTreeMap::new();
                for (gamma, p) in &polys {
                    if p.base_size() <= n {
                        seen.insert(gamma.clone(), (p.eval(n)?, 0));
                    }
                }
                for (full, c) in direct.iter() {
                    seen.entry(full.properize()).or_insert((0, 0)).1 = c;
                }
                for (gamma, (predicted, direct)) in seen {
                    if predicted == 0 && direct == 0 {
                        continue;
                    }
                    rows.push(json!({
                        "lam": lam.to_json(),
                        "del": del.to_json(),
                        "gamma": gamma.to_json(),
                        "n": n,
                        "predicted": predicted.to_string(),
                        "direct": direct.to_string(),
                        "pass": predicted == direct as u128,
                    }));
                }
            }
            Ok(rows)
        })
        .collect();
    let mut all = Vec::new();
    for c in chunks {
        all.extend(c?);
    }
    let failures = all.iter().filter(|r| r["pass"] == json!(false)).count();
    let rows = all
        .iter()
        .map(|r| {
            ["lam", "del", "gamma", "n", "predicted", "direct", "pass"]
                .iter()
                .map(|k| match &r[*k] {
                    Value::String(s) => s.clone(),
                    Value::Object(_) => PartitionFamily::from_json_value(FamilyKind::Classes, &r[*k]).map(|f| f.to_string()).unwrap_or_default(),
                    v => v.to_string(),
                })
                .collect()
        })
        .collect();
    let doc = json!({
        "check": "polynomiality",
        "max_size": max_size,
        "n_max": n_max,
        "count": all.len(),
        "failures": failures,
        "pass": failures == 0,
        "rows": all,
    });
    let mut r = Report::new(doc, &["lam", "del", "gamma", "n", "predicted", "direct", "pass"], rows);
    r.ok = failures == 0;
    Ok(r)
}

pub fn verify_iso(ctx: &Context, max_size: usize, point_size: Option<usize>, max_points: usize) -> Result<Report, CliError> {
    let cfg = IsoCheckConfig {
        size_cap: max_size,
        point_size,
        max_points: Some(max_points),
        seed: ctx.config.seed,
        tolerance: ctx.config.tolerance,
    };
    if max_points == 0 {
        return Err(CliError::Usage("--max-points must be positive".into()));
    }
    let records = verify_isomorphism(&ctx.group, &ctx.table, &cfg)?;
    let failures = records.iter().filter(|r| !r.pass).count();
    let rows = records
        .iter()
        .map(|r| {
            vec![
                r.check.to_string(),
                r.input.to_string(),
                format!("{}", r.lhs),
                format!("{}", r.rhs),
                r.pass.to_string(),
                format!("{:e}", r.abs_err()),
            ]
        })
        .collect();
    let max_err = records.iter().map(|r| r.abs_err()).fold(0.0, f64::max);
    let doc = json!({
        "check": "isomorphism",
        "max_size": max_size,
        "seed": ctx.config.seed,
        "tolerance": ctx.config.tolerance,
        "count": records.len(),
        "failures": failures,
        "max_abs_err": max_err,
        "pass": failures == 0,
        "records": records.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
    });
    let mut r = Report::new(doc, &["check", "input", "lhs", "rhs", "pass", "abs_err"], rows);
    r.ok = failures == 0;
    Ok(r)
}

pub fn enumerate_partial(ctx: &Context, n: Option<usize>, lam: Option<&str>) -> Result<Report, CliError> {
    let n = require_n(ctx, n)?;
    let g = &ctx.group;
    let lam = parse_family(ctx, "lam", lam)?;
    let size = class_size_partial(g, &lam, n)?;
    if size > ctx.config.max_class_size {
        return Err(Error::CapExceeded { size, cap: ctx.config.max_class_size }.into());
    }
    let mut elems = Vec::new();
    let mut rows = Vec::new();
    enumerate_partial_class(g, &lam, n, None, |x| {
        let j = x.to_json();
        rows.push(vec![j["support"].to_string(), j["omega"].to_string(), j["labels"].to_string()]);
        elems.push(j);
    })?;
    let doc = json!({"lam": lam.to_json(), "n": n, "count": elems.len(), "elements": elems});
    Ok(Report::new(doc, &["support", "omega", "labels"], rows))
}
