//! Builders for `combhopf report`.

use crate::combinatorics::{
    binary_tree_of, connected_counts, count_connected_by_filter, descent_class, descent_class_bounds, enumerate, hypoplactic_class,
    hypoplactic_rsk, order_leq, plactic_class, q_shuffle, rsk, standardize, Composition, Family, Order, Partition, Permutation, Word,
};
use crate::error::{bound, Error, Result};
use crate::exactalg::{factor_rational, plethystic_product, render_factored, QPoly, Scalar};
use crate::fqsym::{
    freeness_report, identity_check, left_multiplication_matrix, primitive_basis_v, pseudo_convolution_t, pseudo_convolution_t_q, sfact,
    SeriesIdentity, TnWeighting, MAX_T_DEGREE,
};
use crate::hecke0::{
    build_module, exact_sequence, ext_poincare_check, frobenius, norton_basis, q_cartan, quiver, radical_report, syzygy_resolution,
    ModuleKind, QuiverMethod, SkewShape,
};
use crate::mqsym::{
    connected_counts as mq_connected_counts, convolution_fa, convolution_homomorphism_check, free_series, freeness_check, hilbert_series,
    phis_in_ms, row_merge, HilbertMethod, MultiWord, PackedMat, MAX_VARIABLES,
};
use crate::posets::{gamma_free, poset_module_rise_free, tree_poset, tree_product, Poset};
use crate::symfam::qs_distribution;
use serde_json::{json, Value as Json};
use std::fmt::Write;

/// A report in every format it supports.
#[derive(Clone, Debug)]
pub struct Report {
    pub text: String,
    pub json: Json,
    pub tsv: Option<String>,
    pub dot: Option<String>,
}

impl Report {
    fn new(text: String, json: Json) -> Self {
        Report { text, json, tsv: None, dot: None }
    }

    fn with_tsv(mut self, tsv: String) -> Self {
        self.tsv = Some(tsv);
        self
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

fn coefficient_report(name: &str, coeffs: Vec<String>) -> Report {
    let tsv = coeffs.iter().enumerate().fold(String::from("degree\tvalue\n"), |mut s, (d, c)| {
        let _ = writeln!(s, "{d}\t{c}");
        s
    });
    Report::new(coeffs.join(","), json!({ "series": name, "coefficients": coeffs })).with_tsv(tsv)
}

pub fn cartan(n: usize, at_one: bool) -> Result<Report> {
    let c = q_cartan(n)?;
    if at_one {
        let m = c.at_one();
        let rows: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect();
        let comps: Vec<String> = c.comps.iter().map(|x| x.to_string()).collect();
        let mut text = String::new();
        let mut tsv = format!("I\t{}\n", comps.join("\t"));
        for (name, row) in comps.iter().zip(&rows) {
            let _ = writeln!(text, "{name} {}", row.join(" "));
            let _ = writeln!(tsv, "{name}\t{}", row.join("\t"));
        }
        return Ok(Report::new(text, json!({ "n": n, "q": 1, "compositions": comps, "matrix": rows })).with_tsv(tsv));
    }
    Ok(Report::new(c.to_text(), c.to_json()).with_tsv(c.to_tsv()))
}

pub fn quiver_report(n: usize, method: QuiverMethod) -> Result<Report> {
    let q = quiver(n, method)?;
    let mut r = Report::new(q.to_text(), q.to_json());
    r.dot = Some(q.to_dot());
    Ok(r)
}

/// Parses `P(3,1)`, `S(3,1)`, `N[2413]`, `M[2413]`, `V[2,2]`, `V[3,2/1]`,
/// `Poset{n=3; 1<3}` or `Reg(3)`.
pub fn parse_module(src: &str) -> Result<ModuleKind> {
    let s = src.trim();
    let (head, rest) = s.split_at(s.find(['(', '[', '{']).ok_or_else(|| invalid(format!("bad module {s:?}")))?);
    let inner = |open: char, close: char| -> Result<&str> {
        rest.strip_prefix(open).and_then(|r| r.strip_suffix(close)).ok_or_else(|| invalid(format!("bad module {s:?}")))
    };
    Ok(match head {
        "P" => ModuleKind::Projective(rest.parse()?),
        "S" => ModuleKind::Simple(rest.parse()?),
        "N" => ModuleKind::N(inner('[', ']')?.parse()?),
        "M" => ModuleKind::M(inner('[', ']')?.parse()?),
        "V" => {
            let body = inner('[', ']')?;
            match body.split_once('/') {
                Some((outer, sub)) => {
                    let lambda: Partition = format!("[{outer}]").parse()?;
                    let mu: Partition = format!("[{sub}]").parse()?;
                    ModuleKind::SkewSpecht(SkewShape::from_partitions(&lambda, &mu)?)
                }
                None => ModuleKind::Specht(format!("[{body}]").parse()?),
            }
        }
        "Poset" => ModuleKind::Poset(inner('{', '}')?.parse()?),
        "Reg" => ModuleKind::Regular(inner('(', ')')?.trim().parse().map_err(|_| invalid("Reg(n) needs an integer"))?),
        _ => return Err(invalid(format!("unknown module kind {head:?}"))),
    })
}

fn render_factors(f: &std::collections::BTreeMap<Composition, usize>, sym: &str) -> String {
    if f.is_empty() {
        return "0".into();
    }
    f.iter().map(|(j, &m)| if m == 1 { format!("{sym}{j}") } else { format!("{m}{sym}{j}") }).collect::<Vec<_>>().join(" + ")
}

fn factors_json(f: &std::collections::BTreeMap<Composition, usize>) -> Json {
    Json::Object(f.iter().map(|(j, m)| (j.to_string(), (*m).into())).collect())
}

pub fn module(src: &str) -> Result<Report> {
    let m = build_module(&parse_module(src)?)?;
    m.check_relations()?;
    let factors = m.composition_factors()?;
    let layers = m.radical_layers()?;
    let socle = m.socle();
    let ch = m.characteristic()?;
    let mut text = String::new();
    let _ = writeln!(text, "module: {}", m.name());
    let _ = writeln!(text, "dimension: {}", m.dim());
    let _ = writeln!(text, "composition factors: {}", render_factors(&factors, "S"));
    for (k, l) in layers.iter().enumerate() {
        let _ = writeln!(text, "radical layer {k}: {}", render_factors(l, "S"));
    }
    let _ = writeln!(text, "socle: {}", render_factors(&socle, "S"));
    let _ = writeln!(text, "characteristic: {ch}");
    let json = json!({
        "module": m.name(),
        "dimension": m.dim(),
        "composition_factors": factors_json(&factors),
        "radical_layers": layers.iter().map(factors_json).collect::<Vec<_>>(),
        "socle": factors_json(&socle),
        "characteristic": ch.to_string(),
    });
    Ok(Report::new(text, json))
}

pub fn resolve(src: &str, k_max: usize) -> Result<Report> {
    let m = build_module(&parse_module(src)?)?;
    let r = syzygy_resolution(&m, k_max)?;
    let mut text = format!("P_q = {} + O(q^{})\n", r.render_pq(), r.covers.len());
    for k in 0..r.syzygy_layers.len() {
        let _ = writeln!(text, "ch_q(Omega^{k}) = {}", r.render_syzygy(k));
    }
    let _ = writeln!(text, "dims: {}", join(&r.syzygy_dims));
    let mut tsv = String::from("k\tcover\tsyzygy_dim\n");
    for (k, c) in r.covers.iter().enumerate() {
        let _ = writeln!(tsv, "{k}\t{}\t{}", render_factors(c, "P"), r.syzygy_dims[k]);
    }
    Ok(Report::new(text, r.to_json()).with_tsv(tsv))
}

pub fn ext(n: usize, truncation: usize) -> Result<Report> {
    let r = ext_poincare_check(n, truncation)?;
    let mut text = format!(
        "n={} truncation={} pairs={} failures={} {}\n",
        r.n,
        r.truncation,
        r.pairs_checked,
        r.failures.len(),
        if r.passed() { "pass" } else { "fail" }
    );
    for (i, j, k) in &r.failures {
        let _ = writeln!(text, "mismatch {i} {j} q^{k}");
    }
    let failures: Vec<Json> = r.failures.iter().map(|(i, j, k)| json!([i.to_string(), j.to_string(), k])).collect();
    Ok(Report::new(
        text,
        json!({ "n": r.n, "truncation": r.truncation, "pairs": r.pairs_checked, "passed": r.passed(), "failures": failures }),
    ))
}

pub fn radical(n: usize) -> Result<Report> {
    let r = radical_report(n)?;
    let text = format!(
        "n={} rad dims: norton={} annihilator={} commutator={} equal={}\nradical series dims: {}\nLoewy length: {}\n",
        r.n,
        r.norton_dim,
        r.annihilator_dim,
        r.commutator_dim,
        r.equal,
        join(&r.series_dims),
        r.loewy_length()
    );
    let json = json!({
        "n": r.n, "norton_dim": r.norton_dim, "annihilator_dim": r.annihilator_dim, "commutator_dim": r.commutator_dim,
        "equal": r.equal, "series_dims": r.series_dims, "loewy_length": r.loewy_length(), "passed": r.passed(),
    });
    Ok(Report::new(text, json))
}

pub fn hilbert_mqsym(d: usize, method: HilbertMethod) -> Result<Report> {
    let dims = hilbert_series(d, method)?;
    Ok(coefficient_report("MQSym Hilbert series", dims.iter().map(u64::to_string).collect()))
}

/// `T4` acts on the regular representation of `S_4`; `T3q` is the `q`-analogue.
pub fn charpoly(name: &str) -> Result<Report> {
    let (n, deformed) = match name.strip_prefix('T') {
        Some(rest) => match rest.strip_suffix('q') {
            Some(n) => (n, true),
            None => (rest, false),
        },
        None => return Err(invalid(format!("expected Tn or Tnq, got {name:?}"))),
    };
    let n: usize = n.parse().map_err(|_| invalid(format!("expected Tn or Tnq, got {name:?}")))?;
    if n > MAX_T_DEGREE {
        return Err(bound("T_n degree", MAX_T_DEGREE));
    }
    if deformed {
        let t = pseudo_convolution_t_q(n, TnWeighting::Plain)?;
        let p = left_multiplication_matrix(&t, n).charpoly()?;
        let text = p.render_desc("x");
        return Ok(Report::new(format!("{text}\n"), json!({ "operator": name, "charpoly": text, "factored": false })));
    }
    let t = pseudo_convolution_t(n)?;
    let p: QPoly = left_multiplication_matrix(&t, n).charpoly()?;
    let text = render_factored(&factor_rational(&p), "x");
    Ok(Report::new(format!("{text}\n"), json!({ "operator": name, "charpoly": text, "expanded": p.render_desc("x"), "factored": true })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesName {
    /// `c_n` by the factorial series.
    Connected,
    /// `c_n` by filtering `S_n`.
    ConnectedFilter,
    /// `∏(1−tⁿ)^{−c_n}`.
    Enveloping,
    /// `1 − ∏(1−tⁿ)^{c_n}`.
    Primitive,
    /// `1/(1 − Σ conn_d tᵈ)` over connected packed matrices.
    MqsymFree,
    /// Primitive dimensions and generator counts in FQSym.
    PrimitiveDims,
}

pub fn series(name: SeriesName, n: usize) -> Result<Report> {
    match name {
        SeriesName::Connected => {
            Ok(coefficient_report("connected permutations", connected_counts(n).iter().map(|c| c.to_string()).collect()))
        }
        SeriesName::ConnectedFilter => {
            let counts = (1..=n).map(count_connected_by_filter).collect::<Result<Vec<_>>>()?;
            Ok(coefficient_report("connected permutations (filter)", counts.iter().map(u64::to_string).collect()))
        }
        SeriesName::Enveloping | SeriesName::Primitive => {
            let c = connected_counts(n);
            let s = plethystic_product(&c, name == SeriesName::Enveloping, n + 1);
            let coeffs: Vec<Scalar> = (0..=n).map(|k| s.coeff(k)).collect();
            let coeffs: Vec<String> = if name == SeriesName::Enveloping {
                coeffs.iter().map(Scalar::to_string).collect()
            } else {
                coeffs.iter().enumerate().map(|(k, c)| if k == 0 { "0".into() } else { (-c.clone()).to_string() }).collect()
            };
            Ok(coefficient_report(if name == SeriesName::Enveloping { "enveloping algebra" } else { "d(t)" }, coeffs))
        }
        SeriesName::MqsymFree => {
            let conn = mq_connected_counts(n, |p| p.is_connected())?;
            let s = free_series(&conn, n);
            let mut r = coefficient_report("MQSym free generation", s.iter().map(|c| c.to_string()).collect());
            r.json["connected"] = json!(conn);
            Ok(r)
        }
        SeriesName::PrimitiveDims => {
            let rows = freeness_report(n)?;
            let mut text = String::new();
            let mut tsv = String::from("degree\tprimitive_dim\tconnected\tbracket_rank\tgenerators\tpredicted\tconsistent\n");
            for r in &rows {
                let _ = writeln!(
                    text,
                    "degree {}: primitive {} connected {} brackets {} generators {} predicted {} {}",
                    r.degree,
                    r.primitive_dim,
                    r.connected,
                    r.bracket_rank,
                    r.generators,
                    r.predicted,
                    if r.consistent() { "ok" } else { "mismatch" }
                );
                let _ = writeln!(
                    tsv,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.degree,
                    r.primitive_dim,
                    r.connected,
                    r.bracket_rank,
                    r.generators,
                    r.predicted,
                    r.consistent()
                );
            }
            let json: Vec<Json> = rows
                .iter()
                .map(|r| {
                    json!({ "degree": r.degree, "primitive_dim": r.primitive_dim, "connected": r.connected,
                            "bracket_rank": r.bracket_rank, "generators": r.generators, "predicted": r.predicted, "consistent": r.consistent() })
                })
                .collect();
            Ok(Report::new(text, json!({ "series": "primitive dimensions", "rows": json })).with_tsv(tsv))
        }
    }
}

pub fn mqsym_freeness(d: usize) -> Result<Report> {
    let r = freeness_check(d)?;
    let text = format!(
        "degree {}: {} products, rank {}, dimension {} {}\n",
        r.degree,
        r.products,
        r.rank,
        r.dimension,
        if r.passed() { "free" } else { "not free" }
    );
    Ok(Report::new(
        text,
        json!({ "degree": r.degree, "products": r.products, "rank": r.rank, "dimension": r.dimension, "passed": r.passed() }),
    ))
}

pub fn norton(n: usize) -> Result<Report> {
    let r = norton_basis(n)?;
    let mut text = format!("n={} sum_is_one={} orthogonal={} g_rank={}\n", r.n, r.sum_is_one, r.orthogonal, r.g_rank);
    for (i, e) in &r.idempotents {
        let _ = writeln!(text, "e{i} = {e}");
    }
    let idem: serde_json::Map<String, Json> = r.idempotents.iter().map(|(i, e)| (i.to_string(), e.to_string().into())).collect();
    Ok(Report::new(
        text,
        json!({ "n": r.n, "sum_is_one": r.sum_is_one, "orthogonal": r.orthogonal, "g_rank": r.g_rank, "idempotents": idem, "passed": r.passed() }),
    ))
}

pub fn frobenius_report(n: usize) -> Result<Report> {
    let r = frobenius(n)?;
    let text = format!(
        "n={} sign={} gram_rank={} gram_bruhat={} biorthogonal={} bimodule={} associative={} {}\n",
        r.n,
        r.sign,
        r.gram_rank,
        r.gram_bruhat,
        r.biorthogonal,
        r.bimodule,
        r.associative,
        if r.passed() { "pass" } else { "fail" }
    );
    let json = json!({
        "n": r.n, "sign": r.sign, "gram_rank": r.gram_rank, "gram_bruhat": r.gram_bruhat, "gram_bruhat_literal": r.gram_bruhat_literal,
        "biorthogonal": r.biorthogonal, "biorthogonal_literal": r.biorthogonal_literal, "bimodule": r.bimodule,
        "associative": r.associative, "passed": r.passed(),
    });
    Ok(Report::new(text, json))
}

pub fn induction(sigma: &Permutation, tau: &Permutation) -> Result<Report> {
    let r = exact_sequence(sigma, tau)?;
    let text = format!(
        "0 -> N[{}] -> N[{}] (x) N[{}] -> N[{}] -> 0\nsubmodule={} sub_is_N_beta={} quotient_is_N_alpha={} characteristic={}\n",
        r.beta, r.sigma, r.tau, r.alpha, r.submodule, r.sub_is_n_beta, r.quotient_is_n_alpha, r.characteristic
    );
    let json = json!({
        "sigma": r.sigma.to_string(), "tau": r.tau.to_string(), "alpha": r.alpha.to_string(), "beta": r.beta.to_string(),
        "submodule": r.submodule, "sub_is_n_beta": r.sub_is_n_beta, "quotient_is_n_alpha": r.quotient_is_n_alpha,
        "characteristic": r.characteristic, "passed": r.passed(),
    });
    Ok(Report::new(text, json))
}

pub fn word(src: &str) -> Result<Report> {
    let w: Word = if src.trim_start().starts_with("w:") { src.parse()? } else { src.parse::<Permutation>()?.to_word() };
    let std = standardize(&w)?;
    let (p, q) = rsk(&w)?;
    let (qr, rr) = hypoplactic_rsk(&w)?;
    let mut fields: Vec<(&str, String)> = vec![
        ("word", w.to_string()),
        ("standardization", std.to_string()),
        ("descent composition", std.descent_composition().to_string()),
        ("P", p.to_string()),
        ("Q", q.to_string()),
        ("shape", p.shape().to_string()),
        ("quasi-ribbon", qr.to_string()),
        ("recording ribbon", rr.to_string()),
        ("plactic class size", plactic_class(&w).len().to_string()),
        ("hypoplactic class size", hypoplactic_class(&w).len().to_string()),
    ];
    if let Ok(s) = w.to_permutation() {
        fields.push(("inverse", s.inverse().to_string()));
        fields.push(("length", s.length().to_string()));
        fields.push(("maj", s.maj().to_string()));
        fields.push(("connected factors", s.connected_factorization().iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" . ")));
        fields.push(("binary tree", binary_tree_of(&s).to_string()));
    }
    let text = fields.iter().fold(String::new(), |mut s, (k, v)| {
        let _ = writeln!(s, "{k}: {v}");
        s
    });
    let tsv = fields.iter().fold(String::new(), |mut s, (k, v)| {
        let _ = writeln!(s, "{k}\t{v}");
        s
    });
    let json = Json::Object(fields.into_iter().map(|(k, v)| (k.to_string(), v.into())).collect());
    Ok(Report::new(text, json).with_tsv(tsv))
}

pub fn order(s: &Permutation, t: &Permutation) -> Result<Report> {
    let results = [("bruhat", Order::Bruhat), ("left-weak", Order::LeftWeak), ("right-weak", Order::RightWeak)]
        .into_iter()
        .map(|(name, o)| Ok((name, order_leq(s, t, o)?)))
        .collect::<Result<Vec<_>>>()?;
    let text = results.iter().fold(String::new(), |mut acc, (name, b)| {
        let _ = writeln!(acc, "{s} <= {t} in {name} order: {b}");
        acc
    });
    let json = Json::Object(results.iter().map(|(name, b)| (name.to_string(), (*b).into())).collect());
    Ok(Report::new(text, json))
}

pub fn enumerate_report(family: &str, n: usize, max_letter: Option<usize>) -> Result<Report> {
    let fam = match family {
        "permutations" => Family::Permutations(n),
        "compositions" => Family::Compositions(n),
        "packed" | "packed-matrices" => Family::PackedMatrices(n),
        "words" => Family::Words { len: n, max_letter: max_letter.unwrap_or(n) },
        _ => return Err(invalid(format!("unknown family {family:?}"))),
    };
    let items: Vec<String> = enumerate(fam)?.iter().map(|i| i.to_string()).collect();
    let text = format!("{} items\n{}\n", items.len(), items.join("\n"));
    Ok(Report::new(text, json!({ "family": family, "n": n, "count": items.len(), "items": items })).with_tsv(items.join("\n") + "\n"))
}

pub fn convolution(a: &str, m: &str) -> Result<Report> {
    let a: PackedMat = a.parse()?;
    let m: MultiWord = m.parse()?;
    let r = convolution_fa(&a, &m, MAX_VARIABLES)?;
    let text = crate::exactalg::render_combination(&r, |w| Some(w.to_string()));
    let terms: Vec<Json> = r.iter().map(|(w, c)| json!({ "multiword": w.to_string(), "coeff": c.to_string() })).collect();
    let tsv = r.iter().fold(String::new(), |mut s, (w, c)| {
        let _ = writeln!(s, "{w}\t{c}");
        s
    });
    Ok(Report::new(format!("{text}\n"), json!({ "A": a.to_string(), "m": m.to_string(), "result": text, "terms": terms })).with_tsv(tsv))
}

pub fn primitive(alpha: &Permutation) -> Result<Report> {
    let v = primitive_basis_v(alpha)?;
    Ok(Report::new(format!("V[{alpha}] = {v}\n"), json!({ "alpha": alpha.to_string(), "expansion": v.to_string() })))
}

pub fn distribution(n: usize, x: &str) -> Result<Report> {
    let xs: Vec<Scalar> =
        x.split(',').map(|t| t.trim().parse::<Scalar>().map_err(|_| invalid(format!("bad probability {t:?}")))).collect::<Result<_>>()?;
    let r = qs_distribution(&xs, n)?;
    let mut text = String::new();
    for (s, p) in &r.probabilities {
        let _ = writeln!(text, "Prob({s}) = {p}");
    }
    let _ = writeln!(text, "total = {}", r.total);
    let _ = writeln!(text, "charpoly = {}", r.charpoly.render_desc("t"));
    let _ = writeln!(text, "eigenvalues as predicted: {}", r.charpoly == r.predicted);
    let _ = writeln!(text, "inv/maj symbolic: {} numeric: {}", r.inv_maj_symbolic, r.inv_maj_numeric);
    let probs: serde_json::Map<String, Json> = r.probabilities.iter().map(|(s, p)| (s.to_string(), p.to_string().into())).collect();
    let json = json!({
        "n": n, "probabilities": probs, "total": r.total.to_string(), "charpoly": r.charpoly.render_desc("t"),
        "eigenvalues_predicted": r.charpoly == r.predicted, "inv_maj_symbolic": r.inv_maj_symbolic, "inv_maj_numeric": r.inv_maj_numeric,
    });
    Ok(Report::new(text, json))
}

/// `n=3; 1<3`, optionally wrapped as `{…}` or `Poset{…}`.
fn parse_poset(src: &str) -> Result<Poset> {
    let t = src.trim();
    let t = t.strip_prefix("Poset").unwrap_or(t);
    t.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(t).parse()
}

pub fn poset(src: &str) -> Result<Report> {
    let p = parse_poset(src)?;
    let ext = p.linear_extensions()?;
    let gamma = gamma_free(&p)?;
    let rise = poset_module_rise_free(&p)?;
    let text = format!(
        "poset: {p}\nlinear extensions: {}\nGamma = {gamma}\nmodule characteristic matches Gamma: {}\n",
        ext.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "),
        rise.passed()
    );
    let json = json!({
        "poset": p.to_string(), "linear_extensions": ext.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "gamma": gamma.to_string(), "module_passed": rise.passed(),
    });
    Ok(Report::new(text, json))
}

pub fn trees(t: &str, u: &str) -> Result<Report> {
    let (t, u) = (t.parse()?, u.parse()?);
    let prod = tree_product(&t, &u);
    let text = prod.iter().map(|(tree, m)| if *m == 1 { tree.to_string() } else { format!("{m}*{tree}") }).collect::<Vec<_>>().join(" + ");
    let poset = tree_poset(&t);
    let json = json!({
        "product": prod.iter().map(|(tree, m)| json!({ "tree": tree.to_string(), "coeff": m })).collect::<Vec<_>>(),
        "left_poset": poset.to_string(),
    });
    Ok(Report::new(format!("{text}\n"), json))
}

pub fn identity(which: SeriesIdentity, max_degree: usize) -> Result<Report> {
    let r = identity_check(which, max_degree)?;
    let text = r.degrees.iter().fold(String::new(), |mut s, (d, ok)| {
        let _ = writeln!(s, "{} degree {d}: {}", which.name(), if *ok { "pass" } else { "fail" });
        s
    });
    let json = json!({ "identity": which.name(), "degrees": r.degrees.iter().map(|(d, ok)| json!({ "degree": d, "holds": ok })).collect::<Vec<_>>() });
    Ok(Report::new(text, json))
}

/// `u ⧢_q v` and the shifted concatenation `u • v`.
pub fn shuffle(u: &str, v: &str) -> Result<Report> {
    let (u, v): (Word, Word) = (u.parse()?, v.parse()?);
    let sh = q_shuffle(&u, &v);
    let text = crate::exactalg::render_combination(&sh, |w| Some(w.to_string()));
    let concat = u.shifted_concat(&v);
    let terms: Vec<Json> = sh.iter().map(|(w, c)| json!({ "word": w.to_string(), "coeff": c.to_string() })).collect();
    let tsv = sh.iter().fold(String::new(), |mut s, (w, c)| {
        let _ = writeln!(s, "{w}\t{c}");
        s
    });
    Ok(Report::new(
        format!("q-shuffle: {text}\nshifted concatenation: {concat}\n"),
        json!({ "u": u.to_string(), "v": v.to_string(), "q_shuffle": terms, "shifted_concat": concat.to_string() }),
    )
    .with_tsv(tsv))
}

/// `α(I)`, `ω(I)` and the descent class between them.
pub fn descent_class_report(src: &str) -> Result<Report> {
    let i: Composition = src.parse()?;
    let (lo, hi) = descent_class_bounds(&i);
    let class = descent_class(&i);
    let text = format!("alpha: {lo}\nomega: {hi}\nclass ({}): {}\n", class.len(), join(&class));
    Ok(Report::new(
        text,
        json!({ "composition": i.to_string(), "alpha": lo.to_string(), "omega": hi.to_string(),
                "class": class.iter().map(|s| s.to_string()).collect::<Vec<_>>() }),
    ))
}

/// Factorization-standardization of a permutation or word along `I`.
pub fn sfact_report(comp: &str, w: &str) -> Result<Report> {
    let i: Composition = comp.parse()?;
    let letters = if w.starts_with("w:") { w.parse::<Word>()?.letters().to_vec() } else { w.parse::<Permutation>()?.into_vec() };
    let factors = sfact(&i, &letters);
    let text = match &factors {
        Some(f) => f.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" (x) "),
        None => "0".to_string(),
    };
    let json = json!({ "composition": i.to_string(), "factors": factors.map(|f| f.iter().map(|s| s.to_string()).collect::<Vec<_>>()) });
    Ok(Report::new(format!("{text}\n"), json))
}

/// `T_n` (or `T_n(q)`) as an element of the group algebra.
pub fn tn(n: usize, deformed: bool) -> Result<Report> {
    let t = pseudo_convolution_t_q(n, TnWeighting::Plain)?;
    let t = if deformed { t } else { t.map_coeffs(|c| QPoly::constant(c.eval(&Scalar::from_integer(1.into())))) };
    let text = crate::exactalg::render_combination(&t, |s| Some(format!("[{s}]")));
    let tsv = t.iter().fold(String::new(), |mut acc, (s, c)| {
        let _ = writeln!(acc, "{s}\t{c}");
        acc
    });
    let terms: Vec<Json> = t.iter().map(|(s, c)| json!({ "permutation": s.to_string(), "coeff": c.to_string() })).collect();
    Ok(Report::new(format!("{text}\n"), json!({ "n": n, "q": deformed, "terms": terms })).with_tsv(tsv))
}

/// `P⟩K` together with the ΦS expansion of `P` in the MS basis.
pub fn row_merge_report(p: &str, k: &str) -> Result<Report> {
    let p: PackedMat = p.parse()?;
    let k: Composition = k.parse()?;
    let merged = row_merge(&p, &k)?;
    let phis = crate::exactalg::render_combination(&phis_in_ms(&p), |m| Some(format!("MS{m}")));
    Ok(Report::new(
        format!("{merged}\nPhiS{p} = {phis}\n"),
        json!({ "matrix": p.to_string(), "k": k.to_string(), "merged": merged.to_string(), "phis": phis.to_string() }),
    ))
}

pub fn convolution_check(d: usize) -> Result<Report> {
    let r = convolution_homomorphism_check(d)?;
    let text = format!(
        "degree <= {d}: {} pairs, {} evaluations, {} failures\nhomomorphism: {}\n",
        r.pairs,
        r.evaluations,
        r.failures.len(),
        r.passed()
    );
    let failures: Vec<Json> = r.failures.iter().map(|(a, b, m)| json!([a.to_string(), b.to_string(), m.to_string()])).collect();
    Ok(Report::new(
        text,
        json!({ "max_degree": d, "pairs": r.pairs, "evaluations": r.evaluations, "failures": failures, "passed": r.passed() }),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetOp {
    DisjointSum,
    Wedge,
}

/// `P₁ ⊔ P₂` or `P₁ ∧ P₂`, with its linear extensions.
pub fn poset_combine(op: PosetOp, p: &str, q: &str) -> Result<Report> {
    let (p, q) = (parse_poset(p)?, parse_poset(q)?);
    let r = match op {
        PosetOp::DisjointSum => p.disjoint_sum(&q),
        PosetOp::Wedge => p.wedge(&q),
    };
    let ext = r.linear_extensions()?;
    Ok(Report::new(
        format!("poset: {r}\nlinear extensions ({}): {}\n", ext.len(), join(&ext)),
        json!({ "poset": r.to_string(), "linear_extensions": ext.iter().map(|s| s.to_string()).collect::<Vec<_>>() }),
    ))
}
