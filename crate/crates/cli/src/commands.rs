use bfz_core::bfz_quiver::{
    exchange_trace, format_trace, glue, BfzQuiver, ExchangeMatrix, GlueError, Quiver,
};
use bfz_core::cartan_graph::cartan_matrix;
use bfz_core::coxeter_words::{shuffle, SignConvention};
use bfz_core::cylinder_dimer::{
    check_dimer_conditions, check_face_shapes, check_planarity_per_sheet, check_shared_edges,
    DimerModel,
};
use bfz_core::export::{
    embedding_json, faces_json, matrix_json, potential_json, quiver_json, to_dot, to_tikz, Fixture,
};
use bfz_core::qp_rigidity::{
    check_rigidity, superpotential, ArrowTable, Potential, RigidityOptions, Verdict,
};
use bfz_core::random::{random_pattern, random_reduced_word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{CliError, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_VIOLATION};
use crate::job::{Format, Job, JobOptions};

/// What a command prints, the files it would write under `--out-dir`, and
/// its exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub files: Vec<(String, String)>,
    pub exit: i32,
}

impl Outcome {
    fn json(v: &Value, exit: i32) -> Self {
        Outcome {
            stdout: pretty(v),
            files: Vec::new(),
            exit,
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// The constructed quiver and its cylinder model for one job.
struct Model {
    bfz: BfzQuiver,
    quiver: Quiver,
    dimer: DimerModel,
}

fn model(job: &Job) -> Result<Model, CliError> {
    let bfz = BfzQuiver::build(
        &job.graph,
        &job.u,
        &job.v,
        job.pattern.as_deref(),
        job.convention(),
    )?;
    let quiver = if job.options.no_frozen_arrows {
        bfz.core.clone()
    } else {
        bfz.quiver().clone()
    };
    let dimer = DimerModel::new(&quiver, &job.graph)?;
    Ok(Model { bfz, quiver, dimer })
}

/// Rows labelled by index, columns by exchangeable index, tab separated.
pub fn matrix_table(m: &ExchangeMatrix) -> String {
    let mut out = String::from("k");
    for c in &m.columns {
        out.push_str(&format!("\t{c}"));
    }
    out.push('\n');
    for (k, row) in m.rows.iter().zip(&m.entries) {
        out.push_str(&k.to_string());
        for b in row {
            out.push_str(&format!("\t{b}"));
        }
        out.push('\n');
    }
    out
}

fn build_document(job: &Job, m: &Model) -> Value {
    let w = &m.bfz.word;
    let kplus: Vec<Value> = m
        .bfz
        .successors
        .kplus()
        .iter()
        .map(|(k, p)| json!([k, p]))
        .collect();
    json!({
        "graph": job.graph.to_spec(),
        "sign_convention": job.convention().name(),
        "u": w.u(),
        "v": w.v(),
        "pattern": w.pattern(),
        "word": w.hat(),
        "successors": {"kplus": kplus, "exchangeable": m.bfz.successors.exchangeable()},
        "matrix": matrix_json(&m.bfz.matrix),
        "quiver": quiver_json(&m.quiver),
        "completion": {
            "enabled": !job.options.no_frozen_arrows,
            "added": m.bfz.completion.added,
            "ambiguities": m.bfz.completion.ambiguities,
        },
        "embedding": embedding_json(&m.dimer.embedding),
        "faces": faces_json(&m.dimer.faces),
    })
}

pub fn build(job: &Job) -> Result<Outcome, CliError> {
    let m = model(job)?;
    let doc = build_document(job, &m);
    let wants = |f: Format| job.options.formats.is_empty() || job.options.formats.contains(&f);
    let mut files: Vec<(String, String)> = vec![
        ("quiver.json".into(), pretty(&doc["quiver"])),
        ("matrix.json".into(), pretty(&doc["matrix"])),
        ("matrix.tsv".into(), matrix_table(&m.bfz.matrix)),
        (
            "trace.txt".into(),
            format_trace(&exchange_trace(
                &m.bfz.word,
                &m.bfz.successors,
                &m.bfz.cartan,
            )),
        ),
        ("embedding.json".into(), pretty(&doc["embedding"])),
        ("faces.json".into(), pretty(&doc["faces"])),
    ];
    if wants(Format::Dot) {
        files.push(("quiver.dot".into(), to_dot(&m.quiver, &m.dimer.embedding)));
    }
    if wants(Format::Tikz) {
        files.push(("quiver.tex".into(), to_tikz(&m.quiver, &m.dimer.embedding)));
    }
    Ok(Outcome {
        stdout: pretty(&doc),
        files,
        exit: EXIT_OK,
    })
}

pub fn export(job: &Job, format: Format) -> Result<Outcome, CliError> {
    let m = model(job)?;
    let (name, text) = match format {
        Format::Json => ("quiver.json", pretty(&build_document(job, &m))),
        Format::Dot => ("quiver.dot", to_dot(&m.quiver, &m.dimer.embedding)),
        Format::Tikz => ("quiver.tex", to_tikz(&m.quiver, &m.dimer.embedding)),
    };
    Ok(Outcome {
        stdout: text.clone(),
        files: vec![(name.into(), text)],
        exit: EXIT_OK,
    })
}

/// All structural checks for one job. `ok` covers the dimer conditions,
/// per-sheet planarity and the shared-edge rule; the face-shape count is
/// reported alongside.
fn check_report(job: &Job) -> Result<(Value, bool), CliError> {
    let m = model(job)?;
    let e = &m.dimer.embedding;
    let dimer = check_dimer_conditions(&m.quiver, &job.graph, e, &m.dimer.faces);
    let planarity = check_planarity_per_sheet(e);
    let shared = check_shared_edges(&m.dimer.faces, e);
    let shape = check_face_shapes(&m.dimer.faces, e);
    let ok = dimer.ok() && planarity.ok && shared.ok;
    let doc = json!({
        "u": job.u,
        "v": job.v,
        "pattern": m.bfz.word.pattern(),
        "ok": ok,
        "dimer_conditions": dimer,
        "planarity": planarity,
        "shared_edges": shared,
        "face_shape": shape,
        "ambiguities": m.bfz.completion.ambiguities,
    });
    Ok((doc, ok))
}

pub fn check(job: &Job) -> Result<Outcome, CliError> {
    let (doc, ok) = check_report(job)?;
    Ok(Outcome::json(
        &doc,
        if ok { EXIT_OK } else { EXIT_VIOLATION },
    ))
}

/// `count` random reduced pairs over the job's graph, each with
/// `ℓ(u) + ℓ(v) <= max_len` and a random shuffle.
pub fn check_random(
    base: &Job,
    count: usize,
    seed: u64,
    max_len: usize,
) -> Result<Outcome, CliError> {
    let cartan = cartan_matrix(&base.graph);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut results = Vec::with_capacity(count);
    let mut all_ok = true;
    for _ in 0..count {
        let u = random_reduced_word(&mut rng, &cartan, max_len / 2);
        let v = random_reduced_word(&mut rng, &cartan, max_len - u.len());
        let pattern = random_pattern(&mut rng, u.len(), v.len());
        let job = Job {
            u,
            v,
            pattern: Some(pattern),
            ..base.clone()
        };
        let (doc, ok) = check_report(&job)?;
        all_ok &= ok;
        results.push(doc);
    }
    let doc = json!({
        "graph": base.graph.to_spec(),
        "seed": seed,
        "count": count,
        "max_len": max_len,
        "ok": all_ok,
        "results": results,
    });
    Ok(Outcome::json(
        &doc,
        if all_ok { EXIT_OK } else { EXIT_VIOLATION },
    ))
}

fn rigidity_options(o: &JobOptions) -> RigidityOptions {
    RigidityOptions {
        max_cycle_len: o.max_cycle_len,
        trunc_degree: o.trunc_degree,
        max_trunc_degree: o.max_trunc_degree,
        exclude_boundary: o.exclude_boundary_derivatives,
    }
}

fn rigidity_outcome(
    q: &Quiver,
    s: &Potential,
    opts: &RigidityOptions,
) -> Result<Outcome, CliError> {
    let report = check_rigidity(q, s, opts)?;
    let mut doc = to_value(&report);
    doc["potential"] = potential_json(s, &ArrowTable::new(q));
    let exit = match report.verdict {
        Verdict::Rigid => EXIT_OK,
        Verdict::NotRigid => EXIT_VIOLATION,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    };
    Ok(Outcome::json(&doc, exit))
}

pub fn rigidity(job: &Job) -> Result<Outcome, CliError> {
    let m = model(job)?;
    let s = superpotential(&m.dimer.faces, &ArrowTable::new(&m.quiver))?;
    rigidity_outcome(&m.quiver, &s, &rigidity_options(&job.options))
}

/// Rigidity of a hand-written quiver with potential. Bounds in the fixture
/// apply unless overridden by `options`.
pub fn rigidity_fixture(text: &str, options: &JobOptions) -> Result<Outcome, CliError> {
    let fixture = Fixture::parse(text)?;
    let q = fixture.quiver.to_quiver()?;
    let s = fixture.potential(&ArrowTable::new(&q))?;
    let mut opts = rigidity_options(options);
    opts.max_cycle_len = opts.max_cycle_len.or(fixture.max_cycle_len);
    opts.trunc_degree = opts.trunc_degree.or(fixture.trunc_degree);
    rigidity_outcome(&q, &s, &opts)
}

/// Glues `Q^{u,e}` (from `bottom`) under `Q^{e,v}` (from `top`) and compares
/// with the quiver built directly from `(u, v)`.
pub fn glue_pair(bottom: &Job, top: &Job, convention: SignConvention) -> Result<Outcome, CliError> {
    if bottom.graph != top.graph {
        return Err(GlueError::GraphMismatch.into());
    }
    if !bottom.v.is_empty() || !top.u.is_empty() {
        return Err(CliError::invalid(
            "glue.bad_factor",
            "the bottom spec must have empty v and the top spec empty u",
        ));
    }
    let graph = &bottom.graph;
    let word = shuffle(&bottom.u, &top.v, None, &cartan_matrix(graph), convention)?;
    let direct = BfzQuiver::from_word(graph, word);
    let (lower, upper) = direct.gluing_factors();
    let glued = glue(&lower, &upper)?;
    let matches = &glued.quiver == direct.quiver();
    let renaming: Vec<Value> = glued.renaming.iter().map(|(a, b)| json!([a, b])).collect();
    let doc = json!({
        "graph": graph.to_spec(),
        "sign_convention": convention.name(),
        "u": bottom.u,
        "v": top.v,
        "word": glued.word.hat(),
        "quiver": quiver_json(&glued.quiver),
        "renaming": renaming,
        "merged": glued.merged,
        "cancelled": glued.cancelled,
        "direct": quiver_json(direct.quiver()),
        "matches_direct": matches,
    });
    Ok(Outcome::json(
        &doc,
        if matches { EXIT_OK } else { EXIT_VIOLATION },
    ))
}
