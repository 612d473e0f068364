use std::cell::RefCell;
use std::path::Path;

use lya_core::algebra::{validate_lya, LyAlgebra};
use lya_core::hopf::{antipode_check, hopf_envelope, s_squared_check};
use lya_core::io::{grading_to_json, matrix_from_value, module_from_value, module_to_json, parse_algebra, parse_json};
use lya_core::linalg::Matrix;
use lya_core::poly::{Membership, MonoOrder};
use lya_core::rep::{induced_module, universal_module_presentation, validate_module, verify_matrix_point, LyModule};
use lya_core::scalar::int;
use lya_core::symmetry::{
    automorphism_equivalence_check, enumerate_diagonal_gradings, grading_to_point, is_automorphism_direct,
    point_to_grading, AutomorphismWitness, FiniteAbelianGroup,
};
use lya_core::universal::{bialgebra_structure, verify_coideal, verify_comodule, Presentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::Report;
use crate::{Common, Format, Order, Target};

type Outcome = Result<Report, String>;

fn start(command: &'static str, c: &Common) -> Report {
    let mut r = Report::new(command);
    r.config(
        "order",
        match c.order {
            Order::Degrevlex => "degrevlex",
            Order::Lex => "lex",
        },
    );
    if let Some(cap) = c.degree_cap {
        r.config("degree-cap", cap);
    }
    r.config("seed", c.seed);
    r
}

fn order(c: &Common) -> MonoOrder {
    match c.order {
        Order::Degrevlex => MonoOrder::DegRevLex,
        Order::Lex => MonoOrder::Lex,
    }
}

fn read(r: &mut Report, path: &Path) -> Result<String, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    r.input(path, &bytes);
    String::from_utf8(bytes).map_err(|_| format!("{}: not UTF-8", path.display()))
}

fn load_algebra(r: &mut Report, path: &Path) -> Result<LyAlgebra, String> {
    let text = read(r, path)?;
    parse_algebra(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_value(r: &mut Report, path: &Path) -> Result<Value, String> {
    let text = read(r, path)?;
    parse_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Module file; a string `over` is resolved relative to it and hashed too.
fn load_module(r: &mut Report, path: &Path) -> Result<LyModule, String> {
    let v = load_value(r, path)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let cell = RefCell::new(&mut *r);
    let resolve = |p: &str| {
        let full = base.join(p);
        let mut rep = cell.borrow_mut();
        let bytes = std::fs::read(&full)?;
        rep.input(&full, &bytes);
        parse_algebra(&String::from_utf8_lossy(&bytes))
    };
    module_from_value(&v, &resolve).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn one_based(w: &[usize]) -> String {
    let w: Vec<String> = w.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", w.join(","))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn axioms_json(report: &lya_core::algebra::AxiomReport) -> Value {
    report
        .results
        .iter()
        .map(|a| json!({ "axiom": a.axiom, "witness": a.witness.as_ref().map(|w| w.iter().map(|i| i + 1).collect::<Vec<_>>()) }))
        .collect()
}

pub fn validate(c: &Common, path: &Path) -> Outcome {
    let mut r = start("validate", c);
    let l = load_algebra(&mut r, path)?;
    let report = validate_lya(&l);
    r.line(format!("dim {}", l.dim()));
    r.line(report.to_string());
    r.set("dim", l.dim());
    r.set("axioms", axioms_json(&report));
    if !report.passed() {
        r.fail();
    }
    Ok(r)
}

fn presentation(r: &mut Report, c: &Common, l: &Path, k: Option<&Path>) -> Result<Presentation, String> {
    let la = load_algebra(r, l)?;
    let ka = match k {
        Some(k) => load_algebra(r, k)?,
        None => la.clone(),
    };
    Ok(Presentation::with_order(&la, &ka, order(c)))
}

pub fn universal(c: &Common, l: &Path, k: Option<&Path>, dump: Option<&Path>) -> Outcome {
    let mut r = start("universal", c);
    let pres = presentation(&mut r, c, l, k)?;
    r.line(format!("variables: {}", pres.vars().len()));
    r.line(format!("P generators: {}", pres.p_generators().len()));
    r.line(format!("Q generators: {}", pres.q_generators().len()));
    r.line(format!("ideal generators (monic, deduplicated): {}", pres.ideal().generators().len()));
    match dump {
        Some(p) => {
            write(p, &pres.dump_text())?;
            r.line(format!("dump written to {}", p.display()));
        }
        None if c.format == Format::Text => r.line(pres.dump_text()),
        None => {}
    }
    r.set("presentation", pres.dump_json());
    Ok(r)
}

pub fn bialgebra(c: &Common, path: &Path) -> Outcome {
    let mut r = start("bialgebra", c);
    let l = load_algebra(&mut r, path)?;
    let pres = Presentation::with_order(&l, &l, order(c));
    let cap = c.degree_cap.unwrap_or_else(|| pres.default_cap());
    let b = bialgebra_structure(&pres).map_err(|e| e.to_string())?;
    let report = verify_coideal(&b, cap);
    r.line(format!("degree cap {cap}"));
    let mut entries = Vec::new();
    for e in &report.entries {
        r.line(format!(
            "{}: counit {}, coproduct in J⊗A + A⊗J: {} ({})",
            e.generator,
            if e.counit_zero { "0" } else { "nonzero" },
            e.membership.name(),
            e.strategy.name()
        ));
        entries.push(json!({
            "generator": e.generator, "counit_zero": e.counit_zero,
            "membership": e.membership.name(), "strategy": e.strategy.name(),
        }));
    }
    r.line(format!(
        "certified {}/{} generators, unknown {}",
        entries.len() - failures(&report),
        entries.len(),
        report.unknown()
    ));
    if report.unknown() > 0 {
        r.line("some entries are undecided at this cap; raise --degree-cap");
    }
    r.set("degree_cap", cap);
    r.set("entries", entries);
    r.set("certified", report.certified());
    if !report.certified() {
        r.fail();
    }
    Ok(r)
}

fn failures(report: &lya_core::universal::CoidealReport) -> usize {
    report.entries.iter().filter(|e| !(e.counit_zero && e.membership == Membership::Yes)).count()
}

pub fn comodule(c: &Common, path: &Path, dump: Option<&Path>) -> Outcome {
    let mut r = start("comodule", c);
    let l = load_algebra(&mut r, path)?;
    let pres = Presentation::with_order(&l, &l, order(c));
    let b = bialgebra_structure(&pres).map_err(|e| e.to_string())?;
    let rep = verify_comodule(&b);
    r.line(format!("coassociativity (id⊗Δ)Φ = (Φ⊗id)Φ: {}", yes(rep.coassociative)));
    r.line(format!("counit (id⊗ε)Φ = id: {}", yes(rep.counit)));
    if let Some(p) = dump {
        let (lhs, rhs) = rep.dump_sides();
        write(p, &format!("# (id⊗Δ)Φ\n{lhs}# (Φ⊗id)Φ\n{rhs}"))?;
        r.line(format!("sides written to {}", p.display()));
    }
    r.set("coassociative", rep.coassociative);
    r.set("counit", rep.counit);
    if !rep.passed() {
        r.fail();
    }
    Ok(r)
}

pub fn hopf(c: &Common, path: &Path, depth: u32, dump: Option<&Path>, s_squared: bool) -> Outcome {
    let mut r = start("hopf", c);
    r.config("depth", depth);
    let l = load_algebra(&mut r, path)?;
    let pres = Presentation::with_order(&l, &l, order(c));
    let b = bialgebra_structure(&pres).map_err(|e| e.to_string())?;
    let h = hopf_envelope(&b, depth).map_err(|e| e.to_string())?;
    let cap = c.degree_cap.unwrap_or_else(|| h.ideal().default_cap());
    r.line(format!("levels 0..={depth}, variables {}, generators {}", h.vars().len(), h.generators().len()));
    let counit = h.counit_violation();
    r.line(format!("counit: {}", counit.as_deref().map_or("ok".to_string(), |g| format!("fails on {g}"))));
    let s = antipode_check(&h, cap);
    let bad: Vec<&str> =
        s.entries.iter().filter(|e| e.membership != Membership::Yes).map(|e| e.generator.as_str()).collect();
    r.line(format!("antipode: {}/{} generators certified at cap {cap}", s.entries.len() - bad.len(), s.entries.len()));
    for g in &bad {
        r.line(format!("  not certified: {g}"));
    }
    r.set("variables", h.vars().len());
    r.set("generators", h.generators().len());
    r.set("counit_violation", counit.clone());
    r.set("antipode_certified", s.certified());
    r.set("antipode_unknown", s.unknown());
    if s_squared {
        let s2 = s_squared_check(&h, cap);
        let yes_count = s2.entries.iter().filter(|e| e.membership == Membership::Yes).count();
        if s2.entries.is_empty() {
            r.line("S²: needs two levels above level 0; rerun with --depth 2");
        } else {
            r.line(format!(
                "S²: {yes_count}/{} generators map into the ideal, {} unknown",
                s2.entries.len(),
                s2.unknown()
            ));
        }
        r.set("s_squared_certified", yes_count);
    }
    if let Some(p) = dump {
        write(p, &h.dump_text())?;
        r.line(format!("dump written to {}", p.display()));
    }
    if counit.is_some() || !s.certified() {
        r.fail();
    }
    Ok(r)
}

pub fn module_validate(c: &Common, path: &Path) -> Outcome {
    let mut r = start("module-validate", c);
    let m = load_module(&mut r, path)?;
    let report = validate_module(&m);
    r.line(format!("module of dim {} over an algebra of dim {}", m.dim(), m.over().dim()));
    r.line(report.to_string());
    r.set("axioms", axioms_json(&report));
    if !report.passed() {
        r.fail();
    }
    Ok(r)
}

/// A bare matrix is a scalar point; otherwise `{"dim": w, "images": [[s, i, matrix]...]}`
/// with missing images zero.
fn matrix_point_images(v: &Value, n: usize, m: usize) -> Result<Vec<Matrix>, String> {
    let Some(list) = v.get("images") else {
        let t = matrix_from_value(v, "").map_err(|e| e.to_string())?;
        if t.rows() != n || t.cols() != m {
            return Err(format!("point matrix must be {n}x{m}, found {}x{}", t.rows(), t.cols()));
        }
        return Ok((0..n * m).map(|k| Matrix::from_rows(vec![vec![t[(k / m, k % m)].clone()]])).collect());
    };
    let w = v.get("dim").and_then(Value::as_u64).ok_or("field `dim`: expected a positive integer")? as usize;
    if w == 0 {
        return Err("field `dim`: expected a positive integer".into());
    }
    let mut images = vec![Matrix::zeros(w, w); n * m];
    let list = list.as_array().ok_or("field `images`: expected an array")?;
    for (k, e) in list.iter().enumerate() {
        let p = format!("images[{}]", k + 1);
        let items = e.as_array().filter(|a| a.len() == 3).ok_or(format!("field `{p}`: expected [s, i, matrix]"))?;
        let idx = |x: &Value, hi: usize, q: &str| {
            x.as_u64()
                .map(|v| v as usize)
                .filter(|v| (1..=hi).contains(v))
                .ok_or(format!("field `{q}`: expected an index in 1..={hi}"))
        };
        let s = idx(&items[0], n, &format!("{p}[1]"))?;
        let i = idx(&items[1], m, &format!("{p}[2]"))?;
        let mx = matrix_from_value(&items[2], &format!("{p}[3]")).map_err(|e| e.to_string())?;
        if mx.rows() != w || mx.cols() != w {
            return Err(format!("field `{p}[3]`: expected a {w}x{w} matrix"));
        }
        images[(s - 1) * m + (i - 1)] = mx;
    }
    Ok(images)
}

pub fn induce(c: &Common, module: &Path, point: &Path, k: Option<&Path>, dump: Option<&Path>) -> Outcome {
    let mut r = start("induce", c);
    let u = load_module(&mut r, module)?;
    let ka = match k {
        Some(k) => load_algebra(&mut r, k)?,
        None => u.over().clone(),
    };
    let pres = Presentation::with_order(u.over(), &ka, order(c));
    let (n, m) = pres.dims();
    let v = load_value(&mut r, point)?;
    let images = matrix_point_images(&v, n, m).map_err(|e| format!("{}: {e}", point.display()))?;
    let w = match verify_matrix_point(&pres, images) {
        Ok(w) => w,
        Err(e) => {
            r.line(format!("not a matrix point: {e}"));
            r.fail();
            return Ok(r);
        }
    };
    let induced = induced_module(&u, &w).map_err(|e| e.to_string())?;
    let report = validate_module(&induced);
    r.line(format!("U ⊗ W: dim {} = {} x {}", induced.dim(), u.dim(), w.wdim()));
    r.line(report.to_string());
    let text = serde_json::to_string_pretty(&module_to_json(&induced)).expect("serializable");
    if let Some(p) = dump {
        write(p, &format!("{text}\n"))?;
        r.line(format!("module written to {}", p.display()));
    }
    r.set("axioms", axioms_json(&report));
    r.set("module", module_to_json(&induced));
    if !report.passed() {
        r.fail();
    }
    Ok(r)
}

pub fn universal_module(c: &Common, u: &Path, v: &Path, dump: Option<&Path>) -> Outcome {
    let mut r = start("universal-module", c);
    let um = load_module(&mut r, u)?;
    let vm = load_module(&mut r, v)?;
    let (presn, gamma) = match universal_module_presentation(&um, &vm) {
        Ok(x) => x,
        Err(e) => {
            r.line(e.to_string());
            r.fail();
            return Ok(r);
        }
    };
    r.line(format!("generators Y[s,r]: {}", presn.generator_count()));
    r.line(format!("relations: {}", presn.relations().len()));
    if let Some(rank) = presn.free_rank() {
        r.line(format!("free of rank {rank}"));
    }
    r.line(format!("Γ:\n{gamma}"));
    match dump {
        Some(p) => {
            write(p, &presn.dump())?;
            r.line(format!("dump written to {}", p.display()));
        }
        None if c.format == Format::Text => r.line(presn.dump()),
        None => {}
    }
    r.set("generators", presn.generator_count());
    r.set("relations", presn.relations().iter().map(|x| x.to_string()).collect::<Vec<_>>());
    r.set("free_rank", presn.free_rank());
    Ok(r)
}

fn witness_text(l: &LyAlgebra, m: &Matrix) -> Option<String> {
    match is_automorphism_direct(l, m).ok()?? {
        AutomorphismWitness::Singular => Some("singular matrix".into()),
        AutomorphismWitness::Bracket(b, w) => Some(format!("{b} bracket fails at {}", one_based(&w))),
    }
}

pub fn autocheck(c: &Common, path: &Path, matrix: Option<&Path>, random: Option<usize>, range: i64) -> Outcome {
    let mut r = start("autocheck", c);
    let l = load_algebra(&mut r, path)?;
    let pres = Presentation::with_order(&l, &l, order(c));
    let n = l.dim();
    if let Some(mp) = matrix {
        let v = load_value(&mut r, mp)?;
        let m = matrix_from_value(&v, "").map_err(|e| format!("{}: {e}", mp.display()))?;
        let rep = automorphism_equivalence_check(&pres, &m).map_err(|e| e.to_string())?;
        r.line(format!(
            "automorphism: {}, point: {}, agreement: {}",
            yes(rep.direct),
            yes(rep.via_points()),
            yes(rep.agrees())
        ));
        r.line(format!(
            "relations vanish: {}, invertible: {}, inverse is a point: {}",
            yes(rep.point),
            yes(rep.invertible),
            yes(rep.inverse_point)
        ));
        if let Some(w) = witness_text(&l, &m) {
            r.line(format!("witness: {w}"));
        }
        r.set("automorphism", rep.direct);
        r.set("point", rep.point);
        r.set("invertible", rep.invertible);
        r.set("inverse_point", rep.inverse_point);
        r.set("agreement", rep.agrees());
        if !(rep.direct && rep.agrees()) {
            r.fail();
        }
        return Ok(r);
    }
    let count = random.unwrap_or(0);
    r.config("random", count);
    r.config("range", range);
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let (mut autos, mut disagreements) = (0, Vec::new());
    for k in 0..count {
        let m = Matrix::from_fn(n, n, |_, _| int(rng.gen_range(-range..=range)));
        let rep = automorphism_equivalence_check(&pres, &m).map_err(|e| e.to_string())?;
        autos += rep.direct as usize;
        if !rep.agrees() {
            disagreements.push(k);
            r.line(format!("disagreement at sample {k}: {:?}", m));
        }
    }
    r.line(format!("{count} random matrices: {autos} automorphisms, {} disagreements", disagreements.len()));
    r.set("samples", count);
    r.set("automorphisms", autos);
    r.set("disagreements", disagreements.clone());
    if !disagreements.is_empty() {
        r.fail();
    }
    Ok(r)
}

pub fn gradings(c: &Common, path: &Path, group: &str, cap: usize) -> Outcome {
    let mut r = start("gradings", c);
    r.config("group", group);
    let l = load_algebra(&mut r, path)?;
    let g = FiniteAbelianGroup::parse(group, cap).map_err(|e| e.to_string())?;
    let pres = Presentation::with_order(&l, &l, order(c));
    let found = enumerate_diagonal_gradings(&l, &g);
    r.line(format!("{} diagonal gradings by {g}", found.len()));
    let mut out = Vec::new();
    for (k, gr) in found.iter().enumerate() {
        let a = gr.assignment().expect("diagonal");
        let parts: Vec<String> = a
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let exps: Vec<String> = g.element(e).iter().map(u32::to_string).collect();
                format!("{}:({})", l.label(i), exps.join(","))
            })
            .collect();
        let roundtrip = grading_to_point(&pres, gr).and_then(|p| point_to_grading(&p)).is_ok_and(|b| &b == gr);
        r.line(format!(
            "{:>3}  {}{}",
            k + 1,
            parts.join(" "),
            if roundtrip { "" } else { "  [point roundtrip FAILED]" }
        ));
        if !roundtrip {
            r.fail();
        }
        out.push(grading_to_json(gr).expect("diagonal"));
    }
    r.set("group", g.orders().to_vec());
    r.set("gradings", out);
    Ok(r)
}

pub fn export(c: &Common, l: &Path, k: Option<&Path>, target: Target, dump: Option<&Path>) -> Outcome {
    let mut r = start("export", c);
    let pres = presentation(&mut r, c, l, k)?;
    let (name, text) = match target {
        Target::CasScript => ("cas-script", pres.cas_script()),
        Target::Text => ("text", pres.dump_text()),
        Target::Json => {
            ("json", format!("{}\n", serde_json::to_string_pretty(&pres.dump_json()).expect("serializable")))
        }
    };
    r.config("target", name);
    match dump {
        Some(p) => {
            write(p, &text)?;
            r.line(format!("{name} written to {}", p.display()));
        }
        None => r.line(text.clone()),
    }
    r.set("target", name);
    r.set("content", text);
    Ok(r)
}
