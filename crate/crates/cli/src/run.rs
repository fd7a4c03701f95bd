//! Step evaluation.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::rc::Rc;
use std::time::Instant;

use exotic4::construct::{
    blow_up, blow_up_as, fiber_sum, primed, redeclare, resolve_union, t4_twist_template, torus_surgery, with_surface,
    Complement, FiberSum, GluingMap, ResolutionPlan, SurgerySpec,
};
use exotic4::fpgroup::intmat::{to_big, Hermite};
use exotic4::fpgroup::{
    derive_relation, eliminate_generators, parse_relation, prove_trivial, Effort, Presentation, ProofStatus, Word,
};
use exotic4::swengine::{
    canonical_sum_sw, chamber_proviso, conjugation_sign, enumerate_basic_classes, fps_family, minimality_gap_check,
    mms_value, BasicClassProblem,
};
use exotic4::topmodel::{betti_numbers, parse_manifold_json, Manifold, ManifoldFlag, SurfaceFlag, SwFunction};
use exotic4::verdict::{freedman_type, hk_irreducible, reverse_engineering_check, usher_minimality, Minimality};
use exotic4::{Error, Result};
use serde_json::Value as Json;

use crate::report::{Expectation, Report, StepReport};
use crate::script::*;
use crate::value::{lookup, Value};

/// Why a run stopped before producing a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    /// The script could not be read or parsed.
    Load(String),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Load(m) => write!(f, "{m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub effort: Effort,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { effort: Effort::default(), timing: false }
    }
}

type Cache = Rc<RefCell<HashMap<String, Rc<Value>>>>;

/// Evaluates scripts; imported scripts are evaluated once per parameter set.
pub struct Runner {
    options: Options,
    cache: Cache,
    stack: Rc<RefCell<Vec<PathBuf>>>,
}

impl Runner {
    pub fn new(options: Options) -> Self {
        Runner { options, cache: Rc::default(), stack: Rc::default() }
    }

    pub fn run_file(&self, path: &Path) -> std::result::Result<Report, RunError> {
        self.run_file_with(path, &BTreeMap::new())
    }

    pub fn run_file_with(&self, path: &Path, params: &BTreeMap<String, Json>) -> std::result::Result<Report, RunError> {
        let text = std::fs::read_to_string(path).map_err(|e| RunError::Load(format!("{}: {e}", path.display())))?;
        let script = parse_script(&text, params).map_err(|e| RunError::Load(format!("{}: {e}", path.display())))?;
        let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(self.run_script(&script, &dir).0)
    }

    /// Runs a parsed script; `dir` resolves relative paths in `load` and
    /// `import`. Also returns the final bindings.
    pub fn run_script(&self, script: &Script, dir: &Path) -> (Report, BTreeMap<String, Rc<Value>>) {
        let mut env: BTreeMap<String, Rc<Value>> = BTreeMap::new();
        let mut steps = Vec::new();
        let mut inconsistent = None;
        for (i, step) in script.steps.iter().enumerate() {
            let t0 = Instant::now();
            let result = self.eval(&step.op, &env, dir);
            let elapsed = t0.elapsed();
            let mut sr = StepReport {
                index: i + 1,
                op: step.op_name.clone(),
                bind: step.bind.clone(),
                note: step.note.clone(),
                view: None,
                error: None,
                expectations: Vec::new(),
                findings: Vec::new(),
                millis: self.options.timing.then(|| elapsed.as_millis() as u64),
            };
            match result {
                Ok(v) => {
                    if let Value::Manifold(m) = &v {
                        sr.findings = m.validate().iter().map(|f| f.to_string()).collect();
                    }
                    let view = v.view();
                    if let Some(kind) = &step.expect_error {
                        sr.expectations.push(Expectation {
                            key: "error".into(),
                            expected: Json::String(kind.clone()),
                            actual: Json::Null,
                            pass: false,
                        });
                    }
                    for (k, want) in &step.expect {
                        let got = lookup(&view, k).cloned().unwrap_or(Json::Null);
                        let pass = &got == want;
                        sr.expectations.push(Expectation { key: k.clone(), expected: want.clone(), actual: got, pass });
                    }
                    sr.view = Some(view);
                    if let Some(b) = &step.bind {
                        env.insert(b.clone(), Rc::new(v));
                    }
                }
                Err(e) => {
                    sr.error = Some(format!("{}: {e}", e.kind()));
                    let want = step.expect_error.clone().unwrap_or_default();
                    sr.expectations.push(Expectation {
                        key: "error".into(),
                        expected: Json::String(want.clone()),
                        actual: Json::String(e.kind().into()),
                        pass: want == e.kind(),
                    });
                }
            }
            let stop = !sr.findings.is_empty();
            steps.push(sr);
            if stop {
                inconsistent = Some(i + 1);
                break;
            }
        }
        let report = Report::new(script, self.options, steps, inconsistent);
        (report, env)
    }

    fn import(&self, a: &ImportArgs, dir: &Path) -> Result<Rc<Value>> {
        let path = dir.join(&a.script);
        let key = format!("{}|{}|{}", path.display(), serde_json::to_string(&a.params).unwrap_or_default(), a.binding);
        if let Some(v) = self.cache.borrow().get(&key) {
            return Ok(v.clone());
        }
        if self.stack.borrow().contains(&path) {
            return Err(Error::InvalidArgument(format!("import cycle through {}", a.script)));
        }
        let text = std::fs::read_to_string(&path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", a.script)))?;
        let script =
            parse_script(&text, &a.params).map_err(|e| Error::InvalidArgument(format!("{}: {e}", a.script)))?;
        self.stack.borrow_mut().push(path.clone());
        let sub_dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
        let (report, env) = self.run_script(&script, &sub_dir);
        self.stack.borrow_mut().pop();
        if !report.all_met() {
            return Err(Error::InvalidArgument(format!("imported script {} has failures", a.script)));
        }
        let v = env.get(&a.binding).cloned().ok_or_else(|| Error::UnknownLabel(a.binding.clone()))?;
        self.cache.borrow_mut().insert(key, v.clone());
        Ok(v)
    }

    fn eval(&self, op: &Op, env: &BTreeMap<String, Rc<Value>>, dir: &Path) -> Result<Value> {
        let get = |b: &str| -> Result<Rc<Value>> {
            env.get(b).cloned().ok_or_else(|| Error::InvalidArgument(format!("binding `{b}` is unavailable")))
        };
        let manifold = |b: &str| -> Result<Manifold> {
            match &*get(b)? {
                Value::Manifold(m) => Ok((**m).clone()),
                v => Err(Error::InvalidArgument(format!("binding `{b}` is a {}, not a manifold", v.kind()))),
            }
        };
        let numbers = |s: &NumbersSpec| -> Result<(i64, i64)> {
            match s {
                NumbersSpec::Pair((e, s)) => Ok((e.0, s.0)),
                NumbersSpec::Binding(b) => get(b)?
                    .numbers()
                    .ok_or_else(|| Error::InvalidArgument(format!("binding `{b}` has no characteristic numbers"))),
            }
        };
        let effort = self.options.effort;
        let mf = |m: Manifold| Ok(Value::Manifold(Box::new(m)));
        match op {
            Op::Product(a) => mf(exotic4::topmodel::product_block(a.g, a.h)?),
            Op::Load(a) => {
                let text = std::fs::read_to_string(dir.join(&a.path))
                    .map_err(|e| Error::InvalidArgument(format!("{}: {e}", a.path)))?;
                mf(parse_manifold_json(&text)?)
            }
            Op::Import(a) => Ok((*self.import(a, dir)?).clone()),
            Op::BlowUp(a) => {
                let mut m = manifold(&a.manifold)?;
                let meets: Vec<&str> = a.meets.iter().map(|s| s.as_str()).collect();
                for _ in 0..a.times {
                    m = match (&a.label, a.times) {
                        (Some(l), 1) => blow_up_as(&m, &meets, l)?,
                        _ => blow_up(&m, &meets)?,
                    };
                }
                mf(m)
            }
            Op::Resolve(a) => {
                let m = manifold(&a.manifold)?;
                let plan = ResolutionPlan { components: a.components.clone(), double_points: a.double_points };
                let s = resolve_union(&m, &plan, &a.label, a.images.clone())?;
                mf(with_surface(&m, s)?)
            }
            Op::Prime(a) => mf(primed(&manifold(&a.manifold)?, &a.suffix, a.labels)?),
            Op::FiberSum(a) => {
                let y = manifold(&a.left)?;
                let yp = manifold(&a.right)?;
                let g = y.surface(&a.left_surface)?.genus;
                let phi = match &a.gluing {
                    GluingSpec::Named(s) if s == "identity" => GluingMap::identity(g),
                    GluingSpec::Named(s) => return Err(Error::BadGluing(format!("unknown gluing `{s}`"))),
                    GluingSpec::Map(m) => GluingMap { assignments: m.clone() },
                };
                let complement = |c: &Option<ComplementSpec>, side: &Manifold| -> Result<Option<Complement>> {
                    let Some(c) = c else { return Ok(None) };
                    let presentation = match &c.presentation {
                        Some(p) => p.clone(),
                        None => side.pi1.without_relators(&c.drop)?,
                    };
                    Ok(Some(Complement {
                        presentation,
                        meridian: c.meridian.clone(),
                        provenance: c.provenance.clone(),
                    }))
                };
                let spec = FiberSum {
                    name: a.name.clone(),
                    phi,
                    meridian_killed: a.meridian_killed.clone(),
                    complements: [complement(&a.complements.left, &y)?, complement(&a.complements.right, &yp)?],
                    declared: a.declared.build()?,
                };
                mf(fiber_sum(&y, &a.left_surface, &yp, &a.right_surface, &spec)?)
            }
            Op::Surgery(a) => {
                let m = manifold(&a.manifold)?;
                let spec = SurgerySpec {
                    torus_label: a.torus.clone(),
                    lambda_pushoff: a.lambda.clone(),
                    meridian: a.meridian.clone(),
                    p: a.p.0,
                    q: a.q.0,
                    framing: a.framing,
                    complement_presentation: m.pi1.without_relators(&a.drop)?,
                    core_label: a.core.clone(),
                    drop_classes: a.drop_classes.clone(),
                };
                mf(torus_surgery(&m, &spec)?)
            }
            Op::TwistTemplate(a) => mf(t4_twist_template(a.n.0)?),
            Op::Eliminate(a) => {
                let m = manifold(&a.manifold)?;
                let ids: Vec<(String, Word)> = a.identifications.iter().map(|(g, w)| (g.clone(), w.clone())).collect();
                let mut out = m.clone();
                out.pi1 = eliminate_generators(&m.pi1, &ids)?;
                for s in &mut out.surfaces {
                    if let Some(im) = &mut s.pi1_images {
                        for w in im.iter_mut() {
                            for _ in 0..=a.identifications.len() {
                                if !a.identifications.keys().any(|g| w.mentions(g)) {
                                    break;
                                }
                                *w = w.substitute(&a.identifications);
                            }
                        }
                    }
                }
                mf(out)
            }
            Op::Declare(a) => {
                let m = manifold(&a.manifold)?;
                let d = DeclaredSpec { lattice: a.lattice.clone(), surfaces: a.surfaces.clone() }.build()?;
                let mut out = redeclare(&m, &d)?;
                if let Some(n) = &a.name {
                    out.name = n.clone();
                }
                mf(out)
            }
            Op::WithFlags(a) => {
                let mut m = manifold(&a.manifold)?;
                let evidence = a.evidence.as_deref().map(get).transpose()?;
                for (&flag, &on) in &a.set {
                    if on {
                        let backed = match (&evidence, flag) {
                            (Some(v), ManifoldFlag::SimplyConnected) => matches!(&**v,
                                Value::Proof { subject, verdict } if *subject == a.manifold && verdict.status == ProofStatus::Proven),
                            (Some(v), ManifoldFlag::Minimal) => matches!(&**v,
                                Value::Minimality { subject, verdict: Minimality::Minimal } if *subject == a.manifold),
                            _ => false,
                        };
                        let declared = a.provenance.as_deref().is_some_and(|p| !p.trim().is_empty());
                        if !backed && !declared {
                            return Err(Error::InvalidArgument(format!(
                                "setting {flag:?} needs evidence about `{}` or a provenance",
                                a.manifold
                            )));
                        }
                    }
                    m.set(flag, on);
                }
                mf(m)
            }
            Op::ProveTrivial(a) => {
                let m = manifold(&a.manifold)?;
                Ok(Value::Proof { subject: a.manifold.clone(), verdict: prove_trivial(&m.pi1, effort) })
            }
            Op::DeriveRelation(a) => {
                let m = manifold(&a.manifold)?;
                let w = parse_relation(&a.relation)?;
                Ok(Value::Proof { subject: a.manifold.clone(), verdict: derive_relation(&m.pi1, &w, effort) })
            }
            Op::RelatorsEqual(a) => {
                let m = manifold(&a.manifold)?;
                let gens = a.generators.clone().unwrap_or_else(|| m.pi1.generators().to_vec());
                let rels = a.relators.iter().map(|r| parse_relation(r)).collect::<Result<Vec<_>>>()?;
                let want = Presentation::new(gens.clone(), rels)?;
                Ok(Value::Bool(gens == m.pi1.generators() && want.relator_classes() == m.pi1.relator_classes()))
            }
            Op::FreedmanType(a) => Ok(Value::Homeo(freedman_type(&manifold(&a.manifold)?, effort)?)),
            Op::UsherMinimality(a) => Ok(Value::Minimality {
                subject: a.manifold.clone(),
                verdict: usher_minimality(&manifold(&a.manifold)?, &a.hypotheses)?,
            }),
            Op::HkIrreducible(a) => Ok(Value::Irreducibility(hk_irreducible(&manifold(&a.manifold)?))),
            Op::ReverseEngineering(a) => {
                let m = manifold(&a.manifold)?;
                let r = lagrangian_rank(&m);
                Ok(Value::Conditions(reverse_engineering_check(&m, numbers(&a.target)?, r)))
            }
            Op::Numbers(a) => Ok(Value::Numbers { e: a.e.0, sigma: a.sigma.0 }),
            Op::NumbersSum(a) => {
                let (e1, s1) = numbers(&a.left)?;
                let (e2, s2) = numbers(&a.right)?;
                if a.genus == 0 {
                    return Err(Error::InvalidArgument("fiber sums need positive genus".into()));
                }
                Ok(Value::Numbers { e: e1 + e2 + 4 * a.genus as i64 - 4, sigma: s1 + s2 })
            }
            Op::Delta(a) => {
                let (e1, s1) = numbers(&NumbersSpec::Binding(a.from.clone()))?;
                let (e2, s2) = numbers(&NumbersSpec::Binding(a.to.clone()))?;
                Ok(Value::Numbers { e: e2 - e1, sigma: s2 - s1 })
            }
            Op::Enumerate(a) => {
                let p = match (&a.manifold, &a.model) {
                    (Some(b), None) => {
                        let m = manifold(b)?;
                        BasicClassProblem {
                            lattice: m.lattice.clone(),
                            surfaces: m.surfaces.clone(),
                            e: m.e,
                            sigma: m.sigma,
                            simple_type: a.simple_type,
                        }
                    }
                    (None, Some(md)) => {
                        let tori: Vec<(&str, u32)> = md.tori.iter().map(|(l, g)| (l.as_str(), *g)).collect();
                        let mut p = BasicClassProblem::sum_model(
                            md.sigma_genus,
                            md.g_genus,
                            &tori,
                            md.pairs,
                            md.e.0,
                            md.sigma.0,
                        )?;
                        p.simple_type = a.simple_type;
                        p
                    }
                    _ => {
                        return Err(Error::InvalidArgument("enumerate takes exactly one of manifold and model".into()))
                    }
                };
                let classes = enumerate_basic_classes(&p)?;
                Ok(Value::Classes {
                    lattice: p.lattice.clone(),
                    classes,
                    simple_type_square: p.simple_type.then(|| p.simple_type_square()),
                })
            }
            Op::AttachSw(a) => {
                let mut m = manifold(&a.manifold)?;
                let (lattice, classes) = match &*get(&a.classes)? {
                    Value::Classes { lattice, classes, .. } => (lattice.clone(), classes.clone()),
                    v => return Err(Error::InvalidArgument(format!("`{}` is a {}, not classes", a.classes, v.kind()))),
                };
                if lattice.basis != m.lattice.basis {
                    return Err(Error::InvalidArgument("classes were enumerated in a different basis".into()));
                }
                let k = a.canonical.resolve(&m.lattice)?;
                let neg: Vec<i64> = k.iter().map(|x| -x).collect();
                let mut want = vec![k.clone(), neg];
                want.sort();
                want.dedup();
                if classes != want {
                    return Err(Error::InvalidArgument(format!(
                        "enumeration leaves {} classes, not just the canonical pair",
                        classes.len()
                    )));
                }
                let sign = conjugation_sign(m.e, m.sigma)?;
                m.sw = Some(SwFunction::from_pairs([(k, a.value.0)]).symmetrize(sign)?);
                mf(m)
            }
            Op::SeedSw(a) => {
                let mut m = manifold(&a.manifold)?;
                let mut f = SwFunction::new();
                for entry in &a.values {
                    f.insert(entry.class.resolve(&m.lattice)?, entry.value.0);
                }
                m.sw = Some(f);
                mf(m)
            }
            Op::GapCheck(a) => {
                let m = manifold(&a.manifold)?;
                let classes = if a.classes.is_empty() {
                    m.sw.as_ref().map(|f| f.basic_classes()).unwrap_or_default()
                } else {
                    a.classes.iter().map(|c| c.resolve(&m.lattice)).collect::<Result<Vec<_>>>()?
                };
                Ok(Value::Gap(minimality_gap_check(&classes, &m.lattice)))
            }
            Op::FpsFamily(a) => {
                let m = manifold(&a.manifold)?;
                Ok(Value::Family(fps_family(&m.sw.unwrap_or_default())))
            }
            Op::FamilySw(a) => {
                let x0 = manifold(&a.x0)?;
                let k = a.class.resolve(&x0.lattice)?;
                let orbit = x0.sw.as_ref().map(|f| f.get(&k)).unwrap_or(0);
                let values = a.members.iter().map(|n| mms_value(a.base_value.0, &[orbit], n.0 - 1)).collect();
                let proviso = match &a.member {
                    Some(b) => {
                        let (e, sigma) = get(b)?
                            .numbers()
                            .ok_or_else(|| Error::InvalidArgument(format!("`{b}` has no characteristic numbers")))?;
                        let b = betti_numbers(e, sigma, 0)?;
                        chamber_proviso(b.b2plus, b.b2minus)
                    }
                    None => None,
                };
                Ok(Value::SwValues { values, proviso })
            }
            Op::SumSw(a) => {
                let left = match &a.left {
                    IntsSpec::One(v) => vec![v.0],
                    IntsSpec::Binding(b) => match &*get(b)? {
                        Value::Ints(v) | Value::SwValues { values: v, .. } => v.clone(),
                        Value::Int(v) => vec![*v],
                        v => return Err(Error::InvalidArgument(format!("`{b}` is a {}, not integers", v.kind()))),
                    },
                };
                let out =
                    left.iter().map(|&v| canonical_sum_sw(v, a.right.0, a.hypotheses)).collect::<Result<Vec<_>>>()?;
                Ok(Value::Ints(out))
            }
            Op::ConjugationSign(a) => Ok(Value::Int(conjugation_sign(a.e.0, a.sigma.0)?)),
            Op::MmsValue(a) => {
                let orbit: Vec<i64> = a.orbit.iter().map(|x| x.0).collect();
                Ok(Value::Int(mms_value(a.sw_at_k.0, &orbit, a.n.0)))
            }
            Op::SwAt(a) => {
                let m = manifold(&a.manifold)?;
                let k = a.class.resolve(&m.lattice)?;
                Ok(Value::Int(m.sw.as_ref().map(|f| f.get(&k)).unwrap_or(0)))
            }
            Op::Snapshot(a) => mf(manifold(&a.manifold)?),
        }
    }
}

/// Rank of the span of the lagrangian square-zero tori: how many
/// independent surgeries the manifold offers.
fn lagrangian_rank(m: &Manifold) -> u32 {
    let rows: Vec<Vec<i64>> = m
        .surfaces
        .iter()
        .filter(|s| s.genus == 1 && s.square == 0 && s.has(SurfaceFlag::Lagrangian))
        .map(|s| s.coords.clone())
        .collect();
    if rows.is_empty() {
        return 0;
    }
    let n = m.lattice.rank();
    Hermite::new(&to_big(&rows), n).rank() as u32
}
