//! Script documents: parsing, parameter substitution and load-time checks.

use std::collections::{BTreeMap, BTreeSet};

use exotic4::construct::{Framing, MeridianKilled};
use exotic4::fpgroup::{Presentation, Word};
use exotic4::swengine::SumHypotheses;
use exotic4::topmodel::{IntersectionLattice, ManifoldFlag, SurfaceClass, SurfaceFlag};
use exotic4::verdict::Hypotheses;
use exotic4::{Error, Result};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

/// Integer written either as a JSON number or as a string (after `${param}`
/// substitution).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Int(pub i64);

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(i64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Int(n)),
            Raw::S(s) => {
                s.trim().parse().map(Int).map_err(|_| serde::de::Error::custom(format!("`{s}` is not an integer")))
            }
        }
    }
}

/// A lattice class: an expression such as `2Sigma - G`, a coefficient map,
/// or raw coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassSpec {
    Expr(String),
    Coords(Vec<i64>),
    Map(BTreeMap<String, i64>),
}

impl ClassSpec {
    pub fn resolve(&self, l: &IntersectionLattice) -> Result<Vec<i64>> {
        match self {
            ClassSpec::Expr(s) => l.parse_class(s),
            ClassSpec::Coords(v) => {
                if v.len() != l.rank() {
                    return Err(Error::InvalidArgument(format!(
                        "{} coordinates for a rank {} lattice",
                        v.len(),
                        l.rank()
                    )));
                }
                Ok(v.clone())
            }
            ClassSpec::Map(m) => {
                let mut v = vec![0; l.rank()];
                for (k, c) in m {
                    let i = l.index_of(k).ok_or_else(|| Error::UnknownClass(k.clone()))?;
                    v[i] += c;
                }
                Ok(v)
            }
        }
    }
}

/// Either a full Gram matrix or labels, squares and nonzero pairings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeSpec {
    Full(IntersectionLattice),
    Compact(CompactLattice),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompactLattice {
    pub labels: Vec<String>,
    #[serde(default)]
    pub squares: BTreeMap<String, i64>,
    #[serde(default)]
    pub pairs: Vec<(String, String, i64)>,
    #[serde(default = "yes")]
    pub complete: bool,
}

fn yes() -> bool {
    true
}

impl LatticeSpec {
    pub fn build(&self) -> Result<IntersectionLattice> {
        match self {
            LatticeSpec::Full(l) => {
                l.check()?;
                Ok(l.clone())
            }
            LatticeSpec::Compact(c) => {
                for k in c.squares.keys() {
                    if !c.labels.contains(k) {
                        return Err(Error::UnknownClass(k.clone()));
                    }
                }
                let labels: Vec<&str> = c.labels.iter().map(|s| s.as_str()).collect();
                let squares: Vec<i64> = c.labels.iter().map(|l| c.squares.get(l).copied().unwrap_or(0)).collect();
                let pairs: Vec<(&str, &str, i64)> =
                    c.pairs.iter().map(|(u, v, x)| (u.as_str(), v.as_str(), *x)).collect();
                let mut l = IntersectionLattice::from_pairings(&labels, &squares, &pairs)?;
                l.complete = c.complete;
                Ok(l)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSpec {
    pub label: String,
    pub genus: u32,
    /// Defaults to the basis class with the same label.
    #[serde(default)]
    pub class: Option<ClassSpec>,
    #[serde(default)]
    pub flags: Vec<SurfaceFlag>,
    #[serde(default)]
    pub images: Option<Vec<Word>>,
}

impl SurfaceSpec {
    pub fn build(&self, l: &IntersectionLattice) -> Result<SurfaceClass> {
        let coords = match &self.class {
            Some(c) => c.resolve(l)?,
            None => l.unit(&self.label)?,
        };
        let mut s = SurfaceClass::in_lattice(&self.label, self.genus, coords, l);
        for f in &self.flags {
            s = s.with_flag(*f);
        }
        if let Some(im) = &self.images {
            s = s.with_images(im.clone());
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeclaredSpec {
    pub lattice: LatticeSpec,
    #[serde(default)]
    pub surfaces: Vec<SurfaceSpec>,
}

impl DeclaredSpec {
    pub fn build(&self) -> Result<exotic4::construct::Declared> {
        let lattice = self.lattice.build()?;
        let surfaces = self.surfaces.iter().map(|s| s.build(&lattice)).collect::<Result<Vec<_>>>()?;
        Ok(exotic4::construct::Declared { lattice, surfaces })
    }
}

/// A complement presentation: the side's group with some relators removed
/// (or given outright), plus the meridian word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplementSpec {
    #[serde(default)]
    pub drop: Vec<Word>,
    #[serde(default)]
    pub presentation: Option<Presentation>,
    pub meridian: Word,
    pub provenance: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Complements {
    #[serde(default)]
    pub left: Option<ComplementSpec>,
    #[serde(default)]
    pub right: Option<ComplementSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GluingSpec {
    Named(String),
    Map(BTreeMap<String, Word>),
}

/// Characteristic numbers given directly or read off a binding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumbersSpec {
    Pair((Int, Int)),
    Binding(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntsSpec {
    One(Int),
    Binding(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SwEntry {
    pub class: ClassSpec,
    pub value: Int,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub sigma_genus: u32,
    pub g_genus: u32,
    pub tori: Vec<(String, u32)>,
    pub pairs: usize,
    pub e: Int,
    pub sigma: Int,
}

macro_rules! args {
    ($name:ident { $($body:tt)* }) => {
        #[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
        #[serde(deny_unknown_fields)]
        pub struct $name { $($body)* }
    };
}

args!(ProductArgs { pub g: u32, pub h: u32 });
args!(LoadArgs { pub path: String });
args!(ImportArgs {
    pub script: String,
    pub binding: String,
    #[serde(default)]
    pub params: BTreeMap<String, Json>,
});
args!(BlowUpArgs {
    pub manifold: String,
    #[serde(default)]
    pub meets: Vec<String>,
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default = "one")]
    pub times: u32,
});
args!(ResolveArgs {
    pub manifold: String,
    pub components: Vec<String>,
    pub double_points: u32,
    pub label: String,
    #[serde(default)]
    pub images: Option<Vec<Word>>,
});
args!(PrimeArgs {
    pub manifold: String,
    pub suffix: String,
    #[serde(default)]
    pub labels: bool,
});
args!(FiberSumArgs {
    pub left: String,
    pub left_surface: String,
    pub right: String,
    pub right_surface: String,
    pub name: String,
    pub gluing: GluingSpec,
    #[serde(default)]
    pub meridian_killed: MeridianKilled,
    #[serde(default)]
    pub complements: Complements,
    pub declared: DeclaredSpec,
});
args!(SurgeryArgs {
    pub manifold: String,
    pub torus: String,
    pub lambda: Word,
    pub meridian: Word,
    pub p: Int,
    pub q: Int,
    #[serde(default = "lagrangian")]
    pub framing: Framing,
    #[serde(default)]
    pub drop: Vec<Word>,
    #[serde(default)]
    pub core: Option<String>,
    #[serde(default)]
    pub drop_classes: Vec<String>,
});
args!(TwistArgs { pub n: Int });
args!(EliminateArgs { pub manifold: String, pub identifications: BTreeMap<String, Word> });
args!(DeclareArgs {
    pub manifold: String,
    #[serde(default)]
    pub name: Option<String>,
    pub lattice: LatticeSpec,
    #[serde(default)]
    pub surfaces: Vec<SurfaceSpec>,
});
args!(FlagsArgs {
    pub manifold: String,
    pub set: BTreeMap<ManifoldFlag, bool>,
    #[serde(default)]
    pub evidence: Option<String>,
    #[serde(default)]
    pub provenance: Option<String>,
});
args!(ManifoldArgs { pub manifold: String });
args!(DeriveArgs { pub manifold: String, pub relation: String });
args!(RelatorsArgs {
    pub manifold: String,
    #[serde(default)]
    pub generators: Option<Vec<String>>,
    pub relators: Vec<String>,
});
args!(UsherArgs { pub manifold: String, #[serde(default)] pub hypotheses: Hypotheses });
args!(ReverseArgs { pub manifold: String, pub target: NumbersSpec });
args!(NumbersArgs { pub e: Int, pub sigma: Int });
args!(NumbersSumArgs {
    pub left: NumbersSpec,
    pub right: NumbersSpec,
    pub genus: u32,
});
args!(DeltaArgs { pub from: String, pub to: String });
args!(EnumerateArgs {
    #[serde(default)]
    pub manifold: Option<String>,
    #[serde(default)]
    pub model: Option<ModelSpec>,
    #[serde(default = "yes")]
    pub simple_type: bool,
});
args!(AttachSwArgs {
    pub manifold: String,
    pub classes: String,
    pub canonical: ClassSpec,
    pub value: Int,
});
args!(SeedSwArgs { pub manifold: String, pub values: Vec<SwEntry> });
args!(GapArgs { pub manifold: String, pub classes: Vec<ClassSpec> });
args!(FamilySwArgs {
    pub base_value: Int,
    pub x0: String,
    pub class: ClassSpec,
    pub members: Vec<Int>,
    /// A binding with the members' numbers, used to attach the chamber proviso.
    #[serde(default)]
    pub member: Option<String>,
});
args!(SumSwArgs {
    pub left: IntsSpec,
    pub right: Int,
    pub hypotheses: SumHypotheses,
});
args!(ConjugationArgs { pub e: Int, pub sigma: Int });
args!(MmsArgs { pub sw_at_k: Int, pub orbit: Vec<Int>, pub n: Int });
args!(SwAtArgs { pub manifold: String, pub class: ClassSpec });

fn one() -> u32 {
    1
}

fn lagrangian() -> Framing {
    Framing::Lagrangian
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Op {
    Product(ProductArgs),
    Load(LoadArgs),
    Import(ImportArgs),
    BlowUp(BlowUpArgs),
    Resolve(ResolveArgs),
    Prime(PrimeArgs),
    FiberSum(Box<FiberSumArgs>),
    Surgery(SurgeryArgs),
    TwistTemplate(TwistArgs),
    Eliminate(EliminateArgs),
    Declare(DeclareArgs),
    WithFlags(FlagsArgs),
    ProveTrivial(ManifoldArgs),
    DeriveRelation(DeriveArgs),
    RelatorsEqual(RelatorsArgs),
    FreedmanType(ManifoldArgs),
    UsherMinimality(UsherArgs),
    HkIrreducible(ManifoldArgs),
    ReverseEngineering(ReverseArgs),
    Numbers(NumbersArgs),
    NumbersSum(NumbersSumArgs),
    Delta(DeltaArgs),
    Enumerate(EnumerateArgs),
    AttachSw(AttachSwArgs),
    SeedSw(SeedSwArgs),
    GapCheck(GapArgs),
    FpsFamily(ManifoldArgs),
    FamilySw(FamilySwArgs),
    SumSw(SumSwArgs),
    ConjugationSign(ConjugationArgs),
    MmsValue(MmsArgs),
    SwAt(SwAtArgs),
    Snapshot(ManifoldArgs),
}

pub const OPS: &[&str] = &[
    "product",
    "load",
    "import",
    "blow_up",
    "resolve",
    "prime",
    "fiber_sum",
    "surgery",
    "twist_template",
    "eliminate",
    "declare",
    "with_flags",
    "prove_trivial",
    "derive_relation",
    "relators_equal",
    "freedman_type",
    "usher_minimality",
    "hk_irreducible",
    "reverse_engineering",
    "numbers",
    "numbers_sum",
    "delta",
    "enumerate",
    "attach_sw",
    "seed_sw",
    "gap_check",
    "fps_family",
    "family_sw",
    "sum_sw",
    "conjugation_sign",
    "mms_value",
    "sw_at",
    "snapshot",
];

fn args<T: DeserializeOwned>(op: &str, v: &Json) -> std::result::Result<T, String> {
    serde_json::from_value(v.clone()).map_err(|e| format!("arguments of `{op}`: {e}"))
}

impl Op {
    pub fn parse(name: &str, a: &Json) -> std::result::Result<Op, String> {
        Ok(match name {
            "product" => Op::Product(args(name, a)?),
            "load" => Op::Load(args(name, a)?),
            "import" => Op::Import(args(name, a)?),
            "blow_up" => Op::BlowUp(args(name, a)?),
            "resolve" => Op::Resolve(args(name, a)?),
            "prime" => Op::Prime(args(name, a)?),
            "fiber_sum" => Op::FiberSum(Box::new(args(name, a)?)),
            "surgery" => Op::Surgery(args(name, a)?),
            "twist_template" => Op::TwistTemplate(args(name, a)?),
            "eliminate" => Op::Eliminate(args(name, a)?),
            "declare" => Op::Declare(args(name, a)?),
            "with_flags" => Op::WithFlags(args(name, a)?),
            "prove_trivial" => Op::ProveTrivial(args(name, a)?),
            "derive_relation" => Op::DeriveRelation(args(name, a)?),
            "relators_equal" => Op::RelatorsEqual(args(name, a)?),
            "freedman_type" => Op::FreedmanType(args(name, a)?),
            "usher_minimality" => Op::UsherMinimality(args(name, a)?),
            "hk_irreducible" => Op::HkIrreducible(args(name, a)?),
            "reverse_engineering" => Op::ReverseEngineering(args(name, a)?),
            "numbers" => Op::Numbers(args(name, a)?),
            "numbers_sum" => Op::NumbersSum(args(name, a)?),
            "delta" => Op::Delta(args(name, a)?),
            "enumerate" => Op::Enumerate(args(name, a)?),
            "attach_sw" => Op::AttachSw(args(name, a)?),
            "seed_sw" => Op::SeedSw(args(name, a)?),
            "gap_check" => Op::GapCheck(args(name, a)?),
            "fps_family" => Op::FpsFamily(args(name, a)?),
            "family_sw" => Op::FamilySw(args(name, a)?),
            "sum_sw" => Op::SumSw(args(name, a)?),
            "conjugation_sign" => Op::ConjugationSign(args(name, a)?),
            "mms_value" => Op::MmsValue(args(name, a)?),
            "sw_at" => Op::SwAt(args(name, a)?),
            "snapshot" => Op::Snapshot(args(name, a)?),
            _ => return Err(format!("unknown op `{name}`")),
        })
    }

    /// Bindings read by this op.
    pub fn refs(&self) -> Vec<&str> {
        fn n(s: &NumbersSpec) -> Option<&str> {
            match s {
                NumbersSpec::Binding(b) => Some(b),
                NumbersSpec::Pair(_) => None,
            }
        }
        match self {
            Op::Product(_) | Op::Load(_) | Op::Import(_) | Op::TwistTemplate(_) | Op::Numbers(_) => vec![],
            Op::ConjugationSign(_) | Op::MmsValue(_) => vec![],
            Op::BlowUp(a) => vec![&a.manifold],
            Op::Resolve(a) => vec![&a.manifold],
            Op::Prime(a) => vec![&a.manifold],
            Op::FiberSum(a) => vec![&a.left, &a.right],
            Op::Surgery(a) => vec![&a.manifold],
            Op::Eliminate(a) => vec![&a.manifold],
            Op::Declare(a) => vec![&a.manifold],
            Op::WithFlags(a) => {
                let mut v = vec![a.manifold.as_str()];
                v.extend(a.evidence.as_deref());
                v
            }
            Op::ProveTrivial(a) | Op::FreedmanType(a) | Op::HkIrreducible(a) | Op::FpsFamily(a) | Op::Snapshot(a) => {
                vec![&a.manifold]
            }
            Op::DeriveRelation(a) => vec![&a.manifold],
            Op::RelatorsEqual(a) => vec![&a.manifold],
            Op::UsherMinimality(a) => vec![&a.manifold],
            Op::ReverseEngineering(a) => {
                let mut v = vec![a.manifold.as_str()];
                v.extend(n(&a.target));
                v
            }
            Op::NumbersSum(a) => n(&a.left).into_iter().chain(n(&a.right)).collect(),
            Op::Delta(a) => vec![&a.from, &a.to],
            Op::Enumerate(a) => a.manifold.as_deref().into_iter().collect(),
            Op::AttachSw(a) => vec![&a.manifold, &a.classes],
            Op::SeedSw(a) => vec![&a.manifold],
            Op::GapCheck(a) => vec![&a.manifold],
            Op::FamilySw(a) => std::iter::once(a.x0.as_str()).chain(a.member.as_deref()).collect(),
            Op::SumSw(a) => match &a.left {
                IntsSpec::Binding(b) => vec![b],
                IntsSpec::One(_) => vec![],
            },
            Op::SwAt(a) => vec![&a.manifold],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStep {
    op: String,
    #[serde(default)]
    args: Json,
    #[serde(default)]
    bind: Option<String>,
    #[serde(default)]
    expect: Option<BTreeMap<String, Json>>,
    #[serde(default)]
    expect_error: Option<String>,
    #[serde(default)]
    note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScript {
    name: String,
    provenance: String,
    #[serde(default)]
    params: BTreeMap<String, Json>,
    steps: Vec<RawStep>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub op_name: String,
    pub op: Op,
    pub bind: Option<String>,
    pub expect: BTreeMap<String, Json>,
    pub expect_error: Option<String>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Script {
    pub name: String,
    pub provenance: String,
    pub params: BTreeMap<String, Json>,
    pub steps: Vec<Step>,
}

/// Replaces `${name}` inside every string of `v`. A string that is exactly
/// one placeholder takes the parameter's JSON value.
fn substitute(v: &mut Json, params: &BTreeMap<String, Json>) -> std::result::Result<(), String> {
    match v {
        Json::String(s) => {
            if !s.contains("${") {
                return Ok(());
            }
            if let Some(name) = s.strip_prefix("${").and_then(|r| r.strip_suffix('}')) {
                if !name.contains("${") && !name.contains('}') {
                    let p = params.get(name).ok_or_else(|| format!("unknown parameter `{name}`"))?;
                    *v = p.clone();
                    return Ok(());
                }
            }
            let mut out = String::new();
            let mut rest = s.as_str();
            while let Some(i) = rest.find("${") {
                out.push_str(&rest[..i]);
                let tail = &rest[i + 2..];
                let j = tail.find('}').ok_or_else(|| format!("unterminated placeholder in `{s}`"))?;
                let name = &tail[..j];
                let p = params.get(name).ok_or_else(|| format!("unknown parameter `{name}`"))?;
                match p {
                    Json::String(t) => out.push_str(t),
                    other => out.push_str(&other.to_string()),
                }
                rest = &tail[j + 1..];
            }
            out.push_str(rest);
            *s = out;
            Ok(())
        }
        Json::Array(a) => a.iter_mut().try_for_each(|x| substitute(x, params)),
        Json::Object(o) => o.values_mut().try_for_each(|x| substitute(x, params)),
        _ => Ok(()),
    }
}

/// Parses a script, applying `overrides` on top of its declared parameters.
/// Errors are load-time errors: malformed JSON, unknown ops or arguments,
/// undefined parameters, and references to bindings not yet defined.
pub fn parse_script(text: &str, overrides: &BTreeMap<String, Json>) -> std::result::Result<Script, String> {
    let raw: RawScript = serde_json::from_str(text).map_err(|e| format!("script: {e}"))?;
    let mut params = raw.params.clone();
    for (k, v) in overrides {
        if !params.contains_key(k) {
            return Err(format!("script `{}` has no parameter `{k}`", raw.name));
        }
        params.insert(k.clone(), v.clone());
    }
    let mut defined: BTreeSet<String> = BTreeSet::new();
    let mut steps = Vec::new();
    for (i, s) in raw.steps.into_iter().enumerate() {
        let mut a = s.args.clone();
        substitute(&mut a, &params).map_err(|e| format!("step {}: {e}", i + 1))?;
        let op = Op::parse(&s.op, &a).map_err(|e| format!("step {}: {e}", i + 1))?;
        for r in op.refs() {
            if !defined.contains(r) {
                return Err(format!("step {}: binding `{r}` is not defined by an earlier step", i + 1));
            }
        }
        let mut expect = s.expect.unwrap_or_default();
        for v in expect.values_mut() {
            substitute(v, &params).map_err(|e| format!("step {}: {e}", i + 1))?;
        }
        if let Some(b) = &s.bind {
            defined.insert(b.clone());
        }
        steps.push(Step { op_name: s.op, op, bind: s.bind, expect, expect_error: s.expect_error, note: s.note });
    }
    Ok(Script { name: raw.name, provenance: raw.provenance, params, steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn placeholders() {
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), Json::from(3));
        let mut v = serde_json::json!({"p": "-${n}", "q": "${n}", "w": "b*[a^-1,d]^-${n}"});
        substitute(&mut v, &params).unwrap();
        assert_eq!(v, serde_json::json!({"p": "-3", "q": 3, "w": "b*[a^-1,d]^-3"}));
        let mut v = serde_json::json!("${m}");
        assert!(substitute(&mut v, &params).is_err());
    }

    #[test]
    fn load_time_errors() {
        let none = BTreeMap::new();
        assert!(parse_script("{", &none).is_err());
        let s = r#"{"name":"x","provenance":"t","steps":[{"op":"nope","args":{}}]}"#;
        assert!(parse_script(s, &none).unwrap_err().contains("unknown op"));
        let s = r#"{"name":"x","provenance":"t","steps":[{"op":"prove_trivial","args":{"manifold":"M"}}]}"#;
        assert!(parse_script(s, &none).unwrap_err().contains("not defined"));
        let s = r#"{"name":"x","provenance":"t","steps":[{"op":"product","args":{"g":1,"h":1,"k":2}}]}"#;
        assert!(parse_script(s, &none).is_err());
        let s = r#"{"name":"x","provenance":"t","steps":[{"op":"product","args":{"g":1,"h":1},"bind":"T"}]}"#;
        assert_eq!(parse_script(s, &none).unwrap().steps.len(), 1);
    }

    #[test]
    fn int_accepts_strings() {
        let v: Int = serde_json::from_str("\"-4\"").unwrap();
        assert_eq!(v, Int(-4));
        assert!(serde_json::from_str::<Int>("\"x\"").is_err());
    }
}
