//! Step results and their JSON views.

use std::collections::BTreeMap;

use exotic4::fpgroup::ProofVerdict;
use exotic4::swengine::{chamber_proviso, FamilyVerdict, GapVerdict, CHAMBER_PROVISO};
use exotic4::topmodel::{IntersectionLattice, Manifold};
use exotic4::verdict::{Condition, HomeoType, Irreducibility, Minimality};
use serde_json::{json, Map, Value as Json};

#[derive(Debug, Clone)]
pub enum Value {
    Manifold(Box<Manifold>),
    /// A proof about the group of the named binding.
    Proof {
        subject: String,
        verdict: ProofVerdict,
    },
    Homeo(HomeoType),
    Minimality {
        subject: String,
        verdict: Minimality,
    },
    Irreducibility(Irreducibility),
    Conditions(Vec<Condition>),
    Numbers {
        e: i64,
        sigma: i64,
    },
    Classes {
        lattice: IntersectionLattice,
        classes: Vec<Vec<i64>>,
        simple_type_square: Option<i64>,
    },
    Gap(GapVerdict),
    Family(FamilyVerdict),
    Ints(Vec<i64>),
    /// Invariant values; `proviso` is set when `b2+ = 1`.
    SwValues {
        values: Vec<i64>,
        proviso: Option<bool>,
    },
    Int(i64),
    Bool(bool),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Manifold(_) => "manifold",
            Value::Proof { .. } => "proof",
            Value::Homeo(_) => "homeomorphism type",
            Value::Minimality { .. } => "minimality",
            Value::Irreducibility(_) => "irreducibility",
            Value::Conditions(_) => "conditions",
            Value::Numbers { .. } => "numbers",
            Value::Classes { .. } => "classes",
            Value::Gap(_) => "gap verdict",
            Value::Family(_) => "family verdict",
            Value::Ints(_) | Value::SwValues { .. } => "integers",
            Value::Int(_) => "integer",
            Value::Bool(_) => "boolean",
        }
    }

    /// Characteristic numbers, where the value has them.
    pub fn numbers(&self) -> Option<(i64, i64)> {
        match self {
            Value::Manifold(m) => Some((m.e, m.sigma)),
            Value::Numbers { e, sigma } => Some((*e, *sigma)),
            Value::Homeo(h) => Some(h.e_sigma()),
            _ => None,
        }
    }

    /// The JSON object `expect` paths are resolved against.
    pub fn view(&self) -> Json {
        match self {
            Value::Manifold(m) => manifold_view(m),
            Value::Proof { subject, verdict } => json!({
                "subject": subject,
                "status": verdict.status.to_string(),
                "witness": verdict.witness,
            }),
            Value::Homeo(h) => json!({
                "b2plus": h.b2plus,
                "b2minus": h.b2minus,
                "parity": h.parity,
                "type": h.to_string(),
                "e": h.e_sigma().0,
                "sigma": h.e_sigma().1,
            }),
            Value::Minimality { subject, verdict } => json!({ "subject": subject, "status": verdict }),
            Value::Irreducibility(v) => json!({ "status": v }),
            Value::Conditions(cs) => {
                let mut o = Map::new();
                for c in cs {
                    o.insert(c.name.clone(), json!({ "pass": c.pass, "detail": c.detail }));
                }
                o.insert("all_pass".into(), Json::Bool(cs.iter().all(|c| c.pass)));
                Json::Object(o)
            }
            Value::Numbers { e, sigma } => json!({ "e": e, "sigma": sigma }),
            Value::Classes { lattice, classes, simple_type_square } => json!({
                "count": classes.len(),
                "classes": classes.iter().map(|k| lattice.render(k)).collect::<Vec<_>>(),
                "squares": classes.iter().map(|k| lattice.square(k)).collect::<Vec<_>>(),
                "simple_type_square": simple_type_square,
                "basis": lattice.basis,
            }),
            Value::Gap(g) => json!({ "status": g.status, "difference_squares": g.difference_squares }),
            Value::Family(f) => json!({ "status": f.status, "reason": f.reason }),
            Value::Ints(v) => json!({ "values": v }),
            Value::SwValues { values, proviso } => json!({
                "values": values,
                "sw_proviso": proviso.map(|holds| json!({"text": CHAMBER_PROVISO, "holds": holds})),
            }),
            Value::Int(v) => json!({ "value": v }),
            Value::Bool(b) => json!({ "value": b }),
        }
    }
}

fn manifold_view(m: &Manifold) -> Json {
    let betti = m.betti().ok();
    let inertia = m.lattice.inertia();
    let mut surfaces = Map::new();
    for s in &m.surfaces {
        surfaces.insert(
            s.label.clone(),
            json!({
                "genus": s.genus,
                "square": s.square,
                "class": m.lattice.render(&s.coords),
                "flags": s.flags,
            }),
        );
    }
    let sw =
        m.sw.as_ref().map(|f| f.iter().map(|(k, v)| (m.lattice.render(k), Json::from(*v))).collect::<BTreeMap<_, _>>());
    let proviso = match (&m.sw, betti) {
        (Some(_), Some(b)) => {
            chamber_proviso(b.b2plus, b.b2minus).map(|holds| json!({"text": CHAMBER_PROVISO, "holds": holds}))
        }
        _ => None,
    };
    json!({
        "name": m.name,
        "e": m.e,
        "sigma": m.sigma,
        "b1": m.b1,
        "b2": betti.map(|b| b.b2),
        "b2plus": betti.map(|b| b.b2plus),
        "b2minus": betti.map(|b| b.b2minus),
        "abelianization": m.pi1.abelianization().to_string(),
        "generators": m.pi1.generators().len(),
        "relators": m.pi1.relators().len(),
        "flags": m.flags,
        "lattice_rank": m.lattice.rank(),
        "lattice_complete": m.lattice.complete,
        "lattice_inertia": [inertia.positive, inertia.negative, inertia.null],
        "lattice_odd": m.lattice.is_odd(),
        "surfaces": surfaces,
        "sw": sw,
        "sw_proviso": proviso,
    })
}

/// Follows a dotted path; array elements are addressed by index.
pub fn lookup<'a>(view: &'a Json, path: &str) -> Option<&'a Json> {
    let mut cur = view;
    for part in path.split('.') {
        cur = match cur {
            Json::Object(o) => o.get(part)?,
            Json::Array(a) => a.get(part.parse::<usize>().ok()?)?,
            _ => return None,
        };
    }
    Some(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exotic4::topmodel::product_block;

    #[test]
    fn manifold_paths() {
        let m = product_block(1, 1).unwrap();
        let v = Value::Manifold(Box::new(m)).view();
        assert_eq!(lookup(&v, "e"), Some(&json!(0)));
        assert_eq!(lookup(&v, "abelianization"), Some(&json!("Z^4")));
        assert_eq!(lookup(&v, "surfaces.a*b.genus"), Some(&json!(1)));
        assert_eq!(lookup(&v, "lattice_inertia.0"), Some(&json!(3)));
        assert_eq!(lookup(&v, "nope"), None);
    }
}
