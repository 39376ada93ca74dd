//! JSON report shapes for the command-line tool. The schema is versioned
//! with a top-level `schema: 1` field and the JSON is byte-stable for
//! identical inputs; the text renderings are human-oriented and unstable.

use serde_json::{json, Map, Value};

use crate::bound::{BoundReport, FactorPool, SurvivorEvidence};
use crate::cohomology::Cochain;
use crate::complex::SimplicialComplex;
use crate::deformation::{DeformedComplex, SpectralReport, SurvivorCertificate};
use crate::field::Field;

pub const SCHEMA_VERSION: u64 = 1;

pub fn header(command: &str, complex: &str, field: Option<&str>, xi: Option<&str>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m.insert("complex".into(), json!(complex));
    if let Some(f) = field {
        m.insert("field".into(), json!(f));
    }
    if let Some(x) = xi {
        m.insert("xi".into(), json!(x));
    }
    m
}

pub fn betti_payload(betti: &[usize], chi: i64) -> Vec<(String, Value)> {
    vec![("betti".into(), json!(betti)), ("chi".into(), json!(chi))]
}

pub fn cuplen_payload(len: usize) -> Vec<(String, Value)> {
    vec![("cup_length".into(), json!(len))]
}

pub fn pages_payload(report: &SpectralReport) -> Vec<(String, Value)> {
    let pages: Vec<Value> = report
        .pages
        .iter()
        .map(|p| json!({ "r": p.r, "dims": p.dims, "d_ranks": p.d_ranks }))
        .collect();
    vec![
        ("chi".into(), json!(report.chi)),
        ("betti".into(), json!(report.betti)),
        ("novikov_betti".into(), json!(report.novikov_betti)),
        ("r_stab".into(), json!(report.r_stab)),
        ("pages".into(), Value::Array(pages)),
        ("infinity".into(), json!(report.novikov_betti)),
    ]
}

pub fn novikov_payload(b: &[usize]) -> Vec<(String, Value)> {
    vec![("novikov_betti".into(), json!(b))]
}

fn render_coords<F: Field>(field: &F, coords: &[F::Elem]) -> Vec<String> {
    coords.iter().map(|c| field.render(c)).collect()
}

fn render_cochain<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    c: &Cochain<F>,
) -> Vec<Value> {
    c.values
        .iter()
        .map(|(i, v)| {
            let labels = k.labels_of(k.simplex_tuple(c.degree, *i));
            json!({ "simplex": labels, "value": field.render(v) })
        })
        .collect()
}

pub fn certificate_json<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    cert: &SurvivorCertificate<F>,
) -> Value {
    let lift: Vec<Value> = cert
        .lift
        .iter()
        .enumerate()
        .map(|(j, c)| json!({ "order": j, "cochain": render_cochain(field, k, c) }))
        .collect();
    json!({
        "class": render_coords(field, &cert.class.coords),
        "degree": cert.class.degree,
        "strict": cert.strict,
        "lift": lift,
    })
}

pub fn survivors_payload<F: Field>(dc: &DeformedComplex<F>) -> Vec<(String, Value)> {
    let field = &dc.field;
    let mut per_degree = Vec::new();
    for q in 0..=dc.dim() {
        let ss = dc.survivor_space(q);
        let mut classes = Vec::new();
        for class in &ss.basis_classes {
            let cert = dc
                .is_survivor(class)
                .expect("degree is valid")
                .expect("basis classes are members");
            classes.push(certificate_json(field, &dc.complex, &cert));
        }
        per_degree.push(json!({
            "degree": q,
            "dim": ss.dim(),
            "h_dim": dc.basis().dim(q),
            "classes": classes,
        }));
    }
    vec![("survivors".into(), Value::Array(per_degree))]
}

pub fn strict_check_payload(strict: bool) -> Vec<(String, Value)> {
    vec![("strict".into(), json!(strict))]
}

pub fn bound_payload<F: Field>(
    pool: &FactorPool<'_, F>,
    report: &BoundReport<F>,
) -> Vec<(String, Value)> {
    let dc = pool.dc;
    let field = &dc.field;
    let witness: Value = match &report.witness {
        None => Value::Null,
        Some(w) => {
            let mut factors = Vec::new();
            for idx in [w.v1, w.v2] {
                let s = &pool.survivors[idx];
                factors.push(json!({
                    "role": "survivor",
                    "degree": s.degree,
                    "class": render_coords(field, &s.class.coords),
                    "verified": match s.evidence {
                        SurvivorEvidence::Membership(_) => "membership",
                        SurvivorEvidence::Strict => "strict",
                    },
                }));
            }
            for &t in &w.us {
                let r = &pool.bundle_classes[t];
                factors.push(json!({
                    "role": "bundle-class",
                    "degree": r.degree,
                    "bundle": r.bundle_id,
                    "index": r.index,
                }));
            }
            Value::Array(factors)
        }
    };
    let product = report
        .product_class
        .as_ref()
        .map(|c| json!({ "degree": c.degree, "coords": render_coords(field, &c.coords) }))
        .unwrap_or(Value::Null);
    vec![
        ("m".into(), json!(report.m)),
        ("cat_lower_bound".into(), json!(report.cat_lower_bound)),
        ("count_lower_bound".into(), json!(report.count_lower_bound)),
        ("repeated_survivor".into(), json!(report.repeated_survivor)),
        ("dim_cap".into(), json!(report.dim_cap)),
        ("witness".into(), witness),
        ("product_class".into(), product),
    ]
}

pub fn assemble(mut head: Map<String, Value>, payload: Vec<(String, Value)>) -> Value {
    for (k, v) in payload {
        head.insert(k, v);
    }
    Value::Object(head)
}
