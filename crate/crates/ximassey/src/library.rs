//! Bundled example complexes and their marked cocycles.
//!
//! Small surfaces ship as data files; the genus-2 surface is the frozen
//! output of a connected-sum recipe over two tori (a test pins the two
//! against each other), and the larger spaces are materialized from
//! product / connected-sum recipes on load.

use crate::cohomology::IntegerCocycle;
use crate::complex::{connected_sum, product_complex, SimplicialComplex, VertexMap};
use crate::error::Error;
use crate::Result;

pub const CIRCLE3_CPLX: &str = include_str!("../data/circle3.cplx");
pub const CIRCLE3_XI: &str = include_str!("../data/circle3.xi.zeta");
pub const TORUS9_CPLX: &str = include_str!("../data/torus9.cplx");
pub const TORUS9_A: &str = include_str!("../data/torus9.a.zeta");
pub const TORUS9_B: &str = include_str!("../data/torus9.b.zeta");
pub const RP2_CPLX: &str = include_str!("../data/rp2.cplx");
pub const RP2_W: &str = include_str!("../data/rp2.w.coch");
pub const KLEIN_CPLX: &str = include_str!("../data/klein.cplx");
pub const KLEIN_XI: &str = include_str!("../data/klein.xi.zeta");
pub const SIGMA2_CPLX: &str = include_str!("../data/sigma2.cplx");
pub const SIGMA2_V1: &str = include_str!("../data/sigma2.fig1.v1.zeta");
pub const SIGMA2_V2: &str = include_str!("../data/sigma2.fig1.v2.zeta");
pub const SIGMA2_XI: &str = include_str!("../data/sigma2.fig1.xi.zeta");
pub const RP2_HANDLE_XI: &str = include_str!("../data/rp2handle.xi.zeta");
pub const RP2_HANDLE_W: &str = RP2_W;

/// The facet of rp2 removed when attaching the handle, and the gluing of
/// the torus facet {0, 1, 4} onto it. Chosen so that the w cocycle's
/// support avoids the glued boundary.
pub const RP2_HANDLE_FACET: [&str; 3] = ["p1", "p4", "p6"];
pub const RP2_HANDLE_GLUING: [(&str, &str); 3] = [("0", "p1"), ("1", "p4"), ("4", "p6")];

/// A bundled example: the complex, its named integral cocycles, named
/// field-cochain files (text, parsed against a chosen field), and, for
/// products, the two projections.
pub struct Example {
    pub name: String,
    pub complex: SimplicialComplex,
    pub cocycles: Vec<(String, IntegerCocycle)>,
    pub cochain_files: Vec<(String, &'static str)>,
    /// the canonical nonzero integral class for bound computations, when
    /// one exists
    pub default_xi: Option<String>,
    pub closed_manifold: bool,
    pub projections: Option<(VertexMap, VertexMap)>,
}

impl Example {
    pub fn cocycle(&self, name: &str) -> Result<&IntegerCocycle> {
        self.cocycles
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, z)| z)
            .ok_or_else(|| Error::UnknownExample(format!("{}.{}", self.name, name)))
    }

    pub fn cochain_file(&self, name: &str) -> Result<&'static str> {
        self.cochain_files
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| *t)
            .ok_or_else(|| Error::UnknownExample(format!("{}.{}", self.name, name)))
    }
}

pub fn example_names() -> Vec<(&'static str, &'static str)> {
    vec![
        ("circle3", "3-vertex circle; cocycle `xi` generates H^1"),
        ("torus9", "9-vertex torus; cocycles `a`, `b` dual to the factors"),
        ("rp2", "6-vertex projective plane; cochain `w` generates H^1 over F2"),
        ("klein", "12-vertex Klein bottle; cocycle `xi` dual to a fiber"),
        (
            "sigma2",
            "genus-2 surface (torus # torus); cocycles `fig1.v1`, `fig1.v2`, `fig1.xi`",
        ),
        (
            "sigma2xrp2",
            "product of sigma2 with rp2; cocycles pulled back from the surface",
        ),
        (
            "rp2-handle",
            "projective plane with a handle (rp2 # torus); cocycle `xi` along the handle",
        ),
    ]
}

fn relabel(k: &SimplicialComplex, prefix: &str) -> SimplicialComplex {
    let order: Vec<String> = k
        .vertex_labels()
        .iter()
        .map(|l| format!("{prefix}{l}"))
        .collect();
    let tops: Vec<Vec<String>> = k
        .top_simplices()
        .iter()
        .map(|t| t.iter().map(|&v| format!("{prefix}{}", k.vertex_label(v))).collect())
        .collect();
    SimplicialComplex::from_top_simplices(Some(order), &tops)
        .expect("relabeling preserves validity")
}

/// The genus-2 recipe: two relabeled tori glued along the facet {·0, ·1, ·4}.
pub fn sigma2_recipe() -> SimplicialComplex {
    let torus = SimplicialComplex::parse(TORUS9_CPLX).expect("bundled torus parses");
    let a = relabel(&torus, "a");
    let b = relabel(&torus, "b");
    connected_sum(
        &a,
        &b,
        &["a0".into(), "a1".into(), "a4".into()],
        &["b0".into(), "b1".into(), "b4".into()],
        &[
            ("b0".into(), "a0".into()),
            ("b1".into(), "a1".into()),
            ("b4".into(), "a4".into()),
        ],
    )
    .expect("the two facets glue without collisions")
}

/// The handle recipe: rp2 # torus, removing RP2_HANDLE_FACET from rp2 and
/// {0,1,4} from the torus.
pub fn rp2_handle_recipe() -> Result<SimplicialComplex> {
    let rp2 = SimplicialComplex::parse(RP2_CPLX)?;
    let torus = SimplicialComplex::parse(TORUS9_CPLX)?;
    connected_sum(
        &rp2,
        &torus,
        &RP2_HANDLE_FACET.map(String::from),
        &["0".into(), "1".into(), "4".into()],
        &RP2_HANDLE_GLUING.map(|(a, b)| (a.to_string(), b.to_string())),
    )
}

pub fn load_example(name: &str) -> Result<Example> {
    match name {
        "circle3" => {
            let complex = SimplicialComplex::parse(CIRCLE3_CPLX)?;
            let xi = IntegerCocycle::parse(&complex, CIRCLE3_XI)?;
            Ok(Example {
                name: name.into(),
                complex,
                cocycles: vec![("xi".into(), xi)],
                cochain_files: vec![],
                default_xi: Some("xi".into()),
                closed_manifold: true,
                projections: None,
            })
        }
        "torus9" => {
            let complex = SimplicialComplex::parse(TORUS9_CPLX)?;
            let a = IntegerCocycle::parse(&complex, TORUS9_A)?;
            let b = IntegerCocycle::parse(&complex, TORUS9_B)?;
            Ok(Example {
                name: name.into(),
                complex,
                cocycles: vec![("a".into(), a), ("b".into(), b)],
                cochain_files: vec![],
                default_xi: Some("a".into()),
                closed_manifold: true,
                projections: None,
            })
        }
        "rp2" => {
            let complex = SimplicialComplex::parse(RP2_CPLX)?;
            Ok(Example {
                name: name.into(),
                complex,
                // H^1(RP^2; Z) = 0: no nonzero integral class exists
                cocycles: vec![],
                cochain_files: vec![("w".into(), RP2_W)],
                default_xi: None,
                closed_manifold: true,
                projections: None,
            })
        }
        "klein" => {
            let complex = SimplicialComplex::parse(KLEIN_CPLX)?;
            let xi = IntegerCocycle::parse(&complex, KLEIN_XI)?;
            Ok(Example {
                name: name.into(),
                complex,
                cocycles: vec![("xi".into(), xi)],
                cochain_files: vec![],
                default_xi: Some("xi".into()),
                closed_manifold: true,
                projections: None,
            })
        }
        "sigma2" => {
            let complex = SimplicialComplex::parse(SIGMA2_CPLX)?;
            let v1 = IntegerCocycle::parse(&complex, SIGMA2_V1)?;
            let v2 = IntegerCocycle::parse(&complex, SIGMA2_V2)?;
            let xi = IntegerCocycle::parse(&complex, SIGMA2_XI)?;
            Ok(Example {
                name: name.into(),
                complex,
                cocycles: vec![
                    ("fig1.v1".into(), v1),
                    ("fig1.v2".into(), v2),
                    ("fig1.xi".into(), xi),
                ],
                cochain_files: vec![],
                default_xi: Some("fig1.xi".into()),
                closed_manifold: true,
                projections: None,
            })
        }
        "sigma2xrp2" => {
            let sigma2 = load_example("sigma2")?;
            let rp2 = SimplicialComplex::parse(RP2_CPLX)?;
            let prod = product_complex(&sigma2.complex, &rp2)?;
            let mut cocycles = Vec::new();
            for (n, z) in &sigma2.cocycles {
                cocycles.push((
                    n.clone(),
                    z.pullback(&prod.complex, &sigma2.complex, &prod.to_left),
                ));
            }
            Ok(Example {
                name: name.into(),
                complex: prod.complex,
                cocycles,
                cochain_files: vec![],
                default_xi: Some("fig1.xi".into()),
                closed_manifold: true,
                projections: Some((prod.to_left, prod.to_right)),
            })
        }
        "rp2-handle" => {
            let complex = rp2_handle_recipe()?;
            let xi = IntegerCocycle::parse(&complex, RP2_HANDLE_XI)?;
            Ok(Example {
                name: name.into(),
                complex,
                cocycles: vec![("xi".into(), xi)],
                cochain_files: vec![("w".into(), RP2_HANDLE_W)],
                default_xi: Some("xi".into()),
                closed_manifold: true,
                projections: None,
            })
        }
        other => Err(Error::UnknownExample(other.to_string())),
    }
}
