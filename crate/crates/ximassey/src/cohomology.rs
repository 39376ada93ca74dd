//! Cochain complexes with trivial and rank-1 local coefficients, their
//! cohomology bases, cup products and cup-length.
//!
//! Cochain values on a simplex are based at its leading vertex; the
//! twisted coboundary transports across the leading edge, and products
//! transport the back factor along the consecutive-edge path of the front
//! face. Flatness (the triangle condition on the bundle) makes any other
//! path choice equal, so the consecutive path is canonical.

use std::collections::{BTreeMap, HashSet};

use crate::complex::{SimplicialComplex, VertexMap};
use crate::error::Error;
use crate::field::Field;
use crate::matrix::{sv_low, Inserted, Reducer, SparseMat, SparseVec};
use crate::Result;

/// Field-valued cochain of a fixed degree; absent simplices carry zero.
#[derive(Clone, Debug)]
pub struct Cochain<F: Field> {
    pub degree: usize,
    pub values: BTreeMap<u32, F::Elem>,
}

impl<F: Field> PartialEq for Cochain<F> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.values == other.values
    }
}
impl<F: Field> Eq for Cochain<F> {}

impl<F: Field> Cochain<F> {
    pub fn zero(degree: usize) -> Self {
        Cochain { degree, values: BTreeMap::new() }
    }

    pub fn set(&mut self, field: &F, idx: u32, value: F::Elem) {
        if field.is_zero(&value) {
            self.values.remove(&idx);
        } else {
            self.values.insert(idx, value);
        }
    }

    pub fn get<'a>(&'a self, field: &F, idx: u32) -> F::Elem {
        let _ = field;
        self.values.get(&idx).cloned().unwrap_or_else(|| {
            // cold path; zero is cheap for both supported fields
            unreachable!()
        })
    }

    pub fn value_or_zero(&self, field: &F, idx: u32) -> F::Elem {
        self.values.get(&idx).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn to_sparse_vec(&self) -> SparseVec<F::Elem> {
        self.values.iter().map(|(i, v)| (*i, v.clone())).collect()
    }

    pub fn from_sparse_vec(degree: usize, v: SparseVec<F::Elem>) -> Self {
        Cochain { degree, values: v.into_iter().collect() }
    }

    pub fn add(&self, field: &F, other: &Cochain<F>) -> Cochain<F> {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (i, v) in &other.values {
            let sum = field.add(&out.value_or_zero(field, *i), v);
            out.set(field, *i, sum);
        }
        out
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Cochain<F> {
        if field.is_zero(c) {
            return Cochain::zero(self.degree);
        }
        Cochain {
            degree: self.degree,
            values: self.values.iter().map(|(i, v)| (*i, field.mul(v, c))).collect(),
        }
    }

    pub fn sub(&self, field: &F, other: &Cochain<F>) -> Cochain<F> {
        self.add(field, &other.scale(field, &field.neg(&field.one())))
    }
}

/// Integer weights on oriented edges (u, v) with u < v, satisfying the
/// cocycle condition on every 2-simplex. Absent edges carry zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntegerCocycle {
    pub values: BTreeMap<u32, i64>,
}

impl IntegerCocycle {
    pub fn zero() -> Self {
        IntegerCocycle { values: BTreeMap::new() }
    }

    pub fn value(&self, edge_idx: u32) -> i64 {
        self.values.get(&edge_idx).copied().unwrap_or(0)
    }

    pub fn set(&mut self, edge_idx: u32, v: i64) {
        if v == 0 {
            self.values.remove(&edge_idx);
        } else {
            self.values.insert(edge_idx, v);
        }
    }

    /// The cocycle condition zeta(vw) - zeta(uw) + zeta(uv) = 0 on every
    /// 2-simplex.
    pub fn validate(&self, k: &SimplicialComplex) -> Result<()> {
        for tri in k.simplices_of_dim(2) {
            let (u, v, w) = (tri[0], tri[1], tri[2]);
            let uv = k.simplex_index(&[u, v]).unwrap();
            let uw = k.simplex_index(&[u, w]).unwrap();
            let vw = k.simplex_index(&[v, w]).unwrap();
            if self.value(vw) - self.value(uw) + self.value(uv) != 0 {
                return Err(Error::NotACocycle { simplex: k.labels_of(tri) });
            }
        }
        Ok(())
    }

    /// Reduce into the field as a degree-1 cochain.
    pub fn to_cochain<F: Field>(&self, field: &F) -> Cochain<F> {
        let mut c = Cochain::zero(1);
        for (i, v) in &self.values {
            c.set(field, *i, field.from_i64(*v));
        }
        c
    }

    /// Pull back along a vertex map; degenerate edges go to zero.
    pub fn pullback(
        &self,
        domain: &SimplicialComplex,
        codomain: &SimplicialComplex,
        f: &VertexMap,
    ) -> IntegerCocycle {
        let mut out = IntegerCocycle::zero();
        for (idx, e) in domain.edges().iter().enumerate() {
            if let Some(img) = f.image_tuple(e) {
                if let Some(ci) = codomain.simplex_index(&img) {
                    out.set(idx as u32, self.value(ci));
                }
            }
        }
        out
    }

    pub fn parse(k: &SimplicialComplex, text: &str) -> Result<Self> {
        let mut out = IntegerCocycle::zero();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.into() };
            if parts.len() != 4 || parts[0] != "edge" {
                return Err(bad("expected `edge u v int`"));
            }
            let u = k.vertex_id(parts[1])?;
            let v = k.vertex_id(parts[2])?;
            if u >= v {
                return Err(bad("edge must be listed in ascending vertex order"));
            }
            let idx = k
                .simplex_index(&[u, v])
                .ok_or_else(|| Error::UnknownSimplex(vec![parts[1].into(), parts[2].into()]))?;
            let val: i64 = parts[3].parse().map_err(|_| bad("bad integer"))?;
            if out.values.contains_key(&idx) {
                return Err(bad("edge listed twice"));
            }
            out.set(idx, val);
        }
        out.validate(k)?;
        Ok(out)
    }
}

/// Rank-1 local system: invertible field units on oriented edges,
/// multiplicative around every 2-simplex. Absent edges carry 1.
#[derive(Clone, Debug)]
pub struct LineBundle<F: Field> {
    pub values: BTreeMap<u32, F::Elem>,
}

impl<F: Field> LineBundle<F> {
    pub fn trivial() -> Self {
        LineBundle { values: BTreeMap::new() }
    }

    pub fn value(&self, field: &F, edge_idx: u32) -> F::Elem {
        self.values.get(&edge_idx).cloned().unwrap_or_else(|| field.one())
    }

    pub fn set(&mut self, field: &F, edge_idx: u32, v: F::Elem) {
        if field.is_one(&v) {
            self.values.remove(&edge_idx);
        } else {
            self.values.insert(edge_idx, v);
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.is_empty()
    }

    pub fn validate(&self, field: &F, k: &SimplicialComplex) -> Result<()> {
        for (idx, v) in &self.values {
            if field.is_zero(v) {
                let e = &k.edges()[*idx as usize];
                return Err(Error::BundleValueZero { edge: k.labels_of(e) });
            }
        }
        for tri in k.simplices_of_dim(2) {
            let (u, v, w) = (tri[0], tri[1], tri[2]);
            let uv = self.value(field, k.simplex_index(&[u, v]).unwrap());
            let vw = self.value(field, k.simplex_index(&[v, w]).unwrap());
            let uw = self.value(field, k.simplex_index(&[u, w]).unwrap());
            if field.mul(&uv, &vw) != uw {
                return Err(Error::BadBundle { simplex: k.labels_of(tri) });
            }
        }
        Ok(())
    }

    /// Edgewise product of two bundles on the same complex.
    pub fn tensor(&self, field: &F, k: &SimplicialComplex, other: &LineBundle<F>) -> LineBundle<F> {
        let mut out = LineBundle::trivial();
        for idx in 0..k.count(1) as u32 {
            let prod = field.mul(&self.value(field, idx), &other.value(field, idx));
            out.set(field, idx, prod);
        }
        out
    }

    pub fn inverse(&self, field: &F) -> LineBundle<F> {
        LineBundle {
            values: self
                .values
                .iter()
                .map(|(i, v)| (*i, field.inv(v).expect("bundle values are units")))
                .collect(),
        }
    }

    /// Monodromy of an integer cocycle through a fixed unit: t^zeta(e).
    pub fn from_cocycle_power(field: &F, zeta: &IntegerCocycle, t: &F::Elem) -> Result<Self> {
        let t_inv = field.inv(t).ok_or(Error::DivisionByZero)?;
        let mut out = LineBundle::trivial();
        for (i, z) in &zeta.values {
            let base = if *z >= 0 { t.clone() } else { t_inv.clone() };
            let mut acc = field.one();
            for _ in 0..z.unsigned_abs() {
                acc = field.mul(&acc, &base);
            }
            out.set(field, *i, acc);
        }
        Ok(out)
    }

    /// Canonical form for memo keys: the non-unit entries in index order.
    pub fn canonical_key(&self) -> Vec<(u32, F::Elem)> {
        self.values.iter().map(|(i, v)| (*i, v.clone())).collect()
    }

    pub fn parse(field: &F, k: &SimplicialComplex, text: &str) -> Result<Self> {
        let mut out = LineBundle::trivial();
        let mut seen = HashSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.into() };
            if parts.len() != 4 || parts[0] != "edge" {
                return Err(bad("expected `edge u v value`"));
            }
            let u = k.vertex_id(parts[1])?;
            let v = k.vertex_id(parts[2])?;
            if u >= v {
                return Err(bad("edge must be listed in ascending vertex order"));
            }
            let idx = k
                .simplex_index(&[u, v])
                .ok_or_else(|| Error::UnknownSimplex(vec![parts[1].into(), parts[2].into()]))?;
            if !seen.insert(idx) {
                return Err(bad("edge listed twice"));
            }
            out.set(field, idx, field.parse(parts[3])?);
        }
        out.validate(field, k)?;
        Ok(out)
    }
}

pub fn parse_cochain<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    text: &str,
) -> Result<Cochain<F>> {
    let mut degree: Option<usize> = None;
    let mut out: Option<Cochain<F>> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let bad = |msg: &str| Error::Parse { line: lineno + 1, msg: msg.into() };
        if parts.len() < 3 || parts[0] != "coch" {
            return Err(bad("expected `coch q v0 ... vq value`"));
        }
        let q: usize = parts[1].parse().map_err(|_| bad("bad degree"))?;
        if parts.len() != q + 4 {
            return Err(bad("wrong number of vertices for the stated degree"));
        }
        match degree {
            None => degree = Some(q),
            Some(d) if d == q => {}
            Some(d) => {
                return Err(Error::DegreeMismatch { expected: d, got: q });
            }
        }
        let mut ids = Vec::with_capacity(q + 1);
        for part in &parts[2..2 + q + 1] {
            ids.push(k.vertex_id(part)?);
        }
        for w in ids.windows(2) {
            if w[0] >= w[1] {
                return Err(bad("simplex must be listed in ascending vertex order"));
            }
        }
        let idx = k
            .simplex_index(&ids)
            .ok_or_else(|| Error::UnknownSimplex(parts[2..2 + q + 1].iter().map(|s| s.to_string()).collect()))?;
        let value = field.parse(parts[q + 3])?;
        let c = out.get_or_insert_with(|| Cochain::zero(q));
        if c.values.contains_key(&idx) {
            return Err(bad("simplex listed twice"));
        }
        c.set(field, idx, value);
    }
    let degree = degree.ok_or_else(|| Error::Invalid("empty cochain file".into()))?;
    Ok(out.unwrap_or_else(|| Cochain::zero(degree)))
}

/// Twisted simplicial coboundary in degree q as a field matrix:
/// (Dc)(v0..v_{q+1}) = mu(v0,v1) c(v1..v_{q+1}) + sum_{i>=1} (-1)^i c(.. v_i ..).
pub fn twisted_coboundary<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    mu: &LineBundle<F>,
    q: usize,
) -> SparseMat<F> {
    let nrows = k.count(q + 1);
    let ncols = k.count(q);
    let mut triplets: Vec<(u32, u32, F::Elem)> = Vec::new();
    for (r, tau) in k.simplices_of_dim(q + 1).iter().enumerate() {
        for i in 0..tau.len() {
            let mut face = tau.clone();
            face.remove(i);
            let c = k.simplex_index(&face).expect("face closure");
            let value = if i == 0 {
                let e = k.simplex_index(&[tau[0], tau[1]]).expect("leading edge");
                mu.value(field, e)
            } else if i % 2 == 0 {
                field.one()
            } else {
                field.neg(&field.one())
            };
            triplets.push((r as u32, c, value));
        }
    }
    SparseMat::from_triplets(field, nrows, ncols, triplets)
}

/// Coordinates of a class in a [`CohomologyBasis`].
#[derive(Clone, Debug)]
pub struct CohomologyClass<F: Field> {
    pub degree: usize,
    pub coords: Vec<F::Elem>,
}

impl<F: Field> PartialEq for CohomologyClass<F> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.coords == other.coords
    }
}
impl<F: Field> Eq for CohomologyClass<F> {}

impl<F: Field> std::hash::Hash for CohomologyClass<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.degree.hash(state);
        self.coords.hash(state);
    }
}

impl<F: Field> CohomologyClass<F> {
    pub fn is_zero(&self, field: &F) -> bool {
        self.coords.iter().all(|c| field.is_zero(c))
    }
}

struct DegreeBasis<F: Field> {
    reducer: Reducer<F>,
    /// generator indices (within `reducer`) of the accepted representatives
    rep_gens: Vec<u32>,
    reps: Vec<Cochain<F>>,
}

/// Cohomology in all degrees: representative cocycles plus the reduction
/// data needed to express an arbitrary cocycle in the representatives.
pub struct CohomologyBasis<F: Field> {
    pub field: F,
    /// the coboundary matrices (twisted when the basis is twisted)
    pub d: Vec<SparseMat<F>>,
    degrees: Vec<DegreeBasis<F>>,
}

impl<F: Field> CohomologyBasis<F> {
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.reps.len()).collect()
    }

    pub fn dim(&self, q: usize) -> usize {
        self.degrees.get(q).map_or(0, |d| d.reps.len())
    }

    pub fn rep(&self, q: usize, i: usize) -> &Cochain<F> {
        &self.degrees[q].reps[i]
    }

    pub fn reps(&self, q: usize) -> &[Cochain<F>] {
        self.degrees.get(q).map_or(&[], |d| d.reps.as_slice())
    }

    /// The coboundary of `c` (degree q -> q+1), for cocycle checking.
    pub fn coboundary_of(&self, c: &Cochain<F>) -> Cochain<F> {
        let Some(m) = self.d.get(c.degree) else {
            // beyond the dimension the complex is zero
            return Cochain::zero(c.degree + 1);
        };
        Cochain::from_sparse_vec(c.degree + 1, m.apply(&self.field, &c.to_sparse_vec()))
    }

    pub fn is_cocycle(&self, c: &Cochain<F>) -> bool {
        self.coboundary_of(c).is_zero()
    }

    /// Express a cocycle's class in the basis representatives.
    pub fn class_of(&self, k: &SimplicialComplex, c: &Cochain<F>) -> Result<CohomologyClass<F>> {
        let q = c.degree;
        if q >= self.degrees.len() {
            // cochains above the dimension are identically zero
            return Ok(CohomologyClass { degree: q, coords: Vec::new() });
        }
        let dc = self.coboundary_of(c);
        if let Some((idx, _)) = dc.values.iter().next() {
            let tuple = k.simplex_tuple(q + 1, *idx);
            return Err(Error::InputNotCocycle { simplex: k.labels_of(tuple) });
        }
        let db = &self.degrees[q];
        let coeffs = db
            .reducer
            .solve(c.to_sparse_vec())
            .expect("a cocycle lies in the span of coboundaries and representatives");
        let mut coords = vec![self.field.zero(); db.reps.len()];
        for (g, v) in coeffs {
            if let Ok(pos) = db.rep_gens.binary_search(&g) {
                coords[pos] = v;
            }
        }
        Ok(CohomologyClass { degree: q, coords })
    }

    /// A representative cocycle of a coordinate vector.
    pub fn cochain_of(&self, class: &CohomologyClass<F>) -> Cochain<F> {
        let q = class.degree;
        let mut out = Cochain::zero(q);
        for (i, coef) in class.coords.iter().enumerate() {
            if self.field.is_zero(coef) {
                continue;
            }
            out = out.add(&self.field, &self.degrees[q].reps[i].scale(&self.field, coef));
        }
        out
    }
}

/// Cohomology of the twisted complex; `mu` trivial gives ordinary
/// cohomology. The matrices must satisfy D.D = 0, which holds for every
/// valid bundle.
pub fn twisted_cohomology_basis<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    mu: &LineBundle<F>,
) -> Result<CohomologyBasis<F>> {
    mu.validate(field, k)?;
    let dim = k.dim();
    let mut d: Vec<SparseMat<F>> = Vec::with_capacity(dim + 1);
    for q in 0..=dim {
        d.push(twisted_coboundary(field, k, mu, q));
    }

    let mut degrees: Vec<DegreeBasis<F>> = Vec::with_capacity(dim + 1);
    let mut prev_image: Vec<SparseVec<F::Elem>> = Vec::new();
    for q in 0..=dim {
        // reduce the outgoing coboundary to get the kernel in degree q
        let mut out_red = Reducer::new(field);
        for col in &d[q].cols {
            out_red.insert(col.clone());
        }
        let kernel = std::mem::take(&mut out_red.kernel);

        let mut reducer = Reducer::new(field);
        for col in &prev_image {
            reducer.insert(col.clone());
        }
        let mut rep_gens = Vec::new();
        let mut reps = Vec::new();
        for z in kernel {
            let gen = reducer.n_inserted() as u32;
            if let Inserted::Independent = reducer.insert(z) {
                // the stored reduced column is itself a cocycle and becomes
                // the representative, so reduction coefficients against it
                // are exactly class coordinates
                let stored = reducer.reduced_columns().last().unwrap().clone();
                reps.push(Cochain::from_sparse_vec(q, stored));
                rep_gens.push(gen);
            }
        }
        // image of this degree's coboundary feeds the next degree
        prev_image = out_red.reduced_columns().cloned().collect();
        degrees.push(DegreeBasis { reducer, rep_gens, reps });
    }
    Ok(CohomologyBasis { field: field.clone(), d, degrees })
}

pub fn cohomology_basis<F: Field>(field: &F, k: &SimplicialComplex) -> CohomologyBasis<F> {
    twisted_cohomology_basis(field, k, &LineBundle::trivial())
        .expect("the trivial bundle is always valid")
}

/// Alexander–Whitney cup product with transport: the value on the front
/// face is multiplied by the back bundle's transport along the front
/// face's consecutive edges, then by the back value. With both bundles
/// trivial this is the ordinary cup product; the result lives in the
/// tensor of the two bundles.
pub fn cup_with_transport<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    c1: &Cochain<F>,
    back_bundle: Option<&LineBundle<F>>,
    c2: &Cochain<F>,
) -> Cochain<F> {
    let p = c1.degree;
    let q = c2.degree;
    let deg = p + q;
    let mut out = Cochain::zero(deg);
    if deg > k.dim() {
        return out;
    }
    for (idx, tau) in k.simplices_of_dim(deg).iter().enumerate() {
        let front = &tau[..=p];
        let back = &tau[p..];
        let Some(fi) = k.simplex_index(front) else { continue };
        let Some(bi) = k.simplex_index(back) else { continue };
        let Some(a) = c1.values.get(&fi) else { continue };
        let Some(b) = c2.values.get(&bi) else { continue };
        let mut v = field.mul(a, b);
        if let Some(mu) = back_bundle {
            for w in front.windows(2) {
                let e = k.simplex_index(&[w[0], w[1]]).expect("face closure");
                v = field.mul(&v, &mu.value(field, e));
            }
        }
        if !field.is_zero(&v) {
            out.set(field, idx as u32, v);
        }
    }
    out
}

/// Ordinary cup product (trivial coefficients on both sides).
pub fn cup<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    c1: &Cochain<F>,
    c2: &Cochain<F>,
) -> Cochain<F> {
    cup_with_transport(field, k, c1, None, c2)
}

/// Cup product of a trivial-coefficients cochain into a bundle-valued one.
pub fn cup_into_bundle<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    c1: &Cochain<F>,
    mu: &LineBundle<F>,
    c2: &Cochain<F>,
) -> Cochain<F> {
    cup_with_transport(field, k, c1, Some(mu), c2)
}

/// Pullback along a vertex map; degenerate image tuples contribute zero.
pub fn pullback<F: Field>(
    field: &F,
    domain: &SimplicialComplex,
    codomain: &SimplicialComplex,
    f: &VertexMap,
    c: &Cochain<F>,
) -> Cochain<F> {
    let q = c.degree;
    let mut out = Cochain::zero(q);
    for (idx, sigma) in domain.simplices_of_dim(q).iter().enumerate() {
        let Some(img) = f.image_tuple(sigma) else { continue };
        let Some(ci) = codomain.simplex_index(&img) else { continue };
        if let Some(v) = c.values.get(&ci) {
            out.set(field, idx as u32, v.clone());
        }
    }
    out
}

/// Longest nonzero product of positive-degree classes. Products of basis
/// representatives suffice: expanding each factor in the basis, a nonzero
/// product has a nonzero all-basis term. The search proceeds level by
/// level (classes reachable with exactly t factors), with reduced classes
/// deduplicated per level; the count is capped by the dimension because
/// every factor has positive degree. Zero for a point.
pub fn cup_length<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    basis: &CohomologyBasis<F>,
) -> usize {
    let dim = k.dim();
    let mut factors: Vec<(usize, &Cochain<F>)> = Vec::new();
    for q in 1..=dim {
        for rep in basis.reps(q) {
            factors.push((q, rep));
        }
    }
    let mut best = 0usize;
    let mut level: Vec<CohomologyClass<F>> = Vec::new();
    let mut seen: HashSet<(usize, Vec<F::Elem>)> = HashSet::new();
    for (q, rep) in &factors {
        let class = basis.class_of(k, rep).expect("representatives are cocycles");
        if class.is_zero(field) {
            continue;
        }
        if seen.insert((*q, class.coords.clone())) {
            level.push(class);
        }
    }
    let mut depth = 1usize;
    while !level.is_empty() {
        best = depth;
        if depth == dim {
            break; // no room for another positive-degree factor
        }
        let mut next: Vec<CohomologyClass<F>> = Vec::new();
        let mut next_seen: HashSet<(usize, Vec<F::Elem>)> = HashSet::new();
        for class in &level {
            let cochain = basis.cochain_of(class);
            for (q, rep) in &factors {
                let deg = class.degree + q;
                if deg > dim {
                    continue;
                }
                let prod = cup(field, k, &cochain, rep);
                let pclass = basis.class_of(k, &prod).expect("product of cocycles");
                if pclass.is_zero(field) {
                    continue;
                }
                if next_seen.insert((deg, pclass.coords.clone())) {
                    next.push(pclass);
                }
            }
        }
        level = next;
        depth += 1;
    }
    best
}

/// Rank of the cup-by-xi map on H^q: v -> class of v cup zeta_field.
/// This is the cohomology-module side of the d_1 cross-check.
pub fn cup_by_class_rank<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    basis: &CohomologyBasis<F>,
    zeta_field: &Cochain<F>,
    q: usize,
) -> usize {
    let mut red = Reducer::new(field);
    for rep in basis.reps(q) {
        let prod = cup(field, k, rep, zeta_field);
        let class = basis.class_of(k, &prod).expect("cup of cocycles is a cocycle");
        red.insert(crate::matrix::sv_from_dense(field, &class.coords));
    }
    red.rank()
}

/// Hook for sanity checks: distinct lows imply independence, so any
/// nonzero reduced column has a well-defined leading simplex.
pub fn leading_simplex<F: Field>(c: &Cochain<F>) -> Option<u32> {
    sv_low(&c.to_sparse_vec())
}
