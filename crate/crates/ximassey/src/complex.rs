//! Finite ordered simplicial complexes: parsing, validation, coboundary
//! matrices, staircase products and connected sums.
//!
//! The file format is line based UTF-8: an optional `vertexorder v1 v2 ...`
//! line fixing the vertex order, one `simplex v1 v2 ... vk` line per top
//! simplex, and `#` comments. Face closure is computed on parse. Without a
//! `vertexorder` line vertices are ordered lexicographically by label.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::Error;
use crate::Result;

/// Ordered finite simplicial complex. Simplices are strictly ascending
/// tuples of vertex ids; every face of every simplex is present.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    vindex: HashMap<String, u32>,
    /// simplices[q] lists the q-simplices sorted lexicographically.
    simplices: Vec<Vec<Vec<u32>>>,
    /// per-degree lookup from tuple to index in `simplices[q]`.
    index: Vec<HashMap<Vec<u32>, u32>>,
}

impl SimplicialComplex {
    /// Build from labelled top simplices; faces are added automatically.
    /// `order` fixes the vertex order, or `None` for lexicographic.
    pub fn from_top_simplices(
        order: Option<Vec<String>>,
        tops: &[Vec<String>],
    ) -> Result<Self> {
        if tops.is_empty() {
            return Err(Error::Invalid("complex has no simplices".into()));
        }
        let mut used: BTreeSet<&str> = BTreeSet::new();
        for t in tops {
            for v in t {
                used.insert(v);
            }
        }
        let vertices: Vec<String> = match order {
            Some(list) => {
                let mut seen = BTreeSet::new();
                for v in &list {
                    if !seen.insert(v.clone()) {
                        return Err(Error::Invalid(format!(
                            "vertexorder repeats vertex `{v}`"
                        )));
                    }
                    if !used.contains(v.as_str()) {
                        return Err(Error::Invalid(format!(
                            "vertexorder lists vertex `{v}` that no simplex uses"
                        )));
                    }
                }
                for v in &used {
                    if !seen.contains(*v) {
                        return Err(Error::Invalid(format!(
                            "vertexorder is missing vertex `{v}`"
                        )));
                    }
                }
                list
            }
            None => used.iter().map(|s| s.to_string()).collect(),
        };
        let vindex: HashMap<String, u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as u32))
            .collect();

        let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for t in tops {
            let mut ids: Vec<u32> = t.iter().map(|v| vindex[v]).collect();
            ids.sort_unstable();
            ids.dedup();
            if ids.len() != t.len() {
                // caller-side duplicate check reports line numbers; this is
                // the programmatic entry point
                return Err(Error::Invalid(format!("repeated vertex in simplex {t:?}")));
            }
            // all nonempty subsets are faces
            let n = ids.len();
            for mask in 1u32..(1 << n) {
                let face: Vec<u32> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| ids[i])
                    .collect();
                let q = face.len() - 1;
                while by_dim.len() <= q {
                    by_dim.push(BTreeSet::new());
                }
                by_dim[q].insert(face);
            }
        }

        let simplices: Vec<Vec<Vec<u32>>> =
            by_dim.into_iter().map(|set| set.into_iter().collect()).collect();
        let index = simplices
            .iter()
            .map(|list| {
                list.iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i as u32))
                    .collect()
            })
            .collect();
        Ok(SimplicialComplex { vertices, vindex, simplices, index })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut order: Option<Vec<String>> = None;
        let mut tops: Vec<Vec<String>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let keyword = parts.next().unwrap();
            let rest: Vec<String> = parts.map(|s| s.to_string()).collect();
            match keyword {
                "vertexorder" => {
                    if order.is_some() {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: "vertexorder given twice".into(),
                        });
                    }
                    if rest.is_empty() {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: "vertexorder needs at least one vertex".into(),
                        });
                    }
                    order = Some(rest);
                }
                "simplex" => {
                    if rest.is_empty() {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: "simplex needs at least one vertex".into(),
                        });
                    }
                    let mut seen = BTreeSet::new();
                    for v in &rest {
                        if !seen.insert(v.clone()) {
                            return Err(Error::RepeatedVertex {
                                line: lineno + 1,
                                vertex: v.clone(),
                            });
                        }
                    }
                    tops.push(rest);
                }
                other => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("unknown keyword `{other}`"),
                    });
                }
            }
        }
        Self::from_top_simplices(order, &tops)
    }

    /// Emit the complex in the file format; parsing the output reproduces
    /// the complex exactly (vertex order included).
    pub fn write(&self) -> String {
        let mut out = String::new();
        out.push_str("vertexorder");
        for v in &self.vertices {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
        for t in self.top_simplices() {
            out.push_str("simplex");
            for &v in &t {
                let _ = write!(out, " {}", self.vertices[v as usize]);
            }
            out.push('\n');
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_label(&self, id: u32) -> &str {
        &self.vertices[id as usize]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_id(&self, label: &str) -> Result<u32> {
        self.vindex
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Number of q-simplices (0 when q exceeds the dimension).
    pub fn count(&self, q: usize) -> usize {
        self.simplices.get(q).map_or(0, |v| v.len())
    }

    pub fn simplices_of_dim(&self, q: usize) -> &[Vec<u32>] {
        self.simplices.get(q).map_or(&[], |v| v.as_slice())
    }

    pub fn simplex_tuple(&self, q: usize, idx: u32) -> &[u32] {
        &self.simplices[q][idx as usize]
    }

    pub fn simplex_index(&self, tuple: &[u32]) -> Option<u32> {
        let q = tuple.len().checked_sub(1)?;
        self.index.get(q)?.get(tuple).copied()
    }

    pub fn simplex_index_by_labels(&self, labels: &[String]) -> Result<(usize, u32)> {
        let mut ids = Vec::with_capacity(labels.len());
        for l in labels {
            ids.push(self.vertex_id(l)?);
        }
        ids.sort_unstable();
        let q = ids.len() - 1;
        match self.simplex_index(&ids) {
            Some(i) => Ok((q, i)),
            None => Err(Error::UnknownSimplex(labels.to_vec())),
        }
    }

    pub fn labels_of(&self, tuple: &[u32]) -> Vec<String> {
        tuple.iter().map(|&v| self.vertices[v as usize].clone()).collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(|s| s.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(q, n)| if q % 2 == 0 { *n as i64 } else { -(*n as i64) })
            .sum()
    }

    /// Maximal simplices (not a face of any other simplex).
    pub fn top_simplices(&self) -> Vec<Vec<u32>> {
        let mut tops = Vec::new();
        for q in 0..=self.dim() {
            for s in self.simplices_of_dim(q) {
                if q == self.dim() {
                    tops.push(s.clone());
                    continue;
                }
                // s is maximal iff no cofacet exists
                let has_cofacet = self
                    .simplices_of_dim(q + 1)
                    .iter()
                    .any(|t| is_subset(s, t));
                if !has_cofacet {
                    tops.push(s.clone());
                }
            }
        }
        tops
    }

    /// Every facet of every simplex must be present; used by validation
    /// tests and cheap enough to run on parse in debug builds.
    pub fn check_face_closure(&self) -> bool {
        for q in 1..=self.dim() {
            for s in self.simplices_of_dim(q) {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    if self.simplex_index(&face).is_none() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Integer coboundary in degree q: rows are (q+1)-simplices, columns
    /// are q-simplices, with entry (tau, sigma) = (-1)^i when sigma is the
    /// i-th face of tau.
    pub fn coboundary(&self, q: usize) -> Result<IntMatrix> {
        if q >= self.dim() {
            return Err(Error::DegreeOutOfRange { got: q, dim: self.dim() });
        }
        Ok(self.coboundary_unchecked(q))
    }

    /// Same as [`Self::coboundary`] but returns an empty-rowed matrix in
    /// the top degree instead of erroring; internal pipelines want the
    /// zero map there.
    pub fn coboundary_unchecked(&self, q: usize) -> IntMatrix {
        let nrows = self.count(q + 1);
        let ncols = self.count(q);
        let mut entries = Vec::new();
        for (r, tau) in self.simplices_of_dim(q + 1).iter().enumerate() {
            for i in 0..tau.len() {
                let mut face = tau.clone();
                face.remove(i);
                let c = self.simplex_index(&face).expect("face closure");
                let sign = if i % 2 == 0 { 1i8 } else { -1i8 };
                entries.push((r as u32, c, sign));
            }
        }
        IntMatrix { nrows, ncols, entries }
    }

    /// Oriented edges as (u, v) with u < v, indexed like the 1-simplices.
    pub fn edges(&self) -> &[Vec<u32>] {
        self.simplices_of_dim(1)
    }
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut i = 0;
    for x in b {
        if i < a.len() && a[i] == *x {
            i += 1;
        }
    }
    i == a.len()
}

/// Sign-valued incidence matrix (the integer coboundary).
#[derive(Clone, Debug)]
pub struct IntMatrix {
    pub nrows: usize,
    pub ncols: usize,
    /// (row, col, sign with sign in {-1, +1})
    pub entries: Vec<(u32, u32, i8)>,
}

impl IntMatrix {
    /// Compose with another integer matrix; used to assert d.d = 0.
    pub fn compose_is_zero(&self, inner: &IntMatrix) -> bool {
        assert_eq!(self.ncols, inner.nrows);
        let mut acc: HashMap<(u32, u32), i64> = HashMap::new();
        let mut inner_rows: Vec<Vec<(u32, i8)>> = vec![Vec::new(); inner.nrows];
        for (r, c, s) in &inner.entries {
            inner_rows[*r as usize].push((*c, *s));
        }
        for (r, k, s1) in &self.entries {
            for (c, s2) in &inner_rows[*k as usize] {
                *acc.entry((*r, *c)).or_insert(0) += (*s1 as i64) * (*s2 as i64);
            }
        }
        acc.values().all(|v| *v == 0)
    }
}

/// Map between the vertex sets of two complexes. No monotonicity is
/// enforced; pullbacks send degenerate image tuples to zero.
#[derive(Clone, Debug)]
pub struct VertexMap {
    map: HashMap<u32, u32>,
}

impl VertexMap {
    pub fn identity(k: &SimplicialComplex) -> Self {
        VertexMap { map: (0..k.vertex_count() as u32).map(|v| (v, v)).collect() }
    }

    pub fn from_pairs(
        domain: &SimplicialComplex,
        codomain: &SimplicialComplex,
        pairs: &[(String, String)],
    ) -> Result<Self> {
        let mut map = HashMap::new();
        for (from, to) in pairs {
            map.insert(domain.vertex_id(from)?, codomain.vertex_id(to)?);
        }
        if map.len() != domain.vertex_count() {
            return Err(Error::Invalid("vertex map does not cover the domain".into()));
        }
        Ok(VertexMap { map })
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.map[&v]
    }

    /// Image of an ascending tuple: `None` when degenerate or out of order
    /// (the pullback of a cochain vanishes there).
    pub fn image_tuple(&self, tuple: &[u32]) -> Option<Vec<u32>> {
        let img: Vec<u32> = tuple.iter().map(|&v| self.apply(v)).collect();
        for w in img.windows(2) {
            if w[0] >= w[1] {
                return None;
            }
        }
        Some(img)
    }
}

/// Staircase triangulation of the product, with the two projections.
pub struct ProductComplex {
    pub complex: SimplicialComplex,
    pub to_left: VertexMap,
    pub to_right: VertexMap,
}

/// Label for a product vertex.
fn pair_label(a: &str, b: &str) -> String {
    format!("{a}|{b}")
}

pub fn product_complex(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<ProductComplex> {
    // vertex order: lexicographic by (order in K, order in L)
    let mut order: Vec<String> = Vec::with_capacity(k.vertex_count() * l.vertex_count());
    for a in k.vertex_labels() {
        for b in l.vertex_labels() {
            order.push(pair_label(a, b));
        }
    }

    let mut tops: Vec<Vec<String>> = Vec::new();
    let k_tops = k.top_simplices();
    let l_tops = l.top_simplices();
    for sk in &k_tops {
        for sl in &l_tops {
            let p = sk.len() - 1;
            let q = sl.len() - 1;
            // monotone lattice paths from (0,0) to (p,q)
            let mut path = Vec::with_capacity(p + q);
            enumerate_paths(p, q, &mut path, &mut |steps| {
                let mut i = 0usize;
                let mut j = 0usize;
                let mut chain = vec![pair_label(
                    k.vertex_label(sk[0]),
                    l.vertex_label(sl[0]),
                )];
                for &step_right in steps {
                    if step_right {
                        j += 1;
                    } else {
                        i += 1;
                    }
                    chain.push(pair_label(k.vertex_label(sk[i]), l.vertex_label(sl[j])));
                }
                tops.push(chain);
            });
        }
    }

    let complex = SimplicialComplex::from_top_simplices(Some(order), &tops)?;
    let mut left_pairs = Vec::new();
    let mut right_pairs = Vec::new();
    for a in k.vertex_labels() {
        for b in l.vertex_labels() {
            left_pairs.push((pair_label(a, b), a.clone()));
            right_pairs.push((pair_label(a, b), b.clone()));
        }
    }
    let to_left = VertexMap::from_pairs(&complex, k, &left_pairs)?;
    let to_right = VertexMap::from_pairs(&complex, l, &right_pairs)?;
    Ok(ProductComplex { complex, to_left, to_right })
}

fn enumerate_paths(p: usize, q: usize, path: &mut Vec<bool>, emit: &mut impl FnMut(&[bool])) {
    if p == 0 && q == 0 {
        emit(path);
        return;
    }
    if p > 0 {
        path.push(false);
        enumerate_paths(p - 1, q, path, emit);
        path.pop();
    }
    if q > 0 {
        path.push(true);
        enumerate_paths(p, q - 1, path, emit);
        path.pop();
    }
}

/// Connected sum: remove one top simplex from each pure complex and glue
/// the boundaries along the given vertex bijection (sigma_l -> sigma_k).
/// Vertices of `l` outside the gluing keep their labels when possible and
/// are suffixed with `~2`, `~3`, ... on collision with `k` labels.
pub fn connected_sum(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
    sigma_k: &[String],
    sigma_l: &[String],
    gluing: &[(String, String)],
) -> Result<SimplicialComplex> {
    let n = k.dim();
    if l.dim() != n {
        return Err(Error::ConnectedSum(format!(
            "dimension mismatch: {} vs {}",
            n,
            l.dim()
        )));
    }
    let k_tops = k.top_simplices();
    let l_tops = l.top_simplices();
    if k_tops.iter().any(|t| t.len() != n + 1) {
        return Err(Error::ConnectedSum("left complex is not pure".into()));
    }
    if l_tops.iter().any(|t| t.len() != n + 1) {
        return Err(Error::ConnectedSum("right complex is not pure".into()));
    }

    let (qk, ik) = k.simplex_index_by_labels(sigma_k)?;
    let (ql, il) = l.simplex_index_by_labels(sigma_l)?;
    if qk != n || ql != n {
        return Err(Error::ConnectedSum("facets must be top simplices".into()));
    }
    let sk_ids: BTreeSet<u32> = k.simplex_tuple(n, ik).iter().copied().collect();
    let sl_ids: BTreeSet<u32> = l.simplex_tuple(n, il).iter().copied().collect();

    // resolve the gluing bijection
    let mut glue: HashMap<u32, String> = HashMap::new();
    if gluing.len() != n + 1 {
        return Err(Error::ConnectedSum("gluing must match facet size".into()));
    }
    let mut targets = BTreeSet::new();
    for (from, to) in gluing {
        let fid = l.vertex_id(from)?;
        let tid = k.vertex_id(to)?;
        if !sl_ids.contains(&fid) || !sk_ids.contains(&tid) {
            return Err(Error::ConnectedSum(format!(
                "gluing pair {from}->{to} is not between the two facets"
            )));
        }
        if glue.insert(fid, to.clone()).is_some() || !targets.insert(tid) {
            return Err(Error::ConnectedSum("gluing is not a bijection".into()));
        }
    }

    // relabel the rest of l, avoiding collisions with labels of k
    let k_labels: BTreeSet<&str> = k.vertex_labels().iter().map(|s| s.as_str()).collect();
    let mut rename: HashMap<u32, String> = glue;
    for (vid, label) in l.vertex_labels().iter().enumerate() {
        let vid = vid as u32;
        if rename.contains_key(&vid) {
            continue;
        }
        let mut candidate = label.clone();
        let mut n = 2;
        while k_labels.contains(candidate.as_str()) {
            candidate = format!("{label}~{n}");
            n += 1;
        }
        rename.insert(vid, candidate);
    }

    // assemble top simplices
    let mut tops: Vec<Vec<String>> = Vec::new();
    for t in &k_tops {
        if t.iter().copied().collect::<BTreeSet<_>>() == sk_ids {
            continue;
        }
        tops.push(k.labels_of(t));
    }
    let glued_image: BTreeSet<String> =
        sl_ids.iter().map(|v| rename[v].clone()).collect();
    let k_simplex_sets: BTreeSet<Vec<String>> = (0..=k.dim())
        .flat_map(|q| k.simplices_of_dim(q).iter().map(|s| k.labels_of(s)))
        .collect();
    let mut l_side_tops = Vec::new();
    for t in &l_tops {
        if t.iter().copied().collect::<BTreeSet<_>>() == sl_ids {
            continue;
        }
        l_side_tops.push(t.clone());
    }
    // collision check at all face levels of the l side
    for q in 0..=l.dim() {
        for s in l.simplices_of_dim(q) {
            let sset: BTreeSet<u32> = s.iter().copied().collect();
            if sset == sl_ids {
                continue; // the removed facet itself
            }
            let mapped: Vec<String> = s.iter().map(|v| rename[v].clone()).collect();
            let mut dedup = mapped.clone();
            dedup.sort();
            dedup.dedup();
            if dedup.len() != mapped.len() {
                return Err(Error::ConnectedSum(format!(
                    "identification produces a simplex with repeated vertices: {mapped:?}"
                )));
            }
            let within_boundary = mapped.iter().all(|v| glued_image.contains(v));
            if within_boundary {
                continue; // shared boundary faces are the intended overlap
            }
            let mut sorted = mapped.clone();
            sorted.sort();
            // compare against k as unordered label sets
            let collides = k_simplex_sets.iter().any(|ks| {
                let mut kss = ks.clone();
                kss.sort();
                kss == sorted
            });
            if collides {
                return Err(Error::ConnectedSum(format!(
                    "identification produces a duplicate simplex: {mapped:?}"
                )));
            }
        }
    }
    for t in l_side_tops {
        tops.push(t.iter().map(|v| rename[v].clone()).collect());
    }

    // vertex order: k's order, then the remaining l vertices in l's order
    let mut order: Vec<String> = k.vertex_labels().to_vec();
    for (vid, _) in l.vertex_labels().iter().enumerate() {
        let vid = vid as u32;
        if !sl_ids.contains(&vid) {
            order.push(rename[&vid].clone());
        }
    }
    SimplicialComplex::from_top_simplices(Some(order), &tops)
}
