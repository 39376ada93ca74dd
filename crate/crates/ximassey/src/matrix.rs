//! Sparse exact linear algebra over a coefficient field.
//!
//! Everything is built on one primitive: left-to-right column reduction
//! with expression tracking (the R = M·V decomposition familiar from
//! persistence computations, over an arbitrary exact field). Rank, kernel
//! basis, image basis, solving, span membership and quotient-basis
//! completion all fall out of the same [`Reducer`].

use std::collections::HashMap;

use crate::error::Error;
use crate::field::Field;

/// Sparse vector: (index, nonzero value), sorted by index.
pub type SparseVec<E> = Vec<(u32, E)>;

pub fn sv_is_zero<E>(v: &SparseVec<E>) -> bool {
    v.is_empty()
}

/// Largest occupied index ("low" in reduction terminology).
pub fn sv_low<E>(v: &SparseVec<E>) -> Option<u32> {
    v.last().map(|(i, _)| *i)
}

pub fn sv_get<'a, E>(v: &'a SparseVec<E>, i: u32) -> Option<&'a E> {
    v.binary_search_by_key(&i, |(j, _)| *j)
        .ok()
        .map(|k| &v[k].1)
}

pub fn sv_from_dense<F: Field>(field: &F, dense: &[F::Elem]) -> SparseVec<F::Elem> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, e)| !field.is_zero(e))
        .map(|(i, e)| (i as u32, e.clone()))
        .collect()
}

pub fn sv_to_dense<F: Field>(field: &F, v: &SparseVec<F::Elem>, n: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); n];
    for (i, e) in v {
        out[*i as usize] = e.clone();
    }
    out
}

/// a - coef * b, merging sorted supports.
pub fn sv_sub_scaled<F: Field>(
    field: &F,
    a: &SparseVec<F::Elem>,
    coef: &F::Elem,
    b: &SparseVec<F::Elem>,
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) if ia == ib => {
                let v = field.sub(va, &field.mul(coef, vb));
                if !field.is_zero(&v) {
                    out.push((*ia, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ia, va)), Some((ib, _))) if ia < ib => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (Some(_), Some((ib, vb))) => {
                let v = field.neg(&field.mul(coef, vb));
                if !field.is_zero(&v) {
                    out.push((*ib, v));
                }
                j += 1;
            }
            (Some((ia, va)), None) => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (None, Some((ib, vb))) => {
                let v = field.neg(&field.mul(coef, vb));
                if !field.is_zero(&v) {
                    out.push((*ib, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn sv_add<F: Field>(
    field: &F,
    a: &SparseVec<F::Elem>,
    b: &SparseVec<F::Elem>,
) -> SparseVec<F::Elem> {
    let minus_one = field.neg(&field.one());
    sv_sub_scaled(field, a, &minus_one, b)
}

pub fn sv_scale<F: Field>(field: &F, a: &SparseVec<F::Elem>, c: &F::Elem) -> SparseVec<F::Elem> {
    if field.is_zero(c) {
        return Vec::new();
    }
    a.iter().map(|(i, v)| (*i, field.mul(v, c))).collect()
}

/// Column-major sparse matrix over a field.
#[derive(Clone, Debug)]
pub struct SparseMat<F: Field> {
    pub nrows: usize,
    pub cols: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> SparseMat<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn from_triplets(
        field: &F,
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (u32, u32, F::Elem)>,
    ) -> Self {
        let mut cols: Vec<Vec<(u32, F::Elem)>> = vec![Vec::new(); ncols];
        for (r, c, v) in triplets {
            if !field.is_zero(&v) {
                cols[c as usize].push((r, v));
            }
        }
        for col in &mut cols {
            col.sort_by_key(|(r, _)| *r);
        }
        SparseMat { nrows, cols }
    }

    /// y = M x.
    pub fn apply(&self, field: &F, x: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut acc: SparseVec<F::Elem> = Vec::new();
        let minus = field.neg(&field.one());
        for (j, coef) in x {
            let scaled = sv_scale(field, &self.cols[*j as usize], coef);
            acc = sv_sub_scaled(field, &acc, &minus, &scaled);
        }
        acc
    }

    pub fn transpose(&self, _field: &F, ncols_hint: usize) -> SparseMat<F> {
        let mut cols: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.nrows.max(ncols_hint)];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                cols[*i as usize].push((j as u32, v.clone()));
            }
        }
        SparseMat { nrows: self.ncols(), cols }
    }
}

/// Outcome of feeding one column into a [`Reducer`].
pub enum Inserted {
    /// Column was independent; stored with a fresh low.
    Independent,
    /// Column reduced to zero; its expression in earlier generators is kept.
    Dependent,
}

struct Entry<E> {
    col: SparseVec<E>,
    /// Expression of `col` as a combination of the inserted generators.
    expr: SparseVec<E>,
}

/// Incremental column reducer with distinct lows and generator tracking.
pub struct Reducer<F: Field> {
    field: F,
    entries: Vec<Entry<F::Elem>>,
    lows: HashMap<u32, usize>,
    n_inserted: u32,
    /// For each dependent generator: its expression in earlier generators
    /// (including itself with coefficient 1), i.e. a kernel vector.
    pub kernel: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> Reducer<F> {
    pub fn new(field: &F) -> Self {
        Reducer {
            field: field.clone(),
            entries: Vec::new(),
            lows: HashMap::new(),
            n_inserted: 0,
            kernel: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn n_inserted(&self) -> usize {
        self.n_inserted as usize
    }

    /// Reduce `col` against the stored columns without inserting. Returns
    /// the remainder and the coefficients (over generator indices) of the
    /// part that was absorbed.
    pub fn reduce_full(
        &self,
        col: SparseVec<F::Elem>,
    ) -> (SparseVec<F::Elem>, SparseVec<F::Elem>) {
        let f = &self.field;
        let mut col = col;
        let mut used: SparseVec<F::Elem> = Vec::new();
        let minus = f.neg(&f.one());
        while let Some(low) = sv_low(&col) {
            let Some(&k) = self.lows.get(&low) else { break };
            let entry = &self.entries[k];
            let pivot = sv_get(&entry.col, low).expect("low entry present");
            let coef = f.div(sv_get(&col, low).unwrap(), pivot).expect("pivot nonzero");
            col = sv_sub_scaled(f, &col, &coef, &entry.col);
            let scaled = sv_scale(f, &entry.expr, &coef);
            used = sv_sub_scaled(f, &used, &minus, &scaled);
        }
        (col, used)
    }

    /// Insert the next generator column.
    pub fn insert(&mut self, col: SparseVec<F::Elem>) -> Inserted {
        let gen_idx = self.n_inserted;
        self.n_inserted += 1;
        let (mut rem, used) = self.reduce_full(col);
        if rem.is_empty() {
            // generator = sum of used earlier generators; kernel vector is
            // generator - used
            let mut kv = sv_scale(&self.field, &used, &self.field.neg(&self.field.one()));
            kv.push((gen_idx, self.field.one()));
            kv.sort_by_key(|(i, _)| *i);
            self.kernel.push(kv);
            return Inserted::Dependent;
        }
        // rem = col_gen - sum_g used_g col_g
        let mut expr = sv_scale(&self.field, &used, &self.field.neg(&self.field.one()));
        expr.push((gen_idx, self.field.one()));
        expr.sort_by_key(|(i, _)| *i);
        // normalization is not required; distinct lows are enough
        let low = sv_low(&rem).unwrap();
        rem.shrink_to_fit();
        self.lows.insert(low, self.entries.len());
        self.entries.push(Entry { col: rem, expr });
        Inserted::Independent
    }

    /// Solve `sum_j x_j * generator_j = target`; `None` if out of span.
    pub fn solve(&self, target: SparseVec<F::Elem>) -> Option<SparseVec<F::Elem>> {
        let (rem, used) = self.reduce_full(target);
        if rem.is_empty() {
            Some(used)
        } else {
            None
        }
    }

    pub fn in_span(&self, target: SparseVec<F::Elem>) -> bool {
        self.reduce_full(target).0.is_empty()
    }

    /// The stored reduced columns (a basis of the span of the generators).
    pub fn reduced_columns(&self) -> impl Iterator<Item = &SparseVec<F::Elem>> {
        self.entries.iter().map(|e| &e.col)
    }
}

/// Rank, kernel basis and image basis of a sparse matrix.
pub struct RankKernelImage<F: Field> {
    pub rank: usize,
    pub kernel: Vec<SparseVec<F::Elem>>,
    pub image: Vec<SparseVec<F::Elem>>,
}

pub fn rank_kernel_image<F: Field>(field: &F, m: &SparseMat<F>) -> RankKernelImage<F> {
    let mut red = Reducer::new(field);
    for col in &m.cols {
        red.insert(col.clone());
    }
    RankKernelImage {
        rank: red.rank(),
        image: red.reduced_columns().cloned().collect(),
        kernel: red.kernel,
    }
}

pub fn rank<F: Field>(field: &F, m: &SparseMat<F>) -> usize {
    let mut red = Reducer::new(field);
    for col in &m.cols {
        red.insert(col.clone());
    }
    red.rank()
}

/// Solve M x = c for one right-hand side.
pub fn solve<F: Field>(
    field: &F,
    m: &SparseMat<F>,
    c: &SparseVec<F::Elem>,
) -> Result<Option<SparseVec<F::Elem>>, Error> {
    let mut red = Reducer::new(field);
    for col in &m.cols {
        red.insert(col.clone());
    }
    Ok(red.solve(c.clone()))
}
