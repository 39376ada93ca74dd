//! Matrices over the local ring at s = 0 and the algorithms behind the
//! spectral sequence: elementary divisors over the discrete valuation
//! ring, rank over k(s), and saturated kernel bases.
//!
//! Row denominators are powers of the unit 1+s, so scaling every row by
//! its common denominator changes neither divisors, nor rank, nor the
//! kernel; internally the heavy algorithms therefore run on plain
//! polynomial matrices.

use crate::field::Field;
use crate::local::LocalElem;
use crate::matrix::{Reducer, SparseVec};
use crate::poly::{Poly, PolyArith};
use crate::ratfunc::{RatFn, RatFuncField};

/// Row-major sparse matrix over the local ring.
#[derive(Clone, Debug)]
pub struct MatR<F: Field> {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<SparseVec<LocalElem<F>>>,
}

impl<F: Field> MatR<F> {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        MatR { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (u32, u32, LocalElem<F>)>,
    ) -> Self {
        let mut rows: Vec<SparseVec<LocalElem<F>>> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            if !v.is_zero() {
                rows[r as usize].push((c, v));
            }
        }
        for row in &mut rows {
            row.sort_by_key(|(c, _)| *c);
        }
        MatR { nrows, ncols, rows }
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&LocalElem<F>> {
        self.rows[r]
            .binary_search_by_key(&(c as u32), |(j, _)| *j)
            .ok()
            .map(|k| &self.rows[r][k].1)
    }

    /// Matrix product, for exactness checks like D.D = 0.
    pub fn mul(&self, field: &F, other: &MatR<F>) -> MatR<F> {
        assert_eq!(self.ncols, other.nrows);
        let mut rows: Vec<SparseVec<LocalElem<F>>> = Vec::with_capacity(self.nrows);
        for row in &self.rows {
            let mut acc: Vec<LocalElem<F>> = vec![LocalElem::zero(); other.ncols];
            for (k, a) in row {
                for (j, b) in &other.rows[*k as usize] {
                    let prod = a.mul(field, b);
                    acc[*j as usize] = acc[*j as usize].add(field, &prod);
                }
            }
            rows.push(
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j as u32, v))
                    .collect(),
            );
        }
        MatR { nrows: self.nrows, ncols: other.ncols, rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// Apply to a vector of ring elements.
    pub fn apply(&self, field: &F, x: &[LocalElem<F>]) -> Vec<LocalElem<F>> {
        assert_eq!(x.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| {
                let mut acc = LocalElem::zero();
                for (j, a) in row {
                    if !x[*j as usize].is_zero() {
                        acc = acc.add(field, &a.mul(field, &x[*j as usize]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Specialize at s = 0, producing a column-major field matrix.
    pub fn eval0(&self, field: &F) -> crate::matrix::SparseMat<F> {
        let mut cols: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                let e = v.eval0(field);
                if !field.is_zero(&e) {
                    cols[*c as usize].push((r as u32, e));
                }
            }
        }
        for col in &mut cols {
            col.sort_by_key(|(r, _)| *r);
        }
        crate::matrix::SparseMat { nrows: self.nrows, cols }
    }

    /// Clear each row's (1+s)-power denominators; a unit row scaling.
    pub fn to_poly_mat(&self, field: &F) -> PolyMat<F> {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let e_max = row.iter().map(|(_, v)| v.den_pow).max().unwrap_or(0);
                row.iter()
                    .map(|(c, v)| {
                        let scale = field.ppow_one_plus_s(e_max - v.den_pow);
                        (*c, field.pmul(&v.num, &scale))
                    })
                    .collect()
            })
            .collect();
        PolyMat { nrows: self.nrows, ncols: self.ncols, rows }
    }
}

/// Row-major sparse polynomial matrix.
#[derive(Clone, Debug)]
pub struct PolyMat<F: Field> {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<SparseVec<Poly<F>>>,
}

impl<F: Field> PolyMat<F> {
    pub fn from_triplets(
        field: &F,
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (u32, u32, Poly<F>)>,
    ) -> Self {
        let mut rows: Vec<SparseVec<Poly<F>>> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            let v = field.ptrim(v);
            if !v.is_empty() {
                rows[r as usize].push((c, v));
            }
        }
        for row in &mut rows {
            row.sort_by_key(|(c, _)| *c);
        }
        PolyMat { nrows, ncols, rows }
    }

    /// new_row = alpha * row_a - gamma * row_b, dropping zero entries.
    fn combine_rows(
        field: &F,
        alpha: &Poly<F>,
        a: &SparseVec<Poly<F>>,
        gamma: &Poly<F>,
        b: &SparseVec<Poly<F>>,
    ) -> SparseVec<Poly<F>> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0usize, 0usize);
        while i < a.len() || j < b.len() {
            let next = match (a.get(i), b.get(j)) {
                (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                    i += 1;
                    j += 1;
                    (*ca, field.psub(&field.pmul(alpha, va), &field.pmul(gamma, vb)))
                }
                (Some((ca, va)), Some((cb, _))) if ca < cb => {
                    i += 1;
                    (*ca, field.pmul(alpha, va))
                }
                (Some(_), Some((cb, vb))) => {
                    j += 1;
                    (*cb, field.pneg(&field.pmul(gamma, vb)))
                }
                (Some((ca, va)), None) => {
                    i += 1;
                    (*ca, field.pmul(alpha, va))
                }
                (None, Some((cb, vb))) => {
                    j += 1;
                    (*cb, field.pneg(&field.pmul(gamma, vb)))
                }
                (None, None) => unreachable!(),
            };
            if !next.1.is_empty() {
                out.push(next);
            }
        }
        out
    }

    /// Divide a row by the valuation-zero part of the gcd of its entries
    /// and by its coefficient content. Both are unit scalings over the
    /// local ring, so divisors are unaffected; they keep fraction-free
    /// elimination from blowing up degrees and coefficient sizes.
    fn trim_row_unit(field: &F, row: &mut SparseVec<Poly<F>>) {
        if row.is_empty() {
            return;
        }
        let mut g = row[0].1.clone();
        for (_, v) in row.iter().skip(1) {
            if g.len() == 1 {
                break;
            }
            g = field.pgcd(&g, v);
        }
        let val = field.pval(&g).unwrap_or(0);
        let unit = field.pshr(&g, val);
        if unit.len() > 1 {
            for (_, v) in row.iter_mut() {
                *v = field.pdiv_exact(v, &unit);
            }
        }
        trim_row_content(field, row);
    }

    /// Divide a row by its full gcd (content and s-powers included). The
    /// rank over k(s) is insensitive to any nonzero row scaling.
    fn trim_row_full(field: &F, row: &mut SparseVec<Poly<F>>) {
        if row.is_empty() {
            return;
        }
        let mut g = row[0].1.clone();
        for (_, v) in row.iter().skip(1) {
            if g.len() == 1 {
                break;
            }
            g = field.pgcd(&g, v);
        }
        if g.len() > 1 {
            for (_, v) in row.iter_mut() {
                *v = field.pdiv_exact(v, &g);
            }
        }
        trim_row_content(field, row);
    }

    /// Elementary divisor exponents over the local ring: the multiset
    /// e_1 <= e_2 <= ... with the matrix equivalent to diag(s^{e_i}).
    /// Pivoting always selects a minimal-valuation entry, breaking ties by
    /// lowest (row, column).
    pub fn dvr_divisors(&self, field: &F) -> Vec<u32> {
        let mut rows: Vec<SparseVec<Poly<F>>> = self.rows.clone();
        let mut row_active = vec![true; self.nrows];
        let mut col_active = vec![true; self.ncols];
        let mut exps: Vec<u32> = Vec::new();

        loop {
            // minimal-valuation pivot, lexicographically first on ties
            let mut best: Option<(usize, usize, u32)> = None;
            for (r, row) in rows.iter().enumerate() {
                if !row_active[r] {
                    continue;
                }
                for (c, v) in row {
                    if !col_active[*c as usize] {
                        continue;
                    }
                    let val = field.pval(v).expect("stored entries are nonzero") as u32;
                    match best {
                        Some((_, _, bv)) if bv <= val => {}
                        _ => best = Some((r, *c as usize, val)),
                    }
                    if val == 0 {
                        break; // nothing in this row can beat valuation 0
                    }
                }
                if let Some((br, _, 0)) = best {
                    if br == r {
                        break; // lex-first valuation-0 pivot found
                    }
                }
            }
            let Some((pr, pc, e)) = best else { break };
            exps.push(e);

            let pivot = {
                let row = &rows[pr];
                let k = row.binary_search_by_key(&(pc as u32), |(c, _)| *c).unwrap();
                row[k].1.clone()
            };
            let alpha = field.pshr(&pivot, e as usize);
            row_active[pr] = false;
            col_active[pc] = false;

            let pivot_row = std::mem::take(&mut rows[pr]);
            for r in 0..rows.len() {
                if !row_active[r] {
                    continue;
                }
                let Some(k) = rows[r].binary_search_by_key(&(pc as u32), |(c, _)| *c).ok() else {
                    continue;
                };
                let b = rows[r][k].1.clone();
                let gamma = field.pshr(&b, e as usize);
                let mut combined = Self::combine_rows(field, &alpha, &rows[r], &gamma, &pivot_row);
                // the pivot column cancels exactly; drop it if a rounding
                // of the merge kept an explicit zero (it cannot, but titles
                // of inactive columns are filtered on scan anyway)
                combined.retain(|(c, _)| *c != pc as u32);
                Self::trim_row_unit(field, &mut combined);
                rows[r] = combined;
            }
            rows[pr] = pivot_row; // keep for debugging; row is inactive
        }

        exps.sort_unstable();
        exps
    }

    /// Rank over the fraction field k(s), by division-postponed elimination
    /// with full row-gcd trimming. Deterministic pivoting: leftmost active
    /// column, then fewest entries, then lowest row.
    pub fn rank_fraction_free(&self, field: &F) -> usize {
        let mut rows: Vec<SparseVec<Poly<F>>> = self.rows.clone();
        for row in &mut rows {
            Self::trim_row_full(field, row);
        }
        let mut row_active = vec![true; self.nrows];
        let mut col_active = vec![true; self.ncols];
        let mut rank = 0usize;

        loop {
            // leftmost active column with support
            let mut pivot: Option<(usize, usize, usize)> = None; // (col, row, nnz)
            for (r, row) in rows.iter().enumerate() {
                if !row_active[r] {
                    continue;
                }
                for (c, _) in row {
                    if !col_active[*c as usize] {
                        continue;
                    }
                    let c = *c as usize;
                    let nnz = row.len();
                    match pivot {
                        Some((bc, br, bn))
                            if bc < c || (bc == c && (bn < nnz || (bn == nnz && br < r))) => {}
                        _ => pivot = Some((c, r, nnz)),
                    }
                    break; // only the first active column of this row matters
                }
            }
            let Some((pc, pr, _)) = pivot else { break };
            rank += 1;
            row_active[pr] = false;
            col_active[pc] = false;

            let pivot_row = std::mem::take(&mut rows[pr]);
            let p = {
                let k = pivot_row.binary_search_by_key(&(pc as u32), |(c, _)| *c).unwrap();
                pivot_row[k].1.clone()
            };
            for r in 0..rows.len() {
                if !row_active[r] {
                    continue;
                }
                let Some(k) = rows[r].binary_search_by_key(&(pc as u32), |(c, _)| *c).ok() else {
                    continue;
                };
                let b = rows[r][k].1.clone();
                let mut combined = Self::combine_rows(field, &p, &rows[r], &b, &pivot_row);
                combined.retain(|(c, _)| *c != pc as u32);
                Self::trim_row_full(field, &mut combined);
                rows[r] = combined;
            }
            rows[pr] = pivot_row;
        }
        rank
    }

    /// Basis of the kernel over the local ring, saturated: the columns span
    /// ker over k(s), each has a valuation-0 coordinate, and the span of
    /// their evaluations at s = 0 has full rank.
    pub fn kernel_saturated(&self, field: &F) -> Vec<SparseVec<Poly<F>>> {
        // kernel over k(s) via the generic column reducer
        let ks = RatFuncField::new(field);
        let mut red: Reducer<RatFuncField<F>> = Reducer::new(&ks);
        let mut cols: Vec<SparseVec<RatFn<F::Elem>>> = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                cols[*c as usize].push((r as u32, ks.from_poly(v.clone())));
            }
        }
        for col in &mut cols {
            col.sort_by_key(|(r, _)| *r);
        }
        let mut basis: Vec<SparseVec<Poly<F>>> = Vec::new();
        for col in cols {
            red.insert(col);
        }
        for kv in &red.kernel {
            basis.push(clear_denominators(field, kv));
        }
        saturate(field, self.nrows, &self.rows, &mut basis);
        basis
    }
}

/// Scale a rational-function vector to a primitive polynomial vector.
fn clear_denominators<F: Field>(
    field: &F,
    v: &SparseVec<RatFn<F::Elem>>,
) -> SparseVec<Poly<F>> {
    let mut lcm = field.pone();
    for (_, e) in v {
        let g = field.pgcd(&lcm, &e.den);
        lcm = field.pmul(&lcm, &field.pdiv_exact(&e.den, &g));
    }
    let mut out: SparseVec<Poly<F>> = v
        .iter()
        .map(|(i, e)| {
            let extra = field.pdiv_exact(&lcm, &e.den);
            (*i, field.pmul(&e.num, &extra))
        })
        .collect();
    trim_vector(field, &mut out);
    out
}

/// Divide all coefficients of a row by their common content (a unit
/// constant); a no-op over fields without coefficient growth.
fn trim_row_content<F: Field>(field: &F, row: &mut SparseVec<Poly<F>>) {
    let Some(c) = field.content(row.iter().flat_map(|(_, p)| p.iter())) else {
        return;
    };
    let inv = field.inv(&c).expect("content of nonzero coefficients is nonzero");
    for (_, p) in row.iter_mut() {
        for coeff in p.iter_mut() {
            *coeff = field.mul(coeff, &inv);
        }
    }
}

/// Divide a polynomial vector by the gcd of its entries (s-powers and all;
/// kernel vectors are free to absorb any k(s) scalar).
fn trim_vector<F: Field>(field: &F, v: &mut SparseVec<Poly<F>>) {
    if v.is_empty() {
        return;
    }
    let mut g = v[0].1.clone();
    for (_, e) in v.iter().skip(1) {
        if g.len() == 1 {
            break;
        }
        g = field.pgcd(&g, e);
    }
    if g.len() > 1 {
        for (_, e) in v.iter_mut() {
            *e = field.pdiv_exact(e, &g);
        }
    }
    trim_row_content(field, v);
}

/// Refine a k(s)-kernel basis until the evaluations at s = 0 are linearly
/// independent, i.e. until the spanned lattice is saturated. Each round
/// replaces a dependent vector by the dependency divided by its s-power,
/// which strictly enlarges the lattice, so the loop terminates.
fn saturate<F: Field>(
    field: &F,
    _nrows: usize,
    matrix_rows: &[SparseVec<Poly<F>>],
    basis: &mut Vec<SparseVec<Poly<F>>>,
) {
    loop {
        let mut red: Reducer<F> = Reducer::new(field);
        let mut dependent: Vec<SparseVec<F::Elem>> = Vec::new();
        for v in basis.iter() {
            let ev: SparseVec<F::Elem> = v
                .iter()
                .filter_map(|(i, p)| {
                    let e = field.peval0(p);
                    if field.is_zero(&e) {
                        None
                    } else {
                        Some((*i, e))
                    }
                })
                .collect();
            if let crate::matrix::Inserted::Dependent = red.insert(ev) {
                dependent.push(red.kernel.last().unwrap().clone());
            }
        }
        if dependent.is_empty() {
            break;
        }
        for dep in dependent {
            // combination of basis vectors that vanishes at s = 0
            let mut comb: SparseVec<Poly<F>> = Vec::new();
            for (k, coef) in &dep {
                let scaled: SparseVec<Poly<F>> = basis[*k as usize]
                    .iter()
                    .map(|(i, p)| (*i, field.pscale(p, coef)))
                    .collect();
                comb = merge_add(field, &comb, &scaled);
            }
            let val = comb
                .iter()
                .filter_map(|(_, p)| field.pval(p))
                .min()
                .expect("dependency combination cannot be the zero vector");
            debug_assert!(val >= 1);
            let mut refined: SparseVec<Poly<F>> = comb
                .iter()
                .map(|(i, p)| (*i, field.pshr(p, val)))
                .collect();
            trim_vector(field, &mut refined);
            let target = dep.last().unwrap().0 as usize;
            basis[target] = refined;
        }
        let _ = matrix_rows; // kernel membership is preserved by construction
    }
}

fn merge_add<F: Field>(
    field: &F,
    a: &SparseVec<Poly<F>>,
    b: &SparseVec<Poly<F>>,
) -> SparseVec<Poly<F>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) if ia == ib => {
                i += 1;
                j += 1;
                (*ia, field.padd(va, vb))
            }
            (Some((ia, va)), Some((ib, _))) if ia < ib => {
                i += 1;
                (*ia, va.clone())
            }
            (Some(_), Some((ib, vb))) => {
                j += 1;
                (*ib, vb.clone())
            }
            (Some((ia, va)), None) => {
                i += 1;
                (*ia, va.clone())
            }
            (None, Some((ib, vb))) => {
                j += 1;
                (*ib, vb.clone())
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_empty() {
            out.push(next);
        }
    }
    out
}

/// Apply a polynomial matrix to a polynomial vector; zero result means the
/// vector is in the kernel, exactly.
pub fn poly_mat_apply<F: Field>(
    field: &F,
    rows: &[SparseVec<Poly<F>>],
    x: &SparseVec<Poly<F>>,
) -> Vec<Poly<F>> {
    rows.iter()
        .map(|row| {
            let mut acc = field.pzero();
            let mut i = 0usize;
            let mut j = 0usize;
            while i < row.len() && j < x.len() {
                match row[i].0.cmp(&x[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        acc = field.padd(&acc, &field.pmul(&row[i].1, &x[j].1));
                        i += 1;
                        j += 1;
                    }
                }
            }
            acc
        })
        .collect()
}
