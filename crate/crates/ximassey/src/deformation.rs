//! The deformation complex of (K, zeta) and everything it computes: the
//! spectral sequence pages, Novikov–Betti numbers, and survivor classes.
//!
//! The coboundary is twisted edgewise by the unit (1+s)^zeta, which works
//! uniformly in every characteristic and specializes to the ordinary
//! coboundary at s = 0. The s-adic filtration of this complex yields the
//! spectral sequence with E_1 = H^*(K; k) and d_1 = cup with the class of
//! zeta; all page dimensions and differential ranks are read off from the
//! elementary divisor exponents of the differentials over the valuation
//! ring, while the ranks over k(s) give the Novikov–Betti numbers by an
//! independent elimination, so the two routes cross-check each other.

use std::cell::OnceCell;

use crate::cohomology::{
    cohomology_basis, Cochain, CohomologyBasis, CohomologyClass, IntegerCocycle,
};
use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::field::Field;
use crate::local::LocalElem;
use crate::matrix::{sv_from_dense, Inserted, Reducer, SparseVec};
use crate::poly::{Poly, PolyArith};
use crate::polymat::{poly_mat_apply, MatR, PolyMat};
use crate::Result;

/// Per-page dimensions and differential ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PageReport {
    pub r: usize,
    /// dims[q] = dim E_r^q
    pub dims: Vec<usize>,
    /// d_ranks[q] = rank of d_r : E_r^q -> E_r^{q+1}
    pub d_ranks: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub chi: i64,
    /// E_1 dimensions, equal to the Betti numbers of K
    pub betti: Vec<usize>,
    /// dim E_infty, the Novikov–Betti numbers
    pub novikov_betti: Vec<usize>,
    /// first page with E_r = E_infty; 0 when every differential is zero
    /// because the complex has no differentials at all
    pub r_stab: usize,
    pub pages: Vec<PageReport>,
}

/// Exact kernel elements of one differential, their classes at s = 0 and
/// the membership structure of the span.
pub struct SurvivorSpace<F: Field> {
    pub degree: usize,
    field: F,
    kernel_vecs: Vec<SparseVec<Poly<F>>>,
    membership: Reducer<F>,
    /// classes of the kernel evaluations that form a basis of the span
    pub basis_classes: Vec<CohomologyClass<F>>,
}

impl<F: Field> SurvivorSpace<F> {
    pub fn dim(&self) -> usize {
        self.membership.rank()
    }

    pub fn contains(&self, class: &CohomologyClass<F>) -> bool {
        self.membership.in_span(sv_from_dense(&self.field, &class.coords))
    }
}

/// Witness that a class survives: an exact kernel lift truncated at the
/// stabilization order. Re-multiplying the lift through D(s) vanishes
/// modulo s^{T+1}.
#[derive(Clone, Debug)]
pub struct SurvivorCertificate<F: Field> {
    pub class: CohomologyClass<F>,
    /// lift coefficients v_0, ..., v_T
    pub lift: Vec<Cochain<F>>,
    /// the lift is v_0 alone and D(s) v_0 = 0 identically
    pub strict: bool,
}

pub struct DeformedComplex<F: Field> {
    pub field: F,
    pub complex: SimplicialComplex,
    pub zeta: IntegerCocycle,
    /// d[q]: C^q -> C^{q+1} over the local ring, q = 0..=dim (top is zero)
    d: Vec<MatR<F>>,
    poly_d: Vec<OnceCell<PolyMat<F>>>,
    divisors: Vec<OnceCell<Vec<u32>>>,
    survivors: Vec<OnceCell<SurvivorSpace<F>>>,
    basis: OnceCell<CohomologyBasis<F>>,
}

/// Build the deformation complex; the twisted coboundary carries
/// (1+s)^zeta(v0,v1) on the leading face and the usual signs elsewhere.
pub fn build_deformed<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    zeta: &IntegerCocycle,
) -> Result<DeformedComplex<F>> {
    zeta.validate(k)?;
    let dim = k.dim();
    let mut d = Vec::with_capacity(dim + 1);
    for q in 0..=dim {
        let nrows = k.count(q + 1);
        let ncols = k.count(q);
        let mut triplets: Vec<(u32, u32, LocalElem<F>)> = Vec::new();
        for (r, tau) in k.simplices_of_dim(q + 1).iter().enumerate() {
            for i in 0..tau.len() {
                let mut face = tau.clone();
                face.remove(i);
                let c = k.simplex_index(&face).expect("face closure");
                let value = if i == 0 {
                    let e = k.simplex_index(&[tau[0], tau[1]]).expect("leading edge");
                    LocalElem::unit_pow(field, zeta.value(e))
                } else if i % 2 == 0 {
                    LocalElem::from_i64(field, 1)
                } else {
                    LocalElem::from_i64(field, -1)
                };
                triplets.push((r as u32, c, value));
            }
        }
        d.push(MatR::from_triplets(nrows, ncols, triplets));
    }
    Ok(DeformedComplex {
        field: field.clone(),
        complex: k.clone(),
        zeta: zeta.clone(),
        poly_d: (0..=dim).map(|_| OnceCell::new()).collect(),
        divisors: (0..=dim).map(|_| OnceCell::new()).collect(),
        survivors: (0..=dim).map(|_| OnceCell::new()).collect(),
        basis: OnceCell::new(),
        d,
    })
}

impl<F: Field> DeformedComplex<F> {
    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    pub fn differential(&self, q: usize) -> &MatR<F> {
        &self.d[q]
    }

    /// The ordinary cohomology basis of the underlying complex.
    pub fn basis(&self) -> &CohomologyBasis<F> {
        self.basis.get_or_init(|| cohomology_basis(&self.field, &self.complex))
    }

    fn poly_d(&self, q: usize) -> &PolyMat<F> {
        self.poly_d[q].get_or_init(|| self.d[q].to_poly_mat(&self.field))
    }

    /// Elementary divisor exponents of D_q over the valuation ring.
    pub fn divisor_exponents(&self, q: usize) -> &[u32] {
        self.divisors[q].get_or_init(|| self.poly_d(q).dvr_divisors(&self.field))
    }

    fn rank_from_divisors(&self, q: usize) -> usize {
        if q > self.dim() {
            return 0;
        }
        self.divisor_exponents(q).len()
    }

    /// Novikov–Betti numbers by fraction-free rank over k(s). This is the
    /// oracle route, independent of the divisor computation.
    pub fn novikov_betti_oracle(&self) -> Vec<usize> {
        let dim = self.dim();
        let ranks: Vec<usize> = (0..=dim)
            .map(|q| self.poly_d(q).rank_fraction_free(&self.field))
            .collect();
        (0..=dim)
            .map(|q| {
                let below = if q == 0 { 0 } else { ranks[q - 1] };
                self.complex.count(q) - ranks[q] - below
            })
            .collect()
    }

    /// Stabilization page: one past the largest divisor exponent, or 0
    /// when no differential has any divisor at all.
    pub fn r_stab(&self) -> usize {
        let mut max_e: Option<u32> = None;
        for q in 0..=self.dim() {
            for e in self.divisor_exponents(q) {
                max_e = Some(max_e.map_or(*e, |m: u32| m.max(*e)));
            }
        }
        match max_e {
            Some(e) => 1 + e as usize,
            None => 0,
        }
    }

    /// All pages, ranks and limits from the divisor exponents.
    pub fn spectral_pages(&self) -> SpectralReport {
        let dim = self.dim();
        let ed: Vec<&[u32]> = (0..=dim).map(|q| self.divisor_exponents(q)).collect();
        let count_ge = |q: usize, r: u32| -> usize {
            if q > dim {
                return 0;
            }
            ed[q].iter().filter(|e| **e >= r).count()
        };
        let count_eq = |q: usize, r: u32| -> usize {
            if q > dim {
                return 0;
            }
            ed[q].iter().filter(|e| **e == r).count()
        };
        let b: Vec<usize> = (0..=dim)
            .map(|q| {
                let below = if q == 0 { 0 } else { self.rank_from_divisors(q - 1) };
                self.complex.count(q) - self.rank_from_divisors(q) - below
            })
            .collect();
        let r_stab = self.r_stab();
        let mut pages = Vec::new();
        for r in 1..=r_stab.max(1) {
            let r32 = r as u32;
            let dims: Vec<usize> = (0..=dim)
                .map(|q| {
                    let from_below = if q == 0 { 0 } else { count_ge(q - 1, r32) };
                    b[q] + from_below + count_ge(q, r32)
                })
                .collect();
            let d_ranks: Vec<usize> = (0..=dim).map(|q| count_eq(q, r32)).collect();
            pages.push(PageReport { r, dims, d_ranks });
        }
        SpectralReport {
            chi: self.complex.euler_characteristic(),
            betti: pages[0].dims.clone(),
            novikov_betti: b,
            r_stab,
            pages,
        }
    }

    /// Rank of d_1 out of degree q, from the divisor route. The cohomology
    /// module computes the same number as the rank of cup-by-zeta.
    pub fn d1_rank(&self, q: usize) -> usize {
        self.divisor_exponents(q).iter().filter(|e| **e == 1).count()
    }

    /// The survivor space in degree q: classes at s = 0 of exact kernel
    /// elements of D_q.
    pub fn survivor_space(&self, q: usize) -> &SurvivorSpace<F> {
        self.survivors[q].get_or_init(|| {
            let field = &self.field;
            let kernel = self.poly_d(q).kernel_saturated(field);
            let basis = self.basis();
            let mut membership = Reducer::new(field);
            let mut basis_classes = Vec::new();
            for v in &kernel {
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
                let cochain = Cochain::from_sparse_vec(q, ev);
                let class = basis
                    .class_of(&self.complex, &cochain)
                    .expect("kernel evaluations are cocycles");
                match membership.insert(sv_from_dense(field, &class.coords)) {
                    Inserted::Independent => basis_classes.push(class),
                    Inserted::Dependent => {}
                }
            }
            SurvivorSpace {
                degree: q,
                kernel_vecs: kernel,
                membership,
                basis_classes,
                field: field.clone(),
            }
        })
    }

    /// Membership test with certificate. `None` when the class does not
    /// survive. The zero class always survives with the zero lift.
    pub fn is_survivor(&self, class: &CohomologyClass<F>) -> Result<Option<SurvivorCertificate<F>>> {
        let q = class.degree;
        if q > self.dim() {
            return Err(Error::DegreeOutOfRange { got: q, dim: self.dim() });
        }
        if class.coords.len() != self.basis().dim(q) {
            return Err(Error::DegreeMismatch {
                expected: self.basis().dim(q),
                got: class.coords.len(),
            });
        }
        let field = &self.field;
        let ss = self.survivor_space(q);
        let Some(coeffs) = ss.membership.solve(sv_from_dense(field, &class.coords)) else {
            return Ok(None);
        };
        // exact kernel element with the right class at s = 0
        let mut w: Vec<(u32, Poly<F>)> = Vec::new();
        for (g, coef) in &coeffs {
            let scaled: SparseVec<Poly<F>> = ss.kernel_vecs[*g as usize]
                .iter()
                .map(|(i, p)| (*i, field.pscale(p, coef)))
                .collect();
            w = merge_add_poly(field, &w, &scaled);
        }
        let t = self.r_stab();
        let mut lift = Vec::with_capacity(t + 1);
        for j in 0..=t {
            let mut cj = Cochain::zero(q);
            for (i, p) in &w {
                if let Some(c) = p.get(j) {
                    cj.set(field, *i, c.clone());
                }
            }
            lift.push(cj);
        }
        let strict = w.iter().all(|(_, p)| p.len() <= 1) && {
            let x = self.cochain_to_ring_vector(&lift[0]);
            self.d[q].apply(field, &x).iter().all(|e| e.is_zero())
        };
        Ok(Some(SurvivorCertificate { class: class.clone(), lift, strict }))
    }

    fn cochain_to_ring_vector(&self, c: &Cochain<F>) -> Vec<LocalElem<F>> {
        let n = self.complex.count(c.degree);
        let mut x = vec![LocalElem::zero(); n];
        for (i, v) in &c.values {
            x[*i as usize] = LocalElem::from_const(&self.field, v.clone());
        }
        x
    }

    /// The combinatorial sufficient criterion: D(s) c = 0 identically in
    /// s, i.e. the cochain's support never meets the twisted region.
    pub fn strict_survivor_check(&self, c: &Cochain<F>) -> Result<bool> {
        let q = c.degree;
        if q > self.dim() {
            return Err(Error::DegreeOutOfRange { got: q, dim: self.dim() });
        }
        let dc = self.basis().coboundary_of(c);
        if let Some((idx, _)) = dc.values.iter().next() {
            let tuple = self.complex.simplex_tuple(q + 1, *idx);
            return Err(Error::InputNotCocycle { simplex: self.complex.labels_of(tuple) });
        }
        let x = self.cochain_to_ring_vector(c);
        Ok(self.d[q].apply(&self.field, &x).iter().all(|e| e.is_zero()))
    }

    /// Re-multiply a certificate lift through D(s): the result must vanish
    /// modulo s^{T+1}.
    pub fn check_certificate(&self, cert: &SurvivorCertificate<F>) -> bool {
        let field = &self.field;
        let q = cert.class.degree;
        if cert.lift.is_empty() {
            return false;
        }
        let order = cert.lift.len(); // T + 1
        if order < self.r_stab().max(1) {
            return false;
        }
        // class check: v_0 must represent the certified class
        let Ok(class0) = self.basis().class_of(&self.complex, &cert.lift[0]) else {
            return false;
        };
        if class0 != cert.class {
            return false;
        }
        // assemble the coordinate polynomials of the lift
        let n = self.complex.count(q);
        let mut coords: Vec<Poly<F>> = vec![field.pzero(); n];
        for (j, cj) in cert.lift.iter().enumerate() {
            for (i, v) in &cj.values {
                let p = &mut coords[*i as usize];
                while p.len() <= j {
                    p.push(field.zero());
                }
                p[j] = v.clone();
            }
        }
        for row in &self.d[q].rows {
            let mut acc = field.pzero();
            for (c, entry) in row {
                let series = entry.series(field, order);
                let term = field.pmul_trunc(&series, &coords[*c as usize], order);
                acc = field.padd(&acc, &term);
            }
            acc = field.ptruncate(&acc, order);
            if !acc.is_empty() {
                return false;
            }
        }
        true
    }
}

fn merge_add_poly<F: Field>(
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

/// Exactness of the deformed complex: D_{q+1} D_q = 0 for all q.
pub fn check_d_squared_zero<F: Field>(dc: &DeformedComplex<F>) -> bool {
    for q in 0..dc.dim() {
        let prod = dc.differential(q + 1).mul(&dc.field, dc.differential(q));
        if !prod.is_zero() {
            return false;
        }
    }
    true
}

/// Setting s = 0 recovers the ordinary coboundary matrices.
pub fn check_specialization<F: Field>(dc: &DeformedComplex<F>) -> bool {
    let field = &dc.field;
    for q in 0..=dc.dim() {
        let specialized = dc.differential(q).eval0(field);
        let ordinary = crate::cohomology::twisted_coboundary(
            field,
            &dc.complex,
            &crate::cohomology::LineBundle::trivial(),
            q,
        );
        if specialized.cols.len() != ordinary.cols.len() {
            return false;
        }
        for (a, b) in specialized.cols.iter().zip(&ordinary.cols) {
            if a != b {
                return false;
            }
        }
    }
    true
}

/// Check that a saturated kernel vector annihilates exactly; used by the
/// property suites.
pub fn kernel_vector_is_exact<F: Field>(
    field: &F,
    m: &PolyMat<F>,
    v: &SparseVec<Poly<F>>,
) -> bool {
    poly_mat_apply(field, &m.rows, v).iter().all(|p| p.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn circle() -> SimplicialComplex {
        SimplicialComplex::parse("simplex a b\nsimplex b c\nsimplex a c\n").unwrap()
    }

    fn torus9() -> SimplicialComplex {
        let mut out = String::from("vertexorder 0 1 2 3 4 5 6 7 8\n");
        let v = |i: u32, j: u32| (3 * (i % 3) + (j % 3)).to_string();
        for i in 0..3 {
            for j in 0..3 {
                out.push_str(&format!(
                    "simplex {} {} {}\n",
                    v(i, j),
                    v(i, j + 1),
                    v(i + 1, j + 1)
                ));
                out.push_str(&format!(
                    "simplex {} {} {}\n",
                    v(i, j),
                    v(i + 1, j),
                    v(i + 1, j + 1)
                ));
            }
        }
        SimplicialComplex::parse(&out).unwrap()
    }

    fn torus_a(k: &SimplicialComplex) -> IntegerCocycle {
        IntegerCocycle::parse(
            k,
            "edge 0 2 -1\nedge 3 5 -1\nedge 6 8 -1\nedge 2 3 1\nedge 5 6 1\nedge 0 8 -1\n",
        )
        .unwrap()
    }

    #[test]
    fn zero_twist_gives_constant_matrices() {
        let q = Rationals;
        let k = circle();
        let dc = build_deformed(&q, &k, &IntegerCocycle::zero()).unwrap();
        for row in &dc.differential(0).rows {
            for (_, e) in row {
                assert_eq!(e.den_pow, 0);
                assert!(e.num.len() <= 1);
            }
        }
        assert!(check_specialization(&dc));
        let report = dc.spectral_pages();
        assert_eq!(report.betti, vec![1, 1]);
        assert_eq!(report.novikov_betti, vec![1, 1]);
    }

    #[test]
    fn circle_with_unit_twist() {
        let q = Rationals;
        let k = circle();
        // zeta = 1 on edge (b, c)
        let zeta = IntegerCocycle::parse(&k, "edge b c 1\n").unwrap();
        let dc = build_deformed(&q, &k, &zeta).unwrap();
        // one entry of the degree-0 matrix is 1+s, the rest are +-1
        let mut unit_entries = 0;
        for row in &dc.differential(0).rows {
            for (_, e) in row {
                if e.num.len() == 2 {
                    unit_entries += 1;
                }
            }
        }
        assert_eq!(unit_entries, 1);
        // Novikov-Betti numbers vanish for the generator class
        assert_eq!(dc.novikov_betti_oracle(), vec![0, 0]);
        let report = dc.spectral_pages();
        assert_eq!(report.novikov_betti, vec![0, 0]);
        assert_eq!(report.betti, vec![1, 1]);
        // rank of D_0 over k(s) is full
        assert_eq!(dc.divisor_exponents(0).len(), 3);
    }

    #[test]
    fn torus_with_factor_dual_collapses_at_page_two() {
        let f = PrimeField::new(2).unwrap();
        let k = torus9();
        let zeta = torus_a(&k);
        let dc = build_deformed(&f, &k, &zeta).unwrap();
        assert!(check_d_squared_zero(&dc));
        assert!(check_specialization(&dc));
        let report = dc.spectral_pages();
        assert_eq!(report.betti, vec![1, 2, 1]);
        assert_eq!(report.novikov_betti, vec![0, 0, 0]);
        assert_eq!(report.r_stab, 2);
        // page 1 differentials have ranks (1, 1, 0)
        assert_eq!(report.pages[0].d_ranks, vec![1, 1, 0]);
        // page 2 is already zero
        assert_eq!(report.pages[1].dims, vec![0, 0, 0]);
        // oracle route agrees
        assert_eq!(dc.novikov_betti_oracle(), vec![0, 0, 0]);
    }

    #[test]
    fn torus_survivors_in_degree_one_are_spanned_by_zeta() {
        let q = Rationals;
        let k = torus9();
        let zeta = torus_a(&k);
        let dc = build_deformed(&q, &k, &zeta).unwrap();
        let ss = dc.survivor_space(1);
        assert_eq!(ss.dim(), 1);
        let zclass = dc
            .basis()
            .class_of(&k, &zeta.to_cochain(&q))
            .unwrap();
        assert!(ss.contains(&zclass));
        // degree 0: the constant class does not survive
        assert_eq!(dc.survivor_space(0).dim(), 0);
    }

    #[test]
    fn torus_survivor_certificates() {
        let q = Rationals;
        let k = torus9();
        let zeta = torus_a(&k);
        let dc = build_deformed(&q, &k, &zeta).unwrap();
        let basis = dc.basis();
        let a_class = basis.class_of(&k, &zeta.to_cochain(&q)).unwrap();
        let cert = dc.is_survivor(&a_class).unwrap().expect("zeta survives");
        assert!(dc.check_certificate(&cert));

        // the complementary generator b does not survive (b cup a != 0)
        let b = IntegerCocycle::parse(
            &k,
            "edge 0 6 -1\nedge 1 7 -1\nedge 2 8 -1\nedge 1 6 -1\nedge 2 7 -1\nedge 0 8 -1\n",
        )
        .unwrap();
        let b_class = basis.class_of(&k, &b.to_cochain(&q)).unwrap();
        assert!(dc.is_survivor(&b_class).unwrap().is_none());

        // the zero class gets the zero lift
        let zero = CohomologyClass { degree: 1, coords: vec![q.zero(), q.zero()] };
        let cert = dc.is_survivor(&zero).unwrap().expect("zero class survives");
        assert!(cert.lift.iter().all(|c| c.is_zero()));
        assert!(dc.check_certificate(&cert));
    }

    #[test]
    fn strict_check_on_the_torus() {
        let q = Rationals;
        let k = torus9();
        let zeta = torus_a(&k);
        let dc = build_deformed(&q, &k, &zeta).unwrap();
        // with zeta = 0 every cocycle is strict
        let dc0 = build_deformed(&q, &k, &IntegerCocycle::zero()).unwrap();
        let a = torus_a(&k).to_cochain(&q);
        assert!(dc0.strict_survivor_check(&a).unwrap());
        // b against zeta = a is not strict (nonzero first-order term)
        let b = IntegerCocycle::parse(
            &k,
            "edge 0 6 -1\nedge 1 7 -1\nedge 2 8 -1\nedge 1 6 -1\nedge 2 7 -1\nedge 0 8 -1\n",
        )
        .unwrap();
        assert!(!dc.strict_survivor_check(&b.to_cochain(&q)).unwrap());
        // non-cocycles are rejected
        let mut junk = Cochain::zero(1);
        junk.set(&q, 0, q.one());
        assert!(dc.strict_survivor_check(&junk).is_err());
    }

    #[test]
    fn d1_rank_matches_cup_by_zeta() {
        let f = PrimeField::new(3).unwrap();
        let k = torus9();
        let zeta = torus_a(&k);
        let dc = build_deformed(&f, &k, &zeta).unwrap();
        let basis = dc.basis();
        let zf = zeta.to_cochain(&f);
        for q in 0..=k.dim() {
            let cup_rank =
                crate::cohomology::cup_by_class_rank(&f, &k, basis, &zf, q);
            assert_eq!(dc.d1_rank(q), cup_rank, "degree {q}");
        }
    }

    #[test]
    fn zero_twist_spectral_sequence_is_constant() {
        let q = Rationals;
        let k = torus9();
        let dc = build_deformed(&q, &k, &IntegerCocycle::zero()).unwrap();
        let report = dc.spectral_pages();
        assert_eq!(report.betti, report.novikov_betti);
        for page in &report.pages {
            assert_eq!(page.dims, report.betti);
            assert!(page.d_ranks.iter().all(|r| *r == 0));
        }
        // every class survives
        for qdeg in 0..=k.dim() {
            assert_eq!(dc.survivor_space(qdeg).dim(), dc.basis().dim(qdeg));
        }
    }

    #[test]
    fn euler_characteristic_invariance_of_pages() {
        let f = PrimeField::new(5).unwrap();
        let k = torus9();
        let zeta = torus_a(&k);
        let dc = build_deformed(&f, &k, &zeta).unwrap();
        let report = dc.spectral_pages();
        for page in &report.pages {
            let chi: i64 = page
                .dims
                .iter()
                .enumerate()
                .map(|(q, n)| if q % 2 == 0 { *n as i64 } else { -(*n as i64) })
                .sum();
            assert_eq!(chi, report.chi);
        }
    }
}
