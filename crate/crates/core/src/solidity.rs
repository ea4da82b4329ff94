//! Solidity of lines: a line is solid when every primitive idempotent in it
//! is an axis of Jordan type 1/2 of the whole algebra.
//!
//! [`derivation_test`] is the verdict; the polynomial, enumeration and
//! sampling tests are independent corroborating oracles, and any
//! disagreement between them is reported as an error.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{certify_axis, Algebra, CertifiedAlgebra, FrobeniusForm};
use crate::error::{LineError, SolidityError};
use crate::linalg::{eigen_kernel, lincomb, Coordinates, Matrix};
use crate::lines::{
    classify_line, line_model, AnyLineModel, LineKind, LineModel, LineRecord, RootChoice, Side,
};
use crate::scalars::{DualNumbers, Extends, Field, Poly, QuadExt, Ring, VecPoly};

/// Largest prime for which the enumeration oracle runs.
pub const MAX_ENUMERATION_PRIME: u64 = 13;

/// `D_{a,b} = ad(a) ad(b) - ad(b) ad(a)`, i.e. `x -> a(bx) - b(ax)`.
pub fn associator_map<R: Ring>(alg: &Algebra<R>, a: &[R::Elem], b: &[R::Elem]) -> Matrix<R::Elem> {
    let r = alg.ring();
    let (la, lb) = (alg.ad(a), alg.ad(b));
    la.mul(r, &lb).sub(r, &lb.mul(r, &la))
}

/// First basis pair `i <= j` violating `D(e_i e_j) = D(e_i) e_j + e_i D(e_j)`.
pub fn leibniz_violation<R: Ring>(alg: &Algebra<R>, d: &Matrix<R::Elem>) -> Option<(usize, usize)> {
    let r = alg.ring();
    let n = alg.dim();
    let images: Vec<Vec<R::Elem>> = (0..n).map(|j| d.column(j)).collect();
    for i in 0..n {
        let ei = alg.basis_vector(i);
        for j in i..n {
            let ej = alg.basis_vector(j);
            let lhs = d.mul_vec(r, &alg.product(i, j));
            let rhs = lincomb(
                r,
                n,
                &[
                    (r.one(), &alg.mul(&images[i], &ej)),
                    (r.one(), &alg.mul(&ei, &images[j])),
                ],
            );
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_derivation<R: Ring>(alg: &Algebra<R>, d: &Matrix<R::Elem>) -> bool {
    leibniz_violation(alg, d).is_none()
}

/// Whether `x -> x + eps D(x)` is an automorphism of the algebra over the dual numbers.
pub fn dual_number_check<R: Ring>(alg: &Algebra<R>, d: &Matrix<R::Elem>) -> bool {
    let r = alg.ring();
    let dual = DualNumbers::new(r.clone());
    let lifted = alg.lift(&dual);
    let n = alg.dim();
    let phi = Matrix::from_fn(n, n, |i, j| {
        let real = if i == j { r.one() } else { r.zero() };
        dual.make(real, d.get(i, j).clone())
    });
    is_automorphism(&lifted, &phi)
}

/// Whether the matrix `phi` (columns are images of basis vectors) is multiplicative.
pub fn is_automorphism<R: Ring>(alg: &Algebra<R>, phi: &Matrix<R::Elem>) -> bool {
    let r = alg.ring();
    let n = alg.dim();
    let images: Vec<Vec<R::Elem>> = (0..n).map(|j| phi.column(j)).collect();
    (0..n).all(|i| {
        (i..n).all(|j| phi.mul_vec(r, &alg.product(i, j)) == alg.mul(&images[i], &images[j]))
    })
}

/// Whether `x -> x + 4(c, x)c - 4cx` is an automorphism.
pub fn phi_c_is_automorphism<R: Ring>(
    alg: &Algebra<R>,
    form: &FrobeniusForm<R::Elem>,
    c: &[R::Elem],
) -> bool {
    let r = alg.ring();
    let n = alg.dim();
    let four = r.from_i64(4);
    let adc = alg.ad(c);
    let cols: Vec<Vec<R::Elem>> = (0..n)
        .map(|j| {
            let x = alg.basis_vector(j);
            let p = r.mul(&four, &form.pair(r, c, &x));
            lincomb(
                r,
                n,
                &[(r.one(), &x), (p, c), (r.neg(&four), &adc.column(j))],
            )
        })
        .collect();
    is_automorphism(alg, &Matrix::from_columns(n, &cols))
}

fn require_half<F: Field>(cert: &CertifiedAlgebra<F>) -> Result<(), LineError> {
    if cert.eta_is_half() {
        Ok(())
    } else {
        Err(LineError::NotApplicable(
            "solidity criteria need eta = 1/2".into(),
        ))
    }
}

/// Solidity via the associator: `<<a, b>>` is solid iff `D_{a,b}` is a derivation.
/// Returns the verdict and the first violating basis pair.
pub fn derivation_test<F: Field>(
    cert: &CertifiedAlgebra<F>,
    line: &LineRecord<F::Elem>,
) -> Result<(bool, Option<(usize, usize)>), LineError> {
    require_half(cert)?;
    let d = associator_map(&cert.algebra, &line.a, &line.b);
    let w = leibniz_violation(&cert.algebra, &d);
    Ok((w.is_none(), w))
}

fn poly_mul_vec<R: Ring>(
    alg: &Algebra<R>,
    p: &VecPoly<R::Elem>,
    x: &[R::Elem],
) -> VecPoly<R::Elem> {
    let coeffs = p.coeffs().iter().map(|c| alg.mul(c, x)).collect();
    VecPoly::new(alg.ring(), alg.dim(), coeffs)
}

fn poly_mul<R: Ring>(
    alg: &Algebra<R>,
    p: &VecPoly<R::Elem>,
    q: &VecPoly<R::Elem>,
) -> VecPoly<R::Elem> {
    let r = alg.ring();
    let n = alg.dim();
    if p.is_zero() || q.is_zero() {
        return VecPoly::zero(n);
    }
    let mut out = vec![vec![r.zero(); n]; p.coeffs().len() + q.coeffs().len() - 1];
    for (i, u) in p.coeffs().iter().enumerate() {
        for (j, v) in q.coeffs().iter().enumerate() {
            let uv = alg.mul(u, v);
            for (o, x) in out[i + j].iter_mut().zip(&uv) {
                r.add_assign(o, x);
            }
        }
    }
    VecPoly::new(r, n, out)
}

fn poly_pair<R: Ring>(
    r: &R,
    form: &FrobeniusForm<R::Elem>,
    p: &VecPoly<R::Elem>,
    x: &[R::Elem],
) -> Poly<R::Elem> {
    Poly::new(r, p.coeffs().iter().map(|c| form.pair(r, c, x)).collect())
}

/// Which identity a polynomial witness comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Identity {
    P,
    Q,
}

/// The cleared-denominator polynomials `(lambda^2w Q_x, lambda^2w P_{x,y})` for
/// the family on `side`, where `c = C(lambda) / lambda^w`:
///
/// `Q_x(c) = c(cx) - 1/2 (cx + (c,x)c)` and
/// `P_{x,y}(c) = 4(cx)(cy) - (c,y)cx - (cy)x - (c,x)cy - (cx)y - (c,xy)c + c(xy)`.
pub fn solidity_polynomials<X: Field>(
    model: &LineModel<X>,
    side: Side,
    x: usize,
    y: usize,
) -> Result<(VecPoly<X::Elem>, VecPoly<X::Elem>), LineError> {
    let fam = model
        .family(side)
        .ok_or_else(|| LineError::NotApplicable(model.kind.to_string()))?;
    let ctx = PolyContext::new(model, &fam.poly, fam.weight as usize);
    Ok((ctx.q(x), ctx.p(x, y)))
}

struct PolyContext<'a, X: Field> {
    model: &'a LineModel<X>,
    c: &'a VecPoly<X::Elem>,
    w: usize,
    cx: Vec<VecPoly<X::Elem>>,
    pairs: Vec<Poly<X::Elem>>,
}

impl<'a, X: Field> PolyContext<'a, X> {
    fn new(model: &'a LineModel<X>, c: &'a VecPoly<X::Elem>, w: usize) -> Self {
        let alg = &model.algebra;
        let r = alg.ring();
        let n = alg.dim();
        let cx = (0..n)
            .map(|x| poly_mul_vec(alg, c, &alg.basis_vector(x)))
            .collect();
        let pairs = (0..n)
            .map(|x| poly_pair(r, &model.form, c, &alg.basis_vector(x)))
            .collect();
        Self {
            model,
            c,
            w,
            cx,
            pairs,
        }
    }

    fn q(&self, x: usize) -> VecPoly<X::Elem> {
        let alg = &self.model.algebra;
        let r = alg.ring();
        let h = r.half();
        let c_cx = poly_mul(alg, self.c, &self.cx[x]);
        let t2 = self.cx[x].shift(r, self.w).scale(r, &h);
        let t3 = self.c.scale_poly(r, &self.pairs[x]).scale(r, &h);
        c_cx.sub(r, &t2).sub(r, &t3)
    }

    fn p(&self, x: usize, y: usize) -> VecPoly<X::Elem> {
        let alg = &self.model.algebra;
        let r = alg.ring();
        let (ex, ey) = (alg.basis_vector(x), alg.basis_vector(y));
        let xy = alg.product(x, y);
        let w = self.w;
        let four = r.from_i64(4);
        let mut acc = poly_mul(alg, &self.cx[x], &self.cx[y]).scale(r, &four);
        acc = acc.sub(r, &self.cx[x].scale_poly(r, &self.pairs[y]));
        acc = acc.sub(r, &poly_mul_vec(alg, &self.cx[y], &ex).shift(r, w));
        acc = acc.sub(r, &self.cx[y].scale_poly(r, &self.pairs[x]));
        acc = acc.sub(r, &poly_mul_vec(alg, &self.cx[x], &ey).shift(r, w));
        acc = acc.sub(
            r,
            &self
                .c
                .scale_poly(r, &poly_pair(r, &self.model.form, self.c, &xy)),
        );
        acc.add(r, &poly_mul_vec(alg, self.c, &xy).shift(r, w))
    }
}

/// First nonvanishing solidity polynomial of a line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolynomialWitness {
    pub side: Side,
    pub identity: Identity,
    pub x: usize,
    pub y: usize,
    pub degree: usize,
}

/// Whether all `P` and `Q` polynomials vanish identically, over every family
/// of the line. Only 3-dimensional lines are eligible.
pub fn polynomial_test<X: Field>(
    model: &LineModel<X>,
) -> Result<Result<(), PolynomialWitness>, LineError> {
    if !matches!(
        model.kind,
        LineKind::Toric | LineKind::Flat3 | LineKind::Baric3
    ) {
        return Err(LineError::NotApplicable(format!(
            "no polynomial test for {} lines",
            model.kind
        )));
    }
    let n = model.algebra.dim();
    for fam in &model.families {
        let ctx = PolyContext::new(model, &fam.poly, fam.weight as usize);
        for x in 0..n {
            let q = ctx.q(x);
            if let Some(d) = q.degree() {
                return Ok(Err(PolynomialWitness {
                    side: fam.side,
                    identity: Identity::Q,
                    x,
                    y: x,
                    degree: d,
                }));
            }
            for y in x..n {
                if let Some(d) = ctx.p(x, y).degree() {
                    return Ok(Err(PolynomialWitness {
                        side: fam.side,
                        identity: Identity::P,
                        x,
                        y,
                        degree: d,
                    }));
                }
            }
        }
    }
    Ok(Ok(()))
}

/// A primitive idempotent of the line that is not an axis of the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentWitness {
    pub element: Vec<String>,
    pub failure: String,
    pub phi_automorphism: bool,
}

/// Result of enumerating all idempotents of a line over a finite field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    /// The field enumerated over (the base field or its quadratic extension).
    pub field: String,
    pub primitive: usize,
    pub failures: Vec<IdempotentWitness>,
}

impl Enumeration {
    pub fn solid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All primitive idempotents of the subalgebra spanned by `span`, as ambient vectors.
pub fn line_idempotents<X: Field>(
    alg: &Algebra<X>,
    span: &[Vec<X::Elem>],
) -> Result<Vec<Vec<X::Elem>>, LineError> {
    let x = alg.ring();
    let elems = x
        .elements()
        .ok_or_else(|| LineError::NotApplicable("enumeration needs a finite field".into()))?;
    let (local, coords) = alg.subalgebra(span.to_vec())?;
    let k = local.dim();
    let q = elems.len();
    let total = q
        .checked_pow(k as u32)
        .ok_or_else(|| LineError::NotApplicable("line too large to enumerate".into()))?;
    let mut found: Vec<Vec<X::Elem>> = (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut c = Vec::with_capacity(k);
            for _ in 0..k {
                c.push(elems[idx % q].clone());
                idx /= q;
            }
            if local.square(&c) != c || eigen_kernel(x, &local.ad(&c), &x.one()).len() != 1 {
                return None;
            }
            Some(c)
        })
        .collect();
    found.sort_by_key(|c| format!("{c:?}"));
    Ok(found.iter().map(|c| coords.combine(x, c)).collect())
}

fn enumerate_in<X: Field>(
    alg: &Algebra<X>,
    form: &FrobeniusForm<X::Elem>,
    span: &[Vec<X::Elem>],
    eta: &X::Elem,
) -> Result<Enumeration, LineError> {
    let x = alg.ring();
    let idems = line_idempotents(alg, span)?;
    let failures = idems
        .iter()
        .filter_map(|c| {
            certify_axis(alg, c, eta).err().map(|e| IdempotentWitness {
                element: c.iter().map(|v| x.fmt_elem(v)).collect(),
                failure: e.to_string(),
                phi_automorphism: phi_c_is_automorphism(alg, form, c),
            })
        })
        .collect();
    Ok(Enumeration {
        field: x.spec().to_string(),
        primitive: idems.len(),
        failures,
    })
}

/// Enumeration over the smallest field with enough family members to
/// decide solidity: the base field `F_p` (`p <= 13`) when the line splits
/// there with enough parameters, otherwise `F_{p^2}`.
pub fn enumeration_test<F: Field>(model: &AnyLineModel<F>) -> Result<Enumeration, LineError> {
    match model {
        AnyLineModel::Extended(m) => {
            check_enumerable(m.field().base().characteristic())?;
            enumerate_in(&m.algebra, &m.form, &m.span, &m.eta)
        }
        AnyLineModel::Base(m) => {
            let f = m.field();
            let p = f.characteristic();
            check_enumerable(p)?;
            if m.kind == LineKind::Baric1 {
                return Err(LineError::LineDimZeroOrOne(1));
            }
            let needed = match m.kind {
                LineKind::Toric => 7,
                LineKind::Baric3 => 5,
                _ => 3,
            };
            if f.order() == Some(p) && p >= needed {
                return enumerate_in(&m.algebra, &m.form, &m.span, &m.eta);
            }
            let ext = QuadExt::of_finite(f.clone())?;
            let lift = |v: &Vec<F::Elem>| Algebra::<F>::lift_vector(&ext, v);
            enumerate_in(
                &m.algebra.lift(&ext),
                &m.form.lift(f, &ext),
                &m.span.iter().map(lift).collect::<Vec<_>>(),
                &Extends::<F>::embed(&ext, &m.eta),
            )
        }
    }
}

fn check_enumerable(p: u64) -> Result<(), LineError> {
    if p == 0 || p > MAX_ENUMERATION_PRIME {
        Err(LineError::NotApplicable(format!(
            "enumeration needs F_p with p <= {MAX_ENUMERATION_PRIME}"
        )))
    } else {
        Ok(())
    }
}

/// Parameters used by [`sampling_test`].
pub const SAMPLE_PARAMETERS: [(i64, i64); 25] = [
    (0, 1),
    (1, 1),
    (-1, 1),
    (2, 1),
    (-2, 1),
    (1, 2),
    (-1, 2),
    (3, 1),
    (-3, 1),
    (1, 3),
    (-1, 3),
    (3, 2),
    (-3, 2),
    (2, 3),
    (-2, 3),
    (4, 1),
    (-4, 1),
    (1, 4),
    (-1, 4),
    (5, 1),
    (-5, 1),
    (1, 5),
    (-1, 5),
    (5, 2),
    (-5, 2),
];

/// Certifies family members at [`SAMPLE_PARAMETERS`] as ambient axes.
/// Returns `None` when the line carries no family.
pub fn sampling_test<X: Field>(model: &LineModel<X>) -> Result<Option<bool>, LineError> {
    if model.families.is_empty() {
        return Ok(None);
    }
    let x = model.field();
    let mut seen = Vec::new();
    for &(n, d) in &SAMPLE_PARAMETERS {
        let Some(lambda) = x.from_ratio(n, d) else {
            continue;
        };
        if seen.contains(&lambda) || (model.kind == LineKind::Toric && x.is_zero(&lambda)) {
            continue;
        }
        seen.push(lambda.clone());
        for fam in &model.families {
            let c = model.member(fam.side, &lambda)?;
            if certify_axis(&model.algebra, &c, &model.eta).is_err() {
                return Ok(Some(false));
            }
        }
    }
    Ok(Some(true))
}

/// Which corroborating oracles to run besides the derivation test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Methods {
    pub dual_numbers: bool,
    pub polynomial: bool,
    pub enumeration: bool,
    pub sampling: bool,
}

impl Methods {
    pub fn all() -> Self {
        Self {
            dual_numbers: true,
            polynomial: true,
            enumeration: true,
            sampling: true,
        }
    }

    pub fn derivation_only() -> Self {
        Self {
            dual_numbers: false,
            polynomial: false,
            enumeration: false,
            sampling: false,
        }
    }

    fn needs_model(&self) -> bool {
        self.polynomial || self.enumeration || self.sampling
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Leibniz { i: usize, j: usize },
    Polynomial(PolynomialWitness),
    Idempotent(IdempotentWitness),
}

/// Verdicts of all methods run on one line. `None` means not applicable or not run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolidityVerdict {
    pub solid: bool,
    pub by_derivation: bool,
    pub by_dual_numbers: Option<bool>,
    pub by_polynomial: Option<bool>,
    pub by_enumeration: Option<bool>,
    pub by_sampling: Option<bool>,
    pub enumeration_field: Option<String>,
    pub primitive_idempotents: Option<usize>,
    pub witnesses: Vec<Witness>,
}

/// The solidity analysis of the line through axes `i` and `j`.
#[derive(Debug, Clone)]
pub struct PairSolidity<E> {
    pub i: usize,
    pub j: usize,
    pub line: LineRecord<E>,
    pub mu: Option<String>,
    pub verdict: SolidityVerdict,
}

/// Runs the derivation test and the requested oracles on `<<a_i, a_j>>`;
/// any disagreement is an error.
pub fn analyze_pair<F: Field>(
    cert: &CertifiedAlgebra<F>,
    i: usize,
    j: usize,
    methods: Methods,
) -> Result<PairSolidity<F::Elem>, SolidityError> {
    let line = classify_line(cert, &cert.axes[i], &cert.axes[j])?;
    let (by_derivation, leibniz) = derivation_test(cert, &line)?;
    let mut verdict = SolidityVerdict {
        solid: by_derivation,
        by_derivation,
        by_dual_numbers: None,
        by_polynomial: None,
        by_enumeration: None,
        by_sampling: None,
        enumeration_field: None,
        primitive_idempotents: None,
        witnesses: leibniz
            .map(|(i, j)| Witness::Leibniz { i, j })
            .into_iter()
            .collect(),
    };
    if methods.dual_numbers {
        let d = associator_map(&cert.algebra, &line.a, &line.b);
        verdict.by_dual_numbers = Some(dual_number_check(&cert.algebra, &d));
    }
    let mut mu = None;
    if methods.needs_model() && line.kind != LineKind::Baric1 {
        match line_model(cert, &line, RootChoice::First) {
            Ok(model) => {
                mu = model.mu_string();
                run_model_methods(&model, methods, &mut verdict)?;
            }
            Err(LineError::ExtensionInsufficient) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let disagree: Vec<&str> = [
        ("dual numbers", verdict.by_dual_numbers),
        ("polynomial", verdict.by_polynomial),
        ("enumeration", verdict.by_enumeration),
        ("sampling", verdict.by_sampling),
    ]
    .iter()
    .filter(|(_, v)| v.is_some_and(|v| v != by_derivation))
    .map(|(name, _)| *name)
    .collect();
    if !disagree.is_empty() {
        return Err(SolidityError::MethodDisagreement {
            i,
            j,
            detail: format!(
                "derivation test says {by_derivation}, {} disagree",
                disagree.join(", ")
            ),
        });
    }
    Ok(PairSolidity {
        i,
        j,
        line,
        mu,
        verdict,
    })
}

fn run_model_methods<F: Field>(
    model: &AnyLineModel<F>,
    methods: Methods,
    verdict: &mut SolidityVerdict,
) -> Result<(), LineError> {
    if methods.polynomial {
        match crate::with_model!(model, m => polynomial_test(m)) {
            Ok(Ok(())) => verdict.by_polynomial = Some(true),
            Ok(Err(w)) => {
                verdict.by_polynomial = Some(false);
                verdict.witnesses.push(Witness::Polynomial(w));
            }
            Err(LineError::NotApplicable(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if methods.enumeration {
        match enumeration_test(model) {
            Ok(e) => {
                verdict.by_enumeration = Some(e.solid());
                verdict.enumeration_field = Some(e.field.clone());
                verdict.primitive_idempotents = Some(e.primitive);
                if let Some(w) = e.failures.into_iter().next() {
                    verdict.witnesses.push(Witness::Idempotent(w));
                }
            }
            Err(LineError::NotApplicable(_)) | Err(LineError::LineDimZeroOrOne(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if methods.sampling && verdict.by_enumeration.is_none() {
        verdict.by_sampling = crate::with_model!(model, m => sampling_test(m))?;
    }
    Ok(())
}

/// All pairs `i < j` of generating axes.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// [`analyze_pair`] over a pair list, in parallel; results keep the input order.
pub fn analyze_pairs<F: Field>(
    cert: &CertifiedAlgebra<F>,
    pairs: &[(usize, usize)],
    methods: Methods,
) -> Vec<Result<PairSolidity<F::Elem>, SolidityError>> {
    pairs
        .par_iter()
        .map(|&(i, j)| analyze_pair(cert, i, j, methods))
        .collect()
}

/// Coordinates of the line basis used by reports.
pub fn line_basis<F: Field>(
    cert: &CertifiedAlgebra<F>,
    line: &LineRecord<F::Elem>,
) -> Option<Coordinates<F::Elem>> {
    Coordinates::new(cert.field(), cert.dim(), line.basis.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tau_matrix;
    use crate::lines::{baric_algebra, flat_algebra, toric_algebra};
    use crate::matsuo::{build_matsuo, catalog_load};
    use crate::scalars::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn matsuo<F: Field>(name: &str, f: F) -> CertifiedAlgebra<F> {
        let h = f.half();
        build_matsuo(&catalog_load(name).unwrap(), f, h)
            .unwrap()
            .prepare()
            .unwrap()
    }

    #[test]
    fn zero_is_a_derivation_identity_is_not() {
        let cert = matsuo("S3", Rationals);
        let alg = &cert.algebra;
        let q = Rationals;
        assert!(is_derivation(alg, &Matrix::zeros(&q, 3, 3)));
        assert!(dual_number_check(alg, &Matrix::zeros(&q, 3, 3)));
        assert_eq!(
            leibniz_violation(alg, &Matrix::identity(&q, 3)),
            Some((0, 0))
        );
        assert!(!dual_number_check(alg, &Matrix::identity(&q, 3)));
    }

    #[test]
    fn associator_is_the_commutator_of_adjoints() {
        let cert = matsuo("S4", PrimeField::new(7).unwrap());
        let alg = &cert.algebra;
        let f = alg.ring();
        let (a, b) = (&cert.axes[0].element, &cert.axes[3].element);
        let d = associator_map(alg, a, b);
        for j in 0..alg.dim() {
            let x = alg.basis_vector(j);
            let expected = crate::linalg::vsub(
                f,
                &alg.mul(a, &alg.mul(b, &x)),
                &alg.mul(b, &alg.mul(a, &x)),
            );
            assert_eq!(d.column(j), expected);
        }
    }

    #[test]
    fn standalone_lines_are_solid_by_every_method() {
        let f = PrimeField::new(5).unwrap();
        let algs = [
            flat_algebra(f.clone()).unwrap(),
            baric_algebra(f.clone(), false).unwrap(),
            toric_algebra(f.clone(), &f.from_i64(2)).unwrap(),
        ];
        for alg in algs {
            let cert = alg.prepare().unwrap();
            let p = analyze_pair(&cert, 0, 1, Methods::all()).unwrap();
            assert!(p.verdict.solid);
            assert_eq!(p.verdict.by_polynomial, Some(true));
            assert_eq!(p.verdict.by_enumeration, Some(true));
        }
    }

    #[test]
    fn rational_toric_line_samples_solid() {
        let q = Rationals;
        let cert = toric_algebra(q, &q.from_i64(3)).unwrap().prepare().unwrap();
        let p = analyze_pair(&cert, 0, 1, Methods::all()).unwrap();
        assert!(p.verdict.solid);
        assert_eq!(p.verdict.by_enumeration, None);
        assert_eq!(p.verdict.by_sampling, Some(true));
    }

    #[test]
    fn non_solid_baric_line_in_characteristic_three() {
        let cert = matsuo("W(D4)", PrimeField::new(3).unwrap());
        let pairs = all_pairs(cert.axes.len());
        let found = analyze_pairs(&cert, &pairs, Methods::all())
            .into_iter()
            .map(Result::unwrap)
            .find(|p| !p.verdict.solid)
            .expect("a non-solid line");
        assert_eq!(found.line.kind, LineKind::Baric3);
        assert_eq!(found.verdict.by_enumeration, Some(false));
        assert_eq!(found.verdict.by_polynomial, Some(false));
        assert!(found
            .verdict
            .witnesses
            .iter()
            .any(|w| matches!(w, Witness::Idempotent(_))));
    }

    #[test]
    fn solidity_is_miyamoto_invariant() {
        let cert = matsuo("W(D4)", PrimeField::new(3).unwrap());
        let alg = &cert.algebra;
        let f = alg.ring();
        let n = cert.axes.len();
        let verdict = |x: &[_], y: &[_]| is_derivation(alg, &associator_map(alg, x, y));
        for g in &cert.axes {
            let tau = tau_matrix(alg, g);
            for (i, j) in all_pairs(n) {
                let (x, y) = (&cert.axes[i].element, &cert.axes[j].element);
                assert_eq!(
                    verdict(x, y),
                    verdict(&tau.mul_vec(f, x), &tau.mul_vec(f, y))
                );
            }
        }
    }

    #[test]
    fn phi_of_an_axis_is_an_automorphism() {
        let cert = matsuo("S4", PrimeField::new(7).unwrap());
        for a in &cert.axes {
            assert!(phi_c_is_automorphism(&cert.algebra, &cert.form, &a.element));
        }
    }

    #[test]
    fn polynomial_test_skips_two_dimensional_lines() {
        let cert = matsuo("S4", Rationals);
        let flat2 = (0..6)
            .find_map(|j| {
                let l = classify_line(&cert, &cert.axes[0], &cert.axes[j]).ok()?;
                (l.kind == LineKind::Flat2).then_some(l)
            })
            .unwrap();
        let model = line_model(&cert, &flat2, RootChoice::First).unwrap();
        assert!(matches!(
            crate::with_model!(&model, m => polynomial_test(m)),
            Err(LineError::NotApplicable(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn dual_numbers_agree_with_leibniz(entries in proptest::collection::vec(0u64..5, 9), scale in 0u64..5) {
            let f = PrimeField::new(5).unwrap();
            let cert = matsuo("S3", f.clone());
            let d = Matrix::from_fn(3, 3, |i, j| f.mul(&f.from_i64(entries[3 * i + j] as i64), &f.from_i64(scale as i64)));
            prop_assert_eq!(is_derivation(&cert.algebra, &d), dual_number_check(&cert.algebra, &d));
        }
    }
}
