//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use std::path::Path;

use syzygy::algebra::{Algebra, FdModule};
use syzygy::homological::nakayama_indecomposables;
use syzygy::linalg::{Field, Mat, Poly, Scalar};
use syzygy::mf::{mf_cokernel_over, mf_indecomposables, ring_algebra, MatrixFactorization};
use syzygy::pipeline::{build_stable_category, dual_numbers_quiver, read_algebra_file};

pub fn fields() -> Vec<Field> {
    vec![Field::rationals(), Field::prime(5).unwrap(), Field::prime(7).unwrap()]
}

pub fn monomial(field: Field, n: usize) -> Poly {
    Poly::monomial(field, field.one(), n)
}

pub fn example_algebra(name: &str) -> Algebra {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name);
    read_algebra_file(&path).unwrap().source().unwrap().build().unwrap()
}

/// Catalog algebras of dimension at most 6 with modules of dimension at most 6.
pub fn small_catalog(field: Field) -> Vec<(String, Algebra, Vec<FdModule>)> {
    let mut out = Vec::new();
    let mut push = |name: String, a: Algebra, mut ms: Vec<FdModule>| {
        ms.retain(|m| m.dim() <= 6);
        out.push((name, a, ms));
    };
    let k = Algebra::ground_field(field);
    push("k".into(), k.clone(), vec![FdModule::simple(&k, 0)]);
    let kk = Algebra::product_of_fields(field, 2);
    push("k x k".into(), kk.clone(), FdModule::simples(&kk));
    let dual = Algebra::from_quiver(&dual_numbers_quiver(field)).unwrap();
    push(
        "k[t]/(t^2)".into(),
        dual.clone(),
        vec![FdModule::simple(&dual, 0), FdModule::regular(&dual)],
    );
    let lambda3 = build_stable_category(&monomial(field, 3)).unwrap().lambda;
    push(
        "lambda(x^3)".into(),
        lambda3.clone(),
        nakayama_indecomposables(&lambda3).unwrap(),
    );
    for n in 2..=5 {
        let f = monomial(field, n);
        let ring = ring_algebra(&f).unwrap();
        let mut ms: Vec<FdModule> = mf_indecomposables(&f)
            .unwrap()
            .iter()
            .map(|mf| mf_cokernel_over(mf, &ring).unwrap().module)
            .collect();
        ms.push(FdModule::regular(&ring));
        push(format!("k[x]/(x^{n})"), ring, ms);
    }
    let arrow = example_algebra("arrow.json").with_field(field);
    let mut ms = FdModule::simples(&arrow);
    ms.extend((0..2).map(|i| FdModule::indecomposable_projective(&arrow, i)));
    push("arrow".into(), arrow, ms);
    out
}

trait WithField {
    fn with_field(self, field: Field) -> Algebra;
}

impl WithField for Algebra {
    /// Rebuilds a rational algebra with integer structure constants over `field`.
    fn with_field(self, field: Field) -> Algebra {
        if field == self.field() {
            return self;
        }
        let d = self.dim();
        let conv = |x: &Scalar| field.parse(&x.to_string()).unwrap();
        let mult: Vec<Vec<Vec<Scalar>>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| self.basis_product(i, j).iter().map(conv).collect())
                    .collect()
            })
            .collect();
        let unit = self.unit().iter().map(conv).collect();
        Algebra::from_structure_constants(field, Some(self.labels().to_vec()), &mult, unit, None).unwrap()
    }
}

// ---- brute-force Ext -------------------------------------------------------

/// `dim Hom_A(m, n)` by solving `F A^m_j = A^n_j F` for every basis element.
pub fn hom_dim_oracle(m: &FdModule, n: &FdModule) -> usize {
    let field = m.field();
    let (p, q) = (n.dim(), m.dim());
    if p == 0 || q == 0 {
        return 0;
    }
    let mut cols = Vec::with_capacity(p * q);
    for r in 0..p {
        for c in 0..q {
            let mut f = Mat::zeros(field, p, q);
            f[(r, c)] = field.one();
            let mut col = Vec::new();
            for (am, an) in m.action().iter().zip(n.action()) {
                col.extend((&(&f * am) - &(an * &f)).entries().iter().cloned());
            }
            cols.push(col);
        }
    }
    let rows = cols[0].len();
    p * q - Mat::from_columns(field, rows, &cols).rank()
}

/// `dim Ext^1(x, n)` as cocycles modulo coboundaries: an extension is a
/// family of blocks `d_j` making `[[N_j, d_j], [0, X_j]]` a module.
pub fn ext1_oracle(x: &FdModule, n: &FdModule) -> usize {
    let a = x.algebra();
    let field = x.field();
    let d = a.dim();
    let (p, q) = (n.dim(), x.dim());
    if p == 0 || q == 0 {
        return 0;
    }
    let products: Vec<Vec<Vec<Scalar>>> = (0..d)
        .map(|i| (0..d).map(|j| a.basis_product(i, j)).collect())
        .collect();
    let unit = a.unit();
    let xs = x.action();
    let ns = n.action();
    let evaluate = |delta: &[Mat]| -> Vec<Scalar> {
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let mut m = &(&ns[j] * &delta[i]) + &(&delta[j] * &xs[i]);
                for (k, c) in products[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        m = &m - &delta[k].scale(c);
                    }
                }
                out.extend(m.entries().iter().cloned());
            }
        }
        let mut u = Mat::zeros(field, p, q);
        for (k, c) in unit.iter().enumerate() {
            if !c.is_zero() {
                u = &u + &delta[k].scale(c);
            }
        }
        out.extend(u.entries().iter().cloned());
        out
    };
    let mut cocycle_cols = Vec::with_capacity(d * p * q);
    for j in 0..d {
        for r in 0..p {
            for c in 0..q {
                let mut delta = vec![Mat::zeros(field, p, q); d];
                delta[j][(r, c)] = field.one();
                cocycle_cols.push(evaluate(&delta));
            }
        }
    }
    let rows = cocycle_cols[0].len();
    let cocycles = d * p * q - Mat::from_columns(field, rows, &cocycle_cols).rank();
    let mut boundary_cols = Vec::with_capacity(p * q);
    for r in 0..p {
        for c in 0..q {
            let mut h = Mat::zeros(field, p, q);
            h[(r, c)] = field.one();
            let mut col = Vec::new();
            for j in 0..d {
                col.extend((&(&h * &xs[j]) - &(&ns[j] * &h)).entries().iter().cloned());
            }
            boundary_cols.push(col);
        }
    }
    let boundaries = Mat::from_columns(field, d * p * q, &boundary_cols).rank();
    cocycles - boundaries
}

/// Kernel of a free cover `A^g -> m` on a greedily chosen generating set.
pub fn free_syzygy(m: &FdModule) -> FdModule {
    let a = m.algebra();
    let field = m.field();
    let d = a.dim();
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    let mut span = Mat::zeros(field, m.dim(), 0);
    for i in 0..m.dim() {
        let v = field.unit_vector(m.dim(), i);
        if span.cols() > 0 && span.spans(&Mat::column_vector(field, v.clone())) {
            continue;
        }
        let orbit: Vec<Vec<Scalar>> = m.action().iter().map(|aj| aj.mul_vec(&v)).collect();
        let mut all: Vec<Vec<Scalar>> = span.columns().collect();
        all.extend(orbit);
        span = Mat::from_columns(field, m.dim(), &all).column_basis();
        gens.push(v);
    }
    let g = gens.len();
    let images: Vec<Vec<Scalar>> = gens
        .iter()
        .flat_map(|v| m.action().iter().map(move |aj| aj.mul_vec(v)))
        .collect();
    let cover = Mat::from_columns(field, m.dim(), &images);
    let kernel = cover.kernel_basis();
    let free_action: Vec<Mat> = (0..d)
        .map(|j| {
            let right = a.right_mult(&a.basis_element(j));
            let blocks: Vec<&Mat> = std::iter::repeat_n(&right, g).collect();
            Mat::block_diag(field, &blocks)
        })
        .collect();
    if kernel.cols() == 0 {
        return FdModule::zero(a);
    }
    let coords = kernel.left_inverse();
    let action = free_action.iter().map(|x| &(&coords * x) * &kernel).collect();
    FdModule::new(a, kernel.cols(), action).unwrap()
}

/// `dim Ext^i(m, n)` by dimension shifting along free syzygies.
pub fn ext_oracle(m: &FdModule, n: &FdModule, i: usize) -> usize {
    if i == 0 {
        return hom_dim_oracle(m, n);
    }
    let mut k = m.clone();
    for _ in 1..i {
        k = free_syzygy(&k);
    }
    ext1_oracle(&k, n)
}

// ---- homotopy classes of matrix factorization maps -------------------------

fn coeff_vec(p: &Poly, len: usize) -> Vec<Scalar> {
    (0..len).map(|k| p.coeff(k)).collect()
}

/// Unknown polynomial matrix (`rows x cols`, degree at most `deg`) with one
/// coefficient set to 1.
fn unit_poly_matrix(field: Field, rows: usize, cols: usize, deg: usize, index: usize) -> Vec<Vec<Poly>> {
    let entry = index / (deg + 1);
    let power = index % (deg + 1);
    (0..rows)
        .map(|r| {
            (0..cols)
                .map(|c| {
                    if r * cols + c == entry {
                        Poly::monomial(field, field.one(), power)
                    } else {
                        Poly::zero(field)
                    }
                })
                .collect()
        })
        .collect()
}

fn pm(field: Field, rows: Vec<Vec<Poly>>) -> syzygy::mf::PolyMat {
    syzygy::mf::PolyMat::new(field, rows).unwrap()
}

fn flatten(m: &syzygy::mf::PolyMat, len: usize) -> Vec<Scalar> {
    let mut out = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.extend(coeff_vec(m.get(r, c), len));
        }
    }
    out
}

/// Maps of factorizations `x -> y` with entries of degree at most `cap`,
/// modulo null-homotopic maps, as a dimension.
pub fn homotopy_hom_oracle(x: &MatrixFactorization, y: &MatrixFactorization, cap: usize) -> usize {
    let field = x.f().field();
    let (n, m) = (x.size(), y.size());
    let deg_f = x.f().degree().unwrap();
    let wide = cap + deg_f + 1;
    let unknowns = 2 * m * n * (cap + 1);
    let half = m * n * (cap + 1);
    let split = |index: usize| -> (Vec<Vec<Poly>>, Vec<Vec<Poly>>) {
        let zero = || (0..m).map(|_| (0..n).map(|_| Poly::zero(field)).collect()).collect();
        if index < half {
            (unit_poly_matrix(field, m, n, cap, index), zero())
        } else {
            (zero(), unit_poly_matrix(field, m, n, cap, index - half))
        }
    };
    // chain maps: a phi = phi' b and b psi = psi' a
    let mut constraint_cols = Vec::with_capacity(unknowns);
    let mut embedded = Vec::with_capacity(unknowns);
    for idx in 0..unknowns {
        let (a, b) = split(idx);
        let (a, b) = (pm(field, a), pm(field, b));
        let lhs1 = a.mul(x.phi()).unwrap();
        let rhs1 = y.phi().mul(&b).unwrap();
        let lhs2 = b.mul(x.psi()).unwrap();
        let rhs2 = y.psi().mul(&a).unwrap();
        let mut col: Vec<Scalar> = flatten(&lhs1, wide)
            .into_iter()
            .zip(flatten(&rhs1, wide))
            .map(|(u, v)| &u - &v)
            .collect();
        col.extend(
            flatten(&lhs2, wide)
                .into_iter()
                .zip(flatten(&rhs2, wide))
                .map(|(u, v)| &u - &v),
        );
        constraint_cols.push(col);
        let mut e = flatten(&a, wide);
        e.extend(flatten(&b, wide));
        embedded.push(e);
    }
    let rows = constraint_cols[0].len();
    let kernel = Mat::from_columns(field, rows, &constraint_cols).kernel_basis();
    let emb = Mat::from_columns(field, embedded[0].len(), &embedded);
    let maps = &emb * &kernel;
    // homotopies s: F0 -> G1, t: F1 -> G0 give (phi' s + t psi, psi' t + s phi)
    let mut null = Vec::new();
    for idx in 0..unknowns {
        let (s, t) = split(idx);
        let (s, t) = (pm(field, s), pm(field, t));
        let a = add(&y.phi().mul(&s).unwrap(), &t.mul(x.psi()).unwrap());
        let b = add(&y.psi().mul(&t).unwrap(), &s.mul(x.phi()).unwrap());
        let mut e = flatten(&a, wide);
        e.extend(flatten(&b, wide));
        null.push(e);
    }
    let null = Mat::from_columns(field, maps.rows(), &null);
    let together = Mat::hstack(field, maps.rows(), &[&maps, &null]);
    together.rank() - null.rank()
}

fn add(a: &syzygy::mf::PolyMat, b: &syzygy::mf::PolyMat) -> syzygy::mf::PolyMat {
    let field = a.field();
    let rows = (0..a.rows())
        .map(|r| (0..a.cols()).map(|c| a.get(r, c).add(b.get(r, c))).collect())
        .collect();
    pm(field, rows)
}

// ---- quiver families -------------------------------------------------------

use syzygy::algebra::{strip_projectives, Arrow, QuiverPresentation, RelationTerm};

/// Paths of length `len` through consecutive arrows `a_i: i -> i+1` (mod `n`
/// when `cyclic`), written as relation terms.
fn monomial_relations(field: Field, n: usize, len: usize, cyclic: bool) -> Vec<Vec<RelationTerm>> {
    let arrows = if cyclic { n } else { n - 1 };
    let mut rels = Vec::new();
    for start in 0..arrows {
        if !cyclic && start + len > arrows {
            continue;
        }
        let path = (0..len).map(|k| format!("a{}", (start + k) % n)).collect();
        rels.push(vec![RelationTerm {
            path,
            coeff: field.one(),
        }]);
    }
    rels
}

/// `1 -> 2 -> ... -> n` with all paths of length `len` set to zero.
pub fn linear_nakayama(field: Field, n: usize, len: usize) -> Algebra {
    let arrows = (0..n - 1)
        .map(|i| Arrow {
            name: format!("a{i}"),
            from: i,
            to: i + 1,
        })
        .collect();
    Algebra::from_quiver(&QuiverPresentation {
        field,
        vertices: (1..=n).map(|i| i.to_string()).collect(),
        arrows,
        relations: monomial_relations(field, n, len, false),
        cap: n + len + 2,
    })
    .unwrap()
}

/// The oriented cycle on `n` vertices with all paths of length `len` zero.
pub fn cyclic_nakayama(field: Field, n: usize, len: usize) -> Algebra {
    let arrows = (0..n)
        .map(|i| Arrow {
            name: format!("a{i}"),
            from: i,
            to: (i + 1) % n,
        })
        .collect();
    Algebra::from_quiver(&QuiverPresentation {
        field,
        vertices: (1..=n).map(|i| i.to_string()).collect(),
        arrows,
        relations: monomial_relations(field, n, len, true),
        cap: len + 2,
    })
    .unwrap()
}

/// Isomorphic after removing projective summands.
pub fn stably_isomorphic(m: &FdModule, n: &FdModule) -> bool {
    let a = strip_projectives(m).unwrap();
    let b = strip_projectives(n).unwrap();
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for (x, k) in &a {
        let hit = b.iter().enumerate().position(|(j, (y, l))| {
            !used[j]
                && k == l
                && x.algebra().same_as(y.algebra())
                && syzygy::algebra::isomorphism(x, y).unwrap().is_some()
        });
        match hit {
            Some(j) => used[j] = true,
            None => return false,
        }
    }
    true
}

// ---- sweeps shared by the oracle, property and acceptance targets ----------

use syzygy::algebra::{
    cosyzygy, proj_cosyzygy, projective_cover, splice_syzygy_sequence, stable_hom, syzygy, transpose, ShortExact,
};
use syzygy::homological::{ext_dim_from, is_gorenstein_projective, is_selfinjective, iwanaga_gorenstein, resolve};
use syzygy::mf::{mf_check, mf_syzygy};
use syzygy::pipeline::analyze;

/// Every disagreement between `ext_dim` and the cocycle oracle on the catalog,
/// for `0 <= i <= 4`.
pub fn ext_mismatches(field: Field) -> Vec<String> {
    let mut out = Vec::new();
    for (name, _, modules) in small_catalog(field) {
        for m in &modules {
            let res = resolve(m, 5);
            for n in &modules {
                for i in 0..=4 {
                    let fast = ext_dim_from(&res, n, i).unwrap();
                    let slow = ext_oracle(m, n, i);
                    if fast != slow {
                        out.push(format!(
                            "{name}: Ext^{i} dims {}->{}: {fast} vs {slow}",
                            m.dim(),
                            n.dim()
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Every disagreement between the stable Hom of cokernels and homotopy
/// classes of factorization maps over `x^n`, `n <= 5`, at caps `2n` and `3n`.
pub fn stable_hom_mismatches(field: Field) -> Vec<String> {
    let mut out = Vec::new();
    for n in 2..=5 {
        let f = monomial(field, n);
        let ring = ring_algebra(&f).unwrap();
        let seeds = mf_indecomposables(&f).unwrap();
        for (i, x) in seeds.iter().enumerate() {
            for (j, y) in seeds.iter().enumerate() {
                let mx = mf_cokernel_over(x, &ring).unwrap().module;
                let my = mf_cokernel_over(y, &ring).unwrap().module;
                let fast = stable_hom(&mx, &my).unwrap().dim;
                for cap in [2 * n, 3 * n] {
                    let slow = homotopy_hom_oracle(x, y, cap);
                    if fast != slow {
                        out.push(format!("x^{n}: seeds {i}->{j} at cap {cap}: {fast} vs {slow}"));
                    }
                }
            }
        }
    }
    out
}

/// Small quiver algebras beyond the catalog: linear and cyclic Nakayama.
pub fn nakayama_family(field: Field) -> Vec<Algebra> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for len in 2..=3 {
            out.push(cyclic_nakayama(field, n, len));
            if n >= 2 {
                out.push(linear_nakayama(field, n, len));
            }
        }
    }
    out
}

/// The structural properties, checked exhaustively on the catalog; returns
/// every violation found.
pub fn property_violations(field: Field) -> Vec<String> {
    let mut out = Vec::new();
    // factorizations: f = c (x - a)^n
    for n in 2..=6 {
        for a in [0, 1, -2] {
            for c in [1, 3] {
                let lin = Poly::linear(field, &field.from_i64(a));
                let f = lin.pow(n).scale(&field.from_i64(c));
                for mf in mf_indecomposables(&f).unwrap() {
                    if !mf_check(mf.phi(), mf.psi(), &f).unwrap() || mf_syzygy(&mf_syzygy(&mf)) != mf {
                        out.push(format!("swap: {f} size {}", mf.size()));
                    }
                }
            }
        }
    }
    let catalog = small_catalog(field);
    for (name, a, modules) in &catalog {
        let selfinj = is_selfinjective(a);
        for (i, m) in modules.iter().enumerate() {
            let tt = transpose(&transpose(m).unwrap()).unwrap();
            if !stably_isomorphic(&tt, m) {
                out.push(format!("{name}: Tr Tr of module {i}"));
            }
            if selfinj {
                if !stably_isomorphic(&cosyzygy(&syzygy(m)), m) {
                    out.push(format!("{name}: cosyzygy of syzygy of module {i}"));
                }
                if !stably_isomorphic(&proj_cosyzygy(m).unwrap(), &cosyzygy(m)) {
                    out.push(format!("{name}: two cosyzygies of module {i} differ"));
                }
            }
            let cover = projective_cover(m);
            let incl = cover.surjection.kernel_basis();
            let omega = cover.projective.module.submodule(&incl);
            let mut sequences = vec![ShortExact::new(
                omega,
                cover.projective.module.clone(),
                m.clone(),
                incl,
                cover.surjection,
            )
            .unwrap()];
            for n in modules {
                sequences.push(ShortExact::split(m, n).unwrap());
            }
            for (k, s) in sequences.iter().enumerate() {
                if let Some(e) = splice_violation(s) {
                    out.push(format!("{name}: splice of sequence {k} at module {i}: {e}"));
                }
            }
        }
    }
    let mut algebras: Vec<(String, Algebra)> = catalog.into_iter().map(|(n, a, _)| (n, a)).collect();
    algebras.extend(
        nakayama_family(field)
            .into_iter()
            .map(|a| (format!("nakayama dim {}", a.dim()), a)),
    );
    for (name, a) in &algebras {
        let r = analyze(name, a, 12);
        if !r.is_consistent() {
            out.push(format!("{name}: {:?}", r.inconsistencies));
        }
        if r.gldim.finite().is_some() && r.dsg_label() != "trivial" {
            out.push(format!(
                "{name}: finite global dimension, singularity category {}",
                r.dsg_label()
            ));
        }
        if let Some(g) = iwanaga_gorenstein(a, 12) {
            for (v, s) in FdModule::simples(a).into_iter().enumerate() {
                let top = (0..g).fold(s, |m, _| syzygy(&m));
                if !is_gorenstein_projective(&top, 12).unwrap().is_gp {
                    out.push(format!("{name}: syzygy {g} of simple {v} is not Gorenstein projective"));
                }
            }
        }
    }
    out
}

/// Checks every short exact sequence of the splice to depth 6, and that
/// consecutive maps compose to zero in the stable category.
pub fn splice_violation(s: &ShortExact) -> Option<String> {
    let seq = match splice_syzygy_sequence(s, 6) {
        Ok(q) => q,
        Err(e) => return Some(e.to_string()),
    };
    for t in &seq.sequences {
        if let Err(e) = t.verify() {
            return Some(e.to_string());
        }
    }
    let terms = seq.terms();
    let maps = seq.maps();
    for k in 0..maps.len().saturating_sub(1) {
        let composite = maps[k] * maps[k + 1];
        if !stable_hom(terms[k + 2], terms[k])
            .unwrap()
            .is_stably_zero(&composite)
            .unwrap()
        {
            return Some(format!("joint {k} is not stably zero"));
        }
    }
    None
}
