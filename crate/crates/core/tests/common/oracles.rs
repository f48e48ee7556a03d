//! Hand-built tables for the finite-dimensional bialgebras.

use hopfeq::bialg::StructureBialgebra;
use hopfeq::{FpBialgebra, Matrix, PrimeField, Scalar, ScalarField};

pub fn f2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

/// Builds tables from a hand-written multiplication of basis indices and
/// hand-written coproducts of basis elements.
pub fn hand_tables<S: Scalar>(
    field: &S::Field,
    labels: &[&str],
    product: impl Fn(usize, usize) -> Vec<(i64, usize)>,
    coproduct: impl Fn(usize) -> Vec<(i64, usize, usize)>,
    counit: &[i64],
) -> StructureBialgebra<S> {
    let d = labels.len();
    let vec_of = |terms: Vec<(i64, usize)>| {
        let mut v = vec![field.zero(); d];
        for (c, i) in terms {
            v[i] += field.from_i64(c);
        }
        v
    };
    let mut unit = vec![field.zero(); d];
    unit[0] = field.one();
    let mult = (0..d).map(|a| (0..d).map(|b| vec_of(product(a, b))).collect()).collect();
    let comult = (0..d)
        .map(|a| {
            let mut m = Matrix::zeros(field, d, d);
            for (c, i, j) in coproduct(a) {
                m.add_at(i, j, &field.from_i64(c));
            }
            m
        })
        .collect();
    StructureBialgebra::new(
        field,
        labels.iter().map(|s| s.to_string()).collect(),
        unit,
        mult,
        comult,
        counit.iter().map(|&c| field.from_i64(c)).collect(),
        None,
    )
    .unwrap()
}

/// The five-dimensional algebra on `{1, x, y, z, zy}` from its defining
/// relations, with `Δ` of the generators read off the comatrix
/// `[[x, y], [z, t]]`, `t = zy + x`, and `Δ(zy) = Δ(z)Δ(y)`.
pub fn char2_oracle() -> FpBialgebra {
    let f = f2();
    let (one, x, y, z, zy) = (0usize, 1usize, 2usize, 3usize, 4usize);
    let product = move |a: usize, b: usize| -> Vec<(i64, usize)> {
        match (a, b) {
            (0, b) => vec![(1, b)],
            (a, 0) => vec![(1, a)],
            (1, 1) => vec![(1, x)],
            (1, 2) => vec![(1, y)],
            (1, 3) | (3, 1) => vec![(1, z)],
            (1, 4) => vec![(1, zy)],
            (3, 2) => vec![(1, zy)],
            _ => vec![],
        }
    };
    // Δ on generators, with t expanded as zy + x.
    let t = |c: i64| vec![(c, zy), (c, x)];
    let tensor = |l: Vec<(i64, usize)>, r: Vec<(i64, usize)>| {
        let mut out = Vec::new();
        for (a, i) in &l {
            for (b, j) in &r {
                out.push((a * b, *i, *j));
            }
        }
        out
    };
    let gen_delta = move |g: usize| -> Vec<(i64, usize, usize)> {
        match g {
            1 => [tensor(vec![(1, x)], vec![(1, x)]), tensor(vec![(1, y)], vec![(1, z)])].concat(),
            2 => [tensor(vec![(1, x)], vec![(1, y)]), tensor(vec![(1, y)], t(1))].concat(),
            3 => [tensor(vec![(1, z)], vec![(1, x)]), tensor(t(1), vec![(1, z)])].concat(),
            _ => unreachable!(),
        }
    };
    let coproduct = move |a: usize| -> Vec<(i64, usize, usize)> {
        match a {
            0 => vec![(1, one, one)],
            1..=3 => gen_delta(a),
            _ => {
                let mut out = Vec::new();
                for (c1, a1, a2) in gen_delta(z) {
                    for (c2, b1, b2) in gen_delta(y) {
                        for (c3, p) in product(a1, b1) {
                            for (c4, q) in product(a2, b2) {
                                out.push((c1 * c2 * c3 * c4, p, q));
                            }
                        }
                    }
                }
                out
            }
        }
    };
    hand_tables(&f, &["1", "x", "y", "z", "zy"], product, coproduct, &[1, 1, 0, 0, 0])
}

pub fn t_k_oracle<S: Scalar>(field: &S::Field) -> StructureBialgebra<S> {
    // {1, x, z}: x² = x, xz = zx = z² = 0, Δ(x) = x⊗x, Δ(z) = x⊗z + z⊗1.
    let product = |a: usize, b: usize| -> Vec<(i64, usize)> {
        match (a, b) {
            (0, b) => vec![(1, b)],
            (a, 0) => vec![(1, a)],
            (1, 1) => vec![(1, 1)],
            _ => vec![],
        }
    };
    let coproduct = |a: usize| match a {
        0 => vec![(1, 0, 0)],
        1 => vec![(1, 1, 1)],
        _ => vec![(1, 1, 2), (1, 2, 0)],
    };
    hand_tables(field, &["1", "x", "z"], product, coproduct, &[1, 1, 0])
}

/// `k[X, Z]/(X² − X, Z², XZ − Z)` with `Δ(X) = X⊗X`, `Δ(Z) = X⊗Z + Z⊗X`.
pub fn char2_commutative_oracle() -> FpBialgebra {
    let f = f2();
    let product = |a: usize, b: usize| -> Vec<(i64, usize)> {
        match (a, b) {
            (0, b) => vec![(1, b)],
            (a, 0) => vec![(1, a)],
            (1, 1) => vec![(1, 1)],
            (1, 2) | (2, 1) => vec![(1, 2)],
            _ => vec![],
        }
    };
    let coproduct = |a: usize| match a {
        0 => vec![(1, 0, 0)],
        1 => vec![(1, 1, 1)],
        _ => vec![(1, 1, 2), (1, 2, 1)],
    };
    hand_tables(&f, &["1", "X", "Z"], product, coproduct, &[1, 1, 0])
}
