#![allow(dead_code)]

use qsl2::{Elem, Field, Gen, Scalar, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

pub type E = Elem<Scalar>;
pub type T = qsl2::tensor::Tensor<Scalar>;

pub fn q(e: i64) -> Scalar {
    Scalar::q_pow(e)
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

pub fn w(i: i32, j: u32, k: u32) -> Elem {
    Elem::word(Word::new(i, j, k))
}

pub fn gens() -> [Elem; 4] {
    Gen::ALL.map(Elem::gen)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Normal form of a generator string by naive adjacent-pair rewriting with the
/// defining relations. Independent of the closed-form product.
pub fn rewrite(word: &[Gen]) -> Elem {
    use Gen::*;
    let rank = |g: Gen| match g {
        A | D => 0,
        B => 1,
        C => 2,
    };
    let mut pending: Vec<(Vec<Gen>, Scalar)> = vec![(word.to_vec(), int(1))];
    let mut out = Elem::zero();
    while let Some((m, c)) = pending.pop() {
        let pos = (0..m.len().saturating_sub(1)).find(|&p| {
            let (x, y) = (m[p], m[p + 1]);
            rank(x) > rank(y) || matches!((x, y), (A, D) | (D, A))
        });
        let Some(p) = pos else {
            let i = m.iter().filter(|g| **g == A).count() as i32 - m.iter().filter(|g| **g == D).count() as i32;
            let j = m.iter().filter(|g| **g == B).count() as u32;
            let k = m.iter().filter(|g| **g == C).count() as u32;
            out.add_term(Word::new(i, j, k), c);
            continue;
        };
        let splice = |mid: &[Gen]| {
            let mut v = m[..p].to_vec();
            v.extend_from_slice(mid);
            v.extend_from_slice(&m[p + 2..]);
            v
        };
        match (m[p], m[p + 1]) {
            (B, A) => pending.push((splice(&[A, B]), c * q(-1))),
            (C, A) => pending.push((splice(&[A, C]), c * q(-1))),
            (B, D) => pending.push((splice(&[D, B]), c * q(1))),
            (C, D) => pending.push((splice(&[D, C]), c * q(1))),
            (C, B) => pending.push((splice(&[B, C]), c)),
            (A, D) => {
                pending.push((splice(&[]), c.clone()));
                pending.push((splice(&[B, C]), c * q(1)));
            }
            (D, A) => {
                pending.push((splice(&[]), c.clone()));
                pending.push((splice(&[B, C]), c * q(-1)));
            }
            _ => unreachable!(),
        }
    }
    out
}

/// Product of two elements through the rewriting oracle.
pub fn oracle_mul(x: &Elem, y: &Elem) -> Elem {
    let mut out = Elem::zero();
    for (wx, cx) in x.terms() {
        for (wy, cy) in y.terms() {
            let mut g = wx.gens();
            g.extend(wy.gens());
            out.add_scaled(&rewrite(&g), &(cx.clone() * cy));
        }
    }
    out
}

pub fn random_word(r: &mut impl Rng, bi: i32, bj: u32, bk: u32) -> Word {
    Word::new(r.gen_range(-bi..=bi), r.gen_range(0..=bj), r.gen_range(0..=bk))
}

pub fn random_coeff(r: &mut impl Rng) -> Scalar {
    let k = r.gen_range(1..=3i64) * if r.gen_bool(0.5) { 1 } else { -1 };
    int(k) * q(r.gen_range(-2..=2))
}

pub fn random_elem(r: &mut impl Rng, terms: usize, bi: i32, bj: u32, bk: u32) -> Elem {
    let n = r.gen_range(1..=terms);
    let mut m = BTreeMap::new();
    for _ in 0..n {
        m.insert(random_word(r, bi, bj, bk), random_coeff(r));
    }
    Elem::from_map(m)
}

pub type C = qsl2::Chain<Scalar>;

pub fn sigma(l: i64, m: i64) -> qsl2::Aut {
    qsl2::Aut::sigma_q(l, m)
}

pub fn chain(twist: qsl2::Aut, xs: &[Elem]) -> C {
    qsl2::Chain::from_elems(twist, xs)
}

/// A random chain of the given degree, a few terms, small words.
pub fn random_chain(r: &mut impl Rng, degree: usize, twist: qsl2::Aut, terms: usize) -> C {
    let mut body = T::zero(degree + 1);
    for _ in 0..r.gen_range(1..=terms) {
        let t: Vec<Word> = (0..=degree).map(|_| random_word(r, 1, 1, 1)).collect();
        body.add_term(t, random_coeff(r));
    }
    qsl2::Chain::new(twist, body)
}

/// The twists `σ_{q^-N, q^M}` exercised by the complex-axiom checks.
pub fn axiom_twists() -> Vec<qsl2::Aut> {
    let mut v = Vec::new();
    for n in [0, 2, 3, 4] {
        for m in [0, 1] {
            v.push(sigma(-n, m));
        }
    }
    v
}
