//! Homology generators as explicit chains.

use super::cochains::in_s;
use crate::algebra::{Aut, Elem, Gen, Word};
use crate::complexes::Chain;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{wedge2, wedge3};
use crate::tensor::Tensor;

fn g<F: Field>(x: Gen) -> Elem<F> {
    Elem::gen(x)
}

fn check(r: u32, i: u32) -> Result<()> {
    if i > r {
        return Err(Error::InvalidKey(format!("omega index ({r},{i}) needs 0 <= i <= r")));
    }
    Ok(())
}

/// `x ⊗ t`
fn lead<F: Field>(x: &Elem<F>, t: &Tensor<F>) -> Tensor<F> {
    Tensor::from_elem(x).tensor(t)
}

/// Left multiplication of the first tensor factor.
fn left_mul<F: Field>(z: &Elem<F>, t: &Tensor<F>) -> Tensor<F> {
    let mut r = Tensor::zero(t.arity());
    for (tu, c) in t.terms() {
        let x = z.mul(&Elem::word(tu[0]));
        for (w, k) in x.terms() {
            let mut v = tu.clone();
            v[0] = *w;
            r.add_term(v, k.clone() * c);
        }
    }
    r
}

/// The twist `σ_{q^-N,1}` of the ω-family with `N = r + 2`.
pub fn omega_twist<F: Field>(r: u32) -> Aut<F> {
    Aut::sigma_q(-(r as i64 + 2), 0)
}

/// `ω_{r,i} = b^i c^{r-i}` as a 0-chain.
pub fn omega<F: Field>(r: u32, i: u32, twist: Aut<F>) -> Result<Chain<F>> {
    check(r, i)?;
    Ok(Chain::tuple(twist, vec![Word::omega(r, i)]))
}

fn omega2_core<F: Field>() -> Tensor<F> {
    use Gen::*;
    let prod = |x: Gen, y: Gen| g::<F>(x).mul(&g(y));
    let mut t = lead(&prod(B, C), &wedge2(&g(A), &g(D)));
    t = t.sub(&lead(&prod(B, D), &wedge2(&g(A), &g(C))));
    t = t.add(&lead(&prod(D, A), &wedge2(&g(B), &g(C))));
    t.sub(&lead(&prod(C, A), &wedge2(&g(B), &g(D))).scale(&F::q_pow(-1)))
}

/// `ω₂(r,i) = ω_{r,i}(bc ⊗ (a∧d) − bd ⊗ (a∧c) + da ⊗ (b∧c) − q^{-1} ca ⊗ (b∧d))`
pub fn omega2<F: Field>(r: u32, i: u32) -> Result<Chain<F>> {
    check(r, i)?;
    let z = Elem::word(Word::omega(r, i));
    Ok(Chain::new(omega_twist(r), left_mul(&z, &omega2_core())))
}

/// `ω₂'(r,i) = ω_{r,i} ⊗ (b∧c)`
pub fn omega2p<F: Field>(r: u32, i: u32) -> Result<Chain<F>> {
    check(r, i)?;
    let z = Elem::word(Word::omega(r, i));
    Ok(Chain::new(omega_twist(r), lead(&z, &wedge2(&g(Gen::B), &g(Gen::C)))))
}

/// `ω₃(r,i) = ω_{r,i}(−q d ⊗ (b∧a∧c) + c ⊗ (b∧a∧d))`
pub fn omega3<F: Field>(r: u32, i: u32) -> Result<Chain<F>> {
    use Gen::*;
    check(r, i)?;
    let core = lead(&g(D), &wedge3(&g(B), &g(A), &g(C)))
        .scale(&-F::q_pow(1))
        .add(&lead(&g(C), &wedge3(&g(B), &g(A), &g(D))));
    let z = Elem::word(Word::omega(r, i));
    Ok(Chain::new(omega_twist(r), left_mul(&z, &core)))
}

/// The fundamental cycle `ω₃(0,0)`.
pub fn d_a<F: Field>() -> Chain<F> {
    omega3(0, 0).unwrap()
}

/// A named basis element.
#[derive(Clone, Debug)]
pub struct Generator<F: Field> {
    pub label: String,
    pub chain: Chain<F>,
}

fn word<F: Field>(i: i32, j: u32, k: u32) -> Elem<F> {
    Elem::word(Word::new(i, j, k))
}

/// The printed generators of `H_n(A, σ_{q^le, q^me} A)`; infinite families
/// are cut at exponent `bound`.
pub fn basis_h<F: Field>(n: usize, le: i64, me: i64, bound: u32) -> Result<Vec<Generator<F>>> {
    use Gen::*;
    let twist: Aut<F> = Aut::sigma_q(le, me);
    let mut out: Vec<Generator<F>> = Vec::new();
    let mut push = |label: String, t: Tensor<F>| {
        if !out.iter().any(|x| x.label == label) {
            out.push(Generator { label, chain: Chain::new(twist.clone(), t) });
        }
    };
    let single = |x: Elem<F>| Tensor::from_elem(&x);
    let pair = |x: Elem<F>, y: Elem<F>| Tensor::from_elems(&[x, y]);
    let nn = -le;
    match n {
        0 => {
            if le == 0 {
                for i in 0..=bound {
                    push(Word::new(i as i32, 0, 0).to_string(), single(word(i as i32, 0, 0)));
                    push(Word::new(-(i as i32), 0, 0).to_string(), single(word(-(i as i32), 0, 0)));
                }
            }
            if me == 0 {
                for j in (0..=bound).filter(|j| in_s(le, *j)) {
                    push(Word::new(0, j, 0).to_string(), single(word(0, j, 0)));
                    push(Word::new(0, 0, j).to_string(), single(word(0, 0, j)));
                }
            }
            if nn >= 2 && me == 0 {
                for i in 1..nn as u32 {
                    let w = Word::omega(nn as u32, i);
                    push(w.to_string(), single(Elem::word(w)));
                }
            }
            if nn > 0 && me != 0 {
                let (m, n) = (me as i32, nn as u32);
                push(Word::new(m, n, 0).to_string(), single(word(m, n, 0)));
                push(Word::new(-m, 0, n).to_string(), single(word(-m, 0, n)));
            }
        }
        1 => {
            if le == 0 {
                let mi = F::q_pow(-me);
                let t = pair(g(D), g(A))
                    .scale(&(F::one() - mi))
                    .add(&pair(g(B), g(C)).scale(&(F::q_pow(1) - F::q_pow(-1))));
                push("(1 - mu^-1) d@a + (q - q^-1) b@c".into(), t);
                for i in 0..=bound as i32 {
                    push(format!("{}@a", Word::new(i, 0, 0)), pair(word(i, 0, 0), g(A)));
                    push(format!("{}@d", Word::new(-i, 0, 0)), pair(word(-i, 0, 0), g(D)));
                }
            }
            if me == 0 {
                for j in (0..=bound).filter(|j| in_s(le, *j)) {
                    if j == 0 {
                        // [c^-1 @ c] := [b @ c], a multiple of [c @ b]; counted once, and
                        // already present through the first family when λ = 1.
                        if le != 0 {
                            push("b@c".into(), pair(g(B), g(C)));
                        }
                        continue;
                    }
                    push(format!("{}@b", Word::new(0, j - 1, 0)), pair(word(0, j - 1, 0), g(B)));
                    push(format!("{}@c", Word::new(0, 0, j - 1)), pair(word(0, 0, j - 1), g(C)));
                }
            }
            if nn >= 2 && me == 0 {
                let r = nn as u32 - 1;
                for i in 0..=r - 1 {
                    let (x, y) = (Word::omega(r, i), Word::omega(r, i + 1));
                    push(format!("{x}@b"), pair(Elem::word(x), g(B)));
                    push(format!("{y}@c"), pair(Elem::word(y), g(C)));
                }
            }
            if nn > 0 && me != 0 {
                let (m, n) = (me.unsigned_abs() as i32, nn as u32);
                let items: [(Word, Gen); 4] = if me > 0 {
                    [
                        (Word::new(m - 1, n, 0), A),
                        (Word::new(m, n - 1, 0), B),
                        (Word::new(-m, 0, n - 1), C),
                        (Word::new(-(m - 1), 0, n), D),
                    ]
                } else {
                    [
                        (Word::new(-(m - 1), n, 0), D),
                        (Word::new(-m, n - 1, 0), B),
                        (Word::new(m, 0, n - 1), C),
                        (Word::new(m - 1, 0, n), A),
                    ]
                };
                for (w, x) in items {
                    push(format!("{w}@{}", x.name()), pair(Elem::word(w), g(x)));
                }
            }
        }
        2 => {
            if nn >= 2 && me == 0 {
                let r = nn as u32 - 2;
                for i in 0..=r {
                    push(format!("omega2({r},{i})"), omega2::<F>(r, i)?.into_body());
                    push(format!("omega2p({r},{i})"), omega2p::<F>(r, i)?.into_body());
                }
            }
            if nn > 0 && me != 0 {
                let (m, n) = (me.unsigned_abs() as i32, nn as u32);
                let (x, y, u, v) = if me > 0 {
                    (Word::new(m - 1, n - 1, 0), (B, A), Word::new(-(m - 1), 0, n - 1), (D, C))
                } else {
                    (Word::new(m - 1, 0, n - 1), (A, C), Word::new(-(m - 1), n - 1, 0), (B, D))
                };
                for (w, (s, t)) in [(x, y), (u, v)] {
                    let label = format!("{w}@({}^{})", s.name(), t.name());
                    push(label, lead(&Elem::word(w), &wedge2(&g(s), &g(t))));
                }
            }
        }
        3 => {
            if nn >= 2 && me == 0 {
                let r = nn as u32 - 2;
                for i in 0..=r {
                    push(format!("omega3({r},{i})"), omega3::<F>(r, i)?.into_body());
                }
            }
        }
        _ => {}
    }
    Ok(out)
}
