//! Connes' B on the Hochschild generators for `σ = σ_{q^-N,1}`.

use super::detection::{half_sum, minus_h, one_wedge, t_chain};
use super::support::*;
use super::Mechanism;
use crate::algebra::{Aut, Elem, Gen};
use crate::catalog::{del_h, in_s, omega2, omega2p, omega_twist, Sign};
use crate::complexes::{Chain, Cochain};
use crate::cyclic::connes_b;
use crate::field::Field;
use crate::hopf::wedge2;
use crate::products::cap;
use crate::solver::Complex;
use crate::tensor::Tensor;

fn gens<F: Field>() -> [Elem<F>; 4] {
    Gen::ALL.map(Elem::gen)
}

fn b_images_degree0_at<F: Exact>(w: &mut Witnesses) -> Step<String> {
    let mut tally = Tally::default();
    let [_, b, c, _] = gens::<F>();
    for n in 1..=4u32 {
        let tw: Aut<F> = Aut::sigma_q(-(n as i64), 0);
        let b1 = connes_b(&chain_of(&tw, &[Elem::one()]))?;
        expect_chain_eq(format!("B[1] at N = {n}"), &b1, &Chain::zero(1, tw.clone()), Complex::Normalised)?;
        tally.note(Mechanism::ExactIdentity);
        for (name, x) in [("b", &b), ("c", &c)] {
            for i in 1..=n + 1 {
                let lhs = connes_b(&chain_of(&tw, &[x.pow(i)]))?;
                let rhs = chain_of(&tw, &[x.pow(i - 1), x.clone()]).scale(&F::from_i64(i as i64));
                tally.note(F::bounds(&lhs.sub(&rhs), Complex::Normalised, &format!("N={n} B[{name}^{i}]"), w)?);
            }
        }
        for i in 0..=n {
            let lhs = connes_b(&chain_of(&tw, &[Elem::omega(n, i)]))?;
            let mut rhs = Chain::zero(1, tw.clone());
            if i > 0 {
                rhs = rhs.add(&chain_of(&tw, &[Elem::omega(n - 1, i - 1), b.clone()]).scale(&F::from_i64(i as i64)));
            }
            if i < n {
                rhs = rhs.add(&chain_of(&tw, &[Elem::omega(n - 1, i), c.clone()]).scale(&F::from_i64((n - i) as i64)));
            }
            tally.note(F::bounds(&lhs.sub(&rhs), Complex::Normalised, &format!("N={n} B[omega({n},{i})]"), w)?);
        }
    }
    Ok(format!("N = 1..4 {}", tally.summary()))
}

pub(crate) fn b_images_degree0(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("b_images_degree0".into(), at_points!(b_images_degree0_at()))]
}

fn b_images_degree1_at<F: Exact>(w: &mut Witnesses) -> Step<String> {
    let mut tally = Tally::default();
    let [_, b, c, _] = gens::<F>();
    for n in 2..=4u32 {
        let tw: Aut<F> = Aut::sigma_q(-(n as i64), 0);
        let r = n - 2;
        for j in (1..=n + 1).filter(|j| in_s(-(n as i64), *j)) {
            for (name, x) in [("b", &b), ("c", &c)] {
                let y = connes_b(&chain_of(&tw, &[x.pow(j - 1), x.clone()]))?;
                tally.note(F::bounds(&y, Complex::Normalised, &format!("N={n} B[{name}^{}@{name}]", j - 1), w)?);
            }
        }
        if n % 2 == 1 {
            let y = connes_b(&chain_of(&tw, &[b.clone(), c.clone()]))?.sub(&one_wedge(n));
            tally.note(F::bounds(&y, Complex::Normalised, &format!("N={n} B[b@c] - 1@(b^c)"), w)?);
        }
        for i in 0..=r {
            let y = connes_b(&chain_of(&tw, &[Elem::omega(n - 1, i), b.clone()]))?;
            let y = y.add(&omega2p::<F>(r, i)?.scale(&F::from_i64((n - 1 - i) as i64)));
            tally.note(F::bounds(&y, Complex::Normalised, &format!("N={n} B[omega({},{i})@b]", n - 1), w)?);
        }
        for i in 1..=n - 1 {
            let y = connes_b(&chain_of(&tw, &[Elem::omega(n - 1, i), c.clone()]))?;
            let y = y.sub(&omega2p::<F>(r, i - 1)?.scale(&F::from_i64(i as i64)));
            tally.note(F::bounds(&y, Complex::Normalised, &format!("N={n} B[omega({},{i})@c]", n - 1), w)?);
        }
    }
    Ok(format!("N = 2..4 {}", tally.summary()))
}

pub(crate) fn b_images_degree1(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("b_images_degree1".into(), at_points!(b_images_degree1_at()))]
}

fn half_diff<F: Field>() -> Step<Cochain<F>> {
    let h = F::from_ratio(1, 2);
    Ok(Cochain::combination(vec![(h.clone(), del_h(Sign::Plus)), (-h, del_h(Sign::Minus))])?)
}

/// Follows the reduction of `B[ω₂(r,i)] ⌢ ∂ ⌢ ½(∂⁺_H - ∂⁻_H)` to a multiple
/// of `[ω_{r+1,i} ⊗ b + ω_{r+1,i+1} ⊗ c]`, then confirms the result directly.
fn b_image_omega2_at<F: Exact>(w: &mut Witnesses) -> Step<String> {
    let mut tally = Tally::default();
    let [a, b, c, d] = gens::<F>();
    let q = |e: i64| F::q_pow(e);
    let int = |e: i64| F::from_i64(e);
    let om = |r: u32, i: u32| Elem::<F>::omega(r, i);
    let (dd, dh) = (half_sum::<F>()?, half_diff::<F>()?);
    let hh = cup_all::<F>(&["H+", "H-"]);
    for r in 0..=2u32 {
        for i in 0..=r {
            let key = |s: &str| format!("omega2({r},{i}) {s}");
            let tw: Aut<F> = omega_twist(r);
            let k = 2 * i as i64 - r as i64;
            let ri = r as i64;
            let ch = |xs: &[Elem<F>]| chain_of(&tw, xs);
            let t = t_chain::<F>(r + 2, i);
            let x = connes_b(&omega2::<F>(r, i)?.normalize())?;

            let y = cap(&cap(&x, &dd)?, &dh)?.normalize();
            let wch = ch(&[om(r + 2, i + 1), d.clone(), a.clone()])
                .scale(&int(k - 1))
                .add(&ch(&[b.clone(), om(r + 1, i).mul(&a), d.clone()]))
                .add(&ch(&[a.mul(&c), om(r + 1, i + 1), d.clone()]).scale(&q(-ri - 2)));
            let z = ch(&[om(r + 2, i + 1), b.mul(&c)])
                .scale(&int(k - 1))
                .add(&ch(&[b.clone(), om(r + 1, i)]))
                .sub(&ch(&[c.clone(), om(r + 1, i + 1)]))
                .sub(&ch(&[b.mul(&c).mul(&c), om(r + 1, i + 1)]).scale(&q(-1)))
                .sub(&ch(&[om(r + 1, i + 1), c.clone()]).scale(&int(k + 1)))
                .sub(&ch(&[om(r + 3, i + 2), c.clone()]).scale(&(int(k + 1) * q(1))))
                .sub(&ch(&[om(r + 1, i), b.clone()]).scale(&int(k - 1)))
                .sub(&ch(&[om(r + 3, i + 1), b.clone()]).scale(&(int(k - 1) * q(-1))));
            let step = y.sub(&wch.boundary()?).sub(&z);
            tally.note(F::bounds(&step, Complex::Normalised, &key("reduction"), w)?);

            let id1 = Chain::new(tw.clone(), Tensor::from_elem(&om(r + 1, i).mul(&a)).tensor(&wedge2(&b, &d)));
            let id2 = Chain::new(tw.clone(), Tensor::from_elem(&om(r + 1, i + 1).mul(&a)).tensor(&wedge2(&d, &c)));
            let (b1, b2) = (id1.boundary()?, id2.boundary()?);
            let e1 = ch(&[om(r + 3, i + 1), b.clone()]).scale(&(F::one() - q(2)));
            let e2 = ch(&[om(r + 3, i + 2), c.clone()]).scale(&(q(1) - q(-1)));
            expect_chain_eq(key("b(omega a @ b^d)"), &b1, &e1, Complex::Normalised)?;
            expect_chain_eq(key("b(omega a @ d^c)"), &b2, &e2, Complex::Normalised)?;
            tally.note(Mechanism::ExactIdentity);
            tally.note(Mechanism::ExactIdentity);

            let alpha = int(k - 1) - q(-1) * int(ri - i as i64) - int(k + 1) * q(1);
            let beta = int(k - 1) - int(3 * i as i64 - ri) * q(-1);
            let ca = alpha.div(&(q(1) - q(-1))).expect("q - q^-1 is invertible");
            let cb = beta.div(&(F::one() - q(2))).expect("1 - q^2 is invertible");
            let rest = z.add(&t.scale(&int(k))).sub(&b2.scale(&ca)).sub(&b1.scale(&cb));
            tally.note(F::bounds(&rest, Complex::Normalised, &key("differential forms"), w)?);

            let direct = cap(&x, &hh)?.sub(&t.scale(&int(2 * k)));
            tally.note(F::bounds(&direct, Complex::Normalised, &key("direct"), w)?);
        }
    }
    Ok(format!("r <= 2, all i: reduction, the two boundary identities and the final class {}", tally.summary()))
}

pub(crate) fn b_image_omega2(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("b_image_omega2".into(), at_points!(b_image_omega2_at()))]
}

fn one_wedge_vanishes_at<F: Exact>(w: &mut Witnesses) -> Step<String> {
    let mut tally = Tally::default();
    let [_, b, c, _] = gens::<F>();
    let (dd, dp) = (half_sum::<F>()?, minus_h::<F>());
    for n in [3u32, 5] {
        let z = one_wedge::<F>(n);
        let tw = z.twist().clone();
        let sym = chain_of(&tw, &[b.clone(), c.clone()]).add(&chain_of(&tw, &[c.clone(), b.clone()]));
        tally.note(F::bounds(&cap(&z, &dd)?, Complex::Normalised, &format!("N={n} 1@(b^c) cap d"), w)?);
        tally.note(F::bounds(&cap(&z, &dp)?.add(&sym), Complex::Normalised, &format!("N={n} 1@(b^c) cap d' + b@c + c@b"), w)?);
        tally.note(F::bounds(&sym, Complex::Normalised, &format!("N={n} b@c + c@b"), w)?);
    }
    Ok(format!("N = 3, 5 {}", tally.summary()))
}

pub(crate) fn one_wedge_vanishes(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("one_wedge_vanishes".into(), at_points!(one_wedge_vanishes_at()))]
}
