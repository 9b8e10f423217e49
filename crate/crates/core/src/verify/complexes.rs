//! Axioms of the twisted paracyclic complex and the cycle property of the
//! homology generators.

use super::support::*;
use crate::algebra::Aut;
use crate::catalog::{d_a, omega2, omega2p, omega3};
use crate::complexes::Chain;
use crate::cyclic::{big_t, connes_b, connes_b_unnormalized, cyclic_t, extra_degeneracy, operator_n};
use crate::field::Field;
use crate::solver::Complex;

const PER_PROPERTY: usize = 200;

fn twists<F: Field>() -> Vec<Aut<F>> {
    let mut v = Vec::new();
    for n in [0, 2, 3, 4] {
        for m in [0, 1] {
            v.push(Aut::sigma_q(-n, m));
        }
    }
    v
}

fn sign<F: Field>(n: usize) -> F {
    if n % 2 == 0 {
        F::one()
    } else {
        -F::one()
    }
}

fn same<F: Field>(what: &str, x: &Chain<F>, got: &Chain<F>, want: &Chain<F>) -> Step {
    expect_chain_eq(format!("{what} on {}", show(x)), got, want, Complex::Unnormalised)
}

fn complex_axioms_at<F: Exact>(_: &mut Witnesses, ctx: &Ctx) -> Step<String> {
    let mut r = ctx.rng("complex_axioms");
    let tws = twists::<F>();
    let mut sample = |k: usize, min_deg: usize| -> Chain<F> {
        let deg = min_deg + k % (5 - min_deg);
        random_chain(&mut r, deg, tws[k % tws.len()].clone(), 3)
    };
    for k in 0..PER_PROPERTY {
        let x = sample(k, 2);
        let zero = Chain::zero(x.degree() - 2, x.twist().clone());
        same("bb", &x, &x.boundary()?.boundary()?, &zero)?;
        same("b'b'", &x, &x.boundary_prime()?.boundary_prime()?, &zero)?;
    }
    for k in 0..PER_PROPERTY {
        let x = sample(k, 1);
        let id_t = |y: &Chain<F>| y.sub(&cyclic_t(y));
        let bp = x.boundary_prime()?;
        same("b(1-t) = (1-t)b'", &x, &id_t(&x).boundary()?, &id_t(&bp))?;
        same("b'N = Nb", &x, &operator_n(&x).boundary_prime()?, &operator_n(&x.boundary()?))?;
        same("sb' + b's = 1", &x, &extra_degeneracy(&bp).add(&extra_degeneracy(&x).boundary_prime()?), &x)?;
    }
    for k in 0..PER_PROPERTY {
        let x = sample(k, 1);
        let n = x.degree();
        let tx = cyclic_t(&x);
        for i in 1..=n {
            same(&format!("d_{i} t = -t d_{}", i - 1), &x, &tx.face(i)?, &cyclic_t(&x.face(i - 1)?).neg())?;
            same(&format!("s_{i} t = -t s_{}", i - 1), &x, &tx.degeneracy(i)?, &cyclic_t(&x.degeneracy(i - 1)?).neg())?;
        }
        same("d_0 t = (-1)^n d_n", &x, &tx.face(0)?, &x.face(n)?.scale(&sign(n)))?;
        same("s_0 t = (-1)^n t^2 s_n", &x, &tx.degeneracy(0)?, &cyclic_t(&cyclic_t(&x.degeneracy(n)?)).scale(&sign(n)))?;
        let mut tn = x.clone();
        for _ in 0..=n {
            tn = cyclic_t(&tn);
        }
        same("T = t^(n+1)", &x, &big_t(&x), &tn)?;
    }
    for k in 0..PER_PROPERTY {
        let x = sample(k, 1);
        let lhs = connes_b_unnormalized(&x).boundary()?.add(&connes_b_unnormalized(&x.boundary()?));
        same("bB + Bb = 1 - T", &x, &lhs, &x.sub(&big_t(&x)))?;
        let xn = x.normalize();
        let lhs = connes_b(&xn)?.boundary()?.normalize().add(&connes_b(&xn.boundary()?.normalize())?);
        expect_chain_eq(format!("normalised bB + Bb = 1 - T on {}", show(&xn)), &lhs, &xn.sub(&big_t(&xn)), Complex::Normalised)?;
    }
    for k in 0..PER_PROPERTY {
        let x = sample(k, 0);
        for i in 0..=x.degree() {
            let y = x.degeneracy(i)?;
            let by = connes_b_unnormalized(&y).normalize();
            if !by.is_zero() {
                return Err(mismatch(format!("B(s_{i} x) for x = {}", show(&x)), show(&by), "a degenerate chain"));
            }
        }
    }
    Ok(format!("{PER_PROPERTY} random chains per property, degrees <= 4, 8 twists"))
}

pub(crate) fn complex_axioms(ctx: &Ctx) -> Vec<(String, Outcome)> {
    vec![("complex_axioms".into(), at_points!(complex_axioms_at(ctx)))]
}

fn omega_cycles_at<F: Exact>(_: &mut Witnesses) -> Step<String> {
    let mut n = 0;
    for r in 0..=3 {
        for i in 0..=r {
            for (name, z) in [("omega2", omega2::<F>(r, i)?), ("omega2p", omega2p(r, i)?), ("omega3", omega3(r, i)?)] {
                let bz = z.boundary()?;
                if !bz.is_zero() {
                    return Err(mismatch(format!("b({name}({r},{i}))"), show(&bz), "0"));
                }
                n += 1;
            }
        }
    }
    let bz = d_a::<F>().boundary()?;
    if !bz.is_zero() {
        return Err(mismatch("b(dA)", show(&bz), "0"));
    }
    Ok(format!("{n} generators with r <= 3 and dA are cycles in the unnormalised complex"))
}

pub(crate) fn omega_cycles(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("omega_cycles".into(), at_points!(omega_cycles_at()))]
}
