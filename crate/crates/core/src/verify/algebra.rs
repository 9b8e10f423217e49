//! Algebra-level checks: relations, associativity, twisted commutators,
//! braiding, the Koszul matrices and the specialisation maps.

use super::printed;
use super::support::*;
use crate::algebra::{relations as defining_relations, twisted_commutator, Aut, Elem, Gen, Word};
use crate::catalog::koszul as koszul_complex;
use crate::field::{AtFiveHalves, AtTwo, Field, Specialized};
use crate::hopf::{braiding_word, wedge3};
use crate::scalar::Scalar;

fn relations_at<F: Exact>(_: &mut Witnesses) -> Step<String> {
    let rels = defining_relations::<F>();
    for (name, r) in &rels {
        expect_eq(*name, r, &Elem::zero())?;
    }
    Ok(format!("{} relations hold", rels.len()))
}

pub(crate) fn relations(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("relations".into(), at_points!(relations_at()))]
}

const TRIPLES: usize = 1000;

fn associativity_at<F: Exact>(_: &mut Witnesses, ctx: &Ctx) -> Step<String> {
    let mut r = ctx.rng("associativity");
    let win = ctx.window((3, 3, 3));
    for _ in 0..TRIPLES {
        let x: Elem<F> = random_elem(&mut r, 2, win);
        let y: Elem<F> = random_elem(&mut r, 2, win);
        let z: Elem<F> = random_elem(&mut r, 2, win);
        let (l, rr) = (x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        if l != rr {
            return Err(mismatch(format!("({x})({y})({z})"), l.sub(&rr), "0"));
        }
    }
    Ok(format!("{TRIPLES} random triples in |i|<={}, j<={}, k<={}", win.0, win.1, win.2))
}

pub(crate) fn associativity(ctx: &Ctx) -> Vec<(String, Outcome)> {
    vec![("associativity".into(), at_points!(associativity_at(ctx)))]
}

/// The printed closed form of `e x - σ(x) e` for `σ = σ_{λ,μ}`.
fn closed_form<F: Field>(e: Word, g: Gen, lambda: &F, mu: &F) -> Elem<F> {
    let (i, j, k) = (e.i, e.j, e.k);
    let jk = (j + k) as i64;
    let q = |n: i64| F::q_pow(n);
    let one = F::one();
    let term = |c: F, w: Word| Elem::term(c, w);
    match g {
        Gen::A => {
            let mut x = term(q(-jk) - lambda, Word::new(i + 1, j, k));
            if i < 0 {
                x = x.add(&term(q(-jk - 1) - q(-1 - 2 * i as i64) * lambda, Word::new(i + 1, j + 1, k + 1)));
            }
            x
        }
        Gen::B => term(one - q(-(i as i64)) * mu, Word::new(i, j + 1, k)),
        Gen::C => term(one - q(-(i as i64)) * mu.inverse().unwrap(), Word::new(i, j, k + 1)),
        Gen::D => {
            let li = lambda.inverse().unwrap();
            let mut x = term(q(jk) - &li, Word::new(i - 1, j, k));
            if i > 0 {
                x = x.add(&term(q(jk + 1) - q(1 - 2 * i as i64) * li, Word::new(i - 1, j + 1, k + 1)));
            }
            x
        }
    }
}

fn twisted_commutators_at<F: Exact>(_: &mut Witnesses) -> Step<String> {
    let exps = [0, 1, -2, 3];
    let mut n = 0;
    for le in exps {
        for me in exps {
            let (l, m) = (F::q_pow(le), F::q_pow(me));
            let s = Aut::sigma(l.clone(), m.clone());
            for i in -4..=4 {
                for j in 0..=4 {
                    for k in 0..=4 {
                        let e = Word::new(i, j, k);
                        for g in Gen::ALL {
                            let got = twisted_commutator(&Elem::word(e), g, &s);
                            let want = closed_form(e, g, &l, &m);
                            if got != want {
                                return Err(mismatch(format!("e_{{{i},{j},{k}}} {} - sigma({}) e for {s}", g.name(), g.name()), got, want));
                            }
                            n += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{n} commutators match the closed forms"))
}

pub(crate) fn twisted_commutators(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("twisted_commutators".into(), at_points!(twisted_commutators_at()))]
}

fn braiding_table_at<F: Exact>(_: &mut Witnesses) -> Step<String> {
    for (arg, want) in printed::BRAIDING {
        let t = printed::tensor(arg);
        let (tuple, _) = t.terms().next().expect("one tuple");
        let got = braiding_word::<F>(tuple[0], tuple[1]);
        let want = lift_tensor::<F>(&printed::tensor(want))?;
        if got != want {
            return Err(mismatch(format!("Psi({arg})"), &got, &want));
        }
    }
    Ok(format!("{} entries of the braiding table", printed::BRAIDING.len()))
}

pub(crate) fn braiding_table(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("braiding_table".into(), at_points!(braiding_table_at()))]
}

fn wedge3_expansion_at<F: Exact>(_: &mut Witnesses) -> Step<String> {
    let [a, b, _, d] = Gen::ALL.map(Elem::<F>::gen);
    let got = wedge3(&b, &a, &d);
    let want = lift_tensor::<F>(&printed::tensor(printed::WEDGE3_BAD))?;
    if got != want {
        return Err(mismatch("b^a^d", &got, &want));
    }
    Ok(format!("b^a^d = {got}"))
}

pub(crate) fn wedge3_expansion(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("wedge3_expansion".into(), at_points!(wedge3_expansion_at()))]
}

fn koszul_at<F: Exact>(_: &mut Witnesses) -> Step<String> {
    let k = koszul_complex::<F>();
    for (n, m) in k.composites().iter().enumerate() {
        for (r, row) in m.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                expect_eq(format!("composite {} entry ({r},{c})", n + 1), x, &Elem::zero())?;
            }
        }
    }
    Ok("both composites vanish".into())
}

pub(crate) fn koszul(_: &Ctx) -> Vec<(String, Outcome)> {
    vec![("koszul".into(), at_points!(koszul_at()))]
}

const SAMPLES: usize = 200;

fn homomorphism<G: Field>(ctx: &Ctx) -> Step {
    let mut r = ctx.rng("specialisation");
    let sp = |x: &Elem| lift::<G>(x);
    for _ in 0..SAMPLES {
        let x: Elem = random_elem(&mut r, 3, (2, 2, 2));
        let y: Elem = random_elem(&mut r, 3, (2, 2, 2));
        let (xs, ys) = (sp(&x)?, sp(&y)?);
        expect_eq(format!("product of {x} and {y}"), &sp(&x.mul(&y))?, &xs.mul(&ys))?;
        expect_eq(format!("sum of {x} and {y}"), &sp(&x.add(&y))?, &xs.add(&ys))?;
        let s: Aut = Aut::sigma_q(r.gen_range(-3..=3), r.gen_range(-2..=2));
        let sg: Aut<G> = s.specialize().unwrap();
        expect_eq(format!("{s} applied to {x}"), &sp(&s.apply(&x))?, &sg.apply(&xs))?;
        let ch = random_chain::<Scalar>(&mut r, 2, s.clone(), 3);
        let bs = ch.boundary().map_err(Failure::from)?.specialize::<G>().unwrap();
        let sb = ch.specialize::<G>().unwrap().boundary().map_err(Failure::from)?;
        expect_chain_eq(format!("boundary of {}", show(&ch)), &bs, &sb, crate::solver::Complex::Unnormalised)?;
    }
    Ok(())
}

use rand::Rng;

pub(crate) fn specialisation(ctx: &Ctx) -> Vec<(String, Outcome)> {
    let mut points = Vec::new();
    let mut run = || -> Step {
        points.push(Specialized::<AtTwo>::label());
        homomorphism::<Specialized<AtTwo>>(ctx)?;
        points.push(Specialized::<AtFiveHalves>::label());
        homomorphism::<Specialized<AtFiveHalves>>(ctx)
    };
    let outcome = match run() {
        Ok(()) => Ok(Pass { message: format!("{SAMPLES} products, sums, automorphisms and boundaries commute with v -> 2, 5/2"), points }),
        Err(e) => Err(Fail { message: e.message, discrepancy: e.discrepancy, points }),
    };
    vec![("specialisation".into(), outcome)]
}
