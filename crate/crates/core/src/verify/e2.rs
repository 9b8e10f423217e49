//! The E² page of the Connes spectral sequence for `σ = σ_{q^-N,1}`, read off
//! from the matrices of B on the Hochschild bases.
//!
//! Degree-one images are expressed in the basis directly. Images in degrees
//! two and three are located through their caps with `∂`, `∂'` and
//! `∂⁺_H ⌣ ∂⁻_H`, which send `ω₂`, `ω₂'` and `ω₃` to the independent classes
//! `[ω_{N-1,i+1} ⊗ c] + [ω_{N-1,i} ⊗ b]`.

use super::detection::{half_sum, minus_h, t_chain};
use super::support::*;
use super::Mechanism;
use crate::catalog::{basis_h, d_a, del_h, omega2, omega3, twisted_central, Generator, Sign};
use crate::complexes::Chain;
use crate::cyclic::connes_b;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::products::cap;
use crate::scalar::Scalar;
use crate::solver::Complex;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E2Entry {
    pub p: usize,
    pub q: usize,
    /// Representatives of a basis; empty for a zero entry.
    pub classes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub claim: String,
    pub mechanism: Mechanism,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E2Report {
    pub n: u32,
    pub parity: Parity,
    /// `E²_{p,q}` for `p <= 3`, `q - p <= 3`; all other entries vanish.
    pub entries: Vec<E2Entry>,
    /// Generator of the stable even part of the page.
    pub hp_even: String,
    /// Generator of the stable odd part of the page.
    pub hp_odd: String,
    pub certificates: Vec<Certificate>,
}

impl E2Report {
    pub fn get(&self, p: usize, q: usize) -> &[String] {
        self.entries.iter().find(|e| e.p == p && e.q == q).map(|e| e.classes.as_slice()).unwrap_or(&[])
    }
}

/// Rank by Gaussian elimination.
fn rank<F: Field>(vs: &[Vec<F>]) -> usize {
    let mut rows: Vec<Vec<F>> = vs.to_vec();
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        let pivot: Vec<F> = rows[rank].iter().map(|x| x.clone() * &inv).collect();
        for r in rank + 1..rows.len() {
            let f = rows[r][col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in rows[r].iter_mut().zip(&pivot) {
                *x -= f.clone() * y;
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

fn in_span<F: Field>(span: &[Vec<F>], v: &[F]) -> bool {
    let mut all = span.to_vec();
    let before = rank(&all);
    all.push(v.to_vec());
    rank(&all) == before
}

/// A basis of `{x : Σ x_k cols[k] = 0}`.
fn kernel<F: Field>(cols: &[Vec<F>], height: usize) -> Vec<Vec<F>> {
    let n = cols.len();
    let mut rows: Vec<Vec<F>> = (0..height).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        let pivot: Vec<F> = rows[rank].iter().map(|x| x.clone() * &inv).collect();
        for r in 0..rows.len() {
            if r == rank {
                continue;
            }
            let f = rows[r][col].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in rows[r].iter_mut().zip(&pivot) {
                *x -= f.clone() * y;
            }
        }
        rows[rank] = pivot;
        pivots.push(col);
        rank += 1;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); n];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[r][free].clone();
        }
        out.push(v);
    }
    out
}

fn unit<F: Field>(n: usize, k: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[k] = F::one();
    v
}

fn render<F: Field>(v: &[F], labels: &[String]) -> String {
    let parts: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| if c.is_one() { l.clone() } else { format!("({c})*{l}") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Representatives of `space / sub`, unit vectors first.
fn quotient<F: Field>(space: &[Vec<F>], sub: &[Vec<F>], labels: &[String]) -> Vec<String> {
    let dim = labels.len();
    let want = rank(space) - rank(sub);
    let mut taken: Vec<Vec<F>> = sub.to_vec();
    let mut out = Vec::new();
    let candidates = (0..dim).map(|k| unit(dim, k)).filter(|e| in_span(space, e)).chain(space.iter().cloned());
    for v in candidates {
        if out.len() == want {
            break;
        }
        if !in_span(&taken, &v) {
            out.push(render(&v, labels));
            taken.push(v);
        }
    }
    out
}

fn chains<F: Field>(gs: &[Generator<F>]) -> Vec<Chain<F>> {
    gs.iter().map(|g| g.chain.clone()).collect()
}

/// Coordinates in `basis` from coefficients indexed by the second argument of the labels `name(r,i)`.
fn by_index<F: Field>(basis: &[Generator<F>], name: &str, r: u32, coeffs: &[F]) -> Vec<F> {
    basis
        .iter()
        .map(|g| (0..coeffs.len()).find(|i| g.label == format!("{name}({r},{i})")).map_or(F::zero(), |i| coeffs[i].clone()))
        .collect()
}

fn page<F: Exact>(w: &mut Witnesses, n: u32) -> Step<E2Report> {
    if n < 2 {
        return fail(format!("the E2 page is computed for N >= 2, got {n}"));
    }
    let r = n - 2;
    let le = -(n as i64);
    let bases: Vec<Vec<Generator<F>>> = (0..=3).map(|k| basis_h::<F>(k, le, 0, n + 1)).collect::<Result<_>>()?;
    let labels: Vec<Vec<String>> = bases.iter().map(|b| b.iter().map(|g| g.label.clone()).collect()).collect();
    let ts: Vec<Chain<F>> = (0..=r).map(|i| t_chain(n, i)).collect();
    let (dd, dp) = (half_sum::<F>()?, minus_h::<F>());
    let hh = cup_all::<F>(&["H+", "H-"]);
    let half = F::from_ratio(1, 2);
    let mut certificates = Vec::new();
    let mut maps: Vec<Vec<Vec<F>>> = Vec::new();
    for k in 0..3 {
        let mut cols = Vec::new();
        for g in &bases[k] {
            let y = connes_b(&g.chain.normalize())?;
            let key = format!("N={n} B[{}]", g.label);
            let (coords, mech) = match k {
                0 => F::express(&y, &chains(&bases[1]), Complex::Normalised, &key, w)?,
                1 => {
                    let (c1, m1) = F::express(&cap(&y, &dd)?, &ts, Complex::Normalised, &format!("{key} cap d"), w)?;
                    let (c2, m2) = F::express(&cap(&y, &dp)?, &ts, Complex::Normalised, &format!("{key} cap d'"), w)?;
                    let v: Vec<F> = by_index(&bases[2], "omega2", r, &c1)
                        .into_iter()
                        .zip(by_index(&bases[2], "omega2p", r, &c2))
                        .map(|(x, y)| x + y)
                        .collect();
                    (v, m1.max(m2))
                }
                _ => {
                    let (c, m) = F::express(&cap(&y, &hh)?, &ts, Complex::Normalised, &format!("{key} cap delH+ cup delH-"), w)?;
                    let c: Vec<F> = c.into_iter().map(|x| x * &half).collect();
                    (by_index(&bases[3], "omega3", r, &c), m)
                }
            };
            certificates.push(Certificate { claim: format!("B[{}] = {}", g.label, render(&coords, &labels[k + 1])), mechanism: mech });
            cols.push(coords);
        }
        maps.push(cols);
    }
    // B B = 0 on the computed matrices
    for k in 0..2 {
        for (col, g) in maps[k].iter().zip(&bases[k]) {
            let mut image = vec![F::zero(); labels[k + 2].len()];
            for (c, next) in col.iter().zip(&maps[k + 1]) {
                for (x, y) in image.iter_mut().zip(next) {
                    *x += c.clone() * y;
                }
            }
            if image.iter().any(|x| !x.is_zero()) {
                return Err(mismatch(format!("N={n} BB[{}]", g.label), render(&image, &labels[k + 2]), "0"));
            }
        }
    }
    let dims: Vec<usize> = labels.iter().map(|l| l.len()).collect();
    let mut entries = Vec::new();
    for k in 0..=3 {
        let im: Vec<Vec<F>> = if k == 0 { vec![] } else { maps[k - 1].clone() };
        let all: Vec<Vec<F>> = (0..dims[k]).map(|i| unit(dims[k], i)).collect();
        let ker = if k == 3 { all.clone() } else { kernel(&maps[k], dims[k + 1]) };
        entries.push(E2Entry { p: 0, q: k, classes: quotient(&all, &im, &labels[k]) });
        let stable = quotient(&ker, &im, &labels[k]);
        for p in 1..=3 {
            entries.push(E2Entry { p, q: p + k, classes: stable.clone() });
        }
    }
    entries.sort_by_key(|e| (e.p, e.q));
    let parity = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
    let (hp_even, hp_odd) = if parity == Parity::Even {
        let rr = r / 2;
        let prefix = match rr {
            0 => String::new(),
            1 => "b c ".into(),
            _ => format!("b^{rr} c^{rr} "),
        };
        let even = if rr == 0 { "dA cap [delH-]".into() } else { format!("{prefix}(dA cap [delH-])") };
        let z = twisted_central::<F>(rr, rr);
        let x = cap(&cap(&d_a::<F>(), &del_h(Sign::Minus))?, &z)?.add(&omega2::<F>(r, rr)?);
        let m = F::bounds(&x, Complex::Normalised, &format!("N={n} b^r c^r (dA cap delH-) + omega2(2r,r)"), w)?;
        certificates.push(Certificate { claim: format!("{even} = -omega2({r},{rr})"), mechanism: m });
        let y = cap(&d_a::<F>(), &z)?;
        expect_chain_eq(format!("N={n} b^r c^r dA"), &y, &omega3::<F>(r, rr)?, Complex::Unnormalised)?;
        certificates.push(Certificate { claim: format!("{prefix}dA = omega3({r},{rr})"), mechanism: Mechanism::ExactIdentity });
        (even, format!("{prefix}dA"))
    } else {
        ("1".into(), "b@c".into())
    };
    Ok(E2Report { n, parity, entries, hp_even, hp_odd, certificates })
}

/// Computes the E² page for `σ_{q^-N,1}`, `N >= 2`, over `Q(v)`.
pub fn e2_table(n: u32) -> Result<E2Report> {
    let mut w = Witnesses::default();
    page::<Scalar>(&mut w, n).map_err(|f| Error::Domain(f.message))
}

/// The printed diagrams, by entry.
fn expected(n: u32) -> Vec<((usize, usize), Vec<String>)> {
    let r = n - 2;
    let mut out = Vec::new();
    let mut first = vec![];
    for i in 0..=r {
        first.push(format!("{}@b", crate::algebra::Word::omega(n - 1, i)));
    }
    let omega2s: Vec<String> = (0..=r).map(|i| format!("omega2({r},{i})")).collect();
    if n % 2 == 1 {
        first.push("b@c".into());
        out.push(((0, 1), first));
        out.push(((0, 2), omega2s));
        out.push(((0, 3), vec![]));
        for p in 1..=3 {
            out.push(((p, p), vec!["1".into()]));
            out.push(((p, p + 1), vec!["b@c".into()]));
            out.push(((p, p + 2), vec![]));
            out.push(((p, p + 3), vec![]));
        }
    } else {
        let mid = r / 2;
        out.push(((0, 1), first));
        out.push(((0, 2), omega2s));
        out.push(((0, 3), vec![format!("omega3({r},{mid})")]));
        for p in 1..=3 {
            out.push(((p, p), vec![]));
            out.push(((p, p + 1), vec![]));
            out.push(((p, p + 2), vec![format!("omega2({r},{mid})")]));
            out.push(((p, p + 3), vec![format!("omega3({r},{mid})")]));
        }
    }
    out
}

fn e2_at<F: Exact>(w: &mut Witnesses, n: u32) -> Step<String> {
    let rep = page::<F>(w, n)?;
    let hh0: Vec<String> = basis_h::<F>(0, -(n as i64), 0, n + 1)?.into_iter().map(|g| g.label).collect();
    let mut want = expected(n);
    want.push(((0, 0), hh0));
    for ((p, q), classes) in want {
        let mut got = rep.get(p, q).to_vec();
        let mut classes = classes;
        got.sort();
        classes.sort();
        if got != classes {
            return Err(mismatch(format!("N={n} E2_({p},{q})"), format!("{{{}}}", got.join(", ")), format!("{{{}}}", classes.join(", "))));
        }
    }
    let mut tally = Tally::default();
    for c in &rep.certificates {
        tally.note(c.mechanism);
    }
    Ok(format!("N={n}: HP_even = k[{}], HP_odd = k[{}] {}", rep.hp_even, rep.hp_odd, tally.summary()))
}

pub(crate) fn e2_tables(_: &Ctx) -> Vec<(String, Outcome)> {
    (2..=5u32).map(|n| (format!("e2_tables/N={n}"), at_points!(e2_at(n)))).collect()
}
