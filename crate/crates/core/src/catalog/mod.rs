//! Constructors for the named objects: generator chains, twisted derivations,
//! traces, the cocycles φ, η, ξ, homology bases and the Koszul matrices.

mod chains;
mod cochains;
mod koszul;

pub use chains::{basis_h, d_a, omega, omega2, omega2p, omega3, omega_twist, Generator};
pub use cochains::{
    basic_derivations, del_class, del_e, del_f, del_h, eta, in_h0_basis, in_s, phi, top_cup, trace_bc, trace_of, trace_one,
    twisted_central, xi, EtaSign, Sign,
};
pub use koszul::{koszul, mat_mul, KoszulComplex, Matrix};

use crate::algebra::{Aut, Word};
use crate::complexes::{Chain, Cochain, Functional, Trace};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CatalogKey {
    Omega(u32, u32),
    Omega2(u32, u32),
    Omega2p(u32, u32),
    Omega3(u32, u32),
    DA,
    DelH(Sign),
    DelE(Sign),
    DelF(Sign),
    DelClass(Sign, i64),
    /// `b^j c^k` in the twisted centre.
    Central(u32, u32),
    /// `∫_{[e]}`; `None` selects the default twist for `[1]` and `[bc]`.
    Trace(Word, Option<Aut<Scalar>>),
    Phi,
    Eta(Scalar),
    Xi,
    Koszul,
}

#[derive(Clone, Debug)]
pub enum CatalogItem {
    Chain(Chain),
    Cochain(Cochain),
    Trace(Trace),
    Functional(Functional),
    Koszul(KoszulComplex<Scalar>),
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CatalogKey::*;
        match self {
            Omega(r, i) => write!(f, "omega({r},{i})"),
            Omega2(r, i) => write!(f, "omega2({r},{i})"),
            Omega2p(r, i) => write!(f, "omega2p({r},{i})"),
            Omega3(r, i) => write!(f, "omega3({r},{i})"),
            DA => write!(f, "dA"),
            DelH(s) => write!(f, "delH{s}"),
            DelE(s) => write!(f, "delE{s}"),
            DelF(s) => write!(f, "delF{s}"),
            DelClass(s, i) => write!(f, "del{s}({i})"),
            Central(j, k) => write!(f, "center({j},{k})"),
            Trace(w, None) => write!(f, "trace[{w}]"),
            Trace(w, Some(t)) => write!(f, "trace[{w}; {}, {}]", t.lambda, t.mu),
            Phi => write!(f, "phi"),
            Eta(m) => write!(f, "eta({m})"),
            Xi => write!(f, "xi"),
            Koszul => write!(f, "koszul"),
        }
    }
}

fn default_trace_twist(w: Word) -> Result<Aut<Scalar>> {
    if w.is_one() {
        Ok(Aut::sigma_q(0, -2))
    } else if w == Word::new(0, 1, 1) {
        Ok(Aut::modular())
    } else {
        Err(Error::InvalidKey(format!("trace[{w}] needs an explicit twist, e.g. trace[{w}; q^-2, 1]")))
    }
}

/// Resolves a key; chain keys use their default twist.
pub fn lookup(key: &CatalogKey) -> Result<CatalogItem> {
    use CatalogKey::*;
    Ok(match key {
        Omega(r, i) => CatalogItem::Chain(omega(*r, *i, Aut::sigma_q(-(*r as i64), 0))?),
        Omega2(r, i) => CatalogItem::Chain(omega2(*r, *i)?),
        Omega2p(r, i) => CatalogItem::Chain(omega2p(*r, *i)?),
        Omega3(r, i) => CatalogItem::Chain(omega3(*r, *i)?),
        DA => CatalogItem::Chain(d_a()),
        DelH(s) => CatalogItem::Cochain(del_h(*s)),
        DelE(s) => CatalogItem::Cochain(del_e(*s)),
        DelF(s) => CatalogItem::Cochain(del_f(*s)),
        DelClass(s, i) => CatalogItem::Cochain(del_class(*s, *i)),
        Central(j, k) => CatalogItem::Cochain(twisted_central(*j, *k)),
        Trace(w, t) => {
            let t = match t {
                Some(t) => t.clone(),
                None => default_trace_twist(*w)?,
            };
            CatalogItem::Trace(trace_of(*w, t)?)
        }
        Phi => CatalogItem::Functional(phi()),
        Eta(m) => CatalogItem::Functional(eta(m.clone(), crate::verify::eta_sign())?),
        Xi => CatalogItem::Functional(xi(crate::verify::eta_sign())),
        Koszul => CatalogItem::Koszul(koszul()),
    })
}

/// A chain key under an explicit twist (only the degree-0 `omega` accepts any twist).
pub fn chain_of(key: &CatalogKey, twist: Option<Aut<Scalar>>) -> Result<Chain> {
    match (key, lookup(key)?) {
        (CatalogKey::Omega(r, i), _) if twist.is_some() => omega(*r, *i, twist.unwrap()),
        (_, CatalogItem::Chain(c)) => match twist {
            Some(t) if t != *c.twist() => {
                Err(Error::TwistMismatch { expected: c.twist().to_string(), got: t.to_string() })
            }
            _ => Ok(c),
        },
        _ => Err(Error::InvalidKey(format!("{key} is not a chain"))),
    }
}

pub fn cochain_of(key: &CatalogKey) -> Result<Cochain> {
    match lookup(key)? {
        CatalogItem::Cochain(c) => Ok(c),
        _ => Err(Error::InvalidKey(format!("{key} is not a cochain"))),
    }
}
