//! Cup and cap products.

use crate::algebra::Elem;
use crate::complexes::{Chain, Cochain, Functional};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::tensor::Tensor;

/// `f ⌣ g`, twisted by `τ_g ∘ σ_f`.
pub fn cup<F: Field>(f: &Cochain<F>, g: &Cochain<F>) -> Cochain<F> {
    f.cup(g)
}

/// `(a_0 ⊗ … ⊗ a_n) ⌢ f = τ(a_0) f(a_1, …, a_m) ⊗ a_{m+1} ⊗ … ⊗ a_n`
/// in the complex twisted by `τ ∘ σ`; a central 0-cochain multiplies from the left.
pub fn cap<F: Field>(ch: &Chain<F>, f: &Cochain<F>) -> Result<Chain<F>> {
    let (n, m) = (ch.degree(), f.degree());
    if m > n {
        return Err(Error::Degree(format!("cannot cap a degree-{n} chain with a degree-{m} cochain")));
    }
    let twist = f.twist().compose(ch.twist());
    let mut body = Tensor::zero(n - m + 1);
    if let Some(z) = f.as_central() {
        for (t, c) in ch.terms() {
            let x = z.mul(&Elem::word(t[0]));
            for (w, k) in x.terms() {
                let mut v = t.clone();
                v[0] = *w;
                body.add_term(v, k.clone() * c);
            }
        }
        return Ok(Chain::new(twist, body));
    }
    for (t, c) in ch.terms() {
        let val = f.eval_words(&t[1..=m]);
        if val.is_zero() {
            continue;
        }
        let (k0, w0) = f.twist().apply_word(t[0]);
        let x = Elem::term(k0 * c, w0).mul(&val);
        for (w, k) in x.terms() {
            let mut v = Vec::with_capacity(n - m + 1);
            v.push(*w);
            v.extend_from_slice(&t[m + 1..]);
            body.add_term(v, k.clone());
        }
    }
    Ok(Chain::new(twist, body))
}

/// Scalar pairing of a trace functional with a chain of matching degree and twist.
pub fn pair<F: Field>(f: &Functional<F>, ch: &Chain<F>) -> Result<F> {
    f.pair(ch)
}
