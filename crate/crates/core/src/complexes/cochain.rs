//! Evaluable twisted cochains `C^m(A, σA)`.
//!
//! A cochain is an expression tree; evaluation expands the arguments into
//! basis words and is multilinear by construction.

use crate::algebra::{Aut, Elem, Gen, Word};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::scalar::Scalar;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

#[derive(Debug)]
enum Node<F: Field> {
    /// Twisted derivation given by its values on a, b, c, d.
    Derivation { values: [Elem<F>; 4], cache: Mutex<HashMap<Word, Elem<F>>> },
    /// A twisted central element, as a 0-cochain.
    Central(Elem<F>),
    /// `σ - id`
    AutDiff(Aut<F>),
    Cup(Cochain<F>, Cochain<F>),
    /// `outer ∘ inner` for two 1-cochains.
    Compose(Cochain<F>, Cochain<F>),
    /// `σ^{-1} ∘ f ∘ σ^{⊗m}`
    Conjugate(Aut<F>, Cochain<F>),
    Combination(Vec<(F, Cochain<F>)>),
    Coboundary(Cochain<F>),
}

#[derive(Clone, Debug)]
pub struct Cochain<F: Field = Scalar> {
    degree: usize,
    twist: Aut<F>,
    label: Option<Arc<str>>,
    node: Arc<Node<F>>,
}

/// Leibniz expansion of `∂(g_1 ⋯ g_n)`.
fn leibniz<F: Field>(gs: &[Gen], twist: &Aut<F>, values: &[Elem<F>; 4]) -> Elem<F> {
    let mut r = Elem::zero();
    let mut prefix = Elem::one();
    for (s, g) in gs.iter().enumerate() {
        let mut suffix = Elem::one();
        for h in &gs[s + 1..] {
            suffix = suffix.mul(&Elem::gen(*h));
        }
        r.add_assign(&twist.apply(&prefix).mul(&values[g.index()]).mul(&suffix));
        prefix = prefix.mul(&Elem::gen(*g));
    }
    r
}

/// Generator sequences of the defining relations, as signed sums.
fn relation_words<F: Field>() -> Vec<Vec<(F, Vec<Gen>)>> {
    use Gen::*;
    let q = F::q_pow(1);
    let qi = F::q_pow(-1);
    let one = F::one;
    vec![
        vec![(one(), vec![A, B]), (-q.clone(), vec![B, A])],
        vec![(one(), vec![A, C]), (-q.clone(), vec![C, A])],
        vec![(one(), vec![B, D]), (-q.clone(), vec![D, B])],
        vec![(one(), vec![C, D]), (-q.clone(), vec![D, C])],
        vec![(one(), vec![B, C]), (-one(), vec![C, B])],
        vec![(one(), vec![A, D]), (-q, vec![B, C]), (-one(), vec![])],
        vec![(one(), vec![D, A]), (-qi, vec![B, C]), (-one(), vec![])],
    ]
}

impl<F: Field> Cochain<F> {
    fn build(degree: usize, twist: Aut<F>, node: Node<F>) -> Self {
        Cochain { degree, twist, label: None, node: Arc::new(node) }
    }

    /// The twisted derivation `∂(xy) = σ(x)∂(y) + ∂(x)y` with the given
    /// generator values; rejected unless it respects the defining relations.
    pub fn derivation(values: [Elem<F>; 4], twist: Aut<F>) -> Result<Self> {
        for rel in relation_words::<F>() {
            let mut s = Elem::zero();
            for (c, gs) in &rel {
                s.add_scaled(&leibniz(gs, &twist, &values), c);
            }
            if !s.is_zero() {
                return Err(Error::Domain(format!("values do not define a {twist}-twisted derivation: relation maps to {s}")));
            }
        }
        Ok(Self::build(1, twist, Node::Derivation { values, cache: Mutex::new(HashMap::new()) }))
    }

    /// A 0-cochain; `z` should satisfy `σ(x) z = z x`.
    pub fn central(z: Elem<F>, twist: Aut<F>) -> Self {
        Self::build(0, twist, Node::Central(z))
    }

    pub fn is_twisted_central(z: &Elem<F>, twist: &Aut<F>) -> bool {
        Gen::ALL.iter().all(|g| {
            let x = Elem::gen(*g);
            twist.apply(&x).mul(z) == z.mul(&x)
        })
    }

    /// `σ - id`, a σ-twisted derivation.
    pub fn aut_diff(s: Aut<F>) -> Self {
        Self::build(1, s.clone(), Node::AutDiff(s))
    }

    /// `(f ⌣ g)(a_1..a_{m+n}) = τ(f(a_1..a_m)) g(a_{m+1}..)`, twisted by `τ ∘ σ`.
    pub fn cup(&self, g: &Self) -> Self {
        Self::build(self.degree + g.degree, g.twist.compose(&self.twist), Node::Cup(self.clone(), g.clone()))
    }

    /// `self ∘ inner` for 1-cochains.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.degree != 1 || inner.degree != 1 {
            return Err(Error::Degree("composition needs two 1-cochains".into()));
        }
        Ok(Self::build(1, self.twist.compose(&inner.twist), Node::Compose(self.clone(), inner.clone())))
    }

    /// `s^{-1} ∘ self ∘ s`
    pub fn conjugate(&self, s: &Aut<F>) -> Self {
        let twist = s.inverse().compose(&self.twist).compose(s);
        Self::build(self.degree, twist, Node::Conjugate(s.clone(), self.clone()))
    }

    pub fn combination(parts: Vec<(F, Self)>) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::Domain("empty combination".into()))?;
        let (degree, twist) = (first.1.degree, first.1.twist.clone());
        for (_, f) in &parts {
            if f.degree != degree {
                return Err(Error::Degree("combination of cochains of different degrees".into()));
            }
            if f.twist != twist {
                return Err(Error::TwistMismatch { expected: twist.to_string(), got: f.twist.to_string() });
            }
        }
        Ok(Self::build(degree, twist, Node::Combination(parts)))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Self::combination(vec![(F::one(), self.clone()), (F::one(), o.clone())])
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        Self::combination(vec![(F::one(), self.clone()), (-F::one(), o.clone())])
    }

    pub fn scale(&self, k: F) -> Self {
        Self::build(self.degree, self.twist.clone(), Node::Combination(vec![(k, self.clone())]))
    }

    /// The Hochschild coboundary `b f`.
    pub fn coboundary(&self) -> Self {
        Self::build(self.degree + 1, self.twist.clone(), Node::Coboundary(self.clone()))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(Arc::from(label.into()));
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn twist(&self) -> &Aut<F> {
        &self.twist
    }

    /// The element for a central 0-cochain.
    pub fn as_central(&self) -> Option<&Elem<F>> {
        match &*self.node {
            Node::Central(z) => Some(z),
            _ => None,
        }
    }

    /// Generator values of a 1-cochain.
    pub fn generator_values(&self) -> Result<[Elem<F>; 4]> {
        if self.degree != 1 {
            return Err(Error::Arity { expected: 1, got: self.degree });
        }
        Ok(Gen::ALL.map(|g| self.eval_words(&[g.word()])))
    }

    pub fn eval(&self, args: &[Elem<F>]) -> Result<Elem<F>> {
        if args.len() != self.degree {
            return Err(Error::Arity { expected: self.degree, got: args.len() });
        }
        Ok(self.eval_multi(args))
    }

    fn eval_multi(&self, args: &[Elem<F>]) -> Elem<F> {
        let mut r = Elem::zero();
        let mut ws = Vec::with_capacity(args.len());
        self.expand(args, &mut ws, F::one(), &mut r);
        r
    }

    fn expand(&self, args: &[Elem<F>], ws: &mut Vec<Word>, k: F, out: &mut Elem<F>) {
        if ws.len() == args.len() {
            out.add_scaled(&self.eval_words(ws), &k);
            return;
        }
        for (w, c) in args[ws.len()].terms() {
            ws.push(*w);
            self.expand(args, ws, k.clone() * c, out);
            ws.pop();
        }
    }

    /// Evaluation on basis words; `ws.len()` must equal the degree.
    pub fn eval_words(&self, ws: &[Word]) -> Elem<F> {
        assert_eq!(ws.len(), self.degree, "cochain arity mismatch");
        match &*self.node {
            Node::Derivation { values, cache } => {
                if let Some(x) = cache.lock().unwrap().get(&ws[0]) {
                    return x.clone();
                }
                let x = leibniz(&ws[0].gens(), &self.twist, values);
                cache.lock().unwrap().insert(ws[0], x.clone());
                x
            }
            Node::Central(z) => z.clone(),
            Node::AutDiff(s) => {
                let (c, w) = s.apply_word(ws[0]);
                Elem::term(c, w).sub(&Elem::word(ws[0]))
            }
            Node::Cup(f, g) => {
                let m = f.degree;
                let x = f.eval_words(&ws[..m]);
                if x.is_zero() {
                    return x;
                }
                let y = g.eval_words(&ws[m..]);
                g.twist.apply(&x).mul(&y)
            }
            Node::Compose(o, i) => o.eval_multi(&[i.eval_words(ws)]),
            Node::Conjugate(s, f) => {
                let args: Vec<Elem<F>> = ws
                    .iter()
                    .map(|w| {
                        let (c, w2) = s.apply_word(*w);
                        Elem::term(c, w2)
                    })
                    .collect();
                s.inverse().apply(&f.eval_multi(&args))
            }
            Node::Combination(parts) => {
                let mut r = Elem::zero();
                for (c, f) in parts {
                    r.add_scaled(&f.eval_words(ws), c);
                }
                r
            }
            Node::Coboundary(f) => {
                let n = f.degree;
                let mut r = Elem::zero();
                let first = f.eval_words(&ws[1..]);
                r.add_assign(&f.twist.apply(&Elem::word(ws[0])).mul(&first));
                for j in 1..=n {
                    let prod = Elem::word(ws[j - 1]).mul(&Elem::word(ws[j]));
                    let mut args: Vec<Elem<F>> = ws[..j - 1].iter().map(|w| Elem::word(*w)).collect();
                    args.push(prod);
                    args.extend(ws[j + 1..].iter().map(|w| Elem::word(*w)));
                    let v = f.eval_multi(&args);
                    if j % 2 == 0 {
                        r.add_assign(&v);
                    } else {
                        r = r.sub(&v);
                    }
                }
                let last = f.eval_words(&ws[..n]).mul(&Elem::word(ws[n]));
                if (n + 1) % 2 == 0 {
                    r.add_assign(&last);
                } else {
                    r = r.sub(&last);
                }
                r
            }
        }
    }

    pub fn convert<G: Field>(&self, f: &impl Fn(&F) -> Option<G>) -> Option<Cochain<G>> {
        let twist = self.twist.convert(f)?;
        let node = match &*self.node {
            Node::Derivation { values, .. } => {
                let [a, b, c, d] = values;
                Node::Derivation {
                    values: [a.convert(f)?, b.convert(f)?, c.convert(f)?, d.convert(f)?],
                    cache: Mutex::new(HashMap::new()),
                }
            }
            Node::Central(z) => Node::Central(z.convert(f)?),
            Node::AutDiff(s) => Node::AutDiff(s.convert(f)?),
            Node::Cup(x, y) => Node::Cup(x.convert(f)?, y.convert(f)?),
            Node::Compose(x, y) => Node::Compose(x.convert(f)?, y.convert(f)?),
            Node::Conjugate(s, x) => Node::Conjugate(s.convert(f)?, x.convert(f)?),
            Node::Combination(ps) => {
                let mut v = Vec::with_capacity(ps.len());
                for (c, x) in ps {
                    v.push((f(c)?, x.convert(f)?));
                }
                Node::Combination(v)
            }
            Node::Coboundary(x) => Node::Coboundary(x.convert(f)?),
        };
        Some(Cochain { degree: self.degree, twist, label: self.label.clone(), node: Arc::new(node) })
    }
}

impl Cochain<Scalar> {
    pub fn specialize<G: Field>(&self) -> Option<Cochain<G>> {
        self.convert(&G::from_scalar)
    }
}

impl<F: Field> fmt::Display for Cochain<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            return write!(f, "{l}");
        }
        match &*self.node {
            Node::Derivation { values, .. } => {
                write!(f, "der[")?;
                for (n, (g, x)) in Gen::ALL.iter().zip(values).enumerate() {
                    if n > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{} -> {}", g.name(), x)?;
                }
                write!(f, "]")
            }
            Node::Central(z) => write!(f, "[{z}]"),
            Node::AutDiff(s) => write!(f, "({s} - id)"),
            Node::Cup(x, y) => write!(f, "{x} ~ {y}"),
            Node::Compose(x, y) => write!(f, "({x}) o ({y})"),
            Node::Conjugate(s, x) => write!(f, "{s}^-1 o ({x}) o {s}"),
            Node::Combination(ps) => {
                for (n, (c, x)) in ps.iter().enumerate() {
                    if n > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({c}) ({x})")?;
                }
                Ok(())
            }
            Node::Coboundary(x) => write!(f, "b({x})"),
        }
    }
}
