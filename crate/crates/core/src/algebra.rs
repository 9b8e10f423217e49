//! The algebra A = k_q[SL(2)] in its PBW basis e_{i,j,k}, automorphisms and
//! twisted commutators.

use crate::field::Field;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Gen {
    A,
    B,
    C,
    D,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::B, Gen::C, Gen::D];

    pub fn word(self) -> Word {
        match self {
            Gen::A => Word::new(1, 0, 0),
            Gen::B => Word::new(0, 1, 0),
            Gen::C => Word::new(0, 0, 1),
            Gen::D => Word::new(-1, 0, 0),
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        ['a', 'b', 'c', 'd'][self as usize]
    }
}

/// `a^i b^j c^k` for `i >= 0`, `d^{-i} b^j c^k` for `i < 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    pub i: i32,
    pub j: u32,
    pub k: u32,
}

impl Word {
    pub const ONE: Word = Word { i: 0, j: 0, k: 0 };

    pub const fn new(i: i32, j: u32, k: u32) -> Self {
        Word { i, j, k }
    }

    /// `omega_{r,i} = b^i c^{r-i}`
    pub fn omega(r: u32, i: u32) -> Self {
        assert!(i <= r, "omega index out of range");
        Word::new(0, i, r - i)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn len(&self) -> u32 {
        self.i.unsigned_abs() + self.j + self.k
    }

    /// Grading preserved by multiplication: `(i, j - k)`.
    pub fn weight(&self) -> (i64, i64) {
        (self.i as i64, self.j as i64 - self.k as i64)
    }

    /// Generator string in PBW order.
    pub fn gens(&self) -> Vec<Gen> {
        let mut v = Vec::with_capacity(self.len() as usize);
        let x = if self.i >= 0 { Gen::A } else { Gen::D };
        v.extend(std::iter::repeat_n(x, self.i.unsigned_abs() as usize));
        v.extend(std::iter::repeat_n(Gen::B, self.j as usize));
        v.extend(std::iter::repeat_n(Gen::C, self.k as usize));
        v
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let mut push = |g: char, e: u32| match e {
            0 => {}
            1 => parts.push(g.to_string()),
            _ => parts.push(format!("{g}^{e}")),
        };
        push(if self.i >= 0 { 'a' } else { 'd' }, self.i.unsigned_abs());
        push('b', self.j);
        push('c', self.k);
        write!(f, "{}", parts.join("*"))
    }
}

/// Adds `coef * x * y` to `out`.
pub fn mul_words_into<F: Field>(x: Word, y: Word, coef: &F, out: &mut BTreeMap<Word, F>) {
    if coef.is_zero() {
        return;
    }
    let (i, l) = (x.i as i64, y.i as i64);
    let jb = x.j + y.j;
    let kc = x.k + y.k;
    // b^j c^k past a^l or d^{-l}
    let qe = -l * (x.j as i64 + x.k as i64);
    if i * l >= 0 {
        add_term(out, Word::new((i + l) as i32, jb, kc), coef.clone() * F::q_pow(qe));
        return;
    }
    let m = i.abs().min(l.abs());
    // a^i d^l = prod_s (1 + q^{2(i-s)-1} t) a^{i-m} d^{l-m}, t = bc on the left;
    // d^i a^l likewise with the exponents negated.
    let sign = if i > 0 { 1 } else { -1 };
    let ia = i.abs();
    let mut poly: Vec<F> = vec![F::one()];
    for s in 0..m {
        let c = F::q_pow(sign * (2 * (ia - s) - 1));
        let mut next = poly.clone();
        next.push(F::zero());
        for r in 0..poly.len() {
            next[r + 1] += c.clone() * &poly[r];
        }
        poly = next;
    }
    let p = i + l;
    for (r, pr) in poly.into_iter().enumerate() {
        if pr.is_zero() {
            continue;
        }
        let r = r as i64;
        let c = coef.clone() * &pr * F::q_pow(qe - 2 * r * p);
        add_term(out, Word::new(p as i32, jb + r as u32, kc + r as u32), c);
    }
}

fn add_term<F: Field>(out: &mut BTreeMap<Word, F>, w: Word, c: F) {
    if c.is_zero() {
        return;
    }
    match out.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Finite linear combination of PBW words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Elem<F: Field = Scalar> {
    terms: BTreeMap<Word, F>,
}

impl<F: Field> Default for Elem<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Elem<F> {
    pub fn zero() -> Self {
        Elem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::word(Word::ONE)
    }

    pub fn word(w: Word) -> Self {
        Self::term(F::one(), w)
    }

    pub fn term(c: F, w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn gen(g: Gen) -> Self {
        Self::word(g.word())
    }

    pub fn scalar(c: F) -> Self {
        Self::term(c, Word::ONE)
    }

    pub fn omega(r: u32, i: u32) -> Self {
        Self::word(Word::omega(r, i))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, F)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in it {
            e.add_term(w, c);
        }
        e
    }

    pub fn from_map(terms: BTreeMap<Word, F>) -> Self {
        let mut e = Elem { terms };
        e.terms.retain(|_, c| !c.is_zero());
        e
    }

    pub fn add_term(&mut self, w: Word, c: F) {
        add_term(&mut self.terms, w, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &F)> {
        self.terms.iter()
    }

    pub fn map(&self) -> &BTreeMap<Word, F> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    /// The single word with coefficient one, if that is what this is.
    pub fn as_word(&self) -> Option<Word> {
        if self.terms.len() == 1 {
            let (w, c) = self.terms.iter().next().unwrap();
            if c.is_one() {
                return Some(*w);
            }
        }
        None
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Elem { terms: self.terms.iter().map(|(w, x)| (*w, x.clone() * c)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (w, c) in &o.terms {
            self.add_term(*w, c.clone());
        }
    }

    pub fn add_scaled(&mut self, o: &Self, k: &F) {
        for (w, c) in &o.terms {
            self.add_term(*w, c.clone() * k);
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(o, &-F::one());
        r
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (x, cx) in &self.terms {
            for (y, cy) in &o.terms {
                mul_words_into(*x, *y, &(cx.clone() * cy), &mut out);
            }
        }
        Elem { terms: out }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    pub fn counit(&self) -> F {
        let mut s = F::zero();
        for (w, c) in &self.terms {
            if w.j == 0 && w.k == 0 {
                s += c;
            }
        }
        s
    }

    pub fn max_len(&self) -> u32 {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// Coefficient-wise image in another field; `None` at a pole.
    pub fn convert<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<Elem<G>> {
        let mut r = Elem::zero();
        for (w, c) in &self.terms {
            r.add_term(*w, f(c)?);
        }
        Some(r)
    }
}

impl Elem<Scalar> {
    pub fn specialize<G: Field>(&self) -> Option<Elem<G>> {
        self.convert(G::from_scalar)
    }
}

/// Writes `c * x` as a summand, with its leading sign.
pub(crate) fn write_term<F: Field>(f: &mut fmt::Formatter<'_>, first: bool, c: &F, x: &str, x_is_one: bool) -> fmt::Result {
    let s = c.to_string();
    let atomic = !s.contains(' ') || s.starts_with('(');
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) if atomic => (true, rest.to_string()),
        _ => (false, s.clone()),
    };
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    let body = if atomic { body } else { format!("({body})") };
    if x_is_one {
        write!(f, "{body}")
    } else if body == "1" {
        write!(f, "{x}")
    } else {
        write!(f, "{body} * {x}")
    }
}

impl<F: Field> fmt::Display for Elem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            write_term(f, n == 0, c, &w.to_string(), w.is_one())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AutKind {
    Sigma,
    Tau,
}

/// `sigma_{l,m}: a,b,c,d -> l a, m b, m^-1 c, l^-1 d`;
/// `tau_{l,m}: a,b,c,d -> l a, m^-1 c, m b, l^-1 d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Aut<F: Field = Scalar> {
    pub kind: AutKind,
    pub lambda: F,
    pub mu: F,
}

impl<F: Field> Aut<F> {
    pub fn sigma(lambda: F, mu: F) -> Self {
        assert!(!lambda.is_zero() && !mu.is_zero(), "automorphism parameters must be nonzero");
        Aut { kind: AutKind::Sigma, lambda, mu }
    }

    pub fn tau(lambda: F, mu: F) -> Self {
        assert!(!lambda.is_zero() && !mu.is_zero(), "automorphism parameters must be nonzero");
        Aut { kind: AutKind::Tau, lambda, mu }
    }

    /// `sigma_{q^l, q^m}`
    pub fn sigma_q(l: i64, m: i64) -> Self {
        Self::sigma(F::q_pow(l), F::q_pow(m))
    }

    pub fn identity() -> Self {
        Self::sigma(F::one(), F::one())
    }

    /// The modular automorphism `sigma_{q^-2,1}`.
    pub fn modular() -> Self {
        Self::sigma_q(-2, 0)
    }

    pub fn is_identity(&self) -> bool {
        self.kind == AutKind::Sigma && self.lambda.is_one() && self.mu.is_one()
    }

    pub fn is_sigma(&self) -> bool {
        self.kind == AutKind::Sigma
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &Self) -> Self {
        let lambda = self.lambda.clone() * &inner.lambda;
        match (self.kind, inner.kind) {
            (AutKind::Sigma, AutKind::Sigma) => Self::sigma(lambda, self.mu.clone() * &inner.mu),
            (AutKind::Tau, AutKind::Tau) => Self::sigma(lambda, self.mu.div(&inner.mu).unwrap()),
            (AutKind::Sigma, AutKind::Tau) => Self::tau(lambda, self.mu.clone() * &inner.mu),
            (AutKind::Tau, AutKind::Sigma) => Self::tau(lambda, self.mu.div(&inner.mu).unwrap()),
        }
    }

    pub fn inverse(&self) -> Self {
        let li = self.lambda.inverse().unwrap();
        match self.kind {
            AutKind::Sigma => Self::sigma(li, self.mu.inverse().unwrap()),
            AutKind::Tau => Self::tau(li, self.mu.clone()),
        }
    }

    pub fn apply_word(&self, w: Word) -> (F, Word) {
        let e = w.j as i64 - w.k as i64;
        match self.kind {
            AutKind::Sigma => (self.lambda.pow(w.i as i64) * self.mu.pow(e), w),
            AutKind::Tau => (self.lambda.pow(w.i as i64) * self.mu.pow(-e), Word::new(w.i, w.k, w.j)),
        }
    }

    pub fn apply(&self, x: &Elem<F>) -> Elem<F> {
        if self.is_identity() {
            return x.clone();
        }
        let mut r = Elem::zero();
        for (w, c) in x.terms() {
            let (s, w2) = self.apply_word(*w);
            r.add_term(w2, s * c);
        }
        r
    }

    pub fn convert<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<Aut<G>> {
        Some(Aut { kind: self.kind, lambda: f(&self.lambda)?, mu: f(&self.mu)? })
    }
}

impl Aut<Scalar> {
    pub fn specialize<G: Field>(&self) -> Option<Aut<G>> {
        self.convert(G::from_scalar)
    }
}

impl<F: Field> fmt::Display for Aut<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            AutKind::Sigma => "sigma",
            AutKind::Tau => "tau",
        };
        write!(f, "{k}({}, {})", self.lambda, self.mu)
    }
}

/// `x g - aut(g) x`
pub fn twisted_commutator<F: Field>(x: &Elem<F>, g: Gen, aut: &Aut<F>) -> Elem<F> {
    let ge = Elem::gen(g);
    x.mul(&ge).sub(&aut.apply(&ge).mul(x))
}

/// The seven defining relations, each as an element that must vanish.
pub fn relations<F: Field>() -> Vec<(&'static str, Elem<F>)> {
    let [a, b, c, d] = Gen::ALL.map(Elem::<F>::gen);
    let q = F::q_pow(1);
    let qi = F::q_pow(-1);
    vec![
        ("ab - q ba", a.mul(&b).sub(&b.mul(&a).scale(&q))),
        ("ac - q ca", a.mul(&c).sub(&c.mul(&a).scale(&q))),
        ("bd - q db", b.mul(&d).sub(&d.mul(&b).scale(&q))),
        ("cd - q dc", c.mul(&d).sub(&d.mul(&c).scale(&q))),
        ("bc - cb", b.mul(&c).sub(&c.mul(&b))),
        ("ad - q bc - 1", a.mul(&d).sub(&b.mul(&c).scale(&q)).sub(&Elem::one())),
        ("da - q^-1 bc - 1", d.mul(&a).sub(&b.mul(&c).scale(&qi)).sub(&Elem::one())),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Elem<Scalar>;

    fn q(e: i64) -> Scalar {
        Scalar::q_pow(e)
    }

    fn w(i: i32, j: u32, k: u32) -> E {
        E::word(Word::new(i, j, k))
    }

    #[test]
    fn generator_products() {
        let [a, b, _c, d] = Gen::ALL.map(E::gen);
        assert_eq!(b.mul(&a), w(1, 1, 0).scale(&q(-1)));
        assert_eq!(a.mul(&d), w(0, 0, 0).add(&w(0, 1, 1).scale(&q(1))));
        assert_eq!(d.mul(&a), w(0, 0, 0).add(&w(0, 1, 1).scale(&q(-1))));
        assert_eq!(a.mul(&a).mul(&d), w(1, 0, 0).add(&w(1, 1, 1).scale(&q(1))));
    }

    #[test]
    fn relations_vanish() {
        for (name, r) in relations::<Scalar>() {
            assert!(r.is_zero(), "{name}: {r}");
        }
    }

    #[test]
    fn automorphism_examples() {
        let l = Scalar::from_i64(3);
        let m = Scalar::from_i64(5);
        let s = Aut::sigma(l.clone(), m.clone());
        assert_eq!(Aut::<Scalar>::modular().apply(&w(1, 1, 0)), w(1, 1, 0).scale(&q(-2)));
        assert_eq!(s.apply(&w(-1, 0, 1)), w(-1, 0, 1).scale(&(l.inverse().unwrap() * m.inverse().unwrap())));
        let t = Aut::tau(l, m.clone());
        assert_eq!(t.apply(&E::gen(Gen::B)), E::gen(Gen::C).scale(&m.inverse().unwrap()));
    }

    #[test]
    fn composition_rules() {
        let x = Aut::sigma(Scalar::from_i64(2), q(1));
        let y = Aut::tau(q(-1), Scalar::from_i64(3));
        let probe = w(2, 1, 3).add(&w(-1, 2, 0));
        for f in [&x, &y] {
            for g in [&x, &y] {
                assert_eq!(f.compose(g).apply(&probe), f.apply(&g.apply(&probe)));
            }
            assert_eq!(f.inverse().apply(&f.apply(&probe)), probe);
        }
    }

    #[test]
    fn twisted_commutator_examples() {
        let (l, m) = (Scalar::from_i64(7), Scalar::from_i64(11));
        let s = Aut::sigma(l.clone(), m.clone());
        let one = Scalar::one();
        assert_eq!(twisted_commutator(&w(0, 1, 0), Gen::B, &s), w(0, 2, 0).scale(&(one.clone() - &m)));
        let li = l.inverse().unwrap();
        let expect = w(0, 0, 0).scale(&(one.clone() - &li)).add(&w(0, 1, 1).scale(&(q(1) - li * q(-1))));
        assert_eq!(twisted_commutator(&w(1, 0, 0), Gen::D, &s), expect);
        assert!(twisted_commutator(&E::one(), Gen::A, &Aut::identity()).is_zero());
    }

    #[test]
    fn counit_examples() {
        let x = E::gen(Gen::A).add(&w(0, 1, 1).scale(&q(1)));
        assert!(x.counit().is_one());
        assert!(w(-2, 0, 0).counit().is_one());
        assert!(E::omega(3, 1).counit().is_zero());
    }

    #[test]
    fn display() {
        let x = E::gen(Gen::B).mul(&E::gen(Gen::A));
        assert_eq!(x.to_string(), "q^-1 * a*b");
        let y = w(-2, 1, 0).scale(&(q(1) - q(-1))).add(&w(0, 0, 0).scale(&Scalar::from_i64(-2)));
        assert_eq!(y.to_string(), "(q - q^-1) * d^2*b - 2");
    }
}
