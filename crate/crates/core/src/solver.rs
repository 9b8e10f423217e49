//! Finite-window linear algebra: bounding chains for `b(x) = y`, inner
//! derivation witnesses and independence modulo boundaries.
//!
//! Columns are the tuples of a [`TruncationBox`]. The boundary is homogeneous
//! for the grading `(i, j - k)`, so only tuples of a weight occurring in the
//! target are enumerated. Systems are first eliminated over [`Fp`]; the exact
//! elimination over `Q(v)` then runs on the columns found independent there.

use crate::algebra::{Aut, Elem, Gen, Word};
use crate::complexes::{Chain, Cochain};
use crate::error::{Error, Result};
use crate::field::{Field, Fp};
use crate::scalar::Scalar;
use crate::tensor::{Tensor, Tuple};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

/// Window of words `|i| <= max_abs_i, j <= max_j, k <= max_k` in chain
/// degrees up to `max_degree`. `max_len` caps the total length
/// `Σ (|i| + j + k)` of a tuple; when unset, the solver uses the target's
/// total length plus two.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TruncationBox {
    pub max_abs_i: u32,
    pub max_j: u32,
    pub max_k: u32,
    pub max_degree: u32,
    pub max_len: Option<u32>,
}

impl Default for TruncationBox {
    fn default() -> Self {
        TruncationBox::new(2, 3, 3)
    }
}

impl TruncationBox {
    pub const fn new(max_abs_i: u32, max_j: u32, max_k: u32) -> Self {
        TruncationBox { max_abs_i, max_j, max_k, max_degree: 4, max_len: None }
    }

    pub fn with_degree(mut self, d: u32) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_len(mut self, l: u32) -> Self {
        self.max_len = Some(l);
        self
    }

    pub fn contains(&self, w: Word) -> bool {
        w.i.unsigned_abs() <= self.max_abs_i && w.j <= self.max_j && w.k <= self.max_k
    }

    /// Words of the box, in `Word` order.
    pub fn words(&self) -> Vec<Word> {
        let (bi, bj, bk) = (self.max_abs_i as i32, self.max_j, self.max_k);
        let mut v = Vec::new();
        for i in -bi..=bi {
            for j in 0..=bj {
                for k in 0..=bk {
                    v.push(Word::new(i, j, k));
                }
            }
        }
        v.sort();
        v
    }
}

impl fmt::Display for TruncationBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.max_abs_i, self.max_j, self.max_k, self.max_degree)?;
        if let Some(l) = self.max_len {
            write!(f, ",{l}")?;
        }
        Ok(())
    }
}

/// `I,J,K[,D[,L]]`
impl FromStr for TruncationBox {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if !(3..=5).contains(&parts.len()) {
            return Err(Error::Parse { pos: 0, msg: format!("box `{s}` should be I,J,K[,D[,L]]") });
        }
        let mut nums = Vec::new();
        let mut pos = 0;
        for p in &parts {
            let n = p.parse::<u32>().map_err(|_| Error::Parse { pos, msg: format!("`{p}` is not a natural number") })?;
            nums.push(n);
            pos += p.len() + 1;
        }
        let mut b = TruncationBox::new(nums[0], nums[1], nums[2]);
        if let Some(d) = nums.get(3) {
            b.max_degree = *d;
        }
        b.max_len = nums.get(4).copied();
        Ok(b)
    }
}

/// Whether tuples with a unit in positions `>= 1` are columns, and whether
/// boundaries are compared after normalisation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Complex {
    Unnormalised,
    Normalised,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<F: Field = Scalar> {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), F>,
    pub row_tuples: Vec<Tuple>,
    pub col_tuples: Vec<Tuple>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn get(&self, r: usize, c: usize) -> F {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(F::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &F)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Column `c` as a map from row tuple to coefficient.
    pub fn column(&self, c: usize) -> BTreeMap<&Tuple, &F> {
        self.entries.range((0, c)..).filter(|((_, cc), _)| *cc == c).map(|((r, _), x)| (&self.row_tuples[*r], x)).collect()
    }
}

#[cfg(test)]
fn total_len(t: &[Word]) -> u32 {
    t.iter().map(Word::len).sum()
}

fn total_weight(t: &[Word]) -> (i64, i64) {
    t.iter().fold((0, 0), |(a, b), w| {
        let (x, y) = w.weight();
        (a + x, b + y)
    })
}

/// Tuples of the given arity with factors in the box, total length at most
/// `cap` and, if given, total weight in `weights`.
fn enumerate(arity: usize, bx: &TruncationBox, cap: u32, weights: Option<&BTreeSet<(i64, i64)>>, complex: Complex) -> Vec<Tuple> {
    let words: Vec<Word> = bx.words().into_iter().filter(|w| w.len() <= cap).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(arity);
    fn rec(
        words: &[Word],
        arity: usize,
        budget: u32,
        weight: (i64, i64),
        weights: Option<&BTreeSet<(i64, i64)>>,
        complex: Complex,
        cur: &mut Vec<Word>,
        out: &mut Vec<Tuple>,
    ) {
        if let Some(ws) = weights {
            let reachable = ws.iter().any(|(x, y)| ((x - weight.0).abs() + (y - weight.1).abs()) as u32 <= budget);
            if !reachable {
                return;
            }
        }
        if cur.len() == arity {
            if weights.is_none_or(|ws| ws.contains(&weight)) {
                out.push(cur.clone());
            }
            return;
        }
        for w in words {
            if w.len() > budget || (complex == Complex::Normalised && !cur.is_empty() && w.is_one()) {
                continue;
            }
            let (x, y) = w.weight();
            cur.push(*w);
            rec(words, arity, budget - w.len(), (weight.0 + x, weight.1 + y), weights, complex, cur, out);
            cur.pop();
        }
    }
    rec(&words, arity, cap, (0, 0), weights, complex, &mut cur, &mut out);
    out
}

fn image(t: &Tuple, twist: &Aut<Scalar>, complex: Complex) -> Chain {
    let b = Chain::tuple(twist.clone(), t.clone()).boundary().expect("positive degree");
    match complex {
        Complex::Unnormalised => b,
        Complex::Normalised => b.normalize(),
    }
}

fn assemble<F: Field>(
    cols: &[Tuple],
    images: impl Iterator<Item = Chain<F>>,
    extra_rows: &[Tuple],
) -> SparseMatrix<F> {
    let mut index: HashMap<Tuple, usize> = HashMap::new();
    let mut row_tuples = Vec::new();
    let mut entries = BTreeMap::new();
    let mut row_of = |t: &Tuple, rt: &mut Vec<Tuple>| -> usize {
        *index.entry(t.clone()).or_insert_with(|| {
            rt.push(t.clone());
            rt.len() - 1
        })
    };
    for t in extra_rows {
        row_of(t, &mut row_tuples);
    }
    for (c, img) in images.enumerate() {
        for (t, x) in img.terms() {
            let r = row_of(t, &mut row_tuples);
            entries.insert((r, c), x.clone());
        }
    }
    SparseMatrix { rows: row_tuples.len(), cols: cols.len(), entries, row_tuples, col_tuples: cols.to_vec() }
}

/// The boundary `C_d → C_{d-1}` on the tuples of the box. Rows are the
/// tuples actually hit, so no image term is dropped: each face multiplies one
/// adjacent pair, which widens the box by at most one in each direction.
pub fn boundary_matrix<F: Field>(degree: usize, twist: &Aut<F>, bx: &TruncationBox) -> SparseMatrix<F> {
    if degree == 0 || degree > bx.max_degree as usize {
        return SparseMatrix { rows: 0, cols: 0, entries: BTreeMap::new(), row_tuples: vec![], col_tuples: vec![] };
    }
    let cap = bx.max_len.unwrap_or(u32::MAX);
    let cols = enumerate(degree + 1, bx, cap, None, Complex::Unnormalised);
    let imgs = cols.iter().map(|t| Chain::tuple(twist.clone(), t.clone()).boundary().expect("positive degree"));
    assemble(&cols, imgs, &[])
}

/// Pivot choice during elimination; verdicts do not depend on it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PivotRule {
    /// The entry of least [`Field::weight`], ties broken by row order.
    LeastWeight,
    /// The first nonzero row.
    First,
}

type SparseVec<F> = BTreeMap<usize, F>;

fn axpy<F: Field>(y: &mut SparseVec<F>, k: &F, x: &SparseVec<F>) {
    for (i, v) in x {
        let e = y.entry(*i).or_insert_with(F::zero);
        *e -= k.clone() * v;
        if e.is_zero() {
            y.remove(i);
        }
    }
}

/// Incremental column echelon form with the combination of original columns
/// behind each pivot.
struct Echelon<F: Field> {
    pivots: Vec<(usize, SparseVec<F>, SparseVec<F>)>,
    rule: PivotRule,
}

impl<F: Field> Echelon<F> {
    fn new(rule: PivotRule) -> Self {
        Echelon { pivots: Vec::new(), rule }
    }

    fn reduce(&self, v: &mut SparseVec<F>, combo: &mut SparseVec<F>) {
        for (row, p, pc) in &self.pivots {
            if let Some(c) = v.get(row).cloned() {
                axpy(v, &c, p);
                axpy(combo, &c, pc);
            }
        }
    }

    /// Adds column `idx`; returns the reduced remainder's combination when
    /// the column is dependent on earlier ones.
    fn insert(&mut self, idx: usize, mut v: SparseVec<F>) -> Option<SparseVec<F>> {
        let mut combo = SparseVec::new();
        combo.insert(idx, F::one());
        self.reduce(&mut v, &mut combo);
        if v.is_empty() {
            return Some(combo);
        }
        let row = match self.rule {
            PivotRule::First => *v.keys().next().unwrap(),
            PivotRule::LeastWeight => *v.iter().min_by_key(|(r, x)| (x.weight(), **r)).unwrap().0,
        };
        let inv = v[&row].inverse().expect("nonzero pivot");
        for x in v.values_mut() {
            *x *= &inv;
        }
        for x in combo.values_mut() {
            *x *= &inv;
        }
        self.pivots.push((row, v, combo));
        None
    }

    /// Coefficients `c` with `Σ c_i col_i = target`, if any.
    fn express(&self, target: &SparseVec<F>) -> Option<SparseVec<F>> {
        let mut v = target.clone();
        let mut combo = SparseVec::new();
        self.reduce(&mut v, &mut combo);
        if !v.is_empty() {
            return None;
        }
        for x in combo.values_mut() {
            *x = -x.clone();
        }
        Some(combo)
    }
}

/// How a verdict was reached.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    /// Exact elimination over `Q(v)`.
    Exact,
    /// Elimination over `F_p` at a fixed `v`; used for negative verdicts on
    /// systems too large for exact confirmation.
    Modular,
}

/// Systems with at most this many columns get exact confirmation of a
/// negative modular verdict.
pub const EXACT_LIMIT: usize = 600;

struct Solved {
    coeffs: Option<SparseVec<Scalar>>,
    evidence: Evidence,
}

fn to_fp(v: &SparseVec<Scalar>) -> Option<SparseVec<Fp>> {
    let mut r = SparseVec::new();
    for (i, x) in v {
        let y = Fp::from_scalar(x)?;
        if !y.is_zero() {
            r.insert(*i, y);
        }
    }
    Some(r)
}

fn exact_solve(cols: &[SparseVec<Scalar>], which: &[usize], target: &SparseVec<Scalar>, rule: PivotRule) -> Option<SparseVec<Scalar>> {
    let mut e = Echelon::new(rule);
    for &i in which {
        e.insert(i, cols[i].clone());
    }
    e.express(target)
}

/// Solves `Σ c_i cols_i = target`.
fn solve_columns(cols: &[SparseVec<Scalar>], target: &SparseVec<Scalar>, rule: PivotRule) -> Solved {
    if target.is_empty() {
        return Solved { coeffs: Some(SparseVec::new()), evidence: Evidence::Exact };
    }
    let all: Vec<usize> = (0..cols.len()).collect();
    let modular: Option<(Vec<usize>, bool)> = (|| {
        let mut e = Echelon::<Fp>::new(rule);
        let mut indep = Vec::new();
        for (i, c) in cols.iter().enumerate() {
            if e.insert(i, to_fp(c)?).is_none() {
                indep.push(i);
            }
        }
        Some((indep, e.express(&to_fp(target)?).is_some()))
    })();
    match modular {
        Some((indep, true)) => {
            if let Some(c) = exact_solve(cols, &indep, target, rule) {
                return Solved { coeffs: Some(c), evidence: Evidence::Exact };
            }
            Solved { coeffs: exact_solve(cols, &all, target, rule), evidence: Evidence::Exact }
        }
        Some((_, false)) if cols.len() > EXACT_LIMIT => Solved { coeffs: None, evidence: Evidence::Modular },
        _ => Solved { coeffs: exact_solve(cols, &all, target, rule), evidence: Evidence::Exact },
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    WitnessFound,
    /// Evidence only: a witness may exist outside the box.
    NoWitnessInBox,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveReport {
    pub status: SolveStatus,
    pub witness: Option<Chain>,
    pub bx: TruncationBox,
    pub complex: Complex,
    pub columns: usize,
    pub rows: usize,
    pub evidence: Evidence,
}

impl SolveReport {
    pub fn found(&self) -> bool {
        self.status == SolveStatus::WitnessFound
    }
}

fn weights_of(ch: &Chain) -> BTreeSet<(i64, i64)> {
    ch.terms().map(|(t, _)| total_weight(t)).collect()
}

fn project(ch: &Chain, complex: Complex) -> Chain {
    match complex {
        Complex::Unnormalised => ch.clone(),
        Complex::Normalised => ch.normalize(),
    }
}

/// Linear system `b(Σ c_t t) = target` over the box columns.
struct System {
    cols: Vec<Tuple>,
    vecs: Vec<SparseVec<Scalar>>,
    targets: Vec<SparseVec<Scalar>>,
    rows: usize,
}

fn build_system(degree: usize, twist: &Aut<Scalar>, targets: &[Chain], bx: &TruncationBox, cap: u32, complex: Complex) -> System {
    let mut weights = BTreeSet::new();
    for t in targets {
        weights.extend(weights_of(t));
    }
    let cols = if degree > bx.max_degree as usize || weights.is_empty() {
        Vec::new()
    } else {
        enumerate(degree + 1, bx, cap, Some(&weights), complex)
    };
    let mut index: HashMap<Tuple, usize> = HashMap::new();
    let mut row = |t: &Tuple| -> usize {
        let n = index.len();
        *index.entry(t.clone()).or_insert(n)
    };
    let mut sv = |ch: &Chain| -> SparseVec<Scalar> { ch.terms().map(|(t, x)| (row(t), x.clone())).collect() };
    let targets: Vec<SparseVec<Scalar>> = targets.iter().map(&mut sv).collect();
    let vecs: Vec<SparseVec<Scalar>> = cols.iter().map(|t| sv(&image(t, twist, complex))).collect();
    System { cols, vecs, targets, rows: index.len() }
}

fn witness_chain(twist: &Aut<Scalar>, degree: usize, cols: &[Tuple], coeffs: &SparseVec<Scalar>) -> Chain {
    let body = Tensor::from_terms(degree + 1, coeffs.iter().map(|(i, c)| (cols[*i].clone(), c.clone())));
    Chain::new(twist.clone(), body)
}

/// Searches the box for `x` with `b(x) = target` in the unnormalised complex.
pub fn solve_boundary(target: &Chain, bx: &TruncationBox) -> SolveReport {
    solve_boundary_in(target, bx, Complex::Unnormalised, PivotRule::LeastWeight)
}

/// As [`solve_boundary`], in the chosen complex and with the chosen pivoting.
/// In the normalised complex the identity checked is
/// `normalize(b(x)) = normalize(target)`.
pub fn solve_boundary_in(target: &Chain, bx: &TruncationBox, complex: Complex, rule: PivotRule) -> SolveReport {
    let degree = target.degree() + 1;
    let twist = target.twist().clone();
    let tgt = project(target, complex);
    let cap = bx.max_len.unwrap_or(tgt.max_len() + 2);
    let sys = build_system(degree, &twist, std::slice::from_ref(&tgt), bx, cap, complex);
    let solved = solve_columns(&sys.vecs, &sys.targets[0], rule);
    let mut report = SolveReport {
        status: SolveStatus::NoWitnessInBox,
        witness: None,
        bx: *bx,
        complex,
        columns: sys.cols.len(),
        rows: sys.rows,
        evidence: solved.evidence,
    };
    if let Some(c) = solved.coeffs {
        let w = witness_chain(&twist, degree, &sys.cols, &c);
        let check = project(&w.boundary().expect("positive degree"), complex);
        assert_eq!(check, tgt, "solver witness failed re-verification");
        report.status = SolveStatus::WitnessFound;
        report.witness = Some(w);
    }
    report
}

/// Searches the box for `m` with `f(x) = σ(x) m - m x` on the generators,
/// `σ` the twist of the degree-1 cochain `f`.
pub fn inner_witness(f: &Cochain, bx: &TruncationBox) -> Result<SolveReport> {
    if f.degree() != 1 {
        return Err(Error::Degree(format!("inner_witness needs a 1-cochain, got degree {}", f.degree())));
    }
    let sigma = f.twist().clone();
    let vals: Vec<Elem> = Gen::ALL.iter().map(|g| f.eval_words(&[g.word()])).collect();
    let mut shifts = BTreeSet::new();
    for (g, v) in Gen::ALL.iter().zip(&vals) {
        let (gi, gj) = g.word().weight();
        for (w, _) in v.terms() {
            let (x, y) = w.weight();
            shifts.insert((x - gi, y - gj));
        }
    }
    let cap = bx.max_len.unwrap_or(u32::MAX);
    let mut report = SolveReport {
        status: SolveStatus::NoWitnessInBox,
        witness: None,
        bx: *bx,
        complex: Complex::Unnormalised,
        columns: 0,
        rows: 0,
        evidence: Evidence::Exact,
    };
    if shifts.len() > 1 {
        // not homogeneous, so not of the form σ(x)m - mx for homogeneous m; search all weights
        shifts.clear();
    }
    let words: Vec<Word> =
        bx.words().into_iter().filter(|w| w.len() <= cap && (shifts.is_empty() || shifts.contains(&w.weight()))).collect();
    let mut index: HashMap<(usize, Word), usize> = HashMap::new();
    let mut row = |g: usize, w: Word| -> usize {
        let n = index.len();
        *index.entry((g, w)).or_insert(n)
    };
    let mut target = SparseVec::new();
    for (g, v) in vals.iter().enumerate() {
        for (w, c) in v.terms() {
            target.insert(row(g, *w), c.clone());
        }
    }
    let mut cols = Vec::new();
    for m in &words {
        let mut col = SparseVec::new();
        let me = Elem::word(*m);
        for (g, gen) in Gen::ALL.iter().enumerate() {
            let x = Elem::gen(*gen);
            let v = sigma.apply(&x).mul(&me).sub(&me.mul(&x));
            for (w, c) in v.terms() {
                col.insert(row(g, *w), c.clone());
            }
        }
        cols.push(col);
    }
    report.columns = cols.len();
    report.rows = index.len();
    let solved = solve_columns(&cols, &target, PivotRule::LeastWeight);
    report.evidence = solved.evidence;
    if let Some(c) = solved.coeffs {
        let m = Elem::from_terms(c.iter().map(|(i, k)| (words[*i], k.clone())));
        for (gen, v) in Gen::ALL.iter().zip(&vals) {
            let x = Elem::gen(*gen);
            assert_eq!(&sigma.apply(&x).mul(&m).sub(&m.mul(&x)), v, "inner witness failed re-verification");
        }
        report.status = SolveStatus::WitnessFound;
        report.witness = Some(Chain::from_elems(sigma, &[m]));
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Independence {
    /// No nonzero combination is a boundary of a chain in the box (evidence only).
    Independent { evidence: Evidence },
    /// `Σ coefficients_i cycles_i = b(witness)`, checked exactly.
    Dependent { coefficients: Vec<Scalar>, witness: Chain },
}

/// Decides whether some nonzero combination of the cycles bounds inside the box.
pub fn independent_mod_boundaries(cycles: &[Chain], bx: &TruncationBox, complex: Complex) -> Result<Independence> {
    let first = cycles.first().ok_or_else(|| Error::Domain("no cycles given".into()))?;
    let (degree, twist) = (first.degree(), first.twist().clone());
    for z in cycles {
        if z.degree() != degree {
            return Err(Error::Degree("cycles of different degrees".into()));
        }
        if *z.twist() != twist {
            return Err(Error::TwistMismatch { expected: twist.to_string(), got: z.twist().to_string() });
        }
    }
    let zs: Vec<Chain> = cycles.iter().map(|z| project(z, complex)).collect();
    let cap = bx.max_len.unwrap_or(zs.iter().map(Chain::max_len).max().unwrap_or(0) + 2);
    let sys = build_system(degree + 1, &twist, &zs, bx, cap, complex);
    let nb = sys.cols.len();
    let mut all: Vec<SparseVec<Scalar>> = sys.vecs.clone();
    all.extend(sys.targets.iter().cloned());
    // modular pass to find the first dependent cycle, then exact confirmation
    let fp: Option<Vec<SparseVec<Fp>>> = all.iter().map(to_fp).collect();
    let mut e = Echelon::<Fp>::new(PivotRule::LeastWeight);
    let mut indep = Vec::new();
    let mut dependent = None;
    if let Some(fp) = fp {
        for (i, c) in fp.into_iter().enumerate() {
            if e.insert(i, c).is_none() {
                indep.push(i);
            } else if i >= nb {
                dependent = Some(i);
                break;
            }
        }
    } else {
        indep = (0..all.len()).collect();
    }
    let exact_dependency = |which: &[usize]| -> Option<SparseVec<Scalar>> {
        let mut e = Echelon::<Scalar>::new(PivotRule::LeastWeight);
        for &i in which {
            if let Some(c) = e.insert(i, all[i].clone()) {
                if i >= nb {
                    return Some(c);
                }
            }
        }
        None
    };
    let combo = match dependent {
        Some(k) => {
            let mut which: Vec<usize> = indep.clone();
            which.push(k);
            exact_dependency(&which).or_else(|| exact_dependency(&(0..all.len()).collect::<Vec<_>>()))
        }
        None if all.len() > EXACT_LIMIT => return Ok(Independence::Independent { evidence: Evidence::Modular }),
        None => exact_dependency(&(0..all.len()).collect::<Vec<_>>()),
    };
    let Some(combo) = combo else {
        return Ok(Independence::Independent { evidence: Evidence::Exact });
    };
    // 0 = Σ_t β_t b(t) + Σ_i a_i z_i, so Σ a_i z_i = b(-Σ β_t t)
    let mut coefficients = vec![Scalar::zero(); zs.len()];
    let mut wc = SparseVec::new();
    for (i, c) in combo {
        if i >= nb {
            coefficients[i - nb] = c;
        } else {
            wc.insert(i, -c);
        }
    }
    let witness = witness_chain(&twist, degree + 1, &sys.cols, &wc);
    let mut lhs = Chain::zero(degree, twist.clone());
    for (a, z) in coefficients.iter().zip(&zs) {
        lhs = lhs.add(&z.scale(a));
    }
    let rhs = project(&witness.boundary().expect("positive degree"), complex);
    assert_eq!(project(&lhs, complex), rhs, "dependency witness failed re-verification");
    Ok(Independence::Dependent { coefficients, witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> Scalar {
        Scalar::q_pow(e)
    }

    #[test]
    fn box_parsing() {
        let b: TruncationBox = "2,3,3".parse().unwrap();
        assert_eq!(b, TruncationBox::new(2, 3, 3));
        let b: TruncationBox = "1, 1, 1, 2, 5".parse().unwrap();
        assert_eq!((b.max_degree, b.max_len), (2, Some(5)));
        assert_eq!(b.to_string(), "1,1,1,2,5");
        assert!("1,x,2".parse::<TruncationBox>().is_err());
        assert!("1,2".parse::<TruncationBox>().is_err());
    }

    #[test]
    fn enumeration_respects_bounds() {
        let b = TruncationBox::new(1, 1, 1);
        let ts = enumerate(2, &b, 2, None, Complex::Normalised);
        assert!(ts.iter().all(|t| total_len(t) <= 2 && !t[1].is_one()));
        let mut ws = BTreeSet::new();
        ws.insert((0, 0));
        let ts = enumerate(2, &b, 4, Some(&ws), Complex::Unnormalised);
        assert!(ts.contains(&vec![Word::new(1, 0, 0), Word::new(-1, 0, 0)]));
        assert!(ts.iter().all(|t| total_weight(t) == (0, 0)));
    }

    #[test]
    fn echelon_agrees_across_pivot_rules() {
        let cols: Vec<SparseVec<Scalar>> = vec![
            [(0, q(1)), (1, Scalar::one())].into_iter().collect(),
            [(1, q(2)), (2, Scalar::one())].into_iter().collect(),
            [(0, q(1)), (1, Scalar::one() + q(2)), (2, Scalar::one())].into_iter().collect(),
        ];
        let target: SparseVec<Scalar> = [(0, q(3)), (1, q(2) * Scalar::integer(3)), (2, Scalar::integer(2))].into_iter().collect();
        for rule in [PivotRule::First, PivotRule::LeastWeight] {
            let s = solve_columns(&cols, &target, rule);
            let c = s.coeffs.unwrap();
            let mut acc = SparseVec::new();
            for (i, k) in &c {
                axpy(&mut acc, &-k.clone(), &cols[*i]);
            }
            assert_eq!(acc, target);
        }
        let bad: SparseVec<Scalar> = [(3, Scalar::one())].into_iter().collect();
        assert!(solve_columns(&cols, &bad, PivotRule::First).coeffs.is_none());
    }
}
