//! The noncommutative Koszul resolution `0 → A → A³ → A³ → A → 0` of the
//! trivial module; matrices act by right multiplication on row vectors.

use crate::algebra::{Elem, Gen};
use crate::field::Field;

pub type Matrix<F> = Vec<Vec<Elem<F>>>;

#[derive(Clone, Debug)]
pub struct KoszulComplex<F: Field> {
    /// 1×3, 3×3 and 3×1.
    pub maps: [Matrix<F>; 3],
}

pub fn koszul<F: Field>() -> KoszulComplex<F> {
    let [a, b, c, _] = Gen::ALL.map(Elem::<F>::gen);
    let one = Elem::<F>::one();
    let zero = Elem::<F>::zero;
    let u = one.sub(&a.scale(&F::q_pow(-1)));
    KoszulComplex {
        maps: [
            vec![vec![c.clone(), b.neg(), a.scale(&F::q_pow(-2)).sub(&one)]],
            vec![vec![b.clone(), u.clone(), zero()], vec![c.clone(), zero(), u], vec![zero(), c.clone(), b.neg()]],
            vec![vec![a.sub(&one)], vec![b], vec![c]],
        ],
    }
}

/// `x · y` for matrices over A.
pub fn mat_mul<F: Field>(x: &Matrix<F>, y: &Matrix<F>) -> Matrix<F> {
    assert_eq!(x[0].len(), y.len(), "matrix shapes do not compose");
    (0..x.len())
        .map(|i| {
            (0..y[0].len())
                .map(|j| {
                    let mut s = Elem::zero();
                    for (k, row) in y.iter().enumerate() {
                        s.add_assign(&x[i][k].mul(&row[j]));
                    }
                    s
                })
                .collect()
        })
        .collect()
}

impl<F: Field> KoszulComplex<F> {
    /// The two consecutive composites.
    pub fn composites(&self) -> [Matrix<F>; 2] {
        [mat_mul(&self.maps[0], &self.maps[1]), mat_mul(&self.maps[1], &self.maps[2])]
    }
}
