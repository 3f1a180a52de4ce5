//! Integer Hermite normal form and full-rank Z-lattices in Q^n.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{common_denominator, Rational};

/// Row-style Hermite normal form with pivots taken from the last column
/// backwards, plus a basis of the integer left kernel.
///
/// Returned rows are nonzero, pivots positive, and entries in a pivot column
/// of earlier rows reduced into `[0, pivot)`.
pub fn hnf_with_kernel(rows: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>, Vec<Vec<BigInt>>) {
    let (h, pivots, _, kernel) = hnf_full(rows, ncols);
    (h, pivots, kernel)
}

/// Integer `y` with `Σ yᵢ·rows[i] = target`, if one exists.
pub fn integer_solve(rows: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let ncols = target.len();
    let (h, pivots, u, _) = hnf_full(rows, ncols);
    let mut w: Vec<BigInt> = target.to_vec();
    let mut z = Vec::with_capacity(h.len());
    for (row, &p) in h.iter().zip(&pivots) {
        if !w[p].is_multiple_of(&row[p]) {
            return None;
        }
        let f = &w[p] / &row[p];
        for (x, y) in w.iter_mut().zip(row) {
            *x -= &f * y;
        }
        z.push(f);
    }
    if !w.iter().all(Zero::is_zero) {
        return None;
    }
    Some(
        (0..rows.len())
            .map(|i| z.iter().zip(&u).map(|(c, urow)| c * &urow[i]).sum())
            .collect(),
    )
}

/// HNF rows, pivot columns, the transform rows producing them, and the kernel rows.
#[allow(clippy::type_complexity)]
fn hnf_full(rows: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let m = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in (0..ncols).rev() {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if a[i][c].is_zero() {
                continue;
            }
            if a[r][c].is_zero() {
                a.swap(r, i);
                u.swap(r, i);
                continue;
            }
            let e = a[r][c].extended_gcd(&a[i][c]);
            let (p, q) = (&a[r][c] / &e.gcd, &a[i][c] / &e.gcd);
            combine(&mut a, r, i, &e.x, &e.y, &p, &q);
            combine(&mut u, r, i, &e.x, &e.y, &p, &q);
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            a[r].iter_mut().for_each(|x| *x = -&*x);
            u[r].iter_mut().for_each(|x| *x = -&*x);
        }
        for i in 0..r {
            let f = a[i][c].div_floor(&a[r][c]);
            if !f.is_zero() {
                sub_row(&mut a, i, r, &f);
                sub_row(&mut u, i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let kernel = u.split_off(r);
    a.truncate(r);
    (a, pivots, u, kernel)
}

/// Replaces rows `r`, `i` by `x·r + y·i` and `-q·r + p·i` (determinant 1).
fn combine(a: &mut [Vec<BigInt>], r: usize, i: usize, x: &BigInt, y: &BigInt, p: &BigInt, q: &BigInt) {
    let n = a[r].len();
    for k in 0..n {
        let (vr, vi) = (a[r][k].clone(), a[i][k].clone());
        a[r][k] = x * &vr + y * &vi;
        a[i][k] = p * &vi - q * &vr;
    }
}

fn sub_row(a: &mut [Vec<BigInt>], i: usize, r: usize, f: &BigInt) {
    let row_r = a[r].clone();
    for (x, y) in a[i].iter_mut().zip(&row_r) {
        *x -= f * y;
    }
}

/// `(1/den) · L` for an integer lattice `L` in Hermite normal form, with
/// `gcd(den, entries of L) = 1`. Equal lattices have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QLattice {
    den: BigInt,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl QLattice {
    pub fn from_vectors(vs: &[Vec<Rational>], ncols: usize) -> QLattice {
        let den = common_denominator(vs.iter().flatten());
        let ints: Vec<Vec<BigInt>> = vs
            .iter()
            .map(|v| v.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect())
            .collect();
        QLattice::from_integer_rows(&ints, den, ncols)
    }

    fn from_integer_rows(ints: &[Vec<BigInt>], den: BigInt, ncols: usize) -> QLattice {
        let (mut rows, pivots, _) = hnf_with_kernel(ints, ncols);
        let g = rows.iter().flatten().fold(den.clone(), |g, x| g.gcd(x));
        let den = &den / &g;
        for row in rows.iter_mut() {
            for x in row.iter_mut() {
                *x = &*x / &g;
            }
        }
        QLattice { den, rows, pivots, ncols }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn integer_rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| Rational::new(x.clone(), self.den.clone())).collect())
            .collect()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let scaled: Vec<Rational> = v.iter().map(|c| c * Rational::from_integer(self.den.clone())).collect();
        if scaled.iter().any(|c| !c.is_integer()) {
            return false;
        }
        let mut w: Vec<BigInt> = scaled.into_iter().map(|c| c.to_integer()).collect();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_multiple_of(&row[p]) {
                return false;
            }
            let f = &w[p] / &row[p];
            for (x, y) in w.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
        w.iter().all(Zero::is_zero)
    }

    pub fn contains_lattice(&self, o: &QLattice) -> bool {
        o.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &QLattice) -> QLattice {
        let mut vs = self.basis();
        vs.extend(o.basis());
        QLattice::from_vectors(&vs, self.ncols)
    }

    pub fn intersect(&self, o: &QLattice) -> QLattice {
        let den = self.den.lcm(&o.den);
        let lift = |l: &QLattice| -> Vec<Vec<BigInt>> {
            let f = &den / &l.den;
            l.rows.iter().map(|r| r.iter().map(|x| x * &f).collect()).collect()
        };
        let (a, b) = (lift(self), lift(o));
        // y·[A; -B] = 0 gives y_A·A = y_B·B, a point of both lattices.
        let mut stacked = a.clone();
        stacked.extend(b.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let (_, _, kernel) = hnf_with_kernel(&stacked, self.ncols);
        let pts: Vec<Vec<BigInt>> = kernel
            .iter()
            .map(|y| {
                (0..self.ncols)
                    .map(|k| a.iter().zip(y).map(|(row, c)| &row[k] * c).sum())
                    .collect()
            })
            .collect();
        QLattice::from_integer_rows(&pts, den, self.ncols)
    }

    /// Covolume (absolute determinant) of a full-rank lattice.
    pub fn covolume(&self) -> Rational {
        let prod: BigInt = self.rows.iter().zip(&self.pivots).map(|(r, &p)| r[p].clone()).product();
        let den_pow = num_traits::pow(self.den.clone(), self.rank());
        Rational::new(prod, den_pow)
    }
}
