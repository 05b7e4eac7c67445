//! Smith normal form over the integers.
//!
//! Relator matrices coming from cell complexes are large and very sparse
//! with mostly unit entries, so the elimination works on sparse rows and
//! picks pivots from a lazy priority queue keyed by
//! `(|entry|, markowitz cost, row, column)`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix. Rows are relators, columns generators when it
/// comes from a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BTreeMap<usize, BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BTreeMap::new(); rows],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntegerMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &v) in row.iter().enumerate() {
                m.add(i, j, &BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries[r].get(&c).cloned().unwrap_or_default()
    }

    /// Adds `v` to entry `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, v: &BigInt) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        let e = self.entries[r].entry(c).or_default();
        *e += v;
        if e.is_zero() {
            self.entries[r].remove(&c);
        }
    }

    pub fn nonzeros(&self) -> usize {
        self.entries.iter().map(BTreeMap::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect()
    }
}

/// Diagonal invariants `d_1 | d_2 | ... | d_k`, `k = min(rows, cols)`:
/// nonzero invariants ascending in the divisibility chain, then zeros.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    let k = m.rows.min(m.cols);
    // machine integers first; any overflow restarts in big integers
    let mut diag = match Eliminator::<i64>::new(m).and_then(Eliminator::run) {
        Some(d) => d,
        None => Eliminator::<BigInt>::new(m)
            .and_then(Eliminator::run)
            .expect("big integer elimination cannot overflow"),
    };
    canonicalize(&mut diag);
    diag.resize(k, BigInt::zero());
    diag
}

/// Turns any list of positive diagonal entries into the divisibility chain
/// of the same abelian group.
fn canonicalize(d: &mut [BigInt]) {
    d.sort();
    let units = d.iter().take_while(|x| x.is_one()).count();
    let d = &mut d[units..];
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            if (&d[j] % &d[i]).is_zero() {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
}

/// Entry arithmetic for the eliminator. `None` signals overflow.
trait Scalar: Clone + Sized {
    type Magnitude: Ord + Clone;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    fn magnitude(&self) -> Self::Magnitude;
    fn quot(&self, d: &Self) -> Option<Self>;
    /// `self - q * v`
    fn sub_mul(&self, q: &Self, v: &Self) -> Option<Self>;
    fn abs(&self) -> Option<Self>;
}

impl Scalar for i64 {
    type Magnitude = u64;
    fn from_big(v: &BigInt) -> Option<Self> {
        i64::try_from(v).ok()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn nil() -> Self {
        0
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn magnitude(&self) -> u64 {
        self.unsigned_abs()
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        self.checked_div(*d)
    }
    fn sub_mul(&self, q: &Self, v: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*v)?)
    }
    fn abs(&self) -> Option<Self> {
        self.checked_abs()
    }
}

impl Scalar for BigInt {
    type Magnitude = BigUint;
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn nil() -> Self {
        Zero::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude(&self) -> BigUint {
        Signed::abs(self).into_parts().1
    }
    fn quot(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }
    fn sub_mul(&self, q: &Self, v: &Self) -> Option<Self> {
        Some(self - q * v)
    }
    fn abs(&self) -> Option<Self> {
        Some(Signed::abs(self))
    }
}

/// `(|entry|, Markowitz cost, row, col)`
type PivotKey<T> = (<T as Scalar>::Magnitude, u64, usize, usize);

struct Eliminator<T: Scalar> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: Vec<BTreeSet<usize>>,
    heap: BinaryHeap<Reverse<PivotKey<T>>>,
}

impl<T: Scalar> Eliminator<T> {
    fn new(m: &IntegerMatrix) -> Option<Self> {
        let mut cols = vec![BTreeSet::new(); m.cols];
        let mut rows = Vec::with_capacity(m.rows);
        for (r, row) in m.entries.iter().enumerate() {
            let mut out = BTreeMap::new();
            for (&c, v) in row {
                cols[c].insert(r);
                out.insert(c, T::from_big(v)?);
            }
            rows.push(out);
        }
        let mut e = Eliminator {
            rows,
            cols,
            heap: BinaryHeap::new(),
        };
        for r in 0..e.rows.len() {
            e.push_row(r);
        }
        Some(e)
    }

    fn cost(&self, r: usize, c: usize) -> u64 {
        let rl = self.rows[r].len().saturating_sub(1) as u64;
        let cl = self.cols[c].len().saturating_sub(1) as u64;
        rl * cl
    }

    fn push_row(&mut self, r: usize) {
        let keys: Vec<(usize, T::Magnitude)> = self.rows[r].iter().map(|(&c, v)| (c, v.magnitude())).collect();
        for (c, abs) in keys {
            let cost = self.cost(r, c);
            self.heap.push(Reverse((abs, cost, r, c)));
        }
    }

    fn next_pivot(&mut self) -> Option<(usize, usize)> {
        while let Some(Reverse((abs, cost, r, c))) = self.heap.pop() {
            let Some(v) = self.rows[r].get(&c) else { continue };
            if v.magnitude() != abs {
                continue;
            }
            let now = self.cost(r, c);
            if now != cost {
                self.heap.push(Reverse((abs, now, r, c)));
                continue;
            }
            return Some((r, c));
        }
        None
    }

    fn set(&mut self, r: usize, c: usize, v: T) {
        if v.is_nil() {
            if self.rows[r].remove(&c).is_some() {
                self.cols[c].remove(&r);
            }
        } else {
            self.rows[r].insert(c, v);
            self.cols[c].insert(r);
        }
    }

    fn entry(&self, r: usize, c: usize) -> Option<&T> {
        self.rows[r].get(&c)
    }

    /// row_i -= q * row_r
    fn row_op(&mut self, i: usize, r: usize, q: &T) -> Option<()> {
        let src: Vec<(usize, T)> = self.rows[r].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src {
            let next = match self.entry(i, c) {
                Some(cur) => cur.sub_mul(q, &v)?,
                None => T::nil().sub_mul(q, &v)?,
            };
            self.set(i, c, next);
        }
        Some(())
    }

    /// col_j -= q * col_c
    fn col_op(&mut self, j: usize, c: usize, q: &T) -> Option<()> {
        let src: Vec<(usize, T)> = self.cols[c].iter().map(|&i| (i, self.rows[i][&c].clone())).collect();
        for (i, v) in src {
            let next = match self.entry(i, j) {
                Some(cur) => cur.sub_mul(q, &v)?,
                None => T::nil().sub_mul(q, &v)?,
            };
            self.set(i, j, next);
        }
        Some(())
    }

    fn run(mut self) -> Option<Vec<BigInt>> {
        let mut diag = Vec::new();
        while let Some((mut r, mut c)) = self.next_pivot() {
            let mut touched: BTreeSet<usize> = BTreeSet::new();
            loop {
                let d = self.rows[r][&c].clone();
                let others: Vec<usize> = self.cols[c].iter().copied().filter(|&i| i != r).collect();
                for i in others {
                    let q = self.rows[i][&c].quot(&d)?;
                    if !q.is_nil() {
                        self.row_op(i, r, &q)?;
                        touched.insert(i);
                    }
                }
                let others: Vec<usize> = self.rows[r].keys().copied().filter(|&j| j != c).collect();
                for j in others {
                    let q = self.rows[r][&j].quot(&d)?;
                    if !q.is_nil() {
                        self.col_op(j, c, &q)?;
                        touched.extend(self.cols[c].iter().copied());
                    }
                }
                // remainders smaller than |d| left in the pivot row or column
                let best = self.rows[r]
                    .iter()
                    .filter(|(&j, _)| j != c)
                    .map(|(&j, v)| (v.magnitude(), r, j))
                    .chain(
                        self.cols[c]
                            .iter()
                            .filter(|&&i| i != r)
                            .map(|&i| (self.rows[i][&c].magnitude(), i, c)),
                    )
                    .min();
                match best {
                    None => break,
                    Some((_, nr, nc)) => {
                        r = nr;
                        c = nc;
                    }
                }
            }
            let d = self.rows[r][&c].abs()?;
            let row: Vec<usize> = self.rows[r].keys().copied().collect();
            for j in row {
                self.set(r, j, T::nil());
            }
            diag.push(d.to_big());
            touched.remove(&r);
            for i in touched {
                self.push_row(i);
            }
        }
        Some(diag)
    }
}
