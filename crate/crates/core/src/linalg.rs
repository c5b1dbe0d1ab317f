//! Exact sparse linear algebra over the rationals.
//!
//! Rows are scaled to primitive integer vectors and eliminated fraction-free:
//! a row is combined with a pivot row as `p * row - r * pivot` and divided by
//! the content afterwards, so no rational arithmetic happens inside the loop.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse integer row, strictly increasing column indices, no zero entries.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Clears denominators and removes content.
pub fn integer_row(entries: impl IntoIterator<Item = (usize, BigRational)>) -> SparseRow {
    let mut entries: Vec<(usize, BigRational)> = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    entries.sort_by_key(|e| e.0);
    let mut merged: Vec<(usize, BigRational)> = Vec::with_capacity(entries.len());
    for (c, v) in entries {
        match merged.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => merged.push((c, v)),
        }
    }
    merged.retain(|(_, v)| !v.is_zero());
    let lcm = merged.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let mut row: SparseRow =
        merged.into_iter().map(|(c, v)| (c, v.numer() * (&lcm / v.denom()))).collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut SparseRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `a * x - b * y`, where the caller guarantees the leading entries cancel
/// only where intended.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form built incrementally; every stored row has a distinct
/// leading (pivot) column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<SparseRow>,
    pivot_row: std::collections::HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        cols.sort_unstable();
        cols
    }

    /// Eliminates every pivot column from `row`.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut idx = 0;
        while idx < row.len() {
            let c = row[idx].0;
            if let Some(&p) = self.pivot_row.get(&c) {
                let pivot = &self.rows[p];
                let pv = &pivot[0].1;
                let rv = &row[idx].1;
                let g = pv.gcd(rv);
                let a = pv / &g;
                let b = rv / &g;
                let mut head: SparseRow = row[..idx].iter().map(|(cc, v)| (*cc, v * &a)).collect();
                let tail: SparseRow = row[idx..].to_vec();
                head.extend(combine(&a, &tail, &b, pivot));
                row = head;
                make_primitive(&mut row);
                // position idx now holds the next larger column
            } else {
                idx += 1;
            }
        }
        row
    }

    /// Adds a row; returns `true` when it was independent of the rows so far.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        if row.is_empty() {
            return false;
        }
        self.pivot_row.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        true
    }

    /// Reduced row echelon form: each pivot column is zero outside its row.
    pub fn into_reduced(mut self) -> Echelon {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r][0].0));
        for &src in &order {
            let col = self.rows[src][0].0;
            for dst in 0..self.rows.len() {
                if dst == src {
                    continue;
                }
                let Ok(pos) = self.rows[dst].binary_search_by_key(&col, |e| e.0) else { continue };
                let pv = self.rows[src][0].1.clone();
                let rv = self.rows[dst][pos].1.clone();
                let g = pv.gcd(&rv);
                let a = &pv / &g;
                let b = &rv / &g;
                let mut combined = combine(&a, &self.rows[dst], &b, &self.rows[src]);
                make_primitive(&mut combined);
                self.rows[dst] = combined;
            }
        }
        self
    }
}

/// Rank of the given rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{x : A x = 0}` for the matrix with the given rows and `ncols`
/// columns. Vectors are dense, one per free column, with a 1 in that column.
pub fn kernel(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Vec<Vec<BigRational>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    let e = e.into_reduced();
    let pivots: std::collections::HashSet<usize> = e.rows().iter().map(|r| r[0].0).collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![BigRational::zero(); ncols];
        x[free] = BigRational::one();
        for row in e.rows() {
            if let Ok(pos) = row.binary_search_by_key(&free, |t| t.0) {
                let (p, pv) = &row[0];
                x[*p] = -BigRational::new(row[pos].1.clone(), pv.clone());
            }
        }
        basis.push(x);
    }
    basis
}

/// One solution of `A x = b`, or `None` when the system is inconsistent.
/// `rows[i]` pairs the sparse row of `A` with `b_i`.
pub fn solve(rows: impl IntoIterator<Item = (Vec<(usize, BigRational)>, BigRational)>, ncols: usize) -> Option<Vec<BigRational>> {
    let mut e = Echelon::new();
    for (mut a, b) in rows {
        a.push((ncols, b));
        e.insert(integer_row(a));
    }
    if e.rows().iter().any(|r| r[0].0 == ncols) {
        return None;
    }
    let e = e.into_reduced();
    let mut x = vec![BigRational::zero(); ncols];
    for row in e.rows() {
        let (p, pv) = &row[0];
        if let Some((_, bv)) = row.last().filter(|t| t.0 == ncols) {
            x[*p] = BigRational::new(bv.clone(), pv.clone());
        }
    }
    Some(x)
}
