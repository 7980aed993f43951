//! Exact sparse linear algebra over `ℚ`, carried out fraction-free.
//!
//! Vectors are sparse maps from an ordered key type to rationals. Each
//! incoming vector is scaled to a primitive integer vector, and elimination
//! uses cross-multiplication followed by content removal, so no rational
//! arithmetic happens inside the elimination loop.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::Rational;

pub type SparseVec<K> = BTreeMap<K, Rational>;
type IntVec<K> = BTreeMap<K, BigInt>;

/// Multiplies by the lcm of the denominators; returns the integer vector and
/// the factor used.
fn integerize<K: Ord + Clone>(v: &SparseVec<K>) -> (IntVec<K>, BigInt) {
    let lcm = v.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let out = v
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.clone(), c.numer() * (&lcm / c.denom())))
        .collect();
    (out, lcm)
}

fn axpy<K: Ord + Clone>(a: &BigInt, v: &IntVec<K>, b: &BigInt, w: &IntVec<K>) -> IntVec<K> {
    // a·v − b·w
    let mut out: IntVec<K> = v.iter().map(|(k, c)| (k.clone(), a * c)).collect();
    for (k, c) in w {
        let entry = out.entry(k.clone()).or_insert_with(BigInt::zero);
        *entry -= b * c;
        if entry.is_zero() {
            out.remove(k);
        }
    }
    out
}

fn content<K>(v: &IntVec<K>) -> BigInt {
    v.values().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn divide<K: Ord + Clone>(v: &mut IntVec<K>, d: &BigInt) {
    for c in v.values_mut() {
        *c = &*c / d;
    }
}

#[derive(Clone, Debug)]
struct Row<K> {
    body: IntVec<K>,
    track: IntVec<usize>,
}

impl<K: Ord + Clone> Row<K> {
    fn normalize(&mut self) {
        let g = content(&self.body).gcd(&content(&self.track));
        if !g.is_zero() && !g.is_one() {
            divide(&mut self.body, &g);
            divide(&mut self.track, &g);
        }
    }
}

/// Incrementally built row-echelon form. Every stored row remembers which
/// combination of the inserted vectors produced it.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    pivots: BTreeMap<K, usize>,
    rows: Vec<Row<K>>,
    inserted: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { pivots: BTreeMap::new(), rows: Vec::new(), inserted: 0 }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut row: Row<K>) -> Row<K> {
        while let Some((lead, _)) = row.body.first_key_value() {
            let Some(&idx) = self.pivots.get(lead) else {
                break;
            };
            let pivot = &self.rows[idx];
            let a = pivot.body[lead].clone();
            let b = row.body[lead].clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            row.body = axpy(&a, &row.body, &b, &pivot.body);
            row.track = axpy(&a, &row.track, &b, &pivot.track);
            row.normalize();
        }
        row
    }

    /// Inserts a vector. Returns `Err(relation)` when it is dependent on the
    /// vectors inserted so far; the relation is `Σ c_i v_i = 0` over
    /// insertion indices, with a nonzero coefficient on this vector.
    pub fn insert(&mut self, v: &SparseVec<K>) -> Result<(), SparseVec<usize>> {
        let index = self.inserted;
        self.inserted += 1;
        let (body, scale) = integerize(v);
        let row = self.reduce(Row { body, track: BTreeMap::from([(index, scale)]) });
        match row.body.first_key_value() {
            None => Err(row.track.into_iter().map(|(k, c)| (k, Rational::from_integer(c))).collect()),
            Some((lead, _)) => {
                self.pivots.insert(lead.clone(), self.rows.len());
                self.rows.push(row);
                Ok(())
            }
        }
    }

    /// Whether `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        let (body, _) = integerize(v);
        self.reduce(Row { body, track: BTreeMap::new() }).body.is_empty()
    }

    /// Coefficients `c_i` with `v = Σ c_i v_i` over insertion indices.
    pub fn solve(&self, v: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let marker = usize::MAX;
        let (body, scale) = integerize(v);
        let row = self.reduce(Row { body, track: BTreeMap::from([(marker, scale)]) });
        if !row.body.is_empty() {
            return None;
        }
        // s·v + Σ c_i v_i = 0
        let s = row.track.get(&marker).cloned().unwrap_or_else(BigInt::zero);
        debug_assert!(!s.is_zero());
        Some(
            row.track
                .into_iter()
                .filter(|(k, _)| *k != marker)
                .map(|(k, c)| (k, -Rational::new(c, s.clone())))
                .collect(),
        )
    }

    /// The rows in fully reduced echelon form, pivot coefficients 1, sorted
    /// by pivot key.
    pub fn reduced_rows(&self) -> Vec<SparseVec<K>> {
        let mut rows: Vec<(K, SparseVec<K>)> = self
            .rows
            .iter()
            .map(|r| {
                let (lead, lc) = r.body.first_key_value().unwrap();
                let lc = lc.clone();
                let v = r.body.iter().map(|(k, c)| (k.clone(), Rational::new(c.clone(), lc.clone()))).collect();
                (lead.clone(), v)
            })
            .collect();
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        // back substitution, bottom-up
        for i in (0..rows.len()).rev() {
            let (pivot, row_i) = (rows[i].0.clone(), rows[i].1.clone());
            for row in rows.iter_mut().take(i) {
                if let Some(c) = row.1.get(&pivot).cloned() {
                    for (k, v) in &row_i {
                        let entry = row.1.entry(k.clone()).or_insert_with(Rational::zero);
                        *entry -= &c * v;
                        if entry.is_zero() {
                            row.1.remove(k);
                        }
                    }
                }
            }
        }
        rows.into_iter().map(|(_, v)| v).collect()
    }
}

pub fn rank<K: Ord + Clone>(vectors: &[SparseVec<K>]) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        let _ = ech.insert(v);
    }
    ech.rank()
}

/// Canonical basis of the span: reduced echelon form.
pub fn reduced_basis<K: Ord + Clone>(vectors: &[SparseVec<K>]) -> Vec<SparseVec<K>> {
    let mut ech = Echelon::new();
    for v in vectors {
        let _ = ech.insert(v);
    }
    ech.reduced_rows()
}

/// Basis of `{c : Σ c_j columns_j = 0}`, in reduced echelon form over the
/// column indices.
pub fn kernel<K: Ord + Clone>(columns: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let mut ech = Echelon::new();
    let mut relations = Vec::new();
    for col in columns {
        if let Err(rel) = ech.insert(col) {
            relations.push(rel);
        }
    }
    reduced_basis(&relations)
}

/// Coefficients expressing `target` in terms of `basis`, if possible.
pub fn solve_in_span<K: Ord + Clone>(target: &SparseVec<K>, basis: &[SparseVec<K>]) -> Option<Vec<Rational>> {
    let mut ech = Echelon::new();
    for v in basis {
        let _ = ech.insert(v);
    }
    let coeffs = ech.solve(target)?;
    Some((0..basis.len()).map(|i| coeffs.get(&i).cloned().unwrap_or_else(Rational::zero)).collect())
}
