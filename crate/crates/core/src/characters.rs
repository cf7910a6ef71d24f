//! Complex character tables of finite groups.
//!
//! Cyclic groups use the closed form `exp(2πi·ij/k)`; every other group goes
//! through Burnside's method: the class-sum structure constants give commuting
//! matrices whose common eigenvectors are the central characters.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{ClassId, FiniteGroup};

/// Tolerance for the orthogonality relations and integrality of degrees.
pub const CHARACTER_TOLERANCE: f64 = 1e-9;

/// Rows are irreducible characters ordered by degree, then by real parts
/// (descending, so the trivial character is row 0), then imaginary parts
/// (descending). Columns are classes.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    rows: Vec<Vec<Complex64>>,
    degrees: Vec<u64>,
}

impl CharacterTable {
    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    #[inline]
    pub fn value(&self, chi: usize, c: ClassId) -> Complex64 {
        self.rows[chi][c.0]
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Computes the table of `g`.
    pub fn compute(g: &FiniteGroup) -> Result<Self> {
        let rows = if let Some(gen) = (0..g.order()).find(|&x| g.element_order(x) == g.order()) {
            cyclic_rows(g, gen)
        } else {
            burnside_rows(g)?
        };
        Self::from_rows(g, rows)
    }

    /// Validates an externally supplied table (one row per character).
    pub fn from_rows(g: &FiniteGroup, rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let h = g.num_classes();
        if rows.len() != h {
            return Err(Error::InvalidCharacterTable(format!("expected {h} rows, found {}", rows.len())));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != h) {
            return Err(Error::InvalidCharacterTable(format!("row has {} entries, expected {h}", r.len())));
        }
        let mut degrees = Vec::with_capacity(h);
        for r in &rows {
            let d = r[0];
            let rounded = d.re.round();
            if (d - Complex64::new(rounded, 0.0)).norm() > CHARACTER_TOLERANCE || rounded < 1.0 {
                return Err(Error::InvalidCharacterTable(format!("degree {d} is not a positive integer")));
            }
            degrees.push(rounded as u64);
        }
        if degrees.iter().map(|d| d * d).sum::<u64>() != g.order() as u64 {
            return Err(Error::InvalidCharacterTable("sum of squared degrees differs from |G|".into()));
        }
        let mut table = CharacterTable { rows, degrees };
        let residual = table.orthogonality_residual(g);
        if residual > CHARACTER_TOLERANCE {
            return Err(Error::InvalidCharacterTable(format!("orthogonality residual {residual:e}")));
        }
        table.sort_canonical();
        Ok(table)
    }

    /// Degree ascending, then real parts (rounded to 1e-6), then imaginary parts.
    fn sort_canonical(&mut self) {
        let key = |row: &Vec<Complex64>, deg: u64| {
            let re: Vec<i64> = row.iter().map(|z| (z.re * 1e6).round() as i64).collect();
            let im: Vec<i64> = row.iter().map(|z| (z.im * 1e6).round() as i64).collect();
            (deg, std::cmp::Reverse(re), std::cmp::Reverse(im))
        };
        let mut paired: Vec<(Vec<Complex64>, u64)> =
            self.rows.drain(..).zip(self.degrees.drain(..)).collect();
        paired.sort_by_key(|a| key(&a.0, a.1));
        for (row, d) in paired {
            self.rows.push(row);
            self.degrees.push(d);
        }
    }

    /// Largest deviation in the row and column orthogonality relations.
    pub fn orthogonality_residual(&self, g: &FiniteGroup) -> f64 {
        let h = g.num_classes();
        let order = g.order() as f64;
        let mut worst: f64 = 0.0;
        for a in 0..self.rows.len() {
            for b in 0..self.rows.len() {
                let s: Complex64 = (0..h)
                    .map(|c| self.rows[a][c] * self.rows[b][c].conj() * g.class_size(ClassId(c)) as f64)
                    .sum();
                let target = if a == b { order } else { 0.0 };
                worst = worst.max((s - Complex64::new(target, 0.0)).norm());
            }
        }
        for c in 0..h {
            for d in 0..h {
                let s: Complex64 = self.rows.iter().map(|r| r[c] * r[d].conj()).sum();
                let target = if c == d { g.centralizer_order(ClassId(c)) as f64 } else { 0.0 };
                worst = worst.max((s - Complex64::new(target, 0.0)).norm());
            }
        }
        worst
    }
}

fn cyclic_rows(g: &FiniteGroup, gen: usize) -> Vec<Vec<Complex64>> {
    let k = g.order();
    // exponent[x] = i with gen^i = x
    let mut exponent = vec![0; k];
    let mut x = 0;
    for i in 0..k {
        exponent[x] = i;
        x = g.mul(x, gen);
    }
    (0..k)
        .map(|j| {
            (0..k)
                .map(|c| {
                    let elem = g.class_min(ClassId(c));
                    let i = exponent[elem];
                    root_of_unity((i * j) % k, k)
                })
                .collect()
        })
        .collect()
}

fn root_of_unity(num: usize, den: usize) -> Complex64 {
    // Exact values at quarter turns keep the real/imaginary parts clean.
    match 4 * num {
        0 => Complex64::new(1.0, 0.0),
        q if q == den => Complex64::new(0.0, 1.0),
        q if q == 2 * den => Complex64::new(-1.0, 0.0),
        q if q == 3 * den => Complex64::new(0.0, -1.0),
        _ => Complex64::from_polar(1.0, 2.0 * PI * num as f64 / den as f64),
    }
}

/// `a[i][j][k]`: for fixed `z` in class `k`, the number of `x ∈ C_i` with `x⁻¹z ∈ C_j`.
fn class_constants(g: &FiniteGroup) -> Vec<Vec<Vec<f64>>> {
    let h = g.num_classes();
    let mut a = vec![vec![vec![0.0; h]; h]; h];
    for k in 0..h {
        let z = g.class_min(ClassId(k));
        for x in 0..g.order() {
            let i = g.class_of(x).0;
            let j = g.class_of(g.mul(g.inv(x), z)).0;
            a[i][j][k] += 1.0;
        }
    }
    a
}

fn burnside_rows(g: &FiniteGroup) -> Result<Vec<Vec<Complex64>>> {
    let h = g.num_classes();
    let a = class_constants(g);
    let order = g.order() as f64;
    // Deterministic pseudo-random weights; retried on eigenvalue collisions.
    const WEIGHT_SETS: usize = 8;
    let mut last_gap = 0.0;
    for attempt in 0..WEIGHT_SETS {
        let weights: Vec<f64> = (0..h)
            .map(|i| {
                let x = ((i + 1) as f64 * (0.754877666 + attempt as f64 * 0.31)).fract();
                1.0 + 3.0 * x
            })
            .collect();
        let m = DMatrix::from_fn(h, h, |j, k| (0..h).map(|i| weights[i] * a[i][j][k]).sum::<f64>());
        let eig = m.complex_eigenvalues();
        let mut gap = f64::INFINITY;
        for p in 0..h {
            for q in p + 1..h {
                gap = gap.min((eig[p] - eig[q]).norm());
            }
        }
        let scale = eig.iter().map(|z| z.norm()).fold(1.0, f64::max);
        last_gap = gap / scale;
        if last_gap < 1e-6 {
            continue;
        }
        let mc: DMatrix<Complex64> = m.map(|v| Complex64::new(v, 0.0));
        let mut rows = Vec::with_capacity(h);
        for mu in eig.iter() {
            let shifted = &mc - DMatrix::<Complex64>::identity(h, h) * *mu;
            let svd = shifted.svd(false, true);
            let v_t = svd.v_t.expect("right singular vectors requested");
            let (idx, _) = svd
                .singular_values
                .iter()
                .enumerate()
                .min_by(|x, y| x.1.partial_cmp(y.1).unwrap())
                .unwrap();
            let v: Vec<Complex64> = v_t.row(idx).iter().map(|z| z.conj()).collect();
            if v[0].norm() < 1e-12 {
                return Err(Error::DiagonalizationFailed("eigenvector vanishes on the identity class".into()));
            }
            let omega: Vec<Complex64> = v.iter().map(|z| z / v[0]).collect();
            let norm: f64 = (0..h).map(|j| omega[j].norm_sqr() / g.class_size(ClassId(j)) as f64).sum();
            let degree = (order / norm).sqrt().round();
            let row: Vec<Complex64> = (0..h)
                .map(|j| clean(omega[j] * degree / g.class_size(ClassId(j)) as f64))
                .collect();
            rows.push(row);
        }
        return Ok(rows);
    }
    Err(Error::DiagonalizationFailed(format!(
        "eigenvalues not separated (relative gap {last_gap:e}); supply a character table"
    )))
}

fn clean(z: Complex64) -> Complex64 {
    let snap = |v: f64| {
        let r = v.round();
        if (v - r).abs() < 1e-11 { r } else { v }
    };
    Complex64::new(snap(z.re), snap(z.im))
}
