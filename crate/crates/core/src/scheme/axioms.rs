//! Combinatorial verification of the five association-scheme axioms on a
//! relation table.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// A failing instance: the offending vertex pairs and what went wrong.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub pairs: Vec<(usize, usize)>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: u8,
    pub name: &'static str,
    pub passed: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub v: usize,
    pub d: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v={} d={}:", self.v, self.d)?;
        for c in &self.checks {
            write!(f, " [{} {}: {}", c.axiom, c.name, if c.passed { "ok" } else { "FAIL" })?;
            if let Some(w) = &c.witness {
                write!(f, " {:?} {}", w.pairs, w.detail)?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Structure constants `p[i][j][k]` of a scheme, flattened.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionNumbers {
    size: usize,
    p: Vec<u64>,
}

impl IntersectionNumbers {
    pub fn classes(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.p[(i * self.size + j) * self.size + k]
    }

    /// Valency of class `i`: `Σ_j p[i][j][0]`.
    pub fn valency(&self, i: usize) -> u64 {
        (0..self.size).map(|j| self.get(i, j, 0)).sum()
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<u64>>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| (0..self.size).map(|k| self.get(i, j, k)).collect()).collect())
            .collect()
    }
}

/// Flat `v × v` relation table with values in `0..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationTable {
    v: usize,
    d: usize,
    cells: Vec<u16>,
}

impl RelationTable {
    /// Validate shape and range. `d = None` takes the largest entry.
    pub fn from_rows(rows: &[Vec<usize>], d: Option<usize>) -> Result<Self> {
        let v = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != v {
                return Err(Error::NotSquare { row, len: r.len(), expected: v });
            }
        }
        let d = d.unwrap_or_else(|| rows.iter().flatten().copied().max().unwrap_or(0));
        if d >= u16::MAX as usize {
            return Err(Error::InvalidArgument(format!("too many classes: {d}")));
        }
        let mut cells = Vec::with_capacity(v * v);
        for (x, r) in rows.iter().enumerate() {
            for (y, &value) in r.iter().enumerate() {
                if value > d {
                    return Err(Error::ValueOutOfRange { x, y, value, d });
                }
                cells.push(value as u16);
            }
        }
        Ok(RelationTable { v, d, cells })
    }

    /// Build from a relation function; values must already be in range.
    pub fn from_fn(v: usize, d: usize, f: impl Fn(usize, usize) -> usize + Sync) -> Self {
        assert!(d < u16::MAX as usize);
        let cells: Vec<u16> = (0..v * v)
            .into_par_iter()
            .map(|c| {
                let r = f(c / v, c % v);
                debug_assert!(r <= d);
                r as u16
            })
            .collect();
        RelationTable { v, d, cells }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.v + y] as usize
    }

    pub fn row(&self, x: usize) -> &[u16] {
        &self.cells[x * self.v..(x + 1) * self.v]
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.v).map(|x| self.row(x).iter().map(|&r| r as usize).collect()).collect()
    }

    fn transposed(&self) -> Vec<u16> {
        let v = self.v;
        let mut t = vec![0u16; v * v];
        for x in 0..v {
            for y in 0..v {
                t[y * v + x] = self.cells[x * v + y];
            }
        }
        t
    }

    /// Count matrix `c[i][j] = #{z : rel(x,z)=i, rel(z,y)=j}`.
    fn counts(&self, transposed: &[u16], x: usize, y: usize, buf: &mut [u64]) {
        let size = self.d + 1;
        buf.iter_mut().for_each(|c| *c = 0);
        let row = self.row(x);
        let col = &transposed[y * self.v..(y + 1) * self.v];
        for (&a, &b) in row.iter().zip(col) {
            buf[a as usize * size + b as usize] += 1;
        }
    }
}

/// Check all five axioms and, when axioms 4 and 5 hold, return the
/// intersection numbers alongside the report.
pub fn verify_table(table: &RelationTable) -> (AxiomReport, Option<IntersectionNumbers>) {
    verify_table_from(table, None)
}

/// As [`verify_table`], but with `base = Some(x0)` the axiom-4 count only
/// visits pairs `(x0, y)`. Valid when a transitive automorphism group is
/// known to preserve every relation.
pub(crate) fn verify_table_from(
    table: &RelationTable,
    base: Option<usize>,
) -> (AxiomReport, Option<IntersectionNumbers>) {
    let v = table.v;
    let d = table.d;
    let size = d + 1;
    let mut checks = Vec::with_capacity(5);

    // (1) A_0 = I
    let bad = (0..v)
        .flat_map(|x| (0..v).map(move |y| (x, y)))
        .find(|&(x, y)| (table.get(x, y) == 0) != (x == y));
    checks.push(AxiomCheck {
        axiom: 1,
        name: "A_0 = I",
        passed: bad.is_none(),
        witness: bad.map(|(x, y)| Witness {
            pairs: vec![(x, y)],
            detail: format!("relation({x},{y}) = {}", table.get(x, y)),
        }),
    });

    // (2) the classes partition J; every class must occur
    let mut seen = vec![false; size];
    for &c in &table.cells {
        seen[c as usize] = true;
    }
    let missing = seen.iter().position(|s| !s);
    checks.push(AxiomCheck {
        axiom: 2,
        name: "sum of A_i = J",
        passed: missing.is_none() && v > 0,
        witness: missing.map(|i| Witness {
            pairs: vec![],
            detail: format!("class {i} is empty"),
        }),
    });

    // (3) closed under transpose
    let mut partner: Vec<Option<(usize, (usize, usize))>> = vec![None; size];
    let mut transpose_bad = None;
    'outer: for x in 0..v {
        for y in 0..v {
            let i = table.get(x, y);
            let t = table.get(y, x);
            match partner[i] {
                None => partner[i] = Some((t, (x, y))),
                Some((t0, first)) if t0 != t => {
                    transpose_bad = Some(Witness {
                        pairs: vec![first, (x, y)],
                        detail: format!("class {i} transposes into both {t0} and {t}"),
                    });
                    break 'outer;
                }
                _ => {}
            }
        }
    }
    checks.push(AxiomCheck {
        axiom: 3,
        name: "closed under transpose",
        passed: transpose_bad.is_none(),
        witness: transpose_bad,
    });

    // (4) constant intersection numbers per class
    let transposed = table.transposed();
    let rows: Vec<usize> = match base {
        Some(x0) => vec![x0],
        None => (0..v).collect(),
    };
    let mut reps: Vec<Option<(usize, usize)>> = vec![None; size];
    for x in rows.iter().copied().chain(0..v) {
        for y in 0..v {
            let k = table.get(x, y);
            if reps[k].is_none() {
                reps[k] = Some((x, y));
            }
        }
    }
    let mut reference = vec![0u64; size * size * size];
    {
        let mut buf = vec![0u64; size * size];
        for (k, rep) in reps.iter().enumerate() {
            if let Some((x, y)) = *rep {
                table.counts(&transposed, x, y, &mut buf);
                for i in 0..size {
                    for j in 0..size {
                        reference[(i * size + j) * size + k] = buf[i * size + j];
                    }
                }
            }
        }
    }
    let mismatch = rows
        .par_iter()
        .copied()
        .map_init(
            || vec![0u64; size * size],
            |buf, x| {
                (0..v).find_map(|y| {
                    let k = table.get(x, y);
                    table.counts(&transposed, x, y, buf);
                    (0..size * size)
                        .find(|&ij| buf[ij] != reference[ij * size + k])
                        .map(|ij| (x, y, k, ij / size, ij % size, buf[ij]))
                })
            },
        )
        .find_first(Option::is_some)
        .flatten();
    let witness4 = mismatch.map(|(x, y, k, i, j, got)| {
        let rep = reps[k].expect("class has a representative");
        Witness {
            pairs: vec![rep, (x, y)],
            detail: format!(
                "class {k}: #{{z: rel(x,z)={i}, rel(z,y)={j}}} is {} for {:?} but {got} for {:?}",
                reference[(i * size + j) * size + k],
                rep,
                (x, y)
            ),
        }
    });
    let axiom4 = witness4.is_none();
    checks.push(AxiomCheck {
        axiom: 4,
        name: "A_i A_j in span",
        passed: axiom4,
        witness: witness4,
    });

    // (5) commutativity, p[i][j][k] = p[j][i][k]
    let witness5 = if axiom4 {
        let mut found = None;
        'search: for i in 0..size {
            for j in i + 1..size {
                for k in 0..size {
                    let a = reference[(i * size + j) * size + k];
                    let b = reference[(j * size + i) * size + k];
                    if a != b {
                        found = Some(Witness {
                            pairs: reps[k].into_iter().collect(),
                            detail: format!("p[{i}][{j}][{k}] = {a} but p[{j}][{i}][{k}] = {b}"),
                        });
                        break 'search;
                    }
                }
            }
        }
        found
    } else {
        Some(Witness {
            pairs: vec![],
            detail: "not checked: axiom 4 fails".into(),
        })
    };
    let axiom5 = witness5.is_none();
    checks.push(AxiomCheck {
        axiom: 5,
        name: "A_i A_j = A_j A_i",
        passed: axiom5,
        witness: witness5,
    });

    let report = AxiomReport { v, d, checks };
    let numbers = (axiom4 && axiom5).then_some(IntersectionNumbers { size, p: reference });
    (report, numbers)
}

/// Verify a relation table given as nested rows.
pub fn verify_axioms(rows: &[Vec<usize>], d: Option<usize>) -> Result<AxiomReport> {
    let table = RelationTable::from_rows(rows, d)?;
    Ok(verify_table(&table).0)
}
