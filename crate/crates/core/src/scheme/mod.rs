//! Association schemes stored as relation tables, with their intersection
//! numbers, eigenmatrices, Krein parameters, fusions and products.

pub mod axioms;
pub mod eigen;
pub mod fusion;
pub mod krein;
pub mod translation;

pub use axioms::{verify_axioms, verify_table, AxiomCheck, AxiomReport, IntersectionNumbers, RelationTable, Witness};
pub use eigen::{
    canonical_row_order, certify_eigenmatrix, dual_eigenmatrix, eigenmatrix, idempotents, numeric_eigenmatrix,
    EigenOptions,
};
pub use fusion::{fusion, orbit_fusion, orbit_fusion_with_cap, same_classes, tensor_product};
pub use krein::{krein_parameters, KreinParameters};
pub use translation::TranslationStructure;

use crate::arith::{ExactMatrix, GaussRat};
use crate::error::{Error, Result};

/// Largest vertex count for which explicit relation tables are built.
pub const DEFAULT_SIZE_CAP: usize = 4096;

pub(crate) fn check_cap(size: u128, cap: usize) -> Result<usize> {
    if size > cap as u128 {
        Err(Error::SizeCap { size, cap })
    } else {
        Ok(size as usize)
    }
}

/// A commutative association scheme on `v` vertices with `d` classes.
///
/// Construction verifies all five axioms, so every value of this type is a
/// scheme. An attached eigenmatrix is certified exactly before it is stored.
#[derive(Clone, Debug)]
pub struct AssociationScheme {
    table: RelationTable,
    symmetric: bool,
    transpose: Vec<usize>,
    intersection: IntersectionNumbers,
    eigenmatrix: Option<ExactMatrix>,
    translation: Option<TranslationStructure>,
}

impl AssociationScheme {
    pub fn new(table: RelationTable) -> Result<Self> {
        Self::build(table, None)
    }

    pub fn from_rows(rows: &[Vec<usize>], d: Option<usize>) -> Result<Self> {
        Self::new(RelationTable::from_rows(rows, d)?)
    }

    /// Verify the table, using the translation group (when given) both as
    /// attached structure and to reduce the axiom-4 count to one base vertex.
    pub fn build(table: RelationTable, translation: Option<TranslationStructure>) -> Result<Self> {
        if let Some(t) = &translation {
            t.check_invariance(&table)?;
        }
        let (report, numbers) = match &translation {
            Some(t) => axioms::verify_table_from(&table, t.vertex(&vec![0; t.orders().len()])),
            None => axioms::verify_table(&table),
        };
        let intersection = match numbers {
            Some(n) if report.passed() => n,
            _ => return Err(Error::AxiomViolation(Box::new(report))),
        };
        let v = table.v();
        let symmetric = (0..v).all(|x| (0..x).all(|y| table.get(x, y) == table.get(y, x)));
        let mut transpose = vec![0; table.d() + 1];
        for x in 0..v {
            for y in 0..v {
                transpose[table.get(x, y)] = table.get(y, x);
            }
        }
        Ok(AssociationScheme {
            table,
            symmetric,
            transpose,
            intersection,
            eigenmatrix: None,
            translation,
        })
    }

    /// The one-vertex scheme with no classes.
    pub fn trivial() -> Self {
        Self::build(
            RelationTable::from_fn(1, 0, |_, _| 0),
            Some(TranslationStructure::standard(vec![]).expect("trivial group")),
        )
        .expect("trivial scheme")
        .with_eigenmatrix(ExactMatrix::identity(1))
        .expect("trivial eigenmatrix")
    }

    /// Attach an exact eigenmatrix after certifying it.
    pub fn with_eigenmatrix(mut self, p: ExactMatrix) -> Result<Self> {
        certify_eigenmatrix(&p, &self.intersection)?;
        self.eigenmatrix = Some(p);
        Ok(self)
    }

    pub fn with_translation(mut self, t: TranslationStructure) -> Result<Self> {
        t.check_invariance(&self.table)?;
        self.translation = Some(t);
        Ok(self)
    }

    /// Attach the computed eigenmatrix when it certifies; otherwise leave the
    /// scheme in numeric-only mode.
    pub fn with_computed_eigenmatrix(self) -> Self {
        match eigenmatrix(&self, &EigenOptions::default()) {
            Ok(p) => {
                let mut s = self;
                s.eigenmatrix = Some(p);
                s
            }
            Err(_) => self,
        }
    }

    pub fn v(&self) -> usize {
        self.table.v()
    }

    pub fn d(&self) -> usize {
        self.table.d()
    }

    /// Number of relations including the identity, `d + 1`.
    pub fn classes(&self) -> usize {
        self.table.d() + 1
    }

    #[inline]
    pub fn relation(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    pub fn table(&self) -> &RelationTable {
        &self.table
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Class `i'` with `A_{i'} = A_i^T`.
    pub fn transpose_class(&self, i: usize) -> usize {
        self.transpose[i]
    }

    pub fn intersection_numbers(&self) -> &IntersectionNumbers {
        &self.intersection
    }

    pub fn valencies(&self) -> Vec<u64> {
        (0..self.classes()).map(|i| self.intersection.valency(i)).collect()
    }

    pub fn eigenmatrix(&self) -> Option<&ExactMatrix> {
        self.eigenmatrix.as_ref()
    }

    pub fn exact_eigenmatrix(&self) -> Result<&ExactMatrix> {
        self.eigenmatrix.as_ref().ok_or(Error::NumericOnly)
    }

    pub fn translation(&self) -> Option<&TranslationStructure> {
        self.translation.as_ref()
    }

    /// Explicit 0/1 adjacency matrix of class `i`.
    pub fn class_matrix(&self, i: usize) -> ExactMatrix {
        ExactMatrix::from_fn(self.v(), self.v(), |x, y| {
            GaussRat::from_int(i64::from(self.relation(x, y) == i))
        })
    }

    /// Vertex sets of each class as a partition check: class sizes `v·k_i`.
    pub fn class_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.classes()];
        for x in 0..self.v() {
            for &r in self.table.row(x) {
                sizes[r as usize] += 1;
            }
        }
        sizes
    }
}

/// Intersection numbers of a verified scheme.
pub fn intersection_numbers(scheme: &AssociationScheme) -> &IntersectionNumbers {
    scheme.intersection_numbers()
}
