//! Regular abelian automorphism groups of a scheme.

use std::collections::HashMap;

use super::axioms::RelationTable;
use crate::error::{Error, Result};

/// Identification of the vertex set with `Z_{m_1} × … × Z_{m_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationStructure {
    orders: Vec<u32>,
    elements: Vec<Vec<u32>>,
    vertex_of: HashMap<Vec<u32>, usize>,
}

/// Mixed-radix digits of `index`, first factor most significant.
pub fn mixed_radix(mut index: usize, orders: &[u32]) -> Vec<u32> {
    let mut digits = vec![0u32; orders.len()];
    for (slot, &m) in digits.iter_mut().zip(orders).rev() {
        *slot = (index % m as usize) as u32;
        index /= m as usize;
    }
    digits
}

pub fn mixed_radix_index(digits: &[u32], orders: &[u32]) -> usize {
    digits
        .iter()
        .zip(orders)
        .fold(0usize, |acc, (&x, &m)| acc * m as usize + x as usize)
}

impl TranslationStructure {
    /// Vertices are identified with group elements in mixed-radix order.
    pub fn standard(orders: Vec<u32>) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::InvalidTranslation("cyclic factor of order 0".into()));
        }
        let size: usize = orders.iter().map(|&m| m as usize).product();
        let elements = (0..size).map(|i| mixed_radix(i, &orders)).collect();
        Self::new(orders, elements)
    }

    pub fn new(orders: Vec<u32>, elements: Vec<Vec<u32>>) -> Result<Self> {
        let mut vertex_of = HashMap::with_capacity(elements.len());
        let size: usize = orders.iter().map(|&m| m as usize).product();
        if elements.len() != size {
            return Err(Error::InvalidTranslation(format!(
                "{} vertices for a group of order {size}",
                elements.len()
            )));
        }
        for (vtx, el) in elements.iter().enumerate() {
            if el.len() != orders.len() || el.iter().zip(&orders).any(|(&x, &m)| x >= m) {
                return Err(Error::InvalidTranslation(format!("bad element {el:?} for vertex {vtx}")));
            }
            if vertex_of.insert(el.clone(), vtx).is_some() {
                return Err(Error::InvalidTranslation(format!("element {el:?} used twice")));
            }
        }
        Ok(TranslationStructure { orders, elements, vertex_of })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, vertex: usize) -> &[u32] {
        &self.elements[vertex]
    }

    pub fn vertex(&self, element: &[u32]) -> Option<usize> {
        self.vertex_of.get(element).copied()
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect()
    }

    pub fn add_vertices(&self, x: usize, y: usize) -> usize {
        let sum = self.add(self.element(x), self.element(y));
        self.vertex(&sum).expect("group is closed")
    }

    /// Check that translation by every generator preserves each relation.
    pub fn check_invariance(&self, table: &RelationTable) -> Result<()> {
        if table.v() != self.group_order() {
            return Err(Error::InvalidTranslation(format!(
                "group of order {} on {} vertices",
                self.group_order(),
                table.v()
            )));
        }
        let k = self.orders.len();
        for f in 0..k {
            let mut gen = vec![0u32; k];
            gen[f] = 1 % self.orders[f];
            let shift: Vec<usize> = (0..table.v())
                .map(|x| self.vertex(&self.add(self.element(x), &gen)).expect("closed"))
                .collect();
            for x in 0..table.v() {
                for y in 0..table.v() {
                    if table.get(x, y) != table.get(shift[x], shift[y]) {
                        return Err(Error::InvalidTranslation(format!(
                            "translation by generator {f} maps ({x},{y}) out of its class"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Structure on the `n`-fold power: words are read coordinate by
    /// coordinate, vertex index in base `v` with the first coordinate most
    /// significant.
    pub fn power(&self, n: usize) -> Result<Self> {
        let v = self.group_order();
        let orders: Vec<u32> = (0..n).flat_map(|_| self.orders.iter().copied()).collect();
        let total = v.checked_pow(n as u32).ok_or(Error::SizeCap { size: u128::MAX, cap: usize::MAX })?;
        let elements = (0..total)
            .map(|idx| {
                mixed_radix(idx, &vec![v as u32; n])
                    .into_iter()
                    .flat_map(|c| self.element(c as usize).to_vec())
                    .collect()
            })
            .collect();
        Self::new(orders, elements)
    }

    /// Structure on a product scheme with vertex `(x, y) ↦ x·v_B + y`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        let orders: Vec<u32> = self.orders.iter().chain(&other.orders).copied().collect();
        let mut elements = Vec::with_capacity(self.group_order() * other.group_order());
        for a in &self.elements {
            for b in &other.elements {
                elements.push(a.iter().chain(b).copied().collect());
            }
        }
        Self::new(orders, elements)
    }
}
