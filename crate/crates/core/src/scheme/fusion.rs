//! Fusions (subschemes), tensor products, and fusions by a permutation group
//! acting on the tensor factors.

use std::collections::HashMap;

use super::axioms::RelationTable;
use super::translation::mixed_radix;
use super::{check_cap, AssociationScheme, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};

/// Merge classes according to `partition`; blocks are renumbered by their
/// smallest member, so `{0}` stays class 0.
pub fn fusion(scheme: &AssociationScheme, partition: &[Vec<usize>]) -> Result<AssociationScheme> {
    let size = scheme.classes();
    let mut block_of = vec![usize::MAX; size];
    let mut blocks: Vec<Vec<usize>> = partition.to_vec();
    for b in &mut blocks {
        b.sort_unstable();
        if b.is_empty() {
            return Err(Error::InvalidPartition("empty block".into()));
        }
    }
    blocks.sort_by_key(|b| b[0]);
    for (bi, b) in blocks.iter().enumerate() {
        for &c in b {
            if c >= size {
                return Err(Error::InvalidPartition(format!("class {c} does not exist")));
            }
            if block_of[c] != usize::MAX {
                return Err(Error::InvalidPartition(format!("class {c} appears twice")));
            }
            block_of[c] = bi;
        }
    }
    if let Some(c) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(Error::InvalidPartition(format!("class {c} is not covered")));
    }
    if blocks[0] != [0] {
        return Err(Error::InvalidPartition("class 0 must be a singleton block".into()));
    }
    let table = RelationTable::from_fn(scheme.v(), blocks.len() - 1, |x, y| block_of[scheme.relation(x, y)]);
    match AssociationScheme::build(table, scheme.translation().cloned()) {
        Ok(s) => Ok(s.with_computed_eigenmatrix()),
        Err(Error::AxiomViolation(report)) => {
            let axiom = report.first_failure().map_or(0, |c| c.axiom);
            Err(Error::ClosureFailure { axiom, report })
        }
        Err(e) => Err(e),
    }
}

/// `A ⊗ B` on `V_A × V_B`, vertex `(x, y) ↦ x·v_B + y` and class
/// `(i, j) ↦ i·(d_B + 1) + j`.
pub fn tensor_product(a: &AssociationScheme, b: &AssociationScheme) -> Result<AssociationScheme> {
    let vb = b.v();
    let kb = b.classes();
    check_cap(a.v() as u128 * vb as u128, DEFAULT_SIZE_CAP)?;
    let table = RelationTable::from_fn(a.v() * vb, a.classes() * kb - 1, |x, y| {
        a.relation(x / vb, y / vb) * kb + b.relation(x % vb, y % vb)
    });
    let translation = match (a.translation(), b.translation()) {
        (Some(ta), Some(tb)) => Some(ta.product(tb)?),
        _ => None,
    };
    let s = AssociationScheme::build(table, translation)?;
    match (a.eigenmatrix(), b.eigenmatrix()) {
        (Some(pa), Some(pb)) => s.with_eigenmatrix(pa.kron(pb)),
        _ => Ok(s),
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Fusion of `A^{⊗n}` whose classes are the orbits of the group generated by
/// `generators` acting on index tuples `(i_1, …, i_n)` by permuting positions.
/// Each generator is a 0-based permutation of `0..n`.
pub fn orbit_fusion(a: &AssociationScheme, n: usize, generators: &[Vec<usize>]) -> Result<AssociationScheme> {
    orbit_fusion_with_cap(a, n, generators, DEFAULT_SIZE_CAP)
}

pub fn orbit_fusion_with_cap(
    a: &AssociationScheme,
    n: usize,
    generators: &[Vec<usize>],
    cap: usize,
) -> Result<AssociationScheme> {
    let v = a.v();
    let total = check_cap((v as u128).saturating_pow(n as u32), cap)?;
    for g in generators {
        let mut seen = vec![false; n];
        if g.len() != n || g.iter().any(|&k| k >= n || std::mem::replace(&mut seen[k], true)) {
            return Err(Error::InvalidArgument(format!("{g:?} is not a permutation of 0..{n}")));
        }
    }
    let k = a.classes();
    let tuples = k.pow(n as u32);
    let radix = vec![k as u32; n];
    let mut parent: Vec<usize> = (0..tuples).collect();
    for t in 0..tuples {
        let digits = mixed_radix(t, &radix);
        for g in generators {
            let image = g.iter().fold(0usize, |acc, &src| acc * k + digits[src] as usize);
            let (ra, rb) = (find(&mut parent, t), find(&mut parent, image));
            if ra != rb {
                let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
                parent[hi] = lo;
            }
        }
    }
    // label orbits by their smallest tuple, which is the root
    let mut label = HashMap::new();
    let mut orbit_of = vec![0usize; tuples];
    for t in 0..tuples {
        let r = find(&mut parent, t);
        let next = label.len();
        orbit_of[t] = *label.entry(r).or_insert(next);
    }
    let classes = label.len();
    let word_radix = vec![v as u32; n];
    let words: Vec<Vec<u32>> = (0..total).map(|w| mixed_radix(w, &word_radix)).collect();
    let table = RelationTable::from_fn(total, classes - 1, |x, y| {
        let t = words[x]
            .iter()
            .zip(&words[y])
            .fold(0usize, |acc, (&p, &q)| acc * k + a.relation(p as usize, q as usize));
        orbit_of[t]
    });
    let translation = a.translation().map(|t| t.power(n)).transpose()?;
    Ok(AssociationScheme::build(table, translation)?.with_computed_eigenmatrix())
}

/// Class bijection `map[i] = j` with `a.relation(x,y) = i ⇔ b.relation(x,y) = j`,
/// if the two tables induce the same partition.
pub fn same_classes(a: &RelationTable, b: &RelationTable) -> Option<Vec<usize>> {
    if a.v() != b.v() || a.d() != b.d() {
        return None;
    }
    let mut fwd = vec![usize::MAX; a.d() + 1];
    let mut back = vec![usize::MAX; b.d() + 1];
    for x in 0..a.v() {
        for y in 0..a.v() {
            let (i, j) = (a.get(x, y), b.get(x, y));
            if fwd[i] == usize::MAX && back[j] == usize::MAX {
                fwd[i] = j;
                back[j] = i;
            } else if fwd[i] != j || back[j] != i {
                return None;
            }
        }
    }
    Some(fwd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::TranslationStructure;

    fn z4() -> AssociationScheme {
        let rows: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| (y + 4 - x) % 4).collect()).collect();
        AssociationScheme::build(
            RelationTable::from_rows(&rows, None).unwrap(),
            Some(TranslationStructure::standard(vec![4]).unwrap()),
        )
        .unwrap()
    }

    fn complete(q: usize) -> AssociationScheme {
        let rows: Vec<Vec<usize>> = (0..q).map(|x| (0..q).map(|y| usize::from(x != y)).collect()).collect();
        AssociationScheme::from_rows(&rows, None).unwrap()
    }

    #[test]
    fn z4_fuses_to_four_cycle() {
        let c = fusion(&z4(), &[vec![0], vec![1, 3], vec![2]]).unwrap();
        assert_eq!(c.d(), 2);
        assert!(c.is_symmetric());
        let expected: Vec<Vec<usize>> = (0..4)
            .map(|x| (0..4).map(|y| { let k = (y + 4 - x) % 4; k.min(4 - k) }).collect())
            .collect();
        assert_eq!(c.table().to_rows(), expected);
    }

    #[test]
    fn identity_partition() {
        let s = z4();
        let f = fusion(&s, &[vec![0], vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(f.table(), s.table());
    }

    #[test]
    fn bad_partitions() {
        let s = z4();
        assert!(matches!(fusion(&s, &[vec![0, 1], vec![2, 3]]), Err(Error::InvalidPartition(_))));
        assert!(matches!(fusion(&s, &[vec![0], vec![1, 3]]), Err(Error::InvalidPartition(_))));
        assert!(matches!(fusion(&s, &[vec![0], vec![1, 2], vec![2, 3]]), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn non_closed_fusion() {
        // {1,2} and {3} of Z4: not closed under transpose
        match fusion(&z4(), &[vec![0], vec![1, 2], vec![3]]) {
            Err(Error::ClosureFailure { axiom, .. }) => assert_eq!(axiom, 3),
            other => panic!("expected closure failure, got {other:?}"),
        }
    }

    #[test]
    fn product_of_two_edges() {
        let k2 = complete(2);
        let p = tensor_product(&k2, &k2).unwrap();
        assert_eq!((p.v(), p.d()), (4, 3));
        let t = tensor_product(&AssociationScheme::trivial(), &z4()).unwrap();
        assert_eq!(t.table(), z4().table());
    }

    #[test]
    fn trivial_group_gives_tensor_power() {
        let k2 = complete(2);
        let f = orbit_fusion(&k2, 2, &[]).unwrap();
        let p = tensor_product(&k2, &k2).unwrap();
        assert_eq!(f.table(), p.table());
    }

    #[test]
    fn swap_first_two_positions() {
        let f = orbit_fusion(&complete(2), 3, &[vec![1, 0, 2]]).unwrap();
        // orbits of {0,1}^3 under swapping positions 0 and 1: 2·3 = 6
        assert_eq!(f.classes(), 6);
    }

    #[test]
    fn rejects_non_permutation() {
        assert!(orbit_fusion(&complete(2), 2, &[vec![0, 0]]).is_err());
    }
}
