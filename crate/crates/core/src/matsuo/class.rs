use std::collections::{BTreeSet, HashSet, VecDeque};

use super::Perm;
use crate::error::GroupError;

/// Largest class `close_class` will build.
pub const MAX_CLASS_SIZE: usize = 10_000;

/// A class `D` of 3-transpositions, closed under conjugation and sorted
/// lexicographically by image array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranspositionClass {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub class_d: Vec<Perm>,
}

/// Closes `seeds` under conjugation by `gens` and by the class itself, then
/// checks that every product of two class elements has order at most 3.
pub fn close_class(
    name: &str,
    gens: &[Perm],
    seeds: &[Perm],
) -> Result<TranspositionClass, GroupError> {
    let degree = seeds
        .first()
        .or(gens.first())
        .map(Perm::degree)
        .ok_or_else(|| GroupError::Format("no seeds".into()))?;
    for p in gens.iter().chain(seeds) {
        if p.degree() != degree {
            return Err(GroupError::DegreeMismatch(degree, p.degree()));
        }
    }
    for s in seeds {
        if !s.is_involution() {
            return Err(GroupError::NotInvolution(s.images().to_vec()));
        }
    }
    let mut found: Vec<Perm> = Vec::new();
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut queue: VecDeque<Perm> = VecDeque::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            found.push(s.clone());
            queue.push_back(s.clone());
        }
    }
    while let Some(d) = queue.pop_front() {
        let conjugators: Vec<Perm> = gens.iter().chain(found.iter()).cloned().collect();
        for g in &conjugators {
            let c = d.conjugate_by(g)?;
            if seen.insert(c.clone()) {
                if found.len() >= MAX_CLASS_SIZE {
                    return Err(GroupError::ClassTooLarge(MAX_CLASS_SIZE));
                }
                found.push(c.clone());
                queue.push_back(c);
            }
        }
        // conjugating the earlier elements by the new one
        let earlier: Vec<Perm> = found.clone();
        for e in &earlier {
            let c = e.conjugate_by(&d)?;
            if seen.insert(c.clone()) {
                if found.len() >= MAX_CLASS_SIZE {
                    return Err(GroupError::ClassTooLarge(MAX_CLASS_SIZE));
                }
                found.push(c.clone());
                queue.push_back(c);
            }
        }
    }
    let class_d: Vec<Perm> = found
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    for (i, d) in class_d.iter().enumerate() {
        for e in &class_d[i + 1..] {
            let order = d.then(e)?.order();
            if order > 3 {
                return Err(GroupError::OrderViolation {
                    d: d.images().to_vec(),
                    e: e.images().to_vec(),
                    order,
                });
            }
        }
    }
    Ok(TranspositionClass {
        name: name.to_string(),
        degree,
        generators: gens.to_vec(),
        class_d,
    })
}

impl TranspositionClass {
    pub fn len(&self) -> usize {
        self.class_d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_d.is_empty()
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.class_d.binary_search(p).ok()
    }

    /// Order of the group generated by `D`, or `None` past `cap` elements.
    pub fn generated_order(&self, cap: usize) -> Option<usize> {
        let id = Perm::identity(self.degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for d in &self.class_d {
                let h = g.then(d).expect("same degree");
                if seen.insert(h.clone()) {
                    if seen.len() > cap {
                        return None;
                    }
                    queue.push_back(h);
                }
            }
        }
        Some(seen.len())
    }
}
