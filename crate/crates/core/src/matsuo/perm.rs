use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GroupError;

/// A permutation of `{0, .., n-1}`, stored as its image array.
///
/// Products act left to right: `p.then(q)` maps `i` to `q(p(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::NotPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, j);
        Perm(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn then(&self, q: &Perm) -> Result<Perm, GroupError> {
        if self.degree() != q.degree() {
            return Err(GroupError::DegreeMismatch(self.degree(), q.degree()));
        }
        Ok(Perm(self.0.iter().map(|&i| q.0[i]).collect()))
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.degree()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j] = i;
        }
        Perm(v)
    }

    /// `g^-1 self g`.
    pub fn conjugate_by(&self, g: &Perm) -> Result<Perm, GroupError> {
        g.inverse().then(self)?.then(g)
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(self).expect("same degree");
            k += 1;
        }
        k
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.then(self).map(|p| p.is_identity()).unwrap_or(false)
    }
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = GroupError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Perm::new(v)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.0
    }
}

/// Cycle notation, 0-based, fixed points omitted.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.0[i];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
