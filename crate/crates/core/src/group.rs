//! Finite groups given by a multiplication table.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates closure, associativity, a two-sided identity and inverses.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidGroupTable("empty group".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGroupTable(format!("table must be {n}x{n}")));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidGroupTable("table entry outside the element list".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroupTable(format!(
                            "not associative: ({0}{1}){2} != {0}({1}{2})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroupTable("no identity element".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
                return Err(Error::InvalidGroupTable(format!("`{}` has no inverse", names[a])));
            }
        }
        Ok(FiniteGroup { names, table, identity })
    }

    /// `Z/m` with elements `g^0 .. g^{m-1}`.
    pub fn cyclic(m: usize) -> Self {
        let names = (0..m).map(|k| if k == 0 { "e".to_string() } else { format!("g{k}") }).collect();
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        Self::new(names, table).expect("cyclic group table is valid")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_groups_validate() {
        let g = FiniteGroup::cyclic(3);
        assert_eq!(g.mul(1, 2), 0);
        assert!(g.is_abelian());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // Identity e = 0 and each element self-inverse, but (1·1)·2 = 2 while 1·(1·2) = 1.
        let names = vec!["e".into(), "a".into(), "b".into()];
        let table = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]];
        assert!(matches!(FiniteGroup::new(names, table), Err(Error::InvalidGroupTable(_))));
    }

    #[test]
    fn missing_identity_is_rejected() {
        let names = vec!["a".into(), "b".into()];
        let table = vec![vec![1, 1], vec![1, 1]];
        assert!(FiniteGroup::new(names, table).is_err());
    }
}
