use crate::error::{Error, Result};

/// A finite group given by its Cayley table. Element 0 need not be the
/// identity; `identity()` finds it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || names.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::Invalid("Cayley table must be a square table over its own elements".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::Invalid("Cayley table has no identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity) {
                return Err(Error::Invalid(format!("element {} has no inverse", names[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Invalid("Cayley table is not associative".into()));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, table, identity })
    }

    /// The cyclic group `C_m = <g>`, elements `g^0, …, g^(m-1)`.
    pub fn cyclic(m: usize) -> Self {
        assert!(m >= 1, "cyclic group order must be positive");
        let names = (0..m)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        FiniteGroup { names, table, identity: 0 }
    }

    /// The symmetric group on three letters; elements are the permutations of
    /// `{1,2,3}` in lexicographic order of their one-line notation, composed
    /// right to left.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed under composition");
        let table = perms.iter().map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect()).collect();
        let names = perms.iter().map(|p| format!("[{}{}{}]", p[0] + 1, p[1] + 1, p[2] + 1)).collect();
        FiniteGroup { names, table, identity: 0 }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).expect("validated group")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.table[a][b] == self.table[b][a]))
    }
}
