//! Finite groups and groupoids given by multiplication tables.
//!
//! Convention: in a group table, `table[g][h]` is the product `g·h`. Permutation
//! groups are built with `g·h = g ∘ h` (apply `h` first), so in `S3` the product
//! `(12)·(123)` is `(23)`. Groupoid arrows compose the same way: `a·b` is
//! defined when `b` ends where `a` starts.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl Group {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let g = Group { names, table };
        g.validate()?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    fn validate(&self) -> Result<()> {
        let n = self.order();
        if n == 0 || self.names.len() != n || self.table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidTable("table must be n x n with entries < n".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| self.table[e][g] == g && self.table[g][e] == g))
            .ok_or_else(|| Error::InvalidTable("no identity".into()))?;
        for g in 0..n {
            if !(0..n).any(|h| self.table[g][h] == e && self.table[h][g] == e) {
                return Err(Error::InvalidTable(format!("element {g} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return Err(Error::InvalidTable(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn identity(&self) -> usize {
        (0..self.order()).find(|&e| self.table[e][e] == e).expect("validated group has an identity")
    }

    pub fn inverse(&self, g: usize) -> usize {
        let e = self.identity();
        (0..self.order()).find(|&h| self.table[g][h] == e).expect("validated group has inverses")
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Greedy generating set in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut generated = self.closure(&[]);
        for g in 0..self.order() {
            if !generated.contains(&g) {
                gens.push(g);
                generated = self.closure(&gens);
            }
        }
        gens
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = vec![self.identity()];
        let mut frontier = set.clone();
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(&y) {
                    set.push(y);
                    frontier.push(y);
                }
            }
        }
        set.sort_unstable();
        set
    }

    /// The subgroup on the given elements, with its own table; returns the group
    /// and the embedding (subgroup index -> ambient index).
    pub fn subgroup(&self, elements: &[usize]) -> Result<(Group, Vec<usize>)> {
        let pos = |x: usize| elements.iter().position(|&e| e == x);
        let mut table = Vec::new();
        for &a in elements {
            let mut row = Vec::new();
            for &b in elements {
                row.push(pos(self.mul(a, b)).ok_or_else(|| Error::InvalidTable("subset is not closed".into()))?);
            }
            table.push(row);
        }
        let names = elements.iter().map(|&e| self.names[e].clone()).collect();
        Ok((Group::new(names, table)?, elements.to_vec()))
    }

    pub fn is_normal_subgroup(&self, elements: &[usize]) -> bool {
        (0..self.order()).all(|g| {
            let gi = self.inverse(g);
            elements.iter().all(|&n| elements.contains(&self.mul(self.mul(g, n), gi)))
        })
    }

    pub fn cyclic(n: usize) -> Group {
        let names = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g^{i}") }).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Group { names, table }
    }

    /// `S3` as permutations of `{1,2,3}` in the order e, (12), (13), (23), (123), (132).
    pub fn symmetric3() -> Group {
        let perms: [([usize; 3], &str); 6] =
            [([0, 1, 2], "e"), ([1, 0, 2], "(12)"), ([2, 1, 0], "(13)"), ([0, 2, 1], "(23)"), ([1, 2, 0], "(123)"), ([2, 0, 1], "(132)")];
        let compose = |a: &[usize; 3], b: &[usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
        let table = perms
            .iter()
            .map(|(a, _)| {
                perms
                    .iter()
                    .map(|(b, _)| {
                        let c = compose(a, b);
                        perms.iter().position(|(p, _)| *p == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        Group { names: perms.iter().map(|(_, n)| n.to_string()).collect(), table }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Groupoid {
    pub objects: usize,
    pub names: Vec<String>,
    /// `(source, target)` per arrow.
    pub arrows: Vec<(usize, usize)>,
    /// `compose[a][b]` is `a·b` when `source(a) == target(b)`.
    pub compose: Vec<Vec<Option<usize>>>,
}

impl Groupoid {
    pub fn new(objects: usize, names: Vec<String>, arrows: Vec<(usize, usize)>, compose: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let g = Groupoid { objects, names, arrows, compose };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let n = self.arrows.len();
        let bad = |m: String| Err(Error::InvalidTable(m));
        if self.names.len() != n || self.compose.len() != n || self.compose.iter().any(|r| r.len() != n) {
            return bad("compose must be n x n".into());
        }
        for a in 0..n {
            for b in 0..n {
                let composable = self.arrows[a].0 == self.arrows[b].1;
                match self.compose[a][b] {
                    Some(c) if !composable || c >= n => return bad(format!("bad composite at ({a},{b})")),
                    Some(c) if self.arrows[c] != (self.arrows[b].0, self.arrows[a].1) => {
                        return bad(format!("composite at ({a},{b}) has wrong ends"))
                    }
                    None if composable => return bad(format!("missing composite at ({a},{b})")),
                    _ => {}
                }
            }
        }
        for x in 0..self.objects {
            self.identity_at(x).ok_or_else(|| Error::InvalidTable(format!("no identity at object {x}")))?;
        }
        for a in 0..n {
            let (s, t) = self.arrows[a];
            let ok = (0..n).any(|b| self.compose[a][b] == self.identity_at(t) && self.compose[b][a] == self.identity_at(s));
            if !ok {
                return bad(format!("arrow {a} has no inverse"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l = self.compose[a][b].and_then(|ab| self.compose[ab][c]);
                    let r = self.compose[b][c].and_then(|bc| self.compose[a][bc]);
                    if l != r {
                        return bad(format!("associativity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn identity_at(&self, x: usize) -> Option<usize> {
        (0..self.arrows.len()).find(|&e| {
            self.arrows[e] == (x, x)
                && (0..self.arrows.len()).all(|a| {
                    (self.arrows[a].0 != x || self.compose[a][e] == Some(a)) && (self.arrows[a].1 != x || self.compose[e][a] == Some(a))
                })
        })
    }

    pub fn inverse(&self, a: usize) -> usize {
        let (s, t) = self.arrows[a];
        (0..self.arrows.len())
            .find(|&b| self.compose[a][b] == self.identity_at(t) && self.compose[b][a] == self.identity_at(s))
            .expect("validated groupoid has inverses")
    }

    /// Pair groupoid on `n` objects; arrow `(i,j)` is listed row-major and
    /// runs from `j` to `i`, so it multiplies like the matrix unit `e_ij`.
    pub fn pair(n: usize) -> Groupoid {
        Self::pair_times_cyclic(n, 1)
    }

    /// Product of the pair groupoid on `n` objects with the cyclic group of order `m`.
    pub fn pair_times_cyclic(n: usize, m: usize) -> Groupoid {
        let idx = |i: usize, j: usize, g: usize| (i * n + j) * m + g;
        let mut names = Vec::new();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for g in 0..m {
                    names.push(if m == 1 { format!("e{}{}", i + 1, j + 1) } else { format!("e{}{}g{g}", i + 1, j + 1) });
                    arrows.push((j, i));
                }
            }
        }
        let total = n * n * m;
        let mut compose = vec![vec![None; total]; total];
        for i in 0..n {
            for j in 0..n {
                for g in 0..m {
                    for l in 0..n {
                        for h in 0..m {
                            compose[idx(i, j, g)][idx(j, l, h)] = Some(idx(i, l, (g + h) % m));
                        }
                    }
                }
            }
        }
        Groupoid { objects: n, names, arrows, compose }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_convention() {
        let s3 = Group::symmetric3();
        s3.validate().unwrap();
        let p = |n: &str| s3.index_of(n).unwrap();
        assert_eq!(s3.mul(p("(12)"), p("(123)")), p("(23)"));
        assert_eq!(s3.inverse(p("(123)")), p("(132)"));
        assert!(s3.is_normal_subgroup(&s3.closure(&[p("(123)")])));
        assert!(!s3.is_normal_subgroup(&s3.closure(&[p("(12)")])));
        assert_eq!(s3.generators().len(), 2);
    }

    #[test]
    fn invalid_tables_rejected() {
        assert!(Group::new(vec!["a".into(), "b".into()], vec![vec![0, 1], vec![1, 1]]).is_err());
        let mut g = Groupoid::pair(2);
        g.compose[0][0] = None;
        assert!(g.validate().is_err());
    }

    #[test]
    fn pair_groupoid_valid() {
        Groupoid::pair(3).validate().unwrap();
        Groupoid::pair_times_cyclic(2, 2).validate().unwrap();
    }
}
