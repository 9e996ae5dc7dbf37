use std::collections::HashMap;

use num_integer::Integer;

use crate::quadform::UnimodularMatrix;

/// A choice of `R(p^beta)`: determinant-one matrices whose first rows run
/// over the classes of coprime pairs under `(u1, u2) ~ (a u1, a u2) mod p^beta`,
/// `a` a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSet {
    pub p: u64,
    pub beta: u32,
    pub members: Vec<UnimodularMatrix>,
}

/// `{I}` for `beta = 0`; otherwise `[[1, u], [0, 1]]` for `0 <= u < p^beta`
/// and `[[c p, 1], [-1, 0]]` for `0 <= c < p^(beta - 1)`.
pub fn coset_set(p: u64, beta: u32) -> CosetSet {
    let members = if beta == 0 {
        vec![UnimodularMatrix::IDENTITY]
    } else {
        let q = p.pow(beta) as i64;
        let p = p as i64;
        (0..q)
            .map(|u| UnimodularMatrix::new(1, u, 0, 1).unwrap())
            .chain((0..q / p).map(|c| UnimodularMatrix::new(c * p, 1, -1, 0).unwrap()))
            .collect()
    };
    CosetSet { p, beta, members }
}

/// Outcome of the brute-force check of a coset set against the definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetCheck {
    pub size: usize,
    pub expected_size: usize,
    /// Every admissible pair is equivalent to exactly one member.
    pub complete: bool,
    /// Members that are pairwise equivalent, or not determinant one.
    pub defects: usize,
}

impl CosetCheck {
    pub fn passed(&self) -> bool {
        self.complete && self.defects == 0 && self.size == self.expected_size
    }
}

/// Checks `set` by enumerating every pair `(u1, u2)` mod `p^beta` not both
/// divisible by `p` (exactly the reductions of coprime integer pairs) and
/// comparing its full unit orbit against the members' first rows.
pub fn coset_completeness(set: &CosetSet) -> CosetCheck {
    let (p, beta) = (set.p as i64, set.beta);
    let q = p.pow(beta);
    let expected_size = if beta == 0 { 1 } else { (q + q / p) as usize };
    let key = |(a, b): (i64, i64)| (a.rem_euclid(q), b.rem_euclid(q));

    let mut defects = 0;
    let mut by_row: HashMap<(i64, i64), usize> = HashMap::new();
    for (i, m) in set.members.iter().enumerate() {
        let (u1, u2) = m.first_row();
        if m.det() != 1 || u1.gcd(&u2) != 1 {
            defects += 1;
        }
        by_row.insert(key((u1, u2)), i);
    }
    let units: Vec<i64> = (1..=q).filter(|a| a.gcd(&q) == 1).collect();

    let mut complete = true;
    let mut hit = vec![0usize; set.members.len()];
    for u1 in 0..q {
        for u2 in 0..q {
            if q > 1 && u1 % p == 0 && u2 % p == 0 {
                continue;
            }
            let mut matches: Vec<usize> = units
                .iter()
                .filter_map(|a| by_row.get(&key((a * u1, a * u2))).copied())
                .collect();
            matches.sort_unstable();
            matches.dedup();
            if matches.len() != 1 {
                complete = false;
            }
            for m in matches {
                hit[m] += 1;
            }
        }
    }
    // identical first rows collapse in `by_row`
    defects += set.members.len() - by_row.len();
    if hit.contains(&0) {
        complete = false;
    }
    CosetCheck {
        size: set.members.len(),
        expected_size,
        complete,
        defects,
    }
}
