//! Small dense linear algebra over `𝔽_p` and over `ℚ`.

/// A dense matrix over `𝔽_p`, stored by rows.
pub type MatP = Vec<Vec<u64>>;

/// Rank over `𝔽_p` of the rows of `m`.
pub fn rank_mod(m: &[Vec<u64>], p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = m
        .iter()
        .map(|r| r.iter().map(|x| x % p).collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inverse_mod(rows[rank][c], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// `m · x` for a column vector `x`.
pub fn apply_mod(m: &[Vec<u64>], x: &[u64], p: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b % p).sum::<u64>() % p)
        .collect()
}

/// Every `k`-dimensional subspace of `𝔽_p^d`, each given by a basis in
/// reduced row echelon form.
pub fn subspaces(d: usize, k: usize, p: u64) -> Vec<MatP> {
    let mut out = Vec::new();
    if k > d {
        return out;
    }
    for pivots in itertools::Itertools::combinations(0..d, k) {
        // free cells: row r, column c > pivots[r] with c not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pivots = &pivots;
                ((pivots[r] + 1)..d)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let total = (p as usize).pow(free.len() as u32);
        for code in 0..total {
            let mut m = vec![vec![0u64; d]; k];
            for (r, &c) in pivots.iter().enumerate() {
                m[r][c] = 1;
            }
            let mut x = code;
            for &(r, c) in &free {
                m[r][c] = (x % p as usize) as u64;
                x /= p as usize;
            }
            out.push(m);
        }
    }
    out
}

/// Rank over `ℚ` of an integer matrix, by fraction-free elimination.
pub fn rank_rational(m: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        for i in (rank + 1)..rows.len() {
            if rows[i][c] == 0 {
                continue;
            }
            let (a, b) = (rows[rank][c], rows[i][c]);
            let mut g = 0;
            let pivot = rows[rank].clone();
            for (x, y) in rows[i].iter_mut().zip(pivot) {
                *x = a * *x - b * y;
                g = gcd(g, *x);
            }
            if g > 1 {
                for x in rows[i].iter_mut() {
                    *x /= g;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts_are_gaussian() {
        // [4 over 2]_2 = 35, [3 over 1]_3 = 13
        assert_eq!(subspaces(4, 2, 2).len(), 35);
        assert_eq!(subspaces(3, 1, 3).len(), 13);
        assert_eq!(subspaces(3, 0, 3).len(), 1);
        for s in subspaces(4, 2, 3) {
            assert_eq!(rank_mod(&s, 3), 2);
        }
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_rational(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_rational(&[vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(rank_mod(&[vec![1, 1], vec![1, 3]], 2), 1);
    }
}
