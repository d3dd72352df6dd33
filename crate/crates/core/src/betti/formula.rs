use super::BettiTable;
use crate::ideals::PhiParams;

/// Stirling number of the second kind `S(m, r)`.
pub fn stirling_second(m: u32, r: u32) -> u64 {
    if r > m {
        return 0;
    }
    let mut row = vec![0u64; r as usize + 1];
    row[0] = 1;
    for _ in 1..=m {
        for j in (1..=r as usize).rev() {
            row[j] = j as u64 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[r as usize]
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All sequences of positive integers with sum at most `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for part in 1..=left {
            cur.push(part);
            out.push(cur.clone());
            go(left - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Internal degree `sum_s l_s phi(l_1 + ... + l_s)` attached to a composition.
pub fn composition_degree(p: &PhiParams, parts: &[usize]) -> u32 {
    let mut prefix = 0;
    parts
        .iter()
        .map(|&ls| {
            prefix += ls;
            ls as u32 * p.phi(prefix)
        })
        .sum()
}

/// Betti numbers of `R/I_phi` from the multinomial count over compositions.
pub fn betti_formula_monomial(p: &PhiParams) -> BettiTable {
    let mut t = BettiTable::new(p.n);
    t.add(0, 0, 1);
    for parts in compositions(p.n) {
        let used: usize = parts.iter().sum();
        let denom: u64 =
            parts.iter().map(|&x| factorial(x)).product::<u64>() * factorial(p.n - used);
        t.add(
            parts.len(),
            composition_degree(p, &parts),
            factorial(p.n) / denom,
        );
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_second(4, 2), 7);
        for m in 1..8 {
            assert_eq!(stirling_second(m, m), 1);
            assert_eq!(stirling_second(m, 1), 1);
        }
        assert_eq!(stirling_second(0, 0), 1);
        assert_eq!(stirling_second(3, 0), 0);
    }

    #[test]
    fn compositions_of_three() {
        // compositions of 3, 2 and 1
        assert_eq!(compositions(3).len(), 4 + 2 + 1);
        assert_eq!(compositions(2), vec![vec![1], vec![1, 1], vec![2]]);
    }

    #[test]
    fn two_variable_table() {
        // phi(1) = 2, phi(2) = 1: the ideal (x^2, y^2, xy)
        let t = betti_formula_monomial(&PhiParams::new(2, 1, 1).unwrap());
        assert_eq!(t.row(1), [(2, 3)]);
        assert_eq!(t.row(2), [(3, 2)]);
    }

    #[test]
    fn totals_follow_stirling() {
        for n in 2..=5 {
            let t = betti_formula_monomial(&PhiParams::new(n, 2, 1).unwrap());
            for (i, &b) in t.totals().iter().enumerate() {
                let expected = factorial(i) * stirling_second(n as u32 + 1, i as u32 + 1);
                assert_eq!(b, expected, "n = {n}, i = {i}");
            }
        }
    }
}
