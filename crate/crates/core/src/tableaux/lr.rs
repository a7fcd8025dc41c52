//! Littlewood-Richardson and Sundaram predicates, coefficient counting, and
//! the even-shape extraction used by the explicit branching bijection.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableaux::{skew_tableaux, Alphabet, Tableau};
use crate::weights::Rank;

/// A skew semistandard type-A filling is Littlewood-Richardson of weight
/// `eta` when its word is dominant and its content equals `eta`.
pub fn is_lr(t: &Tableau, eta: &Partition) -> bool {
    if t.alphabet() != Alphabet::A {
        return false;
    }
    let counts = t.content_counts();
    let matches_eta = counts.len() == eta.len()
        && counts
            .iter()
            .enumerate()
            .all(|(i, &c)| c == eta.row(i));
    matches_eta && t.word().is_dominant()
}

/// The `n`-symplectic Sundaram condition on a Littlewood-Richardson filling
/// of weight `eta`: for `i = 0, 1, ..., floor(l/2)`, where `l` is the longest
/// column of `eta`, the letter `2i + 1` never occupies a row strictly below
/// row `n + i` (rows counted 1-based from the top of the outer shape).
///
/// The bound `floor(l/2)` reads the stated range through the even-weight case
/// it is designed for, where `l` is even; odd weights are still accepted.
pub fn is_sundaram(t: &Tableau, eta: &Partition, n: Rank) -> bool {
    if !is_lr(t, eta) {
        return false;
    }
    let longest_column = eta.len() as u32;
    for i in 0..=(longest_column / 2) {
        let letter = 2 * i + 1;
        let row_bound = n.n() + i; // 1-based
        for (r, row) in t.entry_rows().iter().enumerate() {
            if (r + 1) as u32 > row_bound && row.iter().any(|l| l.value() == letter) {
                return false;
            }
        }
    }
    true
}

/// All Littlewood-Richardson fillings of `lambda / nu` with weight `eta`.
///
/// Entries are capped at the row count of `lambda`: a dominant word needs a
/// `k - 1` before every `k`, and semistandardness then forces letter `k` into
/// row `k` or below, so no valid filling is lost. Letters without boxes in
/// `eta` cannot appear either, giving the second cap.
pub fn lr_tableaux(lambda: &Partition, nu: &Partition, eta: &Partition) -> Result<Vec<Tableau>> {
    if !lambda.contains(nu) {
        return Err(Error::InnerNotContained);
    }
    if lambda.size() != nu.size() + eta.size() {
        return Ok(Vec::new());
    }
    let max_letter = (lambda.len() as u32).min(eta.len() as u32);
    Ok(skew_tableaux(lambda, nu, max_letter)?
        .filter(|t| is_lr(t, eta))
        .collect())
}

/// `|LR(lambda/nu, eta)|`, the Littlewood-Richardson coefficient.
pub fn lr_coeff(lambda: &Partition, nu: &Partition, eta: &Partition) -> Result<u64> {
    Ok(lr_tableaux(lambda, nu, eta)?.len() as u64)
}

/// The Sundaram-filtered fillings of `lambda / nu` with weight `eta`.
pub fn lrs_tableaux(
    lambda: &Partition,
    nu: &Partition,
    eta: &Partition,
    n: Rank,
) -> Result<Vec<Tableau>> {
    Ok(lr_tableaux(lambda, nu, eta)?
        .into_iter()
        .filter(|t| is_sundaram(t, eta, n))
        .collect())
}

/// `|LRS(lambda/nu, eta)|`.
pub fn lrs_coeff(lambda: &Partition, nu: &Partition, eta: &Partition, n: Rank) -> Result<u64> {
    Ok(lrs_tableaux(lambda, nu, eta, n)?.len() as u64)
}

/// Cancels each barred letter of the restricted tableau against an earlier
/// unbarred letter of the same value and returns the shape formed by the
/// blanked boxes: its column lengths are the per-column blank counts, sorted
/// decreasingly.
///
/// Partner choice: a barred letter takes the unpaired plain letter sitting in
/// its own column when there is one (strictness allows at most one), and
/// otherwise the nearest earlier unpaired plain letter in word order. The
/// in-column preference is what makes the blanked boxes of a semistandard
/// tableau stack into even columns; word order alone can split a pair across
/// two columns.
///
/// Dominance of the restricted word guarantees every barred letter finds a
/// partner, and is required.
pub fn pairing_shape(t: &Tableau, n: Rank) -> Result<Partition> {
    if !t.is_straight() {
        return Err(Error::NotSemistandard("pairing needs a straight shape".into()));
    }
    let restricted = t.restrict(n)?;
    if !restricted.word().is_dominant() {
        return Err(Error::RestrictedWordNotDominant);
    }
    // unpaired plain cells per value, in word order
    let mut unpaired: HashMap<u32, Vec<(usize, u32)>> = HashMap::new();
    let mut blanks_per_column: HashMap<u32, u32> = HashMap::new();
    for (r, c, letter) in restricted.word_cells() {
        if !letter.is_barred() {
            unpaired.entry(letter.value()).or_default().push((r, c));
            continue;
        }
        let stack = unpaired
            .get_mut(&letter.value())
            .filter(|s| !s.is_empty())
            .ok_or(Error::RestrictedWordNotDominant)?;
        let idx = stack
            .iter()
            .rposition(|&(_, pc)| pc == c)
            .unwrap_or(stack.len() - 1);
        let (_, partner_col) = stack.remove(idx);
        *blanks_per_column.entry(partner_col).or_default() += 1;
        *blanks_per_column.entry(c).or_default() += 1;
    }
    let mut column_lengths: Vec<u32> = blanks_per_column.into_values().collect();
    column_lengths.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Partition::new(column_lengths)?.conjugate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::ssyt_tableaux;

    fn p(rows: &[u32]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn n(v: u32) -> Rank {
        Rank::new(v).unwrap()
    }

    fn skew(s: &str) -> Tableau {
        Tableau::parse(s, Alphabet::A).unwrap()
    }

    #[test]
    fn lr_predicate() {
        assert!(is_lr(&skew(". 1 1/. 2/2"), &p(&[2, 2])));
        // a single 1 at the bottom of a height-3 column is still lattice
        assert!(is_lr(&skew("././1"), &p(&[1])));
        assert!(!is_lr(&skew("2"), &p(&[1])));
        // content mismatch
        assert!(!is_lr(&skew("1"), &p(&[2])));
    }

    #[test]
    fn sundaram_predicate() {
        // weight (2,2): longest column 2, so letters 1 and 3 are constrained
        assert!(is_sundaram(&skew(". 1 1/. 2/2"), &p(&[2, 2]), n(2)));
        // a 1 in row 3 with n = 2 violates the i = 0 case
        let one_deep = skew("././1");
        assert!(is_lr(&one_deep, &p(&[1])));
        assert!(!is_sundaram(&one_deep, &p(&[1]), n(2)));
        // any rank at least 3 clears a three-row tableau
        assert!(is_sundaram(&one_deep, &p(&[1]), n(3)));
    }

    #[test]
    fn lr_coefficients() {
        assert_eq!(lr_coeff(&p(&[3, 2, 1]), &p(&[1, 1]), &p(&[2, 2])).unwrap(), 1);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &Partition::empty()).unwrap(), 1);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])).unwrap(), 1);
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[1]), &p(&[2])).unwrap(), 1);
        // size mismatch short-circuits to zero
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[1]), &p(&[1])).unwrap(), 0);
        assert!(lr_coeff(&p(&[1]), &p(&[2]), &p(&[1])).is_err());
    }

    /// Independent check of a coefficient by enumerating every function from
    /// the skew cells to the alphabet and testing the three defining
    /// conditions directly on the grid.
    #[test]
    fn lr_coeff_against_direct_search() {
        let lambda = p(&[3, 2, 1]);
        let nu = p(&[1, 1]);
        let eta = p(&[2, 2]);
        let cells: Vec<(usize, u32)> = (0..lambda.len())
            .flat_map(|r| (nu.row(r)..lambda.row(r)).map(move |c| (r, c)))
            .collect();
        let k = 4u32;
        let mut found = 0;
        for code in 0..(k as u64).pow(cells.len() as u32) {
            let mut vals = Vec::new();
            let mut x = code;
            for _ in 0..cells.len() {
                vals.push((x % k as u64) as u32 + 1);
                x /= k as u64;
            }
            let get = |r: usize, c: u32| {
                cells.iter().position(|&(rr, cc)| (rr, cc) == (r, c)).map(|i| vals[i])
            };
            // semistandard on the grid
            let mut ok = true;
            for (i, &(r, c)) in cells.iter().enumerate() {
                if let Some(left) = c.checked_sub(1).and_then(|cc| get(r, cc)) {
                    ok &= left <= vals[i];
                }
                if r > 0 {
                    if let Some(above) = get(r - 1, c) {
                        ok &= above < vals[i];
                    }
                }
            }
            // content equals eta
            for v in 1..=k {
                let count = vals.iter().filter(|&&x| x == v).count() as u32;
                ok &= count == eta.row(v as usize - 1);
            }
            // dominant word: read rows right to left, top to bottom
            let mut word = Vec::new();
            for r in 0..lambda.len() {
                for c in (nu.row(r)..lambda.row(r)).rev() {
                    word.push(get(r, c).unwrap());
                }
            }
            let mut counts = vec![0i64; k as usize];
            for &v in &word {
                counts[v as usize - 1] += 1;
                ok &= counts.windows(2).all(|w| w[0] >= w[1]);
            }
            if ok {
                found += 1;
            }
        }
        assert_eq!(found, 1);
        assert_eq!(lr_coeff(&lambda, &nu, &eta).unwrap(), 1);
    }

    #[test]
    fn pairing_shapes() {
        let t = Tableau::straight_a(vec![vec![1, 1, 1], vec![2, 2], vec![3]]).unwrap();
        assert_eq!(pairing_shape(&t, n(2)).unwrap(), p(&[1, 1]));

        let t = Tableau::straight_a(vec![vec![1, 1], vec![2]]).unwrap();
        assert_eq!(pairing_shape(&t, n(2)).unwrap(), Partition::empty());

        let t = Tableau::straight_a(vec![vec![1, 1], vec![4]]).unwrap();
        assert_eq!(pairing_shape(&t, n(2)).unwrap(), p(&[1, 1]));

        // non-dominant restriction is rejected
        let t = Tableau::straight_a(vec![vec![1, 3]]).unwrap();
        assert!(pairing_shape(&t, n(2)).is_err());
    }

    /// The case that forces the in-column preference: the barred partner of
    /// the restricted 5 must be the 2 directly above it, not the 2 that is
    /// nearer in word order, or the blanks land in two different columns and
    /// the extracted shape stops being even.
    #[test]
    fn pairing_prefers_own_column() {
        let t = Tableau::straight_a(vec![vec![1, 1], vec![2, 2], vec![3, 5]]).unwrap();
        let shape = pairing_shape(&t, n(3)).unwrap();
        assert_eq!(shape, p(&[1, 1]));
        assert!(shape.is_even());
    }

    #[test]
    fn pairing_shape_even_for_small_dominant_tableaux() {
        for rank in [2u32, 3] {
            let rk = n(rank);
            for size in 0..=5u32 {
                for lambda in Partition::all_of_size(size, 2 * rank as usize) {
                    for t in ssyt_tableaux(&lambda, 2 * rank).unwrap() {
                        let restricted_word = t.word().restrict(rk).unwrap();
                        if !restricted_word.is_dominant() {
                            continue;
                        }
                        let shape = pairing_shape(&t, rk).unwrap();
                        assert!(shape.is_even(), "odd shape {shape} for {t} at n={rank}");
                    }
                }
            }
        }
    }
}
