//! Exact character computations: type-A characters from tableau contents,
//! type-C weight multiplicities via the Freudenthal recursion, and the
//! decomposition of a restricted character into irreducible type-C
//! characters.
//!
//! The type-C side is computed purely from root-system data, so it shares no
//! code path with the tableau combinatorics it is used to audit.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableaux::ssyt_tableaux;
use crate::weights::{dominant_c, weyl_dim, EpsWeightC, LieType, Rank};

/// A finite weight multiset with positive integer multiplicities.
/// Coordinates have length `2n` for type A and `n` for type C.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    lie_type: LieType,
    n: Rank,
    weights: BTreeMap<Vec<i64>, u64>,
}

impl Character {
    pub fn new(lie_type: LieType, n: Rank, weights: BTreeMap<Vec<i64>, u64>) -> Result<Self> {
        let dim = match lie_type {
            LieType::A => 2 * n.n() as usize,
            LieType::C => n.n() as usize,
        };
        for coords in weights.keys() {
            if coords.len() != dim {
                return Err(Error::WrongLength { got: coords.len(), expected: dim });
            }
        }
        Ok(Character { lie_type, n, weights })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> Rank {
        self.n
    }

    pub fn weights(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.weights
    }

    pub fn multiplicity(&self, coords: &[i64]) -> u64 {
        self.weights.get(coords).copied().unwrap_or(0)
    }

    /// Total multiplicity, i.e. the dimension of the underlying module.
    pub fn mass(&self) -> u128 {
        self.weights.values().map(|&m| u128::from(m)).sum()
    }

    /// Sorted `[coords, mult]` pairs.
    pub fn to_json(&self) -> Value {
        let pairs: Vec<Value> = self
            .weights
            .iter()
            .map(|(coords, mult)| json!([coords, mult]))
            .collect();
        json!({
            "type": self.lie_type.tag(),
            "n": self.n.n(),
            "weights": pairs,
        })
    }
}

/// Guard for the tableau-generated type-A character: the enumeration walks
/// one tableau per dimension unit, so cap the dimension at desk scale.
pub const CHAR_DIM_GUARD: u64 = 5_000_000;

/// Character of the irreducible type-A module with highest weight `lambda`,
/// as the content multiset of its semistandard tableaux with entries up to
/// `2n`. The total mass equals the Weyl dimension.
pub fn char_a(lambda: &Partition, n: Rank) -> Result<Character> {
    let dim = weyl_dim(lambda, LieType::A, n)?;
    if dim > CHAR_DIM_GUARD {
        return Err(Error::SizeGuard(format!(
            "type-A character of dimension {dim} exceeds {CHAR_DIM_GUARD}"
        )));
    }
    let width = 2 * n.n() as usize;
    let mut weights: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for t in ssyt_tableaux(lambda, n.a_letters())? {
        let mut content = vec![0i64; width];
        for l in t.entry_rows().iter().flatten() {
            content[l.value() as usize - 1] += 1;
        }
        *weights.entry(content).or_default() += 1;
    }
    debug_assert_eq!(weights.values().map(|&m| u128::from(m)).sum::<u128>(), u128::from(dim));
    Ok(Character { lie_type: LieType::A, n, weights })
}

/// Pushes a type-A character forward along the coordinate restriction
/// `mu_j - mu_{2n+1-j}`. Mass is preserved.
pub fn restrict_char(c: &Character) -> Result<Character> {
    if c.lie_type != LieType::A {
        return Err(Error::AlphabetMismatch { expected: "A", got: "C" });
    }
    let mut weights: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (coords, mult) in &c.weights {
        let m = coords.len();
        let restricted: Vec<i64> = (0..m / 2).map(|j| coords[j] - coords[m - 1 - j]).collect();
        *weights.entry(restricted).or_default() += mult;
    }
    Ok(Character { lie_type: LieType::C, n: c.n, weights })
}

/// Positive roots and Weyl vector of `C_n` in coordinates: `e_i - e_j` and
/// `e_i + e_j` for `i < j`, and `2 e_i`; `rho = (n, n-1, ..., 1)`.
#[derive(Clone, Debug)]
pub struct RootSystemC {
    n: Rank,
    positive_roots: Vec<Vec<i64>>,
    rho: Vec<i64>,
}

impl RootSystemC {
    pub fn new(n: Rank) -> Self {
        let dim = n.n() as usize;
        let mut positive_roots = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                let mut r = vec![0i64; dim];
                r[i] = 1;
                r[j] = -1;
                positive_roots.push(r.clone());
                r[j] = 1;
                positive_roots.push(r);
            }
            let mut r = vec![0i64; dim];
            r[i] = 2;
            positive_roots.push(r);
        }
        let rho = (0..dim).map(|i| (dim - i) as i64).collect();
        RootSystemC { n, positive_roots, rho }
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &[i64] {
        &self.rho
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dominant representative under the hyperoctahedral Weyl group: absolute
/// values sorted decreasingly.
fn dominant_rep(coords: &[i64]) -> Vec<i64> {
    let mut v: Vec<i64> = coords.iter().map(|c| c.abs()).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Whether `high - low` is a non-negative integer combination of the simple
/// roots of `C_n`: all partial sums of the difference non-negative and the
/// total sum non-negative and even.
fn in_root_cone(high: &[i64], low: &[i64]) -> bool {
    let mut acc = 0i64;
    for (h, l) in high.iter().zip(low) {
        acc += h - l;
        if acc < 0 {
            return false;
        }
    }
    acc >= 0 && acc % 2 == 0
}

/// Weight multiplicity table of one irreducible type-C module, filled by the
/// Freudenthal recursion
///
/// ```text
/// (|nu + rho|^2 - |mu + rho|^2) m_mu = 2 sum_{alpha > 0} sum_{k >= 1} m_{mu + k alpha} (mu + k alpha, alpha)
/// ```
///
/// memoized over dominant representatives.
pub struct FreudenthalTable {
    nu: Vec<i64>,
    roots: RootSystemC,
    nu_norm: i64,
    memo: HashMap<Vec<i64>, u64>,
}

impl FreudenthalTable {
    pub fn new(nu_hat: &Partition, n: Rank) -> Result<Self> {
        let dim = n.n() as usize;
        if nu_hat.len() > dim {
            return Err(Error::TooManyRows { rows: nu_hat.len(), max: dim });
        }
        let nu: Vec<i64> = (0..dim).map(|i| i64::from(nu_hat.row(i))).collect();
        let roots = RootSystemC::new(n);
        let nu_rho: Vec<i64> = nu.iter().zip(roots.rho()).map(|(a, b)| a + b).collect();
        let nu_norm = dot(&nu_rho, &nu_rho);
        Ok(FreudenthalTable { nu, roots, nu_norm, memo: HashMap::new() })
    }

    /// Multiplicity of an arbitrary (not necessarily dominant) weight.
    pub fn multiplicity(&mut self, coords: &[i64]) -> u64 {
        let dom = dominant_rep(coords);
        if let Some(&m) = self.memo.get(&dom) {
            return m;
        }
        let m = self.compute_dominant(&dom);
        self.memo.insert(dom, m);
        m
    }

    fn compute_dominant(&mut self, dom: &[i64]) -> u64 {
        if dom == self.nu.as_slice() {
            return 1;
        }
        if !in_root_cone(&self.nu, dom) {
            return 0;
        }
        // |mu| strictly grows along k for dominant mu and positive alpha, so
        // the norm bound |w|^2 <= |nu|^2 on module weights terminates each k-sweep
        let nu_sq = dot(&self.nu, &self.nu);
        let mut rhs: i128 = 0;
        let roots = self.roots.positive_roots().to_vec();
        for alpha in &roots {
            let mut w: Vec<i64> = dom.to_vec();
            loop {
                for (wi, ai) in w.iter_mut().zip(alpha) {
                    *wi += ai;
                }
                if dot(&w, &w) > nu_sq {
                    break;
                }
                let m = self.multiplicity(&w);
                if m > 0 {
                    rhs += i128::from(m) * i128::from(dot(&w, alpha));
                }
            }
        }
        let dom_rho: Vec<i64> = dom.iter().zip(self.roots.rho()).map(|(a, b)| a + b).collect();
        let denom = i128::from(self.nu_norm - dot(&dom_rho, &dom_rho));
        debug_assert!(denom > 0, "denominator vanished off the highest weight");
        let val = 2 * rhs / denom;
        debug_assert_eq!(2 * rhs % denom, 0, "recursion must divide exactly");
        u64::try_from(val).expect("multiplicities are non-negative")
    }
}

/// Single weight multiplicity `dim L(nu_hat)_mu_hat` for `C_n`.
pub fn freudenthal_mult(nu_hat: &Partition, mu_hat: &EpsWeightC, n: Rank) -> Result<u64> {
    let mut table = FreudenthalTable::new(nu_hat, n)?;
    Ok(table.multiplicity(mu_hat.coords()))
}

/// Full character of the irreducible `C_n` module with highest weight
/// `nu_hat`, assembled from the dominant multiplicities and their
/// signed-permutation orbits.
pub fn char_c(nu_hat: &Partition, n: Rank) -> Result<Character> {
    let dim_guard = weyl_dim(nu_hat, LieType::C, n)?;
    if dim_guard > CHAR_DIM_GUARD {
        return Err(Error::SizeGuard(format!(
            "type-C character of dimension {dim_guard} exceeds {CHAR_DIM_GUARD}"
        )));
    }
    let dim = n.n() as usize;
    let mut table = FreudenthalTable::new(nu_hat, n)?;
    let nu: Vec<i64> = (0..dim).map(|i| i64::from(nu_hat.row(i))).collect();
    let mut weights: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for dom in dominant_weights_below(&nu) {
        let m = table.multiplicity(&dom);
        if m == 0 {
            continue;
        }
        for w in signed_orbit(&dom) {
            weights.insert(w, m);
        }
    }
    Ok(Character { lie_type: LieType::C, n, weights })
}

/// All dominant coordinate vectors `mu` with `nu - mu` in the root cone.
fn dominant_weights_below(nu: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let cap = nu.first().copied().unwrap_or(0);
    fn rec(nu: &[i64], pos: usize, prev: i64, stack: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos == nu.len() {
            if in_root_cone(nu, stack) {
                out.push(stack.clone());
            }
            return;
        }
        for v in 0..=prev {
            stack.push(v);
            // partial sums of nu - mu must stay non-negative
            let partial: i64 = nu[..=pos].iter().sum::<i64>() - stack.iter().sum::<i64>();
            if partial >= 0 {
                rec(nu, pos + 1, v, stack, out);
            }
            stack.pop();
        }
    }
    rec(nu, 0, cap, &mut stack, &mut out);
    out
}

/// Orbit of a dominant vector under permutations and sign flips.
fn signed_orbit(dom: &[i64]) -> Vec<Vec<i64>> {
    let mut orbit: Vec<Vec<i64>> = vec![Vec::new()];
    // build all sign patterns value by value, then all distinct permutations
    let mut signed: Vec<Vec<i64>> = vec![vec![]];
    for &v in dom {
        let mut next = Vec::new();
        for s in &signed {
            let mut a = s.clone();
            a.push(v);
            next.push(a);
            if v != 0 {
                let mut b = s.clone();
                b.push(-v);
                next.push(b);
            }
        }
        signed = next;
    }
    let mut set = std::collections::BTreeSet::new();
    for s in signed {
        let mut perm = s;
        perm.sort_unstable();
        // iterate distinct permutations in lexicographic order
        loop {
            set.insert(perm.clone());
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    orbit.clear();
    orbit.extend(set);
    orbit
}

fn next_permutation(v: &mut [i64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Decomposes a type-C character into irreducible highest weights by
/// repeatedly subtracting the character of the graded-lexicographically
/// maximal dominant weight with nonzero multiplicity.
pub fn decompose_c(c: &Character) -> Result<BTreeMap<Partition, u64>> {
    if c.lie_type != LieType::C {
        return Err(Error::AlphabetMismatch { expected: "C", got: "A" });
    }
    let n = c.n;
    let mut rem: BTreeMap<Vec<i64>, i64> = c
        .weights
        .iter()
        .map(|(k, &v)| (k.clone(), i64::try_from(v).expect("multiplicity fits i64")))
        .collect();
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    loop {
        let top = rem
            .iter()
            .filter(|(coords, &m)| m != 0 && dominant_c(coords))
            .max_by_key(|(coords, _)| (coords.iter().sum::<i64>(), (*coords).clone()));
        let Some((coords, &mult)) = top else { break };
        if mult < 0 {
            return Err(Error::NotACharacter(format!(
                "dominant weight {coords:?} has multiplicity {mult}"
            )));
        }
        let coords = coords.clone();
        let highest = Partition::new(coords.iter().map(|&x| x as u32).collect::<Vec<_>>())?;
        let irr = char_c(&highest, n)?;
        for (w, m) in irr.weights() {
            *rem.entry(w.clone()).or_default() -= mult * i64::try_from(*m).expect("fits");
        }
        out.insert(highest, u64::try_from(mult).expect("checked non-negative"));
    }
    if let Some((coords, m)) = rem.iter().find(|(_, &m)| m != 0) {
        return Err(Error::NotACharacter(format!(
            "residue {m} at non-dominant weight {coords:?}"
        )));
    }
    Ok(out)
}
