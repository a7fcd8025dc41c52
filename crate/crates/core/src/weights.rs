//! Weight lattices for the two root systems in play.
//!
//! The ambient pair is `A_{2n-1}` (traceless (2n)x(2n) matrices) together
//! with the fixed-point subalgebra of the diagram folding, of type `C_n`.
//! Type-A weights are kept in gl-style coordinates: a tableau content is a
//! vector of 2n non-negative letter counts, and two coordinate vectors that
//! differ by a constant vector represent the same sl-weight class. The
//! restriction map to `C_n` coordinates is
//!
//! ```text
//! res(mu)_j = mu_j - mu_{2n+1-j},    1 <= j <= n,
//! ```
//!
//! which kills constant vectors, so it is well defined on sl-classes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// The symplectic rank `n`. The type-A side has rank `2n - 1` and alphabet
/// size `2n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Rank(u32);

impl Rank {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank);
        }
        Ok(Rank(n))
    }

    pub fn n(self) -> u32 {
        self.0
    }

    /// Rank of the type-A side, `2n - 1`.
    pub fn a_rank(self) -> usize {
        2 * self.0 as usize - 1
    }

    /// Size of the type-A alphabet, `2n`.
    pub fn a_letters(self) -> u32 {
        2 * self.0
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LieType {
    A,
    C,
}

impl LieType {
    pub fn tag(self) -> &'static str {
        match self {
            LieType::A => "A",
            LieType::C => "C",
        }
    }
}

/// A type-A weight in fundamental-weight coordinates `(a_1, ..., a_{2n-1})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FundamentalWeightA {
    coeffs: Vec<i64>,
}

/// A type-C weight in fundamental-weight coordinates `(a_1, ..., a_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FundamentalWeightC {
    coeffs: Vec<i64>,
}

impl FundamentalWeightA {
    pub fn new(coeffs: Vec<i64>, n: Rank) -> Result<Self> {
        if coeffs.len() != n.a_rank() {
            return Err(Error::WrongLength { got: coeffs.len(), expected: n.a_rank() });
        }
        Ok(FundamentalWeightA { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&a| a >= 0)
    }

    /// Row-length shape of a dominant weight: row `j` is the suffix sum of the
    /// coefficients from position `j` on.
    pub fn to_partition(&self) -> Result<Partition> {
        partition_of_coeffs(&self.coeffs)
    }
}

impl FundamentalWeightC {
    pub fn new(coeffs: Vec<i64>, n: Rank) -> Result<Self> {
        if coeffs.len() != n.n() as usize {
            return Err(Error::WrongLength { got: coeffs.len(), expected: n.n() as usize });
        }
        Ok(FundamentalWeightC { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&a| a >= 0)
    }

    pub fn to_partition(&self) -> Result<Partition> {
        partition_of_coeffs(&self.coeffs)
    }
}

fn partition_of_coeffs(coeffs: &[i64]) -> Result<Partition> {
    if coeffs.iter().any(|&a| a < 0) {
        return Err(Error::NegativeCoefficient);
    }
    let mults = coeffs.iter().map(|&a| a as u32).collect::<Vec<_>>();
    Ok(Partition::from_column_multiplicities(&mults))
}

impl Partition {
    /// Dominant type-A weight with this shape; fails when the shape needs more
    /// than `2n - 1` rows.
    pub fn to_weight_a(&self, n: Rank) -> Result<FundamentalWeightA> {
        let coeffs = self
            .column_multiplicities(n.a_rank())?
            .into_iter()
            .map(i64::from)
            .collect();
        Ok(FundamentalWeightA { coeffs })
    }

    /// Dominant type-C weight with this shape; at most `n` rows.
    pub fn to_weight_c(&self, n: Rank) -> Result<FundamentalWeightC> {
        let coeffs = self
            .column_multiplicities(n.n() as usize)?
            .into_iter()
            .map(i64::from)
            .collect();
        Ok(FundamentalWeightC { coeffs })
    }

    /// Coordinate form `(lambda_1, ..., lambda_{2n}, 0-padded)`.
    pub fn to_eps_a(&self, n: Rank) -> Result<EpsWeightA> {
        let dim = 2 * n.n() as usize;
        if self.len() > dim {
            return Err(Error::TooManyRows { rows: self.len(), max: dim });
        }
        let coords = (0..dim).map(|i| i64::from(self.row(i))).collect();
        Ok(EpsWeightA { coords })
    }

    pub fn to_eps_c(&self, n: Rank) -> Result<EpsWeightC> {
        let dim = n.n() as usize;
        if self.len() > dim {
            return Err(Error::TooManyRows { rows: self.len(), max: dim });
        }
        let coords = (0..dim).map(|i| i64::from(self.row(i))).collect();
        Ok(EpsWeightC { coords })
    }
}

/// A type-A weight in coordinates `(mu_1, ..., mu_{2n})`, understood up to
/// adding a constant vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EpsWeightA {
    coords: Vec<i64>,
}

impl EpsWeightA {
    pub fn new(coords: Vec<i64>, n: Rank) -> Result<Self> {
        let expected = 2 * n.n() as usize;
        if coords.len() != expected {
            return Err(Error::WrongLength { got: coords.len(), expected });
        }
        Ok(EpsWeightA { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        dominant_a(&self.coords)
    }

    /// Restriction to `C_n` coordinates: `mu_j - mu_{2n+1-j}`.
    pub fn restrict(&self) -> EpsWeightC {
        let m = self.coords.len() / 2;
        let coords = (0..m)
            .map(|j| self.coords[j] - self.coords[self.coords.len() - 1 - j])
            .collect();
        EpsWeightC { coords }
    }
}

/// A type-C weight in coordinates `(mu_1, ..., mu_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EpsWeightC {
    coords: Vec<i64>,
}

impl EpsWeightC {
    pub fn new(coords: Vec<i64>, n: Rank) -> Result<Self> {
        let expected = n.n() as usize;
        if coords.len() != expected {
            return Err(Error::WrongLength { got: coords.len(), expected });
        }
        Ok(EpsWeightC { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        dominant_c(&self.coords)
    }

    /// Reads a dominant coordinate vector as a partition.
    pub fn to_partition(&self) -> Result<Partition> {
        if !self.is_dominant() {
            return Err(Error::NotDominant(format!("{:?}", self.coords)));
        }
        Partition::new(self.coords.iter().map(|&c| c as u32).collect::<Vec<_>>())
    }
}

/// Dominance for type-A coordinate vectors: weakly decreasing.
pub fn dominant_a(coords: &[i64]) -> bool {
    coords.windows(2).all(|w| w[0] >= w[1])
}

/// Dominance for type-C coordinate vectors: weakly decreasing and the last
/// coordinate non-negative.
pub fn dominant_c(coords: &[i64]) -> bool {
    coords.windows(2).all(|w| w[0] >= w[1]) && coords.last().is_none_or(|&c| c >= 0)
}

/// Dimension of the irreducible module with highest weight `shape`, by the
/// product-over-positive-roots formula, in exact integer arithmetic.
///
/// For type A the ambient algebra is gl(2n) (equivalently sl(2n) after
/// discarding the determinant), so shapes with up to `2n` rows are accepted;
/// type C accepts up to `n` rows.
pub fn weyl_dim(shape: &Partition, lie_type: LieType, n: Rank) -> Result<u64> {
    let (num, den) = match lie_type {
        LieType::A => {
            let dim = 2 * n.n() as usize;
            if shape.len() > dim {
                return Err(Error::TooManyRows { rows: shape.len(), max: dim });
            }
            // factors (lambda_i - lambda_j + j - i) / (j - i) over i < j
            let mut num = BigUint::from(1u32);
            let mut den = BigUint::from(1u32);
            for i in 0..dim {
                for j in (i + 1)..dim {
                    let top = i64::from(shape.row(i)) - i64::from(shape.row(j)) + (j - i) as i64;
                    num *= BigUint::from(top as u64);
                    den *= BigUint::from((j - i) as u64);
                }
            }
            (num, den)
        }
        LieType::C => {
            let dim = n.n() as usize;
            if shape.len() > dim {
                return Err(Error::TooManyRows { rows: shape.len(), max: dim });
            }
            // l_i = lambda_i + n - i (0-based), r_i = n - i; factors
            // (l_i^2 - l_j^2)/(r_i^2 - r_j^2) over i < j and l_i / r_i.
            let l = (0..dim)
                .map(|i| u64::from(shape.row(i)) + (dim - i) as u64)
                .collect::<Vec<_>>();
            let r = (0..dim).map(|i| (dim - i) as u64).collect::<Vec<_>>();
            let mut num = BigUint::from(1u32);
            let mut den = BigUint::from(1u32);
            for i in 0..dim {
                num *= BigUint::from(l[i]);
                den *= BigUint::from(r[i]);
                for j in (i + 1)..dim {
                    num *= BigUint::from(l[i] * l[i] - l[j] * l[j]);
                    den *= BigUint::from(r[i] * r[i] - r[j] * r[j]);
                }
            }
            (num, den)
        }
    };
    debug_assert!((&num % &den) == BigUint::from(0u32));
    u64::try_from(num / den).map_err(|_| Error::Overflow)
}

/// Serialized form `A:3,1,0` / `C:1,1` (type tag plus fundamental coefficients).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FundamentalWeight {
    A(FundamentalWeightA),
    C(FundamentalWeightC),
}

impl FundamentalWeight {
    pub fn lie_type(&self) -> LieType {
        match self {
            FundamentalWeight::A(_) => LieType::A,
            FundamentalWeight::C(_) => LieType::C,
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        match self {
            FundamentalWeight::A(w) => w.coeffs(),
            FundamentalWeight::C(w) => w.coeffs(),
        }
    }

    pub fn to_partition(&self) -> Result<Partition> {
        match self {
            FundamentalWeight::A(w) => w.to_partition(),
            FundamentalWeight::C(w) => w.to_partition(),
        }
    }

    /// The rank implied by the coefficient count: `2n - 1` entries for type A,
    /// `n` entries for type C.
    pub fn rank(&self) -> Result<Rank> {
        match self {
            FundamentalWeight::A(w) => {
                let len = w.coeffs.len();
                if len % 2 == 0 {
                    return Err(Error::WrongLength { got: len, expected: len + 1 });
                }
                Rank::new(((len + 1) / 2) as u32)
            }
            FundamentalWeight::C(w) => Rank::new(w.coeffs.len() as u32),
        }
    }
}

impl fmt::Display for FundamentalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.lie_type().tag();
        let body = self
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{tag}:{body}")
    }
}

impl FromStr for FundamentalWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("weight {s:?} is missing its type tag")))?;
        let coeffs = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad weight coefficient {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        match tag.trim() {
            "A" => Ok(FundamentalWeight::A(FundamentalWeightA { coeffs })),
            "C" => Ok(FundamentalWeight::C(FundamentalWeightC { coeffs })),
            other => Err(Error::Parse(format!("unknown weight type {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[u32]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn n(v: u32) -> Rank {
        Rank::new(v).unwrap()
    }

    #[test]
    fn shape_of_weight() {
        // a_1 = 3, a_2 = 1 at n = 2: rows are suffix sums (3+1, 1) = (4, 1)
        let w = FundamentalWeightA::new(vec![3, 1, 0], n(2)).unwrap();
        assert_eq!(w.to_partition().unwrap(), p(&[4, 1]));

        let zero = FundamentalWeightA::new(vec![0, 0, 0, 0, 0], n(3)).unwrap();
        assert_eq!(zero.to_partition().unwrap(), Partition::empty());

        let wc = FundamentalWeightC::new(vec![1, 1], n(2)).unwrap();
        assert_eq!(wc.to_partition().unwrap(), p(&[2, 1]));

        let neg = FundamentalWeightA::new(vec![1, -1, 0], n(2)).unwrap();
        assert!(neg.to_partition().is_err());
    }

    #[test]
    fn weight_of_shape() {
        assert_eq!(
            p(&[4, 1]).to_weight_a(n(2)).unwrap().coeffs(),
            &[3, 1, 0]
        );
        assert_eq!(
            Partition::empty().to_weight_a(n(3)).unwrap().coeffs(),
            &[0, 0, 0, 0, 0]
        );
        assert_eq!(p(&[1, 1]).to_weight_c(n(2)).unwrap().coeffs(), &[0, 1]);
        // rank bound: three rows do not fit in A_1
        assert!(p(&[1, 1, 1]).to_weight_a(n(1)).is_err());
    }

    #[test]
    fn weight_shape_round_trip() {
        for rows in [vec![], vec![2], vec![2, 1], vec![3, 3, 1]] {
            let q = Partition::new(rows).unwrap();
            assert_eq!(q.to_weight_a(n(2)).unwrap().to_partition().unwrap(), q);
        }
    }

    #[test]
    fn restriction_coordinates() {
        let e1 = EpsWeightA::new(vec![1, 0, 0, 0], n(2)).unwrap();
        assert_eq!(e1.restrict().coords(), &[1, 0]);

        let constant = EpsWeightA::new(vec![1, 1, 1, 1], n(2)).unwrap();
        assert_eq!(constant.restrict().coords(), &[0, 0]);

        // (1,1,0,0) restricts to (1,1), the second C fundamental weight
        let w2 = EpsWeightA::new(vec![1, 1, 0, 0], n(2)).unwrap();
        assert_eq!(w2.restrict().coords(), &[1, 1]);

        assert!(EpsWeightA::new(vec![1, 0, 0], n(2)).is_err());
    }

    #[test]
    fn dominance_predicates() {
        assert!(EpsWeightA::new(vec![2, 1, 0, 0], n(2)).unwrap().is_dominant());
        assert!(!EpsWeightA::new(vec![1, 2, 0, 0], n(2)).unwrap().is_dominant());
        assert!(EpsWeightA::new(vec![1, 1, 1, 1], n(2)).unwrap().is_dominant());

        assert!(EpsWeightC::new(vec![1, 0], n(2)).unwrap().is_dominant());
        assert!(!EpsWeightC::new(vec![0, -1], n(2)).unwrap().is_dominant());
        assert!(EpsWeightC::new(vec![2, 2], n(2)).unwrap().is_dominant());
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(weyl_dim(&p(&[1]), LieType::A, n(2)).unwrap(), 4);
        assert_eq!(weyl_dim(&p(&[2, 1]), LieType::A, n(2)).unwrap(), 20);
        assert_eq!(weyl_dim(&p(&[1, 1, 1, 1]), LieType::A, n(2)).unwrap(), 1);
        assert_eq!(weyl_dim(&p(&[2, 2]), LieType::A, n(2)).unwrap(), 20);

        assert_eq!(weyl_dim(&p(&[1]), LieType::C, n(2)).unwrap(), 4);
        assert_eq!(weyl_dim(&p(&[1, 1]), LieType::C, n(2)).unwrap(), 5);
        assert_eq!(weyl_dim(&p(&[2, 1]), LieType::C, n(2)).unwrap(), 16);
        assert_eq!(weyl_dim(&p(&[2, 2]), LieType::C, n(2)).unwrap(), 14);

        // decomposition masses for the first worked branching: 20 = 4 + 16
        assert_eq!(
            weyl_dim(&p(&[2, 1]), LieType::A, n(2)).unwrap(),
            weyl_dim(&p(&[1]), LieType::C, n(2)).unwrap()
                + weyl_dim(&p(&[2, 1]), LieType::C, n(2)).unwrap()
        );

        assert!(weyl_dim(&p(&[1; 5]), LieType::A, n(2)).is_err());
        assert!(weyl_dim(&p(&[1, 1, 1]), LieType::C, n(2)).is_err());
    }

    #[test]
    fn weight_serialization() {
        let w: FundamentalWeight = "A:3,1,0".parse().unwrap();
        assert_eq!(w.coeffs(), &[3, 1, 0]);
        assert_eq!(w.rank().unwrap(), n(2));
        assert_eq!(w.to_string(), "A:3,1,0");
        let w: FundamentalWeight = "C:1,1".parse().unwrap();
        assert_eq!(w.to_partition().unwrap(), p(&[2, 1]));
        assert!("B:1".parse::<FundamentalWeight>().is_err());
        assert!("1,1".parse::<FundamentalWeight>().is_err());
    }
}
