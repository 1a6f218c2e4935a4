//! Finitely generated abelian groups in invariant-factor normal form.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^rank + Z/d_1 + ... + Z/d_k` with
/// `2 <= d_1 | d_2 | ... | d_k`.
///
/// The representation is canonical: two groups are isomorphic exactly when
/// the structs compare equal. Trivial cyclic factors (`d = 1`) are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FGAbelianGroup {
    rank: usize,
    invariant_factors: Vec<BigUint>,
}

impl FGAbelianGroup {
    /// Builds a group from an already-normalized description. Fails unless
    /// every factor is at least 2 and each divides the next.
    pub fn new(rank: usize, invariant_factors: Vec<BigUint>) -> Result<Self> {
        let two = BigUint::from(2u32);
        for f in &invariant_factors {
            if f < &two {
                return Err(Error::InvalidInput(format!(
                    "invariant factor {f} is smaller than 2"
                )));
            }
        }
        for w in invariant_factors.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(Error::InvalidInput(format!(
                    "invariant factors must form a divisibility chain, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(FGAbelianGroup {
            rank,
            invariant_factors,
        })
    }

    /// Builds a group from arbitrary cyclic orders, normalizing as needed.
    /// Orders equal to 1 are dropped; an order of 0 contributes a free
    /// summand (`Z/0 = Z`).
    pub fn from_cyclic_orders(rank: usize, orders: impl IntoIterator<Item = BigUint>) -> Self {
        let mut free = rank;
        let mut torsion = Vec::new();
        for d in orders {
            if d.is_zero() {
                free += 1;
            } else if !d.is_one() {
                torsion.push(d);
            }
        }
        FGAbelianGroup {
            rank: free,
            invariant_factors: smithify_factors(torsion),
        }
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        FGAbelianGroup {
            rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    /// The free group `Z^rank`.
    pub fn free(rank: usize) -> Self {
        FGAbelianGroup {
            rank,
            invariant_factors: Vec::new(),
        }
    }

    /// The cyclic group `Z/d` (`d = 0` gives `Z`, `d = 1` the trivial group).
    pub fn cyclic(d: u64) -> Self {
        FGAbelianGroup::from_cyclic_orders(0, [BigUint::from(d)])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn invariant_factors(&self) -> &[BigUint] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }

    /// `true` when the group is finite (possibly trivial).
    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// `true` when the group is free (possibly trivial).
    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigUint {
        self.invariant_factors.iter().product()
    }

    /// Direct sum, renormalized to invariant-factor form.
    pub fn direct_sum(&self, other: &FGAbelianGroup) -> FGAbelianGroup {
        let mut factors = self.invariant_factors.clone();
        factors.extend_from_slice(&other.invariant_factors);
        FGAbelianGroup {
            rank: self.rank + other.rank,
            invariant_factors: smithify_factors(factors),
        }
    }

    /// Direct sum of an arbitrary family.
    pub fn direct_sum_all<'a>(groups: impl IntoIterator<Item = &'a FGAbelianGroup>) -> Self {
        let mut rank = 0;
        let mut factors = Vec::new();
        for g in groups {
            rank += g.rank;
            factors.extend_from_slice(&g.invariant_factors);
        }
        FGAbelianGroup {
            rank,
            invariant_factors: smithify_factors(factors),
        }
    }

    /// Human-readable form: `Z^r (+) Z/d1 (+) ...`, or `0` when trivial.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

/// Normalizes a multiset of cyclic orders (all nonzero) into a divisibility
/// chain by repeatedly replacing an incomparable pair `(a, b)` with
/// `(gcd(a, b), lcm(a, b))`. This needs no integer factorization.
pub(crate) fn smithify_factors(mut factors: Vec<BigUint>) -> Vec<BigUint> {
    factors.retain(|f| !f.is_one());
    loop {
        let mut changed = false;
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                let (a, b) = (factors[i].clone(), factors[j].clone());
                if b.is_multiple_of(&a) || a.is_multiple_of(&b) {
                    continue;
                }
                let g = a.gcd(&b);
                let l = &a / &g * &b;
                factors[i] = g;
                factors[j] = l;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    factors.retain(|f| !f.is_one());
    // Divisibility is now a total order on the multiset, so a value sort
    // yields the chain.
    factors.sort();
    factors
}

impl fmt::Display for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" \u{2295} "))
    }
}

impl Serialize for FGAbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FGAbelianGroup", 2)?;
        s.serialize_field("rank", &self.rank)?;
        let factors: Vec<serde_json::Value> = self
            .invariant_factors
            .iter()
            .map(|d| match d.to_u64_digits().as_slice() {
                [] => serde_json::Value::from(0u64),
                [lo] => serde_json::Value::from(*lo),
                _ => serde_json::Value::from(d.to_string()),
            })
            .collect();
        s.serialize_field("invariant_factors", &factors)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for FGAbelianGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rank: usize,
            invariant_factors: Factors,
        }
        struct Factors(Vec<BigUint>);
        impl<'de> Deserialize<'de> for Factors {
            fn deserialize<D: Deserializer<'de>>(
                deserializer: D,
            ) -> std::result::Result<Self, D::Error> {
                struct V;
                impl<'de> Visitor<'de> for V {
                    type Value = Factors;
                    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                        write!(f, "a list of positive integers or decimal strings")
                    }
                    fn visit_seq<A: SeqAccess<'de>>(
                        self,
                        mut seq: A,
                    ) -> std::result::Result<Factors, A::Error> {
                        let mut out = Vec::new();
                        while let Some(v) = seq.next_element::<serde_json::Value>()? {
                            let d = match &v {
                                serde_json::Value::Number(n) => n
                                    .as_u64()
                                    .map(BigUint::from)
                                    .ok_or_else(|| de::Error::custom("factor out of range")),
                                serde_json::Value::String(s) => s
                                    .parse::<BigUint>()
                                    .map_err(|e| de::Error::custom(format!("bad factor: {e}"))),
                                _ => Err(de::Error::custom("factor must be number or string")),
                            }?;
                            out.push(d);
                        }
                        Ok(Factors(out))
                    }
                }
                deserializer.deserialize_seq(V)
            }
        }
        let raw = Raw::deserialize(deserializer)?;
        FGAbelianGroup::new(raw.rank, raw.invariant_factors.0)
            .map_err(|e| de::Error::custom(e.to_string()))
    }
}
