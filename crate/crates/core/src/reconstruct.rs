//! Polynomial decks and what can be recovered from them.
//!
//! Summing the deck gives `dM/dx`, which fixes every coefficient `m_{i,j}`
//! with `i >= 1`. Only the perfect-matching count `m_{0,n/2}` can be missing;
//! it is zero for odd `n` and can be read off the deck for forests and for
//! simple graphs with a pendant edge.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{matching_polynomial, MatchingEngine};
use crate::poly::Poly;

/// The multiset `{M(G - v) : v in V}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RawDeck")]
pub struct PolynomialDeck {
    n: usize,
    cards: Vec<Poly>,
}

#[derive(Deserialize)]
struct RawDeck {
    n: usize,
    cards: Vec<Poly>,
}

impl TryFrom<RawDeck> for PolynomialDeck {
    type Error = Error;

    fn try_from(raw: RawDeck) -> Result<Self> {
        PolynomialDeck::new(raw.n, raw.cards)
    }
}

impl PolynomialDeck {
    /// Checks that there are `n >= 1` cards, each homogeneous of weight `n - 1`.
    pub fn new(n: usize, cards: Vec<Poly>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("a deck needs at least one card"));
        }
        if cards.len() != n {
            return Err(Error::domain(format!(
                "deck of a {n}-vertex graph must have {n} cards, got {}",
                cards.len()
            )));
        }
        for (k, card) in cards.iter().enumerate() {
            if !card.is_homogeneous(n as u32 - 1) {
                return Err(Error::domain(format!(
                    "card {k} ({card}) is not homogeneous of weight {}",
                    n - 1
                )));
            }
            if card.terms().any(|(_, c)| c.is_negative()) {
                return Err(Error::domain(format!("card {k} has a negative coefficient")));
            }
        }
        Ok(PolynomialDeck { n, cards })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cards(&self) -> &[Poly] {
        &self.cards
    }

    /// Card texts sorted; two decks are equal as multisets iff these agree.
    pub fn multiset_key(&self) -> Vec<String> {
        let mut key: Vec<String> = self.cards.iter().map(Poly::to_string).collect();
        key.sort();
        key
    }

    pub fn same_multiset(&self, other: &PolynomialDeck) -> bool {
        self.n == other.n && self.multiset_key() == other.multiset_key()
    }

    /// Near-perfect matchings of each card: `m_{1,(n-2)/2}`. Zero for odd `n`.
    fn card_near_perfect_counts(&self) -> Vec<BigInt> {
        if self.n % 2 == 1 {
            return vec![BigInt::zero(); self.n];
        }
        let j = (self.n as u32 - 2) / 2;
        self.cards.iter().map(|c| c.coefficient(1, j)).collect()
    }
}

pub fn build_deck(g: &Graph) -> Result<PolynomialDeck> {
    build_deck_with(g, matching_polynomial)
}

pub fn build_deck_in(engine: &mut MatchingEngine, g: &Graph) -> Result<PolynomialDeck> {
    build_deck_with(g, |h| engine.polynomial(h))
}

fn build_deck_with(g: &Graph, mut poly: impl FnMut(&Graph) -> Poly) -> Result<PolynomialDeck> {
    if g.n() == 0 {
        return Err(Error::domain("the empty graph has no deck"));
    }
    let cards = (0..g.n())
        .map(|v| g.delete_vertex(v).map(|h| poly(&h)))
        .collect::<Result<Vec<_>>>()?;
    PolynomialDeck::new(g.n(), cards)
}

/// Sum of the cards; equals `dM/dx` of the originating graph.
pub fn deck_derivative_sum(deck: &PolynomialDeck) -> Poly {
    deck.cards.iter().cloned().sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum PerfectMatchings {
    Determined(BigInt),
    Unknown,
}

impl PerfectMatchings {
    pub fn value(&self) -> Option<&BigInt> {
        match self {
            PerfectMatchings::Determined(v) => Some(v),
            PerfectMatchings::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    OddOrder,
    ForestRule,
    PendantRule,
    ExternallySupplied,
    Undetermined,
}

/// Caller knowledge about the graph a deck came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Hint {
    #[default]
    None,
    IsForest,
    HasPendantEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionResult {
    pub n: usize,
    /// Every term with `x`-degree at least one.
    pub known_part: Poly,
    pub perfect_matchings: PerfectMatchings,
    pub method: Method,
}

impl ReconstructionResult {
    /// The whole polynomial, if the perfect-matching count is known.
    pub fn polynomial(&self) -> Option<Poly> {
        let np = self.perfect_matchings.value()?;
        if self.n % 2 == 1 {
            return Some(self.known_part.clone());
        }
        Some(&self.known_part + &Poly::monomial(0, (self.n / 2) as u32, np.clone()))
    }

    fn determine(mut self, np: BigInt, method: Method) -> Self {
        self.perfect_matchings = PerfectMatchings::Determined(np);
        self.method = method;
        self
    }
}

/// `m_{i,j} = [x^(i-1) y^j] (sum of cards) / i` for every `i >= 1`.
pub fn recover_coefficients(deck: &PolynomialDeck) -> Result<ReconstructionResult> {
    let sum = deck_derivative_sum(deck);
    let mut terms = Vec::with_capacity(sum.len());
    for ((i, j), c) in sum.terms() {
        let div = BigInt::from(i + 1);
        if !(c % &div).is_zero() {
            return Err(Error::InconsistentDeck(format!(
                "coefficient {c} of x^{i}*y^{j} in the card sum is not divisible by {div}"
            )));
        }
        terms.push((i + 1, j, c / div));
    }
    let known_part = Poly::from_terms(terms);
    let odd = deck.n % 2 == 1;
    Ok(ReconstructionResult {
        n: deck.n,
        known_part,
        perfect_matchings: if odd {
            PerfectMatchings::Determined(BigInt::zero())
        } else {
            PerfectMatchings::Unknown
        },
        method: if odd { Method::OddOrder } else { Method::Undetermined },
    })
}

/// For a deck of a forest: whether the forest has a perfect matching, i.e.
/// whether every card has a near-perfect matching.
///
/// The equivalence needs a vertex of degree one. The only forest where it
/// breaks is the edgeless graph on two vertices, whose deck is that of `K_2`.
pub fn forest_has_perfect_matching(deck: &PolynomialDeck) -> bool {
    deck.n % 2 == 0 && deck.card_near_perfect_counts().iter().all(|c| c.is_positive())
}

/// For a deck of a simple graph with a pendant edge: the number of perfect
/// matchings, which is the least near-perfect count over the cards.
pub fn pendant_num_perfect_matchings(deck: &PolynomialDeck) -> BigInt {
    deck.card_near_perfect_counts()
        .into_iter()
        .min()
        .unwrap_or_default()
}

/// Recovers as much of `M(G)` as the deck, the hint and an optional known
/// perfect-matching count allow. Priority: odd order, supplied count, forest
/// rule, pendant rule.
pub fn reconstruct(
    deck: &PolynomialDeck,
    hint: Hint,
    supplied_np: Option<BigInt>,
) -> Result<ReconstructionResult> {
    let base = recover_coefficients(deck)?;
    if base.method == Method::OddOrder {
        return Ok(base);
    }
    if let Some(np) = supplied_np {
        return Ok(base.determine(np, Method::ExternallySupplied));
    }
    Ok(match hint {
        Hint::IsForest => {
            let np = BigInt::from(forest_has_perfect_matching(deck) as u8);
            base.determine(np, Method::ForestRule)
        }
        Hint::HasPendantEdge => {
            let np = pendant_num_perfect_matchings(deck);
            base.determine(np, Method::PendantRule)
        }
        Hint::None => base,
    })
}
