use std::fmt;

use thiserror::Error;

use super::{Alt, BinaryRelation, Menu};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("classes overlap or repeat an alternative")]
    OverlappingClasses,
    #[error("classes do not cover the whole universe")]
    NotCovering,
    #[error("ranking is not a permutation of the universe")]
    NotAPermutation,
}

/// A weak order: an ordered partition of the universe into indifference
/// classes, best class first. Completeness and transitivity of the induced
/// relation hold by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct WeakOrder {
    classes: Vec<Menu>,
    rank: Vec<u8>,
}

impl WeakOrder {
    pub fn new(n: u8, classes: Vec<Menu>) -> Result<WeakOrder, OrderError> {
        assert!((1..=16).contains(&n));
        let mut seen = 0u16;
        let mut rank = vec![0u8; n as usize];
        for (i, class) in classes.iter().enumerate() {
            if seen & class.bits() != 0 {
                return Err(OrderError::OverlappingClasses);
            }
            seen |= class.bits();
            for a in class.alts() {
                if a >= n {
                    return Err(OrderError::NotCovering);
                }
                rank[a as usize] = i as u8;
            }
        }
        if seen != Menu::full(n).bits() {
            return Err(OrderError::NotCovering);
        }
        Ok(WeakOrder { classes, rank })
    }

    /// The single-class order under which every alternative ties.
    pub fn total_indifference(n: u8) -> WeakOrder {
        WeakOrder::new(n, vec![Menu::full(n)]).unwrap()
    }

    pub fn n(&self) -> u8 {
        self.rank.len() as u8
    }

    /// Indifference classes, best first.
    pub fn classes(&self) -> &[Menu] {
        &self.classes
    }

    /// Class index of `x`; lower is better.
    pub fn rank(&self, x: Alt) -> u8 {
        self.rank[x as usize]
    }

    /// `x` weakly preferred to `y`.
    pub fn prefers(&self, x: Alt, y: Alt) -> bool {
        self.rank(x) <= self.rank(y)
    }

    /// The induced relation: holds(x, y) ⟺ x weakly preferred to y.
    pub fn relation(&self) -> BinaryRelation {
        let mut rel = BinaryRelation::empty(self.n());
        for x in 0..self.n() {
            for y in 0..self.n() {
                if self.prefers(x, y) {
                    rel.set(x, y);
                }
            }
        }
        rel
    }
}

impl fmt::Debug for WeakOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.classes.iter().map(|c| format!("{c:?}")).collect();
        write!(f, "WeakOrder[{}]", parts.join(" > "))
    }
}

/// A linear order: a permutation of the universe, best first. Equivalently
/// a weak order with singleton classes.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearOrder {
    ranking: Vec<Alt>,
    pos: Vec<u8>,
}

impl LinearOrder {
    pub fn new(ranking: Vec<Alt>) -> Result<LinearOrder, OrderError> {
        let n = ranking.len();
        assert!((1..=16).contains(&n));
        let mut pos = vec![u8::MAX; n];
        for (i, &a) in ranking.iter().enumerate() {
            if (a as usize) >= n || pos[a as usize] != u8::MAX {
                return Err(OrderError::NotAPermutation);
            }
            pos[a as usize] = i as u8;
        }
        Ok(LinearOrder { ranking, pos })
    }

    pub fn n(&self) -> u8 {
        self.ranking.len() as u8
    }

    /// Alternatives from best to worst.
    pub fn ranking(&self) -> &[Alt] {
        &self.ranking
    }

    /// Position of `x` in the ranking; lower is better.
    pub fn position(&self, x: Alt) -> u8 {
        self.pos[x as usize]
    }

    pub fn prefers(&self, x: Alt, y: Alt) -> bool {
        self.position(x) <= self.position(y)
    }

    pub fn relation(&self) -> BinaryRelation {
        let mut rel = BinaryRelation::empty(self.n());
        for x in 0..self.n() {
            for y in 0..self.n() {
                if self.prefers(x, y) {
                    rel.set(x, y);
                }
            }
        }
        rel
    }

    /// The same ranking as a weak order with singleton classes.
    pub fn to_weak_order(&self) -> WeakOrder {
        WeakOrder::new(
            self.n(),
            self.ranking.iter().map(|&a| Menu::singleton(a)).collect(),
        )
        .unwrap()
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ranking.iter().map(|a| a.to_string()).collect();
        write!(f, "LinearOrder[{}]", parts.join(" > "))
    }
}
