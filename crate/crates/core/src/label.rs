//! Label sets and the strict partial orders that define each search.
//!
//! A label is the set of visiting dates of a vertex's already visited
//! neighbours. A search is fully described by a strict partial order on
//! labels: at every step the engine may visit any unnumbered vertex whose
//! label is maximal.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// A visiting date, `1..=n`.
pub type Date = usize;

/// A finite set of visiting dates kept as a strictly increasing sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelSet(Vec<Date>);

impl LabelSet {
    pub fn new() -> Self {
        LabelSet(Vec::new())
    }

    /// Builds a label from arbitrary dates; sorts and deduplicates.
    ///
    /// # Panics
    /// If a date is 0.
    pub fn from_dates<I: IntoIterator<Item = Date>>(dates: I) -> Self {
        let mut v: Vec<Date> = dates.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        assert!(v.first().is_none_or(|&d| d >= 1), "dates start at 1");
        LabelSet(v)
    }

    /// The subset of `1..=universe` whose bit `k - 1` is set in `mask`.
    pub fn from_mask(mask: u64, universe: usize) -> Self {
        LabelSet(
            (1..=universe)
                .filter(|k| mask >> (k - 1) & 1 == 1)
                .collect(),
        )
    }

    /// Appends a date larger than every date already present.
    pub fn push(&mut self, date: Date) {
        debug_assert!(date >= 1 && self.0.last().is_none_or(|&d| d < date));
        self.0.push(date);
    }

    /// Copy of this label with `date` appended.
    pub fn with(&self, date: Date) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        let mut l = LabelSet(v);
        l.push(date);
        l
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, date: Date) -> bool {
        self.0.binary_search(&date).is_ok()
    }

    pub fn dates(&self) -> &[Date] {
        &self.0
    }

    /// Elements smaller than `bound`.
    pub fn below(&self, bound: Date) -> LabelSet {
        let k = self.0.partition_point(|&d| d < bound);
        LabelSet(self.0[..k].to_vec())
    }

    /// `∞` on the empty set, otherwise the least date.
    pub fn umin(&self) -> ExtendedDate {
        self.0
            .first()
            .map_or(ExtendedDate::Infinity, |&d| ExtendedDate::Finite(d))
    }

    /// `0` on the empty set, otherwise the greatest date.
    pub fn umax(&self) -> ExtendedDate {
        self.0
            .last()
            .map_or(ExtendedDate::Zero, |&d| ExtendedDate::Finite(d))
    }

    /// `true` iff `self ⊊ other`.
    pub fn is_strict_subset(&self, other: &LabelSet) -> bool {
        if self.len() >= other.len() {
            return false;
        }
        let mut it = other.0.iter();
        self.0.iter().all(|d| it.any(|e| e == d))
    }

    /// The set difference `self − other`.
    pub fn minus(&self, other: &LabelSet) -> LabelSet {
        LabelSet(
            self.0
                .iter()
                .copied()
                .filter(|&d| !other.contains(d))
                .collect(),
        )
    }

    /// Least element of the symmetric difference, tagged by which side owns it.
    /// Merge scan; stops at the first difference.
    pub fn least_difference(&self, other: &LabelSet) -> Option<Side> {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                Ordering::Less => return Some(Side::Left),
                Ordering::Greater => return Some(Side::Right),
            }
        }
        if i < a.len() {
            Some(Side::Left)
        } else if j < b.len() {
            Some(Side::Right)
        } else {
            None
        }
    }

    /// Greatest element of the symmetric difference, tagged by owner.
    pub fn greatest_difference(&self, other: &LabelSet) -> Option<Side> {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 && j > 0 {
            match a[i - 1].cmp(&b[j - 1]) {
                Ordering::Equal => {
                    i -= 1;
                    j -= 1;
                }
                Ordering::Greater => return Some(Side::Left),
                Ordering::Less => return Some(Side::Right),
            }
        }
        if i > 0 {
            Some(Side::Left)
        } else if j > 0 {
            Some(Side::Right)
        } else {
            None
        }
    }
}

impl From<Vec<Date>> for LabelSet {
    fn from(v: Vec<Date>) -> Self {
        LabelSet::from_dates(v)
    }
}

impl<const N: usize> From<[Date; N]> for LabelSet {
    fn from(v: [Date; N]) -> Self {
        LabelSet::from_dates(v)
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for LabelSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Which operand of a binary set operation an element came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A date extended with `0` (the maximum of nothing) and `∞` (the minimum of
/// nothing). Ordered `Zero < Finite(_) < Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedDate {
    Zero,
    Finite(Date),
    Infinity,
}

/// Outcome of comparing labels `a` and `b` under a strict partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelCmp {
    /// `a ≺ b`: `b` is preferred.
    Less,
    /// `b ≺ a`: `a` is preferred.
    Greater,
    Incomparable,
}

impl LabelCmp {
    pub fn reverse(self) -> Self {
        match self {
            LabelCmp::Less => LabelCmp::Greater,
            LabelCmp::Greater => LabelCmp::Less,
            LabelCmp::Incomparable => LabelCmp::Incomparable,
        }
    }

    fn from_preference(a_less: bool, b_less: bool) -> Self {
        match (a_less, b_less) {
            (true, false) => LabelCmp::Less,
            (false, true) => LabelCmp::Greater,
            _ => LabelCmp::Incomparable,
        }
    }
}

/// The seven classical searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Search {
    Gen,
    Bfs,
    Dfs,
    Lbfs,
    Ldfs,
    Mcs,
    Mns,
}

impl Search {
    pub const ALL: [Search; 7] = [
        Search::Gen,
        Search::Bfs,
        Search::Dfs,
        Search::Lbfs,
        Search::Ldfs,
        Search::Mcs,
        Search::Mns,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Search::Gen => "gen",
            Search::Bfs => "bfs",
            Search::Dfs => "dfs",
            Search::Lbfs => "lbfs",
            Search::Ldfs => "ldfs",
            Search::Mcs => "mcs",
            Search::Mns => "mns",
        }
    }

    pub fn compare(self, a: &LabelSet, b: &LabelSet) -> LabelCmp {
        match self {
            // ∅ ≺ B for every non-empty B
            Search::Gen => LabelCmp::from_preference(
                a.is_empty() && !b.is_empty(),
                b.is_empty() && !a.is_empty(),
            ),
            // the label whose earliest visited neighbour is older wins
            Search::Bfs => match a.umin().cmp(&b.umin()) {
                Ordering::Greater => LabelCmp::Less,
                Ordering::Less => LabelCmp::Greater,
                Ordering::Equal => LabelCmp::Incomparable,
            },
            Search::Dfs => match a.umax().cmp(&b.umax()) {
                Ordering::Less => LabelCmp::Less,
                Ordering::Greater => LabelCmp::Greater,
                Ordering::Equal => LabelCmp::Incomparable,
            },
            // a ≺ b iff umin(b − a) < umin(a − b)
            Search::Lbfs => match a.least_difference(b) {
                Some(Side::Right) => LabelCmp::Less,
                Some(Side::Left) => LabelCmp::Greater,
                None => LabelCmp::Incomparable,
            },
            // a ≺ b iff umax(a − b) < umax(b − a)
            Search::Ldfs => match a.greatest_difference(b) {
                Some(Side::Right) => LabelCmp::Less,
                Some(Side::Left) => LabelCmp::Greater,
                None => LabelCmp::Incomparable,
            },
            Search::Mcs => match a.len().cmp(&b.len()) {
                Ordering::Less => LabelCmp::Less,
                Ordering::Greater => LabelCmp::Greater,
                Ordering::Equal => LabelCmp::Incomparable,
            },
            Search::Mns => LabelCmp::from_preference(a.is_strict_subset(b), b.is_strict_subset(a)),
        }
    }

    /// Whether incomparability is an equivalence relation for this order,
    /// i.e. it is a strict weak order and incomparable labels can be treated
    /// as ties.
    pub fn is_weak_order(self) -> bool {
        matches!(
            self,
            Search::Bfs | Search::Dfs | Search::Lbfs | Search::Ldfs | Search::Mcs
        )
    }
}

impl Serialize for Search {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.token())
    }
}

impl fmt::Display for Search {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

type CompareFn = dyn Fn(&LabelSet, &LabelSet) -> LabelCmp + Send + Sync;

/// A user-supplied strict partial order.
///
/// The comparator must be irreflexive, antisymmetric in its three-valued
/// result and transitive; none of this is checked. Its cost is whatever the
/// closure costs.
#[derive(Clone)]
pub struct CustomOrder {
    name: String,
    compare: Arc<CompareFn>,
    weak: bool,
}

impl fmt::Debug for CustomOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomOrder")
            .field("name", &self.name)
            .field("weak", &self.weak)
            .finish()
    }
}

/// A strict partial order over label sets.
#[derive(Debug, Clone)]
pub enum LabelOrder {
    Search(Search),
    /// `a ≺ b` iff `a ≺ b` under both operands.
    Meet(Box<LabelOrder>, Box<LabelOrder>),
    Custom(CustomOrder),
}

impl LabelOrder {
    pub fn custom<F>(name: impl Into<String>, weak: bool, compare: F) -> Self
    where
        F: Fn(&LabelSet, &LabelSet) -> LabelCmp + Send + Sync + 'static,
    {
        LabelOrder::Custom(CustomOrder {
            name: name.into(),
            compare: Arc::new(compare),
            weak,
        })
    }

    /// The empty relation: every ordering is a search ordering for it.
    pub fn null() -> Self {
        Self::custom("null", true, |_, _| LabelCmp::Incomparable)
    }

    pub fn meet(a: LabelOrder, b: LabelOrder) -> Self {
        LabelOrder::Meet(Box::new(a), Box::new(b))
    }

    pub fn compare(&self, a: &LabelSet, b: &LabelSet) -> LabelCmp {
        match self {
            LabelOrder::Search(s) => s.compare(a, b),
            LabelOrder::Meet(x, y) => {
                let cx = x.compare(a, b);
                if cx != LabelCmp::Incomparable && cx == y.compare(a, b) {
                    cx
                } else {
                    LabelCmp::Incomparable
                }
            }
            LabelOrder::Custom(c) => (c.compare)(a, b),
        }
    }

    /// `true` iff `a ≺ b`.
    pub fn less(&self, a: &LabelSet, b: &LabelSet) -> bool {
        self.compare(a, b) == LabelCmp::Less
    }

    /// See [`Search::is_weak_order`]. Meets are conservatively not weak.
    pub fn is_weak_order(&self) -> bool {
        match self {
            LabelOrder::Search(s) => s.is_weak_order(),
            LabelOrder::Meet(..) => false,
            LabelOrder::Custom(c) => c.weak,
        }
    }

    pub fn as_search(&self) -> Option<Search> {
        match self {
            LabelOrder::Search(s) => Some(*s),
            _ => None,
        }
    }
}

impl From<Search> for LabelOrder {
    fn from(s: Search) -> Self {
        LabelOrder::Search(s)
    }
}

impl fmt::Display for LabelOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operands(o: &LabelOrder, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match o {
                LabelOrder::Meet(a, b) => {
                    operands(a, f)?;
                    f.write_str("+")?;
                    operands(b, f)
                }
                other => write!(f, "{other}"),
            }
        }
        match self {
            LabelOrder::Search(s) => write!(f, "{s}"),
            LabelOrder::Custom(c) => f.write_str(&c.name),
            LabelOrder::Meet(..) => {
                f.write_str("meet:")?;
                operands(self, f)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown order `{0}`; valid orders: gen, bfs, dfs, lbfs, ldfs, mcs, mns, meet:X+Y")]
pub struct UnknownOrder(pub String);

impl FromStr for Search {
    type Err = UnknownOrder;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Search::ALL
            .into_iter()
            .find(|x| x.token() == s)
            .ok_or_else(|| UnknownOrder(s.to_string()))
    }
}

impl FromStr for LabelOrder {
    type Err = UnknownOrder;

    /// Accepts the seven search tokens and `meet:X+Y[+Z...]` (folded left).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix("meet:") {
            let parts: Vec<&str> = rest.split('+').collect();
            if parts.len() < 2 {
                return Err(UnknownOrder(s.to_string()));
            }
            let mut orders = parts
                .into_iter()
                .map(|p| p.parse::<Search>().map(LabelOrder::from))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| UnknownOrder(s.to_string()))?
                .into_iter();
            let first = orders.next().expect("at least two operands");
            return Ok(orders.fold(first, LabelOrder::meet));
        }
        s.parse::<Search>().map(LabelOrder::from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l<const N: usize>(d: [Date; N]) -> LabelSet {
        LabelSet::from(d)
    }

    fn cmp(s: Search, a: LabelSet, b: LabelSet) -> LabelCmp {
        s.compare(&a, &b)
    }

    #[test]
    fn extended_dates() {
        assert_eq!(l([]).umin(), ExtendedDate::Infinity);
        assert_eq!(l([3, 7]).umin(), ExtendedDate::Finite(3));
        assert_eq!(l([1]).umin(), ExtendedDate::Finite(1));
        assert_eq!(l([]).umax(), ExtendedDate::Zero);
        assert_eq!(l([3, 7]).umax(), ExtendedDate::Finite(7));
        assert_eq!(l([2]).umax(), ExtendedDate::Finite(2));
        assert!(ExtendedDate::Zero < ExtendedDate::Finite(1));
        assert!(ExtendedDate::Finite(usize::MAX) < ExtendedDate::Infinity);
    }

    #[test]
    fn builtin_examples() {
        use LabelCmp::*;
        assert_eq!(cmp(Search::Gen, l([]), l([1])), Less);
        assert_eq!(cmp(Search::Gen, l([1]), l([2])), Incomparable);
        assert_eq!(cmp(Search::Bfs, l([2]), l([1])), Less);
        assert_eq!(cmp(Search::Bfs, l([1, 5]), l([1, 7])), Incomparable);
        assert_eq!(cmp(Search::Dfs, l([1]), l([2])), Less);
        assert_eq!(cmp(Search::Lbfs, l([2]), l([1])), Less);
        assert_eq!(cmp(Search::Lbfs, l([1, 3]), l([1, 3])), Incomparable);
        assert_eq!(cmp(Search::Ldfs, l([1]), l([2])), Less);
        assert_eq!(cmp(Search::Mns, l([1]), l([1, 2])), Less);
        assert_eq!(cmp(Search::Mns, l([1]), l([2])), Incomparable);
        assert_eq!(cmp(Search::Mcs, l([5]), l([1, 2])), Less);
    }

    #[test]
    fn lex_prefix_cases() {
        // a proper prefix has the larger least-missing element on its side
        assert_eq!(cmp(Search::Lbfs, l([1]), l([1, 4])), LabelCmp::Less);
        assert_eq!(cmp(Search::Ldfs, l([4]), l([1, 4])), LabelCmp::Less);
        assert_eq!(cmp(Search::Ldfs, l([1, 2]), l([3])), LabelCmp::Less);
    }

    #[test]
    fn meet_examples() {
        let m = LabelOrder::meet(Search::Bfs.into(), Search::Dfs.into());
        assert_eq!(m.compare(&l([2]), &l([1, 3])), LabelCmp::Less);
        assert_eq!(m.compare(&l([2]), &l([1])), LabelCmp::Incomparable);
    }

    #[test]
    fn subset_and_difference() {
        assert!(l([1, 3]).is_strict_subset(&l([1, 2, 3])));
        assert!(!l([1, 3]).is_strict_subset(&l([1, 3])));
        assert!(!l([1, 4]).is_strict_subset(&l([1, 2, 3])));
        assert_eq!(l([1, 2, 5]).minus(&l([2, 3])), l([1, 5]));
        assert_eq!(l([1, 2, 5]).below(3), l([1, 2]));
        assert_eq!(LabelSet::from_mask(0b101, 3), l([1, 3]));
    }

    #[test]
    fn tokens_round_trip() {
        for s in Search::ALL {
            let o: LabelOrder = s.token().parse().unwrap();
            assert_eq!(o.to_string(), s.token());
        }
        let m: LabelOrder = "meet:bfs+dfs".parse().unwrap();
        assert_eq!(m.to_string(), "meet:bfs+dfs");
        assert!("meet:bfs".parse::<LabelOrder>().is_err());
        let err = "xyz".parse::<LabelOrder>().unwrap_err();
        assert!(err.to_string().contains("lbfs"));
    }

    fn all_labels(u: usize) -> Vec<LabelSet> {
        (0..1u64 << u).map(|m| LabelSet::from_mask(m, u)).collect()
    }

    fn assert_strict_partial_order(o: &LabelOrder, u: usize) {
        let labels = all_labels(u);
        for a in &labels {
            assert_eq!(
                o.compare(a, a),
                LabelCmp::Incomparable,
                "{o} reflexive at {a}"
            );
            for b in &labels {
                assert_eq!(o.compare(a, b), o.compare(b, a).reverse(), "{o} asymmetry");
            }
        }
        // transitivity: for each (a, b) with a ≺ b, every c above b is above a
        let above: Vec<Vec<usize>> = labels
            .iter()
            .map(|a| {
                (0..labels.len())
                    .filter(|&j| o.less(a, &labels[j]))
                    .collect()
            })
            .collect();
        for (i, ups) in above.iter().enumerate() {
            for &j in ups {
                for &k in &above[j] {
                    assert!(o.less(&labels[i], &labels[k]), "{o} transitivity");
                }
            }
        }
    }

    #[test]
    fn seven_orders_are_strict_partial_orders() {
        for s in Search::ALL {
            assert_strict_partial_order(&s.into(), 5);
        }
    }

    #[test]
    fn weak_orders_have_transitive_incomparability() {
        let labels = all_labels(4);
        for s in Search::ALL.into_iter().filter(|s| s.is_weak_order()) {
            for a in &labels {
                for b in &labels {
                    for c in &labels {
                        let inc = |x, y| s.compare(x, y) == LabelCmp::Incomparable;
                        if inc(a, b) && inc(b, c) {
                            assert!(inc(a, c), "{s}: {a} ~ {b} ~ {c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn meet_is_idempotent() {
        let labels = all_labels(4);
        for s in Search::ALL {
            let m = LabelOrder::meet(s.into(), s.into());
            for a in &labels {
                for b in &labels {
                    assert_eq!(m.compare(a, b), s.compare(a, b));
                }
            }
        }
    }

    #[test]
    fn meets_are_strict_partial_orders() {
        let m = LabelOrder::meet(Search::Bfs.into(), Search::Dfs.into());
        assert_strict_partial_order(&m, 4);
        assert_strict_partial_order(&LabelOrder::null(), 3);
    }
}
