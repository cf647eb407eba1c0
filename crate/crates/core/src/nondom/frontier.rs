use crate::tgraph::Time;

/// Sorted list of mutually non-dominated `(key, value)` pairs where a larger
/// key and a smaller value are better.
///
/// Entries are kept sorted by key; because no entry dominates another, the
/// values are then strictly increasing too. Every search is a binary search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParetoList {
    entries: Vec<(Time, Time)>,
}

impl ParetoList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in ascending key order.
    pub fn entries(&self) -> &[(Time, Time)] {
        &self.entries
    }

    /// Inserts `(key, value)` unless an existing entry is at least as good
    /// in both coordinates, dropping every entry the new one dominates.
    /// Returns whether the pair was inserted.
    pub fn insert(&mut self, key: Time, value: Time) -> bool {
        // the smallest value among keys >= key sits at the first such index
        let i = self.entries.partition_point(|&(k, _)| k < key);
        if self.entries.get(i).is_some_and(|&(_, v)| v <= value) {
            return false;
        }
        // keys <= key with values >= value form a contiguous run ending at j
        let j = i + usize::from(self.entries.get(i).is_some_and(|&(k, _)| k == key));
        let lo = self.entries[..j].partition_point(|&(_, v)| v < value);
        self.entries.splice(lo..j, std::iter::once((key, value)));
        true
    }

    /// Entry with the smallest key `>= bound`; it also has the smallest value
    /// among those keys.
    pub fn first_key_at_least(&self, bound: Time) -> Option<(Time, Time)> {
        let i = self.entries.partition_point(|&(k, _)| k < bound);
        self.entries.get(i).copied()
    }

    /// Entry with the largest value `<= bound`; it also has the largest key
    /// among those values.
    pub fn last_value_at_most(&self, bound: Time) -> Option<(Time, Time)> {
        let i = self.entries.partition_point(|&(_, v)| v <= bound);
        i.checked_sub(1).map(|i| self.entries[i])
    }

    pub(crate) fn from_sorted(entries: Vec<(Time, Time)>) -> Option<Self> {
        let ok = entries.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
        ok.then_some(Self { entries })
    }
}
