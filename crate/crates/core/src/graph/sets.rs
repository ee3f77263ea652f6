use fixedbitset::FixedBitSet;

use super::{EdgeId, VertexId};

macro_rules! id_set {
    ($(#[$meta:meta])* $name:ident, $id:ty) => {
        $(#[$meta])*
        #[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
        pub struct $name(FixedBitSet);

        impl $name {
            /// An empty set over the universe `0..universe`.
            pub fn with_universe(universe: usize) -> Self {
                Self(FixedBitSet::with_capacity(universe))
            }

            /// Builds a set from ids; the universe grows to fit the largest id.
            pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = $id>) -> Self {
                let mut set = Self::with_universe(universe);
                for id in ids {
                    set.insert(id);
                }
                set
            }

            pub fn universe(&self) -> usize {
                self.0.len()
            }

            /// Returns `true` if the id was not yet present.
            pub fn insert(&mut self, id: $id) -> bool {
                if id >= self.0.len() {
                    self.0.grow(id + 1);
                }
                !self.0.put(id)
            }

            pub fn remove(&mut self, id: $id) -> bool {
                if id >= self.0.len() {
                    return false;
                }
                let had = self.0.contains(id);
                self.0.set(id, false);
                had
            }

            pub fn contains(&self, id: $id) -> bool {
                self.0.contains(id)
            }

            pub fn len(&self) -> usize {
                self.0.count_ones(..)
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_clear()
            }

            /// Members in ascending order.
            pub fn iter(&self) -> impl Iterator<Item = $id> + '_ {
                self.0.ones()
            }

            /// Canonical (sorted) form.
            pub fn to_vec(&self) -> Vec<$id> {
                self.iter().collect()
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.iter().all(|id| other.contains(id))
            }
        }

        impl FromIterator<$id> for $name {
            fn from_iter<I: IntoIterator<Item = $id>>(iter: I) -> Self {
                Self::from_ids(0, iter)
            }
        }
    };
}

id_set!(
    /// Set of vertex ids with O(1) membership and sorted iteration.
    VertexSet,
    VertexId
);
id_set!(
    /// Set of edge ids with O(1) membership and sorted iteration.
    EdgeSet,
    EdgeId
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_grows_universe_and_iterates_sorted() {
        let mut s = VertexSet::with_universe(2);
        assert!(s.insert(7));
        assert!(s.insert(1));
        assert!(!s.insert(7));
        assert_eq!(s.to_vec(), vec![1, 7]);
        assert_eq!(s.len(), 2);
        assert!(s.remove(7));
        assert!(!s.remove(40));
        assert_eq!(s.to_vec(), vec![1]);
    }
}
