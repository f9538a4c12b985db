/// Dense bit set over point identifiers `0..capacity`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdSet {
    words: Vec<u64>,
    capacity: usize,
    len: usize,
}

impl IdSet {
    pub fn new(capacity: usize) -> Self {
        IdSet {
            words: vec![0; capacity.div_ceil(64)],
            capacity,
            len: 0,
        }
    }

    pub fn from_ids(capacity: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut set = IdSet::new(capacity);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn full(capacity: usize) -> Self {
        Self::from_ids(capacity, 0..capacity)
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        id < self.capacity && self.words[id / 64] & (1 << (id % 64)) != 0
    }

    /// Returns `true` if `id` was not present.
    ///
    /// # Panics
    /// If `id >= capacity`.
    #[inline]
    pub fn insert(&mut self, id: usize) -> bool {
        assert!(id < self.capacity, "id {id} out of range {}", self.capacity);
        let (w, bit) = (id / 64, 1u64 << (id % 64));
        if self.words[w] & bit != 0 {
            return false;
        }
        self.words[w] |= bit;
        self.len += 1;
        true
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Every identifier in range is a member.
    #[inline]
    pub fn is_full(&self) -> bool {
        self.len == self.capacity
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.capacity).filter(move |&id| self.contains(id))
    }
}
