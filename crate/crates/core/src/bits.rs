//! Dense vertex sets over `u64` words, sized once per graph.

/// A fixed-capacity bit set holding vertex ids below `capacity`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexBits {
    words: Vec<u64>,
    capacity: usize,
}

impl VertexBits {
    pub fn empty(capacity: usize) -> Self {
        VertexBits {
            words: vec![0; capacity.div_ceil(64)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::empty(capacity);
        for v in 0..capacity {
            s.insert(v as u32);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = u32>>(capacity: usize, iter: I) -> Self {
        let mut s = Self::empty(capacity);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, v: u32) {
        debug_assert!((v as usize) < self.capacity);
        self.words[v as usize / 64] |= 1u64 << (v % 64);
    }

    pub fn remove(&mut self, v: u32) {
        debug_assert!((v as usize) < self.capacity);
        self.words[v as usize / 64] &= !(1u64 << (v % 64));
    }

    pub fn contains(&self, v: u32) -> bool {
        (self.words[v as usize / 64] >> (v % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexBits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexBits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexBits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection_count(&self, other: &VertexBits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &VertexBits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Ascending vertex ids.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some(wi as u32 * 64 + tz)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<u32> {
        self.iter().next()
    }
}
