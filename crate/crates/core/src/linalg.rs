//! Linear algebra over F2 on packed bit vectors.
//!
//! Vectors are `u64` words; bit `i` is the coordinate on the `i`-th basis
//! vector. Every routine here works for dimensions up to 64, which covers
//! both `k` (at most 20 bits) and the quadratic extension (at most 40 bits).

/// A row of an echelon basis together with the combination of input
/// vectors that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Row {
    vec: u64,
    tag: u64,
}

/// Echelon basis with pairwise distinct leading bits.
///
/// Rows are kept sorted by decreasing leading bit, so a single descending
/// pass reduces any vector to the smallest element of its coset.
#[derive(Debug, Clone, Default)]
pub struct BitEchelon {
    rows: Vec<Row>,
}

impl BitEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds the echelon form of the span of `vectors`.
    pub fn from_vectors<I: IntoIterator<Item = u64>>(vectors: I) -> Self {
        let mut e = Self::new();
        for (i, v) in vectors.into_iter().enumerate() {
            e.insert(v, 1u64 << i);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v`, returning the residual and the accumulated tag.
    pub fn reduce_tagged(&self, mut v: u64) -> (u64, u64) {
        let mut tag = 0;
        for row in &self.rows {
            let lead = 63 - row.vec.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= row.vec;
                tag ^= row.tag;
            }
        }
        (v, tag)
    }

    /// Smallest element (as an integer) of the coset `v + span`.
    pub fn reduce(&self, v: u64) -> u64 {
        self.reduce_tagged(v).0
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Inserts `vec` labelled by `tag`.
    ///
    /// Returns `Some(dependency)` when `vec` already lies in the span; the
    /// dependency is the tag combination that sums to zero.
    pub fn insert(&mut self, vec: u64, tag: u64) -> Option<u64> {
        let (r, t) = self.reduce_tagged(vec);
        if r == 0 {
            return Some(t ^ tag);
        }
        let row = Row {
            vec: r,
            tag: t ^ tag,
        };
        let pos = self
            .rows
            .iter()
            .position(|x| x.vec.leading_zeros() > r.leading_zeros())
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, row);
        None
    }

    /// The leading bit positions of the rows.
    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().map(|r| 63 - r.vec.leading_zeros())
    }

    pub fn basis(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.vec).collect()
    }

    /// Enumerates the canonical (reduced) coset representatives of the span
    /// inside the space of `dim`-bit vectors, in increasing order.
    pub fn coset_representatives(&self, dim: u32) -> Vec<u64> {
        let pivot_mask: u64 = self.pivots().fold(0, |acc, p| acc | 1u64 << p);
        let free: Vec<u32> = (0..dim).filter(|i| pivot_mask >> i & 1 == 0).collect();
        (0u64..1u64 << free.len())
            .map(|sel| {
                free.iter()
                    .enumerate()
                    .filter(|(j, _)| sel >> j & 1 == 1)
                    .fold(0u64, |acc, (_, &bit)| acc | 1u64 << bit)
            })
            .collect()
    }
}

/// Kernel of the linear map sending basis vector `i` to `images[i]`.
pub fn kernel(images: &[u64]) -> Vec<u64> {
    let mut e = BitEchelon::new();
    let mut out = Vec::new();
    for (i, &img) in images.iter().enumerate() {
        if let Some(dep) = e.insert(img, 1u64 << i) {
            out.push(dep);
        }
    }
    out
}

/// Some preimage of `target` under the map given by `images`, if any.
pub fn preimage(images: &[u64], target: u64) -> Option<u64> {
    let mut e = BitEchelon::new();
    for (i, &img) in images.iter().enumerate() {
        e.insert(img, 1u64 << i);
    }
    match e.reduce_tagged(target) {
        (0, tag) => Some(tag),
        _ => None,
    }
}

/// All `2^basis.len()` elements of the span of `basis`, indexed by the
/// coordinate mask.
pub fn span_elements(basis: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; 1 << basis.len()];
    for mask in 1usize..out.len() {
        let low = mask.trailing_zeros() as usize;
        out[mask] = out[mask & (mask - 1)] ^ basis[low];
    }
    out
}

/// Extends the independent set `basis` by standard basis vectors
/// (lowest index first) and returns the added complement vectors.
pub fn complement(basis: &[u64], dim: u32) -> Vec<u64> {
    let mut e = BitEchelon::from_vectors(basis.iter().copied());
    let mut out = Vec::new();
    for i in 0..dim {
        if e.insert(1u64 << i, 0).is_none() {
            out.push(1u64 << i);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_deficient_map() {
        // e0 -> 1, e1 -> 1, e2 -> 2 : kernel spanned by e0 + e1
        let k = kernel(&[1, 1, 2]);
        assert_eq!(k, vec![0b011]);
    }

    #[test]
    fn reduce_gives_coset_minimum() {
        let e = BitEchelon::from_vectors([0b1101, 0b0110]);
        for v in 0u64..16 {
            let span = span_elements(&e.basis());
            let min = span.iter().map(|s| s ^ v).min().unwrap();
            assert_eq!(e.reduce(v), min);
        }
    }

    #[test]
    fn coset_representatives_partition_the_space() {
        let e = BitEchelon::from_vectors([0b1010, 0b0011]);
        let reps = e.coset_representatives(4);
        assert_eq!(reps.len(), 4);
        let mut seen: Vec<u64> = (0u64..16).map(|v| e.reduce(v)).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen, reps);
    }

    #[test]
    fn preimage_and_complement() {
        let images = [0b01, 0b11, 0b00];
        let x = preimage(&images, 0b10).unwrap();
        let img = (0..3)
            .filter(|i| x >> i & 1 == 1)
            .fold(0, |a, i| a ^ images[i]);
        assert_eq!(img, 0b10);
        assert_eq!(complement(&[0b011], 3), vec![0b001, 0b100]);
    }
}
