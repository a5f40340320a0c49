use crate::error::{Error, Result};

/// A composition of `n`: an ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// The partial-sum set `{α_1, α_1+α_2, …}` as a bitmask over `[n-1]`
    /// (position `i` ↔ bit `i - 1`).
    pub fn descent_mask(&self) -> u64 {
        let mut acc = 0usize;
        let mut mask = 0u64;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p as usize;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// Inverse of [`Composition::descent_mask`] for compositions of `n >= 1`.
    pub fn from_descent_mask(mask: u64, n: usize) -> Self {
        let mut parts = Vec::new();
        let mut last = 0;
        for i in 1..n {
            if mask & (1 << (i - 1)) != 0 {
                parts.push((i - last) as u32);
                last = i;
            }
        }
        if n > 0 {
            parts.push((n - last) as u32);
        }
        Composition(parts)
    }
}
