use std::ops::Range;

/// One-hot register layout: part `r` occupies qubits `r*N .. (r+1)*N`, and
/// qubit `r*N + i` carries "part `r` at site `i`". Consistent with the QUBO
/// variable indexing in the model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegisterLayout {
    parts: usize,
    sites: usize,
}

impl RegisterLayout {
    pub fn new(parts: usize, sites: usize) -> Self {
        RegisterLayout { parts, sites }
    }

    pub fn parts(&self) -> usize {
        self.parts
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn num_qubits(&self) -> usize {
        self.parts * self.sites
    }

    #[inline]
    pub fn qubit(&self, part: usize, site: usize) -> usize {
        debug_assert!(part < self.parts && site < self.sites);
        part * self.sites + site
    }

    pub fn register(&self, part: usize) -> Range<usize> {
        part * self.sites..(part + 1) * self.sites
    }

    /// Basis-state index of the one-hot encoding of an assignment.
    pub fn encode(&self, sites: &[usize]) -> usize {
        debug_assert_eq!(sites.len(), self.parts);
        sites
            .iter()
            .enumerate()
            .map(|(r, &i)| 1usize << self.qubit(r, i))
            .sum()
    }

    /// Decodes a basis index into per-part sites if every register is
    /// one-hot, `None` otherwise.
    pub fn decode(&self, index: usize) -> Option<Vec<usize>> {
        let mut sites = Vec::with_capacity(self.parts);
        for r in 0..self.parts {
            let reg = (index >> (r * self.sites)) & ((1usize << self.sites) - 1);
            if reg.count_ones() != 1 {
                return None;
            }
            sites.push(reg.trailing_zeros() as usize);
        }
        Some(sites)
    }
}
