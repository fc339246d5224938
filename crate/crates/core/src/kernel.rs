//! Word-sized forcing kernel for oriented graphs with at most 64 vertices.
//!
//! Computes the same closure as [`crate::forcing::closure`] but on `u64`
//! vertex masks, without recording the trace. The exact solvers call this
//! millions of times.

use crate::graph::OrientedGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskDigraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl MaskDigraph {
    pub fn new(d: &OrientedGraph) -> Self {
        let out = d.out_masks();
        Self::from_out_masks(out)
    }

    pub fn from_out_masks(out: Vec<u64>) -> Self {
        let n = out.len();
        assert!(n <= 64);
        let mut inn = vec![0u64; n];
        for (u, &m) in out.iter().enumerate() {
            let mut rest = m;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                inn[v] |= 1 << u;
            }
        }
        MaskDigraph { n, out, inn }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn out(&self, v: usize) -> u64 {
        self.out[v]
    }

    /// In-degree-zero vertices.
    pub fn sources(&self) -> u64 {
        (0..self.n)
            .filter(|&v| self.inn[v] == 0)
            .fold(0, |m, v| m | 1 << v)
    }

    /// Weakly connected components as masks, ordered by lowest vertex.
    pub fn weak_components(&self) -> Vec<u64> {
        let mut left = self.full();
        let mut comps = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.out[u] | self.inn[u];
                }
                frontier = next & !comp;
                comp |= next;
            }
            comps.push(comp);
            left &= !comp;
        }
        comps
    }

    /// Minimum out-degree over the vertices of `within`.
    pub fn min_out_degree(&self, within: u64) -> usize {
        let mut rest = within;
        let mut best = usize::MAX;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            best = best.min(self.out[v].count_ones() as usize);
        }
        if best == usize::MAX {
            0
        } else {
            best
        }
    }

    /// Final colored set of the k-forcing process started from `s`.
    #[inline]
    pub fn closure(&self, s: u64, k: u32) -> u64 {
        let mut colored = s;
        // colored vertices that still have a non-colored out-neighbour
        let mut live = 0u64;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.out[v] & !colored != 0 {
                live |= 1 << v;
            }
        }
        loop {
            let mut forced = 0u64;
            let mut done = 0u64;
            let mut it = live;
            while it != 0 {
                let u = it.trailing_zeros() as usize;
                it &= it - 1;
                let unc = self.out[u] & !colored;
                if unc == 0 {
                    done |= 1 << u;
                } else if unc.count_ones() <= k {
                    forced |= unc;
                    done |= 1 << u;
                }
            }
            if forced == 0 {
                return colored;
            }
            colored |= forced;
            live &= !done;
            let mut f = forced;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                if self.out[v] & !colored != 0 {
                    live |= 1 << v;
                }
            }
        }
    }

    #[inline]
    pub fn forces(&self, s: u64, k: u32, target: u64) -> bool {
        self.closure(s, k) & target == target
    }
}

pub fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Calls `f` on every `r`-subset of `items` (as the OR of the chosen masks),
/// in lexicographic order of the chosen positions. Stops early when `f`
/// returns `true`; the return value says whether it did.
pub fn for_each_combination(items: &[u64], r: usize, mut f: impl FnMut(u64) -> bool) -> bool {
    let len = items.len();
    if r > len {
        return false;
    }
    if r == 0 {
        return f(0);
    }
    let mut idx: Vec<usize> = (0..r).collect();
    // prefix[i] = OR of items[idx[0..i]]
    let mut prefix = vec![0u64; r + 1];
    for i in 0..r {
        prefix[i + 1] = prefix[i] | items[idx[i]];
    }
    loop {
        if f(prefix[r]) {
            return true;
        }
        // advance the rightmost index that can move
        let mut i = r;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < len - r + i {
                break;
            }
        }
        idx[i] += 1;
        prefix[i + 1] = prefix[i] | items[idx[i]];
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
            prefix[j + 1] = prefix[j] | items[idx[j]];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_in_lex_order() {
        let items = [1u64, 2, 4, 8];
        let mut seen = Vec::new();
        for_each_combination(&items, 2, |m| {
            seen.push(m);
            false
        });
        assert_eq!(seen, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        let mut count = 0;
        for_each_combination(&items, 0, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
        assert!(!for_each_combination(&items, 5, |_| true));
    }

    #[test]
    fn closure_on_out_star() {
        // centre 0 -> 1..=4
        let d = MaskDigraph::from_out_masks(vec![0b11110, 0, 0, 0, 0]);
        assert_eq!(d.closure(0b1, 2), 0b1);
        assert_eq!(d.closure(0b111, 2), 0b11111);
        assert_eq!(d.closure(0b1, 4), 0b11111);
        assert_eq!(d.sources(), 1);
        assert_eq!(d.weak_components(), vec![0b11111]);
    }
}
