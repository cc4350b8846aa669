//! Small enumeration helpers shared across modules.

use alloc::vec::Vec;

/// All k-subsets of `items`, in lexicographic order of index sequences.
/// Desk-scale only; callers cap sizes before asking.
pub(crate) fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let n = items.len();
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // rightmost index that can still advance
        let mut pos = k;
        while pos > 0 && idx[pos - 1] == pos - 1 + n - k {
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
        idx[pos - 1] += 1;
        for later in pos..k {
            idx[later] = idx[later - 1] + 1;
        }
    }
}
