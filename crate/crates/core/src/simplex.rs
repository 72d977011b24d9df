//! Monotone maps between finite ordinals `[m] = {0 < 1 < ... < m}`.
//!
//! A monotone map `[m] -> [n]` is stored as the vector of its values, so it
//! has length `m + 1` and entries in `0..=n`.

/// Coface `δ_i : [k-1] -> [k]`, the injection skipping `i`.
pub fn coface(k: usize, i: usize) -> Vec<usize> {
    debug_assert!(k >= 1 && i <= k);
    (0..k).map(|j| if j < i { j } else { j + 1 }).collect()
}

/// Codegeneracy `σ_i : [k+1] -> [k]`, the surjection hitting `i` twice.
pub fn codegeneracy(k: usize, i: usize) -> Vec<usize> {
    debug_assert!(i <= k);
    (0..=k + 1).map(|j| if j <= i { j } else { j - 1 }).collect()
}

pub fn identity(k: usize) -> Vec<usize> {
    (0..=k).collect()
}

pub fn is_monotone(map: &[usize], target: usize) -> bool {
    map.windows(2).all(|w| w[0] <= w[1]) && map.iter().all(|&v| v <= target)
}

/// `outer ∘ inner`, where `inner : [a] -> [b]` and `outer : [b] -> [c]`.
pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&v| outer[v]).collect()
}

/// Every monotone map `[m] -> [n]`, in lexicographic order of value vectors.
pub fn monotone_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            go(m, n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, n, 0, &mut Vec::with_capacity(m + 1), &mut out);
    out
}

/// Image-factorisation data of a monotone map `α : [m] -> [n]`.
///
/// `α = ι ∘ π` with `π : [m] -> [r]` surjective and `ι : [r] -> [n]`
/// injective. `missing` lists the elements of `[n]` outside the image in
/// ascending order; `repeats` lists the `j` with `α(j) = α(j+1)`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorisation {
    pub missing: Vec<usize>,
    pub repeats: Vec<usize>,
    pub image_dim: usize,
}

pub fn factorise(map: &[usize], target: usize) -> Factorisation {
    let mut image: Vec<usize> = map.to_vec();
    image.dedup();
    let missing = (0..=target).filter(|v| !image.contains(v)).collect();
    let repeats = (0..map.len().saturating_sub(1)).filter(|&j| map[j] == map[j + 1]).collect();
    Factorisation { missing, repeats, image_dim: image.len() - 1 }
}

/// Bitmask of a subset of `[n]`; ordinals here stay well below 64.
pub type Mask = u64;

pub fn mask_of(elems: &[usize]) -> Mask {
    elems.iter().fold(0, |m, &e| m | (1 << e))
}

pub fn elements(mask: Mask) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1 << i) != 0).collect()
}

pub fn min_elem(mask: Mask) -> usize {
    mask.trailing_zeros() as usize
}

pub fn max_elem(mask: Mask) -> usize {
    63 - mask.leading_zeros() as usize
}

/// Mask of the closed interval `[lo, hi]`.
pub fn interval(lo: usize, hi: usize) -> Mask {
    let upper = if hi >= 63 { u64::MAX } else { (1u64 << (hi + 1)) - 1 };
    upper & !((1u64 << lo) - 1)
}

/// Image of a subset under a monotone map.
pub fn image_mask(map: &[usize], mask: Mask) -> Mask {
    elements(mask).into_iter().fold(0, |m, e| m | (1 << map[e]))
}

/// Reflection `i ↦ n - i` applied to a subset of `[n]`.
pub fn reflect_mask(n: usize, mask: Mask) -> Mask {
    elements(mask).into_iter().fold(0, |m, e| m | (1 << (n - e)))
}
