//! Permutations, unshuffles and (Koszul) signs.
//!
//! A permutation is stored by its images, 0-based: `images[i] = σ(i)`. Read as
//! an argument arrangement, σ sends `(v_0, .., v_{n-1})` to
//! `(v_σ(0), .., v_σ(n-1))`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from the 1-based one-line notation used in external formats.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        if one_based.contains(&0) {
            return Err(Error::InvalidPermutation(one_based.to_vec()));
        }
        Self::from_images(one_based.iter().map(|i| i - 1).collect())
    }

    pub fn to_one_line(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Parity as `+1` / `-1`.
    pub fn sign(&self) -> i32 {
        let n = self.len();
        let mut inversions = 0usize;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Koszul sign ε(σ; v) defined by `v_0 ⊙ .. ⊙ v_{n-1} = ε · v_σ(0) ⊙ .. ⊙ v_σ(n-1)`,
    /// where `degs[i]` is the degree of `v_i`.
    pub fn koszul_sign(&self, degs: &DegreeVector) -> Result<i32> {
        if degs.len() != self.len() {
            return Err(Error::Length {
                perm: self.len(),
                degs: degs.len(),
            });
        }
        Ok(koszul_sign_of_arrangement(&self.images, degs.as_slice()))
    }
}

/// Bubble-sorts the arrangement back to the identity, picking up
/// `(-1)^{d_a d_b}` for every adjacent swap.
pub(crate) fn koszul_sign_of_arrangement(images: &[usize], degs: &[i32]) -> i32 {
    let mut order = images.to_vec();
    let mut odd_swaps = 0usize;
    let n = order.len();
    for pass in 0..n {
        let mut swapped = false;
        for i in 0..n.saturating_sub(pass + 1) {
            if order[i] > order[i + 1] {
                if degs[order[i]] & 1 != 0 && degs[order[i + 1]] & 1 != 0 {
                    odd_swaps += 1;
                }
                order.swap(i, i + 1);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    if odd_swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_one_line())
    }
}

/// Degrees of the arguments entering a Koszul sign, one per position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DegreeVector(pub Vec<i32>);

impl DegreeVector {
    pub fn new(degs: Vec<i32>) -> Self {
        DegreeVector(degs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    /// `(d_{p(0)}, .., d_{p(n-1)})`.
    pub fn permuted(&self, p: &Permutation) -> DegreeVector {
        DegreeVector(p.images().iter().map(|&i| self.0[i]).collect())
    }
}

/// All `(i_1, .., i_k)`-unshuffles: permutations increasing inside each
/// consecutive block of the given sizes. Zero-size blocks are allowed and
/// contribute nothing; the empty shape yields the identity on 0 letters.
pub fn unshuffles(shape: &[usize]) -> Vec<Permutation> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut block_of = vec![usize::MAX; n];
    assign_blocks(shape, 0, &mut vec![0; shape.len()], &mut block_of, &mut out);
    out
}

/// Unshuffles for a shape that may contain negative parts, which denote an
/// empty index set.
pub fn unshuffles_signed(shape: &[isize]) -> Vec<Permutation> {
    if shape.iter().any(|&p| p < 0) {
        return Vec::new();
    }
    let parts: Vec<usize> = shape.iter().map(|&p| p as usize).collect();
    unshuffles(&parts)
}

// Each letter 0..n is assigned, in order, to a block that still has room;
// letters inside a block then appear in increasing order automatically.
fn assign_blocks(
    shape: &[usize],
    letter: usize,
    filled: &mut Vec<usize>,
    block_of: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
) {
    let n = block_of.len();
    if letter == n {
        let mut images = Vec::with_capacity(n);
        for b in 0..shape.len() {
            images.extend((0..n).filter(|&l| block_of[l] == b));
        }
        out.push(Permutation { images });
        return;
    }
    for b in 0..shape.len() {
        if filled[b] < shape[b] {
            filled[b] += 1;
            block_of[letter] = b;
            assign_blocks(shape, letter + 1, filled, block_of, out);
            filled[b] -= 1;
        }
    }
}

pub fn multinomial(shape: &[usize]) -> u128 {
    let mut total = 0u128;
    let mut acc = 1u128;
    for &part in shape {
        for i in 1..=part as u128 {
            total += 1;
            acc = acc * total / i;
        }
    }
    acc
}

/// Sign `(-1)^k` as an `i32`.
pub fn parity_sign(k: i64) -> i32 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(n: usize) -> Vec<Permutation> {
        unshuffles(&vec![1; n])
    }

    #[test]
    fn unshuffle_examples() {
        let s11 = unshuffles(&[1, 1]);
        assert_eq!(s11.len(), 2);
        assert!(s11.contains(&Permutation::identity(2)));
        assert!(s11.contains(&Permutation::from_one_line(&[2, 1]).unwrap()));

        assert_eq!(unshuffles(&[2, 0]), vec![Permutation::identity(2)]);
        assert_eq!(unshuffles(&[0, 3]), vec![Permutation::identity(3)]);
        assert_eq!(unshuffles(&[]), vec![Permutation::identity(0)]);
    }

    #[test]
    fn shape_211_matches_filtered_s4() {
        // oracle: enumerate S_4 and keep the block-monotone ones
        let blocks = [(0usize, 2usize), (2, 3), (3, 4)];
        let brute: Vec<Permutation> = all_perms(4)
            .into_iter()
            .filter(|p| {
                blocks
                    .iter()
                    .all(|&(a, b)| (a..b - 1).all(|i| p.apply(i) < p.apply(i + 1)))
            })
            .collect();
        assert_eq!(brute.len(), 12);
        let mut got = unshuffles(&[2, 1, 1]);
        let mut want = brute;
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn negative_parts_give_empty_sum() {
        assert!(unshuffles_signed(&[1, 1, -1]).is_empty());
        assert_eq!(unshuffles_signed(&[0, 1, 1]).len(), 2);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!(Permutation::from_one_line(&[2, 1, 3]).unwrap().sign(), -1);
        // 1→2→3→1 has two inversions
        assert_eq!(Permutation::from_one_line(&[2, 3, 1]).unwrap().sign(), 1);
    }

    #[test]
    fn koszul_examples() {
        let swap = Permutation::from_one_line(&[2, 1]).unwrap();
        assert_eq!(swap.koszul_sign(&DegreeVector::new(vec![1, 1])).unwrap(), -1);
        assert_eq!(swap.koszul_sign(&DegreeVector::new(vec![2, 0])).unwrap(), 1);
        let cyc = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        // v1⊙v2⊙v3 = ε v2⊙v3⊙v1: v1 (odd) passes v2 (odd) and v3 (even)
        let degs = DegreeVector::new(vec![1, 1, 0]);
        assert_eq!(cyc.koszul_sign(&degs).unwrap(), -1);
        // the inverse cycle moves the even v3 instead
        assert_eq!(cyc.inverse().koszul_sign(&degs).unwrap(), 1);
        assert!(matches!(
            cyc.koszul_sign(&DegreeVector::new(vec![1])),
            Err(Error::Length { .. })
        ));
    }

    #[test]
    fn koszul_is_multiplicative_exhaustively() {
        for n in 0..=4 {
            let perms = all_perms(n);
            for mask in 0..(1u32 << n) {
                let degs = DegreeVector::new((0..n).map(|i| ((mask >> i) & 1) as i32).collect());
                for p in &perms {
                    for q in &perms {
                        let pq = p.compose(q);
                        let lhs = pq.koszul_sign(&degs).unwrap();
                        let rhs = p.koszul_sign(&degs).unwrap()
                            * q.koszul_sign(&degs.permuted(p)).unwrap();
                        assert_eq!(lhs, rhs, "p={p:?} q={q:?} degs={degs:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[2, 1, 1]), 12);
        assert_eq!(multinomial(&[3, 4]), 35);
        assert_eq!(multinomial(&[]), 1);
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn two_perms() -> impl Strategy<Value = (Permutation, Permutation)> {
        (0usize..=7).prop_flat_map(|n| (perm(n), perm(n)))
    }

    proptest! {
        #[test]
        fn unshuffle_count_is_multinomial(shape in prop::collection::vec(0usize..=3, 0..=4)
            .prop_filter("n ≤ 7", |s| s.iter().sum::<usize>() <= 7)) {
            let all = unshuffles(&shape);
            prop_assert_eq!(all.len() as u128, multinomial(&shape));
            let mut start = 0;
            for &b in &shape {
                for s in &all {
                    prop_assert!((start + 1..start + b).all(|i| s.apply(i - 1) < s.apply(i)));
                }
                start += b;
            }
        }

        #[test]
        fn sign_is_multiplicative((a, b) in two_perms()) {
            prop_assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
        }

        #[test]
        fn koszul_sign_extremes(p in (0usize..=7).prop_flat_map(perm)) {
            let n = p.len();
            prop_assert_eq!(p.koszul_sign(&DegreeVector::new(vec![1; n])).unwrap(), p.sign());
            prop_assert_eq!(p.koszul_sign(&DegreeVector::new(vec![2; n])).unwrap(), 1);
        }
    }
}
