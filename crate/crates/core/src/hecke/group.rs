use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::rs::SignedPermutation;

/// `L(t) = b`, `L(s_i) = a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    pub a: u32,
    pub b: u32,
}

impl WeightFunction {
    /// `None` unless both parameters are positive.
    pub fn new(a: u32, b: u32) -> Option<Self> {
        (a > 0 && b > 0).then_some(WeightFunction { a, b })
    }

    pub fn equal() -> Self {
        WeightFunction { a: 1, b: 1 }
    }

    /// `s = b / a` when it is an integer.
    pub fn s_ratio(&self) -> Option<u32> {
        (self.b % self.a == 0).then_some(self.b / self.a)
    }

    /// `L` of generator `g` (0 is `t`, `i ≥ 1` is `s_i`).
    pub fn of_generator(&self, g: usize) -> u32 {
        if g == 0 {
            self.b
        } else {
            self.a
        }
    }
}

/// `ℓ(w) = #{i < j : w(i) > w(j)} + #{i ≤ j : w(i) + w(j) < 0}`.
pub fn length(w: &SignedPermutation) -> u32 {
    let x = w.window();
    let mut l = 0;
    for i in 0..x.len() {
        for j in i..x.len() {
            if i < j && x[i] > x[j] {
                l += 1;
            }
            if x[i] + x[j] < 0 {
                l += 1;
            }
        }
    }
    l
}

/// The generator `t` (`g = 0`, negates the value 1) or `s_g` (swaps the values `g`, `g + 1`).
pub fn generator(n: usize, g: usize) -> SignedPermutation {
    assert!(g < n, "W_{n} has generators 0..{n}");
    let mut w: Vec<i32> = (1..=n as i32).collect();
    if g == 0 {
        w[0] = -1;
    } else {
        w.swap(g - 1, g);
    }
    SignedPermutation::new(w).expect("generators are signed permutations")
}

/// `W_n` with its elements indexed in order of length (then window), and
/// tables for left multiplication by generators and inversion.
#[derive(Debug, Clone)]
pub struct WeylGroupB {
    n: usize,
    elements: Vec<SignedPermutation>,
    index: BTreeMap<SignedPermutation, usize>,
    lengths: Vec<u32>,
    lmul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl WeylGroupB {
    pub fn new(n: usize) -> Self {
        let mut elements = SignedPermutation::all(n);
        elements.sort_by_cached_key(|w| (length(w), w.clone()));
        let index: BTreeMap<SignedPermutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let lengths = elements.iter().map(length).collect();
        let lmul = (0..n)
            .map(|g| {
                let s = generator(n, g);
                elements.iter().map(|w| index[&s.compose(w)]).collect()
            })
            .collect();
        let inverse = elements.iter().map(|w| index[&w.inverse()]).collect();
        WeylGroupB { n, elements, index, lengths, lmul, inverse }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SignedPermutation {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &SignedPermutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, i: usize) -> u32 {
        self.lengths[i]
    }

    /// Index of `s_g · w`.
    pub fn lmul(&self, g: usize, i: usize) -> usize {
        self.lmul[g][i]
    }

    /// Index of `w · s_g`.
    pub fn rmul(&self, g: usize, i: usize) -> usize {
        self.inverse[self.lmul[g][self.inverse[i]]]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Whether `ℓ(s_g w) < ℓ(w)`.
    pub fn is_left_descent(&self, g: usize, i: usize) -> bool {
        self.lengths[self.lmul[g][i]] < self.lengths[i]
    }

    /// `L(w)`: a reduced word of `w` uses `t` once per negative entry of the window.
    pub fn weighted_length(&self, i: usize, weight: WeightFunction) -> u32 {
        let negatives = self.elements[i].window().iter().filter(|&&x| x < 0).count() as u32;
        weight.b * negatives + weight.a * (self.lengths[i] - negatives)
    }
}
