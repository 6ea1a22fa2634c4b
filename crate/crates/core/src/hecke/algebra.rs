use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::group::{WeightFunction, WeylGroupB};
use super::laurent::LaurentPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// The standard basis `{T_w}`.
    T,
    /// The Kazhdan–Lusztig basis `{C_w}`.
    C,
}

/// A finitely supported combination of basis elements, keyed by group index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    pub basis: Basis,
    pub terms: BTreeMap<usize, LaurentPolynomial>,
}

impl HeckeElement {
    pub fn zero(basis: Basis) -> Self {
        HeckeElement { basis, terms: BTreeMap::new() }
    }

    /// The single basis element indexed by `w`.
    pub fn basis_element(basis: Basis, w: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, LaurentPolynomial::one());
        HeckeElement { basis, terms }
    }

    pub fn coeff(&self, w: usize) -> LaurentPolynomial {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: usize, c: &LaurentPolynomial) {
        let entry = self.terms.entry(w).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &HeckeElement, c: &LaurentPolynomial) {
        assert_eq!(self.basis, other.basis);
        for (&w, a) in &other.terms {
            self.add_term(w, &(a * c));
        }
    }
}

/// The Iwahori–Hecke algebra of `W_n` over `ℤ[v, v⁻¹]` with weight `L`.
#[derive(Debug, Clone)]
pub struct HeckeAlgebra {
    group: WeylGroupB,
    weight: WeightFunction,
}

impl HeckeAlgebra {
    pub fn new(n: usize, weight: WeightFunction) -> Self {
        HeckeAlgebra { group: WeylGroupB::new(n), weight }
    }

    pub fn group(&self) -> &WeylGroupB {
        &self.group
    }

    pub fn weight(&self) -> WeightFunction {
        self.weight
    }

    /// `v_s = v^{L(s)}`.
    pub fn v_s(&self, g: usize) -> LaurentPolynomial {
        LaurentPolynomial::monomial(1, self.weight.of_generator(g) as i32)
    }

    /// `v_s - v_s⁻¹`.
    pub fn quadratic_coeff(&self, g: usize) -> LaurentPolynomial {
        let l = self.weight.of_generator(g) as i32;
        LaurentPolynomial::from_terms([(l, 1), (-l, -1)])
    }

    /// `T_s · x`: `T_s T_w = T_{sw}` if `sw > w`, else `T_{sw} + (v_s - v_s⁻¹) T_w`.
    pub fn multiply_ts(&self, g: usize, x: &HeckeElement) -> HeckeElement {
        assert_eq!(x.basis, Basis::T);
        let q = self.quadratic_coeff(g);
        let mut out = HeckeElement::zero(Basis::T);
        for (&w, a) in &x.terms {
            out.add_term(self.group.lmul(g, w), a);
            if self.group.is_left_descent(g, w) {
                out.add_term(w, &(a * &q));
            }
        }
        out
    }

    /// Dense form of [`Self::multiply_ts`], indexed by group element.
    pub(crate) fn multiply_ts_dense(&self, g: usize, x: &[LaurentPolynomial]) -> Vec<LaurentPolynomial> {
        let q = self.quadratic_coeff(g);
        let mut out = alloc::vec![LaurentPolynomial::zero(); x.len()];
        for (w, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            out[self.group.lmul(g, w)] += a;
            if self.group.is_left_descent(g, w) {
                out[w] += &(a * &q);
            }
        }
        out
    }

    /// `T_x · y` for `x = T_{s_1} ⋯ T_{s_k}` given as a word (applied right to left).
    pub fn multiply_word(&self, word: &[usize], y: &HeckeElement) -> HeckeElement {
        word.iter().rev().fold(y.clone(), |acc, &g| self.multiply_ts(g, &acc))
    }

    /// `T_x · T_y`, using a reduced word of `x`.
    pub fn multiply_basis(&self, x: usize, y: usize) -> HeckeElement {
        self.multiply_word(&self.reduced_word(x), &HeckeElement::basis_element(Basis::T, y))
    }

    /// A reduced word `g_1 ⋯ g_k` with `w = s_{g_1} ⋯ s_{g_k}`.
    pub fn reduced_word(&self, mut w: usize) -> Vec<usize> {
        let mut word = Vec::new();
        while self.group.length(w) > 0 {
            let g = (0..self.group.rank())
                .find(|&g| self.group.is_left_descent(g, w))
                .expect("non-identity elements have a left descent");
            word.push(g);
            w = self.group.lmul(g, w);
        }
        word
    }

    /// `bar(T_w)` for every `w`, from `bar(T_w) = T_s⁻¹ bar(T_{sw})` and
    /// `T_s⁻¹ = T_s - (v_s - v_s⁻¹)`.
    pub fn bar_images(&self) -> Vec<HeckeElement> {
        let mut images: Vec<HeckeElement> = Vec::with_capacity(self.group.order());
        for w in 0..self.group.order() {
            let img = match (0..self.group.rank()).find(|&g| self.group.is_left_descent(g, w)) {
                None => HeckeElement::basis_element(Basis::T, w),
                Some(g) => {
                    let rest = &images[self.group.lmul(g, w)];
                    let mut x = self.multiply_ts(g, rest);
                    x.add_scaled(rest, &-&self.quadratic_coeff(g));
                    x
                }
            };
            images.push(img);
        }
        images
    }

    /// The bar involution on a `T`-basis element, given [`Self::bar_images`].
    pub fn bar(&self, images: &[HeckeElement], x: &HeckeElement) -> HeckeElement {
        assert_eq!(x.basis, Basis::T);
        let mut out = HeckeElement::zero(Basis::T);
        for (&w, a) in &x.terms {
            out.add_scaled(&images[w], &a.bar());
        }
        out
    }
}
