//! Colors and small color sets.

use core::fmt;

/// A color, numbered from 1.
pub type Color = u32;

/// Largest color a [`ColorSet`] can hold.
pub const MAX_COLOR: Color = 63;

/// A set of colors in `1..=63`, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// The palette `{1, ..., k}`.
    pub fn palette(k: usize) -> ColorSet {
        assert!(k as Color <= MAX_COLOR, "palette of {k} colors exceeds {MAX_COLOR}");
        if k == 0 {
            return ColorSet::EMPTY;
        }
        ColorSet(((1u64 << k) - 1) << 1)
    }

    pub fn from_bits(bits: u64) -> ColorSet {
        ColorSet(bits & !1)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn single(c: Color) -> ColorSet {
        let mut s = ColorSet::EMPTY;
        s.insert(c);
        s
    }

    pub fn contains(self, c: Color) -> bool {
        (1..=MAX_COLOR).contains(&c) && self.0 & (1 << c) != 0
    }

    pub fn insert(&mut self, c: Color) {
        assert!((1..=MAX_COLOR).contains(&c), "color {c} out of range");
        self.0 |= 1 << c;
    }

    pub fn remove(&mut self, c: Color) {
        if (1..=MAX_COLOR).contains(&c) {
            self.0 &= !(1 << c);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest color in the set.
    pub fn first(self) -> Option<Color> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn iter(self) -> ColorIter {
        ColorIter(self.0)
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl IntoIterator for ColorSet {
    type Item = Color;
    type IntoIter = ColorIter;

    fn into_iter(self) -> ColorIter {
        self.iter()
    }
}

/// Ascending iterator over a [`ColorSet`].
pub struct ColorIter(u64);

impl Iterator for ColorIter {
    type Item = Color;

    fn next(&mut self) -> Option<Color> {
        if self.0 == 0 {
            return None;
        }
        let c = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(c)
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
