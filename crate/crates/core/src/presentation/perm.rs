//! Permutations of {1, 2, 3}. Composition is right to left:
//! `(p∘q)(i) = p(q(i))`, so `(12)∘(23) = (123)`.

/// `Perm3(images)` sends `i` to `images[i]` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Perm3(pub [u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);
    pub const T12: Perm3 = Perm3([1, 0, 2]);
    pub const T23: Perm3 = Perm3([0, 2, 1]);
    pub const T31: Perm3 = Perm3([2, 1, 0]);
    pub const C123: Perm3 = Perm3([1, 2, 0]);
    pub const C132: Perm3 = Perm3([2, 0, 1]);

    /// The fixed enumeration `1, (12), (23), (31), (123), (132)`.
    pub const ALL: [Perm3; 6] = [Self::IDENTITY, Self::T12, Self::T23, Self::T31, Self::C123, Self::C132];

    pub fn compose(self, other: Perm3) -> Perm3 {
        Perm3(other.0.map(|i| self.0[i as usize]))
    }

    pub fn inverse(self) -> Perm3 {
        let mut out = [0u8; 3];
        for (i, &p) in self.0.iter().enumerate() {
            out[p as usize] = i as u8;
        }
        Perm3(out)
    }

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&p| p == self).expect("every permutation is enumerated")
    }

    pub fn sign(self) -> i64 {
        match self.index() {
            0 | 4 | 5 => 1,
            _ => -1,
        }
    }

    /// Cycle notation without separators: `1`, `12`, `123`, …
    pub fn name(self) -> &'static str {
        ["1", "12", "23", "31", "123", "132"][self.index()]
    }
}
