//! The four generators and PBW monomials over them.
//!
//! Normal order is fixed globally as K < H < P < M. Putting M last keeps
//! series in the central element to the right of every monomial, which is
//! where the deformed bracket remainders want to live.

use std::fmt;

pub const GEN_COUNT: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    K,
    H,
    P,
    M,
}

impl Gen {
    pub const ALL: [Gen; GEN_COUNT] = [Gen::K, Gen::H, Gen::P, Gen::M];

    pub fn index(self) -> usize {
        match self {
            Gen::K => 0,
            Gen::H => 1,
            Gen::P => 2,
            Gen::M => 3,
        }
    }

    pub fn from_index(i: usize) -> Gen {
        Gen::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::K => "K",
            Gen::H => "H",
            Gen::P => "P",
            Gen::M => "M",
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A PBW monomial K^a H^b P^c M^d, stored as the exponent 4-tuple.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub [u8; GEN_COUNT]);

impl Word {
    pub const ONE: Word = Word([0; GEN_COUNT]);

    pub fn gen(g: Gen) -> Word {
        let mut w = [0u8; GEN_COUNT];
        w[g.index()] = 1;
        Word(w)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; GEN_COUNT]
    }

    /// Expand to the ordered letter sequence, e.g. K^2 M -> [0, 0, 3].
    pub fn letters(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.degree());
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                out.push(i as u8);
            }
        }
        out
    }

    /// Build from an already-ordered letter sequence.
    pub fn from_sorted_letters(letters: &[u8]) -> Word {
        debug_assert!(letters.windows(2).all(|w| w[0] <= w[1]));
        let mut w = [0u8; GEN_COUNT];
        for &l in letters {
            w[l as usize] += 1;
        }
        Word(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", Gen::from_index(i))?;
            } else {
                write!(f, "{}^{}", Gen::from_index(i), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
