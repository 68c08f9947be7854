use std::fmt;

/// One of the three Schnyder colors. Arithmetic on colors is cyclic:
/// `Red.next() == Green`, `Blue.next() == Red`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Green,
    Blue,
}

pub use Color::{Blue, Green, Red};

impl Color {
    pub const ALL: [Color; 3] = [Red, Green, Blue];

    /// 1, 2 or 3.
    pub fn index(self) -> usize {
        match self {
            Red => 1,
            Green => 2,
            Blue => 3,
        }
    }

    pub fn from_index(i: usize) -> Option<Color> {
        match i {
            1 => Some(Red),
            2 => Some(Green),
            3 => Some(Blue),
            _ => None,
        }
    }

    /// `self + k` in the cyclic order red, green, blue.
    pub fn shift(self, k: usize) -> Color {
        Color::ALL[(self.index() - 1 + k) % 3]
    }

    pub fn next(self) -> Color {
        self.shift(1)
    }

    pub fn prev(self) -> Color {
        self.shift(2)
    }

    pub fn name(self) -> &'static str {
        match self {
            Red => "red",
            Green => "green",
            Blue => "blue",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_arithmetic() {
        assert_eq!(Red.next(), Green);
        assert_eq!(Blue.next(), Red);
        assert_eq!(Red.prev(), Blue);
        for c in Color::ALL {
            assert_eq!(c.next().prev(), c);
            assert_eq!(c.shift(3), c);
            assert_eq!(Color::from_index(c.index()), Some(c));
        }
        assert_eq!(Color::from_index(0), None);
    }
}
