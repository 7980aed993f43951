use std::fmt;

/// One of the five algebra generators.
///
/// The derived ordering `F < H < E < Y < X` is the normal-order precedence:
/// in a normal monomial every `f` stands left of every `h`, and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    F,
    H,
    E,
    Y,
    X,
}

impl Generator {
    pub const ALL: [Generator; 5] = [Generator::F, Generator::H, Generator::E, Generator::Y, Generator::X];

    /// The `sl2` part.
    pub const LIE: [Generator; 3] = [Generator::E, Generator::F, Generator::H];

    /// Eigenvalue of `ad(h)`.
    pub fn weight(self) -> i64 {
        match self {
            Generator::F => -2,
            Generator::H => 0,
            Generator::E => 2,
            Generator::Y => -1,
            Generator::X => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Generator::F => 'f',
            Generator::H => 'h',
            Generator::E => 'e',
            Generator::Y => 'y',
            Generator::X => 'x',
        }
    }

    pub fn from_symbol(c: char) -> Option<Generator> {
        match c {
            'f' => Some(Generator::F),
            'h' => Some(Generator::H),
            'e' => Some(Generator::E),
            'y' => Some(Generator::Y),
            'x' => Some(Generator::X),
            _ => None,
        }
    }

    pub fn is_lie(self) -> bool {
        matches!(self, Generator::E | Generator::F | Generator::H)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}
