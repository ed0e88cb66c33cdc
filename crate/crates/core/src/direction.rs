use std::fmt;

use crate::error::{Error, Result};

/// Horocycle direction label `j`.
///
/// `Expanding` is `j = 1` (positive Lyapunov exponent), `Contracting` is
/// `j = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Expanding,
    Contracting,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::Expanding, Direction::Contracting];

    pub fn index(self) -> u8 {
        match self {
            Direction::Expanding => 1,
            Direction::Contracting => 2,
        }
    }

    pub fn from_index(j: u8) -> Result<Self> {
        match j {
            1 => Ok(Direction::Expanding),
            2 => Ok(Direction::Contracting),
            other => Err(Error::InvalidDirection(other)),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}
