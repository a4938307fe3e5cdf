use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, AlphabetKind};
use crate::enumerate::BasisFamily;
use crate::error::{Error, Result};

/// The group whose relations define a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    Gl,
    Sp,
    OOdd,
    OEven,
    PinOdd,
    PinEven,
}

impl Group {
    pub const ALL: [Group; 6] = [Group::Gl, Group::Sp, Group::OOdd, Group::OEven, Group::PinOdd, Group::PinEven];

    pub fn name(self) -> &'static str {
        match self {
            Group::Gl => "gl",
            Group::Sp => "sp",
            Group::OOdd => "o-odd",
            Group::OEven => "o-even",
            Group::PinOdd => "pin-odd",
            Group::PinEven => "pin-even",
        }
    }

    pub fn alphabet_kind(self) -> AlphabetKind {
        self.family().alphabet_kind()
    }

    pub fn alphabet(self, rank: usize) -> Alphabet {
        Alphabet::new(self.alphabet_kind(), rank)
    }

    pub fn family(self) -> BasisFamily {
        match self {
            Group::Gl => BasisFamily::GlSemistandard,
            Group::Sp => BasisFamily::Symplectic,
            Group::OOdd => BasisFamily::OrthogonalOdd,
            Group::OEven => BasisFamily::OrthogonalEven,
            Group::PinOdd => BasisFamily::PinOdd,
            Group::PinEven => BasisFamily::PinEven,
        }
    }

    /// The group whose module a family describes. Sundaram tableaux index
    /// weights of odd orthogonal modules.
    pub fn of_family(family: BasisFamily) -> Group {
        match family {
            BasisFamily::GlSemistandard => Group::Gl,
            BasisFamily::Symplectic => Group::Sp,
            BasisFamily::OrthogonalOdd | BasisFamily::SundaramOdd => Group::OOdd,
            BasisFamily::OrthogonalEven => Group::OEven,
            BasisFamily::PinOdd => Group::PinOdd,
            BasisFamily::PinEven => Group::PinEven,
        }
    }

    pub fn is_spin(self) -> bool {
        matches!(self, Group::PinOdd | Group::PinEven)
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Group::OOdd | Group::PinOdd)
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown group {s:?}")))
    }
}
