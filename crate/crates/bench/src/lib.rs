//! Shared inputs for the benchmarks.

use d2lab_core::depth_two::Constructs;
use d2lab_core::hopf::{Bialgebra, HopfSubalgebra};
use d2lab_core::{registry, Extension, Field};

pub const EXTENSIONS: &[&str] = &["group:C4/C2", "group:S3/A3", "scalars:matrix:2"];
pub const PAIRS: &[&str] = &["group:C4/C2", "group:S3/A3", "sweedler4/k[g]"];
pub const WEAK: &[&str] = &["group:C2", "matrix:2", "group:S3", "matrix:3"];

pub fn extension(name: &str) -> Extension {
    registry::extension(name, Field::Rationals).expect("registry extension")
}

pub fn constructs(name: &str) -> Constructs {
    Constructs::build(&extension(name)).expect("constructs")
}

pub fn pair(name: &str) -> (Bialgebra, HopfSubalgebra) {
    registry::hopf_pair(name, Field::Rationals).expect("registry pair")
}

pub fn weak(name: &str) -> Bialgebra {
    registry::hopf(name, Field::Rationals).expect("registry algebra")
}

#[cfg(test)]
mod tests {
    #[test]
    fn inputs_resolve() {
        for name in super::EXTENSIONS {
            super::extension(name);
        }
        for name in super::PAIRS {
            super::pair(name);
        }
        for name in super::WEAK {
            super::weak(name);
        }
    }
}
