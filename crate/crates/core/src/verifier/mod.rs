//! The checking harness: coefficientwise identity checks, sign and
//! strictness sweeps for the inequality families, parity checks and
//! conjecture evidence. Every check produces a serializable report.

mod conjectures;
mod families;
mod identities;
mod parity;
mod report;

pub use conjectures::{check_conjecture, check_conjecture_with, conj41_series, conj42_series, ConjectureId};
pub use families::{family_value, verify_inequality_family, verify_inequality_family_with, FamilyId, FamilyTables, Strictness};
pub use identities::{verify_identity, IdentityId, IdentityParams, MAX_IDENTITY_K, MAX_IDENTITY_ORDER};
pub use parity::{verify_parity, verify_parity_with, ParityId};
pub use report::{BoundaryMismatch, FamilyReport, Finding, IdentityReport, Mismatch, Outcome};

/// Declares a closed set of identifiers with their canonical spelling.
macro_rules! id_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl std::str::FromStr for $name {
            type Err = crate::error::Error;
            fn from_str(s: &str) -> Result<Self, Self::Err> {
                Self::ALL
                    .iter()
                    .copied()
                    .find(|id| id.as_str().eq_ignore_ascii_case(s))
                    .ok_or_else(|| crate::error::Error::UnknownId(s.to_string()))
            }
        }

        impl serde::Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(self.as_str())
            }
        }
    };
}
pub(crate) use id_enum;
