//! The scalar ring under every polynomial in the crate.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed};

/// An exact integral-domain scalar usable as a coefficient of `q`.
///
/// Everything the crate computes only needs ring operations, a sign test and
/// conversion from small machine counts, so machine integers, `BigInt` and
/// rationals all qualify. The canonical choice is `BigInt`; the machine
/// widths exist for quick cross-checks and overflow silently past their range.
pub trait Coefficient:
    Clone + Debug + Display + PartialEq + Signed + FromPrimitive + Send + Sync + 'static
{
    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("count fits in coefficient type")
    }

    fn from_i64_exact(n: i64) -> Self {
        Self::from_i64(n).expect("value fits in coefficient type")
    }
}

impl<T> Coefficient for T where
    T: Clone + Debug + Display + PartialEq + Signed + FromPrimitive + Send + Sync + 'static
{
}
