use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the numeric core is generic over: `f32` or `f64`.
///
/// Everything probabilistic in this crate (distributions, special functions,
/// estimators, the optimizer) is written against this trait; concrete `f64`
/// aliases live at the crate root. Stated accuracy targets assume `f64`.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    /// Nearest representable value of an `f64` constant.
    #[inline]
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("finite constant")
    }

    /// Lossless-enough conversion from an integer count.
    #[inline]
    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("count representable")
    }

    #[inline]
    fn f64(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}
