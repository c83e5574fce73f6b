//! The guide's chapters, compiled so their snippets run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/grossnumbers.md")]
pub mod grossnumbers {}

#[doc = include_str!("../../../book/src/elementary.md")]
pub mod elementary {}

#[doc = include_str!("../../../book/src/expressions.md")]
pub mod expressions {}

#[doc = include_str!("../../../book/src/differentiation.md")]
pub mod differentiation {}

#[doc = include_str!("../../../book/src/baselines.md")]
pub mod baselines {}
