pub mod builders;
pub mod diagramc;
pub mod exactq;
pub mod graphvals;
pub mod qcombinat;
pub mod shadowcore;
pub mod skein;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/quantum.md")]
    mod quantum {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/shadows.md")]
    mod shadows {}
    #[doc = include_str!("../../../book/src/builders.md")]
    mod builders {}
    #[doc = include_str!("../../../book/src/ribbon.md")]
    mod ribbon {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/skein.md")]
    mod skein {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
