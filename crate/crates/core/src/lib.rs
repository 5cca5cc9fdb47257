pub mod numerics;
pub mod series;
pub mod hypergeom;
pub mod identity;
pub mod catalog;
pub mod cli;
