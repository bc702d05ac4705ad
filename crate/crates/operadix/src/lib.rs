//! Exact symbolic engine for non-symmetric operads on planted planar
//! trees: free operads and coproducts over an associative base, the
//! object-level corolla operads with corks, graded/differential-graded
//! elements over the integers, and the deformation-retraction machinery
//! collapsing the unit-resolution filtration.

pub mod deformation;
pub mod dg;
pub mod grpd;
pub mod set_operad;
pub mod tree;
