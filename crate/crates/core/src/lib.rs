//! Friezes over ℤ[√2] coming from dissections of polygons into triangles and
//! quadrilaterals.
//!
//! [`ring`] holds the exact arithmetic, [`geometry`] the dissections and their
//! enumeration, [`frieze`] the Ptolemy computation of friezes and frieze
//! patterns, [`analysis`] unitarity and tower decompositions, and
//! [`sequences`] the recurrences attached to stacks of quadrilaterals.

pub mod analysis;
pub mod frieze;
pub mod geometry;
pub mod render;
pub mod ring;
pub mod sequences;

pub use frieze::{classify, frieze_from_dissection, verify_frieze, FriezeClass, FriezeTable};
pub use geometry::{enumerate_dissections, enumerate_triangulations, Arc, Dissection, Triangulation};
pub use ring::QuadInt;
