//! Coloured independence polynomials of graphs, glueing operators on
//! coloured and partitioned graphs, and exact Lorentzian certification.

pub mod cli;
pub mod error;
pub mod graph;
pub mod independence;
pub mod lorentz;
pub mod poly;
pub mod sequences;

pub use error::{Error, Result};
pub use graph::{ColouredGraph, GlueSpec, Graph, GraphDoc, PartitionedGraph};
pub use independence::IndepSequence;
pub use poly::{Coeff, ExponentVector, MultiPoly, PolyDoc, VarList};
