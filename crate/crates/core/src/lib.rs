//! Exact evaluation of the deframed gl and so weight systems on trivalent
//! diagrams, the Brauer algebra, the standard diagram families, and the rank
//! computations built on them.

pub mod algebra;
pub mod brauer;
pub mod diagram;
pub mod families;
pub mod lab;
pub mod weight;

pub use algebra::{PairedPoly, Poly, Projection, Rational};
pub use brauer::{BrElement, BrMatching};
pub use diagram::{ChordDiagram, Diagram, DiagramBuilder, DiagramCombo, RawDiagram, Violation};
pub use families::FamilySpec;
pub use lab::{DimReport, EnumGuard, RankReport, Suite, SuiteReport};
pub use weight::{evaluate, Evaluator, WeightFlavor};
