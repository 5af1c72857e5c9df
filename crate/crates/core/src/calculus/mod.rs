//! Functions of one real variable: parsing, evaluation, symbolic
//! derivatives, elasticities, roots, curve reports and integrals.

mod diff;
mod expr;
mod integrate;
mod parse;
mod poly;
mod report;
mod roots;

pub use diff::{
    differentiate, elasticity, elasticity_expr, nth_derivative, second_elasticity, tangent_line, ElasticityClass,
};
pub use expr::Expr;
pub use integrate::{adaptive_simpson, antiderivative, integrate, singular_points, QUADRATURE_TOL};
pub use parse::parse;
pub use poly::{poly_divide, quadratic_roots, Polynomial, Rational};
pub use report::{
    curve_report, Asymptote, Curvature, CurveReport, Extremum, ExtremumKind, FunctionClass, Piece, Point, Symmetry,
    Trend,
};
pub use roots::{bisect_bracket, roots, DEFAULT_TOL, SCAN_CELLS};

pub fn eval(e: &Expr, x: f64) -> crate::Result<f64> {
    e.eval(x)
}
