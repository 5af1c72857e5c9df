//! Leontief's stationary input-output model.
//!
//! A deliveries table `n_ij` (goods sent from agent `i` to agent `j`) plus a
//! final-demand vector `y` defines total outputs `q_i = Σ_j n_ij + y_i` and the
//! input-output matrix `P_ij = n_ij / q_j`. Forecasts keep `P` fixed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector, EPS_ZERO};
use crate::linsolve::{self, LinearSystem, SolutionKind};

/// Above this order the total demand matrix is not materialised; each
/// right-hand side is solved by elimination instead.
const INVERSE_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct DeliveriesTable {
    deliveries: Matrix,
    final_demand: Vector,
}

impl DeliveriesTable {
    pub fn new(deliveries: Matrix, final_demand: Vector) -> Result<Self> {
        if !deliveries.is_square() {
            return Err(Error::NotSquare {
                rows: deliveries.rows(),
                cols: deliveries.cols(),
            });
        }
        if deliveries.rows() != final_demand.dim() {
            return Err(Error::dims(format!(
                "{} agents but final demand of dimension {}",
                deliveries.rows(),
                final_demand.dim()
            )));
        }
        if deliveries.data().iter().any(|&v| v < 0.0) {
            return Err(Error::invalid("deliveries must be non-negative"));
        }
        if final_demand.entries().iter().any(|&v| v < 0.0) {
            return Err(Error::invalid("final demand must be non-negative"));
        }
        Ok(DeliveriesTable {
            deliveries,
            final_demand,
        })
    }

    pub fn agents(&self) -> usize {
        self.deliveries.rows()
    }

    pub fn deliveries(&self) -> &Matrix {
        &self.deliveries
    }

    pub fn final_demand(&self) -> &Vector {
        &self.final_demand
    }

    /// Row balances `q_i = Σ_j n_ij + y_i`.
    pub fn total_output(&self) -> Vector {
        let q = (0..self.agents())
            .map(|i| self.deliveries.row(i).iter().sum::<f64>() + self.final_demand.get(i))
            .collect();
        Vector::new(q).expect("non-empty table")
    }
}

/// A vector result whose negative components signal an inconsistent model
/// or an infeasible demand. They are reported, never clamped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Flagged {
    pub values: Vec<f64>,
    pub negative: Vec<usize>,
}

impl Flagged {
    fn new(values: Vec<f64>) -> Self {
        let negative = values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v < -EPS_ZERO)
            .map(|(i, _)| i)
            .collect();
        Flagged { values, negative }
    }

    pub fn has_warning(&self) -> bool {
        !self.negative.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Given {
    /// Total output `q`.
    Output,
    /// Final demand `y`.
    Demand,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LeontiefModel {
    p: Matrix,
    r: Option<Matrix>,
    agent_labels: Option<Vec<String>>,
    resource_labels: Option<Vec<String>>,
}

impl LeontiefModel {
    pub fn new(p: Matrix) -> Result<Self> {
        if !p.is_square() {
            return Err(Error::NotSquare {
                rows: p.rows(),
                cols: p.cols(),
            });
        }
        if p.data().iter().any(|&v| v < 0.0) {
            return Err(Error::invalid("input-output ratios must be non-negative"));
        }
        let model = LeontiefModel {
            p,
            r: None,
            agent_labels: None,
            resource_labels: None,
        };
        let det = linsolve::determinant(&model.technology_matrix())?;
        if det.abs() <= EPS_ZERO {
            return Err(Error::Singular { det: det.abs() });
        }
        Ok(model)
    }

    pub fn with_resources(mut self, r: Matrix) -> Result<Self> {
        if r.cols() != self.agents() {
            return Err(Error::dims(format!(
                "resource matrix has {} columns for {} agents",
                r.cols(),
                self.agents()
            )));
        }
        if r.data().iter().any(|&v| v < 0.0) {
            return Err(Error::invalid("resource requirements must be non-negative"));
        }
        self.r = Some(r);
        Ok(self)
    }

    pub fn with_labels(mut self, agents: Vec<String>, resources: Option<Vec<String>>) -> Result<Self> {
        if agents.len() != self.agents() {
            return Err(Error::dims("one label per agent required"));
        }
        if let (Some(res), Some(r)) = (&resources, &self.r) {
            if res.len() != r.rows() {
                return Err(Error::dims("one label per resource required"));
            }
        }
        self.agent_labels = Some(agents);
        self.resource_labels = resources;
        Ok(self)
    }

    pub fn agents(&self) -> usize {
        self.p.rows()
    }

    pub fn input_output(&self) -> &Matrix {
        &self.p
    }

    pub fn resources(&self) -> Option<&Matrix> {
        self.r.as_ref()
    }

    pub fn agent_labels(&self) -> Option<&[String]> {
        self.agent_labels.as_deref()
    }

    pub fn resource_labels(&self) -> Option<&[String]> {
        self.resource_labels.as_deref()
    }

    /// `𝟏 − P`.
    pub fn technology_matrix(&self) -> Matrix {
        let n = self.agents();
        Matrix::identity(n)
            .and_then(|id| id.sub(&self.p))
            .expect("square model")
    }

    /// `(𝟏 − P)⁻¹`.
    pub fn total_demand_matrix(&self) -> Result<Matrix> {
        linsolve::inverse(&self.technology_matrix())
    }

    /// `y = (𝟏 − P)·q`.
    pub fn final_demand(&self, q: &Vector) -> Result<Flagged> {
        self.check_dim(q)?;
        let y = self.technology_matrix().mul_vec(q)?;
        Ok(Flagged::new(y.into_entries()))
    }

    /// `q = (𝟏 − P)⁻¹·y`.
    pub fn total_output(&self, y: &Vector) -> Result<Flagged> {
        self.check_dim(y)?;
        let q = if self.agents() <= INVERSE_MAX_ORDER {
            self.total_demand_matrix()?.mul_vec(y)?.into_entries()
        } else {
            let sys = LinearSystem::new(self.technology_matrix(), y.clone())?;
            let sol = linsolve::solve(&sys);
            match (sol.kind, sol.particular) {
                (SolutionKind::Unique, Some(x)) => x,
                _ => return Err(Error::Singular { det: 0.0 }),
            }
        };
        Ok(Flagged::new(q))
    }

    /// Resources `v = R·q`, with `q` given directly or derived from `y`.
    pub fn resource_requirements(&self, amounts: &Vector, given: Given) -> Result<Vec<f64>> {
        let r = self
            .r
            .as_ref()
            .ok_or_else(|| Error::invalid("model has no resource matrix"))?;
        let q = match given {
            Given::Output => {
                self.check_dim(amounts)?;
                amounts.clone()
            }
            Given::Demand => Vector::new(self.total_output(amounts)?.values)?,
        };
        Ok(r.mul_vec(&q)?.into_entries())
    }

    /// Applies the reference-period `P` unchanged to a new final demand.
    pub fn forecast(&self, next_demand: &Vector) -> Result<Forecast> {
        let output = self.total_output(next_demand)?;
        let resources = match &self.r {
            Some(r) => Some(r.mul_vec(&Vector::new(output.values.clone())?)?.into_entries()),
            None => None,
        };
        Ok(Forecast { output, resources })
    }

    fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.agents() {
            return Err(Error::dims(format!(
                "vector of dimension {} for {} agents",
                v.dim(),
                self.agents()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Forecast {
    pub output: Flagged,
    pub resources: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableModel {
    pub model: LeontiefModel,
    pub total_output: Vector,
    pub final_demand: Vector,
}

/// Builds `P_ij = n_ij / q_j` from a deliveries table.
pub fn model_from_table(t: &DeliveriesTable) -> Result<TableModel> {
    let q = t.total_output();
    if let Some(j) = q.entries().iter().position(|&v| v <= 0.0) {
        return Err(Error::invalid(format!("agent {j} has zero total output")));
    }
    let n = t.agents();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            data.push(t.deliveries().get(i, j) / q.get(j));
        }
    }
    let model = LeontiefModel::new(Matrix::new(n, n, data)?)?;
    Ok(TableModel {
        model,
        total_output: q,
        final_demand: t.final_demand().clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[f64]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn v(e: &[f64]) -> Vector {
        Vector::new(e.to_vec()).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    fn reference() -> LeontiefModel {
        LeontiefModel::new(m(&[&[0.0, 1.0], &[0.25, 0.0]])).unwrap()
    }

    #[test]
    fn model_from_table_examples() {
        let t = DeliveriesTable::new(m(&[&[0.0, 2.0], &[1.0, 0.0]]), v(&[2.0, 1.0])).unwrap();
        let tm = model_from_table(&t).unwrap();
        assert_eq!(tm.total_output.entries(), &[4.0, 2.0]);
        assert_eq!(tm.model.input_output(), &m(&[&[0.0, 1.0], &[0.25, 0.0]]));

        let t = DeliveriesTable::new(Matrix::zeros(2, 2).unwrap(), v(&[3.0, 5.0])).unwrap();
        let tm = model_from_table(&t).unwrap();
        assert_eq!(tm.model.input_output(), &Matrix::zeros(2, 2).unwrap());
        assert_eq!(tm.total_output.entries(), &[3.0, 5.0]);

        let t = DeliveriesTable::new(Matrix::identity(2).unwrap(), v(&[1.0, 1.0])).unwrap();
        let tm = model_from_table(&t).unwrap();
        assert_eq!(tm.total_output.entries(), &[2.0, 2.0]);
        assert_eq!(tm.model.input_output(), &m(&[&[0.5, 0.0], &[0.0, 0.5]]));
    }

    #[test]
    fn table_errors() {
        assert!(DeliveriesTable::new(m(&[&[-1.0]]), v(&[1.0])).is_err());
        assert!(DeliveriesTable::new(m(&[&[1.0]]), v(&[-1.0])).is_err());
        let t = DeliveriesTable::new(Matrix::zeros(2, 2).unwrap(), v(&[1.0, 0.0])).unwrap();
        assert!(matches!(model_from_table(&t), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn final_demand_examples() {
        let zero = LeontiefModel::new(Matrix::zeros(2, 2).unwrap()).unwrap();
        assert_eq!(zero.final_demand(&v(&[3.0, 5.0])).unwrap().values, vec![3.0, 5.0]);
        assert_eq!(reference().final_demand(&v(&[4.0, 2.0])).unwrap().values, vec![2.0, 1.0]);
        let half = LeontiefModel::new(Matrix::diagonal(&[0.5, 0.5]).unwrap()).unwrap();
        assert_eq!(half.final_demand(&v(&[2.0, 2.0])).unwrap().values, vec![1.0, 1.0]);
        assert!(half.final_demand(&v(&[1.0])).is_err());
    }

    #[test]
    fn final_demand_flags_negative_components() {
        let out = reference().final_demand(&v(&[1.0, 2.0])).unwrap();
        assert_eq!(out.values, vec![-1.0, 1.75]);
        assert_eq!(out.negative, vec![0]);
        assert!(out.has_warning());
    }

    #[test]
    fn total_output_examples() {
        let zero = LeontiefModel::new(Matrix::zeros(2, 2).unwrap()).unwrap();
        assert_eq!(zero.total_output(&v(&[2.0, 1.0])).unwrap().values, vec![2.0, 1.0]);
        assert!(close(&reference().total_output(&v(&[2.0, 1.0])).unwrap().values, &[4.0, 2.0], 1e-12));
        let half = LeontiefModel::new(Matrix::diagonal(&[0.5, 0.5]).unwrap()).unwrap();
        assert!(close(&half.total_output(&v(&[1.0, 1.0])).unwrap().values, &[2.0, 2.0], 1e-12));
    }

    #[test]
    fn singular_technology_matrix_rejected() {
        assert!(matches!(
            LeontiefModel::new(Matrix::identity(2).unwrap()),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn large_models_solve_by_elimination() {
        let n = 10;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + (i + 1) % n] = 0.3;
        }
        let model = LeontiefModel::new(Matrix::new(n, n, data).unwrap()).unwrap();
        let y = Vector::new((1..=n).map(|i| i as f64).collect()).unwrap();
        let q = model.total_output(&y).unwrap();
        let back = model.final_demand(&Vector::new(q.values).unwrap()).unwrap();
        assert!(close(&back.values, y.entries(), 1e-9));
    }

    #[test]
    fn resource_requirements_examples() {
        let id = LeontiefModel::new(Matrix::zeros(2, 2).unwrap())
            .unwrap()
            .with_resources(Matrix::identity(2).unwrap())
            .unwrap();
        assert_eq!(id.resource_requirements(&v(&[4.0, 2.0]), Given::Output).unwrap(), vec![4.0, 2.0]);

        let sum = LeontiefModel::new(Matrix::zeros(2, 2).unwrap())
            .unwrap()
            .with_resources(m(&[&[1.0, 1.0]]))
            .unwrap();
        assert_eq!(sum.resource_requirements(&v(&[2.0, 1.0]), Given::Demand).unwrap(), vec![3.0]);

        let recipe = reference().with_resources(m(&[&[2.0, 0.0], &[0.0, 3.0]])).unwrap();
        assert!(close(
            &recipe.resource_requirements(&v(&[2.0, 1.0]), Given::Demand).unwrap(),
            &[8.0, 6.0],
            1e-12
        ));
        assert!(reference().resource_requirements(&v(&[1.0, 1.0]), Given::Output).is_err());
    }

    #[test]
    fn forecast_examples() {
        let model = reference();
        let f = model.forecast(&v(&[4.0, 2.0])).unwrap();
        assert!(close(&f.output.values, &[8.0, 4.0], 1e-12));
        assert!(f.resources.is_none());
        assert_eq!(model.forecast(&v(&[0.0, 0.0])).unwrap().output.values, vec![0.0, 0.0]);
        assert!(close(&model.forecast(&v(&[2.0, 1.0])).unwrap().output.values, &[4.0, 2.0], 1e-12));
        let with_r = model.with_resources(m(&[&[2.0, 0.0], &[0.0, 3.0]])).unwrap();
        assert!(close(&with_r.forecast(&v(&[2.0, 1.0])).unwrap().resources.unwrap(), &[8.0, 6.0], 1e-12));
    }
}
