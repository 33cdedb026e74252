//! Two-district instances from NAE-3-SAT: two central vertices and one
//! vertex per literal, each weighed down by colored leaves.

use super::{Builder, GenerateError};
use crate::districting::{Districting, Instance};

/// Literals are nonzero: `+i` is `x_i`, `-i` its negation, `1 <= i <= num_vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nae3SatInstance {
    pub num_vars: usize,
    pub clauses: Vec<[i64; 3]>,
}

impl Nae3SatInstance {
    fn validate(&self) -> Result<(), GenerateError> {
        for (j, clause) in self.clauses.iter().enumerate() {
            if let Some(&lit) = clause
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > self.num_vars)
            {
                return Err(GenerateError::InvalidSat(format!("clause {} has bad literal {lit}", j + 1)));
            }
            if clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2] {
                return Err(GenerateError::InvalidSat(format!(
                    "clause {} repeats a literal",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// Every clause has a true and a false literal.
    pub fn is_satisfied(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self.clauses.iter().all(|clause| {
                let values = clause.map(|l| assignment[l.unsigned_abs() as usize - 1] == (l > 0));
                values.contains(&true) && values.contains(&false)
            })
    }
}

pub struct NaeReduction {
    pub instance: Instance,
    pub z: usize,
    pub centrals: [usize; 2],
    /// `literals[i - 1] = [v_i, not v_i]`.
    pub literals: Vec<[usize; 2]>,
    /// The leaves hanging from each vertex, by vertex id.
    leaves_of: Vec<Vec<usize>>,
}

// Colors: c = 0, c' = 1, c'' = 2, then c^x_i, then c^y_j.
pub fn reduce_nae3sat(sat: &Nae3SatInstance) -> Result<NaeReduction, GenerateError> {
    sat.validate()?;
    let (n, m) = (sat.num_vars, sat.clauses.len());
    let z = 2 * n * m + 1;
    let var_color = |i: usize| 2 + i;
    let clause_color = |j: usize| 2 + n + j;

    let mut b = Builder::default();
    let centrals = [b.vertex(0), b.vertex(0)];
    for &v in &centrals {
        b.leaves(v, 3 * z, 1);
        b.leaves(v, 3 * z, 2);
    }
    let mut literals = Vec::with_capacity(n);
    for i in 1..=n {
        let pair = [b.vertex(0), b.vertex(0)];
        for &lit in &pair {
            b.edges.push((centrals[0], lit));
            b.edges.push((centrals[1], lit));
            b.leaves(lit, 3 * z - i, var_color(i));
        }
        literals.push(pair);
    }
    for (j, clause) in sat.clauses.iter().enumerate() {
        let j = j + 1;
        for &lit in clause {
            let side = usize::from(lit < 0);
            let v = literals[lit.unsigned_abs() as usize - 1][side];
            b.leaves(v, z + j, clause_color(j));
        }
    }
    let mut leaves_of = vec![Vec::new(); b.colors.len()];
    for &(u, v) in &b.edges {
        // Leaves are always the second endpoint and created after their parent.
        if !centrals.contains(&v) && !literals.iter().any(|p| p.contains(&v)) {
            leaves_of[u].push(v);
        }
    }
    let graph = b.finish(3 + n + m)?;
    Ok(NaeReduction {
        instance: Instance::new(graph, 2, 0)?,
        z,
        centrals,
        literals,
        leaves_of,
    })
}

impl NaeReduction {
    /// `V_1` holds `v*_1`, the literal vertices made true and their leaves.
    pub fn witness(&self, assignment: &[bool]) -> Result<Districting, GenerateError> {
        if assignment.len() != self.literals.len() {
            return Err(GenerateError::InvalidSat(format!(
                "assignment has {} values for {} variables",
                assignment.len(),
                self.literals.len()
            )));
        }
        let mut assignment_vec = vec![1; self.instance.n()];
        let mut first = vec![self.centrals[0]];
        for (pair, &value) in self.literals.iter().zip(assignment) {
            first.push(pair[usize::from(!value)]);
        }
        for &v in &first {
            assignment_vec[v] = 0;
            for &leaf in &self.leaves_of[v] {
                assignment_vec[leaf] = 0;
            }
        }
        Ok(Districting::new(assignment_vec, 2)?)
    }
}
