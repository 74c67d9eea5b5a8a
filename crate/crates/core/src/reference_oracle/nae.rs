//! Monotone NAE3SAT instances and exhaustive satisfiability.

use super::OracleError;

/// Largest variable count `nae_bruteforce` accepts.
pub const NAE_VAR_CAP: usize = 24;

/// Monotone NAE3SAT: every clause needs a true and a false variable.
///
/// Variables are 0-based here; the text format is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NaeInstance {
    num_vars: usize,
    clauses: Vec<[usize; 3]>,
}

impl NaeInstance {
    /// Clauses must name three distinct variables below `num_vars`.
    pub fn new(num_vars: usize, clauses: Vec<[usize; 3]>) -> Result<Self, OracleError> {
        for (i, c) in clauses.iter().enumerate() {
            if c.iter().any(|&x| x >= num_vars) || c[0] == c[1] || c[0] == c[2] || c[1] == c[2] {
                return Err(OracleError::BadClause { clause: i, vars: *c, num_vars });
            }
        }
        Ok(NaeInstance { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// True iff every clause sees both truth values.
    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self.clauses.iter().all(|c| {
                let t = c.iter().filter(|&&x| assignment[x]).count();
                t == 1 || t == 2
            })
    }
}

/// First satisfying assignment, scanning bitmasks upward (variable `i` is bit `i`).
pub fn nae_bruteforce(inst: &NaeInstance) -> Result<Option<Vec<bool>>, OracleError> {
    let n = inst.num_vars();
    if n > NAE_VAR_CAP {
        return Err(OracleError::TooManyVariables { vars: n, cap: NAE_VAR_CAP });
    }
    let masks: Vec<[u32; 3]> =
        inst.clauses().iter().map(|c| [1u32 << c[0], 1u32 << c[1], 1u32 << c[2]]).collect();
    for mask in 0u32..(1u32 << n) {
        let ok = masks.iter().all(|m| {
            let t = m.iter().filter(|&&b| mask & b != 0).count();
            t == 1 || t == 2
        });
        if ok {
            return Ok(Some((0..n).map(|i| mask >> i & 1 == 1).collect()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let one = NaeInstance::new(3, vec![[0, 1, 2]]).unwrap();
        let a = nae_bruteforce(&one).unwrap().unwrap();
        assert!(one.is_satisfied_by(&a));
        assert!(NaeInstance::new(1, vec![[0, 0, 0]]).is_err());
        assert!(NaeInstance::new(3, vec![[0, 1, 3]]).is_err());
        let empty = NaeInstance::new(0, vec![]).unwrap();
        assert_eq!(nae_bruteforce(&empty).unwrap(), Some(vec![]));
    }

    #[test]
    fn fano_plane_is_unsatisfiable() {
        let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        let fano = NaeInstance::new(7, lines.to_vec()).unwrap();
        assert_eq!(nae_bruteforce(&fano).unwrap(), None);
    }

    #[test]
    fn cap() {
        let big = NaeInstance::new(25, vec![]).unwrap();
        assert!(matches!(nae_bruteforce(&big), Err(OracleError::TooManyVariables { .. })));
    }
}
