use std::fmt;
use std::str::FromStr;

/// What a gadget vertex stands for. Indices are 1-based; `u`, `v` are
/// source vertices by their rank `g` in the source order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// Source vertex `g`, printed `g(3)`.
    Orig(usize),
    /// Bipartition side `X` (`bx(i)`) or `Y` (`by(i)`).
    Side { y: bool, index: usize },
    X,
    M(usize),
    /// `t(j,k)`: in H1 the k-th vertex of clause `j`; in H2 the vertex of clause `j` for variable `k`.
    T(usize, usize),
    S(usize, usize),
    W { level: usize, u: usize, v: usize, j: usize },
    Z { level: usize, u: usize, v: usize, j: usize },
    /// The single closing vertex of a level.
    ZLevel(usize),
    /// Switching-row copy `x_k^i(u,v,j)`, printed `x(k,i,u,v,j)`.
    Switch { k: usize, level: usize, u: usize, v: usize, j: usize },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Orig(g) => write!(f, "g({g})"),
            Role::Side { y, index } => write!(f, "b{}({index})", if y { 'y' } else { 'x' }),
            Role::X => f.write_str("x"),
            Role::M(i) => write!(f, "m({i})"),
            Role::T(j, k) => write!(f, "t({j},{k})"),
            Role::S(i, j) => write!(f, "s({i},{j})"),
            Role::W { level, u, v, j } => write!(f, "w({level},{u},{v},{j})"),
            Role::Z { level, u, v, j } => write!(f, "z({level},{u},{v},{j})"),
            Role::ZLevel(i) => write!(f, "z({i})"),
            Role::Switch { k, level, u, v, j } => write!(f, "x({k},{level},{u},{v},{j})"),
        }
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("unrecognized role {s:?}");
        if s == "x" {
            return Ok(Role::X);
        }
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let a: Vec<usize> = args
            .split(',')
            .map(|t| t.parse::<usize>().ok().filter(|&x| x >= 1))
            .collect::<Option<_>>()
            .ok_or_else(bad)?;
        Ok(match (name, a.as_slice()) {
            ("g", &[g]) => Role::Orig(g),
            ("bx", &[i]) => Role::Side { y: false, index: i },
            ("by", &[i]) => Role::Side { y: true, index: i },
            ("m", &[i]) => Role::M(i),
            ("t", &[j, k]) => Role::T(j, k),
            ("s", &[i, j]) => Role::S(i, j),
            ("w", &[level, u, v, j]) => Role::W { level, u, v, j },
            ("z", &[level, u, v, j]) => Role::Z { level, u, v, j },
            ("z", &[i]) => Role::ZLevel(i),
            ("x", &[k, level, u, v, j]) => Role::Switch { k, level, u, v, j },
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let all = [
            Role::Orig(3),
            Role::Side { y: true, index: 2 },
            Role::X,
            Role::M(1),
            Role::T(2, 3),
            Role::S(4, 1),
            Role::W { level: 2, u: 1, v: 3, j: 5 },
            Role::Z { level: 2, u: 3, v: 1, j: 5 },
            Role::ZLevel(7),
            Role::Switch { k: 1, level: 2, u: 1, v: 2, j: 3 },
        ];
        for r in all {
            assert_eq!(r.to_string().parse::<Role>(), Ok(r));
        }
        for bad in ["m(0)", "m(1,2)", "q(1)", "x(1)", "w(1,2,3)", "g(a)"] {
            assert!(bad.parse::<Role>().is_err(), "{bad}");
        }
    }
}
