use super::subset::{subset_members, Subset};
use super::DgError;
use std::fmt;

/// Which ambient DG-operad we are working in: the one resolving the unit
/// over the plain associative base, or the one that also contains a strict
/// arity-0 unit `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    /// Ass-based: no `u` label exists.
    NonUnital,
    /// uAss-based: `u` available, `mu o_j u = id` active in normalization.
    Unital,
}

/// Vertex decoration of a labelled tree.
///
/// `Mu(k)` is the arity-`k` associative corolla (`k >= 2`, degree 0), `U`
/// the strict unit (arity 0, degree 0), `IdPad` an arity-1 identity label
/// used as padding in the canonical form, and `Nu { n, s }` a free graded
/// generator with `s` a nonempty subset of `{1..n}` stored as a bitmask
/// (bit `j-1` set means `j` is a member).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GradedLabel {
    Mu(usize),
    U,
    IdPad,
    Nu { n: usize, s: Subset },
}

impl GradedLabel {
    pub fn nu(n: usize, s: Subset) -> Result<GradedLabel, DgError> {
        if n == 0 || s == 0 || s >> n != 0 {
            return Err(DgError::BadGenerator(format!(
                "nu requires n >= 1 and a nonempty S within {{1..{n}}}"
            )));
        }
        Ok(GradedLabel::Nu { n, s })
    }

    pub fn arity(&self) -> usize {
        match *self {
            GradedLabel::Mu(k) => k,
            GradedLabel::U => 0,
            GradedLabel::IdPad => 1,
            GradedLabel::Nu { n, s } => n - s.count_ones() as usize,
        }
    }

    pub fn degree(&self) -> usize {
        match *self {
            GradedLabel::Nu { n, s } => n + s.count_ones() as usize - 2,
            _ => 0,
        }
    }

    /// Labels of the associative base (everything except the free `nu`s).
    pub fn is_base(&self) -> bool {
        !matches!(self, GradedLabel::Nu { .. })
    }

    pub fn allowed_in(&self, ambient: Ambient) -> bool {
        !(matches!(self, GradedLabel::U) && ambient == Ambient::NonUnital)
    }
}

impl fmt::Display for GradedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GradedLabel::Mu(2) => write!(f, "mu"),
            GradedLabel::Mu(k) => write!(f, "mu^{}", k - 1),
            GradedLabel::U => write!(f, "u"),
            GradedLabel::IdPad => write!(f, "id"),
            GradedLabel::Nu { n, s } => {
                let members: Vec<String> =
                    subset_members(s).map(|x| x.to_string()).collect();
                write!(f, "nu({},{{{}}})", n, members.join(","))
            }
        }
    }
}
