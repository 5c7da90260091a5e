//! Labels and fixed arithmetic data for the six genus-zero groups the series
//! engine works over: Gamma0(2), Gamma0(3), Gamma0(4), PSL2(Z), Gamma0(2)+,
//! Gamma0(3)+.
//!
//! Everything here is a compile-time constant: index in PSL2(Z), the
//! (e1, e2, e3) vertex triple, the weight of the distinguished form Z, the
//! hauptmodul name, and a set of generating/stabilizing elements used by the
//! numeric invariance tests. Matrices are stored with integer entries; the
//! normalizing involutions of the plus groups act on the upper half plane
//! through the same Moebius formula after clearing the 1/sqrt(s) scale, which
//! leaves the action unchanged.

use std::fmt;
use std::str::FromStr;

/// One of the six groups, in catalog order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupLabel {
    /// Gamma0(2), hauptmodul t2, triple (inf, 2, inf).
    G02,
    /// Gamma0(3), hauptmodul t3, triple (inf, 3, inf).
    G03,
    /// Gamma0(4), hauptmodul tinf, triple (inf, inf, inf).
    G04,
    /// PSL2(Z), hauptmodul t23 = 1728/j, triple (inf, 2, 3).
    Psl2z,
    /// Gamma0(2)+, hauptmodul t24, triple (inf, 2, 4).
    G02Plus,
    /// Gamma0(3)+, hauptmodul t26, triple (inf, 2, 6).
    G03Plus,
}

pub use GroupLabel::*;

/// Vertex order of an elliptic point; `None` encodes a cusp (order infinity).
pub type VertexOrder = Option<u32>;

impl GroupLabel {
    /// All six groups in catalog order.
    pub const ALL: [GroupLabel; 6] = [G02, G03, G04, Psl2z, G02Plus, G03Plus];

    /// Index of the group in PSL2(Z). For the plus groups this is the index
    /// of the underlying Gamma0(N); the halved covolume is accounted for by
    /// the separate plus flag where it matters (Sturm bounds).
    pub fn index(self) -> u32 {
        match self {
            G02 => 3,
            G03 => 4,
            G04 => 6,
            Psl2z => 1,
            G02Plus => 3,
            G03Plus => 4,
        }
    }

    /// Whether the group is a plus group (Fricke extension of Gamma0(N)).
    pub fn is_plus(self) -> bool {
        matches!(self, G02Plus | G03Plus)
    }

    /// Level N of the underlying Gamma0(N); 1 for PSL2(Z).
    pub fn gamma0_level(self) -> u32 {
        match self {
            G02 => 2,
            G03 => 3,
            G04 => 4,
            Psl2z => 1,
            G02Plus => 2,
            G03Plus => 3,
        }
    }

    /// Weight k of the distinguished weight-k form Z attached to the group.
    pub fn weight(self) -> u32 {
        match self {
            G02 | G03 | G04 => 2,
            Psl2z | G02Plus | G03Plus => 4,
        }
    }

    /// Triangle vertex triple (e1, e2, e3); `None` is a cusp.
    pub fn triple(self) -> [VertexOrder; 3] {
        match self {
            G02 => [None, Some(2), None],
            G03 => [None, Some(3), None],
            G04 => [None, None, None],
            Psl2z => [None, Some(2), Some(3)],
            G02Plus => [None, Some(2), Some(4)],
            G03Plus => [None, Some(2), Some(6)],
        }
    }

    /// Short name of the group's hauptmodul as used by data files and the CLI.
    pub fn hauptmodul_name(self) -> &'static str {
        match self {
            G02 => "t2",
            G03 => "t3",
            G04 => "tinf",
            Psl2z => "t23",
            G02Plus => "t24",
            G03Plus => "t26",
        }
    }

    /// Resolve a hauptmodul name back to its group.
    pub fn from_hauptmodul_name(name: &str) -> Option<GroupLabel> {
        GroupLabel::ALL
            .iter()
            .copied()
            .find(|g| g.hauptmodul_name() == name)
    }

    /// Exponent e1 in the recipe Z = X^{e0} (1-X)^{e1} * sum A_j X^j, as a
    /// (numerator, denominator) pair. e0 is zero for every group and is kept
    /// in the per-series catalog only.
    pub fn recipe_e1(self) -> (i64, i64) {
        match self {
            G02 => (1, 2),
            G03 => (2, 3),
            G04 | Psl2z | G02Plus | G03Plus => (0, 1),
        }
    }

    /// s such that the group contains the normalizing element
    /// gamma_s ~ (0, -1; s, 0), mapping tau to -1/(s tau). This is the
    /// element behind the Z-transformation lemma; only PSL2(Z) and the two
    /// plus groups contain one.
    pub fn normalizer_s(self) -> Option<u32> {
        match self {
            Psl2z => Some(1),
            G02Plus => Some(2),
            G03Plus => Some(3),
            _ => None,
        }
    }

    /// Generating/stabilizing elements used by the invariance tests, as
    /// integer matrices (a, b; c, d) acting by tau -> (a tau + b)/(c tau + d).
    ///
    /// The plus-group involutions are scaled by sqrt(s) to clear
    /// denominators; Moebius action is projective, so the scaled matrix acts
    /// identically. Every list ends with T = (1, 1; 0, 1).
    pub fn generators(self) -> &'static [[i64; 4]] {
        match self {
            G02 => &[[1, -1, 2, -1], [-1, 0, 2, -1], [1, 1, 0, 1]],
            G03 => &[[-1, 1, -3, 2], [-1, 0, 3, -1], [1, 1, 0, 1]],
            G04 => &[[1, 0, 4, 1], [1, -1, 4, -3], [1, 1, 0, 1]],
            Psl2z => &[[0, -1, 1, 0], [0, -1, 1, 1], [1, 1, 0, 1]],
            G02Plus => &[[0, -1, 2, 0], [0, -1, 2, -2], [1, 1, 0, 1]],
            G03Plus => &[[0, -1, 3, 0], [0, -1, 3, -3], [1, 1, 0, 1]],
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            G02 => "G02",
            G03 => "G03",
            G04 => "G04",
            Psl2z => "PSL2Z",
            G02Plus => "G02plus",
            G03Plus => "G03plus",
        };
        f.write_str(s)
    }
}

/// Error for an unrecognized group name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownGroup(pub String);

impl fmt::Display for UnknownGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown group label: {}", self.0)
    }
}

impl std::error::Error for UnknownGroup {}

impl FromStr for GroupLabel {
    type Err = UnknownGroup;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "G02" | "g02" => Ok(G02),
            "G03" | "g03" => Ok(G03),
            "G04" | "g04" => Ok(G04),
            "PSL2Z" | "psl2z" | "PSL2(Z)" => Ok(Psl2z),
            "G02plus" | "g02plus" | "G02+" => Ok(G02Plus),
            "G03plus" | "g03plus" | "G03+" => Ok(G03Plus),
            other => Err(UnknownGroup(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_and_weights_match_catalog() {
        let idx: Vec<u32> = GroupLabel::ALL.iter().map(|g| g.index()).collect();
        assert_eq!(idx, [3, 4, 6, 1, 3, 4]);
        let k: Vec<u32> = GroupLabel::ALL.iter().map(|g| g.weight()).collect();
        assert_eq!(k, [2, 2, 2, 4, 4, 4]);
    }

    #[test]
    fn triples_match_catalog() {
        assert_eq!(G02.triple(), [None, Some(2), None]);
        assert_eq!(G03.triple(), [None, Some(3), None]);
        assert_eq!(G04.triple(), [None, None, None]);
        assert_eq!(Psl2z.triple(), [None, Some(2), Some(3)]);
        assert_eq!(G02Plus.triple(), [None, Some(2), Some(4)]);
        assert_eq!(G03Plus.triple(), [None, Some(2), Some(6)]);
    }

    #[test]
    fn generators_are_nonsingular_and_upper_half_plane_safe() {
        for g in GroupLabel::ALL {
            for m in g.generators() {
                let det = m[0] * m[3] - m[1] * m[2];
                assert!(det > 0, "{g}: generator {m:?} must have positive det");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for g in GroupLabel::ALL {
            assert_eq!(g.to_string().parse::<GroupLabel>().unwrap(), g);
            assert_eq!(
                GroupLabel::from_hauptmodul_name(g.hauptmodul_name()),
                Some(g)
            );
        }
    }
}
