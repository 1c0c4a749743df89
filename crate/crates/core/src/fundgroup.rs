//! Fundamental groups of permutation products and fat diagonals, reported as
//! formal products `pi_1(X)^a x H_1(X; Z)^b` rather than presentations.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permgroup::PermutationGroupModel;
use crate::spaces::{AbelianDescriptor, Pi1Kind, SpaceModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Qualifier {
    /// The expression is the group up to isomorphism.
    Exact,
    /// Only abelianness of the group is asserted.
    AbelianOnly,
}

/// `pi_1(X)^pi1_exponent x H_1(X)^h1_exponent`.
///
/// When `pi_1(X)` is abelian (or trivial) it equals `H_1(X)`, and
/// [`GroupExpression::normalized`] folds the `pi_1` factors into `H_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupExpression {
    pub pi1_exponent: usize,
    pub h1_exponent: usize,
    pub qualifier: Qualifier,
}

impl GroupExpression {
    pub fn exact(pi1_exponent: usize, h1_exponent: usize) -> Self {
        Self {
            pi1_exponent,
            h1_exponent,
            qualifier: Qualifier::Exact,
        }
    }

    /// Rewrites `pi_1(X)` as `H_1(X)` when the space says `pi_1` is abelian.
    pub fn normalized(self, space: &SpaceModel) -> Self {
        match space.pi1 {
            Pi1Kind::Trivial | Pi1Kind::Abelian => Self {
                pi1_exponent: 0,
                h1_exponent: self.h1_exponent + self.pi1_exponent,
                qualifier: self.qualifier,
            },
            Pi1Kind::Opaque(_) => self,
        }
    }

    /// The group as an abelian descriptor, when no opaque `pi_1` factor remains.
    pub fn abelian_value(&self, space: &SpaceModel) -> Option<AbelianDescriptor> {
        let folded = self.clone().normalized(space);
        (folded.pi1_exponent == 0).then(|| space.h1.power(folded.h1_exponent))
    }

    pub fn is_trivial_expression(&self) -> bool {
        self.pi1_exponent == 0 && self.h1_exponent == 0
    }

    /// Structured form for JSON output.
    pub fn describe(&self, space: &SpaceModel) -> GroupReport {
        let mut factors = Vec::new();
        if self.pi1_exponent > 0 {
            factors.push(Factor {
                symbol: "Pi1",
                exponent: self.pi1_exponent,
            });
        }
        if self.h1_exponent > 0 {
            factors.push(Factor {
                symbol: "H1",
                exponent: self.h1_exponent,
            });
        }
        GroupReport {
            factors,
            qualifier: self.qualifier,
            text: self.to_string(),
            abelian: self.abelian_value(space).map(|a| a.to_string()),
        }
    }
}

impl fmt::Display for GroupExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = |sym: &str, e: usize| match e {
            1 => sym.to_string(),
            e => format!("{sym}^{e}"),
        };
        let mut parts = Vec::new();
        if self.pi1_exponent > 0 {
            parts.push(power("Pi1(X)", self.pi1_exponent));
        }
        if self.h1_exponent > 0 {
            parts.push(power("H1(X)", self.h1_exponent));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub symbol: &'static str,
    pub exponent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub factors: Vec<Factor>,
    pub qualifier: Qualifier,
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abelian: Option<String>,
}

/// Fixed points and sizes of the non-trivial orbits of a permutation group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStructure {
    pub trivial_orbits: usize,
    pub nontrivial_sizes: Vec<usize>,
}

pub fn orbit_structure(group: &PermutationGroupModel) -> OrbitStructure {
    let mut trivial_orbits = 0;
    let mut nontrivial_sizes = Vec::new();
    for orbit in group.orbits() {
        if orbit.len() == 1 {
            trivial_orbits += 1;
        } else {
            nontrivial_sizes.push(orbit.len());
        }
    }
    OrbitStructure {
        trivial_orbits,
        nontrivial_sizes,
    }
}

/// `pi_1(X^n / G) = pi_1(X)^{#fixed points} x H_1(X)^{#non-trivial orbits}`.
pub fn pi1_gamma_product(
    space: &SpaceModel,
    group: &PermutationGroupModel,
) -> Result<GroupExpression> {
    space.require_connected()?;
    let orbits = orbit_structure(group);
    Ok(
        GroupExpression::exact(orbits.trivial_orbits, orbits.nontrivial_sizes.len())
            .normalized(space),
    )
}

/// `pi_1(B_d(X,n))` for `1 <= d <= n`.
///
/// `2d <= n` gives `H_1(X)`. Otherwise one point carries more than half the
/// multiplicity and `B_d(X,n) = X x SP^{n-d} X`, so the answer is `pi_1(X)`
/// for `d = n`, `pi_1(X)^2` for `d = n-1`, and `pi_1(X) x H_1(X)` otherwise.
pub fn pi1_bd(space: &SpaceModel, n: usize, d: usize) -> Result<GroupExpression> {
    space.require_connected()?;
    if d == 0 || d > n {
        return Err(Error::invalid(format!(
            "B_d needs 1 <= d <= n (got n={n}, d={d})"
        )));
    }
    let expr = if d == n {
        GroupExpression::exact(1, 0)
    } else if 2 * d <= n {
        GroupExpression::exact(0, 1)
    } else if n - d == 1 {
        GroupExpression::exact(2, 0)
    } else {
        GroupExpression::exact(1, 1)
    };
    Ok(expr.normalized(space))
}

/// Whether `pi_1(F_d(X,n) / G)` is guaranteed abelian: `G` is `d`-transitive
/// and `2d <= n`. `false` means no claim, not "non-abelian".
pub fn pi1_bgamma_abelian(group: &PermutationGroupModel, n: usize, d: usize) -> Result<bool> {
    if group.degree() != n {
        return Err(Error::invalid(format!(
            "group has degree {}, expected {n}",
            group.degree()
        )));
    }
    if d == 0 || d > n {
        return Err(Error::invalid(format!(
            "need 1 <= d <= n (got n={n}, d={d})"
        )));
    }
    if 2 * d > n {
        return Ok(false);
    }
    group.is_d_transitive(d)
}
