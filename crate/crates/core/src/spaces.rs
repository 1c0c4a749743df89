//! The space `X` as every formula sees it: rational Betti numbers, an `H_1`
//! descriptor, the kind of its fundamental group and its manifold parity.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{ExactInt, GradedPolynomial};
use crate::error::{Error, Result};

/// Finitely generated abelian group `Z^rank + Z/d_1 + ... + Z/d_k` with
/// invariant factors `d_1 | d_2 | ... | d_k`, each at least 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianDescriptor {
    pub rank: usize,
    #[serde(default)]
    pub torsion: Vec<u64>,
}

impl AbelianDescriptor {
    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Normal form of `Z^rank + sum Z/c` for arbitrary cyclic orders `c`.
    /// An order of 0 contributes a free summand; orders of 1 vanish.
    pub fn new(rank: usize, cyclic_orders: &[u64]) -> Self {
        let mut rank = rank;
        // prime -> exponents, one per cyclic summand containing that prime
        let mut by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for &c in cyclic_orders {
            if c == 0 {
                rank += 1;
                continue;
            }
            for (p, e) in factorize(c) {
                match by_prime.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, exps)) => exps.push(e),
                    None => by_prime.push((p, vec![e])),
                }
            }
        }
        let width = by_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; width];
        for (p, mut exps) in by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            for (k, e) in exps.into_iter().enumerate() {
                factors[k] *= p.pow(e);
            }
        }
        factors.reverse();
        Self {
            rank,
            torsion: factors,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.torsion.clone();
        orders.extend(&other.torsion);
        Self::new(self.rank + other.rank, &orders)
    }

    /// `k`-fold direct sum.
    pub fn power(&self, k: usize) -> Self {
        let mut orders = Vec::with_capacity(self.torsion.len() * k);
        for _ in 0..k {
            orders.extend(&self.torsion);
        }
        Self::new(self.rank * k, &orders)
    }
}

impl fmt::Display for AbelianDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// What is known about `pi_1(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pi1Kind {
    Trivial,
    /// `pi_1(X)` is abelian, hence isomorphic to `H_1(X; Z)`.
    Abelian,
    /// Non-abelian or unknown; carried symbolically under this label.
    Opaque(String),
}

impl fmt::Display for Pi1Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pi1Kind::Trivial => write!(f, "trivial"),
            Pi1Kind::Abelian => write!(f, "abelian"),
            Pi1Kind::Opaque(label) => write!(f, "opaque:{label}"),
        }
    }
}

impl std::str::FromStr for Pi1Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(Pi1Kind::Trivial),
            "abelian" => Ok(Pi1Kind::Abelian),
            _ => match s.strip_prefix("opaque") {
                Some(rest) => {
                    let label = rest.strip_prefix(':').unwrap_or(rest).trim();
                    Ok(Pi1Kind::Opaque(if label.is_empty() {
                        "pi1(X)".to_string()
                    } else {
                        label.to_string()
                    }))
                }
                None => Err(Error::Parse(format!("unknown pi1 kind `{s}`"))),
            },
        }
    }
}

/// Dimension parity of a closed manifold model of `X`, or `None` when `X`
/// is not modelled as a manifold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    None,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::None => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceModel {
    pub name: String,
    pub betti: Vec<u64>,
    pub h1: AbelianDescriptor,
    pub pi1: Pi1Kind,
    pub parity: Parity,
    pub connected: bool,
}

impl SpaceModel {
    /// Checked constructor. `connected` is read off `b_0 == 1`.
    pub fn new(
        name: impl Into<String>,
        betti: Vec<u64>,
        h1: AbelianDescriptor,
        pi1: Pi1Kind,
        parity: Parity,
    ) -> Result<Self> {
        if betti.is_empty() {
            return Err(Error::invalid("a space needs at least b_0"));
        }
        let b1 = betti.get(1).copied().unwrap_or(0);
        if h1.rank as u64 != b1 {
            return Err(Error::invalid(format!(
                "H_1 rank {} disagrees with b_1 = {b1}",
                h1.rank
            )));
        }
        if h1 != AbelianDescriptor::new(h1.rank, &h1.torsion) {
            return Err(Error::invalid(format!(
                "H_1 torsion {:?} is not in invariant-factor form",
                h1.torsion
            )));
        }
        if pi1 == Pi1Kind::Trivial && !h1.is_trivial() {
            return Err(Error::invalid("trivial pi_1 forces trivial H_1"));
        }
        Ok(Self {
            name: name.into(),
            connected: betti[0] == 1,
            betti,
            h1,
            pi1,
            parity,
        })
    }

    pub fn euler(&self) -> ExactInt {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let b = ExactInt::from(b);
                if i % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum()
    }

    /// Rational Poincaré polynomial `sum b_i t^i`.
    pub fn poincare(&self) -> GradedPolynomial {
        GradedPolynomial::from_coeffs(self.betti.iter().copied())
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "space `{}` is not connected",
                self.name
            )))
        }
    }

    /// Returns `chi(X)` if `X` is modelled as an even-dimensional manifold.
    pub fn even_manifold_euler(&self) -> Result<ExactInt> {
        match self.parity {
            Parity::Even => Ok(self.euler()),
            p => Err(Error::unsupported(format!(
                "`{}` has parity {p}; this formula needs an even-dimensional manifold",
                self.name
            ))),
        }
    }

    /// Returns `chi(X)` if `X` is modelled as a manifold of either parity.
    pub fn manifold_euler(&self) -> Result<ExactInt> {
        match self.parity {
            Parity::None => Err(Error::unsupported(format!(
                "`{}` is not modelled as a manifold",
                self.name
            ))),
            _ => Ok(self.euler()),
        }
    }
}

/// Looks up a single named preset such as `torus` or `sphere:4`.
pub fn preset(name: &str) -> Result<SpaceModel> {
    let name = name.trim();
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h.trim(), Some(a.trim())),
        None => (name, None),
    };
    let number = |what: &str| -> Result<usize> {
        arg.ok_or_else(|| Error::Parse(format!("`{head}` needs a {what}, e.g. `{head}:2`")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad {what} in `{name}`")))
    };
    match (head, arg) {
        ("point", None) => SpaceModel::new(
            name,
            vec![1],
            AbelianDescriptor::free(0),
            Pi1Kind::Trivial,
            Parity::Even,
        ),
        ("circle", None) => sphere(1),
        ("torus", None) => surface(1).map(|s| SpaceModel {
            name: "torus".into(),
            ..s
        }),
        ("projective_plane", None) => SpaceModel::new(
            name,
            vec![1, 0, 0],
            AbelianDescriptor::new(0, &[2]),
            Pi1Kind::Abelian,
            Parity::Even,
        ),
        ("sphere", Some(_)) => {
            let k = number("dimension")?;
            if k == 0 {
                return Err(Error::invalid(
                    "sphere:0 is disconnected; use sphere:k with k >= 1",
                ));
            }
            sphere(k)
        }
        ("surface", Some(_)) => surface(number("genus")?),
        ("wedge_circles", Some(_)) => wedge_circles(number("count")?),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

fn sphere(k: usize) -> Result<SpaceModel> {
    let mut betti = vec![0; k + 1];
    betti[0] = 1;
    betti[k] += 1;
    let (h1, pi1) = if k == 1 {
        (AbelianDescriptor::free(1), Pi1Kind::Abelian)
    } else {
        (AbelianDescriptor::free(0), Pi1Kind::Trivial)
    };
    let parity = if k.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    };
    let name = if k == 1 {
        "circle".to_string()
    } else {
        format!("sphere:{k}")
    };
    SpaceModel::new(name, betti, h1, pi1, parity)
}

fn surface(genus: usize) -> Result<SpaceModel> {
    let pi1 = match genus {
        0 => Pi1Kind::Trivial,
        1 => Pi1Kind::Abelian,
        g => Pi1Kind::Opaque(format!("surface group of genus {g}")),
    };
    SpaceModel::new(
        format!("surface:{genus}"),
        vec![1, 2 * genus as u64, 1],
        AbelianDescriptor::free(2 * genus),
        pi1,
        Parity::Even,
    )
}

fn wedge_circles(r: usize) -> Result<SpaceModel> {
    let (pi1, parity) = match r {
        0 => (Pi1Kind::Trivial, Parity::Even),
        1 => (Pi1Kind::Abelian, Parity::Odd),
        r => (
            Pi1Kind::Opaque(format!("free group of rank {r}")),
            Parity::None,
        ),
    };
    let betti = if r == 0 { vec![1] } else { vec![1, r as u64] };
    SpaceModel::new(
        format!("wedge_circles:{r}"),
        betti,
        AbelianDescriptor::free(r),
        pi1,
        parity,
    )
}

/// Cartesian product: Betti vectors convolve (rational Künneth), `H_1` adds.
pub fn product(a: &SpaceModel, b: &SpaceModel) -> Result<SpaceModel> {
    a.require_connected()?;
    b.require_connected()?;
    let mut betti = vec![0u64; a.betti.len() + b.betti.len() - 1];
    for (i, x) in a.betti.iter().enumerate() {
        for (j, y) in b.betti.iter().enumerate() {
            betti[i + j] += x * y;
        }
    }
    let pi1 = match (&a.pi1, &b.pi1) {
        (Pi1Kind::Trivial, k) | (k, Pi1Kind::Trivial) => k.clone(),
        (Pi1Kind::Abelian, Pi1Kind::Abelian) => Pi1Kind::Abelian,
        _ => Pi1Kind::Opaque(format!("pi1({}) x pi1({})", a.name, b.name)),
    };
    let parity = match (a.parity, b.parity) {
        (Parity::None, _) | (_, Parity::None) => Parity::None,
        (x, y) if x == y => Parity::Even,
        _ => Parity::Odd,
    };
    SpaceModel::new(
        format!("{} x {}", a.name, b.name),
        betti,
        a.h1.direct_sum(&b.h1),
        pi1,
        parity,
    )
}

/// One-point union: reduced Betti numbers add, `pi_1` is the free product.
pub fn wedge(a: &SpaceModel, b: &SpaceModel) -> Result<SpaceModel> {
    a.require_connected()?;
    b.require_connected()?;
    let len = a.betti.len().max(b.betti.len());
    let mut betti = vec![0u64; len];
    betti[0] = 1;
    for i in 1..len {
        betti[i] = a.betti.get(i).copied().unwrap_or(0) + b.betti.get(i).copied().unwrap_or(0);
    }
    let pi1 = match (&a.pi1, &b.pi1) {
        (Pi1Kind::Trivial, k) | (k, Pi1Kind::Trivial) => k.clone(),
        _ => Pi1Kind::Opaque(format!("pi1({}) * pi1({})", a.name, b.name)),
    };
    SpaceModel::new(
        format!("{} v {}", a.name, b.name),
        betti,
        a.h1.direct_sum(&b.h1),
        pi1,
        Parity::None,
    )
}

/// Parses a space expression: presets joined by ` x ` (product) or ` v `
/// (wedge), evaluated left to right, or an inline JSON object.
pub fn parse_space(text: &str) -> Result<SpaceModel> {
    let text = text.trim();
    if text.starts_with('{') {
        return from_json(text);
    }
    let mut tokens = text.split_whitespace().peekable();
    let first = tokens
        .next()
        .ok_or_else(|| Error::Parse("empty space expression".into()))?;
    let mut acc = preset(first)?;
    while let Some(op) = tokens.next() {
        let rhs = tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("dangling `{op}` in `{text}`")))?;
        let rhs = preset(rhs)?;
        acc = match op {
            "x" | "×" | "*" => product(&acc, &rhs)?,
            "v" | "∨" => wedge(&acc, &rhs)?,
            _ => return Err(Error::Parse(format!("unknown operator `{op}` in `{text}`"))),
        };
    }
    Ok(acc)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceJson {
    #[serde(default)]
    name: Option<String>,
    betti: Vec<u64>,
    #[serde(default)]
    h1: Option<AbelianDescriptor>,
    #[serde(default)]
    pi1: Option<String>,
    #[serde(default)]
    parity: Option<Parity>,
}

/// Reads the custom-space JSON format:
/// `{"betti":[..], "h1":{"rank":r,"torsion":[..]}, "pi1":"trivial|abelian|opaque:<label>", "parity":"even|odd|none"}`.
///
/// `h1` defaults to the free group of rank `b_1`, `pi1` to an opaque label and
/// `parity` to `none`.
pub fn from_json(text: &str) -> Result<SpaceModel> {
    let raw: SpaceJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("space JSON: {e}")))?;
    let b1 = raw.betti.get(1).copied().unwrap_or(0) as usize;
    let h1 = raw.h1.unwrap_or_else(|| AbelianDescriptor::free(b1));
    let h1_normal = AbelianDescriptor::new(h1.rank, &h1.torsion);
    let pi1 = match raw.pi1 {
        Some(s) => s.parse()?,
        None => Pi1Kind::Opaque("pi1(X)".into()),
    };
    SpaceModel::new(
        raw.name.unwrap_or_else(|| "custom".into()),
        raw.betti,
        h1_normal,
        pi1,
        raw.parity.unwrap_or(Parity::None),
    )
}

/// Coarse shape of `X` for the manifold criterion on `B_d(X, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XKind {
    Circle,
    Surface,
    Other,
}

/// Whether `B_d(X, n)` is a topological manifold, for `X` a closed manifold
/// of dimension `m`: exactly when `d` is `n` or `n-1`, or `d > floor(n/2)` and
/// `X` is a surface, or `d = 2` and `X` is the circle.
pub fn is_bd_manifold(m: usize, kind: XKind, n: usize, d: usize) -> Result<bool> {
    if m == 0 || n < 3 || d == 0 || d > n {
        return Err(Error::invalid(format!(
            "manifold criterion needs m >= 1, n >= 3, 1 <= d <= n (got m={m}, n={n}, d={d})"
        )));
    }
    Ok(d == n
        || d + 1 == n
        || (d > n / 2 && kind == XKind::Surface)
        || (d == 2 && kind == XKind::Circle))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_examples() {
        let torus = preset("torus").unwrap();
        assert_eq!(torus.betti, vec![1, 2, 1]);
        assert_eq!(torus.h1, AbelianDescriptor::free(2));
        assert_eq!(torus.parity, Parity::Even);
        assert_eq!(torus.pi1, Pi1Kind::Abelian);

        let s2 = preset("sphere:2").unwrap();
        assert_eq!(s2.betti, vec![1, 0, 1]);
        assert_eq!(s2.euler(), 2.into());

        assert_eq!(preset("surface:2").unwrap().euler(), (-2).into());

        let rp2 = preset("projective_plane").unwrap();
        assert_eq!(rp2.betti, vec![1, 0, 0]);
        assert_eq!(rp2.h1.torsion, vec![2]);
        assert_eq!(rp2.euler(), 1.into());
        assert_eq!(rp2.parity, Parity::Even);

        assert_eq!(preset("circle").unwrap().parity, Parity::Odd);
        assert_eq!(preset("point").unwrap().euler(), 1.into());
        assert_eq!(preset("wedge_circles:3").unwrap().euler(), (-2).into());
    }

    #[test]
    fn preset_errors() {
        assert!(matches!(
            preset("klein_bottle"),
            Err(Error::UnknownPreset(_))
        ));
        assert!(matches!(
            preset("sphere"),
            Err(Error::UnknownPreset(_)) | Err(Error::Parse(_))
        ));
        assert!(matches!(preset("sphere:x"), Err(Error::Parse(_))));
        assert!(preset("sphere:0").is_err());
    }

    #[test]
    fn every_preset_has_h1_rank_equal_to_b1() {
        let names = [
            "point",
            "circle",
            "torus",
            "projective_plane",
            "sphere:1",
            "sphere:2",
            "sphere:5",
            "surface:0",
            "surface:3",
            "wedge_circles:0",
            "wedge_circles:1",
            "wedge_circles:4",
        ];
        for name in names {
            let x = preset(name).unwrap();
            assert_eq!(
                x.h1.rank as u64,
                x.betti.get(1).copied().unwrap_or(0),
                "{name}"
            );
            assert!(x.connected);
            assert_eq!(x.poincare().eval(&(-1).into()), x.euler(), "{name}");
        }
    }

    #[test]
    fn products_and_wedges() {
        let c = preset("circle").unwrap();
        assert_eq!(product(&c, &c).unwrap().betti, vec![1, 2, 1]);
        assert_eq!(product(&c, &c).unwrap().parity, Parity::Even);
        assert_eq!(wedge(&c, &c).unwrap().euler(), (-1).into());
        assert_eq!(wedge(&c, &c).unwrap().parity, Parity::None);
        let s2c = product(&preset("sphere:2").unwrap(), &c).unwrap();
        assert_eq!(s2c.euler(), 0.into());
        assert_eq!(s2c.parity, Parity::Odd);
        assert_eq!(s2c.pi1, Pi1Kind::Abelian);
    }

    #[test]
    fn euler_is_multiplicative_and_wedge_additive() {
        let names = [
            "point",
            "circle",
            "torus",
            "sphere:2",
            "surface:2",
            "wedge_circles:2",
            "projective_plane",
        ];
        for a in names {
            for b in names {
                let (x, y) = (preset(a).unwrap(), preset(b).unwrap());
                assert_eq!(product(&x, &y).unwrap().euler(), x.euler() * y.euler());
                assert_eq!(wedge(&x, &y).unwrap().euler(), x.euler() + y.euler() - 1);
            }
        }
    }

    #[test]
    fn infix_grammar() {
        let x = parse_space("sphere:2 x circle").unwrap();
        assert_eq!(x.betti, vec![1, 1, 1, 1]);
        assert_eq!(x.name, "sphere:2 x circle");
        let w = parse_space("circle v circle").unwrap();
        assert_eq!(w.betti, vec![1, 2]);
        assert!(parse_space("torus x").is_err());
        assert!(parse_space("torus + torus").is_err());
    }

    #[test]
    fn json_spaces() {
        let x = parse_space(
            r#"{"betti":[1,0,0],"h1":{"rank":0,"torsion":[2]},"pi1":"abelian","parity":"even"}"#,
        )
        .unwrap();
        assert_eq!(x.euler(), 1.into());
        assert_eq!(x.h1.torsion, vec![2]);
        let y = from_json(r#"{"betti":[1,2,1],"pi1":"opaque:G"}"#).unwrap();
        assert_eq!(y.pi1, Pi1Kind::Opaque("G".into()));
        assert_eq!(y.parity, Parity::None);
        assert!(from_json(r#"{"betti":[1,2],"h1":{"rank":1}}"#).is_err());
        assert!(from_json(r#"{"betti":[1],"bogus":1}"#).is_err());
        assert!(
            from_json(r#"{"betti":[1],"pi1":"trivial","h1":{"rank":0,"torsion":[3]}}"#).is_err()
        );
    }

    #[test]
    fn abelian_normal_form() {
        assert_eq!(AbelianDescriptor::new(0, &[2, 3]).torsion, vec![6]);
        assert_eq!(AbelianDescriptor::new(0, &[4, 6]).torsion, vec![2, 12]);
        assert_eq!(AbelianDescriptor::new(1, &[1, 0]).rank, 2);
        assert_eq!(AbelianDescriptor::new(0, &[2, 2, 4]).torsion, vec![2, 2, 4]);
        let z2 = AbelianDescriptor::new(0, &[2]);
        assert_eq!(z2.power(3).torsion, vec![2, 2, 2]);
        assert_eq!(AbelianDescriptor::new(2, &[6]).to_string(), "Z^2 + Z/6");
    }

    #[test]
    fn manifold_criterion() {
        assert!(is_bd_manifold(2, XKind::Surface, 4, 3).unwrap());
        assert!(is_bd_manifold(1, XKind::Circle, 7, 2).unwrap());
        assert!(!is_bd_manifold(3, XKind::Other, 4, 2).unwrap());
        assert!(is_bd_manifold(3, XKind::Other, 6, 5).unwrap());
        assert!(!is_bd_manifold(2, XKind::Surface, 6, 3).unwrap());
        assert!(is_bd_manifold(2, XKind::Surface, 7, 4).unwrap());
        assert!(is_bd_manifold(2, XKind::Other, 2, 2).is_err());
    }
}
