use std::fmt;
use std::str::FromStr;

use super::parse::parse_poly;
use super::poly::Poly;
use super::weight::WeightSystem;

/// Simply-laced Dynkin type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeType {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdeError {
    #[error("unknown ADE type {0:?}")]
    UnknownType(String),
    #[error("b = {b} out of range 1..={l} for A_{l}")]
    BadB { l: u32, b: u32 },
}

impl AdeType {
    pub fn rank(self) -> u32 {
        match self {
            AdeType::A(l) | AdeType::D(l) => l,
            AdeType::E6 => 6,
            AdeType::E7 => 7,
            AdeType::E8 => 8,
        }
    }

    /// Coxeter number.
    pub fn coxeter(self) -> u32 {
        match self {
            AdeType::A(l) => l + 1,
            AdeType::D(l) => 2 * (l - 1),
            AdeType::E6 => 12,
            AdeType::E7 => 18,
            AdeType::E8 => 30,
        }
    }

    pub fn is_a(self) -> bool {
        matches!(self, AdeType::A(_))
    }

    /// Checks `b` for A_l; other types ignore it.
    pub fn check_b(self, b: u32) -> Result<(), AdeError> {
        if let AdeType::A(l) = self {
            if b < 1 || b > l {
                return Err(AdeError::BadB { l, b });
            }
        }
        Ok(())
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(l) => write!(f, "A{l}"),
            AdeType::D(l) => write!(f, "D{l}"),
            AdeType::E6 => write!(f, "E6"),
            AdeType::E7 => write!(f, "E7"),
            AdeType::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for AdeType {
    type Err = AdeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || AdeError::UnknownType(s.to_string());
        let t = s.trim();
        let (head, rest) = t.split_at(t.char_indices().nth(1).map_or(t.len(), |(i, _)| i));
        let rest = rest.trim_start_matches('_');
        let n: u32 = rest.parse().map_err(|_| err())?;
        match head {
            "A" | "a" if n >= 1 => Ok(AdeType::A(n)),
            "D" | "d" if n >= 4 => Ok(AdeType::D(n)),
            "E" | "e" => match n {
                6 => Ok(AdeType::E6),
                7 => Ok(AdeType::E7),
                8 => Ok(AdeType::E8),
                _ => Err(err()),
            },
            _ => Err(err()),
        }
    }
}

/// The normal form `f` of the ADE singularity and its weight system.
/// `b` only matters for A_l.
pub fn ade_polynomial(t: AdeType, b: u32) -> Result<(Poly, WeightSystem), AdeError> {
    t.check_b(b)?;
    let (text, w) = match t {
        AdeType::A(l) => (format!("x^{}+y*z", l + 1), (1, b, l + 1 - b, l + 1)),
        AdeType::D(l) => (
            format!("x^2*y+y^{}+z^2", l - 1),
            (l - 2, 2, l - 1, 2 * (l - 1)),
        ),
        AdeType::E6 => ("x^3+y^4+z^2".to_string(), (4, 3, 6, 12)),
        AdeType::E7 => ("x^3+x*y^3+z^2".to_string(), (6, 4, 9, 18)),
        AdeType::E8 => ("x^3+y^5+z^2".to_string(), (10, 6, 15, 30)),
    };
    let f = parse_poly(&text).expect("built-in polynomial parses");
    let w = WeightSystem::new(w.0, w.1, w.2, w.3).expect("built-in weights are reduced");
    Ok((f, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::Rat;

    #[test]
    fn d5_data() {
        let (f, w) = ade_polynomial(AdeType::D(5), 1).unwrap();
        assert_eq!(f, parse_poly("x^2*y+y^4+z^2").unwrap());
        assert_eq!((w.a, w.b, w.c, w.h), (3, 2, 4, 8));
    }

    #[test]
    fn every_normal_form_has_degree_two() {
        let mut types = vec![AdeType::E6, AdeType::E7, AdeType::E8];
        types.extend((1..=8).map(AdeType::A));
        types.extend((4..=8).map(AdeType::D));
        for t in types {
            let bs: Vec<u32> = if let AdeType::A(l) = t {
                (1..=l).collect()
            } else {
                vec![1]
            };
            for b in bs {
                let (f, w) = ade_polynomial(t, b).unwrap();
                assert_eq!(f.weighted_degree(&w), Ok(Rat::int(2)), "{t} b={b}");
                assert_eq!(w.h, t.coxeter());
            }
        }
    }

    #[test]
    fn parse_type_names() {
        assert_eq!("E7".parse::<AdeType>(), Ok(AdeType::E7));
        assert_eq!("A_3".parse::<AdeType>(), Ok(AdeType::A(3)));
        assert!("D3".parse::<AdeType>().is_err());
        assert!("F4".parse::<AdeType>().is_err());
        assert!(ade_polynomial(AdeType::A(3), 4).is_err());
    }
}
