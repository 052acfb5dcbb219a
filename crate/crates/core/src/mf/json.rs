use serde::{Deserialize, Serialize};

use super::{GradedMF, MatrixFactorization, PMat, Ring};
use crate::gring::{parse_poly, ParseError, WeightError, WeightSystem};
use crate::rat::Rat;

/// Wire form of a graded matrix factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedMfJson {
    #[serde(rename = "type")]
    pub type_label: String,
    pub f: String,
    #[serde(rename = "W")]
    pub w: [u32; 4],
    pub size: usize,
    pub phi: Vec<Vec<String>>,
    pub psi: Vec<Vec<String>>,
    #[serde(rename = "S")]
    pub s: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("bad polynomial {text:?}: {source}")]
    Poly { text: String, source: ParseError },
    #[error("bad rational {0:?}")]
    Rat(String),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("declared size {size} does not match the data")]
    Size { size: usize },
    #[error(transparent)]
    Serde(#[from] serde_json::Error),
}

fn matrix_strings(m: &PMat) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

fn parse(text: &str) -> Result<crate::gring::Poly, JsonError> {
    parse_poly(text).map_err(|source| JsonError::Poly {
        text: text.to_string(),
        source,
    })
}

fn matrix_from(rows: &[Vec<String>], size: usize) -> Result<PMat, JsonError> {
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(JsonError::Size { size });
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|t| parse(t)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    Ok(if size == 0 {
        PMat::zeros(0, 0)
    } else {
        PMat::from_rows(rows)
    })
}

impl GradedMF {
    pub fn to_json(&self, type_label: &str) -> GradedMfJson {
        let w = self.ring().w;
        GradedMfJson {
            type_label: type_label.to_string(),
            f: self.ring().f.to_string(),
            w: [w.a, w.b, w.c, w.h],
            size: self.size(),
            phi: matrix_strings(self.phi()),
            psi: matrix_strings(self.psi()),
            s: self.s.iter().map(|x| x.to_string()).collect(),
        }
    }

    /// Parses the wire form back; the type label is not interpreted.
    pub fn from_json(j: &GradedMfJson) -> Result<GradedMF, JsonError> {
        let w = WeightSystem::new(j.w[0], j.w[1], j.w[2], j.w[3])?;
        let f = parse(&j.f)?;
        let phi = matrix_from(&j.phi, j.size)?;
        let psi = matrix_from(&j.psi, j.size)?;
        if j.s.len() != 2 * j.size {
            return Err(JsonError::Size { size: j.size });
        }
        let s =
            j.s.iter()
                .map(|t| t.parse::<Rat>().map_err(|_| JsonError::Rat(t.clone())))
                .collect::<Result<_, _>>()?;
        Ok(GradedMF::new(
            MatrixFactorization::new(Ring::new(f, w), phi, psi),
            s,
        ))
    }

    pub fn from_json_str(text: &str) -> Result<GradedMF, JsonError> {
        GradedMF::from_json(&serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gring::{ade_polynomial, AdeType, GaussRat, Poly};

    #[test]
    fn round_trip_with_gaussian_entries() {
        let (f, w) = ade_polynomial(AdeType::A(3), 2).unwrap();
        let half_i = GaussRat::new(Rat::new(1, 2), Rat::int(-1));
        let phi = PMat::from_rows(vec![
            vec![Poly::y().scale(&half_i), Poly::x().pow(2)],
            vec![Poly::x().pow(2), -&Poly::z()],
        ]);
        let psi = PMat::from_rows(vec![
            vec![Poly::z().scale(&half_i.inv()), Poly::x().pow(2)],
            vec![Poly::x().pow(2), -&Poly::y()],
        ]);
        let g = GradedMF::new(
            MatrixFactorization::new(Ring::new(f, w), phi, psi),
            vec![Rat::ZERO, Rat::ZERO, Rat::new(1, 4), Rat::new(-1, 4)],
        );
        let text = serde_json::to_string(&g.to_json("A3")).unwrap();
        assert!(text.contains("\"W\":[1,2,2,4]"));
        assert_eq!(GradedMF::from_json_str(&text).unwrap(), g);
    }

    #[test]
    fn size_mismatch_rejected() {
        let text = r#"{"type":"A1","f":"x^2+y*z","W":[1,1,1,2],"size":2,"phi":[["1"]],"psi":[["x^2+y*z"]],"S":["0","1"]}"#;
        assert!(matches!(
            GradedMF::from_json_str(text),
            Err(JsonError::Size { .. })
        ));
    }
}
