use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Algebra, AxialAlgebra};
use crate::error::{AlgebraError, ScalarError};
use crate::scalars::{Field, FieldSpec, PrimeField, QuadExt, Rationals};

/// On-disk form of an algebra with its generating axes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub table: Vec<Vec<Vec<Value>>>,
    pub axes: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Value>,
}

impl<F: Field> AxialAlgebra<F> {
    pub fn to_file(&self) -> AlgebraFile {
        let f = self.algebra.ring();
        let vec_json = |v: &[F::Elem]| v.iter().map(|x| f.to_json(x)).collect::<Vec<_>>();
        AlgebraFile {
            field: f.spec(),
            dim: self.algebra.dim(),
            table: self
                .algebra
                .dense_table()
                .iter()
                .map(|row| row.iter().map(|v| vec_json(v)).collect())
                .collect(),
            axes: self.axes.iter().map(|a| vec_json(a)).collect(),
            labels: Some(self.algebra.labels().to_vec()),
            eta: Some(f.to_json(&self.eta)),
        }
    }

    /// Reads a file whose field must be exactly `field`.
    pub fn from_file(field: F, file: &AlgebraFile) -> Result<Self, AlgebraError> {
        if file.field != field.spec() {
            return Err(ScalarError::FieldMismatch(
                file.field.to_string(),
                field.spec().to_string(),
            )
            .into());
        }
        if file.table.len() != file.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: file.dim,
                found: file.table.len(),
            });
        }
        let parse_vec = |v: &[Value]| -> Result<Vec<F::Elem>, AlgebraError> {
            if v.len() != file.dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: file.dim,
                    found: v.len(),
                });
            }
            Ok(v.iter()
                .map(|x| field.from_json(x))
                .collect::<Result<_, _>>()?)
        };
        let table = file
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| parse_vec(v))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut algebra = Algebra::new(field.clone(), table)?;
        if let Some(labels) = &file.labels {
            algebra = algebra.with_labels(labels.clone())?;
        }
        let axes = file
            .axes
            .iter()
            .map(|a| parse_vec(a))
            .collect::<Result<_, _>>()?;
        let eta = match &file.eta {
            Some(v) => field.from_json(v)?,
            None => field.half(),
        };
        Ok(Self { algebra, axes, eta })
    }
}

/// An algebra whose field is only known at run time.
#[derive(Debug, Clone)]
pub enum AnyAlgebra {
    Rational(AxialAlgebra<Rationals>),
    Prime(AxialAlgebra<PrimeField>),
    QuadRational(AxialAlgebra<QuadExt<Rationals>>),
    QuadPrime(AxialAlgebra<QuadExt<PrimeField>>),
}

impl AnyAlgebra {
    pub fn from_file(file: &AlgebraFile) -> Result<Self, AlgebraError> {
        Ok(match &file.field {
            FieldSpec::Rationals => AnyAlgebra::Rational(AxialAlgebra::from_file(Rationals, file)?),
            FieldSpec::Prime { p } => {
                AnyAlgebra::Prime(AxialAlgebra::from_file(PrimeField::new(*p)?, file)?)
            }
            FieldSpec::Quad { base, minpoly } => match base.as_ref() {
                FieldSpec::Rationals => {
                    let q = Rationals;
                    let ext =
                        QuadExt::new(q, q.from_json(&minpoly[0])?, q.from_json(&minpoly[1])?)?;
                    AnyAlgebra::QuadRational(AxialAlgebra::from_file(ext, file)?)
                }
                FieldSpec::Prime { p } => {
                    let f = PrimeField::new(*p)?;
                    let ext =
                        QuadExt::new(f, f.from_json(&minpoly[0])?, f.from_json(&minpoly[1])?)?;
                    AnyAlgebra::QuadPrime(AxialAlgebra::from_file(ext, file)?)
                }
                other => {
                    return Err(ScalarError::Unsupported(format!("extension of {other}")).into())
                }
            },
        })
    }

    pub fn from_json_str(s: &str) -> Result<Self, AlgebraError> {
        let file: AlgebraFile =
            serde_json::from_str(s).map_err(|e| AlgebraError::Format(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> AlgebraFile {
        crate::with_algebra!(self, a => a.to_file())
    }

    pub fn field(&self) -> FieldSpec {
        crate::with_algebra!(self, a => a.algebra.ring().spec())
    }

    pub fn dim(&self) -> usize {
        crate::with_algebra!(self, a => a.algebra.dim())
    }
}

/// Runs `$body` with `$name` bound to the typed algebra inside an [`AnyAlgebra`].
#[macro_export]
macro_rules! with_algebra {
    ($any:expr, $name:ident => $body:expr) => {
        match $any {
            $crate::algebra::AnyAlgebra::Rational($name) => $body,
            $crate::algebra::AnyAlgebra::Prime($name) => $body,
            $crate::algebra::AnyAlgebra::QuadRational($name) => $body,
            $crate::algebra::AnyAlgebra::QuadPrime($name) => $body,
        }
    };
}
